// Command-line driver for the convergence studies.
//
//   pdbc_studies delta-conv --case cubic --out results
//   pdbc_studies m-conv --delta 0.125
//   pdbc_studies edm-correction --json
//   pdbc_studies steep-gradient --eps 0.01 --profiles
//   pdbc_studies solve --case quartic --method vhm --n 16 --dump-matrix
//
// Exit status: 0 success, 1 invalid configuration / arguments / I/O, 2 numerical failure.

#include "pdbc/pdbc.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Common {
    std::string out = ".";
    bool profiles = false;
    bool json = false;
};

pdbc::ManufacturedCase parse_case(const std::string& name, std::optional<double> eps)
{
    if (name == "linear") return pdbc::ManufacturedCase::linear();
    if (name == "quadratic") return pdbc::ManufacturedCase::quadratic();
    if (name == "cubic") return pdbc::ManufacturedCase::cubic();
    if (name == "quartic") return pdbc::ManufacturedCase::quartic();
    if (name == "quartic-pd") return pdbc::ManufacturedCase::quartic_pd();
    if (name == "exponential") {
        if (!eps) {
            throw pdbc::ArgumentError("the exponential case needs --eps");
        }
        return pdbc::ManufacturedCase::exponential(*eps);
    }
    throw pdbc::ArgumentError("unknown case '" + name + "'");
}

// Short text for file name fragments (0.125 -> "0.125").
std::string tag(double value)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", value);
    return buf;
}

json table_json(const pdbc::StudyTable& t)
{
    json j;
    j["study"] = t.study;
    j["columns"] = t.header;
    j["rows"] = json::array();
    for (const auto& row : t.rows) {
        json r;
        r[t.header[0]] = row.key;
        for (std::size_t c = 0; c < row.values.size(); ++c) {
            r[t.header[c + 1]] = row.values[c];
        }
        j["rows"].push_back(r);
    }
    j["observed_rates"] = json::object();
    for (const auto& [col, rates] : pdbc::table_rates(t)) {
        json list = json::array();
        for (const auto& r : rates) {
            list.push_back(r ? json(*r) : json("exact"));
        }
        j["observed_rates"][col] = list;
    }
    return j;
}

void emit(const pdbc::StudyTable& t, const std::string& stem, const Common& common)
{
    const fs::path dir(common.out);
    const fs::path csv = dir / (stem + ".csv");
    pdbc::write_text_file(csv, pdbc::to_csv(t));
    std::cout << "wrote " << csv.string() << '\n';
    if (common.json) {
        const fs::path js = dir / (stem + ".json");
        pdbc::write_text_file(js, table_json(t).dump(2) + "\n");
        std::cout << "wrote " << js.string() << '\n';
    }
    for (const auto& prof : t.profiles) {
        pdbc::write_text_file(dir / "profiles" / (stem + "_" + prof.name + ".csv"), pdbc::profile_csv(prof));
    }
    if (!t.profiles.empty()) {
        std::cout << "wrote " << t.profiles.size() << " profiles to " << (dir / "profiles").string() << '\n';
    }
    std::cout << pdbc::to_csv(t);
}

void add_common(CLI::App* sub, Common& common)
{
    sub->add_option("--out", common.out, "Output directory")->capture_default_str();
    sub->add_flag("--profiles", common.profiles, "Also write nodal x,u,u_exact,error files");
    sub->add_flag("--json", common.json, "Also write a JSON summary with observed rates");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Peridynamic boundary treatment convergence studies"};
    app.require_subcommand(1);
    Common common;

    // delta-conv
    auto* delta_conv = app.add_subcommand("delta-conv", "Max relative error as delta = 2h -> 0");
    std::string dc_case = "quadratic";
    std::vector<int> dc_n{4, 8, 16, 32};
    bool dc_corrections = false;
    bool dc_interior = false;
    delta_conv->add_option("--case", dc_case, "quadratic | cubic | quartic")->capture_default_str();
    delta_conv->add_option("--n", dc_n, "Numbers of intervals")->delimiter(',')->capture_default_str();
    delta_conv->add_flag("--corrections", dc_corrections, "Add EDM_I and EDM_II columns");
    delta_conv->add_flag("--interior", dc_interior, "Measure the relative error on nodes 1..n-1 only");
    add_common(delta_conv, common);

    // m-conv
    auto* m_conv = app.add_subcommand("m-conv", "VHM error at fixed delta as h = delta/m -> 0");
    std::vector<double> mc_delta{0.25, 0.125};
    std::vector<int> mc_m{2, 4, 8};
    m_conv->add_option("--delta", mc_delta, "Horizons")->delimiter(',')->capture_default_str();
    m_conv->add_option("--m", mc_m, "Horizon ratios delta/h")->delimiter(',')->capture_default_str();
    add_common(m_conv, common);

    // edm-correction
    auto* edm_corr = app.add_subcommand("edm-correction", "EDM with and without boundary corrections, quartic case");
    std::vector<int> ec_n{16, 32, 64, 128};
    edm_corr->add_option("--n", ec_n, "Numbers of intervals")->delimiter(',')->capture_default_str();
    add_common(edm_corr, common);

    // steep-gradient
    auto* steep = app.add_subcommand("steep-gradient", "Max absolute error for the exponential boundary layer");
    double sg_eps = 0.1;
    std::vector<int> sg_n;
    steep->add_option("--eps", sg_eps, "Boundary layer width, 0 < eps < 1")->capture_default_str();
    steep->add_option("--n", sg_n, "Numbers of intervals (default depends on eps)")->delimiter(',');
    add_common(steep, common);

    // solve
    auto* solve = app.add_subcommand("solve", "Single run with nodal output");
    std::string so_case = "quadratic";
    std::string so_method = "vhm";
    int so_n = 8;
    int so_m = 2;
    std::optional<double> so_eps;
    std::optional<double> so_right;
    bool so_dump = false;
    solve->add_option("--case", so_case, "linear | quadratic | cubic | quartic | quartic-pd | exponential")
        ->capture_default_str();
    solve->add_option("--method", so_method, "llem | edm-full | edm | edm-i | edm-ii | vhm")->capture_default_str();
    solve->add_option("--n", so_n, "Number of intervals")->capture_default_str();
    solve->add_option("--m", so_m, "Horizon ratio delta/h")->capture_default_str();
    solve->add_option("--eps", so_eps, "Boundary layer width for the exponential case");
    solve->add_option("--dirichlet-right", so_right, "Prescribe u(1) instead of the traction");
    solve->add_flag("--dump-matrix", so_dump, "Write the dense system matrix as CSV");
    add_common(solve, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*delta_conv) {
            pdbc::DeltaConvergenceOptions opt;
            opt.manufactured = parse_case(dc_case, std::nullopt);
            opt.n_list = dc_n;
            opt.with_corrections = dc_corrections;
            opt.range = dc_interior ? pdbc::ErrorRange::Interior : pdbc::ErrorRange::AllNodes;
            opt.profiles = common.profiles;
            emit(pdbc::run_delta_convergence(opt), "delta_conv_" + dc_case, common);
        } else if (*m_conv) {
            for (double d : mc_delta) {
                pdbc::MConvergenceOptions opt;
                opt.delta = d;
                opt.m_list = mc_m;
                opt.profiles = common.profiles;
                emit(pdbc::run_m_convergence(opt), "m_conv_delta_" + tag(d), common);
            }
        } else if (*edm_corr) {
            pdbc::EdmCorrectionOptions opt;
            opt.n_list = ec_n;
            opt.profiles = common.profiles;
            emit(pdbc::run_edm_correction(opt), "edm_correction", common);
        } else if (*steep) {
            pdbc::SteepGradientOptions opt;
            opt.epsilon = sg_eps;
            if (!sg_n.empty()) {
                opt.n_list = sg_n;
            } else if (auto defaults = pdbc::default_steep_gradient_n(sg_eps)) {
                opt.n_list = *defaults;
            } else {
                throw pdbc::ArgumentError("no default n list for eps = " + tag(sg_eps) + "; pass --n");
            }
            opt.profiles = common.profiles;
            emit(pdbc::run_steep_gradient(opt), "steep_gradient_eps_" + tag(sg_eps), common);
        } else if (*solve) {
            const auto kind = pdbc::parse_method(so_method);
            if (!kind) {
                throw pdbc::ArgumentError("unknown method '" + so_method + "'");
            }
            pdbc::MethodSpec spec{*kind};
            if (so_right) {
                spec.right_bc = pdbc::RightBoundary::dirichlet(*so_right);
            }
            const pdbc::BarProblem p(parse_case(so_case, so_eps));
            const pdbc::Discretization disc(so_n, so_m);
            const auto res = pdbc::run_solve_once(p, disc, spec);

            const std::string stem = "solve_" + so_case + "_" + res.profile.name;
            const fs::path dir(common.out);
            pdbc::write_text_file(dir / (stem + ".csv"), pdbc::profile_csv(res.profile));
            std::cout << "wrote " << (dir / (stem + ".csv")).string() << '\n';
            if (so_dump) {
                pdbc::write_text_file(dir / (stem + "_matrix.csv"), pdbc::matrix_csv(res.system));
                std::cout << "wrote " << (dir / (stem + "_matrix.csv")).string() << '\n';
            }
            const std::string rel =
                res.report.max_relative ? pdbc::format_double(*res.report.max_relative) : std::string("n/a");
            std::cout << "max_relative_error," << rel << '\n'
                      << "max_absolute_error," << pdbc::format_double(res.report.max_absolute) << '\n';
            if (common.json) {
                json j;
                j["study"] = "solve";
                j["case"] = so_case;
                j["method"] = std::string(pdbc::to_string(*kind));
                j["n"] = so_n;
                j["m"] = so_m;
                j["max_relative"] = res.report.max_relative ? json(*res.report.max_relative) : json(nullptr);
                j["max_absolute"] = res.report.max_absolute;
                pdbc::write_text_file(dir / (stem + ".json"), j.dump(2) + "\n");
            }
        }
    } catch (const pdbc::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 2;
    } catch (const pdbc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
