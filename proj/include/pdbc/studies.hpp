#pragma once

// Convergence studies: each runner solves a family of configurations and
// returns a table of error norms plus optional nodal profiles. Nothing here
// touches the file system; see to_csv / profile_csv for serialisation.

#include "pdbc/analysis.hpp"
#include "pdbc/errors.hpp"
#include "pdbc/format.hpp"
#include "pdbc/method.hpp"
#include "pdbc/problem.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pdbc {

struct StudyRow {
    int key = 0;                 ///< n, or m for the m-convergence study
    double h = 0.0;
    std::vector<double> values;  ///< columns after the key column
};

/// Nodal data of one run: x, computed u, exact u on the physical nodes.
struct Profile {
    std::string name;
    std::vector<double> x;
    std::vector<double> u;
    std::vector<double> u_exact;
};

struct StudyTable {
    std::string study;
    std::vector<std::string> header;   ///< including the key column
    std::vector<std::string> error_columns;  ///< subset of header that holds errors
    std::vector<StudyRow> rows;
    std::vector<Profile> profiles;
};

enum class ErrorRange {
    AllNodes,   ///< i = 1..n
    Interior,   ///< i = 1..n-1
};

struct DeltaConvergenceOptions {
    ManufacturedCase manufactured = ManufacturedCase::quadratic();
    std::vector<int> n_list{4, 8, 16, 32};
    bool with_corrections = false;
    ErrorRange range = ErrorRange::AllNodes;
    bool profiles = false;
};

struct MConvergenceOptions {
    double delta = 0.25;
    std::vector<int> m_list{2, 4, 8};
    bool profiles = false;
};

struct EdmCorrectionOptions {
    std::vector<int> n_list{16, 32, 64, 128};
    bool profiles = false;
};

struct SteepGradientOptions {
    double epsilon = 0.1;
    std::vector<int> n_list{32, 64, 128, 256, 512};
    bool profiles = false;
};

namespace detail {

inline void require_refinement_list(const std::vector<int>& values, const char* what)
{
    if (values.empty()) {
        throw ArgumentError(std::string(what) + " list is empty");
    }
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k] < 1) {
            throw ArgumentError(std::string(what) + " values must be positive");
        }
        // Rates are log2 ratios of successive errors, so every step must halve h.
        if (k > 0 && values[k] != 2 * values[k - 1]) {
            throw ArgumentError(std::string(what) + " list must double from one entry to the next");
        }
    }
}

inline Profile make_profile(std::string name, const SolutionVector& sol, const BarProblem& p)
{
    const ErrorReport r = error_report(sol, p);
    Profile prof{std::move(name), {}, {}, {}};
    for (const auto& pe : r.pointwise) {
        const double exact = exact_solution(p, pe.x);
        prof.x.push_back(pe.x);
        prof.u_exact.push_back(exact);
        prof.u.push_back(exact - pe.error);
    }
    return prof;
}

inline double relative_of(const ErrorReport& r, ErrorRange range)
{
    const auto& v = (range == ErrorRange::Interior) ? r.max_relative_interior : r.max_relative;
    return v.value_or(std::numeric_limits<double>::quiet_NaN());
}

inline std::string run_name(MethodKind kind, int n, int m)
{
    return std::string(to_string(kind)) + "_n" + std::to_string(n) + "_m" + std::to_string(m);
}

// Runs one configuration, re-raising failures with the configuration attached.
template <class Fn>
auto with_context(const std::string& label, Fn&& fn)
{
    try {
        return fn();
    } catch (const SingularMatrixError& e) {
        throw SingularMatrixError(e.row(), label + ": " + e.what());
    } catch (const NumericalError& e) {
        throw NumericalError(label + ": " + e.what());
    } catch (const ConfigurationError& e) {
        throw ConfigurationError(label + ": " + e.what());
    } catch (const ArgumentError& e) {
        throw ArgumentError(label + ": " + e.what());
    }
}

}  // namespace detail

/// Max relative errors of LLEM, EDM and VHM (optionally EDM-I, EDM-II) with m = 2.
inline StudyTable run_delta_convergence(const DeltaConvergenceOptions& opt)
{
    const CaseKind kind = opt.manufactured.kind();
    if (kind != CaseKind::Quadratic && kind != CaseKind::Cubic && kind != CaseKind::Quartic) {
        throw ConfigurationError("delta convergence is defined for the quadratic, cubic and quartic cases");
    }
    detail::require_refinement_list(opt.n_list, "n");

    std::vector<MethodKind> methods{MethodKind::LLEM, MethodKind::EdmReduced, MethodKind::VHM};
    if (opt.with_corrections) {
        methods.push_back(MethodKind::EdmI);
        methods.push_back(MethodKind::EdmII);
    }

    StudyTable t;
    t.study = "delta-convergence-" + std::string(to_string(kind));
    t.header = {"n", "delta"};
    for (MethodKind mk : methods) {
        t.header.emplace_back(to_string(mk));
        t.error_columns.emplace_back(to_string(mk));
    }

    const BarProblem p(opt.manufactured);
    for (int n : opt.n_list) {
        const Discretization disc(n, 2);
        StudyRow row{n, disc.h(), {disc.delta()}};
        for (MethodKind mk : methods) {
            const std::string label = std::string(to_string(kind)) + " " + detail::run_name(mk, n, 2);
            const SolutionVector sol = detail::with_context(label, [&] { return solve(p, disc, MethodSpec{mk}); });
            row.values.push_back(detail::relative_of(error_report(sol, p), opt.range));
            if (opt.profiles) {
                t.profiles.push_back(detail::make_profile(detail::run_name(mk, n, 2), sol, p));
            }
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

/// Number of intervals for horizon delta and ratio m; delta * n must equal m.
inline int intervals_for(double delta, int m)
{
    if (!(delta > 0.0 && delta <= 0.5)) {
        throw ConfigurationError("horizon must satisfy 0 < delta <= 1/2");
    }
    const double exact = static_cast<double>(m) / delta;
    const long n = std::lround(exact);
    if (n < 1 || std::abs(exact - static_cast<double>(n)) > 1e-9 * exact) {
        throw ConfigurationError("m / delta is not an integer number of intervals");
    }
    return static_cast<int>(n);
}

/// VHM with the peridynamic-consistent quartic load at fixed delta, h = delta / m.
inline StudyTable run_m_convergence(const MConvergenceOptions& opt)
{
    detail::require_refinement_list(opt.m_list, "m");
    StudyTable t;
    t.study = "m-convergence";
    t.header = {"m", "h", "VHM_error"};
    t.error_columns = {"VHM_error"};

    const BarProblem p(ManufacturedCase::quartic_pd());
    for (int m : opt.m_list) {
        const int n = intervals_for(opt.delta, m);
        const Discretization disc(n, m);
        const std::string label = "quartic-pd " + detail::run_name(MethodKind::VHM, n, m);
        const SolutionVector sol =
            detail::with_context(label, [&] { return solve(p, disc, MethodSpec{MethodKind::VHM}); });
        t.rows.push_back(StudyRow{m, disc.h(), {disc.h(), detail::relative_of(error_report(sol, p), ErrorRange::AllNodes)}});
        if (opt.profiles) {
            t.profiles.push_back(detail::make_profile(detail::run_name(MethodKind::VHM, n, m), sol, p));
        }
    }
    return t;
}

/// Quartic case with EDM and its two corrections.
inline StudyTable run_edm_correction(const EdmCorrectionOptions& opt)
{
    detail::require_refinement_list(opt.n_list, "n");
    StudyTable t;
    t.study = "edm-correction";
    t.header = {"n", "delta", "EDM", "EDM_I", "EDM_II"};
    t.error_columns = {"EDM", "EDM_I", "EDM_II"};

    const BarProblem p(ManufacturedCase::quartic());
    for (int n : opt.n_list) {
        const Discretization disc(n, 2);
        StudyRow row{n, disc.h(), {disc.delta()}};
        for (MethodKind mk : {MethodKind::EdmReduced, MethodKind::EdmI, MethodKind::EdmII}) {
            const std::string label = "quartic " + detail::run_name(mk, n, 2);
            const SolutionVector sol = detail::with_context(label, [&] { return solve(p, disc, MethodSpec{mk}); });
            row.values.push_back(detail::relative_of(error_report(sol, p), ErrorRange::AllNodes));
            if (opt.profiles) {
                t.profiles.push_back(detail::make_profile(detail::run_name(mk, n, 2), sol, p));
            }
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

/// Default refinement lists for the steep-gradient study.
inline std::optional<std::vector<int>> default_steep_gradient_n(double epsilon)
{
    if (epsilon == 0.1) {
        return std::vector<int>{32, 64, 128, 256, 512};
    }
    if (epsilon == 0.01) {
        return std::vector<int>{512, 1024, 2048, 4096, 8192};
    }
    return std::nullopt;
}

/// Max absolute errors of LLEM and VHM (m = 2) for the exponential boundary layer.
inline StudyTable run_steep_gradient(const SteepGradientOptions& opt)
{
    detail::require_refinement_list(opt.n_list, "n");
    StudyTable t;
    t.study = "steep-gradient";
    t.header = {"n", "LLEM", "VHM"};
    t.error_columns = {"LLEM", "VHM"};

    const BarProblem p(ManufacturedCase::exponential(opt.epsilon));
    for (int n : opt.n_list) {
        const Discretization disc(n, 2);
        StudyRow row{n, disc.h(), {}};
        for (MethodKind mk : {MethodKind::LLEM, MethodKind::VHM}) {
            const std::string label = "exponential " + detail::run_name(mk, n, 2);
            const SolutionVector sol = detail::with_context(label, [&] { return solve(p, disc, MethodSpec{mk}); });
            row.values.push_back(error_report(sol, p).max_absolute);
            if (opt.profiles) {
                t.profiles.push_back(detail::make_profile(detail::run_name(mk, n, 2), sol, p));
            }
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

/// Observed rates per error column; empty if the table's h does not halve.
inline std::vector<std::pair<std::string, std::vector<std::optional<double>>>> table_rates(const StudyTable& t)
{
    std::vector<std::pair<std::string, std::vector<std::optional<double>>>> out;
    if (t.rows.size() < 2) {
        return out;
    }
    for (std::size_t k = 1; k < t.rows.size(); ++k) {
        if (!(std::abs(t.rows[k - 1].h / t.rows[k].h - 2.0) <= 1e-9)) {
            return out;
        }
    }
    for (const auto& col : t.error_columns) {
        std::size_t c = 0;
        while (t.header[c] != col) {
            ++c;
        }
        std::vector<Sample> samples;
        for (const auto& row : t.rows) {
            samples.push_back({row.h, row.values[c - 1]});
        }
        out.emplace_back(col, observed_rates(samples));
    }
    return out;
}

inline std::string to_csv(const StudyTable& t)
{
    std::string out = csv_line(t.header);
    std::vector<std::string> cells;
    for (const auto& row : t.rows) {
        cells.clear();
        cells.push_back(std::to_string(row.key));
        for (double v : row.values) {
            cells.push_back(format_double(v));
        }
        out += csv_line(cells);
    }
    return out;
}

/// `x,u,u_exact,error` with error = u_exact - u.
inline std::string profile_csv(const Profile& prof)
{
    std::string out = csv_line({"x", "u", "u_exact", "error"});
    for (std::size_t i = 0; i < prof.x.size(); ++i) {
        out += csv_line({format_double(prof.x[i]), format_double(prof.u[i]), format_double(prof.u_exact[i]),
                         format_double(prof.u_exact[i] - prof.u[i])});
    }
    return out;
}

struct SolveOnceResult {
    BandedSystem system;
    SolutionVector solution;
    ErrorReport report;
    Profile profile;
};

/// Single configuration, keeping the assembled system for inspection.
inline SolveOnceResult run_solve_once(const BarProblem& p, const Discretization& disc, const MethodSpec& spec)
{
    const std::string label =
        std::string(to_string(p.manufactured().kind())) + " " + detail::run_name(spec.kind, disc.n(), disc.m());
    return detail::with_context(label, [&] {
        BandedSystem sys = assemble(p, disc, spec);
        SolutionVector sol = make_solution(sys, disc, spec.kind, banded_lu_solve(sys));
        ErrorReport rep = error_report(sol, p);
        Profile prof = detail::make_profile(detail::run_name(spec.kind, disc.n(), disc.m()), sol, p);
        return SolveOnceResult{std::move(sys), std::move(sol), std::move(rep), std::move(prof)};
    });
}

}  // namespace pdbc
