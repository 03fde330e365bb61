#pragma once

#include "pdbc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace pdbc {

/// Square matrix in row-wise band storage plus its right-hand side.
///
/// Row i stores columns [i - lower, i + upper]; entry (i, j) lives at
/// bands[i * width + (j - i + lower)]. `index_offset` maps matrix row 0 to a
/// grid index (-2m for the full extended-domain system, 0 otherwise).
class BandedSystem {
public:
    BandedSystem(std::size_t size, std::size_t lower, std::size_t upper, int index_offset = 0)
        : size_(size), lower_(lower), upper_(upper), index_offset_(index_offset),
          bands_(size * (lower + upper + 1), 0.0), rhs_(size, 0.0)
    {
        if (size == 0) {
            throw ArgumentError("banded system must have at least one row");
        }
    }

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] std::size_t lower_bw() const noexcept { return lower_; }
    [[nodiscard]] std::size_t upper_bw() const noexcept { return upper_; }
    [[nodiscard]] std::size_t width() const noexcept { return lower_ + upper_ + 1; }
    [[nodiscard]] int index_offset() const noexcept { return index_offset_; }

    [[nodiscard]] bool in_band(std::size_t i, std::size_t j) const noexcept
    {
        return i < size_ && j < size_ && j + lower_ >= i && j <= i + upper_;
    }

    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const noexcept
    {
        return in_band(i, j) ? bands_[i * width() + (j + lower_ - i)] : 0.0;
    }

    void set(std::size_t i, std::size_t j, double value) { ref(i, j) = value; }
    void add(std::size_t i, std::size_t j, double value) { ref(i, j) += value; }

    /// Writes `coeffs` into row i starting at column `first_col`.
    void set_row(std::size_t i, std::size_t first_col, std::span<const double> coeffs)
    {
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            set(i, first_col + k, coeffs[k]);
        }
    }

    [[nodiscard]] std::span<const double> rhs() const noexcept { return rhs_; }
    [[nodiscard]] double rhs(std::size_t i) const { return rhs_.at(i); }
    void set_rhs(std::size_t i, double value) { rhs_.at(i) = value; }

    [[nodiscard]] std::span<const double> bands() const noexcept { return bands_; }

    /// First and one-past-last column stored for row i.
    [[nodiscard]] std::size_t first_col(std::size_t i) const noexcept { return i > lower_ ? i - lower_ : 0; }
    [[nodiscard]] std::size_t end_col(std::size_t i) const noexcept { return std::min(size_, i + upper_ + 1); }

    /// Row-major dense copy.
    [[nodiscard]] std::vector<double> to_dense() const
    {
        std::vector<double> dense(size_ * size_, 0.0);
        for (std::size_t i = 0; i < size_; ++i) {
            for (std::size_t j = first_col(i); j < end_col(i); ++j) {
                dense[i * size_ + j] = (*this)(i, j);
            }
        }
        return dense;
    }

    /// y = A x
    [[nodiscard]] std::vector<double> multiply(std::span<const double> x) const
    {
        if (x.size() != size_) {
            throw ArgumentError("multiply: vector length does not match system size");
        }
        std::vector<double> y(size_, 0.0);
        for (std::size_t i = 0; i < size_; ++i) {
            double acc = 0.0;
            for (std::size_t j = first_col(i); j < end_col(i); ++j) {
                acc += (*this)(i, j) * x[j];
            }
            y[i] = acc;
        }
        return y;
    }

    [[nodiscard]] double norm_inf() const noexcept
    {
        double best = 0.0;
        for (std::size_t i = 0; i < size_; ++i) {
            double row = 0.0;
            for (std::size_t j = first_col(i); j < end_col(i); ++j) {
                row += std::abs((*this)(i, j));
            }
            best = std::max(best, row);
        }
        return best;
    }

private:
    double& ref(std::size_t i, std::size_t j)
    {
        if (!in_band(i, j)) {
            throw ArgumentError("entry (" + std::to_string(i) + ", " + std::to_string(j) + ") outside the band");
        }
        return bands_[i * width() + (j + lower_ - i)];
    }

    std::size_t size_;
    std::size_t lower_;
    std::size_t upper_;
    int index_offset_;
    std::vector<double> bands_;
    std::vector<double> rhs_;
};

}  // namespace pdbc
