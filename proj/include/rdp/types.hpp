#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rdp/error.hpp"

namespace rdp {

// Dense row-major matrix of doubles. Storage type only; domain wrappers
// below add their validation.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::span<double> data() noexcept { return data_; }
    std::span<const double> data() const noexcept { return data_; }

    bool same_shape(const Matrix& other) const noexcept {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Probability vector over a finite alphabet. Entries are validated to be
// nonnegative and to sum to 1 within 1e-12 at construction.
class DiscreteDistribution {
  public:
    static constexpr double kSumTolerance = 1e-12;

    explicit DiscreteDistribution(std::vector<double> probs);
    static DiscreteDistribution uniform(std::size_t n);

    std::size_t size() const noexcept { return probs_.size(); }
    double operator[](std::size_t i) const { return probs_[i]; }
    std::span<const double> probs() const noexcept { return probs_; }

    bool operator==(const DiscreteDistribution& other) const = default;

  private:
    std::vector<double> probs_;
};

// M x N nonnegative matrix used either as a transition mapping w (rows sum
// to 1) or as a transport plan Pi (marginals p and r). Which discipline
// applies is stated per use; the check helpers enforce it.
class Coupling {
  public:
    static constexpr double kMarginalTolerance = 1e-9;

    explicit Coupling(Matrix entries);

    const Matrix& entries() const noexcept { return m_; }
    std::size_t rows() const noexcept { return m_.rows(); }
    std::size_t cols() const noexcept { return m_.cols(); }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    // Transition-mapping discipline: every row sums to 1 within tolerance.
    void require_rows_stochastic(double tol = kMarginalTolerance) const;
    // Transport-plan discipline: row sums equal p, column sums equal r.
    void require_plan_marginals(const DiscreteDistribution& p,
                                const DiscreteDistribution& r,
                                double tol = kMarginalTolerance) const;

  private:
    Matrix m_;
};

// M x N matrix of nonnegative finite costs (distortion d or perception
// ground cost c).
class CostMatrix {
  public:
    explicit CostMatrix(Matrix entries);

    const Matrix& entries() const noexcept { return m_; }
    std::size_t rows() const noexcept { return m_.rows(); }
    std::size_t cols() const noexcept { return m_.cols(); }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    double max_entry() const;

  private:
    Matrix m_;
};

}  // namespace rdp
