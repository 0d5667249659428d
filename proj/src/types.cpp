#include "rdp/types.hpp"

#include <cmath>
#include <numeric>

namespace rdp {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kInvalidInput: return "invalid-input";
        case ErrorKind::kInvalidParameter: return "invalid-parameter";
        case ErrorKind::kDegenerateMarginal: return "degenerate-marginal";
        case ErrorKind::kDivergenceInfinite: return "divergence-infinite";
        case ErrorKind::kGridMismatch: return "grid-mismatch";
        case ErrorKind::kIngestion: return "ingestion";
        case ErrorKind::kInfeasible: return "infeasible";
        case ErrorKind::kStability: return "stability";
        case ErrorKind::kDegenerateState: return "degenerate-state";
    }
    return "unknown";
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) {
        throw RdpError(ErrorKind::kInvalidInput, "matrix data size does not match shape");
    }
}

DiscreteDistribution::DiscreteDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) {
        throw RdpError(ErrorKind::kInvalidInput, "distribution must have at least one atom");
    }
    double sum = 0.0;
    for (double v : probs_) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw RdpError(ErrorKind::kInvalidInput, "distribution entries must be finite and >= 0");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > kSumTolerance) {
        throw RdpError(ErrorKind::kInvalidInput,
                       "distribution entries must sum to 1 within 1e-12 (got " +
                           std::to_string(sum) + ")");
    }
}

DiscreteDistribution DiscreteDistribution::uniform(std::size_t n) {
    if (n == 0) {
        throw RdpError(ErrorKind::kInvalidInput, "uniform distribution needs n >= 1");
    }
    std::vector<double> v(n, 1.0 / static_cast<double>(n));
    // Compensate the last entry so the sum is exact even when 1/n is inexact.
    double sum = std::accumulate(v.begin(), v.end() - 1, 0.0);
    v.back() = 1.0 - sum;
    return DiscreteDistribution(std::move(v));
}

Coupling::Coupling(Matrix entries) : m_(std::move(entries)) {
    for (double v : m_.data()) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw RdpError(ErrorKind::kInvalidInput, "coupling entries must be finite and >= 0");
        }
    }
}

void Coupling::require_rows_stochastic(double tol) const {
    for (std::size_t i = 0; i < m_.rows(); ++i) {
        double s = 0.0;
        for (double v : m_.row(i)) s += v;
        if (std::abs(s - 1.0) > tol) {
            throw RdpError(ErrorKind::kInvalidInput,
                           "transition mapping row " + std::to_string(i) + " sums to " +
                               std::to_string(s) + ", expected 1");
        }
    }
}

void Coupling::require_plan_marginals(const DiscreteDistribution& p,
                                      const DiscreteDistribution& r, double tol) const {
    if (p.size() != m_.rows() || r.size() != m_.cols()) {
        throw RdpError(ErrorKind::kInvalidInput, "plan marginal dimensions do not match");
    }
    for (std::size_t i = 0; i < m_.rows(); ++i) {
        double s = 0.0;
        for (double v : m_.row(i)) s += v;
        if (std::abs(s - p[i]) > tol) {
            throw RdpError(ErrorKind::kInvalidInput,
                           "plan row sum " + std::to_string(i) + " deviates from p");
        }
    }
    for (std::size_t j = 0; j < m_.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m_.rows(); ++i) s += m_(i, j);
        if (std::abs(s - r[j]) > tol) {
            throw RdpError(ErrorKind::kInvalidInput,
                           "plan column sum " + std::to_string(j) + " deviates from r");
        }
    }
}

CostMatrix::CostMatrix(Matrix entries) : m_(std::move(entries)) {
    for (double v : m_.data()) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw RdpError(ErrorKind::kInvalidInput, "cost entries must be finite and >= 0");
        }
    }
}

double CostMatrix::max_entry() const {
    double m = 0.0;
    for (double v : m_.data()) m = std::max(m, v);
    return m;
}

}  // namespace rdp
