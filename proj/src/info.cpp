#include "rdp/info.hpp"

#include <cmath>

#include "rdp/kernels.hpp"

namespace rdp {

namespace {

constexpr double kZeroFloor = 1e-300;  // below this, treat as exact zero before logs

}  // namespace

double mutual_information(const Coupling& w, const DiscreteDistribution& p,
                          const DiscreteDistribution& r) {
    if (w.rows() != p.size() || w.cols() != r.size()) {
        throw RdpError(ErrorKind::kInvalidInput, "mutual_information: dimension mismatch");
    }
    // A zero r_j is only tolerable if that column carries no mass.
    for (std::size_t j = 0; j < r.size(); ++j) {
        if (r[j] > kZeroFloor) continue;
        double colmass = 0.0;
        for (std::size_t i = 0; i < w.rows(); ++i) colmass += w(i, j) * p[i];
        if (colmass > kZeroFloor) {
            throw RdpError(ErrorKind::kDegenerateMarginal,
                           "mutual_information: r_j = 0 with positive column mass");
        }
    }
    return kernels::mutual_information_sum(w.entries(), p.probs(), r.probs());
}

double kl_divergence(const DiscreteDistribution& p, const DiscreteDistribution& r) {
    if (p.size() != r.size()) {
        throw RdpError(ErrorKind::kInvalidInput, "kl_divergence: length mismatch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= kZeroFloor) continue;
        if (r[i] <= kZeroFloor) {
            throw RdpError(ErrorKind::kDivergenceInfinite,
                           "kl_divergence: p_i > 0 where r_i = 0");
        }
        sum += p[i] * (std::log(p[i]) - std::log(r[i]));
    }
    return sum;
}

double expected_cost(const Coupling& plan_or_w, const DiscreteDistribution* weight,
                     const CostMatrix& cost) {
    if (plan_or_w.rows() != cost.rows() || plan_or_w.cols() != cost.cols()) {
        throw RdpError(ErrorKind::kInvalidInput, "expected_cost: dimension mismatch");
    }
    if (weight == nullptr) {
        return kernels::dot(plan_or_w.entries(), cost.entries());
    }
    if (weight->size() != plan_or_w.rows()) {
        throw RdpError(ErrorKind::kInvalidInput, "expected_cost: weight length mismatch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < plan_or_w.rows(); ++i) {
        double rowsum = 0.0;
        for (std::size_t j = 0; j < plan_or_w.cols(); ++j) {
            rowsum += plan_or_w(i, j) * cost(i, j);
        }
        sum += (*weight)[i] * rowsum;
    }
    return sum;
}

double entropy_of_plan(const Coupling& plan) {
    return kernels::entropy_sum(plan.entries());
}

}  // namespace rdp
