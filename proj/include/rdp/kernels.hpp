#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include "rdp/types.hpp"

// Data-parallel inner loops of the solver. Every kernel exists twice: a
// serial reference (kernels::serial) and an OpenMP version (kernels::par).
// Both use the same per-output accumulation order, so results are
// bit-identical regardless of mode or thread count; tests assert this and
// the bench target compares their throughput.
namespace rdp::kernels {

enum class Mode {
    kAuto,      // parallel when OpenMP is available and the matrix is large
    kSerial,
    kParallel,  // forced parallel path (falls back to serial without OpenMP)
};

Mode mode() noexcept;
void set_mode(Mode mode) noexcept;

// Element count below which kAuto stays serial (thread startup dominates).
std::size_t parallel_threshold() noexcept;
void set_parallel_threshold(std::size_t entries) noexcept;

bool openmp_available() noexcept;

// out_ij = exp(-s * cost_ij)
void exp_scaled(Matrix& out, const Matrix& cost, double s, Mode mode = Mode::kAuto);

// out_j = sum_i K_ij * u_i
void weighted_colsums(std::span<double> out, const Matrix& K, std::span<const double> u,
                      Mode mode = Mode::kAuto);

// out_i = sum_j K_ij * v_j
void weighted_rowsums(std::span<double> out, const Matrix& K, std::span<const double> v,
                      Mode mode = Mode::kAuto);

// out_ij = a_i * K_ij * b_j
void scaled_outer(Matrix& out, const Matrix& K, std::span<const double> a,
                  std::span<const double> b, Mode mode = Mode::kAuto);

// sum_ij a_i b_j cost_ij
double weighted_cost(const Matrix& cost, std::span<const double> a, std::span<const double> b,
                     Mode mode = Mode::kAuto);

// value = sum_ij a_i b_j c_ij exp(-s c_ij / scale)  (first moment in c)
// slope = -(1/scale) sum_ij a_i b_j c_ij^2 exp(-s c_ij / scale)
// One fused pass; used by the lambda and gamma root solves.
struct MomentPair {
    double value;
    double slope;
};
MomentPair cost_exp_moments(const Matrix& cost, std::span<const double> a,
                            std::span<const double> b, double s, double scale,
                            Mode mode = Mode::kAuto);

// sum_ij plan_ij * cost_ij
double dot(const Matrix& plan, const Matrix& cost, Mode mode = Mode::kAuto);

// sum_ij x_ij log x_ij with 0 log 0 = 0
double entropy_sum(const Matrix& plan, Mode mode = Mode::kAuto);

// sum_ij w_ij p_i (log w_ij - log r_j) with 0 log 0 = 0
double mutual_information_sum(const Matrix& w, std::span<const double> p,
                              std::span<const double> r, Mode mode = Mode::kAuto);

namespace serial {
void exp_scaled(Matrix& out, const Matrix& cost, double s);
void weighted_colsums(std::span<double> out, const Matrix& K, std::span<const double> u);
void weighted_rowsums(std::span<double> out, const Matrix& K, std::span<const double> v);
void scaled_outer(Matrix& out, const Matrix& K, std::span<const double> a,
                  std::span<const double> b);
double weighted_cost(const Matrix& cost, std::span<const double> a, std::span<const double> b);
MomentPair cost_exp_moments(const Matrix& cost, std::span<const double> a,
                            std::span<const double> b, double s, double scale);
double dot(const Matrix& plan, const Matrix& cost);
double entropy_sum(const Matrix& plan);
double mutual_information_sum(const Matrix& w, std::span<const double> p,
                              std::span<const double> r);
}  // namespace serial

namespace par {
void exp_scaled(Matrix& out, const Matrix& cost, double s);
void weighted_colsums(std::span<double> out, const Matrix& K, std::span<const double> u);
void weighted_rowsums(std::span<double> out, const Matrix& K, std::span<const double> v);
void scaled_outer(Matrix& out, const Matrix& K, std::span<const double> a,
                  std::span<const double> b);
double weighted_cost(const Matrix& cost, std::span<const double> a, std::span<const double> b);
MomentPair cost_exp_moments(const Matrix& cost, std::span<const double> a,
                            std::span<const double> b, double s, double scale);
double dot(const Matrix& plan, const Matrix& cost);
double entropy_sum(const Matrix& plan);
double mutual_information_sum(const Matrix& w, std::span<const double> p,
                              std::span<const double> r);
}  // namespace par

}  // namespace rdp::kernels
