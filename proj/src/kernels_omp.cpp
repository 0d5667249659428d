#include <cmath>
#include <vector>

#include "rdp/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

// OpenMP variants. Each output element is produced by exactly one thread
// with the same inner accumulation order as the serial reference; scalar
// reductions collect per-row partials into a buffer and sum it in row
// order afterwards. Hence results match the serial backend bit for bit
// for any thread count.
namespace rdp::kernels::par {

#ifndef _OPENMP

// Without OpenMP the parallel namespace forwards to the reference code.
void exp_scaled(Matrix& out, const Matrix& cost, double s) { serial::exp_scaled(out, cost, s); }
void weighted_colsums(std::span<double> out, const Matrix& K, std::span<const double> u) {
    serial::weighted_colsums(out, K, u);
}
void weighted_rowsums(std::span<double> out, const Matrix& K, std::span<const double> v) {
    serial::weighted_rowsums(out, K, v);
}
void scaled_outer(Matrix& out, const Matrix& K, std::span<const double> a,
                  std::span<const double> b) {
    serial::scaled_outer(out, K, a, b);
}
double weighted_cost(const Matrix& cost, std::span<const double> a, std::span<const double> b) {
    return serial::weighted_cost(cost, a, b);
}
MomentPair cost_exp_moments(const Matrix& cost, std::span<const double> a,
                            std::span<const double> b, double s, double scale) {
    return serial::cost_exp_moments(cost, a, b, s, scale);
}
double dot(const Matrix& plan, const Matrix& cost) { return serial::dot(plan, cost); }
double entropy_sum(const Matrix& plan) { return serial::entropy_sum(plan); }
double mutual_information_sum(const Matrix& w, std::span<const double> p,
                              std::span<const double> r) {
    return serial::mutual_information_sum(w, p, r);
}

#else

namespace {

inline double xlogx(double x) {
    return x > 1e-300 ? x * std::log(x) : 0.0;
}

inline long ilong(std::size_t n) { return static_cast<long>(n); }

}  // namespace

void exp_scaled(Matrix& out, const Matrix& cost, double s) {
    const long rows = ilong(cost.rows());
    const std::size_t cols = cost.cols();
#pragma omp parallel for schedule(static)
    for (long i = 0; i < rows; ++i) {
        const double* c = cost.row(i).data();
        double* o = out.row(i).data();
        for (std::size_t j = 0; j < cols; ++j) o[j] = std::exp(-s * c[j]);
    }
}

void weighted_colsums(std::span<double> out, const Matrix& K, std::span<const double> u) {
    const std::size_t rows = K.rows();
    const long cols = ilong(K.cols());
    // One column per thread, scanning rows in order: same accumulation
    // order per out[j] as the serial i-outer loop.
#pragma omp parallel for schedule(static)
    for (long j = 0; j < cols; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < rows; ++i) acc += K(i, j) * u[i];
        out[j] = acc;
    }
}

void weighted_rowsums(std::span<double> out, const Matrix& K, std::span<const double> v) {
    const long rows = ilong(K.rows());
    const std::size_t cols = K.cols();
#pragma omp parallel for schedule(static)
    for (long i = 0; i < rows; ++i) {
        const double* k = K.row(i).data();
        double acc = 0.0;
        for (std::size_t j = 0; j < cols; ++j) acc += k[j] * v[j];
        out[i] = acc;
    }
}

void scaled_outer(Matrix& out, const Matrix& K, std::span<const double> a,
                  std::span<const double> b) {
    const long rows = ilong(K.rows());
    const std::size_t cols = K.cols();
#pragma omp parallel for schedule(static)
    for (long i = 0; i < rows; ++i) {
        const double* k = K.row(i).data();
        double* o = out.row(i).data();
        const double ai = a[i];
        for (std::size_t j = 0; j < cols; ++j) o[j] = ai * k[j] * b[j];
    }
}

double weighted_cost(const Matrix& cost, std::span<const double> a, std::span<const double> b) {
    const long rows = ilong(cost.rows());
    const std::size_t cols = cost.cols();
    std::vector<double> partial(cost.rows());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < rows; ++i) {
        const double* c = cost.row(i).data();
        const double ai = a[i];
        double acc = 0.0;
        for (std::size_t j = 0; j < cols; ++j) acc += ai * b[j] * c[j];
        partial[i] = acc;
    }
    double total = 0.0;
    for (double v : partial) total += v;
    return total;
}

MomentPair cost_exp_moments(const Matrix& cost, std::span<const double> a,
                            std::span<const double> b, double s, double scale) {
    const long rows = ilong(cost.rows());
    const std::size_t cols = cost.cols();
    const double rate = s / scale;
    std::vector<double> pv(cost.rows()), ps(cost.rows());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < rows; ++i) {
        const double* c = cost.row(i).data();
        const double ai = a[i];
        double v = 0.0, sec = 0.0;
        for (std::size_t j = 0; j < cols; ++j) {
            const double cij = c[j];
            const double t = ai * b[j] * cij * std::exp(-rate * cij);
            v += t;
            sec += t * cij;
        }
        pv[i] = v;
        ps[i] = sec;
    }
    double value = 0.0, second = 0.0;
    for (long i = 0; i < rows; ++i) {
        value += pv[i];
        second += ps[i];
    }
    return {value, -second / scale};
}

double dot(const Matrix& plan, const Matrix& cost) {
    const long rows = ilong(plan.rows());
    const std::size_t cols = plan.cols();
    std::vector<double> partial(plan.rows());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < rows; ++i) {
        const double* x = plan.row(i).data();
        const double* c = cost.row(i).data();
        double acc = 0.0;
        for (std::size_t j = 0; j < cols; ++j) acc += x[j] * c[j];
        partial[i] = acc;
    }
    double total = 0.0;
    for (double v : partial) total += v;
    return total;
}

double entropy_sum(const Matrix& plan) {
    const long rows = ilong(plan.rows());
    const std::size_t cols = plan.cols();
    std::vector<double> partial(plan.rows());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < rows; ++i) {
        const double* x = plan.row(i).data();
        double acc = 0.0;
        for (std::size_t j = 0; j < cols; ++j) acc += xlogx(x[j]);
        partial[i] = acc;
    }
    double total = 0.0;
    for (double v : partial) total += v;
    return total;
}

double mutual_information_sum(const Matrix& w, std::span<const double> p,
                              std::span<const double> r) {
    const long rows = ilong(w.rows());
    const std::size_t cols = w.cols();
    std::vector<double> partial(w.rows());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < rows; ++i) {
        const double* wi = w.row(i).data();
        const double pi = p[i];
        double acc = 0.0;
        for (std::size_t j = 0; j < cols; ++j) {
            const double wij = wi[j];
            if (wij > 1e-300) acc += wij * pi * (std::log(wij) - std::log(r[j]));
        }
        partial[i] = acc;
    }
    double total = 0.0;
    for (double v : partial) total += v;
    return total;
}

#endif  // _OPENMP

}  // namespace rdp::kernels::par
