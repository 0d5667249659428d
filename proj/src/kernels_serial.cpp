#include <cmath>

#include "rdp/kernels.hpp"

// Serial reference implementations. Scalar reductions accumulate one
// partial per row and then add the partials in row order; the parallel
// versions reproduce exactly that order, which is what makes the two
// backends bit-identical.
namespace rdp::kernels::serial {

namespace {

// log with the 0 log 0 = 0 convention; inputs below 1e-300 count as zero.
inline double xlogx(double x) {
    return x > 1e-300 ? x * std::log(x) : 0.0;
}

}  // namespace

void exp_scaled(Matrix& out, const Matrix& cost, double s) {
    const std::size_t rows = cost.rows(), cols = cost.cols();
    for (std::size_t i = 0; i < rows; ++i) {
        const double* c = cost.row(i).data();
        double* o = out.row(i).data();
        for (std::size_t j = 0; j < cols; ++j) o[j] = std::exp(-s * c[j]);
    }
}

void weighted_colsums(std::span<double> out, const Matrix& K, std::span<const double> u) {
    const std::size_t rows = K.rows(), cols = K.cols();
    for (std::size_t j = 0; j < cols; ++j) out[j] = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        const double* k = K.row(i).data();
        const double ui = u[i];
        for (std::size_t j = 0; j < cols; ++j) out[j] += k[j] * ui;
    }
}

void weighted_rowsums(std::span<double> out, const Matrix& K, std::span<const double> v) {
    const std::size_t rows = K.rows(), cols = K.cols();
    for (std::size_t i = 0; i < rows; ++i) {
        const double* k = K.row(i).data();
        double acc = 0.0;
        for (std::size_t j = 0; j < cols; ++j) acc += k[j] * v[j];
        out[i] = acc;
    }
}

void scaled_outer(Matrix& out, const Matrix& K, std::span<const double> a,
                  std::span<const double> b) {
    const std::size_t rows = K.rows(), cols = K.cols();
    for (std::size_t i = 0; i < rows; ++i) {
        const double* k = K.row(i).data();
        double* o = out.row(i).data();
        const double ai = a[i];
        for (std::size_t j = 0; j < cols; ++j) o[j] = ai * k[j] * b[j];
    }
}

double weighted_cost(const Matrix& cost, std::span<const double> a, std::span<const double> b) {
    const std::size_t rows = cost.rows(), cols = cost.cols();
    double total = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        const double* c = cost.row(i).data();
        const double ai = a[i];
        double partial = 0.0;
        for (std::size_t j = 0; j < cols; ++j) partial += ai * b[j] * c[j];
        total += partial;
    }
    return total;
}

MomentPair cost_exp_moments(const Matrix& cost, std::span<const double> a,
                            std::span<const double> b, double s, double scale) {
    const std::size_t rows = cost.rows(), cols = cost.cols();
    const double rate = s / scale;
    double value = 0.0, second = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        const double* c = cost.row(i).data();
        const double ai = a[i];
        double pv = 0.0, ps = 0.0;
        for (std::size_t j = 0; j < cols; ++j) {
            const double cij = c[j];
            const double t = ai * b[j] * cij * std::exp(-rate * cij);
            pv += t;
            ps += t * cij;
        }
        value += pv;
        second += ps;
    }
    return {value, -second / scale};
}

double dot(const Matrix& plan, const Matrix& cost) {
    const std::size_t rows = plan.rows(), cols = plan.cols();
    double total = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        const double* x = plan.row(i).data();
        const double* c = cost.row(i).data();
        double partial = 0.0;
        for (std::size_t j = 0; j < cols; ++j) partial += x[j] * c[j];
        total += partial;
    }
    return total;
}

double entropy_sum(const Matrix& plan) {
    const std::size_t rows = plan.rows(), cols = plan.cols();
    double total = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        const double* x = plan.row(i).data();
        double partial = 0.0;
        for (std::size_t j = 0; j < cols; ++j) partial += xlogx(x[j]);
        total += partial;
    }
    return total;
}

double mutual_information_sum(const Matrix& w, std::span<const double> p,
                              std::span<const double> r) {
    const std::size_t rows = w.rows(), cols = w.cols();
    double total = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        const double* wi = w.row(i).data();
        const double pi = p[i];
        double partial = 0.0;
        for (std::size_t j = 0; j < cols; ++j) {
            const double wij = wi[j];
            if (wij > 1e-300) partial += wij * pi * (std::log(wij) - std::log(r[j]));
        }
        total += partial;
    }
    return total;
}

}  // namespace rdp::kernels::serial
