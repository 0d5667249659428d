#include <atomic>

#include "rdp/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rdp::kernels {

namespace {

std::atomic<Mode> g_mode{Mode::kAuto};
std::atomic<std::size_t> g_threshold{32768};

inline bool use_parallel(std::size_t entries, Mode requested) {
    const Mode m = requested == Mode::kAuto ? g_mode.load() : requested;
    switch (m) {
        case Mode::kSerial: return false;
        case Mode::kParallel: return true;
        case Mode::kAuto: break;
    }
#ifdef _OPENMP
    return entries >= g_threshold.load() && omp_get_max_threads() > 1;
#else
    (void)entries;
    return false;
#endif
}

}  // namespace

Mode mode() noexcept { return g_mode.load(); }
void set_mode(Mode mode) noexcept { g_mode.store(mode); }

std::size_t parallel_threshold() noexcept { return g_threshold.load(); }
void set_parallel_threshold(std::size_t entries) noexcept { g_threshold.store(entries); }

bool openmp_available() noexcept {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

void exp_scaled(Matrix& out, const Matrix& cost, double s, Mode mode) {
    use_parallel(cost.data().size(), mode) ? par::exp_scaled(out, cost, s)
                                           : serial::exp_scaled(out, cost, s);
}

void weighted_colsums(std::span<double> out, const Matrix& K, std::span<const double> u,
                      Mode mode) {
    use_parallel(K.data().size(), mode) ? par::weighted_colsums(out, K, u)
                                        : serial::weighted_colsums(out, K, u);
}

void weighted_rowsums(std::span<double> out, const Matrix& K, std::span<const double> v,
                      Mode mode) {
    use_parallel(K.data().size(), mode) ? par::weighted_rowsums(out, K, v)
                                        : serial::weighted_rowsums(out, K, v);
}

void scaled_outer(Matrix& out, const Matrix& K, std::span<const double> a,
                  std::span<const double> b, Mode mode) {
    use_parallel(K.data().size(), mode) ? par::scaled_outer(out, K, a, b)
                                        : serial::scaled_outer(out, K, a, b);
}

double weighted_cost(const Matrix& cost, std::span<const double> a, std::span<const double> b,
                     Mode mode) {
    return use_parallel(cost.data().size(), mode) ? par::weighted_cost(cost, a, b)
                                                  : serial::weighted_cost(cost, a, b);
}

MomentPair cost_exp_moments(const Matrix& cost, std::span<const double> a,
                            std::span<const double> b, double s, double scale, Mode mode) {
    return use_parallel(cost.data().size(), mode)
               ? par::cost_exp_moments(cost, a, b, s, scale)
               : serial::cost_exp_moments(cost, a, b, s, scale);
}

double dot(const Matrix& plan, const Matrix& cost, Mode mode) {
    return use_parallel(plan.data().size(), mode) ? par::dot(plan, cost)
                                                  : serial::dot(plan, cost);
}

double entropy_sum(const Matrix& plan, Mode mode) {
    return use_parallel(plan.data().size(), mode) ? par::entropy_sum(plan)
                                                  : serial::entropy_sum(plan);
}

double mutual_information_sum(const Matrix& w, std::span<const double> p,
                              std::span<const double> r, Mode mode) {
    return use_parallel(w.data().size(), mode) ? par::mutual_information_sum(w, p, r)
                                               : serial::mutual_information_sum(w, p, r);
}

}  // namespace rdp::kernels
