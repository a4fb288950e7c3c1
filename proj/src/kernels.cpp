#include "pdmho/kernels.hpp"

#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pdmho::kernels {

namespace {
Exec g_default =
#ifdef _OPENMP
    Exec::openmp;
#else
    Exec::serial;
#endif

constexpr std::size_t kChunk = 8192;
}  // namespace

Exec default_exec() { return g_default; }
void set_default_exec(Exec e) { g_default = e; }

int sturm_count(std::span<const double> diag, std::span<const double> off2, double shift) {
    const std::size_t n = diag.size();
    int count = 0;
    double q = diag[0] - shift;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < n; ++i) {
        if (q == 0.0) q = 1e-300;
        q = (diag[i] - shift) - off2[i - 1] / q;
        if (q < 0.0) ++count;
    }
    return count;
}

void sturm_counts(std::span<const double> diag, std::span<const double> off2,
                  std::span<const double> shifts, std::span<int> counts, Exec exec) {
    for_each_index(shifts.size(), exec,
                   [&](std::size_t j) { counts[j] = sturm_count(diag, off2, shifts[j]); });
}

namespace {

template <class Term>
double chunked_sum(std::size_t n, Exec exec, Term&& term) {
    const std::size_t nchunks = (n + kChunk - 1) / kChunk;
    std::vector<double> partial(nchunks, 0.0);
    for_each_index(nchunks, exec, [&](std::size_t c) {
        const std::size_t lo = c * kChunk;
        const std::size_t hi = (lo + kChunk < n) ? lo + kChunk : n;
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += term(i);
        partial[c] = s;
    });
    double total = 0.0;
    for (double s : partial) total += s;  // fixed order: thread-count independent
    return total;
}

}  // namespace

double dot(std::span<const double> x, std::span<const double> y, Exec exec) {
    return chunked_sum(x.size(), exec, [&](std::size_t i) { return x[i] * y[i]; });
}

double norm_sq(std::span<const double> x, Exec exec) {
    return chunked_sum(x.size(), exec, [&](std::size_t i) { return x[i] * x[i]; });
}

void tridiag_apply(std::span<const double> diag, std::span<const double> off,
                   std::span<const double> x, std::span<double> y, Exec exec) {
    const std::size_t n = diag.size();
    if (n == 1) {
        y[0] = diag[0] * x[0];
        return;
    }
    for_each_index(n, exec, [&](std::size_t i) {
        double v = diag[i] * x[i];
        if (i > 0) v += off[i - 1] * x[i - 1];
        if (i + 1 < n) v += off[i] * x[i + 1];
        y[i] = v;
    });
}

}  // namespace pdmho::kernels
