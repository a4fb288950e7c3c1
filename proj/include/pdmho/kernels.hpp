#pragma once

#include <cstddef>
#include <span>

// Data-parallel kernels used by the heavy paths (eigensolver sweeps, large
// reductions). Every kernel has a serial reference implementation and an
// OpenMP one; both produce bitwise-identical results (reductions use a fixed
// chunked summation order independent of the thread count).

namespace pdmho::kernels {

enum class Exec { serial, openmp };

// Default backend: OpenMP when compiled in, serial otherwise.
Exec default_exec();
void set_default_exec(Exec e);

// Number of eigenvalues of the symmetric tridiagonal (diag, off) strictly
// below each shift, via the LDL^T Sturm sequence. off2 holds squared
// off-diagonal entries. Parallel across shifts.
void sturm_counts(std::span<const double> diag, std::span<const double> off2,
                  std::span<const double> shifts, std::span<int> counts, Exec exec);

int sturm_count(std::span<const double> diag, std::span<const double> off2, double shift);

// Deterministic chunked reductions.
double dot(std::span<const double> x, std::span<const double> y, Exec exec);
double norm_sq(std::span<const double> x, Exec exec);

// y = T x for symmetric tridiagonal T.
void tridiag_apply(std::span<const double> diag, std::span<const double> off,
                   std::span<const double> x, std::span<double> y, Exec exec);

// Evaluates f(i) for i in [0, n) in parallel; f must be pure per index.
template <class F>
void for_each_index(std::size_t n, Exec exec, F&& f) {
    if (exec == Exec::openmp) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i) f(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < n; ++i) f(i);
    }
}

}  // namespace pdmho::kernels
