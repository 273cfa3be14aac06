#include "arsubcat/parallel/duality_grid.hpp"

#include <exception>
#include <mutex>

#include "arsubcat/errors.hpp"
#include "arsubcat/homalg/homalg.hpp"

#ifdef ARSUBCAT_HAVE_OPENMP
#include <omp.h>
#endif

namespace arsubcat {

namespace {

GridCell compute_cell(const Representation& x, const Representation& tau, const Representation& y) {
  return {stable_hom_proj(x, y).stable_dim, ext_dim(y, tau, 1)};
}

void check_shapes(const std::vector<Representation>& xs, const std::vector<Representation>& taus) {
  ARSUBCAT_REQUIRE(xs.size() == taus.size(), "duality_grid: one translate per X");
}

}  // namespace

std::vector<GridCell> duality_grid_serial(const std::vector<Representation>& xs,
                                          const std::vector<Representation>& taus,
                                          const std::vector<Representation>& ys) {
  check_shapes(xs, taus);
  std::vector<GridCell> out;
  out.reserve(xs.size() * ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) out.push_back(compute_cell(xs[i], taus[i], ys[j]));
  return out;
}

std::vector<GridCell> duality_grid(const std::vector<Representation>& xs, const std::vector<Representation>& taus,
                                   const std::vector<Representation>& ys) {
  check_shapes(xs, taus);
  const std::size_t ny = ys.size();
  const long long total = static_cast<long long>(xs.size() * ny);
  std::vector<GridCell> out(static_cast<std::size_t>(total));
  std::exception_ptr failure;
  std::mutex failure_mutex;
#ifdef ARSUBCAT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long c = 0; c < total; ++c) {
    try {
      const std::size_t i = static_cast<std::size_t>(c) / ny, j = static_cast<std::size_t>(c) % ny;
      out[static_cast<std::size_t>(c)] = compute_cell(xs[i], taus[i], ys[j]);
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

void set_thread_cap(int threads) {
#ifdef ARSUBCAT_HAVE_OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

int max_threads() {
#ifdef ARSUBCAT_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace arsubcat
