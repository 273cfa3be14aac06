#pragma once

#include <vector>

#include "arsubcat/repmod/representation.hpp"

namespace arsubcat {

struct GridCell {
  std::size_t lhs = 0;  // dim stable Hom(X_i, Y_j)
  std::size_t rhs = 0;  // dim Ext^1(Y_j, T_i)
};

/// Row-major |xs| x |ys| grid; T_i = taus[i]. Cells are independent and are
/// computed on OpenMP threads when available.
std::vector<GridCell> duality_grid(const std::vector<Representation>& xs, const std::vector<Representation>& taus,
                                   const std::vector<Representation>& ys);
/// Single-threaded reference for duality_grid.
std::vector<GridCell> duality_grid_serial(const std::vector<Representation>& xs,
                                          const std::vector<Representation>& taus,
                                          const std::vector<Representation>& ys);

/// Caps OpenMP worker threads (0 leaves the runtime default).
void set_thread_cap(int threads);
int max_threads();

}  // namespace arsubcat
