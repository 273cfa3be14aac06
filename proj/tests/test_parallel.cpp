#include <catch_amalgamated.hpp>

#include "arsubcat/homalg/homalg.hpp"
#include "arsubcat/parallel/duality_grid.hpp"
#include "arsubcat/subcat/subcat.hpp"
#include "support/support.hpp"

using namespace arsubcat;
using namespace arsubcat::testing;

namespace {

bool same_grid(const std::vector<GridCell>& a, const std::vector<GridCell>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].lhs != b[i].lhs || a[i].rhs != b[i].rhs) return false;
  return true;
}

}  // namespace

TEST_CASE("parallel duality grid matches the serial reference", "[parallel]") {
  Rng rng(11);
  auto kx2 = truncated_loop(2);
  T2Algebra t2 = t2_of(kx2);
  auto objs = enumerate_indecomposables(t2.t2, {{2, 2}}, rng);
  REQUIRE(objs.size() == 9);
  std::vector<Representation> taus;
  for (auto& x : objs) taus.push_back(ar_translate(x));
  auto serial = duality_grid_serial(objs, taus, objs);
  REQUIRE(serial.size() == 81);
  for (int threads : {1, 2, 4}) {
    set_thread_cap(threads);
    CHECK(same_grid(duality_grid(objs, taus, objs), serial));
  }
  set_thread_cap(0);
  // The grid itself is the classical duality: every cell agrees.
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = 0; j < objs.size(); ++j) {
      CHECK(serial[i * objs.size() + j].lhs == stable_hom_dim_oracle(objs[i], objs[j]));
      CHECK(serial[i * objs.size() + j].lhs == serial[i * objs.size() + j].rhs);
    }
}

TEST_CASE("parallel grid on random modules", "[parallel]") {
  Rng rng(12);
  auto alg = a3_zero_relation();
  std::vector<Representation> xs, taus, ys;
  for (int i = 0; i < 6; ++i) {
    xs.push_back(random_module(alg, rng, 2));
    taus.push_back(ar_translate(xs.back()));
    ys.push_back(random_module(alg, rng, 2));
  }
  CHECK(same_grid(duality_grid(xs, taus, ys), duality_grid_serial(xs, taus, ys)));
}

TEST_CASE("thread cap", "[parallel]") {
  set_thread_cap(1);
  CHECK(max_threads() == 1);
  set_thread_cap(0);
  CHECK(max_threads() >= 1);
}
