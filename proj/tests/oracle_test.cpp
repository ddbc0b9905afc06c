#include "doctest.h"

#include <random>

#include "brute.hpp"
#include "ktf/oracle.hpp"
#include "ktf/realize.hpp"
#include "ktf/verify.hpp"

using namespace ktf;

TEST_CASE("oracle cokernel of 1 - B at n = 4") {
  const IntMatrix m = IntMatrix::identity(3) - companion_block(4).aut;
  CHECK(oracle::oracle_cokernel(m) == FgAbGroup::cyclic(4));
  const auto stats = oracle::cokernel_order_statistics(m);
  CHECK(stats == std::map<Integer, Integer>{{1, 1}, {2, 1}, {4, 2}});
}

TEST_CASE("oracle cokernel of diag(2,3)") {
  const IntMatrix m{{2, 0}, {0, 3}};
  CHECK(oracle::oracle_cokernel(m) == FgAbGroup::cyclic(6));
  std::map<Integer, Integer> want;
  for (const auto &[k, v] : brute::quotient_order_stats({{2, 0}, {0, 3}}, 6))
    want[k] = v;
  CHECK(oracle::cokernel_order_statistics(m) == want);
}

TEST_CASE("oracle cokernel of the identity") {
  CHECK(oracle::oracle_cokernel(IntMatrix::identity(3)).is_trivial());
}

TEST_CASE("oracle refuses what it cannot enumerate") {
  CHECK_THROWS(oracle::oracle_cokernel(IntMatrix{{1, 2}, {2, 4}}));
  CHECK_THROWS(oracle::oracle_cokernel(IntMatrix(2, 3)));
  CHECK_THROWS(oracle::oracle_cokernel(IntMatrix{{1}, {2}}));
  CHECK_THROWS(oracle::oracle_cokernel(IntMatrix{{1000}}, 999));
}

TEST_CASE("oracle on wide matrices") {
  CHECK(oracle::oracle_cokernel(IntMatrix{{2, 3}}).is_trivial());
  CHECK(oracle::oracle_cokernel(IntMatrix{{4, 6}}) == FgAbGroup::cyclic(2));
  // Z^2 / <(2,0), (0,2), (1,1)>: the pairs with even coordinate sum
  const IntMatrix m{{2, 0, 1}, {0, 2, 1}};
  CHECK(oracle::oracle_cokernel(m) == FgAbGroup::cyclic(2));
  CHECK(oracle::cokernel_order_statistics(m) == std::map<Integer, Integer>{{1, 1}, {2, 1}});
  // a dependent leading column is skipped
  CHECK(oracle::oracle_cokernel(IntMatrix{{0, 3, 0}, {0, 0, 4}}) == FgAbGroup::cyclic(12));
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> dist(-5, 5);
  int checked = 0;
  while (checked < 40) {
    const std::size_t n = 1 + rng() % 3, c = n + 1 + rng() % 2;
    IntMatrix w(n, c);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < c; ++j)
        w(i, j) = dist(rng);
    try {
      const FgAbGroup g = oracle::oracle_cokernel(w, 2000);
      CHECK(g == cokernel(w));
      ++checked;
    } catch (const std::invalid_argument &) {
      // |det| of any 3x3 block is at most 750, so only infinite cokernels throw
      CHECK_FALSE(cokernel(w).is_finite());
    }
  }
}

TEST_CASE("invariant factors from order statistics") {
  for (const auto &g : verify::finite_group_catalog())
    CHECK(oracle::group_from_order_statistics(order_statistics(g)) == g);
  const FgAbGroup g = FgAbGroup::from_cyclic_orders({4, 6, 9, 8});
  CHECK(oracle::group_from_order_statistics(order_statistics(g)) == g);
}

TEST_CASE("oracle agrees with the test-side enumeration") {
  const brute::Mat ms[] = {{{3, 1}, {1, 3}}, {{2, 4}, {6, 8}}, {{1, 1, 0}, {0, 2, 2}, {2, 0, 2}},
                           {{0, 3}, {-3, 0}}};
  for (const auto &bm : ms) {
    IntMatrix m(bm.size(), bm.size());
    for (std::size_t i = 0; i < bm.size(); ++i)
      for (std::size_t j = 0; j < bm.size(); ++j)
        m(i, j) = bm[i][j];
    const long det = Integer(abs(determinant(m))).get_si();
    std::map<Integer, Integer> want;
    for (const auto &[k, v] : brute::quotient_order_stats(bm, det))
      want[k] = v;
    CHECK(oracle::cokernel_order_statistics(m) == want);
    CHECK(oracle::oracle_cokernel(m) == cokernel(m));
  }
}

TEST_CASE("small oracle sweep") {
  const verify::SweepReport rep = verify::oracle_sweep(30, 99, 64, 3);
  CHECK(rep.cases.size() == 30);
  CHECK(rep.all_pass());
}
