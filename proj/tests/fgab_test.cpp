#include "doctest.h"

#include <random>
#include <set>

#include "brute.hpp"
#include "ktf/fgab.hpp"
#include "ktf/realize.hpp"

using namespace ktf;

namespace {

std::map<Integer, Integer> as_integer_map(const std::map<long, long> &m) {
  std::map<Integer, Integer> out;
  for (const auto &[k, v] : m)
    out[k] = v;
  return out;
}

FgAbGroup Zmod(long n) { return FgAbGroup::cyclic(n); }

} // namespace

TEST_CASE("cokernel of diag(2,3)") {
  const FgAbGroup g = cokernel(IntMatrix{{2, 0}, {0, 3}});
  CHECK(g.free_rank == 0);
  CHECK(g.torsion == IntVector{6});
  // reference: six cosets, order statistics of a cyclic group of order 6
  const auto stats = brute::quotient_order_stats({{2, 0}, {0, 3}}, 6);
  CHECK(stats == brute::cyclic_sum_order_stats({6}));
  CHECK(order_statistics(g) == as_integer_map(stats));
}

TEST_CASE("free presentations and zero relations") {
  CHECK(normalize(PresentedGroup::free(3)).group == FgAbGroup::free(3));
  CHECK(cokernel(IntMatrix(1, 1)) == FgAbGroup::free(1));
  CHECK(cokernel(IntMatrix::identity(3)).is_trivial());
}

TEST_CASE("cokernel of 1 - B is cyclic of order n") {
  for (std::size_t n = 2; n <= 12; ++n) {
    const PresentedGroup p(n - 1, IntMatrix::identity(n - 1) - companion_block(n).aut);
    const Normalized nm = normalize(p);
    CHECK(nm.group == Zmod(static_cast<long>(n)));
    CHECK(nm.group.is_canonical());
  }
}

TEST_CASE("normalize gives a well-defined isomorphism") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> dist(-6, 6);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 4, r = rng() % 5;
    IntMatrix rel(n, r);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < r; ++j)
        rel(i, j) = dist(rng);
    const PresentedGroup p(n, rel);
    const Normalized nm = normalize(p);
    CHECK(nm.group.is_canonical());
    CHECK(nm.group == cokernel(rel));
    CHECK(is_well_defined(nm.iso));
    CHECK(hom_kernel(nm.iso).is_trivial());
    CHECK(hom_cokernel(nm.iso).is_trivial());
  }
}

TEST_CASE("direct sums") {
  CHECK(direct_sum(Zmod(2), Zmod(3)) == Zmod(6));
  CHECK(order_statistics(direct_sum(Zmod(2), Zmod(3))) ==
        as_integer_map(brute::cyclic_sum_order_stats({2, 3})));
  CHECK(direct_sum(FgAbGroup::free(4), FgAbGroup::trivial()) == FgAbGroup::free(4));
  const FgAbGroup g = direct_sum(Zmod(2), Zmod(4));
  CHECK(g.torsion == IntVector{2, 4});
  CHECK(direct_sum({Zmod(4), FgAbGroup::free(1), Zmod(6)}) ==
        FgAbGroup{1, IntVector{2, 12}});
}

TEST_CASE("presentation validation and element equality") {
  CHECK_THROWS(PresentedGroup(2, IntMatrix(3, 1)));
  const PresentedGroup z4(1, IntMatrix{{4}});
  CHECK(z4.equal_elements({1}, {5}));
  CHECK_FALSE(z4.equal_elements({1}, {3}));
}

TEST_CASE("well-defined homomorphisms") {
  const PresentedGroup z = PresentedGroup::free(1);
  const PresentedGroup z2(1, IntMatrix{{2}});
  CHECK(is_well_defined(GroupHom::identity(z2)));
  CHECK(is_well_defined(GroupHom{z, z2, IntMatrix{{1}}}));
  CHECK_FALSE(is_well_defined(GroupHom{z2, z, IntMatrix{{1}}}));
  CHECK_THROWS(hom_kernel(GroupHom{z2, z, IntMatrix{{1}}}));
  CHECK_THROWS(hom_cokernel(GroupHom{z2, z, IntMatrix{{1}}}));
}

TEST_CASE("kernel and cokernel of 1 - B on free Z^(n-1)") {
  for (std::size_t n = 2; n <= 10; ++n) {
    const Block b = companion_block(n);
    const GroupHom d{b.group, b.group, IntMatrix::identity(n - 1) - b.aut};
    CHECK(hom_kernel(d).is_trivial());
    CHECK(hom_cokernel(d) == Zmod(static_cast<long>(n)));
  }
}

TEST_CASE("zero endomorphism of Z^d") {
  for (std::size_t d = 1; d <= 4; ++d) {
    const GroupHom z{PresentedGroup::free(d), PresentedGroup::free(d), IntMatrix(d, d)};
    CHECK(hom_kernel(z) == FgAbGroup::free(d));
    CHECK(hom_cokernel(z) == FgAbGroup::free(d));
  }
}

TEST_CASE("multiplication by 2 on Z/4") {
  const GroupHom h = multiplication_map(Zmod(4), 2);
  // reference: x -> 2x on {0,1,2,3}; kernel {0,2}, image {0,2}
  long ker = 0, img_mask = 0;
  for (long x = 0; x < 4; ++x) {
    ker += (2 * x) % 4 == 0;
    img_mask |= 1L << ((2 * x) % 4);
  }
  CHECK(ker == 2);
  CHECK(4 / __builtin_popcountl(static_cast<unsigned long>(img_mask)) == 2);
  CHECK(hom_kernel(h) == Zmod(2));
  CHECK(hom_cokernel(h) == Zmod(2));
}

TEST_CASE("kernel of a map between torsion groups") {
  // Z/6 -> Z/4, 1 -> 2: kernel {0,2,4} of order 3, image {0,2}
  const GroupHom h{PresentedGroup(1, IntMatrix{{6}}), PresentedGroup(1, IntMatrix{{4}}),
                   IntMatrix{{2}}};
  REQUIRE(is_well_defined(h));
  CHECK(hom_kernel(h) == Zmod(3));
  CHECK(hom_cokernel(h) == Zmod(2));
  // Z + Z/2 -> Z/2, (a, b) -> a + b
  const GroupHom s{PresentedGroup(2, IntMatrix{{0}, {2}}), PresentedGroup(1, IntMatrix{{2}}),
                   IntMatrix{{1, 1}}};
  CHECK(hom_kernel(s) == FgAbGroup::free(1));
  CHECK(hom_cokernel(s).is_trivial());
}

TEST_CASE("kernel and cokernel ranks add up on free groups") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> dist(-4, 4);
  for (int t = 0; t < 80; ++t) {
    const std::size_t a = 1 + rng() % 4, b = 1 + rng() % 4;
    IntMatrix m(b, a);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < a; ++j)
        m(i, j) = dist(rng);
    const GroupHom h{PresentedGroup::free(a), PresentedGroup::free(b), m};
    const FgAbGroup k = hom_kernel(h), c = hom_cokernel(h);
    CHECK(k.torsion.empty());
    CHECK(k.free_rank == a - rank(m));
    CHECK(c.free_rank == b - rank(m));
  }
}

TEST_CASE("iso_check") {
  CHECK(iso_check(direct_sum(Zmod(2), Zmod(3)), Zmod(6)));
  CHECK(order_statistics(direct_sum(Zmod(2), Zmod(3))) == order_statistics(Zmod(6)));
  CHECK_FALSE(iso_check(FgAbGroup::from_cyclic_orders({2, 2}), Zmod(4)));
  CHECK_FALSE(iso_check(FgAbGroup::free(1), FgAbGroup::trivial()));
}

TEST_CASE("order statistics") {
  CHECK(order_statistics(Zmod(4)) == std::map<Integer, Integer>{{1, 1}, {2, 1}, {4, 2}});
  CHECK(as_integer_map(brute::cyclic_sum_order_stats({4})) == order_statistics(Zmod(4)));
  CHECK(order_statistics(FgAbGroup::trivial()) == std::map<Integer, Integer>{{1, 1}});
  const FgAbGroup v4 = FgAbGroup::from_cyclic_orders({2, 2});
  CHECK(order_statistics(v4) == std::map<Integer, Integer>{{1, 1}, {2, 3}});
  CHECK(as_integer_map(brute::cyclic_sum_order_stats({2, 2})) == order_statistics(v4));
  CHECK(order_statistics(FgAbGroup::from_cyclic_orders({6, 10, 4})) ==
        as_integer_map(brute::cyclic_sum_order_stats({6, 10, 4})));
  CHECK_THROWS(order_statistics(FgAbGroup::free(1)));
  CHECK_THROWS(order_statistics(Zmod(1000), 999));
}

TEST_CASE("ext1") {
  CHECK(ext1(FgAbGroup::free(3), Zmod(6)).is_trivial());
  CHECK(ext1(Zmod(2), FgAbGroup::free(1)) == Zmod(2));
  // reference: coker of x4 on Z/6; the image {0, 4, 2} has index 2
  std::set<long> image;
  for (long x = 0; x < 6; ++x)
    image.insert((4 * x) % 6);
  CHECK(6 / static_cast<long>(image.size()) == 2);
  CHECK(ext1(Zmod(4), Zmod(6)) == Zmod(2));
  CHECK(ext1(Zmod(3), Zmod(4)).is_trivial());
  CHECK(ext1(Zmod(2), direct_sum(FgAbGroup::free(1), Zmod(2))) ==
        FgAbGroup::from_cyclic_orders({2, 2}));
}

TEST_CASE("canonical form invariants") {
  CHECK(FgAbGroup::from_cyclic_orders({4, 6, 1, 0}) == FgAbGroup{1, IntVector{2, 12}});
  CHECK(FgAbGroup::cyclic(1).is_trivial());
  CHECK_FALSE(FgAbGroup{0, IntVector{4, 2}}.is_canonical());
  CHECK_FALSE(FgAbGroup{0, IntVector{1}}.is_canonical());
  CHECK(FgAbGroup{2, IntVector{3}}.to_string() == "Z^2 + Z/3");
  CHECK(FgAbGroup::trivial().to_string() == "0");
  const FgAbGroup g{1, IntVector{2, 4}};
  CHECK(g.reduce({5, 3, -1}) == IntVector{5, 1, 3});
  CHECK(g.is_zero_element({0, 2, 4}));
  CHECK_FALSE(g.is_zero_element({1, 0, 0}));
  CHECK_THROWS(g.order());
  CHECK(FgAbGroup::from_cyclic_orders({2, 4}).order() == 8);
}

TEST_CASE("automorphism inverse") {
  const Block b = companion_block(4);
  const auto inv = automorphism_inverse(GroupHom{b.group, b.group, b.aut});
  REQUIRE(inv.has_value());
  CHECK(*inv * b.aut == IntMatrix::identity(3));
  const PresentedGroup z = PresentedGroup::free(1);
  CHECK_FALSE(automorphism_inverse(GroupHom{z, z, IntMatrix{{2}}}).has_value());
  // x -> 3x is invertible on Z/4 but not as an integer matrix
  const PresentedGroup z4(1, IntMatrix{{4}});
  CHECK(automorphism_inverse(GroupHom{z4, z4, IntMatrix{{3}}}).has_value());
}
