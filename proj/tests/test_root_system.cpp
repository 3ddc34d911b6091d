// Exact root/weight layer.  Expected values here are frozen from hand
// derivations with the length-2 normalization of type A; nothing below is
// allowed to run through floating point.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbitq/errors.hpp"
#include "orbitq/root_system.hpp"

using namespace orbitq;

namespace {
WeightVec w(std::initializer_list<Rat> cs) {
  WeightVec v;
  v.coords = cs;
  return v;
}
}  // namespace

TEST_CASE("positive root enumeration") {
  CHECK(build_root_system(2).positive_roots.size() == 1);
  CHECK(build_root_system(3).positive_roots.size() == 3);
  CHECK(build_root_system(4).positive_roots.size() == 6);
  CHECK_THROWS_AS(build_root_system(1), InvalidArgument);

  // A_2: alpha_1, alpha_1 + alpha_2, alpha_2 in (j,k) order.
  const auto rs = build_root_system(3);
  CHECK(rs.positive_roots[0].coords == std::vector<std::int64_t>{1, 0});
  CHECK(rs.positive_roots[1].coords == std::vector<std::int64_t>{1, 1});
  CHECK(rs.positive_roots[2].coords == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("cartan matrix and its exact inverse") {
  const auto rs = build_root_system(3);
  CHECK(rs.cartan[0][0] == 2);
  CHECK(rs.cartan[0][1] == -1);
  CHECK(rs.cartan_inverse[0][0] == Rat(2, 3));
  CHECK(rs.cartan_inverse[0][1] == Rat(1, 3));

  // Fundamental weights pair to delta_ij against the simple coroots.
  const auto w1 = w({1, 0});
  CHECK(pair_weight_coroot(rs, w1, rs.positive_roots[0]) == Rat(1));
  CHECK(pair_weight_coroot(rs, w1, rs.positive_roots[2]) == Rat(0));
}

TEST_CASE("pairing with non-simple coroots") {
  const auto rs = build_root_system(3);
  // <w1 + w2, H_{alpha_1+alpha_2}> = 2; <alpha_1, H_{alpha_1+alpha_2}> = 1.
  CHECK(pair_weight_coroot(rs, w({1, 1}), rs.positive_roots[1]) == Rat(2));
  CHECK(pair_weight_coroot(rs, root_to_weight(rs, rs.positive_roots[0]),
                           rs.positive_roots[1]) == Rat(1));

  RootVec junk;
  junk.coords = {2, 0};
  CHECK_THROWS_AS(pair_weight_coroot(rs, w({1, 0}), junk), InvalidArgument);
}

TEST_CASE("invariant form normalization") {
  const auto rs = build_root_system(3);
  // Every root has squared length 2.
  for (const auto& alpha : rs.positive_roots) {
    const auto aw = root_to_weight(rs, alpha);
    CHECK(invariant_form(rs, aw, aw) == Rat(2));
  }
  CHECK(invariant_form(rs, w({1, 0}), w({1, 0})) == Rat(2, 3));
}

TEST_CASE("stabilizer split") {
  const auto rs = build_root_system(3);

  SUBCASE("regular weight: empty stabilizer") {
    const auto s = stabilizer_split(rs, w({1, 1}));
    CHECK(s.stabilizer.empty());
    CHECK(s.complement.size() == 3);
  }
  SUBCASE("face weight (k,0): alpha_2 stabilizes") {
    const auto s = stabilizer_split(rs, w({4, 0}));
    REQUIRE(s.stabilizer.size() == 1);
    CHECK(s.stabilizer[0].coords == std::vector<std::int64_t>{0, 1});
    CHECK(s.complement.size() == 2);
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(stabilizer_split(rs, w({0, 0})), DegenerateOrbitError);
    CHECK_THROWS_AS(stabilizer_split(rs, w({-1, 1})), InvalidArgument);
  }
}

TEST_CASE("delta_xi") {
  const auto rs2 = build_root_system(2);
  CHECK(delta_xi(rs2, w({3})) == w({1}));

  const auto rs3 = build_root_system(3);
  CHECK(delta_xi(rs3, w({1, 1})) == w({1, 1}));
  CHECK(delta_xi(rs3, w({7, 0})) == w({Rat(3, 2), 0}));
  // Depends only on which roots vanish on xi, not on xi itself.
  CHECK(delta_xi(rs3, w({1, 0})) == delta_xi(rs3, w({9, 0})));

  // Regular orbits: delta is the full half sum, all coordinates 1.
  const auto rs4 = build_root_system(4);
  CHECK(delta_xi(rs4, w({2, 5, 1})) == w({1, 1, 1}));
}

TEST_CASE("einstein constant") {
  const auto rs2 = build_root_system(2);
  CHECK(einstein_constant(rs2, w({1})) == Rat(2));
  CHECK(einstein_constant(rs2, w({5})) == Rat(2, 5));

  const auto rs3 = build_root_system(3);
  CHECK(einstein_constant(rs3, w({1, 1})) == Rat(2));
  CHECK(einstein_constant(rs3, w({2, 2})) == Rat(1));
  CHECK(einstein_constant(rs3, w({1, 0})) == Rat(3));
  CHECK(einstein_constant(rs3, w({2, 0})) == Rat(3, 2));
  CHECK_FALSE(einstein_constant(rs3, w({2, 1})).has_value());
}

TEST_CASE("integrality and dominance") {
  CHECK(is_integral(w({3, 0})));
  CHECK_FALSE(is_integral(w({Rat(3, 2), 0})));
  CHECK(is_dominant(w({0, 2})));
  CHECK_FALSE(is_dominant(w({1, Rat(-1, 2)})));
}

TEST_CASE("weyl dimension formula") {
  const auto rs2 = build_root_system(2);
  for (std::int64_t m = 0; m <= 40; ++m) CHECK(weyl_dim(rs2, w({Rat(m)})) == m + 1);

  const auto rs3 = build_root_system(3);
  CHECK(weyl_dim(rs3, w({1, 0})) == 3);
  CHECK(weyl_dim(rs3, w({0, 1})) == 3);
  CHECK(weyl_dim(rs3, w({1, 1})) == 8);
  CHECK(weyl_dim(rs3, w({2, 0})) == 6);
  CHECK(weyl_dim(rs3, w({3, 0})) == 10);
  CHECK(weyl_dim(rs3, w({2, 2})) == 27);
  CHECK(weyl_dim(rs3, w({2, 1})) == 15);

  const auto rs4 = build_root_system(4);
  CHECK(weyl_dim(rs4, w({1, 0, 0})) == 4);
  CHECK(weyl_dim(rs4, w({0, 1, 0})) == 6);
  CHECK(weyl_dim(rs4, w({1, 0, 1})) == 15);

  CHECK_THROWS_AS(weyl_dim(rs3, w({Rat(1, 2), 0})), InvalidArgument);
}

TEST_CASE("dim at the half-sum weight is 2^(number of positive roots)") {
  for (int n = 2; n <= 5; ++n) {
    const auto rs = build_root_system(n);
    CHECK(weyl_dim(rs, rho_weight(rs)) ==
          (std::int64_t{1} << rs.positive_roots.size()));
  }
}

TEST_CASE("karabegov shift stays integral") {
  // xi + 2 delta_xi is a sum of xi and whole roots, hence integral whenever
  // xi is.  Sweep a few orbits including non-regular ones.
  for (int n = 2; n <= 4; ++n) {
    const auto rs = build_root_system(n);
    std::vector<WeightVec> xs;
    if (n == 2) xs = {w({1}), w({6})};
    if (n == 3) xs = {w({1, 0}), w({1, 1}), w({2, 1}), w({0, 3})};
    if (n == 4) xs = {w({1, 0, 0}), w({1, 0, 1}), w({2, 1, 0})};
    for (const auto& xi : xs) {
      auto shift = xi;
      shift += Rat(2) * delta_xi(rs, xi);
      CHECK(is_integral(shift));
      CHECK(is_dominant(shift));
    }
  }
}
