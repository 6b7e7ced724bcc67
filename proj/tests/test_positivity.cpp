#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ktorus/positivity.hpp"

#include <random>

using namespace ktorus;

namespace {
BigRational q(long p, long d) { return BigRational(BigInt(p), BigInt(d)); }

const ThetaInterval silver{q(414213, 1000000), q(414214, 1000000)};

AbelianGroup s8_k0() {
  AbelianGroup g;
  g.free_rank = 32;
  g.torsion = {8, 8};
  return g;
}

K0Element element(long a, long b, const AbelianGroup& g) {
  K0Element e{a, b, std::vector<BigInt>(g.free_rank - 2, BigInt(0)),
              std::vector<BigInt>(g.torsion.size(), BigInt(0))};
  return e;
}
}  // namespace

TEST_CASE("theta intervals") {
  CHECK_NOTHROW(ThetaInterval(q(1, 3), q(1, 3)));
  CHECK_THROWS_AS(ThetaInterval(q(0, 1), q(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(ThetaInterval(q(1, 2), q(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(ThetaInterval(q(2, 3), q(1, 3)), std::invalid_argument);

  CHECK(ThetaInterval::parse_rational("414213/1000000") == q(414213, 1000000));
  CHECK(ThetaInterval::parse_rational("0.414213") == q(414213, 1000000));
  CHECK(ThetaInterval::parse_rational(".25") == q(1, 4));
  CHECK(ThetaInterval::parse_rational("-1.5") == q(-3, 2));
  CHECK(ThetaInterval::parse_rational("-0.5") == q(-1, 2));
  CHECK(ThetaInterval::parse_rational("3") == q(3, 1));
  CHECK(ThetaInterval::parse_rational("6/4") == q(3, 2));
  CHECK_THROWS(ThetaInterval::parse_rational("1/0"));
  CHECK_THROWS(ThetaInterval::parse_rational("abc"));
  CHECK_THROWS(ThetaInterval::parse_rational("1."));
  CHECK_THROWS(ThetaInterval::parse_rational("0.-5"));
}

TEST_CASE("sign of K0 elements") {
  const AbelianGroup g = s8_k0();
  CHECK(k0_sign(element(0, 0, g), silver, g) == Sign::zero);
  CHECK(k0_sign(element(1, -2, g), silver, g) == Sign::positive);
  CHECK(k0_sign(element(1, -3, g), silver, g) == Sign::negative);
  CHECK(k0_sign(element(-1, 3, g), silver, g) == Sign::positive);

  K0Element torsion_only = element(0, 0, g);
  torsion_only.t[1] = 3;
  CHECK(k0_sign(torsion_only, silver, g) == Sign::indeterminate);
  CHECK(in_positive_cone(torsion_only, silver, g) == false);
  CHECK(describe(torsion_only, Sign::indeterminate) == "zero-trace nonzero element, not in K0+");

  // torsion coordinates are read modulo their factor
  K0Element wraps = element(0, 0, g);
  wraps.t[0] = 16;
  CHECK(k0_sign(wraps, silver, g) == Sign::zero);

  K0Element free_only = element(0, 0, g);
  free_only.c[5] = -1;
  CHECK(in_positive_cone(free_only, silver, g) == false);

  // a + bθ straddling zero over a wide enclosure
  const ThetaInterval wide(q(1, 4), q(3, 4));
  CHECK(k0_sign(element(1, -2, g), wide, g) == Sign::indeterminate);
  CHECK_FALSE(in_positive_cone(element(1, -2, g), wide, g).has_value());

  CHECK(in_positive_cone(element(1, -2, g), silver, g) == true);
  CHECK(in_positive_cone(element(0, 0, g), silver, g) == true);
  CHECK(in_positive_cone(element(1, -3, g), silver, g) == false);
}

TEST_CASE("malformed elements") {
  const AbelianGroup g = s8_k0();
  K0Element short_c = element(1, 0, g);
  short_c.c.pop_back();
  CHECK_THROWS_AS(k0_sign(short_c, silver, g), std::invalid_argument);
  K0Element long_t = element(1, 0, g);
  long_t.t.push_back(1);
  CHECK_THROWS_AS(k0_sign(long_t, silver, g), std::invalid_argument);
  AbelianGroup rank_one;
  rank_one.free_rank = 1;
  CHECK_THROWS_AS(k0_sign(K0Element{1, 0, {}, {}}, silver, rank_one), std::invalid_argument);
}

TEST_CASE("shrinking the enclosure never flips a decided sign") {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<long> coef(-50, 50);
  const AbelianGroup g = s8_k0();
  const ThetaInterval outer(q(2, 5), q(3, 7));
  const ThetaInterval inner(q(41, 100), q(42, 100));
  for (int trial = 0; trial < 500; ++trial) {
    const K0Element e = element(coef(rng), coef(rng), g);
    const Sign wide = k0_sign(e, outer, g);
    const Sign narrow = k0_sign(e, inner, g);
    if (wide != Sign::indeterminate) CHECK(narrow == wide);
  }
}

TEST_CASE("trace range report") {
  const auto s2 = trace_range_report(anzai_matrix(2), silver);
  CHECK(s2.furstenberg_class);
  CHECK(s2.k.k0.free_rank == 3);
  CHECK(s2.trace_range == "Z + Z*theta");
  REQUIRE(s2.cone.has_value());
  CHECK(s2.warnings.empty());

  const auto s6 = trace_range_report(anzai_matrix(6), silver);
  CHECK(s6.k.k1.torsion == std::vector<BigInt>{2});
  CHECK(s6.cone.has_value());

  const auto id = trace_range_report(TorusAutomorphism(IntMatrix::Identity(3, 3)), silver);
  CHECK_FALSE(id.furstenberg_class);
  CHECK_FALSE(id.cone.has_value());
  CHECK(id.warnings.size() == 1);
  CHECK(id.k.k0.free_rank == 8);
}
