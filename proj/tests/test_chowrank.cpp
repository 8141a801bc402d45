#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chowflag/chowrank.hpp"
#include "chowflag/partitions.hpp"

using namespace chowflag;
using chowrank::FlagSpec;
using chowrank::RankProfile;

namespace {

std::vector<BigInt> ints(std::initializer_list<int> values) {
  std::vector<BigInt> out;
  for (int v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_NOTHROW(chowrank::validateSpec({4, {1, 2, 3, 4}}));
  CHECK_THROWS_AS(chowrank::validateSpec({4, {}}), std::invalid_argument);
  CHECK_THROWS_AS(chowrank::validateSpec({4, {2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(chowrank::validateSpec({4, {3, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(chowrank::validateSpec({4, {1, 5}}), std::invalid_argument);
  CHECK_THROWS_AS(chowrank::validateSpec({0, {1}}), std::invalid_argument);
}

TEST_CASE("rank profiles") {
  const auto p2 = RankProfile::projectiveSpace(2);
  CHECK(p2.ranks() == ints({1, 1, 1}));
  CHECK(p2.at(-1) == 0);
  CHECK(p2.at(3) == 0);
  CHECK(p2.total() == 3);
  CHECK(RankProfile::point().ranks() == ints({1}));
}

TEST_CASE("flag bundle of a Grassmannian") {
  // G(2,4): single block (2,2), profile 1,1,2,1,1
  const auto coeffs = chowrank::flagBundleCoefficients({4, {2}});
  REQUIRE(coeffs.blocks.size() == 1);
  CHECK(coeffs.blocks[0] == std::pair<int, int>(2, 2));
  const auto profile = chowrank::pushThroughBase(coeffs, RankProfile::point());
  CHECK(profile.ranks() == ints({1, 1, 2, 1, 1}));
  CHECK(profile.total() == 6);
}

TEST_CASE("flag bundle of a complete flag variety") {
  const auto coeffs = chowrank::flagBundleCoefficients({3, {1, 2, 3}});
  const auto profile = chowrank::pushThroughBase(coeffs, RankProfile::point());
  CHECK(profile.ranks() == ints({1, 2, 2, 1}));
  CHECK(profile.total() == 6);
}

TEST_CASE("degenerate top index contributes nothing") {
  // indices ending at n produce a (gap, 0) block, which is trivial
  const auto with = chowrank::pushThroughBase(
      chowrank::flagBundleCoefficients({4, {2, 4}}), RankProfile::point());
  const auto without = chowrank::pushThroughBase(
      chowrank::flagBundleCoefficients({4, {2}}), RankProfile::point());
  CHECK(with == without);
}

TEST_CASE("first-index-one decomposition") {
  // (4, [1,2]): single live block (2,1) -> coefficients 1,1,1
  const auto coeffs = chowrank::twistedCaseFirstIndexOne({4, {1, 2}});
  CHECK(coeffs.coefficients.values() == ints({1, 1, 1}));
  // a bare Severi-Brauer variety decomposes trivially over itself
  const auto bare = chowrank::twistedCaseFirstIndexOne({5, {1}});
  CHECK(bare.coefficients.values() == ints({1}));
  CHECK_THROWS_AS(chowrank::twistedCaseFirstIndexOne({4, {2}}), std::invalid_argument);
}

TEST_CASE("first-index-one over a split base matches the direct computation") {
  for (int n = 2; n <= 6; ++n) {
    const auto sb = RankProfile::projectiveSpace(n - 1);
    for (unsigned mask = 1; mask < (1u << n); mask += 2) {  // lists containing 1
      std::vector<int> indices;
      for (int i = 1; i <= n; ++i) {
        if (mask & (1u << (i - 1))) indices.push_back(i);
      }
      const FlagSpec spec{n, indices};
      const auto twisted =
          chowrank::pushThroughBase(chowrank::twistedCaseFirstIndexOne(spec), sb);
      const auto direct = chowrank::pushThroughBase(
          chowrank::flagBundleCoefficients(spec), RankProfile::point());
      CAPTURE(n);
      CHECK(twisted == direct);
    }
  }
}

TEST_CASE("general-position decomposition blocks") {
  // (4, [2,3]) at pivot position 2: one block (2,1) from below the pivot
  const auto coeffs = chowrank::twistedCaseGeneral({4, {2, 3}}, 2);
  REQUIRE(coeffs.blocks.size() == 1);
  CHECK(coeffs.blocks[0] == std::pair<int, int>(2, 1));
  CHECK(coeffs.coefficients.values() == ints({1, 1, 1}));
  // pushed over the split Grassmannian base Gr(3,4), the total must match
  // the split flag variety Flag(2,3;4): 4!/(2!*1!*1!) = 12
  const auto gr = chowrank::pushThroughBase(
      chowrank::flagBundleCoefficients({4, {3}}), RankProfile::point());
  CHECK(chowrank::pushThroughBase(coeffs, gr).total() == 12);
  CHECK_THROWS_AS(chowrank::twistedCaseGeneral({4, {2, 3}}, 3), std::invalid_argument);
}

TEST_CASE("product fibration concatenates blocks") {
  const auto prod = chowrank::productFibrationCoefficients({4, {2}}, {4, {1, 3}});
  const auto a = chowrank::flagBundleCoefficients({4, {2}});
  const auto b = chowrank::flagBundleCoefficients({4, {1, 3}});
  CHECK(prod.blocks.size() == a.blocks.size() + b.blocks.size());
  CHECK(prod.coefficients.values() ==
        convolve(a.coefficients, b.coefficients).values());
}

TEST_CASE("push through a point is the coefficient table itself") {
  const auto coeffs = chowrank::flagBundleCoefficients({5, {2, 3}});
  const auto profile = chowrank::pushThroughBase(coeffs, RankProfile::point());
  for (int k = 0; k <= coeffs.coefficients.supportBound(); ++k) {
    CHECK(profile.at(k) == coeffs.coefficients.at(k));
  }
}

TEST_CASE("exact-sequence pipeline for a split Grassmannian") {
  // G(2,4) over the projective space P^3
  const auto profile = chowrank::severiBrauerPipelineRanks(
      {4, {2}}, RankProfile::projectiveSpace(3));
  CHECK(profile.ranks() == ints({1, 1, 2, 1, 1}));
  // first index 1 is rejected: no division step is needed there
  CHECK_THROWS_AS(
      chowrank::severiBrauerPipelineRanks({4, {1, 2}}, RankProfile::projectiveSpace(3)),
      std::invalid_argument);
}

TEST_CASE("pipeline matches direct profiles for all split inputs") {
  for (int n = 2; n <= 6; ++n) {
    const auto sb = RankProfile::projectiveSpace(n - 1);
    for (unsigned mask = 2; mask < (1u << n); mask += 2) {  // lists excluding 1
      std::vector<int> indices;
      for (int i = 1; i <= n; ++i) {
        if (mask & (1u << (i - 1))) indices.push_back(i);
      }
      const FlagSpec spec{n, indices};
      const auto direct = chowrank::pushThroughBase(
          chowrank::flagBundleCoefficients(spec), RankProfile::point());
      CAPTURE(n);
      CHECK(chowrank::severiBrauerPipelineRanks(spec, sb) == direct);
    }
  }
}

TEST_CASE("pipeline rejects profiles that are not fibration ranks") {
  // a base profile that cannot come from a projective fibration
  CHECK_THROWS_AS(
      chowrank::severiBrauerPipelineRanks({4, {2}}, RankProfile(ints({1, 0, 0, 7}))),
      std::runtime_error);
}

TEST_CASE("torsion-freeness transfer") {
  const auto coeffs = chowrank::flagBundleCoefficients({4, {2}});  // 1,1,2,1,1
  // base P^2 with a (hypothetical) torsion codimension 1
  const std::vector<bool> base = {true, false, true};
  const auto report = chowrank::torsionFreeTransfer(base, coeffs, 6);
  CHECK(report.torsionFree[0] == true);    // only CH^0(base)
  CHECK(report.torsionFree[1] == false);   // CH^1(base) appears
  CHECK(report.torsionFree[5] == false);   // shift 4 hits CH^1(base)
  CHECK(report.torsionFree[6] == true);    // beyond the base dimension
  // every failing codimension is witnessed by a bad summand
  for (int k = 0; k <= 6; ++k) {
    bool sawBad = false;
    for (const auto& s : report.summands[k]) {
      if (!s.baseTorsionFree) sawBad = true;
    }
    CHECK(report.torsionFree[k] == !sawBad);
  }
}
