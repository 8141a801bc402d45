#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chowflag/partitions.hpp"

using namespace chowflag;
using partitions::PartitionConstraint;

namespace {

// Independent oracle: count partitions of n into at most m parts, each at
// most A, by explicit descending enumeration with no sharing with the
// production recurrence.
long long slowCount(int n, int m, int A, int maxAllowed) {
  if (n == 0) return 1;
  if (m == 0 || maxAllowed == 0) return 0;
  long long total = 0;
  for (int first = std::min({n, A, maxAllowed}); first >= 1; --first) {
    total += slowCount(n - first, m - 1, A, first);
  }
  return total;
}

long long slowCount(int n, int m, int A) { return slowCount(n, m, A, n); }

}  // namespace

TEST_CASE("small bounded partition counts") {
  // partitions of 4 into exactly 2 parts each at most 3: 3+1, 2+2
  CHECK(partitions::countStrict(4, 2, 3) == 2);
  // at most 2 parts: adds 4 -> none (4 > 3), so still 2
  CHECK(partitions::countAtMost(4, 2, 3) == 2);
  CHECK(partitions::countAtMost(0, 3, 3) == 1);   // the empty partition
  CHECK(partitions::countStrict(0, 3, 3) == 0);   // no partition with 3 parts
  CHECK(partitions::countAtMost(5, 1, 5) == 1);
  CHECK(partitions::countAtMost(5, 1, 4) == 0);
  CHECK(partitions::countAtMost(3, 5, 1) == 1);   // 1+1+1
  CHECK(partitions::countAtMost(6, 5, 1) == 0);
}

TEST_CASE("counts agree with an independent enumeration oracle") {
  for (int n = 0; n <= 14; ++n) {
    for (int m = 1; m <= 6; ++m) {
      for (int A = 1; A <= 6; ++A) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(A);
        CHECK(partitions::countAtMost(n, m, A) == BigInt(slowCount(n, m, A)));
      }
    }
  }
}

TEST_CASE("conjugation symmetry") {
  // transposing Young diagrams swaps the two bounds
  for (int n = 0; n <= 16; ++n) {
    for (int m = 1; m <= 5; ++m) {
      for (int A = 1; A <= 5; ++A) {
        CHECK(partitions::countAtMost(n, m, A) == partitions::countAtMost(n, A, m));
      }
    }
  }
}

TEST_CASE("recurrence on the interior of the domain") {
  for (int n = 3; n <= 20; ++n) {
    for (int m = 2; m < n; ++m) {
      for (int A = 2; A <= 8; ++A) {
        CHECK(partitions::countAtMost(n, m, A) ==
              partitions::countAtMost(n, m - 1, A) +
                  partitions::countAtMost(n - m, m, A - 1));
      }
    }
  }
}

TEST_CASE("enumeration produces valid, distinct, complete output") {
  const auto all = partitions::enumerateBounded(8, {3, 4});
  CHECK(BigInt(all.size()) == partitions::countAtMost(8, 3, 4));
  for (const auto& p : all) {
    CHECK(p.weight() == 8);
    CHECK(static_cast<int>(p.parts.size()) <= 3);
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
      CHECK(p.parts[i] >= 1);
      CHECK(p.parts[i] <= 4);
      if (i > 0) CHECK(p.parts[i] <= p.parts[i - 1]);
    }
  }
  for (std::size_t i = 1; i < all.size(); ++i) {
    CHECK(all[i - 1].parts != all[i].parts);
  }
}

TEST_CASE("weight-zero enumeration yields the empty partition") {
  const auto all = partitions::enumerateBounded(0, {2, 2});
  REQUIRE(all.size() == 1);
  CHECK(all[0].parts.empty());
}

TEST_CASE("generating series matches exact-part counts") {
  for (int A = 1; A <= 5; ++A) {
    const auto series = partitions::generatingSeries(A, 6, 18);
    CHECK(series.coefficient(0, 0) == 1);
    for (int n = 1; n <= 18; ++n) CHECK(series.coefficient(0, n) == 0);
    for (int m = 1; m <= 6; ++m) {
      for (int n = 0; n <= 18; ++n) {
        CAPTURE(A);
        CAPTURE(m);
        CAPTURE(n);
        const BigInt expected = n == 0 ? BigInt(0) : partitions::countStrict(n, m, A);
        CHECK(series.coefficient(m, n) == expected);
      }
    }
  }
}

TEST_CASE("distribution algebra: unit and convolution") {
  const auto unit = partitions::CountDistribution::unit();
  const auto pi = partitions::piDistribution({2, 3}, 10);
  CHECK(convolve(unit, pi).values() == pi.values());
  CHECK(convolve(pi, unit).values() == pi.values());
  // commutativity
  const auto rho = partitions::piDistribution({1, 2}, 10);
  CHECK(convolve(pi, rho).values() == convolve(rho, pi).values());
  // values are the at-most counts
  for (int i = 0; i <= pi.supportBound(); ++i) {
    CHECK(pi.at(i) == partitions::countAtMost(i, 2, 3));
  }
  CHECK(pi.supportBound() == 6);  // capped at m*A
}

TEST_CASE("multi-block counts agree with brute force") {
  const std::vector<std::vector<PartitionConstraint>> families = {
      {{1, 1}},
      {{2, 3}},
      {{1, 2}, {2, 1}},
      {{2, 2}, {3, 1}, {1, 3}},
      {{4, 4}, {2, 2}},
  };
  for (const auto& f : families) {
    for (int n = 0; n <= 12; ++n) {
      CAPTURE(n);
      CHECK(partitions::countMulti(n, f) == partitions::countMultiBruteForce(n, f));
    }
  }
}

TEST_CASE("invalid bounds are rejected") {
  CHECK_THROWS_AS(partitions::countAtMost(3, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(partitions::countAtMost(3, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(partitions::countAtMost(-1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(partitions::countMulti(3, {}), std::invalid_argument);
}
