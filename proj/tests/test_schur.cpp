#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "chowflag/partitions.hpp"
#include "chowflag/schur.hpp"

using namespace chowflag;

namespace {

// Independent Leibniz-formula oracle: sum over all permutations with an
// explicitly computed sign, using a plain exponent-vector map and no code
// shared with the production cofactor expansion.
using OracleMonomial = std::vector<int>;
using OraclePoly = std::map<OracleMonomial, long long>;

void oracleStrip(OracleMonomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

OraclePoly leibnizSchur(const std::vector<int>& lambda) {
  const int d = static_cast<int>(lambda.size());
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  OraclePoly result;
  do {
    // sign by counting inversions
    int inversions = 0;
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        if (perm[i] > perm[j]) ++inversions;
      }
    }
    // product over rows i of entry c_{lambda[i] + perm[i] - i}
    OracleMonomial mono;
    bool zero = false;
    for (int i = 0; i < d && !zero; ++i) {
      const int k = lambda[i] + perm[i] - i;
      if (k < 0) zero = true;
      else if (k > 0) {
        if (static_cast<int>(mono.size()) < k) mono.resize(k, 0);
        ++mono[k - 1];
      }
    }
    if (!zero) {
      oracleStrip(mono);
      result[mono] += inversions % 2 == 0 ? 1 : -1;
      if (result[mono] == 0) result.erase(mono);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

OraclePoly toOracle(const schur::GradedPolynomial& p) {
  OraclePoly out;
  for (const auto& [m, c] : p.terms()) {
    out[m] = static_cast<long long>(c);
  }
  return out;
}

}  // namespace

TEST_CASE("known small Schur determinants") {
  using schur::GradedPolynomial;
  const auto c1 = GradedPolynomial::variable(1);
  const auto c2 = GradedPolynomial::variable(2);
  const auto c3 = GradedPolynomial::variable(3);

  CHECK(schur::schurDeterminant({{1}}) == c1);
  CHECK(schur::schurDeterminant({{2}}) == c2);
  CHECK(schur::schurDeterminant({{1, 1}}) == c1 * c1 - c2);
  CHECK(schur::schurDeterminant({{2, 1}}) == c1 * c2 - c3);
  CHECK(schur::schurDeterminant({{1, 1, 1}}) ==
        c1 * c1 * c1 - c1 * c2 - (c2 * c1 - c3));
  // the empty-shape determinant is the constant 1
  CHECK(schur::schurDeterminant({{0}}) == GradedPolynomial::constant(1));
}

TEST_CASE("determinant agrees with the Leibniz-formula oracle") {
  const auto basis = schur::enumerateBasis(8, 4);  // 4 x 4 box
  for (const auto& bucket : basis.byWeight) {
    for (const auto& lambda : bucket) {
      CAPTURE(lambda.weight());
      CHECK(toOracle(schur::schurDeterminant(lambda)) == leibnizSchur(lambda.parts));
    }
  }
}

TEST_CASE("determinants are homogeneous of the partition weight") {
  const auto basis = schur::enumerateBasis(7, 3);
  for (const auto& bucket : basis.byWeight) {
    for (const auto& lambda : bucket) {
      const auto poly = schur::schurDeterminant(lambda);
      CHECK(!poly.isZero());
      const auto degree = schur::homogeneityCheck(poly);
      REQUIRE(degree.has_value());
      CHECK(*degree == lambda.weight());
    }
  }
}

TEST_CASE("zero padding does not change the determinant") {
  const auto basis = schur::enumerateBasis(6, 3);
  for (const auto& bucket : basis.byWeight) {
    for (const auto& lambda : bucket) {
      schur::Partition once = lambda;
      once.parts.push_back(0);
      schur::Partition twice = once;
      twice.parts.push_back(0);
      CHECK(schur::schurDeterminant(once) == schur::schurDeterminant(lambda));
      CHECK(schur::schurDeterminant(twice) == schur::schurDeterminant(lambda));
    }
  }
}

TEST_CASE("homogeneity check flags mixed-degree polynomials") {
  const auto c1 = schur::GradedPolynomial::variable(1);
  const auto c2 = schur::GradedPolynomial::variable(2);
  CHECK(schur::homogeneityCheck(c1 + c2) == std::nullopt);
  CHECK(schur::homogeneityCheck(schur::GradedPolynomial{}) == 0);
  CHECK(schur::homogeneityCheck(schur::GradedPolynomial::constant(5)) == 0);
}

TEST_CASE("graded-lex term order") {
  const auto c1 = schur::GradedPolynomial::variable(1);
  const auto c2 = schur::GradedPolynomial::variable(2);
  const auto p = c1 * c1 + c2 + c1;
  // weights: c1 -> 1, then c1^2 and c2 -> 2, with c2 > c1^2 in lex on
  // exponent vectors read low-to-high index
  std::vector<int> weights;
  for (const auto& [m, c] : p.terms()) weights.push_back(schur::monomialWeight(m));
  CHECK(std::is_sorted(weights.begin(), weights.end()));
}

TEST_CASE("box basis counts and weights") {
  for (int n = 1; n <= 10; ++n) {
    for (int d = 1; d <= n; ++d) {
      const auto basis = schur::enumerateBasis(n, d);
      BigInt binom = 1;
      for (int i = 0; i < d; ++i) binom = binom * (n - i) / (i + 1);
      CHECK(basis.totalCount() == binom);
      CHECK(static_cast<int>(basis.byWeight.size()) == d * (n - d) + 1);
      for (int k = 0; k < static_cast<int>(basis.byWeight.size()); ++k) {
        const BigInt expected =
            k == 0 ? BigInt(1)
                   : (d == n ? BigInt(0) : partitions::countAtMost(k, d, n - d));
        CHECK(BigInt(basis.byWeight[k].size()) == expected);
        for (const auto& lambda : basis.byWeight[k]) {
          CHECK(lambda.weight() == k);
          CHECK(lambda.width() == d);
          for (int part : lambda.parts) CHECK(part <= n - d);
        }
      }
    }
  }
}

TEST_CASE("truncation drops high-degree terms during multiplication") {
  auto p = schur::GradedPolynomial::variable(1) + schur::GradedPolynomial::variable(2);
  p.setTruncationDegree(2);
  const auto q = p * p;  // degree-3 and degree-4 terms must vanish
  for (const auto& [m, c] : q.terms()) {
    CHECK(schur::monomialWeight(m) <= 2);
  }
  CHECK(!q.isZero());
}

TEST_CASE("string rendering") {
  const auto c1 = schur::GradedPolynomial::variable(1);
  const auto c2 = schur::GradedPolynomial::variable(2);
  CHECK((c1 * c1 - c2).toString() == "c1^2 - c2");
  CHECK(schur::GradedPolynomial{}.toString() == "0");
  CHECK(schur::GradedPolynomial::constant(-3).toString() == "-3");
}
