#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chowflag/bigint.hpp"

namespace chowflag::schur {

// Nonincreasing list of nonnegative parts; trailing zeros are significant
// (they fix the width of the determinant).
struct Partition {
  std::vector<int> parts;

  int width() const { return static_cast<int>(parts.size()); }
  int weight() const;
};

// Exponent vector over the variables c_1, c_2, ...; index 0 is c_1.
// Stored with trailing zeros stripped.
using Monomial = std::vector<int>;

int monomialWeight(const Monomial& m);

// Graded-lexicographic: weighted degree first, then lex on exponents.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Integer polynomial in c_1, c_2, ... where c_i has weight i.
class GradedPolynomial {
 public:
  GradedPolynomial() = default;

  static GradedPolynomial constant(BigInt value);
  static GradedPolynomial variable(int i);  // c_i, i >= 1

  GradedPolynomial operator+(const GradedPolynomial&) const;
  GradedPolynomial operator-(const GradedPolynomial&) const;
  GradedPolynomial operator*(const GradedPolynomial&) const;
  bool operator==(const GradedPolynomial&) const = default;

  bool isZero() const { return terms_.empty(); }
  const std::map<Monomial, BigInt, GradedLexLess>& terms() const { return terms_; }

  // Drops every monomial of weighted degree above the bound, from now on.
  void setTruncationDegree(int degree);
  std::optional<int> truncationDegree() const { return truncation_; }

  std::string toString() const;  // highest-degree terms first

 private:
  std::map<Monomial, BigInt, GradedLexLess> terms_;
  std::optional<int> truncation_;
  void addTerm(Monomial m, BigInt coeff);
  friend GradedPolynomial schurDeterminant(const Partition&);
};

// det(c_{lambda_i + j - i}) expanded exactly over the integers, with
// c_0 = 1 and c_k = 0 for k < 0. Homogeneous of weighted degree |lambda|.
GradedPolynomial schurDeterminant(const Partition& lambda);

// Common weighted degree when p is homogeneous, nothing otherwise.
std::optional<int> homogeneityCheck(const GradedPolynomial& p);

// All partitions in the d x (n-d) box, grouped by weight.
struct BasisDescriptor {
  int ambientRank = 0;  // n
  int subRank = 0;      // d
  std::vector<std::vector<Partition>> byWeight;  // index = weight, 0..d(n-d)

  BigInt totalCount() const;
};

BasisDescriptor enumerateBasis(int n, int d);

}  // namespace chowflag::schur
