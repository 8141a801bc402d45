#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace chowflag::fq {

// Thrown when a subspace/ideal enumeration would exceed the configured
// work budget (see enumerationBudget below).
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(long long budget)
      : std::runtime_error("enumeration budget exceeded"), budget(budget) {}
  long long budget;
};

// Effective enumeration budget: the CHOWFLAG_ENUM_BUDGET environment
// variable when set to a nonnegative integer, otherwise 1'000'000.
long long enumerationBudget();

// Prime field F_p for small p. Elements are canonical residues 0..p-1.
class Field {
 public:
  explicit Field(int p);

  int order() const { return p_; }
  int add(int a, int b) const { return (a + b) % p_; }
  int sub(int a, int b) const { return (a - b % p_ + p_) % p_; }
  int neg(int a) const { return (p_ - a % p_) % p_; }
  int mul(int a, int b) const { return (a * b) % p_; }
  int inv(int a) const;

 private:
  int p_;
};

using Vec = std::vector<int>;  // coordinates in the standard basis

// Row span in reduced row echelon form: a canonical representative of a
// subspace of F_q^n. Vectors are treated as columns v of length n; the
// rows here are the spanning set written out coordinate-wise.
class Subspace {
 public:
  Subspace(const Field& field, int ambientDim);  // zero subspace

  static Subspace span(const Field& field, int ambientDim,
                       const std::vector<Vec>& vectors);
  static Subspace full(const Field& field, int ambientDim);

  int ambientDim() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& basis() const { return rows_; }  // RREF rows
  const Field& field() const { return *field_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Remainder of v after elimination by the RREF rows: the canonical
  // representative of v + (this subspace), supported on non-pivot columns.
  Vec reduce(const Vec& v) const;
  // Coordinates of v in the RREF basis; throws if v is outside.
  Vec coordinatesOf(const Vec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  // Orthogonal complement under the standard bilinear form sum_i x_i y_i.
  Subspace dual() const;

  // Indices e_j whose images complete the RREF basis to a basis of the
  // ambient space (the non-pivot columns).
  std::vector<int> complementUnitVectors() const;

  // Canonical form makes equality a row-by-row comparison.
  bool operator==(const Subspace& other) const {
    return n_ == other.n_ && rows_ == other.rows_;
  }
  bool operator<(const Subspace& other) const { return rows_ < other.rows_; }

 private:
  const Field* field_;
  int n_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;  // pivot column of each row
};

// In-place reduction to RREF; returns the pivot columns.
std::vector<int> rowReduce(const Field& field, std::vector<Vec>& rows);

// Basis of {v : M v = 0} for an m x n matrix given by rows.
std::vector<Vec> kernelBasis(const Field& field, const std::vector<Vec>& matrixRows,
                             int cols);

// All subspaces of F_q^n of dimension d, visited in a deterministic order.
// Each candidate counts one unit of work against the budget.
void enumerateSubspaces(const Field& field, int n, int d,
                        const std::function<void(const Subspace&)>& visit);

std::vector<Subspace> allSubspaces(const Field& field, int n, int d);

}  // namespace chowflag::fq
