#pragma once

#include <vector>

#include "chowflag/bigint.hpp"

namespace chowflag::partitions {

// Bounds on a partition: at most maxParts parts, each part at most maxPart.
struct PartitionConstraint {
  int maxParts = 1;
  int maxPart = 1;
};

struct BoundedPartition {
  std::vector<int> parts;  // nonincreasing, nonzero entries only
  PartitionConstraint bound;

  int weight() const;
};

// Finitely supported function N -> N, stored densely from index 0.
class CountDistribution {
 public:
  CountDistribution() = default;
  explicit CountDistribution(std::vector<BigInt> values);

  // delta_0: 1 at 0, 0 elsewhere. Unit of convolution.
  static CountDistribution unit();

  const BigInt& at(int i) const;  // 0 outside the stored support
  int supportBound() const;       // values beyond this index are all zero
  const std::vector<BigInt>& values() const { return values_; }

  bool operator==(const CountDistribution&) const = default;

 private:
  std::vector<BigInt> values_;
  void trim();
};

CountDistribution convolve(const CountDistribution& f, const CountDistribution& g);

// Truncated element of Z[[x,y]]; x tracks the part count, y the weight.
class BivariateSeries {
 public:
  BivariateSeries(int maxPartCount, int maxWeight);

  const BigInt& coefficient(int m, int n) const;
  BigInt& coefficient(int m, int n);
  int maxPartCount() const { return mMax_; }
  int maxWeight() const { return nMax_; }

 private:
  int mMax_, nMax_;
  std::vector<BigInt> c_;
};

// Number of partitions of n into exactly m parts, each in [1, A].
BigInt countStrict(int n, int m, int A);

// Number of partitions of n into at most m parts, each in [1, A].
// countAtMost(0, m, A) = 1 (the empty partition).
BigInt countAtMost(int n, int m, int A);

// Every partition of n with at most c.maxParts parts each <= c.maxPart,
// in lexicographically decreasing order.
std::vector<BoundedPartition> enumerateBounded(int n, PartitionConstraint c);

// Truncation of prod_{i=1..A} 1/(1 - x y^i). Coefficient of x^m y^n is
// countStrict(n, m, A); the constant term is 1.
BivariateSeries generatingSeries(int A, int maxPartCount, int maxWeight);

// i -> countAtMost(i, c.maxParts, c.maxPart), truncated at maxWeight.
CountDistribution piDistribution(PartitionConstraint c, int maxWeight);

// Number of ways to split n across the blocks so that each share admits a
// bounded partition per its block; computed by convolution.
BigInt countMulti(int n, const std::vector<PartitionConstraint>& constraints);

// Same count by direct enumeration of the per-block partitions. Oracle for
// countMulti; quadratically slower, use only on small inputs.
BigInt countMultiBruteForce(int n, const std::vector<PartitionConstraint>& constraints);

}  // namespace chowflag::partitions
