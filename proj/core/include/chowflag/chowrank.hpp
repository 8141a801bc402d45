#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chowflag/bigint.hpp"
#include "chowflag/partitions.hpp"

namespace chowflag::chowrank {

// Degree-n algebra (or rank-n bundle) together with the strictly
// increasing index sequence 1 <= i_1 < ... < i_r <= n of a flag variety.
struct FlagSpec {
  int degree = 0;
  std::vector<int> indices;
};

void validateSpec(const FlagSpec& spec);  // throws std::invalid_argument

// Free ranks of a graded Chow group, indexed by codimension from 0.
class RankProfile {
 public:
  RankProfile() = default;
  explicit RankProfile(std::vector<BigInt> ranks);

  static RankProfile point();                       // rank 1 in codimension 0
  static RankProfile projectiveSpace(int dim);      // dim+1 ones

  const BigInt& at(int k) const;  // 0 outside the stored range
  int dimensionBound() const { return static_cast<int>(ranks_.size()) - 1; }
  const std::vector<BigInt>& ranks() const { return ranks_; }
  BigInt total() const;

  bool operator==(const RankProfile&) const = default;

 private:
  std::vector<BigInt> ranks_;
};

// Multiplicities n_i of a direct-sum decomposition
// CH^k(total) = (+)_i CH^{k-i}(base)^{n_i}. Always n_0 = 1.
struct FibrationCoefficients {
  partitions::CountDistribution coefficients;
  std::string provenanceLabel;
  // Blocks (maxParts, maxPart) the coefficients were convolved from,
  // degenerate blocks included for reporting.
  std::vector<std::pair<int, int>> blocks;
};

// Untwisted flag bundle of a rank-n vector bundle: blocks
// (i_s - i_{s-1}, n - i_s) with i_0 = 0.
FibrationCoefficients flagBundleCoefficients(const FlagSpec& spec);

// Twisted case with i_1 = 1: decomposition over the Severi-Brauer base,
// blocks (i_{s+1} - i_s, i_s - 1) for s = r..2, with i_{r+1} = n.
// A bare index list [1] yields the unit distribution.
FibrationCoefficients twistedCaseFirstIndexOne(const FlagSpec& spec);

// Twisted case over the generalized Severi-Brauer base at position s
// (1-based). The coprimality hypothesis is the caller's to assert; pass
// gcdHypothesisAsserted so the provenance records it.
FibrationCoefficients twistedCaseGeneral(const FlagSpec& spec, int s,
                                         bool gcdHypothesisAsserted = false);

// Product of two flag fibrations over a common base: the block lists of
// both factors, concatenated.
FibrationCoefficients productFibrationCoefficients(const FlagSpec& minusSpec,
                                                   const FlagSpec& plusSpec);

// k -> sum_i n_i * base(k - i).
RankProfile pushThroughBase(const FibrationCoefficients& coeffs,
                            const RankProfile& base);

// Ranks of Flag(i_1..i_r; A) with i_1 > 1 from the profile of SB(A):
// push the coefficients of Flag(1, i_1, ..., i_r; A) through the base,
// then strip the projective fiber of the forgetful map, i.e. divide the
// profile polynomial by 1 + t + ... + t^{i_1 - 1}. Throws on a negative
// or non-integral division step (would indicate a coefficient bug).
RankProfile severiBrauerPipelineRanks(const FlagSpec& spec,
                                      const RankProfile& base);

struct TorsionSummand {
  int shift = 0;            // the i of CH^{k-i}(base)
  BigInt multiplicity;      // n_i
  int baseCodim = 0;        // k - i
  bool baseTorsionFree = true;
};

struct TorsionReport {
  std::vector<bool> torsionFree;                      // per codimension 0..k0
  std::vector<std::vector<TorsionSummand>> summands;  // provenance per codim
};

// Transfers per-codimension torsion-freeness of the base through the
// direct-sum decomposition: the total space is torsion-free at k iff
// every summand CH^{k-i}(base) with n_i > 0 is.
TorsionReport torsionFreeTransfer(const std::vector<bool>& baseTorsionFree,
                                  const FibrationCoefficients& coeffs, int k0);

}  // namespace chowflag::chowrank
