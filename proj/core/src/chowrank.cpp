#include "chowflag/chowrank.hpp"

#include <stdexcept>

namespace chowflag::chowrank {

namespace {

const BigInt kZero = 0;

// Degenerate blocks (0, A) or (m, 0) contribute the unit distribution and
// are skipped; they arise only at boundary index sequences.
partitions::CountDistribution distributionForBlocks(
    const std::vector<std::pair<int, int>>& blocks) {
  long long bound = 0;
  for (const auto& [m, A] : blocks) {
    if (m > 0 && A > 0) bound += static_cast<long long>(m) * A;
  }
  auto dist = partitions::CountDistribution::unit();
  for (const auto& [m, A] : blocks) {
    if (m <= 0 || A <= 0) continue;
    dist = convolve(dist, partitions::piDistribution({m, A}, static_cast<int>(bound)));
  }
  return dist;
}

}  // namespace

void validateSpec(const FlagSpec& spec) {
  if (spec.degree < 1) throw std::invalid_argument("degree must be positive");
  if (spec.indices.empty()) throw std::invalid_argument("index sequence must be nonempty");
  int prev = 0;
  for (int i : spec.indices) {
    if (i <= prev) throw std::invalid_argument("indices must be strictly increasing");
    prev = i;
  }
  if (prev > spec.degree) throw std::invalid_argument("indices must not exceed the degree");
}

RankProfile::RankProfile(std::vector<BigInt> ranks) : ranks_(std::move(ranks)) {
  while (!ranks_.empty() && ranks_.back() == 0) ranks_.pop_back();
}

RankProfile RankProfile::point() { return RankProfile({BigInt(1)}); }

RankProfile RankProfile::projectiveSpace(int dim) {
  if (dim < 0) throw std::invalid_argument("dimension must be nonnegative");
  return RankProfile(std::vector<BigInt>(dim + 1, BigInt(1)));
}

const BigInt& RankProfile::at(int k) const {
  if (k < 0 || k >= static_cast<int>(ranks_.size())) return kZero;
  return ranks_[k];
}

BigInt RankProfile::total() const {
  BigInt t = 0;
  for (const auto& r : ranks_) t += r;
  return t;
}

FibrationCoefficients flagBundleCoefficients(const FlagSpec& spec) {
  validateSpec(spec);
  std::vector<std::pair<int, int>> blocks;
  int prev = 0;
  for (int i : spec.indices) {
    blocks.emplace_back(i - prev, spec.degree - i);
    prev = i;
  }
  return {distributionForBlocks(blocks), "flag-bundle-decomposition", blocks};
}

FibrationCoefficients twistedCaseFirstIndexOne(const FlagSpec& spec) {
  validateSpec(spec);
  if (spec.indices.front() != 1) {
    throw std::invalid_argument("first index must be 1 for this decomposition");
  }
  const int r = static_cast<int>(spec.indices.size());
  // i_{r+1} = n; index i_1 = 1 contributes no block.
  std::vector<std::pair<int, int>> blocks;
  auto indexAt = [&](int j) {  // 1-based, with the appended degree
    return j <= r ? spec.indices[j - 1] : spec.degree;
  };
  for (int j = r; j >= 2; --j) {
    blocks.emplace_back(indexAt(j + 1) - indexAt(j), indexAt(j) - 1);
  }
  return {distributionForBlocks(blocks), "first-index-one-decomposition", blocks};
}

FibrationCoefficients twistedCaseGeneral(const FlagSpec& spec, int s,
                                         bool gcdHypothesisAsserted) {
  validateSpec(spec);
  const int r = static_cast<int>(spec.indices.size());
  if (s < 1 || s > r) throw std::invalid_argument("pivot position out of range");
  const int is = spec.indices[s - 1];
  std::vector<std::pair<int, int>> blocks;
  int prev = 0;
  for (int j = 1; j < s; ++j) {  // factor below the pivot, over rank i_s
    const int ij = spec.indices[j - 1];
    blocks.emplace_back(ij - prev, is - ij);
    prev = ij;
  }
  prev = is;
  for (int j = s + 1; j <= r; ++j) {  // factor above the pivot, over rank n - i_s
    const int ij = spec.indices[j - 1];
    blocks.emplace_back(ij - prev, spec.degree - ij);
    prev = ij;
  }
  std::string label = "general-position-decomposition";
  label += gcdHypothesisAsserted ? " (gcd hypothesis asserted)"
                                 : " (gcd hypothesis not asserted)";
  return {distributionForBlocks(blocks), label, blocks};
}

FibrationCoefficients productFibrationCoefficients(const FlagSpec& minusSpec,
                                                   const FlagSpec& plusSpec) {
  auto minus = flagBundleCoefficients(minusSpec);
  auto plus = flagBundleCoefficients(plusSpec);
  std::vector<std::pair<int, int>> blocks = minus.blocks;
  blocks.insert(blocks.end(), plus.blocks.begin(), plus.blocks.end());
  return {distributionForBlocks(blocks), "product-fibration-decomposition", blocks};
}

RankProfile pushThroughBase(const FibrationCoefficients& coeffs,
                            const RankProfile& base) {
  const int top = coeffs.coefficients.supportBound() + base.dimensionBound();
  if (top < 0) return RankProfile{};
  std::vector<BigInt> out(top + 1);
  for (int k = 0; k <= top; ++k) {
    for (int i = 0; i <= std::min(k, coeffs.coefficients.supportBound()); ++i) {
      out[k] += coeffs.coefficients.at(i) * base.at(k - i);
    }
  }
  return RankProfile(std::move(out));
}

RankProfile severiBrauerPipelineRanks(const FlagSpec& spec,
                                      const RankProfile& base) {
  validateSpec(spec);
  const int i1 = spec.indices.front();
  if (i1 <= 1) {
    throw std::invalid_argument(
        "first index must exceed 1; use the first-index-one decomposition directly");
  }
  FlagSpec extended{spec.degree, {1}};
  extended.indices.insert(extended.indices.end(), spec.indices.begin(),
                          spec.indices.end());
  const RankProfile upstairs =
      pushThroughBase(twistedCaseFirstIndexOne(extended), base);

  // The forgetful map from the extended flag variety is a projective
  // fibration with fiber of dimension i_1 - 1; its profile is the product
  // of the target profile with 1 + t + ... + t^{i_1 - 1}. Undo that
  // product; any negative or leftover coefficient means the inputs were
  // not the ranks of such a fibration.
  const auto& y = upstairs.ranks();
  const int outLen = static_cast<int>(y.size()) - (i1 - 1);
  if (outLen <= 0) throw std::runtime_error("profile shorter than the fiber");
  std::vector<BigInt> x(y.size());
  for (int k = 0; k < static_cast<int>(y.size()); ++k) {
    BigInt v = y[k];
    for (int j = 1; j < i1; ++j) {
      if (k - j >= 0) v -= x[k - j];
    }
    if (k < outLen) {
      if (v < 0) throw std::runtime_error("negative rank in exact-sequence pipeline");
      x[k] = v;
    } else if (v != 0) {
      throw std::runtime_error("inconsistent profile in exact-sequence pipeline");
    }
  }
  x.resize(outLen);
  return RankProfile(std::move(x));
}

TorsionReport torsionFreeTransfer(const std::vector<bool>& baseTorsionFree,
                                  const FibrationCoefficients& coeffs, int k0) {
  TorsionReport report;
  report.torsionFree.resize(k0 + 1, true);
  report.summands.resize(k0 + 1);
  const int baseTop = static_cast<int>(baseTorsionFree.size()) - 1;
  for (int k = 0; k <= k0; ++k) {
    for (int i = 0; i <= std::min(k, coeffs.coefficients.supportBound()); ++i) {
      if (coeffs.coefficients.at(i) == 0) continue;
      const int baseCodim = k - i;
      if (baseCodim > baseTop) continue;  // CH of the base vanishes there
      const bool ok = baseTorsionFree[baseCodim];
      report.summands[k].push_back(
          {i, coeffs.coefficients.at(i), baseCodim, ok});
      if (!ok) report.torsionFree[k] = false;
    }
  }
  return report;
}

}  // namespace chowflag::chowrank
