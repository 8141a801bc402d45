#include "chowflag/partitions.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace chowflag::partitions {

namespace {

const BigInt kZero = 0;

std::uint64_t memoKey(int n, int m, int A) {
  return (std::uint64_t(n) << 40) | (std::uint64_t(m) << 20) | std::uint64_t(A);
}

// Recurrence with the bound caps m <- min(m, n), A <- min(A, n) applied
// before memoization. Accepts m = 0 or A = 0 (no nonempty partition fits).
BigInt countAtMostImpl(int n, int m, int A) {
  if (n == 0) return 1;
  if (m <= 0 || A <= 0) return 0;
  if (m > n) m = n;
  if (A > n) A = n;
  if (A == 1) return n <= m ? 1 : 0;
  if (m == 1) return n <= A ? 1 : 0;

  static std::unordered_map<std::uint64_t, BigInt> memo;
  static std::mutex memoMutex;
  const std::uint64_t key = memoKey(n, m, A);
  {
    std::scoped_lock lock(memoMutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  BigInt result = countAtMostImpl(n, m - 1, A) + countAtMostImpl(n - m, m, A - 1);
  {
    std::scoped_lock lock(memoMutex);
    memo.emplace(key, result);
  }
  return result;
}

void requireBounds(int n, int m, int A) {
  if (n < 0) throw std::invalid_argument("partition weight must be nonnegative");
  if (m < 1 || A < 1) throw std::invalid_argument("partition bounds must be positive");
}

void enumerateRec(int n, int slots, int maxPart, std::vector<int>& cur,
                  const PartitionConstraint& c, std::vector<BoundedPartition>& out) {
  if (n == 0) {
    out.push_back({cur, c});
    return;
  }
  if (slots == 0) return;
  for (int y = std::min(maxPart, n); y >= 1; --y) {
    if (static_cast<long long>(y) * slots < n) break;  // cannot reach n anymore
    cur.push_back(y);
    enumerateRec(n - y, slots - 1, y, cur, c, out);
    cur.pop_back();
  }
}

// sizes[idx][w] holds the enumerated number of weight-w partitions for
// block idx; the recursion splits the weight across the blocks.
BigInt bruteForceRec(int remaining, std::size_t idx,
                     const std::vector<std::vector<long long>>& sizes) {
  if (idx == sizes.size()) return remaining == 0 ? 1 : 0;
  BigInt total = 0;
  for (int w = 0; w <= remaining; ++w) {
    if (sizes[idx][w] == 0) continue;
    total += BigInt(sizes[idx][w]) * bruteForceRec(remaining - w, idx + 1, sizes);
  }
  return total;
}

}  // namespace

int BoundedPartition::weight() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

CountDistribution::CountDistribution(std::vector<BigInt> values)
    : values_(std::move(values)) {
  trim();
}

CountDistribution CountDistribution::unit() {
  return CountDistribution({BigInt(1)});
}

const BigInt& CountDistribution::at(int i) const {
  if (i < 0 || i >= static_cast<int>(values_.size())) return kZero;
  return values_[i];
}

int CountDistribution::supportBound() const {
  return static_cast<int>(values_.size()) - 1;
}

void CountDistribution::trim() {
  while (!values_.empty() && values_.back() == 0) values_.pop_back();
}

CountDistribution convolve(const CountDistribution& f, const CountDistribution& g) {
  if (f.values().empty() || g.values().empty()) return CountDistribution{};
  std::vector<BigInt> out(f.values().size() + g.values().size() - 1);
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    if (f.values()[i] == 0) continue;
    for (std::size_t j = 0; j < g.values().size(); ++j) {
      out[i + j] += f.values()[i] * g.values()[j];
    }
  }
  return CountDistribution(std::move(out));
}

BivariateSeries::BivariateSeries(int maxPartCount, int maxWeight)
    : mMax_(maxPartCount), nMax_(maxWeight),
      c_(static_cast<std::size_t>(maxPartCount + 1) * (maxWeight + 1)) {
  if (maxPartCount < 0 || maxWeight < 0) {
    throw std::invalid_argument("series truncation bounds must be nonnegative");
  }
}

const BigInt& BivariateSeries::coefficient(int m, int n) const {
  if (m < 0 || n < 0 || m > mMax_ || n > nMax_) return kZero;
  return c_[static_cast<std::size_t>(m) * (nMax_ + 1) + n];
}

BigInt& BivariateSeries::coefficient(int m, int n) {
  return c_[static_cast<std::size_t>(m) * (nMax_ + 1) + n];
}

BigInt countAtMost(int n, int m, int A) {
  requireBounds(n, m, A);
  return countAtMostImpl(n, m, A);
}

BigInt countStrict(int n, int m, int A) {
  requireBounds(n, m, A);
  if (n == 0) return 0;  // a strict partition has m >= 1 nonzero parts
  return countAtMostImpl(n, m, A) - countAtMostImpl(n, m - 1, A);
}

std::vector<BoundedPartition> enumerateBounded(int n, PartitionConstraint c) {
  requireBounds(n, c.maxParts, c.maxPart);
  std::vector<BoundedPartition> out;
  std::vector<int> cur;
  enumerateRec(n, c.maxParts, c.maxPart, cur, c, out);
  return out;
}

BivariateSeries generatingSeries(int A, int maxPartCount, int maxWeight) {
  if (A < 1) throw std::invalid_argument("part bound must be positive");
  BivariateSeries s(maxPartCount, maxWeight);
  s.coefficient(0, 0) = 1;
  // Multiply in 1/(1 - x y^i) factor by factor; the forward in-place sweep
  // accumulates the whole geometric series of each factor.
  for (int i = 1; i <= A; ++i) {
    for (int m = 1; m <= maxPartCount; ++m) {
      for (int n = i; n <= maxWeight; ++n) {
        s.coefficient(m, n) += s.coefficient(m - 1, n - i);
      }
    }
  }
  return s;
}

CountDistribution piDistribution(PartitionConstraint c, int maxWeight) {
  requireBounds(0, c.maxParts, c.maxPart);
  const long long full = static_cast<long long>(c.maxParts) * c.maxPart;
  const int bound = static_cast<int>(std::min<long long>(maxWeight, full));
  std::vector<BigInt> values(bound + 1);
  for (int i = 0; i <= bound; ++i) values[i] = countAtMostImpl(i, c.maxParts, c.maxPart);
  return CountDistribution(std::move(values));
}

BigInt countMulti(int n, const std::vector<PartitionConstraint>& constraints) {
  if (n < 0) throw std::invalid_argument("weight must be nonnegative");
  if (constraints.empty()) throw std::invalid_argument("at least one block required");
  CountDistribution acc = CountDistribution::unit();
  for (const auto& c : constraints) acc = convolve(acc, piDistribution(c, n));
  return acc.at(n);
}

BigInt countMultiBruteForce(int n, const std::vector<PartitionConstraint>& constraints) {
  if (n < 0) throw std::invalid_argument("weight must be nonnegative");
  if (constraints.empty()) throw std::invalid_argument("at least one block required");
  std::vector<std::vector<long long>> sizes;
  for (const auto& c : constraints) {
    std::vector<long long> perWeight(n + 1);
    for (int w = 0; w <= n; ++w) {
      perWeight[w] = static_cast<long long>(enumerateBounded(w, c).size());
    }
    sizes.push_back(std::move(perWeight));
  }
  return bruteForceRec(n, 0, sizes);
}

}  // namespace chowflag::partitions
