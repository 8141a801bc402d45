#include "chowflag/schur.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chowflag::schur {

namespace {

void stripTrailingZeros(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Monomial mulMonomials(const Monomial& a, const Monomial& b) {
  Monomial out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  stripTrailingZeros(out);
  return out;
}

// c_k as a polynomial: 1 for k = 0, 0 for k < 0, the variable otherwise.
GradedPolynomial chernEntry(int k) {
  if (k < 0) return GradedPolynomial{};
  if (k == 0) return GradedPolynomial::constant(1);
  return GradedPolynomial::variable(k);
}

// First-row cofactor expansion over the active columns.
GradedPolynomial determinant(const std::vector<std::vector<GradedPolynomial>>& m,
                             int row, std::vector<int>& cols) {
  if (cols.empty()) return GradedPolynomial::constant(1);
  GradedPolynomial result;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const GradedPolynomial& entry = m[row][cols[k]];
    if (entry.isZero()) continue;
    int removed = cols[k];
    cols.erase(cols.begin() + k);
    GradedPolynomial minor = determinant(m, row + 1, cols);
    cols.insert(cols.begin() + k, removed);
    GradedPolynomial term = entry * minor;
    if (k % 2 == 0) {
      result = result + term;
    } else {
      result = result - term;
    }
  }
  return result;
}

void enumerateBoxRec(int slots, int maxPart, std::vector<int>& cur,
                     BasisDescriptor& out) {
  if (slots == 0) {
    int w = std::accumulate(cur.begin(), cur.end(), 0);
    out.byWeight[w].push_back(Partition{cur});
    return;
  }
  for (int y = maxPart; y >= 0; --y) {
    cur.push_back(y);
    enumerateBoxRec(slots - 1, y, cur, out);
    cur.pop_back();
  }
}

}  // namespace

int Partition::weight() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

int monomialWeight(const Monomial& m) {
  int w = 0;
  for (std::size_t i = 0; i < m.size(); ++i) w += static_cast<int>(i + 1) * m[i];
  return w;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  const int wa = monomialWeight(a), wb = monomialWeight(b);
  if (wa != wb) return wa < wb;
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    const int ea = i < a.size() ? a[i] : 0;
    const int eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea < eb;
  }
  return false;
}

GradedPolynomial GradedPolynomial::constant(BigInt value) {
  GradedPolynomial p;
  if (value != 0) p.terms_.emplace(Monomial{}, std::move(value));
  return p;
}

GradedPolynomial GradedPolynomial::variable(int i) {
  if (i < 1) throw std::invalid_argument("variable index must be >= 1");
  GradedPolynomial p;
  Monomial m(i, 0);
  m[i - 1] = 1;
  p.terms_.emplace(std::move(m), BigInt(1));
  return p;
}

void GradedPolynomial::addTerm(Monomial m, BigInt coeff) {
  if (coeff == 0) return;
  if (truncation_ && monomialWeight(m) > *truncation_) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), std::move(coeff));
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

GradedPolynomial GradedPolynomial::operator+(const GradedPolynomial& other) const {
  GradedPolynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.addTerm(m, c);
  return out;
}

GradedPolynomial GradedPolynomial::operator-(const GradedPolynomial& other) const {
  GradedPolynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.addTerm(m, -c);
  return out;
}

GradedPolynomial GradedPolynomial::operator*(const GradedPolynomial& other) const {
  GradedPolynomial out;
  out.truncation_ = truncation_;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      out.addTerm(mulMonomials(ma, mb), ca * cb);
    }
  }
  return out;
}

void GradedPolynomial::setTruncationDegree(int degree) {
  truncation_ = degree;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (monomialWeight(it->first) > degree) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

std::string GradedPolynomial::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    BigInt coeff = c;
    if (first) {
      if (coeff < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    const bool isConstant = m.empty();
    if (coeff != 1 || isConstant) os << coeff.str();
    bool needStar = coeff != 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (needStar) os << "*";
      os << "c" << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
      needStar = true;
    }
  }
  return os.str();
}

GradedPolynomial schurDeterminant(const Partition& lambda) {
  const int d = lambda.width();
  if (d < 1) throw std::invalid_argument("partition width must be >= 1");
  for (int j = 1; j < d; ++j) {
    if (lambda.parts[j] > lambda.parts[j - 1] || lambda.parts[j] < 0) {
      throw std::invalid_argument("partition parts must be nonincreasing and >= 0");
    }
  }
  std::vector<std::vector<GradedPolynomial>> m(d, std::vector<GradedPolynomial>(d));
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      m[i - 1][j - 1] = chernEntry(lambda.parts[i - 1] + j - i);
    }
  }
  std::vector<int> cols(d);
  for (int j = 0; j < d; ++j) cols[j] = j;
  return determinant(m, 0, cols);
}

std::optional<int> homogeneityCheck(const GradedPolynomial& p) {
  std::optional<int> degree;
  for (const auto& [m, c] : p.terms()) {
    const int w = monomialWeight(m);
    if (!degree) {
      degree = w;
    } else if (*degree != w) {
      return std::nullopt;
    }
  }
  return degree ? degree : std::optional<int>(0);  // the zero/constant case
}

BigInt BasisDescriptor::totalCount() const {
  BigInt total = 0;
  for (const auto& bucket : byWeight) total += bucket.size();
  return total;
}

BasisDescriptor enumerateBasis(int n, int d) {
  if (d < 1 || d > n) throw std::invalid_argument("need 1 <= d <= n");
  BasisDescriptor out;
  out.ambientRank = n;
  out.subRank = d;
  out.byWeight.resize(static_cast<std::size_t>(d) * (n - d) + 1);
  std::vector<int> cur;
  enumerateBoxRec(d, n - d, cur, out);
  return out;
}

}  // namespace chowflag::schur
