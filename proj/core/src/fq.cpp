#include "chowflag/fq.hpp"

#include <algorithm>
#include <cstdlib>

namespace chowflag::fq {

long long enumerationBudget() {
  if (const char* env = std::getenv("CHOWFLAG_ENUM_BUDGET")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v >= 0) return v;
  }
  return 1'000'000;
}

Field::Field(int p) : p_(p) {
  if (p < 2) throw std::invalid_argument("field order must be at least 2");
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw std::invalid_argument("field order must be prime");
  }
}

int Field::inv(int a) const {
  a %= p_;
  if (a == 0) throw std::invalid_argument("zero has no inverse");
  // Fermat: a^(p-2); p is tiny, repeated multiplication is fine.
  int result = 1;
  for (int e = 0; e < p_ - 2; ++e) result = mul(result, a);
  return result;
}

std::vector<int> rowReduce(const Field& field, std::vector<Vec>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int cols = static_cast<int>(rows[0].size());
  std::size_t rank = 0;
  for (int c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    const int scale = field.inv(rows[rank][c]);
    for (int j = c; j < cols; ++j) rows[rank][j] = field.mul(rows[rank][j], scale);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const int factor = rows[r][c];
      for (int j = c; j < cols; ++j) {
        rows[r][j] = field.sub(rows[r][j], field.mul(factor, rows[rank][j]));
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

std::vector<Vec> kernelBasis(const Field& field, const std::vector<Vec>& matrixRows,
                             int cols) {
  std::vector<Vec> rows = matrixRows;
  const std::vector<int> pivots = rowReduce(field, rows);
  std::vector<bool> isPivot(cols, false);
  for (int p : pivots) isPivot[p] = true;
  std::vector<Vec> kernel;
  for (int free = 0; free < cols; ++free) {
    if (isPivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      v[pivots[r]] = field.neg(rows[r][free]);
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

Subspace::Subspace(const Field& field, int ambientDim)
    : field_(&field), n_(ambientDim) {
  if (ambientDim < 0) throw std::invalid_argument("ambient dimension must be >= 0");
}

Subspace Subspace::span(const Field& field, int ambientDim,
                        const std::vector<Vec>& vectors) {
  Subspace s(field, ambientDim);
  std::vector<Vec> rows;
  for (const Vec& v : vectors) {
    if (static_cast<int>(v.size()) != ambientDim) {
      throw std::invalid_argument("vector length does not match ambient dimension");
    }
    rows.push_back(v);
  }
  s.pivots_ = rowReduce(field, rows);
  s.rows_ = std::move(rows);
  return s;
}

Subspace Subspace::full(const Field& field, int ambientDim) {
  std::vector<Vec> rows(ambientDim, Vec(ambientDim, 0));
  for (int i = 0; i < ambientDim; ++i) rows[i][i] = 1;
  return span(field, ambientDim, rows);
}

Vec Subspace::reduce(const Vec& v) const {
  Vec w = v;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int c = w[pivots_[r]];
    if (c == 0) continue;
    for (int j = 0; j < n_; ++j) w[j] = field_->sub(w[j], field_->mul(c, rows_[r][j]));
  }
  return w;
}

bool Subspace::contains(const Vec& v) const {
  const Vec w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const Vec& v) { return contains(v); });
}

Vec Subspace::coordinatesOf(const Vec& v) const {
  Vec w = v;
  Vec coords(rows_.size(), 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int c = w[pivots_[r]];
    coords[r] = c;
    if (c == 0) continue;
    for (int j = 0; j < n_; ++j) w[j] = field_->sub(w[j], field_->mul(c, rows_[r][j]));
  }
  if (!std::all_of(w.begin(), w.end(), [](int x) { return x == 0; })) {
    throw std::invalid_argument("vector not in subspace");
  }
  return coords;
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vec> rows = rows_;
  rows.insert(rows.end(), other.rows_.begin(), other.rows_.end());
  return span(*field_, n_, rows);
}

Subspace Subspace::dual() const {
  return span(*field_, n_, kernelBasis(*field_, rows_, n_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  // U cap W = (U* + W*)* under the standard form.
  return dual().sum(other.dual()).dual();
}

std::vector<int> Subspace::complementUnitVectors() const {
  std::vector<bool> isPivot(n_, false);
  for (int p : pivots_) isPivot[p] = true;
  std::vector<int> out;
  for (int j = 0; j < n_; ++j) {
    if (!isPivot[j]) out.push_back(j);
  }
  return out;
}

namespace {

// RREF matrices with a fixed pivot-column set are in bijection with the
// subspaces having that column profile: fill every entry to the right of
// a pivot, in a non-pivot column, with an arbitrary field element.
void fillFreeEntries(const Field& field, int n, const std::vector<int>& pivots,
                     const std::function<void(const Subspace&)>& visit,
                     long long& budget) {
  const int d = static_cast<int>(pivots.size());
  std::vector<bool> isPivot(n, false);
  for (int p : pivots) isPivot[p] = true;
  std::vector<std::pair<int, int>> freeSlots;  // (row, col)
  for (int r = 0; r < d; ++r) {
    for (int c = pivots[r] + 1; c < n; ++c) {
      if (!isPivot[c]) freeSlots.emplace_back(r, c);
    }
  }
  std::vector<int> counter(freeSlots.size(), 0);
  while (true) {
    if (--budget < 0) throw BudgetExceeded(enumerationBudget());
    std::vector<Vec> rows(d, Vec(n, 0));
    for (int r = 0; r < d; ++r) rows[r][pivots[r]] = 1;
    for (std::size_t i = 0; i < freeSlots.size(); ++i) {
      rows[freeSlots[i].first][freeSlots[i].second] = counter[i];
    }
    visit(Subspace::span(field, n, rows));
    std::size_t i = 0;
    for (; i < counter.size(); ++i) {
      if (++counter[i] < field.order()) break;
      counter[i] = 0;
    }
    if (i == counter.size()) break;
  }
}

}  // namespace

void enumerateSubspaces(const Field& field, int n, int d,
                        const std::function<void(const Subspace&)>& visit) {
  if (n < 0 || d < 0 || d > n) throw std::invalid_argument("need 0 <= d <= n");
  long long budget = enumerationBudget();
  if (d == 0) {
    visit(Subspace(field, n));
    return;
  }
  std::vector<int> pivots(d);
  for (int i = 0; i < d; ++i) pivots[i] = i;
  while (true) {
    fillFreeEntries(field, n, pivots, visit, budget);
    // next combination of pivot columns, lexicographic
    int i = d - 1;
    while (i >= 0 && pivots[i] == n - d + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

std::vector<Subspace> allSubspaces(const Field& field, int n, int d) {
  std::vector<Subspace> out;
  enumerateSubspaces(field, n, d, [&](const Subspace& s) { out.push_back(s); });
  return out;
}

}  // namespace chowflag::fq
