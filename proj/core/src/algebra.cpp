#include "chowflag/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace chowflag::algebra {

namespace {

// Kernel of a stack of linear conditions on F_q^{n^2}, as a subspace.
fq::Subspace conditionKernel(const fq::Field& field, const std::vector<fq::Vec>& rows,
                             int dim) {
  return fq::Subspace::span(field, dim, fq::kernelBasis(field, rows, dim));
}

// All matrix units E_kl of M_n, flattened on demand via the callback.
void forEachMatrixUnit(int n, const std::function<void(int, int)>& f) {
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) f(k, l);
  }
}

// span{E x : E matrix unit} for the given flattened matrices: the left
// ideal of M_n generated by their span.
fq::Subspace leftMultiplyByAll(const fq::Field& field, int n,
                               const std::vector<fq::Vec>& flat) {
  std::vector<fq::Vec> products;
  for (const fq::Vec& v : flat) {
    const Mat x = unflatten(v, n);
    // E_kl x has row k equal to row l of x, all other rows zero.
    forEachMatrixUnit(n, [&](int k, int l) {
      Mat out = zeroMat(n);
      out[k] = x[l];
      products.push_back(flatten(out));
    });
  }
  return fq::Subspace::span(field, n * n, products);
}

// span{x E : E matrix unit}: the right ideal generated by the span.
fq::Subspace rightMultiplyByAll(const fq::Field& field, int n,
                                const std::vector<fq::Vec>& flat) {
  std::vector<fq::Vec> products;
  for (const fq::Vec& v : flat) {
    const Mat x = unflatten(v, n);
    // x E_kl has column l equal to column k of x, all other columns zero.
    forEachMatrixUnit(n, [&](int k, int l) {
      Mat out = zeroMat(n);
      for (int r = 0; r < n; ++r) out[r][l] = x[r][k];
      products.push_back(flatten(out));
    });
  }
  return fq::Subspace::span(field, n * n, products);
}

std::vector<IdealRep> mapChainThroughQuotient(const QuotientAlgebra& q,
                                              const fq::Field& field,
                                              const std::vector<std::vector<fq::Vec>>& flatChains,
                                              int n) {
  std::vector<IdealRep> out;
  const int d = q.degree();
  for (const auto& flat : flatChains) {
    std::vector<fq::Vec> images;
    for (const fq::Vec& v : flat) images.push_back(flatten(q.isoImage(unflatten(v, n))));
    out.push_back({Side::Left, d, fq::Subspace::span(field, d * d, images)});
  }
  return out;
}

}  // namespace

Mat zeroMat(int n) { return Mat(n, fq::Vec(n, 0)); }

Mat identityMat(int n) {
  Mat m = zeroMat(n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat matMul(const fq::Field& field, const Mat& a, const Mat& b) {
  const int n = static_cast<int>(a.size());
  const int inner = static_cast<int>(b.size());
  const int cols = inner > 0 ? static_cast<int>(b[0].size()) : 0;
  Mat out(n, fq::Vec(cols, 0));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < cols; ++j) {
        out[i][j] = field.add(out[i][j], field.mul(a[i][k], b[k][j]));
      }
    }
  }
  return out;
}

fq::Vec matApply(const fq::Field& field, const Mat& a, const fq::Vec& v) {
  const int n = static_cast<int>(a.size());
  fq::Vec out(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < static_cast<int>(v.size()); ++j) {
      out[i] = field.add(out[i], field.mul(a[i][j], v[j]));
    }
  }
  return out;
}

Mat matInverse(const fq::Field& field, const Mat& a) {
  const int n = static_cast<int>(a.size());
  std::vector<fq::Vec> rows(n, fq::Vec(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[i][j] = a[i][j];
    rows[i][n + i] = 1;
  }
  const std::vector<int> pivots = fq::rowReduce(field, rows);
  for (int i = 0; i < n; ++i) {
    if (i >= static_cast<int>(pivots.size()) || pivots[i] != i) {
      throw std::invalid_argument("matrix is singular");
    }
  }
  Mat inv(n, fq::Vec(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) inv[i][j] = rows[i][n + j];
  }
  return inv;
}

fq::Vec flatten(const Mat& a) {
  fq::Vec out;
  for (const auto& row : a) out.insert(out.end(), row.begin(), row.end());
  return out;
}

Mat unflatten(const fq::Vec& v, int n) {
  Mat out(n, fq::Vec(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out[i][j] = v[static_cast<std::size_t>(i) * n + j];
  }
  return out;
}

std::vector<Mat> IdealRep::basisMatrices() const {
  std::vector<Mat> out;
  for (const fq::Vec& v : space.basis()) out.push_back(unflatten(v, matrixDim));
  return out;
}

IdealRep idealFromSubspace(const fq::Field& field, const fq::Subspace& V, Side side) {
  const int n = V.ambientDim();
  std::vector<fq::Vec> conditions;
  if (side == Side::Left) {
    // a v = 0 for each basis vector v: n equations per v, one per row of a.
    for (const fq::Vec& v : V.basis()) {
      for (int r = 0; r < n; ++r) {
        fq::Vec cond(static_cast<std::size_t>(n) * n, 0);
        for (int c = 0; c < n; ++c) cond[static_cast<std::size_t>(r) * n + c] = v[c];
        conditions.push_back(std::move(cond));
      }
    }
  } else {
    // every column of a lies in V, i.e. is killed by every functional in
    // the orthogonal complement of V.
    const fq::Subspace orth = V.dual();
    for (const fq::Vec& d : orth.basis()) {
      for (int c = 0; c < n; ++c) {
        fq::Vec cond(static_cast<std::size_t>(n) * n, 0);
        for (int r = 0; r < n; ++r) cond[static_cast<std::size_t>(r) * n + c] = d[r];
        conditions.push_back(std::move(cond));
      }
    }
  }
  return {side, n, conditionKernel(field, conditions, n * n)};
}

fq::Subspace subspaceFromIdeal(const fq::Field& field, const IdealRep& I) {
  if (!closureHolds(field, I)) {
    throw std::invalid_argument("input is not closed under the claimed-side multiplication");
  }
  const int n = I.matrixDim;
  if (I.side == Side::Left) {
    // common kernel of the basis matrices
    std::vector<fq::Vec> stacked;
    for (const Mat& a : I.basisMatrices()) {
      stacked.insert(stacked.end(), a.begin(), a.end());
    }
    return fq::Subspace::span(field, n, fq::kernelBasis(field, stacked, n));
  }
  // sum of images: the span of all columns of all basis matrices
  std::vector<fq::Vec> columns;
  for (const Mat& a : I.basisMatrices()) {
    for (int c = 0; c < n; ++c) {
      fq::Vec col(n);
      for (int r = 0; r < n; ++r) col[r] = a[r][c];
      columns.push_back(std::move(col));
    }
  }
  return fq::Subspace::span(field, n, columns);
}

bool closureHolds(const fq::Field& field, const IdealRep& I) {
  const int n = I.matrixDim;
  for (const Mat& b : I.basisMatrices()) {
    bool ok = true;
    forEachMatrixUnit(n, [&](int k, int l) {
      Mat prod = zeroMat(n);
      if (I.side == Side::Left) {
        prod[k] = b[l];  // E_kl b
      } else {
        for (int r = 0; r < n; ++r) prod[r][l] = b[r][k];  // b E_kl
      }
      if (!I.space.contains(flatten(prod))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

IdealRep annihilator(const fq::Field& field, const IdealRep& I) {
  const int n = I.matrixDim;
  std::vector<fq::Vec> conditions;
  for (const Mat& x : I.basisMatrices()) {
    if (I.side == Side::Left) {
      // right annihilator: x a = 0, entry (r,c): sum_k x[r][k] a[k][c]
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          fq::Vec cond(static_cast<std::size_t>(n) * n, 0);
          for (int k = 0; k < n; ++k) cond[static_cast<std::size_t>(k) * n + c] = x[r][k];
          conditions.push_back(std::move(cond));
        }
      }
    } else {
      // left annihilator: a x = 0, entry (r,c): sum_k a[r][k] x[k][c]
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          fq::Vec cond(static_cast<std::size_t>(n) * n, 0);
          for (int k = 0; k < n; ++k) cond[static_cast<std::size_t>(r) * n + k] = x[k][c];
          conditions.push_back(std::move(cond));
        }
      }
    }
  }
  const Side outSide = I.side == Side::Left ? Side::Right : Side::Left;
  return {outSide, n, conditionKernel(field, conditions, n * n)};
}

fq::Subspace idealProduct(const fq::Field& field, const IdealRep& I,
                          const IdealRep& J) {
  const int n = I.matrixDim;
  if (J.matrixDim != n) throw std::invalid_argument("ambient dimensions differ");
  std::vector<fq::Vec> products;
  for (const Mat& a : I.basisMatrices()) {
    for (const Mat& b : J.basisMatrices()) {
      products.push_back(flatten(matMul(field, a, b)));
    }
  }
  return fq::Subspace::span(field, n * n, products);
}

QuotientAlgebra::QuotientAlgebra(const fq::Field& field, const IdealRep& I, Mode mode)
    : field_(&field), mode_(mode), n_(I.matrixDim),
      degree_(0),
      V_(field, I.matrixDim),
      carrier_(field, I.matrixDim * I.matrixDim),
      modulus_(field, I.matrixDim * I.matrixDim) {
  if (I.side != Side::Left) throw std::invalid_argument("expected a left ideal");
  if (I.dim() % n_ != 0) throw std::invalid_argument("left ideal dimension must be a multiple of n");
  const int i = I.dim() / n_;
  if (i <= 0 || i >= n_) throw std::invalid_argument("quotient degenerates for dimension 0 or n^2");
  V_ = subspaceFromIdeal(field, I);
  const IdealRep ann = annihilator(field, I);
  modulus_ = idealProduct(field, ann, I);
  if (mode == Mode::AnnihilatorSide) {
    carrier_ = ann.space;
    degree_ = n_ - i;
  } else {
    carrier_ = I.space;
    degree_ = i;
  }
  for (const fq::Vec& row : V_.basis()) vBasis_.push_back(row);
  complement_ = V_.complementUnitVectors();
  // P sends the reference basis (V-basis then complement units) to the
  // standard basis; x P has the images of that reference basis as columns.
  basisChange_ = zeroMat(n_);
  for (int k = 0; k < static_cast<int>(vBasis_.size()); ++k) {
    for (int r = 0; r < n_; ++r) basisChange_[r][k] = vBasis_[k][r];
  }
  for (int c = 0; c < static_cast<int>(complement_.size()); ++c) {
    basisChange_[complement_[c]][static_cast<int>(vBasis_.size()) + c] = 1;
  }
  basisChangeInv_ = matInverse(field, basisChange_);
}

Mat QuotientAlgebra::isoImage(const Mat& x) const {
  if (!carrier_.contains(flatten(x))) {
    throw std::invalid_argument("element is outside the quotient's carrier");
  }
  Mat out = zeroMat(degree_);
  if (mode_ == Mode::AnnihilatorSide) {
    // restriction to V in the V-basis
    for (int k = 0; k < degree_; ++k) {
      const fq::Vec coords = V_.coordinatesOf(matApply(*field_, x, vBasis_[k]));
      for (int l = 0; l < degree_; ++l) out[l][k] = coords[l];
    }
  } else {
    // induced map on E/V in the complement-unit basis
    for (int c = 0; c < degree_; ++c) {
      fq::Vec e(n_, 0);
      e[complement_[c]] = 1;
      const fq::Vec r = V_.reduce(matApply(*field_, x, e));
      for (int j = 0; j < degree_; ++j) out[j][c] = r[complement_[j]];
    }
  }
  return out;
}

Mat QuotientAlgebra::isoPreimage(const Mat& target) const {
  // Build the matrix of images of the reference basis, then change basis.
  Mat images = zeroMat(n_);
  const int vDim = static_cast<int>(vBasis_.size());
  if (mode_ == Mode::AnnihilatorSide) {
    // v_k -> sum_l target[l][k] v_l, complement units -> 0
    for (int k = 0; k < degree_; ++k) {
      for (int l = 0; l < degree_; ++l) {
        if (target[l][k] == 0) continue;
        for (int r = 0; r < n_; ++r) {
          images[r][k] = field_->add(images[r][k],
                                     field_->mul(target[l][k], vBasis_[l][r]));
        }
      }
    }
  } else {
    // v_k -> 0, complement unit e_c -> sum_j target[j][c] e_j
    for (int c = 0; c < degree_; ++c) {
      for (int j = 0; j < degree_; ++j) {
        images[complement_[j]][vDim + c] = target[j][c];
      }
    }
  }
  return matMul(*field_, images, basisChangeInv_);
}

bool QuotientAlgebra::sameCoset(const Mat& x, const Mat& y) const {
  return modulus_.reduce(flatten(x)) == modulus_.reduce(flatten(y));
}

std::vector<Mat> QuotientAlgebra::cosetRepresentatives() const {
  // A basis of a complement of the modulus inside the carrier: carrier
  // basis vectors whose reductions stay independent.
  std::vector<fq::Vec> reduced;
  std::vector<fq::Vec> chosen;
  fq::Subspace spanSoFar(*field_, n_ * n_);
  for (const fq::Vec& b : carrier_.basis()) {
    const fq::Vec r = modulus_.reduce(b);
    if (spanSoFar.contains(r)) continue;
    reduced.push_back(r);
    chosen.push_back(b);
    spanSoFar = fq::Subspace::span(*field_, n_ * n_, reduced);
  }
  long long count = 1;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    count *= field_->order();
    if (count > fq::enumerationBudget()) throw fq::BudgetExceeded(fq::enumerationBudget());
  }
  std::vector<Mat> out;
  std::vector<int> counter(chosen.size(), 0);
  while (true) {
    fq::Vec v(static_cast<std::size_t>(n_) * n_, 0);
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      if (counter[i] == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) {
        v[j] = field_->add(v[j], field_->mul(counter[i], chosen[i][j]));
      }
    }
    out.push_back(unflatten(v, n_));
    std::size_t i = 0;
    for (; i < counter.size(); ++i) {
      if (++counter[i] < field_->order()) break;
      counter[i] = 0;
    }
    if (i == counter.size()) break;
  }
  return out;
}

fq::Subspace bijectionEffectiveForward(const fq::Field& field, const IdealRep& I,
                                       const IdealRep& J) {
  if (I.side != Side::Left || J.side != Side::Left) {
    throw std::invalid_argument("expected left ideals");
  }
  if (I.dim() != I.matrixDim) {
    throw std::invalid_argument("base ideal must have dimension n");
  }
  if (!J.space.contains(I.space)) {
    throw std::invalid_argument("base ideal must be contained in the argument");
  }
  return idealProduct(field, annihilator(field, J), I);
}

IdealRep bijectionEffectiveInverse(const fq::Field& field, const IdealRep& I,
                                   const fq::Subspace& W) {
  const int n = I.matrixDim;
  const fq::Subspace WA = rightMultiplyByAll(field, n, W.basis());
  return annihilator(field, IdealRep{Side::Right, n, WA});
}

std::vector<IdealRep> bijectionFirstForward(const fq::Field& field,
                                            const IdealRep& I1,
                                            const std::vector<IdealRep>& chain) {
  const QuotientAlgebra q(field, I1, QuotientAlgebra::Mode::AnnihilatorSide);
  const IdealRep ann = annihilator(field, I1);
  std::vector<std::vector<fq::Vec>> flats;
  for (const IdealRep& Ij : chain) {
    if (!Ij.space.contains(I1.space)) {
      throw std::invalid_argument("chain members must contain the base ideal");
    }
    flats.push_back(idealProduct(field, ann, Ij).basis());
  }
  return mapChainThroughQuotient(q, field, flats, I1.matrixDim);
}

std::vector<IdealRep> bijectionFirstInverse(const fq::Field& field,
                                            const IdealRep& I1,
                                            const std::vector<IdealRep>& quotientChain) {
  const QuotientAlgebra q(field, I1, QuotientAlgebra::Mode::AnnihilatorSide);
  const int n = I1.matrixDim;
  const int d = q.degree();
  std::vector<IdealRep> out;
  for (const IdealRep& J : quotientChain) {
    std::vector<fq::Vec> preimage = q.modulus().basis();
    for (const fq::Vec& b : J.space.basis()) {
      preimage.push_back(flatten(q.isoPreimage(unflatten(b, d))));
    }
    out.push_back({Side::Left, n, leftMultiplyByAll(field, n, preimage)});
  }
  return out;
}

std::vector<IdealRep> bijectionLastForward(const fq::Field& field,
                                           const IdealRep& Ir,
                                           const std::vector<IdealRep>& chain) {
  const QuotientAlgebra q(field, Ir, QuotientAlgebra::Mode::IdealSide);
  std::vector<std::vector<fq::Vec>> flats;
  for (const IdealRep& Ij : chain) {
    if (!Ir.space.contains(Ij.space)) {
      throw std::invalid_argument("chain members must be contained in the top ideal");
    }
    flats.push_back(Ij.space.basis());
  }
  return mapChainThroughQuotient(q, field, flats, Ir.matrixDim);
}

std::vector<IdealRep> bijectionLastInverse(const fq::Field& field,
                                           const IdealRep& Ir,
                                           const std::vector<IdealRep>& quotientChain) {
  const QuotientAlgebra q(field, Ir, QuotientAlgebra::Mode::IdealSide);
  const int n = Ir.matrixDim;
  const int d = q.degree();
  std::vector<IdealRep> out;
  for (const IdealRep& J : quotientChain) {
    std::vector<fq::Vec> preimage = q.modulus().basis();
    for (const fq::Vec& b : J.space.basis()) {
      preimage.push_back(flatten(q.isoPreimage(unflatten(b, d))));
    }
    // Left-multiplying the full preimage by all of the algebra would only
    // recover the top ideal: the preimage of the image of I_j is
    // I_j + (I_r*)I_r, and generating a left ideal from it erases the
    // distinction between chain members.  Multiplying by I_r instead kills
    // the modulus part (I_r (I_r*) I_r = 0) and fixes I_j (left ideals are
    // idempotent here), so the original chain member comes back exactly.
    std::vector<fq::Vec> products;
    for (const Mat& a : Ir.basisMatrices()) {
      for (const fq::Vec& p : preimage) {
        products.push_back(flatten(matMul(field, a, unflatten(p, n))));
      }
    }
    out.push_back({Side::Left, n, fq::Subspace::span(field, n * n, products)});
  }
  return out;
}

SplitChains bijectionGeneralForward(const fq::Field& field,
                                    const std::vector<IdealRep>& chain, int s) {
  if (s < 0 || s >= static_cast<int>(chain.size())) {
    throw std::invalid_argument("split position out of range");
  }
  const IdealRep& Is = chain[s];
  const std::vector<IdealRep> below(chain.begin(), chain.begin() + s);
  const std::vector<IdealRep> above(chain.begin() + s + 1, chain.end());
  return {bijectionLastForward(field, Is, below),
          bijectionFirstForward(field, Is, above)};
}

std::vector<IdealRep> bijectionGeneralInverse(const fq::Field& field,
                                              const IdealRep& Is,
                                              const SplitChains& split) {
  std::vector<IdealRep> out = bijectionLastInverse(field, Is, split.below);
  out.push_back(Is);
  const std::vector<IdealRep> above = bijectionFirstInverse(field, Is, split.above);
  out.insert(out.end(), above.begin(), above.end());
  return out;
}

std::vector<IdealRep> enumerateLeftIdeals(const fq::Field& field, int n, int i) {
  if (i < 0 || i > n) throw std::invalid_argument("need 0 <= i <= n");
  std::vector<IdealRep> out;
  fq::enumerateSubspaces(field, n, n - i, [&](const fq::Subspace& V) {
    out.push_back(idealFromSubspace(field, V, Side::Left));
  });
  return out;
}

BigInt countFlags(int n, const std::vector<int>& indices, int q) {
  if (n < 1) throw std::invalid_argument("ambient dimension must be positive");
  int prev = 0;
  for (int i : indices) {
    if (i <= prev || i > n) throw std::invalid_argument("indices must be strictly increasing in [1, n]");
    prev = i;
  }
  fq::Field field(q);
  std::vector<std::vector<fq::Subspace>> levels;
  for (int i : indices) levels.push_back(fq::allSubspaces(field, n, i));

  BigInt total = 0;
  std::vector<const fq::Subspace*> stack;
  std::function<void(std::size_t)> rec = [&](std::size_t level) {
    if (level == levels.size()) {
      ++total;
      return;
    }
    for (const fq::Subspace& s : levels[level]) {
      if (!stack.empty() && !s.contains(*stack.back())) continue;
      stack.push_back(&s);
      rec(level + 1);
      stack.pop_back();
    }
  };
  rec(0);
  return total;
}

}  // namespace chowflag::algebra
