#pragma once

#include <vector>

#include "chowflag/bigint.hpp"
#include "chowflag/fq.hpp"

namespace chowflag::algebra {

// n x n matrix over F_q, row-major; acts on column vectors.
using Mat = std::vector<fq::Vec>;

Mat zeroMat(int n);
Mat identityMat(int n);
Mat matMul(const fq::Field& field, const Mat& a, const Mat& b);
fq::Vec matApply(const fq::Field& field, const Mat& a, const fq::Vec& v);
Mat matInverse(const fq::Field& field, const Mat& a);  // throws if singular

fq::Vec flatten(const Mat& a);
Mat unflatten(const fq::Vec& v, int n);

enum class Side { Left, Right };

// A one-sided ideal of M_n(F_q), stored as a subspace of F_q^{n^2}
// (row-major flattening).
struct IdealRep {
  Side side = Side::Left;
  int matrixDim = 0;
  fq::Subspace space;

  int dim() const { return space.dim(); }
  std::vector<Mat> basisMatrices() const;
  bool operator==(const IdealRep& other) const {
    return side == other.side && matrixDim == other.matrixDim &&
           space == other.space;
  }
};

// Left: {a : a v = 0 for all v in V}, dimension n(n - dim V).
// Right: {a : image(a) is contained in V}, dimension n * dim V.
IdealRep idealFromSubspace(const fq::Field& field, const fq::Subspace& V, Side side);

// Left: the common kernel of the basis matrices. Right: the sum of images.
// Throws std::invalid_argument if the closure invariant fails.
fq::Subspace subspaceFromIdeal(const fq::Field& field, const IdealRep& I);

// e * b in I for every matrix unit e (left), or b * e in I (right).
bool closureHolds(const fq::Field& field, const IdealRep& I);

// Right annihilator {a : x a = 0} of a left ideal, a right ideal; left
// annihilator {a : a x = 0} of a right ideal, a left ideal.
IdealRep annihilator(const fq::Field& field, const IdealRep& I);

// span{ a b : a in I, b in J } as a subspace of F_q^{n^2}.
fq::Subspace idealProduct(const fq::Field& field, const IdealRep& I,
                          const IdealRep& J);

// Quotient of I-degree data by I°I with an explicit isomorphism onto a
// matrix algebra, for a left ideal I of dimension n·i with 0 < i < n:
//   AnnihilatorSide: I°/I°I -> End(V)   = M_{n-i}(F_q), x +-> x restricted to V
//   IdealSide:       I/I°I  -> End(E/V) = M_i(F_q),     x +-> map induced on E/V
// where V = subspaceFromIdeal(I) has dimension n - i.
class QuotientAlgebra {
 public:
  enum class Mode { AnnihilatorSide, IdealSide };

  QuotientAlgebra(const fq::Field& field, const IdealRep& I, Mode mode);

  int degree() const { return degree_; }
  Mode mode() const { return mode_; }
  const fq::Subspace& carrier() const { return carrier_; }  // I° or I
  const fq::Subspace& modulus() const { return modulus_; }  // I°I
  const fq::Subspace& flagSubspace() const { return V_; }   // the V above

  Mat isoImage(const Mat& x) const;       // x must lie in the carrier
  Mat isoPreimage(const Mat& target) const;  // a canonical coset representative
  bool sameCoset(const Mat& x, const Mat& y) const;
  std::vector<Mat> cosetRepresentatives() const;  // one per element, small cases

 private:
  const fq::Field* field_;
  Mode mode_;
  int n_;
  int degree_;
  fq::Subspace V_;
  fq::Subspace carrier_;
  fq::Subspace modulus_;
  std::vector<fq::Vec> vBasis_;        // columns spanning V
  std::vector<int> complement_;        // unit-vector indices completing V
  Mat basisChange_;                    // P = [v-basis | complement units]
  Mat basisChangeInv_;
};

// Left ideals J containing a fixed left ideal I of dimension n (so the
// flag subspace of I is a hyperplane) correspond to subspaces of I°I:
//   forward:  J +-> J°I, of dimension n - dim(J)/n
//   inverse:  W +-> the left annihilator of W·A
fq::Subspace bijectionEffectiveForward(const fq::Field& field, const IdealRep& I,
                                       const IdealRep& J);
IdealRep bijectionEffectiveInverse(const fq::Field& field, const IdealRep& I,
                                   const fq::Subspace& W);

// Chains of left ideals above I1 correspond to chains of left ideals of
// the quotient B = I1°/I1°I1 = M_{n-i1}(F_q):
//   forward:  I_j +-> image of I1°·I_j in B
//   inverse:  J  +-> A · (preimage of J under the projection onto B)
std::vector<IdealRep> bijectionFirstForward(const fq::Field& field,
                                            const IdealRep& I1,
                                            const std::vector<IdealRep>& chain);
std::vector<IdealRep> bijectionFirstInverse(const fq::Field& field,
                                            const IdealRep& I1,
                                            const std::vector<IdealRep>& quotientChain);

// Chains of left ideals below Ir correspond to chains of left ideals of
// B = Ir/Ir°Ir = M_{ir}(F_q):
//   forward:  I_j +-> image of I_j in B
//   inverse:  J  +-> A · (preimage of J under the projection onto B)
std::vector<IdealRep> bijectionLastForward(const fq::Field& field,
                                           const IdealRep& Ir,
                                           const std::vector<IdealRep>& chain);
std::vector<IdealRep> bijectionLastInverse(const fq::Field& field,
                                           const IdealRep& Ir,
                                           const std::vector<IdealRep>& quotientChain);

// Splitting a full chain at position s (0-based index into `chain`):
// the part below goes through bijectionLast at chain[s], the part above
// through bijectionFirst at chain[s].
struct SplitChains {
  std::vector<IdealRep> below;  // ideals of M_{i_s}(F_q)
  std::vector<IdealRep> above;  // ideals of M_{n-i_s}(F_q)
};
SplitChains bijectionGeneralForward(const fq::Field& field,
                                    const std::vector<IdealRep>& chain, int s);
std::vector<IdealRep> bijectionGeneralInverse(const fq::Field& field,
                                              const IdealRep& Is,
                                              const SplitChains& split);

// All left ideals of M_n(F_q) of dimension n·i.
std::vector<IdealRep> enumerateLeftIdeals(const fq::Field& field, int n, int i);

// Number of chains V_1 < ... < V_r of subspaces of F_q^n with
// dim V_j = indices[j], by direct enumeration.
BigInt countFlags(int n, const std::vector<int>& indices, int q);

}  // namespace chowflag::algebra
