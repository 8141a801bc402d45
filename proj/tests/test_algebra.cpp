#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chowflag/algebra.hpp"

using namespace chowflag;
using algebra::IdealRep;
using algebra::Mat;
using algebra::Side;
using fq::Field;
using fq::Subspace;
using fq::Vec;

TEST_CASE("matrix helpers") {
  Field f(3);
  const Mat a = {{1, 2}, {0, 1}};
  const Mat b = {{2, 0}, {1, 1}};
  CHECK(algebra::matMul(f, a, b) == Mat{{1, 2}, {1, 1}});
  CHECK(algebra::matMul(f, a, algebra::identityMat(2)) == a);
  const Mat inv = algebra::matInverse(f, a);
  CHECK(algebra::matMul(f, a, inv) == algebra::identityMat(2));
  CHECK_THROWS_AS(algebra::matInverse(f, Mat{{1, 2}, {2, 4 % 3}}), std::invalid_argument);
  CHECK(algebra::unflatten(algebra::flatten(a), 2) == a);
}

TEST_CASE("ideals attached to a line in the plane") {
  Field f(2);
  const auto V = Subspace::span(f, 2, {{1, 0}});
  const auto left = algebra::idealFromSubspace(f, V, Side::Left);
  const auto right = algebra::idealFromSubspace(f, V, Side::Right);
  CHECK(left.dim() == 2);   // n(n - dim V) = 2*1
  CHECK(right.dim() == 2);  // n * dim V = 2*1
  CHECK(algebra::closureHolds(f, left));
  CHECK(algebra::closureHolds(f, right));
  // every member of the left ideal kills (1,0)
  for (const Mat& m : left.basisMatrices()) {
    CHECK(algebra::matApply(f, m, {1, 0}) == Vec{0, 0});
  }
  // every member of the right ideal has image inside V
  for (const Mat& m : right.basisMatrices()) {
    for (int c = 0; c < 2; ++c) {
      CHECK(V.contains(Vec{m[0][c], m[1][c]}));
    }
  }
  CHECK(algebra::subspaceFromIdeal(f, left) == V);
  CHECK(algebra::subspaceFromIdeal(f, right) == V);
}

TEST_CASE("extreme ideals") {
  Field f(2);
  const int n = 3;
  const auto zero = Subspace(f, n);
  const auto full = Subspace::full(f, n);
  const auto leftOfZero = algebra::idealFromSubspace(f, zero, Side::Left);
  CHECK(leftOfZero.dim() == n * n);  // everything vanishes on 0
  const auto leftOfFull = algebra::idealFromSubspace(f, full, Side::Left);
  CHECK(leftOfFull.dim() == 0);
  CHECK(algebra::subspaceFromIdeal(f, leftOfZero) == zero);
  CHECK(algebra::subspaceFromIdeal(f, leftOfFull) == full);
  // annihilator swaps them
  CHECK(algebra::annihilator(f, leftOfZero).dim() == 0);
  CHECK(algebra::annihilator(f, leftOfFull).dim() == n * n);
}

TEST_CASE("non-ideal input is rejected") {
  Field f(2);
  // span{E_11 + E_22} is a unital subalgebra but not a one-sided ideal
  const auto bad = Subspace::span(f, 4, {{1, 0, 0, 1}});
  const IdealRep notIdeal{Side::Left, 2, bad};
  CHECK(!algebra::closureHolds(f, notIdeal));
  CHECK_THROWS_AS(algebra::subspaceFromIdeal(f, notIdeal), std::invalid_argument);
}

TEST_CASE("annihilator product has the expected dimension") {
  Field f(2);
  const auto V = Subspace::span(f, 2, {{1, 0}});
  const auto I = algebra::idealFromSubspace(f, V, Side::Left);  // dim 2, i = 1
  const auto ann = algebra::annihilator(f, I);
  CHECK(ann.dim() == 2);
  CHECK(ann.side == Side::Right);
  const auto product = algebra::idealProduct(f, ann, I);
  CHECK(product.dim() == 1);  // (n - i) * i = 1
  // I° I = I° cap I
  CHECK(product == ann.space.intersect(I.space));
  // I * I° = 0
  CHECK(algebra::idealProduct(f, I, ann).dim() == 0);
}

TEST_CASE("quotient algebra degrees and sizes") {
  Field f(2);
  const auto V = Subspace::span(f, 3, {{1, 0, 0}, {0, 1, 0}});
  const auto I = algebra::idealFromSubspace(f, V, Side::Left);  // n=3, i=1
  const algebra::QuotientAlgebra annSide(f, I, algebra::QuotientAlgebra::Mode::AnnihilatorSide);
  CHECK(annSide.degree() == 2);  // End(V) = M_2(F_2)
  CHECK(annSide.cosetRepresentatives().size() == 16);
  const algebra::QuotientAlgebra idealSide(f, I, algebra::QuotientAlgebra::Mode::IdealSide);
  CHECK(idealSide.degree() == 1);  // End(E/V) = F_2
  CHECK(idealSide.cosetRepresentatives().size() == 2);

  // the isomorphism respects products on the whole table
  const auto reps = annSide.cosetRepresentatives();
  for (const auto& x : reps) {
    for (const auto& y : reps) {
      const auto lhs = annSide.isoImage(algebra::matMul(f, x, y));
      const auto rhs = algebra::matMul(f, annSide.isoImage(x), annSide.isoImage(y));
      CHECK(lhs == rhs);
    }
  }
  // preimage is a section of the isomorphism
  for (const auto& x : reps) {
    const auto image = annSide.isoImage(x);
    const auto back = annSide.isoPreimage(image);
    CHECK(annSide.isoImage(back) == image);
    CHECK(annSide.sameCoset(back, x));
  }
}

TEST_CASE("degenerate quotients are rejected") {
  Field f(2);
  const auto zeroIdeal = algebra::idealFromSubspace(f, Subspace::full(f, 2), Side::Left);
  CHECK_THROWS_AS(algebra::QuotientAlgebra(f, zeroIdeal,
                                           algebra::QuotientAlgebra::Mode::IdealSide),
                  std::invalid_argument);
  const auto unitIdeal = algebra::idealFromSubspace(f, Subspace(f, 2), Side::Left);
  CHECK_THROWS_AS(algebra::QuotientAlgebra(f, unitIdeal,
                                           algebra::QuotientAlgebra::Mode::IdealSide),
                  std::invalid_argument);
}

TEST_CASE("effective bijection on a concrete chain") {
  Field f(2);
  const int n = 3;
  const auto VI = Subspace::span(f, n, {{1, 0, 0}, {0, 1, 0}});
  const auto I = algebra::idealFromSubspace(f, VI, Side::Left);  // dim 3
  REQUIRE(I.dim() == n);

  // J = I itself maps to the full modulus I°I
  const auto full = algebra::bijectionEffectiveForward(f, I, I);
  const auto modulus = algebra::idealProduct(f, algebra::annihilator(f, I), I);
  CHECK(full == modulus);
  CHECK(full.dim() == n - 1);

  // J = A maps to the zero subspace
  const auto A = algebra::idealFromSubspace(f, Subspace(f, n), Side::Left);
  CHECK(algebra::bijectionEffectiveForward(f, I, A).dim() == 0);

  // a middle J: dim 6, contains I
  const auto VJ = Subspace::span(f, n, {{1, 0, 0}});
  const auto J = algebra::idealFromSubspace(f, VJ, Side::Left);
  REQUIRE(J.space.contains(I.space));
  const auto W = algebra::bijectionEffectiveForward(f, I, J);
  CHECK(W.dim() == 1);  // n - j with j = 2
  CHECK(algebra::bijectionEffectiveInverse(f, I, W) == J);

  // precondition violations
  CHECK_THROWS_AS(algebra::bijectionEffectiveForward(f, J, I), std::invalid_argument);
}

TEST_CASE("first and last bijections on a concrete chain") {
  Field f(2);
  const int n = 3;
  const auto V1 = Subspace::span(f, n, {{1, 0, 0}, {0, 1, 0}});
  const auto V2 = Subspace::span(f, n, {{1, 0, 0}});
  const auto I1 = algebra::idealFromSubspace(f, V1, Side::Left);  // dim 3, i=1
  const auto I2 = algebra::idealFromSubspace(f, V2, Side::Left);  // dim 6, i=2

  const auto firstImage = algebra::bijectionFirstForward(f, I1, {I2});
  REQUIRE(firstImage.size() == 1);
  CHECK(firstImage[0].dim() == 2);  // (n - i1)(i2 - i1) = 2*1
  CHECK(firstImage[0].matrixDim == 2);
  const auto firstBack = algebra::bijectionFirstInverse(f, I1, firstImage);
  CHECK(firstBack.size() == 1);
  CHECK(firstBack[0] == I2);

  const auto lastImage = algebra::bijectionLastForward(f, I2, {I1});
  REQUIRE(lastImage.size() == 1);
  CHECK(lastImage[0].dim() == 2);  // i1 * ir = 1*2
  CHECK(lastImage[0].matrixDim == 2);
  const auto lastBack = algebra::bijectionLastInverse(f, I2, lastImage);
  CHECK(lastBack.size() == 1);
  CHECK(lastBack[0] == I1);

  // empty chains stay empty
  CHECK(algebra::bijectionFirstForward(f, I1, {}).empty());
  CHECK(algebra::bijectionLastForward(f, I2, {}).empty());
}

TEST_CASE("general bijection splits and reassembles") {
  Field f(2);
  const int n = 3;
  const auto V1 = Subspace::span(f, n, {{1, 0, 0}, {0, 1, 0}});
  const auto V2 = Subspace::span(f, n, {{1, 0, 0}});
  const auto I1 = algebra::idealFromSubspace(f, V1, Side::Left);
  const auto I2 = algebra::idealFromSubspace(f, V2, Side::Left);
  const auto I3 = algebra::idealFromSubspace(f, Subspace(f, n), Side::Left);  // A

  const std::vector<IdealRep> chain = {I1, I2, I3};
  const auto split = algebra::bijectionGeneralForward(f, chain, 1);
  REQUIRE(split.below.size() == 1);
  REQUIRE(split.above.size() == 1);
  const auto back = algebra::bijectionGeneralInverse(f, I2, split);
  REQUIRE(back.size() == 3);
  CHECK(back[0] == I1);
  CHECK(back[1] == I2);
  CHECK(back[2] == I3);
}

TEST_CASE("flag counting") {
  CHECK(algebra::countFlags(2, {1}, 2) == 3);
  CHECK(algebra::countFlags(3, {1, 2}, 2) == 21);
  CHECK(algebra::countFlags(3, {3}, 2) == 1);
  CHECK(algebra::countFlags(4, {4}, 3) == 1);
  CHECK(algebra::countFlags(3, {1}, 3) == 13);
  CHECK(algebra::countFlags(3, {1, 2, 3}, 2) == 21);  // top level is forced
  CHECK_THROWS_AS(algebra::countFlags(3, {2, 2}, 2), std::invalid_argument);
}

TEST_CASE("left ideal enumeration") {
  Field f(2);
  const auto ideals = algebra::enumerateLeftIdeals(f, 3, 1);
  CHECK(ideals.size() == 7);  // hyperplanes of F_2^3
  for (const auto& I : ideals) {
    CHECK(I.dim() == 3);
    CHECK(algebra::closureHolds(f, I));
  }
}
