#include "chowflag/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "chowflag/algebra.hpp"
#include "chowflag/chowrank.hpp"
#include "chowflag/fq.hpp"
#include "chowflag/partitions.hpp"
#include "chowflag/schur.hpp"

namespace chowflag::verify {

namespace {

using partitions::PartitionConstraint;

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); result_.passed = true; }

  template <typename A, typename B>
  void expectEqual(const A& actual, const B& expected, const std::string& context) {
    ++result_.casesChecked;
    if (result_.passed && !(actual == expected)) {
      result_.passed = false;
      result_.counterexample = context;
    }
  }

  void expect(bool condition, const std::string& context) {
    ++result_.casesChecked;
    if (result_.passed && !condition) {
      result_.passed = false;
      result_.counterexample = context;
    }
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string fmt(std::initializer_list<long long> values) {
  std::ostringstream os;
  bool first = true;
  os << "(";
  for (long long v : values) {
    if (!first) os << ",";
    os << v;
    first = false;
  }
  os << ")";
  return os.str();
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt gaussianBinomial(int n, int k, int q) {
  if (k < 0 || k > n) return 0;
  BigInt num = 1, den = 1;
  for (int j = 0; j < k; ++j) {
    BigInt qa = 1, qb = 1;
    for (int e = 0; e < n - j; ++e) qa *= q;
    for (int e = 0; e < j + 1; ++e) qb *= q;
    num *= qa - 1;
    den *= qb - 1;
  }
  return num / den;
}

// All nonempty strictly increasing index lists inside [1, n].
std::vector<std::vector<int>> allIndexLists(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> indices;
    for (int i = 1; i <= n; ++i) {
      if (mask & (1u << (i - 1))) indices.push_back(i);
    }
    out.push_back(std::move(indices));
  }
  return out;
}

// Subspaces of dimension d inside V, embedded back into V's ambient space.
std::vector<fq::Subspace> subspacesWithin(const fq::Field& field,
                                          const fq::Subspace& V, int d) {
  std::vector<fq::Subspace> out;
  fq::enumerateSubspaces(field, V.dim(), d, [&](const fq::Subspace& s) {
    std::vector<fq::Vec> vecs;
    for (const fq::Vec& row : s.basis()) {
      fq::Vec v(V.ambientDim(), 0);
      for (int k = 0; k < V.dim(); ++k) {
        for (int j = 0; j < V.ambientDim(); ++j) {
          v[j] = field.add(v[j], field.mul(row[k], V.basis()[k][j]));
        }
      }
      vecs.push_back(std::move(v));
    }
    out.push_back(fq::Subspace::span(field, V.ambientDim(), vecs));
  });
  return out;
}

}  // namespace

bool SuiteReport::allPassed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

long long SuiteReport::totalCases() const {
  long long t = 0;
  for (const auto& c : checks) t += c.casesChecked;
  return t;
}

SuiteReport runPartitionsSuite(int nMax) {
  if (nMax <= 0) nMax = 15;
  SuiteReport report{"partitions", {}};

  {
    Check check("count-recurrence");
    // the m = 1 base case is covered by the enumeration check below
    for (int n = 3; n <= nMax; ++n) {
      for (int m = 2; m < n; ++m) {
        for (int A = 2; A <= std::min(nMax, 10); ++A) {
          check.expectEqual(partitions::countAtMost(n, m, A),
                            partitions::countAtMost(n, m - 1, A) +
                                partitions::countAtMost(n - m, m, A - 1),
                            "recurrence at " + fmt({n, m, A}));
        }
      }
    }
    report.checks.push_back(check.take());
  }

  {
    Check check("enumeration-agreement");
    const int bound = std::min(nMax, 12);
    for (int n = 1; n <= bound; ++n) {
      for (int m = 1; m <= 5; ++m) {
        for (int A = 1; A <= 5; ++A) {
          const auto all = partitions::enumerateBounded(n, {m, A});
          long long exact = 0;
          for (const auto& p : all) {
            if (static_cast<int>(p.parts.size()) == m) ++exact;
          }
          check.expectEqual(partitions::countAtMost(n, m, A), BigInt(all.size()),
                            "at-most count at " + fmt({n, m, A}));
          check.expectEqual(partitions::countStrict(n, m, A), BigInt(exact),
                            "exact-parts count at " + fmt({n, m, A}));
        }
      }
    }
    report.checks.push_back(check.take());
  }

  {
    Check check("generating-series");
    for (int A = 1; A <= 4; ++A) {
      const auto series = partitions::generatingSeries(A, 5, nMax);
      check.expectEqual(series.coefficient(0, 0), BigInt(1), "constant term");
      for (int m = 1; m <= 5; ++m) {
        for (int n = 1; n <= nMax; ++n) {
          check.expectEqual(series.coefficient(m, n), partitions::countStrict(n, m, A),
                            "series coefficient at " + fmt({A, m, n}));
        }
      }
    }
    report.checks.push_back(check.take());
  }

  {
    Check check("convolution-vs-brute-force");
    const std::vector<std::vector<PartitionConstraint>> families = {
        {{2, 2}}, {{1, 3}, {2, 2}}, {{2, 1}, {1, 2}, {2, 3}}, {{3, 3}, {2, 2}},
    };
    const int bound = std::min(nMax, 10);
    for (const auto& blocks : families) {
      for (int n = 0; n <= bound; ++n) {
        check.expectEqual(partitions::countMulti(n, blocks),
                          partitions::countMultiBruteForce(n, blocks),
                          "multi-block count at weight " + std::to_string(n));
      }
    }
    report.checks.push_back(check.take());
  }

  return report;
}

SuiteReport runSchurSuite(int nMax) {
  if (nMax <= 0) nMax = 8;
  SuiteReport report{"schur", {}};

  {
    Check check("box-basis-counts");
    for (int n = 1; n <= nMax; ++n) {
      for (int d = 1; d <= n; ++d) {
        const auto basis = schur::enumerateBasis(n, d);
        BigInt binom = factorial(n) / (factorial(d) * factorial(n - d));
        check.expectEqual(basis.totalCount(), binom, "total at " + fmt({n, d}));
        for (int k = 0; k < static_cast<int>(basis.byWeight.size()); ++k) {
          const BigInt expected =
              k == 0 ? BigInt(1)
                     : (d == n ? BigInt(0) : partitions::countAtMost(k, d, n - d));
          check.expectEqual(BigInt(basis.byWeight[k].size()), expected,
                            "weight bucket at " + fmt({n, d, k}));
        }
      }
    }
    report.checks.push_back(check.take());
  }

  {
    Check check("determinant-homogeneity");
    const auto basis = schur::enumerateBasis(7, 3);  // 3 x 4 box
    for (const auto& bucket : basis.byWeight) {
      for (const auto& lambda : bucket) {
        const auto poly = schur::schurDeterminant(lambda);
        const auto degree = schur::homogeneityCheck(poly);
        check.expect(degree.has_value() &&
                         (poly.isZero() || *degree == lambda.weight()),
                     "homogeneity of weight-" + std::to_string(lambda.weight()) +
                         " determinant");
        check.expect(!poly.isZero(), "nonvanishing determinant");
      }
    }
    report.checks.push_back(check.take());
  }

  {
    Check check("zero-padding-stability");
    const auto basis = schur::enumerateBasis(6, 3);
    for (const auto& bucket : basis.byWeight) {
      for (const auto& lambda : bucket) {
        schur::Partition padded = lambda;
        padded.parts.push_back(0);
        check.expectEqual(schur::schurDeterminant(padded),
                          schur::schurDeterminant(lambda),
                          "padding invariance at weight " +
                              std::to_string(lambda.weight()));
      }
    }
    report.checks.push_back(check.take());
  }

  return report;
}

SuiteReport runChowSuite(int nMax) {
  if (nMax <= 0) nMax = 6;
  SuiteReport report{"chow", {}};
  const auto point = chowrank::RankProfile::point();

  {
    Check check("flag-bundle-total");
    for (int n = 1; n <= nMax; ++n) {
      for (const auto& indices : allIndexLists(n)) {
        const chowrank::FlagSpec spec{n, indices};
        const auto coeffs = chowrank::flagBundleCoefficients(spec);
        BigInt expected = factorial(n);
        int prev = 0;
        for (int i : indices) {
          expected /= factorial(i - prev);
          prev = i;
        }
        expected /= factorial(n - prev);
        check.expectEqual(chowrank::pushThroughBase(coeffs, point).total(), expected,
                          "multinomial total, n=" + std::to_string(n));
      }
    }
    report.checks.push_back(check.take());
  }

  {
    Check check("split-cross-check");
    for (int n = 2; n <= nMax; ++n) {
      const auto sb = chowrank::RankProfile::projectiveSpace(n - 1);
      for (const auto& indices : allIndexLists(n)) {
        if (indices.front() != 1) continue;
        const chowrank::FlagSpec spec{n, indices};
        const auto viaBase =
            chowrank::pushThroughBase(chowrank::twistedCaseFirstIndexOne(spec), sb);
        const auto direct =
            chowrank::pushThroughBase(chowrank::flagBundleCoefficients(spec), point);
        check.expectEqual(viaBase, direct, "profiles differ, n=" + std::to_string(n));
      }
    }
    report.checks.push_back(check.take());
  }

  {
    Check check("exact-sequence-pipeline");
    for (int n = 2; n <= nMax; ++n) {
      const auto sb = chowrank::RankProfile::projectiveSpace(n - 1);
      for (const auto& indices : allIndexLists(n)) {
        if (indices.front() == 1) continue;
        const chowrank::FlagSpec spec{n, indices};
        try {
          const auto pipeline = chowrank::severiBrauerPipelineRanks(spec, sb);
          const auto direct =
              chowrank::pushThroughBase(chowrank::flagBundleCoefficients(spec), point);
          check.expectEqual(pipeline, direct, "profiles differ, n=" + std::to_string(n));
        } catch (const std::runtime_error&) {
          check.expect(false, "pipeline rejected a consistent split input, n=" +
                                  std::to_string(n));
        }
      }
    }
    report.checks.push_back(check.take());
  }

  {
    Check check("complete-flag-coefficients");
    for (int n = 2; n <= std::max(nMax, 8); ++n) {
      std::vector<int> complete(n);
      for (int i = 0; i < n; ++i) complete[i] = i + 1;
      const auto sb = chowrank::RankProfile::projectiveSpace(n - 1);
      const auto profile = chowrank::pushThroughBase(
          chowrank::twistedCaseFirstIndexOne({n, complete}), sb);
      // product (1 + t + ... + t^j) over j = 1..n-1
      auto product = partitions::CountDistribution::unit();
      for (int j = 1; j < n; ++j) {
        product = convolve(product, partitions::piDistribution({1, j}, n * n));
      }
      check.expectEqual(profile.dimensionBound(), product.supportBound(),
                        "support mismatch, n=" + std::to_string(n));
      for (int k = 0; k <= product.supportBound(); ++k) {
        check.expectEqual(profile.at(k), product.at(k),
                          "coefficient mismatch at " + fmt({n, k}));
      }
      check.expectEqual(profile.total(), factorial(n),
                        "total is not n!, n=" + std::to_string(n));
      // direct multi-block identity: exactly the same counts, computed
      // through the convolution interface
      std::vector<PartitionConstraint> blocks;
      for (int j = 1; j < n; ++j) blocks.push_back({1, j});
      for (int k = 0; k <= product.supportBound(); ++k) {
        check.expectEqual(partitions::countMulti(k, blocks), product.at(k),
                          "multi-block mismatch at " + fmt({n, k}));
      }
    }
    report.checks.push_back(check.take());
  }

  {
    Check check("general-position-factorization");
    for (int n = 2; n <= nMax; ++n) {
      for (const auto& indices : allIndexLists(n)) {
        const chowrank::FlagSpec spec{n, indices};
        const auto direct =
            chowrank::pushThroughBase(chowrank::flagBundleCoefficients(spec), point);
        for (int s = 1; s <= static_cast<int>(indices.size()); ++s) {
          const int is = indices[s - 1];
          // split base: the Grassmannian of is-planes in n-space
          const auto grassmannian = chowrank::pushThroughBase(
              chowrank::flagBundleCoefficients({n, {is}}), point);
          const auto viaBase = chowrank::pushThroughBase(
              chowrank::twistedCaseGeneral(spec, s), grassmannian);
          check.expectEqual(viaBase, direct,
                            "factorization fails at n=" + std::to_string(n) +
                                " s=" + std::to_string(s));
        }
      }
    }
    report.checks.push_back(check.take());
  }

  {
    Check check("product-fibration-totals");
    for (int n = 2; n <= std::min(nMax, 5); ++n) {
      for (const auto& a : allIndexLists(n)) {
        for (const auto& b : allIndexLists(n)) {
          const auto prod = chowrank::productFibrationCoefficients({n, a}, {n, b});
          const auto ca = chowrank::flagBundleCoefficients({n, a});
          const auto cb = chowrank::flagBundleCoefficients({n, b});
          const auto expected = convolve(ca.coefficients, cb.coefficients);
          check.expect(prod.coefficients.values() == expected.values(),
                       "product coefficients differ, n=" + std::to_string(n));
        }
      }
    }
    report.checks.push_back(check.take());
  }

  return report;
}

SuiteReport runAlgebraSuite(int q, int nMax) {
  if (q <= 0) q = 2;
  if (nMax <= 0) nMax = 3;
  SuiteReport report{"algebra", {}};
  const fq::Field field(q);

  {
    Check check("ideal-subspace-roundtrip");
    for (int n = 1; n <= nMax; ++n) {
      for (int d = 0; d <= n; ++d) {
        for (const auto& V : fq::allSubspaces(field, n, d)) {
          for (const auto side : {algebra::Side::Left, algebra::Side::Right}) {
            const auto I = algebra::idealFromSubspace(field, V, side);
            const int expectedDim =
                side == algebra::Side::Left ? n * (n - d) : n * d;
            check.expectEqual(I.dim(), expectedDim, "ideal dimension at " + fmt({n, d}));
            check.expect(algebra::closureHolds(field, I), "closure at " + fmt({n, d}));
            check.expect(algebra::subspaceFromIdeal(field, I) == V,
                         "round-trip at " + fmt({n, d}));
          }
        }
      }
    }
    report.checks.push_back(check.take());
  }

  {
    Check check("double-annihilator");
    for (int n = 1; n <= nMax; ++n) {
      for (int i = 0; i <= n; ++i) {
        for (const auto& I : algebra::enumerateLeftIdeals(field, n, i)) {
          const auto ann = algebra::annihilator(field, I);
          check.expectEqual(ann.dim(), n * n - I.dim(),
                            "annihilator dimension at " + fmt({n, i}));
          const auto back = algebra::annihilator(field, ann);
          check.expect(back == I, "double annihilator at " + fmt({n, i}));
        }
      }
    }
    report.checks.push_back(check.take());
  }

  {
    Check check("product-dimension-lemma");
    for (int n = 1; n <= nMax; ++n) {
      std::vector<algebra::IdealRep> ideals;
      for (int i = 0; i <= n; ++i) {
        for (auto& I : algebra::enumerateLeftIdeals(field, n, i)) ideals.push_back(I);
      }
      for (const auto& I : ideals) {
        const auto ann = algebra::annihilator(field, I);
        const int i = I.dim() / n;
        for (const auto& J : ideals) {
          const int j = J.dim() / n;
          const auto product = algebra::idealProduct(field, ann, J);
          const auto intersection = ann.space.intersect(J.space);
          check.expect(product == intersection,
                       "product vs intersection at " + fmt({n, i, j}));
          check.expectEqual(product.dim(), (n - i) * j,
                            "product dimension at " + fmt({n, i, j}));
        }
      }
    }
    report.checks.push_back(check.take());
  }

  {
    Check check("quotient-isomorphisms");
    for (int n = 2; n <= std::min(nMax, 3); ++n) {
      for (int i = 1; i < n; ++i) {
        for (const auto& I : algebra::enumerateLeftIdeals(field, n, i)) {
          for (const auto mode : {algebra::QuotientAlgebra::Mode::AnnihilatorSide,
                                  algebra::QuotientAlgebra::Mode::IdealSide}) {
            const algebra::QuotientAlgebra quot(field, I, mode);
            const int d = quot.degree();
            check.expectEqual(
                d, mode == algebra::QuotientAlgebra::Mode::AnnihilatorSide ? n - i : i,
                "degree at " + fmt({n, i}));
            const auto reps = quot.cosetRepresentatives();
            long long expectedCount = 1;
            for (int e = 0; e < d * d; ++e) expectedCount *= q;
            check.expectEqual(static_cast<long long>(reps.size()), expectedCount,
                              "coset count at " + fmt({n, i}));
            // multiplicativity and injectivity on the full table
            std::vector<fq::Vec> seen;
            for (const auto& x : reps) {
              const auto fx = quot.isoImage(x);
              seen.push_back(algebra::flatten(fx));
              for (const auto& y : reps) {
                const auto fy = quot.isoImage(y);
                const auto fxy = quot.isoImage(algebra::matMul(field, x, y));
                check.expect(fxy == algebra::matMul(field, fx, fy),
                             "multiplicativity at " + fmt({n, i}));
              }
              // section property: preimage maps back to the same matrix
              check.expect(quot.isoImage(quot.isoPreimage(fx)) == fx,
                           "preimage section at " + fmt({n, i}));
              check.expect(quot.carrier().contains(algebra::flatten(quot.isoPreimage(fx))),
                           "preimage lands in carrier at " + fmt({n, i}));
            }
            std::sort(seen.begin(), seen.end());
            check.expect(std::adjacent_find(seen.begin(), seen.end()) == seen.end(),
                         "iso not injective at " + fmt({n, i}));
          }
        }
      }
    }
    report.checks.push_back(check.take());
  }

  {
    Check check("effective-bijection-roundtrip");
    for (int n = 2; n <= nMax; ++n) {
      for (const auto& I : algebra::enumerateLeftIdeals(field, n, 1)) {
        const auto VI = algebra::subspaceFromIdeal(field, I);  // hyperplane
        const auto annI = algebra::annihilator(field, I);
        const auto modulus = algebra::idealProduct(field, annI, I);  // dim n-1
        for (int j = 1; j <= n; ++j) {
          // left ideals J of dimension n*j containing I
          for (const auto& VJ : subspacesWithin(field, VI, n - j)) {
            const auto J = algebra::idealFromSubspace(field, VJ, algebra::Side::Left);
            const auto W = algebra::bijectionEffectiveForward(field, I, J);
            check.expectEqual(W.dim(), n - j, "image dimension at " + fmt({n, j}));
            check.expect(modulus.contains(W), "image not inside the modulus at " + fmt({n, j}));
            const auto back = algebra::bijectionEffectiveInverse(field, I, W);
            check.expect(back == J, "forward-inverse at " + fmt({n, j}));
          }
          // opposite direction: subspaces of the modulus of dimension n-j
          for (const auto& W : subspacesWithin(field, modulus, n - j)) {
            const auto J = algebra::bijectionEffectiveInverse(field, I, W);
            check.expectEqual(J.dim(), n * j, "inverse dimension at " + fmt({n, j}));
            check.expect(J.space.contains(I.space), "inverse contains base at " + fmt({n, j}));
            const auto W2 = algebra::bijectionEffectiveForward(field, I, J);
            check.expect(W2 == W, "inverse-forward at " + fmt({n, j}));
          }
        }
      }
    }
    report.checks.push_back(check.take());
  }

  {
    Check check("first-bijection-roundtrip");
    for (int n = 2; n <= nMax; ++n) {
      for (int i1 = 1; i1 < n; ++i1) {
        for (int i2 = i1 + 1; i2 <= n; ++i2) {
          for (const auto& I1 : algebra::enumerateLeftIdeals(field, n, i1)) {
            const auto V1 = algebra::subspaceFromIdeal(field, I1);
            for (const auto& V2 : subspacesWithin(field, V1, n - i2)) {
              const auto I2 = algebra::idealFromSubspace(field, V2, algebra::Side::Left);
              const auto image = algebra::bijectionFirstForward(field, I1, {I2});
              check.expectEqual(image.size(), std::size_t{1}, "image arity");
              check.expectEqual(image[0].dim(), (n - i1) * (i2 - i1),
                                "image dimension at " + fmt({n, i1, i2}));
              const auto back = algebra::bijectionFirstInverse(field, I1, image);
              check.expect(back.size() == 1 && back[0] == I2,
                           "round-trip at " + fmt({n, i1, i2}));
            }
          }
        }
      }
    }
    report.checks.push_back(check.take());
  }

  {
    Check check("last-bijection-roundtrip");
    for (int n = 2; n <= nMax; ++n) {
      for (int ir = 2; ir < n; ++ir) {
        for (int i1 = 1; i1 < ir; ++i1) {
          for (const auto& Ir : algebra::enumerateLeftIdeals(field, n, ir)) {
            const auto Vr = algebra::subspaceFromIdeal(field, Ir);
            // sub-ideals I1 of Ir: V1 contains Vr, enumerate via duals
            for (const auto& I1 : algebra::enumerateLeftIdeals(field, n, i1)) {
              if (!Ir.space.contains(I1.space)) continue;
              const auto image = algebra::bijectionLastForward(field, Ir, {I1});
              check.expectEqual(image[0].dim(), i1 * ir,
                                "image dimension at " + fmt({n, i1, ir}));
              const auto back = algebra::bijectionLastInverse(field, Ir, image);
              check.expect(back.size() == 1 && back[0] == I1,
                           "round-trip at " + fmt({n, i1, ir}));
            }
          }
        }
      }
    }
    report.checks.push_back(check.take());
  }

  {
    Check check("general-bijection-roundtrip");
    for (int n = 3; n <= nMax; ++n) {
      // chains with indices (1, 2, 3) when available, else (1, 2, n)
      const int i3 = n >= 3 ? 3 : n;
      for (const auto& I1 : algebra::enumerateLeftIdeals(field, n, 1)) {
        const auto V1 = algebra::subspaceFromIdeal(field, I1);
        for (const auto& V2 : subspacesWithin(field, V1, n - 2)) {
          const auto I2 = algebra::idealFromSubspace(field, V2, algebra::Side::Left);
          for (const auto& V3 : subspacesWithin(field, V2, n - i3)) {
            const auto I3 = algebra::idealFromSubspace(field, V3, algebra::Side::Left);
            const std::vector<algebra::IdealRep> chain = {I1, I2, I3};
            const auto split = algebra::bijectionGeneralForward(field, chain, 1);
            check.expectEqual(split.below.size(), std::size_t{1}, "below arity");
            check.expectEqual(split.above.size(), std::size_t{1}, "above arity");
            check.expectEqual(split.below[0].dim(), 1 * 2,
                              "below dimension at n=" + std::to_string(n));
            check.expectEqual(split.above[0].dim(), (n - 2) * (i3 - 2),
                              "above dimension at n=" + std::to_string(n));
            const auto back = algebra::bijectionGeneralInverse(field, I2, split);
            check.expect(back.size() == 3 && back[0] == I1 && back[1] == I2 &&
                             back[2] == I3,
                         "round-trip at n=" + std::to_string(n));
          }
        }
      }
    }
    report.checks.push_back(check.take());
  }

  {
    Check check("flag-count-oracle");
    for (int n = 1; n <= std::min(nMax, 4); ++n) {
      for (const auto& indices : allIndexLists(n)) {
        BigInt expected = 1;
        int upper = n;
        for (int j = static_cast<int>(indices.size()) - 1; j >= 0; --j) {
          expected *= gaussianBinomial(upper, indices[j], q);
          upper = indices[j];
        }
        check.expectEqual(algebra::countFlags(n, indices, q), expected,
                          "flag count at n=" + std::to_string(n));
      }
    }
    report.checks.push_back(check.take());
  }

  return report;
}

std::vector<SuiteReport> runSuites(const std::string& name, int q, int nMax) {
  std::vector<SuiteReport> out;
  if (name == "partitions" || name == "all") out.push_back(runPartitionsSuite(nMax));
  if (name == "schur" || name == "all") out.push_back(runSchurSuite(nMax));
  if (name == "chow" || name == "all") out.push_back(runChowSuite(nMax));
  if (name == "algebra" || name == "all") out.push_back(runAlgebraSuite(q, nMax));
  if (out.empty()) throw std::invalid_argument("unknown suite: " + name);
  return out;
}

}  // namespace chowflag::verify
