#include <gtest/gtest.h>

#include <cmath>

#include "slcopula/diagonal.hpp"
#include "slcopula/errors.hpp"
#include "support/generators.hpp"

using namespace slc;

namespace {

bool has_witness(const ClassReport& r, const std::string& condition) {
  for (const Witness& w : r.witnesses) {
    if (w.condition == condition) return true;
  }
  return false;
}

}  // namespace

TEST(DiagonalEval, FamilyM) { EXPECT_DOUBLE_EQ(Diagonal::family_m(0.5)(0.3), 0.15); }

TEST(DiagonalEval, FamilyP) {
  const auto d = Diagonal::family_p(0.8);
  EXPECT_DOUBLE_EQ(d(0.4), 0.2);
  EXPECT_DOUBLE_EQ(d(0.9), 0.9);
}

TEST(DiagonalEval, FamilyBetaAtBreakpoint) {
  const double a = std::exp(-0.5);
  EXPECT_NEAR(Diagonal::family_beta(0.5)(a), 0.30327, 1e-5);
  EXPECT_NEAR(Diagonal::family_beta(0.5)(a), 0.5 * a, 1e-15);
}

TEST(DiagonalEval, OneAtOneForAllFamilies) {
  for (const auto& d : {Diagonal::family_m(0.3), Diagonal::family_p(0.3), Diagonal::family_beta(0.3),
                        Diagonal::step_right(0.3), Diagonal::step_left(0.3), Diagonal::identity(),
                        Diagonal::mixture(DiscreteMeasure({{0.2, 0.5}, {0.9, 0.5}})),
                        reflect(Diagonal::family_p(0.4))}) {
    EXPECT_DOUBLE_EQ(d(1.0), 1.0);
    EXPECT_EQ(d(0.0), 0.0);
  }
}

TEST(DiagonalEval, StepConventionsAtJump) {
  EXPECT_EQ(Diagonal::step_right(0.4)(0.4), 0.4);
  EXPECT_EQ(Diagonal::step_left(0.4)(0.4), 0.0);
  EXPECT_EQ(Diagonal::step_right(0.4)(0.39), 0.0);
  EXPECT_EQ(Diagonal::step_left(0.4)(0.41), 0.41);
}

TEST(DiagonalEval, TabulatedInterpolates) {
  const auto d = Diagonal::tabulated({{0.0, 0.0}, {0.5, 0.3}, {1.0, 1.0}});
  EXPECT_DOUBLE_EQ(d(0.25), 0.15);
  EXPECT_DOUBLE_EQ(d(0.5), 0.3);
  EXPECT_DOUBLE_EQ(d(0.75), 0.65);
}

TEST(DiagonalEval, OutsideUnitIntervalThrows) {
  EXPECT_THROW(Diagonal::family_m(0.5)(-0.01), DomainError);
  EXPECT_THROW(Diagonal::family_m(0.5)(1.01), DomainError);
}

TEST(DiagonalFactories, RejectParametersOutOfRange) {
  EXPECT_THROW(Diagonal::family_m(1.1), SpecError);
  EXPECT_THROW(Diagonal::family_p(0.0), SpecError);
  EXPECT_THROW(Diagonal::family_beta(1.0), SpecError);
  EXPECT_THROW(Diagonal::step_right(-0.1), SpecError);
  EXPECT_THROW(Diagonal::combination({}), SpecError);
}

TEST(DiagonalFactories, MalformedKnots) {
  EXPECT_THROW(Diagonal::tabulated({{0.0, 0.0}}), SpecError);
  EXPECT_THROW(Diagonal::tabulated({{0.0, 0.0}, {0.5, 0.2}, {0.5, 0.3}, {1.0, 1.0}}), SpecError);
  EXPECT_THROW(Diagonal::tabulated({{0.1, 0.0}, {1.0, 1.0}}), SpecError);
  EXPECT_THROW(Diagonal::tabulated({{0.0, 0.0}, {0.9, 0.8}}), SpecError);
  EXPECT_THROW(Diagonal::tabulated({{0.0, 0.0}, {0.5, std::nan("")}, {1.0, 1.0}}), SpecError);
}

TEST(DiagonalDerivative, ClosedFormBranches) {
  const auto d = Diagonal::family_m(0.5);
  EXPECT_DOUBLE_EQ(d.derivative(0.25), 0.5);
  EXPECT_DOUBLE_EQ(d.derivative(0.75), 1.5);
  EXPECT_DOUBLE_EQ(Diagonal::step_right(0.4).derivative(0.7), 1.0);
}

TEST(DiagonalDerivative, KinkThrowsButOneSidedWorks) {
  const auto d = Diagonal::family_m(0.5);
  EXPECT_THROW(d.derivative(0.5), KinkError);
  EXPECT_DOUBLE_EQ(d.derivative(0.5, Side::left), 0.5);
  EXPECT_DOUBLE_EQ(d.derivative(0.5, Side::right), 1.0);
  EXPECT_THROW(Diagonal::step_left(0.3).derivative(0.3), KinkError);
}

TEST(DiagonalDerivative, AgreesWithFiniteDifferences) {
  slc::testing::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const Diagonal d = slc::testing::random_any_diagonal(rng);
    if (!d.jumps().empty()) continue;
    for (int k = 1; k < 20; ++k) {
      const double x = k / 20.0 + 0.0123;
      bool near_kink = false;
      for (double c : d.kinks()) near_kink = near_kink || std::abs(c - x) < 1e-4;
      if (near_kink || x >= 1.0) continue;
      const double h = 1e-6;
      const double fd = (d(x + h) - d(x - h)) / (2.0 * h);
      EXPECT_NEAR(d.derivative(x), fd, 1e-6) << "x = " << x;
    }
  }
}

TEST(DiagonalKinks, DeclaredPerVariant) {
  EXPECT_EQ(Diagonal::family_m(0.5).kinks(), std::vector<double>{0.5});
  EXPECT_TRUE(Diagonal::family_m(0.0).kinks().empty());
  EXPECT_EQ(Diagonal::family_beta(0.5).kinks(), std::vector<double>{std::exp(-0.5)});
  EXPECT_EQ(Diagonal::step_right(0.4).jumps(), std::vector<double>{0.4});
  EXPECT_EQ(reflect(Diagonal::family_p(0.3)).kinks(), std::vector<double>{0.7});
  const auto mix = Diagonal::mixture(DiscreteMeasure({{0.0, 0.25}, {0.2, 0.25}, {0.6, 0.25}, {1.0, 0.25}}));
  EXPECT_EQ(mix.kinks(), (std::vector<double>{0.2, 0.6}));
}

TEST(Reflect, IdentityIsFixedPoint) {
  const auto r = reflect(Diagonal::identity());
  for (int k = 0; k <= 20; ++k) EXPECT_NEAR(r(k / 20.0), k / 20.0, 1e-15);
}

TEST(Reflect, FamilyPHandValue) { EXPECT_DOUBLE_EQ(reflect(Diagonal::family_p(0.5))(0.75), 0.625); }

TEST(Reflect, IsAnInvolution) {
  slc::testing::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const Diagonal d = slc::testing::random_any_diagonal(rng);
    const Diagonal twice = reflect(reflect(d));
    const Diagonal wrapped = Diagonal::reflected(Diagonal::reflected(d));
    for (int k = 0; k <= 50; ++k) {
      const double t = k / 50.0;
      EXPECT_EQ(twice(t), d(t));
      EXPECT_NEAR(wrapped(t), d(t), 1e-14);
    }
  }
}

TEST(Validate, FamilyMIsCopulaClass) {
  const ClassReport r = validate(Diagonal::family_m(0.5));
  EXPECT_TRUE(r.is_diagonal);
  EXPECT_TRUE(r.in_copula_class);
  EXPECT_TRUE(r.in_quasicopula_class);
  EXPECT_TRUE(r.in_semicopula_class);
  EXPECT_TRUE(r.witnesses.empty());
  EXPECT_EQ(strongest_class(r), ClassTag::copula);
}

TEST(Validate, ReflectedFamilyPIsNotCopulaClass) {
  const ClassReport r = validate(reflect(Diagonal::family_p(0.5)));
  EXPECT_TRUE(r.is_diagonal);
  EXPECT_FALSE(r.phi_nondecreasing);
  EXPECT_FALSE(r.in_copula_class);
  ASSERT_TRUE(has_witness(r, "phi_nondecreasing"));
  for (const Witness& w : r.witnesses) {
    if (w.condition != "phi_nondecreasing") continue;
    EXPECT_GT(w.x1, 0.5);
    EXPECT_LT(w.x1, std::sqrt(0.5));
  }
}

TEST(Validate, FamilyBetaIsQuasiButNotCopula) {
  for (double beta : {0.0, 0.25, 0.5, 0.75}) {
    const ClassReport r = validate(Diagonal::family_beta(beta));
    EXPECT_TRUE(r.is_diagonal) << beta;
    EXPECT_TRUE(r.in_quasicopula_class) << beta;
    EXPECT_FALSE(r.in_copula_class) << beta;
    EXPECT_FALSE(r.eta_nonincreasing) << beta;
    EXPECT_EQ(strongest_class(r), ClassTag::quasicopula);
  }
}

TEST(Validate, StepsAreSemiButNotLipschitz) {
  for (const auto& d : {Diagonal::step_right(0.4), Diagonal::step_left(0.4), Diagonal::step_right(1.0)}) {
    const ClassReport r = validate(d);
    EXPECT_TRUE(r.d1 && r.d2 && r.d3);
    EXPECT_FALSE(r.d4);
    EXPECT_TRUE(r.in_semicopula_class);
    EXPECT_FALSE(r.in_quasicopula_class);
    EXPECT_EQ(strongest_class(r), ClassTag::semicopula);
  }
}

TEST(Validate, DegenerateStepsAtZero) {
  EXPECT_TRUE(validate(Diagonal::step_right(0.0)).in_copula_class);
  EXPECT_TRUE(validate(Diagonal::step_left(0.0)).in_copula_class);
  // delta(1) = 0 for the left step at 1.
  EXPECT_FALSE(validate(Diagonal::step_left(1.0)).d1);
}

TEST(Validate, EndpointViolation) {
  const ClassReport r = validate(Diagonal::tabulated({{0.0, 0.0}, {1.0, 0.5}}));
  EXPECT_FALSE(r.d1);
  EXPECT_FALSE(r.is_diagonal);
  EXPECT_FALSE(strongest_class(r).has_value());
  EXPECT_TRUE(has_witness(r, "D1"));
}

TEST(Validate, AboveIdentityViolatesD3) {
  const ClassReport r = validate(Diagonal::tabulated({{0.0, 0.0}, {0.5, 0.6}, {1.0, 1.0}}));
  EXPECT_FALSE(r.d3);
  EXPECT_TRUE(has_witness(r, "D3"));
}

TEST(Validate, DecreasingViolatesD2) {
  const ClassReport r = validate(Diagonal::tabulated({{0.0, 0.0}, {0.5, 0.4}, {0.6, 0.3}, {1.0, 1.0}}));
  EXPECT_FALSE(r.d2);
}

TEST(Validate, SteepRiseViolatesLipschitz) {
  const ClassReport r = validate(Diagonal::tabulated({{0.0, 0.0}, {0.7, 0.2}, {0.8, 0.8}, {1.0, 1.0}}));
  EXPECT_FALSE(r.d4);
  EXPECT_FALSE(r.in_quasicopula_class);
}

TEST(Validate, EnvelopeViolationBlocksQuasi) {
  // phi nondecreasing and 2-Lipschitz, but dips below x + x ln x near 0.5.
  const ClassReport r = validate(Diagonal::tabulated({{0.0, 0.0}, {0.5, 0.1}, {0.75, 0.55}, {1.0, 1.0}}));
  EXPECT_TRUE(r.is_diagonal);
  EXPECT_FALSE(r.envelope_ok);
  EXPECT_FALSE(r.in_quasicopula_class);
  EXPECT_TRUE(has_witness(r, "envelope"));
}

TEST(Validate, IdentityAndProduct) {
  EXPECT_TRUE(validate(Diagonal::identity()).in_copula_class);
  EXPECT_TRUE(validate(Diagonal::family_m(0.0)).in_copula_class);
  EXPECT_TRUE(validate(Diagonal::family_m(1.0)).in_copula_class);
}

TEST(ValidateProperties, ClassInclusionChain) {
  slc::testing::Rng rng(2024);
  int copulas = 0;
  int quasis = 0;
  int semis = 0;
  for (int i = 0; i < 150; ++i) {
    const ClassReport r = validate(slc::testing::random_any_diagonal(rng));
    if (r.in_copula_class) {
      EXPECT_TRUE(r.in_quasicopula_class);
      ++copulas;
    }
    if (r.in_quasicopula_class) {
      EXPECT_TRUE(r.in_semicopula_class);
      ++quasis;
    }
    if (r.in_semicopula_class) ++semis;
    EXPECT_EQ(r.witnesses.empty(), r.in_copula_class && r.nonnegative && r.envelope_ok && r.slope_cap);
  }
  EXPECT_GT(copulas, 10);
  EXPECT_GT(quasis, copulas);
  EXPECT_GT(semis, quasis);
}

TEST(ValidateProperties, DiagonalAxiomsHoldOnGrid) {
  slc::testing::Rng rng(99);
  for (int i = 0; i < 100; ++i) {
    const Diagonal d = slc::testing::random_any_diagonal(rng);
    if (!validate(d).is_diagonal) continue;
    const int n = 200;
    EXPECT_NEAR(d(0.0), 0.0, 1e-12);
    EXPECT_NEAR(d(1.0), 1.0, 1e-12);
    for (int a = 0; a <= n; ++a) {
      const double ta = static_cast<double>(a) / n;
      EXPECT_LE(d(ta), ta + 1e-12);
      for (int b = a + 1; b <= n; b += 7) {
        const double tb = static_cast<double>(b) / n;
        EXPECT_GE(d(tb), d(ta) - 1e-12);
        EXPECT_LE(d(tb) - d(ta), 2.0 * (tb - ta) + 1e-12);
      }
    }
  }
}

TEST(ValidateProperties, CopulaClassDominatesProduct) {
  slc::testing::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const Diagonal d = slc::testing::random_any_diagonal(rng);
    if (!validate(d).in_copula_class) continue;
    for (int k = 0; k <= 500; ++k) {
      const double x = k / 500.0;
      EXPECT_GE(d(x), x * x - 1e-12);
    }
  }
}

TEST(ValidateProperties, QuasiClassRespectsEnvelope) {
  slc::testing::Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const Diagonal d = slc::testing::random_quasi_diagonal(rng);
    const ClassReport r = validate(d);
    ASSERT_TRUE(r.in_quasicopula_class);
    for (int k = 1; k <= 500; ++k) {
      const double x = k / 500.0;
      EXPECT_GE(d(x), x + x * std::log(x) - 1e-12);
    }
  }
}

TEST(ValidateProperties, AdmissibleFamiliesAreDiagonals) {
  for (int k = 0; k <= 20; ++k) {
    const double s = k / 20.0;
    EXPECT_TRUE(validate(Diagonal::family_m(s)).is_diagonal);
    if (s > 0.0) EXPECT_TRUE(validate(Diagonal::family_p(s)).is_diagonal);
    if (s < 1.0) EXPECT_TRUE(validate(Diagonal::family_beta(s)).is_diagonal);
  }
}

TEST(Combination, IsConvex) {
  const auto a = Diagonal::family_m(0.2);
  const auto b = Diagonal::family_p(0.6);
  const auto c = Diagonal::combination({{1.0, a}, {3.0, b}});
  for (int k = 0; k <= 20; ++k) {
    const double t = k / 20.0;
    EXPECT_NEAR(c(t), 0.25 * a(t) + 0.75 * b(t), 1e-15);
  }
  EXPECT_EQ(c.kinks(), (std::vector<double>{0.2, 0.6}));
}

TEST(ValidationGrid, IncludesKinkNeighbourhoods) {
  const auto xs = validation_grid(Diagonal::family_m(0.123456), 10);
  EXPECT_TRUE(std::binary_search(xs.begin(), xs.end(), 0.123456));
  EXPECT_TRUE(std::is_sorted(xs.begin(), xs.end()));
  EXPECT_EQ(xs.front(), 0.0);
  EXPECT_EQ(xs.back(), 1.0);
}
