#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fracvoigt/errors.hpp"
#include "fracvoigt/gamma.hpp"
#include "fracvoigt/mittag_leffler.hpp"
#include "reference_data.hpp"

using namespace fracvoigt;
using namespace fracvoigt::special;

namespace {

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST(Gamma, ReciprocalGammaAtPolesIsZero) {
  EXPECT_EQ(reciprocal_gamma(0.0), 0.0);
  EXPECT_EQ(reciprocal_gamma(-3.0), 0.0);
  EXPECT_NEAR(reciprocal_gamma(0.5), 1.0 / std::sqrt(std::numbers::pi), 1e-16);
}

TEST(Gamma, LogGammaCarriesSign) {
  const LogGamma g = log_gamma(-0.5);  // Gamma(-1/2) = -2 sqrt(pi)
  EXPECT_EQ(g.sign, -1);
  EXPECT_NEAR(g.log_abs, std::log(2.0 * std::sqrt(std::numbers::pi)), 1e-15);
  EXPECT_EQ(log_gamma(-2.0).sign, 0);
}

TEST(Gamma, ReciprocalGammaBeyondTgammaRange) {
  const double direct = reciprocal_gamma(171.2);  // about 5e-308, via the log path
  EXPECT_GT(direct, 0.0);
  EXPECT_LT(rel_err(direct, std::exp(-std::lgamma(171.2))), 1e-12);
}

TEST(MittagLeffler, ClosedForms) {
  EXPECT_NEAR(ml_eval({1.0, 1.0}, 1.0), std::numbers::e, 1e-15);
  EXPECT_DOUBLE_EQ(ml_eval({0.7, 1.3}, 0.0), 1.0 / std::tgamma(1.3));
  EXPECT_NEAR(ml_eval({0.5, 1.0}, -1.0), std::numbers::e * std::erfc(1.0), 1e-15);
  EXPECT_NEAR(ml_eval({1.0, 2.0}, 2.0), (std::exp(2.0) - 1.0) / 2.0, 1e-14);
  EXPECT_NEAR(ml_one(1.0, -1.0), 1.0 / std::numbers::e, 1e-16);
  EXPECT_EQ(ml_one(1.0, 0.0), 1.0);
  EXPECT_NEAR(ml_eval({2.0, 1.0}, -4.0), std::cos(2.0), 1e-14);
  EXPECT_NEAR(ml_eval({2.0, 1.0}, 4.0), std::cosh(2.0), 1e-14);
}

// Values from tests/oracle/ml_oracle.py (mpmath, >= 30 digits).
struct Named {
  double alpha, beta, z, value;
};

TEST(MittagLeffler, OracleValues) {
  const Named cases[] = {
      {0.5, 1.0, -1.0, 0.4275835761558070044108},
      {0.5, 1.0, -4.0, 0.1369994576250613898894},
      {0.5, 0.5, -0.5, 0.2563444114512933495127},
      {0.5, 1.0, -std::sqrt(2.0), 0.3362040024463411956996},
      {0.5, 1.5, -std::sqrt(2.0), 0.4693746511946810198464},
      {0.75, 1.0, -std::pow(0.25, 0.75), 0.6943113321783176324142},
      {0.75, 1.75, -std::pow(0.25, 0.75), 0.8646181197943742015667},
      {0.8, 1.0, -2.0, 0.1897966923637056595976},
      {0.9, 0.9, -30.0, 0.0001182504479430728543223},
      {0.3, 1.3, -1.2, 0.4915761734785817476508},
      {0.6, 2.5, -20.0, 0.0492976519567507343732},
      {1.0, 1.5, -40.0, 0.01428811455191648867117},
      {1.0, 3.2, -70.0, 0.01274413913765613889947},
      {1.5, 1.0, -3.0, -0.1755653737999782429152},
      {0.25, 1.0, 3.0, 6.02438925834012219341e+35},
      {0.1, 1.0, -1.35, 0.4111769447433594828525},
      {0.1, 1.1, -1.35, 0.4361652261160300037101},
  };
  for (const auto& c : cases) {
    EXPECT_LT(rel_err(ml_eval({c.alpha, c.beta}, c.z), c.value), 1e-12)
        << "alpha=" << c.alpha << " beta=" << c.beta << " z=" << c.z;
  }
}

TEST(MittagLeffler, ReferenceGrid) {
  const auto rows = testdata::load_ml_reference();
  ASSERT_EQ(rows.size(), 8000u);
  double worst = 0.0;
  for (const auto& r : rows) {
    const double got = ml_eval({r.alpha, r.beta}, r.z);
    worst = std::max(worst, rel_err(got, r.value));
  }
  EXPECT_LT(worst, 1e-10);
}

TEST(MittagLeffler, TermShiftIdentity) {
  for (double alpha : {0.2, 0.5, 0.8, 1.0, 1.4}) {
    for (double beta : {0.3, 1.0, 1.7}) {
      for (double z : {-90.0, -40.0, -9.0, -4.9, -1.0, 0.3, 2.0, 10.0}) {
        if ((alpha > 1.0 && z < -4.0) || (z > 0.0 && std::pow(z, 1.0 / alpha) > 600.0)) {
          continue;  // unsupported, or E overflows
        }
        const double lhs = ml_eval({alpha, beta}, z);
        const double rhs = z * ml_eval({alpha, alpha + beta}, z) + reciprocal_gamma(beta);
        EXPECT_NEAR(lhs, rhs, 1e-9 * std::max(1.0, std::abs(lhs)))
            << "alpha=" << alpha << " beta=" << beta << " z=" << z;
      }
    }
  }
}

TEST(MittagLeffler, ExponentialReduction) {
  for (int i = 0; i <= 250; ++i) {
    const double z = -20.0 + 25.0 * i / 250.0;
    EXPECT_LE(std::abs(ml_eval({1.0, 1.0}, z) - std::exp(z)), 1e-10 * std::max(1.0, std::exp(z))) << z;
  }
}

TEST(MittagLeffler, ValueAtZero) {
  for (double beta : {0.1, 0.5, 1.0, 2.5, 7.0}) {
    EXPECT_DOUBLE_EQ(ml_eval({0.6, beta}, 0.0), 1.0 / std::tgamma(beta));
  }
}

TEST(MittagLeffler, NonnegativeAndNonincreasingOnNegativeAxis) {
  for (double alpha : {0.15, 0.4, 0.65, 0.9, 1.0}) {
    for (double beta_shift : {0.0, 0.3, 1.0, 2.2}) {
      const MLParams p(alpha, alpha + beta_shift);
      double prev = ml_eval(p, 0.0);
      for (int i = 1; i <= 1000; ++i) {
        const double v = ml_eval(p, -50.0 * i / 1000.0);
        ASSERT_GE(v, 0.0);
        ASSERT_LE(v, prev + 1e-15) << "alpha=" << alpha << " beta=" << p.beta() << " i=" << i;
        prev = v;
      }
    }
  }
}

// Each pair of neighbouring branches must agree where ml_eval switches.
TEST(MittagLeffler, BranchesAgreeAtSwitchPoints) {
  for (double alpha : {0.25, 0.5, 0.75, 0.95}) {
    for (double beta : {0.25, 1.0, 1.8, 3.0}) {
      const MLParams p(alpha, beta);
      const double z_series = -std::pow(5.0, alpha);
      const double a = ml_eval_branch(p, z_series, MLBranch::Series);
      const double b = ml_eval_branch(p, z_series, MLBranch::Integral);
      EXPECT_LT(std::abs(a - b), 1e-8 * std::abs(a)) << alpha << " " << beta;

      const double z_asym = -std::pow(60.0, alpha);
      if (z_asym >= -kMaxNegativeArgument) {
        const double c = ml_eval_branch(p, z_asym, MLBranch::Integral);
        const double d = ml_eval_branch(p, z_asym, MLBranch::Asymptotic);
        EXPECT_LT(std::abs(c - d), 1e-8 * std::abs(c)) << alpha << " " << beta;
      }
    }
  }
  for (double beta : {0.5, 1.0, 1.5, 3.0}) {
    const MLParams p(1.0, beta);
    const double a = ml_eval_branch(p, -5.0, MLBranch::Series);
    const double b = ml_eval_branch(p, -5.0, MLBranch::ExpIntegral);
    EXPECT_LT(std::abs(a - b), 1e-8 * std::abs(a)) << beta;
  }
}

TEST(MittagLeffler, BranchSelection) {
  EXPECT_EQ(select_branch({0.5, 1.0}, 2.0), MLBranch::Series);
  EXPECT_EQ(select_branch({0.5, 1.0}, -1.0), MLBranch::Series);
  EXPECT_EQ(select_branch({0.5, 1.0}, -4.0), MLBranch::Integral);
  EXPECT_EQ(select_branch({0.5, 1.0}, -50.0), MLBranch::Asymptotic);
  EXPECT_EQ(select_branch({1.0, 1.0}, -50.0), MLBranch::ExpIntegral);
  EXPECT_EQ(to_string(MLBranch::Integral), "integral");
}

TEST(MittagLeffler, Errors) {
  EXPECT_THROW(MLParams(0.0, 1.0), DomainError);
  EXPECT_THROW(MLParams(2.5, 1.0), DomainError);
  EXPECT_THROW(MLParams(0.5, 0.0), DomainError);
  EXPECT_THROW(ml_eval({0.5, 1.0}, -100.5), DomainError);
  EXPECT_THROW(ml_eval({0.5, 1.0}, 31.0), DomainError);
  EXPECT_THROW(ml_eval({1.5, 1.0}, -60.0), AccuracyError);
  EXPECT_THROW(ml_eval_branch({0.5, 1.0}, 1.0, MLBranch::Asymptotic), DomainError);
}

TEST(DerivativeProbe, Examples) {
  const double d1 = ml_deriv_sign_probe({1.0, 1.0}, 1.0, 1, 1e-3);
  EXPECT_NEAR(d1, -std::exp(-1.0), 1e-6);
  EXPECT_NEAR(ml_deriv_sign_probe({0.5, 0.5}, 0.5, 0, 1e-3), 0.2563444114512933495127, 1e-14);
  EXPECT_GE(ml_deriv_sign_probe({0.8, 1.0}, 2.0, 2, 1e-3), 0.0);
}

TEST(DerivativeProbe, AlternatingSigns) {
  for (double alpha : {0.2, 0.5, 0.8, 1.0}) {
    for (double beta_shift : {0.0, 0.5, 1.5}) {
      const MLParams p(alpha, alpha + beta_shift);
      for (int i = 1; i <= 40; ++i) {
        const double x = 50.0 * i / 41.0;
        for (int n = 0; n <= 3; ++n) {
          const double sign = (n % 2 == 0) ? 1.0 : -1.0;
          EXPECT_GE(sign * ml_deriv_sign_probe(p, x, n, 1e-3), -1e-6)
              << "alpha=" << alpha << " beta=" << p.beta() << " x=" << x << " n=" << n;
        }
      }
    }
  }
}

TEST(DerivativeProbe, RejectsInvalidArguments) {
  EXPECT_THROW(ml_deriv_sign_probe({0.5, 1.0}, 1.0, 4, 1e-3), DomainError);
  EXPECT_THROW(ml_deriv_sign_probe({0.5, 1.0}, 1.0, 1, 0.0), DomainError);
  EXPECT_THROW(ml_deriv_sign_probe({0.5, 1.0}, -1.0, 1, 1e-3), DomainError);
  EXPECT_THROW(ml_deriv_sign_probe({0.5, 0.4}, 1.0, 1, 1e-3), DomainError);
}
