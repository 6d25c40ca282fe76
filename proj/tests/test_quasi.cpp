#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "perispline/corpus.hpp"
#include "perispline/quasi.hpp"

using namespace perispline;

TEST_CASE("binomial coefficients") {
  CHECK(binomial_coefficient(0, 0) == 1);
  CHECK(binomial_coefficient(5, 2) == 10);
  CHECK(binomial_coefficient(10, 5) == 252);
  CHECK(binomial_coefficient(30, 15) == BigInt(155117520));
  CHECK(binomial_coefficient(4, 7) == 0);
  CHECK(binomial_coefficient(-1, 0) == 0);
  BigInt row = 0;
  for (int k = 0; k <= 10; ++k) row += binomial_coefficient(10, k);
  CHECK(row == 1024);
}

TEST_CASE("alternating binomial sums vanish below the order and are l! at it") {
  for (int l = 0; l <= 8; ++l) {
    BigInt factorial = 1;
    for (int i = 2; i <= l; ++i) factorial *= i;
    for (int shift : {0, 1, 5, -3, l / 2}) {
      for (int k = 0; k < l; ++k) {
        CAPTURE(l);
        CAPTURE(k);
        CAPTURE(shift);
        CHECK(binomial_alternating_sum(l, k, shift) == 0);
      }
      CHECK(binomial_alternating_sum(l, l, shift) == factorial);
    }
  }
  CHECK(binomial_alternating_sum(2, 1, 0) == 0);
  CHECK(binomial_alternating_sum(3, 3, 0) == 6);
  CHECK_THROWS_AS(binomial_alternating_sum(-1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(binomial_alternating_sum(0, -1, 0), std::invalid_argument);
}

TEST_CASE("arcsin ratio series base coefficients") {
  // arcsin(t)/t = 1 + t^2/6 + 3 t^4/40 + 5 t^6/112 + ...
  const std::vector<BigRational> a = arcsin_ratio_power_series(1, 4);
  CHECK(a[0] == BigRational(1));
  CHECK(a[1] == BigRational(1, 6));
  CHECK(a[2] == BigRational(3, 40));
  CHECK(a[3] == BigRational(5, 112));
  const std::vector<BigRational> sq = arcsin_ratio_power_series(2, 3);
  CHECK(sq[0] == BigRational(1));
  CHECK(sq[1] == BigRational(1, 3));
  CHECK(sq[2] == BigRational(8, 45));
  CHECK_THROWS_AS(arcsin_ratio_power_series(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(arcsin_ratio_power_series(2, 0), std::invalid_argument);
}

TEST_CASE("smoothing weights: frozen low orders, positivity, normalization") {
  const DeltaSeries d2 = tw_delta(2);
  REQUIRE(d2.delta.size() == 2);
  CHECK(d2.delta[0] == BigRational(1));
  CHECK(d2.delta[1] == BigRational(1, 3));

  const DeltaSeries d3 = tw_delta(3);
  REQUIRE(d3.delta.size() == 3);
  CHECK(d3.delta[0] == BigRational(1));
  CHECK(d3.delta[1] == BigRational(1, 2));
  CHECK(d3.delta[2] == BigRational(37, 120));

  const DeltaSeries d4 = tw_delta(4);
  REQUIRE(d4.delta.size() == 4);
  CHECK(d4.delta[1] == BigRational(2, 3));
  CHECK(d4.delta[2] == BigRational(7, 15));
  CHECK(d4.delta[3] == BigRational(328, 945));

  for (int r = 2; r <= 12; ++r) {
    const DeltaSeries d = tw_delta(r);
    CAPTURE(r);
    REQUIRE(d.delta.size() == static_cast<std::size_t>(r));
    CHECK(d.delta[0] == BigRational(1));
    for (const BigRational& x : d.delta) CHECK(x > 0);
  }
  CHECK_THROWS_AS(tw_delta(1), std::invalid_argument);
  CHECK_THROWS_AS(tw_delta(13), std::invalid_argument);
}

TEST_CASE("nodal stencils: frozen low orders, exact normalization") {
  const QuasiCoefficients q2 = tw_coefficients(2);
  REQUIRE(q2.exact.size() == 2);
  CHECK(q2.exact[0] == BigRational(7, 6));
  CHECK(q2.exact[1] == BigRational(-1, 12));

  const QuasiCoefficients q3 = tw_coefficients(3);
  REQUIRE(q3.exact.size() == 3);
  CHECK(q3.exact[0] == BigRational(437, 320));
  CHECK(q3.exact[1] == BigRational(-97, 480));
  CHECK(q3.exact[2] == BigRational(37, 1920));

  for (int r = 2; r <= 12; ++r) {
    const QuasiCoefficients qc = tw_coefficients(r);
    CAPTURE(r);
    CHECK(qc.r == r);
    REQUIRE(qc.stencil.size() == static_cast<std::size_t>(r));
    // The symbol at xi = 0 is exactly 1 (constants are reproduced).
    CHECK(quasi_symbol_exact(qc, 1) == BigRational(1));
    // The cosine form at xi = pi matches the delta form with sin^2 = 1.
    CHECK(quasi_symbol_exact(qc, -1) == delta_symbol_exact(tw_delta(r), -1));
    // Doubles are the rounded rationals.
    for (std::size_t m = 0; m < qc.stencil.size(); ++m)
      CHECK(qc.stencil[m] == qc.exact[m].convert_to<double>());
  }
  CHECK(quasi_symbol_exact(tw_coefficients(2), -1) == BigRational(4, 3));
}

TEST_CASE("symbol evaluation in doubles matches the exact endpoints") {
  const double pi = std::numbers::pi;
  for (int r : {2, 3, 5, 8}) {
    const QuasiCoefficients qc = tw_coefficients(r);
    const DeltaSeries d = tw_delta(r);
    CAPTURE(r);
    CHECK(quasi_symbol(qc, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(quasi_symbol(qc, pi) ==
          doctest::Approx(quasi_symbol_exact(qc, -1).convert_to<double>()).epsilon(1e-13));
    CHECK(delta_symbol(d, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    // The two trigonometric forms agree pointwise.
    for (double xi : {0.3, 1.1, 2.0, 2.9})
      CHECK(quasi_symbol(qc, xi) == doctest::Approx(delta_symbol(d, xi)).epsilon(1e-12));
  }
}

TEST_CASE("q(xi) corrects the basis symbol to order 2r") {
  // |q(xi) vhat_r(xi) - 1| must scale like xi^{2r}: the residual ratio
  // between xi and 2 xi approaches 2^{2r}.
  for (int r : {2, 3, 4}) {
    const QuasiCoefficients qc = tw_coefficients(r);
    auto resid = [&](double xi) {
      return std::abs(quasi_symbol(qc, xi) * cardinal_bspline_fourier(r, xi) - 1.0);
    };
    const double r1 = resid(0.2);
    const double r2 = resid(0.4);
    CAPTURE(r);
    CHECK(r1 > 0.0);
    CHECK(r2 / r1 == doctest::Approx(std::pow(2.0, 2 * r)).epsilon(0.2));
  }
}

TEST_CASE("raw stencils: padding and validation") {
  const QuasiCoefficients qc = quasi_from_stencil(3, {1.0});
  REQUIRE(qc.stencil.size() == 3);
  CHECK(qc.stencil[0] == 1.0);
  CHECK(qc.stencil[1] == 0.0);
  CHECK(qc.stencil[2] == 0.0);
  CHECK(qc.exact.empty());
  CHECK(quasi_symbol(qc, 1.0) == 1.0);
  CHECK_THROWS_AS(quasi_symbol_exact(qc, 1), std::invalid_argument);
  CHECK_THROWS_AS(quasi_from_stencil(2, {1.0, 2.0, 3.0}), std::invalid_argument);
  CHECK_THROWS_AS(quasi_from_stencil(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(quasi_from_stencil(1, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(quasi_symbol_exact(tw_coefficients(2), 0), std::invalid_argument);
  CHECK_THROWS_AS(delta_symbol_exact(tw_delta(2), 2), std::invalid_argument);
}

TEST_CASE("alignment shift of the basis phase") {
  CHECK(quasi_alignment_shift(2) == 0.0);
  CHECK(quasi_alignment_shift(3) == 0.5);
  CHECK(quasi_alignment_shift(4) == 1.0);
}

TEST_CASE("constants are reproduced through the stencil") {
  TestFunction c;
  c.label = "const";
  c.value = [](double) { return 2.5; };
  const SplineSpace space(3, 16);
  const PeriodicSpline s = quasi_interpolate(space, tw_coefficients(3), c);
  for (double v : s.coeffs) CHECK(v == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(spline_eval(s, 0.37) == doctest::Approx(2.5).epsilon(1e-13));
}

TEST_CASE("aligned L2 convergence at order r = 2") {
  const TestFunction u = corpus_function("sin1");
  const QuasiCoefficients qc = tw_coefficients(2);
  std::vector<double> errs;
  for (int N : {32, 64, 128}) {
    const SplineSpace space(2, N);
    const PeriodicSpline s = quasi_interpolate(space, qc, u);
    errs.push_back(l2_error(u, s, quasi_alignment_shift(2) * space.h()));
  }
  for (std::size_t i = 1; i < errs.size(); ++i) {
    CAPTURE(i);
    CHECK(std::log2(errs[i - 1] / errs[i]) == doctest::Approx(2.0).epsilon(0.08));
  }
}

TEST_CASE("alignment shift matters for odd orders") {
  // With r = 3 the spline tracks u(x - h/2); measuring against the aligned
  // target converges at order 3, the unaligned error stalls at order 1.
  const TestFunction u = corpus_function("sin1");
  const QuasiCoefficients qc = tw_coefficients(3);
  const SplineSpace coarse(3, 32), fine(3, 64);
  const PeriodicSpline sc = quasi_interpolate(coarse, qc, u);
  const PeriodicSpline sf = quasi_interpolate(fine, qc, u);
  const double ea_c = l2_error(u, sc, quasi_alignment_shift(3) * coarse.h());
  const double ea_f = l2_error(u, sf, quasi_alignment_shift(3) * fine.h());
  CHECK(std::log2(ea_c / ea_f) == doctest::Approx(3.0).epsilon(0.1));
  const double eu_c = l2_error(u, sc);
  const double eu_f = l2_error(u, sf);
  CHECK(std::log2(eu_c / eu_f) == doctest::Approx(1.0).epsilon(0.15));
  CHECK(eu_c > 10.0 * ea_c);
}

TEST_CASE("sup bound holds on sampled grids") {
  CHECK(quasi_sup_bound(tw_coefficients(2)) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  for (int r : {2, 3, 4}) {
    const QuasiCoefficients qc = tw_coefficients(r);
    const double c0 = quasi_sup_bound(qc);
    const SplineSpace space(r, 64);
    for (const char* label : {"sin1", "expsin", "randtrig"}) {
      const TestFunction u = corpus_function(label);
      const PeriodicSpline s = quasi_interpolate(space, qc, u);
      CAPTURE(r);
      CAPTURE(label);
      CHECK(sup_norm(s) <= c0 * function_sup_norm(u, 0, space) * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("stability report wraps the stencil application") {
  const SplineSpace space(2, 32);
  const StabilityReport rep =
      quasi_stability_report(space, tw_coefficients(2), corpus_function("sin1"), 0);
  CHECK(rep.applicable);
  CHECK(rep.ratio_l2 == doctest::Approx(1.0).epsilon(0.05));
  CHECK(rep.ratio_sup == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("order mismatch between stencil and space is rejected") {
  const TestFunction u = corpus_function("sin1");
  CHECK_THROWS_AS(quasi_interpolate(SplineSpace(3, 16), tw_coefficients(2), u),
                  std::invalid_argument);
  TestFunction empty;
  CHECK_THROWS_AS(quasi_interpolate(SplineSpace(2, 16), tw_coefficients(2), empty),
                  std::invalid_argument);
}
