#include "perispline/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "perispline/corpus.hpp"
#include "perispline/harness.hpp"
#include "perispline/quasi.hpp"

namespace perispline {

namespace {

constexpr double kNoiseFloor = 1e-12;

struct Check {
  bool ok = true;
  bool truncated = false;
  std::string detail;

  void fail(const std::string& msg) {
    ok = false;
    if (detail.size() >= 400) {
      if (!truncated) {
        detail += "; ...";
        truncated = true;
      }
      return;
    }
    if (!detail.empty()) detail += "; ";
    detail += msg;
  }
  void require(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
  }
};

std::string fmt(double v) { return format_double(v); }

std::vector<double> random_coeffs(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> v(n);
  for (double& x : v) x = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  return v;
}

TestFunction wrap_spline(const PeriodicSpline& s) {
  TestFunction f;
  f.label = "spline";
  f.value = [s](double x) { return spline_eval(s, x); };
  f.deriv = [s](int l, double x) { return spline_eval(derivative_power(s, l), x); };
  return f;
}

TestFunction constant_one() {
  TestFunction f;
  f.label = "one";
  f.value = [](double) { return 1.0; };
  f.deriv = [](int l, double) { return l == 0 ? 1.0 : 0.0; };
  return f;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// ---- criterion bodies -------------------------------------------------

Check c1_gram_stencil() {
  Check c;
  for (int r = 1; r <= 8; ++r) {
    const std::vector<double> g = gram_stencil(r);
    double rowsum = g[0];
    for (int j = 1; j < r; ++j) rowsum += 2.0 * g[static_cast<std::size_t>(j)];
    c.require(std::abs(rowsum - 1.0) <= 1e-13,
              "rowsum residual " + fmt(std::abs(rowsum - 1.0)) + " at r=" + std::to_string(r));

    // The stencil entries are values of the order-2r cardinal B-spline at
    // integer offsets; that identity plus an independent per-cell Gauss
    // quadrature of the basis products pins the values from two directions.
    for (int j = 1; j <= r; ++j)
      c.require(std::abs(g[static_cast<std::size_t>(j - 1)] -
                         cardinal_bspline(2 * r, static_cast<double>(j - 1))) <= 1e-15,
                "order-2r identity off at r=" + std::to_string(r) + " j=" + std::to_string(j));

    const SplineSpace space(r, 8 * r);
    const GaussRule rule = gauss_legendre(std::min(2 * r + 3, 64));
    const double h = space.h();
    for (int j = 1; j <= r; ++j) {
      double q = 0.0;
      for (int cell = 0; cell < space.N; ++cell)
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
          const double x = (cell + 0.5 * (rule.nodes[k] + 1.0)) * h;
          q += 0.5 * h * rule.weights[k] * basis_eval(space, j, x) * basis_eval(space, 1, x);
        }
      q /= h;
      const double err = std::abs(q - g[static_cast<std::size_t>(j - 1)]);
      c.require(err <= 1e-13, "quadrature mismatch " + fmt(err) + " at r=" + std::to_string(r) +
                                  " j=" + std::to_string(j));
    }
  }
  return c;
}

Check c2_symbol_consistency() {
  Check c;
  for (int r = 2; r <= 6; ++r) {
    const SymbolEvaluator ev = make_symbol_evaluator(r);
    const SpectralBounds sb = spectral_bounds(r);
    for (int N0 : {16, 64, 256}) {
      const int N = std::max(N0, 4 * r);  // the space requires N >= 4r
      const std::vector<double> lam = eigenvalues_symmetric(make_gram_matrix(SplineSpace(r, N)));
      double resid = 0.0, lmin = lam[0], lmax = lam[0];
      for (int k = 0; k < N; ++k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / N;
        resid = std::max(resid, std::abs(lam[static_cast<std::size_t>(k)] - symbol_eval(ev, theta)));
        lmin = std::min(lmin, lam[static_cast<std::size_t>(k)]);
        lmax = std::max(lmax, lam[static_cast<std::size_t>(k)]);
      }
      const std::string tag = " at r=" + std::to_string(r) + " N=" + std::to_string(N);
      c.require(resid <= 1e-10, "eig/symbol residual " + fmt(resid) + tag);
      c.require(lmin >= sb.lower - 1e-12, "lambda_min " + fmt(lmin) + " below g_lower" + tag);
      c.require(std::abs(lmax - 1.0) <= 1e-10, "lambda_max error " + fmt(lmax - 1.0) + tag);
    }
  }
  return c;
}

Check c3_banded_truncation() {
  Check c;
  for (int r = 2; r <= 5; ++r) {
    const GramSystem gs = make_gram_system(SplineSpace(r, 64));
    const BandedInverse banded = banded_truncation_inverse(gs);
    c.require(banded.lambda_min >= gs.bounds.lower - 1e-12,
              "lambda_min(banded) " + fmt(banded.lambda_min) + " below g_lower at r=" +
                  std::to_string(r));
    const DemkoBound db = demko_bound(banded.lambda_min, banded.lambda_max, r - 1);
    long bad = 0;
    double worst = 0.0;
    for (std::size_t i = 0; i < banded.inverse.rows; ++i)
      for (std::size_t j = 0; j < banded.inverse.cols; ++j) {
        const double d = std::abs(static_cast<double>(i) - static_cast<double>(j));
        const double excess =
            std::abs(banded.inverse(i, j)) - (db.C * std::pow(db.q, -d) + kNoiseFloor);
        if (excess > 0.0) {
          ++bad;
          worst = std::max(worst, excess);
        }
      }
    c.require(bad == 0, std::to_string(bad) + " Demko violations (worst " + fmt(worst) +
                            ") at r=" + std::to_string(r));
  }
  return c;
}

Check c4_decay_constants() {
  Check c;
  // Envelope transfer: banded constants certify the exact inverse row.
  for (int r = 2; r <= 5; ++r) {
    const GramSystem gs = make_gram_system(SplineSpace(r, 128));
    const std::vector<double> gamma = inverse_first_row(gs);
    const BandedInverse banded = banded_truncation_inverse(gs);
    const DemkoBound transfer = demko_bound(gs.bounds.lower, banded.lambda_max, r - 1);
    const DecayEnvelope env = decay_envelope_from_banded(gs, transfer, gamma);
    const DecayCertificate cert = certify_decay(gamma, r, env.C1, env.C2, env.q, kNoiseFloor);
    c.require(cert.valid, "certificate invalid at r=" + std::to_string(r) + " (slack " +
                              fmt(cert.max_slack) + ")");
  }
  for (int r = 2; r <= 5; ++r) {
    // Fit against the fixed rate implied by the spectral bounds for this r,
    // so only the constant is free to move with N.
    const double q = demko_bound(spectral_bounds(r).lower, 1.0, r - 1).q;
    double cmin = std::numeric_limits<double>::infinity(), cmax = 0.0;
    for (int N : {64, 128, 256, 512}) {
      const std::vector<double> gamma = inverse_first_row(make_gram_system(SplineSpace(r, N)));
      const double C = fit_decay_constant(gamma, r, q, kNoiseFloor);
      cmin = std::min(cmin, C);
      cmax = std::max(cmax, C);
    }
    c.require(cmax <= 1.05 * cmin,
              "fitted C spread " + fmt(cmax / cmin) + " at r=" + std::to_string(r));

    double wmin = std::numeric_limits<double>::infinity(), wmax = 0.0;
    for (int N : {64, 128, 256, 512, 1024, 2048, 4096}) {
      const double w =
          weighted_gamma_sum(inverse_first_row(make_gram_system(SplineSpace(r, N))));
      wmin = std::min(wmin, w);
      wmax = std::max(wmax, w);
    }
    const double cap = (r == 2) ? 1.01 : 1.05;
    c.require(wmax <= cap * wmin,
              "weighted sum spread " + fmt(wmax / wmin) + " at r=" + std::to_string(r));
  }
  return c;
}

Check c5_order2_anchors() {
  Check c;
  const std::vector<double> g = gram_stencil(2);
  c.require(std::abs(g[0] - 2.0 / 3.0) <= 1e-15 && std::abs(g[1] - 1.0 / 6.0) <= 1e-15,
            "stencil(2) != (2/3, 1/6)");
  const SpectralBounds sb = spectral_bounds(2);
  c.require(std::abs(sb.lower - 1.0 / 3.0) <= 1e-12, "g_lower(2) = " + fmt(sb.lower));

  // Bandwidth-1 bound at (lambda_min, lambda_max) = (1/3, 1): both constants
  // collapse to 2 + sqrt(3).
  const DemkoBound anchor = demko_bound(1.0 / 3.0, 1.0, 1);
  const double golden = 2.0 + std::sqrt(3.0);
  c.require(std::abs(anchor.C - golden) <= 1e-9, "anchor C " + fmt(anchor.C));
  c.require(std::abs(anchor.q - golden) <= 1e-9, "anchor q " + fmt(anchor.q));

  const GramSystem gs = make_gram_system(SplineSpace(2, 64));
  const std::vector<double> gamma = inverse_first_row(gs);
  c.require(std::abs(gamma[0] - std::sqrt(3.0)) <= 1e-12, "diagonal entry " + fmt(gamma[0]));
  double rowsum = 0.0;
  for (double x : gamma) rowsum += x;
  c.require(std::abs(rowsum - 1.0) <= 1e-12, "inverse row sum " + fmt(rowsum));
  const double rho = 2.0 - std::sqrt(3.0);
  for (int i = 2; i <= 16; ++i) {
    const double ratio =
        std::abs(gamma[static_cast<std::size_t>(i)] / gamma[static_cast<std::size_t>(i - 1)]);
    c.require(std::abs(ratio - rho) <= 1e-6,
              "gamma ratio " + fmt(ratio) + " at i=" + std::to_string(i));
  }
  return c;
}

Check c6_projection_identities() {
  Check c;
  std::uint64_t seed = 7110;
  // Exact on the spline space.
  for (int r = 2; r <= 5; ++r) {
    for (int N : {4 * r, 64, 256}) {
      const SplineSpace space(r, N);
      const PeriodicSpline s =
          make_spline(space, random_coeffs(static_cast<std::size_t>(N), seed++));
      const TestFunction u = wrap_spline(s);
      const ProjectionResult P = project(space, u);
      double err = 0.0;
      for (std::size_t i = 0; i < s.coeffs.size(); ++i)
        err = std::max(err, std::abs(P.spline.coeffs[i] - s.coeffs[i]));
      const std::string tag = " at r=" + std::to_string(r) + " N=" + std::to_string(N);
      c.require(err <= 1e-11 * std::max(1.0, max_abs(s.coeffs)),
                "reproduction error " + fmt(err) + tag);

      const double gram_norm = sobolev_seminorm(s, 0);
      const double quad_norm = function_l2_norm(u, 0, space);
      c.require(std::abs(gram_norm - quad_norm) <= 1e-12 * std::max(1.0, quad_norm),
                "norm identity residual " + fmt(gram_norm - quad_norm) + tag);
    }
  }
  // Residual orthogonality against every basis function, using a finer
  // independent quadrature than the projection itself; and idempotence.
  for (int r = 2; r <= 5; ++r) {
    for (const char* label : {"cos2", "expsin"}) {
      const SplineSpace space(r, 32);
      const TestFunction u = corpus_function(label);
      const ProjectionResult P = project(space, u);
      const std::vector<double> b = rhs_moments(space, u, 24);
      const std::vector<double> Gc = matvec(make_gram_matrix(space), P.spline.coeffs);
      double resid = 0.0;
      for (std::size_t j = 0; j < b.size(); ++j)
        resid = std::max(resid, std::abs(b[j] - space.h() * Gc[j]));
      const std::string tag = std::string(" for ") + label + " at r=" + std::to_string(r);
      c.require(resid <= 1e-10, "orthogonality residual " + fmt(resid) + tag);

      const ProjectionResult P2 = project(space, wrap_spline(P.spline));
      double drift = 0.0;
      for (std::size_t i = 0; i < P.spline.coeffs.size(); ++i)
        drift = std::max(drift, std::abs(P2.spline.coeffs[i] - P.spline.coeffs[i]));
      c.require(drift <= 1e-12 * std::max(1.0, max_abs(P.spline.coeffs)),
                "idempotence drift " + fmt(drift) + tag);
    }
  }
  {
    const SplineSpace space(3, 32);
    TestFunction konst;
    konst.label = "const";
    konst.value = [](double) { return 0.7853981633974483; };
    konst.deriv = [](int l, double) { return l == 0 ? 0.7853981633974483 : 0.0; };
    const ProjectionResult P = project(space, konst);
    for (double v : P.spline.coeffs)
      c.require(std::abs(v - 0.7853981633974483) <= 1e-12, "constant reproduction " + fmt(v));
  }
  // l = 0 stability: the projection never amplifies the L2 norm, on the
  // whole corpus.
  for (int r = 2; r <= 5; ++r)
    for (int N : {32, 64, 256})
      for (const std::string& label : corpus_labels()) {
        const StabilityReport rep = stability_report(SplineSpace(r, N), corpus_function(label), 0);
        c.require(rep.applicable && rep.ratio_l2 <= 1.0 + 1e-12,
                  "l2 contraction ratio " + fmt(rep.ratio_l2) + " for " + label + " at r=" +
                      std::to_string(r) + " N=" + std::to_string(N));
      }
  return c;
}

Check c7_stability_plateaus() {
  Check c;
  for (int r : {2, 3, 4})
    for (int l = 0; l <= r - 1; ++l)
      for (const char* label : {"sin1", "cos2", "expsin"}) {
        const TestFunction u = corpus_function(label);
        double l2min = std::numeric_limits<double>::infinity(), l2max = 0.0;
        double supmin = std::numeric_limits<double>::infinity(), supmax = 0.0;
        bool usable = true;
        for (int k = 0; k <= 3; ++k) {
          const int N = (4 * r) << k;
          const StabilityReport rep = stability_report(SplineSpace(r, N), u, l);
          if (!rep.applicable) {
            usable = false;
            break;
          }
          l2min = std::min(l2min, rep.ratio_l2);
          l2max = std::max(l2max, rep.ratio_l2);
          supmin = std::min(supmin, rep.ratio_sup);
          supmax = std::max(supmax, rep.ratio_sup);
        }
        const std::string tag = std::string(" for ") + label + " at r=" + std::to_string(r) +
                                " l=" + std::to_string(l);
        if (!usable) {
          c.fail("report not applicable" + tag);
          continue;
        }
        c.require(l2max <= 1.05 * l2min, "L2 plateau spread " + fmt(l2max / l2min) + tag);
        c.require(supmax <= 1.05 * supmin, "sup plateau spread " + fmt(supmax / supmin) + tag);
      }
  return c;
}

Check c8_binomial_sums() {
  Check c;
  for (int l = 1; l <= 12; ++l) {
    for (int k = 0; k < l; ++k) {
      c.require(binomial_alternating_sum(l, k, 0) == 0,
                "unshifted sum nonzero at l=" + std::to_string(l) + " k=" + std::to_string(k));
      c.require(binomial_alternating_sum(l, k, l / 2) == 0,
                "shifted sum nonzero at l=" + std::to_string(l) + " k=" + std::to_string(k));
    }
  }
  BigInt factorial = 1;
  for (int l = 0; l <= 12; ++l) {
    if (l > 0) factorial *= l;
    // At k = l the sum equals l! exactly for every shift (the (-m)^l form
    // absorbs the (-1)^l of the classical alternating power sum); it does not
    // vanish, which pins the vanishing range k <= l-1 as maximal.
    c.require(binomial_alternating_sum(l, l, 0) == factorial,
              "sharpness: k = l sum != l! at l=" + std::to_string(l));
    c.require(binomial_alternating_sum(l, l, l / 2) == factorial,
              "shifted boundary value != l! at l=" + std::to_string(l));
  }
  return c;
}

Check c9_tw_exactness() {
  Check c;
  {
    const DeltaSeries d = tw_delta(2);
    c.require(d.delta.size() == 2 && d.delta[0] == BigRational(1) &&
                  d.delta[1] == BigRational(1, 3),
              "tw_delta(2) != (1, 1/3)");
    const QuasiCoefficients qc = tw_coefficients(2);
    c.require(qc.exact.size() == 2 && qc.exact[0] == BigRational(7, 6) &&
                  qc.exact[1] == BigRational(-1, 12),
              "tw stencil(2) != (7/6, -1/12)");
  }
  {
    const std::vector<BigRational> sq = arcsin_ratio_power_series(2, 3);
    c.require(sq[2] == BigRational(8, 45), "series engine tau^4 term != 8/45");
  }
  for (int r = 2; r <= 12; ++r) {
    const DeltaSeries d = tw_delta(r);
    c.require(d.delta[0] == BigRational(1), "delta_0 != 1 at r=" + std::to_string(r));
    for (const BigRational& x : d.delta)
      c.require(x > 0, "nonpositive delta at r=" + std::to_string(r));
    const QuasiCoefficients qc = delta_to_stencil(d);
    c.require(quasi_symbol_exact(qc, +1) == BigRational(1),
              "symbol at 0 != 1 at r=" + std::to_string(r));
    c.require(quasi_symbol_exact(qc, -1) == delta_symbol_exact(d, -1),
              "dual evaluation mismatch at xi=pi, r=" + std::to_string(r));
  }
  // The stencil sums to 1, so constants come back exactly.
  {
    const TestFunction one = constant_one();
    for (int r = 2; r <= 8; ++r) {
      const SplineSpace space(r, std::max(4 * r, 16));
      const PeriodicSpline Q = quasi_interpolate(space, tw_coefficients(r), one);
      double err = 0.0;
      for (double v : Q.coeffs) err = std::max(err, std::abs(v - 1.0));
      for (int t = 0; t < 7; ++t)
        err = std::max(err, std::abs(spline_eval(Q, (t + 0.3) / 7.0) - 1.0));
      c.require(err <= 1e-13, "Q(1) deviates by " + fmt(err) + " at r=" + std::to_string(r));
    }
  }
  // Sup-norm bound with the explicit stencil constant, on the whole corpus.
  for (int r = 2; r <= 5; ++r) {
    const QuasiCoefficients qc = tw_coefficients(r);
    const double c0 = quasi_sup_bound(qc);
    for (const std::string& label : corpus_labels()) {
      const TestFunction u = corpus_function(label);
      const SplineSpace space(r, 64);
      const double squ = sup_norm(quasi_interpolate(space, qc, u));
      const double su = function_sup_norm(u, 0, space);
      c.require(squ <= c0 * su * (1.0 + 1e-12),
                "sup bound for " + label + " at r=" + std::to_string(r));
    }
  }
  // Derivative-ratio plateaus on the same mesh ladder as the projection
  // criterion.
  for (int r : {2, 3, 4}) {
    const QuasiCoefficients qc = tw_coefficients(r);
    for (int l = 1; l <= r - 1; ++l)
      for (const char* label : {"sin1", "cos2", "expsin"}) {
        const TestFunction u = corpus_function(label);
        double l2min = std::numeric_limits<double>::infinity(), l2max = 0.0;
        double supmin = std::numeric_limits<double>::infinity(), supmax = 0.0;
        bool usable = true;
        for (int k = 0; k <= 3; ++k) {
          const int N = (4 * r) << k;
          const StabilityReport rep = quasi_stability_report(SplineSpace(r, N), qc, u, l);
          if (!rep.applicable) {
            usable = false;
            break;
          }
          l2min = std::min(l2min, rep.ratio_l2);
          l2max = std::max(l2max, rep.ratio_l2);
          supmin = std::min(supmin, rep.ratio_sup);
          supmax = std::max(supmax, rep.ratio_sup);
        }
        const std::string tag = std::string(" for ") + label + " at r=" + std::to_string(r) +
                                " l=" + std::to_string(l);
        if (!usable) {
          c.fail("report not applicable" + tag);
          continue;
        }
        c.require(l2max <= 1.05 * l2min, "L2 plateau spread " + fmt(l2max / l2min) + tag);
        c.require(supmax <= 1.05 * supmin, "sup plateau spread " + fmt(supmax / supmin) + tag);
      }
  }
  return c;
}

Check c10_convergence_rates() {
  Check c;
  // Full dyadic ladder 16..256: errors must fall at every refinement, and the
  // observed order on the finest pair (the asymptotic estimate, clear of the
  // preasymptotic coarse meshes) must sit at r +- 0.2 for both operators.
  const std::vector<int> Ns = {16, 32, 64, 128, 256};
  for (int r : {2, 3, 4}) {
    const QuasiCoefficients qc = tw_coefficients(r);
    for (const std::string& label : corpus_labels()) {
      const TestFunction u = corpus_function(label);
      std::vector<double> ep, eq;
      for (int N : Ns) {
        const SplineSpace space(r, N);
        const ProjectionResult P = project(space, u);
        const PeriodicSpline Q = quasi_interpolate(space, qc, u);
        ep.push_back(l2_error(u, P.spline));
        eq.push_back(l2_error(u, Q, quasi_alignment_shift(r) * space.h()));
        // The projection is L2-optimal in the space, so it can never lose to
        // the quasi-interpolant on the same mesh.
        c.require(ep.back() <= l2_error(u, Q) + 1e-10,
                  "projection above quasi error for " + label + " at r=" + std::to_string(r) +
                      " N=" + std::to_string(N));
      }
      const std::string tag = " for " + label + " at r=" + std::to_string(r);
      for (std::size_t i = 0; i + 1 < Ns.size(); ++i) {
        c.require(ep[i] > ep[i + 1], "projection error not decreasing at N=" +
                                         std::to_string(Ns[i]) + tag);
        c.require(eq[i] > eq[i + 1],
                  "quasi error not decreasing at N=" + std::to_string(Ns[i]) + tag);
      }
      const double sp = std::log2(ep[ep.size() - 2] / ep.back());
      c.require(std::abs(sp - r) <= 0.2, "projection order " + fmt(sp) + tag);
      const double sq = std::log2(eq[eq.size() - 2] / eq.back());
      c.require(std::abs(sq - r) <= 0.2, "quasi order " + fmt(sq) + tag);
    }
  }
  return c;
}

Check c11_inverse_inequality() {
  Check c;
  std::uint64_t seed = 311000;
  for (int r : {2, 3, 4, 5}) {
    double cmin = std::numeric_limits<double>::infinity(), cmax = 0.0;
    for (int N : {32, 64, 128, 256}) {
      const SplineSpace space(r, N);
      const double C = inverse_inequality_constant(space);
      cmin = std::min(cmin, C);
      cmax = std::max(cmax, C);
      double worst = 0.0;
      for (int t = 0; t < 200; ++t) {
        const PeriodicSpline v =
            make_spline(space, random_coeffs(static_cast<std::size_t>(N), seed++));
        const double s0 = sobolev_seminorm(v, 0);
        if (s0 <= 0.0) continue;
        worst = std::max(worst, sobolev_seminorm(v, 1) / (static_cast<double>(N) * s0));
      }
      c.require(worst <= C * (1.0 + 1e-12), "ratio " + fmt(worst) + " exceeds constant " +
                                                fmt(C) + " at r=" + std::to_string(r) +
                                                " N=" + std::to_string(N));
    }
    c.require(cmax <= 1.01 * cmin,
              "constant spread " + fmt(cmax / cmin) + " across N at r=" + std::to_string(r));
  }
  return c;
}

Check c12_determinism() {
  Check c;
  const auto run_all = [] {
    SweepConfig gram_cfg;
    gram_cfg.r_list = {2, 3};
    gram_cfg.N_list = {16};
    SweepConfig decay_cfg;
    decay_cfg.r_list = {2};
    decay_cfg.N_list = {64};
    SweepConfig proj_cfg;
    proj_cfg.r_list = {2};
    proj_cfg.N_list = {16, 32};
    proj_cfg.l_list = {0, 1};
    proj_cfg.corpus = {"sin1", "randtrig"};
    SweepConfig quasi_cfg;
    quasi_cfg.r_list = {2, 3};
    quasi_cfg.N_list = {16, 32};
    quasi_cfg.l_list = {0};
    quasi_cfg.corpus = {"sin1", "randtrig"};
    std::string out;
    out += render_csv(run_gram(gram_cfg));
    out += render_json(run_gram(gram_cfg));
    out += render_csv(run_decay(decay_cfg));
    out += render_json(run_decay(decay_cfg));
    out += render_csv(run_project(proj_cfg));
    out += render_json(run_project(proj_cfg));
    out += render_csv(run_quasi(quasi_cfg));
    out += render_json(run_quasi(quasi_cfg));
    return out;
  };
  const std::string first = run_all();
  const std::string second = run_all();
  c.require(first == second, "report bytes differ between identical runs");
  c.require(!first.empty() && first.find("experiment,r,N,l,function,metric,value,pass") == 0,
            "csv header missing");
  return c;
}

struct NamedCriterion {
  int id;
  const char* name;
  Check (*body)();
};

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream* progress) {
  const NamedCriterion criteria[] = {
      {1, "gram_stencil_identity", c1_gram_stencil},
      {2, "symbol_eigenvalue_consistency", c2_symbol_consistency},
      {3, "banded_truncation_demko", c3_banded_truncation},
      {4, "inverse_row_decay", c4_decay_constants},
      {5, "order2_closed_form_anchors", c5_order2_anchors},
      {6, "projection_exactness_stability", c6_projection_identities},
      {7, "stability_plateaus", c7_stability_plateaus},
      {8, "binomial_sum_exactness", c8_binomial_sums},
      {9, "tw_stencil_exactness", c9_tw_exactness},
      {10, "convergence_rates", c10_convergence_rates},
      {11, "inverse_inequality", c11_inverse_inequality},
  };

  std::vector<CriterionResult> results;
  double total = 0.0;
  bool all_pass = true;
  for (const NamedCriterion& nc : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Check chk;
    try {
      chk = nc.body();
    } catch (const std::exception& e) {
      chk.ok = false;
      chk.detail = std::string("exception: ") + e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    CriterionResult res;
    res.id = nc.id;
    res.name = nc.name;
    res.pass = chk.ok;
    res.seconds = std::chrono::duration<double>(t1 - t0).count();
    res.detail = chk.detail;
    total += res.seconds;
    all_pass = all_pass && res.pass;
    if (progress) {
      (*progress) << (res.pass ? "PASS" : "FAIL") << " criterion " << res.id << ": " << res.name
                  << " (" << format_double(res.seconds) << " s)";
      if (!res.pass) (*progress) << " -- " << res.detail;
      (*progress) << '\n' << std::flush;
    }
    results.push_back(std::move(res));
  }

  {
    const auto t0 = std::chrono::steady_clock::now();
    Check chk;
    try {
      chk = c12_determinism();
    } catch (const std::exception& e) {
      chk.ok = false;
      chk.detail = std::string("exception: ") + e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    CriterionResult res;
    res.id = 12;
    res.name = "end_to_end_determinism";
    res.seconds = std::chrono::duration<double>(t1 - t0).count();
    total += res.seconds;
    if (!all_pass) chk.fail("a prior criterion failed");
    if (total >= 120.0) chk.fail("wall time " + format_double(total) + " s exceeds 120 s");
    res.pass = chk.ok;
    res.detail = chk.detail;
    if (progress) {
      (*progress) << (res.pass ? "PASS" : "FAIL") << " criterion " << res.id << ": " << res.name
                  << " (" << format_double(res.seconds) << " s)";
      if (!res.pass) (*progress) << " -- " << res.detail;
      (*progress) << '\n' << std::flush;
    }
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace perispline
