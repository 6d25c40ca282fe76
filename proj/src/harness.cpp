#include "perispline/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "perispline/quasi.hpp"

namespace perispline {

namespace {

constexpr double kNoiseFloor = 1e-12;

std::vector<int> or_default(const std::vector<int>& v, std::vector<int> def) {
  return v.empty() ? std::move(def) : v;
}

std::vector<std::string> or_default_s(const std::vector<std::string>& v,
                                      std::vector<std::string> def) {
  return v.empty() ? std::move(def) : v;
}

ReportRow row(std::string experiment, int r, int N, int l, std::string fn, std::string metric,
              double value, bool pass = true) {
  ReportRow out;
  out.experiment = std::move(experiment);
  out.r = r;
  out.N = N;
  out.l = l;
  out.function = std::move(fn);
  out.metric = std::move(metric);
  out.value = value;
  out.pass = pass;
  return out;
}

/// Least-squares slope of log(err) against log(1/N); expects matching sizes.
double log_slope(const std::vector<int>& Ns, const std::vector<double>& errs) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(Ns.size());
  for (std::size_t i = 0; i < Ns.size(); ++i) {
    const double x = -std::log(static_cast<double>(Ns[i]));
    const double y = std::log(std::max(errs[i], 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void validate_common(const std::vector<int>& rs, const std::vector<int>& Ns,
                     const std::vector<int>& ls, int min_r) {
  for (int r : rs) {
    if (r < min_r)
      throw std::invalid_argument("config: order r must be >= " + std::to_string(min_r));
    if (r > 12) throw std::invalid_argument("config: order r must be <= 12");
  }
  const int rmax = *std::max_element(rs.begin(), rs.end());
  for (int N : Ns)
    for (int r : rs)
      if (N < 4 * r)
        throw std::invalid_argument("config: need N >= 4r (N=" + std::to_string(N) +
                                    ", r=" + std::to_string(r) + ")");
  for (int l : ls) {
    if (l < 0) throw std::invalid_argument("config: derivative order l must be >= 0");
    if (l > rmax - 1)
      throw std::invalid_argument("config: derivative order l exceeds r-1 for every r");
  }
}

}  // namespace

std::vector<ReportRow> run_gram(const SweepConfig& cfg) {
  const std::vector<int> rs = or_default(cfg.r_list, {1, 2, 3, 4, 5, 6, 7, 8});
  const std::vector<int> Ns = or_default(cfg.N_list, {32, 64, 256});
  validate_common(rs, Ns, cfg.l_list, 1);

  std::vector<ReportRow> rows;
  rows.push_back(row("gram", 0, 0, -1, "", "seed", static_cast<double>(cfg.seed)));
  for (int r : rs) {
    const std::vector<double> g = gram_stencil(r);
    for (int j = 0; j < r; ++j)
      rows.push_back(row("gram", r, 0, -1, "", "g" + std::to_string(j + 1),
                         g[static_cast<std::size_t>(j)]));
    double rowsum = g[0];
    for (int j = 1; j < r; ++j) rowsum += 2.0 * g[static_cast<std::size_t>(j)];
    rows.push_back(row("gram", r, 0, -1, "", "rowsum_residual", std::abs(rowsum - 1.0),
                       std::abs(rowsum - 1.0) <= 1e-13));

    const SpectralBounds sb = spectral_bounds(r);
    rows.push_back(row("gram", r, 0, -1, "", "g_lower", sb.lower, sb.lower > 0.0));
    rows.push_back(row("gram", r, 0, -1, "", "g_upper", sb.upper,
                       std::abs(sb.upper - 1.0) <= 1e-10));

    // r = 1 is orthonormal: the symbol is exactly 1, and the 1/L lattice tail
    // makes the generic evaluator unusable at this accuracy.
    const SymbolEvaluator ev = make_symbol_evaluator(std::max(r, 2));
    for (int N : Ns) {
      const SplineSpace space(r, N);
      const std::vector<double> lam = eigenvalues_symmetric(make_gram_matrix(space));
      double max_resid = 0.0, lam_min = lam[0], lam_max = lam[0];
      for (int k = 0; k < N; ++k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / N;
        const double sym = r == 1 ? 1.0 : symbol_eval(ev, theta);
        max_resid = std::max(max_resid, std::abs(lam[static_cast<std::size_t>(k)] - sym));
        lam_min = std::min(lam_min, lam[static_cast<std::size_t>(k)]);
        lam_max = std::max(lam_max, lam[static_cast<std::size_t>(k)]);
      }
      rows.push_back(row("gram", r, N, -1, "", "eig_symbol_residual", max_resid,
                         max_resid <= 1e-10));
      rows.push_back(row("gram", r, N, -1, "", "lambda_min_minus_g_lower", lam_min - sb.lower,
                         lam_min >= sb.lower - 1e-12));
      rows.push_back(row("gram", r, N, -1, "", "lambda_max_error", std::abs(lam_max - 1.0),
                         std::abs(lam_max - 1.0) <= 1e-10));
    }
  }
  sort_rows(rows);
  return rows;
}

std::vector<ReportRow> run_decay(const SweepConfig& cfg) {
  const std::vector<int> rs = or_default(cfg.r_list, {2, 3, 4, 5});
  const std::vector<int> Ns = or_default(cfg.N_list, {64, 128, 256, 512});
  validate_common(rs, Ns, cfg.l_list, 2);

  std::vector<ReportRow> rows;
  rows.push_back(row("decay", 0, 0, -1, "", "seed", static_cast<double>(cfg.seed)));
  for (int r : rs) {
    const SpectralBounds sb = spectral_bounds(r);
    const double q_fixed = demko_bound(sb.lower, 1.0, r - 1).q;
    rows.push_back(row("decay", r, 0, -1, "", "q_fixed", q_fixed));
    for (int N : Ns) {
      const GramSystem gs = make_gram_system(SplineSpace(r, N));
      const std::vector<double> gamma = inverse_first_row(gs);

      std::vector<double> e1(gamma.size(), 0.0);
      e1[0] = 1.0;
      const std::vector<double> back = matvec(gs.matrix, gamma);
      double resid = 0.0;
      for (std::size_t i = 0; i < back.size(); ++i)
        resid = std::max(resid, std::abs(back[i] - e1[i]));
      rows.push_back(row("decay", r, N, -1, "", "solve_residual", resid, resid <= 1e-12));

      const double g1v = gamma[0];
      rows.push_back(row("decay", r, N, -1, "", "gamma1", g1v,
                         g1v >= 1.0 - 1e-12 && g1v <= 1.0 / sb.lower + 1e-12));
      rows.push_back(row("decay", r, N, -1, "", "fitted_C",
                         fit_decay_constant(gamma, r, q_fixed, kNoiseFloor)));
      rows.push_back(row("decay", r, N, -1, "", "weighted_gamma_sum", weighted_gamma_sum(gamma)));

      if (N <= 1024) {
        const BandedInverse banded = banded_truncation_inverse(gs);
        rows.push_back(row("decay", r, N, -1, "", "lambda_min_banded", banded.lambda_min,
                           banded.lambda_min >= sb.lower - 1e-12));
        const DemkoBound db = demko_bound(banded.lambda_min, banded.lambda_max, r - 1);
        long violations = 0;
        for (std::size_t i = 0; i < banded.inverse.rows; ++i)
          for (std::size_t j = 0; j < banded.inverse.cols; ++j) {
            const double d = std::abs(static_cast<double>(i) - static_cast<double>(j));
            if (std::abs(banded.inverse(i, j)) > db.C * std::pow(db.q, -d) + kNoiseFloor)
              ++violations;
          }
        rows.push_back(row("decay", r, N, -1, "", "banded_demko_violations",
                           static_cast<double>(violations), violations == 0));

        const DemkoBound transfer = demko_bound(sb.lower, banded.lambda_max, r - 1);
        const DecayEnvelope env = decay_envelope_from_banded(gs, transfer, gamma);
        const DecayCertificate cert =
            certify_decay(gamma, r, env.C1, env.C2, env.q, kNoiseFloor);
        rows.push_back(row("decay", r, N, -1, "", "cert_valid", cert.valid ? 1.0 : 0.0,
                           cert.valid));
        rows.push_back(row("decay", r, N, -1, "", "cert_max_slack", cert.max_slack));
        rows.push_back(row("decay", r, N, -1, "", "cert_q", env.q));
      }
    }
  }
  sort_rows(rows);
  return rows;
}

std::vector<ReportRow> run_project(const SweepConfig& cfg) {
  const std::vector<int> rs = or_default(cfg.r_list, {2, 3, 4});
  const std::vector<int> Ns = or_default(cfg.N_list, {16, 32, 64, 128});
  const std::vector<int> ls = or_default(cfg.l_list, {0, 1});
  const std::vector<std::string> labels = or_default_s(cfg.corpus, {"sin1", "expsin"});
  validate_common(rs, Ns, ls, 2);

  std::vector<ReportRow> rows;
  rows.push_back(row("project", 0, 0, -1, "", "seed", static_cast<double>(cfg.seed)));
  for (int r : rs) {
    for (int N : Ns) {
      const SplineSpace space(r, N);
      rows.push_back(row("project", r, N, -1, "", "inv_ineq_C",
                         inverse_inequality_constant(space)));
    }
    for (const std::string& label : labels) {
      const TestFunction u = corpus_function(label, cfg.seed);
      std::vector<double> errs;
      for (int N : Ns) {
        const SplineSpace space(r, N);
        const ProjectionResult P = project(space, u, cfg.nodes_per_cell);
        const double err = l2_error(u, P.spline, 0.0, cfg.nodes_per_cell);
        errs.push_back(err);
        rows.push_back(row("project", r, N, -1, label, "l2_error", err));
        for (int l : ls) {
          if (l > r - 1) continue;
          const StabilityReport rep =
              spline_stability_report(P.spline, u, l, cfg.nodes_per_cell, cfg.samples_per_cell);
          const bool pass_l2 = (l != 0) || !rep.applicable || rep.ratio_l2 <= 1.0 + 1e-12;
          rows.push_back(row("project", r, N, l, label, "ratio_l2", rep.ratio_l2, pass_l2));
          rows.push_back(row("project", r, N, l, label, "ratio_sup", rep.ratio_sup));
        }
      }
      if (Ns.size() >= 3) {
        const double slope = log_slope(Ns, errs);
        rows.push_back(row("project", r, 0, -1, label, "conv_order", slope,
                           std::abs(slope - r) <= 0.35));
      }
    }
  }
  sort_rows(rows);
  return rows;
}

std::vector<ReportRow> run_quasi(const SweepConfig& cfg) {
  const std::vector<int> rs = or_default(cfg.r_list, {2, 3, 4});
  const std::vector<int> Ns = or_default(cfg.N_list, {16, 32, 64, 128});
  const std::vector<int> ls = or_default(cfg.l_list, {0, 1});
  const std::vector<std::string> labels = or_default_s(cfg.corpus, {"sin1", "expsin"});
  validate_common(rs, Ns, ls, 2);

  std::vector<ReportRow> rows;
  rows.push_back(row("quasi", 0, 0, -1, "", "seed", static_cast<double>(cfg.seed)));
  for (int r : rs) {
    const QuasiCoefficients qc = tw_coefficients(r);
    for (int m = 0; m < r; ++m)
      rows.push_back(row("quasi", r, 0, -1, "", "q" + std::to_string(m),
                         qc.stencil[static_cast<std::size_t>(m)]));
    const double c0 = quasi_sup_bound(qc);
    rows.push_back(row("quasi", r, 0, -1, "", "c0_bound", c0));
    const bool unit = quasi_symbol_exact(qc, +1) == BigRational(1);
    rows.push_back(row("quasi", r, 0, -1, "", "symbol_at_zero_is_one", unit ? 1.0 : 0.0, unit));

    const double shift_cells = quasi_alignment_shift(r);
    for (const std::string& label : labels) {
      const TestFunction u = corpus_function(label, cfg.seed);
      std::vector<double> errs;
      for (int N : Ns) {
        const SplineSpace space(r, N);
        const PeriodicSpline Q = quasi_interpolate(space, qc, u);
        const double err =
            l2_error(u, Q, shift_cells * space.h(), cfg.nodes_per_cell);
        errs.push_back(err);
        rows.push_back(row("quasi", r, N, -1, label, "l2_error_aligned", err));

        const double sup_q = sup_norm(Q, cfg.samples_per_cell);
        const double sup_u = function_sup_norm(u, 0, space, cfg.samples_per_cell);
        rows.push_back(row("quasi", r, N, -1, label, "sup_ratio_vs_c0",
                           sup_q / (c0 * sup_u), sup_q <= c0 * sup_u * (1.0 + 1e-12)));

        const ProjectionResult P = project(space, u, cfg.nodes_per_cell);
        const double err_p = l2_error(u, P.spline, 0.0, cfg.nodes_per_cell);
        const double err_q_plain = l2_error(u, Q, 0.0, cfg.nodes_per_cell);
        rows.push_back(row("quasi", r, N, -1, label, "best_approx_gap", err_q_plain - err_p,
                           err_p <= err_q_plain + 1e-10));

        for (int l : ls) {
          if (l > r - 1) continue;
          const StabilityReport rep = spline_stability_report(Q, u, l, cfg.nodes_per_cell,
                                                              cfg.samples_per_cell);
          rows.push_back(row("quasi", r, N, l, label, "ratio_l2", rep.ratio_l2));
          rows.push_back(row("quasi", r, N, l, label, "ratio_sup", rep.ratio_sup));
        }
      }
      if (Ns.size() >= 3) {
        const double slope = log_slope(Ns, errs);
        rows.push_back(row("quasi", r, 0, -1, label, "conv_order", slope,
                           std::abs(slope - r) <= 0.35));
      }
    }
  }
  sort_rows(rows);
  return rows;
}

void sort_rows(std::vector<ReportRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    return std::tie(a.experiment, a.r, a.N, a.l, a.function, a.metric) <
           std::tie(b.experiment, b.r, b.N, b.l, b.function, b.metric);
  });
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string render_csv(const std::vector<ReportRow>& rows) {
  std::string out = "experiment,r,N,l,function,metric,value,pass\n";
  for (const ReportRow& r : rows) {
    out += r.experiment;
    out += ',';
    if (r.r > 0) out += std::to_string(r.r);
    out += ',';
    if (r.N > 0) out += std::to_string(r.N);
    out += ',';
    if (r.l >= 0) out += std::to_string(r.l);
    out += ',';
    out += r.function;
    out += ',';
    out += r.metric;
    out += ',';
    out += format_double(r.value);
    out += ',';
    out += r.pass ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::string render_json(const std::vector<ReportRow>& rows) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = "1";
  doc["rows"] = nlohmann::ordered_json::array();
  for (const ReportRow& r : rows) {
    nlohmann::ordered_json jr;
    jr["experiment"] = r.experiment;
    if (r.r > 0)
      jr["r"] = r.r;
    else
      jr["r"] = nullptr;
    if (r.N > 0)
      jr["N"] = r.N;
    else
      jr["N"] = nullptr;
    if (r.l >= 0)
      jr["l"] = r.l;
    else
      jr["l"] = nullptr;
    if (!r.function.empty())
      jr["function"] = r.function;
    else
      jr["function"] = nullptr;
    jr["metric"] = r.metric;
    jr["value"] = r.value;  // NaN serializes as null, deterministically
    jr["pass"] = r.pass;
    doc["rows"].push_back(std::move(jr));
  }
  return doc.dump(2) + "\n";
}

}  // namespace perispline
