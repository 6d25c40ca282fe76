#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "perispline/corpus.hpp"

namespace perispline {

/// Parameters for one experiment sweep. Empty lists fall back to defaults
/// chosen per experiment; 0 means "use the per-space default" for the
/// quadrature/sampling densities.
struct SweepConfig {
  std::vector<int> r_list;
  std::vector<int> N_list;
  std::vector<int> l_list;
  std::vector<std::string> corpus;
  int nodes_per_cell = 0;
  int samples_per_cell = 32;
  std::uint64_t seed = kDefaultSeed;
};

/// One report row. l < 0 and an empty function render as blank fields.
struct ReportRow {
  std::string experiment;
  int r = 0;
  int N = 0;
  int l = -1;
  std::string function;
  std::string metric;
  double value = 0.0;
  bool pass = true;
};

std::vector<ReportRow> run_gram(const SweepConfig& cfg);
std::vector<ReportRow> run_decay(const SweepConfig& cfg);
std::vector<ReportRow> run_project(const SweepConfig& cfg);
std::vector<ReportRow> run_quasi(const SweepConfig& cfg);

/// Canonical row order (experiment, r, N, l, function, metric); rendering
/// assumes rows arrive sorted so reruns are byte-identical.
void sort_rows(std::vector<ReportRow>& rows);

/// 17 significant digits via std::to_chars: locale-independent and
/// round-trip exact.
std::string format_double(double v);

/// CSV with header experiment,r,N,l,function,metric,value,pass.
std::string render_csv(const std::vector<ReportRow>& rows);

/// JSON document {"schema_version": "1", "rows": [...]} with the same fields.
std::string render_json(const std::vector<ReportRow>& rows);

}  // namespace perispline
