#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qcspec/bounds.hpp"
#include "qcspec/fem.hpp"
#include "qcspec/qc_analysis.hpp"

namespace qcspec {

// ---------------------------------------------------------------------------
// Flat records. Every command renders to a list of ordered key/value fields so
// that JSON, CSV and Markdown share one key set.

using Value = std::variant<std::monostate, double, long long, bool, std::string>;

struct Field {
  std::string key;
  Value value;
};

using Record = std::vector<Field>;

enum class OutputFormat { Json, Csv, Markdown };

OutputFormat parse_output_format(const std::string& name);

/// Single-record commands (analyze, verify) render as one JSON object, one CSV
/// row or a two-column Markdown table. Floats carry 12 significant digits.
std::string render_record(const std::string& command, const Record& record, OutputFormat format);

/// Table commands (paper-table, sweep) render as {"command", "rows": [...]},
/// a CSV with a header line, or a Markdown table.
std::string render_table(const std::string& command, const std::vector<Record>& rows, OutputFormat format);

/// Rounds to 12 significant digits.
double round12(double v);

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeResult {
  QcAnalysis qc;
  BoundReport bounds;
};

AnalyzeResult run_analyze(const MapFamily& family, const PolarGrid& grid);
Record to_record(const AnalyzeResult& result);

// ---------------------------------------------------------------------------
// verify

struct GapCheck {
  double gap_bound = 0.0;
  double fem_gap = 0.0;  ///< fem_lambda - j01^2
  double margin = 0.0;
  bool inclusion_certified = false;
};

struct VerifyResult {
  MapFamily family;
  int rings = 0;
  double tol = 0.0;
  double fem_lambda = 0.0;
  double qc_lower = 0.0;
  double margin = 0.0;
  std::optional<GapCheck> gap_check;
  double faber_krahn = 0.0;
  double residual = 0.0;
  double relative_residual = 0.0;
  int iterations = 0;
  std::size_t vertices = 0;
  std::size_t triangles = 0;
  double mesh_area = 0.0;

  /// Every checked inequality holds with a nonnegative margin.
  bool passed() const;
};

VerifyResult run_verify(const MapFamily& family, int rings, const EigenOptions& options);
Record to_record(const VerifyResult& result);

// ---------------------------------------------------------------------------
// paper-table

struct PaperRow {
  std::string family;
  std::string params;
  std::string status = "ok";  ///< "ok" or "error"
  std::string note;
  std::optional<double> k;
  std::optional<double> j_sup;
  std::optional<double> k_j_sup;
  std::optional<double> qc_lower;
  std::optional<double> hersch;
  std::optional<bool> qc_beats_hersch;
  std::optional<double> growth_gap;
  std::optional<bool> inclusion_certified;
  std::optional<double> fem_lambda;
  std::optional<double> qc_margin;
  std::optional<double> fem_gap;
  std::optional<double> gap_margin;
  int rings = 0;
};

/// Every example configuration; rows are independent and run on `workers` threads.
std::vector<PaperRow> run_paper_table(int rings, const EigenOptions& options, unsigned workers);
Record to_record(const PaperRow& row);

/// True when no row with status "ok" has a negative margin.
bool paper_table_passed(const std::vector<PaperRow>& rows);

// ---------------------------------------------------------------------------
// sweep

struct SweepSpec {
  MapFamily base;
  std::string param;  ///< "a" (ellipse, rose-petal), "A" or "B" (epicycloid)
  double from = 0.0;
  double to = 0.0;
  double step = 0.0;
  bool with_fem = false;
  int rings = 64;
  EigenOptions options;
};

struct SweepRow {
  double value = 0.0;
  double k = 0.0;
  double j_sup = 0.0;
  double qc_lower = 0.0;
  double faber_krahn = 0.0;
  double makai = 0.0;
  std::optional<double> hersch;
  std::optional<double> qc_minus_hersch;
  std::optional<double> fem_lambda;
  std::optional<double> qc_margin;
  std::optional<double> fk_margin;
  std::optional<double> makai_margin;
  std::optional<double> hersch_margin;
};

/// Parameter samples from, from+step, ..., to (inclusive, rounded to the nearest count).
std::vector<double> sweep_samples(double from, double to, double step);

/// Rows come back in parameter order regardless of worker scheduling.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned workers);
Record to_record(const SweepRow& row, const std::string& param);

bool sweep_passed(const std::vector<SweepRow>& rows);

}  // namespace qcspec
