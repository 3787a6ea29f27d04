#include "qcspec/report.hpp"

#include <cmath>
#include <numbers>

#include "qcspec/error.hpp"
#include "qcspec/parallel.hpp"

namespace qcspec {

namespace {

Value opt(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

Value opt(const std::optional<bool>& v) {
  if (v) return *v;
  return std::monostate{};
}

Value count(std::size_t n) { return static_cast<long long>(n); }

}  // namespace

// ---------------------------------------------------------------------------

AnalyzeResult run_analyze(const MapFamily& family, const PolarGrid& grid) {
  return {analyze_family(family, grid), bound_report(family)};
}

Record to_record(const AnalyzeResult& r) {
  const BoundReport& b = r.bounds;
  const QcAnalysis& q = r.qc;
  return {
      {"family", family_name(q.family)},
      {"params", family_params(q.family)},
      {"K", q.k_global},
      {"J_sup_analytic", q.j_sup},
      {"J_sup_grid", q.j_sup_grid},
      {"J_sup_method", std::string(to_string(q.j_sup_method))},
      {"K_J_sup", b.k_times_j_sup},
      {"image_area", q.image_area},
      {"image_area_exact", q.image_area_exact},
      {"grid_radial", static_cast<long long>(q.grid.radial)},
      {"grid_angular", static_cast<long long>(q.grid.angular)},
      {"lambda_ref", b.lambda_ref},
      {"j01", j01()},
      {"qc_lower", b.qc_lower},
      {"growth_gap", opt(b.growth_gap)},
      {"growth_gap_note", b.growth_gap_note},
      {"inclusion_certified", b.inclusion_certified},
      {"max_boundary_modulus", b.max_boundary_modulus},
      {"faber_krahn", b.faber_krahn},
      {"inradius", b.inradius},
      {"inradius_analytic", b.inradius_analytic},
      {"makai", opt(b.makai)},
      {"hersch", opt(b.hersch)},
      {"sobolev_A22_upper", b.sobolev_A22_upper},
      {"sobolev_p_opt", b.sobolev_p_opt},
      {"weighted_sobolev_A22", b.weighted_sobolev_A22},
  };
}

// ---------------------------------------------------------------------------

bool VerifyResult::passed() const {
  if (margin < 0.0) return false;
  if (gap_check && gap_check->margin < 0.0) return false;
  return true;
}

VerifyResult run_verify(const MapFamily& family, int rings, const EigenOptions& options) {
  validate(family);
  if (rings < 2) throw Error(ErrorKind::InvalidRings, "rings must be >= 2");
  const BoundReport bounds = bound_report(family);
  const FemSolution sol = principal_eigenvalue(family, rings, options);

  VerifyResult v;
  v.family = family;
  v.rings = rings;
  v.tol = options.tol;
  v.fem_lambda = sol.eigen.lambda;
  v.qc_lower = bounds.qc_lower;
  v.margin = v.fem_lambda - v.qc_lower;
  if (bounds.growth_gap) {
    GapCheck g;
    g.gap_bound = *bounds.growth_gap;
    g.fem_gap = v.fem_lambda - bounds.lambda_ref;
    g.margin = g.fem_gap - g.gap_bound;
    g.inclusion_certified = bounds.inclusion_certified;
    v.gap_check = g;
  }
  v.faber_krahn = bounds.faber_krahn;
  v.residual = sol.eigen.residual;
  v.relative_residual = sol.eigen.relative_residual;
  v.iterations = sol.eigen.iterations;
  v.vertices = sol.vertices;
  v.triangles = sol.triangles;
  v.mesh_area = sol.mesh_area;
  return v;
}

Record to_record(const VerifyResult& v) {
  const auto& g = v.gap_check;
  return {
      {"family", family_name(v.family)},
      {"params", family_params(v.family)},
      {"rings", static_cast<long long>(v.rings)},
      {"tol", v.tol},
      {"fem_lambda", v.fem_lambda},
      {"qc_lower", v.qc_lower},
      {"margin", v.margin},
      {"gap_bound", g ? Value{g->gap_bound} : Value{}},
      {"fem_gap", g ? Value{g->fem_gap} : Value{}},
      {"gap_margin", g ? Value{g->margin} : Value{}},
      {"inclusion_certified", g ? Value{g->inclusion_certified} : Value{}},
      {"faber_krahn", v.faber_krahn},
      {"residual", v.residual},
      {"relative_residual", v.relative_residual},
      {"iterations", static_cast<long long>(v.iterations)},
      {"vertices", count(v.vertices)},
      {"triangles", count(v.triangles)},
      {"mesh_area", v.mesh_area},
      {"passed", v.passed()},
  };
}

// ---------------------------------------------------------------------------

namespace {

struct PaperConfig {
  MapFamily family;
  std::string section;
};

PaperRow paper_row(const PaperConfig& cfg, int rings, const EigenOptions& options) {
  PaperRow row;
  row.family = family_name(cfg.family);
  row.params = family_params(cfg.family);
  row.rings = rings;
  try {
    validate(cfg.family);
  } catch (const Error& e) {
    row.status = "error";
    row.note = e.what();
    return row;
  }

  const BoundReport b = bound_report(cfg.family);
  row.k = b.k_global;
  row.j_sup = b.j_sup;
  row.k_j_sup = b.k_times_j_sup;
  row.qc_lower = b.qc_lower;
  row.hersch = b.hersch;
  if (b.hersch) row.qc_beats_hersch = b.qc_lower > *b.hersch;

  const FemSolution sol = principal_eigenvalue(cfg.family, rings, options);
  row.fem_lambda = sol.eigen.lambda;
  double best = b.qc_lower;
  if (b.hersch) best = std::max(best, *b.hersch);
  row.qc_margin = sol.eigen.lambda - best;

  if (cfg.section != "ellipse") {
    row.inclusion_certified = b.inclusion_certified;
    row.fem_gap = sol.eigen.lambda - b.lambda_ref;
    if (b.growth_gap) {
      row.growth_gap = b.growth_gap;
      row.gap_margin = *row.fem_gap - *b.growth_gap;
    }
    std::string note;
    if (const auto* e = std::get_if<Epicycloid>(&cfg.family); e && e->A + e->B >= 0.5)
      note = "hypothesis A+B<1/2 fails";
    else if (!b.growth_gap)
      note = b.growth_gap_note;
    else if (!b.inclusion_certified)
      note = "image not inside the unit disc; gap follows from qc_lower alone";
    row.note = note;
  } else {
    if (std::abs(*row.qc_lower - *row.hersch) <= 1e-9 * *row.qc_lower)
      row.note = "crossover: qc bound equals Hersch";
    else
      row.note = *row.qc_beats_hersch ? "qc bound beats Hersch" : "Hersch beats qc bound";
  }
  return row;
}

}  // namespace

std::vector<PaperRow> run_paper_table(int rings, const EigenOptions& options, unsigned workers) {
  const double a_star = crossover_vs_hersch();
  const std::vector<PaperConfig> configs = {
      {Ellipse{0.0}, "ellipse"},
      {Ellipse{1.0 / 16.0}, "ellipse"},
      {Ellipse{1.0 / 8.0}, "ellipse"},
      {Ellipse{a_star}, "ellipse"},
      {Ellipse{0.3}, "ellipse"},
      {RosePetal{0.5}, "rose-petal"},
      {RosePetal{0.7}, "rose-petal"},
      {RosePetal{0.9}, "rose-petal"},
      {Epicycloid{0.2, 0.05, 3}, "epicycloid"},
      {Epicycloid{0.2, 0.2, 3}, "epicycloid"},
      {Epicycloid{0.15, 0.05, 5}, "epicycloid"},
      {Epicycloid{0.3, 0.25, 3}, "epicycloid"},
  };
  std::vector<PaperRow> rows(configs.size());
  parallel_for(configs.size(), workers, [&](std::size_t i) { rows[i] = paper_row(configs[i], rings, options); });
  return rows;
}

Record to_record(const PaperRow& r) {
  return {
      {"family", r.family},
      {"params", r.params},
      {"status", r.status},
      {"note", r.note},
      {"K", opt(r.k)},
      {"J_sup", opt(r.j_sup)},
      {"K_J_sup", opt(r.k_j_sup)},
      {"qc_lower", opt(r.qc_lower)},
      {"hersch", opt(r.hersch)},
      {"qc_beats_hersch", opt(r.qc_beats_hersch)},
      {"growth_gap", opt(r.growth_gap)},
      {"inclusion_certified", opt(r.inclusion_certified)},
      {"fem_lambda", opt(r.fem_lambda)},
      {"margin", opt(r.qc_margin)},
      {"fem_gap", opt(r.fem_gap)},
      {"gap_margin", opt(r.gap_margin)},
      {"rings", static_cast<long long>(r.rings)},
  };
}

bool paper_table_passed(const std::vector<PaperRow>& rows) {
  for (const PaperRow& r : rows) {
    if (r.status != "ok") continue;
    if (r.qc_margin && *r.qc_margin < 0.0) return false;
    if (r.gap_margin && *r.gap_margin < 0.0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

std::vector<double> sweep_samples(double from, double to, double step) {
  if (!std::isfinite(from) || !std::isfinite(to) || !std::isfinite(step) || !(step > 0.0) || !(to > from))
    throw Error(ErrorKind::InvalidRange, "sweep needs finite from < to and step > 0");
  const long long n = std::llround((to - from) / step) + 1;
  if (n < 2) throw Error(ErrorKind::InvalidRange, "sweep needs at least 2 samples");
  if (n > 100000) throw Error(ErrorKind::InvalidRange, "sweep is limited to 100000 samples");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) out[i] = i + 1 == n ? to : from + step * static_cast<double>(i);
  return out;
}

namespace {

MapFamily with_param(const MapFamily& base, const std::string& param, double value) {
  MapFamily f = base;
  if (auto* e = std::get_if<Ellipse>(&f); e && param == "a") {
    e->a = value;
  } else if (auto* r = std::get_if<RosePetal>(&f); r && param == "a") {
    r->a = value;
  } else if (auto* p = std::get_if<Epicycloid>(&f); p && (param == "A" || param == "B")) {
    (param == "A" ? p->A : p->B) = value;
  } else {
    throw Error(ErrorKind::InvalidRange,
                "parameter '" + param + "' cannot be swept for family " + family_name(base));
  }
  return f;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned workers) {
  const std::vector<double> samples = sweep_samples(spec.from, spec.to, spec.step);
  std::vector<MapFamily> families;
  families.reserve(samples.size());
  for (double s : samples) {
    families.push_back(with_param(spec.base, spec.param, s));
    validate(families.back());
  }
  if (spec.with_fem && spec.rings < 2) throw Error(ErrorKind::InvalidRings, "rings must be >= 2");

  std::vector<SweepRow> rows(samples.size());
  parallel_for(samples.size(), workers, [&](std::size_t i) {
    const BoundReport b = bound_report(families[i]);
    SweepRow& row = rows[i];
    row.value = samples[i];
    row.k = b.k_global;
    row.j_sup = b.j_sup;
    row.qc_lower = b.qc_lower;
    row.faber_krahn = b.faber_krahn;
    row.makai = *b.makai;
    row.hersch = b.hersch;
    if (b.hersch) row.qc_minus_hersch = b.qc_lower - *b.hersch;
    if (spec.with_fem) {
      const double lam = principal_eigenvalue(families[i], spec.rings, spec.options).eigen.lambda;
      row.fem_lambda = lam;
      row.qc_margin = lam - b.qc_lower;
      row.fk_margin = lam - b.faber_krahn;
      row.makai_margin = lam - *b.makai;
      if (b.hersch) row.hersch_margin = lam - *b.hersch;
    }
  });
  return rows;
}

Record to_record(const SweepRow& r, const std::string& param) {
  return {
      {"param", param},
      {"value", r.value},
      {"K", r.k},
      {"J_sup", r.j_sup},
      {"qc_lower", r.qc_lower},
      {"faber_krahn", r.faber_krahn},
      {"makai", r.makai},
      {"hersch", opt(r.hersch)},
      {"qc_minus_hersch", opt(r.qc_minus_hersch)},
      {"fem_lambda", opt(r.fem_lambda)},
      {"qc_margin", opt(r.qc_margin)},
      {"fk_margin", opt(r.fk_margin)},
      {"makai_margin", opt(r.makai_margin)},
      {"hersch_margin", opt(r.hersch_margin)},
  };
}

bool sweep_passed(const std::vector<SweepRow>& rows) {
  for (const SweepRow& r : rows)
    for (const auto& m : {r.qc_margin, r.fk_margin, r.makai_margin, r.hersch_margin})
      if (m && *m < 0.0) return false;
  return true;
}

}  // namespace qcspec
