#include "hsp/report.hpp"

#include <sstream>

#include <json.hpp>

#include "hsp/curvature.hpp"
#include "hsp/errors.hpp"
#include "hsp/faces.hpp"
#include "hsp/infinity.hpp"
#include "hsp/laurent.hpp"
#include "hsp/solver.hpp"

namespace hsp {

namespace {

using nlohmann::ordered_json;

ordered_json rats(const std::vector<Rat>& v) {
  auto out = ordered_json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

ordered_json polytope_json(const LatticePolytope& p) {
  ordered_json j = ordered_json::parse(to_json(p));
  if (p.grading() == 1) j["normalized_volume"] = to_string(normalized_volume(p));
  return j;
}

ordered_json face_json(const Face& f) {
  ordered_json j;
  j["dim"] = f.dim;
  auto ids = ordered_json::array();
  for (int v : f.vertex_ids) ids.push_back(v + 1);
  j["vertices"] = ids;
  j["points"] = f.points;
  j["normal"] = f.normal;
  j["offset"] = f.offset;
  return j;
}

ordered_json flats_json(const FlatComplex& t) {
  auto flats = ordered_json::array();
  for (const auto& flat : t.maximal_flats) {
    auto one = ordered_json::array();
    for (int i : flat) one.push_back(i + 1);
    flats.push_back(one);
  }
  return flats;
}

ordered_json b2_json(const B2Exponent& b2) {
  ordered_json j;
  j["lattice_index"] = b2.index ? ordered_json(to_string(*b2.index)) : ordered_json(nullptr);
  j["exponent"] = b2.exponent ? ordered_json(*b2.exponent) : ordered_json(nullptr);
  return j;
}

ordered_json bounds_json(const BoundReport& r) {
  ordered_json j;
  j["nu"] = to_string(r.nu);
  j["delannoy_bound"] = to_string(r.delannoy_bound);
  j["six_power"] = to_string(r.six_power);
  j["epsilon_computed"] = r.epsilon_computed ? ordered_json(*r.epsilon_computed) : ordered_json(nullptr);
  j["epsilon_annotation"] = r.epsilon_annotation ? ordered_json(*r.epsilon_annotation) : ordered_json(nullptr);
  if (!r.epsilon_source.empty()) j["epsilon_source"] = r.epsilon_source;
  j["epsilon_le_nu"] = r.epsilon_le_nu;
  j["nu_le_delannoy"] = r.nu_le_delannoy;
  j["nu_lt_six_power"] = r.nu_lt_six_power;
  j["infinity_note"] = r.infinity_note;
  j["violations"] = r.violations;
  return j;
}

struct CensusSummary {
  ordered_json json;
  std::size_t marked = 0;
  std::size_t nonsingular = 0;
  std::size_t singular = 0;
  std::size_t needs_more_data = 0;
};

CensusSummary census_json(const LatticePolytope& p, const LaurentPoly* s) {
  const MarkedFaceCensus c = census(p);
  CensusSummary out;
  ordered_json j;
  j["applicable"] = c.applicable;
  j["marked_per_dim"] = c.marked_per_dim();
  j["marked_total"] = c.marked_total();
  std::size_t t1 = 0, t2 = 0;
  for (const auto& e : c.entries) {
    t1 += e.test1;
    t2 += e.test2;
  }
  j["test1_true"] = t1;
  j["test2_true"] = t2;
  auto marked = ordered_json::array();
  for (const auto& e : c.marked()) {
    ordered_json fj = face_json(e.face);
    if (s) {
      SingularityResult r = face_singularity(*s, e.face);
      fj["verdict"] = to_string(r.verdict);
      fj["method"] = r.method;
      fj["detail"] = r.detail;
      if (r.verdict == Verdict::Singular) ++out.singular;
      else if (r.verdict == Verdict::Nonsingular) ++out.nonsingular;
      else ++out.needs_more_data;
    }
    marked.push_back(std::move(fj));
  }
  j["marked"] = std::move(marked);
  if (s) {
    j["singular"] = out.singular;
    j["nonsingular"] = out.nonsingular;
    j["needs_more_data"] = out.needs_more_data;
    j["open"] = c.marked_total() - out.nonsingular;
  }
  out.marked = c.marked_total();
  out.json = std::move(j);
  return out;
}

std::string join_counts(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += " ";
    out += std::to_string(k) + ":" + std::to_string(v[k]);
  }
  return out.empty() ? "none" : out;
}

}  // namespace

AnalysisReport analyze(const HomSpaceData& data, const AnalyzeOptions& options) {
  AnalysisReport report;
  std::ostringstream sum;
  std::vector<std::string> warnings = data.warnings;
  ordered_json j;
  j["schema"] = kReportSchema;
  j["input"] = ordered_json::parse(to_json(data));

  const LatticePolytope delta = weight_polytope(data);
  const FlatComplex t = flat_complex(data);
  const LatticePolytope dmin = delta_min(delta, t, data.central);
  j["delta"] = polytope_json(delta);
  j["flats"] = {{"maximal", flats_json(t)}, {"admissible", is_admissible(delta, t)}};
  auto viol = ordered_json::array();
  for (const auto& v : t_dimension_violations(delta, t)) {
    ordered_json vj = face_json(v.face);
    vj["t_dim"] = v.t_dim;
    viol.push_back(std::move(vj));
  }
  j["flats"]["t_dimension_violations"] = std::move(viol);
  j["delta_min"] = polytope_json(dmin);
  if (!delta.contains_polytope(dmin)) warnings.push_back("delta_min is not contained in delta");

  const LaurentPoly s = scalar_curvature(data);
  const LatticePolytope nw = newton_polytope(s);
  const bool newton_ok = nw.vertices() == dmin.vertices();
  j["newton"] = {{"vertices", nw.vertices()}, {"equals_delta_min", newton_ok}};
  if (!newton_ok) warnings.push_back("Newton polytope of s differs from delta_min");

  std::vector<Rat> ones(static_cast<std::size_t>(data.d), Rat(1));
  std::vector<Rat> mu = moment(data, ones, options.theta);
  j["moment"] = {{"theta", to_string(options.theta)}, {"at_standard_metric", rats(mu)}, {"inside_delta", delta.contains(mu)}};

  const B2Exponent b2 = b2_exponent(dmin);
  j["b2"] = b2_json(b2);

  std::optional<SolutionSet> solutions;
  ordered_json sj;
  if (!options.solve) {
    sj["status"] = "skipped";
  } else if (data.d > 3) {
    sj["status"] = "unsupported";
    sj["reason"] = "solving is implemented for d <= 3 only";
    report.exit_code = kExitUnsupported;
  } else {
    try {
      solutions = solve(data);
      sj["status"] = "ok";
      sj["distinct_complex"] = solutions->distinct_complex_count;
      sj["real"] = solutions->real_count;
      sj["positive"] = solutions->positive_count;
      sj["multiplicity_excess"] = solutions->multiplicity_excess;
      sj["generic"] = solutions->generic;
      sj["eliminant"] = solutions->eliminant.to_string("t");
      auto list = ordered_json::array();
      for (const auto& sol : solutions->real_solutions) {
        ordered_json one;
        auto box = ordered_json::array();
        for (const auto& [lo, hi] : sol.box) box.push_back({to_string(lo), to_string(hi)});
        one["box"] = std::move(box);
        one["positive"] = sol.positive;
        one["residual_bounds"] = rats(sol.residual_bounds);
        list.push_back(std::move(one));
      }
      sj["real_solutions"] = std::move(list);
      sj["notes"] = solutions->notes;
    } catch (const DegenerateError& e) {
      sj["status"] = "degenerate";
      sj["reason"] = e.what();
      warnings.push_back(std::string("solver: ") + e.what());
    }
  }

  const BoundReport bounds = bound_report(data, solutions ? &*solutions : nullptr);
  j["bounds"] = bounds_json(bounds);
  for (const auto& v : bounds.violations) warnings.push_back("bound violated: " + v);

  CensusSummary cs = census_json(dmin, &s);
  if (cs.needs_more_data > 0)
    warnings.push_back(std::to_string(cs.needs_more_data) + " marked face(s) need more data for a verdict");
  j["census"] = std::move(cs.json);
  j["solver"] = std::move(sj);
  j["warnings"] = warnings;
  report.json = j.dump(2) + "\n";

  sum << data.name << " (d = " << data.d << ", " << to_string(data.complement) << ")\n";
  sum << "  delta: " << delta.vertices().size() << " vertices, " << delta.facets().size() << " facets\n";
  sum << "  maximal flats: " << t.maximal_flats.size() << "\n";
  sum << "  delta_min: " << dmin.vertices().size() << " vertices, " << dmin.facets().size() << " facets, nu = "
      << to_string(bounds.nu) << "\n";
  sum << "  bounds: nu <= P_" << data.d - 1 << "(3) = " << to_string(bounds.delannoy_bound) << " < 6^" << data.d - 1
      << " = " << to_string(bounds.six_power) << "\n";
  if (b2.index) sum << "  vertex lattice index: " << to_string(*b2.index) << "\n";
  sum << "  marked faces: " << cs.marked << " (singular " << cs.singular << ", nonsingular " << cs.nonsingular
      << ", needs more data " << cs.needs_more_data << ")\n";
  if (solutions)
    sum << "  solutions: " << solutions->distinct_complex_count << " complex, " << solutions->real_count << " real, "
        << solutions->positive_count << " positive\n";
  else if (report.exit_code == kExitUnsupported)
    sum << "  solutions: unsupported for d > 3\n";
  if (!bounds.infinity_note.empty()) sum << "  " << bounds.infinity_note << "\n";
  for (const auto& w : warnings) sum << "  warning: " << w << "\n";
  report.summary = sum.str();
  return report;
}

AnalysisReport kaehler_b2_report(int d) {
  if (d < 2 || d > 7) throw DimensionError("kaehler-b2 supports 2 <= d <= 7");
  const LatticePolytope p = kaehler_b2_polytope(d);
  const Int nu = normalized_volume(p);
  const B2Exponent b2 = b2_exponent(p);
  const MarkedFaceCensus c = census(p);

  std::size_t simplices = 0, pyramids = 0, marked = 0;
  for (const auto& e : c.entries) {
    if (e.face.dim != p.dim() - 1) continue;
    if (e.face.points.size() == static_cast<std::size_t>(e.face.dim) + 1) ++simplices;
    else if (e.marked) ++marked;
    else ++pyramids;
  }
  ordered_json j;
  j["schema"] = kReportSchema;
  j["kind"] = "kaehler_b2";
  j["d"] = d;
  j["polytope"] = polytope_json(p);
  j["f"] = p.facets().size();
  j["nu"] = to_string(nu);
  j["b2"] = b2_json(b2);
  j["bounds"] = bounds_json(make_bound_report(nu, d, std::nullopt, std::nullopt, ""));
  CensusSummary cs = census_json(p, nullptr);
  j["census"] = std::move(cs.json);
  j["facet_classes"] = {{"simplices", simplices}, {"pyramids", pyramids}, {"marked", marked}};

  AnalysisReport report;
  report.json = j.dump(2) + "\n";
  std::ostringstream sum;
  sum << "kaehler b2 = 1, d = " << d << "\n";
  sum << "  f = " << p.facets().size() << ", nu = " << to_string(nu);
  if (b2.index) sum << ", vertex lattice index " << to_string(*b2.index);
  sum << "\n  marked faces: " << c.marked_total() << " (by dimension " << join_counts(c.marked_per_dim()) << ")\n";
  sum << "  facets: " << simplices << " simplices, " << pyramids << " pyramids, " << marked << " marked\n";
  report.summary = sum.str();
  return report;
}

}  // namespace hsp
