#include "powerph/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "powerph/error.hpp"

namespace powerph {

Pd1Check verify_pd1(const Graph& g) {
  Pd1Check out;
  out.formula = pd1_formula(g);
  auto dm = shortest_paths(g);
  auto fc = build_filtration(dm, 2, std::max(dm.diameter(), 1));
  auto pd = compute_pd(fc);
  out.computed = pd.points(1);
  std::sort(out.computed.begin(), out.computed.end());
  std::set_difference(out.formula.begin(), out.formula.end(), out.computed.begin(), out.computed.end(),
                      std::back_inserter(out.missing));
  std::set_difference(out.computed.begin(), out.computed.end(), out.formula.begin(), out.formula.end(),
                      std::back_inserter(out.extra));
  out.ok = out.missing.empty() && out.extra.empty();
  return out;
}

std::size_t BoundReport::violations() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const BoundRow& r) { return r.status == RowStatus::violation; }));
}

std::size_t BoundReport::unverified() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const BoundRow& r) { return r.status == RowStatus::unverified; }));
}

std::size_t BoundReport::inexact() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const BoundRow& r) {
    return r.status == RowStatus::ok && !r.exact_check;
  }));
}

Scale ceil_sqrt(std::size_t x) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while (r * r < x) ++r;
  return static_cast<Scale>(r);
}

namespace {

void evaluate(BoundRow& row, const FilteredComplex& fc, const Chain& rep, const DistanceMatrix& dm,
              std::size_t norm_budget, std::size_t width_budget, SliceMetric metric) {
  auto norm = class_norm(fc, rep, row.birth, norm_budget);
  row.rep_norm = norm.value;
  row.norm_exact = norm.exact;
  auto width = width_of_class(fc, rep, row.birth, dm, width_budget, metric);
  row.rep_width = width.width;
  row.width_exact = width.exact;
  row.width_bound_rhs = row.rep_width + 1;
  row.width_ok = row.lifespan <= row.width_bound_rhs;
  if (row.dim == 2) {
    row.area_bound_rhs = ceil_sqrt(row.rep_norm) + 1;
    row.area_ok = row.lifespan <= *row.area_bound_rhs;
  }
  row.exact_check = row.width_exact && (row.dim != 2 || row.norm_exact);
}

}  // namespace

BoundReport verify_bounds(const FilteredComplex& fc, const PersistenceDiagram& pd, const DistanceMatrix& dm,
                          const BoundOptions& options) {
  BoundReport report;
  for (int d = 2; d < pd.num_dims() && d < fc.max_dim(); ++d)
    for (const auto& pair : pd.pairs(d)) {
      if (pair.infinite()) continue;
      BoundRow row;
      row.dim = d;
      row.birth = pair.birth;
      row.death = *pair.death;
      row.lifespan = row.death - row.birth;
      row.rep_volume = pair.representative.size();
      try {
        evaluate(row, fc, pair.representative, dm, options.norm_budget, options.width_budget, options.metric);
        bool failed = !row.width_ok || (row.area_ok && !*row.area_ok);
        if (failed && !row.exact_check) {
          // an upper bound already fails; try to settle the exact value anyway
          evaluate(row, fc, pair.representative, dm, options.retry_budget, options.retry_budget, options.metric);
          failed = !row.width_ok || (row.area_ok && !*row.area_ok);
          if (failed && !row.exact_check) row.note = "fails with upper-bound values (a genuine violation)";
        }
        row.status = failed ? RowStatus::violation : RowStatus::ok;
        if (!failed && !row.exact_check) row.note = "satisfied by representative upper bounds";
      } catch (const ResourceError& e) {
        row.status = RowStatus::unverified;
        row.note = e.what();
      }
      report.rows.push_back(std::move(row));
    }
  return report;
}

BoundReport verify_bounds(const Graph& g, int max_dim, Scale max_scale, const BoundOptions& options) {
  if (max_dim < 2) throw InputError("bound verification needs max_dim >= 2");
  auto dm = shortest_paths(g);
  if (max_scale <= 0) max_scale = std::max(dm.diameter(), 1);
  auto fc = build_filtration(dm, max_dim, max_scale);
  auto pd = compute_pd(fc);
  return verify_bounds(fc, pd, dm, options);
}

std::vector<ConjectureRow> explore_conjectures(const std::vector<FamilySpec>& family, const ExploreOptions& options) {
  std::vector<ConjectureRow> rows;
  for (const auto& spec : family) {
    Graph g = generate(spec, options.seed);
    auto report = verify_bounds(g, options.max_dim, options.max_scale, options.bounds);
    std::ostringstream param;
    for (std::size_t i = 0; i < spec.params.size(); ++i) param << (i ? ";" : "") << spec.params[i];
    for (const auto& r : report.rows) {
      if (r.status == RowStatus::unverified) continue;
      ConjectureRow row;
      row.family = spec.name;
      row.param = param.str();
      row.dim = r.dim;
      row.birth = r.birth;
      row.death = r.death;
      row.volume = r.rep_norm;
      row.volume_exact = r.norm_exact;
      row.width = r.rep_width;
      row.width_exact = r.width_exact;
      row.width_ratio = static_cast<double>(r.lifespan) / (r.rep_width + 1);
      row.volume_root = std::pow(static_cast<double>(r.rep_norm), 1.0 / r.dim);
      rows.push_back(row);
    }
  }
  return rows;
}

void write_conjecture_csv(const std::vector<ConjectureRow>& rows, std::ostream& out) {
  out << "family,param,dim,birth,death,volume,volume_exact,width,width_exact,width_ratio,volume_root\n";
  for (const auto& r : rows) {
    out << r.family << ',' << r.param << ',' << r.dim << ',' << r.birth << ',' << r.death << ',' << r.volume << ','
        << (r.volume_exact ? "true" : "false") << ',' << r.width << ',' << (r.width_exact ? "true" : "false") << ','
        << std::setprecision(6) << r.width_ratio << ',' << r.volume_root << '\n';
  }
}

std::vector<NamedGraph> example_corpus(std::uint64_t seed_lo, std::uint64_t seed_hi) {
  std::vector<NamedGraph> out;
  for (std::size_t n = 4; n <= 15; ++n) out.push_back({"C" + std::to_string(n), cycle_graph(n), 4});
  out.push_back({"G1", cube_with_diagonals(), 4});
  out.push_back({"G2", hypercube_skeleton(3), 4});
  for (std::size_t m = 1; m <= 10; ++m) out.push_back({"thin_box:" + std::to_string(m), thin_box(m), 3});
  for (std::size_t m = 1; m <= 4; ++m)
    out.push_back({"tetrahedron_surface:" + std::to_string(m), tetrahedron_surface(m), 3});
  for (std::uint64_t s = seed_lo; s <= seed_hi; ++s)
    out.push_back({"gnp:12,0.3#" + std::to_string(s), gnp_random(12, 0.3, s), 4});
  return out;
}

}  // namespace powerph

namespace powerph {

namespace {

std::string points_text(const std::vector<DiagramPoint>& pts) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < pts.size(); ++i)
    out << (i ? ", " : "") << '(' << pts[i].birth << ',' << (pts[i].death ? std::to_string(*pts[i].death) : "inf")
        << ')';
  out << '}';
  return out.str();
}

PersistenceDiagram diagram_of(const Graph& g, int max_dim) {
  auto dm = shortest_paths(g);
  return compute_pd(build_filtration(dm, max_dim, std::max(dm.diameter(), 1)));
}

FactCheck diagram_is(const std::string& name, const PersistenceDiagram& pd, int d,
                     std::vector<DiagramPoint> expected) {
  auto got = pd.points(d);
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  return {name, got == expected, "got " + points_text(got) + ", expected " + points_text(expected)};
}

FactCheck births_count(const std::string& name, const PersistenceDiagram& pd, int d, Scale birth,
                       std::size_t expected) {
  auto pts = pd.points(d);
  auto n = static_cast<std::size_t>(
      std::count_if(pts.begin(), pts.end(), [&](const DiagramPoint& p) { return p.birth == birth; }));
  return {name, n == expected, "PD" + std::to_string(d) + " = " + points_text(pts)};
}

}  // namespace

std::vector<FactCheck> worked_example_facts(std::size_t max_tetrahedron) {
  std::vector<FactCheck> out;
  auto c6 = diagram_of(cycle_graph(6), 3);
  out.push_back(diagram_is("PD2(C6) = {(2,3)}", c6, 2, {{2, 3}}));
  auto g1 = diagram_of(cube_with_diagonals(), 3);
  out.push_back(diagram_is("PD2(G1) = {(1,2)}", g1, 2, {{1, 2}}));
  out.push_back(diagram_is("PD1(G1) = {}", g1, 1, {}));
  auto g2 = diagram_of(hypercube_skeleton(3), 4);
  out.push_back(diagram_is("PD2(G2) = {}", g2, 2, {}));
  out.push_back(diagram_is("PD3(G2) = {(2,3)}", g2, 3, {{2, 3}}));
  out.push_back(births_count("PD2(C9) has 2 births at 3", diagram_of(cycle_graph(9), 3), 2, 3, 2));
  out.push_back(births_count("PD2(C12) has 3 births at 4", diagram_of(cycle_graph(12), 3), 2, 4, 3));
  {
    auto pd = diagram_of(cycle_graph(14), 4);
    auto pts = pd.points(3);
    bool ok = std::any_of(pts.begin(), pts.end(), [](const DiagramPoint& p) { return p.birth == 5; });
    out.push_back({"PD3(C14) has a birth at 5", ok, "PD3 = " + points_text(pts)});
  }
  for (std::size_t m = 2; m <= 10; ++m) {
    Graph g = thin_box(m);
    auto dm = shortest_paths(g);
    std::vector<std::vector<Vertex>> tris;
    for (const auto& t : thin_box_surface(m)) tris.push_back({t[0], t[1], t[2]});
    SupportComplex s(2, tris, dm, 1);
    auto w = width_of_surface(s).width;
    auto fact = diagram_is("thin_box:" + std::to_string(m) + " PD2 = {(1,2)}, area 8m+4, width 2",
                           diagram_of(g, 3), 2, {{1, 2}});
    fact.ok = fact.ok && tris.size() == 8 * m + 4 && w == 2;
    fact.detail += ", area " + std::to_string(tris.size()) + ", width " + std::to_string(w);
    out.push_back(fact);
  }
  for (std::size_t m = 2; m <= max_tetrahedron; ++m) {
    auto pd = diagram_of(tetrahedron_surface(m), 3);
    auto pts = pd.points(2);
    auto need = static_cast<Scale>((m + 1) / 2);
    bool ok = std::any_of(pts.begin(), pts.end(),
                          [&](const DiagramPoint& p) { return p.birth == 1 && (!p.death || *p.death >= need); });
    out.push_back({"tetrahedron_surface:" + std::to_string(m) + " PD2 has (1, >= " + std::to_string(need) + ")", ok,
                   "PD2 = " + points_text(pts)});
  }
  return out;
}

}  // namespace powerph
