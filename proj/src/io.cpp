#include "powerph/io.hpp"

#include <algorithm>
#include <array>

namespace powerph {

namespace {

json point_json(const DiagramPoint& p) {
  return json::array({p.birth, p.death ? json(*p.death) : json(nullptr)});
}

json vertices_json(const std::vector<std::vector<Vertex>>& faces) {
  json out = json::array();
  for (const auto& f : faces) out.push_back(f);
  return out;
}

}  // namespace

const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::ok: return "ok";
    case RowStatus::violation: return "violation";
    case RowStatus::unverified: return "unverified";
  }
  return "?";
}

json to_json(const PersistenceDiagram& pd) {
  json dims = json::object();
  for (int d = 0; d < pd.num_dims(); ++d) {
    json pts = json::array();
    for (const auto& p : pd.points(d)) pts.push_back(point_json(p));
    dims[std::to_string(d)] = std::move(pts);
  }
  return {{"dims", dims}, {"infinite_death", nullptr}};
}

json to_json(const Pd1Check& c) {
  auto pts = [](const std::vector<DiagramPoint>& v) {
    json a = json::array();
    for (const auto& p : v) a.push_back(point_json(p));
    return a;
  };
  return {{"ok", c.ok},
          {"formula_pd", pts(c.formula)},
          {"computed_pd", pts(c.computed)},
          {"diff", {{"missing", pts(c.missing)}, {"extra", pts(c.extra)}}}};
}

json to_json(const BoundRow& r) {
  json j = {{"dim", r.dim},
            {"birth", r.birth},
            {"death", r.death},
            {"lifespan", r.lifespan},
            {"rep_volume", r.rep_volume},
            {"rep_norm", r.rep_norm},
            {"norm_exact", r.norm_exact},
            {"rep_width", r.rep_width},
            {"width_exact", r.width_exact},
            {"area_bound_rhs", r.area_bound_rhs ? json(*r.area_bound_rhs) : json(nullptr)},
            {"width_bound_rhs", r.width_bound_rhs},
            {"area_ok", r.area_ok ? json(*r.area_ok) : json(nullptr)},
            {"width_ok", r.width_ok},
            {"exact_check", r.exact_check},
            {"status", to_string(r.status)}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json to_json(const BoundReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) rows.push_back(to_json(row));
  return {{"rows", rows},
          {"violations", r.violations()},
          {"unverified", r.unverified()},
          {"inexact", r.inexact()},
          {"soundness",
           "norm/width values flagged exact are class minima; otherwise they are representative upper bounds, "
           "so a failed check is a genuine violation while a passed check (exact_check=false) only bounds that "
           "representative"}};
}

json to_json(const ShortestBasis& b) {
  json loops = json::array();
  for (const auto& l : b.loops) loops.push_back({{"length", l.length()}, {"vertices", l.vertices}});
  return loops;
}

json to_json(const ClassNorm& n) {
  return {{"value", n.value},
          {"exact", n.exact},
          {"witness_size", n.witness.size()},
          {"boundary_rank", n.boundary_rank}};
}

json to_json(const WidthReport& w) {
  return {{"width", w.width},
          {"base_vertex", w.base_vertex},
          {"argmax_slice", w.argmax_slice},
          {"slice_diameters", w.slice_diameters}};
}

json to_json(const ClassWidth& w) {
  return {{"width", w.width}, {"exact", w.exact}, {"boundary_rank", w.boundary_rank}};
}

json to_json(const ThickThin& t) {
  return {{"m", t.m},
          {"thin_vertices", t.thin_vertices},
          {"thick_vertices", t.thick_vertices},
          {"thin_triangles", vertices_json(t.thin_triangles)},
          {"thick_triangles", vertices_json(t.thick_triangles)}};
}

json to_json(const Sweepout& s) {
  json slices = json::array();
  for (const auto& sl : s.slices)
    slices.push_back({{"faces", vertices_json(sl.faces)},
                      {"vertices", sl.vertices},
                      {"diameter", sl.diameter},
                      {"degenerate", sl.degenerate},
                      {"regular", sl.regular}});
  return {{"base", s.base}, {"eccentricity", s.eccentricity}, {"slices", slices}};
}

json to_json(const Chain& c, const FilteredComplex& fc) {
  json simplices = json::array();
  for (SimplexId id : c.support) {
    auto v = fc.vertices(id);
    simplices.push_back(std::vector<Vertex>(v.begin(), v.end()));
  }
  return {{"dim", c.dim}, {"simplices", simplices}};
}

json metadata(const json& config, double wall_time_s) {
  return {{"version", kVersion}, {"config", config}, {"wall_time_s", wall_time_s}};
}

void write_pd_csv(const PersistenceDiagram& pd, std::ostream& out) {
  out << "dim,birth,death\n";
  for (int d = 0; d < pd.num_dims(); ++d)
    for (const auto& p : pd.points(d))
      out << d << ',' << p.birth << ',' << (p.death ? std::to_string(*p.death) : std::string("inf")) << '\n';
}

void write_pd_svg(const PersistenceDiagram& pd, std::ostream& out) {
  Scale hi = 1;
  for (int d = 0; d < pd.num_dims(); ++d)
    for (const auto& p : pd.points(d)) hi = std::max({hi, p.birth, p.death.value_or(0)});
  const double size = 400, pad = 40, span = size - 2 * pad;
  const double top = hi + 1;  // row for infinite deaths
  auto x = [&](double v) { return pad + span * v / top; };
  auto y = [&](double v) { return size - pad - span * v / top; };
  static constexpr std::array<const char*, 6> colors = {"#1f77b4", "#d62728", "#2ca02c",
                                                        "#9467bd", "#ff7f0e", "#8c564b"};

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << x(0) << "\" y1=\"" << y(0) << "\" x2=\"" << x(top) << "\" y2=\"" << y(top)
      << "\" stroke=\"gray\"/>\n";
  out << "<line x1=\"" << x(0) << "\" y1=\"" << y(top) << "\" x2=\"" << x(top) << "\" y2=\"" << y(top)
      << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
  out << "<text x=\"" << x(0) << "\" y=\"" << y(top) - 4 << "\" font-size=\"10\">inf</text>\n";
  for (Scale t = 0; t <= hi; ++t) {
    out << "<text x=\"" << x(t) << "\" y=\"" << size - pad + 14 << "\" font-size=\"10\">" << t << "</text>\n";
    out << "<text x=\"" << pad - 14 << "\" y=\"" << y(t) << "\" font-size=\"10\">" << t << "</text>\n";
  }
  for (int d = 0; d < pd.num_dims(); ++d) {
    const char* color = colors[static_cast<std::size_t>(d) % colors.size()];
    for (const auto& p : pd.points(d))
      out << "<circle cx=\"" << x(p.birth) << "\" cy=\"" << y(p.death ? *p.death : top) << "\" r=\"4\" fill=\""
          << color << "\" fill-opacity=\"0.6\"><title>H" << d << " (" << p.birth << ", "
          << (p.death ? std::to_string(*p.death) : std::string("inf")) << ")</title></circle>\n";
    out << "<text x=\"" << size - pad - 30 << "\" y=\"" << pad + 14 * d << "\" font-size=\"11\" fill=\"" << color
        << "\">H" << d << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace powerph
