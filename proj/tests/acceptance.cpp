// Acceptance suite: one PASS/FAIL line per criterion, followed by details.
// Usage: acceptance [criterion...]; exit status 1 if any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "powerph/error.hpp"
#include "powerph/verify.hpp"

using namespace powerph;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (notes.size() < 40) notes.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

std::string pts_text(const std::vector<DiagramPoint>& pts) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < pts.size(); ++i)
    out << (i ? ", " : "") << '(' << pts[i].birth << ',' << (pts[i].death ? std::to_string(*pts[i].death) : "inf")
        << ')';
  out << '}';
  return out.str();
}

struct Run {
  DistanceMatrix dm;
  FilteredComplex fc;
  PersistenceDiagram pd;
  Run(const Graph& g, int max_dim) : dm(shortest_paths(g)) {
    fc = build_filtration(dm, max_dim, std::max(dm.diameter(), 1));
    pd = compute_pd(fc);
  }
};

const std::vector<NamedGraph>& corpus() {
  static const auto c = example_corpus(1, 100);
  return c;
}

Outcome pd0_closed_form() {
  Outcome o;
  for (const auto& ng : corpus()) {
    Run r(ng.graph, 1);
    std::vector<DiagramPoint> expected(ng.graph.num_vertices() - 1, DiagramPoint{0, 1});
    expected.push_back({0, std::nullopt});
    o.require(r.pd.points(0) == expected, ng.name + ": PD0 = " + pts_text(r.pd.points(0)));
  }
  o.note(std::to_string(corpus().size()) + " graphs");
  return o;
}

Outcome pd1_formula_equality() {
  Outcome o;
  for (const auto& ng : corpus()) {
    auto c = verify_pd1(ng.graph);
    o.require(c.ok, ng.name + ": formula " + pts_text(c.formula) + " vs computed " + pts_text(c.computed));
  }
  o.note(std::to_string(corpus().size()) + " graphs, zero mismatches required");
  return o;
}

Outcome exact_examples() {
  Outcome o;
  auto check = [&](const std::string& name, const PersistenceDiagram& pd, int d, std::vector<DiagramPoint> want) {
    auto got = pd.points(d);
    o.require(got == want, name + ": got " + pts_text(got));
    o.note(name + " = " + pts_text(got));
  };
  Run c6(cycle_graph(6), 3);
  check("PD2(C6)", c6.pd, 2, {{2, 3}});
  Run g1(cube_with_diagonals(), 3);
  check("PD2(G1)", g1.pd, 2, {{1, 2}});
  check("PD1(G1)", g1.pd, 1, {});
  Run g2(hypercube_skeleton(3), 4);
  check("PD2(G2)", g2.pd, 2, {});
  check("PD3(G2)", g2.pd, 3, {{2, 3}});
  return o;
}

Outcome late_births() {
  Outcome o;
  auto births = [](const PersistenceDiagram& pd, int d, Scale b) {
    std::vector<DiagramPoint> out;
    for (const auto& p : pd.points(d))
      if (p.birth == b) out.push_back(p);
    return out;
  };
  Run c9(cycle_graph(9), 4);
  auto b9 = births(c9.pd, 2, 3);
  o.require(b9.size() == 2, "PD2(C9) births at 3: " + pts_text(b9));
  o.note("PD2(C9) births at 3: " + pts_text(b9));
  Run c12(cycle_graph(12), 4);
  auto b12 = births(c12.pd, 2, 4);
  o.require(b12.size() == 3, "PD2(C12) births at 4: " + pts_text(b12));
  o.note("PD2(C12) births at 4: " + pts_text(b12));
  Run c14(cycle_graph(14), 4);
  auto b14 = births(c14.pd, 3, 5);
  o.require(!b14.empty(), "PD3(C14) births at 5: " + pts_text(b14));
  o.note("PD3(C14) births at 5: " + pts_text(b14));
  return o;
}

Chain chain_of(const FilteredComplex& fc, const std::vector<Triangle>& tris) {
  Chain c{2, {}};
  for (const auto& t : tris) c.support.push_back(fc.id_of(std::vector<Vertex>{t[0], t[1], t[2]}));
  std::sort(c.support.begin(), c.support.end());
  return c;
}

Outcome thin_boxes() {
  Outcome o;
  for (std::size_t m = 2; m <= 10; ++m) {
    const std::string tag = "thin_box:" + std::to_string(m);
    Run r(thin_box(m), 3);
    o.require(r.pd.points(2) == std::vector<DiagramPoint>{{1, 2}}, tag + " PD2 = " + pts_text(r.pd.points(2)));
    auto surface = chain_of(r.fc, thin_box_surface(m));
    o.require(surface.size() == 8 * m + 4, tag + " volume " + std::to_string(surface.size()));
    o.require(is_cycle(r.fc, surface), tag + " surface is not a cycle");
    if (r.pd.pairs(2).empty()) continue;
    const auto& pair = r.pd.pairs(2)[0];
    o.require(BoundaryCoset(r.fc, surface + pair.representative, 1).contains_zero(),
              tag + " surface not homologous to the representative");
    auto s = SupportComplex::from_chain(r.fc, surface, r.dm, 1);
    int w = width_of_surface(s).width;
    o.require(w == 2, tag + " width " + std::to_string(w));
    o.require(pair.lifespan() <= w + 1, tag + " lifespan " + std::to_string(pair.lifespan()) + " > width + 1");
  }
  o.note("m = 2..10: PD2 = {(1,2)}, volume 8m+4, width 2, 1 <= 3");
  return o;
}

Outcome tetrahedra() {
  Outcome o;
  for (std::size_t m = 2; m <= 5; ++m) {
    const std::string tag = "tetrahedron_surface:" + std::to_string(m);
    Run r(tetrahedron_surface(m), 3);
    const auto need = static_cast<Scale>((m + 1) / 2);
    const PersistencePair* pair = nullptr;
    for (const auto& p : r.pd.pairs(2))
      if (p.birth == 1 && p.death.value_or(kInfiniteScale) >= need) pair = &p;
    o.require(pair != nullptr, tag + " no pair (1, >= " + std::to_string(need) + ") in " + pts_text(r.pd.points(2)));
    if (!pair) continue;
    auto surface = chain_of(r.fc, tetrahedron_surface_triangles(m));
    o.require(surface.size() == 4 * m * m && is_cycle(r.fc, surface), tag + " generated surface");
    o.require(BoundaryCoset(r.fc, surface + pair->representative, 1).contains_zero(),
              tag + " generated surface not homologous to the representative");
    auto norm = class_norm(r.fc, pair->representative, 1);
    std::ostringstream line;
    line << tag << ": pair " << pts_text({pair->point()}) << ", representative volume "
         << pair->representative.size() << ", generated surface " << surface.size() << ", class norm " << norm.value
         << (norm.exact ? " (exact)" : " (upper bound)");
    o.note(line.str());
    if (norm.exact)
      o.require(norm.value == 4 * m * m,
                tag + " exact class norm " + std::to_string(norm.value) + " != 4m^2 = " + std::to_string(4 * m * m) +
                    " (each corner K4 is a 3-simplex at scale 1; swapping its three corner triangles for the "
                    "opposite one saves 2 per corner)");
    auto report = verify_bounds(r.fc, r.pd, r.dm);
    for (const auto& row : report.rows)
      if (row.birth == pair->birth && row.death == pair->death.value_or(-1)) {
        o.require(row.status == RowStatus::ok, tag + " bound row " + std::string(row.note));
        o.require(row.area_ok.value_or(false) && row.width_ok, tag + " bound checks");
      }
  }
  return o;
}

Outcome betti_oracle() {
  Outcome o;
  std::size_t checks = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::size_t n = 6 + seed % 5;
    const double p = seed % 2 ? 0.3 : 0.5;
    auto g = gnp_random(n, p, seed);
    Run r(g, 4);
    for (Scale s = 0; s <= r.dm.diameter(); ++s) {
      auto want = oracle::betti(r.dm, 4, s);
      for (int d = 0; d < 4; ++d) {
        ++checks;
        o.require(r.pd.alive(d, s) == want[static_cast<std::size_t>(d)],
                  "G(" + std::to_string(n) + "," + std::to_string(p) + ")#" + std::to_string(seed) + " dim " +
                      std::to_string(d) + " scale " + std::to_string(s));
      }
    }
  }
  o.note(std::to_string(checks) + " (graph, dim, scale) comparisons");
  return o;
}

Outcome bound_suites() {
  Outcome o;
  std::size_t rows = 0, inexact = 0, violations = 0, unverified = 0;
  for (const auto& ng : corpus()) {
    auto report = verify_bounds(ng.graph, ng.max_dim);
    rows += report.rows.size();
    inexact += report.inexact();
    violations += report.violations();
    unverified += report.unverified();
    for (const auto& row : report.rows)
      o.require(row.status == RowStatus::ok, ng.name + " dim " + std::to_string(row.dim) + " (" +
                                                 std::to_string(row.birth) + "," + std::to_string(row.death) +
                                                 ") status " + (row.status == RowStatus::violation ? "violation" : "unverified") +
                                                 " " + row.note);
  }
  o.note(std::to_string(rows) + " rows, " + std::to_string(violations) + " violations, " +
         std::to_string(unverified) + " unverified, " + std::to_string(inexact) +
         " passed only with representative upper bounds");
  return o;
}

Outcome isoperimetric_suite() {
  Outcome o;
  for (std::size_t m = 6; m <= 10; ++m) {
    Graph g = tetrahedron_surface(m);
    auto dm = shortest_paths(g);
    std::vector<std::vector<Vertex>> tris;
    for (const auto& t : tetrahedron_surface_triangles(m)) tris.push_back({t[0], t[1], t[2]});
    SupportComplex s(2, tris, dm, 1);
    auto rho = injectivity_radii(s);
    std::size_t applicable = 0, area_fail = 0, boundary_fail = 0, wrapped = 0;
    std::string example;
    for (Vertex v : s.vertices()) {
      auto dist = s.distances_from(v);
      const int ecc = *std::max_element(dist.begin(), dist.end());
      for (int r = 1; r <= ecc; ++r) {
        auto rep = isoperimetric_check(s, v, r, r, rho);
        if (!rep.applicable) continue;
        ++applicable;
        if (rep.ball_area < static_cast<std::size_t>(2 * r * r)) ++area_fail;
        for (int i = 1; i <= r; ++i)
          if (rep.boundary_lengths[static_cast<std::size_t>(i - 1)] < static_cast<std::size_t>(2 * i)) {
            ++boundary_fail;
            if (2 * i > ecc) ++wrapped;
            if (example.empty()) {
              std::ostringstream e;
              e << "e.g. v=" << v << " r=" << r << " |dB_" << i
                << "|=" << rep.boundary_lengths[static_cast<std::size_t>(i - 1)] << " < " << 2 * i
                << " (eccentricity " << ecc << ")";
              example = e.str();
            }
          }
      }
    }
    std::ostringstream line;
    line << "tetrahedron_surface:" << m << ": " << applicable << " applicable (v,r), area violations " << area_fail
         << ", boundary-length violations " << boundary_fail << " (" << wrapped
         << " with 2i > eccentricity: the ball has passed the antipode and its boundary contracts)";
    o.note(line.str());
    if (!example.empty()) o.note("  " + example);
    o.require(area_fail == 0, "area bound violated on tetrahedron_surface:" + std::to_string(m));
    o.require(boundary_fail == 0, "boundary-length bound violated on tetrahedron_surface:" + std::to_string(m));
  }
  return o;
}

Outcome basis_oracle() {
  Outcome o;
  std::size_t graphs = 0;
  for (const auto& ng : corpus()) {
    if (ng.graph.num_vertices() > 12) continue;
    ++graphs;
    auto lib = shortest_h1_basis(ng.graph).lengths();
    auto brute = oracle::brute_basis_lengths(ng.graph);
    o.require(lib == brute, ng.name + ": lengths differ");
  }
  o.note(std::to_string(graphs) + " graphs with <= 12 vertices");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"PD0 closed form on the corpus", pd0_closed_form},
      {"PD1 formula equals computed PD1 on the corpus", pd1_formula_equality},
      {"exact diagrams of C6, G1, G2", exact_examples},
      {"late births in C9, C12, C14", late_births},
      {"thin boxes m = 2..10", thin_boxes},
      {"subdivided tetrahedra m = 2..5", tetrahedra},
      {"pair counts equal independent ranks", betti_oracle},
      {"bound suites on the corpus", bound_suites},
      {"isoperimetric property suite", isoperimetric_suite},
      {"shortest-basis oracle", basis_oracle},
  };
  std::vector<std::size_t> selected;
  for (int i = 1; i < argc; ++i) {
    int k = std::atoi(argv[i]);
    if (k < 1 || k > static_cast<int>(criteria.size())) {
      std::cerr << "usage: acceptance [1-" << criteria.size() << "]...\n";
      return 2;
    }
    selected.push_back(static_cast<std::size_t>(k));
  }
  if (selected.empty())
    for (std::size_t k = 1; k <= criteria.size(); ++k) selected.push_back(k);

  bool all = true;
  std::ostringstream details;
  for (auto k : selected) {
    const auto& [name, fn] = criteria[k - 1];
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << k << ". " << name << "  (" << secs << " s)\n" << std::flush;
    details << "[" << k << "] " << name << '\n';
    for (const auto& n : o.notes) details << "    " << n << '\n';
  }
  std::cout << '\n' << details.str();
  return all ? 0 : 1;
}
