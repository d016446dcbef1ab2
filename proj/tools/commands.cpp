#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "io.hpp"
#include "probekit/errors.hpp"
#include "probekit/spaces.hpp"
#include "render.hpp"

namespace probekit::cli {

namespace {

using io::json;

struct Common {
  std::string polytope;
  std::int64_t field = 0;
};

struct Search {
  long max_norm = 3;
  std::size_t max_points = 1000;
  std::size_t max_depth = 64;
  std::string window;
};

void add_polytope(CLI::App* sub, Common& c) {
  sub->add_option("polytope", c.polytope, "polytope JSON file or preset:<name>")->required();
  sub->add_option("--field", c.field, "square-free D for Q(sqrt D)");
}

void add_search(CLI::App* sub, Search& s) {
  sub->add_option("--max-norm", s.max_norm, "sup-norm bound on probe directions");
  sub->add_option("--max-points", s.max_points, "cap on orbit points inside the window");
  sub->add_option("--max-depth", s.max_depth, "cap on probe path length");
  sub->add_option("--window", s.window, "lo..hi per coordinate, comma separated");
}

std::int64_t disc_of(const Point& x) {
  std::int64_t D = 1;
  for (const auto& c : x)
    if (c.disc() != 1) D = c.disc();
  return D;
}

Polytope load(const Common& c, const std::vector<Point>& pts = {}) {
  Polytope P = io::parse_polytope(c.polytope);
  if (c.field > 0) P = P.with_field(c.field);
  for (const auto& x : pts) {
    std::int64_t D = disc_of(x);
    if (D == 1 || D == P.field()) continue;
    if (P.field() != 1) fail(ErrorKind::FieldMismatch, "point " + to_string(x) + " lies outside Q(√" + std::to_string(P.field()) + ")");
    P = P.with_field(D);
  }
  return P;
}

Point point_for(const Polytope& P, const std::string& s) {
  Point x = io::parse_point(s);
  if (x.size() != P.dim()) fail(ErrorKind::DimensionMismatch, "point " + s + " has " + std::to_string(x.size()) + " coordinates, polytope has dimension " + std::to_string(P.dim()));
  return x;
}

OrbitParams params_for(const Polytope& P, const Search& s) {
  OrbitParams p;
  p.max_norm = s.max_norm;
  p.max_points = s.max_points;
  p.max_depth = s.max_depth;
  if (!s.window.empty()) {
    Window w = io::parse_window(s.window);
    if (w.lo.size() != P.dim()) fail(ErrorKind::DimensionMismatch, "window has " + std::to_string(w.lo.size()) + " components");
    p.window = w;
  }
  return p;
}

int code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotDelzant:
    case ErrorKind::NotAdmissible:
    case ErrorKind::NotEquivalent:
    case ErrorKind::NormalsDoNotSpan: return 1;
    case ErrorKind::WordSearchExhausted: return 3;
    default: return 2;
  }
}

json vertex_json(const Vertex& v) { return {{"point", io::to_json(v.point)}, {"facets", v.facets}, {"det", v.det.get_str()}}; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"probekit: symmetric probes and toric fibres"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common common;
  Search search;
  std::string point, from, to, dir, base, slice_file, output;
  std::vector<std::string> dirs, points;
  long bound = 3;
  std::size_t cap = 256;
  bool draw_probes = false, labels = false;

  json result;
  int code = 0;
  std::function<void()> action;

  auto* check = app.add_subcommand("check", "vertices and the Delzant condition");
  add_polytope(check, common);
  check->callback([&] {
    action = [&] {
      Polytope P = load(common);
      auto rep = delzant_report(P);
      json vs = json::array();
      for (const auto& v : rep.vertices) vs.push_back(vertex_json(v));
      result = {{"delzant", rep.ok()}, {"vertices", vs}, {"vertex_count", rep.vertices.size()}, {"reduction_type", P.normals_span()}, {"polytope", io::to_json(P)}};
      if (rep.violation) result["violation"] = vertex_json(*rep.violation);
      code = rep.ok() ? 0 : 1;
    };
  });

  auto* inv = app.add_subcommand("invariants", "Chekanov invariants d, #_d and Gamma at a point");
  add_polytope(inv, common);
  inv->add_option("--point", point, "interior point")->required();
  inv->callback([&] {
    action = [&] {
      Polytope P = load(common, {io::parse_point(point)});
      Point x = point_for(P, point);
      result = io::to_json(invariants(P, x));
      result["point"] = io::to_json(x);
      result["ell"] = io::to_json(P.ell(x));
    };
  });

  auto* probes = app.add_subcommand("probes", "symmetric probes through a point");
  add_polytope(probes, common);
  probes->add_option("--point", point, "interior point")->required();
  probes->add_option("--max-norm", search.max_norm, "sup-norm bound on directions");
  probes->callback([&] {
    action = [&] {
      Polytope P = load(common, {io::parse_point(point)});
      Point x = point_for(P, point);
      json list = json::array();
      for (const auto& s : enumerate(P, x, search.max_norm)) list.push_back(io::to_json(probe_move(s, x)));
      result = {{"point", io::to_json(x)}, {"probes", list}, {"count", list.size()}};
    };
  });

  auto* part = app.add_subcommand("partner", "partner of a point along one direction");
  add_polytope(part, common);
  part->add_option("--point", point, "interior point")->required();
  part->add_option("--dir", dir, "primitive integer direction")->required();
  part->callback([&] {
    action = [&] {
      Polytope P = load(common, {io::parse_point(point)});
      Point x = point_for(P, point);
      result = io::to_json(probe_move(shoot(P, x, io::parse_int_vector(dir)), x));
    };
  });

  auto* orbit = app.add_subcommand("orbit", "closure of a point under probe moves");
  add_polytope(orbit, common);
  orbit->add_option("--point", point, "interior point")->required();
  add_search(orbit, search);
  orbit->callback([&] {
    action = [&] {
      Polytope P = load(common, {io::parse_point(point)});
      Point x = point_for(P, point);
      OrbitGraph g = explore(P, x, params_for(P, search));
      auto pts = g.window_points();
      std::sort(pts.begin(), pts.end());
      json jp = json::array();
      for (const auto& p : pts) jp.push_back(io::to_json(p));
      result = {{"root", io::to_json(x)},
                {"nodes", g.window_size()},
                {"frontier", g.nodes.size() - g.window_size()},
                {"edges", g.edges.size()},
                {"truncated", g.truncated},
                {"points", jp}};
    };
  });

  auto* mono = app.add_subcommand("monodromy", "group generated by probe loops at a point");
  add_polytope(mono, common);
  mono->add_option("--point", point, "interior point")->required();
  mono->add_option("--cap", cap, "cap on group elements");
  add_search(mono, search);
  mono->callback([&] {
    action = [&] {
      Polytope P = load(common, {io::parse_point(point)});
      Point x = point_for(P, point);
      OrbitGraph g = explore(P, x, params_for(P, search));
      result = io::to_json(holonomy_group(g, x, cap));
      result["point"] = io::to_json(x);
      result["orbit_truncated"] = g.truncated;
    };
  });

  auto* amb = app.add_subcommand("ambient", "integer constraints on ambient monodromy between two fibres");
  add_polytope(amb, common);
  amb->add_option("--from", from, "first point")->required();
  amb->add_option("--to", to, "second point")->required();
  amb->add_option("--bound", bound, "search bound for free parameters");
  amb->callback([&] {
    action = [&] {
      Polytope P = load(common, {io::parse_point(from), io::parse_point(to)});
      AmbientResult r = solve_ambient(P, point_for(P, from), point_for(P, to), bound);
      result = io::to_json(r);
      code = r.status == AmbientResult::Status::Solutions ? 0 : r.status == AmbientResult::Status::Infeasible ? 1 : 3;
    };
  });

  auto* eq = app.add_subcommand("equivalent", "decide whether two fibres are equivalent");
  add_polytope(eq, common);
  eq->add_option("--from", from, "first point")->required();
  eq->add_option("--to", to, "second point")->required();
  eq->add_option("--bound", bound, "ambient search bound");
  add_search(eq, search);
  eq->callback([&] {
    action = [&] {
      Polytope P = load(common, {io::parse_point(from), io::parse_point(to)});
      Verdict v = decide(P, point_for(P, from), point_for(P, to), params_for(P, search), bound);
      result = io::to_json(v);
      code = v.kind == Verdict::Kind::Equivalent ? 0 : v.kind == Verdict::Kind::Distinct ? 1 : 3;
    };
  });

  auto* red = app.add_subcommand("reduce", "toric reduction along an affine slice");
  add_polytope(red, common);
  red->add_option("--slice", slice_file, "slice JSON {\"base\": [...], \"dirs\": [[...]]}");
  red->add_option("--base", base, "base point of the slice");
  red->add_option("--dir", dirs, "direction of the slice (repeatable)");
  red->callback([&] {
    action = [&] {
      AffineSlice V;
      if (!slice_file.empty()) {
        std::ifstream in(slice_file);
        if (!in) fail(ErrorKind::ParseError, "cannot read '" + slice_file + "'");
        json j;
        try {
          j = json::parse(in);
        } catch (const json::parse_error&) {
          fail(ErrorKind::ParseError, slice_file + ": malformed JSON");
        }
        V = io::slice_from_json(j);
      } else {
        if (base.empty() || dirs.empty()) fail(ErrorKind::ParseError, "reduce needs --slice or --base with at least one --dir");
        std::vector<IntVector> ds;
        for (const auto& d : dirs) ds.push_back(io::parse_int_vector(d));
        V = AffineSlice::make(io::parse_point(base), ds);
      }
      Polytope P = load(common, {V.base});
      Admissibility a = admissible(P, V);
      if (!a.ok) {
        result = io::to_json(a);
        code = 1;
        return;
      }
      ReductionResult r = reduce(P, V);
      result = io::to_json(r);
      if (V.repaired) err << "warning: slice directions were saturated to a lattice basis\n";
    };
  });

  auto* lift = app.add_subcommand("lift", "Delzant lift into the orthant");
  add_polytope(lift, common);
  lift->add_option("--point", point, "interior point to lift");
  lift->callback([&] {
    action = [&] {
      Polytope P = load(common, point.empty() ? std::vector<Point>{} : std::vector<Point>{io::parse_point(point)});
      DelzantLift L = delzant_lift(P);
      json k = json::array();
      for (const auto& v : L.kernel) k.push_back(io::to_json(v));
      result = {{"kernel", k}, {"normals", io::to_json(L.normals)}, {"offsets", io::to_json(Point(L.offsets))}};
      if (!point.empty()) {
        Point x = point_for(P, point);
        P.require_interior(x);
        auto lifted = L(x);
        result["point"] = io::to_json(x);
        result["lifted"] = io::to_json(Point(lifted));
        result["invariants"] = io::to_json(invariants(P, x));
        Invariants li = invariants_of_values(lifted);
        li.reduction_type = true;  // the orthant's normals always span
        result["lifted_invariants"] = io::to_json(li);
      }
    };
  });

  auto* chek = app.add_subcommand("chekanov", "product tori in C^N: equivalence and probe words");
  chek->add_option("--from", from, "positive tuple")->required();
  chek->add_option("--to", to, "positive tuple")->required();
  chek->add_option("--max-points", search.max_points, "search cap when Gamma has rank >= 2");
  chek->add_option("--max-depth", search.max_depth, "search depth when Gamma has rank >= 2");
  chek->callback([&] {
    action = [&] {
      Point a = io::parse_point(from), b = io::parse_point(to);
      bool eqv = chekanov::equivalent(a, b);
      auto ra = chekanov::reduce(a), rb = chekanov::reduce(b);
      auto rj = [](const chekanov::ReducedVector& r) {
        return json{{"d", r.d.str()}, {"mult", r.mult}, {"entries", io::to_json(Point(r.entries))}};
      };
      result = {{"equivalent", eqv}, {"from", rj(ra)}, {"to", rj(rb)}};
      if (!ra.entries.empty() && gamma_lattice(ra.entries).size() == 1)
        result["integral_affine_length"] = chekanov::integral_affine_length(ra.entries).str();
      if (!eqv) {
        code = 1;
        return;
      }
      chekanov::WordSearch ws;
      ws.max_points = std::max<std::size_t>(search.max_points, 1);
      ws.max_depth = search.max_depth;
      try {
        auto w = chekanov::probe_word(a, b, ws);
        result["word"] = io::to_json(w);
        result["replay"] = io::to_json(Point(chekanov::replay(a, w)));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::WordSearchExhausted) throw;
        result["word"] = nullptr;
        result["note"] = e.what();
        code = 3;
      }
    };
  });

  auto* rend = app.add_subcommand("render", "SVG picture of a planar polytope");
  add_polytope(rend, common);
  rend->add_option("--point", points, "orbit seed (repeatable)");
  rend->add_flag("--probes", draw_probes, "draw the probes through the first point");
  rend->add_flag("--labels", labels, "label orbit points");
  rend->add_option("-o,--output", output, "write SVG here instead of stdout");
  add_search(rend, search);
  rend->callback([&] {
    action = [&] {
      std::vector<Point> seeds;
      for (const auto& s : points) seeds.push_back(io::parse_point(s));
      Polytope P = load(common, seeds);
      if (search.window.empty()) fail(ErrorKind::ParseError, "render needs --window");
      render::RenderSpec spec;
      spec.box = io::parse_window(search.window);
      spec.labels = labels;
      OrbitParams params = params_for(P, search);
      // seeds whose orbits meet share a colour
      std::vector<std::vector<Point>> comps;
      for (const auto& x : seeds) {
        auto g = explore(P, x, params);
        auto pts = g.window_points();
        bool merged = false;
        for (auto& c : comps) {
          if (std::find(c.begin(), c.end(), x) != c.end()) {
            merged = true;
            break;
          }
        }
        if (!merged) comps.push_back(pts);
      }
      spec.components = comps;
      if (draw_probes && !seeds.empty()) spec.probes = enumerate(P, seeds.front(), search.max_norm);
      std::string svg = render::render_svg(P, spec);
      if (output.empty()) {
        out << svg;
      } else {
        std::ofstream f(output);
        if (!f) fail(ErrorKind::ParseError, "cannot write '" + output + "'");
        f << svg;
        result = {{"written", output}};
      }
    };
  });

  auto* plist = app.add_subcommand("preset-list", "built-in polytopes and their facet orders");
  plist->callback([&] {
    action = [&] {
      result = json::array();
      for (const auto& p : spaces::preset_list()) result.push_back({{"name", p.name}, {"polytope", p.polytope}, {"facets", p.facets}});
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    action();
  } catch (const Error& e) {
    json j = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    err << j.dump() << "\n";
    return code_for(e.kind());
  }
  if (!result.is_null()) out << result.dump(2) << "\n";
  return code;
}

}  // namespace probekit::cli
