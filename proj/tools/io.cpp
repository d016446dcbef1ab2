#include "io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "probekit/errors.hpp"
#include "probekit/spaces.hpp"

namespace probekit::io {

namespace {

constexpr std::string_view kRoot = "\xE2\x88\x9A";  // √

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t k = s.find(sep, start);
    out.push_back(trim(s.substr(start, k == std::string_view::npos ? std::string_view::npos : k - start)));
    if (k == std::string_view::npos) return out;
    start = k + 1;
  }
}

Rat parse_rational(const std::string& s, std::string_view whole) {
  static const std::regex re(R"(([+-]?)(\d+)(?:/(\d+))?)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) fail(ErrorKind::ParseError, "bad number '" + std::string(whole) + "'");
  Int num(m[2].str()), den(m[3].matched ? m[3].str() : "1");
  if (den == 0) fail(ErrorKind::ParseError, "zero denominator in '" + std::string(whole) + "'");
  Rat r(num, den);
  r.canonicalize();
  return m[1].str() == "-" ? Rat(-r) : r;
}

Rat parse_coefficient(const std::string& s, std::string_view whole) {
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  return parse_rational(s, whole);
}

Int parse_int(const std::string& s, std::string_view ctx) {
  static const std::regex re(R"([+-]?\d+)");
  if (!std::regex_match(s, re)) fail(ErrorKind::ParseError, "expected an integer in '" + std::string(ctx) + "'");
  return Int(s[0] == '+' ? s.substr(1) : s);
}

std::string json_context(const json& j, const std::string& where) {
  std::string dump = j.dump();
  if (dump.size() > 60) dump = dump.substr(0, 57) + "...";
  return where + " = " + dump;
}

Scalar scalar_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(Int(j.get<long>()));
  if (j.is_string()) {
    try {
      return parse_scalar(j.get<std::string>());
    } catch (const Error& e) {
      fail(ErrorKind::ParseError, where + ": " + e.what());
    }
  }
  fail(ErrorKind::ParseError, json_context(j, where) + " is not an integer or scalar string");
}

IntVector int_vector_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) fail(ErrorKind::ParseError, json_context(j, where) + " is not an array");
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) fail(ErrorKind::ParseError, json_context(j[i], where + "[" + std::to_string(i) + "]") + " is not an integer");
    v.emplace_back(Int(j[i].get<long>()));
  }
  return v;
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail(ErrorKind::ParseError, "empty scalar");
  std::size_t root = s.find(kRoot);
  std::size_t root_len = kRoot.size();
  if (root == std::string::npos) {
    root = s.find("sqrt");
    root_len = 4;
  }
  if (root == std::string::npos) return Scalar(parse_rational(s, text));

  std::string head = s.substr(0, root), tail = s.substr(root + root_len);
  if (tail.size() >= 2 && tail.front() == '(' && tail.back() == ')') tail = tail.substr(1, tail.size() - 2);
  Int D = parse_int(tail, text);
  if (D <= 1 || !D.fits_slong_p() || !is_squarefree(D.get_si()))
    fail(ErrorKind::ParseError, "radicand in '" + std::string(text) + "' must be a square-free integer > 1");
  if (!head.empty() && head.back() == '*') head.pop_back();
  // the coefficient is the last signed term of head
  std::size_t k = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;)
    if (head[i] == '+' || head[i] == '-') {
      k = i;
      break;
    }
  Rat rat = 0, quad;
  if (k == std::string::npos) {
    quad = parse_coefficient(head, text);
  } else {
    rat = parse_rational(head.substr(0, k), text);
    quad = parse_coefficient(head.substr(k), text);
  }
  return Scalar(rat, quad, D.get_si());
}

Point parse_point(std::string_view s) {
  Point x;
  for (const auto& part : split(s, ',')) x.push_back(parse_scalar(part));
  return x;
}

IntVector parse_int_vector(std::string_view s) {
  IntVector v;
  for (const auto& part : split(s, ',')) v.push_back(parse_int(part, s));
  return v;
}

Window parse_window(std::string_view s) {
  Window w;
  for (const auto& part : split(s, ',')) {
    std::size_t k = part.find("..");
    if (k == std::string::npos) fail(ErrorKind::ParseError, "window component '" + part + "' is not lo..hi");
    Scalar lo = parse_scalar(part.substr(0, k)), hi = parse_scalar(part.substr(k + 2));
    if (hi < lo) fail(ErrorKind::ParseError, "window component '" + part + "' has hi < lo");
    w.lo.push_back(lo);
    w.hi.push_back(hi);
  }
  return w;
}

Polytope polytope_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::ParseError, "polytope must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned()) fail(ErrorKind::ParseError, "missing or invalid 'dim'");
  if (!j.contains("facets") || !j["facets"].is_array()) fail(ErrorKind::ParseError, "missing or invalid 'facets'");
  std::size_t dim = j["dim"].get<std::size_t>();
  std::int64_t D = 1;
  if (j.contains("field")) {
    const json& f = j["field"];
    if (!f.is_object() || !f.contains("D") || !f["D"].is_number_integer()) fail(ErrorKind::ParseError, json_context(f, "field") + " must be {\"D\": integer}");
    D = f["D"].get<std::int64_t>();
    if (D < 1 || (D != 1 && !is_squarefree(D))) fail(ErrorKind::ValidationError, "field.D = " + std::to_string(D) + " is not a square-free positive integer");
  }
  std::vector<Facet> facets;
  for (std::size_t i = 0; i < j["facets"].size(); ++i) {
    const json& f = j["facets"][i];
    std::string where = "facets[" + std::to_string(i) + "]";
    if (!f.is_object() || !f.contains("normal") || !f.contains("offset")) fail(ErrorKind::ParseError, where + " needs 'normal' and 'offset'");
    IntVector n = int_vector_from_json(f["normal"], where + ".normal");
    if (n.size() != dim) fail(ErrorKind::ValidationError, where + ".normal has length " + std::to_string(n.size()) + ", expected " + std::to_string(dim));
    if (is_zero(n)) fail(ErrorKind::ValidationError, where + ".normal is zero");
    if (content(n) != 1) fail(ErrorKind::ValidationError, "NonPrimitiveNormal: " + where + ".normal " + to_string(n));
    Scalar off = scalar_from_json(f["offset"], where + ".offset");
    if (off.disc() != 1 && off.disc() != D) fail(ErrorKind::ValidationError, where + ".offset " + off.str() + " is outside Q(√" + std::to_string(D) + ")");
    facets.push_back({n, off});
  }
  try {
    return Polytope(dim, std::move(facets), D);
  } catch (const Error& e) {
    fail(ErrorKind::ValidationError, e.what());
  }
}

Polytope parse_polytope(const std::string& source) {
  if (source.rfind("preset:", 0) == 0) return spaces::preset(source.substr(7));
  std::ifstream in(source);
  if (!in) fail(ErrorKind::ParseError, "cannot read '" + source + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    fail(ErrorKind::ParseError, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
  try {
    return polytope_from_json(j);
  } catch (const Error& e) {
    fail(e.kind(), source + ": " + std::string(e.what()));
  }
}

AffineSlice slice_from_json(const json& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("dirs")) fail(ErrorKind::ParseError, "slice needs 'base' and 'dirs'");
  if (!j["base"].is_array() || !j["dirs"].is_array()) fail(ErrorKind::ParseError, "slice 'base' and 'dirs' must be arrays");
  Point base;
  for (std::size_t i = 0; i < j["base"].size(); ++i) base.push_back(scalar_from_json(j["base"][i], "base[" + std::to_string(i) + "]"));
  std::vector<IntVector> dirs;
  for (std::size_t i = 0; i < j["dirs"].size(); ++i) dirs.push_back(int_vector_from_json(j["dirs"][i], "dirs[" + std::to_string(i) + "]"));
  return AffineSlice::make(base, dirs);
}

json to_json(const Scalar& s) { return s.str(); }

json to_json(const Point& x) {
  json a = json::array();
  for (const auto& c : x) a.push_back(c.str());
  return a;
}

json to_json(const IntVector& v) {
  json a = json::array();
  for (const auto& c : v) {
    if (c.fits_slong_p()) a.push_back(c.get_si());
    else a.push_back(c.get_str());
  }
  return a;
}

json to_json(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

json to_json(const Polytope& P) {
  json facets = json::array();
  for (const auto& f : P.facets()) facets.push_back({{"normal", to_json(f.normal)}, {"offset", f.offset.str()}});
  json j = {{"dim", P.dim()}, {"facets", facets}};
  if (P.field() != 1) j["field"] = {{"D", P.field()}};
  return j;
}

json to_json(const Invariants& inv) {
  return {{"d", inv.d.str()},
          {"count", inv.count},
          {"gamma", to_json(Point(inv.gamma))},
          {"reduced", to_json(Point(inv.reduced))},
          {"reduction_type", inv.reduction_type}};
}

json to_json(const Probe& s) {
  return {{"direction", to_json(s.direction)},
          {"entry", s.entry},
          {"exit", s.exit},
          {"entry_point", to_json(s.entry_point)},
          {"exit_point", to_json(s.exit_point())},
          {"length", s.length.str()}};
}

json to_json(const ProbeMove& m) {
  return {{"probe", to_json(m.probe)}, {"from", to_json(m.from)}, {"to", to_json(m.to)}, {"transport", to_json(m.transport)}};
}

json to_json(const MatrixGroup& g) {
  json gens = json::array(), els = json::array();
  for (const auto& x : g.generators) gens.push_back(to_json(x));
  for (const auto& x : g.elements) els.push_back(to_json(x));
  return {{"generators", gens}, {"elements", els}, {"order", g.order()}, {"finite", g.finite()}, {"truncated", g.truncated}, {"cap", g.cap}};
}

json to_json(const AmbientResult& r) {
  json outs = json::array();
  for (const auto& o : r.outcomes) {
    json perm = json::array();
    for (auto [a, b] : o.perm) perm.push_back({a, b});
    json jo = {{"kind", to_string(o.kind)}, {"perm", perm}};
    if (!o.certificate.empty()) {
      json c = json::array();
      for (const auto& q : o.certificate) c.push_back(q.get_str());
      jo["certificate"] = c;
    }
    if (!o.det_polynomial.empty()) {
      json c = json::array();
      for (const auto& q : o.det_polynomial) c.push_back(q.get_str());
      jo["det_polynomial"] = c;
    }
    if (o.kind == BijectionOutcome::Kind::Solved) jo["solutions"] = o.solutions;
    outs.push_back(jo);
  }
  json sols = json::array();
  for (const auto& s : r.solutions) sols.push_back({{"A", to_json(s.A)}, {"induced", to_json(s.induced)}});
  return {{"status", to_string(r.status)}, {"outcomes", outs}, {"solutions", sols}};
}

json to_json(const Verdict& v) {
  json path = json::array();
  for (const auto& m : v.path) path.push_back(to_json(m));
  json j = {{"verdict", to_string(v.kind)},
            {"from", to_json(v.from)},
            {"to", to_json(v.to)},
            {"invariants_apply", v.invariants_apply}};
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.kind == Verdict::Kind::Equivalent) j["path"] = path;
  if (v.ambient) j["ambient"] = to_json(*v.ambient);
  return j;
}

json to_json(const Admissibility& a) {
  json faces = json::array();
  for (const auto& f : a.faces) {
    json lat = json::array();
    for (const auto& v : f.face_lattice) lat.push_back(to_json(v));
    faces.push_back({{"active", f.active}, {"point", to_json(f.point)}, {"face_lattice", lat}, {"divisors", to_json(IntVector(f.divisors))}, {"pass", f.pass}});
  }
  return {{"admissible", a.ok}, {"criterion", Admissibility::criterion}, {"faces", faces}};
}

json to_json(const ReductionResult& r) {
  json dirs = json::array();
  for (const auto& d : r.slice.dirs) dirs.push_back(to_json(d));
  return {{"reduced", to_json(r.reduced)},
          {"facet_origin", r.facet_origin},
          {"lift", {{"base", to_json(r.slice.base)}, {"dirs", dirs}}},
          {"repaired", r.slice.repaired},
          {"certificate", to_json(r.certificate)}};
}

json to_json(const chekanov::Move& m) {
  if (auto* s = std::get_if<chekanov::Swap>(&m)) return {{"move", "Swap"}, {"indices", {s->i, s->j}}};
  const auto& e = std::get<chekanov::Elswap>(m);
  return {{"move", "Elswap"}, {"indices", {e.i, e.j, e.k}}};
}

json to_json(const chekanov::ProbeWord& w) {
  json a = json::array();
  for (const auto& m : w) a.push_back(to_json(m));
  return a;
}

}  // namespace probekit::io
