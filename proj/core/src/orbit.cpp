#include "probekit/orbit.hpp"

#include <deque>
#include <set>
#include <tuple>

#include "probekit/errors.hpp"

namespace probekit {

bool Window::contains(const Point& x) const {
  if (x.size() != lo.size() || x.size() != hi.size()) fail(ErrorKind::DimensionMismatch, "window dimension");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < lo[i] || x[i] > hi[i]) return false;
  return true;
}

std::string point_key(const Point& x) { return to_string(x); }

std::optional<std::size_t> OrbitGraph::find(const Point& x) const {
  auto it = index.find(point_key(x));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::vector<Point> OrbitGraph::window_points() const {
  std::vector<Point> out;
  for (const auto& n : nodes)
    if (n.in_window) out.push_back(n.point);
  return out;
}

std::size_t OrbitGraph::window_size() const {
  std::size_t c = 0;
  for (const auto& n : nodes) c += n.in_window;
  return c;
}

std::vector<ProbeMove> OrbitGraph::path_to(std::size_t node) const {
  std::vector<ProbeMove> rev;
  while (auto e = nodes.at(node).parent_edge) {
    rev.push_back(edges[*e].move);
    node = edges[*e].from;
  }
  return {rev.rbegin(), rev.rend()};
}

OrbitGraph explore(const Polytope& P, const Point& x, const OrbitParams& params) {
  if (params.max_norm < 1 || params.max_points < 1 || params.max_depth < 1) fail(ErrorKind::ValidationError, "orbit caps must be positive");
  P.require_interior(x);
  OrbitGraph g;
  auto inside = [&](const Point& p) { return !params.window || params.window->contains(p); };
  g.nodes.push_back({x, inside(x), 0, std::nullopt});
  g.index.emplace(point_key(x), 0);
  std::size_t in_count = g.nodes[0].in_window ? 1 : 0;
  std::set<std::tuple<std::size_t, std::size_t, std::string>> seen_edges;
  std::deque<std::size_t> queue{0};

  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    bool at_limit = g.nodes[u].depth >= params.max_depth;
    bool expands_outside = g.nodes[u].in_window || u == g.root;
    for (auto& s : enumerate(P, g.nodes[u].point, params.max_norm)) {
      if (params.direction_filter && !params.direction_filter(s.direction)) continue;
      Point y = partner(s, g.nodes[u].point);
      std::string key = point_key(y);
      auto it = g.index.find(key);
      std::size_t w;
      if (it != g.index.end()) {
        w = it->second;
      } else {
        bool in = inside(y);
        if (!in && !expands_outside) continue;
        if (at_limit || (in && in_count >= params.max_points)) {
          g.truncated = true;
          continue;
        }
        w = g.nodes.size();
        g.nodes.push_back({y, in, g.nodes[u].depth + 1, std::nullopt});
        g.index.emplace(std::move(key), w);
        in_count += in;
        queue.push_back(w);
      }
      auto ek = std::make_tuple(std::min(u, w), std::max(u, w), to_string(s.direction));
      if (!seen_edges.insert(ek).second) continue;
      std::size_t e = g.edges.size();
      g.edges.push_back({u, w, probe_move(s, g.nodes[u].point)});
      if (w != g.root && !g.nodes[w].parent_edge && w != u) g.nodes[w].parent_edge = e;
    }
  }
  return g;
}

namespace {

std::vector<ProbeMove> reversed(const std::vector<ProbeMove>& path) {
  std::vector<ProbeMove> out;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    ProbeMove m = *it;
    std::swap(m.from, m.to);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

std::optional<std::vector<ProbeMove>> connect(const Polytope& P, const Point& x, const Point& y, const OrbitParams& params) {
  if (x.size() != y.size()) fail(ErrorKind::DimensionMismatch, "endpoints of different dimension");
  P.require_interior(y);
  OrbitGraph gx = explore(P, x, params);
  if (auto i = gx.find(y)) return gx.path_to(*i);
  OrbitGraph gy = explore(P, y, params);
  for (std::size_t j = 0; j < gy.nodes.size(); ++j) {
    if (auto i = gx.find(gy.nodes[j].point)) {
      auto path = gx.path_to(*i);
      auto back = reversed(gy.path_to(j));
      path.insert(path.end(), back.begin(), back.end());
      return path;
    }
  }
  return std::nullopt;
}

Point replay_path(const Polytope& P, const Point& x, const std::vector<ProbeMove>& path) {
  Point cur = x;
  for (const auto& m : path) {
    Probe s = shoot(P, cur, m.probe.direction);
    cur = partner(s, cur);
  }
  return cur;
}

}  // namespace probekit
