#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "probekit/probe.hpp"

namespace probekit {

// Inclusive per-coordinate box.
struct Window {
  std::vector<Scalar> lo, hi;
  bool contains(const Point& x) const;
};

struct OrbitParams {
  long max_norm = 3;
  std::size_t max_points = 1000;  // nodes inside the window
  std::size_t max_depth = 64;
  std::optional<Window> window;
  // Optional restriction of probe directions (used for word searches).
  std::function<bool(const IntVector&)> direction_filter;
};

struct OrbitNode {
  Point point;
  bool in_window = true;
  std::size_t depth = 0;
  std::optional<std::size_t> parent_edge;
};

struct OrbitEdge {
  std::size_t from = 0, to = 0;
  ProbeMove move;
};

// Probe-move closure of a point. Nodes outside the window form a single
// shell around it: they are kept and expanded, but their own outside
// neighbours are not.
struct OrbitGraph {
  std::vector<OrbitNode> nodes;
  std::vector<OrbitEdge> edges;
  std::size_t root = 0;
  bool truncated = false;

  std::optional<std::size_t> find(const Point& x) const;
  std::vector<Point> window_points() const;
  std::size_t window_size() const;
  std::vector<ProbeMove> path_to(std::size_t node) const;

  std::unordered_map<std::string, std::size_t> index;
};

std::string point_key(const Point& x);

OrbitGraph explore(const Polytope& P, const Point& x, const OrbitParams& params);

// Probe path from x to y found by searching from both ends.
std::optional<std::vector<ProbeMove>> connect(const Polytope& P, const Point& x, const Point& y, const OrbitParams& params);

// Replays moves from x by recomputing each probe partner; returns the endpoint.
Point replay_path(const Polytope& P, const Point& x, const std::vector<ProbeMove>& path);

}  // namespace probekit
