#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "probekit/orbit.hpp"

namespace probekit::spaces {

enum class Kind { Cn, Cp2, S2S2Monotone, CxS2, C2xTS1, TS1xS2 };

struct PresetId {
  Kind kind = Kind::Cp2;
  std::size_t n = 0;  // only for Cn

  // "cp2", "s2s2_monotone", "c_x_s2", "c2_x_ts1", "ts1_x_s2", "cn:N"
  static PresetId parse(const std::string& name);
  std::string name() const;
};

struct PresetInfo {
  std::string name;
  std::string polytope;
  std::string facets;  // facet order, fixed
};
std::vector<PresetInfo> preset_list();

// Facet orders:
//   cn(n)          x_i >= 0, i = 0..n-1
//   cp2            x1 >= -1, x2 >= -1, x1 + x2 <= 1
//   s2s2_monotone  x1 <= 1, x2 <= 1, x1 >= -1, x2 >= -1
//   c_x_s2         x1 >= -1, x2 >= -1, x2 <= 1
//   c2_x_ts1       x1 >= 0, x2 >= 0            (x3 free)
//   ts1_x_s2       x2 >= -1, x2 <= 1           (x1 free)
Polytope preset(const PresetId& id);
Polytope preset(const std::string& name);

// Closed-form equivalence class of x, clipped to the window. Infinite
// classes need a window.
std::vector<Point> oracle_orbit(const PresetId& id, const Point& x, const std::optional<Window>& window = std::nullopt);

struct OracleGroup {
  enum class Form {
    Finite,       // all elements listed
    Parametric,   // infinite, membership and bounded enumeration known
    OrderOnly,    // finite of known order, generators not written down
    Constraints,  // membership by the ambient constraints
  };
  Form form = Form::Finite;
  std::vector<IntMatrix> generators;
  std::vector<IntMatrix> elements;  // Finite
  std::size_t order = 0;            // Finite and OrderOnly
  std::function<bool(const IntMatrix&)> contains;
  std::function<std::vector<IntMatrix>(long)> sample;  // Parametric: elements with parameter |k| <= bound
  std::string description;

  bool infinite() const { return form == Form::Parametric; }
};
OracleGroup oracle_monodromy(const PresetId& id, const Point& x);

// Constraints on a map of H_1 from T(x) to T(y) for the two spaces with
// H_1(X) != 0, where the generic ambient solver does not apply.
// Matrices act on column vectors; column j is the image of e_j.
bool h1_constraints(const PresetId& id, const Point& x, const Point& y, const IntMatrix& A);
// All matrices with free entries in [-bound, bound] passing h1_constraints.
std::vector<IntMatrix> h1_search(const PresetId& id, const Point& x, const Point& y, long bound);

}  // namespace probekit::spaces
