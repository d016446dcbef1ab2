#include "probekit/linsys.hpp"

#include <map>
#include <string>

#include "probekit/errors.hpp"

namespace probekit {

namespace {

bool holds(const Scalar& v, Rel rel) {
  switch (rel) {
    case Rel::Ge: return v.sign() >= 0;
    case Rel::Gt: return v.sign() > 0;
    case Rel::Eq: return v.is_zero();
  }
  return false;
}

LinearConstraint normalized(LinearConstraint c) {
  for (const auto& x : c.a) {
    if (x.is_zero()) continue;
    Scalar s = x.abs();
    for (auto& y : c.a) y /= s;
    c.b /= s;
    if (c.rel == Rel::Eq && x.sign() < 0) {
      for (auto& y : c.a) y = -y;
      c.b = -c.b;
    }
    break;
  }
  return c;
}

std::string key(const LinearConstraint& c) {
  std::string k = std::to_string(static_cast<int>(c.rel)) + "|" + c.b.str();
  for (const auto& x : c.a) k += "|" + x.str();
  return k;
}

std::optional<std::vector<Scalar>> eliminate(std::vector<LinearConstraint> cons, std::size_t nvars) {
  // drop constant rows after checking them
  std::vector<LinearConstraint> live;
  std::map<std::string, bool> seen;
  for (auto& c : cons) {
    bool constant = true;
    for (std::size_t j = 0; j < nvars; ++j)
      if (!c.a[j].is_zero()) constant = false;
    if (constant) {
      if (!holds(c.b, c.rel)) return std::nullopt;
      continue;
    }
    auto nc = normalized(c);
    if (seen.emplace(key(nc), true).second) live.push_back(std::move(nc));
  }
  if (nvars == 0) return std::vector<Scalar>{};
  std::size_t j = nvars - 1;

  const LinearConstraint* eq = nullptr;
  for (const auto& c : live)
    if (c.rel == Rel::Eq && !c.a[j].is_zero()) {
      eq = &c;
      break;
    }
  if (eq) {
    LinearConstraint e = *eq;
    std::vector<LinearConstraint> next;
    for (const auto& c : live) {
      if (&c == eq) continue;
      LinearConstraint d = c;
      if (!c.a[j].is_zero()) {
        Scalar f = c.a[j] / e.a[j];
        for (std::size_t l = 0; l < nvars; ++l) d.a[l] -= f * e.a[l];
        d.b -= f * e.b;
      }
      d.a.resize(nvars - 1);
      next.push_back(std::move(d));
    }
    auto sub = eliminate(std::move(next), nvars - 1);
    if (!sub) return std::nullopt;
    Scalar rest = e.b;
    for (std::size_t l = 0; l + 1 < nvars; ++l) rest += e.a[l] * (*sub)[l];
    sub->push_back(-rest / e.a[j]);
    return sub;
  }

  std::vector<const LinearConstraint*> pos, neg;
  std::vector<LinearConstraint> next;
  for (const auto& c : live) {
    int s = c.a[j].sign();
    if (s > 0) pos.push_back(&c);
    else if (s < 0) neg.push_back(&c);
    else {
      LinearConstraint d = c;
      d.a.resize(nvars - 1);
      next.push_back(std::move(d));
    }
  }
  for (auto* p : pos)
    for (auto* q : neg) {
      Scalar fp = p->a[j].inverse(), fq = (-q->a[j]).inverse();
      LinearConstraint d;
      d.a.resize(nvars - 1);
      for (std::size_t l = 0; l + 1 < nvars; ++l) d.a[l] = p->a[l] * fp + q->a[l] * fq;
      d.b = p->b * fp + q->b * fq;
      d.rel = (p->rel == Rel::Gt || q->rel == Rel::Gt) ? Rel::Gt : Rel::Ge;
      next.push_back(std::move(d));
    }
  auto sub = eliminate(std::move(next), nvars - 1);
  if (!sub) return std::nullopt;

  auto rest_of = [&](const LinearConstraint& c) {
    Scalar r = c.b;
    for (std::size_t l = 0; l + 1 < nvars; ++l) r += c.a[l] * (*sub)[l];
    return r;
  };
  std::optional<Scalar> lo, hi;
  bool lo_strict = false, hi_strict = false;
  for (auto* p : pos) {
    Scalar v = -rest_of(*p) / p->a[j];
    bool strict = p->rel == Rel::Gt;
    if (!lo || v > *lo || (v == *lo && strict)) {
      if (!lo || v != *lo) lo_strict = strict;
      else lo_strict = lo_strict || strict;
      lo = v;
    }
  }
  for (auto* q : neg) {
    Scalar v = rest_of(*q) / (-q->a[j]);
    bool strict = q->rel == Rel::Gt;
    if (!hi || v < *hi || (v == *hi && strict)) {
      if (!hi || v != *hi) hi_strict = strict;
      else hi_strict = hi_strict || strict;
      hi = v;
    }
  }
  Scalar x;
  if (lo && hi) {
    x = (*lo == *hi) ? *lo : (*lo + *hi) / Scalar(2);
  } else if (lo) {
    x = lo_strict ? *lo + Scalar(1) : *lo;
  } else if (hi) {
    x = hi_strict ? *hi - Scalar(1) : *hi;
  }
  sub->push_back(x);
  return sub;
}

}  // namespace

std::optional<std::vector<Scalar>> find_point(const std::vector<LinearConstraint>& cons, std::size_t n) {
  for (const auto& c : cons)
    if (c.a.size() != n) fail(ErrorKind::DimensionMismatch, "constraint length");
  auto x = eliminate(cons, n);
  if (!x) return std::nullopt;
  for (const auto& c : cons) {
    Scalar v = c.b;
    for (std::size_t l = 0; l < n; ++l) v += c.a[l] * (*x)[l];
    if (!holds(v, c.rel)) fail(ErrorKind::InfeasibleEmpty, "internal: eliminated system produced a bad witness");
  }
  return x;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Scalar>>& M, std::size_t ncols) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < M.size(); ++c) {
    std::size_t p = r;
    while (p < M.size() && M[p][c].is_zero()) ++p;
    if (p == M.size()) continue;
    std::swap(M[p], M[r]);
    Scalar inv = M[r][c].inverse();
    for (auto& x : M[r]) x *= inv;
    for (std::size_t i = 0; i < M.size(); ++i) {
      if (i == r || M[i][c].is_zero()) continue;
      Scalar f = M[i][c];
      for (std::size_t k = 0; k < M[i].size(); ++k) M[i][k] -= f * M[r][k];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

std::optional<AffineSolution> solve_linear(const std::vector<std::vector<Scalar>>& A, const std::vector<Scalar>& b, std::size_t n) {
  if (A.size() != b.size()) fail(ErrorKind::DimensionMismatch, "system shape");
  std::vector<std::vector<Scalar>> M = A;
  for (std::size_t i = 0; i < M.size(); ++i) {
    if (M[i].size() != n) fail(ErrorKind::DimensionMismatch, "row length");
    M[i].push_back(b[i]);
  }
  auto piv = rref(M, n);
  for (std::size_t i = piv.size(); i < M.size(); ++i)
    if (!M[i][n].is_zero()) return std::nullopt;
  AffineSolution s;
  s.particular.assign(n, Scalar(0));
  std::vector<bool> is_piv(n, false);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    s.particular[piv[r]] = M[r][n];
    is_piv[piv[r]] = true;
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    std::vector<Scalar> v(n, Scalar(0));
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -M[r][f];
    s.nullspace.push_back(std::move(v));
  }
  return s;
}

std::size_t rank_of(const std::vector<std::vector<Scalar>>& rows, std::size_t n) {
  auto M = rows;
  return rref(M, n).size();
}

}  // namespace probekit
