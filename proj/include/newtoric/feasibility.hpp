#pragma once

#include <functional>
#include <optional>

#include "newtoric/numbers.hpp"

namespace newtoric {

/// One linear inequality, coeffs . x >= rhs.
struct LinearConstraint {
  RatVec coeffs;
  Rat rhs;
};

/// A finite system of rational linear inequalities, solved exactly by
/// Fourier-Motzkin elimination. Sizes here are a handful of variables
/// and constraints, so the elimination blowup is irrelevant.
class InequalitySystem {
 public:
  explicit InequalitySystem(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  const std::vector<LinearConstraint>& constraints() const { return cons_; }

  void add(RatVec coeffs, Rat rhs) {
    if (coeffs.size() != dim_) throw invalid_input_error("constraint arity");
    cons_.push_back({std::move(coeffs), std::move(rhs)});
  }

  /// coeffs . x <= rhs
  void add_upper(const RatVec& coeffs, const Rat& rhs) {
    RatVec neg(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) neg[i] = -coeffs[i];
    add(std::move(neg), -rhs);
  }

  /// Substitutes x_0 = value and drops the first variable.
  InequalitySystem substitute_first(const Rat& value) const {
    InequalitySystem out(dim_ - 1);
    for (const auto& c : cons_) {
      RatVec rest(c.coeffs.begin() + 1, c.coeffs.end());
      out.add(std::move(rest), c.rhs - c.coeffs[0] * value);
    }
    return out;
  }

 private:
  std::size_t dim_;
  std::vector<LinearConstraint> cons_;
};

namespace detail {

/// Eliminates the variable at index k, returning a system on the
/// remaining variables (indices shift down past k).
inline InequalitySystem fm_eliminate(const InequalitySystem& sys, std::size_t k) {
  std::vector<const LinearConstraint*> pos, neg;
  InequalitySystem out(sys.dim() - 1);
  auto strip = [&](const RatVec& v) {
    RatVec w;
    w.reserve(v.size() - 1);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (i != k) w.push_back(v[i]);
    return w;
  };
  for (const auto& c : sys.constraints()) {
    if (c.coeffs[k] > 0)
      pos.push_back(&c);
    else if (c.coeffs[k] < 0)
      neg.push_back(&c);
    else
      out.add(strip(c.coeffs), c.rhs);
  }
  for (const auto* lo : pos)
    for (const auto* hi : neg) {
      const Rat a = lo->coeffs[k], b = -hi->coeffs[k];
      RatVec w(sys.dim() - 1);
      std::size_t t = 0;
      for (std::size_t i = 0; i < sys.dim(); ++i) {
        if (i == k) continue;
        w[t++] = b * lo->coeffs[i] + a * hi->coeffs[i];
      }
      out.add(std::move(w), b * lo->rhs + a * hi->rhs);
    }
  return out;
}

inline bool constants_hold(const InequalitySystem& sys) {
  for (const auto& c : sys.constraints())
    if (c.rhs > 0) return false;
  return true;
}

struct Bounds {
  std::optional<Rat> lo, hi;
  bool empty = false;
};

/// Bounds on the single variable of a one-dimensional system.
inline Bounds single_var_bounds(const InequalitySystem& sys) {
  Bounds b;
  for (const auto& c : sys.constraints()) {
    if (c.coeffs[0] > 0) {
      Rat v = c.rhs / c.coeffs[0];
      if (!b.lo || v > *b.lo) b.lo = v;
    } else if (c.coeffs[0] < 0) {
      Rat v = c.rhs / c.coeffs[0];
      if (!b.hi || v < *b.hi) b.hi = v;
    } else if (c.rhs > 0) {
      b.empty = true;
    }
  }
  if (b.lo && b.hi && *b.lo > *b.hi) b.empty = true;
  return b;
}

inline Rat pick_value(const Bounds& b) {
  if (b.lo && *b.lo > 0) return *b.lo;
  if (b.hi && *b.hi < 0) return *b.hi;
  return 0;  // zero is always inside otherwise
}

}  // namespace detail

/// Exact feasible point of the system, or nothing.
inline std::optional<RatVec> feasible_point(const InequalitySystem& sys) {
  std::vector<InequalitySystem> stages;  // stages[k] is a system on k variables
  stages.reserve(sys.dim() + 1);
  stages.push_back(sys);
  for (std::size_t k = sys.dim(); k > 0; --k)
    stages.push_back(detail::fm_eliminate(stages.back(), k - 1));
  if (!detail::constants_hold(stages.back())) return std::nullopt;

  RatVec x;
  for (std::size_t k = 1; k <= sys.dim(); ++k) {
    InequalitySystem cur = stages[sys.dim() - k];  // on variables 0..k-1
    for (std::size_t i = 0; i + 1 < k; ++i) cur = cur.substitute_first(x[i]);
    detail::Bounds b = detail::single_var_bounds(cur);
    if (b.empty) throw invariant_error("feasibility back-substitution failed");
    x.push_back(detail::pick_value(b));
  }
  return x;
}

/// Exact projection of the feasible region onto one coordinate.
inline detail::Bounds project_onto(const InequalitySystem& sys, std::size_t coord) {
  InequalitySystem cur = sys;
  // eliminate everything after coord, then everything before it
  for (std::size_t k = sys.dim(); k > coord + 1; --k)
    cur = detail::fm_eliminate(cur, k - 1);
  for (std::size_t k = coord; k > 0; --k) cur = detail::fm_eliminate(cur, k - 1);
  return detail::single_var_bounds(cur);
}

/// All integer points of the (bounded) feasible region, in
/// lexicographic order. Throws if some direction is unbounded.
inline std::vector<IntVec> enumerate_lattice_points(const InequalitySystem& sys) {
  std::vector<IntVec> out;
  IntVec partial;
  auto floor_rat = [](const Rat& q) {
    Int n = numerator(q), d = denominator(q);
    Int f = n / d;
    if (f * d > n) f -= 1;
    return f;
  };
  auto ceil_rat = [&](const Rat& q) { return -floor_rat(-q); };

  std::function<void(const InequalitySystem&)> rec = [&](const InequalitySystem& cur) {
    if (cur.dim() == 0) {
      if (detail::constants_hold(cur)) out.push_back(partial);
      return;
    }
    detail::Bounds b = project_onto(cur, 0);
    if (b.empty) return;
    if (!b.lo || !b.hi)
      throw invalid_input_error("lattice enumeration over unbounded region");
    for (Int v = ceil_rat(*b.lo); v <= floor_rat(*b.hi); ++v) {
      partial.push_back(v);
      rec(cur.substitute_first(Rat(v)));
      partial.pop_back();
    }
  };
  rec(sys);
  return out;
}

}  // namespace newtoric
