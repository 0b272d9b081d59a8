#pragma once

#include <map>

#include "newtoric/geometry.hpp"

namespace newtoric {

/// Decision procedures on the semigroup itself. Everything is a bounded
/// exact search: the positive grading makes the set of expansions of a
/// given element finite, and the cone facets prune partial sums that
/// leave C_H.
class SemigroupSearch {
 public:
  explicit SemigroupSearch(const SemigroupPresentation& p)
      : p_(p), cone_facets_(codim1_cone_faces(p)) {}

  const SemigroupPresentation& presentation() const { return p_; }
  const std::vector<ConeFacet>& cone_facets() const { return cone_facets_; }

  bool in_cone(const IntVec& frame_vec) const {
    for (const auto& cf : cone_facets_)
      if (cf.evaluate(frame_vec) < 0) return false;
    return true;
  }

  /// h in the semigroup generated by the columns, by depth-first search
  /// over generator multiplicities.
  bool contains(const IntVec& frame_vec) const {
    auto hit = cache_.find(frame_vec);
    if (hit != cache_.end()) return hit->second;
    bool ok = search(frame_vec, 0);
    cache_[frame_vec] = ok;
    return ok;
  }

  bool contains_ambient(const IntVec& ambient) const {
    auto f = p_.to_frame(ambient);
    return f && contains(*f);
  }

  /// All semigroup elements of level at most the bound, sorted by
  /// (level, coordinates).
  std::vector<IntVec> elements_up_to(const Rat& bound) const {
    std::set<IntVec> seen;
    std::vector<IntVec> work{IntVec(p_.rank(), Int(0))};
    seen.insert(work[0]);
    while (!work.empty()) {
      IntVec x = work.back();
      work.pop_back();
      for (std::size_t j = 0; j < p_.size(); ++j) {
        IntVec y = add(x, p_.frame_generator(j));
        if (p_.level(y) > bound) continue;
        if (seen.insert(y).second) work.push_back(y);
      }
    }
    std::vector<IntVec> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [&](const IntVec& a, const IntVec& b) {
      Rat la = p_.level(a), lb = p_.level(b);
      if (la != lb) return la < lb;
      return a < b;
    });
    return out;
  }

 private:
  bool search(const IntVec& rest, std::size_t idx) const {
    if (is_zero(rest)) return true;
    if (idx == p_.size()) return false;
    if (!in_cone(rest)) return false;
    Rat lvl = p_.level(rest);
    if (lvl < 0) return false;
    IntVec a = p_.frame_generator(idx);
    Rat la = p_.level(a);
    Rat ratio = lvl / la;
    Int maxmult = numerator(ratio) / denominator(ratio);
    for (Int m = maxmult; m >= 0; --m) {
      IntVec next = rest;
      for (std::size_t i = 0; i < next.size(); ++i) next[i] -= m * a[i];
      if (search(next, idx + 1)) return true;
    }
    return false;
  }

  SemigroupPresentation p_;
  std::vector<ConeFacet> cone_facets_;
  mutable std::map<IntVec, bool> cache_;
};

struct HbarVerdict {
  enum class Status { InH, Member, NotMemberWithinBound };
  Status status;
  Rat bound;
  /// face index (into the nonempty cone facets) -> witness, ambient coords
  std::vector<std::pair<std::size_t, IntVec>> witnesses;
};

namespace detail {

/// Cone facets that carry generators; for rank one the vertex face is
/// dropped and the search degenerates to a single unconstrained witness.
inline std::vector<ConeFacet> witness_faces(const SemigroupSearch& s) {
  std::vector<ConeFacet> out;
  for (const auto& cf : s.cone_facets())
    if (!cf.members.empty()) out.push_back(cf);
  return out;
}

}  // namespace detail

/// Bounded membership test for the enlarged semigroup of elements that
/// admit, for every codimension-one face cone, a nonzero face element b
/// with h + b back in H. A negative answer is always qualified by the
/// search bound.
inline HbarVerdict hbar_member(const SemigroupSearch& s, const IntVec& ambient_h,
                               const Rat& bound) {
  const auto& p = s.presentation();
  auto frame = p.to_frame(ambient_h);
  if (!frame) throw invalid_input_error("element outside the semigroup lattice");
  if (s.contains(*frame)) return {HbarVerdict::Status::InH, bound, {}};

  auto faces = detail::witness_faces(s);
  auto candidates = s.elements_up_to(bound);
  std::vector<std::pair<std::size_t, IntVec>> witnesses;
  auto try_face = [&](std::size_t face_idx, auto&& on_face) -> bool {
    for (const IntVec& b : candidates) {
      if (is_zero(b) || !on_face(b)) continue;
      if (s.contains(add(*frame, b))) {
        // verify the witness independently of the search path
        if (!s.in_cone(b) || !s.contains(b) || !s.contains(add(*frame, b)))
          throw invariant_error("witness verification failed");
        witnesses.emplace_back(face_idx, p.from_frame(b));
        return true;
      }
    }
    return false;
  };

  if (faces.empty()) {
    if (!try_face(0, [](const IntVec&) { return true; }))
      return {HbarVerdict::Status::NotMemberWithinBound, bound, {}};
    return {HbarVerdict::Status::Member, bound, std::move(witnesses)};
  }
  for (std::size_t t = 0; t < faces.size(); ++t) {
    if (!try_face(t, [&](const IntVec& b) { return faces[t].evaluate(b) == 0; }))
      return {HbarVerdict::Status::NotMemberWithinBound, bound, {}};
  }
  return {HbarVerdict::Status::Member, bound, std::move(witnesses)};
}

inline HbarVerdict hbar_member(const SemigroupPresentation& p, const IntVec& ambient_h,
                               const Rat& bound) {
  SemigroupSearch s(p);
  return hbar_member(s, ambient_h, bound);
}

/// Lattice points of C_H up to the degree bound that are not in H but
/// pass the bounded membership test above: a bounded under-approximation
/// of the difference between the two semigroups, in ambient coordinates.
inline std::vector<IntVec> hbar_minus_h(const SemigroupPresentation& p,
                                        const Rat& degree_bound,
                                        const Rat& witness_bound) {
  SemigroupSearch s(p);
  InequalitySystem sys(p.rank());
  for (const auto& cf : s.cone_facets()) {
    RatVec coeffs(p.rank());
    for (std::size_t i = 0; i < p.rank(); ++i) coeffs[i] = Rat(cf.functional[i]);
    sys.add(std::move(coeffs), Rat(0));
  }
  RatVec lvl(p.rank());
  for (std::size_t i = 0; i < p.rank(); ++i) lvl[i] = Rat(p.positive_grading()[i]);
  sys.add_upper(lvl, degree_bound);

  std::vector<IntVec> out;
  for (const IntVec& x : enumerate_lattice_points(sys)) {
    if (s.contains(x)) continue;
    auto verdict = hbar_member(s, p.from_frame(x), witness_bound);
    if (verdict.status == HbarVerdict::Status::Member)
      out.push_back(p.from_frame(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct CmReport {
  bool passes_within_bounds;
  std::vector<IntVec> counterexamples;  // ambient coordinates
  Rat degree_bound, witness_bound;
};

/// The necessary criterion: an element of the bounded difference
/// certifies that the semigroup ring is not Cohen-Macaulay. An empty
/// result only means no obstruction was found within the bounds.
inline CmReport cm_necessary_check(const SemigroupPresentation& p,
                                   const Rat& degree_bound, const Rat& witness_bound) {
  if (p.rank() < 2)
    throw invalid_input_error("criterion needs rank at least two");
  auto diff = hbar_minus_h(p, degree_bound, witness_bound);
  return CmReport{diff.empty(), diff, degree_bound, witness_bound};
}

struct BoundedGenerators {
  SemigroupPresentation presentation;
  Rat level_bound;  // enumeration was exhaustive up to this level
};

namespace detail {

inline BoundedGenerators minimal_generators(const SemigroupSearch& s,
                                            const std::vector<IntVec>& face_elements,
                                            const Rat& bound) {
  const auto& p = s.presentation();
  std::set<IntVec> in_face(face_elements.begin(), face_elements.end());
  std::vector<IntVec> minimal;
  for (const IntVec& e : face_elements) {
    if (is_zero(e)) continue;
    bool decomposable = false;
    for (const IntVec& f : face_elements) {
      if (is_zero(f) || f == e) continue;
      if (p.level(f) >= p.level(e)) continue;
      IntVec g = sub(e, f);
      if (!is_zero(g) && in_face.count(g)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) minimal.push_back(e);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const IntVec& a, const IntVec& b) {
    Rat la = p.level(a), lb = p.level(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  std::vector<IntVec> ambient;
  for (const IntVec& m : minimal) ambient.push_back(p.from_frame(m));
  return BoundedGenerators{SemigroupPresentation(IntMatrix::from_columns(ambient)),
                           bound};
}

}  // namespace detail

/// Generators of the face semigroup H cap C_tau for a codimension-one
/// cone face: the minimal elements of the bounded enumeration. The
/// result is flagged with the level bound it is exhaustive up to.
inline BoundedGenerators face_semigroup_generators(const SemigroupSearch& s,
                                                   const ConeFacet& face,
                                                   const Rat& bound) {
  std::vector<IntVec> on_face;
  for (const IntVec& x : s.elements_up_to(bound))
    if (face.evaluate(x) == 0) on_face.push_back(x);
  return detail::minimal_generators(s, on_face, bound);
}

/// Same for the cone over a facet of the 1-umbrella, where membership
/// in C_sigma means the facet functional attains the Newton degree.
inline BoundedGenerators face_semigroup_generators(const SemigroupSearch& s,
                                                   const NewtonDegrees& deg,
                                                   std::size_t facet_index,
                                                   const Rat& bound) {
  const Facet& f = deg.one_umbrella().facets().at(facet_index);
  std::vector<IntVec> on_face;
  for (const IntVec& x : s.elements_up_to(bound))
    if (f.evaluate(x) == deg.degree(x)) on_face.push_back(x);
  return detail::minimal_generators(s, on_face, bound);
}

inline Rat default_face_bound(const SemigroupPresentation& p) {
  return 3 * p.max_generator_level();
}

}  // namespace newtoric
