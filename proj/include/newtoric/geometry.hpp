#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "newtoric/presentation.hpp"

namespace newtoric {

/// Rational weight per generator (the L of an (A,L)-umbrella).
struct WeightVector {
  RatVec values;

  static WeightVector ones(std::size_t n) {
    return {RatVec(n, Rat(1))};
  }
  static WeightVector zeros(std::size_t n) {
    return {RatVec(n, Rat(0))};
  }
};

namespace detail {

struct RawFacet {
  IntVec normal;  // >= 0 on every generator, primitive
  std::vector<std::size_t> members;
};

/// Facets of the cone spanned by the given integer vectors, by brute
/// force over (D-1)-subsets. Each facet hyperplane is spanned by the
/// generators lying on it, so every facet is found this way.
inline std::vector<RawFacet> cone_facet_normals(const std::vector<IntVec>& gens) {
  if (gens.empty()) return {};
  const std::size_t dim = gens[0].size();
  const std::size_t n = gens.size();
  if (dim == 0) return {};
  std::set<IntVec> seen;
  std::vector<RawFacet> out;

  std::vector<std::size_t> idx(dim - 1);
  std::function<void(std::size_t, std::size_t)> comb = [&](std::size_t pos,
                                                           std::size_t start) {
    if (pos == dim - 1) {
      IntMatrix m(dim - 1, dim);
      for (std::size_t i = 0; i + 1 < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = gens[idx[i]][j];
      auto ker = kernel_lattice(m);
      if (ker.size() != 1) return;  // subset does not span a hyperplane
      IntVec normal = primitive(ker[0]);
      bool any_pos = false, any_neg = false;
      std::vector<std::size_t> members;
      for (std::size_t j = 0; j < n; ++j) {
        Int v = dot(normal, gens[j]);
        if (v > 0) any_pos = true;
        else if (v < 0) any_neg = true;
        else members.push_back(j);
      }
      if (any_pos && any_neg) return;
      if (any_neg)
        for (Int& x : normal) x = -x;
      if (seen.insert(normal).second) out.push_back({normal, std::move(members)});
      return;
    }
    for (std::size_t j = start; j < n; ++j) {
      idx[pos] = j;
      comb(pos + 1, j + 1);
    }
  };
  comb(0, 0);
  std::sort(out.begin(), out.end(),
            [](const RawFacet& a, const RawFacet& b) { return a.members < b.members; });
  return out;
}

/// Closure of the seed member sets under intersection with all facet
/// member sets; empty intersections are dropped.
inline std::set<std::vector<std::size_t>> face_closure(
    const std::vector<std::vector<std::size_t>>& all_facets,
    const std::vector<std::vector<std::size_t>>& seeds) {
  std::set<std::vector<std::size_t>> faces(seeds.begin(), seeds.end());
  faces.erase(std::vector<std::size_t>{});
  std::vector<std::vector<std::size_t>> work(faces.begin(), faces.end());
  while (!work.empty()) {
    auto f = work.back();
    work.pop_back();
    for (const auto& g : all_facets) {
      std::vector<std::size_t> meet;
      std::set_intersection(f.begin(), f.end(), g.begin(), g.end(),
                            std::back_inserter(meet));
      if (!meet.empty() && faces.insert(meet).second) work.push_back(meet);
    }
  }
  return faces;
}

inline std::size_t rank_of_vectors(const std::vector<IntVec>& vecs) {
  if (vecs.empty()) return 0;
  return rank(IntMatrix::from_rows(vecs));
}

}  // namespace detail

/// A facet of the (A,L)-umbrella: the generators whose lifted points
/// lie on it, and the supporting form with l(a_j) <= L_j, equality
/// exactly on the members.
struct Facet {
  std::vector<std::size_t> members;
  RatVec functional;

  Rat evaluate(const IntVec& frame_vec) const { return dot(functional, frame_vec); }
};

struct UmbrellaFace {
  std::vector<std::size_t> members;
  std::size_t dim = 0;
  bool interior = false;
};

/// A facet of the cone C_H itself, carried by a primitive integer
/// functional vanishing on the facet and positive on the rest of H.
struct ConeFacet {
  std::vector<std::size_t> members;
  IntVec functional;

  Int evaluate(const IntVec& frame_vec) const { return dot(functional, frame_vec); }
};

/// The (A,L)-umbrella: all faces of the (A,L)-polyhedron that avoid the
/// origin. Realized as the face complex of the cone over the lifted
/// generators (a_j, L_j) together with (0,1); a face avoids the origin
/// exactly when some facet cut not through (0,1) carves it out.
class Umbrella {
 public:
  Umbrella(const SemigroupPresentation& p, const WeightVector& weights) {
    if (weights.values.size() != p.size())
      throw invalid_input_error("weight vector arity mismatch");
    rank_ = p.rank();
    const std::size_t n = p.size();

    std::vector<IntVec> lifted;  // scaled integer representatives of (a_j, L_j)
    for (std::size_t j = 0; j < n; ++j) {
      RatVec v(rank_ + 1);
      IntVec a = p.frame_generator(j);
      for (std::size_t i = 0; i < rank_; ++i) v[i] = Rat(a[i]);
      v[rank_] = weights.values[j];
      lifted.push_back(primitive_integer(v));
    }
    std::vector<IntVec> cone_gens = lifted;
    IntVec origin(rank_ + 1, Int(0));
    origin[rank_] = 1;
    cone_gens.push_back(origin);  // index n

    auto raw = detail::cone_facet_normals(cone_gens);
    std::vector<std::vector<std::size_t>> all_member_sets, seed_sets;
    for (const auto& rf : raw) {
      bool through_origin =
          std::find(rf.members.begin(), rf.members.end(), n) != rf.members.end();
      std::vector<std::size_t> members;
      for (std::size_t j : rf.members)
        if (j < n) members.push_back(j);
      all_member_sets.push_back(members);
      if (through_origin) {
        origin_facets_.push_back(members);
        continue;
      }
      seed_sets.push_back(members);
      Facet f;
      f.members = members;
      const Int mu = rf.normal[rank_];
      if (mu <= 0) throw invariant_error("umbrella facet with nonpositive height");
      f.functional.resize(rank_);
      for (std::size_t i = 0; i < rank_; ++i)
        f.functional[i] = Rat(-rf.normal[i], mu);
      for (std::size_t j = 0; j < n; ++j) {
        Rat v = f.evaluate(p.frame_generator(j));
        bool member = std::find(members.begin(), members.end(), j) != members.end();
        if (member ? v != weights.values[j] : v >= weights.values[j])
          throw invariant_error("umbrella facet functional inconsistent");
      }
      facets_.push_back(std::move(f));
    }
    std::sort(facets_.begin(), facets_.end(),
              [](const Facet& a, const Facet& b) { return a.members < b.members; });

    for (const auto& members : detail::face_closure(all_member_sets, seed_sets)) {
      UmbrellaFace face;
      face.members = members;
      std::vector<IntVec> pts;
      for (std::size_t j : members) pts.push_back(lifted[j]);
      std::size_t r = detail::rank_of_vectors(pts);
      if (r == 0) throw invariant_error("umbrella face of rank zero");
      face.dim = r - 1;
      face.interior = true;
      for (const auto& of : origin_facets_)
        if (std::includes(of.begin(), of.end(), members.begin(), members.end()))
          face.interior = false;
      faces_.push_back(std::move(face));
    }
    std::sort(faces_.begin(), faces_.end(), [](const UmbrellaFace& a, const UmbrellaFace& b) {
      return std::make_pair(a.dim, a.members) < std::make_pair(b.dim, b.members);
    });
  }

  std::size_t rank() const { return rank_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<UmbrellaFace>& faces() const { return faces_; }

  std::vector<UmbrellaFace> faces_of_dim(std::size_t k) const {
    std::vector<UmbrellaFace> out;
    for (const auto& f : faces_)
      if (f.dim == k) out.push_back(f);
    return out;
  }

  std::vector<UmbrellaFace> interior_faces() const {
    std::vector<UmbrellaFace> out;
    for (const auto& f : faces_)
      if (f.interior) out.push_back(f);
    return out;
  }

  bool has_facet_with_members(const std::vector<std::size_t>& members) const {
    for (const auto& f : facets_)
      if (f.members == members) return true;
    return false;
  }

 private:
  std::size_t rank_ = 0;
  std::vector<Facet> facets_;
  std::vector<std::vector<std::size_t>> origin_facets_;
  std::vector<UmbrellaFace> faces_;
};

/// The codimension-one faces of C_H (the (r-2)-dimensional faces of the
/// 0-umbrella), each with its primitive supporting functional.
inline std::vector<ConeFacet> codim1_cone_faces(const SemigroupPresentation& p) {
  std::vector<IntVec> gens;
  for (std::size_t j = 0; j < p.size(); ++j) gens.push_back(p.frame_generator(j));
  std::vector<ConeFacet> out;
  for (const auto& rf : detail::cone_facet_normals(gens))
    out.push_back({rf.members, rf.normal});
  return out;
}

/// Newton degree machinery for one presentation: the 1-umbrella, the
/// cone facets, and the degree/facet-cone queries built on them.
class NewtonDegrees {
 public:
  explicit NewtonDegrees(const SemigroupPresentation& p)
      : p_(p), one_(p, WeightVector::ones(p.size())), cone_facets_(codim1_cone_faces(p)) {}

  const SemigroupPresentation& presentation() const { return p_; }
  const Umbrella& one_umbrella() const { return one_; }
  const std::vector<ConeFacet>& cone_facets() const { return cone_facets_; }

  bool in_cone(const IntVec& frame_vec) const {
    for (const auto& cf : cone_facets_)
      if (cf.evaluate(frame_vec) < 0) return false;
    return true;
  }

  /// max over facets of l_sigma(h); h must lie in C_H.
  Rat degree(const IntVec& frame_vec) const {
    if (!in_cone(frame_vec))
      throw invalid_input_error("newton degree of a vector outside the cone");
    if (is_zero(frame_vec)) return 0;
    Rat best;
    bool first = true;
    for (const auto& f : one_.facets()) {
      Rat v = f.evaluate(frame_vec);
      if (first || v > best) best = v, first = false;
    }
    if (first) throw invariant_error("umbrella without facets");
    return best;
  }

  /// Indices of the 1-facets sigma with h in C_sigma, i.e. the facets
  /// whose functional attains deg(h). Zero lies in every facet cone.
  std::vector<std::size_t> facet_cones_containing(const IntVec& frame_vec) const {
    Rat d = degree(frame_vec);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < one_.facets().size(); ++i)
      if (one_.facets()[i].evaluate(frame_vec) == d) out.push_back(i);
    if (out.empty()) throw invariant_error("element of C_H outside all facet cones");
    return out;
  }

  bool share_facet_cone(const IntVec& u, const IntVec& v) const {
    auto cu = facet_cones_containing(u), cv = facet_cones_containing(v);
    std::vector<std::size_t> meet;
    std::set_intersection(cu.begin(), cu.end(), cv.begin(), cv.end(),
                          std::back_inserter(meet));
    return !meet.empty();
  }

  Rat generator_degree(std::size_t j) const { return degree(p_.frame_generator(j)); }

  /// The weight vector L_a = deg_A(a) on the generators.
  WeightVector degree_weights() const {
    WeightVector w;
    for (std::size_t j = 0; j < p_.size(); ++j) w.values.push_back(generator_degree(j));
    return w;
  }

 private:
  SemigroupPresentation p_;
  Umbrella one_;
  std::vector<ConeFacet> cone_facets_;
};

namespace detail {

struct FaceLattice {
  // member sets keyed by dimension, for one polytope
  std::vector<std::vector<std::size_t>> members;
  std::vector<std::size_t> dims;
  std::size_t top = 0;
};

inline FaceLattice polytope_face_lattice(const std::vector<IntVec>& points) {
  const std::size_t dim = points[0].size();
  std::vector<IntVec> lifted;
  for (const auto& pt : points) {
    IntVec v = pt;
    v.push_back(1);
    lifted.push_back(v);
  }
  auto raw = cone_facet_normals(lifted);
  std::vector<std::vector<std::size_t>> facet_sets;
  for (const auto& rf : raw) facet_sets.push_back(rf.members);
  auto closure = face_closure(facet_sets, facet_sets);

  FaceLattice lat;
  auto affine_dim = [&](const std::vector<std::size_t>& members) {
    std::vector<IntVec> diffs;
    for (std::size_t k = 1; k < members.size(); ++k)
      diffs.push_back(sub(points[members[k]], points[members[0]]));
    return rank_of_vectors(diffs);
  };
  for (const auto& m : closure) {
    lat.members.push_back(m);
    lat.dims.push_back(affine_dim(m));
  }
  std::vector<std::size_t> all(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) all[i] = i;
  lat.top = lat.members.size();
  lat.members.push_back(all);
  lat.dims.push_back(dim);
  return lat;
}

/// Pulling triangulation of one face, recursing through the lattice.
inline std::vector<std::vector<std::size_t>> pull_face(const FaceLattice& lat,
                                                       std::size_t face) {
  const auto& members = lat.members[face];
  if (lat.dims[face] == 0) return {{members[0]}};
  const std::size_t apex = members[0];
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t g = 0; g < lat.members.size(); ++g) {
    if (lat.dims[g] + 1 != lat.dims[face]) continue;
    if (!std::includes(members.begin(), members.end(), lat.members[g].begin(),
                       lat.members[g].end()))
      continue;
    if (lat.members[g] == members) continue;
    if (std::binary_search(lat.members[g].begin(), lat.members[g].end(), apex))
      continue;
    for (auto simplex : pull_face(lat, g)) {
      simplex.push_back(apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

}  // namespace detail

/// Normalized lattice volume of the convex hull of full-dimensional
/// integer points: the sum of |det| over the simplices of a pulling
/// triangulation taken through the exact face lattice.
inline Int normalized_volume(std::vector<IntVec> points) {
  if (points.empty()) throw invalid_input_error("volume of empty point set");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t dim = points[0].size();
  std::vector<IntVec> diffs;
  for (std::size_t k = 1; k < points.size(); ++k)
    diffs.push_back(sub(points[k], points[0]));
  if (detail::rank_of_vectors(diffs) != dim)
    throw invalid_input_error("volume input does not span full rank");

  auto lat = detail::polytope_face_lattice(points);
  Int vol = 0;
  for (const auto& simplex : detail::pull_face(lat, lat.top)) {
    if (simplex.size() != dim + 1) throw invariant_error("triangulation arity");
    IntMatrix m(dim, dim);
    for (std::size_t i = 0; i + 1 < simplex.size(); ++i) {
      IntVec e = sub(points[simplex[i]], points[simplex.back()]);
      for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = e[j];
    }
    vol += abs(determinant(m));
  }
  return vol;
}

/// Volume of conv(A u {0}) in the ZH frame; the expected rank check
/// guards against accidentally degenerate inputs.
inline Int normalized_volume(const SemigroupPresentation& p) {
  std::vector<IntVec> pts;
  pts.push_back(IntVec(p.rank(), Int(0)));
  for (std::size_t j = 0; j < p.size(); ++j) pts.push_back(p.frame_generator(j));
  return normalized_volume(std::move(pts));
}

}  // namespace newtoric
