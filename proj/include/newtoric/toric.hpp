#pragma once

#include "newtoric/geometry.hpp"
#include "newtoric/groebner.hpp"

namespace newtoric {

inline Polynomial binomial_from_kernel_vector(const IntVec& u) {
  Monomial plus = Monomial::one(u.size()), minus = Monomial::one(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > 0) plus.e[i] = to_int64(u[i]);
    if (u[i] < 0) minus.e[i] = to_int64(-u[i]);
  }
  return Polynomial::binomial(plus, minus);
}

namespace detail {

inline Polynomial strip_variable(const Polynomial& g, std::size_t var) {
  Exp low = 0;
  bool first = true;
  for (const Term& t : g.terms()) {
    low = first ? t.mono.e[var] : std::min(low, t.mono.e[var]);
    first = false;
  }
  if (low == 0) return g;
  Polynomial out(g.nvars());
  for (const Term& t : g.terms()) {
    Monomial m = t.mono;
    m.e[var] -= low;
    out.add_term(std::move(m), t.coeff);
  }
  return out;
}

}  // namespace detail

/// Reduced basis of the saturated lattice ideal of ker A. Starts from a
/// lattice basis, then saturates one variable at a time: a basis under
/// the grading-refined revlex order with that variable cheapest, divided
/// by its content in the variable. The grading keeps the homogeneity the
/// revlex trick needs even for generators with negative entries.
inline GroebnerBasis toric_ideal_basis(const SemigroupPresentation& p,
                                       const MonomialOrder& ord) {
  if (ord.nvars() != p.size())
    throw invalid_input_error("order arity does not match presentation");
  std::vector<Polynomial> current;
  for (const IntVec& u : kernel_lattice(p.generators()))
    current.push_back(binomial_from_kernel_vector(u));
  if (current.empty()) return GroebnerBasis{{}, ord, true};

  RatVec grading_weights;
  for (std::size_t j = 0; j < p.size(); ++j)
    grading_weights.push_back(p.generator_level(j));
  for (std::size_t v = 0; v < p.size(); ++v) {
    MonomialOrder sat = MonomialOrder::saturation(grading_weights, v);
    GroebnerBasis gb = buchberger(current, sat);
    current.clear();
    for (const Polynomial& g : gb.elements)
      current.push_back(detail::strip_variable(g, v));
  }
  return buchberger(current, ord);
}

/// A toric ideal together with the presentation it came from.
struct ToricIdeal {
  SemigroupPresentation presentation;
  GroebnerBasis basis;
};

inline ToricIdeal toric_ideal(const SemigroupPresentation& p, const MonomialOrder& ord) {
  return ToricIdeal{p, toric_ideal_basis(p, ord)};
}

/// Generators of the face ideal of an umbrella face: the toric ideal of
/// the member sub-presentation, expressed in the full variable set,
/// plus the variables of all non-members.
inline std::vector<Polynomial> face_ideal_generators(
    const SemigroupPresentation& p, const Umbrella& u,
    const std::vector<std::size_t>& face_members) {
  bool valid = false;
  for (const auto& f : u.faces()) valid |= f.members == face_members;
  if (!valid) throw invalid_input_error("not a face of the umbrella");

  std::vector<Polynomial> out;
  SemigroupPresentation sub = p.restricted_to(face_members);
  GroebnerBasis sub_basis = toric_ideal_basis(sub, MonomialOrder::grevlex(sub.size()));
  for (const Polynomial& g : sub_basis.elements) {
    Polynomial lifted(p.size());
    for (const Term& t : g.terms()) {
      Monomial m = Monomial::one(p.size());
      for (std::size_t k = 0; k < face_members.size(); ++k)
        m.e[face_members[k]] = t.mono.e[k];
      lifted.add_term(std::move(m), t.coeff);
    }
    out.push_back(std::move(lifted));
  }
  for (std::size_t j = 0; j < p.size(); ++j)
    if (!std::binary_search(face_members.begin(), face_members.end(), j))
      out.push_back(Polynomial::monomial(Monomial::variable(p.size(), j)));
  return out;
}

/// Whether the monomial lies in the radical of the graded ideal: it
/// must land in every facet ideal, i.e. for each facet some variable of
/// the monomial indexes a generator whose lifted point misses the facet.
inline bool in_radical_of_initial(const Umbrella& u, const Monomial& m) {
  if (m.is_one()) return false;
  for (const auto& f : u.facets()) {
    bool vanishes = false;
    for (std::size_t i = 0; i < m.nvars() && !vanishes; ++i)
      if (m.e[i] > 0 &&
          !std::binary_search(f.members.begin(), f.members.end(), i))
        vanishes = true;
    if (!vanishes) return false;
  }
  return true;
}

}  // namespace newtoric
