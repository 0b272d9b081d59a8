#pragma once

#include <optional>

#include "newtoric/polynomial.hpp"

namespace newtoric {

struct GroebnerBasis {
  std::vector<Polynomial> elements;  // monic, sorted by leading monomial
  MonomialOrder order;
  bool reduced = false;

  std::size_t size() const { return elements.size(); }
};

/// Full division remainder: no term of the result is divisible by any
/// leading monomial of the basis, and f - result lies in the ideal.
inline Polynomial normal_form(const Polynomial& f,
                              const std::vector<Polynomial>& basis,
                              const MonomialOrder& ord) {
  Polynomial rem(f.nvars());
  Polynomial h = f;
  while (!h.is_zero()) {
    const Term lt = h.leading_term(ord);
    const Polynomial* reducer = nullptr;
    for (const Polynomial& g : basis)
      if (!g.is_zero() && g.leading_monomial(ord).divides(lt.mono)) {
        reducer = &g;
        break;
      }
    if (reducer) {
      const Term& gl = reducer->leading_term(ord);
      h -= reducer->times_term(lt.mono / gl.mono, lt.coeff / gl.coeff);
    } else {
      rem.add_term(lt.mono, lt.coeff);
      Polynomial single = Polynomial::monomial(lt.mono, lt.coeff);
      h -= single;
    }
  }
  return rem;
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
  return normal_form(f, g.elements, g.order);
}

namespace detail {

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                               const MonomialOrder& ord) {
  const Term& lf = f.leading_term(ord);
  const Term& lg = g.leading_term(ord);
  Monomial l = lf.mono.lcm(lg.mono);
  return f.times_term(l / lf.mono, Rat(1) / lf.coeff) -
         g.times_term(l / lg.mono, Rat(1) / lg.coeff);
}

/// Minimalize + tail-reduce + normalize, giving the unique reduced basis.
inline std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis,
                                            const MonomialOrder& ord) {
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
  });
  std::vector<Polynomial> minimal;
  for (const Polynomial& g : basis) {
    bool redundant = false;
    for (const Polynomial& h : minimal)
      if (h.leading_monomial(ord).divides(g.leading_monomial(ord))) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g.monic(ord));
  }
  std::vector<Polynomial> out = minimal;
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < out.size(); ++j)
      if (j != i) others.push_back(out[j]);
    out[i] = normal_form(out[i], others, ord).monic(ord);
    if (out[i].is_zero()) throw invariant_error("reduced basis lost an element");
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
  });
  return out;
}

}  // namespace detail

/// Buchberger with the normal selection strategy (smallest lcm first)
/// and the coprimality and chain criteria. Returns the reduced basis,
/// which is unique for the order, elements monic and sorted.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                                const MonomialOrder& ord) {
  std::vector<Polynomial> basis;
  for (const Polynomial& g : gens)
    if (!g.is_zero()) basis.push_back(g.monic(ord));

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pending;
  std::vector<std::vector<bool>> done;  // pairs already treated or discarded
  auto mark_done = [&](std::size_t i, std::size_t j) { done[i][j] = done[j][i] = true; };
  auto add_pairs_for = [&](std::size_t k) {
    for (auto& row : done) row.push_back(false);
    done.emplace_back(k + 1, false);
    for (std::size_t i = 0; i < k; ++i)
      pending.push_back(
          {i, k, basis[i].leading_monomial(ord).lcm(basis[k].leading_monomial(ord))});
  };
  for (std::size_t k = 0; k < basis.size(); ++k) add_pairs_for(k);

  while (!pending.empty()) {
    std::size_t best = 0;
    for (std::size_t t = 1; t < pending.size(); ++t) {
      int c = ord.compare(pending[t].lcm, pending[best].lcm);
      if (c < 0 || (c == 0 && std::make_pair(pending[t].i, pending[t].j) <
                                  std::make_pair(pending[best].i, pending[best].j)))
        best = t;
    }
    Pair pr = pending[best];
    pending.erase(pending.begin() + best);
    mark_done(pr.i, pr.j);

    const Monomial& li = basis[pr.i].leading_monomial(ord);
    const Monomial& lj = basis[pr.j].leading_monomial(ord);
    if ((li * lj) == pr.lcm) continue;  // coprime leading monomials
    bool chained = false;
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (done[pr.i][k] && done[pr.j][k] &&
          basis[k].leading_monomial(ord).divides(pr.lcm))
        chained = true;
    }
    if (chained) continue;

    Polynomial s = detail::s_polynomial(basis[pr.i], basis[pr.j], ord);
    Polynomial r = normal_form(s, basis, ord);
    if (!r.is_zero()) {
      basis.push_back(r.monic(ord));
      add_pairs_for(basis.size() - 1);
    }
  }

  GroebnerBasis out{detail::reduce_basis(std::move(basis), ord), ord, true};
  return out;
}

/// Wraps externally supplied polynomials as a basis, verifying that
/// every S-polynomial reduces to zero.
inline GroebnerBasis assemble_groebner(const std::vector<Polynomial>& gens,
                                       const MonomialOrder& ord) {
  std::vector<Polynomial> basis;
  for (const Polynomial& g : gens)
    if (!g.is_zero()) basis.push_back(g.monic(ord));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Polynomial s = detail::s_polynomial(basis[i], basis[j], ord);
      if (!normal_form(s, basis, ord).is_zero())
        throw invalid_input_error("supplied set is not a Groebner basis");
    }
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
  });
  bool reduced = true;
  for (std::size_t i = 0; i < basis.size() && reduced; ++i)
    for (const Term& t : basis[i].terms()) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (j == i && t.mono == basis[i].leading_monomial(ord)) continue;
        if (basis[j].leading_monomial(ord).divides(t.mono)) {
          reduced = false;
          break;
        }
      }
      if (!reduced) break;
    }
  return GroebnerBasis{std::move(basis), ord, reduced};
}

/// Initial forms of the basis elements with respect to the weight the
/// basis was computed under; they generate the graded ideal and are a
/// Groebner basis of it.
inline std::vector<Polynomial> initial_forms(const GroebnerBasis& g, const RatVec& w) {
  if (!g.order.same_weight(w))
    throw invalid_input_error("initial forms need the weight the basis was computed under");
  std::vector<Polynomial> out;
  for (const Polynomial& p : g.elements) out.push_back(p.initial_form(g.order));
  return out;
}

/// Sufficient non-zerodivisor test: the variable divides no leading
/// monomial of the reduced basis, so it is regular on the quotient by
/// the initial ideal and hence on the quotient itself.
inline bool is_variable_nzd(const GroebnerBasis& g, std::size_t var) {
  for (const Polynomial& p : g.elements)
    if (p.leading_monomial(g.order).e[var] != 0) return false;
  return true;
}

}  // namespace newtoric
