#pragma once

#include "newtoric/membership.hpp"
#include "newtoric/toric.hpp"

namespace newtoric {

struct iteration_limit_error : error {
  using error::error;
};

struct QueueEntry {
  std::size_t i, j;  // i < j, zero-based generator indices

  bool operator<(const QueueEntry& o) const {
    return std::make_pair(i, j) < std::make_pair(o.i, o.j);
  }
  bool operator==(const QueueEntry& o) const { return i == o.i && j == o.j; }
};

inline QueueEntry make_entry(std::size_t a, std::size_t b) {
  if (a == b) throw invalid_input_error("queue entries pair distinct generators");
  return a < b ? QueueEntry{a, b} : QueueEntry{b, a};
}

/// Normal form of a monomial modulo a toric basis is again a monomial.
inline Monomial toric_normal_form(const GroebnerBasis& g, const Monomial& m) {
  Polynomial nf = normal_form(Polynomial::monomial(m), g);
  if (nf.size() != 1 || nf.terms()[0].coeff != 1)
    throw invariant_error("normal form of a monomial is not monic monomial");
  return nf.terms()[0].mono;
}

/// Whether k*p is an L-leading term of the defining relations: the
/// normal form of y^{kp} under the L-refined order drops in L-degree.
inline bool is_L_leading(const GroebnerBasis& g, const Monomial& p, Exp k) {
  Monomial power = p.pow(k);
  Monomial nf = toric_normal_form(g, power);
  return g.order.weighted_degree(nf) < g.order.weighted_degree(power);
}

/// The bounded nilpotency test: if k*p is ever a leading term then it
/// is one for k equal to the maximal minor bound.
inline bool is_eventually_leading(const GroebnerBasis& g, const Monomial& p,
                                  const Int& minor_bound) {
  return is_L_leading(g, p, to_int64(minor_bound));
}

struct InitialQueue {
  std::vector<QueueEntry> pairs;
  std::vector<bool> single_leading;  // e_i eventually leading, i.e. interior
};

/// Pairs whose doubled exponent is eventually leading while neither
/// single generator is: the seed of the enlargement queue.
inline InitialQueue initial_queue(const SemigroupPresentation& p,
                                  const GroebnerBasis& one_basis,
                                  const Int& minor_bound) {
  InitialQueue out;
  const std::size_t n = p.size();
  out.single_leading.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out.single_leading[i] =
        is_eventually_leading(one_basis, Monomial::variable(n, i), minor_bound);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (out.single_leading[i] || out.single_leading[j]) continue;
      Monomial pair = Monomial::variable(n, i) * Monomial::variable(n, j);
      if (is_eventually_leading(one_basis, pair, minor_bound))
        out.pairs.push_back({i, j});
    }
  return out;
}

namespace detail {

inline void maximal_cliques(const std::vector<std::size_t>& vertices,
                            const std::vector<std::vector<bool>>& adj,
                            std::vector<std::size_t>& current, std::size_t start,
                            std::vector<std::vector<std::size_t>>& out) {
  bool extended = false;
  for (std::size_t t = start; t < vertices.size(); ++t) {
    std::size_t v = vertices[t];
    bool ok = true;
    for (std::size_t u : current) ok &= adj[u][v];
    if (!ok) continue;
    extended = true;
    current.push_back(v);
    maximal_cliques(vertices, adj, current, t + 1, out);
    current.pop_back();
  }
  if (!extended && !current.empty()) {
    // maximal to the right; check no earlier vertex extends it
    for (std::size_t v : vertices) {
      if (std::find(current.begin(), current.end(), v) != current.end()) continue;
      bool ok = true;
      for (std::size_t u : current) ok &= adj[u][v];
      if (ok) return;
    }
    out.push_back(current);
  }
}

}  // namespace detail

/// Reconstructs the umbrella facets from the queue: maximal sets of
/// non-interior generators with no queued pair. The geometric umbrella
/// is authoritative; any disagreement is surfaced as an error.
inline std::vector<std::vector<std::size_t>> facets_from_groebner(
    const SemigroupPresentation& p, const InitialQueue& queue, const Umbrella& reference) {
  const std::size_t n = p.size();
  std::vector<std::vector<bool>> cofacial(n, std::vector<bool>(n, true));
  for (const QueueEntry& e : queue.pairs)
    cofacial[e.i][e.j] = cofacial[e.j][e.i] = false;
  std::vector<std::size_t> vertices;
  for (std::size_t i = 0; i < n; ++i)
    if (!queue.single_leading[i]) vertices.push_back(i);

  std::vector<std::vector<std::size_t>> cliques;
  std::vector<std::size_t> current;
  detail::maximal_cliques(vertices, cofacial, current, 0, cliques);
  std::sort(cliques.begin(), cliques.end());

  std::vector<std::vector<std::size_t>> geometric;
  for (const Facet& f : reference.facets()) geometric.push_back(f.members);
  if (cliques != geometric)
    throw invariant_error(
        "facet reconstruction from leading terms disagrees with the umbrella");
  return cliques;
}

/// Pairs without a shared facet cone; the interior variant keeps only
/// pairs whose degree product is below one.
inline std::vector<QueueEntry> noncofacial_pairs(const NewtonDegrees& deg,
                                                 const std::vector<IntVec>& frame_columns) {
  std::vector<QueueEntry> out;
  for (std::size_t i = 0; i < frame_columns.size(); ++i)
    for (std::size_t j = i + 1; j < frame_columns.size(); ++j)
      if (!deg.share_facet_cone(frame_columns[i], frame_columns[j]))
        out.push_back({i, j});
  return out;
}

inline std::vector<QueueEntry> interior_pairs(const NewtonDegrees& deg) {
  const auto& p = deg.presentation();
  std::vector<IntVec> cols;
  for (std::size_t j = 0; j < p.size(); ++j) cols.push_back(p.frame_generator(j));
  std::vector<QueueEntry> out;
  for (const QueueEntry& e : noncofacial_pairs(deg, cols))
    if (deg.generator_degree(e.i) * deg.generator_degree(e.j) < 1) out.push_back(e);
  return out;
}

struct RemovalRecord {
  QueueEntry pair;
  std::string normal_form;  // the certifying monomial, canonical text
  Rat degree_before, degree_after;
};

struct AppendedGenerator {
  IntVec column;  // ambient coordinates
  Rat degree;
};

struct IterationTrace {
  std::vector<std::string> basis;  // reduced basis of the current toric ideal
  std::vector<RemovalRecord> removed;
  std::vector<QueueEntry> queue_after_removal;
  std::vector<AppendedGenerator> appended;
  std::vector<QueueEntry> queue_after_extension;
};

struct NewtonTrace {
  std::vector<QueueEntry> initial_queue;
  std::vector<std::vector<std::size_t>> facets;
  std::vector<QueueEntry> queue_after_interior;
  std::vector<IterationTrace> iterations;
};

struct NewtonResult {
  SemigroupPresentation enlarged;
  std::size_t original_size = 0;  // the first columns are the input generators
  WeightVector weights;
  GroebnerBasis basis;  // of the enlarged toric ideal under the L-refined order
  std::vector<Polynomial> graded_generators;
  NewtonTrace trace;
};

/// The enlargement loop: grow the generating set until the additive
/// filtration by the weights agrees with the Newton filtration. Queue
/// processing is kept in sorted order and pairs are never re-enqueued,
/// which pins a canonical trace; the output set itself is independent
/// of these choices.
inline NewtonResult newton_filtration(const SemigroupPresentation& p,
                               std::size_t max_iterations = 64) {
  NewtonDegrees deg(p);
  const std::size_t n = p.size();
  GroebnerBasis one_basis =
      toric_ideal_basis(p, MonomialOrder::weighted(RatVec(n, Rat(1))));
  Int minor_bound = p.max_minor_bound();

  NewtonTrace trace;
  InitialQueue iq = initial_queue(p, one_basis, minor_bound);
  trace.initial_queue = iq.pairs;
  trace.facets = facets_from_groebner(p, iq, deg.one_umbrella());

  std::set<QueueEntry> queue(iq.pairs.begin(), iq.pairs.end());
  for (const QueueEntry& e : interior_pairs(deg)) queue.insert(e);
  std::set<QueueEntry> ever_enqueued = queue;
  trace.queue_after_interior.assign(queue.begin(), queue.end());

  std::vector<IntVec> columns, frames;
  std::vector<std::string> labels = p.labels();
  RatVec weights;
  for (std::size_t j = 0; j < n; ++j) {
    columns.push_back(p.generator(j));
    frames.push_back(p.frame_generator(j));
    weights.push_back(deg.generator_degree(j));
  }

  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    SemigroupPresentation current(IntMatrix::from_columns(columns), labels);
    MonomialOrder order = MonomialOrder::weighted(weights);
    GroebnerBasis basis = toric_ideal_basis(current, order);

    IterationTrace it;
    for (const Polynomial& g : basis.elements) it.basis.push_back(g.render(order));

    std::vector<QueueEntry> removed;
    for (const QueueEntry& e : queue) {
      Monomial pair =
          Monomial::variable(columns.size(), e.i) * Monomial::variable(columns.size(), e.j);
      Monomial nf = toric_normal_form(basis, pair);
      Rat before = order.weighted_degree(pair), after = order.weighted_degree(nf);
      if (after < before) {
        it.removed.push_back({e, Polynomial::monomial(nf).render(order), before, after});
        removed.push_back(e);
      }
    }
    for (const QueueEntry& e : removed) queue.erase(e);
    it.queue_after_removal.assign(queue.begin(), queue.end());

    if (queue.empty()) {
      trace.iterations.push_back(std::move(it));
      std::vector<Polynomial> graded = initial_forms(basis, weights);
      WeightVector w{weights};
      return NewtonResult{std::move(current), n,           std::move(w),
                          std::move(basis),   std::move(graded), std::move(trace)};
    }

    // append the sums of the surviving pairs, then extend the queue
    for (const QueueEntry& e : queue) {
      IntVec sum = add(columns[e.i], columns[e.j]);
      if (std::find(columns.begin(), columns.end(), sum) != columns.end()) continue;
      IntVec frame = add(frames[e.i], frames[e.j]);
      Rat degree = deg.degree(frame);
      if (degree >= weights[e.i] + weights[e.j])
        throw invariant_error("appended generator without a degree drop");
      columns.push_back(sum);
      frames.push_back(frame);
      weights.push_back(degree);
      labels.push_back("a" + std::to_string(columns.size()));
      it.appended.push_back({sum, degree});
    }
    for (const QueueEntry& e : noncofacial_pairs(deg, frames))
      if (ever_enqueued.insert(e).second) queue.insert(e);
    it.queue_after_extension.assign(queue.begin(), queue.end());
    trace.iterations.push_back(std::move(it));
  }
  throw iteration_limit_error("enlargement loop exceeded the iteration cap");
}

struct TheoremCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Post-hoc certificate: every facet semigroup is generated by the
/// enlarged generators in its cone (checked by bounded enumeration),
/// and a doubled pair is a leading term at k = 1 exactly when the pair
/// shares no facet cone.
inline TheoremCheck verify_enlargement(const NewtonResult& result, const Rat& bound) {
  TheoremCheck out;
  const SemigroupPresentation& enlarged = result.enlarged;
  // the degree structure lives on the original generators; the frames
  // agree because both presentations span the same lattice
  std::vector<std::size_t> orig_idx(result.original_size);
  for (std::size_t j = 0; j < orig_idx.size(); ++j) orig_idx[j] = j;
  NewtonDegrees deg(enlarged.restricted_to(orig_idx));
  SemigroupSearch search(enlarged);
  const auto& facets = deg.one_umbrella().facets();

  std::vector<IntVec> enlarged_frames;
  for (std::size_t j = 0; j < enlarged.size(); ++j)
    enlarged_frames.push_back(enlarged.frame_generator(j));

  for (std::size_t s = 0; s < facets.size(); ++s) {
    std::vector<std::size_t> in_cone_idx;
    for (std::size_t j = 0; j < enlarged.size(); ++j)
      if (facets[s].evaluate(enlarged_frames[j]) == deg.degree(enlarged_frames[j]))
        in_cone_idx.push_back(j);
    SemigroupPresentation cone_part = enlarged.restricted_to(in_cone_idx);
    SemigroupSearch cone_search(cone_part);
    for (const IntVec& h : search.elements_up_to(bound)) {
      if (facets[s].evaluate(h) != deg.degree(h)) continue;  // outside C_sigma
      if (!cone_search.contains_ambient(enlarged.from_frame(h))) {
        out.ok = false;
        out.violations.push_back("facet " + std::to_string(s) +
                                 " misses element " + to_string(h));
      }
    }
  }

  for (std::size_t i = 0; i < enlarged.size(); ++i)
    for (std::size_t j = i + 1; j < enlarged.size(); ++j) {
      Monomial pair =
          Monomial::variable(enlarged.size(), i) * Monomial::variable(enlarged.size(), j);
      bool leading = is_L_leading(result.basis, pair, 1);
      bool disjoint = !deg.share_facet_cone(enlarged_frames[i], enlarged_frames[j]);
      if (leading != disjoint) {
        out.ok = false;
        out.violations.push_back("pair (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) +
                                 ") breaks the leading-term equivalence");
      }
    }
  return out;
}

}  // namespace newtoric
