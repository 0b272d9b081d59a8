#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

#include "newtoric/numbers.hpp"

namespace newtoric {

using Exp = std::int64_t;

struct Monomial {
  std::vector<Exp> e;

  static Monomial one(std::size_t nvars) { return {std::vector<Exp>(nvars, 0)}; }

  static Monomial variable(std::size_t nvars, std::size_t idx, Exp power = 1) {
    Monomial m = one(nvars);
    m.e[idx] = power;
    return m;
  }

  std::size_t nvars() const { return e.size(); }

  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](Exp x) { return x == 0; });
  }

  Exp total_degree() const {
    Exp s = 0;
    for (Exp x : e) s += x;
    return s;
  }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
    return r;
  }

  /// Quotient, valid only when *this is divisible by m.
  Monomial operator/(const Monomial& m) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) {
      r.e[i] -= m.e[i];
      if (r.e[i] < 0) throw invariant_error("monomial quotient with negative exponent");
    }
    return r;
  }

  Monomial pow(Exp k) const {
    Monomial r = *this;
    for (Exp& x : r.e) x *= k;
    return r;
  }

  Monomial lcm(const Monomial& m) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = std::max(r.e[i], m.e[i]);
    return r;
  }

  bool operator==(const Monomial& m) const { return e == m.e; }
  bool operator!=(const Monomial& m) const { return e != m.e; }
  /// structural (lexicographic) comparison used only for canonical storage
  bool operator<(const Monomial& m) const { return e < m.e; }
};

/// A term order refining a rational weight vector. Ties are broken by
/// graded reverse-lexicographic comparison in a fixed variable priority
/// (input column order; later columns are cheaper). The pure revlex
/// variant drops the intermediate total-degree step; it is what the
/// variable-saturation passes need to stay exact for weighted gradings.
class MonomialOrder {
 public:
  enum class Tiebreak { GradedRevLex, PureRevLex };

  MonomialOrder(RatVec weight, Tiebreak tiebreak = Tiebreak::GradedRevLex,
                std::vector<std::size_t> priority = {})
      : weight_(std::move(weight)), tiebreak_(tiebreak), priority_(std::move(priority)) {
    Int lcm = 1;
    for (const Rat& w : weight_) {
      Int d = denominator(w);
      lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    for (const Rat& w : weight_)
      wint_.push_back(numerator(w) * (lcm / denominator(w)));
    if (priority_.empty()) {
      priority_.resize(weight_.size());
      for (std::size_t i = 0; i < priority_.size(); ++i) priority_[i] = i;
    }
    if (priority_.size() != weight_.size())
      throw invalid_input_error("order priority arity mismatch");
  }

  static MonomialOrder grevlex(std::size_t nvars) {
    return MonomialOrder(RatVec(nvars, Rat(0)));
  }

  static MonomialOrder weighted(RatVec weight) {
    return MonomialOrder(std::move(weight));
  }

  /// Weighted revlex with one designated cheapest variable, used by the
  /// per-variable saturation trick.
  static MonomialOrder saturation(RatVec weight, std::size_t cheapest) {
    std::vector<std::size_t> prio;
    for (std::size_t i = 0; i < weight.size(); ++i)
      if (i != cheapest) prio.push_back(i);
    prio.push_back(cheapest);
    return MonomialOrder(std::move(weight), Tiebreak::PureRevLex, std::move(prio));
  }

  std::size_t nvars() const { return weight_.size(); }
  const RatVec& weight() const { return weight_; }

  Rat weighted_degree(const Monomial& m) const {
    check(m);
    Rat s = 0;
    for (std::size_t i = 0; i < m.e.size(); ++i)
      if (m.e[i]) s += weight_[i] * m.e[i];
    return s;
  }

  /// -1, 0, +1 for a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    check(a);
    check(b);
    Int wa = 0, wb = 0;
    for (std::size_t i = 0; i < a.e.size(); ++i) {
      if (a.e[i]) wa += wint_[i] * a.e[i];
      if (b.e[i]) wb += wint_[i] * b.e[i];
    }
    if (wa != wb) return wa < wb ? -1 : 1;
    if (tiebreak_ == Tiebreak::GradedRevLex) {
      Exp da = a.total_degree(), db = b.total_degree();
      if (da != db) return da < db ? -1 : 1;
    }
    for (std::size_t k = priority_.size(); k-- > 0;) {
      std::size_t i = priority_[k];
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool same_weight(const RatVec& w) const { return weight_ == w; }

 private:
  void check(const Monomial& m) const {
    if (m.nvars() != weight_.size())
      throw invalid_input_error("monomial arity does not match order");
  }

  RatVec weight_;
  std::vector<Int> wint_;
  Tiebreak tiebreak_;
  std::vector<std::size_t> priority_;
};

struct Term {
  Monomial mono;
  Rat coeff;
};

/// Sparse polynomial over Q. Terms are kept sorted by the structural
/// monomial order (descending), which makes equality and hashing
/// independent of any term order in play.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms) {
    Polynomial p(nvars);
    for (auto& t : terms) p.add_term(t.mono, t.coeff);
    return p;
  }

  static Polynomial monomial(Monomial m, Rat c = Rat(1)) {
    Polynomial p(m.nvars());
    p.add_term(std::move(m), std::move(c));
    return p;
  }

  /// y^plus - y^minus
  static Polynomial binomial(Monomial plus, Monomial minus) {
    Polynomial p(plus.nvars());
    p.add_term(std::move(plus), Rat(1));
    p.add_term(std::move(minus), Rat(-1));
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  void add_term(Monomial m, Rat c) {
    if (c == 0) return;
    if (nvars_ == 0 && terms_.empty()) nvars_ = m.nvars();
    if (m.nvars() != nvars_) throw invalid_input_error("term arity mismatch");
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), m,
        [](const Term& t, const Monomial& key) { return key < t.mono; });
    if (it != terms_.end() && it->mono == m) {
      it->coeff += c;
      if (it->coeff == 0) terms_.erase(it);
    } else {
      terms_.insert(it, Term{std::move(m), std::move(c)});
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const Term& t : o.terms_) add_term(t.mono, t.coeff);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    for (const Term& t : o.terms_) add_term(t.mono, -t.coeff);
    return *this;
  }

  Polynomial operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
  }

  Polynomial operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
  }

  /// product with the single term c * y^m
  Polynomial times_term(const Monomial& m, const Rat& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const Term& t : terms_) r.add_term(t.mono * m, t.coeff * c);
    return r;
  }

  const Term& leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw invalid_input_error("leading term of zero");
    const Term* best = &terms_[0];
    for (const Term& t : terms_)
      if (ord.less(best->mono, t.mono)) best = &t;
    return *best;
  }

  const Monomial& leading_monomial(const MonomialOrder& ord) const {
    return leading_term(ord).mono;
  }

  Polynomial monic(const MonomialOrder& ord) const {
    Polynomial r = *this;
    if (r.is_zero()) return r;
    Rat lc = leading_term(ord).coeff;
    for (Term& t : r.terms_) t.coeff /= lc;
    return r;
  }

  Rat weighted_degree(const MonomialOrder& ord) const {
    if (terms_.empty()) throw invalid_input_error("degree of zero polynomial");
    Rat best = ord.weighted_degree(terms_[0].mono);
    for (const Term& t : terms_) {
      Rat d = ord.weighted_degree(t.mono);
      if (d > best) best = d;
    }
    return best;
  }

  /// Sum of the terms of maximal weighted degree.
  Polynomial initial_form(const MonomialOrder& ord) const {
    if (terms_.empty()) return Polynomial(nvars_);
    Rat top = weighted_degree(ord);
    Polynomial r(nvars_);
    for (const Term& t : terms_)
      if (ord.weighted_degree(t.mono) == top) r.add_term(t.mono, t.coeff);
    return r;
  }

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
        return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
  bool operator<(const Polynomial& o) const {  // structural, for canonical sets
    return std::lexicographical_compare(
        terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
        [](const Term& a, const Term& b) {
          if (a.mono != b.mono) return a.mono < b.mono;
          return a.coeff < b.coeff;
        });
  }

  /// Canonical rendering, terms sorted descending under the given order.
  std::string render(const MonomialOrder& ord) const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> sorted;
    for (const Term& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(), [&](const Term* a, const Term* b) {
      return ord.less(b->mono, a->mono);
    });
    std::string out;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      Rat c = sorted[k]->coeff;
      if (k == 0) {
        if (c < 0) out += "-", c = -c;
      } else {
        out += c < 0 ? " - " : " + ";
        if (c < 0) c = -c;
      }
      const Monomial& m = sorted[k]->mono;
      std::string vars;
      for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (!m.e[i]) continue;
        if (!vars.empty()) vars += "*";
        vars += "y" + std::to_string(i + 1);
        if (m.e[i] > 1) vars += "^" + std::to_string(m.e[i]);
      }
      if (vars.empty()) {
        out += to_string(c);
      } else {
        if (c != 1) out += to_string(c) + "*";
        out += vars;
      }
    }
    return out;
  }

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

}  // namespace newtoric
