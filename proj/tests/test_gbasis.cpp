#include <catch2/catch_amalgamated.hpp>

#include "newtoric/groebner.hpp"
#include "newtoric/toric.hpp"
#include "support/corpus.hpp"
#include "support/poly_parse.hpp"

using namespace newtoric;
using namespace testsupport;

namespace {

std::vector<std::string> rendered(const std::vector<Polynomial>& ps,
                                  const MonomialOrder& ord) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.render(ord));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Polynomial random_poly(std::mt19937_64& gen, std::size_t nvars) {
  std::uniform_int_distribution<int> nterms(1, 4), exp(0, 3), coeff(-4, 4);
  Polynomial p(nvars);
  for (int t = nterms(gen); t > 0; --t) {
    Monomial m = Monomial::one(nvars);
    for (std::size_t i = 0; i < nvars; ++i) m.e[i] = exp(gen);
    p.add_term(std::move(m), Rat(coeff(gen)));
  }
  return p;
}

}  // namespace

TEST_CASE("order comparisons") {
  MonomialOrder grevlex = MonomialOrder::grevlex(6);
  Monomial a = Monomial::variable(6, 0, 3);  // y1^3
  Monomial b = Monomial::variable(6, 1, 2);  // y2^2
  CHECK(grevlex.compare(a, a) == 0);
  CHECK(grevlex.compare(a, b) > 0);  // degree 3 beats 2

  // the L-refined order of the rank-3 semigroup: weight (2/3,1,1,1,1,1)
  RatVec w = {Rat(2, 3), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)};
  MonomialOrder lref = MonomialOrder::weighted(w);
  Monomial y2y3 = Monomial::variable(6, 1) * Monomial::variable(6, 2);
  Monomial y1y4 = Monomial::variable(6, 0) * Monomial::variable(6, 3);
  CHECK(lref.compare(y2y3, y1y4) > 0);  // L-degrees 2 vs 5/3
  CHECK(lref.weighted_degree(y1y4) == Rat(5, 3));
  CHECK(lref.compare(a, b) > 0);  // equal weight 2, grevlex tie

  Monomial short_mono = Monomial::one(3);
  CHECK_THROWS_AS(grevlex.compare(a, short_mono), invalid_input_error);
}

TEST_CASE("grevlex picks the classical leading terms") {
  MonomialOrder ord = MonomialOrder::grevlex(6);
  auto check_leading = [&](const char* poly, const char* lead) {
    Polynomial p = parse_poly(6, poly);
    CHECK(Polynomial::monomial(p.leading_monomial(ord)).render(ord) == lead);
  };
  check_leading("y2*y3 - y1*y4", "y2*y3");
  check_leading("y2^3 - y1^2*y3", "y2^3");
  check_leading("y3^3 - y2*y4^2", "y3^3");
  check_leading("y1*y3^2 - y2^2*y4", "y1*y3^2");
  check_leading("y4*y5 - y2*y6", "y4*y5");
  check_leading("y3*y5 - y1*y6", "y3*y5");
}

TEST_CASE("normal form basics") {
  MonomialOrder ord = MonomialOrder::grevlex(2);
  // basis {y1^2 - y2, y2^2}
  auto basis = parse_polys(2, {"y1^2 - y2", "y2^2"});
  GroebnerBasis g = buchberger(basis, ord);
  Polynomial member = parse_poly(2, "y1^4 - y2^2");
  CHECK(normal_form(member, g).is_zero());
  Polynomial f = parse_poly(2, "y1^3 + y1");
  Polynomial nf = normal_form(f, g);
  CHECK(normal_form(nf, g) == nf);
}

TEST_CASE("normal form against the one-weight basis of the rank-3 corpus ideal") {
  auto p = example15();
  MonomialOrder ord = MonomialOrder::weighted(RatVec(6, Rat(1)));
  GroebnerBasis g = toric_ideal_basis(p, ord);
  Polynomial y1cubed = Polynomial::monomial(Monomial::variable(6, 0, 3));
  CHECK(normal_form(y1cubed, g).render(ord) == "y2^2");
}

TEST_CASE("normal form is idempotent and compatible with addition") {
  auto gen = rng(41);
  MonomialOrder ord = MonomialOrder::grevlex(3);
  GroebnerBasis g =
      buchberger(parse_polys(3, {"y1*y2 - y3", "y2^2 - y1", "y3^3 - y1*y2"}), ord);
  for (int trial = 0; trial < 250; ++trial) {
    Polynomial f = random_poly(gen, 3), h = random_poly(gen, 3);
    Polynomial nf = normal_form(f, g);
    REQUIRE(normal_form(nf, g) == nf);
    Polynomial lhs = normal_form(f + h, g);
    Polynomial rhs = normal_form(normal_form(f, g) + normal_form(h, g), g);
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("buchberger reproduces the quartic basis") {
  auto p = example51();
  MonomialOrder ord = MonomialOrder::grevlex(4);
  GroebnerBasis g = toric_ideal_basis(p, ord);
  CHECK(rendered(g.elements, ord) ==
        sorted({"y2*y3 - y1*y4", "y2^3 - y1^2*y3", "y3^3 - y2*y4^2",
                "y1*y3^2 - y2^2*y4"}));
  CHECK(g.reduced);
}

TEST_CASE("buchberger on a single generator") {
  MonomialOrder ord = MonomialOrder::grevlex(2);
  GroebnerBasis g = buchberger(parse_polys(2, {"3*y1^2 - 3*y2"}), ord);
  REQUIRE(g.size() == 1);
  CHECK(g.elements[0].render(ord) == "y1^2 - y2");
}

TEST_CASE("buchberger on the zero ideal") {
  MonomialOrder ord = MonomialOrder::grevlex(2);
  GroebnerBasis g = buchberger({}, ord);
  CHECK(g.size() == 0);
  Polynomial f = parse_poly(2, "y1 + y2");
  CHECK(normal_form(f, g) == f);
}

TEST_CASE("the L-refined basis of the rank-3 corpus ideal") {
  auto p = example15();
  RatVec w = {Rat(2, 3), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)};
  MonomialOrder ord = MonomialOrder::weighted(w);
  GroebnerBasis g = toric_ideal_basis(p, ord);
  CHECK(rendered(g.elements, ord) ==
        sorted({"y2*y3 - y1*y4", "y1^3 - y2^2", "y1^2*y3 - y2*y4",
                "y1*y3^2 - y4^2", "y4^2*y5 - y1^2*y6", "y3*y4*y5 - y2*y6",
                "y3^2*y5 - y1*y6"}));

  auto forms = initial_forms(g, w);
  CHECK(rendered(forms, ord) ==
        sorted({"y2*y3", "y1^3 - y2^2", "y1^2*y3", "y1*y3^2", "y4^2*y5",
                "y3*y4*y5", "y3^2*y5"}));
  CHECK_THROWS_AS(initial_forms(g, RatVec(6, Rat(1))), invalid_input_error);
}

TEST_CASE("one-weight initial forms of the rank-3 corpus ideal") {
  auto p = example15();
  RatVec ones(6, Rat(1));
  MonomialOrder ord = MonomialOrder::weighted(ones);
  GroebnerBasis g = toric_ideal_basis(p, ord);
  auto forms = initial_forms(g, ones);
  CHECK(rendered(forms, ord) ==
        sorted({"y2*y3 - y1*y4", "y4^2*y5 - y1^2*y6", "y3*y4*y5", "y3^2*y5",
                "y1*y3^2", "y1^2*y3", "y1^3"}));
}

TEST_CASE("initial form of a binomial with a strict weight drop") {
  RatVec w = {Rat(1), Rat(3)};
  MonomialOrder ord = MonomialOrder::weighted(w);
  GroebnerBasis g = buchberger(parse_polys(2, {"y1^2 - y2"}), ord);
  auto forms = initial_forms(g, w);
  REQUIRE(forms.size() == 1);
  CHECK(forms[0].render(ord) == "y2");
}

TEST_CASE("reduced bases are unique under generator permutation") {
  auto gen = rng(43);
  for (const auto& p : full_corpus()) {
    MonomialOrder ord = MonomialOrder::grevlex(p.size());
    std::vector<Polynomial> gens;
    for (const IntVec& u : kernel_lattice(p.generators()))
      gens.push_back(binomial_from_kernel_vector(u));
    if (gens.empty()) continue;
    GroebnerBasis reference = buchberger(gens, ord);
    for (int trial = 0; trial < 8; ++trial) {
      std::shuffle(gens.begin(), gens.end(), gen);
      GroebnerBasis again = buchberger(gens, ord);
      REQUIRE(again.elements == reference.elements);
    }
  }
}

TEST_CASE("all S-polynomials of computed bases reduce to zero") {
  for (const auto& p : full_corpus()) {
    MonomialOrder ord = MonomialOrder::grevlex(p.size());
    GroebnerBasis g = toric_ideal_basis(p, ord);
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        Polynomial s = detail::s_polynomial(g.elements[i], g.elements[j], ord);
        REQUIRE(normal_form(s, g).is_zero());
      }
  }
}

TEST_CASE("non-zerodivisor test on the published basis of the auxiliary ideal") {
  // four quartic binomials plus the two mixed ones; a Groebner basis
  // whose leading terms avoid the last variable
  auto gens = parse_polys(6, {"y2*y3 - y1*y4", "y2^3 - y1^2*y3", "y3^3 - y2*y4^2",
                              "y3^2*y1 - y2^2*y4", "y4*y5 - y2*y6", "y3*y5 - y1*y6"});
  MonomialOrder ord = MonomialOrder::grevlex(6);
  GroebnerBasis g = assemble_groebner(gens, ord);
  CHECK(g.reduced);
  CHECK(is_variable_nzd(g, 5));
  CHECK_FALSE(is_variable_nzd(g, 4));

  GroebnerBasis zero = buchberger({}, MonomialOrder::grevlex(2));
  CHECK(is_variable_nzd(zero, 1));
  GroebnerBasis y1y2 = buchberger(parse_polys(2, {"y1*y2"}), MonomialOrder::grevlex(2));
  CHECK_FALSE(is_variable_nzd(y1y2, 1));
}

TEST_CASE("toric bases stay binomial and substitute to zero") {
  for (const auto& p : full_corpus()) {
    MonomialOrder ord = MonomialOrder::grevlex(p.size());
    GroebnerBasis g = toric_ideal_basis(p, ord);
    for (const Polynomial& b : g.elements) {
      REQUIRE(b.size() == 2);
      const auto& t0 = b.terms()[0];
      const auto& t1 = b.terms()[1];
      IntVec lhs(p.rank(), Int(0)), rhs(p.rank(), Int(0));
      for (std::size_t j = 0; j < p.size(); ++j) {
        lhs = add(lhs, scale(Int(t0.mono.e[j]), p.frame_generator(j)));
        rhs = add(rhs, scale(Int(t1.mono.e[j]), p.frame_generator(j)));
      }
      REQUIRE(lhs == rhs);
      REQUIRE((t0.coeff + t1.coeff) == 0);
    }
  }
}
