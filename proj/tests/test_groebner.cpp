#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rees/groebner.hpp"
#include "test_util.hpp"

#include <random>

using namespace rees;
using testutil::m;
using testutil::p;

namespace {

std::vector<Polynomial> sigma(const UniformParams& P, const std::vector<IndexTuple>& prefix) {
  std::vector<Polynomial> out;
  for (auto& g : syzygy_generators(P)) out.push_back(std::move(g.poly));
  for (const IndexTuple& t : prefix) out.push_back(sylvester_closed(P, t).poly);
  return out;
}

Monomial random_monomial(const VarSet& vs, std::mt19937& rng, Exp max_exp) {
  std::uniform_int_distribution<Exp> d(0, max_exp);
  Monomial out(vs);
  for (int i = 0; i < vs.total(); ++i) out[i] = d(rng);
  return out;
}

}  // namespace

TEST_CASE("normal form basics") {
  UniformParams P = reduction_data(3, 7, 3);
  Polynomial K12 = koszul_syzygy(P, 1, 2);
  CHECK(normal_form(K12, {K12}).is_zero());

  Polynomial one = Polynomial::constant(P.vars, Rational(1));
  CHECK(normal_form(one, sigma(P, {{1, 2}})) == one);  // units pass through a proper ideal

  Polynomial S = s_polynomial(taylor_syzygy(P, 1), taylor_syzygy(P, 2));
  CHECK(normal_form(S, sigma(P, {{1, 2}})).is_zero());
}

TEST_CASE("division identity and idempotence") {
  UniformParams P = reduction_data(3, 7, 3);
  std::vector<Polynomial> basis = sigma(P, {{1, 2}, {1, 3}});
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    // random small combination plus noise term
    Polynomial f(P.vars);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(basis.size()) - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int k = 0; k < 3; ++k) {
      int c = coeff(rng);
      if (c == 0) continue;
      f = f + basis[static_cast<size_t>(pick(rng))].times_term(
                  Rational(c), random_monomial(P.vars, rng, 2));
    }
    f = f + Polynomial::monomial(P.vars, random_monomial(P.vars, rng, 3));
    DivisionResult d = divide(f, basis);
    Polynomial recombined = d.remainder;
    for (size_t i = 0; i < basis.size(); ++i) recombined = recombined + d.quotients[i] * basis[i];
    CHECK(recombined == f);
    CHECK(normal_form(d.remainder, basis) == d.remainder);
    // no remainder term is divisible by a basis lead
    for (const Term& t : d.remainder.terms())
      for (const Polynomial& g : basis) CHECK_FALSE(divides(g.leading_monomial(), t.mono));
  }
}

TEST_CASE("s-polynomials") {
  UniformParams P4 = reduction_data(4, 9, 2);
  CHECK(leads_coprime(koszul_syzygy(P4, 1, 2), koszul_syzygy(P4, 3, 4)));

  UniformParams P = reduction_data(3, 7, 3);
  Polynomial S = s_polynomial(taylor_syzygy(P, 1), taylor_syzygy(P, 2));
  Polynomial expected =
      koszul_syzygy(P, 1, 2).times_monomial(m(P.vars, "x3^3"));  // P(1,2)^b K12
  CHECK(S == expected);

  CHECK(s_polynomial(koszul_syzygy(P, 1, 2), koszul_syzygy(P, 1, 2)).is_zero());
}

TEST_CASE("pinned s-pair reduction identities") {
  UniformParams P = reduction_data(3, 7, 3);
  // S(L2, K12) = x1^b y2 L1
  CHECK(s_polynomial(taylor_syzygy(P, 2), koszul_syzygy(P, 1, 2)) ==
        taylor_syzygy(P, 1).times_monomial(m(P.vars, "x1^3*y2")));
  // S(L1, H2^{1,2}) = -P(1,2)^b y1 L2
  CHECK(s_polynomial(taylor_syzygy(P, 1), sylvester_closed(P, {1, 2}).poly) ==
        -taylor_syzygy(P, 2).times_monomial(m(P.vars, "x3^3*y1")));
}

TEST_CASE("completion fixed points and small runs") {
  UniformParams P = reduction_data(3, 7, 3);
  BuchbergerStats stats;
  GroebnerBasis gb = buchberger(sigma(P, {{1, 2}}), {}, &stats);
  CHECK(stats.added == 0);  // already a basis
  CHECK(gb.gens.size() == 7);

  VarSet vs(2);
  Polynomial x1 = Polynomial::variable(vs, vs.x_index(1));
  GroebnerBasis trivial = buchberger({x1});
  CHECK(trivial.gens.size() == 1);
  CHECK(trivial.gens[0] == x1);

  UniformParams Q = reduction_data(2, 5, 2);
  GroebnerBasis syz = buchberger(sigma(Q, {}));
  MonomialIdeal init = initial_ideal(syz);
  CHECK(init.contains(m(Q.vars, "x2^5*y1")));
  CHECK(init.contains(m(Q.vars, "x1^3*w")));
  CHECK(init.contains(m(Q.vars, "x2^3*w")));

  CHECK_THROWS_AS(buchberger({}), std::invalid_argument);
  CHECK_THROWS_AS(buchberger({Polynomial(vs)}), std::invalid_argument);
}

TEST_CASE("basis verification with certificates") {
  UniformParams P = reduction_data(3, 7, 3);
  auto gens12 = sigma(P, {{1, 2}});
  GroebnerCertificate cert = is_groebner_basis(gens12);
  CHECK(cert.is_basis);
  CHECK(cert.pairs.size() == 21);

  auto gens123 = sigma(P, {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}});
  CHECK(is_groebner_basis(gens123).is_basis);

  // not a basis: the S-pair of (x2 y2 - x1^2, x2) leaves x1^2
  VarSet vs(2);
  Polynomial f = p(vs, {{1, "x2*y2"}, {-1, "x1^2"}});
  Polynomial g = p(vs, {{1, "x2"}});
  GroebnerCertificate bad = is_groebner_basis({f, g});
  CHECK_FALSE(bad.is_basis);
  REQUIRE(bad.pairs.size() == 1);
  CHECK(bad.pairs[0].outcome == SPairRecord::Outcome::Remainder);
  CHECK(bad.pairs[0].residue == "-x1^2");
}

TEST_CASE("initial ideal of a verified prefix") {
  UniformParams P = reduction_data(3, 7, 3);
  GroebnerBasis gb{P.vars, sigma(P, {{1, 2}}), false};
  MonomialIdeal init = initial_ideal(gb);
  MonomialIdeal expect = MonomialIdeal::make(
      P.vars, {m(P.vars, "x2^7*y1"), m(P.vars, "x3^7*y1"), m(P.vars, "x3^7*y2"),
               m(P.vars, "x1^4*w"), m(P.vars, "x2^4*w"), m(P.vars, "x3^4*w"),
               m(P.vars, "x1*x2*w^2")});
  CHECK(init == expect);

  VarSet vs(2);
  Polynomial x1 = Polynomial::variable(vs, vs.x_index(1));
  CHECK(initial_ideal(GroebnerBasis{vs, {x1}, false}) ==
        MonomialIdeal::make(vs, {m(vs, "x1")}));
}

TEST_CASE("kernel oracle, membership, equality") {
  UniformParams Q = reduction_data(2, 5, 2);
  GroebnerBasis oracle = rees_oracle(Q);
  // The minimalized basis keeps all four ladder elements ...
  REQUIRE(oracle.gens.size() == 4);
  // ... but the Koszul form is a syzygy combination when n = 2, so only
  // three of them survive as minimal generators of the ideal.
  auto mins = minimal_generators(oracle, Q);
  REQUIRE(mins.size() == 3);
  CHECK(mins[0] == p(Q.vars, {{1, "x1^3*w"}, {-1, "x2^2*y1"}}));
  CHECK(mins[1] == p(Q.vars, {{1, "x2^3*w"}, {-1, "x1^2*y2"}}));
  CHECK(mins[2] == p(Q.vars, {{1, "x1*x2*w^2"}, {-1, "y1*y2"}}));
  CHECK(ideal_member(koszul_syzygy(Q, 1, 2), oracle));
  CHECK(ideal_equal(rees_generators(Q), oracle.gens));

  UniformParams P = reduction_data(3, 7, 3);
  GroebnerBasis oracle3 = rees_oracle(P);
  CHECK(minimal_generators(oracle3, P).size() == 10);
  CHECK(ideal_member(sylvester_closed(P, {1, 3}).poly, oracle3));
  CHECK_FALSE(ideal_member(Polynomial::constant(P.vars, Rational(1)), oracle3));
  for (int i = 1; i <= 3; ++i)
    CHECK_FALSE(ideal_member(Polynomial::variable(P.vars, P.vars.x_index(i)), oracle3));
}

TEST_CASE("elimination on a plain toric kernel") {
  VarSet base(2);
  VarSet ext = base.extended();
  Polynomial y1 = Polynomial::variable(ext, ext.y_index(1));
  Polynomial y2 = Polynomial::variable(ext, ext.y_index(2));
  Polynomial g1 = y1 - Polynomial::monomial(ext, m(ext, "x1^2*t"));
  Polynomial g2 = y2 - Polynomial::monomial(ext, m(ext, "x2^2*t"));
  std::vector<Polynomial> ker = eliminate_aux({g1, g2});
  REQUIRE(!ker.empty());
  GroebnerBasis gb{base, ker, false};
  CHECK(ideal_member(p(base, {{1, "x1^2*y2"}, {-1, "x2^2*y1"}}), gb));
}

TEST_CASE("colon and intersection via the auxiliary variable") {
  VarSet vs(2);
  // (x1^2) : x1 = (x1)
  Polynomial x1sq = p(vs, {{1, "x1^2"}});
  Polynomial x1 = p(vs, {{1, "x1"}});
  auto colon = colon_by_poly({x1sq}, x1);
  REQUIRE(colon.size() == 1);
  CHECK(colon[0] == x1);

  UniformParams P = reduction_data(3, 7, 3);
  auto H12 = sigma(P, {{1, 2}});
  Polynomial next = sylvester_closed(P, {1, 3}).poly;
  auto cg = colon_by_poly(H12, next);
  std::vector<Polynomial> expect{p(P.vars, {{1, "x1^3"}}), p(P.vars, {{1, "x2"}}),
                                 p(P.vars, {{1, "x3^3"}})};
  CHECK(ideal_equal(cg, expect));
}

TEST_CASE("colon-times-divisor equals the intersection on random inputs") {
  VarSet vs(2);
  std::mt19937 rng(1331);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Polynomial> J;
    int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) {
      Monomial a = random_monomial(vs, rng, 3);
      J.push_back(Polynomial::monomial(vs, a));
    }
    Monomial fa = random_monomial(vs, rng, 2);
    Monomial fb = random_monomial(vs, rng, 2);
    Polynomial f = (lex_compare(vs, fa, fb) == Cmp::EQ)
                       ? Polynomial::monomial(vs, fa)
                       : Polynomial(vs, {{Rational(1), fa}, {Rational(-1), fb}});
    ColonResult res = colon_by_poly_full(J, f);
    REQUIRE(!res.colon_gens.empty());  // f*J always meets (f)
    // (J:f)*f = J ∩ (f)
    std::vector<Polynomial> lhs;
    for (const Polynomial& c : res.colon_gens) lhs.push_back(c * f);
    CHECK(ideal_equal(lhs, res.intersection_gens));
    // (J:f)*f sits inside J
    GroebnerBasis gbJ = buchberger(J);
    for (const Polynomial& c : res.colon_gens) CHECK(ideal_member(c * f, gbJ));
  }
}

TEST_CASE("pair criteria do not change the reduced basis") {
  // The reduced basis is canonical, so the chain criterion may only change
  // how much work is done, never the result.
  for (auto [n, a, b] : {std::tuple{3, 7, 3}, {2, 5, 2}, {4, 5, 2}}) {
    UniformParams P = reduction_data(n, a, b);
    std::vector<Polynomial> gens;
    for (auto& g : syzygy_generators(P)) gens.push_back(std::move(g.poly));
    BuchbergerOptions with, without;
    without.chain_criterion = false;
    GroebnerBasis g1 = buchberger(gens, with);
    GroebnerBasis g2 = buchberger(gens, without);
    CHECK(g1.gens == g2.gens);

    // same for an elimination run over the extended ring
    VarSet ext = P.vars.extended();
    std::vector<Polynomial> egens;
    Monomial t(ext);
    t[ext.aux_index(0)] = 1;
    for (int i = 1; i <= P.n; ++i) {
      Monomial img(ext);
      img[ext.x_index(i)] = static_cast<Exp>(P.a);
      egens.push_back(Polynomial::variable(ext, ext.y_index(i)) -
                      Polynomial::monomial(ext, img * t));
    }
    CHECK(buchberger(egens, with).gens == buchberger(egens, without).gens);
  }
}

TEST_CASE("completion output verifies as a basis") {
  UniformParams P = reduction_data(3, 7, 3);
  // a generating set that is not yet a basis: two first-order syzygies only
  std::vector<Polynomial> gens{taylor_syzygy(P, 1), taylor_syzygy(P, 2),
                               sylvester_closed(P, {1, 2}).poly};
  BuchbergerStats stats;
  GroebnerBasis gb = buchberger(gens, {}, &stats);
  CHECK(is_groebner_basis(gb.gens).is_basis);

  // the same holds for the elimination oracle's output
  GroebnerBasis oracle = rees_oracle(reduction_data(2, 5, 2));
  CHECK(is_groebner_basis(oracle.gens).is_basis);
}

TEST_CASE("resource caps abort loudly") {
  UniformParams P = reduction_data(4, 9, 2);
  BuchbergerOptions tiny;
  tiny.limits.max_basis = 3;
  CHECK_THROWS_AS(rees_oracle(P, tiny), ResourceCap);

  UniformParams big = reduction_data(5, 20, 9);
  CHECK_THROWS_AS(rees_oracle(big), ResourceCap);  // desk-scale guard
}

TEST_CASE("exact division") {
  VarSet vs(2);
  Polynomial f = p(vs, {{1, "x1*x2*w^2"}, {-1, "y1*y2"}});
  Polynomial g = p(vs, {{1, "x1^2"}, {2, "y1"}});
  CHECK(divide_exact(f * g, f) == g);
  CHECK_THROWS_AS(divide_exact(p(vs, {{1, "x1"}}), p(vs, {{1, "x2"}})), std::domain_error);
}
