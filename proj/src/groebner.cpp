#include "rees/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace rees {

DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& basis) {
  for (const Polynomial& g : basis) {
    if (g.is_zero()) throw std::invalid_argument("divide: zero divisor");
    require_same_ring(p, g);
  }
  DivisionResult res;
  res.remainder = Polynomial(p.vars());
  res.quotients.assign(basis.size(), Polynomial(p.vars()));
  Polynomial h = p;
  std::vector<Term> rem_terms;
  while (!h.is_zero()) {
    const Term& lt = h.leading();
    bool divided = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (divides(basis[i].leading_monomial(), lt.mono)) {
        Rational c = lt.coeff / basis[i].leading_coeff();
        Monomial q = div_monomials(lt.mono, basis[i].leading_monomial());
        res.quotients[i] = res.quotients[i] + Polynomial::monomial(p.vars(), q, c);
        h = h - basis[i].times_term(c, q);
        divided = true;
        ++res.steps;
        break;
      }
    }
    if (!divided) {
      rem_terms.push_back(lt);
      h = h.drop_leading();
      ++res.steps;
    }
  }
  // Terms were peeled in descending order already.
  res.remainder = Polynomial(p.vars(), std::move(rem_terms));
  return res;
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis) {
  return divide(p, basis).remainder;
}

bool leads_coprime(const Polynomial& f, const Polynomial& g) {
  return coprime(f.leading_monomial(), g.leading_monomial());
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial: zero input");
  Monomial l = lcm_monomials(f.leading_monomial(), g.leading_monomial());
  Monomial qf = div_monomials(l, f.leading_monomial());
  Monomial qg = div_monomials(l, g.leading_monomial());
  return f.times_term(Rational(1) / f.leading_coeff(), qf) -
         g.times_term(Rational(1) / g.leading_coeff(), qg);
}

namespace {

struct PairKey {
  long deg;
  Monomial l;
  int i, j;
};

struct PairKeyLess {
  const VarSet* vs;
  bool operator()(const PairKey& a, const PairKey& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    Cmp c = lex_compare(*vs, a.l, b.l);
    if (c != Cmp::EQ) return c == Cmp::LT;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

void enforce_element_limits(const Polynomial& h, const EngineLimits& lim) {
  if (h.max_exponent() > lim.max_exp)
    throw ResourceCap("exponent cap exceeded (max_exp=" + std::to_string(lim.max_exp) + ")");
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const BuchbergerOptions& opt,
                         BuchbergerStats* stats_out) {
  if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
  const VarSet vs = gens.front().vars();
  std::vector<Polynomial> G;
  G.reserve(gens.size());
  for (const Polynomial& f : gens) {
    if (f.is_zero()) throw std::invalid_argument("buchberger: zero generator");
    if (!(f.vars() == vs)) throw DimensionMismatch("buchberger: mixed rings");
    G.push_back(f.monic());
  }

  BuchbergerStats stats;
  PairKeyLess less{&vs};
  std::set<PairKey, PairKeyLess> queue(less);
  std::set<std::pair<int, int>> done;

  auto lcm_of = [&](int i, int j) {
    return lcm_monomials(G[static_cast<size_t>(i)].leading_monomial(),
                         G[static_cast<size_t>(j)].leading_monomial());
  };
  auto push_pair = [&](int i, int j) {
    Monomial l = lcm_of(i, j);
    queue.insert({l.total_degree(), std::move(l), i, j});
  };

  for (int i = 0; i < static_cast<int>(G.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(G.size()); ++j) push_pair(i, j);

  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    done.insert({pk.i, pk.j});
    ++stats.pairs_considered;

    if (leads_coprime(G[static_cast<size_t>(pk.i)], G[static_cast<size_t>(pk.j)])) continue;

    if (opt.chain_criterion) {
      bool skip = false;
      for (int k = 0; k < static_cast<int>(G.size()) && !skip; ++k) {
        if (k == pk.i || k == pk.j) continue;
        if (!divides(G[static_cast<size_t>(k)].leading_monomial(), pk.l)) continue;
        auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
        if (done.count(key(pk.i, k)) && done.count(key(pk.j, k))) skip = true;
      }
      if (skip) continue;
    }

    Polynomial S = s_polynomial(G[static_cast<size_t>(pk.i)], G[static_cast<size_t>(pk.j)]);
    if (S.is_zero()) continue;
    DivisionResult div = divide(S, G);
    stats.steps += div.steps;
    ++stats.pairs_reduced;
    if (stats.steps > opt.limits.max_steps)
      throw ResourceCap("reduction step budget exceeded (max_steps=" +
                        std::to_string(opt.limits.max_steps) + ")");
    if (div.remainder.is_zero()) continue;

    Polynomial h = div.remainder.monic();
    enforce_element_limits(h, opt.limits);
    if (static_cast<int>(G.size()) + 1 > opt.limits.max_basis)
      throw ResourceCap("basis size cap exceeded (max_basis=" +
                        std::to_string(opt.limits.max_basis) + ")");
    int m = static_cast<int>(G.size());
    G.push_back(std::move(h));
    ++stats.added;
    for (int i = 0; i < m; ++i) push_pair(i, m);
  }

  if (opt.reduce) G = reduce_basis(std::move(G));
  if (stats_out) *stats_out = stats;
  return {vs, std::move(G), opt.reduce};
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> gens) {
  if (gens.empty()) return gens;
  const VarSet vs = gens.front().vars();
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return lex_compare(vs, a.leading_monomial(), b.leading_monomial()) == Cmp::LT;
  });
  std::vector<Polynomial> minimal;
  for (Polynomial& g : gens) {
    bool redundant = false;
    for (const Polynomial& kept : minimal)
      if (divides(kept.leading_monomial(), g.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g.monic());
  }
  // Tail terms sit strictly below the own lead, so reducing against the full
  // minimal set leaves the lead untouched and yields the canonical tails.
  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (const Polynomial& g : minimal) {
    Polynomial lead = Polynomial::monomial(vs, g.leading_monomial(), g.leading_coeff());
    out.push_back(lead + normal_form(g.drop_leading(), minimal));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return lex_compare(vs, a.leading_monomial(), b.leading_monomial()) == Cmp::LT;
  });
  return out;
}

namespace {

std::string pair_kinds(const std::string& la, const std::string& lb) {
  if (la.empty() || lb.empty()) return "";
  auto rank = [](char c) { return c == 'K' ? 0 : c == 'L' ? 1 : 2; };
  char a = la[0], b = lb[0];
  if (rank(a) > rank(b)) std::swap(a, b);
  return std::string{a, b};
}

}  // namespace

GroebnerCertificate is_groebner_basis(const std::vector<Polynomial>& gens,
                                      const std::vector<std::string>& labels) {
  if (gens.empty()) throw std::invalid_argument("is_groebner_basis: empty generator list");
  for (const Polynomial& g : gens)
    if (g.is_zero()) throw std::invalid_argument("is_groebner_basis: zero generator");
  if (!labels.empty() && labels.size() != gens.size())
    throw std::invalid_argument("is_groebner_basis: label list length mismatch");

  GroebnerCertificate cert;
  cert.is_basis = true;
  auto label_of = [&](size_t i) {
    return labels.empty() ? "g" + std::to_string(i) : labels[i];
  };
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      SPairRecord rec;
      rec.i = static_cast<int>(i);
      rec.j = static_cast<int>(j);
      rec.label_i = label_of(i);
      rec.label_j = label_of(j);
      rec.kinds = pair_kinds(rec.label_i, rec.label_j);
      if (leads_coprime(gens[i], gens[j])) {
        rec.outcome = SPairRecord::Outcome::CoprimeSkipped;
      } else {
        Polynomial r = normal_form(s_polynomial(gens[i], gens[j]), gens);
        if (r.is_zero()) {
          rec.outcome = SPairRecord::Outcome::ReducedToZero;
        } else {
          rec.outcome = SPairRecord::Outcome::Remainder;
          rec.residue = to_string(r);
          cert.is_basis = false;
        }
      }
      cert.pairs.push_back(std::move(rec));
    }

  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      for (const Term& t : gens[j].terms())
        if (divides(gens[i].leading_monomial(), t.mono)) {
          cert.interreductions.push_back("lead of " + label_of(i) + " divides a term of " +
                                         label_of(j));
          break;
        }
    }
  return cert;
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> leads;
  leads.reserve(gb.gens.size());
  for (const Polynomial& g : gb.gens) leads.push_back(g.leading_monomial());
  return MonomialIdeal::make(gb.vars, std::move(leads));
}

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb) {
  return normal_form(p, gb.gens).is_zero();
}

bool ideal_equal(const std::vector<Polynomial>& A, const std::vector<Polynomial>& B,
                 const BuchbergerOptions& opt) {
  GroebnerBasis gbA = buchberger(A, opt);
  GroebnerBasis gbB = buchberger(B, opt);
  for (const Polynomial& a : A)
    if (!ideal_member(a, gbB)) return false;
  for (const Polynomial& b : B)
    if (!ideal_member(b, gbA)) return false;
  return true;
}

Polynomial lift_to(const VarSet& ext, const Polynomial& p) {
  const VarSet& base = p.vars();
  if (ext.n() != base.n() || ext.aux_count() < base.aux_count())
    throw DimensionMismatch("lift_to: incompatible rings");
  std::vector<Term> terms;
  terms.reserve(p.terms().size());
  for (const Term& t : p.terms()) {
    Monomial m(ext);
    for (int i = 0; i < t.mono.size(); ++i) m[i] = t.mono[i];
    terms.push_back({t.coeff, std::move(m)});
  }
  return Polynomial(ext, std::move(terms));
}

Polynomial restrict_to(const VarSet& base, const Polynomial& p) {
  const VarSet& ext = p.vars();
  if (ext.n() != base.n() || ext.aux_count() < base.aux_count())
    throw DimensionMismatch("restrict_to: incompatible rings");
  std::vector<Term> terms;
  terms.reserve(p.terms().size());
  for (const Term& t : p.terms()) {
    for (int k = base.aux_count(); k < ext.aux_count(); ++k)
      if (t.mono[ext.aux_index(k)] != 0)
        throw DimensionMismatch("restrict_to: polynomial involves an auxiliary variable");
    Monomial m(base);
    for (int i = 0; i < base.total(); ++i) m[i] = t.mono[i];
    terms.push_back({t.coeff, std::move(m)});
  }
  return Polynomial(base, std::move(terms));
}

std::vector<Polynomial> eliminate_aux(const std::vector<Polynomial>& ext_gens,
                                      const BuchbergerOptions& opt) {
  if (ext_gens.empty()) throw std::invalid_argument("eliminate_aux: empty generator list");
  const VarSet ext = ext_gens.front().vars();
  if (ext.aux_count() == 0) throw std::invalid_argument("eliminate_aux: no auxiliary variable");
  const VarSet base(ext.n(), ext.aux_count() - 1);
  const int top = ext.aux_index(ext.aux_count() - 1);
  GroebnerBasis gb = buchberger(ext_gens, opt);
  std::vector<Polynomial> out;
  for (const Polynomial& g : gb.gens) {
    if (g.leading_monomial()[top] != 0) continue;
    // The dropped variable ranks highest, so an aux-free lead forces an
    // aux-free polynomial.
    out.push_back(restrict_to(base, g));
  }
  return out;
}

GroebnerBasis rees_oracle(const UniformParams& P, const BuchbergerOptions& opt) {
  if (P.n > 4)
    throw ResourceCap("oracle guard: n = " + std::to_string(P.n) +
                      " exceeds the desk-scale envelope (n <= 4)");
  const VarSet ext = P.vars.extended(1);
  Monomial t(ext);
  t[ext.aux_index(P.vars.aux_count())] = 1;

  std::vector<Polynomial> gens;
  for (int i = 1; i <= P.n; ++i) {
    Monomial img(ext);
    img[ext.x_index(i)] = static_cast<Exp>(P.a);
    Polynomial yi = Polynomial::variable(ext, ext.y_index(i));
    gens.push_back(yi - Polynomial::monomial(ext, img * t));
  }
  {
    Monomial img(ext);
    for (int i = 1; i <= P.n; ++i) img[ext.x_index(i)] = static_cast<Exp>(P.b);
    Polynomial w = Polynomial::variable(ext, ext.w_index());
    gens.push_back(w - Polynomial::monomial(ext, img * t));
  }

  std::vector<Polynomial> contracted = eliminate_aux(gens, opt);
  return {P.vars, reduce_basis(std::move(contracted)), true};
}

std::vector<Polynomial> minimal_generators(const GroebnerBasis& gb, const UniformParams& P,
                                           const BuchbergerOptions& opt) {
  std::vector<Polynomial> gens = gb.gens;
  for (const Polynomial& g : gens)
    if (!is_weighted_homogeneous(P.weights, g))
      throw std::logic_error("minimal_generators: basis element is not weighted-homogeneous");
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    long da = weighted_degree(P.vars, P.weights, a.leading_monomial());
    long db = weighted_degree(P.vars, P.weights, b.leading_monomial());
    if (da != db) return da < db;
    return lex_compare(P.vars, a.leading_monomial(), b.leading_monomial()) == Cmp::LT;
  });
  std::vector<Polynomial> kept;
  GroebnerBasis kept_gb;
  for (const Polynomial& g : gens) {
    if (!kept.empty() && ideal_member(g, kept_gb)) continue;
    kept.push_back(g);
    kept_gb = buchberger(kept, opt);
  }
  return kept;
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  DivisionResult d = divide(p, {f});
  if (!d.remainder.is_zero())
    throw std::domain_error("divide_exact: division is not exact");
  return d.quotients.front();
}

ColonResult colon_by_poly_full(const std::vector<Polynomial>& J, const Polynomial& f,
                               const BuchbergerOptions& opt) {
  if (f.is_zero()) throw std::invalid_argument("colon_by_poly: zero divisor");
  if (J.empty()) throw std::invalid_argument("colon_by_poly: empty ideal");
  const VarSet base = f.vars();
  const VarSet ext = base.extended(1);
  Monomial u(ext);
  u[ext.aux_index(base.aux_count())] = 1;
  Polynomial up = Polynomial::monomial(ext, u);

  std::vector<Polynomial> egens;
  egens.reserve(J.size() + 1);
  for (const Polynomial& g : J) {
    require_same_ring(g, f);
    egens.push_back(lift_to(ext, g) * up);
  }
  Polynomial fe = lift_to(ext, f);
  egens.push_back(fe - fe * up);

  ColonResult res;
  res.intersection_gens = eliminate_aux(egens, opt);
  res.colon_gens.reserve(res.intersection_gens.size());
  for (const Polynomial& h : res.intersection_gens)
    res.colon_gens.push_back(divide_exact(h, f).monic());
  res.colon_gens = reduce_basis(std::move(res.colon_gens));
  return res;
}

std::vector<Polynomial> colon_by_poly(const std::vector<Polynomial>& J, const Polynomial& f,
                                      const BuchbergerOptions& opt) {
  return colon_by_poly_full(J, f, opt).colon_gens;
}

std::vector<Polynomial> intersect_with_principal(const std::vector<Polynomial>& J,
                                                 const Polynomial& f,
                                                 const BuchbergerOptions& opt) {
  return colon_by_poly_full(J, f, opt).intersection_gens;
}

}  // namespace rees
