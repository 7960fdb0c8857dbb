#include "rees/polynomial.hpp"

#include <algorithm>

namespace rees {

Polynomial::Polynomial(const VarSet& vs, std::vector<Term> terms)
    : vars_(vs), terms_(std::move(terms)) {
  for (const Term& t : terms_)
    if (t.mono.size() != vars_.total())
      throw DimensionMismatch("Polynomial: term from a different ring");
  normalize();
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return lex_compare(vars_, a.mono, b.mono) == Cmp::GT;
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Term& t) { return t.coeff == 0; }),
               merged.end());
  terms_ = std::move(merged);
}

Polynomial Polynomial::constant(const VarSet& vs, Rational c) {
  Polynomial p(vs);
  if (c != 0) p.terms_.push_back({std::move(c), Monomial::one(vs)});
  return p;
}

Polynomial Polynomial::monomial(const VarSet& vs, Monomial m, Rational c) {
  if (m.size() != vs.total()) throw DimensionMismatch("Polynomial::monomial: ring mismatch");
  Polynomial p(vs);
  if (c != 0) p.terms_.push_back({std::move(c), std::move(m)});
  return p;
}

Polynomial Polynomial::variable(const VarSet& vs, int idx, Exp e) {
  Monomial m(vs);
  m[idx] = e;
  return monomial(vs, std::move(m));
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(*this, o);
  Polynomial r(vars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    Cmp c = lex_compare(vars_, terms_[i].mono, o.terms_[j].mono);
    if (c == Cmp::GT) {
      r.terms_.push_back(terms_[i++]);
    } else if (c == Cmp::LT) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({std::move(s), terms_[i].mono});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(*this, o);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const Term& s : terms_)
    for (const Term& t : o.terms_) prod.push_back({s.coeff * t.coeff, s.mono * t.mono});
  return Polynomial(vars_, std::move(prod));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(vars_);
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const {
  if (c == 0) return Polynomial(vars_);
  Polynomial r(vars_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.coeff * c, t.mono * m});
  return r;  // multiplying by a monomial preserves the term order
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading_coeff());
}

Polynomial Polynomial::drop_leading() const {
  Polynomial r = *this;
  if (!r.terms_.empty()) r.terms_.erase(r.terms_.begin());
  return r;
}

Exp Polynomial::max_exponent() const {
  Exp m = 0;
  for (const Term& t : terms_) m = std::max(m, t.mono.max_exponent());
  return m;
}

std::pair<Rational, Monomial> leading_term(const MonomialOrder& order, const Polynomial& p) {
  if (!(order.vars() == p.vars()))
    throw DimensionMismatch("leading_term: order and polynomial ring differ");
  const Term& t = p.leading();
  return {t.coeff, t.mono};
}

long external_degree(const Polynomial& p) {
  long d = 0;
  for (const Term& t : p.terms()) d = std::max(d, external_degree(p.vars(), t.mono));
  return d;
}

bool is_weighted_homogeneous(const WeightVector& w, const Polynomial& p) {
  if (p.is_zero()) return true;
  long d = weighted_degree(p.vars(), w, p.terms().front().mono);
  for (const Term& t : p.terms())
    if (weighted_degree(p.vars(), w, t.mono) != d) return false;
  return true;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (size_t k = 0; k < p.terms().size(); ++k) {
    const Term& t = p.terms()[k];
    bool negative = t.coeff < 0;
    Rational mag = negative ? Rational(-t.coeff) : t.coeff;
    if (k == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono = to_string(p.vars(), t.mono);
    if (mag == 1 && mono != "1")
      out += mono;
    else if (mono == "1")
      out += rational_to_string(mag);
    else
      out += rational_to_string(mag) + "*" + mono;
  }
  return out;
}

}  // namespace rees
