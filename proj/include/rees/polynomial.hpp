#pragma once

// Sparse polynomials over the fixed ring, stored as term lists kept strictly
// descending in the ambient lexicographic order. The workload is dominated by
// binomials, so terms live in a plain sorted vector.

#include "rees/rational.hpp"
#include "rees/ring.hpp"

#include <utility>
#include <vector>

namespace rees {

struct Term {
  Rational coeff;
  Monomial mono;
  bool operator==(const Term&) const = default;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const VarSet& vs) : vars_(vs) {}
  Polynomial(const VarSet& vs, std::vector<Term> terms);

  static Polynomial constant(const VarSet& vs, Rational c);
  static Polynomial monomial(const VarSet& vs, Monomial m, Rational c = Rational(1));
  static Polynomial variable(const VarSet& vs, int idx, Exp e = 1);

  const VarSet& vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& leading() const;
  const Monomial& leading_monomial() const { return leading().mono; }
  const Rational& leading_coeff() const { return leading().coeff; }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;

  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Rational& c, const Monomial& m) const;
  Polynomial times_monomial(const Monomial& m) const { return times_term(Rational(1), m); }
  Polynomial monic() const;
  Polynomial drop_leading() const;

  Exp max_exponent() const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

 private:
  void normalize();
  VarSet vars_;
  std::vector<Term> terms_;  // strictly descending, no zero coefficients
};

inline void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!(a.vars() == b.vars())) throw DimensionMismatch("polynomials from different rings");
}

// Spec-shaped accessor; validates the order against the polynomial's ring.
std::pair<Rational, Monomial> leading_term(const MonomialOrder& order, const Polynomial& p);

long external_degree(const Polynomial& p);
bool is_weighted_homogeneous(const WeightVector& w, const Polynomial& p);

std::string to_string(const Polynomial& p);

}  // namespace rees
