#pragma once

// Monomial layer for the fixed ring k[x1..xn, y1..yn, w], optionally
// extended by auxiliary elimination variables ranked above everything else.
// One lexicographic order is used throughout:
//
//     aux > w > x_n > ... > x_1 > y_n > ... > y_1.
//
// Exponent vectors are dense, with the index layout
//     0..n-1 -> x1..xn,  n..2n-1 -> y1..yn,  2n -> w,  2n+1.. -> aux.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rees {

using Exp = std::int32_t;

struct ExponentOverflow : std::overflow_error {
  ExponentOverflow() : std::overflow_error("monomial exponent overflow") {}
};

struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NonDivisible : std::domain_error {
  NonDivisible() : std::domain_error("monomial division is not exact") {}
};

inline Exp checked_add_exp(Exp a, Exp b) {
  Exp r;
  if (__builtin_add_overflow(a, b, &r) || r < 0) throw ExponentOverflow();
  return r;
}

inline Exp checked_mul_exp(Exp a, Exp b) {
  Exp r;
  if (__builtin_mul_overflow(a, b, &r) || r < 0) throw ExponentOverflow();
  return r;
}

class VarSet {
 public:
  VarSet() = default;  // inert placeholder; real rings come from the explicit ctor
  explicit VarSet(int n, int aux = 0) : n_(n), aux_(aux) {
    if (n < 2) throw std::invalid_argument("VarSet: at least two x-variables required");
    if (aux < 0 || aux > 3) throw std::invalid_argument("VarSet: bad auxiliary variable count");
  }

  int n() const { return n_; }
  int aux_count() const { return aux_; }
  int total() const { return 2 * n_ + 1 + aux_; }

  // 1-based variable accessors matching the written indices x_i, y_i.
  int x_index(int i) const { check(i); return i - 1; }
  int y_index(int i) const { check(i); return n_ + i - 1; }
  int w_index() const { return 2 * n_; }
  int aux_index(int k = 0) const {
    if (k < 0 || k >= aux_) throw std::out_of_range("VarSet: aux index");
    return 2 * n_ + 1 + k;
  }

  VarSet extended(int extra = 1) const { return VarSet(n_, aux_ + extra); }
  VarSet base() const { return VarSet(n_, 0); }

  std::string var_name(int idx) const;

  bool operator==(const VarSet&) const = default;

 private:
  void check(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("VarSet: variable index out of range");
  }
  int n_ = 0;
  int aux_ = 0;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const VarSet& vs) : exps_(static_cast<size_t>(vs.total()), 0) {}
  Monomial(const VarSet& vs, std::vector<Exp> exps) : exps_(std::move(exps)) {
    if (static_cast<int>(exps_.size()) != vs.total())
      throw DimensionMismatch("Monomial: exponent vector length mismatch");
    for (Exp e : exps_)
      if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
  }

  static Monomial one(const VarSet& vs) { return Monomial(vs); }

  int size() const { return static_cast<int>(exps_.size()); }
  Exp operator[](int idx) const { return exps_[static_cast<size_t>(idx)]; }
  Exp& operator[](int idx) { return exps_[static_cast<size_t>(idx)]; }
  const std::vector<Exp>& exps() const { return exps_; }

  bool is_one() const {
    for (Exp e : exps_)
      if (e != 0) return false;
    return true;
  }

  long total_degree() const {
    long d = 0;
    for (Exp e : exps_) d += e;
    return d;
  }

  Exp max_exponent() const {
    Exp m = 0;
    for (Exp e : exps_)
      if (e > m) m = e;
    return m;
  }

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Exp> exps_;
};

inline void require_same_ring(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw DimensionMismatch("monomials from different rings");
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  Monomial r = a;
  for (int i = 0; i < r.size(); ++i) r[i] = checked_add_exp(r[i], b[i]);
  return r;
}

inline Monomial lcm_monomials(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  Monomial r = a;
  for (int i = 0; i < r.size(); ++i)
    if (b[i] > r[i]) r[i] = b[i];
  return r;
}

inline Monomial gcd_monomials(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  Monomial r = a;
  for (int i = 0; i < r.size(); ++i)
    if (b[i] < r[i]) r[i] = b[i];
  return r;
}

// Does d divide m?
inline bool divides(const Monomial& d, const Monomial& m) {
  require_same_ring(d, m);
  for (int i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

inline Monomial div_monomials(const Monomial& m, const Monomial& d) {
  require_same_ring(m, d);
  Monomial r = m;
  for (int i = 0; i < r.size(); ++i) {
    if (d[i] > r[i]) throw NonDivisible();
    r[i] -= d[i];
  }
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  for (int i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

Cmp lex_compare(const VarSet& vs, const Monomial& a, const Monomial& b);

// The one order in play: lexicographic on aux > w > x_n > ... > x_1 > y_n > ... > y_1.
// Total, multiplicative, with 1 as its minimum.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(const VarSet& vs) : vars_(vs) {}
  const VarSet& vars() const { return vars_; }
  Cmp compare(const Monomial& a, const Monomial& b) const { return lex_compare(vars_, a, b); }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::LT; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::GT; }

 private:
  VarSet vars_;
};

// Quasi-homogeneous weights. Every x-variable weighs 1; wy and ww depend on
// the parameters so that all relation binomials become homogeneous.
struct WeightVector {
  long wy = 1;
  long ww = 1;
  bool operator==(const WeightVector&) const = default;
};

long weighted_degree(const VarSet& vs, const WeightVector& w, const Monomial& m);

// Total degree in the presentation variables y1..yn, w.
long external_degree(const VarSet& vs, const Monomial& m);

bool pure_x(const VarSet& vs, const Monomial& m);

std::string to_string(const VarSet& vs, const Monomial& m);

}  // namespace rees
