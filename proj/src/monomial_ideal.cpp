#include "rees/monomial_ideal.hpp"

#include <algorithm>
#include <set>

namespace rees {

MonomialIdeal MonomialIdeal::make(const VarSet& vs, std::vector<Monomial> gens) {
  for (const Monomial& m : gens)
    if (m.size() != vs.total()) throw DimensionMismatch("MonomialIdeal: ring mismatch");
  // A divisor never ranks above its multiple, so one ascending pass suffices.
  std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) {
    return lex_compare(vs, a, b) == Cmp::LT;
  });
  MonomialIdeal I;
  I.vars_ = vs;
  for (Monomial& m : gens) {
    bool redundant = false;
    for (const Monomial& kept : I.gens_)
      if (divides(kept, m)) {
        redundant = true;
        break;
      }
    if (!redundant) I.gens_.push_back(std::move(m));
  }
  return I;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : gens_)
    if (divides(g, m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  for (const Monomial& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

bool MonomialIdeal::contains_all_terms(const Polynomial& f) const {
  for (const Term& t : f.terms())
    if (!contains(t.mono)) return false;
  return true;
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const Monomial& g : gens_)
    out.push_back(div_monomials(lcm_monomials(g, m), m));
  return make(vars_, std::move(out));
}

MonomialIdeal MonomialIdeal::scaled(const Monomial& m) const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (const Monomial& g : gens_) out.push_back(g * m);
  return make(vars_, std::move(out));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (!(I.vars() == J.vars())) throw DimensionMismatch("intersect: ring mismatch");
  std::vector<Monomial> out;
  out.reserve(I.gens().size() * J.gens().size());
  for (const Monomial& g : I.gens())
    for (const Monomial& h : J.gens()) out.push_back(lcm_monomials(g, h));
  return MonomialIdeal::make(I.vars(), std::move(out));
}

XPrimaryCheck check_x_primary(const MonomialIdeal& I, int n) {
  XPrimaryCheck res;
  const VarSet& vs = I.vars();
  for (const Monomial& g : I.gens())
    if (!pure_x(vs, g)) {
      res.witness = "not an x-ideal: generator " + to_string(vs, g) + " involves y or w";
      return res;
    }
  res.x_only = true;
  for (int i = 1; i <= n; ++i) {
    bool found = false;
    for (const Monomial& g : I.gens()) {
      bool pure_power = g[vs.x_index(i)] > 0;
      for (int k = 1; pure_power && k <= n; ++k)
        if (k != i && g[vs.x_index(k)] > 0) pure_power = false;
      if (pure_power) {
        found = true;
        break;
      }
    }
    if (!found) {
      res.witness = "no pure power of x" + std::to_string(i);
      return res;
    }
  }
  res.primary = true;
  return res;
}

bool is_mprimary(const MonomialIdeal& I, int n) {
  XPrimaryCheck res = check_x_primary(I, n);
  if (!res.x_only) throw std::domain_error(res.witness);
  return res.primary;
}

namespace {

Monomial x_subset_power(const UniformParams& P, const IndexTuple& t, Exp e) {
  Monomial m(P.vars);
  for (int i : t) m[P.vars.x_index(i)] = e;
  return m;
}

Monomial x_power(const UniformParams& P, int i, Exp e) {
  Monomial m(P.vars);
  m[P.vars.x_index(i)] = e;
  return m;
}

std::vector<int> range_vec(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

}  // namespace

MonomialIdeal predicted_colon(const UniformParams& P, const IndexTuple& current,
                              const IndexTuple& next) {
  validate_tuple(P, next);
  if (!current.empty()) validate_tuple(P, current);
  const auto seq = sequential_tuples(P);
  size_t pos = 0;
  if (current.empty()) {
    if (next != seq.front())
      throw std::invalid_argument("predicted_colon: the degree-1 stage is followed by " +
                                  tuple_label(seq.front()));
  } else {
    while (pos < seq.size() && seq[pos] != current) ++pos;
    if (pos + 1 >= seq.size() || !(seq[pos + 1] == next))
      throw std::invalid_argument("predicted_colon: " + tuple_label(next) +
                                  " does not succeed " + tuple_label(current) +
                                  " in the ladder order");
  }

  const int n = P.n, a = P.a, b = P.b;
  std::vector<Monomial> fam;
  const int j_next = static_cast<int>(next.size());
  const bool top_w = (P.kind == ReductionCase::J && j_next == P.p);

  if (top_w) {
    // The succeeding form leads with the pure power w^p; every ladder
    // monomial of lower external degree contributes its x-part.
    for (int s = 1; s <= P.p - 1; ++s)
      for (const IndexTuple& U : k_subsets(n, s))
        fam.push_back(x_subset_power(P, U, static_cast<Exp>(a - s * b)));
  } else if (!current.empty() && static_cast<int>(current.size()) == j_next) {
    // Same presentation degree.
    const int j = j_next;
    const IndexTuple& k = next;
    std::set<int> kset(k.begin(), k.end());
    for (int ks : k) fam.push_back(x_power(P, ks, static_cast<Exp>((j - 1) * b)));
    for (int u = 1; u < k.back(); ++u)
      if (!kset.count(u)) fam.push_back(x_power(P, u, static_cast<Exp>(a - j * b)));
    for (int s = k.back() + 1; s <= n; ++s)
      fam.push_back(x_power(P, s, static_cast<Exp>(a - b)));
    for (int s = 1; s <= j - 1; ++s) {
      for (const IndexTuple& R : k_subsets_of(k, s))
        fam.push_back(x_subset_power(P, R, static_cast<Exp>((j - s) * b)));
      for (int r = 0; r <= s - 1; ++r)
        for (const IndexTuple& Q : k_subsets_of(k, r))
          for (const IndexTuple& D : k_subsets_of(range_vec(k.back() + 1, n), s - r))
            fam.push_back(x_subset_power(P, Q, static_cast<Exp>((j - s) * b)) *
                          x_subset_power(P, D, static_cast<Exp>(a - s * b)));
    }
  } else {
    // The presentation degree jumps by one; next = (1,...,j+1).
    const int j = current.empty() ? 1 : static_cast<int>(current.size());
    for (int s = 1; s <= j + 1; ++s) fam.push_back(x_power(P, s, static_cast<Exp>(j * b)));
    for (int s = j + 2; s <= n; ++s) fam.push_back(x_power(P, s, static_cast<Exp>(a - b)));
    const std::vector<int> head = range_vec(1, j + 1);
    for (int s = 1; s <= j; ++s) {
      for (const IndexTuple& R : k_subsets_of(head, s))
        fam.push_back(x_subset_power(P, R, static_cast<Exp>((j + 1 - s) * b)));
      for (int r = 0; r <= s - 1; ++r)
        for (const IndexTuple& Q : k_subsets_of(head, r))
          for (const IndexTuple& D : k_subsets_of(range_vec(j + 2, n), s - r))
            fam.push_back(x_subset_power(P, Q, static_cast<Exp>((j + 1 - s) * b)) *
                          x_subset_power(P, D, static_cast<Exp>(a - s * b)));
    }
  }
  return MonomialIdeal::make(P.vars, std::move(fam));
}

MonomialIdeal predicted_initial_ideal(const UniformParams& P,
                                      const std::vector<IndexTuple>& ladder_prefix) {
  std::vector<Monomial> fam;
  for (int i = 1; i <= P.n; ++i)
    for (int k = i + 1; k <= P.n; ++k) {
      Monomial m(P.vars);
      m[P.vars.x_index(k)] = static_cast<Exp>(P.a);
      m[P.vars.y_index(i)] = 1;
      fam.push_back(std::move(m));
    }
  for (int i = 1; i <= P.n; ++i) {
    Monomial m(P.vars);
    m[P.vars.x_index(i)] = static_cast<Exp>(P.a - P.b);
    m[P.vars.w_index()] = 1;
    fam.push_back(std::move(m));
  }
  for (const IndexTuple& U : ladder_prefix) {
    validate_tuple(P, U);
    const int j = static_cast<int>(U.size());
    const bool top = (P.kind == ReductionCase::J && j == P.p);
    Monomial m(P.vars);
    if (!top) m = x_subset_power(P, U, static_cast<Exp>(P.a - j * P.b));
    m[P.vars.w_index()] = static_cast<Exp>(j);
    fam.push_back(std::move(m));
  }
  return MonomialIdeal::make(P.vars, std::move(fam));
}

std::string to_string(const MonomialIdeal& I) {
  if (I.is_zero()) return "(0)";
  std::string out = "(";
  for (size_t i = 0; i < I.gens().size(); ++i) {
    if (i) out += ", ";
    out += to_string(I.vars(), I.gens()[i]);
  }
  return out + ")";
}

}  // namespace rees
