#include "rees/uniform.hpp"

#include "rees/groebner.hpp"

#include <algorithm>
#include <set>

namespace rees {

UniformParams reduction_data(int n, int a, int b) {
  if (n < 2) throw InvalidParams("reduction_data: n must be at least 2");
  if (b <= 0) throw InvalidParams("reduction_data: b must be positive");
  if (a <= 2 * b)
    throw InvalidParams("reduction_data: the standing assumption a > 2b fails for a=" +
                        std::to_string(a) + ", b=" + std::to_string(b) +
                        " (the regime a <= 2b has reduction number 1 and is excluded)");
  UniformParams P;
  P.n = n;
  P.a = a;
  P.b = b;
  P.vars = VarSet(n);
  const long nb = static_cast<long>(n) * b;
  if (nb >= a) {
    P.kind = ReductionCase::J;
    P.p = (a + b - 1) / b;  // least p with p*b >= a
    P.r = P.p - 1;
  } else {
    P.kind = ReductionCase::Q;
    P.p = 0;
    P.r = n - 1;
  }
  if (a <= nb)
    P.weights = {1, nb - a + 1};
  else
    P.weights = {a - nb + 1, 1};
  return P;
}

std::string tuple_label(const IndexTuple& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

void validate_tuple(const UniformParams& P, const IndexTuple& t) {
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 1 || t[i] > P.n)
      throw std::out_of_range("index tuple entry out of range: " + tuple_label(t));
    if (i > 0 && t[i] <= t[i - 1])
      throw std::invalid_argument("index tuple not strictly increasing: " + tuple_label(t));
  }
}

Monomial complement_product(const UniformParams& P, const IndexTuple& t) {
  validate_tuple(P, t);
  Monomial m(P.vars);
  size_t pos = 0;
  for (int i = 1; i <= P.n; ++i) {
    if (pos < t.size() && t[pos] == i) {
      ++pos;
      continue;
    }
    m[P.vars.x_index(i)] = 1;
  }
  return m;
}

namespace {

Monomial x_power_product(const UniformParams& P, const IndexTuple& t, Exp e) {
  Monomial m(P.vars);
  for (int i : t) m[P.vars.x_index(i)] = e;
  return m;
}

Monomial y_product(const UniformParams& P, const IndexTuple& t) {
  Monomial m(P.vars);
  for (int i : t) m[P.vars.y_index(i)] = 1;
  return m;
}

Monomial pow(const Monomial& m, Exp e) {
  Monomial r = m;
  for (int i = 0; i < r.size(); ++i) r[i] = checked_mul_exp(r[i], e);
  return r;
}

}  // namespace

Polynomial koszul_syzygy(const UniformParams& P, int i, int k) {
  if (!(1 <= i && i < k && k <= P.n))
    throw std::out_of_range("koszul_syzygy: need 1 <= i < k <= n");
  Monomial lhs(P.vars), rhs(P.vars);
  lhs[P.vars.x_index(i)] = static_cast<Exp>(P.a);
  lhs[P.vars.y_index(k)] = 1;
  rhs[P.vars.x_index(k)] = static_cast<Exp>(P.a);
  rhs[P.vars.y_index(i)] = 1;
  return Polynomial(P.vars, {{Rational(1), lhs}, {Rational(-1), rhs}});
}

Polynomial taylor_syzygy(const UniformParams& P, int i) {
  if (i < 1 || i > P.n) throw std::out_of_range("taylor_syzygy: index out of range");
  Monomial lhs(P.vars);
  lhs[P.vars.x_index(i)] = static_cast<Exp>(P.a - P.b);
  lhs[P.vars.w_index()] = 1;
  Monomial rhs = pow(complement_product(P, {i}), static_cast<Exp>(P.b));
  rhs[P.vars.y_index(i)] = 1;
  return Polynomial(P.vars, {{Rational(1), lhs}, {Rational(-1), rhs}});
}

SylvesterForm sylvester_closed(const UniformParams& P, const IndexTuple& t) {
  validate_tuple(P, t);
  const int j = static_cast<int>(t.size());
  if (j < 2 || j > P.top_degree())
    throw std::out_of_range("sylvester_closed: tuple size " + std::to_string(j) +
                            " outside [2, " + std::to_string(P.top_degree()) + "]");
  SylvesterForm H;
  H.tuple = t;
  H.degree = j;
  H.top = (P.kind == ReductionCase::J && j == P.p);
  if (!H.top) {
    // (x_t)^{a-jb} w^j - P(t)^{jb} y_t
    Monomial lhs = x_power_product(P, t, static_cast<Exp>(P.a - j * P.b));
    lhs[P.vars.w_index()] = static_cast<Exp>(j);
    Monomial rhs = pow(complement_product(P, t), static_cast<Exp>(j * P.b));
    rhs = rhs * y_product(P, t);
    H.poly = Polynomial(P.vars, {{Rational(1), lhs}, {Rational(-1), rhs}});
  } else {
    // w^p - P(t)^{pb} (x_t)^{pb-a} y_t; the x-block crosses over because
    // a <= pb at the top degree.
    Monomial lhs(P.vars);
    lhs[P.vars.w_index()] = static_cast<Exp>(P.p);
    Monomial rhs = pow(complement_product(P, t), static_cast<Exp>(P.p * P.b));
    rhs = rhs * x_power_product(P, t, static_cast<Exp>(P.p * P.b - P.a));
    rhs = rhs * y_product(P, t);
    H.poly = Polynomial(P.vars, {{Rational(1), lhs}, {Rational(-1), rhs}});
  }
  return H;
}

SylvesterForm sylvester_iterative(const UniformParams& P, const IndexTuple& t,
                                  std::vector<ContentStep>* trace) {
  validate_tuple(P, t);
  const int j = static_cast<int>(t.size());
  if (j < 2 || j > P.top_degree())
    throw std::out_of_range("sylvester_iterative: tuple size outside the ladder range");
  const VarSet& vs = P.vars;
  const Exp b = static_cast<Exp>(P.b);

  auto mono_poly = [&](Monomial m, Rational c = Rational(1)) {
    return Polynomial::monomial(vs, std::move(m), std::move(c));
  };
  auto w_power = [&](Exp e) {
    Monomial m(vs);
    m[vs.w_index()] = e;
    return m;
  };
  auto check_content = [&](const ContentStep& s) {
    if (!(s.m00 * s.g1 + s.m01 * s.g2 == s.f1) || !(s.m10 * s.g1 + s.m11 * s.g2 == s.f2))
      throw std::logic_error("sylvester_iterative: content identity failed");
    if (trace) trace->push_back(s);
  };

  // Degree 2 from the two first-order syzygies, relative to (x_l^b, x_i^b).
  const int l0 = t[0], i0 = t[1];
  IndexTuple cur{l0, i0};
  Monomial Pli = complement_product(P, cur);
  ContentStep s2;
  s2.f1 = taylor_syzygy(P, l0);
  s2.f2 = taylor_syzygy(P, i0);
  {
    Monomial m00(vs);
    m00[vs.x_index(l0)] = static_cast<Exp>(P.a - 2 * P.b);
    m00[vs.w_index()] = 1;
    Monomial m11(vs);
    m11[vs.x_index(i0)] = static_cast<Exp>(P.a - 2 * P.b);
    m11[vs.w_index()] = 1;
    Monomial m01 = pow(Pli, b);
    m01[vs.y_index(l0)] = 1;
    Monomial m10 = pow(Pli, b);
    m10[vs.y_index(i0)] = 1;
    s2.m00 = mono_poly(m00);
    s2.m01 = mono_poly(m01, Rational(-1));
    s2.m10 = mono_poly(m10, Rational(-1));
    s2.m11 = mono_poly(m11);
    Monomial g1(vs), g2(vs);
    g1[vs.x_index(l0)] = b;
    g2[vs.x_index(i0)] = b;
    s2.g1 = mono_poly(g1);
    s2.g2 = mono_poly(g2);
  }
  check_content(s2);
  Polynomial H = s2.m00 * s2.m11 - s2.m01 * s2.m10;

  for (int step = 2; step < j; ++step) {
    const int l = t[static_cast<size_t>(step)];
    const int jj = step;  // current external degree
    IndexTuple next = cur;
    next.push_back(l);  // t is increasing, so next stays ordered
    Monomial Pnext = complement_product(P, next);
    const bool top_step = (P.kind == ReductionCase::J && jj + 1 == P.p);

    ContentStep s;
    s.f1 = taylor_syzygy(P, l);
    s.f2 = H;
    if (!top_step) {
      // relative to (x_l^{jb}, (x_cur)^b)
      Monomial m00(vs);
      m00[vs.x_index(l)] = static_cast<Exp>(P.a - (jj + 1) * P.b);
      m00[vs.w_index()] = 1;
      Monomial m01 = pow(Pnext, b);
      m01[vs.y_index(l)] = 1;
      Monomial m10 = pow(Pnext, static_cast<Exp>(jj * P.b));
      m10 = m10 * y_product(P, cur);
      Monomial m11 = x_power_product(P, cur, static_cast<Exp>(P.a - (jj + 1) * P.b));
      m11[vs.w_index()] = static_cast<Exp>(jj);
      s.m00 = mono_poly(m00);
      s.m01 = mono_poly(m01, Rational(-1));
      s.m10 = mono_poly(m10, Rational(-1));
      s.m11 = mono_poly(m11);
      Monomial g1(vs);
      g1[vs.x_index(l)] = static_cast<Exp>(jj * P.b);
      s.g1 = mono_poly(g1);
      s.g2 = mono_poly(x_power_product(P, cur, b));
    } else {
      // top degree: relative to (x_l^{a-b}, (x_cur)^{a-(p-1)b})
      Monomial m01 = pow(Pnext, b);
      m01 = m01 * x_power_product(P, cur, static_cast<Exp>(P.p * P.b - P.a));
      m01[vs.y_index(l)] = 1;
      Monomial m10 = pow(Pnext, static_cast<Exp>((P.p - 1) * P.b));
      m10[vs.x_index(l)] = checked_add_exp(m10[vs.x_index(l)],
                                           static_cast<Exp>(P.p * P.b - P.a));
      m10 = m10 * y_product(P, cur);
      s.m00 = mono_poly(w_power(1));
      s.m01 = mono_poly(m01, Rational(-1));
      s.m10 = mono_poly(m10, Rational(-1));
      s.m11 = mono_poly(w_power(static_cast<Exp>(P.p - 1)));
      Monomial g1(vs);
      g1[vs.x_index(l)] = static_cast<Exp>(P.a - P.b);
      s.g1 = mono_poly(g1);
      s.g2 = mono_poly(x_power_product(P, cur, static_cast<Exp>(P.a - (P.p - 1) * P.b)));
    }
    check_content(s);
    H = s.m00 * s.m11 - s.m01 * s.m10;
    cur = next;
  }

  SylvesterForm out;
  out.tuple = t;
  out.degree = j;
  out.top = (P.kind == ReductionCase::J && j == P.p);
  out.poly = H;
  return out;
}

std::vector<IndexTuple> k_subsets_of(const std::vector<int>& universe, int k) {
  std::vector<IndexTuple> out;
  if (k < 0 || k > static_cast<int>(universe.size())) return out;
  IndexTuple cur;
  auto rec = [&](auto&& self, size_t start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (size_t i = start; i < universe.size(); ++i) {
      cur.push_back(universe[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<IndexTuple> k_subsets(int n, int k) {
  std::vector<int> universe(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) universe[static_cast<size_t>(i)] = i + 1;
  return k_subsets_of(universe, k);
}

std::vector<ReesGenerator> syzygy_generators(const UniformParams& P) {
  std::vector<ReesGenerator> out;
  for (int i = 1; i <= P.n; ++i)
    for (int k = i + 1; k <= P.n; ++k)
      out.push_back({GenKind::Koszul, {i, k}, "K" + tuple_label({i, k}), koszul_syzygy(P, i, k)});
  for (int i = 1; i <= P.n; ++i)
    out.push_back({GenKind::Taylor, {i}, "L(" + std::to_string(i) + ")", taylor_syzygy(P, i)});
  return out;
}

std::vector<ReesGenerator> rees_generator_system(const UniformParams& P) {
  std::vector<ReesGenerator> out = syzygy_generators(P);
  for (const IndexTuple& t : sequential_tuples(P))
    out.push_back({GenKind::Sylvester, t, "H" + tuple_label(t), sylvester_closed(P, t).poly});
  return out;
}

std::vector<Polynomial> rees_generators(const UniformParams& P) {
  std::vector<Polynomial> out;
  for (auto& g : rees_generator_system(P)) out.push_back(std::move(g.poly));
  return out;
}

long expected_generator_count(const UniformParams& P) {
  auto binom = [](int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  long count = binom(P.n, 2) + 1;
  for (int d = 1; d <= P.r; ++d) count += binom(P.n, d);
  return count;
}

std::vector<IndexTuple> sequential_tuples(const UniformParams& P) {
  std::vector<IndexTuple> out;
  for (int d = 2; d <= P.r; ++d)
    for (IndexTuple& t : k_subsets(P.n, d)) out.push_back(std::move(t));
  IndexTuple top(static_cast<size_t>(P.top_degree()));
  for (int i = 0; i < P.top_degree(); ++i) top[static_cast<size_t>(i)] = i + 1;
  out.push_back(std::move(top));
  return out;
}

std::string rees_shape_violation(const VarSet& vs, const Polynomial& f) {
  if (f.term_count() != 2) return "not a binomial: " + to_string(f);
  const Term& t1 = f.terms()[0];
  const Term& t2 = f.terms()[1];
  if (t1.coeff * t2.coeff != -1)
    return "coefficients are not opposite units: " + to_string(f);
  if (!coprime(t1.mono, t2.mono))
    return "the two monomials share a common factor: " + to_string(f);
  for (const Term& t : f.terms()) {
    bool has_w = t.mono[vs.w_index()] > 0;
    bool has_y = false;
    for (int i = 1; i <= vs.n(); ++i) {
      Exp e = t.mono[vs.y_index(i)];
      if (e > 1) return "y-exponent exceeds 1 in " + to_string(f);
      if (e > 0) has_y = true;
    }
    if (has_w && has_y) return "a monomial carries both w and a y-variable: " + to_string(f);
  }
  return "";
}

bool TranspositionReport::all_zero() const {
  for (const TranspositionPair& p : pairs)
    if (!p.reduced_to_zero) return false;
  return true;
}

TranspositionReport transposition_identity(const UniformParams& P) {
  TranspositionReport rep;
  if (P.kind != ReductionCase::J) {
    rep.reason = "vacuous: the pure powers are not a reduction (nb < a)";
    return rep;
  }
  if (P.p >= P.n) {
    rep.reason = "vacuous: p = n, a single top form exists";
    return rep;
  }
  rep.applicable = true;

  IndexTuple fixed(static_cast<size_t>(P.p));
  for (int i = 0; i < P.p; ++i) fixed[static_cast<size_t>(i)] = i + 1;
  std::vector<Polynomial> basis;
  for (auto& g : syzygy_generators(P)) basis.push_back(std::move(g.poly));
  basis.push_back(sylvester_closed(P, fixed).poly);
  GroebnerBasis gb = buchberger(basis);

  for (const IndexTuple& A : k_subsets(P.n, P.p)) {
    std::set<int> in(A.begin(), A.end());
    for (int v : A) {
      if (v + 1 > P.n || in.count(v + 1)) continue;
      IndexTuple B;
      for (int x : A)
        if (x != v) B.push_back(x);
      B.push_back(v + 1);
      std::sort(B.begin(), B.end());
      Polynomial diff = sylvester_closed(P, B).poly - sylvester_closed(P, A).poly;
      Polynomial res = normal_form(diff, gb.gens);
      rep.pairs.push_back({A, B, res.is_zero(), to_string(res)});
    }
  }
  return rep;
}

}  // namespace rees
