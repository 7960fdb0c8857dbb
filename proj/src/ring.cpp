#include "rees/ring.hpp"

namespace rees {

std::string VarSet::var_name(int idx) const {
  if (idx < 0 || idx >= total()) throw std::out_of_range("VarSet: index out of range");
  if (idx < n_) return "x" + std::to_string(idx + 1);
  if (idx < 2 * n_) return "y" + std::to_string(idx - n_ + 1);
  if (idx == 2 * n_) return "w";
  static const char* aux_names[] = {"t", "u", "v"};
  return aux_names[idx - 2 * n_ - 1];
}

Cmp lex_compare(const VarSet& vs, const Monomial& a, const Monomial& b) {
  if (a.size() != vs.total() || b.size() != vs.total())
    throw DimensionMismatch("lex_compare: monomials do not live in the given ring");
  auto at = [&](int idx) -> int {
    Exp ea = a[idx], eb = b[idx];
    return (ea > eb) - (ea < eb);
  };
  for (int k = vs.aux_count() - 1; k >= 0; --k)
    if (int c = at(vs.aux_index(k))) return c > 0 ? Cmp::GT : Cmp::LT;
  if (int c = at(vs.w_index())) return c > 0 ? Cmp::GT : Cmp::LT;
  for (int i = vs.n(); i >= 1; --i)
    if (int c = at(vs.x_index(i))) return c > 0 ? Cmp::GT : Cmp::LT;
  for (int i = vs.n(); i >= 1; --i)
    if (int c = at(vs.y_index(i))) return c > 0 ? Cmp::GT : Cmp::LT;
  return Cmp::EQ;
}

long weighted_degree(const VarSet& vs, const WeightVector& w, const Monomial& m) {
  if (m.size() != vs.total()) throw DimensionMismatch("weighted_degree: ring mismatch");
  long d = 0;
  for (int i = 1; i <= vs.n(); ++i) {
    d += m[vs.x_index(i)];
    d += w.wy * m[vs.y_index(i)];
  }
  d += w.ww * m[vs.w_index()];
  return d;
}

long external_degree(const VarSet& vs, const Monomial& m) {
  if (m.size() != vs.total()) throw DimensionMismatch("external_degree: ring mismatch");
  long d = m[vs.w_index()];
  for (int i = 1; i <= vs.n(); ++i) d += m[vs.y_index(i)];
  return d;
}

bool pure_x(const VarSet& vs, const Monomial& m) {
  if (m.size() != vs.total()) throw DimensionMismatch("pure_x: ring mismatch");
  if (m[vs.w_index()] != 0) return false;
  for (int i = 1; i <= vs.n(); ++i)
    if (m[vs.y_index(i)] != 0) return false;
  for (int k = 0; k < vs.aux_count(); ++k)
    if (m[vs.aux_index(k)] != 0) return false;
  return true;
}

std::string to_string(const VarSet& vs, const Monomial& m) {
  if (m.size() != vs.total()) throw DimensionMismatch("to_string: ring mismatch");
  std::string out;
  auto emit = [&](int idx) {
    Exp e = m[idx];
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += vs.var_name(idx);
    if (e != 1) out += "^" + std::to_string(e);
  };
  for (int i = 1; i <= vs.n(); ++i) emit(vs.x_index(i));
  for (int i = 1; i <= vs.n(); ++i) emit(vs.y_index(i));
  emit(vs.w_index());
  for (int k = 0; k < vs.aux_count(); ++k) emit(vs.aux_index(k));
  return out.empty() ? "1" : out;
}

}  // namespace rees
