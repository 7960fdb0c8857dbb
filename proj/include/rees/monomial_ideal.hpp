#pragma once

// Minimalized monomial ideals: intersection, colon by a monomial, membership,
// the pure-power primary test, and the predicted colon/initial families of
// the ladder steps.

#include "rees/uniform.hpp"

#include <string>
#include <vector>

namespace rees {

class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  // Divisibility-filters the given generators down to the minimal set.
  static MonomialIdeal make(const VarSet& vs, std::vector<Monomial> gens);

  const VarSet& vars() const { return vars_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;

  // Is every term of f (a polynomial over the same ring) in the ideal?
  bool contains_all_terms(const Polynomial& f) const;

  MonomialIdeal colon(const Monomial& m) const;
  MonomialIdeal scaled(const Monomial& m) const;  // { g*m }

  // Minimal generators are canonical, so this is ideal equality.
  bool operator==(const MonomialIdeal& o) const {
    return vars_ == o.vars_ && gens_ == o.gens_;
  }

 private:
  VarSet vars_;
  std::vector<Monomial> gens_;  // minimal, sorted ascending in the ring order
};

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

struct XPrimaryCheck {
  bool x_only = false;
  bool primary = false;
  std::string witness;  // set on failure
};

// Hypotheses behind the depth certificate: generated in the x-variables only,
// and containing a pure power of every x_i.
XPrimaryCheck check_x_primary(const MonomialIdeal& I, int n);

// Throws std::domain_error("not an x-ideal: ...") when a generator involves
// y or w; otherwise returns the pure-power test.
bool is_mprimary(const MonomialIdeal& I, int n);

// The colon generator families of a consecutive ladder step, enumerated with
// duplicates and then minimalized. `current` empty means the degree-1 stage
// (first-order syzygies only).
MonomialIdeal predicted_colon(const UniformParams& P, const IndexTuple& current,
                              const IndexTuple& next);

// The predicted initial ideal of the ladder ideal spanned by the given tuple
// prefix: Koszul and Taylor leading terms plus one ladder monomial per tuple.
MonomialIdeal predicted_initial_ideal(const UniformParams& P,
                                      const std::vector<IndexTuple>& ladder_prefix);

std::string to_string(const MonomialIdeal& I);

}  // namespace rees
