#pragma once

// Division, S-polynomials, Buchberger completion, basis verification with a
// per-pair certificate, initial ideals, elimination, the brute-force kernel
// oracle, and colon ideals of polynomial ideals via one auxiliary variable.

#include "rees/monomial_ideal.hpp"
#include "rees/polynomial.hpp"
#include "rees/uniform.hpp"

#include <string>
#include <vector>

namespace rees {

struct ResourceCap : std::runtime_error {
  explicit ResourceCap(const std::string& what) : std::runtime_error(what) {}
};

struct EngineLimits {
  int max_basis = 4000;       // basis elements per completion run
  Exp max_exp = 400;          // largest exponent tolerated in a basis element
  long max_steps = 50000000;  // reduction steps per completion run
};

struct BuchbergerOptions {
  EngineLimits limits;
  bool chain_criterion = true;  // the coprime criterion is always applied
  bool reduce = true;           // return the canonical reduced basis
};

struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> quotients;  // aligned with the divisor list
  long steps = 0;
};

// Multivariate division: remainder has no term divisible by any divisor lead;
// p == sum_i quotients[i]*basis[i] + remainder exactly.
DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& basis);
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);
bool leads_coprime(const Polynomial& f, const Polynomial& g);

struct GroebnerBasis {
  VarSet vars;
  std::vector<Polynomial> gens;
  bool reduced = false;
};

struct BuchbergerStats {
  int added = 0;
  long pairs_considered = 0;
  long pairs_reduced = 0;
  long steps = 0;
};

GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         const BuchbergerOptions& opt = {},
                         BuchbergerStats* stats = nullptr);

// Canonical reduced form: minimal monic leads, fully reduced tails, sorted
// ascending by leading monomial.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> gens);

struct SPairRecord {
  int i = 0, j = 0;
  std::string label_i, label_j;
  std::string kinds;  // e.g. "KL" when labels carry generator kinds
  enum class Outcome { CoprimeSkipped, ReducedToZero, Remainder } outcome =
      Outcome::CoprimeSkipped;
  std::string residue;  // rendering of a nonzero remainder
};

struct GroebnerCertificate {
  bool is_basis = false;
  std::vector<SPairRecord> pairs;
  std::vector<std::string> interreductions;  // informational only
};

// Checks every pair: coprime-led pairs are skipped (and recorded as such),
// all others must reduce to zero against the full list.
GroebnerCertificate is_groebner_basis(const std::vector<Polynomial>& gens,
                                      const std::vector<std::string>& labels = {});

MonomialIdeal initial_ideal(const GroebnerBasis& gb);

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb);
bool ideal_equal(const std::vector<Polynomial>& A, const std::vector<Polynomial>& B,
                 const BuchbergerOptions& opt = {});

Polynomial lift_to(const VarSet& ext, const Polynomial& p);
Polynomial restrict_to(const VarSet& base, const Polynomial& p);

// Groebner basis of ext_gens ∩ k[base ring]: the auxiliary block ranks above
// everything, so the aux-free part of a basis generates the contraction.
std::vector<Polynomial> eliminate_aux(const std::vector<Polynomial>& ext_gens,
                                      const BuchbergerOptions& opt = {});

// Kernel of S -> R[I t], y_i -> x_i^a t, w -> (x1...xn)^b t, computed by
// eliminating t from the graph ideal. Returns the reduced basis of the
// contraction. Guarded to n <= 4.
GroebnerBasis rees_oracle(const UniformParams& P, const BuchbergerOptions& opt = {});

// Greedy graded extraction of a minimal generating set from a basis of a
// weighted-homogeneous ideal.
std::vector<Polynomial> minimal_generators(const GroebnerBasis& gb, const UniformParams& P,
                                           const BuchbergerOptions& opt = {});

Polynomial divide_exact(const Polynomial& p, const Polynomial& f);

struct ColonResult {
  std::vector<Polynomial> colon_gens;         // a Groebner basis of (J : f)
  std::vector<Polynomial> intersection_gens;  // a Groebner basis of J ∩ (f)
};

// J ∩ (f) via one homogenizing auxiliary variable u ranked maximal,
// (u·J, (1-u)·f) ∩ base, then exact division by f.
ColonResult colon_by_poly_full(const std::vector<Polynomial>& J, const Polynomial& f,
                               const BuchbergerOptions& opt = {});
std::vector<Polynomial> colon_by_poly(const std::vector<Polynomial>& J, const Polynomial& f,
                                      const BuchbergerOptions& opt = {});
std::vector<Polynomial> intersect_with_principal(const std::vector<Polynomial>& J,
                                                 const Polynomial& f,
                                                 const BuchbergerOptions& opt = {});

}  // namespace rees
