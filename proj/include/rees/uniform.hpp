#pragma once

// Everything derived from a parameter triple (n, a, b) of a uniform monomial
// ideal I = (x1^a, ..., xn^a, (x1...xn)^b): reduction data, the syzygy
// binomials, Sylvester forms (closed and iterated), the ordered generator
// ladder of the Rees ideal, and the sequential tuple ordering that drives the
// colon/mapping-cone machinery.

#include "rees/polynomial.hpp"

#include <string>
#include <vector>

namespace rees {

struct InvalidParams : std::invalid_argument {
  explicit InvalidParams(const std::string& what) : std::invalid_argument(what) {}
};

// J: the pure powers (x1^a,...,xn^a) form a minimal reduction (nb >= a).
// Q: they do not (nb < a); the reduction mixes in the product generator.
enum class ReductionCase { J, Q };

struct UniformParams {
  int n = 0;
  int a = 0;
  int b = 0;
  ReductionCase kind = ReductionCase::J;
  int p = 0;  // case J: least p with p*b >= a; unset (0) in case Q
  int r = 0;  // reduction number
  WeightVector weights;
  VarSet vars;

  // External degree of the last ladder form; equals p in case J, n in case Q.
  int top_degree() const { return r + 1; }
};

UniformParams reduction_data(int n, int a, int b);

// Strictly increasing indices drawn from {1..n}.
using IndexTuple = std::vector<int>;

std::string tuple_label(const IndexTuple& t);
void validate_tuple(const UniformParams& P, const IndexTuple& t);

// P(i1,...,ij): product of the x-variables outside the tuple.
Monomial complement_product(const UniformParams& P, const IndexTuple& t);

// K_{i,k} = x_i^a y_k - x_k^a y_i, for 1 <= i < k <= n.
Polynomial koszul_syzygy(const UniformParams& P, int i, int k);

// L_i = x_i^{a-b} w - P(i)^b y_i.
Polynomial taylor_syzygy(const UniformParams& P, int i);

struct SylvesterForm {
  IndexTuple tuple;
  int degree = 0;    // external degree = tuple size
  bool top = false;  // pure w-power leading term (final degree in case J)
  Polynomial poly;
};

SylvesterForm sylvester_closed(const UniformParams& P, const IndexTuple& t);

// One 2x2 content-matrix step: rows (f1, f2), matrix entries, and the
// complete-intersection column (g1, g2) with f = M * g.
struct ContentStep {
  Polynomial f1, f2;
  Polynomial m00, m01, m10, m11;
  Polynomial g1, g2;
};

// Builds the form by iterated content matrices, starting from two first-order
// syzygies and absorbing one further index per step. Each step's content
// identity f = M * g is re-checked on the fly.
SylvesterForm sylvester_iterative(const UniformParams& P, const IndexTuple& t,
                                  std::vector<ContentStep>* trace = nullptr);

enum class GenKind { Koszul, Taylor, Sylvester };

struct ReesGenerator {
  GenKind kind = GenKind::Koszul;
  IndexTuple tuple;  // K: {i,k}; L: {i}; H: its index tuple
  std::string label;
  Polynomial poly;
};

std::vector<ReesGenerator> syzygy_generators(const UniformParams& P);
std::vector<ReesGenerator> rees_generator_system(const UniformParams& P);
std::vector<Polynomial> rees_generators(const UniformParams& P);

// C(n,2) + sum_{d=1}^{r} C(n,d) + 1.
long expected_generator_count(const UniformParams& P);

// Ladder order: all degree-2 tuples lexicographically, then degree 3, ...,
// through degree r, then the single top tuple (1,...,r+1).
std::vector<IndexTuple> sequential_tuples(const UniformParams& P);

// Lexicographically ordered k-subsets of {1..n}.
std::vector<IndexTuple> k_subsets(int n, int k);
std::vector<IndexTuple> k_subsets_of(const std::vector<int>& universe, int k);

// Shape every minimal relation binomial must have: two opposite-unit-
// coefficient terms with fully coprime monomials, no monomial containing both
// w and a y-variable, and squarefree y-exponents. Empty string when it holds.
std::string rees_shape_violation(const VarSet& vs, const Polynomial& f);

struct TranspositionPair {
  IndexTuple a, b;
  bool reduced_to_zero = false;
  std::string residue;
};

struct TranspositionReport {
  bool applicable = false;
  std::string reason;  // set when skipped as vacuous
  std::vector<TranspositionPair> pairs;
  bool all_zero() const;
};

// For p < n in case J the top forms of all p-tuples are equivalent modulo the
// chosen one and the first-order syzygies; checks every adjacent-transposition
// pair of p-tuples by normal-form reduction.
TranspositionReport transposition_identity(const UniformParams& P);

}  // namespace rees
