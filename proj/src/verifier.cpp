#include "rees/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <istream>
#include <sstream>

namespace rees {

bool CertReport::all_pass() const {
  if (rejected) return false;
  for (const Claim& c : claims)
    if (c.status == ClaimStatus::Fail) return false;
  return true;
}

bool CertReport::any_fail() const {
  for (const Claim& c : claims)
    if (c.status == ClaimStatus::Fail) return true;
  return false;
}

namespace {

using Body = std::function<std::pair<bool, std::string>()>;

// Runs one claim body, timing it and converting resource caps into skips.
void run_claim(CertReport& rep, const VerifyOptions& opt, const std::string& id,
               const Body& body) {
  Claim c;
  c.id = id;
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto [ok, witness] = body();
    c.status = ok ? ClaimStatus::Pass : ClaimStatus::Fail;
    c.witness = witness;
  } catch (const ResourceCap& e) {
    c.status = ClaimStatus::Skipped;
    c.witness = e.what();
    rep.resource_capped = true;
  }
  auto t1 = std::chrono::steady_clock::now();
  if (opt.record_timings)
    c.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  rep.total_ms += c.ms;
  rep.claims.push_back(std::move(c));
}

CertReport fresh_report(const UniformParams& P) {
  CertReport rep;
  rep.n = P.n;
  rep.a = P.a;
  rep.b = P.b;
  rep.params = P;
  return rep;
}

BuchbergerOptions engine_options(const VerifyOptions& opt) {
  return {opt.limits, opt.chain_criterion, true};
}

std::vector<Polynomial> polys_of(const std::vector<ReesGenerator>& sys) {
  std::vector<Polynomial> out;
  out.reserve(sys.size());
  for (const auto& g : sys) out.push_back(g.poly);
  return out;
}

std::vector<std::string> labels_of(const std::vector<ReesGenerator>& sys) {
  std::vector<std::string> out;
  out.reserve(sys.size());
  for (const auto& g : sys) out.push_back(g.label);
  return out;
}

std::string step_label(const IndexTuple& prev, const IndexTuple& next) {
  return (prev.empty() ? std::string("syz") : tuple_label(prev)) + "->" + tuple_label(next);
}

}  // namespace

CertReport verify_generation(const UniformParams& P, const VerifyOptions& opt) {
  CertReport rep = fresh_report(P);
  const BuchbergerOptions bopt = engine_options(opt);
  const auto sys = rees_generator_system(P);

  run_claim(rep, opt, "gen.count", [&]() -> std::pair<bool, std::string> {
    long expected = expected_generator_count(P);
    if (static_cast<long>(sys.size()) == expected) return {true, ""};
    return {false, "constructed " + std::to_string(sys.size()) + ", expected " +
                       std::to_string(expected)};
  });

  run_claim(rep, opt, "gen.sylvester_iterative", [&]() -> std::pair<bool, std::string> {
    for (int j = 2; j <= P.top_degree(); ++j)
      for (const IndexTuple& t : k_subsets(P.n, j)) {
        SylvesterForm closed = sylvester_closed(P, t);
        SylvesterForm iter = sylvester_iterative(P, t);
        if (!(closed.poly == iter.poly))
          return {false, "mismatch at tuple " + tuple_label(t) + ": closed " +
                             to_string(closed.poly) + " vs iterated " + to_string(iter.poly)};
      }
    return {true, ""};
  });

  run_claim(rep, opt, "gen.homogeneous", [&]() -> std::pair<bool, std::string> {
    for (const auto& g : sys)
      if (!is_weighted_homogeneous(P.weights, g.poly))
        return {false, g.label + " is not weighted-homogeneous: " + to_string(g.poly)};
    return {true, ""};
  });

  run_claim(rep, opt, "gen.shape", [&]() -> std::pair<bool, std::string> {
    for (const auto& g : sys) {
      std::string v = rees_shape_violation(P.vars, g.poly);
      if (!v.empty()) return {false, g.label + ": " + v};
    }
    return {true, ""};
  });

  run_claim(rep, opt, "gen.minimality", [&]() -> std::pair<bool, std::string> {
    for (size_t i = 0; i < sys.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(sys.size() - 1);
      for (size_t k = 0; k < sys.size(); ++k)
        if (k != i) others.push_back(sys[k].poly);
      GroebnerBasis gb = buchberger(others, bopt);
      if (ideal_member(sys[i].poly, gb))
        return {false, sys[i].label + " lies in the ideal of the other generators"};
    }
    return {true, ""};
  });

  // Oracle-backed claims; a resource cap marks each one skipped.
  GroebnerBasis oracle;
  bool have_oracle = false;
  std::string cap_note;
  try {
    oracle = rees_oracle(P, bopt);
    have_oracle = true;
  } catch (const ResourceCap& e) {
    cap_note = e.what();
    rep.resource_capped = true;
  }

  auto oracle_claim = [&](const std::string& id, const Body& body) {
    if (!have_oracle) {
      rep.claims.push_back({id, ClaimStatus::Skipped, cap_note, 0});
      return;
    }
    run_claim(rep, opt, id, body);
  };

  oracle_claim("gen.census", [&]() -> std::pair<bool, std::string> {
    // The minimalized kernel basis must have exactly the closed count, with
    // exactly the predicted leading monomials.
    long expected = expected_generator_count(P);
    if (static_cast<long>(oracle.gens.size()) != expected)
      return {false, "oracle minimalized basis has " + std::to_string(oracle.gens.size()) +
                         " elements, expected " + std::to_string(expected)};
    MonomialIdeal leads = initial_ideal(oracle);
    MonomialIdeal predicted = predicted_initial_ideal(P, sequential_tuples(P));
    if (!(leads == predicted))
      return {false, "oracle leading monomials " + to_string(leads) +
                         " differ from the predicted " + to_string(predicted)};
    return {true, ""};
  });

  oracle_claim("gen.oracle_equal", [&]() -> std::pair<bool, std::string> {
    GroebnerBasis gb_sys = buchberger(polys_of(sys), bopt);
    for (const Polynomial& g : oracle.gens)
      if (!ideal_member(g, gb_sys))
        return {false, "oracle element outside the constructed ideal: " + to_string(g)};
    for (const auto& g : sys)
      if (!ideal_member(g.poly, oracle))
        return {false, g.label + " is outside the oracle ideal"};
    return {true, ""};
  });

  std::vector<Polynomial> mins;
  bool have_mins = false;
  auto oracle_minimal = [&]() -> const std::vector<Polynomial>& {
    if (!have_mins) {
      mins = minimal_generators(oracle, P, bopt);
      have_mins = true;
    }
    return mins;
  };

  oracle_claim("gen.relation_type", [&]() -> std::pair<bool, std::string> {
    long want = P.top_degree();
    long got = 0;
    for (const Polynomial& g : oracle_minimal()) got = std::max(got, external_degree(g));
    if (got != want)
      return {false, "max external degree of oracle minimal generators is " +
                         std::to_string(got) + ", expected " + std::to_string(want)};
    long constructed = 0;
    for (const auto& g : sys) constructed = std::max(constructed, external_degree(g.poly));
    if (constructed != want)
      return {false, "max external degree of constructed generators is " +
                         std::to_string(constructed)};
    return {true, ""};
  });

  oracle_claim("gen.oracle_shape", [&]() -> std::pair<bool, std::string> {
    for (const Polynomial& g : oracle_minimal()) {
      std::string v = rees_shape_violation(P.vars, g);
      if (!v.empty()) return {false, v};
      if (!is_weighted_homogeneous(P.weights, g))
        return {false, "oracle minimal generator not weighted-homogeneous: " + to_string(g)};
    }
    return {true, ""};
  });

  oracle_claim("gen.oracle_proper", [&]() -> std::pair<bool, std::string> {
    if (ideal_member(Polynomial::constant(P.vars, Rational(1)), oracle))
      return {false, "1 lies in the oracle ideal"};
    for (int i = 1; i <= P.n; ++i) {
      Polynomial xi = Polynomial::variable(P.vars, P.vars.x_index(i));
      if (ideal_member(xi, oracle)) return {false, "x" + std::to_string(i) + " lies in the oracle ideal"};
    }
    return {true, ""};
  });

  run_claim(rep, opt, "gen.transposition", [&]() -> std::pair<bool, std::string> {
    TranspositionReport tr = transposition_identity(P);
    if (!tr.applicable) return {true, "skipped: " + tr.reason};
    for (const TranspositionPair& pr : tr.pairs)
      if (!pr.reduced_to_zero)
        return {false, tuple_label(pr.a) + " vs " + tuple_label(pr.b) +
                           " leaves residue " + pr.residue};
    return {true, std::to_string(tr.pairs.size()) + " transposition pairs reduce to zero"};
  });

  return rep;
}

CertReport verify_gb_ladder(const UniformParams& P, const VerifyOptions& opt) {
  CertReport rep = fresh_report(P);
  const auto ladder = sequential_tuples(P);

  std::vector<ReesGenerator> gens = syzygy_generators(P);
  std::vector<IndexTuple> prefix;

  auto check_stage = [&](const std::string& id) {
    run_claim(rep, opt, id, [&]() -> std::pair<bool, std::string> {
      GroebnerCertificate cert = is_groebner_basis(polys_of(gens), labels_of(gens));
      for (const SPairRecord& pr : cert.pairs)
        if (pr.outcome == SPairRecord::Outcome::ReducedToZero)
          ++rep.spair_case_counts[pr.kinds];
      if (!cert.is_basis) {
        for (const SPairRecord& pr : cert.pairs)
          if (pr.outcome == SPairRecord::Outcome::Remainder)
            return {false, "pair (" + pr.label_i + ", " + pr.label_j +
                               ") leaves remainder " + pr.residue};
      }
      GroebnerBasis gb{P.vars, polys_of(gens), false};
      MonomialIdeal got = initial_ideal(gb);
      MonomialIdeal want = predicted_initial_ideal(P, prefix);
      if (!(got == want))
        return {false, "initial ideal " + to_string(got) + " differs from the predicted " +
                           to_string(want)};
      std::string note;
      if (!cert.interreductions.empty())
        note = "interreductions: " + std::to_string(cert.interreductions.size());
      return {true, note};
    });
  };

  check_stage("gb.syzygy");
  for (size_t k = 0; k < ladder.size(); ++k) {
    const IndexTuple& T = ladder[k];
    gens.push_back({GenKind::Sylvester, T, "H" + tuple_label(T), sylvester_closed(P, T).poly});
    prefix.push_back(T);
    bool final_stage = (k + 1 == ladder.size());
    check_stage((final_stage ? std::string("gb.final[") : std::string("gb.prefix[")) +
                tuple_label(T) + "]");
  }
  return rep;
}

CertReport verify_colon_ladder(const UniformParams& P, const VerifyOptions& opt) {
  CertReport rep = fresh_report(P);
  const BuchbergerOptions bopt = engine_options(opt);
  const auto ladder = sequential_tuples(P);

  std::vector<Polynomial> current = polys_of(syzygy_generators(P));
  IndexTuple prev;

  for (const IndexTuple& T : ladder) {
    const std::string step = step_label(prev, T);
    const SylvesterForm next = sylvester_closed(P, T);

    GroebnerBasis gb_prev;
    MonomialIdeal in_prev, B, A;
    ColonResult C;
    bool stage_ready = false;

    run_claim(rep, opt, "colon.threeway[" + step + "]",
              [&]() -> std::pair<bool, std::string> {
      gb_prev = buchberger(current, bopt);
      in_prev = initial_ideal(gb_prev);
      B = in_prev.colon(next.poly.leading_monomial());
      A = predicted_colon(P, prev, T);
      C = colon_by_poly_full(current, next.poly, bopt);
      stage_ready = true;
      if (!(A == B))
        return {false, "predicted " + to_string(A) + " differs from the initial-ideal colon " +
                           to_string(B)};
      for (const Monomial& g : A.gens()) {
        Polynomial prod = next.poly.times_monomial(g);
        if (!normal_form(prod, gb_prev.gens).is_zero())
          return {false, "predicted generator " + to_string(P.vars, g) +
                             " times the next form does not reduce to zero"};
      }
      for (const Polynomial& h : C.colon_gens)
        if (!A.contains_all_terms(h))
          return {false, "computed colon element " + to_string(h) +
                             " is outside the predicted monomial ideal"};
      return {true, ""};
    });

    run_claim(rep, opt, "colon.membership[" + step + "]",
              [&]() -> std::pair<bool, std::string> {
      if (!stage_ready) throw ResourceCap("stage computation unavailable");
      for (const Polynomial& h : C.colon_gens) {
        Polynomial prod = h * next.poly;
        if (!normal_form(prod, gb_prev.gens).is_zero())
          return {false, "colon element " + to_string(h) +
                             " times the next form is outside the stage ideal"};
      }
      return {true, ""};
    });

    run_claim(rep, opt, "colon.initial_containment[" + step + "]",
              [&]() -> std::pair<bool, std::string> {
      if (!stage_ready) throw ResourceCap("stage computation unavailable");
      GroebnerBasis gb_colon{P.vars, C.colon_gens, false};
      MonomialIdeal in_colon = initial_ideal(gb_colon);
      for (const Monomial& g : in_colon.gens())
        if (!B.contains(g))
          return {false, "lead " + to_string(P.vars, g) +
                             " of the computed colon escapes the initial-ideal colon"};
      return {true, ""};
    });

    run_claim(rep, opt, "colon.lemma_i[" + step + "]",
              [&]() -> std::pair<bool, std::string> {
      if (!stage_ready) throw ResourceCap("stage computation unavailable");
      MonomialIdeal lhs = B.scaled(next.poly.leading_monomial());
      MonomialIdeal rhs = intersect(
          in_prev, MonomialIdeal::make(P.vars, {next.poly.leading_monomial()}));
      if (!(lhs == rhs))
        return {false, "colon-times-divisor " + to_string(lhs) +
                           " differs from the intersection " + to_string(rhs)};
      return {true, ""};
    });

    current.push_back(next.poly);
    prev = T;
  }
  return rep;
}

CertReport certify_acm(const UniformParams& P, const VerifyOptions& opt) {
  CertReport rep = verify_colon_ladder(P, opt);
  const bool ladder_ok = rep.all_pass() && !rep.resource_capped;
  const auto ladder = sequential_tuples(P);

  IndexTuple prev;
  bool hypotheses_ok = true;
  for (const IndexTuple& T : ladder) {
    const std::string step = step_label(prev, T);
    run_claim(rep, opt, "acm.colon_hypotheses[" + step + "]",
              [&]() -> std::pair<bool, std::string> {
      if (!ladder_ok) {
        hypotheses_ok = false;
        return {false, "colon ladder equalities did not all pass"};
      }
      MonomialIdeal A = predicted_colon(P, prev, T);
      XPrimaryCheck chk = check_x_primary(A, P.n);
      if (!chk.x_only || !chk.primary) {
        hypotheses_ok = false;
        return {false, chk.witness};
      }
      return {true, ""};
    });
    prev = T;
  }

  run_claim(rep, opt, "acm.certificate", [&]() -> std::pair<bool, std::string> {
    if (!ladder_ok || !hypotheses_ok) return {false, "hypotheses not established"};
    std::string text =
        "each ladder colon is a monomial ideal in the x-variables containing a power of "
        "every variable, so each step's colon has a free resolution of length n = " +
        std::to_string(P.n) + "; iterated mapping cones bound the homological dimension by n+1 = " +
        std::to_string(P.n + 1) + ", hence depth >= " + std::to_string(P.n);
    return {true, text};
  });
  return rep;
}

std::vector<GridPoint> default_grid() {
  std::vector<GridPoint> grid;
  for (int n = 2; n <= 4; ++n)
    for (int b = 1; b <= 3; ++b)
      for (int a = 2 * b + 1; a <= 9; ++a) grid.push_back({n, a, b});
  return grid;
}

std::vector<GridPoint> parse_grid(std::istream& in) {
  std::vector<GridPoint> grid;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    GridPoint pt;
    if (ls >> pt.n >> pt.a >> pt.b) grid.push_back(pt);
    // blank / comment-only lines fall through silently
  }
  return grid;
}

Suite suite_from_string(const std::string& s) {
  if (s == "gen") return Suite::Gen;
  if (s == "gb") return Suite::Gb;
  if (s == "colon") return Suite::Colon;
  if (s == "acm") return Suite::Acm;
  if (s == "all") return Suite::All;
  throw std::invalid_argument("unknown suite: " + s);
}

CertReport run_point(const GridPoint& pt, Suite suite, const VerifyOptions& opt) {
  UniformParams P;
  try {
    P = reduction_data(pt.n, pt.a, pt.b);
  } catch (const std::invalid_argument& e) {
    CertReport rep;
    rep.n = pt.n;
    rep.a = pt.a;
    rep.b = pt.b;
    rep.rejected = true;
    rep.reject_reason = e.what();
    return rep;
  }

  auto merge = [](CertReport& into, CertReport&& from) {
    for (Claim& c : from.claims) into.claims.push_back(std::move(c));
    into.resource_capped = into.resource_capped || from.resource_capped;
    into.total_ms += from.total_ms;
    for (auto& [k, v] : from.spair_case_counts) into.spair_case_counts[k] += v;
  };

  CertReport rep = fresh_report(P);
  if (suite == Suite::Gen || suite == Suite::All) merge(rep, verify_generation(P, opt));
  if (suite == Suite::Gb || suite == Suite::All) merge(rep, verify_gb_ladder(P, opt));
  if (suite == Suite::Colon) merge(rep, verify_colon_ladder(P, opt));
  if (suite == Suite::Acm || suite == Suite::All) merge(rep, certify_acm(P, opt));
  return rep;
}

std::vector<CertReport> run_grid(const std::vector<GridPoint>& grid, Suite suite,
                                 const VerifyOptions& opt, int jobs) {
  std::vector<CertReport> reports(grid.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < grid.size(); ++i) reports[i] = run_point(grid[i], suite, opt);
    return reports;
  }
  std::vector<std::future<CertReport>> futures;
  futures.reserve(grid.size());
  size_t next = 0;
  while (next < grid.size()) {
    size_t batch = std::min(static_cast<size_t>(jobs), grid.size() - next);
    futures.clear();
    for (size_t k = 0; k < batch; ++k) {
      const GridPoint& pt = grid[next + k];
      futures.push_back(std::async(std::launch::async,
                                   [pt, suite, &opt]() { return run_point(pt, suite, opt); }));
    }
    for (size_t k = 0; k < batch; ++k) reports[next + k] = futures[k].get();
    next += batch;
  }
  return reports;
}

std::string summary_table(const std::vector<CertReport>& reports) {
  std::ostringstream out;
  for (const CertReport& rep : reports) {
    out << "(" << rep.n << "," << rep.a << "," << rep.b << ") ";
    if (rep.rejected) {
      out << "rejected: " << rep.reject_reason << "\n";
      continue;
    }
    int pass = 0, fail = 0, skip = 0;
    for (const Claim& c : rep.claims) {
      if (c.status == ClaimStatus::Pass) ++pass;
      if (c.status == ClaimStatus::Fail) ++fail;
      if (c.status == ClaimStatus::Skipped) ++skip;
    }
    out << pass << " pass, " << fail << " fail, " << skip << " skipped\n";
    for (const Claim& c : rep.claims)
      if (c.status != ClaimStatus::Pass)
        out << "    " << (c.status == ClaimStatus::Fail ? "FAIL " : "SKIP ") << c.id
            << (c.witness.empty() ? "" : ": " + c.witness) << "\n";
  }
  return out.str();
}

}  // namespace rees
