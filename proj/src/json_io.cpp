#include "rees/json_io.hpp"

namespace rees {

Json poly_to_json(const Polynomial& p) {
  if (p.vars().aux_count() != 0)
    throw std::invalid_argument("poly_to_json: auxiliary variables are not serialized");
  Json terms = Json::array();
  for (const Term& t : p.terms()) {
    Json e = Json::array();
    for (Exp x : t.mono.exps()) e.push_back(x);
    terms.push_back(Json{{"c", rational_to_string(t.coeff)}, {"e", std::move(e)}});
  }
  return Json{{"vars", Json{{"n", p.vars().n()}}}, {"terms", std::move(terms)}};
}

Polynomial poly_from_json(const Json& j) {
  if (!j.contains("vars") || !j["vars"].contains("n"))
    throw std::invalid_argument("poly_from_json: missing vars.n");
  VarSet vs(j["vars"]["n"].get<int>());
  std::vector<Term> terms;
  for (const Json& tj : j.at("terms")) {
    Rational c = rational_from_string(tj.at("c").get<std::string>());
    if (c == 0) throw std::invalid_argument("poly_from_json: zero coefficient");
    const Json& ej = tj.at("e");
    if (static_cast<int>(ej.size()) != vs.total())
      throw std::invalid_argument("poly_from_json: exponent vector length mismatch");
    std::vector<Exp> exps;
    exps.reserve(ej.size());
    for (const Json& x : ej) exps.push_back(x.get<Exp>());
    terms.push_back({std::move(c), Monomial(vs, std::move(exps))});
  }
  return Polynomial(vs, std::move(terms));
}

Json params_to_json(const UniformParams& P) {
  Json j;
  j["n"] = P.n;
  j["a"] = P.a;
  j["b"] = P.b;
  j["case"] = (P.kind == ReductionCase::J) ? "J" : "Q";
  if (P.kind == ReductionCase::J)
    j["p"] = P.p;
  else
    j["p"] = nullptr;
  j["r"] = P.r;
  return j;
}

Json report_to_json(const CertReport& rep) {
  Json j;
  if (rep.rejected) {
    j["params"] = Json{{"n", rep.n}, {"a", rep.a}, {"b", rep.b},
                       {"case", nullptr}, {"p", nullptr}, {"r", nullptr}};
    j["claims"] = Json::array(
        {Json{{"id", "params"}, {"status", "fail"}, {"witness", rep.reject_reason}, {"ms", 0}}});
    return j;
  }
  j["params"] = params_to_json(rep.params);
  Json claims = Json::array();
  for (const Claim& c : rep.claims) {
    Json cj;
    cj["id"] = c.id;
    cj["status"] = c.status == ClaimStatus::Pass   ? "pass"
                   : c.status == ClaimStatus::Fail ? "fail"
                                                   : "skipped";
    if (!c.witness.empty()) cj["witness"] = c.witness;
    cj["ms"] = c.ms;
    claims.push_back(std::move(cj));
  }
  j["claims"] = std::move(claims);
  return j;
}

}  // namespace rees
