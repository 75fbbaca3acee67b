#include "g2rs/json_io.hpp"

#include "g2rs/parse.hpp"

namespace g2rs {

Json to_json(const LaurentPoly& p) {
  Json arr = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json term;
    term["coeff"] = it->second.str();
    Json exps = Json::object();
    for (int i = 0; i < kVarCount; ++i)
      if (it->first[static_cast<std::size_t>(i)] != 0)
        exps[kVarNames[i]] = it->first[static_cast<std::size_t>(i)];
    term["exps"] = exps;
    arr.push_back(term);
  }
  return arr;
}

Json to_json(const RatFunc& c) {
  if (c.is_ring()) return to_json(c.numerator());
  Json j;
  j["num"] = to_json(c.numerator());
  j["den"] = to_json(c.denominator());
  return j;
}

Json to_json(const FreeElement& e) {
  Json arr = Json::array();
  for (const auto& [w, c] : e.terms()) {
    Json t;
    t["word"] = w.str();
    t["coeff"] = to_json(c);
    arr.push_back(t);
  }
  return arr;
}

Json to_json(const PbwMonomial& m) {
  Json j;
  j["x"] = m.x;
  j["k"] = Json::array({m.m, m.n});
  return j;
}

Json to_json(const AlgebraElement& e) {
  Json arr = Json::array();
  for (const auto& [m, c] : e.terms()) {
    Json t;
    t["monomial"] = to_json(m);
    t["text"] = m.str();
    t["coeff"] = to_json(c);
    arr.push_back(t);
  }
  return arr;
}

Json to_json(const TensorElement& t) {
  Json arr = Json::array();
  for (const auto& [k, c] : t.terms()) {
    Json e;
    e["left"] = to_json(k.first);
    e["right"] = to_json(k.second);
    e["coeff"] = to_json(c);
    arr.push_back(e);
  }
  return arr;
}

Json to_json(const ConfluenceReport& r) {
  Json j;
  j["confluent"] = r.confluent;
  Json pairs = Json::array();
  for (const auto& pr : r.pairs) {
    Json p;
    p["overlap"] = pr.pair.overlap.str();
    p["rule_left"] = pr.pair.rule_left;
    p["rule_right"] = pr.pair.rule_right;
    p["joinable"] = pr.joinable;
    if (!pr.joinable) {
      p["left_nf"] = pr.left_nf.str();
      p["right_nf"] = pr.right_nf.str();
    }
    pairs.push_back(p);
  }
  j["pairs"] = pairs;
  return j;
}

Json to_json(const HopfAxiomReport& r) {
  Json j;
  j["max_degree"] = r.max_degree;
  j["monomials_checked"] = r.monomials_checked;
  j["coassociativity"] = r.coassoc_ok;
  j["counit"] = r.counit_ok;
  j["antipode"] = r.antipode_ok;
  j["homomorphism_samples"] = r.hom_ok;
  j["all_ok"] = r.all_axioms_ok();
  j["failures"] = r.failures;
  Json errata = Json::array();
  for (const auto& v : r.antipode_variants) {
    Json e;
    e["generator"] = v.generator;
    e["claimed"] = v.claimed;
    e["derived"] = v.derived;
    e["claimed_satisfies_axiom"] = v.claimed_satisfies_axiom;
    errata.push_back(e);
  }
  j["antipode_variants"] = errata;
  return j;
}

Json to_json(const RelationReport& r) {
  Json j;
  j["all_hold"] = r.all_hold;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json je;
    je["relation"] = e.relation;
    je["holds"] = e.holds;
    if (!e.holds) je["residual"] = e.residual;
    entries.push_back(je);
  }
  j["relations"] = entries;
  return j;
}

Json to_json(const HopfCompatReport& r) {
  Json j;
  j["all_hold"] = r.all_hold;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json je;
    je["generator"] = e.generator;
    je["holds"] = e.holds;
    entries.push_back(je);
  }
  j["generators"] = entries;
  return j;
}

Json to_json(const ConstraintLattice& l) {
  Json j;
  j["rank"] = l.rank();
  j["basis"] = l.basis;
  Json eqs = Json::array();
  for (const auto& e : l.equations) eqs.push_back(e.str() + " = 0");
  j["equations"] = eqs;
  return j;
}

Json to_json(const ReorderAuditReport& r) {
  Json arr = Json::array();
  for (const auto& id : r.identities) {
    Json j;
    j["id"] = id.id;
    j["verdict"] = id.verdict;
    if (!id.interpretable) {
      j["reason"] = id.reason;
    } else {
      j["r_ok"] = id.r_ok;
      j["s_ok"] = id.s_ok;
      j["k_ok"] = id.k_ok;
      j["kernel_confirms_walk"] = id.kernel_walk_agree;
      j["tuples_checked"] = id.tuples_checked;
      if (!id.detail.empty()) j["detail"] = id.detail;
    }
    arr.push_back(j);
  }
  return arr;
}

Json to_json(const EndoParams& p) {
  Json j;
  j["sigma"] = p.swap ? Json::array({2, 1}) : Json::array({1, 2});
  j["lambda"] = Json::array({p.lambda1.str(), p.lambda2.str()});
  j["gamma"] = Json::array({p.gamma1.str(), p.gamma2.str()});
  j["exp1"] = p.exp1;
  j["exp2"] = p.exp2;
  return j;
}

Json to_json(const PermCheckResult& r) {
  Json j;
  j["accepted"] = r.accepted;
  if (r.accepted) {
    j["permutation"] = r.perm_str();
  } else {
    j["reason"] = r.reason;
  }
  return j;
}

EndoParams endo_from_json(const Json& j) {
  EndoParams p;
  if (j.contains("sigma")) {
    auto s = j.at("sigma");
    if (s == Json::array({2, 1}))
      p.swap = true;
    else if (s == Json::array({1, 2}))
      p.swap = false;
    else
      throw std::invalid_argument("sigma must be [1,2] or [2,1]");
  }
  if (j.contains("lambda")) {
    p.lambda1 = parse_scalar(j.at("lambda").at(0).get<std::string>());
    p.lambda2 = parse_scalar(j.at("lambda").at(1).get<std::string>());
  }
  if (j.contains("gamma")) {
    p.gamma1 = parse_scalar(j.at("gamma").at(0).get<std::string>());
    p.gamma2 = parse_scalar(j.at("gamma").at(1).get<std::string>());
  }
  if (j.contains("exp1")) {
    p.exp1[0] = j.at("exp1").at(0).get<int>();
    p.exp1[1] = j.at("exp1").at(1).get<int>();
  }
  if (j.contains("exp2")) {
    p.exp2[0] = j.at("exp2").at(0).get<int>();
    p.exp2[1] = j.at("exp2").at(1).get<int>();
  }
  p.validate();
  return p;
}

IntMatrix int_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("matrix must be a nonempty array of rows");
  std::vector<std::vector<long>> rows;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != j.size())
      throw std::invalid_argument("matrix must be square");
    std::vector<long> r;
    for (const auto& v : row) r.push_back(v.get<long>());
    rows.push_back(std::move(r));
  }
  return IntMatrix::from_rows(rows);
}

}  // namespace g2rs
