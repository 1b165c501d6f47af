#include "alexinvar/report.hpp"

#include <fmt/format.h>

namespace alexinvar {

namespace {

const char* outcome_name(DeltaResult::Outcome o) {
  switch (o) {
    case DeltaResult::Finite:
      return "finite";
    case DeltaResult::Infinite:
      return "infinite";
    case DeltaResult::Conditional:
      return "conditional";
    case DeltaResult::Inconclusive:
      return "inconclusive";
  }
  return "";
}

DeltaResult::Outcome outcome_from(const std::string& s) {
  if (s == "finite") return DeltaResult::Finite;
  if (s == "infinite") return DeltaResult::Infinite;
  if (s == "conditional") return DeltaResult::Conditional;
  if (s == "inconclusive") return DeltaResult::Inconclusive;
  throw InputError("unknown outcome " + s);
}

std::string rule_text(const std::string& cert) {
  if (cert == "syntactic") return "syntactic: the formal sum is zero";
  if (cert == "augmentation") return "augmentation: a group-ring element with nonzero coefficient sum is nonzero";
  if (cert == "abelian-character")
    return "abelian-character: terms with distinct abelianizations cannot cancel";
  if (cert == "partition") return "partition: terms separated by abelian or metabelian images cannot cancel";
  if (cert == "evaluation") return "evaluation: at level 0 words are compared through H1 modulo torsion";
  if (cert == "metabelian-normal-form")
    return "metabelian-normal-form: words compared in G'/G'' as a module over the one-variable Laurent ring";
  if (cert == "declared-assumption") return "declared-assumption: a fact supplied with --assume";
  return cert;
}

Json delta_body(const DeltaResult& r) {
  Json j;
  j["outcome"] = outcome_name(r.outcome);
  if (r.outcome == DeltaResult::Finite) {
    j["value"] = r.value;
    j["spans"] = r.spans;
  }
  if (r.outcome == DeltaResult::Infinite) j["free_rank"] = r.free_rank;
  if (r.outcome == DeltaResult::Inconclusive) j["blocking"] = r.blocking;
  if (r.outcome == DeltaResult::Conditional) {
    Json bs = Json::array();
    for (auto& b : r.branches) {
      Json x;
      x["assumption"] = b.assumption;
      x["result"] = delta_body(b.result);
      bs.push_back(x);
    }
    j["branches"] = bs;
  }
  j["assumptions"] = r.assumptions;
  j["certificates"] = r.certificates;
  j["move_log"] = r.move_log;
  j["replay_ok"] = r.replay_ok;
  j["replayed_runs"] = r.replayed_runs;
  return j;
}

void collect_certs(const DeltaResult& r, std::set<std::string>& out) {
  out.insert(r.certificates.begin(), r.certificates.end());
  for (auto& b : r.branches) collect_certs(b.result, out);
}

}  // namespace

Json delta_to_json(const DeltaResult& r, const std::string& input, int level, const std::vector<BoundCheck>& bounds) {
  Json j;
  j["input"] = input;
  j["level"] = level;
  Json body = delta_body(r);
  for (auto& [k, v] : body.items()) j[k] = v;
  if (!bounds.empty()) {
    Json bs = Json::array();
    for (auto& b : bounds) {
      Json x;
      x["level"] = b.level;
      x["status"] = b.status;
      if (b.delta) x["delta"] = *b.delta;
      x["degree_bound"] = b.degree_bound;
      x["local_bound"] = b.local_bound;
      x["detail"] = b.detail;
      bs.push_back(x);
    }
    j["bounds"] = bs;
  }
  std::set<std::string> certs;
  collect_certs(r, certs);
  Json cites = Json::array();
  for (auto& c : certs) cites.push_back(rule_text(c));
  j["citations"] = cites;
  return j;
}

DeltaResult delta_from_json(const Json& j) {
  DeltaResult r;
  r.outcome = outcome_from(j.at("outcome").get<std::string>());
  if (j.contains("value")) r.value = j["value"].get<int>();
  if (j.contains("spans")) r.spans = j["spans"].get<std::vector<int>>();
  if (j.contains("free_rank")) r.free_rank = j["free_rank"].get<int>();
  if (j.contains("blocking")) r.blocking = j["blocking"].get<std::string>();
  if (j.contains("branches"))
    for (auto& b : j["branches"]) r.branches.push_back({b.at("assumption").get<std::string>(), delta_from_json(b.at("result"))});
  r.assumptions = j.value("assumptions", std::vector<std::string>{});
  r.certificates = j.value("certificates", std::vector<std::string>{});
  r.move_log = j.value("move_log", std::vector<std::string>{});
  r.replay_ok = j.value("replay_ok", true);
  r.replayed_runs = j.value("replayed_runs", 0);
  return r;
}

std::vector<BoundCheck> bounds_from_json(const Json& j) {
  std::vector<BoundCheck> out;
  if (!j.contains("bounds")) return out;
  for (auto& x : j["bounds"]) {
    BoundCheck b;
    b.level = x.at("level").get<int>();
    b.status = x.at("status").get<std::string>();
    if (x.contains("delta")) b.delta = x["delta"].get<int>();
    b.degree_bound = x.at("degree_bound").get<long>();
    b.local_bound = x.at("local_bound").get<long>();
    b.detail = x.at("detail").get<std::string>();
    out.push_back(b);
  }
  return out;
}

Json alexander_to_json(const AlexanderResult& r, const RootsVerdict& roots, const std::string& input) {
  Json j;
  j["input"] = input;
  j["delta"] = r.delta.to_string();
  Json divs = Json::array();
  for (auto& d : r.divisors) divs.push_back(d.to_string());
  j["divisors"] = divs;
  j["free_rank"] = r.free_rank;
  j["delta_at_one"] = rat_str(r.delta_at_one);
  j["t_minus_one_exponent"] = t_minus_one_exponent(r.delta);
  j["cyclotomic"] = roots.cyclotomic;
  j["root_orders"] = roots.orders;
  if (!roots.cyclotomic) j["non_cyclotomic_part"] = roots.residue.to_string();
  j["minors_checked"] = r.minors_checked;
  return j;
}

Json obstruction_to_json(const ObstructionReport& r) {
  Json j;
  j["input"] = r.input;
  j["verdict"] = r.obstructed ? "OBSTRUCTED" : "UNOBSTRUCTED-BY-THESE-TESTS";
  j["reasons"] = r.reasons;
  Json ts = Json::array();
  for (auto& t : r.tests) {
    Json x;
    x["name"] = t.name;
    x["status"] = t.status;
    x["detail"] = t.detail;
    if (!t.certificate.empty()) x["certificate"] = t.certificate;
    ts.push_back(x);
  }
  j["tests"] = ts;
  j["note"] = r.note;
  return j;
}

ObstructionReport obstruction_from_json(const Json& j) {
  ObstructionReport r;
  r.input = j.at("input").get<std::string>();
  r.obstructed = j.at("verdict").get<std::string>() == "OBSTRUCTED";
  r.reasons = j.at("reasons").get<std::vector<std::string>>();
  for (auto& x : j.at("tests"))
    r.tests.push_back({x.at("name").get<std::string>(), x.at("status").get<std::string>(), x.at("detail").get<std::string>(),
                       x.value("certificate", std::string{})});
  r.note = j.at("note").get<std::string>();
  return r;
}

Json support_to_json(const IdealData& I, const std::optional<ContainmentReport>& c, const std::string& input) {
  Json j;
  j["input"] = input;
  j["arity"] = I.arity;
  j["ideal"] = fmt::format("E{}", I.index);
  j["unit_ideal"] = I.unit_ideal;
  j["zero_ideal"] = I.is_zero();
  Json gens = Json::array();
  for (auto& g : I.generators) gens.push_back(g.to_string());
  j["generators"] = gens;
  j["gcd"] = I.gcd.is_zero() ? "0" : I.gcd.to_string();
  if (c) {
    Json x;
    x["holds"] = c->holds;
    x["scanned"] = c->scanned;
    Json sp = Json::array(), ce = Json::array();
    for (auto& p : c->support) sp.push_back(p.to_string());
    for (auto& p : c->counterexamples) ce.push_back(p.to_string());
    x["support"] = sp;
    x["counterexamples"] = ce;
    x["scope"] = c->scope;
    j["containment"] = x;
  }
  return j;
}

namespace {

void render(const Json& j, int indent, std::string& out) {
  std::string pad(indent, ' ');
  for (auto& [k, v] : j.items()) {
    if (v.is_object()) {
      out += pad + k + ":\n";
      render(v, indent + 2, out);
    } else if (v.is_array()) {
      if (v.empty()) continue;
      out += pad + k + ":\n";
      for (auto& e : v) {
        if (e.is_object()) {
          out += pad + "  -\n";
          render(e, indent + 4, out);
        } else {
          out += pad + "  - " + (e.is_string() ? e.get<std::string>() : e.dump()) + "\n";
        }
      }
    } else {
      out += pad + k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::string out;
  render(j, 0, out);
  return out;
}

}  // namespace alexinvar
