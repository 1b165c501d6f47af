#include <fmt/format.h>

#include <regex>
#include <sstream>

#include "alexinvar/higher_order.hpp"

namespace alexinvar {

void CurveData::validate() const {
  if (degrees.empty()) throw InputError("curve data needs component degrees");
  int sum = 0;
  for (int di : degrees) {
    if (di < 1) throw InputError("component degree must be positive");
    sum += di;
  }
  if (sum != d) throw InputError(fmt::format("component degrees sum to {}, total degree is {}", sum, d));
  if (s != static_cast<int>(degrees.size())) throw InputError("component count does not match degrees");
  if (genus < 0) throw InputError("genus must be non-negative");
  for (auto& x : singularities) {
    if (x.milnor_number < 0) throw InputError("Milnor number must be non-negative: " + x.label);
    if (x.branches < 1) throw InputError("branch count must be positive: " + x.label);
  }
}

// sing: <label> mu=<int> branches=<int> [delta=<poly>]
std::optional<CurveData> curve_data_from(const Presentation& p) {
  CurveData cd;
  bool any = false;
  static const std::regex sing_re(R"(^\s*(\S+)\s+mu=(-?\d+)\s+branches=(-?\d+)(?:\s+delta=(.+))?\s*$)");
  for (auto& [tag, body] : p.extras) {
    if (tag == "degrees") {
      any = true;
      std::istringstream in(body);
      int v;
      while (in >> v) cd.degrees.push_back(v);
      if (!in.eof()) throw InputError("bad degrees line: " + body);
    } else if (tag == "genus") {
      cd.genus = std::stoi(body);
    } else if (tag == "sing") {
      std::smatch m;
      if (!std::regex_match(body, m, sing_re)) throw InputError("bad sing line: " + body);
      LocalSingularity x;
      x.label = m[1];
      x.milnor_number = std::stoi(m[2]);
      x.branches = std::stoi(m[3]);
      if (m[4].matched) x.local_alexander = parse_uni(m[4]);
      cd.singularities.push_back(x);
    }
  }
  if (!any) return std::nullopt;
  for (int di : cd.degrees) cd.d += di;
  cd.s = static_cast<int>(cd.degrees.size());
  cd.validate();
  return cd;
}

namespace {

void leaf_values(const DeltaResult& r, std::vector<const DeltaResult*>& out) {
  if (r.outcome == DeltaResult::Conditional) {
    for (auto& b : r.branches) leaf_values(b.result, out);
  } else {
    out.push_back(&r);
  }
}

}  // namespace

std::vector<BoundCheck> check_bounds(const std::vector<std::pair<int, DeltaResult>>& results, const CurveData& cd) {
  cd.validate();
  long degree_bound = static_cast<long>(cd.d) * (cd.d - 2);
  long local = 2L * cd.genus + cd.d - cd.l();
  for (auto& x : cd.singularities) local += x.milnor_number + 2L * x.branches;
  std::vector<BoundCheck> out;
  for (auto& [level, r] : results) {
    BoundCheck b;
    b.level = level;
    b.degree_bound = degree_bound;
    b.local_bound = local;
    std::vector<const DeltaResult*> leaves;
    leaf_values(r, leaves);
    bool inconclusive = false, infinite = false;
    int worst = 0;
    for (auto* l : leaves) {
      if (l->outcome == DeltaResult::Infinite) infinite = true;
      else if (l->outcome == DeltaResult::Inconclusive) inconclusive = true;
      else worst = std::max(worst, l->value);
    }
    if (infinite) {
      b.status = "fail";
      b.detail = "delta is infinite; the group is not a plane curve group";
    } else if (inconclusive) {
      b.status = "inconclusive";
      b.detail = "some branch has no certified value";
    } else {
      if (r.outcome == DeltaResult::Finite) b.delta = r.value;
      bool ok = worst <= degree_bound && worst <= local;
      b.status = ok ? "pass" : "fail";
      b.detail = fmt::format("{} <= d(d-2) = {}: {}; {} <= local bound {}: {}", worst, degree_bound,
                             worst <= degree_bound ? "yes" : "no", worst, local, worst <= local ? "yes" : "no");
      if (r.outcome == DeltaResult::Conditional) b.detail += " (maximum over branches)";
    }
    out.push_back(b);
  }
  return out;
}

}  // namespace alexinvar
