#include <fmt/format.h>

#include "alexinvar/report.hpp"

namespace alexinvar {

namespace {

const char* kProjective =
    "A failed test rules the group out as the fundamental group of an affine plane curve complement in general "
    "position at infinity. The projective complement is the quotient by a central subgroup and has the same "
    "commutator subgroup, so the same tests apply to it.";

}  // namespace

ObstructionReport obstruct(const Presentation& p, const std::optional<CurveData>& cd, const std::vector<int>& levels,
                           const std::optional<Word>& split, const EngineOptions& opt) {
  if (!p.has_linking()) throw InputError("linking data (lk:) required");
  if (!p.primitive()) throw InputError("linking map is not primitive");
  ObstructionReport rep;
  auto add = [&](TestVerdict t) {
    if (t.status == "fail") {
      rep.obstructed = true;
      rep.reasons.push_back(t.detail);
    }
    rep.tests.push_back(std::move(t));
  };
  auto sp = split ? split : default_splitting(p);
  if (!sp) throw InputError("no generator with linking number 1; give a splitting word");
  SplittingChoice sc{*sp};

  // classical pipeline
  std::optional<AlexanderResult> alex;
  try {
    alex = alexander_polynomial(p);
  } catch (const InputError& e) {
    add({"alexander-polynomial", "aborted", e.what(), ""});
  }
  if (alex) {
    if (alex->free_rank > 0) {
      add({"cyclotomicity", "skipped", fmt::format("Alexander module has free rank {}", alex->free_rank), ""});
    } else {
      auto rv = zeros_are_roots_of_unity(alex->delta);
      if (rv.cyclotomic)
        add({"cyclotomicity", "pass", "Alexander polynomial " + alex->delta.to_string() + " has only roots of unity as zeros", ""});
      else
        add({"cyclotomicity", "fail", "Alexander polynomial not cyclotomic",
             fmt::format("delta = {}, factor {} has a zero off the roots of unity", alex->delta.to_string(),
                         rv.residue.to_string())});
      if (cd) {
        auto rd = zeros_are_roots_of_unity(alex->delta, cd->d);
        if (rd.cyclotomic)
          add({"root-order-d", "pass", fmt::format("delta divides a power of t^{} - 1", cd->d), ""});
        else
          add({"root-order-d", "fail", fmt::format("Alexander polynomial has zeros that are not {}-th roots of unity", cd->d),
               fmt::format("delta = {}, leftover {}", alex->delta.to_string(), rd.residue.to_string())});
        int e = t_minus_one_exponent(alex->delta);
        if (e == cd->s - 1)
          add({"t-1-exponent", "pass", fmt::format("(t-1) exponent {} = s - 1", e), ""});
        else
          add({"t-1-exponent", "fail", fmt::format("(t-1) exponent {} differs from s - 1 = {}", e, cd->s - 1),
               "delta = " + alex->delta.to_string()});
        bool have_locals = !cd->singularities.empty();
        for (auto& x : cd->singularities) have_locals &= !x.local_alexander.is_zero();
        if (have_locals) {
          auto dv = check_divisibility(alex->delta, cd->singularities);
          if (dv.divides)
            add({"local-divisibility", "pass", "delta divides the product of the local polynomials",
                 "cofactor " + dv.cofactor->to_string()});
          else
            add({"local-divisibility", "fail", "Alexander polynomial does not divide the product of local polynomials",
                 "delta = " + alex->delta.to_string()});
        }
      }
    }
  }

  // higher-order degrees
  std::vector<std::pair<int, DeltaResult>> finite_runs;
  std::vector<int> lv = levels;
  if (std::find(lv.begin(), lv.end(), 0) == lv.end()) lv.insert(lv.begin(), 0);
  for (int n : lv) {
    std::string name = n == 0 ? "alexander-torsion" : fmt::format("delta-{}-finite", n);
    if (n > 0 && !rep.tests.empty() && rep.tests.back().name == "alexander-torsion" &&
        rep.tests.back().status == "fail") {
      add({name, "skipped", "delta_0 is already infinite", ""});
      continue;
    }
    try {
      auto r = higher_order_degree(p, sc, n, {}, opt);
      switch (r.outcome) {
        case DeltaResult::Finite:
          add({name, "pass", fmt::format("delta_{} = {}", n, r.value), ""});
          finite_runs.emplace_back(n, r);
          break;
        case DeltaResult::Infinite:
          add({name, "fail", fmt::format("delta_{} infinite", n),
               fmt::format("free rank {} after stripping the basepoint summand", r.free_rank)});
          finite_runs.emplace_back(n, r);
          break;
        case DeltaResult::Conditional:
          add({name, "inconclusive", fmt::format("delta_{} depends on undecided facts: {}", n, r.signature()), ""});
          break;
        case DeltaResult::Inconclusive:
          add({name, "inconclusive", r.blocking, ""});
          break;
      }
    } catch (const EngineError& e) {
      add({name, "aborted", e.what(), ""});
    }
  }
  if (cd && !finite_runs.empty()) {
    for (auto& b : check_bounds(finite_runs, *cd)) {
      if (b.status == "fail" && !b.delta) continue;  // infinite values are already reported
      add({fmt::format("bounds-{}", b.level), b.status,
           b.status == "fail" ? fmt::format("delta_{} exceeds a degree bound", b.level) : b.detail,
           b.status == "fail" ? b.detail : ""});
    }
  }
  rep.note = rep.obstructed ? kProjective : "passing these tests does not show the group is a plane curve group";
  return rep;
}

}  // namespace alexinvar
