#include <fmt/format.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "alexinvar/report.hpp"

using namespace alexinvar;

namespace {

struct Source {
  std::string label;
  Presentation p;
  std::optional<CurveData> curve;
  std::string split;
};

Source load(const std::string& src) {
  Source s;
  s.label = src;
  if (src.rfind("catalog:", 0) == 0) {
    auto e = catalog_lookup(src.substr(8));
    s.p = e.presentation;
    s.curve = e.curve;
    s.split = e.split;
    return s;
  }
  std::ifstream in(src);
  if (!in) throw InputError("cannot open " + src);
  std::stringstream ss;
  ss << in.rdbuf();
  s.p = parse_presentation(ss.str());
  s.p.validate();
  s.curve = curve_data_from(s.p);
  return s;
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  std::string t = text;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  int v;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw InputError("expected a comma-separated list of integers: " + text);
  return out;
}

void emit(const Json& j, const std::string& format, const std::string& heading = "") {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    if (!heading.empty()) std::cout << heading << "\n";
    std::cout << render_text(j);
  }
}

std::string delta_heading(const DeltaResult& r) {
  switch (r.outcome) {
    case DeltaResult::Finite:
      return fmt::format("delta: {}", r.value);
    case DeltaResult::Infinite:
      return "delta: inf";
    case DeltaResult::Conditional:
      return "delta: conditional";
    case DeltaResult::Inconclusive:
      return "delta: inconclusive";
  }
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alexander-type invariants and obstructions for finitely presented groups"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  long max_terms = 0, move_budget = 0;
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-terms", max_terms, "term limit for polynomial arithmetic");
  app.add_option("--move-budget", move_budget, "elementary move budget per diagonalization");

  std::string src;
  auto* alex = app.add_subcommand("alexander", "Alexander polynomial of the total linking number cover");
  alex->add_option("src", src, "presentation file or catalog:NAME")->required();

  int level = 0;
  std::string oracle = "auto", split;
  std::vector<std::string> assume;
  auto* delta = app.add_subcommand("delta", "higher-order degree at one level");
  delta->add_option("src", src)->required();
  delta->add_option("--n", level, "level")->required();
  delta->add_option("--oracle", oracle)->check(CLI::IsMember({"auto", "abelian", "evaluation", "metabelian"}));
  delta->add_option("--assume", assume, "w=1@n, w!=1@n, 'w in G(k)', 'w notin G(k)'");
  delta->add_option("--split", split, "splitting word with linking number 1");

  std::string degrees;
  int index = 0;
  long budget = 1000000;
  auto* support = app.add_subcommand("support", "order ideal and support containment on torsion points");
  support->add_option("src", src)->required();
  support->add_option("--degrees", degrees, "component degrees d1,..,ds");
  support->add_option("--index", index, "elementary ideal index");
  support->add_option("--budget", budget, "maximal number of enumerated points");

  std::string point;
  auto* charvar = app.add_subcommand("charvar", "rank-one local system homology at a character");
  charvar->add_option("src", src)->required();
  charvar->add_option("--point", point, "N:k1,..,ks meaning (zeta_N^k1,..,zeta_N^ks)")->required();

  std::string levels = "0,1";
  auto* obs = app.add_subcommand("obstruct", "run the obstruction battery");
  obs->add_option("src", src)->required();
  obs->add_option("--levels", levels, "levels for the higher-order degrees");
  obs->add_option("--split", split, "splitting word with linking number 1");

  std::string action, name;
  auto* cat = app.add_subcommand("catalog", "list or show built-in groups");
  cat->add_option("action", action, "list or show")->required()->check(CLI::IsMember({"list", "show"}));
  cat->add_option("name", name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (max_terms > 0) Limits::max_terms = max_terms;
    EngineOptions opt;
    opt.move_budget = move_budget > 0 ? move_budget : EngineOptions::budget_from_env(opt.move_budget);
    opt.mode = parse_oracle_mode(oracle);

    if (*alex) {
      auto s = load(src);
      auto r = alexander_polynomial(s.p);
      auto rv = r.free_rank == 0 ? zeros_are_roots_of_unity(r.delta) : RootsVerdict{};
      emit(alexander_to_json(r, rv, s.label), format);
    } else if (*delta) {
      auto s = load(src);
      std::string w = split.empty() ? s.split : split;
      if (w.empty()) {
        auto d = default_splitting(s.p);
        if (!d) throw InputError("no generator with linking number 1; pass --split");
        w = s.p.show(*d);
      }
      AssumptionLedger led;
      for (auto& a : assume) led.add(s.p, a);
      auto r = higher_order_degree(s.p, SplittingChoice{s.p.parse_word(w)}, level, led, opt);
      std::vector<BoundCheck> bounds;
      if (s.curve) bounds = check_bounds({{level, r}}, *s.curve);
      auto j = delta_to_json(r, s.label, level, bounds);
      emit(j, format, delta_heading(r));
    } else if (*support) {
      auto s = load(src);
      auto map = component_map(s.p);
      int arity = map.empty() ? 0 : static_cast<int>(map[0].size());
      auto I = order_ideal(multivariable_matrix(s.p), index, s.p.ngens(), arity);
      std::optional<ContainmentReport> c;
      std::vector<int> ds = degrees.empty() ? (s.curve ? s.curve->degrees : std::vector<int>{}) : int_list(degrees);
      if (!ds.empty()) {
        int d = 0;
        for (int x : ds) d += x;
        c = verify_support_containment(I, ds, d, budget);
      }
      emit(support_to_json(I, c, s.label), format);
    } else if (*charvar) {
      auto s = load(src);
      auto lam = parse_character(point);
      Json j;
      j["input"] = s.label;
      j["point"] = lam.to_string();
      int dim = local_system_h1_dim(s.p, lam);
      j["h1_dim"] = dim;
      auto map = component_map(s.p);
      auto I = order_ideal(multivariable_matrix(s.p), 0, s.p.ngens(), static_cast<int>(map[0].size()));
      j["in_support"] = support_member(I, lam);
      emit(j, format);
    } else if (*obs) {
      auto s = load(src);
      std::optional<Word> sp;
      if (!split.empty()) sp = s.p.parse_word(split);
      else if (!s.split.empty()) sp = s.p.parse_word(s.split);
      auto r = obstruct(s.p, s.curve, int_list(levels), sp, opt);
      r.input = s.label;
      emit(obstruction_to_json(r), format);
      return r.obstructed ? 1 : 0;
    } else if (*cat) {
      if (action == "list") {
        Json j = Json::array();
        for (auto& n : catalog_names()) {
          auto e = catalog_lookup(n);
          Json x;
          x["name"] = n;
          x["note"] = e.note;
          j.push_back(x);
        }
        if (format == "json") {
          std::cout << j.dump(2) << "\n";
        } else {
          for (auto& x : j) std::cout << fmt::format("{:<22} {}\n", x["name"].get<std::string>(), x["note"].get<std::string>());
        }
      } else {
        if (name.empty()) throw InputError("catalog show needs a name");
        auto e = catalog_lookup(name);
        Json j;
        j["name"] = e.name;
        j["note"] = e.note;
        j["split"] = e.split;
        j["presentation"] = e.text;
        Json ex = Json::array();
        for (auto& x : e.delta) {
          Json y;
          y["level"] = x.level;
          y["and_above"] = x.and_above;
          y["value"] = x.value;
          y["provenance"] = x.provenance;
          ex.push_back(y);
        }
        j["expected_delta"] = ex;
        if (!e.alexander.empty()) j["expected_alexander"] = e.alexander;
        if (format == "json") {
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << e.text;
          for (auto& x : e.delta)
            std::cout << fmt::format("# expected delta_{}{} = {} ({})\n", x.level, x.and_above ? "+" : "", x.value, x.provenance);
          if (!e.alexander.empty()) std::cout << "# expected Alexander polynomial " << e.alexander << "\n";
        }
      }
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const EngineError& e) {
    std::cerr << "engine abort: " << e.what() << "\n";
    return 3;
  } catch (const TermLimitError& e) {
    std::cerr << "engine abort: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "engine abort: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
