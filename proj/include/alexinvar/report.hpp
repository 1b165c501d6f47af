#pragma once
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "alexinvar/alexander.hpp"
#include "alexinvar/catalog.hpp"
#include "alexinvar/higher_order.hpp"
#include "alexinvar/universal.hpp"

namespace alexinvar {

using Json = nlohmann::ordered_json;

struct TestVerdict {
  std::string name;
  std::string status;  // pass | fail | inconclusive | aborted | skipped
  std::string detail;
  std::string certificate;
};

struct ObstructionReport {
  std::string input;
  std::vector<TestVerdict> tests;
  bool obstructed = false;
  std::vector<std::string> reasons;
  std::string note;
};

ObstructionReport obstruct(const Presentation& p, const std::optional<CurveData>& cd, const std::vector<int>& levels,
                           const std::optional<Word>& split = std::nullopt, const EngineOptions& opt = {});

Json delta_to_json(const DeltaResult& r, const std::string& input, int level,
                   const std::vector<BoundCheck>& bounds = {});
DeltaResult delta_from_json(const Json& j);
std::vector<BoundCheck> bounds_from_json(const Json& j);

Json alexander_to_json(const AlexanderResult& r, const RootsVerdict& roots, const std::string& input);
Json obstruction_to_json(const ObstructionReport& r);
ObstructionReport obstruction_from_json(const Json& j);
Json support_to_json(const IdealData& I, const std::optional<ContainmentReport>& c, const std::string& input);

// indented key: value rendering of a report
std::string render_text(const Json& j);

}  // namespace alexinvar
