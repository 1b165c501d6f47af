#pragma once
#include <optional>
#include <string>
#include <vector>

#include "alexinvar/higher_order.hpp"

namespace alexinvar {

struct Expectation {
  int level = 0;
  bool and_above = false;  // value also holds at every higher level
  std::string value;       // integer, or "inf"
  std::string provenance;  // stated | summary | derived
};

struct CatalogEntry {
  std::string name;
  std::vector<int> params;
  std::string text;  // presentation file contents
  Presentation presentation;
  std::optional<CurveData> curve;
  std::string split;  // default splitting word
  std::vector<Expectation> delta;
  std::string alexander;  // expected Alexander polynomial, empty if none stored
  std::string note;

  std::optional<Expectation> expected_at(int n) const;
};

// name without parameters ("pencil") plus parameters, or a full name ("pencil3", "artin-I2-5")
CatalogEntry catalog_get(const std::string& name, const std::vector<int>& params = {});
CatalogEntry catalog_lookup(const std::string& full_name);
// the entries used for listings and whole-catalog checks
std::vector<std::string> catalog_names();

// first generator with linking number 1
std::optional<Word> default_splitting(const Presentation& p);

}  // namespace alexinvar
