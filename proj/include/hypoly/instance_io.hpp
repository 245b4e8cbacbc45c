#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hypoly/oracle.hpp"

namespace hypoly {

// An instance loaded from disk, together with optional metadata the corpus
// files carry (ground-truth labels used by the verify suites).
struct NamedInstance {
  Instance instance;
  std::string name;
  nlohmann::json labels;  // may be null
};

// Parses the JSON instance format:
//   {"kind":"determinantal","n":3,"matrices":[[[...]],...]}
//   {"kind":"product","n":3,"matrix":[[...]]}
//   {"kind":"trace","n":3,"adjacency":[[...]]}
//   {"kind":"powersum","n":3}
//   {"kind":"explicit","n":3,"terms":[{"exp":[1,1,1],"coef":2.0}]}
// Unknown top-level fields are ignored. Throws std::invalid_argument on
// malformed input.
Instance parse_instance_json(const nlohmann::json& j);

nlohmann::json instance_to_json(const Instance& inst);

NamedInstance load_instance_file(const std::string& path);

// Loads every *.json file in a directory, sorted by filename.
std::vector<NamedInstance> load_corpus(const std::string& dir);

}  // namespace hypoly
