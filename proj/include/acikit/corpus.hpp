#pragma once

#include <string>
#include <vector>

#include "acikit/aci.hpp"

namespace acik {

struct CorpusFact {
  std::string key;
  std::string value;
};

struct CorpusEntry {
  std::string id;
  ACIMatrix matrix;
  std::vector<CorpusFact> facts;
};

/// Directory holding the bundled .aci instances. Compile-time default,
/// overridable with the ACIK_CORPUS_DIR environment variable.
std::string corpus_dir();

std::vector<std::string> corpus_ids();

/// Loads one entry by id; throws BadInput for unknown ids.
CorpusEntry corpus_entry(const std::string& id);

std::vector<CorpusEntry> corpus_instances();

}  // namespace acik
