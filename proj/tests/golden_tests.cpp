#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "acikit/corpus.hpp"
#include "acikit/decompose.hpp"
#include "acikit/report.hpp"

#ifndef ACIK_GOLDEN_DIR
#define ACIK_GOLDEN_DIR "tests/golden"
#endif

using namespace acik;

namespace {

std::string render(const std::string& name) {
  if (name == "rank-headline-7x7.json") {
    ACIMatrix A = corpus_entry("headline-7x7").matrix;
    return emit_report(rank_json(A, rank_set(A)), true);
  }
  if (name == "classify-augment-trap-5x3.json") {
    ACIMatrix A = corpus_entry("augment-trap-5x3").matrix;
    return emit_report(classification_json(A, classify(A)), true);
  }
  if (name == "classify-gadget-min-q3.txt") {
    ACIMatrix A = corpus_entry("gadget-min-q3").matrix;
    return emit_report(classification_json(A, classify(A)), false);
  }
  if (name == "decompose-headline-7x7.json") {
    ACIMatrix A = corpus_entry("headline-7x7").matrix;
    return emit_report(decomposition_json(A, canonical_decomposition(A)), true);
  }
  if (name == "core-irreducible-7x5.json") {
    ACIMatrix A = corpus_entry("irreducible-7x5").matrix;
    return emit_report(core_json(A, extract_core(A)), true);
  }
  FAIL("unknown golden report ", name);
  return {};
}

const char* kNames[] = {
    "rank-headline-7x7.json",      "classify-augment-trap-5x3.json",
    "classify-gadget-min-q3.txt",  "decompose-headline-7x7.json",
    "core-irreducible-7x5.json",
};

}  // namespace

TEST_CASE("reports are deterministic and match the golden files") {
  namespace fs = std::filesystem;
  bool regen = std::getenv("ACIK_REGEN_GOLDEN") != nullptr;
  for (const char* name : kNames) {
    CAPTURE(name);
    std::string once = render(name);
    CHECK(once == render(name));  // byte-identical on repeat
    fs::path file = fs::path(ACIK_GOLDEN_DIR) / name;
    if (regen) {
      std::ofstream out(file, std::ios::binary);
      out << once;
      continue;
    }
    std::ifstream in(file, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file; regenerate with ACIK_REGEN_GOLDEN=1");
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(once == buf.str());
  }
}
