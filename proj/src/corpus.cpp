#include "acikit/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "acikit/error.hpp"
#include "acikit/text_io.hpp"

#ifndef ACIK_CORPUS_DIR
#define ACIK_CORPUS_DIR "data/corpus"
#endif

namespace acik {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::string corpus_dir() {
  if (const char* env = std::getenv("ACIK_CORPUS_DIR")) return env;
  return ACIK_CORPUS_DIR;
}

std::vector<std::string> corpus_ids() {
  namespace fs = std::filesystem;
  std::vector<std::string> ids;
  fs::path dir(corpus_dir());
  if (!fs::is_directory(dir))
    throw Error(Errc::bad_input, "corpus directory not found: " + dir.string());
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".aci")
      ids.push_back(e.path().stem().string());
  std::sort(ids.begin(), ids.end());
  return ids;
}

CorpusEntry corpus_entry(const std::string& id) {
  std::filesystem::path file = std::filesystem::path(corpus_dir()) / (id + ".aci");
  std::ifstream in(file);
  if (!in) throw Error(Errc::bad_input, "unknown corpus id '" + id + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();

  std::vector<CorpusFact> facts;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::string t = trim(line);
    if (t.rfind("# fact:", 0) != 0) continue;
    std::string body = t.substr(7);
    std::size_t eq = body.find('=');
    if (eq == std::string::npos)
      throw Error(Errc::bad_input, id + ": malformed fact line '" + t + "'");
    facts.push_back(CorpusFact{trim(body.substr(0, eq)), trim(body.substr(eq + 1))});
  }
  return CorpusEntry{id, parse_matrix(text), std::move(facts)};
}

std::vector<CorpusEntry> corpus_instances() {
  std::vector<CorpusEntry> out;
  for (const auto& id : corpus_ids()) out.push_back(corpus_entry(id));
  return out;
}

}  // namespace acik
