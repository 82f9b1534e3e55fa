// Batch front end: rank / classify / decompose / core / geometry / corpus / gen.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "acikit/corpus.hpp"
#include "acikit/decompose.hpp"
#include "acikit/error.hpp"
#include "acikit/geometry.hpp"
#include "acikit/report.hpp"
#include "acikit/text_io.hpp"

namespace {

using namespace acik;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::bad_input, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ACIMatrix load_input(const std::string& input) {
  if (input.rfind("corpus:", 0) == 0) return corpus_entry(input.substr(7)).matrix;
  return parse_matrix(read_file(input));
}

struct Options {
  std::string input;
  std::string format = "structured";
  std::int64_t budget_completions = Budgets{}.completions;
  std::int64_t budget_vectors = Budgets{}.vectors;
  std::int64_t budget_subsets = Budgets{}.subsets;
  std::uint64_t seed = 0;
  bool verify = false;

  Budgets budgets() const { return Budgets{budget_completions, budget_vectors, budget_subsets}; }
  bool structured() const { return format == "structured"; }
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--budget-completions", o.budget_completions, "completion enumeration cap");
  cmd->add_option("--budget-vectors", o.budget_vectors, "augmenting-vector search cap");
  cmd->add_option("--budget-subsets", o.budget_subsets, "column-subset search cap");
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_flag("--verify", o.verify, "re-check every witness before printing");
  cmd->add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"text", "structured"}));
}

void verify_classification(const ACIMatrix& A, const Classification& c, const Budgets& b) {
  if (!c.constant) return;
  int rho = *c.constant;
  if (c.deletable_row && !has_constant_rank(A.drop_row(*c.deletable_row), rho, b))
    throw Error(Errc::verification_failed, "deletable row witness");
  if (c.deletable_column && !has_constant_rank(A.drop_col(*c.deletable_column), rho, b))
    throw Error(Errc::verification_failed, "deletable column witness");
  if (c.augmenting_vector && !has_constant_rank(A.augment(*c.augmenting_vector), rho + 1, b))
    throw Error(Errc::verification_failed, "augmenting vector witness");
}

void verify_core(const ACIMatrix& A, const CoreCertificate& c, const Budgets& b) {
  ACIMatrix moved = apply_equivalence(A, c.witness);
  std::vector<int> rows(c.rows), cols(c.cols);
  for (int i = 0; i < c.rows; ++i) rows[i] = i;
  for (int j = 0; j < c.cols; ++j) cols[j] = j;
  if (!(moved.submatrix(rows, cols) == c.core))
    throw Error(Errc::verification_failed, "core block mismatch");
  Classification cc = classify(c.core, b);
  if (!cc.completely_irreducible || cc.constant != c.rho)
    throw Error(Errc::verification_failed, "core is not completely irreducible");
}

int run_rank(const Options& o) {
  ACIMatrix A = load_input(o.input);
  RankSummary s = rank_set(A, o.budgets());
  if (o.verify) {
    RankSummary ex = rank_set_exhaustive(A, o.budgets());
    if (ex.rank_set != s.rank_set) throw Error(Errc::verification_failed, "rank set mismatch");
  }
  std::cout << emit_report(rank_json(A, s), o.structured());
  return 0;
}

int run_classify(const Options& o) {
  ACIMatrix A = load_input(o.input);
  Classification c = classify(A, o.budgets());
  if (o.verify) verify_classification(A, c, o.budgets());
  std::cout << emit_report(classification_json(A, c), o.structured());
  return 0;
}

int run_decompose(const Options& o) {
  ACIMatrix A = load_input(o.input);
  BlockDecomposition d = canonical_decomposition(A, o.budgets());
  if (o.verify) verify_decomposition(A, d, o.budgets());
  std::cout << emit_report(decomposition_json(A, d), o.structured());
  return 0;
}

int run_core(const Options& o) {
  ACIMatrix A = load_input(o.input);
  CoreCertificate c = extract_core(A, o.budgets());
  if (o.verify) verify_core(A, c, o.budgets());
  std::cout << emit_report(core_json(A, c), o.structured());
  return 0;
}

int run_geometry(const Options& o) {
  SubspaceDocument doc = parse_subspaces(read_file(o.input));
  SubspaceMatrix bridge = subspaces_to_aci(doc.field, doc.subspaces);
  RankSummary s = rank_set(bridge.matrix, o.budgets());
  Json out;
  out["schema"] = 1;
  out["field"] = doc.field.q();
  out["subspaces"] = static_cast<int>(doc.subspaces.size());
  out["reduced_directions"] = bridge.reduced_directions;
  out["matrix"] = serialize_matrix(bridge.matrix);
  out["dim_set"] = s.rank_set;
  std::cout << emit_report(out, o.structured());
  return 0;
}

int run_corpus(const Options& o) {
  if (o.input.empty()) {
    for (const auto& id : corpus_ids()) std::cout << id << "\n";
    return 0;
  }
  std::string id = o.input.rfind("corpus:", 0) == 0 ? o.input.substr(7) : o.input;
  CorpusEntry e = corpus_entry(id);
  Json out;
  out["schema"] = 1;
  out["id"] = e.id;
  out["matrix"] = serialize_matrix(e.matrix);
  Json facts;
  for (const auto& fct : e.facts) facts[fct.key] = fct.value;
  out["facts"] = std::move(facts);
  std::cout << emit_report(out, o.structured());
  return 0;
}

struct GenArgs {
  long q = 2;
  int m = 3, n = 3, rho = 3;
  std::string gadget = "none";
};

int run_gen(const Options& o, const GenArgs& g) {
  Field f = Field::make_q(g.q);
  GenOptions opt;
  opt.seed = o.seed;
  if (g.gadget == "minimal") opt.gadget = GadgetChoice::minimal;
  else if (g.gadget == "maximal") opt.gadget = GadgetChoice::maximal;
  ACIMatrix A = gen_constant_rank(f, g.m, g.n, g.rho, opt);
  if (o.verify && !has_constant_rank(A, g.rho, o.budgets()))
    throw Error(Errc::verification_failed, "generated matrix misses the requested rank");
  std::cout << serialize_matrix(A);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-field ACI-matrix analyses"};
  app.require_subcommand(1);

  Options o;
  GenArgs g;

  auto* rank = app.add_subcommand("rank", "rank set of all completions");
  rank->add_option("input", o.input, "matrix file or corpus:<id>")->required();
  add_common(rank, o);

  auto* classify = app.add_subcommand("classify", "constant-rank taxonomy with witnesses");
  classify->add_option("input", o.input, "matrix file or corpus:<id>")->required();
  add_common(classify, o);

  auto* decompose = app.add_subcommand("decompose", "canonical block decomposition");
  decompose->add_option("input", o.input, "matrix file or corpus:<id>")->required();
  add_common(decompose, o);

  auto* core = app.add_subcommand("core", "completely irreducible core certificate");
  core->add_option("input", o.input, "matrix file or corpus:<id>")->required();
  add_common(core, o);

  auto* geometry = app.add_subcommand("geometry", "span dimensions of affine subspaces");
  geometry->add_option("input", o.input, "subspace file")->required();
  add_common(geometry, o);

  auto* corpus = app.add_subcommand("corpus", "list bundled instances or show one");
  corpus->add_option("input", o.input, "corpus id (omit to list)");
  add_common(corpus, o);

  auto* gen = app.add_subcommand("gen", "generate a constant-rank matrix");
  gen->add_option("--q", g.q, "field size")->required();
  gen->add_option("--m", g.m, "rows")->required();
  gen->add_option("--n", g.n, "columns")->required();
  gen->add_option("--rho", g.rho, "constant rank")->required();
  gen->add_option("--gadget", g.gadget, "gadget family")
      ->check(CLI::IsMember({"none", "minimal", "maximal"}));
  add_common(gen, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (rank->parsed()) return run_rank(o);
    if (classify->parsed()) return run_classify(o);
    if (decompose->parsed()) return run_decompose(o);
    if (core->parsed()) return run_core(o);
    if (geometry->parsed()) return run_geometry(o);
    if (corpus->parsed()) return run_corpus(o);
    if (gen->parsed()) return run_gen(o, g);
  } catch (const acik::Error& e) {
    std::cerr << e.what() << "\n";
    return (e.code() == acik::Errc::syntax_error || e.code() == acik::Errc::bad_input) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
