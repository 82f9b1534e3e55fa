#include "acikit/report.hpp"

#include <cstdint>
#include <sstream>

#include "acikit/text_io.hpp"

namespace acik {

namespace {

std::string hex64(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Json vector_json(const Field& f, const std::vector<Fe>& v) {
  Json arr = Json::array();
  for (Fe x : v) arr.push_back(element_token(f, x));
  return arr;
}

Json block_json(const BlockDesc& d) {
  Json b;
  b["tag"] = block_tag_name(d.tag);
  b["rows"] = Json::array({d.row0, d.row1});
  b["cols"] = Json::array({d.col0, d.col1});
  b["rank"] = d.rho;
  return b;
}

void flatten(const Json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    bool scalars = true;
    for (const auto& e : j)
      if (e.is_object() || e.is_array()) scalars = false;
    if (scalars) {
      out << prefix << " =";
      for (const auto& e : j) out << " " << (e.is_string() ? e.get<std::string>() : e.dump());
      out << "\n";
    } else {
      int i = 0;
      for (const auto& e : j) flatten(e, prefix + "[" + std::to_string(i++) + "]", out);
    }
  } else if (j.is_string()) {
    out << prefix << " = " << j.get<std::string>() << "\n";
  } else {
    out << prefix << " = " << j.dump() << "\n";
  }
}

}  // namespace

std::string input_digest(const ACIMatrix& A) { return hex64(fnv1a(serialize_matrix(A))); }

Json report_header(const ACIMatrix& A) {
  Json doc;
  doc["schema"] = 1;
  doc["digest"] = input_digest(A);
  doc["field"] = A.field().q();
  doc["shape"] = Json::array({A.rows(), A.cols()});
  return doc;
}

Json rank_json(const ACIMatrix& A, const RankSummary& s) {
  Json doc = report_header(A);
  doc["rank_set"] = s.rank_set;
  doc["mrank"] = s.mrank;
  doc["Mrank"] = s.Mrank;
  if (s.constant) doc["constant"] = *s.constant;
  doc["completions_examined"] = s.completions_examined;
  doc["method"] = s.method == RankMethod::exhaustive ? "exhaustive" : "decomposed";
  return doc;
}

Json classification_json(const ACIMatrix& A, const Classification& c) {
  Json doc = rank_json(A, c.rank);
  if (!c.constant) {
    doc["classified"] = false;
    return doc;
  }
  doc["classified"] = true;
  doc["full_rank"] = c.full_rank;
  doc["square_fr"] = c.square_fr;
  doc["minimal_fr"] = c.minimal_fr;
  doc["maximal_fr"] = c.maximal_fr;
  doc["row_reducible"] = c.row_reducible;
  doc["column_reducible"] = c.column_reducible;
  doc["irreducible"] = c.irreducible;
  doc["column_augmentable"] = c.column_augmentable;
  doc["completely_irreducible"] = c.completely_irreducible;
  if (c.deletable_row) doc["deletable_row"] = *c.deletable_row;
  if (c.deletable_column) doc["deletable_column"] = *c.deletable_column;
  if (c.augmenting_vector) doc["augmenting_vector"] = vector_json(A.field(), *c.augmenting_vector);
  return doc;
}

Json equivalence_json(const Field& f, const Equivalence& e) {
  Json w;
  Json t = Json::array();
  for (int i = 0; i < e.T.m; ++i) {
    Json row = Json::array();
    for (int j = 0; j < e.T.n; ++j) row.push_back(element_token(f, e.T.at(i, j)));
    t.push_back(std::move(row));
  }
  w["T"] = std::move(t);
  w["Q"] = e.col_src;
  return w;
}

Json decomposition_json(const ACIMatrix& A, const BlockDecomposition& d) {
  Json doc = report_header(A);
  doc["constant"] = d.rho;
  doc["case"] = decomp_case_name(d.kind);
  if (d.r) doc["zero_block_rows"] = *d.r;
  if (d.s) doc["zero_block_cols"] = *d.s;
  if (d.B) doc["B"] = block_json(*d.B);
  if (d.C) doc["C"] = block_json(*d.C);
  doc["witness"] = equivalence_json(A.field(), d.witness);
  return doc;
}

Json core_json(const ACIMatrix& A, const CoreCertificate& c) {
  Json doc = report_header(A);
  doc["constant"] = c.rho;
  doc["core_rows"] = c.rows;
  doc["core_cols"] = c.cols;
  doc["core"] = serialize_matrix(c.core);
  doc["witness"] = equivalence_json(A.field(), c.witness);
  return doc;
}

std::string emit_report(const Json& doc, bool structured) {
  if (structured) return doc.dump(2) + "\n";
  std::ostringstream out;
  flatten(doc, "", out);
  return out.str();
}

}  // namespace acik
