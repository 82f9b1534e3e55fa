#include "acikit/text_io.hpp"

#include <cctype>
#include <sstream>

#include "acikit/error.hpp"

namespace acik {

namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& expected) const {
    throw Error(Errc::syntax_error, "line " + std::to_string(line) + " col " +
                                        std::to_string(col) + ": expected " + expected);
  }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_space() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '#') {
        while (pos < text.size() && text[pos] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool eof() {
    skip_space();
    return pos >= text.size();
  }

  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }

  // integer, g:<digits> coefficient, or identifier
  std::string token() {
    skip_space();
    if (pos >= text.size()) fail("a token");
    std::size_t start = pos;
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) advance();
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        advance();
      if (pos < text.size() && text[pos] == ':' && text.compare(start, pos - start, "g") == 0) {
        advance();
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) advance();
      }
    } else {
      fail("a number, coefficient or variable");
    }
    return text.substr(start, pos - start);
  }
};

bool is_integer(const std::string& t) {
  if (t.empty()) return false;
  for (char c : t)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Fe element_from_token(const Field& f, const std::string& t, const Lexer* lx) {
  auto bad = [&]() -> Fe {
    if (lx)
      throw Error(Errc::syntax_error, "line " + std::to_string(lx->line) +
                                          ": bad field element '" + t + "'");
    throw Error(Errc::unknown_field_element, "'" + t + "'");
  };
  if (is_integer(t)) {
    long v = std::stol(t);
    if (v >= f.p()) {
      if (f.k() == 1) return static_cast<Fe>(v % f.p());
      return bad();  // extension fields need g:-notation beyond the prime subfield
    }
    return static_cast<Fe>(v);
  }
  if (t.size() >= 3 && t[0] == 'g' && t[1] == ':') {
    if (f.k() == 1) return bad();
    std::vector<int> digits(f.k(), 0);
    std::size_t nd = t.size() - 2;
    if (nd > static_cast<std::size_t>(f.k())) return bad();
    for (std::size_t i = 0; i < nd; ++i) {
      char c = t[2 + i];
      if (!std::isdigit(static_cast<unsigned char>(c))) return bad();
      int d = c - '0';
      if (d >= f.p()) return bad();
      digits[nd - 1 - i] = d;  // text is most significant first
    }
    return f.from_digits(digits);
  }
  return bad();
}

Field parse_field_line(Lexer& lx) {
  std::string kw = lx.token();
  if (kw != "field") lx.fail("'field'");
  std::string qtok = lx.token();
  if (!is_integer(qtok)) lx.fail("a field size");
  long q = std::stol(qtok);
  std::optional<std::vector<int>> poly;
  if (lx.peek() == 'p') {
    std::size_t save = lx.pos;
    int sl = lx.line, sc = lx.col;
    std::string p = lx.token();
    if (p == "poly") {
      std::vector<int> cs;
      while (true) {
        std::string c = lx.token();
        if (!is_integer(c)) lx.fail("a polynomial coefficient");
        cs.push_back(static_cast<int>(std::stol(c)));
        if (!lx.accept(',')) break;
      }
      poly = std::move(cs);
    } else {
      lx.pos = save;
      lx.line = sl;
      lx.col = sc;
    }
  }
  return Field::make_q(q, std::move(poly));
}

AffineForm parse_entry(Lexer& lx, const Field& f) {
  AffineForm e;
  bool first = true;
  while (true) {
    bool negate = false;
    if (first) {
      if (lx.accept('-')) negate = true;
    } else {
      if (lx.accept('+')) negate = false;
      else if (lx.accept('-')) negate = true;
      else break;
    }
    first = false;
    std::string t = lx.token();
    bool is_coeff = is_integer(t) || (t.size() >= 2 && t[0] == 'g' && t[1] == ':');
    if (is_coeff) {
      Fe c = element_from_token(f, t, &lx);
      if (negate) c = f.neg(c);
      if (lx.accept('*')) {
        std::string var = lx.token();
        if (!is_valid_variable_name(var)) lx.fail("a variable name");
        form_add_term(f, e, var, c);
      } else {
        e.constant = f.add(e.constant, c);
      }
    } else {
      if (!is_valid_variable_name(t)) lx.fail("a variable name");
      form_add_term(f, e, t, negate ? f.neg(f.one()) : f.one());
    }
  }
  return e;
}

}  // namespace

Fe parse_element_token(const Field& f, const std::string& token) {
  return element_from_token(f, token, nullptr);
}

std::string element_token(const Field& f, Fe a) {
  if (f.k() == 1) return std::to_string(a);
  auto ds = f.digits(a);
  std::string out = "g:";
  bool seen = false;
  for (int i = f.k() - 1; i >= 0; --i) {
    if (ds[i] != 0) seen = true;
    if (seen || i == 0) out += static_cast<char>('0' + ds[i]);
  }
  return out;
}

ACIMatrix parse_matrix(const std::string& text) {
  Lexer lx(text);
  Field f = parse_field_line(lx);
  lx.expect('[');
  std::vector<AffineForm> entries;
  int n = -1, m = 0;
  while (true) {
    int row_len = 0;
    while (true) {
      entries.push_back(parse_entry(lx, f));
      ++row_len;
      if (!lx.accept(',')) break;
    }
    ++m;
    if (n < 0) n = row_len;
    else if (row_len != n)
      throw Error(Errc::syntax_error,
                  "line " + std::to_string(lx.line) + ": row has " + std::to_string(row_len) +
                      " entries, expected " + std::to_string(n));
    if (lx.accept(';')) continue;
    lx.expect(']');
    break;
  }
  if (!lx.eof()) lx.fail("end of input");
  return ACIMatrix::validate(f, m, n, std::move(entries));
}

std::string serialize_matrix(const ACIMatrix& A) {
  const Field& f = A.field();
  std::ostringstream out;
  out << "field " << f.q();
  if (f.k() > 1 && !f.has_default_poly()) {
    out << " poly ";
    for (std::size_t i = 0; i < f.modpoly().size(); ++i) {
      if (i) out << ",";
      out << f.modpoly()[i];
    }
  }
  out << "\n[ ";
  for (int i = 0; i < A.rows(); ++i) {
    if (i) out << " ; ";
    for (int j = 0; j < A.cols(); ++j) {
      if (j) out << ", ";
      const AffineForm& e = A.at(i, j);
      bool any = false;
      for (const auto& [v, c] : e.terms) {
        if (any) out << "+";
        if (c != 1) out << element_token(f, c) << "*";
        out << v;
        any = true;
      }
      if (e.constant != 0 || !any) {
        if (any) out << "+";
        out << element_token(f, e.constant);
      }
    }
  }
  out << " ]\n";
  return out.str();
}

SubspaceDocument parse_subspaces(const std::string& text) {
  Lexer lx(text);
  Field f = parse_field_line(lx);
  std::vector<AffineSubspace> subs;
  auto parse_vec = [&] {
    std::vector<Fe> v;
    while (true) {
      v.push_back(element_from_token(f, lx.token(), &lx));
      if (!lx.accept(',')) break;
    }
    return v;
  };
  while (!lx.eof()) {
    std::string kw = lx.token();
    if (kw != "subspace") lx.fail("'subspace'");
    std::string bkw = lx.token();
    if (bkw != "base") lx.fail("'base'");
    AffineSubspace s;
    s.base = parse_vec();
    while (lx.peek() == 'd') {
      std::size_t save = lx.pos;
      int sl = lx.line, sc = lx.col;
      std::string dkw = lx.token();
      if (dkw != "dir") {
        lx.pos = save;
        lx.line = sl;
        lx.col = sc;
        break;
      }
      s.directions.push_back(parse_vec());
    }
    subs.push_back(std::move(s));
  }
  if (subs.empty())
    throw Error(Errc::syntax_error, "no subspaces in document");
  return SubspaceDocument{std::move(f), std::move(subs)};
}

}  // namespace acik
