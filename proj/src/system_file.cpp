#include "solvdeg/system_file.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "solvdeg/errors.hpp"

namespace solvdeg {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view src, const RingPtr& ring, int line) : src_(src), ring_(ring), line_(line) {}

  Polynomial parse() {
    Polynomial f = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return f;
  }

 private:
  std::string_view src_;
  const RingPtr& ring_;
  int line_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(ParseErrorKind::Syntax, line_, what); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

  Polynomial expr() {
    Polynomial f(ring_);
    bool first = true;
    while (true) {
      char c = peek();
      bool negative = false;
      if (c == '+' || c == '-') {
        negative = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      f = negative ? f - t : f + t;
      first = false;
    }
    return f;
  }

  Polynomial term() {
    Polynomial f = factor();
    while (true) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        f = f * factor();
      } else if (ident_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '(') {
        f = f * factor();
      } else {
        break;
      }
    }
    return f;
  }

  std::uint64_t number() {
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) fail("expected a number");
    std::uint64_t v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      if (v > std::numeric_limits<std::uint64_t>::max() / 10 - 10) fail("number too large");
      v = v * 10 + static_cast<unsigned>(src_[pos_++] - '0');
    }
    return v;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (peek() == '^') {
      ++pos_;
      const std::uint64_t e = number();
      if (e > std::numeric_limits<Monomial::Exponent>::max()) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial f = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return f;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t v = number() % ring_->field.modulus();
      return Polynomial::constant(ring_, static_cast<std::int64_t>(v));
    }
    if (ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
      const std::string name(src_.substr(start, pos_ - start));
      const auto idx = ring_->index_of(name);
      if (!idx) throw ParseError(ParseErrorKind::UnknownVariable, line_, "unknown variable '" + name + "'");
      return Polynomial::variable(ring_, *idx);
    }
    if (c == '\0') fail("unexpected end of expression");
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool starts_with_keyword(std::string_view line, std::string_view kw) {
  return line.substr(0, kw.size()) == kw &&
         (line.size() == kw.size() || std::isspace(static_cast<unsigned char>(line[kw.size()])));
}

std::vector<std::string> split_words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view expr, const RingPtr& ring, int line) {
  return ExprParser(expr, ring, line).parse();
}

SystemFile parse_system_file(std::string_view text) {
  SystemFile out;
  std::optional<std::uint32_t> p;
  int line_no = 0;
  int last_line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    last_line = line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (starts_with_keyword(line, "field")) {
      const auto words = split_words(line.substr(5));
      if (words.size() != 1 || words[0].find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(ParseErrorKind::Syntax, line_no, "expected 'field <prime>'");
      if (words[0].size() > 12) throw ParseError(ParseErrorKind::NonPrimeModulus, line_no, "field modulus too large");
      const std::uint64_t v = std::stoull(words[0]);
      if (v >= (1ull << 31) || !is_prime(v))
        throw ParseError(ParseErrorKind::NonPrimeModulus, line_no,
                         "field modulus " + words[0] + " is not a prime below 2^31");
      p = static_cast<std::uint32_t>(v);
      continue;
    }
    if (starts_with_keyword(line, "vars")) {
      if (!p) throw ParseError(ParseErrorKind::MissingHeader, line_no, "'vars' before 'field'");
      auto names = split_words(line.substr(4));
      if (names.empty()) throw ParseError(ParseErrorKind::Syntax, line_no, "no variables declared");
      for (std::size_t i = 0; i < names.size(); ++i) {
        const auto& nm = names[i];
        if (!(std::isalpha(static_cast<unsigned char>(nm[0])) || nm[0] == '_'))
          throw ParseError(ParseErrorKind::Syntax, line_no, "bad variable name '" + nm + "'");
        for (std::size_t j = 0; j < i; ++j)
          if (names[j] == nm) throw ParseError(ParseErrorKind::Syntax, line_no, "duplicate variable '" + nm + "'");
      }
      if (names.size() > Monomial::kMaxVars)
        throw ParseError(ParseErrorKind::Syntax, line_no, "at most 16 variables are supported");
      out.ring = make_ring(*p, std::move(names));
      continue;
    }
    if (!out.ring) throw ParseError(ParseErrorKind::MissingHeader, line_no, "expected 'field' and 'vars' first");

    if (starts_with_keyword(line, "row")) {
      std::vector<Polynomial> row;
      std::string_view rest = line.substr(3);
      while (true) {
        const auto comma = rest.find(',');
        row.push_back(parse_polynomial(trim(rest.substr(0, comma)), out.ring, line_no));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
      if (!out.matrix.empty() && out.matrix.front().size() != row.size())
        throw ParseError(ParseErrorKind::Syntax, line_no, "matrix rows have different lengths");
      out.matrix.push_back(std::move(row));
      continue;
    }
    if (starts_with_keyword(line, "point")) {
      std::vector<Coeff> pt;
      for (const auto& w : split_words(line.substr(5))) {
        try {
          std::size_t used = 0;
          const long long v = std::stoll(w, &used);
          if (used != w.size()) throw std::invalid_argument(w);
          pt.push_back(out.ring->field.from_int(v));
        } catch (const std::logic_error&) {
          throw ParseError(ParseErrorKind::Syntax, line_no, "bad coordinate '" + w + "'");
        }
      }
      if (pt.size() != out.ring->nvars())
        throw ParseError(ParseErrorKind::Syntax, line_no, "point needs one coordinate per variable");
      out.points.push_back(std::move(pt));
      continue;
    }
    Polynomial f = parse_polynomial(line, out.ring, line_no);
    if (f.is_zero()) throw ParseError(ParseErrorKind::ZeroGenerator, line_no, "generator is zero");
    out.polynomials.push_back(std::move(f));
  }
  if (!out.ring) throw ParseError(ParseErrorKind::MissingHeader, last_line, "missing 'field' or 'vars' header");
  if (out.polynomials.empty() && out.matrix.empty() && out.points.empty())
    throw ParseError(ParseErrorKind::EmptySystem, last_line, "no polynomials given");
  return out;
}

Ideal parse_system(std::string_view text) {
  auto file = parse_system_file(text);
  if (file.polynomials.empty())
    throw ParseError(ParseErrorKind::EmptySystem, 1, "no polynomials given");
  return file.ideal();
}

std::string print_system(const Ideal& I) {
  std::string s = "field " + std::to_string(I.ring()->field.modulus()) + "\nvars";
  for (const auto& v : I.ring()->vars) s += " " + v;
  s += "\n";
  for (const auto& g : I.gens()) s += g.to_string() + "\n";
  return s;
}

}  // namespace solvdeg
