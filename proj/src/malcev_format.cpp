#include <cctype>
#include <string>

#include "flagflux/errors.hpp"
#include "flagflux/exterior.hpp"

namespace flagflux {
namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::size_t position() const { return pos_; }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  /// Next significant character, or '\0' at end. U+2212 reads as '-'.
  char peek() {
    skip_space();
    if (pos_ >= text_.size()) return '\0';
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") return '-';
    return text_[pos_];
  }

  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void advance() {
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
    } else {
      ++pos_;
    }
  }

  void expect(char c, const char* what) {
    if (peek() != c) fail(std::string("expected ") + what);
    advance();
  }

  /// Like expect() but without skipping whitespace first (inside e^{...}).
  void expect_raw(char c, const char* what) {
    if (peek_raw() != c) fail(std::string("expected ") + what);
    ++pos_;
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek_raw()))) {
      out += text_[pos_++];
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ParseError::Kind::syntax, pos_, message);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

struct ParsedTerm {
  IndexTuple indices;
  Rational coefficient;
  std::size_t position;
};

int parse_index(Scanner& in) {
  in.skip_space();
  if (in.peek_raw() == '(') {
    in.advance();
    in.skip_space();
    std::string number = in.digits();
    if (number.empty()) in.fail("expected an integer index");
    in.skip_space();
    in.expect_raw(')', "')' closing a multi-digit index");
    if (number.size() > 9) in.fail("index too large");
    return std::stoi(number);
  }
  if (!std::isdigit(static_cast<unsigned char>(in.peek_raw()))) {
    in.fail("expected a digit or a parenthesized index");
  }
  const int value = in.peek_raw() - '0';
  in.advance();
  return value;
}

ParsedTerm parse_term(Scanner& in, const Rational& sign) {
  ParsedTerm term{{}, sign, in.position()};
  in.skip_space();
  term.position = in.position();
  if (std::isdigit(static_cast<unsigned char>(in.peek_raw()))) {
    std::string numerator = in.digits();
    std::string value = numerator;
    if (in.peek_raw() == '/') {
      in.advance();
      std::string denominator = in.digits();
      if (denominator.empty() || denominator.find_first_not_of('0') ==
                                     std::string::npos) {
        in.fail("expected a nonzero denominator");
      }
      value += "/" + denominator;
    }
    Rational magnitude(value, 10);
    magnitude.canonicalize();
    term.coefficient *= magnitude;
    in.skip_space();
  }
  if (in.peek_raw() != 'e') in.fail("expected 'e^{'");
  in.advance();
  in.expect_raw('^', "'^' after 'e'");
  in.expect_raw('{', "'{' after 'e^'");
  do {
    term.indices.push_back(parse_index(in));
    in.skip_space();
  } while (in.peek_raw() != '}' && in.peek_raw() != '\0');
  in.expect_raw('}', "'}' closing the index list");
  return term;
}

/// entry := "0" | signed-sum. Returns the terms; an explicit "0" gives none.
std::vector<ParsedTerm> parse_sum(Scanner& in) {
  std::vector<ParsedTerm> terms;
  char c = in.peek();
  if (c == '0') {
    // "0" alone is the zero entry; "0e^{..}" is a (zero) coefficient.
    in.advance();
    const char next = in.peek();
    if (next == ',' || next == ')' || next == '\0') return terms;
    in.fail("a coefficient may not be zero");
  }
  Rational sign = 1;
  if (c == '+' || c == '-') {
    sign = c == '-' ? -1 : 1;
    in.advance();
  }
  terms.push_back(parse_term(in, sign));
  for (c = in.peek(); c == '+' || c == '-'; c = in.peek()) {
    in.advance();
    terms.push_back(parse_term(in, c == '-' ? -1 : 1));
  }
  return terms;
}

Form build_form(const std::vector<ParsedTerm>& terms, int degree,
                int max_index) {
  Form form(degree);
  for (const ParsedTerm& term : terms) {
    if (static_cast<int>(term.indices.size()) != degree) {
      throw ParseError(ParseError::Kind::syntax, term.position,
                       "expected a term of degree " + std::to_string(degree));
    }
    for (int index : term.indices) {
      if (index < 1 || index > max_index) {
        throw ParseError(ParseError::Kind::index_out_of_range, term.position,
                         "index " + std::to_string(index) +
                             " outside 1.." + std::to_string(max_index));
      }
    }
    form.add_term(term.indices, term.coefficient);
  }
  return form;
}

std::string format_index(int index) {
  return index < 10 ? std::to_string(index)
                    : "(" + std::to_string(index) + ")";
}

}  // namespace

MalcevPresentation parse_malcev(std::string_view text,
                                std::optional<int> declared_dim) {
  Scanner in(text);
  in.expect('(', "'(' opening the tuple");
  std::vector<std::vector<ParsedTerm>> entries;
  if (in.peek() == ')') {
    in.advance();
  } else {
    while (true) {
      entries.push_back(parse_sum(in));
      const char c = in.peek();
      in.advance();
      if (c == ')') break;
      if (c != ',') in.fail("expected ',' or ')'");
    }
  }
  if (!in.at_end()) in.fail("trailing characters after the tuple");

  const int listed = static_cast<int>(entries.size());
  const int dim = declared_dim.value_or(listed);
  if (dim < listed) {
    throw ParseError(ParseError::Kind::syntax, 0,
                     "declared dimension " + std::to_string(dim) +
                         " is smaller than the " + std::to_string(listed) +
                         " listed entries");
  }
  const int offset = dim - listed;
  std::vector<Form> differentials(offset, Form(2));
  for (int i = 0; i < listed; ++i) {
    const int slot = offset + i + 1;
    // de^k may only use e^1..e^{k-1}
    differentials.push_back(build_form(entries[i], 2, slot - 1));
  }
  return MalcevPresentation(std::move(differentials));
}

Form parse_form(std::string_view text, int degree,
                std::optional<int> max_index) {
  Scanner in(text);
  std::vector<ParsedTerm> terms = parse_sum(in);
  if (!in.at_end()) in.fail("trailing characters after the form");
  return build_form(terms, degree, max_index.value_or(1 << 20));
}

std::string print_form(const Form& form) {
  if (form.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [indices, coefficient] : form.terms()) {
    if (coefficient < 0) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    const Rational magnitude = abs(coefficient);
    if (indices.empty()) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str();
    out += "e^{";
    for (int index : indices) out += format_index(index);
    out += '}';
  }
  return out;
}

std::string print_malcev(const MalcevPresentation& algebra) {
  std::string out = "(";
  for (int k = 1; k <= algebra.dim(); ++k) {
    if (k > 1) out += ',';
    out += print_form(algebra.differential(k));
  }
  return out + ")";
}

}  // namespace flagflux
