#include "sgmm/parse.hpp"

#include <cctype>
#include <vector>

#include "sgmm/errors.hpp"

namespace sgmm {

namespace {

std::string strip(const std::string& in) {
  std::string out;
  for (char ch : in) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  }
  return out;
}

void drop_wrapper(std::string& s, const std::string& open, const std::string& close) {
  if (s.size() >= open.size() + close.size() && s.compare(0, open.size(), open) == 0 &&
      s.compare(s.size() - close.size(), close.size(), close) == 0) {
    s = s.substr(open.size(), s.size() - open.size() - close.size());
  }
}

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  bool eat(const std::string& word) {
    if (text.compare(pos, word.size(), word) == 0) {
      pos += word.size();
      return true;
    }
    return false;
  }
  char peek() const { return pos < text.size() ? text[pos] : '\0'; }
  [[noreturn]] void die(const std::string& why) const {
    fail(errc::parse_error, why + " at position " + std::to_string(pos) + " in '" + text + "'");
  }

  long long integer() {
    std::size_t start = pos;
    if (peek() == '-') ++pos;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (pos == start || (pos == start + 1 && text[start] == '-')) die("expected an integer");
    try {
      return std::stoll(text.substr(start, pos - start));
    } catch (const std::out_of_range&) {
      die("integer out of range");
    }
  }

  std::vector<long long> integer_list() {
    std::vector<long long> out{integer()};
    while (peek() == ',') {
      ++pos;
      out.push_back(integer());
    }
    return out;
  }
};

SemigroupIdeal parse_spec(Cursor& cur, const NumericalSemigroup& S) {
  // a bare integer list is a generator list
  if (std::isdigit(static_cast<unsigned char>(cur.peek())) || cur.peek() == '-')
    return ideal_from_generators(S, cur.integer_list());
  if (cur.eat("unit")) return unit_ideal(S);
  if (cur.eat("maximal")) return maximal_ideal(S);
  if (cur.eat("canonical")) return canonical_ideal(S);
  if (cur.eat("conductor"))
    return conductor_ideal(S, algebra_closure(canonical_ideal(S)));
  if (cur.eat("rk")) return extension_ideal(S, algebra_closure(canonical_ideal(S)));
  if (cur.eat("rbar")) return extension_ideal(S, NumericalSemigroup::natural());
  if (cur.eat("gens:")) return ideal_from_generators(S, cur.integer_list());
  if (cur.eat("closure:")) return integral_closure(principal_ideal(S, cur.integer()));
  if (cur.eat("dual:")) return dual(parse_spec(cur, S));
  if (cur.eat("power:")) {
    SemigroupIdeal E = parse_spec(cur, S);
    if (!cur.eat("^")) cur.die("expected '^'");
    return power(E, cur.integer());
  }
  if (cur.eat("product:")) {
    SemigroupIdeal lhs = parse_spec(cur, S);
    if (!cur.eat("*")) cur.die("expected '*'");
    return product(lhs, parse_spec(cur, S));
  }
  if (cur.eat("sum:")) {
    SemigroupIdeal lhs = parse_spec(cur, S);
    if (!cur.eat("+")) cur.die("expected '+'");
    return module_sum(lhs, parse_spec(cur, S));
  }
  if (cur.eat("shift:")) {
    SemigroupIdeal E = parse_spec(cur, S);
    if (!cur.eat("@")) cur.die("expected '@'");
    return shift(E, cur.integer());
  }
  cur.die("unknown ideal spec");
}

}  // namespace

NumericalSemigroup parse_semigroup(const std::string& text) {
  std::string s = strip(text);
  drop_wrapper(s, "\xE2\x9F\xA8", "\xE2\x9F\xA9");  // mathematical angle brackets
  drop_wrapper(s, "<", ">");
  if (s.empty()) fail(errc::parse_error, "empty semigroup spec");
  Cursor cur{s};
  std::vector<long long> gens = cur.integer_list();
  if (cur.pos != s.size()) cur.die("trailing characters");
  return NumericalSemigroup::from_generators(gens);
}

SemigroupIdeal parse_ideal_spec(const NumericalSemigroup& S, const std::string& text) {
  const std::string s = strip(text);
  Cursor cur{s};
  SemigroupIdeal E = parse_spec(cur, S);
  if (cur.pos != s.size()) cur.die("trailing characters");
  return E;
}

}  // namespace sgmm
