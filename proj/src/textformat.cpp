#include "gwa/textformat.hpp"

#include <cctype>
#include <map>

namespace gwa::text {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse polynomial '" + std::string(s_) + "': " + what +
                     " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

// Unsigned rational "p" or "p/q"; empty optional when no digits follow.
bool read_unsigned_rational(Cursor& c, Rational& out) {
  std::string num = c.digits();
  if (num.empty()) return false;
  out = Rational(mpz_class(num));
  if (c.accept('/')) {
    std::string den = c.digits();
    if (den.empty()) c.fail("missing denominator");
    mpz_class d(den);
    if (d == 0) c.fail("zero denominator");
    out /= Rational(d);
  }
  return true;
}

}  // namespace

std::vector<Rational> parse_rational_polynomial(std::string_view text, char var) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty polynomial");
  std::vector<Rational> out;
  if (text.front() == '[') {
    if (text.back() != ']') throw ParseError("unterminated coefficient list");
    std::string_view body = text.substr(1, text.size() - 2);
    while (!trim(body).empty()) {
      std::size_t comma = body.find(',');
      out.push_back(parse_rational(body.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
  } else {
    std::map<int, Rational> terms;
    Cursor c(text);
    bool first = true;
    while (!c.done()) {
      Rational sign(1);
      if (c.accept('-')) {
        sign = -1;
      } else if (!c.accept('+') && !first) {
        c.fail("expected '+' or '-'");
      }
      first = false;
      Rational coef(1);
      bool have_coef = read_unsigned_rational(c, coef);
      int power = 0;
      bool have_var = false;
      if (have_coef) c.accept('*');
      if (c.accept(var)) {
        have_var = true;
        power = 1;
        if (c.accept('^')) {
          std::string e = c.digits();
          if (e.empty()) c.fail("missing exponent");
          power = std::stoi(e);
        }
      }
      if (!have_coef && !have_var) c.fail("expected a term");
      terms[power] += sign * coef;
    }
    int top = terms.empty() ? -1 : terms.rbegin()->first;
    out.assign(static_cast<std::size_t>(top + 1), Rational(0));
    for (const auto& [p, q] : terms) out[static_cast<std::size_t>(p)] = q;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::string format_polynomial(const std::vector<std::string>& coeffs, char var) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    std::string c = coeffs[k];
    if (c.empty() || c == "0") continue;
    bool negative = c.front() == '-';
    if (negative) c.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    if (k >= 1) {
      mono = std::string(1, var);
      if (k >= 2) mono += "^" + std::to_string(k);
    }
    if (mono.empty()) {
      out += c;
    } else if (c == "1") {
      out += mono;
    } else {
      out += c + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

std::string format_rational_polynomial(const std::vector<Rational>& coeffs, char var) {
  std::vector<std::string> s;
  s.reserve(coeffs.size());
  for (const auto& q : coeffs) s.push_back(to_string(q));
  return format_polynomial(s, var);
}

}  // namespace gwa::text
