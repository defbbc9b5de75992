#include "ncfree/rational.hpp"
#include "ncfree/word.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace ncfree {

std::string to_string(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t k = start; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view s) {
  std::string t(s);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  return mpz_class(t, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class d = to_mpz(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(to_mpz(num), d);
  r.canonicalize();
  return r;
}

Rational ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Rational result = 1;
  for (int k = 0; k < exponent; ++k) result *= base;
  return result;
}

double to_double(const Rational& x) { return x.get_d(); }

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(w[k]);
  }
  return out;
}

std::string format_pair_word(const Word& w, int d) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(pair_outer(w[k], d)) + ":" + std::to_string(pair_inner(w[k], d));
  }
  return out;
}

Word parse_word(const std::string& text) {
  Word w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || v < 1) {
      throw std::invalid_argument("malformed word '" + text + "'");
    }
    w.push_back(v);
  }
  if (w.empty()) throw std::invalid_argument("empty word");
  return w;
}

Word restrict_word(const Word& w, const std::vector<int>& block) {
  Word out;
  out.reserve(block.size());
  for (int k : block) out.push_back(w[static_cast<std::size_t>(k - 1)]);
  return out;
}

}  // namespace ncfree
