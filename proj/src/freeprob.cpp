#include "ncfree/freeprob.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace ncfree {

NcPolynomial::NcPolynomial(const Rational& scalar) { add_term({}, scalar); }

NcPolynomial NcPolynomial::monomial(const Word& w, const Rational& c) {
  NcPolynomial p;
  p.add_term(w, c);
  return p;
}

void NcPolynomial::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int NcPolynomial::degree() const { return terms_.empty() ? 0 : static_cast<int>(terms_.rbegin()->first.size()); }

Rational NcPolynomial::constant() const {
  auto it = terms_.find(Word{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> NcPolynomial::as_generator() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [w, c] = *terms_.begin();
  if (w.size() != 1 || c != 1) return std::nullopt;
  return w.front();
}

NcPolynomial& NcPolynomial::operator+=(const NcPolynomial& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

NcPolynomial& NcPolynomial::operator-=(const NcPolynomial& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b) {
  NcPolynomial out;
  Word w;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

NcPolynomial& NcPolynomial::operator*=(const NcPolynomial& other) { return *this = *this * other; }

NcPolynomial operator-(const NcPolynomial& a) {
  NcPolynomial out;
  for (const auto& [w, c] : a.terms_) out.add_term(w, -c);
  return out;
}

std::string NcPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << ncfree::to_string(c);
    for (Letter l : w) out << "*g" << l;
  }
  return out.str();
}

Rational phi_word(const CumulantModel& model, const Word& w) {
  if (w.empty()) return 1;
  const int n = static_cast<int>(w.size());
  if (n > model.order()) {
    throw std::out_of_range("moment of word " + format_word(w) + " exceeds model order " + std::to_string(model.order()));
  }
  for (Letter l : w) {
    if (l < 1 || l > model.generators()) throw std::out_of_range("generator " + std::to_string(l) + " out of range");
  }
  Rational sum = 0;
  for (const auto& pair : nc_table(n)) sum += gen_coef(model.table(), w, pair.pi);
  return sum;
}

Rational phi_poly(const CumulantModel& model, const NcPolynomial& p) {
  Rational sum = 0;
  for (const auto& [w, c] : p.terms()) sum += c * phi_word(model, w);
  return sum;
}

Series moment_series(const CumulantModel& model, const std::vector<NcPolynomial>& elements, int order) {
  if (elements.empty()) throw std::invalid_argument("moment_series needs at least one element");
  if (order <= 0) order = model.order();
  const int s = static_cast<int>(elements.size());
  Series out(s, order);
  std::map<Word, Rational, ShortLex> cache;
  auto phi_cached = [&](const NcPolynomial& p) {
    Rational sum = 0;
    for (const auto& [w, c] : p.terms()) {
      auto it = cache.find(w);
      if (it == cache.end()) it = cache.emplace(w, phi_word(model, w)).first;
      sum += c * it->second;
    }
    return sum;
  };
  Word w;
  std::function<void(const NcPolynomial&)> extend = [&](const NcPolynomial& prefix) {
    if (static_cast<int>(w.size()) == order) return;
    for (int r = 1; r <= s; ++r) {
      NcPolynomial product = prefix * elements[static_cast<std::size_t>(r - 1)];
      w.push_back(r);
      if (product.degree() > model.order()) {
        throw std::out_of_range("product of elements " + format_word(w) + " has degree " + std::to_string(product.degree()) +
                                " beyond model order " + std::to_string(model.order()));
      }
      out.set(w, phi_cached(product));
      extend(product);
      w.pop_back();
    }
  };
  extend(NcPolynomial(1));
  return out;
}

Series r_transform(const Series& moments) { return boxed_convolve(moments, moebius(moments.alphabet(), moments.order())); }

Series m_from_r(const Series& rtransform) {
  return boxed_convolve(rtransform, zeta(rtransform.alphabet(), rtransform.order()));
}

Series element_cumulants(const CumulantModel& model, const std::vector<NcPolynomial>& elements, int order) {
  return r_transform(moment_series(model, elements, order));
}

std::map<Word, Rational, ShortLex> cumulants_from_moments(const std::map<Word, Rational, ShortLex>& moments) {
  std::map<Word, Rational, ShortLex> out;
  auto moment = [&](const Word& w) {
    auto it = moments.find(w);
    if (it == moments.end()) throw std::invalid_argument("moment set is not closed under sub-words: missing " + format_word(w));
    return it->second;
  };
  for (const auto& [w, m] : moments) {
    if (w.empty()) continue;
    const int n = static_cast<int>(w.size());
    Rational k = 0;
    for (const auto& pair : nc_table(n)) {
      Rational term = 1;
      for (const auto& b : pair.pi.blocks()) {
        term *= moment(restrict_word(w, b));
        if (term == 0) break;
      }
      if (term == 0) continue;
      for (const auto& b : pair.kr.blocks()) term *= moebius_coefficient(static_cast<int>(b.size()));
      k += term;
    }
    if (k != 0) out.emplace(w, k);
  }
  return out;
}

FreenessResult check_free(const Series& rtransform, const Partition& grouping) {
  if (grouping.size() != rtransform.alphabet()) {
    throw std::invalid_argument("grouping must partition the alphabet {1.." + std::to_string(rtransform.alphabet()) + "}");
  }
  for (const auto& [w, c] : rtransform.terms()) {
    int family = grouping.block_index(w.front());
    for (Letter l : w) {
      if (grouping.block_index(l) != family) return {false, w};
    }
  }
  return {};
}

Rational product_cumulant(const CumulantModel& model, const std::vector<int>& xs, int m) {
  const int n = static_cast<int>(xs.size());
  if (m < 1 || m >= n) throw std::out_of_range("product_cumulant: merge position must satisfy 1 <= m < n");
  for (int x : xs) {
    if (x < 1 || x > model.generators()) throw std::out_of_range("product_cumulant: generator out of range");
  }
  // x[a..b], 1-based inclusive.
  auto span = [&](int a, int b) {
    Word w;
    for (int k = a; k <= b; ++k) w.push_back(xs[static_cast<std::size_t>(k - 1)]);
    return w;
  };
  auto join = [](Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  auto k = [&](const Word& w) { return model.cumulant(w); };

  Rational sum = k(xs) + k(span(1, m)) * k(span(m + 1, n));
  for (int j = 2; j <= m; ++j) sum += k(span(j, m)) * k(join(span(1, j - 1), span(m + 1, n)));
  for (int j = m + 1; j <= n - 1; ++j) sum += k(span(m + 1, j)) * k(join(span(1, m), span(j + 1, n)));
  return sum;
}

}  // namespace ncfree
