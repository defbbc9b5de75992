#include "ncfree/series.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ncfree {

Series::Series(int alphabet, int order) : alphabet_(alphabet), order_(order) {
  if (alphabet < 1) throw std::invalid_argument("series alphabet must be positive");
  if (order < 1) throw std::invalid_argument("series order must be positive");
}

void Series::check_word(const Word& w) const {
  if (w.empty()) throw std::invalid_argument("series have no constant term");
  if (static_cast<int>(w.size()) > order_) {
    throw std::out_of_range("word " + format_word(w) + " exceeds series order " + std::to_string(order_));
  }
  for (Letter l : w) {
    if (l < 1 || l > alphabet_) {
      throw std::out_of_range("letter " + std::to_string(l) + " outside alphabet of size " + std::to_string(alphabet_));
    }
  }
}

Rational Series::coef(const Word& w) const {
  check_word(w);
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Series::set(const Word& w, const Rational& value) {
  check_word(w);
  Rational v = value;
  v.canonicalize();
  if (v == 0) {
    terms_.erase(w);
  } else {
    terms_[w] = std::move(v);
  }
}

void Series::add_to(const Word& w, const Rational& value) {
  check_word(w);
  Rational v = value;
  v.canonicalize();
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, std::move(v));
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

Series Series::truncated(int new_order) const {
  if (new_order > order_) throw std::invalid_argument("cannot extend a truncated series");
  Series out(alphabet_, new_order);
  for (const auto& [w, c] : terms_) {
    if (static_cast<int>(w.size()) <= new_order) out.terms_.emplace(w, c);
  }
  return out;
}

namespace {

void require_same_shape(const Series& f, const Series& g, const char* what) {
  if (f.alphabet() != g.alphabet() || f.order() != g.order()) {
    throw std::invalid_argument(std::string(what) + ": operands differ in alphabet or order");
  }
}

}  // namespace

Series operator+(const Series& f, const Series& g) {
  require_same_shape(f, g, "add");
  Series out = f;
  for (const auto& [w, c] : g.terms()) out.add_to(w, c);
  return out;
}

Series operator-(const Series& f, const Series& g) { return f + Rational(-1) * g; }

Series operator*(const Rational& a, const Series& f) {
  Series out(f.alphabet(), f.order());
  if (a == 0) return out;
  for (const auto& [w, c] : f.terms()) out.set(w, a * c);
  return out;
}

Rational gen_coef(const Series& f, const Word& w, const Partition& p) {
  if (static_cast<int>(w.size()) != p.size()) throw std::invalid_argument("gen_coef: word and partition sizes differ");
  Rational out = 1;
  for (const auto& b : p.blocks()) {
    out *= f.coef(restrict_word(w, b));
    if (out == 0) break;
  }
  return out;
}

namespace {

// Coefficient lookup keyed by the base-alphabet encoding of a word; the encoding of
// a word of length l fits in 64 bits whenever alphabet^order does.
class CoefIndex {
 public:
  explicit CoefIndex(const Series& f) : alphabet_(f.alphabet()), by_length_(static_cast<std::size_t>(f.order()) + 1) {
    for (const auto& [w, c] : f.terms()) {
      by_length_[w.size()].emplace(encode(w), &c);
      support_.resize(std::max(support_.size(), w.size() + 1));
      support_[w.size()].push_back({&w, &c});
    }
    support_.resize(by_length_.size());
  }

  std::uint64_t encode(const Word& w) const {
    std::uint64_t key = 0;
    for (Letter l : w) key = key * static_cast<std::uint64_t>(alphabet_) + static_cast<std::uint64_t>(l - 1);
    return key;
  }

  const Rational* find(std::size_t length, std::uint64_t key) const {
    const auto& table = by_length_[length];
    auto it = table.find(key);
    return it == table.end() ? nullptr : it->second;
  }

  struct Entry {
    const Word* word;
    const Rational* value;
  };
  const std::vector<Entry>& support(std::size_t length) const { return support_[length]; }

 private:
  int alphabet_;
  std::vector<std::unordered_map<std::uint64_t, const Rational*>> by_length_;
  std::vector<std::vector<Entry>> support_;
};

void require_encodable(int alphabet, int order) {
  long double span = std::pow(static_cast<long double>(alphabet), order);
  if (span > 1.8e19L) throw std::out_of_range("alphabet^order too large for word encoding");
}

// Σ_π drive(w|driver blocks) · other(map(w)|other blocks), with the driver's blocks
// taken from π (drive_on_pi) or from Kr(π). Candidate words are exactly those on
// which every driver factor is nonzero.
Series convolve_impl(const Series& drive, const Series& other, bool drive_on_pi, const std::vector<Letter>& other_map,
                     int out_alphabet) {
  const int order = drive.order();
  require_encodable(out_alphabet, order);
  require_encodable(other.alphabet(), order);
  CoefIndex di(drive);
  CoefIndex oi(other);
  Series out(out_alphabet, order);

  for (int n = 1; n <= order; ++n) {
    std::unordered_map<std::uint64_t, Rational> acc;
    Word w(static_cast<std::size_t>(n));
    for (const auto& pair : nc_table(n)) {
      const Partition& dp = drive_on_pi ? pair.pi : pair.kr;
      const Partition& op = drive_on_pi ? pair.kr : pair.pi;
      const auto& blocks = dp.blocks();
      bool feasible = true;
      for (const auto& b : blocks) {
        if (di.support(b.size()).empty()) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;

      std::function<void(std::size_t, const Rational&)> assign = [&](std::size_t bi, const Rational& weight) {
        if (bi == blocks.size()) {
          Rational value = weight;
          Word part;
          for (const auto& c : op.blocks()) {
            part.clear();
            for (int pos : c) part.push_back(other_map[static_cast<std::size_t>(w[static_cast<std::size_t>(pos - 1)])]);
            const Rational* x = oi.find(part.size(), oi.encode(part));
            if (!x) return;
            value *= *x;
          }
          std::uint64_t key = 0;
          for (Letter l : w) key = key * static_cast<std::uint64_t>(out_alphabet) + static_cast<std::uint64_t>(l - 1);
          auto [it, inserted] = acc.try_emplace(key, value);
          if (!inserted) it->second += value;
          return;
        }
        const auto& b = blocks[bi];
        for (const auto& e : di.support(b.size())) {
          for (std::size_t k = 0; k < b.size(); ++k) w[static_cast<std::size_t>(b[k] - 1)] = (*e.word)[k];
          assign(bi + 1, weight * *e.value);
        }
      };
      assign(0, Rational(1));
    }
    for (auto& [key, value] : acc) {
      if (value == 0) continue;
      std::uint64_t k = key;
      for (int pos = n - 1; pos >= 0; --pos) {
        w[static_cast<std::size_t>(pos)] = static_cast<Letter>(k % static_cast<std::uint64_t>(out_alphabet)) + 1;
        k /= static_cast<std::uint64_t>(out_alphabet);
      }
      out.set(w, value);
    }
  }
  return out;
}

std::vector<Letter> identity_map(int alphabet) {
  std::vector<Letter> m(static_cast<std::size_t>(alphabet) + 1);
  for (int l = 0; l <= alphabet; ++l) m[static_cast<std::size_t>(l)] = l;
  return m;
}

}  // namespace

Series boxed_convolve(const Series& f, const Series& g) {
  require_same_shape(f, g, "boxed_convolve");
  // Kr is a bijection of NC(n), so the sum may be driven by either operand's support.
  if (g.terms().size() < f.terms().size()) {
    return convolve_impl(g, f, false, identity_map(f.alphabet()), f.alphabet());
  }
  return convolve_impl(f, g, true, identity_map(f.alphabet()), f.alphabet());
}

Series ext_boxed_convolve(const Series& f, const Series& g) {
  const int d = g.alphabet();
  if (f.order() != g.order()) throw std::invalid_argument("ext_boxed_convolve: operands differ in order");
  if (f.alphabet() % d != 0) {
    throw std::invalid_argument("ext_boxed_convolve: alphabet " + std::to_string(f.alphabet()) + " is not a multiple of " +
                                std::to_string(d));
  }
  std::vector<Letter> inner(static_cast<std::size_t>(f.alphabet()) + 1, 0);
  for (int l = 1; l <= f.alphabet(); ++l) inner[static_cast<std::size_t>(l)] = pair_inner(l, d);
  return convolve_impl(f, g, true, inner, f.alphabet());
}

Series boxed_inverse(const Series& f) {
  const int s = f.alphabet();
  const int order = f.order();
  std::vector<Rational> first(static_cast<std::size_t>(s) + 1);
  for (int r = 1; r <= s; ++r) {
    first[static_cast<std::size_t>(r)] = f.coef({r});
    if (first[static_cast<std::size_t>(r)] == 0) {
      throw std::domain_error("boxed_inverse: degree-1 coefficient at letter " + std::to_string(r) + " is zero");
    }
  }
  Series g(s, order);
  for (int r = 1; r <= s; ++r) g.set({r}, 1 / first[static_cast<std::size_t>(r)]);
  // (f ⊛ g)(w) = Π f(w_k)·g(w) + Σ_{π ≠ 0_n} f(w|π) g(w|Kr π); the remaining terms
  // only involve g on strictly shorter words.
  for (int n = 2; n <= order; ++n) {
    const Partition bottom = Partition::singletons(n);
    for_each_word(s, n, [&](const Word& w) {
      Rational rest = 0;
      for (const auto& pair : nc_table(n)) {
        if (pair.pi == bottom) continue;
        Rational fp = gen_coef(f, w, pair.pi);
        if (fp == 0) continue;
        rest += fp * gen_coef(g, w, pair.kr);
      }
      if (rest == 0) return;
      Rational lead = 1;
      for (Letter l : w) lead *= first[static_cast<std::size_t>(l)];
      g.set(w, -rest / lead);
    });
  }
  return g;
}

Series dilate(const Series& f, const Rational& a) {
  Series out(f.alphabet(), f.order());
  if (a == 0) return out;
  for (const auto& [w, c] : f.terms()) out.set(w, c * pow(a, static_cast<int>(w.size())));
  return out;
}

Rational moebius_coefficient(int n) {
  // (-1)^{n+1} Catalan(n-1)
  mpz_class cat = 1;
  for (int k = 0; k < n - 1; ++k) cat = cat * 2 * (2 * k + 1) / (k + 2);
  Rational out(cat);
  return n % 2 == 1 ? out : Rational(-out);
}

Series zeta(int s, int order) {
  Series out(s, order);
  for (int n = 1; n <= order; ++n) for_each_word(s, n, [&](const Word& w) { out.set(w, 1); });
  return out;
}

Series moebius(int s, int order) {
  Series out(s, order);
  for (int n = 1; n <= order; ++n) {
    Rational c = moebius_coefficient(n);
    for_each_word(s, n, [&](const Word& w) { out.set(w, c); });
  }
  return out;
}

Series delta(int s, int order) {
  Series out(s, order);
  for (int r = 1; r <= s; ++r) out.set({r}, 1);
  return out;
}

Series geometric(int d, int order) {
  Series out(d, order);
  for (int n = 1; n <= order; ++n) {
    for (int i = 1; i <= d; ++i) out.set(Word(static_cast<std::size_t>(n), i), 1);
  }
  return out;
}

Series h_series(int d, int order) {
  Rational dd = d;
  return boxed_convolve(geometric(d, order), dd * dilate(moebius(d, order), 1 / dd));
}

double convolution_cost(int alphabet, int order) {
  double total = 0;
  double cat = 1;
  for (int n = 1; n <= order; ++n) {
    cat = cat * 2 * (2 * n - 1) / (n + 1);
    total += cat * std::pow(static_cast<double>(alphabet), n);
  }
  return total;
}

std::string to_tsv(const Series& f, int pair_d) {
  std::ostringstream out;
  for (const auto& [w, c] : f.terms()) {
    out << (pair_d > 0 ? format_pair_word(w, pair_d) : format_word(w)) << '\t' << to_string(c) << '\n';
  }
  return out.str();
}

}  // namespace ncfree
