#include "ncfree/rcyclic.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace ncfree {

int entry_generator(int r, int i, int j, int d) { return ((r - 1) * d + (i - 1)) * d + j; }

EntryIndex entry_of_generator(int g, int d) {
  int z = g - 1;
  return {z / (d * d) + 1, (z / d) % d + 1, z % d + 1};
}

MatrixFamily canonical_family(CumulantModel model, int d, int s) {
  if (d < 1 || s < 1) throw std::invalid_argument("canonical_family: d and s must be positive");
  if (model.generators() != s * d * d) {
    throw std::invalid_argument("canonical_family: model has " + std::to_string(model.generators()) +
                                " generators, expected s*d*d = " + std::to_string(s * d * d));
  }
  MatrixFamily fam{std::move(model), d, {}};
  for (int r = 1; r <= s; ++r) {
    PolyMatrix a(d, d);
    for (int i = 1; i <= d; ++i) {
      for (int j = 1; j <= d; ++j) a(i - 1, j - 1) = NcPolynomial::generator(entry_generator(r, i, j, d));
    }
    fam.matrices.push_back(std::move(a));
  }
  return fam;
}

Word cyclic_generator_word(const Word& pair_word, int d) {
  const std::size_t n = pair_word.size();
  Word out(n);
  for (std::size_t m = 0; m < n; ++m) {
    int prev = pair_inner(pair_word[(m + n - 1) % n], d);
    out[m] = entry_generator(pair_outer(pair_word[m], d), prev, pair_inner(pair_word[m], d), d);
  }
  return out;
}

MatrixFamily realize(const RCyclicFamily& fam) {
  if (fam.table.alphabet() != fam.s * fam.d) throw std::invalid_argument("realize: table alphabet must be s*d");
  CumulantModel model(fam.s * fam.d * fam.d, fam.table.order());
  for (const auto& [w, c] : fam.table.terms()) model.set_cumulant(cyclic_generator_word(w, fam.d), c);
  return canonical_family(std::move(model), fam.d, fam.s);
}

std::string CyclicityWitness::describe() const {
  std::ostringstream out;
  out << "k_" << entries.size() << "(";
  for (std::size_t k = 0; k < entries.size(); ++k) {
    out << (k ? "," : "") << "a" << entries[k].r << "[" << entries[k].i << "," << entries[k].j << "]";
  }
  out << ")=" << to_string(value);
  return out.str();
}

namespace {

bool is_cyclic(const std::vector<EntryIndex>& e) {
  for (std::size_t m = 0; m < e.size(); ++m) {
    if (e[m].j != e[(m + 1) % e.size()].i) return false;
  }
  return true;
}

// generator -> the entries holding it.
std::vector<std::vector<EntryIndex>> generator_entries(const MatrixFamily& fam) {
  std::vector<std::vector<EntryIndex>> where(static_cast<std::size_t>(fam.model.generators()) + 1);
  for (int r = 1; r <= fam.s(); ++r) {
    const PolyMatrix& a = fam.matrices[static_cast<std::size_t>(r - 1)];
    if (a.rows() != fam.d || a.cols() != fam.d) throw std::invalid_argument("matrix dimensions differ from d");
    for (int i = 1; i <= fam.d; ++i) {
      for (int j = 1; j <= fam.d; ++j) {
        const NcPolynomial& p = a(i - 1, j - 1);
        if (p.is_zero()) continue;
        auto g = p.as_generator();
        if (!g || *g > fam.model.generators()) {
          throw std::invalid_argument("entry (" + std::to_string(i) + "," + std::to_string(j) + ") of matrix " +
                                      std::to_string(r) + " is not a single generator");
        }
        where[static_cast<std::size_t>(*g)].push_back({r, i, j});
      }
    }
  }
  return where;
}

// Calls f(entries) for every assignment of entries to the letters of w; stops when f returns false.
bool for_each_entry_assignment(const Word& w, const std::vector<std::vector<EntryIndex>>& where,
                               const std::function<bool(const std::vector<EntryIndex>&)>& f) {
  std::vector<EntryIndex> current;
  std::function<bool(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == w.size()) return f(current);
    for (const auto& e : where[static_cast<std::size_t>(w[pos])]) {
      current.push_back(e);
      if (!rec(pos + 1)) return false;
      current.pop_back();
    }
    return true;
  };
  return rec(0);
}

}  // namespace

RCyclicResult is_rcyclic(const MatrixFamily& fam) {
  auto where = generator_entries(fam);
  RCyclicResult result;
  for (const auto& [w, c] : fam.model.table().terms()) {
    bool ok = for_each_entry_assignment(w, where, [&](const std::vector<EntryIndex>& e) {
      if (is_cyclic(e)) return true;
      result = {false, {e, c}};
      return false;
    });
    if (!ok) break;
  }
  return result;
}

Series determining_series(const MatrixFamily& fam) {
  auto check = is_rcyclic(fam);
  if (!check.rcyclic) throw std::domain_error("family is not R-cyclic: " + check.witness.describe());
  auto where = generator_entries(fam);
  const int d = fam.d;
  Series f(fam.s() * d, fam.model.order());
  for (const auto& [w, c] : fam.model.table().terms()) {
    for_each_entry_assignment(w, where, [&](const std::vector<EntryIndex>& e) {
      Word pw;
      for (const auto& x : e) pw.push_back(pair_letter(x.r, x.j, d));
      f.set(pw, c);
      return true;
    });
  }
  return f;
}

Series substitute_outer(const Series& g, int d) {
  if (g.alphabet() % d != 0) throw std::invalid_argument("substitute_outer: alphabet is not a multiple of d");
  Series out(g.alphabet() / d, g.order());
  for (const auto& [w, c] : g.terms()) {
    Word outer;
    for (Letter l : w) outer.push_back(pair_outer(l, d));
    out.add_to(outer, c);
  }
  return out;
}

Series projected_series(const Series& f, int d, Projection which) {
  Series kernel = which == Projection::Moments ? geometric(d, f.order()) : h_series(d, f.order());
  return Rational(1, d) * ext_boxed_convolve(f, kernel);
}

Series family_moments(const Series& f, int d) { return substitute_outer(projected_series(f, d, Projection::Moments), d); }

Series family_rtransform(const Series& f, int d) {
  return substitute_outer(projected_series(f, d, Projection::RTransform), d);
}

PartialSumViolation::PartialSumViolation(Word r_word_, int i_n_, int i_n_prime_, Rational sum_, Rational sum_prime_)
    : std::domain_error("partial sums over i_1..i_{n-1} for r-word " + format_word(r_word_) + " depend on i_n: " +
                        to_string(sum_) + " at i_n=" + std::to_string(i_n_) + ", " + to_string(sum_prime_) +
                        " at i_n=" + std::to_string(i_n_prime_)),
      r_word(std::move(r_word_)),
      i_n(i_n_),
      i_n_prime(i_n_prime_),
      sum(std::move(sum_)),
      sum_prime(std::move(sum_prime_)) {}

Series partial_sum_rtransform(const Series& f, int d) {
  if (f.alphabet() % d != 0) throw std::invalid_argument("partial_sum_rtransform: alphabet is not a multiple of d");
  const int s = f.alphabet() / d;
  std::map<Word, std::vector<Rational>, ShortLex> sums;
  for (const auto& [w, c] : f.terms()) {
    Word r;
    for (Letter l : w) r.push_back(pair_outer(l, d));
    auto& row = sums.try_emplace(r, std::vector<Rational>(static_cast<std::size_t>(d) + 1, Rational(0))).first->second;
    row[static_cast<std::size_t>(pair_inner(w.back(), d))] += c;
  }
  Series out(s, f.order());
  for (const auto& [r, row] : sums) {
    for (int i = 2; i <= d; ++i) {
      if (row[static_cast<std::size_t>(i)] != row[1]) throw PartialSumViolation(r, 1, i, row[1], row[static_cast<std::size_t>(i)]);
    }
    out.set(r, row[1]);
  }
  return out;
}

std::vector<PartitionTerm> partial_sum_terms(const Series& f, int d, const Word& r_word) {
  const int n = static_cast<int>(r_word.size());
  Series h = h_series(d, f.order());
  std::vector<PartitionTerm> out;
  for (const auto& pair : nc_table(n)) {
    Rational total = 0;
    for_each_word(d, n, [&](const Word& i) {
      Word pw(static_cast<std::size_t>(n));
      for (int m = 0; m < n; ++m) pw[static_cast<std::size_t>(m)] = pair_letter(r_word[static_cast<std::size_t>(m)], i[static_cast<std::size_t>(m)], d);
      Rational x = gen_coef(f, pw, pair.pi);
      if (x != 0) total += x * gen_coef(h, i, pair.kr);
    });
    out.push_back({pair.pi, total / d});
  }
  return out;
}

ClosureResult closure_check(const MatrixFamily& fam, const PolyMatrix& new_matrix, int budget) {
  const int d = fam.d;
  if (new_matrix.rows() != d || new_matrix.cols() != d) throw std::invalid_argument("closure_check: new matrix must be d×d");
  const int max_degree = std::min(budget, fam.model.order());

  struct Letter_ {
    EntryIndex entry;
    NcPolynomial value;
    int degree;
  };
  std::vector<Letter_> letters;
  for (int r = 1; r <= fam.s() + 1; ++r) {
    const PolyMatrix& a = r <= fam.s() ? fam.matrices[static_cast<std::size_t>(r - 1)] : new_matrix;
    for (int i = 1; i <= d; ++i) {
      for (int j = 1; j <= d; ++j) {
        const NcPolynomial& p = a(i - 1, j - 1);
        if (!p.is_zero()) letters.push_back({{r, i, j}, p, p.degree()});
      }
    }
  }

  std::map<Word, Rational, ShortLex> phi_cache;
  auto phi = [&](const NcPolynomial& p) {
    Rational sum = 0;
    for (const auto& [w, c] : p.terms()) {
      auto it = phi_cache.find(w);
      if (it == phi_cache.end()) it = phi_cache.emplace(w, phi_word(fam.model, w)).first;
      sum += c * it->second;
    }
    return sum;
  };

  std::map<Word, Rational, ShortLex> moments;
  Word w;
  std::function<void(const NcPolynomial&, int)> extend = [&](const NcPolynomial& prefix, int deg) {
    if (static_cast<int>(w.size()) == budget) return;
    for (std::size_t l = 0; l < letters.size(); ++l) {
      if (deg + letters[l].degree > max_degree) continue;
      NcPolynomial product = prefix * letters[l].value;
      w.push_back(static_cast<Letter>(l) + 1);
      moments.emplace(w, phi(product));
      extend(product, deg + letters[l].degree);
      w.pop_back();
    }
  };
  extend(NcPolynomial(1), 0);

  for (const auto& [word, k] : cumulants_from_moments(moments)) {
    std::vector<EntryIndex> e;
    for (Letter l : word) e.push_back(letters[static_cast<std::size_t>(l - 1)].entry);
    if (!is_cyclic(e)) return {false, {e, k}};
  }
  return {};
}

}  // namespace ncfree
