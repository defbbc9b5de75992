#include "ncfree/opvalued.hpp"

#include <functional>
#include <sstream>

namespace ncfree {

ScalarMatrix expect_b(const CumulantModel& model, const PolyMatrix& x) {
  ScalarMatrix out(x.rows(), x.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) out(i, j) = phi_poly(model, x(i, j));
  }
  return out;
}

ScalarMatrix expect_d(const CumulantModel& model, const PolyMatrix& x) {
  ScalarMatrix out = zero_scalar(static_cast<int>(x.rows()));
  for (Eigen::Index i = 0; i < x.rows(); ++i) out(i, i) = phi_poly(model, x(i, i));
  return out;
}

namespace {

ScalarMatrix expect(const CumulantModel& model, const PolyMatrix& x, Algebra algebra) {
  return algebra == Algebra::B ? expect_b(model, x) : expect_d(model, x);
}

// Entry (i,j) of x as c·g_k; c = 0 for a zero entry.
struct LinearEntry {
  int generator = 0;
  Rational coefficient = 0;
};

LinearEntry linear_entry(const PolyMatrix& x, int i, int j) {
  const NcPolynomial& p = x(i - 1, j - 1);
  if (p.is_zero()) return {};
  const auto& [w, c] = *p.terms().begin();
  if (p.terms().size() != 1 || w.size() != 1) {
    throw std::invalid_argument("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                ") is not a multiple of a single generator: " + p.to_string());
  }
  return {w.front(), c};
}

// Calls f(word, coefficient) for every chain i -> i_1 -> ... -> i_{n-1} -> j whose entries are all nonzero.
void for_each_chain(const std::vector<PolyMatrix>& xs, int i, int j,
                    const std::function<void(const Word&, const Rational&)>& f) {
  const int n = static_cast<int>(xs.size());
  const int d = static_cast<int>(xs.front().rows());
  Word w;
  std::function<void(int, int, const Rational&)> rec = [&](int m, int row, const Rational& coef) {
    if (m == n - 1) {
      LinearEntry e = linear_entry(xs[static_cast<std::size_t>(m)], row, j);
      if (e.coefficient == 0) return;
      w.push_back(e.generator);
      f(w, coef * e.coefficient);
      w.pop_back();
      return;
    }
    for (int col = 1; col <= d; ++col) {
      LinearEntry e = linear_entry(xs[static_cast<std::size_t>(m)], row, col);
      if (e.coefficient == 0) continue;
      w.push_back(e.generator);
      rec(m + 1, col, coef * e.coefficient);
      w.pop_back();
    }
  };
  rec(0, i, Rational(1));
}

void require_square(const std::vector<PolyMatrix>& xs) {
  if (xs.empty()) throw std::invalid_argument("cumulant of zero arguments");
  for (const auto& x : xs) {
    if (x.rows() != xs.front().rows() || x.cols() != x.rows()) throw std::invalid_argument("arguments must be d×d");
  }
}

}  // namespace

ScalarMatrix opvalued_cumulant_generic(const CumulantModel& model, const std::vector<PolyMatrix>& xs, Algebra algebra,
                                       Extraction extraction) {
  require_square(xs);
  const int n = static_cast<int>(xs.size());
  PolyMatrix product = xs.front();
  for (int k = 1; k < n; ++k) product = product.lazyProduct(xs[static_cast<std::size_t>(k)]).eval();
  ScalarMatrix out = expect(model, product, algebra);
  const Partition top = Partition::one(n);
  for (const auto& pair : nc_table(n)) {
    if (pair.pi == top) continue;
    out -= opvalued_cumulant_pi(model, pair.pi, xs, algebra, extraction);
  }
  return out;
}

ScalarMatrix opvalued_cumulant_pi(const CumulantModel& model, const Partition& pi, const std::vector<PolyMatrix>& xs,
                                  Algebra algebra, Extraction extraction) {
  require_square(xs);
  if (pi.size() != static_cast<int>(xs.size())) throw std::invalid_argument("partition size differs from argument count");
  if (pi.block_count() == 1) return opvalued_cumulant_generic(model, xs, algebra, extraction);

  const auto& block = extraction == Extraction::Leftmost ? interval_block(pi) : last_interval_block(pi);
  const int a = block.front();
  const int b = block.back();
  std::vector<PolyMatrix> inner(xs.begin() + (a - 1), xs.begin() + b);
  PolyMatrix value = lift(opvalued_cumulant_generic(model, inner, algebra, extraction));

  std::vector<PolyMatrix> rest;
  std::vector<int> keep;
  for (int k = 1; k <= pi.size(); ++k) {
    if (k >= a && k <= b) continue;
    keep.push_back(k);
    rest.push_back(xs[static_cast<std::size_t>(k - 1)]);
  }
  if (a > 1) {
    rest[static_cast<std::size_t>(a - 2)] = rest[static_cast<std::size_t>(a - 2)].lazyProduct(value).eval();
  } else {
    rest.front() = value.lazyProduct(rest.front()).eval();
  }
  return opvalued_cumulant_pi(model, restrict_to(pi, keep), rest, algebra, extraction);
}

ScalarMatrix bvalued_cumulant_entrywise(const CumulantModel& model, const std::vector<PolyMatrix>& xs) {
  return bvalued_cumulant_pi(model, Partition::one(static_cast<int>(xs.size())), xs);
}

ScalarMatrix bvalued_cumulant_pi(const CumulantModel& model, const Partition& pi, const std::vector<PolyMatrix>& xs) {
  require_square(xs);
  if (pi.size() != static_cast<int>(xs.size())) throw std::invalid_argument("partition size differs from argument count");
  const int d = static_cast<int>(xs.front().rows());
  ScalarMatrix out = zero_scalar(d);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      Rational sum = 0;
      for_each_chain(xs, i, j, [&](const Word& w, const Rational& c) { sum += c * gen_coef(model.table(), w, pi); });
      out(i - 1, j - 1) = sum;
    }
  }
  return out;
}

Eq73Result check_chain_hypothesis(const MatrixFamily& fam) {
  const int d = fam.d;
  std::vector<std::vector<EntryIndex>> where(static_cast<std::size_t>(fam.model.generators()) + 1);
  for (int r = 1; r <= fam.s(); ++r) {
    for (int i = 1; i <= d; ++i) {
      for (int j = 1; j <= d; ++j) {
        LinearEntry e = linear_entry(fam.matrices[static_cast<std::size_t>(r - 1)], i, j);
        if (e.coefficient != 0) where[static_cast<std::size_t>(e.generator)].push_back({r, i, j});
      }
    }
  }
  Eq73Result result;
  for (const auto& [w, c] : fam.model.table().terms()) {
    std::vector<EntryIndex> chosen;
    std::function<bool(std::size_t)> rec = [&](std::size_t pos) {
      if (pos == w.size()) {
        if (chosen.front().i == chosen.back().j) return true;
        ChainWitness wit;
        wit.indices.push_back(chosen.front().i);
        for (const auto& e : chosen) {
          wit.r_word.push_back(e.r);
          wit.indices.push_back(e.j);
        }
        wit.value = c;
        result = {false, wit};
        return false;
      }
      for (const auto& e : where[static_cast<std::size_t>(w[pos])]) {
        if (pos > 0 && chosen.back().j != e.i) continue;  // only chain-consistent words are constrained
        chosen.push_back(e);
        if (!rec(pos + 1)) return false;
        chosen.pop_back();
      }
      return true;
    };
    if (!rec(0)) break;
  }
  return result;
}

ScalarMatrix dvalued_cumulant(const MatrixFamily& fam, const Word& r_word, const std::vector<ScalarMatrix>& lambdas) {
  const int n = static_cast<int>(r_word.size());
  const int d = fam.d;
  if (n < 1) throw std::invalid_argument("dvalued_cumulant: empty r-word");
  if (static_cast<int>(lambdas.size()) != n - 1) throw std::invalid_argument("dvalued_cumulant: need n-1 diagonal matrices");
  for (const auto& l : lambdas) {
    if (l.rows() != d || l.cols() != d || !is_diagonal(l)) throw std::invalid_argument("dvalued_cumulant: Λ must be diagonal d×d");
  }
  for (Letter r : r_word) {
    if (r < 1 || r > fam.s()) throw std::out_of_range("dvalued_cumulant: matrix index out of range");
  }
  auto hyp = check_chain_hypothesis(fam);
  if (!hyp.holds) {
    std::ostringstream msg;
    msg << "chain hypothesis fails at r-word " << format_word(hyp.witness.r_word) << ", indices ";
    for (std::size_t k = 0; k < hyp.witness.indices.size(); ++k) msg << (k ? "," : "") << hyp.witness.indices[k];
    msg << ", value " << to_string(hyp.witness.value);
    throw std::domain_error(msg.str());
  }

  std::vector<PolyMatrix> xs;
  for (Letter r : r_word) xs.push_back(fam.matrices[static_cast<std::size_t>(r - 1)]);
  ScalarMatrix out = zero_scalar(d);
  for (int j = 1; j <= d; ++j) {
    // Chains j -> i_1 -> ... -> i_{n-1} -> j weighted by λ^{(1)}_{i_1}⋯λ^{(n-1)}_{i_{n-1}}.
    Rational sum = 0;
    std::function<void(int, int, const Rational&, Word&)> rec = [&](int m, int row, const Rational& coef, Word& w) {
      const PolyMatrix& x = xs[static_cast<std::size_t>(m)];
      if (m == n - 1) {
        LinearEntry e = linear_entry(x, row, j);
        if (e.coefficient == 0) return;
        w.push_back(e.generator);
        sum += coef * e.coefficient * fam.model.cumulant(w);
        w.pop_back();
        return;
      }
      for (int col = 1; col <= d; ++col) {
        Rational weight = lambdas[static_cast<std::size_t>(m)](col - 1, col - 1);
        if (weight == 0) continue;
        LinearEntry e = linear_entry(x, row, col);
        if (e.coefficient == 0) continue;
        w.push_back(e.generator);
        rec(m + 1, col, coef * e.coefficient * weight, w);
        w.pop_back();
      }
    };
    Word w;
    rec(0, j, Rational(1), w);
    out(j - 1, j - 1) = sum;
  }
  return out;
}

TensorGrid odot(const std::vector<PolyMatrix>& xs) {
  require_square(xs);
  const int d = static_cast<int>(xs.front().rows());
  TensorGrid grid(static_cast<std::size_t>(d), std::vector<TensorSum>(static_cast<std::size_t>(d)));
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      auto& cell = grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      for_each_chain(xs, i, j, [&](const Word& w, const Rational& c) {
        auto [it, inserted] = cell.try_emplace(w, c);
        if (!inserted) it->second += c;
        if (it->second == 0) cell.erase(it);
      });
    }
  }
  return grid;
}

namespace {

Rational apply_cumulant(const CumulantModel& model, const TensorSum& cell) {
  Rational sum = 0;
  for (const auto& [w, c] : cell) sum += c * model.cumulant(w);
  return sum;
}

}  // namespace

ScalarMatrix ktilde_b(const CumulantModel& model, const TensorGrid& grid) {
  const int d = static_cast<int>(grid.size());
  ScalarMatrix out = zero_scalar(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) out(i, j) = apply_cumulant(model, grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return out;
}

ScalarMatrix ktilde_d(const CumulantModel& model, const TensorGrid& grid) {
  const int d = static_cast<int>(grid.size());
  ScalarMatrix out = zero_scalar(d);
  for (int i = 0; i < d; ++i) out(i, i) = apply_cumulant(model, grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
  return out;
}

Rational ktilde_c(const CumulantModel& model, const TensorGrid& grid) {
  const int d = static_cast<int>(grid.size());
  Rational sum = 0;
  for (int i = 0; i < d; ++i) sum += apply_cumulant(model, grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
  return sum / d;
}

namespace {

struct CenteredMonomial {
  std::string label;
  PolyMatrix value;  // x - E_D(x)
  int degree;
};

bool is_zero(const PolyMatrix& m) {
  for (Eigen::Index k = 0; k < m.size(); ++k) {
    if (!m.data()[k].is_zero()) return false;
  }
  return true;
}

bool is_zero(const ScalarMatrix& m) {
  for (Eigen::Index k = 0; k < m.size(); ++k) {
    if (m.data()[k] != 0) return false;
  }
  return true;
}

// x·V_{i,j}: column i of x moved to column j.
PolyMatrix times_unit(const PolyMatrix& x, int i, int j) {
  PolyMatrix out = zero_poly(static_cast<int>(x.rows()));
  out.col(j - 1) = x.col(i - 1);
  return out;
}

}  // namespace

AmalgamationResult check_amalgamated_freeness(const CumulantModel& model, const std::vector<PolyMatrix>& generators,
                                              int budget) {
  if (generators.empty()) throw std::invalid_argument("check_amalgamated_freeness: no generators");
  if (budget < 0 || budget > model.order()) {
    throw std::out_of_range("degree budget " + std::to_string(budget) + " exceeds model order " +
                            std::to_string(model.order()));
  }
  const int d = static_cast<int>(generators.front().rows());
  for (const auto& g : generators) {
    if (g.rows() != d || g.cols() != d) throw std::invalid_argument("generators must share dimension d");
  }
  std::vector<int> gen_degree;
  for (const auto& g : generators) gen_degree.push_back(std::max(1, degree(g)));

  // G_1 Q_1 G_2 ⋯ G_k with interior Q ∈ {P_1..P_d}, ordered by degree then construction order.
  std::vector<CenteredMonomial> monomials;
  struct Raw {
    std::string label;
    PolyMatrix value;
    int degree;
  };
  std::vector<Raw> frontier;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (gen_degree[g] <= budget) frontier.push_back({"A" + std::to_string(g + 1), generators[g], gen_degree[g]});
  }
  std::vector<Raw> all;
  while (!frontier.empty()) {
    std::vector<Raw> next;
    for (const auto& m : frontier) {
      all.push_back(m);
      for (int q = 1; q <= d; ++q) {
        for (std::size_t g = 0; g < generators.size(); ++g) {
          if (m.degree + gen_degree[g] > budget) continue;
          PolyMatrix projected = zero_poly(d);
          projected.col(q - 1) = m.value.col(q - 1);
          next.push_back({m.label + " P" + std::to_string(q) + " A" + std::to_string(g + 1),
                          projected.lazyProduct(generators[g]).eval(), m.degree + gen_degree[g]});
        }
      }
    }
    frontier = std::move(next);
  }
  std::stable_sort(all.begin(), all.end(), [](const Raw& a, const Raw& b) { return a.degree < b.degree; });
  for (auto& m : all) {
    PolyMatrix centered = m.value - lift(expect_d(model, m.value));
    if (is_zero(centered)) continue;
    monomials.push_back({"c(" + m.label + ")", std::move(centered), m.degree});
  }

  std::vector<std::pair<int, int>> units;
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      if (i != j) units.emplace_back(i, j);
    }
  }

  AmalgamationResult result;
  if (units.empty()) return result;
  std::vector<std::string> labels;
  bool found = false;
  const PolyMatrix unit = identity_poly(d);

  // Position m of n = nv+1 factors; `remaining` degree must be used up exactly.
  std::function<void(int, int, int, const PolyMatrix&)> place = [&](int nv, int m, int remaining, const PolyMatrix& prefix) {
    if (found) return;
    const bool end = (m == 0 || m == nv);
    auto after_c = [&](const PolyMatrix& with_c, const std::string& label, int rem) {
      labels.push_back(label);
      if (m == nv) {
        if (rem == 0) {
          ++result.words_checked;
          ScalarMatrix e = expect_d(model, with_c);
          if (!is_zero(e)) {
            std::string text = "E_D(";
            for (std::size_t k = 0; k < labels.size(); ++k) text += (k ? " " : "") + labels[k];
            result = {false, text + ")", e, result.words_checked};
            found = true;
          }
        }
      } else {
        // Interior factors still to place each need degree >= 1.
        int interior_needed = nv - 1 - m;
        if (rem >= interior_needed) {
          for (const auto& [i, j] : units) {
            labels.push_back("V[" + std::to_string(i) + "," + std::to_string(j) + "]");
            place(nv, m + 1, rem, times_unit(with_c, i, j));
            labels.pop_back();
            if (found) break;
          }
        }
      }
      labels.pop_back();
    };
    for (const auto& c : monomials) {
      if (found) return;
      if (c.degree > remaining) break;
      after_c(m == 0 ? c.value : prefix.lazyProduct(c.value).eval(), c.label, remaining - c.degree);
    }
    if (end && !found) after_c(m == 0 ? unit : prefix, "I", remaining);
  };

  for (int nv = 1; nv <= budget + 1 && !found; ++nv) {
    for (int total = std::max(0, nv - 1); total <= budget && !found; ++total) place(nv, 0, total, unit);
  }
  return result;
}

Series dcumulant_table(const MatrixFamily& fam, int order) {
  const int d = fam.d;
  const int s = fam.s();
  Series out(s * d, order);
  std::vector<PolyMatrix> projected;  // A_r P_i at index (r-1)*d + (i-1)
  for (int r = 1; r <= s; ++r) {
    for (int i = 1; i <= d; ++i) {
      PolyMatrix x = zero_poly(d);
      x.col(i - 1) = fam.matrices[static_cast<std::size_t>(r - 1)].col(i - 1);
      projected.push_back(std::move(x));
    }
  }
  for (int n = 1; n <= order; ++n) {
    for_each_word(s, n, [&](const Word& r_word) {
      for_each_word(d, n - 1, [&](const Word& i_word) {
        std::vector<PolyMatrix> xs;
        for (int m = 0; m < n - 1; ++m) {
          xs.push_back(projected[static_cast<std::size_t>((r_word[static_cast<std::size_t>(m)] - 1) * d +
                                                          (i_word[static_cast<std::size_t>(m)] - 1))]);
        }
        xs.push_back(fam.matrices[static_cast<std::size_t>(r_word.back() - 1)]);
        ScalarMatrix k = opvalued_cumulant_generic(fam.model, xs, Algebra::D);
        Word pw(static_cast<std::size_t>(n));
        for (int m = 0; m < n - 1; ++m) {
          pw[static_cast<std::size_t>(m)] = pair_letter(r_word[static_cast<std::size_t>(m)], i_word[static_cast<std::size_t>(m)], d);
        }
        for (int j = 1; j <= d; ++j) {
          pw.back() = pair_letter(r_word.back(), j, d);
          out.set(pw, k(j - 1, j - 1));
        }
      });
    });
  }
  return out;
}

RCyclicFamily rcyclic_witness_from_dcumulants(const Series& dcumulants, int d, int s, int order) {
  if (dcumulants.alphabet() != s * d) throw std::invalid_argument("D-cumulant data must be over the s*d pair alphabet");
  if (order > dcumulants.order()) throw std::invalid_argument("D-cumulant data truncated below the requested order");
  return {d, s, dcumulants.truncated(order)};
}

}  // namespace ncfree
