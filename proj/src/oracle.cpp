#include "ncfree/oracle.hpp"

#include "ncfree/specfile.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <sstream>

namespace ncfree::oracle {

std::vector<Partition> all_set_partitions(int n) {
  if (n < 1 || n > 9) throw std::out_of_range("all_set_partitions: n must be in 1..9");
  std::vector<Partition> out;
  // Restricted growth strings: a[0] = 0, a[k] <= 1 + max(a[0..k-1]).
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::vector<int> top(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<Partition::Block> blocks(static_cast<std::size_t>(top.back()) + 1);
    for (int k = 0; k < n; ++k) blocks[static_cast<std::size_t>(a[static_cast<std::size_t>(k)])].push_back(k + 1);
    out.emplace_back(n, std::move(blocks));
    int k = n - 1;
    while (k > 0 && a[static_cast<std::size_t>(k)] > top[static_cast<std::size_t>(k - 1)]) --k;
    if (k == 0) break;
    ++a[static_cast<std::size_t>(k)];
    top[static_cast<std::size_t>(k)] = std::max(top[static_cast<std::size_t>(k - 1)], a[static_cast<std::size_t>(k)]);
    for (int m = k + 1; m < n; ++m) {
      a[static_cast<std::size_t>(m)] = 0;
      top[static_cast<std::size_t>(m)] = top[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

bool naive_is_noncrossing(const Partition& p) {
  const int n = p.size();
  std::vector<int> label(static_cast<std::size_t>(n) + 1);
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    for (int k : p.blocks()[b]) label[static_cast<std::size_t>(k)] = static_cast<int>(b);
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        for (int d = c + 1; d <= n; ++d) {
          auto L = [&](int k) { return label[static_cast<std::size_t>(k)]; };
          if (L(a) == L(c) && L(b) == L(d) && L(a) != L(b)) return false;
        }
      }
    }
  }
  return true;
}

std::vector<Partition> nc_by_filter(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  for (auto& p : all_set_partitions(n)) {
    if (naive_is_noncrossing(p)) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return cache.emplace(n, std::move(out)).first->second;
}

namespace {

// images[k] for k in 1..n; index 0 unused.
using Perm = std::vector<int>;

Perm cycles_perm(const Partition& p) {
  Perm out(static_cast<std::size_t>(p.size()) + 1);
  for (const auto& block : p.blocks()) {
    for (std::size_t m = 0; m < block.size(); ++m) out[static_cast<std::size_t>(block[m])] = block[(m + 1) % block.size()];
  }
  return out;
}

}  // namespace

Partition kreweras_by_search(const Partition& p) {
  const int n = p.size();
  if (n > 8) throw std::out_of_range("kreweras_by_search: n must be at most 8");
  Perm pp = cycles_perm(p);
  std::vector<Partition> hits;
  for (const auto& q : nc_by_filter(n)) {
    Perm qq = cycles_perm(q);
    bool ok = true;
    for (int k = 1; k <= n && ok; ++k) ok = pp[static_cast<std::size_t>(qq[static_cast<std::size_t>(k)])] == k % n + 1;
    if (ok) hits.push_back(q);
  }
  if (hits.size() != 1) {
    throw std::logic_error("kreweras_by_search: " + std::to_string(hits.size()) + " solutions for " + p.to_string());
  }
  return hits.front();
}

namespace {

Word sub_word(const Word& w, const Partition::Block& block) {
  Word out;
  for (int k : block) out.push_back(w[static_cast<std::size_t>(k - 1)]);
  return out;
}

}  // namespace

std::map<Word, Rational, ShortLex> cumulants_by_inversion(const std::map<Word, Rational, ShortLex>& moments) {
  std::map<Word, Rational, ShortLex> k;
  // Shortlex iteration visits every sub-word before the words containing it.
  for (const auto& [w, m] : moments) {
    const int n = static_cast<int>(w.size());
    if (n > 6) throw std::out_of_range("cumulants_by_inversion: words longer than 6");
    Rational value = m;
    for (const auto& pi : nc_by_filter(n)) {
      if (pi.block_count() == 1) continue;
      Rational term = 1;
      for (const auto& block : pi.blocks()) {
        auto it = k.find(sub_word(w, block));
        if (it == k.end()) throw std::invalid_argument("cumulants_by_inversion: moment data not closed under sub-words");
        term *= it->second;
        if (term == 0) break;
      }
      value -= term;
    }
    k.emplace(w, value);
  }
  return k;
}

Rational naive_phi(const CumulantModel& model, const Word& w) {
  if (static_cast<int>(w.size()) > model.order()) throw std::out_of_range("naive_phi: word longer than the model order");
  if (w.empty()) return 1;
  Rational sum = 0;
  for (const auto& pi : nc_by_filter(static_cast<int>(w.size()))) {
    Rational term = 1;
    for (const auto& block : pi.blocks()) {
      term *= model.cumulant(sub_word(w, block));
      if (term == 0) break;
    }
    sum += term;
  }
  return sum;
}

Series matrix_moments_bruteforce(const MatrixFamily& fam, int order) {
  const int d = fam.d;
  const int s = fam.s();
  Series out(s, order);
  std::map<Word, Rational> phi_cache;
  auto phi = [&](const Word& w) {
    auto it = phi_cache.find(w);
    if (it == phi_cache.end()) it = phi_cache.emplace(w, naive_phi(fam.model, w)).first;
    return it->second;
  };
  for (int n = 1; n <= order; ++n) {
    for_each_word(s, n, [&](const Word& r) {
      Rational total = 0;
      for_each_word(d, n, [&](const Word& idx) {
        NcPolynomial product(1);
        for (int m = 0; m < n; ++m) {
          int row = idx[static_cast<std::size_t>(m)];
          int col = idx[static_cast<std::size_t>((m + 1) % n)];
          product = product * fam.matrices[static_cast<std::size_t>(r[static_cast<std::size_t>(m)] - 1)](row - 1, col - 1);
          if (product.is_zero()) return;
        }
        for (const auto& [w, c] : product.terms()) total += c * phi(w);
      });
      out.set(r, total / d);
    });
  }
  return out;
}

std::string OracleReport::to_tsv() const {
  return name + "\t" + inputs + "\t" + expected + "\t" + actual + "\t" + (pass ? "PASS" : "FAIL");
}

OracleReport make_report(std::string name, std::string inputs, std::string expected, std::string actual) {
  bool pass = expected == actual;
  return {std::move(name), std::move(inputs), std::move(expected), std::move(actual), pass};
}

namespace {

std::string join_partitions(std::vector<Partition> ps) {
  std::sort(ps.begin(), ps.end());
  std::string out;
  for (const auto& p : ps) out += p.to_string();
  return out;
}

// Series as `w=p/q;` pairs in shortlex order.
std::string flat(const Series& f) {
  std::string out;
  for (const auto& [w, c] : f.terms()) out += format_word(w) + "=" + to_string(c) + ";";
  return out.empty() ? "0" : out;
}

std::string flat(const std::map<Word, Rational, ShortLex>& f) {
  std::string out;
  for (const auto& [w, c] : f) {
    if (c != 0) out += format_word(w) + "=" + to_string(c) + ";";
  }
  return out.empty() ? "0" : out;
}

void suite_nc(int order, std::vector<OracleReport>& out) {
  for (int n = 1; n <= std::min(order + 3, 8); ++n) {
    auto fast = enumerate_nc(n);
    auto slow = nc_by_filter(n);
    out.push_back(make_report("nc.count", "n=" + std::to_string(n), std::to_string(slow.size()), std::to_string(fast.size())));
    out.push_back(make_report("nc.set", "n=" + std::to_string(n), join_partitions(slow), join_partitions(fast)));
  }
}

void suite_kreweras(int order, std::vector<OracleReport>& out) {
  for (int n = 1; n <= std::min(order + 3, 7); ++n) {
    std::string expected, actual;
    for (const auto& p : enumerate_nc(n)) {
      expected += kreweras_by_search(p).to_string();
      actual += kreweras(p).to_string();
    }
    out.push_back(make_report("kreweras", "n=" + std::to_string(n), expected, actual));
  }
}

CumulantModel random_model(std::mt19937_64& rng, int generators, int order) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  std::bernoulli_distribution keep(0.5);
  CumulantModel model(generators, order);
  for (int n = 1; n <= order; ++n) {
    for_each_word(generators, n, [&](const Word& w) {
      if (keep(rng)) model.set_cumulant(w, ratio(num(rng), den(rng)));
    });
  }
  return model;
}

void suite_cumulants(int order, std::vector<OracleReport>& out) {
  const int n = std::clamp(order, 1, 5);
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 5; ++trial) {
    CumulantModel model = random_model(rng, 2, n);
    std::map<Word, Rational, ShortLex> moments;
    for (int len = 1; len <= n; ++len) {
      for_each_word(2, len, [&](const Word& w) { moments.emplace(w, naive_phi(model, w)); });
    }
    std::string inputs = "model#" + std::to_string(trial) + " order=" + std::to_string(n);
    out.push_back(make_report("cumulants.inversion", inputs, flat(model.table()), flat(cumulants_by_inversion(moments))));
    Series m = moment_series(model, {NcPolynomial::generator(1), NcPolynomial::generator(2)}, n);
    out.push_back(make_report("cumulants.moments", inputs, flat(moments), flat(m)));
    out.push_back(make_report("cumulants.rtransform", inputs, flat(model.table()), flat(r_transform(m))));
  }
}

void suite_moments(int order, std::vector<OracleReport>& out) {
  const int n = std::clamp(order, 1, 6);
  const Rational two(2), one(1), three(3);
  struct Case {
    std::string name;
    SpecFile spec;
  };
  std::vector<Case> cases = {
      {"diagonal-semicircular", gaussian_spec({{{two, 0}, {0, 4}}}, n)},
      {"circular-2x2", gaussian_spec({{{0, two}, {two, 0}}}, n)},
      {"semicircular-circular-2x2", gaussian_spec({{{two, three}, {three, one}}}, n)},
      {"two-free-2x2", gaussian_spec({{{two, three}, {three, one}}, {{one, two}, {two, two}}}, std::min(n, 4))},
  };
  for (const auto& c : cases) {
    MatrixFamily fam = to_family(c.spec);
    Series expected = matrix_moments_bruteforce(fam, c.spec.order);
    Series actual = family_moments(determining_series(fam), fam.d);
    out.push_back(make_report("moments", c.name + " order=" + std::to_string(c.spec.order), flat(expected), flat(actual)));
  }
}

}  // namespace

std::vector<OracleReport> run_suite(const std::string& name, int order) {
  if (order < 1) throw std::invalid_argument("run_suite: order must be positive");
  std::vector<OracleReport> out;
  bool all = name == "all";
  bool known = all;
  if (all || name == "nc") suite_nc(order, out), known = true;
  if (all || name == "kreweras") suite_kreweras(order, out), known = true;
  if (all || name == "cumulants") suite_cumulants(order, out), known = true;
  if (all || name == "moments") suite_moments(order, out), known = true;
  if (!known) throw std::invalid_argument("unknown suite `" + name + "` (nc, kreweras, cumulants, moments, all)");
  return out;
}

}  // namespace ncfree::oracle
