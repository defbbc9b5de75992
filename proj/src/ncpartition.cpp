#include "ncfree/ncpartition.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ncfree {

Partition::Partition(int n, std::vector<Block> blocks) : n_(n) {
  if (n < 1) throw std::invalid_argument("partition ground set must be non-empty");
  label_.assign(static_cast<std::size_t>(n), -1);
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
  for (std::size_t idx = 0; idx < blocks.size(); ++idx) {
    for (int k : blocks[idx]) {
      if (k < 1 || k > n) throw std::invalid_argument("block element out of range");
      auto& slot = label_[static_cast<std::size_t>(k - 1)];
      if (slot != -1) throw std::invalid_argument("blocks are not disjoint");
      slot = static_cast<int>(idx);
    }
  }
  if (std::find(label_.begin(), label_.end(), -1) != label_.end()) {
    throw std::invalid_argument("blocks do not cover the ground set");
  }
  blocks_ = std::move(blocks);
}

Partition Partition::one(int n) {
  Block b(static_cast<std::size_t>(n));
  std::iota(b.begin(), b.end(), 1);
  return Partition(n, {b});
}

Partition Partition::singletons(int n) {
  std::vector<Block> bs;
  for (int k = 1; k <= n; ++k) bs.push_back({k});
  return Partition(n, bs);
}

Partition Partition::parse(const std::string& text) {
  std::vector<Block> blocks;
  std::size_t pos = 0;
  int n = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '{') throw std::invalid_argument("expected '{' in partition '" + text + "'");
    auto close = text.find('}', pos);
    if (close == std::string::npos) throw std::invalid_argument("unterminated block in '" + text + "'");
    Block b;
    std::string body = text.substr(pos + 1, close - pos - 1);
    std::size_t start = 0;
    while (start <= body.size()) {
      auto comma = body.find(',', start);
      std::string item = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (item.empty()) throw std::invalid_argument("empty element in '" + text + "'");
      b.push_back(std::stoi(item));
      n = std::max(n, b.back());
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    blocks.push_back(std::move(b));
    pos = close + 1;
  }
  return Partition(n, std::move(blocks));
}

std::string Partition::to_string() const {
  std::string out;
  for (const auto& b : blocks_) {
    out += '{';
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(b[k]);
    }
    out += '}';
  }
  return out;
}

PartitionPermutation::PartitionPermutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("images do not form a bijection");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

PartitionPermutation PartitionPermutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  return PartitionPermutation(std::move(im));
}

PartitionPermutation PartitionPermutation::forward_cycle(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) im[static_cast<std::size_t>(k - 1)] = k % n + 1;
  return PartitionPermutation(std::move(im));
}

PartitionPermutation PartitionPermutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int k = 1; k <= size(); ++k) inv[static_cast<std::size_t>((*this)(k) - 1)] = k;
  return PartitionPermutation(std::move(inv));
}

Partition PartitionPermutation::cycles() const {
  std::vector<Partition::Block> blocks;
  std::vector<bool> seen(images_.size(), false);
  for (int k = 1; k <= size(); ++k) {
    if (seen[static_cast<std::size_t>(k - 1)]) continue;
    Partition::Block b;
    for (int j = k; !seen[static_cast<std::size_t>(j - 1)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j - 1)] = true;
      b.push_back(j);
    }
    blocks.push_back(std::move(b));
  }
  return Partition(size(), std::move(blocks));
}

PartitionPermutation operator*(const PartitionPermutation& a, const PartitionPermutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation sizes differ");
  std::vector<int> im(static_cast<std::size_t>(a.size()));
  for (int k = 1; k <= a.size(); ++k) im[static_cast<std::size_t>(k - 1)] = a(b(k));
  return PartitionPermutation(std::move(im));
}

bool is_noncrossing(const Partition& p) {
  // i < j < k < l with i~k, j~l in different blocks. Scanning with a stack of open
  // blocks: an element may only close back into the block on top of the stack.
  const int n = p.size();
  std::vector<int> last(p.block_count());
  for (std::size_t b = 0; b < p.block_count(); ++b) last[b] = p.blocks()[b].back();
  std::vector<int> open;
  for (int k = 1; k <= n; ++k) {
    int b = p.block_index(k);
    bool first = p.blocks()[static_cast<std::size_t>(b)].front() == k;
    if (!first) {
      if (open.empty() || open.back() != b) return false;
    } else {
      open.push_back(b);
    }
    if (last[static_cast<std::size_t>(b)] == k) open.pop_back();
  }
  return true;
}

namespace {

// All non-crossing partitions of the interval [lo, hi], built around the block of lo.
void gen_interval(int lo, int hi, std::vector<std::vector<Partition::Block>>& out);

void extend_first_block(int cur, int hi, Partition::Block& first, std::vector<Partition::Block>& acc,
                        std::vector<std::vector<Partition::Block>>& out) {
  // Option 1: close the first block at `cur`; (cur, hi] is filled freely.
  {
    std::vector<std::vector<Partition::Block>> tails;
    gen_interval(cur + 1, hi, tails);
    for (auto& t : tails) {
      auto blocks = acc;
      blocks.push_back(first);
      blocks.insert(blocks.end(), t.begin(), t.end());
      out.push_back(std::move(blocks));
    }
  }
  // Option 2: the next element of the first block is e; the gap (cur, e) is filled freely.
  for (int e = cur + 1; e <= hi; ++e) {
    std::vector<std::vector<Partition::Block>> gaps;
    gen_interval(cur + 1, e - 1, gaps);
    for (auto& g : gaps) {
      auto saved = acc.size();
      acc.insert(acc.end(), g.begin(), g.end());
      first.push_back(e);
      extend_first_block(e, hi, first, acc, out);
      first.pop_back();
      acc.resize(saved);
    }
  }
}

void gen_interval(int lo, int hi, std::vector<std::vector<Partition::Block>>& out) {
  if (lo > hi) {
    out.emplace_back();
    return;
  }
  Partition::Block first{lo};
  std::vector<Partition::Block> acc;
  extend_first_block(lo, hi, first, acc, out);
}

}  // namespace

std::vector<Partition> enumerate_nc(int n, int max_n) {
  if (n < 1 || n > max_n) {
    throw std::out_of_range("enumerate_nc: n=" + std::to_string(n) + " outside 1.." + std::to_string(max_n));
  }
  std::vector<std::vector<Partition::Block>> raw;
  gen_interval(1, n, raw);
  std::vector<Partition> out;
  out.reserve(raw.size());
  for (auto& blocks : raw) out.emplace_back(n, std::move(blocks));
  std::sort(out.begin(), out.end());
  return out;
}

PartitionPermutation perm_of(const Partition& p) {
  if (!is_noncrossing(p)) throw std::invalid_argument("perm_of: crossing partition " + p.to_string());
  std::vector<int> im(static_cast<std::size_t>(p.size()));
  for (const auto& b : p.blocks()) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      im[static_cast<std::size_t>(b[k] - 1)] = b[(k + 1) % b.size()];
    }
  }
  return PartitionPermutation(std::move(im));
}

Partition kreweras(const Partition& p) {
  auto composed = perm_of(p).inverse() * PartitionPermutation::forward_cycle(p.size());
  Partition kr = composed.cycles();
  // perm_of throws on a crossing cycle partition; the equality pins the cycle orientation.
  if (!is_noncrossing(kr) || !(perm_of(kr) == composed)) {
    throw std::logic_error("kreweras: complement of " + p.to_string() + " is not a non-crossing partition");
  }
  return kr;
}

bool leq(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw std::invalid_argument("leq: partitions of different sizes");
  for (const auto& b : p.blocks()) {
    int target = q.block_index(b.front());
    for (int k : b) {
      if (q.block_index(k) != target) return false;
    }
  }
  return true;
}

Partition insert(const Partition& p, const Partition& q, int k) {
  const int ps = p.size();
  const int qs = q.size();
  if (k < 0 || k > qs) throw std::out_of_range("insert: position out of range");
  std::vector<Partition::Block> blocks;
  for (const auto& b : p.blocks()) {
    Partition::Block nb;
    for (int e : b) nb.push_back(e + k);
    blocks.push_back(std::move(nb));
  }
  for (const auto& b : q.blocks()) {
    Partition::Block nb;
    for (int e : b) nb.push_back(e <= k ? e : e + ps);
    blocks.push_back(std::move(nb));
  }
  return Partition(ps + qs, std::move(blocks));
}

Partition restrict_to(const Partition& p, const std::vector<int>& keep) {
  std::vector<int> rank(static_cast<std::size_t>(p.size()) + 1, 0);
  for (std::size_t idx = 0; idx < keep.size(); ++idx) rank[static_cast<std::size_t>(keep[idx])] = static_cast<int>(idx) + 1;
  std::vector<Partition::Block> blocks;
  for (const auto& b : p.blocks()) {
    Partition::Block nb;
    for (int e : b) {
      if (rank[static_cast<std::size_t>(e)]) nb.push_back(rank[static_cast<std::size_t>(e)]);
    }
    if (!nb.empty()) blocks.push_back(std::move(nb));
  }
  return Partition(static_cast<int>(keep.size()), std::move(blocks));
}

namespace {
bool is_interval(const Partition::Block& b) { return b.back() - b.front() + 1 == static_cast<int>(b.size()); }
}  // namespace

const Partition::Block& interval_block(const Partition& p) {
  for (const auto& b : p.blocks()) {
    if (is_interval(b)) return b;
  }
  throw std::logic_error("no interval block in " + p.to_string());
}

const Partition::Block& last_interval_block(const Partition& p) {
  for (auto it = p.blocks().rbegin(); it != p.blocks().rend(); ++it) {
    if (is_interval(*it)) return *it;
  }
  throw std::logic_error("no interval block in " + p.to_string());
}

const std::vector<NcPair>& nc_table(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<NcPair>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    auto table = std::make_unique<std::vector<NcPair>>();
    for (auto& pi : enumerate_nc(n)) {
      Partition kr = kreweras(pi);
      table->push_back({std::move(pi), std::move(kr)});
    }
    slot = std::move(table);
  }
  return *slot;
}

}  // namespace ncfree
