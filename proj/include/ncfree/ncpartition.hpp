#pragma once

#include <string>
#include <vector>

namespace ncfree {

/// A set partition of {1,...,n} held in canonical form: each block ascending,
/// blocks ordered by their minimum. Crossing partitions are representable;
/// is_noncrossing() tells them apart.
class Partition {
 public:
  using Block = std::vector<int>;

  Partition() = default;

  /// Canonicalizes `blocks`; throws std::invalid_argument unless they are
  /// non-empty, pairwise disjoint and cover {1,...,n}.
  Partition(int n, std::vector<Block> blocks);

  static Partition one(int n);       // single block {1,...,n}
  static Partition singletons(int n);

  /// Parses the text form `{1,2,5}{3,4}`.
  static Partition parse(const std::string& text);

  int size() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  /// 0-based index into blocks() of the block holding element k (1-based).
  int block_index(int k) const { return label_[static_cast<std::size_t>(k - 1)]; }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend bool operator<(const Partition& a, const Partition& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.blocks_ < b.blocks_;
  }

 private:
  int n_ = 0;
  std::vector<Block> blocks_;
  std::vector<int> label_;
};

/// A permutation of {1,...,n}; images[k-1] is the image of k.
class PartitionPermutation {
 public:
  PartitionPermutation() = default;
  explicit PartitionPermutation(std::vector<int> images);

  static PartitionPermutation identity(int n);
  static PartitionPermutation forward_cycle(int n);  // gamma_n: k -> k+1 mod n

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const { return images_; }

  PartitionPermutation inverse() const;

  /// Cycle decomposition as a Partition.
  Partition cycles() const;

  friend bool operator==(const PartitionPermutation&, const PartitionPermutation&) = default;

 private:
  std::vector<int> images_;
};

/// (a * b)(k) = a(b(k)).
PartitionPermutation operator*(const PartitionPermutation& a, const PartitionPermutation& b);

inline constexpr int kDefaultMaxNc = 12;

bool is_noncrossing(const Partition& p);

/// All of NC(n), sorted lexicographically by canonical block list.
/// Throws std::out_of_range unless 1 <= n <= max_n.
std::vector<Partition> enumerate_nc(int n, int max_n = kDefaultMaxNc);

/// The permutation with the blocks of p as ascending cycles.
PartitionPermutation perm_of(const Partition& p);

/// Kreweras complement, via perm_of(p)^{-1} * gamma_n.
Partition kreweras(const Partition& p);

/// Refinement order: every block of p lies inside a block of q.
bool leq(const Partition& p, const Partition& q);

/// Inserts p between the elements k and k+1 of q; 0 <= k <= q.size().
Partition insert(const Partition& p, const Partition& q, int k);

/// Restriction of p to the positions in `keep` (ascending), relabelled to 1..|keep|.
Partition restrict_to(const Partition& p, const std::vector<int>& keep);

/// The interval block with the smallest minimum (every non-crossing partition has one).
const Partition::Block& interval_block(const Partition& p);

/// The interval block with the largest minimum.
const Partition::Block& last_interval_block(const Partition& p);

/// NC(n) paired with Kreweras complements, computed once per n and shared.
struct NcPair {
  Partition pi;
  Partition kr;
};
const std::vector<NcPair>& nc_table(int n);

}  // namespace ncfree
