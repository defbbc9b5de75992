#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ncfree {

/// Letters are 1-based indices into an alphabet whose size is carried by context.
using Letter = int;
using Word = std::vector<Letter>;

/// Shortlex order: by length first, then lexicographically.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Comma-joined letters, e.g. `1,2,2`.
std::string format_word(const Word& w);

/// Pair-alphabet letters printed as `r:i`, letter = (r-1)*d + i.
std::string format_pair_word(const Word& w, int d);

Word parse_word(const std::string& text);

/// Pair-letter encoding for alphabet s*d with r outer: (r,i) -> (r-1)*d + i.
inline Letter pair_letter(int r, int i, int d) { return (r - 1) * d + i; }
inline int pair_outer(Letter letter, int d) { return (letter - 1) / d + 1; }
inline int pair_inner(Letter letter, int d) { return (letter - 1) % d + 1; }

/// Restriction w|B for a block B of 1-based positions.
Word restrict_word(const Word& w, const std::vector<int>& block);

/// Calls f(word) for every word of the given length over {1..alphabet}, lexicographically.
template <typename F>
void for_each_word(int alphabet, int length, F&& f) {
  Word w(static_cast<std::size_t>(length), 1);
  if (length == 0) {
    f(w);
    return;
  }
  while (true) {
    f(static_cast<const Word&>(w));
    int pos = length - 1;
    while (pos >= 0 && w[static_cast<std::size_t>(pos)] == alphabet) {
      w[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) return;
    ++w[static_cast<std::size_t>(pos)];
  }
}

}  // namespace ncfree
