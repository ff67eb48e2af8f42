#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace murai {

/// Dense characteristic vector of a family of subsets of {0,..,n-1}; bit x stands for
/// the subset whose bitmask is x. Closure and extremal-element operations run one
/// variable at a time on whole machine words.
class SubsetBitset {
 public:
  static constexpr int kMaxVars = 26;

  explicit SubsetBitset(int n);

  int vars() const noexcept { return n_; }
  std::uint64_t universe_size() const noexcept { return std::uint64_t{1} << n_; }

  void set(std::uint64_t x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  bool test(std::uint64_t x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1U; }
  std::size_t count() const noexcept;

  /// Adds every subset of every member.
  void close_down();
  /// Adds every superset (within the ground set) of every member.
  void close_up();
  /// Complement with respect to all 2^n subsets.
  SubsetBitset complement() const;
  /// Members with no member strictly above them; exact when the family is down-closed.
  SubsetBitset maximal_of_down_closed() const;
  /// Members with no member strictly below them; exact when the family is up-closed.
  SubsetBitset minimal_of_up_closed() const;

  template <class F>
  void for_each(F&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        bits &= bits - 1;
        fn((static_cast<std::uint64_t>(w) << 6) | static_cast<std::uint64_t>(b));
      }
    }
  }

  std::vector<std::uint64_t> members() const;
  /// counts[k] = number of members of size k, for k = 0..n.
  std::vector<long long> size_counts() const;

  friend bool operator==(const SubsetBitset&, const SubsetBitset&) = default;

 private:
  std::uint64_t tail_mask() const noexcept;

  int n_;
  std::vector<std::uint64_t> words_;
};

}  // namespace murai
