#include "murai/subset_bitset.hpp"

#include <array>

#include "murai/error.hpp"

namespace murai {
namespace {

// Positions inside a word whose bit v (v < 6) is clear.
constexpr std::array<std::uint64_t, 6> kLowHalf = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

}  // namespace

SubsetBitset::SubsetBitset(int n) : n_(n) {
  if (n < 0 || n > kMaxVars) fail(Errc::size_cap, "subset bitset: too many variables");
  const std::uint64_t bits = std::uint64_t{1} << n;
  words_.assign(bits <= 64 ? 1 : bits / 64, 0);
}

std::uint64_t SubsetBitset::tail_mask() const noexcept {
  return n_ >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << n_)) - 1;
}

std::size_t SubsetBitset::count() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

void SubsetBitset::close_down() {
  for (int v = 0; v < n_; ++v) {
    if (v < 6) {
      const int sh = 1 << v;
      for (auto& w : words_) w |= (w >> sh) & kLowHalf[v];
    } else {
      const std::size_t ws = std::size_t{1} << (v - 6);
      for (std::size_t w = 0; w < words_.size(); ++w) {
        if (!(w & ws)) words_[w] |= words_[w | ws];
      }
    }
  }
}

void SubsetBitset::close_up() {
  for (int v = 0; v < n_; ++v) {
    if (v < 6) {
      const int sh = 1 << v;
      for (auto& w : words_) w |= (w & kLowHalf[v]) << sh;
    } else {
      const std::size_t ws = std::size_t{1} << (v - 6);
      for (std::size_t w = 0; w < words_.size(); ++w) {
        if (w & ws) words_[w] |= words_[w ^ ws];
      }
    }
  }
}

SubsetBitset SubsetBitset::complement() const {
  SubsetBitset out(n_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
  out.words_.back() &= tail_mask();
  return out;
}

SubsetBitset SubsetBitset::maximal_of_down_closed() const {
  SubsetBitset out = *this;
  for (int v = 0; v < n_; ++v) {
    if (v < 6) {
      const int sh = 1 << v;
      for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~((words_[w] >> sh) & kLowHalf[v]);
    } else {
      const std::size_t ws = std::size_t{1} << (v - 6);
      for (std::size_t w = 0; w < words_.size(); ++w) {
        if (!(w & ws)) out.words_[w] &= ~words_[w | ws];
      }
    }
  }
  return out;
}

SubsetBitset SubsetBitset::minimal_of_up_closed() const {
  SubsetBitset out = *this;
  for (int v = 0; v < n_; ++v) {
    if (v < 6) {
      const int sh = 1 << v;
      for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~((words_[w] & kLowHalf[v]) << sh);
    } else {
      const std::size_t ws = std::size_t{1} << (v - 6);
      for (std::size_t w = 0; w < words_.size(); ++w) {
        if (w & ws) out.words_[w] &= ~words_[w ^ ws];
      }
    }
  }
  return out;
}

std::vector<long long> SubsetBitset::size_counts() const {
  // Bit positions 0..63 grouped by their popcount.
  static constexpr auto kByWeight = [] {
    std::array<std::uint64_t, 7> m{};
    for (int b = 0; b < 64; ++b) m[static_cast<std::size_t>(std::popcount(static_cast<unsigned>(b)))] |= std::uint64_t{1} << b;
    return m;
  }();
  std::vector<long long> out(static_cast<std::size_t>(n_ + 1), 0);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (!words_[w]) continue;
    const int base = std::popcount(w);
    for (int k = 0; k < 7; ++k) {
      const int c = std::popcount(words_[w] & kByWeight[static_cast<std::size_t>(k)]);
      if (c) out[static_cast<std::size_t>(base + k)] += c;
    }
  }
  return out;
}

std::vector<std::uint64_t> SubsetBitset::members() const {
  std::vector<std::uint64_t> out;
  out.reserve(count());
  for_each([&](std::uint64_t x) { out.push_back(x); });
  return out;
}

}  // namespace murai
