#pragma once

// c-monomials, c-multicomplexes and their Alexander duality.
//
// A multicomplex is stored as a membership table over the grid of all c-monomials.
// Cells are addressed in mixed radix with axis 1 least significant:
//   index(a) = a_1 + a_2 (c_1+1) + a_3 (c_1+1)(c_2+1) + ...

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace murai {

inline constexpr std::size_t kDefaultMaxGrid = std::size_t{1} << 24;

/// The vector c = (c_1, ..., c_m) with every c_i >= 1.
class CompositionVector {
 public:
  explicit CompositionVector(std::vector<int> entries);

  int m() const noexcept { return static_cast<int>(entries_.size()); }
  int total() const noexcept { return total_; }
  /// c_i for the 0-based axis i.
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& entries() const noexcept { return entries_; }
  /// (c_1 + 1, ..., c_m + 1).
  std::vector<int> bar_entries() const;
  /// Number of c-monomials, saturating at SIZE_MAX.
  std::size_t grid_size() const noexcept;
  /// Size of the vertex universe of the associated sphere, |c| + m.
  int universe_size() const noexcept { return total_ + m(); }

  friend bool operator==(const CompositionVector&, const CompositionVector&) = default;

 private:
  std::vector<int> entries_;
  int total_ = 0;
};

CompositionVector parse_composition(std::string_view text);
std::string format_composition(const CompositionVector& c);

/// Exponent vector of a monomial x^a.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {}
  static Monomial unit(int m) { return Monomial(std::vector<int>(static_cast<std::size_t>(m), 0)); }

  int size() const noexcept { return static_cast<int>(exps_.size()); }
  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& exponents() const noexcept { return exps_; }
  int degree() const noexcept;
  bool divides(const Monomial& other) const;
  /// a_i <= bound_i on every axis.
  bool within(std::span<const int> bounds) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

/// (x^a)^c = x^(c - a).
Monomial complement(const Monomial& a, const CompositionVector& c);
/// x^a with the exponent on `axis` (0-based) replaced by `power`.
Monomial diamond(const Monomial& a, int axis, int power);

/// "2 0; 1 1" <-> {x1^2, x1 x2}. Every tuple must have `m` entries.
std::vector<Monomial> parse_monomials(std::string_view text, int m);
std::string format_monomials(std::span<const Monomial> monos);

/// Mixed-radix addressing of the c-monomial grid.
class MonomialGrid {
 public:
  explicit MonomialGrid(const CompositionVector& c, std::size_t max_cells = kDefaultMaxGrid);

  std::size_t size() const noexcept { return size_; }
  int m() const noexcept { return static_cast<int>(radix_.size()); }
  std::size_t stride(int axis) const { return strides_[static_cast<std::size_t>(axis)]; }
  /// c_axis + 1.
  int radix(int axis) const { return radix_[static_cast<std::size_t>(axis)]; }
  int exponent(std::size_t index, int axis) const {
    return static_cast<int>((index / stride(axis)) % static_cast<std::size_t>(radix(axis)));
  }
  std::size_t index(const Monomial& a) const;
  Monomial decode(std::size_t index) const;
  /// Cell indices sorted by lexicographic order of exponent tuples (axis 1 most significant).
  std::vector<std::size_t> lex_order() const;

 private:
  std::vector<int> radix_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

/// Minimal monomial generators of a monomial ideal, as an antichain.
struct MonomialIdealGens {
  CompositionVector c;
  std::vector<Monomial> gens;
};

/// A nonempty divisibility-closed set of c-monomials. Immutable.
class Multicomplex {
 public:
  /// Downward closure of `gens`. Redundant generators are dropped.
  static Multicomplex from_generators(const CompositionVector& c, std::span<const Monomial> gens,
                                      std::size_t max_grid = kDefaultMaxGrid);
  /// Adopts a membership table (one flag per grid cell), checking that it is a multicomplex.
  static Multicomplex from_membership(const CompositionVector& c, const std::vector<bool>& members,
                                      std::size_t max_grid = kDefaultMaxGrid);

  const CompositionVector& c() const noexcept { return c_; }
  const MonomialGrid& grid() const noexcept { return grid_; }

  bool contains(const Monomial& a) const;
  bool contains_index(std::size_t index) const noexcept {
    return (bits_[index >> 6] >> (index & 63)) & 1U;
  }
  std::size_t size() const noexcept { return size_; }
  bool is_proper() const noexcept { return size_ < grid_.size(); }

  /// max(M), ordered by grid index.
  std::vector<Monomial> generators() const;
  /// min(M): minimal c-monomials outside M, ordered by grid index.
  std::vector<Monomial> min_non_elements() const;
  const std::vector<std::size_t>& generator_indices() const noexcept { return gens_; }
  const std::vector<std::size_t>& min_non_element_indices() const noexcept { return min_non_; }
  const std::vector<std::uint64_t>& membership_words() const noexcept { return bits_; }

  friend bool operator==(const Multicomplex& a, const Multicomplex& b) {
    return a.c_ == b.c_ && a.bits_ == b.bits_;
  }

 private:
  friend class ProperEnumerator;
  friend Multicomplex alexander_dual(const Multicomplex& M);
  Multicomplex(CompositionVector c, MonomialGrid grid, std::vector<std::uint64_t> bits);
  void compute_extremes();

  CompositionVector c_;
  MonomialGrid grid_;
  std::vector<std::uint64_t> bits_;
  std::size_t size_ = 0;
  std::vector<std::size_t> gens_;
  std::vector<std::size_t> min_non_;
};

/// M^v = { (x^a)^c : x^a not in M }. Requires M proper.
Multicomplex alexander_dual(const Multicomplex& M);

/// G(I_c(M)) = min(M). Requires M proper.
MonomialIdealGens ideal_generators(const Multicomplex& M);

/// Yields every proper c-multicomplex exactly once. Census order: membership strings read
/// over the cells in lexicographic monomial order, compared lexicographically with
/// non-member < member. For c = (3) this is <1>, <x>, <x^2>.
class ProperEnumerator {
 public:
  explicit ProperEnumerator(const CompositionVector& c, std::size_t max_grid = kDefaultMaxGrid);
  std::optional<Multicomplex> next();

 private:
  bool advance();
  void set_cell(std::size_t pos, bool value);

  CompositionVector c_;
  MonomialGrid grid_;
  std::vector<std::size_t> order_;                // lex position -> grid index
  std::vector<std::vector<std::size_t>> lower_;   // lex position -> lex positions of lower covers
  std::vector<std::vector<std::size_t>> upper_;   // lex position -> lex positions of upper covers
  std::vector<int> lower_members_;                // lex position -> members among lower covers
  std::vector<char> state_;
  std::size_t members_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// Runs `fn` on every proper c-multicomplex in census order.
void for_each_proper(const CompositionVector& c, const std::function<void(const Multicomplex&)>& fn,
                     std::size_t max_grid = kDefaultMaxGrid);

}  // namespace murai
