#include "murai/multicomplex.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

#include "murai/error.hpp"

namespace murai {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view token, const char* what) {
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    fail(Errc::invalid_argument, std::string(what) + ": not an integer: '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

// ---------------------------------------------------------------------------
// CompositionVector

CompositionVector::CompositionVector(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) fail(Errc::invalid_argument, "composition vector must have m >= 1 entries");
  for (int e : entries_) {
    if (e < 1) fail(Errc::invalid_argument, "composition vector entries must be >= 1");
    if (e > 1'000'000) fail(Errc::size_cap, "composition vector entry too large");
  }
  total_ = std::accumulate(entries_.begin(), entries_.end(), 0);
}

std::vector<int> CompositionVector::bar_entries() const {
  std::vector<int> out = entries_;
  for (int& e : out) ++e;
  return out;
}

std::size_t CompositionVector::grid_size() const noexcept {
  std::size_t n = 1;
  for (int e : entries_) {
    const auto r = static_cast<std::size_t>(e) + 1;
    if (n > std::numeric_limits<std::size_t>::max() / r) return std::numeric_limits<std::size_t>::max();
    n *= r;
  }
  return n;
}

CompositionVector parse_composition(std::string_view text) {
  std::vector<int> entries;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const auto tok = trim(rest.substr(0, comma));
    if (tok.empty()) fail(Errc::invalid_argument, "composition vector: empty entry in '" + std::string(text) + "'");
    entries.push_back(parse_int(tok, "composition vector"));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return CompositionVector(std::move(entries));
}

std::string format_composition(const CompositionVector& c) {
  std::string out;
  for (int i = 0; i < c.m(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Monomial

int Monomial::degree() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::divides(const Monomial& other) const {
  if (other.size() != size()) fail(Errc::invalid_argument, "monomials over different variable counts");
  for (int i = 0; i < size(); ++i) {
    if ((*this)[i] > other[i]) return false;
  }
  return true;
}

bool Monomial::within(std::span<const int> bounds) const {
  if (bounds.size() != exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] < 0 || exps_[i] > bounds[i]) return false;
  }
  return true;
}

Monomial complement(const Monomial& a, const CompositionVector& c) {
  if (!a.within(c.entries())) fail(Errc::invalid_argument, "complement: not a c-monomial");
  std::vector<int> out(static_cast<std::size_t>(c.m()));
  for (int i = 0; i < c.m(); ++i) out[static_cast<std::size_t>(i)] = c[i] - a[i];
  return Monomial(std::move(out));
}

Monomial diamond(const Monomial& a, int axis, int power) {
  if (axis < 0 || axis >= a.size()) fail(Errc::invalid_argument, "diamond: axis out of range");
  std::vector<int> out = a.exponents();
  out[static_cast<std::size_t>(axis)] = power;
  return Monomial(std::move(out));
}

std::vector<Monomial> parse_monomials(std::string_view text, int m) {
  std::vector<Monomial> out;
  std::string_view rest = text;
  while (true) {
    const auto semi = rest.find(';');
    const auto tuple = trim(rest.substr(0, semi));
    if (tuple.empty()) fail(Errc::invalid_argument, "monomial list: empty tuple in '" + std::string(text) + "'");
    std::vector<int> exps;
    std::istringstream in{std::string(tuple)};
    std::string tok;
    while (in >> tok) {
      const int e = parse_int(tok, "monomial exponent");
      if (e < 0) fail(Errc::invalid_argument, "monomial exponents must be non-negative");
      exps.push_back(e);
    }
    if (static_cast<int>(exps.size()) != m) {
      fail(Errc::invalid_argument, "monomial '" + std::string(tuple) + "' needs " + std::to_string(m) + " exponents");
    }
    out.emplace_back(std::move(exps));
    if (semi == std::string_view::npos) break;
    rest.remove_prefix(semi + 1);
  }
  return out;
}

std::string format_monomials(std::span<const Monomial> monos) {
  std::string out;
  for (std::size_t k = 0; k < monos.size(); ++k) {
    if (k) out += "; ";
    for (int i = 0; i < monos[k].size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(monos[k][i]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// MonomialGrid

MonomialGrid::MonomialGrid(const CompositionVector& c, std::size_t max_cells) {
  const std::size_t cells = c.grid_size();
  if (cells > max_cells) {
    fail(Errc::size_cap, "census too large: " + std::to_string(cells) + " grid cells exceed cap " +
                             std::to_string(max_cells));
  }
  radix_ = c.bar_entries();
  strides_.resize(radix_.size());
  size_ = 1;
  for (std::size_t i = 0; i < radix_.size(); ++i) {
    strides_[i] = size_;
    size_ *= static_cast<std::size_t>(radix_[i]);
  }
}

std::size_t MonomialGrid::index(const Monomial& a) const {
  if (a.size() != m()) fail(Errc::invalid_argument, "monomial has wrong number of variables");
  std::size_t idx = 0;
  for (int i = 0; i < m(); ++i) {
    if (a[i] < 0 || a[i] >= radix(i)) {
      fail(Errc::invalid_argument, "invalid monomial: exponent " + std::to_string(a[i]) + " on x" +
                                       std::to_string(i + 1) + " exceeds c_" + std::to_string(i + 1) + " = " +
                                       std::to_string(radix(i) - 1));
    }
    idx += static_cast<std::size_t>(a[i]) * stride(i);
  }
  return idx;
}

Monomial MonomialGrid::decode(std::size_t index) const {
  std::vector<int> exps(radix_.size());
  for (int i = 0; i < m(); ++i) exps[static_cast<std::size_t>(i)] = exponent(index, i);
  return Monomial(std::move(exps));
}

std::vector<std::size_t> MonomialGrid::lex_order() const {
  // Lex order with axis 1 most significant is the mixed-radix order read with reversed axes.
  std::vector<std::size_t> order;
  order.reserve(size_);
  std::vector<int> digits(radix_.size(), 0);
  for (std::size_t k = 0; k < size_; ++k) {
    std::size_t idx = 0;
    for (int i = 0; i < m(); ++i) idx += static_cast<std::size_t>(digits[static_cast<std::size_t>(i)]) * stride(i);
    order.push_back(idx);
    for (int i = m() - 1; i >= 0; --i) {
      auto& d = digits[static_cast<std::size_t>(i)];
      if (++d < radix(i)) break;
      d = 0;
    }
  }
  return order;
}

// ---------------------------------------------------------------------------
// Multicomplex

Multicomplex::Multicomplex(CompositionVector c, MonomialGrid grid, std::vector<std::uint64_t> bits)
    : c_(std::move(c)), grid_(std::move(grid)), bits_(std::move(bits)) {
  compute_extremes();
}

void Multicomplex::compute_extremes() {
  size_ = 0;
  gens_.clear();
  min_non_.clear();
  const int m = grid_.m();
  for (std::size_t idx = 0; idx < grid_.size(); ++idx) {
    const bool in = contains_index(idx);
    bool extreme = true;
    if (in) {
      ++size_;
      for (int i = 0; i < m && extreme; ++i) {
        if (grid_.exponent(idx, i) + 1 < grid_.radix(i) && contains_index(idx + grid_.stride(i))) extreme = false;
      }
      if (extreme) gens_.push_back(idx);
    } else {
      for (int i = 0; i < m && extreme; ++i) {
        if (grid_.exponent(idx, i) > 0 && !contains_index(idx - grid_.stride(i))) extreme = false;
      }
      if (extreme) min_non_.push_back(idx);
    }
  }
}

Multicomplex Multicomplex::from_generators(const CompositionVector& c, std::span<const Monomial> gens,
                                           std::size_t max_grid) {
  if (gens.empty()) fail(Errc::invalid_argument, "a multicomplex needs at least one generator");
  MonomialGrid grid(c, max_grid);
  std::vector<std::uint64_t> bits((grid.size() + 63) / 64, 0);
  auto set = [&](std::size_t i) { bits[i >> 6] |= std::uint64_t{1} << (i & 63); };
  auto test = [&](std::size_t i) { return ((bits[i >> 6] >> (i & 63)) & 1U) != 0; };
  for (const auto& g : gens) set(grid.index(g));
  // Lower covers have smaller indices, so one descending sweep closes the set.
  for (std::size_t idx = grid.size(); idx-- > 0;) {
    if (!test(idx)) continue;
    for (int i = 0; i < grid.m(); ++i) {
      if (grid.exponent(idx, i) > 0) set(idx - grid.stride(i));
    }
  }
  return Multicomplex(c, std::move(grid), std::move(bits));
}

Multicomplex Multicomplex::from_membership(const CompositionVector& c, const std::vector<bool>& members,
                                           std::size_t max_grid) {
  MonomialGrid grid(c, max_grid);
  if (members.size() != grid.size()) fail(Errc::invalid_argument, "membership table has wrong size");
  std::vector<std::uint64_t> bits((grid.size() + 63) / 64, 0);
  bool any = false;
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    if (!members[idx]) continue;
    any = true;
    bits[idx >> 6] |= std::uint64_t{1} << (idx & 63);
    for (int i = 0; i < grid.m(); ++i) {
      if (grid.exponent(idx, i) > 0 && !members[idx - grid.stride(i)]) {
        fail(Errc::invalid_argument, "membership table is not divisibility-closed");
      }
    }
  }
  if (!any) fail(Errc::invalid_argument, "a multicomplex must be nonempty");
  return Multicomplex(c, std::move(grid), std::move(bits));
}

bool Multicomplex::contains(const Monomial& a) const { return contains_index(grid_.index(a)); }

std::vector<Monomial> Multicomplex::generators() const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (auto idx : gens_) out.push_back(grid_.decode(idx));
  return out;
}

std::vector<Monomial> Multicomplex::min_non_elements() const {
  std::vector<Monomial> out;
  out.reserve(min_non_.size());
  for (auto idx : min_non_) out.push_back(grid_.decode(idx));
  return out;
}

Multicomplex alexander_dual(const Multicomplex& M) {
  if (!M.is_proper()) fail(Errc::not_proper, "Alexander dual of the full multicomplex is empty");
  const auto& grid = M.grid();
  // complement(a) has index (size-1) - index(a): every digit is reflected.
  const std::size_t top = grid.size() - 1;
  std::vector<std::uint64_t> bits((grid.size() + 63) / 64, 0);
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    if (!M.contains_index(idx)) {
      const std::size_t d = top - idx;
      bits[d >> 6] |= std::uint64_t{1} << (d & 63);
    }
  }
  return Multicomplex(M.c(), grid, std::move(bits));
}

MonomialIdealGens ideal_generators(const Multicomplex& M) {
  if (!M.is_proper()) fail(Errc::not_proper, "the full multicomplex has no ideal generators");
  return MonomialIdealGens{M.c(), M.min_non_elements()};
}

// ---------------------------------------------------------------------------
// ProperEnumerator

ProperEnumerator::ProperEnumerator(const CompositionVector& c, std::size_t max_grid)
    : c_(c), grid_(c, max_grid), order_(grid_.lex_order()) {
  const std::size_t n = grid_.size();
  std::vector<std::size_t> pos_of(n);
  for (std::size_t p = 0; p < n; ++p) pos_of[order_[p]] = p;
  lower_.resize(n);
  upper_.resize(n);
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t idx = order_[p];
    for (int i = 0; i < grid_.m(); ++i) {
      if (grid_.exponent(idx, i) > 0) {
        const std::size_t q = pos_of[idx - grid_.stride(i)];
        lower_[p].push_back(q);
        upper_[q].push_back(p);
      }
    }
  }
  lower_members_.assign(n, 0);
  state_.assign(n, 0);
}

void ProperEnumerator::set_cell(std::size_t pos, bool value) {
  if (static_cast<bool>(state_[pos]) == value) return;
  state_[pos] = value ? 1 : 0;
  const int delta = value ? 1 : -1;
  members_ = value ? members_ + 1 : members_ - 1;
  for (auto q : upper_[pos]) lower_members_[q] += delta;
}

bool ProperEnumerator::advance() {
  const std::size_t n = order_.size();
  for (std::size_t p = n; p-- > 1;) {
    if (state_[p] || lower_members_[p] != static_cast<int>(lower_[p].size())) continue;
    for (std::size_t q = n; q-- > p + 1;) set_cell(q, false);
    set_cell(p, true);
    return true;
  }
  return false;
}

std::optional<Multicomplex> ProperEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    set_cell(0, true);
  } else if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  if (members_ == order_.size()) {  // the full multicomplex is the last string
    done_ = true;
    return std::nullopt;
  }
  std::vector<std::uint64_t> bits((grid_.size() + 63) / 64, 0);
  for (std::size_t p = 0; p < order_.size(); ++p) {
    if (state_[p]) bits[order_[p] >> 6] |= std::uint64_t{1} << (order_[p] & 63);
  }
  return Multicomplex(c_, grid_, std::move(bits));
}

void for_each_proper(const CompositionVector& c, const std::function<void(const Multicomplex&)>& fn,
                     std::size_t max_grid) {
  ProperEnumerator e(c, max_grid);
  while (auto M = e.next()) fn(*M);
}

}  // namespace murai
