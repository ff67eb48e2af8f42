#include <algorithm>
#include <bit>

#include "murai/analysis.hpp"

namespace murai {
namespace {

enum class Shelling { found, none, skipped };

class ShellingSearch {
 public:
  ShellingSearch(const std::vector<FaceMask>& facets, long long budget) : facets_(facets), budget_(budget) {
    placed_.assign(facets.size(), false);
  }

  Shelling run() {
    if (facets_.empty()) return Shelling::found;
    order_.push_back(facets_[0]);
    placed_[0] = true;
    if (extend()) return Shelling::found;
    return exhausted_budget_ ? Shelling::skipped : Shelling::none;
  }

  const std::vector<FaceMask>& order() const { return order_; }

 private:
  // F meets the union of the placed facets in a pure complex of codimension one.
  bool admissible(FaceMask f) const {
    const int ridge_size = std::popcount(f) - 1;
    std::vector<FaceMask> ridges;
    for (auto g : order_) {
      if (std::popcount(f & g) == ridge_size) ridges.push_back(f & g);
    }
    if (ridges.empty()) return false;
    for (auto g : order_) {
      const FaceMask meet = f & g;
      if (std::none_of(ridges.begin(), ridges.end(), [meet](FaceMask r) { return (meet & ~r) == 0; })) return false;
    }
    return true;
  }

  bool extend() {
    if (order_.size() == facets_.size()) return true;
    if (--budget_ < 0) {
      exhausted_budget_ = true;
      return false;
    }
    for (std::size_t k = 0; k < facets_.size(); ++k) {
      if (placed_[k] || !admissible(facets_[k])) continue;
      placed_[k] = true;
      order_.push_back(facets_[k]);
      if (extend()) return true;
      order_.pop_back();
      placed_[k] = false;
      if (exhausted_budget_) return false;
    }
    return false;
  }

  const std::vector<FaceMask>& facets_;
  long long budget_;
  bool exhausted_budget_ = false;
  std::vector<bool> placed_;
  std::vector<FaceMask> order_;
};

Shelling search_shelling(const SimplicialComplex& K, int max_facets, std::vector<FaceMask>* order) {
  if (static_cast<int>(K.facets().size()) > max_facets || !is_pure(K)) return Shelling::skipped;
  ShellingSearch search(K.facets(), 200000);
  const auto result = search.run();
  if (result == Shelling::found && order) *order = search.order();
  return result;
}

}  // namespace

std::optional<std::vector<FaceMask>> shellability_witness(const SimplicialComplex& K, int max_facets) {
  std::vector<FaceMask> order;
  if (search_shelling(K, max_facets, &order) == Shelling::found) return order;
  return std::nullopt;
}

SphereCheck sphere_check(const SimplicialComplex& K, bool try_shelling) {
  SphereCheck out;
  const int dim = K.dimension();
  const long long chi = euler_characteristic(K);
  const long long expected_chi = 1 + (dim % 2 == 0 ? 1 : -1);
  if (dim == -1) {
    out.passed = true;
    out.complete = true;
    out.detail = "the (-1)-sphere {emptyset}";
    return out;
  }
  if (dim == 0) {
    out.complete = true;
    out.passed = K.f0() == 2 && K.facets().size() == 2;
    out.detail = out.passed ? "two points" : "a 0-sphere has exactly two points";
    return out;
  }
  if (!is_pseudomanifold(K)) {
    out.complete = dim <= 2;
    out.detail = "not a pseudomanifold";
    return out;
  }
  if (chi != expected_chi) {
    out.complete = dim <= 2;
    out.detail = "Euler characteristic " + std::to_string(chi) + ", expected " + std::to_string(expected_chi);
    return out;
  }
  if (dim == 1) {
    out.passed = true;
    out.complete = true;
    out.detail = "a single cycle";
    return out;
  }
  for (int idx : K.real_list()) {
    const auto lk = sphere_check(link(K, idx), false);
    if (!lk.passed) {
      out.complete = dim <= 2;
      out.detail = "link of " + format_vertex(K.universe()[static_cast<std::size_t>(idx)]) + " fails: " + lk.detail;
      return out;
    }
  }
  out.passed = true;
  out.complete = dim == 2;
  out.detail = dim == 2 ? "closed surface with chi = 2 and cyclic links"
                        : "pseudomanifold with sphere links and chi = " + std::to_string(chi);
  if (try_shelling) {
    const auto shelled = search_shelling(K, 30, nullptr);
    if (shelled != Shelling::skipped) out.shellable = shelled == Shelling::found;
  }
  return out;
}

}  // namespace murai
