#include "zdring/ideal.hpp"

#include <algorithm>

#include "zdring/errors.hpp"

namespace zdring {

bool Ideal::contains(Element a) const {
  return std::binary_search(members_.begin(), members_.end(), a);
}

bool operator<(const Ideal& a, const Ideal& b) {
  if (a.members_.size() != b.members_.size()) return a.members_.size() < b.members_.size();
  return a.members_ < b.members_;
}

Ideal make_ideal(const FiniteRing& ring, std::span<const Element> members) {
  const std::size_t n = ring.order();
  std::vector<bool> in(n, false);
  for (Element a : members) {
    if (a >= n) throw NotAnIdeal("element " + std::to_string(a) + " is not in the ring");
    in[a] = true;
  }
  if (!in[0]) throw NotAnIdeal("ideal must contain 0");
  std::vector<Element> sorted;
  for (Element a = 0; a < n; ++a)
    if (in[a]) sorted.push_back(a);
  for (Element a : sorted) {
    if (!in[ring.neg(a)]) throw NotAnIdeal("not closed under negation at " + std::to_string(a));
    for (Element b : sorted)
      if (!in[ring.add(a, b)])
        throw NotAnIdeal("not closed under addition at " + std::to_string(a) + ", " +
                         std::to_string(b));
    for (Element r = 0; r < n; ++r) {
      if (!in[ring.mul(r, a)] || !in[ring.mul(a, r)])
        throw NotAnIdeal("not absorbing at " + std::to_string(a) + " with " + std::to_string(r));
    }
  }
  Ideal ideal;
  ideal.members_ = std::move(sorted);
  return ideal;
}

Ideal trusted_ideal(std::vector<Element> sorted_members) {
  Ideal ideal;
  ideal.members_ = std::move(sorted_members);
  return ideal;
}

Ideal zero_ideal() { return trusted_ideal({0}); }

Ideal whole_ring_ideal(const FiniteRing& ring) {
  std::vector<Element> all(ring.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Element>(i);
  return trusted_ideal(std::move(all));
}

}  // namespace zdring
