#include "zdring/finite_ring.hpp"

#include <array>
#include <numeric>

#include "zdring/errors.hpp"

namespace zdring {

using Witness = std::array<std::size_t, 3>;

Element FiniteRing::scale(long long k, Element a) const noexcept {
  if (k < 0) {
    a = neg(a);
    k = -k;
  }
  Element result = 0;
  Element base = a;
  auto u = static_cast<unsigned long long>(k);
  while (u != 0) {
    if (u & 1U) result = add(result, base);
    base = add(base, base);
    u >>= 1U;
  }
  return result;
}

std::size_t FiniteRing::additive_order(Element a) const noexcept {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = add(x, a)) ++k;
  return k;
}

Table FiniteRing::add_rows() const {
  Table t(n_, std::vector<Element>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t[i][j] = add_[i * n_ + j];
  return t;
}

Table FiniteRing::mul_rows() const {
  Table t(n_, std::vector<Element>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t[i][j] = mul_[i * n_ + j];
  return t;
}

std::string FiniteRing::element_name(Element a) const {
  if (a < names_.size()) return names_[a];
  return std::to_string(a);
}

FiniteRing FiniteRing::with_label(std::string label) const {
  FiniteRing copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

FiniteRing FiniteRing::with_element_names(std::vector<std::string> names) const {
  FiniteRing copy = *this;
  if (!names.empty() && names.size() != n_)
    throw Error("element name list has wrong length");
  copy.names_ = std::move(names);
  return copy;
}

namespace {

void validate(std::size_t n, const std::vector<Element>& add, const std::vector<Element>& mul,
              std::vector<Element>& neg) {
  auto A = [&](std::size_t a, std::size_t b) -> std::size_t { return add[a * n + b]; };
  auto M = [&](std::size_t a, std::size_t b) -> std::size_t { return mul[a * n + b]; };

  for (std::size_t i = 0; i < n * n; ++i) {
    if (add[i] >= n) throw AxiomViolation("add entry in range", Witness{i / n, i % n, 0});
    if (mul[i] >= n) throw AxiomViolation("mul entry in range", Witness{i / n, i % n, 0});
  }
  for (std::size_t x = 0; x < n; ++x)
    if (A(0, x) != x) throw AxiomViolation("additive identity is element 0", Witness{0, x, 0});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (A(x, y) != A(y, x)) throw AxiomViolation("additive commutativity", Witness{x, y, 0});
  neg.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y) {
      if (A(x, y) == 0) {
        neg[x] = static_cast<Element>(y);
        found = true;
      }
    }
    if (!found) throw AxiomViolation("additive inverse", Witness{x, 0, 0});
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (A(A(x, y), z) != A(x, A(y, z)))
          throw AxiomViolation("additive associativity", Witness{x, y, z});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (M(M(x, y), z) != M(x, M(y, z)))
          throw AxiomViolation("multiplicative associativity", Witness{x, y, z});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (M(x, A(y, z)) != A(M(x, y), M(x, z)))
          throw AxiomViolation("left distributivity", Witness{x, y, z});
        if (M(A(y, z), x) != A(M(y, x), M(z, x)))
          throw AxiomViolation("right distributivity", Witness{x, y, z});
      }
}

}  // namespace

FiniteRing make_ring_flat(std::size_t n, std::vector<Element> add, std::vector<Element> mul,
                          std::string label, const Limits& limits) {
  if (n == 0) throw AxiomViolation("shape", "a ring has at least one element");
  if (n > limits.order_cap)
    throw OrderCapExceeded("ring order " + std::to_string(n) + " exceeds order cap " +
                           std::to_string(limits.order_cap));
  if (add.size() != n * n || mul.size() != n * n)
    throw AxiomViolation("shape", "tables must be " + std::to_string(n) + "x" + std::to_string(n));
  FiniteRing ring;
  validate(n, add, mul, ring.neg_);
  ring.n_ = n;
  ring.add_ = std::move(add);
  ring.mul_ = std::move(mul);
  ring.label_ = std::move(label);
  return ring;
}

FiniteRing make_ring(const Table& add, const Table& mul, std::string label, const Limits& limits) {
  const std::size_t n = add.size();
  if (mul.size() != n) throw AxiomViolation("shape", "add and mul tables differ in size");
  std::vector<Element> flat_add;
  std::vector<Element> flat_mul;
  flat_add.reserve(n * n);
  flat_mul.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (add[i].size() != n || mul[i].size() != n)
      throw AxiomViolation("shape", "row " + std::to_string(i) + " has wrong length");
    flat_add.insert(flat_add.end(), add[i].begin(), add[i].end());
    flat_mul.insert(flat_mul.end(), mul[i].begin(), mul[i].end());
  }
  return make_ring_flat(n, std::move(flat_add), std::move(flat_mul), std::move(label), limits);
}

bool is_homomorphism(const RingHom& hom, const FiniteRing& source, const FiniteRing& target) {
  if (hom.source_order != source.order() || hom.target_order != target.order()) return false;
  if (hom.image.size() != source.order()) return false;
  for (Element v : hom.image)
    if (v >= target.order()) return false;
  const auto n = static_cast<Element>(source.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (hom.image[source.add(a, b)] != target.add(hom.image[a], hom.image[b])) return false;
      if (hom.image[source.mul(a, b)] != target.mul(hom.image[a], hom.image[b])) return false;
    }
  if (hom.is_isomorphism) {
    if (source.order() != target.order()) return false;
    std::vector<bool> hit(target.order(), false);
    for (Element v : hom.image) {
      if (hit[v]) return false;
      hit[v] = true;
    }
  }
  return true;
}

}  // namespace zdring
