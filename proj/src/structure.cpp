#include "zdring/structure.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "zdring/errors.hpp"
#include "zdring/families.hpp"
#include "zdring/isomorphism.hpp"

namespace zdring {

namespace {

void check_structural_cap(const FiniteRing& ring, const Limits& limits, const char* op) {
  if (ring.order() > limits.structural_cap)
    throw OrderCapExceeded(std::string(op) + ": ring order " + std::to_string(ring.order()) +
                           " exceeds structural cap " + std::to_string(limits.structural_cap));
}

}  // namespace

std::vector<Element> zero_divisors(const FiniteRing& ring) {
  const auto n = static_cast<Element>(ring.order());
  std::vector<Element> out;
  for (Element x = 1; x < n; ++x) {
    for (Element y = 1; y < n; ++y) {
      if (ring.mul(x, y) == 0 || ring.mul(y, x) == 0) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

std::optional<Element> identity_element(const FiniteRing& ring) {
  const auto n = static_cast<Element>(ring.order());
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = ring.mul(e, x) == x && ring.mul(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

std::vector<Element> units(const FiniteRing& ring) {
  const auto one = identity_element(ring);
  if (!one) throw NoIdentity("units: ring " + ring.label() + " has no identity");
  const auto n = static_cast<Element>(ring.order());
  std::vector<Element> out;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (ring.mul(x, y) == *one && ring.mul(y, x) == *one) {
        out.push_back(x);
        break;
      }
  return out;
}

std::vector<Element> idempotents(const FiniteRing& ring) {
  std::vector<Element> out;
  for (Element x = 0; x < ring.order(); ++x)
    if (ring.mul(x, x) == x) out.push_back(x);
  return out;
}

std::vector<Element> nilpotent_elements(const FiniteRing& ring) {
  std::vector<Element> out;
  for (Element x = 0; x < ring.order(); ++x) {
    Element power = x;
    // x^(n+1) = 0 for any nilpotent x in a ring of order n.
    for (std::size_t k = 0; k <= ring.order() && power != 0; ++k) power = ring.mul(power, x);
    if (power == 0) out.push_back(x);
  }
  return out;
}

bool is_commutative(const FiniteRing& ring) {
  for (Element x = 0; x < ring.order(); ++x)
    for (Element y = x + 1; y < ring.order(); ++y)
      if (ring.mul(x, y) != ring.mul(y, x)) return false;
  return true;
}

std::vector<Element> additive_closure(const FiniteRing& ring, std::span<const Element> seeds) {
  std::vector<char> in(ring.order(), 0);
  std::vector<Element> members{0};
  in[0] = 1;
  std::vector<Element> gens;
  for (Element s : seeds)
    if (s != 0 && !in[s]) {
      // Add the cyclic subgroup of s, then close under sums.
      gens.push_back(s);
      std::vector<Element> fresh;
      for (Element m : members) {
        for (Element t = ring.add(m, s); !in[t]; t = ring.add(t, s)) {
          in[t] = 1;
          fresh.push_back(t);
        }
      }
      // New elements may combine with each other and old ones; iterate.
      for (std::size_t i = 0; i < fresh.size(); ++i) {
        for (Element g : gens) {
          const Element t = ring.add(fresh[i], g);
          if (!in[t]) {
            in[t] = 1;
            fresh.push_back(t);
          }
        }
      }
      members.insert(members.end(), fresh.begin(), fresh.end());
    }
  std::sort(members.begin(), members.end());
  return members;
}

Ideal principal_ideal(const FiniteRing& ring, Element a) {
  const auto n = static_cast<Element>(ring.order());
  std::vector<char> seen(n, 0);
  std::vector<Element> seeds;
  auto push = [&](Element x) {
    if (!seen[x]) {
      seen[x] = 1;
      seeds.push_back(x);
    }
  };
  push(a);
  for (Element r = 0; r < n; ++r) {
    push(ring.mul(r, a));
    push(ring.mul(a, r));
  }
  for (Element r = 0; r < n; ++r) {
    const Element ra = ring.mul(r, a);
    for (Element s = 0; s < n; ++s) push(ring.mul(ra, s));
  }
  return trusted_ideal(additive_closure(ring, seeds));
}

Ideal ideal_sum(const FiniteRing& ring, const Ideal& a, const Ideal& b) {
  std::vector<char> in(ring.order(), 0);
  for (Element x : a.members())
    for (Element y : b.members()) in[ring.add(x, y)] = 1;
  std::vector<Element> out;
  for (Element x = 0; x < ring.order(); ++x)
    if (in[x]) out.push_back(x);
  return trusted_ideal(std::move(out));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  std::vector<Element> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(out));
  return trusted_ideal(std::move(out));
}

Ideal ideal_product(const FiniteRing& ring, const Ideal& a, const Ideal& b) {
  std::vector<char> seen(ring.order(), 0);
  std::vector<Element> seeds;
  for (Element x : a.members())
    for (Element y : b.members()) {
      const Element p = ring.mul(x, y);
      if (!seen[p]) {
        seen[p] = 1;
        seeds.push_back(p);
      }
    }
  return trusted_ideal(additive_closure(ring, seeds));
}

std::optional<std::size_t> ideal_nilpotency_index(const FiniteRing& ring, const Ideal& ideal) {
  Ideal power = ideal;
  for (std::size_t k = 1; k <= ring.order() + 1; ++k) {
    if (power.is_zero()) return k;
    Ideal next = ideal_product(ring, power, ideal);
    if (next == power) return std::nullopt;
    power = std::move(next);
  }
  return std::nullopt;
}

std::vector<Ideal> ideals(const FiniteRing& ring, const Limits& limits) {
  check_structural_cap(ring, limits, "ideals");
  std::set<Ideal> principals;
  for (Element a = 0; a < ring.order(); ++a) principals.insert(principal_ideal(ring, a));
  // Every ideal is the sum of the principal ideals of its elements, so
  // closing {0} under "add one principal ideal" reaches all of them.
  std::set<Ideal> found{zero_ideal()};
  std::vector<Ideal> frontier{zero_ideal()};
  while (!frontier.empty()) {
    std::vector<Ideal> next;
    for (const Ideal& current : frontier)
      for (const Ideal& p : principals) {
        if (std::includes(current.members().begin(), current.members().end(), p.members().begin(),
                          p.members().end()))
          continue;
        Ideal s = ideal_sum(ring, current, p);
        if (found.insert(s).second) next.push_back(std::move(s));
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

Ideal jacobson_radical(const FiniteRing& ring, const Limits& limits) {
  Ideal radical = zero_ideal();
  for (const Ideal& ideal : ideals(ring, limits))
    if (ideal_nilpotency_index(ring, ideal)) radical = ideal_sum(ring, radical, ideal);
  return radical;
}

std::optional<std::size_t> nilpotency_index(const FiniteRing& ring) {
  const Ideal whole = whole_ring_ideal(ring);
  return ideal_nilpotency_index(ring, whole);
}

bool is_subdirectly_irreducible(const FiniteRing& ring, const Limits& limits) {
  const auto all = ideals(ring, limits);
  std::size_t minimal = 0;
  for (const Ideal& candidate : all) {
    if (candidate.is_zero()) continue;
    const bool has_smaller = std::any_of(all.begin(), all.end(), [&](const Ideal& other) {
      return !other.is_zero() && other.size() < candidate.size() &&
             std::includes(candidate.members().begin(), candidate.members().end(),
                           other.members().begin(), other.members().end());
    });
    if (!has_smaller) ++minimal;
  }
  return minimal == 1;
}

bool is_field(const FiniteRing& ring) {
  if (ring.order() < 2 || !is_commutative(ring)) return false;
  const auto one = identity_element(ring);
  if (!one) return false;
  for (Element x = 1; x < ring.order(); ++x) {
    bool invertible = false;
    for (Element y = 1; y < ring.order() && !invertible; ++y) invertible = ring.mul(x, y) == *one;
    if (!invertible) return false;
  }
  return true;
}

bool is_local(const FiniteRing& ring, const Limits& limits) {
  if (!identity_element(ring)) throw NoIdentity("is_local: ring " + ring.label() + " has no identity");
  const Ideal radical = jacobson_radical(ring, limits);
  return is_field(quotient(ring, radical));
}

namespace {

bool contained_in(const Ideal& inner, const Ideal& outer) {
  return std::includes(outer.members().begin(), outer.members().end(), inner.members().begin(),
                       inner.members().end());
}

void split_component(const std::vector<Ideal>& all, const Ideal& component, std::vector<Ideal>& out) {
  for (const Ideal& left : all) {
    if (left.is_zero() || left.size() >= component.size() || !contained_in(left, component)) continue;
    if (component.size() % left.size() != 0) continue;
    const std::size_t want = component.size() / left.size();
    for (const Ideal& right : all) {
      if (right.size() != want || right.is_zero() || !contained_in(right, component)) continue;
      if (!ideal_intersection(left, right).is_zero()) continue;
      split_component(all, left, out);
      split_component(all, right, out);
      return;
    }
  }
  out.push_back(component);
}

}  // namespace

std::vector<Ideal> decompose(const FiniteRing& ring, const Limits& limits) {
  const auto all = ideals(ring, limits);
  std::vector<Ideal> parts;
  split_component(all, whole_ring_ideal(ring), parts);
  std::vector<std::pair<Certificate, Ideal>> keyed;
  for (Ideal& part : parts)
    keyed.emplace_back(ring_canonical_certificate(restrict_to(ring, part.members()), limits),
                       std::move(part));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    if (a.first != b.first) return a.first < b.first;
    return a.second.members() < b.second.members();
  });
  std::vector<Ideal> out;
  for (auto& [cert, part] : keyed) out.push_back(std::move(part));
  return out;
}

StructureReport structure_report(const FiniteRing& ring, const Limits& limits) {
  check_structural_cap(ring, limits, "structure_report");
  StructureReport report;
  report.order = ring.order();
  report.label = ring.label();
  report.identity = identity_element(ring);
  report.is_commutative = is_commutative(ring);
  report.is_field = is_field(ring);
  report.jacobson_radical = jacobson_radical(ring, limits);
  if (report.identity) report.is_local = is_field(quotient(ring, report.jacobson_radical));
  report.nilpotency_index = nilpotency_index(ring);
  report.is_subdirectly_irreducible = is_subdirectly_irreducible(ring, limits);
  report.is_decomposable = decompose(ring, limits).size() > 1;
  report.characteristic = characteristic(ring);
  report.zero_divisor_count = zero_divisors(ring).size();
  return report;
}

std::string render_report(const StructureReport& r) {
  auto flag = [](bool b) { return b ? "true" : "false"; };
  std::ostringstream out;
  out << "order: " << r.order << "\n";
  out << "label: " << (r.label.empty() ? "-" : r.label) << "\n";
  out << "characteristic: " << r.characteristic << "\n";
  out << "has_identity: " << flag(r.has_identity()) << "\n";
  out << "identity: " << (r.identity ? std::to_string(*r.identity) : "none") << "\n";
  out << "is_commutative: " << flag(r.is_commutative) << "\n";
  out << "is_field: " << flag(r.is_field) << "\n";
  out << "is_local: " << (r.is_local ? flag(*r.is_local) : "n/a") << "\n";
  out << "is_nilpotent: " << flag(r.is_nilpotent()) << "\n";
  out << "nilpotency_index: " << (r.nilpotency_index ? std::to_string(*r.nilpotency_index) : "none")
      << "\n";
  out << "is_subdirectly_irreducible: " << flag(r.is_subdirectly_irreducible) << "\n";
  out << "is_decomposable: " << flag(r.is_decomposable) << "\n";
  out << "zero_divisor_count: " << r.zero_divisor_count << "\n";
  out << "jacobson_radical_size: " << r.jacobson_radical.size() << "\n";
  out << "jacobson_radical:";
  for (Element x : r.jacobson_radical.members()) out << ' ' << x;
  out << "\n";
  return out.str();
}

std::string report_inconsistency(const StructureReport& r) {
  if (r.is_field && r.zero_divisor_count != 0) return "field with zero divisors";
  if (r.is_field && (!r.has_identity() || !r.is_commutative)) return "field without identity or commutativity";
  if (r.is_field && !r.jacobson_radical.is_zero()) return "field with nonzero radical";
  if (r.is_field && (!r.is_subdirectly_irreducible || r.is_decomposable)) return "field not simple";
  if (r.is_nilpotent() && r.is_field) return "nilpotent field";
  if (r.is_nilpotent() && r.order > 1 && r.has_identity()) return "nilpotent ring with identity";
  if (r.is_nilpotent() && r.jacobson_radical.size() != r.order) return "nilpotent ring with proper radical";
  if (r.is_local.has_value() != r.has_identity()) return "locality reported without identity";
  if (r.is_decomposable && r.is_subdirectly_irreducible) return "decomposable yet subdirectly irreducible";
  if (r.order % r.characteristic != 0) return "characteristic does not divide order";
  if (r.zero_divisor_count >= r.order && r.order > 0) return "too many zero divisors";
  if (r.order % r.jacobson_radical.size() != 0) return "radical size does not divide order";
  return {};
}

}  // namespace zdring
