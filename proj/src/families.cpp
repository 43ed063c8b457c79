#include "zdring/families.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "zdring/errors.hpp"

namespace zdring {

bool is_prime(long long n) noexcept {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

void require_prime(long long p) {
  if (!is_prime(p)) throw NotPrime(p);
}

std::size_t checked_power(std::size_t base, std::size_t exp, const Limits& limits) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    result *= base;
    if (result > limits.order_cap)
      throw OrderCapExceeded("order " + std::to_string(base) + "^" + std::to_string(exp) +
                             " exceeds order cap " + std::to_string(limits.order_cap));
  }
  return result;
}

void check_cap(std::size_t n, const Limits& limits) {
  if (n > limits.order_cap)
    throw OrderCapExceeded("order " + std::to_string(n) + " exceeds order cap " +
                           std::to_string(limits.order_cap));
}

// Builds a ring from a multiplication rule on a cyclic additive group Z_n.
template <class Mul>
FiniteRing cyclic_ring(std::size_t n, Mul rule, std::string label, const Limits& limits) {
  std::vector<Element> add(n * n);
  std::vector<Element> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Element>((a + b) % n);
      mul[a * n + b] = static_cast<Element>(rule(a, b) % n);
    }
  return make_ring_flat(n, std::move(add), std::move(mul), std::move(label), limits);
}

std::vector<std::string> multiples_of_a(std::size_t n) {
  std::vector<std::string> names(n);
  names[0] = "0";
  for (std::size_t m = 1; m < n; ++m) names[m] = m == 1 ? "a" : std::to_string(m) + "a";
  return names;
}

// Ring on pairs (x, y) in GF(p)^2, index x + p·y, with a bilinear product.
template <class Mul>
FiniteRing pair_ring(long long p, Mul rule, std::string label, const Limits& limits) {
  const auto q = static_cast<std::size_t>(p);
  const std::size_t n = q * q;
  check_cap(n, limits);
  std::vector<Element> add(n * n);
  std::vector<Element> mul(n * n);
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = "(" + std::to_string(a % q) + "," + std::to_string(a / q) + ")";
    for (std::size_t b = 0; b < n; ++b) {
      const long long x1 = static_cast<long long>(a % q), y1 = static_cast<long long>(a / q);
      const long long x2 = static_cast<long long>(b % q), y2 = static_cast<long long>(b / q);
      add[a * n + b] = static_cast<Element>((x1 + x2) % p + p * ((y1 + y2) % p));
      auto [x, y] = rule(x1, y1, x2, y2);
      mul[a * n + b] = static_cast<Element>(x % p + p * (y % p));
    }
  }
  return make_ring_flat(n, std::move(add), std::move(mul), std::move(label), limits)
      .with_element_names(std::move(names));
}

using Poly = std::vector<long long>;  // constant term first

Poly poly_mod(Poly a, const Poly& m, long long p) {
  const std::size_t dm = m.size() - 1;  // m monic
  while (a.size() > dm) {
    const long long lead = a.back() % p;
    const std::size_t shift = a.size() - 1 - dm;
    if (lead != 0)
      for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    a.pop_back();
  }
  return a;
}

bool poly_is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](long long c) { return c == 0; });
}

// Monic polynomials of degree d, in increasing order with the constant
// term most significant.
Poly nth_monic(long long p, std::size_t d, std::size_t index) {
  Poly poly(d + 1, 0);
  poly[d] = 1;
  for (std::size_t i = d; i-- > 0;) {
    poly[i] = static_cast<long long>(index % static_cast<std::size_t>(p));
    index /= static_cast<std::size_t>(p);
  }
  return poly;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool irreducible(const Poly& f, long long p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    const std::size_t count = ipow(static_cast<std::size_t>(p), d);
    for (std::size_t i = 0; i < count; ++i)
      if (poly_is_zero(poly_mod(f, nth_monic(p, d, i), p))) return false;
  }
  return true;
}

std::string poly_name(const Poly& coeffs) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const long long c = coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

FiniteRing zero_ring() { return make_ring_flat(1, {0}, {0}, "0"); }

FiniteRing zn(std::size_t n, const Limits& limits) {
  if (n == 0) throw Error("zn requires n >= 1");
  check_cap(n, limits);
  return cyclic_ring(n, [](std::size_t a, std::size_t b) { return a * b; }, "Z" + std::to_string(n),
                     limits);
}

std::vector<long long> gf_modulus(long long p, std::size_t k) {
  require_prime(p);
  if (k == 0) throw Error("gf requires k >= 1");
  const std::size_t count = ipow(static_cast<std::size_t>(p), k);
  for (std::size_t i = 0; i < count; ++i) {
    Poly f = nth_monic(p, k, i);
    if (irreducible(f, p)) return f;
  }
  throw Error("no irreducible polynomial found");  // unreachable for prime p
}

FiniteRing gf(long long p, std::size_t k, const Limits& limits) {
  require_prime(p);
  if (k == 0) throw Error("gf requires k >= 1");
  const std::size_t n = checked_power(static_cast<std::size_t>(p), k, limits);
  const Poly modulus = gf_modulus(p, k);
  auto digits = [&](std::size_t idx) {
    Poly c(k);
    for (std::size_t i = 0; i < k; ++i) {
      c[i] = static_cast<long long>(idx % static_cast<std::size_t>(p));
      idx /= static_cast<std::size_t>(p);
    }
    return c;
  };
  auto index_of = [&](const Poly& c) {
    std::size_t idx = 0;
    for (std::size_t i = c.size(); i-- > 0;) idx = idx * static_cast<std::size_t>(p) + static_cast<std::size_t>(c[i]);
    return idx;
  };
  std::vector<Element> add(n * n);
  std::vector<Element> mul(n * n);
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Poly ca = digits(a);
    names[a] = poly_name(ca);
    for (std::size_t b = 0; b < n; ++b) {
      const Poly cb = digits(b);
      Poly sum(k);
      for (std::size_t i = 0; i < k; ++i) sum[i] = (ca[i] + cb[i]) % p;
      Poly prod(2 * k - 1, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      prod = poly_mod(prod, modulus, p);
      prod.resize(k, 0);
      add[a * n + b] = static_cast<Element>(index_of(sum));
      mul[a * n + b] = static_cast<Element>(index_of(prod));
    }
  }
  const std::string label =
      k == 1 ? "GF(" + std::to_string(p) + ")" : "GF(" + std::to_string(n) + ")";
  FiniteRing ring = make_ring_flat(n, std::move(add), std::move(mul), label, limits);
  return k == 1 ? ring : ring.with_element_names(std::move(names));
}

FiniteRing n0(long long p, std::size_t n, const Limits& limits) {
  require_prime(p);
  const std::size_t order = checked_power(static_cast<std::size_t>(p), n, limits);
  const std::string label =
      n == 1 ? "N0(" + std::to_string(p) + ")" : "N0(" + std::to_string(p) + "^" + std::to_string(n) + ")";
  return cyclic_ring(order, [](std::size_t, std::size_t) { return std::size_t{0}; }, label, limits)
      .with_element_names(multiples_of_a(order));
}

FiniteRing np2(long long p, const Limits& limits) {
  require_prime(p);
  const auto q = static_cast<std::size_t>(p);
  const std::size_t order = checked_power(q, 2, limits);
  return cyclic_ring(order, [q](std::size_t a, std::size_t b) { return a * b * q; },
                     "N(" + std::to_string(p) + "^2)", limits)
      .with_element_names(multiples_of_a(order));
}

FiniteRing npp(long long p, const Limits& limits) {
  require_prime(p);
  // (a, b)(a', b') = (0, a a')
  return pair_ring(
      p, [](long long x1, long long, long long x2, long long) { return std::pair{0LL, x1 * x2}; },
      "N(" + std::to_string(p) + "," + std::to_string(p) + ")", limits);
}

FiniteRing ap(long long p, const Limits& limits) {
  require_prime(p);
  // [x y; 0 0][x' y'; 0 0] = [x x', x y'; 0 0]
  return pair_ring(
      p, [](long long x1, long long, long long x2, long long y2) { return std::pair{x1 * x2, x1 * y2}; },
      "A(" + std::to_string(p) + ")", limits);
}

FiniteRing ap0(long long p, const Limits& limits) {
  require_prime(p);
  // [x 0; y 0][x' 0; y' 0] = [x x' 0; y x' 0]
  return pair_ring(
      p, [](long long x1, long long y1, long long x2, long long) { return std::pair{x1 * x2, y1 * x2}; },
      "A0(" + std::to_string(p) + ")", limits);
}

FiniteRing zpx_mod_x2(long long p, const Limits& limits) {
  require_prime(p);
  FiniteRing ring = pair_ring(
      p,
      [](long long a, long long b, long long c, long long d) { return std::pair{a * c, a * d + b * c}; },
      "Z" + std::to_string(p) + "[x]/(x^2)", limits);
  const auto q = static_cast<std::size_t>(p);
  std::vector<std::string> names(q * q);
  for (std::size_t i = 0; i < q * q; ++i) {
    const std::size_t a = i % q, b = i / q;
    std::string bx = b == 0 ? "" : (b == 1 ? "x" : std::to_string(b) + "x");
    if (a == 0) names[i] = b == 0 ? "0" : bx;
    else names[i] = b == 0 ? std::to_string(a) : std::to_string(a) + "+" + bx;
  }
  return ring.with_element_names(std::move(names));
}

FiniteRing direct_sum(const FiniteRing& r, const FiniteRing& s, const Limits& limits) {
  const std::size_t nr = r.order(), ns = s.order();
  const std::size_t n = nr * ns;
  check_cap(n, limits);
  std::vector<Element> add(n * n);
  std::vector<Element> mul(n * n);
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto ra = static_cast<Element>(a / ns), sa = static_cast<Element>(a % ns);
    names[a] = "(" + r.element_name(ra) + "," + s.element_name(sa) + ")";
    for (std::size_t b = 0; b < n; ++b) {
      const auto rb = static_cast<Element>(b / ns), sb = static_cast<Element>(b % ns);
      add[a * n + b] = static_cast<Element>(r.add(ra, rb) * ns + s.add(sa, sb));
      mul[a * n + b] = static_cast<Element>(r.mul(ra, rb) * ns + s.mul(sa, sb));
    }
  }
  std::string label;
  if (!r.label().empty() && !s.label().empty()) label = r.label() + "+" + s.label();
  return make_ring_flat(n, std::move(add), std::move(mul), std::move(label), limits)
      .with_element_names(std::move(names));
}

FiniteRing matrix_ring(const FiniteRing& base, std::size_t k, const Limits& limits) {
  if (k == 0) throw Error("matrix_ring requires k >= 1");
  const std::size_t m = base.order();
  const std::size_t entries = k * k;
  const std::size_t n = checked_power(m, entries, limits);
  auto unpack = [&](std::size_t idx) {
    std::vector<Element> e(entries);
    for (std::size_t t = 0; t < entries; ++t) {
      e[t] = static_cast<Element>(idx % m);
      idx /= m;
    }
    return e;
  };
  auto pack = [&](const std::vector<Element>& e) {
    std::size_t idx = 0;
    for (std::size_t t = entries; t-- > 0;) idx = idx * m + e[t];
    return static_cast<Element>(idx);
  };
  std::vector<std::vector<Element>> cells(n);
  for (std::size_t a = 0; a < n; ++a) cells[a] = unpack(a);
  std::vector<Element> add(n * n);
  std::vector<Element> mul(n * n);
  std::vector<Element> tmp(entries);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& x = cells[a];
      const auto& y = cells[b];
      for (std::size_t t = 0; t < entries; ++t) tmp[t] = base.add(x[t], y[t]);
      add[a * n + b] = pack(tmp);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          Element acc = 0;
          for (std::size_t l = 0; l < k; ++l) acc = base.add(acc, base.mul(x[i * k + l], y[l * k + j]));
          tmp[i * k + j] = acc;
        }
      mul[a * n + b] = pack(tmp);
    }
  std::vector<std::string> names;
  if (n <= 4096) {
    names.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::string s = "[";
      for (std::size_t i = 0; i < k; ++i) {
        if (i > 0) s += "; ";
        for (std::size_t j = 0; j < k; ++j) {
          if (j > 0) s += " ";
          s += base.element_name(cells[a][i * k + j]);
        }
      }
      names[a] = s + "]";
    }
  }
  std::string label = base.label().empty() ? "" : "M" + std::to_string(k) + "(" + base.label() + ")";
  return make_ring_flat(n, std::move(add), std::move(mul), std::move(label), limits)
      .with_element_names(std::move(names));
}

std::vector<Element> quotient_map(const FiniteRing& ring, const Ideal& ideal) {
  const std::size_t n = ring.order();
  std::vector<Element> rep(n);
  for (Element x = 0; x < n; ++x) {
    Element best = x;
    for (Element i : ideal.members()) best = std::min(best, ring.add(x, i));
    rep[x] = best;
  }
  std::vector<Element> reps(rep);
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::vector<Element> coset(n);
  for (Element x = 0; x < n; ++x)
    coset[x] = static_cast<Element>(std::lower_bound(reps.begin(), reps.end(), rep[x]) - reps.begin());
  return coset;
}

FiniteRing quotient(const FiniteRing& ring, const Ideal& ideal) {
  // Revalidate: an Ideal built for a different ring must not slip through.
  make_ideal(ring, ideal.members());
  const std::vector<Element> coset = quotient_map(ring, ideal);
  const std::size_t q = ring.order() / ideal.size();
  std::vector<Element> reps(q);
  for (Element x = static_cast<Element>(ring.order()); x-- > 0;) reps[coset[x]] = x;
  std::vector<Element> add(q * q);
  std::vector<Element> mul(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      add[a * q + b] = coset[ring.add(reps[a], reps[b])];
      mul[a * q + b] = coset[ring.mul(reps[a], reps[b])];
    }
  std::string label = ring.label().empty() ? "" : ring.label() + "/I";
  return make_ring_flat(q, std::move(add), std::move(mul), std::move(label));
}

FiniteRing restrict_to(const FiniteRing& ring, std::span<const Element> closed_subset) {
  const std::size_t m = closed_subset.size();
  std::vector<Element> index(ring.order(), static_cast<Element>(-1));
  for (std::size_t i = 0; i < m; ++i) index[closed_subset[i]] = static_cast<Element>(i);
  if (m == 0 || closed_subset[0] != 0) throw Error("subset must start with 0");
  std::vector<Element> add(m * m);
  std::vector<Element> mul(m * m);
  std::vector<std::string> names(m);
  for (std::size_t a = 0; a < m; ++a) {
    names[a] = ring.element_name(closed_subset[a]);
    for (std::size_t b = 0; b < m; ++b) {
      const Element s = index[ring.add(closed_subset[a], closed_subset[b])];
      const Element p = index[ring.mul(closed_subset[a], closed_subset[b])];
      if (s == static_cast<Element>(-1) || p == static_cast<Element>(-1))
        throw Error("subset is not closed under the ring operations");
      add[a * m + b] = s;
      mul[a * m + b] = p;
    }
  }
  FiniteRing sub = make_ring_flat(m, std::move(add), std::move(mul));
  return ring.has_element_names() ? sub.with_element_names(std::move(names)) : sub;
}

GeneratedSubring subring_generated(const FiniteRing& ring, std::span<const Element> gens) {
  const std::size_t n = ring.order();
  std::vector<bool> in(n, false);
  std::vector<Element> members{0};
  in[0] = true;
  for (Element g : gens) {
    if (g >= n) throw Error("generator " + std::to_string(g) + " is not in the ring");
    if (!in[g]) {
      in[g] = true;
      members.push_back(g);
    }
  }
  // Each new element is combined with everything already present.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Element a = members[i], b = members[j];
      for (Element c : {ring.add(a, b), ring.mul(a, b), ring.mul(b, a), ring.neg(a)}) {
        if (!in[c]) {
          in[c] = true;
          members.push_back(c);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return GeneratedSubring{restrict_to(ring, members), members};
}

std::size_t characteristic(const FiniteRing& ring) {
  std::size_t m = 1;
  for (Element a = 0; a < ring.order(); ++a) m = std::lcm(m, ring.additive_order(a));
  return m;
}

}  // namespace zdring
