#include "zdring/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "std_group.hpp"
#include "zdring/errors.hpp"

namespace zdring {

namespace detail {

StdGroup::StdGroup(AdditiveType type) : type_(std::move(type)) {
  place_.push_back(1);
  for (std::size_t c : type_) {
    n_ *= c;
    place_.push_back(n_);
  }
  const std::size_t k = type_.size();
  coords_.resize(n_ * k);
  for (std::size_t x = 0; x < n_; ++x) {
    std::size_t rest = x;
    for (std::size_t i = 0; i < k; ++i) {
      coords_[x * k + i] = rest % type_[i];
      rest /= type_[i];
    }
  }
  add_.resize(n_ * n_);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < k; ++i)
        idx += ((coords_[a * k + i] + coords_[b * k + i]) % type_[i]) * place_[i];
      add_[a * n_ + b] = static_cast<Element>(idx);
    }
}

Element StdGroup::scale(std::size_t k, Element x) const noexcept {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < type_.size(); ++i) idx += ((k % type_[i]) * coord(x, i) % type_[i]) * place_[i];
  return static_cast<Element>(idx);
}

std::vector<Element> StdGroup::killed_by(std::size_t m) const {
  std::vector<Element> out;
  for (Element x = 0; x < n_; ++x)
    if (scale(m, x) == 0) out.push_back(x);
  return out;
}

Element StdGroup::product(const std::vector<Element>& constants, Element x, Element y) const noexcept {
  const std::size_t k = type_.size();
  Element acc = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t xi = coord(x, i);
    if (xi == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t yj = coord(y, j);
      if (yj == 0) continue;
      acc = add(acc, scale(xi * yj, constants[i * k + j]));
    }
  }
  return acc;
}

std::vector<Profile> element_profiles(const FiniteRing& ring) {
  const auto n = static_cast<Element>(ring.order());
  std::vector<Profile> out(n);
  for (Element x = 0; x < n; ++x) {
    std::size_t left_ann = 0, right_ann = 0, central = 0, left_fixed = 0;
    for (Element y = 0; y < n; ++y) {
      if (ring.mul(x, y) == 0) ++left_ann;
      if (ring.mul(y, x) == 0) ++right_ann;
      if (ring.mul(x, y) == ring.mul(y, x)) ++central;
      if (ring.mul(y, x) == y) ++left_fixed;
    }
    const Element sq = ring.mul(x, x);
    std::size_t nil_index = 0;
    Element power = x;
    for (std::size_t k = 1; k <= n + 1; ++k) {
      if (power == 0) {
        nil_index = k;
        break;
      }
      power = ring.mul(power, x);
    }
    out[x] = {ring.additive_order(x), left_ann,     right_ann, central, left_fixed,
              sq == x ? 1U : 0U,      nil_index,    ring.additive_order(sq)};
  }
  return out;
}

namespace {

template <class Key>
std::vector<std::size_t> rank_keys(const std::vector<Key>& keys) {
  std::vector<Key> sorted(keys);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::size_t> ranks(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    ranks[i] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
  return ranks;
}

std::size_t distinct(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> s(v);
  std::sort(s.begin(), s.end());
  return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

}  // namespace

std::vector<std::size_t> refined_colors(const FiniteRing& ring) {
  const auto n = static_cast<Element>(ring.order());
  std::vector<std::size_t> colors = rank_keys(element_profiles(ring));
  std::size_t classes = distinct(colors);
  while (true) {
    std::vector<std::vector<std::size_t>> signatures(n);
    for (Element x = 0; x < n; ++x) {
      std::vector<std::array<std::size_t, 4>> rel(n);
      for (Element y = 0; y < n; ++y)
        rel[y] = {colors[y], colors[ring.mul(x, y)], colors[ring.mul(y, x)], colors[ring.add(x, y)]};
      std::sort(rel.begin(), rel.end());
      auto& sig = signatures[x];
      sig.reserve(1 + 4 * n);
      sig.push_back(colors[x]);
      for (const auto& r : rel) sig.insert(sig.end(), r.begin(), r.end());
    }
    std::vector<std::size_t> next = rank_keys(signatures);
    const std::size_t next_classes = distinct(next);
    if (next_classes == classes) return colors;
    colors = std::move(next);
    classes = next_classes;
  }
}

}  // namespace detail

using detail::StdGroup;

AdditiveType additive_type(const FiniteRing& ring) {
  const std::size_t n = ring.order();
  AdditiveType type;
  std::size_t rest = n;
  for (std::size_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    std::size_t part = 1;
    while (rest % p == 0) {
      rest /= p;
      part *= p;
    }
    // killed[j] = #{x : p^j x = 0} = p^(sum_i min(j, e_i))
    std::vector<std::size_t> log_killed{0};
    std::size_t pj = 1;
    while (true) {
      pj *= p;
      std::size_t count = 0;
      for (Element x = 0; x < n; ++x)
        if (ring.scale(static_cast<long long>(pj), x) == 0) ++count;
      std::size_t lg = 0;
      for (std::size_t c = count; c > 1; c /= p) ++lg;
      log_killed.push_back(lg);
      if (count == part) break;
    }
    // at_least[j] = #{i : e_i >= j}
    const std::size_t max_e = log_killed.size() - 1;
    std::vector<std::size_t> at_least(max_e + 2, 0);
    for (std::size_t j = 1; j <= max_e; ++j) at_least[j] = log_killed[j] - log_killed[j - 1];
    for (std::size_t e = max_e; e >= 1; --e) {
      const std::size_t count = at_least[e] - at_least[e + 1];
      std::size_t pe = 1;
      for (std::size_t i = 0; i < e; ++i) pe *= p;
      for (std::size_t i = 0; i < count; ++i) type.push_back(pe);
    }
  }
  return type;
}

namespace {

// Incremental map from standard coordinates into a ring, built one
// generator at a time.
class BasisMap {
 public:
  BasisMap(const FiniteRing& ring, const StdGroup& group)
      : ring_(ring), group_(group), to_ring_(group.order(), 0), from_ring_(ring.order(), kUnset) {
    from_ring_[0] = 0;
  }

  // Tries g as generator m; on success fills block [place_m, place_{m+1}).
  bool push(std::size_t m, Element g) {
    const std::size_t c = group_.type()[m];
    if (ring_.scale(static_cast<long long>(c), g) != 0) return false;
    const std::size_t lo = group_.place(m), hi = group_.place(m + 1);
    std::size_t written = lo;
    Element multiple = 0;
    bool ok = true;
    for (std::size_t a = 1; a < c && ok; ++a) {
      multiple = ring_.add(multiple, g);
      for (std::size_t j = 0; j < lo; ++j) {
        const Element e = ring_.add(to_ring_[j], multiple);
        if (from_ring_[e] != kUnset) {
          ok = false;
          break;
        }
        to_ring_[written] = e;
        from_ring_[e] = static_cast<Element>(written);
        ++written;
      }
    }
    if (!ok) {
      for (std::size_t i = lo; i < written; ++i) from_ring_[to_ring_[i]] = kUnset;
      return false;
    }
    (void)hi;
    gens_.push_back(g);
    return true;
  }

  void pop(std::size_t m) {
    for (std::size_t i = group_.place(m); i < group_.place(m + 1); ++i) from_ring_[to_ring_[i]] = kUnset;
    gens_.pop_back();
  }

  Element to_ring(std::size_t idx) const { return to_ring_[idx]; }
  Element from_ring(Element e) const { return from_ring_[e]; }
  bool mapped(Element e) const { return from_ring_[e] != kUnset; }
  const std::vector<Element>& gens() const { return gens_; }

  static constexpr Element kUnset = static_cast<Element>(-1);

 private:
  const FiniteRing& ring_;
  const StdGroup& group_;
  std::vector<Element> to_ring_;
  std::vector<Element> from_ring_;
  std::vector<Element> gens_;
};

// Canonical search over bases. The key is laid out block by block: for
// level m, the colours of the new block followed by the generator products
// (i, m) and (m, i). Unknown products (outside the current span) are known
// to exceed every index already placed, which lets partial keys prune.
class CertificateSearch {
 public:
  CertificateSearch(const FiniteRing& ring, const AdditiveType& type)
      : ring_(ring), group_(type), map_(ring, group_), colors_(detail::refined_colors(ring)) {}

  std::vector<std::size_t> run() {
    key_.clear();
    key_.push_back(colors_[0]);
    search(0);
    return best_;
  }

 private:
  static constexpr std::size_t kUnknown = static_cast<std::size_t>(-1);

  std::size_t product_entry(std::size_t i, std::size_t j) const {
    const Element p = ring_.mul(map_.gens()[i], map_.gens()[j]);
    return map_.mapped(p) ? map_.from_ring(p) : kUnknown;
  }

  // Appends level m's part of the key.
  void append_level(std::size_t m) {
    for (std::size_t idx = group_.place(m); idx < group_.place(m + 1); ++idx)
      key_.push_back(colors_[map_.to_ring(idx)]);
    for (std::size_t i = 0; i < m; ++i) key_.push_back(product_entry(i, m));
    for (std::size_t i = 0; i <= m; ++i) key_.push_back(product_entry(m, i));
  }

  // Products recorded as unknown at earlier levels may now be known; the
  // key is rebuilt from scratch to keep it simple.
  void rebuild_key(std::size_t levels) {
    key_.assign(1, colors_[0]);
    for (std::size_t m = 0; m < levels; ++m) append_level(m);
  }

  // -1: partial key already smaller than best; 0: undecided; 1: worse.
  int compare_with_best(std::size_t span) const {
    if (best_.empty()) return -1;
    for (std::size_t i = 0; i < key_.size(); ++i) {
      const std::size_t mine = key_[i], theirs = best_[i];
      if (mine == kUnknown) return theirs < span ? 1 : 0;
      if (mine != theirs) return mine < theirs ? -1 : 1;
    }
    return 0;
  }

  void search(std::size_t m) {
    const std::size_t k = group_.rank();
    if (m == k) {
      if (best_.empty() || key_ < best_) best_ = key_;
      return;
    }
    // Order candidates by the colours of the block they produce.
    std::vector<std::pair<std::vector<std::size_t>, Element>> candidates;
    for (Element g = 1; g < ring_.order(); ++g) {
      if (map_.mapped(g)) continue;
      if (!map_.push(m, g)) continue;
      std::vector<std::size_t> block;
      for (std::size_t idx = group_.place(m); idx < group_.place(m + 1); ++idx)
        block.push_back(colors_[map_.to_ring(idx)]);
      map_.pop(m);
      candidates.emplace_back(std::move(block), g);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [block, g] : candidates) {
      map_.push(m, g);
      rebuild_key(m + 1);
      if (compare_with_best(group_.place(m + 1)) <= 0) search(m + 1);
      map_.pop(m);
    }
  }

  const FiniteRing& ring_;
  StdGroup group_;
  BasisMap map_;
  std::vector<std::size_t> colors_;
  std::vector<std::size_t> key_;
  std::vector<std::size_t> best_;
};

void put16(Certificate& out, std::size_t v) {
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

std::size_t get16(const Certificate& in, std::size_t& pos) {
  if (pos + 2 > in.size()) throw FormatError("certificate truncated");
  const std::size_t v = (static_cast<std::size_t>(in[pos]) << 8) | in[pos + 1];
  pos += 2;
  return v;
}

// Finds some basis of `ring` for `group`, leaving it pushed in `map`.
bool any_basis(const FiniteRing& ring, const StdGroup& group, BasisMap& map, std::size_t m) {
  if (m == group.rank()) return true;
  for (Element g = 1; g < ring.order(); ++g) {
    if (map.mapped(g) || !map.push(m, g)) continue;
    if (any_basis(ring, group, map, m + 1)) return true;
    map.pop(m);
  }
  return false;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const FiniteRing& r, const FiniteRing& s, const AdditiveType& type)
      : r_(r), s_(s), group_(type), source_(r, group_), target_(s, group_),
        profile_r_(detail::element_profiles(r)), profile_s_(detail::element_profiles(s)) {}

  std::optional<RingHom> run() {
    if (!any_basis(r_, group_, source_, 0)) return std::nullopt;
    if (!search(0)) return std::nullopt;
    RingHom hom{r_.order(), s_.order(), std::vector<Element>(r_.order()), true};
    for (Element x = 0; x < r_.order(); ++x) hom.image[x] = target_.to_ring(source_.from_ring(x));
    return hom;
  }

 private:
  bool consistent(std::size_t m) const {
    for (std::size_t idx = group_.place(m); idx < group_.place(m + 1); ++idx)
      if (profile_r_[source_.to_ring(idx)] != profile_s_[target_.to_ring(idx)]) return false;
    const std::size_t span = group_.place(m + 1);
    const auto& gr = source_.gens();
    const auto& gs = target_.gens();
    for (std::size_t i = 0; i <= m; ++i)
      for (std::size_t j = 0; j <= m; ++j) {
        if (i != m && j != m) continue;
        const Element pr = r_.mul(gr[i], gr[j]);
        const Element ps = s_.mul(gs[i], gs[j]);
        const Element idx = source_.from_ring(pr);
        if (idx < span) {
          if (target_.to_ring(idx) != ps) return false;
        } else if (target_.mapped(ps) && target_.from_ring(ps) < span) {
          return false;
        }
      }
    return true;
  }

  bool full_check() const {
    const auto n = static_cast<Element>(r_.order());
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        const Element ia = target_.to_ring(source_.from_ring(a));
        const Element ib = target_.to_ring(source_.from_ring(b));
        if (target_.to_ring(source_.from_ring(r_.mul(a, b))) != s_.mul(ia, ib)) return false;
      }
    return true;
  }

  bool search(std::size_t m) {
    if (m == group_.rank()) return full_check();
    const Element want = source_.gens()[m];
    for (Element h = 1; h < s_.order(); ++h) {
      if (target_.mapped(h) || profile_s_[h] != profile_r_[want]) continue;
      if (!target_.push(m, h)) continue;
      if (consistent(m) && search(m + 1)) return true;
      target_.pop(m);
    }
    return false;
  }

  const FiniteRing& r_;
  const FiniteRing& s_;
  StdGroup group_;
  BasisMap source_;
  BasisMap target_;
  std::vector<detail::Profile> profile_r_;
  std::vector<detail::Profile> profile_s_;
};

}  // namespace

std::optional<RingHom> ring_isomorphic(const FiniteRing& r, const FiniteRing& s, const Limits& limits) {
  if (r.order() > limits.structural_cap || s.order() > limits.structural_cap)
    throw OrderCapExceeded("ring_isomorphic: order exceeds structural cap " +
                           std::to_string(limits.structural_cap));
  if (r.order() != s.order()) return std::nullopt;
  const AdditiveType type = additive_type(r);
  if (type != additive_type(s)) return std::nullopt;
  auto pr = detail::element_profiles(r);
  auto ps = detail::element_profiles(s);
  std::sort(pr.begin(), pr.end());
  std::sort(ps.begin(), ps.end());
  if (pr != ps) return std::nullopt;
  return IsomorphismSearch(r, s, type).run();
}

Certificate ring_canonical_certificate(const FiniteRing& ring, const Limits& limits) {
  if (ring.order() > limits.structural_cap)
    throw OrderCapExceeded("ring_canonical_certificate: order " + std::to_string(ring.order()) +
                           " exceeds structural cap " + std::to_string(limits.structural_cap));
  const AdditiveType type = additive_type(ring);
  const std::vector<std::size_t> key = CertificateSearch(ring, type).run();
  Certificate out;
  put16(out, ring.order());
  out.push_back(static_cast<std::uint8_t>(type.size()));
  for (std::size_t c : type) put16(out, c);
  for (std::size_t v : key) put16(out, v);
  return out;
}

FiniteRing ring_from_structure_constants(const AdditiveType& type, const std::vector<Element>& constants,
                                         const Limits& limits) {
  const StdGroup group(type);
  const std::size_t n = group.order();
  const std::size_t k = type.size();
  if (constants.size() != k * k) throw FormatError("structure constant table has wrong size");
  for (Element c : constants)
    if (c >= n) throw FormatError("structure constant out of range");
  std::vector<Element> mul(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) mul[a * n + b] = group.product(constants, a, b);
  return make_ring_flat(n, group.flat_add(), std::move(mul), {}, limits);
}

FiniteRing ring_from_certificate(const Certificate& certificate) {
  std::size_t pos = 0;
  const std::size_t n = get16(certificate, pos);
  if (pos >= certificate.size()) throw FormatError("certificate truncated");
  const std::size_t k = certificate[pos++];
  AdditiveType type(k);
  for (auto& c : type) c = get16(certificate, pos);
  const StdGroup group(type);
  if (group.order() != n) throw FormatError("certificate type does not match order");
  std::vector<Element> constants(k * k);
  get16(certificate, pos);  // colour of zero
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t idx = group.place(m); idx < group.place(m + 1); ++idx) get16(certificate, pos);
    for (std::size_t i = 0; i < m; ++i) constants[i * k + m] = static_cast<Element>(get16(certificate, pos));
    for (std::size_t i = 0; i <= m; ++i) constants[m * k + i] = static_cast<Element>(get16(certificate, pos));
  }
  if (pos != certificate.size()) throw FormatError("certificate has trailing bytes");
  Limits unlimited;
  unlimited.order_cap = std::max<std::size_t>(n, unlimited.order_cap);
  return ring_from_structure_constants(type, constants, unlimited);
}

std::string to_hex(const std::vector<std::uint8_t>& bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

std::vector<std::uint8_t> from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw FormatError("odd-length hex string");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw FormatError(std::string("invalid hex digit '") + c + "'");
  };
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) * 16 + nibble(hex[2 * i + 1]));
  return out;
}

}  // namespace zdring
