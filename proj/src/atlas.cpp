#include "zdring/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "std_group.hpp"
#include "zdring/errors.hpp"
#include "zdring/families.hpp"
#include "zdring/identity.hpp"
#include "zdring/ringtab.hpp"

namespace zdring {

namespace {

using detail::StdGroup;

std::vector<std::pair<std::size_t, std::size_t>> factorize(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    std::size_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Partitions of e into non-increasing parts, largest first part first.
void partitions(std::size_t e, std::size_t max_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t part = std::min(e, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(e - part, part, cur, out);
    cur.pop_back();
  }
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_enumeration_cap(std::size_t n, const Limits& limits) {
  if (n == 0) throw Error("ring order must be positive");
  if (n > limits.effective_enumeration_cap())
    throw OrderCapExceeded("order " + std::to_string(n) + " exceeds enumeration cap " +
                           std::to_string(limits.effective_enumeration_cap()));
}

// Depth-first scan of structure constants on the generators of a p-group
// type, slot t = i*k + j holding g_i * g_j. Associativity on generator
// triples is checked as soon as both sides are determined by assigned slots.
class PresentationScan {
 public:
  explicit PresentationScan(const AdditiveType& type) : group_(type), k_(type.size()) {
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < k_; ++j) domains_.push_back(group_.killed_by(std::gcd(type[i], type[j])));
  }

  std::size_t slots() const noexcept { return k_ * k_; }
  const StdGroup& group() const noexcept { return group_; }

  // Consistent prefixes of the given depth, in scan order.
  std::vector<std::vector<Element>> prefixes(std::size_t depth) const {
    std::vector<std::vector<Element>> out;
    std::vector<Element> c(slots(), 0);
    collect(c, 0, depth, out);
    return out;
  }

  template <class Visit>
  void extend(std::vector<Element> constants, std::size_t assigned, Visit&& visit) const {
    constants.resize(slots(), 0);
    run(constants, assigned, visit);
  }

 private:
  void collect(std::vector<Element>& c, std::size_t t, std::size_t depth,
               std::vector<std::vector<Element>>& out) const {
    if (t == depth) {
      out.emplace_back(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(depth));
      return;
    }
    for (Element v : domains_[t]) {
      c[t] = v;
      if (consistent(c, t + 1)) collect(c, t + 1, depth, out);
    }
    c[t] = 0;
  }

  template <class Visit>
  void run(std::vector<Element>& c, std::size_t t, Visit& visit) const {
    if (t == slots()) {
      visit(c);
      return;
    }
    for (Element v : domains_[t]) {
      c[t] = v;
      if (consistent(c, t + 1)) run(c, t + 1, visit);
    }
    c[t] = 0;
  }

  // x * g_l, if every needed slot is assigned.
  bool right_product(const std::vector<Element>& c, std::size_t assigned, Element x, std::size_t l,
                     Element& out) const {
    out = 0;
    for (std::size_t m = 0; m < k_; ++m) {
      const std::size_t a = group_.coord(x, m);
      if (a == 0) continue;
      if (m * k_ + l >= assigned) return false;
      out = group_.add(out, group_.scale(a, c[m * k_ + l]));
    }
    return true;
  }

  // g_i * y, if every needed slot is assigned.
  bool left_product(const std::vector<Element>& c, std::size_t assigned, std::size_t i, Element y,
                    Element& out) const {
    out = 0;
    for (std::size_t m = 0; m < k_; ++m) {
      const std::size_t a = group_.coord(y, m);
      if (a == 0) continue;
      if (i * k_ + m >= assigned) return false;
      out = group_.add(out, group_.scale(a, c[i * k_ + m]));
    }
    return true;
  }

  bool consistent(const std::vector<Element>& c, std::size_t assigned) const {
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < k_; ++j) {
        if (i * k_ + j >= assigned) continue;
        for (std::size_t l = 0; l < k_; ++l) {
          if (j * k_ + l >= assigned) continue;
          Element lhs = 0, rhs = 0;
          if (!right_product(c, assigned, c[i * k_ + j], l, lhs)) continue;
          if (!left_product(c, assigned, i, c[j * k_ + l], rhs)) continue;
          if (lhs != rhs) return false;
        }
      }
    return true;
  }

  StdGroup group_;
  std::size_t k_;
  std::vector<std::vector<Element>> domains_;
};

bool is_prime_power_type(const AdditiveType& type) {
  if (type.empty()) return true;
  const std::size_t p = factorize(type.front()).front().first;
  return std::all_of(type.begin(), type.end(), [&](std::size_t c) {
    auto f = factorize(c);
    return f.size() == 1 && f.front().first == p;
  });
}

// Certificates of every ring on a p-group type, computed in parallel over
// prefixes of the constant tuple and merged in a fixed order.
std::set<Certificate> certificates_of_type(const AdditiveType& type, const Limits& limits) {
  const PresentationScan scan(type);
  const std::size_t depth = std::min<std::size_t>(scan.slots(), 2);
  const auto tasks = scan.prefixes(depth);
  std::vector<std::set<Certificate>> found(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      try {
        scan.extend(tasks[t], depth, [&](const std::vector<Element>& constants) {
          const FiniteRing ring = ring_from_structure_constants(type, constants, limits);
          found[t].insert(ring_canonical_certificate(ring, limits));
        });
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(limits.effective_workers(),
                                                            static_cast<unsigned>(tasks.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }
  if (error) std::rethrow_exception(error);

  std::set<Certificate> all;
  for (auto& s : found) all.merge(s);
  return all;
}

std::vector<FiniteRing> catalog_rings(std::size_t n, const Limits& limits);

std::vector<FiniteRing> build_catalog(std::size_t n, const Limits& limits) {
  std::vector<FiniteRing> out;
  if (n == 1) {
    out.push_back(zero_ring());
    return out;
  }
  out.push_back(zn(n, limits));
  const auto f = factorize(n);
  if (f.size() == 1) {
    const auto [p, e] = f.front();
    const auto pl = static_cast<long long>(p);
    if (e == 1) {
      out.push_back(n0(pl, 1, limits));
    } else {
      out.push_back(gf(pl, e, limits));
      out.push_back(n0(pl, e, limits));
      if (e == 2) {
        out.push_back(np2(pl, limits));
        out.push_back(npp(pl, limits));
        out.push_back(ap(pl, limits));
        out.push_back(ap0(pl, limits));
        out.push_back(zpx_mod_x2(pl, limits));
      }
    }
  }
  for (std::size_t a = 2; a * a <= n; ++a) {
    if (n % a != 0) continue;
    const auto left = catalog_rings(a, limits);
    const auto right = catalog_rings(n / a, limits);
    for (const auto& r : left)
      for (const auto& s : right) out.push_back(direct_sum(r, s, limits));
  }
  return out;
}

std::vector<FiniteRing> catalog_rings(std::size_t n, const Limits& limits) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<FiniteRing>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto built = build_catalog(n, limits);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(n, std::move(built)).first->second;
}

const std::map<Certificate, std::string>& catalog_names(std::size_t n, const Limits& limits) {
  static std::mutex mutex;
  static std::map<std::size_t, std::map<Certificate, std::string>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::map<Certificate, std::string> names;
  for (const auto& ring : catalog_rings(n, limits)) names.emplace(ring_canonical_certificate(ring, limits), ring.label());
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(n, std::move(names)).first->second;
}

AtlasEntry entry_with(const FiniteRing& ring, Certificate certificate, const Limits& limits) {
  AtlasEntry e{ring, std::move(certificate), structure_report(ring, limits), {}};
  e.graph_certificate = canonical_form(zero_divisor_graph(ring), limits);
  return e;
}

std::vector<AtlasEntry> build_atlas(std::size_t n, const Limits& limits) {
  std::set<Certificate> certs;
  if (n == 1) {
    certs.insert(ring_canonical_certificate(zero_ring(), limits));
  } else {
    const auto f = factorize(n);
    if (f.size() == 1) {
      for (const auto& type : abelian_group_types(n, limits)) certs.merge(certificates_of_type(type, limits));
    } else {
      std::vector<FiniteRing> partial{zero_ring()};
      for (const auto& [p, e] : f) {
        const auto part = enumerate_rings(ipow(p, e), limits);
        std::vector<FiniteRing> next;
        for (const auto& r : partial)
          for (const auto& s : part) next.push_back(r.order() == 1 ? s.ring : direct_sum(r, s.ring, limits));
        partial = std::move(next);
      }
      for (const auto& r : partial) certs.insert(ring_canonical_certificate(r, limits));
    }
  }

  std::vector<AtlasEntry> out;
  std::size_t unnamed = 0;
  for (const auto& cert : certs) {
    ++unnamed;
    auto label = catalog_label(cert, limits);
    FiniteRing ring = ring_from_certificate(cert).with_label(
        label ? *label : "R" + std::to_string(n) + "." + std::to_string(unnamed));
    out.push_back(entry_with(ring, cert, limits));
  }
  return out;
}

}  // namespace

AtlasEntry make_entry(const FiniteRing& ring, const Limits& limits) {
  return entry_with(ring, ring_canonical_certificate(ring, limits), limits);
}

std::vector<AdditiveType> abelian_group_types(std::size_t n, const Limits& limits) {
  check_enumeration_cap(n, limits);
  std::vector<AdditiveType> out{{}};
  for (const auto& [p, e] : factorize(n)) {
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> cur;
    partitions(e, e, cur, parts);
    std::vector<AdditiveType> next;
    for (const auto& prefix : out)
      for (const auto& part : parts) {
        AdditiveType t = prefix;
        for (std::size_t x : part) t.push_back(ipow(p, x));
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<GeneratorPresentation> associative_presentations(const AdditiveType& type, const Limits& limits) {
  std::size_t n = 1;
  for (std::size_t c : type) n *= c;
  check_enumeration_cap(n, limits);
  if (!is_prime_power_type(type)) throw Error("associative_presentations needs a p-group type");
  const PresentationScan scan(type);
  std::vector<GeneratorPresentation> out;
  scan.extend({}, 0, [&](const std::vector<Element>& c) { out.push_back({type, c}); });
  return out;
}

std::vector<AtlasEntry> enumerate_rings(std::size_t n, const Limits& limits) {
  check_enumeration_cap(n, limits);
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<AtlasEntry>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto built = build_atlas(n, limits);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(n, std::move(built)).first->second;
}

std::vector<AtlasEntry> enumerate_up_to(std::size_t n_max, const Limits& limits) {
  check_enumeration_cap(n_max, limits);
  std::vector<AtlasEntry> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto part = enumerate_rings(n, limits);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<AtlasEntry> rings_with_graph(std::size_t n_max, const SimpleGraph& g, const Limits& limits) {
  check_enumeration_cap(n_max, limits);
  const auto target = canonical_form(g, limits);
  std::vector<AtlasEntry> out;
  for (auto& e : enumerate_up_to(n_max, limits))
    if (e.graph_certificate == target) out.push_back(std::move(e));
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> graph_determinacy_report(
    const std::vector<AtlasEntry>& entries, const std::optional<std::vector<NcPoly>>& filter,
    const Limits& limits) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].ring.order() == 1) continue;
    bool ok = true;
    if (filter)
      for (const auto& p : *filter)
        if (!satisfies_identity(entries[i].ring, p, limits).holds) {
          ok = false;
          break;
        }
    if (ok) kept.push_back(i);
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < kept.size(); ++a)
    for (std::size_t b = a + 1; b < kept.size(); ++b) {
      const auto& x = entries[kept[a]];
      const auto& y = entries[kept[b]];
      if (x.graph_certificate == y.graph_certificate && x.certificate != y.certificate)
        out.emplace_back(kept[a], kept[b]);
    }
  return out;
}

std::optional<std::string> catalog_label(const Certificate& certificate, const Limits& limits) {
  if (certificate.size() < 2) return std::nullopt;
  const std::size_t n = (static_cast<std::size_t>(certificate[0]) << 8) | certificate[1];
  if (n == 0 || n > limits.order_cap) return std::nullopt;
  const auto& names = catalog_names(n, limits);
  if (auto it = names.find(certificate); it != names.end()) return it->second;
  return std::nullopt;
}

std::string write_atlas(const std::vector<AtlasEntry>& entries) {
  std::size_t order = 0;
  for (const auto& e : entries) order = std::max(order, e.ring.order());
  std::ostringstream out;
  out << "atlas v1\norder " << order << "\ncount " << entries.size() << "\n";
  for (const auto& e : entries) out << to_hex(e.certificate) << "\n";
  for (const auto& e : entries) out << "\n" << write_ringtab(e.ring);
  return out.str();
}

std::vector<AtlasEntry> read_atlas(std::string_view text, const Limits& limits) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return {};
  std::istringstream in{std::string(text)};
  std::string line;
  auto expect = [&](const std::string& key) -> std::string {
    if (!std::getline(in, line)) throw FormatError("atlas: truncated header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(key, 0) != 0) throw FormatError("atlas: expected '" + key + "', got '" + line + "'");
    return line.substr(key.size());
  };
  expect("atlas v1");
  const std::string order_text = expect("order ");
  const std::string count_text = expect("count ");
  std::size_t count = 0;
  try {
    (void)std::stoul(order_text);
    count = std::stoul(count_text);
  } catch (const std::exception&) {
    throw FormatError("atlas: bad order or count");
  }
  std::vector<Certificate> certs;
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(in, line)) throw FormatError("atlas: missing certificate line");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    certs.push_back(from_hex(line));
  }
  std::ostringstream rest;
  rest << in.rdbuf();
  const auto rings = count == 0 ? std::vector<FiniteRing>{} : read_ringtabs(rest.str(), limits);
  if (rings.size() != count)
    throw FormatError("atlas: index lists " + std::to_string(count) + " rings, file holds " +
                      std::to_string(rings.size()));
  std::vector<AtlasEntry> out;
  for (std::size_t i = 0; i < count; ++i) {
    AtlasEntry e = make_entry(rings[i], limits);
    if (e.certificate != certs[i])
      throw FormatError("atlas: certificate mismatch for entry " + std::to_string(i + 1));
    out.push_back(std::move(e));
  }
  return out;
}

void save_atlas(const std::vector<AtlasEntry>& entries, const std::filesystem::path& path) {
  write_text_file(path, write_atlas(entries));
}

std::vector<AtlasEntry> load_atlas(const std::filesystem::path& path, const Limits& limits) {
  return read_atlas(read_text_file(path), limits);
}

}  // namespace zdring
