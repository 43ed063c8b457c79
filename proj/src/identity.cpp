#include "zdring/identity.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "zdring/errors.hpp"

namespace zdring {

namespace {

// Polynomial with variables replaced by slots 0..d-1 for fast evaluation.
struct Compiled {
  std::vector<Variable> vars;
  std::vector<std::pair<std::int64_t, std::vector<std::size_t>>> terms;

  explicit Compiled(const NcPoly& p) {
    const auto set = p.variables();
    vars.assign(set.begin(), set.end());
    for (const auto& [word, c] : p.terms()) {
      std::vector<std::size_t> slots;
      for (Variable v : word)
        slots.push_back(static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin()));
      terms.emplace_back(c, std::move(slots));
    }
  }

  Element eval(const FiniteRing& ring, const std::vector<Element>& values) const {
    Element sum = 0;
    for (const auto& [c, slots] : terms) {
      Element prod = values[slots[0]];
      for (std::size_t i = 1; i < slots.size() && prod != 0; ++i) prod = ring.mul(prod, values[slots[i]]);
      sum = ring.add(sum, ring.scale(c, prod));
    }
    return sum;
  }
};

void decode(std::uint64_t index, std::size_t n, std::vector<Element>& values) {
  for (std::size_t i = values.size(); i-- > 0;) {
    values[i] = static_cast<Element>(index % n);
    index /= n;
  }
}

Assignment to_assignment(const Compiled& c, const std::vector<Element>& values) {
  Assignment a;
  for (std::size_t i = 0; i < c.vars.size(); ++i) a[c.vars[i]] = values[i];
  return a;
}

}  // namespace

Element evaluate(const NcPoly& p, const FiniteRing& ring, const Assignment& assignment) {
  Element sum = 0;
  for (const auto& [word, c] : p.terms()) {
    Element prod = 0;
    bool first = true;
    for (Variable v : word) {
      auto it = assignment.find(v);
      if (it == assignment.end()) throw UnboundVariable("variable " + variable_name(v) + " has no value");
      if (it->second >= ring.order()) throw Error("assigned value is not a ring element");
      prod = first ? it->second : ring.mul(prod, it->second);
      first = false;
    }
    sum = ring.add(sum, ring.scale(c, prod));
  }
  return sum;
}

IdentityResult satisfies_identity(const FiniteRing& ring, const NcPoly& p, const Limits& limits,
                                  const IdentityOptions& options) {
  const Compiled compiled(p);
  const std::size_t n = ring.order();
  const std::size_t d = compiled.vars.size();

  std::uint64_t total = 1;
  bool over_budget = false;
  for (std::size_t i = 0; i < d; ++i) {
    if (total > limits.identity_budget / n + 1) {
      over_budget = true;
      break;
    }
    total *= n;
  }
  over_budget = over_budget || total > limits.identity_budget;

  IdentityResult result;
  if (over_budget) {
    if (!options.allow_sampling) {
      std::ostringstream msg;
      msg << "identity check needs " << n << "^" << d << " assignments, budget is " << limits.identity_budget;
      throw BudgetExceeded(msg.str());
    }
    result.sampled = true;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    std::vector<Element> values(d);
    for (std::uint64_t s = 0; s < limits.identity_budget; ++s) {
      for (auto& v : values) v = pick(rng);
      ++result.evaluations;
      if (compiled.eval(ring, values) != 0) {
        result.holds = false;
        result.counterexample = to_assignment(compiled, values);
        break;
      }
    }
    return result;
  }

  // Contiguous chunks of the assignment index space; the smallest failing
  // index across workers is the lexicographically least counterexample.
  const unsigned workers = static_cast<unsigned>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(limits.effective_workers(), total / 4096 + 1)));
  std::atomic<std::uint64_t> best{total};
  auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<Element> values(d);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      if ((idx & 1023) == 0 && idx >= best.load(std::memory_order_relaxed)) return;
      decode(idx, n, values);
      if (compiled.eval(ring, values) != 0) {
        std::uint64_t cur = best.load();
        while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
        }
        return;
      }
    }
  };
  if (workers == 1) {
    scan(0, total);
  } else {
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = w * chunk;
      const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
      if (lo < hi) threads.emplace_back(scan, lo, hi);
    }
    for (auto& t : threads) t.join();
  }

  const std::uint64_t found = best.load();
  if (found < total) {
    std::vector<Element> values(d);
    decode(found, n, values);
    result.holds = false;
    result.counterexample = to_assignment(compiled, values);
    result.evaluations = found + 1;
  } else {
    result.evaluations = total;
  }
  return result;
}

std::string render_assignment(const Assignment& assignment) {
  std::string out;
  for (const auto& [v, e] : assignment) {
    if (!out.empty()) out += ", ";
    out += variable_name(v) + "=" + std::to_string(e);
  }
  return out;
}

}  // namespace zdring
