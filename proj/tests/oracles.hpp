#pragma once

// Slow reference implementations used to cross-check the library. They share
// nothing with it beyond the Expr tree they read.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "bsnet/formula.hpp"
#include "bsnet/network.hpp"

namespace oracle {

using Bits = std::vector<bool>;
using Blocks = std::vector<std::vector<std::size_t>>;

inline Bits bits_of(std::uint64_t w, std::size_t n) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = (w >> i) & 1u;
  return b;
}

inline std::uint64_t word_of(const Bits& b) {
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i]) w |= std::uint64_t{1} << i;
  }
  return w;
}

inline bool eval(const bsnet::Expr& e, const Bits& x) {
  using Op = bsnet::Expr::Op;
  switch (e.op()) {
    case Op::constant:
      return e.value();
    case Op::variable:
      return x.at(e.index());
    case Op::negation:
      return !eval(e.operands()[0], x);
    case Op::conjunction:
      for (const auto& o : e.operands()) {
        if (!eval(o, x)) return false;
      }
      return true;
    case Op::disjunction:
      for (const auto& o : e.operands()) {
        if (eval(o, x)) return true;
      }
      return false;
    case Op::exclusive_or: {
      bool v = false;
      for (const auto& o : e.operands()) v = v != eval(o, x);
      return v;
    }
  }
  return false;
}

// One block-sequential step: every block reads the state left by the
// previous one.
inline Bits step(const bsnet::BooleanNetwork& f, const Blocks& blocks, Bits x) {
  for (const auto& block : blocks) {
    Bits next = x;
    for (std::size_t i : block) next[i] = eval(f.local(i), x);
    x = next;
  }
  return x;
}

inline Blocks parallel(std::size_t n) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return {all};
}

// Number of limit-cycles of each length, found by running every
// configuration 2^n steps and collecting the cycle it lands on.
inline std::map<std::size_t, std::size_t> cycle_counts(const bsnet::BooleanNetwork& f, const Blocks& blocks) {
  const std::size_t n = f.size();
  std::set<std::vector<std::uint64_t>> cycles;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    Bits x = bits_of(w, n);
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); ++t) x = step(f, blocks, x);
    std::vector<std::uint64_t> cycle{word_of(x)};
    for (Bits y = step(f, blocks, x); y != x; y = step(f, blocks, y)) cycle.push_back(word_of(y));
    std::sort(cycle.begin(), cycle.end());
    cycles.insert(cycle);
  }
  std::map<std::size_t, std::size_t> counts;
  for (const auto& c : cycles) ++counts[c.size()];
  return counts;
}

inline std::size_t phi(const bsnet::BooleanNetwork& f, const Blocks& blocks, std::size_t k) {
  const auto counts = cycle_counts(f, blocks);
  auto it = counts.find(k);
  return it == counts.end() ? 0 : it->second;
}

inline std::set<std::uint64_t> fixed_points(const bsnet::BooleanNetwork& f, const Blocks& blocks) {
  std::set<std::uint64_t> out;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << f.size()); ++w) {
    if (word_of(step(f, blocks, bits_of(w, f.size()))) == w) out.insert(w);
  }
  return out;
}

// Sum over k of k! S(n, k), with S written as the alternating sum.
inline std::int64_t ordered_bell_stirling(std::size_t n) {
  auto binom = [](std::int64_t a, std::int64_t b) {
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  auto power = [](std::int64_t b, std::size_t e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
  };
  std::int64_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      const std::int64_t term = binom(k, i) * power(static_cast<std::int64_t>(i), n);
      total += ((k - i) % 2 == 0) ? term : -term;
    }
  }
  return total;
}

// Every surjective labelling [n] -> {1..t}, in lexicographic order.
inline std::vector<std::vector<std::size_t>> ordered_partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> label(n, 1);
  while (true) {
    const std::size_t t = n == 0 ? 0 : *std::max_element(label.begin(), label.end());
    std::set<std::size_t> image(label.begin(), label.end());
    if (image.size() == t) out.push_back(label);
    std::size_t i = n;
    while (i > 0 && label[i - 1] == n) label[--i] = 1;
    if (i == 0) break;
    ++label[i - 1];
  }
  return out;
}

inline Blocks blocks_of_labels(const std::vector<std::size_t>& label) {
  const std::size_t t = *std::max_element(label.begin(), label.end());
  Blocks b(t);
  for (std::size_t i = 0; i < label.size(); ++i) b[label[i] - 1].push_back(i);
  return b;
}

// Arc signs by flipping every component on every configuration, iterated
// with the flipped component outermost. Bit 0: positive seen, bit 1:
// negative seen.
inline std::map<std::pair<std::size_t, std::size_t>, int> digraph(const bsnet::BooleanNetwork& f) {
  const std::size_t n = f.size();
  std::map<std::pair<std::size_t, std::size_t>, int> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
      if ((w >> i) & 1u) continue;
      const Bits lo = bits_of(w, n);
      const Bits hi = bits_of(w | (std::uint64_t{1} << i), n);
      for (std::size_t j = 0; j < n; ++j) {
        const bool a = eval(f.local(j), lo);
        const bool b = eval(f.local(j), hi);
        if (a != b) arcs[{i, j}] |= (b ? 1 : 2);
      }
    }
  }
  return arcs;
}

inline bool satisfies(const bsnet::Cnf3Formula& psi, std::uint64_t a) {
  for (const auto& c : psi.clauses()) {
    bool sat = false;
    for (const auto& l : c) sat = sat || (((a >> l.variable) & 1u) != 0) != l.negated;
    if (!sat) return false;
  }
  return true;
}

inline bool satisfiable(const bsnet::Cnf3Formula& psi) {
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << psi.variable_count()); ++a) {
    if (satisfies(psi, a)) return true;
  }
  return false;
}

inline bool exists_forall(const bsnet::Cnf3Formula& psi, std::size_t s) {
  const std::size_t n = psi.variable_count();
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << s); ++v) {
    bool all = true;
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << (n - s)) && all; ++u) all = satisfies(psi, v | (u << s));
    if (all) return true;
  }
  return false;
}

}  // namespace oracle
