#pragma once

// Small algebras used for sweeps and tests.

#include <cstdio>
#include <string>
#include <vector>

#include "menger/algebra.hpp"
#include "menger/enumerate.hpp"

namespace menger {

/// Left zero semigroup on {a, b}: x[y] = x.
inline menger_algebra lz2() {
  return menger_algebra::from_function(1, {"a", "b"}, [](element g, auto) { return g; });
}

/// Right zero semigroup on {a, b}: x[y] = y.
inline menger_algebra rz2() {
  return menger_algebra::from_function(1, {"a", "b"}, [](element, auto xs) { return xs[0]; });
}

inline function_family boolean_family(std::size_t arity, std::vector<std::vector<element>> fs) {
  return function_family{2, arity, std::move(fs)};
}

/// Closure of binary AND: the single element AND, named f.
inline menger_algebra bool_and() {
  auto const gen = generate_function_algebra(boolean_family(2, {{0, 0, 0, 1}}));
  auto const t = gen.table();
  return menger_algebra::from_table(2, {"f"}, std::vector<element>(t.begin(), t.end()));
}

/// Closure of binary NAND: NAND, AND, const 1, const 0.
inline menger_algebra nand_closure() {
  return generate_function_algebra(boolean_family(2, {{1, 1, 1, 0}}));
}

/// Closure of ternary NOR.
inline menger_algebra nor3_closure() {
  return generate_function_algebra(boolean_family(3, {{1, 0, 0, 0, 0, 0, 0, 0}}));
}

/// Closure of x3 ∧ (x1 ⊕ x2) and x1 ∧ (¬x2 ∨ x3).
inline menger_algebra mixed3_closure() {
  return generate_function_algebra(
      boolean_family(3, {{0, 0, 0, 1, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 1, 0, 1}}));
}

struct corpus_entry {
  std::string name;
  menger_algebra algebra;
};

/// LZ2, RZ2, BOOL-AND, the NAND closure, two rank-3 function algebras and
/// every rank-1 algebra on at most 3 labeled elements.
inline std::vector<corpus_entry> standard_corpus() {
  std::vector<corpus_entry> out;
  out.push_back({"lz2", lz2()});
  out.push_back({"rz2", rz2()});
  out.push_back({"bool-and", bool_and()});
  out.push_back({"nand", nand_closure()});
  out.push_back({"nor3", nor3_closure()});
  out.push_back({"mixed3", mixed3_closure()});
  for (std::size_t m = 1; m <= 3; ++m) {
    auto const all = all_semigroups(m);
    for (std::size_t i = 0; i < all.size(); ++i) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "sg%zu-%03zu", m, i);
      out.push_back({buf, all[i]});
    }
  }
  return out;
}

}  // namespace menger
