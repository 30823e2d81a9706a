#pragma once

// Partition and congruence enumeration, subset classification, and
// algebras of n-place functions closed under superposition.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "menger/algebra.hpp"
#include "menger/parallel.hpp"
#include "menger/principal.hpp"
#include "menger/relations.hpp"
#include "menger/term.hpp"

namespace menger {

inline constexpr std::uint64_t default_partition_cap = 1'000'000;
inline constexpr std::uint64_t default_subset_cap = std::uint64_t{1} << 16;

/// Bell(m), saturated at `limit + 1`.
inline std::uint64_t bell_number(std::size_t m, std::uint64_t limit = default_partition_cap) {
  auto const sat = limit + 1;
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 1; i <= m; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(std::min(sat, next.back() + v));
    row = std::move(next);
  }
  return std::min(sat, row.front());
}

/// Calls fn(partition) for every set partition of {0..m-1} in
/// restricted-growth-string order.
template <typename Fn>
void for_each_partition(std::size_t m, Fn&& fn, std::uint64_t cap = default_partition_cap) {
  if (m == 0) throw error(error_code::invalid_argument, "partitions need m >= 1");
  if (bell_number(m, cap) > cap) {
    throw error(error_code::capacity_exceeded,
                "Bell(" + std::to_string(m) + ") exceeds cap " + std::to_string(cap));
  }
  std::vector<element> rgs(m, 0);
  std::vector<element> peak(m, 0);  // max of rgs[0..i]
  for (;;) {
    fn(partition(rgs));
    std::size_t i = m - 1;
    while (i > 0 && rgs[i] > peak[i - 1]) --i;
    if (i == 0) return;
    ++rgs[i];
    peak[i] = std::max(peak[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < m; ++j) {
      rgs[j] = 0;
      peak[j] = peak[i];
    }
  }
}

inline std::vector<partition> enumerate_partitions(std::size_t m,
                                                   std::uint64_t cap = default_partition_cap) {
  std::vector<partition> out;
  for_each_partition(m, [&](partition p) { out.push_back(std::move(p)); }, cap);
  return out;
}

inline relation_property congruence_property(congruence_kind kind) {
  switch (kind) {
    case congruence_kind::v: return relation_property::v_congruence;
    case congruence_kind::l: return relation_property::l_congruence;
    case congruence_kind::full: return relation_property::congruence;
  }
  throw error(error_code::invalid_argument, "unknown congruence kind");
}

inline std::vector<partition> enumerate_congruences(menger_algebra const& alg,
                                                    congruence_kind kind,
                                                    std::uint64_t cap = default_partition_cap) {
  relation_check const check{congruence_property(kind), 0};
  std::vector<partition> out;
  for_each_partition(
      alg.size(),
      [&](partition p) {
        if (check_relation_property(alg, p, check)) out.push_back(std::move(p));
      },
      cap);
  return out;
}

/// Subset with bit g set iff bit g of `code` is set.
inline subset subset_from_code(std::size_t m, std::uint64_t code) {
  subset s(m);
  for (std::size_t g = 0; g < m; ++g) {
    if ((code >> g) & 1U) s.set(g);
  }
  return s;
}

inline std::uint64_t subset_count(std::size_t m, std::uint64_t cap = default_subset_cap) {
  if (m >= 63 || (std::uint64_t{1} << m) > cap) {
    throw error(error_code::capacity_exceeded,
                "2^" + std::to_string(m) + " subsets exceed cap " + std::to_string(cap));
  }
  return std::uint64_t{1} << m;
}

// ---------------------------------------------------------------------------
// Classification

struct classification_row {
  subset h;
  bool strong = false;
  bool l_strong = false;
  bool bistrong = false;
  bool normal_v_complex = false;
  bool normal_l_complex = false;
  bool normal_bicomplex = false;
  bool l_ideal = false;
  bool s_ideal = false;
  bool sl_ideal = false;
  bool l_consistent = false;
  std::size_t v_residue = 0;
  std::size_t l_residue = 0;
  std::size_t bi_residue = 0;
  std::size_t v_classes = 0;
  std::size_t l_classes = 0;
  std::size_t bi_classes = 0;

  bool operator==(classification_row const&) const = default;
};

inline classification_row classify_subset(menger_algebra const& alg,
                                          translation_closure const& closure, subset const& h) {
  classification_row row;
  row.h = h;
  row.strong = static_cast<bool>(is_strong(alg, closure, h, strong_method::a));
  row.l_strong = static_cast<bool>(is_l_strong(alg, h, strong_method::a));
  row.bistrong = static_cast<bool>(is_bistrong(alg, closure, h, strong_method::a));
  auto flag = [&](subset_property p) {
    return static_cast<bool>(check_subset_property(alg, h, subset_check{p, 0}, &closure));
  };
  row.normal_v_complex = flag(subset_property::normal_v_complex);
  row.normal_l_complex = flag(subset_property::normal_l_complex);
  row.normal_bicomplex = flag(subset_property::normal_bicomplex);
  row.l_ideal = flag(subset_property::l_ideal);
  row.s_ideal = flag(subset_property::s_ideal);
  row.sl_ideal = row.l_ideal && row.s_ideal;
  row.l_consistent = flag(subset_property::l_consistent);
  auto const v = v_analysis(alg, closure, h);
  auto const l = l_analysis(alg, h);
  auto const b = full_analysis(alg, closure, h);
  row.v_residue = v.residue.count();
  row.l_residue = l.residue.count();
  row.bi_residue = b.residue.count();
  row.v_classes = v.relation.block_count();
  row.l_classes = l.relation.block_count();
  row.bi_classes = b.relation.block_count();
  return row;
}

/// One row per subset, in order of the subset's bitmask value.
inline std::vector<classification_row> classify_subsets(menger_algebra const& alg,
                                                        translation_closure const& closure,
                                                        std::uint64_t cap = default_subset_cap,
                                                        std::size_t threads = 1) {
  auto const count = subset_count(alg.size(), cap);
  std::vector<classification_row> rows(count);
  parallel_for(count, threads, [&](std::size_t code) {
    rows[code] = classify_subset(alg, closure, subset_from_code(alg.size(), code));
  });
  return rows;
}

// ---------------------------------------------------------------------------
// Function algebras

/// n-place functions on {0..k-1}; each table lists values at the k^n points
/// in lexicographic order, first argument most significant.
struct function_family {
  std::size_t base_size = 0;
  std::size_t arity = 0;
  std::vector<std::vector<element>> functions;
};

inline constexpr std::size_t default_function_cap = 4096;

namespace detail {

inline std::size_t point_count(std::size_t k, std::size_t n) {
  auto const c = table_entry_count(n - 1, k);  // k^n
  if (!c) throw error(error_code::capacity_exceeded, "too many points");
  return *c;
}

inline void validate_family(function_family const& fam) {
  if (fam.base_size == 0) throw error(error_code::invalid_argument, "empty base set");
  if (fam.arity == 0) throw error(error_code::invalid_argument, "arity must be at least 1");
  if (fam.functions.empty()) throw error(error_code::invalid_argument, "no generators");
  auto const points = point_count(fam.base_size, fam.arity);
  for (auto const& f : fam.functions) {
    if (f.size() != points) {
      throw error(error_code::invalid_argument, "function table has " + std::to_string(f.size()) +
                                                    " values, expected " + std::to_string(points));
    }
    for (auto v : f) {
      if (v >= fam.base_size) throw error(error_code::invalid_argument, "value out of range");
    }
  }
}

}  // namespace detail

/// f[g1..gn] evaluated pointwise.
inline std::vector<element> superpose(std::size_t base_size, std::vector<element> const& f,
                                      std::vector<std::vector<element> const*> const& gs) {
  auto const points = f.size();
  std::vector<element> out(points);
  for (std::size_t p = 0; p < points; ++p) {
    std::size_t q = 0;
    for (auto const* g : gs) q = q * base_size + (*g)[p];
    out[p] = f[q];
  }
  return out;
}

/// Superposition closure of the generators; elements keep discovery order
/// with the generators first and are named f0, f1, ...
inline menger_algebra generate_function_algebra(function_family const& generators,
                                                std::size_t cap = default_function_cap) {
  detail::validate_family(generators);
  auto const k = generators.base_size;
  auto const n = generators.arity;
  std::vector<std::vector<element>> carrier;
  std::map<std::vector<element>, element> index;
  auto add = [&](std::vector<element> f) {
    if (index.contains(f)) return;
    if (carrier.size() >= cap) {
      throw error(error_code::capacity_exceeded,
                  "function algebra exceeds " + std::to_string(cap) + " elements");
    }
    index.emplace(f, static_cast<element>(carrier.size()));
    carrier.push_back(std::move(f));
  };
  for (auto const& f : generators.functions) add(f);

  // Each pass composes every tuple that involves an element found in the
  // previous pass.
  std::size_t done = 0;
  std::vector<std::vector<element> const*> gs(n);
  std::vector<std::size_t> idx(n + 1);
  while (done < carrier.size()) {
    auto const size = carrier.size();
    std::fill(idx.begin(), idx.end(), 0);
    for (;;) {
      if (*std::max_element(idx.begin(), idx.end()) >= done) {
        for (std::size_t i = 0; i < n; ++i) gs[i] = &carrier[idx[i + 1]];
        add(superpose(k, carrier[idx[0]], gs));
      }
      std::size_t pos = n + 1;
      while (pos > 0 && ++idx[pos - 1] == size) idx[--pos] = 0;
      if (pos == 0) break;
    }
    done = size;
  }

  std::vector<std::string> names;
  for (std::size_t i = 0; i < carrier.size(); ++i) names.push_back("f" + std::to_string(i));
  return menger_algebra::from_function(n, std::move(names), [&](element f, auto xs) {
    for (std::size_t i = 0; i < n; ++i) gs[i] = &carrier[xs[i]];
    return index.at(superpose(k, carrier[f], gs));
  });
}

inline menger_algebra generate_function_algebra(std::size_t base_size,
                                                function_family generators,
                                                std::size_t cap = default_function_cap) {
  generators.base_size = base_size;
  return generate_function_algebra(generators, cap);
}

/// a, b, c, ... skipping x; g23, g24, ... past the alphabet.
inline std::vector<std::string> default_names(std::size_t m) {
  std::vector<std::string> out;
  for (char c = 'a'; c <= 'w' && out.size() < m; ++c) out.emplace_back(1, c);
  for (std::size_t i = out.size(); i < m; ++i) out.push_back("g" + std::to_string(i));
  return out;
}

/// Rank-1 algebra x[y] = x·y.
inline menger_algebra semigroup_as_menger(std::vector<std::vector<element>> const& table,
                                          std::vector<std::string> names = {}) {
  auto const m = table.size();
  if (names.empty()) names = default_names(m);
  std::vector<element> flat;
  for (auto const& row : table) {
    if (row.size() != m) throw error(error_code::invalid_argument, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return menger_algebra::from_table(1, std::move(names), std::move(flat));
}

/// Every associative table on m labeled elements, in lexicographic order of
/// the flattened table.
inline std::vector<menger_algebra> all_semigroups(std::size_t m) {
  auto const entries = m * m;
  if (m == 0 || m > 3) throw error(error_code::capacity_exceeded, "semigroup sweep limited to m <= 3");
  std::vector<menger_algebra> out;
  std::vector<element> flat(entries, 0);
  auto const names = default_names(m);
  for (;;) {
    auto alg = menger_algebra::from_table(1, names, flat, validation::deferred);
    if (verify_superassociativity(alg).ok()) out.push_back(std::move(alg));
    std::size_t pos = entries;
    while (pos > 0 && ++flat[pos - 1] == m) flat[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

}  // namespace menger
