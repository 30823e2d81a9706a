#pragma once

/**
 * @file relations.hpp
 * @brief Equivalence relations on G and the relation/subset properties
 *        used throughout the congruence theory.
 *
 * Every check quantifies definitionally and stops at the lexicographically
 * first violation (element indices ascending, slots ascending), so the
 * reported witness is reproducible. Witness tuples list element indices in
 * the order documented on each check; argument vectors appear as B indices
 * (0 = ē) and translations as closure indices.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "menger/algebra.hpp"
#include "menger/error.hpp"
#include "menger/term.hpp"

namespace menger {

/// An equivalence relation on {0..m-1}; each element is labelled with the
/// smallest member of its block.
class partition {
 public:
  partition() = default;

  /// Any labelling where equal labels mean the same block.
  template <typename Label>
  explicit partition(std::vector<Label> const& labels) : block_of_(labels.size()) {
    std::map<Label, element> first;
    for (element g = 0; g < labels.size(); ++g) {
      block_of_[g] = first.try_emplace(labels[g], g).first->second;
    }
  }

  static partition identity(std::size_t size) {
    std::vector<element> labels(size);
    for (element g = 0; g < size; ++g) labels[g] = g;
    return partition(labels);
  }

  static partition universal(std::size_t size) {
    return partition(std::vector<element>(size, 0));
  }

  static partition from_blocks(std::size_t size, std::vector<std::vector<element>> const& blocks) {
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> labels(size, unset);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) throw error(error_code::invalid_argument, "empty block");
      for (auto g : blocks[b]) {
        if (g >= size || labels[g] != unset) {
          throw error(error_code::invalid_argument, "blocks must partition the carrier");
        }
        labels[g] = b;
      }
    }
    if (std::find(labels.begin(), labels.end(), unset) != labels.end()) {
      throw error(error_code::invalid_argument, "blocks do not cover the carrier");
    }
    return partition(labels);
  }

  std::size_t size() const noexcept { return block_of_.size(); }
  element block_of(element g) const { return block_of_[g]; }
  bool related(element a, element b) const { return block_of_[a] == block_of_[b]; }
  std::vector<element> const& labels() const noexcept { return block_of_; }

  std::size_t block_count() const {
    std::size_t count = 0;
    for (element g = 0; g < size(); ++g) count += block_of_[g] == g;
    return count;
  }

  /// Blocks ordered by their smallest member.
  std::vector<std::vector<element>> blocks() const {
    std::vector<std::vector<element>> out;
    std::vector<std::size_t> slot(size());
    for (element g = 0; g < size(); ++g) {
      if (block_of_[g] == g) {
        slot[g] = out.size();
        out.emplace_back();
      }
      out[slot[block_of_[g]]].push_back(g);
    }
    return out;
  }

  std::vector<subset> block_subsets() const {
    std::vector<subset> out;
    for (auto const& b : blocks()) {
      subset s(size());
      for (auto g : b) s.set(g);
      out.push_back(std::move(s));
    }
    return out;
  }

  subset block(element g) const {
    subset s(size());
    for (element x = 0; x < size(); ++x) {
      if (related(g, x)) s.set(x);
    }
    return s;
  }

  bool is_block(subset const& s) const {
    auto const first = s.find_first();
    return first != subset::npos && block(static_cast<element>(first)) == s;
  }

  /// True when this relation is contained in `coarser`.
  bool refines(partition const& coarser) const {
    for (element g = 0; g < size(); ++g) {
      if (!coarser.related(g, block_of_[g])) return false;
    }
    return true;
  }

  /// True when both relations coincide on domain × domain.
  bool agrees_on(partition const& other, subset const& domain) const {
    for (auto a = domain.find_first(); a != subset::npos; a = domain.find_next(a)) {
      for (auto b = domain.find_next(a); b != subset::npos; b = domain.find_next(b)) {
        auto const x = static_cast<element>(a);
        auto const y = static_cast<element>(b);
        if (related(x, y) != other.related(x, y)) return false;
      }
    }
    return true;
  }

  bool operator==(partition const&) const = default;

 private:
  std::vector<element> block_of_;
};

/// A symmetric, transitive relation: an equivalence on `domain`, empty
/// outside it.
class partial_partition {
 public:
  partial_partition(partition const& whole, subset domain)
      : domain_(std::move(domain)), labels_(whole.size(), npos) {
    std::vector<std::size_t> restricted(whole.size());
    for (element g = 0; g < whole.size(); ++g) {
      restricted[g] = domain_.test(g) ? whole.block_of(g) : npos;
    }
    // Relabel with the smallest member inside the domain.
    std::map<std::size_t, element> first;
    for (element g = 0; g < whole.size(); ++g) {
      if (domain_.test(g)) labels_[g] = first.try_emplace(restricted[g], g).first->second;
    }
  }

  static constexpr element npos = static_cast<element>(-1);

  subset const& domain() const noexcept { return domain_; }
  bool related(element a, element b) const {
    return labels_[a] != npos && labels_[a] == labels_[b];
  }
  std::vector<element> const& labels() const noexcept { return labels_; }

  std::vector<std::vector<element>> blocks() const {
    std::map<element, std::vector<element>> by_label;
    for (element g = 0; g < labels_.size(); ++g) {
      if (labels_[g] != npos) by_label[labels_[g]].push_back(g);
    }
    std::vector<std::vector<element>> out;
    for (auto& [_, b] : by_label) out.push_back(std::move(b));
    return out;
  }

  bool operator==(partial_partition const&) const = default;

 private:
  subset domain_;
  std::vector<element> labels_;
};

/// Outcome of a property check. `witness` holds the first violating tuple
/// (layout per check) and `detail` renders it with element names.
struct verdict {
  bool holds = true;
  bool vacuous = false;
  std::vector<std::size_t> witness;
  std::string detail;

  explicit operator bool() const noexcept { return holds; }
};

enum class relation_property {
  stable,
  l_regular,
  v_regular,
  i_regular,
  l_cancellative,
  v_cancellative,
  lv_cancellative,
  v_congruence,
  l_congruence,
  congruence,
};

struct relation_check {
  relation_property property;
  std::size_t slot = 0;  // 0-based; i-regular only
};

enum class subset_property {
  normal_v_complex,
  normal_l_complex,
  normal_bicomplex,
  l_ideal,
  i_ideal,
  s_ideal,
  sl_ideal,
  l_consistent,
};

struct subset_check {
  subset_property property;
  std::size_t slot = 0;  // 0-based; i-ideal only
};

namespace detail {

// Splits "name(k)" into name and the 1-based k; k is 0 when absent.
inline std::pair<std::string_view, std::size_t> split_indexed(std::string_view text) {
  auto const open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') return {text, 0};
  auto const digits = text.substr(open + 1, text.size() - open - 2);
  std::size_t k = 0;
  if (digits.empty()) return {text, 0};
  for (char c : digits) {
    if (c < '0' || c > '9') return {text, 0};
    k = k * 10 + static_cast<std::size_t>(c - '0');
  }
  return {text.substr(0, open), k};
}

inline std::string tuple_names(menger_algebra const& alg, std::size_t tuple) {
  std::vector<element> xs(alg.rank());
  alg.tuple_at(tuple, xs);
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + alg.name(xs[i]);
  return out + ")";
}

inline std::string arg_names(menger_algebra const& alg, std::size_t arg) {
  return arg == 0 ? std::string("ē") : tuple_names(alg, arg - 1);
}

inline verdict violation(std::vector<std::size_t> witness, std::string detail) {
  return verdict{false, false, std::move(witness), std::move(detail)};
}

// Lexicographic walk over all n-tuples whose i-th component is related to
// xs[i]; fn(tuple_index) returns false to stop. Returns false if stopped.
template <typename Fn>
bool for_each_related_tuple(menger_algebra const& alg, partition const& rel,
                            std::span<element const> xs, Fn&& fn) {
  auto const n = alg.rank();
  std::vector<std::vector<element>> choices(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (element y = 0; y < alg.size(); ++y) {
      if (rel.related(xs[i], y)) choices[i].push_back(y);
    }
  }
  std::vector<std::size_t> pos(n, 0);
  while (true) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) r = r * alg.size() + choices[i][pos[i]];
    if (!fn(r)) return false;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++pos[i] < choices[i].size()) break;
      pos[i] = 0;
      if (i == 0) return true;
    }
  }
}

// u[w|_slot h] where w is a tuple index; the slot component of w is ignored.
inline element apply_slot_indexed(menger_algebra const& alg, element u, std::size_t w,
                                  std::size_t slot, element h) {
  std::vector<element> xs(alg.rank());
  alg.tuple_at(w, xs);
  xs[slot] = h;
  return alg.apply_indexed(u, 1 + alg.tuple_index(xs));
}

// Tuple indices with component `slot` fixed to 0, ascending.
inline std::vector<std::size_t> context_tuples(menger_algebra const& alg, std::size_t slot) {
  std::vector<std::size_t> out;
  std::vector<element> xs(alg.rank());
  for (std::size_t r = 0; r < alg.tuple_count(); ++r) {
    alg.tuple_at(r, xs);
    if (xs[slot] == 0) out.push_back(r);
  }
  return out;
}

inline void require_same_carrier(menger_algebra const& alg, std::size_t size) {
  if (size != alg.size()) {
    throw error(error_code::invalid_argument, "relation or subset is over a different carrier");
  }
}

}  // namespace detail

inline relation_check parse_relation_property(std::string_view text) {
  auto [name, k] = detail::split_indexed(text);
  if (name == "i-regular" && k >= 1) return {relation_property::i_regular, k - 1};
  if (k != 0) throw error(error_code::unknown_property, "unknown property '" + std::string(text) + "'");
  static constexpr std::pair<std::string_view, relation_property> names[] = {
      {"stable", relation_property::stable},
      {"l-regular", relation_property::l_regular},
      {"v-regular", relation_property::v_regular},
      {"l-cancellative", relation_property::l_cancellative},
      {"v-cancellative", relation_property::v_cancellative},
      {"lv-cancellative", relation_property::lv_cancellative},
      {"v-congruence", relation_property::v_congruence},
      {"l-congruence", relation_property::l_congruence},
      {"congruence", relation_property::congruence},
  };
  for (auto const& [n, p] : names) {
    if (n == name) return {p, 0};
  }
  throw error(error_code::unknown_property, "unknown property '" + std::string(text) + "'");
}

inline subset_check parse_subset_property(std::string_view text) {
  auto [name, k] = detail::split_indexed(text);
  if (name == "i-ideal" && k >= 1) return {subset_property::i_ideal, k - 1};
  if (k != 0) throw error(error_code::unknown_property, "unknown property '" + std::string(text) + "'");
  static constexpr std::pair<std::string_view, subset_property> names[] = {
      {"normal-v-complex", subset_property::normal_v_complex},
      {"normal-l-complex", subset_property::normal_l_complex},
      {"normal-bicomplex", subset_property::normal_bicomplex},
      {"l-ideal", subset_property::l_ideal},
      {"s-ideal", subset_property::s_ideal},
      {"sl-ideal", subset_property::sl_ideal},
      {"l-consistent", subset_property::l_consistent},
  };
  for (auto const& [n, p] : names) {
    if (n == name) return {p, 0};
  }
  throw error(error_code::unknown_property, "unknown property '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// Relation properties

/// (x,y), (x_i,y_i) ∈ ρ ⇒ (x[x̄], y[ȳ]) ∈ ρ. Witness (x, y, x̄, ȳ) as
/// (x, y, tuple index of x̄, tuple index of ȳ).
inline verdict check_stable(menger_algebra const& alg, partition const& rel) {
  std::vector<element> xs(alg.rank());
  for (element x = 0; x < alg.size(); ++x) {
    for (element y = 0; y < alg.size(); ++y) {
      if (!rel.related(x, y)) continue;
      for (std::size_t rx = 0; rx < alg.tuple_count(); ++rx) {
        alg.tuple_at(rx, xs);
        element const left = alg.apply_indexed(x, 1 + rx);
        std::optional<verdict> bad;
        detail::for_each_related_tuple(alg, rel, xs, [&](std::size_t ry) {
          if (rel.related(left, alg.apply_indexed(y, 1 + ry))) return true;
          bad = detail::violation({x, y, rx, ry}, "x=" + alg.name(x) + " y=" + alg.name(y) +
                                                      " x̄=" + detail::tuple_names(alg, rx) +
                                                      " ȳ=" + detail::tuple_names(alg, ry));
          return false;
        });
        if (bad) return *bad;
      }
    }
  }
  return {};
}

/// (x,y) ∈ ρ ⇒ (x[z̄], y[z̄]) ∈ ρ. Witness (x, y, z̄).
inline verdict check_l_regular(menger_algebra const& alg, partition const& rel) {
  for (element x = 0; x < alg.size(); ++x) {
    for (element y = 0; y < alg.size(); ++y) {
      if (!rel.related(x, y)) continue;
      for (std::size_t z = 0; z < alg.tuple_count(); ++z) {
        if (!rel.related(alg.apply_indexed(x, 1 + z), alg.apply_indexed(y, 1 + z))) {
          return detail::violation({x, y, z}, "x=" + alg.name(x) + " y=" + alg.name(y) +
                                                  " z̄=" + detail::tuple_names(alg, z));
        }
      }
    }
  }
  return {};
}

/// (x_i,y_i) ∈ ρ for all i ⇒ (z[x̄], z[ȳ]) ∈ ρ. Witness (z, x̄, ȳ).
inline verdict check_v_regular(menger_algebra const& alg, partition const& rel) {
  std::vector<element> xs(alg.rank());
  for (element z = 0; z < alg.size(); ++z) {
    for (std::size_t rx = 0; rx < alg.tuple_count(); ++rx) {
      alg.tuple_at(rx, xs);
      element const left = alg.apply_indexed(z, 1 + rx);
      std::optional<verdict> bad;
      detail::for_each_related_tuple(alg, rel, xs, [&](std::size_t ry) {
        if (rel.related(left, alg.apply_indexed(z, 1 + ry))) return true;
        bad = detail::violation({z, rx, ry}, "z=" + alg.name(z) + " x̄=" +
                                                 detail::tuple_names(alg, rx) +
                                                 " ȳ=" + detail::tuple_names(alg, ry));
        return false;
      });
      if (bad) return *bad;
    }
  }
  return {};
}

/// (x,y) ∈ ρ ⇒ (u[w̄|_i x], u[w̄|_i y]) ∈ ρ. Witness (u, w̄, x, y); the
/// slot component of w̄ is reported as 0.
inline verdict check_i_regular(menger_algebra const& alg, partition const& rel, std::size_t slot) {
  if (slot >= alg.rank()) throw error(error_code::invalid_argument, "slot index out of range");
  auto const contexts = detail::context_tuples(alg, slot);
  for (element u = 0; u < alg.size(); ++u) {
    for (auto w : contexts) {
      for (element x = 0; x < alg.size(); ++x) {
        element const left = detail::apply_slot_indexed(alg, u, w, slot, x);
        for (element y = 0; y < alg.size(); ++y) {
          if (!rel.related(x, y)) continue;
          if (!rel.related(left, detail::apply_slot_indexed(alg, u, w, slot, y))) {
            return detail::violation(
                {u, w, x, y}, "i=" + std::to_string(slot + 1) + " u=" + alg.name(u) +
                                  " w̄=" + detail::tuple_names(alg, w) + " x=" + alg.name(x) +
                                  " y=" + alg.name(y));
          }
        }
      }
    }
  }
  return {};
}

/// (x[z̄], y[z̄]) ∈ ρ ⇒ (x,y) ∈ ρ. Witness (x, y, z̄).
inline verdict check_l_cancellative(menger_algebra const& alg, partition const& rel) {
  for (element x = 0; x < alg.size(); ++x) {
    for (element y = 0; y < alg.size(); ++y) {
      if (rel.related(x, y)) continue;
      for (std::size_t z = 0; z < alg.tuple_count(); ++z) {
        if (rel.related(alg.apply_indexed(x, 1 + z), alg.apply_indexed(y, 1 + z))) {
          return detail::violation({x, y, z}, "x=" + alg.name(x) + " y=" + alg.name(y) +
                                                  " z̄=" + detail::tuple_names(alg, z));
        }
      }
    }
  }
  return {};
}

/// Slot form: (u[w̄|_i g1], u[w̄|_i g2]) ∈ ρ and u[w̄|_i g1] ∉ residue ⇒
/// (g1,g2) ∈ ρ. Witness (i, u, w̄, g1, g2), i 0-based.
inline verdict check_slot_cancellation(menger_algebra const& alg, partition const& rel,
                                       subset const& residue) {
  for (std::size_t slot = 0; slot < alg.rank(); ++slot) {
    auto const contexts = detail::context_tuples(alg, slot);
    for (element u = 0; u < alg.size(); ++u) {
      for (auto w : contexts) {
        for (element x = 0; x < alg.size(); ++x) {
          element const left = detail::apply_slot_indexed(alg, u, w, slot, x);
          if (residue.test(left)) continue;
          for (element y = 0; y < alg.size(); ++y) {
            if (rel.related(x, y)) continue;
            if (rel.related(left, detail::apply_slot_indexed(alg, u, w, slot, y))) {
              return detail::violation(
                  {slot, u, w, x, y}, "i=" + std::to_string(slot + 1) + " u=" + alg.name(u) +
                                          " w̄=" + detail::tuple_names(alg, w) +
                                          " x=" + alg.name(x) + " y=" + alg.name(y));
            }
          }
        }
      }
    }
  }
  return {};
}

inline verdict check_v_cancellative(menger_algebra const& alg, partition const& rel) {
  return check_slot_cancellation(alg, rel, subset(alg.size()));
}

/// Translation form: (t(x), t(y)) ∈ ρ ⇒ (x,y) ∈ ρ over every translation.
/// Witness (t, x, y).
inline verdict check_v_cancellative_by_translations(menger_algebra const& alg,
                                                    translation_closure const& closure,
                                                    partition const& rel) {
  for (std::size_t t = 0; t < closure.size(); ++t) {
    for (element x = 0; x < alg.size(); ++x) {
      for (element y = 0; y < alg.size(); ++y) {
        if (!rel.related(x, y) && rel.related(closure.apply(t, x), closure.apply(t, y))) {
          return detail::violation({t, x, y}, "t=" + format_term(alg, closure.witness(t)) +
                                                  " x=" + alg.name(x) + " y=" + alg.name(y));
        }
      }
    }
  }
  return {};
}

inline verdict check_relation_property(menger_algebra const& alg, partition const& rel,
                                       relation_check check) {
  detail::require_same_carrier(alg, rel.size());
  switch (check.property) {
    case relation_property::stable:
    case relation_property::congruence: return check_stable(alg, rel);
    case relation_property::l_regular:
    case relation_property::l_congruence: return check_l_regular(alg, rel);
    case relation_property::v_regular:
    case relation_property::v_congruence: return check_v_regular(alg, rel);
    case relation_property::i_regular: return check_i_regular(alg, rel, check.slot);
    case relation_property::l_cancellative: return check_l_cancellative(alg, rel);
    case relation_property::v_cancellative: return check_v_cancellative(alg, rel);
    case relation_property::lv_cancellative: {
      auto l = check_l_cancellative(alg, rel);
      if (!l) return l;
      return check_v_cancellative(alg, rel);
    }
  }
  throw error(error_code::unknown_property, "unknown relation property");
}

inline verdict check_relation_property(menger_algebra const& alg, partition const& rel,
                                       std::string_view property) {
  return check_relation_property(alg, rel, parse_relation_property(property));
}

/// Partial v-cancellation with residue W; W must be empty or a block of rel.
inline verdict check_partially_v_cancellative(menger_algebra const& alg, partition const& rel,
                                              subset const& residue) {
  detail::require_same_carrier(alg, rel.size());
  detail::require_same_carrier(alg, residue.size());
  if (residue.any() && !rel.is_block(residue)) {
    throw error(error_code::not_a_block, "residue is not a block of the relation");
  }
  return check_slot_cancellation(alg, rel, residue);
}

/// (t(g1), t(g2)) ∈ ρ and t(g1) ∉ W ⇒ (g1,g2) ∈ ρ for every translation t.
/// Witness (t, g1, g2).
inline verdict check_partially_v_cancellative_by_translations(menger_algebra const& alg,
                                                              translation_closure const& closure,
                                                              partition const& rel,
                                                              subset const& residue) {
  for (std::size_t t = 0; t < closure.size(); ++t) {
    for (element x = 0; x < alg.size(); ++x) {
      element const tx = closure.apply(t, x);
      if (residue.test(tx)) continue;
      for (element y = 0; y < alg.size(); ++y) {
        if (!rel.related(x, y) && rel.related(tx, closure.apply(t, y))) {
          return detail::violation({t, x, y}, "t=" + format_term(alg, closure.witness(t)) +
                                                  " g1=" + alg.name(x) + " g2=" + alg.name(y));
        }
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Subset properties

namespace detail {

inline translation_closure const& require_closure(translation_closure const* closure) {
  if (closure == nullptr) {
    throw error(error_code::invalid_argument, "this property needs the translation closure");
  }
  return *closure;
}

/// g1, g2 ∈ H and t(g1) ∈ H ⇒ t(g2) ∈ H. Witness (g1, g2, t).
inline verdict normal_v_complex(menger_algebra const& alg, translation_closure const& closure,
                                subset const& h) {
  for (auto g1 : members(h)) {
    for (auto g2 : members(h)) {
      for (std::size_t t = 0; t < closure.size(); ++t) {
        if (h.test(closure.apply(t, g1)) && !h.test(closure.apply(t, g2))) {
          return violation({g1, g2, t}, "g1=" + alg.name(g1) + " g2=" + alg.name(g2) +
                                            " t=" + format_term(alg, closure.witness(t)));
        }
      }
    }
  }
  return {};
}

/// g1, g2 ∈ H and g1[x̄] ∈ H ⇒ g2[x̄] ∈ H over x̄ ∈ B. Witness (g1, g2, x̄).
inline verdict normal_l_complex(menger_algebra const& alg, subset const& h) {
  for (auto g1 : members(h)) {
    for (auto g2 : members(h)) {
      for (std::size_t x = 0; x < alg.arg_count(); ++x) {
        if (h.test(alg.apply_indexed(g1, x)) && !h.test(alg.apply_indexed(g2, x))) {
          return violation({g1, g2, x}, "g1=" + alg.name(g1) + " g2=" + alg.name(g2) +
                                            " x̄=" + arg_names(alg, x));
        }
      }
    }
  }
  return {};
}

/// g1, g2 ∈ H and t(g1[x̄]) ∈ H ⇒ t(g2[x̄]) ∈ H. Witness (g1, g2, t, x̄).
inline verdict normal_bicomplex(menger_algebra const& alg, translation_closure const& closure,
                                subset const& h) {
  for (auto g1 : members(h)) {
    for (auto g2 : members(h)) {
      for (std::size_t t = 0; t < closure.size(); ++t) {
        for (std::size_t x = 0; x < alg.arg_count(); ++x) {
          if (h.test(closure.apply(t, alg.apply_indexed(g1, x))) &&
              !h.test(closure.apply(t, alg.apply_indexed(g2, x)))) {
            return violation({g1, g2, t, x}, "g1=" + alg.name(g1) + " g2=" + alg.name(g2) +
                                                 " t=" + format_term(alg, closure.witness(t)) +
                                                 " x̄=" + arg_names(alg, x));
          }
        }
      }
    }
  }
  return {};
}

/// Some h_i ∈ H ⇒ x[h̄] ∈ H. Witness (x, h̄).
inline verdict l_ideal(menger_algebra const& alg, subset const& h) {
  std::vector<element> hs(alg.rank());
  for (element x = 0; x < alg.size(); ++x) {
    for (std::size_t r = 0; r < alg.tuple_count(); ++r) {
      alg.tuple_at(r, hs);
      bool const touches = std::any_of(hs.begin(), hs.end(), [&](element e) { return h.test(e); });
      if (touches && !h.test(alg.apply_indexed(x, 1 + r))) {
        return violation({x, r}, "x=" + alg.name(x) + " h̄=" + tuple_names(alg, r));
      }
    }
  }
  return {};
}

/// h ∈ H ⇒ u[w̄|_i h] ∈ H. Witness (h, u, w̄).
inline verdict i_ideal(menger_algebra const& alg, subset const& h, std::size_t slot) {
  if (slot >= alg.rank()) throw error(error_code::invalid_argument, "slot index out of range");
  auto const contexts = context_tuples(alg, slot);
  for (auto hh : members(h)) {
    for (element u = 0; u < alg.size(); ++u) {
      for (auto w : contexts) {
        if (!h.test(apply_slot_indexed(alg, u, w, slot, hh))) {
          return violation({hh, u, w}, "i=" + std::to_string(slot + 1) + " h=" + alg.name(hh) +
                                           " u=" + alg.name(u) + " w̄=" + tuple_names(alg, w));
        }
      }
    }
  }
  return {};
}

/// h ∈ H ⇒ h[x̄] ∈ H over x̄ ∈ G^n. Witness (h, x̄).
inline verdict s_ideal(menger_algebra const& alg, subset const& h) {
  for (auto hh : members(h)) {
    for (std::size_t r = 0; r < alg.tuple_count(); ++r) {
      if (!h.test(alg.apply_indexed(hh, 1 + r))) {
        return violation({hh, r}, "h=" + alg.name(hh) + " x̄=" + tuple_names(alg, r));
      }
    }
  }
  return {};
}

/// t(g) ∈ X ⇒ g ∈ X. Witness (g, t).
inline verdict l_consistent(menger_algebra const& alg, translation_closure const& closure,
                            subset const& x) {
  for (element g = 0; g < alg.size(); ++g) {
    if (x.test(g)) continue;
    for (std::size_t t = 0; t < closure.size(); ++t) {
      if (x.test(closure.apply(t, g))) {
        return violation({g, t}, "g=" + alg.name(g) + " t=" + format_term(alg, closure.witness(t)));
      }
    }
  }
  return {};
}

}  // namespace detail

inline verdict check_subset_property(menger_algebra const& alg, subset const& h,
                                     subset_check check,
                                     translation_closure const* closure = nullptr) {
  detail::require_same_carrier(alg, h.size());
  verdict v;
  switch (check.property) {
    case subset_property::normal_v_complex:
      v = detail::normal_v_complex(alg, detail::require_closure(closure), h);
      break;
    case subset_property::normal_l_complex: v = detail::normal_l_complex(alg, h); break;
    case subset_property::normal_bicomplex:
      v = detail::normal_bicomplex(alg, detail::require_closure(closure), h);
      break;
    case subset_property::l_ideal: v = detail::l_ideal(alg, h); break;
    case subset_property::i_ideal: v = detail::i_ideal(alg, h, check.slot); break;
    case subset_property::s_ideal: v = detail::s_ideal(alg, h); break;
    case subset_property::sl_ideal:
      v = detail::s_ideal(alg, h);
      if (v) v = detail::l_ideal(alg, h);
      break;
    case subset_property::l_consistent:
      v = detail::l_consistent(alg, detail::require_closure(closure), h);
      break;
  }
  if (v && h.none()) v.vacuous = true;
  return v;
}

inline verdict check_subset_property(menger_algebra const& alg, subset const& h,
                                     std::string_view property,
                                     translation_closure const* closure = nullptr) {
  return check_subset_property(alg, h, parse_subset_property(property), closure);
}

/// Intersection of equivalence relations over one carrier.
inline partition meet_partitions(std::span<partition const> parts) {
  if (parts.empty()) throw error(error_code::invalid_argument, "meet of an empty list");
  auto const m = parts.front().size();
  std::vector<std::vector<element>> keys(m);
  for (auto const& p : parts) {
    if (p.size() != m) throw error(error_code::invalid_argument, "partitions differ in size");
    for (element g = 0; g < m; ++g) keys[g].push_back(p.block_of(g));
  }
  return partition(keys);
}

}  // namespace menger
