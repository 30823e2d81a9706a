#pragma once

/**
 * @file principal.hpp
 * @brief Principal v-, l- and full congruences induced by a subset H.
 *
 * For a subset H each element g gets a signature:
 *
 *   v:    {t ∈ T       : t(g) ∈ H}         bit t
 *   l:    {x̄ ∈ B       : g[x̄] ∈ H}        bit x̄ (B index, ē = 0)
 *   full: {(x̄,t) ∈ B×T : t(g[x̄]) ∈ H}     bit x̄ * |T| + t
 *
 * Elements with equal signatures form one class of R_H, L_H or P_H; the
 * elements with empty signature form the residue (W_H, _HW or W^H).
 * Translations are taken from the deduplicated table closure; every
 * membership test depends on t only through its values.
 *
 * An empty H is accepted: every signature is empty, the relation is
 * universal and the residue is all of G.
 */

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "menger/algebra.hpp"
#include "menger/relations.hpp"
#include "menger/term.hpp"

namespace menger {

enum class congruence_kind { v, l, full };

inline char const* to_string(congruence_kind kind) noexcept {
  switch (kind) {
    case congruence_kind::v: return "v";
    case congruence_kind::l: return "l";
    case congruence_kind::full: return "full";
  }
  return "?";
}

inline char const* strongness_name(congruence_kind kind) noexcept {
  switch (kind) {
    case congruence_kind::v: return "strong";
    case congruence_kind::l: return "l-strong";
    case congruence_kind::full: return "bistrong";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Signatures and fibers

inline std::vector<mask> v_signatures(menger_algebra const& alg,
                                      translation_closure const& closure, subset const& h) {
  std::vector<mask> sig(alg.size(), mask(closure.size()));
  for (element g = 0; g < alg.size(); ++g) {
    for (std::size_t t = 0; t < closure.size(); ++t) {
      if (h.test(closure.apply(t, g))) sig[g].set(t);
    }
  }
  return sig;
}

inline std::vector<mask> l_signatures(menger_algebra const& alg, subset const& h) {
  std::vector<mask> sig(alg.size(), mask(alg.arg_count()));
  for (element g = 0; g < alg.size(); ++g) {
    for (std::size_t x = 0; x < alg.arg_count(); ++x) {
      if (h.test(alg.apply_indexed(g, x))) sig[g].set(x);
    }
  }
  return sig;
}

inline std::vector<mask> bi_signatures(menger_algebra const& alg,
                                       translation_closure const& closure, subset const& h) {
  auto const ts = closure.size();
  std::vector<mask> sig(alg.size(), mask(alg.arg_count() * ts));
  for (element g = 0; g < alg.size(); ++g) {
    for (std::size_t x = 0; x < alg.arg_count(); ++x) {
      element const gx = alg.apply_indexed(g, x);
      for (std::size_t t = 0; t < ts; ++t) {
        if (h.test(closure.apply(t, gx))) sig[g].set(x * ts + t);
      }
    }
  }
  return sig;
}

/// ρ°_H⟨t⟩ = {a : t(a) ∈ H}.
inline subset v_fiber(menger_algebra const& alg, translation_closure const& closure,
                      subset const& h, std::size_t t) {
  subset out(alg.size());
  for (element a = 0; a < alg.size(); ++a) {
    if (h.test(closure.apply(t, a))) out.set(a);
  }
  return out;
}

/// η°_H⟨x̄⟩ = {g : g[x̄] ∈ H}.
inline subset l_fiber(menger_algebra const& alg, subset const& h, std::size_t x) {
  subset out(alg.size());
  for (element g = 0; g < alg.size(); ++g) {
    if (h.test(alg.apply_indexed(g, x))) out.set(g);
  }
  return out;
}

/// σ°_H⟨x̄,t⟩ = {g : t(g[x̄]) ∈ H}.
inline subset bi_fiber(menger_algebra const& alg, translation_closure const& closure,
                       subset const& h, std::size_t x, std::size_t t) {
  subset out(alg.size());
  for (element g = 0; g < alg.size(); ++g) {
    if (h.test(closure.apply(t, alg.apply_indexed(g, x)))) out.set(g);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Analyses

/// Which t, x̄ or (x̄,t) first produced a family member; `residue` marks
/// the residue itself.
struct family_tag {
  bool residue = false;
  std::optional<std::size_t> arg;
  std::optional<std::size_t> translation;

  bool operator==(family_tag const&) const = default;
};

struct family_member {
  subset members;
  family_tag tag;

  bool operator==(family_member const&) const = default;
};

struct principal_analysis {
  congruence_kind kind = congruence_kind::v;
  subset h;
  partition relation;
  subset residue;
  /// R*_H: the relation restricted to elements outside the residue; v only.
  std::optional<partial_partition> partial;
  /// Distinct nonempty fibers in canonical tag order, then the residue if
  /// nonempty (the families K, E and D).
  std::vector<family_member> family;

  bool h_empty() const { return h.none(); }
};

namespace detail {

inline void finish_analysis(principal_analysis& out, std::vector<mask> const& signatures) {
  auto const m = signatures.size();
  out.relation = partition(signatures);
  out.residue = subset(m);
  for (element g = 0; g < m; ++g) {
    if (signatures[g].none()) out.residue.set(g);
  }
}

inline void push_fiber(std::vector<family_member>& family, std::set<subset>& seen, subset fiber,
                       family_tag tag) {
  if (fiber.none() || !seen.insert(fiber).second) return;
  family.push_back({std::move(fiber), std::move(tag)});
}

inline void push_residue(principal_analysis& out) {
  if (out.residue.any()) out.family.push_back({out.residue, family_tag{true, {}, {}}});
}

}  // namespace detail

inline principal_analysis v_analysis(menger_algebra const& alg,
                                     translation_closure const& closure, subset const& h) {
  detail::require_same_carrier(alg, h.size());
  principal_analysis out;
  out.kind = congruence_kind::v;
  out.h = h;
  detail::finish_analysis(out, v_signatures(alg, closure, h));
  out.partial = partial_partition(out.relation, ~out.residue);
  std::set<subset> seen;
  for (std::size_t t = 0; t < closure.size(); ++t) {
    detail::push_fiber(out.family, seen, v_fiber(alg, closure, h, t), family_tag{false, {}, t});
  }
  detail::push_residue(out);
  return out;
}

inline principal_analysis l_analysis(menger_algebra const& alg, subset const& h) {
  detail::require_same_carrier(alg, h.size());
  principal_analysis out;
  out.kind = congruence_kind::l;
  out.h = h;
  detail::finish_analysis(out, l_signatures(alg, h));
  std::set<subset> seen;
  for (std::size_t x = 0; x < alg.arg_count(); ++x) {
    detail::push_fiber(out.family, seen, l_fiber(alg, h, x), family_tag{false, x, {}});
  }
  detail::push_residue(out);
  return out;
}

inline principal_analysis full_analysis(menger_algebra const& alg,
                                        translation_closure const& closure, subset const& h) {
  detail::require_same_carrier(alg, h.size());
  principal_analysis out;
  out.kind = congruence_kind::full;
  out.h = h;
  detail::finish_analysis(out, bi_signatures(alg, closure, h));
  std::set<subset> seen;
  for (std::size_t x = 0; x < alg.arg_count(); ++x) {
    for (std::size_t t = 0; t < closure.size(); ++t) {
      detail::push_fiber(out.family, seen, bi_fiber(alg, closure, h, x, t),
                         family_tag{false, x, t});
    }
  }
  detail::push_residue(out);
  return out;
}

inline principal_analysis analyze(congruence_kind kind, menger_algebra const& alg,
                                  translation_closure const& closure, subset const& h) {
  switch (kind) {
    case congruence_kind::v: return v_analysis(alg, closure, h);
    case congruence_kind::l: return l_analysis(alg, h);
    case congruence_kind::full: return full_analysis(alg, closure, h);
  }
  throw error(error_code::invalid_argument, "unknown congruence kind");
}

// ---------------------------------------------------------------------------
// Strong, l-strong and bistrong subsets
//
// Method a compares signatures pairwise, method b checks the four-membership
// implication directly on the algebra, method c compares fibers pairwise.
// The three are computed independently of each other.

enum class strong_method { a, b, c };

namespace detail {

// Signatures that meet must coincide. Witness (a, b, shared bit, differing
// bit).
inline verdict signatures_disjoint_or_equal(std::vector<mask> const& sig,
                                            menger_algebra const& alg,
                                            std::string (*bit_name)(menger_algebra const&,
                                                                    translation_closure const*,
                                                                    std::size_t),
                                            translation_closure const* closure) {
  for (element a = 0; a < sig.size(); ++a) {
    for (element b = a + 1; b < sig.size(); ++b) {
      if (!sig[a].intersects(sig[b]) || sig[a] == sig[b]) continue;
      auto const shared = (sig[a] & sig[b]).find_first();
      auto const differ = (sig[a] ^ sig[b]).find_first();
      return violation({a, b, shared, differ},
                       "a=" + alg.name(a) + " b=" + alg.name(b) + " shared " +
                           bit_name(alg, closure, shared) + " but " +
                           bit_name(alg, closure, differ) + " distinguishes them");
    }
  }
  return {};
}

inline std::string translation_bit(menger_algebra const& alg, translation_closure const* closure,
                                   std::size_t t) {
  return "t=" + format_term(alg, closure->witness(t));
}

inline std::string arg_bit(menger_algebra const& alg, translation_closure const*, std::size_t x) {
  return "x̄=" + arg_names(alg, x);
}

inline std::string pair_bit(menger_algebra const& alg, translation_closure const* closure,
                            std::size_t bit) {
  return "(x̄,t)=(" + arg_names(alg, bit / closure->size()) + "," +
         format_term(alg, closure->witness(bit % closure->size())) + ")";
}

// Distinct fibers that meet must coincide; fibers listed with their first
// tag. Witness (tag of first, tag of second).
template <typename Tag, typename Render>
verdict fibers_disjoint_or_equal(std::vector<std::pair<subset, Tag>> const& fibers,
                                 Render&& render) {
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    for (std::size_t j = i + 1; j < fibers.size(); ++j) {
      auto const& [fi, ti] = fibers[i];
      auto const& [fj, tj] = fibers[j];
      if (fi.intersects(fj) && fi != fj) {
        std::vector<std::size_t> witness;
        for (auto v : ti) witness.push_back(v);
        for (auto v : tj) witness.push_back(v);
        return violation(std::move(witness),
                         "fibers of " + render(ti) + " and " + render(tj) + " meet but differ");
      }
    }
  }
  return {};
}

template <typename Tag>
void add_distinct(std::vector<std::pair<subset, Tag>>& fibers, std::set<subset>& seen,
                  subset fiber, Tag tag) {
  if (seen.insert(fiber).second) fibers.emplace_back(std::move(fiber), std::move(tag));
}

}  // namespace detail

inline verdict is_strong(menger_algebra const& alg, translation_closure const& closure,
                         subset const& h, strong_method method) {
  detail::require_same_carrier(alg, h.size());
  auto const ts = closure.size();
  switch (method) {
    case strong_method::a:
      return detail::signatures_disjoint_or_equal(v_signatures(alg, closure, h), alg,
                                                  detail::translation_bit, &closure);
    case strong_method::b:
      // t1(x), t1(y), t2(y) ∈ H ⇒ t2(x) ∈ H; the t1 premise is independent
      // of t2, so it is searched once per (x, y). Witness (x, y, t1, t2).
      for (element x = 0; x < alg.size(); ++x) {
        for (element y = 0; y < alg.size(); ++y) {
          std::optional<std::size_t> t1;
          for (std::size_t t = 0; t < ts && !t1; ++t) {
            if (h.test(closure.apply(t, x)) && h.test(closure.apply(t, y))) t1 = t;
          }
          if (!t1) continue;
          for (std::size_t t2 = 0; t2 < ts; ++t2) {
            if (h.test(closure.apply(t2, y)) && !h.test(closure.apply(t2, x))) {
              return detail::violation(
                  {x, y, *t1, t2}, "x=" + alg.name(x) + " y=" + alg.name(y) +
                                       " t1=" + format_term(alg, closure.witness(*t1)) +
                                       " t2=" + format_term(alg, closure.witness(t2)));
            }
          }
        }
      }
      return {};
    case strong_method::c: {
      std::vector<std::pair<subset, std::array<std::size_t, 1>>> fibers;
      std::set<subset> seen;
      for (std::size_t t = 0; t < ts; ++t) {
        detail::add_distinct(fibers, seen, v_fiber(alg, closure, h, t), std::array{t});
      }
      return detail::fibers_disjoint_or_equal(fibers, [&](auto const& tag) {
        return "t=" + format_term(alg, closure.witness(tag[0]));
      });
    }
  }
  throw error(error_code::invalid_argument, "unknown method");
}

inline verdict is_l_strong(menger_algebra const& alg, subset const& h, strong_method method) {
  detail::require_same_carrier(alg, h.size());
  auto const bs = alg.arg_count();
  switch (method) {
    case strong_method::a:
      return detail::signatures_disjoint_or_equal(l_signatures(alg, h), alg, detail::arg_bit,
                                                  nullptr);
    case strong_method::b:
      // g1[x̄], g2[x̄], g2[ȳ] ∈ H ⇒ g1[ȳ] ∈ H. Witness (g1, g2, x̄, ȳ).
      for (element g1 = 0; g1 < alg.size(); ++g1) {
        for (element g2 = 0; g2 < alg.size(); ++g2) {
          std::optional<std::size_t> xs;
          for (std::size_t x = 0; x < bs && !xs; ++x) {
            if (h.test(alg.apply_indexed(g1, x)) && h.test(alg.apply_indexed(g2, x))) xs = x;
          }
          if (!xs) continue;
          for (std::size_t y = 0; y < bs; ++y) {
            if (h.test(alg.apply_indexed(g2, y)) && !h.test(alg.apply_indexed(g1, y))) {
              return detail::violation({g1, g2, *xs, y},
                                       "g1=" + alg.name(g1) + " g2=" + alg.name(g2) +
                                           " x̄=" + detail::arg_names(alg, *xs) +
                                           " ȳ=" + detail::arg_names(alg, y));
            }
          }
        }
      }
      return {};
    case strong_method::c: {
      std::vector<std::pair<subset, std::array<std::size_t, 1>>> fibers;
      std::set<subset> seen;
      for (std::size_t x = 0; x < bs; ++x) {
        detail::add_distinct(fibers, seen, l_fiber(alg, h, x), std::array{x});
      }
      return detail::fibers_disjoint_or_equal(
          fibers, [&](auto const& tag) { return "x̄=" + detail::arg_names(alg, tag[0]); });
    }
  }
  throw error(error_code::invalid_argument, "unknown method");
}

inline verdict is_bistrong(menger_algebra const& alg, translation_closure const& closure,
                           subset const& h, strong_method method) {
  detail::require_same_carrier(alg, h.size());
  auto const bs = alg.arg_count();
  auto const ts = closure.size();
  switch (method) {
    case strong_method::a:
      return detail::signatures_disjoint_or_equal(bi_signatures(alg, closure, h), alg,
                                                  detail::pair_bit, &closure);
    case strong_method::b:
      // t1(g1[x̄]), t1(g2[x̄]), t2(g2[ȳ]) ∈ H ⇒ t2(g1[ȳ]) ∈ H.
      // Witness (g1, g2, x̄, t1, ȳ, t2).
      for (element g1 = 0; g1 < alg.size(); ++g1) {
        for (element g2 = 0; g2 < alg.size(); ++g2) {
          std::optional<std::pair<std::size_t, std::size_t>> premise;
          for (std::size_t x = 0; x < bs && !premise; ++x) {
            element const a = alg.apply_indexed(g1, x);
            element const b = alg.apply_indexed(g2, x);
            for (std::size_t t = 0; t < ts; ++t) {
              if (h.test(closure.apply(t, a)) && h.test(closure.apply(t, b))) {
                premise = std::pair{x, t};
                break;
              }
            }
          }
          if (!premise) continue;
          for (std::size_t y = 0; y < bs; ++y) {
            element const a = alg.apply_indexed(g1, y);
            element const b = alg.apply_indexed(g2, y);
            for (std::size_t t2 = 0; t2 < ts; ++t2) {
              if (h.test(closure.apply(t2, b)) && !h.test(closure.apply(t2, a))) {
                auto const [x, t1] = *premise;
                return detail::violation(
                    {g1, g2, x, t1, y, t2},
                    "g1=" + alg.name(g1) + " g2=" + alg.name(g2) +
                        " x̄=" + detail::arg_names(alg, x) +
                        " t1=" + format_term(alg, closure.witness(t1)) +
                        " ȳ=" + detail::arg_names(alg, y) +
                        " t2=" + format_term(alg, closure.witness(t2)));
              }
            }
          }
        }
      }
      return {};
    case strong_method::c: {
      std::vector<std::pair<subset, std::array<std::size_t, 2>>> fibers;
      std::set<subset> seen;
      for (std::size_t x = 0; x < bs; ++x) {
        for (std::size_t t = 0; t < ts; ++t) {
          detail::add_distinct(fibers, seen, bi_fiber(alg, closure, h, x, t), std::array{x, t});
        }
      }
      return detail::fibers_disjoint_or_equal(fibers, [&](auto const& tag) {
        return "(x̄,t)=(" + detail::arg_names(alg, tag[0]) + "," +
               format_term(alg, closure.witness(tag[1])) + ")";
      });
    }
  }
  throw error(error_code::invalid_argument, "unknown method");
}

inline verdict is_strong_kind(congruence_kind kind, menger_algebra const& alg,
                              translation_closure const& closure, subset const& h,
                              strong_method method = strong_method::a) {
  switch (kind) {
    case congruence_kind::v: return is_strong(alg, closure, h, method);
    case congruence_kind::l: return is_l_strong(alg, h, method);
    case congruence_kind::full: return is_bistrong(alg, closure, h, method);
  }
  throw error(error_code::invalid_argument, "unknown congruence kind");
}

// ---------------------------------------------------------------------------
// Class theorems: for strong H and a class X other than the residue, X is
// strong, residue(H) ⊆ residue(X), relation(H) ⊆ relation(X), and both
// relations agree outside residue(X).

struct theorem_clause {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct class_theorem_report {
  bool precondition_met = true;
  std::string precondition_detail;
  std::vector<theorem_clause> clauses;

  bool ok() const {
    if (!precondition_met) return false;
    for (auto const& c : clauses) {
      if (!c.pass) return false;
    }
    return true;
  }
};

inline std::string format_subset(menger_algebra const& alg, subset const& s) {
  std::string out = "{";
  bool first = true;
  for (auto g : members(s)) {
    out += (first ? "" : " ") + alg.name(g);
    first = false;
  }
  return out + "}";
}

inline std::string format_partition(menger_algebra const& alg, partition const& p) {
  std::string out;
  for (auto const& block : p.block_subsets()) {
    if (!out.empty()) out += ' ';
    out += format_subset(alg, block);
  }
  return out;
}

namespace detail {

inline void class_clauses(menger_algebra const& alg, principal_analysis const& of_h,
                          principal_analysis const& of_x, bool x_strong,
                          std::vector<theorem_clause>& out) {
  auto const label = format_subset(alg, of_x.h);
  auto const strong = strongness_name(of_h.kind);
  out.push_back({label + " " + strong, x_strong, ""});
  bool const residue_inclusion = of_h.residue.is_subset_of(of_x.residue);
  out.push_back({label + " residue(H) ⊆ residue(X)", residue_inclusion,
                 residue_inclusion ? "" : format_subset(alg, of_h.residue) + " ⊄ " +
                                              format_subset(alg, of_x.residue)});
  out.push_back({label + " relation(H) ⊆ relation(X)", of_h.relation.refines(of_x.relation), ""});
  out.push_back({label + " relations agree off residue(X)",
                 of_h.relation.agrees_on(of_x.relation, ~of_x.residue), ""});
}

}  // namespace detail

inline class_theorem_report check_strong_class_theorems(menger_algebra const& alg,
                                                        translation_closure const& closure,
                                                        subset const& h, congruence_kind kind) {
  class_theorem_report report;
  if (h.none()) {
    report.precondition_met = false;
    report.precondition_detail = "H is empty";
    return report;
  }
  if (auto v = is_strong_kind(kind, alg, closure, h); !v) {
    report.precondition_met = false;
    report.precondition_detail = std::string("H is not ") + strongness_name(kind) + ": " + v.detail;
    return report;
  }
  auto const of_h = analyze(kind, alg, closure, h);
  for (auto const& x : of_h.relation.block_subsets()) {
    if (x == of_h.residue) continue;
    auto const of_x = analyze(kind, alg, closure, x);
    bool const x_strong = static_cast<bool>(is_strong_kind(kind, alg, closure, x));
    detail::class_clauses(alg, of_h, of_x, x_strong, report.clauses);
  }
  return report;
}

}  // namespace menger
