#pragma once

// Exhaustive check of the structural statements about principal
// congruences, run over every subset and every enumerable relation of one
// algebra. Items are reported in a fixed order.

#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "menger/algebra.hpp"
#include "menger/enumerate.hpp"
#include "menger/parallel.hpp"
#include "menger/principal.hpp"
#include "menger/relations.hpp"
#include "menger/term.hpp"

namespace menger {

enum class item_status { pass, fail, skip };

inline char const* to_string(item_status s) noexcept {
  switch (s) {
    case item_status::pass: return "PASS";
    case item_status::fail: return "FAIL";
    case item_status::skip: return "SKIP";
  }
  return "?";
}

struct suite_item {
  std::string id;
  std::string statement;
  item_status status = item_status::pass;
  /// Instances where the premise held and the conclusion was checked.
  std::size_t cases = 0;
  std::string counterexample;

  void fail(std::string what) {
    if (status == item_status::fail) return;
    status = item_status::fail;
    counterexample = std::move(what);
  }
};

struct suite_report {
  std::vector<suite_item> items;

  bool ok() const {
    for (auto const& i : items) {
      if (i.status == item_status::fail) return false;
    }
    return true;
  }
};

struct suite_options {
  std::size_t threads = 1;
  std::uint64_t subset_cap = default_subset_cap;
  std::uint64_t partition_cap = 10'000;
  /// Applied to every principal analysis before the items run; testing only.
  std::function<void(principal_analysis&)> tamper;
};

namespace detail {

inline constexpr std::array<congruence_kind, 3> all_kinds{congruence_kind::v, congruence_kind::l,
                                                          congruence_kind::full};

struct subset_facts {
  subset h;
  std::array<principal_analysis, 3> analysis;
  std::array<std::array<bool, 3>, 3> strong{};  // [kind][method]
  std::array<bool, 3> normal{};                 // v-complex, l-complex, bicomplex
  bool l_ideal = false;
  bool s_ideal = false;
  bool l_consistent = false;

  principal_analysis const& of(congruence_kind k) const {
    return analysis[static_cast<std::size_t>(k)];
  }
  bool is_strong(congruence_kind k) const { return strong[static_cast<std::size_t>(k)][0]; }
};

inline std::uint64_t code_of(subset const& s) {
  std::uint64_t c = 0;
  for (auto g : members(s)) c |= std::uint64_t{1} << g;
  return c;
}

class suite_context {
 public:
  suite_context(menger_algebra const& alg, translation_closure const& closure,
                suite_options const& opt)
      : alg(alg), closure(closure), opt(opt) {
    auto const m = alg.size();
    subsets_ok = m < 63 && (std::uint64_t{1} << m) <= opt.subset_cap;
    partitions_ok = bell_number(m, opt.partition_cap) <= opt.partition_cap;
    if (subsets_ok) build_facts();
    if (partitions_ok) build_partitions();
  }

  subset_facts const& facts(subset const& s) const { return facts_[code_of(s)]; }
  std::vector<subset_facts> const& all_facts() const { return facts_; }

  menger_algebra const& alg;
  translation_closure const& closure;
  suite_options const& opt;
  bool subsets_ok = false;
  bool partitions_ok = false;
  std::vector<partition> partitions;
  std::array<std::vector<partition>, 3> congruences;
  std::vector<partition> l_cancellative_l_congruences;
  std::vector<partition> lv_cancellative_congruences;

  std::string name(subset const& s) const { return format_subset(alg, s); }
  std::string name(partition const& p) const { return format_partition(alg, p); }

 private:
  void build_facts() {
    auto const count = std::uint64_t{1} << alg.size();
    facts_.resize(count);
    parallel_for(count, opt.threads, [&](std::size_t code) {
      auto& f = facts_[code];
      f.h = subset_from_code(alg.size(), code);
      for (std::size_t k = 0; k < 3; ++k) {
        f.analysis[k] = analyze(all_kinds[k], alg, closure, f.h);
        if (opt.tamper) opt.tamper(f.analysis[k]);
        for (std::size_t method = 0; method < 3; ++method) {
          f.strong[k][method] = static_cast<bool>(
              is_strong_kind(all_kinds[k], alg, closure, f.h, static_cast<strong_method>(method)));
        }
      }
      auto flag = [&](subset_property p) {
        return static_cast<bool>(check_subset_property(alg, f.h, subset_check{p, 0}, &closure));
      };
      f.normal = {flag(subset_property::normal_v_complex),
                  flag(subset_property::normal_l_complex),
                  flag(subset_property::normal_bicomplex)};
      f.l_ideal = flag(subset_property::l_ideal);
      f.s_ideal = flag(subset_property::s_ideal);
      f.l_consistent = flag(subset_property::l_consistent);
    });
  }

  void build_partitions() {
    partitions = enumerate_partitions(alg.size(), opt.partition_cap);
    std::vector<std::array<bool, 5>> flags(partitions.size());
    parallel_for(partitions.size(), opt.threads, [&](std::size_t i) {
      auto const& p = partitions[i];
      bool const l_reg = static_cast<bool>(check_l_regular(alg, p));
      bool const v_reg = static_cast<bool>(check_v_regular(alg, p));
      bool const stable = static_cast<bool>(check_stable(alg, p));
      bool const l_can = static_cast<bool>(check_l_cancellative(alg, p));
      bool const v_can = static_cast<bool>(check_v_cancellative(alg, p));
      flags[i] = {v_reg, l_reg, stable, l_can, v_can};
    });
    for (std::size_t i = 0; i < partitions.size(); ++i) {
      auto const [v_reg, l_reg, stable, l_can, v_can] = flags[i];
      if (v_reg) congruences[0].push_back(partitions[i]);
      if (l_reg) congruences[1].push_back(partitions[i]);
      if (stable) congruences[2].push_back(partitions[i]);
      if (l_reg && l_can) l_cancellative_l_congruences.push_back(partitions[i]);
      if (stable && l_can && v_can) lv_cancellative_congruences.push_back(partitions[i]);
    }
  }

  std::vector<subset_facts> facts_;
};

using item_body = std::function<void(suite_context const&, suite_item&)>;

struct item_spec {
  std::string id;
  std::string statement;
  enum class needs { nothing, subsets, partitions } scope;
  item_body body;
};

inline std::size_t kind_index(congruence_kind k) { return static_cast<std::size_t>(k); }

inline char const* residue_name(congruence_kind k) {
  switch (k) {
    case congruence_kind::v: return "W_H";
    case congruence_kind::l: return "_HW";
    case congruence_kind::full: return "W^H";
  }
  return "?";
}

inline char const* relation_name(congruence_kind k) {
  switch (k) {
    case congruence_kind::v: return "R_H";
    case congruence_kind::l: return "L_H";
    case congruence_kind::full: return "P_H";
  }
  return "?";
}

// Equal-signature partition computed by comparing every pair directly.
inline partition pairwise_partition(menger_algebra const& alg, translation_closure const& closure,
                                    subset const& h, congruence_kind kind) {
  auto const m = alg.size();
  auto same = [&](element a, element b) {
    switch (kind) {
      case congruence_kind::v:
        for (std::size_t t = 0; t < closure.size(); ++t) {
          if (h.test(closure.apply(t, a)) != h.test(closure.apply(t, b))) return false;
        }
        return true;
      case congruence_kind::l:
        for (std::size_t x = 0; x < alg.arg_count(); ++x) {
          if (h.test(alg.apply_indexed(a, x)) != h.test(alg.apply_indexed(b, x))) return false;
        }
        return true;
      case congruence_kind::full:
        for (std::size_t x = 0; x < alg.arg_count(); ++x) {
          for (std::size_t t = 0; t < closure.size(); ++t) {
            if (h.test(closure.apply(t, alg.apply_indexed(a, x))) !=
                h.test(closure.apply(t, alg.apply_indexed(b, x)))) {
              return false;
            }
          }
        }
        return true;
    }
    return false;
  };
  std::vector<element> labels(m);
  for (element a = 0; a < m; ++a) {
    labels[a] = a;
    for (element b = 0; b < a; ++b) {
      if (same(a, b)) {
        labels[a] = b;
        break;
      }
    }
  }
  return partition(labels);
}

// ---------------------------------------------------------------------------
// Items shared by the three kinds

inline bool unsignatured(suite_context const& ctx, congruence_kind k, subset const& h, element g) {
  auto const& alg = ctx.alg;
  auto const& cl = ctx.closure;
  switch (k) {
    case congruence_kind::v:
      for (std::size_t t = 0; t < cl.size(); ++t) {
        if (h.test(cl.apply(t, g))) return false;
      }
      return true;
    case congruence_kind::l:
      for (std::size_t x = 0; x < alg.arg_count(); ++x) {
        if (h.test(alg.apply_indexed(g, x))) return false;
      }
      return true;
    case congruence_kind::full:
      for (std::size_t x = 0; x < alg.arg_count(); ++x) {
        for (std::size_t t = 0; t < cl.size(); ++t) {
          if (h.test(cl.apply(t, alg.apply_indexed(g, x)))) return false;
        }
      }
      return true;
  }
  return false;
}

inline item_body residue_item(congruence_kind k) {
  return [k](suite_context const& ctx, suite_item& item) {
    for (auto const& f : ctx.all_facts()) {
      auto const& a = f.of(k);
      ++item.cases;
      subset expected(ctx.alg.size());
      for (element g = 0; g < ctx.alg.size(); ++g) expected[g] = unsignatured(ctx, k, f.h, g);
      if (a.residue != expected) {
        item.fail("H=" + ctx.name(f.h) + ": " + residue_name(k) + "=" + ctx.name(a.residue) +
                  " but the elements with empty signature are " + ctx.name(expected));
      } else if (f.h.intersects(a.residue)) {
        item.fail("H=" + ctx.name(f.h) + " meets " + residue_name(k) + "=" + ctx.name(a.residue));
      } else if (a.residue.any() && !a.relation.is_block(a.residue)) {
        item.fail("H=" + ctx.name(f.h) + ": " + residue_name(k) + "=" + ctx.name(a.residue) +
                  " is not a class of " + ctx.name(a.relation));
      }
    }
  };
}

inline item_body meet_item(congruence_kind k) {
  return [k](suite_context const& ctx, suite_item& item) {
    for (auto const& eps : ctx.congruences[kind_index(k)]) {
      ++item.cases;
      std::vector<partition> parts;
      for (auto const& cls : eps.block_subsets()) parts.push_back(ctx.facts(cls).of(k).relation);
      auto const meet = meet_partitions(parts);
      if (meet != eps) {
        item.fail("ε=" + ctx.name(eps) + " but meet=" + ctx.name(meet));
      }
    }
  };
}

inline item_body methods_item(congruence_kind k) {
  return [k](suite_context const& ctx, suite_item& item) {
    for (auto const& f : ctx.all_facts()) {
      auto const& s = f.strong[kind_index(k)];
      ++item.cases;
      if (s[0] != s[1] || s[1] != s[2]) {
        item.fail(std::string("H=") + ctx.name(f.h) + ": methods a/b/c give " +
                  (s[0] ? "yes" : "no") + "/" + (s[1] ? "yes" : "no") + "/" +
                  (s[2] ? "yes" : "no"));
      }
    }
  };
}

// Nonempty H with the given property is a class other than the residue.
inline item_body class_item(congruence_kind k, bool (*premise)(subset_facts const&,
                                                               congruence_kind)) {
  return [k, premise](suite_context const& ctx, suite_item& item) {
    for (auto const& f : ctx.all_facts()) {
      if (f.h.none() || !premise(f, k)) continue;
      ++item.cases;
      auto const& a = f.of(k);
      if (!a.relation.is_block(f.h)) {
        item.fail("H=" + ctx.name(f.h) + " is not a class of " + ctx.name(a.relation));
      } else if (f.h == a.residue) {
        item.fail("H=" + ctx.name(f.h) + " equals " + residue_name(k));
      }
    }
  };
}

inline bool premise_normal(subset_facts const& f, congruence_kind k) {
  return f.normal[kind_index(k)];
}
inline bool premise_strong(subset_facts const& f, congruence_kind k) { return f.is_strong(k); }

inline item_body family_item(congruence_kind k) {
  return [k](suite_context const& ctx, suite_item& item) {
    for (auto const& f : ctx.all_facts()) {
      if (!f.is_strong(k)) continue;
      ++item.cases;
      auto const& a = f.of(k);
      auto const blocks = a.relation.block_subsets();
      std::set<subset> classes(blocks.begin(), blocks.end());
      std::set<subset> family;
      for (auto const& member : a.family) family.insert(member.members);
      if (classes != family) {
        std::string fam;
        for (auto const& s : family) fam += (fam.empty() ? "" : " ") + ctx.name(s);
        item.fail("H=" + ctx.name(f.h) + ": classes " + ctx.name(a.relation) + " but family " +
                  fam);
      }
    }
  };
}

inline item_body class_theorem_item(congruence_kind k) {
  return [k](suite_context const& ctx, suite_item& item) {
    for (auto const& f : ctx.all_facts()) {
      if (f.h.none() || !f.is_strong(k)) continue;
      auto const& a = f.of(k);
      for (auto const& x : a.relation.block_subsets()) {
        if (x == a.residue) continue;
        ++item.cases;
        auto const& fx = ctx.facts(x);
        std::vector<theorem_clause> clauses;
        class_clauses(ctx.alg, a, fx.of(k), fx.is_strong(k), clauses);
        for (auto const& c : clauses) {
          if (!c.pass) {
            item.fail("H=" + ctx.name(f.h) + " X=" + c.name +
                      (c.detail.empty() ? "" : " (" + c.detail + ")"));
          }
        }
      }
    }
  };
}

inline item_body fiber_item(congruence_kind k) {
  return [k](suite_context const& ctx, suite_item& item) {
    for (auto const& f : ctx.all_facts()) {
      if (!f.is_strong(k)) continue;
      for (auto const& member : f.of(k).family) {
        if (member.tag.residue) continue;
        ++item.cases;
        if (!ctx.facts(member.members).is_strong(k)) {
          item.fail("H=" + ctx.name(f.h) + ": fiber " + ctx.name(member.members) + " is not " +
                    strongness_name(k));
        }
      }
    }
  };
}

// Each class X of ε is strong in the sense of k, ε ⊆ relation(X), and both
// agree off residue(X).
inline item_body cancellative_classes_item(congruence_kind k,
                                           std::vector<partition> suite_context::*source) {
  return [k, source](suite_context const& ctx, suite_item& item) {
    for (auto const& eps : ctx.*source) {
      for (auto const& x : eps.block_subsets()) {
        ++item.cases;
        auto const& fx = ctx.facts(x);
        auto const& ax = fx.of(k);
        std::string const where = "ε=" + ctx.name(eps) + " X=" + ctx.name(x);
        if (!fx.is_strong(k)) {
          item.fail(where + " is not " + strongness_name(k));
        } else if (!eps.refines(ax.relation)) {
          item.fail(where + ": ε ⊄ " + ctx.name(ax.relation));
        } else if (!eps.agrees_on(ax.relation, ~ax.residue)) {
          item.fail(where + ": ε differs from " + ctx.name(ax.relation) + " off the residue");
        }
      }
    }
  };
}

// ---------------------------------------------------------------------------

inline std::vector<item_spec> suite_items() {
  using k = congruence_kind;
  using n = item_spec::needs;
  std::vector<item_spec> items;

  items.push_back({"R.regular", "v-regular iff i-regular for every i", n::partitions,
                   [](suite_context const& ctx, suite_item& item) {
                     for (auto const& p : ctx.partitions) {
                       ++item.cases;
                       bool const v = static_cast<bool>(check_v_regular(ctx.alg, p));
                       bool all = true;
                       for (std::size_t i = 0; i < ctx.alg.rank(); ++i) {
                         all = all && static_cast<bool>(check_i_regular(ctx.alg, p, i));
                       }
                       if (v != all) item.fail("partition " + ctx.name(p));
                     }
                   }});
  items.push_back({"R.stable", "stable iff l-regular and v-regular", n::partitions,
                   [](suite_context const& ctx, suite_item& item) {
                     for (auto const& p : ctx.partitions) {
                       ++item.cases;
                       bool const s = static_cast<bool>(check_stable(ctx.alg, p));
                       bool const lv = check_l_regular(ctx.alg, p) && check_v_regular(ctx.alg, p);
                       if (s != lv) item.fail("partition " + ctx.name(p));
                     }
                   }});
  items.push_back(
      {"R.cancel", "slot and translation forms of v-cancellation agree", n::partitions,
       [](suite_context const& ctx, suite_item& item) {
         for (auto const& p : ctx.partitions) {
           ++item.cases;
           bool const slot = static_cast<bool>(check_v_cancellative(ctx.alg, p));
           bool const trans =
               static_cast<bool>(check_v_cancellative_by_translations(ctx.alg, ctx.closure, p));
           if (slot != trans) item.fail("partition " + ctx.name(p));
         }
       }});
  items.push_back({"R.ideal", "l-ideal iff i-ideal for every i", n::subsets,
                   [](suite_context const& ctx, suite_item& item) {
                     for (auto const& f : ctx.all_facts()) {
                       ++item.cases;
                       bool all = true;
                       for (std::size_t i = 0; i < ctx.alg.rank(); ++i) {
                         all = all && static_cast<bool>(check_subset_property(
                                          ctx.alg, f.h,
                                          subset_check{subset_property::i_ideal, i}));
                       }
                       if (all != f.l_ideal) item.fail("H=" + ctx.name(f.h));
                     }
                   }});

  items.push_back(
      {"T.twist", "t^ā(g[ā]) = t(g)[ā]", n::nothing, [](suite_context const& ctx, suite_item& item) {
         auto const& alg = ctx.alg;
         for (std::size_t t = 0; t < ctx.closure.size(); ++t) {
           for (std::size_t a = 0; a < alg.arg_count(); ++a) {
             auto const twisted =
                 eval_term(alg, associate_polynomial(alg, ctx.closure.witness(t), alg.arg_at(a)));
             for (element g = 0; g < alg.size(); ++g) {
               ++item.cases;
               if (twisted(alg.apply_indexed(g, a)) != alg.apply_indexed(ctx.closure.apply(t, g), a)) {
                 item.fail("t=" + format_term(alg, ctx.closure.witness(t)) + " g=" + alg.name(g) +
                           " ā=" + arg_names(alg, a));
               }
             }
           }
         }
       }});
  items.push_back({"T.compose", "translations are closed under composition", n::nothing,
                   [](suite_context const& ctx, suite_item& item) {
                     auto const& c = ctx.closure;
                     for (std::size_t s = 0; s < c.size(); ++s) {
                       for (std::size_t t = 0; t < c.size(); ++t) {
                         ++item.cases;
                         if (!c.find(compose(c.table(s), c.table(t)))) {
                           item.fail(format_term(ctx.alg, c.witness(s)) + " after " +
                                     format_term(ctx.alg, c.witness(t)));
                         }
                       }
                     }
                   }});
  items.push_back(
      {"T.depth1", "every g ↦ u[w̄|_i g] is a translation", n::nothing,
       [](suite_context const& ctx, suite_item& item) {
         auto const& alg = ctx.alg;
         std::vector<element> w(alg.rank());
         for (element u = 0; u < alg.size(); ++u) {
           for (std::size_t r = 0; r < alg.tuple_count(); ++r) {
             alg.tuple_at(r, w);
             for (std::size_t i = 0; i < alg.rank(); ++i) {
               ++item.cases;
               std::vector<element> values(alg.size());
               for (element g = 0; g < alg.size(); ++g) values[g] = alg.apply_slot(u, w, i, g);
               if (!ctx.closure.find(translation_table(values))) {
                 item.fail("u=" + alg.name(u) + " w̄=" + tuple_names(alg, r) +
                           " i=" + std::to_string(i + 1));
               }
             }
           }
         }
       }});
  items.push_back({"T.roundtrip", "parsing a formatted witness gives the same translation",
                   n::nothing, [](suite_context const& ctx, suite_item& item) {
                     for (std::size_t t = 0; t < ctx.closure.size(); ++t) {
                       ++item.cases;
                       auto const text = format_term(ctx.alg, ctx.closure.witness(t));
                       if (eval_term(ctx.alg, parse_term(ctx.alg, text)) != ctx.closure.table(t)) {
                         item.fail(text);
                       }
                     }
                   }});

  items.push_back({"P2.residue", "W_H is the empty-signature set, disjoint from H and an R_H-class", n::subsets,
                   residue_item(k::v)});
  items.push_back({"P2.1", "R_H is a v-congruence", n::subsets,
                   [](suite_context const& ctx, suite_item& item) {
                     for (auto const& f : ctx.all_facts()) {
                       ++item.cases;
                       auto const v = check_v_regular(ctx.alg, f.of(k::v).relation);
                       if (!v) item.fail("H=" + ctx.name(f.h) + ": " + v.detail);
                     }
                   }});
  items.push_back({"P2.2", "nonempty W_H is an l-ideal", n::subsets,
                   [](suite_context const& ctx, suite_item& item) {
                     for (auto const& f : ctx.all_facts()) {
                       auto const& w = f.of(k::v).residue;
                       if (w.none()) continue;
                       ++item.cases;
                       if (!ctx.facts(w).l_ideal) {
                         item.fail("H=" + ctx.name(f.h) + " W_H=" + ctx.name(w));
                       }
                     }
                   }});
  items.push_back({"P2.3", "nonempty normal v-complex H is an R_H-class other than W_H",
                   n::subsets, class_item(k::v, premise_normal)});
  items.push_back({"P2.4", "every v-congruence is the meet of R_H over its classes",
                   n::partitions, meet_item(k::v)});
  items.push_back(
      {"P2.6", "each class of a v-congruence lies in one R_H-class, not W_H if some ρ_H⟨h⟩ ≠ ∅",
       n::partitions, [](suite_context const& ctx, suite_item& item) {
         for (auto const& eps : ctx.congruences[0]) {
           for (auto const& h : eps.block_subsets()) {
             ++item.cases;
             auto const& a = ctx.facts(h).of(k::v);
             auto const first = static_cast<element>(h.find_first());
             bool one_class = true;
             for (auto g : members(h)) one_class = one_class && a.relation.related(first, g);
             if (!one_class) {
               item.fail("ε=" + ctx.name(eps) + " H=" + ctx.name(h) + " splits in " +
                         ctx.name(a.relation));
             } else if (!h.is_subset_of(a.residue) && a.residue.test(first)) {
               item.fail("ε=" + ctx.name(eps) + " H=" + ctx.name(h) + " lies in W_H");
             }
           }
         }
       }});
  items.push_back({"P2.8", "strongness by signatures, implication and fibers agree", n::subsets,
                   methods_item(k::v)});
  items.push_back({"P2.9", "nonempty strong H is an R_H-class other than W_H", n::subsets,
                   class_item(k::v, premise_strong)});
  items.push_back({"P2.10", "for strong H the R_H-classes are the nonempty members of K",
                   n::subsets, family_item(k::v)});
  items.push_back({"P2.11", "classes of a strong H are strong with the stated inclusions",
                   n::subsets, class_theorem_item(k::v)});
  items.push_back({"P2.12", "fibers of a strong H are strong", n::subsets, fiber_item(k::v)});
  items.push_back({"P2.13", "strong l-ideal H has R_H = R_X for each R_H-class X ≠ W_H",
                   n::subsets, [](suite_context const& ctx, suite_item& item) {
                     for (auto const& f : ctx.all_facts()) {
                       if (!f.is_strong(k::v) || !f.l_ideal) continue;
                       auto const& a = f.of(k::v);
                       for (auto const& x : a.relation.block_subsets()) {
                         if (x == a.residue) continue;
                         ++item.cases;
                         auto const& ax = ctx.facts(x).of(k::v);
                         if (ax.relation != a.relation) {
                           item.fail("H=" + ctx.name(f.h) + " X=" + ctx.name(x) + ": R_X=" +
                                     ctx.name(ax.relation));
                         }
                       }
                     }
                   }});
  items.push_back(
      {"P2.14", "partial v-cancellation of R_H: slot and translation forms agree", n::subsets,
       [](suite_context const& ctx, suite_item& item) {
         for (auto const& f : ctx.all_facts()) {
           ++item.cases;
           auto const& a = f.of(k::v);
           bool const slot =
               static_cast<bool>(check_partially_v_cancellative(ctx.alg, a.relation, a.residue));
           bool const trans = static_cast<bool>(check_partially_v_cancellative_by_translations(
               ctx.alg, ctx.closure, a.relation, a.residue));
           if (slot != trans) item.fail("H=" + ctx.name(f.h));
         }
       }});
  items.push_back(
      {"P2.15",
       "nonempty H is strong iff signatures within H meet and R_H is partially v-cancellative",
       n::subsets, [](suite_context const& ctx, suite_item& item) {
         for (auto const& f : ctx.all_facts()) {
           if (f.h.none()) continue;
           ++item.cases;
           auto const sig = v_signatures(ctx.alg, ctx.closure, f.h);
           bool meet = true;
           for (auto h1 : members(f.h)) {
             for (auto h2 : members(f.h)) meet = meet && sig[h1].intersects(sig[h2]);
           }
           auto const& a = f.of(k::v);
           bool const partial =
               static_cast<bool>(check_partially_v_cancellative(ctx.alg, a.relation, a.residue));
           if (f.is_strong(k::v) != (meet && partial)) {
             item.fail("H=" + ctx.name(f.h) +
                       (f.is_strong(k::v) ? " is strong but" + std::string(meet ? "" : " (i)") +
                                                (partial ? "" : " (ii)") + " fails"
                                          : " satisfies (i) and (ii) but is not strong"));
           }
         }
       }});
  items.push_back({"P2.16", "for strong H, R_H is v-cancellative iff W_H is l-consistent",
                   n::subsets, [](suite_context const& ctx, suite_item& item) {
                     for (auto const& f : ctx.all_facts()) {
                       if (!f.is_strong(k::v)) continue;
                       ++item.cases;
                       auto const& a = f.of(k::v);
                       bool const cancel =
                           static_cast<bool>(check_v_cancellative(ctx.alg, a.relation));
                       if (cancel != ctx.facts(a.residue).l_consistent) {
                         item.fail("H=" + ctx.name(f.h) + " W_H=" + ctx.name(a.residue));
                       }
                     }
                   }});

  items.push_back({"P3.residue", "_HW is the empty-signature set, disjoint from H and an L_H-class", n::subsets,
                   residue_item(k::l)});
  items.push_back({"P3.1", "L_H is an l-congruence; nonempty _HW is an s-ideal", n::subsets,
                   [](suite_context const& ctx, suite_item& item) {
                     for (auto const& f : ctx.all_facts()) {
                       ++item.cases;
                       auto const& a = f.of(k::l);
                       auto const v = check_l_regular(ctx.alg, a.relation);
                       if (!v) item.fail("H=" + ctx.name(f.h) + ": " + v.detail);
                       if (a.residue.any() && !ctx.facts(a.residue).s_ideal) {
                         item.fail("H=" + ctx.name(f.h) + " _HW=" + ctx.name(a.residue));
                       }
                     }
                   }});
  items.push_back({"P3.2", "every l-congruence is the meet of L_H over its classes",
                   n::partitions, meet_item(k::l)});
  items.push_back({"P3.4", "l-strongness by signatures, implication and fibers agree",
                   n::subsets, methods_item(k::l)});
  items.push_back({"P3.5", "nonempty normal l-complex H is an L_H-class other than _HW",
                   n::subsets, class_item(k::l, premise_normal)});
  items.push_back({"P3.6", "nonempty l-strong H is an L_H-class other than _HW", n::subsets,
                   class_item(k::l, premise_strong)});
  items.push_back({"P3.7", "for l-strong H the L_H-classes are the nonempty members of E",
                   n::subsets, family_item(k::l)});
  items.push_back({"P3.8", "classes of an l-strong H are l-strong with the stated inclusions",
                   n::subsets, class_theorem_item(k::l)});
  items.push_back({"P3.9", "fibers of an l-strong H are l-strong", n::subsets, fiber_item(k::l)});
  items.push_back(
      {"P3.10", "classes of an l-cancellative l-congruence ε are l-strong, ε ⊆ L_X, equal off _XW",
       n::partitions,
       cancellative_classes_item(k::l, &suite_context::l_cancellative_l_congruences)});

  items.push_back({"P4.residue", "W^H is the empty-signature set, disjoint from H and a P_H-class", n::subsets,
                   residue_item(k::full)});
  items.push_back({"P4.1", "P_H is a congruence; nonempty W^H is an sl-ideal", n::subsets,
                   [](suite_context const& ctx, suite_item& item) {
                     for (auto const& f : ctx.all_facts()) {
                       ++item.cases;
                       auto const& a = f.of(k::full);
                       auto const v = check_stable(ctx.alg, a.relation);
                       if (!v) item.fail("H=" + ctx.name(f.h) + ": " + v.detail);
                       auto const& fw = ctx.facts(a.residue);
                       if (a.residue.any() && !(fw.s_ideal && fw.l_ideal)) {
                         item.fail("H=" + ctx.name(f.h) + " W^H=" + ctx.name(a.residue));
                       }
                     }
                   }});
  items.push_back({"P4.2", "every congruence is the meet of P_H over its classes", n::partitions,
                   meet_item(k::full)});
  items.push_back({"P4.4", "bistrongness by signatures, implication and fibers agree",
                   n::subsets, methods_item(k::full)});
  items.push_back({"P4.5", "nonempty normal bicomplex H is a P_H-class other than W^H",
                   n::subsets, class_item(k::full, premise_normal)});
  items.push_back({"P4.6", "nonempty bistrong H is a P_H-class other than W^H", n::subsets,
                   class_item(k::full, premise_strong)});
  items.push_back({"P4.7", "for bistrong H the P_H-classes are the nonempty members of D",
                   n::subsets, family_item(k::full)});
  items.push_back({"P4.8", "classes of a bistrong H are bistrong with the stated inclusions",
                   n::subsets, class_theorem_item(k::full)});
  items.push_back({"P4.9", "fibers of a bistrong H are bistrong", n::subsets, fiber_item(k::full)});
  items.push_back(
      {"P4.10", "classes of an lv-cancellative congruence ε are bistrong, ε ⊆ P_X, equal off W^X",
       n::partitions,
       cancellative_classes_item(k::full, &suite_context::lv_cancellative_congruences)});

  items.push_back({"P.pairwise", "signature partitions equal pairwise-test partitions",
                   n::subsets, [](suite_context const& ctx, suite_item& item) {
                     for (auto const& f : ctx.all_facts()) {
                       for (auto kind : all_kinds) {
                         ++item.cases;
                         auto const direct = pairwise_partition(ctx.alg, ctx.closure, f.h, kind);
                         if (direct != f.of(kind).relation) {
                           item.fail("H=" + ctx.name(f.h) + " " + relation_name(kind) + "=" +
                                     ctx.name(f.of(kind).relation) + " but pairwise " +
                                     ctx.name(direct));
                         }
                       }
                     }
                   }});
  return items;
}

}  // namespace detail

/// Identifiers of all suite items in report order.
inline std::vector<std::string> suite_item_ids() {
  std::vector<std::string> out;
  for (auto const& spec : detail::suite_items()) out.push_back(spec.id);
  return out;
}

inline suite_report run_paper_suite(menger_algebra const& alg, translation_closure const& closure,
                                    suite_options const& options = {}) {
  detail::suite_context const ctx(alg, closure, options);
  auto const specs = detail::suite_items();
  suite_report report;
  report.items.resize(specs.size());
  parallel_for(specs.size(), options.threads, [&](std::size_t i) {
    auto const& spec = specs[i];
    auto& item = report.items[i];
    item.id = spec.id;
    item.statement = spec.statement;
    using n = detail::item_spec::needs;
    if ((spec.scope == n::subsets || spec.scope == n::partitions) && !ctx.subsets_ok) {
      item.status = item_status::skip;
      item.counterexample = "subset count exceeds cap";
      return;
    }
    if (spec.scope == n::partitions && !ctx.partitions_ok) {
      item.status = item_status::skip;
      item.counterexample = "partition count exceeds cap";
      return;
    }
    try {
      spec.body(ctx, item);
    } catch (std::exception const& e) {
      item.fail(std::string("exception: ") + e.what());
    }
  });
  return report;
}

}  // namespace menger
