#include <catch_amalgamated.hpp>

#include "menger/corpus.hpp"
#include "menger/enumerate.hpp"
#include "menger/principal.hpp"
#include "oracles.hpp"

using namespace menger;

namespace {

subset just(std::size_t m, element g) { return make_subset(m, {g}); }

}  // namespace

TEST_CASE("v-analysis examples", "[principal]") {
  auto const r = rz2();
  auto const rc = make_translation_closure(r);
  auto const a = v_analysis(r, rc, just(2, 0));
  CHECK(a.relation == partition::identity(2));
  CHECK(a.residue == just(2, 1));
  REQUIRE(a.partial);
  CHECK(a.partial->blocks() == std::vector<std::vector<element>>{{0}});
  REQUIRE(a.family.size() == 2);
  CHECK(a.family[0].members == just(2, 0));
  CHECK(a.family[0].tag.translation == 0u);
  CHECK(a.family[1].tag.residue);

  auto const l = lz2();
  auto const lc = make_translation_closure(l);
  auto const b = v_analysis(l, lc, just(2, 0));
  CHECK(b.relation == partition::identity(2));
  CHECK(b.residue.none());
  auto const sig = v_signatures(l, lc, just(2, 0));
  CHECK(sig[0].count() == 2);  // x, a[x]
  CHECK(sig[1].count() == 1);  // a[x]
  CHECK(sig[1].test(1));
}

TEST_CASE("l-analysis examples", "[principal]") {
  auto const l = l_analysis(lz2(), just(2, 0));
  CHECK(l.relation == partition::identity(2));
  CHECK(l.residue == just(2, 1));
  auto const sig = l_signatures(lz2(), just(2, 0));
  CHECK(sig[0].all());
  CHECK(sig[1].none());

  auto const r = l_analysis(rz2(), just(2, 0));
  CHECK(r.relation == partition::identity(2));
  CHECK(r.residue.none());
  auto const rs = l_signatures(rz2(), just(2, 0));
  CHECK(rs[0].test(0));
  CHECK(rs[0].test(1));
  CHECK_FALSE(rs[1].test(0));
  CHECK(rs[1].test(1));
}

TEST_CASE("full analysis examples", "[principal]") {
  auto const r = rz2();
  auto const rc = make_translation_closure(r);
  auto const a = full_analysis(r, rc, just(2, 0));
  CHECK(a.relation == partition::identity(2));
  CHECK(a.residue.none());
  CHECK_FALSE(a.partial);
  auto const sig = bi_signatures(r, rc, just(2, 0));
  CHECK(sig[0].count() == 2);
  CHECK(sig[1].count() == 1);
  CHECK(sig[1].test(1));  // ((a), id)

  auto const l = lz2();
  auto const b = full_analysis(l, make_translation_closure(l), just(2, 0));
  CHECK(b.relation == partition::identity(2));
  CHECK(b.residue.none());
}

TEST_CASE("H = G and H = ∅", "[principal]") {
  for (auto const& e : standard_corpus()) {
    auto const& alg = e.algebra;
    if (alg.size() > 4) continue;
    auto const cl = make_translation_closure(alg);
    auto const all = ~subset(alg.size());
    auto const none = subset(alg.size());
    for (auto kind : {congruence_kind::v, congruence_kind::l, congruence_kind::full}) {
      auto const a = analyze(kind, alg, cl, all);
      CHECK(a.relation == partition::universal(alg.size()));
      CHECK(a.residue.none());
      auto const z = analyze(kind, alg, cl, none);
      CHECK(z.h_empty());
      CHECK(z.relation == partition::universal(alg.size()));
      CHECK(z.residue == all);
      for (auto method : {strong_method::a, strong_method::b, strong_method::c}) {
        CHECK(is_strong_kind(kind, alg, cl, none, method));
        CHECK(is_strong_kind(kind, alg, cl, all, method));
      }
    }
  }
}

TEST_CASE("strongness examples and witnesses", "[principal]") {
  auto const r = rz2();
  auto const rc = make_translation_closure(r);
  auto const l = lz2();
  auto const lc = make_translation_closure(l);
  auto const a = just(2, 0);

  CHECK(is_strong(r, rc, a, strong_method::a));

  auto const v = is_strong(l, lc, a, strong_method::a);
  REQUIRE_FALSE(v);
  CHECK(v.witness == std::vector<std::size_t>{0, 1, 1, 0});  // shared a[x], differing x
  CHECK(v.detail.find("shared t=a[x]") != std::string::npos);
  CHECK_FALSE(is_strong(l, lc, a, strong_method::b));
  CHECK_FALSE(is_strong(l, lc, a, strong_method::c));

  auto const ls = is_l_strong(r, a, strong_method::a);
  REQUIRE_FALSE(ls);
  CHECK(ls.witness == std::vector<std::size_t>{0, 1, 1, 0});  // shared (a), differing ē
  CHECK_FALSE(is_l_strong(r, a, strong_method::b));
  CHECK_FALSE(is_l_strong(r, a, strong_method::c));

  auto const bs = is_bistrong(r, rc, a, strong_method::a);
  REQUIRE_FALSE(bs);
  CHECK(bs.witness == std::vector<std::size_t>{0, 1, 1, 0});  // ((a),id) vs (ē,id)
  CHECK_FALSE(is_bistrong(r, rc, a, strong_method::b));
  CHECK_FALSE(is_bistrong(r, rc, a, strong_method::c));
}

TEST_CASE("signature partitions equal pairwise definitions", "[principal]") {
  for (auto const& e : standard_corpus()) {
    auto const& alg = e.algebra;
    if (alg.size() > 4) continue;
    auto const cl = make_translation_closure(alg);
    auto const ts = oracle::translations(alg);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << alg.size()); ++code) {
      auto const h = subset_from_code(alg.size(), code);
      CHECK(v_analysis(alg, cl, h).relation.labels() == oracle::v_partition(alg, ts, code));
      CHECK(l_analysis(alg, h).relation.labels() == oracle::l_partition(alg, code));
      CHECK(full_analysis(alg, cl, h).relation.labels() ==
            oracle::full_partition(alg, ts, code));
    }
  }
}

TEST_CASE("three strongness methods agree", "[principal]") {
  for (auto const& e : standard_corpus()) {
    auto const& alg = e.algebra;
    auto const cl = make_translation_closure(alg);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << alg.size()); ++code) {
      auto const h = subset_from_code(alg.size(), code);
      for (auto kind : {congruence_kind::v, congruence_kind::l, congruence_kind::full}) {
        bool const a = static_cast<bool>(is_strong_kind(kind, alg, cl, h, strong_method::a));
        CHECK(a == static_cast<bool>(is_strong_kind(kind, alg, cl, h, strong_method::b)));
        CHECK(a == static_cast<bool>(is_strong_kind(kind, alg, cl, h, strong_method::c)));
      }
    }
  }
}

TEST_CASE("analysis invariants", "[principal]") {
  for (auto const& e : standard_corpus()) {
    auto const& alg = e.algebra;
    auto const cl = make_translation_closure(alg);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << alg.size()); ++code) {
      auto const h = subset_from_code(alg.size(), code);
      for (auto kind : {congruence_kind::v, congruence_kind::l, congruence_kind::full}) {
        auto const a = analyze(kind, alg, cl, h);
        CHECK_FALSE(a.residue.intersects(h));
        if (a.residue.any()) CHECK(a.relation.is_block(a.residue));
        if (is_strong_kind(kind, alg, cl, h)) {
          std::set<subset> family;
          for (auto const& m : a.family) family.insert(m.members);
          auto const blocks = a.relation.block_subsets();
          CHECK(family == std::set<subset>(blocks.begin(), blocks.end()));
        }
      }
    }
  }
}

TEST_CASE("class theorems", "[principal]") {
  auto const r = rz2();
  auto const rc = make_translation_closure(r);
  auto const report = check_strong_class_theorems(r, rc, just(2, 0), congruence_kind::v);
  CHECK(report.precondition_met);
  CHECK(report.clauses.size() == 4);
  CHECK(report.ok());

  auto const whole = check_strong_class_theorems(r, rc, ~subset(2), congruence_kind::l);
  CHECK(whole.ok());
  CHECK(whole.clauses.size() == 4);

  auto const l = lz2();
  auto const bad = check_strong_class_theorems(l, make_translation_closure(l), just(2, 0),
                                               congruence_kind::v);
  CHECK_FALSE(bad.precondition_met);
  CHECK_FALSE(bad.ok());
  CHECK(bad.precondition_detail.find("not strong") != std::string::npos);

  auto const empty = check_strong_class_theorems(r, rc, subset(2), congruence_kind::v);
  CHECK_FALSE(empty.precondition_met);
  CHECK(empty.precondition_detail == "H is empty");
}

TEST_CASE("fibers", "[principal]") {
  auto const l = lz2();
  auto const lc = make_translation_closure(l);
  auto const a = just(2, 0);
  CHECK(v_fiber(l, lc, a, 0) == a);
  CHECK(v_fiber(l, lc, a, 1) == ~subset(2));
  CHECK(v_fiber(l, lc, a, 2).none());
  CHECK(l_fiber(l, a, 0) == a);
  CHECK(bi_fiber(l, lc, a, 1, 1) == ~subset(2));
}
