#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "menger/corpus.hpp"
#include "menger/enumerate.hpp"
#include "oracles.hpp"

using namespace menger;

namespace {

// Distinct canonical labelings among all m^m label vectors.
std::size_t count_partitions_brute(std::size_t m) {
  std::set<std::vector<element>> seen;
  std::vector<element> v(m, 0);
  for (;;) {
    seen.insert(oracle::labels(m, [&](element a, element b) { return v[a] == v[b]; }));
    std::size_t i = m;
    while (i > 0 && ++v[i - 1] == m) v[--i] = 0;
    if (i == 0) return seen.size();
  }
}

}  // namespace

TEST_CASE("partition counts", "[enumerate]") {
  CHECK(enumerate_partitions(1).size() == 1);
  CHECK(enumerate_partitions(3).size() == 5);
  CHECK(enumerate_partitions(4).size() == count_partitions_brute(4));
  CHECK(enumerate_partitions(4).size() == 15);
  CHECK(enumerate_partitions(5).size() == count_partitions_brute(5));
  CHECK(bell_number(5) == 52);
  CHECK(bell_number(6) == 203);
}

TEST_CASE("partitions come in restricted-growth order without repeats", "[enumerate]") {
  auto const ps = enumerate_partitions(4);
  CHECK(ps.front() == partition::universal(4));
  CHECK(ps.back() == partition::identity(4));
  std::set<std::vector<element>> distinct;
  for (auto const& p : ps) distinct.insert(p.labels());
  CHECK(distinct.size() == ps.size());

  // Restricted growth strings of {0,1,2}: 000 001 010 011 012.
  auto const three = enumerate_partitions(3);
  std::vector<std::vector<std::vector<element>>> blocks;
  for (auto const& p : three) blocks.push_back(p.blocks());
  CHECK(blocks == std::vector<std::vector<std::vector<element>>>{
                      {{0, 1, 2}}, {{0, 1}, {2}}, {{0, 2}, {1}}, {{0}, {1, 2}}, {{0}, {1}, {2}}});
}

TEST_CASE("partition cap", "[enumerate]") {
  try {
    enumerate_partitions(6, 100);
    FAIL("cap ignored");
  } catch (error const& e) {
    CHECK(e.code() == error_code::capacity_exceeded);
  }
  CHECK_THROWS_AS(enumerate_partitions(0), error);
}

TEST_CASE("congruence enumeration", "[enumerate]") {
  CHECK(enumerate_congruences(rz2(), congruence_kind::full).size() == 2);
  CHECK(enumerate_congruences(bool_and(), congruence_kind::full).size() == 1);
  for (auto const& e : standard_corpus()) {
    auto const v = enumerate_congruences(e.algebra, congruence_kind::v);
    auto const l = enumerate_congruences(e.algebra, congruence_kind::l);
    auto const full = enumerate_congruences(e.algebra, congruence_kind::full);
    for (auto const& p : full) {
      CHECK(std::find(v.begin(), v.end(), p) != v.end());
      CHECK(std::find(l.begin(), l.end(), p) != l.end());
    }
  }
}

TEST_CASE("classification rows", "[enumerate]") {
  auto const r = rz2();
  auto const rows = classify_subsets(r, make_translation_closure(r));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].h.none());
  CHECK(rows[0].strong);
  CHECK(rows[0].l_strong);
  CHECK(rows[0].bistrong);
  auto const& a = rows[1];
  CHECK(a.h == make_subset(2, {0}));
  CHECK(a.strong);
  CHECK_FALSE(a.l_strong);
  CHECK_FALSE(a.bistrong);
  CHECK(a.v_residue == 1);
  CHECK(a.l_residue == 0);
  CHECK(a.bi_residue == 0);
  auto const& g = rows[3];
  CHECK(g.v_residue + g.l_residue + g.bi_residue == 0);
  CHECK(g.v_classes == 1);
  CHECK(g.l_classes == 1);
  CHECK(g.bi_classes == 1);

  auto const threaded = classify_subsets(r, make_translation_closure(r), default_subset_cap, 4);
  CHECK(threaded == rows);
  CHECK_THROWS_AS(classify_subsets(r, make_translation_closure(r), 2), error);
}

TEST_CASE("classification is invariant under renaming", "[enumerate]") {
  auto const n = nand_closure();
  // Reverse the element order.
  auto const m = n.size();
  auto const rev = menger_algebra::from_function(
      2, {"d", "c", "b", "a"}, [&](element g, auto xs) {
        std::vector<element> ys{static_cast<element>(m - 1 - xs[0]),
                                static_cast<element>(m - 1 - xs[1])};
        return static_cast<element>(m - 1 - n.apply(m - 1 - g, ys));
      });
  auto const rows = classify_subsets(n, make_translation_closure(n));
  auto const rrows = classify_subsets(rev, make_translation_closure(rev));
  for (std::uint64_t code = 0; code < rows.size(); ++code) {
    std::uint64_t mirrored = 0;
    for (element g = 0; g < m; ++g) {
      if ((code >> g) & 1U) mirrored |= std::uint64_t{1} << (m - 1 - g);
    }
    auto a = rows[code];
    auto b = rrows[mirrored];
    b.h = a.h;
    CHECK(a == b);
  }
}

TEST_CASE("function algebras", "[enumerate]") {
  CHECK(bool_and().size() == 1);
  auto const nand = nand_closure();
  CHECK(nand.size() == 4);
  CHECK(oracle::function_closure(2, 2, {{1, 1, 1, 0}}).size() == 4);
  CHECK(oracle::function_closure(2, 2, {{1, 1, 1, 0}}) ==
        std::set<oracle::table>{{1, 1, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 1}, {0, 0, 0, 0}});
  auto const id = generate_function_algebra(function_family{2, 1, {{0, 1}}});
  CHECK(id.size() == 1);
  CHECK(nor3_closure().size() == oracle::function_closure(2, 3, {{1, 0, 0, 0, 0, 0, 0, 0}}).size());
  CHECK(mixed3_closure().size() ==
        oracle::function_closure(2, 3, {{0, 0, 0, 1, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 1, 0, 1}})
            .size());
  for (auto const* alg : {&nand}) CHECK(oracle::superassociative(*alg));
  CHECK(oracle::superassociative(nor3_closure()));
  CHECK(oracle::superassociative(mixed3_closure()));

  CHECK_THROWS_AS(generate_function_algebra(function_family{2, 2, {}}), error);
  CHECK_THROWS_AS(generate_function_algebra(function_family{2, 2, {{0, 1, 2, 0}}}), error);
  try {
    generate_function_algebra(function_family{2, 2, {{1, 1, 1, 0}}}, 3);
    FAIL("cap ignored");
  } catch (error const& e) {
    CHECK(e.code() == error_code::capacity_exceeded);
  }
}

TEST_CASE("semigroups as rank-1 algebras", "[enumerate]") {
  CHECK(semigroup_as_menger({{0, 0}, {1, 1}}) == lz2());
  CHECK_THROWS_AS(semigroup_as_menger({{1, 0}, {1, 0}}), error);
  CHECK(semigroup_as_menger({{0}}).size() == 1);
}

TEST_CASE("associative table counts match an independent sweep", "[enumerate]") {
  auto const two = oracle::count_associative(2);
  auto const three = oracle::count_associative(3);
  CHECK(two == 8);
  CHECK(three == 113);
  CHECK(all_semigroups(2).size() == two);
  CHECK(all_semigroups(3).size() == three);
}
