#include <catch_amalgamated.hpp>

#include "menger/corpus.hpp"
#include "menger/term.hpp"
#include "oracles.hpp"

using namespace menger;

namespace {

menger_algebra rank2_abuvws() {
  // Left projection on six names; only the term syntax matters here.
  return menger_algebra::from_function(2, {"a", "b", "u", "v", "w", "s"},
                                       [](element g, auto) { return g; });
}

error_code parse_error(menger_algebra const& alg, std::string const& text) {
  try {
    parse_term(alg, text);
  } catch (error const& e) {
    return e.code();
  }
  FAIL("parsed: " << text);
  return error_code::invalid_argument;
}

std::vector<element> values(translation_table const& t) { return t.values(); }

}  // namespace

TEST_CASE("parse and format terms", "[term]") {
  auto const r1 = lz2();
  CHECK(parse_term(r1, "x").is_variable());
  CHECK(format_term(r1, translation_term::variable()) == "x");

  auto const alg = rank2_abuvws();
  auto const t = parse_term(alg, "a[b x]");
  REQUIRE(t.depth() == 1);
  CHECK(t.layers()[0].head == 0);
  CHECK(t.layers()[0].slot == 1);
  CHECK(t.layers()[0].args[0] == 1);
  CHECK(format_term(alg, t) == "a[b x]");

  auto const nested = translation_term::variable().wrap(3, 1, {4, 0}).wrap(2, 0, {0, 5});
  CHECK(format_term(alg, nested) == "u[v[w x] s]");
  CHECK(parse_term(alg, "u[v[w x] s]") == nested);
  CHECK(parse_term(alg, "  u[ v[w   x ]s ]") == nested);
}

TEST_CASE("malformed terms", "[term]") {
  auto const alg = rank2_abuvws();
  CHECK(parse_error(alg, "a[x x]") == error_code::multiple_variables);
  CHECK(parse_error(alg, "a[b b]") == error_code::no_variable);
  CHECK(parse_error(alg, "a") == error_code::no_variable);
  CHECK(parse_error(alg, "a[x]") == error_code::arity_mismatch);
  CHECK(parse_error(alg, "a[b x") == error_code::syntax_error);
  CHECK(parse_error(alg, "x x") == error_code::syntax_error);
  CHECK(parse_error(alg, "q[b x]") == error_code::unknown_element);
}

TEST_CASE("evaluation", "[term]") {
  auto const l = lz2();
  CHECK(eval_term(l, translation_term::variable()) == translation_table::identity(2));
  CHECK(values(eval_term(l, parse_term(l, "a[x]"))) == std::vector<element>{0, 0});
  auto const b = bool_and();
  CHECK(eval_term(b, parse_term(b, "f[f x]")) == translation_table::identity(1));
}

TEST_CASE("composition", "[term]") {
  auto const id = translation_table::identity(2);
  translation_table const ca({0, 0});
  translation_table const cb({1, 1});
  translation_table const swap({1, 0});
  CHECK(compose(id, cb) == cb);
  CHECK(compose(cb, id) == cb);
  CHECK(compose(ca, cb) == ca);
  CHECK(compose(ca, swap) == ca);
  CHECK(compose(compose(swap, cb), swap) == compose(swap, compose(cb, swap)));
}

TEST_CASE("closures of the small algebras", "[term]") {
  auto const l = lz2();
  auto const cl = make_translation_closure(l);
  REQUIRE(cl.size() == 3);
  CHECK(format_term(l, cl.witness(0)) == "x");
  CHECK(format_term(l, cl.witness(1)) == "a[x]");
  CHECK(format_term(l, cl.witness(2)) == "b[x]");
  CHECK(values(cl.table(1)) == std::vector<element>{0, 0});
  CHECK(values(cl.table(2)) == std::vector<element>{1, 1});

  CHECK(make_translation_closure(rz2()).size() == 1);
  CHECK(make_translation_closure(bool_and()).size() == 1);
}

TEST_CASE("closure equals the brute-force fixed point on the corpus", "[term]") {
  for (auto const& e : standard_corpus()) {
    auto const cl = make_translation_closure(e.algebra);
    std::set<oracle::table> got;
    for (auto const& t : cl.tables()) got.insert(t.values());
    CHECK(got == oracle::translations(e.algebra));
    for (std::size_t t = 0; t < cl.size(); ++t) {
      CHECK(eval_term(e.algebra, cl.witness(t)) == cl.table(t));
      CHECK(eval_term(e.algebra, parse_term(e.algebra, format_term(e.algebra, cl.witness(t)))) ==
            cl.table(t));
      CHECK(cl.find(cl.table(t)) == t);
    }
  }
}

TEST_CASE("closure cap", "[term]") {
  try {
    make_translation_closure(lz2(), 2);
    FAIL("cap ignored");
  } catch (error const& e) {
    CHECK(e.code() == error_code::capacity_exceeded);
  }
  CHECK(make_translation_closure(lz2(), 3).size() == 3);
}

TEST_CASE("witnesses are shortest within their generation", "[term]") {
  auto const n = nand_closure();
  auto const cl = make_translation_closure(n);
  std::size_t previous_depth = 0;
  for (std::size_t t = 0; t < cl.size(); ++t) {
    CHECK(cl.witness(t).depth() >= previous_depth);
    previous_depth = cl.witness(t).depth();
  }
}

TEST_CASE("associated polynomial", "[term]") {
  auto const n = nand_closure();
  auto const t = parse_term(n, "f0[f1 f2[x f3]]");
  auto const a = arg_vector::concrete({2, 3});
  auto const twisted = associate_polynomial(n, t, a);
  std::vector<element> av{2, 3};
  auto const expect = translation_term::variable()
                          .wrap(2, 0, {0, n.apply(3, av)})
                          .wrap(0, 1, {n.apply(1, av), 0});
  CHECK(twisted == expect);
  CHECK(associate_polynomial(n, t, arg_vector::selector()) == t);
}

TEST_CASE("t^ā(g[ā]) = t(g)[ā] on the corpus", "[term]") {
  for (auto const& e : standard_corpus()) {
    auto const& alg = e.algebra;
    auto const cl = make_translation_closure(alg);
    auto const args = oracle::arguments(alg);
    for (std::size_t t = 0; t < cl.size(); ++t) {
      for (std::size_t a = 0; a < args.size(); ++a) {
        auto const vec = args[a].empty() ? arg_vector::selector() : arg_vector::concrete(args[a]);
        auto const twisted = eval_term(alg, associate_polynomial(alg, cl.witness(t), vec));
        for (element g = 0; g < alg.size(); ++g) {
          REQUIRE(twisted(oracle::apply(alg, g, args[a])) ==
                  oracle::apply(alg, cl.apply(t, g), args[a]));
        }
      }
    }
  }
}
