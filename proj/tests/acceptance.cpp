#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "menger/cli.hpp"
#include "menger/corpus.hpp"
#include "menger/menger.hpp"
#include "oracles.hpp"

using namespace menger;

namespace {

struct outcome {
  bool pass = true;
  std::string note;

  void fail(std::string what) {
    if (!pass) return;
    pass = false;
    note = std::move(what);
  }
};

std::vector<corpus_entry> const& corpus() {
  static auto const c = standard_corpus();
  return c;
}

std::uint64_t subsets_of(menger_algebra const& alg) { return std::uint64_t{1} << alg.size(); }

outcome oracle_equivalence() {
  outcome o;
  auto const start = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  for (auto const& e : corpus()) {
    auto const& alg = e.algebra;
    auto const cl = make_translation_closure(alg);
    auto const ts = oracle::translations(alg);
    for (std::uint64_t code = 0; code < subsets_of(alg); ++code) {
      auto const h = subset_from_code(alg.size(), code);
      if (v_analysis(alg, cl, h).relation.labels() != oracle::v_partition(alg, ts, code)) {
        o.fail(e.name + " R_H differs at code " + std::to_string(code));
      }
      if (l_analysis(alg, h).relation.labels() != oracle::l_partition(alg, code)) {
        o.fail(e.name + " L_H differs at code " + std::to_string(code));
      }
      if (full_analysis(alg, cl, h).relation.labels() != oracle::full_partition(alg, ts, code)) {
        o.fail(e.name + " P_H differs at code " + std::to_string(code));
      }
      ++checked;
    }
  }
  auto const seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 60) o.fail("took " + std::to_string(seconds) + " s");
  if (o.pass) {
    std::ostringstream s;
    s.precision(2);
    s << std::fixed << checked << " subsets in " << seconds << " s";
    o.note = s.str();
  }
  return o;
}

outcome strongness_agreement() {
  outcome o;
  std::size_t checked = 0;
  for (auto const& e : corpus()) {
    auto const& alg = e.algebra;
    auto const cl = make_translation_closure(alg);
    for (std::uint64_t code = 0; code < subsets_of(alg); ++code) {
      auto const h = subset_from_code(alg.size(), code);
      for (auto kind : {congruence_kind::v, congruence_kind::l, congruence_kind::full}) {
        bool const a = static_cast<bool>(is_strong_kind(kind, alg, cl, h, strong_method::a));
        bool const b = static_cast<bool>(is_strong_kind(kind, alg, cl, h, strong_method::b));
        bool const c = static_cast<bool>(is_strong_kind(kind, alg, cl, h, strong_method::c));
        if (a != b || a != c) {
          o.fail(e.name + " " + to_string(kind) + " methods disagree at code " +
                 std::to_string(code));
        }
        ++checked;
      }
    }
  }
  if (o.pass) o.note = std::to_string(checked) + " (algebra, subset, kind) triples";
  return o;
}

outcome proposition_suite() {
  outcome o;
  std::size_t failing_algebras = 0;
  std::vector<std::string> failing_items;
  for (auto const& e : corpus()) {
    auto const report = run_paper_suite(e.algebra, make_translation_closure(e.algebra));
    bool bad = false;
    for (auto const& item : report.items) {
      if (item.status == item_status::pass) continue;
      bad = true;
      if (std::find(failing_items.begin(), failing_items.end(), item.id) == failing_items.end()) {
        failing_items.push_back(item.id);
      }
      o.fail(e.name + " " + item.id + " " + to_string(item.status) + ": " + item.counterexample);
    }
    failing_algebras += bad;
  }
  if (!o.pass) {
    std::string ids;
    for (auto const& id : failing_items) ids += (ids.empty() ? "" : ",") + id;
    o.note = std::to_string(failing_algebras) + " of " + std::to_string(corpus().size()) +
             " algebras fail [" + ids + "]; first: " + o.note;
  } else {
    o.note = std::to_string(corpus().size()) + " algebras";
  }
  return o;
}

outcome intersection_theorems() {
  outcome o;
  std::size_t checked = 0;
  for (auto const& e : corpus()) {
    auto const& alg = e.algebra;
    if (alg.size() > 5) continue;
    auto const ts = oracle::translations(alg);
    for (auto kind : {congruence_kind::v, congruence_kind::l, congruence_kind::full}) {
      for (auto const& rho : enumerate_congruences(alg, kind)) {
        std::vector<partition> parts;
        for (auto const& block : rho.block_subsets()) {
          std::uint64_t code = 0;
          for (auto g : members(block)) code |= std::uint64_t{1} << g;
          switch (kind) {
            case congruence_kind::v: parts.emplace_back(oracle::v_partition(alg, ts, code)); break;
            case congruence_kind::l: parts.emplace_back(oracle::l_partition(alg, code)); break;
            case congruence_kind::full:
              parts.emplace_back(oracle::full_partition(alg, ts, code));
              break;
          }
        }
        if (meet_partitions(parts) != rho) {
          o.fail(e.name + " " + to_string(kind) + " congruence " + format_partition(alg, rho) +
                 " is not the meet of its classes' relations");
        }
        ++checked;
      }
    }
  }
  if (o.pass) o.note = std::to_string(checked) + " congruences";
  return o;
}

outcome associated_polynomials() {
  outcome o;
  std::size_t checked = 0;
  for (auto const& e : corpus()) {
    auto const& alg = e.algebra;
    auto const cl = make_translation_closure(alg);
    auto const args = oracle::arguments(alg);
    for (std::size_t t = 0; t < cl.size(); ++t) {
      for (auto const& a : args) {
        auto const vec = a.empty() ? arg_vector::selector() : arg_vector::concrete(a);
        auto const twisted = eval_term(alg, associate_polynomial(alg, cl.witness(t), vec));
        for (element g = 0; g < alg.size(); ++g) {
          if (twisted(oracle::apply(alg, g, a)) != oracle::apply(alg, cl.apply(t, g), a)) {
            o.fail(e.name + " t=" + format_term(alg, cl.witness(t)) + " g=" + alg.name(g));
          }
          ++checked;
        }
      }
    }
  }
  if (o.pass) o.note = std::to_string(checked) + " (t, ā, g) triples";
  return o;
}

outcome rank_one_counts() {
  outcome o;
  auto const two = oracle::count_associative(2);
  auto const three = oracle::count_associative(3);
  if (two != 8) o.fail("sweep found " + std::to_string(two) + " on 2 elements");
  if (three != 113) o.fail("sweep found " + std::to_string(three) + " on 3 elements");
  for (std::size_t m : {2u, 3u}) {
    auto const algebras = all_semigroups(m);
    if (algebras.size() != (m == 2 ? two : three)) {
      o.fail("library enumerates " + std::to_string(algebras.size()) + " on " +
             std::to_string(m) + " elements");
    }
    for (auto const& alg : algebras) {
      if (!verify_superassociativity(alg).ok()) o.fail("enumerated table fails validation");
    }
  }
  if (o.pass) o.note = "2 elements: " + std::to_string(two) + ", 3 elements: " + std::to_string(three);
  return o;
}

outcome generated_models() {
  outcome o;
  struct family {
    std::string name;
    std::size_t arity;
    std::vector<oracle::table> gens;
  };
  std::vector<family> const families{
      {"and", 2, {{0, 0, 0, 1}}},
      {"nand", 2, {{1, 1, 1, 0}}},
      {"nor3", 3, {{1, 0, 0, 0, 0, 0, 0, 0}}},
      {"mixed3", 3, {{0, 0, 0, 1, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 1, 0, 1}}},
      {"or-xor", 2, {{0, 1, 1, 1}, {0, 1, 1, 0}}},
      {"projection", 2, {{0, 0, 1, 1}}},
  };
  for (auto const& f : families) {
    auto const alg = generate_function_algebra(function_family{2, f.arity, f.gens});
    if (!verify_superassociativity(alg).ok() || !oracle::superassociative(alg)) {
      o.fail(f.name + " closure is not superassociative");
    }
    auto const sweep = oracle::function_closure(2, f.arity, f.gens);
    if (alg.size() != sweep.size()) {
      o.fail(f.name + " closure has " + std::to_string(alg.size()) + " elements, sweep " +
             std::to_string(sweep.size()));
    }
  }
  auto const nand = oracle::function_closure(2, 2, {{1, 1, 1, 0}}).size();
  if (nand != 4) o.fail("NAND sweep found " + std::to_string(nand));
  if (o.pass) o.note = std::to_string(families.size()) + " families, NAND closure size " +
                       std::to_string(nand);
  return o;
}

std::string capture(std::function<int(std::ostream&)> const& fn) {
  std::ostringstream out;
  int const code = fn(out);
  return std::to_string(code) + "\n" + out.str();
}

outcome determinism() {
  outcome o;
  std::string const dir = MENGER_CORPUS_DIR;
  std::size_t runs = 0;
  for (auto const* name : {"lz2", "rz2", "bool-and", "nand", "nor3", "mixed3"}) {
    auto const path = dir + "/" + name + ".menger";
    auto const reference = capture([&](std::ostream& out) { return cmd_suite(path, 1, out); });
    for (std::size_t threads : {1u, 2u, 4u, 0u}) {
      for (int rep = 0; rep < 3; ++rep) {
        auto const again =
            capture([&](std::ostream& out) { return cmd_suite(path, threads, out); });
        if (again != reference) {
          o.fail(std::string(name) + " suite output changed with threads=" +
                 std::to_string(threads));
        }
        ++runs;
      }
    }
    auto const alg = load_algebra(path);
    for (std::uint64_t code = 0; code < subsets_of(alg); ++code) {
      std::string names;
      for (auto g : members(subset_from_code(alg.size(), code))) {
        names += (names.empty() ? "" : ",") + alg.name(g);
      }
      for (auto const* kind : {"v", "l", "full"}) {
        auto const first =
            capture([&](std::ostream& out) { return cmd_congruence(path, kind, names, out); });
        for (int rep = 0; rep < 2; ++rep) {
          if (capture([&](std::ostream& out) { return cmd_congruence(path, kind, names, out); }) !=
              first) {
            o.fail(std::string(name) + " congruence output changed for {" + names + "}");
          }
          ++runs;
        }
      }
    }
  }
  if (o.pass) o.note = std::to_string(runs) + " repeated runs";
  return o;
}

struct criterion {
  char const* title;
  outcome (*run)();
};

std::vector<criterion> const criteria{
    {"signature relations equal pairwise definitions", oracle_equivalence},
    {"strongness methods agree", strongness_agreement},
    {"proposition suite passes on the corpus", proposition_suite},
    {"congruences are meets of their classes' relations", intersection_theorems},
    {"associated polynomial identity", associated_polynomials},
    {"rank-1 counts", rank_one_counts},
    {"generated algebras", generated_models},
    {"deterministic output", determinism},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> selected;
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) {
      auto const k = std::strtoul(argv[i], nullptr, 10);
      if (k < 1 || k > criteria.size()) {
        std::cerr << "usage: acceptance [1-" << criteria.size() << "]...\n";
        return 2;
      }
      selected.push_back(k - 1);
    }
  } else {
    for (std::size_t k = 0; k < criteria.size(); ++k) selected.push_back(k);
  }
  bool all = true;
  for (auto k : selected) {
    outcome result;
    try {
      result = criteria[k].run();
    } catch (std::exception const& e) {
      result.fail(std::string("exception: ") + e.what());
    }
    std::cout << (result.pass ? "PASS" : "FAIL") << " " << k + 1 << " " << criteria[k].title
              << " (" << result.note << ")\n";
    all = all && result.pass;
  }
  return all ? 0 : 1;
}
