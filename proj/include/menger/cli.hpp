#pragma once

// Command-line front end. Exit codes: 0 success, 1 property fails,
// 2 malformed input or usage, 3 capacity exceeded.

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "menger/algebra.hpp"
#include "menger/enumerate.hpp"
#include "menger/io.hpp"
#include "menger/principal.hpp"
#include "menger/suite.hpp"
#include "menger/term.hpp"

namespace menger {

enum exit_status : int {
  exit_ok = 0,
  exit_property_fails = 1,
  exit_malformed = 2,
  exit_capacity = 3,
};

struct cli_hooks {
  /// Forwarded to the suite; lets tests corrupt analyses.
  std::function<void(principal_analysis&)> tamper;
};

inline std::string format_counterexample(menger_algebra const& alg,
                                         superassociativity_counterexample const& c) {
  auto join = [&](std::vector<element> const& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + alg.name(xs[i]);
    return s;
  };
  return "superassociativity fails at f=" + alg.name(c.f) + " g=" + join(c.g) + " h=" + join(c.h) +
         " (lhs=" + alg.name(c.lhs) + " rhs=" + alg.name(c.rhs) + ")";
}

/// Comma-separated element names; the empty string is the empty subset.
inline subset parse_subset(menger_algebra const& alg, std::string const& text) {
  subset out(alg.size());
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    auto const comma = text.find(',', start);
    auto const name = text.substr(start, comma == std::string::npos ? comma : comma - start);
    auto const g = alg.find(name);
    if (!g) throw error(error_code::unknown_element, "unknown element '" + name + "'");
    out.set(*g);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::string format_family_tag(menger_algebra const& alg,
                                     translation_closure const& closure, family_tag const& tag) {
  if (tag.residue) return "residue";
  std::string out;
  if (tag.arg) out += "x̄=" + detail::arg_names(alg, *tag.arg);
  if (tag.translation) {
    if (!out.empty()) out += " ";
    out += "t=" + format_term(alg, closure.witness(*tag.translation));
  }
  return out;
}

inline congruence_kind parse_kind(std::string const& text) {
  if (text == "v") return congruence_kind::v;
  if (text == "l") return congruence_kind::l;
  if (text == "full") return congruence_kind::full;
  throw error(error_code::invalid_argument, "unknown kind '" + text + "'");
}

// ---------------------------------------------------------------------------
// Commands

namespace detail {

inline menger_algebra load_checked(std::string const& path) {
  auto alg = load_algebra(path, validation::deferred);
  auto const report = verify_superassociativity(alg);
  if (!report.ok()) {
    throw error(error_code::not_superassociative, format_counterexample(alg, *report.counterexample));
  }
  return alg;
}

}  // namespace detail

inline int cmd_validate(std::string const& path, std::ostream& out) {
  auto const alg = load_algebra(path, validation::deferred);
  auto const report = verify_superassociativity(alg);
  if (report.ok()) {
    out << "OK\n";
    return exit_ok;
  }
  out << format_counterexample(alg, *report.counterexample) << "\n";
  return exit_property_fails;
}

inline int cmd_congruence(std::string const& path, std::string const& kind_text,
                          std::string const& subset_text, std::ostream& out) {
  auto const kind = parse_kind(kind_text);
  auto const alg = detail::load_checked(path);
  auto const h = parse_subset(alg, subset_text);
  auto const closure = make_translation_closure(alg);
  auto const a = analyze(kind, alg, closure, h);
  auto const strong = is_strong_kind(kind, alg, closure, h);
  out << "kind: " << to_string(kind) << "\n";
  out << "subset: " << format_subset(alg, h) << (h.none() ? " (H is empty)" : "") << "\n";
  out << "classes: " << format_partition(alg, a.relation) << "\n";
  out << "residue: " << (a.residue.none() ? std::string("empty") : format_subset(alg, a.residue))
      << "\n";
  out << strongness_name(kind) << ": " << (strong ? "yes" : "no") << "\n";
  if (!strong) out << "witness: " << strong.detail << "\n";
  out << "family:\n";
  for (auto const& member : a.family) {
    out << "  " << format_subset(alg, member.members) << " "
        << format_family_tag(alg, closure, member.tag) << "\n";
  }
  return exit_ok;
}

inline int cmd_classify(std::string const& path, bool tsv, std::uint64_t cap, std::size_t threads,
                        std::ostream& out) {
  auto const alg = detail::load_checked(path);
  subset_count(alg.size(), cap);
  auto const closure = make_translation_closure(alg);
  auto const rows = classify_subsets(alg, closure, cap, threads);

  std::vector<std::string> const header{"subset",   "strong",  "l-strong", "bistrong", "nv-complex",
                                        "nl-complex", "bicomplex", "l-ideal",  "s-ideal",  "sl-ideal",
                                        "l-consistent", "|W_H|", "|_HW|",   "|W^H|",    "R_H",
                                        "L_H",      "P_H"};
  std::vector<std::vector<std::string>> table{header};
  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  for (auto const& r : rows) {
    table.push_back({format_subset(alg, r.h), yn(r.strong), yn(r.l_strong), yn(r.bistrong),
                     yn(r.normal_v_complex), yn(r.normal_l_complex), yn(r.normal_bicomplex),
                     yn(r.l_ideal), yn(r.s_ideal), yn(r.sl_ideal), yn(r.l_consistent),
                     std::to_string(r.v_residue), std::to_string(r.l_residue),
                     std::to_string(r.bi_residue), std::to_string(r.v_classes),
                     std::to_string(r.l_classes), std::to_string(r.bi_classes)});
  }
  if (tsv) {
    for (auto const& row : table) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "\t" : "") << row[c];
      out << "\n";
    }
    return exit_ok;
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (auto const& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (auto const& row : table) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += row[c] + std::string(width[c] - row[c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return exit_ok;
}

inline int cmd_suite(std::string const& path, std::size_t threads, std::ostream& out,
                     cli_hooks const& hooks = {}) {
  auto const alg = detail::load_checked(path);
  auto const closure = make_translation_closure(alg);
  suite_options opt;
  opt.threads = threads;
  opt.tamper = hooks.tamper;
  auto const report = run_paper_suite(alg, closure, opt);
  std::size_t passed = 0;
  std::size_t failed = 0;
  for (auto const& item : report.items) {
    out << to_string(item.status) << " " << item.id << "  " << item.statement << " ("
        << item.cases << (item.cases == 1 ? " case" : " cases") << ")\n";
    if (item.status == item_status::fail) {
      out << "  counterexample: " << item.counterexample << "\n";
      ++failed;
    } else if (item.status == item_status::skip) {
      out << "  skipped: " << item.counterexample << "\n";
    } else {
      ++passed;
    }
  }
  out << passed << " passed, " << failed << " failed, " << report.items.size() - passed - failed
      << " skipped\n";
  return report.ok() ? exit_ok : exit_property_fails;
}

inline int cmd_translations(std::string const& path, std::size_t limit, std::size_t cap,
                            std::ostream& out) {
  auto const alg = detail::load_checked(path);
  auto const closure = make_translation_closure(alg, cap);
  out << closure.size() << (closure.size() == 1 ? " translation" : " translations") << "\n";
  for (std::size_t t = 0; t < std::min(limit, closure.size()); ++t) {
    out << format_term(alg, closure.witness(t)) << ":";
    for (element g = 0; g < alg.size(); ++g) out << " " << alg.name(closure.apply(t, g));
    out << "\n";
  }
  return exit_ok;
}

inline int exit_code_for(error_code code) {
  switch (code) {
    case error_code::capacity_exceeded: return exit_capacity;
    case error_code::not_superassociative: return exit_property_fails;
    default: return exit_malformed;
  }
}

/// argv[0] is the program name.
inline int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err,
                   cli_hooks const& hooks = {}) {
  CLI::App app{"Finite Menger algebra workbench", "menger"};
  app.require_subcommand(1);

  std::string file;
  auto* validate = app.add_subcommand("validate", "check the superassociative law");
  validate->add_option("file", file, "algebra file")->required();

  std::string kind = "v";
  std::string subset_text;
  auto* congruence = app.add_subcommand("congruence", "principal congruence induced by a subset");
  congruence->add_option("file", file, "algebra file")->required();
  congruence->add_option("--kind", kind, "v, l or full")
      ->check(CLI::IsMember({"v", "l", "full"}));
  congruence->add_option("--subset", subset_text, "comma-separated names; '' is the empty set")
      ->required();

  bool tsv = false;
  std::uint64_t subset_cap = default_subset_cap;
  std::size_t threads = 1;
  auto* classify = app.add_subcommand("classify", "classify every subset");
  classify->add_option("file", file, "algebra file")->required();
  classify->add_flag("--tsv", tsv, "tab-separated output");
  classify->add_option("--cap", subset_cap, "maximum number of subsets");
  classify->add_option("--threads", threads, "worker threads, 0 = all cores");

  auto* suite = app.add_subcommand("suite", "check every structural statement");
  suite->add_option("file", file, "algebra file")->required();
  suite->add_option("--threads", threads, "worker threads, 0 = all cores");

  std::size_t limit = 20;
  std::size_t translation_cap = default_translation_cap;
  auto* translations = app.add_subcommand("translations", "list the translation closure");
  translations->add_option("file", file, "algebra file")->required();
  translations->add_option("--limit", limit, "number of terms to print");
  translations->add_option("--cap", translation_cap, "maximum number of translations");

  std::vector<char const*> argv;
  for (auto const& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::ParseError const& e) {
    auto const code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_malformed;
  }

  try {
    if (*validate) return cmd_validate(file, out);
    if (*congruence) return cmd_congruence(file, kind, subset_text, out);
    if (*classify) return cmd_classify(file, tsv, subset_cap, threads, out);
    if (*suite) return cmd_suite(file, threads, out, hooks);
    if (*translations) return cmd_translations(file, limit, translation_cap, out);
  } catch (error const& e) {
    if (e.code() == error_code::not_superassociative) {
      out << e.what() << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return exit_code_for(e.code());
  }
  return exit_malformed;
}

}  // namespace menger
