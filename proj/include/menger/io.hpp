#pragma once

// Text format:
//
//   menger v1
//   rank <n>
//   elements <name>+
//   table
//   <g> <x1> ... <xn> -> <r>      (m^(n+1) lines, any order)
//
// Blank lines and lines starting with '#' are ignored.

#include <cstddef>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "menger/algebra.hpp"
#include "menger/error.hpp"

namespace menger {

namespace detail {

inline std::vector<std::string> split_words(std::string const& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(std::move(w));
  return out;
}

inline bool skippable(std::vector<std::string> const& words) {
  return words.empty() || words.front().starts_with('#');
}

}  // namespace detail

inline menger_algebra read_algebra(std::istream& in, validation mode = validation::immediate) {
  std::string raw;
  std::size_t line = 0;
  auto next = [&](std::vector<std::string>& words) {
    while (std::getline(in, raw)) {
      ++line;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      words = detail::split_words(raw);
      if (!detail::skippable(words)) return true;
    }
    return false;
  };
  auto malformed = [&](std::string const& what) {
    return file_error(error_code::malformed_file, line, what);
  };

  std::vector<std::string> words;
  if (!next(words) || words != std::vector<std::string>{"menger", "v1"}) {
    throw malformed("expected header 'menger v1'");
  }
  if (!next(words) || words.size() != 2 || words[0] != "rank") {
    throw malformed("expected 'rank <n>'");
  }
  std::size_t rank = 0;
  try {
    std::size_t used = 0;
    auto const value = std::stoul(words[1], &used);
    if (used != words[1].size() || value == 0) throw std::invalid_argument("rank");
    rank = value;
  } catch (std::exception const&) {
    throw malformed("rank must be a positive integer");
  }
  if (!next(words) || words.size() < 2 || words[0] != "elements") {
    throw malformed("expected 'elements <name>+'");
  }
  std::vector<std::string> names(words.begin() + 1, words.end());
  std::size_t const elements_line = line;
  if (!next(words) || words != std::vector<std::string>{"table"}) {
    throw malformed("expected 'table'");
  }

  std::vector<table_entry> entries;
  while (next(words)) {
    if (words.size() < 3 || words[words.size() - 2] != "->") {
      throw malformed("expected '<g> <x1> ... <xn> -> <r>'");
    }
    table_entry e;
    e.operands.assign(words.begin(), words.end() - 2);
    e.result = words.back();
    e.line = line;
    entries.push_back(std::move(e));
  }

  try {
    return build_algebra(rank, std::move(names), entries, mode);
  } catch (file_error const&) {
    throw;
  } catch (error const& e) {
    if (e.code() == error_code::invalid_name || e.code() == error_code::invalid_argument) {
      throw file_error(e.code(), elements_line, e.what());
    }
    throw;
  }
}

inline menger_algebra parse_algebra(std::string const& text,
                                    validation mode = validation::immediate) {
  std::istringstream in(text);
  return read_algebra(in, mode);
}

inline menger_algebra load_algebra(std::string const& path,
                                   validation mode = validation::immediate) {
  std::ifstream in(path);
  if (!in) throw error(error_code::malformed_file, "cannot open " + path);
  return read_algebra(in, mode);
}

/// Canonical text: entries ordered by head, then argument tuple.
inline std::string write_algebra(menger_algebra const& alg) {
  std::string out = "menger v1\nrank " + std::to_string(alg.rank()) + "\nelements";
  for (auto const& n : alg.names()) out += " " + n;
  out += "\ntable\n";
  std::vector<element> xs(alg.rank());
  for (element g = 0; g < alg.size(); ++g) {
    for (std::size_t r = 0; r < alg.tuple_count(); ++r) {
      alg.tuple_at(r, xs);
      out += alg.name(g);
      for (auto x : xs) out += " " + alg.name(x);
      out += " -> " + alg.name(alg.apply(g, xs)) + "\n";
    }
  }
  return out;
}

}  // namespace menger
