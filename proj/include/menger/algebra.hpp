#pragma once

/**
 * @file algebra.hpp
 * @brief Finite Menger algebras of rank n.
 *
 * A Menger algebra of rank n is a set G with an (n+1)-ary operation
 * g[x_1 ... x_n] that is superassociative:
 *
 *     f[g_1 ... g_n][h_1 ... h_n] = f[g_1[h_1 ... h_n] ... g_n[h_1 ... h_n]]
 *
 * Elements are the indices 0..m-1 in declaration order. Argument vectors
 * range over B = G^n plus the formal selector tuple ē, which acts as
 * g[ē] = g. Inside the library B is addressed by a dense index: 0 is ē and
 * 1 + r is the concrete tuple of lexicographic rank r (first component most
 * significant).
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "menger/error.hpp"

namespace menger {

using element = std::uint32_t;

/// Bit mask over a finite index set; used for subsets of G and signatures.
using mask = boost::dynamic_bitset<std::uint64_t>;

/// Membership mask of length |G|.
using subset = mask;

/// Upper bound on m^(n+1) table entries.
inline constexpr std::size_t max_table_entries = 10'000'000;

inline std::vector<element> members(subset const& s) {
  std::vector<element> out;
  for (auto i = s.find_first(); i != subset::npos; i = s.find_next(i)) {
    out.push_back(static_cast<element>(i));
  }
  return out;
}

inline subset make_subset(std::size_t size, std::initializer_list<element> elems) {
  subset s(size);
  for (auto e : elems) s.set(e);
  return s;
}

/// An element of B: the selector ē or a concrete n-tuple.
class arg_vector {
 public:
  static arg_vector selector() { return arg_vector{}; }

  static arg_vector concrete(std::vector<element> components) {
    arg_vector v;
    v.selector_ = false;
    v.components_ = std::move(components);
    return v;
  }

  bool is_selector() const noexcept { return selector_; }
  std::span<element const> components() const noexcept { return components_; }

  bool operator==(arg_vector const&) const = default;

  // ē sorts before every concrete tuple; concrete tuples compare
  // lexicographically.
  std::strong_ordering operator<=>(arg_vector const& other) const {
    if (selector_ != other.selector_) {
      return selector_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::lexicographical_compare_three_way(components_.begin(), components_.end(),
                                                  other.components_.begin(),
                                                  other.components_.end());
  }

 private:
  arg_vector() = default;

  bool selector_ = true;
  std::vector<element> components_;
};

/// Number of table entries m^(n+1), or nullopt past max_table_entries.
inline std::optional<std::size_t> table_entry_count(std::size_t rank, std::size_t size) {
  if (size == 0) return 0;
  std::size_t entries = size;
  for (std::size_t i = 0; i < rank; ++i) {
    if (entries > max_table_entries / size) return std::nullopt;
    entries *= size;
  }
  return entries;
}

enum class validation { immediate, deferred };

/// One line of an operation table given by element names: head, then n
/// arguments, then the result. `line` is carried into error messages.
struct table_entry {
  std::vector<std::string> operands;
  std::string result;
  std::size_t line = 0;
};

class menger_algebra;

struct superassociativity_counterexample {
  element f;
  std::vector<element> g;
  std::vector<element> h;
  element lhs;  // f[g][h]
  element rhs;  // f[g_1[h] ... g_n[h]]
};

struct superassociativity_report {
  std::optional<superassociativity_counterexample> counterexample;

  bool ok() const noexcept { return !counterexample.has_value(); }
};

superassociativity_report verify_superassociativity(menger_algebra const& alg);

class menger_algebra {
 public:
  /// Builds from a flat table indexed by g * m^n + lexrank(x_1..x_n).
  static menger_algebra from_table(std::size_t rank, std::vector<std::string> names,
                                   std::vector<element> table,
                                   validation mode = validation::immediate) {
    menger_algebra alg(rank, std::move(names));
    if (table.size() != alg.table_.size()) {
      throw error(error_code::invalid_argument,
                  "table has " + std::to_string(table.size()) + " entries, expected " +
                      std::to_string(alg.table_.size()));
    }
    for (auto v : table) {
      if (v >= alg.size()) {
        throw error(error_code::unknown_element,
                    "table value " + std::to_string(v) + " out of range");
      }
    }
    alg.table_ = std::move(table);
    if (mode == validation::immediate) alg.require_superassociative();
    return alg;
  }

  /// Builds from a callable op(g, span<element const> xs) -> element.
  template <typename Op>
  static menger_algebra from_function(std::size_t rank, std::vector<std::string> names, Op&& op,
                                      validation mode = validation::immediate) {
    menger_algebra alg(rank, std::move(names));
    std::vector<element> xs(rank, 0);
    std::vector<element> table(alg.table_.size());
    for (element g = 0; g < alg.size(); ++g) {
      for (std::size_t r = 0; r < alg.tuple_count_; ++r) {
        alg.tuple_at(r, xs);
        table[g * alg.tuple_count_ + r] = static_cast<element>(op(g, std::span<element const>(xs)));
      }
    }
    return from_table(rank, alg.names_, std::move(table), mode);
  }

  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return names_.size(); }

  std::vector<std::string> const& names() const noexcept { return names_; }
  std::string const& name(element g) const { return names_.at(g); }

  std::optional<element> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// m^n, the number of concrete argument tuples.
  std::size_t tuple_count() const noexcept { return tuple_count_; }
  /// |B| = m^n + 1.
  std::size_t arg_count() const noexcept { return tuple_count_ + 1; }

  std::size_t tuple_index(std::span<element const> xs) const {
    if (xs.size() != rank_) {
      throw error(error_code::invalid_argument, "argument tuple has " + std::to_string(xs.size()) +
                                                    " components, expected " +
                                                    std::to_string(rank_));
    }
    std::size_t r = 0;
    for (auto x : xs) {
      check_element(x);
      r = r * size() + x;
    }
    return r;
  }

  void tuple_at(std::size_t r, std::span<element> out) const {
    for (std::size_t i = rank_; i-- > 0;) {
      out[i] = static_cast<element>(r % size());
      r /= size();
    }
  }

  std::size_t arg_index(arg_vector const& x) const {
    return x.is_selector() ? 0 : 1 + tuple_index(x.components());
  }

  arg_vector arg_at(std::size_t index) const {
    if (index == 0) return arg_vector::selector();
    std::vector<element> xs(rank_);
    tuple_at(index - 1, xs);
    return arg_vector::concrete(std::move(xs));
  }

  element apply(element g, std::span<element const> xs) const {
    check_element(g);
    return table_[g * tuple_count_ + tuple_index(xs)];
  }

  element apply(element g, arg_vector const& x) const {
    return x.is_selector() ? (check_element(g), g) : apply(g, x.components());
  }

  /// g[x] with x given by its B index; no range checks.
  element apply_indexed(element g, std::size_t arg) const noexcept {
    return arg == 0 ? g : table_[g * tuple_count_ + arg - 1];
  }

  /// u[w_1 .. w_{slot-1} h w_{slot+1} .. w_n]; slot is 0-based.
  element apply_slot(element u, std::span<element const> w, std::size_t slot, element h) const {
    if (slot >= rank_) {
      throw error(error_code::invalid_argument, "slot index " + std::to_string(slot + 1) +
                                                    " out of range 1.." + std::to_string(rank_));
    }
    if (w.size() != rank_) {
      throw error(error_code::invalid_argument, "argument tuple has wrong length");
    }
    std::vector<element> xs(w.begin(), w.end());
    xs[slot] = h;
    return apply(u, xs);
  }

  /// x * y in the monoid (B, *), by B index.
  std::size_t star_indexed(std::size_t x, std::size_t y) const {
    if (x == 0) return y;
    if (y == 0) return x;
    std::vector<element> xs(rank_);
    tuple_at(x - 1, xs);
    std::size_t r = 0;
    for (auto xi : xs) r = r * size() + apply_indexed(xi, y);
    return 1 + r;
  }

  arg_vector star(arg_vector const& x, arg_vector const& y) const {
    return arg_at(star_indexed(arg_index(x), arg_index(y)));
  }

  std::span<element const> table() const noexcept { return table_; }

  bool operator==(menger_algebra const& other) const {
    return rank_ == other.rank_ && names_ == other.names_ && table_ == other.table_;
  }

  /// Throws unless the names are nonempty, distinct and usable in terms and files.
  static void check_names(std::vector<std::string> const& names) {
    if (names.empty()) throw error(error_code::invalid_argument, "carrier must be nonempty");
    std::unordered_set<std::string_view> seen;
    for (auto const& n : names) {
      check_name(n);
      if (!seen.insert(n).second) {
        throw error(error_code::invalid_argument, "duplicate element name '" + n + "'");
      }
    }
  }

 private:
  menger_algebra(std::size_t rank, std::vector<std::string> names)
      : rank_(rank), names_(std::move(names)) {
    if (rank_ == 0) throw error(error_code::invalid_argument, "rank must be at least 1");
    check_names(names_);
    for (element i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);
    auto const entries = table_entry_count(rank_, names_.size());
    if (!entries) {
      throw error(error_code::capacity_exceeded,
                  "operation table exceeds " + std::to_string(max_table_entries) + " entries");
    }
    tuple_count_ = *entries / names_.size();
    table_.assign(*entries, 0);
  }

  static void check_name(std::string const& name) {
    // "x" is reserved for the variable of translation terms.
    bool bad = name.empty() || name == "->" || name == "x";
    for (char c : name) {
      if (c == '[' || c == ']' || c == '{' || c == '}' || c == ',' || c == ' ' || c == '\t' ||
          c == '\n' || c == '\r') {
        bad = true;
      }
    }
    if (bad) throw error(error_code::invalid_name, "invalid element name '" + name + "'");
  }

  void check_element(element g) const {
    if (g >= size()) {
      throw error(error_code::unknown_element, "element index " + std::to_string(g) +
                                                   " out of range");
    }
  }

  void require_superassociative() const {
    auto report = verify_superassociativity(*this);
    if (!report.ok()) {
      auto const& c = *report.counterexample;
      std::string msg = "not superassociative at f=" + names_[c.f] + " g=";
      for (std::size_t i = 0; i < c.g.size(); ++i) msg += (i ? "," : "") + names_[c.g[i]];
      msg += " h=";
      for (std::size_t i = 0; i < c.h.size(); ++i) msg += (i ? "," : "") + names_[c.h[i]];
      throw error(error_code::not_superassociative, msg);
    }
  }

  std::size_t rank_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, element> index_;
  std::size_t tuple_count_ = 0;
  std::vector<element> table_;
};

/// Checks f[g][h] = f[g * h] over all f, g, h in lexicographic order of
/// (f, g_1..g_n, h_1..h_n) and reports the first violation.
inline superassociativity_report verify_superassociativity(menger_algebra const& alg) {
  auto const m = alg.size();
  auto const tuples = alg.tuple_count();
  std::vector<std::size_t> star(tuples * tuples);
  for (std::size_t g = 0; g < tuples; ++g) {
    for (std::size_t h = 0; h < tuples; ++h) {
      star[g * tuples + h] = alg.star_indexed(g + 1, h + 1);
    }
  }
  for (element f = 0; f < m; ++f) {
    for (std::size_t g = 0; g < tuples; ++g) {
      element const fg = alg.apply_indexed(f, g + 1);
      for (std::size_t h = 0; h < tuples; ++h) {
        element const lhs = alg.apply_indexed(fg, h + 1);
        element const rhs = alg.apply_indexed(f, star[g * tuples + h]);
        if (lhs != rhs) {
          superassociativity_counterexample c{f, std::vector<element>(alg.rank()),
                                              std::vector<element>(alg.rank()), lhs, rhs};
          alg.tuple_at(g, c.g);
          alg.tuple_at(h, c.h);
          return {std::move(c)};
        }
      }
    }
  }
  return {};
}

/// Builds an algebra from named table lines; every argument tuple must
/// appear exactly once.
inline menger_algebra build_algebra(std::size_t rank, std::vector<std::string> names,
                                    std::vector<table_entry> const& entries,
                                    validation mode = validation::immediate) {
  if (rank == 0) throw error(error_code::invalid_argument, "rank must be at least 1");
  menger_algebra::check_names(names);
  auto const count = table_entry_count(rank, names.size());
  if (!count) {
    throw error(error_code::capacity_exceeded,
                "operation table exceeds " + std::to_string(max_table_entries) + " entries");
  }
  std::unordered_map<std::string, element> index;
  for (element i = 0; i < names.size(); ++i) index.emplace(names[i], i);

  auto lookup = [&](std::string const& name, std::size_t line) {
    auto it = index.find(name);
    if (it == index.end()) {
      throw file_error(error_code::unknown_element, line, "unknown element '" + name + "'");
    }
    return it->second;
  };

  std::size_t const m = names.size();
  std::size_t const tuples = *count / std::max<std::size_t>(m, 1);
  std::vector<element> table(*count, 0);
  std::vector<bool> seen(*count, false);
  for (auto const& e : entries) {
    if (e.operands.size() != rank + 1) {
      throw file_error(error_code::arity_mismatch, e.line,
                       "expected " + std::to_string(rank + 1) + " operands, got " +
                           std::to_string(e.operands.size()));
    }
    std::size_t r = 0;
    for (std::size_t i = 1; i <= rank; ++i) r = r * m + lookup(e.operands[i], e.line);
    std::size_t const slot = lookup(e.operands[0], e.line) * tuples + r;
    element const value = lookup(e.result, e.line);
    if (seen[slot]) {
      std::string tuple;
      for (auto const& op : e.operands) tuple += (tuple.empty() ? "" : " ") + op;
      throw file_error(error_code::duplicate_entry, e.line, "duplicate entry " + tuple);
    }
    seen[slot] = true;
    table[slot] = value;
  }
  for (std::size_t slot = 0; slot < seen.size(); ++slot) {
    if (seen[slot]) continue;
    std::string tuple = names[slot / tuples];
    std::size_t r = slot % tuples;
    std::vector<std::string> args(rank);
    for (std::size_t i = rank; i-- > 0;) {
      args[i] = names[r % m];
      r /= m;
    }
    for (auto const& a : args) tuple += " " + a;
    throw file_error(error_code::missing_entry, 0, "missing entry " + tuple);
  }
  return menger_algebra::from_table(rank, std::move(names), std::move(table), mode);
}

}  // namespace menger
