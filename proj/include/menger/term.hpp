#pragma once

/**
 * @file term.hpp
 * @brief Polynomials of T_n(G) and elementary translations.
 *
 * A polynomial is either the variable x or a[b_1 .. t .. b_n] where exactly
 * one argument is again a polynomial and the others are constants. Such a
 * term has a single path down to x, so it is stored as that path: a list of
 * layers, outermost first, each holding the head, the slot of the sub-term
 * and the n-1 constants around it.
 *
 * Text form: `x` or `name[arg ... arg]` with whitespace-separated arguments.
 */

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "menger/algebra.hpp"
#include "menger/error.hpp"

namespace menger {

struct term_layer {
  element head = 0;
  std::size_t slot = 0;        // 0-based position of the sub-term
  std::vector<element> args;   // length n; args[slot] is unused and kept 0

  bool operator==(term_layer const&) const = default;
  auto operator<=>(term_layer const&) const = default;
};

class translation_term {
 public:
  /// The variable x.
  translation_term() = default;

  static translation_term variable() { return {}; }

  /// head[args with slot replaced by *this].
  translation_term wrap(element head, std::size_t slot, std::vector<element> args) const {
    if (slot >= args.size()) {
      throw error(error_code::invalid_argument, "slot index out of range");
    }
    if (!layers_.empty() && layers_.front().args.size() != args.size()) {
      throw error(error_code::arity_mismatch, "layers of one term must share the rank");
    }
    args[slot] = 0;
    translation_term t;
    t.layers_.reserve(layers_.size() + 1);
    t.layers_.push_back(term_layer{head, slot, std::move(args)});
    t.layers_.insert(t.layers_.end(), layers_.begin(), layers_.end());
    return t;
  }

  bool is_variable() const noexcept { return layers_.empty(); }
  std::size_t depth() const noexcept { return layers_.size(); }
  std::span<term_layer const> layers() const noexcept { return layers_; }

  bool operator==(translation_term const&) const = default;
  auto operator<=>(translation_term const&) const = default;

 private:
  friend translation_term associate_polynomial(menger_algebra const&, translation_term const&,
                                               arg_vector const&);

  std::vector<term_layer> layers_;
};

/// Extensional form of a translation: values[g] = t(g).
class translation_table {
 public:
  translation_table() = default;
  explicit translation_table(std::vector<element> values) : values_(std::move(values)) {}

  static translation_table identity(std::size_t size) {
    std::vector<element> v(size);
    for (std::size_t g = 0; g < size; ++g) v[g] = static_cast<element>(g);
    return translation_table(std::move(v));
  }

  element operator()(element g) const { return values_[g]; }
  std::size_t size() const noexcept { return values_.size(); }
  std::vector<element> const& values() const noexcept { return values_; }

  bool operator==(translation_table const&) const = default;
  auto operator<=>(translation_table const&) const = default;

 private:
  std::vector<element> values_;
};

struct translation_table_hash {
  std::size_t operator()(translation_table const& t) const noexcept {
    return boost::hash_range(t.values().begin(), t.values().end());
  }
};

namespace detail {

class term_parser {
 public:
  term_parser(menger_algebra const& alg, std::string_view text) : alg_(alg), text_(text) {}

  translation_term parse() {
    auto top = parse_arg();
    if (peek().kind != token_kind::end) {
      fail(error_code::syntax_error, "unexpected '" + std::string(peek().text) + "'");
    }
    if (!top.term) fail(error_code::no_variable, "term has no variable");
    return std::move(*top.term);
  }

 private:
  enum class token_kind { ident, open, close, end };

  struct token {
    token_kind kind;
    std::string_view text;
    std::size_t pos;
  };

  struct parsed_arg {
    std::optional<translation_term> term;
    element constant = 0;
  };

  [[noreturn]] void fail(error_code code, std::string const& message) const {
    throw error(code, message + " at offset " + std::to_string(pos_));
  }

  token peek() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == text_.size()) return {token_kind::end, {}, pos_};
    char const c = text_[pos_];
    if (c == '[') return {token_kind::open, text_.substr(pos_, 1), pos_};
    if (c == ']') return {token_kind::close, text_.substr(pos_, 1), pos_};
    std::size_t end = pos_;
    while (end < text_.size() && text_[end] != '[' && text_[end] != ']' &&
           !std::isspace(static_cast<unsigned char>(text_[end]))) {
      ++end;
    }
    return {token_kind::ident, text_.substr(pos_, end - pos_), pos_};
  }

  void advance(token const& t) { pos_ = t.pos + t.text.size(); }

  element lookup(std::string_view name) const {
    auto e = alg_.find(name);
    if (!e) fail(error_code::unknown_element, "unknown element '" + std::string(name) + "'");
    return *e;
  }

  parsed_arg parse_arg() {
    auto tok = peek();
    if (tok.kind == token_kind::end) fail(error_code::syntax_error, "unexpected end of term");
    if (tok.kind != token_kind::ident) {
      fail(error_code::syntax_error, "unexpected '" + std::string(tok.text) + "'");
    }
    advance(tok);
    if (peek().kind != token_kind::open) {
      if (tok.text == "x") return {translation_term::variable(), 0};
      return {std::nullopt, lookup(tok.text)};
    }
    element const head = lookup(tok.text);
    advance(peek());
    std::vector<parsed_arg> args;
    while (peek().kind != token_kind::close) {
      if (peek().kind == token_kind::end) fail(error_code::syntax_error, "missing ']'");
      args.push_back(parse_arg());
    }
    advance(peek());
    if (args.size() != alg_.rank()) {
      fail(error_code::arity_mismatch, "'" + std::string(tok.text) + "' applied to " +
                                           std::to_string(args.size()) + " arguments, rank is " +
                                           std::to_string(alg_.rank()));
    }
    auto const variables = std::count_if(args.begin(), args.end(),
                                         [](parsed_arg const& a) { return a.term.has_value(); });
    if (variables == 0) fail(error_code::no_variable, "no argument contains the variable");
    if (variables > 1) fail(error_code::multiple_variables, "more than one argument contains x");
    std::size_t slot = 0;
    std::vector<element> constants(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i].term) slot = i;
      else constants[i] = args[i].constant;
    }
    return {args[slot].term->wrap(head, slot, std::move(constants)), 0};
  }

  menger_algebra const& alg_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline translation_term parse_term(menger_algebra const& alg, std::string_view text) {
  return detail::term_parser(alg, text).parse();
}

inline std::string format_term(menger_algebra const& alg, translation_term const& term) {
  auto const layers = term.layers();
  std::string out;
  for (auto const& layer : layers) {
    out += alg.name(layer.head);
    out += '[';
    for (std::size_t j = 0; j < layer.slot; ++j) out += alg.name(layer.args[j]) + ' ';
  }
  out += 'x';
  for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
    for (std::size_t j = it->slot + 1; j < it->args.size(); ++j) out += ' ' + alg.name(it->args[j]);
    out += ']';
  }
  return out;
}

inline translation_table eval_term(menger_algebra const& alg, translation_term const& term) {
  auto const layers = term.layers();
  std::vector<element> values(alg.size());
  std::vector<element> xs;
  for (element g = 0; g < alg.size(); ++g) {
    element v = g;
    for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
      xs = it->args;
      xs[it->slot] = v;
      v = alg.apply(it->head, xs);
    }
    values[g] = v;
  }
  return translation_table(std::move(values));
}

/// (outer ∘ inner)(g) = outer(inner(g)).
inline translation_table compose(translation_table const& outer, translation_table const& inner) {
  std::vector<element> values(inner.size());
  for (std::size_t g = 0; g < inner.size(); ++g) values[g] = outer(inner(static_cast<element>(g)));
  return translation_table(std::move(values));
}

/// t^ā: every constant argument c becomes c[ā]; heads and x are untouched.
inline translation_term associate_polynomial(menger_algebra const& alg,
                                             translation_term const& term, arg_vector const& a) {
  translation_term out = term;
  for (auto& layer : out.layers_) {
    for (std::size_t j = 0; j < layer.args.size(); ++j) {
      if (j != layer.slot) layer.args[j] = alg.apply(layer.args[j], a);
    }
  }
  return out;
}

inline constexpr std::size_t default_translation_cap = 100'000;

/// All elementary translations of an algebra, deduplicated by table, in
/// discovery order (identity first), each with a witness polynomial.
class translation_closure {
 public:
  std::size_t size() const noexcept { return tables_.size(); }
  std::size_t carrier_size() const noexcept { return carrier_size_; }

  std::vector<translation_table> const& tables() const noexcept { return tables_; }
  translation_table const& table(std::size_t t) const { return tables_.at(t); }
  translation_term const& witness(std::size_t t) const { return witnesses_.at(t); }

  /// t(g) for the t-th table.
  element apply(std::size_t t, element g) const noexcept { return flat_[t * carrier_size_ + g]; }

  std::optional<std::size_t> find(translation_table const& table) const {
    auto it = index_.find(table);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  friend translation_closure make_translation_closure(menger_algebra const&, std::size_t);

  void add(translation_table table, translation_term term) {
    index_.emplace(table, tables_.size());
    flat_.insert(flat_.end(), table.values().begin(), table.values().end());
    tables_.push_back(std::move(table));
    witnesses_.push_back(std::move(term));
  }

  std::size_t carrier_size_ = 0;
  std::vector<translation_table> tables_;
  std::vector<translation_term> witnesses_;
  std::vector<element> flat_;
  std::unordered_map<translation_table, std::size_t, translation_table_hash> index_;
};

/// Least set of tables containing the identity and closed under
/// t ↦ a[b_1 .. t .. b_n]. Generations are explored breadth-first with
/// members, heads, slots and constants in ascending order; a table first
/// reached in some generation keeps the shortest (then lexicographically
/// least) formatted term among that generation's candidates.
inline translation_closure make_translation_closure(menger_algebra const& alg,
                                                    std::size_t cap = default_translation_cap) {
  if (cap == 0) throw error(error_code::invalid_argument, "closure cap must be at least 1");
  auto const m = alg.size();
  auto const n = alg.rank();

  struct step {
    element head;
    std::size_t slot;
    std::vector<element> args;
    std::vector<element> map;  // g ↦ head[args|_slot g]
  };
  std::vector<step> steps;
  std::size_t const const_tuples = alg.tuple_count() / m;
  std::vector<element> consts(n > 0 ? n - 1 : 0);
  for (element a = 0; a < m; ++a) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t r = 0; r < const_tuples; ++r) {
        std::size_t rr = r;
        for (std::size_t j = consts.size(); j-- > 0;) {
          consts[j] = static_cast<element>(rr % m);
          rr /= m;
        }
        step s{a, i, std::vector<element>(n, 0), std::vector<element>(m)};
        for (std::size_t j = 0, k = 0; j < n; ++j) {
          if (j != i) s.args[j] = consts[k++];
        }
        auto xs = s.args;
        for (element g = 0; g < m; ++g) {
          xs[i] = g;
          s.map[g] = alg.apply(a, xs);
        }
        steps.push_back(std::move(s));
      }
    }
  }

  translation_closure closure;
  closure.carrier_size_ = m;
  closure.add(translation_table::identity(m), translation_term::variable());

  struct candidate {
    translation_table table;
    translation_term term;
    std::string text;
  };

  std::size_t frontier_begin = 0;
  while (frontier_begin < closure.size()) {
    std::size_t const frontier_end = closure.size();
    std::vector<candidate> found;
    std::unordered_map<translation_table, std::size_t, translation_table_hash> found_index;
    for (std::size_t t = frontier_begin; t < frontier_end; ++t) {
      for (auto const& s : steps) {
        std::vector<element> values(m);
        for (element g = 0; g < m; ++g) values[g] = s.map[closure.apply(t, g)];
        translation_table table(std::move(values));
        if (closure.find(table)) continue;
        auto term = closure.witness(t).wrap(s.head, s.slot, s.args);
        auto text = format_term(alg, term);
        auto [it, inserted] = found_index.try_emplace(table, found.size());
        if (inserted) {
          if (closure.size() + found.size() >= cap) {
            throw error(error_code::capacity_exceeded,
                        "more than " + std::to_string(cap) + " distinct translations");
          }
          found.push_back({std::move(table), std::move(term), std::move(text)});
          continue;
        }
        auto& best = found[it->second];
        if (text.size() < best.text.size() ||
            (text.size() == best.text.size() && text < best.text)) {
          best.term = std::move(term);
          best.text = std::move(text);
        }
      }
    }
    frontier_begin = frontier_end;
    for (auto& c : found) closure.add(std::move(c.table), std::move(c.term));
  }
  return closure;
}

}  // namespace menger
