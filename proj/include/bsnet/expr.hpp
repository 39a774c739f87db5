#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace bsnet {

/// Packed configuration word: component i is bit i.
using Word = std::uint64_t;

/// Largest network the packed simulation core can hold.
inline constexpr std::size_t kMaxComponents = 64;

/// Immutable propositional expression over component states.
///
/// An Expr is a cheap handle onto a shared node; sub-expressions are shared
/// rather than copied, so expressions built by substitution form a DAG.
/// Conjunction, disjunction and exclusive-or are n-ary.
class Expr {
 public:
  enum class Op : std::uint8_t { constant, variable, negation, conjunction, disjunction, exclusive_or };

  /// The constant 0.
  Expr();

  static Expr constant(bool value);
  static Expr variable(std::size_t index);
  static Expr negation(Expr operand);
  /// Empty list gives constant 1, a single operand is returned unchanged.
  static Expr conjunction(std::vector<Expr> operands);
  /// Empty list gives constant 0, a single operand is returned unchanged.
  static Expr disjunction(std::vector<Expr> operands);
  /// Empty list gives constant 0, a single operand is returned unchanged.
  static Expr exclusive_or(std::vector<Expr> operands);

  Op op() const noexcept;
  bool is_leaf() const noexcept { return op() == Op::constant || op() == Op::variable; }
  /// Value of a constant node.
  bool value() const noexcept;
  /// Component index of a variable node.
  std::size_t index() const noexcept;
  std::span<const Expr> operands() const noexcept;

  /// Truth value under a packed configuration.
  bool evaluate(Word x) const;

  /// Node identity; equal handles share one node.
  const void* identity() const noexcept { return node_.get(); }

  /// Structural equality of leaves; composite nodes compare by identity.
  bool same_leaf(const Expr& other) const noexcept;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expr make(Op op, std::vector<Expr> operands);

  std::shared_ptr<const Node> node_;
};

Expr operator!(const Expr& e);
Expr operator&(const Expr& a, const Expr& b);
Expr operator|(const Expr& a, const Expr& b);
Expr operator^(const Expr& a, const Expr& b);

/// if-then-else built from the basic connectives: (c & t) | (!c & e).
Expr if_then_else(const Expr& condition, const Expr& then_branch, const Expr& else_branch);

/// Sorted list of the component indices an expression mentions.
std::vector<std::size_t> support(const Expr& e);

/// Largest variable index plus one (0 for variable-free expressions).
std::size_t variable_bound(const Expr& e);

/// Replaces variables for which `replacement` returns a value. Shared
/// sub-expressions are rewritten once, so the result keeps the DAG shape.
Expr substitute(const Expr& e, const std::function<std::optional<Expr>(std::size_t)>& replacement);

/// Number of distinct nodes reachable from `e`.
std::size_t dag_size(const Expr& e);

}  // namespace bsnet
