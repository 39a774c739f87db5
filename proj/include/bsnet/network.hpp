#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bsnet/expr.hpp"

namespace bsnet {

/// A point of {0,1}^n. Textual form lists x_1 x_2 ... x_n left to right.
class Configuration {
 public:
  Configuration() = default;
  /// Bits above `size` are cleared.
  Configuration(std::size_t size, Word bits);

  /// Parses a string of '0'/'1' characters; throws ParseError otherwise.
  static Configuration parse(std::string_view text);

  std::size_t size() const noexcept { return size_; }
  Word bits() const noexcept { return bits_; }
  bool operator[](std::size_t i) const noexcept { return ((bits_ >> i) & 1u) != 0; }

  /// x + e_i.
  Configuration flipped(std::size_t i) const;
  Configuration with(std::size_t i, bool value) const;

  std::string to_string() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;

 private:
  std::size_t size_ = 0;
  Word bits_ = 0;
};

/// Mask with the low `n` bits set.
constexpr Word low_mask(std::size_t n) noexcept {
  return n >= 64 ? ~Word{0} : ((Word{1} << n) - 1);
}

/// n named components, each with its local function f_i.
class BooleanNetwork {
 public:
  BooleanNetwork() = default;
  /// Throws StructureError when names are duplicated, counts differ, or a
  /// local function mentions an index >= n.
  BooleanNetwork(std::vector<std::string> names, std::vector<Expr> locals);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<Expr>& locals() const noexcept { return locals_; }
  const Expr& local(std::size_t i) const { return locals_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// f_i(x).
  bool evaluate(std::size_t i, Word x) const { return locals_[i].evaluate(x); }

 private:
  std::vector<std::string> names_;
  std::vector<Expr> locals_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Truth value of `e` under `x`. Throws StructureError when `e` mentions a
/// component outside `x`.
bool eval_expr(const Expr& e, const Configuration& x);

/// Throws StructureError unless `x` has the network's size and the network
/// fits in a packed word.
void check_configuration(const BooleanNetwork& f, const Configuration& x);

}  // namespace bsnet
