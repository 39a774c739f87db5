#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bsnet/network.hpp"

namespace bsnet {

enum class Sign : std::uint8_t { positive, negative, both };

/// '+', '-' or "+-".
std::string to_string(Sign s);

struct Arc {
  std::size_t from;
  std::size_t to;
  Sign sign;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Interaction digraph with signed arcs, sorted by (from, to).
class SignedDigraph {
 public:
  SignedDigraph(std::size_t vertices, std::vector<Arc> arcs);

  std::size_t vertex_count() const noexcept { return vertices_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  std::optional<Sign> sign(std::size_t from, std::size_t to) const;
  /// Sources of the arcs entering `to`, ascending.
  std::vector<std::size_t> in_neighbors(std::size_t to) const;

  friend bool operator==(const SignedDigraph&, const SignedDigraph&) = default;

 private:
  std::size_t vertices_;
  std::vector<Arc> arcs_;
};

inline constexpr std::size_t kDefaultExhaustionCap = 24;

/// Arc (i,j) exists iff flipping x_i changes f_j for some x. It is positive
/// when raising x_i can raise f_j, negative when raising x_i can lower f_j,
/// and both when each happens somewhere. Every local function is exhausted
/// over its syntactic support. Throws SizeError when the network has more
/// than `cap` components.
SignedDigraph interaction_digraph(const BooleanNetwork& f, std::size_t cap = kDefaultExhaustionCap);

/// Local function of one component tabulated over its in-neighbors.
/// Entry `idx` has in-neighbor p at bit p of idx.
struct LocalTruthTable {
  std::vector<std::size_t> inputs;
  std::vector<bool> table;
};

/// Tabulates every local function over its in-neighbors. Throws SizeError
/// when some in-degree exceeds `max_in_degree` or the network exceeds `cap`.
std::vector<LocalTruthTable> truth_table_export(const BooleanNetwork& f, std::size_t max_in_degree = 16,
                                                std::size_t cap = kDefaultExhaustionCap);

/// Graphviz rendering: negative arcs red with tee heads, mixed arcs dashed.
std::string to_dot(const SignedDigraph& g, const BooleanNetwork& f);

}  // namespace bsnet
