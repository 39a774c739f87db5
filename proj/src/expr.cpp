#include "bsnet/expr.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "bsnet/error.hpp"

namespace bsnet {

struct Expr::Node {
  Op op;
  std::uint32_t payload;
  std::vector<Expr> operands;
};

Expr::Expr() : node_(std::make_shared<const Node>(Node{Op::constant, 0, {}})) {}

Expr Expr::constant(bool value) {
  return Expr(std::make_shared<const Node>(Node{Op::constant, value ? 1u : 0u, {}}));
}

Expr Expr::variable(std::size_t index) {
  if (index >= (std::size_t{1} << 31)) throw StructureError("variable index out of range");
  return Expr(std::make_shared<const Node>(Node{Op::variable, static_cast<std::uint32_t>(index), {}}));
}

Expr Expr::make(Op op, std::vector<Expr> operands) {
  return Expr(std::make_shared<const Node>(Node{op, 0, std::move(operands)}));
}

Expr Expr::negation(Expr operand) { return make(Op::negation, {std::move(operand)}); }

Expr Expr::conjunction(std::vector<Expr> operands) {
  if (operands.empty()) return constant(true);
  if (operands.size() == 1) return std::move(operands.front());
  return make(Op::conjunction, std::move(operands));
}

Expr Expr::disjunction(std::vector<Expr> operands) {
  if (operands.empty()) return constant(false);
  if (operands.size() == 1) return std::move(operands.front());
  return make(Op::disjunction, std::move(operands));
}

Expr Expr::exclusive_or(std::vector<Expr> operands) {
  if (operands.empty()) return constant(false);
  if (operands.size() == 1) return std::move(operands.front());
  return make(Op::exclusive_or, std::move(operands));
}

Expr::Op Expr::op() const noexcept { return node_->op; }
bool Expr::value() const noexcept { return node_->payload != 0; }
std::size_t Expr::index() const noexcept { return node_->payload; }
std::span<const Expr> Expr::operands() const noexcept { return node_->operands; }

bool Expr::same_leaf(const Expr& other) const noexcept {
  if (node_ == other.node_) return true;
  if (!is_leaf() || op() != other.op()) return false;
  return node_->payload == other.node_->payload;
}

bool Expr::evaluate(Word x) const {
  switch (op()) {
    case Op::constant:
      return value();
    case Op::variable:
      if (index() >= kMaxComponents) throw StructureError("variable index exceeds configuration width");
      return ((x >> index()) & 1u) != 0;
    case Op::negation:
      return !operands()[0].evaluate(x);
    case Op::conjunction:
      return std::all_of(operands().begin(), operands().end(), [x](const Expr& e) { return e.evaluate(x); });
    case Op::disjunction:
      return std::any_of(operands().begin(), operands().end(), [x](const Expr& e) { return e.evaluate(x); });
    case Op::exclusive_or: {
      bool acc = false;
      for (const Expr& e : operands()) acc ^= e.evaluate(x);
      return acc;
    }
  }
  return false;
}

Expr operator!(const Expr& e) { return Expr::negation(e); }
Expr operator&(const Expr& a, const Expr& b) { return Expr::conjunction({a, b}); }
Expr operator|(const Expr& a, const Expr& b) { return Expr::disjunction({a, b}); }
Expr operator^(const Expr& a, const Expr& b) { return Expr::exclusive_or({a, b}); }

Expr if_then_else(const Expr& condition, const Expr& then_branch, const Expr& else_branch) {
  return (condition & then_branch) | ((!condition) & else_branch);
}

namespace {

template <typename Visit>
void for_each_node(const Expr& root, Visit&& visit) {
  std::unordered_set<const void*> seen;
  std::vector<Expr> stack{root};
  while (!stack.empty()) {
    Expr e = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(e.identity()).second) continue;
    visit(e);
    for (const Expr& child : e.operands()) stack.push_back(child);
  }
}

}  // namespace

std::vector<std::size_t> support(const Expr& e) {
  std::vector<std::size_t> vars;
  for_each_node(e, [&](const Expr& node) {
    if (node.op() == Expr::Op::variable) vars.push_back(node.index());
  });
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::size_t variable_bound(const Expr& e) {
  std::size_t bound = 0;
  for_each_node(e, [&](const Expr& node) {
    if (node.op() == Expr::Op::variable) bound = std::max(bound, node.index() + 1);
  });
  return bound;
}

std::size_t dag_size(const Expr& e) {
  std::size_t count = 0;
  for_each_node(e, [&](const Expr&) { ++count; });
  return count;
}

Expr substitute(const Expr& e, const std::function<std::optional<Expr>(std::size_t)>& replacement) {
  std::unordered_map<const void*, Expr> memo;
  std::function<Expr(const Expr&)> rewrite = [&](const Expr& node) -> Expr {
    if (auto it = memo.find(node.identity()); it != memo.end()) return it->second;
    Expr result = node;
    switch (node.op()) {
      case Expr::Op::constant:
        break;
      case Expr::Op::variable:
        if (auto r = replacement(node.index())) result = *r;
        break;
      default: {
        std::vector<Expr> children;
        children.reserve(node.operands().size());
        bool changed = false;
        for (const Expr& child : node.operands()) {
          children.push_back(rewrite(child));
          changed = changed || children.back().identity() != child.identity();
        }
        if (changed) {
          switch (node.op()) {
            case Expr::Op::negation:
              result = Expr::negation(children[0]);
              break;
            case Expr::Op::conjunction:
              result = Expr::conjunction(std::move(children));
              break;
            case Expr::Op::disjunction:
              result = Expr::disjunction(std::move(children));
              break;
            default:
              result = Expr::exclusive_or(std::move(children));
              break;
          }
        }
      }
    }
    memo.emplace(node.identity(), result);
    return result;
  };
  return rewrite(e);
}

}  // namespace bsnet
