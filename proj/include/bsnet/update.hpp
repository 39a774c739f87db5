#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "bsnet/network.hpp"
#include "bsnet/schedule.hpp"

namespace bsnet {

/// f^(I)(x): components in `subset` take f_i(x), the others keep x_i.
Configuration step_subset(const BooleanNetwork& f, std::span<const std::size_t> subset, const Configuration& x);

/// f^(W)(x) = f^(W_t) o ... o f^(W_1)(x).
Configuration step_schedule(const BooleanNetwork& f, const UpdateSchedule& w, const Configuration& x);

/// Network f' with f'(x) = f^(W)(x) under parallel update. Each component of
/// block W_b has its references to components of earlier blocks replaced by
/// those components' (already rewritten) local functions.
BooleanNetwork parallelize(const BooleanNetwork& f, const UpdateSchedule& w);

/// Local functions compiled for fast repeated evaluation on packed words.
///
/// A local function whose support has at most `table_support_limit`
/// variables becomes a lookup table indexed by the support bits; larger ones
/// are evaluated through a flattened straight-line program.
class CompiledNetwork {
 public:
  static constexpr std::size_t table_support_limit = 20;

  explicit CompiledNetwork(const BooleanNetwork& f);

  std::size_t size() const noexcept { return locals_.size(); }
  bool evaluate(std::size_t i, Word x) const;
  /// Sorted support of f_i.
  std::span<const std::size_t> support(std::size_t i) const { return locals_[i].support; }

 private:
  struct Program {
    struct Instr {
      Expr::Op op;
      std::uint32_t payload;  // constant value, variable index or operand start
      std::uint32_t count;    // operand count
    };
    std::vector<Instr> code;
    std::vector<std::uint32_t> operands;
    bool run(Word x, std::vector<std::uint8_t>& scratch) const;
    Word run_sliced(std::span<const Word> lanes, std::span<const std::size_t> var_slot,
                    std::vector<Word>& scratch) const;
  };
  struct Local {
    std::vector<std::size_t> support;
    Word support_mask = 0;
    std::vector<Word> table;  // empty when evaluated through `program`
    Program program;
  };

  static Program flatten(const Expr& e);

  std::vector<Local> locals_;
};

/// f^(W) compiled for a fixed schedule.
class Stepper {
 public:
  Stepper(std::shared_ptr<const CompiledNetwork> net, const UpdateSchedule& w);
  Stepper(const BooleanNetwork& f, const UpdateSchedule& w);

  std::size_t size() const noexcept { return net_->size(); }
  Word operator()(Word x) const;
  /// (f^(W))^count (x).
  Word iterate(Word x, std::size_t count) const;

 private:
  std::shared_ptr<const CompiledNetwork> net_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<Word> block_masks_;
};

}  // namespace bsnet
