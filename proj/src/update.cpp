#include "bsnet/update.hpp"

#include <unordered_map>

#include "bsnet/error.hpp"

#if defined(__BMI2__)
#include <immintrin.h>
#endif

namespace bsnet {

Configuration step_subset(const BooleanNetwork& f, std::span<const std::size_t> subset, const Configuration& x) {
  check_configuration(f, x);
  Word next = x.bits();
  for (std::size_t i : subset) {
    if (i >= f.size()) throw StructureError("update subset mentions a missing component");
    const Word bit = Word{1} << i;
    next = f.evaluate(i, x.bits()) ? (next | bit) : (next & ~bit);
  }
  return Configuration(f.size(), next);
}

Configuration step_schedule(const BooleanNetwork& f, const UpdateSchedule& w, const Configuration& x) {
  if (w.size() != f.size()) throw ScheduleError("schedule does not partition the network's components");
  Configuration current = x;
  for (const auto& block : w.blocks()) current = step_subset(f, block, current);
  return current;
}

BooleanNetwork parallelize(const BooleanNetwork& f, const UpdateSchedule& w) {
  if (w.size() != f.size()) throw ScheduleError("schedule does not partition the network's components");
  std::vector<Expr> rewritten(f.size());
  std::vector<bool> done(f.size(), false);
  for (const auto& block : w.blocks()) {
    // components of this block see the already-rewritten earlier blocks only
    std::vector<Expr> fresh;
    fresh.reserve(block.size());
    for (std::size_t j : block) {
      fresh.push_back(substitute(f.local(j), [&](std::size_t i) -> std::optional<Expr> {
        if (done[i]) return rewritten[i];
        return std::nullopt;
      }));
    }
    for (std::size_t b = 0; b < block.size(); ++b) {
      rewritten[block[b]] = std::move(fresh[b]);
      done[block[b]] = true;
    }
  }
  return BooleanNetwork(f.names(), std::move(rewritten));
}

CompiledNetwork::Program CompiledNetwork::flatten(const Expr& e) {
  Program prog;
  std::unordered_map<const void*, std::uint32_t> slot;
  auto visit = [&](auto&& self, const Expr& node) -> std::uint32_t {
    if (auto it = slot.find(node.identity()); it != slot.end()) return it->second;
    Program::Instr instr{node.op(), 0, 0};
    if (node.op() == Expr::Op::constant) {
      instr.payload = node.value() ? 1 : 0;
    } else if (node.op() == Expr::Op::variable) {
      instr.payload = static_cast<std::uint32_t>(node.index());
    } else {
      std::vector<std::uint32_t> args;
      args.reserve(node.operands().size());
      for (const Expr& child : node.operands()) args.push_back(self(self, child));
      instr.payload = static_cast<std::uint32_t>(prog.operands.size());
      instr.count = static_cast<std::uint32_t>(args.size());
      prog.operands.insert(prog.operands.end(), args.begin(), args.end());
    }
    prog.code.push_back(instr);
    auto id = static_cast<std::uint32_t>(prog.code.size() - 1);
    slot.emplace(node.identity(), id);
    return id;
  };
  visit(visit, e);
  return prog;
}

bool CompiledNetwork::Program::run(Word x, std::vector<std::uint8_t>& scratch) const {
  scratch.resize(code.size());
  for (std::size_t pc = 0; pc < code.size(); ++pc) {
    const Instr& in = code[pc];
    const std::uint32_t* args = operands.data() + in.payload;
    std::uint8_t v = 0;
    switch (in.op) {
      case Expr::Op::constant:
        v = static_cast<std::uint8_t>(in.payload);
        break;
      case Expr::Op::variable:
        v = static_cast<std::uint8_t>((x >> in.payload) & 1u);
        break;
      case Expr::Op::negation:
        v = scratch[args[0]] ^ 1u;
        break;
      case Expr::Op::conjunction:
        v = 1;
        for (std::uint32_t a = 0; a < in.count && v; ++a) v &= scratch[args[a]];
        break;
      case Expr::Op::disjunction:
        for (std::uint32_t a = 0; a < in.count && !v; ++a) v |= scratch[args[a]];
        break;
      case Expr::Op::exclusive_or:
        for (std::uint32_t a = 0; a < in.count; ++a) v ^= scratch[args[a]];
        break;
    }
    scratch[pc] = v;
  }
  return scratch.back() != 0;
}

Word CompiledNetwork::Program::run_sliced(std::span<const Word> lanes, std::span<const std::size_t> var_slot,
                                          std::vector<Word>& scratch) const {
  scratch.resize(code.size());
  for (std::size_t pc = 0; pc < code.size(); ++pc) {
    const Instr& in = code[pc];
    const std::uint32_t* args = operands.data() + in.payload;
    Word v = 0;
    switch (in.op) {
      case Expr::Op::constant:
        v = in.payload ? ~Word{0} : 0;
        break;
      case Expr::Op::variable:
        v = lanes[var_slot[in.payload]];
        break;
      case Expr::Op::negation:
        v = ~scratch[args[0]];
        break;
      case Expr::Op::conjunction:
        v = ~Word{0};
        for (std::uint32_t a = 0; a < in.count; ++a) v &= scratch[args[a]];
        break;
      case Expr::Op::disjunction:
        for (std::uint32_t a = 0; a < in.count; ++a) v |= scratch[args[a]];
        break;
      case Expr::Op::exclusive_or:
        for (std::uint32_t a = 0; a < in.count; ++a) v ^= scratch[args[a]];
        break;
    }
    scratch[pc] = v;
  }
  return scratch.back();
}

CompiledNetwork::CompiledNetwork(const BooleanNetwork& f) : locals_(f.size()) {
  if (f.size() > kMaxComponents) throw SizeError("network wider than 64 components cannot be simulated");
  static constexpr Word kLanePattern[6] = {0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
                                           0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
  std::vector<Word> scratch;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Local& local = locals_[i];
    local.support = bsnet::support(f.local(i));
    for (std::size_t v : local.support) local.support_mask |= Word{1} << v;
    local.program = flatten(f.local(i));
    const std::size_t d = local.support.size();
    if (d > table_support_limit) continue;

    std::vector<std::size_t> var_slot(f.size(), 0);
    for (std::size_t p = 0; p < d; ++p) var_slot[local.support[p]] = p;
    const std::size_t chunks = d <= 6 ? 1 : (std::size_t{1} << (d - 6));
    local.table.assign(chunks, 0);
    std::vector<Word> lanes(d);
    for (std::size_t chunk = 0; chunk < chunks; ++chunk) {
      for (std::size_t p = 0; p < d; ++p) {
        lanes[p] = p < 6 ? kLanePattern[p] : (((chunk >> (p - 6)) & 1u) ? ~Word{0} : 0);
      }
      local.table[chunk] = local.program.run_sliced(lanes, var_slot, scratch);
    }
    local.program = Program{};
  }
}

bool CompiledNetwork::evaluate(std::size_t i, Word x) const {
  const Local& local = locals_[i];
  if (!local.table.empty()) {
#if defined(__BMI2__)
    const Word idx = _pext_u64(x, local.support_mask);
#else
    Word idx = 0;
    for (std::size_t p = 0; p < local.support.size(); ++p) idx |= ((x >> local.support[p]) & 1u) << p;
#endif
    return ((local.table[idx >> 6] >> (idx & 63u)) & 1u) != 0;
  }
  thread_local std::vector<std::uint8_t> scratch;
  return local.program.run(x, scratch);
}

Stepper::Stepper(std::shared_ptr<const CompiledNetwork> net, const UpdateSchedule& w) : net_(std::move(net)) {
  if (w.size() != net_->size()) throw ScheduleError("schedule does not partition the network's components");
  for (const auto& block : w.blocks()) {
    Word mask = 0;
    for (std::size_t i : block) mask |= Word{1} << i;
    blocks_.push_back(block);
    block_masks_.push_back(mask);
  }
}

Stepper::Stepper(const BooleanNetwork& f, const UpdateSchedule& w)
    : Stepper(std::make_shared<const CompiledNetwork>(f), w) {}

Word Stepper::operator()(Word x) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    Word values = 0;
    for (std::size_t i : blocks_[b]) {
      if (net_->evaluate(i, x)) values |= Word{1} << i;
    }
    x = (x & ~block_masks_[b]) | values;
  }
  return x;
}

Word Stepper::iterate(Word x, std::size_t count) const {
  for (std::size_t s = 0; s < count; ++s) x = (*this)(x);
  return x;
}

}  // namespace bsnet
