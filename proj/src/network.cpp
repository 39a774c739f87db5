#include "bsnet/network.hpp"

#include "bsnet/error.hpp"

namespace bsnet {

Configuration::Configuration(std::size_t size, Word bits) : size_(size), bits_(bits & low_mask(size)) {
  if (size > kMaxComponents) throw SizeError("configuration wider than 64 components");
}

Configuration Configuration::parse(std::string_view text) {
  if (text.size() > kMaxComponents) throw SizeError("configuration wider than 64 components");
  Word bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= Word{1} << i;
    } else if (text[i] != '0') {
      throw ParseError("configuration must consist of 0 and 1", 1, i + 1);
    }
  }
  return Configuration(text.size(), bits);
}

Configuration Configuration::flipped(std::size_t i) const {
  if (i >= size_) throw StructureError("flip index out of range");
  return Configuration(size_, bits_ ^ (Word{1} << i));
}

Configuration Configuration::with(std::size_t i, bool value) const {
  if (i >= size_) throw StructureError("component index out of range");
  Word b = bits_ & ~(Word{1} << i);
  if (value) b |= Word{1} << i;
  return Configuration(size_, b);
}

std::string Configuration::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if ((*this)[i]) s[i] = '1';
  }
  return s;
}

BooleanNetwork::BooleanNetwork(std::vector<std::string> names, std::vector<Expr> locals)
    : names_(std::move(names)), locals_(std::move(locals)) {
  if (names_.size() != locals_.size()) throw StructureError("one local function per component is required");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second) throw StructureError("duplicate component name '" + names_[i] + "'");
  }
  for (std::size_t i = 0; i < locals_.size(); ++i) {
    if (variable_bound(locals_[i]) > names_.size()) {
      throw StructureError("local function of '" + names_[i] + "' refers to a missing component");
    }
  }
}

std::optional<std::size_t> BooleanNetwork::index_of(std::string_view name) const {
  if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
  return std::nullopt;
}

bool eval_expr(const Expr& e, const Configuration& x) {
  if (variable_bound(e) > x.size()) throw StructureError("expression refers to a component outside the configuration");
  return e.evaluate(x.bits());
}

void check_configuration(const BooleanNetwork& f, const Configuration& x) {
  if (f.size() > kMaxComponents) throw SizeError("network wider than 64 components cannot be simulated");
  if (x.size() != f.size()) {
    throw StructureError("configuration has " + std::to_string(x.size()) + " components, network has " +
                         std::to_string(f.size()));
  }
}

}  // namespace bsnet
