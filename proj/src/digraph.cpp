#include "bsnet/digraph.hpp"

#include <algorithm>

#include "bsnet/error.hpp"
#include "bsnet/update.hpp"

namespace bsnet {

std::string to_string(Sign s) {
  switch (s) {
    case Sign::positive:
      return "+";
    case Sign::negative:
      return "-";
    case Sign::both:
      return "+-";
  }
  return "?";
}

SignedDigraph::SignedDigraph(std::size_t vertices, std::vector<Arc> arcs) : vertices_(vertices), arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
}

std::optional<Sign> SignedDigraph::sign(std::size_t from, std::size_t to) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), std::pair{from, to}, [](const Arc& a, const auto& key) {
    return a.from != key.first ? a.from < key.first : a.to < key.second;
  });
  if (it != arcs_.end() && it->from == from && it->to == to) return it->sign;
  return std::nullopt;
}

std::vector<std::size_t> SignedDigraph::in_neighbors(std::size_t to) const {
  std::vector<std::size_t> out;
  for (const Arc& a : arcs_) {
    if (a.to == to) out.push_back(a.from);
  }
  return out;
}

namespace {

Word deposit(Word idx, const std::vector<std::size_t>& positions) {
  Word x = 0;
  for (std::size_t p = 0; p < positions.size(); ++p) {
    if ((idx >> p) & 1u) x |= Word{1} << positions[p];
  }
  return x;
}

}  // namespace

SignedDigraph interaction_digraph(const BooleanNetwork& f, std::size_t cap) {
  if (f.size() > cap) {
    throw SizeError("interaction digraph refused: " + std::to_string(f.size()) + " components exceed the cap of " +
                    std::to_string(cap));
  }
  const CompiledNetwork net(f);
  std::vector<Arc> arcs;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const std::vector<std::size_t> vars(net.support(j).begin(), net.support(j).end());
    const std::size_t d = vars.size();
    std::vector<bool> up(d, false);
    std::vector<bool> down(d, false);
    for (Word idx = 0; idx < (Word{1} << d); ++idx) {
      const Word x = deposit(idx, vars);
      const bool fx = net.evaluate(j, x);
      for (std::size_t p = 0; p < d; ++p) {
        if ((idx >> p) & 1u) continue;
        const bool fy = net.evaluate(j, x | (Word{1} << vars[p]));
        if (!fx && fy) up[p] = true;
        if (fx && !fy) down[p] = true;
      }
    }
    for (std::size_t p = 0; p < d; ++p) {
      if (up[p] && down[p]) {
        arcs.push_back({vars[p], j, Sign::both});
      } else if (up[p]) {
        arcs.push_back({vars[p], j, Sign::positive});
      } else if (down[p]) {
        arcs.push_back({vars[p], j, Sign::negative});
      }
    }
  }
  return SignedDigraph(f.size(), std::move(arcs));
}

std::vector<LocalTruthTable> truth_table_export(const BooleanNetwork& f, std::size_t max_in_degree, std::size_t cap) {
  const SignedDigraph g = interaction_digraph(f, cap);
  const CompiledNetwork net(f);
  std::vector<LocalTruthTable> out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    auto inputs = g.in_neighbors(j);
    if (inputs.size() > max_in_degree) {
      throw SizeError("component '" + f.name(j) + "' has in-degree " + std::to_string(inputs.size()) +
                      ", above the cap of " + std::to_string(max_in_degree));
    }
    std::vector<bool> table(std::size_t{1} << inputs.size());
    for (Word idx = 0; idx < table.size(); ++idx) table[idx] = net.evaluate(j, deposit(idx, inputs));
    out[j] = {std::move(inputs), std::move(table)};
  }
  return out;
}

std::string to_dot(const SignedDigraph& g, const BooleanNetwork& f) {
  auto quoted = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::string out = "digraph interaction {\n";
  for (std::size_t i = 0; i < f.size(); ++i) out += "  " + quoted(f.name(i)) + ";\n";
  for (const Arc& a : g.arcs()) {
    out += "  " + quoted(f.name(a.from)) + " -> " + quoted(f.name(a.to));
    if (a.sign == Sign::negative) {
      out += " [color=red, arrowhead=tee]";
    } else if (a.sign == Sign::both) {
      out += " [style=dashed]";
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace bsnet
