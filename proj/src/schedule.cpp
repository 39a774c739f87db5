#include "bsnet/schedule.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "bsnet/error.hpp"

namespace bsnet {

UpdateSchedule::UpdateSchedule(std::size_t n, std::vector<std::vector<std::size_t>> blocks)
    : blocks_(std::move(blocks)), block_of_(n, n) {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    auto& block = blocks_[b];
    if (block.empty()) throw ScheduleError("schedule has an empty block");
    std::sort(block.begin(), block.end());
    for (std::size_t i : block) {
      if (i >= n) throw ScheduleError("schedule mentions component " + std::to_string(i) + " outside the network");
      if (block_of_[i] != n) throw ScheduleError("component " + std::to_string(i) + " appears in two blocks");
      block_of_[i] = b;
    }
  }
  if (n > 0 && blocks_.empty()) throw ScheduleError("schedule has no blocks");
  for (std::size_t i = 0; i < n; ++i) {
    if (block_of_[i] == n) throw ScheduleError("component " + std::to_string(i) + " is never updated");
  }
}

UpdateSchedule UpdateSchedule::parallel(std::size_t n) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  if (n == 0) return UpdateSchedule(0, {});
  return UpdateSchedule(n, {std::move(all)});
}

UpdateSchedule UpdateSchedule::from_block_indices(std::span<const std::size_t> labels) {
  std::size_t t = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
  std::vector<std::vector<std::size_t>> blocks(t);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == 0) throw ScheduleError("block labels are 1-based");
    blocks[labels[i] - 1].push_back(i);
  }
  return UpdateSchedule(labels.size(), std::move(blocks));
}

std::vector<std::size_t> UpdateSchedule::block_indices() const {
  std::vector<std::size_t> labels(block_of_.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = block_of_[i] + 1;
  return labels;
}

BigInt ordered_bell(std::size_t n) {
  std::vector<BigInt> bell(n + 1);
  bell[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    BigInt binom = 1;  // C(m, i)
    BigInt sum = 0;
    for (std::size_t i = 1; i <= m; ++i) {
      binom = binom * (m - i + 1) / i;
      sum += binom * bell[m - i];
    }
    bell[m] = sum;
  }
  return bell[n];
}

namespace {

// Counts completions of a label prefix: maps of `rest` further positions such
// that the full image is {1..t} for some t. The prefix uses `used` distinct
// labels whose maximum is `top`.
class CompletionCounter {
 public:
  const BigInt& count(std::size_t rest, std::size_t used, std::size_t top) {
    auto key = std::make_tuple(rest, used, top);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BigInt total = 0;
    for (std::size_t t = std::max(top, used); t <= used + rest; ++t) {
      // maps [rest] -> [t] hitting each of the t - used missing labels
      std::size_t missing = t - used;
      BigInt binom = 1;
      for (std::size_t j = 0; j <= missing; ++j) {
        if (j > 0) binom = binom * (missing - j + 1) / j;
        BigInt term = binom * boost::multiprecision::pow(BigInt(t - j), static_cast<unsigned>(rest));
        if (j % 2 == 0) {
          total += term;
        } else {
          total -= term;
        }
      }
    }
    return memo_.emplace(key, total).first->second;
  }

 private:
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, BigInt> memo_;
};

struct Prefix {
  std::vector<bool> seen;
  std::size_t used = 0;
  std::size_t top = 0;

  explicit Prefix(std::size_t n) : seen(n + 2, false) {}

  std::pair<std::size_t, std::size_t> after(std::size_t label) const {
    return {used + (seen[label] ? 0 : 1), std::max(top, label)};
  }
  void push(std::size_t label) {
    std::tie(used, top) = after(label);
    seen[label] = true;
  }
};

}  // namespace

ScheduleEnumerator::ScheduleEnumerator(std::size_t n) : n_(n), labels_(n, 1) {}

std::optional<UpdateSchedule> ScheduleEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (n_ == 0) {
      done_ = true;
      return UpdateSchedule(0, {});
    }
    return UpdateSchedule::from_block_indices(labels_);
  }
  // Largest position whose label can grow while a completion still exists;
  // the suffix is then refilled with its smallest completion.
  for (std::size_t pos = n_; pos-- > 0;) {
    Prefix prefix(n_);
    for (std::size_t i = 0; i < pos; ++i) prefix.push(labels_[i]);
    std::size_t rest = n_ - pos - 1;
    for (std::size_t c = labels_[pos] + 1; c <= n_; ++c) {
      auto [used, top] = prefix.after(c);
      if (top - used > rest) continue;
      labels_[pos] = c;
      prefix.push(c);
      for (std::size_t i = pos + 1; i < n_; ++i) {
        std::size_t left = n_ - i - 1;
        for (std::size_t d = 1; d <= n_; ++d) {
          auto [u2, t2] = prefix.after(d);
          if (t2 - u2 <= left) {
            labels_[i] = d;
            prefix.push(d);
            break;
          }
        }
      }
      return UpdateSchedule::from_block_indices(labels_);
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<UpdateSchedule> all_schedules(std::size_t n) {
  std::vector<UpdateSchedule> out;
  ScheduleEnumerator it(n);
  while (auto w = it.next()) out.push_back(std::move(*w));
  return out;
}

BigInt rank(const UpdateSchedule& w) {
  const std::size_t n = w.size();
  auto labels = w.block_indices();
  CompletionCounter counter;
  Prefix prefix(n);
  BigInt r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rest = n - i - 1;
    for (std::size_t c = 1; c < labels[i]; ++c) {
      auto [used, top] = prefix.after(c);
      r += counter.count(rest, used, top);
    }
    prefix.push(labels[i]);
  }
  return r;
}

UpdateSchedule unrank(const BigInt& index, std::size_t n) {
  if (index < 0 || index >= ordered_bell(n)) throw EncodingError("schedule index out of range");
  if (n == 0) return UpdateSchedule(0, {});
  CompletionCounter counter;
  Prefix prefix(n);
  BigInt remaining = index;
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rest = n - i - 1;
    for (std::size_t c = 1; c <= n; ++c) {
      auto [used, top] = prefix.after(c);
      const BigInt& cnt = counter.count(rest, used, top);
      if (remaining < cnt) {
        labels[i] = c;
        prefix.push(c);
        break;
      }
      remaining -= cnt;
    }
  }
  return UpdateSchedule::from_block_indices(labels);
}

UpdateSchedule sample_schedule(std::size_t n, std::mt19937_64& rng) {
  const BigInt bound = ordered_bell(n);
  const std::size_t bits = boost::multiprecision::msb(bound) + 1;
  // rejection sampling on the next power of two keeps the draw uniform
  for (;;) {
    BigInt value = 0;
    for (std::size_t produced = 0; produced < bits; produced += 64) {
      value <<= 64;
      value |= BigInt(rng());
    }
    value &= (BigInt(1) << bits) - 1;
    if (value < bound) return unrank(value, n);
  }
}

std::size_t omega_width(std::size_t k) {
  const BigInt count = ordered_bell(k + 1);
  std::size_t width = 0;
  while ((BigInt(1) << width) < count) ++width;
  return width;
}

std::vector<bool> encode_omega(const UpdateSchedule& w) {
  if (w.size() == 0) throw EncodingError("clock schedule needs at least one component");
  const std::size_t width = omega_width(w.size() - 1);
  const BigInt r = rank(w);
  std::vector<bool> bits(width);
  for (std::size_t i = 0; i < width; ++i) bits[i] = boost::multiprecision::bit_test(r, width - 1 - i);
  return bits;
}

namespace {

BigInt omega_value(const std::vector<bool>& bits) {
  BigInt v = 0;
  for (bool b : bits) {
    v <<= 1;
    if (b) v |= 1;
  }
  return v;
}

}  // namespace

UpdateSchedule decode_omega(const std::vector<bool>& bits, std::size_t k) {
  if (bits.size() != omega_width(k)) throw EncodingError("schedule code has the wrong width");
  const BigInt v = omega_value(bits);
  if (v >= ordered_bell(k + 1)) throw EncodingError("schedule code does not encode a block-sequential schedule");
  return unrank(v, k + 1);
}

bool error_predicate(const std::vector<bool>& bits, std::size_t k) {
  if (bits.size() != omega_width(k)) throw EncodingError("schedule code has the wrong width");
  return omega_value(bits) >= ordered_bell(k + 1);
}

std::vector<std::size_t> j_permutation(const UpdateSchedule& w) {
  std::vector<std::size_t> order;
  order.reserve(w.size());
  for (const auto& block : w.blocks()) order.insert(order.end(), block.begin(), block.end());
  return order;
}

Precedence precedes(const UpdateSchedule& w, std::size_t a, std::size_t b) {
  const std::size_t ba = w.block_of(a);
  const std::size_t bb = w.block_of(b);
  if (ba < bb) return Precedence::strictly_before;
  if (ba > bb) return Precedence::strictly_after;
  return Precedence::same_block;
}

namespace {

bool is_name_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '\'';
}

}  // namespace

UpdateSchedule parse_schedule(std::string_view text, std::span<const std::string> names) {
  auto fail = [](const std::string& msg, std::size_t pos) -> ParseError { return ParseError(msg, 1, pos + 1); };
  auto trim_start = text.find_first_not_of(" \t\r\n");
  auto trim_end = text.find_last_not_of(" \t\r\n");
  if (trim_start == std::string_view::npos) throw fail("empty schedule", 0);
  std::string_view body = text.substr(trim_start, trim_end - trim_start + 1);
  if (body == "parallel") return UpdateSchedule::parallel(names.size());

  auto lookup = [&](std::string_view name, std::size_t pos) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return i;
    }
    throw fail("unknown component '" + std::string(name) + "'", pos);
  };

  std::vector<std::vector<std::size_t>> blocks;
  std::size_t pos = trim_start;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r' || text[pos] == '\n')) ++pos;
  };
  for (;;) {
    skip_ws();
    if (pos >= text.size() || text[pos] != '{') throw fail("expected '{'", pos);
    ++pos;
    std::vector<std::size_t> block;
    skip_ws();
    if (pos < text.size() && text[pos] == '}') throw fail("empty block", pos);
    for (;;) {
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && is_name_char(text[pos])) ++pos;
      if (start == pos) throw fail("expected component name", pos);
      block.push_back(lookup(text.substr(start, pos - start), start));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == '}') {
        ++pos;
        break;
      }
      throw fail("expected ',' or '}'", pos);
    }
    blocks.push_back(std::move(block));
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '>') throw fail("expected '>'", pos);
    ++pos;
  }
  return UpdateSchedule(names.size(), std::move(blocks));
}

std::string format_schedule(const UpdateSchedule& w, std::span<const std::string> names) {
  if (w.is_parallel()) return "parallel";
  std::string out;
  for (std::size_t b = 0; b < w.block_count(); ++b) {
    if (b > 0) out += '>';
    out += '{';
    const auto& block = w.blocks()[b];
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) out += ',';
      out += names[block[i]];
    }
    out += '}';
  }
  return out;
}

}  // namespace bsnet
