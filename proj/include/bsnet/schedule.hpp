#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bsnet {

using BigInt = boost::multiprecision::cpp_int;

/// Block-sequential update schedule: an ordered partition (W_1,...,W_t) of
/// the components {0,...,n-1}. Blocks are kept sorted.
class UpdateSchedule {
 public:
  UpdateSchedule() = default;
  /// Throws ScheduleError unless the blocks are nonempty, pairwise disjoint
  /// and cover {0,...,n-1}.
  UpdateSchedule(std::size_t n, std::vector<std::vector<std::size_t>> blocks);

  /// The single-block schedule ([n]).
  static UpdateSchedule parallel(std::size_t n);
  /// Builds from 1-based block labels b(i); the image must be {1,...,t}.
  static UpdateSchedule from_block_indices(std::span<const std::size_t> labels);

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
  /// 0-based position of the block containing component i.
  std::size_t block_of(std::size_t i) const { return block_of_.at(i); }
  /// 1-based block label of every component.
  std::vector<std::size_t> block_indices() const;
  bool is_parallel() const noexcept { return blocks_.size() == 1; }

  friend bool operator==(const UpdateSchedule& a, const UpdateSchedule& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

/// Number of ordered partitions of an n-set.
BigInt ordered_bell(std::size_t n);

/// Visits every ordered partition of {0,...,n-1} exactly once, in
/// lexicographic order of block-label vectors (the parallel schedule first).
class ScheduleEnumerator {
 public:
  explicit ScheduleEnumerator(std::size_t n);
  /// Next schedule, or nullopt when exhausted.
  std::optional<UpdateSchedule> next();

 private:
  std::size_t n_;
  std::vector<std::size_t> labels_;
  bool started_ = false;
  bool done_ = false;
};

/// All schedules on n components in enumeration order.
std::vector<UpdateSchedule> all_schedules(std::size_t n);

/// Position of `w` in enumeration order.
BigInt rank(const UpdateSchedule& w);
/// Inverse of rank; throws EncodingError when index >= ordered_bell(n).
UpdateSchedule unrank(const BigInt& index, std::size_t n);

/// Uniformly random schedule on n components.
UpdateSchedule sample_schedule(std::size_t n, std::mt19937_64& rng);

/// Width ceil(log2 B(k+1)) of the binary schedule code for clock components
/// Omega_0..Omega_k.
std::size_t omega_width(std::size_t k);
/// Rank of `w` (a schedule over k+1 elements) written big-endian: element 0
/// is the most significant bit.
std::vector<bool> encode_omega(const UpdateSchedule& w);
/// Inverse of encode_omega; throws EncodingError when the value is >= B(k+1)
/// or the width does not match.
UpdateSchedule decode_omega(const std::vector<bool>& bits, std::size_t k);
/// True exactly when decode_omega would fail on a correctly sized code.
bool error_predicate(const std::vector<bool>& bits, std::size_t k);

/// Components sorted by block position, ties by ascending index.
std::vector<std::size_t> j_permutation(const UpdateSchedule& w);

enum class Precedence { strictly_before, same_block, strictly_after };

/// Position of a's block relative to b's block.
Precedence precedes(const UpdateSchedule& w, std::size_t a, std::size_t b);

/// Parses `{a,b}>{c}` or `parallel`; names resolve against `names`.
UpdateSchedule parse_schedule(std::string_view text, std::span<const std::string> names);
/// Inverse of parse_schedule (the parallel schedule prints as `parallel`).
std::string format_schedule(const UpdateSchedule& w, std::span<const std::string> names);

}  // namespace bsnet
