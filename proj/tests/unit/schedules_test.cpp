#include <doctest.h>

#include <random>
#include <set>

#include "../oracles.hpp"
#include "bsnet/error.hpp"
#include "bsnet/schedule.hpp"

using namespace bsnet;

namespace {

UpdateSchedule sched(std::size_t n, std::vector<std::vector<std::size_t>> blocks) {
  return UpdateSchedule(n, std::move(blocks));
}

}  // namespace

TEST_CASE("ordered Bell numbers") {
  CHECK(ordered_bell(0) == 1);
  CHECK(ordered_bell(1) == 1);
  CHECK(ordered_bell(3) == 13);
  CHECK(ordered_bell(6) == 4683);
  for (std::size_t n = 0; n <= 10; ++n) REQUIRE(ordered_bell(n) == oracle::ordered_bell_stirling(n));
  CHECK(ordered_bell(30) > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("schedule validation") {
  CHECK_THROWS_AS(sched(3, {{0, 1}}), ScheduleError);
  CHECK_THROWS_AS(sched(2, {{0}, {0, 1}}), ScheduleError);
  CHECK_THROWS_AS(sched(2, {{0}, {}, {1}}), ScheduleError);
  const std::size_t gap[] = {1, 3};
  CHECK_THROWS_AS(UpdateSchedule::from_block_indices(gap), ScheduleError);
  CHECK(UpdateSchedule::parallel(4).is_parallel());
}

TEST_CASE("enumeration order and counts") {
  const auto one = all_schedules(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].is_parallel());

  const auto two = all_schedules(2);
  REQUIRE(two.size() == 3);
  CHECK(two[0] == UpdateSchedule::parallel(2));
  CHECK(two[1] == sched(2, {{0}, {1}}));
  CHECK(two[2] == sched(2, {{1}, {0}}));

  CHECK(all_schedules(6).size() == 4683);
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto all = all_schedules(n);
    const auto want = oracle::ordered_partitions(n);
    REQUIRE(all.size() == want.size());
    REQUIRE(BigInt(all.size()) == ordered_bell(n));
    for (std::size_t i = 0; i < all.size(); ++i) REQUIRE(all[i].block_indices() == want[i]);
  }
}

TEST_CASE("rank and unrank") {
  CHECK(rank(UpdateSchedule::parallel(5)) == 0);
  CHECK(unrank(2, 2) == sched(2, {{1}, {0}}));
  CHECK_THROWS_AS(unrank(3, 2), EncodingError);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto all = all_schedules(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      REQUIRE(rank(all[i]) == i);
      REQUIRE(unrank(i, n) == all[i]);
    }
  }
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const UpdateSchedule w = sample_schedule(20, rng);
    REQUIRE(unrank(rank(w), 20) == w);
  }
}

TEST_CASE("schedule codes") {
  CHECK(omega_width(3) == 7);
  CHECK(omega_width(5) == 13);
  CHECK(decode_omega(std::vector<bool>(7, false), 3).is_parallel());
  for (std::size_t k = 1; k <= 4; ++k) {
    for (const auto& w : all_schedules(k + 1)) {
      const auto bits = encode_omega(w);
      REQUIRE(bits.size() == omega_width(k));
      REQUIRE(decode_omega(bits, k) == w);
      REQUIRE_FALSE(error_predicate(bits, k));
    }
  }
  // omega_1 is the most significant bit.
  const auto code = encode_omega(unrank(1, 4));
  CHECK(code.back());
  CHECK_FALSE(code.front());

  auto bits_of = [](std::uint64_t v, std::size_t width) {
    std::vector<bool> b(width);
    for (std::size_t i = 0; i < width; ++i) b[i] = (v >> (width - 1 - i)) & 1u;
    return b;
  };
  CHECK_FALSE(error_predicate(bits_of(0, 13), 5));
  CHECK_FALSE(error_predicate(bits_of(4682, 13), 5));
  CHECK(error_predicate(bits_of(4683, 13), 5));
  CHECK(error_predicate(bits_of(75, 7), 3));
  CHECK_THROWS_AS(decode_omega(bits_of(75, 7), 3), EncodingError);
  CHECK_THROWS_AS(decode_omega(bits_of(0, 6), 3), EncodingError);
}

TEST_CASE("j-permutation and precedence") {
  CHECK(j_permutation(UpdateSchedule::parallel(4)) == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(j_permutation(sched(3, {{2}, {0, 1}})) == std::vector<std::size_t>{2, 0, 1});
  CHECK(j_permutation(sched(3, {{1}, {2}, {0}})) == std::vector<std::size_t>{1, 2, 0});

  const UpdateSchedule w = sched(2, {{0}, {1}});
  CHECK(precedes(w, 0, 1) == Precedence::strictly_before);
  CHECK(precedes(w, 1, 0) == Precedence::strictly_after);
  CHECK(precedes(UpdateSchedule::parallel(2), 0, 1) == Precedence::same_block);

  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& v : all_schedules(n)) {
      const auto j = j_permutation(v);
      std::set<std::size_t> distinct(j.begin(), j.end());
      REQUIRE(distinct.size() == n);
      for (std::size_t p = 1; p < n; ++p) REQUIRE(v.block_of(j[p - 1]) <= v.block_of(j[p]));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          REQUIRE((precedes(v, a, b) == Precedence::strictly_before) ==
                  (precedes(v, b, a) == Precedence::strictly_after));
        }
      }
    }
  }
}

TEST_CASE("schedule text format") {
  const std::vector<std::string> names{"a", "b", "c"};
  const UpdateSchedule w = parse_schedule("{a,b}>{c}", names);
  CHECK(w == sched(3, {{0, 1}, {2}}));
  CHECK(format_schedule(w, names) == "{a,b}>{c}");
  CHECK(parse_schedule("parallel", names).is_parallel());
  CHECK(format_schedule(UpdateSchedule::parallel(3), names) == "parallel");
  CHECK_THROWS(parse_schedule("{a,d}>{b,c}", names));
  CHECK_THROWS(parse_schedule("{a}>{b}", names));
}
