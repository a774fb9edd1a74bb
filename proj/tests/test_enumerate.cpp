#include <doctest.h>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "sgnpart/enumerate.hpp"
#include "sgnpart/partition.hpp"
#include "sgnpart/stirling.hpp"
#include "sgnpart/text_io.hpp"

using sgnpart::count_by_pairs;
using sgnpart::for_each_partition;
using sgnpart::format_partition;
using sgnpart::partition_enumerator;
using sgnpart::signed_partition;
using sgnpart::validate;

namespace {

// Golden triangle rows for n <= 6 (OEIS A039755).
const std::vector<std::vector<std::uint64_t>> kGoldenRows = {
    {1},
    {1, 1},
    {1, 4, 1},
    {1, 13, 9, 1},
    {1, 40, 58, 16, 1},
    {1, 121, 330, 170, 25, 1},
    {1, 364, 1771, 1520, 395, 36, 1},
};

std::vector<signed_partition> collect(int n, std::optional<int> k) {
  std::vector<signed_partition> out;
  for_each_partition(n, k, [&](const signed_partition& p) { out.push_back(p); });
  return out;
}

}  // namespace

TEST_CASE("enumeration of [±1]") {
  auto all = collect(1, std::nullopt);
  REQUIRE(all.size() == 2);
  CHECK(all[0] == validate(1, {1}, {}));
  CHECK(all[1] == validate(1, {}, {{1}}));
}

TEST_CASE("enumeration of [±2] with one pair") {
  auto one_pair = collect(2, 1);
  REQUIRE(one_pair.size() == 4);
  CHECK(one_pair[0] == validate(2, {1}, {{2}}));
  CHECK(one_pair[1] == validate(2, {2}, {{1}}));
  CHECK(one_pair[2] == validate(2, {}, {{1, 2}}));
  CHECK(one_pair[3] == validate(2, {}, {{1, -2}}));
}

TEST_CASE("enumeration of the empty ground set") {
  auto all = collect(0, std::nullopt);
  REQUIRE(all.size() == 1);
  CHECK(all[0] == signed_partition{});
  CHECK(collect(0, 0).size() == 1);
  CHECK(collect(0, 1).empty());
}

TEST_CASE("pair filter matches the unfiltered census") {
  for (int n = 0; n <= 5; ++n) {
    auto census = count_by_pairs(n);
    for (int k = 0; k <= n; ++k) {
      auto filtered = collect(n, k);
      CHECK(filtered.size() == census[static_cast<std::size_t>(k)]);
      for (const auto& p : filtered) CHECK(p.pair_count() == k);
    }
    CHECK(collect(n, n + 1).empty());
  }
}

TEST_CASE("census reproduces the golden rows up to n=6") {
  for (int n = 0; n <= 6; ++n) {
    CHECK(count_by_pairs(n) == kGoldenRows[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("census row sums") {
  const std::vector<std::uint64_t> totals = {1, 2, 6, 24, 116, 648, 4088};
  for (int n = 0; n <= 6; ++n) {
    std::uint64_t sum = 0;
    for (auto c : count_by_pairs(n)) sum += c;
    CHECK(sum == totals[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("census equals the triangle recurrence for n <= 7") {
  sgnpart::stirling_triangle triangle(sgnpart::triangle_kind::type_b);
  for (int n = 0; n <= 7; ++n) {
    auto census = count_by_pairs(n);
    for (int k = 0; k <= n; ++k) {
      CHECK(sgnpart::bigint(static_cast<std::int64_t>(
                census[static_cast<std::size_t>(k)])) == triangle.at(n, k));
    }
  }
}

TEST_CASE("enumeration yields canonical, pairwise distinct partitions") {
  for (int n = 0; n <= 5; ++n) {
    std::set<std::string> seen;
    for_each_partition(n, std::nullopt, [&](const signed_partition& p) {
      CHECK(validate(p.n, p.zero, p.pairs) == p);
      std::string text = format_partition(p);
      CHECK(seen.insert(text).second);
    });
    CHECK(seen.size() == static_cast<std::size_t>([&] {
            std::uint64_t sum = 0;
            for (auto c : count_by_pairs(n)) sum += c;
            return sum;
          }()));
  }
}

TEST_CASE("independent cursors run concurrently and agree") {
  std::string reference;
  for_each_partition(4, std::nullopt, [&](const signed_partition& p) {
    reference += format_partition(p);
    reference += '\n';
  });
  std::vector<std::string> results(4);
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < results.size(); ++t)
    workers.emplace_back([&results, t] {
      std::string acc;
      for_each_partition(4, std::nullopt, [&](const signed_partition& p) {
        acc += format_partition(p);
        acc += '\n';
      });
      sgnpart::stirling_triangle tri(sgnpart::triangle_kind::type_b);
      acc += tri.at(6, 3).to_string();
      acc += '\n';
      results[t] = std::move(acc);
    });
  for (auto& w : workers) w.join();
  for (const auto& r : results) CHECK(r == reference + "1520\n");
}

TEST_CASE("growth strings stream in lexicographic code order") {
  // order on codes: 0 < +1 < -1 < +2 < -2 < ...
  auto rank = [](int code) {
    if (code == 0) return 0;
    return code > 0 ? 2 * code - 1 : -2 * code;
  };
  sgnpart::rgs_cursor cursor(4);
  sgnpart::signed_rgs r;
  std::vector<int> prev_ranks;
  bool first = true;
  while (cursor.next(r)) {
    std::vector<int> ranks;
    for (int c : r.codes) ranks.push_back(rank(c));
    if (!first) CHECK(prev_ranks < ranks);
    prev_ranks = ranks;
    first = false;
  }
}
