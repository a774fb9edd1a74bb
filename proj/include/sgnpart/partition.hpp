#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "sgnpart/error.hpp"

namespace sgnpart {

// A signed partition of {±1,...,±n}: an optional zero-block {±i | i ∈ S}
// plus k mirrored pairs {B, -B} of nonzero blocks, stored by representative.
//
// Canonical form, produced by validate() and from_rgs() and assumed by every
// operation taking a signed_partition:
//   * each representative contains the minimal positive element of B ∪ -B,
//     so its smallest-magnitude element is positive;
//   * elements of a representative are sorted by absolute value;
//   * pairs are sorted by their minimal positive element;
//   * zero-block support is sorted ascending (empty support = no zero-block).
struct signed_partition {
  int n = 0;
  std::vector<int> zero;
  std::vector<std::vector<int>> pairs;

  int pair_count() const { return static_cast<int>(pairs.size()); }

  friend bool operator==(const signed_partition&,
                         const signed_partition&) = default;
};

// Sequential growth-string code for a signed partition. Code s_i places
// ball i: 0 into the zero-block, +t on the representative side of pair t,
// -t on the mirrored side; +(j+1), with j pairs open so far, opens a new
// pair (openers are always positive: the opener is the pair's minimal
// positive element).
struct signed_rgs {
  std::vector<int> codes;

  friend bool operator==(const signed_rgs&, const signed_rgs&) = default;
};

namespace detail {

inline bool is_self_mirrored(const std::vector<int>& block) {
  for (int e : block)
    if (!std::binary_search(block.begin(), block.end(), -e)) return false;
  return true;
}

}  // namespace detail

// Checks that the expanded family {±S} ∪ {B_1,-B_1,...,B_k,-B_k} partitions
// {±1,...,±n} and returns the canonical form. Input blocks may use either
// representative of a pair; a self-mirrored input block is accepted as a
// misplaced zero-block and folded into the support (still at most one
// self-mirrored block overall).
inline signed_partition validate(int n, std::vector<int> zero_support,
                                 std::vector<std::vector<int>> pair_blocks) {
  if (n < 0) fail(errc::value_out_of_range, "n must be non-negative");

  std::sort(zero_support.begin(), zero_support.end());
  zero_support.erase(std::unique(zero_support.begin(), zero_support.end()),
                     zero_support.end());
  for (int i : zero_support)
    if (i < 1 || i > n)
      fail(errc::illegal_zero_block,
           "zero-block support value " + std::to_string(i) +
               " outside [1," + std::to_string(n) + "]");

  int self_mirrored = zero_support.empty() ? 0 : 1;
  std::vector<std::vector<int>> blocks;
  blocks.reserve(pair_blocks.size());
  for (auto& raw : pair_blocks) {
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    if (raw.empty()) fail(errc::empty_block, "pair blocks must be nonempty");
    for (int e : raw)
      if (e == 0 || std::abs(e) > n)
        fail(errc::value_out_of_range,
             "element " + std::to_string(e) + " outside [±" +
                 std::to_string(n) + "]");
    if (detail::is_self_mirrored(raw)) {
      if (++self_mirrored > 1)
        fail(errc::multiple_self_mirrored,
             "at most one block may satisfy -C = C");
      for (int e : raw)
        if (e > 0) zero_support.push_back(e);
      std::sort(zero_support.begin(), zero_support.end());
    } else {
      blocks.push_back(std::move(raw));
    }
  }

  // Coverage of [±n]: cover[n + e] counts how often element e appears in
  // the expanded family (each pair block contributes itself and its mirror).
  std::vector<int> cover(2 * static_cast<std::size_t>(n) + 1, 0);
  for (int i : zero_support) {
    ++cover[static_cast<std::size_t>(n + i)];
    ++cover[static_cast<std::size_t>(n - i)];
  }
  for (const auto& block : blocks)
    for (int e : block) {
      ++cover[static_cast<std::size_t>(n + e)];
      ++cover[static_cast<std::size_t>(n - e)];
    }
  for (int e = -n; e <= n; ++e) {
    if (e == 0) continue;
    int c = cover[static_cast<std::size_t>(n + e)];
    if (c > 1)
      fail(errc::overlapping_blocks,
           "element " + std::to_string(e) + " covered " + std::to_string(c) +
               " times");
    if (c == 0)
      fail(errc::missing_elements,
           "element " + std::to_string(e) + " not covered");
  }

  // Canonicalize: pick the representative holding the minimal positive
  // element, order elements by magnitude, order pairs by that element.
  for (auto& block : blocks) {
    std::sort(block.begin(), block.end(),
              [](int a, int b) { return std::abs(a) < std::abs(b); });
    if (block.front() < 0)
      for (int& e : block) e = -e;
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  return signed_partition{n, std::move(zero_support), std::move(blocks)};
}

// Sequential encoding of a canonical signed partition; inverse of from_rgs.
inline signed_rgs to_rgs(const signed_partition& p) {
  // side[i] = +t / -t for ball i in pair t's representative / mirror,
  // 0 for the zero-block.
  std::vector<int> side(static_cast<std::size_t>(p.n) + 1, 0);
  std::vector<bool> seen(static_cast<std::size_t>(p.n) + 1, false);
  auto place = [&](int ball, int code) {
    if (ball < 1 || ball > p.n)
      fail(errc::value_out_of_range,
           "element " + std::to_string(ball) + " outside [±" +
               std::to_string(p.n) + "]");
    if (seen[static_cast<std::size_t>(ball)])
      fail(errc::overlapping_blocks,
           "element " + std::to_string(ball) + " covered twice");
    seen[static_cast<std::size_t>(ball)] = true;
    side[static_cast<std::size_t>(ball)] = code;
  };
  for (int i : p.zero) place(i, 0);
  for (int t = 1; t <= p.pair_count(); ++t)
    for (int e : p.pairs[static_cast<std::size_t>(t - 1)])
      place(std::abs(e), e > 0 ? t : -t);

  signed_rgs r;
  r.codes.reserve(static_cast<std::size_t>(p.n));
  int opened = 0;
  for (int i = 1; i <= p.n; ++i) {
    if (!seen[static_cast<std::size_t>(i)])
      fail(errc::missing_elements,
           "element " + std::to_string(i) + " not covered");
    int code = side[static_cast<std::size_t>(i)];
    if (std::abs(code) > opened) {
      // First ball of a pair: must be the representative's minimal
      // positive element, and pairs must open in canonical order.
      if (code != opened + 1)
        fail(errc::internal_inconsistency, "partition is not canonical");
      ++opened;
    }
    r.codes.push_back(code);
  }
  return r;
}

// Decodes a growth string into its canonical signed partition.
inline signed_partition from_rgs(const signed_rgs& r) {
  signed_partition p;
  p.n = static_cast<int>(r.codes.size());
  int opened = 0;
  for (int i = 1; i <= p.n; ++i) {
    int code = r.codes[static_cast<std::size_t>(i - 1)];
    if (code == 0) {
      p.zero.push_back(i);
    } else if (code == opened + 1) {
      p.pairs.push_back({i});
      ++opened;
    } else if (code >= 1 && code <= opened) {
      p.pairs[static_cast<std::size_t>(code - 1)].push_back(i);
    } else if (code <= -1 && code >= -opened) {
      p.pairs[static_cast<std::size_t>(-code - 1)].push_back(-i);
    } else {
      fail(errc::malformed_rgs,
           "code " + std::to_string(code) + " at position " +
               std::to_string(i) + " with " + std::to_string(opened) +
               " pairs open");
    }
  }
  return p;
}

}  // namespace sgnpart
