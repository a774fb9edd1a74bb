#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sgnpart/error.hpp"
#include "sgnpart/partition.hpp"

namespace sgnpart {

namespace detail {

// Growth-string codes are ordered 0 < +1 < -1 < +2 < -2 < ... ; ranks map
// that order onto 0,1,2,... so that the codes legal with j pairs open are
// exactly the ranks 0..2j+1 (rank 2j+1 being the opener +(j+1)).
inline int rank_to_code(int rank) {
  if (rank == 0) return 0;
  int t = (rank + 1) / 2;
  return rank % 2 == 1 ? t : -t;
}

}  // namespace detail

// Streams every valid growth string of length n exactly once, in
// lexicographic order of codes under 0 < +1 < -1 < +2 < -2 < ...; with a
// pair filter, only strings opening exactly that many pairs are produced.
// Single-consumer; independent cursors are safe to run concurrently.
class rgs_cursor {
 public:
  explicit rgs_cursor(int n, std::optional<int> pair_filter = std::nullopt)
      : n_(n), filter_(pair_filter) {
    if (n < 0) fail(errc::value_out_of_range, "n must be non-negative");
    if (filter_ && *filter_ < 0)
      fail(errc::value_out_of_range, "pair filter must be non-negative");
    ranks_.assign(static_cast<std::size_t>(n), 0);
    opened_.assign(static_cast<std::size_t>(n) + 1, 0);
  }

  // Fills `out` with the next growth string; false once exhausted.
  bool next(signed_rgs& out) {
    if (done_) return false;
    if (!started_) {
      started_ = true;
      if (!fill_suffix(0)) {
        done_ = true;
        return false;
      }
    } else if (!advance()) {
      done_ = true;
      return false;
    }
    out.codes.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
      out.codes[static_cast<std::size_t>(i)] =
          detail::rank_to_code(ranks_[static_cast<std::size_t>(i)]);
    return true;
  }

  // Pairs opened by the string produced by the last next().
  int pair_count() const { return opened_[static_cast<std::size_t>(n_)]; }

 private:
  // A nonopening code keeps j pairs open; legal when the filter can still
  // be met with the positions remaining after i.
  bool nonopen_ok(int i, int j) const {
    return !filter_ || *filter_ - j <= n_ - i - 1;
  }

  bool open_ok(int j) const { return !filter_ || j + 1 <= *filter_; }

  // Lexicographically minimal feasible completion of positions from..n-1.
  bool fill_suffix(int from) {
    for (int i = from; i < n_; ++i) {
      int j = opened_[static_cast<std::size_t>(i)];
      int rank;
      if (nonopen_ok(i, j)) {
        rank = 0;
      } else if (open_ok(j)) {
        rank = 2 * j + 1;
      } else {
        return false;
      }
      ranks_[static_cast<std::size_t>(i)] = rank;
      opened_[static_cast<std::size_t>(i) + 1] = j + (rank == 2 * j + 1);
    }
    return !filter_ || opened_[static_cast<std::size_t>(n_)] == *filter_;
  }

  bool advance() {
    for (int i = n_ - 1; i >= 0; --i) {
      int j = opened_[static_cast<std::size_t>(i)];
      int limit = 2 * j + 1;
      for (int rank = ranks_[static_cast<std::size_t>(i)] + 1; rank <= limit;
           ++rank) {
        bool opening = rank == limit;
        if (opening ? !open_ok(j) : !nonopen_ok(i, j)) continue;
        ranks_[static_cast<std::size_t>(i)] = rank;
        opened_[static_cast<std::size_t>(i) + 1] = j + (opening ? 1 : 0);
        if (fill_suffix(i + 1)) return true;
      }
    }
    return false;
  }

  int n_;
  std::optional<int> filter_;
  std::vector<int> ranks_;
  std::vector<int> opened_;  // opened_[i] = pairs open before position i
  bool started_ = false;
  bool done_ = false;
};

// Streams every signed partition of [±n] exactly once, canonical, in the
// growth-string order above; optionally only those with k pairs.
class partition_enumerator {
 public:
  explicit partition_enumerator(int n,
                                std::optional<int> pair_filter = std::nullopt)
      : cursor_(n, pair_filter) {}

  bool next(signed_partition& out) {
    signed_rgs r;
    if (!cursor_.next(r)) return false;
    out = from_rgs(r);
    return true;
  }

 private:
  rgs_cursor cursor_;
};

template <typename Fn>
void for_each_partition(int n, std::optional<int> pair_filter, Fn&& fn) {
  partition_enumerator cursor(n, pair_filter);
  signed_partition p;
  while (cursor.next(p)) fn(p);
}

// Exhaustive census: entry k counts the enumerated partitions of [±n] with
// exactly k pairs of nonzero blocks. The brute-force side of the oracle
// pair for the type-B triangle.
inline std::vector<std::uint64_t> count_by_pairs(int n) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  rgs_cursor cursor(n);
  signed_rgs r;
  while (cursor.next(r)) ++counts[static_cast<std::size_t>(cursor.pair_count())];
  return counts;
}

}  // namespace sgnpart
