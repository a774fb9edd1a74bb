#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sgnpart/bigint.hpp"
#include "sgnpart/enumerate.hpp"
#include "sgnpart/error.hpp"
#include "sgnpart/partition.hpp"
#include "sgnpart/stirling.hpp"

namespace sgnpart {

// A total assignment of balls 1..n into urns 1..m; urns[i-1] = f(i).
// The bijection only works with an odd urn count, so every operation here
// rejects even m up front.
struct urn_assignment {
  int n = 0;
  int m = 1;
  std::vector<int> urns;

  friend bool operator==(const urn_assignment&,
                         const urn_assignment&) = default;
};

// One urn choice per pair of blocks, in canonical pair order. Each pair
// consumes its chosen urn plus that urn's cyclic successor, so a valid
// sequence never repeats an urn already consumed and never names urn 1.
using choice_sequence = std::vector<int>;

// The urns consumed while encoding or decoding; urn 1 is consumed from the
// start (it belongs to the zero-block), and each processed pair consumes
// two more, so after i pairs exactly 1 + 2i urns are marked.
class urn_reservation {
 public:
  explicit urn_reservation(int m) : m_(m), used_(static_cast<std::size_t>(m) + 1, false) {
    if (m < 1) fail(errc::value_out_of_range, "urn count must be at least 1");
    used_[1] = true;
    count_ = 1;
  }

  int urn_count() const { return m_; }
  int marked_count() const { return count_; }

  bool contains(int u) const {
    return u >= 1 && u <= m_ && used_[static_cast<std::size_t>(u)];
  }

  void mark(int u) {
    if (u < 1 || u > m_ || used_[static_cast<std::size_t>(u)])
      fail(errc::internal_inconsistency,
           "urn " + std::to_string(u) + " cannot be marked");
    used_[static_cast<std::size_t>(u)] = true;
    ++count_;
  }

  void unmark(int u) {
    used_[static_cast<std::size_t>(u)] = false;
    --count_;
  }

 private:
  int m_;
  std::vector<bool> used_;
  int count_;
};

// First urn after u in the cyclic order on {2,...,m} that is not yet
// consumed (urn 1 is consumed from the start and is always skipped).
inline int cyclic_successor(int u, const urn_reservation& used) {
  int m = used.urn_count();
  if (u < 1 || u > m) fail(errc::value_out_of_range, "urn outside [1,m]");
  int v = u;
  for (int step = 0; step < m; ++step) {
    v = v % m + 1;
    if (v != 1 && !used.contains(v)) return v;
  }
  fail(errc::no_free_urn, "every urn is already consumed");
}

namespace detail {

inline void require_odd(int m) {
  if (m < 1 || m % 2 == 0)
    fail(errc::even_urn_count,
         "odd-m restriction: the bijection needs an odd number of urns, got m=" +
             std::to_string(m));
}

inline void require_capacity(int k, int m) {
  if (2 * k > m - 1)
    fail(errc::too_many_pairs,
         "a partition with k=" + std::to_string(k) +
             " pairs needs 2k <= m-1 free urns, got m=" + std::to_string(m));
}

// Applies one pair of blocks to the assignment being built: positives of
// the representative go to the chosen urn, mirrored positives to its cyclic
// successor. Both urns are consumed even when the representative has no
// negative element, otherwise distinct choice sequences could collide on
// the same assignment.
inline void place_pair(const std::vector<int>& rep, int choice,
                       urn_reservation& used, std::vector<int>& urns) {
  used.mark(choice);
  int mirror = cyclic_successor(choice, used);
  used.mark(mirror);
  for (int e : rep) {
    if (e > 0)
      urns[static_cast<std::size_t>(e - 1)] = choice;
    else
      urns[static_cast<std::size_t>(-e - 1)] = mirror;
  }
}

}  // namespace detail

// Builds the balls-into-urns assignment determined by a canonical signed
// partition and one urn choice per pair: zero-block balls go to urn 1,
// pair t's representative to choices[t-1], its mirror to the cyclic
// successor of that urn at the time the pair is processed.
inline urn_assignment encode(const signed_partition& p,
                             const choice_sequence& choices, int m) {
  detail::require_odd(m);
  int k = p.pair_count();
  detail::require_capacity(k, m);
  if (static_cast<int>(choices.size()) != k)
    fail(errc::invalid_choice,
         "need exactly one urn choice per pair: k=" + std::to_string(k) +
             ", got " + std::to_string(choices.size()));

  urn_assignment out;
  out.n = p.n;
  out.m = m;
  out.urns.assign(static_cast<std::size_t>(p.n), 1);
  urn_reservation used(m);
  for (int t = 0; t < k; ++t) {
    int choice = choices[static_cast<std::size_t>(t)];
    if (choice < 2 || choice > m)
      fail(errc::invalid_choice,
           "urn choice " + std::to_string(choice) + " outside [2," +
               std::to_string(m) + "]");
    if (used.contains(choice))
      fail(errc::invalid_choice,
           "urn " + std::to_string(choice) + " is already consumed");
    detail::place_pair(p.pairs[static_cast<std::size_t>(t)], choice, used,
                       out.urns);
  }
  return out;
}

struct decoded_assignment {
  signed_partition partition;
  choice_sequence choices;

  friend bool operator==(const decoded_assignment&,
                         const decoded_assignment&) = default;
};

// Recovers the unique (partition, choices) pair that encodes to f. Balls in
// urn 1 form the zero-block support; then, repeatedly, the smallest ball
// not yet placed names a fresh urn a = f(ball), the cyclic successor b of a
// supplies the mirrored side, and both urns are consumed.
inline decoded_assignment decode(const urn_assignment& f) {
  detail::require_odd(f.m);
  if (static_cast<int>(f.urns.size()) != f.n || f.n < 0)
    fail(errc::value_out_of_range, "assignment length disagrees with n");
  for (int u : f.urns)
    if (u < 1 || u > f.m)
      fail(errc::value_out_of_range,
           "urn value " + std::to_string(u) + " outside [1," +
               std::to_string(f.m) + "]");

  decoded_assignment out;
  out.partition.n = f.n;
  urn_reservation used(f.m);
  std::vector<bool> placed(static_cast<std::size_t>(f.n) + 1, false);
  for (int i = 1; i <= f.n; ++i) {
    if (f.urns[static_cast<std::size_t>(i - 1)] == 1) {
      out.partition.zero.push_back(i);
      placed[static_cast<std::size_t>(i)] = true;
    }
  }
  for (int i = 1; i <= f.n; ++i) {
    if (placed[static_cast<std::size_t>(i)]) continue;
    int rep_urn = f.urns[static_cast<std::size_t>(i - 1)];
    used.mark(rep_urn);
    int mirror_urn = cyclic_successor(rep_urn, used);
    used.mark(mirror_urn);
    std::vector<int> rep;
    for (int ball = i; ball <= f.n; ++ball) {
      int u = f.urns[static_cast<std::size_t>(ball - 1)];
      if (u == rep_urn) {
        rep.push_back(ball);
        placed[static_cast<std::size_t>(ball)] = true;
      } else if (u == mirror_urn) {
        rep.push_back(-ball);
        placed[static_cast<std::size_t>(ball)] = true;
      }
    }
    out.partition.pairs.push_back(std::move(rep));
    out.choices.push_back(rep_urn);
  }
  return out;
}

// Visits every assignment a partition induces, one per valid choice
// sequence, choices taken in increasing urn order at each pair (so the
// stream is deterministic and lexicographic in the choice sequence).
// Exactly (m-1)(m-3)...(m-2k+1) assignments are produced.
template <typename Fn>
void for_each_assignment(const signed_partition& p, int m, Fn&& fn) {
  detail::require_odd(m);
  int k = p.pair_count();
  detail::require_capacity(k, m);

  urn_assignment f;
  f.n = p.n;
  f.m = m;
  f.urns.assign(static_cast<std::size_t>(p.n), 1);
  choice_sequence choices(static_cast<std::size_t>(k));
  urn_reservation used(m);

  auto rec = [&](auto&& self, int t) -> void {
    if (t == k) {
      const choice_sequence& cref = choices;
      const urn_assignment& fref = f;
      fn(cref, fref);
      return;
    }
    for (int choice = 2; choice <= m; ++choice) {
      if (used.contains(choice)) continue;
      choices[static_cast<std::size_t>(t)] = choice;
      used.mark(choice);
      int mirror = cyclic_successor(choice, used);
      used.mark(mirror);
      for (int e : p.pairs[static_cast<std::size_t>(t)])
        f.urns[static_cast<std::size_t>(std::abs(e) - 1)] = e > 0 ? choice : mirror;
      self(self, t + 1);
      used.unmark(mirror);
      used.unmark(choice);
    }
  };
  rec(rec, 0);
}

inline std::vector<std::pair<choice_sequence, urn_assignment>>
enumerate_assignments(const signed_partition& p, int m) {
  std::vector<std::pair<choice_sequence, urn_assignment>> out;
  for_each_assignment(p, m, [&](const choice_sequence& c, const urn_assignment& f) {
    out.emplace_back(c, f);
  });
  return out;
}

// Exhaustive desk-scale certificate that encoding partitions of [±n] into
// [m] urns is a bijection onto all m^n assignments:
//   (i)   every (partition, choices) pair decodes back to itself,
//   (ii)  the per-partition assignment counts hit (m-1)(m-3)...(m-2k+1),
//   (iii) the encoded assignments are pairwise distinct and m^n in total,
//   (iv)  every function f decodes and re-encodes to itself.
struct bijection_report {
  int n = 0;
  int m = 1;
  std::uint64_t functions = 0;           // m^n
  std::uint64_t encoded = 0;             // assignments produced over all pairs
  std::uint64_t distinct = 0;            // distinct assignments among those
  std::uint64_t partitions = 0;          // signed partitions of [±n]
  std::uint64_t partitions_encoded = 0;  // those with 2k <= m-1
  bool per_partition_counts_ok = false;
  bool decode_encode_ok = false;         // decode . encode = identity
  bool encode_decode_ok = false;         // encode . decode = identity
  bool pass = false;
};

inline bijection_report verify_bijection(int n, int m,
                                         std::uint64_t max_functions = 1000000) {
  detail::require_odd(m);
  if (n < 0) fail(errc::value_out_of_range, "n must be non-negative");

  std::uint64_t functions = 1;
  for (int i = 0; i < n; ++i) {
    if (functions > max_functions / static_cast<std::uint64_t>(m))
      fail(errc::guard_exceeded,
           "m^n exceeds the verification guard of " +
               std::to_string(max_functions) + " functions");
    functions *= static_cast<std::uint64_t>(m);
  }

  bijection_report rep;
  rep.n = n;
  rep.m = m;
  rep.functions = functions;
  rep.per_partition_counts_ok = true;
  rep.decode_encode_ok = true;
  rep.encode_decode_ok = true;

  // Assignments are fingerprinted as base-m numbers, ball 1 least
  // significant; with m^n under the guard the key fits in 64 bits.
  auto key_of = [m](const urn_assignment& f) {
    std::uint64_t key = 0;
    for (std::size_t i = f.urns.size(); i-- > 0;)
      key = key * static_cast<std::uint64_t>(m) +
            static_cast<std::uint64_t>(f.urns[i] - 1);
    return key;
  };

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(static_cast<std::size_t>(functions) * 2);
  partition_enumerator parts(n);
  signed_partition p;
  while (parts.next(p)) {
    ++rep.partitions;
    int k = p.pair_count();
    if (2 * k > m - 1) continue;  // induces no assignment: [m]^B_k = 0
    ++rep.partitions_encoded;
    std::uint64_t count = 0;
    for_each_assignment(p, m, [&](const choice_sequence& c, const urn_assignment& f) {
      ++count;
      ++rep.encoded;
      if (seen.insert(key_of(f)).second) ++rep.distinct;
      decoded_assignment back = decode(f);
      if (back.partition != p || back.choices != c) rep.decode_encode_ok = false;
    });
    if (bigint(static_cast<std::int64_t>(count)) !=
        falling_factorial_B_at(k, bigint(m)))
      rep.per_partition_counts_ok = false;
  }

  // Odometer over all f: [n] -> [m], checking encode(decode(f)) = f.
  urn_assignment f;
  f.n = n;
  f.m = m;
  f.urns.assign(static_cast<std::size_t>(n), 1);
  for (;;) {
    decoded_assignment d = decode(f);
    if (encode(d.partition, d.choices, m) != f) rep.encode_decode_ok = false;
    std::size_t pos = 0;
    while (pos < f.urns.size() && f.urns[pos] == m) f.urns[pos++] = 1;
    if (pos == f.urns.size()) break;
    ++f.urns[pos];
  }

  rep.pass = rep.distinct == rep.functions && rep.encoded == rep.functions &&
             rep.per_partition_counts_ok && rep.decode_encode_ok &&
             rep.encode_decode_ok;
  return rep;
}

}  // namespace sgnpart
