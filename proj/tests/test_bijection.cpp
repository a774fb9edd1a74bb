#include <doctest.h>

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "sgnpart/bijection.hpp"
#include "sgnpart/enumerate.hpp"
#include "sgnpart/error.hpp"
#include "sgnpart/partition.hpp"
#include "sgnpart/stirling.hpp"

using sgnpart::choice_sequence;
using sgnpart::cyclic_successor;
using sgnpart::decode;
using sgnpart::decoded_assignment;
using sgnpart::encode;
using sgnpart::errc;
using sgnpart::error;
using sgnpart::signed_partition;
using sgnpart::urn_assignment;
using sgnpart::urn_reservation;
using sgnpart::validate;
using sgnpart::verify_bijection;

namespace {

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return errc::internal_inconsistency;
}

urn_reservation reserve(int m, std::initializer_list<int> urns) {
  urn_reservation used(m);
  for (int u : urns)
    if (u != 1) used.mark(u);
  return used;
}

}  // namespace

TEST_CASE("cyclic successor skips urn 1 and consumed urns") {
  CHECK(cyclic_successor(7, reserve(7, {1, 4, 5, 7})) == 2);
  CHECK(cyclic_successor(4, reserve(7, {1, 4})) == 5);
  CHECK(cyclic_successor(2, reserve(3, {1, 2})) == 3);
  CHECK(code_of([] { cyclic_successor(3, reserve(3, {1, 2, 3})); }) ==
        errc::no_free_urn);
}

TEST_CASE("encode reproduces the worked six-balls-into-seven-urns example") {
  signed_partition p = validate(6, {1}, {{2, -3, 5}, {4, -6}});
  urn_assignment f = encode(p, {4, 7}, 7);
  CHECK(f.urns == std::vector<int>{1, 4, 5, 7, 4, 2});
  CHECK(f.m == 7);

  decoded_assignment back = decode(f);
  CHECK(back.partition == p);
  CHECK(back.choices == choice_sequence{4, 7});
}

TEST_CASE("encode with only a zero-block") {
  signed_partition p = validate(1, {1}, {});
  urn_assignment f = encode(p, {}, 3);
  CHECK(f.urns == std::vector<int>{1});
}

TEST_CASE("a pair with no negative side still consumes its successor urn") {
  signed_partition p = validate(1, {}, {{1}});
  urn_assignment f = encode(p, {2}, 3);
  CHECK(f.urns == std::vector<int>{2});
  // urn 3 is consumed although no ball landed in it: choosing it next is
  // invalid for a second pair, and decode still recovers choice 2.
  decoded_assignment back = decode(f);
  CHECK(back.partition == p);
  CHECK(back.choices == choice_sequence{2});

  urn_assignment g = encode(p, {3}, 3);
  CHECK(g.urns == std::vector<int>{3});
  CHECK(decode(g).choices == choice_sequence{3});
}

TEST_CASE("encode rejects bad input") {
  signed_partition p = validate(1, {}, {{1}});
  CHECK(code_of([&] { encode(p, {2}, 6); }) == errc::even_urn_count);
  CHECK(code_of([&] { encode(p, {2}, 1); }) == errc::too_many_pairs);
  CHECK(code_of([&] { encode(p, {1}, 3); }) == errc::invalid_choice);
  CHECK(code_of([&] { encode(p, {4}, 3); }) == errc::invalid_choice);
  CHECK(code_of([&] { encode(p, {}, 3); }) == errc::invalid_choice);

  signed_partition q = validate(2, {}, {{1}, {2}});
  CHECK(code_of([&] { encode(q, {2, 4}, 3); }) == errc::too_many_pairs);
  // k=2 fits exactly into m=5 (urns 2,3 then 4,5)
  CHECK(encode(q, {2, 4}, 5).urns == std::vector<int>{2, 4});
  // urn 3 was consumed as the successor of choice 2
  CHECK(code_of([&] { encode(q, {2, 3}, 5); }) == errc::invalid_choice);
}

TEST_CASE("decode trivial assignments") {
  urn_assignment all_zero{3, 5, {1, 1, 1}};
  decoded_assignment d = decode(all_zero);
  CHECK(d.partition == validate(3, {1, 2, 3}, {}));
  CHECK(d.choices.empty());

  urn_assignment single{1, 3, {2}};
  decoded_assignment s = decode(single);
  CHECK(s.partition == validate(1, {}, {{1}}));
  CHECK(s.choices == choice_sequence{2});

  CHECK(code_of([] { decode(urn_assignment{1, 4, {2}}); }) ==
        errc::even_urn_count);
  CHECK(code_of([] { decode(urn_assignment{1, 3, {4}}); }) ==
        errc::value_out_of_range);
}

TEST_CASE("assignment streams have falling-factorial size") {
  signed_partition p = validate(1, {}, {{1}});
  auto assignments = sgnpart::enumerate_assignments(p, 3);
  REQUIRE(assignments.size() == 2);
  CHECK(assignments[0].first == choice_sequence{2});
  CHECK(assignments[0].second.urns == std::vector<int>{2});
  CHECK(assignments[1].first == choice_sequence{3});
  CHECK(assignments[1].second.urns == std::vector<int>{3});

  signed_partition zero_only = validate(2, {1, 2}, {});
  CHECK(sgnpart::enumerate_assignments(zero_only, 7).size() == 1);

  // every n=2, k=1 partition at m=5 induces exactly m-1 = 4 assignments
  sgnpart::for_each_partition(2, 1, [](const signed_partition& q) {
    CHECK(sgnpart::enumerate_assignments(q, 5).size() == 4);
  });
}

TEST_CASE("per-partition counts match the type-B falling factorial") {
  for (int n = 0; n <= 4; ++n) {
    for (int m : {3, 5, 7}) {
      sgnpart::for_each_partition(n, std::nullopt, [&](const signed_partition& p) {
        int k = p.pair_count();
        if (2 * k > m - 1) return;
        auto assignments = sgnpart::enumerate_assignments(p, m);
        CHECK(sgnpart::bigint(static_cast<std::int64_t>(assignments.size())) ==
              sgnpart::falling_factorial_B_at(k, m));
      });
    }
  }
}

TEST_CASE("balls in urn 1 are exactly the zero-block support") {
  signed_partition p = validate(4, {2, 4}, {{1, -3}});
  sgnpart::for_each_assignment(p, 5, [&](const choice_sequence&,
                                         const urn_assignment& f) {
    for (int i = 1; i <= 4; ++i) {
      bool in_zero = i == 2 || i == 4;
      CHECK((f.urns[static_cast<std::size_t>(i - 1)] == 1) == in_zero);
    }
  });
}

TEST_CASE("round trips across all partitions and choices at desk scale") {
  for (int n = 0; n <= 4; ++n) {
    for (int m : {1, 3, 5, 7}) {
      sgnpart::for_each_partition(n, std::nullopt, [&](const signed_partition& p) {
        if (2 * p.pair_count() > m - 1) return;
        sgnpart::for_each_assignment(
            p, m, [&](const choice_sequence& c, const urn_assignment& f) {
              decoded_assignment back = decode(f);
              CHECK(back.partition == p);
              CHECK(back.choices == c);
              CHECK(encode(back.partition, back.choices, m) == f);
            });
      });
    }
  }
}

TEST_CASE("verification reports for the worked scales") {
  auto rep = verify_bijection(2, 3);
  CHECK(rep.functions == 9);
  CHECK(rep.encoded == 9);
  CHECK(rep.distinct == 9);
  CHECK(rep.partitions == 6);
  CHECK(rep.partitions_encoded == 5);  // the k=2 partition induces none
  CHECK(rep.pass);

  auto rep35 = verify_bijection(3, 5);
  CHECK(rep35.functions == 125);
  CHECK(rep35.distinct == 125);
  CHECK(rep35.pass);

  auto rep01 = verify_bijection(0, 1);
  CHECK(rep01.functions == 1);
  CHECK(rep01.pass);
}

TEST_CASE("verification guard and parity errors") {
  CHECK(code_of([] { verify_bijection(2, 4); }) == errc::even_urn_count);
  CHECK(code_of([] { verify_bijection(8, 9, 1000000); }) ==
        errc::guard_exceeded);
}

TEST_CASE("reservation bookkeeping consumes 1 + 2k urns") {
  signed_partition p = validate(3, {3}, {{1}, {2}});
  urn_assignment f = encode(p, {3, 5}, 7);
  CHECK(f.urns == std::vector<int>{3, 5, 1});
  // pair 1 consumed urns 3 and 4, pair 2 consumed 5 and 6
  decoded_assignment back = decode(f);
  CHECK(back.partition == p);
  CHECK(back.choices == choice_sequence{3, 5});

  urn_reservation used(7);
  CHECK(used.marked_count() == 1);
  used.mark(3);
  used.mark(cyclic_successor(3, used));
  CHECK(used.marked_count() == 3);
  used.mark(5);
  used.mark(cyclic_successor(5, used));
  CHECK(used.marked_count() == 5);
  CHECK(used.contains(4));
  CHECK(used.contains(6));
  CHECK(!used.contains(2));
  CHECK(!used.contains(7));
}
