#include <doctest.h>

#include "allot/economy.hpp"

using namespace allot;

namespace {

Economy peaks(std::initializer_list<Rat> ps, Rat omega) {
  const std::vector<Rat> v(ps);
  return make_economy(v, omega);
}

std::vector<std::size_t> idx(std::initializer_list<std::size_t> xs) { return xs; }

}  // namespace

TEST_SUITE("economy") {
  TEST_CASE("excess") {
    CHECK(excess(peaks({rat(1, 3), 0}, 1)) == rat(-2, 3));
    CHECK(excess(peaks({rat(1, 2), rat(1, 2)}, 1)) == 0);
    CHECK(excess(peaks({rat(1, 2), rat(3, 2), rat(5, 2)}, 3)) == rat(3, 2));
  }

  TEST_CASE("partition under excess demand") {
    const SimplePartition part = partition(peaks({rat(1, 2), rat(3, 2), rat(5, 2)}, 3));
    CHECK(part.excess_demand());
    CHECK(part.plus == idx({0}));
    CHECK(part.minus == idx({1, 2}));
    CHECK(part.adjustment == rat(1, 2));
    const ClaimsProblem cp = claims_of_minus(part, peaks({rat(1, 2), rat(3, 2), rat(5, 2)}, 3));
    CHECK(std::vector<Rat>(cp.claims().begin(), cp.claims().end()) == std::vector<Rat>{rat(1, 2), rat(3, 2)});
    CHECK(cp.endowment() == rat(1, 2));
  }

  TEST_CASE("partition under excess supply") {
    const SimplePartition part = partition(peaks({rat(1, 3), 0}, 1));
    CHECK_FALSE(part.excess_demand());
    CHECK(part.plus.empty());
    CHECK(part.minus == idx({0, 1}));
    CHECK(part.adjustment == 0);
  }

  TEST_CASE("balanced economy counts as excess demand") {
    const Economy econ = peaks({0, 0, 3}, 3);
    const SimplePartition part = partition(econ);
    CHECK(part.z == 0);
    CHECK(part.excess_demand());
    CHECK(part.plus == idx({0, 1}));
    CHECK(part.minus == idx({2}));
    CHECK(part.adjustment == 2);
    const ClaimsProblem cp = claims_of_minus(part, econ);
    CHECK(cp.claims()[0] == 2);
    CHECK(cp.endowment() == cp.total_claims());
  }

  TEST_CASE("everyone at equal division") {
    const SimplePartition part = partition(peaks({1, 1, 1}, 3));
    CHECK(part.plus.empty());
    CHECK(part.adjustment == 0);
  }

  TEST_CASE("endowment partition") {
    const Economy econ({Preference::single_peaked(1), Preference::single_peaked(1)}, 2,
                       std::vector<Rat>{rat(1, 2), rat(3, 2)});
    const SimplePartition part = endowment_partition(econ);
    CHECK(part.plus == idx({1}));
    CHECK(part.minus == idx({0}));
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(peaks({1}, 1), DomainError);
    CHECK_THROWS_AS(peaks({1, 1}, 0), DomainError);
    const std::vector<Preference> two(2, Preference::single_peaked(1));
    CHECK_THROWS_AS(Economy(two, 2, std::vector<Rat>{1, 2}), DomainError);
    CHECK_THROWS_AS(Economy(two, 2, std::vector<Rat>{3, -1}), DomainError);
    CHECK_THROWS_AS(Allotment({1, 1}, 3), DomainError);
    CHECK_THROWS_AS(Allotment({-1, 3}, 2), DomainError);
    CHECK_THROWS_AS(Economy(two, 2).endowments(), DomainError);
  }

  TEST_CASE("equal share and replacement") {
    const Economy econ = peaks({rat(1, 2), 2}, 3);
    CHECK(econ.equal_share() == rat(3, 2));
    const Economy swapped = econ.with_pref(1, Preference::single_peaked(0));
    CHECK(swapped.pref(1).peak() == 0);
    CHECK(econ.pref(1).peak() == 2);
  }
}
