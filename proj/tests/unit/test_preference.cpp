#include <doctest.h>

#include "allot/preference.hpp"
#include "oracles.hpp"

using namespace allot;

TEST_SUITE("rational") {
  TEST_CASE("parses fractions and integers exactly") {
    CHECK(parse_rat("1/3") == rat(1, 3));
    CHECK(parse_rat("-2/4") == rat(-1, 2));
    CHECK(parse_rat("7") == 7);
    CHECK(to_string(rat(6, 4)) == "3/2");
    CHECK(to_string(Rat(5)) == "5");
  }

  TEST_CASE("rejects decimals and malformed input") {
    for (const char* bad : {"0.5", "1e3", "1/0", "", "1/", "/2", "a/b", "1/-2", "1 /2"}) {
      const std::string text = bad;
      CAPTURE(text);
      CHECK_THROWS_AS(parse_rat(bad), ParseError);
    }
  }
}

TEST_SUITE("preference") {
  const Preference asym = Preference::single_peaked(rat(1, 3), 1, 3);

  TEST_CASE("disutility of the asymmetric example") {
    CHECK(asym.disutility(rat(1, 3)) == 0);
    CHECK(asym.disutility(0) == rat(1, 3));
    CHECK(asym.disutility(rat(1, 2)) == rat(1, 2));
    CHECK(asym.disutility(rat(2, 3)) == 1);
    CHECK(asym.strictly_prefers(0, rat(1, 2)));
  }

  TEST_CASE("symmetric slopes give indifference at equal distance") {
    const Preference p = Preference::single_peaked(2, 5, 5);
    CHECK(p.disutility(1) == 5);
    CHECK(p.disutility(3) == 5);
    CHECK(p.indifferent(1, 3));
  }

  TEST_CASE("comparisons") {
    CHECK(asym.compare(rat(1, 2), rat(2, 3)) == Comparison::kStrict);
    CHECK(asym.compare(rat(2, 3), rat(1, 2)) == Comparison::kWorse);
    CHECK(asym.compare(rat(3, 7), rat(3, 7)) == Comparison::kIndifferent);
    const Preference inf = Preference::unbounded();
    CHECK(inf.strictly_prefers(5, 3));
    CHECK(inf.disutility(5) == -5);
    CHECK_FALSE(inf.is_single_peaked());
  }

  TEST_CASE("plateau has zero disutility inside") {
    const Preference p = Preference::single_plateaued(1, 2, 3, 1);
    CHECK(p.disutility(rat(3, 2)) == 0);
    CHECK(p.disutility(0) == 3);
    CHECK(p.disutility(4) == 2);
    CHECK(p.is_ideal(2));
    CHECK_FALSE(p.is_single_peaked());
    CHECK_THROWS_AS(p.peak(), DomainError);
  }

  TEST_CASE("invalid preferences are rejected") {
    CHECK_THROWS_AS(Preference::single_peaked(-1), DomainError);
    CHECK_THROWS_AS(Preference::single_peaked(1, 0, 1), DomainError);
    CHECK_THROWS_AS(Preference::single_plateaued(2, 1), DomainError);
    CHECK_THROWS_AS(asym.disutility(-1), DomainError);
  }

  TEST_CASE("worst element") {
    const std::vector<Rat> ys{0, rat(1, 2), rat(2, 3)};
    CHECK(worst(asym, ys) == rat(2, 3));
    const std::vector<Rat> one{rat(5, 7)};
    CHECK(worst(asym, one) == rat(5, 7));
    const std::vector<Rat> tie{0, 2};
    CHECK(worst(Preference::single_peaked(1), tie) == 0);
    CHECK_THROWS_AS(worst(asym, std::vector<Rat>{}), DomainError);
  }

  TEST_CASE("worst matches the pairwise brute force") {
    std::vector<Rat> ys;
    for (int k = 0; k <= 24; ++k) ys.push_back(rat(k, 12));
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 3}, {3, 1}, {1, 10}, {10, 1}}) {
      for (int pk = 0; pk <= 24; ++pk) {
        const Preference p = Preference::single_peaked(rat(pk, 12), a, b);
        CHECK(worst(p, ys) == oracle::brute_worst(p, ys));
        for (std::size_t lo = 0; lo < ys.size(); lo += 5) {
          const std::span<const Rat> sub(ys.begin() + static_cast<long>(lo), ys.end());
          CHECK(worst_of_interval(p, sub.front(), sub.back()) == oracle::brute_worst(p, sub));
        }
      }
    }
  }
}
