#include <doctest.h>

#include "allot/manipulation.hpp"
#include "allot/registry.hpp"

using namespace allot;

namespace {

const Preference kTruth = Preference::single_peaked(rat(1, 3), 1, 3);
const AgentSetting kAsymSetting{0, 1, 2, std::nullopt};

std::vector<Rat> v(std::initializer_list<Rat> xs) { return xs; }

}  // namespace

TEST_SUITE("option sets") {
  TEST_CASE("closed form for simple rules") {
    CHECK(simple_option_set(rat(1, 3), 1, 2) == OptionInterval{rat(1, 3), rat(1, 2)});
    CHECK(simple_option_set(rat(3, 4), 1, 2) == OptionInterval{rat(1, 2), rat(3, 4)});
    CHECK(simple_option_set(rat(1, 2), 1, 2) == OptionInterval{rat(1, 2), rat(1, 2)});
    CHECK(simple_option_set(3, 1, 2) == OptionInterval{rat(1, 2), 1});
    const AgentSetting endowed{1, 3, 3, std::vector<Rat>{2, rat(1, 2), rat(1, 2)}};
    CHECK(simple_option_set(0, endowed) == OptionInterval{0, rat(1, 2)});
  }

  TEST_CASE("witness profiles realise every amount up to omega") {
    const AgentSetting endowed{1, 3, 3, std::vector<Rat>{0, rat(1, 2), rat(5, 2)}};
    for (const Rule& rule : {simple_reallocation_rule(cel_rule()), simple_reallocation_rule(pro_rule())}) {
      for (int k = 0; k <= 12; ++k) {
        const Rat x = rat(k, 4);
        const auto profile = exact_outcome_profile(endowed, x);
        REQUIRE(profile);
        const Preference own = Preference::single_peaked(x < rat(1, 2) ? Rat(0) : Rat(3));
        CHECK(rule(endowed.economy(own, *profile))[1] == x);
      }
    }
  }

  TEST_CASE("exact outcome profiles") {
    const auto profile = exact_outcome_profile(AgentSetting{0, 3, 3, std::nullopt}, 2);
    REQUIRE(profile);
    CHECK(profile->at(0).peak() == rat(1, 2));
    CHECK_FALSE(exact_outcome_profile(kAsymSetting, 2));
  }

  TEST_CASE("ced option set at the asymmetric preference") {
    const SampledOptionSet set = option_set_sampled(ced_rule(), kAsymSetting, kTruth);
    CHECK(set.min() == 0);
    CHECK(set.max() == rat(2, 3));
    CHECK(set.distinct().size() > 40);
    const Economy w = set.witness_economy(rat(2, 3));
    CHECK(ced(w)[0] == rat(2, 3));
  }

  TEST_CASE("ced option set after reporting peak zero") {
    const SampledOptionSet set = option_set_sampled(ced_rule(), kAsymSetting, Preference::single_peaked(0));
    CHECK(set.min() == 0);
    CHECK(set.max() == rat(1, 2));
    CHECK(set.witness(rat(1, 2)).at(0).peak() == 0);
  }

  TEST_CASE("simple rules stay inside the closed form") {
    for (const char* name : {"simple:cea", "simple:cel", "simple:pro"}) {
      const SampledOptionSet set = option_set_sampled(RuleFactory().make(name), kAsymSetting, kTruth);
      CHECK(set.min() == rat(1, 3));
      CHECK(set.max() == rat(1, 2));
    }
  }

  TEST_CASE("profiles are aligned across reports") {
    const Rule u = uniform_rule();
    const auto a = option_set_sampled(u, kAsymSetting, kTruth);
    const auto b = option_set_sampled(u, kAsymSetting, Preference::single_peaked(0));
    CHECK(a.size() == b.size());
    CHECK_FALSE(a.aligned_with(b));
  }
}

TEST_SUITE("obvious manipulation") {
  TEST_CASE("both evaluations on finite sets") {
    CHECK(obvious_by_definition(kTruth, v({0, rat(2, 3)}), v({0, rat(1, 2)})));
    CHECK(obvious_by_worst_case(kTruth, v({0, rat(2, 3)}), v({0, rat(1, 2)})));
    CHECK_FALSE(obvious_by_definition(kTruth, v({0, rat(1, 2)}), v({0, rat(1, 2)})));
    CHECK_FALSE(obvious_by_worst_case(kTruth, v({0, rat(1, 2)}), v({0, rat(1, 2)})));
  }

  TEST_CASE("interval verdicts") {
    const OptionInterval truth{0, rat(2, 3)};
    const OptionInterval mis{0, rat(1, 2)};
    const ManipulationVerdict yes = is_obvious_manipulation(kTruth, truth, mis);
    CHECK(yes.is_obvious);
    CHECK(yes.worst_truth == rat(2, 3));
    CHECK(yes.worst_misreport == rat(1, 2));
    CHECK(yes.by_definition);
    const ManipulationVerdict no = is_obvious_manipulation(kTruth, truth, truth);
    CHECK_FALSE(no.is_obvious);
    CHECK_FALSE(no.by_definition);
  }

  TEST_CASE("equal division in the misreport set blocks obviousness for simple rules") {
    for (int pk = 0; pk <= 24; ++pk) {
      const Preference truth = Preference::single_peaked(rat(pk, 12), 1, 3);
      const OptionInterval t = simple_option_set(truth.peak(), 1, 2);
      for (int mk = 0; mk <= 24; ++mk) {
        const OptionInterval m = simple_option_set(rat(mk, 12), 1, 2);
        CHECK_FALSE(is_obvious_manipulation(truth, t, m).is_obvious);
      }
    }
  }

  TEST_CASE("search finds the ced and proportional certificates") {
    const NomCase where{kTruth, kAsymSetting};
    const auto c = find_obvious_manipulation(ced_rule(), where);
    REQUIRE(c);
    CHECK(c->misreport.peak() == 0);
    CHECK(c->verdict.worst_truth == rat(2, 3));
    CHECK(c->verdict.worst_misreport == rat(1, 2));
    const auto p = find_obvious_manipulation(proportional_rule(), where);
    REQUIRE(p);
    CHECK(p->misreport.peak() == 0);
    CHECK(p->verdict.worst_truth == 1);
    CHECK(p->verdict.worst_misreport == rat(1, 2));
    CHECK(p->misreport_set->distinct() == v({0, rat(1, 2)}));
    CHECK_FALSE(find_obvious_manipulation(uniform_rule(), where));
  }

  TEST_CASE("certificates replay") {
    const NomCase where{kTruth, kAsymSetting};
    const auto c = find_obvious_manipulation(ced_rule(), where);
    REQUIRE(c);
    const auto again = replay(*c, ced_rule());
    REQUIRE(again);
    CHECK(again->misreport == c->misreport);
  }

  TEST_CASE("nom sweep verdicts") {
    const std::vector<std::size_t> ns{2, 3};
    const auto sweep = standard_sweep(41, 40, ns);
    CHECK(check_nom(simple_rule(cel_rule()), sweep).report.passed());
    const NomReport ced_report = check_nom(ced_rule(), sweep);
    CHECK_FALSE(ced_report.report.passed());
    REQUIRE(ced_report.report.witness);
    CHECK(ced_report.report.witness->variant.has_value());
    const NomReport hat = check_nom(gallery_rule(GalleryRule::kHat), sweep);
    CHECK_FALSE(hat.report.passed());
  }

  TEST_CASE("nom witnesses realise the reported worsts") {
    const Rule hat = gallery_rule(GalleryRule::kHat);
    const std::vector<std::size_t> ns{2, 3};
    const NomReport r = check_nom(hat, standard_sweep(42, 40, ns));
    REQUIRE(r.certificate);
    const std::size_t i = r.certificate->where.setting.agent;
    CHECK(hat(r.report.witness->economy)[i] == r.certificate->verdict.worst_truth);
    CHECK(hat(*r.report.witness->variant)[i] == r.certificate->verdict.worst_misreport);
  }

  TEST_CASE("reallocation rules use endowments as the reference") {
    const std::vector<std::size_t> ns{2, 3};
    const auto sweep = standard_sweep(43, 30, ns, true);
    const Rule r = simple_reallocation_rule(pro_rule());
    SearchOptions sampled;
    sampled.force_sampled = true;
    CHECK(check_nom(r, sweep).report.passed());
    CHECK(check_nom(r, std::span(sweep).first(20), sampled).report.passed());
  }

  TEST_CASE("outcomes added on the truthful side keep a sampled manipulation") {
    OpponentGrid coarse;
    coarse.step = rat(1, 12);
    OpponentGrid fine;
    fine.step = rat(1, 120);
    const Preference lie = Preference::single_peaked(0);
    for (const Rule& rule : {ced_rule(), proportional_rule()}) {
      const auto mis = option_set_sampled(rule, kAsymSetting, lie, coarse);
      const auto t_coarse = option_set_sampled(rule, kAsymSetting, kTruth, coarse);
      const auto t_fine = option_set_sampled(rule, kAsymSetting, kTruth, fine);
      REQUIRE(is_obvious_manipulation(kTruth, t_coarse, mis).is_obvious);
      CHECK(is_obvious_manipulation(kTruth, t_fine, mis).is_obvious);
    }
  }

  TEST_CASE("hat stays manipulable on a finer grid") {
    const Rule hat = gallery_rule(GalleryRule::kHat);
    const std::vector<std::size_t> ns{2, 3};
    const NomReport r = check_nom(hat, standard_sweep(42, 40, ns));
    REQUIRE(r.certificate);
    SearchOptions fine;
    fine.opponents.step = rat(1, 120);
    fine.misreports.step = rat(1, 120);
    CHECK(find_obvious_manipulation(hat, r.certificate->where, fine).has_value());
  }

  TEST_CASE("outcomes added on the misreport side can remove a sampled manipulation") {
    // Reporting peak 0 pays 1/2 except against an opponent peak only the fine grid reaches.
    const Rule odd("odd", RuleDomain::kSinglePeaked, [](const Economy& e) -> std::vector<Rat> {
      const Rat x = e.pref(0).peak() != 0 ? rat(2, 3) : e.pref(1).peak() == rat(1, 120) ? Rat(1) : rat(1, 2);
      return {x, Rat(1 - x)};
    });
    OpponentGrid coarse;
    coarse.random_profiles = 0;
    OpponentGrid fine = coarse;
    fine.step = rat(1, 120);
    const Preference lie = Preference::single_peaked(0);
    const auto truth = option_set_sampled(odd, kAsymSetting, kTruth, coarse);
    CHECK(is_obvious_manipulation(kTruth, truth, option_set_sampled(odd, kAsymSetting, lie, coarse)).is_obvious);
    CHECK_FALSE(is_obvious_manipulation(kTruth, truth, option_set_sampled(odd, kAsymSetting, lie, fine)).is_obvious);
  }
}
