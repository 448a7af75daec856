#include <doctest.h>

#include <set>

#include "sga/oracle.hpp"
#include "test_util.hpp"

using namespace sga;
using namespace sga::test;

TEST_CASE("enumeration counts match the closed form") {
    CHECK(enumeration_size(0) == 8);
    CHECK(enumeration_size(1) == 192);
    CHECK(enumeration_size(2) == 11520);
    CHECK(enumeration_size(3) == 1290240);

    const auto k0 = enumerate_extended_legal_strings(0);
    CHECK(k0.size() == 8);
    const auto k1 = enumerate_extended_legal_strings(1);
    CHECK(k1.size() == 192);

    std::set<std::string> distinct;
    for (const GeneString& s : k1) {
        CHECK(s.is_extended_legal());
        distinct.insert(s.str());
    }
    CHECK(distinct.size() == 192);

    std::size_t k2_count = 0;
    for_each_extended_legal_string(2, [&](const GeneString&) { ++k2_count; });
    CHECK(k2_count == 11520);

    CHECK_THROWS_AS(enumerate_extended_legal_strings(4), cap_error);
}

TEST_CASE("random strings are deterministic per seed and cover the k=1 space") {
    CHECK(random_extended_legal_string(3, 42) == random_extended_legal_string(3, 42));
    CHECK(!(random_extended_legal_string(3, 42) == random_extended_legal_string(3, 43)));

    std::set<std::string> all;
    for (const GeneString& s : enumerate_extended_legal_strings(1)) all.insert(s.str());
    std::set<std::string> seen;
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        const GeneString s = random_extended_legal_string(1, seed);
        CHECK(s.is_extended_legal());
        seen.insert(s.str());
    }
    CHECK(seen == all);
}

TEST_CASE("brute force decides the paper instances") {
    const auto simple = rule_kinds(RuleSystem::simple);
    CHECK(!brute_force_success(GS("2 3 4 -2 -3 -4"), simple).successful);

    const SearchResult on_u = brute_force_success(GS(kRunningU), simple);
    CHECK(on_u.successful);
    REQUIRE(on_u.string_witness.has_value());
    CHECK(on_u.string_witness->success);
    std::vector<StringRule> witness_rules;
    for (const ReductionStep& step : on_u.string_witness->steps)
        witness_rules.push_back(step.rule);
    CHECK(apply_reduction(GS(kRunningU), witness_rules).success);

    SimpleMarkedGraph m_only;
    m_only.add_vertex(M(), Sign::negative);
    for (const GraphRuleSet& s :
         {GraphRuleSet{}, GraphRuleSet{GraphRuleKind::gnr, GraphRuleKind::sgpr}}) {
        const SearchResult r = brute_force_success(m_only, s);
        CHECK(r.successful);
        REQUIRE(r.graph_witness.has_value());
        CHECK(r.graph_witness->steps.empty());
        CHECK(r.states_explored == 0);
    }

    SimpleMarkedGraph no_m;
    no_m.add_vertex(P(2), Sign::negative);
    CHECK_THROWS_AS(brute_force_success(no_m, GraphRuleSet{GraphRuleKind::gnr}), graph_error);
}

TEST_CASE("search caps raise an inconclusive error instead of a wrong verdict") {
    SearchOptions tight;
    tight.max_states = 1;
    CHECK_THROWS_AS(brute_force_success(GS(kRunningU), rule_kinds(RuleSystem::simple), tight),
                    cap_error);
}

TEST_CASE("verdicts do not depend on rule exploration order") {
    SearchOptions reversed;
    reversed.reverse_rule_order = true;
    const auto simple = rule_kinds(RuleSystem::simple);
    const GraphRuleSet graph_rules{GraphRuleKind::gnr, GraphRuleKind::sgpr};
    for (const GeneString& s : enumerate_extended_legal_strings(1)) {
        CHECK(brute_force_success(s, simple).successful ==
              brute_force_success(s, simple, reversed).successful);
        const SimpleMarkedGraph g = build_extended_overlap_graph(s);
        CHECK(brute_force_success(g, graph_rules).successful ==
              brute_force_success(g, graph_rules, reversed).successful);
    }
}

TEST_CASE("simulation verification on the running example and k=1 space") {
    const SimulationReport on_u = verify_simulation(GS(kRunningU));
    CHECK(on_u.ok());
    CHECK(on_u.identities_checked == 5);

    CHECK(verify_simulation(GS("b e")).identities_checked == 0);

    for (const GeneString& s : enumerate_extended_legal_strings(1))
        CHECK(verify_simulation(s).ok());
}

TEST_CASE("cross-validation at k=1: corrected is exact, literal gap is m-outgoing") {
    const CrossValidationReport report = cross_validate_characterizations(1);
    CHECK(report.instances == 192);
    CHECK(report.comparisons == 4 * 192);
    CHECK(report.corrected_matches_brute());
    CHECK(report.certificate_failures.empty());
    CHECK(report.enumeration_failures.empty());
    CHECK(!report.literal_disagreements.empty());
    CHECK(report.literal_gap_is_m_outgoing_only());

    bool found_counterexample = false;
    for (const Disagreement& d : report.literal_disagreements)
        if (d.text == "2 b e 2" && d.rule_set == GraphRuleSet{GraphRuleKind::gnr})
            found_counterexample = true;
    CHECK(found_counterexample);

    const nlohmann::json j = report;
    CHECK(j["instances"] == 192);
    CHECK(j["corrected_disagreements"].empty());
}

TEST_CASE("sampled cross-validation is deterministic per seed") {
    const CrossValidationReport a = cross_validate_characterizations_sampled(3, 50, 7);
    const CrossValidationReport b = cross_validate_characterizations_sampled(3, 50, 7);
    CHECK(a.instances == 50);
    CHECK(a.summary() == b.summary());
    CHECK(a.corrected_matches_brute());
}

TEST_CASE("marker-preserving rules and graph rules agree on reachability") {
    for (std::size_t k = 0; k <= 2; ++k) {
        const EquivalenceReport report = verify_marker_rule_equivalence(k);
        CHECK(report.instances == enumeration_size(k));
        CHECK(report.ok());
    }
}
