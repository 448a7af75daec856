// Acceptance suite: replays the worked examples exactly and runs the
// exhaustive/randomized verification campaigns at their stated budgets.
// Prints one line per criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sga/characterize.hpp"
#include "sga/graph_rules.hpp"
#include "sga/marked_graph.hpp"
#include "sga/oracle.hpp"
#include "sga/string_rules.hpp"
#include "sga/strings.hpp"

using namespace sga;

namespace {

const char* kRunningU = "5 -2 4 4 -5 3 -6 2 6 b 3 -e";
const char* kRunningV = "-4 2 3 -2 4 -e -3 b";
const char* kRunningW = "b 2 3 4 2 3 4 e";

Identity P(int v) { return Identity::pointer(v); }
Identity M() { return Identity::marker(); }
GeneString GS(const char* text) { return GeneString::parse(text); }

const GraphRuleSet kGnrOnly{GraphRuleKind::gnr};
const GraphRuleSet kSgprOnly{GraphRuleKind::sgpr};
const GraphRuleSet kBoth{GraphRuleKind::gnr, GraphRuleKind::sgpr};

struct Checker {
    std::size_t checks = 0;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

// criterion 2/3 corpora: every extended legal string with k <= 2, then
// 10^4 seeded random strings cycling k through 0..8
void for_each_exhaustive_k2(const std::function<void(const GeneString&)>& fn) {
    for (std::size_t k = 0; k <= 2; ++k) for_each_extended_legal_string(k, fn);
}

void for_each_random_k8(const std::function<void(const GeneString&)>& fn) {
    for (std::uint64_t i = 0; i < 10000; ++i)
        fn(random_extended_legal_string(i % 9, 0x5417 + i));
}

void criterion_1(Checker& c) {
    const GeneString u = GS(kRunningU);

    c.require(apply_rule(u, parse_string_rule("sspr:-6")) == GS("5 -2 4 4 -5 3 -2 b 3 -e"),
              "sspr:-6 on u");
    const ReductionTrace phi =
        apply_reduction(u, parse_string_rules("sspr:-6,snr:4,sspr:5,sspr:2,sspr:-3"));
    c.require(phi.success && phi.final_string() == GS("-b -e"), "phi(u) = -b -e");

    std::vector<std::string> simple_names;
    for (const StringRule& r : applicable_rules(u, RuleSystem::simple))
        simple_names.push_back(r.str());
    c.require(simple_names == std::vector<std::string>{"snr:4", "sspr:-6"},
              "simple applicability on u");

    const SimpleMarkedGraph gu = build_extended_overlap_graph(u);
    std::vector<std::string> graph_names;
    for (const GraphRule& r : applicable_graph_rules(gu)) graph_names.push_back(r.str());
    c.require(graph_names == std::vector<std::string>{"gnr:4", "sgpr:6"},
              "graph applicability on G_u");

    using Edge = std::pair<Identity, Identity>;

    const SimpleMarkedGraph gv = build_extended_overlap_graph(GS(kRunningV));
    c.require(gv.vertices() == std::map<Identity, Sign>{{P(2), Sign::positive},
                                                        {P(3), Sign::positive},
                                                        {P(4), Sign::positive},
                                                        {M(), Sign::positive}} &&
                  gv.undirected_edges() ==
                      std::set<Edge>{{P(2), P(3)}, {P(3), P(4)}, {P(3), M()}} &&
                  gv.directed_edges() == std::set<Edge>{{P(2), P(4)}},
              "G_v matches its figure");

    const SimpleMarkedGraph gw = build_extended_overlap_graph(GS(kRunningW));
    c.require(gw.vertices() == std::map<Identity, Sign>{{P(2), Sign::negative},
                                                        {P(3), Sign::negative},
                                                        {P(4), Sign::negative},
                                                        {M(), Sign::negative}} &&
                  gw.undirected_edges() ==
                      std::set<Edge>{{P(2), P(3)}, {P(2), P(4)}, {P(3), P(4)}} &&
                  gw.directed_edges() ==
                      std::set<Edge>{{P(2), M()}, {P(3), M()}, {P(4), M()}},
              "G_w matches its figure");

    c.require(overlap_projection(gu).undirected_edges() ==
                  std::set<Edge>{{P(2), P(3)}, {P(2), P(5)}, {P(2), P(6)}, {P(3), M()}},
              "overlap projection of G_u matches the overlap-graph figure");

    c.require(gu.vertices() == std::map<Identity, Sign>{{P(2), Sign::positive},
                                                        {P(3), Sign::negative},
                                                        {P(4), Sign::negative},
                                                        {P(5), Sign::positive},
                                                        {P(6), Sign::positive},
                                                        {M(), Sign::positive}} &&
                  gu.undirected_edges() ==
                      std::set<Edge>{{P(2), P(3)}, {P(2), P(5)}, {P(2), P(6)}, {P(3), M()}} &&
                  gu.directed_edges().count({P(4), P(5)}) == 1 &&
                  gu.directed_edges().count({P(4), P(2)}) == 1,
              "G_u matches its figure on signs and displayed edges");
    c.require(gu.has_directed_edge(P(6), P(3)),
              "the interval definition forces the extra edge 6->3");

    SimpleMarkedGraph fig7;
    fig7.add_vertex(P(2), Sign::negative);
    fig7.add_vertex(P(3), Sign::negative);
    fig7.add_vertex(P(4), Sign::negative);
    fig7.add_vertex(P(5), Sign::positive);
    fig7.add_vertex(M(), Sign::positive);
    fig7.add_undirected_edge(M(), P(3));
    fig7.add_undirected_edge(P(3), P(2));
    fig7.add_undirected_edge(P(2), P(5));
    fig7.add_directed_edge(P(4), P(5));
    fig7.add_directed_edge(P(4), P(2));
    c.require(apply_graph_rule(gu, parse_graph_rule("sgpr:6")) == fig7,
              "sgpr:6 on G_u matches the depicted graph");

    std::vector<std::string> w_rules;
    for (const StringRule& r : applicable_rules(GS(kRunningW), RuleSystem::simple))
        w_rules.push_back(r.str());
    c.require(w_rules == std::vector<std::string>{"ssdr:2,3", "ssdr:3,4"},
              "ssdr applicability on w");
    bool ssdr24_rejected = false;
    try {
        apply_rule(GS(kRunningW), parse_string_rule("ssdr:2,4"));
    } catch (const rule_error&) {
        ssdr24_rejected = true;
    }
    c.require(ssdr24_rejected, "ssdr:2,4 is not applicable to w");
    c.require(relabel(gw, {{P(2), P(3)}, {P(3), P(2)}}) == gw,
              "swapping 2 and 3 fixes G_w");

    c.require(MdsDescriptor::parse("M3 M4 M6 M5 M7 M9 -M2 M1 M8").to_gene_string() ==
                  GS("3 4 4 5 6 7 5 6 7 8 9 e -3 -2 b 2 8 9"),
              "MDS conversion reproduces the actin string");

    const SuccessVerdict u_sgpr = check_success(gu, kSgprOnly);
    c.require(!u_sgpr.successful && u_sgpr.failed_condition == FailedCondition::not_a_tree,
              "G_u unsuccessful in {sgpr} for not-a-tree");

    const SuccessVerdict v_sgpr = check_success(gv, kSgprOnly);
    c.require(v_sgpr.successful && v_sgpr.certificate &&
                  v_sgpr.certificate->ordering == std::vector<Identity>{P(2), P(4), P(3), M()},
              "G_v successful in {sgpr} with certificate (2, 4, 3, m)");

    OrderingCertificate bad_order;
    bad_order.ordering = {P(4), P(2), P(3), M()};
    for (Identity v : {P(4), P(2), P(3)}) bad_order.roles[v] = GraphRuleKind::sgpr;
    c.require(!validate_ordering(gv, bad_order), "(4, 2, 3, m) is not a successful ordering");

    const auto orderings = enumerate_successful_orderings(gu, kBoth);
    bool enumeration_exact =
        orderings.size() == 3 &&
        orderings[0].ordering == std::vector<Identity>{P(4), P(5), P(6), P(2), P(3), M()} &&
        orderings[1].ordering == std::vector<Identity>{P(4), P(6), P(5), P(2), P(3), M()} &&
        orderings[2].ordering == std::vector<Identity>{P(6), P(4), P(5), P(2), P(3), M()};
    for (const OrderingCertificate& cert : orderings) {
        enumeration_exact = enumeration_exact && cert.roles.at(P(4)) == GraphRuleKind::gnr;
        for (Identity v : {P(2), P(3), P(5), P(6)})
            enumeration_exact = enumeration_exact && cert.roles.at(v) == GraphRuleKind::sgpr;
    }
    c.require(enumeration_exact, "enumerate(G_u, {gnr,sgpr}) is exactly the three orderings");

    c.require(!brute_force_success(GS("2 3 4 -2 -3 -4"), rule_kinds(RuleSystem::simple)).successful,
              "2 3 4 -2 -3 -4 has no successful simple reduction");
}

void criterion_2(Checker& c) {
    using clock = std::chrono::steady_clock;

    auto start = clock::now();
    std::size_t exhaustive_violations = 0;
    std::size_t exhaustive_count = 0;
    for_each_exhaustive_k2([&](const GeneString& s) {
        ++exhaustive_count;
        exhaustive_violations += verify_simulation(s).violations.size();
    });
    const double exhaustive_seconds =
        std::chrono::duration<double>(clock::now() - start).count();
    c.require(exhaustive_count == 8 + 192 + 11520, "exhaustive corpus size");
    c.require(exhaustive_violations == 0, "simulation violations on the exhaustive corpus");
    c.require(exhaustive_seconds < 30.0, "exhaustive simulation within 30 s");

    start = clock::now();
    std::size_t random_violations = 0;
    for_each_random_k8(
        [&](const GeneString& s) { random_violations += verify_simulation(s).violations.size(); });
    const double random_seconds = std::chrono::duration<double>(clock::now() - start).count();
    c.require(random_violations == 0, "simulation violations on the random corpus");
    c.require(random_seconds < 300.0, "random simulation within 5 min");
}

void criterion_3(Checker& c) {
    std::size_t failures = 0;
    const auto check_one = [&](const GeneString& s) {
        const DirectedProperties p = directed_properties(build_extended_overlap_graph(s));
        if (!p.acyclic || !p.transitively_closed) ++failures;
    };
    for_each_exhaustive_k2(check_one);
    for_each_random_k8(check_one);
    c.require(failures == 0, "every nesting projection is acyclic and transitively closed");
}

struct CrossValidationRuns {
    std::vector<CrossValidationReport> exhaustive; // k = 0, 1, 2
    CrossValidationReport sampled_k3;
    double sampled_seconds = 0;
};

void criterion_4(Checker& c, CrossValidationRuns& runs) {
    for (std::size_t k = 0; k <= 2; ++k)
        runs.exhaustive.push_back(cross_validate_characterizations(k));

    const auto start = std::chrono::steady_clock::now();
    runs.sampled_k3 = cross_validate_characterizations_sampled(3, 100000, 0x5417);
    runs.sampled_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool found_2be2 = false;
    bool found_3b22e3 = false;
    for (const CrossValidationReport& report : runs.exhaustive) {
        c.require(report.corrected_matches_brute(),
                  "corrected check equals brute force (exhaustive)");
        c.require(report.literal_gap_is_m_outgoing_only(),
                  "literal disagreements are m-outgoing with gnr in S");
        for (const Disagreement& d : report.literal_disagreements) {
            if (d.text == "2 b e 2" && d.rule_set == kGnrOnly) found_2be2 = true;
            if (d.text == "3 b 2 2 e 3") found_3b22e3 = true;
        }
    }
    c.require(found_2be2, "2 b e 2 is itemized as a literal disagreement");
    c.require(found_3b22e3, "3 b 2 2 e 3 is itemized as a literal disagreement");

    c.require(runs.sampled_k3.instances == 100000, "k=3 sample size");
    c.require(runs.sampled_k3.corrected_matches_brute(),
              "corrected check equals brute force (k=3 sample)");
    c.require(runs.sampled_k3.literal_gap_is_m_outgoing_only(),
              "literal disagreements are m-outgoing with gnr in S (k=3 sample)");
    c.require(runs.sampled_seconds < 600.0, "k=3 sample within 10 min");
}

void criterion_5(Checker& c) {
    for (std::size_t k = 0; k <= 2; ++k) {
        const EquivalenceReport report = verify_marker_rule_equivalence(k);
        c.require(report.instances == enumeration_size(k),
                  "equivalence corpus size at k=" + std::to_string(k));
        c.require(report.ok(),
                  "brute force over {snr,sspr} equals brute force over {gnr,sgpr} at k=" +
                      std::to_string(k));
    }
}

void criterion_6(Checker& c) {
    const auto k0 = enumerate_extended_legal_strings(0);
    const auto k1 = enumerate_extended_legal_strings(1);
    std::set<std::string> distinct0, distinct1;
    for (const GeneString& s : k0) distinct0.insert(s.str());
    for (const GeneString& s : k1) distinct1.insert(s.str());
    c.require(k0.size() == 8 && distinct0.size() == 8, "k=0 yields exactly 8 distinct strings");
    c.require(k1.size() == 192 && distinct1.size() == 192,
              "k=1 yields exactly 192 distinct strings");
}

void criterion_7(Checker& c, const CrossValidationRuns& runs) {
    std::size_t replayed = 0;
    std::size_t failures = 0;
    const auto fold = [&](const CrossValidationReport& report) {
        replayed += report.certificates_replayed;
        failures += report.certificate_failures.size() + report.enumeration_failures.size();
    };
    for (const CrossValidationReport& report : runs.exhaustive) fold(report);
    fold(runs.sampled_k3);
    c.require(replayed > 0, "certificates were produced");
    c.require(failures == 0, "every produced certificate replays to the single negative m");
}

} // namespace

int main() {
    using clock = std::chrono::steady_clock;
    CrossValidationRuns runs;
    const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria = {
        {"paper-example replay", criterion_1},
        {"simulation lemmas (exhaustive k<=2, 10^4 random k<=8)", criterion_2},
        {"nesting projections acyclic and transitively closed", criterion_3},
        {"characterization soundness/completeness vs brute force",
         [&](Checker& c) { criterion_4(c, runs); }},
        {"marker-preserving string rules match graph rules", criterion_5},
        {"generator counts 8 and 192, duplicate-free", criterion_6},
        {"certificate replay", [&](Checker& c) { criterion_7(c, runs); }},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Checker checker;
        const auto start = clock::now();
        criteria[i].second(checker);
        const double seconds = std::chrono::duration<double>(clock::now() - start).count();
        const bool ok = checker.failures.empty();
        std::printf("[%s] criterion %zu: %s (%zu checks, %.2f s)\n", ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), checker.checks, seconds);
        for (const std::string& failure : checker.failures)
            std::printf("       failed: %s\n", failure.c_str());
        if (!ok) ++failed;
    }
    if (failed == 0)
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
    else
        std::printf("%d acceptance criteria FAILED\n", failed);
    return failed == 0 ? 0 : 1;
}
