#include <doctest.h>

#include "sga/graph_rules.hpp"
#include "sga/oracle.hpp"
#include "test_util.hpp"

using namespace sga;
using namespace sga::test;

namespace {

std::vector<std::string> rule_names(const std::vector<GraphRule>& rules) {
    std::vector<std::string> out;
    for (const GraphRule& r : rules) out.push_back(r.str());
    return out;
}

SimpleMarkedGraph lone_m(Sign sign = Sign::negative) {
    SimpleMarkedGraph g;
    g.add_vertex(M(), sign);
    return g;
}

} // namespace

TEST_CASE("graph applicability on the running example is exactly gnr:4 and sgpr:6") {
    const auto rules = applicable_graph_rules(build_extended_overlap_graph(GS(kRunningU)));
    CHECK(rule_names(rules) == std::vector<std::string>{"gnr:4", "sgpr:6"});
}

TEST_CASE("no rule applies to the single negative m") {
    CHECK(applicable_graph_rules(lone_m()).empty());
}

TEST_CASE("on the graph of v only sgpr:2 applies") {
    const SimpleMarkedGraph g = build_extended_overlap_graph(GS(kRunningV));
    CHECK(rule_names(applicable_graph_rules(g)) == std::vector<std::string>{"sgpr:2"});
    CHECK(graph_rule_block_reason(g, GraphRule(GraphRuleKind::sgpr, P(4))) ==
          "vertex 4 has an incoming directed edge");
    CHECK(graph_rule_block_reason(g, GraphRule(GraphRuleKind::sgpr, P(3))) ==
          "vertex 3 has undirected degree 3, not 1");
}

TEST_CASE("sgpr removes the vertex and flips its unique undirected neighbor") {
    const SimpleMarkedGraph g = build_extended_overlap_graph(GS(kRunningU));
    const SimpleMarkedGraph after = apply_graph_rule(g, parse_graph_rule("sgpr:6"));

    SimpleMarkedGraph expected;
    expected.add_vertex(P(2), Sign::negative); // flipped by the rule
    expected.add_vertex(P(3), Sign::negative);
    expected.add_vertex(P(4), Sign::negative);
    expected.add_vertex(P(5), Sign::positive);
    expected.add_vertex(M(), Sign::positive);
    expected.add_undirected_edge(M(), P(3));
    expected.add_undirected_edge(P(3), P(2));
    expected.add_undirected_edge(P(2), P(5));
    expected.add_directed_edge(P(4), P(5));
    expected.add_directed_edge(P(4), P(2));
    CHECK(after == expected);
}

TEST_CASE("gnr removes the vertex and its edges, signs untouched") {
    const SimpleMarkedGraph g = build_extended_overlap_graph(GS(kRunningU));
    const SimpleMarkedGraph after = apply_graph_rule(g, parse_graph_rule("gnr:4"));
    CHECK(after.vertex_count() == 5);
    CHECK(!after.has_vertex(P(4)));
    CHECK(after.directed_edges() == std::set<std::pair<Identity, Identity>>{{P(6), P(3)}});
    CHECK(after.sign(P(2)) == Sign::positive);
    CHECK(after.undirected_edges() == g.undirected_edges());
}

TEST_CASE("inapplicable graph rules name the violated condition") {
    const SimpleMarkedGraph g = build_extended_overlap_graph(GS(kRunningU));
    CHECK_THROWS_WITH(apply_graph_rule(g, parse_graph_rule("sgpr:3")),
                      doctest::Contains("not positive"));
    CHECK_THROWS_WITH(apply_graph_rule(g, parse_graph_rule("sgpr:2")),
                      doctest::Contains("undirected degree 3"));
    CHECK_THROWS_WITH(apply_graph_rule(g, parse_graph_rule("sgpr:5")),
                      doctest::Contains("incoming directed edge"));
    CHECK_THROWS_WITH(apply_graph_rule(g, parse_graph_rule("gnr:3")),
                      doctest::Contains("undirected edge"));
    CHECK_THROWS_WITH(apply_graph_rule(g, parse_graph_rule("gnr:9")),
                      doctest::Contains("not in the graph"));
    CHECK_THROWS_AS(parse_graph_rule("gnr:m"), parse_error);
    CHECK_THROWS_AS(parse_graph_rule("gnr:-4"), parse_error);
    CHECK_THROWS_AS(GraphRule(GraphRuleKind::gnr, M()), rule_error);
}

TEST_CASE("the paper graph reduction succeeds") {
    const SimpleMarkedGraph g = build_extended_overlap_graph(GS(kRunningU));
    const auto trace =
        apply_graph_reduction(g, parse_graph_rules("sgpr:6,gnr:4,sgpr:5,sgpr:2,sgpr:3"));
    CHECK(trace.success);
    CHECK(trace.steps.size() == 5);
    CHECK(is_graph_success(trace.final_graph()));

    const auto empty = apply_graph_reduction(lone_m(), {});
    CHECK(empty.success);

    const auto aborted = apply_graph_reduction(g, parse_graph_rules("gnr:4,gnr:4"));
    CHECK(aborted.aborted());
    CHECK(aborted.steps.size() == 1);
}

TEST_CASE("graph success is the single negative m") {
    CHECK(is_graph_success(lone_m()));
    CHECK(graph_success_diagnostic(lone_m()).empty());
    CHECK(!is_graph_success(lone_m(Sign::positive)));
    CHECK(graph_success_diagnostic(lone_m(Sign::positive)) == "m is positive");

    SimpleMarkedGraph two = lone_m();
    two.add_vertex(P(2), Sign::negative);
    CHECK(!is_graph_success(two));
    CHECK(graph_success_diagnostic(two) == "1 vertex besides m remains");

    SimpleMarkedGraph no_m;
    no_m.add_vertex(P(2), Sign::negative);
    CHECK(!is_graph_success(no_m));
    CHECK(graph_success_diagnostic(no_m) == "no m present: success is not reachable");
}

TEST_CASE("simulation lemmas hold on the running example and small corpus") {
    CHECK(verify_simulation(GS(kRunningU)).ok());
    CHECK(verify_simulation(GS("b e")).identities_checked == 0);
    for (const GeneString& s : enumerate_extended_legal_strings(1))
        CHECK(verify_simulation(s).ok());
}

TEST_CASE("each rule removes one vertex and flips at most the sgpr neighbor") {
    for (const GeneString& s : enumerate_extended_legal_strings(2)) {
        const SimpleMarkedGraph g = build_extended_overlap_graph(s);
        for (const GraphRule& rule : applicable_graph_rules(g)) {
            const Identity flip_target = rule.kind() == GraphRuleKind::sgpr
                                             ? g.undirected_neighbors(rule.vertex()).front()
                                             : Identity::marker(); // unused for gnr
            const SimpleMarkedGraph next = apply_graph_rule(g, rule);
            CHECK(next.vertex_count() == g.vertex_count() - 1);
            CHECK(!next.has_vertex(rule.vertex()));
            for (const auto& [v, sign] : next.vertices()) {
                const bool flipped_here =
                    rule.kind() == GraphRuleKind::sgpr && v == flip_target;
                CHECK(sign == (flipped_here ? flipped(g.sign(v)) : g.sign(v)));
            }
        }
    }
}
