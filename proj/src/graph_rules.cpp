#include "sga/graph_rules.hpp"

#include <algorithm>

namespace sga {

std::string to_string(GraphRuleKind kind) {
    return kind == GraphRuleKind::gnr ? "gnr" : "sgpr";
}

GraphRule::GraphRule(GraphRuleKind kind, Identity vertex) : kind_(kind), vertex_(vertex) {
    if (vertex.is_marker())
        throw rule_error(to_string(kind) + " is not defined on m");
}

std::string GraphRule::str() const { return to_string(kind_) + ":" + vertex_.str(); }

GraphRule parse_graph_rule(std::string_view text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw parse_error("rule '" + std::string(text) + "': expected <name>:<vertex>");
    const std::string_view name = text.substr(0, colon);
    GraphRuleKind kind;
    if (name == "gnr")
        kind = GraphRuleKind::gnr;
    else if (name == "sgpr")
        kind = GraphRuleKind::sgpr;
    else
        throw parse_error("unknown graph rule '" + std::string(name) + "'");
    const GeneSymbol p = parse_symbol(text.substr(colon + 1));
    if (!p.is_pointer() || p.barred())
        throw parse_error("graph rules take an unbarred pointer identity, got '" +
                          std::string(text.substr(colon + 1)) + "'");
    return GraphRule(kind, p.identity());
}

std::vector<GraphRule> parse_graph_rules(std::string_view text) {
    std::vector<GraphRule> rules;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        rules.push_back(parse_graph_rule(text.substr(start, end - start)));
        start = end + 1;
    }
    return rules;
}

std::string graph_rule_block_reason(const SimpleMarkedGraph& g, const GraphRule& rule) {
    const Identity p = rule.vertex();
    if (!g.has_vertex(p)) return "vertex " + p.str() + " is not in the graph";
    if (rule.kind() == GraphRuleKind::gnr) {
        if (g.sign(p) != Sign::negative) return "vertex " + p.str() + " is not negative";
        if (g.undirected_degree(p) != 0)
            return "vertex " + p.str() + " has an undirected edge";
    } else {
        if (g.sign(p) != Sign::positive) return "vertex " + p.str() + " is not positive";
        if (g.undirected_degree(p) != 1)
            return "vertex " + p.str() + " has undirected degree " +
                   std::to_string(g.undirected_degree(p)) + ", not 1";
    }
    if (g.directed_in_degree(p) != 0)
        return "vertex " + p.str() + " has an incoming directed edge";
    return "";
}

std::vector<GraphRule> applicable_graph_rules(const SimpleMarkedGraph& g,
                                              const std::set<GraphRuleKind>& kinds) {
    std::vector<GraphRule> out;
    for (const auto& [v, sign] : g.vertices()) {
        if (v.is_marker()) continue;
        for (GraphRuleKind kind : kinds) {
            GraphRule rule(kind, v);
            if (graph_rule_block_reason(g, rule).empty()) out.push_back(rule);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GraphRule> applicable_graph_rules(const SimpleMarkedGraph& g) {
    return applicable_graph_rules(g, {GraphRuleKind::gnr, GraphRuleKind::sgpr});
}

SimpleMarkedGraph apply_graph_rule(const SimpleMarkedGraph& g, const GraphRule& rule) {
    const std::string reason = graph_rule_block_reason(g, rule);
    if (!reason.empty()) throw rule_error(rule.str() + ": " + reason);
    if (rule.kind() == GraphRuleKind::gnr) return g.without_vertex(rule.vertex());
    const Identity neighbor = g.undirected_neighbors(rule.vertex()).front();
    return g.with_sign_flipped(neighbor).without_vertex(rule.vertex());
}

bool is_graph_success(const SimpleMarkedGraph& g) {
    return g.vertex_count() == 1 && g.has_m() &&
           g.sign(Identity::marker()) == Sign::negative;
}

std::string graph_success_diagnostic(const SimpleMarkedGraph& g) {
    if (!g.has_m()) return "no m present: success is not reachable";
    if (g.vertex_count() != 1) {
        const std::size_t rest = g.vertex_count() - 1;
        return std::to_string(rest) +
               (rest == 1 ? " vertex besides m remains" : " vertices besides m remain");
    }
    if (g.sign(Identity::marker()) != Sign::negative) return "m is positive";
    return "";
}

GraphReductionTrace apply_graph_reduction(const SimpleMarkedGraph& g,
                                          const std::vector<GraphRule>& rules) {
    GraphReductionTrace trace;
    trace.initial = g;
    SimpleMarkedGraph current = g;
    for (const GraphRule& rule : rules) {
        try {
            current = apply_graph_rule(current, rule);
        } catch (const rule_error& e) {
            trace.failed_rule = rule;
            trace.failure_reason = e.what();
            trace.success = false;
            return trace;
        }
        trace.steps.push_back({rule, current});
    }
    trace.success = is_graph_success(current);
    return trace;
}

} // namespace sga
