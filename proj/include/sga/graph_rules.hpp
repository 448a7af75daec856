#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sga/marked_graph.hpp"

namespace sga {

enum class GraphRuleKind { gnr, sgpr };

std::string to_string(GraphRuleKind kind);

/// gnr removes a negative vertex that has no undirected edge and no incoming
/// directed edge; sgpr removes a positive vertex with exactly one undirected
/// edge and no incoming directed edge, flipping the sign of that edge's other
/// endpoint. Outgoing directed edges never block either rule, and neither
/// rule applies to m.
class GraphRule {
public:
    GraphRule(GraphRuleKind kind, Identity vertex);

    GraphRuleKind kind() const { return kind_; }
    Identity vertex() const { return vertex_; }

    /// CLI syntax: "gnr:4", "sgpr:6".
    std::string str() const;

    auto operator<=>(const GraphRule&) const = default;

private:
    GraphRuleKind kind_;
    Identity vertex_;
};

GraphRule parse_graph_rule(std::string_view text);
std::vector<GraphRule> parse_graph_rules(std::string_view text);

/// Empty reason when the rule applies; otherwise the violated condition.
std::string graph_rule_block_reason(const SimpleMarkedGraph& g, const GraphRule& rule);

std::vector<GraphRule> applicable_graph_rules(const SimpleMarkedGraph& g,
                                              const std::set<GraphRuleKind>& kinds);
std::vector<GraphRule> applicable_graph_rules(const SimpleMarkedGraph& g);

/// Throws rule_error naming the violated condition when inapplicable.
SimpleMarkedGraph apply_graph_rule(const SimpleMarkedGraph& g, const GraphRule& rule);

/// True iff g is the single negative vertex m.
bool is_graph_success(const SimpleMarkedGraph& g);

/// Empty on success; otherwise says why, distinguishing a missing m.
std::string graph_success_diagnostic(const SimpleMarkedGraph& g);

struct GraphReductionStep {
    GraphRule rule;
    SimpleMarkedGraph result;
};

struct GraphReductionTrace {
    SimpleMarkedGraph initial;
    std::vector<GraphReductionStep> steps;
    bool success = false;
    std::optional<GraphRule> failed_rule;
    std::string failure_reason;

    bool aborted() const { return failed_rule.has_value(); }
    const SimpleMarkedGraph& final_graph() const {
        return steps.empty() ? initial : steps.back().result;
    }
};

GraphReductionTrace apply_graph_reduction(const SimpleMarkedGraph& g,
                                          const std::vector<GraphRule>& rules);

} // namespace sga
