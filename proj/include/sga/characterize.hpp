#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sga/graph_rules.hpp"
#include "sga/marked_graph.hpp"

namespace sga {

using GraphRuleSet = std::set<GraphRuleKind>;

/// Parses "gnr,sgpr", "gnr" or "sgpr" (empty set spelled "none").
GraphRuleSet parse_graph_rule_set(std::string_view text);
std::string to_string(const GraphRuleSet& s);

enum class FailedCondition {
    not_a_tree,              // sgpr-only: the undirected part is not a spanning tree
    parity,                  // undirected degree even must match a negative sign
    cycle,                   // (root-oriented) augmented graph has a directed cycle
    m_outgoing,              // a directed edge leaves m and can never be removed
    not_a_forest,            // combined case: the undirected part has a cycle
    positive_vertex,         // gnr-only: some vertex is positive
    undirected_edge_present, // gnr-only: some undirected edge exists
};

std::string to_string(FailedCondition c);

/// A removal order of all vertices ending with m, with the rule played for
/// each removed vertex. Replaying the roles in order is the certificate's
/// meaning; validate_ordering does exactly that.
struct OrderingCertificate {
    std::vector<Identity> ordering;
    std::map<Identity, GraphRuleKind> roles; // one entry per non-m vertex

    std::vector<GraphRule> to_rules() const;
    std::string str() const; // "(2, 4, 3, m)"

    bool operator==(const OrderingCertificate&) const = default;
};

struct SuccessVerdict {
    bool successful = false;
    std::optional<OrderingCertificate> certificate;
    std::optional<FailedCondition> failed_condition;
};

/// Decides successfulness of g in S by the closed-form conditions, with one
/// correction over the published forms: when S contains gnr, m must have no
/// outgoing directed edge (such an edge outlives every reduction step and
/// permanently blocks its target). Produces a deterministic certificate on
/// success (eligible vertices are taken numerically smallest first).
/// Conditions are checked in a fixed order and the first failure is
/// reported. Throws graph_error when g has no m.
SuccessVerdict check_success(const SimpleMarkedGraph& g, const GraphRuleSet& s);

/// The published conditions exactly, without the m-outgoing correction.
/// Disagrees with brute force precisely on graphs where S contains gnr and
/// m has an outgoing directed edge.
bool literal_theorem_check(const SimpleMarkedGraph& g, const GraphRuleSet& s);

/// Replays the certificate through the graph rules; true iff the replay is
/// an applicable reduction ending in the single negative m. Throws
/// certificate_error when the certificate is not well formed for g.
bool validate_ordering(const SimpleMarkedGraph& g, const OrderingCertificate& cert);

inline constexpr std::size_t kDefaultEnumerationCap = 9;

/// All certificates over rules from S that validate, sorted by ordering.
/// Refuses graphs with more than cap vertices (cap_error).
std::vector<OrderingCertificate> enumerate_successful_orderings(
    const SimpleMarkedGraph& g, const GraphRuleSet& s,
    std::size_t cap = kDefaultEnumerationCap);

/// For a graph without undirected edges: true iff the directed part is the
/// transitive closure of its own transitive reduction and that reduction is
/// a forest directed from children to parents (out-degree at most 1).
/// Throws graph_error when undirected edges are present.
bool corollary_shape_check(const SimpleMarkedGraph& g);

void to_json(nlohmann::json& j, const OrderingCertificate& cert);
void to_json(nlohmann::json& j, const SuccessVerdict& verdict);

} // namespace sga
