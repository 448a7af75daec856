#include "sga/characterize.hpp"

#include <algorithm>
#include <functional>

namespace sga {

GraphRuleSet parse_graph_rule_set(std::string_view text) {
    GraphRuleSet out;
    if (text == "none") return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view piece = text.substr(start, end - start);
        if (piece == "gnr")
            out.insert(GraphRuleKind::gnr);
        else if (piece == "sgpr")
            out.insert(GraphRuleKind::sgpr);
        else
            throw parse_error("unknown graph rule set element '" + std::string(piece) + "'");
        start = end + 1;
    }
    return out;
}

std::string to_string(const GraphRuleSet& s) {
    if (s.empty()) return "none";
    std::string out;
    for (GraphRuleKind kind : s) {
        if (!out.empty()) out += ',';
        out += to_string(kind);
    }
    return out;
}

std::string to_string(FailedCondition c) {
    switch (c) {
        case FailedCondition::not_a_tree: return "not-a-tree";
        case FailedCondition::parity: return "parity";
        case FailedCondition::cycle: return "cycle";
        case FailedCondition::m_outgoing: return "m-outgoing";
        case FailedCondition::not_a_forest: return "not-a-forest";
        case FailedCondition::positive_vertex: return "positive-vertex";
        case FailedCondition::undirected_edge_present: return "undirected-edge-present";
    }
    return "?";
}

std::vector<GraphRule> OrderingCertificate::to_rules() const {
    std::vector<GraphRule> rules;
    for (Identity v : ordering) {
        if (v.is_marker()) continue;
        rules.emplace_back(roles.at(v), v);
    }
    return rules;
}

std::string OrderingCertificate::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < ordering.size(); ++i) {
        if (i > 0) out += ", ";
        out += ordering[i].str();
    }
    return out + ")";
}

namespace {

std::set<Identity> vertex_set(const SimpleMarkedGraph& g) {
    std::set<Identity> out;
    for (const auto& [v, sign] : g.vertices()) out.insert(v);
    return out;
}

struct UndirectedStructure {
    bool acyclic = true;                           // the undirected part is a forest
    std::vector<std::vector<Identity>> components; // sorted vertices, components sorted by least vertex
};

UndirectedStructure analyze_undirected(const SimpleMarkedGraph& g) {
    std::map<Identity, std::vector<Identity>> adj;
    for (const auto& e : g.undirected_edges()) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    UndirectedStructure out;
    std::set<Identity> seen;
    for (const auto& [start, sign] : g.vertices()) {
        if (seen.count(start)) continue;
        std::vector<Identity> component{start};
        seen.insert(start);
        std::size_t edges_inside = 0;
        for (std::size_t i = 0; i < component.size(); ++i) {
            for (Identity next : adj[component[i]]) {
                ++edges_inside; // counts each edge from both sides
                if (seen.insert(next).second) component.push_back(next);
            }
        }
        if (edges_inside / 2 != component.size() - 1) out.acyclic = false;
        std::sort(component.begin(), component.end());
        out.components.push_back(std::move(component));
    }
    return out;
}

bool parity_holds(const SimpleMarkedGraph& g) {
    for (const auto& [v, sign] : g.vertices())
        if ((g.undirected_degree(v) % 2 == 0) != (sign == Sign::negative)) return false;
    return true;
}

bool m_has_outgoing(const SimpleMarkedGraph& g) {
    return g.directed_out_degree(Identity::marker()) > 0;
}

/// Orients each undirected edge of root's component from child to parent in
/// the tree rooted there (BFS layering; the component must be a tree).
void orient_component(const SimpleMarkedGraph& g, Identity root,
                      std::set<std::pair<Identity, Identity>>& edges) {
    std::map<Identity, std::vector<Identity>> adj;
    for (const auto& e : g.undirected_edges()) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    std::set<Identity> seen{root};
    std::vector<Identity> queue{root};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (Identity child : adj[queue[i]]) {
            if (!seen.insert(child).second) continue;
            edges.insert({child, queue[i]});
            queue.push_back(child);
        }
    }
}

std::set<std::pair<Identity, Identity>> augmented_edges(
    const SimpleMarkedGraph& g, const UndirectedStructure& undirected,
    const std::vector<Identity>& roots) {
    std::set<std::pair<Identity, Identity>> edges = g.directed_edges();
    for (std::size_t i = 0; i < undirected.components.size(); ++i)
        orient_component(g, roots[i], edges);
    return edges;
}

/// Searches per-tree roots (m fixed for its own tree) that make the
/// augmented graph acyclic; candidates are tried in ascending order so the
/// first assignment found is deterministic.
bool find_acyclic_roots(const SimpleMarkedGraph& g, const UndirectedStructure& undirected,
                        std::vector<Identity>& roots_out) {
    const std::set<Identity> vertices = vertex_set(g);
    std::vector<Identity> roots(undirected.components.size());
    std::function<bool(std::size_t)> assign = [&](std::size_t i) {
        if (i == undirected.components.size()) {
            return is_acyclic(vertices, augmented_edges(g, undirected, roots));
        }
        const auto& component = undirected.components[i];
        const bool holds_m = std::find(component.begin(), component.end(),
                                       Identity::marker()) != component.end();
        if (holds_m) {
            roots[i] = Identity::marker();
            return assign(i + 1);
        }
        for (Identity candidate : component) {
            roots[i] = candidate;
            if (assign(i + 1)) return true;
        }
        return false;
    };
    if (!assign(0)) return false;
    roots_out = roots;
    return true;
}

/// Kahn's algorithm taking the numerically smallest ready vertex each step;
/// m orders after every pointer, so it is emitted last whenever the edge set
/// lets every other vertex go first.
std::vector<Identity> topological_order(const std::set<Identity>& vertices,
                                        const std::set<std::pair<Identity, Identity>>& edges) {
    std::map<Identity, std::size_t> in_degree;
    std::map<Identity, std::vector<Identity>> adj;
    for (Identity v : vertices) in_degree[v] = 0;
    for (const auto& [from, to] : edges) {
        ++in_degree[to];
        adj[from].push_back(to);
    }
    std::set<Identity> ready;
    for (const auto& [v, d] : in_degree)
        if (d == 0) ready.insert(v);
    std::vector<Identity> order;
    while (!ready.empty()) {
        const Identity v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (Identity to : adj[v])
            if (--in_degree[to] == 0) ready.insert(to);
    }
    if (order.size() != vertices.size())
        throw std::logic_error("topological_order called on a cyclic graph");
    return order;
}

OrderingCertificate make_certificate(const std::vector<Identity>& order,
                                     const std::set<Identity>& gnr_vertices) {
    OrderingCertificate cert;
    cert.ordering = order;
    for (Identity v : order) {
        if (v.is_marker()) continue;
        cert.roles[v] = gnr_vertices.count(v) ? GraphRuleKind::gnr : GraphRuleKind::sgpr;
    }
    return cert;
}

/// Shared evaluation of the closed-form conditions. When corrected is false
/// the published conditions are evaluated verbatim; certificates are only
/// produced on the corrected path, where the construction is guaranteed to
/// replay.
SuccessVerdict evaluate(const SimpleMarkedGraph& g, const GraphRuleSet& s, bool corrected) {
    if (!g.has_m()) throw graph_error("success is undefined for a graph without m");
    SuccessVerdict verdict;
    const auto fail = [&](FailedCondition c) {
        verdict.successful = false;
        verdict.failed_condition = c;
        return verdict;
    };
    const std::set<Identity> vertices = vertex_set(g);

    if (s.empty()) {
        verdict.successful = is_graph_success(g);
        if (verdict.successful) verdict.certificate = make_certificate({Identity::marker()}, {});
        return verdict;
    }

    const bool has_gnr = s.count(GraphRuleKind::gnr) > 0;
    const bool has_sgpr = s.count(GraphRuleKind::sgpr) > 0;

    if (has_gnr && !has_sgpr) {
        for (const auto& [v, sign] : g.vertices())
            if (sign == Sign::positive) return fail(FailedCondition::positive_vertex);
        if (!g.undirected_edges().empty()) return fail(FailedCondition::undirected_edge_present);
        if (corrected && m_has_outgoing(g)) return fail(FailedCondition::m_outgoing);
        if (!is_acyclic(vertices, g.directed_edges())) return fail(FailedCondition::cycle);
        verdict.successful = true;
        if (corrected) {
            std::set<Identity> gnr_vertices = vertices;
            gnr_vertices.erase(Identity::marker());
            verdict.certificate =
                make_certificate(topological_order(vertices, g.directed_edges()), gnr_vertices);
        }
        return verdict;
    }

    const UndirectedStructure undirected = analyze_undirected(g);

    if (!has_gnr) {
        if (undirected.components.size() != 1 || !undirected.acyclic)
            return fail(FailedCondition::not_a_tree);
        if (!parity_holds(g)) return fail(FailedCondition::parity);
        const std::vector<Identity> roots{Identity::marker()};
        const auto edges = augmented_edges(g, undirected, roots);
        if (!is_acyclic(vertices, edges)) return fail(FailedCondition::cycle);
        verdict.successful = true;
        if (corrected) verdict.certificate = make_certificate(topological_order(vertices, edges), {});
        return verdict;
    }

    // combined {gnr, sgpr}
    if (!undirected.acyclic) return fail(FailedCondition::not_a_forest);
    if (!parity_holds(g)) return fail(FailedCondition::parity);
    if (corrected && m_has_outgoing(g)) return fail(FailedCondition::m_outgoing);
    std::vector<Identity> roots;
    if (!find_acyclic_roots(g, undirected, roots)) return fail(FailedCondition::cycle);
    verdict.successful = true;
    if (corrected) {
        std::set<Identity> gnr_vertices(roots.begin(), roots.end());
        gnr_vertices.erase(Identity::marker());
        verdict.certificate = make_certificate(
            topological_order(vertices, augmented_edges(g, undirected, roots)), gnr_vertices);
    }
    return verdict;
}

} // namespace

SuccessVerdict check_success(const SimpleMarkedGraph& g, const GraphRuleSet& s) {
    return evaluate(g, s, true);
}

bool literal_theorem_check(const SimpleMarkedGraph& g, const GraphRuleSet& s) {
    return evaluate(g, s, false).successful;
}

bool validate_ordering(const SimpleMarkedGraph& g, const OrderingCertificate& cert) {
    if (cert.ordering.empty() || cert.ordering.back() != Identity::marker())
        throw certificate_error("the ordering must end with m");
    std::vector<Identity> sorted = cert.ordering;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw certificate_error("the ordering repeats a vertex");
    const std::set<Identity> vertices = vertex_set(g);
    if (std::set<Identity>(sorted.begin(), sorted.end()) != vertices)
        throw certificate_error("the ordering is not a permutation of the vertex set");
    if (cert.roles.count(Identity::marker()))
        throw certificate_error("m has no role");
    for (Identity v : cert.ordering)
        if (!v.is_marker() && !cert.roles.count(v))
            throw certificate_error("vertex " + v.str() + " has no role");
    return apply_graph_reduction(g, cert.to_rules()).success;
}

std::vector<OrderingCertificate> enumerate_successful_orderings(const SimpleMarkedGraph& g,
                                                                const GraphRuleSet& s,
                                                                std::size_t cap) {
    if (!g.has_m()) throw graph_error("success is undefined for a graph without m");
    if (g.vertex_count() > cap)
        throw cap_error("enumeration refuses graphs with more than " + std::to_string(cap) +
                        " vertices (got " + std::to_string(g.vertex_count()) + ")");
    std::vector<OrderingCertificate> out;
    OrderingCertificate partial;
    std::function<void(const SimpleMarkedGraph&)> explore = [&](const SimpleMarkedGraph& current) {
        if (current.vertex_count() == 1) {
            if (is_graph_success(current)) {
                OrderingCertificate cert = partial;
                cert.ordering.push_back(Identity::marker());
                out.push_back(std::move(cert));
            }
            return;
        }
        for (const GraphRule& rule : applicable_graph_rules(current, s)) {
            partial.ordering.push_back(rule.vertex());
            partial.roles[rule.vertex()] = rule.kind();
            explore(apply_graph_rule(current, rule));
            partial.roles.erase(rule.vertex());
            partial.ordering.pop_back();
        }
    };
    explore(g);
    std::sort(out.begin(), out.end(), [](const OrderingCertificate& a, const OrderingCertificate& b) {
        return a.ordering < b.ordering;
    });
    return out;
}

bool corollary_shape_check(const SimpleMarkedGraph& g) {
    if (!g.undirected_edges().empty())
        throw graph_error("the corollary shape applies to graphs without undirected edges");
    const std::set<Identity> vertices = vertex_set(g);
    const auto& edges = g.directed_edges();
    if (!is_acyclic(vertices, edges)) return false;

    std::map<Identity, std::vector<Identity>> adj;
    for (const auto& [from, to] : edges) adj[from].push_back(to);
    std::map<Identity, std::set<Identity>> reach; // via at least one edge
    std::function<const std::set<Identity>&(Identity)> reachable = [&](Identity v) -> const std::set<Identity>& {
        auto it = reach.find(v);
        if (it != reach.end()) return it->second;
        std::set<Identity> out;
        for (Identity to : adj[v]) {
            out.insert(to);
            const auto& below = reachable(to);
            out.insert(below.begin(), below.end());
        }
        return reach[v] = std::move(out);
    };

    std::set<std::pair<Identity, Identity>> reduction;
    for (const auto& [from, to] : edges) {
        bool redundant = false;
        for (Identity mid : adj[from])
            if (mid != to && reachable(mid).count(to)) redundant = true;
        if (!redundant) reduction.insert({from, to});
    }

    // closure of the reduction must reproduce the edge set
    std::map<Identity, std::vector<Identity>> reduced_adj;
    for (const auto& [from, to] : reduction) reduced_adj[from].push_back(to);
    std::set<std::pair<Identity, Identity>> closure;
    for (Identity start : vertices) {
        std::vector<Identity> stack{start};
        std::set<Identity> seen;
        while (!stack.empty()) {
            Identity v = stack.back();
            stack.pop_back();
            for (Identity to : reduced_adj[v]) {
                if (!seen.insert(to).second) continue;
                closure.insert({start, to});
                stack.push_back(to);
            }
        }
    }
    if (closure != edges) return false;

    for (Identity v : vertices) {
        std::size_t out_degree = 0;
        for (const auto& e : reduction)
            if (e.first == v) ++out_degree;
        if (out_degree > 1) return false;
    }
    return true;
}

void to_json(nlohmann::json& j, const OrderingCertificate& cert) {
    j = nlohmann::json::object();
    j["ordering"] = nlohmann::json::array();
    for (Identity v : cert.ordering)
        j["ordering"].push_back(v.is_marker() ? nlohmann::json("m") : nlohmann::json(v.value()));
    j["roles"] = nlohmann::json::object();
    for (const auto& [v, kind] : cert.roles) j["roles"][v.str()] = to_string(kind);
}

void to_json(nlohmann::json& j, const SuccessVerdict& verdict) {
    j = nlohmann::json::object();
    j["successful"] = verdict.successful;
    j["certificate"] = verdict.certificate ? nlohmann::json(*verdict.certificate) : nlohmann::json();
    j["failed_condition"] =
        verdict.failed_condition ? nlohmann::json(to_string(*verdict.failed_condition)) : nlohmann::json();
}

} // namespace sga
