#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sga/strings.hpp"

namespace sga {

/// A signed graph over identities with a distinguished vertex m, one
/// undirected and one directed edge set. Between any two vertices at most
/// one relationship exists: an undirected edge, a single directed edge, or
/// nothing. Values are immutable once built; the rule and relabel
/// operations return new graphs.
class SimpleMarkedGraph {
public:
    using UndirectedEdge = std::pair<Identity, Identity>; // stored with first < second
    using DirectedEdge = std::pair<Identity, Identity>;   // (from, to)

    SimpleMarkedGraph() = default;

    void add_vertex(Identity v, Sign sign);
    void add_undirected_edge(Identity a, Identity b);
    void add_directed_edge(Identity from, Identity to);

    std::size_t vertex_count() const { return vertices_.size(); }
    bool has_vertex(Identity v) const { return vertices_.count(v) > 0; }
    bool has_m() const { return has_vertex(Identity::marker()); }
    Sign sign(Identity v) const;

    const std::map<Identity, Sign>& vertices() const { return vertices_; }
    const std::set<UndirectedEdge>& undirected_edges() const { return undirected_; }
    const std::set<DirectedEdge>& directed_edges() const { return directed_; }

    bool has_undirected_edge(Identity a, Identity b) const;
    bool has_directed_edge(Identity from, Identity to) const;

    std::size_t undirected_degree(Identity v) const;
    std::vector<Identity> undirected_neighbors(Identity v) const;
    std::size_t directed_in_degree(Identity v) const;
    std::size_t directed_out_degree(Identity v) const;

    /// Graph without v and without every edge incident to it.
    SimpleMarkedGraph without_vertex(Identity v) const;
    SimpleMarkedGraph with_sign_flipped(Identity v) const;

    /// Deterministic one-line form, also used as a search memo key.
    std::string canonical_text() const;

    /// Exact labeled equality of vertices, signs and both edge sets.
    bool operator==(const SimpleMarkedGraph&) const = default;

private:
    std::map<Identity, Sign> vertices_;
    std::set<UndirectedEdge> undirected_;
    std::set<DirectedEdge> directed_;
};

/// The extended overlap graph of a legal or extended legal string s:
/// vertices dom(s) signed by positivity in s; identities that each occur
/// once inside the other's interval share an undirected edge; an identity
/// whose occurrences both lie strictly inside another's interval gets a
/// directed edge toward the enclosing identity. Throws validity_error on
/// invalid strings.
SimpleMarkedGraph build_extended_overlap_graph(const GeneString& s);

/// The classical overlap graph of g: undirected edges only.
SimpleMarkedGraph overlap_projection(const SimpleMarkedGraph& g);

/// The proper-nesting relation of g: directed edges only.
SimpleMarkedGraph directed_projection(const SimpleMarkedGraph& g);

struct DirectedProperties {
    bool acyclic;
    bool transitively_closed;
};

/// DAG and closure tests on the directed projection of g.
DirectedProperties directed_properties(const SimpleMarkedGraph& g);

/// The same tests on a raw directed edge set (no exclusivity constraint).
bool is_acyclic(const std::set<Identity>& vertices,
                const std::set<std::pair<Identity, Identity>>& edges);
bool is_transitively_closed(const std::set<std::pair<Identity, Identity>>& edges);

/// Renames vertices through the given map; identities missing from the map
/// stay fixed. The completed map must be injective, must not move m, and
/// must not rename anything onto m. Throws graph_error otherwise.
SimpleMarkedGraph relabel(const SimpleMarkedGraph& g, const std::map<Identity, Identity>& mapping);

/// DOT form: one digraph with undirected edges drawn arrowless (dir=none)
/// and bold; vertex labels are name^sign with m double-circled.
std::string to_dot(const SimpleMarkedGraph& g);

// JSON form: {"vertices":[{"id":2,"sign":"+"},...,{"id":"m",...}],
//             "undirected":[[x,y],...], "directed":[[from,to],...]}.
void to_json(nlohmann::json& j, const SimpleMarkedGraph& g);
void from_json(const nlohmann::json& j, SimpleMarkedGraph& g);

} // namespace sga
