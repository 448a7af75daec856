#include "sga/marked_graph.hpp"

#include <algorithm>
#include <functional>

namespace sga {

namespace {

SimpleMarkedGraph::UndirectedEdge ordered(Identity a, Identity b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

nlohmann::json identity_to_json(Identity v) {
    if (v.is_marker()) return "m";
    return v.value();
}

Identity identity_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "m") return Identity::marker();
        throw parse_error("vertex id must be an integer >= 2 or \"m\"");
    }
    if (j.is_number_integer()) {
        const int v = j.get<int>();
        if (v < 2) throw parse_error("pointer vertex ids must be >= 2");
        return Identity::pointer(v);
    }
    throw parse_error("vertex id must be an integer >= 2 or \"m\"");
}

} // namespace

void SimpleMarkedGraph::add_vertex(Identity v, Sign sign) {
    if (has_vertex(v)) throw graph_error("vertex " + v.str() + " already present");
    vertices_[v] = sign;
}

void SimpleMarkedGraph::add_undirected_edge(Identity a, Identity b) {
    if (a == b) throw graph_error("self-loop on " + a.str());
    if (!has_vertex(a) || !has_vertex(b))
        throw graph_error("edge {" + a.str() + "," + b.str() + "} references a missing vertex");
    if (has_undirected_edge(a, b) || has_directed_edge(a, b) || has_directed_edge(b, a))
        throw graph_error("vertices " + a.str() + " and " + b.str() + " are already related");
    undirected_.insert(ordered(a, b));
}

void SimpleMarkedGraph::add_directed_edge(Identity from, Identity to) {
    if (from == to) throw graph_error("self-loop on " + from.str());
    if (!has_vertex(from) || !has_vertex(to))
        throw graph_error("edge (" + from.str() + "," + to.str() + ") references a missing vertex");
    if (has_undirected_edge(from, to) || has_directed_edge(from, to) || has_directed_edge(to, from))
        throw graph_error("vertices " + from.str() + " and " + to.str() + " are already related");
    directed_.insert({from, to});
}

Sign SimpleMarkedGraph::sign(Identity v) const {
    auto it = vertices_.find(v);
    if (it == vertices_.end()) throw graph_error("no vertex " + v.str());
    return it->second;
}

bool SimpleMarkedGraph::has_undirected_edge(Identity a, Identity b) const {
    return undirected_.count(ordered(a, b)) > 0;
}

bool SimpleMarkedGraph::has_directed_edge(Identity from, Identity to) const {
    return directed_.count({from, to}) > 0;
}

std::size_t SimpleMarkedGraph::undirected_degree(Identity v) const {
    return static_cast<std::size_t>(
        std::count_if(undirected_.begin(), undirected_.end(),
                      [&](const UndirectedEdge& e) { return e.first == v || e.second == v; }));
}

std::vector<Identity> SimpleMarkedGraph::undirected_neighbors(Identity v) const {
    std::vector<Identity> out;
    for (const UndirectedEdge& e : undirected_) {
        if (e.first == v) out.push_back(e.second);
        if (e.second == v) out.push_back(e.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t SimpleMarkedGraph::directed_in_degree(Identity v) const {
    return static_cast<std::size_t>(std::count_if(
        directed_.begin(), directed_.end(), [&](const DirectedEdge& e) { return e.second == v; }));
}

std::size_t SimpleMarkedGraph::directed_out_degree(Identity v) const {
    return static_cast<std::size_t>(std::count_if(
        directed_.begin(), directed_.end(), [&](const DirectedEdge& e) { return e.first == v; }));
}

SimpleMarkedGraph SimpleMarkedGraph::without_vertex(Identity v) const {
    if (!has_vertex(v)) throw graph_error("no vertex " + v.str());
    SimpleMarkedGraph out;
    for (const auto& [u, sign] : vertices_)
        if (u != v) out.vertices_[u] = sign;
    for (const UndirectedEdge& e : undirected_)
        if (e.first != v && e.second != v) out.undirected_.insert(e);
    for (const DirectedEdge& e : directed_)
        if (e.first != v && e.second != v) out.directed_.insert(e);
    return out;
}

SimpleMarkedGraph SimpleMarkedGraph::with_sign_flipped(Identity v) const {
    SimpleMarkedGraph out = *this;
    out.vertices_[v] = flipped(sign(v));
    return out;
}

std::string SimpleMarkedGraph::canonical_text() const {
    std::string out;
    for (const auto& [v, sign] : vertices_) {
        if (!out.empty()) out += ' ';
        out += v.str();
        out += sign_char(sign);
    }
    out += " |";
    for (const UndirectedEdge& e : undirected_) out += ' ' + e.first.str() + '-' + e.second.str();
    out += " |";
    for (const DirectedEdge& e : directed_) out += ' ' + e.first.str() + '>' + e.second.str();
    return out;
}

SimpleMarkedGraph build_extended_overlap_graph(const GeneString& s) {
    if (!s.is_valid())
        throw validity_error("extended overlap graphs need a legal or extended legal string: " +
                             s.invalid_reason());
    SimpleMarkedGraph g;
    const std::vector<Identity> dom = s.domain();
    std::map<Identity, std::pair<std::size_t, std::size_t>> span;
    for (Identity v : dom) {
        g.add_vertex(v, s.sign_of(v));
        span[v] = s.occurrence_positions(v);
    }
    // occurrences of q strictly inside the p-interval
    const auto inside = [&](Identity q, Identity p) {
        const auto [lo, hi] = span[p];
        const auto [q1, q2] = span[q];
        return int(q1 > lo && q1 < hi) + int(q2 > lo && q2 < hi);
    };
    for (std::size_t a = 0; a < dom.size(); ++a) {
        for (std::size_t b = a + 1; b < dom.size(); ++b) {
            const Identity p = dom[a];
            const Identity q = dom[b];
            const int q_in_p = inside(q, p);
            const int p_in_q = inside(p, q);
            if (q_in_p > 0 && p_in_q > 0)
                g.add_undirected_edge(p, q);
            else if (q_in_p > 0)
                g.add_directed_edge(q, p);
            else if (p_in_q > 0)
                g.add_directed_edge(p, q);
        }
    }
    return g;
}

SimpleMarkedGraph overlap_projection(const SimpleMarkedGraph& g) {
    SimpleMarkedGraph out;
    for (const auto& [v, sign] : g.vertices()) out.add_vertex(v, sign);
    for (const auto& e : g.undirected_edges()) out.add_undirected_edge(e.first, e.second);
    return out;
}

SimpleMarkedGraph directed_projection(const SimpleMarkedGraph& g) {
    SimpleMarkedGraph out;
    for (const auto& [v, sign] : g.vertices()) out.add_vertex(v, sign);
    for (const auto& e : g.directed_edges()) out.add_directed_edge(e.first, e.second);
    return out;
}

bool is_acyclic(const std::set<Identity>& vertices,
                const std::set<std::pair<Identity, Identity>>& edges) {
    std::map<Identity, int> state; // 0 unseen, 1 on stack, 2 done
    std::function<bool(Identity)> visit = [&](Identity v) {
        state[v] = 1;
        for (const auto& e : edges) {
            if (e.first != v) continue;
            if (state[e.second] == 1) return false;
            if (state[e.second] == 0 && !visit(e.second)) return false;
        }
        state[v] = 2;
        return true;
    };
    for (Identity v : vertices)
        if (state[v] == 0 && !visit(v)) return false;
    return true;
}

bool is_transitively_closed(const std::set<std::pair<Identity, Identity>>& edges) {
    for (const auto& [a, b] : edges)
        for (const auto& [c, d] : edges)
            if (b == c && a != d && edges.count({a, d}) == 0) return false;
    return true;
}

DirectedProperties directed_properties(const SimpleMarkedGraph& g) {
    std::set<Identity> vertices;
    for (const auto& [v, sign] : g.vertices()) vertices.insert(v);
    return {is_acyclic(vertices, g.directed_edges()),
            is_transitively_closed(g.directed_edges())};
}

SimpleMarkedGraph relabel(const SimpleMarkedGraph& g,
                          const std::map<Identity, Identity>& mapping) {
    for (const auto& [from, to] : mapping) {
        if (!g.has_vertex(from)) throw graph_error("relabel source " + from.str() + " is not a vertex");
        if (from.is_marker() && !to.is_marker()) throw graph_error("relabel must fix m");
        if (!from.is_marker() && to.is_marker())
            throw graph_error("relabel may not rename " + from.str() + " onto m");
    }
    const auto image = [&](Identity v) {
        auto it = mapping.find(v);
        return it == mapping.end() ? v : it->second;
    };
    std::set<Identity> seen;
    for (const auto& [v, sign] : g.vertices())
        if (!seen.insert(image(v)).second)
            throw graph_error("relabel map is not injective on the vertex set");
    SimpleMarkedGraph out;
    for (const auto& [v, sign] : g.vertices()) out.add_vertex(image(v), sign);
    for (const auto& e : g.undirected_edges()) out.add_undirected_edge(image(e.first), image(e.second));
    for (const auto& e : g.directed_edges()) out.add_directed_edge(image(e.first), image(e.second));
    return out;
}

std::string to_dot(const SimpleMarkedGraph& g) {
    std::string out = "digraph marked {\n";
    for (const auto& [v, sign] : g.vertices()) {
        out += "  \"" + v.str() + "\" [label=\"" + v.str() + "^" + sign_char(sign) + "\"";
        if (v.is_marker()) out += ", shape=doublecircle";
        out += "];\n";
    }
    for (const auto& e : g.undirected_edges())
        out += "  \"" + e.first.str() + "\" -> \"" + e.second.str() +
               "\" [dir=none, style=bold];\n";
    for (const auto& e : g.directed_edges())
        out += "  \"" + e.first.str() + "\" -> \"" + e.second.str() + "\";\n";
    out += "}\n";
    return out;
}

void to_json(nlohmann::json& j, const SimpleMarkedGraph& g) {
    j = nlohmann::json::object();
    j["vertices"] = nlohmann::json::array();
    for (const auto& [v, sign] : g.vertices())
        j["vertices"].push_back({{"id", identity_to_json(v)}, {"sign", std::string(1, sign_char(sign))}});
    j["undirected"] = nlohmann::json::array();
    for (const auto& e : g.undirected_edges())
        j["undirected"].push_back({identity_to_json(e.first), identity_to_json(e.second)});
    j["directed"] = nlohmann::json::array();
    for (const auto& e : g.directed_edges())
        j["directed"].push_back({identity_to_json(e.first), identity_to_json(e.second)});
}

void from_json(const nlohmann::json& j, SimpleMarkedGraph& g) {
    SimpleMarkedGraph out;
    if (!j.is_object() || !j.contains("vertices"))
        throw parse_error("graph JSON must be an object with a \"vertices\" array");
    for (const auto& v : j.at("vertices")) {
        const std::string sign = v.at("sign").get<std::string>();
        if (sign != "+" && sign != "-") throw parse_error("vertex sign must be \"+\" or \"-\"");
        out.add_vertex(identity_from_json(v.at("id")),
                       sign == "+" ? Sign::positive : Sign::negative);
    }
    try {
        for (const auto& e : j.value("undirected", nlohmann::json::array()))
            out.add_undirected_edge(identity_from_json(e.at(0)), identity_from_json(e.at(1)));
        for (const auto& e : j.value("directed", nlohmann::json::array()))
            out.add_directed_edge(identity_from_json(e.at(0)), identity_from_json(e.at(1)));
    } catch (const graph_error& e) {
        throw parse_error(std::string("graph JSON: ") + e.what());
    }
    g = out;
}

} // namespace sga
