#include "sga/oracle.hpp"

#include <algorithm>
#include <random>

namespace sga {

std::uint64_t enumeration_size(std::size_t k) {
    unsigned __int128 skeletons = 1;
    const std::size_t n = 2 * k + 2;
    for (std::size_t i = 2; i <= n; ++i) skeletons *= i;
    for (std::size_t i = 0; i < k; ++i) skeletons /= 2;
    unsigned __int128 total = skeletons;
    for (std::size_t i = 0; i < n; ++i) total *= 2;
    if (total > UINT64_MAX) throw std::overflow_error("enumeration size overflows 64 bits");
    return static_cast<std::uint64_t>(total);
}

namespace {

// 0 stands for b, 1 for e, anything >= 2 for the pointer of that value.
std::vector<int> sorted_symbol_codes(std::size_t k) {
    std::vector<int> codes{0, 1};
    for (std::size_t v = 2; v <= k + 1; ++v) {
        codes.push_back(static_cast<int>(v));
        codes.push_back(static_cast<int>(v));
    }
    std::sort(codes.begin(), codes.end());
    return codes;
}

GeneString string_from_codes(const std::vector<int>& codes, std::uint64_t bar_mask) {
    std::vector<GeneSymbol> symbols;
    symbols.reserve(codes.size());
    for (std::size_t i = 0; i < codes.size(); ++i) {
        const bool barred = (bar_mask >> i) & 1;
        if (codes[i] == 0)
            symbols.push_back(GeneSymbol::marker(MarkerLetter::b, barred));
        else if (codes[i] == 1)
            symbols.push_back(GeneSymbol::marker(MarkerLetter::e, barred));
        else
            symbols.push_back(GeneSymbol::pointer(codes[i], barred));
    }
    return GeneString(std::move(symbols));
}

} // namespace

void for_each_extended_legal_string(std::size_t k,
                                    const std::function<void(const GeneString&)>& fn,
                                    std::size_t k_cap) {
    if (k > k_cap)
        throw cap_error("exhaustive enumeration capped at k = " + std::to_string(k_cap) +
                        " (asked for k = " + std::to_string(k) + ")");
    std::vector<int> codes = sorted_symbol_codes(k);
    const std::uint64_t masks = std::uint64_t(1) << codes.size();
    do {
        for (std::uint64_t mask = 0; mask < masks; ++mask) fn(string_from_codes(codes, mask));
    } while (std::next_permutation(codes.begin(), codes.end()));
}

std::vector<GeneString> enumerate_extended_legal_strings(std::size_t k, std::size_t k_cap) {
    std::vector<GeneString> out;
    for_each_extended_legal_string(k, [&](const GeneString& s) { out.push_back(s); }, k_cap);
    return out;
}

GeneString random_extended_legal_string(std::size_t k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> codes = sorted_symbol_codes(k);
    for (std::size_t i = codes.size(); i > 1; --i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        std::swap(codes[i - 1], codes[pick(rng)]);
    }
    std::uint64_t mask = 0;
    std::uniform_int_distribution<int> bit(0, 1);
    for (std::size_t i = 0; i < codes.size(); ++i)
        if (bit(rng)) mask |= std::uint64_t(1) << i;
    return string_from_codes(codes, mask);
}

SearchResult brute_force_success(const GeneString& s, const std::set<StringRuleKind>& kinds,
                                 const SearchOptions& options) {
    SearchResult result;
    std::set<std::string> dead;
    std::vector<ReductionStep> path; // collected bottom-up while unwinding
    std::function<bool(const GeneString&)> dfs = [&](const GeneString& current) {
        if (is_terminal_success(current)) return true;
        const std::string key = current.str();
        if (dead.count(key)) return false;
        if (++result.states_explored > options.max_states)
            throw cap_error("string search exceeded " + std::to_string(options.max_states) +
                            " states: inconclusive");
        std::vector<StringRule> rules = applicable_rules(current, kinds);
        if (options.reverse_rule_order) std::reverse(rules.begin(), rules.end());
        for (const StringRule& rule : rules) {
            GeneString next = apply_rule(current, rule);
            if (dfs(next)) {
                path.push_back({rule, std::move(next)});
                return true;
            }
        }
        dead.insert(key);
        return false;
    };
    result.successful = dfs(s);
    if (result.successful) {
        ReductionTrace trace;
        trace.initial = s;
        trace.steps.assign(path.rbegin(), path.rend());
        trace.success = true;
        result.string_witness = std::move(trace);
    }
    return result;
}

SearchResult brute_force_success(const SimpleMarkedGraph& g, const GraphRuleSet& kinds,
                                 const SearchOptions& options) {
    if (!g.has_m()) throw graph_error("graph success queries need m in the graph");
    SearchResult result;
    std::set<std::string> dead;
    std::vector<GraphReductionStep> path;
    std::function<bool(const SimpleMarkedGraph&)> dfs = [&](const SimpleMarkedGraph& current) {
        if (is_graph_success(current)) return true;
        const std::string key = current.canonical_text();
        if (dead.count(key)) return false;
        if (++result.states_explored > options.max_states)
            throw cap_error("graph search exceeded " + std::to_string(options.max_states) +
                            " states: inconclusive");
        std::vector<GraphRule> rules = applicable_graph_rules(current, kinds);
        if (options.reverse_rule_order) std::reverse(rules.begin(), rules.end());
        for (const GraphRule& rule : rules) {
            SimpleMarkedGraph next = apply_graph_rule(current, rule);
            if (dfs(next)) {
                path.push_back({rule, std::move(next)});
                return true;
            }
        }
        dead.insert(key);
        return false;
    };
    result.successful = dfs(g);
    if (result.successful) {
        GraphReductionTrace trace;
        trace.initial = g;
        trace.steps.assign(path.rbegin(), path.rend());
        trace.success = true;
        result.graph_witness = std::move(trace);
    }
    return result;
}

SimulationReport verify_simulation(const GeneString& s) {
    if (!s.is_valid())
        throw validity_error("verify_simulation needs a legal or extended legal string: " +
                             s.invalid_reason());
    SimulationReport report;
    const SimpleMarkedGraph g = build_extended_overlap_graph(s);

    const auto find_string_rule = [&](StringRuleKind kind, Identity x) {
        std::optional<StringRule> found;
        for (const StringRule& rule : applicable_rules(s, std::set<StringRuleKind>{kind}))
            if (rule.p().identity() == x) found = rule;
        return found;
    };
    const auto graph_rule_applies = [&](GraphRuleKind kind, Identity x) {
        return graph_rule_block_reason(g, GraphRule(kind, x)).empty();
    };

    const auto check_pair = [&](StringRuleKind string_kind, GraphRuleKind graph_kind, Identity x) {
        const std::optional<StringRule> string_rule = find_string_rule(string_kind, x);
        const bool graph_ok = graph_rule_applies(graph_kind, x);
        if (string_rule.has_value() != graph_ok) {
            report.violations.push_back(
                "on '" + s.str() + "': " + to_string(string_kind) + " for " + x.str() +
                (string_rule ? " applies" : " does not apply") + " but " + to_string(graph_kind) +
                ":" + x.str() + (graph_ok ? " applies" : " does not apply"));
            return;
        }
        if (!string_rule) return;
        const SimpleMarkedGraph via_string = build_extended_overlap_graph(apply_rule(s, *string_rule));
        const SimpleMarkedGraph via_graph = apply_graph_rule(g, GraphRule(graph_kind, x));
        if (!(via_string == via_graph))
            report.violations.push_back("on '" + s.str() + "': the diagram for " +
                                        string_rule->str() + " does not commute");
    };

    for (Identity x : s.domain()) {
        if (x.is_marker()) continue;
        ++report.identities_checked;
        check_pair(StringRuleKind::snr, GraphRuleKind::gnr, x);
        check_pair(StringRuleKind::sspr, GraphRuleKind::sgpr, x);
    }
    return report;
}

namespace {

const std::vector<GraphRuleSet>& all_rule_subsets() {
    static const std::vector<GraphRuleSet> subsets = {
        {},
        {GraphRuleKind::gnr},
        {GraphRuleKind::sgpr},
        {GraphRuleKind::gnr, GraphRuleKind::sgpr},
    };
    return subsets;
}

void cross_validate_one(const GeneString& s, CrossValidationReport& report) {
    const SimpleMarkedGraph g = build_extended_overlap_graph(s);
    const bool m_out = g.directed_out_degree(Identity::marker()) > 0;
    for (const GraphRuleSet& rule_set : all_rule_subsets()) {
        const SuccessVerdict corrected = check_success(g, rule_set);
        const bool literal = literal_theorem_check(g, rule_set);
        const bool brute = brute_force_success(g, rule_set).successful;
        ++report.comparisons;
        if (corrected.successful != brute)
            report.corrected_disagreements.push_back(
                {s.str(), rule_set, literal, corrected.successful, brute, m_out});
        if (literal != brute)
            report.literal_disagreements.push_back(
                {s.str(), rule_set, literal, corrected.successful, brute, m_out});
        if (corrected.certificate) {
            ++report.certificates_replayed;
            if (!validate_ordering(g, *corrected.certificate))
                report.certificate_failures.push_back("'" + s.str() + "' with " + to_string(rule_set));
        }
        const auto orderings = enumerate_successful_orderings(g, rule_set);
        ++report.enumerations_checked;
        if (orderings.empty() == corrected.successful)
            report.enumeration_failures.push_back("'" + s.str() + "' with " + to_string(rule_set) +
                                                  ": enumeration and verdict disagree");
        for (const OrderingCertificate& cert : orderings)
            if (!validate_ordering(g, cert))
                report.enumeration_failures.push_back("'" + s.str() + "' with " +
                                                      to_string(rule_set) +
                                                      ": enumerated ordering does not replay");
    }
    ++report.instances;
}

} // namespace

bool CrossValidationReport::literal_gap_is_m_outgoing_only() const {
    for (const Disagreement& d : literal_disagreements) {
        if (!d.rule_set.count(GraphRuleKind::gnr)) return false;
        if (!d.m_outgoing) return false;
        if (!d.literal || d.brute) return false;
    }
    return true;
}

std::string CrossValidationReport::summary() const {
    std::string out = std::to_string(instances) + " instances, " + std::to_string(comparisons) +
                      " comparisons: corrected check disagreed " +
                      std::to_string(corrected_disagreements.size()) + "x, literal check disagreed " +
                      std::to_string(literal_disagreements.size()) + "x; " +
                      std::to_string(certificates_replayed) + " certificates replayed (" +
                      std::to_string(certificate_failures.size()) + " failed), " +
                      std::to_string(enumerations_checked) + " enumerations checked (" +
                      std::to_string(enumeration_failures.size()) + " failed)";
    return out;
}

CrossValidationReport cross_validate_characterizations(std::size_t k, std::size_t k_cap) {
    CrossValidationReport report;
    for_each_extended_legal_string(k, [&](const GeneString& s) { cross_validate_one(s, report); },
                                   k_cap);
    return report;
}

CrossValidationReport cross_validate_characterizations_sampled(std::size_t k, std::size_t samples,
                                                               std::uint64_t seed) {
    CrossValidationReport report;
    for (std::size_t i = 0; i < samples; ++i)
        cross_validate_one(random_extended_legal_string(k, seed + i), report);
    return report;
}

EquivalenceReport verify_marker_rule_equivalence(std::size_t k, std::size_t k_cap) {
    EquivalenceReport report;
    const std::set<StringRuleKind> string_side{StringRuleKind::snr, StringRuleKind::sspr};
    const GraphRuleSet graph_side{GraphRuleKind::gnr, GraphRuleKind::sgpr};
    for_each_extended_legal_string(
        k,
        [&](const GeneString& s) {
            ++report.instances;
            const bool on_string = brute_force_success(s, string_side).successful;
            const bool on_graph =
                brute_force_success(build_extended_overlap_graph(s), graph_side).successful;
            if (on_string != on_graph)
                report.mismatches.push_back("'" + s.str() + "': string side " +
                                            (on_string ? "successful" : "unsuccessful") +
                                            ", graph side " +
                                            (on_graph ? "successful" : "unsuccessful"));
        },
        k_cap);
    return report;
}

void to_json(nlohmann::json& j, const Disagreement& d) {
    j = nlohmann::json{{"string", d.text},
                       {"rule_set", to_string(d.rule_set)},
                       {"literal", d.literal},
                       {"corrected", d.corrected},
                       {"brute_force", d.brute},
                       {"m_outgoing", d.m_outgoing}};
}

void to_json(nlohmann::json& j, const CrossValidationReport& r) {
    j = nlohmann::json{{"instances", r.instances},
                       {"comparisons", r.comparisons},
                       {"certificates_replayed", r.certificates_replayed},
                       {"enumerations_checked", r.enumerations_checked},
                       {"corrected_disagreements", r.corrected_disagreements},
                       {"literal_disagreements", r.literal_disagreements},
                       {"certificate_failures", r.certificate_failures},
                       {"enumeration_failures", r.enumeration_failures}};
}

void to_json(nlohmann::json& j, const SimulationReport& r) {
    j = nlohmann::json{{"identities_checked", r.identities_checked}, {"violations", r.violations}};
}

void to_json(nlohmann::json& j, const EquivalenceReport& r) {
    j = nlohmann::json{{"instances", r.instances}, {"mismatches", r.mismatches}};
}

} // namespace sga
