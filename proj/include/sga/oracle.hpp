#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "sga/characterize.hpp"
#include "sga/graph_rules.hpp"
#include "sga/marked_graph.hpp"
#include "sga/string_rules.hpp"
#include "sga/strings.hpp"

namespace sga {

/// Largest k accepted by the exhaustive generator unless overridden; the
/// instance count grows as (2k+2)!/2^k * 2^(2k+2) (about 1.3M at k = 3).
inline constexpr std::size_t kDefaultExhaustiveKCap = 3;

inline constexpr std::size_t kDefaultSearchStateCap = 1'000'000;

/// Closed-form instance count for pointer identities {2,...,k+1}:
/// (2k+2)!/(2!)^k skeletons times 2^(2k+2) bar assignments.
std::uint64_t enumeration_size(std::size_t k);

/// Streams every extended legal string with pointer identities exactly
/// {2,...,k+1}, one b- and one e-occurrence, over all orderings and all bar
/// assignments, without duplicates. Throws cap_error when k exceeds the cap.
void for_each_extended_legal_string(std::size_t k,
                                    const std::function<void(const GeneString&)>& fn,
                                    std::size_t k_cap = kDefaultExhaustiveKCap);

std::vector<GeneString> enumerate_extended_legal_strings(
    std::size_t k, std::size_t k_cap = kDefaultExhaustiveKCap);

/// Uniform over skeletons and bar assignments; deterministic per seed.
GeneString random_extended_legal_string(std::size_t k, std::uint64_t seed);

struct SearchOptions {
    std::size_t max_states = kDefaultSearchStateCap;
    // Exploring rule choices in reverse must not change any verdict; flipped
    // by tests to pin that down.
    bool reverse_rule_order = false;
};

/// Outcome of an exhaustive reachability search. The witness is present iff
/// successful and replays to success. states_explored counts the distinct
/// non-terminal states expanded.
struct SearchResult {
    bool successful = false;
    std::optional<ReductionTrace> string_witness;
    std::optional<GraphReductionTrace> graph_witness;
    std::size_t states_explored = 0;
};

/// Depth-first search over all applicable-rule choices with visited-state
/// memoization on canonical serializations. Throws cap_error when the state
/// cap is hit before an answer is certain - never a wrong answer.
SearchResult brute_force_success(const GeneString& s, const std::set<StringRuleKind>& kinds,
                                 const SearchOptions& options = {});
SearchResult brute_force_success(const SimpleMarkedGraph& g, const GraphRuleSet& kinds,
                                 const SearchOptions& options = {});

/// Per-string check of the two simulation lemmas: for every pointer identity
/// x, snr on x (in either orientation) is applicable iff gnr_x is applicable
/// to the extended overlap graph, and both paths of the commuting diagram
/// yield equal graphs; likewise sspr/sgpr.
struct SimulationReport {
    std::size_t identities_checked = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

SimulationReport verify_simulation(const GeneString& s);

/// One itemized mismatch between a closed-form verdict and brute force.
struct Disagreement {
    std::string text; // token form of the instance
    GraphRuleSet rule_set;
    bool literal = false;
    bool corrected = false;
    bool brute = false;
    bool m_outgoing = false; // m had an outgoing directed edge in the graph
};

/// Comparison of check_success, literal_theorem_check and brute force over
/// every S subset of {gnr, sgpr}, plus certificate replay bookkeeping.
struct CrossValidationReport {
    std::size_t instances = 0;
    std::size_t comparisons = 0;
    std::size_t certificates_replayed = 0;
    std::size_t enumerations_checked = 0;
    std::vector<Disagreement> corrected_disagreements; // expected empty
    std::vector<Disagreement> literal_disagreements;
    std::vector<std::string> certificate_failures; // expected empty
    std::vector<std::string> enumeration_failures; // expected empty

    bool corrected_matches_brute() const { return corrected_disagreements.empty(); }

    /// Every literal disagreement is an m-outgoing graph checked with a set
    /// containing gnr, over-approved by the published conditions.
    bool literal_gap_is_m_outgoing_only() const;

    std::string summary() const;
};

CrossValidationReport cross_validate_characterizations(
    std::size_t k, std::size_t k_cap = kDefaultExhaustiveKCap);

CrossValidationReport cross_validate_characterizations_sampled(std::size_t k,
                                                               std::size_t samples,
                                                               std::uint64_t seed);

/// Compares brute force over {snr, sspr} on each exhaustively enumerated
/// string against brute force over {gnr, sgpr} on its extended overlap
/// graph (the marker-preserving subsystem the simulation lemmas cover; ssdr
/// stays out, having no graph counterpart).
struct EquivalenceReport {
    std::size_t instances = 0;
    std::vector<std::string> mismatches;

    bool ok() const { return mismatches.empty(); }
};

EquivalenceReport verify_marker_rule_equivalence(std::size_t k,
                                                 std::size_t k_cap = kDefaultExhaustiveKCap);

void to_json(nlohmann::json& j, const Disagreement& d);
void to_json(nlohmann::json& j, const CrossValidationReport& r);
void to_json(nlohmann::json& j, const SimulationReport& r);
void to_json(nlohmann::json& j, const EquivalenceReport& r);

} // namespace sga
