#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sga/strings.hpp"

namespace sga {

/// snr/spr/sdr form the general string pointer reduction system; the simple
/// system keeps snr and restricts the other two to sspr (exactly one symbol
/// between the occurrences) and ssdr (the two pq blocks adjacent).
enum class StringRuleKind { snr, spr, sdr, sspr, ssdr };

enum class RuleSystem { simple, general };

std::string to_string(StringRuleKind kind);
bool is_simple_kind(StringRuleKind kind);

/// The rule kinds of a system: {snr, sspr, ssdr} or {snr, spr, sdr}.
std::set<StringRuleKind> rule_kinds(RuleSystem system);

/// A named rule with its pointer parameter(s), written as the parameter's
/// first occurrence appears in the string (so spr:-2 and spr:2 are distinct
/// instances matching different patterns). Parameters are always pointers.
class StringRule {
public:
    StringRule(StringRuleKind kind, GeneSymbol p);
    StringRule(StringRuleKind kind, GeneSymbol p, GeneSymbol q);

    StringRuleKind kind() const { return kind_; }
    const GeneSymbol& p() const { return p_; }
    const GeneSymbol& q() const; // sdr/ssdr only

    /// CLI syntax: "snr:4", "sspr:-6", "ssdr:2,3".
    std::string str() const;

    auto operator<=>(const StringRule&) const = default;

private:
    StringRuleKind kind_;
    GeneSymbol p_;
    std::optional<GeneSymbol> q_;
};

StringRule parse_string_rule(std::string_view text);

/// Comma-separated rule list in execution order, e.g. "sspr:-6,snr:4".
std::vector<StringRule> parse_string_rules(std::string_view text);

/// Every rule instance of the given kinds whose pattern matches s, sorted.
/// Throws validity_error when s is invalid.
std::vector<StringRule> applicable_rules(const GeneString& s, const std::set<StringRuleKind>& kinds);
std::vector<StringRule> applicable_rules(const GeneString& s, RuleSystem system);

/// Rewrites s by one rule application. Throws rule_error naming the failed
/// pattern condition when the rule does not apply.
GeneString apply_rule(const GeneString& s, const StringRule& rule);

/// True for the empty string (legal success) and for the four two-marker
/// arrangements be, eb, -e -b, -b -e (extended success).
bool is_terminal_success(const GeneString& s);

struct ReductionStep {
    StringRule rule;
    GeneString result;
};

/// Record of applying a rule sequence in execution order. When a step does
/// not apply the trace stops there, keeping the partial steps and the
/// failing rule; otherwise success reflects is_terminal_success of the
/// final string.
struct ReductionTrace {
    GeneString initial;
    std::vector<ReductionStep> steps;
    bool success = false;
    std::optional<StringRule> failed_rule;
    std::string failure_reason;

    bool aborted() const { return failed_rule.has_value(); }
    const GeneString& final_string() const {
        return steps.empty() ? initial : steps.back().result;
    }
};

ReductionTrace apply_reduction(const GeneString& s, const std::vector<StringRule>& rules);

} // namespace sga
