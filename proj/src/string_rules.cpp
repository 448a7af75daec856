#include "sga/string_rules.hpp"

#include <algorithm>

namespace sga {

std::string to_string(StringRuleKind kind) {
    switch (kind) {
        case StringRuleKind::snr: return "snr";
        case StringRuleKind::spr: return "spr";
        case StringRuleKind::sdr: return "sdr";
        case StringRuleKind::sspr: return "sspr";
        case StringRuleKind::ssdr: return "ssdr";
    }
    return "?";
}

bool is_simple_kind(StringRuleKind kind) {
    return kind == StringRuleKind::snr || kind == StringRuleKind::sspr ||
           kind == StringRuleKind::ssdr;
}

std::set<StringRuleKind> rule_kinds(RuleSystem system) {
    if (system == RuleSystem::simple)
        return {StringRuleKind::snr, StringRuleKind::sspr, StringRuleKind::ssdr};
    return {StringRuleKind::snr, StringRuleKind::spr, StringRuleKind::sdr};
}

namespace {

bool takes_two_parameters(StringRuleKind kind) {
    return kind == StringRuleKind::sdr || kind == StringRuleKind::ssdr;
}

} // namespace

StringRule::StringRule(StringRuleKind kind, GeneSymbol p) : kind_(kind), p_(p) {
    if (takes_two_parameters(kind))
        throw rule_error(to_string(kind) + " needs two pointer parameters");
    if (!p.is_pointer()) throw rule_error("rule parameters must be pointers, got " + p.str());
}

StringRule::StringRule(StringRuleKind kind, GeneSymbol p, GeneSymbol q)
    : kind_(kind), p_(p), q_(q) {
    if (!takes_two_parameters(kind))
        throw rule_error(to_string(kind) + " takes a single pointer parameter");
    if (!p.is_pointer() || !q.is_pointer())
        throw rule_error("rule parameters must be pointers");
    if (p.identity() == q.identity())
        throw rule_error(to_string(kind) + " needs two distinct pointer identities");
}

const GeneSymbol& StringRule::q() const {
    if (!q_) throw std::logic_error(str() + " has no second parameter");
    return *q_;
}

std::string StringRule::str() const {
    std::string out = to_string(kind_) + ":" + p_.str();
    if (q_) out += "," + q_->str();
    return out;
}

StringRule parse_string_rule(std::string_view text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw parse_error("rule '" + std::string(text) + "': expected <name>:<params>");
    const std::string_view name = text.substr(0, colon);
    const std::string_view params = text.substr(colon + 1);
    StringRuleKind kind;
    if (name == "snr")
        kind = StringRuleKind::snr;
    else if (name == "spr")
        kind = StringRuleKind::spr;
    else if (name == "sdr")
        kind = StringRuleKind::sdr;
    else if (name == "sspr")
        kind = StringRuleKind::sspr;
    else if (name == "ssdr")
        kind = StringRuleKind::ssdr;
    else
        throw parse_error("unknown string rule '" + std::string(name) + "'");

    const std::size_t comma = params.find(',');
    if (takes_two_parameters(kind)) {
        if (comma == std::string_view::npos)
            throw parse_error("rule '" + std::string(text) + "': expected two parameters");
        return StringRule(kind, parse_symbol(params.substr(0, comma)),
                          parse_symbol(params.substr(comma + 1)));
    }
    if (comma != std::string_view::npos)
        throw parse_error("rule '" + std::string(text) + "': expected a single parameter");
    return StringRule(kind, parse_symbol(params));
}

std::vector<StringRule> parse_string_rules(std::string_view text) {
    // Split on ','; a two-parameter rule consumes the following piece as its
    // second parameter, so "ssdr:2,3,snr:4" reads as ssdr:2,3 then snr:4.
    std::vector<StringRule> rules;
    std::vector<std::string> pieces;
    std::string piece;
    for (char c : text) {
        if (c == ',') {
            pieces.push_back(piece);
            piece.clear();
        } else {
            piece += c;
        }
    }
    pieces.push_back(piece);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        std::string item = pieces[i];
        if (item.find(':') == std::string::npos)
            throw parse_error("rule '" + item + "': expected <name>:<params>");
        const std::string_view name = std::string_view(item).substr(0, item.find(':'));
        if (name == "sdr" || name == "ssdr") {
            if (i + 1 >= pieces.size())
                throw parse_error("rule '" + item + "': expected two parameters");
            item += "," + pieces[++i];
        }
        rules.push_back(parse_string_rule(item));
    }
    return rules;
}

namespace {

void require_valid(const GeneString& s, const char* what) {
    if (!s.is_valid())
        throw validity_error(std::string(what) + " requires a legal or extended legal string: " +
                             s.invalid_reason());
}

std::vector<Identity> pointer_identities(const GeneString& s) {
    std::vector<Identity> out;
    for (Identity q : s.domain())
        if (!q.is_marker()) out.push_back(q);
    return out;
}

GeneString splice(const std::vector<GeneSymbol>& symbols,
                  const std::vector<std::pair<std::size_t, std::size_t>>& ranges,
                  const std::vector<bool>& invert_range) {
    std::vector<GeneSymbol> out;
    for (std::size_t r = 0; r < ranges.size(); ++r) {
        auto [lo, hi] = ranges[r]; // half-open [lo, hi)
        if (invert_range[r]) {
            for (std::size_t i = hi; i > lo; --i) out.push_back(symbols[i - 1].inverted());
        } else {
            for (std::size_t i = lo; i < hi; ++i) out.push_back(symbols[i]);
        }
    }
    return GeneString(std::move(out));
}

} // namespace

std::vector<StringRule> applicable_rules(const GeneString& s,
                                         const std::set<StringRuleKind>& kinds) {
    require_valid(s, "applicable_rules");
    const auto& sym = s.symbols();
    std::vector<StringRule> out;

    if (kinds.count(StringRuleKind::snr)) {
        for (std::size_t i = 0; i + 1 < sym.size(); ++i)
            if (sym[i].is_pointer() && sym[i] == sym[i + 1])
                out.emplace_back(StringRuleKind::snr, sym[i]);
    }

    const bool want_spr = kinds.count(StringRuleKind::spr) > 0;
    const bool want_sspr = kinds.count(StringRuleKind::sspr) > 0;
    if (want_spr || want_sspr) {
        for (Identity x : pointer_identities(s)) {
            auto [i, j] = s.occurrence_positions(x);
            if (sym[j] != sym[i].inverted()) continue;
            if (want_spr) out.emplace_back(StringRuleKind::spr, sym[i]);
            if (want_sspr && j == i + 2) out.emplace_back(StringRuleKind::sspr, sym[i]);
        }
    }

    const bool want_sdr = kinds.count(StringRuleKind::sdr) > 0;
    const bool want_ssdr = kinds.count(StringRuleKind::ssdr) > 0;
    if (want_sdr || want_ssdr) {
        const std::vector<Identity> ids = pointer_identities(s);
        for (Identity x : ids) {
            auto [i1, i2] = s.occurrence_positions(x);
            if (sym[i1] != sym[i2]) continue;
            for (Identity y : ids) {
                if (y == x) continue;
                auto [j1, j2] = s.occurrence_positions(y);
                if (sym[j1] != sym[j2]) continue;
                if (!(i1 < j1 && j1 < i2 && i2 < j2)) continue;
                if (want_sdr) out.emplace_back(StringRuleKind::sdr, sym[i1], sym[j1]);
                if (want_ssdr && j1 == i1 + 1 && j2 == i2 + 1)
                    out.emplace_back(StringRuleKind::ssdr, sym[i1], sym[j1]);
            }
        }
    }

    std::sort(out.begin(), out.end());
    return out;
}

std::vector<StringRule> applicable_rules(const GeneString& s, RuleSystem system) {
    return applicable_rules(s, rule_kinds(system));
}

GeneString apply_rule(const GeneString& s, const StringRule& rule) {
    require_valid(s, "apply_rule");
    const auto& sym = s.symbols();
    const std::string name = rule.str();

    const auto positions_of = [&](const GeneSymbol& param) {
        try {
            return s.occurrence_positions(param.identity());
        } catch (const unknown_identity_error&) {
            throw rule_error(name + ": identity " + param.identity().str() +
                             " does not occur in the string");
        }
    };

    switch (rule.kind()) {
        case StringRuleKind::snr: {
            auto [i, j] = positions_of(rule.p());
            if (sym[i] != rule.p() || sym[j] != rule.p())
                throw rule_error(name + ": the two occurrences are written " + sym[i].str() +
                                 " and " + sym[j].str() + ", not " + rule.p().str() + " " +
                                 rule.p().str());
            if (j != i + 1)
                throw rule_error(name + ": the two occurrences are not adjacent");
            return splice(sym, {{0, i}, {j + 1, sym.size()}}, {false, false});
        }
        case StringRuleKind::spr:
        case StringRuleKind::sspr: {
            auto [i, j] = positions_of(rule.p());
            if (sym[i] != rule.p() || sym[j] != rule.p().inverted())
                throw rule_error(name + ": pattern needs " + rule.p().str() + " ... " +
                                 rule.p().inverted().str() + " in that order; the occurrences are "
                                 "written " + sym[i].str() + " ... " + sym[j].str());
            if (rule.kind() == StringRuleKind::sspr && j != i + 2)
                throw rule_error(name + ": exactly one symbol must separate the occurrences (found " +
                                 std::to_string(j - i - 1) + ")");
            return splice(sym, {{0, i}, {i + 1, j}, {j + 1, sym.size()}}, {false, true, false});
        }
        case StringRuleKind::sdr:
        case StringRuleKind::ssdr: {
            auto [i1, i2] = positions_of(rule.p());
            auto [j1, j2] = positions_of(rule.q());
            if (sym[i1] != rule.p() || sym[i2] != rule.p())
                throw rule_error(name + ": the occurrences of " + rule.p().identity().str() +
                                 " are written " + sym[i1].str() + " and " + sym[i2].str() +
                                 ", not " + rule.p().str() + " twice");
            if (sym[j1] != rule.q() || sym[j2] != rule.q())
                throw rule_error(name + ": the occurrences of " + rule.q().identity().str() +
                                 " are written " + sym[j1].str() + " and " + sym[j2].str() +
                                 ", not " + rule.q().str() + " twice");
            if (!(i1 < j1 && j1 < i2 && i2 < j2))
                throw rule_error(name + ": occurrences do not interleave as p q p q");
            if (rule.kind() == StringRuleKind::ssdr && !(j1 == i1 + 1 && j2 == i2 + 1))
                throw rule_error(name + ": the two pq blocks must be adjacent pairs");
            // u1 p u2 q u3 p u4 q u5 -> u1 u4 u3 u2 u5
            return splice(sym,
                          {{0, i1}, {i2 + 1, j2}, {j1 + 1, i2}, {i1 + 1, j1}, {j2 + 1, sym.size()}},
                          {false, false, false, false, false});
        }
    }
    throw std::logic_error("unreachable rule kind");
}

bool is_terminal_success(const GeneString& s) {
    if (s.empty()) return s.is_legal();
    if (s.size() != 2) return false;
    const GeneSymbol& a = s.at(0);
    const GeneSymbol& b = s.at(1);
    if (!a.is_marker() || !b.is_marker()) return false;
    if (a.marker_letter() == b.marker_letter()) return false;
    return a.barred() == b.barred();
}

ReductionTrace apply_reduction(const GeneString& s, const std::vector<StringRule>& rules) {
    ReductionTrace trace;
    trace.initial = s;
    GeneString current = s;
    for (const StringRule& rule : rules) {
        try {
            current = apply_rule(current, rule);
        } catch (const rule_error& e) {
            trace.failed_rule = rule;
            trace.failure_reason = e.what();
            trace.success = false;
            return trace;
        }
        trace.steps.push_back({rule, current});
    }
    trace.success = is_terminal_success(current);
    return trace;
}

} // namespace sga
