#pragma once

#include <climits>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sga/errors.hpp"

namespace sga {

enum class Sign { positive, negative };

constexpr Sign flipped(Sign s) {
    return s == Sign::positive ? Sign::negative : Sign::positive;
}

constexpr char sign_char(Sign s) { return s == Sign::positive ? '+' : '-'; }

/// The unbarred name shared by the two occurrences of a symbol: a pointer
/// value (>= 2) or the distinguished marker identity m that both markers map to.
/// Identities order numerically with m after every pointer.
class Identity {
public:
    constexpr Identity() : code_(kMarkerCode) {}

    static constexpr Identity pointer(int value) { return Identity(value); }
    static constexpr Identity marker() { return Identity(kMarkerCode); }

    constexpr bool is_marker() const { return code_ == kMarkerCode; }
    constexpr int value() const { return code_; }

    std::string str() const { return is_marker() ? "m" : std::to_string(code_); }

    constexpr auto operator<=>(const Identity&) const = default;

private:
    static constexpr int kMarkerCode = INT_MAX;

    explicit constexpr Identity(int code) : code_(code) {}

    int code_;
};

enum class MarkerLetter { b, e };

/// One symbol occurrence: a pointer (integer >= 2) or a marker (b or e),
/// either of which may carry the inversion bar.
class GeneSymbol {
public:
    static GeneSymbol pointer(int value, bool barred = false);
    static GeneSymbol marker(MarkerLetter letter, bool barred = false);

    bool is_pointer() const { return code_ >= kMinPointer; }
    bool is_marker() const { return !is_pointer(); }
    bool barred() const { return barred_; }

    int pointer_value() const;
    MarkerLetter marker_letter() const;

    Identity identity() const {
        return is_marker() ? Identity::marker() : Identity::pointer(code_);
    }

    /// Same symbol with the bar flag toggled.
    GeneSymbol inverted() const;

    /// Canonical token: bar as a leading '-', so "-2", "b", "-e".
    std::string str() const;

    auto operator<=>(const GeneSymbol&) const = default;

private:
    static constexpr int kCodeB = 0;
    static constexpr int kCodeE = 1;
    static constexpr int kMinPointer = 2;

    GeneSymbol(int code, bool barred) : code_(code), barred_(barred) {}

    int code_;
    bool barred_;
};

enum class Validity { legal, extended_legal, invalid };

std::string to_string(Validity v);

struct PointerProfile;

/// A finite sequence of pointers and markers, classified on construction as
/// legal (marker-free, every pointer identity occurring exactly twice),
/// extended legal (marker-erased image legal, exactly one b- and one
/// e-occurrence), or invalid with a reason. The empty string is legal.
class GeneString {
public:
    GeneString() : validity_(Validity::legal) {}
    explicit GeneString(std::vector<GeneSymbol> symbols);

    /// Parses whitespace-separated tokens. Bars are accepted as a leading
    /// '-' or U+2212 minus, or as a combining macron/overline after the
    /// token ("-2", "2̄" and "2̅" all read as barred 2).
    /// Throws parse_error on malformed tokens; validity violations are
    /// classified, not errors.
    static GeneString parse(std::string_view text);

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    const GeneSymbol& at(std::size_t i) const { return symbols_.at(i); }
    const std::vector<GeneSymbol>& symbols() const { return symbols_; }

    Validity validity() const { return validity_; }
    const std::string& invalid_reason() const { return invalid_reason_; }
    bool is_legal() const { return validity_ == Validity::legal; }
    bool is_extended_legal() const { return validity_ == Validity::extended_legal; }
    bool is_valid() const { return validity_ != Validity::invalid; }

    /// Canonical token form; parse(str()) reproduces the string exactly.
    std::string str() const;

    /// Sorted set of identities present, with m ordered last.
    std::vector<Identity> domain() const;
    bool contains(Identity q) const;

    /// 0-based positions of the two occurrences with the given identity,
    /// first < second. Throws unknown_identity_error if q is not in dom.
    std::pair<std::size_t, std::size_t> occurrence_positions(Identity q) const;

    /// Positive iff exactly one of the two occurrences is barred.
    Sign sign_of(Identity q) const;

    /// Sign, 1-based occurrence span and interval content for q.
    /// Requires a legal or extended legal string (validity_error otherwise).
    PointerProfile profile(Identity q) const;

    /// Reversed sequence with every bar toggled.
    GeneString inverted() const;

    /// All marker occurrences deleted; pointers kept in order (the rm image).
    GeneString without_markers() const;

    bool operator==(const GeneString&) const;

private:
    void classify();

    std::vector<GeneSymbol> symbols_;
    Validity validity_;
    std::string invalid_reason_;
};

struct PointerProfile {
    Sign sign;
    std::size_t first_pos;  // 1-based position of the first occurrence
    std::size_t second_pos; // 1-based position of the second occurrence
    GeneString interval;    // the q-interval, endpoints included
    GeneString interior;    // strictly between the occurrences
};

struct MdsEntry {
    int index;     // 1..kappa
    bool inverted;

    bool operator==(const MdsEntry&) const = default;
};

/// A permutation of the MDSs M_1..M_kappa, each possibly inverted. Converts
/// to the extended legal string of its pointer/marker boundaries: M_i
/// contributes the pair (i, i+1), with b standing in on the left of M_1 and
/// e on the right of M_kappa; an inverted entry contributes the inverse of
/// its pair.
class MdsDescriptor {
public:
    /// kappa is the entry count; requires kappa >= 2 and each index 1..kappa
    /// exactly once (parse_error otherwise).
    explicit MdsDescriptor(std::vector<MdsEntry> entries);

    /// Accepts forms like "M3 M4 -M2 M1" (case-insensitive M, optional
    /// surrounding brackets, '-' or U+2212 for inversion, bare indices allowed).
    static MdsDescriptor parse(std::string_view text);

    int kappa() const { return static_cast<int>(entries_.size()); }
    const std::vector<MdsEntry>& entries() const { return entries_; }

    GeneString to_gene_string() const;

private:
    std::vector<MdsEntry> entries_;
};

/// Parses a single symbol token ("4", "-e", "6̄"); see GeneString::parse.
GeneSymbol parse_symbol(std::string_view token);

// JSON form: array of {"kind":"pointer"|"marker", "value":int|"b"|"e", "barred":bool}.
void to_json(nlohmann::json& j, const GeneSymbol& s);
void from_json(const nlohmann::json& j, GeneSymbol& s);
void to_json(nlohmann::json& j, const GeneString& s);
void from_json(const nlohmann::json& j, GeneString& s);

} // namespace sga
