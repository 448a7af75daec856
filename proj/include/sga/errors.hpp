#pragma once

#include <stdexcept>
#include <string>

namespace sga {

/// Malformed textual input: tokens, rule syntax, MDS descriptors, graph JSON.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// An operation required a legal or extended legal string and got an invalid one.
struct validity_error : std::runtime_error {
    explicit validity_error(const std::string& what) : std::runtime_error(what) {}
};

/// A queried identity is not part of the string's domain.
struct unknown_identity_error : std::runtime_error {
    explicit unknown_identity_error(const std::string& what) : std::runtime_error(what) {}
};

/// A rewriting rule was applied where its pattern does not match.
struct rule_error : std::runtime_error {
    explicit rule_error(const std::string& what) : std::runtime_error(what) {}
};

/// Structural misuse of a simple marked graph (bad relabel map, missing m, ...).
struct graph_error : std::runtime_error {
    explicit graph_error(const std::string& what) : std::runtime_error(what) {}
};

/// An ordering certificate is not well formed for the graph it claims to reduce.
struct certificate_error : std::runtime_error {
    explicit certificate_error(const std::string& what) : std::runtime_error(what) {}
};

/// An exhaustive enumeration or search hit its configured cap. The result is
/// inconclusive, never wrong: callers must treat this as "unknown".
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sga
