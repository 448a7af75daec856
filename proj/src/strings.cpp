#include "sga/strings.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace sga {

GeneSymbol GeneSymbol::pointer(int value, bool barred) {
    if (value < kMinPointer)
        throw std::invalid_argument("pointer value must be >= 2, got " + std::to_string(value));
    return GeneSymbol(value, barred);
}

GeneSymbol GeneSymbol::marker(MarkerLetter letter, bool barred) {
    return GeneSymbol(letter == MarkerLetter::b ? kCodeB : kCodeE, barred);
}

int GeneSymbol::pointer_value() const {
    if (!is_pointer()) throw std::logic_error("marker symbol has no pointer value");
    return code_;
}

MarkerLetter GeneSymbol::marker_letter() const {
    if (!is_marker()) throw std::logic_error("pointer symbol has no marker letter");
    return code_ == kCodeB ? MarkerLetter::b : MarkerLetter::e;
}

GeneSymbol GeneSymbol::inverted() const { return GeneSymbol(code_, !barred_); }

std::string GeneSymbol::str() const {
    std::string out;
    if (barred_) out += '-';
    if (is_pointer())
        out += std::to_string(code_);
    else
        out += (code_ == kCodeB ? 'b' : 'e');
    return out;
}

std::string to_string(Validity v) {
    switch (v) {
        case Validity::legal: return "legal";
        case Validity::extended_legal: return "extended-legal";
        case Validity::invalid: return "invalid";
    }
    return "invalid";
}

GeneString::GeneString(std::vector<GeneSymbol> symbols) : symbols_(std::move(symbols)) {
    classify();
}

namespace {

// Strips one leading bar mark ('-' or U+2212) and any combining macron
// (U+0304) or overline (U+0305), reporting whether the token was barred.
std::string strip_bar_marks(std::string_view token, bool& barred) {
    barred = false;
    std::string_view rest = token;
    if (!rest.empty() && rest.front() == '-') {
        barred = true;
        rest.remove_prefix(1);
    } else if (rest.size() >= 3 && static_cast<unsigned char>(rest[0]) == 0xE2 &&
               static_cast<unsigned char>(rest[1]) == 0x88 &&
               static_cast<unsigned char>(rest[2]) == 0x92) {
        barred = true;
        rest.remove_prefix(3);
    }
    std::string out;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        if (i + 1 < rest.size() && static_cast<unsigned char>(rest[i]) == 0xCC &&
            (static_cast<unsigned char>(rest[i + 1]) == 0x84 ||
             static_cast<unsigned char>(rest[i + 1]) == 0x85)) {
            barred = true;
            ++i;
            continue;
        }
        out += rest[i];
    }
    return out;
}

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

GeneSymbol symbol_from_token(std::string_view token, std::size_t position) {
    bool barred = false;
    const std::string core = strip_bar_marks(token, barred);
    if (core == "b") return GeneSymbol::marker(MarkerLetter::b, barred);
    if (core == "e") return GeneSymbol::marker(MarkerLetter::e, barred);
    if (all_digits(core)) {
        long value = 0;
        try {
            value = std::stol(core);
        } catch (const std::out_of_range&) {
            throw parse_error("token " + std::to_string(position) + " ('" + std::string(token) +
                              "'): pointer value out of range");
        }
        if (value < 2)
            throw parse_error("token " + std::to_string(position) + " ('" + std::string(token) +
                              "'): pointer values must be >= 2");
        return GeneSymbol::pointer(static_cast<int>(value), barred);
    }
    throw parse_error("token " + std::to_string(position) + " ('" + std::string(token) +
                      "'): expected a pointer (integer >= 2) or a marker (b or e)");
}

} // namespace

GeneSymbol parse_symbol(std::string_view token) { return symbol_from_token(token, 1); }

GeneString GeneString::parse(std::string_view text) {
    std::vector<GeneSymbol> symbols;
    std::istringstream in{std::string(text)};
    std::string token;
    std::size_t position = 0;
    while (in >> token) {
        ++position;
        symbols.push_back(symbol_from_token(token, position));
    }
    return GeneString(std::move(symbols));
}

void GeneString::classify() {
    std::map<int, int> pointer_counts;
    int b_count = 0;
    int e_count = 0;
    for (const GeneSymbol& s : symbols_) {
        if (s.is_pointer())
            ++pointer_counts[s.pointer_value()];
        else if (s.marker_letter() == MarkerLetter::b)
            ++b_count;
        else
            ++e_count;
    }
    for (const auto& [value, count] : pointer_counts) {
        if (count != 2) {
            validity_ = Validity::invalid;
            invalid_reason_ = "pointer identity " + std::to_string(value) + " occurs " +
                              std::to_string(count) + (count == 1 ? " time" : " times") +
                              " (expected exactly 2)";
            return;
        }
    }
    if (b_count == 0 && e_count == 0) {
        validity_ = Validity::legal;
        return;
    }
    for (auto [letter, count] : {std::pair{'b', b_count}, std::pair{'e', e_count}}) {
        if (count != 1) {
            validity_ = Validity::invalid;
            invalid_reason_ = std::string("marker ") + letter +
                              (count == 0 ? " is missing" : " occurs " + std::to_string(count) + " times") +
                              " (expected exactly 1)";
            return;
        }
    }
    validity_ = Validity::extended_legal;
}

std::string GeneString::str() const {
    std::string out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i > 0) out += ' ';
        out += symbols_[i].str();
    }
    return out;
}

std::vector<Identity> GeneString::domain() const {
    std::vector<Identity> dom;
    for (const GeneSymbol& s : symbols_) dom.push_back(s.identity());
    std::sort(dom.begin(), dom.end());
    dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
    return dom;
}

bool GeneString::contains(Identity q) const {
    return std::any_of(symbols_.begin(), symbols_.end(),
                       [&](const GeneSymbol& s) { return s.identity() == q; });
}

std::pair<std::size_t, std::size_t> GeneString::occurrence_positions(Identity q) const {
    std::size_t first = symbols_.size();
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i].identity() != q) continue;
        if (first == symbols_.size())
            first = i;
        else
            return {first, i};
    }
    throw unknown_identity_error("identity " + q.str() + " does not occur twice in '" + str() + "'");
}

Sign GeneString::sign_of(Identity q) const {
    auto [i, j] = occurrence_positions(q);
    return symbols_[i].barred() != symbols_[j].barred() ? Sign::positive : Sign::negative;
}

PointerProfile GeneString::profile(Identity q) const {
    if (!is_valid())
        throw validity_error("profile requires a legal or extended legal string: " + invalid_reason_);
    auto [i, j] = occurrence_positions(q);
    PointerProfile p;
    p.sign = sign_of(q);
    p.first_pos = i + 1;
    p.second_pos = j + 1;
    p.interval = GeneString(std::vector<GeneSymbol>(symbols_.begin() + i, symbols_.begin() + j + 1));
    p.interior = GeneString(std::vector<GeneSymbol>(symbols_.begin() + i + 1, symbols_.begin() + j));
    return p;
}

GeneString GeneString::inverted() const {
    std::vector<GeneSymbol> out;
    out.reserve(symbols_.size());
    for (auto it = symbols_.rbegin(); it != symbols_.rend(); ++it) out.push_back(it->inverted());
    return GeneString(std::move(out));
}

GeneString GeneString::without_markers() const {
    std::vector<GeneSymbol> out;
    for (const GeneSymbol& s : symbols_)
        if (s.is_pointer()) out.push_back(s);
    return GeneString(std::move(out));
}

bool GeneString::operator==(const GeneString& other) const { return symbols_ == other.symbols_; }

MdsDescriptor::MdsDescriptor(std::vector<MdsEntry> entries) : entries_(std::move(entries)) {
    const int kappa = static_cast<int>(entries_.size());
    if (kappa < 2) throw parse_error("an MDS descriptor needs at least 2 entries");
    std::vector<bool> seen(static_cast<std::size_t>(kappa) + 1, false);
    for (const MdsEntry& e : entries_) {
        if (e.index < 1 || e.index > kappa)
            throw parse_error("MDS index " + std::to_string(e.index) + " out of range 1.." +
                              std::to_string(kappa));
        if (seen[static_cast<std::size_t>(e.index)])
            throw parse_error("duplicate MDS index " + std::to_string(e.index));
        seen[static_cast<std::size_t>(e.index)] = true;
    }
}

MdsDescriptor MdsDescriptor::parse(std::string_view text) {
    std::string cleaned;
    for (char c : text) cleaned += (c == '[' || c == ']' || c == ',') ? ' ' : c;
    std::vector<MdsEntry> entries;
    std::istringstream in(cleaned);
    std::string token;
    std::size_t position = 0;
    while (in >> token) {
        ++position;
        bool inverted = false;
        std::string core = strip_bar_marks(token, inverted);
        if (!core.empty() && (core.front() == 'M' || core.front() == 'm')) core.erase(0, 1);
        if (!all_digits(core))
            throw parse_error("MDS entry " + std::to_string(position) + " ('" + token +
                              "'): expected M<k> or -M<k>");
        entries.push_back({std::stoi(core), inverted});
    }
    return MdsDescriptor(std::move(entries));
}

GeneString MdsDescriptor::to_gene_string() const {
    const int k = kappa();
    std::vector<GeneSymbol> out;
    out.reserve(entries_.size() * 2);
    for (const MdsEntry& e : entries_) {
        const GeneSymbol left = e.index == 1 ? GeneSymbol::marker(MarkerLetter::b)
                                             : GeneSymbol::pointer(e.index);
        const GeneSymbol right = e.index == k ? GeneSymbol::marker(MarkerLetter::e)
                                              : GeneSymbol::pointer(e.index + 1);
        if (e.inverted) {
            out.push_back(right.inverted());
            out.push_back(left.inverted());
        } else {
            out.push_back(left);
            out.push_back(right);
        }
    }
    return GeneString(std::move(out));
}

void to_json(nlohmann::json& j, const GeneSymbol& s) {
    j = nlohmann::json{{"kind", s.is_pointer() ? "pointer" : "marker"}, {"barred", s.barred()}};
    if (s.is_pointer())
        j["value"] = s.pointer_value();
    else
        j["value"] = s.marker_letter() == MarkerLetter::b ? "b" : "e";
}

void from_json(const nlohmann::json& j, GeneSymbol& s) {
    const std::string kind = j.at("kind").get<std::string>();
    const bool barred = j.at("barred").get<bool>();
    if (kind == "pointer") {
        const int value = j.at("value").get<int>();
        if (value < 2) throw parse_error("pointer value must be >= 2 in symbol JSON");
        s = GeneSymbol::pointer(value, barred);
    } else if (kind == "marker") {
        const std::string letter = j.at("value").get<std::string>();
        if (letter != "b" && letter != "e")
            throw parse_error("marker value must be \"b\" or \"e\" in symbol JSON");
        s = GeneSymbol::marker(letter == "b" ? MarkerLetter::b : MarkerLetter::e, barred);
    } else {
        throw parse_error("symbol kind must be \"pointer\" or \"marker\"");
    }
}

void to_json(nlohmann::json& j, const GeneString& s) {
    j = nlohmann::json::array();
    for (const GeneSymbol& sym : s.symbols()) j.push_back(sym);
}

void from_json(const nlohmann::json& j, GeneString& s) {
    if (!j.is_array()) throw parse_error("a gene string JSON form is an array of symbols");
    std::vector<GeneSymbol> symbols;
    for (const auto& elem : j) {
        GeneSymbol sym = GeneSymbol::pointer(2);
        from_json(elem, sym);
        symbols.push_back(sym);
    }
    s = GeneString(std::move(symbols));
}

} // namespace sga
