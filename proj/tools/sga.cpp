// Command-line front end for the simple gene assembly toolkit.
//
// Exit codes: 0 success/true verdict, 1 false verdict/unsuccessful,
// 2 input error, 3 cap hit/inconclusive.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sga/characterize.hpp"
#include "sga/graph_rules.hpp"
#include "sga/marked_graph.hpp"
#include "sga/oracle.hpp"
#include "sga/string_rules.hpp"
#include "sga/strings.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInconclusive = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw sga::parse_error("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string_view trimmed(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    return text;
}

/// Inline text or file content; a leading '{' means graph JSON, a leading
/// '[' the string JSON form, anything else the token form.
struct Input {
    std::optional<sga::GeneString> string;
    std::optional<sga::SimpleMarkedGraph> graph;

    bool is_graph() const { return graph.has_value(); }

    sga::SimpleMarkedGraph as_graph() const {
        if (graph) return *graph;
        return sga::build_extended_overlap_graph(*string);
    }
};

Input load_input(const std::string& inline_text, const std::string& file_path) {
    if (inline_text.empty() == file_path.empty())
        throw sga::parse_error("give exactly one input: an inline string or --file");
    const std::string text = file_path.empty() ? inline_text : read_file(file_path);
    const std::string_view body = trimmed(text);
    Input input;
    if (!body.empty() && body.front() == '{') {
        sga::SimpleMarkedGraph g;
        try {
            from_json(nlohmann::json::parse(body), g);
        } catch (const nlohmann::json::exception& e) {
            throw sga::parse_error(std::string("graph JSON: ") + e.what());
        }
        input.graph = g;
    } else if (!body.empty() && body.front() == '[') {
        sga::GeneString s;
        try {
            from_json(nlohmann::json::parse(body), s);
        } catch (const nlohmann::json::exception& e) {
            throw sga::parse_error(std::string("string JSON: ") + e.what());
        }
        input.string = s;
    } else {
        input.string = sga::GeneString::parse(body);
    }
    return input;
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int run_validate(const Input& input, const std::string& format) {
    if (input.is_graph()) throw sga::parse_error("validate takes a string input");
    const sga::GeneString& s = *input.string;
    if (format == "json") {
        nlohmann::json j{{"validity", sga::to_string(s.validity())}, {"symbols", s}};
        if (!s.is_valid()) j["reason"] = s.invalid_reason();
        print_json(j);
    } else {
        std::cout << sga::to_string(s.validity());
        if (!s.is_valid()) std::cout << ": " << s.invalid_reason();
        std::cout << "\n";
    }
    return s.is_valid() ? kExitTrue : kExitFalse;
}

int run_convert(const std::string& descriptor, const std::string& format) {
    const sga::GeneString s = sga::MdsDescriptor::parse(descriptor).to_gene_string();
    if (format == "json")
        print_json(nlohmann::json{{"string", s.str()}, {"symbols", s}});
    else
        std::cout << s.str() << "\n";
    return kExitTrue;
}

int run_graph(const Input& input, const std::string& format, const std::string& projection) {
    if (input.is_graph()) throw sga::parse_error("graph takes a string input");
    sga::SimpleMarkedGraph g = input.as_graph();
    if (projection == "overlap")
        g = sga::overlap_projection(g);
    else if (projection == "nesting")
        g = sga::directed_projection(g);
    else if (!projection.empty())
        throw sga::parse_error("unknown projection '" + projection + "'");
    if (format == "json")
        print_json(g);
    else if (format == "dot")
        std::cout << sga::to_dot(g);
    else
        std::cout << g.canonical_text() << "\n";
    return kExitTrue;
}

int run_reduce(const Input& input, const std::string& rules_text, const std::string& format) {
    if (input.is_graph()) {
        const auto trace = sga::apply_graph_reduction(*input.graph,
                                                      sga::parse_graph_rules(rules_text));
        if (format == "json") {
            nlohmann::json steps = nlohmann::json::array();
            for (const auto& step : trace.steps)
                steps.push_back({{"rule", step.rule.str()}, {"result", step.result}});
            nlohmann::json j{{"initial", trace.initial},
                             {"steps", steps},
                             {"success", trace.success}};
            if (trace.aborted()) {
                j["failed_rule"] = trace.failed_rule->str();
                j["failure_reason"] = trace.failure_reason;
            }
            print_json(j);
        } else {
            for (const auto& step : trace.steps)
                std::cout << step.rule.str() << " -> " << step.result.canonical_text() << "\n";
            if (trace.aborted())
                std::cout << "error: " << trace.failure_reason << "\n";
            else
                std::cout << "success: " << (trace.success ? "yes" : "no") << "\n";
        }
        if (trace.aborted()) return kExitInputError;
        return trace.success ? kExitTrue : kExitFalse;
    }

    const auto trace =
        sga::apply_reduction(*input.string, sga::parse_string_rules(rules_text));
    if (format == "json") {
        nlohmann::json steps = nlohmann::json::array();
        for (const auto& step : trace.steps)
            steps.push_back({{"rule", step.rule.str()}, {"result", step.result.str()}});
        nlohmann::json j{{"initial", trace.initial.str()},
                         {"steps", steps},
                         {"success", trace.success}};
        if (trace.aborted()) {
            j["failed_rule"] = trace.failed_rule->str();
            j["failure_reason"] = trace.failure_reason;
        }
        print_json(j);
    } else {
        for (const auto& step : trace.steps)
            std::cout << step.rule.str() << " -> " << step.result.str() << "\n";
        if (trace.aborted())
            std::cout << "error: " << trace.failure_reason << "\n";
        else
            std::cout << "success: " << (trace.success ? "yes" : "no") << "\n";
    }
    if (trace.aborted()) return kExitInputError;
    return trace.success ? kExitTrue : kExitFalse;
}

bool looks_like_graph_system(const std::string& system) {
    return system.find("gnr") != std::string::npos || system.find("sgpr") != std::string::npos;
}

int run_search(const Input& input, const std::string& system, std::size_t max_states,
               const std::string& format) {
    sga::SearchOptions options;
    options.max_states = max_states;

    sga::SearchResult result;
    if (input.is_graph() || looks_like_graph_system(system)) {
        result = sga::brute_force_success(input.as_graph(), sga::parse_graph_rule_set(system),
                                          options);
    } else {
        std::set<sga::StringRuleKind> kinds;
        if (system == "simple")
            kinds = sga::rule_kinds(sga::RuleSystem::simple);
        else if (system == "general")
            kinds = sga::rule_kinds(sga::RuleSystem::general);
        else {
            std::size_t start = 0;
            const std::string names = system;
            while (start <= names.size()) {
                std::size_t end = names.find(',', start);
                if (end == std::string::npos) end = names.size();
                const std::string name = names.substr(start, end - start);
                if (name == "snr")
                    kinds.insert(sga::StringRuleKind::snr);
                else if (name == "spr")
                    kinds.insert(sga::StringRuleKind::spr);
                else if (name == "sdr")
                    kinds.insert(sga::StringRuleKind::sdr);
                else if (name == "sspr")
                    kinds.insert(sga::StringRuleKind::sspr);
                else if (name == "ssdr")
                    kinds.insert(sga::StringRuleKind::ssdr);
                else
                    throw sga::parse_error("unknown rule kind '" + name + "' in --system");
                start = end + 1;
            }
        }
        result = sga::brute_force_success(*input.string, kinds, options);
    }

    if (format == "json") {
        nlohmann::json j{{"successful", result.successful},
                         {"states_explored", result.states_explored}};
        if (result.string_witness) {
            nlohmann::json steps = nlohmann::json::array();
            for (const auto& step : result.string_witness->steps)
                steps.push_back({{"rule", step.rule.str()}, {"result", step.result.str()}});
            j["witness"] = steps;
        }
        if (result.graph_witness) {
            nlohmann::json steps = nlohmann::json::array();
            for (const auto& step : result.graph_witness->steps)
                steps.push_back({{"rule", step.rule.str()}, {"result", step.result}});
            j["witness"] = steps;
        }
        print_json(j);
    } else {
        std::cout << "successful: " << (result.successful ? "yes" : "no") << "\n";
        std::cout << "states explored: " << result.states_explored << "\n";
        if (result.string_witness)
            for (const auto& step : result.string_witness->steps)
                std::cout << step.rule.str() << " -> " << step.result.str() << "\n";
        if (result.graph_witness)
            for (const auto& step : result.graph_witness->steps)
                std::cout << step.rule.str() << " -> " << step.result.canonical_text() << "\n";
    }
    return result.successful ? kExitTrue : kExitFalse;
}

void print_verdict_text(const sga::SuccessVerdict& verdict) {
    std::cout << "successful: " << (verdict.successful ? "yes" : "no") << "\n";
    if (verdict.failed_condition)
        std::cout << "failed condition: " << sga::to_string(*verdict.failed_condition) << "\n";
    if (verdict.certificate) {
        std::cout << "certificate: " << verdict.certificate->str() << "\n";
        std::cout << "roles:";
        for (const auto& [v, kind] : verdict.certificate->roles)
            std::cout << " " << v.str() << ":" << sga::to_string(kind);
        std::cout << "\n";
    }
}

int run_check(const Input& input, const std::string& rules_set, bool literal,
              const std::string& format) {
    const sga::SimpleMarkedGraph g = input.as_graph();
    const sga::GraphRuleSet s = sga::parse_graph_rule_set(rules_set);
    if (literal) {
        const bool ok = sga::literal_theorem_check(g, s);
        if (format == "json")
            print_json(nlohmann::json{{"successful", ok}, {"literal", true}});
        else
            std::cout << "successful (literal conditions): " << (ok ? "yes" : "no") << "\n";
        return ok ? kExitTrue : kExitFalse;
    }
    const sga::SuccessVerdict verdict = sga::check_success(g, s);
    if (format == "json")
        print_json(verdict);
    else
        print_verdict_text(verdict);
    return verdict.successful ? kExitTrue : kExitFalse;
}

int run_orderings(const Input& input, const std::string& rules_set, std::size_t cap,
                  const std::string& format) {
    const sga::SimpleMarkedGraph g = input.as_graph();
    const auto orderings =
        sga::enumerate_successful_orderings(g, sga::parse_graph_rule_set(rules_set), cap);
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& cert : orderings) j.push_back(cert);
        print_json(j);
    } else {
        std::cout << orderings.size() << " successful ordering"
                  << (orderings.size() == 1 ? "" : "s") << "\n";
        for (const auto& cert : orderings) {
            std::cout << cert.str() << " roles:";
            for (const auto& [v, kind] : cert.roles)
                std::cout << " " << v.str() << ":" << sga::to_string(kind);
            std::cout << "\n";
        }
    }
    return orderings.empty() ? kExitFalse : kExitTrue;
}

int run_verify(std::size_t k, bool lemmas, bool theorems, std::size_t sample,
               std::uint64_t seed, const std::string& format) {
    if (!lemmas && !theorems) lemmas = theorems = true;
    nlohmann::json out = nlohmann::json::object();
    std::size_t problems = 0;

    if (lemmas) {
        std::size_t instances = 0;
        std::size_t simulation_violations = 0;
        std::size_t structural_failures = 0;
        std::size_t equivalence_mismatches = 0;
        const std::set<sga::StringRuleKind> marker_preserving{sga::StringRuleKind::snr,
                                                              sga::StringRuleKind::sspr};
        const sga::GraphRuleSet both{sga::GraphRuleKind::gnr, sga::GraphRuleKind::sgpr};
        const auto check_one = [&](const sga::GeneString& s) {
            ++instances;
            simulation_violations += sga::verify_simulation(s).violations.size();
            const auto g = sga::build_extended_overlap_graph(s);
            const auto props = sga::directed_properties(g);
            if (!props.acyclic || !props.transitively_closed) ++structural_failures;
            if (sga::brute_force_success(s, marker_preserving).successful !=
                sga::brute_force_success(g, both).successful)
                ++equivalence_mismatches;
        };
        if (sample > 0) {
            for (std::uint64_t i = 0; i < sample; ++i)
                check_one(sga::random_extended_legal_string(k, seed + i));
        } else {
            for (std::size_t kk = 0; kk <= k; ++kk)
                sga::for_each_extended_legal_string(kk, check_one);
        }
        problems += simulation_violations + structural_failures + equivalence_mismatches;
        out["lemmas"] = {{"instances", instances},
                         {"simulation_violations", simulation_violations},
                         {"structural_failures", structural_failures},
                         {"equivalence_mismatches", equivalence_mismatches}};
        if (format != "json")
            std::cout << "lemmas: " << instances << " instances, " << simulation_violations
                      << " simulation violations, " << structural_failures
                      << " structural failures, " << equivalence_mismatches
                      << " string/graph reachability mismatches\n";
    }

    if (theorems) {
        nlohmann::json reports = nlohmann::json::array();
        const auto consume = [&](const sga::CrossValidationReport& report) {
            problems += report.corrected_disagreements.size();
            problems += report.certificate_failures.size() + report.enumeration_failures.size();
            if (!report.literal_gap_is_m_outgoing_only()) ++problems;
            reports.push_back(report);
            if (format != "json") std::cout << "theorems: " << report.summary() << "\n";
        };
        if (sample > 0) {
            consume(sga::cross_validate_characterizations_sampled(k, sample, seed));
        } else {
            for (std::size_t kk = 0; kk <= k; ++kk)
                consume(sga::cross_validate_characterizations(kk));
        }
        out["theorems"] = reports;
    }

    if (format == "json") print_json(out);
    if (format != "json")
        std::cout << (problems == 0 ? "all checks passed" : "VIOLATIONS FOUND") << "\n";
    return problems == 0 ? kExitTrue : kExitFalse;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"simple gene assembly: legal strings, extended overlap graphs, "
                 "reduction rules, success characterizations"};
    app.require_subcommand(1);

    std::string inline_input, file_input, format = "text";
    std::string rules_text, system_text, rules_set = "gnr,sgpr", projection, descriptor;
    std::size_t max_states = sga::kDefaultSearchStateCap;
    std::size_t cap = sga::kDefaultEnumerationCap;
    std::size_t verify_k = 2, sample = 0;
    std::uint64_t seed = 0x5417;
    bool literal = false, lemmas = false, theorems = false;

    const auto add_input = [&](CLI::App* cmd, bool positional_required) {
        cmd->add_option("input", inline_input, "inline string (tokens or JSON) or graph JSON")
            ->required(positional_required);
        cmd->add_option("--file", file_input, "read the input from a file");
        cmd->add_option("--format", format, "output format")->default_str("text");
    };

    CLI::App* validate = app.add_subcommand("validate", "classify a string");
    add_input(validate, false);

    CLI::App* convert = app.add_subcommand("convert", "MDS descriptor to extended legal string");
    convert->add_option("--mds", descriptor, "descriptor such as \"M3 M4 -M2 M1\"")->required();
    convert->add_option("--format", format, "output format");

    CLI::App* graph = app.add_subcommand("graph", "emit the extended overlap graph");
    add_input(graph, false);
    graph->add_option("--projection", projection, "overlap or nesting");

    CLI::App* reduce = app.add_subcommand("reduce", "apply a rule sequence and print the trace");
    add_input(reduce, false);
    reduce->add_option("--rules", rules_text, "comma-separated rules, execution order")->required();

    CLI::App* search = app.add_subcommand("search", "brute-force successfulness");
    add_input(search, false);
    search->add_option("--system", system_text, "simple, general, or rule kinds")->required();
    search->add_option("--max-states", max_states, "search state cap");

    CLI::App* check = app.add_subcommand("check", "characterization verdict and certificate");
    add_input(check, false);
    check->add_option("--rules-set", rules_set, "subset of gnr,sgpr");
    check->add_flag("--literal", literal, "published conditions without the m-outgoing fix");

    CLI::App* orderings = app.add_subcommand("orderings", "enumerate successful orderings");
    add_input(orderings, false);
    orderings->add_option("--rules-set", rules_set, "subset of gnr,sgpr");
    orderings->add_option("--cap", cap, "vertex-count cap for enumeration");

    CLI::App* verify = app.add_subcommand("verify", "run oracle campaigns");
    verify->add_option("--k", verify_k, "pointer identity count");
    verify->add_flag("--lemmas", lemmas, "simulation and structural lemmas");
    verify->add_flag("--theorems", theorems, "characterization cross-validation");
    verify->add_option("--sample", sample, "sampled mode with this many instances");
    verify->add_option("--seed", seed, "sample seed");
    verify->add_option("--format", format, "output format");

    try {
        app.parse(argc, argv);

        if (validate->parsed()) return run_validate(load_input(inline_input, file_input), format);
        if (convert->parsed()) return run_convert(descriptor, format);
        if (graph->parsed()) {
            const bool format_given = graph->count("--format") > 0;
            return run_graph(load_input(inline_input, file_input),
                             format_given ? format : "dot", projection);
        }
        if (reduce->parsed())
            return run_reduce(load_input(inline_input, file_input), rules_text, format);
        if (search->parsed())
            return run_search(load_input(inline_input, file_input), system_text, max_states,
                              format);
        if (check->parsed())
            return run_check(load_input(inline_input, file_input), rules_set, literal, format);
        if (orderings->parsed())
            return run_orderings(load_input(inline_input, file_input), rules_set, cap, format);
        if (verify->parsed()) return run_verify(verify_k, lemmas, theorems, sample, seed, format);
        return kExitInputError;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitTrue : kExitInputError;
    } catch (const sga::cap_error& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
