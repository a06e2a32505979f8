#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "pact/cli.hpp"

namespace {

void print_result(const pact::CliResult& res, const std::string& format) {
    if (format == "json")
        std::cout << res.report.dump(2) << "\n";
    else
        std::cout << pact::render_text(res.report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for partial group actions and their enveloping actions"};
    app.require_subcommand(1);

    std::string path;
    std::string format = "text";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"schema", "validate document structure and scalar literals"},
        {"validate", "check group, algebra, action and set-action axioms"},
        {"units", "check the unital identities of the domains"},
        {"decide", "decide whether an enveloping action exists"},
        {"globalize", "construct and export the enveloping action"},
        {"family-check", "check the family axioms in both modes"},
        {"compare", "compare the candidate envelope with the canonical one"},
        {"set-envelope", "quotient a set action into its envelope"},
        {"norm-check", "sample the norm inequality on a block realization"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("document", path, "scenario file")->required();
        sub->add_option("--format", format, "output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
        if (name == "norm-check") {
            sub->add_option("--seed", seed, "override the document seed");
            sub->add_option("--samples", samples, "override the document sample count");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const std::string chosen = app.get_subcommands().front()->get_name();

    std::ifstream in(path);
    if (!in) {
        print_result({2, pact::Json{{"command", chosen}, {"error", "cannot read " + path}}}, format);
        return 2;
    }
    pact::Json doc = pact::Json::parse(in, nullptr, false);
    if (doc.is_discarded()) {
        print_result({2, pact::Json{{"command", chosen}, {"error", "document is not valid JSON"}}},
                     format);
        return 2;
    }

    pact::CliResult res;
    if (chosen == "schema") {
        res = pact::run_schema(doc);
    } else {
        std::vector<std::string> notes = pact::schema_check(doc);
        if (!notes.empty()) {
            res = {2, pact::Json{{"command", chosen},
                                 {"error", "schema check failed"},
                                 {"diagnostics", notes}}};
        } else {
            try {
                pact::Document d = pact::load_document(doc);
                res = pact::run_command(chosen, d, seed, samples);
            } catch (const pact::DocumentError& e) {
                res = {2, pact::Json{{"command", chosen}, {"error", e.what()}}};
            }
        }
    }
    print_result(res, format);
    return res.code;
}
