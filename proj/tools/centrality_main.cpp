#include <string>

#include <CLI11.hpp>

#include "centrality/io.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Functional centralities, centralization and bipartivity for graphs "
                 "and hypergraphs"};

    centrality::RunConfig config;
    std::string kind = "edgelist";
    std::string format = "tsv";

    app.add_option("--input", config.input_path, "Input file")->required();
    app.add_option("--kind", kind, "Input format: edgelist or hyperlist")
        ->check(CLI::IsMember({"edgelist", "hyperlist"}));
    app.add_option("--measure", config.measure,
                   "subgraph | odd | even | monomial:k | radius:k | bipartivity")
        ->required();
    app.add_option("--format", format, "Output format: tsv or json")
        ->check(CLI::IsMember({"tsv", "json"}));
    app.add_option("--output", config.output_path, "Output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    config.kind = kind == "hyperlist" ? centrality::InputKind::HyperList
                                      : centrality::InputKind::EdgeList;
    config.format = format == "json" ? centrality::OutputFormat::Json
                                     : centrality::OutputFormat::Tsv;
    return centrality::run(config);
}
