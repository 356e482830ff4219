#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "centrality/engine.hpp"
#include "centrality/graph.hpp"

namespace centrality {

/// Graph plus the original input labels, index -> label. Reports always
/// show these labels, never the internal dense indices.
struct LabeledGraph {
    Graph graph;
    std::vector<std::uint64_t> labels;
};

struct LabeledHypergraph {
    Hypergraph hypergraph;
    std::vector<std::uint64_t> labels;
};

/// One edge per line: two whitespace-separated non-negative integer
/// labels. A line with a single label declares an isolated vertex.
/// Blank lines and lines beginning with '#' are skipped. Labels are
/// arbitrary and remapped to dense 0-based indices in first-appearance
/// order. Duplicate edges and both orientations are fine; self-loops
/// are not.
LabeledGraph parse_edge_list(const std::string& text);

/// One hyperedge per line: whitespace-separated distinct labels, same
/// comment and remapping rules as parse_edge_list.
LabeledHypergraph parse_hyperedge_list(const std::string& text);

enum class InputKind { EdgeList, HyperList };
enum class OutputFormat { Tsv, Json };

struct RunConfig {
    std::string input_path;
    InputKind kind = InputKind::EdgeList;
    std::string measure = "subgraph";
    OutputFormat format = OutputFormat::Tsv;
    std::string output_path; // empty: write to standard output
};

/// Measure spellings: subgraph | odd | even | monomial:k | radius:k.
/// "bipartivity" is a mode of its own, not a weight.
WeightFunction weight_for_measure(const std::string& measure);

/// Everything one run produces, ready for rendering.
struct ReportDocument {
    std::string measure;
    int n = 0;
    std::int64_t m = 0; // edge count, or hyperedge count for hyperlists
    std::optional<double> centralization; // weight measures only
    std::optional<double> beta;           // bipartivity mode only
    std::vector<std::uint64_t> labels;
    Report report;
};

/// Full in-memory pipeline: parse, build the adjacency, decompose,
/// evaluate the measure, rank.
ReportDocument analyze(const std::string& input_text, InputKind kind, const std::string& measure);

/// node<TAB>value<TAB>rank rows in ranking order, preceded by '#'
/// metadata lines; values carry 12 significant digits.
std::string to_tsv(const ReportDocument& doc);

std::string to_json(const ReportDocument& doc);

/// Reads config.input_path and renders the report; throws on any error.
std::string run_to_string(const RunConfig& config);

/// CLI entry: emits the report to config.output_path or `out`, returns 0
/// on success or 1 after writing a single-line diagnostic to `diag`.
int run(const RunConfig& config, std::ostream& out = std::cout, std::ostream& diag = std::cerr);

} // namespace centrality
