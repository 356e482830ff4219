#include "centrality/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "centrality/errors.hpp"
#include "centrality/spectral.hpp"

namespace centrality {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream stream(line);
    std::string token;
    while (stream >> token) {
        tokens.push_back(token);
    }
    return tokens;
}

std::uint64_t parse_label(const std::string& token, int line_no) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": invalid label '" + token + "'");
    }
    return value;
}

// Dense 0-based indices in first-appearance order.
class LabelMap {
public:
    int index_of(std::uint64_t label) {
        const auto [it, inserted] = index_.try_emplace(label, static_cast<int>(labels_.size()));
        if (inserted) {
            labels_.push_back(label);
        }
        return it->second;
    }

    std::vector<std::uint64_t> take() { return std::move(labels_); }
    bool empty() const { return labels_.empty(); }

private:
    std::unordered_map<std::uint64_t, int> index_;
    std::vector<std::uint64_t> labels_;
};

// Calls on_line(line_no, tokens) for every non-blank, non-comment line.
template <typename OnLine>
void for_each_data_line(const std::string& text, OnLine on_line) {
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::vector<std::string> tokens = split_tokens(line);
        if (tokens.empty() || tokens.front().front() == '#') {
            continue;
        }
        on_line(line_no, tokens);
    }
}

std::string format_value(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", v);
    return buffer;
}

} // namespace

LabeledGraph parse_edge_list(const std::string& text) {
    LabelMap labels;
    std::vector<Graph::Edge> pairs;
    for_each_data_line(text, [&](int line_no, const std::vector<std::string>& tokens) {
        if (tokens.size() > 2) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 1 or 2 labels, got " +
                             std::to_string(tokens.size()));
        }
        if (tokens.size() == 1) {
            labels.index_of(parse_label(tokens[0], line_no));
            return;
        }
        const std::uint64_t a = parse_label(tokens[0], line_no);
        const std::uint64_t b = parse_label(tokens[1], line_no);
        if (a == b) {
            throw SelfLoop("line " + std::to_string(line_no) + ": self-loop at label " +
                           std::to_string(a));
        }
        const int u = labels.index_of(a); // sequenced: first appearance wins the lower index
        const int v = labels.index_of(b);
        pairs.emplace_back(u, v);
    });
    if (labels.empty()) {
        throw ParseError("input declares no vertices");
    }
    std::vector<std::uint64_t> label_list = labels.take();
    Graph graph(static_cast<int>(label_list.size()), pairs);
    return LabeledGraph{std::move(graph), std::move(label_list)};
}

LabeledHypergraph parse_hyperedge_list(const std::string& text) {
    LabelMap labels;
    std::vector<std::vector<int>> hyperedges;
    for_each_data_line(text, [&](int line_no, const std::vector<std::string>& tokens) {
        std::vector<int> members;
        members.reserve(tokens.size());
        for (const std::string& token : tokens) {
            const int index = labels.index_of(parse_label(token, line_no));
            if (std::find(members.begin(), members.end(), index) != members.end()) {
                throw DuplicateVertexInHyperedge("line " + std::to_string(line_no) +
                                                 ": repeated label " + token);
            }
            members.push_back(index);
        }
        hyperedges.push_back(std::move(members));
    });
    if (labels.empty()) {
        throw ParseError("input declares no vertices");
    }
    std::vector<std::uint64_t> label_list = labels.take();
    Hypergraph hypergraph(static_cast<int>(label_list.size()), std::move(hyperedges));
    return LabeledHypergraph{std::move(hypergraph), std::move(label_list)};
}

WeightFunction weight_for_measure(const std::string& measure) {
    if (measure == "subgraph") {
        return WeightFunction::exp();
    }
    if (measure == "odd") {
        return WeightFunction::sinh();
    }
    if (measure == "even") {
        return WeightFunction::cosh();
    }
    const auto parse_k = [&measure](const std::string& arg) {
        int k = 0;
        const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), k);
        if (ec != std::errc() || ptr != arg.data() + arg.size() || k < 0) {
            throw InvalidParam("measure '" + measure + "' needs a non-negative integer k");
        }
        return k;
    };
    if (measure.rfind("monomial:", 0) == 0) {
        return WeightFunction::monomial(parse_k(measure.substr(9)));
    }
    if (measure.rfind("radius:", 0) == 0) {
        return WeightFunction::radius_poly(parse_k(measure.substr(7)));
    }
    throw InvalidParam("unknown measure '" + measure +
                       "' (expected subgraph, odd, even, monomial:k, radius:k or bipartivity)");
}

ReportDocument analyze(const std::string& input_text, InputKind kind,
                       const std::string& measure) {
    ReportDocument doc;
    doc.measure = measure;

    SymmetricMatrix adjacency(0);
    if (kind == InputKind::EdgeList) {
        LabeledGraph input = parse_edge_list(input_text);
        doc.n = input.graph.vertex_count();
        doc.m = static_cast<std::int64_t>(input.graph.edge_count());
        doc.labels = std::move(input.labels);
        adjacency = adjacency_matrix(input.graph);
    } else {
        LabeledHypergraph input = parse_hyperedge_list(input_text);
        doc.n = input.hypergraph.vertex_count();
        doc.m = static_cast<std::int64_t>(input.hypergraph.hyperedge_count());
        doc.labels = std::move(input.labels);
        adjacency = hypergraph_adjacency(input.hypergraph);
    }

    const SpectralDecomposition decomposition = eigendecompose(adjacency);
    if (measure == "bipartivity") {
        doc.beta = bipartivity(decomposition);
        std::vector<double> values(doc.n);
        for (int i = 0; i < doc.n; ++i) {
            values[i] = node_bipartivity(decomposition, i);
        }
        doc.report = rank_nodes(std::move(values), measure);
    } else {
        const WeightFunction weight = weight_for_measure(measure);
        doc.centralization = functional_centralization(decomposition, weight);
        doc.report = rank_nodes(functional_centrality(decomposition, weight), measure);
    }
    return doc;
}

std::string to_tsv(const ReportDocument& doc) {
    std::string out;
    out += "# measure: " + doc.measure + "\n";
    out += "# n: " + std::to_string(doc.n) + "\n";
    out += "# m: " + std::to_string(doc.m) + "\n";
    if (doc.centralization.has_value()) {
        out += "# centralization: " + format_value(*doc.centralization) + "\n";
    }
    if (doc.beta.has_value()) {
        out += "# beta: " + format_value(*doc.beta) + "\n";
    }
    out += "node\tvalue\trank\n";
    const std::vector<int> ranks = doc.report.ranks();
    for (const int node : doc.report.ranking) {
        out += std::to_string(doc.labels[node]) + "\t" +
               format_value(doc.report.values[node]) + "\t" + std::to_string(ranks[node]) + "\n";
    }
    return out;
}

std::string to_json(const ReportDocument& doc) {
    nlohmann::ordered_json root;
    root["measure"] = doc.measure;
    root["graph"] = {{"n", doc.n}, {"m", doc.m}};
    if (doc.centralization.has_value()) {
        root["centralization"] = *doc.centralization;
    }
    if (doc.beta.has_value()) {
        root["beta"] = *doc.beta;
    }
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    const std::vector<int> ranks = doc.report.ranks();
    for (const int node : doc.report.ranking) {
        nlohmann::ordered_json entry;
        entry["label"] = doc.labels[node];
        entry["value"] = doc.report.values[node];
        entry["rank"] = ranks[node];
        if (doc.beta.has_value()) {
            entry["beta"] = doc.report.values[node];
        }
        nodes.push_back(std::move(entry));
    }
    root["nodes"] = std::move(nodes);
    return root.dump(2) + "\n";
}

std::string run_to_string(const RunConfig& config) {
    std::ifstream file(config.input_path);
    if (!file) {
        throw Error("cannot open input file '" + config.input_path + "'");
    }
    std::ostringstream contents;
    contents << file.rdbuf();

    try {
        const ReportDocument doc = analyze(contents.str(), config.kind, config.measure);
        return config.format == OutputFormat::Tsv ? to_tsv(doc) : to_json(doc);
    } catch (const ParseError& e) {
        throw ParseError(config.input_path + ": " + e.what());
    } catch (const SelfLoop& e) {
        throw SelfLoop(config.input_path + ": " + e.what());
    } catch (const DuplicateVertexInHyperedge& e) {
        throw DuplicateVertexInHyperedge(config.input_path + ": " + e.what());
    }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& diag) {
    try {
        const std::string rendered = run_to_string(config);
        if (config.output_path.empty()) {
            out << rendered;
        } else {
            std::ofstream file(config.output_path);
            if (!file) {
                throw Error("cannot open output file '" + config.output_path + "'");
            }
            file << rendered;
        }
        return 0;
    } catch (const std::exception& e) {
        diag << "centrality: " << e.what() << "\n";
        return 1;
    }
}

} // namespace centrality
