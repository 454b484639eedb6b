#include "qfz/text_format.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace qfz::text {

namespace {

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kMalformedInput,
              "line " + std::to_string(line) + ": " + what);
}

// Yields whitespace-split tokens of non-comment, non-blank lines.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string_view>& tokens) {
    tokens.clear();
    while (std::getline(in_, line_)) {
      ++number_;
      if (auto hash = line_.find('#'); hash != std::string::npos) line_.resize(hash);
      std::string_view rest = line_;
      while (true) {
        const auto start = rest.find_first_not_of(" \t\r");
        if (start == std::string_view::npos) break;
        rest.remove_prefix(start);
        const auto end = rest.find_first_of(" \t\r");
        tokens.push_back(rest.substr(0, end));
        if (end == std::string_view::npos) break;
        rest.remove_prefix(end);
      }
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::size_t line() const { return number_; }

 private:
  std::istream& in_;
  std::string line_;
  std::size_t number_ = 0;
};

template <typename T>
T parse(std::string_view token, std::size_t line, const char* field) {
  T value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    malformed(line, std::string("bad ") + field + " '" + std::string(token) + "'");
  }
  return value;
}

void expect_count(const std::vector<std::string_view>& tokens, std::size_t count,
                  std::size_t line) {
  if (tokens.size() != count) {
    malformed(line, "expected " + std::to_string(count) + " fields, got " +
                        std::to_string(tokens.size()));
  }
}

}  // namespace

std::string format_weight(double w) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, w);
  return std::string(buf, ptr);
}

WeightedGraph read_graph(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string_view> tokens;
  if (!reader.next(tokens)) malformed(reader.line(), "missing header");
  expect_count(tokens, 2, reader.line());
  const auto n = parse<std::uint64_t>(tokens[0], reader.line(), "vertex count");
  const auto m = parse<std::uint64_t>(tokens[1], reader.line(), "edge count");
  std::vector<Edge> edges;
  std::vector<double> weights;
  edges.reserve(m);
  weights.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!reader.next(tokens)) malformed(reader.line(), "fewer edges than declared");
    expect_count(tokens, 3, reader.line());
    edges.push_back({parse<VertexId>(tokens[0], reader.line(), "vertex"),
                     parse<VertexId>(tokens[1], reader.line(), "vertex")});
    weights.push_back(parse<double>(tokens[2], reader.line(), "weight"));
  }
  if (reader.next(tokens)) malformed(reader.line(), "trailing data after edges");
  return {Graph::validated(n, std::move(edges)), std::move(weights)};
}

void write_graph(std::ostream& out, const Graph& graph, std::span<const double> weights) {
  if (weights.size() != graph.edge_count()) {
    throw Error(ErrorCode::kSizeMismatch, "one weight per edge expected");
  }
  std::string buf = std::to_string(graph.vertex_count()) + " " +
                    std::to_string(graph.edge_count()) + "\n";
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edges()[e];
    buf += std::to_string(edge.x);
    buf += ' ';
    buf += std::to_string(edge.y);
    buf += ' ';
    buf += format_weight(weights[e]);
    buf += '\n';
  }
  out << buf;
}

void write_saliency(std::ostream& out, const Graph& graph, const SaliencyMap& saliency) {
  const std::vector<double> values(saliency.values().begin(), saliency.values().end());
  write_graph(out, graph, values);
}

SaliencyMap read_saliency(std::istream& in, const Graph& graph) {
  LineReader reader(in);
  std::vector<std::string_view> tokens;
  if (!reader.next(tokens)) malformed(reader.line(), "missing header");
  expect_count(tokens, 2, reader.line());
  if (parse<std::uint64_t>(tokens[0], reader.line(), "vertex count") != graph.vertex_count() ||
      parse<std::uint64_t>(tokens[1], reader.line(), "edge count") != graph.edge_count()) {
    throw Error(ErrorCode::kSizeMismatch, "saliency file does not match the graph");
  }
  std::vector<Level> values;
  values.reserve(graph.edge_count());
  for (const Edge& edge : graph.edges()) {
    if (!reader.next(tokens)) malformed(reader.line(), "fewer edges than declared");
    expect_count(tokens, 3, reader.line());
    const Edge read{parse<VertexId>(tokens[0], reader.line(), "vertex"),
                    parse<VertexId>(tokens[1], reader.line(), "vertex")};
    if (read != edge) {
      throw Error(ErrorCode::kSizeMismatch,
                  "line " + std::to_string(reader.line()) + ": edge differs from graph");
    }
    values.push_back(parse<Level>(tokens[2], reader.line(), "saliency value"));
    if (values.back() >= graph.edge_count()) malformed(reader.line(), "saliency exceeds |E| - 1");
  }
  return SaliencyMap(std::move(values));
}

void write_dendrogram(std::ostream& out, const Dendrogram& dendrogram) {
  std::ostringstream buf;
  buf << dendrogram.leaf_count() << ' ' << dendrogram.internal_count() << '\n';
  for (auto node = static_cast<NodeId>(dendrogram.leaf_count());
       node < dendrogram.node_count(); ++node) {
    buf << node << ' ' << dendrogram.level(node);
    for (NodeId child : dendrogram.children(node)) buf << ' ' << child;
    buf << '\n';
  }
  out << buf.str();
}

Dendrogram read_dendrogram(std::istream& in, Level level_bound) {
  LineReader reader(in);
  std::vector<std::string_view> tokens;
  if (!reader.next(tokens)) malformed(reader.line(), "missing header");
  expect_count(tokens, 2, reader.line());
  const auto n = parse<std::uint32_t>(tokens[0], reader.line(), "leaf count");
  const auto k = parse<std::uint32_t>(tokens[1], reader.line(), "internal count");
  const std::size_t total = std::size_t{n} + k;
  std::vector<NodeId> parent(total, kNoNode);
  std::vector<Level> level(total, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    if (!reader.next(tokens)) malformed(reader.line(), "fewer nodes than declared");
    if (tokens.size() < 4) malformed(reader.line(), "internal node needs two children");
    const auto id = parse<NodeId>(tokens[0], reader.line(), "node id");
    if (id != n + i) malformed(reader.line(), "node ids must be consecutive from n");
    level[id] = parse<Level>(tokens[1], reader.line(), "level");
    for (std::size_t t = 2; t < tokens.size(); ++t) {
      const auto child = parse<NodeId>(tokens[t], reader.line(), "child");
      if (child >= id) malformed(reader.line(), "children must precede their parent");
      if (parent[child] != kNoNode) malformed(reader.line(), "node has two parents");
      if (child >= n && level[child] >= level[id]) {
        malformed(reader.line(), "child level must be below parent level");
      }
      parent[child] = id;
    }
  }
  if (reader.next(tokens)) malformed(reader.line(), "trailing data after nodes");
  Dendrogram d = Dendrogram::canonical(n, parent, level, level_bound);
  return d;
}

void write_edge_list(std::ostream& out, const EdgeSet& edges) {
  std::string buf;
  for (EdgeId e : edges.indices()) {
    buf += std::to_string(e);
    buf += '\n';
  }
  out << buf;
}

EdgeSet read_edge_list(std::istream& in, std::size_t host_edge_count) {
  LineReader reader(in);
  std::vector<std::string_view> tokens;
  std::vector<EdgeId> indices;
  while (reader.next(tokens)) {
    expect_count(tokens, 1, reader.line());
    indices.push_back(parse<EdgeId>(tokens[0], reader.line(), "edge index"));
  }
  return EdgeSet(host_edge_count, std::move(indices));
}

}  // namespace qfz::text
