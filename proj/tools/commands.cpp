#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "qfz/hierarchy.hpp"
#include "qfz/mst.hpp"
#include "qfz/pixel_io.hpp"
#include "qfz/saliency.hpp"
#include "qfz/text_format.hpp"

namespace qfz::cli {

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kMalformedInput, "cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void emit(const std::string& path, const std::string& bytes, std::ostream& out) {
  if (path == "-") {
    out << bytes;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::kMalformedInput, "cannot write " + path);
  file << bytes;
  if (!file) throw Error(ErrorCode::kMalformedInput, "write failed for " + path);
}

text::WeightedGraph load_graph(const std::string& path) {
  std::istringstream in(slurp(path));
  return text::read_graph(in);
}

template <typename Writer>
std::string render_text(Writer&& write) {
  std::ostringstream buf;
  write(buf);
  return buf.str();
}

struct Options {
  std::string graph;
  std::string second;
  std::string output;
  std::string format = "p2";
  int adjacency = 4;
  int maxval = 255;
  bool raw = false;
  bool graph_format = false;
};

int cmd_qfz(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.graph);
  const Dendrogram d = quasi_flat_zones(g.graph, interpret_weights(g.graph, g.weights));
  emit(o.output, render_text([&](std::ostream& s) { text::write_dendrogram(s, d); }), out);
  return kOk;
}

int cmd_saliency(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.graph);
  std::istringstream in(slurp(o.second));
  const Dendrogram d = text::read_dendrogram(in, static_cast<Level>(g.graph.edge_count()));
  const SaliencyMap s = saliency_of_hierarchy(d, g.graph);
  emit(o.output, render_text([&](std::ostream& os) { text::write_saliency(os, g.graph, s); }),
       out);
  return kOk;
}

int cmd_psi(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.graph);
  const WeightMap w = interpret_weights(g.graph, g.weights);
  const SaliencyMap s = psi(g.graph, w);
  std::string bytes;
  if (o.raw) {
    const auto raw = s.raw_values(w);
    bytes = render_text([&](std::ostream& os) { text::write_graph(os, g.graph, raw); });
  } else {
    bytes = render_text([&](std::ostream& os) { text::write_saliency(os, g.graph, s); });
  }
  emit(o.output, bytes, out);
  return kOk;
}

int cmd_check_saliency(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.graph);
  const bool ok = is_saliency_map(g.graph, interpret_weights(g.graph, g.weights));
  out << (ok ? "saliency map\n" : "not a saliency map\n");
  return ok ? kOk : kCheckFailed;
}

int cmd_mst(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.graph);
  const SpanningSubgraph tree = kruskal(g.graph, interpret_weights(g.graph, g.weights));
  std::string bytes;
  if (o.graph_format) {
    std::vector<Edge> edges;
    std::vector<double> weights;
    for (EdgeId e : tree.edges().indices()) {
      edges.push_back(g.graph.edge(e));
      weights.push_back(g.weights[e]);
    }
    const Graph sub = Graph::validated(g.graph.vertex_count(), std::move(edges));
    bytes = render_text([&](std::ostream& os) { text::write_graph(os, sub, weights); });
  } else {
    bytes = render_text([&](std::ostream& os) { text::write_edge_list(os, tree.edges()); });
  }
  emit(o.output, bytes, out);
  return kOk;
}

int cmd_check_mst(const Options& o, std::ostream& out, std::ostream& err) {
  const auto g = load_graph(o.graph);
  std::istringstream in(slurp(o.second));
  const SpanningSubgraph candidate(g.graph, text::read_edge_list(in, g.graph.edge_count()));
  if (!candidate.is_connected()) {
    err << "candidate does not connect all vertices\n";
    out << "not a minimum spanning tree\n";
    return kCheckFailed;
  }
  const bool ok =
      check_mst_via_qfz(g.graph, interpret_weights(g.graph, g.weights), candidate);
  out << (ok ? "minimum spanning tree\n" : "not a minimum spanning tree\n");
  return ok ? kOk : kCheckFailed;
}

int cmd_image_graph(const Options& o, std::ostream& out) {
  const GrayImage image = read_pgm(slurp(o.graph));
  const PixelGraph pg = image_to_graph(image, o.adjacency);
  emit(o.output, render_text([&](std::ostream& os) {
         text::write_graph(os, pg.graph, pg.weights.raw());
       }),
       out);
  return kOk;
}

int cmd_render(const Options& o, std::ostream& out) {
  const GrayImage image = read_pgm(slurp(o.graph));
  const PixelGraph pg = image_to_graph(image, 4);
  std::istringstream in(slurp(o.second));
  const SaliencyMap s = text::read_saliency(in, pg.graph);
  const auto rendering =
      render_saliency(s.values(), pg.meta, static_cast<std::uint16_t>(o.maxval));
  const bool ascii = o.format == "p2";
  const std::string comment =
      ascii ? "saliency-max " + std::to_string(rendering.max_value) : std::string();
  emit(o.output,
       write_pgm(rendering.image, ascii ? PgmFormat::kAscii : PgmFormat::kBinary, comment),
       out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.graph);
  const auto results = verify_properties(g.graph, interpret_weights(g.graph, g.weights));
  bool failed = false;
  for (const auto& r : results) {
    const char* tag = r.outcome == Outcome::kPass ? "PASS"
                      : r.outcome == Outcome::kFail ? "FAIL" : "SKIP";
    out << tag << ' ' << r.name;
    if (!r.detail.empty()) out << " (" << r.detail << ')';
    out << '\n';
    failed = failed || r.outcome == Outcome::kFail;
  }
  return failed ? kCheckFailed : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi-flat zones hierarchies, saliency maps and minimum spanning trees", "qfz"};
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "Output path ('-' for stdout)")->required();
  };
  auto* qfz_cmd = app.add_subcommand("qfz", "Write the quasi-flat zones dendrogram");
  qfz_cmd->add_option("graph", o.graph, "Graph file")->required();
  add_output(qfz_cmd);

  auto* sal = app.add_subcommand("saliency", "Saliency map of a given dendrogram");
  sal->add_option("graph", o.graph, "Graph file")->required();
  sal->add_option("dendrogram", o.second, "Dendrogram file")->required();
  add_output(sal);

  auto* psi_cmd = app.add_subcommand("psi", "Saliency map of the graph's own QFZ hierarchy");
  psi_cmd->add_option("graph", o.graph, "Graph file")->required();
  psi_cmd->add_flag("--raw", o.raw, "Write saliency as the original raw weights");
  add_output(psi_cmd);

  auto* chk = app.add_subcommand("check-saliency", "Exit 0 iff the weights are a saliency map");
  chk->add_option("graph", o.graph, "Graph file")->required();

  auto* mst_cmd = app.add_subcommand("mst", "Write a minimum spanning tree");
  mst_cmd->add_option("graph", o.graph, "Graph file")->required();
  mst_cmd->add_flag("--graph-format", o.graph_format, "Write tree edges in graph format");
  add_output(mst_cmd);

  auto* chk_mst = app.add_subcommand("check-mst", "Exit 0 iff the edge list is an MST");
  chk_mst->add_option("graph", o.graph, "Graph file")->required();
  chk_mst->add_option("tree", o.second, "Edge-index list")->required();

  auto* img = app.add_subcommand("image-graph", "Pixel adjacency graph of a PGM image");
  img->add_option("image", o.graph, "PGM image")->required();
  img->add_option("--adjacency", o.adjacency, "4 or 8")->check(CLI::IsMember({4, 8}));
  add_output(img);

  auto* render = app.add_subcommand("render", "Interpixel rendering of a saliency map");
  render->add_option("image", o.graph, "PGM image the saliency was computed from")->required();
  render->add_option("saliency", o.second, "Saliency file")->required();
  render->add_option("--format", o.format, "p2 or p5")->check(CLI::IsMember({"p2", "p5"}));
  render->add_option("--maxval", o.maxval, "Output maxval")->check(CLI::Range(1, 65535));
  add_output(render);

  auto* verify = app.add_subcommand("verify", "Run the property battery on one graph");
  verify->add_option("graph", o.graph, "Graph file")->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageOrIo;
  }

  try {
    if (qfz_cmd->parsed()) return cmd_qfz(o, out);
    if (sal->parsed()) return cmd_saliency(o, out);
    if (psi_cmd->parsed()) return cmd_psi(o, out);
    if (chk->parsed()) return cmd_check_saliency(o, out);
    if (mst_cmd->parsed()) return cmd_mst(o, out);
    if (chk_mst->parsed()) return cmd_check_mst(o, out, err);
    if (img->parsed()) return cmd_image_graph(o, out);
    if (render->parsed()) return cmd_render(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const qfz::Error& e) {
    err << "error: " << e.what() << " [" << to_string(e.code()) << "]\n";
    return kUsageOrIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrIo;
  }
  return kUsageOrIo;
}

}  // namespace qfz::cli
