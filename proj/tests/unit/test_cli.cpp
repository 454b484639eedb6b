#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "qfz/pixel_io.hpp"
#include "qfz/saliency.hpp"
#include "support/random_graphs.hpp"

using namespace qfz;
namespace fs = std::filesystem;

namespace {

struct Workspace {
  fs::path dir;
  Workspace() {
    dir = fs::temp_directory_path() / ("qfz_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
  }
  ~Workspace() { fs::remove_all(dir); }

  std::string write(const std::string& name, const std::string& content) const {
    std::ofstream(dir / name, std::ios::binary) << content;
    return (dir / name).string();
  }
  std::string read(const std::string& name) const {
    std::ifstream in(dir / name, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kPath = "3 2\n0 1 0\n1 2 1\n";
const char* kTriangle = "3 3\n0 1 0\n1 2 1\n0 2 2\n";
const char* kCycle = "4 4\n0 1 0\n1 2 2\n2 3 0\n3 0 3\n";

}  // namespace

TEST_CASE("psi and saliency verbs") {
  Workspace ws;
  const auto g = ws.write("path.txt", kPath);
  REQUIRE(run({"psi", g, "-o", ws.path("s.txt")}).code == 0);
  CHECK(ws.read("s.txt") == "3 2\n0 1 0\n1 2 1\n");

  const auto c = ws.write("cycle.txt", kCycle);
  REQUIRE(run({"qfz", c, "-o", ws.path("d.txt")}).code == 0);
  CHECK(ws.read("d.txt") == "4 3\n4 1 0 1\n5 1 2 3\n6 3 4 5\n");
  REQUIRE(run({"saliency", c, ws.path("d.txt"), "-o", ws.path("cs.txt")}).code == 0);
  CHECK(ws.read("cs.txt") == "4 4\n0 1 0\n1 2 2\n2 3 0\n3 0 2\n");
  // Feeding the saliency map back in is a fixed point.
  REQUIRE(run({"psi", ws.path("cs.txt"), "-o", ws.path("cs2.txt")}).code == 0);
  CHECK(ws.read("cs2.txt") == ws.read("cs.txt"));

  const auto raw = ws.write("raw.txt", "3 3\n0 1 0.5\n1 2 4\n0 2 9\n");
  const auto r = run({"psi", raw, "--raw", "-o", "-"});
  CHECK(r.out == "3 3\n0 1 0.5\n1 2 4\n0 2 4\n");
}

TEST_CASE("check verbs use exit codes") {
  Workspace ws;
  CHECK(run({"check-saliency", ws.write("t.txt", kTriangle)}).code == 1);
  CHECK(run({"check-saliency", ws.write("p.txt", kPath)}).code == 0);

  const auto c = ws.write("cycle.txt", kCycle);
  REQUIRE(run({"mst", c, "-o", ws.path("tree.txt")}).code == 0);
  CHECK(ws.read("tree.txt") == "0\n1\n2\n");
  CHECK(run({"check-mst", c, ws.path("tree.txt")}).code == 0);
  CHECK(run({"check-mst", c, ws.write("heavy.txt", "0\n2\n3\n")}).code == 1);
  CHECK(run({"check-mst", c, ws.write("split.txt", "0\n")}).code == 1);
  CHECK(run({"check-mst", c, ws.write("junk.txt", "9\n")}).code == 2);

  REQUIRE(run({"mst", c, "--graph-format", "-o", ws.path("tree_g.txt")}).code == 0);
  CHECK(ws.read("tree_g.txt") == "4 3\n0 1 0\n1 2 2\n2 3 0\n");
}

TEST_CASE("errors exit with 2") {
  Workspace ws;
  CHECK(run({"psi", ws.path("missing.txt"), "-o", ws.path("x")}).code == 2);
  CHECK(run({"psi", ws.write("bad.txt", "3 1\n0 1 1\n"), "-o", ws.path("x")}).code == 2);
  CHECK(run({"psi", ws.write("ok.txt", kPath)}).code == 2);  // missing -o
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  const auto e = run({"check-saliency", ws.path("missing.txt")});
  CHECK(e.code == 2);
  CHECK(e.err.find("error:") != std::string::npos);
}

TEST_CASE("verify prints one line per property") {
  Workspace ws;
  for (const char* graph : {kPath, kTriangle, kCycle}) {
    const auto r = run({"verify", ws.write("g.txt", graph)});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS bijection") != std::string::npos);
    CHECK(r.out.find("PASS minimality") != std::string::npos);
    CHECK(r.out.find("PASS mst: QFZ checker agrees with enumeration") != std::string::npos);
  }
}

TEST_CASE("image pipeline matches the in-process composition") {
  Workspace ws;
  testing::Rng rng(91);
  const GrayImage img = testing::random_image(rng, 9, 7, 15);
  const auto pgm = ws.write("in.pgm", write_pgm(img, PgmFormat::kBinary));
  REQUIRE(run({"image-graph", pgm, "--adjacency", "4", "-o", ws.path("g.txt")}).code == 0);
  REQUIRE(run({"psi", ws.path("g.txt"), "-o", ws.path("s.txt")}).code == 0);
  REQUIRE(run({"render", pgm, ws.path("s.txt"), "--format", "p5", "-o", ws.path("out.pgm")}).code == 0);

  const PixelGraph pg = image_to_graph(img, 4);
  const WeightMap w = interpret_weights(pg.graph, pg.weights.raw());
  const SaliencyMap s = psi(pg.graph, w);
  const auto expected = write_pgm(render_saliency(s.values(), pg.meta).image, PgmFormat::kBinary);
  CHECK(ws.read("out.pgm") == expected);

  REQUIRE(run({"render", pgm, ws.path("s.txt"), "-o", ws.path("out2.pgm")}).code == 0);
  CHECK(ws.read("out2.pgm").rfind("P2\n# saliency-max ", 0) == 0);

  REQUIRE(run({"image-graph", pgm, "--adjacency", "8", "-o", ws.path("g8.txt")}).code == 0);
  CHECK(run({"image-graph", pgm, "--adjacency", "6", "-o", ws.path("g6.txt")}).code == 2);
}
