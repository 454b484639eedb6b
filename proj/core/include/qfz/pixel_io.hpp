#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qfz/graph.hpp"
#include "qfz/saliency.hpp"

namespace qfz {

struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::uint16_t maxval = 255;
  std::vector<std::uint16_t> pixels;  // row-major

  std::uint16_t at(std::size_t row, std::size_t col) const { return pixels[row * width + col]; }
  friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

enum class PgmFormat { kAscii /* P2 */, kBinary /* P5 */ };

// P2 or P5. Comments and any whitespace between header fields are accepted.
// Binary samples are one byte when maxval < 256, else two bytes big-endian.
GrayImage read_pgm(std::string_view bytes);

// "P2\n<w> <h>\n<maxval>\n" then one line per row for P2, or the raw samples
// for P5. `comment`, when non-empty, is written as "# <comment>" right after
// the magic line.
std::string write_pgm(const GrayImage& image, PgmFormat format,
                      std::string_view comment = {});

struct PixelGraphMeta {
  std::size_t width = 0;
  std::size_t height = 0;
  int adjacency = 4;
  // Set for a 1x1 image: the graph is a single vertex with no edges.
  bool no_edges = false;
};

struct PixelGraph {
  Graph graph;
  WeightMap weights;
  PixelGraphMeta meta;
};

// Vertex id = row * width + col. Edge order: all horizontal edges in raster
// order, then all vertical ones, then (8-adjacency) down-right diagonals and
// down-left diagonals. Raw weight = |I(x) - I(y)|.
PixelGraph image_to_graph(const GrayImage& image, int adjacency);

struct SaliencyRendering {
  GrayImage image;
  // Largest saliency value, i.e. what maxval stands for after scaling.
  Level max_value = 0;
};

// Interpixel image of size (2w - 1) x (2h - 1). Pixel sites are 0, the site
// between two adjacent pixels holds their edge's saliency, and a site between
// four pixels holds the max of its four neighbours. Values are then scaled
// affinely from [0, max_value] to [0, maxval]. 4-adjacency only.
SaliencyRendering render_saliency(std::span<const Level> saliency,
                                  const PixelGraphMeta& meta,
                                  std::uint16_t maxval = 255);

}  // namespace qfz
