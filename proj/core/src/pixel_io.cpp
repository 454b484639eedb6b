#include "qfz/pixel_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace qfz {

namespace {

[[noreturn]] void bad_pgm(const std::string& what) {
  throw Error(ErrorCode::kMalformedInput, "pgm: " + what);
}

class PnmScanner {
 public:
  explicit PnmScanner(std::string_view bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::uint64_t number(const char* field) {
    skip_space_and_comments();
    std::uint64_t value = 0;
    const char* begin = bytes_.data() + pos_;
    const char* end = bytes_.data() + bytes_.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) bad_pgm(std::string("expected ") + field);
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  std::size_t& pos() { return pos_; }
  std::string_view bytes() const { return bytes_; }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

GrayImage read_pgm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P') bad_pgm("missing magic number");
  if (bytes[1] != '2' && bytes[1] != '5') {
    throw Error(ErrorCode::kUnsupportedFormat,
                std::string("pgm: unsupported magic P") + bytes[1]);
  }
  const bool binary = bytes[1] == '5';
  PnmScanner scan(bytes);
  scan.pos() = 2;
  if (scan.pos() < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[2])) &&
      bytes[2] != '#') {
    bad_pgm("magic number not followed by whitespace");
  }
  GrayImage image;
  const auto width = scan.number("width");
  const auto height = scan.number("height");
  const auto maxval = scan.number("maxval");
  if (width == 0 || height == 0) bad_pgm("zero image dimension");
  if (maxval == 0 || maxval > 65535) bad_pgm("maxval must be in 1..65535");
  if (width * height > (std::uint64_t{1} << 32)) bad_pgm("image too large");
  image.width = width;
  image.height = height;
  image.maxval = static_cast<std::uint16_t>(maxval);
  image.pixels.resize(width * height);

  if (!binary) {
    for (auto& p : image.pixels) {
      const auto v = scan.number("sample");
      if (v > maxval) bad_pgm("sample exceeds maxval");
      p = static_cast<std::uint16_t>(v);
    }
    return image;
  }
  // Exactly one whitespace byte separates maxval from the raster.
  std::size_t& pos = scan.pos();
  if (pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
    bad_pgm("missing separator before raster");
  }
  ++pos;
  const std::size_t sample_bytes = maxval < 256 ? 1 : 2;
  if (bytes.size() - pos < image.pixels.size() * sample_bytes) bad_pgm("truncated raster");
  for (std::size_t i = 0; i < image.pixels.size(); ++i) {
    std::uint32_t v = static_cast<unsigned char>(bytes[pos++]);
    if (sample_bytes == 2) v = (v << 8) | static_cast<unsigned char>(bytes[pos++]);
    if (v > maxval) bad_pgm("sample exceeds maxval");
    image.pixels[i] = static_cast<std::uint16_t>(v);
  }
  return image;
}

std::string write_pgm(const GrayImage& image, PgmFormat format, std::string_view comment) {
  std::string out = format == PgmFormat::kAscii ? "P2\n" : "P5\n";
  if (!comment.empty()) {
    out += "# ";
    out += comment;
    out += '\n';
  }
  out += std::to_string(image.width) + " " + std::to_string(image.height) + "\n" +
         std::to_string(image.maxval) + "\n";
  if (format == PgmFormat::kAscii) {
    for (std::size_t r = 0; r < image.height; ++r) {
      for (std::size_t c = 0; c < image.width; ++c) {
        if (c > 0) out += ' ';
        out += std::to_string(image.at(r, c));
      }
      out += '\n';
    }
    return out;
  }
  const bool wide = image.maxval >= 256;
  out.reserve(out.size() + image.pixels.size() * (wide ? 2 : 1));
  for (auto p : image.pixels) {
    if (wide) out += static_cast<char>(p >> 8);
    out += static_cast<char>(p & 0xff);
  }
  return out;
}

PixelGraph image_to_graph(const GrayImage& image, int adjacency) {
  if (adjacency != 4 && adjacency != 8) {
    throw Error(ErrorCode::kPrecondition, "adjacency must be 4 or 8");
  }
  const std::size_t w = image.width;
  const std::size_t h = image.height;
  if (w == 0 || h == 0 || image.pixels.size() != w * h) {
    throw Error(ErrorCode::kPrecondition, "image is empty or inconsistent");
  }
  std::vector<Edge> edges;
  edges.reserve(adjacency == 4 ? 2 * w * h - w - h : 4 * w * h - 3 * (w + h) + 2);
  auto id = [w](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * w + c); };
  for (std::size_t r = 0; r < h; ++r)
    for (std::size_t c = 0; c + 1 < w; ++c) edges.push_back({id(r, c), id(r, c + 1)});
  for (std::size_t r = 0; r + 1 < h; ++r)
    for (std::size_t c = 0; c < w; ++c) edges.push_back({id(r, c), id(r + 1, c)});
  if (adjacency == 8) {
    for (std::size_t r = 0; r + 1 < h; ++r)
      for (std::size_t c = 0; c + 1 < w; ++c) edges.push_back({id(r, c), id(r + 1, c + 1)});
    for (std::size_t r = 0; r + 1 < h; ++r)
      for (std::size_t c = 1; c < w; ++c) edges.push_back({id(r, c), id(r + 1, c - 1)});
  }
  std::vector<double> raw(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    raw[e] = std::abs(static_cast<int>(image.pixels[edges[e].x]) -
                      static_cast<int>(image.pixels[edges[e].y]));
  }
  Graph graph = Graph::validated(w * h, std::move(edges));
  WeightMap weights = normalize_weights(graph, raw);
  PixelGraphMeta meta{w, h, adjacency, graph.edge_count() == 0};
  return {std::move(graph), std::move(weights), meta};
}

SaliencyRendering render_saliency(std::span<const Level> saliency,
                                  const PixelGraphMeta& meta, std::uint16_t maxval) {
  if (meta.adjacency != 4) {
    throw Error(ErrorCode::kPrecondition, "interpixel rendering needs 4-adjacency");
  }
  const std::size_t w = meta.width;
  const std::size_t h = meta.height;
  const std::size_t horizontal = (w - 1) * h;
  if (saliency.size() != horizontal + w * (h - 1)) {
    throw Error(ErrorCode::kSizeMismatch, "saliency does not match the pixel grid");
  }
  if (maxval == 0) throw Error(ErrorCode::kPrecondition, "maxval must be positive");
  const std::size_t W = 2 * w - 1;
  const std::size_t H = 2 * h - 1;
  std::vector<Level> site(W * H, 0);
  for (std::size_t r = 0; r < h; ++r)
    for (std::size_t c = 0; c + 1 < w; ++c) site[2 * r * W + 2 * c + 1] = saliency[r * (w - 1) + c];
  for (std::size_t r = 0; r + 1 < h; ++r)
    for (std::size_t c = 0; c < w; ++c)
      site[(2 * r + 1) * W + 2 * c] = saliency[horizontal + r * w + c];
  for (std::size_t r = 1; r < H; r += 2) {
    for (std::size_t c = 1; c < W; c += 2) {
      site[r * W + c] = std::max({site[(r - 1) * W + c], site[(r + 1) * W + c],
                                  site[r * W + c - 1], site[r * W + c + 1]});
    }
  }
  SaliencyRendering out;
  out.max_value = site.empty() ? 0 : *std::max_element(site.begin(), site.end());
  out.image.width = W;
  out.image.height = H;
  out.image.maxval = maxval;
  out.image.pixels.resize(site.size());
  const std::uint64_t top = out.max_value;
  for (std::size_t i = 0; i < site.size(); ++i) {
    out.image.pixels[i] = top == 0 ? 0
        : static_cast<std::uint16_t>((std::uint64_t{site[i]} * maxval * 2 + top) / (2 * top));
  }
  return out;
}

}  // namespace qfz
