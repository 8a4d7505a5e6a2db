#include "kummer/render.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "kummer/digits.hpp"
#include "kummer/error.hpp"

namespace kummer {

namespace {

constexpr std::uint8_t kWhite = 255;
constexpr std::uint8_t kBlack = 0;

struct Layout {
  std::size_t rows;
  Alignment alignment;

  [[nodiscard]] std::size_t width() const noexcept
  {
    if (rows == 0) return 0;
    return alignment == Alignment::left ? rows : 2 * rows - 1;
  }
  [[nodiscard]] std::size_t column(std::size_t n, std::size_t i) const noexcept
  {
    return alignment == Alignment::left ? i : (rows - 1 - n) + 2 * i;
  }
};

// Row-major grid of gray levels; padding is white.
struct GrayGrid {
  std::size_t width;
  std::size_t height;
  std::vector<std::uint8_t> levels;
};

template <typename LevelOf>
GrayGrid layout_levels(std::size_t rows, Alignment alignment, LevelOf level_of)
{
  const Layout layout{rows, alignment};
  GrayGrid grid{layout.width(), rows, std::vector<std::uint8_t>(layout.width() * rows, kWhite)};
  for (std::size_t n = 0; n < rows; ++n) {
    for (std::size_t i = 0; i <= n; ++i) grid.levels[n * grid.width + layout.column(n, i)] = level_of(n, i);
  }
  return grid;
}

std::string emit_pbm(const GrayGrid& grid, unsigned scale, bool binary)
{
  const std::size_t w = grid.width * scale;
  const std::size_t h = grid.height * scale;
  std::string out = (binary ? "P4\n" : "P1\n") + std::to_string(w) + " " + std::to_string(h) + "\n";
  for (std::size_t y = 0; y < h; ++y) {
    const std::uint8_t* src = &grid.levels[(y / scale) * grid.width];
    if (binary) {
      std::string packed((w + 7) / 8, '\0');
      for (std::size_t x = 0; x < w; ++x) {
        if (src[x / scale] == kBlack) packed[x / 8] = static_cast<char>(packed[x / 8] | (0x80 >> (x % 8)));
      }
      out += packed;
      continue;
    }
    for (std::size_t x = 0; x < w; ++x) {
      if (x != 0) out.push_back(' ');
      out.push_back(src[x / scale] == kBlack ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

std::string emit_pnm_gray(const GrayGrid& grid, unsigned scale, bool rgb)
{
  const std::size_t w = grid.width * scale;
  const std::size_t h = grid.height * scale;
  std::string out = (rgb ? "P3\n" : "P2\n") + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
  for (std::size_t y = 0; y < h; ++y) {
    const std::uint8_t* src = &grid.levels[(y / scale) * grid.width];
    for (std::size_t x = 0; x < w; ++x) {
      const std::string level = std::to_string(src[x / scale]);
      const int channels = rgb ? 3 : 1;
      for (int c = 0; c < channels; ++c) {
        if (x != 0 || c != 0) out.push_back(' ');
        out += level;
      }
    }
    out.push_back('\n');
  }
  return out;
}

std::string emit_image(const GrayGrid& grid, const RenderSpec& spec)
{
  switch (spec.format) {
  case ImageFormat::pbm:
    return emit_pbm(grid, spec.scale, spec.binary_pbm);
  case ImageFormat::pgm:
    return emit_pnm_gray(grid, spec.scale, false);
  case ImageFormat::ppm:
    return emit_pnm_gray(grid, spec.scale, true);
  default:
    throw InvalidArgument("format " + std::string(format_name(spec.format)) + " is not an image format");
  }
}

// Character grid with ' ' padding; trailing blanks trimmed per line.
template <typename CharOf>
std::string emit_ascii(std::size_t rows, Alignment alignment, CharOf char_of)
{
  const Layout layout{rows, alignment};
  std::string out;
  for (std::size_t n = 0; n < rows; ++n) {
    std::string line(layout.width(), ' ');
    for (std::size_t i = 0; i <= n; ++i) line[layout.column(n, i)] = char_of(n, i);
    line.erase(line.find_last_not_of(' ') + 1);
    out += line;
    out.push_back('\n');
  }
  return out;
}

nlohmann::json bitmap_cells(const TriangleBitmap& cells)
{
  auto rows = nlohmann::json::array();
  for (std::size_t n = 0; n < cells.rows(); ++n) {
    auto row = nlohmann::json::array();
    for (std::uint8_t c : cells.row(n)) row.push_back(c != 0 ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string_view alignment_name(Alignment a) noexcept
{
  return a == Alignment::left ? "left" : "centered";
}

std::string render_bitmap(const TriangleBitmap& cells, const RenderSpec& spec, nlohmann::json header)
{
  validate(spec);
  switch (spec.format) {
  case ImageFormat::ascii:
    return emit_ascii(cells.rows(), spec.alignment, [&](std::size_t n, std::size_t i) { return cells.at(n, i) ? '#' : '.'; });
  case ImageFormat::json:
    header["rows"] = cells.rows();
    header["alignment"] = alignment_name(spec.alignment);
    header["cells"] = bitmap_cells(cells);
    return header.dump() + "\n";
  default:
    return emit_image(
      layout_levels(cells.rows(), spec.alignment,
                    [&](std::size_t n, std::size_t i) { return cells.at(n, i) ? kBlack : kWhite; }),
      spec);
  }
}

} // namespace

ImageFormat parse_image_format(std::string_view name)
{
  if (name == "ascii") return ImageFormat::ascii;
  if (name == "pbm") return ImageFormat::pbm;
  if (name == "pgm") return ImageFormat::pgm;
  if (name == "ppm") return ImageFormat::ppm;
  if (name == "json") return ImageFormat::json;
  throw InvalidArgument("unknown format '" + std::string(name) + "'");
}

std::string_view format_name(ImageFormat format) noexcept
{
  switch (format) {
  case ImageFormat::ascii:
    return "ascii";
  case ImageFormat::pbm:
    return "pbm";
  case ImageFormat::pgm:
    return "pgm";
  case ImageFormat::ppm:
    return "ppm";
  case ImageFormat::json:
    return "json";
  }
  return "unknown";
}

void validate(const RenderSpec& spec)
{
  if (spec.scale < 1) throw InvalidArgument("scale must be at least 1");
}

std::uint8_t residue_gray_level(natural residue, natural modulus) noexcept
{
  const auto scaled = static_cast<wide_natural>(255) * (modulus - residue) / modulus;
  return static_cast<std::uint8_t>(scaled);
}

std::string render_mask(const DivisibilityMask& mask, const RenderSpec& spec)
{
  return render_bitmap(mask.cells, spec, {{"modulus", mask.modulus}, {"method", method_name(mask.method)}});
}

std::string render_residues(const std::vector<TriangleRow>& rows, const RenderSpec& spec)
{
  validate(spec);
  if (rows.empty()) throw InvalidArgument("no rows to render");
  const natural m = rows.front().modulus();
  for (std::size_t n = 0; n < rows.size(); ++n) {
    if (rows[n].modulus() != m) throw InvalidArgument("rows do not share a modulus");
    if (rows[n].size() != n + 1) throw InvalidArgument("row " + std::to_string(n) + " has the wrong length");
  }

  switch (spec.format) {
  case ImageFormat::json: {
    auto out = nlohmann::json::array();
    for (const TriangleRow& row : rows) out.push_back(row.values());
    return nlohmann::json{{"modulus", m}, {"rows", std::move(out)}}.dump() + "\n";
  }
  case ImageFormat::ascii: {
    if (m <= 36) {
      constexpr std::string_view chars = "0123456789abcdefghijklmnopqrstuvwxyz";
      return emit_ascii(rows.size(), spec.alignment, [&](std::size_t n, std::size_t i) {
        const natural r = rows[n][i];
        return r == 0 ? '.' : chars[r];
      });
    }
    std::string out;
    for (const TriangleRow& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i != 0) out.push_back(' ');
        out += row[i] == 0 ? std::string(".") : std::to_string(row[i]);
      }
      out.push_back('\n');
    }
    return out;
  }
  case ImageFormat::pbm:
    return emit_image(layout_levels(rows.size(), spec.alignment,
                                    [&](std::size_t n, std::size_t i) { return rows[n][i] != 0 ? kBlack : kWhite; }),
                      spec);
  default:
    return emit_image(layout_levels(rows.size(), spec.alignment,
                                    [&](std::size_t n, std::size_t i) { return residue_gray_level(rows[n][i], m); }),
                      spec);
  }
}

StripeLayers parse_stripe_layers(std::string_view text)
{
  StripeLayers layers;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    if (item == "row" || item == "rows") {
      layers.row = true;
    } else if (item == "i") {
      layers.i = true;
    } else if (item == "j") {
      layers.j = true;
    } else if (item == "intersection") {
      layers = StripeLayers::intersection();
    } else if (!item.empty()) {
      throw InvalidArgument("unknown stripe layer '" + std::string(item) + "' (expected row, i, j, intersection)");
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return layers;
}

TriangleBitmap stripe_survivors(natural place, natural rows, StripeLayers layers)
{
  if (place == 0) {
    throw InvalidArgument("place 0 is never special: i and j cannot both have bit 0 there while n = i + j has bit 1");
  }
  if (rows < 1) throw InvalidArgument("row count must be at least 1");
  if (rows > (natural{1} << 31)) throw InvalidArgument("row count " + std::to_string(rows) + " is too large");
  TriangleBitmap cells(static_cast<std::size_t>(rows));
  if (layers.empty()) return cells;
  const auto k = static_cast<std::size_t>(place);
  for (std::size_t n = 0; n < cells.rows(); ++n) {
    if (layers.row && digit_at(n, 2, k) == 0) continue;
    for (std::size_t i = 0; i <= n; ++i) {
      const bool shaded = (layers.i && digit_at(i, 2, k) == 1) || (layers.j && digit_at(n - i, 2, k) == 1);
      cells.set(n, i, !shaded);
    }
  }
  return cells;
}

TriangleBitmap special_cell_union(natural rows)
{
  if (rows < 1) throw InvalidArgument("row count must be at least 1");
  TriangleBitmap all(static_cast<std::size_t>(rows));
  const auto places = static_cast<natural>(std::bit_width(rows - 1)); // ceil(log2 R)
  for (natural place = 1; place <= places; ++place) {
    const TriangleBitmap layer = stripe_survivors(place, rows, StripeLayers::intersection());
    for (std::size_t n = 0; n < all.rows(); ++n) {
      for (std::size_t i = 0; i <= n; ++i) {
        if (layer.at(n, i)) all.set(n, i, true);
      }
    }
  }
  return all;
}

std::string render_stripes(natural place, natural rows, StripeLayers layers, const RenderSpec& spec)
{
  const TriangleBitmap cells = stripe_survivors(place, rows, layers);
  return render_bitmap(cells, spec,
                       {{"place", place}, {"layers", {{"row", layers.row}, {"i", layers.i}, {"j", layers.j}}}});
}

void write_output(std::string_view bytes, const RenderSpec& spec, std::ostream& fallback)
{
  if (!spec.destination) {
    fallback.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    return;
  }
  const auto& path = *spec.destination;
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
  file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  file.flush();
  if (!file) throw IoError("failed writing '" + path.string() + "'");
}

} // namespace kummer
