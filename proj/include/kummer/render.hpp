#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kummer/triangle.hpp"

namespace kummer {

enum class ImageFormat { ascii, pbm, pgm, ppm, json };
enum class Alignment { left, centered };

[[nodiscard]] ImageFormat parse_image_format(std::string_view name);
[[nodiscard]] std::string_view format_name(ImageFormat format) noexcept;

/// How a triangle is laid out and serialized.
///
/// Left alignment puts cell (n, i) at column i of an R-wide grid. Centered
/// alignment puts it at column (R-1-n) + 2i of a (2R-1)-wide grid. Cells
/// outside the triangle are padding, drawn white in the bitmap formats.
struct RenderSpec {
  ImageFormat format = ImageFormat::pbm;
  Alignment alignment = Alignment::left;
  unsigned scale = 1;       ///< k replicates each cell into a k x k block (image formats only)
  bool binary_pbm = false;  ///< P4 instead of P1, same cell semantics
  std::optional<std::filesystem::path> destination;
};

/// Throws InvalidArgument when scale < 1.
void validate(const RenderSpec& spec);

/// Serializes a mask: 1 (black) = nonzero, 0 (white) = divisible or padding.
[[nodiscard]] std::string render_mask(const DivisibilityMask& mask, const RenderSpec& spec);

/// Serializes residue rows that share a modulus. Gray level of residue r mod m is
/// floor(255 (m - r) / m), so residue 0 is 255 (white).
[[nodiscard]] std::string render_residues(const std::vector<TriangleRow>& rows, const RenderSpec& spec);

[[nodiscard]] std::uint8_t residue_gray_level(natural residue, natural modulus) noexcept;

/// Binary stripe layers that eliminate cells from being special at a place:
/// rows with bit 0 in n, and the diagonals with bit 1 in i or in j = n - i.
struct StripeLayers {
  bool row = false;
  bool i = false;
  bool j = false;

  [[nodiscard]] bool empty() const noexcept { return !row && !i && !j; }
  [[nodiscard]] static StripeLayers intersection() noexcept { return {true, true, true}; }
};

/// Parses a comma list of row, i, j, intersection. Empty text gives no layers.
[[nodiscard]] StripeLayers parse_stripe_layers(std::string_view text);

/// 1 where a cell escapes every selected layer at `place`. With all layers
/// selected the survivors are exactly the cells special at `place`; with no
/// layers selected the result is blank. Rejects place 0, which no cell can
/// occupy specially.
[[nodiscard]] TriangleBitmap stripe_survivors(natural place, natural rows, StripeLayers layers);

/// Union of the fully-intersected survivors over places 1..ceil(log2 R).
[[nodiscard]] TriangleBitmap special_cell_union(natural rows);

[[nodiscard]] std::string render_stripes(natural place, natural rows, StripeLayers layers, const RenderSpec& spec);

/// Writes bytes to spec.destination, or to `fallback` when it has none.
/// Failures raise IoError naming the path.
void write_output(std::string_view bytes, const RenderSpec& spec, std::ostream& fallback);

} // namespace kummer
