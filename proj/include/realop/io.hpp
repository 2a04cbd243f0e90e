#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "realop/geometry.hpp"
#include "realop/numrange.hpp"
#include "realop/operator.hpp"
#include "realop/spectrum.hpp"

namespace realop {

/// On-disk operator description:
///   {"name": "...", "dim": n, "T": [[[re, im], ...], ...], "A": [[[re, im], ...], ...]}
struct OperatorSpec {
  std::string name;
  RealLinearOperator op;
};

OperatorSpec parse_operator_spec(std::string_view text);
OperatorSpec read_operator_spec(const std::filesystem::path& path);
nlohmann::json to_json(const OperatorSpec& spec);
std::string serialize_operator_spec(const OperatorSpec& spec);

/// Built-in operators: phi1, phi2, ex612, ex613, empty-spectrum, conjugation,
/// circlet, identity. `dim` applies to conjugation and identity (default 2).
OperatorSpec builtin_example(std::string_view name, std::optional<Eigen::Index> dim = std::nullopt);
std::vector<std::string> builtin_example_names();

std::string region_csv(const ConvexRegion& region);
std::string circle_csv(const Circle& circle);
/// Every grid node as re,im,sigma_min, imaginary index outer.
std::string scan_grid_csv(const SpectralScan& scan);
std::string detected_csv(const SpectralScan& scan);

/// Data-to-pixel map for the 800x800 SVG canvas:
///   px = 400 + scale * (re - center_re),  py = 400 - scale * (im - center_im),
/// scale = 800 / (1.2 * max(width, height)) of the data bounding box.
struct SvgViewport {
  static constexpr double kSize = 800.0;
  double center_re = 0.0;
  double center_im = 0.0;
  double scale = 1.0;

  static SvgViewport fit(std::span<const Complex> points);
  Complex to_pixel(Complex z) const;
  Complex from_pixel(Complex p) const;
};

struct SvgScene {
  std::vector<Complex> hull;        // closed path when size >= 2
  std::vector<Circle> circles;      // drawn at 20% opacity
  std::vector<Complex> markers;     // small dots (spectral points)
  std::vector<Complex> bounds;      // extra points the viewport must cover
  std::string title;
};

std::string render_svg(const SvgScene& scene);

void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace realop
