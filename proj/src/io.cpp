#include "realop/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "realop/error.hpp"

namespace realop {
namespace {

using nlohmann::json;

std::string fmt_double(double v, const char* pattern = "%.17g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

ComplexMatrix parse_matrix(const json& doc, const char* field, std::size_t dim) {
  if (!doc.contains(field)) throw Error(ErrorCode::parse, std::string("missing field \"") + field + "\"");
  const json& rows = doc.at(field);
  if (!rows.is_array() || rows.size() != dim) {
    throw Error(ErrorCode::parse, std::string(field) + ": expected " + std::to_string(dim) + " rows");
  }
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const json& row = rows[i];
    const std::string where = std::string(field) + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != dim) {
      throw Error(ErrorCode::parse, where + ": expected " + std::to_string(dim) + " entries");
    }
    for (std::size_t j = 0; j < dim; ++j) {
      const json& entry = row[j];
      const std::string at = where + "[" + std::to_string(j) + "]";
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
        throw Error(ErrorCode::parse, at + ": expected a [re, im] pair of numbers");
      }
      const double re = entry[0].get<double>();
      const double im = entry[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) {
        throw Error(ErrorCode::parse, at + ": entries must be finite");
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = {re, im};
    }
  }
  return m;
}

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

ComplexMatrix diag2(Complex a, Complex b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

OperatorSpec parse_operator_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse, line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::parse, "top level must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1) {
    throw Error(ErrorCode::parse, "dim: expected a positive integer");
  }
  const auto dim = doc["dim"].get<std::size_t>();
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw Error(ErrorCode::parse, "name: expected a string");
    name = doc["name"].get<std::string>();
  }
  ComplexMatrix t = parse_matrix(doc, "T", dim);
  ComplexMatrix a = parse_matrix(doc, "A", dim);
  return {std::move(name), RealLinearOperator(std::move(t), std::move(a))};
}

OperatorSpec read_operator_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_operator_spec(buf.str());
}

nlohmann::json to_json(const OperatorSpec& spec) {
  json doc;
  if (!spec.name.empty()) doc["name"] = spec.name;
  doc["dim"] = spec.op.dim();
  doc["T"] = matrix_json(spec.op.linear());
  doc["A"] = matrix_json(spec.op.antilinear());
  return doc;
}

std::string serialize_operator_spec(const OperatorSpec& spec) { return to_json(spec).dump(2) + "\n"; }

OperatorSpec builtin_example(std::string_view name, std::optional<Eigen::Index> dim) {
  const Complex i(0.0, 1.0);
  if (name == "phi1") {
    // (x1, x2) -> (x1 + conj x1, -x2 + conj x1)
    ComplexMatrix a = ComplexMatrix::Zero(2, 2);
    a(0, 0) = 1.0;
    a(1, 0) = 1.0;
    return {"phi1", RealLinearOperator(diag2(1.0, -1.0), a)};
  }
  if (name == "phi2") {
    // (x1, x2) -> (x2, -x1 + x2 + conj x2)
    ComplexMatrix t(2, 2);
    t << 0.0, 1.0, -1.0, 1.0;
    return {"phi2", RealLinearOperator(t, diag2(0.0, 1.0))};
  }
  if (name == "ex612") {
    // a e1 + b e2 -> a e1 + conj(b)/2 e2
    return {"ex612", RealLinearOperator(diag2(1.0, 0.0), diag2(0.0, 0.5))};
  }
  if (name == "ex613") {
    // diagonal circlets with l1 = 0, e1 = 1, l2 = 3, e2 = 1
    return {"ex613", RealLinearOperator(diag2(0.0, 3.0), diag2(1.0, 1.0))};
  }
  if (name == "empty-spectrum") {
    // (z1, z2) -> (conj z2, -conj z1)
    ComplexMatrix a(2, 2);
    a << 0.0, 1.0, -1.0, 0.0;
    return {"empty-spectrum", RealLinearOperator::antilinear_only(a)};
  }
  if (name == "conjugation") {
    return {"conjugation", RealLinearOperator::conjugation(dim.value_or(2))};
  }
  if (name == "identity") {
    return {"identity", RealLinearOperator::identity(dim.value_or(2))};
  }
  if (name == "circlet") {
    ComplexMatrix t(1, 1);
    ComplexMatrix a(1, 1);
    t(0, 0) = 1.0;
    a(0, 0) = 2.0 * i;
    return {"circlet", RealLinearOperator(t, a)};
  }
  throw Error(ErrorCode::parse, "unknown example \"" + std::string(name) + "\"");
}

std::vector<std::string> builtin_example_names() {
  return {"phi1", "phi2", "ex612", "ex613", "empty-spectrum", "conjugation", "circlet", "identity"};
}

std::string region_csv(const ConvexRegion& region) {
  std::string out = "re,im\n";
  for (const auto& v : region.vertices()) out += fmt_double(v.real()) + "," + fmt_double(v.imag()) + "\n";
  return out;
}

std::string circle_csv(const Circle& circle) {
  return "center_re,center_im,radius\n" + fmt_double(circle.center.real()) + "," +
         fmt_double(circle.center.imag()) + "," + fmt_double(circle.radius) + "\n";
}

std::string scan_grid_csv(const SpectralScan& scan) {
  std::string out = "re,im,sigma_min\n";
  out.reserve(out.size() + scan.sigma_min_grid.size() * 64);
  for (std::size_t j = 0; j < scan.n_im; ++j) {
    for (std::size_t i = 0; i < scan.n_re; ++i) {
      const Complex z = scan.node(i, j);
      out += fmt_double(z.real()) + "," + fmt_double(z.imag()) + "," + fmt_double(scan.value(i, j)) + "\n";
    }
  }
  return out;
}

std::string detected_csv(const SpectralScan& scan) {
  std::string out = "re,im,sigma_min\n";
  for (const auto& p : scan.detected) {
    out += fmt_double(p.lambda.real()) + "," + fmt_double(p.lambda.imag()) + "," +
           fmt_double(p.sigma_min) + "\n";
  }
  return out;
}

SvgViewport SvgViewport::fit(std::span<const Complex> points) {
  SvgViewport vp;
  if (points.empty()) return vp;
  double re_lo = points[0].real(), re_hi = re_lo;
  double im_lo = points[0].imag(), im_hi = im_lo;
  for (const auto& p : points) {
    re_lo = std::min(re_lo, p.real());
    re_hi = std::max(re_hi, p.real());
    im_lo = std::min(im_lo, p.imag());
    im_hi = std::max(im_hi, p.imag());
  }
  double span = std::max(re_hi - re_lo, im_hi - im_lo);
  if (!(span > 0.0)) span = 1.0;
  vp.center_re = 0.5 * (re_lo + re_hi);
  vp.center_im = 0.5 * (im_lo + im_hi);
  vp.scale = kSize / (1.2 * span);
  return vp;
}

Complex SvgViewport::to_pixel(Complex z) const {
  return {0.5 * kSize + scale * (z.real() - center_re), 0.5 * kSize - scale * (z.imag() - center_im)};
}

Complex SvgViewport::from_pixel(Complex p) const {
  return {center_re + (p.real() - 0.5 * kSize) / scale, center_im - (p.imag() - 0.5 * kSize) / scale};
}

std::string render_svg(const SvgScene& scene) {
  std::vector<Complex> extent = scene.hull;
  for (const auto& c : scene.circles) {
    extent.push_back(c.center + Complex(c.radius, c.radius));
    extent.push_back(c.center - Complex(c.radius, c.radius));
  }
  extent.insert(extent.end(), scene.markers.begin(), scene.markers.end());
  extent.insert(extent.end(), scene.bounds.begin(), scene.bounds.end());
  const SvgViewport vp = SvgViewport::fit(extent);
  const auto px = [](double v) { return fmt_double(v, "%.6f"); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n";
  out << "  <!-- px = 400 + " << fmt_double(vp.scale) << " * (re - " << fmt_double(vp.center_re)
      << "), py = 400 - " << fmt_double(vp.scale) << " * (im - " << fmt_double(vp.center_im)
      << ") -->\n";
  if (!scene.title.empty()) out << "  <title>" << xml_escape(scene.title) << "</title>\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";

  const Complex origin = vp.to_pixel({0.0, 0.0});
  out << "  <g id=\"axes\" stroke=\"#888888\" stroke-width=\"1\">\n";
  if (origin.imag() >= 0.0 && origin.imag() <= SvgViewport::kSize) {
    out << "    <line x1=\"0\" y1=\"" << px(origin.imag()) << "\" x2=\"800\" y2=\"" << px(origin.imag())
        << "\"/>\n";
  }
  if (origin.real() >= 0.0 && origin.real() <= SvgViewport::kSize) {
    out << "    <line x1=\"" << px(origin.real()) << "\" y1=\"0\" x2=\"" << px(origin.real())
        << "\" y2=\"800\"/>\n";
  }
  out << "  </g>\n";

  if (!scene.circles.empty()) {
    out << "  <g id=\"disks\" fill=\"none\" stroke=\"#1f77b4\" stroke-opacity=\"0.2\">\n";
    for (const auto& c : scene.circles) {
      const Complex p = vp.to_pixel(c.center);
      out << "    <circle cx=\"" << px(p.real()) << "\" cy=\"" << px(p.imag()) << "\" r=\""
          << px(c.radius * vp.scale) << "\"/>\n";
    }
    out << "  </g>\n";
  }

  if (!scene.hull.empty()) {
    out << "  <path id=\"hull\" fill=\"#1f77b4\" fill-opacity=\"0.35\" stroke=\"#000000\" "
           "stroke-width=\"1.5\" d=\"";
    for (std::size_t k = 0; k < scene.hull.size(); ++k) {
      const Complex p = vp.to_pixel(scene.hull[k]);
      out << (k == 0 ? "M " : " L ") << px(p.real()) << " " << px(p.imag());
    }
    out << (scene.hull.size() >= 2 ? " Z\"/>\n" : "\"/>\n");
  }

  if (!scene.markers.empty()) {
    out << "  <g id=\"markers\" fill=\"#d62728\">\n";
    for (const auto& m : scene.markers) {
      const Complex p = vp.to_pixel(m);
      out << "    <circle cx=\"" << px(p.real()) << "\" cy=\"" << px(p.imag()) << "\" r=\"1.5\"/>\n";
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, "cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::io, "failed writing " + path.string());
}

}  // namespace realop
