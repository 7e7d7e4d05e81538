#include "lincut/mesh_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "lincut/error.hpp"

namespace lincut {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_off(std::ostream& out, const TriMesh& mesh) {
  const auto faces = mesh.alive_triples();
  out << "OFF\n" << mesh.vertex_count() << ' ' << faces.size() << " 0\n";
  for (const Point2& p : mesh.points()) {
    out << format_double(p.x) << ' ' << format_double(p.y) << " 0\n";
  }
  for (const VertexTriple& f : faces) {
    out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
  }
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-empty, non-comment line; false at EOF.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++lineno_;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno_) + ": " + what);
  }

 private:
  std::istream& in_;
  std::size_t lineno_ = 0;
};

bool parse_double(std::string_view tok, double& v) {
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  return res.ec == std::errc() && res.ptr == tok.data() + tok.size() && std::isfinite(v);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

}  // namespace

OffData read_off(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.next(line)) reader.fail("empty file, expected OFF header");
  auto tok = tokens(line);
  if (tok.empty() || tok[0] != "OFF") reader.fail("expected 'OFF' header");
  tok.erase(tok.begin());
  if (tok.empty()) {
    if (!reader.next(line)) reader.fail("missing counts line");
    tok = tokens(line);
  }
  if (tok.size() < 2) reader.fail("counts line needs vertex and face counts");
  std::size_t nv = 0, nf = 0;
  try {
    nv = std::stoul(tok[0]);
    nf = std::stoul(tok[1]);
  } catch (const std::exception&) {
    reader.fail("malformed counts");
  }

  OffData data;
  data.points.reserve(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    if (!reader.next(line)) reader.fail("unexpected end of file in vertex list");
    tok = tokens(line);
    double x, y, z = 0.0;
    if (tok.size() < 2 || tok.size() > 3 || !parse_double(tok[0], x) ||
        !parse_double(tok[1], y) || (tok.size() == 3 && !parse_double(tok[2], z))) {
      reader.fail("malformed vertex line");
    }
    if (z != 0.0) reader.fail("vertex has nonzero z; only planar meshes are supported");
    data.points.push_back({x, y});
  }
  data.faces.reserve(nf);
  for (std::size_t i = 0; i < nf; ++i) {
    if (!reader.next(line)) reader.fail("unexpected end of file in face list");
    tok = tokens(line);
    if (tok.size() != 4 || tok[0] != "3") reader.fail("face is not a triangle");
    VertexTriple f{};
    for (int k = 0; k < 3; ++k) {
      unsigned long v = 0;
      const auto& t = tok[k + 1];
      const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
      if (res.ec != std::errc() || res.ptr != t.data() + t.size()) {
        reader.fail("malformed face index");
      }
      if (v >= nv) reader.fail("face index out of range");
      f[k] = static_cast<VertexId>(v);
    }
    data.faces.push_back(f);
  }
  return data;
}

void write_svg(std::ostream& out, const TriMesh& mesh) {
  constexpr double kSize = 1024.0;
  constexpr double kMargin = 16.0;
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (mesh.vertex_count() > 0) {
    xmin = xmax = mesh.point(0).x;
    ymin = ymax = mesh.point(0).y;
    for (const Point2& p : mesh.points()) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
  }
  const double extent = std::max({xmax - xmin, ymax - ymin, 1e-300});
  const double scale = (kSize - 2 * kMargin) / extent;
  auto sx = [&](double x) { return kMargin + (x - xmin) * scale; };
  auto sy = [&](double y) { return kSize - kMargin - (y - ymin) * scale; };  // y up

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1024\" height=\"1024\" "
         "viewBox=\"0 0 1024 1024\">\n"
      << "<rect width=\"1024\" height=\"1024\" fill=\"white\"/>\n";

  auto line = [&](VertexId a, VertexId b, const char* color, double width) {
    const Point2& p = mesh.point(a);
    const Point2& q = mesh.point(b);
    out << "<line x1=\"" << sx(p.x) << "\" y1=\"" << sy(p.y) << "\" x2=\"" << sx(q.x)
        << "\" y2=\"" << sy(q.y) << "\" stroke=\"" << color << "\" stroke-width=\"" << width
        << "\"/>\n";
  };

  // Each undirected edge once; constrained ones drawn last so they sit on top.
  std::vector<std::array<VertexId, 2>> constrained;
  out << "<g id=\"edges\">\n";
  for (TriangleId t : mesh.alive_triangles()) {
    const VertexTriple& tv = mesh.triangle(t);
    for (int s = 0; s < 3; ++s) {
      const VertexId a = tv[s];
      const VertexId b = tv[(s + 1) % 3];
      if (mesh.neighbor(t, s) != kBoundary && a > b) continue;
      if (mesh.is_constrained(a, b)) {
        constrained.push_back({a, b});
      } else {
        line(a, b, "black", 1.0);
      }
    }
  }
  out << "</g>\n<g id=\"constraints\">\n";
  for (const auto& [a, b] : constrained) line(a, b, "red", 2.0);
  out << "</g>\n</svg>\n";
}

}  // namespace lincut
