#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "lincut/bench.hpp"
#include "lincut/error.hpp"
#include "lincut/mesh_io.hpp"

namespace lincut::cli {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

// Splits the next non-blank, non-comment line into whitespace tokens.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<std::vector<std::string>> next() {
    std::string text;
    while (std::getline(in_, text)) {
      ++line_;
      if (const auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
      std::istringstream ss(text);
      std::vector<std::string> tokens;
      for (std::string tok; ss >> tok;) tokens.push_back(tok);
      if (!tokens.empty()) return tokens;
    }
    return std::nullopt;
  }

  std::vector<std::string> expect(std::size_t count, const char* what) {
    auto tokens = next();
    if (!tokens) parse_fail(line_ + 1, std::string("unexpected end of file, expected ") + what);
    if (tokens->size() != count) {
      parse_fail(line_, std::string("expected ") + what + " (" + std::to_string(count) +
                            " fields), got " + std::to_string(tokens->size()) + " fields");
    }
    return *tokens;
  }

  void expect_end() {
    if (next()) parse_fail(line_, "trailing content after the last record");
  }

  std::size_t line() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

template <class T>
T parse_number(const std::string& tok, std::size_t line) {
  T value{};
  const char* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) parse_fail(line, "'" + tok + "' is not a valid number");
  return value;
}

Point2 parse_point(LineReader& reader) {
  const auto t = reader.expect(2, "a point \"x y\"");
  return {parse_number<double>(t[0], reader.line()), parse_number<double>(t[1], reader.line())};
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  auto num = [&](const std::string& s) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw CLI::ValidationError("--sizes", "'" + s + "' is not a positive integer");
    }
    return v;
  };
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::istringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw CLI::ValidationError("--sizes", "ranges are first:last:step");
    const std::size_t lo = num(parts[0]);
    const std::size_t hi = num(parts[1]);
    const std::size_t step = num(parts[2]);
    if (step == 0 || lo > hi) throw CLI::ValidationError("--sizes", "empty range");
    for (std::size_t n = lo; n <= hi; n += step) sizes.push_back(n);
  } else {
    std::istringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');) sizes.push_back(num(p));
  }
  if (sizes.empty()) throw CLI::ValidationError("--sizes", "no sizes given");
  for (std::size_t n : sizes) {
    if (n < 3) throw CLI::ValidationError("--sizes", "every size must be at least 3");
  }
  return sizes;
}

// Opens --output when given; otherwise results go to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  return in;
}

struct Options {
  std::string input;
  std::string output;
  std::string svg;
  std::string engine = "linear";
  std::string shape = "both";
  std::string sizes = "10:1000:10";
  std::size_t reps = 1000;
  std::uint64_t seed = 1;
};

Engine engine_of(const std::string& name) {
  return name == "classic" ? Engine::Classic : Engine::Linear;
}

int cmd_triangulate(const Options& opt, std::ostream& out) {
  std::ifstream in = open_input(opt.input);
  const ProblemInput problem = read_problem(in);
  const TriMesh mesh = build_constrained(problem);
  Sink sink(opt.output, out);
  write_off(sink.get(), mesh);
  if (!opt.svg.empty()) {
    Sink svg(opt.svg, out);
    write_svg(svg.get(), mesh);
  }
  return kOk;
}

int cmd_pocket(const Options& opt, std::ostream& out, std::ostream& err) {
  std::ifstream in = open_input(opt.input);
  const PocketPolygon poly = read_pocket(in);
  const std::vector<ChainTriangle> tris = run_engine(engine_of(opt.engine), poly);
  Sink sink(opt.output, out);
  for (const ChainTriangle& t : tris) sink.get() << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  const ValidationReport report = validate_triangulation(poly, tris);
  if (!report) {
    err << "validation failed (check " << report.failed_check << "): " << report.message << '\n';
    return kValidation;
  }
  err << "validation passed: " << tris.size() << " triangles\n";
  return kOk;
}

int cmd_bench(const Options& opt, std::ostream& out) {
  const std::vector<std::size_t> sizes = parse_sizes(opt.sizes);
  std::vector<Shape> shapes;
  if (opt.shape != "random") shapes.push_back(Shape::Collinear);
  if (opt.shape != "collinear") shapes.push_back(Shape::Random);
  std::vector<BenchRecord> records;
  for (Shape shape : shapes) {
    const auto part = bench(engine_of(opt.engine), shape, sizes, opt.reps, opt.seed);
    records.insert(records.end(), part.begin(), part.end());
  }
  Sink sink(opt.output, out);
  write_bench_csv(sink.get(), records);
  return kOk;
}

int cmd_validate(const Options& opt, std::ostream& out, std::ostream& err) {
  std::ifstream in = open_input(opt.input);
  OffData data = read_off(in);
  TriMesh mesh;
  try {
    mesh = TriMesh::from_triangles(std::move(data.points), data.faces, /*reorient=*/false);
  } catch (const Error& e) {
    err << "invalid mesh: " << e.what() << '\n';
    return kValidation;
  }
  const AuditReport report = audit(mesh);
  if (!report) {
    err << "invalid mesh: " << report.message << '\n';
    return kValidation;
  }
  out << "valid: " << mesh.vertex_count() << " vertices, " << mesh.alive_count()
      << " triangles\n";
  return kOk;
}

}  // namespace

ProblemInput read_problem(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.expect(2, "header \"P S\"");
  const auto p = parse_number<std::size_t>(header[0], reader.line());
  const auto s = parse_number<std::size_t>(header[1], reader.line());
  ProblemInput problem;
  problem.points.reserve(p);
  for (std::size_t i = 0; i < p; ++i) problem.points.push_back(parse_point(reader));
  problem.segments.reserve(s);
  for (std::size_t i = 0; i < s; ++i) {
    const auto t = reader.expect(2, "a segment \"i j\"");
    const auto a = parse_number<VertexId>(t[0], reader.line());
    const auto b = parse_number<VertexId>(t[1], reader.line());
    if (a >= p || b >= p) parse_fail(reader.line(), "segment index out of range");
    problem.segments.push_back({a, b});
  }
  reader.expect_end();
  return problem;
}

PocketPolygon read_pocket(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.expect(1, "vertex count \"N\"");
  const auto n = parse_number<std::size_t>(header[0], reader.line());
  if (n < 3) parse_fail(reader.line(), "a pocket needs at least 3 vertices");
  std::vector<Point2> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pts.push_back(parse_point(reader));
  reader.expect_end();
  return PocketPolygon::from_points(std::move(pts));
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constrained triangulation with linear-time pocket earcut", "lincut"};
  app.require_subcommand(1);
  Options opt;

  auto* tri = app.add_subcommand("triangulate", "Build a constrained triangulation (OFF output)");
  tri->add_option("input", opt.input, "Problem file")->required();
  tri->add_option("-o,--output", opt.output, "OFF output path (default: stdout)");
  tri->add_option("--svg", opt.svg, "Also render the mesh to this SVG path");

  auto* pocket = app.add_subcommand("pocket", "Triangulate one pocket polygon");
  pocket->add_option("input", opt.input, "Pocket file")->required();
  pocket->add_option("-e,--engine", opt.engine, "linear or classic")
      ->check(CLI::IsMember({"linear", "classic"}));
  pocket->add_option("-o,--output", opt.output, "Triangle output path (default: stdout)");

  auto* bench_cmd = app.add_subcommand("bench", "Time earcut on the parametric polygons (CSV)");
  bench_cmd->add_option("-e,--engine", opt.engine, "linear or classic")
      ->check(CLI::IsMember({"linear", "classic"}));
  bench_cmd->add_option("--sizes", opt.sizes, "Comma list or first:last:step")
      ->capture_default_str();
  bench_cmd->add_option("--reps", opt.reps, "Repetitions per size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--shape", opt.shape, "collinear, random or both")
      ->check(CLI::IsMember({"collinear", "random", "both"}));
  bench_cmd->add_option("--seed", opt.seed, "Seed for the random shape")->capture_default_str();
  bench_cmd->add_option("-o,--output", opt.output, "CSV output path (default: stdout)");

  auto* validate = app.add_subcommand("validate", "Audit an OFF mesh");
  validate->add_option("input", opt.input, "OFF file")->required();

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(bench_cmd)) parse_sizes(opt.sizes);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand(tri)) return cmd_triangulate(opt, out);
    if (app.got_subcommand(pocket)) return cmd_pocket(opt, out, err);
    if (app.got_subcommand(bench_cmd)) return cmd_bench(opt, out);
    return cmd_validate(opt, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::ParseError:
        return kUsage;
      case ErrorCode::EarQueueExhausted:
        err << "note: the linear engine only handles polygons weakly visible from the segment "
               "joining the first and last vertex; use --engine classic for general polygons\n";
        return kQueueExhausted;
      default:
        return kPipeline;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kPipeline;
  }
}

}  // namespace lincut::cli
