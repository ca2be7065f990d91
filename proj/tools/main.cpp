// pdgrid: embed a 3-connected plane graph together with its dual on the grid.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdgrid/pdgrid.hpp"

namespace fs = std::filesystem;
using namespace pdgrid;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

int report_error(const std::string& kind, const std::string& message) {
  std::cerr << nlohmann::json{{"error", kind}, {"message", message}}.dump() << '\n';
  return 2;
}

struct Checked {
  QuadGraph quad;
  GridDrawing drawing;
  Report report;
};

Checked check_files(const std::string& graph_path, const std::string& drawing_path) {
  const PlanarGraph g = parse_graph(read_file(graph_path));
  QuadGraph q = quad_for_verification(g);
  GridDrawing d = parse_drawing(q, read_file(drawing_path));
  Report r = verify_drawing(q, d);
  return {std::move(q), std::move(d), std::move(r)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simultaneous grid drawings of a 3-connected plane graph and its dual"};
  app.require_subcommand(1);

  // embed
  auto* embed_cmd = app.add_subcommand("embed", "graph JSON -> drawing JSON");
  std::string embed_in, embed_out = "-", bend = "primal", engine = "offset", trace_path, labeling_out;
  std::vector<std::string> outer_edge;
  bool skip_check = false;
  embed_cmd->add_option("graph", embed_in, "graph JSON file")->required();
  embed_cmd->add_option("-o,--out", embed_out, "drawing JSON output (default stdout)");
  embed_cmd->add_option("--bend", bend, "which edge bends")->check(CLI::IsMember({"primal", "dual"}));
  embed_cmd->add_option("--engine", engine, "placement engine")->check(CLI::IsMember({"reference", "offset"}));
  embed_cmd->add_option("--trace", trace_path, "write per-step frontier states as JSON lines");
  embed_cmd->add_option("--labeling-out", labeling_out, "also write the canonical labeling");
  embed_cmd->add_option("--outer-edge", outer_edge, "outer edge u w (vertex names)")->expected(2);
  embed_cmd->add_flag("--skip-3conn-check", skip_check, "trust that the input is 3-connected");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check a drawing; exit 0 iff every check passes");
  std::string verify_drawing_path, verify_graph, verify_out = "-", batch_dir;
  verify_cmd->add_option("drawing", verify_drawing_path, "drawing JSON file");
  verify_cmd->add_option("-g,--graph", verify_graph, "graph JSON the drawing was made from");
  verify_cmd->add_option("-o,--out", verify_out, "report JSON output (default stdout)");
  verify_cmd->add_option("--batch", batch_dir,
                         "check every NAME.drawing.json in a directory against NAME.graph.json");

  // render
  auto* render_cmd = app.add_subcommand("render", "drawing JSON -> SVG");
  std::string render_drawing, render_graph, render_out = "-";
  RenderStyle style;
  bool force = false;
  render_cmd->add_option("drawing", render_drawing, "drawing JSON file")->required();
  render_cmd->add_option("-g,--graph", render_graph, "graph JSON file")->required();
  render_cmd->add_option("-o,--out", render_out, "SVG output (default stdout)");
  render_cmd->add_option("--scale", style.scale, "pixels per grid unit")->check(CLI::PositiveNumber);
  render_cmd->add_option("--primal-color", style.primal_color);
  render_cmd->add_option("--dual-color", style.dual_color);
  render_cmd->add_option("--radius", style.vertex_radius);
  render_cmd->add_flag("--grid", style.show_grid, "draw the lattice underneath");
  render_cmd->add_flag("--force", force, "render even if verification fails");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph JSON");
  std::string kind = "triangulation", solid = "dodecahedron", gen_out = "-";
  GenSpec spec;
  gen_cmd->add_option("--kind", kind)->check(CLI::IsMember({"platonic", "triangulation", "sparsified"}));
  gen_cmd->add_option("--solid", solid, "platonic solid name");
  gen_cmd->add_option("--n", spec.n, "vertex count")->default_val(20);
  gen_cmd->add_option("--seed", spec.seed)->default_val(1);
  gen_cmd->add_option("--rate", spec.deletion_rate, "edge deletion rate for sparsified")->default_val(0.5);
  gen_cmd->add_option("-o,--out", gen_out, "graph JSON output (default stdout)");

  // demo
  auto* demo_cmd = app.add_subcommand("demo", "dodecahedron end to end");
  std::string demo_dir = ".";
  demo_cmd->add_option("--out-dir", demo_dir, "directory for graph, drawing and SVG");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("InvalidArgument", e.what());
  }

  try {
    if (*embed_cmd) {
      EmbedOptions opts;
      opts.bend_on = bend == "dual" ? BendOn::dual : BendOn::primal;
      opts.engine = engine == "reference" ? Engine::reference : Engine::offset;
      opts.check_three_connectivity = !skip_check;
      if (!outer_edge.empty()) opts.outer_edge = std::pair{outer_edge[0], outer_edge[1]};
      const PlanarGraph g = parse_graph(read_file(embed_in));
      std::ofstream trace_file;
      TraceSink sink;
      if (!trace_path.empty()) {
        trace_file.open(trace_path, std::ios::binary);
        if (!trace_file) throw Error(ErrorKind::InvalidArgument, "cannot write '" + trace_path + "'");
      }
      // The QuadGraph is only known once the pipeline has built it, so
      // snapshots are buffered and named afterwards.
      std::vector<FrontierSnapshot> snaps;
      if (trace_file.is_open()) sink = [&](const FrontierSnapshot& s) { snaps.push_back(s); };
      const Embedding e = embed_graph(g, opts, sink);
      for (const auto& s : snaps) trace_file << serialize_snapshot(e.quad, s) << '\n';
      if (!labeling_out.empty()) write_output(labeling_out, serialize_labeling(e.quad, e.labeling));
      write_output(embed_out, serialize_drawing(e.quad, e.drawing));
      return 0;
    }
    if (*verify_cmd) {
      if (!batch_dir.empty()) {
        nlohmann::json results = nlohmann::json::object();
        bool all = true;
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(batch_dir)) {
          const std::string name = entry.path().filename().string();
          if (name.size() > 13 && name.ends_with(".drawing.json")) files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& path : files) {
          const std::string stem = path.filename().string().substr(0, path.filename().string().size() - 13);
          const fs::path graph = path.parent_path() / (stem + ".graph.json");
          const Checked c = check_files(graph.string(), path.string());
          results[stem] = nlohmann::json::parse(serialize_report(c.report));
          all = all && c.report.ok();
        }
        write_output(verify_out, nlohmann::json{{"format", 1}, {"pass", all}, {"reports", results}}.dump(1));
        return all ? 0 : 1;
      }
      if (verify_drawing_path.empty() || verify_graph.empty()) {
        throw Error(ErrorKind::InvalidArgument, "verify needs a drawing and --graph (or --batch)");
      }
      const Checked c = check_files(verify_graph, verify_drawing_path);
      write_output(verify_out, serialize_report(c.report));
      return c.report.ok() ? 0 : 1;
    }
    if (*render_cmd) {
      const Checked c = check_files(render_graph, render_drawing);
      if (!c.report.ok() && !force) {
        throw Error(ErrorKind::InvalidArgument, "drawing fails verification; use --force to render anyway");
      }
      write_output(render_out, render_svg(c.quad, c.drawing, style));
      return 0;
    }
    if (*gen_cmd) {
      PlanarGraph g;
      if (kind == "platonic") {
        g = platonic(solid);
      } else {
        spec.kind = kind == "sparsified" ? GenKind::sparsified : GenKind::triangulation;
        g = random_graph(spec);
      }
      write_output(gen_out, serialize_graph(g));
      return 0;
    }
    if (*demo_cmd) {
      fs::create_directories(demo_dir);
      const PlanarGraph g = platonic("dodecahedron");
      const Embedding e = embed_graph(g);
      const Report r = verify_drawing(e.quad, e.drawing);
      const fs::path dir(demo_dir);
      write_output((dir / "dodecahedron.graph.json").string(), serialize_graph(g));
      write_output((dir / "dodecahedron.drawing.json").string(), serialize_drawing(e.quad, e.drawing));
      write_output((dir / "dodecahedron.svg").string(), render_svg(e.quad, e.drawing));
      std::int64_t extent = 0;
      for (const Point& p : e.drawing.coords) extent = std::max({extent, p.x, p.y});
      extent = std::max({extent, e.drawing.bend->point.x, e.drawing.bend->point.y});
      std::cout << nlohmann::json{{"n", e.drawing.n},
                                  {"grid", 2 * e.drawing.n - 2},
                                  {"extent", extent},
                                  {"pass", r.ok()},
                                  {"svg", (dir / "dodecahedron.svg").string()}}
                       .dump()
                << '\n';
      return r.ok() ? 0 : 1;
    }
  } catch (const Error& e) {
    return report_error(std::string(to_string(e.kind())), e.what());
  } catch (const std::exception& e) {
    return report_error("InvalidArgument", e.what());
  }
  return 0;
}
