#include "mgraph/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mgraph/admissible.hpp"
#include "mgraph/bounds.hpp"
#include "mgraph/errors.hpp"
#include "mgraph/fiber.hpp"
#include "mgraph/graphfile.hpp"
#include "mgraph/wedge.hpp"

namespace mgraph {

namespace {

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

GraphFile load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open '" + path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_graph_file(text.str());
}

/// `edge:offset` addresses an interior point, anything else is a vertex id.
PointLocation parse_point(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    return PointLocation::at_vertex(text);
  }
  Rat offset;
  try {
    offset = parse_rational(text.substr(colon + 1));
  } catch (const std::invalid_argument& e) {
    throw Error(std::string("bad point '") + text + "': " + e.what());
  }
  return PointLocation::on_edge(text.substr(0, colon), offset);
}

std::string point_name(const PointLocation& p) {
  if (p.is_vertex) return p.id;
  return p.id + ":" + to_string(p.offset);
}

FiberGraph fiber_from_file(const GraphFile& file) {
  FiberGraph fiber = fiber_graph(file.graph, file.component_genus);
  if (file.curve_genus && *file.curve_genus != fiber.curve_genus) {
    throw Error("curve-genus " + std::to_string(*file.curve_genus) +
                " does not match the derived genus " +
                std::to_string(fiber.curve_genus));
  }
  return fiber;
}

struct Options {
  bool tsv = false;
  std::string file;
  std::vector<std::string> at;
  int genus = 0;
  std::string delta;
  std::vector<std::string> fibers;
  std::vector<long> reducible;
  std::string lengths;
  std::string nt_norm_sq = "0";
};

int cmd_measure(const Options& opt, std::ostream& out) {
  GraphFile file = load_graph_file(opt.file);
  const MetrizedGraph& g = file.graph;
  Measure mu = admissible_measure(g, file.divisor);
  VertexVector qmu = q_map(g, mu);
  if (opt.tsv) {
    out << "divisor-degree\t" << to_string(file.divisor.degree()) << "\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
      out << "mass\t" << g.vertex_id(v) << "\t" << to_string(mu.vertex_mass[v])
          << "\n";
    }
    for (int e = 0; e < g.edge_count(); ++e) {
      out << "density\t" << g.edge(e).id << "\t"
          << to_string(mu.edge_density[e]) << "\n";
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
      out << "qmu\t" << g.vertex_id(v) << "\t" << to_string(qmu[v]) << "\n";
    }
    out << "total-mass\t" << to_string(mu.total_mass(g)) << "\n";
    if (!mu.is_nonnegative()) out << "warning\tnegative-measure\n";
  } else {
    out << "divisor degree = " << to_string(file.divisor.degree()) << "\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
      out << "mu mass " << g.vertex_id(v) << " = "
          << to_string(mu.vertex_mass[v]) << "\n";
    }
    for (int e = 0; e < g.edge_count(); ++e) {
      out << "mu density " << g.edge(e).id << " = "
          << to_string(mu.edge_density[e]) << "\n";
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
      out << "q(mu) " << g.vertex_id(v) << " = " << to_string(qmu[v]) << "\n";
    }
    out << "total mass = " << to_string(mu.total_mass(g)) << "\n";
    if (!mu.is_nonnegative()) {
      out << "warning: measure has negative components\n";
    }
  }
  return 0;
}

int cmd_green(const Options& opt, std::ostream& out) {
  GraphFile file = load_graph_file(opt.file);
  const MetrizedGraph& g = file.graph;
  if (!opt.at.empty()) {
    PointLocation x = parse_point(opt.at[0]);
    PointLocation y = parse_point(opt.at[1]);
    Rat value = green_eval(g, file.divisor, x, y);
    if (opt.tsv) {
      out << "green\t" << point_name(x) << "\t" << point_name(y) << "\t"
          << to_string(value) << "\n";
    } else {
      out << "g(" << point_name(x) << "," << point_name(y)
          << ") = " << to_string(value) << "\n";
    }
    return 0;
  }
  GreenSystem sys = green_system(g, file.divisor);
  for (int x = 0; x < g.vertex_count(); ++x) {
    for (int y = x; y < g.vertex_count(); ++y) {
      if (opt.tsv) {
        out << "green\t" << g.vertex_id(x) << "\t" << g.vertex_id(y) << "\t"
            << to_string(sys.green(x, y)) << "\n";
      } else {
        out << "g(" << g.vertex_id(x) << "," << g.vertex_id(y)
            << ") = " << to_string(sys.green(x, y)) << "\n";
      }
    }
  }
  return 0;
}

int cmd_constant(const Options& opt, std::ostream& out) {
  GraphFile file = load_graph_file(opt.file);
  GreenSystem sys = green_system(file.graph, file.divisor);
  if (opt.tsv) {
    out << "c\t" << to_string(sys.c) << "\n";
  } else {
    out << "c = " << to_string(sys.c) << "\n";
  }
  return 0;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  GraphFile file = load_graph_file(opt.file);
  GreenSystem sys = green_system(file.graph, file.divisor);
  PropertyReport report = verify_admissibility(file.graph, file.divisor, sys);
  for (size_t i = 0; i < report.checks.size(); ++i) {
    const PropertyCheck& check = report.checks[i];
    if (opt.tsv) {
      out << "property\t" << i + 1 << "\t" << check.name << "\t"
          << (check.pass ? "pass" : "fail") << "\n";
    } else {
      out << "(" << i + 1 << ") " << check.name << ": "
          << (check.pass ? "pass" : "fail") << "\n";
      if (!check.pass) out << "    " << check.detail << "\n";
    }
  }
  if (opt.tsv) {
    out << "summary\t" << report.passed() << "\t" << report.checks.size()
        << "\n";
  } else {
    out << report.passed() << "/" << report.checks.size()
        << " properties hold\n";
  }
  return report.all_pass() ? 0 : 1;
}

int cmd_local_term(const Options& opt, std::ostream& out) {
  GraphFile file = load_graph_file(opt.file);
  FiberGraph fiber = fiber_from_file(file);
  VertexDivisor k = canonical_fiber_divisor(fiber);
  Rat term = local_term(fiber);
  if (opt.tsv) {
    out << "curve-genus\t" << fiber.curve_genus << "\n";
    out << "delta\t" << fiber.node_count() << "\n";
    for (int v = 0; v < fiber.graph.vertex_count(); ++v) {
      out << "Ky\t" << fiber.graph.vertex_id(v) << "\t" << to_string(k[v])
          << "\n";
    }
    out << "local-term\t" << to_string(term) << "\n";
  } else {
    out << "curve genus = " << fiber.curve_genus << "\n";
    out << "delta_y = " << fiber.node_count() << "\n";
    for (int v = 0; v < fiber.graph.vertex_count(); ++v) {
      out << "K_y " << fiber.graph.vertex_id(v) << " = " << to_string(k[v])
          << "\n";
    }
    out << "local term = " << to_string(term) << "\n";
  }
  return 0;
}

int cmd_bounds(const Options& opt, std::ostream& out) {
  Rat delta;
  try {
    delta = parse_rational(opt.delta);
  } catch (const std::invalid_argument& e) {
    throw Error(e.what());
  }
  BoundReport report = function_field_bounds(opt.genus, delta);
  if (opt.tsv) {
    out << "genus\t" << report.genus << "\n";
    out << "delta\t" << to_string(report.delta) << "\n";
    out << "omega2-lower\t" << to_string(report.omega_sq_lower) << "\n";
    out << "admissible-omega2-lower\t"
        << to_string(report.admissible_omega_sq_lower) << "\n";
    out << "A-lower-squared\t" << to_string(report.a_lower_sq) << "\n";
    out << "A-lower\t" << format_real(report.a_lower) << "\n";
    out << "assumes-irreducible-fibers\t1\n";
  } else {
    out << "genus = " << report.genus << "\n";
    out << "delta = " << to_string(report.delta) << "\n";
    out << "omega2 >= " << to_string(report.omega_sq_lower) << "\n";
    out << "admissible omega2 >= " << to_string(report.admissible_omega_sq_lower)
        << "\n";
    out << "A^2 >= " << to_string(report.a_lower_sq) << "\n";
    out << "A >= " << format_real(report.a_lower) << "\n";
    out << "assumes: stable model with only irreducible fibers\n";
  }
  return 0;
}

int cmd_arith_bounds(const Options& opt, std::ostream& out) {
  std::vector<ArithmeticFiberDatum> fibers;
  for (const std::string& text : opt.fibers) {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
      throw Error("bad --fiber '" + text + "', expected <delta>:<N>");
    }
    try {
      ArithmeticFiberDatum datum;
      datum.delta = std::stol(text.substr(0, colon));
      datum.residue_cardinality = std::stol(text.substr(colon + 1));
      fibers.push_back(datum);
    } catch (const std::exception&) {
      throw Error("bad --fiber '" + text + "', expected <delta>:<N>");
    }
  }
  ArithmeticBounds bounds = arithmetic_bounds(opt.genus, fibers, opt.reducible);
  if (opt.tsv) {
    out << "genus\t" << opt.genus << "\n";
    out << "irreducible-fibers-bound\t"
        << format_real(bounds.irreducible_fibers_bound) << "\n";
    out << "reducible-places-bound\t"
        << format_real(bounds.reducible_places_bound) << "\n";
    out << "not-smooth-floor\t" << format_real(bounds.not_smooth_floor) << "\n";
  } else {
    out << "genus = " << opt.genus << "\n";
    out << "irreducible fibers: omega_Ar^2 >= "
        << format_real(bounds.irreducible_fibers_bound) << "\n";
    out << "reducible places: omega_Ar^2 >= "
        << format_real(bounds.reducible_places_bound) << "\n";
    out << "not smooth: omega_Ar^2 >= " << format_real(bounds.not_smooth_floor)
        << "\n";
  }
  return 0;
}

WedgePoint parse_wedge_point(const WedgeSpec& spec, const std::string& text) {
  if (text == "O") return WedgePoint::origin();
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw Error("bad wedge point '" + text + "', expected O or <circle>:<t>");
  }
  try {
    int circle = std::stoi(text.substr(0, colon));
    Rat t = parse_rational(text.substr(colon + 1));
    if (circle < 1 || circle > spec.circle_count()) {
      throw IndexOutOfRange("circle index " + std::to_string(circle) +
                            " out of range 1.." +
                            std::to_string(spec.circle_count()));
    }
    return WedgePoint{circle - 1, t};
  } catch (const IndexOutOfRange&) {
    throw;
  } catch (const std::exception&) {
    throw Error("bad wedge point '" + text + "', expected O or <circle>:<t>");
  }
}

int cmd_wedge(const Options& opt, std::ostream& out) {
  std::vector<Rat> lengths;
  std::istringstream in(opt.lengths);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      lengths.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw Error(e.what());
    }
  }
  WedgeSpec spec = make_wedge(std::move(lengths), opt.genus);
  Measure mu = wedge_measure(spec);
  if (opt.tsv) {
    out << "circles\t" << spec.circle_count() << "\n";
    out << "L\t" << to_string(spec.total_length()) << "\n";
    out << "genus\t" << spec.genus << "\n";
    out << "mass\tO\t" << to_string(mu.vertex_mass[0]) << "\n";
    for (int i = 0; i < spec.circle_count(); ++i) {
      out << "density\t" << i + 1 << "\t" << to_string(mu.edge_density[i])
          << "\n";
    }
    out << "c\t" << to_string(wedge_constant(spec)) << "\n";
    if (!mu.is_nonnegative()) out << "warning\tnegative-measure\n";
  } else {
    out << "circles = " << spec.circle_count() << "\n";
    out << "L = " << to_string(spec.total_length()) << "\n";
    out << "genus = " << spec.genus << "\n";
    out << "mu mass O = " << to_string(mu.vertex_mass[0]) << "\n";
    for (int i = 0; i < spec.circle_count(); ++i) {
      out << "mu density circle " << i + 1 << " = "
          << to_string(mu.edge_density[i]) << "\n";
    }
    out << "c = " << to_string(wedge_constant(spec)) << "\n";
    if (!mu.is_nonnegative()) {
      out << "warning: measure has negative components\n";
    }
  }
  if (!opt.at.empty()) {
    WedgePoint x = parse_wedge_point(spec, opt.at[0]);
    WedgePoint y = parse_wedge_point(spec, opt.at[1]);
    Rat value = wedge_green(spec, x, y);
    if (opt.tsv) {
      out << "green\t" << opt.at[0] << "\t" << opt.at[1] << "\t"
          << to_string(value) << "\n";
    } else {
      out << "g(" << opt.at[0] << "," << opt.at[1]
          << ") = " << to_string(value) << "\n";
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact potential theory on metrized graphs"};
  app.name("mgraph");
  app.require_subcommand(1);

  Options opt;
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "tsv"}))
      ->capture_default_str();

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", opt.file, "graph description file")->required();
  };
  auto add_at = [&](CLI::App* cmd, const char* what) {
    cmd->add_option("--at", opt.at, what)->expected(2);
  };

  CLI::App* measure = app.add_subcommand(
      "measure", "admissible measure and its vertex discretization");
  add_file(measure);
  CLI::App* green =
      app.add_subcommand("green", "Green function values for (G, D)");
  add_file(green);
  add_at(green, "two points, each <vertex> or <edge>:<offset>");
  CLI::App* constant =
      app.add_subcommand("constant", "the constant c(G,D) of the Green system");
  add_file(constant);
  CLI::App* verify = app.add_subcommand(
      "verify", "check the six defining properties of the Green system");
  add_file(verify);
  CLI::App* local =
      app.add_subcommand("local-term", "per-fiber admissible local term");
  add_file(local);

  CLI::App* bounds =
      app.add_subcommand("bounds", "function-field lower bounds from (g, delta)");
  bounds->add_option("--genus", opt.genus, "curve genus (>= 2)")->required();
  bounds->add_option("--delta", opt.delta, "total singularity count")
      ->required();

  CLI::App* arith = app.add_subcommand(
      "arith-bounds", "arithmetic-surface lower bounds on omega^2");
  arith->add_option("--genus", opt.genus, "curve genus (>= 2)")->required();
  arith->add_option("--fiber", opt.fibers,
                    "singular fiber as <delta>:<residue cardinality>");
  arith->add_option("--reducible", opt.reducible,
                    "residue cardinality of a place with reducible fiber");

  CLI::App* wedge =
      app.add_subcommand("wedge", "closed forms for a wedge of circles");
  wedge->add_option("--lengths", opt.lengths, "comma-separated circle lengths")
      ->required();
  wedge->add_option("--genus", opt.genus, "positive integer g")->required();
  add_at(wedge, "two points, each O or <circle>:<t>");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  opt.tsv = format == "tsv";

  try {
    if (*measure) return cmd_measure(opt, out);
    if (*green) return cmd_green(opt, out);
    if (*constant) return cmd_constant(opt, out);
    if (*verify) return cmd_verify(opt, out);
    if (*local) return cmd_local_term(opt, out);
    if (*bounds) return cmd_bounds(opt, out);
    if (*arith) return cmd_arith_bounds(opt, out);
    if (*wedge) return cmd_wedge(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace mgraph
