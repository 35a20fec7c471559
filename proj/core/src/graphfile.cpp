#include "mgraph/graphfile.hpp"

#include <map>
#include <sstream>
#include <vector>

#include "mgraph/errors.hpp"

namespace mgraph {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

Rat parse_rational_at(const std::string& text, int line) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

int parse_int_at(const std::string& text, int line) {
  try {
    size_t used = 0;
    int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw ParseError(line, "bad integer: '" + text + "'");
  }
}

}  // namespace

GraphFile parse_graph_file(const std::string& text) {
  std::vector<std::string> vertices;
  std::map<std::string, int> vertex_of;  // id -> declaration line
  std::vector<EdgeSpec> edges;
  std::map<std::string, int> edge_of;
  std::map<std::string, std::pair<Rat, int>> divisor_entries;  // id -> (coeff, line)
  std::map<std::string, std::pair<int, int>> genus_entries;    // id -> (genus, line)
  std::optional<int> curve_genus;

  auto known_vertex = [&](const std::string& id, int line) {
    if (vertex_of.find(id) == vertex_of.end()) {
      throw UnknownVertex("line " + std::to_string(line) +
                          ": unknown vertex '" + id + "'");
    }
  };

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::vector<std::string> tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const std::string& directive = tokens[0];

    if (directive == "vertex") {
      if (tokens.size() != 2) {
        throw ParseError(line_no, "expected: vertex <id>");
      }
      // Vertex and edge ids share one namespace so point addresses stay
      // unambiguous.
      if (edge_of.count(tokens[1]) ||
          !vertex_of.emplace(tokens[1], line_no).second) {
        throw DuplicateId("line " + std::to_string(line_no) +
                          ": duplicate vertex id '" + tokens[1] + "'");
      }
      vertices.push_back(tokens[1]);
    } else if (directive == "edge") {
      if (tokens.size() != 5) {
        throw ParseError(line_no, "expected: edge <id> <tail> <head> <length>");
      }
      if (edge_of.count(tokens[1]) || vertex_of.count(tokens[1])) {
        throw DuplicateId("line " + std::to_string(line_no) +
                          ": duplicate edge id '" + tokens[1] + "'");
      }
      known_vertex(tokens[2], line_no);
      known_vertex(tokens[3], line_no);
      Rat length = parse_rational_at(tokens[4], line_no);
      if (length <= 0) {
        throw NonpositiveLength("line " + std::to_string(line_no) +
                                ": edge length must be positive, got " +
                                to_string(length));
      }
      edge_of.emplace(tokens[1], line_no);
      edges.push_back(EdgeSpec{tokens[1], tokens[2], tokens[3], length});
    } else if (directive == "divisor") {
      if (tokens.size() != 3) {
        throw ParseError(line_no, "expected: divisor <vertex> <coefficient>");
      }
      known_vertex(tokens[1], line_no);
      if (divisor_entries.count(tokens[1])) {
        throw ParseError(line_no,
                         "duplicate divisor entry for '" + tokens[1] + "'");
      }
      divisor_entries.emplace(
          tokens[1],
          std::make_pair(parse_rational_at(tokens[2], line_no), line_no));
    } else if (directive == "component") {
      if (tokens.size() != 3 || tokens[2].rfind("genus=", 0) != 0) {
        throw ParseError(line_no, "expected: component <vertex> genus=<int>");
      }
      known_vertex(tokens[1], line_no);
      if (genus_entries.count(tokens[1])) {
        throw ParseError(line_no,
                         "duplicate component entry for '" + tokens[1] + "'");
      }
      int genus = parse_int_at(tokens[2].substr(6), line_no);
      if (genus < 0) {
        throw ParseError(line_no, "component genus must be nonnegative");
      }
      genus_entries.emplace(tokens[1], std::make_pair(genus, line_no));
    } else if (directive == "curve-genus") {
      if (tokens.size() != 2) {
        throw ParseError(line_no, "expected: curve-genus <int>");
      }
      if (curve_genus) {
        throw ParseError(line_no, "duplicate curve-genus directive");
      }
      curve_genus = parse_int_at(tokens[1], line_no);
    } else {
      throw ParseError(line_no, "unknown directive '" + directive + "'");
    }
  }

  GraphFile file;
  file.graph = MetrizedGraph::build(std::move(vertices), std::move(edges));
  file.divisor = VertexDivisor(file.graph);
  file.has_divisor = !divisor_entries.empty();
  for (const auto& [id, entry] : divisor_entries) {
    file.divisor[file.graph.vertex_index(id)] = entry.first;
  }
  file.component_genus.assign(file.graph.vertex_count(), 0);
  file.has_component_genus = !genus_entries.empty();
  for (const auto& [id, entry] : genus_entries) {
    file.component_genus[file.graph.vertex_index(id)] = entry.first;
  }
  file.curve_genus = curve_genus;
  return file;
}

std::string to_text(const GraphFile& file) {
  std::ostringstream out;
  const MetrizedGraph& g = file.graph;
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "vertex " << g.vertex_id(v) << "\n";
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    out << "edge " << edge.id << " " << g.vertex_id(edge.tail) << " "
        << g.vertex_id(edge.head) << " " << to_string(edge.length) << "\n";
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (file.divisor.size() > v && file.divisor[v] != 0) {
      out << "divisor " << g.vertex_id(v) << " " << to_string(file.divisor[v])
          << "\n";
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (static_cast<int>(file.component_genus.size()) > v &&
        file.component_genus[v] != 0) {
      out << "component " << g.vertex_id(v)
          << " genus=" << file.component_genus[v] << "\n";
    }
  }
  if (file.curve_genus) {
    out << "curve-genus " << *file.curve_genus << "\n";
  }
  return out.str();
}

}  // namespace mgraph
