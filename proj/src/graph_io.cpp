#include "coarse_menger/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

namespace coarse_menger {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view field, int line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw InputFormatError(line_no, "expected integer, got '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

Instance read_instance(std::istream& in) {
  std::string raw;
  int line_no = 0;
  long long n = -1;
  long long m = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Vertex> s_members;
  std::vector<Vertex> t_members;

  auto vertex_field = [&](std::string_view field) {
    long long v = parse_int(field, line_no);
    if (v < 0 || v >= n) throw InputFormatError(line_no, "vertex " + std::to_string(v) + " out of range");
    return static_cast<Vertex>(v);
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto fields = split_fields(line);
    if (fields.empty()) continue;

    const std::string_view tag = fields[0];
    if (tag == "p") {
      if (n >= 0) throw InputFormatError(line_no, "duplicate header");
      if (fields.size() != 3) throw InputFormatError(line_no, "header must be 'p <n> <m>'");
      n = parse_int(fields[1], line_no);
      m = parse_int(fields[2], line_no);
      if (n < 0 || m < 0 || n > std::numeric_limits<Vertex>::max()) {
        throw InputFormatError(line_no, "bad header counts");
      }
      continue;
    }
    if (n < 0) throw InputFormatError(line_no, "missing 'p' header before data");
    if (tag == "e") {
      if (fields.size() != 3) throw InputFormatError(line_no, "edge must be 'e <u> <v>'");
      Vertex u = vertex_field(fields[1]);
      Vertex v = vertex_field(fields[2]);
      if (u == v) throw InputFormatError(line_no, "self loop");
      edges.emplace_back(u, v);
    } else if (tag == "s" || tag == "t") {
      if (fields.size() != 2) throw InputFormatError(line_no, "terminal must be '" + std::string(tag) + " <v>'");
      (tag == "s" ? s_members : t_members).push_back(vertex_field(fields[1]));
    } else {
      throw InputFormatError(line_no, "unknown line type '" + std::string(tag) + "'");
    }
  }
  if (n < 0) throw InputFormatError(line_no, "missing 'p' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw InputFormatError(line_no, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }

  Instance inst;
  try {
    inst.graph = Graph::build(static_cast<int>(n), edges);
  } catch (const GraphError& e) {
    throw InputFormatError(line_no, e.what());
  }
  inst.s = VertexSet(static_cast<int>(n), s_members);
  inst.t = VertexSet(static_cast<int>(n), t_members);
  return inst;
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
  out << "p " << inst.graph.vertex_count() << ' ' << inst.graph.edge_count() << '\n';
  for (auto [u, v] : inst.graph.edges()) out << "e " << u << ' ' << v << '\n';
  for (Vertex v : inst.s) out << "s " << v << '\n';
  for (Vertex v : inst.t) out << "t " << v << '\n';
}

std::string to_text(const Instance& inst) {
  std::ostringstream os;
  write_instance(os, inst);
  return os.str();
}

}  // namespace coarse_menger
