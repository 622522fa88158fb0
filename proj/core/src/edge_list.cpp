#include "equicolor/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "equicolor/errors.hpp"

namespace equicolor {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
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

long long to_int(std::string_view tok, int line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw InvalidInput("line " + std::to_string(line_no) + ": expected integer, got '" +
                       std::string(tok) + "'");
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n >= 0) throw InvalidInput("line " + std::to_string(line_no) + ": duplicate header");
      if (tok.size() != 4 || tok[1] != "edge")
        throw InvalidInput("line " + std::to_string(line_no) + ": expected 'p edge <n> <m>'");
      n = to_int(tok[2], line_no);
      m = to_int(tok[3], line_no);
      if (n < 0 || m < 0 || n > (1LL << 30))
        throw InvalidInput("line " + std::to_string(line_no) + ": bad header counts");
      edges.reserve(static_cast<std::size_t>(std::min<long long>(m, 1 << 24)));
    } else if (tok[0] == "e") {
      if (n < 0) throw InvalidInput("line " + std::to_string(line_no) + ": edge before header");
      if (tok.size() != 3)
        throw InvalidInput("line " + std::to_string(line_no) + ": expected 'e <u> <v>'");
      long long u = to_int(tok[1], line_no);
      long long v = to_int(tok[2], line_no);
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw InvalidInput("line " + std::to_string(line_no) + ": endpoint out of range");
      edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    } else {
      throw InvalidInput("line " + std::to_string(line_no) + ": unknown record '" +
                         std::string(tok[0]) + "'");
    }
  }
  if (n < 0) throw InvalidInput("missing 'p edge' header");
  if (static_cast<long long>(edges.size()) != m)
    throw InvalidInput("header declares " + std::to_string(m) + " edges, found " +
                       std::to_string(edges.size()));
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph read_edge_list(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return read_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.num_vertices()) + " " +
                    std::to_string(g.num_edges()) + "\n";
  for (Edge e : g.edges()) {
    out += "e ";
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

void write_edge_list(std::ostream& out, const Graph& g) { out << format_edge_list(g); }

void write_edge_list_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  write_edge_list(out, g);
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace equicolor
