#include "treecolor/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace treecolor {

namespace {

/// Content lines: comment and blank lines stripped.
std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

std::vector<long long> parse_ints(const std::string& line) {
  std::istringstream ss(line);
  std::vector<long long> out;
  std::string tok;
  while (ss >> tok) {
    size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size())
      throw ParseError("non-numeric token '" + tok + "' in line: " + line);
    out.push_back(v);
  }
  return out;
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in) {
  std::vector<std::string> lines = content_lines(in);
  if (lines.empty()) throw ParseError("missing header line \"n m r\"");
  std::vector<long long> header = parse_ints(lines[0]);
  if (header.size() != 3)
    throw ParseError("header must be three integers \"n m r\", got: " +
                     lines[0]);
  const long long n = header[0], m = header[1], r = header[2];
  if (n < 0 || m < 0 || r < 1) throw ParseError("header values out of range");
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError("expected " + std::to_string(m) + " edge lines, found " +
                     std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    std::vector<long long> vals = parse_ints(lines[1 + i]);
    if (static_cast<long long>(vals.size()) != r)
      throw ParseError("edge line " + std::to_string(i) + " has " +
                       std::to_string(vals.size()) + " entries, expected " +
                       std::to_string(r));
    Edge e;
    for (long long v : vals) e.push_back(static_cast<int>(v));
    edges.push_back(std::move(e));
  }
  try {
    return Hypergraph(static_cast<int>(n), static_cast<int>(r),
                      std::move(edges));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
}

Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << h.vertex_count() << ' ' << h.edge_count() << ' ' << h.uniformity()
      << '\n';
  for (const Edge& e : h.edges()) {
    for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

Certificate parse_certificate(std::istream& in) {
  std::vector<std::string> lines = content_lines(in);
  if (lines.empty()) throw ParseError("empty certificate");
  std::istringstream head(lines[0]);
  std::string tag;
  head >> tag;
  if (tag == "COLORING") {
    long long t;
    if (!(head >> t) || t < 0) throw ParseError("COLORING needs a palette size");
    std::string extra;
    if (head >> extra) throw ParseError("trailing tokens after palette size");
    if (lines.size() > 2) throw ParseError("COLORING needs one line of colors");
    Coloring c;
    c.palette = static_cast<int>(t);
    if (lines.size() == 2)
      for (long long v : parse_ints(lines[1]))
        c.colors.push_back(static_cast<int>(v));
    return Certificate{std::move(c)};
  }
  if (tag == "EMBEDDING") {
    std::string extra;
    if (head >> extra) throw ParseError("trailing tokens after EMBEDDING");
    Embedding emb;
    bool in_edges = false;
    for (size_t i = 1; i < lines.size(); ++i) {
      std::vector<long long> vals = parse_ints(lines[i]);
      if (vals.size() != 2)
        throw ParseError("embedding lines hold two integers, got: " + lines[i]);
      if (i > 1 && vals[0] == 0 && !in_edges) in_edges = true;
      std::vector<int>& dst = in_edges ? emb.edge_map : emb.vertex_map;
      if (vals[0] != static_cast<long long>(dst.size()))
        throw ParseError("embedding rows must be consecutive from 0");
      dst.push_back(static_cast<int>(vals[1]));
    }
    if (emb.vertex_map.empty() || emb.edge_map.empty())
      throw ParseError("embedding needs a vertex section and an edge section");
    return Certificate{std::move(emb)};
  }
  throw ParseError("unknown certificate tag: " + tag);
}

Certificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  return parse_certificate(in);
}

std::string serialize_certificate(const Certificate& cert) {
  std::ostringstream out;
  if (cert.is_coloring()) {
    const Coloring& c = cert.coloring();
    out << "COLORING " << c.palette << '\n';
    for (size_t i = 0; i < c.colors.size(); ++i)
      out << (i ? " " : "") << c.colors[i];
    out << '\n';
  } else {
    const Embedding& emb = cert.embedding();
    out << "EMBEDDING\n";
    for (size_t v = 0; v < emb.vertex_map.size(); ++v)
      out << v << ' ' << emb.vertex_map[v] << '\n';
    for (size_t e = 0; e < emb.edge_map.size(); ++e)
      out << e << ' ' << emb.edge_map[e] << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Hypergraph load_hypergraph(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_hypergraph(text);
  } catch (const ParseError& ex) {
    throw ParseError(path + ": " + ex.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

}  // namespace treecolor
