#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "treecolor/embedder.hpp"
#include "treecolor/hypergraph.hpp"

namespace treecolor {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Text format: header line "n m r", then m lines of r vertex indices.
/// Lines starting with '#' and blank lines are ignored on input and never
/// produced on output, so parse(serialize(h)) == h for every h.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(const std::string& text);
std::string serialize_hypergraph(const Hypergraph& h);

/// Certificate format: either
///   COLORING t
///   c_0 c_1 ... c_{n-1}
/// or
///   EMBEDDING
///   <pattern vertex> <host vertex>     (one line per pattern vertex, 0,1,...)
///   <pattern edge> <host edge>         (one line per pattern edge, 0,1,...)
/// The edge section starts where the first column resets to 0.
Certificate parse_certificate(std::istream& in);
Certificate parse_certificate(const std::string& text);
std::string serialize_certificate(const Certificate& cert);

/// File helpers; failures to open or read map to ParseError.
Hypergraph load_hypergraph(const std::string& path);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace treecolor
