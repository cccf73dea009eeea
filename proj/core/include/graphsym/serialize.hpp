#pragma once

#include <string>
#include <string_view>

#include "graphsym/encoding.hpp"
#include "graphsym/graph.hpp"

namespace graphsym {

struct RenderedGraphBlock {
  std::string text;
  EncodingSpec spec;
  int n = 0;
};

/// Renders the graph description block of a prompt. Byte-deterministic in
/// (g, spec); see docs/formats.md for every template.
RenderedGraphBlock render(const Graph& g, const EncodingSpec& spec);

struct ParsedGraph {
  Graph graph;
  Structure structure;
  Syntax syntax;
  bool replicated = false;
};

/// Parses a block produced by render(). The block may be embedded in a
/// longer prompt; parsing starts at the "Here is ..." header. Edges keep
/// first-appearance order; the reverse copies of undirected edges are
/// dropped. Throws ParseError (with byte offset) or ConsistencyError.
ParsedGraph parse(std::string_view text);

}  // namespace graphsym
