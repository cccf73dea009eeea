#include "graphsym/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "graphsym/errors.hpp"
#include "graphsym/permutation.hpp"
#include "graphsym/rng.hpp"

namespace graphsym {

namespace {

constexpr std::string_view kUndirectedHeader =
    "Here is an undirected graph containing nodes from 1 to ";
constexpr std::string_view kDirectedHeader =
    "Here is a directed graph containing nodes from 1 to ";
constexpr std::string_view kEdgesPlain = " The edges are: ";
constexpr std::string_view kEdgesReplicated =
    " The edges are (each undirected edge is listed in both directions): ";
constexpr std::string_view kAdjList = " The adjacency list is:";
constexpr std::string_view kMatrixBinary =
    " This is the binary adjacency matrix representation of the graph where "
    "1 denotes an edge between nodes:\n";
constexpr std::string_view kMatrixWeighted =
    " This is the weighted adjacency matrix representation of the graph where "
    "each entry is the weight of the edge between nodes and 0 denotes no "
    "edge:\n";
constexpr std::string_view kJson =
    " This is the JSON form representation of the graph:\n";
constexpr std::string_view kNetworkx =
    " This is the NetworkX code representation of the graph:\n";
constexpr std::string_view kPyg =
    " This is the PyG code representation of the graph:\n";

constexpr std::size_t kJsonLineLimit = 120;

std::string header(const Graph& g) {
  std::string out(g.directed() ? kDirectedHeader : kUndirectedHeader);
  out += std::to_string(g.node_count());
  out += '.';
  return out;
}

const std::string& weight_text(const Graph& g, NodeId u, NodeId v) {
  return g.edges()[*g.find_edge(u, v)].weight->text();
}

Edge reversed(const Edge& e) { return Edge{e.target, e.source, e.weight}; }

bool by_source_target(const Edge& a, const Edge& b) {
  return std::pair(a.source, a.target) < std::pair(b.source, b.target);
}

bool by_target_source(const Edge& a, const Edge& b) {
  return std::pair(a.target, a.source) < std::pair(b.target, b.source);
}

// Shuffles each maximal run of items sharing the same key.
template <class T, class Key>
void shuffle_runs(std::vector<T>& items, Key key, RngStream& rng) {
  std::size_t begin = 0;
  while (begin < items.size()) {
    std::size_t end = begin + 1;
    while (end < items.size() && key(items[end]) == key(items[begin])) ++end;
    rng.shuffle(std::span<T>(items.data() + begin, end - begin));
    begin = end;
  }
}

// The directed pairs an edge-list style encoding emits, in order.
std::vector<Edge> emitted_edges(const Graph& g, const EncodingSpec& spec) {
  const bool replicate = spec.replicate_undirected && !g.directed();
  std::vector<Edge> base;
  switch (spec.order) {
    case OrderRule::kVerbatim:
      base.assign(g.edges().begin(), g.edges().end());
      break;
    case OrderRule::kErdosDefault:
      base = bfs_default_order(g, 1);
      break;
    default:
      base = canonical_edge_list(g);
      break;
  }
  std::vector<Edge> out;
  out.reserve(replicate ? 2 * base.size() : base.size());
  for (const Edge& e : base) {
    out.push_back(e);
    if (replicate) out.push_back(reversed(e));
  }

  RngStream rng(spec.shuffle_seed.value_or(0));
  switch (spec.order) {
    case OrderRule::kSortedSourceTarget:
      std::sort(out.begin(), out.end(), by_source_target);
      break;
    case OrderRule::kSortedSourceShuffledTarget:
      std::sort(out.begin(), out.end(), by_source_target);
      shuffle_runs(out, [](const Edge& e) { return e.source; }, rng);
      break;
    case OrderRule::kSortedTargetShuffledSource:
      std::sort(out.begin(), out.end(), by_target_source);
      shuffle_runs(out, [](const Edge& e) { return e.target; }, rng);
      break;
    case OrderRule::kShuffledAll:
      rng.shuffle(std::span<Edge>(out));
      if (!g.directed() && !replicate) {
        for (Edge& e : out) {
          if (rng.bounded(2) == 1) std::swap(e.source, e.target);
        }
      }
      break;
    case OrderRule::kErdosDefault:
    case OrderRule::kVerbatim:
      break;
  }
  return out;
}

std::string edge_tuple(const Edge& e) {
  std::string out = "(" + std::to_string(e.source) + ", " +
                    std::to_string(e.target);
  if (e.weight) out += ", " + e.weight->text();
  out += ')';
  return out;
}

std::string render_edge_list(const Graph& g, const EncodingSpec& spec) {
  const auto edges = emitted_edges(g, spec);
  std::string out = header(g);
  out += spec.replicate_undirected ? kEdgesReplicated : kEdgesPlain;
  if (edges.empty()) return out + "none.";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i > 0) out += ", ";
    out += edge_tuple(edges[i]);
  }
  out += '.';
  return out;
}

std::string render_adj_list(const Graph& g, const EncodingSpec& spec) {
  const int n = g.node_count();
  std::vector<std::vector<NodeId>> nbrs(static_cast<std::size_t>(n) + 1);
  if (spec.order == OrderRule::kVerbatim ||
      spec.order == OrderRule::kErdosDefault) {
    const auto base = spec.order == OrderRule::kVerbatim
                          ? std::vector<Edge>(g.edges().begin(), g.edges().end())
                          : bfs_default_order(g, 1);
    for (const Edge& e : base) {
      nbrs[e.source].push_back(e.target);
      if (!g.directed()) nbrs[e.target].push_back(e.source);
    }
  } else {
    for (NodeId u = 1; u <= n; ++u) {
      auto out = g.neighbors(u);
      nbrs[u].assign(out.begin(), out.end());
    }
  }
  std::vector<NodeId> lines(static_cast<std::size_t>(n));
  std::iota(lines.begin(), lines.end(), 1);

  RngStream rng(spec.shuffle_seed.value_or(0));
  const bool shuffle_lines = spec.order == OrderRule::kSortedTargetShuffledSource ||
                             spec.order == OrderRule::kShuffledAll;
  const bool shuffle_nbrs = spec.order == OrderRule::kSortedSourceShuffledTarget ||
                            spec.order == OrderRule::kShuffledAll;
  if (shuffle_lines) rng.shuffle(std::span<NodeId>(lines));
  if (shuffle_nbrs) {
    for (NodeId u = 1; u <= n; ++u) rng.shuffle(std::span<NodeId>(nbrs[u]));
  }

  std::string out = header(g);
  out += kAdjList;
  const std::string_view verb = g.directed() ? " points to (" : " is connected to (";
  for (NodeId u : lines) {
    out += "\n- node ";
    out += std::to_string(u);
    out += verb;
    for (std::size_t i = 0; i < nbrs[u].size(); ++i) {
      if (i > 0) out += ", ";
      out += std::to_string(nbrs[u][i]);
      if (g.weighted()) {
        out += " with weight ";
        out += weight_text(g, u, nbrs[u][i]);
      }
    }
    out += "),";
  }
  return out;
}

std::string render_adj_matrix(const Graph& g) {
  const int n = g.node_count();
  std::string out = header(g);
  out += g.weighted() ? kMatrixWeighted : kMatrixBinary;
  out += '[';
  for (NodeId u = 1; u <= n; ++u) {
    if (u > 1) out += ",\n ";
    out += '[';
    for (NodeId v = 1; v <= n; ++v) {
      if (v > 1) out += ", ";
      if (!g.has_edge(u, v)) {
        out += '0';
      } else if (g.weighted()) {
        const Weight& w = *g.edges()[*g.find_edge(u, v)].weight;
        if (w.value() == 0.0) {
          throw InvalidSpecError(
              "zero edge weight cannot be shown in a weighted adjacency matrix");
        }
        out += w.text();
      } else {
        out += '1';
      }
    }
    out += ']';
  }
  out += ']';
  return out;
}

// Greedy wrap used by the json syntax: items separated by ", ", no line longer
// than kJsonLineLimit, continuation lines indented by four spaces.
void append_wrapped(std::string& out, std::string_view prefix,
                    const std::vector<std::string>& items) {
  if (items.empty()) {
    out += prefix;
    out += "[],\n";
    return;
  }
  std::string line(prefix);
  line += "[ ";
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::string token = items[i];
    token += i + 1 < items.size() ? "," : " ],";
    if (i == 0) {
      line += token;
    } else if (line.size() + 1 + token.size() > kJsonLineLimit) {
      out += line;
      out += '\n';
      line = "    " + token;
    } else {
      line += ' ';
      line += token;
    }
  }
  out += line;
  out += '\n';
}

std::string render_json(const Graph& g, const EncodingSpec& spec) {
  std::vector<std::string> nodes;
  for (NodeId u = 1; u <= g.node_count(); ++u) {
    nodes.push_back("\"" + std::to_string(u) + "\"");
  }
  std::vector<std::string> edges;
  for (const Edge& e : emitted_edges(g, spec)) {
    std::string item = "[ " + std::to_string(e.source) + ", " +
                       std::to_string(e.target);
    if (e.weight) item += ", " + e.weight->text();
    edges.push_back(item + " ]");
  }
  std::string out = header(g);
  out += kJson;
  out += "{\n";
  append_wrapped(out, "  \"nodes\": ", nodes);
  append_wrapped(out, "  \"edges\": ", edges);
  out += g.directed() ? "  \"directed\": true\n}" : "  \"directed\": false\n}";
  return out;
}

std::string render_networkx(const Graph& g, const EncodingSpec& spec) {
  std::string out = header(g);
  out += kNetworkx;
  out += "import networkx as nx\nG = nx.";
  out += g.directed() ? "DiGraph()\n" : "Graph()\n";
  out += "G.add_nodes_from([";
  for (NodeId u = 1; u <= g.node_count(); ++u) {
    if (u > 1) out += ", ";
    out += std::to_string(u);
  }
  out += "])\n";
  out += g.weighted() ? "G.add_weighted_edges_from([" : "G.add_edges_from([";
  const auto edges = emitted_edges(g, spec);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i > 0) out += ", ";
    out += edge_tuple(edges[i]);
  }
  out += "])";
  return out;
}

std::string render_pyg(const Graph& g, const EncodingSpec& spec) {
  std::vector<Edge> columns;
  for (const Edge& e : emitted_edges(g, spec)) {
    columns.push_back(e);
    if (!g.directed() && !spec.replicate_undirected) {
      columns.push_back(reversed(e));
    }
  }
  auto join = [&](auto field) {
    std::string row;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i > 0) row += ", ";
      row += field(columns[i]);
    }
    return row;
  };
  std::string out = header(g);
  out += kPyg;
  out += "from torch_geometric.data import Data\nimport torch\n";
  out += "edge_index = torch.tensor([[";
  out += join([](const Edge& e) { return std::to_string(e.source); });
  out += "], [";
  out += join([](const Edge& e) { return std::to_string(e.target); });
  out += "]], dtype=torch.long).t().contiguous()\n";
  if (g.weighted()) {
    out += "edge_attr = torch.tensor([";
    out += join([](const Edge& e) { return e.weight->text(); });
    out += "], dtype=torch.float)\n";
    out += "data = Data(edge_index=edge_index, edge_attr=edge_attr)";
  } else {
    out += "data = Data(edge_index=edge_index)";
  }
  return out;
}

// -- parsing ----------------------------------------------------------------

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t pos) : text_(text), pos_(pos) {}

  std::size_t pos() const noexcept { return pos_; }

  bool try_lit(std::string_view lit) {
    if (text_.substr(pos_).starts_with(lit)) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view lit) {
    if (!try_lit(lit)) fail("expected '" + std::string(lit) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\n' || text_[pos_] == '\t' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  // Expects `lit` after optional whitespace.
  void token(std::string_view lit) {
    skip_ws();
    expect(lit);
  }

  bool try_token(std::string_view lit) {
    skip_ws();
    return try_lit(lit);
  }

  long long read_int() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      ++pos_;
    }
    long long value = 0;
    auto [ptr, ec] =
        std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (start == pos_ || ec != std::errc{}) {
      pos_ = start;
      fail("expected a node id");
    }
    (void)ptr;
    return value;
  }

  std::string read_decimal() {
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() &&
           ((text_[pos_] >= '0' && text_[pos_] <= '9') || text_[pos_] == '.')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_;
};

class EdgeCollector {
 public:
  EdgeCollector(int n, bool directed) : n_(n), directed_(directed) {}

  void add(long long u, long long v, std::optional<std::string> weight,
           std::size_t offset) {
    for (long long x : {u, v}) {
      if (x < 1 || x > n_) {
        throw ConsistencyError("node id " + std::to_string(x) +
                               " outside 1.." + std::to_string(n_) +
                               " (at byte " + std::to_string(offset) + ")");
      }
    }
    if (u == v) {
      throw ConsistencyError("self-loop at node " + std::to_string(u) +
                             " (at byte " + std::to_string(offset) + ")");
    }
    const auto a = static_cast<NodeId>(u);
    const auto b = static_cast<NodeId>(v);
    const auto key = directed_ ? std::pair(a, b)
                               : std::pair(std::min(a, b), std::max(a, b));
    std::optional<Weight> w;
    if (weight) {
      try {
        w = Weight::parse(*weight);
      } catch (const InvalidGraphError& e) {
        throw ParseError(e.what(), offset);
      }
    }
    auto [it, fresh] = seen_.emplace(key, edges_.size());
    if (!fresh) {
      if (!(edges_[it->second].weight == w)) {
        throw ConsistencyError("conflicting weights for edge (" +
                               std::to_string(u) + ", " + std::to_string(v) +
                               ")");
      }
      return;
    }
    edges_.push_back(Edge{a, b, std::move(w)});
  }

  Graph build() && {
    try {
      return Graph(n_, directed_, std::move(edges_));
    } catch (const InvalidGraphError& e) {
      throw ConsistencyError(e.what());
    }
  }

 private:
  int n_;
  bool directed_;
  std::vector<Edge> edges_;
  std::map<std::pair<NodeId, NodeId>, std::size_t> seen_;
};

void parse_tuple(Cursor& c, EdgeCollector& edges) {
  const std::size_t at = c.pos();
  c.expect("(");
  const long long u = c.read_int();
  c.expect(", ");
  const long long v = c.read_int();
  std::optional<std::string> w;
  if (c.try_lit(", ")) w = c.read_decimal();
  c.expect(")");
  edges.add(u, v, std::move(w), at);
}

void parse_plain_edges(Cursor& c, EdgeCollector& edges) {
  if (c.try_lit("none.")) return;
  for (;;) {
    parse_tuple(c, edges);
    if (c.try_lit(", ")) continue;
    c.expect(".");
    return;
  }
}

void parse_adj_list(Cursor& c, EdgeCollector& edges, bool directed) {
  const std::string_view verb = directed ? " points to (" : " is connected to (";
  while (c.try_lit("\n- node ")) {
    const std::size_t at = c.pos();
    const long long u = c.read_int();
    c.expect(verb);
    if (!c.try_lit(")")) {
      for (;;) {
        const long long v = c.read_int();
        std::optional<std::string> w;
        if (c.try_lit(" with weight ")) w = c.read_decimal();
        edges.add(u, v, std::move(w), at);
        if (c.try_lit(", ")) continue;
        c.expect(")");
        break;
      }
    }
    c.expect(",");
  }
}

void parse_matrix(Cursor& c, EdgeCollector& edges, int n, bool directed,
                  bool weighted) {
  std::vector<std::vector<std::string>> rows;
  const std::size_t start = c.pos();
  c.expect("[");
  do {
    c.expect("[");
    rows.emplace_back();
    do {
      rows.back().push_back(weighted ? c.read_decimal()
                                     : std::to_string(c.read_int()));
    } while (c.try_lit(", "));
    c.expect("]");
  } while (c.try_lit(",\n "));
  c.expect("]");
  if (static_cast<int>(rows.size()) != n) {
    throw ConsistencyError("adjacency matrix has " + std::to_string(rows.size()) +
                           " rows, header says " + std::to_string(n));
  }
  auto is_zero = [](const std::string& s) {
    return s.find_first_not_of("-+0.") == std::string::npos;
  };
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw ConsistencyError("adjacency matrix row " + std::to_string(i + 1) +
                             " has " + std::to_string(rows[i].size()) +
                             " entries");
    }
    if (!weighted) {
      for (const auto& cell : rows[i]) {
        if (cell != "0" && cell != "1") {
          throw ParseError("binary adjacency matrix entry '" + cell + "'", start);
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!is_zero(rows[i][i])) {
      throw ConsistencyError("adjacency matrix has a self-loop at node " +
                             std::to_string(i + 1));
    }
    for (int j = 0; j < n; ++j) {
      if (i == j || is_zero(rows[i][j])) continue;
      if (!directed) {
        if (rows[j][i] != rows[i][j]) {
          throw ConsistencyError("undirected adjacency matrix is not symmetric");
        }
        if (j < i) continue;
      }
      std::optional<std::string> w;
      if (weighted) w = rows[i][j];
      edges.add(i + 1, j + 1, std::move(w), start);
    }
  }
}

void parse_json(Cursor& c, EdgeCollector& edges, int n, bool directed) {
  c.token("{");
  bool saw_nodes = false;
  bool saw_edges = false;
  bool saw_directed = false;
  do {
    c.token("\"");
    if (c.try_lit("nodes\"")) {
      c.token(":");
      c.token("[");
      std::set<long long> ids;
      if (!c.try_token("]")) {
        do {
          c.token("\"");
          ids.insert(c.read_int());
          c.expect("\"");
        } while (c.try_token(","));
        c.token("]");
      }
      if (static_cast<int>(ids.size()) != n || *ids.begin() != 1 ||
          *ids.rbegin() != n) {
        throw ConsistencyError("json node list does not match nodes 1.." +
                               std::to_string(n));
      }
      saw_nodes = true;
    } else if (c.try_lit("edges\"")) {
      c.token(":");
      c.token("[");
      if (!c.try_token("]")) {
        do {
          c.token("[");
          const std::size_t at = c.pos();
          c.skip_ws();
          const long long u = c.read_int();
          c.token(",");
          c.skip_ws();
          const long long v = c.read_int();
          std::optional<std::string> w;
          if (c.try_token(",")) {
            c.skip_ws();
            w = c.read_decimal();
          }
          c.token("]");
          edges.add(u, v, std::move(w), at);
        } while (c.try_token(","));
        c.token("]");
      }
      saw_edges = true;
    } else if (c.try_lit("directed\"")) {
      c.token(":");
      c.skip_ws();
      bool flag = false;
      if (c.try_lit("true")) {
        flag = true;
      } else {
        c.expect("false");
      }
      if (flag != directed) {
        throw ConsistencyError("json directed flag contradicts the header");
      }
      saw_directed = true;
    } else {
      c.fail("unknown json key");
    }
  } while (c.try_token(","));
  c.token("}");
  if (!saw_nodes || !saw_edges || !saw_directed) {
    c.fail("json block misses one of nodes/edges/directed");
  }
}

void parse_networkx(Cursor& c, EdgeCollector& edges, int n, bool directed) {
  c.expect("import networkx as nx\nG = nx.");
  c.expect(directed ? "DiGraph()\n" : "Graph()\n");
  c.expect("G.add_nodes_from([");
  long long count = 0;
  if (!c.try_lit("])")) {
    do {
      const long long id = c.read_int();
      if (id != ++count) {
        throw ConsistencyError("add_nodes_from does not list 1.." +
                               std::to_string(n) + " in order");
      }
    } while (c.try_lit(", "));
    c.expect("])");
  }
  if (count != n) {
    throw ConsistencyError("add_nodes_from lists " + std::to_string(count) +
                           " nodes, header says " + std::to_string(n));
  }
  c.expect("\nG.add_");
  if (!c.try_lit("weighted_edges_from([")) c.expect("edges_from([");
  if (c.try_lit("])")) return;
  do {
    parse_tuple(c, edges);
  } while (c.try_lit(", "));
  c.expect("])");
}

template <class Read>
auto parse_list(Cursor& c, Read read) {
  std::vector<decltype(read())> out;
  if (c.try_lit("]")) return out;
  do {
    out.push_back(read());
  } while (c.try_lit(", "));
  c.expect("]");
  return out;
}

void parse_pyg(Cursor& c, EdgeCollector& edges) {
  c.expect("from torch_geometric.data import Data\nimport torch\n");
  c.expect("edge_index = torch.tensor([[");
  const std::size_t at = c.pos();
  const auto sources = parse_list(c, [&] { return c.read_int(); });
  c.expect(", [");
  const auto targets = parse_list(c, [&] { return c.read_int(); });
  c.expect("], dtype=torch.long).t().contiguous()\n");
  std::vector<std::string> weights;
  const bool weighted = c.try_lit("edge_attr = torch.tensor([");
  if (weighted) {
    weights = parse_list(c, [&] { return c.read_decimal(); });
    c.expect(", dtype=torch.float)\n");
  }
  c.expect(weighted ? "data = Data(edge_index=edge_index, edge_attr=edge_attr)"
                    : "data = Data(edge_index=edge_index)");
  if (sources.size() != targets.size() ||
      (weighted && weights.size() != sources.size())) {
    throw ConsistencyError("edge_index rows have different lengths");
  }
  for (std::size_t i = 0; i < sources.size(); ++i) {
    std::optional<std::string> w;
    if (weighted) w = weights[i];
    edges.add(sources[i], targets[i], std::move(w), at);
  }
}

}  // namespace

RenderedGraphBlock render(const Graph& g, const EncodingSpec& spec) {
  validate(spec, g.directed());
  std::string text;
  switch (spec.structure) {
    case Structure::kEdgeList:
      switch (spec.syntax) {
        case Syntax::kErdosPlain:
          text = render_edge_list(g, spec);
          break;
        case Syntax::kJson:
          text = render_json(g, spec);
          break;
        case Syntax::kNetworkxCode:
          text = render_networkx(g, spec);
          break;
        case Syntax::kPygCode:
          text = render_pyg(g, spec);
          break;
      }
      break;
    case Structure::kAdjList:
      text = render_adj_list(g, spec);
      break;
    case Structure::kAdjMatrix:
      text = render_adj_matrix(g);
      break;
  }
  return RenderedGraphBlock{std::move(text), spec, g.node_count()};
}

ParsedGraph parse(std::string_view text) {
  const std::size_t undirected_at = text.find(kUndirectedHeader);
  const std::size_t directed_at = text.find(kDirectedHeader);
  if (undirected_at == std::string_view::npos &&
      directed_at == std::string_view::npos) {
    throw ParseError("no graph header found", 0);
  }
  const bool directed = undirected_at == std::string_view::npos ||
                        (directed_at != std::string_view::npos &&
                         directed_at < undirected_at);
  Cursor c(text, directed ? directed_at : undirected_at);
  c.expect(directed ? kDirectedHeader : kUndirectedHeader);
  const long long n_raw = c.read_int();
  if (n_raw < 1 || n_raw > 1'000'000) c.fail("node count out of range");
  const int n = static_cast<int>(n_raw);
  c.expect(".");

  EdgeCollector edges(n, directed);
  Structure structure = Structure::kEdgeList;
  Syntax syntax = Syntax::kErdosPlain;
  bool replicated = false;
  if (c.try_lit(kEdgesPlain)) {
    parse_plain_edges(c, edges);
  } else if (c.try_lit(kEdgesReplicated)) {
    replicated = true;
    parse_plain_edges(c, edges);
  } else if (c.try_lit(kAdjList)) {
    structure = Structure::kAdjList;
    parse_adj_list(c, edges, directed);
  } else if (c.try_lit(kMatrixBinary)) {
    structure = Structure::kAdjMatrix;
    parse_matrix(c, edges, n, directed, false);
  } else if (c.try_lit(kMatrixWeighted)) {
    structure = Structure::kAdjMatrix;
    parse_matrix(c, edges, n, directed, true);
  } else if (c.try_lit(kJson)) {
    syntax = Syntax::kJson;
    parse_json(c, edges, n, directed);
  } else if (c.try_lit(kNetworkx)) {
    syntax = Syntax::kNetworkxCode;
    parse_networkx(c, edges, n, directed);
  } else if (c.try_lit(kPyg)) {
    syntax = Syntax::kPygCode;
    parse_pyg(c, edges);
  } else {
    c.fail("unrecognized graph encoding");
  }
  return ParsedGraph{std::move(edges).build(), structure, syntax, replicated};
}

}  // namespace graphsym
