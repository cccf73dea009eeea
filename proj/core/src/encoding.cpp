#include "graphsym/encoding.hpp"

#include <array>
#include <string>

#include "graphsym/errors.hpp"

namespace graphsym {

namespace {

constexpr std::array<std::string_view, 3> kStructureNames = {
    "edge_list", "adj_list", "adj_matrix"};
constexpr std::array<std::string_view, 6> kOrderNames = {
    "sorted_source_target",        "sorted_source_shuffled_target",
    "sorted_target_shuffled_source", "shuffled_all",
    "erdos_default",               "verbatim"};
constexpr std::array<std::string_view, 4> kSyntaxNames = {
    "erdos_plain", "json", "networkx_code", "pyg_code"};
constexpr std::array<std::string_view, 4> kAblationNames = {
    "structure_sorted", "shuffles", "replication", "syntaxes"};

template <class Enum, std::size_t N>
Enum lookup(const std::array<std::string_view, N>& names, std::string_view text,
            const char* what) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == text) return static_cast<Enum>(i);
  }
  throw InvalidSpecError(std::string("unknown ") + what + " '" +
                         std::string(text) + "'");
}

EncodingSpec make(Structure s, OrderRule o, bool repl, Syntax x,
                  std::uint64_t seed) {
  EncodingSpec spec{s, o, repl, x, std::nullopt};
  if (is_shuffled(o) && s != Structure::kAdjMatrix) spec.shuffle_seed = seed;
  return spec;
}

}  // namespace

std::string_view to_string(Structure s) noexcept {
  return kStructureNames[static_cast<std::size_t>(s)];
}
std::string_view to_string(OrderRule o) noexcept {
  return kOrderNames[static_cast<std::size_t>(o)];
}
std::string_view to_string(Syntax s) noexcept {
  return kSyntaxNames[static_cast<std::size_t>(s)];
}
std::string_view to_string(Ablation a) noexcept {
  return kAblationNames[static_cast<std::size_t>(a)];
}

Structure parse_structure(std::string_view text) {
  return lookup<Structure>(kStructureNames, text, "structure");
}
OrderRule parse_order_rule(std::string_view text) {
  return lookup<OrderRule>(kOrderNames, text, "order rule");
}
Syntax parse_syntax(std::string_view text) {
  return lookup<Syntax>(kSyntaxNames, text, "syntax");
}
Ablation parse_ablation(std::string_view text) {
  return lookup<Ablation>(kAblationNames, text, "ablation");
}

bool is_shuffled(OrderRule o) noexcept {
  return o == OrderRule::kSortedSourceShuffledTarget ||
         o == OrderRule::kSortedTargetShuffledSource ||
         o == OrderRule::kShuffledAll;
}

std::string EncodingSpec::id() const {
  std::string out(to_string(structure));
  out += '/';
  out += to_string(order);
  out += replicate_undirected ? "/repl/" : "/norepl/";
  out += to_string(syntax);
  return out;
}

EncodingSpec EncodingSpec::from_id(std::string_view id) {
  std::array<std::string_view, 4> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t slash = id.find('/', start);
    if ((slash == std::string_view::npos) != (i == 3)) {
      throw InvalidSpecError("malformed encoding id '" + std::string(id) + "'");
    }
    parts[i] = id.substr(start, slash == std::string_view::npos
                                    ? std::string_view::npos
                                    : slash - start);
    start = slash + 1;
  }
  if (parts[2] != "repl" && parts[2] != "norepl") {
    throw InvalidSpecError("malformed encoding id '" + std::string(id) + "'");
  }
  return EncodingSpec{parse_structure(parts[0]), parse_order_rule(parts[1]),
                      parts[2] == "repl", parse_syntax(parts[3]), std::nullopt};
}

EncodingSpec erdos_baseline() {
  return EncodingSpec{Structure::kEdgeList, OrderRule::kErdosDefault, false,
                      Syntax::kErdosPlain, std::nullopt};
}

void validate(const EncodingSpec& spec, bool directed) {
  if (spec.syntax != Syntax::kErdosPlain &&
      spec.structure != Structure::kEdgeList) {
    throw InvalidSpecError(std::string(to_string(spec.syntax)) +
                           " syntax requires the edge_list structure");
  }
  if (spec.replicate_undirected) {
    if (directed) {
      throw InvalidSpecError("edge replication applies to undirected graphs");
    }
    if (spec.structure == Structure::kAdjMatrix) {
      throw InvalidSpecError("adj_matrix does not support replication");
    }
  }
  if (spec.structure != Structure::kAdjMatrix && is_shuffled(spec.order) &&
      !spec.shuffle_seed) {
    throw InvalidSpecError("order rule " + std::string(to_string(spec.order)) +
                           " needs a shuffle seed");
  }
}

void to_json(nlohmann::json& j, const EncodingSpec& spec) {
  j = nlohmann::json{{"structure", to_string(spec.structure)},
                     {"order", to_string(spec.order)},
                     {"replicate_undirected", spec.replicate_undirected},
                     {"syntax", to_string(spec.syntax)}};
  if (spec.shuffle_seed) j["shuffle_seed"] = *spec.shuffle_seed;
}

void from_json(const nlohmann::json& j, EncodingSpec& spec) {
  if (j.is_string()) {
    spec = EncodingSpec::from_id(j.get<std::string>());
    return;
  }
  spec.structure = parse_structure(j.at("structure").get<std::string>());
  spec.order = parse_order_rule(j.value("order", "erdos_default"));
  spec.replicate_undirected = j.value("replicate_undirected", false);
  spec.syntax = parse_syntax(j.value("syntax", "erdos_plain"));
  if (j.contains("shuffle_seed")) {
    spec.shuffle_seed = j.at("shuffle_seed").get<std::uint64_t>();
  } else {
    spec.shuffle_seed.reset();
  }
}

std::vector<EncodingSpec> enumerate_specs(Ablation ablation,
                                          std::uint64_t seed) {
  using O = OrderRule;
  using S = Structure;
  const auto plain = Syntax::kErdosPlain;
  const std::array<O, 3> shuffles = {O::kSortedSourceShuffledTarget,
                                     O::kSortedTargetShuffledSource,
                                     O::kShuffledAll};
  std::vector<EncodingSpec> out;
  switch (ablation) {
    case Ablation::kStructureSorted:
      for (S s : {S::kEdgeList, S::kAdjList, S::kAdjMatrix}) {
        out.push_back(make(s, O::kSortedSourceTarget, false, plain, seed));
      }
      break;
    case Ablation::kShuffles:
      for (bool repl : {false, true}) {
        for (O o : shuffles) out.push_back(make(S::kEdgeList, o, repl, plain, seed));
      }
      for (O o : shuffles) out.push_back(make(S::kAdjList, o, false, plain, seed));
      break;
    case Ablation::kReplication:
      for (O o : {O::kSortedSourceTarget, O::kSortedSourceShuffledTarget,
                  O::kSortedTargetShuffledSource, O::kShuffledAll}) {
        for (bool repl : {false, true}) {
          out.push_back(make(S::kEdgeList, o, repl, plain, seed));
        }
      }
      break;
    case Ablation::kSyntaxes:
      for (Syntax x : {Syntax::kErdosPlain, Syntax::kJson,
                       Syntax::kNetworkxCode, Syntax::kPygCode}) {
        out.push_back(make(S::kEdgeList, O::kErdosDefault, false, x, seed));
      }
      break;
  }
  return out;
}

std::vector<EncodingSpec> full_spec_grid(bool directed, std::uint64_t seed) {
  std::vector<EncodingSpec> out;
  const std::array<OrderRule, 6> orders = {
      OrderRule::kSortedSourceTarget, OrderRule::kSortedSourceShuffledTarget,
      OrderRule::kSortedTargetShuffledSource, OrderRule::kShuffledAll,
      OrderRule::kErdosDefault, OrderRule::kVerbatim};
  for (Syntax x : {Syntax::kErdosPlain, Syntax::kJson, Syntax::kNetworkxCode,
                   Syntax::kPygCode}) {
    for (OrderRule o : orders) {
      out.push_back(make(Structure::kEdgeList, o, false, x, seed));
      if (!directed) out.push_back(make(Structure::kEdgeList, o, true, x, seed));
    }
  }
  for (OrderRule o : orders) {
    out.push_back(make(Structure::kAdjList, o, false, Syntax::kErdosPlain, seed));
  }
  out.push_back(make(Structure::kAdjMatrix, OrderRule::kSortedSourceTarget,
                     false, Syntax::kErdosPlain, seed));
  return out;
}

}  // namespace graphsym
