#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace graphsym {

enum class Structure { kEdgeList, kAdjList, kAdjMatrix };

enum class OrderRule {
  kSortedSourceTarget,
  kSortedSourceShuffledTarget,
  kSortedTargetShuffledSource,
  kShuffledAll,
  kErdosDefault,
  kVerbatim,
};

enum class Syntax { kErdosPlain, kJson, kNetworkxCode, kPygCode };

std::string_view to_string(Structure s) noexcept;
std::string_view to_string(OrderRule o) noexcept;
std::string_view to_string(Syntax s) noexcept;
Structure parse_structure(std::string_view text);
OrderRule parse_order_rule(std::string_view text);
Syntax parse_syntax(std::string_view text);

bool is_shuffled(OrderRule o) noexcept;

/// One point of the serialization space. Together with the graph it fully
/// determines the rendered text.
struct EncodingSpec {
  Structure structure = Structure::kEdgeList;
  OrderRule order = OrderRule::kErdosDefault;
  bool replicate_undirected = false;
  Syntax syntax = Syntax::kErdosPlain;
  std::optional<std::uint64_t> shuffle_seed;

  /// Stable identifier without the seed, e.g.
  /// "edge_list/sorted_source_target/repl/json".
  std::string id() const;
  static EncodingSpec from_id(std::string_view id);

  friend bool operator==(const EncodingSpec&, const EncodingSpec&) = default;
};

/// Default baseline: the Erdos-style edge list.
EncodingSpec erdos_baseline();

/// Throws InvalidSpecError if `spec` cannot be rendered for a graph with the
/// given directedness.
void validate(const EncodingSpec& spec, bool directed);

void to_json(nlohmann::json& j, const EncodingSpec& spec);
void from_json(const nlohmann::json& j, EncodingSpec& spec);

enum class Ablation { kStructureSorted, kShuffles, kReplication, kSyntaxes };

std::string_view to_string(Ablation a) noexcept;
Ablation parse_ablation(std::string_view text);

/// Specs of one ablation axis. Shuffled variants get `seed` as their
/// shuffle seed.
std::vector<EncodingSpec> enumerate_specs(Ablation ablation,
                                          std::uint64_t seed = 0);

/// Every distinct valid spec for the given directedness. Replication is
/// omitted for adjacency lists, where it does not change the text.
std::vector<EncodingSpec> full_spec_grid(bool directed, std::uint64_t seed = 0);

}  // namespace graphsym
