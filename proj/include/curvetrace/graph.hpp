#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace curvetrace {

enum class VertexKind { Trinion, Boundary };

struct Vertex {
  std::string id;
  VertexKind kind = VertexKind::Trinion;
};

struct EdgeEnd {
  std::string vertex;
  int slot = 1;
};

/// An annulus of the decomposition. `reversed` selects the conjugate
/// parametrization of the annulus circle (crossing indices i -> m-1-i).
struct Edge {
  std::string id;
  EdgeEnd end0;
  EdgeEnd end1;
  bool reversed = false;
};

struct Violation {
  std::string code;
  std::string message;
};

/// Where an annulus end attaches: a trinion slot, or a boundary vertex.
struct Attachment {
  std::optional<std::size_t> trinion;  // trinion index; empty for boundary
  int slot = 1;
};

/// Which annulus end sits in a given trinion slot.
struct SlotUse {
  std::size_t edge = 0;
  int side = 0;  // 0 => end0, 1 => end1
};

/// Decorated trivalent graph of a pants decomposition.
///
/// Trinions are numbered in the order they appear in `vertices`, edges in
/// the order of `edges`; that edge order is also the order used for
/// lexicographic comparison of Dehn parameters. The indexed accessors are
/// meaningful only for graphs with no validation violations.
class PantsGraph {
 public:
  PantsGraph() = default;
  PantsGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t trinion_count() const { return trinion_ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  const std::string& trinion_id(std::size_t t) const { return trinion_ids_.at(t); }

  std::optional<std::size_t> edge_index(std::string_view id) const;
  std::optional<std::size_t> trinion_index(std::string_view id) const;

  bool is_internal(std::size_t e) const { return internal_.at(e); }
  const std::vector<std::size_t>& internal_edges() const { return internal_edges_; }
  Attachment attachment(std::size_t e, int side) const;
  SlotUse slot_use(std::size_t trinion, int slot) const;
  std::size_t slot_edge(std::size_t trinion, int slot) const { return slot_use(trinion, slot).edge; }

  /// Euler characteristic, -(number of trinions).
  long euler_characteristic() const { return -static_cast<long>(trinion_count()); }

 private:
  friend std::vector<Violation> validate_graph(const PantsGraph& g);

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;

  std::vector<std::string> trinion_ids_;
  std::unordered_map<std::string, std::size_t> vertex_lookup_;
  std::unordered_map<std::string, std::size_t> trinion_lookup_;
  std::unordered_map<std::string, std::size_t> edge_lookup_;
  std::vector<std::array<std::optional<SlotUse>, 3>> slots_;
  std::vector<std::array<Attachment, 2>> attachments_;
  std::vector<bool> internal_;
  std::vector<std::size_t> internal_edges_;
};

/// All violated structural invariants; empty means the graph is valid.
std::vector<Violation> validate_graph(const PantsGraph& g);

/// Throws Error(InvalidInput) listing the violations when g is invalid.
void require_valid(const PantsGraph& g);

}  // namespace curvetrace
