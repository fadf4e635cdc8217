#include "curvetrace/graph.hpp"

#include <map>
#include <sstream>
#include <utility>

#include "curvetrace/error.hpp"

namespace curvetrace {

PantsGraph::PantsGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    vertex_lookup_.emplace(vertices_[v].id, v);
    if (vertices_[v].kind == VertexKind::Trinion &&
        trinion_lookup_.emplace(vertices_[v].id, trinion_ids_.size()).second) {
      trinion_ids_.push_back(vertices_[v].id);
    }
  }
  slots_.resize(trinion_ids_.size());
  attachments_.resize(edges_.size());
  internal_.assign(edges_.size(), false);

  for (std::size_t e = 0; e < edges_.size(); ++e) {
    edge_lookup_.emplace(edges_[e].id, e);
    bool both_trinions = true;
    for (int side = 0; side < 2; ++side) {
      const EdgeEnd& end = side == 0 ? edges_[e].end0 : edges_[e].end1;
      Attachment& at = attachments_[e][side];
      at.slot = end.slot;
      auto it = trinion_lookup_.find(end.vertex);
      if (it == trinion_lookup_.end()) {
        both_trinions = false;
        continue;
      }
      at.trinion = it->second;
      if (end.slot >= 1 && end.slot <= 3 && !slots_[it->second][end.slot - 1]) {
        slots_[it->second][end.slot - 1] = SlotUse{e, side};
      }
    }
    internal_[e] = both_trinions;
    if (both_trinions) internal_edges_.push_back(e);
  }
}

std::optional<std::size_t> PantsGraph::edge_index(std::string_view id) const {
  auto it = edge_lookup_.find(std::string(id));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> PantsGraph::trinion_index(std::string_view id) const {
  auto it = trinion_lookup_.find(std::string(id));
  if (it == trinion_lookup_.end()) return std::nullopt;
  return it->second;
}

Attachment PantsGraph::attachment(std::size_t e, int side) const {
  return attachments_.at(e).at(static_cast<std::size_t>(side));
}

SlotUse PantsGraph::slot_use(std::size_t trinion, int slot) const {
  const auto& use = slots_.at(trinion).at(static_cast<std::size_t>(slot - 1));
  if (!use) {
    throw Error(ErrorCode::InvalidInput,
                "slot " + std::to_string(slot) + " of trinion '" + trinion_ids_.at(trinion) +
                    "' is not attached to any edge");
  }
  return *use;
}

std::vector<Violation> validate_graph(const PantsGraph& g) {
  std::vector<Violation> out;
  auto report = [&out](std::string code, std::string message) {
    out.push_back(Violation{std::move(code), std::move(message)});
  };

  std::map<std::string, int> seen_vertices;
  for (const Vertex& v : g.vertices_) {
    if (v.id.empty()) report("empty id", "a vertex has an empty id");
    if (++seen_vertices[v.id] == 2) report("duplicate vertex id", "vertex id '" + v.id + "' is used more than once");
  }
  std::map<std::string, int> seen_edges;
  for (const Edge& e : g.edges_) {
    if (e.id.empty()) report("empty id", "an edge has an empty id");
    if (++seen_edges[e.id] == 2) report("duplicate edge id", "edge id '" + e.id + "' is used more than once");
  }
  if (g.trinion_ids_.empty()) {
    report("no trinion", "at least one trinion is required (Euler characteristic must be negative)");
  }

  // (vertex, slot) -> number of incidences
  std::map<std::pair<std::string, int>, int> incidences;
  std::map<std::string, int> boundary_degree;
  for (const Edge& e : g.edges_) {
    int boundary_ends = 0;
    for (const EdgeEnd* end : {&e.end0, &e.end1}) {
      auto it = g.vertex_lookup_.find(end->vertex);
      if (it == g.vertex_lookup_.end()) {
        report("unknown vertex", "edge '" + e.id + "' references unknown vertex '" + end->vertex + "'");
        continue;
      }
      const Vertex& v = g.vertices_[it->second];
      if (v.kind == VertexKind::Trinion) {
        if (end->slot < 1 || end->slot > 3) {
          report("bad slot", "edge '" + e.id + "' uses slot " + std::to_string(end->slot) +
                                 " on trinion '" + v.id + "' (slots are 1, 2, 3)");
          continue;
        }
      } else {
        ++boundary_ends;
        if (end->slot != 1) {
          report("bad slot", "edge '" + e.id + "' uses slot " + std::to_string(end->slot) +
                                 " on boundary vertex '" + v.id + "' (only slot 1 exists)");
          continue;
        }
        ++boundary_degree[v.id];
      }
      ++incidences[{end->vertex, end->slot}];
    }
    if (boundary_ends == 2) {
      report("boundary-boundary edge", "edge '" + e.id + "' joins two boundary vertices");
    }
    if (e.end0.vertex == e.end1.vertex && e.end0.slot == e.end1.slot) {
      report("slot glued to itself", "edge '" + e.id + "' attaches both ends to slot " +
                                         std::to_string(e.end0.slot) + " of '" + e.end0.vertex + "'");
    }
  }

  for (const Vertex& v : g.vertices_) {
    if (v.kind == VertexKind::Trinion) {
      for (int slot = 1; slot <= 3; ++slot) {
        const int n = incidences[{v.id, slot}];
        if (n == 0) {
          report("unfilled slot", "slot " + std::to_string(slot) + " of trinion '" + v.id + "' is not glued to any edge");
        } else if (n > 1) {
          report("slot used twice", "slot " + std::to_string(slot) + " of trinion '" + v.id + "' has " +
                                        std::to_string(n) + " incident edge ends");
        }
      }
    } else {
      const int n = boundary_degree[v.id];
      if (n != 1) {
        std::ostringstream msg;
        msg << "boundary vertex '" << v.id << "' has " << n << " incident edges (exactly 1 required)";
        report("boundary degree", msg.str());
      }
    }
  }
  return out;
}

void require_valid(const PantsGraph& g) {
  const auto violations = validate_graph(g);
  if (violations.empty()) return;
  std::string msg = "invalid pants graph:";
  for (const auto& v : violations) msg += "\n  " + v.code + ": " + v.message;
  throw Error(ErrorCode::InvalidInput, msg);
}

}  // namespace curvetrace
