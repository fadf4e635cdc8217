#include "curvetrace/route.hpp"

#include <stdexcept>
#include <string>

#include "curvetrace/error.hpp"

namespace curvetrace {

namespace {

int next_slot(int s) { return s % 3 + 1; }

int floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return static_cast<int>(q);
}

struct ArcRecord {
  int slot_a = 0;
  int pos_a = 0;
  int slot_b = 0;
  int pos_b = 0;
  int encircled = 0;
  int parallel_index = 0;
};

struct Endpoint {
  int arc = -1;
  int end = 0;  // 0 => (slot_a, pos_a), 1 => (slot_b, pos_b)
};

// Arcs of one trinion plus, per slot, the arc endpoint at each position.
struct TrinionLayout {
  std::vector<ArcRecord> arcs;
  std::array<std::vector<Endpoint>, 3> slots;

  // Pairs a block of `count` positions on slot a (from a0) with one on
  // slot b (from b0) in reversed order, innermost to innermost.
  void pair_blocks(int slot_a, int a0, int slot_b, int b0, int count, int encircled) {
    for (int r = 0; r < count; ++r) {
      ArcRecord arc{slot_a, a0 + count - 1 - r, slot_b, b0 + r, encircled, r};
      const int id = static_cast<int>(arcs.size());
      arcs.push_back(arc);
      slots[slot_a - 1].at(arc.pos_a) = Endpoint{id, 0};
      slots[slot_b - 1].at(arc.pos_b) = Endpoint{id, 1};
    }
  }
};

TrinionLayout layout_trinion(const std::array<int, 3>& m) {
  const TrinionArcPattern p = arc_pattern(m[0], m[1], m[2]);
  TrinionLayout out;
  for (int s = 0; s < 3; ++s) out.slots[s].assign(m[s], Endpoint{});

  int long_slot = 0;
  for (int s = 1; s <= 3; ++s) {
    if (p.self[s - 1] > 0) long_slot = s;
  }

  if (long_slot == 0) {
    // Slot s reads, in boundary order: arcs to s+1, then arcs to s+2.
    for (int s = 1; s <= 3; ++s) {
      const int n = next_slot(s);
      out.pair_blocks(s, 0, n, p.x(n, next_slot(n)), p.x(s, n), 0);
    }
    return out;
  }

  const int k = long_slot;
  const int e = p.encircled[k - 1];
  const int o = 6 - k - e;
  const int n_self = p.self[k - 1];
  const int me = m[e - 1];
  const int mo = m[o - 1];
  if (e == next_slot(k)) {
    // [self-first][to e][self-second][to o]
    out.pair_blocks(k, 0, k, n_self + me, n_self, e);
    out.pair_blocks(k, n_self, e, 0, me, 0);
    out.pair_blocks(k, 2 * n_self + me, o, 0, mo, 0);
  } else {
    // [to o][self-first][to e][self-second]
    out.pair_blocks(k, mo, k, mo + n_self + me, n_self, e);
    out.pair_blocks(k, 0, o, 0, mo, 0);
    out.pair_blocks(k, mo + n_self, e, 0, me, 0);
  }
  return out;
}

struct SlotPoint {
  std::size_t trinion;
  int slot;
  int pos;
};

}  // namespace

int TrinionArcPattern::x(int i, int j) const {
  if (i == j) return self[i - 1];
  return between[6 - i - j - 1];
}

TrinionArcPattern arc_pattern(int m1, int m2, int m3) {
  const std::array<int, 3> m{m1, m2, m3};
  if (m1 < 0 || m2 < 0 || m3 < 0 || (m1 + m2 + m3) % 2 != 0) {
    throw Error(ErrorCode::InvalidInput, "trinion arc pattern needs non-negative m with even sum");
  }
  TrinionArcPattern p;
  for (int k = 0; k < 3; ++k) {
    const int i = (k + 1) % 3;
    const int j = (k + 2) % 3;
    if (m[k] > m[i] + m[j]) {
      p.self[k] = (m[k] - m[i] - m[j]) / 2;
      p.encircled[k] = std::min(i, j) + 1;
      p.between[j] = m[i];  // arcs k <-> i
      p.between[i] = m[j];  // arcs k <-> j
      p.between[k] = 0;     // arcs i <-> j
      return p;
    }
  }
  for (int k = 0; k < 3; ++k) {
    p.between[k] = (m[(k + 1) % 3] + m[(k + 2) % 3] - m[k]) / 2;
  }
  return p;
}

ArcType TrinionArc::type() const {
  return ArcType{from_slot, to_slot, encircled, from_slot != to_slot || from_pos < to_pos};
}

bool operator==(const AnnulusCrossing& a, const AnnulusCrossing& b) {
  return a.edge == b.edge && a.inlet == b.inlet && a.outlet == b.outlet && a.winding == b.winding &&
         a.forward == b.forward;
}

bool operator==(const TrinionArc& a, const TrinionArc& b) {
  return a.trinion == b.trinion && a.from_slot == b.from_slot && a.from_pos == b.from_pos &&
         a.to_slot == b.to_slot && a.to_pos == b.to_pos && a.encircled == b.encircled &&
         a.parallel_index == b.parallel_index;
}

int CurveRoute::crossing_count(std::size_t edge) const {
  int n = 0;
  for (const auto& c : components) {
    for (const auto& step : c.steps) {
      if (const auto* x = std::get_if<AnnulusCrossing>(&step); x && x->edge == edge) ++n;
    }
  }
  return n;
}

long CurveRoute::winding_sum(std::size_t edge) const {
  long w = 0;
  for (const auto& c : components) {
    for (const auto& step : c.steps) {
      if (const auto* x = std::get_if<AnnulusCrossing>(&step); x && x->edge == edge) w += x->winding;
    }
  }
  return w;
}

StrandTarget strand_target(int inlet, int m, int t) {
  const long n = static_cast<long>(inlet) + t;
  const int w = floor_div(n, m);
  return StrandTarget{static_cast<int>(n - static_cast<long>(w) * m), w};
}

CurveRoute route(const PantsGraph& g, const DehnParameter& d) {
  require_valid(g, d);

  std::vector<TrinionLayout> layouts;
  layouts.reserve(g.trinion_count());
  for (std::size_t tr = 0; tr < g.trinion_count(); ++tr) {
    std::array<int, 3> m{};
    for (int s = 1; s <= 3; ++s) m[s - 1] = d.m[g.slot_edge(tr, s)];
    layouts.push_back(layout_trinion(m));
  }

  // Slot position <-> annulus index on each end of an edge.
  auto slot_pos = [&](std::size_t e, int side, int index) {
    const int m = d.m[e];
    const bool flip = (side == 0) == g.edge(e).reversed;
    return flip ? m - 1 - index : index;
  };
  auto annulus_index = [&](std::size_t e, int side, int pos) { return slot_pos(e, side, pos); };

  CurveRoute out;
  std::vector<std::vector<bool>> visited(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) visited[e].assign(std::max(d.m[e], 0), false);

  for (std::size_t e0 : g.internal_edges()) {
    for (int i0 = 0; i0 < d.m[e0]; ++i0) {
      if (visited[e0][i0]) continue;
      RouteComponent comp;
      std::size_t e = e0;
      int inlet = i0;
      bool forward = true;
      const std::size_t step_limit = 4 * (static_cast<std::size_t>(d.m.size()) + 1) *
                                     (static_cast<std::size_t>(std::max(1, d.m[e0])) + 16) * 1024;
      while (true) {
        const int m = d.m[e];
        const StrandTarget target = strand_target(inlet, m, d.t[e]);
        visited[e][inlet] = true;
        comp.steps.push_back(AnnulusCrossing{e, inlet, target.outlet, target.winding, forward});

        const int arrive_side = forward ? 1 : 0;
        const int arrive_index = forward ? target.outlet : inlet;
        const Attachment at = g.attachment(e, arrive_side);
        const SlotPoint here{*at.trinion, at.slot, slot_pos(e, arrive_side, arrive_index)};

        const TrinionLayout& lay = layouts[here.trinion];
        const Endpoint ep = lay.slots[here.slot - 1].at(here.pos);
        const ArcRecord& arc = lay.arcs.at(ep.arc);
        const int to_slot = ep.end == 0 ? arc.slot_b : arc.slot_a;
        const int to_pos = ep.end == 0 ? arc.pos_b : arc.pos_a;
        comp.steps.push_back(
            TrinionArc{here.trinion, here.slot, here.pos, to_slot, to_pos, arc.encircled, arc.parallel_index});

        const SlotUse leave = g.slot_use(here.trinion, to_slot);
        e = leave.edge;
        const int idx = annulus_index(e, leave.side, to_pos);
        if (leave.side == 0) {
          forward = true;
          inlet = idx;
        } else {
          forward = false;
          inlet = strand_target(idx - d.t[e], d.m[e], 0).outlet;  // (idx - t) mod m
        }
        if (e == e0 && inlet == i0) {
          if (!forward) throw std::logic_error("route: component closed with reversed orientation");
          break;
        }
        if (visited[e][inlet]) throw std::logic_error("route: strand revisited before closing");
        if (comp.steps.size() > step_limit) throw std::logic_error("route: component did not close");
      }
      out.components.push_back(std::move(comp));
    }
  }

  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (d.m[e] != 0) continue;
    for (int c = 0; c < d.t[e]; ++c) out.components.push_back(RouteComponent{{}, e});
  }
  return out;
}

}  // namespace curvetrace
