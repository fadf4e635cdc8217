#include "curvetrace/dehn.hpp"

#include "curvetrace/error.hpp"

namespace curvetrace {

std::vector<Violation> validate_dehn(const PantsGraph& g, const DehnParameter& d) {
  std::vector<Violation> out;
  if (!validate_graph(g).empty()) {
    out.push_back({"invalid graph", "the pants graph itself has violations"});
    return out;
  }
  if (d.m.size() != g.edge_count() || d.t.size() != g.edge_count()) {
    out.push_back({"size mismatch", "Dehn parameter has " + std::to_string(d.m.size()) + "/" +
                                        std::to_string(d.t.size()) + " entries for " +
                                        std::to_string(g.edge_count()) + " edges"});
    return out;
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const std::string& id = g.edge(e).id;
    if (d.m[e] < 0) out.push_back({"negative m", "edge '" + id + "' has m < 0"});
    if (d.m[e] == 0 && d.t[e] < 0) {
      out.push_back({"m=0 requires t>=0", "edge '" + id + "' has m = 0 and t = " + std::to_string(d.t[e])});
    }
    if (!g.is_internal(e) && d.m[e] != 0) {
      out.push_back({"external m nonzero", "external edge '" + id + "' has m = " + std::to_string(d.m[e])});
    }
  }
  for (std::size_t tr = 0; tr < g.trinion_count(); ++tr) {
    long sum = 0;
    for (int slot = 1; slot <= 3; ++slot) sum += d.m[g.slot_edge(tr, slot)];
    if (sum % 2 != 0) {
      out.push_back({"odd sum at trinion", "m values around trinion '" + g.trinion_id(tr) +
                                               "' sum to " + std::to_string(sum)});
    }
  }
  return out;
}

void require_valid(const PantsGraph& g, const DehnParameter& d) {
  require_valid(g);
  const auto violations = validate_dehn(g, d);
  if (violations.empty()) return;
  std::string msg = "inadmissible Dehn parameter:";
  for (const auto& v : violations) msg += "\n  " + v.code + ": " + v.message;
  throw Error(ErrorCode::InvalidInput, msg);
}

DehnParameter twist(const PantsGraph& g, const DehnParameter& d, std::size_t edge, int ell) {
  if (edge >= g.edge_count() || !g.is_internal(edge)) {
    throw Error(ErrorCode::InvalidInput, "twist requires an internal edge");
  }
  if (d.m.at(edge) < 1) {
    throw Error(ErrorCode::InvalidInput,
                "fractional twist along edge '" + g.edge(edge).id + "' is undefined: m = 0");
  }
  DehnParameter out = d;
  out.t[edge] += ell;
  return out;
}

namespace {

// Odometer over [lo_i, hi_i] with index 0 most significant.
bool advance(std::vector<int>& v, const std::vector<int>& lo, const std::vector<int>& hi) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i] < hi[i]) {
      ++v[i];
      return true;
    }
    v[i] = lo[i];
  }
  return false;
}

}  // namespace

std::vector<DehnParameter> enumerate_dehn(const PantsGraph& g, int m_max, int t_max,
                                          bool include_boundary) {
  require_valid(g);
  if (m_max < 0 || t_max < 0) throw Error(ErrorCode::InvalidInput, "m_max and t_max must be >= 0");
  const std::size_t n = g.edge_count();

  std::vector<int> m_lo(n, 0), m_hi(n, 0);
  for (std::size_t e = 0; e < n; ++e) m_hi[e] = g.is_internal(e) ? m_max : 0;

  std::vector<DehnParameter> out;
  std::vector<int> m = m_lo;
  do {
    bool even = true;
    for (std::size_t tr = 0; tr < g.trinion_count() && even; ++tr) {
      int sum = 0;
      for (int slot = 1; slot <= 3; ++slot) sum += m[g.slot_edge(tr, slot)];
      even = sum % 2 == 0;
    }
    if (!even) continue;

    std::vector<int> t_lo(n, 0), t_hi(n, 0);
    for (std::size_t e = 0; e < n; ++e) {
      if (!g.is_internal(e)) {
        t_hi[e] = include_boundary ? t_max : 0;
      } else if (m[e] == 0) {
        t_hi[e] = t_max;
      } else {
        t_lo[e] = -t_max;
        t_hi[e] = t_max;
      }
    }
    std::vector<int> t = t_lo;
    do {
      out.push_back(DehnParameter{m, t});
    } while (advance(t, t_lo, t_hi));
  } while (advance(m, m_lo, m_hi));
  return out;
}

}  // namespace curvetrace
