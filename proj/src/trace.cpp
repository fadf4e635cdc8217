#include "curvetrace/trace.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <variant>

#include "curvetrace/error.hpp"

namespace curvetrace {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Mat2 winding_factor(const RepresentationPoint& rep, const AnnulusCrossing& c) {
  const EdgeGluing& gl = rep.gluings().at(c.edge);
  if (c.winding == 0) return Mat2::Identity();
  // Positive windings run against the end0 boundary orientation; with this
  // choice t_j -> t_j + l multiplies the top isotype by e^{+i l a_j}.
  const long power = gl.reversed ? c.winding : -static_cast<long>(c.winding);
  return su2_power(rep.slot_loop(gl.trinion[0], gl.slot[0]), power);
}

}  // namespace

Mat2 arc_holonomy(const RepresentationPoint& rep, std::size_t trinion, const ArcType& arc) {
  if (trinion >= rep.trinions().size()) throw Error(ErrorCode::UnknownArc, "arc on unknown trinion");
  const auto in_range = [](int s) { return s >= 1 && s <= 3; };
  if (!in_range(arc.from_slot) || !in_range(arc.to_slot)) {
    throw Error(ErrorCode::UnknownArc, "arc slot out of range");
  }
  if (arc.from_slot != arc.to_slot) {
    if (arc.encircled != 0) throw Error(ErrorCode::UnknownArc, "arc between distinct slots cannot encircle");
    return Mat2::Identity();
  }
  if (!in_range(arc.encircled) || arc.encircled == arc.from_slot) {
    throw Error(ErrorCode::UnknownArc, "self-arc must encircle one of the other two slots");
  }
  const Mat2 loop = rep.slot_loop(trinion, arc.encircled);
  return arc.forward ? loop : su2_inverse(loop);
}

Mat2 crossing_holonomy(const RepresentationPoint& rep, const AnnulusCrossing& c, double offset) {
  const Mat2 m = winding_factor(rep, c) * rep.gluing(c.edge, offset);
  return c.forward ? m : su2_inverse(m);
}

Mat2 component_holonomy(const RepresentationPoint& rep, const RouteComponent& c) {
  if (c.core_edge) throw Error(ErrorCode::InvalidInput, "core component has no step holonomy");
  Mat2 acc = Mat2::Identity();
  for (const RouteStep& step : c.steps) {
    if (const auto* x = std::get_if<AnnulusCrossing>(&step)) {
      acc = acc * crossing_holonomy(rep, *x);
    } else {
      const auto& arc = std::get<TrinionArc>(step);
      acc = acc * arc_holonomy(rep, arc.trinion, arc.type());
    }
  }
  return acc;
}

TraceValue trace_of_route(const RepresentationPoint& rep, const CurveRoute& r) {
  TraceValue out;
  out.factors.reserve(r.components.size());
  for (const RouteComponent& c : r.components) {
    double f;
    if (c.core_edge) {
      f = -2.0 * std::cos(rep.angle(*c.core_edge));
    } else {
      f = -component_holonomy(rep, c).trace().real();
    }
    out.factors.push_back(f);
    out.value *= f;
  }
  return out;
}

RouteEvaluator::RouteEvaluator(const RepresentationPoint& rep, const CurveRoute& r)
    : edge_count_(rep.edge_count()) {
  for (const RouteComponent& rc : r.components) {
    Component comp;
    if (rc.core_edge) {
      comp.is_core = true;
      comp.constant = -2.0 * std::cos(rep.angle(*rc.core_edge));
      components_.push_back(std::move(comp));
      continue;
    }
    // Fixed matrices before the first crossing are rotated to the end, which
    // leaves the trace unchanged.
    Mat2 prefix = Mat2::Identity();
    Mat2 pending = Mat2::Identity();
    for (const RouteStep& step : rc.steps) {
      if (const auto* x = std::get_if<AnnulusCrossing>(&step)) {
        if (comp.crossings.empty()) {
          prefix = pending;
        } else {
          comp.between.push_back(pending);
        }
        pending = Mat2::Identity();
        const EdgeGluing& gl = rep.gluings().at(x->edge);
        const Mat2 f0 = rep.frame(gl.trinion[0], gl.slot[0]).matrix();
        const Mat2 f1 = rep.frame(gl.trinion[1], gl.slot[1]).matrix();
        Crossing cr{x->edge, rep.twist(x->edge), x->forward, Mat2(), Mat2()};
        const Mat2 left = winding_factor(rep, *x) * f0 * quarter_turn();
        const Mat2 right = f1.adjoint();
        if (x->forward) {
          cr.left = left;
          cr.right = right;
        } else {
          cr.left = su2_inverse(right);
          cr.right = su2_inverse(left);
        }
        comp.crossings.push_back(std::move(cr));
      } else {
        const auto& arc = std::get<TrinionArc>(step);
        pending = pending * arc_holonomy(rep, arc.trinion, arc.type());
      }
    }
    if (comp.crossings.empty()) {
      comp.is_core = true;
      comp.constant = -pending.trace().real();
    } else {
      comp.between.push_back(pending * prefix);
    }
    components_.push_back(std::move(comp));
  }
}

double RouteEvaluator::evaluate(const double* offsets, std::size_t single_edge, double single_offset) const {
  double total = 1.0;
  for (const Component& comp : components_) {
    if (comp.is_core) {
      total *= comp.constant;
      continue;
    }
    Mat2 acc = Mat2::Identity();
    for (std::size_t i = 0; i < comp.crossings.size(); ++i) {
      const Crossing& cr = comp.crossings[i];
      double shift = 0.0;
      if (offsets != nullptr) {
        shift = offsets[cr.edge];
      } else if (cr.edge == single_edge) {
        shift = single_offset;
      }
      const double phase = (cr.forward ? 1.0 : -1.0) * kTwoPi * (cr.theta + shift);
      acc = acc * cr.left * phase_diag(phase) * cr.right * comp.between[i];
    }
    total *= -acc.trace().real();
  }
  return total;
}

double RouteEvaluator::value(const std::vector<double>& offsets) const {
  if (offsets.size() != edge_count_) throw Error(ErrorCode::InvalidInput, "offset vector size mismatch");
  return evaluate(offsets.data(), 0, 0.0);
}

double RouteEvaluator::value_on_edge(std::size_t edge, double offset) const {
  return evaluate(nullptr, edge, offset);
}

Word parse_word(std::string_view text) {
  Word w;
  if (text == "1") return w;
  for (char ch : text) {
    const auto u = static_cast<unsigned char>(ch);
    if (std::isspace(u)) continue;
    if (!std::isalpha(u)) {
      throw Error(ErrorCode::InvalidInput, std::string("invalid word character '") + ch + "'");
    }
    w.push_back(Letter{std::string(1, static_cast<char>(std::tolower(u))), std::isupper(u) != 0});
  }
  return w;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w) {
    for (char ch : l.generator) {
      out += l.inverse ? static_cast<char>(std::toupper(static_cast<unsigned char>(ch))) : ch;
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l.inverse = !l.inverse;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Mat2 evaluate_word(const Assignment& rho, const Word& w) {
  Mat2 acc = Mat2::Identity();
  for (const Letter& l : w) {
    const auto it = rho.find(l.generator);
    if (it == rho.end()) {
      throw Error(ErrorCode::UnassignedGenerator, "generator '" + l.generator + "' has no assigned matrix");
    }
    acc = acc * (l.inverse ? su2_inverse(it->second) : it->second);
  }
  return acc;
}

double word_trace(const Assignment& rho, const Word& w) { return -evaluate_word(rho, w).trace().real(); }

double check_trace_relation(const Assignment& rho, const Word& a, const Word& b) {
  const double chi_a = word_trace(rho, a);
  const double chi_b = word_trace(rho, b);
  const double chi_ab = word_trace(rho, concat(a, b));
  const double chi_inv_ab = word_trace(rho, concat(inverse(a), b));
  return std::abs(chi_a * chi_b + chi_ab + chi_inv_ab);
}

}  // namespace curvetrace
