#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "curvetrace/moduli.hpp"
#include "curvetrace/route.hpp"

namespace curvetrace {

/// Holonomy of a trinion arc in the trinion's basis. Arcs between distinct
/// slots run along the spokes and are trivial. A self-arc traversed forward
/// picks up the loop around its encircled slot; backward, the inverse loop.
/// Throws UnknownArc for inconsistent arc data.
Mat2 arc_holonomy(const RepresentationPoint& rep, std::size_t trinion, const ArcType& arc);

/// Transport across one annulus strand, including the winding factor
/// L0^{-sigma w} (sigma = -1 on reversed edges) and the twist phase.
Mat2 crossing_holonomy(const RepresentationPoint& rep, const AnnulusCrossing& c, double offset = 0.0);

/// Ordered product of the step holonomies of one component.
/// Requires a non-core component.
Mat2 component_holonomy(const RepresentationPoint& rep, const RouteComponent& c);

struct TraceValue {
  double value = 1.0;
  std::vector<double> factors;  // -tr of each component, in route order
};

TraceValue trace_of_route(const RepresentationPoint& rep, const CurveRoute& r);

/// A route compiled against a fixed representation so that the trace can be
/// re-evaluated cheaply under twist offsets (the torus action).
class RouteEvaluator {
 public:
  RouteEvaluator(const RepresentationPoint& rep, const CurveRoute& r);

  /// Trace at twists theta + offsets; `offsets` is indexed by edge.
  double value(const std::vector<double>& offsets) const;
  /// Same, but with a single edge shifted and all others fixed.
  double value_on_edge(std::size_t edge, double offset) const;

  std::size_t edge_count() const { return edge_count_; }

 private:
  struct Crossing {
    std::size_t edge;
    double theta;
    bool forward;
    Mat2 left;   // applied before the twist phase
    Mat2 right;  // applied after it
  };
  struct Component {
    std::vector<Crossing> crossings;
    std::vector<Mat2> between;  // fixed product following each crossing
    double constant = 0.0;      // factor for step-free components
    bool is_core = false;
  };

  double evaluate(const double* offsets, std::size_t single_edge, double single_offset) const;

  std::vector<Component> components_;
  std::size_t edge_count_ = 0;
};

/// A word letter: generator name plus exponent sign.
struct Letter {
  std::string generator;
  bool inverse = false;

  bool operator==(const Letter&) const = default;
};
using Word = std::vector<Letter>;

/// Parses a word over single-letter generators: lowercase letters are
/// generators, uppercase letters their inverses ("aBc" = a b^-1 c).
/// Whitespace is ignored; "1" or "" is the empty word.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

using Assignment = std::map<std::string, Mat2>;

/// Product of the assigned matrices along w. Throws UnassignedGenerator.
Mat2 evaluate_word(const Assignment& rho, const Word& w);

/// chi = -Re tr of the evaluated word; -2 for the empty word.
double word_trace(const Assignment& rho, const Word& w);

/// |chi_a chi_b + chi_{ab} + chi_{a^-1 b}|.
double check_trace_relation(const Assignment& rho, const Word& a, const Word& b);

}  // namespace curvetrace
