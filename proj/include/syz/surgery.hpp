#ifndef SYZ_SURGERY_HPP
#define SYZ_SURGERY_HPP

#include <vector>

#include "syz/brane.hpp"
#include "syz/intersect.hpp"

namespace syz {

/// Graded surgery of L2 # L1 at a chosen subset K of their intersection
/// points, with local system parameter b on the surgered domain.
struct SurgerySpec {
  LineBrane l1;
  LineBrane l2;
  std::vector<IntersectionPoint> k;  // subset of intersect_lines(l1, l2)
  Rational b;

  /// Validates orientation (r1*d2 > r2*d1) and K-membership; K is stored in
  /// ascending (base, fiber) order with canonical point data.
  SurgerySpec(LineBrane l1, LineBrane l2, std::vector<IntersectionPoint> k,
              Rational b);

  /// The full intersection list (sorted), for point selection and reporting.
  std::vector<IntersectionPoint> all_points() const;
};

/// Sheet-monodromy permutation of the surgered covering; one cycle per
/// connected component of the surgered domain.
struct StrandPermutation {
  int size;
  std::vector<int> map;  // bijection on {0, ..., size-1}

  int cycle_count() const;
  std::vector<std::vector<int>> cycles() const;
};

/// Composes each line's covering monodromy with the strand transpositions at
/// the surgery points, in base order.
StrandPermutation components(const SurgerySpec& spec);

/// The surgered curve(s) in the corner (epsilon -> 0) model, traced
/// geometrically. One PLMultiSection per connected component; b is attached
/// only when the result is connected (otherwise every component carries 0).
BraneCollection surger(const SurgerySpec& spec);

/// Intersection points of L1 and L2 not in K; these survive as transverse
/// self-intersections of the surgered result.
std::vector<IntersectionPoint> leftover_self_intersections(const SurgerySpec& spec);

/// Exact trapezoid value of the period integral of phi over [0, r).
Rational area_integral(const PLMultiSection& s);

/// N = area(surgered) - r1*d1/2 - r2*d2/2 - c1 - c2; always an integer.
/// Throws DomainError(DisconnectedResult) when the surgery is disconnected.
Int surgery_residue(const SurgerySpec& spec);

}  // namespace syz

#endif
