#ifndef SYZ_INTERSECT_HPP
#define SYZ_INTERSECT_HPP

#include <vector>

#include "syz/brane.hpp"
#include "syz/rational.hpp"

namespace syz {

/// A transverse intersection point of two line branes on T^2.
///
/// param1/param2 are the domain-circle parameters in [0, 1); the domain
/// coordinate of brane j at the point is r_j * param_j, and the point is
/// (r_j * param_j mod 1, phi_j(r_j * param_j) mod 1) through either brane.
struct IntersectionPoint {
  Mod1 base;
  Mod1 fiber;
  Rational param1;
  Rational param2;
  int index = 0;  // grading; assigned by grade_points

  friend bool operator==(const IntersectionPoint& a, const IntersectionPoint& b) {
    return a.base == b.base && a.fiber == b.fiber;
  }
};

/// All |r1*d2 - r2*d1| intersection points, sorted ascending by (base, fiber).
/// Throws DomainError(ParallelLines) when r1*d2 = r2*d1.
std::vector<IntersectionPoint> intersect_lines(const LineBrane& l1,
                                               const LineBrane& l2);

/// Assigns index 1 to every point; requires r1*d2 > r2*d1.
std::vector<IntersectionPoint> grade_points(std::vector<IntersectionPoint> points,
                                            const LineBrane& l1,
                                            const LineBrane& l2);

struct FloerGenerator {
  IntersectionPoint point;
  int degree;
  Mod1 holonomy_weight;  // normalize(b1*param1 - b2*param2)
};

struct FloerGeneratorSet {
  std::vector<FloerGenerator> generators;
};

FloerGeneratorSet floer_generators(const LineBrane& l1, const LineBrane& l2);

}  // namespace syz

#endif
