#ifndef SYZ_BRANE_HPP
#define SYZ_BRANE_HPP

#include <utility>
#include <vector>

#include "syz/rational.hpp"

namespace syz {

/// Straight-line multi-section of T^2 -> S^1 with a U(1) local system.
///
/// The underlying curve is the graph of phi(u) = (d*u + c)/r over one base
/// lift u in [0, r): a point of the brane above base u mod 1 has fiber
/// coordinate phi(u) mod 1. The local system on the domain circle is
/// d + 2*pi*i*(b/r)*dx, recorded by the parameter b.
struct LineBrane {
  int r;       // fiber-intersection count, >= 1
  int d;       // base-winding pairing degree
  Rational c;  // intercept
  Rational b;  // holonomy parameter

  LineBrane(int r, int d, Rational c, Rational b = Rational(0));

  /// Fiber lift phi(u) = (d*u + c)/r.
  Rational phi(const Rational& u) const;
};

/// Piecewise-linear quasi-periodic section: phi(x + r) = phi(x) + d.
/// Stores breakpoints for one period [0, r); the segment from the last
/// breakpoint wraps to (x0 + r, y0 + d). Consecutive collinear breakpoints
/// are merged on construction.
struct PLMultiSection {
  int r;
  int d;
  Rational b;
  std::vector<std::pair<Rational, Rational>> breakpoints;

  PLMultiSection(int r, int d, Rational b,
                 std::vector<std::pair<Rational, Rational>> breakpoints);
};

/// Exact phi(x) for any real-line x, via quasi-periodicity.
Rational eval_phi(const PLMultiSection& s, const Rational& x);

/// Minimal PL representation of the line (d*x + c)/r over [0, r).
PLMultiSection line_to_pl(const LineBrane& line);

struct BraneCollection {
  std::vector<PLMultiSection> components;
};

/// (sum of r_j, sum of d_j), the H_1 class of the union.
std::pair<long long, long long> homology_class(const BraneCollection& c);

}  // namespace syz

#endif
