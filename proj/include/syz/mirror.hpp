#ifndef SYZ_MIRROR_HPP
#define SYZ_MIRROR_HPP

#include <vector>

#include "syz/brane.hpp"
#include "syz/surgery.hpp"

namespace syz {

/// Factor-of-automorphy data of one indecomposable mirror summand: the
/// transition matrix is the rank x rank companion block whose single
/// nontrivial entry is e^{-2*pi*(a + i*b)} * e^{2*pi*i*dshift*z}.
/// Mirror rank = rank, mirror degree = -dshift.
struct Summand {
  int rank;
  int dshift;
  Rational a;  // period integral of phi over the source component
  Rational b;  // holonomy parameter

  friend bool operator==(const Summand& x, const Summand& y) {
    return x.rank == y.rank && x.dshift == y.dshift && x.a == y.a && x.b == y.b;
  }
};

struct MirrorBundle {
  std::vector<Summand> summands;

  long long rank() const;
  long long degree() const;  // = -sum of dshifts
};

/// Isomorphism class of a determinant line bundle. Complete invariant for
/// the constant companion factors: two such line bundles are isomorphic iff
/// all three fields agree.
struct DetClass {
  long long degree;
  Mod1 a_mod1;
  Mod1 b_mod1;

  friend bool operator==(const DetClass& x, const DetClass& y) {
    return x.degree == y.degree && x.a_mod1 == y.a_mod1 && x.b_mod1 == y.b_mod1;
  }
  friend bool operator<(const DetClass& x, const DetClass& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    if (x.a_mod1 != y.a_mod1) return x.a_mod1 < y.a_mod1;
    return x.b_mod1 < y.b_mod1;
  }
};

/// One summand per component: a = area_integral, rank/dshift/b copied.
MirrorBundle syz_transform(const BraneCollection& c);

/// Determinant class: degree = -sum(dshift), a = sum(a_j) mod 1,
/// b = sum(b_j + (rank_j - 1)/2) mod 1. The (rank-1)/2 term is the sign
/// (-1)^(rank-1) of the companion-block determinant written as a phase.
DetClass det_class(const MirrorBundle& m);

/// Whether two constant factors e^{-2*pi*(a + i*b)} * e^{2*pi*i*d*z} with the
/// same exponent d are gauge equivalent: a1 - a2 and b1 - b2 both integers.
bool gauge_equivalent_constant(int d1, const Rational& a1, const Rational& b1,
                               int d2, const Rational& a2, const Rational& b2);

/// Supported fragment of the classification: single indecomposable summands
/// with gcd(rank, degree) = 1 (compared through their determinant classes),
/// and flat bundles (all dshifts zero, compared through split_flat).
/// Anything else throws DomainError(UnsupportedClassification).
bool is_isomorphic(const MirrorBundle& m1, const MirrorBundle& m2);

/// Splits a flat (dshift = 0) constant companion factor of rank r into its r
/// line classes: shared modulus a/r, phases (b + j)/r mod 1, j = 0..r-1.
/// Returned sorted (a multiset).
std::vector<DetClass> split_flat(const Summand& s);

/// Whether a rank-2 flat summand is O (+) O, i.e. both split classes trivial.
bool self_extension_check(const Summand& s);

struct ExtensionReport {
  bool verdict;                 // b1 + b2 + 1/2 - b is an integer
  Rational criterion_value;     // b1 + b2 + 1/2 - b
  bool first_integrality;       // area condition (holds for every surgery)
  Int area_residue;
  bool second_integrality;      // b1 + b2 - 1/2 - b integral (M = 1)
  bool det_route;               // det class of the surgered mirror matches
  DetClass det_surgery;
  DetClass det_sum;
};

/// Decides whether the mirror of the surgery is an extension of the two
/// mirror bundles, and cross-checks the verdict through the determinant
/// classes of the actual surgered curve.
ExtensionReport verify_extension(const LineBrane& l1, const LineBrane& l2,
                                 const std::vector<IntersectionPoint>& k,
                                 const Rational& b);

}  // namespace syz

#endif
