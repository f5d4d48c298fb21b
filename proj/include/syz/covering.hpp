#ifndef SYZ_COVERING_HPP
#define SYZ_COVERING_HPP

#include <vector>

#include "syz/brane.hpp"
#include "syz/mirror.hpp"

namespace syz {

/// Degree-m cyclic cover of the base circle, inducing the fiberwise cover
/// T^2_m -> T^2. Every finite connected cover of S^1 arises this way, and
/// its deck group (cyclic of order m) acts transitively and freely on fibers.
struct BaseCover {
  int m;

  explicit BaseCover(int m);
};

/// Full preimage of a line brane under a cyclic base cover, in upstairs
/// unit-normalized coordinates: gcd(m, r) line components, component j of
/// class (r/g, d*m/g) with intercept (c + d*j)/g and holonomy b*m/g mod 1.
/// base_offsets record the deck rotation j/m carrying component 0 onto
/// component j.
struct LiftedBrane {
  std::vector<LineBrane> components;
  std::vector<Mod1> base_offsets;

  BraneCollection to_collection() const;
};

LiftedBrane lift_brane(const LineBrane& l, const BaseCover& cover);

struct BijectionReport {
  bool holds;
  long long downstairs;
  long long upstairs;
};

/// Lifts each brane once through its own cover (requires cover_j.m | r_j),
/// pulls both back to the fiber product of the two covers, and checks that
/// the upstairs intersection count equals the downstairs one.
BijectionReport verify_intersection_bijection(const LineBrane& l1,
                                              const LineBrane& l2,
                                              const BaseCover& cover1,
                                              const BaseCover& cover2);

/// Whether two connected branes (with their local systems) become
/// Hamiltonian isotopic after lifting to the fiber-product cover of their
/// common domain: decided through isomorphism of the mirror bundles.
bool lifted_ham_equivalent(const PLMultiSection& a, const PLMultiSection& b);

}  // namespace syz

#endif
