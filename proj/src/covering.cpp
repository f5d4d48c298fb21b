#include "syz/covering.hpp"

#include <cstdlib>
#include <numeric>

#include "syz/errors.hpp"
#include "syz/intersect.hpp"

namespace syz {

BaseCover::BaseCover(int m_) : m(m_) {
  if (m < 1) {
    throw DomainError(ErrorCode::Precondition, "cover degree must be >= 1");
  }
}

BraneCollection LiftedBrane::to_collection() const {
  BraneCollection c;
  c.components.reserve(components.size());
  for (const auto& l : components) c.components.push_back(line_to_pl(l));
  return c;
}

LiftedBrane lift_brane(const LineBrane& l, const BaseCover& cover) {
  const int g = std::gcd(cover.m, l.r);
  LiftedBrane lifted;
  for (int j = 0; j < g; ++j) {
    lifted.components.emplace_back(
        l.r / g, l.d * cover.m / g, (l.c + Rational(l.d) * Rational(j)) / Rational(g),
        normalize(l.b * Rational(cover.m, g)).value());
    lifted.base_offsets.push_back(normalize(Rational(j, cover.m)));
  }
  return lifted;
}

BijectionReport verify_intersection_bijection(const LineBrane& l1,
                                              const LineBrane& l2,
                                              const BaseCover& cover1,
                                              const BaseCover& cover2) {
  if (l1.r % cover1.m != 0 || l2.r % cover2.m != 0) {
    throw DomainError(ErrorCode::NoLift,
                      "a single lift needs the cover degree to divide the rank");
  }
  const long long det = static_cast<long long>(l1.r) * l2.d -
                        static_cast<long long>(l2.r) * l1.d;
  if (det == 0) {
    throw DomainError(ErrorCode::ParallelLines, "branes are parallel");
  }

  // Chosen lifts on the individual covers, in cover-normalized coordinates.
  const LineBrane lift1 = lift_brane(l1, cover1).components.front();
  const LineBrane lift2 = lift_brane(l2, cover2).components.front();

  const int g12 = std::gcd(cover1.m, cover2.m);
  const int lcm = cover1.m / g12 * cover2.m;

  // The fiber product of the two covers splits into g12 components, each a
  // degree-lcm cover X -> (X mod m1, X + delta mod m2).
  long long upstairs = 0;
  for (int delta = 0; delta < g12; ++delta) {
    const auto up1 = lift_brane(lift1, BaseCover(lcm / cover1.m)).components;
    const LineBrane lift2_rotated(
        lift2.r, lift2.d, lift2.c + Rational(lift2.d) * Rational(delta, cover2.m),
        lift2.b);
    const auto up2 = lift_brane(lift2_rotated, BaseCover(lcm / cover2.m)).components;
    for (const auto& a : up1) {
      for (const auto& b : up2) {
        upstairs += static_cast<long long>(intersect_lines(a, b).size());
      }
    }
  }

  const long long downstairs = std::llabs(det);
  return {upstairs == downstairs, downstairs, upstairs};
}

bool lifted_ham_equivalent(const PLMultiSection& a, const PLMultiSection& b) {
  if (a.r != b.r || a.d != b.d) {
    throw DomainError(ErrorCode::MismatchedClass,
                      "branes carry different homology classes");
  }
  return is_isomorphic(syz_transform({{a}}), syz_transform({{b}}));
}

}  // namespace syz
