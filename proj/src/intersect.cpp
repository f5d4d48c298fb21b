#include "syz/intersect.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>

#include "syz/errors.hpp"

namespace syz {

namespace {

// x^{-1} mod m for gcd(x, m) = 1, m >= 1.
int inverse_mod(int x, int m) {
  if (m == 1) return 0;
  x %= m;
  if (x < 0) x += m;
  int t = 0, new_t = 1, r = m, new_r = x;
  while (new_r != 0) {
    int q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  assert(r == 1);
  return t < 0 ? t + m : t;
}

// Reduces q into [0, modulus).
Rational reduce_mod(const Rational& q, int modulus) {
  const Rational m(modulus);
  return q - Rational((q / m).floor()) * m;
}

}  // namespace

std::vector<IntersectionPoint> intersect_lines(const LineBrane& l1,
                                               const LineBrane& l2) {
  const long long det = static_cast<long long>(l1.r) * l2.d -
                        static_cast<long long>(l2.r) * l1.d;
  if (det == 0) {
    throw DomainError(ErrorCode::ParallelLines,
                      "branes are parallel (r1*d2 = r2*d1)");
  }
  const long long abs_det = std::llabs(det);

  const int inv_d1 = inverse_mod(l1.d, l1.r);
  const int inv_d2 = inverse_mod(l2.d, l2.r);

  // Any intersection point with base lift x in [0, 1) and fiber in [0, 1)
  // satisfies k = r*f - d*x - c on each line, so k lies within |d| + 1 of the
  // interval [-c, r - c]; a window of that size per line already reaches
  // every point, and the count assertion below rechecks completeness.
  const long long k1_lo = (-l1.c).floor().convert_to<long long>() - std::abs(l1.d) - 1;
  const long long k1_hi = k1_lo + l1.r + 2 * std::abs(l1.d) + 3;
  const long long k2_lo = (-l2.c).floor().convert_to<long long>() - std::abs(l2.d) - 1;
  const long long k2_hi = k2_lo + l2.r + 2 * std::abs(l2.d) + 3;

  std::map<std::pair<Rational, Rational>, IntersectionPoint> points;
  for (long long k = k1_lo; k <= k1_hi; ++k) {
    for (long long kp = k2_lo; kp <= k2_hi; ++kp) {
      // Common fiber lift: (d1*x + c1 + k)/r1 = (d2*x + c2 + k')/r2.
      const Rational x = (Rational(l2.r) * (l1.c + Rational(k)) -
                          Rational(l1.r) * (l2.c + Rational(kp))) /
                         Rational(det);
      const Mod1 base = normalize(x);
      const Mod1 fiber =
          normalize((Rational(l1.d) * x + l1.c + Rational(k)) / Rational(l1.r));

      const long long j1 = ((k % l1.r + l1.r) % l1.r) * inv_d1 % l1.r;
      const long long j2 = ((kp % l2.r + l2.r) % l2.r) * inv_d2 % l2.r;
      const Rational param1 =
          reduce_mod(x + Rational(j1), l1.r) / Rational(l1.r);
      const Rational param2 =
          reduce_mod(x + Rational(j2), l2.r) / Rational(l2.r);

      IntersectionPoint p{base, fiber, param1, param2, 0};
      auto key = std::make_pair(base.value(), fiber.value());
      auto [it, inserted] = points.emplace(key, p);
      if (!inserted) {
        // Embedded lines: the T^2 point determines both parameters.
        assert(it->second.param1 == param1 && it->second.param2 == param2);
      }
    }
  }
  assert(static_cast<long long>(points.size()) == abs_det);

  std::vector<IntersectionPoint> out;
  out.reserve(points.size());
  for (auto& [key, p] : points) out.push_back(p);
  return out;
}

std::vector<IntersectionPoint> grade_points(std::vector<IntersectionPoint> points,
                                            const LineBrane& l1,
                                            const LineBrane& l2) {
  const long long det = static_cast<long long>(l1.r) * l2.d -
                        static_cast<long long>(l2.r) * l1.d;
  if (det <= 0) {
    throw DomainError(ErrorCode::UnsupportedOrientation,
                      "grading needs r1*d2 > r2*d1; swap the arguments");
  }
  for (auto& p : points) p.index = 1;
  return points;
}

FloerGeneratorSet floer_generators(const LineBrane& l1, const LineBrane& l2) {
  auto points = grade_points(intersect_lines(l1, l2), l1, l2);
  FloerGeneratorSet set;
  set.generators.reserve(points.size());
  for (const auto& p : points) {
    set.generators.push_back(
        {p, p.index, normalize(l1.b * p.param1 - l2.b * p.param2)});
  }
  return set;
}

}  // namespace syz
