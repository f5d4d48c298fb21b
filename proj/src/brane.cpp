#include "syz/brane.hpp"

#include <numeric>

#include "syz/errors.hpp"

namespace syz {

LineBrane::LineBrane(int r_, int d_, Rational c_, Rational b_)
    : r(r_), d(d_), c(std::move(c_)), b(std::move(b_)) {
  if (r < 1) {
    throw DomainError(ErrorCode::Precondition, "line brane needs r >= 1");
  }
  if (std::gcd(r, d) != 1) {
    throw DomainError(ErrorCode::Precondition, "line brane needs gcd(r, d) = 1");
  }
}

Rational LineBrane::phi(const Rational& u) const {
  return (Rational(d) * u + c) / Rational(r);
}

PLMultiSection::PLMultiSection(
    int r_, int d_, Rational b_,
    std::vector<std::pair<Rational, Rational>> pts)
    : r(r_), d(d_), b(std::move(b_)) {
  if (r < 1) {
    throw DomainError(ErrorCode::Precondition, "multi-section needs r >= 1");
  }
  if (pts.empty()) {
    throw DomainError(ErrorCode::Precondition, "breakpoint list is empty");
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].first < Rational(0) || pts[i].first >= Rational(r)) {
      throw DomainError(ErrorCode::Precondition, "breakpoint x outside [0, r)");
    }
    if (i > 0 && !(pts[i - 1].first < pts[i].first)) {
      throw DomainError(ErrorCode::Precondition,
                        "breakpoint x-coordinates must strictly increase");
    }
  }
  // Merge interior breakpoints where the incoming and outgoing slopes agree.
  // The wrap target of the last breakpoint is (x0 + r, y0 + d).
  auto slope = [](const std::pair<Rational, Rational>& a,
                  const std::pair<Rational, Rational>& b) {
    return (b.second - a.second) / (b.first - a.first);
  };
  std::vector<std::pair<Rational, Rational>> merged;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (n == 1) { merged.push_back(pts[i]); break; }
    const auto& prev = pts[(i + n - 1) % n];
    const auto& next = pts[(i + 1) % n];
    auto lift = [&](std::pair<Rational, Rational> p, int periods) {
      return std::make_pair(p.first + Rational(periods * r_),
                            p.second + Rational(periods * d_));
    };
    auto before = (i == 0) ? lift(prev, -1) : prev;
    auto after = (i == n - 1) ? lift(next, 1) : next;
    if (i == 0 || !(slope(before, pts[i]) == slope(pts[i], after))) {
      merged.push_back(pts[i]);
    }
  }
  breakpoints = std::move(merged);
}

Rational eval_phi(const PLMultiSection& s, const Rational& x) {
  const Rational period(s.r);
  const Int n = (x / period).floor();
  const Rational x0 = x - Rational(n) * period;  // in [0, r)
  const Rational shift = Rational(n) * Rational(s.d);

  const auto& bp = s.breakpoints;
  // Last breakpoint at or before x0; if x0 precedes the first breakpoint,
  // the point lies on the wrap segment of the previous period.
  std::size_t i = bp.size();
  while (i > 0 && bp[i - 1].first > x0) --i;
  std::pair<Rational, Rational> left, right;
  if (i == 0) {
    left = {bp.back().first - period, bp.back().second - Rational(s.d)};
    right = bp.front();
  } else if (i == bp.size()) {
    left = bp.back();
    right = {bp.front().first + period, bp.front().second + Rational(s.d)};
  } else {
    left = bp[i - 1];
    right = bp[i];
  }
  if (x0 == left.first) return left.second + shift;
  const Rational t = (x0 - left.first) / (right.first - left.first);
  return left.second + t * (right.second - left.second) + shift;
}

PLMultiSection line_to_pl(const LineBrane& line) {
  return PLMultiSection(line.r, line.d, line.b,
                        {{Rational(0), line.c / Rational(line.r)}});
}

std::pair<long long, long long> homology_class(const BraneCollection& c) {
  long long r = 0, d = 0;
  for (const auto& s : c.components) {
    r += s.r;
    d += s.d;
  }
  return {r, d};
}

}  // namespace syz
