#include "syz/mirror.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "syz/errors.hpp"

namespace syz {

long long MirrorBundle::rank() const {
  long long r = 0;
  for (const auto& s : summands) r += s.rank;
  return r;
}

long long MirrorBundle::degree() const {
  long long d = 0;
  for (const auto& s : summands) d -= s.dshift;
  return d;
}

MirrorBundle syz_transform(const BraneCollection& c) {
  MirrorBundle m;
  m.summands.reserve(c.components.size());
  for (const auto& comp : c.components) {
    m.summands.push_back({comp.r, comp.d, area_integral(comp), comp.b});
  }
  return m;
}

DetClass det_class(const MirrorBundle& m) {
  long long degree = 0;
  Rational a(0), b(0);
  for (const auto& s : m.summands) {
    degree -= s.dshift;
    a += s.a;
    b += s.b + Rational(s.rank - 1, 2);
  }
  return {degree, normalize(a), normalize(b)};
}

bool gauge_equivalent_constant(int d1, const Rational& a1, const Rational& b1,
                               int d2, const Rational& a2, const Rational& b2) {
  if (d1 != d2) {
    throw DomainError(ErrorCode::MismatchedDegree,
                      "constant factors carry different exponents");
  }
  return (a1 - a2).is_integer() && (b1 - b2).is_integer();
}

std::vector<DetClass> split_flat(const Summand& s) {
  if (s.dshift != 0) {
    throw DomainError(ErrorCode::Precondition,
                      "flat splitting needs dshift = 0");
  }
  std::vector<DetClass> classes;
  classes.reserve(s.rank);
  const Rational modulus = s.a / Rational(s.rank);
  for (int j = 0; j < s.rank; ++j) {
    classes.push_back(
        {0, normalize(modulus), normalize((s.b + Rational(j)) / Rational(s.rank))});
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

bool self_extension_check(const Summand& s) {
  if (s.rank != 2 || s.dshift != 0) {
    throw DomainError(ErrorCode::Precondition,
                      "self-extension check needs rank 2, dshift 0");
  }
  const DetClass trivial{0, normalize(Rational(0)), normalize(Rational(0))};
  for (const auto& cls : split_flat(s)) {
    if (!(cls == trivial)) return false;
  }
  return true;
}

namespace {

bool is_flat(const MirrorBundle& m) {
  return std::all_of(m.summands.begin(), m.summands.end(),
                     [](const Summand& s) { return s.dshift == 0; });
}

std::vector<DetClass> split_flat_bundle(const MirrorBundle& m) {
  std::vector<DetClass> all;
  for (const auto& s : m.summands) {
    auto part = split_flat(s);
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

bool is_isomorphic(const MirrorBundle& m1, const MirrorBundle& m2) {
  const bool coprime1 = m1.summands.size() == 1 &&
                        std::gcd(m1.summands[0].rank, m1.summands[0].dshift) == 1;
  const bool coprime2 = m2.summands.size() == 1 &&
                        std::gcd(m2.summands[0].rank, m2.summands[0].dshift) == 1;
  if (coprime1 && coprime2 &&
      (m1.summands[0].dshift != 0 || m2.summands[0].dshift != 0)) {
    // Indecomposable with coprime rank and degree: determined by rank and
    // determinant line bundle.
    return m1.rank() == m2.rank() && m1.degree() == m2.degree() &&
           det_class(m1) == det_class(m2);
  }
  if (is_flat(m1) && is_flat(m2)) {
    return split_flat_bundle(m1) == split_flat_bundle(m2);
  }
  throw DomainError(ErrorCode::UnsupportedClassification,
                    "bundle outside the coprime / flat fragment");
}

ExtensionReport verify_extension(const LineBrane& l1, const LineBrane& l2,
                                 const std::vector<IntersectionPoint>& k,
                                 const Rational& b) {
  if (std::gcd(l1.r + l2.r, l1.d + l2.d) != 1) {
    throw DomainError(ErrorCode::Precondition,
                      "extension criterion needs gcd(r1+r2, d1+d2) = 1");
  }
  const SurgerySpec spec(l1, l2, k, b);
  if (components(spec).cycle_count() != 1) {
    throw DomainError(ErrorCode::DisconnectedResult,
                      "extension criterion needs a connected surgered domain");
  }

  ExtensionReport rep;
  rep.criterion_value = l1.b + l2.b + Rational(1, 2) - b;
  rep.verdict = rep.criterion_value.is_integer();

  rep.area_residue = surgery_residue(spec);
  rep.first_integrality = true;  // surgery_residue asserts integrality
  rep.second_integrality = (l1.b + l2.b - Rational(1, 2) - b).is_integer();

  // Independent route: determinant classes of the actual surgered mirror.
  const MirrorBundle surgery_mirror = syz_transform(surger(spec));
  rep.det_surgery = det_class(surgery_mirror);
  MirrorBundle sum = syz_transform({{line_to_pl(l1)}});
  const MirrorBundle m2 = syz_transform({{line_to_pl(l2)}});
  sum.summands.insert(sum.summands.end(), m2.summands.begin(),
                      m2.summands.end());
  rep.det_sum = det_class(sum);
  rep.det_route = rep.det_surgery == rep.det_sum;

  assert(rep.verdict == rep.det_route);
  assert(rep.verdict == rep.second_integrality);
  return rep;
}

}  // namespace syz
