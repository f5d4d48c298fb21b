#include "syz/surgery.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <utility>

#include "syz/errors.hpp"

namespace syz {

namespace {

// A surgery event over one base period: at base coordinate beta the sheet
// strand1 of L1 crosses strand2 of L2 and the two are rerouted into each
// other. Strands are numbered 0..r1-1 for L1 sheets, r1..r1+r2-1 for L2.
struct Event {
  Rational beta;
  int strand1;
  int strand2;
};

// Sheet index k in [0, r): the point lies on the graph branch phi(x + k).
int sheet_of(const LineBrane& l, const Rational& param, const Mod1& base) {
  const Rational u = Rational(l.r) * param;
  const Rational k = u - base.value();
  assert(k.is_integer());
  return static_cast<int>(k.numerator());
}

std::vector<Event> surgery_events(const SurgerySpec& spec) {
  std::vector<Event> events;
  events.reserve(spec.k.size());
  for (const auto& p : spec.k) {
    events.push_back({p.base.value(), sheet_of(spec.l1, p.param1, p.base),
                      spec.l1.r + sheet_of(spec.l2, p.param2, p.base)});
  }
  std::sort(events.begin(), events.end(),
            [](const Event& a, const Event& b) { return a.beta < b.beta; });
  return events;
}

// Sheet value at base-lift x for strand s (x in [0, 1]).
Rational strand_value(const SurgerySpec& spec, int s, const Rational& x) {
  if (s < spec.l1.r) return spec.l1.phi(x + Rational(s));
  return spec.l2.phi(x + Rational(s - spec.l1.r));
}

// Covering monodromy x -> x + 1: sheet k continues as sheet k + 1 (mod r).
int next_strand(const SurgerySpec& spec, int s) {
  if (s < spec.l1.r) return (s + 1) % spec.l1.r;
  return spec.l1.r + (s - spec.l1.r + 1) % spec.l2.r;
}

}  // namespace

SurgerySpec::SurgerySpec(LineBrane l1_, LineBrane l2_,
                         std::vector<IntersectionPoint> k_, Rational b_)
    : l1(std::move(l1_)), l2(std::move(l2_)), b(std::move(b_)) {
  const long long det = static_cast<long long>(l1.r) * l2.d -
                        static_cast<long long>(l2.r) * l1.d;
  if (det <= 0) {
    throw DomainError(ErrorCode::UnsupportedOrientation,
                      "surgery needs r1*d2 > r2*d1");
  }
  const auto all = intersect_lines(l1, l2);
  std::vector<IntersectionPoint> canonical;
  for (const auto& q : k_) {
    auto it = std::find(all.begin(), all.end(), q);
    if (it == all.end()) {
      throw DomainError(ErrorCode::Precondition,
                        "surgery point is not an intersection point");
    }
    if (std::find(canonical.begin(), canonical.end(), *it) != canonical.end()) {
      throw DomainError(ErrorCode::Precondition, "duplicate surgery point");
    }
    canonical.push_back(*it);
  }
  std::sort(canonical.begin(), canonical.end(),
            [](const IntersectionPoint& a, const IntersectionPoint& b) {
              if (a.base != b.base) return a.base < b.base;
              return a.fiber < b.fiber;
            });
  k = std::move(canonical);
}

std::vector<IntersectionPoint> SurgerySpec::all_points() const {
  return intersect_lines(l1, l2);
}

int StrandPermutation::cycle_count() const {
  return static_cast<int>(cycles().size());
}

std::vector<std::vector<int>> StrandPermutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(size, false);
  for (int s = 0; s < size; ++s) {
    if (seen[s]) continue;
    std::vector<int> cycle;
    for (int t = s; !seen[t]; t = map[t]) {
      seen[t] = true;
      cycle.push_back(t);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

StrandPermutation components(const SurgerySpec& spec) {
  const int size = spec.l1.r + spec.l2.r;
  const auto events = surgery_events(spec);

  StrandPermutation perm{size, {}};
  perm.map.resize(size);
  for (int s = 0; s < size; ++s) {
    int cur = s;
    for (const auto& e : events) {
      if (cur == e.strand1) cur = e.strand2;
      else if (cur == e.strand2) cur = e.strand1;
    }
    perm.map[s] = next_strand(spec, cur);
  }
  return perm;
}

BraneCollection surger(const SurgerySpec& spec) {
  const int size = spec.l1.r + spec.l2.r;
  const auto events = surgery_events(spec);
  const bool connected = components(spec).cycle_count() == 1;

  BraneCollection out;
  std::vector<bool> visited(size, false);
  for (int start = 0; start < size; ++start) {
    if (visited[start]) continue;

    // Trace the component through the glued sheets; the lift value on
    // strand s during a lap is strand_value(s, x) + offset.
    std::map<Rational, Rational> breakpoints;
    int strand = start;
    Rational offset(0);
    int lap = 0;
    breakpoints.emplace(Rational(0), strand_value(spec, strand, Rational(0)));
    do {
      visited[strand] = true;
      for (const auto& e : events) {
        if (strand != e.strand1 && strand != e.strand2) continue;
        const Rational value = strand_value(spec, strand, e.beta) + offset;
        const int other = (strand == e.strand1) ? e.strand2 : e.strand1;
        const Rational new_offset = value - strand_value(spec, other, e.beta);
        assert(new_offset.is_integer());
        const Rational x = Rational(lap) + e.beta;
        auto [it, inserted] = breakpoints.emplace(x, value);
        assert(inserted || it->second == value);
        strand = other;
        offset = new_offset;
      }
      const Rational end_value = strand_value(spec, strand, Rational(1)) + offset;
      strand = next_strand(spec, strand);
      offset = end_value - strand_value(spec, strand, Rational(0));
      assert(offset.is_integer());
      ++lap;
    } while (strand != start);

    const int degree = static_cast<int>(offset.numerator());
    std::vector<std::pair<Rational, Rational>> pts(breakpoints.begin(),
                                                   breakpoints.end());
    out.components.emplace_back(lap, degree,
                                connected ? spec.b : Rational(0), pts);
  }

  const auto [hr, hd] = homology_class(out);
  assert(hr == spec.l1.r + spec.l2.r && hd == spec.l1.d + spec.l2.d);
  return out;
}

std::vector<IntersectionPoint> leftover_self_intersections(
    const SurgerySpec& spec) {
  std::vector<IntersectionPoint> out;
  for (const auto& p : spec.all_points()) {
    if (std::find(spec.k.begin(), spec.k.end(), p) == spec.k.end()) {
      out.push_back(p);
    }
  }
  return out;
}

Rational area_integral(const PLMultiSection& s) {
  const auto& bp = s.breakpoints;
  Rational total(0);
  for (std::size_t i = 0; i < bp.size(); ++i) {
    const auto& a = bp[i];
    const auto b = (i + 1 < bp.size())
                       ? bp[i + 1]
                       : std::make_pair(bp[0].first + Rational(s.r),
                                        bp[0].second + Rational(s.d));
    total += (b.first - a.first) * (a.second + b.second) / Rational(2);
  }
  return total;
}

Int surgery_residue(const SurgerySpec& spec) {
  if (components(spec).cycle_count() != 1) {
    throw DomainError(ErrorCode::DisconnectedResult,
                      "surgery residue needs a connected surgered domain");
  }
  const auto result = surger(spec);
  assert(result.components.size() == 1);
  const Rational n = area_integral(result.components.front()) -
                     Rational(spec.l1.r * spec.l1.d, 2) -
                     Rational(spec.l2.r * spec.l2.d, 2) - spec.l1.c - spec.l2.c;
  assert(n.is_integer());
  return n.numerator();
}

}  // namespace syz
