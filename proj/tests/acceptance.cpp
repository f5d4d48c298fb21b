// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is self-contained and uses a fixed seed.

#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gen.hpp"
#include "syz/covering.hpp"
#include "syz/intersect.hpp"
#include "syz/mirror.hpp"
#include "syz/surgery.hpp"

using namespace syz;

namespace {

struct Criterion {
  const char* title;
  std::function<void()> body;
};

struct Failure {
  std::string what;
  explicit Failure(std::string w) : what(std::move(w)) {}
};

void require(bool ok, const char* what) {
  if (!ok) throw Failure(what);
}

MirrorBundle line_mirror(const LineBrane& l) {
  return syz_transform({{line_to_pl(l)}});
}

// 1. a = r*d/2 + c for 100 random branes; the (2,1,0) instance in full.
void criterion1() {
  gen::Rng rng(1001);
  for (int i = 0; i < 100; ++i) {
    const LineBrane l = gen::rand_line(rng);
    const MirrorBundle m = line_mirror(l);
    require(m.summands.size() == 1, "one summand per line");
    require(m.summands[0].a == Rational(l.r * l.d, 2) + l.c,
            "a != r*d/2 + c");
  }
  const LineBrane inst(2, 1, Rational(0), Rational(2, 7));
  const MirrorBundle m = line_mirror(inst);
  require(m.summands[0].a == Rational(1), "(2,1,0) instance: a != 1");
  const DetClass det = det_class(m);
  require(det.degree == -1, "(2,1,0) instance: det degree != -1");
  require(det.a_mod1 == normalize(Rational(0)), "(2,1,0) instance: det a != 0");
  require(det.b_mod1 == normalize(inst.b + Rational(1, 2)),
          "(2,1,0) instance: det b != b + 1/2");
}

// 2. Full worked-example pipeline.
void criterion2() {
  const LineBrane l1(1, 0, Rational(1, 2), Rational(1, 2));
  const LineBrane l2(1, 3, Rational(0), Rational(0));
  const auto pts = grade_points(intersect_lines(l1, l2), l1, l2);
  require(pts.size() == 3, "expected 3 intersection points");
  const Rational bases[3] = {Rational(1, 6), Rational(1, 2), Rational(5, 6)};
  for (int i = 0; i < 3; ++i) {
    require(pts[i].base.value() == bases[i], "base coordinate mismatch");
    require(pts[i].index == 1, "index != 1");
  }

  std::vector<BraneCollection> surgeries;
  for (const auto& p : pts) {
    const SurgerySpec spec(l1, l2, {p}, Rational(0));
    const auto result = surger(spec);
    require(result.components.size() == 1, "single-point surgery disconnected");
    require(result.components[0].r == 2 && result.components[0].d == 3,
            "surgery class != (2,3)");
    surgeries.push_back(result);
  }

  for (int num = -3; num <= 3; ++num) {
    require(verify_extension(l1, l2, {pts[0]}, Rational(num)).verdict,
            "extension should hold for integer b");
  }
  for (const Rational bad : {Rational(1, 2), Rational(1, 3), Rational(-2, 5)}) {
    require(!verify_extension(l1, l2, {pts[0]}, bad).verdict,
            "extension should fail for non-integer b");
  }

  for (size_t i = 0; i < surgeries.size(); ++i) {
    for (size_t j = i + 1; j < surgeries.size(); ++j) {
      require(is_isomorphic(syz_transform(surgeries[i]),
                            syz_transform(surgeries[j])),
              "mirrors of two connected surgeries not isomorphic");
      require(lifted_ham_equivalent(surgeries[i].components[0],
                                    surgeries[j].components[0]),
              "connected surgeries not lifted-Hamiltonian equivalent");
    }
  }
}

// 3. Extension integrality iff determinant classes add, 200 random specs.
void criterion3() {
  gen::Rng rng(1003);
  for (int i = 0; i < 200; ++i) {
    const SurgerySpec base = gen::rand_spec(rng, true, true);
    const LineBrane l1(base.l1.r, base.l1.d, base.l1.c, gen::rand_rational(rng));
    const LineBrane l2(base.l2.r, base.l2.d, base.l2.c, gen::rand_rational(rng));
    const Rational b = gen::rand_rational(rng);
    const auto rep = verify_extension(l1, l2, base.k, b);
    require(rep.verdict ==
                (l1.b + l2.b + Rational(1, 2) - b).is_integer(),
            "verdict differs from the integrality condition");
    require(rep.verdict == (rep.det_surgery == rep.det_sum),
            "verdict differs from the determinant-class route");
  }
}

// 4. Residue integrality on 200 random connected specs.
void criterion4() {
  gen::Rng rng(1004);
  for (int i = 0; i < 200; ++i) {
    const SurgerySpec spec = gen::rand_spec(rng, true);
    const Int n = surgery_residue(spec);  // hard-asserts integrality inside
    const Rational recheck =
        area_integral(surger(spec).components.front()) -
        Rational(spec.l1.r * spec.l1.d, 2) - Rational(spec.l2.r * spec.l2.d, 2) -
        spec.l1.c - spec.l2.c;
    require(recheck == Rational(n), "residue recomputation mismatch");
  }
}

// 5. Gauge equivalence vs. Laurent-monomial brute force, 100 random factors.
void criterion5() {
  gen::Rng rng(1005);
  int positive = 0, negative = 0;
  for (int i = 0; i < 100; ++i) {
    const Rational a1 = gen::rand_rational(rng), b1 = gen::rand_rational(rng);
    Rational a2, b2;
    if (i % 2 == 0) {
      a2 = a1 + Rational(gen::rand_int(rng, -10, 10));
      b2 = b1 + Rational(gen::rand_int(rng, -10, 10));
    } else {
      a2 = gen::rand_rational(rng);
      b2 = gen::rand_rational(rng);
    }
    bool oracle = false;
    if ((b1 - b2).is_integer()) {
      for (int n = -20; n <= 20 && !oracle; ++n) {
        oracle = (a1 - a2 == Rational(n));
      }
    }
    const bool got = gauge_equivalent_constant(0, a1, b1, 0, a2, b2);
    require(got == oracle, "gauge decision differs from brute force");
    (got ? positive : negative)++;
  }
  require(positive > 0 && negative > 0, "both outcomes must occur");
}

// 6. Rank-2 flat surgery mirror splits with phases {b/2, b/2 + 1/2}; never a
// trivial self-extension.
void criterion6() {
  const LineBrane down(1, -1, Rational(0), Rational(0));
  const LineBrane up(1, 1, Rational(0), Rational(0));
  const auto pts = intersect_lines(down, up);
  require(pts.size() == 2, "expected 2 points for the (2,0) surgery");
  for (int k = 0; k < 24; ++k) {
    const Rational b(k, 24);
    const SurgerySpec spec(down, up, {pts[0]}, b);
    const auto mirror = syz_transform(surger(spec));
    require(mirror.summands.size() == 1, "surgery not connected");
    const Summand& s = mirror.summands[0];
    require(s.rank == 2 && s.dshift == 0, "mirror not rank-2 flat");
    std::set<Mod1> phases;
    for (const auto& cls : split_flat(s)) phases.insert(cls.b_mod1);
    const std::set<Mod1> expected = {normalize(b / Rational(2)),
                                     normalize(b / Rational(2) + Rational(1, 2))};
    require(phases == expected, "phase multiset != {b/2, b/2 + 1/2}");
    require(!self_extension_check(s), "self-extension check must fail");
  }
}

// 7. Upstairs/downstairs intersection bijection, 50 random valid instances.
void criterion7() {
  gen::Rng rng(1007);
  int done = 0;
  while (done < 50) {
    const int m1 = gen::rand_int(rng, 1, 3);
    const int m2 = gen::rand_int(rng, 1, 3);
    const int r1 = m1 * gen::rand_int(rng, 1, 2);
    const int r2 = m2 * gen::rand_int(rng, 1, 2);
    const int d1 = gen::rand_int(rng, -5, 5);
    const int d2 = gen::rand_int(rng, -5, 5);
    if (std::gcd(r1, d1) != 1 || std::gcd(r2, d2) != 1) continue;
    if (static_cast<long long>(r1) * d2 == static_cast<long long>(r2) * d1) continue;
    const LineBrane l1(r1, d1, gen::rand_rational(rng), gen::rand_rational(rng));
    const LineBrane l2(r2, d2, gen::rand_rational(rng), gen::rand_rational(rng));
    const auto rep =
        verify_intersection_bijection(l1, l2, BaseCover(m1), BaseCover(m2));
    require(rep.holds && rep.upstairs == rep.downstairs,
            "upstairs count != downstairs count");
    ++done;
  }
}

// 8. Cross-module property sweep.
void criterion8() {
  gen::Rng rng(1008);

  for (int i = 0; i < 100; ++i) {
    const auto [l1, l2] = gen::rand_pair(rng);
    const long long det = static_cast<long long>(l1.r) * l2.d -
                          static_cast<long long>(l2.r) * l1.d;
    require(intersect_lines(l1, l2).size() ==
                static_cast<size_t>(det < 0 ? -det : det),
            "count != |r1*d2 - r2*d1|");
  }

  for (int i = 0; i < 100; ++i) {
    const SurgerySpec spec = gen::rand_spec(rng);
    const auto result = surger(spec);
    const auto cls = homology_class(result);
    require(cls.first == spec.l1.r + spec.l2.r &&
                cls.second == spec.l1.d + spec.l2.d,
            "homology not additive under surgery");
    require(static_cast<int>(result.components.size()) ==
                components(spec).cycle_count(),
            "trace components != permutation cycles");
  }

  for (int i = 0; i < 100; ++i) {
    const MirrorBundle m1 = line_mirror(gen::rand_line(rng));
    const MirrorBundle m2 = line_mirror(gen::rand_line(rng));
    MirrorBundle sum = m1;
    sum.summands.insert(sum.summands.end(), m2.summands.begin(),
                        m2.summands.end());
    const DetClass d1 = det_class(m1), d2 = det_class(m2), ds = det_class(sum);
    require(ds.degree == d1.degree + d2.degree &&
                ds.a_mod1 == d1.a_mod1 + d2.a_mod1 &&
                ds.b_mod1 == d1.b_mod1 + d2.b_mod1,
            "det class not additive");
  }

  for (int i = 0; i < 50; ++i) {
    LineBrane base = gen::rand_line(rng);
    while (base.d == 0) base = gen::rand_line(rng);
    const MirrorBundle x = line_mirror(base);
    const MirrorBundle y =
        line_mirror(LineBrane(base.r, base.d, base.c + Rational(1), base.b));
    const MirrorBundle z = line_mirror(
        LineBrane(base.r, base.d, base.c + Rational(1, 5), base.b));
    require(is_isomorphic(x, x), "isomorphism not reflexive");
    require(is_isomorphic(x, y) == is_isomorphic(y, x),
            "isomorphism not symmetric");
    if (is_isomorphic(x, y) && is_isomorphic(y, z)) {
      require(is_isomorphic(x, z), "isomorphism not transitive");
    }
  }
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"random + (2,1,0) line transforms match the closed form", criterion1},
      {"worked-example pipeline end to end", criterion2},
      {"extension verdict iff determinant classes add (200 specs)", criterion3},
      {"surgery residue exactly integral (200 specs)", criterion4},
      {"gauge decision matches Laurent brute force (100 factors)", criterion5},
      {"rank-2 flat mirror phases {b/2, b/2+1/2}, never self-extension", criterion6},
      {"intersection bijection under base covers (50 instances)", criterion7},
      {"cross-module property sweep", criterion8},
  };

  int failures = 0;
  int n = 0;
  for (const auto& c : criteria) {
    ++n;
    try {
      c.body();
      std::printf("criterion %d: pass - %s\n", n, c.title);
    } catch (const Failure& f) {
      std::printf("criterion %d: FAIL - %s (%s)\n", n, c.title, f.what.c_str());
      ++failures;
    } catch (const std::exception& e) {
      std::printf("criterion %d: FAIL - %s (unexpected: %s)\n", n, c.title,
                  e.what());
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
