#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "syz/covering.hpp"
#include "syz/document.hpp"
#include "syz/errors.hpp"
#include "syz/intersect.hpp"
#include "syz/mirror.hpp"
#include "syz/surgery.hpp"
#include "syz/svg.hpp"

namespace {

using namespace syz;

std::string bool_str(bool v) { return v ? "true" : "false"; }

void print_points(const std::vector<IntersectionPoint>& points, bool graded) {
  std::cout << "count = " << points.size() << "\n";
  for (size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    std::cout << "point " << i << ": base = " << p.base.str()
              << ", fiber = " << p.fiber.str()
              << ", param1 = " << p.param1.str()
              << ", param2 = " << p.param2.str();
    if (graded) std::cout << ", index = " << p.index;
    std::cout << "\n";
  }
}

void print_mirror(const MirrorBundle& m) {
  for (size_t i = 0; i < m.summands.size(); ++i) {
    const auto& s = m.summands[i];
    std::cout << "summand " << i << ": rank = " << s.rank
              << ", degree = " << -s.dshift << ", a = " << s.a.str()
              << ", b = " << s.b.str();
    if (s.rank == 1 && s.dshift == 0 && normalize(s.a) == normalize(Rational(0)) &&
        normalize(s.b) == normalize(Rational(0))) {
      std::cout << " (trivial)";
    }
    std::cout << "\n";
  }
  const DetClass det = det_class(m);
  std::cout << "rank = " << m.rank() << "\n";
  std::cout << "degree = " << m.degree() << "\n";
  std::cout << "det degree = " << det.degree << "\n";
  std::cout << "det a = " << det.a_mod1.str() << "\n";
  std::cout << "det b = " << det.b_mod1.str() << "\n";
}

int run_intersect(const Document& doc, const std::string& n1,
                  const std::string& n2) {
  const LineBrane& l1 = doc.brane(n1);
  const LineBrane& l2 = doc.brane(n2);
  auto points = intersect_lines(l1, l2);
  const bool graded = static_cast<long long>(l1.r) * l2.d >
                      static_cast<long long>(l2.r) * l1.d;
  if (graded) points = grade_points(std::move(points), l1, l2);
  print_points(points, graded);
  return 0;
}

int run_surger(const Document& doc, const std::string& name) {
  const SurgerySpec spec = doc.make_spec(name);
  const BraneCollection result = surger(spec);
  std::cout << "components = " << result.components.size() << "\n";
  for (size_t i = 0; i < result.components.size(); ++i) {
    const auto& c = result.components[i];
    std::cout << "component " << i << ": r = " << c.r << ", d = " << c.d
              << ", b = " << c.b.str() << ", breakpoints =";
    for (const auto& [x, y] : c.breakpoints) {
      std::cout << " (" << x.str() << ", " << y.str() << ")";
    }
    std::cout << "\n";
  }
  const auto cls = homology_class(result);
  std::cout << "class = (" << cls.first << ", " << cls.second << ")\n";
  const auto leftover = leftover_self_intersections(spec);
  std::cout << "self_intersections = " << leftover.size() << "\n";
  if (result.components.size() == 1) {
    std::cout << "area = " << area_integral(result.components[0]).str() << "\n";
    std::cout << "residue = " << surgery_residue(spec) << "\n";
  } else {
    std::cout << "note = disconnected result; local systems set to 0\n";
  }
  return 0;
}

int run_mirror(const Document& doc, const std::string& name) {
  print_mirror(syz_transform(doc.resolve(name)));
  return 0;
}

int run_isom(const Document& doc, const std::string& a, const std::string& b) {
  const bool iso = is_isomorphic(syz_transform(doc.resolve(a)),
                                 syz_transform(doc.resolve(b)));
  std::cout << "isomorphic = " << bool_str(iso) << "\n";
  return 0;
}

int run_verify_extension(const Document& doc, const std::string& name,
                         const std::optional<std::string>& b_override) {
  const SurgerySpec spec = doc.make_spec(name);
  const Rational b =
      b_override ? Rational::parse(*b_override) : spec.b;
  const ExtensionReport rep = verify_extension(spec.l1, spec.l2, spec.k, b);
  std::cout << "verdict = " << bool_str(rep.verdict) << "\n";
  std::cout << "b1+b2+1/2-b = " << rep.criterion_value.str()
            << (rep.verdict ? " in Z" : " not in Z") << "\n";
  std::cout << "area_integrality = " << bool_str(rep.first_integrality)
            << " (N = " << rep.area_residue << ")\n";
  std::cout << "phase_integrality = " << bool_str(rep.second_integrality) << "\n";
  std::cout << "det_surgery = (" << rep.det_surgery.degree << ", "
            << rep.det_surgery.a_mod1.str() << ", "
            << rep.det_surgery.b_mod1.str() << ")\n";
  std::cout << "det_sum = (" << rep.det_sum.degree << ", "
            << rep.det_sum.a_mod1.str() << ", " << rep.det_sum.b_mod1.str()
            << ")\n";
  return 0;
}

int run_lift(const Document& doc, const std::string& name, int m) {
  const LiftedBrane lifted = lift_brane(doc.brane(name), BaseCover(m));
  std::cout << "components = " << lifted.components.size() << "\n";
  for (size_t i = 0; i < lifted.components.size(); ++i) {
    const auto& l = lifted.components[i];
    std::cout << "component " << i << ": r = " << l.r << ", d = " << l.d
              << ", c = " << l.c.str() << ", b = " << l.b.str()
              << ", offset = " << lifted.base_offsets[i].str() << "\n";
  }
  return 0;
}

PLMultiSection single_component(const Document& doc, const std::string& name) {
  BraneCollection c = doc.resolve(name);
  if (c.components.size() != 1) {
    throw DomainError(ErrorCode::DisconnectedResult,
                      "\"" + name + "\" does not resolve to a connected brane");
  }
  return c.components[0];
}

int run_lifted_ham(const Document& doc, const std::string& a,
                   const std::string& b) {
  const bool eq = lifted_ham_equivalent(single_component(doc, a),
                                        single_component(doc, b));
  std::cout << "equivalent = " << bool_str(eq) << "\n";
  return 0;
}

int run_draw(const Document& doc, const std::string& out,
             const std::optional<std::string>& spec_name) {
  const std::string svg = render_svg(doc, spec_name);
  std::ofstream f(out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << out << " for writing\n";
    return 1;
  }
  f << svg;
  if (!f) {
    std::cerr << "error: write to " << out << " failed\n";
    return 1;
  }
  std::cout << "wrote = " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact SYZ mirror-symmetry toolkit for line branes on T^2"};
  app.require_subcommand(1);

  std::string doc_path, arg1, arg2, out_path;
  std::optional<std::string> b_override, spec_name;
  int cover_m = 1;

  auto* cmd_intersect = app.add_subcommand("intersect", "intersection points of two branes");
  cmd_intersect->add_option("doc", doc_path)->required();
  cmd_intersect->add_option("L1", arg1)->required();
  cmd_intersect->add_option("L2", arg2)->required();

  auto* cmd_surger = app.add_subcommand("surger", "surger a named spec");
  cmd_surger->add_option("doc", doc_path)->required();
  cmd_surger->add_option("spec", arg1)->required();

  auto* cmd_mirror = app.add_subcommand("mirror", "mirror bundle of a brane or spec");
  cmd_mirror->add_option("doc", doc_path)->required();
  cmd_mirror->add_option("name", arg1)->required();

  auto* cmd_isom = app.add_subcommand("isom", "mirror-bundle isomorphism test");
  cmd_isom->add_option("doc", doc_path)->required();
  cmd_isom->add_option("a", arg1)->required();
  cmd_isom->add_option("b", arg2)->required();

  auto* cmd_verify = app.add_subcommand("verify-extension", "extension criterion for a spec");
  cmd_verify->add_option("doc", doc_path)->required();
  cmd_verify->add_option("spec", arg1)->required();
  std::string b_flag;
  auto* b_opt = cmd_verify->add_option("--b", b_flag, "local system parameter (overrides the spec's b)");

  auto* cmd_lift = app.add_subcommand("lift", "lift a brane through a cyclic base cover");
  cmd_lift->add_option("doc", doc_path)->required();
  cmd_lift->add_option("brane", arg1)->required();
  cmd_lift->add_option("--cover", cover_m, "cover degree m")->required();

  auto* cmd_lifted_ham = app.add_subcommand("lifted-ham", "lifted Hamiltonian equivalence");
  cmd_lifted_ham->add_option("doc", doc_path)->required();
  cmd_lifted_ham->add_option("a", arg1)->required();
  cmd_lifted_ham->add_option("b", arg2)->required();

  auto* cmd_draw = app.add_subcommand("draw", "render the document as SVG");
  cmd_draw->add_option("doc", doc_path)->required();
  cmd_draw->add_option("--out", out_path)->required();
  std::string spec_flag;
  auto* spec_opt = cmd_draw->add_option("--spec", spec_flag, "draw the surgered result of this spec");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const syz::Document doc = syz::Document::parse_file(doc_path);
    if (*b_opt) b_override = b_flag;
    if (*spec_opt) spec_name = spec_flag;
    if (*cmd_intersect) return run_intersect(doc, arg1, arg2);
    if (*cmd_surger) return run_surger(doc, arg1);
    if (*cmd_mirror) return run_mirror(doc, arg1);
    if (*cmd_isom) return run_isom(doc, arg1, arg2);
    if (*cmd_verify) return run_verify_extension(doc, arg1, b_override);
    if (*cmd_lift) return run_lift(doc, arg1, cover_m);
    if (*cmd_lifted_ham) return run_lifted_ham(doc, arg1, arg2);
    if (*cmd_draw) return run_draw(doc, out_path, spec_name);
  } catch (const syz::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const syz::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
