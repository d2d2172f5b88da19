#include <functional>

#include "doctest.h"
#include "planeaut/errors.hpp"
#include "planeaut/io.hpp"

using namespace planeaut;

namespace {

int parse_error_line(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("polynomial files") {
  const TernaryForm f = parse_poly(
      "# a quartic\n"
      "zeta 12\n"
      "degree 4\n"
      "4 0 0 : 1\n"
      "0 4 0 : z^3 + 1   # i + 1\n"
      "\n"
      "0 0 4 : -1/2\n");
  CHECK(f.degree() == 4);
  CHECK(f.coefficient({0, 4, 0}) == CycloElem::zeta(4) + 1);
  CHECK(f.coefficient({0, 0, 4}) == CycloElem(Rational(-1, 2)));
  CHECK(f.terms().size() == 3);

  for (const TernaryForm& g : {family_form(Family::Hessian6, 6), family_form(Family::Wiman6, 6),
                               family_form(Family::Fprime, 6, CycloElem::zeta(5) + 2), f})
    CHECK(parse_poly(format_poly(g)) == g);

  CHECK(parse_error_line([] { parse_poly("zeta 1\ndegree 4\n4 0 0 : 1\n4 0 0 : 2\n"); }) == 4);
  CHECK(parse_error_line([] { parse_poly("zeta 1\ndegree 4\n3 0 0 : 1\n"); }) == 3);
  CHECK(parse_error_line([] { parse_poly("zeta 1\ndegree 4\n4 0 0 : z +\n"); }) == 3);
  CHECK(parse_error_line([] { parse_poly("zeta 1\ndegree 4\n4 0 0 1\n"); }) == 3);
  CHECK(parse_error_line([] { parse_poly("zeta 0\ndegree 4\n"); }) == 1);
  CHECK_THROWS_AS(parse_poly("degree 4\n"), ParseError);
  CHECK_THROWS_AS(read_poly_file("/nonexistent/curve.txt"), ParseError);
}

TEST_CASE("matrix and generator files") {
  const ProjTransform m = parse_matrix("zeta 3\n0, 1, 0\n0, 0, z\n1, 0, 0\n");
  CHECK(m(1, 2) == CycloElem::zeta(3));
  CHECK(parse_matrix("zeta 1\n0 1 0\n0 0 1\n1 0 0\n") == ProjTransform(permutation3(1, 2, 0)));
  CHECK(parse_matrix(format_matrix(m)) == m);

  // The second block inherits zeta 4 from the first.
  auto gens = parse_generators("zeta 4\nz, 0, 0\n0, 1, 0\n0, 0, 1\n\n1, 0, 0\n0, z, 0\n0, 0, 1\n");
  REQUIRE(gens.size() == 2);
  CHECK(gens[1] == ProjTransform(diag3(1, CycloElem::zeta(4), 1)));

  auto h = hessian_generators();
  std::vector<ProjTransform> hv(h.begin(), h.end());
  CHECK(parse_generators(format_generators(hv)) == hv);

  CHECK(parse_error_line([] { parse_matrix("zeta 1\n1, 0\n0, 1, 0\n0, 0, 1\n"); }) == 2);
  CHECK_THROWS_AS(parse_matrix("zeta 1\n1, 0, 0\n0, 1, 0\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("zeta 1\n1, 0, 0\n1, 0, 0\n0, 0, 1\n"), ParseError);  // singular
}

TEST_CASE("JSON round trips") {
  const TernaryForm f = family_form(Family::Hessian6, 6);
  CHECK(form_from_json(to_json(f)) == f);
  const ProjTransform t = hessian_generators()[2];
  CHECK(transform_from_json(to_json(t)) == t);

  auto inst = make_family(Family::Dcurve, 6);
  const ClassificationReport rep = classify(inst.form, closure(inst.standard_generators));
  nlohmann::json j = rep;
  CHECK(j["primary"] == "a-ii");
  CHECK(j.get<ClassificationReport>() == rep);
  CHECK(nlohmann::json::parse(j.dump()).get<ClassificationReport>() == rep);

  const BoundReport b = hurwitz(10);
  nlohmann::json jb = b;
  CHECK(jb["value"] == "756");
  CHECK(jb.get<BoundReport>() == b);

  const AuditReport a = theorem3_audit(61);
  CHECK(nlohmann::json(a).get<AuditReport>() == a);

  CHECK_THROWS(form_from_json(nlohmann::json::parse(R"({"zeta": 1})")));
}

TEST_CASE("text renderings") {
  auto inst = make_family(Family::Fdd1, 5);
  const std::string text = format_text(classify(inst.form, closure(inst.standard_generators)));
  CHECK(text.find("primary case: a-i") != std::string::npos);
  CHECK(text.find("consistent: yes") != std::string::npos);
  CHECK(format_text(arakawa_report(6, 1, 1, 4)).find("16") != std::string::npos);
  CHECK(format_text(theorem3_audit(8)).find("384") != std::string::npos);
}
