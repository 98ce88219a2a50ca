#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fixtures.hpp"
#include "slackmat/io.hpp"
#include "slackmat/recognition.hpp"

using namespace slackmat;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return (std::filesystem::path(TEST_DATA_DIR) / name).string(); }

std::string scratch(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("slackmat_cli_" + name)).string();
}

}  // namespace

TEST_CASE("check-polytope") {
  auto r = run({"check-polytope", data("prism.matrix")});
  CHECK(r.code == 0);
  CHECK(r.out == "POLYTOPE-SLACK yes rank=4 dim=3\n");

  r = run({"check-polytope", data("counterexample.matrix"), "--oracle"});
  CHECK(r.code == 1);
  CHECK(r.out == "POLYTOPE-SLACK no rank=2 reason=ones-not-in-column-span\n");

  r = run({"--quiet", "check-polytope", data("square.matrix")});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
}

TEST_CASE("check-cone writes a certificate that verify-cert accepts") {
  const std::string cert = scratch("c.cert");
  auto r = run({"check-cone", data("counterexample.matrix"), "--certificate", cert, "--oracle"});
  CHECK(r.code == 1);
  CHECK(r.out == "CONE-SLACK no rank=2 reason=not-cone-generating\n");
  const Document d = read_document(cert);
  REQUIRE(d.kind() == DocumentKind::Cert);
  CHECK(std::holds_alternative<NoCertificate>(std::get<Certificate>(d.payload)));

  r = run({"verify-cert", data("counterexample.matrix"), cert});
  CHECK(r.code == 0);
  CHECK(r.out == "CERTIFICATE valid\n");
  r = run({"verify-cert", data("prism.matrix"), cert});
  CHECK(r.code == 1);

  r = run({"check-cone", data("prism.matrix"), "--certificate", cert});
  CHECK(r.code == 0);
  CHECK(r.out == "CONE-SLACK yes rank=4\n");
  r = run({"verify-cert", data("prism.matrix"), cert});
  CHECK(r.code == 0);
  r = run({"verify-cert", data("square.matrix"), cert});
  CHECK(r.code == 1);
  CHECK(r.out == "CERTIFICATE invalid\n");
  std::filesystem::remove(cert);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--vrep", data("square3.ext"), "--hrep", data("square.ine")});
  CHECK(r.code == 1);
  CHECK(r.out == "VERIFY not-equal reason=slack_reject\n");
  r = run({"verify", "--vrep", data("square.ext"), "--hrep", data("square.ine")});
  CHECK(r.code == 0);
  r = run({"verify", "--vrep", data("prism.ext"), "--hrep", data("prism.ine")});
  CHECK(r.code == 0);
  CHECK(r.out == "VERIFY equal reason=equal\n");
  // Prism vertices are not inside the square: input error.
  r = run({"verify", "--vrep", data("prism.ext"), "--hrep", data("square.ine")});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("slack, reconstruct and incidence") {
  auto r = run({"slack", "--vrep", data("prism.ext"), "--hrep", data("prism.ine")});
  CHECK(r.code == 0);
  CHECK(parse(r.out) == Document{fixtures::prism_scaled()});

  const std::string v = scratch("r.ext"), h = scratch("r.ine");
  r = run({"reconstruct", data("prism.matrix"), "--out-v", v, "--out-h", h});
  CHECK(r.code == 0);
  CHECK(r.out == "RECONSTRUCT polytope dim=3 points=6 inequalities=5\n");
  r = run({"slack", "--vrep", v, "--hrep", h});
  CHECK(parse(r.out) == Document{fixtures::prism()});

  r = run({"reconstruct", data("prism.matrix"), "--cone", "--out-v", v, "--out-h", h});
  CHECK(r.code == 0);
  r = run({"slack", "--vrep", v, "--hrep", h});
  CHECK(parse(r.out) == Document{fixtures::prism()});
  std::filesystem::remove(v);
  std::filesystem::remove(h);

  r = run({"reconstruct", data("counterexample.matrix")});
  CHECK(r.code == 1);

  r = run({"incidence", data("counterexample.matrix")});
  CHECK(r.code == 0);
  CHECK(r.out == "MATRIX 4 2\n0 0\n0 0\n1 1\n1 1\n");
}

TEST_CASE("polygon-check and polar-realize") {
  auto r = run({"polygon-check", data("square.matrix")});
  CHECK(r.code == 0);
  CHECK(r.out == "POLYGON-SLACK yes\n");
  r = run({"polygon-check", data("prism.matrix")});
  CHECK(r.code == 2);

  const std::string polar = scratch("polar.ext");
  r = run({"polar-realize", data("prism_scaled.matrix"), "--out-polar", polar});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("POLAR-REALIZE yes scale="));
  CHECK(std::get<PolytopeRep>(read_document(polar).payload).points.size() == 5);
  std::filesystem::remove(polar);

  r = run({"polar-realize", data("prism.matrix")});
  CHECK(r.code == 1);
  CHECK(r.out == "POLAR-REALIZE no reason=transpose-ones-not-in-column-span\n");
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate", data("prism.matrix")}).code == 2);
  CHECK(run({"check-cone"}).code == 2);
  CHECK(run({"check-cone", data("missing.matrix")}).code == 2);
  const auto bad = run({"check-cone", data("bad_denominator.matrix")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(run({"check-cone", data("prism.ext")}).code == 2);
  CHECK(run({"slack", "--vrep", data("prism.ext"), "--hrep", data("prism.matrix")}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("check-polytope") != std::string::npos);
  CHECK(help.out.find("verify-cert") == std::string::npos);
}
