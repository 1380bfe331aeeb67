#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nilhom/cli.hpp"

using namespace nilhom;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("components commands") {
  auto r = run({"components", "su2", "-n", "2", "-q", "3", "--method", "both"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"abelian\":1,\"agree\":true,\"nonabelian\":7,\"per_r\":{\"2\":1,\"3\":6}}\n");

  CHECK(run({"components", "su2", "-n", "0", "-q", "2"}).code == 2);
  CHECK(!run({"components", "su2", "-n", "0", "-q", "2"}).err.empty());

  auto so3 = run({"components", "so3", "-n", "2", "-q", "3"});
  CHECK(so3.code == 0);
  CHECK(so3.out.find("\"m_n\":1") != std::string::npos);
  CHECK(so3.out.find("\"m_nq\":3") != std::string::npos);
  CHECK(so3.out.find("\"covering_consistent\":true") != std::string::npos);

  auto u2 = run({"components", "u2", "-n", "2", "-q", "3", "--method", "both"});
  CHECK(u2.code == 0);
  CHECK(u2.out.find("\"type_z2\":3") != std::string::npos);
  CHECK(u2.out.find("\"agree\":true") != std::string::npos);

  auto tsv = run({"--tsv", "components", "su2", "-n", "2", "-q", "3"});
  CHECK(tsv.code == 0);
  CHECK(tsv.out.find("2\t1\n") != std::string::npos);
  CHECK(tsv.out.find("total\t7\n") != std::string::npos);

  // reruns are byte-identical
  CHECK(run({"components", "su2", "-n", "3", "-q", "3", "--method", "both"}).out ==
        run({"--workers", "2", "components", "su2", "-n", "3", "-q", "3", "--method",
             "both"})
            .out);
}

TEST_CASE("summands commands") {
  auto r = run({"summands", "su2", "-k", "2", "-q", "2", "--method", "both"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"K\":1") != std::string::npos);
  auto so3 = run({"--tsv", "summands", "so3", "-k", "2", "-q", "3"});
  CHECK(so3.code == 0);
  CHECK(so3.out == "N\t1\nNq\t3\n");
  CHECK(run({"summands", "su2", "-k", "0", "-q", "2"}).code == 2);
}

TEST_CASE("group and poset commands") {
  auto r = run({"group", "info", "Q2^4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"order\":16") != std::string::npos);
  CHECK(r.out.find("\"nilpotency_class\":3") != std::string::npos);
  CHECK(run({"group", "info", "Q2^2"}).code == 2);  // no quaternion group of order 4

  auto p = run({"poset", "Q2^4", "-r", "3"});
  CHECK(p.code == 0);
  CHECK(p.out.find("Q₈ ∗_{μ₄} Q₈ ∗_{μ₄} μ₈") != std::string::npos);
  CHECK(p.out.find("\"tree\":true") != std::string::npos);
  CHECK(run({"poset", "Q2^4", "-r", "9"}).code == 2);
}

TEST_CASE("gb commands") {
  std::string path =
      (std::filesystem::temp_directory_path() / "nilhom_cli_test_ideal.txt").string();
  {
    std::ofstream f(path);
    f << "ring: y1:1, y2:1, y3:1, b1:2, b2:2, z:2\n"
         "y1*y2\ny1*y3\ny2*y3\ny3^2\ny2*b1\ny3*b1\ny1*b2\ny3*b2\nb1*b2\n"
         "b1^2 + y1^2*z\nb2^2 + y2^2*z\n";
  }
  auto basis = run({"gb", "basis", "--ring", path});
  CHECK(basis.code == 0);
  CHECK(basis.out.find("\"order\":\"grevlex\"") != std::string::npos);

  auto nf = run({"gb", "reduce", "--ring", path, "--poly", "y1*y2 + y3"});
  CHECK(nf.code == 0);
  CHECK(nf.out == "{\"normal_form\":\"y3\"}\n");

  auto colon = run({"gb", "colon", "--ring", path, "--poly",
                    "z + b1 + y1^2 + b2 + y2^2"});
  CHECK(colon.code == 0);
  CHECK(colon.out == "{\"colon\":[]}\n");

  auto hilb = run({"--tsv", "gb", "hilbert", "--ring", path, "--maxdeg", "3"});
  CHECK(hilb.code == 0);
  CHECK(hilb.out == "0\t1\n1\t3\n2\t5\n3\t7\n");

  CHECK(run({"gb", "reduce", "--ring", path}).code == 2);  // --poly missing
  CHECK(run({"gb", "basis", "--ring", "/nonexistent"}).code == 2);
  CHECK(run({"gb", "reduce", "--ring", path, "--poly", "q"}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("spectral commands") {
  auto b = run({"spectral", "bcom", "3", "--maxdeg", "4"});
  CHECK(b.code == 0);
  CHECK(b.out.find("\"hilbert\":[1,3,3,3,3]") != std::string::npos);
  CHECK(run({"spectral", "bcom"}).code == 2);

  auto s = run({"spectral", "b3q16", "--maxdeg", "10"});
  CHECK(s.code == 0);
  CHECK(s.out.find("\"poincare\":[1,3,4,4,3,3,4,4,3,3,4]") != std::string::npos);
  CHECK(s.out.find("\"annihilator\":[\"y3\"]") != std::string::npos);
  CHECK(s.out.find("\"d5_candidate_vanishes\":true") != std::string::npos);
}

TEST_CASE("verify appendix") {
  auto r = run({"verify", "appendix"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"all_pass\":true") != std::string::npos);
  CHECK(r.out.find("colon_k_zero") != std::string::npos);
  CHECK(r.out.find("colon_sq1k_is_y3") != std::string::npos);
  CHECK(r.out.find("d5_candidate_reduces_to_zero") != std::string::npos);
  auto tsv = run({"--tsv", "verify", "appendix"});
  CHECK(tsv.out ==
        "colon_k_zero\tpass\ncolon_sq1k_is_y3\tpass\nd5_candidate_reduces_to_zero\tpass\n");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"components", "huh", "-n", "2", "-q", "2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(!run({"--help"}).out.empty());
}
