#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "satlab/report.hpp"

using namespace satlab;

TEST_CASE("g17 round-trips doubles exactly") {
  for (double value : {1.0 / 3.0, 3.14159265358979323846, 1e-300, 0.0, -2.5,
                       0.1 + 0.2, 6.02e23}) {
    CHECK(std::stod(g17(value)) == value);
  }
  CHECK(g17(0.0) == "0");
  CHECK(g17(2.0) == "2");
}

TEST_CASE("csv writer enforces the header width") {
  CsvWriter csv({"a", "b"});
  csv.row({"1", "2"});
  CHECK(csv.str() == "a,b\n1,2\n");
  CHECK_THROWS_AS(csv.row({"only-one"}), std::runtime_error);
}

TEST_CASE("divergence table schema and round trip") {
  DivergenceRow row;
  row.t = 1e-3;
  row.lambda_first = Complex(0.25, -0.125);
  row.lambda_second = Complex(1.0 / 3.0, 0.7);
  row.dist = 2.345;
  row.bound = 2.0 * std::log(1e3);
  const std::string csv = divergence_csv({row});

  std::istringstream lines(csv);
  std::string header, data;
  std::getline(lines, header);
  std::getline(lines, data);
  CHECK(header == "t,re_lambda,im_lambda,re_m,im_m,dist,bound");

  std::istringstream fields(data);
  std::string field;
  std::getline(fields, field, ',');
  CHECK(std::stod(field) == row.t);
  std::getline(fields, field, ',');
  CHECK(std::stod(field) == row.lambda_first.real());
  std::getline(fields, field, ',');
  CHECK(std::stod(field) == row.lambda_first.imag());
  std::getline(fields, field, ',');
  CHECK(std::stod(field) == row.lambda_second.real());
  std::getline(fields, field, ',');
  CHECK(std::stod(field) == row.lambda_second.imag());
  std::getline(fields, field, ',');
  CHECK(std::stod(field) == row.dist);
  std::getline(fields, field, ',');
  CHECK(std::stod(field) == row.bound);
}

TEST_CASE("limb and corollary table headers") {
  const std::string limbs = limb_csv({});
  CHECK(limbs ==
        "n,inner_p,inner_q,re_root,im_root,re_big_lambda,im_big_lambda,"
        "re_lower_bound,euclid_diam,hyp_diam\n");

  const std::string coro = corollary_csv({{3, 0.5}});
  CHECK(coro == "n,dist\n3,0.5\n");
}

TEST_CASE("text files round trip") {
  const std::string path = "test_report_tmp.txt";
  write_text_file(path, "line1\nline2\n");
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == "line1\nline2\n");
  in.close();
  std::remove(path.c_str());

  CHECK_THROWS_AS(write_text_file("no-such-dir/file.txt", "x"), std::runtime_error);
}
