#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nlat/oracle.hpp"
#include "nlat/random.hpp"
#include "nlat/serialize.hpp"
#include "test_support.hpp"

using namespace nlat;

TEST_CASE("subsets serialize as ascending 1-based arrays") {
  CHECK(subset_json(Subset::of({0, 2, 3})) == Json::array({1, 3, 4}));
  CHECK(subset_json(Subset{}) == Json::array());
  CHECK(subset_from_json(nlohmann::json::array({1, 3}), 4) == Subset::of({0, 2}));
  CHECK_THROWS_AS(subset_from_json(nlohmann::json::array({0}), 4), error);
  CHECK_THROWS_AS(subset_from_json(nlohmann::json::array({5}), 4), error);
}

TEST_CASE("lattice document") {
  NeighborhoodLattice lat{1, Subset::of({0}), Subset::of({0, 2, 3})};
  int projections = 3;
  Json doc = lattice_json(lat, &projections);
  CHECK(doc["node"] == 2);
  CHECK(doc["m"] == Json::array({1}));
  CHECK(doc["M"] == Json::array({1, 3, 4}));
  CHECK(doc["size"] == 4);
  CHECK(doc["projections"] == 3);
  CHECK_FALSE(lattice_json(lat).contains("projections"));
}

TEST_CASE("decomposition document") {
  GramMatrix g = gram_star(4);
  Json doc = decomposition_json(decompose(g, 1));
  CHECK(doc["node"] == 2);
  CHECK(doc["K"] == 5);
  CHECK(doc["intervals"].size() == 5);
  CHECK(doc["intervals"][0].contains("m"));
  CHECK(doc["intervals"][0].contains("M"));
  CHECK(doc["po_count"] == 4);
}

TEST_CASE("statement and coefficient documents") {
  Json st = po_statement_json(PoStatement{1, 2, Subset::of({0})});
  CHECK(st["j"] == 2);
  CHECK(st["i"] == 3);
  CHECK(st["T"] == Json::array({1}));

  SemCoefficients c = sem_coefficients(gram_star(4), 1, Subset::of({0, 2}));
  Json doc = coefficients_json(c);
  CHECK(doc["node"] == 2);
  CHECK(doc["set"] == Json::array({1, 3}));
  CHECK(doc["support"] == Json::array({1}));
  CHECK(doc["values"]["1"].get<double>() == doctest::Approx(0.5));
  CHECK(doc["values"]["3"].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("graph documents") {
  Pcg p = pcg(gram_star(3));
  Json doc = pcg_json(p);
  CHECK(doc["d"] == 3);
  CHECK(doc["edges"] == Json::array({Json::array({1, 2}), Json::array({1, 3})}));

  std::string dot = pcg_dot(p);
  CHECK(dot.find("graph pcg {") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);
  CHECK(dot.find("1 -- 3;") != std::string::npos);
}

TEST_CASE("factorization document") {
  GramMatrix g = gram_star(3);
  std::vector<int> perm = {0, 1, 2};
  Json doc = factorization_json(recursive_projection(g, perm));
  CHECK(doc["perm"] == Json::array({1, 2, 3}));
  CHECK(doc["B"].size() == 3);
  CHECK(doc["D"].size() == 3);
  CHECK(doc["edges"] == Json::array({Json::array({1, 2}), Json::array({1, 3})}));
}

TEST_CASE("CSV round trip") {
  GramMatrix g = random_gram_dense(5, 123);
  std::string csv = write_csv(g.entries());
  Eigen::MatrixXd back = read_matrix(csv);
  CHECK((back - g.entries()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(write_csv(back) == csv);
}

TEST_CASE("JSON matrix input") {
  GramMatrix g = gram_star(4);
  Eigen::MatrixXd back = read_matrix(gram_json(g).dump());
  CHECK((back - g.entries()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("CSV parser handles spacing and rejects malformed input") {
  Eigen::MatrixXd m = read_matrix("1, 0\r\n0 ,\t1\n\n");
  CHECK(m.rows() == 2);
  CHECK(m(0, 0) == 1.0);
  CHECK(m(1, 0) == 0.0);

  CHECK_THROWS_AS(read_matrix(""), error);
  CHECK_THROWS_AS(read_matrix("1,two\n"), error);
  CHECK_THROWS_AS(read_matrix("1,2\n3\n"), error);
  CHECK_THROWS_AS(read_matrix("{\"d\": 2}"), error);
  CHECK_THROWS_AS(read_matrix("{\"d\": 2, \"sigma\": [[1,0]]}"), error);
  CHECK_THROWS_AS(read_matrix_file("/nonexistent/matrix.csv"), error);
}
