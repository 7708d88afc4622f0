#include "doctest.h"

#include "linrel/io.hpp"
#include "linrel/suites.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <string>

using namespace linrel;

namespace {

Vector vec(std::initializer_list<Complex> entries) {
  Vector v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (const Complex& z : entries) v(i++) = z;
  return v;
}

LinearRelation sample_relation() {
  return LinearRelation::make(
      {{vec({1, 0}), vec({0, Complex(0, 1)})}, {vec({0, 0}), vec({1, 0})}}, 2,
      2, Field::complex);
}

}  // namespace

TEST_CASE("relation JSON round trip") {
  const LinearRelation t = sample_relation();
  const std::string text = relation_to_json(t);
  const LinearRelation back = relation_from_json(text);
  CHECK(back.n() == t.n());
  CHECK(back.m() == t.m());
  CHECK(back.field() == t.field());
  CHECK(relation_equal(back, t));

  const LinearRelation real_t =
      LinearRelation::from_operator(Matrix::Identity(2, 2), Field::real);
  const LinearRelation real_back = relation_from_json(relation_to_json(real_t));
  CHECK(real_back.field() == Field::real);
  CHECK(relation_equal(real_back, real_t));
}

TEST_CASE("relation JSON accepts plain numbers and pairs") {
  const std::string text = R"({
    "field": "complex", "n": 1, "m": 1,
    "generators": [{"x": [1], "y": [[0, 2]]}]
  })";
  const LinearRelation t = relation_from_json(text);
  const auto [y, mul] = image_of(t, vec({1}));
  CHECK((y - vec({Complex(0, 2)})).norm() < 1e-14);
}

TEST_CASE("malformed relation JSON is rejected") {
  CHECK_THROWS_AS(relation_from_json("not json"), DimensionError);
  CHECK_THROWS_AS(relation_from_json("{}"), DimensionError);
  CHECK_THROWS_AS(relation_from_json(
                      R"({"field": "complex", "n": 0, "m": 1, "generators": []})"),
                  DimensionError);
  CHECK_THROWS_AS(relation_from_json(
                      R"({"field": "quaternion", "n": 1, "m": 1, "generators": []})"),
                  DimensionError);
  CHECK_THROWS_AS(
      relation_from_json(
          R"({"field": "complex", "n": 2, "m": 1, "generators": [{"x": [1], "y": [1]}]})"),
      DimensionError);
  // Real mode must reject imaginary entries.
  CHECK_THROWS_AS(
      relation_from_json(
          R"({"field": "real", "n": 1, "m": 1, "generators": [{"x": [[0, 1]], "y": [1]}]})"),
      DimensionError);
}

TEST_CASE("vector JSON round trip") {
  const Vector v = vec({1.5, Complex(0, -2), Complex(3, 4)});
  const Vector back = vector_from_json(vector_to_json(v));
  CHECK((back - v).norm() == 0.0);
  CHECK_THROWS_AS(vector_from_json("{}"), DimensionError);
}

TEST_CASE("relation file round trip") {
  const auto path = std::filesystem::temp_directory_path() / "linrel_io_test.json";
  const LinearRelation t = sample_relation();
  write_relation_file(path.string(), t);
  const LinearRelation back = read_relation_file(path.string());
  CHECK(relation_equal(back, t));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_relation_file((path / "missing").string()),
                  DimensionError);
}

TEST_CASE("verification reports serialize deterministically") {
  TrialConfig config;
  config.trials = 3;
  config.dims = {{3, 3}};
  config.suites = {"arens", "thm2.3"};

  const std::string a = verify_to_json(config);
  const std::string b = verify_to_json(config);
  auto ja = nlohmann::ordered_json::parse(a);
  auto jb = nlohmann::ordered_json::parse(b);
  CHECK(ja["schema_version"] == 1);
  CHECK(ja["suites"].size() == 2);
  CHECK(ja["suites"][0]["suite"] == "arens");
  CHECK(ja["suites"][0]["failures"] == 0);
  ja.erase("timing");
  jb.erase("timing");
  CHECK(ja.dump() == jb.dump());
}

TEST_CASE("format helpers") {
  CHECK(format_sig(1.0) == "1");
  CHECK(format_sig(0.5) == "0.5");
  CHECK(format_sig(1.0 / 3.0) == "0.333333333333");

  CHECK(field_from_string("real") == Field::real);
  CHECK(field_from_string("complex") == Field::complex);
  CHECK_THROWS_AS(field_from_string("rational"), DimensionError);

  const auto dims = parse_dims("2x2,4x4,6x3");
  REQUIRE(dims.size() == 3);
  CHECK(dims[0] == std::make_pair(2, 2));
  CHECK(dims[2] == std::make_pair(6, 3));
  CHECK_THROWS_AS(parse_dims("2x"), DimensionError);
  CHECK_THROWS_AS(parse_dims("axb"), DimensionError);
  CHECK_THROWS_AS(parse_dims(""), DimensionError);
}
