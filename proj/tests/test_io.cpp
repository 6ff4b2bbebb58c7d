#include "ordmean/errors.hpp"
#include "ordmean/io.hpp"
#include "test_support.hpp"

#include <cmath>
#include <filesystem>

using namespace ordmean;

TEST_CASE("format_double round-trips bit-exactly") {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.normal() * std::pow(10.0, rng.uniform(-20.0, 20.0));
    CHECK(std::stod(format_double(x)) == x);
  }
  CHECK(format_double(2.5) == "2.5");
  CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("matrix JSON round-trips bit-exactly") {
  Rng rng(2);
  for (int dim : {1, 2, 5}) {
    const SymMatrix a = random_symmetric(dim, rng);
    const SymMatrix b = parse_matrix(matrix_to_json(a));
    CHECK((a.matrix().array() == b.matrix().array()).all());
  }
  CHECK(matrix_to_json(SymMatrix::identity(1)) == "{\"dim\": 1, \"rows\": [[1]]}\n");
}

TEST_CASE("matrix parser rejects malformed input") {
  CHECK_THROWS_AS(parse_matrix("not json"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"dim": 2, "rows": [[1, 0], [0]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"dim": 3, "rows": [[1, 0], [0, 1]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"dim": 2, "rows": [[1, 0.5], [0, 1]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"dim": 1, "rows": [["x"]]})"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"rows": [[1]]})"), ParseError);
}

TEST_CASE("weights parser") {
  const WeightVector w = parse_weights("[1, 3]");
  CHECK(w[0] == 0.25);
  CHECK_THROWS_AS(parse_weights("[1, -1]"), Error);
  CHECK_THROWS_AS(parse_weights("[]"), Error);
  CHECK_THROWS_AS(parse_weights("{\"a\": 1}"), ParseError);
}

TEST_CASE("file helpers") {
  const auto dir = std::filesystem::temp_directory_path() / "ordmean_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "m.json").string();
  Rng rng(3);
  const SymMatrix a = random_symmetric(3, rng);
  write_text_file(path, matrix_to_json(a));
  CHECK((read_matrix_file(path).matrix().array() == a.matrix().array()).all());
  CHECK_THROWS_AS(read_text_file((dir / "missing.json").string()), Error);
  std::filesystem::remove_all(dir);
}
