#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "spgen/completion.hpp"
#include "spgen/json_io.hpp"

using namespace spgen;
using nlohmann::json;

TEST_CASE("rational json round trip") {
  const json j = Rational(-3, 4);
  CHECK(j == json("-3/4"));
  CHECK(j.get<Rational>() == Rational(-3, 4));
  CHECK(json("7").get<Rational>() == Rational(7));
  CHECK_THROWS_AS(json("1/0").get<Rational>(), std::invalid_argument);
  CHECK_THROWS_AS(json(3.5).get<Rational>(), std::invalid_argument);
}

TEST_CASE("rational matrix json round trip") {
  Rng rng(61);
  const auto m = testing::random_matrix(rng, 3, 9);
  const json j = mat_to_json(m);
  CHECK(j.at("rows") == 3);
  CHECK(j.at("cols") == 3);
  CHECK(mat_from_json(j) == m);
}

TEST_CASE("matrix json validation") {
  CHECK_THROWS_AS(mat_from_json(json{{"rows", 2}, {"cols", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(
      mat_from_json(json{{"rows", 2}, {"cols", 2}, {"entries", json::array({json::array({"1", "0"})})}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      mat_from_json(json{{"rows", 1}, {"cols", 2}, {"entries", json::array({json::array({"1"})})}}),
      std::invalid_argument);
  CHECK_THROWS_AS(mat_from_json(json{{"rows", 0}, {"cols", 0}, {"entries", json::array()}}),
                  std::invalid_argument);
}

TEST_CASE("cyclotomic element and matrix json round trip") {
  const auto field = CycloField::of(6);
  const CycloElement a(field, Poly({Rational(1, 2), Rational(-3)}));
  const json j = cyclo_to_json(a);
  CHECK(j.at("m") == 6);
  CHECK(cyclo_from_json(j) == a);

  Mat<CycloElement> m(2, 2, CycloElement::zero(field));
  m.at(0, 1) = a;
  m.at(1, 0) = CycloElement::generator(field);
  CHECK(cyclo_mat_from_json(mat_to_json(m)) == m);

  CHECK_THROWS_AS(cyclo_from_json(json{{"m", 6}}), std::invalid_argument);
}

TEST_CASE("bracket word json round trip") {
  const auto w = BracketWord::bracket(
      BracketWord::leaf(0), BracketWord::bracket(BracketWord::leaf(0), BracketWord::leaf(1)));
  const json j = word_to_json(w);
  CHECK(j == json::parse("[0, [0, 1]]"));
  CHECK(word_from_json(j) == w);
  CHECK(word_from_json(json(3)).is_leaf());

  CHECK_THROWS_AS(word_from_json(json::parse("[0, 1, 2]")), std::invalid_argument);
  CHECK_THROWS_AS(word_from_json(json(-1)), std::invalid_argument);
  CHECK_THROWS_AS(word_from_json(json("x")), std::invalid_argument);
}

TEST_CASE("certificate json round trips through the verifier") {
  const SpContext ctx(2);
  const auto pair = example1_pair(2);
  const auto res = generates_sp(ctx, {pair.x, pair.y});
  REQUIRE(res.certificate.has_value());

  const json j = certificate_to_json(*res.certificate);
  const Certificate back = certificate_from_json(j);
  CHECK(back.n == 2);
  CHECK(back.dimension == 10);
  CHECK(back.words.size() == 10);
  CHECK(verify_certificate(back));

  // serialization is stable: a second round trip is bit-identical
  CHECK(certificate_to_json(back) == j);
}

TEST_CASE("generator pair json round trip") {
  const auto p = prop3_pair(2);
  const json j = pair_to_json(p);
  const GeneratorPair back = pair_from_json(j);
  CHECK(back.n == p.n);
  CHECK(back.tag == p.tag);
  CHECK(back.x == p.x);
  CHECK(back.y == p.y);
  REQUIRE(back.t.has_value());
  CHECK(*back.t == *p.t);

  json no_t = j;
  no_t["t"] = nullptr;
  CHECK_FALSE(pair_from_json(no_t).t.has_value());

  json bad_tag = j;
  bad_tag["tag"] = "example7";
  CHECK_THROWS_AS(pair_from_json(bad_tag), std::invalid_argument);
  CHECK_THROWS_AS(pair_from_json(json{{"n", 2}}), std::invalid_argument);
}

TEST_CASE("completion output serializes into verifiable artifacts") {
  const SpContext ctx(2);
  Rng source(71);
  const auto x = testing::random_nilpotent_member(ctx, source);
  Rng rng(8);
  const auto result = complete_nilpotent(ctx, x, rng, 100);
  REQUIRE(result.succeeded());

  const json jc = certificate_to_json(result.success->certificate);
  CHECK(verify_certificate(certificate_from_json(jc)));
}
