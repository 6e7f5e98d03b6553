#include <doctest.h>

#include <limits>

#include "gak/doc.hpp"
#include "gak/sampling.hpp"

using namespace gak;

TEST_CASE("documents parse in every form") {
  const MultivectorDoc a = parse_doc(R"({"algebra":"r301","coeffs":{"1":1,"e31":0.5}})");
  CHECK(a.algebra.name() == "r301");
  CHECK(a.value.scalar_part() == 1.0);
  CHECK(a.value[Blade{0b1010}] == -0.5);

  const MultivectorDoc b = parse_doc(R"({"e12":2})", "r4");
  CHECK(b.value[Blade{0b0011}] == 2.0);

  const MultivectorDoc c = parse_doc(R"({"algebra":"r4","coeffs":[1,0,0,0,0,0,0,3]})");
  CHECK(c.value[Blade{0b1111}] == 3.0);

  const MultivectorDoc d = parse_doc(R"([0,0,0,0,1,0])", "r301");
  CHECK(d.value[Blade{0b1010}] == -1.0);

  const MultivectorDoc e = parse_doc(R"([0,1,0,0,0,0,0,0])", "r3");
  CHECK(e.value[Blade{0b001}] == 1.0);

  CHECK(parse_doc(R"({"algebra":"custom:1,1,1","coeffs":{"e13":1}})").value[Blade{0b101}] == 1.0);
}

TEST_CASE("bad documents are refused") {
  CHECK_THROWS_AS(parse_doc(R"({"e12":1})"), Error);
  CHECK_THROWS_AS(parse_doc(R"({"algebra":"r4","coeffs":{"e15":1}})"), Error);
  CHECK_THROWS_AS(parse_doc(R"({"algebra":"r4","coeffs":[1,2,3]})"), Error);
  CHECK_THROWS_AS(parse_doc(R"({"algebra":"r4","coeffs":{"e12":"x"}})"), Error);
  CHECK_THROWS_AS(parse_doc(R"({"algebra":"r4","coeffs":{}, "extra":1})"), Error);
  CHECK_THROWS_AS(parse_doc(R"({"algebra":"r4","coeffs":{}})", "r31"), Error);
  CHECK_THROWS_AS(parse_doc("{"), Error);
  CHECK_THROWS_AS(parse_doc(R"({"algebra":"q7","coeffs":{}})"), Error);
}

TEST_CASE("emit then parse is lossless") {
  Sampler smp(41);
  for (const char* tag : {"r3", "r4", "r31", "r301", "r41"}) {
    const Algebra alg = algebra_from_tag(tag);
    for (int i = 0; i < 50; ++i) {
      Multivector x = smp.even(alg.signature()) + smp.vector(alg.signature()) * 1e-7;
      x = x * 1e5 + Multivector::scalar(alg.signature(), 1.0 / 3.0);
      const std::string text = to_json({alg, x}).dump();
      const MultivectorDoc back = parse_doc(text);
      CHECK(max_abs_diff(back.value, x) == 0.0);
    }
  }
  const Algebra& r4 = algebra_r4();
  const Multivector tiny = Multivector::scalar(r4.signature(), std::numeric_limits<double>::denorm_min());
  CHECK(parse_doc(to_json({r4, tiny}).dump()).value.scalar_part() == tiny.scalar_part());
}

TEST_CASE("emit uses preferred labels and chops on request") {
  const MultivectorDoc a = parse_doc(R"({"algebra":"r301","coeffs":{"e13":2,"e0":1e-12}})");
  const auto j = to_json(a);
  CHECK(j["coeffs"]["e31"] == -2.0);
  CHECK(j["coeffs"].contains("e0"));
  CHECK_FALSE(to_json(a, 1e-9)["coeffs"].contains("e0"));
  const auto err = error_json(ErrorKind::singular, "boom");
  CHECK(err["error"]["kind"] == "singular");
}
