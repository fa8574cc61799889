#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewbi/skewring.hpp"

using namespace skewbi;

namespace {

RingElement gen(Gen g) { return RingElement::generator(g); }

RingElement mono(unsigned i, unsigned j, unsigned k, unsigned h,
                 Rational c = 1) {
  return RingElement::monomial({i, j, k, h}, c);
}

}  // namespace

TEST_CASE("rewriting to normal form") {
  // F E = E F - H
  CHECK(normal_form({Gen::F, Gen::E}) == mono(1, 1, 0, 0) - mono(0, 0, 1, 0));
  // rho E rho = F
  CHECK(normal_form({Gen::Rho, Gen::E, Gen::Rho}) == gen(Gen::F));
  // F E^2 = E^2 F - 2 E H - 2 E
  CHECK(normal_form({Gen::F, Gen::E, Gen::E}) ==
        mono(2, 1, 0, 0) - mono(1, 0, 1, 0, 2) - mono(1, 0, 0, 0, 2));
  // rho^2 = 1
  CHECK(normal_form({Gen::Rho, Gen::Rho}) == RingElement(Rational(1)));
  // H E = E H + 2 E
  CHECK(normal_form({Gen::H, Gen::E}) == mono(1, 0, 1, 0) + mono(1, 0, 0, 0, 2));
  // A PBW word is already normal.
  CHECK(normal_form({Gen::E, Gen::F, Gen::H, Gen::Rho}) == mono(1, 1, 1, 1));
}

TEST_CASE("multiplication is associative and respects the relations") {
  auto e = gen(Gen::E), f = gen(Gen::F), h = gen(Gen::H), rho = gen(Gen::Rho);
  CHECK(multiply(e, f) - multiply(f, e) == h);
  CHECK(multiply(h, e) - multiply(e, h) == e * Rational(2));
  CHECK(multiply(h, f) - multiply(f, h) == f * Rational(-2));
  CHECK(multiply(rho, h) + multiply(h, rho) == RingElement());
  CHECK(multiply(rho, e) == multiply(f, rho));
  CHECK(multiply(multiply(e, f), h) == multiply(e, multiply(f, h)));
  auto x = normal_form({Gen::F, Gen::E, Gen::Rho});
  auto y = normal_form({Gen::H, Gen::Rho, Gen::E});
  auto z = normal_form({Gen::Rho, Gen::F, Gen::H});
  CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
}

TEST_CASE("comultiplication") {
  auto h = gen(Gen::H), rho = gen(Gen::Rho);
  CHECK(comultiply(h) == TensorElement::tensor(h, RingElement(Rational(1))) +
                             TensorElement::tensor(RingElement(Rational(1)), h));
  CHECK(comultiply(RingElement(Rational(1))) == TensorElement(Rational(1)));
  // Delta(E rho) = E rho x rho + rho x E rho
  auto erho = mono(1, 0, 0, 1);
  auto rho_only = mono(0, 0, 0, 1);
  CHECK(comultiply(erho) == TensorElement::tensor(erho, rho_only) +
                                TensorElement::tensor(rho_only, erho));
  // Delta is multiplicative.
  auto x = normal_form({Gen::F, Gen::E, Gen::Rho});
  auto y = normal_form({Gen::H, Gen::E});
  CHECK(comultiply(multiply(x, y)) == comultiply(x) * comultiply(y));
}

TEST_CASE("counit") {
  CHECK(counit(gen(Gen::E)) == 0);
  CHECK(counit(gen(Gen::Rho)) == 1);
  // eps(3 + 2 H rho) = 3
  CHECK(counit(RingElement(Rational(3)) + mono(0, 0, 1, 1, 2)) == 3);
}

TEST_CASE("antipode") {
  CHECK(antipode(gen(Gen::E)) == -gen(Gen::E));
  CHECK(antipode(gen(Gen::Rho)) == gen(Gen::Rho));
  // S(E rho) = S(rho) S(E) = -rho E = -F rho
  CHECK(antipode(mono(1, 0, 0, 1)) == -mono(0, 1, 0, 1));
  // S is an anti-homomorphism.
  auto x = normal_form({Gen::E, Gen::H});
  auto y = normal_form({Gen::Rho, Gen::F});
  CHECK(antipode(multiply(x, y)) == multiply(antipode(y), antipode(x)));
  // S^2 = id here.
  CHECK(antipode(antipode(multiply(x, y))) == multiply(x, y));
}

TEST_CASE("casimir element") {
  // EF + FE + H^2/2 normalizes to 2EF + H^2/2 - H.
  auto lambda = casimir();
  CHECK(lambda == mono(1, 1, 0, 0, 2) + mono(0, 0, 2, 0, Rational(1, 2)) -
                      mono(0, 0, 1, 0));
  // Central: commutes with every generator, including rho.
  for (Gen g : {Gen::E, Gen::F, Gen::H, Gen::Rho})
    CHECK(multiply(lambda, gen(g)) == multiply(gen(g), lambda));
  CHECK(counit(lambda) == 0);
}

TEST_CASE("expression parser") {
  CHECK(parse_ring_element("E*F - F*E") == gen(Gen::H));
  CHECK(parse_ring_element("rho*E*rho") == gen(Gen::F));
  CHECK(parse_ring_element("2*E^2") == mono(2, 0, 0, 0, 2));
  CHECK(parse_ring_element("E*F + F*E + 1/2*H^2") == casimir());
  CHECK(parse_ring_element("(E + F)*rho") == parse_ring_element("rho*(F + E)"));
  CHECK(parse_ring_element("-3/2") == RingElement(Rational(-3, 2)));
  CHECK_THROWS_AS(parse_ring_element("E +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ring_element("Q"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ring_element("(E"), std::invalid_argument);
}
