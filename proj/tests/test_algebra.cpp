#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace treealg;
using namespace treealg::test;

TEST_CASE("rational parsing and canonical form") {
    CHECK(rat_from_string("3/6") == RatScalar(1, 2));
    CHECK(rat_to_string(rat_from_string("-4/2")) == "-2");
    CHECK(rat_from_string("7") == 7);
    CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
}

TEST_CASE("element arithmetic") {
    Element x = lin({{"1", "*[*]"}, {"2", "* *"}});
    CHECK((x + Element::zero()) == x);
    CHECK(scale(0, x).is_zero());
    CHECK((lin({{"1", "*[*]"}}) + lin({{"-1", "*[*]"}})).is_zero());
    CHECK(x.coeff(F("* *")) == 2);
    CHECK(x.coeff(F("*")) == 0);

    CHECK((Element::monomial(F("*")) * Element::monomial(F("*[*]"))) ==
          Element::monomial(F("* *[*]")));
    CHECK((Element::monomial(F("*[*]")) * Element::monomial(F("*"))) ==
          Element::monomial(F("*[*] *")));
    CHECK_FALSE(Element::monomial(F("* *[*]")) == Element::monomial(F("*[*] *")));
    CHECK((Element::one() * x) == x);

    CHECK(counit(Element::one()) == 1);
    CHECK(counit(Element::monomial(F("*[*]"))) == 0);
    CHECK(counit(scale(3, Element::one()) + lin({{"2", "* *"}})) == 3);

    Element mixed = Element::one() + lin({{"1", "*"}, {"1", "* *"}});
    CHECK(homogeneous_part(mixed, 1) == lin({{"1", "*"}}));
    CHECK(homogeneous_part(mixed, 0) + homogeneous_part(mixed, 1) + homogeneous_part(mixed, 2) ==
          mixed);
    CHECK(homogeneous_part(lin({{"1", "*[*]"}}), 3).is_zero());
}

TEST_CASE("weight additivity on the monomial basis") {
    for (int a = 0; a <= 3; ++a)
        for (const Forest& f : enumerate_forests(a, plain()))
            for (int b = 0; b <= 3 - a; ++b)
                for (const Forest& g : enumerate_forests(b, plain()))
                    CHECK(f.concat(g).weight() == f.weight() + g.weight());
}

TEST_CASE("tensors") {
    TensorK xy = tensor_mul(ten2({{"1", {"*", "1"}}}), ten2({{"1", {"1", "*[*]"}}}));
    CHECK(xy == ten2({{"1", {"*", "*[*]"}}}));
    CHECK(tensor_mul(ten2({{"1", {"1", "1"}}}), xy) == xy);
    CHECK(tensor_mul(ten2({{"1", {"*", "*"}}}), ten2({{"1", {"*", "1"}}})) ==
          ten2({{"1", {"* *", "*"}}}));
    CHECK_THROWS_AS(tensor_mul(TensorK(2), TensorK(3)), std::invalid_argument);

    // componentwise linearity with coefficients
    TensorK a = ten2({{"2", {"*", "*"}}, {"1", {"1", "* *"}}});
    TensorK b = a + scale(-1, a);
    CHECK(b.is_zero());

    CHECK(contract_counit(ten2({{"5", {"1", "* *"}}, {"3", {"*", "*"}}}), 0) ==
          TensorK::pure({F("* *")}, 5));
    Element prod = factor_product(ten2({{"2", {"*", "*[*]"}}}));
    CHECK(prod == lin({{"2", "* *[*]"}}));
}
