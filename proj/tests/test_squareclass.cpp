#include <vector>

#include "doctest.h"
#include "qf/square_class.hpp"

using qf::Atom;
using qf::FieldMode;
using qf::SquareClass;

namespace {

std::vector<SquareClass> sample_classes() {
    SquareClass a = SquareClass::single(Atom::named("a"));
    SquareClass b = SquareClass::single(Atom::named("b"));
    SquareClass c = SquareClass::single(Atom::named("c"));
    return {SquareClass::identity(), SquareClass::minus_one(), a,
            b,                       a.times(b),               a.times(b).times(c).negated()};
}

}  // namespace

TEST_CASE("square classes form an elementary abelian 2-group") {
    auto classes = sample_classes();
    for (const SquareClass& x : classes) {
        CHECK(x.times(x) == SquareClass::identity());
        CHECK(x.times(SquareClass::identity()) == x);
        for (const SquareClass& y : classes) {
            CHECK(x.times(y) == y.times(x));
            for (const SquareClass& z : classes)
                CHECK(x.times(y).times(z) == x.times(y.times(z)));
        }
    }
}

TEST_CASE("negation is multiplication by -1 and is an involution") {
    for (const SquareClass& x : sample_classes()) {
        CHECK(x.negated() == x.times(SquareClass::minus_one()));
        CHECK(x.negated().negated() == x);
        CHECK(x.negated() != x);
    }
}

TEST_CASE("power folds the exponent mod 2") {
    SquareClass ab = SquareClass::of({Atom::named("a"), Atom::named("b")});
    CHECK(ab.power(0) == SquareClass::identity());
    CHECK(ab.power(1) == ab);
    CHECK(ab.power(2) == SquareClass::identity());
    CHECK(ab.power(qf::BigInt("123456789012345678901")) == ab);
}

TEST_CASE("canonical strips -1 only when it is a square") {
    SquareClass minus_a = SquareClass::single(Atom::named("a")).negated();
    for (const SquareClass& x : sample_classes()) {
        CHECK(x.canonical(FieldMode::Generic) == x);
        CHECK(x.canonical(FieldMode::MinusOneSquare).canonical(FieldMode::MinusOneSquare) ==
              x.canonical(FieldMode::MinusOneSquare));
    }
    CHECK(SquareClass::minus_one().canonical(FieldMode::MinusOneSquare) ==
          SquareClass::identity());
    CHECK(minus_a.canonical(FieldMode::MinusOneSquare) == SquareClass::single(Atom::named("a")));
}

TEST_CASE("the distinguished atom orders first") {
    SquareClass a = SquareClass::single(Atom::named("a"));
    CHECK(SquareClass::identity() < SquareClass::minus_one());
    CHECK(SquareClass::minus_one() < a);
    CHECK(a.negated() < a);  // {-1, a} before {a}
    CHECK(a < SquareClass::single(Atom::named("b")));
}

TEST_CASE("atom names are validated") {
    CHECK_NOTHROW(Atom::named("a"));
    CHECK_NOTHROW(Atom::named("x_1"));
    CHECK_NOTHROW(Atom::named("2"));
    CHECK_THROWS_AS(Atom::named(""), std::invalid_argument);
    CHECK_THROWS_AS(Atom::named("-1"), std::invalid_argument);
    CHECK_THROWS_AS(Atom::named("a b"), std::invalid_argument);
    CHECK_THROWS_AS(Atom::named("a*b"), std::invalid_argument);
}

TEST_CASE("integers reduce to their square-free class") {
    CHECK(SquareClass::of_integer(1) == SquareClass::identity());
    CHECK(SquareClass::of_integer(4) == SquareClass::identity());
    CHECK(SquareClass::of_integer(2) == SquareClass::single(Atom::named("2")));
    CHECK(SquareClass::of_integer(18) == SquareClass::single(Atom::named("2")));
    CHECK(SquareClass::of_integer(12) == SquareClass::single(Atom::named("3")));
    CHECK(SquareClass::of_integer(-8) == SquareClass::single(Atom::named("2")).negated());
    CHECK(SquareClass::of_integer(-1) == SquareClass::minus_one());
    CHECK(SquareClass::of_integer(999999937) ==
          SquareClass::single(Atom::named("999999937")));
    CHECK_THROWS_AS(SquareClass::of_integer(0), std::invalid_argument);
    CHECK_THROWS_WITH_AS(SquareClass::of_integer(1'000'000'001),
                         "integer entry too large to factor", std::invalid_argument);
}

TEST_CASE("rendering") {
    CHECK(SquareClass::identity().str() == "1");
    CHECK(SquareClass::minus_one().str() == "-1");
    CHECK(SquareClass::of({Atom::named("a"), Atom::named("b")}).str() == "a*b");
    CHECK(SquareClass::of_integer(-2).str() == "-2");
    CHECK(SquareClass::single(Atom::named("a")).negated().str() == "-a");
}

TEST_CASE("mode names round-trip and accept the short spellings") {
    CHECK(qf::mode_name(FieldMode::Generic) == "generic");
    CHECK(qf::mode_name(FieldMode::MinusOneSquare) == "minus_one_square");
    CHECK(qf::mode_from_name("generic") == FieldMode::Generic);
    CHECK(qf::mode_from_name("r") == FieldMode::Generic);
    CHECK(qf::mode_from_name("minus_one_square") == FieldMode::MinusOneSquare);
    CHECK(qf::mode_from_name("c") == FieldMode::MinusOneSquare);
    CHECK_THROWS_AS(qf::mode_from_name("real"), std::invalid_argument);
}
