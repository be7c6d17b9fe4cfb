#include "doctest.h"
#include "qf/combinatorics.hpp"
#include "qf/normal_form.hpp"
#include "qf/power.hpp"
#include "qf/random_forms.hpp"

using qf::Atom;
using qf::BigInt;
using qf::DiagonalForm;
using qf::FieldMode;
using qf::SquareClass;

namespace {

const SquareClass kA = SquareClass::single(Atom::named("a"));
const SquareClass kB = SquareClass::single(Atom::named("b"));

}  // namespace

TEST_CASE("fourth symmetric power of <1,a,b,ab>") {
    DiagonalForm f = DiagonalForm::of({SquareClass::identity(), kA, kB, kA.times(kB)});
    DiagonalForm s4 = qf::symmetric_power(f, 4);
    CHECK(s4.dim() == 35);
    CHECK(s4.multiplicity(SquareClass::identity()) == 11);
    CHECK(s4.multiplicity(kA) == 8);
    CHECK(s4.multiplicity(kB) == 8);
    CHECK(s4.multiplicity(kA.times(kB)) == 8);
    CHECK(qf::naive_symmetric_power(f, 4) == s4);
}

TEST_CASE("second exterior power of two hyperbolic planes") {
    DiagonalForm f = DiagonalForm::hyperbolic(2);
    DiagonalForm l2 = qf::exterior_power(f, 2);
    CHECK(l2.multiplicity(SquareClass::identity()) == 2);
    CHECK(l2.multiplicity(SquareClass::minus_one()) == 4);
    CHECK(l2.dim() == 6);
    CHECK(qf::naive_exterior_power(f, 2) == l2);
}

TEST_CASE("second symmetric power of <1,1> perp H") {
    DiagonalForm f = DiagonalForm::of({SquareClass::identity(), SquareClass::identity()})
                         .perp(DiagonalForm::hyperbolic(1));
    DiagonalForm s2 = qf::symmetric_power(f, 2);
    CHECK(s2.multiplicity(SquareClass::identity()) == 7);
    CHECK(s2.multiplicity(SquareClass::minus_one()) == 3);
    CHECK(s2.dim() == 10);
}

TEST_CASE("power edge cases") {
    DiagonalForm f = DiagonalForm::of({kA, kB});
    CHECK(qf::exterior_power(f, 0) == DiagonalForm::unit());
    CHECK(qf::symmetric_power(f, 0) == DiagonalForm::unit());
    CHECK(qf::exterior_power(f, -1) == DiagonalForm::zero());
    CHECK(qf::exterior_power(f, 3) == DiagonalForm::zero());
    CHECK(qf::symmetric_power(DiagonalForm::zero(), 0) == DiagonalForm::unit());
    CHECK(qf::symmetric_power(DiagonalForm::zero(), 3) == DiagonalForm::zero());
    CHECK_THROWS_WITH_AS(qf::symmetric_power(f, -1), "negative power", std::domain_error);
    CHECK_THROWS_AS(qf::naive_symmetric_power(f, -2), std::domain_error);
    CHECK(qf::exterior_power(f, 2) == DiagonalForm::single(kA.times(kB)));
}

TEST_CASE("all routes agree on seeded random forms") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        qf::RandomFormSpec spec;
        spec.max_dim = 9;
        DiagonalForm f = qf::random_form(seed, spec);
        for (long long k = 0; k <= 5; ++k) {
            DiagonalForm sym = qf::symmetric_power(f, k);
            DiagonalForm ext = qf::exterior_power(f, k);
            CHECK(sym == qf::symmetric_power_via_exterior(f, k));
            CHECK(sym == qf::naive_symmetric_power(f, k));
            CHECK(ext == qf::naive_exterior_power(f, k));
        }
    }
}

TEST_CASE("exterior monomials embed into the symmetric ones") {
    DiagonalForm f = qf::random_form(7);
    for (long long k = 0; k <= 4; ++k) {
        DiagonalForm ext = qf::exterior_power(f, k);
        DiagonalForm sym = qf::symmetric_power(f, k);
        for (const auto& [c, m] : ext.entries()) CHECK(sym.multiplicity(c) >= m);
    }
}

TEST_CASE("powers preserve isometry of <c,-c> and H") {
    DiagonalForm swapped = DiagonalForm::of({kA, kA.negated()});
    DiagonalForm hyp = DiagonalForm::hyperbolic(1);
    for (long long k = 0; k <= 6; ++k) {
        CHECK(qf::isometric(qf::symmetric_power(swapped, k), qf::symmetric_power(hyp, k),
                            FieldMode::Generic));
        CHECK(qf::isometric(qf::exterior_power(swapped, k), qf::exterior_power(hyp, k),
                            FieldMode::Generic));
    }
}

TEST_CASE("dimension formulas") {
    for (std::uint64_t seed = 20; seed < 28; ++seed) {
        DiagonalForm f = qf::random_form(seed);
        BigInt n = f.dim();
        for (long long k = 0; k <= 6; ++k) {
            CHECK(qf::exterior_power(f, k).dim() == qf::comb::binomial(n, k));
            CHECK(qf::symmetric_power(f, k).dim() == qf::comb::binomial(n + k - 1, k));
        }
    }
}

TEST_CASE("enumeration refuses oversized inputs") {
    DiagonalForm f = DiagonalForm::hyperbolic(20);
    CHECK_THROWS_WITH_AS(qf::naive_exterior_power(f, 10, 1000),
                         "enumeration too large; use convolution route", std::domain_error);
    CHECK_THROWS_AS(qf::naive_symmetric_power(f, 10, 1000), std::domain_error);
    CHECK_NOTHROW(qf::naive_exterior_power(f, 1, 1000));
}
