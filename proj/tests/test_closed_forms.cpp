#include "doctest.h"
#include "qf/closed_forms.hpp"
#include "qf/power.hpp"

using qf::Atom;
using qf::BigInt;
using qf::DiagonalForm;
using qf::FieldMode;
using qf::OddDegreeSign;
using qf::SquareClass;
using qf::TraceParams;

namespace {

DiagonalForm residue_plus_hyp(const DiagonalForm& residue, const BigInt& hyp) {
    return residue.perp(DiagonalForm::hyperbolic(hyp));
}

}  // namespace

TEST_CASE("hyperbolic power closed forms match the engine") {
    for (long long h = 1; h <= 6; ++h) {
        DiagonalForm base = DiagonalForm::hyperbolic(h);
        for (long long k = 0; k <= 8; ++k) {
            CAPTURE(h);
            CAPTURE(k);
            CHECK(qf::ext_power_hyperbolic_closed(h, k) == qf::exterior_power(base, k));
            CHECK(qf::sym_power_hyperbolic_closed(h, k) == qf::symmetric_power(base, k));
        }
        CHECK(qf::ext_power_hyperbolic_closed(h, 2 * h + 1) == DiagonalForm::zero());
    }
}

TEST_CASE("hyperbolic power closed forms, frozen samples") {
    DiagonalForm ext22 = qf::ext_power_hyperbolic_closed(2, 2);
    CHECK(ext22.dim() == 6);
    CHECK(ext22.multiplicity(SquareClass::identity()) == 2);
    CHECK(ext22.multiplicity(SquareClass::minus_one()) == 4);

    DiagonalForm sym22 = qf::sym_power_hyperbolic_closed(2, 2);
    CHECK(sym22.dim() == 10);
    CHECK(sym22.multiplicity(SquareClass::identity()) == 6);
    CHECK(sym22.multiplicity(SquareClass::minus_one()) == 4);

    CHECK_THROWS_WITH_AS(qf::ext_power_hyperbolic_closed(0, 2),
                         "hyperbolic closed forms need h >= 1", std::domain_error);
    CHECK_THROWS_WITH_AS(qf::sym_power_hyperbolic_closed(0, 2),
                         "hyperbolic closed forms need h >= 1", std::domain_error);
    CHECK_THROWS_WITH_AS(qf::sym_power_hyperbolic_closed(3, -1), "negative power",
                         std::domain_error);
    CHECK(qf::ext_power_hyperbolic_closed(3, -1) == DiagonalForm::zero());
}

TEST_CASE("trace parameters") {
    CHECK(TraceParams::make(3).degree_class.str() == "3");
    CHECK(TraceParams::make(1).degree_class == SquareClass::identity());
    CHECK(TraceParams::make(4).degree_class == SquareClass::identity());
    CHECK(TraceParams::make(6).degree_class.str() == "2*3");
    CHECK(TraceParams::with_opaque_degree(6).degree_class ==
          SquareClass::single(Atom::named("n")));

    CHECK(TraceParams::make(2).epsilon() == -1);
    CHECK(TraceParams::make(4).epsilon() == 1);
    CHECK(TraceParams::make(6).epsilon() == -1);
    CHECK(TraceParams::make(8).epsilon() == 1);

    CHECK(TraceParams::make(2).m() == 0);
    CHECK(TraceParams::make(4).m() == 6);
    CHECK(TraceParams::make(6).m() == 16);

    TraceParams p2 = TraceParams::make(2);
    DiagonalForm qs = p2.qs();
    SquareClass two = SquareClass::of_integer(2);
    SquareClass a = SquareClass::single(Atom::named("a"));
    SquareClass b = SquareClass::single(Atom::named("b"));
    CHECK(qs.dim() == 4);
    CHECK(qs.multiplicity(two) == 1);
    CHECK(qs.multiplicity(two.times(a)) == 1);
    CHECK(qs.multiplicity(two.times(b)) == 1);
    CHECK(qs.multiplicity(two.times(a).times(b).negated()) == 1);

    TraceParams named = TraceParams::make(2, "u", "v");
    CHECK(named.qs().multiplicity(two.times(SquareClass::single(Atom::named("u")))) == 1);

    CHECK_THROWS_WITH_AS(TraceParams::make(3).qs(), "q_S exists for even degree only",
                         std::domain_error);
    CHECK_THROWS_WITH_AS(TraceParams::make(0), "trace form degree must be >= 1",
                         std::domain_error);
    CHECK_THROWS_WITH_AS(TraceParams::make(-2), "trace form degree must be >= 1",
                         std::domain_error);
}

TEST_CASE("trace form, frozen samples") {
    CHECK(qf::trace_form(TraceParams::make(1)).str() == "<1>");
    CHECK(qf::trace_form(TraceParams::make(3)).str() == "4 x <1> + 5 x <-1>");
    CHECK(qf::trace_form(TraceParams::make(3), OddDegreeSign::HalfCeil).str() ==
          "5 x <1> + 4 x <-1>");
    CHECK(qf::trace_form(TraceParams::make(5)) ==
          residue_plus_hyp(DiagonalForm::unit(), 12));

    DiagonalForm t4 = qf::trace_form(TraceParams::make(4));
    CHECK(t4.dim() == 16);
    CHECK(t4.multiplicity(SquareClass::identity()) == 7);
    CHECK(t4.multiplicity(SquareClass::minus_one()) == 6);
    CHECK(t4.multiplicity(SquareClass::single(Atom::named("a"))) == 1);

    CHECK(qf::trace_form(TraceParams::make(2)) == TraceParams::make(2).qs());
    for (long long n = 1; n <= 9; ++n)
        CHECK(qf::trace_form(TraceParams::make(n)).dim() == BigInt(n) * n);
}

TEST_CASE("required field mode per degree") {
    using qf::trace_required_mode;
    CHECK(trace_required_mode(TraceParams::make(4)) == FieldMode::MinusOneSquare);
    CHECK(trace_required_mode(TraceParams::make(8)) == FieldMode::MinusOneSquare);
    for (long long n : {1, 2, 3, 5, 6, 7, 9, 10})
        CHECK(trace_required_mode(TraceParams::make(n)) == FieldMode::Generic);
}

TEST_CASE("first powers of the trace form reproduce it") {
    for (long long n = 1; n <= 6; ++n) {
        TraceParams p = TraceParams::make(n);
        CHECK(qf::sym_power_trace_closed(p, 1).form == qf::trace_form(p));
        CHECK(qf::ext_power_trace_closed(p, 1).form == qf::trace_form(p));
        CHECK(qf::sym_power_trace_closed(p, 0).form == DiagonalForm::unit());
        CHECK(qf::ext_power_trace_closed(p, 0).form == DiagonalForm::unit());
    }
}

TEST_CASE("symmetric trace powers match the engine in the required mode") {
    for (long long n = 1; n <= 5; ++n) {
        TraceParams p = TraceParams::make(n);
        DiagonalForm ts = qf::trace_form(p);
        for (long long k = 0; k <= 6; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            qf::ModedForm closed = qf::sym_power_trace_closed(p, k);
            CHECK(qf::isometric(qf::symmetric_power(ts, k), closed.form,
                                closed.required_mode));
        }
    }
}

TEST_CASE("symmetric trace power, frozen degree-4 sample") {
    qf::ModedForm closed = qf::sym_power_trace_closed(TraceParams::make(4), 4);
    CHECK(closed.required_mode == FieldMode::MinusOneSquare);
    CHECK(closed.form ==
          residue_plus_hyp(DiagonalForm::single(SquareClass::identity(), 56), 1910));
    CHECK(closed.form.dim() == 3876);
}

TEST_CASE("presimplified symmetric trace powers") {
    CHECK_THROWS_WITH_AS(qf::sym_power_trace_presimplified(TraceParams::make(3), 2),
                         "even degree required", std::domain_error);

    for (long long n : {2, 4, 6, 8}) {
        TraceParams p = TraceParams::make(n);
        for (long long k = 0; k <= 8; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            qf::ModedForm raw = qf::sym_power_trace_presimplified(p, k);
            qf::ModedForm closed = qf::sym_power_trace_closed(p, k);
            CHECK(raw.required_mode == closed.required_mode);
            CHECK(qf::isometric(raw.form, closed.form, closed.required_mode));
        }
    }

    // When 4 | n the two odd-power terms carry the same square class, so the
    // un-absorbed construction collapses to the closed one entry for entry.
    for (long long k : {1, 3, 5, 7}) {
        CHECK(qf::sym_power_trace_presimplified(TraceParams::make(4), k).form ==
              qf::sym_power_trace_closed(TraceParams::make(4), k).form);
        CHECK(qf::sym_power_trace_presimplified(TraceParams::make(8), k).form ==
              qf::sym_power_trace_closed(TraceParams::make(8), k).form);
    }

    TraceParams p2 = TraceParams::make(2);
    qf::ModedForm pre = qf::sym_power_trace_presimplified(p2, 4);
    CHECK(qf::isometric(qf::symmetric_power(qf::trace_form(p2), 4), pre.form,
                        pre.required_mode));
}

TEST_CASE("fraction display agrees with the closed coefficients exactly") {
    CHECK_THROWS_WITH_AS(qf::sym_power_trace_fraction(TraceParams::make(5), 4),
                         "even degree required", std::domain_error);
    CHECK_THROWS_WITH_AS(qf::sym_power_trace_fraction(TraceParams::make(4), 1),
                         "fraction display undefined for k < 3", std::domain_error);
    CHECK_THROWS_WITH_AS(qf::sym_power_trace_fraction(TraceParams::make(4), 0),
                         "fraction display undefined for even k < 4", std::domain_error);
    CHECK_THROWS_WITH_AS(qf::sym_power_trace_fraction(TraceParams::make(4), 2),
                         "fraction display undefined for even k < 4", std::domain_error);

    for (long long n : {2, 4, 6, 8}) {
        TraceParams p = TraceParams::make(n);
        for (long long k = 3; k <= 10; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            qf::ModedForm fraction = qf::sym_power_trace_fraction(p, k);
            qf::ModedForm closed = qf::sym_power_trace_closed(p, k);
            CHECK(fraction.form == closed.form);
            CHECK(fraction.required_mode == closed.required_mode);
        }
    }
}

TEST_CASE("exterior trace powers match the engine in the required mode") {
    for (long long n = 1; n <= 5; ++n) {
        TraceParams p = TraceParams::make(n);
        DiagonalForm ts = qf::trace_form(p);
        for (long long k = 0; k <= 6; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            qf::ModedForm closed = qf::ext_power_trace_closed(p, k);
            CHECK(qf::isometric(qf::exterior_power(ts, k), closed.form,
                                closed.required_mode));
        }
    }
    // Top and beyond-top powers of the degree-2 form.
    TraceParams p2 = TraceParams::make(2);
    for (long long k = 0; k <= 6; ++k) {
        qf::ModedForm closed = qf::ext_power_trace_closed(p2, k);
        CHECK(qf::isometric(qf::exterior_power(qf::trace_form(p2), k), closed.form,
                            closed.required_mode));
    }
}

TEST_CASE("exterior trace power, frozen samples") {
    qf::ModedForm e33 = qf::ext_power_trace_closed(TraceParams::make(3), 3);
    CHECK(e33.form ==
          residue_plus_hyp(DiagonalForm::single(SquareClass::identity(), 4), 40));

    qf::ModedForm e22 = qf::ext_power_trace_closed(TraceParams::make(2), 2);
    CHECK(e22.form == DiagonalForm::hyperbolic(3));

    CHECK(qf::ext_power_trace_closed(TraceParams::make(2), 4).form ==
          DiagonalForm::single(SquareClass::minus_one()));
    CHECK(qf::ext_power_trace_closed(TraceParams::make(2), 5).form == DiagonalForm::zero());
    CHECK(qf::ext_power_trace_closed(TraceParams::make(3), 10).form == DiagonalForm::zero());
}

TEST_CASE("opaque degree class stays symbolic through the closed forms") {
    TraceParams p = TraceParams::with_opaque_degree(2);
    DiagonalForm ts = qf::trace_form(p);
    CHECK(ts.multiplicity(SquareClass::single(Atom::named("n"))) == 1);
    for (long long k = 0; k <= 4; ++k) {
        qf::ModedForm closed = qf::ext_power_trace_closed(p, k);
        CHECK(qf::isometric(qf::exterior_power(ts, k), closed.form, closed.required_mode));
        qf::ModedForm sym = qf::sym_power_trace_closed(p, k);
        CHECK(qf::isometric(qf::symmetric_power(ts, k), sym.form, sym.required_mode));
    }
}
