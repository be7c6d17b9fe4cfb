#include "qf/closed_forms.hpp"

#include <stdexcept>

#include "qf/combinatorics.hpp"

namespace qf {

namespace {

using comb::binomial;

BigInt half_exact(const BigInt& v) {
    if (v % 2 != 0) throw std::logic_error("table coefficient not integral");
    return v / 2;
}

BigInt exact_quotient(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0 || numerator % denominator != 0)
        throw std::logic_error("table coefficient not integral");
    return numerator / denominator;
}

SquareClass sign_class(const BigInt& exponent) {
    return exponent % 2 != 0 ? SquareClass::minus_one() : SquareClass::identity();
}

// C(n, k) with the C(anything, 0) = 1 extension; k < 0 yields 0 before n is examined.
BigInt binom(long long n, long long k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    return binomial(BigInt(n), BigInt(k));
}

void check_degree(const TraceParams& p) {
    if (p.degree < 1) throw std::domain_error("trace form degree must be >= 1");
}

void check_even_degree(const TraceParams& p) {
    check_degree(p);
    if (!p.even()) throw std::domain_error("even degree required");
}

}  // namespace

DiagonalForm ext_power_hyperbolic_closed(long long h, long long k) {
    if (h < 1) throw std::domain_error("hyperbolic closed forms need h >= 1");
    if (k < 0 || k > 2 * h) return DiagonalForm::zero();
    BigInt total = binomial(BigInt(2 * h), BigInt(k));
    if (k % 2 != 0) return DiagonalForm::hyperbolic(half_exact(total));
    long long l = k / 2;
    BigInt head = binomial(BigInt(h), BigInt(l));
    return DiagonalForm::single(sign_class(l), head)
        .perp(DiagonalForm::hyperbolic(half_exact(total - head)));
}

DiagonalForm sym_power_hyperbolic_closed(long long h, long long k) {
    if (h < 1) throw std::domain_error("hyperbolic closed forms need h >= 1");
    if (k < 0) throw std::domain_error("negative power");
    BigInt total = binomial(BigInt(2 * h + k - 1), BigInt(k));
    if (k % 2 != 0) return DiagonalForm::hyperbolic(half_exact(total));
    long long l = k / 2;
    BigInt head = binomial(BigInt(h + l - 1), BigInt(l));
    return DiagonalForm::single(SquareClass::identity(), head)
        .perp(DiagonalForm::hyperbolic(half_exact(total - head)));
}

TraceParams TraceParams::make(long long n, std::string_view a_name, std::string_view b_name) {
    TraceParams p;
    p.degree = n;
    p.a = Atom::named(a_name);
    p.b = Atom::named(b_name);
    if (n >= 1) p.degree_class = SquareClass::of_integer(n);
    check_degree(p);
    return p;
}

TraceParams TraceParams::with_opaque_degree(long long n, std::string_view a_name,
                                            std::string_view b_name) {
    TraceParams p = make(n, a_name, b_name);
    p.degree_class = SquareClass::single(Atom::named("n"));
    return p;
}

long long TraceParams::m() const { return (degree * degree - 4) / 2; }

int TraceParams::epsilon() const { return degree / 2 % 2 == 0 ? 1 : -1; }

DiagonalForm TraceParams::qs() const {
    if (!even()) throw std::domain_error("q_S exists for even degree only");
    SquareClass ca = SquareClass::single(a);
    SquareClass cb = SquareClass::single(b);
    SquareClass cab = ca.times(cb);
    if (epsilon() < 0) cab = cab.negated();
    return DiagonalForm::of({SquareClass::identity(), ca, cb, cab}).scaled(degree_class);
}

DiagonalForm trace_form(const TraceParams& p, OddDegreeSign sign) {
    check_degree(p);
    long long n = p.degree;
    if (p.even()) return p.qs().perp(DiagonalForm::hyperbolic(BigInt(p.m())));
    long long exponent = sign == OddDegreeSign::HalfFloor ? (n - 1) / 2 : (n + 1) / 2;
    return DiagonalForm::single(sign_class(exponent))
        .perp(DiagonalForm::hyperbolic((BigInt(n) * n - 1) / 2));
}

FieldMode trace_required_mode(const TraceParams& p) {
    return p.degree % 4 == 0 ? FieldMode::MinusOneSquare : FieldMode::Generic;
}

ModedForm sym_power_trace_closed(const TraceParams& p, long long k) {
    check_degree(p);
    if (k < 0) throw std::domain_error("negative power");
    long long n = p.degree;
    FieldMode mode = trace_required_mode(p);
    BigInt total = binomial(BigInt(n) * n + k - 1, BigInt(k));

    DiagonalForm residue;
    if (!p.even()) {
        if (k % 2 != 0)
            residue = DiagonalForm::single(sign_class((n - 1) / 2),
                                           binom((n * n + k - 2) / 2, (k - 1) / 2));
        else
            residue = DiagonalForm::single(SquareClass::identity(),
                                           binom((n * n + k - 1) / 2, k / 2));
    } else {
        long long m = p.m();
        if (k % 2 != 0) {
            BigInt first = binom(m + 3 + (k - 1) / 2, (k - 1) / 2);
            BigInt second = binom(m + 3 + (k - 3) / 2, (k - 3) / 2);
            BigInt coeff = n % 4 == 0 ? BigInt(first + second) : BigInt(first - second);
            residue = p.qs().repeated(coeff);
        } else {
            BigInt first = binom(m + 3 + k / 2, k / 2);
            BigInt second = binom(m + 1 + k / 2, k / 2 - 2);
            BigInt coeff = n % 4 == 0 ? BigInt(first + second) : BigInt(first - second);
            residue = DiagonalForm::single(SquareClass::identity(), coeff);
        }
    }
    return {hyp_fill(residue, total), mode};
}

ModedForm sym_power_trace_presimplified(const TraceParams& p, long long k) {
    check_even_degree(p);
    if (k < 0) throw std::domain_error("negative power");
    long long n = p.degree;
    long long m = p.m();
    FieldMode mode = trace_required_mode(p);
    BigInt total = binomial(BigInt(n) * n + k - 1, BigInt(k));

    SquareClass eps = p.epsilon() < 0 ? SquareClass::minus_one() : SquareClass::identity();
    DiagonalForm residue;
    if (k % 2 != 0) {
        DiagonalForm qs = p.qs();
        residue = qs.repeated(binom(m + 3 + (k - 1) / 2, (k - 1) / 2))
                      .perp(qs.scaled(eps).repeated(binom(m + 3 + (k - 3) / 2, (k - 3) / 2)));
    } else {
        SquareClass ca = SquareClass::single(p.a);
        SquareClass cb = SquareClass::single(p.b);
        DiagonalForm abab = DiagonalForm::of({ca, cb, ca.times(cb)})
                                .tensor(DiagonalForm::of({SquareClass::identity(), eps}));
        residue = DiagonalForm::single(SquareClass::identity(), binom(m + 3 + k / 2, k / 2))
                      .perp(abab.repeated(binom(m + 2 + k / 2, k / 2 - 1)))
                      .perp(DiagonalForm::single(eps, binom(m + 1 + k / 2, k / 2 - 2)));
    }
    return {hyp_fill(residue, total), mode};
}

ModedForm sym_power_trace_fraction(const TraceParams& p, long long k) {
    check_even_degree(p);
    long long n = p.degree;
    long long m = p.m();
    FieldMode mode = trace_required_mode(p);
    BigInt total = binomial(BigInt(n) * n + k - 1, BigInt(k));

    DiagonalForm residue;
    if (k % 2 != 0) {
        if (k < 3) throw std::domain_error("fraction display undefined for k < 3");
        BigInt scale = n % 4 == 0 ? BigInt(2 * m + 2 * k + 4) : BigInt(2 * m + 6);
        BigInt coeff =
            exact_quotient(scale * binom((2 * m + k + 3) / 2, (k - 3) / 2), BigInt(k - 1));
        residue = p.qs().repeated(coeff);
    } else {
        if (k < 4) throw std::domain_error("fraction display undefined for even k < 4");
        BigInt base = binom(m + 1 + k / 2, k / 2 - 2);
        BigInt cross = BigInt(m + 3 + k / 2) * (m + 2 + k / 2);
        BigInt denom = BigInt(k / 2) * (k / 2 - 1);
        BigInt coeff = n % 4 == 0 ? exact_quotient(base * (denom + cross), denom)
                                  : exact_quotient(base * (cross - denom), denom);
        residue = DiagonalForm::single(SquareClass::identity(), coeff);
    }
    return {hyp_fill(residue, total), mode};
}

ModedForm ext_power_trace_closed(const TraceParams& p, long long k) {
    check_degree(p);
    long long n = p.degree;
    FieldMode mode = trace_required_mode(p);
    BigInt nsq = BigInt(n) * n;
    if (k < 0 || nsq < k) return {DiagonalForm::zero(), mode};
    BigInt total = binomial(nsq, BigInt(k));

    DiagonalForm residue;
    if (!p.even()) {
        // Sign carries the determinant of the one-dimensional residue of T_S.
        long long j = k % 2 != 0 ? (k - 1) / 2 : k / 2;
        long long exponent = j + (k % 2 != 0 ? (n - 1) / 2 : 0);
        residue = DiagonalForm::single(sign_class(exponent), binom((n * n - 1) / 2, j));
    } else if (k % 2 != 0) {
        BigInt coeff = binom(p.m() + 1, (k - 1) / 2);
        SquareClass sign = sign_class(BigInt(n) * (k - 1) / 4);
        residue = p.qs().scaled(sign).repeated(coeff);
    } else if (n % 4 == 0) {
        residue = DiagonalForm::single(SquareClass::identity(), binom(n * n / 2, k / 2));
    } else {
        long long half = n * n / 2;
        BigInt c0 = binom(half, k / 2);
        if (k <= half) {
            BigInt coeff = exact_quotient((nsq - 2 * k) * c0, nsq);
            residue = DiagonalForm::single(sign_class(k / 2), coeff);
        } else {
            BigInt coeff = exact_quotient((2 * k - nsq) * c0, nsq);
            residue = DiagonalForm::single(sign_class(k / 2 + 1), coeff);
        }
    }
    return {hyp_fill(residue, total), mode};
}

}  // namespace qf
