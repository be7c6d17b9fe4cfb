#pragma once

#include <array>
#include <string>
#include <string_view>

#include "qf/form.hpp"
#include "qf/normal_form.hpp"

namespace qf {

/// Λ^k(h x H): odd k all hyperbolic, even k = 2l has residue C(h, l) x <(-1)^l>.
DiagonalForm ext_power_hyperbolic_closed(long long h, long long k);

/// S^k(h x H): odd k all hyperbolic, even k = 2l has residue C(h+l-1, l) x <1>.
DiagonalForm sym_power_hyperbolic_closed(long long h, long long k);

/// How to read the residue sign exponent of an odd-degree trace form.
enum class OddDegreeSign {
    HalfFloor,  ///< (n-1)/2 -- the reading consistent with every derived identity
    HalfCeil,   ///< (n+1)/2 -- deliberately inconsistent, for negative testing
};

/**
 * Parameters of the trace form of a degree-n symbol algebra: the degree, the two
 * generator square classes, and the square class of <n> itself (decomposed over the
 * rationals by default, or kept as an opaque atom "n").
 */
struct TraceParams {
    long long degree = 1;
    Atom a = Atom::named("a");
    Atom b = Atom::named("b");
    SquareClass degree_class;

    static TraceParams make(long long n, std::string_view a_name = "a",
                            std::string_view b_name = "b");
    static TraceParams with_opaque_degree(long long n, std::string_view a_name = "a",
                                          std::string_view b_name = "b");

    bool even() const { return degree % 2 == 0; }
    /// (n^2 - 4) / 2 hyperbolic planes accompany q_S for even n.
    long long m() const;
    /// (-1)^(n/2) for even n.
    int epsilon() const;
    /// q_S = <n> tensor <1, a, b, eps*a*b>, the 4-dim anisotropic part for even n.
    DiagonalForm qs() const;
};

/// The trace form T_S: dim n^2, all k. Odd degree: <sign> ⊥ (n^2-1)/2 x H.
DiagonalForm trace_form(const TraceParams& p, OddDegreeSign sign = OddDegreeSign::HalfFloor);

/// A closed form together with the field mode it is claimed in.
struct ModedForm {
    DiagonalForm form;
    FieldMode required_mode = FieldMode::Generic;
};

FieldMode trace_required_mode(const TraceParams& p);

/**
 * Closed form for S^k(T_S), Hyp-filled to dimension C(n^2+k-1, k).
 * Odd degree: single residue class <(-1)^((n-1)/2)> resp. <1> by parity of k.
 * Even degree: coefficient x q_S (odd k) resp. x <1> (even k), the two
 * half-coefficients combined by n mod 4 (added for 4 | n, cancelled otherwise).
 */
ModedForm sym_power_trace_closed(const TraceParams& p, long long k);

/**
 * The un-absorbed construction for even degree: the literal two- resp. three-term
 * orthogonal sums with C(., negative) = 0, Hyp-filled. Odd degree throws.
 */
ModedForm sym_power_trace_presimplified(const TraceParams& p, long long k);

/**
 * The single-fraction display for even degree. Defined only for odd k >= 3 and
 * even k >= 4; outside that range throws std::domain_error. Divisions are exact
 * (asserted).
 */
ModedForm sym_power_trace_fraction(const TraceParams& p, long long k);

/**
 * Closed form for Λ^k(T_S), Hyp-filled to dimension C(n^2, k); zero form beyond n^2.
 * Half-integer looking coefficients are exact integers (asserted:
 * "table coefficient not integral").
 */
ModedForm ext_power_trace_closed(const TraceParams& p, long long k);

/// Stable identity ids consumed by the verification harness and the CLI.
inline constexpr std::array<std::string_view, 14> kClosedFormIdentityIds = {
    "S4", "S5", "N1", "N2", "L1", "L2", "L3", "R1", "GV", "P1", "P10", "P11", "P12", "LT",
};

}  // namespace qf
