#pragma once

#include "qf/bigint.hpp"

namespace qf::comb {

/**
 * Binomial coefficient C(n, k) for n >= 0, exact. Returns 0 for k < 0 or k > n.
 * Negative upper index throws std::domain_error; use minus_transform for that.
 */
BigInt binomial(const BigInt& n, const BigInt& k);

/// C(-q, i) = (-1)^i C(q+i-1, i) for q, i >= 0.
BigInt minus_transform(const BigInt& q, const BigInt& i);

struct IdentityCheck {
    BigInt lhs;
    BigInt rhs;
    bool equal;
};

/// sum_j (-1)^j C(2p+j-1, j) C(p, r-j)  ==  (-1)^r C(p+r-1, r).
IdentityCheck vandermonde_alternating(const BigInt& p, const BigInt& r);

/// C(r-1, s) + C(r-1, s-1) == C(r, s) for 1 <= s <= r. Out of range throws.
bool pascal_rule(const BigInt& r, const BigInt& s);

/// s C(r, s) == r C(r-1, s-1) for r, s >= 1 (denominators cleared).
bool absorption(const BigInt& r, const BigInt& s);

/// sum_{j=0}^{r} C(p+j-1, j) C(q+r-j, r-j)  ==  C(p+q+r, r).
IdentityCheck generalized_vandermonde(const BigInt& p, const BigInt& q, const BigInt& r);

}  // namespace qf::comb
