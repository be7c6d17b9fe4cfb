#include "qf/combinatorics.hpp"

#include <stdexcept>

namespace qf::comb {

BigInt binomial(const BigInt& n, const BigInt& k) {
    if (n < 0) throw std::domain_error("use minus_transform for negative upper index");
    if (k < 0 || k > n) return 0;
    BigInt top = n - k < k ? n - k : k;
    BigInt result = 1;
    for (BigInt i = 1; i <= top; ++i) {
        result *= n - top + i;
        result /= i;  // exact at every step
    }
    return result;
}

namespace {

// C(n, k) extended by C(anything, 0) = 1, so n = -1 corners are well-defined.
BigInt binomial_c(const BigInt& n, const BigInt& k) {
    if (k == 0) return 1;
    return binomial(n, k);
}

}  // namespace

BigInt minus_transform(const BigInt& q, const BigInt& i) {
    if (q < 0 || i < 0) throw std::domain_error("minus_transform needs q, i >= 0");
    BigInt value = binomial_c(q + i - 1, i);
    return i % 2 == 0 ? value : -value;
}

IdentityCheck vandermonde_alternating(const BigInt& p, const BigInt& r) {
    if (p < 0 || r < 0) throw std::domain_error("vandermonde_alternating needs p, r >= 0");
    BigInt lhs = 0;
    for (BigInt j = 0; j <= r; ++j) {
        BigInt term = binomial_c(2 * p + j - 1, j) * binomial(p, r - j);
        lhs += j % 2 == 0 ? term : -term;
    }
    BigInt rhs = binomial_c(p + r - 1, r);
    if (r % 2 != 0) rhs = -rhs;
    return {lhs, rhs, lhs == rhs};
}

bool pascal_rule(const BigInt& r, const BigInt& s) {
    if (s < 1 || s > r) throw std::domain_error("pascal_rule needs 1 <= s <= r");
    return binomial(r - 1, s) + binomial(r - 1, s - 1) == binomial(r, s);
}

bool absorption(const BigInt& r, const BigInt& s) {
    if (r < 1 || s < 1) throw std::domain_error("absorption needs r, s >= 1");
    return s * binomial(r, s) == r * binomial(r - 1, s - 1);
}

IdentityCheck generalized_vandermonde(const BigInt& p, const BigInt& q, const BigInt& r) {
    if (p < 0 || q < 0 || r < 0)
        throw std::domain_error("generalized_vandermonde needs p, q, r >= 0");
    BigInt lhs = 0;
    for (BigInt j = 0; j <= r; ++j)
        lhs += binomial_c(p + j - 1, j) * binomial(q + r - j, r - j);
    BigInt rhs = binomial(p + q + r, r);
    return {lhs, rhs, lhs == rhs};
}

}  // namespace qf::comb
