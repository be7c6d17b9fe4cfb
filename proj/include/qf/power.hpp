#pragma once

#include "qf/form.hpp"

namespace qf {

inline constexpr unsigned long long kDefaultEnumerationCap = 10'000'000ULL;

/// Exterior power Λ^k. Λ^0 = <1>; k < 0 and k > dim give the zero form.
DiagonalForm exterior_power(const DiagonalForm& f, long long k);

/// Symmetric power S^k via the per-class convolution. k < 0 throws ("negative power").
DiagonalForm symmetric_power(const DiagonalForm& f, long long k);

/// S^k assembled from exterior powers: ⊥_i C(dim f + i - 1, i) x Λ^(k-2i) f.
DiagonalForm symmetric_power_via_exterior(const DiagonalForm& f, long long k);

/**
 * Brute-force Λ^k by enumerating k-subsets of the diagonal entries.
 * Throws std::domain_error("enumeration too large; use convolution route")
 * when C(dim, k) or dim exceeds `cap`.
 */
DiagonalForm naive_exterior_power(const DiagonalForm& f, long long k,
                                  unsigned long long cap = kDefaultEnumerationCap);

/// Brute-force S^k by enumerating degree-k monomials (non-decreasing index tuples).
DiagonalForm naive_symmetric_power(const DiagonalForm& f, long long k,
                                   unsigned long long cap = kDefaultEnumerationCap);

}  // namespace qf
