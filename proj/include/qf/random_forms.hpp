#pragma once

#include <cstdint>

#include "qf/form.hpp"

namespace qf {

/// Shape of the seeded random forms used by equivalence sweeps.
struct RandomFormSpec {
    unsigned max_atoms = 4;    ///< atom names drawn from "a".."d"
    unsigned max_classes = 8;  ///< distinct diagonal classes
    unsigned max_dim = 40;     ///< total dimension bound
    bool allow_minus_one = true;
};

/**
 * Deterministic pseudo-random diagonal form. The same (seed, spec) pair produces
 * the same form on every platform (raw mt19937_64 output, no distribution objects).
 */
DiagonalForm random_form(std::uint64_t seed, const RandomFormSpec& spec = {});

}  // namespace qf
