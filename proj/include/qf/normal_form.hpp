#pragma once

#include <map>
#include <string>

#include "qf/form.hpp"

namespace qf {

/**
 * Witt-style decomposition residue ⊥ hyp x H in a given field mode.
 * Under Generic the residue contains no {c, -c} pair; under MinusOneSquare every
 * residue multiplicity is exactly 1 and no residue class contains -1.
 */
struct NormalForm {
    FieldMode mode = FieldMode::Generic;
    std::map<SquareClass, BigInt> residue;
    BigInt hyp = 0;
    BigInt dim = 0;

    bool operator==(const NormalForm& rhs) const {
        return mode == rhs.mode && residue == rhs.residue && hyp == rhs.hyp && dim == rhs.dim;
    }

    /// Compact rendering: "4 x <1> + 3 x H", "0form". Zero counts omitted.
    std::string str() const;
    /// Explicit rendering for tables: every multiplicity and the H count printed.
    std::string str_explicit() const;
};

NormalForm normalize(const DiagonalForm& f, FieldMode mode);

bool isometric(const DiagonalForm& f, const DiagonalForm& g, FieldMode mode);

/**
 * residue ⊥ (deficit/2) x H so the result has dimension total_dim.
 * Throws std::domain_error("Hyp fill impossible...") when the deficit is negative or odd.
 */
DiagonalForm hyp_fill(const DiagonalForm& residue, const BigInt& total_dim);

/// Back to a diagonal form: residue ⊥ hyp x H.
DiagonalForm render(const NormalForm& nf);

}  // namespace qf
