#pragma once

#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>

#include "qf/bigint.hpp"
#include "qf/square_class.hpp"

namespace qf {

/**
 * A diagonal quadratic form <a_1, ..., a_m> over a field of characteristic != 2,
 * stored as a counted multiset of square classes. The zero-dimensional form is
 * first-class (empty multiset). Multiplicities are arbitrary-precision and
 * always >= 1 for stored classes.
 */
class DiagonalForm {
public:
    DiagonalForm() = default;  ///< zero form

    static DiagonalForm zero() { return DiagonalForm(); }
    static DiagonalForm unit();  ///< <1>
    static DiagonalForm single(const SquareClass& c, const BigInt& mult = 1);
    static DiagonalForm of(std::initializer_list<SquareClass> classes);
    /// h hyperbolic planes <1,-1>. Throws std::domain_error on negative count.
    static DiagonalForm hyperbolic(const BigInt& planes);

    bool is_zero() const noexcept { return entries_.empty(); }
    BigInt dim() const;
    const std::map<SquareClass, BigInt>& entries() const noexcept { return entries_; }
    BigInt multiplicity(const SquareClass& c) const;

    /// Orthogonal sum: multiplicities add.
    DiagonalForm perp(const DiagonalForm& rhs) const;
    /// Tensor product: classes multiply pairwise, multiplicities multiply.
    DiagonalForm tensor(const DiagonalForm& rhs) const;
    /// <c> tensor this.
    DiagonalForm scaled(const SquareClass& c) const;
    /// copies * this (orthogonal sum of copies). Throws std::domain_error on negative count.
    DiagonalForm repeated(const BigInt& copies) const;

    /// Add `mult` copies of class c (mult >= 0; 0 is a no-op).
    void add(const SquareClass& c, const BigInt& mult);

    bool operator==(const DiagonalForm& rhs) const { return entries_ == rhs.entries_; }

    /// Counted rendering in the expression syntax: "7 x <1> + 3 x <-1>", "0form".
    std::string str() const;

private:
    std::map<SquareClass, BigInt> entries_;
};

std::ostream& operator<<(std::ostream& os, const DiagonalForm& f);

}  // namespace qf
