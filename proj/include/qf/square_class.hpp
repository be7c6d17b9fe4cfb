#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qf/bigint.hpp"

namespace qf {

/**
 * A generator of the square-class group: either a named unit ("a", "b", "2", ...)
 * or the distinguished class of -1.
 */
class Atom {
public:
    /// Named atom. Names are non-empty words over [A-Za-z0-9_]; "-1" is not a name.
    static Atom named(std::string_view name);
    static const Atom& minus_one();

    bool is_minus_one() const noexcept { return minus_one_; }
    /// "-1" for the distinguished atom, the identifier otherwise.
    const std::string& name() const noexcept { return name_; }

    std::strong_ordering operator<=>(const Atom& rhs) const noexcept;
    bool operator==(const Atom& rhs) const noexcept {
        return minus_one_ == rhs.minus_one_ && name_ == rhs.name_;
    }

private:
    Atom(std::string name, bool minus_one) : name_(std::move(name)), minus_one_(minus_one) {}

    std::string name_;
    bool minus_one_;
};

/// Field model: which units are squares besides the obvious ones.
enum class FieldMode {
    Generic,         ///< -1 and all atoms are independent non-squares
    MinusOneSquare,  ///< -1 is a square; atoms stay independent
};

std::string_view mode_name(FieldMode mode);
FieldMode mode_from_name(std::string_view name);  // accepts long names and "r"/"c"

/**
 * An element of K^x / (K^x)^2, modelled as a finite set of atoms.
 * Multiplication is symmetric difference; every class is its own inverse.
 */
class SquareClass {
public:
    SquareClass() = default;  ///< the class of 1

    static SquareClass identity() { return SquareClass(); }
    static SquareClass minus_one();
    static SquareClass single(const Atom& a);
    static SquareClass of(std::initializer_list<Atom> atoms);
    /// Square-free sign decomposition of a nonzero rational integer, e.g. -8 -> {-1, 2}.
    static SquareClass of_integer(long long v);

    SquareClass times(const SquareClass& rhs) const;
    SquareClass negated() const { return times(minus_one()); }
    SquareClass power(const BigInt& k) const { return k % 2 != 0 ? *this : SquareClass(); }
    /// Collapse atoms that are squares in the given mode (-1 under MinusOneSquare).
    SquareClass canonical(FieldMode mode) const;

    bool is_identity() const noexcept { return atoms_.empty(); }
    bool contains_minus_one() const noexcept;
    const std::vector<Atom>& atoms() const noexcept { return atoms_; }

    std::strong_ordering operator<=>(const SquareClass& rhs) const noexcept;
    bool operator==(const SquareClass& rhs) const noexcept { return atoms_ == rhs.atoms_; }

    /// "1", "-1", "a*b", "-2*a" -- the entry syntax of the expression language.
    std::string str() const;

private:
    std::vector<Atom> atoms_;  // sorted, unique
};

std::ostream& operator<<(std::ostream& os, const SquareClass& c);

}  // namespace qf
