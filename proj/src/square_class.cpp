#include "qf/square_class.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace qf {

Atom Atom::named(std::string_view name) {
    if (name.empty()) throw std::invalid_argument("atom name must be non-empty");
    for (char ch : name) {
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
            throw std::invalid_argument("atom name must be a word over [A-Za-z0-9_]: '" +
                                        std::string(name) + "'");
    }
    return Atom(std::string(name), false);
}

const Atom& Atom::minus_one() {
    static const Atom instance("-1", true);
    return instance;
}

std::strong_ordering Atom::operator<=>(const Atom& rhs) const noexcept {
    // The distinguished atom sorts first.
    if (minus_one_ != rhs.minus_one_)
        return minus_one_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return name_ <=> rhs.name_;
}

std::string_view mode_name(FieldMode mode) {
    return mode == FieldMode::Generic ? "generic" : "minus_one_square";
}

FieldMode mode_from_name(std::string_view name) {
    if (name == "generic" || name == "r") return FieldMode::Generic;
    if (name == "minus_one_square" || name == "c") return FieldMode::MinusOneSquare;
    throw std::invalid_argument("unknown field mode: '" + std::string(name) + "'");
}

SquareClass SquareClass::minus_one() { return single(Atom::minus_one()); }

SquareClass SquareClass::single(const Atom& a) {
    SquareClass c;
    c.atoms_.push_back(a);
    return c;
}

SquareClass SquareClass::of(std::initializer_list<Atom> atoms) {
    SquareClass c;
    for (const Atom& a : atoms) c = c.times(single(a));
    return c;
}

SquareClass SquareClass::of_integer(long long v) {
    if (v == 0) throw std::invalid_argument("zero has no square class");
    constexpr long long kFactorBound = 1'000'000'000;
    if (v > kFactorBound || v < -kFactorBound)
        throw std::invalid_argument("integer entry too large to factor");

    SquareClass c;
    if (v < 0) {
        c = c.times(minus_one());
        v = -v;
    }
    for (long long p = 2; p * p <= v; ++p) {
        int exponent = 0;
        while (v % p == 0) {
            v /= p;
            ++exponent;
        }
        if (exponent % 2 != 0) c = c.times(single(Atom::named(std::to_string(p))));
    }
    if (v > 1) c = c.times(single(Atom::named(std::to_string(v))));
    return c;
}

SquareClass SquareClass::times(const SquareClass& rhs) const {
    // Symmetric difference of two sorted atom lists.
    SquareClass result;
    auto it = atoms_.begin();
    auto jt = rhs.atoms_.begin();
    while (it != atoms_.end() && jt != rhs.atoms_.end()) {
        if (*it < *jt)
            result.atoms_.push_back(*it++);
        else if (*jt < *it)
            result.atoms_.push_back(*jt++);
        else {
            ++it;
            ++jt;
        }
    }
    result.atoms_.insert(result.atoms_.end(), it, atoms_.end());
    result.atoms_.insert(result.atoms_.end(), jt, rhs.atoms_.end());
    return result;
}

SquareClass SquareClass::canonical(FieldMode mode) const {
    if (mode == FieldMode::Generic || !contains_minus_one()) return *this;
    SquareClass result;
    for (const Atom& a : atoms_)
        if (!a.is_minus_one()) result.atoms_.push_back(a);
    return result;
}

bool SquareClass::contains_minus_one() const noexcept {
    return !atoms_.empty() && atoms_.front().is_minus_one();
}

std::strong_ordering SquareClass::operator<=>(const SquareClass& rhs) const noexcept {
    return std::lexicographical_compare_three_way(atoms_.begin(), atoms_.end(),
                                                  rhs.atoms_.begin(), rhs.atoms_.end());
}

std::string SquareClass::str() const {
    std::string out;
    bool first = true;
    for (const Atom& a : atoms_) {
        if (a.is_minus_one()) {
            out += '-';
            continue;
        }
        if (!first) out += '*';
        out += a.name();
        first = false;
    }
    if (first) out += '1';  // nothing but an optional sign was printed
    return out;
}

std::ostream& operator<<(std::ostream& os, const SquareClass& c) { return os << c.str(); }

}  // namespace qf
