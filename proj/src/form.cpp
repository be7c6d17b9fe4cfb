#include "qf/form.hpp"

#include <ostream>
#include <stdexcept>

namespace qf {

DiagonalForm DiagonalForm::unit() { return single(SquareClass::identity()); }

DiagonalForm DiagonalForm::single(const SquareClass& c, const BigInt& mult) {
    if (mult < 0) throw std::domain_error("negative count");
    DiagonalForm f;
    f.add(c, mult);
    return f;
}

DiagonalForm DiagonalForm::of(std::initializer_list<SquareClass> classes) {
    DiagonalForm f;
    for (const SquareClass& c : classes) f.add(c, 1);
    return f;
}

DiagonalForm DiagonalForm::hyperbolic(const BigInt& planes) {
    if (planes < 0) throw std::domain_error("negative count");
    DiagonalForm f;
    f.add(SquareClass::identity(), planes);
    f.add(SquareClass::minus_one(), planes);
    return f;
}

BigInt DiagonalForm::dim() const {
    BigInt total = 0;
    for (const auto& [c, m] : entries_) total += m;
    return total;
}

BigInt DiagonalForm::multiplicity(const SquareClass& c) const {
    auto it = entries_.find(c);
    return it == entries_.end() ? BigInt(0) : it->second;
}

DiagonalForm DiagonalForm::perp(const DiagonalForm& rhs) const {
    DiagonalForm result = *this;
    for (const auto& [c, m] : rhs.entries_) result.add(c, m);
    return result;
}

DiagonalForm DiagonalForm::tensor(const DiagonalForm& rhs) const {
    DiagonalForm result;
    for (const auto& [c, m] : entries_)
        for (const auto& [d, n] : rhs.entries_) result.add(c.times(d), m * n);
    return result;
}

DiagonalForm DiagonalForm::scaled(const SquareClass& c) const {
    DiagonalForm result;
    for (const auto& [d, m] : entries_) result.add(c.times(d), m);
    return result;
}

DiagonalForm DiagonalForm::repeated(const BigInt& copies) const {
    if (copies < 0) throw std::domain_error("negative count");
    DiagonalForm result;
    if (copies == 0) return result;
    for (const auto& [c, m] : entries_) result.add(c, m * copies);
    return result;
}

void DiagonalForm::add(const SquareClass& c, const BigInt& mult) {
    if (mult < 0) throw std::domain_error("negative count");
    if (mult == 0) return;
    entries_[c] += mult;
}

std::string DiagonalForm::str() const {
    if (entries_.empty()) return "0form";
    std::string out;
    for (const auto& [c, m] : entries_) {
        if (!out.empty()) out += " + ";
        if (m != 1) out += to_decimal(m) + " x ";
        out += "<" + c.str() + ">";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const DiagonalForm& f) { return os << f.str(); }

}  // namespace qf
