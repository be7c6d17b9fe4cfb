#include "qf/normal_form.hpp"

#include <stdexcept>

namespace qf {

namespace {

std::string residue_str(const std::map<SquareClass, BigInt>& residue, bool explicit_counts) {
    std::string out;
    for (const auto& [c, m] : residue) {
        if (!out.empty()) out += " + ";
        if (m != 1 || explicit_counts) out += to_decimal(m) + " x ";
        out += "<" + c.str() + ">";
    }
    return out;
}

}  // namespace

std::string NormalForm::str() const {
    std::string out = residue_str(residue, false);
    if (hyp != 0) {
        if (!out.empty()) out += " + ";
        out += hyp == 1 ? "H" : to_decimal(hyp) + " x H";
    }
    return out.empty() ? "0form" : out;
}

std::string NormalForm::str_explicit() const {
    if (dim == 0) return "0form";
    std::string out = residue_str(residue, true);
    if (!out.empty()) out += " + ";
    return out + to_decimal(hyp) + " x H";
}

NormalForm normalize(const DiagonalForm& f, FieldMode mode) {
    NormalForm nf;
    nf.mode = mode;
    nf.dim = f.dim();

    if (mode == FieldMode::Generic) {
        // Cancel <c, -c> pairs into hyperbolic planes; c != -c always holds here.
        const auto& entries = f.entries();
        for (const auto& [c, m] : entries) {
            SquareClass nc = c.negated();
            auto other = entries.find(nc);
            if (other == entries.end()) {
                nf.residue.emplace(c, m);
                continue;
            }
            if (nc < c) continue;  // pair handled at the smaller class
            BigInt cancelled = m < other->second ? m : other->second;
            nf.hyp += cancelled;
            if (m > cancelled) nf.residue.emplace(c, m - cancelled);
            if (other->second > cancelled) nf.residue.emplace(nc, other->second - cancelled);
        }
        return nf;
    }

    // -1 is a square: fold it out of every class, then <c, c> is itself hyperbolic.
    std::map<SquareClass, BigInt> folded;
    for (const auto& [c, m] : f.entries()) folded[c.canonical(mode)] += m;
    for (const auto& [c, m] : folded) {
        nf.hyp += m / 2;
        if (m % 2 != 0) nf.residue.emplace(c, 1);
    }
    return nf;
}

bool isometric(const DiagonalForm& f, const DiagonalForm& g, FieldMode mode) {
    return normalize(f, mode) == normalize(g, mode);
}

DiagonalForm hyp_fill(const DiagonalForm& residue, const BigInt& total_dim) {
    BigInt deficit = total_dim - residue.dim();
    if (deficit < 0)
        throw std::domain_error("Hyp fill impossible: residue dimension exceeds " +
                                to_decimal(total_dim));
    if (deficit % 2 != 0)
        throw std::domain_error("Hyp fill impossible: parity mismatch filling to " +
                                to_decimal(total_dim));
    return residue.perp(DiagonalForm::hyperbolic(deficit / 2));
}

DiagonalForm render(const NormalForm& nf) {
    DiagonalForm f = DiagonalForm::hyperbolic(nf.hyp);
    for (const auto& [c, m] : nf.residue) f.add(c, m);
    return f;
}

}  // namespace qf
