#include "qf/random_forms.hpp"

#include <random>
#include <set>

namespace qf {

DiagonalForm random_form(std::uint64_t seed, const RandomFormSpec& spec) {
    std::mt19937_64 rng(seed);
    auto below = [&rng](unsigned long long n) { return n <= 1 ? 0 : rng() % n; };

    unsigned atom_count = 1 + static_cast<unsigned>(below(spec.max_atoms));
    std::vector<Atom> atoms;
    for (unsigned i = 0; i < atom_count; ++i)
        atoms.push_back(Atom::named(std::string(1, static_cast<char>('a' + i))));

    unsigned class_count = 1 + static_cast<unsigned>(below(spec.max_classes));
    unsigned long long possible = 1ULL << (atom_count + (spec.allow_minus_one ? 1 : 0));
    if (class_count > possible) class_count = static_cast<unsigned>(possible);
    if (class_count > spec.max_dim) class_count = spec.max_dim;
    std::set<SquareClass> classes;
    while (classes.size() < class_count) {
        SquareClass c;
        for (const Atom& a : atoms)
            if (below(2) != 0) c = c.times(SquareClass::single(a));
        if (spec.allow_minus_one && below(2) != 0) c = c.negated();
        classes.insert(c);
    }

    // Spread a random total dimension over the chosen classes, each at least once.
    unsigned dim = static_cast<unsigned>(classes.size()) +
                   static_cast<unsigned>(below(spec.max_dim - classes.size() + 1));
    DiagonalForm f;
    for (const SquareClass& c : classes) f.add(c, 1);
    for (unsigned i = static_cast<unsigned>(classes.size()); i < dim; ++i) {
        auto it = classes.begin();
        std::advance(it, static_cast<long>(below(classes.size())));
        f.add(*it, 1);
    }
    return f;
}

}  // namespace qf
