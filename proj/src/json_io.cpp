#include "qf/json_io.hpp"

#include <stdexcept>

namespace qf {

namespace {

using nlohmann::json;

json class_to_json(const SquareClass& c) {
    json names = json::array();
    for (const Atom& a : c.atoms()) names.push_back(a.name());
    return names;
}

SquareClass class_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("square class must be an array of atom names");
    SquareClass c;
    for (const auto& name : j) {
        const std::string& text = name.get_ref<const std::string&>();
        SquareClass atom = text == "-1" ? SquareClass::minus_one()
                                        : SquareClass::single(Atom::named(text));
        c = c.times(atom);
    }
    return c;
}

json entries_to_json(const std::map<SquareClass, BigInt>& entries) {
    json out = json::array();
    for (const auto& [c, m] : entries)
        out.push_back({{"class", class_to_json(c)}, {"mult", to_decimal(m)}});
    return out;
}

void entries_from_json(const json& j, DiagonalForm& f) {
    if (!j.is_array()) throw std::invalid_argument("entries must be an array");
    for (const auto& entry : j) {
        BigInt mult = parse_decimal(entry.at("mult").get_ref<const std::string&>());
        if (mult < 1) throw std::invalid_argument("entry multiplicity must be >= 1");
        f.add(class_from_json(entry.at("class")), mult);
    }
}

}  // namespace

nlohmann::json form_to_json(const DiagonalForm& f) {
    return {{"dim", to_decimal(f.dim())}, {"entries", entries_to_json(f.entries())}};
}

DiagonalForm form_from_json(const nlohmann::json& j) {
    DiagonalForm f;
    entries_from_json(j.at("entries"), f);
    if (j.contains("dim") &&
        parse_decimal(j.at("dim").get_ref<const std::string&>()) != f.dim())
        throw std::invalid_argument("dim does not match the entry multiplicities");
    return f;
}

nlohmann::json normal_form_to_json(const NormalForm& nf) {
    return {{"mode", std::string(mode_name(nf.mode))},
            {"dim", to_decimal(nf.dim)},
            {"hyp", to_decimal(nf.hyp)},
            {"residue", entries_to_json(nf.residue)}};
}

NormalForm normal_form_from_json(const nlohmann::json& j) {
    NormalForm nf;
    nf.mode = mode_from_name(j.at("mode").get_ref<const std::string&>());
    nf.hyp = parse_decimal(j.at("hyp").get_ref<const std::string&>());
    nf.dim = parse_decimal(j.at("dim").get_ref<const std::string&>());
    DiagonalForm residue;
    entries_from_json(j.at("residue"), residue);
    nf.residue = residue.entries();
    return nf;
}

}  // namespace qf
