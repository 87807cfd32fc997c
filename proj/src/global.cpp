#include "gjsum/global.hpp"

#include <set>

#include "gjsum/errors.hpp"

namespace gjsum {

GlobalExtensionData make_global(GroupRef g, std::vector<PlaceRecord> places) {
    std::set<std::string> labels;
    for (const auto& pl : places) {
        if (!labels.insert(pl.label).second)
            throw input_error("global data: duplicate place label '" + pl.label + "'");
        if (pl.decomp.parent != g)
            throw input_error("global data: decomposition subgroup of a different group");
        if (pl.local.gamma != pl.decomp.group)
            throw input_error("global data: local group is not the decomposition subgroup");
        if (pl.tame_abelian && pl.tame_abelian->base.gamma != pl.decomp.group)
            throw input_error("global data: tame abelian datum on a different group");
    }
    return GlobalExtensionData{std::move(g), std::move(places)};
}

Cyclotomic global_y(const GlobalExtensionData& data, const ClassFunction& chi) {
    if (chi.group != data.group) throw input_error("global_y: character on a different group");
    Cyclotomic acc(1L);
    for (const auto& pl : data.places)
        acc = acc * unramified_characteristic(restrict_to(chi, pl.decomp), pl.local);
    return acc;
}

CentralElement global_twisted_y(const GlobalExtensionData& data) {
    // Route 1: product over places of the induced local twists.
    CentralElement by_induction = central_identity(data.group);
    for (const auto& pl : data.places)
        by_induction = by_induction * central_induce(twisted_y(pl.local), pl.decomp);
    // Route 2: twist of the global y coefficient family.
    const CharacterTable& t = char_table(data.group);
    CentralElement global_family{data.group, {}};
    for (int i = 0; i < t.size(); ++i) global_family.coeff.push_back(global_y(data, t.irr[i]));
    CentralElement direct = twist_endo(global_family, 1, -1, 2);
    if (!(by_induction == direct))
        throw internal_error("global_twisted_y: decomposition identity failed");
    return by_induction;
}

SymplecticSign symplectic_sign(const GlobalExtensionData& data, const ClassFunction& chi) {
    if (!is_irreducible_character(chi))
        throw input_error("symplectic_sign: input is not an irreducible character");
    if (frobenius_schur(chi) != -1) return SymplecticSign::Plus;
    for (const auto& pl : data.places)
        if (!pl.is_tame() || pl.local.inertia_order() % 2 == 0) return SymplecticSign::Unknown;
    // All places tame of odd ramification degree: the tau-sign factor is
    // +1 and the sign reduces to y(K, chi - psi_2(chi)).
    Cyclotomic y = global_y(data, chi - adams(chi, 2));
    if (y == Cyclotomic(1L)) return SymplecticSign::Plus;
    if (y == Cyclotomic(-1L)) return SymplecticSign::Minus;
    throw internal_error("symplectic_sign: y value at a symplectic character is not +-1");
}

CentralElement equivariant_symplectic_J(const GlobalExtensionData& data) {
    const CharacterTable& t = char_table(data.group);
    CentralElement r{data.group, {}};
    for (int i = 0; i < t.size(); ++i) {
        SymplecticSign s = symplectic_sign(data, t.irr[i]);
        if (s == SymplecticSign::Unknown)
            throw input_error(
                "equivariant_symplectic_J: a wild or even-inertia place leaves the sign "
                "undetermined");
        r.coeff.push_back(Cyclotomic(s == SymplecticSign::Minus ? -1L : 1L));
    }
    return r;
}

CentralElement assemble_global_J2(const GlobalExtensionData& data) {
    CentralElement acc = central_identity(data.group);
    for (const auto& pl : data.places) {
        if (!pl.tame_abelian)
            throw input_error("assemble_global_J2: place '" + pl.label +
                              "' has no tame abelian realization");
        acc = acc * central_induce(equivariant_J2(*pl.tame_abelian), pl.decomp);
    }
    return acc;
}

}  // namespace gjsum
