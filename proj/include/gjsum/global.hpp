#pragma once

#include <optional>
#include <string>

#include "gjsum/gauss.hpp"

namespace gjsum {

// One ramified place: its decomposition subgroup H <= G and local data on
// H (as an abstract group in its own right). A tame abelian residue
// realization is optional and only needed for Gauss-sum assembly.
struct PlaceRecord {
    std::string label;
    Subgroup decomp;
    LocalExtensionData local;  // local.gamma == decomp.group
    std::optional<TameAbelianLocalDatum> tame_abelian;

    bool is_tame() const { return local.is_tame(); }
};

struct GlobalExtensionData {
    GroupRef group;
    std::vector<PlaceRecord> places;
};

GlobalExtensionData make_global(GroupRef g, std::vector<PlaceRecord> places);

// y(K, chi) = prod_{v | d_L} y(K_v, chi_v), chi_v the restriction to the
// decomposition subgroup; defined for any virtual character.
Cyclotomic global_y(const GlobalExtensionData& data, const ClassFunction& chi);

// (1 - psi_{2,*})(y_{L/K}), computed both as the product of central
// inductions of the local twists and directly as the twist of the global
// y family; the two routes are compared exactly before returning.
CentralElement global_twisted_y(const GlobalExtensionData& data);

enum class SymplecticSign { Plus = 1, Minus = -1, Unknown = 0 };

// Sign of tau(K, psi_2(chi) - 2 chi) * y(K, chi - psi_2(chi)) for
// symplectic irreducible chi; +1 for non-symplectic chi. The tau factor is
// +1 by the root-number rule when every place is tame with odd inertia
// order; otherwise the sign is Unknown.
SymplecticSign symplectic_sign(const GlobalExtensionData& data, const ClassFunction& chi);

// Coefficient family of the signs above; places that poison the sign to
// Unknown raise input_error.
CentralElement equivariant_symplectic_J(const GlobalExtensionData& data);

// J_{2,L/K} = prod_v central_induce(J_{2,local}); every place must carry a
// tame abelian realization.
CentralElement assemble_global_J2(const GlobalExtensionData& data);

}  // namespace gjsum
