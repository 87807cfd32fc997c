#pragma once

#include <optional>

#include "gjsum/center.hpp"
#include "gjsum/chartab.hpp"

namespace gjsum {

// Abstract local Galois extension: the group, its ramification filtration
// Gamma_0 >= Gamma_1 >= ... (lower numbering, trivial from some index on),
// a Frobenius lift, and the residue characteristic. No field elements are
// ever constructed; every in-scope formula depends only on this data.
struct LocalExtensionData {
    GroupRef gamma;
    long p = 0;                               // residue characteristic
    long f_abs = 1;                           // absolute residue degree of the base
    std::vector<std::vector<int>> filtration;  // [Gamma_0, Gamma_1, ...], sorted element lists
    int frobenius = 0;                         // sigma, image generates Gamma/Gamma_0

    const std::vector<int>& inertia() const;   // Gamma_0 (identity-only if unramified)
    long inertia_order() const;
    long wild_order() const;                   // |Gamma_1|
    bool is_tame() const { return wild_order() == 1; }
    bool in_inertia(int g) const;
};

// Validates all structural invariants: each Gamma_i normal and descending,
// Gamma_1 a p-group and the Sylow p-subgroup of Gamma_0, Gamma_0/Gamma_1
// cyclic of order prime to p, Gamma/Gamma_0 cyclic generated by the image
// of the Frobenius lift. Raises input_error on violation.
LocalExtensionData make_local_extension(GroupRef gamma, long p, long f_abs,
                                        std::vector<std::vector<int>> filtration, int frobenius);

// ord_E(D_{E/F}) = sum_i (|Gamma_i| - 1).
long different_valuation(const LocalExtensionData& d);

// Valuation n of the square root of the inverse different: -ord(D)/2 when
// ord(D) is even, absent otherwise.
std::optional<long> sqrt_inv_different(const LocalExtensionData& d);

bool is_weakly_ramified(const LocalExtensionData& d);  // Gamma_2 trivial
// n = 1 (mod |Gamma_1|); precondition: the square root exists.
bool freeness_congruence(const LocalExtensionData& d);

// Unramified part: keep the constituents trivial on Gamma_0.
ClassFunction unramified_part(const ClassFunction& chi, const LocalExtensionData& d);

bool is_unramified_character(const ClassFunction& chi, const LocalExtensionData& d);

// y(F, phi): 1 on ramified irreducibles, (-1)^phi(1) det_phi(sigma) on
// unramified ones, extended multiplicatively over the integral
// decomposition of a virtual character.
Cyclotomic unramified_characteristic(const ClassFunction& phi, const LocalExtensionData& d);

// y_{E/F} = sum_chi e_chi y(F, chi) as a central element.
CentralElement equivariant_y(const LocalExtensionData& d);
// (1 - psi_{2,*})(y_{E/F}).
CentralElement twisted_y(const LocalExtensionData& d);
// (1 - e_I) + sigma^{-1} e_I, assembled in the group algebra; requires the
// closed form's hypotheses: |Gamma_0| odd and Gamma abelian or of odd order.
CentralElement closed_form_twisted_y(const LocalExtensionData& d);
bool closed_form_hypotheses_hold(const LocalExtensionData& d);

}  // namespace gjsum
