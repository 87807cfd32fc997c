#pragma once

#include <map>
#include <string>
#include <vector>

#include "gjsum/chartab.hpp"

namespace gjsum {

// Element of the centre of Q^c[Gamma], stored as its coefficient family
// (x_chi) over the irreducible characters in table order. Idempotents and
// other non-units are representable; unit-hood is asserted only where an
// operation needs it.
struct CentralElement {
    GroupRef group;
    std::vector<Cyclotomic> coeff;  // indexed like char_table(group).irr

    bool is_unit() const;
    // Multiplicative evaluation at a virtual character: prod x_chi^{c_chi};
    // requires a unit when some coordinate is negative.
    Cyclotomic at_virtual(const ClassFunction& psi) const;

    friend CentralElement operator*(const CentralElement& a, const CentralElement& b);
    CentralElement inverse() const;
    bool operator==(const CentralElement& o) const;

    // "chi_<i> : <value>" lines in the fixed character order.
    std::string str() const;
};

CentralElement central_identity(const GroupRef& g);
// e_I = |I|^{-1} sum_{g in I} g as a central element (requires I normal).
CentralElement central_idempotent_of_subgroup(const GroupRef& g, const Subgroup& i);

// From group-algebra coordinates a(g) (must be a class function on G):
// coeff(chi) = (1/chi(1)) sum_g a(g) chi(g), the scalar by which a acts on
// the chi-isotypic component. require_unit rejects zero coefficients.
CentralElement from_group_algebra(const GroupRef& g, const std::vector<Cyclotomic>& a,
                                  bool require_unit = false);
// Inverse direction through x = sum_chi e_chi x_chi.
std::vector<Cyclotomic> to_group_algebra(const CentralElement& x);

// (m + n psi_{k,*})(x): coefficient at chi is x_chi^m * x_{psi_k(chi)}^n,
// with the second factor evaluated through the integral decomposition of
// psi_k(chi).
CentralElement twist_endo(const CentralElement& x, long m, long n, long k);

// Central induction: coefficient at chi is prod_phi x_phi^{<res chi, phi>}.
CentralElement central_induce(const CentralElement& x, const Subgroup& j);

// True iff coeff(chi^omega) = galois(coeff(chi), omega) for all omega in
// (Z/NZ)^*, N = lcm(exponent, coefficient orders) -- the finite check of
// invariance under the absolute Galois group, i.e. x in zeta(Q[Gamma]).
bool is_rational_equivariant(const CentralElement& x);

// Membership in the image of the reduced norm over R: conjugate-symmetric
// coefficients and strictly positive at every symplectic character.
// Failure is a value with a diagnostic, not an exception.
struct PositivityResult {
    bool ok;
    std::string diagnostic;
    explicit operator bool() const { return ok; }
};
PositivityResult is_symplectic_positive(const CentralElement& x, unsigned sign_cap_bits = 4096);

}  // namespace gjsum
