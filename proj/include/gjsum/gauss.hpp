#pragma once

#include "gjsum/center.hpp"
#include "gjsum/localext.hpp"

namespace gjsum {

// F_q, q = p^f, as F_p[x] modulo a fixed monic irreducible, with a fixed
// multiplicative generator. Both are chosen deterministically (lexicographic
// least) and recorded in reports, since Gauss-sum values depend on them
// only through a Galois twist.
struct FiniteFieldData {
    long p = 0;
    long f = 1;
    std::vector<long> modulus;    // monic, degree f, coefficients mod p
    std::vector<long> generator;  // degree < f

    long q() const;
    // log table: element (encoded as sum c_i p^i) -> discrete log base the
    // generator; element 0 has no log.
    const std::vector<long>& dlog() const { return dlog_; }
    std::vector<long> dlog_;                 // size q, -1 for zero
    std::vector<std::vector<long>> powers_;  // generator^j for j < q-1
    std::vector<long> trace_;                // absolute trace of generator^j, in F_p
};

FiniteFieldData finite_field(long p, long f);

// Classical Gauss sum over F_q: multiplicative character sending the fixed
// generator to zeta_{q-1}^chi_exp, additive character x -> zeta_p^Tr(x);
// exact value in Q(zeta_{p(q-1)}).
Cyclotomic gauss_sum(const FiniteFieldData& k, long chi_exp);

// Jacobi sum J(chi_a, chi_b) = sum_{x != 0,1} chi_a(x) chi_b(1-x); the
// independent oracle for the multiplicative Gauss-sum identities.
Cyclotomic jacobi_sum(const FiniteFieldData& k, long a_exp, long b_exp);

// Tame abelian local extension together with a residue-field realization:
// e = |Gamma_0| divides q - 1 and the fixed generator of Gamma_0 (least
// index of full order) corresponds to generator^((q-1)/e).
struct TameAbelianLocalDatum {
    LocalExtensionData base;
    FiniteFieldData residue;
    int inertia_generator = 0;  // element index in Gamma
};

TameAbelianLocalDatum make_tame_abelian(LocalExtensionData base, FiniteFieldData residue);

// tau(F, chi) for a linear character chi: 1 if chi is unramified, else the
// Gauss sum of the transported residue character (the restriction of chi
// to Gamma_0 composed with x -> x^((q-1)/e)).
Cyclotomic tame_tau(const TameAbelianLocalDatum& d, const ClassFunction& chi);

CentralElement equivariant_tau(const TameAbelianLocalDatum& d);
// tau' = tau * y^{-1}, coefficient-wise.
CentralElement modified_tau(const TameAbelianLocalDatum& d);
// J_2 = (psi_{2,*} - 2)(tau): coefficient tau(chi^2) tau(chi)^{-2}.
CentralElement equivariant_J2(const TameAbelianLocalDatum& d);

}  // namespace gjsum
