#pragma once

#include <vector>

#include "gjsum/cyclotomic.hpp"
#include "gjsum/group.hpp"

namespace gjsum {

// Class function on a group: one exact cyclotomic value per conjugacy
// class, in the group's fixed class order.
struct ClassFunction {
    GroupRef group;
    std::vector<Cyclotomic> values;  // indexed by class

    const Cyclotomic& at_class(int cls) const { return values[cls]; }
    const Cyclotomic& at_element(int g) const { return values[group->conj.class_of[g]]; }
    const Cyclotomic& degree_value() const { return values[0]; }
    long degree() const;  // requires an integer value at the identity

    friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
    friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
    friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
    ClassFunction scaled(long c) const;
    bool operator==(const ClassFunction& o) const;
};

ClassFunction trivial_character(const GroupRef& g);
ClassFunction regular_character(const GroupRef& g);

// Irreducible characters ordered by degree, then lexicographically on the
// exact value sequence; deterministic for a fixed group construction.
struct CharacterTable {
    GroupRef group;
    std::vector<ClassFunction> irr;
    std::vector<long> degrees;
    long dixon_prime;  // provenance: the modular prime used by the solver

    int size() const { return static_cast<int>(irr.size()); }
    // Index of the irreducible with exactly these values; -1 if none.
    int find(const ClassFunction& f) const;
};

// Computes the table by Dixon's method (class-algebra structure constants,
// simultaneous eigenvectors mod p = 1 (mod exponent), discrete-log lifting)
// and verifies both orthogonality relations exactly before returning.
const CharacterTable& char_table(const GroupRef& g);

// <chi, phi> = (1/|G|) sum_c |c| chi(c) conj(phi(c)).
Cyclotomic inner_product(const ClassFunction& chi, const ClassFunction& phi);

// Integer coordinates of a virtual character over Irr(G); raises
// input_error if the decomposition is not integral.
std::vector<long> decompose(const ClassFunction& f);
bool is_virtual_character(const ClassFunction& f);
bool is_irreducible_character(const ClassFunction& f);

ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& h);
ClassFunction induce_from(const ClassFunction& phi, const Subgroup& h);
ClassFunction inflate_from(const ClassFunction& chi_on_quotient, const GroupRef& g,
                           const Quotient& q);

// Adams operation psi_k: chi(g) -> chi(g^k).
ClassFunction adams(const ClassFunction& chi, long k);

// Determinant character via Newton's identities on power sums
// p_i = chi(g^i); extended multiplicatively to virtual characters.
ClassFunction det_char(const ClassFunction& chi);

// Frobenius-Schur indicator of an irreducible: +1 real, 0 complex,
// -1 symplectic (quaternionic).
int frobenius_schur(const ClassFunction& chi);
std::vector<int> symplectic_chars(const GroupRef& g);  // indices into table

}  // namespace gjsum
