#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "gjsum/errors.hpp"
#include "gjsum/localext.hpp"

using namespace gjsum;

namespace {

std::vector<int> all_elements(const GroupRef& g) {
    std::vector<int> v(g->group.order());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

}  // namespace

TEST_CASE("validation of local extension data") {
    GroupRef c6 = make_group(FiniteGroup::cyclic(6));
    // valid: tame, inertia C_3 = {0,2,4}, frobenius generates C_6/C_3
    CHECK_NOTHROW(make_local_extension(c6, 5, 1, {{0, 2, 4}}, 1));
    // frobenius image must generate the quotient
    CHECK_THROWS_AS(make_local_extension(c6, 5, 1, {{0, 2, 4}}, 2), input_error);
    // wild inertia must be the Sylow p-subgroup of the inertia
    CHECK_THROWS_AS(make_local_extension(c6, 3, 1, {{0, 2, 4}}, 1), input_error);
    CHECK_NOTHROW(make_local_extension(c6, 3, 1, {{0, 2, 4}, {0, 2, 4}}, 1));
    // non-normal levels are rejected
    GroupRef d6 = make_group(FiniteGroup::dihedral(6));
    CHECK_THROWS_AS(make_local_extension(d6, 5, 1, {{0, 3}}, 1), input_error);
    // non-cyclic tame inertia is rejected
    GroupRef v4 = make_group(
        FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
    CHECK_THROWS_AS(make_local_extension(v4, 3, 1, {all_elements(v4)}, 0), input_error);
    // ... but it is fine as wild inertia at p = 2
    CHECK_NOTHROW(make_local_extension(v4, 2, 1, {all_elements(v4), all_elements(v4)}, 0));
}

TEST_CASE("different valuation") {
    GroupRef c3 = make_group(FiniteGroup::cyclic(3));
    // unramified
    LocalExtensionData unram = make_local_extension(c3, 5, 1, {}, 1);
    CHECK(different_valuation(unram) == 0);
    CHECK(is_weakly_ramified(unram));
    // tame C_3: single term 3 - 1
    LocalExtensionData tame = make_local_extension(c3, 5, 1, {{0, 1, 2}}, 0);
    CHECK(different_valuation(tame) == 2);
    // p = 3 with Gamma_0 = Gamma_1 = C_3: 2 + 2
    LocalExtensionData wild = make_local_extension(c3, 3, 1, {{0, 1, 2}, {0, 1, 2}}, 0);
    CHECK(different_valuation(wild) == 4);
}

TEST_CASE("square root of the inverse different and the congruence") {
    GroupRef c2 = make_group(FiniteGroup::cyclic(2));
    GroupRef c3 = make_group(FiniteGroup::cyclic(3));

    // tame C_2: ord(D) = 1 odd, no square root
    LocalExtensionData t2 = make_local_extension(c2, 3, 1, {{0, 1}}, 0);
    CHECK(!sqrt_inv_different(t2).has_value());
    CHECK_THROWS_AS(freeness_congruence(t2), input_error);

    // tame C_3: n = -1
    LocalExtensionData t3 = make_local_extension(c3, 7, 1, {{0, 1, 2}}, 0);
    REQUIRE(sqrt_inv_different(t3).has_value());
    CHECK(*sqrt_inv_different(t3) == -1);
    CHECK(freeness_congruence(t3));  // |Gamma_1| = 1

    // p = 3, Gamma_0 = Gamma_1 = C_3: n = -2 = -(|C|+1)/2 |W| + 1
    LocalExtensionData w3 = make_local_extension(c3, 3, 1, {{0, 1, 2}, {0, 1, 2}}, 0);
    REQUIRE(sqrt_inv_different(w3).has_value());
    CHECK(*sqrt_inv_different(w3) == -2);
    CHECK(freeness_congruence(w3));  // -2 = 1 (mod 3)

    // p = 2, Gamma_0 = Gamma_1 = C_2: ord(D) = 2, n = -1 = 1 (mod 2)
    LocalExtensionData w2 = make_local_extension(c2, 2, 1, {{0, 1}, {0, 1}}, 0);
    CHECK(different_valuation(w2) == 2);
    REQUIRE(sqrt_inv_different(w2).has_value());
    CHECK(*sqrt_inv_different(w2) == -1);
    CHECK(freeness_congruence(w2));
}

TEST_CASE("unramified parts") {
    GroupRef h12 = make_group(FiniteGroup::quaternion(12));
    const CharacterTable& t = char_table(h12);
    // inertia C_3 = <x^2> = {0, 2, 4}, frobenius y = element 6
    LocalExtensionData d = make_local_extension(h12, 7, 1, {{0, 2, 4}}, 6);

    CHECK(unramified_part(trivial_character(h12), d) == trivial_character(h12));

    // the faithful 2-dim character is ramified: unramified part 0
    int faithful = -1;
    for (int i = 0; i < t.size(); ++i)
        if (t.degrees[i] == 2 && t.irr[i].at_element(1) == Cyclotomic(1L)) faithful = i;
    REQUIRE(faithful >= 0);
    ClassFunction zero{h12, std::vector<Cyclotomic>(t.irr[0].values.size(), Cyclotomic(0L))};
    CHECK(unramified_part(t.irr[faithful], d) == zero);

    // psi_2 of the faithful character has unramified part -lambda_0 + lambda_2
    ClassFunction psi2 = adams(t.irr[faithful], 2);
    int triv = t.find(trivial_character(h12));
    int lam2 = -1;
    for (int i = 0; i < t.size(); ++i)
        if (t.degrees[i] == 1 && i != triv && t.irr[i].at_element(6) == Cyclotomic(-1L) &&
            t.irr[i].at_element(2) == Cyclotomic(1L))
            lam2 = i;
    REQUIRE(lam2 >= 0);
    CHECK(unramified_part(psi2, d) == t.irr[lam2] - trivial_character(h12));
}

TEST_CASE("unramified characteristic values") {
    GroupRef h12 = make_group(FiniteGroup::quaternion(12));
    const CharacterTable& t = char_table(h12);
    LocalExtensionData d = make_local_extension(h12, 7, 1, {{0, 2, 4}}, 6);

    // y(trivial) = -1
    CHECK(unramified_characteristic(trivial_character(h12), d) == Cyclotomic(-1L));
    // ramified irreducible: y = 1
    int faithful = -1;
    for (int i = 0; i < t.size(); ++i)
        if (t.degrees[i] == 2 && t.irr[i].at_element(1) == Cyclotomic(1L)) faithful = i;
    CHECK(unramified_characteristic(t.irr[faithful], d) == Cyclotomic(1L));
    // y(psi_2 chi) = -1 for the faithful symplectic character
    CHECK(unramified_characteristic(adams(t.irr[faithful], 2), d) == Cyclotomic(-1L));
}

TEST_CASE("twisted characteristic closed form") {
    // totally ramified odd: identity
    GroupRef c3 = make_group(FiniteGroup::cyclic(3));
    LocalExtensionData tr = make_local_extension(c3, 7, 1, {{0, 1, 2}}, 0);
    CHECK(twisted_y(tr) == central_identity(c3));
    CHECK(closed_form_twisted_y(tr) == central_identity(c3));

    // C_6 with I = C_3: coefficients 1 on ramified, chi(sigma)^-1 on
    // unramified; exact match with the closed form
    GroupRef c6 = make_group(FiniteGroup::cyclic(6));
    const CharacterTable& t = char_table(c6);
    LocalExtensionData d = make_local_extension(c6, 7, 1, {{0, 2, 4}}, 1);
    CentralElement ty = twisted_y(d);
    CentralElement cf = closed_form_twisted_y(d);
    CHECK(ty == cf);
    for (int i = 0; i < t.size(); ++i) {
        bool unram = t.irr[i].at_element(2) == Cyclotomic(1L);
        if (unram)
            CHECK(ty.coeff[i] == t.irr[i].at_element(1).inverse());
        else
            CHECK(ty.coeff[i] == Cyclotomic(1L));
    }

    // unramified datum: coefficient at linear phi is phi(sigma)^-1
    LocalExtensionData un = make_local_extension(c6, 5, 1, {}, 1);
    CentralElement tu = twisted_y(un);
    for (int i = 0; i < t.size(); ++i)
        CHECK(tu.coeff[i] == t.irr[i].at_element(1).inverse());

    // hypotheses violation raises for the closed form but twisted_y works
    GroupRef c4 = make_group(FiniteGroup::cyclic(4));
    LocalExtensionData even_inertia = make_local_extension(c4, 3, 1, {{0, 1, 2, 3}}, 0);
    CHECK_THROWS_AS(closed_form_twisted_y(even_inertia), input_error);
    CHECK_NOTHROW(twisted_y(even_inertia));
}

TEST_CASE("group-algebra preimage denominators divide the inertia order") {
    GroupRef c6 = make_group(FiniteGroup::cyclic(6));
    LocalExtensionData d = make_local_extension(c6, 7, 1, {{0, 2, 4}}, 1);
    for (const auto& coord : to_group_algebra(closed_form_twisted_y(d))) {
        REQUIRE(coord.is_rational());
        mpz_class den = coord.rational_value().get_den();
        CHECK(mpz_class(3) % den == 0);
    }
    GroupRef m21 = make_group(FiniteGroup::metacyclic(7, 3, 2));
    LocalExtensionData d21 = make_local_extension(m21, 2, 1, {{0, 1, 2, 3, 4, 5, 6}}, 7);
    for (const auto& coord : to_group_algebra(closed_form_twisted_y(d21))) {
        REQUIRE(coord.is_rational());
        mpz_class den = coord.rational_value().get_den();
        CHECK(mpz_class(7) % den == 0);
    }
}

TEST_CASE("different valuation bounds for the inertia order") {
    // ord(D) >= |Gamma_0| - 1, equality iff tame
    GroupRef c4 = make_group(FiniteGroup::cyclic(4));
    LocalExtensionData tame = make_local_extension(c4, 3, 1, {{0, 1, 2, 3}}, 0);
    CHECK(different_valuation(tame) == 3);
    LocalExtensionData wild =
        make_local_extension(c4, 2, 1, {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 2}}, 0);
    CHECK(different_valuation(wild) > 3);
}
