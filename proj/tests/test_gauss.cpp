#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "gjsum/errors.hpp"
#include "gjsum/gauss.hpp"

using namespace gjsum;

namespace {

Cyclotomic zeta(long n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

TameAbelianLocalDatum totally_ramified_datum(long e, long p, long f) {
    GroupRef g = make_group(FiniteGroup::cyclic(e));
    std::vector<int> all(e);
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::vector<int>> filt;
    if (e > 1) filt.push_back(all);
    return make_tame_abelian(make_local_extension(g, p, 1, filt, 0), finite_field(p, f));
}

}  // namespace

TEST_CASE("finite field construction is deterministic") {
    FiniteFieldData f3 = finite_field(3, 1);
    CHECK(f3.q() == 3);
    CHECK(f3.generator == std::vector<long>{2});  // 2 generates F_3^x

    FiniteFieldData f4 = finite_field(2, 2);
    CHECK(f4.q() == 4);
    CHECK(f4.modulus == std::vector<long>{1, 1, 1});  // x^2 + x + 1

    FiniteFieldData f7 = finite_field(7, 1);
    CHECK(f7.generator == std::vector<long>{3});  // least primitive root mod 7

    CHECK_THROWS_AS(finite_field(6, 1), input_error);
}

TEST_CASE("gauss sum basics") {
    FiniteFieldData f3 = finite_field(3, 1);
    // trivial character sums the additive character over the units: -1
    CHECK(gauss_sum(f3, 0) == Cyclotomic(-1L));
    // quadratic Gauss sum over F_3 squares to -3
    Cyclotomic g = gauss_sum(f3, 1);
    CHECK(g * g == Cyclotomic(-3L));
    // oracle: the two-term sum zeta_3 - zeta_3^2 up to sign
    Cyclotomic oracle = zeta(3) - zeta(3, 2);
    CHECK((g == oracle || g == -oracle));
    CHECK_THROWS_AS(gauss_sum(f3, 2), input_error);
}

TEST_CASE("absolute value |g|^2 = q over several fields") {
    for (auto [p, f] : std::vector<std::pair<long, long>>{{2, 2}, {3, 1}, {5, 1}, {3, 2}, {2, 3}}) {
        FiniteFieldData k = finite_field(p, f);
        for (long c = 1; c < k.q() - 1; ++c) {
            Cyclotomic g = gauss_sum(k, c);
            CHECK(g * g.conj() == Cyclotomic(k.q()));
        }
    }
}

TEST_CASE("jacobi sum identity") {
    for (auto [p, f] : std::vector<std::pair<long, long>>{{5, 1}, {7, 1}, {3, 2}}) {
        FiniteFieldData k = finite_field(p, f);
        const long q = k.q();
        for (long c = 1; c < q - 1; ++c) {
            long c2 = 2 * c % (q - 1);
            if (c2 == 0) continue;
            CHECK(gauss_sum(k, c) * gauss_sum(k, c) ==
                  jacobi_sum(k, c, c) * gauss_sum(k, c2));
        }
    }
}

TEST_CASE("tame abelian datum validation") {
    // e = 4 does not divide 7 - 1 = 6
    GroupRef c4 = make_group(FiniteGroup::cyclic(4));
    std::vector<std::vector<int>> filt{{0, 1, 2, 3}};
    LocalExtensionData base = make_local_extension(c4, 7, 1, filt, 0);
    CHECK_THROWS_AS(make_tame_abelian(base, finite_field(7, 1)), input_error);
    // residue characteristic mismatch
    LocalExtensionData base5 = make_local_extension(c4, 5, 1, filt, 0);
    CHECK_THROWS_AS(make_tame_abelian(base5, finite_field(3, 1)), input_error);
    // nonabelian group rejected
    GroupRef d6 = make_group(FiniteGroup::dihedral(6));
    LocalExtensionData based6 = make_local_extension(d6, 7, 1, {{0, 1, 2}}, 3);
    CHECK_THROWS_AS(make_tame_abelian(based6, finite_field(7, 1)), input_error);
}

TEST_CASE("tame tau") {
    // Gamma = Gamma_0 = C_2 over p = 3: tau(quadratic)^2 = -3
    TameAbelianLocalDatum d = totally_ramified_datum(2, 3, 1);
    const CharacterTable& t = char_table(d.base.gamma);
    int quad = -1, triv = -1;
    for (int i = 0; i < t.size(); ++i) {
        if (t.irr[i].at_element(1) == Cyclotomic(-1L)) quad = i;
        if (t.irr[i] == trivial_character(d.base.gamma)) triv = i;
    }
    REQUIRE(quad >= 0);
    Cyclotomic tq = tame_tau(d, t.irr[quad]);
    CHECK(tq * tq == Cyclotomic(-3L));
    // unramified characters get tau = 1 by convention
    CHECK(tame_tau(d, t.irr[triv]) == Cyclotomic(1L));

    // Gamma = Gamma_0 = C_3 over p = 7: conj(tau) tau = 7 for both faithful
    TameAbelianLocalDatum d3 = totally_ramified_datum(3, 7, 1);
    const CharacterTable& t3 = char_table(d3.base.gamma);
    for (int i = 0; i < t3.size(); ++i) {
        if (t3.irr[i] == trivial_character(d3.base.gamma)) continue;
        Cyclotomic tau = tame_tau(d3, t3.irr[i]);
        CHECK(tau.conj() * tau == Cyclotomic(7L));
    }

    // non-linear input rejected
    GroupRef h8 = make_group(FiniteGroup::quaternion(8));
    const CharacterTable& t8 = char_table(h8);
    for (int i = 0; i < t8.size(); ++i)
        if (t8.degrees[i] == 2) CHECK_THROWS_AS(tame_tau(d, t8.irr[i]), input_error);
}

TEST_CASE("modified tau and the unramified factor") {
    // mixed datum C_3 x C_2, inertia C_3, over p = 7
    GroupRef g = make_group(
        FiniteGroup::direct_product(FiniteGroup::cyclic(3), FiniteGroup::cyclic(2)));
    std::vector<int> inertia{0, 2, 4};
    LocalExtensionData base = make_local_extension(g, 7, 1, {inertia}, 1);
    TameAbelianLocalDatum d = make_tame_abelian(base, finite_field(7, 1));
    const CharacterTable& t = char_table(g);
    CentralElement tau = equivariant_tau(d);
    CentralElement taup = modified_tau(d);
    for (int i = 0; i < t.size(); ++i) {
        if (is_unramified_character(t.irr[i], base)) {
            // tau' = -det_chi(sigma)^-1 tau for unramified chi
            Cyclotomic det_sigma = det_char(t.irr[i]).at_element(1);
            CHECK(taup.coeff[i] == -det_sigma.inverse() * tau.coeff[i]);
        } else {
            CHECK(taup.coeff[i] == tau.coeff[i]);
        }
    }
}

TEST_CASE("local J_2 rationality and the frozen C_2 fixture") {
    TameAbelianLocalDatum d = totally_ramified_datum(2, 3, 1);
    CentralElement j2 = equivariant_J2(d);
    const CharacterTable& t = char_table(d.base.gamma);
    for (int i = 0; i < t.size(); ++i) {
        if (t.irr[i] == trivial_character(d.base.gamma))
            CHECK(j2.coeff[i] == Cyclotomic(1L));
        else
            CHECK(j2.coeff[i] == Cyclotomic(mpq_class(-1, 3)));
    }
    CHECK(is_rational_equivariant(j2));

    // a faithful-character datum over a quadratic extension field
    TameAbelianLocalDatum d8 = totally_ramified_datum(8, 3, 2);
    CHECK(is_rational_equivariant(equivariant_J2(d8)));
}
