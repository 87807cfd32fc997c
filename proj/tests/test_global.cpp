#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "gjsum/errors.hpp"
#include "gjsum/global.hpp"

using namespace gjsum;

namespace {

Subgroup whole(const GroupRef& g) {
    std::vector<int> all(g->group.order());
    std::iota(all.begin(), all.end(), 0);
    return subgroup_from_elements(g, all);
}

PlaceRecord place_on(const GroupRef& g, const std::string& label, std::vector<int> decomp,
                     std::vector<int> inertia_parent, int frobenius_parent, long p) {
    PlaceRecord pl;
    pl.label = label;
    pl.decomp = subgroup_from_elements(g, std::move(decomp));
    std::vector<std::vector<int>> filt;
    if (inertia_parent.size() > 1) {
        std::vector<int> local;
        for (int e : inertia_parent) local.push_back(pl.decomp.index_of(e));
        filt.push_back(std::move(local));
    }
    pl.local =
        make_local_extension(pl.decomp.group, p, 1, filt, pl.decomp.index_of(frobenius_parent));
    return pl;
}

}  // namespace

TEST_CASE("global data validation") {
    GroupRef c6 = make_group(FiniteGroup::cyclic(6));
    auto p1 = place_on(c6, "v", {0, 1, 2, 3, 4, 5}, {0, 2, 4}, 1, 7);
    auto p2 = place_on(c6, "v", {0, 1, 2, 3, 4, 5}, {0, 3}, 1, 5);
    CHECK_THROWS_AS(make_global(c6, {p1, p2}), input_error);  // duplicate labels
    p2.label = "w";
    CHECK_NOTHROW(make_global(c6, {p1, p2}));
}

TEST_CASE("global y: empty product, single place, and squares") {
    GroupRef c6 = make_group(FiniteGroup::cyclic(6));
    const CharacterTable& t = char_table(c6);

    GlobalExtensionData none = make_global(c6, {});
    for (int i = 0; i < t.size(); ++i)
        CHECK(global_y(none, t.irr[i]) == Cyclotomic(1L));

    auto pl = place_on(c6, "v", {0, 1, 2, 3, 4, 5}, {0, 2, 4}, 1, 7);
    GlobalExtensionData one = make_global(c6, {pl});
    GlobalExtensionData two = make_global(c6, {pl, [&] {
                                                   auto q = pl;
                                                   q.label = "w";
                                                   return q;
                                               }()});
    for (int i = 0; i < t.size(); ++i) {
        Cyclotomic local = unramified_characteristic(restrict_to(t.irr[i], pl.decomp), pl.local);
        CHECK(global_y(one, t.irr[i]) == local);
        CHECK(global_y(two, t.irr[i]) == local * local);
    }
}

TEST_CASE("global twisted y: route agreement") {
    // C_6 with one tame place (I = C_3) and one unramified record
    GroupRef c6 = make_group(FiniteGroup::cyclic(6));
    auto p1 = place_on(c6, "v1", {0, 1, 2, 3, 4, 5}, {0, 2, 4}, 1, 7);
    auto p2 = place_on(c6, "v2", {0, 1, 2, 3, 4, 5}, {0}, 1, 5);
    GlobalExtensionData data = make_global(c6, {p1, p2});
    CentralElement both = global_twisted_y(data);

    CentralElement by_hand = central_identity(c6);
    for (const auto& pl : data.places)
        by_hand = by_hand * central_induce(twisted_y(pl.local), pl.decomp);
    CHECK(both == by_hand);

    // no places: the identity
    CHECK(global_twisted_y(make_global(c6, {})) == central_identity(c6));
}

TEST_CASE("symplectic signs on H_12") {
    GroupRef h12 = make_group(FiniteGroup::quaternion(12));
    const CharacterTable& t = char_table(h12);
    auto pl = place_on(h12, "v", [&] {
        std::vector<int> all(12);
        std::iota(all.begin(), all.end(), 0);
        return all;
    }(), {0, 2, 4}, 6, 7);
    GlobalExtensionData data = make_global(h12, {pl});

    std::vector<int> symp = symplectic_chars(h12);
    REQUIRE(symp.size() == 1);
    CHECK(symplectic_sign(data, t.irr[symp[0]]) == SymplecticSign::Minus);
    for (int i = 0; i < t.size(); ++i)
        if (i != symp[0]) CHECK(symplectic_sign(data, t.irr[i]) == SymplecticSign::Plus);

    CentralElement j = equivariant_symplectic_J(data);
    CHECK(j * j == central_identity(h12));
    CHECK(!(j == central_identity(h12)));
    CHECK(is_rational_equivariant(j));

    // non-irreducible input rejected
    CHECK_THROWS_AS(symplectic_sign(data, regular_character(h12)), input_error);
}

TEST_CASE("odd order groups have trivial symplectic J") {
    GroupRef c3 = make_group(FiniteGroup::cyclic(3));
    auto pl = place_on(c3, "v", {0, 1, 2}, {0, 1, 2}, 0, 7);
    GlobalExtensionData data = make_global(c3, {pl});
    const CharacterTable& t = char_table(c3);
    for (int i = 0; i < t.size(); ++i)
        CHECK(symplectic_sign(data, t.irr[i]) == SymplecticSign::Plus);
    CHECK(equivariant_symplectic_J(data) == central_identity(c3));
}

TEST_CASE("wild and even-inertia places poison the sign") {
    GroupRef h8 = make_group(FiniteGroup::quaternion(8));
    const CharacterTable& t = char_table(h8);
    int symp = symplectic_chars(h8).at(0);

    // wild 2-adic place
    {
        Subgroup w = whole(h8);
        PlaceRecord pl;
        pl.label = "wild";
        pl.decomp = w;
        std::vector<int> all(8);
        std::iota(all.begin(), all.end(), 0);
        pl.local = make_local_extension(w.group, 2, 1, {all, all}, 0);
        GlobalExtensionData data = make_global(h8, {pl});
        CHECK(symplectic_sign(data, t.irr[symp]) == SymplecticSign::Unknown);
        CHECK_THROWS_AS(equivariant_symplectic_J(data), input_error);
    }
    // tame but even inertia order
    {
        auto pl = place_on(h8, "even", {0, 1, 2, 3}, {0, 1, 2, 3}, 0, 5);
        GlobalExtensionData data = make_global(h8, {pl});
        CHECK(symplectic_sign(data, t.irr[symp]) == SymplecticSign::Unknown);
    }
}

TEST_CASE("global J_2 assembly") {
    // single place with H = G = C_2 over p = 3: coefficients (1, -1/3)
    GroupRef c2 = make_group(FiniteGroup::cyclic(2));
    PlaceRecord pl;
    pl.label = "v";
    pl.decomp = whole(c2);
    pl.local = make_local_extension(pl.decomp.group, 3, 1, {{0, 1}}, 0);
    pl.tame_abelian = make_tame_abelian(pl.local, finite_field(3, 1));
    GlobalExtensionData data = make_global(c2, {pl});
    CentralElement j2 = assemble_global_J2(data);
    const CharacterTable& t = char_table(c2);
    for (int i = 0; i < t.size(); ++i) {
        if (t.irr[i] == trivial_character(c2))
            CHECK(j2.coeff[i] == Cyclotomic(1L));
        else
            CHECK(j2.coeff[i] == Cyclotomic(mpq_class(-1, 3)));
    }

    // no places: identity
    CHECK(assemble_global_J2(make_global(c2, {})) == central_identity(c2));

    // S_3 with one place H = C_3 tame over p = 7: rational-equivariant
    GroupRef s3 = make_group(FiniteGroup::dihedral(6));
    PlaceRecord ps;
    ps.label = "v";
    ps.decomp = subgroup_from_elements(s3, {0, 1, 2});
    ps.local = make_local_extension(ps.decomp.group, 7, 1, {{0, 1, 2}}, 0);
    ps.tame_abelian = make_tame_abelian(ps.local, finite_field(7, 1));
    GlobalExtensionData sdata = make_global(s3, {ps});
    CHECK(is_rational_equivariant(assemble_global_J2(sdata)));

    // a place without a tame abelian realization raises
    PlaceRecord bare = place_on(s3, "w", {0, 1, 2}, {0, 1, 2}, 0, 7);
    CHECK_THROWS_AS(assemble_global_J2(make_global(s3, {bare})), input_error);
}
