#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "gjsum/errors.hpp"
#include "gjsum/group.hpp"

using namespace gjsum;

namespace {

// Independent class count: orbits of the conjugation action, recomputed
// from scratch with a plain set-based sweep.
int brute_force_class_count(const FiniteGroup& g) {
    std::set<int> seen;
    int count = 0;
    for (int a = 0; a < g.order(); ++a) {
        if (seen.count(a)) continue;
        ++count;
        for (int x = 0; x < g.order(); ++x) seen.insert(g.mul(g.mul(x, a), g.inv(x)));
    }
    return count;
}

}  // namespace

TEST_CASE("family constructors produce the right orders and class counts") {
    GroupRef h8 = make_group(FiniteGroup::quaternion(8));
    CHECK(h8->group.order() == 8);
    CHECK(h8->conj.classes.size() == 5);

    GroupRef c3 = make_group(FiniteGroup::cyclic(3));
    CHECK(c3->conj.classes.size() == 3);
    for (const auto& cls : c3->conj.classes) CHECK(cls.size() == 1);

    GroupRef m21 = make_group(FiniteGroup::metacyclic(7, 3, 2));
    CHECK(m21->group.order() == 21);
    CHECK(m21->conj.classes.size() == 5);

    GroupRef d6 = make_group(FiniteGroup::dihedral(6));
    CHECK(d6->conj.classes.size() == 3);
    std::multiset<int> sizes(d6->conj.sizes.begin(), d6->conj.sizes.end());
    CHECK(sizes == std::multiset<int>{1, 2, 3});
}

TEST_CASE("invalid constructions are rejected") {
    CHECK_THROWS_AS(FiniteGroup::cyclic(0), input_error);
    CHECK_THROWS_AS(FiniteGroup::quaternion(10), input_error);
    CHECK_THROWS_AS(FiniteGroup::metacyclic(7, 3, 3), input_error);  // 3^3 = 27 != 1 mod 7
    // non-associative table
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), input_error);
}

TEST_CASE("quaternion presentation relations") {
    // x^(2m) = 1, y^2 = x^m, y x y^-1 = x^-1 with x = 1, y = 2m.
    for (long order : {8L, 12L, 16L, 20L}) {
        FiniteGroup g = FiniteGroup::quaternion(order);
        long two_m = order / 2, m = order / 4;
        int x = 1, y = static_cast<int>(two_m);
        CHECK(g.element_order(x) == two_m);
        CHECK(g.mul(y, y) == g.power(x, m));
        CHECK(g.mul(g.mul(y, x), g.inv(y)) == g.inv(x));
    }
}

TEST_CASE("class equation and brute-force class counts across families") {
    std::vector<FiniteGroup> corpus;
    corpus.push_back(FiniteGroup::cyclic(12));
    corpus.push_back(FiniteGroup::dihedral(12));
    corpus.push_back(FiniteGroup::quaternion(12));
    corpus.push_back(FiniteGroup::metacyclic(5, 4, 2));
    corpus.push_back(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::dihedral(6)));
    for (const auto& g : corpus) {
        GroupRef gr = make_group(g);
        CHECK(static_cast<int>(gr->conj.classes.size()) == brute_force_class_count(g));
        int total = 0;
        for (int s : gr->conj.sizes) total += s;
        CHECK(total == g.order());
    }
}

TEST_CASE("power classes") {
    GroupRef h8 = make_group(FiniteGroup::quaternion(8));
    // i^2 = -1: the class of x (element 1) squares into the class of x^2 = -1.
    int cls_x = h8->conj.class_of[1];
    int cls_m1 = h8->conj.class_of[2];
    CHECK(h8->power_class(cls_x, 2) == cls_m1);
    // power_class depends only on k mod exponent
    GroupRef d10 = make_group(FiniteGroup::dihedral(10));
    long e = d10->exponent;
    for (size_t c = 0; c < d10->conj.classes.size(); ++c)
        for (long k = 1; k <= e; ++k)
            CHECK(d10->power_class(static_cast<int>(c), k) ==
                  d10->power_class(static_cast<int>(c), k + e));
}

TEST_CASE("subgroups, normality, quotients") {
    GroupRef h8 = make_group(FiniteGroup::quaternion(8));
    // <-1> = center, normal of order 2
    Subgroup center = subgroup_generated(h8, {2});
    CHECK(center.elements.size() == 2);
    CHECK(is_normal(center));
    Quotient q = quotient(h8, center);
    CHECK(q.group->group.order() == 4);
    CHECK(q.group->group.is_abelian());
    CHECK(q.group->exponent == 2);  // Klein four-group

    // projection is a homomorphism
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            CHECK(q.proj[h8->group.mul(a, b)] == q.group->group.mul(q.proj[a], q.proj[b]));

    // a reflection subgroup of D_6 is not normal
    GroupRef d6 = make_group(FiniteGroup::dihedral(6));
    Subgroup refl = subgroup_generated(d6, {3});  // the reflection y
    CHECK(refl.elements.size() == 2);
    CHECK(!is_normal(refl));
    CHECK_THROWS_AS(quotient(d6, refl), input_error);
}

TEST_CASE("normal subgroup enumeration") {
    GroupRef h8 = make_group(FiniteGroup::quaternion(8));
    auto normals = normal_subgroups(h8);
    // 1, center, three C_4's, H_8 itself
    CHECK(normals.size() == 6);
    GroupRef d6 = make_group(FiniteGroup::dihedral(6));
    CHECK(normal_subgroups(d6).size() == 3);  // 1, C_3, D_6
    GroupRef c12 = make_group(FiniteGroup::cyclic(12));
    CHECK(normal_subgroups(c12).size() == 6);  // one per divisor
}

TEST_CASE("two-generated subgroup sweep finds the full lattice on small groups") {
    GroupRef d6 = make_group(FiniteGroup::dihedral(6));
    CHECK(two_generated_subgroups(d6).size() == 6);  // 1, C_2 x3, C_3, D_6
    GroupRef m21 = make_group(FiniteGroup::metacyclic(7, 3, 2));
    // 1, C_7, seven C_3's, G
    CHECK(two_generated_subgroups(m21).size() == 10);
}

TEST_CASE("quotient of metacyclic by its Sylow-7 is C_3") {
    GroupRef m21 = make_group(FiniteGroup::metacyclic(7, 3, 2));
    Subgroup c7 = subgroup_generated(m21, {1});
    CHECK(c7.elements.size() == 7);
    CHECK(is_normal(c7));
    Quotient q = quotient(m21, c7);
    CHECK(q.group->group.order() == 3);
    CHECK(q.group->exponent == 3);
}
