#include "gjsum/localext.hpp"

#include <algorithm>
#include <set>

#include "gjsum/errors.hpp"

namespace gjsum {

namespace {

const std::vector<int> kTrivialSubgroup{0};

bool sorted_contains(const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool is_normal_subset(const FiniteGroup& G, const std::vector<int>& h) {
    for (int x = 0; x < G.order(); ++x)
        for (int a : h)
            if (!sorted_contains(h, G.mul(G.mul(x, a), G.inv(x)))) return false;
    return true;
}

bool is_closed_subgroup(const FiniteGroup& G, const std::vector<int>& h) {
    if (h.empty() || h[0] != 0) return false;
    for (int a : h)
        for (int b : h)
            if (!sorted_contains(h, G.mul(a, b))) return false;
    return true;
}

bool is_p_group_order(long n, long p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

// Is the abstract group on the subset cyclic? Test for a single generator.
bool subset_is_cyclic(const FiniteGroup& G, const std::vector<int>& h) {
    for (int g : h) {
        std::set<int> gen;
        int x = 0;
        do {
            gen.insert(x);
            x = G.mul(x, g);
        } while (x != 0);
        if (gen.size() == h.size()) return true;
    }
    return false;
}

}  // namespace

const std::vector<int>& LocalExtensionData::inertia() const {
    return filtration.empty() ? kTrivialSubgroup : filtration[0];
}

long LocalExtensionData::inertia_order() const { return static_cast<long>(inertia().size()); }

long LocalExtensionData::wild_order() const {
    return filtration.size() < 2 ? 1 : static_cast<long>(filtration[1].size());
}

bool LocalExtensionData::in_inertia(int g) const { return sorted_contains(inertia(), g); }

LocalExtensionData make_local_extension(GroupRef gamma, long p, long f_abs,
                                        std::vector<std::vector<int>> filtration, int frobenius) {
    if (p < 2) throw input_error("local extension: residue characteristic must be a prime");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw input_error("local extension: residue characteristic must be a prime");
    if (f_abs < 1) throw input_error("local extension: absolute residue degree must be positive");
    const FiniteGroup& G = gamma->group;
    if (frobenius < 0 || frobenius >= G.order())
        throw input_error("local extension: frobenius index out of range");

    for (auto& level : filtration) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
        for (int e : level)
            if (e < 0 || e >= G.order())
                throw input_error("local extension: filtration element out of range");
    }
    // Drop trailing trivial levels; the chain is trivial from some index on.
    while (!filtration.empty() && filtration.back() == kTrivialSubgroup) filtration.pop_back();

    for (size_t i = 0; i < filtration.size(); ++i) {
        const auto& level = filtration[i];
        if (!is_closed_subgroup(G, level))
            throw input_error("local extension: filtration level " + std::to_string(i) +
                              " is not a subgroup");
        if (!is_normal_subset(G, level))
            throw input_error("local extension: filtration level " + std::to_string(i) +
                              " is not normal in Gamma");
        if (i > 0 && !subset_of(level, filtration[i - 1]))
            throw input_error("local extension: filtration is not descending at level " +
                              std::to_string(i));
    }

    LocalExtensionData d;
    d.gamma = std::move(gamma);
    d.p = p;
    d.f_abs = f_abs;
    d.filtration = std::move(filtration);
    d.frobenius = frobenius;

    // Gamma_1 must be a p-group and the Sylow p-subgroup of Gamma_0 (so the
    // tame quotient has order prime to p), and Gamma_0/Gamma_1 cyclic.
    const long i0 = d.inertia_order();
    const long w = d.wild_order();
    if (!is_p_group_order(w, p))
        throw input_error("local extension: wild inertia is not a p-group");
    if ((i0 / w) % p == 0)
        throw input_error("local extension: Gamma_1 is not the Sylow p-subgroup of Gamma_0");
    if (d.filtration.size() >= 2) {
        Subgroup g0 = subgroup_from_elements(d.gamma, d.inertia());
        std::vector<int> g1_in_g0;
        for (int e : d.filtration[1]) g1_in_g0.push_back(g0.index_of(e));
        Quotient tq = quotient(g0.group, subgroup_from_elements(g0.group, g1_in_g0));
        if (!tq.group->group.is_cyclic())
            throw input_error("local extension: Gamma_0/Gamma_1 is not cyclic");
    } else if (!d.filtration.empty()) {
        if (!subset_is_cyclic(G, d.filtration[0]))
            throw input_error("local extension: tame inertia is not cyclic");
    }

    // Gamma/Gamma_0 must be cyclic, generated by the image of sigma.
    Subgroup inert = subgroup_from_elements(d.gamma, d.inertia());
    Quotient q = quotient(d.gamma, inert);
    if (q.group->group.element_order(q.proj[d.frobenius]) != q.group->group.order())
        throw input_error("local extension: frobenius image does not generate Gamma/Gamma_0");
    return d;
}

long different_valuation(const LocalExtensionData& d) {
    long total = 0;
    for (const auto& level : d.filtration) total += static_cast<long>(level.size()) - 1;
    return total;
}

std::optional<long> sqrt_inv_different(const LocalExtensionData& d) {
    long v = different_valuation(d);
    if (v % 2 != 0) return std::nullopt;
    return -v / 2;
}

bool is_weakly_ramified(const LocalExtensionData& d) { return d.filtration.size() <= 2; }

bool freeness_congruence(const LocalExtensionData& d) {
    auto n = sqrt_inv_different(d);
    if (!n) throw input_error("freeness_congruence: square root of the inverse different does not exist");
    long w = d.wild_order();
    return ((*n - 1) % w + w) % w == 0;
}

bool is_unramified_character(const ClassFunction& chi, const LocalExtensionData& d) {
    if (chi.group != d.gamma) throw input_error("character on a different group");
    for (int g : d.inertia())
        if (chi.at_element(g) != chi.values[0]) return false;
    return true;
}

ClassFunction unramified_part(const ClassFunction& chi, const LocalExtensionData& d) {
    std::vector<long> m = decompose(chi);
    const CharacterTable& t = char_table(d.gamma);
    ClassFunction acc{d.gamma, std::vector<Cyclotomic>(chi.values.size(), Cyclotomic(0L))};
    for (int i = 0; i < t.size(); ++i) {
        if (m[i] == 0) continue;
        if (is_unramified_character(t.irr[i], d)) acc = acc + t.irr[i].scaled(m[i]);
    }
    return acc;
}

namespace {

// y on one irreducible: 1 if ramified, (-1)^phi(1) det_phi(sigma) otherwise.
Cyclotomic y_irreducible(const ClassFunction& phi, long degree, const LocalExtensionData& d) {
    if (!is_unramified_character(phi, d)) return Cyclotomic(1L);
    Cyclotomic det_at_sigma = det_char(phi).at_element(d.frobenius);
    return degree % 2 == 0 ? det_at_sigma : -det_at_sigma;
}

}  // namespace

Cyclotomic unramified_characteristic(const ClassFunction& phi, const LocalExtensionData& d) {
    if (phi.group != d.gamma) throw input_error("character on a different group");
    std::vector<long> m = decompose(phi);
    const CharacterTable& t = char_table(d.gamma);
    Cyclotomic acc(1L);
    for (int i = 0; i < t.size(); ++i) {
        if (m[i] == 0) continue;
        acc = acc * y_irreducible(t.irr[i], t.degrees[i], d).pow(m[i]);
    }
    return acc;
}

CentralElement equivariant_y(const LocalExtensionData& d) {
    const CharacterTable& t = char_table(d.gamma);
    CentralElement r{d.gamma, {}};
    for (int i = 0; i < t.size(); ++i)
        r.coeff.push_back(y_irreducible(t.irr[i], t.degrees[i], d));
    return r;
}

CentralElement twisted_y(const LocalExtensionData& d) {
    return twist_endo(equivariant_y(d), 1, -1, 2);
}

bool closed_form_hypotheses_hold(const LocalExtensionData& d) {
    return d.inertia_order() % 2 == 1 &&
           (d.gamma->group.is_abelian() || d.gamma->group.order() % 2 == 1);
}

CentralElement closed_form_twisted_y(const LocalExtensionData& d) {
    if (!closed_form_hypotheses_hold(d))
        throw input_error(
            "closed_form_twisted_y: requires odd inertia and an abelian or odd-order group");
    const FiniteGroup& G = d.gamma->group;
    // (1 - e_I) + sigma^{-1} e_I in group-algebra coordinates.
    std::vector<Cyclotomic> a(G.order(), Cyclotomic(0L));
    a[0] = Cyclotomic(1L);
    const Cyclotomic w(mpq_class(1, d.inertia_order()));
    int sigma_inv = G.inv(d.frobenius);
    for (int e : d.inertia()) {
        a[e] = a[e] - w;
        int se = G.mul(sigma_inv, e);
        a[se] = a[se] + w;
    }
    return from_group_algebra(d.gamma, a);
}

}  // namespace gjsum
