#include "gjsum/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "gjsum/errors.hpp"

namespace gjsum {

void SuiteResult::expect(bool ok, const std::string& witness) {
    ++checks;
    if (!ok) failures.push_back(witness);
}

std::string SuiteResult::summary() const {
    std::ostringstream out;
    out << "suite " << name << ": " << (passed() ? "PASS" : "FAIL") << " (" << checks
        << " checks";
    if (!failures.empty()) out << ", " << failures.size() << " failures";
    out << ")";
    return out.str();
}

namespace {

std::string group_tag(const GroupRef& g) {
    return g->group.label().empty() ? "order" + std::to_string(g->group.order())
                                    : g->group.label();
}

std::string datum_tag(const LocalExtensionData& d) {
    std::ostringstream out;
    out << group_tag(d.gamma) << " p=" << d.p << " filt=[";
    for (size_t i = 0; i < d.filtration.size(); ++i)
        out << (i ? "," : "") << d.filtration[i].size();
    out << "] sigma=" << d.frobenius;
    return out.str();
}

}  // namespace

std::vector<GroupRef> adams_group_corpus(long max_order) {
    std::vector<GroupRef> out;
    for (long n = 1; n <= std::min<long>(12, max_order); ++n)
        out.push_back(make_group(FiniteGroup::cyclic(n)));
    for (long n = 4; n <= std::min<long>(16, max_order); n += 2)
        out.push_back(make_group(FiniteGroup::dihedral(n)));
    if (max_order >= 8) out.push_back(make_group(FiniteGroup::quaternion(8)));
    if (max_order >= 12) out.push_back(make_group(FiniteGroup::quaternion(12)));
    if (max_order >= 21) out.push_back(make_group(FiniteGroup::metacyclic(7, 3, 2)));
    auto product = [&](long a, long b) {
        if (a * b <= max_order)
            out.push_back(
                make_group(FiniteGroup::direct_product(FiniteGroup::cyclic(a), FiniteGroup::cyclic(b))));
    };
    product(2, 2);
    product(2, 4);
    product(2, 6);
    product(2, 8);
    product(3, 3);
    product(4, 4);
    if (max_order >= 8)
        out.push_back(make_group(FiniteGroup::direct_product(
            FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)),
            FiniteGroup::cyclic(2))));
    return out;
}

std::vector<GroupRef> local_group_corpus(long max_order) {
    std::vector<GroupRef> out;
    for (long n = 1; n <= max_order; ++n) out.push_back(make_group(FiniteGroup::cyclic(n)));
    for (long n = 4; n <= max_order; n += 2) out.push_back(make_group(FiniteGroup::dihedral(n)));
    for (long n = 8; n <= max_order; n += 4) out.push_back(make_group(FiniteGroup::quaternion(n)));
    if (max_order >= 21) out.push_back(make_group(FiniteGroup::metacyclic(7, 3, 2)));
    if (max_order >= 20) out.push_back(make_group(FiniteGroup::metacyclic(5, 4, 2)));
    auto product = [&](std::vector<long> ns) {
        long total = 1;
        for (long n : ns) total *= n;
        if (total > max_order) return;
        FiniteGroup g = FiniteGroup::cyclic(ns[0]);
        for (size_t i = 1; i < ns.size(); ++i)
            g = FiniteGroup::direct_product(g, FiniteGroup::cyclic(ns[i]));
        out.push_back(make_group(std::move(g)));
    };
    product({2, 4});
    product({2, 6});
    product({2, 8});
    product({2, 10});
    product({2, 12});
    product({3, 3});
    product({3, 6});
    product({4, 4});
    product({4, 6});
    product({2, 2, 2});
    product({2, 2, 4});
    product({2, 2, 6});
    return out;
}

namespace {

bool is_p_power(long n, long p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

// Quotient of the (abstract) group of a subgroup h0 by a subset that is a
// subgroup of it, given in parent indices; cyclic test.
bool quotient_is_cyclic(const Subgroup& h0, const std::vector<int>& sub_parent) {
    std::vector<int> inner;
    inner.reserve(sub_parent.size());
    for (int e : sub_parent) inner.push_back(h0.index_of(e));
    Quotient q = quotient(h0.group, subgroup_from_elements(h0.group, inner));
    return q.group->group.is_cyclic();
}

}  // namespace

std::vector<LocalExtensionData> local_data_corpus(long max_group_order,
                                                  const std::vector<long>& primes) {
    std::vector<LocalExtensionData> out;
    for (const GroupRef& g : local_group_corpus(max_group_order)) {
        const FiniteGroup& G = g->group;
        std::vector<Subgroup> normals = normal_subgroups(g);
        for (const Subgroup& n0 : normals) {
            Quotient q = quotient(g, n0);
            if (!q.group->group.is_cyclic()) continue;  // Gamma/Gamma_0 cyclic
            // One Frobenius lift per generating image (the least one);
            // distinct lifts of the same image give identical invariants.
            std::vector<int> sigmas;
            std::set<int> seen_images;
            for (int s = 0; s < G.order(); ++s) {
                if (q.group->group.element_order(q.proj[s]) != q.group->group.order()) continue;
                if (seen_images.insert(q.proj[s]).second) sigmas.push_back(s);
            }
            for (long p : primes) {
                // Gamma_1 must be the (normal) Sylow p-subgroup of Gamma_0.
                std::vector<int> p_elements;
                for (int e : n0.elements)
                    if (is_p_power(G.element_order(e), p)) p_elements.push_back(e);
                Subgroup wild = subgroup_generated(g, p_elements);
                long w = static_cast<long>(wild.elements.size());
                if (!is_p_power(w, p)) continue;  // p-elements do not form a group
                long i0 = static_cast<long>(n0.elements.size());
                if ((i0 / w) % p == 0) continue;
                // Tame quotient Gamma_0/Gamma_1 must be cyclic.
                if (w == 1) {
                    if (!n0.group->group.is_cyclic()) continue;
                } else if (!quotient_is_cyclic(n0, wild.elements)) {
                    continue;
                }
                // Higher chain candidates: normal subgroups inside Gamma_1,
                // chains of depth <= 2 below Gamma_1 (with repeats allowed).
                std::vector<const Subgroup*> inner;
                for (const Subgroup& m : normals)
                    if (std::includes(wild.elements.begin(), wild.elements.end(),
                                      m.elements.begin(), m.elements.end()))
                        inner.push_back(&m);
                std::vector<std::vector<std::vector<int>>> tails;
                tails.push_back({});  // weakly ramified: Gamma_2 = 1
                for (const Subgroup* g2 : inner) {
                    if (g2->elements.size() <= 1) continue;
                    tails.push_back({g2->elements});
                    for (const Subgroup* g3 : inner) {
                        if (g3->elements.size() <= 1) continue;
                        if (!std::includes(g2->elements.begin(), g2->elements.end(),
                                           g3->elements.begin(), g3->elements.end()))
                            continue;
                        tails.push_back({g2->elements, g3->elements});
                    }
                }
                for (int sigma : sigmas)
                    for (const auto& tail : tails) {
                        std::vector<std::vector<int>> chain;
                        if (i0 > 1 || !tail.empty()) chain.push_back(n0.elements);
                        if (w > 1 || !tail.empty()) {
                            if (chain.empty()) chain.push_back(n0.elements);
                            chain.push_back(wild.elements);
                        }
                        for (const auto& lvl : tail) chain.push_back(lvl);
                        out.push_back(make_local_extension(g, p, 1, chain, sigma));
                    }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- hilbert

SuiteResult suite_hilbert(long max_order) {
    if (max_order <= 0) max_order = 24;
    SuiteResult r;
    r.name = "hilbert";
    auto corpus = local_data_corpus(max_order, {2, 3, 5, 7});
    r.notes.push_back("local data generated: " + std::to_string(corpus.size()));
    for (const auto& d : corpus) {
        // Independent oracle: count (element, level) incidences.
        long oracle = 0;
        for (const auto& lvl : d.filtration)
            for (int e : lvl)
                if (e != 0) ++oracle;
        long v = different_valuation(d);
        r.expect(v == oracle, "valuation mismatch at " + datum_tag(d));
        auto n = sqrt_inv_different(d);
        r.expect(n.has_value() == (v % 2 == 0), "sqrt existence mismatch at " + datum_tag(d));
        if (n) {
            long w = d.wild_order();
            bool cong = freeness_congruence(d);
            r.expect(cong == (((*n - 1) % w + w) % w == 0),
                     "congruence evaluation mismatch at " + datum_tag(d));
            if (is_weakly_ramified(d))
                r.expect(cong, "weakly ramified datum fails n = 1 (mod |Gamma_1|) at " +
                                   datum_tag(d));
            if (d.is_tame())
                r.expect(d.inertia_order() % 2 == 1,
                         "tame datum with even inertia admits a square root at " + datum_tag(d));
            if (d.p % 2 == 1)
                r.expect(d.inertia_order() % 2 == 1,
                         "odd p datum with even inertia admits a square root at " + datum_tag(d));
        }
    }
    return r;
}

// ----------------------------------------------------------------- anchor

SuiteResult suite_anchor() {
    SuiteResult r;
    r.name = "anchor";
    GroupRef c3 = make_group(FiniteGroup::cyclic(3));
    std::vector<int> all{0, 1, 2};
    LocalExtensionData d = make_local_extension(c3, 3, 1, {all, all}, 0);
    r.expect(different_valuation(d) == 4, "ord(D) != 4");
    auto n = sqrt_inv_different(d);
    r.expect(n.has_value(), "square root does not exist");
    r.expect(n && *n == -2, "n != -2");
    // n = -(|C|+1)/2 * |W| + 1 with |C| = 1, |W| = 3.
    long C = d.inertia_order() / d.wild_order(), W = d.wild_order();
    r.expect((C + 1) % 2 == 0, "(|C|+1)/2 is not an integer");
    r.expect(n && *n == -((C + 1) / 2) * W + 1, "closed formula for n disagrees");
    r.expect(freeness_congruence(d), "congruence -2 = 1 (mod 3) fails");
    r.expect(is_weakly_ramified(d), "datum is not weakly ramified");
    return r;
}

// ------------------------------------------------------------------ adams

namespace {

ClassFunction linear_power(const ClassFunction& lin, long k) {
    ClassFunction r{lin.group, {}};
    for (const auto& v : lin.values) r.values.push_back(v.pow(k));
    return r;
}

}  // namespace

SuiteResult suite_adams(long max_order) {
    if (max_order <= 0) max_order = 21;
    SuiteResult r;
    r.name = "adams";
    auto corpus = adams_group_corpus(max_order);
    for (const GroupRef& g : corpus) {
        const CharacterTable& t = char_table(g);
        const long e = g->exponent;
        std::vector<Subgroup> subgroups = two_generated_subgroups(g);
        std::vector<Subgroup> normals = normal_subgroups(g);
        for (long k = 1; k <= e; ++k) {
            std::vector<ClassFunction> psik;
            for (int i = 0; i < t.size(); ++i) psik.push_back(adams(t.irr[i], k));
            for (int i = 0; i < t.size(); ++i) {
                // psi_k integrality
                r.expect(is_virtual_character(psik[i]),
                         "psi_" + std::to_string(k) + " chi_" + std::to_string(i) +
                             " not virtual on " + group_tag(g));
                // det identity
                r.expect(det_char(psik[i]) == linear_power(det_char(t.irr[i]), k),
                         "det psi_k identity fails for chi_" + std::to_string(i) + ", k=" +
                             std::to_string(k) + " on " + group_tag(g));
            }
            // restriction commutation
            for (const Subgroup& h : subgroups)
                for (int i = 0; i < t.size(); ++i)
                    r.expect(adams(restrict_to(t.irr[i], h), k) == restrict_to(psik[i], h),
                             "restriction commutation fails on " + group_tag(g) + " |H|=" +
                                 std::to_string(h.elements.size()) + " chi_" + std::to_string(i) +
                                 " k=" + std::to_string(k));
            // inflation commutation
            for (const Subgroup& n : normals) {
                Quotient q = quotient(g, n);
                const CharacterTable& tq = char_table(q.group);
                for (int i = 0; i < tq.size(); ++i)
                    r.expect(adams(inflate_from(tq.irr[i], g, q), k) ==
                                 inflate_from(adams(tq.irr[i], k), g, q),
                             "inflation commutation fails on " + group_tag(g) + " |N|=" +
                                 std::to_string(n.elements.size()) + " k=" + std::to_string(k));
            }
            // induction commutation for odd order and k coprime to |G|
            if (g->group.order() % 2 == 1 && std::gcd(k, static_cast<long>(g->group.order())) == 1) {
                for (const Subgroup& h : subgroups) {
                    const CharacterTable& th = char_table(h.group);
                    for (int i = 0; i < th.size(); ++i)
                        r.expect(induce_from(adams(th.irr[i], k), h) ==
                                     adams(induce_from(th.irr[i], h), k),
                                 "odd-order induction commutation fails on " + group_tag(g) +
                                     " |H|=" + std::to_string(h.elements.size()) + " k=" +
                                     std::to_string(k));
                }
            }
        }
    }

    // The H_8 / C_4, k = 2 counterexample, exactly.
    {
        GroupRef h8 = make_group(FiniteGroup::quaternion(8));
        const CharacterTable& t = char_table(h8);
        Subgroup c4 = subgroup_generated(h8, {1});  // <x>, cyclic of order 4
        r.expect(c4.elements.size() == 4, "H8: <x> does not have order 4");
        const CharacterTable& tc4 = char_table(c4.group);
        // a faithful linear character of C_4
        int faithful = -1;
        for (int i = 0; i < tc4.size(); ++i) {
            Cyclotomic v = tc4.irr[i].at_element(c4.group->conj.class_of[1]);
            if (v.order() == 4) { faithful = i; break; }
        }
        r.expect(faithful >= 0, "H8: no faithful linear character of C_4 found");
        const ClassFunction& phi = tc4.irr[faithful];
        ClassFunction lhs = adams(induce_from(phi, c4), 2);
        ClassFunction rhs = induce_from(adams(phi, 2), c4);
        r.expect(!(lhs == rhs), "H8/C4 k=2: induction unexpectedly commutes");
        ClassFunction diff = lhs - rhs;
        // Expected difference: chi_i - trivial, where chi_i is the linear
        // character whose kernel is exactly <x>.
        int chi_i = -1;
        for (int i = 0; i < t.size(); ++i) {
            if (t.degrees[i] != 1) continue;
            bool trivial_on_c4 = true;
            for (int el : c4.elements)
                if (t.irr[i].at_element(el) != Cyclotomic(1L)) trivial_on_c4 = false;
            if (trivial_on_c4 && !(t.irr[i] == trivial_character(h8))) { chi_i = i; break; }
        }
        r.expect(chi_i >= 0, "H8: linear character trivial on <x> not found");
        if (chi_i >= 0)
            r.expect(diff == t.irr[chi_i] - trivial_character(h8),
                     "H8/C4 k=2 counterexample difference is not chi_i - trivial");
        // psi_2 of the symplectic 2-dim character is virtual, not a
        // character, hence not symplectic.
        int two_dim = -1;
        for (int i = 0; i < t.size(); ++i)
            if (t.degrees[i] == 2) two_dim = i;
        std::vector<long> dec = decompose(adams(t.irr[two_dim], 2));
        bool honest = std::all_of(dec.begin(), dec.end(), [](long c) { return c >= 0; });
        r.expect(!honest, "psi_2 of the H8 2-dim character is unexpectedly a character");
    }
    return r;
}

// -------------------------------------------------------------- twisted-y

SuiteResult suite_twisted_y(long max_order) {
    if (max_order <= 0) max_order = 24;
    SuiteResult r;
    r.name = "twisted-y";
    auto corpus = local_data_corpus(max_order, {2, 3, 5, 7});
    // The twisted characteristic depends only on (Gamma, Gamma_0, sigma).
    std::set<std::tuple<const GroupData*, std::vector<int>, int>> seen;
    long tested = 0;
    for (const auto& d : corpus) {
        if (!closed_form_hypotheses_hold(d)) continue;
        auto key = std::make_tuple(d.gamma.get(), d.inertia(), d.frobenius);
        if (!seen.insert(key).second) continue;
        ++tested;
        CentralElement ty = twisted_y(d);
        CentralElement cf = closed_form_twisted_y(d);
        r.expect(ty == cf, "closed form mismatch at " + datum_tag(d));
        if (d.inertia_order() == d.gamma->group.order() && d.gamma->group.order() % 2 == 1)
            r.expect(ty == central_identity(d.gamma),
                     "totally ramified odd datum does not give the identity at " + datum_tag(d));
    }
    r.notes.push_back("distinct (Gamma, Gamma_0, sigma) tested: " + std::to_string(tested));
    return r;
}

// ------------------------------------------------------------------ gauss

SuiteResult suite_gauss() {
    SuiteResult r;
    r.name = "gauss";
    const std::vector<std::pair<long, long>> fields{{3, 1}, {2, 2}, {5, 1}, {7, 1},
                                                    {2, 3}, {3, 2}, {11, 1}, {13, 1},
                                                    {2, 4}, {5, 2}, {7, 2}};
    for (auto [p, f] : fields) {
        FiniteFieldData k = finite_field(p, f);
        const long q = k.q();
        r.expect(gauss_sum(k, 0) == Cyclotomic(-1L),
                 "g(trivial) != -1 over q=" + std::to_string(q));
        for (long c = 1; c < q - 1; ++c) {
            Cyclotomic g = gauss_sum(k, c);
            r.expect(g * g.conj() == Cyclotomic(q),
                     "|g|^2 != q at q=" + std::to_string(q) + " chi_exp=" + std::to_string(c));
        }
        // Multiplicative route against the Jacobi-sum oracle, and the
        // absolute value of the Jacobi sum, for small q.
        if (q <= 25) {
            for (long c = 1; c < q - 1; ++c) {
                long c2 = 2 * c % (q - 1);
                if (c2 == 0) continue;  // chi^2 trivial
                Cyclotomic lhs = gauss_sum(k, c) * gauss_sum(k, c) * gauss_sum(k, c2).inverse();
                Cyclotomic jac = jacobi_sum(k, c, c);
                r.expect(lhs == jac, "Jacobi identity fails at q=" + std::to_string(q) +
                                         " chi_exp=" + std::to_string(c));
                r.expect(jac * jac.conj() == Cyclotomic(q),
                         "|J|^2 != q at q=" + std::to_string(q) + " chi_exp=" + std::to_string(c));
            }
        }
        // Galois equivariance up to the documented additive twist:
        // g(chi^omega) = chi^omega(omega mod p) * galois(g(chi), omega).
        const long n = p * (q - 1);
        for (long c : {1L, (q - 1) / 2}) {
            if (c == 0 || c >= q - 1) continue;
            for (long omega = 2; omega < n; ++omega) {
                if (std::gcd(omega, n) != 1) continue;
                long cw = c * omega % (q - 1);
                long dl = k.dlog()[omega % p];
                Cyclotomic twist = Cyclotomic::root_of_unity(q - 1, cw * dl % (q - 1));
                r.expect(gauss_sum(k, cw) == twist * gauss_sum(k, c).galois(omega),
                         "Galois twist identity fails at q=" + std::to_string(q) + " omega=" +
                             std::to_string(omega));
                if (omega > 12) break;  // a few witnesses per field suffice
            }
        }
    }
    // Quadratic Gauss sum over F_3 squares to -3; oracle: the explicit
    // two-term sum zeta_3 - zeta_3^2.
    FiniteFieldData f3 = finite_field(3, 1);
    Cyclotomic g3 = gauss_sum(f3, 1);
    Cyclotomic oracle = Cyclotomic::root_of_unity(3, 1) - Cyclotomic::root_of_unity(3, 2);
    r.expect(g3 == oracle || g3 == -oracle, "F_3 quadratic Gauss sum is not +-(zeta_3 - zeta_3^2)");
    r.expect(g3 * g3 == Cyclotomic(-3L), "F_3 quadratic Gauss sum squared != -3");
    return r;
}

// ------------------------------------------------------------ j2-rational

namespace {

std::vector<TameAbelianLocalDatum> tame_abelian_corpus() {
    const std::vector<std::pair<long, long>> fields{{3, 1}, {2, 2}, {5, 1}, {7, 1},
                                                    {2, 3}, {3, 2}, {11, 1}, {13, 1},
                                                    {2, 4}, {5, 2}, {7, 2}};
    std::vector<TameAbelianLocalDatum> out;
    for (auto [p, f] : fields) {
        FiniteFieldData k = finite_field(p, f);
        const long q = k.q();
        for (long e = 1; e <= q - 1; ++e) {
            if ((q - 1) % e != 0) continue;
            // Totally ramified C_e.
            {
                GroupRef ce = make_group(FiniteGroup::cyclic(e));
                std::vector<int> all(e);
                std::iota(all.begin(), all.end(), 0);
                std::vector<std::vector<int>> filt;
                if (e > 1) filt.push_back(all);
                out.push_back(
                    make_tame_abelian(make_local_extension(ce, p, 1, filt, 0), k));
            }
            // Mixed C_e x C_2 with unramified part C_2, kept to moderate
            // orders (the pure totally ramified family covers every e).
            if (e <= 12) {
                GroupRef g = make_group(
                    FiniteGroup::direct_product(FiniteGroup::cyclic(e), FiniteGroup::cyclic(2)));
                std::vector<int> inertia;
                for (long i = 0; i < e; ++i) inertia.push_back(static_cast<int>(2 * i));
                std::vector<std::vector<int>> filt;
                if (e > 1) filt.push_back(inertia);
                out.push_back(
                    make_tame_abelian(make_local_extension(g, p, 1, filt, 1), k));
            }
        }
    }
    return out;
}

}  // namespace

SuiteResult suite_j2_rational() {
    SuiteResult r;
    r.name = "j2-rational";
    auto corpus = tame_abelian_corpus();
    r.notes.push_back("tame abelian data: " + std::to_string(corpus.size()));
    for (const auto& d : corpus) {
        CentralElement j2 = equivariant_J2(d);
        r.expect(is_rational_equivariant(j2),
                 "J_2 not rational-equivariant at " + datum_tag(d.base) + " q=" +
                     std::to_string(d.residue.q()));
    }
    // Frozen fixture: Gamma = Gamma_0 = C_2 over p = 3 has coefficients
    // (1, -1/3): tau(triv) = 1 and tau(chi)^-2 = 1/g^2 = -1/3.
    {
        GroupRef c2 = make_group(FiniteGroup::cyclic(2));
        LocalExtensionData base = make_local_extension(c2, 3, 1, {{0, 1}}, 0);
        TameAbelianLocalDatum d = make_tame_abelian(base, finite_field(3, 1));
        CentralElement j2 = equivariant_J2(d);
        const CharacterTable& t = char_table(c2);
        int triv = t.find(trivial_character(c2));
        r.expect(j2.coeff[triv] == Cyclotomic(1L), "C_2/p=3: J_2 coefficient at trivial != 1");
        r.expect(j2.coeff[1 - triv] == Cyclotomic(mpq_class(-1, 3)),
                 "C_2/p=3: J_2 coefficient at quadratic != -1/3");
    }
    return r;
}

// ---------------------------------------------------------- decomposition

namespace {

PlaceRecord tame_place(const GroupRef& g, const std::string& label, std::vector<int> decomp,
                       std::vector<int> inertia_parent, int frobenius_parent, long p) {
    PlaceRecord pl;
    pl.label = label;
    pl.decomp = subgroup_from_elements(g, std::move(decomp));
    std::vector<std::vector<int>> filt;
    if (inertia_parent.size() > 1) {
        std::vector<int> local_inertia;
        for (int e : inertia_parent) local_inertia.push_back(pl.decomp.index_of(e));
        filt.push_back(std::move(local_inertia));
    }
    pl.local = make_local_extension(pl.decomp.group, p, 1, filt,
                                    pl.decomp.index_of(frobenius_parent));
    return pl;
}

}  // namespace

std::vector<GlobalExtensionData> decomposition_fixtures() {
    std::vector<GlobalExtensionData> out;
    // 1: C_6 with a tame place (I = C_3) plus an unramified record.
    {
        GroupRef g = make_group(FiniteGroup::cyclic(6));
        auto p1 = tame_place(g, "v1", {0, 1, 2, 3, 4, 5}, {0, 2, 4}, 1, 7);
        auto p2 = tame_place(g, "v2", {0, 1, 2, 3, 4, 5}, {0}, 1, 5);
        out.push_back(make_global(g, {p1, p2}));
    }
    // 2: C_4 with decomposition subgroup C_2.
    {
        GroupRef g = make_group(FiniteGroup::cyclic(4));
        auto p1 = tame_place(g, "v1", {0, 2}, {0, 2}, 0, 3);
        out.push_back(make_global(g, {p1}));
    }
    // 3: S_3 (= D_6) with H = C_3 totally ramified.
    {
        GroupRef g = make_group(FiniteGroup::dihedral(6));
        auto p1 = tame_place(g, "v1", {0, 1, 2}, {0, 1, 2}, 0, 7);
        out.push_back(make_global(g, {p1}));
    }
    // 4: H_8 with H = <x> = C_4 totally ramified.
    {
        GroupRef g = make_group(FiniteGroup::quaternion(8));
        auto p1 = tame_place(g, "v1", {0, 1, 2, 3}, {0, 1, 2, 3}, 0, 5);
        out.push_back(make_global(g, {p1}));
    }
    // 5: H_12 with H = G, I = C_3, sigma = y (the order-4 generator).
    {
        GroupRef g = make_group(FiniteGroup::quaternion(12));
        std::vector<int> all(12);
        std::iota(all.begin(), all.end(), 0);
        auto p1 = tame_place(g, "v1", all, {0, 2, 4}, 6, 7);
        out.push_back(make_global(g, {p1}));
    }
    // 6: D_10 with H = C_5 totally ramified.
    {
        GroupRef g = make_group(FiniteGroup::dihedral(10));
        auto p1 = tame_place(g, "v1", {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}, 0, 11);
        out.push_back(make_global(g, {p1}));
    }
    // 7: C_12 with two distinct places.
    {
        GroupRef g = make_group(FiniteGroup::cyclic(12));
        std::vector<int> all(12);
        std::iota(all.begin(), all.end(), 0);
        auto p1 = tame_place(g, "v1", all, {0, 4, 8}, 1, 7);
        auto p2 = tame_place(g, "v2", {0, 3, 6, 9}, {0, 6}, 3, 5);
        out.push_back(make_global(g, {p1, p2}));
    }
    // 8: metacyclic order 21 with H = C_7 totally ramified.
    {
        GroupRef g = make_group(FiniteGroup::metacyclic(7, 3, 2));
        auto p1 = tame_place(g, "v1", {0, 1, 2, 3, 4, 5, 6}, {0, 1, 2, 3, 4, 5, 6}, 0, 2);
        out.push_back(make_global(g, {p1}));
    }
    // 9: C_2 x C_2 with one factor ramified.
    {
        GroupRef g = make_group(
            FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
        auto p1 = tame_place(g, "v1", {0, 2}, {0, 2}, 0, 7);
        out.push_back(make_global(g, {p1}));
    }
    // 10: H_16 with H = <x> = C_8 totally ramified.
    {
        GroupRef g = make_group(FiniteGroup::quaternion(16));
        auto p1 = tame_place(g, "v1", {0, 1, 2, 3, 4, 5, 6, 7}, {0, 1, 2, 3, 4, 5, 6, 7}, 0, 3);
        out.push_back(make_global(g, {p1}));
    }
    return out;
}

SuiteResult suite_decomposition() {
    SuiteResult r;
    r.name = "decomposition";
    auto fixtures = decomposition_fixtures();
    for (size_t i = 0; i < fixtures.size(); ++i) {
        const auto& data = fixtures[i];
        // Route 1: product over places of induced local twists.
        CentralElement by_induction = central_identity(data.group);
        for (const auto& pl : data.places)
            by_induction = by_induction * central_induce(twisted_y(pl.local), pl.decomp);
        // Route 2: direct twist of the global y family.
        const CharacterTable& t = char_table(data.group);
        CentralElement family{data.group, {}};
        for (int j = 0; j < t.size(); ++j) family.coeff.push_back(global_y(data, t.irr[j]));
        CentralElement direct = twist_endo(family, 1, -1, 2);
        r.expect(by_induction == direct,
                 "decomposition identity fails on fixture " + std::to_string(i + 1));
        // And the library entry point must agree with both.
        r.expect(global_twisted_y(data) == by_induction,
                 "global_twisted_y disagrees with the induction route on fixture " +
                     std::to_string(i + 1));
    }
    return r;
}

// ------------------------------------------------------------- symplectic

SuiteResult suite_symplectic(unsigned sign_cap) {
    SuiteResult r;
    r.name = "symplectic";
    // Frobenius-Schur classification against the element-wise brute force.
    for (const GroupRef& g : adams_group_corpus(21)) {
        const CharacterTable& t = char_table(g);
        const FiniteGroup& G = g->group;
        for (int i = 0; i < t.size(); ++i) {
            Cyclotomic acc;
            for (int x = 0; x < G.order(); ++x) acc = acc + t.irr[i].at_element(G.mul(x, x));
            acc = acc * Cyclotomic(mpq_class(1, G.order()));
            int oracle = 0;
            if (acc == Cyclotomic(1L)) oracle = 1;
            else if (acc == Cyclotomic(-1L)) oracle = -1;
            else r.expect(acc == Cyclotomic(0L), "FS oracle not in {-1,0,1} on " + group_tag(g));
            r.expect(frobenius_schur(t.irr[i]) == oracle,
                     "FS mismatch at chi_" + std::to_string(i) + " on " + group_tag(g));
        }
    }

    // H_12 with a single tame place: the faithful symplectic character has
    // y(F, psi_2 chi) = -1 and the symplectic J element has order exactly 2.
    {
        GroupRef g = make_group(FiniteGroup::quaternion(12));
        std::vector<int> all(12);
        std::iota(all.begin(), all.end(), 0);
        Subgroup whole = subgroup_from_elements(g, all);
        PlaceRecord pl;
        pl.label = "v1";
        pl.decomp = whole;
        pl.local = make_local_extension(whole.group, 7, 1, {{0, 2, 4}}, 6);
        GlobalExtensionData data = make_global(g, {pl});

        const CharacterTable& t = char_table(g);
        std::vector<int> symp = symplectic_chars(g);
        r.expect(symp.size() == 1, "H_12 does not have exactly one symplectic character");
        if (symp.size() == 1) {
            int s = symp[0];
            r.expect(t.degrees[s] == 2, "H_12 symplectic character is not 2-dimensional");
            // y(F, psi_2(chi)) = -1 at the local datum (restriction is chi itself).
            Cyclotomic y_psi2 =
                unramified_characteristic(adams(restrict_to(t.irr[s], whole), 2), pl.local);
            r.expect(y_psi2 == Cyclotomic(-1L), "H_12: y(F, psi_2 chi) != -1");
            r.expect(unramified_characteristic(restrict_to(t.irr[s], whole), pl.local) ==
                         Cyclotomic(1L),
                     "H_12: faithful chi is not ramified");
            r.expect(symplectic_sign(data, t.irr[s]) == SymplecticSign::Minus,
                     "H_12: symplectic sign is not -1");
            CentralElement jj = equivariant_symplectic_J(data);
            long minus_count = 0;
            for (size_t i = 0; i < jj.coeff.size(); ++i) {
                if (jj.coeff[i] == Cyclotomic(-1L)) {
                    ++minus_count;
                    r.expect(static_cast<int>(i) == s,
                             "H_12: -1 coefficient away from the symplectic character");
                } else {
                    r.expect(jj.coeff[i] == Cyclotomic(1L), "H_12: coefficient not +-1");
                }
            }
            r.expect(minus_count == 1, "H_12: expected exactly one -1 coefficient");
            r.expect(!(jj == central_identity(g)), "H_12: symplectic J is trivial");
            r.expect(jj * jj == central_identity(g), "H_12: symplectic J does not square to 1");
            r.expect(is_rational_equivariant(jj), "H_12: symplectic J not rational-equivariant");
            PositivityResult pos = is_symplectic_positive(jj, sign_cap);
            r.expect(!pos.ok, "H_12: symplectic J unexpectedly positive at the symplectic chi");
        }
    }

    // Odd-order data give the identity element.
    {
        std::vector<GlobalExtensionData> odd;
        {
            GroupRef g = make_group(FiniteGroup::cyclic(3));
            odd.push_back(make_global(g, {tame_place(g, "v1", {0, 1, 2}, {0, 1, 2}, 0, 7)}));
        }
        {
            GroupRef g = make_group(FiniteGroup::cyclic(7));
            odd.push_back(make_global(
                g, {tame_place(g, "v1", {0, 1, 2, 3, 4, 5, 6}, {0, 1, 2, 3, 4, 5, 6}, 0, 2)}));
        }
        {
            GroupRef g = make_group(FiniteGroup::metacyclic(7, 3, 2));
            odd.push_back(make_global(
                g, {tame_place(g, "v1", {0, 1, 2, 3, 4, 5, 6}, {0, 1, 2, 3, 4, 5, 6}, 0, 2)}));
        }
        for (const auto& data : odd) {
            r.expect(symplectic_chars(data.group).empty(),
                     "odd-order group has a symplectic character");
            r.expect(equivariant_symplectic_J(data) == central_identity(data.group),
                     "odd-order symplectic J is not the identity");
        }
    }

    // H_8 with no declared ramification: identity element.
    {
        GroupRef g = make_group(FiniteGroup::quaternion(8));
        GlobalExtensionData data = make_global(g, {});
        r.expect(equivariant_symplectic_J(data) == central_identity(g),
                 "unramified H_8 symplectic J is not the identity");
    }

    // A wild 2-adic place poisons the sign to Unknown.
    {
        GroupRef g = make_group(FiniteGroup::quaternion(8));
        std::vector<int> all(8);
        std::iota(all.begin(), all.end(), 0);
        Subgroup whole = subgroup_from_elements(g, all);
        PlaceRecord pl;
        pl.label = "w";
        pl.decomp = whole;
        pl.local = make_local_extension(whole.group, 2, 1, {all, all}, 0);
        GlobalExtensionData data = make_global(g, {pl});
        const CharacterTable& t = char_table(g);
        int symp = symplectic_chars(g).at(0);
        r.expect(symplectic_sign(data, t.irr[symp]) == SymplecticSign::Unknown,
                 "H_8 wild place: sign is not Unknown");
        bool threw = false;
        try {
            equivariant_symplectic_J(data);
        } catch (const input_error&) {
            threw = true;
        }
        r.expect(threw, "H_8 wild place: equivariant J did not raise");
    }
    return r;
}

// ------------------------------------------------------------------ entry

std::vector<std::string> suite_names() {
    return {"hilbert", "anchor", "adams", "twisted-y", "gauss", "j2-rational",
            "decomposition", "symplectic"};
}

SuiteResult run_suite(const std::string& name, long max_order, unsigned sign_cap) {
    if (name == "hilbert") return suite_hilbert(max_order);
    if (name == "anchor") return suite_anchor();
    if (name == "adams") return suite_adams(max_order);
    if (name == "twisted-y") return suite_twisted_y(max_order);
    if (name == "gauss") return suite_gauss();
    if (name == "j2-rational") return suite_j2_rational();
    if (name == "decomposition") return suite_decomposition();
    if (name == "symplectic") return suite_symplectic(sign_cap);
    std::string all;
    for (const auto& s : suite_names()) all += (all.empty() ? "" : ", ") + s;
    throw input_error("unknown suite '" + name + "'; available: " + all);
}

}  // namespace gjsum
