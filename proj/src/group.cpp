#include "gjsum/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "gjsum/errors.hpp"

namespace gjsum {

void FiniteGroup::validate() const {
    if (n_ <= 0) throw input_error("group: empty table");
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            int v = mul(a, b);
            if (v < 0 || v >= n_)
                throw input_error("group: entry out of range at (" + std::to_string(a) + "," +
                                  std::to_string(b) + ")");
        }
    for (int a = 0; a < n_; ++a)
        if (mul(0, a) != a || mul(a, 0) != a)
            throw input_error("group: element 0 is not an identity at " + std::to_string(a));
    for (int a = 0; a < n_; ++a) {
        if (mul(a, inv_[a]) != 0 || mul(inv_[a], a) != 0)
            throw input_error("group: no two-sided inverse for " + std::to_string(a));
    }
    auto check_assoc = [&](int a, int b, int c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw input_error("group: associativity fails at triple (" + std::to_string(a) + "," +
                              std::to_string(b) + "," + std::to_string(c) + ")");
    };
    if (n_ <= 512) {
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c) check_assoc(a, b, c);
    } else {
        std::mt19937 rng(0xA55A);
        std::uniform_int_distribution<int> d(0, n_ - 1);
        for (int t = 0; t < 200000; ++t) check_assoc(d(rng), d(rng), d(rng));
    }
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::string label) {
    FiniteGroup g;
    g.n_ = static_cast<int>(table.size());
    if (g.n_ == 0) throw input_error("group: empty table");
    g.mul_.resize(static_cast<size_t>(g.n_) * g.n_);
    for (int a = 0; a < g.n_; ++a) {
        if (static_cast<int>(table[a].size()) != g.n_)
            throw input_error("group: table is not square");
        for (int b = 0; b < g.n_; ++b) g.mul_[static_cast<size_t>(a) * g.n_ + b] = table[a][b];
    }
    // Identity must be element 0; locate inverses before validation.
    g.inv_.assign(g.n_, -1);
    for (int a = 0; a < g.n_; ++a)
        for (int b = 0; b < g.n_; ++b)
            if (g.mul(a, b) == 0 && g.mul(b, a) == 0) g.inv_[a] = b;
    for (int a = 0; a < g.n_; ++a)
        if (g.inv_[a] < 0) throw input_error("group: no inverse for element " + std::to_string(a));
    g.label_ = std::move(label);
    g.validate();
    return g;
}

namespace {

FiniteGroup build_from_fn(int n, const std::string& label, auto&& mulfn) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = mulfn(a, b);
    return FiniteGroup::from_table(std::move(t), label);
}

}  // namespace

FiniteGroup FiniteGroup::cyclic(long n) {
    if (n < 1) throw input_error("cyclic: order must be positive");
    return build_from_fn(static_cast<int>(n), "C" + std::to_string(n),
                         [n](int a, int b) { return static_cast<int>((a + b) % n); });
}

// Dihedral group of the given order 2n: elements x^i y^j with index
// i + n*j (x the rotation of order n, y a reflection).
FiniteGroup FiniteGroup::dihedral(long order) {
    if (order < 2 || order % 2 != 0) throw input_error("dihedral: order must be even and >= 2");
    long n = order / 2;
    auto mulfn = [n](int a, int b) {
        long i = a % n, j = a / n, k = b % n, l = b / n;
        // y x^k = x^{-k} y
        long kk = j == 0 ? k : (n - k) % n;
        return static_cast<int>((i + kk) % n + n * ((j + l) % 2));
    };
    return build_from_fn(static_cast<int>(order), "D" + std::to_string(order), mulfn);
}

// Generalised quaternion (dicyclic) group of order 4m:
// x^(2m) = 1, y^2 = x^m, y x y^-1 = x^-1; elements x^i y^j, index i + 2m*j.
FiniteGroup FiniteGroup::quaternion(long order) {
    if (order < 4 || order % 4 != 0) throw input_error("quaternion: order must be 4m, m >= 1");
    long two_m = order / 2, m = order / 4;
    auto mulfn = [two_m, m](int a, int b) {
        long i = a % two_m, j = a / two_m, k = b % two_m, l = b / two_m;
        long kk = j == 0 ? k : (two_m - k) % two_m;
        long i2 = (i + kk) % two_m, j2 = j + l;
        if (j2 == 2) {  // y^2 = x^m
            j2 = 0;
            i2 = (i2 + m) % two_m;
        }
        return static_cast<int>(i2 + two_m * j2);
    };
    return build_from_fn(static_cast<int>(order), "H" + std::to_string(order), mulfn);
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int na = a.order(), nb = b.order();
    auto mulfn = [&a, &b, nb](int u, int v) {
        int ua = u / nb, ub = u % nb, va = v / nb, vb = v % nb;
        return a.mul(ua, va) * nb + b.mul(ub, vb);
    };
    return build_from_fn(na * nb, a.label() + "x" + b.label(), mulfn);
}

// Split metacyclic group C_p x| C_q with y x y^-1 = x^r; requires
// r^q = 1 (mod p). Elements x^i y^j, index i + p*j.
FiniteGroup FiniteGroup::metacyclic(long p, long q, long r) {
    if (p < 1 || q < 1) throw input_error("metacyclic: parameters must be positive");
    r %= p;
    if (r < 0) r += p;
    long rq = 1;
    for (long t = 0; t < q; ++t) rq = (rq * r) % p;
    if (rq != 1 % p) throw input_error("metacyclic: r^q != 1 (mod p)");
    // y^j x = x^(r^j) y^j
    std::vector<long> rpow(q);
    rpow[0] = 1;
    for (long j = 1; j < q; ++j) rpow[j] = (rpow[j - 1] * r) % p;
    auto mulfn = [p, q, &rpow](int a, int b) {
        long i = a % p, j = a / p, k = b % p, l = b / p;
        return static_cast<int>((i + k * rpow[j]) % p + p * ((j + l) % q));
    };
    return build_from_fn(static_cast<int>(p * q),
                         "M" + std::to_string(p) + "_" + std::to_string(q) + "_" + std::to_string(r),
                         mulfn);
}

int FiniteGroup::power(int g, long k) const {
    if (k < 0) return power(inv_[g], -k);
    int acc = 0, base = g;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return acc;
}

int FiniteGroup::element_order(int g) const {
    int x = g, o = 1;
    while (x != 0) {
        x = mul(x, g);
        ++o;
    }
    return o;
}

long FiniteGroup::exponent() const {
    long e = 1;
    for (int g = 0; g < n_; ++g) e = std::lcm(e, static_cast<long>(element_order(g)));
    return e;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

bool FiniteGroup::is_cyclic() const {
    for (int g = 0; g < n_; ++g)
        if (element_order(g) == n_) return true;
    return false;
}

ConjugacyData conjugacy(const FiniteGroup& g) {
    const int n = g.order();
    ConjugacyData cd;
    cd.class_of.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        if (cd.class_of[a] >= 0) continue;
        std::set<int> orbit;
        for (int x = 0; x < n; ++x) orbit.insert(g.mul(g.mul(x, a), g.inv(x)));
        int idx = static_cast<int>(cd.classes.size());
        std::vector<int> cls(orbit.begin(), orbit.end());
        for (int e : cls) cd.class_of[e] = idx;
        cd.reps.push_back(cls.front());
        cd.sizes.push_back(static_cast<int>(cls.size()));
        cd.classes.push_back(std::move(cls));
    }
    return cd;
}

GroupRef make_group(FiniteGroup g) {
    ConjugacyData cd = conjugacy(g);
    long e = g.exponent();
    return std::make_shared<GroupData>(std::move(g), std::move(cd), e);
}

int GroupData::power_class(int cls, long k) const {
    // Well-defined on classes: (x a x^-1)^k = x a^k x^-1.
    return conj.class_of[group.power(conj.reps[cls], k)];
}

int Subgroup::index_of(int g) const {
    if (g < 0 || g >= static_cast<int>(from_parent.size()) || from_parent[g] < 0)
        throw input_error("subgroup: element " + std::to_string(g) + " not in subgroup");
    return from_parent[g];
}

Subgroup subgroup_from_elements(const GroupRef& g, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    const FiniteGroup& G = g->group;
    Subgroup h;
    h.parent = g;
    h.from_parent.assign(G.order(), -1);
    for (size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] < 0 || elements[i] >= G.order())
            throw input_error("subgroup: element index out of range");
        h.from_parent[elements[i]] = static_cast<int>(i);
    }
    if (elements.empty() || elements[0] != 0)
        throw input_error("subgroup: must contain the identity");
    const int m = static_cast<int>(elements.size());
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int v = G.mul(elements[i], elements[j]);
            if (h.from_parent[v] < 0)
                throw input_error("subgroup: element set not closed under multiplication");
            t[i][j] = h.from_parent[v];
        }
    h.elements = std::move(elements);
    h.group = make_group(FiniteGroup::from_table(std::move(t)));
    return h;
}

Subgroup subgroup_generated(const GroupRef& g, const std::vector<int>& gens) {
    const FiniteGroup& G = g->group;
    std::set<int> elems{0};
    std::vector<int> frontier{0};
    for (int x : gens) {
        if (x < 0 || x >= G.order()) throw input_error("subgroup: generator index out of range");
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(elems.begin(), elems.end());
        for (int a : cur)
            for (int x : gens) {
                for (int v : {G.mul(a, x), G.mul(a, G.inv(x))})
                    if (elems.insert(v).second) grew = true;
            }
    }
    return subgroup_from_elements(g, std::vector<int>(elems.begin(), elems.end()));
}

bool is_normal(const Subgroup& h) {
    const FiniteGroup& G = h.parent->group;
    for (int x = 0; x < G.order(); ++x)
        for (int a : h.elements)
            if (!h.contains(G.mul(G.mul(x, a), G.inv(x)))) return false;
    return true;
}

Quotient quotient(const GroupRef& g, const Subgroup& n) {
    if (n.parent != g) throw input_error("quotient: subgroup belongs to a different group");
    if (!is_normal(n)) throw input_error("quotient: subgroup is not normal");
    const FiniteGroup& G = g->group;
    // Cosets keyed by least member; coset of identity gets index 0.
    std::vector<int> coset_min(G.order(), -1);
    std::vector<int> proj(G.order(), -1);
    std::vector<int> coset_reps;
    for (int a = 0; a < G.order(); ++a) {
        if (proj[a] >= 0) continue;
        std::vector<int> coset;
        for (int x : n.elements) coset.push_back(G.mul(a, x));
        int least = *std::min_element(coset.begin(), coset.end());
        if (proj[least] >= 0) {
            for (int e : coset) proj[e] = proj[least];
            continue;
        }
        int idx = static_cast<int>(coset_reps.size());
        coset_reps.push_back(least);
        for (int e : coset) proj[e] = idx;
    }
    // Reorder so that sorting by least member is the element order, with
    // the identity coset (least member 0) first automatically.
    std::vector<int> order_idx(coset_reps.size());
    std::iota(order_idx.begin(), order_idx.end(), 0);
    std::sort(order_idx.begin(), order_idx.end(),
              [&](int a, int b) { return coset_reps[a] < coset_reps[b]; });
    std::vector<int> renum(coset_reps.size());
    for (size_t i = 0; i < order_idx.size(); ++i) renum[order_idx[i]] = static_cast<int>(i);
    for (int& v : proj) v = renum[v];
    std::vector<int> reps_sorted(coset_reps.size());
    for (size_t i = 0; i < coset_reps.size(); ++i) reps_sorted[renum[i]] = coset_reps[i];

    const int q = static_cast<int>(coset_reps.size());
    std::vector<std::vector<int>> t(q, std::vector<int>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) t[i][j] = proj[G.mul(reps_sorted[i], reps_sorted[j])];
    Quotient result;
    result.group = make_group(FiniteGroup::from_table(std::move(t)));
    result.proj = std::move(proj);
    return result;
}

std::vector<Subgroup> normal_subgroups(const GroupRef& g) {
    const FiniteGroup& G = g->group;
    // Atoms: normal closures of single elements (the subgroup generated by
    // the element's conjugacy class); every normal subgroup is a join of
    // atoms it contains.
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> pool;
    auto add = [&](const std::vector<int>& elems) {
        if (seen.insert(elems).second) pool.push_back(elems);
    };
    add({0});
    for (int a = 0; a < G.order(); ++a) {
        const auto& cls = g->conj.classes[g->conj.class_of[a]];
        add(subgroup_generated(g, cls).elements);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        const auto snapshot = pool;
        for (size_t i = 0; i < snapshot.size(); ++i)
            for (size_t j = i + 1; j < snapshot.size(); ++j) {
                std::vector<int> gens = snapshot[i];
                gens.insert(gens.end(), snapshot[j].begin(), snapshot[j].end());
                auto joined = subgroup_generated(g, gens).elements;
                if (seen.insert(joined).second) {
                    pool.push_back(std::move(joined));
                    grew = true;
                }
            }
    }
    std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<Subgroup> result;
    result.reserve(pool.size());
    for (auto& elems : pool) result.push_back(subgroup_from_elements(g, std::move(elems)));
    return result;
}

std::vector<Subgroup> two_generated_subgroups(const GroupRef& g) {
    const FiniteGroup& G = g->group;
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> result;
    auto add = [&](Subgroup h) {
        if (seen.insert(h.elements).second) result.push_back(std::move(h));
    };
    add(subgroup_from_elements(g, {0}));
    for (int a = 0; a < G.order(); ++a)
        for (int b = a; b < G.order(); ++b) add(subgroup_generated(g, {a, b}));
    std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& b) {
        return a.elements.size() != b.elements.size() ? a.elements.size() < b.elements.size()
                                                      : a.elements < b.elements;
    });
    return result;
}

}  // namespace gjsum
