#include "gjsum/chartab.hpp"

#include <algorithm>
#include <numeric>

#include "gjsum/errors.hpp"

namespace gjsum {

long ClassFunction::degree() const {
    if (!values[0].is_integer()) throw input_error("class function has non-integer degree");
    const mpq_class& v = values[0].rational_value();
    return static_cast<long>(v.get_num().get_si());
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
    if (a.group != b.group) throw input_error("class functions on different groups");
    ClassFunction r{a.group, {}};
    r.values.reserve(a.values.size());
    for (size_t i = 0; i < a.values.size(); ++i) r.values.push_back(a.values[i] + b.values[i]);
    return r;
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
    if (a.group != b.group) throw input_error("class functions on different groups");
    ClassFunction r{a.group, {}};
    r.values.reserve(a.values.size());
    for (size_t i = 0; i < a.values.size(); ++i) r.values.push_back(a.values[i] - b.values[i]);
    return r;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
    if (a.group != b.group) throw input_error("class functions on different groups");
    ClassFunction r{a.group, {}};
    r.values.reserve(a.values.size());
    for (size_t i = 0; i < a.values.size(); ++i) r.values.push_back(a.values[i] * b.values[i]);
    return r;
}

ClassFunction ClassFunction::scaled(long c) const {
    ClassFunction r{group, {}};
    r.values.reserve(values.size());
    for (const auto& v : values) r.values.push_back(Cyclotomic(c) * v);
    return r;
}

bool ClassFunction::operator==(const ClassFunction& o) const {
    return group == o.group && values == o.values;
}

ClassFunction trivial_character(const GroupRef& g) {
    return ClassFunction{g, std::vector<Cyclotomic>(g->conj.classes.size(), Cyclotomic(1L))};
}

ClassFunction regular_character(const GroupRef& g) {
    std::vector<Cyclotomic> v(g->conj.classes.size(), Cyclotomic(0L));
    v[0] = Cyclotomic(static_cast<long>(g->group.order()));
    return ClassFunction{g, std::move(v)};
}

Cyclotomic inner_product(const ClassFunction& chi, const ClassFunction& phi) {
    if (chi.group != phi.group) throw input_error("inner_product: group mismatch");
    const auto& cd = chi.group->conj;
    // Accumulate raw products at the common order and canonicalize once.
    long L = 1;
    for (size_t c = 0; c < cd.classes.size(); ++c)
        L = std::lcm(L, std::lcm(chi.values[c].order(), phi.values[c].order()));
    const long phiL = euler_phi(L);
    std::vector<mpq_class> acc(2 * phiL, 0);
    for (size_t c = 0; c < cd.classes.size(); ++c) {
        if (chi.values[c].is_zero() || phi.values[c].is_zero()) continue;
        std::vector<mpq_class> a = chi.values[c].coeffs_at(L);
        std::vector<mpq_class> b = phi.values[c].conj().coeffs_at(L);
        const mpq_class w(cd.sizes[c], chi.group->group.order());
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            mpq_class wa = w * a[i];
            for (size_t j = 0; j < b.size(); ++j)
                if (b[j] != 0) acc[i + j] += wa * b[j];
        }
    }
    return Cyclotomic::from_dense(L, std::move(acc));
}

namespace {

// ---- modular linear algebra over F_p (p fits in long, p^2 in long long) ----

long mod_pow(long b, long e, long p) {
    long long acc = 1, base = ((b % p) + p) % p;
    while (e > 0) {
        if (e & 1) acc = acc * base % p;
        e >>= 1;
        base = base * base % p;
    }
    return static_cast<long>(acc);
}

long mod_inv(long a, long p) { return mod_pow(a, p - 2, p); }

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using Mat = std::vector<std::vector<long>>;

// Kernel basis of a square matrix over F_p (vectors as rows).
std::vector<std::vector<long>> kernel_basis(Mat m, long p) {
    const int n = static_cast<int>(m.size());
    std::vector<int> pivot_col_of_row(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        long inv = mod_inv(m[rank][col], p);
        for (int j = 0; j < n; ++j) m[rank][j] = static_cast<long>(static_cast<long long>(m[rank][j]) * inv % p);
        for (int r = 0; r < n; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            long f = m[r][col];
            for (int j = 0; j < n; ++j) {
                long long v = m[r][j] - static_cast<long long>(f) * m[rank][j] % p;
                m[r][j] = static_cast<long>(((v % p) + p) % p);
            }
        }
        pivot_col_of_row[rank] = col;
        ++rank;
    }
    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < rank; ++r) is_pivot[pivot_col_of_row[r]] = true;
    std::vector<std::vector<long>> basis;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        std::vector<long> v(n, 0);
        v[col] = 1;
        for (int r = 0; r < rank; ++r) {
            long c = m[r][col];
            if (c != 0) v[pivot_col_of_row[r]] = (p - c) % p;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve A x = b over F_p where the system is known to be consistent with
// a unique solution on the column span; A is n x m with full column rank.
std::vector<long> solve_full_rank(Mat a, std::vector<long> b, long p) {
    const int n = static_cast<int>(a.size());
    const int m = n == 0 ? 0 : static_cast<int>(a[0].size());
    int rank = 0;
    for (int col = 0; col < m; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw internal_error("modular solve: rank deficient");
        std::swap(a[rank], a[piv]);
        std::swap(b[rank], b[piv]);
        long inv = mod_inv(a[rank][col], p);
        for (int j = 0; j < m; ++j) a[rank][j] = static_cast<long>(static_cast<long long>(a[rank][j]) * inv % p);
        b[rank] = static_cast<long>(static_cast<long long>(b[rank]) * inv % p);
        for (int r = 0; r < n; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            long f = a[r][col];
            for (int j = 0; j < m; ++j) {
                long long v = a[r][j] - static_cast<long long>(f) * a[rank][j] % p;
                a[r][j] = static_cast<long>(((v % p) + p) % p);
            }
            long long v = b[r] - static_cast<long long>(f) * b[rank] % p;
            b[r] = static_cast<long>(((v % p) + p) % p);
        }
        ++rank;
    }
    return std::vector<long>(b.begin(), b.begin() + m);
}

// ---- Dixon's algorithm ----

struct DixonContext {
    const GroupData& g;
    long p;          // prime = 1 (mod exponent), > 2|G|
    long zeta_e;     // fixed primitive exponent-th root of unity mod p
    int r;           // class count
    std::vector<Mat> class_mats;  // (A_i)_{j,k} = a_{ijk}
};

long least_primitive_root(long p) {
    std::vector<long> qs;
    long m = p - 1;
    for (long q = 2; q * q <= m; ++q)
        if (m % q == 0) {
            qs.push_back(q);
            while (m % q == 0) m /= q;
        }
    if (m > 1) qs.push_back(m);
    for (long z = 2; z < p; ++z) {
        bool ok = true;
        for (long q : qs)
            if (mod_pow(z, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return z;
    }
    throw internal_error("no primitive root found");
}

DixonContext make_context(const GroupData& gd) {
    const FiniteGroup& G = gd.group;
    const ConjugacyData& cd = gd.conj;
    const int r = static_cast<int>(cd.classes.size());
    // Least prime p = 1 (mod exponent) exceeding twice the squared
    // degree bound sqrt(|G|), i.e. p > 2|G| (and in particular p does not
    // divide |G|); documented so runs are reproducible.
    long e = gd.exponent;
    long p = 2 * G.order() + 1;
    p += (e - (p - 1) % e) % e;
    while (!is_prime(p)) p += e;

    DixonContext ctx{gd, p, 0, r, {}};
    ctx.zeta_e = mod_pow(least_primitive_root(p), (p - 1) / e, p);

    // a_{ijk} = #{(x, y) in C_i x C_j : xy = rep_k}
    ctx.class_mats.assign(r, Mat(r, std::vector<long>(r, 0)));
    for (int k = 0; k < r; ++k) {
        int gk = cd.reps[k];
        for (int x = 0; x < G.order(); ++x) {
            int i = cd.class_of[x];
            int j = cd.class_of[G.mul(G.inv(x), gk)];
            ++ctx.class_mats[i][j][k];
        }
    }
    for (auto& m : ctx.class_mats)
        for (auto& row : m)
            for (auto& v : row) v %= ctx.p;
    return ctx;
}

// The common eigenvectors of the class matrices over F_p, one per
// irreducible; returned unnormalized.
std::vector<std::vector<long>> joint_eigenvectors(const DixonContext& ctx) {
    const long p = ctx.p;
    const int r = ctx.r;
    std::vector<std::vector<std::vector<long>>> spaces;  // each: list of basis row-vectors
    {
        std::vector<std::vector<long>> full;
        for (int i = 0; i < r; ++i) {
            std::vector<long> v(r, 0);
            v[i] = 1;
            full.push_back(std::move(v));
        }
        spaces.push_back(std::move(full));
    }
    for (int i = 1; i < r; ++i) {
        // Matrix-on-subspace: every subspace here is spanned by joint
        // eigenvectors, hence invariant under each class matrix.
        std::vector<std::vector<std::vector<long>>> next;
        for (auto& basis : spaces) {
            const int d = static_cast<int>(basis.size());
            if (d == 1) {
                next.push_back(std::move(basis));
                continue;
            }
            // R solves (A_i^T applied to basis rows) = R * basis.
            Mat images(d, std::vector<long>(r, 0));
            for (int b = 0; b < d; ++b)
                for (int col = 0; col < r; ++col) {
                    long long acc = 0;
                    for (int k = 0; k < r; ++k)
                        acc += static_cast<long long>(ctx.class_mats[i][col][k]) % p * basis[b][k] % p;
                    images[b][col] = static_cast<long>(acc % p);
                }
            // Solve for R row by row: images[b] = sum_c R[b][c] basis[c].
            Mat bt(r, std::vector<long>(d, 0));
            for (int c = 0; c < d; ++c)
                for (int col = 0; col < r; ++col) bt[col][c] = basis[c][col];
            Mat rmat(d, std::vector<long>(d, 0));
            for (int b = 0; b < d; ++b) rmat[b] = solve_full_rank(bt, images[b], p);
            // Split by eigenvalues of R (brute-force scan of F_p).
            std::vector<std::vector<std::vector<long>>> pieces;
            int found_dim = 0;
            for (long lam = 0; lam < p && found_dim < d; ++lam) {
                Mat shifted = rmat;
                for (int t = 0; t < d; ++t) shifted[t][t] = ((shifted[t][t] - lam) % p + p) % p;
                // Kernel of R^T - lam: we need left-eigenrows w R = lam w,
                // i.e. kernel of (R transposed) - lam.
                Mat tr(d, std::vector<long>(d, 0));
                for (int u = 0; u < d; ++u)
                    for (int v = 0; v < d; ++v) tr[u][v] = shifted[v][u];
                auto ker = kernel_basis(tr, p);
                if (ker.empty()) continue;
                found_dim += static_cast<int>(ker.size());
                std::vector<std::vector<long>> sub;
                for (auto& w : ker) {
                    std::vector<long> vec(r, 0);
                    for (int c = 0; c < d; ++c) {
                        if (w[c] == 0) continue;
                        for (int col = 0; col < r; ++col) {
                            long long t2 = vec[col] + static_cast<long long>(w[c]) * basis[c][col] % p;
                            vec[col] = static_cast<long>(t2 % p);
                        }
                    }
                    sub.push_back(std::move(vec));
                }
                pieces.push_back(std::move(sub));
            }
            if (found_dim != d) throw internal_error("Dixon: eigenspace split lost dimensions");
            for (auto& piece : pieces) next.push_back(std::move(piece));
        }
        spaces = std::move(next);
        bool all_one = std::all_of(spaces.begin(), spaces.end(),
                                   [](const auto& s) { return s.size() == 1; });
        if (all_one) break;
    }
    std::vector<std::vector<long>> vecs;
    for (auto& s : spaces) {
        if (s.size() != 1)
            throw internal_error("Dixon: class matrices failed to separate eigenvectors");
        vecs.push_back(std::move(s[0]));
    }
    return vecs;
}

struct ModularCharacter {
    long degree;
    std::vector<long> values;  // chi(rep_k) mod p
};

std::vector<ModularCharacter> modular_characters(const DixonContext& ctx) {
    const long p = ctx.p;
    const int r = ctx.r;
    const ConjugacyData& cd = ctx.g.conj;
    const FiniteGroup& G = ctx.g.group;
    const long n = G.order();
    auto vecs = joint_eigenvectors(ctx);
    if (static_cast<int>(vecs.size()) != r)
        throw internal_error("Dixon: wrong number of joint eigenvectors");

    std::vector<long> divisors;
    for (long d = 1; d * d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);

    std::vector<ModularCharacter> out;
    for (auto& v : vecs) {
        // Normalize so the identity coordinate is 1: omega_0 = 1.
        if (v[0] == 0) throw internal_error("Dixon: eigenvector vanishes at the identity class");
        long s = mod_inv(v[0], p);
        for (auto& x : v) x = static_cast<long>(static_cast<long long>(x) * s % p);
        // chi(1)^2 = |G| / sum_k omega_k omega_{k*} / |C_k|
        long long denom = 0;
        for (int k = 0; k < r; ++k) {
            int kstar = cd.class_of[G.inv(cd.reps[k])];
            long term = static_cast<long>(static_cast<long long>(v[k]) * v[kstar] % p);
            term = static_cast<long>(static_cast<long long>(term) * mod_inv(cd.sizes[k] % p, p) % p);
            denom = (denom + term) % p;
        }
        long deg_sq = static_cast<long>(static_cast<long long>(n % p) *
                                        mod_inv(static_cast<long>(denom), p) % p);
        long degree = -1;
        for (long d : divisors)
            if (d * d % p == deg_sq) { degree = d; break; }
        if (degree < 0) throw internal_error("Dixon: degree is not a divisor of |G|");
        ModularCharacter mc;
        mc.degree = degree;
        mc.values.resize(r);
        for (int k = 0; k < r; ++k) {
            long val = static_cast<long>(static_cast<long long>(v[k]) * (degree % p) % p);
            val = static_cast<long>(static_cast<long long>(val) * mod_inv(cd.sizes[k] % p, p) % p);
            mc.values[k] = val;
        }
        out.push_back(std::move(mc));
    }
    return out;
}

// Lift chi(g) from F_p to Q(zeta_d), d = order of g, via eigenvalue
// multiplicities m_j = d^{-1} sum_l chi(g^l) zeta_d^{-jl} (mod p); each
// m_j is a genuine multiplicity in [0, degree], so the residue determines it.
Cyclotomic lift_value(const DixonContext& ctx, const ModularCharacter& mc, int cls) {
    const long p = ctx.p;
    const ConjugacyData& cd = ctx.g.conj;
    const FiniteGroup& G = ctx.g.group;
    const long d = G.element_order(cd.reps[cls]);
    const long zeta_d = mod_pow(ctx.zeta_e, ctx.g.exponent / d, p);
    Cyclotomic value;
    for (long j = 0; j < d; ++j) {
        long long acc = 0;
        for (long l = 0; l < d; ++l) {
            long chik = mc.values[ctx.g.power_class(cls, l)];
            long root = mod_pow(zeta_d, (d - j) * l % d, p);
            acc = (acc + static_cast<long long>(chik) * root) % p;
        }
        long mj = static_cast<long>(acc % p * mod_inv(d % p, p) % p);
        if (mj > mc.degree)
            throw internal_error("Dixon: eigenvalue multiplicity exceeds the degree");
        if (mj != 0) value = value + Cyclotomic(mj) * Cyclotomic::root_of_unity(d, j);
    }
    return value;
}

void verify_table(const CharacterTable& t) {
    const GroupRef& g = t.group;
    const int r = t.size();
    const long n = g->group.order();
    mpz_class degsum = 0;
    for (int i = 0; i < r; ++i) degsum += t.degrees[i] * t.degrees[i];
    if (degsum != n) throw internal_error("character table: degree-sum identity fails");

    // Lift every value (and its conjugate) to the common order once; both
    // orthogonality relations are then hermitian, so half the pairs suffice.
    long L = 1;
    for (int i = 0; i < r; ++i)
        for (int c = 0; c < r; ++c) L = std::lcm(L, t.irr[i].values[c].order());
    std::vector<std::vector<std::vector<mpq_class>>> lifted(r), lifted_conj(r);
    for (int i = 0; i < r; ++i) {
        lifted[i].resize(r);
        lifted_conj[i].resize(r);
        for (int c = 0; c < r; ++c) {
            lifted[i][c] = t.irr[i].values[c].coeffs_at(L);
            lifted_conj[i][c] = t.irr[i].values[c].conj().coeffs_at(L);
        }
    }
    const long phiL = euler_phi(L);
    auto accumulate = [&](std::vector<mpq_class>& acc, const std::vector<mpq_class>& a,
                          const std::vector<mpq_class>& b, const mpq_class& w) {
        for (size_t u = 0; u < a.size(); ++u) {
            if (a[u] == 0) continue;
            mpq_class wa = w * a[u];
            for (size_t v = 0; v < b.size(); ++v)
                if (b[v] != 0) acc[u + v] += wa * b[v];
        }
    };
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            std::vector<mpq_class> acc(2 * phiL, 0);
            for (int c = 0; c < r; ++c)
                accumulate(acc, lifted[i][c], lifted_conj[j][c],
                           mpq_class(g->conj.sizes[c], n));
            if (Cyclotomic::from_dense(L, std::move(acc)) != Cyclotomic(i == j ? 1L : 0L))
                throw internal_error("character table: row orthogonality fails at (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
        }
    // Column orthogonality: sum_chi chi(c) conj(chi(c')) = |Centralizer(c)| delta.
    for (int c = 0; c < r; ++c)
        for (int c2 = c; c2 < r; ++c2) {
            std::vector<mpq_class> acc(2 * phiL, 0);
            for (int i = 0; i < r; ++i)
                accumulate(acc, lifted[i][c], lifted_conj[i][c2], 1);
            Cyclotomic got = Cyclotomic::from_dense(L, std::move(acc));
            Cyclotomic expect =
                c == c2 ? Cyclotomic(mpq_class(n, g->conj.sizes[c])) : Cyclotomic(0L);
            if (got != expect)
                throw internal_error("character table: column orthogonality fails at (" +
                                     std::to_string(c) + "," + std::to_string(c2) + ")");
        }
}

CharacterTable compute_table(const GroupRef& g) {
    DixonContext ctx = make_context(*g);
    auto mods = modular_characters(ctx);
    CharacterTable t;
    t.group = g;
    t.dixon_prime = ctx.p;
    for (auto& mc : mods) {
        ClassFunction f{g, {}};
        f.values.reserve(ctx.r);
        for (int c = 0; c < ctx.r; ++c) f.values.push_back(lift_value(ctx, mc, c));
        t.degrees.push_back(mc.degree);
        t.irr.push_back(std::move(f));
    }
    // Deterministic order: by degree, then value-lexicographic.
    std::vector<int> idx(t.irr.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (t.degrees[a] != t.degrees[b]) return t.degrees[a] < t.degrees[b];
        for (size_t c = 0; c < t.irr[a].values.size(); ++c) {
            int cmp = Cyclotomic::compare(t.irr[a].values[c], t.irr[b].values[c]);
            if (cmp != 0) return cmp < 0;
        }
        return false;
    });
    CharacterTable sorted;
    sorted.group = g;
    sorted.dixon_prime = t.dixon_prime;
    for (int i : idx) {
        sorted.irr.push_back(std::move(t.irr[i]));
        sorted.degrees.push_back(t.degrees[i]);
    }
    verify_table(sorted);
    return sorted;
}

}  // namespace

GroupData::~GroupData() = default;

const CharacterTable& GroupData::table() const {
    std::call_once(table_once_, [this] {
        auto self = shared_from_this();
        table_ = std::make_shared<const CharacterTable>(compute_table(self));
    });
    return *table_;
}

const CharacterTable& char_table(const GroupRef& g) { return g->table(); }

int CharacterTable::find(const ClassFunction& f) const {
    for (int i = 0; i < size(); ++i)
        if (irr[i].values == f.values) return i;
    return -1;
}

std::vector<long> decompose(const ClassFunction& f) {
    const CharacterTable& t = char_table(f.group);
    std::vector<long> coeffs;
    coeffs.reserve(t.size());
    for (int i = 0; i < t.size(); ++i) {
        Cyclotomic c = inner_product(f, t.irr[i]);
        if (!c.is_integer())
            throw input_error("class function is not a virtual character (non-integral multiplicity)");
        coeffs.push_back(static_cast<long>(c.rational_value().get_num().get_si()));
    }
    return coeffs;
}

bool is_virtual_character(const ClassFunction& f) {
    const CharacterTable& t = char_table(f.group);
    for (int i = 0; i < t.size(); ++i)
        if (!inner_product(f, t.irr[i]).is_integer()) return false;
    return true;
}

bool is_irreducible_character(const ClassFunction& f) {
    if (inner_product(f, f) != Cyclotomic(1L)) return false;
    return f.degree_value().is_integer() && f.degree() >= 1 && is_virtual_character(f);
}

ClassFunction restrict_to(const ClassFunction& chi, const Subgroup& h) {
    if (chi.group != h.parent) throw input_error("restrict: subgroup of a different group");
    ClassFunction r{h.group, {}};
    r.values.reserve(h.group->conj.classes.size());
    for (int c = 0; c < static_cast<int>(h.group->conj.classes.size()); ++c)
        r.values.push_back(chi.at_element(h.to_parent(h.group->conj.reps[c])));
    return r;
}

ClassFunction induce_from(const ClassFunction& phi, const Subgroup& h) {
    const GroupRef& g = h.parent;
    const FiniteGroup& G = g->group;
    ClassFunction r{g, {}};
    const mpq_class inv_h(1, static_cast<long>(h.elements.size()));
    for (int c = 0; c < static_cast<int>(g->conj.classes.size()); ++c) {
        int rep = g->conj.reps[c];
        Cyclotomic acc;
        for (int x = 0; x < G.order(); ++x) {
            int y = G.mul(G.mul(G.inv(x), rep), x);
            if (h.contains(y)) acc = acc + phi.at_element(h.index_of(y));
        }
        r.values.push_back(Cyclotomic(inv_h) * acc);
    }
    return r;
}

ClassFunction inflate_from(const ClassFunction& chi_q, const GroupRef& g, const Quotient& q) {
    if (chi_q.group != q.group) throw input_error("inflate: class function not on the quotient");
    if (static_cast<int>(q.proj.size()) != g->group.order())
        throw input_error("inflate: quotient belongs to a different group");
    ClassFunction r{g, {}};
    for (int c = 0; c < static_cast<int>(g->conj.classes.size()); ++c)
        r.values.push_back(chi_q.at_element(q.proj[g->conj.reps[c]]));
    return r;
}

ClassFunction adams(const ClassFunction& chi, long k) {
    if (k < 1) throw input_error("adams: k must be a natural number");
    ClassFunction r{chi.group, {}};
    for (size_t c = 0; c < chi.values.size(); ++c)
        r.values.push_back(chi.values[chi.group->power_class(static_cast<int>(c), k)]);
    return r;
}

namespace {

// det of an honest character at every class via Newton's identities:
// p_i = chi(g^i) are power sums of the eigenvalues of g, so the top
// elementary symmetric function e_d is the determinant.
ClassFunction det_of_character(const ClassFunction& chi, long d) {
    ClassFunction r{chi.group, {}};
    for (size_t c = 0; c < chi.values.size(); ++c) {
        std::vector<Cyclotomic> e(static_cast<size_t>(d) + 1);
        e[0] = Cyclotomic(1L);
        for (long k = 1; k <= d; ++k) {
            Cyclotomic acc;
            for (long i = 1; i <= k; ++i) {
                Cyclotomic p_i = chi.values[chi.group->power_class(static_cast<int>(c), i)];
                Cyclotomic term = e[k - i] * p_i;
                acc = (i % 2 == 1) ? acc + term : acc - term;
            }
            e[k] = acc * Cyclotomic(mpq_class(1, k));
        }
        r.values.push_back(e[d]);
    }
    return r;
}

}  // namespace

ClassFunction det_char(const ClassFunction& chi) {
    std::vector<long> coeffs = decompose(chi);  // rejects non-virtual input
    const CharacterTable& t = char_table(chi.group);
    // Honest characters take the Newton route directly; virtual ones are
    // handled multiplicatively: det_(a-b) = det_a * det_b^-1.
    ClassFunction result = trivial_character(chi.group);
    for (int i = 0; i < t.size(); ++i) {
        if (coeffs[i] == 0) continue;
        ClassFunction di = det_of_character(t.irr[i], t.degrees[i]);
        ClassFunction r2{chi.group, {}};
        for (size_t c = 0; c < result.values.size(); ++c)
            r2.values.push_back(result.values[c] * di.values[c].pow(coeffs[i]));
        result = std::move(r2);
    }
    return result;
}

int frobenius_schur(const ClassFunction& chi) {
    if (!is_irreducible_character(chi))
        throw input_error("frobenius_schur: input is not an irreducible character");
    const auto& cd = chi.group->conj;
    Cyclotomic acc;
    for (size_t c = 0; c < cd.classes.size(); ++c)
        acc = acc + Cyclotomic(static_cast<long>(cd.sizes[c])) *
                        chi.values[chi.group->power_class(static_cast<int>(c), 2)];
    Cyclotomic nu = acc * Cyclotomic(mpq_class(1, chi.group->group.order()));
    for (long s : {-1L, 0L, 1L})
        if (nu == Cyclotomic(s)) return static_cast<int>(s);
    throw internal_error("frobenius_schur: indicator is not in {-1,0,1}");
}

std::vector<int> symplectic_chars(const GroupRef& g) {
    const CharacterTable& t = char_table(g);
    std::vector<int> out;
    for (int i = 0; i < t.size(); ++i)
        if (frobenius_schur(t.irr[i]) == -1) out.push_back(i);
    return out;
}

}  // namespace gjsum
