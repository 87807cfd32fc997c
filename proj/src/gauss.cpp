#include "gjsum/gauss.hpp"

#include <algorithm>
#include <numeric>

#include "gjsum/errors.hpp"

namespace gjsum {

namespace {

bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using Poly = std::vector<long>;  // coefficients mod p, lowest degree first

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& modulus, long p) {
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    const long f = static_cast<long>(modulus.size()) - 1;
    for (long i = static_cast<long>(prod.size()) - 1; i >= f; --i) {
        long c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (long j = 0; j < f; ++j)
            prod[i - f + j] = ((prod[i - f + j] - c * modulus[j]) % p + p) % p;
    }
    prod.resize(f);
    return prod;
}

long encode(const Poly& a, long p) {
    long v = 0;
    for (size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
}

Poly decode(long v, long p, long f) {
    Poly a(f, 0);
    for (long i = 0; i < f; ++i) {
        a[i] = v % p;
        v /= p;
    }
    return a;
}

bool poly_is_irreducible(const Poly& mod, long p) {
    const long f = static_cast<long>(mod.size()) - 1;
    if (f == 1) return true;
    // Trial division by every monic polynomial of degree <= f/2.
    for (long d = 1; 2 * d <= f; ++d) {
        long count = 1;
        for (long i = 0; i < d; ++i) count *= p;
        for (long v = 0; v < count; ++v) {
            Poly div = decode(v, p, d + 1);
            div[d] = 1;
            // remainder of mod by div
            Poly rem = mod;
            for (long i = static_cast<long>(rem.size()) - 1; i >= d; --i) {
                long c = rem[i];
                if (c == 0) continue;
                rem[i] = 0;
                for (long j = 0; j < d; ++j)
                    rem[i - d + j] = ((rem[i - d + j] - c * div[j]) % p + p) % p;
            }
            if (std::all_of(rem.begin(), rem.begin() + d, [](long x) { return x == 0; }))
                return false;
        }
    }
    return true;
}

}  // namespace

long FiniteFieldData::q() const {
    long v = 1;
    for (long i = 0; i < f; ++i) v *= p;
    return v;
}

FiniteFieldData finite_field(long p, long f) {
    if (!is_prime_long(p)) throw input_error("finite_field: p must be prime");
    if (f < 1) throw input_error("finite_field: degree must be positive");
    FiniteFieldData k;
    k.p = p;
    k.f = f;
    const long q = [&] {
        long v = 1;
        for (long i = 0; i < f; ++i) v *= p;
        return v;
    }();

    // Lexicographically least monic irreducible of degree f: scan constant
    // coefficients upward (encode enumerates low-degree-first, which orders
    // by the coefficient tuple (c_0, c_1, ...)).
    for (long v = 0;; ++v) {
        if (v >= q) throw internal_error("finite_field: no irreducible polynomial found");
        Poly mod = decode(v, p, f + 1);
        mod[f] = 1;
        if (poly_is_irreducible(mod, p)) {
            k.modulus = mod;
            break;
        }
    }

    // Least primitive element in the induced element order (elements
    // enumerated by their encoded integer).
    auto order_of = [&](const Poly& g) {
        Poly x = g;
        long o = 1;
        Poly one(f, 0);
        one[0] = 1;
        while (x != one) {
            x = poly_mul_mod(x, g, k.modulus, p);
            ++o;
            if (o > q) throw internal_error("finite_field: element order overflow");
        }
        return o;
    };
    for (long v = 1; v < q; ++v) {
        Poly g = decode(v, p, f);
        if (order_of(g) == q - 1) {
            k.generator = g;
            break;
        }
    }
    if (k.generator.empty()) throw internal_error("finite_field: no primitive element found");

    // Power, discrete-log and trace tables.
    k.powers_.resize(q - 1);
    k.dlog_.assign(q, -1);
    Poly x(f, 0);
    x[0] = 1;
    for (long j = 0; j < q - 1; ++j) {
        k.powers_[j] = x;
        k.dlog_[encode(x, p)] = j;
        x = poly_mul_mod(x, k.generator, k.modulus, p);
    }
    k.trace_.resize(q - 1);
    for (long j = 0; j < q - 1; ++j) {
        // Tr(x) = x + x^p + ... + x^{p^{f-1}}; computed by Frobenius via
        // discrete logs: (g^j)^{p^i} = g^{j p^i mod (q-1)}.
        Poly acc(f, 0);
        long e = j;
        for (long i = 0; i < f; ++i) {
            const Poly& term = k.powers_[e];
            for (long t = 0; t < f; ++t) acc[t] = (acc[t] + term[t]) % p;
            e = (e * p) % (q - 1);
        }
        for (long t = 1; t < f; ++t)
            if (acc[t] != 0) throw internal_error("finite_field: trace is not in the prime field");
        k.trace_[j] = acc[0];
    }
    return k;
}

Cyclotomic gauss_sum(const FiniteFieldData& k, long chi_exp) {
    const long q = k.q();
    if (chi_exp < 0 || chi_exp >= q - 1)
        throw input_error("gauss_sum: character exponent out of range");
    // g = sum_j zeta_{q-1}^{chi_exp j} zeta_p^{Tr(gen^j)}; accumulate the
    // monomials zeta_n^(chi_exp j p + Tr (q-1)) at n = p (q-1) and reduce once.
    const long n = k.p * (q - 1);
    std::vector<mpq_class> acc(n, 0);
    for (long j = 0; j < q - 1; ++j) {
        long expn = (chi_exp * j % (q - 1)) * k.p + k.trace_[j] * (q - 1);
        acc[expn % n] += 1;
    }
    return Cyclotomic::from_dense(n, std::move(acc));
}

Cyclotomic jacobi_sum(const FiniteFieldData& k, long a_exp, long b_exp) {
    const long q = k.q();
    const long n = q - 1;
    std::vector<mpq_class> acc(n, 0);
    // sum over x != 0, 1 of chi_a(x) chi_b(1-x); zero values of 1-x are
    // excluded because chi is only defined on the unit group.
    for (long j = 0; j < n; ++j) {
        // x = gen^j; compute 1 - x and skip if zero
        Poly one_minus(k.f, 0);
        one_minus[0] = 1;
        const Poly& x = k.powers_[j];
        for (long t = 0; t < k.f; ++t) one_minus[t] = ((one_minus[t] - x[t]) % k.p + k.p) % k.p;
        long enc = 0;
        for (size_t t = one_minus.size(); t-- > 0;) enc = enc * k.p + one_minus[t];
        if (enc == 0) continue;
        long l = k.dlog_[enc];
        acc[(a_exp * j + b_exp * l) % n] += 1;
    }
    return Cyclotomic::from_dense(n, std::move(acc));
}

TameAbelianLocalDatum make_tame_abelian(LocalExtensionData base, FiniteFieldData residue) {
    if (!base.gamma->group.is_abelian())
        throw input_error("tame abelian datum: group must be abelian");
    if (!base.is_tame()) throw input_error("tame abelian datum: extension must be tame");
    const long e = base.inertia_order();
    const long q = residue.q();
    if (e > 1 && (q - 1) % e != 0)
        throw input_error("tame abelian datum: |Gamma_0| must divide q - 1");
    if (base.p != residue.p)
        throw input_error("tame abelian datum: residue characteristic mismatch");
    TameAbelianLocalDatum d;
    d.base = std::move(base);
    d.residue = std::move(residue);
    // Chosen generator of the (cyclic, prime-to-p) inertia group: the
    // least element index of full order e.
    d.inertia_generator = 0;
    for (int g : d.base.inertia())
        if (d.base.gamma->group.element_order(g) == e) {
            d.inertia_generator = g;
            break;
        }
    return d;
}

namespace {

// Exponent a with chi(inertia_generator) = zeta_e^a; the transported
// residue character is then gen -> zeta_{q-1}^(a (q-1)/e).
long inertia_character_exponent(const TameAbelianLocalDatum& d, const ClassFunction& chi) {
    const long e = d.base.inertia_order();
    Cyclotomic val = chi.at_element(d.inertia_generator);
    for (long a = 0; a < e; ++a)
        if (val == Cyclotomic::root_of_unity(e, a)) return a;
    throw internal_error("tame_tau: character value is not an e-th root of unity");
}

}  // namespace

Cyclotomic tame_tau(const TameAbelianLocalDatum& d, const ClassFunction& chi) {
    if (chi.group != d.base.gamma) throw input_error("tame_tau: character on a different group");
    if (chi.degree_value() != Cyclotomic(1L)) throw input_error("tame_tau: character must be linear");
    if (is_unramified_character(chi, d.base)) return Cyclotomic(1L);  // fixed convention
    const long e = d.base.inertia_order();
    const long q = d.residue.q();
    long a = inertia_character_exponent(d, chi);
    return gauss_sum(d.residue, a % e * ((q - 1) / e) % (q - 1));
}

CentralElement equivariant_tau(const TameAbelianLocalDatum& d) {
    const CharacterTable& t = char_table(d.base.gamma);
    CentralElement r{d.base.gamma, {}};
    for (int i = 0; i < t.size(); ++i) r.coeff.push_back(tame_tau(d, t.irr[i]));
    return r;
}

CentralElement modified_tau(const TameAbelianLocalDatum& d) {
    CentralElement tau = equivariant_tau(d);
    CentralElement y = equivariant_y(d.base);
    return tau * y.inverse();
}

CentralElement equivariant_J2(const TameAbelianLocalDatum& d) {
    return twist_endo(equivariant_tau(d), -2, 1, 2);
}

}  // namespace gjsum
