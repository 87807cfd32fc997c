#include "gjsum/center.hpp"

#include <numeric>
#include <sstream>

#include "gjsum/errors.hpp"

namespace gjsum {

bool CentralElement::is_unit() const {
    for (const auto& c : coeff)
        if (c.is_zero()) return false;
    return true;
}

Cyclotomic CentralElement::at_virtual(const ClassFunction& psi) const {
    if (psi.group != group) throw input_error("central element: character on a different group");
    std::vector<long> m = decompose(psi);
    Cyclotomic acc(1L);
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        acc = acc * coeff[i].pow(m[i]);
    }
    return acc;
}

CentralElement operator*(const CentralElement& a, const CentralElement& b) {
    if (a.group != b.group) throw input_error("central elements on different groups");
    CentralElement r{a.group, {}};
    r.coeff.reserve(a.coeff.size());
    for (size_t i = 0; i < a.coeff.size(); ++i) r.coeff.push_back(a.coeff[i] * b.coeff[i]);
    return r;
}

CentralElement CentralElement::inverse() const {
    CentralElement r{group, {}};
    r.coeff.reserve(coeff.size());
    for (const auto& c : coeff) r.coeff.push_back(c.inverse());
    return r;
}

bool CentralElement::operator==(const CentralElement& o) const {
    return group == o.group && coeff == o.coeff;
}

std::string CentralElement::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < coeff.size(); ++i)
        out << "chi_" << i << " : " << coeff[i].str() << "\n";
    return out.str();
}

CentralElement central_identity(const GroupRef& g) {
    return CentralElement{g, std::vector<Cyclotomic>(char_table(g).irr.size(), Cyclotomic(1L))};
}

CentralElement central_idempotent_of_subgroup(const GroupRef& g, const Subgroup& i) {
    if (i.parent != g) throw input_error("idempotent: subgroup of a different group");
    if (!is_normal(i)) throw input_error("idempotent: subgroup must be normal");
    std::vector<Cyclotomic> a(g->group.order(), Cyclotomic(0L));
    Cyclotomic w(mpq_class(1, static_cast<long>(i.elements.size())));
    for (int e : i.elements) a[e] = w;
    return from_group_algebra(g, a);
}

CentralElement from_group_algebra(const GroupRef& g, const std::vector<Cyclotomic>& a,
                                  bool require_unit) {
    const FiniteGroup& G = g->group;
    if (static_cast<int>(a.size()) != G.order())
        throw input_error("from_group_algebra: need one coefficient per element");
    for (int x = 0; x < G.order(); ++x)
        if (a[x] != a[g->conj.reps[g->conj.class_of[x]]])
            throw input_error("from_group_algebra: coefficients not constant on class of element " +
                              std::to_string(x));
    const CharacterTable& t = char_table(g);
    CentralElement r{g, {}};
    for (int i = 0; i < t.size(); ++i) {
        Cyclotomic acc;
        for (size_t c = 0; c < g->conj.classes.size(); ++c) {
            const Cyclotomic& av = a[g->conj.reps[c]];
            if (av.is_zero()) continue;
            acc = acc + Cyclotomic(static_cast<long>(g->conj.sizes[c])) * av * t.irr[i].values[c];
        }
        acc = acc * Cyclotomic(mpq_class(1, t.degrees[i]));
        if (require_unit && acc.is_zero())
            throw input_error("from_group_algebra: coefficient vanishes at chi_" + std::to_string(i) +
                              ", element is not a unit");
        r.coeff.push_back(std::move(acc));
    }
    return r;
}

std::vector<Cyclotomic> to_group_algebra(const CentralElement& x) {
    const GroupRef& g = x.group;
    const CharacterTable& t = char_table(g);
    const FiniteGroup& G = g->group;
    // x = sum_chi x_chi e_chi with e_chi = (chi(1)/|G|) sum_g chi(g^-1) g.
    std::vector<Cyclotomic> a(G.order(), Cyclotomic(0L));
    for (int e = 0; e < G.order(); ++e) {
        Cyclotomic acc;
        int einv = G.inv(e);
        for (int i = 0; i < t.size(); ++i) {
            if (x.coeff[i].is_zero()) continue;
            acc = acc + x.coeff[i] * Cyclotomic(t.degrees[i]) * t.irr[i].at_element(einv);
        }
        a[e] = acc * Cyclotomic(mpq_class(1, G.order()));
    }
    return a;
}

CentralElement twist_endo(const CentralElement& x, long m, long n, long k) {
    const CharacterTable& t = char_table(x.group);
    if ((m < 0 || n < 0) && !x.is_unit())
        throw input_error("twist_endo: negative exponents need a unit");
    CentralElement r{x.group, {}};
    for (int i = 0; i < t.size(); ++i) {
        Cyclotomic v = x.coeff[i].pow(m);
        if (n != 0) {
            ClassFunction psi = adams(t.irr[i], k);
            int j = t.find(psi);  // psi_k of an irreducible is often irreducible
            Cyclotomic at_psi = j >= 0 ? x.coeff[j] : x.at_virtual(psi);
            v = v * at_psi.pow(n);
        }
        r.coeff.push_back(std::move(v));
    }
    return r;
}

CentralElement central_induce(const CentralElement& x, const Subgroup& j) {
    if (x.group != j.group) throw input_error("central_induce: element lives on a different group");
    if (!x.is_unit()) throw input_error("central_induce: element must be a unit");
    const GroupRef& g = j.parent;
    const CharacterTable& tg = char_table(g);
    const CharacterTable& tj = char_table(j.group);
    CentralElement r{g, {}};
    for (int i = 0; i < tg.size(); ++i) {
        ClassFunction res = restrict_to(tg.irr[i], j);
        Cyclotomic acc(1L);
        for (int f = 0; f < tj.size(); ++f) {
            Cyclotomic ip = inner_product(res, tj.irr[f]);
            if (!ip.is_integer())
                throw internal_error("central_induce: restriction multiplicity not integral");
            long e = static_cast<long>(ip.rational_value().get_num().get_si());
            if (e != 0) acc = acc * x.coeff[f].pow(e);
        }
        r.coeff.push_back(std::move(acc));
    }
    return r;
}

bool is_rational_equivariant(const CentralElement& x) {
    const CharacterTable& t = char_table(x.group);
    long n_mod = x.group->exponent;
    for (const auto& c : x.coeff) n_mod = std::lcm(n_mod, c.order());
    // chi^omega depends on omega mod exponent only; coefficients feel all
    // of (Z/N)^*, realizing invariance under the full Galois action.
    for (long w = 1; w < n_mod; ++w) {
        if (std::gcd(w, n_mod) != 1) continue;
        for (int i = 0; i < t.size(); ++i) {
            ClassFunction conj_chi{x.group, {}};
            for (const auto& v : t.irr[i].values) conj_chi.values.push_back(v.galois(w));
            int j = t.find(conj_chi);
            if (j < 0) throw internal_error("galois conjugate of an irreducible not in table");
            if (x.coeff[j] != x.coeff[i].galois(w)) return false;
        }
    }
    return true;
}

PositivityResult is_symplectic_positive(const CentralElement& x, unsigned sign_cap_bits) {
    const CharacterTable& t = char_table(x.group);
    for (int i = 0; i < t.size(); ++i) {
        ClassFunction bar{x.group, {}};
        for (const auto& v : t.irr[i].values) bar.values.push_back(v.conj());
        int j = t.find(bar);
        if (j < 0) throw internal_error("conjugate of an irreducible not in table");
        if (x.coeff[j] != x.coeff[i].conj())
            return {false, "coefficient at the conjugate of chi_" + std::to_string(i) +
                               " is not the conjugate coefficient"};
    }
    for (int i : symplectic_chars(x.group)) {
        if (!x.coeff[i].is_real())
            return {false, "coefficient at symplectic chi_" + std::to_string(i) + " is not real"};
        if (x.coeff[i].sign_real(sign_cap_bits) <= 0)
            return {false, "coefficient at symplectic chi_" + std::to_string(i) + " is not positive"};
    }
    return {true, ""};
}

}  // namespace gjsum
