#include "gjsum/report.hpp"

#include <json.hpp>
#include <sstream>

#include "gjsum/errors.hpp"

namespace gjsum {

namespace {

using nlohmann::json;

json central_json(const CentralElement& x) {
    json out = json::array();
    for (size_t i = 0; i < x.coeff.size(); ++i) out.push_back(x.coeff[i].str());
    return out;
}

void render_central(std::ostringstream& out, const std::string& title, const CentralElement& x) {
    out << title << "\n";
    std::istringstream lines(x.str());
    std::string line;
    while (std::getline(lines, line)) out << "  " << line << "\n";
}

void group_section(std::ostringstream& text, json& js, const GroupRef& g) {
    const CharacterTable& t = char_table(g);
    const FiniteGroup& G = g->group;
    text << "group: order " << G.order();
    if (!G.label().empty()) text << " (" << G.label() << ")";
    text << ", " << g->conj.classes.size() << " conjugacy classes, exponent " << g->exponent
         << "\n";
    js["group"] = {{"order", G.order()},
                   {"label", G.label()},
                   {"classes", g->conj.classes.size()},
                   {"exponent", g->exponent}};
    js["provenance"]["dixon_prime"] = t.dixon_prime;
    text << "provenance: dixon_prime=" << t.dixon_prime << ", character_order=" << g->exponent
         << "\n";

    text << "class sizes:";
    for (int s : g->conj.sizes) text << " " << s;
    text << "\nclass representatives:";
    for (int r : g->conj.reps) text << " " << r;
    text << "\n";

    text << "character table (rows chi_i, columns in class order):\n";
    json rows = json::array();
    for (int i = 0; i < t.size(); ++i) {
        text << "  chi_" << i << " (deg " << t.degrees[i] << "):";
        json row = json::array();
        for (const auto& v : t.irr[i].values) {
            text << "  " << v.str();
            row.push_back(v.str());
        }
        text << "\n";
        rows.push_back(row);
    }
    js["character_table"] = rows;
    js["degrees"] = t.degrees;

    text << "frobenius-schur:";
    json fs = json::array();
    std::vector<int> symp;
    for (int i = 0; i < t.size(); ++i) {
        int ind = frobenius_schur(t.irr[i]);
        if (ind == -1) symp.push_back(i);
        text << " " << ind;
        fs.push_back(ind);
    }
    text << "\nsymplectic characters: ";
    if (symp.empty()) text << "(none)";
    for (int i : symp) text << "chi_" << i << " ";
    text << "\n";
    js["frobenius_schur"] = fs;
    js["symplectic"] = symp;
}

void adams_section(std::ostringstream& text, json& js, const GroupRef& g) {
    const CharacterTable& t = char_table(g);
    text << "adams decompositions (psi_k chi_i = sum m_j chi_j):\n";
    json all = json::object();
    for (long k = 2; k <= g->exponent; ++k) {
        json per_k = json::array();
        for (int i = 0; i < t.size(); ++i) {
            std::vector<long> m = decompose(adams(t.irr[i], k));
            text << "  k=" << k << " chi_" << i << ":";
            for (long c : m) text << " " << c;
            text << "\n";
            per_k.push_back(m);
        }
        all[std::to_string(k)] = per_k;
    }
    js["adams"] = all;
}

void local_section(std::ostringstream& text, json& js, const LocalExtensionData& d,
                   bool& checks_ok) {
    text << "residue characteristic p=" << d.p << ", f_abs=" << d.f_abs << "\n";
    text << "filtration orders:";
    json orders = json::array();
    for (const auto& lvl : d.filtration) {
        text << " " << lvl.size();
        orders.push_back(lvl.size());
    }
    if (d.filtration.empty()) text << " (unramified)";
    text << "\nfrobenius element: " << d.frobenius << "\n";
    js["p"] = d.p;
    js["f_abs"] = d.f_abs;
    js["filtration_orders"] = orders;
    js["frobenius"] = d.frobenius;

    long ordD = different_valuation(d);
    auto n = sqrt_inv_different(d);
    bool weak = is_weakly_ramified(d);
    text << "ord(D) = " << ordD << "\n";
    js["different_valuation"] = ordD;
    js["weakly_ramified"] = weak;
    text << "weakly ramified: " << (weak ? "yes" : "no") << "\n";
    if (n) {
        text << "sqrt inverse different: exists, n = " << *n << "\n";
        js["sqrt_inv_different"] = *n;
        bool cong = freeness_congruence(d);
        text << "freeness congruence n = 1 (mod |Gamma_1|): " << (cong ? "pass" : "FAIL") << "\n";
        js["freeness_congruence"] = cong;
        if (weak && !cong) checks_ok = false;
    } else {
        text << "sqrt inverse different: does not exist (ord(D) odd)\n";
        js["sqrt_inv_different"] = nullptr;
    }

    CentralElement y = equivariant_y(d);
    render_central(text, "unramified characteristic y:", y);
    js["y"] = central_json(y);
    CentralElement ty = twisted_y(d);
    render_central(text, "twisted characteristic (1 - psi_2*)(y):", ty);
    js["twisted_y"] = central_json(ty);
    if (closed_form_hypotheses_hold(d)) {
        CentralElement cf = closed_form_twisted_y(d);
        bool eq = cf == ty;
        text << "closed form (1-e_I) + sigma^-1 e_I matches: " << (eq ? "pass" : "FAIL") << "\n";
        js["closed_form_matches"] = eq;
        if (!eq) checks_ok = false;
    } else {
        text << "closed form hypotheses (odd inertia, abelian or odd order): not satisfied\n";
        js["closed_form_matches"] = nullptr;
    }
}

void tame_section(std::ostringstream& text, json& js, const TameAbelianLocalDatum& d,
                  bool& checks_ok) {
    text << "residue field: q = " << d.residue.q() << " (p=" << d.residue.p
         << ", f=" << d.residue.f << ")\n";
    text << "residue modulus coefficients:";
    for (long c : d.residue.modulus) text << " " << c;
    text << "\nresidue generator coefficients:";
    for (long c : d.residue.generator) text << " " << c;
    text << "\ninertia generator element: " << d.inertia_generator << "\n";
    js["residue"] = {{"p", d.residue.p},
                     {"f", d.residue.f},
                     {"modulus", d.residue.modulus},
                     {"generator", d.residue.generator}};
    js["inertia_generator"] = d.inertia_generator;

    CentralElement tau = equivariant_tau(d);
    render_central(text, "equivariant tau:", tau);
    js["tau"] = central_json(tau);
    CentralElement taup = modified_tau(d);
    render_central(text, "modified tau' = tau * y^-1:", taup);
    js["modified_tau"] = central_json(taup);
    CentralElement j2 = equivariant_J2(d);
    render_central(text, "J_2 = (psi_2* - 2)(tau):", j2);
    js["J2"] = central_json(j2);
    bool rational = is_rational_equivariant(j2);
    text << "J_2 rational-equivariant: " << (rational ? "pass" : "FAIL") << "\n";
    js["J2_rational_equivariant"] = rational;
    if (!rational) checks_ok = false;
}

void global_section(std::ostringstream& text, json& js, const GlobalExtensionData& d,
                    unsigned sign_cap, bool& checks_ok) {
    text << "places: " << d.places.size() << "\n";
    json places = json::array();
    for (const auto& pl : d.places) {
        text << "  place " << pl.label << ": decomposition order " << pl.decomp.elements.size()
             << ", p=" << pl.local.p << ", " << (pl.is_tame() ? "tame" : "wild") << "\n";
        places.push_back({{"label", pl.label},
                          {"decomp_order", pl.decomp.elements.size()},
                          {"p", pl.local.p},
                          {"tame", pl.is_tame()},
                          {"tame_abelian_realized", pl.tame_abelian.has_value()}});
    }
    js["places"] = places;

    CentralElement ty = global_twisted_y(d);
    render_central(text, "global twisted characteristic (both routes agree):", ty);
    js["global_twisted_y"] = central_json(ty);

    const CharacterTable& t = char_table(d.group);
    text << "symplectic signs:\n";
    json signs = json::array();
    bool all_known = true;
    for (int i = 0; i < t.size(); ++i) {
        SymplecticSign s = symplectic_sign(d, t.irr[i]);
        const char* render =
            s == SymplecticSign::Plus ? "+1" : (s == SymplecticSign::Minus ? "-1" : "unknown");
        text << "  chi_" << i << ": " << render << "\n";
        signs.push_back(render);
        if (s == SymplecticSign::Unknown) all_known = false;
    }
    js["symplectic_signs"] = signs;
    if (all_known) {
        CentralElement jj = equivariant_symplectic_J(d);
        render_central(text, "equivariant symplectic J:", jj);
        js["symplectic_J"] = central_json(jj);
        bool involutive = jj * jj == central_identity(d.group);
        bool rational = is_rational_equivariant(jj);
        text << "symplectic J squares to the identity: " << (involutive ? "pass" : "FAIL") << "\n";
        text << "symplectic J rational-equivariant: " << (rational ? "pass" : "FAIL") << "\n";
        js["symplectic_J_involutive"] = involutive;
        js["symplectic_J_rational_equivariant"] = rational;
        if (!involutive || !rational) checks_ok = false;
    } else {
        text << "equivariant symplectic J: skipped (a sign is unknown)\n";
    }
    (void)sign_cap;

    bool all_tame_realized = true;
    for (const auto& pl : d.places)
        if (!pl.tame_abelian) all_tame_realized = false;
    if (all_tame_realized) {
        CentralElement j2 = assemble_global_J2(d);
        render_central(text, "assembled global J_2:", j2);
        js["global_J2"] = central_json(j2);
        bool rational = is_rational_equivariant(j2);
        text << "global J_2 rational-equivariant: " << (rational ? "pass" : "FAIL") << "\n";
        js["global_J2_rational_equivariant"] = rational;
        if (!rational) checks_ok = false;
    } else {
        text << "assembled global J_2: skipped (a place lacks a tame abelian realization)\n";
    }
}

}  // namespace

Report run_report(const Descriptor& d, unsigned sign_cap_bits) {
    std::ostringstream text;
    json js;
    bool checks_ok = true;
    switch (d.kind) {
        case Descriptor::Kind::Group: {
            text << "== group report ==\n";
            js["kind"] = "group";
            group_section(text, js, d.group);
            adams_section(text, js, d.group);
            break;
        }
        case Descriptor::Kind::Local: {
            text << "== local extension report ==\n";
            js["kind"] = "local";
            group_section(text, js, d.local->gamma);
            local_section(text, js, *d.local, checks_ok);
            break;
        }
        case Descriptor::Kind::TameAbelian: {
            text << "== tame abelian local report ==\n";
            js["kind"] = "tame_abelian";
            group_section(text, js, d.tame->base.gamma);
            local_section(text, js, d.tame->base, checks_ok);
            tame_section(text, js, *d.tame, checks_ok);
            break;
        }
        case Descriptor::Kind::Global: {
            text << "== global extension report ==\n";
            js["kind"] = "global";
            group_section(text, js, d.global->group);
            global_section(text, js, *d.global, sign_cap_bits, checks_ok);
            break;
        }
    }
    Report r;
    r.text = text.str();
    r.structured = js.dump(2) + "\n";
    r.all_checks_passed = checks_ok;
    return r;
}

}  // namespace gjsum
