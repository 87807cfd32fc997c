#include "gjsum/descriptor.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "gjsum/errors.hpp"

namespace gjsum {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw input_error("descriptor: " + where + ": " + what);
}

const json& need(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) fail(where, std::string("missing field '") + key + "'");
    return j.at(key);
}

long need_int(const json& j, const char* key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_number_integer()) fail(where, std::string("field '") + key + "' must be an integer");
    return v.get<long>();
}

std::vector<int> int_list(const json& v, const std::string& where) {
    if (!v.is_array()) fail(where, "expected an array of element indices");
    std::vector<int> out;
    for (const auto& e : v) {
        if (!e.is_number_integer()) fail(where, "element indices must be integers");
        out.push_back(e.get<int>());
    }
    return out;
}

GroupRef parse_group(const json& j, const std::string& where) {
    if (!j.is_object()) fail(where, "group must be an object");
    if (j.contains("table")) {
        const json& t = j.at("table");
        if (!t.is_array()) fail(where, "table must be an array of rows");
        std::vector<std::vector<int>> rows;
        for (const auto& r : t) rows.push_back(int_list(r, where + ".table"));
        return make_group(FiniteGroup::from_table(std::move(rows)));
    }
    if (!j.contains("family")) fail(where, "group needs either 'family' or 'table'");
    std::string family = j.at("family").get<std::string>();
    if (family == "product") {
        const json& f = need(j, "factors", where);
        if (!f.is_array() || f.size() != 2) fail(where, "product needs exactly two factors");
        GroupRef a = parse_group(f[0], where + ".factors[0]");
        GroupRef b = parse_group(f[1], where + ".factors[1]");
        return make_group(FiniteGroup::direct_product(a->group, b->group));
    }
    std::vector<long> params;
    const json& p = need(j, "parameters", where);
    if (!p.is_array()) fail(where, "'parameters' must be an array");
    for (const auto& e : p) params.push_back(e.get<long>());
    auto want = [&](size_t n) {
        if (params.size() != n)
            fail(where, "family '" + family + "' takes " + std::to_string(n) + " parameter(s)");
    };
    try {
        if (family == "cyclic") {
            want(1);
            return make_group(FiniteGroup::cyclic(params[0]));
        }
        if (family == "dihedral") {
            want(1);
            return make_group(FiniteGroup::dihedral(params[0]));
        }
        if (family == "quaternion") {
            want(1);
            return make_group(FiniteGroup::quaternion(params[0]));
        }
        if (family == "metacyclic") {
            want(3);
            return make_group(FiniteGroup::metacyclic(params[0], params[1], params[2]));
        }
    } catch (const input_error& e) {
        fail(where, e.what());
    }
    fail(where, "unknown family '" + family + "'");
}

LocalExtensionData parse_local_payload(const json& j, GroupRef gamma, const std::string& where) {
    long p = need_int(j, "p", where);
    long f_abs = j.contains("f_abs") ? need_int(j, "f_abs", where) : 1;
    const json& filt = need(j, "filtration", where);
    if (!filt.is_array()) fail(where, "'filtration' must be a list of element lists");
    std::vector<std::vector<int>> chain;
    for (const auto& lvl : filt) chain.push_back(int_list(lvl, where + ".filtration"));
    int frob = static_cast<int>(need_int(j, "frobenius", where));
    return make_local_extension(std::move(gamma), p, f_abs, std::move(chain), frob);
}

FiniteFieldData parse_residue(const json& j, const std::string& where) {
    return finite_field(need_int(j, "p", where), need_int(j, "f", where));
}

}  // namespace

Descriptor parse_descriptor(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("descriptor: JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw input_error("descriptor: top level must be an object");
    std::string kind = need(j, "kind", "top").get<std::string>();
    const json& payload = need(j, "payload", "top");

    Descriptor d;
    d.echo = j.dump(2);
    if (kind == "group") {
        d.kind = Descriptor::Kind::Group;
        d.group = parse_group(need(payload, "group", "payload"), "payload.group");
        return d;
    }
    if (kind == "local" || kind == "tame_abelian") {
        GroupRef g = parse_group(need(payload, "group", "payload"), "payload.group");
        LocalExtensionData local = parse_local_payload(payload, g, "payload");
        if (kind == "local") {
            d.kind = Descriptor::Kind::Local;
            d.local = std::move(local);
            return d;
        }
        d.kind = Descriptor::Kind::TameAbelian;
        d.tame = make_tame_abelian(std::move(local),
                                   parse_residue(need(payload, "residue", "payload"), "payload.residue"));
        return d;
    }
    if (kind == "global") {
        d.kind = Descriptor::Kind::Global;
        GroupRef g = parse_group(need(payload, "group", "payload"), "payload.group");
        std::vector<PlaceRecord> places;
        const json& pl = need(payload, "places", "payload");
        if (!pl.is_array()) throw input_error("descriptor: 'places' must be an array");
        for (size_t i = 0; i < pl.size(); ++i) {
            const std::string where = "payload.places[" + std::to_string(i) + "]";
            const json& rec = pl[i];
            PlaceRecord place;
            place.label = rec.contains("label") ? rec.at("label").get<std::string>()
                                                : "v" + std::to_string(i);
            place.decomp = subgroup_from_elements(g, int_list(need(rec, "decomp", where), where));
            // Filtration and Frobenius in a place's local block use parent
            // element indices; translate into the subgroup's own numbering.
            const json& loc = need(rec, "local", where);
            json translated = loc;
            if (loc.contains("filtration")) {
                json filt = json::array();
                for (const auto& lvl : loc.at("filtration")) {
                    json tl = json::array();
                    for (int e : int_list(lvl, where + ".local.filtration"))
                        tl.push_back(place.decomp.index_of(e));
                    filt.push_back(tl);
                }
                translated["filtration"] = filt;
            }
            if (loc.contains("frobenius"))
                translated["frobenius"] =
                    place.decomp.index_of(static_cast<int>(need_int(loc, "frobenius", where)));
            place.local =
                parse_local_payload(translated, place.decomp.group, where + ".local");
            if (rec.contains("residue"))
                place.tame_abelian = make_tame_abelian(
                    place.local, parse_residue(rec.at("residue"), where + ".residue"));
            places.push_back(std::move(place));
        }
        d.global = make_global(std::move(g), std::move(places));
        return d;
    }
    throw input_error("descriptor: unknown kind '" + kind + "'");
}

Descriptor parse_descriptor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("descriptor: cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_descriptor(buf.str());
}

}  // namespace gjsum
