#include "aptrans/spec_io.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "json.hpp"

namespace aptrans {

namespace {

using nlohmann::json;

void require_object(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) throw InputError(where + ": expected an object");
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, _] : j.items())
        if (!ok.count(key)) throw InputError(where + ": unknown field \"" + key + "\"");
}

const json& field(const json& j, const char* key, const std::string& where) {
    const auto it = j.find(key);
    if (it == j.end()) throw InputError(where + ": missing field \"" + key + "\"");
    return *it;
}

std::int64_t as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
    return j.get<std::int64_t>();
}

int as_small_int(const json& j, const std::string& where) {
    const auto v = as_int(j, where);
    if (v < -1000000 || v > 1000000) throw InputError(where + ": integer out of range");
    return static_cast<int>(v);
}

Rational as_rational(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (!j.is_string()) throw InputError(where + ": expected an integer or a string \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw InputError(where + ": " + e.what());
    }
}

HalfInt as_half(const json& j, const std::string& where) {
    const auto r = as_rational(j, where);
    if (r.den() > 2) throw InputError(where + ": " + r.str() + " is not a half-integer");
    return HalfInt::from_rational(r);
}

std::pair<int, int> as_pair(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) throw InputError(where + ": expected [p, q]");
    return {as_small_int(j[0], where), as_small_int(j[1], where)};
}

ClassicalGroup parse_group(const json& j) {
    require_object(j, "group", {"kind", "rank", "signature"});
    const auto& k = field(j, "kind", "group");
    if (!k.is_string()) throw InputError("group.kind: expected a string");
    const auto name = k.get<std::string>();
    GroupKind kind;
    if (name == "Sp") kind = GroupKind::Sp;
    else if (name == "SOodd") kind = GroupKind::SOodd;
    else if (name == "SOeven") kind = GroupKind::SOeven;
    else throw InputError("group.kind: unknown kind \"" + name + "\"");
    const int rank = as_small_int(field(j, "rank", "group"), "group.rank");
    std::optional<std::pair<int, int>> sig;
    if (j.contains("signature")) sig = as_pair(j["signature"], "group.signature");
    return ClassicalGroup(kind, rank, sig);
}

std::vector<Block> parse_blocks(const json& j) {
    if (!j.is_array()) throw InputError("blocks: expected an array");
    std::vector<Block> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto where = "blocks[" + std::to_string(i) + "]";
        const auto& b = j[i];
        require_object(b, where, {"t", "a", "eta", "mult"});
        Block blk;
        blk.t = as_half(field(b, "t", where), where + ".t");
        blk.a = as_small_int(field(b, "a", where), where + ".a");
        if (b.contains("mult")) blk.mult = as_small_int(b["mult"], where + ".mult");
        if (b.contains("eta")) {
            if (!b["eta"].is_string()) throw InputError(where + ".eta: expected \"+\" or \"-\"");
            const auto e = b["eta"].get<std::string>();
            if (e == "+") blk.eta = 1;
            else if (e == "-" || e == "−") blk.eta = -1;
            else throw InputError(where + ".eta: expected \"+\" or \"-\"");
        }
        out.push_back(blk);
    }
    return out;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

SpecOptions parse_options(const json& j) {
    require_object(j, "options", {"offsets", "seed", "height_bound", "threshold"});
    SpecOptions o;
    if (j.contains("offsets")) {
        const auto& a = j["offsets"];
        if (!a.is_array()) throw InputError("options.offsets: expected an array");
        std::vector<Rational> v;
        for (const auto& x : a) v.push_back(as_rational(x, "options.offsets"));
        o.offsets = std::move(v);
    }
    if (j.contains("seed")) {
        const auto s = as_int(j["seed"], "options.seed");
        if (s < 0) throw InputError("options.seed: must be non-negative");
        o.seed = static_cast<std::uint64_t>(s);
    }
    if (j.contains("height_bound")) o.height_bound = as_int(j["height_bound"], "options.height_bound");
    if (j.contains("threshold")) o.threshold = as_int(j["threshold"], "options.threshold");
    return o;
}

Character parse_eps(const json& j, std::size_t rank, const std::string& where) {
    Character c;
    if (j.is_string()) {
        for (char ch : j.get<std::string>()) {
            if (ch == '+') c.values.push_back(1);
            else if (ch == '-') c.values.push_back(-1);
            else throw InputError(where + ": expected a string of '+' and '-'");
        }
    } else if (j.is_array()) {
        for (const auto& x : j) {
            const auto v = as_int(x, where);
            if (v != 1 && v != -1) throw InputError(where + ": entries must be 1 or -1");
            c.values.push_back(static_cast<int>(v));
        }
    } else {
        throw InputError(where + ": expected a sign string or an array of +-1");
    }
    if (c.values.size() != rank)
        throw InputError(where + ": expected " + std::to_string(rank) + " signs, got " + std::to_string(c.values.size()));
    return c;
}

ClassicalGroup default_g0(const ClassicalGroup& g, const std::vector<std::pair<int, int>>& unitary) {
    int sp = 0, sq = 0;
    for (const auto& [p, q] : unitary) {
        sp += p;
        sq += q;
    }
    const int n0 = g.rank() - sp - sq;
    if (g.kind() == GroupKind::Sp) return ClassicalGroup(GroupKind::Sp, n0);
    return ClassicalGroup(g.kind(), n0, std::pair{g.p() - 2 * sp, g.q() - 2 * sq});
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(Rational::parse(item));
        } catch (const std::exception& e) {
            throw InputError("bad number \"" + item + "\": " + e.what());
        }
    }
    if (out.empty()) throw InputError("empty list");
    return out;
}

Spec parse_spec(const std::string& text) {
    const auto j = parse_json(text);
    require_object(j, "spec", {"group", "blocks", "options"});
    const auto g = parse_group(field(j, "group", "spec"));
    auto blocks = parse_blocks(field(j, "blocks", "spec"));
    SpecOptions o;
    if (j.contains("options")) o = parse_options(j["options"]);
    return Spec{ArthurParameter(g, std::move(blocks)), std::move(o)};
}

Spec load_spec(const std::string& path) { return parse_spec(read_file(path)); }

PacketData parse_plus_packet(const std::string& text) {
    const auto j = parse_json(text);
    require_object(j, "plus-packet", {"group", "blocks", "entries"});
    const ArthurParameter plus(parse_group(field(j, "group", "plus-packet")),
                               parse_blocks(field(j, "blocks", "plus-packet")));
    const auto a = component_group(plus);
    const auto& es = field(j, "entries", "plus-packet");
    if (!es.is_array()) throw InputError("entries: expected an array");
    PacketData out{plus, {}, {}};
    for (std::size_t i = 0; i < es.size(); ++i) {
        const auto where = "entries[" + std::to_string(i) + "]";
        const auto& e = es[i];
        require_object(e, where, {"levi", "g0", "eps", "sigma", "t_tilde"});
        const auto& lv = field(e, "levi", where);
        if (!lv.is_array()) throw InputError(where + ".levi: expected an array of [p, q]");
        LeviDatum levi{{}, ClassicalGroup(GroupKind::Sp, 0)};
        for (const auto& pq : lv) levi.unitary.push_back(as_pair(pq, where + ".levi"));
        levi.g0 = default_g0(plus.group(), levi.unitary);
        if (e.contains("g0")) levi.g0 = levi.g0.with_rank(levi.g0.rank(), as_pair(e["g0"], where + ".g0"));
        std::optional<Sigma> sigma;
        if (e.contains("sigma")) {
            const auto& s = e["sigma"];
            require_object(s, where + ".sigma", {"label", "nu", "weakly_unipotent"});
            Sigma sg;
            const auto& lab = field(s, "label", where + ".sigma");
            if (!lab.is_string()) throw InputError(where + ".sigma.label: expected a string");
            sg.label = lab.get<std::string>();
            if (s.contains("nu")) {
                if (!s["nu"].is_array()) throw InputError(where + ".sigma.nu: expected an array");
                std::vector<HalfInt> nu;
                for (const auto& x : s["nu"]) nu.push_back(as_half(x, where + ".sigma.nu"));
                sg.nu = Weight(std::move(nu));
            }
            if (s.contains("weakly_unipotent")) {
                if (!s["weakly_unipotent"].is_boolean())
                    throw InputError(where + ".sigma.weakly_unipotent: expected a boolean");
                sg.weakly_unipotent = s["weakly_unipotent"].get<bool>();
            }
            sigma = std::move(sg);
        }
        auto datum = make_datum(plus, levi, sigma);
        if (e.contains("t_tilde")) {
            const auto& tt = e["t_tilde"];
            if (!tt.is_array()) throw InputError(where + ".t_tilde: expected an array");
            std::vector<std::int64_t> given;
            for (const auto& x : tt) given.push_back(as_int(x, where + ".t_tilde"));
            if (given != datum.t_tilde) throw InputError(where + ".t_tilde does not match the parameter");
        }
        out.entries.push_back({std::move(datum), parse_eps(field(e, "eps", where), a.rank(), where + ".eps")});
    }
    return out;
}

PacketData load_plus_packet(const std::string& path) { return parse_plus_packet(read_file(path)); }

}  // namespace aptrans
