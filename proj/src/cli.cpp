#include "aptrans/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "aptrans/aq.hpp"
#include "aptrans/arthur.hpp"
#include "aptrans/corpus.hpp"
#include "aptrans/spec_io.hpp"
#include "aptrans/sweeps.hpp"
#include "aptrans/torus.hpp"
#include "aptrans/twisted.hpp"

namespace aptrans {

using nlohmann::json;

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t h) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string sci3(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

namespace {

constexpr std::uint64_t kDefaultSeed = 1;
constexpr double kResidualTolerance = 1e-9;
constexpr int kGridMaxN = 6;
constexpr int kGridBound = 3;
constexpr int kDefaultTwistedTrials = 100;
constexpr int kDefaultRandomTrials = 10000;

struct Options {
    std::string spec_path;
    std::string plus_packet_path;
    std::string offsets;
    std::uint64_t seed = kDefaultSeed;
    int trials = 0;
    std::int64_t height_bound = -1;
    std::int64_t threshold = 0;
    std::string format = "json";
    int n = 0;
    std::string mu;
    int endo_rank = 0;
    int workers = 1;
    std::string suite;

    CLI::Option* seed_opt = nullptr;
    CLI::Option* trials_opt = nullptr;
    CLI::Option* height_opt = nullptr;
    CLI::Option* threshold_opt = nullptr;
    CLI::Option* n_opt = nullptr;
    CLI::Option* endo_opt = nullptr;
};

/// Results plus the violations they produced.
struct Outcome {
    json results = json::object();
    std::vector<std::string> violations;

    void merge(const std::string& key, Outcome o) {
        results[key] = std::move(o.results);
        for (auto& v : o.violations) violations.push_back(key + ": " + v);
    }
};

/// Options resolved against the spec file, if any.
struct Context {
    const Options& opt;
    std::optional<Spec> spec;

    const ArthurParameter& psi() const {
        if (!spec) throw InputError("this command needs --spec");
        return spec->psi;
    }
    std::uint64_t seed() const {
        if (opt.seed_opt->count()) return opt.seed;
        if (spec && spec->options.seed) return *spec->options.seed;
        return kDefaultSeed;
    }
    Threshold threshold() const {
        if (opt.threshold_opt->count()) return opt.threshold;
        return spec ? spec->options.threshold : Threshold{};
    }
    std::int64_t height_bound() const {
        if (opt.height_opt->count()) return opt.height_bound;
        if (spec && spec->options.height_bound) return *spec->options.height_bound;
        return -1;
    }
    int trials(int fallback) const {
        if (!opt.trials_opt->count()) return fallback;
        if (opt.trials < 0) throw InputError("--trials must be non-negative");
        return opt.trials;
    }
    /// ψ₊ from --offsets, the spec's offsets or the canonical ones.
    ArthurParameter dominating() const {
        const auto& p = psi();
        if (!good_parity(p).good) throw InputError("parameter is not of good parity");
        if (!opt.offsets.empty()) {
            const auto t = parse_rational_list(opt.offsets);
            return dominate(p, t, threshold());
        }
        if (spec->options.offsets) return dominate(p, *spec->options.offsets, threshold());
        return dominate(p, canonical_offsets(p, threshold()), threshold());
    }
};

json int_list(const std::vector<std::int64_t>& v) {
    json a = json::array();
    for (auto x : v) a.push_back(x);
    return a;
}

std::string threshold_str(Threshold t) { return t ? std::to_string(*t) : "n*"; }

json group_json(const ClassicalGroup& g) {
    json j{{"name", g.name()}, {"kind", g.kind_name()}, {"rank", g.rank()}};
    if (g.kind() != GroupKind::Sp) j["signature"] = json::array({g.p(), g.q()});
    return j;
}

std::int64_t max_offset(const std::vector<std::int64_t>& t) {
    std::int64_t m = 0;
    for (auto x : t) m = std::max(m, x);
    return m;
}

// ------------------------------------------------------------------ commands

Outcome cmd_info(const Context& c) {
    const auto& psi = c.psi();
    Outcome o;
    o.results["group"] = group_json(psi.group());
    o.results["parameter"] = psi.str();
    o.results["dimension"] = psi.dimension();
    o.results["nstar"] = psi.group().nstar();
    o.results["unitary_rank"] = psi.unitary_rank();
    json blocks = json::array();
    for (const auto& b : psi.blocks())
        blocks.push_back({{"t", b.t.str()}, {"a", b.a}, {"eta", b.eta > 0 ? "+" : "-"}, {"mult", b.mult}});
    o.results["blocks"] = blocks;
    const auto par = good_parity(psi);
    json pb = json::array();
    for (const auto& b : par.blocks) pb.push_back({{"block", b.block.str()}, {"good", b.good}, {"reason", b.reason}});
    o.results["parity"] = {{"good", par.good}, {"blocks", pb}};
    if (par.good) {
        const auto a = component_group(psi);
        o.results["component_group"] = {{"rank", a.rank()}, {"order", a.order()}};
    }
    return o;
}

Outcome cmd_infchar(const Context& c) {
    const auto& psi = c.psi();
    Outcome o;
    const auto g = inf_char(psi, Side::G).data;
    const auto gl = inf_char(psi, Side::GL).data;
    const auto tr = transfer_infchar(g, psi.group());
    o.results["g_side"] = g.str();
    o.results["gl_side"] = gl.str();
    o.results["aligned_layout"] = aligned_gl_layout(psi).str();
    o.results["transfer"] = tr.str();
    o.results["norm_sq_g"] = norm_sq(g).str();
    o.results["norm_sq_gl"] = norm_sq(gl).str();
    json lt = json::array();
    for (const auto& x : lambda_tilde_values(psi)) lt.push_back(x.str());
    o.results["lambda_tilde"] = lt;
    if (tr != gl) o.violations.push_back("transfer of the G-side character " + tr.str() + " differs from " + gl.str());
    if (norm_sq(gl) != Rational(2) * norm_sq(g)) o.violations.push_back("GL-side norm is not twice the G-side norm");
    return o;
}

Outcome cmd_dominate(const Context& c) {
    const auto& psi = c.psi();
    const auto plus = c.dominating();
    const auto td = translation_weight(psi, plus);
    Outcome o;
    o.results["parameter"] = psi.str();
    o.results["dominating"] = plus.str();
    o.results["offsets"] = int_list(td.offsets);
    o.results["threshold"] = threshold_str(c.threshold());
    o.results["lambda_gl"] = td.lambda_gl.str();
    o.results["lambda_g"] = td.lambda_g.str();
    return o;
}

json uniqueness_json(const UniquenessReport& r) {
    json m = json::array();
    for (const auto& w : r.matches) m.push_back(w.str());
    return {{"nu_plus", r.nu_plus.str()}, {"expected", r.expected.str()},        {"matches", m},
            {"rearrangements", r.rearrangements}, {"unique", r.unique}};
}

json quotient_json(const QuotientMap& q) {
    return {{"source_order", q.source().order()}, {"target_order", q.target().order()},
            {"kernel_order", q.kernel().size()},   {"surjective", q.is_surjective()},
            {"homomorphism", q.is_homomorphism()}};
}

Outcome cmd_translate(const Context& c) {
    const auto& psi = c.psi();
    const auto plus = c.dominating();
    const auto td = translation_weight(psi, plus);
    Outcome o;
    o.results["parameter"] = psi.str();
    o.results["dominating"] = plus.str();
    o.results["offsets"] = int_list(td.offsets);
    o.results["lambda_gl"] = td.lambda_gl.str();
    const auto u = uniqueness_check(psi, plus);
    o.results["uniqueness"] = uniqueness_json(u);
    if (!u.unique) o.violations.push_back("translated character is not unique (" + std::to_string(u.matches.size()) + " matches)");
    const auto q = quotient_map(plus, psi);
    o.results["quotient"] = quotient_json(q);
    if (!q.is_surjective()) o.violations.push_back("A(psi+) -> A(psi) is not surjective");
    if (!q.is_homomorphism()) o.violations.push_back("A(psi+) -> A(psi) is not a homomorphism");
    json levis = json::array();
    for (const auto& l : enumerate_levis(plus)) {
        const auto d = make_datum(plus, l);
        const auto r = range_check(d);
        levis.push_back({{"levi", l.str()}, {"t_tilde", int_list(d.t_tilde)}, {"range", range_name(r)}});
        if (r != Range::good) o.violations.push_back(d.label() + " is not in the good range");
    }
    o.results["levis"] = levis;
    return o;
}

Outcome cmd_packet(const Context& c) {
    if (c.opt.plus_packet_path.empty()) throw InputError("packet needs --plus-packet");
    const auto& psi = c.psi();
    const auto plus = load_plus_packet(c.opt.plus_packet_path);
    const auto out = translate_packet(plus, psi);
    Outcome o;
    o.results["parameter"] = psi.str();
    o.results["dominating"] = plus.psi.str();
    o.results["offsets"] = int_list(domination_offsets(psi, plus.psi));
    json entries = json::array();
    for (const auto& e : out.entries)
        entries.push_back({{"label", e.label()}, {"levi", e.datum.levi.str()}, {"t_tilde", int_list(e.datum.t_tilde)},
                           {"eps", e.eps.str()}, {"range", range_name(range_check(e.datum))}});
    json vanishing = json::array();
    for (const auto& v : out.vanishing) vanishing.push_back({{"label", v.label}, {"note", v.note}});
    o.results["entries"] = entries;
    o.results["vanishing"] = vanishing;
    o.results["counts"] = {{"plus", plus.entries.size()}, {"translated", out.entries.size()}, {"vanishing", out.vanishing.size()}};
    return o;
}

// ------------------------------------------------------------ verify suites

Outcome verify_uniqueness(const Context& c) {
    Outcome o;
    if (c.spec) {
        const auto& psi = c.psi();
        const auto plus = c.dominating();
        o.results["parameter"] = psi.str();
        o.results["dominating"] = plus.str();
        o.results["offsets"] = int_list(domination_offsets(psi, plus));
        const auto r = uniqueness_check(psi, plus);
        o.results["check"] = uniqueness_json(r);
        if (!r.unique) o.violations.push_back(psi.str() + ": " + std::to_string(r.matches.size()) + " matches");
        return o;
    }
    const auto rows = sweep_uniqueness(parameter_corpus(), c.threshold(), c.opt.workers);
    std::uint64_t total = 0, most = 0;
    std::size_t bad = 0;
    for (const auto& r : rows) {
        total += r.rearrangements;
        most = std::max(most, r.rearrangements);
        if (!r.unique) {
            ++bad;
            o.violations.push_back(r.psi + ": " + std::to_string(r.matches) + " matches");
        }
    }
    o.results = {{"parameters", rows.size()}, {"non_unique", bad}, {"threshold", threshold_str(c.threshold())},
                 {"rearrangements_total", total}, {"rearrangements_max", most}};
    return o;
}

/// (n, μ) from --n / --mu; empty μ means the whole grid for that n.
std::pair<int, std::optional<Weight>> twisted_target(const Context& c) {
    std::optional<Weight> mu;
    if (!c.opt.mu.empty()) {
        std::vector<HalfInt> v;
        for (const auto& r : parse_rational_list(c.opt.mu)) {
            if (!r.is_integer()) throw InputError("--mu entries must be integers");
            v.emplace_back(r.num());
        }
        mu = Weight(std::move(v));
    }
    int n = c.opt.n_opt->count() ? c.opt.n : (mu ? static_cast<int>(mu->size()) : 0);
    if (mu && static_cast<int>(mu->size()) != n) throw InputError("--mu has length " + std::to_string(mu->size()) + ", --n is " + std::to_string(n));
    if (c.opt.n_opt->count() && n < 1) throw InputError("--n must be positive");
    if (mu) {
        for (std::size_t i = 1; i < mu->size(); ++i)
            if ((*mu)[i - 1] < (*mu)[i]) throw InputError("--mu must be non-increasing");
        if (!is_theta_invariant(*mu)) throw InputError("--mu is not theta-invariant");
    }
    return {n, mu};
}

Outcome verify_twisted(const Context& c) {
    const auto [n, mu] = twisted_target(c);
    const int trials = c.trials(kDefaultTwistedTrials);
    const auto seed = c.seed();
    Outcome o;
    std::vector<TwistedRow> rows;
    if (mu) {
        const int r = c.opt.endo_opt->count() ? c.opt.endo_rank : n / 2;
        if (r < 0 || 2 * r > n) throw InputError("--endo-rank must lie in [0, n/2]");
        rows.push_back(TwistedRow{*mu, r, trials, verify_transfer_identity(*mu, r, trials, seed), 0, 0});
    } else {
        for (auto& row : sweep_twisted(n > 0 ? n : kGridMaxN, kGridBound, trials, seed, c.opt.workers))
            if (n == 0 || row.mu.size() == static_cast<std::size_t>(n)) rows.push_back(std::move(row));
    }
    double worst = 0.0;
    std::string worst_mu;
    for (const auto& r : rows) {
        if (r.max_residual >= worst) {
            worst = r.max_residual;
            worst_mu = r.mu.str();
        }
        if (!(r.max_residual <= kResidualTolerance))
            o.violations.push_back("mu=" + r.mu.str() + " endo_rank=" + std::to_string(r.endo_rank) +
                                   " residual " + sci3(r.max_residual));
    }
    o.results = {{"weights", rows.size()}, {"trials", trials},       {"max_residual", sci3(worst)},
                 {"worst_mu", worst_mu},    {"tolerance", sci3(kResidualTolerance)}};
    if (mu) o.results["endo_rank"] = rows.front().endo_rank;
    return o;
}

Outcome verify_kostant(const Context& c) {
    const auto [n, mu] = twisted_target(c);
    std::vector<Weight> grid;
    if (mu) grid.push_back(*mu);
    else
        for (int k = n > 0 ? n : 1; k <= (n > 0 ? n : kGridMaxN); ++k)
            for (auto& w : theta_invariant_weights(k, kGridBound)) grid.push_back(std::move(w));
    Outcome o;
    std::size_t stable = 0, fixed = 0;
    for (const auto& w : grid) {
        const auto r = kostant_theta_invariance(w);
        stable += r.stable_cosets;
        fixed += r.fixed_reps;
        if (!r.ok())
            o.violations.push_back("mu=" + w.str() + ": " + std::to_string(r.fixed_reps) + " of " +
                                   std::to_string(r.stable_cosets) + " stable cosets have fixed representatives");
    }
    o.results = {{"weights", grid.size()}, {"stable_cosets", stable}, {"fixed_representatives", fixed}};
    return o;
}

Outcome verify_filtration(const Context& c) {
    Outcome o;
    if (c.spec) {
        const auto& psi = c.psi();
        const auto plus = c.dominating();
        const auto t = domination_offsets(psi, plus);
        const auto hb = c.height_bound() >= 0 ? c.height_bound() : 2 * max_offset(t);
        o.results["parameter"] = psi.str();
        o.results["dominating"] = plus.str();
        o.results["height_bound"] = hb;
        json levis = json::array();
        for (const auto& l : enumerate_levis(plus)) {
            const auto r = filtration_vanishing(make_datum(plus, l), psi, hb);
            levis.push_back({{"levi", l.str()}, {"enumerated", r.enumerated}, {"nonzero_mu1", r.nonzero_mu1},
                             {"violations", r.violations.size()}, {"lambda", r.lambda.str()}, {"delta_l1", r.delta_l1.str()}});
            for (const auto& v : r.violations) o.violations.push_back(l.str() + " mu=" + v.mu.str() + ": " + v.reason);
        }
        o.results["levis"] = levis;
        return o;
    }
    const auto hb = c.height_bound();
    const auto rows = sweep_filtration(parameter_corpus(), hb, c.opt.workers);
    std::size_t levis = 0, enumerated = 0, nonzero = 0;
    for (const auto& r : rows) {
        levis += r.levis;
        enumerated += r.enumerated;
        nonzero += r.nonzero_mu1;
        for (const auto& v : r.violations) o.violations.push_back(r.psi + " " + v);
    }
    o.results = {{"parameters", rows.size()}, {"levis", levis}, {"enumerated", enumerated}, {"nonzero_mu1", nonzero},
                 {"height_bound", hb >= 0 ? std::to_string(hb) : "2*max T"}};
    return o;
}

constexpr GroupKind kKinds[] = {GroupKind::Sp, GroupKind::SOodd, GroupKind::SOeven};

Outcome random_suite(const Context& c, RandomSweep (*sweep)(GroupKind, std::size_t, std::uint64_t)) {
    Outcome o;
    const auto trials = static_cast<std::size_t>(c.trials(kDefaultRandomTrials));
    for (auto k : kKinds) {
        const auto r = sweep(k, trials, c.seed());
        const auto name = ClassicalGroup(k, 1).kind_name();
        o.results[name] = {{"trials", r.trials}, {"failures", r.failures.size()}};
        for (const auto& f : r.failures) o.violations.push_back(name + ": " + f);
    }
    return o;
}

Outcome verify_parity(const Context& c) {
    if (!c.spec) return random_suite(c, sweep_parity);
    const auto& psi = c.psi();
    Outcome o;
    const auto par = good_parity(psi);
    json blocks = json::array();
    for (const auto& b : par.blocks) {
        blocks.push_back({{"block", b.block.str()}, {"good", b.good}, {"reason", b.reason}});
        if (!b.good) o.violations.push_back(b.block.str() + ": " + b.reason);
    }
    bool integral = true;
    json lt = json::array();
    for (const auto& x : lambda_tilde_values(psi)) {
        lt.push_back(x.str());
        integral = integral && x.is_integer();
    }
    o.results = {{"parameter", psi.str()}, {"good", par.good}, {"blocks", blocks}, {"lambda_tilde", lt}, {"integral", integral}};
    if (par.good != integral) o.violations.push_back("parity and integrality of t~ disagree");
    return o;
}

Outcome verify_norms(const Context& c) {
    if (!c.spec) return random_suite(c, sweep_norms);
    const auto& psi = c.psi();
    const auto g = inf_char(psi, Side::G).data;
    const auto gl = transfer_infchar(g, psi.group());
    Outcome o;
    o.results = {{"parameter", psi.str()}, {"g_side", g.str()}, {"gl_side", gl.str()},
                 {"norm_sq_g", norm_sq(g).str()}, {"norm_sq_gl", norm_sq(gl).str()}};
    if (norm_sq(gl) != Rational(2) * norm_sq(g)) o.violations.push_back("GL-side norm is not twice the G-side norm");
    return o;
}

using Suite = Outcome (*)(const Context&);

const std::map<std::string, Suite>& suites() {
    static const std::map<std::string, Suite> m{
        {"uniqueness", verify_uniqueness}, {"twisted-trace", verify_twisted}, {"filtration", verify_filtration},
        {"parity", verify_parity},         {"norms", verify_norms},          {"kostant", verify_kostant}};
    return m;
}

Outcome verify_all(const Context& c) {
    Outcome o;
    for (const auto& [name, run] : suites()) o.merge(name, run(c));
    return o;
}

// ------------------------------------------------------------------ report

void flatten(const json& j, const std::string& prefix, std::ostringstream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); })) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

std::string render(const json& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    std::ostringstream out;
    out << "command: " << report["command"].get<std::string>() << "\n";
    out << "input_hash: " << report["input_hash"].get<std::string>() << "\n";
    out << "seed: " << report["seed"].get<std::uint64_t>() << "\n";
    flatten(report["results"], "", out);
    out << "violations: " << report["violations"].size() << "\n";
    for (const auto& v : report["violations"]) out << "  - " << v.get<std::string>() << "\n";
    out << "verdict: " << report["verdict"].get<std::string>() << "\n";
    return out.str();
}

/// Arguments minus --workers, which must not affect the report.
std::vector<std::string> echo_args(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--workers") {
            ++i;
            continue;
        }
        if (args[i].rfind("--workers=", 0) == 0) continue;
        out.push_back(args[i]);
    }
    return out;
}

std::string input_hash(const std::vector<std::string>& echoed, const Options& opt) {
    std::uint64_t h = fnv1a("");
    for (const auto& a : echoed) h = fnv1a(a + '\0', h);
    if (!opt.spec_path.empty()) h = fnv1a(read_file(opt.spec_path), h);
    if (!opt.plus_packet_path.empty()) h = fnv1a(read_file(opt.plus_packet_path), h);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--spec", o.spec_path, "Parameter spec (JSON)");
    sub->add_option("--offsets", o.offsets, "Comma-separated translation offsets T_i");
    o.threshold_opt = sub->add_option("--threshold", o.threshold, "Minimum gap of the dominating parameter (default n*)");
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--workers", o.workers, "Worker threads for sweeps")->check(CLI::PositiveNumber);
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CliResult res;
    CLI::App app{"Arthur-packet translation toolkit for real classical groups", "aptrans"};
    app.require_subcommand(1);

    auto* info = app.add_subcommand("info", "Parameter summary: dimension, parity, A(psi)");
    auto* infchar = app.add_subcommand("infchar", "Infinitesimal characters on both sides");
    auto* dom = app.add_subcommand("dominate", "Dominating parameter and translation weight");
    auto* tr = app.add_subcommand("translate", "Translation datum, uniqueness, A(psi+) -> A(psi) and Levi data");
    auto* pk = app.add_subcommand("packet", "Translate dominating packet data down to the parameter");
    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    // Each subcommand owns its option objects; `opt` collects whichever one ran.
    std::vector<Options> per(6);
    CLI::App* subs[] = {info, infchar, dom, tr, pk, ver};
    for (std::size_t i = 0; i < 6; ++i) {
        auto& o = per[i];
        o.workers = available_workers();
        add_common(subs[i], o);
        o.seed_opt = subs[i]->add_option("--seed", o.seed, "Seed for randomized checks (default 1)");
        o.trials_opt = subs[i]->add_option("--trials", o.trials, "Trials per weight / random cases per kind");
        o.height_opt = subs[i]->add_option("--height-bound", o.height_bound, "Height bound for filtration weights");
        o.n_opt = subs[i]->add_option("--n", o.n, "GL(n) size for twisted checks");
        subs[i]->add_option("--mu", o.mu, "Comma-separated theta-invariant dominant weight");
        o.endo_opt = subs[i]->add_option("--endo-rank", o.endo_rank, "Rank r of the endoscopic factor SO(2r+1)");
    }
    pk->add_option("--plus-packet", per[4].plus_packet_path, "Packet data of the dominating parameter (JSON)");
    ver->add_option("suite", per[5].suite, "uniqueness|twisted-trace|filtration|parity|norms|kostant|all")
        ->required()
        ->check(CLI::IsMember({"uniqueness", "twisted-trace", "filtration", "parity", "norms", "kostant", "all"}));

    std::vector<std::string> argv_store{"aptrans"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    std::ostringstream out, err;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        res.out = out.str();
        res.err = err.str();
        res.exit_code = code == 0 ? 0 : 2;
        return res;
    }

    std::size_t which = 0;
    while (!subs[which]->parsed()) ++which;
    const auto& o = per[which];
    try {
        Context ctx{o, {}};
        if (!o.spec_path.empty()) ctx.spec = load_spec(o.spec_path);
        Outcome outcome;
        std::string command = subs[which]->get_name();
        switch (which) {
        case 0: outcome = cmd_info(ctx); break;
        case 1: outcome = cmd_infchar(ctx); break;
        case 2: outcome = cmd_dominate(ctx); break;
        case 3: outcome = cmd_translate(ctx); break;
        case 4: outcome = cmd_packet(ctx); break;
        default:
            command += " " + o.suite;
            outcome = o.suite == "all" ? verify_all(ctx) : suites().at(o.suite)(ctx);
        }
        const auto echoed = echo_args(args);
        std::string echo = "aptrans";
        for (const auto& a : echoed) echo += " " + a;
        json report;
        report["command"] = echo;
        report["subcommand"] = command;
        report["input_hash"] = input_hash(echoed, o);
        report["seed"] = ctx.seed();
        report["results"] = std::move(outcome.results);
        report["violations"] = outcome.violations;
        report["verdict"] = outcome.violations.empty() ? "pass" : "fail";
        res.out = render(report, o.format);
        res.exit_code = outcome.violations.empty() ? 0 : 1;
    } catch (const std::exception& e) {
        res.err = std::string("error: ") + e.what() + "\n";
        res.exit_code = 2;
    }
    return res;
}

}  // namespace aptrans
