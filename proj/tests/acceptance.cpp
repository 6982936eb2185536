// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "aptrans/aq.hpp"
#include "aptrans/arthur.hpp"
#include "aptrans/cli.hpp"
#include "aptrans/corpus.hpp"
#include "aptrans/sweeps.hpp"

using namespace aptrans;

namespace {

const std::string data = APTRANS_TEST_DATA;

struct Verdict {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

Verdict orbit_uniqueness(const std::vector<ArthurParameter>& corpus) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto rows = sweep_uniqueness(corpus, {}, 1);
    const double secs = seconds_since(t0);
    const auto bad = std::count_if(rows.begin(), rows.end(), [](const UniquenessRow& r) { return !r.unique; });
    std::ostringstream d;
    d << rows.size() << " parameters, " << bad << " non-unique, " << fmt("%.2fs", secs) << " single worker";
    return {bad == 0 && !rows.empty() && secs <= 300.0, d.str()};
}

Verdict twisted_trace(const std::vector<TwistedRow>& rows, double secs) {
    double worst = 0.0;
    for (const auto& r : rows) worst = std::max(worst, r.max_residual);
    std::ostringstream d;
    d << rows.size() << " weights x 100 trials, max residual " << sci3(worst) << ", " << fmt("%.2fs", secs);
    return {!rows.empty() && worst <= 1e-9 && secs <= 120.0, d.str()};
}

Verdict kostant(const std::vector<TwistedRow>& rows) {
    std::size_t stable = 0, fixed = 0, bad = 0;
    for (const auto& r : rows) {
        stable += r.stable_cosets;
        fixed += r.fixed_reps;
        bad += r.stable_cosets != r.fixed_reps;
    }
    std::ostringstream d;
    d << fixed << " of " << stable << " theta-stable cosets have theta-fixed representatives";
    return {bad == 0 && stable > 0, d.str()};
}

Verdict random_sweeps(RandomSweep (*sweep)(GroupKind, std::size_t, std::uint64_t), const char* what) {
    std::size_t trials = 0, failures = 0;
    for (auto k : {GroupKind::Sp, GroupKind::SOodd, GroupKind::SOeven}) {
        const auto r = sweep(k, 10000, 20261016);
        trials += r.trials;
        failures += r.failures.size();
        for (std::size_t i = 0; i < std::min<std::size_t>(3, r.failures.size()); ++i)
            std::printf("    %s\n", r.failures[i].c_str());
    }
    std::ostringstream d;
    d << trials << " random " << what << ", " << failures << " failures";
    return {failures == 0, d.str()};
}

Verdict filtration(const std::vector<ArthurParameter>& corpus, int workers) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto rows = sweep_filtration(corpus, -1, workers);
    std::size_t levis = 0, enumerated = 0, nonzero = 0, bad = 0;
    for (const auto& r : rows) {
        levis += r.levis;
        enumerated += r.enumerated;
        nonzero += r.nonzero_mu1;
        bad += r.violations.size();
        for (std::size_t i = 0; i < std::min<std::size_t>(3, r.violations.size()); ++i)
            std::printf("    %s %s\n", r.psi.c_str(), r.violations[i].c_str());
    }
    std::ostringstream d;
    d << rows.size() << " parameters, " << levis << " Levi data, " << enumerated << " weights (" << nonzero
      << " with mu1 != 0), " << bad << " violations, " << fmt("%.1fs", seconds_since(t0));
    return {bad == 0 && enumerated > 0, d.str()};
}

/// Every Levi datum of ψ paired with every character of A(ψ).
PacketData full_packet(const ArthurParameter& psi) {
    PacketData p{psi, {}, {}};
    const auto a = component_group(psi);
    for (const auto& l : enumerate_levis(psi))
        for (const auto& c : characters(a)) p.entries.push_back({make_datum(psi, l), c});
    return p;
}

bool same_entries(const PacketData& a, const PacketData& b) { return a.psi == b.psi && a.entries == b.entries; }

Verdict round_trip(const std::vector<ArthurParameter>& corpus) {
    std::size_t packets = 0, entries = 0, vanished = 0, bad = 0;
    auto fail = [&](const ArthurParameter& psi, const char* why) {
        if (bad++ < 3) std::printf("    %s: %s\n", psi.str().c_str(), why);
    };
    for (const auto& psi : corpus) {
        const auto plus = dominate(psi, canonical_offsets(psi));
        const auto q = quotient_map(plus, psi);
        const auto& ap = q.source();
        const auto& a = q.target();
        if (!q.is_surjective() || !q.is_homomorphism()) fail(psi, "quotient map is not a surjective homomorphism");
        if (q.kernel().size() * a.order() != ap.order()) fail(psi, "kernel order differs from |A(psi+)|/|A(psi)|");

        const auto pp = full_packet(plus);
        const auto down = translate_packet(pp, psi);
        const auto levis = enumerate_levis(plus).size();
        if (down.entries.size() + down.vanishing.size() != pp.entries.size()) fail(psi, "entries lost in translation");
        if (down.vanishing.size() != levis * (ap.order() - a.order())) fail(psi, "unexpected number of vanishing entries");
        if (!same_entries(translate_packet(pp, plus), pp)) fail(psi, "T = 0 translation is not the identity");
        if (!translate_packet(pp, plus).vanishing.empty()) fail(psi, "T = 0 translation dropped entries");

        const auto p = full_packet(psi);
        if (!same_entries(translate_packet(lift_packet(p, plus), psi), p)) fail(psi, "translate after lift is not the identity");
        ++packets;
        entries += pp.entries.size();
        vanished += down.vanishing.size();
    }
    std::ostringstream d;
    d << packets << " packets, " << entries << " dominating entries, " << vanished << " kernel-vanishing, " << bad
      << " failures";
    return {bad == 0 && packets > 0, d.str()};
}

Verdict determinism() {
    const std::vector<std::vector<std::string>> cmds{
        {"info", "--spec", data + "/sp4.json"},
        {"infchar", "--spec", data + "/sp4.json", "--format", "text"},
        {"dominate", "--spec", data + "/sp4.json"},
        {"translate", "--spec", data + "/sp4.json", "--offsets", "5"},
        {"packet", "--spec", data + "/sp4.json", "--plus-packet", data + "/sp4_plus_packet.json"},
        {"verify", "uniqueness"},
        {"verify", "twisted-trace", "--seed", "7"},
        {"verify", "kostant"},
        {"verify", "parity", "--seed", "5"},
        {"verify", "norms", "--seed", "5", "--format", "text"},
        {"verify", "filtration", "--height-bound", "4"},
        {"verify", "parity", "--spec", data + "/badparity.json"},
    };
    std::size_t same = 0;
    for (const auto& c : cmds) {
        auto one = c, four = c;
        one.insert(one.end(), {"--workers", "1"});
        four.insert(four.end(), {"--workers", "4"});
        const auto r1 = run_cli(one), r2 = run_cli(one), r4 = run_cli(four);
        const bool ok = r1.out == r2.out && r1.out == r4.out && r1.exit_code == r4.exit_code && !r1.out.empty();
        same += ok;
        if (!ok) std::printf("    differs: %s\n", c[0].c_str());
    }
    std::ostringstream d;
    d << same << " of " << cmds.size() << " reports byte-identical across runs and worker counts 1/4";
    return {same == cmds.size(), d.str()};
}

}  // namespace

int main() {
    const int workers = available_workers();
    const auto corpus = parameter_corpus();
    std::printf("corpus: %zu good-parity parameters (n* <= 8, t <= 7/2, a <= 4); %d workers\n", corpus.size(), workers);

    const auto t0 = std::chrono::steady_clock::now();
    const auto twisted_rows = sweep_twisted(6, 3, 100, 20261016, 1);
    const double twisted_secs = seconds_since(t0);

    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"orbit uniqueness", [&] { return orbit_uniqueness(corpus); }},
        {"twisted trace identity", [&] { return twisted_trace(twisted_rows, twisted_secs); }},
        {"Kostant theta-invariance", [&] { return kostant(twisted_rows); }},
        {"parity/integrality", [&] { return random_sweeps(sweep_parity, "parameters"); }},
        {"norm doubling", [&] { return random_sweeps(sweep_norms, "infinitesimal characters"); }},
        {"filtration vanishing", [&] { return filtration(corpus, workers); }},
        {"translation round-trip", [&] { return round_trip(corpus); }},
        {"determinism", [] { return determinism(); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto v = criteria[i].second();
        failed += !v.pass;
        std::printf("%s %zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
