#include <doctest.h>

#include <string>
#include <vector>

#include "aptrans/cli.hpp"
#include "aptrans/spec_io.hpp"
#include "json.hpp"

using namespace aptrans;

namespace {

const std::string data = APTRANS_TEST_DATA;

CliResult run(std::vector<std::string> args) { return run_cli(args); }

nlohmann::json report(const CliResult& r) { return nlohmann::json::parse(r.out); }

std::string spec_text(const std::string& blocks) {
    return R"({"group": {"kind": "Sp", "rank": 2}, "blocks": )" + blocks + "}";
}

}  // namespace

TEST_CASE("spec parsing") {
    const auto s = load_spec(data + "/sp4.json");
    CHECK(s.psi.group().kind() == GroupKind::Sp);
    CHECK(s.psi.group().rank() == 2);
    CHECK(s.psi.blocks().size() == 2);
    CHECK(s.psi.blocks()[0].t == HalfInt::from_twice(3));

    const auto t = parse_spec(spec_text(R"([{"t": "3/2", "a": 2}, {"t": 0, "a": 1, "eta": "−"}])"));
    CHECK(t.psi.blocks()[0].t == HalfInt::from_twice(3));
    CHECK(t.psi.blocks()[1].eta == -1);

    const auto o = parse_spec(R"({"group": {"kind": "SOodd", "rank": 2, "signature": [3, 2]},
        "blocks": [{"t": "1", "a": 2}],
        "options": {"offsets": [5, "3/1"], "seed": 9, "height_bound": 4, "threshold": 2}})");
    CHECK(o.psi.group().p() == 3);
    REQUIRE(o.options.offsets);
    CHECK(*o.options.offsets == std::vector<Rational>{Rational(5), Rational(3)});
    CHECK(o.options.seed == 9u);
    CHECK(o.options.height_bound == 4);
    CHECK(o.options.threshold == 2);

    CHECK_THROWS_AS(load_spec(data + "/unknown_field.json"), InputError);
    CHECK_THROWS_AS(load_spec(data + "/baddim.json"), InputError);
    CHECK_THROWS_AS(load_spec(data + "/missing.json"), InputError);
    CHECK_THROWS_AS(parse_spec("{"), InputError);
    CHECK_THROWS_AS(parse_spec(spec_text(R"([{"t": "1/3", "a": 2}])")), InputError);
    CHECK_THROWS_AS(parse_spec(spec_text(R"([{"t": "3/2", "a": 2, "eta": "x"}, {"t": 0, "a": 1}])")), InputError);
    CHECK_THROWS_AS(parse_spec(R"({"group": {"kind": "GL", "rank": 2}, "blocks": []})"), InputError);
    CHECK_THROWS_AS(parse_spec(R"({"group": {"kind": "Sp", "rank": 2}, "blocks": [], "extra": 1})"), InputError);
    // Bad parity parses; commands decide what to do with it.
    CHECK_NOTHROW(load_spec(data + "/badparity.json"));
}

TEST_CASE("plus-packet parsing") {
    const auto p = load_plus_packet(data + "/sp4_plus_packet.json");
    CHECK(p.entries.size() == 3);
    CHECK(p.entries[0].datum.t_tilde == std::vector<std::int64_t>{8});
    CHECK(p.entries[1].eps.values == std::vector<int>{-1, 1});
    CHECK_THROWS_AS(parse_plus_packet(R"({"group": {"kind": "Sp", "rank": 2},
        "blocks": [{"t": "13/2", "a": 2}, {"t": "0", "a": 1}],
        "entries": [{"levi": [[1, 1]], "eps": "++", "t_tilde": [7]}]})"),
                    InputError);
    CHECK_THROWS_AS(parse_plus_packet(R"({"group": {"kind": "Sp", "rank": 2},
        "blocks": [{"t": "13/2", "a": 2}, {"t": "0", "a": 1}],
        "entries": [{"levi": [[1, 1]], "eps": "+"}]})"),
                    InputError);
}

TEST_CASE("spec examples through the CLI") {
    auto r = run({"verify", "uniqueness", "--spec", data + "/sp4.json", "--offsets", "5"});
    CHECK(r.exit_code == 0);
    CHECK(report(r)["verdict"] == "pass");
    CHECK(report(r)["results"]["check"]["unique"] == true);

    r = run({"verify", "twisted-trace", "--n", "3", "--mu", "1,0,-1", "--trials", "100", "--seed", "7"});
    CHECK(r.exit_code == 0);
    CHECK(report(r)["seed"] == 7);
    CHECK(std::stod(report(r)["results"]["max_residual"].get<std::string>()) <= 1e-9);

    r = run({"verify", "parity", "--spec", data + "/badparity.json"});
    CHECK(r.exit_code == 1);
    CHECK(report(r)["verdict"] == "fail");
    CHECK(report(r)["violations"].size() == 1);

    r = run({"info", "--spec", data + "/unknown_field.json"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("foo") != std::string::npos);
}

TEST_CASE("exit codes for malformed input") {
    CHECK(run({}).exit_code == 2);
    CHECK(run({"nonsense"}).exit_code == 2);
    CHECK(run({"verify"}).exit_code == 2);
    CHECK(run({"verify", "everything"}).exit_code == 2);
    CHECK(run({"info"}).exit_code == 2);
    CHECK(run({"info", "--spec", data + "/baddim.json"}).exit_code == 2);
    CHECK(run({"dominate", "--spec", data + "/badparity.json"}).exit_code == 2);
    CHECK(run({"dominate", "--spec", data + "/sp4.json", "--offsets", "1/2"}).exit_code == 2);
    CHECK(run({"dominate", "--spec", data + "/sp4.json", "--offsets", "x"}).exit_code == 2);
    CHECK(run({"verify", "twisted-trace", "--n", "2", "--mu", "1,0,-1"}).exit_code == 2);
    CHECK(run({"verify", "twisted-trace", "--mu", "1,0,0"}).exit_code == 2);
    CHECK(run({"info", "--spec", data + "/sp4.json", "--format", "xml"}).exit_code == 2);
    CHECK(run({"packet", "--spec", data + "/sp4.json"}).exit_code == 2);
    CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("json and text reports agree") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"verify", "parity", "--spec", data + "/badparity.json"},
             {"verify", "uniqueness", "--spec", data + "/sp4.json"},
             {"translate", "--spec", data + "/sp4.json", "--offsets", "5"}}) {
        auto j = args, t = args;
        j.insert(j.end(), {"--format", "json"});
        t.insert(t.end(), {"--format", "text"});
        const auto rj = run(j), rt = run(t);
        CHECK(rj.exit_code == rt.exit_code);
        const auto verdict = report(rj)["verdict"].get<std::string>();
        CHECK(rt.out.find("verdict: " + verdict + "\n") != std::string::npos);
        CHECK(rt.out.find("violations: " + std::to_string(report(rj)["violations"].size()) + "\n") != std::string::npos);
    }
}

TEST_CASE("reports are deterministic and ignore the worker count") {
    const std::vector<std::vector<std::string>> cmds{
        {"verify", "twisted-trace", "--n", "4", "--trials", "20", "--seed", "3"},
        {"verify", "parity", "--trials", "200", "--seed", "11"},
        {"packet", "--spec", data + "/sp4.json", "--plus-packet", data + "/sp4_plus_packet.json"}};
    for (const auto& c : cmds) {
        auto a = c, b = c;
        a.insert(a.end(), {"--workers", "1"});
        b.insert(b.end(), {"--workers", "3"});
        const auto ra = run(a), rb = run(b), rc = run(c);
        CHECK(ra.out == rb.out);
        CHECK(ra.out == rc.out);
        CHECK(ra.exit_code == 0);
    }
    const auto d1 = run({"verify", "parity", "--trials", "200", "--seed", "11"});
    const auto d2 = run({"verify", "parity", "--trials", "200", "--seed", "12"});
    CHECK(report(d1)["input_hash"] != report(d2)["input_hash"]);
}

TEST_CASE("packet translation through the CLI") {
    const auto r = run({"packet", "--spec", data + "/sp4.json", "--plus-packet", data + "/sp4_plus_packet.json"});
    REQUIRE(r.exit_code == 0);
    const auto j = report(r);
    CHECK(j["results"]["counts"]["translated"] == 3);
    CHECK(j["results"]["entries"][1]["t_tilde"] == nlohmann::json::array({3}));
    CHECK(j["results"]["offsets"] == nlohmann::json::array({5}));
}

TEST_CASE("report formatting") {
    CHECK(sci3(5.551115e-16) == "5.55e-16");
    CHECK(sci3(0.0) == "0.00e+00");
    CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
}
