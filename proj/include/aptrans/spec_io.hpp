#pragma once

// JSON input files: parameter specs and dominating packet data.
//
// Spec schema:
//   {"group": {"kind": "Sp"|"SOodd"|"SOeven", "rank": n, "signature": [p, q]},
//    "blocks": [{"t": "3/2", "a": 2, "eta": "+", "mult": 1}, ...],
//    "options": {"offsets": [5, "3"], "seed": 7, "height_bound": 10, "threshold": 3}}
// Unknown keys are rejected at every level.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aptrans/aq.hpp"
#include "aptrans/arthur.hpp"
#include "aptrans/rational.hpp"

namespace aptrans {

struct SpecOptions {
    std::optional<std::vector<Rational>> offsets;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> height_bound;
    Threshold threshold;
};

struct Spec {
    ArthurParameter psi;
    SpecOptions options;
};

/// Throws InputError on malformed JSON, unknown keys or a dimension
/// mismatch. Parity is not checked here.
Spec parse_spec(const std::string& text);
/// Reads the file and parses it. Throws InputError if unreadable.
Spec load_spec(const std::string& path);

/// Packet data for a dominating parameter:
///   {"group": ..., "blocks": [...],
///    "entries": [{"levi": [[p1, q1], ...], "g0": [p0, q0], "eps": "+-",
///                 "sigma": {"label": "...", "nu": ["1/2"], "weakly_unipotent": true},
///                 "t_tilde": [7, 3]}, ...]}
/// "g0", "sigma" and "t_tilde" are optional; a given t_tilde must agree with
/// the one computed from the parameter.
PacketData parse_plus_packet(const std::string& text);
PacketData load_plus_packet(const std::string& path);

/// Whole file as bytes. Throws InputError if unreadable.
std::string read_file(const std::string& path);

/// Comma-separated list of half-integers / rationals ("1,0,-1", "5,3/2").
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace aptrans
