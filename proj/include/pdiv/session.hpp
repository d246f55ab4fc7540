#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "pdiv/descent.hpp"

namespace pdiv {

using Json = nlohmann::json;

// Command-line overrides for session options.
struct Options {
    std::optional<Int> bound;
    std::optional<Int> extend;
    std::optional<VecI> weight;
    std::optional<int> jobs;
    std::optional<int> samples;
};

// Parsed session file: ground field, curve model, rank, and the optional
// divisor / generator / galois / witness blocks.
struct Session {
    GroundField field;
    Curve curve;
    int rank = 0;
    std::optional<Cone> sigma;
    std::optional<PolyhedralDivisor> divisor;        // from "coefficients"
    std::vector<GradedElement> generators;           // from "generators"
    std::optional<GradedElement> element;            // "element"
    std::optional<GaloisData> galois;                // "galois"
    std::optional<PrincipalPolyDivisor> principal;   // "galois".b
    std::optional<GaloisData> galois2;
    std::optional<PrincipalPolyDivisor> principal2;
    std::optional<PolyhedralDivisor> divisor2;
    std::optional<IsoWitness> witness;
    Int bound = 4;
    std::optional<Int> extend;
    std::optional<VecI> weight;
    int jobs = 1;
    int samples = 20;

    // The divisor for commands that need one: explicit coefficients win,
    // otherwise it is derived from the generators.
    PolyhedralDivisor require_divisor() const;
};

Session parse_session(const Json& j);
Session load_session(const std::string& path, const Options& overrides);

Json divisor_to_json(const PolyhedralDivisor& D);
Json qdivisor_to_json(const QDivisor& D);
Json h0_to_json(const H0Module& M);

// Dispatch one subcommand; throws DomainError / SchemaError.
Json run_command(const std::string& command, const Session& session);

// Full CLI behaviour: returns the process exit code and writes the report
// (or error JSON) to `out`.
int run_cli(const std::string& command, const std::string& session_path, const Options& overrides,
            std::string& out);

}  // namespace pdiv
