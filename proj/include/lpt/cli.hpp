// Command-line front end: argument parsing and report emission.
#pragma once

#include "lpt/invariants.hpp"

#include "json.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpt::cli {

enum class Command { Ring, Steenrod, Split, Wedge, Invariants, TSeries, Oracle, Report };

std::string to_string(Command c);
Command parse_command(const std::string& name);

enum ExitCode { kOk = 0, kMismatch = 1, kInvalid = 2, kUnsupported = 3 };

/// Carries the process exit code alongside the message.
class CliError : public std::runtime_error {
public:
    CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
    int code() const { return code_; }

private:
    int code_;
};

struct Query {
    Command command = Command::Report;
    TupleSpec spec{{0}, Torsion::infinite()};
    CoeffMode coeff = CoeffMode::rationals();
    int k = 0;
    std::optional<long> gd;
    std::optional<long> span_base;
    std::optional<Interval> tc_override;
    int precision = 8;
    std::size_t cap = 200000;
    std::string law = "multiplicative";
    long unit = 1;
    bool json = false;

    bool operator==(const Query& other) const;
};

/// The per-regime default: Z for the oracle, Q for t = inf, F2 for even t,
/// F_p for the smallest prime p | t, Q for t = 1.
CoeffMode default_coeff(Command command, const Torsion& t);

Torsion parse_torsion(const std::string& text);
std::vector<int> parse_tuple(const std::string& text);

/// Throws CliError with kInvalid or kUnsupported.
Query parse(const std::vector<std::string>& args);
Query parse(int argc, const char* const* argv);

using Json = nlohmann::ordered_json;

struct Emitted {
    Json document;
    int exit_code;
};

/// Stable field order; identical queries produce identical documents.
Emitted emit(const Query& q);
std::string emit_text(const Query& q, int& exit_code);

/// The "input" section alone, and its inverse.
Json query_to_json(const Query& q);
Query query_from_json(const Json& input);

/// Full process behaviour; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpt::cli
