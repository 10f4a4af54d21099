#include "lpt/cli.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <array>
#include <charconv>

namespace lpt::cli {

namespace {

constexpr std::array<std::pair<Command, const char*>, 8> kCommands{{
    {Command::Ring, "ring"},
    {Command::Steenrod, "steenrod"},
    {Command::Split, "split"},
    {Command::Wedge, "wedge"},
    {Command::Invariants, "invariants"},
    {Command::TSeries, "tseries"},
    {Command::Oracle, "oracle"},
    {Command::Report, "report"},
}};

long parse_long(const std::string& text, const char* what)
{
    long v = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || text.empty())
        throw CliError(kInvalid, std::string("invalid ") + what + ": '" + text + "'");
    return v;
}

std::vector<std::string> split_commas(const std::string& text)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

std::string to_string(Command c)
{
    for (const auto& [cmd, name] : kCommands)
        if (cmd == c)
            return name;
    return "report";
}

Command parse_command(const std::string& name)
{
    for (const auto& [cmd, n] : kCommands)
        if (name == n)
            return cmd;
    throw CliError(kInvalid, "unknown command '" + name + "'");
}

bool Query::operator==(const Query& o) const
{
    // The output format is not part of the query.
    return command == o.command && spec == o.spec && coeff == o.coeff && k == o.k && gd == o.gd &&
           span_base == o.span_base && tc_override == o.tc_override && precision == o.precision &&
           cap == o.cap && law == o.law && unit == o.unit;
}

CoeffMode default_coeff(Command command, const Torsion& t)
{
    if (command == Command::Oracle)
        return CoeffMode::integers();
    if (t.is_infinite() || t.order() == 1)
        return CoeffMode::rationals();
    return CoeffMode::prime_field(prime_divisors(t.order()).front());
}

Torsion parse_torsion(const std::string& text)
{
    if (text == "inf")
        return Torsion::infinite();
    const long t = parse_long(text, "t");
    if (t < 1)
        throw CliError(kInvalid, "t must be a positive integer or 'inf'");
    return Torsion::finite(t);
}

std::vector<int> parse_tuple(const std::string& text)
{
    std::vector<int> n;
    for (const auto& part : split_commas(text)) {
        const long v = parse_long(part, "tuple entry");
        if (v < 0 || v > 1000)
            throw CliError(kInvalid, "tuple entries must lie in [0, 1000]");
        n.push_back(static_cast<int>(v));
    }
    if (n.size() > 60)
        throw CliError(kInvalid, "at most 60 sphere factors are supported");
    return n;
}

Query parse(const std::vector<std::string>& args)
{
    CLI::App app{"Cohomology and invariants of lens product spaces CP_n(t)", "lpt"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string n_text, t_text = "inf", coeff_text, law = "multiplicative", tc_text;
    std::optional<long> gd, span_base;
    int k = 0, precision = 8;
    long unit = 1;
    std::size_t cap = 200000;
    bool json = false, sort = false;

    app.add_option("--n", n_text, "Sphere indices n_1 <= ... <= n_r, comma separated")->required();
    app.add_option("--t", t_text, "Torsion order t, or 'inf'");
    app.add_option("--coeff", coeff_text, "Z, Q, F2 or F:<p>");
    app.add_option("--k", k, "Bundle multiple for the wedge decomposition");
    app.add_option("--gd", gd, "Geometric dimension input for the immersion formula");
    app.add_option("--span-base", span_base, "Span of the bundle multiple over the base");
    app.add_option("--tc-override", tc_text, "Base TC interval lo,hi");
    app.add_option("--precision", precision, "Truncation degree for t-series");
    app.add_option("--law", law, "additive or multiplicative");
    app.add_option("--unit", unit, "Unit u of the multiplicative law x+y+uxy");
    app.add_option("--cap", cap, "Oracle basis-size cap");
    app.add_flag("--json", json, "Emit JSON");
    app.add_flag("--sort", sort, "Sort the tuple instead of rejecting it");

    const std::array<const char*, 8> blurbs{
        "Cohomology ring: Poincare series, generators, relations, groups",
        "Steenrod squares on the mod-2 basis (needs --coeff F2)",
        "Cartesian sphere-factor splittings and the wedge decomposition",
        "Wedge decomposition with its Poincare-series check",
        "Euler/Kervaire characteristics, parallelizability, cat, TC, span, imm",
        "[t](z) for the chosen formal group law (finite t)",
        "Brute-force chain-complex homology compared with the ring",
        "Everything above, plus the oracle when the basis fits under --cap",
    };
    for (std::size_t i = 0; i < kCommands.size(); ++i)
        app.add_subcommand(kCommands[i].second, blurbs[i]);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw CliError(kOk, app.help());
    } catch (const CLI::ParseError& e) {
        throw CliError(kInvalid, e.what());
    }

    Query q;
    q.command = parse_command(app.get_subcommands().front()->get_name());
    try {
        q.spec = TupleSpec(parse_tuple(n_text), parse_torsion(t_text), sort);
    } catch (const std::invalid_argument& e) {
        throw CliError(kInvalid, e.what());
    }
    if (coeff_text.empty()) {
        q.coeff = default_coeff(q.command, q.spec.t());
    } else {
        try {
            q.coeff = parse_coeff_mode(coeff_text);
        } catch (const std::invalid_argument& e) {
            throw CliError(kInvalid, e.what());
        }
    }
    if (k < 0)
        throw CliError(kInvalid, "--k must be non-negative");
    if (precision < 1 || precision > 64)
        throw CliError(kInvalid, "--precision must lie in [1, 64]");
    if (law != "additive" && law != "multiplicative")
        throw CliError(kInvalid, "--law must be additive or multiplicative");
    if (!tc_text.empty()) {
        auto parts = split_commas(tc_text);
        if (parts.size() != 2)
            throw CliError(kInvalid, "--tc-override expects lo,hi");
        q.tc_override = Interval{parse_long(parts[0], "TC bound"), parse_long(parts[1], "TC bound")};
        if (q.tc_override->lo < 0 || q.tc_override->lo > q.tc_override->hi)
            throw CliError(kInvalid, "--tc-override needs 0 <= lo <= hi");
    }
    q.k = k;
    q.gd = gd;
    q.span_base = span_base;
    q.precision = precision;
    q.cap = cap;
    q.law = law;
    q.unit = unit;
    q.json = json;
    return q;
}

Query parse(int argc, const char* const* argv)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return parse(args);
}

Json query_to_json(const Query& q)
{
    Json input;
    input["n"] = q.spec.n();
    if (q.spec.t().is_finite())
        input["t"] = q.spec.t().order();
    else
        input["t"] = "inf";
    input["coeff"] = coeff_mode_name(q.coeff);
    input["command"] = to_string(q.command);
    Json options;
    options["k"] = q.k;
    options["gd"] = q.gd ? Json(*q.gd) : Json(nullptr);
    options["span_base"] = q.span_base ? Json(*q.span_base) : Json(nullptr);
    options["tc_override"] = q.tc_override ? Json::array({q.tc_override->lo, q.tc_override->hi}) : Json(nullptr);
    options["precision"] = q.precision;
    options["cap"] = q.cap;
    options["law"] = q.law;
    options["unit"] = q.unit;
    input["options"] = options;
    return input;
}

Query query_from_json(const Json& input)
{
    try {
        Query q;
        const Torsion t = input.at("t").is_string() ? parse_torsion(input.at("t").get<std::string>())
                                                    : Torsion::finite(input.at("t").get<long>());
        q.spec = TupleSpec(input.at("n").get<std::vector<int>>(), t);
        q.coeff = parse_coeff_mode(input.at("coeff").get<std::string>());
        q.command = parse_command(input.at("command").get<std::string>());
        const Json& o = input.at("options");
        q.k = o.at("k").get<int>();
        if (!o.at("gd").is_null())
            q.gd = o.at("gd").get<long>();
        if (!o.at("span_base").is_null())
            q.span_base = o.at("span_base").get<long>();
        if (!o.at("tc_override").is_null())
            q.tc_override = Interval{o.at("tc_override").at(0).get<long>(), o.at("tc_override").at(1).get<long>()};
        q.precision = o.at("precision").get<int>();
        q.cap = o.at("cap").get<std::size_t>();
        q.law = o.at("law").get<std::string>();
        q.unit = o.at("unit").get<long>();
        return q;
    } catch (const Json::exception& e) {
        throw CliError(kInvalid, std::string("malformed query document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw CliError(kInvalid, e.what());
    }
}

}  // namespace lpt::cli
