#include "lpt/cli.hpp"

#include "lpt/fgl.hpp"
#include "lpt/oracle.hpp"
#include "lpt/splittings.hpp"
#include "lpt/steenrod.hpp"

#include <sstream>

namespace lpt::cli {

namespace {

Json interval_json(const Interval& i)
{
    return Json::array({i.lo, i.hi});
}

Json optional_json(const std::optional<long>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

Json ring_json(const CohomologyRing& ring)
{
    const GradedAbGroup groups = graded_groups(ring).normalized();
    std::vector<long> poincare(static_cast<std::size_t>(ring.spec().dim()) + 1, 0);
    Json group_strings = Json::array();
    for (int d = 0; d <= ring.spec().dim(); ++d) {
        poincare[static_cast<std::size_t>(d)] = groups.at(d).free_rank;
        group_strings.push_back(groups.degree_string(d));
    }
    if (is_field(ring.mode()))
        poincare = poincare_polynomial(ring).coefficients();
    Json gens = Json::array();
    for (const auto& g : ring.generators())
        gens.push_back({{"name", ring.name(g)}, {"degree", ring.degree(g)}});
    Json out;
    out["poincare"] = poincare;
    out["generators"] = gens;
    out["relations"] = ring.relations();
    out["groups"] = group_strings;
    return out;
}

Json steenrod_json(const CohomologyRing& ring)
{
    const SteenrodTable table(ring);
    Json out = Json::array();
    for (const auto& m : ring.basis()) {
        const int d = ring.degree(m);
        if (d == 0)
            continue;
        Json squares = Json::array();
        for (int k = 1; k <= d; ++k) {
            Combination c = table.sq(k, m);
            if (!c.empty())
                squares.push_back({{"k", k}, {"value", ring.to_string(c)}});
        }
        out.push_back({{"class", ring.name(m)}, {"degree", d}, {"sq", squares}});
    }
    return out;
}

Json invariants_json(const TupleSpec& spec, const InvariantReport& rep)
{
    Json span;
    span["applicable"] = rep.span.applicable;
    span["stablespan"] = optional_json(rep.span.stablespan);
    span["span_equals_stablespan"] = rep.span.span_equals_stablespan;
    span["span"] = optional_json(rep.span.span);
    span["clauses"] = rep.span.clauses;
    Json imm;
    imm["value"] = optional_json(rep.imm.value);
    imm["range"] = interval_json(rep.imm.range);

    Json out;
    out["chi"] = rep.chi;
    out["chi_star"] = rep.chi_star.to_string();
    out["spin"] = rep.spin;
    out["orientable"] = rep.orientable;
    out["vector_field"] = rep.has_nonzero_field;
    out["stably_parallelizable"] = rep.stably_parallelizable.serialize();
    out["parallelizable"] = rep.parallelizable.serialize();
    out["cat"] = interval_json(rep.cat);
    out["tc"] = interval_json(rep.tc.tc);
    out["span"] = span;
    out["imm"] = imm;
    out["tc_base"] = interval_json(rep.tc.base_tc);
    out["tc_product_bound"] = rep.tc.product_bound;
    out["tc_linear_bound"] = rep.tc.linear_bound;
    if (spec.t().is_finite() && spec.n1() >= 1)
        out["sigma"] = sigma(spec.n1(), spec.t().order()).get_str();
    else
        out["sigma"] = nullptr;
    out["stiefel_whitney"] = stiefel_whitney_total(spec).to_string();
    return out;
}

Json cartesian_json(const CartesianSplitting& s)
{
    Json factors = Json::array();
    for (const auto& f : s.factors)
        factors.push_back({{"index", f.index},
                           {"sphere_dim", f.sphere_dim},
                           {"status", f.status == SplitStatus::Splits ? "splits" : "unknown"},
                           {"rule", f.rule}});
    return factors;
}

Json wedge_json(const TupleSpec& spec, int k)
{
    Json out = Json::array();
    for (const auto& w : wedge_decomposition(spec, k))
        out.push_back({{"sigma", w.sigma},
                       {"shift", w.shift},
                       {"stunted", {{"t", w.stunted.t.to_string()}, {"top", w.stunted.top}, {"bottom", w.stunted.bottom}}}});
    return out;
}

Json oracle_json(const OracleReport& rep, bool detailed)
{
    Json out;
    out["checked"] = true;
    out["match"] = rep.match;
    if (!detailed)
        return out;
    out["mode"] = coeff_mode_name(rep.mode);
    out["cells"] = rep.cells;
    Json degrees = Json::array();
    for (const auto& d : rep.degrees)
        degrees.push_back({{"degree", d.degree}, {"oracle", d.oracle}, {"theory", d.theory}, {"match", d.match}});
    out["degrees"] = degrees;
    return out;
}

void require_f2(const Query& q)
{
    if (!(q.coeff.kind() == CoeffRing::Kind::PrimeField && q.coeff.characteristic() == 2))
        throw CliError(kUnsupported, "Steenrod squares need --coeff F2");
}

void require_finite(const Query& q, const char* what)
{
    if (q.spec.t().is_infinite())
        throw CliError(kUnsupported, std::string(what) + " needs a finite t");
}

Emitted build(const Query& q)
{
    const TupleSpec& spec = q.spec;
    Json doc;
    int exit_code = kOk;
    doc["input"] = query_to_json(q);

    switch (q.command) {
    case Command::TSeries: {
        require_finite(q, "tseries");
        const FormalGroupLaw law = q.law == "additive" ? FormalGroupLaw::additive()
                                                       : FormalGroupLaw::multiplicative(Rational(q.unit));
        const TSeries ts = t_series(law, spec.t().order(), q.precision);
        Json coeffs = Json::array();
        for (const auto& c : ts.series.coeffs())
            coeffs.push_back(c.get_str());
        doc["tseries"] = {{"law", q.law}, {"unit", q.unit}, {"t", ts.t}, {"precision", q.precision},
                          {"coefficients", coeffs}, {"series", ts.series.to_string()}};
        return {doc, exit_code};
    }
    default:
        break;
    }

    doc["dim"] = spec.dim();
    switch (q.command) {
    case Command::Ring:
        doc["ring"] = ring_json(CohomologyRing::build(spec, q.coeff));
        break;
    case Command::Steenrod: {
        require_f2(q);
        const CohomologyRing ring = CohomologyRing::build(spec, q.coeff);
        doc["ring"] = ring_json(ring);
        doc["steenrod"] = steenrod_json(ring);
        break;
    }
    case Command::Split: {
        const CartesianSplitting s = cartesian_split(spec);
        doc["splittings"] = {{"cartesian", cartesian_json(s)},
                             {"remainder", s.remainder.to_string()},
                             {"wedge", wedge_json(spec, q.k)}};
        break;
    }
    case Command::Wedge: {
        if (!is_field(q.coeff))
            throw CliError(kUnsupported, "wedge bookkeeping compares Poincare series over a field");
        const WedgeCheck check = verify_wedge(spec, q.k, q.coeff);
        doc["splittings"] = {{"wedge", wedge_json(spec, q.k)},
                             {"check", {{"k", q.k},
                                        {"ok", check.ok},
                                        {"wedge_side", check.wedge_side.to_string()},
                                        {"thom_side", check.thom_side.to_string()}}}};
        if (!check.ok)
            exit_code = kMismatch;
        break;
    }
    case Command::Invariants:
        doc["invariants"] = invariants_json(spec, invariant_report(spec, {q.gd, q.span_base, q.tc_override}));
        break;
    case Command::Oracle: {
        require_finite(q, "the oracle");
        const OracleReport rep = compare_with_theory(spec, q.coeff, q.cap);
        doc["oracle"] = oracle_json(rep, true);
        if (!rep.match)
            exit_code = kMismatch;
        break;
    }
    case Command::Report: {
        const CohomologyRing ring = CohomologyRing::build(spec, q.coeff);
        doc["ring"] = ring_json(ring);
        if (q.coeff.kind() == CoeffRing::Kind::PrimeField && q.coeff.characteristic() == 2)
            doc["steenrod"] = steenrod_json(ring);
        doc["invariants"] = invariants_json(spec, invariant_report(spec, {q.gd, q.span_base, q.tc_override}));
        doc["splittings"] = {{"cartesian", cartesian_json(cartesian_split(spec))}, {"wedge", wedge_json(spec, q.k)}};
        if (spec.t().is_finite() && quotient_basis_size(spec) <= q.cap) {
            const OracleReport rep = compare_with_theory(spec, q.coeff, q.cap);
            doc["oracle"] = oracle_json(rep, false);
            if (!rep.match)
                exit_code = kMismatch;
        } else {
            doc["oracle"] = {{"checked", false}, {"match", nullptr}};
        }
        break;
    }
    case Command::TSeries:
        break;
    }
    return {doc, exit_code};
}

void render(const Json& j, const std::string& indent, std::ostream& out)
{
    for (const auto& [key, value] : j.items()) {
        const bool flat_array = value.is_array() &&
                                std::all_of(value.begin(), value.end(), [](const Json& e) { return e.is_primitive(); });
        if (value.is_primitive()) {
            out << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
        } else if (flat_array) {
            out << indent << key << ":";
            const char* sep = " ";
            for (const auto& e : value) {
                out << sep << (e.is_string() ? e.get<std::string>() : e.dump());
                sep = ", ";
            }
            out << "\n";
        } else {
            out << indent << key << ":\n";
            render(value, indent + "  ", out);
        }
    }
}

}  // namespace

Emitted emit(const Query& q)
{
    try {
        return build(q);
    } catch (const std::invalid_argument& e) {
        throw CliError(kInvalid, e.what());
    } catch (const std::length_error& e) {
        throw CliError(kUnsupported, e.what());
    } catch (const std::overflow_error& e) {
        throw CliError(kUnsupported, e.what());
    }
}

std::string emit_text(const Query& q, int& exit_code)
{
    Emitted e = emit(q);
    exit_code = e.exit_code;
    std::ostringstream out;
    render(e.document, "", out);
    return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    try {
        const Query q = parse(args);
        if (q.json) {
            Emitted e = emit(q);
            out << e.document.dump(2) << "\n";
            return e.exit_code;
        }
        int code = kOk;
        out << emit_text(q, code);
        return code;
    } catch (const CliError& e) {
        (e.code() == kOk ? out : err) << e.what() << (e.code() == kOk ? "" : "\n");
        return e.code();
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kMismatch;
    }
}

}  // namespace lpt::cli
