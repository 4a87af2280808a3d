#pragma once

#include <json.hpp>

#include "hopfchar/bseries.hpp"
#include "hopfchar/charalg.hpp"
#include "hopfchar/evolution.hpp"
#include "hopfchar/findim.hpp"

namespace hopfchar {

using Json = nlohmann::json;

/// Scalar literals: rationals as "p/q" strings, floats as numbers,
/// truncated-poly as arrays of rational strings.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

/// Degrees/cutoffs: integers as JSON numbers, other rationals as strings.
Json degree_to_json(const Degree& d);
Degree degree_from_json(const Json& j);

/// Resolve "ck" | "findim:<file>" | "tensor:<selector>".
HopfPtr resolve_instance(const std::string& selector);

/// Character dump: {instance, cutoff, algebra, entries:[{basis_id, degree,
/// value}...]}, entries sorted by (degree, basis_id), bit-exact rationals.
Json dump_functional(const TruncatedFunctional& f, const std::string& selector);
TruncatedFunctional load_functional(const Json& dump);

/// Finite-dimensional instance file:
/// {name?, dim | basis, degrees?, counit, nu:[[i,j,k,value]...],
///  product?:[[i,j,k,value]...], unit?, antipode?: matrix}.
std::shared_ptr<FiniteDimHopf> findim_from_json(const Json& j);
std::shared_ptr<FiniteDimHopf> findim_from_file(const std::string& path);

/// Tableau file: {"A": [[..]], "b": [..], "c": [..]} (rational strings or numbers).
ButcherTableau tableau_from_json(const Json& j);
ButcherTableau tableau_from_file(const std::string& path);

/// Curve file: {instance?, cutoff, t1?, steps?, terms:[{basis_id, poly:[c...]}]}
/// or {.., segments:[{t0, t1, terms:[...]}, ...]} for piecewise curves.
struct CurveFile {
    CurveSpec curve;
    double t1 = 1.0;
    int steps = kDefaultEvolveSteps;
    std::string selector = "ck";
};
CurveFile curve_from_json(const Json& j);
CurveFile curve_from_file(const std::string& path);

Json axiom_report_to_json(const AxiomReport& r);
Json order_report_to_json(const OrderReport& r);
Json banach_report_to_json(const BanachReport& r);
Json gn_report_to_json(const GnReport& r);
Json kappa_report_to_json(const KappaReport& r);
Json multifalt_report_to_json(const MultifaltReport& r);
Json exp_equivalence_report_to_json(const ExpEquivalenceReport& r);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace hopfchar
