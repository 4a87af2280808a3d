#include "hopfchar/json_io.hpp"

#include <fstream>

#include "hopfchar/ck.hpp"

namespace hopfchar {

Json scalar_to_json(const Scalar& s) {
    switch (s.kind()) {
        case AlgebraKind::rational: return rational_to_string(s.rat());
        case AlgebraKind::float64: return s.f64();
        case AlgebraKind::truncated_poly: {
            Json arr = Json::array();
            for (const auto& c : s.coeffs()) arr.push_back(rational_to_string(c));
            return arr;
        }
    }
    throw std::logic_error("bad kind");
}

namespace {

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_float()) return Rational(j.get<double>());
    throw std::invalid_argument("expected a rational literal");
}

}  // namespace

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return Scalar::of_rational(rational_from_string(j.get<std::string>()));
    if (j.is_number_integer())
        return Scalar::of_rational(Rational(j.get<long long>()));
    if (j.is_number_float()) return Scalar::of_double(j.get<double>());
    if (j.is_array()) {
        std::vector<Rational> coeffs;
        for (const auto& c : j) coeffs.push_back(rational_from_json(c));
        return Scalar::of_poly(std::move(coeffs));
    }
    throw std::invalid_argument("bad scalar literal: " + j.dump());
}

Json degree_to_json(const Degree& d) {
    if (rational_is_integer(d)) return numerator(d).convert_to<long long>();
    return rational_to_string(d);
}

Degree degree_from_json(const Json& j) { return rational_from_json(j); }

HopfPtr resolve_instance(const std::string& selector) {
    if (selector == "ck") return make_ck();
    if (selector.rfind("findim:", 0) == 0) return findim_from_file(selector.substr(7));
    if (selector.rfind("tensor:", 0) == 0)
        return tensor_square(resolve_instance(selector.substr(7)));
    throw std::invalid_argument("unknown instance selector: " + selector);
}

Json dump_functional(const TruncatedFunctional& f, const std::string& selector) {
    Json entries = Json::array();
    for (const auto& be : f.instance()->basis_up_to(f.cutoff())) {
        const Scalar v = f.value(be.id);
        if (v.is_zero()) continue;
        entries.push_back(Json{{"basis_id", be.id},
                               {"degree", degree_to_json(be.degree)},
                               {"value", scalar_to_json(v)}});
    }
    Json alg;
    alg["kind"] = f.algebra().label();
    return Json{{"instance", selector},
                {"cutoff", degree_to_json(f.cutoff())},
                {"algebra", alg},
                {"entries", entries}};
}

TruncatedFunctional load_functional(const Json& dump) {
    if (!dump.contains("instance") || !dump.contains("cutoff") || !dump.contains("entries"))
        throw std::invalid_argument("character dump needs instance, cutoff, entries");
    const std::string selector = dump.at("instance").get<std::string>();
    HopfPtr H = resolve_instance(selector);
    const Degree cutoff = degree_from_json(dump.at("cutoff"));

    AlgebraDescriptor alg = AlgebraDescriptor::rational();
    bool alg_known = false;
    if (dump.contains("algebra")) {
        const std::string kind = dump.at("algebra").at("kind").get<std::string>();
        if (kind == "rational") {
            alg = AlgebraDescriptor::rational();
        } else if (kind == "float64") {
            alg = AlgebraDescriptor::float64();
        } else if (kind.rfind("truncated-poly/", 0) == 0) {
            alg = AlgebraDescriptor::truncated_poly(std::stoi(kind.substr(15)));
        } else {
            throw std::invalid_argument("unknown algebra kind: " + kind);
        }
        alg_known = true;
    }

    std::vector<std::pair<std::string, Scalar>> values;
    for (const auto& e : dump.at("entries")) {
        Scalar v = scalar_from_json(e.at("value"));
        if (!alg_known) {
            alg = v.descriptor();
            alg_known = true;
        }
        // integer literals parse as rationals; coerce into a float64 dump
        if (alg.kind == AlgebraKind::float64 && v.kind() == AlgebraKind::rational)
            v = Scalar::of_double(rational_to_double(v.rat()));
        values.emplace_back(e.at("basis_id").get<std::string>(), std::move(v));
    }
    TruncatedFunctional out(H, cutoff, alg);
    for (auto& [id, v] : values) out.set(id, std::move(v));
    return out;
}

std::shared_ptr<FiniteDimHopf> findim_from_json(const Json& j) {
    FiniteDimHopf::Data data;
    FiniteCoalgebra& C = data.coalgebra;

    if (j.contains("name")) C.name = j.at("name").get<std::string>();
    if (j.contains("basis")) {
        C.ids = j.at("basis").get<std::vector<std::string>>();
        C.dim = static_cast<int>(C.ids.size());
    } else if (j.contains("dim")) {
        C.dim = j.at("dim").get<int>();
        for (int i = 0; i < C.dim; ++i) C.ids.push_back("e" + std::to_string(i));
    } else {
        throw std::invalid_argument("findim instance needs 'basis' or 'dim'");
    }
    if (C.dim <= 0) throw std::invalid_argument("dimension must be positive");

    data.degrees.assign(C.dim, Degree(0));
    if (j.contains("degrees")) {
        const auto& ds = j.at("degrees");
        if (static_cast<int>(ds.size()) != C.dim)
            throw std::invalid_argument("degrees size mismatch");
        for (int i = 0; i < C.dim; ++i) data.degrees[i] = degree_from_json(ds[i]);
    }

    C.counit.assign(C.dim, Rational(0));
    const auto& eps = j.at("counit");
    if (static_cast<int>(eps.size()) != C.dim)
        throw std::invalid_argument("counit size mismatch");
    for (int i = 0; i < C.dim; ++i) C.counit[i] = rational_from_json(eps[i]);

    C.nu.assign(C.dim, {});
    for (const auto& row : j.at("nu")) {
        if (!row.is_array() || row.size() != 4)
            throw std::invalid_argument("nu entries are [i, j, k, value]");
        const int i = row[0].get<int>(), jj = row[1].get<int>(), k = row[2].get<int>();
        if (i < 0 || i >= C.dim || jj < 0 || jj >= C.dim || k < 0 || k >= C.dim)
            throw std::invalid_argument("nu index out of range");
        C.nu[i].emplace_back(jj, k, rational_from_json(row[3]));
    }

    if (j.contains("product")) {
        data.has_product = true;
        data.product.assign(C.dim, {});
        for (const auto& row : j.at("product")) {
            if (!row.is_array() || row.size() != 4)
                throw std::invalid_argument("product entries are [i, j, k, value]");
            const int i = row[0].get<int>(), jj = row[1].get<int>(), k = row[2].get<int>();
            if (i < 0 || i >= C.dim || jj < 0 || jj >= C.dim || k < 0 || k >= C.dim)
                throw std::invalid_argument("product index out of range");
            data.product[i].emplace_back(jj, k, rational_from_json(row[3]));
        }
        if (!j.contains("unit")) throw std::invalid_argument("product requires 'unit'");
        data.unit_index = j.at("unit").get<int>();
    }

    if (j.contains("antipode")) {
        data.has_antipode = true;
        const auto& m = j.at("antipode");
        if (static_cast<int>(m.size()) != C.dim)
            throw std::invalid_argument("antipode matrix size mismatch");
        for (const auto& row : m) {
            if (static_cast<int>(row.size()) != C.dim)
                throw std::invalid_argument("antipode matrix size mismatch");
            std::vector<Rational> r;
            for (const auto& v : row) r.push_back(rational_from_json(v));
            data.antipode.push_back(std::move(r));
        }
    }

    const auto check = C.check_axioms();
    if (!check.coassociative)
        throw std::invalid_argument("coproduct is not coassociative (witness " + check.witness +
                                    ")");
    if (!check.counital)
        throw std::invalid_argument("counit axiom fails (witness " + check.witness + ")");

    return std::make_shared<FiniteDimHopf>(std::move(data));
}

std::shared_ptr<FiniteDimHopf> findim_from_file(const std::string& path) {
    return findim_from_json(load_json_file(path));
}

ButcherTableau tableau_from_json(const Json& j) {
    ButcherTableau t;
    for (const auto& row : j.at("A")) {
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(rational_from_json(v));
        t.A.push_back(std::move(r));
    }
    for (const auto& v : j.at("b")) t.b.push_back(rational_from_json(v));
    if (j.contains("c"))
        for (const auto& v : j.at("c")) t.c.push_back(rational_from_json(v));
    t.validate();
    return t;
}

ButcherTableau tableau_from_file(const std::string& path) {
    return tableau_from_json(load_json_file(path));
}

namespace {

std::map<std::string, std::vector<Rational>> terms_from_json(const Json& terms) {
    std::map<std::string, std::vector<Rational>> out;
    for (const auto& term : terms) {
        std::vector<Rational> poly;
        for (const auto& c : term.at("poly")) poly.push_back(rational_from_json(c));
        out[term.at("basis_id").get<std::string>()] = std::move(poly);
    }
    return out;
}

}  // namespace

CurveFile curve_from_json(const Json& j) {
    const std::string selector =
        j.contains("instance") ? j.at("instance").get<std::string>() : std::string("ck");
    HopfPtr H = resolve_instance(selector);
    const Degree cutoff = degree_from_json(j.at("cutoff"));

    std::optional<CurveSpec> curve;
    if (j.contains("segments")) {
        std::vector<CurveSpec::Segment> segs;
        for (const auto& s : j.at("segments")) {
            CurveSpec::Segment seg;
            seg.t0 = rational_from_json(s.at("t0"));
            seg.t1 = rational_from_json(s.at("t1"));
            seg.poly = terms_from_json(s.at("terms"));
            segs.push_back(std::move(seg));
        }
        curve.emplace(H, cutoff, std::move(segs));
    } else {
        curve.emplace(H, cutoff, terms_from_json(j.at("terms")));
    }

    CurveFile out{std::move(*curve)};
    out.selector = selector;
    if (j.contains("t1")) out.t1 = j.at("t1").get<double>();
    if (j.contains("steps")) out.steps = j.at("steps").get<int>();
    if (out.steps < 1) throw std::invalid_argument("steps must be >= 1");
    return out;
}

CurveFile curve_from_file(const std::string& path) {
    return curve_from_json(load_json_file(path));
}

namespace {

Json check_to_json(const AxiomCheck& c) {
    Json j;
    j["pass"] = c.pass;
    if (!c.pass) j["witness"] = c.witness;
    return j;
}

}  // namespace

Json axiom_report_to_json(const AxiomReport& r) {
    return Json{{"coassociativity", check_to_json(r.coassociativity)},
                {"counit_left", check_to_json(r.counit_left)},
                {"counit_right", check_to_json(r.counit_right)},
                {"antipode_left", check_to_json(r.antipode_left)},
                {"antipode_right", check_to_json(r.antipode_right)},
                {"product_grading", check_to_json(r.product_grading)},
                {"coproduct_grading", check_to_json(r.coproduct_grading)},
                {"counit_positive_degree", check_to_json(r.counit_positive_degree)},
                {"index_monoid", check_to_json(r.index_monoid)},
                {"pass", r.all_pass()}};
}

Json order_report_to_json(const OrderReport& r) {
    Json j;
    j["order"] = r.order;
    if (r.violated) {
        j["first_violation_tree"] = r.first_violation_tree;
        j["lhs"] = rational_to_string(r.lhs);
        j["rhs"] = rational_to_string(r.rhs);
    } else {
        j["first_violation_tree"] = nullptr;
    }
    return j;
}

Json banach_report_to_json(const BanachReport& r) {
    Json j;
    j["samples"] = r.samples;
    j["holds"] = r.holds;
    j["max_ratio"] = rational_to_string(r.max_ratio);
    if (!r.holds) j["witness"] = r.witness;
    return j;
}

Json gn_report_to_json(const GnReport& r) {
    Json j;
    j["n_max"] = r.n_max;
    j["samples"] = r.samples;
    j["bound_holds"] = r.bound_holds;
    j["paths_agree"] = r.paths_agree;
    j["max_ratio"] = rational_to_string(r.max_ratio);
    if (!(r.bound_holds && r.paths_agree)) j["witness"] = r.witness;
    return j;
}

Json kappa_report_to_json(const KappaReport& r) {
    Json j;
    j["unit_ok"] = r.unit_ok;
    j["multiplicative"] = r.multiplicative;
    j["bijective"] = r.bijective;
    if (!(r.unit_ok && r.multiplicative && r.bijective)) j["witness"] = r.witness;
    return j;
}

Json multifalt_report_to_json(const MultifaltReport& r) {
    Json j;
    j["samples"] = r.samples;
    j["product_identity"] = r.product_identity;
    j["convolution_identity"] = r.convolution_identity;
    if (!(r.product_identity && r.convolution_identity)) j["witness"] = r.witness;
    return j;
}

Json exp_equivalence_report_to_json(const ExpEquivalenceReport& r) {
    Json samples = Json::array();
    for (const auto& s : r.samples)
        samples.push_back(Json{{"p1", s.p1}, {"p2", s.p2}, {"p3", s.p3}});
    return Json{{"samples", samples},
                {"pattern_holds", r.pattern_holds},
                {"connected_equiv", r.connected_equiv}};
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("cannot parse JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace hopfchar
