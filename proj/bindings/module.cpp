#include <pybind11/pybind11.h>

#include "hopfchar/ck.hpp"
#include "hopfchar/json_io.hpp"
#include "hopfchar/sampling.hpp"

namespace py = pybind11;
namespace hc = hopfchar;

// The module speaks JSON strings at the boundary; the python package wraps
// them into dicts. This keeps the exact rational values intact ("p/q").

namespace {

std::string check_json(const std::string& selector, const std::string& cutoff,
                       std::uint64_t seed) {
    hc::HopfPtr H = hc::resolve_instance(selector);
    const hc::Degree cut = hc::rational_from_string(cutoff);
    hc::Json report;
    report["instance"] = selector;
    report["cutoff"] = hc::degree_to_json(cut);
    bool pass = true;

    const auto* fd = dynamic_cast<const hc::FiniteDimHopf*>(H.get());
    if (fd == nullptr || fd->has_product()) {
        const auto ax = hc::verify_axioms(*H, cut);
        report["axioms"] = hc::axiom_report_to_json(ax);
        pass = pass && ax.all_pass();
    }
    if (fd != nullptr) {
        const auto banach = hc::banach_norm_check(fd->coalgebra(),
                                                  hc::AlgebraDescriptor::rational(), 200, seed);
        const auto gn = hc::gn_iterated_check(fd->coalgebra(), 5, 100, seed);
        const auto kp = hc::kappa_check(fd->coalgebra(), hc::AlgebraDescriptor::rational());
        report["banach"] = hc::banach_report_to_json(banach);
        report["gn"] = hc::gn_report_to_json(gn);
        report["kappa"] = hc::kappa_report_to_json(kp);
        pass = pass && banach.holds && gn.bound_holds && gn.paths_agree && kp.unit_ok &&
               kp.multiplicative && kp.bijective;
    }
    report["pass"] = pass;
    return report.dump();
}

std::string trees_json(int max_order) {
    hc::Json out = hc::Json::array();
    for (const hc::Tree& t : hc::gen_trees(max_order)) {
        out.push_back(hc::Json{{"id", t.id()},
                               {"order", t.order()},
                               {"gamma", hc::rational_to_string(hc::tree_gamma(t))},
                               {"sigma", hc::rational_to_string(hc::tree_sigma(t))}});
    }
    return out.dump();
}

std::string order_json(const std::string& tableau_json, int max_order) {
    const hc::ButcherTableau t = hc::tableau_from_json(hc::Json::parse(tableau_json));
    return hc::order_report_to_json(hc::order_of(t, max_order)).dump();
}

std::string char_op_json(const std::string& op, const std::string& dump_a,
                         const std::string& dump_b) {
    const hc::Json ja = hc::Json::parse(dump_a);
    hc::TruncatedFunctional a = hc::load_functional(ja);
    const std::string selector = ja.at("instance").get<std::string>();
    std::optional<hc::TruncatedFunctional> result;
    if (op == "exp") {
        result = hc::exp_star(a);
    } else if (op == "log") {
        result = hc::log_star(a);
    } else if (op == "inv") {
        auto inv = hc::unit_inverse(a);
        if (!inv) throw std::invalid_argument("functional is not star-invertible");
        result = *inv;
    } else {
        const hc::Json jb = hc::Json::parse(dump_b);
        const hc::TruncatedFunctional b_other = hc::load_functional(jb);
        hc::TruncatedFunctional b(a.instance(), b_other.cutoff(), b_other.algebra());
        for (const auto& [id, v] : b_other.entries()) b.set(id, v);
        if (op == "conv") {
            result = hc::convolve(a, b);
        } else if (op == "bch") {
            result = hc::bch(a, b);
        } else if (op == "compose") {
            result = hc::compose(a, b);
        } else {
            throw std::invalid_argument("unknown char op: " + op);
        }
    }
    return hc::dump_functional(*result, selector).dump();
}

std::string exact_flow_json(const std::string& cutoff) {
    hc::HopfPtr ck = hc::make_ck();
    const auto e = hc::exact_flow_character(ck, hc::rational_from_string(cutoff));
    return hc::dump_functional(e, "ck").dump();
}

std::string rk_character_json(const std::string& tableau_json, const std::string& cutoff) {
    hc::HopfPtr ck = hc::make_ck();
    const hc::ButcherTableau t = hc::tableau_from_json(hc::Json::parse(tableau_json));
    return hc::dump_functional(
               hc::rk_character(ck, t, hc::rational_from_string(cutoff)), "ck")
        .dump();
}

std::string evolve_json(const std::string& curve_json) {
    const hc::CurveFile cf = hc::curve_from_json(hc::Json::parse(curve_json));
    const auto eta = hc::evolve(cf.curve, cf.t1, cf.steps);
    hc::Json out = hc::dump_functional(eta, cf.selector);
    out["is_character_within_tol"] = hc::is_character(eta);
    return out.dump();
}

std::string is_character_json(const std::string& dump, double tol) {
    return hc::Json(hc::is_character(hc::load_functional(hc::Json::parse(dump)), tol)).dump();
}

std::string is_infinitesimal_json(const std::string& dump, double tol) {
    return hc::Json(hc::is_infinitesimal(hc::load_functional(hc::Json::parse(dump)), tol))
        .dump();
}

}  // namespace

PYBIND11_MODULE(_hopfchar, m) {
    m.doc() = "character groups of graded Hopf algebras at finite truncation";
    m.def("trees_json", &trees_json, py::arg("max_order"),
          "rooted trees with gamma and sigma, as a JSON array");
    m.def("check_json", &check_json, py::arg("instance"), py::arg("cutoff"),
          py::arg("seed") = 0, "axiom/estimate report for an instance selector");
    m.def("order_json", &order_json, py::arg("tableau_json"), py::arg("max_order") = 5,
          "order audit of a Butcher tableau");
    m.def("char_op_json", &char_op_json, py::arg("op"), py::arg("dump_a"),
          py::arg("dump_b") = std::string(), "character arithmetic on dump strings");
    m.def("exact_flow_json", &exact_flow_json, py::arg("cutoff"),
          "the exact-flow character as a dump string");
    m.def("rk_character_json", &rk_character_json, py::arg("tableau_json"), py::arg("cutoff"),
          "the B-series character of a tableau");
    m.def("evolve_json", &evolve_json, py::arg("curve_json"),
          "solve eta' = eta * gamma(t) from a curve description");
    m.def("is_character_json", &is_character_json, py::arg("dump"), py::arg("tol") = 1e-9);
    m.def("is_infinitesimal_json", &is_infinitesimal_json, py::arg("dump"),
          py::arg("tol") = 1e-9);
}
