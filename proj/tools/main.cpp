#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>
#include <iostream>

#include "hopfchar/ck.hpp"
#include "hopfchar/json_io.hpp"
#include "hopfchar/sampling.hpp"

namespace hc = hopfchar;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;

void emit(const hc::Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        hc::write_json_file(out_path, j);
    }
}

int cmd_trees(int max_order) {
    for (const hc::Tree& t : hc::gen_trees(max_order)) {
        std::cout << t.id() << " " << t.order() << " "
                  << hc::rational_to_string(hc::tree_gamma(t)) << " "
                  << hc::rational_to_string(hc::tree_sigma(t)) << "\n";
    }
    return kExitPass;
}

int cmd_check(const std::string& selector, const hc::Degree& cutoff, std::uint64_t seed,
              const std::string& out_path) {
    hc::HopfPtr H = hc::resolve_instance(selector);
    hc::Json report;
    report["instance"] = selector;
    report["cutoff"] = hc::degree_to_json(cutoff);
    bool pass = true;

    const bool has_hopf_structure = [&] {
        const auto* fd = dynamic_cast<const hc::FiniteDimHopf*>(H.get());
        return fd == nullptr || fd->has_product();
    }();

    if (has_hopf_structure) {
        const hc::AxiomReport ax = hc::verify_axioms(*H, cutoff);
        report["axioms"] = hc::axiom_report_to_json(ax);
        pass = pass && ax.all_pass();
    }

    if (const auto* fd = dynamic_cast<const hc::FiniteDimHopf*>(H.get())) {
        const hc::FiniteCoalgebra& C = fd->coalgebra();
        const auto co = C.check_axioms();
        report["coalgebra"] = hc::Json{{"coassociative", co.coassociative},
                                       {"counital", co.counital}};
        pass = pass && co.coassociative && co.counital;

        const auto banach =
            hc::banach_norm_check(C, hc::AlgebraDescriptor::rational(), 1000, seed);
        report["banach"] = hc::banach_report_to_json(banach);
        const auto gn = hc::gn_iterated_check(C, 5, 200, seed);
        report["gn"] = hc::gn_report_to_json(gn);
        const auto kp = hc::kappa_check(C, hc::AlgebraDescriptor::rational());
        report["kappa"] = hc::kappa_report_to_json(kp);
        pass = pass && banach.holds && gn.bound_holds && gn.paths_agree && kp.unit_ok &&
               kp.multiplicative && kp.bijective;
    }

    if (H->name() == "ck") {
        // Appendix identities on sampled rational functionals.
        const hc::Degree tcut = std::min(cutoff, hc::Degree(4));
        auto HH = hc::tensor_square(H);
        hc::Rng rng(seed);
        std::vector<std::array<hc::TruncatedFunctional, 4>> quads;
        for (int s = 0; s < 10; ++s)
            quads.push_back({hc::random_functional(H, tcut, rng),
                             hc::random_functional(H, tcut, rng),
                             hc::random_functional(H, tcut, rng),
                             hc::random_functional(H, tcut, rng)});
        const auto mf = hc::multifalt_check(HH, quads);
        report["multifalt"] = hc::multifalt_report_to_json(mf);
        pass = pass && mf.product_identity && mf.convolution_identity;
    }

    report["pass"] = pass;
    emit(report, out_path);
    return pass ? kExitPass : kExitFail;
}

int cmd_order(const std::string& tableau_path, int max_order, const std::string& out_path) {
    const hc::ButcherTableau t = hc::tableau_from_file(tableau_path);
    hc::Json report = hc::order_report_to_json(hc::order_of(t, max_order));
    const auto warnings = t.lint();
    if (!warnings.empty()) report["lint"] = warnings;
    emit(report, out_path);
    return kExitPass;
}

int cmd_char(const std::string& op, const std::vector<std::string>& inputs,
             const std::string& out_path, double tol) {
    const auto load = [](const std::string& path) {
        const hc::Json j = hc::load_json_file(path);
        return std::make_pair(hc::load_functional(j), j.at("instance").get<std::string>());
    };
    const auto need = [&](size_t n) {
        if (inputs.size() != n)
            throw std::invalid_argument("char " + op + " takes " + std::to_string(n) +
                                        " input dump(s)");
    };

    std::optional<hc::TruncatedFunctional> result;
    std::string selector;
    if (op == "exp" || op == "log" || op == "inv") {
        need(1);
        auto [f, sel] = load(inputs[0]);
        selector = sel;
        if (op == "exp") {
            result = hc::exp_star(f);
        } else if (op == "log") {
            result = hc::log_star(f);
        } else {
            auto inv = hc::unit_inverse(f);
            if (!inv) throw std::invalid_argument("functional is not star-invertible");
            result = *inv;
        }
    } else if (op == "conv" || op == "bch" || op == "compose") {
        need(2);
        auto [f, sel] = load(inputs[0]);
        auto [g, sel2] = load(inputs[1]);
        if (sel != sel2) throw std::invalid_argument("input dumps use different instances");
        selector = sel;
        // Reload the second functional onto the first one's instance object.
        hc::TruncatedFunctional g2(f.instance(), g.cutoff(), g.algebra());
        for (const auto& [id, v] : g.entries()) g2.set(id, v);
        if (op == "conv") {
            result = hc::convolve(f, g2);
        } else if (op == "bch") {
            result = hc::bch(f, g2);
        } else {
            result = hc::compose(f, g2);
        }
    } else {
        throw CLI::ValidationError("op", "unknown char op: " + op);
    }
    (void)tol;
    emit(hc::dump_functional(*result, selector), out_path);
    return kExitPass;
}

int cmd_evolve(const std::string& curve_path, const std::string& richardson,
               const std::string& out_path, double tol) {
    const hc::CurveFile cf = hc::curve_from_file(curve_path);
    const hc::TruncatedFunctional eta = hc::evolve(cf.curve, cf.t1, cf.steps);
    hc::Json out = hc::dump_functional(eta, cf.selector);
    out["is_character_within_tol"] = hc::is_character(eta, tol);

    if (!richardson.empty()) {
        std::vector<int> step_list;
        std::stringstream ss(richardson);
        for (std::string item; std::getline(ss, item, ',');) step_list.push_back(std::stoi(item));
        if (step_list.size() < 2)
            throw std::invalid_argument("--richardson needs at least two step counts");

        const int finest = 2 * *std::max_element(step_list.begin(), step_list.end());
        const hc::TruncatedFunctional ref = hc::evolve(cf.curve, cf.t1, finest);
        const auto err_of = [&](int steps) {
            const hc::TruncatedFunctional run = hc::evolve(cf.curve, cf.t1, steps);
            double mx = 0.0;
            for (const auto& be : ref.instance()->basis_up_to(ref.cutoff()))
                mx = std::max(mx, std::abs(run.value(be.id).f64() - ref.value(be.id).f64()));
            return mx;
        };

        hc::Json table = hc::Json::array();
        std::vector<double> errs;
        for (int s : step_list) errs.push_back(err_of(s));
        for (size_t i = 0; i < step_list.size(); ++i) {
            hc::Json row;
            row["steps"] = step_list[i];
            row["error"] = errs[i];
            if (i > 0 && errs[i] > 1e-14 && errs[i - 1] > 1e-14) {
                const double ratio = static_cast<double>(step_list[i]) / step_list[i - 1];
                row["slope"] = std::log(errs[i - 1] / errs[i]) / std::log(ratio);
            } else {
                row["slope"] = nullptr;
            }
            table.push_back(row);
        }
        out["convergence"] = table;
    }
    emit(out, out_path);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"character groups of graded Hopf algebras at finite truncation"};
    app.require_subcommand(1);

    std::string out_path;
    std::uint64_t seed = 0;
    double tol = hc::kDefaultTolerance;
    app.add_option("--out", out_path, "write the JSON result to this file");
    app.add_option("--seed", seed, "seed for all sampling");
    app.add_option("--tol", tol, "float comparison tolerance");

    auto* trees = app.add_subcommand("trees", "list rooted trees with gamma and sigma");
    int max_order = 4;
    trees->add_option("--max-order", max_order, "largest tree order")->required();

    auto* check = app.add_subcommand("check", "verify Hopf/coalgebra axioms and estimates");
    std::string selector = "ck";
    std::string cutoff_str = "4";
    check->add_option("--instance", selector, "ck | findim:<file> | tensor:<selector>");
    check->add_option("--cutoff", cutoff_str, "truncation degree");

    auto* order = app.add_subcommand("order", "audit the order of a Runge-Kutta tableau");
    std::string tableau_path;
    int order_max = 5;
    order->add_option("tableau", tableau_path, "tableau JSON file")->required();
    order->add_option("--max-order", order_max, "largest order to test");

    auto* chr = app.add_subcommand("char", "character arithmetic on dump files");
    std::string char_op;
    std::vector<std::string> char_inputs;
    chr->add_option("op", char_op, "exp | log | inv | conv | bch | compose")->required();
    chr->add_option("inputs", char_inputs, "input dump file(s)")->expected(1, 2);

    auto* evolve = app.add_subcommand("evolve", "solve eta' = eta * gamma(t) from a curve file");
    std::string curve_path;
    std::string richardson;
    evolve->add_option("curve", curve_path, "curve JSON file")->required();
    evolve->add_option("--richardson", richardson,
                       "comma-separated step counts for a convergence table");

    CLI11_PARSE(app, argc, argv);

    try {
        if (trees->parsed()) return cmd_trees(max_order);
        if (check->parsed())
            return cmd_check(selector, hc::rational_from_string(cutoff_str), seed, out_path);
        if (order->parsed()) return cmd_order(tableau_path, order_max, out_path);
        if (chr->parsed()) return cmd_char(char_op, char_inputs, out_path, tol);
        if (evolve->parsed()) return cmd_evolve(curve_path, richardson, out_path, tol);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitInputError;
}
