#include "hopfrep/runner.hpp"

#include <fstream>
#include <sstream>

#include "hopfrep/errors.hpp"

namespace hopfrep {

namespace {

bool looks_like_path(const std::string& name) {
    return name.find('/') != std::string::npos || name.find(".hp") != std::string::npos;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Instance {
    HopfPtr algebra;
    bool tensor_square = false;  // example-2.6.2:<algebra>
};

Instance resolve_instance(const std::string& name) {
    const std::string prefix = "example-2.6.2:";
    if (name.rfind(prefix, 0) == 0) {
        return Instance{resolve_algebra(name.substr(prefix.size())), true};
    }
    return Instance{resolve_algebra(name), false};
}

QuantumSubgroup resolve_subgroup(const CheckRequest& req, const std::string& h_name,
                                 const std::string& b_name, int d) {
    HopfPtr H = resolve_algebra(h_name);
    HopfPtr B = resolve_algebra(b_name);
    if (!req.pi_path.empty()) {
        auto pi = parse_projection(read_file(req.pi_path), H, B);
        return make_subgroup(std::move(H), std::move(B), std::move(pi), d);
    }
    if (h_name == "eq2" && b_name == "ak") return make_eq2_translation_subgroup(d);
    if (h_name.rfind("cyclic:", 0) == 0 && b_name.rfind("cyclic:", 0) == 0) {
        int n = std::stoi(h_name.substr(7));
        int m = std::stoi(b_name.substr(7));
        return make_cyclic_subgroup(n, m, d);
    }
    throw Error("no built-in projection for this pair; pass --pi FILE");
}

int default_degree(const std::string& check) { return check == "confluence" ? 4 : 3; }

}  // namespace

HopfPtr resolve_algebra(const std::string& name) {
    if (name == "eq2") return make_eq2();
    if (name == "ak") return make_ak();
    if (name.rfind("cyclic:", 0) == 0) return make_cyclic(std::stoi(name.substr(7)));
    if (looks_like_path(name)) {
        ParsedPresentation parsed = parse_presentation(read_file(name));
        if (!parsed.hopf) {
            throw Error("file " + name + " declares no coalgebra structure");
        }
        return parsed.hopf;
    }
    throw Error("unknown instance '" + name + "' (expected eq2, ak, cyclic:<n>, or a file path)");
}

RunOutcome run_check(const CheckRequest& req) {
    static const std::vector<std::string> known = {
        "axioms",     "module",    "comodule", "hopf-module", "hopf-rep-1", "hopf-rep-2",
        "hopf-rep",   "subgroup",  "induce",   "confluence",  "oracle"};
    bool valid = false;
    for (const auto& k : known) valid |= (k == req.check);
    if (!valid) throw Error("unknown check '" + req.check + "'");
    if (req.degree < -1) throw Error("degree must be nonnegative");
    int d = req.degree >= 0 ? req.degree : default_degree(req.check);

    auto need_instances = [&](std::size_t n) {
        if (req.instances.size() != n) {
            throw Error("check '" + req.check + "' expects " + std::to_string(n) +
                        " instance argument(s)");
        }
    };

    Report report;
    if (req.check == "axioms") {
        need_instances(1);
        report = axioms_check(resolve_instance(req.instances[0]).algebra, d);
    } else if (req.check == "confluence") {
        need_instances(1);
        std::string name = req.instances[0];
        PresentationPtr pres;
        if (looks_like_path(name)) {
            pres = parse_presentation(read_file(name), /*require_confluent=*/false, d)
                       .presentation;
        } else {
            pres = resolve_algebra(name)->pres();
        }
        ConfluenceReport cr = Presentation(pres->generators(), pres->rules(), d).confluence();
        report.check = "confluence";
        report.degree = d;
        if (cr.confluent()) {
            report.add_pass("critical-pairs", "-", "overlap degree " + std::to_string(d));
        } else {
            for (const auto& issue : cr.unresolved) {
                report.add_fail(
                    "critical-pair." + std::to_string(issue.rule_a) + "." +
                        std::to_string(issue.rule_b),
                    "-", pres->render_word(issue.superposition), pres->render(issue.reduct_a),
                    pres->render(issue.reduct_b));
            }
        }
    } else if (req.check == "module" || req.check == "comodule" || req.check == "hopf-module" ||
               req.check == "hopf-rep-1" || req.check == "hopf-rep-2" || req.check == "hopf-rep") {
        need_instances(1);
        Instance inst = resolve_instance(req.instances[0]);
        if (inst.tensor_square) {
            TensorSquarePackage pkg = make_tensor_square_package(inst.algebra, d);
            if (req.check == "module") {
                report = module_check(pkg.action, d);
            } else if (req.check == "comodule") {
                report = comodule_check(pkg.coaction, d);
            } else if (req.check == "hopf-module") {
                report = hopf_module_check(pkg.action, pkg.coaction, d);
            } else if (req.check == "hopf-rep-1") {
                report = hopf_rep_first_check(pkg.action, pkg.coaction, pkg.consistency, d);
            } else if (req.check == "hopf-rep-2") {
                ConsistencyMap psi = canonical_product_coaction(pkg.coaction, d);
                report = hopf_rep_second_check(pkg.action, pkg.coaction, psi, d);
            } else {
                ConsistencyMap psi = canonical_product_coaction(pkg.coaction, d);
                report = hopf_rep_full_check(pkg.action, pkg.coaction, pkg.consistency, psi, d);
            }
        } else {
            ActionStructure reg_act = regular_action(inst.algebra, Side::Left, d);
            CoactionStructure reg_co = regular_coaction(inst.algebra, Side::Left, d);
            if (req.check == "module") {
                report = module_check(reg_act, d);
            } else if (req.check == "comodule") {
                report = comodule_check(reg_co, d);
            } else if (req.check == "hopf-module") {
                report = hopf_module_check(reg_act, reg_co, d);
            } else if (req.check == "hopf-rep-1") {
                ConsistencyMap phi = canonical_product_action(reg_act, d);
                report = hopf_rep_first_check(reg_act, reg_co, phi, d);
            } else if (req.check == "hopf-rep-2") {
                ConsistencyMap psi = canonical_product_coaction(reg_co, d);
                report = hopf_rep_second_check(reg_act, reg_co, psi, d);
            } else {
                ConsistencyMap phi = canonical_product_action(reg_act, d);
                ConsistencyMap psi = canonical_product_coaction(reg_co, d);
                report = hopf_rep_full_check(reg_act, reg_co, phi, psi, d);
            }
        }
    } else if (req.check == "subgroup") {
        need_instances(2);
        QuantumSubgroup qs = resolve_subgroup(req, req.instances[0], req.instances[1], d);
        report = subgroup_check(qs, d);
    } else if (req.check == "induce") {
        need_instances(2);
        if (req.module_name != "trivial") {
            throw Error("only the built-in 'trivial' module is available from the CLI");
        }
        QuantumSubgroup qs = resolve_subgroup(req, req.instances[0], req.instances[1], d);
        BModule bm = make_trivial_module(qs.B, d);
        report = induced_rep_check(qs, bm, d);
        // Attach the computed coinvariant words for inspection.
        CoinvariantResult coinv = coinvariant_basis(qs, d);
        std::ostringstream words;
        for (std::size_t i = 0; i < coinv.words.size(); ++i) {
            if (i > 0) words << ", ";
            words << qs.H->pres()->render_word(coinv.words[i]);
        }
        report.add_pass("coinvariants", "-", words.str());
        if (!coinv.words_span_kernel) {
            report.add_fail("coinvariants.kernel-agreement", "-", "-",
                            std::to_string(coinv.words.size()) + " words",
                            std::to_string(coinv.kernel.size()) + " kernel vectors");
        }
    } else if (req.check == "oracle") {
        if (req.instances.size() == 2) {
            const std::string& h = req.instances[0];
            const std::string& b = req.instances[1];
            if (h.rfind("cyclic:", 0) != 0 || b.rfind("cyclic:", 0) != 0) {
                throw Error("the dense oracle covers cyclic group algebras only");
            }
            report = oracle_crosscheck_induced(std::stoi(h.substr(7)), std::stoi(b.substr(7)), d);
        } else {
            need_instances(1);
            const std::string& name = req.instances[0];
            const std::string prefix = "example-2.6.2:";
            if (name.rfind(prefix, 0) == 0) {
                std::string inner = name.substr(prefix.size());
                if (inner.rfind("cyclic:", 0) != 0) {
                    throw Error("the dense oracle covers cyclic group algebras only");
                }
                report = oracle_crosscheck_tensor_square(std::stoi(inner.substr(7)), d);
            } else if (name.rfind("cyclic:", 0) == 0) {
                report = oracle_crosscheck_axioms(std::stoi(name.substr(7)), d);
            } else {
                throw Error("the dense oracle covers cyclic group algebras only");
            }
        }
    }

    report.check = req.check;
    std::ostringstream inst;
    for (std::size_t i = 0; i < req.instances.size(); ++i) {
        if (i > 0) inst << " ";
        inst << req.instances[i];
    }
    report.instance = inst.str();
    report.degree = d;

    RunOutcome out;
    out.rendered = req.format == "json" ? report.to_json_lines() : report.to_text();
    bool expected_pass = req.expect != "fail";
    out.exit_code = (report.passed() == expected_pass) ? 0 : 1;
    out.report = std::move(report);
    return out;
}

}  // namespace hopfrep
