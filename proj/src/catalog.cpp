#include "hopfrep/catalog.hpp"

#include "hopfrep/errors.hpp"

namespace hopfrep {

namespace {

TensorElement pair_element(const PresentationPtr& p,
                           std::initializer_list<std::pair<std::pair<Word, Word>, LaurentScalar>>
                               entries) {
    TensorElement out(algebra_space(p, 2));
    for (const auto& [tuple, coeff] : entries) {
        out.add_term(BasisTuple{tuple.first, tuple.second}, coeff);
    }
    return out;
}

}  // namespace

HopfPtr make_eq2() {
    const Word z{0}, zbar{1}, a{2}, abar{3}, one{};
    std::vector<Generator> gens{{"z", 0}, {"zbar", 1}, {"a", 2}, {"abar", 3}};
    LaurentScalar q = LaurentScalar::q_power(1);
    LaurentScalar qinv = LaurentScalar::q_power(-1);

    std::vector<RewriteRule> rules;
    rules.push_back({Word{2, 0}, LinComb{{Word{0, 2}, qinv}}});  // a z   -> q^-1 z a
    rules.push_back({Word{3, 0}, LinComb{{Word{0, 3}, qinv}}});  // ab z  -> q^-1 z ab
    rules.push_back({Word{2, 1}, LinComb{{Word{1, 2}, q}}});     // a zb  -> q zb a
    rules.push_back({Word{3, 1}, LinComb{{Word{1, 3}, q}}});     // ab zb -> q zb ab
    rules.push_back({Word{3, 2}, LinComb{{Word{2, 3}, qinv}}});  // ab a  -> q^-1 a ab
    rules.push_back({Word{0, 1}, LinComb{{one, LaurentScalar(1)}}});
    rules.push_back({Word{1, 0}, LinComb{{one, LaurentScalar(1)}}});

    auto pres = std::make_shared<Presentation>(std::move(gens), std::move(rules), 4);

    std::map<int, TensorElement> coprod;
    coprod.emplace(0, pair_element(pres, {{{z, z}, LaurentScalar(1)}}));
    coprod.emplace(1, pair_element(pres, {{{zbar, zbar}, LaurentScalar(1)}}));
    coprod.emplace(2, pair_element(pres, {{{a, one}, LaurentScalar(1)}, {{z, a}, LaurentScalar(1)}}));
    coprod.emplace(3, pair_element(pres, {{{abar, one}, LaurentScalar(1)},
                                          {{zbar, abar}, LaurentScalar(1)}}));

    std::map<int, LaurentScalar> counit{
        {0, LaurentScalar(1)}, {1, LaurentScalar(1)}, {2, LaurentScalar(0)}, {3, LaurentScalar(0)}};

    std::map<int, AlgebraElement> antipode;
    antipode.emplace(0, AlgebraElement::from_word(pres, zbar));
    antipode.emplace(1, AlgebraElement::from_word(pres, z));
    antipode.emplace(2, AlgebraElement(pres, LinComb{{Word{1, 2}, LaurentScalar(-1)}}));
    antipode.emplace(3, AlgebraElement(pres, LinComb{{Word{0, 3}, LaurentScalar(-1)}}));

    return std::make_shared<HopfData>(pres, std::move(coprod), std::move(counit),
                                      std::move(antipode), "eq2");
}

HopfPtr make_ak() {
    const Word t{0}, tbar{1}, one{};
    std::vector<Generator> gens{{"t", 0}, {"tbar", 1}};
    std::vector<RewriteRule> rules;
    rules.push_back({Word{1, 0}, LinComb{{Word{0, 1}, LaurentScalar(1)}}});
    auto pres = std::make_shared<Presentation>(std::move(gens), std::move(rules), 4);

    std::map<int, TensorElement> coprod;
    coprod.emplace(0, pair_element(pres, {{{t, one}, LaurentScalar(1)}, {{one, t}, LaurentScalar(1)}}));
    coprod.emplace(1, pair_element(pres, {{{tbar, one}, LaurentScalar(1)},
                                          {{one, tbar}, LaurentScalar(1)}}));

    std::map<int, LaurentScalar> counit{{0, LaurentScalar(0)}, {1, LaurentScalar(0)}};

    std::map<int, AlgebraElement> antipode;
    antipode.emplace(0, AlgebraElement(pres, LinComb{{t, LaurentScalar(-1)}}));
    antipode.emplace(1, AlgebraElement(pres, LinComb{{tbar, LaurentScalar(-1)}}));

    return std::make_shared<HopfData>(pres, std::move(coprod), std::move(counit),
                                      std::move(antipode), "ak");
}

HopfPtr make_cyclic(int n) {
    if (n < 1) throw Error("cyclic group order must be at least 1");
    std::vector<Generator> gens{{"g", 0}};
    std::vector<RewriteRule> rules;
    rules.push_back({Word(static_cast<std::size_t>(n), 0), LinComb{{Word{}, LaurentScalar(1)}}});
    auto pres = std::make_shared<Presentation>(std::move(gens), std::move(rules),
                                               std::max(4, 2 * n));

    std::map<int, TensorElement> coprod;
    coprod.emplace(0, pair_element(pres, {{{Word{0}, Word{0}}, LaurentScalar(1)}}));
    std::map<int, LaurentScalar> counit{{0, LaurentScalar(1)}};
    std::map<int, AlgebraElement> antipode;
    antipode.emplace(0, AlgebraElement::from_word(pres, Word(static_cast<std::size_t>(n - 1), 0)));

    return std::make_shared<HopfData>(pres, std::move(coprod), std::move(counit),
                                      std::move(antipode), "cyclic:" + std::to_string(n));
}

QuantumSubgroup make_eq2_translation_subgroup(int d) {
    HopfPtr H = make_eq2();
    HopfPtr B = make_ak();
    std::map<int, AlgebraElement> pi;
    pi.emplace(0, AlgebraElement::unit(B->pres()));                 // z -> 1
    pi.emplace(1, AlgebraElement::unit(B->pres()));                 // zbar -> 1
    pi.emplace(2, AlgebraElement::from_word(B->pres(), Word{0}));   // a -> t
    pi.emplace(3, AlgebraElement::from_word(B->pres(), Word{1}));   // abar -> tbar
    return make_subgroup(std::move(H), std::move(B), std::move(pi), d);
}

QuantumSubgroup make_cyclic_subgroup(int n, int m, int d) {
    if (m < 1 || n % m != 0) throw Error("subgroup order must divide the group order");
    HopfPtr H = make_cyclic(n);
    HopfPtr B = make_cyclic(m);
    std::map<int, AlgebraElement> pi;
    pi.emplace(0, AlgebraElement::from_word(B->pres(), Word{0}));
    return make_subgroup(std::move(H), std::move(B), std::move(pi), d);
}

HopfPtr evaluate_q(const HopfPtr& hd, const Rational& q0) {
    auto eval_scalar = [&](const LaurentScalar& s) { return LaurentScalar(s.eval(q0)); };
    auto eval_comb = [&](const LinComb& c) {
        LinComb out;
        for (const auto& [w, s] : c) {
            LaurentScalar v = eval_scalar(s);
            if (!v.is_zero()) out.emplace(w, v);
        }
        return out;
    };

    const PresentationPtr& p = hd->pres();
    std::vector<RewriteRule> rules;
    for (const auto& rule : p->rules()) rules.push_back({rule.lhs, eval_comb(rule.rhs)});
    auto pres = std::make_shared<Presentation>(p->generators(), std::move(rules),
                                               p->confluence().overlap_degree);

    std::map<int, TensorElement> coprod;
    for (const auto& [g, v] : hd->coproduct_on_gens()) {
        TensorElement out(algebra_space(pres, 2));
        for (const auto& [tuple, c] : v.terms()) out.add_term(tuple, eval_scalar(c));
        coprod.emplace(g, std::move(out));
    }
    std::map<int, LaurentScalar> counit;
    for (const auto& [g, v] : hd->counit_on_gens()) counit.emplace(g, eval_scalar(v));

    std::optional<std::map<int, AlgebraElement>> antipode;
    if (hd->has_antipode()) {
        antipode.emplace();
        for (std::size_t g = 0; g < p->generators().size(); ++g) {
            AlgebraElement s = hd->antipode_word(Word{static_cast<int>(g)});
            antipode->emplace(static_cast<int>(g), AlgebraElement(pres, eval_comb(s.terms())));
        }
    }
    return std::make_shared<HopfData>(pres, std::move(coprod), std::move(counit),
                                      std::move(antipode),
                                      hd->name() + "@q=" + q0.get_str());
}

DenseGroupAlgebra::DenseGroupAlgebra(int order) : n(order) {
    std::size_t un = static_cast<std::size_t>(n);
    mult = QMatrix(un, un * un);
    for (std::size_t i = 0; i < un; ++i) {
        for (std::size_t j = 0; j < un; ++j) {
            mult.at((i + j) % un, i * un + j) = 1;
        }
    }
    coproduct = QMatrix(un * un, un);
    for (std::size_t k = 0; k < un; ++k) coproduct.at(k * un + k, k) = 1;
    counit = QMatrix(1, un);
    for (std::size_t k = 0; k < un; ++k) counit.at(0, k) = 1;
    antipode = QMatrix(un, un);
    for (std::size_t k = 0; k < un; ++k) antipode.at((un - k) % un, k) = 1;
    unit = QMatrix(un, 1);
    unit.at(0, 0) = 1;
}

namespace {

QMatrix swap_matrix(std::size_t a, std::size_t b) {
    QMatrix m(a * b, a * b);
    for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
            m.at(j * a + i, i * b + j) = 1;
        }
    }
    return m;
}

void compare_verdict(Report& report, const std::string& id, bool symbolic, bool dense) {
    if (symbolic == dense) {
        report.add_pass(id, "-", std::string("both ") + (symbolic ? "pass" : "fail"));
    } else {
        report.add_fail(id, "-", "-", symbolic ? "symbolic pass" : "symbolic fail",
                        dense ? "dense pass" : "dense fail");
    }
}

void throw_on_mismatch(const Report& report) {
    if (!report.passed()) {
        throw EvaluationMismatch("dense oracle disagrees with the symbolic engine:\n" +
                                 report.to_text());
    }
}

bool item_passed(const Report& report, const std::string& id) {
    const ReportItem* item = report.find(id);
    if (item == nullptr) throw Error("missing report item " + id);
    return item->pass;
}

}  // namespace

Report oracle_crosscheck_axioms(int n, int d) {
    Report report;
    report.check = "oracle";
    report.degree = d;
    HopfPtr hd = make_cyclic(n);
    Report symbolic = axioms_check(hd, d);

    DenseGroupAlgebra ga(n);
    std::size_t un = static_cast<std::size_t>(n);
    QMatrix id = QMatrix::identity(un);

    bool coassoc = ga.coproduct.kron(id) * ga.coproduct == id.kron(ga.coproduct) * ga.coproduct;
    bool counit_l = ga.counit.kron(id) * ga.coproduct == id;
    bool counit_r = id.kron(ga.counit) * ga.coproduct == id;
    bool antipode_l = ga.mult * ga.antipode.kron(id) * ga.coproduct == ga.unit * ga.counit;
    bool antipode_r = ga.mult * id.kron(ga.antipode) * ga.coproduct == ga.unit * ga.counit;
    QMatrix middle_swap = id.kron(swap_matrix(un, un)).kron(id);
    bool delta_mult = ga.coproduct * ga.mult ==
                      ga.mult.kron(ga.mult) * middle_swap * ga.coproduct.kron(ga.coproduct);
    bool counit_mult = ga.counit * ga.mult == ga.counit.kron(ga.counit);

    compare_verdict(report, "coassoc", item_passed(symbolic, "coalgebra.coassoc"), coassoc);
    compare_verdict(report, "counit.left", item_passed(symbolic, "coalgebra.counit.left"),
                    counit_l);
    compare_verdict(report, "counit.right", item_passed(symbolic, "coalgebra.counit.right"),
                    counit_r);
    compare_verdict(report, "antipode.left", item_passed(symbolic, "antipode.antipode.law.left"),
                    antipode_l);
    compare_verdict(report, "antipode.right", item_passed(symbolic, "antipode.antipode.law.right"),
                    antipode_r);
    compare_verdict(report, "coproduct.multiplicative",
                    item_passed(symbolic, "bialgebra.coproduct.multiplicative"), delta_mult);
    compare_verdict(report, "counit.multiplicative",
                    item_passed(symbolic, "bialgebra.counit.multiplicative"), counit_mult);
    throw_on_mismatch(report);
    return report;
}

Report oracle_crosscheck_tensor_square(int n, int d) {
    Report report;
    report.check = "oracle";
    report.degree = d;
    HopfPtr hd = make_cyclic(n);
    TensorSquarePackage pkg = make_tensor_square_package(hd, d);

    Report sym_module = module_check(pkg.action, d);
    Report sym_comodule = comodule_check(pkg.coaction, d);
    Report sym_compat = hopf_module_check(pkg.action, pkg.coaction, d);
    Report sym_hom = module_hom_check(pkg.coaction.coaction, pkg.action,
                                      pkg.consistency.as_action(), d);

    DenseGroupAlgebra ga(n);
    std::size_t un = static_cast<std::size_t>(n);
    QMatrix id = QMatrix::identity(un);
    QMatrix id2 = QMatrix::identity(un * un);

    QMatrix alpha = id.kron(ga.mult);  // n^3 -> n^2
    QMatrix beta(un * un * un, un * un);
    for (std::size_t i = 0; i < un; ++i) {
        for (std::size_t j = 0; j < un; ++j) {
            beta.at((i * un + j) * un + i, i * un + j) = 1;
        }
    }

    bool unit_law = alpha * id2.kron(ga.unit) == id2;
    bool assoc = alpha * alpha.kron(id) == alpha * id2.kron(ga.mult);
    bool counit_law = id2.kron(ga.counit) * beta == id2;
    bool coassoc = id2.kron(ga.coproduct) * beta == beta.kron(id) * beta;

    QMatrix path1 = beta * alpha;
    QMatrix path2 = alpha.kron(ga.mult) * id2.kron(swap_matrix(un, un)).kron(id) *
                    beta.kron(ga.coproduct);
    bool compat = path1 == path2;

    QMatrix phi = id.kron(ga.mult).kron(id) * id2.kron(swap_matrix(un, un));  // n^4 -> n^3
    bool hom = beta * alpha == phi * beta.kron(id);

    compare_verdict(report, "module.unit", item_passed(sym_module, "unit"), unit_law);
    compare_verdict(report, "module.assoc", item_passed(sym_module, "assoc"), assoc);
    compare_verdict(report, "comodule.counit", item_passed(sym_comodule, "counit"), counit_law);
    compare_verdict(report, "comodule.coassoc", item_passed(sym_comodule, "coassoc"), coassoc);
    compare_verdict(report, "compatibility", sym_compat.passed(), compat);
    compare_verdict(report, "consistency-hom", sym_hom.passed(), hom);

    // The compatibility square fails on both paths; the first offending
    // tuple must also agree. Dense columns are consulted in the symbolic
    // enumeration order.
    if (!sym_compat.passed() && !compat) {
        std::string dense_witness;
        for (const auto& tuple :
             [&] {
                 std::vector<BasisTuple> out;
                 for (const auto& wt : pkg.carrier->basis_tuples(d)) {
                     for (const auto& x : hd->pres()->basis(d)) {
                         BasisTuple t = wt;
                         t.emplace_back(x);
                         out.push_back(std::move(t));
                     }
                 }
                 return out;
             }()) {
            std::size_t i = std::get<Word>(tuple[0]).size() % un;
            std::size_t j = std::get<Word>(tuple[1]).size() % un;
            std::size_t k = std::get<Word>(tuple[2]).size() % un;
            std::size_t col = (i * un + j) * un + k;
            bool differs = false;
            for (std::size_t r = 0; r < path1.rows(); ++r) {
                if (path1.at(r, col) != path2.at(r, col)) {
                    differs = true;
                    break;
                }
            }
            if (differs) {
                dense_witness = render_tuple(tuple, pkg.action.action.domain());
                break;
            }
        }
        const ReportItem* item = sym_compat.find("compatibility");
        if (item != nullptr && item->witness == dense_witness && !dense_witness.empty()) {
            report.add_pass("compatibility.witness", "(9)", "witness=" + dense_witness);
        } else {
            report.add_fail("compatibility.witness", "(9)", dense_witness,
                            item != nullptr ? item->witness : "-", dense_witness);
        }
    }
    throw_on_mismatch(report);
    return report;
}

Report oracle_crosscheck_induced(int n, int m, int d) {
    Report report;
    report.check = "oracle";
    report.degree = d;
    QuantumSubgroup qs = make_cyclic_subgroup(n, m, d);
    BModule bm = make_trivial_module(qs.B, d);
    Report symbolic = induced_rep_check(qs, bm, d);
    CoinvariantResult coinv = coinvariant_basis(qs, d);

    DenseGroupAlgebra H(n), B(m);
    std::size_t un = static_cast<std::size_t>(n);
    std::size_t um = static_cast<std::size_t>(m);
    QMatrix pi(um, un);
    for (std::size_t k = 0; k < un; ++k) pi.at(k % um, k) = 1;

    QMatrix idn = QMatrix::identity(un);
    QMatrix r = idn.kron(pi) * H.coproduct;              // n -> n*m
    QMatrix embed = idn.kron(B.unit);                    // n -> n*m, h -> h (x) 1
    std::vector<std::vector<Rational>> kernel = (r - embed).kernel();

    // Trivial one-dimensional module: the induced space is kernel (x) Q.
    std::size_t dim = kernel.size();
    std::size_t sym_dim = coinv.words.size();
    if (dim != sym_dim) {
        report.add_fail("dimension.equal", "-", "-", std::to_string(sym_dim),
                        std::to_string(dim));
    } else {
        report.add_pass("dimension.equal", "-", std::to_string(dim) + " basis vectors");
    }

    // Dense induced maps over the kernel basis. Each kernel vector is
    // supported on a single group element here; locate it.
    std::vector<std::size_t> support(dim);
    for (std::size_t s = 0; s < dim; ++s) {
        std::size_t where = un;
        for (std::size_t k = 0; k < un; ++k) {
            if (kernel[s][k] != 0) {
                if (where != un) throw Error("unexpected multi-element coinvariant in K[C_n]");
                where = k;
            }
        }
        support[s] = where;
    }

    QMatrix alpha(dim, un * dim);
    for (std::size_t i = 0; i < un; ++i) {
        for (std::size_t s = 0; s < dim; ++s) {
            // eta is the counit character, so the action only rescales.
            alpha.at(s, i * dim + s) = 1;
        }
    }
    QMatrix beta(un * dim, dim);
    for (std::size_t s = 0; s < dim; ++s) beta.at(support[s] * dim + s, s) = 1;
    QMatrix phi(un * dim, un * un * dim);
    for (std::size_t i = 0; i < un; ++i) {
        for (std::size_t j = 0; j < un; ++j) {
            for (std::size_t s = 0; s < dim; ++s) {
                phi.at(j * dim + s, (i * un + j) * dim + s) = 1;
            }
        }
    }

    QMatrix idd = QMatrix::identity(dim);
    QMatrix idnd = QMatrix::identity(un * dim);
    bool unit_law = true;
    for (std::size_t s = 0; s < dim; ++s) {
        for (std::size_t t = 0; t < dim; ++t) {
            if (alpha.at(s, 0 * dim + t) != (s == t ? 1 : 0)) unit_law = false;
        }
    }
    bool assoc = alpha * idn.kron(alpha) == alpha * H.mult.kron(idd);
    bool counit_law = H.counit.kron(idd) * beta == idd;
    bool coassoc = H.coproduct.kron(idd) * beta == idn.kron(beta) * beta;
    bool phi_unit = true;
    for (std::size_t row = 0; row < un * dim; ++row) {
        for (std::size_t col = 0; col < un * dim; ++col) {
            if (phi.at(row, col) != (row == col ? 1 : 0)) phi_unit = false;
        }
    }
    bool phi_assoc = phi * idn.kron(phi) == phi * H.mult.kron(idnd);
    bool hom = beta * alpha == phi * idn.kron(beta);

    compare_verdict(report, "module.unit",
                    item_passed(symbolic, "first-type.module.unit"), unit_law);
    compare_verdict(report, "module.assoc",
                    item_passed(symbolic, "first-type.module.assoc"), assoc);
    compare_verdict(report, "comodule.counit",
                    item_passed(symbolic, "first-type.comodule.counit"), counit_law);
    compare_verdict(report, "comodule.coassoc",
                    item_passed(symbolic, "first-type.comodule.coassoc"), coassoc);
    compare_verdict(report, "consistency.unit",
                    item_passed(symbolic, "first-type.consistency.module.unit"), phi_unit);
    compare_verdict(report, "consistency.assoc",
                    item_passed(symbolic, "first-type.consistency.module.assoc"), phi_assoc);
    compare_verdict(report, "coaction-hom",
                    item_passed(symbolic, "first-type.coaction.equivariance"), hom);
    throw_on_mismatch(report);
    return report;
}

}  // namespace hopfrep
