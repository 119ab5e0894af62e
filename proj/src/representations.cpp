#include "hopfrep/representations.hpp"

#include <algorithm>

#include "hopfrep/errors.hpp"

namespace hopfrep {

std::string side_name(Side side) { return side == Side::Left ? "left" : "right"; }

CarrierPtr Carrier::finite(FiniteBasisPtr basis) {
    auto c = std::shared_ptr<Carrier>(new Carrier());
    c->kind_ = Kind::Finite;
    c->id_ = basis->id;
    c->ambient_ = finite_space(basis);
    c->finite_ = std::move(basis);
    return c;
}

CarrierPtr Carrier::algebra(PresentationPtr p, std::string id) {
    auto c = std::shared_ptr<Carrier>(new Carrier());
    c->kind_ = Kind::AlgebraBasis;
    c->id_ = std::move(id);
    c->ambient_ = algebra_space(p, 1);
    c->pres_ = std::move(p);
    return c;
}

CarrierPtr Carrier::word_pairs(PresentationPtr p, std::string id) {
    auto c = std::shared_ptr<Carrier>(new Carrier());
    c->kind_ = Kind::WordPairs;
    c->id_ = std::move(id);
    c->ambient_ = algebra_space(p, 2);
    c->pres_ = std::move(p);
    return c;
}

CarrierPtr Carrier::subset(std::string id, SpaceDescriptor ambient,
                           std::vector<std::pair<BasisTuple, int>> graded_tuples, int max_grade) {
    auto c = std::shared_ptr<Carrier>(new Carrier());
    c->kind_ = Kind::Subset;
    c->id_ = std::move(id);
    c->ambient_ = std::move(ambient);
    c->subset_ = std::move(graded_tuples);
    c->max_grade_ = max_grade;
    return c;
}

CarrierPtr Carrier::product_left(PresentationPtr p, CarrierPtr inner) {
    auto c = std::shared_ptr<Carrier>(new Carrier());
    c->kind_ = Kind::ProductLeft;
    c->id_ = "Alg(x)" + inner->id();
    c->ambient_ = tensor_space(algebra_space(p, 1), inner->ambient());
    c->pres_ = std::move(p);
    c->inner_ = std::move(inner);
    return c;
}

CarrierPtr Carrier::product_right(CarrierPtr inner, PresentationPtr p) {
    auto c = std::shared_ptr<Carrier>(new Carrier());
    c->kind_ = Kind::ProductRight;
    c->id_ = inner->id() + "(x)Alg";
    c->ambient_ = tensor_space(inner->ambient(), algebra_space(p, 1));
    c->pres_ = std::move(p);
    c->inner_ = std::move(inner);
    return c;
}

std::vector<BasisTuple> Carrier::basis_tuples(int degree) const {
    std::vector<BasisTuple> out;
    switch (kind_) {
        case Kind::Finite:
            for (const auto& [name, grade] : finite_->labels) {
                if (grade <= degree) out.push_back(BasisTuple{name});
            }
            break;
        case Kind::AlgebraBasis:
            for (auto& w : pres_->basis(degree)) out.push_back(BasisTuple{std::move(w)});
            break;
        case Kind::WordPairs: {
            // Pairs of words graded by total length.
            std::vector<Word> words = pres_->basis(degree);
            for (const auto& u : words) {
                for (const auto& v : words) {
                    if (static_cast<int>(u.size() + v.size()) <= degree) {
                        out.push_back(BasisTuple{u, v});
                    }
                }
            }
            // Degree-then-lex order on the pair grading.
            std::stable_sort(out.begin(), out.end(), [](const BasisTuple& a, const BasisTuple& b) {
                auto total = [](const BasisTuple& t) {
                    return std::get<Word>(t[0]).size() + std::get<Word>(t[1]).size();
                };
                return total(a) < total(b);
            });
            break;
        }
        case Kind::Subset:
            for (const auto& [tuple, grade] : subset_) {
                if (grade <= degree) out.push_back(tuple);
            }
            break;
        case Kind::ProductLeft:
            for (const auto& w : pres_->basis(degree)) {
                for (const auto& inner : inner_->basis_tuples(degree)) {
                    BasisTuple t{Label(w)};
                    t.insert(t.end(), inner.begin(), inner.end());
                    out.push_back(std::move(t));
                }
            }
            break;
        case Kind::ProductRight:
            for (const auto& inner : inner_->basis_tuples(degree)) {
                for (const auto& w : pres_->basis(degree)) {
                    BasisTuple t = inner;
                    t.emplace_back(w);
                    out.push_back(std::move(t));
                }
            }
            break;
    }
    return out;
}

bool Carrier::equals(const Carrier& other) const {
    if (this == &other) return true;
    if (kind_ != other.kind_ || id_ != other.id_) return false;
    if (!ambient_.equals(other.ambient_)) return false;
    switch (kind_) {
        case Kind::Finite:
            return finite_->equals(*other.finite_);
        case Kind::AlgebraBasis:
        case Kind::WordPairs:
            return pres_->equals(*other.pres_);
        case Kind::Subset:
            return subset_ == other.subset_ && max_grade_ == other.max_grade_;
        case Kind::ProductLeft:
        case Kind::ProductRight:
            return inner_->equals(*other.inner_);
    }
    return false;
}

namespace {

void record_result(Report& report, const std::string& id, const std::string& diagram,
                   const EqualityResult& r, const SpaceDescriptor& domain,
                   const std::string& note = "") {
    if (r.equal) {
        report.add_pass(id, diagram, note);
    } else {
        report.add_fail(id, diagram, render_tuple(*r.witness, domain), r.lhs.str(), r.rhs.str(),
                        note);
    }
}

/// Cartesian product of algebra words and carrier tuples, algebra factors
/// first (left) or last (right).
std::vector<BasisTuple> action_test_tuples(const HopfPtr& hd, const CarrierPtr& carrier, Side side,
                                           int h_factors, int d) {
    std::vector<BasisTuple> hs{BasisTuple{}};
    std::vector<Word> words = hd->pres()->basis(d);
    for (int k = 0; k < h_factors; ++k) {
        std::vector<BasisTuple> next;
        for (const auto& t : hs) {
            for (const auto& w : words) {
                BasisTuple s = t;
                s.emplace_back(w);
                next.push_back(std::move(s));
            }
        }
        hs = std::move(next);
    }
    std::vector<BasisTuple> out;
    for (const auto& h : hs) {
        for (const auto& wt : carrier->basis_tuples(d)) {
            if (side == Side::Left) {
                BasisTuple t = h;
                t.insert(t.end(), wt.begin(), wt.end());
                out.push_back(std::move(t));
            } else {
                BasisTuple t = wt;
                t.insert(t.end(), h.begin(), h.end());
                out.push_back(std::move(t));
            }
        }
    }
    return out;
}

}  // namespace

ActionStructure make_action(CarrierPtr carrier, HopfPtr algebra, Side side, LinearRule action,
                            int validation_degree) {
    const SpaceDescriptor& wamb = carrier->ambient();
    SpaceDescriptor expected = side == Side::Left
                                   ? tensor_space(algebra_space(algebra->pres(), 1), wamb)
                                   : tensor_space(wamb, algebra_space(algebra->pres(), 1));
    if (!action.domain().equals(expected) || !action.codomain().equals(wamb)) {
        throw SpaceMismatch("action map spaces do not match the carrier and chirality");
    }
    ActionStructure act{std::move(carrier), std::move(algebra), side, std::move(action), {}};
    act.validation = module_check(act, validation_degree);
    return act;
}

CoactionStructure make_coaction(CarrierPtr carrier, HopfPtr algebra, Side side, LinearRule coaction,
                                int validation_degree) {
    const SpaceDescriptor& wamb = carrier->ambient();
    SpaceDescriptor expected = side == Side::Left
                                   ? tensor_space(algebra_space(algebra->pres(), 1), wamb)
                                   : tensor_space(wamb, algebra_space(algebra->pres(), 1));
    if (!coaction.domain().equals(wamb) || !coaction.codomain().equals(expected)) {
        throw SpaceMismatch("coaction map spaces do not match the carrier and chirality");
    }
    CoactionStructure co{std::move(carrier), std::move(algebra), side, std::move(coaction), {}};
    co.validation = comodule_check(co, validation_degree);
    return co;
}

ActionStructure ConsistencyMap::as_action() const {
    return ActionStructure{product_carrier, algebra, side, map, validation};
}

CoactionStructure ConsistencyMap::as_coaction() const {
    return CoactionStructure{product_carrier, algebra, side, map, validation};
}

Report module_check(const ActionStructure& act, int d) {
    Report report;
    report.check = "module";
    report.degree = d;
    const HopfPtr& hd = act.algebra;
    const PresentationPtr& p = hd->pres();
    const SpaceDescriptor& wamb = act.carrier->ambient();
    std::string note = "side=" + side_name(act.side);

    // Diagram (1): the unit acts as the identity.
    LinearRule embed = act.side == Side::Left ? unit_embed_left(p, wamb) : unit_embed_right(p, wamb);
    LinearRule unit_path = map_compose(act.action, embed);
    record_result(report, "unit", "(1)",
                  maps_equal_on(unit_path, map_identity(wamb), act.carrier->basis_tuples(d)), wamb,
                  note);

    // Diagram (2): acting twice equals acting by the product.
    SpaceDescriptor space3 = act.side == Side::Left
                                 ? tensor_space(algebra_space(p, 2), wamb)
                                 : tensor_space(wamb, algebra_space(p, 2));
    LinearRule lhs, rhs;
    if (act.side == Side::Left) {
        lhs = map_compose(act.action, map_at(space3, 1, act.action));
        rhs = map_compose(act.action, map_at(space3, 0, mul_rule(p)));
    } else {
        lhs = map_compose(act.action, map_at(space3, 0, act.action));
        rhs = map_compose(act.action, map_at(space3, wamb.arity(), mul_rule(p)));
    }
    record_result(report, "assoc", "(2)",
                  maps_equal_on(lhs, rhs, action_test_tuples(hd, act.carrier, act.side, 2, d)),
                  space3, note);
    return report;
}

Report comodule_check(const CoactionStructure& co, int d) {
    Report report;
    report.check = "comodule";
    report.degree = d;
    const HopfPtr& hd = co.algebra;
    const PresentationPtr& p = hd->pres();
    const SpaceDescriptor& wamb = co.carrier->ambient();
    const SpaceDescriptor& hw = co.coaction.codomain();
    std::string note = "side=" + side_name(co.side);
    std::vector<BasisTuple> tuples = co.carrier->basis_tuples(d);

    // Diagram (3): contracting the coaction with the counit is the identity.
    std::size_t eps_pos = co.side == Side::Left ? 0 : wamb.arity();
    LinearRule counit_path = map_compose(counit_contract(hd, hw, eps_pos), co.coaction);
    record_result(report, "counit", "(3)", maps_equal_on(counit_path, map_identity(wamb), tuples),
                  wamb, note);

    // Diagram (4): coassociativity of the coaction.
    LinearRule lhs, rhs;
    if (co.side == Side::Left) {
        lhs = map_compose(map_at(hw, 0, coproduct_rule(hd)), co.coaction);
        rhs = map_compose(map_at(hw, 1, co.coaction), co.coaction);
    } else {
        lhs = map_compose(map_at(hw, wamb.arity(), coproduct_rule(hd)), co.coaction);
        rhs = map_compose(map_at(hw, 0, co.coaction), co.coaction);
    }
    record_result(report, "coassoc", "(4)", maps_equal_on(lhs, rhs, tuples), wamb, note);
    return report;
}

Report module_hom_check(const LinearRule& f, const ActionStructure& a1, const ActionStructure& a2,
                        int d) {
    Report report;
    report.check = "module-hom";
    report.degree = d;
    if (a1.side != a2.side) throw SpaceMismatch("module homomorphism requires equal chirality");
    const PresentationPtr& p = a1.algebra->pres();
    if (!f.domain().equals(a1.carrier->ambient()) || !f.codomain().equals(a2.carrier->ambient())) {
        throw SpaceMismatch("hom candidate does not map the first carrier into the second");
    }
    LinearRule lhs = map_compose(f, a1.action);
    LinearRule rhs;
    if (a1.side == Side::Left) {
        SpaceDescriptor dom = tensor_space(algebra_space(p, 1), a1.carrier->ambient());
        rhs = map_compose(a2.action, map_at(dom, 1, f));
    } else {
        SpaceDescriptor dom = tensor_space(a1.carrier->ambient(), algebra_space(p, 1));
        rhs = map_compose(a2.action, map_at(dom, 0, f));
    }
    record_result(report, "equivariance", "(5)",
                  maps_equal_on(lhs, rhs, action_test_tuples(a1.algebra, a1.carrier, a1.side, 1, d)),
                  lhs.domain(), "side=" + side_name(a1.side));
    return report;
}

Report comodule_hom_check(const LinearRule& f, const CoactionStructure& c1,
                          const CoactionStructure& c2, int d) {
    Report report;
    report.check = "comodule-hom";
    report.degree = d;
    if (c1.side != c2.side) throw SpaceMismatch("comodule homomorphism requires equal chirality");
    if (!f.domain().equals(c1.carrier->ambient()) || !f.codomain().equals(c2.carrier->ambient())) {
        throw SpaceMismatch("hom candidate does not map the first carrier into the second");
    }
    LinearRule lhs, rhs;
    rhs = map_compose(c2.coaction, f);
    if (c1.side == Side::Left) {
        lhs = map_compose(map_at(c1.coaction.codomain(), 1, f), c1.coaction);
    } else {
        lhs = map_compose(map_at(c1.coaction.codomain(), 0, f), c1.coaction);
    }
    record_result(report, "colinearity", "(6)",
                  maps_equal_on(lhs, rhs, c1.carrier->basis_tuples(d)), f.domain(),
                  "side=" + side_name(c1.side));
    return report;
}

ConsistencyMap canonical_product_action(const ActionStructure& act, int d) {
    const HopfPtr& hd = act.algebra;
    const PresentationPtr& p = hd->pres();
    const SpaceDescriptor& wamb = act.carrier->ambient();

    LinearRule phi;
    CarrierPtr product;
    if (act.side == Side::Left) {
        product = Carrier::product_left(p, act.carrier);
        SpaceDescriptor dom = tensor_space(algebra_space(p, 2), wamb);
        LinearRule split = map_at(dom, 0, coproduct_rule(hd));          // h1 h2 h' w
        LinearRule swap = map_compose(map_twist(split.codomain(), 1), split);  // h1 h' h2 w
        LinearRule mul0 = map_compose(map_at(swap.codomain(), 0, mul_rule(p)), swap);
        phi = map_compose(map_at(mul0.codomain(), 1, act.action), mul0);
    } else {
        product = Carrier::product_right(act.carrier, p);
        SpaceDescriptor dom = tensor_space(wamb, algebra_space(p, 2));
        LinearRule split = map_at(dom, wamb.arity() + 1, coproduct_rule(hd));  // w s x1 x2
        LinearRule swap = map_compose(map_twist(split.codomain(), wamb.arity()), split);  // w x1 s x2
        LinearRule act0 = map_compose(map_at(swap.codomain(), 0, act.action), swap);      // w' s x2
        phi = map_compose(map_at(act0.codomain(), wamb.arity(), mul_rule(p)), act0);
    }
    ConsistencyMap out{ConsistencyKind::ModuleMap, act.side, hd, product, phi, {}};
    out.validation = module_check(out.as_action(), d);
    return out;
}

ConsistencyMap canonical_product_coaction(const CoactionStructure& co, int d) {
    const HopfPtr& hd = co.algebra;
    const PresentationPtr& p = hd->pres();
    const SpaceDescriptor& wamb = co.carrier->ambient();

    LinearRule psi;
    CarrierPtr product;
    if (co.side == Side::Left) {
        product = Carrier::product_left(p, co.carrier);
        SpaceDescriptor dom = tensor_space(algebra_space(p, 1), wamb);
        LinearRule coact = map_at(dom, 1, co.coaction);                       // h w-1 w0
        LinearRule split = map_compose(map_at(coact.codomain(), 0, coproduct_rule(hd)), coact);
        LinearRule swap = map_compose(map_twist(split.codomain(), 1), split);  // h1 w-1 h2 w0
        psi = map_compose(map_at(swap.codomain(), 0, mul_rule(p)), swap);
    } else {
        product = Carrier::product_right(co.carrier, p);
        SpaceDescriptor dom = tensor_space(wamb, algebra_space(p, 1));
        LinearRule coact = map_at(dom, 0, co.coaction);                       // w0 w1 h
        LinearRule split =
            map_compose(map_at(coact.codomain(), wamb.arity() + 1, coproduct_rule(hd)), coact);
        LinearRule swap = map_compose(map_twist(split.codomain(), wamb.arity()), split);
        psi = map_compose(map_at(swap.codomain(), wamb.arity() + 1, mul_rule(p)), swap);
    }
    ConsistencyMap out{ConsistencyKind::ComoduleMap, co.side, hd, product, psi, {}};
    out.validation = comodule_check(out.as_coaction(), d);
    return out;
}

namespace {

/// The roundabout path of diagram (9): split both tensor legs, twist, then
/// multiply and act.
LinearRule compatibility_path(const ActionStructure& act, const CoactionStructure& co) {
    const HopfPtr& hd = act.algebra;
    const PresentationPtr& p = hd->pres();
    const SpaceDescriptor& wamb = act.carrier->ambient();
    if (act.side == Side::Left) {
        SpaceDescriptor dom = tensor_space(algebra_space(p, 1), wamb);
        LinearRule split = map_at(dom, 0, coproduct_rule(hd));                        // h1 h2 w
        LinearRule coact = map_compose(map_at(split.codomain(), 2, co.coaction), split);
        LinearRule swap = map_compose(map_twist(coact.codomain(), 1), coact);         // h1 w-1 h2 w0
        LinearRule mul0 = map_compose(map_at(swap.codomain(), 0, mul_rule(p)), swap);
        return map_compose(map_at(mul0.codomain(), 1, act.action), mul0);
    }
    SpaceDescriptor dom = tensor_space(wamb, algebra_space(p, 1));
    LinearRule coact = map_at(dom, 0, co.coaction);                                    // w0 w1 x
    LinearRule split =
        map_compose(map_at(coact.codomain(), wamb.arity() + 1, coproduct_rule(hd)), coact);
    LinearRule swap = map_compose(map_twist(split.codomain(), wamb.arity()), split);   // w0 x1 w1 x2
    LinearRule act0 = map_compose(map_at(swap.codomain(), 0, act.action), swap);
    return map_compose(map_at(act0.codomain(), wamb.arity(), mul_rule(p)), act0);
}

}  // namespace

Report hopf_module_check(const ActionStructure& act, const CoactionStructure& co, int d) {
    Report report;
    report.check = "hopf-module";
    report.degree = d;
    if (act.side != co.side) throw SpaceMismatch("module and comodule chirality must agree");
    if (!act.carrier->equals(*co.carrier)) {
        throw SpaceMismatch("module and comodule must share a carrier");
    }
    LinearRule direct = map_compose(co.coaction, act.action);
    LinearRule roundabout = compatibility_path(act, co);
    record_result(report, "compatibility", "(9)",
                  maps_equal_on(direct, roundabout,
                                action_test_tuples(act.algebra, act.carrier, act.side, 1, d)),
                  direct.domain(), "side=" + side_name(act.side));
    return report;
}

Report equivalence_check(const ActionStructure& act, const CoactionStructure& co, int d) {
    Report report;
    report.check = "equivalence";
    report.degree = d;

    Report cond1 = hopf_module_check(act, co, d);
    ConsistencyMap phi = canonical_product_action(act, d);
    Report cond2 = module_hom_check(co.coaction, act, phi.as_action(), d);
    ConsistencyMap psi = canonical_product_coaction(co, d);
    Report cond3 = comodule_hom_check(act.action, psi.as_coaction(), co, d);

    bool v1 = cond1.passed();
    bool v2 = cond2.passed();
    bool v3 = cond3.passed();
    report.absorb(cond1, "condition1");
    report.absorb(cond2, "condition2");
    report.absorb(cond3, "condition3");

    auto verdict = [](bool b) { return b ? std::string("pass") : std::string("fail"); };
    std::string triple = verdict(v1) + "," + verdict(v2) + "," + verdict(v3);
    if (v1 == v2 && v2 == v3) {
        report.items.push_back(ReportItem{"agreement", "(9)+(5)+(6)", true, "", "", "", triple});
    } else {
        report.items.push_back(
            ReportItem{"agreement", "(9)+(5)+(6)", false, "-", "-", "-", triple});
    }
    return report;
}

Report hopf_rep_first_check(const ActionStructure& act, const CoactionStructure& co,
                            const ConsistencyMap& phi, int d) {
    Report report;
    report.check = "hopf-rep-1";
    report.degree = d;
    if (phi.kind != ConsistencyKind::ModuleMap) {
        throw SpaceMismatch("first-type check requires a module consistency map");
    }
    report.absorb(module_check(act, d), "module");
    report.absorb(comodule_check(co, d), "comodule");
    report.absorb(module_check(phi.as_action(), d), "consistency.module");
    report.absorb(module_hom_check(co.coaction, act, phi.as_action(), d), "coaction");
    return report;
}

Report hopf_rep_second_check(const ActionStructure& act, const CoactionStructure& co,
                             const ConsistencyMap& psi, int d) {
    Report report;
    report.check = "hopf-rep-2";
    report.degree = d;
    if (psi.kind != ConsistencyKind::ComoduleMap) {
        throw SpaceMismatch("second-type check requires a comodule consistency map");
    }
    report.absorb(module_check(act, d), "module");
    report.absorb(comodule_check(co, d), "comodule");
    report.absorb(comodule_check(psi.as_coaction(), d), "consistency.comodule");
    report.absorb(comodule_hom_check(act.action, psi.as_coaction(), co, d), "action");
    return report;
}

Report hopf_rep_full_check(const ActionStructure& act, const CoactionStructure& co,
                           const ConsistencyMap& phi, const ConsistencyMap& psi, int d) {
    Report report;
    report.check = "hopf-rep";
    report.degree = d;
    report.absorb(hopf_rep_first_check(act, co, phi, d), "first");
    report.absorb(hopf_rep_second_check(act, co, psi, d), "second");
    return report;
}

TensorSquarePackage make_tensor_square_package(const HopfPtr& hd, int d) {
    const PresentationPtr& p = hd->pres();
    CarrierPtr carrier = Carrier::word_pairs(p, hd->name().empty() ? "HxH" : hd->name() + "^(x)2");

    // Action: (u, v, x) -> (u, v.x)
    SpaceDescriptor act_dom = algebra_space(p, 3);
    LinearRule action = map_at(act_dom, 1, mul_rule(p));

    // Coaction: (u, v) -> sum (u1, v, u2)
    SpaceDescriptor w_dom = algebra_space(p, 2);
    LinearRule split = map_at(w_dom, 0, coproduct_rule(hd));
    LinearRule coaction = map_compose(map_twist(split.codomain(), 1), split);

    // Consistency map: (u, v, s, x) -> (u, v.x, s)
    SpaceDescriptor phi_dom = algebra_space(p, 4);
    LinearRule past = map_twist(phi_dom, 2);  // (u, v, x, s)
    LinearRule phi = map_compose(map_at(past.codomain(), 1, mul_rule(p)), past);

    TensorSquarePackage pkg;
    pkg.carrier = carrier;
    pkg.action = make_action(carrier, hd, Side::Right, action, d);
    pkg.coaction = make_coaction(carrier, hd, Side::Right, coaction, d);
    ConsistencyMap cm{ConsistencyKind::ModuleMap, Side::Right, hd,
                      Carrier::product_right(carrier, p), phi, {}};
    cm.validation = module_check(cm.as_action(), d);
    pkg.consistency = std::move(cm);
    return pkg;
}

ActionStructure regular_action(const HopfPtr& hd, Side side, int d) {
    CarrierPtr carrier = Carrier::algebra(hd->pres(), hd->name().empty() ? "H" : hd->name());
    return make_action(carrier, hd, side, mul_rule(hd->pres()), d);
}

CoactionStructure regular_coaction(const HopfPtr& hd, Side side, int d) {
    CarrierPtr carrier = Carrier::algebra(hd->pres(), hd->name().empty() ? "H" : hd->name());
    return make_coaction(carrier, hd, side, coproduct_rule(hd), d);
}

}  // namespace hopfrep
