#include "hopfrep/induction.hpp"

#include <algorithm>
#include <set>

#include "hopfrep/errors.hpp"
#include "hopfrep/linalg.hpp"

namespace hopfrep {

AlgebraElement QuantumSubgroup::pi_word(const Word& w) const {
    AlgebraElement acc = AlgebraElement::unit(B->pres());
    for (int letter : w) acc = acc * pi_on_gens.at(letter);
    return acc;
}

AlgebraElement QuantumSubgroup::pi(const AlgebraElement& h) const {
    AlgebraElement out = AlgebraElement::zero(B->pres());
    for (const auto& [w, c] : h.terms()) out = out + pi_word(w).scaled(c);
    return out;
}

QuantumSubgroup make_subgroup(HopfPtr H, HopfPtr B, std::map<int, AlgebraElement> pi_on_gens,
                              int validation_degree) {
    for (std::size_t g = 0; g < H->pres()->generators().size(); ++g) {
        if (pi_on_gens.find(static_cast<int>(g)) == pi_on_gens.end()) {
            throw Error("missing pi image for generator " + H->pres()->generators()[g].name);
        }
    }
    QuantumSubgroup qs{std::move(H), std::move(B), std::move(pi_on_gens), {}};
    qs.validation = subgroup_check(qs, validation_degree);
    return qs;
}

TensorElement restriction(const QuantumSubgroup& qs, const AlgebraElement& h) {
    SpaceDescriptor hb = tensor_space(algebra_space(qs.H->pres(), 1), algebra_space(qs.B->pres(), 1));
    TensorElement out(hb);
    TensorElement delta = qs.H->coproduct(h);
    for (const auto& [tuple, c] : delta.terms()) {
        const Word& left = std::get<Word>(tuple[0]);
        AlgebraElement mapped = qs.pi_word(std::get<Word>(tuple[1]));
        for (const auto& [bw, bc] : mapped.terms()) {
            out.add_term(BasisTuple{left, bw}, c * bc);
        }
    }
    return out;
}

Report subgroup_check(const QuantumSubgroup& qs, int d) {
    Report report;
    report.check = "subgroup";
    report.degree = d;
    const PresentationPtr& hp = qs.H->pres();
    const PresentationPtr& bp = qs.B->pres();

    // pi respects every H-relation: mapping lhs and rhs letter-by-letter
    // into B must agree.
    for (std::size_t i = 0; i < hp->rules().size(); ++i) {
        const auto& rule = hp->rules()[i];
        AlgebraElement lhs = qs.pi_word(rule.lhs);
        AlgebraElement rhs = AlgebraElement::zero(bp);
        for (const auto& [w, c] : rule.rhs) rhs = rhs + qs.pi_word(w).scaled(c);
        std::string rule_name = hp->render_word(rule.lhs) + " -> " + hp->render(rule.rhs);
        std::string id = "relations.rule" + std::to_string(i);
        if (lhs == rhs) {
            report.add_pass(id, "-", rule_name);
        } else {
            report.add_fail(id, "-", rule_name, lhs.str(), rhs.str());
        }
    }

    std::vector<Word> words = hp->basis(d);

    // Counit square (12): eps_B . pi = eps_H.
    bool counit_ok = true;
    for (const auto& w : words) {
        LaurentScalar lhs = qs.B->counit(qs.pi_word(w));
        LaurentScalar rhs = qs.H->counit_word(w);
        if (lhs != rhs) {
            report.add_fail("counit-square", "(12)", hp->render_word(w), lhs.str(), rhs.str());
            counit_ok = false;
            break;
        }
    }
    if (counit_ok) report.add_pass("counit-square", "(12)");

    // Coproduct square (13): Delta_B . pi = (pi (x) pi) . Delta_H.
    SpaceDescriptor bb = algebra_space(bp, 2);
    bool coproduct_ok = true;
    for (const auto& w : words) {
        TensorElement lhs = qs.B->coproduct(qs.pi_word(w));
        TensorElement rhs(bb);
        for (const auto& [tuple, c] : qs.H->coproduct_word(w).terms()) {
            AlgebraElement left = qs.pi_word(std::get<Word>(tuple[0]));
            AlgebraElement right = qs.pi_word(std::get<Word>(tuple[1]));
            for (const auto& [lw, lc] : left.terms()) {
                for (const auto& [rw, rc] : right.terms()) {
                    rhs.add_term(BasisTuple{lw, rw}, c * lc * rc);
                }
            }
        }
        if (lhs != rhs) {
            report.add_fail("coproduct-square", "(13)", hp->render_word(w), lhs.str(), rhs.str());
            coproduct_ok = false;
            break;
        }
    }
    if (coproduct_ok) report.add_pass("coproduct-square", "(13)");

    // Epimorphism witness: every B-generator is hit by some basis word.
    for (std::size_t g = 0; g < bp->generators().size(); ++g) {
        AlgebraElement target = AlgebraElement::from_word(bp, Word{static_cast<int>(g)});
        bool found = false;
        for (const auto& w : words) {
            if (qs.pi_word(w) == target) {
                report.add_pass("surjectivity." + bp->generators()[g].name, "-",
                                "preimage=" + hp->render_word(w));
                found = true;
                break;
            }
        }
        if (!found) {
            report.add_fail("surjectivity." + bp->generators()[g].name, "-",
                            bp->generators()[g].name, "-", "-", "no preimage up to degree");
        }
    }
    return report;
}

namespace {

SpaceDescriptor member_space(const QuantumSubgroup& qs, const BModule& bm) {
    return tensor_space(tensor_space(algebra_space(qs.H->pres(), 1), algebra_space(qs.B->pres(), 1)),
                        bm.carrier->ambient());
}

/// eta(b (x) l) for an element l of the module carrier.
TensorElement module_act(const BModule& bm, const Word& b, const TensorElement& l) {
    TensorElement out(bm.carrier->ambient());
    for (const auto& [tuple, c] : l.terms()) {
        BasisTuple in{Label(b)};
        in.insert(in.end(), tuple.begin(), tuple.end());
        out.add(bm.action.eval_basis(in), c);
    }
    return out;
}

}  // namespace

BModule make_bmodule_from_matrices(
    HopfPtr B, std::vector<std::string> labels,
    std::map<int, std::vector<std::vector<LaurentScalar>>> generator_matrices,
    int validation_degree) {
    auto basis = std::make_shared<FiniteBasis>();
    basis->id = "L";
    for (const auto& name : labels) basis->labels.emplace_back(name, 0);
    CarrierPtr carrier = Carrier::finite(basis);

    std::size_t dim = labels.size();
    for (const auto& [g, m] : generator_matrices) {
        if (m.size() != dim) throw Error("generator matrix has wrong row count");
        for (const auto& row : m) {
            if (row.size() != dim) throw Error("generator matrix has wrong column count");
        }
    }

    PresentationPtr bp = B->pres();
    SpaceDescriptor dom = tensor_space(algebra_space(bp, 1), carrier->ambient());
    SpaceDescriptor cod = carrier->ambient();
    auto mats = std::make_shared<std::map<int, std::vector<std::vector<LaurentScalar>>>>(
        std::move(generator_matrices));
    auto labels_ptr = std::make_shared<std::vector<std::string>>(std::move(labels));
    LinearRule action(
        dom, cod,
        [mats, labels_ptr, cod](const BasisTuple& t) {
            const Word& b = std::get<Word>(t[0]);
            const std::string& label = std::get<std::string>(t[1]);
            std::size_t idx = static_cast<std::size_t>(
                std::find(labels_ptr->begin(), labels_ptr->end(), label) - labels_ptr->begin());
            // Column vector for the label, then apply the letters right to left.
            std::vector<LaurentScalar> vec(labels_ptr->size());
            vec[idx] = LaurentScalar(1);
            for (auto it = b.rbegin(); it != b.rend(); ++it) {
                const auto& m = mats->at(*it);
                std::vector<LaurentScalar> next(vec.size());
                for (std::size_t r = 0; r < vec.size(); ++r) {
                    for (std::size_t c = 0; c < vec.size(); ++c) {
                        next[r] += m[r][c] * vec[c];
                    }
                }
                vec = std::move(next);
            }
            TensorElement out(cod);
            for (std::size_t r = 0; r < vec.size(); ++r) {
                out.add_term(BasisTuple{(*labels_ptr)[r]}, vec[r]);
            }
            return out;
        },
        "eta");

    BModule bm{B, carrier, action, {}};
    ActionStructure as{carrier, B, Side::Left, action, {}};
    bm.validation = module_check(as, validation_degree);
    return bm;
}

BModule make_trivial_module(HopfPtr B, int validation_degree, const std::string& label) {
    std::map<int, std::vector<std::vector<LaurentScalar>>> mats;
    for (std::size_t g = 0; g < B->pres()->generators().size(); ++g) {
        mats[static_cast<int>(g)] = {{B->counit_word(Word{static_cast<int>(g)})}};
    }
    return make_bmodule_from_matrices(std::move(B), {label}, std::move(mats), validation_degree);
}

MemberVerdict member_check(const QuantumSubgroup& qs, const BModule& bm, const AlgebraElement& h,
                           const TensorElement& l, int d_b) {
    SpaceDescriptor full = member_space(qs, bm);
    TensorElement r = restriction(qs, h);
    for (const auto& b : qs.B->pres()->basis(d_b)) {
        TensorElement acted = module_act(bm, b, l);
        // lhs = R(h) (x) eta(b (x) l); rhs = h (x) 1 (x) eta(b (x) l).
        TensorElement lhs(full);
        for (const auto& [rt, rc] : r.terms()) {
            for (const auto& [lt, lc] : acted.terms()) {
                BasisTuple t = rt;
                t.insert(t.end(), lt.begin(), lt.end());
                lhs.add_term(t, rc * lc);
            }
        }
        TensorElement rhs(full);
        for (const auto& [hw, hc] : h.terms()) {
            for (const auto& [lt, lc] : acted.terms()) {
                BasisTuple t{Label(hw), Label(Word{})};
                t.insert(t.end(), lt.begin(), lt.end());
                rhs.add_term(t, hc * lc);
            }
        }
        if (lhs != rhs) {
            return MemberVerdict{false, b, std::move(lhs), std::move(rhs)};
        }
    }
    return MemberVerdict{};
}

CoinvariantResult coinvariant_basis(const QuantumSubgroup& qs, int d) {
    CoinvariantResult result;
    const PresentationPtr& hp = qs.H->pres();
    std::vector<Word> words = hp->basis(d);

    // Word filter: R(w) = w (x) 1 exactly.
    SpaceDescriptor hb = tensor_space(algebra_space(hp, 1), algebra_space(qs.B->pres(), 1));
    std::set<Word> word_set;
    for (const auto& w : words) {
        TensorElement r = restriction(qs, AlgebraElement::from_word(hp, w));
        TensorElement expected = TensorElement::basis_vector(hb, BasisTuple{w, Word{}});
        if (r == expected) {
            result.words.push_back(w);
            word_set.insert(w);
        }
    }

    // Linear solve: kernel of w -> R(w) - w (x) 1 over the degree-d span.
    std::map<BasisTuple, std::size_t> row_index;
    std::vector<std::vector<std::pair<std::size_t, LaurentScalar>>> sparse_columns;
    for (const auto& w : words) {
        TensorElement diff = restriction(qs, AlgebraElement::from_word(hp, w));
        diff.add(TensorElement::basis_vector(hb, BasisTuple{w, Word{}}), LaurentScalar(-1));
        std::vector<std::pair<std::size_t, LaurentScalar>> col;
        for (const auto& [tuple, c] : diff.terms()) {
            auto [it, inserted] = row_index.emplace(tuple, row_index.size());
            col.emplace_back(it->second, c);
        }
        sparse_columns.push_back(std::move(col));
    }
    std::size_t rows = row_index.size();
    std::vector<std::vector<LaurentScalar>> columns(words.size(),
                                                    std::vector<LaurentScalar>(rows));
    for (std::size_t c = 0; c < sparse_columns.size(); ++c) {
        for (const auto& [r, v] : sparse_columns[c]) columns[c][r] = v;
    }
    for (const auto& vec : laurent_kernel(columns, rows)) {
        LinComb comb;
        bool inside_words = true;
        for (std::size_t i = 0; i < vec.size(); ++i) {
            if (vec[i].is_zero()) continue;
            comb.emplace(words[i], vec[i]);
            if (word_set.find(words[i]) == word_set.end()) inside_words = false;
        }
        if (!inside_words) result.words_span_kernel = false;
        result.kernel.push_back(AlgebraElement(hp, std::move(comb)));
    }
    if (result.kernel.size() != result.words.size()) result.words_span_kernel = false;
    return result;
}

Report member_action_closure_check(const QuantumSubgroup& qs, const BModule& bm,
                                   const std::vector<std::pair<Word, std::string>>& members,
                                   int d_b) {
    Report report;
    report.check = "member-action-closure";
    report.degree = d_b;
    const PresentationPtr& hp = qs.H->pres();
    std::vector<Word> b_words = qs.B->pres()->basis(d_b);
    bool all_ok = true;
    for (const auto& [hw, label] : members) {
        AlgebraElement h = AlgebraElement::from_word(hp, hw);
        TensorElement l = TensorElement::basis_vector(bm.carrier->ambient(), BasisTuple{label});
        MemberVerdict base = member_check(qs, bm, h, l, d_b);
        if (!base.member) {
            report.add_fail("sample", "-", hp->render_word(hw) + " (x) " + label, base.lhs.str(),
                            base.rhs.str(), "sample is not a member");
            all_ok = false;
            continue;
        }
        for (const auto& b : b_words) {
            TensorElement acted = module_act(bm, b, l);
            MemberVerdict moved = member_check(qs, bm, h, acted, d_b);
            if (!moved.member) {
                report.add_fail("closure", "-",
                                hp->render_word(hw) + " (x) eta(" +
                                    qs.B->pres()->render_word(b) + " (x) " + label + ")",
                                moved.lhs.str(), moved.rhs.str());
                all_ok = false;
            }
        }
    }
    if (all_ok) {
        report.add_pass("closure", "-", std::to_string(members.size()) + " members");
    }
    return report;
}

Report member_coproduct_closure_check(const QuantumSubgroup& qs, const BModule& bm,
                                      const std::vector<std::pair<Word, std::string>>& members,
                                      int d_b) {
    Report report;
    report.check = "member-coproduct-closure";
    report.degree = d_b;
    const PresentationPtr& hp = qs.H->pres();
    bool all_ok = true;
    for (const auto& [hw, label] : members) {
        TensorElement l = TensorElement::basis_vector(bm.carrier->ambient(), BasisTuple{label});
        // Group Delta(h) by its left leg; every grouped right leg must be a
        // member again.
        std::map<Word, LinComb> grouped;
        for (const auto& [tuple, c] : qs.H->coproduct_word(hw).terms()) {
            grouped[std::get<Word>(tuple[0])][std::get<Word>(tuple[1])] += c;
        }
        for (auto& [left, right_comb] : grouped) {
            AlgebraElement right(hp, right_comb);
            MemberVerdict v = member_check(qs, bm, right, l, d_b);
            if (!v.member) {
                report.add_fail("leg", "-",
                                hp->render_word(hw) + ": leg at " + hp->render_word(left),
                                v.lhs.str(), v.rhs.str());
                all_ok = false;
            }
        }
    }
    if (all_ok) {
        report.add_pass("legs", "-", std::to_string(members.size()) + " members");
    }
    return report;
}

InducedStructures induced_structures(const QuantumSubgroup& qs, const BModule& bm, int d) {
    const PresentationPtr& hp = qs.H->pres();
    CoinvariantResult coinv = coinvariant_basis(qs, d);

    const auto& finite_labels = bm.carrier->basis_tuples(0);
    SpaceDescriptor ambient = tensor_space(algebra_space(hp, 1), bm.carrier->ambient());
    std::vector<std::pair<BasisTuple, int>> tuples;
    std::set<Word> coinv_set(coinv.words.begin(), coinv.words.end());
    for (const auto& w : coinv.words) {
        for (const auto& lt : finite_labels) {
            BasisTuple t{Label(w)};
            t.insert(t.end(), lt.begin(), lt.end());
            tuples.emplace_back(std::move(t), static_cast<int>(w.size()));
        }
    }
    CarrierPtr carrier = Carrier::subset("induced", ambient, std::move(tuples), d);

    // alpha: H (x) L' -> L', (h, h', l) -> (h', eta(pi(h) (x) l)).
    SpaceDescriptor alpha_dom = tensor_space(algebra_space(hp, 1), ambient);
    BModule bm_copy = bm;
    QuantumSubgroup qs_copy = qs;
    LinearRule alpha(
        alpha_dom, ambient,
        [qs_copy, bm_copy, ambient](const BasisTuple& t) {
            const Word& h = std::get<Word>(t[0]);
            const Word& hprime = std::get<Word>(t[1]);
            TensorElement l = TensorElement::basis_vector(bm_copy.carrier->ambient(),
                                                          BasisTuple(t.begin() + 2, t.end()));
            TensorElement out(ambient);
            for (const auto& [bw, bc] : qs_copy.pi_word(h).terms()) {
                TensorElement acted = module_act(bm_copy, bw, l);
                for (const auto& [lt, lc] : acted.terms()) {
                    BasisTuple tuple{Label(hprime)};
                    tuple.insert(tuple.end(), lt.begin(), lt.end());
                    out.add_term(tuple, bc * lc);
                }
            }
            return out;
        },
        "alpha");

    // beta: L' -> H (x) L', (h, l) -> Delta(h) (x) l. Every right leg must
    // stay inside the carrier.
    SpaceDescriptor beta_cod = tensor_space(algebra_space(hp, 1), ambient);
    HopfPtr H = qs.H;
    auto coinv_set_ptr = std::make_shared<std::set<Word>>(std::move(coinv_set));
    LinearRule beta(
        ambient, beta_cod,
        [H, beta_cod, coinv_set_ptr](const BasisTuple& t) {
            const Word& h = std::get<Word>(t[0]);
            TensorElement out(beta_cod);
            for (const auto& [tuple, c] : H->coproduct_word(h).terms()) {
                const Word& leg = std::get<Word>(tuple[1]);
                if (coinv_set_ptr->find(leg) == coinv_set_ptr->end()) {
                    throw ClosureViolation("coaction leg " + H->pres()->render_word(leg) +
                                           " is not a listed coinvariant");
                }
                BasisTuple full{tuple[0], tuple[1]};
                full.insert(full.end(), t.begin() + 1, t.end());
                out.add_term(full, c);
            }
            return out;
        },
        "beta");

    // phi_H: H (x) (H (x) L') -> H (x) L', (h, h', h'', l) -> (h', h'', eta(pi(h) (x) l)).
    CarrierPtr product = Carrier::product_left(hp, carrier);
    SpaceDescriptor phi_dom = tensor_space(algebra_space(hp, 1), product->ambient());
    LinearRule phi(
        phi_dom, product->ambient(),
        [qs_copy, bm_copy, product](const BasisTuple& t) {
            const Word& h = std::get<Word>(t[0]);
            TensorElement l = TensorElement::basis_vector(bm_copy.carrier->ambient(),
                                                          BasisTuple(t.begin() + 3, t.end()));
            TensorElement out(product->ambient());
            for (const auto& [bw, bc] : qs_copy.pi_word(h).terms()) {
                TensorElement acted = module_act(bm_copy, bw, l);
                for (const auto& [lt, lc] : acted.terms()) {
                    BasisTuple tuple{t[1], t[2]};
                    tuple.insert(tuple.end(), lt.begin(), lt.end());
                    out.add_term(tuple, bc * lc);
                }
            }
            return out;
        },
        "phi_H");

    InducedStructures out{
        InducedCarrier{qs, bm, carrier, coinv.words, d},
        make_action(carrier, qs.H, Side::Left, alpha, d),
        make_coaction(carrier, qs.H, Side::Left, beta, d),
        ConsistencyMap{ConsistencyKind::ModuleMap, Side::Left, qs.H, product, phi, {}}};
    out.consistency.validation = module_check(out.consistency.as_action(), d);
    return out;
}

Report induced_rep_check(const QuantumSubgroup& qs, const BModule& bm, int d) {
    Report report;
    report.check = "induce";
    report.degree = d;
    InducedStructures ind = induced_structures(qs, bm, d);
    report.absorb(hopf_rep_first_check(ind.action, ind.coaction, ind.consistency, d), "first-type");

    // The coaction chains stated in the construction proof: the counit
    // contraction recovers the element and coassociativity holds; these are
    // the comodule items, surfaced under their own ids for visibility.
    Report comod = comodule_check(ind.coaction, d);
    report.absorb(comod, "coaction-chains");
    report.items.push_back(ReportItem{
        "carrier.dimension", "-", true, "", "", "",
        std::to_string(ind.base.coinvariant_words.size()) + " coinvariant words"});
    return report;
}

}  // namespace hopfrep
