#include "hopfrep/hopf.hpp"

#include "hopfrep/errors.hpp"

namespace hopfrep {

HopfData::HopfData(PresentationPtr pres, std::map<int, TensorElement> coproduct_on_gens,
                   std::map<int, LaurentScalar> counit_on_gens,
                   std::optional<std::map<int, AlgebraElement>> antipode_on_gens, std::string name)
    : pres_(std::move(pres)),
      coproduct_on_gens_(std::move(coproduct_on_gens)),
      counit_on_gens_(std::move(counit_on_gens)),
      antipode_on_gens_(std::move(antipode_on_gens)),
      name_(std::move(name)) {
    SpaceDescriptor hh = algebra_space(pres_, 2);
    for (std::size_t g = 0; g < pres_->generators().size(); ++g) {
        int idx = static_cast<int>(g);
        auto it = coproduct_on_gens_.find(idx);
        if (it == coproduct_on_gens_.end()) {
            throw Error("missing coproduct for generator " + pres_->generators()[g].name);
        }
        if (!it->second.space().equals(hh)) {
            throw Error("coproduct of " + pres_->generators()[g].name + " must live in H(x)H");
        }
        if (counit_on_gens_.find(idx) == counit_on_gens_.end()) {
            throw Error("missing counit for generator " + pres_->generators()[g].name);
        }
        if (antipode_on_gens_ && antipode_on_gens_->find(idx) == antipode_on_gens_->end()) {
            throw Error("missing antipode for generator " + pres_->generators()[g].name);
        }
    }
}

const TensorElement& HopfData::coproduct_word(const Word& w) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = coproduct_cache_.find(w);
        if (it != coproduct_cache_.end()) return it->second;
    }
    SpaceDescriptor hh = algebra_space(pres_, 2);
    TensorElement acc = TensorElement::basis_vector(hh, BasisTuple{Word{}, Word{}});
    for (int letter : w) {
        acc = componentwise_product(acc, coproduct_on_gens_.at(letter));
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, inserted] = coproduct_cache_.emplace(w, std::move(acc));
    return it->second;
}

TensorElement HopfData::coproduct(const AlgebraElement& x) const {
    TensorElement out(algebra_space(pres_, 2));
    for (const auto& [w, c] : x.terms()) out.add(coproduct_word(w), c);
    return out;
}

LaurentScalar HopfData::counit_word(const Word& w) const {
    LaurentScalar acc(1);
    for (int letter : w) {
        acc = acc * counit_on_gens_.at(letter);
        if (acc.is_zero()) break;
    }
    return acc;
}

LaurentScalar HopfData::counit(const AlgebraElement& x) const {
    LaurentScalar acc;
    for (const auto& [w, c] : x.terms()) acc += c * counit_word(w);
    return acc;
}

const AlgebraElement& HopfData::antipode_word(const Word& w) const {
    if (!antipode_on_gens_) throw AntipodeAbsent("no antipode on " + name_);
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = antipode_cache_.find(w);
        if (it != antipode_cache_.end()) return it->second;
    }
    AlgebraElement acc = AlgebraElement::unit(pres_);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        acc = acc * antipode_on_gens_->at(*it);
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, inserted] = antipode_cache_.emplace(w, std::move(acc));
    return it->second;
}

AlgebraElement HopfData::antipode(const AlgebraElement& x) const {
    AlgebraElement out = AlgebraElement::zero(pres_);
    for (const auto& [w, c] : x.terms()) out = out + antipode_word(w).scaled(c);
    return out;
}

bool HopfData::equals(const HopfData& other) const {
    if (!pres_->equals(*other.pres_)) return false;
    if (coproduct_on_gens_.size() != other.coproduct_on_gens_.size()) return false;
    for (const auto& [g, v] : coproduct_on_gens_) {
        auto it = other.coproduct_on_gens_.find(g);
        if (it == other.coproduct_on_gens_.end() || !(v == it->second)) return false;
    }
    if (counit_on_gens_ != other.counit_on_gens_) return false;
    if (antipode_on_gens_.has_value() != other.antipode_on_gens_.has_value()) return false;
    if (antipode_on_gens_) {
        if (antipode_on_gens_->size() != other.antipode_on_gens_->size()) return false;
        for (const auto& [g, v] : *antipode_on_gens_) {
            auto it = other.antipode_on_gens_->find(g);
            if (it == other.antipode_on_gens_->end() || !(v == it->second)) return false;
        }
    }
    return true;
}

LinearRule coproduct_rule(const HopfPtr& hd) {
    SpaceDescriptor dom = algebra_space(hd->pres(), 1);
    SpaceDescriptor cod = algebra_space(hd->pres(), 2);
    return LinearRule(
        dom, cod, [hd](const BasisTuple& t) { return hd->coproduct_word(std::get<Word>(t[0])); },
        "Delta");
}

LinearRule counit_contract(const HopfPtr& hd, const SpaceDescriptor& space, std::size_t pos) {
    if (pos >= space.arity()) throw SpaceMismatch("counit position out of range");
    if (space.factors[pos].kind != FactorTag::Kind::Algebra ||
        !space.factors[pos].algebra->equals(*hd->pres())) {
        throw SpaceMismatch("counit contraction requires the matching algebra factor");
    }
    SpaceDescriptor cod = space;
    cod.factors.erase(cod.factors.begin() + static_cast<long>(pos));
    return LinearRule(
        space, cod,
        [hd, cod, pos](const BasisTuple& t) {
            LaurentScalar c = hd->counit_word(std::get<Word>(t[pos]));
            BasisTuple rest = t;
            rest.erase(rest.begin() + static_cast<long>(pos));
            TensorElement out(cod);
            out.add_term(rest, c);
            return out;
        },
        "eps" + std::to_string(pos));
}

LinearRule antipode_rule(const HopfPtr& hd) {
    SpaceDescriptor dom = algebra_space(hd->pres(), 1);
    return LinearRule(
        dom, dom,
        [hd, dom](const BasisTuple& t) {
            TensorElement out(dom);
            for (const auto& [w, c] : hd->antipode_word(std::get<Word>(t[0])).terms()) {
                out.add_term(BasisTuple{w}, c);
            }
            return out;
        },
        "S");
}

namespace {

TensorElement element_as_tensor(const AlgebraElement& x) {
    TensorElement out(algebra_space(x.presentation(), 1));
    for (const auto& [w, c] : x.terms()) out.add_term(BasisTuple{w}, c);
    return out;
}

TensorElement lincomb_as_tensor(const PresentationPtr& p, const LinComb& c) {
    TensorElement out(algebra_space(p, 1));
    for (const auto& [w, s] : p->normal_form(c)) out.add_term(BasisTuple{w}, s);
    return out;
}

}  // namespace

Report coalgebra_check(const HopfPtr& hd, int d) {
    Report report;
    report.check = "coalgebra";
    report.degree = d;
    const PresentationPtr& p = hd->pres();
    SpaceDescriptor h1 = algebra_space(p, 1);
    SpaceDescriptor h2 = algebra_space(p, 2);

    LinearRule delta = coproduct_rule(hd);
    LinearRule coassoc_l = map_compose(map_at(h2, 0, delta), delta);  // (Delta (x) id) Delta
    LinearRule coassoc_r = map_compose(map_at(h2, 1, delta), delta);  // (id (x) Delta) Delta
    LinearRule counit_l = map_compose(counit_contract(hd, h2, 0), delta);
    LinearRule counit_r = map_compose(counit_contract(hd, h2, 1), delta);
    LinearRule id = map_identity(h1);

    std::vector<BasisTuple> tuples = space_basis(h1, d);
    auto record = [&](const std::string& id_, const std::string& diagram,
                      const EqualityResult& r) {
        if (r.equal) {
            report.add_pass(id_, diagram);
        } else {
            report.add_fail(id_, diagram, render_tuple(*r.witness, h1), r.lhs.str(), r.rhs.str());
        }
    };
    record("coassoc", "(4)", maps_equal_on(coassoc_l, coassoc_r, tuples));
    record("counit.left", "(3)", maps_equal_on(counit_l, id, tuples));
    record("counit.right", "(3)", maps_equal_on(counit_r, id, tuples));
    return report;
}

Report bialgebra_check(const HopfPtr& hd, int d) {
    Report report;
    report.check = "bialgebra";
    report.degree = d;
    const PresentationPtr& p = hd->pres();

    // Delta and eps respect every rewrite rule: mapping each side of
    // lhs -> rhs letter-by-letter must give equal values.
    for (std::size_t i = 0; i < p->rules().size(); ++i) {
        const auto& rule = p->rules()[i];
        TensorElement dl = hd->coproduct_word(rule.lhs);
        TensorElement dr(algebra_space(p, 2));
        LaurentScalar el = hd->counit_word(rule.lhs);
        LaurentScalar er;
        for (const auto& [w, c] : rule.rhs) {
            dr.add(hd->coproduct_word(w), c);
            er += c * hd->counit_word(w);
        }
        std::string rule_name = p->render_word(rule.lhs) + " -> " + p->render(rule.rhs);
        std::string idx = std::to_string(i);
        if (dl == dr) {
            report.add_pass("coproduct.respects.rule" + idx, "-", rule_name);
        } else {
            report.add_fail("coproduct.respects.rule" + idx, "-", rule_name, dl.str(), dr.str());
        }
        if (el == er) {
            report.add_pass("counit.respects.rule" + idx, "-", rule_name);
        } else {
            report.add_fail("counit.respects.rule" + idx, "-", rule_name, el.str(), er.str());
        }
    }

    // Multiplicativity on basis pairs.
    std::vector<Word> words = p->basis(d);
    bool mult_ok = true;
    for (const auto& u : words) {
        if (!mult_ok) break;
        for (const auto& v : words) {
            AlgebraElement x = AlgebraElement::from_word(p, u);
            AlgebraElement y = AlgebraElement::from_word(p, v);
            TensorElement lhs = hd->coproduct(x * y);
            TensorElement rhs = componentwise_product(hd->coproduct_word(u), hd->coproduct_word(v));
            LaurentScalar le = hd->counit(x * y);
            LaurentScalar re = hd->counit_word(u) * hd->counit_word(v);
            if (lhs != rhs) {
                report.add_fail("coproduct.multiplicative", "-",
                                p->render_word(u) + " , " + p->render_word(v), lhs.str(),
                                rhs.str());
                mult_ok = false;
                break;
            }
            if (le != re) {
                report.add_fail("counit.multiplicative", "-",
                                p->render_word(u) + " , " + p->render_word(v), le.str(), re.str());
                mult_ok = false;
                break;
            }
        }
    }
    if (mult_ok) {
        report.add_pass("coproduct.multiplicative", "-");
        report.add_pass("counit.multiplicative", "-");
    }
    return report;
}

Report antipode_check(const HopfPtr& hd, int d) {
    Report report;
    report.check = "antipode";
    report.degree = d;
    if (!hd->has_antipode()) {
        report.add_fail("antipode.present", "-", "-", "-", "-", "structure has no antipode");
        return report;
    }
    const PresentationPtr& p = hd->pres();

    // S respects rules as an anti-homomorphism.
    for (std::size_t i = 0; i < p->rules().size(); ++i) {
        const auto& rule = p->rules()[i];
        AlgebraElement sl = hd->antipode_word(rule.lhs);
        AlgebraElement sr = AlgebraElement::zero(p);
        for (const auto& [w, c] : rule.rhs) sr = sr + hd->antipode_word(w).scaled(c);
        std::string rule_name = p->render_word(rule.lhs) + " -> " + p->render(rule.rhs);
        std::string idx = std::to_string(i);
        if (sl == sr) {
            report.add_pass("antipode.respects.rule" + idx, "-", rule_name);
        } else {
            report.add_fail("antipode.respects.rule" + idx, "-", rule_name, sl.str(), sr.str());
        }
    }

    // m(S (x) id)Delta = unit.eps = m(id (x) S)Delta on basis words.
    bool law_ok_left = true;
    bool law_ok_right = true;
    for (const auto& w : p->basis(d)) {
        AlgebraElement left = AlgebraElement::zero(p);
        AlgebraElement right = AlgebraElement::zero(p);
        for (const auto& [tuple, c] : hd->coproduct_word(w).terms()) {
            AlgebraElement w1 = AlgebraElement::from_word(p, std::get<Word>(tuple[0]));
            AlgebraElement w2 = AlgebraElement::from_word(p, std::get<Word>(tuple[1]));
            left = left + (hd->antipode(w1) * w2).scaled(c);
            right = right + (w1 * hd->antipode(w2)).scaled(c);
        }
        AlgebraElement expected = AlgebraElement::unit(p).scaled(hd->counit_word(w));
        if (law_ok_left && left != expected) {
            report.add_fail("antipode.law.left", "-", p->render_word(w), left.str(),
                            expected.str());
            law_ok_left = false;
        }
        if (law_ok_right && right != expected) {
            report.add_fail("antipode.law.right", "-", p->render_word(w), right.str(),
                            expected.str());
            law_ok_right = false;
        }
        if (!law_ok_left && !law_ok_right) break;
    }
    if (law_ok_left) report.add_pass("antipode.law.left", "-");
    if (law_ok_right) report.add_pass("antipode.law.right", "-");
    return report;
}

Report axioms_check(const HopfPtr& hd, int d) {
    Report report;
    report.check = "axioms";
    report.degree = d;
    report.absorb(coalgebra_check(hd, d), "coalgebra");
    report.absorb(bialgebra_check(hd, d), "bialgebra");
    if (hd->has_antipode()) report.absorb(antipode_check(hd, d), "antipode");
    return report;
}

}  // namespace hopfrep
