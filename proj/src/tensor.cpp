#include "hopfrep/tensor.hpp"

#include <sstream>

#include "hopfrep/errors.hpp"

namespace hopfrep {

FactorTag FactorTag::alg(PresentationPtr p) {
    FactorTag t;
    t.kind = Kind::Algebra;
    t.algebra = std::move(p);
    return t;
}

FactorTag FactorTag::fin(FiniteBasisPtr b) {
    FactorTag t;
    t.kind = Kind::Finite;
    t.finite = std::move(b);
    return t;
}

bool FactorTag::equals(const FactorTag& other) const {
    if (kind != other.kind) return false;
    if (kind == Kind::Algebra) {
        return algebra == other.algebra || algebra->equals(*other.algebra);
    }
    return finite == other.finite || finite->equals(*other.finite);
}

bool SpaceDescriptor::equals(const SpaceDescriptor& other) const {
    if (factors.size() != other.factors.size()) return false;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (!factors[i].equals(other.factors[i])) return false;
    }
    return true;
}

std::string SpaceDescriptor::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) os << "(x)";
        if (factors[i].kind == FactorTag::Kind::Algebra) {
            os << "Alg";
        } else {
            os << factors[i].finite->id;
        }
    }
    return os.str();
}

SpaceDescriptor tensor_space(const SpaceDescriptor& a, const SpaceDescriptor& b) {
    SpaceDescriptor out = a;
    out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
    return out;
}

SpaceDescriptor algebra_space(PresentationPtr p, std::size_t power) {
    SpaceDescriptor s;
    for (std::size_t i = 0; i < power; ++i) s.factors.push_back(FactorTag::alg(p));
    return s;
}

SpaceDescriptor finite_space(FiniteBasisPtr b) {
    SpaceDescriptor s;
    s.factors.push_back(FactorTag::fin(std::move(b)));
    return s;
}

std::string render_label(const Label& label, const FactorTag& tag) {
    if (std::holds_alternative<Word>(label)) {
        return tag.algebra->render_word(std::get<Word>(label));
    }
    return std::get<std::string>(label);
}

std::string render_tuple(const BasisTuple& tuple, const SpaceDescriptor& space) {
    std::ostringstream os;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i > 0) os << " (x) ";
        os << render_label(tuple[i], space.factors[i]);
    }
    return os.str();
}

TensorElement TensorElement::basis_vector(SpaceDescriptor space, BasisTuple tuple,
                                          LaurentScalar coeff) {
    TensorElement x(std::move(space));
    x.add_term(tuple, coeff);
    return x;
}

void TensorElement::add_term(const BasisTuple& tuple, const LaurentScalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(tuple, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void TensorElement::add(const TensorElement& other, const LaurentScalar& scale) {
    if (scale.is_zero()) return;
    for (const auto& [t, c] : other.terms_) add_term(t, c * scale);
}

TensorElement TensorElement::operator+(const TensorElement& other) const {
    TensorElement out = *this;
    out.add(other);
    return out;
}

TensorElement TensorElement::operator-(const TensorElement& other) const {
    TensorElement out = *this;
    out.add(other, LaurentScalar(-1));
    return out;
}

TensorElement TensorElement::scaled(const LaurentScalar& s) const {
    TensorElement out(space_);
    out.add(*this, s);
    return out;
}

bool TensorElement::operator==(const TensorElement& other) const {
    return terms_ == other.terms_;
}

std::string TensorElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, s] : terms_) {
        std::string coeff = s.str();
        bool negative = false;
        if (s.terms().size() == 1 && coeff.size() > 1 && coeff[0] == '-') {
            negative = true;
            coeff = coeff.substr(1);
        }
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        bool composite = s.terms().size() > 1;
        std::string body = render_tuple(t, space_);
        if (t.size() > 1) body = "(" + body + ")";
        if (coeff == "1") {
            os << body;
        } else {
            os << (composite ? "(" + coeff + ")" : coeff) << "*" << body;
        }
    }
    return os.str();
}

TensorElement tensor_product(const TensorElement& a, const TensorElement& b) {
    TensorElement out(tensor_space(a.space(), b.space()));
    for (const auto& [ta, ca] : a.terms()) {
        for (const auto& [tb, cb] : b.terms()) {
            BasisTuple t = ta;
            t.insert(t.end(), tb.begin(), tb.end());
            out.add_term(t, ca * cb);
        }
    }
    return out;
}

TensorElement componentwise_product(const TensorElement& a, const TensorElement& b) {
    if (!a.space().equals(b.space())) {
        throw SpaceMismatch("componentwise product requires equal spaces");
    }
    const auto& space = a.space();
    for (const auto& f : space.factors) {
        if (f.kind != FactorTag::Kind::Algebra) {
            throw SpaceMismatch("componentwise product requires algebra factors");
        }
    }
    TensorElement out(space);
    for (const auto& [ta, ca] : a.terms()) {
        for (const auto& [tb, cb] : b.terms()) {
            // Normalize each factor product and distribute.
            std::vector<LinComb> parts;
            parts.reserve(ta.size());
            for (std::size_t i = 0; i < ta.size(); ++i) {
                Word w = std::get<Word>(ta[i]);
                const Word& v = std::get<Word>(tb[i]);
                w.insert(w.end(), v.begin(), v.end());
                parts.push_back(space.factors[i].algebra->normal_form_word(w));
            }
            std::vector<std::pair<BasisTuple, LaurentScalar>> expanded;
            expanded.emplace_back(BasisTuple{}, ca * cb);
            for (const auto& part : parts) {
                std::vector<std::pair<BasisTuple, LaurentScalar>> next;
                for (const auto& [tuple, coeff] : expanded) {
                    for (const auto& [w, c] : part) {
                        BasisTuple t = tuple;
                        t.emplace_back(w);
                        next.emplace_back(std::move(t), coeff * c);
                    }
                }
                expanded = std::move(next);
            }
            for (const auto& [tuple, coeff] : expanded) out.add_term(tuple, coeff);
        }
    }
    return out;
}

LinearRule::LinearRule(SpaceDescriptor domain, SpaceDescriptor codomain, EvalFn eval,
                       std::string name)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      eval_(std::move(eval)),
      name_(std::move(name)),
      memo_(std::make_shared<Memo>()) {}

TensorElement LinearRule::eval_basis(const BasisTuple& tuple) const {
    {
        std::lock_guard<std::mutex> lock(memo_->mutex);
        auto it = memo_->cache.find(tuple);
        if (it != memo_->cache.end()) return it->second;
    }
    TensorElement value = eval_(tuple);
    if (!value.space().equals(codomain_)) {
        throw SpaceMismatch("rule '" + name_ + "' produced a value outside its codomain");
    }
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto [it, inserted] = memo_->cache.emplace(tuple, std::move(value));
    return it->second;
}

TensorElement LinearRule::apply(const TensorElement& x) const {
    if (!x.space().equals(domain_)) {
        throw SpaceMismatch("element space does not match the domain of '" + name_ + "'");
    }
    TensorElement out(codomain_);
    for (const auto& [tuple, coeff] : x.terms()) {
        out.add(eval_basis(tuple), coeff);
    }
    return out;
}

LinearRule map_identity(SpaceDescriptor space) {
    SpaceDescriptor dom = space;
    return LinearRule(dom, dom,
                      [dom](const BasisTuple& t) { return TensorElement::basis_vector(dom, t); },
                      "id");
}

LinearRule map_compose(const LinearRule& g, const LinearRule& f) {
    if (!f.codomain().equals(g.domain())) {
        throw SpaceMismatch("composition mismatch: '" + g.name() + "' after '" + f.name() + "'");
    }
    LinearRule ff = f;
    LinearRule gg = g;
    return LinearRule(
        f.domain(), g.codomain(),
        [ff, gg](const BasisTuple& t) { return gg.apply(ff.eval_basis(t)); },
        g.name() + "." + f.name());
}

LinearRule map_tensor(const LinearRule& f, const LinearRule& g) {
    SpaceDescriptor dom = tensor_space(f.domain(), g.domain());
    SpaceDescriptor cod = tensor_space(f.codomain(), g.codomain());
    LinearRule ff = f;
    LinearRule gg = g;
    std::size_t split = f.domain().arity();
    return LinearRule(
        dom, cod,
        [ff, gg, split](const BasisTuple& t) {
            BasisTuple left(t.begin(), t.begin() + static_cast<long>(split));
            BasisTuple right(t.begin() + static_cast<long>(split), t.end());
            return tensor_product(ff.eval_basis(left), gg.eval_basis(right));
        },
        "(" + f.name() + "(x)" + g.name() + ")");
}

LinearRule map_twist(const SpaceDescriptor& space, std::size_t i) {
    if (i + 1 >= space.arity()) throw SpaceMismatch("twist position out of range");
    SpaceDescriptor cod = space;
    std::swap(cod.factors[i], cod.factors[i + 1]);
    return LinearRule(
        space, cod,
        [cod, i](const BasisTuple& t) {
            BasisTuple s = t;
            std::swap(s[i], s[i + 1]);
            return TensorElement::basis_vector(cod, std::move(s));
        },
        "T" + std::to_string(i));
}

LinearRule map_at(const SpaceDescriptor& space, std::size_t start, const LinearRule& inner) {
    std::size_t in_arity = inner.domain().arity();
    if (start + in_arity > space.arity()) throw SpaceMismatch("inner map slice out of range");
    for (std::size_t k = 0; k < in_arity; ++k) {
        if (!space.factors[start + k].equals(inner.domain().factors[k])) {
            throw SpaceMismatch("inner map domain does not match the factor slice");
        }
    }
    SpaceDescriptor cod;
    cod.factors.assign(space.factors.begin(), space.factors.begin() + static_cast<long>(start));
    cod.factors.insert(cod.factors.end(), inner.codomain().factors.begin(),
                       inner.codomain().factors.end());
    cod.factors.insert(cod.factors.end(),
                       space.factors.begin() + static_cast<long>(start + in_arity),
                       space.factors.end());
    LinearRule in = inner;
    return LinearRule(
        space, cod,
        [in, cod, start, in_arity](const BasisTuple& t) {
            BasisTuple head(t.begin(), t.begin() + static_cast<long>(start));
            BasisTuple mid(t.begin() + static_cast<long>(start),
                           t.begin() + static_cast<long>(start + in_arity));
            BasisTuple tail(t.begin() + static_cast<long>(start + in_arity), t.end());
            TensorElement inner_value = in.eval_basis(mid);
            TensorElement out(cod);
            for (const auto& [mt, c] : inner_value.terms()) {
                BasisTuple full = head;
                full.insert(full.end(), mt.begin(), mt.end());
                full.insert(full.end(), tail.begin(), tail.end());
                out.add_term(full, c);
            }
            return out;
        },
        "at" + std::to_string(start) + "(" + inner.name() + ")");
}

LinearRule mul_rule(PresentationPtr p) {
    SpaceDescriptor dom = algebra_space(p, 2);
    SpaceDescriptor cod = algebra_space(p, 1);
    return LinearRule(
        dom, cod,
        [p, cod](const BasisTuple& t) {
            Word w = std::get<Word>(t[0]);
            const Word& v = std::get<Word>(t[1]);
            w.insert(w.end(), v.begin(), v.end());
            TensorElement out(cod);
            for (const auto& [nw, c] : p->normal_form_word(w)) {
                out.add_term(BasisTuple{nw}, c);
            }
            return out;
        },
        "mul");
}

LinearRule unit_embed_left(PresentationPtr p, const SpaceDescriptor& space) {
    SpaceDescriptor cod = tensor_space(algebra_space(p), space);
    return LinearRule(
        space, cod,
        [cod](const BasisTuple& t) {
            BasisTuple s;
            s.reserve(t.size() + 1);
            s.emplace_back(Word{});
            s.insert(s.end(), t.begin(), t.end());
            return TensorElement::basis_vector(cod, std::move(s));
        },
        "unit(x)id");
}

LinearRule unit_embed_right(PresentationPtr p, const SpaceDescriptor& space) {
    SpaceDescriptor cod = tensor_space(space, algebra_space(p));
    return LinearRule(
        space, cod,
        [cod](const BasisTuple& t) {
            BasisTuple s = t;
            s.emplace_back(Word{});
            return TensorElement::basis_vector(cod, std::move(s));
        },
        "id(x)unit");
}

EqualityResult maps_equal_on(const LinearRule& f, const LinearRule& g,
                             const std::vector<BasisTuple>& test_basis) {
    if (!f.domain().equals(g.domain()) || !f.codomain().equals(g.codomain())) {
        throw SpaceMismatch("map comparison requires equal domains and codomains");
    }
    for (const auto& tuple : test_basis) {
        TensorElement a = f.eval_basis(tuple);
        TensorElement b = g.eval_basis(tuple);
        if (a != b) {
            return EqualityResult{false, tuple, std::move(a), std::move(b)};
        }
    }
    return EqualityResult{};
}

std::vector<BasisTuple> space_basis(const SpaceDescriptor& space, int degree) {
    std::vector<std::vector<Label>> per_factor;
    for (const auto& f : space.factors) {
        std::vector<Label> labels;
        if (f.kind == FactorTag::Kind::Algebra) {
            for (auto& w : f.algebra->basis(degree)) labels.emplace_back(std::move(w));
        } else {
            for (const auto& [name, grade] : f.finite->labels) {
                if (grade <= degree) labels.emplace_back(name);
            }
        }
        per_factor.push_back(std::move(labels));
    }
    std::vector<BasisTuple> out{BasisTuple{}};
    for (const auto& labels : per_factor) {
        std::vector<BasisTuple> next;
        next.reserve(out.size() * labels.size());
        for (const auto& tuple : out) {
            for (const auto& label : labels) {
                BasisTuple t = tuple;
                t.push_back(label);
                next.push_back(std::move(t));
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace hopfrep
