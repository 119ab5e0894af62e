#include "hopfrep/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hopfrep/errors.hpp"

namespace hopfrep {

bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

void add_scaled(LinComb& a, const LinComb& b, const LaurentScalar& scale) {
    if (scale.is_zero()) return;
    for (const auto& [w, c] : b) {
        LaurentScalar v = c * scale;
        if (v.is_zero()) continue;
        auto [it, inserted] = a.emplace(w, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) a.erase(it);
        }
    }
}

LinComb concat(const LinComb& a, const LinComb& b) {
    LinComb out;
    for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            LaurentScalar v = ca * cb;
            auto [it, inserted] = out.emplace(std::move(w), v);
            if (!inserted) {
                it->second += v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

Presentation::Presentation(std::vector<Generator> generators, std::vector<RewriteRule> rules,
                           int overlap_degree)
    : generators_(std::move(generators)), rules_(std::move(rules)) {
    std::set<std::string> names;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (!names.insert(generators_[i].name).second) {
            throw Error("duplicate generator name: " + generators_[i].name);
        }
        if (generators_[i].order_index != static_cast<int>(i)) {
            throw Error("generators must be listed in normal-form order (bad order_index for " +
                        generators_[i].name + ")");
        }
    }
    for (const auto& rule : rules_) {
        if (rule.lhs.empty()) throw Error("rewrite rule with empty left-hand side");
        for (int letter : rule.lhs) {
            if (letter < 0 || letter >= static_cast<int>(generators_.size())) {
                throw Error("rule left-hand side uses an unknown generator");
            }
        }
        for (const auto& [w, c] : rule.rhs) {
            if (c.is_zero()) throw Error("rule right-hand side stores a zero coefficient");
            for (int letter : w) {
                if (letter < 0 || letter >= static_cast<int>(generators_.size())) {
                    throw Error("rule right-hand side uses an unknown generator");
                }
            }
            if (!word_less(w, rule.lhs)) {
                throw Error("rule is not strictly decreasing: " + render_word(rule.lhs) +
                            " -> ... " + render_word(w));
            }
        }
    }
    confluence_ = check_local_confluence(overlap_degree);
}

int Presentation::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i].name == name) return static_cast<int>(i);
    }
    return -1;
}

bool Presentation::rule_matches_at(const RewriteRule& rule, const Word& w, std::size_t pos) const {
    if (pos + rule.lhs.size() > w.size()) return false;
    return std::equal(rule.lhs.begin(), rule.lhs.end(), w.begin() + static_cast<long>(pos));
}

const LinComb& Presentation::normal_form_word(const Word& w) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = nf_cache_.find(w);
        if (it != nf_cache_.end()) return it->second;
    }
    LinComb result;
    bool reduced = false;
    for (std::size_t pos = 0; pos < w.size() && !reduced; ++pos) {
        for (const auto& rule : rules_) {
            if (!rule_matches_at(rule, w, pos)) continue;
            // w = prefix . lhs . suffix  ->  sum over rhs of prefix . r . suffix
            for (const auto& [rw, c] : rule.rhs) {
                Word replaced;
                replaced.reserve(w.size() - rule.lhs.size() + rw.size());
                replaced.insert(replaced.end(), w.begin(), w.begin() + static_cast<long>(pos));
                replaced.insert(replaced.end(), rw.begin(), rw.end());
                replaced.insert(replaced.end(), w.begin() + static_cast<long>(pos + rule.lhs.size()),
                                w.end());
                add_scaled(result, normal_form_word(replaced), c);
            }
            reduced = true;
            break;
        }
    }
    if (!reduced) result.emplace(w, LaurentScalar(1));
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, inserted] = nf_cache_.emplace(w, std::move(result));
    return it->second;
}

LinComb Presentation::normal_form(const LinComb& raw) const {
    LinComb out;
    for (const auto& [w, c] : raw) add_scaled(out, normal_form_word(w), c);
    return out;
}

bool Presentation::word_irreducible(const Word& w) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        for (const auto& rule : rules_) {
            if (rule_matches_at(rule, w, pos)) return false;
        }
    }
    return true;
}

std::vector<Word> Presentation::basis(int max_degree) const {
    if (!confluent()) {
        throw NotConfluent("basis enumeration requires a locally confluent presentation");
    }
    std::vector<Word> out;
    out.push_back(Word{});
    std::vector<Word> level{Word{}};
    for (int degree = 1; degree <= max_degree; ++degree) {
        std::vector<Word> next;
        for (const auto& w : level) {
            for (std::size_t g = 0; g < generators_.size(); ++g) {
                Word cand = w;
                cand.push_back(static_cast<int>(g));
                // w is irreducible, so only suffixes ending at the new letter
                // can match a rule.
                bool reducible = false;
                for (const auto& rule : rules_) {
                    if (rule.lhs.size() > cand.size()) continue;
                    if (rule_matches_at(rule, cand, cand.size() - rule.lhs.size())) {
                        reducible = true;
                        break;
                    }
                }
                if (!reducible) next.push_back(std::move(cand));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

ConfluenceReport Presentation::check_local_confluence(int overlap_degree) const {
    ConfluenceReport report;
    report.overlap_degree = overlap_degree;

    auto record = [&](std::size_t i, std::size_t j, Word superposition, const LinComb& ra,
                      const LinComb& rb) {
        LinComb na = normal_form(ra);
        LinComb nb = normal_form(rb);
        if (na != nb) {
            report.unresolved.push_back(
                CriticalPairIssue{i, j, std::move(superposition), std::move(na), std::move(nb)});
        }
    };

    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const Word& u = rules_[i].lhs;
        for (std::size_t j = 0; j < rules_.size(); ++j) {
            const Word& v = rules_[j].lhs;
            // Proper overlaps: a proper suffix of u equals a proper prefix of v.
            std::size_t tmax = std::min(u.size(), v.size()) - 1;
            for (std::size_t t = 1; t <= tmax; ++t) {
                if (!std::equal(u.end() - static_cast<long>(t), u.end(), v.begin())) continue;
                Word w = u;
                w.insert(w.end(), v.begin() + static_cast<long>(t), v.end());
                if (static_cast<int>(w.size()) > overlap_degree) continue;
                LinComb ra;  // reduce the u-redex at position 0
                {
                    LinComb tail;
                    tail.emplace(Word(v.begin() + static_cast<long>(t), v.end()), LaurentScalar(1));
                    ra = concat(rules_[i].rhs, tail);
                }
                LinComb rb;  // reduce the v-redex at position |u|-t
                {
                    LinComb head;
                    head.emplace(Word(u.begin(), u.end() - static_cast<long>(t)), LaurentScalar(1));
                    rb = concat(head, rules_[j].rhs);
                }
                record(i, j, w, ra, rb);
            }
            // Identical left-hand sides of two distinct rules.
            if (i < j && u == v && static_cast<int>(u.size()) <= overlap_degree) {
                record(i, j, u, rules_[i].rhs, rules_[j].rhs);
            }
            // Inclusion: v a proper subword of u.
            if (v.size() < u.size() && static_cast<int>(u.size()) <= overlap_degree) {
                for (std::size_t pos = 0; pos + v.size() <= u.size(); ++pos) {
                    if (!std::equal(v.begin(), v.end(), u.begin() + static_cast<long>(pos))) continue;
                    LinComb prefix, suffix;
                    prefix.emplace(Word(u.begin(), u.begin() + static_cast<long>(pos)),
                                   LaurentScalar(1));
                    suffix.emplace(Word(u.begin() + static_cast<long>(pos + v.size()), u.end()),
                                   LaurentScalar(1));
                    LinComb rb = concat(concat(prefix, rules_[j].rhs), suffix);
                    record(i, j, u, rules_[i].rhs, rb);
                }
            }
        }
    }
    return report;
}

bool Presentation::equals(const Presentation& other) const {
    if (this == &other) return true;
    if (generators_.size() != other.generators_.size()) return false;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i].name != other.generators_[i].name) return false;
    }
    if (rules_.size() != other.rules_.size()) return false;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        if (rules_[i].lhs != other.rules_[i].lhs) return false;
        if (rules_[i].rhs != other.rules_[i].rhs) return false;
    }
    return true;
}

std::string Presentation::render_word(const Word& w) const {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) os << "*";
        os << generators_[static_cast<std::size_t>(w[i])].name;
    }
    return os.str();
}

std::string Presentation::render(const LinComb& c) const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, s] : c) {
        // Pull a leading minus out of single-term coefficients.
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
        bool trivial_coeff = coeff == "1";
        bool composite = s.terms().size() > 1;
        if (w.empty()) {
            os << (composite ? "(" + coeff + ")" : coeff);
            continue;
        }
        if (!trivial_coeff) {
            os << (composite ? "(" + coeff + ")" : coeff) << "*";
        }
        os << render_word(w);
    }
    return os.str();
}

AlgebraElement::AlgebraElement(PresentationPtr pres, LinComb raw) : pres_(std::move(pres)) {
    terms_ = pres_->normal_form(raw);
}

AlgebraElement AlgebraElement::zero(PresentationPtr pres) {
    AlgebraElement x;
    x.pres_ = std::move(pres);
    return x;
}

AlgebraElement AlgebraElement::unit(PresentationPtr pres) {
    return from_word(std::move(pres), Word{});
}

AlgebraElement AlgebraElement::from_word(PresentationPtr pres, Word w) {
    LinComb c;
    c.emplace(std::move(w), LaurentScalar(1));
    return AlgebraElement(std::move(pres), std::move(c));
}

AlgebraElement AlgebraElement::generator(PresentationPtr pres, const std::string& name) {
    int idx = pres->generator_index(name);
    if (idx < 0) throw Error("unknown generator: " + name);
    return from_word(std::move(pres), Word{idx});
}

bool AlgebraElement::operator==(const AlgebraElement& other) const {
    return terms_ == other.terms_;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
    AlgebraElement out;
    out.pres_ = pres_;
    out.terms_ = terms_;
    add_scaled(out.terms_, other.terms_);
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
    AlgebraElement out;
    out.pres_ = pres_;
    out.terms_ = terms_;
    add_scaled(out.terms_, other.terms_, LaurentScalar(-1));
    return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& other) const {
    AlgebraElement out;
    out.pres_ = pres_;
    out.terms_ = pres_->normal_form(concat(terms_, other.terms_));
    return out;
}

AlgebraElement AlgebraElement::scaled(const LaurentScalar& s) const {
    AlgebraElement out;
    out.pres_ = pres_;
    add_scaled(out.terms_, terms_, s);
    return out;
}

AlgebraElement operator*(const LaurentScalar& s, const AlgebraElement& x) {
    return x.scaled(s);
}

std::string AlgebraElement::str() const {
    return pres_ ? pres_->render(terms_) : "0";
}

}  // namespace hopfrep
