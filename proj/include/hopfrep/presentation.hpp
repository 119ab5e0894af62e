#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hopfrep/scalar.hpp"

namespace hopfrep {

/// A word over the generators of a presentation. Letters are generator
/// positions in the normal-form ordering; the empty word is the unit.
using Word = std::vector<int>;

/// Linear combination of words, canonical: no zero coefficients.
using LinComb = std::map<Word, LaurentScalar>;

/// Degree-first, then lexicographic by letter rank. Every rewrite rule must
/// be strictly decreasing in this order, which guarantees termination.
bool word_less(const Word& a, const Word& b);

struct Generator {
    std::string name;
    int order_index = 0;  // position in the normal-form ordering
};

/// Oriented rule lhs -> rhs; every word in rhs is strictly below lhs.
struct RewriteRule {
    Word lhs;
    LinComb rhs;
};

/// One unresolved critical pair: the superposition word together with the
/// normal forms reached through each of the two overlapping redexes.
struct CriticalPairIssue {
    std::size_t rule_a = 0;
    std::size_t rule_b = 0;
    Word superposition;
    LinComb reduct_a;
    LinComb reduct_b;
};

struct ConfluenceReport {
    int overlap_degree = 0;
    std::vector<CriticalPairIssue> unresolved;
    bool confluent() const { return unresolved.empty(); }
};

/// A finitely presented associative algebra: named generators plus oriented
/// rewrite rules with LaurentScalar coefficients. Immutable after
/// construction; normal forms are memoized behind an internal lock.
class Presentation {
public:
    /// Validates generator names and ordering and the decrease condition on
    /// every rule, then runs the local-confluence check up to
    /// `overlap_degree`. A failing confluence check does not prevent
    /// construction; downstream basis enumeration refuses such presentations.
    Presentation(std::vector<Generator> generators, std::vector<RewriteRule> rules,
                 int overlap_degree = 4);

    const std::vector<Generator>& generators() const { return generators_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    const ConfluenceReport& confluence() const { return confluence_; }
    bool confluent() const { return confluence_.confluent(); }

    /// -1 when the name is unknown.
    int generator_index(const std::string& name) const;

    /// Exhaustive leftmost-innermost rewriting; canonical fixed point.
    LinComb normal_form(const LinComb& raw) const;
    const LinComb& normal_form_word(const Word& w) const;

    bool word_irreducible(const Word& w) const;

    /// All irreducible words of length <= max_degree in degree-then-lex
    /// order. Throws NotConfluent when the confluence check failed.
    std::vector<Word> basis(int max_degree) const;

    bool equals(const Presentation& other) const;

    std::string render_word(const Word& w) const;
    std::string render(const LinComb& c) const;

private:
    bool rule_matches_at(const RewriteRule& rule, const Word& w, std::size_t pos) const;
    ConfluenceReport check_local_confluence(int overlap_degree) const;

    std::vector<Generator> generators_;
    std::vector<RewriteRule> rules_;
    ConfluenceReport confluence_;

    mutable std::mutex cache_mutex_;
    mutable std::map<Word, LinComb> nf_cache_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// Element of a presented algebra held in normal form.
class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(PresentationPtr pres, LinComb raw);

    static AlgebraElement zero(PresentationPtr pres);
    static AlgebraElement unit(PresentationPtr pres);
    static AlgebraElement from_word(PresentationPtr pres, Word w);
    static AlgebraElement generator(PresentationPtr pres, const std::string& name);

    const PresentationPtr& presentation() const { return pres_; }
    const LinComb& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const AlgebraElement& other) const;
    bool operator!=(const AlgebraElement& other) const { return !(*this == other); }

    AlgebraElement operator+(const AlgebraElement& other) const;
    AlgebraElement operator-(const AlgebraElement& other) const;
    AlgebraElement operator*(const AlgebraElement& other) const;
    AlgebraElement scaled(const LaurentScalar& s) const;

    std::string str() const;

private:
    PresentationPtr pres_;
    LinComb terms_;
};

AlgebraElement operator*(const LaurentScalar& s, const AlgebraElement& x);

/// Concatenation product of raw linear combinations (no normalization).
LinComb concat(const LinComb& a, const LinComb& b);

/// a += scale * b on raw linear combinations, stripping zeros.
void add_scaled(LinComb& a, const LinComb& b, const LaurentScalar& scale = LaurentScalar(1));

}  // namespace hopfrep
