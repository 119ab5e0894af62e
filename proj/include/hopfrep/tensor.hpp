#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hopfrep/presentation.hpp"

namespace hopfrep {

/// Finite basis with named labels and nonnegative grades; the leaf kind of
/// non-algebra tensor factor.
struct FiniteBasis {
    std::string id;
    std::vector<std::pair<std::string, int>> labels;  // (label, grade)

    bool equals(const FiniteBasis& other) const {
        return id == other.id && labels == other.labels;
    }
};

using FiniteBasisPtr = std::shared_ptr<const FiniteBasis>;

/// One tensor factor: a presented algebra or a finite basis space.
struct FactorTag {
    enum class Kind { Algebra, Finite };

    Kind kind = Kind::Algebra;
    PresentationPtr algebra;
    FiniteBasisPtr finite;

    static FactorTag alg(PresentationPtr p);
    static FactorTag fin(FiniteBasisPtr b);
    bool equals(const FactorTag& other) const;
};

struct SpaceDescriptor {
    std::vector<FactorTag> factors;

    std::size_t arity() const { return factors.size(); }
    bool equals(const SpaceDescriptor& other) const;
    std::string str() const;
};

SpaceDescriptor tensor_space(const SpaceDescriptor& a, const SpaceDescriptor& b);
SpaceDescriptor algebra_space(PresentationPtr p, std::size_t power = 1);
SpaceDescriptor finite_space(FiniteBasisPtr b);

/// Basis label in one factor: a normal-form word for algebra factors, a
/// label string for finite factors.
using Label = std::variant<Word, std::string>;
using BasisTuple = std::vector<Label>;

std::string render_label(const Label& label, const FactorTag& tag);
std::string render_tuple(const BasisTuple& tuple, const SpaceDescriptor& space);

/// Element of a tensor space: finitely many basis tuples with nonzero
/// LaurentScalar coefficients; word components are kept in normal form.
class TensorElement {
public:
    TensorElement() = default;
    explicit TensorElement(SpaceDescriptor space) : space_(std::move(space)) {}

    static TensorElement basis_vector(SpaceDescriptor space, BasisTuple tuple,
                                      LaurentScalar coeff = LaurentScalar(1));

    const SpaceDescriptor& space() const { return space_; }
    const std::map<BasisTuple, LaurentScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const BasisTuple& tuple, const LaurentScalar& coeff);
    void add(const TensorElement& other, const LaurentScalar& scale = LaurentScalar(1));

    TensorElement operator+(const TensorElement& other) const;
    TensorElement operator-(const TensorElement& other) const;
    TensorElement scaled(const LaurentScalar& s) const;

    bool operator==(const TensorElement& other) const;
    bool operator!=(const TensorElement& other) const { return !(*this == other); }

    std::string str() const;

private:
    SpaceDescriptor space_;
    std::map<BasisTuple, LaurentScalar> terms_;
};

TensorElement tensor_product(const TensorElement& a, const TensorElement& b);

/// Factor-wise product of two elements of the same all-algebra space.
TensorElement componentwise_product(const TensorElement& a, const TensorElement& b);

/// A linear map H^{(x)k}(x)... -> ... defined by an evaluation rule on basis
/// tuples and extended linearly. Evaluation must be pure; results are
/// memoized behind an internal lock, so rules are safe to share.
class LinearRule {
public:
    using EvalFn = std::function<TensorElement(const BasisTuple&)>;

    LinearRule() = default;
    LinearRule(SpaceDescriptor domain, SpaceDescriptor codomain, EvalFn eval,
               std::string name = "");

    const SpaceDescriptor& domain() const { return domain_; }
    const SpaceDescriptor& codomain() const { return codomain_; }
    const std::string& name() const { return name_; }

    TensorElement eval_basis(const BasisTuple& tuple) const;
    TensorElement apply(const TensorElement& x) const;

private:
    struct Memo {
        std::mutex mutex;
        std::map<BasisTuple, TensorElement> cache;
    };

    SpaceDescriptor domain_;
    SpaceDescriptor codomain_;
    EvalFn eval_;
    std::string name_;
    std::shared_ptr<Memo> memo_;
};

LinearRule map_identity(SpaceDescriptor space);
LinearRule map_compose(const LinearRule& g, const LinearRule& f);  // g after f
LinearRule map_tensor(const LinearRule& f, const LinearRule& g);

/// Swap adjacent factors i and i+1 (the twist map on that pair).
LinearRule map_twist(const SpaceDescriptor& space, std::size_t i);

/// id (x) ... (x) inner (x) ... (x) id with inner acting on the factor slice
/// [start, start + inner.domain().arity()).
LinearRule map_at(const SpaceDescriptor& space, std::size_t start, const LinearRule& inner);

/// Multiplication [Alg, Alg] -> [Alg].
LinearRule mul_rule(PresentationPtr p);

/// w -> 1 (x) w  (resp. w (x) 1): unit embedding into a new algebra factor.
LinearRule unit_embed_left(PresentationPtr p, const SpaceDescriptor& space);
LinearRule unit_embed_right(PresentationPtr p, const SpaceDescriptor& space);

struct EqualityResult {
    bool equal = true;
    std::optional<BasisTuple> witness;  // minimal in the supplied order
    TensorElement lhs;
    TensorElement rhs;
};

/// Exhaustive comparison of two maps on a finite test set. Throws
/// SpaceMismatch unless domains and codomains agree.
EqualityResult maps_equal_on(const LinearRule& f, const LinearRule& g,
                             const std::vector<BasisTuple>& test_basis);

/// All basis tuples of the space with every factor truncated at `degree`
/// (word length for algebra factors, grade for finite factors).
std::vector<BasisTuple> space_basis(const SpaceDescriptor& space, int degree);

}  // namespace hopfrep
