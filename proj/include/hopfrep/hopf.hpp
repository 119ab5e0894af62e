#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "hopfrep/report.hpp"
#include "hopfrep/tensor.hpp"

namespace hopfrep {

/// Coalgebra/bialgebra/Hopf structure on a presented algebra. The coproduct
/// and counit are given on generators and extended multiplicatively; the
/// antipode, when present, extends anti-multiplicatively. Whether the
/// extensions are well defined (respect every rewrite rule) is verified by
/// bialgebra_check / antipode_check, not assumed: structures that fail are
/// still usable, as counterexamples need them.
class HopfData {
public:
    HopfData(PresentationPtr pres, std::map<int, TensorElement> coproduct_on_gens,
             std::map<int, LaurentScalar> counit_on_gens,
             std::optional<std::map<int, AlgebraElement>> antipode_on_gens,
             std::string name = "");

    const PresentationPtr& pres() const { return pres_; }
    const std::string& name() const { return name_; }
    bool has_antipode() const { return antipode_on_gens_.has_value(); }

    const std::map<int, TensorElement>& coproduct_on_gens() const { return coproduct_on_gens_; }
    const std::map<int, LaurentScalar>& counit_on_gens() const { return counit_on_gens_; }

    /// Delta(x) in H (x) H.
    const TensorElement& coproduct_word(const Word& w) const;
    TensorElement coproduct(const AlgebraElement& x) const;

    LaurentScalar counit_word(const Word& w) const;
    LaurentScalar counit(const AlgebraElement& x) const;

    /// Throws AntipodeAbsent when no antipode was supplied.
    const AlgebraElement& antipode_word(const Word& w) const;
    AlgebraElement antipode(const AlgebraElement& x) const;

    bool equals(const HopfData& other) const;

private:
    PresentationPtr pres_;
    std::map<int, TensorElement> coproduct_on_gens_;
    std::map<int, LaurentScalar> counit_on_gens_;
    std::optional<std::map<int, AlgebraElement>> antipode_on_gens_;
    std::string name_;

    mutable std::mutex cache_mutex_;
    mutable std::map<Word, TensorElement> coproduct_cache_;
    mutable std::map<Word, AlgebraElement> antipode_cache_;
};

using HopfPtr = std::shared_ptr<const HopfData>;

/// Coassociativity and the two counit laws on basis words up to degree d.
Report coalgebra_check(const HopfPtr& hd, int d);

/// Delta and epsilon respect every rewrite rule, and multiplicativity
/// Delta(xy) = Delta(x)Delta(y), eps(xy) = eps(x)eps(y) on basis pairs.
Report bialgebra_check(const HopfPtr& hd, int d);

/// S respects every rule as an anti-homomorphism and satisfies
/// m(S(x)id)Delta = unit.eps = m(id(x)S)Delta on basis words.
Report antipode_check(const HopfPtr& hd, int d);

/// The three checks above combined (antipode part skipped when absent).
Report axioms_check(const HopfPtr& hd, int d);

/// Delta as a rule [Alg] -> [Alg, Alg].
LinearRule coproduct_rule(const HopfPtr& hd);

/// Drop the algebra factor at `pos`, scaling by its counit.
LinearRule counit_contract(const HopfPtr& hd, const SpaceDescriptor& space, std::size_t pos);

LinearRule antipode_rule(const HopfPtr& hd);

}  // namespace hopfrep
