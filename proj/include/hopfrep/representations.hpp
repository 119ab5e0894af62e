#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfrep/hopf.hpp"
#include "hopfrep/report.hpp"
#include "hopfrep/tensor.hpp"

namespace hopfrep {

enum class Side { Left, Right };

std::string side_name(Side side);

class Carrier;
using CarrierPtr = std::shared_ptr<const Carrier>;

/// The space a (co)module lives on. A carrier names an ambient tensor space
/// together with the graded family of basis tuples used as test sets; the
/// ambient space may have several factors (e.g. H(x)H), and a carrier may
/// span only part of it (an explicit tuple subset, as for induced spaces).
class Carrier {
public:
    enum class Kind { Finite, AlgebraBasis, WordPairs, Subset, ProductLeft, ProductRight };

    static CarrierPtr finite(FiniteBasisPtr basis);
    static CarrierPtr algebra(PresentationPtr p, std::string id);
    static CarrierPtr word_pairs(PresentationPtr p, std::string id);
    /// Explicit graded tuples inside `ambient`; tuples beyond `max_grade`
    /// are not known to the carrier.
    static CarrierPtr subset(std::string id, SpaceDescriptor ambient,
                             std::vector<std::pair<BasisTuple, int>> graded_tuples, int max_grade);
    static CarrierPtr product_left(PresentationPtr p, CarrierPtr inner);   // H (x) W
    static CarrierPtr product_right(CarrierPtr inner, PresentationPtr p);  // W (x) H

    Kind kind() const { return kind_; }
    const std::string& id() const { return id_; }
    const SpaceDescriptor& ambient() const { return ambient_; }

    /// Basis tuples up to `degree`: word length (total over word factors)
    /// for algebra-backed carriers, grade for finite and subset carriers.
    std::vector<BasisTuple> basis_tuples(int degree) const;

    bool equals(const Carrier& other) const;

private:
    Carrier() = default;

    Kind kind_ = Kind::Finite;
    std::string id_;
    SpaceDescriptor ambient_;
    FiniteBasisPtr finite_;
    PresentationPtr pres_;
    std::vector<std::pair<BasisTuple, int>> subset_;
    int max_grade_ = 0;
    CarrierPtr inner_;
};

/// (Co)module structure of either chirality. `validation` is the axiom
/// report attached at construction; failing structures are kept usable so
/// counterexamples can be built from them.
struct ActionStructure {
    CarrierPtr carrier;
    HopfPtr algebra;
    Side side = Side::Left;
    LinearRule action;  // Left: H(x)W -> W, Right: W(x)H -> W
    Report validation;
};

struct CoactionStructure {
    CarrierPtr carrier;
    HopfPtr algebra;
    Side side = Side::Left;
    LinearRule coaction;  // Left: W -> H(x)W, Right: W -> W(x)H
    Report validation;
};

ActionStructure make_action(CarrierPtr carrier, HopfPtr algebra, Side side, LinearRule action,
                            int validation_degree);
CoactionStructure make_coaction(CarrierPtr carrier, HopfPtr algebra, Side side, LinearRule coaction,
                                int validation_degree);

enum class ConsistencyKind { ModuleMap, ComoduleMap };

/// A module (or comodule) structure on the product space H(x)W (W(x)H on the
/// right), used as the consistency datum of a Hopf representation.
struct ConsistencyMap {
    ConsistencyKind kind = ConsistencyKind::ModuleMap;
    Side side = Side::Left;
    HopfPtr algebra;
    CarrierPtr product_carrier;
    LinearRule map;
    Report validation;

    ActionStructure as_action() const;
    CoactionStructure as_coaction() const;
};

/// Unit and associativity laws, diagrams (1)-(2).
Report module_check(const ActionStructure& act, int d);
/// Counit and coassociativity laws, diagrams (3)-(4).
Report comodule_check(const CoactionStructure& co, int d);
/// Equivariance of f, diagram (5).
Report module_hom_check(const LinearRule& f, const ActionStructure& a1, const ActionStructure& a2,
                        int d);
/// Colinearity of f, diagram (6).
Report comodule_hom_check(const LinearRule& f, const CoactionStructure& c1,
                          const CoactionStructure& c2, int d);

/// The canonical module structure on the product space built from the
/// coproduct: (mul (x) action) . (id (x) T (x) id) . (Delta (x) id).
ConsistencyMap canonical_product_action(const ActionStructure& act, int d);
/// The canonical comodule structure on the product space:
/// (mul (x) id) . (id (x) T (x) id) . (Delta (x) coaction).
ConsistencyMap canonical_product_coaction(const CoactionStructure& co, int d);

/// The module/comodule compatibility square, diagram (9).
Report hopf_module_check(const ActionStructure& act, const CoactionStructure& co, int d);

/// Evaluates the three equivalent compatibility conditions -- diagram (9),
/// the coaction being a module hom toward the canonical product action, the
/// action being a comodule hom from the canonical product coaction -- and
/// reports whether their verdicts agree.
Report equivalence_check(const ActionStructure& act, const CoactionStructure& co, int d);

Report hopf_rep_first_check(const ActionStructure& act, const CoactionStructure& co,
                            const ConsistencyMap& phi, int d);
Report hopf_rep_second_check(const ActionStructure& act, const CoactionStructure& co,
                             const ConsistencyMap& psi, int d);
Report hopf_rep_full_check(const ActionStructure& act, const CoactionStructure& co,
                           const ConsistencyMap& phi, const ConsistencyMap& psi, int d);

/// The right-handed structures on W = H(x)H: the action multiplies into the
/// second leg, the coaction splits the first, and the consistency map acts
/// past the appended algebra factor. The coaction is compatible with the
/// consistency map but not with the canonical product action, which makes
/// this the standard counterexample package.
struct TensorSquarePackage {
    CarrierPtr carrier;
    ActionStructure action;
    CoactionStructure coaction;
    ConsistencyMap consistency;
};

TensorSquarePackage make_tensor_square_package(const HopfPtr& hd, int d);

/// Carrier and structures for the regular (co)action of the algebra on
/// itself: action = multiplication, coaction = coproduct.
ActionStructure regular_action(const HopfPtr& hd, Side side, int d);
CoactionStructure regular_coaction(const HopfPtr& hd, Side side, int d);

}  // namespace hopfrep
