#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "hopfrep/representations.hpp"

namespace hopfrep {

/// A bialgebra quotient (B, pi): pi is given on generators and extended
/// multiplicatively over normal-form words. `validation` is the attached
/// subgroup_check report; a failing report does not block construction, so
/// defective projections remain inspectable.
struct QuantumSubgroup {
    HopfPtr H;
    HopfPtr B;
    std::map<int, AlgebraElement> pi_on_gens;  // H-generator letter -> element of B
    Report validation;

    AlgebraElement pi_word(const Word& w) const;
    AlgebraElement pi(const AlgebraElement& h) const;
};

QuantumSubgroup make_subgroup(HopfPtr H, HopfPtr B, std::map<int, AlgebraElement> pi_on_gens,
                              int validation_degree);

/// Verifies that pi respects every rewrite rule, the counit square (12), the
/// coproduct square (13) on basis words up to d, and that every B-generator
/// has a preimage among basis words up to d.
Report subgroup_check(const QuantumSubgroup& qs, int d);

/// R = (id (x) pi) . Delta, landing in H (x) B.
TensorElement restriction(const QuantumSubgroup& qs, const AlgebraElement& h);

/// A left module over the subgroup's bialgebra on a finite carrier.
struct BModule {
    HopfPtr B;
    CarrierPtr carrier;  // finite
    LinearRule action;   // B (x) L -> L
    Report validation;
};

/// eta defined by one matrix per generator (rows/cols indexed by the label
/// order); words act by composing the letters' matrices.
BModule make_bmodule_from_matrices(
    HopfPtr B, std::vector<std::string> labels,
    std::map<int, std::vector<std::vector<LaurentScalar>>> generator_matrices,
    int validation_degree);

/// The counit character on a one-dimensional carrier: eta(b (x) c) = eps(b)c.
BModule make_trivial_module(HopfPtr B, int validation_degree, const std::string& label = "c");

struct MemberVerdict {
    bool member = true;
    std::optional<Word> witness_b;  // first violating B-basis word
    TensorElement lhs;              // R(h) (x) eta(b (x) l)
    TensorElement rhs;              // h (x) 1 (x) eta(b (x) l)
};

/// The induced-space membership predicate for h (x) l, checked literally
/// against every B-basis word up to degree d_b.
MemberVerdict member_check(const QuantumSubgroup& qs, const BModule& bm, const AlgebraElement& h,
                           const TensorElement& l, int d_b);

struct CoinvariantResult {
    std::vector<Word> words;               // basis words w with R(w) = w (x) 1
    std::vector<AlgebraElement> kernel;    // kernel of h -> R(h) - h (x) 1 up to degree d
    bool words_span_kernel = true;
};

/// Both routes to the coinvariants: the word filter and the linear solve.
/// Their agreement (words_span_kernel) is asserted by the test suite.
CoinvariantResult coinvariant_basis(const QuantumSubgroup& qs, int d);

/// Membership is preserved by the B-action on the module leg.
Report member_action_closure_check(const QuantumSubgroup& qs, const BModule& bm,
                                   const std::vector<std::pair<Word, std::string>>& members,
                                   int d_b);

/// Every right coproduct leg of a member's algebra part is again a member.
Report member_coproduct_closure_check(const QuantumSubgroup& qs, const BModule& bm,
                                      const std::vector<std::pair<Word, std::string>>& members,
                                      int d_b);

/// The induced carrier: coinvariant words (x) module basis inside H (x) L.
struct InducedCarrier {
    QuantumSubgroup qs;
    BModule bm;
    CarrierPtr carrier;
    std::vector<Word> coinvariant_words;
    int degree = 0;
};

struct InducedStructures {
    InducedCarrier base;
    ActionStructure action;        // alpha(h (x) h' (x) l) = h' (x) eta(pi(h) (x) l)
    CoactionStructure coaction;    // beta(h (x) l) = Delta(h) (x) l
    ConsistencyMap consistency;    // phi(h (x) h' (x) h'' (x) l) = h' (x) h'' (x) eta(pi(h) (x) l)
};

/// Materializes the three induced maps on the induced carrier. Throws
/// ClosureViolation when a coaction output leaves the carrier.
InducedStructures induced_structures(const QuantumSubgroup& qs, const BModule& bm, int d);

/// First-type Hopf-representation check of the induced structures, plus the
/// counit/coassociativity chains of the induced coaction stated separately.
Report induced_rep_check(const QuantumSubgroup& qs, const BModule& bm, int d);

}  // namespace hopfrep
