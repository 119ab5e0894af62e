#pragma once

#include "hopfrep/induction.hpp"
#include "hopfrep/linalg.hpp"

namespace hopfrep {

/// The q-deformed coordinate Hopf algebra of the Euclidean motion group of
/// the plane: invertible rotation generators z, zbar and translation
/// generators a, abar, with q-commutation relations; z, zbar grouplike and
/// a, abar skew-primitive.
HopfPtr make_eq2();

/// The commutative bivariate polynomial Hopf algebra C[t, tbar] with both
/// generators primitive.
HopfPtr make_ak();

/// Group algebra of the cyclic group of order n: one grouplike generator g
/// with g^n = 1 and S(g) = g^(n-1).
HopfPtr make_cyclic(int n);

/// The translation projection pi(a) = t, pi(abar) = tbar, pi(z) = pi(zbar) = 1
/// from make_eq2 onto make_ak. Note: for formal q this is not a bialgebra
/// map (pi(z*a) = t while pi of the reduced word gives q^-1 * t), so the
/// attached validation fails; it passes exactly at q = 1. The induced
/// construction is still well defined for counit-character modules.
QuantumSubgroup make_eq2_translation_subgroup(int d = 3);

/// The quotient projection K[C_n] ->> K[C_m] (m dividing n), g -> g.
QuantumSubgroup make_cyclic_subgroup(int n, int m, int d = 3);

/// Specialize every coefficient at q = q0 (rules, coproducts, counits,
/// antipode). Useful for comparing formal-q behaviour with a numeric point.
HopfPtr evaluate_q(const HopfPtr& hd, const Rational& q0);

/// Dense rational model of K[C_n]: permutation-matrix multiplication,
/// grouplike coproduct, all-ones counit, inversion antipode. This is an
/// independent computation path: verdicts are reached by matrix arithmetic
/// alone and never consult the symbolic engine.
struct DenseGroupAlgebra {
    int n = 0;
    QMatrix mult;      // n^2 -> n
    QMatrix coproduct; // n -> n^2
    QMatrix counit;    // n -> 1
    QMatrix antipode;  // n -> n
    QMatrix unit;      // 1 -> n

    explicit DenseGroupAlgebra(int n);
};

/// Symbolic and dense verdicts for the Hopf axioms of K[C_n]; throws
/// EvaluationMismatch when any verdict differs.
Report oracle_crosscheck_axioms(int n, int d);

/// Symbolic and dense verdicts for the tensor-square package over K[C_n]:
/// the action and coaction laws, the compatibility square (expected to
/// fail, with the same witness tuple on both paths), and the package's
/// consistency map condition (expected to pass).
Report oracle_crosscheck_tensor_square(int n, int d);

/// Symbolic and dense verdicts for the induced representation of
/// K[C_n] / K[C_m]: induced-space dimensions must agree exactly and every
/// first-type condition must pass on both paths.
Report oracle_crosscheck_induced(int n, int m, int d);

}  // namespace hopfrep
