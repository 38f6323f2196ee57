#pragma once

#include "qlang/heckegk.hpp"
#include "qlang/phigamma.hpp"

namespace qlang {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

// type counts against the closed-form values and the direct-enumeration oracle
CheckResult verify_type_counts(long p, long f);

// iota is a bijection onto the classes with prescribed determinant, fiberwise
// over z2 in F_q^x, with the two sign choices differing by an unr(-1)-twist
CheckResult verify_iota_bijection(const Context& C);
CheckResult verify_sign_ambiguity(const Context& C);

// iota intertwines the twisting action with twisting by omega^k unr(z)
CheckResult verify_iota_twist_compat(const Context& C);

// L: direct rules vs conjugation by both square roots, gluing consistency,
// surjectivity onto the points over F_{q^m}
CheckResult verify_l_dual_route(const Context& C);

// equivariance L(g s) = g L(s)
CheckResult verify_equivariance_exhaustive(const Context& C);
CheckResult verify_equivariance_random(const Context& C, long trials, unsigned long seed);

// supersingular points <-> irreducible classes, per z2
CheckResult verify_ssing_bijection(const Context& C, bool all_z2);

// hw(weight) equals the Satake component label on every coordinate line
CheckResult verify_weight_labels(const Context& C);

// parameter-level Grosse-Kloenne comparison over all irreducibles
CheckResult verify_compare_gk(const Context& C);

// structural (phi,Gamma)-module suite: cocycle, phi-Gamma commutation,
// exterior determinant scalars, fbar in 1 + t F_q[[t]], all through t^target
CheckResult verify_phigamma_structural(long p, long f, long target, unsigned long seed);

// [a][b] = [ab] and [u][u^{-1}] = t mod (pi, t^N) for random pairs
CheckResult verify_lt_oracle(const ORing& R, const std::string& label, long pairs, long N,
                             unsigned long seed);

// sharp-lattice weights, psi-stability, psi o phi = id, projection formula,
// and the torsion-dual report consistency
CheckResult verify_prop87(const Context& C);

// Serre-weight non-membership / membership arguments at f = 2
CheckResult verify_serre(long p);

std::vector<CheckResult> verify_all(long p, long f, long m, unsigned long seed);

} // namespace qlang
