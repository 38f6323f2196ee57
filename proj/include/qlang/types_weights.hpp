#pragma once

#include "qlang/fq.hpp"

#include <array>
#include <optional>

namespace qlang {

// Tame two-dimensional mod p inertial type.  Niveau 1 stores the unordered
// pair of omega_f-exponents; niveau 2 stores the {1,q}-orbit of a q-primitive
// exponent mod q^2-1 by its smallest representative.
struct InertialType {
    int niveau = 1;
    long a = 0, b = 0; // niveau 1: exponents mod q-1, a <= b
    long h2 = 0;       // niveau 2: minimal orbit representative mod q^2-1

    friend bool operator==(const InertialType&, const InertialType&) = default;
    friend auto operator<=>(const InertialType&, const InertialType&) = default;
};

InertialType type_niveau1(const PrimePower& pp, long a, long b);
InertialType type_niveau2(const PrimePower& pp, long exponent);
long type_det_exponent(const PrimePower& pp, const InertialType& t);

// all tame types of the given niveau with determinant omega_f^d, built from
// the basic even/odd tables twisted by powers of omega_f
std::vector<InertialType> enumerate_types(const PrimePower& pp, long d, int niveau);

// independent oracle: direct enumeration of exponent data
std::vector<InertialType> enumerate_types_direct(const PrimePower& pp, long d, int niveau);

// The weight F(r) (x) det^s of GL_2(F_q).
struct Weight {
    long r = 0; // 0 <= r <= q-1
    long s = 0; // 0 <= s <= q-2
    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;
};

// highest weight: F(r) (x) det^s -> (r+s, s) as a character of the diagonal torus
std::array<long, 2> hw(const PrimePower& pp, const Weight& w);

struct WeightDigits {
    std::vector<long> r; // f digits, 0 <= r_i <= p-1
    long s = 0;
    friend bool operator==(const WeightDigits&, const WeightDigits&) = default;
};

WeightDigits weight_to_digits(const PrimePower& pp, const Weight& w);
Weight digits_to_weight(const PrimePower& pp, const WeightDigits& d);

// Digit data of a generic niveau-2 type: tau ~ (omega_{2f}^{r+1} (+) conj) (x) omega_f^s
// with r+1 = sum (r_i + 1) p^i.  Genericity: 1 <= r_0 <= p-2, 0 <= r_i <= p-3.
struct TypePresentation {
    long r = 0;          // -1 <= r <= q-2
    long s = 0;          // twist exponent mod q-1
    std::vector<long> ri; // the digits r_i when the expansion exists
    bool expandable = false;
    bool generic = false;
};

TypePresentation present_niveau2(const PrimePower& pp, long exponent);
bool is_generic(const PrimePower& pp, const InertialType& t);

// lambda_i(x) = sign*x + c with sign in {+1,-1}
struct AffineFn {
    int sign = 1;
    long c = 0;
    long eval(long x) const { return sign * x + c; }
    friend bool operator==(const AffineFn&, const AffineFn&) = default;
};

using LambdaTuple = std::vector<AffineFn>;

// all tuples satisfying conditions (i) and (ii); (ii) read cyclically or as a
// chain depending on the flag
std::vector<LambdaTuple> lambda_candidates_i_ii(long p, long f, bool cyclic);

// Does some candidate tuple equal the given digit pattern as functions?
bool pattern_matched(const std::vector<AffineFn>& pattern, long p, long f, bool cyclic);

// Certified non-membership of the component weights of a generic niveau-2
// type: no (i)-(ii) candidate realizes the digit pattern (x_0, x_1+1, ...,
// x_{f-1}+1), which is the pattern of both F(r) and F(q-1-r) in their
// respective presentations.  Sound since the true Diamond set is a subset of
// the candidates.  Requires f > 1 and a generic type.
bool not_in_w_tau_component_weight(const PrimePower& pp, const InertialType& tau, bool cyclic);

// the identity tuple realizes the weight (r_0,...,r_{f-1}) (x) det^s
bool membership_weight_matched(const PrimePower& pp, const InertialType& tau, bool cyclic);

} // namespace qlang
