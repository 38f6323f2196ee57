#pragma once

#include "qlang/context.hpp"
#include "qlang/types_weights.hpp"

namespace qlang {

// Smooth character omega_f^a * unr(lambda) of Gal(Fbar/F); lambda is the
// value at geometric Frobenius, stored in F_{q^{2m}}.
struct GaloisCharacter {
    long a = 0; // exponent mod q-1
    Fq lambda{0};
    friend bool operator==(const GaloisCharacter&, const GaloisCharacter&) = default;
    friend auto operator<=>(const GaloisCharacter&, const GaloisCharacter&) = default;
};

GaloisCharacter char_make(const Context& C, long a, Fq lambda);
GaloisCharacter char_mul(const Context& C, const GaloisCharacter& x, const GaloisCharacter& y);
GaloisCharacter char_inv(const Context& C, const GaloisCharacter& x);

// Semisimple 2-dimensional representation in normal form: either a split
// unordered pair of characters or ind(omega_{2f}^h) (x) omega_f^s unr(lambda)
// with 1 <= h <= q-1 and the minimal-orbit normalization of (h, s).
struct SemisimpleRep {
    bool irred = false;
    GaloisCharacter chi1, chi2; // split case, canonically ordered
    long h = 1, s = 0;          // irreducible case
    Fq lambda{0};
    friend bool operator==(const SemisimpleRep&, const SemisimpleRep&) = default;
    friend auto operator<=>(const SemisimpleRep&, const SemisimpleRep&) = default;
};

SemisimpleRep rep_split(const Context& C, const GaloisCharacter& c1, const GaloisCharacter& c2);
SemisimpleRep rep_irred(const Context& C, long h, long s, Fq lambda);

bool is_q_primitive(const PrimePower& pp, long h, long n);

// level-2 exponent h + s(q+1) of the inducing character
long irred_level2_exponent(const Context& C, const SemisimpleRep& r);

GaloisCharacter det_rep(const Context& C, const SemisimpleRep& r);
bool iso_equal(const Context& C, const SemisimpleRep& a, const SemisimpleRep& b);
SemisimpleRep twist(const Context& C, const SemisimpleRep& r, const GaloisCharacter& eta);
InertialType restrict_to_inertia(const Context& C, const SemisimpleRep& r);

// canonical key folding lambda -> -lambda on irreducibles, for tables keyed
// by isomorphism class
struct RepKey {
    int kind = 0;
    long k1 = 0, k2 = 0, k3 = 0, k4 = 0;
    friend bool operator==(const RepKey&, const RepKey&) = default;
    friend auto operator<=>(const RepKey&, const RepKey&) = default;
};
RepKey rep_iso_key(const Context& C, const SemisimpleRep& r);

std::string rep_to_string(const Context& C, const SemisimpleRep& r);

} // namespace qlang
