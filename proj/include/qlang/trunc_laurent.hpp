#pragma once

#include "qlang/fq.hpp"

#include <limits>

namespace qlang {

struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Laurent series over a finite field, exact modulo t^bound.  The window
// [v, bound) holds the known coefficients; everything below v is zero.
// bound == EXACT marks entire series known (polynomials, constants).
struct TruncLaurent {
    static constexpr long EXACT = std::numeric_limits<long>::max() / 4;

    const GaloisField* F = nullptr;
    long v = 0;
    long bound = 0;
    std::vector<Fq> c; // c[i] is the coefficient of t^(v+i); c.size() == min(bound,cap) - v

    long prec() const { return bound - v; }
    bool known_zero() const; // all stored coefficients vanish
    Fq coeff(long j) const;  // coefficient of t^j, throws above bound
    long valuation() const;  // throws if the series is zero at this precision

    void normalize();
};

TruncLaurent tl_zero(const GaloisField& F, long bound = TruncLaurent::EXACT);
TruncLaurent tl_const(const GaloisField& F, Fq a);
TruncLaurent tl_monomial(const GaloisField& F, Fq a, long deg);
TruncLaurent tl_from_coeffs(const GaloisField& F, long v, const std::vector<Fq>& cs,
                            long bound = TruncLaurent::EXACT);

TruncLaurent tl_truncate(const TruncLaurent& a, long new_bound);
TruncLaurent tl_add(const TruncLaurent& a, const TruncLaurent& b);
TruncLaurent tl_sub(const TruncLaurent& a, const TruncLaurent& b);
TruncLaurent tl_neg(const TruncLaurent& a);
TruncLaurent tl_scale(const TruncLaurent& a, Fq s);
TruncLaurent tl_shift(const TruncLaurent& a, long k); // multiply by t^k
TruncLaurent tl_mul(const TruncLaurent& a, const TruncLaurent& b);
TruncLaurent tl_inv(const TruncLaurent& a);           // unit at its valuation
TruncLaurent tl_pow(const TruncLaurent& a, long e);   // e may be negative

// f(g) for val(g) >= 1; negative powers of t in f become powers of 1/g.
TruncLaurent tl_compose(const TruncLaurent& f, const TruncLaurent& g);

// coefficient substitution t -> t^q, coefficients untouched
TruncLaurent tl_subst_tq(const TruncLaurent& a, long q);

// psi(sum a_j t^j) = sum a_{qj} t^j; left inverse of t -> t^q
TruncLaurent tl_psi(const TruncLaurent& a, long q);

// w^s for w in 1 + t k[[t]], s given as a residue mod p^m; requires the
// usable precision to stay within p^m
TruncLaurent tl_binomial_power(const TruncLaurent& w, long s_mod, long p_pow_m);

// equality of all coefficients up to the smaller precision; an empty
// comparison window is an error rather than a vacuous true
bool tl_equal(const TruncLaurent& a, const TruncLaurent& b);
bool tl_is_zero_at_prec(const TruncLaurent& a); // known coefficients all zero, window nonempty

std::string tl_to_string(const TruncLaurent& a);

} // namespace qlang
