#pragma once

#include "qlang/trunc_laurent.hpp"

#include <gmpxx.h>
#include <map>

namespace qlang {

struct OElem {
    std::vector<mpz_class> c; // length e, coefficients in [0, p^K)
};

// Monogenic o_F = Z_p[x]/(g), elements tracked modulo p^K.
// Unramified: g lifts the primitive polynomial of F_{p^e}, pi = p.
// Ramified: g Eisenstein, pi = x (residue field F_p).
class ORing {
public:
    static ORing unramified(long p, long K, long deg);
    static ORing eisenstein(long p, long K, const std::vector<long>& g);

    long p = 0, K = 0, e = 1;
    bool ramified = false;
    mpz_class pK;
    std::vector<mpz_class> g; // monic, size e+1

    long residue_deg() const { return ramified ? 1 : e; }
    long q_res() const;       // size of the residue field

    OElem zero() const { return {std::vector<mpz_class>(e, 0)}; }
    OElem one() const;
    OElem pi() const;
    OElem from_int(long a) const;

    bool is_zero(const OElem& a) const;
    bool is_unit(const OElem& a) const;
    bool eq(const OElem& a, const OElem& b) const;

    OElem add(const OElem& a, const OElem& b) const;
    OElem sub(const OElem& a, const OElem& b) const;
    OElem neg(const OElem& a) const;
    OElem mul(const OElem& a, const OElem& b) const;
    OElem mul_int(const OElem& a, const mpz_class& s) const;
    OElem pow(OElem a, long n) const;
    OElem inv_unit(const OElem& a) const;
    OElem div_by_pi(const OElem& a) const; // exact; throws if a not in (pi)
    OElem pi_pow(long n) const;

    // residue map into F_{p^residue_deg} inside F (requires residue_deg | F.deg)
    Fq residue(const OElem& a, const GaloisField& F) const;
    OElem lift_residue(Fq a, const GaloisField& F) const; // Teichmueller lift
    OElem teichmuller(const OElem& u) const;
    long primitive_root_mod_p() const;

private:
    OElem reduce_poly(std::vector<mpz_class> t) const;
    Fq residue_root(const GaloisField& F) const;
    mutable std::map<const GaloisField*, Fq> root_cache_;
};

// Power series over an ORing, exact modulo (pi^{K_eff}, t^N) where
// K_eff accounts for valuation lost to exact divisions by pi.
struct OSeries {
    const ORing* R = nullptr;
    long N = 0;
    std::vector<OElem> c; // c[j] multiplies t^j, j in [0, N)
    long lost = 0;        // pi-adic digits consumed by divisions

    long effective_prec() const { return (R->ramified ? R->e * R->K : R->K) - lost; }
};

OSeries os_zero(const ORing& R, long N);
OSeries os_add(const OSeries& a, const OSeries& b);
OSeries os_sub(const OSeries& a, const OSeries& b);
OSeries os_mul(const OSeries& a, const OSeries& b);
OSeries os_compose(const OSeries& f, const OSeries& g); // val(g) >= 1
bool os_eq(const OSeries& a, const OSeries& b);

// reduction mod pi, a ring homomorphism onto F_{q_res}[[t]] inside F
TruncLaurent os_mod_pi(const OSeries& s, const GaloisField& F);

// [a](t): the unique endomorphism of the Lubin-Tate group with Frobenius
// series phi(t) = pi t + t^q, congruent to a t mod t^2.  Requires headroom
// K_eff >= N + 2.
OSeries lt_mult_series(const ORing& R, const OElem& a, long N);

// fbar_u(t) = omega(u) t / ([u](t) mod pi) in 1 + t F_q[[t]]
TruncLaurent fbar(const ORing& R, const OElem& u, long N, const GaloisField& F);

} // namespace qlang
