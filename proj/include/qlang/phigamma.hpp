#pragma once

#include "qlang/context.hpp"
#include "qlang/padic.hpp"

#include <map>
#include <optional>

namespace qlang {

// Lubin-Tate environment for a fixed o_F: memoizes the multiplication
// series [a](t) at a fixed working t-precision.
class LubinTate {
public:
    LubinTate(const ORing& R, const GaloisField& F, long Nmax);

    const ORing& ring() const { return *R_; }
    const GaloisField& field() const { return *F_; }
    long nmax() const { return Nmax_; }

    const OSeries& mult_series(const OElem& a);
    TruncLaurent mult_series_mod_pi(const OElem& a); // [a](t) mod pi
    TruncLaurent fbar_of(const OElem& u);            // omega(u) t / [u](t) mod pi

private:
    std::string key(const OElem& a) const;
    const ORing* R_;
    const GaloisField* F_;
    long Nmax_;
    std::map<std::string, OSeries> cache_;
};

// Etale Lubin-Tate (phi,Gamma)-module attached to ind(omega_{nf}^h) (x)
// omega_f^s unr(lambda): phi-matrix A over k((t)) and the diagonal
// Gamma-evaluator determined by the exponents e_j = h q^j (q-1)/(q^n-1)
// reduced mod p^M.
struct PhiGammaModule {
    long n = 1;
    long h = 1;
    long s = 0;
    Fq lambda{0};
    long N = 0;  // working t-precision
    long pM = 0; // exponent modulus p^M, >= N
    std::vector<long> exps;
    std::vector<std::vector<TruncLaurent>> A; // A[i][j]: phi(e_j) = sum_i A[i][j] e_i
};

PhiGammaModule build_irreducible_module(const Context& C, LubinTate& lt, long h, long n,
                                        long s, Fq lambda, long N);

// diagonal entries of G(u)
std::vector<TruncLaurent> gamma_matrix(const Context& C, LubinTate& lt,
                                       const PhiGammaModule& D, const OElem& u);

PhiGammaModule tensor_with_character(const Context& C, const PhiGammaModule& D, long s, Fq lambda);

struct SemilinearityReport {
    bool cocycle_ok = false;
    bool phigamma_ok = false;
    long certified_to = 0; // identities verified through t^{certified_to - 1}
};

SemilinearityReport check_semilinearity(const Context& C, LubinTate& lt, const PhiGammaModule& D,
                                        const std::vector<OElem>& units);

// top exterior power scalars: phi acts on t^h e_0 ^ ... ^ e_{n-1} by lambda^n
// and gamma by omega(u)^{h + n s}
bool exterior_det_check(const Context& C, LubinTate& lt, const PhiGammaModule& D,
                        const std::vector<OElem>& units);

// standard units sample: Teichmueller lifts, 1 + pi, 1 + pi^2, pseudo-random
std::vector<OElem> units_sample(const ORing& R, long count, unsigned long seed);

struct SharpLattice {
    long h = 1;
    long q = 0;
    std::array<long, 3> k{};  // (k0, k1, k2) = (h-1, q-h, h-1)
    std::array<long, 3> hj{}; // (h0, h1, h2) = (0, h-1, h(q-1))
};

SharpLattice sharp_lattice(const Context& C, long h);
bool check_psi_stable(const Context& C, const SharpLattice& L, long prec);

// torsion-dual relations t^{k1} phi(e'_0) = e'_1 and t^{k0} phi(e'_1) = -e'_0,
// evaluated under two psi-normalizations (results reported, not asserted)
struct DualRelationsReport {
    std::array<bool, 2> canonical{};
    std::array<bool, 2> shifted{};
};

DualRelationsReport torsion_dual_relations(const Context& C, long h, long prec);

} // namespace qlang
