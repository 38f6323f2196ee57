#include "qlang/phigamma.hpp"
#include "qlang/characters.hpp"

#include <random>
#include <sstream>

namespace qlang {

namespace {
long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long pow_mod(long b, long e, long m) {
    long r = 1 % m;
    b = mod(b, m);
    while (e > 0) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

long inv_mod(long a, long m) {
    long t = 0, nt = 1, r = m, nr = mod(a, m);
    while (nr != 0) {
        long qt = r / nr;
        std::swap(t -= qt * nt, nt);
        std::swap(r -= qt * nr, nr);
    }
    if (r != 1) throw std::domain_error("not invertible");
    return mod(t, m);
}
} // namespace

LubinTate::LubinTate(const ORing& R, const GaloisField& F, long Nmax)
    : R_(&R), F_(&F), Nmax_(Nmax) {
    long headroom = R.ramified ? R.e * R.K : R.K;
    if (headroom < Nmax + 2) throw PrecisionError("LubinTate needs K >= Nmax + 2");
}

std::string LubinTate::key(const OElem& a) const {
    std::ostringstream os;
    for (const auto& x : a.c) os << x.get_str(62) << "|";
    return os.str();
}

const OSeries& LubinTate::mult_series(const OElem& a) {
    std::string k = key(a);
    auto it = cache_.find(k);
    if (it == cache_.end()) it = cache_.emplace(k, lt_mult_series(*R_, a, Nmax_)).first;
    return it->second;
}

TruncLaurent LubinTate::mult_series_mod_pi(const OElem& a) {
    return os_mod_pi(mult_series(a), *F_);
}

TruncLaurent LubinTate::fbar_of(const OElem& u) {
    if (!R_->is_unit(u)) throw std::invalid_argument("fbar needs a unit");
    TruncLaurent red = mult_series_mod_pi(u);
    Fq ubar = R_->residue(u, *F_);
    TruncLaurent t = tl_monomial(*F_, F_->one(), 1);
    return tl_truncate(tl_mul(tl_scale(t, ubar), tl_inv(red)), Nmax_ - 1);
}

PhiGammaModule build_irreducible_module(const Context& C, LubinTate& lt, long h, long n,
                                        long s, Fq lambda, long N) {
    const GaloisField& F = *C.amb;
    if (&lt.field() != C.amb) throw std::invalid_argument("field mismatch");
    if (lt.ring().residue_deg() != C.pp.f)
        throw std::invalid_argument("o_F residue field must be F_q");
    if (lambda.is_zero()) throw std::invalid_argument("lambda must be nonzero");
    if (n >= 2 && !is_q_primitive(C.pp, h, n))
        throw std::invalid_argument("h not q-primitive at level n");
    if (N > lt.nmax()) throw PrecisionError("N exceeds the Lubin-Tate working precision");

    PhiGammaModule D;
    D.n = n;
    D.h = h;
    D.s = C.pp.mod_q1(s);
    D.lambda = lambda;
    D.N = N;
    long pM = C.pp.p;
    while (pM < N) pM *= C.pp.p;
    D.pM = pM;

    long qn1 = 1; // q^n - 1 mod pM needs the true integer only mod pM
    long qmodpM = mod(C.q(), pM);
    long acc = 1;
    for (long i = 0; i < n; ++i) acc = (acc * qmodpM) % pM;
    qn1 = mod(acc - 1, pM);
    long inv_qn1 = inv_mod(qn1, pM);
    for (long j = 0; j < n; ++j) {
        long e = mod(h % pM, pM);
        e = (e * pow_mod(qmodpM, j, pM)) % pM;
        e = (e * mod(C.q() - 1, pM)) % pM;
        e = (e * inv_qn1) % pM;
        D.exps.push_back(e);
    }

    D.A.assign(n, std::vector<TruncLaurent>(n, tl_zero(F)));
    for (long j = 0; j + 1 < n; ++j) D.A[j + 1][j] = tl_const(F, lambda);
    Fq sign = (n % 2 == 0) ? F.neg(lambda) : lambda; // (-1)^{n-1} lambda
    D.A[0][n - 1] = tl_monomial(F, sign, -h * (C.q() - 1));
    return D;
}

std::vector<TruncLaurent> gamma_matrix(const Context& C, LubinTate& lt,
                                       const PhiGammaModule& D, const OElem& u) {
    const GaloisField& F = *C.amb;
    Fq ubar = lt.ring().residue(u, F);
    Fq omega_s = F.pow(ubar, D.s);
    TruncLaurent fb = tl_truncate(lt.fbar_of(u), std::min(D.N, D.pM));
    std::vector<TruncLaurent> out;
    for (long j = 0; j < D.n; ++j)
        out.push_back(tl_scale(tl_binomial_power(fb, D.exps[j], D.pM), omega_s));
    return out;
}

PhiGammaModule tensor_with_character(const Context& C, const PhiGammaModule& D, long s,
                                     Fq lambda) {
    PhiGammaModule r = D;
    r.s = C.pp.mod_q1(D.s + s);
    r.lambda = C.amb->mul(D.lambda, lambda);
    for (auto& row : r.A)
        for (auto& e : row) e = tl_scale(e, lambda);
    return r;
}

SemilinearityReport check_semilinearity(const Context& C, LubinTate& lt,
                                        const PhiGammaModule& D,
                                        const std::vector<OElem>& units) {
    const ORing& R = lt.ring();
    SemilinearityReport rep;
    rep.cocycle_ok = rep.phigamma_ok = true;
    rep.certified_to = TruncLaurent::EXACT;

    auto observe = [&](const TruncLaurent& diff, bool& flag) {
        if (!tl_is_zero_at_prec(diff)) flag = false;
        if (diff.bound < rep.certified_to) rep.certified_to = diff.bound;
    };

    // cocycle G(uv) = G(u) * (u . G(v))
    for (size_t a = 0; a < units.size(); ++a) {
        const OElem& u = units[a];
        const OElem& v = units[(a + 1) % units.size()];
        OElem uv = R.mul(u, v);
        auto Gu = gamma_matrix(C, lt, D, u);
        auto Gv = gamma_matrix(C, lt, D, v);
        auto Guv = gamma_matrix(C, lt, D, uv);
        TruncLaurent usub = lt.mult_series_mod_pi(u);
        for (long j = 0; j < D.n; ++j) {
            TruncLaurent rhs = tl_mul(Gu[j], tl_compose(Gv[j], usub));
            observe(tl_sub(Guv[j], rhs), rep.cocycle_ok);
        }
    }

    // G(u) * u(A) = A * phi(G(u))
    for (const OElem& u : units) {
        auto Gu = gamma_matrix(C, lt, D, u);
        TruncLaurent usub = lt.mult_series_mod_pi(u);
        for (long i = 0; i < D.n; ++i)
            for (long j = 0; j < D.n; ++j) {
                const TruncLaurent& Aij = D.A[i][j];
                if (Aij.c.empty()) continue;
                TruncLaurent lhs = tl_mul(Gu[i], tl_compose(Aij, usub));
                TruncLaurent rhs = tl_mul(Aij, tl_subst_tq(Gu[j], C.q()));
                observe(tl_sub(lhs, rhs), rep.phigamma_ok);
            }
    }
    return rep;
}

namespace {
TruncLaurent tl_det(const Context& C, const std::vector<std::vector<TruncLaurent>>& M) {
    const GaloisField& F = *C.amb;
    size_t n = M.size();
    if (n == 1) return M[0][0];
    TruncLaurent acc = tl_zero(F);
    for (size_t i = 0; i < n; ++i) {
        if (M[i][0].c.empty() && M[i][0].bound == TruncLaurent::EXACT) continue;
        std::vector<std::vector<TruncLaurent>> sub;
        for (size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            std::vector<TruncLaurent> row;
            for (size_t c = 1; c < n; ++c) row.push_back(M[r][c]);
            sub.push_back(row);
        }
        TruncLaurent term = tl_mul(M[i][0], tl_det(C, sub));
        acc = tl_add(acc, (i % 2 == 0) ? term : tl_neg(term));
    }
    return acc;
}
} // namespace

bool exterior_det_check(const Context& C, LubinTate& lt, const PhiGammaModule& D,
                        const std::vector<OElem>& units) {
    const GaloisField& F = *C.amb;
    const long q = C.q();
    TruncLaurent detA = tl_det(C, D.A);
    // phi scalar: t^{qh} det(A) t^{-h} = lambda^n
    TruncLaurent phi_scalar = tl_shift(detA, q * D.h - D.h);
    if (!tl_equal(phi_scalar, tl_const(F, F.pow(D.lambda, D.n)))) return false;
    for (const OElem& u : units) {
        auto Gu = gamma_matrix(C, lt, D, u);
        TruncLaurent det_g = tl_const(F, F.one());
        for (long j = 0; j < D.n; ++j) det_g = tl_mul(det_g, Gu[j]);
        TruncLaurent usub = lt.mult_series_mod_pi(u); // gamma(t)
        TruncLaurent gamma_scalar = tl_mul(tl_pow(usub, D.h), det_g);
        gamma_scalar = tl_shift(gamma_scalar, -D.h);
        Fq ubar = lt.ring().residue(u, F);
        Fq expect = F.pow(ubar, D.h + D.n * D.s);
        if (!tl_equal(gamma_scalar, tl_const(F, expect))) return false;
    }
    return true;
}

std::vector<OElem> units_sample(const ORing& R, long count, unsigned long seed) {
    std::vector<OElem> out;
    const GaloisField& Fres = GaloisField::get(R.p, R.residue_deg());
    OElem z = R.lift_residue(Fres.gen(), Fres);
    out.push_back(z);
    out.push_back(R.mul(z, z));
    out.push_back(R.add(R.one(), R.pi()));
    out.push_back(R.add(R.one(), R.mul(R.pi(), R.pi())));
    std::mt19937_64 rng(seed);
    while (static_cast<long>(out.size()) < count) {
        OElem x = R.zero();
        for (long i = 0; i < R.e; ++i) {
            mpz_class acc = 0, mult = 1;
            for (long d = 0; d < R.K; ++d) {
                long digit = static_cast<long>(rng() % static_cast<unsigned long>(R.p));
                if (i == 0 && d == 0 && digit == 0) digit = 1;
                acc += digit * mult;
                mult *= R.p;
            }
            x.c[i] = acc % R.pK;
        }
        out.push_back(x);
    }
    return out;
}

SharpLattice sharp_lattice(const Context& C, long h) {
    const long q = C.q();
    if (h < 1 || h > q - 1) throw std::invalid_argument("h out of range");
    SharpLattice L;
    L.h = h;
    L.q = q;
    L.k = {h - 1, q - h, h - 1};
    // i_j = q - 1 - k_{2-j}: i_0 = q - h, i_1 = h - 1; h_2 = i_0 + i_1 q = h(q-1)
    L.hj = {0, h - 1, h * (q - 1)};
    return L;
}

namespace {
// psi on the module with phi(g0) = g1, phi(g1) = -t^{-h(q-1)} g0:
// psi_D(a g0 + b g1) = psi(b) g0 - psi(t^{h(q-1)} a) g1
struct ModulePsi {
    const Context* C;
    long h;
    bool shifted; // psi~(f) = psi(t f) / t instead of the canonical psi

    TruncLaurent ser_psi(const TruncLaurent& x) const {
        long q = C->q();
        if (!shifted) return tl_psi(x, q);
        return tl_shift(tl_psi(tl_shift(x, 1), q), -1);
    }
    std::pair<TruncLaurent, TruncLaurent> apply(const TruncLaurent& a,
                                                const TruncLaurent& b) const {
        long q = C->q();
        TruncLaurent c0 = ser_psi(b);
        TruncLaurent c1 = tl_neg(ser_psi(tl_shift(a, h * (q - 1))));
        return {c0, c1};
    }
};
} // namespace

bool check_psi_stable(const Context& C, const SharpLattice& L, long prec) {
    const GaloisField& F = *C.amb;
    ModulePsi mp{&C, L.h, false};
    long B = 2 * C.q() + 2;
    for (long alpha = 0; alpha <= B; ++alpha) {
        for (int j = 0; j < 2; ++j) {
            // t^alpha f_j in the (g0, g1) basis
            TruncLaurent a = j == 0 ? tl_monomial(F, F.one(), alpha) : tl_zero(F, prec);
            TruncLaurent b = j == 0 ? tl_zero(F, prec)
                                    : tl_monomial(F, F.one(), alpha + L.hj[1]);
            auto [c0, c1] = mp.apply(tl_truncate(a, prec), tl_truncate(b, prec));
            // back to the (f0, f1) basis: f1 = t^{h-1} g1
            TruncLaurent c1f = tl_shift(c1, -L.hj[1]);
            for (const TruncLaurent* c : {&c0, &c1f}) {
                for (size_t k = 0; k < c->c.size(); ++k)
                    if (!c->c[k].is_zero() && c->v + static_cast<long>(k) < 0) return false;
            }
        }
    }
    return true;
}

DualRelationsReport torsion_dual_relations(const Context& C, long h, long prec) {
    const GaloisField& F = *C.amb;
    SharpLattice L = sharp_lattice(C, h);
    DualRelationsReport rep;
    long B = 2 * C.q() + 2;

    for (int conv = 0; conv < 2; ++conv) {
        ModulePsi mp{&C, h, conv == 1};
        // functional value e'_i on an element given in f-basis coefficients
        auto eval = [&](const TruncLaurent& ci) -> std::optional<Fq> {
            for (size_t k = 0; k < ci.c.size(); ++k)
                if (!ci.c[k].is_zero() && ci.v + static_cast<long>(k) < 0)
                    return std::nullopt; // left the lattice
            return ci.coeff(0);
        };
        bool rel1 = true, rel2 = true;
        for (long alpha = 0; alpha <= B; ++alpha) {
            for (int j = 0; j < 2; ++j) {
                auto element = [&](long extra) {
                    TruncLaurent a = j == 0 ? tl_monomial(F, F.one(), alpha + extra)
                                            : tl_zero(F, prec);
                    TruncLaurent b = j == 0 ? tl_zero(F, prec)
                                            : tl_monomial(F, F.one(), alpha + extra + L.hj[1]);
                    return std::make_pair(tl_truncate(a, prec), tl_truncate(b, prec));
                };
                {
                    auto [a, b] = element(L.k[1]); // t^{k1 + alpha} f_j
                    auto [c0, c1] = mp.apply(a, b);
                    auto v0 = eval(c0);
                    Fq expect = (j == 1 && alpha == 0) ? F.one() : F.zero();
                    if (!v0 || !(*v0 == expect)) rel1 = false;
                }
                {
                    auto [a, b] = element(L.k[0]); // t^{k0 + alpha} f_j
                    auto [c0, c1] = mp.apply(a, b);
                    TruncLaurent c1f = tl_shift(c1, -L.hj[1]);
                    auto v1 = eval(c1f);
                    Fq expect = (j == 0 && alpha == 0) ? F.minus_one() : F.zero();
                    if (!v1 || !(*v1 == expect)) rel2 = false;
                }
            }
        }
        if (conv == 0) rep.canonical = {rel1, rel2};
        else rep.shifted = {rel1, rel2};
    }
    return rep;
}

} // namespace qlang
