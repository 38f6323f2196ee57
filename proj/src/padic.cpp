#include "qlang/padic.hpp"

#include <algorithm>

namespace qlang {

namespace {
mpz_class pow_mpz(long b, long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), b, e);
    return r;
}
} // namespace

ORing ORing::unramified(long p, long K, long deg) {
    ORing R;
    R.p = p;
    R.K = K;
    R.e = deg;
    R.ramified = false;
    R.pK = pow_mpz(p, K);
    std::vector<long> gl = find_primitive_poly(p, deg);
    R.g.assign(deg + 1, 0);
    for (long i = 0; i <= deg; ++i) R.g[i] = gl[i];
    return R;
}

ORing ORing::eisenstein(long p, long K, const std::vector<long>& g) {
    long e = static_cast<long>(g.size()) - 1;
    if (e < 1 || g[e] != 1) throw std::invalid_argument("g must be monic");
    for (long i = 0; i < e; ++i)
        if (g[i] % p != 0) throw std::invalid_argument("g must be Eisenstein");
    if ((g[0] / p) % p == 0) throw std::invalid_argument("g must be Eisenstein");
    ORing R;
    R.p = p;
    R.K = K;
    R.e = e;
    R.ramified = true;
    R.pK = pow_mpz(p, K);
    R.g.assign(e + 1, 0);
    for (long i = 0; i <= e; ++i) R.g[i] = ((mpz_class(g[i]) % R.pK) + R.pK) % R.pK;
    return R;
}

long ORing::q_res() const {
    long q = 1;
    for (long i = 0; i < residue_deg(); ++i) q *= p;
    return q;
}

OElem ORing::one() const {
    OElem r = zero();
    r.c[0] = 1;
    return r;
}

OElem ORing::pi() const {
    OElem r = zero();
    if (ramified) {
        if (e == 1) throw std::logic_error("eisenstein ring of degree 1");
        r.c[1] = 1;
    } else {
        r.c[0] = p;
    }
    return r;
}

OElem ORing::from_int(long a) const {
    OElem r = zero();
    mpz_class v = a;
    r.c[0] = ((v % pK) + pK) % pK;
    return r;
}

bool ORing::is_zero(const OElem& a) const {
    for (const auto& x : a.c)
        if (x != 0) return false;
    return true;
}

bool ORing::is_unit(const OElem& a) const {
    if (ramified) return a.c[0] % p != 0;
    for (const auto& x : a.c)
        if (x % p != 0) return true;
    return false;
}

bool ORing::eq(const OElem& a, const OElem& b) const {
    for (long i = 0; i < e; ++i)
        if (a.c[i] != b.c[i]) return false;
    return true;
}

OElem ORing::add(const OElem& a, const OElem& b) const {
    OElem r = zero();
    for (long i = 0; i < e; ++i) {
        r.c[i] = a.c[i] + b.c[i];
        if (r.c[i] >= pK) r.c[i] -= pK;
    }
    return r;
}

OElem ORing::sub(const OElem& a, const OElem& b) const {
    OElem r = zero();
    for (long i = 0; i < e; ++i) {
        r.c[i] = a.c[i] - b.c[i];
        if (r.c[i] < 0) r.c[i] += pK;
    }
    return r;
}

OElem ORing::neg(const OElem& a) const { return sub(zero(), a); }

OElem ORing::reduce_poly(std::vector<mpz_class> t) const {
    for (long k = static_cast<long>(t.size()) - 1; k >= e; --k) {
        if (t[k] == 0) continue;
        mpz_class c = t[k];
        t[k] = 0;
        for (long i = 0; i < e; ++i) {
            t[k - e + i] -= c * g[i];
            t[k - e + i] %= pK;
        }
    }
    OElem r = zero();
    for (long i = 0; i < e; ++i) r.c[i] = ((t[i] % pK) + pK) % pK;
    return r;
}

OElem ORing::mul(const OElem& a, const OElem& b) const {
    std::vector<mpz_class> t(2 * e - 1, 0);
    for (long i = 0; i < e; ++i) {
        if (a.c[i] == 0) continue;
        for (long j = 0; j < e; ++j) {
            if (b.c[j] == 0) continue;
            t[i + j] += a.c[i] * b.c[j];
        }
    }
    return reduce_poly(std::move(t));
}

OElem ORing::mul_int(const OElem& a, const mpz_class& s) const {
    OElem r = zero();
    for (long i = 0; i < e; ++i) r.c[i] = ((a.c[i] * s) % pK + pK) % pK;
    return r;
}

OElem ORing::pow(OElem a, long n) const {
    OElem r = one();
    while (n > 0) {
        if (n & 1) r = mul(r, a);
        n >>= 1;
        if (n > 0) a = mul(a, a);
    }
    return r;
}

OElem ORing::inv_unit(const OElem& a) const {
    if (!is_unit(a)) throw std::domain_error("inverse of non-unit");
    // Hensel: lift the residue-field inverse, then Newton iterations
    const GaloisField& F = GaloisField::get(p, residue_deg());
    Fq r0 = residue(a, F);
    OElem b = lift_residue(F.inv(r0), F);
    // b := b (2 - a b), doubling pi-adic accuracy each round
    long need = ramified ? e * K : K;
    for (long acc = 1; acc < 2 * need; acc *= 2) {
        OElem ab = mul(a, b);
        OElem two = from_int(2);
        b = mul(b, sub(two, ab));
    }
    return b;
}

OElem ORing::div_by_pi(const OElem& a) const {
    OElem r = zero();
    if (!ramified) {
        for (long i = 0; i < e; ++i) {
            if (a.c[i] % p != 0) throw PrecisionError("element not divisible by pi");
            r.c[i] = a.c[i] / p;
        }
        return r;
    }
    // solve a = x * y with y unknown: y_{e-1} = -a_0 / g_0, y_{i-1} = a_i + y_{e-1} g_i
    if (a.c[0] % p != 0) throw PrecisionError("element not divisible by pi");
    mpz_class g0p = g[0] / p; // unit mod p
    mpz_class inv_g0p;
    if (mpz_invert(inv_g0p.get_mpz_t(), g0p.get_mpz_t(), pK.get_mpz_t()) == 0)
        throw std::logic_error("non-invertible Eisenstein constant");
    mpz_class ylast = (-(a.c[0] / p) * inv_g0p) % pK;
    ylast = (ylast + pK) % pK;
    r.c[e - 1] = ylast;
    for (long i = 1; i < e; ++i) {
        mpz_class yi = (a.c[i] + ylast * g[i]) % pK;
        r.c[i - 1] = (yi + pK) % pK;
    }
    return r;
}

OElem ORing::pi_pow(long n) const { return pow(pi(), n); }

Fq ORing::residue_root(const GaloisField& F) const {
    auto it = root_cache_.find(&F);
    if (it != root_cache_.end()) return it->second;
    if (F.deg() % residue_deg() != 0)
        throw std::invalid_argument("residue field does not embed");
    Fq root = F.zero();
    if (ramified) {
        root = F.one(); // unused; residue is c_0 mod p
    } else {
        // smallest-log root of g mod p in F
        bool found = false;
        long step = F.order() / F.sub_order(e);
        for (long k = 0; k < F.sub_order(e) && !found; ++k) {
            Fq cand = F.from_log(k * step);
            Fq acc = F.zero();
            Fq pw = F.one();
            for (long i = 0; i <= e; ++i) {
                long gi = mpz_class(g[i] % p).get_si();
                acc = F.add(acc, F.mul(F.from_int(gi), pw));
                pw = F.mul(pw, cand);
            }
            if (acc.is_zero()) {
                root = cand;
                found = true;
            }
        }
        if (!found) throw std::logic_error("defining polynomial has no root in field");
    }
    root_cache_[&F] = root;
    return root;
}

Fq ORing::residue(const OElem& a, const GaloisField& F) const {
    if (ramified) {
        long r = mpz_class(a.c[0] % p).get_si();
        return F.from_int(r);
    }
    Fq root = residue_root(F);
    Fq acc = F.zero();
    Fq pw = F.one();
    for (long i = 0; i < e; ++i) {
        long ci = mpz_class(a.c[i] % p).get_si();
        acc = F.add(acc, F.mul(F.from_int(ci), pw));
        pw = F.mul(pw, root);
    }
    return acc;
}

OElem ORing::teichmuller(const OElem& u) const {
    OElem x = u;
    long q = q_res();
    long need = ramified ? e * K : K;
    for (long i = 0; i <= need + 2; ++i) x = pow(x, q);
    return x;
}

OElem ORing::lift_residue(Fq a, const GaloisField& F) const {
    if (a.is_zero()) return zero();
    if (ramified) {
        if (!F.in_subfield(a, 1)) throw std::invalid_argument("residue not in F_p");
        long r0 = primitive_root_mod_p();
        Fq z = F.from_int(r0);
        Fq cur = F.one();
        long k = 0;
        while (!(cur == a)) {
            cur = F.mul(cur, z);
            if (++k > p) throw std::logic_error("dlog failure");
        }
        return pow(teichmuller(from_int(r0)), k);
    }
    // x mod g reduces to the root; find a = root^k and lift as teich(x)^k
    Fq root = residue_root(F);
    long sub_ord = F.sub_order(e);
    Fq cur = F.one();
    long k = 0;
    while (!(cur == a)) {
        cur = F.mul(cur, root);
        if (++k > sub_ord) throw std::invalid_argument("residue not in the residue field");
    }
    OElem x = zero();
    if (e == 1) {
        std::vector<long> pl = find_primitive_poly(p, 1);
        x.c[0] = ((-pl[0]) % p + p) % p;
    } else {
        x.c[1] = 1;
    }
    return pow(teichmuller(x), k);
}

long primitive_root_mod_p_impl(long p) {
    std::vector<long> pl = find_primitive_poly(p, 1);
    return ((-pl[0]) % p + p) % p;
}

long ORing::primitive_root_mod_p() const { return primitive_root_mod_p_impl(p); }

OSeries os_zero(const ORing& R, long N) {
    OSeries s;
    s.R = &R;
    s.N = N;
    s.c.assign(N, R.zero());
    return s;
}

OSeries os_add(const OSeries& a, const OSeries& b) {
    const ORing& R = *a.R;
    OSeries r = os_zero(R, std::min(a.N, b.N));
    r.lost = std::max(a.lost, b.lost);
    for (long j = 0; j < r.N; ++j) r.c[j] = R.add(a.c[j], b.c[j]);
    return r;
}

OSeries os_sub(const OSeries& a, const OSeries& b) {
    const ORing& R = *a.R;
    OSeries r = os_zero(R, std::min(a.N, b.N));
    r.lost = std::max(a.lost, b.lost);
    for (long j = 0; j < r.N; ++j) r.c[j] = R.sub(a.c[j], b.c[j]);
    return r;
}

OSeries os_mul(const OSeries& a, const OSeries& b) {
    const ORing& R = *a.R;
    OSeries r = os_zero(R, std::min(a.N, b.N));
    r.lost = std::max(a.lost, b.lost);
    for (long i = 0; i < r.N; ++i) {
        if (R.is_zero(a.c[i])) continue;
        for (long j = 0; i + j < r.N; ++j) {
            if (R.is_zero(b.c[j])) continue;
            r.c[i + j] = R.add(r.c[i + j], R.mul(a.c[i], b.c[j]));
        }
    }
    return r;
}

OSeries os_compose(const OSeries& f, const OSeries& g) {
    const ORing& R = *f.R;
    if (!R.is_zero(g.c[0])) throw std::domain_error("composition needs val(g) >= 1");
    long N = std::min(f.N, g.N);
    OSeries r = os_zero(R, N);
    r.lost = std::max(f.lost, g.lost);
    for (long j = static_cast<long>(f.N) - 1; j >= 0; --j) {
        r = os_mul(r, g);
        r.c[0] = R.add(r.c[0], f.c[j]);
        r.lost = std::max(r.lost, std::max(f.lost, g.lost));
    }
    return r;
}

bool os_eq(const OSeries& a, const OSeries& b) {
    const ORing& R = *a.R;
    long N = std::min(a.N, b.N);
    for (long j = 0; j < N; ++j)
        if (!R.eq(a.c[j], b.c[j])) return false;
    return true;
}

TruncLaurent os_mod_pi(const OSeries& s, const GaloisField& F) {
    if (s.effective_prec() < 1) throw PrecisionError("no pi-adic digits left");
    const ORing& R = *s.R;
    std::vector<Fq> cs(s.N, F.zero());
    for (long j = 0; j < s.N; ++j) cs[j] = R.residue(s.c[j], F);
    return tl_from_coeffs(F, 0, cs, s.N);
}

OSeries lt_mult_series(const ORing& R, const OElem& a, long N) {
    long q = R.q_res();
    long headroom = R.ramified ? R.e * R.K : R.K;
    if (headroom < N + 2) throw PrecisionError("lt_mult_series needs K >= N + 2");
    if (!R.is_unit(a) && !R.eq(a, R.pi()))
        throw std::invalid_argument("a must be a unit or pi");

    OSeries F = os_zero(R, N);
    if (R.eq(a, R.pi())) { // [pi] = phi
        if (N > 1) F.c[1] = R.pi();
        if (N > q) F.c[q] = R.one();
        return F;
    }

    // binomial table C(j,k) mod p^K
    long rows = std::max(N, q + 1);
    std::vector<std::vector<mpz_class>> C(rows);
    for (long j = 0; j < rows; ++j) {
        C[j].assign(j + 1, 0);
        C[j][0] = 1;
        for (long k = 1; k <= j; ++k)
            C[j][k] = ((k <= j - 1 ? C[j - 1][k] : mpz_class(0)) + C[j - 1][k - 1]) % R.pK;
    }
    std::vector<OElem> pi_pows(N + 1, R.one());
    for (long i = 1; i <= N; ++i) pi_pows[i] = R.mul(pi_pows[i - 1], R.pi());

    // running powers F^1 .. F^q, updated incrementally as coefficients appear
    std::vector<OSeries> P(q + 1, os_zero(R, N));
    auto append_coeff = [&](long r, const OElem& cr) {
        F.c[r] = cr;
        if (R.is_zero(cr)) return;
        // delta contributions with old powers, high exponents first
        std::vector<OElem> d(q + 1, R.one()); // cr^i
        for (long i = 1; i <= q; ++i) d[i] = R.mul(d[i - 1], cr);
        for (long m = q; m >= 1; --m) {
            for (long i = 1; i <= m; ++i) {
                long base_deg = r * i;
                if (base_deg >= N) break;
                OElem scale = R.mul_int(d[i], C[m][i]);
                if (i == m) {
                    long deg = r * m;
                    if (deg < N) P[m].c[deg] = R.add(P[m].c[deg], scale);
                } else {
                    const OSeries& low = P[m - i];
                    for (long j = 0; j + base_deg < N; ++j) {
                        if (R.is_zero(low.c[j])) continue;
                        P[m].c[j + base_deg] = R.add(P[m].c[j + base_deg], R.mul(scale, low.c[j]));
                    }
                }
            }
        }
    };

    if (N > 1) append_coeff(1, a);
    long lost = 0;
    for (long r = 2; r < N; ++r) {
        // c_r (pi^r - pi) = [F^q]_r - sum_{j<r} c_j C(j,k) pi^{j-k},  k = (r-j)/(q-1)
        OElem rhs = P[q].c[r];
        for (long j = 1; j < r; ++j) {
            if ((r - j) % (q - 1) != 0) continue;
            long k = (r - j) / (q - 1);
            if (k > j) continue;
            OElem term = R.mul(F.c[j], R.mul_int(pi_pows[j - k], C[j][k]));
            rhs = R.sub(rhs, term);
        }
        // divide by pi (exact) and by the unit pi^{r-1} - 1
        OElem num = R.div_by_pi(rhs);
        ++lost;
        if (headroom - lost < 1) throw PrecisionError("lt recursion exhausted headroom");
        OElem unit = R.sub(R.pi_pow(r - 1), R.one());
        append_coeff(r, R.mul(num, R.inv_unit(unit)));
    }
    F.lost = lost;
    return F;
}

TruncLaurent fbar(const ORing& R, const OElem& u, long N, const GaloisField& F) {
    if (!R.is_unit(u)) throw std::invalid_argument("fbar needs a unit");
    OSeries lu = lt_mult_series(R, u, N + 1);
    TruncLaurent red = os_mod_pi(lu, F); // ubar t + ...
    Fq ubar = R.residue(u, F);
    TruncLaurent t = tl_monomial(F, F.one(), 1);
    TruncLaurent r = tl_mul(tl_scale(t, ubar), tl_inv(red));
    return tl_truncate(r, N);
}

} // namespace qlang
