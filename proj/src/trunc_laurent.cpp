#include "qlang/trunc_laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qlang {

namespace {
void check_same_field(const TruncLaurent& a, const TruncLaurent& b) {
    if (a.F != b.F) throw std::invalid_argument("mixed coefficient fields");
}
long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }
} // namespace

bool TruncLaurent::known_zero() const {
    for (Fq x : c)
        if (!x.is_zero()) return false;
    return true;
}

Fq TruncLaurent::coeff(long j) const {
    if (j >= bound) throw PrecisionError("coefficient above precision bound");
    if (j < v || j - v >= static_cast<long>(c.size())) return F->zero();
    return c[j - v];
}

long TruncLaurent::valuation() const {
    for (size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) return v + static_cast<long>(i);
    throw PrecisionError("valuation of (apparently) zero series");
}

void TruncLaurent::normalize() {
    size_t k = 0;
    while (k < c.size() && c[k].is_zero()) ++k;
    if (k > 0) {
        c.erase(c.begin(), c.begin() + k);
        v += static_cast<long>(k);
    }
    size_t tail = c.size();
    while (tail > 0 && c[tail - 1].is_zero()) --tail;
    if (bound == TruncLaurent::EXACT) c.resize(tail);
    if (c.empty()) v = std::min(v, bound);
}

TruncLaurent tl_zero(const GaloisField& F, long bound) { return {&F, bound, bound, {}}; }

TruncLaurent tl_const(const GaloisField& F, Fq a) { return tl_monomial(F, a, 0); }

TruncLaurent tl_monomial(const GaloisField& F, Fq a, long deg) {
    if (a.is_zero()) return tl_zero(F);
    return {&F, deg, TruncLaurent::EXACT, {a}};
}

TruncLaurent tl_from_coeffs(const GaloisField& F, long v, const std::vector<Fq>& cs, long bound) {
    TruncLaurent r{&F, v, bound, cs};
    if (bound != TruncLaurent::EXACT && v + static_cast<long>(cs.size()) > bound)
        r.c.resize(bound - v);
    r.normalize();
    return r;
}

TruncLaurent tl_truncate(const TruncLaurent& a, long new_bound) {
    TruncLaurent r = a;
    if (new_bound < r.bound) {
        r.bound = new_bound;
        if (r.v >= new_bound) {
            r.v = new_bound;
            r.c.clear();
        } else if (r.v + static_cast<long>(r.c.size()) > new_bound) {
            r.c.resize(new_bound - r.v);
        }
    }
    return r;
}

TruncLaurent tl_add(const TruncLaurent& a, const TruncLaurent& b) {
    check_same_field(a, b);
    long bound = std::min(a.bound, b.bound);
    long lo = std::min(a.c.empty() ? bound : a.v, b.c.empty() ? bound : b.v);
    long ahi = a.c.empty() ? lo : a.v + static_cast<long>(a.c.size());
    long bhi = b.c.empty() ? lo : b.v + static_cast<long>(b.c.size());
    long hi = std::min(bound, std::max(ahi, bhi));
    TruncLaurent r{a.F, lo, bound, {}};
    if (hi > lo) {
        r.c.assign(hi - lo, a.F->zero());
        for (long j = lo; j < hi; ++j) {
            Fq x = (j >= a.v && j - a.v < static_cast<long>(a.c.size())) ? a.c[j - a.v] : a.F->zero();
            Fq y = (j >= b.v && j - b.v < static_cast<long>(b.c.size())) ? b.c[j - b.v] : b.F->zero();
            r.c[j - lo] = a.F->add(x, y);
        }
    }
    r.normalize();
    return r;
}

TruncLaurent tl_neg(const TruncLaurent& a) {
    TruncLaurent r = a;
    for (Fq& x : r.c) x = a.F->neg(x);
    return r;
}

TruncLaurent tl_sub(const TruncLaurent& a, const TruncLaurent& b) { return tl_add(a, tl_neg(b)); }

TruncLaurent tl_scale(const TruncLaurent& a, Fq s) {
    if (s.is_zero()) return tl_zero(*a.F, a.bound);
    TruncLaurent r = a;
    for (Fq& x : r.c) x = a.F->mul(x, s);
    return r;
}

TruncLaurent tl_shift(const TruncLaurent& a, long k) {
    TruncLaurent r = a;
    r.v += k;
    if (r.bound != TruncLaurent::EXACT) r.bound += k;
    return r;
}

TruncLaurent tl_mul(const TruncLaurent& a, const TruncLaurent& b) {
    check_same_field(a, b);
    const long EXACT = TruncLaurent::EXACT;
    // a genuine zero factor gives a genuine zero
    if ((a.c.empty() && a.bound == EXACT) || (b.c.empty() && b.bound == EXACT))
        return tl_zero(*a.F, EXACT);
    auto lowv = [](const TruncLaurent& x) { return x.c.empty() ? x.bound : x.v; };
    long bound = EXACT;
    if (b.bound != EXACT) bound = std::min(bound, lowv(a) + b.bound);
    if (a.bound != EXACT) bound = std::min(bound, lowv(b) + a.bound);
    if (bound > EXACT) bound = EXACT;
    if (a.c.empty() || b.c.empty()) return tl_zero(*a.F, bound);
    long lo = a.v + b.v;
    long hi = std::min(bound, lo + static_cast<long>(a.c.size() + b.c.size()) - 1);
    TruncLaurent r{a.F, lo, bound, {}};
    if (hi > lo) {
        r.c.assign(hi - lo, a.F->zero());
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i].is_zero()) continue;
            for (size_t j = 0; j < b.c.size(); ++j) {
                long d = static_cast<long>(i + j);
                if (lo + d >= hi) break;
                r.c[d] = a.F->add(r.c[d], a.F->mul(a.c[i], b.c[j]));
            }
        }
    }
    r.normalize();
    return r;
}

TruncLaurent tl_inv(const TruncLaurent& a) {
    if (a.c.empty() || a.c[0].is_zero())
        throw std::domain_error("inverse needs a unit leading coefficient");
    const GaloisField& F = *a.F;
    long n = a.bound == TruncLaurent::EXACT ? static_cast<long>(a.c.size()) : a.prec();
    // invert the unit part u = a * t^{-v}
    std::vector<Fq> u(a.c);
    u.resize(n, F.zero());
    std::vector<Fq> r(n, F.zero());
    Fq lead_inv = F.inv(u[0]);
    r[0] = lead_inv;
    for (long k = 1; k < n; ++k) {
        Fq s = F.zero();
        for (long i = 1; i <= k; ++i) s = F.add(s, F.mul(u[i], r[k - i]));
        r[k] = F.neg(F.mul(lead_inv, s));
    }
    // a unit monomial inverts exactly; otherwise only n coefficients are known
    long bound;
    if (a.bound == TruncLaurent::EXACT)
        bound = a.c.size() == 1 ? TruncLaurent::EXACT : n - a.v;
    else
        bound = a.bound - 2 * a.v;
    return tl_from_coeffs(F, -a.v, r, bound);
}

TruncLaurent tl_pow(const TruncLaurent& a, long e) {
    const GaloisField& F = *a.F;
    if (e < 0) return tl_pow(tl_inv(a), -e);
    TruncLaurent r = tl_const(F, F.one());
    TruncLaurent base = a;
    while (e > 0) {
        if (e & 1) r = tl_mul(r, base);
        e >>= 1;
        if (e > 0) base = tl_mul(base, base);
    }
    return r;
}

TruncLaurent tl_compose(const TruncLaurent& f, const TruncLaurent& g) {
    check_same_field(f, g);
    const GaloisField& F = *f.F;
    long w = g.valuation();
    if (w < 1) throw std::domain_error("composition needs val(g) >= 1");
    if (f.c.empty()) {
        long eb = f.bound == TruncLaurent::EXACT ? TruncLaurent::EXACT : f.bound * w;
        return tl_zero(F, eb);
    }
    // Horner on the polynomial part, then account for f's own tail error
    TruncLaurent res = tl_zero(F);
    for (long i = static_cast<long>(f.c.size()) - 1; i >= 0; --i) {
        res = tl_mul(res, g);
        if (!f.c[i].is_zero()) res = tl_add(res, tl_const(F, f.c[i]));
    }
    if (f.v != 0) res = tl_mul(res, tl_pow(g, f.v));
    if (f.bound != TruncLaurent::EXACT)
        res = tl_truncate(res, f.bound * w);
    return res;
}

TruncLaurent tl_subst_tq(const TruncLaurent& a, long q) {
    const GaloisField& F = *a.F;
    TruncLaurent r{&F, a.v * q,
                   a.bound == TruncLaurent::EXACT ? TruncLaurent::EXACT
                                                  : (a.bound - 1) * q + 1,
                   {}};
    if (!a.c.empty()) {
        r.c.assign((a.c.size() - 1) * q + 1, F.zero());
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i * q] = a.c[i];
    }
    r.normalize();
    return r;
}

TruncLaurent tl_psi(const TruncLaurent& a, long q) {
    const GaloisField& F = *a.F;
    long lo = ceil_div(a.v, q);
    long bound = a.bound == TruncLaurent::EXACT ? TruncLaurent::EXACT : ceil_div(a.bound, q);
    TruncLaurent r{&F, lo, bound, {}};
    long hi = std::min(bound, floor_div(a.v + static_cast<long>(a.c.size()) - 1, q) + 1);
    if (!a.c.empty() && hi > lo) {
        r.c.assign(hi - lo, F.zero());
        for (long j = lo; j < hi; ++j) r.c[j - lo] = a.coeff(q * j);
    }
    r.normalize();
    return r;
}

TruncLaurent tl_binomial_power(const TruncLaurent& w, long s_mod, long p_pow_m) {
    const GaloisField& F = *w.F;
    if (w.coeff(0) != F.one() || w.v < 0)
        throw std::domain_error("binomial power needs w in 1 + t k[[t]]");
    // the residue of s mod p^m determines w^s only below t^{p^m}
    if (w.bound > p_pow_m) throw std::domain_error("precision exceeds p^m");
    long s0 = s_mod % p_pow_m;
    if (s0 < 0) s0 += p_pow_m;
    return tl_truncate(tl_pow(w, s0), w.bound);
}

bool tl_equal(const TruncLaurent& a, const TruncLaurent& b) {
    check_same_field(a, b);
    long bound = std::min(a.bound, b.bound);
    long lo = std::min(a.c.empty() ? bound : a.v, b.c.empty() ? bound : b.v);
    long hi = bound;
    if (bound == TruncLaurent::EXACT) {
        // both series fully known: compare the stored windows
        lo = std::min(a.c.empty() ? 0 : a.v, b.c.empty() ? 0 : b.v);
        hi = std::max(a.c.empty() ? 0 : a.v + static_cast<long>(a.c.size()),
                      b.c.empty() ? 0 : b.v + static_cast<long>(b.c.size()));
    } else if (lo >= bound) {
        throw PrecisionError("empty comparison window");
    }
    for (long j = lo; j < hi; ++j)
        if (!(a.coeff(j) == b.coeff(j))) return false;
    return true;
}

bool tl_is_zero_at_prec(const TruncLaurent& a) {
    if (a.c.empty() && a.bound == TruncLaurent::EXACT) return true;
    if (a.c.empty()) return true; // known window empty or all-zero up to bound
    return a.known_zero();
}

std::string tl_to_string(const TruncLaurent& a) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        if (!first) os << " + ";
        os << a.F->to_string(a.c[i]) << "*t^" << (a.v + static_cast<long>(i));
        first = false;
    }
    if (first) os << "0";
    if (a.bound != TruncLaurent::EXACT) os << " + O(t^" << a.bound << ")";
    return os.str();
}

} // namespace qlang
