#include "qlang/types_weights.hpp"

#include <algorithm>

namespace qlang {

namespace {
long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}
} // namespace

InertialType type_niveau1(const PrimePower& pp, long a, long b) {
    a = pp.mod_q1(a);
    b = pp.mod_q1(b);
    InertialType t;
    t.niveau = 1;
    t.a = std::min(a, b);
    t.b = std::max(a, b);
    return t;
}

InertialType type_niveau2(const PrimePower& pp, long exponent) {
    long M = pp.q * pp.q - 1;
    long A = mod(exponent, M);
    if (A % (pp.q + 1) == 0) throw std::invalid_argument("exponent not q-primitive at level 2");
    long B = mod(A * pp.q, M);
    InertialType t;
    t.niveau = 2;
    t.h2 = std::min(A, B);
    return t;
}

long type_det_exponent(const PrimePower& pp, const InertialType& t) {
    if (t.niveau == 1) return pp.mod_q1(t.a + t.b);
    return pp.mod_q1(t.h2); // omega_{2f}^{A(q+1)} = omega_f^A
}

std::vector<InertialType> enumerate_types(const PrimePower& pp, long d, int niveau) {
    const long q = pp.q;
    d = pp.mod_q1(d);
    long n = pp.mod_q1(d - 1);
    bool even_case = pp.n_even(n);
    // twist exponent moving the basic table to determinant omega^d:
    // even base has det omega^1, odd base det omega^0
    long delta = even_case ? (d == 0 ? 0 : (d - 1) / 2) : d / 2;
    if (even_case && d == 0) throw std::logic_error("even n cannot give even determinant");
    std::vector<InertialType> out;
    if (niveau == 1) {
        if (even_case) {
            for (long r = 0; r <= q - 3; r += 2) {
                long s = pp.mod_q1(-(r / 2) + delta);
                out.push_back(type_niveau1(pp, r + 1 + s, s));
            }
        } else {
            for (long r = -1; r <= q - 2; r += 2) {
                long s = pp.mod_q1(-((r + 1) / 2) + delta);
                out.push_back(type_niveau1(pp, r + 1 + s, s));
            }
        }
    } else if (niveau == 2) {
        long M = q * q - 1;
        if (even_case) {
            // closed points of the even chain: A_i = 1 - i(q-1), i = 0..(q-1)/2
            for (long i = 0; i <= (q - 1) / 2; ++i)
                out.push_back(type_niveau2(pp, mod(1 - i * (q - 1) + delta * (q + 1), M)));
        } else {
            // nodes of the odd chain: A_i = -i(q-1), i = 1..(q-1)/2
            for (long i = 1; i <= (q - 1) / 2; ++i)
                out.push_back(type_niveau2(pp, mod(-i * (q - 1) + delta * (q + 1), M)));
        }
    } else {
        throw std::invalid_argument("niveau must be 1 or 2");
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<InertialType> enumerate_types_direct(const PrimePower& pp, long d, int niveau) {
    const long q = pp.q;
    d = pp.mod_q1(d);
    std::vector<InertialType> out;
    if (niveau == 1) {
        for (long a = 0; a <= q - 2; ++a) {
            long b = pp.mod_q1(d - a);
            if (a <= b) out.push_back(type_niveau1(pp, a, b));
        }
    } else {
        long M = q * q - 1;
        for (long A = 1; A < M; ++A) {
            if (A % (q + 1) == 0) continue;
            if (pp.mod_q1(A) != d) continue;
            InertialType t = type_niveau2(pp, A);
            if (t.h2 == A) out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::array<long, 2> hw(const PrimePower& pp, const Weight& w) {
    return {pp.mod_q1(w.r + w.s), pp.mod_q1(w.s)};
}

WeightDigits weight_to_digits(const PrimePower& pp, const Weight& w) {
    WeightDigits d;
    d.s = w.s;
    long r = w.r;
    for (long i = 0; i < pp.f; ++i) {
        d.r.push_back(r % pp.p);
        r /= pp.p;
    }
    return d;
}

Weight digits_to_weight(const PrimePower& pp, const WeightDigits& d) {
    long r = 0, mult = 1;
    for (long i = 0; i < pp.f; ++i) {
        r += d.r[i] * mult;
        mult *= pp.p;
    }
    return {r, d.s};
}

TypePresentation present_niveau2(const PrimePower& pp, long exponent) {
    const long q = pp.q, M = q * q - 1;
    long A = mod(exponent, M);
    TypePresentation pr;
    long rem = A % (q + 1);
    if (rem == 0) throw std::invalid_argument("not niveau 2");
    if (rem == q) {
        A = mod(A * q, M); // other orbit representative has residue 1..q-1
        rem = A % (q + 1);
    }
    pr.r = rem - 1; // r+1 = rem in [1, q-1] -> r in [0, q-2]; rem may be ... r = rem-1
    pr.s = pp.mod_q1((A - rem) / (q + 1));
    // digits of r+1 = sum (r_i + 1) p^i needs every base-p digit >= 1
    long x = pr.r + 1;
    pr.expandable = true;
    for (long i = 0; i < pp.f; ++i) {
        long di = x % pp.p;
        x /= pp.p;
        if (di == 0) pr.expandable = false;
        pr.ri.push_back(di - 1);
    }
    if (pr.expandable) {
        pr.generic = pr.ri[0] >= 1 && pr.ri[0] <= pp.p - 2;
        for (long i = 1; i < pp.f; ++i)
            if (pr.ri[i] < 0 || pr.ri[i] > pp.p - 3) pr.generic = false;
    }
    return pr;
}

bool is_generic(const PrimePower& pp, const InertialType& t) {
    if (t.niveau != 2) return false;
    const long q = pp.q, M = q * q - 1;
    TypePresentation a = present_niveau2(pp, t.h2);
    TypePresentation b = present_niveau2(pp, mod(t.h2 * q, M));
    if ((a.expandable && a.generic) != (b.expandable && b.generic))
        throw std::logic_error("genericity not constant on the orbit");
    return a.expandable && a.generic;
}

std::vector<LambdaTuple> lambda_candidates_i_ii(long p, long f, bool cyclic) {
    std::vector<std::vector<AffineFn>> choices(f);
    choices[0] = {{1, 0}, {1, -1}, {-1, p - 2}, {-1, p - 1}};
    for (long i = 1; i < f; ++i) choices[i] = {{1, 0}, {1, 1}, {-1, p - 2}, {-1, p - 3}};

    auto hyp = [&](long i, const AffineFn& l) { // hypothesis set of condition (ii)
        if (i == 0) return l == AffineFn{1, 0} || l == AffineFn{1, -1};
        return l == AffineFn{1, 0} || l == AffineFn{1, 1};
    };
    auto concl = [&](const AffineFn& l) { return l == AffineFn{1, 0} || l == AffineFn{-1, p - 2}; };

    std::vector<LambdaTuple> out;
    std::vector<size_t> idx(f, 0);
    while (true) {
        LambdaTuple t(f);
        for (long i = 0; i < f; ++i) t[i] = choices[i][idx[i]];
        bool ok = true;
        long last = cyclic ? f - 1 : f - 2;
        for (long i = 0; i <= last && ok; ++i) {
            long j = (i + 1) % f;
            if (hyp(i, t[i]) && !concl(t[j])) ok = false;
        }
        if (f == 1 && cyclic && hyp(0, t[0]) && !concl(t[0])) ok = false;
        if (ok) out.push_back(t);
        long k = f - 1;
        while (k >= 0 && ++idx[k] == choices[k].size()) idx[k--] = 0;
        if (k < 0) break;
    }
    return out;
}

bool pattern_matched(const std::vector<AffineFn>& pattern, long p, long f, bool cyclic) {
    for (const auto& cand : lambda_candidates_i_ii(p, f, cyclic))
        if (std::equal(cand.begin(), cand.end(), pattern.begin(), pattern.end(),
                       [](const AffineFn& a, const AffineFn& b) { return a == b; }))
            return true;
    return false;
}

bool not_in_w_tau_component_weight(const PrimePower& pp, const InertialType& tau, bool cyclic) {
    if (pp.f <= 1) throw std::invalid_argument("requires f > 1");
    if (!is_generic(pp, tau)) throw std::invalid_argument("requires a generic type");
    // F(r) has digits (r_0, r_1+1, ..., r_{f-1}+1); as functions of the digit
    // variables the pattern is (x_0, x_1+1, ..., x_{f-1}+1)
    std::vector<AffineFn> pattern(pp.f, AffineFn{1, 1});
    pattern[0] = {1, 0};
    return !pattern_matched(pattern, pp.p, pp.f, cyclic);
}

bool membership_weight_matched(const PrimePower& pp, const InertialType& tau, bool cyclic) {
    if (!is_generic(pp, tau)) throw std::invalid_argument("requires a generic type");
    std::vector<AffineFn> pattern(pp.f, AffineFn{1, 0});
    return pattern_matched(pattern, pp.p, pp.f, cyclic);
}

} // namespace qlang
