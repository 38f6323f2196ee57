#include "qlang/characters.hpp"

#include <algorithm>
#include <sstream>

namespace qlang {

namespace {
long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}
} // namespace

GaloisCharacter char_make(const Context& C, long a, Fq lambda) {
    if (lambda.is_zero()) throw std::invalid_argument("unramified scalar must be nonzero");
    return {C.pp.mod_q1(a), lambda};
}

GaloisCharacter char_mul(const Context& C, const GaloisCharacter& x, const GaloisCharacter& y) {
    return {C.pp.mod_q1(x.a + y.a), C.amb->mul(x.lambda, y.lambda)};
}

GaloisCharacter char_inv(const Context& C, const GaloisCharacter& x) {
    return {C.pp.mod_q1(-x.a), C.amb->inv(x.lambda)};
}

SemisimpleRep rep_split(const Context& C, const GaloisCharacter& c1, const GaloisCharacter& c2) {
    SemisimpleRep r;
    r.irred = false;
    r.chi1 = c1;
    r.chi2 = c2;
    if (r.chi2 < r.chi1) std::swap(r.chi1, r.chi2);
    r.lambda = C.amb->zero();
    return r;
}

bool is_q_primitive(const PrimePower& pp, long h, long n) {
    long M = 1;
    for (long i = 0; i < n; ++i) M *= pp.q;
    M -= 1;
    long x = mod(h, M);
    if (x < 1 || x > M - 1) throw std::invalid_argument("h out of range");
    long y = x;
    for (long d = 1; d < n; ++d) {
        y = mod(y * pp.q, M);
        if (y == x) return false;
    }
    return true;
}

SemisimpleRep rep_irred(const Context& C, long h, long s, Fq lambda) {
    if (lambda.is_zero()) throw std::invalid_argument("lambda must be nonzero");
    const long q = C.q(), M = q * q - 1;
    long A = mod(h + s * (q + 1), M);
    if (A % (q + 1) == 0) throw std::invalid_argument("exponent not q-primitive");
    long B = mod(A * q, M);
    long best = -1;
    for (long X : {std::min(A, B), std::max(A, B)}) {
        long hx = X % (q + 1);
        if (hx >= 1 && hx <= q - 1) {
            best = X;
            break;
        }
    }
    if (best < 0) throw std::logic_error("no valid normal form");
    SemisimpleRep r;
    r.irred = true;
    r.h = best % (q + 1);
    r.s = (best - r.h) / (q + 1);
    r.lambda = lambda;
    r.chi1 = r.chi2 = GaloisCharacter{0, C.amb->one()};
    return r;
}

long irred_level2_exponent(const Context& C, const SemisimpleRep& r) {
    if (!r.irred) throw std::invalid_argument("not irreducible");
    const long q = C.q();
    return mod(r.h + r.s * (q + 1), q * q - 1);
}

GaloisCharacter det_rep(const Context& C, const SemisimpleRep& r) {
    if (r.irred)
        return char_make(C, r.h + 2 * r.s, C.amb->mul(r.lambda, r.lambda));
    return char_mul(C, r.chi1, r.chi2);
}

bool iso_equal(const Context& C, const SemisimpleRep& a, const SemisimpleRep& b) {
    if (a.irred != b.irred) return false;
    if (!a.irred) return a.chi1 == b.chi1 && a.chi2 == b.chi2;
    return a.h == b.h && a.s == b.s &&
           C.amb->mul(a.lambda, a.lambda) == C.amb->mul(b.lambda, b.lambda);
}

SemisimpleRep twist(const Context& C, const SemisimpleRep& r, const GaloisCharacter& eta) {
    if (r.irred) return rep_irred(C, r.h, r.s + eta.a, C.amb->mul(r.lambda, eta.lambda));
    return rep_split(C, char_mul(C, r.chi1, eta), char_mul(C, r.chi2, eta));
}

InertialType restrict_to_inertia(const Context& C, const SemisimpleRep& r) {
    if (r.irred) return type_niveau2(C.pp, irred_level2_exponent(C, r));
    return type_niveau1(C.pp, r.chi1.a, r.chi2.a);
}

RepKey rep_iso_key(const Context& C, const SemisimpleRep& r) {
    RepKey k;
    if (r.irred) {
        k.kind = 1;
        k.k1 = r.h;
        k.k2 = r.s;
        k.k3 = C.amb->mul(r.lambda, r.lambda).lg;
    } else {
        k.kind = 0;
        k.k1 = r.chi1.a;
        k.k2 = r.chi1.lambda.lg;
        k.k3 = r.chi2.a;
        k.k4 = r.chi2.lambda.lg;
    }
    return k;
}

std::string rep_to_string(const Context& C, const SemisimpleRep& r) {
    std::ostringstream os;
    const GaloisField& F = *C.amb;
    if (r.irred) {
        os << "ind(w2^" << r.h << ")";
        if (r.s) os << "(x)w^" << r.s;
        if (!(r.lambda == F.one())) os << "(x)unr(" << F.to_string(r.lambda) << ")";
    } else {
        auto one_char = [&](const GaloisCharacter& c) {
            std::ostringstream o2;
            o2 << "w^" << c.a << "unr(" << F.to_string(c.lambda) << ")";
            return o2.str();
        };
        os << one_char(r.chi1) << " (+) " << one_char(r.chi2);
    }
    return os.str();
}

} // namespace qlang
