#include "qlang/xscheme.hpp"

#include <sstream>

namespace qlang {

long chain_length(const PrimePower& pp, long n) {
    return pp.n_even(n) ? (pp.q - 1) / 2 : (pp.q + 1) / 2;
}

long eta_exponent(const PrimePower& pp, long n) {
    long d = pp.d_of(n); // normalized to [0, q-2], trivial at both base fibers
    return pp.n_even(n) ? (d - 1) / 2 : d / 2;
}

SqrtChoice sqrt_canonical(const Context& C, Fq z2) {
    if (z2.is_zero() || !C.in_qm(z2)) throw std::invalid_argument("z2 must lie in F_{q^m}^x");
    return {C.amb->sqrt_subfield(z2, C.deg_qm())};
}

namespace {
void check_fiber(const Context& C, long n, Fq z2) {
    if (n < 0 || n > C.q() - 2) throw std::invalid_argument("n out of N_q");
    if (z2.is_zero() || !C.in_qm(z2)) throw std::invalid_argument("z2 must lie in F_{q^m}^x");
}
} // namespace

XPoint x_smooth(const Context& C, long n, Fq z2, long i, Fq x) {
    check_fiber(C, n, z2);
    long len = chain_length(C.pp, n);
    bool even = C.pp.n_even(n);
    long lo = even ? 0 : 1;
    long hi = even ? len - 1 : len - 2;
    if (i < lo || i > hi) throw std::invalid_argument("no such interior component");
    if (x.is_zero()) throw std::invalid_argument("smooth coordinate must be nonzero");
    return {n, z2, XKind::Smooth, i, x};
}

XPoint x_node(const Context& C, long n, Fq z2, long i) {
    check_fiber(C, n, z2);
    long len = chain_length(C.pp, n);
    if (i < 1 || i > len - 1) throw std::invalid_argument("no such node");
    return {n, z2, XKind::Node, i, C.amb->zero()};
}

XPoint x_origin_end(const Context& C, long n, Fq z2) {
    check_fiber(C, n, z2);
    if (!C.pp.n_even(n)) throw std::invalid_argument("origin end exists on even chains only");
    return {n, z2, XKind::OriginEnd, 0, C.amb->zero()};
}

XPoint x_infinity_end(const Context& C, long n, Fq z2) {
    check_fiber(C, n, z2);
    if (!C.pp.n_even(n)) throw std::invalid_argument("infinity end exists on even chains only");
    return {n, z2, XKind::InfinityEnd, chain_length(C.pp, n) - 1, C.amb->zero()};
}

XPoint x_outer(const Context& C, long n, Fq z2, bool left, Fq t) {
    check_fiber(C, n, z2);
    if (C.pp.n_even(n)) throw std::invalid_argument("outer components exist on odd chains only");
    if (!t.is_zero() && !C.in_qm(t)) throw std::invalid_argument("t must lie in F_{q^m}");
    long i = left ? 0 : chain_length(C.pp, n) - 1;
    return {n, z2, left ? XKind::OuterLeft : XKind::OuterRight, i, t};
}

bool x_is_closed_orbit(const XPoint& pt) {
    return pt.kind == XKind::Node || pt.kind == XKind::OriginEnd || pt.kind == XKind::InfinityEnd;
}

std::pair<Fq, Fq> solve_z_plus_zinv(const Context& C, Fq t) {
    const GaloisField& F = *C.amb;
    // z^2 - t z + 1 = 0
    Fq disc = F.sub(F.mul(t, t), F.from_int(4));
    Fq sd = C.amb->sqrt_subfield(disc.is_zero() ? F.zero() : disc, C.deg_qm());
    if (disc.is_zero()) sd = F.zero();
    Fq inv2 = F.inv(F.from_int(2));
    Fq z = F.mul(F.add(t, sd), inv2);
    if (z.is_zero()) throw std::logic_error("degenerate root");
    return {z, F.inv(z)};
}

SemisimpleRep iota(const Context& C, const XPoint& pt, const SqrtChoice& sq) {
    const GaloisField& F = *C.amb;
    if (F.mul(sq.root, sq.root) != pt.z2) throw std::invalid_argument("square root mismatch");
    const long q = C.q();
    bool even = C.pp.n_even(pt.n);
    GaloisCharacter eta = char_make(C, eta_exponent(C.pp, pt.n), sq.root);
    Fq one = F.one();

    SemisimpleRep base;
    if (even) {
        switch (pt.kind) {
        case XKind::Smooth: {
            long r = 2 * pt.i;
            long s = C.pp.mod_q1(-(r / 2));
            base = rep_split(C, char_make(C, r + 1 + s, pt.coord),
                             char_make(C, s, F.inv(pt.coord)));
            break;
        }
        case XKind::OriginEnd:
            base = rep_irred(C, 1, 0, one);
            break;
        case XKind::Node: {
            long r = 2 * pt.i;
            base = rep_irred(C, r + 1, C.pp.mod_q1(-pt.i), one);
            break;
        }
        case XKind::InfinityEnd:
            base = rep_irred(C, q, C.pp.mod_q1(-(q - 1) / 2), one);
            break;
        default:
            throw std::invalid_argument("position invalid on an even chain");
        }
    } else {
        switch (pt.kind) {
        case XKind::Smooth: {
            long j = pt.i; // r = 2j - 1
            base = rep_split(C, char_make(C, j, pt.coord),
                             char_make(C, C.pp.mod_q1(-j), F.inv(pt.coord)));
            break;
        }
        case XKind::Node:
            base = rep_irred(C, 2 * pt.i, C.pp.mod_q1(-pt.i), one);
            break;
        case XKind::OuterLeft: {
            auto [z, zi] = solve_z_plus_zinv(C, pt.coord);
            base = rep_split(C, char_make(C, 0, z), char_make(C, 0, zi));
            break;
        }
        case XKind::OuterRight: {
            auto [z, zi] = solve_z_plus_zinv(C, pt.coord);
            long e = (q - 1) / 2;
            base = rep_split(C, char_make(C, e, z), char_make(C, e, zi));
            break;
        }
        default:
            throw std::invalid_argument("position invalid on an odd chain");
        }
    }
    return twist(C, base, eta);
}

SemisimpleRep iota(const Context& C, const XPoint& pt) {
    return iota(C, pt, sqrt_canonical(C, pt.z2));
}

XPoint twist_action(const Context& C, long k, Fq z, const XPoint& pt) {
    if (z.is_zero()) throw std::invalid_argument("z must be invertible");
    XPoint r = pt;
    r.n = C.pp.mod_q1(pt.n + 2 * k);
    r.z2 = C.amb->mul(pt.z2, C.amb->mul(z, z));
    return r;
}

InertialType orbit_to_type(const Context& C, const XPoint& pt) {
    return restrict_to_inertia(C, iota(C, pt));
}

std::vector<XPoint> x_closed_points(const Context& C, long n, Fq z2) {
    std::vector<XPoint> out;
    long len = chain_length(C.pp, n);
    if (C.pp.n_even(n)) {
        out.push_back(x_origin_end(C, n, z2));
        for (long i = 1; i <= len - 1; ++i) out.push_back(x_node(C, n, z2, i));
        out.push_back(x_infinity_end(C, n, z2));
    } else {
        for (long i = 1; i <= len - 1; ++i) out.push_back(x_node(C, n, z2, i));
    }
    return out;
}

std::vector<XPoint> enumerate_xpoints(const Context& C, long n, Fq z2) {
    const GaloisField& F = *C.amb;
    std::vector<XPoint> out = x_closed_points(C, n, z2);
    long len = chain_length(C.pp, n);
    bool even = C.pp.n_even(n);
    long lo = even ? 0 : 1;
    long hi = even ? len - 1 : len - 2;
    long qm = F.sub_order(C.deg_qm()); // |F_{q^m}^x|
    long step = F.order() / qm;
    for (long i = lo; i <= hi; ++i)
        for (long k = 0; k < qm; ++k)
            out.push_back(x_smooth(C, n, z2, i, F.from_log(k * step)));
    if (!even) {
        for (bool left : {true, false}) {
            out.push_back(x_outer(C, n, z2, left, F.zero()));
            for (long k = 0; k < qm; ++k)
                out.push_back(x_outer(C, n, z2, left, F.from_log(k * step)));
        }
    }
    return out;
}

XPoint iota_inverse(const Context& C, const SemisimpleRep& rho, const SqrtChoice& sq) {
    const GaloisField& F = *C.amb;
    const long q = C.q();
    GaloisCharacter det = det_rep(C, rho);
    long n = C.pp.mod_q1(det.a - 1);
    Fq z2 = det.lambda;
    if (!C.in_qm(z2)) throw std::invalid_argument("determinant scalar outside F_{q^m}");
    if (F.mul(sq.root, sq.root) != z2) throw std::invalid_argument("square root mismatch");
    GaloisCharacter eta_inv =
        char_inv(C, char_make(C, eta_exponent(C.pp, n), sq.root));
    SemisimpleRep base = twist(C, rho, eta_inv);
    bool even = C.pp.n_even(n);
    long len = chain_length(C.pp, n);

    if (base.irred) {
        for (const XPoint& pt : x_closed_points(C, n, z2))
            if (iso_equal(C, iota(C, pt, sq), rho)) return pt;
        throw std::logic_error("irreducible class missed by the closed points");
    }

    const GaloisCharacter &c1 = base.chi1, &c2 = base.chi2;
    if (c1.a == c2.a) {
        if (even) throw std::invalid_argument("equal-exponent split class on an even fiber");
        if (F.mul(c1.lambda, c2.lambda) != F.one())
            throw std::invalid_argument("split scalars do not multiply to 1 after untwisting");
        Fq t = F.add(c1.lambda, c2.lambda);
        if (!t.is_zero() && !C.in_qm(t)) throw std::invalid_argument("trace outside F_{q^m}");
        if (c1.a == 0) return x_outer(C, n, z2, true, t);
        if (c1.a == (q - 1) / 2) return x_outer(C, n, z2, false, t);
        throw std::invalid_argument("equal exponents match no outer component");
    }
    for (int ord = 0; ord < 2; ++ord) {
        const GaloisCharacter& hi_c = ord == 0 ? c1 : c2;
        const GaloisCharacter& lo_c = ord == 0 ? c2 : c1;
        long rp1 = C.pp.mod_q1(hi_c.a - lo_c.a); // candidate r+1
        long r = rp1 - 1;
        if (even) {
            if (r % 2 != 0 || r < 0 || r > q - 3) continue;
            if (C.pp.mod_q1(-(r / 2)) != lo_c.a) continue;
            if (F.mul(hi_c.lambda, lo_c.lambda) != F.one()) continue;
            if (!C.in_qm(hi_c.lambda)) continue;
            return x_smooth(C, n, z2, r / 2, hi_c.lambda);
        }
        if (r % 2 == 0 || r < 1 || r > q - 4) continue;
        long j = (r + 1) / 2;
        if (C.pp.mod_q1(-j) != lo_c.a) continue;
        if (F.mul(hi_c.lambda, lo_c.lambda) != F.one()) continue;
        if (!C.in_qm(hi_c.lambda)) continue;
        return x_smooth(C, n, z2, j, hi_c.lambda);
    }
    (void)len;
    throw std::invalid_argument("no chain position matches the split class");
}

XPoint iota_inverse(const Context& C, const SemisimpleRep& rho) {
    GaloisCharacter det = det_rep(C, rho);
    return iota_inverse(C, rho, sqrt_canonical(C, det.lambda));
}

std::string xpoint_to_string(const Context& C, const XPoint& pt) {
    std::ostringstream os;
    os << "X[n=" << pt.n << ",z2=" << C.amb->to_string(pt.z2) << ",";
    switch (pt.kind) {
    case XKind::Smooth:
        os << "C" << pt.i << ":[" << C.amb->to_string(pt.coord) << ":1]";
        break;
    case XKind::Node: os << "node" << pt.i; break;
    case XKind::OriginEnd: os << "origin"; break;
    case XKind::InfinityEnd: os << "infinity"; break;
    case XKind::OuterLeft: os << "outerL:t=" << C.amb->to_string(pt.coord); break;
    case XKind::OuterRight: os << "outerR:t=" << C.amb->to_string(pt.coord); break;
    }
    os << "]";
    return os.str();
}

} // namespace qlang
