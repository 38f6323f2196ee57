#include "qlang/satake.hpp"
#include "qlang/xscheme.hpp" // eta_exponent

#include <sstream>

namespace qlang {

namespace {
void check_fiber(const Context& C, long n, Fq z2) {
    if (n < 0 || n > C.q() - 2) throw std::invalid_argument("n out of N_q");
    if (z2.is_zero() || !C.in_qm(z2)) throw std::invalid_argument("z2 must lie in F_{q^m}^x");
}

// exponent of the diag(zeta^s, zeta^s) factor entering the canonical labels;
// pinned by the basic fibers and transported so that the supersingular labels
// match the highest-weight normalization
long label_shift(const PrimePower& pp, long n) {
    long sigma = eta_exponent(pp, n);
    return pp.n_even(n) ? sigma : pp.mod_q1(sigma + (pp.q - 1) / 2);
}

// components carry the label index i (0-based on even fibers, 1-based on odd)
long comp_pos(const Context& C, long n, long i) { return C.pp.n_even(n) ? i : i - 1; }
} // namespace

std::vector<ComponentLabel> components(const Context& C, long n) {
    const long q = C.q();
    const PrimePower& pp = C.pp;
    if (n < 0 || n > q - 2) throw std::invalid_argument("n out of N_q");
    long s = label_shift(pp, n);
    std::vector<ComponentLabel> out;
    if (pp.n_even(n)) {
        for (long i = 0; i <= (q - 1) / 2; ++i) {
            ComponentLabel L;
            L.n = n;
            L.i = i;
            L.t_raw = {pp.mod_q1(i), pp.mod_q1(-i)};
            L.regular = L.t_raw[0] != L.t_raw[1];
            L.first = {pp.mod_q1(i + s), pp.mod_q1(-i + s)};
            L.second = {L.first[1], L.first[0]};
            out.push_back(L);
        }
    } else {
        for (long i = 1; i <= (q - 1) / 2; ++i) {
            ComponentLabel L;
            L.n = n;
            L.i = i;
            L.t_raw = {pp.mod_q1(i - 1 + (q - 1) / 2), pp.mod_q1(-i + (q - 1) / 2)};
            L.regular = true;
            L.first = {pp.mod_q1(L.t_raw[0] + s), pp.mod_q1(L.t_raw[1] + s)};
            L.second = {L.first[1], L.first[0]};
            out.push_back(L);
        }
    }
    return out;
}

SPoint s_regular(const Context& C, long n, Fq z2, long comp, Fq x, Fq y) {
    check_fiber(C, n, z2);
    auto comps = components(C, n);
    long pos = comp_pos(C, n, comp);
    if (pos < 0 || pos >= static_cast<long>(comps.size()))
        throw std::invalid_argument("no such component");
    if (!comps[pos].regular) throw std::invalid_argument("component is not regular");
    if (!x.is_zero() && !y.is_zero()) throw std::invalid_argument("need x*y = 0");
    SPoint s;
    s.n = n;
    s.z2 = z2;
    s.comp = comp;
    s.regular = true;
    s.x = x;
    s.y = y;
    s.z1 = C.amb->zero();
    return s;
}

SPoint s_nonregular(const Context& C, long n, Fq z2, long comp, Fq z1) {
    check_fiber(C, n, z2);
    auto comps = components(C, n);
    long pos = comp_pos(C, n, comp);
    if (pos < 0 || pos >= static_cast<long>(comps.size()))
        throw std::invalid_argument("no such component");
    if (comps[pos].regular) throw std::invalid_argument("component is not non-regular");
    SPoint s;
    s.n = n;
    s.z2 = z2;
    s.comp = comp;
    s.regular = false;
    s.x = s.y = C.amb->zero();
    s.z1 = z1;
    return s;
}

bool s_is_supersingular(const SPoint& s) {
    return s.regular ? (s.x.is_zero() && s.y.is_zero()) : s.z1.is_zero();
}

SPoint twist_action_s(const Context& C, long k, Fq z, const SPoint& s) {
    if (z.is_zero()) throw std::invalid_argument("z must be invertible");
    const GaloisField& F = *C.amb;
    const PrimePower& pp = C.pp;
    long n2 = pp.mod_q1(s.n + 2 * k);
    Fq zz = F.mul(z, z);
    Fq z2b = F.mul(s.z2, zz);
    auto src = components(C, s.n);
    auto dst = components(C, n2);
    const ComponentLabel& sl = src[comp_pos(C, s.n, s.comp)];
    std::array<long, 2> target = {pp.mod_q1(sl.first[0] + k), pp.mod_q1(sl.first[1] + k)};
    for (const auto& L : dst) {
        if (L.first == target) {
            if (s.regular)
                return s_regular(C, n2, z2b, L.i, F.mul(s.x, zz), F.mul(s.y, zz));
            return s_nonregular(C, n2, z2b, L.i, F.mul(s.z1, zz));
        }
        if (L.regular && L.second == target) {
            // the x-line lands on the y-line of the image component
            return s_regular(C, n2, z2b, L.i, F.mul(s.y, zz), F.mul(s.x, zz));
        }
    }
    throw std::logic_error("twisted label not found");
}

std::vector<SPoint> supersingular_points(const Context& C, long n, Fq z2) {
    std::vector<SPoint> out;
    for (const auto& L : components(C, n)) {
        if (L.regular)
            out.push_back(s_regular(C, n, z2, L.i, C.amb->zero(), C.amb->zero()));
        else
            out.push_back(s_nonregular(C, n, z2, L.i, C.amb->zero()));
    }
    return out;
}

std::vector<SPoint> enumerate_spoints(const Context& C, long n, Fq z2) {
    const GaloisField& F = *C.amb;
    std::vector<SPoint> out;
    long qm = F.sub_order(C.deg_qm());
    long step = F.order() / qm;
    for (const auto& L : components(C, n)) {
        if (L.regular) {
            out.push_back(s_regular(C, n, z2, L.i, F.zero(), F.zero()));
            for (long k = 0; k < qm; ++k) {
                Fq v = F.from_log(k * step);
                out.push_back(s_regular(C, n, z2, L.i, v, F.zero()));
                out.push_back(s_regular(C, n, z2, L.i, F.zero(), v));
            }
        } else {
            out.push_back(s_nonregular(C, n, z2, L.i, F.zero()));
            for (long k = 0; k < qm; ++k)
                out.push_back(s_nonregular(C, n, z2, L.i, F.from_log(k * step)));
        }
    }
    return out;
}

CentralCharacter central_character_data(const Context& C, const SPoint& s) {
    auto comps = components(C, s.n);
    const auto& L = comps[comp_pos(C, s.n, s.comp)];
    CentralCharacter cc;
    cc.gamma_lo = std::min(L.first, L.second);
    cc.gamma_hi = std::max(L.first, L.second);
    cc.u2 = s.z2;
    return cc;
}

std::string spoint_to_string(const Context& C, const SPoint& s) {
    std::ostringstream os;
    const GaloisField& F = *C.amb;
    os << "S[n=" << s.n << ",z2=" << F.to_string(s.z2) << ",comp=" << s.comp << ",";
    if (s.regular)
        os << "(x,y)=(" << F.to_string(s.x) << "," << F.to_string(s.y) << ")";
    else
        os << "z1=" << F.to_string(s.z1);
    os << "]";
    return os.str();
}

} // namespace qlang
