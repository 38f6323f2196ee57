#include "qlang/heckegk.hpp"

namespace qlang {

SupersingularModuleParams gk_params(const Context& C, long h) {
    if (h < 1 || h > C.q() - 1) throw std::invalid_argument("h out of range");
    SupersingularModuleParams m;
    m.gamma = {0, C.pp.mod_q1(h - 1)};
    if (m.gamma[0] > m.gamma[1]) std::swap(m.gamma[0], m.gamma[1]);
    m.u2 = C.amb->one();
    m.weights = std::make_pair(h - 1, C.q() - h);
    return m;
}

SupersingularModuleParams gk_twist(const Context& C, const SupersingularModuleParams& m,
                                   const GaloisCharacter& eta) {
    SupersingularModuleParams r;
    r.gamma = {C.pp.mod_q1(m.gamma[0] + eta.a), C.pp.mod_q1(m.gamma[1] + eta.a)};
    if (r.gamma[0] > r.gamma[1]) std::swap(r.gamma[0], r.gamma[1]);
    r.u2 = C.amb->mul(m.u2, C.amb->mul(eta.lambda, eta.lambda));
    return r;
}

SupersingularModuleParams params_from_L(const Context& C, const SemisimpleRep& rho) {
    if (!rho.irred) throw std::invalid_argument("rho must be irreducible");
    GaloisCharacter det = det_rep(C, rho);
    long n = C.pp.mod_q1(det.a - 1);
    Fq z2 = det.lambda;
    std::optional<SupersingularModuleParams> found;
    for (const SPoint& s : supersingular_points(C, n, z2)) {
        if (!iso_equal(C, rho_of(C, s), rho)) continue;
        if (found) throw std::logic_error("supersingular preimage not unique");
        CentralCharacter cc = central_character_data(C, s);
        SupersingularModuleParams m;
        long a = cc.gamma_lo[0], b = cc.gamma_lo[1];
        m.gamma = {std::min(a, b), std::max(a, b)};
        m.u2 = cc.u2;
        found = m;
    }
    if (!found) throw std::logic_error("no supersingular preimage");
    return *found;
}

bool compare_GK(const Context& C, const SemisimpleRep& rho) {
    if (!rho.irred) throw std::invalid_argument("rho must be irreducible");
    SupersingularModuleParams lhs = params_from_L(C, rho);
    GaloisCharacter eta = char_make(C, rho.s, rho.lambda);
    SupersingularModuleParams rhs = gk_twist(C, gk_params(C, rho.h), eta);
    return lhs.gamma == rhs.gamma && lhs.u2 == rhs.u2;
}

} // namespace qlang
