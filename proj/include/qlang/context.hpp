#pragma once

#include "qlang/fq.hpp"

namespace qlang {

// Shared working environment: q = p^f, a coefficient extension F_{q^m} for
// point coordinates and unramified scalars, and the ambient field
// F_{p^{2mf}} where everything (including square roots and the solutions of
// z + 1/z = t) lives.
struct Context {
    PrimePower pp;
    long m = 2;
    const GaloisField* amb = nullptr;

    Context(long p, long f, long m_ = 2) : pp(p, f), m(m_) {
        if (m < 1) throw std::invalid_argument("m must be >= 1");
        amb = &GaloisField::get(p, 2 * m * f);
    }

    long q() const { return pp.q; }
    long deg_q() const { return pp.f; }
    long deg_qm() const { return pp.f * m; }
    long deg_q2m() const { return 2 * pp.f * m; }

    Fq zeta() const { return amb->subfield_gen(deg_q()); }      // F_q^x generator
    Fq zeta_m() const { return amb->subfield_gen(deg_qm()); }   // F_{q^m}^x
    Fq zeta_2m() const { return amb->subfield_gen(deg_q2m()); } // F_{q^{2m}}^x

    bool in_qm(Fq x) const { return amb->in_subfield(x, deg_qm()); }
    bool in_q(Fq x) const { return amb->in_subfield(x, deg_q()); }

    // canonical square root of z in F_{q^m}, landing in F_{q^{2m}}
    Fq sqrt_qm(Fq z) const { return amb->sqrt_subfield(z, deg_qm()); }

    // omega-exponent of a in F_q^x relative to zeta
    long omega_dlog(Fq a) const { return amb->dlog(a, deg_q()); }
};

} // namespace qlang
