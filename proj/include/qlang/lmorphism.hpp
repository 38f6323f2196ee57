#pragma once

#include "qlang/satake.hpp"
#include "qlang/xscheme.hpp"

namespace qlang {

// quotient morphism L: S(q) -> X(q), fiberwise over (zeta^n, z2)
XPoint L_apply(const Context& C, const SPoint& s);

// independent route: conjugation by (zeta^Delta, sqrt(z2)) of the basic-fiber
// rules; used to cross-check L_apply and the root-independence
XPoint L_via_conjugation(const Context& C, const SPoint& s, const SqrtChoice& sq);

SemisimpleRep rho_of(const Context& C, const SPoint& s, const SqrtChoice& sq);
SemisimpleRep rho_of(const Context& C, const SPoint& s);

struct CorrespondenceRow {
    SPoint s;
    CentralCharacter hecke;
    XPoint x;
    SemisimpleRep rho;
};

std::vector<CorrespondenceRow> correspondence_table(const Context& C, long n, Fq z2,
                                                    bool supersingular_only);

// Prop.-level supersingular bijection over all n for a fixed z2; throws if
// the map fails to be a bijection onto the irreducible classes with
// determinant scalar z2.
std::vector<std::pair<SPoint, SemisimpleRep>> supersingular_bijection(const Context& C, Fq z2);

// weight attached to each coordinate line of each Satake component, with the
// X-chain component it maps into; the line label must equal hw(weight)
struct WeightLine {
    long n = 0;
    long s_comp = 0;
    char line = 'x'; // 'x', 'y', or 'z' (Steinberg)
    long x_comp = 0;
    Weight w;
    std::array<long, 2> label{};
};

std::vector<WeightLine> component_weight_lines(const Context& C, long n);

} // namespace qlang
