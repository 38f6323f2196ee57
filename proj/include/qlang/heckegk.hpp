#pragma once

#include "qlang/lmorphism.hpp"

#include <optional>

namespace qlang {

// Parameter-level data of a supersingular Hecke module: the W-orbit of its
// torus character (sorted exponent pair), the U^2 scalar, and, when known,
// the weights (k0, k1).
struct SupersingularModuleParams {
    std::array<long, 2> gamma{}; // sorted representative of the W-orbit
    Fq u2{};
    std::optional<std::pair<long, long>> weights;
};

SupersingularModuleParams gk_params(const Context& C, long h);
SupersingularModuleParams gk_twist(const Context& C, const SupersingularModuleParams& m,
                                   const GaloisCharacter& eta);

// parameters of the unique supersingular point mapping to rho under L
SupersingularModuleParams params_from_L(const Context& C, const SemisimpleRep& rho);

bool compare_GK(const Context& C, const SemisimpleRep& rho);

} // namespace qlang
