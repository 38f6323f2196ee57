#pragma once

#include "qlang/context.hpp"

#include <array>

namespace qlang {

// Irreducible component of the fiber S_{(zeta^n, z2)}, carrying the ordered
// pair of diagonal-torus labels.  Labels are exponent pairs with respect to
// zeta; `first` labels the x-line, `second` the y-line.
struct ComponentLabel {
    long n = 0;
    long i = 0;
    bool regular = true;
    std::array<long, 2> t_raw{};  // t_i before the diag(zeta^s, zeta^s) factor
    std::array<long, 2> first{};  // t_i * diag(zeta^s, zeta^s)
    std::array<long, 2> second{}; // conjugate label
};

// Geometric point of S(q): component index in the canonical ordering plus
// singular-diagonal (or Steinberg) coordinates and the U^2-coordinate z2.
struct SPoint {
    long n = 0;
    Fq z2{0};
    long comp = 0;
    bool regular = true;
    Fq x{}, y{}; // regular case, x*y = 0
    Fq z1{};     // non-regular case
    friend bool operator==(const SPoint&, const SPoint&) = default;
};

std::vector<ComponentLabel> components(const Context& C, long n);

SPoint s_regular(const Context& C, long n, Fq z2, long comp, Fq x, Fq y);
SPoint s_nonregular(const Context& C, long n, Fq z2, long comp, Fq z1);
bool s_is_supersingular(const SPoint& s);

// action of (zeta^k, z): labels shift by (k,k), coordinates and z2 by z^2
SPoint twist_action_s(const Context& C, long k, Fq z, const SPoint& s);

std::vector<SPoint> supersingular_points(const Context& C, long n, Fq z2);
std::vector<SPoint> enumerate_spoints(const Context& C, long n, Fq z2);

struct CentralCharacter {
    std::array<long, 2> gamma_lo{}, gamma_hi{}; // W-orbit of the torus character, sorted
    Fq u2{};
    friend bool operator==(const CentralCharacter&, const CentralCharacter&) = default;
};

CentralCharacter central_character_data(const Context& C, const SPoint& s);

std::string spoint_to_string(const Context& C, const SPoint& s);

} // namespace qlang
