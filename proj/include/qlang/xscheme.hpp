#pragma once

#include "qlang/characters.hpp"

namespace qlang {

// Positions on the chain of projective lines underlying the component X_{d_n}.
// Even chains have (q-1)/2 components with two free extremities; odd chains
// have (q+1)/2 components whose two exterior ones carry the affine coordinate
// t (the t -> t + 1/t picture), so their only special points are the nodes.
enum class XKind { Smooth, Node, OriginEnd, InfinityEnd, OuterLeft, OuterRight };

struct XPoint {
    long n = 0;  // component selector, d_n = 1 + n
    Fq z2{0};    // value of the second projection, in F_{q^m}^x
    XKind kind = XKind::Smooth;
    long i = 0;  // Smooth: component index; Node{i}: C_{i-1} /\ C_i
    Fq coord{};  // Smooth: x of [x:1] (nonzero); Outer*: affine t (may be zero)
    friend bool operator==(const XPoint&, const XPoint&) = default;
    friend auto operator<=>(const XPoint&, const XPoint&) = default;
};

struct SqrtChoice {
    Fq root{0}; // root*root == z2
};

long chain_length(const PrimePower& pp, long n); // number of P^1 components
long eta_exponent(const PrimePower& pp, long n); // omega-part of the sign character eta
SqrtChoice sqrt_canonical(const Context& C, Fq z2);

XPoint x_smooth(const Context& C, long n, Fq z2, long i, Fq x);
XPoint x_node(const Context& C, long n, Fq z2, long i);
XPoint x_origin_end(const Context& C, long n, Fq z2);
XPoint x_infinity_end(const Context& C, long n, Fq z2);
XPoint x_outer(const Context& C, long n, Fq z2, bool left, Fq t);

bool x_is_closed_orbit(const XPoint& pt); // node or extremity

// Galois parametrization of Theorem-level bijection; depends on the choice
// of square root of z2 through the twisting character eta.
SemisimpleRep iota(const Context& C, const XPoint& pt, const SqrtChoice& sq);
SemisimpleRep iota(const Context& C, const XPoint& pt); // canonical root

// rule-inversion; input must be a normal form whose data lives over F_{q^m}
XPoint iota_inverse(const Context& C, const SemisimpleRep& rho);
XPoint iota_inverse(const Context& C, const SemisimpleRep& rho, const SqrtChoice& sq);

// action of (zeta^k, z): component shift by 2k, z2 -> z2 z^2, position fixed
XPoint twist_action(const Context& C, long k, Fq z, const XPoint& pt);

InertialType orbit_to_type(const Context& C, const XPoint& pt);

// all points of the fiber (n, z2) with coordinates in F_{q^m}
std::vector<XPoint> enumerate_xpoints(const Context& C, long n, Fq z2);
std::vector<XPoint> x_closed_points(const Context& C, long n, Fq z2);

// unordered pair {z, 1/z} solving z + 1/z = t, inside F_{q^{2m}}
std::pair<Fq, Fq> solve_z_plus_zinv(const Context& C, Fq t);

std::string xpoint_to_string(const Context& C, const XPoint& pt);

} // namespace qlang
