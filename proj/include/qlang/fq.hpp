#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlang {

// Odd prime power q = p^f with the even/odd split of N_q = {0,...,q-2}.
struct PrimePower {
    long p = 0;
    long f = 0;
    long q = 0;

    PrimePower() = default;
    PrimePower(long p_, long f_);

    long n_count() const { return q - 1; }           // |N_q|
    bool n_even(long n) const { return ((n % (q - 1)) % 2) == 0; }
    long d_of(long n) const { return mod_q1(n + 1); } // d_n = 1+n, normalized to [0,q-2]
    long mod_q1(long a) const {
        long m = a % (q - 1);
        return m < 0 ? m + (q - 1) : m;
    }
};

bool is_prime(long n);

// Element of a fixed finite field, stored as a discrete logarithm with
// lg == -1 marking zero.  All arithmetic goes through the owning GaloisField.
struct Fq {
    int32_t lg = -1;
    bool is_zero() const { return lg < 0; }
    friend bool operator==(Fq a, Fq b) { return a.lg == b.lg; }
    friend auto operator<=>(Fq a, Fq b) { return a.lg <=> b.lg; }
};

// F_{p^deg} realized as F_p[x]/(g) for the first primitive monic g in a fixed
// enumeration order.  Multiplication is log addition, addition uses a Zech
// table.  Subfields F_{p^d} for d | deg sit inside via powers of the
// generator, so the distinguished generators zeta_d = g^{(p^deg-1)/(p^d-1)}
// are compatible by construction.
class GaloisField {
public:
    static const GaloisField& get(long p, long deg);

    long p() const { return p_; }
    long deg() const { return deg_; }
    long order() const { return ord_; } // |F^x| = p^deg - 1
    const std::vector<long>& defining_poly() const { return poly_; }

    Fq zero() const { return {-1}; }
    Fq one() const { return {0}; }
    Fq gen() const { return {1}; }
    Fq from_log(long k) const { return {static_cast<int32_t>(umod(k))}; }
    Fq from_int(long a) const;           // image of a mod p
    Fq minus_one() const { return {static_cast<int32_t>(ord_ / 2)}; }

    Fq add(Fq a, Fq b) const;
    Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
    Fq neg(Fq a) const;
    Fq mul(Fq a, Fq b) const;
    Fq inv(Fq a) const;
    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
    Fq pow(Fq a, long e) const;
    Fq frobenius(Fq a, long pj) const;   // a^(p^pj)

    // subfield F_{p^d}, d | deg
    long sub_order(long d) const;        // p^d - 1
    Fq subfield_gen(long d) const;       // zeta_d
    bool in_subfield(Fq a, long d) const;
    long dlog(Fq x, long d) const;       // e with subfield_gen(d)^e = x
    Fq sqrt_subfield(Fq z, long d) const; // canonical sqrt of z in F_{p^{2d}}, needs 2d | deg

    std::vector<long> coords(Fq a) const; // coefficients w.r.t. the power basis
    std::string to_string(Fq a) const;

private:
    GaloisField(long p, long deg);

    long umod(long k) const {
        long m = k % ord_;
        return m < 0 ? m + ord_ : m;
    }

    long p_, deg_, ord_;
    std::vector<long> poly_;
    std::vector<int32_t> zech_;
    std::vector<uint8_t> coord_tab_; // coord_tab_[k*deg_ + i]
};

// First monic primitive polynomial of degree deg over F_p, coefficients
// low-to-high without the leading 1, enumerated as base-p integers.
std::vector<long> find_primitive_poly(long p, long deg);

} // namespace qlang
