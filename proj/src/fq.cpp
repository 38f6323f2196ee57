#include "qlang/fq.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace qlang {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimePower::PrimePower(long p_, long f_) : p(p_), f(f_) {
    if (!is_prime(p) || p < 3) throw std::invalid_argument("p must be an odd prime");
    if (f < 1) throw std::invalid_argument("f must be positive");
    q = 1;
    for (long i = 0; i < f; ++i) {
        if (q > 1000000 / p) throw std::invalid_argument("q too large");
        q *= p;
    }
}

namespace {

long pow_long(long b, long e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// arithmetic in F_p[x]/(poly), elements as coefficient vectors
struct PolyMod {
    long p;
    std::vector<long> poly; // monic, poly.size() = deg+1
    long deg() const { return static_cast<long>(poly.size()) - 1; }

    std::vector<long> mul(const std::vector<long>& a, const std::vector<long>& b) const {
        long d = deg();
        std::vector<long> t(2 * d - 1, 0);
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < d; ++j) t[i + j] = (t[i + j] + a[i] * b[j]) % p;
        for (long k = 2 * d - 2; k >= d; --k) {
            long c = t[k];
            if (c == 0) continue;
            t[k] = 0;
            for (long i = 0; i < d; ++i) t[k - d + i] = ((t[k - d + i] - c * poly[i]) % p + p) % p;
        }
        t.resize(d);
        return t;
    }

    std::vector<long> powmod(std::vector<long> base, long e) const {
        std::vector<long> r(deg(), 0);
        r[0] = 1;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
};

std::vector<long> prime_factors(long n) {
    std::vector<long> fs;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

bool is_one(const std::vector<long>& v) {
    if (v[0] != 1) return false;
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i] != 0) return false;
    return true;
}

bool is_primitive(long p, const std::vector<long>& polyCoeffs) {
    PolyMod pm{p, polyCoeffs};
    long d = pm.deg();
    long ord = pow_long(p, d) - 1;
    std::vector<long> x(d, 0);
    if (d == 1) x[0] = ((-polyCoeffs[0]) % p + p) % p; // root of x + c
    else x[1] = 1;
    if (d == 1 && x[0] == 0) return false;
    // x must have multiplicative order exactly ord
    if (!is_one(pm.powmod(x, ord))) return false;
    for (long ell : prime_factors(ord))
        if (is_one(pm.powmod(x, ord / ell))) return false;
    return true;
}

} // namespace

std::vector<long> find_primitive_poly(long p, long deg) {
    long count = pow_long(p, deg);
    for (long code = 0; code < count; ++code) {
        std::vector<long> poly(deg + 1, 0);
        poly[deg] = 1;
        long c = code;
        for (long i = 0; i < deg; ++i) {
            poly[i] = c % p;
            c /= p;
        }
        if (is_primitive(p, poly)) return poly;
    }
    throw std::logic_error("no primitive polynomial found");
}

GaloisField::GaloisField(long p, long deg) : p_(p), deg_(deg) {
    if (!is_prime(p)) throw std::invalid_argument("p not prime");
    if (deg < 1 || pow_long(p, deg) > 1 << 24) throw std::invalid_argument("field too large");
    ord_ = pow_long(p, deg) - 1;
    poly_ = find_primitive_poly(p, deg);

    PolyMod pm{p, poly_};
    std::vector<long> g(deg, 0);
    if (deg == 1) g[0] = ((-poly_[0]) % p + p) % p;
    else g[1] = 1;

    // power table and packed-coordinate lookup
    std::vector<int32_t> lookup(ord_ + 1, -2);
    coord_tab_.assign(static_cast<size_t>(ord_) * deg_, 0);
    std::vector<long> cur(deg, 0);
    cur[0] = 1;
    for (long k = 0; k < ord_; ++k) {
        long packed = 0, mult = 1;
        for (long i = 0; i < deg; ++i) {
            coord_tab_[static_cast<size_t>(k) * deg_ + i] = static_cast<uint8_t>(cur[i]);
            packed += cur[i] * mult;
            mult *= p;
        }
        if (lookup[packed] != -2) throw std::logic_error("generator not primitive");
        lookup[packed] = static_cast<int32_t>(k);
        cur = pm.mul(cur, g);
    }
    if (!is_one(cur)) throw std::logic_error("generator order mismatch");

    // zech_[k] = log(1 + g^k), -1 when 1 + g^k = 0
    zech_.assign(ord_, -1);
    for (long k = 0; k < ord_; ++k) {
        long packed = 0, mult = 1;
        for (long i = 0; i < deg; ++i) {
            long ci = coord_tab_[static_cast<size_t>(k) * deg_ + i] + (i == 0 ? 1 : 0);
            packed += (ci % p) * mult;
            mult *= p;
        }
        zech_[k] = (packed == 0) ? -1 : lookup[packed];
    }
}

const GaloisField& GaloisField::get(long p, long deg) {
    static std::mutex mu;
    static std::map<std::pair<long, long>, std::unique_ptr<GaloisField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, deg);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<GaloisField>(new GaloisField(p, deg))).first;
    return *it->second;
}

Fq GaloisField::from_int(long a) const {
    long r = a % p_;
    if (r < 0) r += p_;
    if (r == 0) return zero();
    // F_p^x is generated by zeta_1; build small dlog table on demand
    Fq z = subfield_gen(1);
    Fq cur = one();
    for (long e = 0; e < p_ - 1; ++e) {
        long val = coord_tab_[static_cast<size_t>(cur.lg) * deg_];
        if (val == r) return cur;
        cur = mul(cur, z);
    }
    throw std::logic_error("from_int failed");
}

Fq GaloisField::add(Fq a, Fq b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long diff = umod(b.lg - a.lg);
    int32_t z = zech_[diff];
    if (z < 0) return zero();
    return {static_cast<int32_t>(umod(a.lg + z))};
}

Fq GaloisField::neg(Fq a) const {
    if (a.is_zero()) return a;
    return {static_cast<int32_t>(umod(a.lg + ord_ / 2))};
}

Fq GaloisField::mul(Fq a, Fq b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    return {static_cast<int32_t>(umod(a.lg + b.lg))};
}

Fq GaloisField::inv(Fq a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    return {static_cast<int32_t>(umod(-a.lg))};
}

Fq GaloisField::pow(Fq a, long e) const {
    if (a.is_zero()) {
        if (e <= 0) throw std::domain_error("0^e for e <= 0");
        return a;
    }
    long m = (a.lg * (e % ord_)) % ord_;
    return {static_cast<int32_t>(umod(m))};
}

Fq GaloisField::frobenius(Fq a, long pj) const {
    if (a.is_zero()) return a;
    long m = a.lg;
    for (long i = 0; i < pj; ++i) m = (m * p_) % ord_;
    return {static_cast<int32_t>(m)};
}

long GaloisField::sub_order(long d) const {
    if (d < 1 || deg_ % d != 0) throw std::invalid_argument("not a subfield degree");
    return pow_long(p_, d) - 1;
}

Fq GaloisField::subfield_gen(long d) const { return {static_cast<int32_t>(ord_ / sub_order(d))}; }

bool GaloisField::in_subfield(Fq a, long d) const {
    if (a.is_zero()) return true;
    return a.lg % (ord_ / sub_order(d)) == 0;
}

long GaloisField::dlog(Fq x, long d) const {
    if (x.is_zero()) throw std::domain_error("dlog of zero");
    long step = ord_ / sub_order(d);
    if (x.lg % step != 0) throw std::domain_error("element not in subfield");
    return x.lg / step;
}

Fq GaloisField::sqrt_subfield(Fq z, long d) const {
    if (deg_ % (2 * d) != 0) throw std::invalid_argument("quadratic extension not available");
    if (z.is_zero()) return z;
    long k = dlog(z, d);                    // z = zeta_d^k
    long half = (sub_order(d) + 2) / 2;     // (p^d + 1)/2
    long step2 = ord_ / sub_order(2 * d);   // log of zeta_{2d}
    long e = (k * half) % sub_order(2 * d); // zeta_{2d}^{p^d+1} = zeta_d
    return {static_cast<int32_t>(umod(e * step2))};
}

std::vector<long> GaloisField::coords(Fq a) const {
    std::vector<long> v(deg_, 0);
    if (a.is_zero()) return v;
    for (long i = 0; i < deg_; ++i) v[i] = coord_tab_[static_cast<size_t>(a.lg) * deg_ + i];
    return v;
}

std::string GaloisField::to_string(Fq a) const {
    if (a.is_zero()) return "0";
    if (a.lg == 0) return "1";
    return "g^" + std::to_string(a.lg);
}

} // namespace qlang
