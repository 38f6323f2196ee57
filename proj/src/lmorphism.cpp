#include "qlang/lmorphism.hpp"

#include <map>

namespace qlang {

namespace {
Fq chain_coord(const Context& C, Fq coord, Fq z2) { return C.amb->div(coord, z2); }
} // namespace

XPoint L_apply(const Context& C, const SPoint& s) {
    const GaloisField& F = *C.amb;
    const long q = C.q();
    long len = chain_length(C.pp, s.n);
    bool even = C.pp.n_even(s.n);

    if (even) {
        if (!s.regular) {
            if (s.comp == 0) {
                if (s.z1.is_zero()) return x_origin_end(C, s.n, s.z2);
                return x_smooth(C, s.n, s.z2, 0, chain_coord(C, s.z1, s.z2));
            }
            // last component: Steinberg coordinate is the y-variable
            if (s.z1.is_zero()) return x_infinity_end(C, s.n, s.z2);
            Fq y = chain_coord(C, s.z1, s.z2);
            return x_smooth(C, s.n, s.z2, len - 1, F.inv(y)); // [1:y] = [1/y:1]
        }
        if (s.x.is_zero() && s.y.is_zero()) return x_node(C, s.n, s.z2, s.comp);
        if (!s.x.is_zero()) return x_smooth(C, s.n, s.z2, s.comp, chain_coord(C, s.x, s.z2));
        Fq y = chain_coord(C, s.y, s.z2);
        return x_smooth(C, s.n, s.z2, s.comp - 1, F.inv(y));
    }

    // odd fiber: all components regular, indices 1..(q-1)/2
    if (s.x.is_zero() && s.y.is_zero()) return x_node(C, s.n, s.z2, s.comp);
    if (!s.x.is_zero()) {
        Fq xi = chain_coord(C, s.x, s.z2);
        if (s.comp == (q - 1) / 2)
            return x_outer(C, s.n, s.z2, false, F.add(xi, F.inv(xi)));
        return x_smooth(C, s.n, s.z2, s.comp, xi);
    }
    Fq xi = chain_coord(C, s.y, s.z2);
    if (s.comp == 1) return x_outer(C, s.n, s.z2, true, F.add(xi, F.inv(xi)));
    Fq y = xi;
    return x_smooth(C, s.n, s.z2, s.comp - 1, F.inv(y));
}

XPoint L_via_conjugation(const Context& C, const SPoint& s, const SqrtChoice& sq) {
    const GaloisField& F = *C.amb;
    long base_n = C.pp.n_even(s.n) ? 0 : C.q() - 2;
    long delta = eta_exponent(C.pp, s.n);
    // g = (zeta^delta, sq) maps the basic fiber to (n, z2) preserving indices
    Fq root_inv = F.inv(sq.root);
    SPoint back = twist_action_s(C, C.pp.mod_q1(-delta), root_inv, s);
    if (back.n != base_n || !(back.z2 == F.one()))
        throw std::logic_error("conjugation transport misses the basic fiber");
    XPoint bx = L_apply(C, back);
    return twist_action(C, delta, sq.root, bx);
}

SemisimpleRep rho_of(const Context& C, const SPoint& s, const SqrtChoice& sq) {
    return iota(C, L_apply(C, s), sq);
}

SemisimpleRep rho_of(const Context& C, const SPoint& s) {
    return iota(C, L_apply(C, s), sqrt_canonical(C, s.z2));
}

std::vector<CorrespondenceRow> correspondence_table(const Context& C, long n, Fq z2,
                                                    bool supersingular_only) {
    std::vector<SPoint> pts =
        supersingular_only ? supersingular_points(C, n, z2) : enumerate_spoints(C, n, z2);
    std::vector<CorrespondenceRow> out;
    out.reserve(pts.size());
    for (const SPoint& s : pts) {
        CorrespondenceRow row{s, central_character_data(C, s), L_apply(C, s), rho_of(C, s)};
        out.push_back(row);
    }
    return out;
}

std::vector<std::pair<SPoint, SemisimpleRep>> supersingular_bijection(const Context& C, Fq z2) {
    const long q = C.q();
    std::vector<std::pair<SPoint, SemisimpleRep>> out;
    std::map<RepKey, int> seen;
    for (long n = 0; n <= q - 2; ++n)
        for (const SPoint& s : supersingular_points(C, n, z2)) {
            SemisimpleRep r = rho_of(C, s);
            if (!r.irred) throw std::logic_error("supersingular point with reducible image");
            if (++seen[rep_iso_key(C, r)] > 1)
                throw std::logic_error("supersingular map not injective");
            out.emplace_back(s, r);
        }
    // surjectivity onto irreducibles with determinant scalar z2
    Fq lam = sqrt_canonical(C, z2).root;
    std::map<RepKey, int> targets;
    for (long h = 1; h <= q - 1; ++h)
        for (long s0 = 0; s0 <= q - 2; ++s0) targets[rep_iso_key(C, rep_irred(C, h, s0, lam))] = 1;
    if (targets.size() != out.size() ||
        targets.size() != static_cast<size_t>((q * q - q) / 2))
        throw std::logic_error("supersingular count mismatch");
    for (const auto& [s, r] : out)
        if (targets.find(rep_iso_key(C, r)) == targets.end())
            throw std::logic_error("supersingular image misses the irreducible classes");
    return out;
}

std::vector<WeightLine> component_weight_lines(const Context& C, long n) {
    const long q = C.q();
    long len = chain_length(C.pp, n);
    bool even = C.pp.n_even(n);
    long se = eta_exponent(C.pp, n); // weight labels twist by det^{se}
    auto comps = components(C, n);

    auto sigma_of = [&](long j) { // first weight of chain component j; s(r) = -j
        long r = even ? 2 * j : 2 * j - 1;
        return Weight{r, C.pp.mod_q1(-j + se)};
    };
    auto sigma_prime_of = [&](long j) {
        long r = even ? 2 * j : 2 * j - 1;
        return Weight{q - 3 - r, C.pp.mod_q1(-j + r + 1 + se)};
    };

    std::vector<WeightLine> out;
    auto push = [&](long i, char line, long xj, Weight w) {
        WeightLine wl;
        wl.n = n;
        wl.s_comp = i;
        wl.line = line;
        wl.x_comp = xj;
        wl.w = w;
        wl.label = line == 'y' ? comps[i].second : comps[i].first;
        out.push_back(wl);
    };

    if (even) {
        for (long i = 0; i <= (q - 1) / 2; ++i) {
            if (i == 0) {
                push(0, 'z', 0, sigma_of(0));
            } else if (i == (q - 1) / 2) {
                push(i, 'z', len - 1, sigma_prime_of(len - 1));
            } else {
                push(i, 'x', i, sigma_of(i));
                push(i, 'y', i - 1, sigma_prime_of(i - 1));
            }
        }
    } else {
        for (long i = 1; i <= (q - 1) / 2; ++i) {
            if (i == (q - 1) / 2)
                push(i, 'x', len - 1, Weight{q - 2, C.pp.mod_q1((q - 1) / 2 + se)});
            else
                push(i, 'x', i, sigma_of(i));
            if (i == 1)
                push(i, 'y', 0, Weight{q - 2, C.pp.mod_q1(se)});
            else
                push(i, 'y', i - 1, sigma_prime_of(i - 1));
        }
    }
    return out;
}

} // namespace qlang
