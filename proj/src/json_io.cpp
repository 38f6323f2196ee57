#include "qlang/json_io.hpp"

namespace qlang {

using nlohmann::json;

json fq_to_json(const Context& C, Fq a) {
    if (a.is_zero()) return "0";
    if (C.in_qm(a)) return "z^" + std::to_string(C.amb->dlog(a, C.deg_qm()));
    return "Z^" + std::to_string(C.amb->dlog(a, C.deg_q2m()));
}

json type_to_json(const PrimePower& pp, const InertialType& t) {
    json j;
    j["niveau"] = t.niveau;
    if (t.niveau == 1)
        j["exponents"] = {t.a, t.b};
    else
        j["orbit"] = {t.h2, (t.h2 * pp.q) % (pp.q * pp.q - 1)};
    j["det_exponent"] = type_det_exponent(pp, t);
    return j;
}

json rep_to_json(const Context& C, const SemisimpleRep& r) {
    json j;
    if (r.irred) {
        j["kind"] = "irred";
        j["h"] = r.h;
        j["s"] = r.s;
        j["lambda"] = fq_to_json(C, r.lambda);
    } else {
        j["kind"] = "split";
        j["chi1"] = {{"a", r.chi1.a}, {"lambda", fq_to_json(C, r.chi1.lambda)}};
        j["chi2"] = {{"a", r.chi2.a}, {"lambda", fq_to_json(C, r.chi2.lambda)}};
    }
    return j;
}

json xpoint_to_json(const Context& C, const XPoint& pt) {
    json pos;
    switch (pt.kind) {
    case XKind::Smooth:
        pos = {{"kind", "smooth"}, {"i", pt.i}, {"x", fq_to_json(C, pt.coord)}};
        break;
    case XKind::Node: pos = {{"kind", "node"}, {"i", pt.i}}; break;
    case XKind::OriginEnd: pos = {{"kind", "origin_end"}}; break;
    case XKind::InfinityEnd: pos = {{"kind", "infinity_end"}}; break;
    case XKind::OuterLeft:
        pos = {{"kind", "outer_left"}, {"t", fq_to_json(C, pt.coord)}};
        break;
    case XKind::OuterRight:
        pos = {{"kind", "outer_right"}, {"t", fq_to_json(C, pt.coord)}};
        break;
    }
    return json{{"n", pt.n}, {"z2", fq_to_json(C, pt.z2)}, {"position", pos}};
}

json spoint_to_json(const Context& C, const SPoint& s) {
    json coords;
    if (s.regular)
        coords = {{"kind", "regular"}, {"x", fq_to_json(C, s.x)}, {"y", fq_to_json(C, s.y)}};
    else
        coords = {{"kind", "nonregular"}, {"z1", fq_to_json(C, s.z1)}};
    auto comps = components(C, s.n);
    const auto& L = comps[C.pp.n_even(s.n) ? s.comp : s.comp - 1];
    return json{{"n", s.n},
                {"z2", fq_to_json(C, s.z2)},
                {"component", s.comp},
                {"label_first", {L.first[0], L.first[1]}},
                {"label_second", {L.second[0], L.second[1]}},
                {"coords", coords}};
}

json row_to_json(const Context& C, const CorrespondenceRow& row) {
    json j;
    j["s"] = spoint_to_json(C, row.s);
    j["hecke"] = {{"gamma", {row.hecke.gamma_lo[0], row.hecke.gamma_lo[1]}},
                  {"u2", fq_to_json(C, row.hecke.u2)}};
    j["x"] = xpoint_to_json(C, row.x);
    j["rho"] = rep_to_json(C, row.rho);
    return j;
}

json tl_to_json(const Context& C, const TruncLaurent& f) {
    json coeffs = json::array();
    for (size_t i = 0; i < f.c.size(); ++i) coeffs.push_back(fq_to_json(C, f.c[i]));
    json j;
    j["valuation"] = f.c.empty() ? 0 : f.v;
    j["coeffs"] = coeffs;
    if (f.bound != TruncLaurent::EXACT) j["prec"] = f.bound;
    return j;
}

json module_to_json(const Context& C, const PhiGammaModule& D) {
    json mat = json::array();
    for (const auto& row : D.A) {
        json r = json::array();
        for (const auto& e : row) r.push_back(tl_to_json(C, e));
        mat.push_back(r);
    }
    return json{{"n", D.n},
                {"h", D.h},
                {"s", D.s},
                {"lambda", fq_to_json(C, D.lambda)},
                {"t_prec", D.N},
                {"exp_mod", D.pM},
                {"gamma_exponents", D.exps},
                {"phi_matrix", mat}};
}

} // namespace qlang
