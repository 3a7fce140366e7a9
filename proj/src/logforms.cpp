// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "logforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace nplc {

Z ray_valuation(const Poly& p, const ZVec& v) {
    if (p.is_zero()) throw std::invalid_argument("ray_valuation: zero polynomial");
    for (const Z& x : v)
        if (x < 0) throw std::invalid_argument("ray_valuation: ray must be nonnegative");
    return support_min(p, v);
}

RayValuationReport form_valuation(const Poly& f, const LogFormRep& rep, const ZVec& ray) {
    if (rep.m < 1) throw std::invalid_argument("form_valuation: m must be >= 1");
    RayValuationReport r;
    r.ray = ray;
    r.nu_h = ray_valuation(rep.h, ray);
    r.nu_f = ray_valuation(f, ray);
    Z one_pairing = 0;
    for (const Z& x : ray) one_pairing += x;
    r.divisor_discrepancy = one_pairing - 1;
    r.nu_form = r.nu_h + Z(rep.m) * r.divisor_discrepancy - Z(rep.m) * r.nu_f;
    r.threshold = Z(-rep.m);
    r.pass = r.nu_form >= r.threshold;
    return r;
}

LogFormReport is_log_form(const Poly& f, const LogFormRep& rep, const Fan& fan) {
    return is_log_form(f, newton_polyhedron(f), rep, fan);
}

LogFormReport is_log_form(const Poly& f, const NewtonPolyhedron& np, const LogFormRep& rep, const Fan& fan) {
    if (rep.m < 1) throw std::invalid_argument("is_log_form: m must be >= 1");
    if (rep.h.nvars() != f.nvars()) throw std::invalid_argument("is_log_form: h/f nvars mismatch");
    if (fan.dim != f.nvars()) throw std::invalid_argument("is_log_form: fan dimension mismatch");

    // the fan must see every compact facet normal, else it cannot certify
    // membership in the dilated polyhedron
    for (auto j : np.compact_facet_indices) {
        const ZVec& v = np.facets[j].normal;
        if (!std::binary_search(fan.rays.begin(), fan.rays.end(), v,
                                [](const ZVec& a, const ZVec& b) { return lex_less(a, b); }))
            throw std::invalid_argument("is_log_form: fan does not refine the dual fan of f");
    }

    LogFormReport rep_out;
    rep_out.is_log_form = true;
    for (const ZVec& ray : fan.rays) {
        LogFormRayEntry e;
        e.ray = ray;
        Z sum = 0, nonzero = 0;
        for (const Z& x : ray) {
            sum += x;
            if (x != 0) ++nonzero;
        }
        e.coordinate = (nonzero == 1 && sum == 1);
        e.actual = ray_valuation(rep.h, ray);
        if (e.coordinate) {
            e.required = Z(rep.m);
        } else {
            e.required = Z(rep.m) * ray_valuation(f, ray);
        }
        e.pass = e.actual >= e.required;
        if (!e.pass) rep_out.is_log_form = false;
        rep_out.rays.push_back(std::move(e));
    }
    return rep_out;
}

bool residue_class_equal(const Poly& f, const Poly& h1, const Poly& h2) {
    if (f.is_zero()) throw std::invalid_argument("residue_class_equal: zero modulus");
    return divides(f, sub(h1, h2));
}

RoundingCase rounding_implication(std::int64_t m, std::int64_t a, std::int64_t b, std::int64_t nu, const Q& lambda) {
    if (m < 1 || a < 1) throw std::invalid_argument("rounding_implication: need m >= 1 and a >= 1");
    RoundingCase c;
    c.m = m;
    c.a = a;
    c.b = b;
    c.nu = nu;
    c.lambda = lambda;
    c.within_hypothesis = lambda > 0 && lambda < Q(1, m * a);
    Q left = (lambda - 1) * a + Q(nu, m) + b;
    c.premise = left > -1;
    Q concl = Q(nu, m) + b - a;
    c.conclusion = concl >= -1;
    c.implication = !c.premise || c.conclusion;
    return c;
}

DeformationReport deformation_extension_check(const DeformationInstance& inst, const RegularizeLimits& limits) {
    const Poly& F = inst.F;
    if (F.is_zero()) throw std::invalid_argument("deformation_extension_check: zero polynomial F");
    if (inst.m < 1) throw std::invalid_argument("deformation_extension_check: m must be >= 1");
    const int nv = F.nvars();
    if (nv < 2) throw std::invalid_argument("deformation_extension_check: F must have at least 2 variables");
    if (inst.H.nvars() != nv) throw std::invalid_argument("deformation_extension_check: H/F nvars mismatch");
    if (inst.H.is_zero()) throw std::invalid_argument("deformation_extension_check: zero candidate H");

    Poly f0 = substitute_zero(F, nv);  // t = 0 fibre
    if (f0.is_zero())
        throw std::invalid_argument("deformation_extension_check: F(x, 0) = 0, not a deformation of a hypersurface");
    if (inst.base_f && *inst.base_f != f0)
        throw std::invalid_argument("deformation_extension_check: F(x, 0) differs from the declared base polynomial");

    // the toric route needs axis points for the x-variables; t is exempt
    // (deformations fixing the singular point have no t-axis monomial)
    for (int i = 1; i < nv; ++i) {
        Poly restricted = F;
        for (int j = 1; j <= nv; ++j)
            if (j != i) restricted = substitute_zero(restricted, j);
        if (restricted.is_zero())
            throw std::invalid_argument(
                "deformation_extension_check: non-toric deformation (axis condition fails for x" + std::to_string(i) +
                ") -- out of scope");
    }

    NewtonPolyhedron npF = newton_polyhedron(F);
    RegularizeStats stats;
    Fan sigma = regularize(dual_fan(npF), &stats, limits);

    DeformationReport rep;
    rep.pass = true;
    rep.fan_rays = sigma.rays.size();
    rep.subdivisions = stats.star_subdivisions;
    for (const ZVec& w : sigma.rays) {
        DeformationRayRow row;
        row.ray = w;
        Z sum = 0, nonzero = 0;
        std::size_t nz_idx = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            sum += w[i];
            if (w[i] != 0) {
                ++nonzero;
                nz_idx = i;
            }
        }
        bool is_coord = (nonzero == 1 && sum == 1);
        bool is_t_ray = is_coord && nz_idx == static_cast<std::size_t>(nv - 1);
        row.nu_H = ray_valuation(inst.H, w);
        if (is_coord) {
            if (is_t_ray) continue;  // the parameter divisor carries no condition
            row.coordinate = true;
            row.margin = row.nu_H - Z(inst.m);
            row.pass = row.margin >= 0;
        } else {
            row.a = ray_valuation(F, w);
            row.b = sum - 1;
            row.margin = row.nu_H + Z(inst.m) * row.b - Z(inst.m) * row.a + Z(inst.m);
            row.pass = row.margin >= 0;
        }
        if (!row.pass) rep.pass = false;
        rep.rows.push_back(std::move(row));
    }
    rep.verdict = rep.pass ? "H extends h with logarithmic poles along the toric resolution"
                           : "H fails the log-pole bound along at least one divisor";
    return rep;
}

}  // namespace nplc
