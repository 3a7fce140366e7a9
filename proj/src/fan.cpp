// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "fan.hpp"

#include "linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace nplc {

namespace {

using RaySet = std::vector<ZVec>;  // lex-sorted ray vectors of one cone

RaySet sorted_rays(RaySet r) {
    std::sort(r.begin(), r.end(), lex_less);
    return r;
}

Fan canonical_fan(int dim, const std::vector<RaySet>& cones) {
    Fan fan;
    fan.dim = dim;
    std::set<ZVec, decltype([](const ZVec& a, const ZVec& b) { return lex_less(a, b); })> rays;
    for (const auto& c : cones)
        for (const auto& r : c) rays.insert(r);
    fan.rays.assign(rays.begin(), rays.end());
    auto index_of = [&](const ZVec& r) {
        auto it = std::lower_bound(fan.rays.begin(), fan.rays.end(), r, lex_less);
        return static_cast<std::size_t>(it - fan.rays.begin());
    };
    for (const auto& c : cones) {
        std::vector<std::size_t> idx;
        for (const auto& r : c) idx.push_back(index_of(r));
        std::sort(idx.begin(), idx.end());
        fan.cones.push_back(std::move(idx));
    }
    std::sort(fan.cones.begin(), fan.cones.end());
    fan.cones.erase(std::unique(fan.cones.begin(), fan.cones.end()), fan.cones.end());
    return fan;
}

std::vector<RaySet> materialize(const Fan& fan) {
    std::vector<RaySet> out;
    for (const auto& c : fan.cones) {
        RaySet r;
        for (auto i : c) r.push_back(fan.rays[i]);
        out.push_back(sorted_rays(std::move(r)));
    }
    return out;
}

ZMat rays_as_rows(const RaySet& rays) { return ZMat(rays.begin(), rays.end()); }

bool is_simplicial(const RaySet& rays) { return rank_z(rays_as_rows(rays)) == static_cast<int>(rays.size()); }

/// Solves w = sum u_j r_j for a full-dimensional simplicial cone; empty
/// optional when w is outside.
std::optional<QVec> simplicial_coords(const RaySet& rays, const ZVec& w) {
    const std::size_t n = w.size();
    if (rays.size() != n) throw std::logic_error("simplicial_coords: cone is not full-dimensional");
    ZMat m(n, ZVec(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) m[i][j] = rays[j][i];
    QVec u = solve_q(m, w);
    for (const Q& x : u)
        if (x < 0) return std::nullopt;
    return u;
}

// ---- pulling triangulation -------------------------------------------------

struct FaceLattice {
    std::vector<std::vector<std::size_t>> faces;  // sorted ray-index subsets, including the cone itself
    std::vector<int> dims;
};

/// Proper faces of a full-dimensional pointed cone as closure of facet
/// incidences under intersection, plus the cone itself.
FaceLattice face_lattice(const RaySet& rays) {
    const std::size_t n = rays[0].size();
    std::vector<ZVec> normals = dd_facets(rays);
    std::set<std::vector<std::size_t>> sets;
    std::vector<std::vector<std::size_t>> frontier;
    for (const auto& a : normals) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (dot(a, rays[i]) == 0) s.push_back(i);
        if (s.empty()) continue;
        if (sets.insert(s).second) frontier.push_back(s);
    }
    std::vector<std::vector<std::size_t>> all(sets.begin(), sets.end());
    while (!frontier.empty()) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& a : frontier)
            for (const auto& b : all) {
                std::vector<std::size_t> s;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(s));
                if (s.empty()) continue;
                if (sets.insert(s).second) next.push_back(s);
            }
        for (const auto& s : next) all.push_back(s);
        frontier = std::move(next);
    }
    FaceLattice fl;
    std::vector<std::size_t> top(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) top[i] = i;
    sets.insert(top);
    for (const auto& s : sets) {
        ZMat m;
        for (auto i : s) m.push_back(rays[i]);
        fl.faces.push_back(s);
        fl.dims.push_back(rank_z(m));
    }
    (void)n;
    return fl;
}

void pull_triangulate(const FaceLattice& fl, std::size_t face_idx, const RaySet& rays,
                      std::vector<std::vector<std::size_t>>& out) {
    const auto& face = fl.faces[face_idx];
    const int dim = fl.dims[face_idx];
    if (static_cast<int>(face.size()) == dim) {
        out.push_back(face);
        return;
    }
    // pull at the lexicographically least ray of the face
    std::size_t r0 = face[0];
    for (auto i : face)
        if (lex_less(rays[i], rays[r0])) r0 = i;
    // facets of this face: maximal proper subfaces of dimension dim-1
    for (std::size_t g = 0; g < fl.faces.size(); ++g) {
        if (fl.dims[g] != dim - 1) continue;
        const auto& sub = fl.faces[g];
        if (!std::includes(face.begin(), face.end(), sub.begin(), sub.end())) continue;
        if (std::binary_search(sub.begin(), sub.end(), r0)) continue;
        std::vector<std::vector<std::size_t>> pieces;
        pull_triangulate(fl, g, rays, pieces);
        for (auto& s : pieces) {
            s.push_back(r0);
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
        }
    }
}

std::vector<RaySet> triangulate_cone(const RaySet& rays) {
    if (is_simplicial(rays)) return {rays};
    FaceLattice fl = face_lattice(rays);
    std::size_t top = 0;
    for (std::size_t i = 0; i < fl.faces.size(); ++i)
        if (fl.faces[i].size() == rays.size()) top = i;
    std::vector<std::vector<std::size_t>> simplices;
    pull_triangulate(fl, top, rays, simplices);
    std::sort(simplices.begin(), simplices.end());
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    std::vector<RaySet> out;
    for (const auto& s : simplices) {
        RaySet r;
        for (auto i : s) r.push_back(rays[i]);
        out.push_back(sorted_rays(std::move(r)));
    }
    return out;
}

// ---- parallelepiped lattice points ------------------------------------------

struct PiPoint {
    Q coord_sum;  // sum of the ray-basis coordinates, in [0, n)
    ZVec point;
};

/// Nonzero lattice points of the half-open fundamental parallelepiped of
/// a full-dimensional simplicial cone.
std::vector<PiPoint> parallelepiped_points(const RaySet& rays) {
    const std::size_t n = rays[0].size();
    ZMat m(n, ZVec(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) m[i][j] = rays[j][i];
    SmithResult snf = smith_normal_form(m);
    std::vector<PiPoint> out;
    ZVec k(n, 0);
    while (true) {
        // x = uinv * k
        ZVec x(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) x[i] += snf.uinv[i][j] * k[j];
        QVec t = solve_q(m, x);
        ZVec w(n, 0);
        Q sum = 0;
        bool zero = true;
        QVec frac(n);
        for (std::size_t i = 0; i < n; ++i) {
            frac[i] = t[i] - Q(floor_q(t[i]));
            sum += frac[i];
        }
        for (std::size_t i = 0; i < n; ++i) {
            Q wi = 0;
            for (std::size_t j = 0; j < n; ++j) wi += Q(m[i][j]) * frac[j];
            if (denominator(wi) != 1) throw std::logic_error("parallelepiped_points: non-integral residue");
            w[i] = numerator(wi);
            if (w[i] != 0) zero = false;
        }
        if (!zero) out.push_back({sum, std::move(w)});
        // odometer over prod [0, d_i)
        std::size_t i = n;
        bool done = true;
        while (i > 0) {
            --i;
            k[i] += 1;
            if (k[i] < snf.divisors[i]) {
                done = false;
                break;
            }
            k[i] = 0;
        }
        if (done) break;
    }
    return out;
}

}  // namespace

Fan dual_fan(const NewtonPolyhedron& np) {
    const std::size_t n = static_cast<std::size_t>(np.nvars);
    if (np.vertices.empty()) throw std::invalid_argument("dual_fan: polyhedron has no vertices");
    std::vector<RaySet> cones;
    for (const auto& p : np.vertices) {
        std::vector<ZVec> gens;
        for (const auto& q : np.vertices) {
            if (q == p) continue;
            ZVec g(n);
            for (std::size_t i = 0; i < n; ++i) g[i] = Z(q[i]) - Z(p[i]);
            gens.push_back(std::move(g));
        }
        for (std::size_t i = 0; i < n; ++i) {
            ZVec e(n, 0);
            e[i] = 1;
            gens.push_back(std::move(e));
        }
        cones.push_back(sorted_rays(polar_extreme_rays(gens)));
    }
    return canonical_fan(np.nvars, cones);
}

Z cone_multiplicity(const ZMat& rays) {
    if (rays.empty()) throw std::invalid_argument("cone_multiplicity: empty cone");
    if (rank_z(rays) != static_cast<int>(rays.size()))
        throw std::invalid_argument("cone_multiplicity: dependent rays (cone not simplicial)");
    return minor_gcd(rays);
}

Fan regularize(const Fan& fan, RegularizeStats* stats, const RegularizeLimits& limits) {
    RegularizeStats local;
    std::vector<RaySet> cones;
    for (const auto& c : materialize(fan)) {
        if (rank_z(rays_as_rows(c)) != fan.dim)
            throw std::invalid_argument("regularize: maximal cone is not full-dimensional");
        if (is_simplicial(c)) {
            cones.push_back(c);
        } else {
            ++local.triangulated_cones;
            for (auto& s : triangulate_cone(c)) cones.push_back(std::move(s));
        }
    }

    bool first_pass = true;
    while (true) {
        Z worst = 1;
        std::size_t worst_idx = cones.size();
        for (std::size_t i = 0; i < cones.size(); ++i) {
            Z m = cone_multiplicity(rays_as_rows(cones[i]));
            if (m <= 1) continue;
            bool take = worst_idx == cones.size() || m > worst;
            if (!take && m == worst)
                take = std::lexicographical_compare(cones[i].begin(), cones[i].end(), cones[worst_idx].begin(),
                                                    cones[worst_idx].end(), lex_less);
            if (take) {
                worst = m;
                worst_idx = i;
            }
        }
        if (first_pass) {
            local.max_multiplicity_before = worst;
            first_pass = false;
        }
        if (worst_idx == cones.size()) break;
        if (local.star_subdivisions >= limits.max_subdivisions)
            throw std::length_error("regularize: subdivision cap exceeded");

        // minimal parallelepiped point: smallest coordinate sum, lex tie-break
        auto pts = parallelepiped_points(cones[worst_idx]);
        if (pts.empty()) throw std::logic_error("regularize: multiplicity > 1 without interior lattice point");
        const PiPoint* best = &pts[0];
        for (const auto& p : pts)
            if (p.coord_sum < best->coord_sum || (p.coord_sum == best->coord_sum && lex_less(p.point, best->point)))
                best = &p;
        ZVec w = best->point;
        make_primitive(w);

        std::vector<RaySet> next;
        for (const auto& c : cones) {
            if (std::find(c.begin(), c.end(), w) != c.end()) {
                next.push_back(c);
                continue;
            }
            auto u = simplicial_coords(c, w);
            if (!u) {
                next.push_back(c);
                continue;
            }
            for (std::size_t j = 0; j < c.size(); ++j) {
                if ((*u)[j] <= 0) continue;
                RaySet child = c;
                child[j] = w;
                next.push_back(sorted_rays(std::move(child)));
            }
        }
        cones = std::move(next);
        ++local.star_subdivisions;
    }

    if (stats) *stats = local;
    return canonical_fan(fan.dim, cones);
}

bool cone_contains(const std::vector<ZVec>& rays, const ZVec& v) {
    if (rays.empty()) throw std::invalid_argument("cone_contains: empty cone");
    const std::size_t n = rays[0].size();
    if (rays.size() == n && rank_z(rays_as_rows(rays)) == static_cast<int>(n))
        return simplicial_coords(sorted_rays(rays), v).has_value();
    for (const auto& a : dd_facets(rays))
        if (dot(a, v) < 0) return false;
    return true;
}

bool refines(const Fan& fine, const Fan& coarse) {
    if (fine.dim != coarse.dim) throw std::invalid_argument("refines: ambient dimension mismatch");
    auto coarse_cones = materialize(coarse);
    std::vector<std::vector<ZVec>> coarse_facets;
    for (const auto& c : coarse_cones) coarse_facets.push_back(dd_facets(c));

    for (const auto& fc : materialize(fine)) {
        bool found = false;
        for (std::size_t i = 0; i < coarse_cones.size() && !found; ++i) {
            bool inside = true;
            for (const auto& a : coarse_facets[i]) {
                for (const auto& r : fc)
                    if (dot(a, r) < 0) {
                        inside = false;
                        break;
                    }
                if (!inside) break;
            }
            found = inside;
        }
        if (!found) return false;
    }
    return true;
}

std::vector<std::string> fan_support_violations(const Fan& fan) {
    std::vector<std::string> out;
    const std::size_t n = static_cast<std::size_t>(fan.dim);
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        const ZVec& r = fan.rays[i];
        if (r.size() != n) {
            out.push_back("ray " + std::to_string(i) + " has wrong dimension");
            continue;
        }
        if (is_zero_vec(r)) out.push_back("ray " + std::to_string(i) + " is zero");
        ZVec copy = r;
        make_primitive(copy);
        if (copy != r) out.push_back("ray " + std::to_string(i) + " is not primitive");
        for (const Z& x : r)
            if (x < 0) {
                out.push_back("ray " + std::to_string(i) + " has a negative entry");
                break;
            }
    }

    std::map<std::vector<std::size_t>, int> wall_count;
    auto cones = materialize(fan);
    for (std::size_t ci = 0; ci < cones.size(); ++ci) {
        const auto& c = cones[ci];
        if (rank_z(rays_as_rows(c)) != fan.dim) {
            out.push_back("cone " + std::to_string(ci) + " is not full-dimensional");
            continue;
        }
        for (const auto& a : dd_facets(c)) {
            std::vector<ZVec> wall;
            for (const auto& r : c)
                if (dot(a, r) == 0) wall.push_back(r);
            std::sort(wall.begin(), wall.end(), lex_less);
            std::vector<std::size_t> key;
            for (const auto& r : wall) {
                auto it = std::lower_bound(fan.rays.begin(), fan.rays.end(), r, lex_less);
                key.push_back(static_cast<std::size_t>(it - fan.rays.begin()));
            }
            ++wall_count[key];
        }
    }
    for (const auto& [key, count] : wall_count) {
        bool boundary = false;
        for (std::size_t i = 0; i < n && !boundary; ++i) {
            bool all_zero = true;
            for (auto ri : key)
                if (fan.rays[ri][i] != 0) {
                    all_zero = false;
                    break;
                }
            boundary = all_zero;
        }
        if (boundary && count != 1)
            out.push_back("boundary wall shared by " + std::to_string(count) + " cones (expected 1)");
        if (!boundary && count != 2)
            out.push_back("interior wall shared by " + std::to_string(count) + " cones (expected 2)");
    }
    return out;
}

}  // namespace nplc
