// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "polyhedron.hpp"

#include "linalg.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <set>
#include <stdexcept>

namespace nplc {

namespace {

constexpr std::size_t kMaxInequalities = 128;
using ZeroSet = std::bitset<kMaxInequalities>;

struct DDRay {
    ZVec dir;
    ZeroSet zero;
};

}  // namespace

std::vector<ZVec> polar_extreme_rays(const std::vector<ZVec>& generators) {
    if (generators.empty()) throw std::invalid_argument("polar_extreme_rays: empty generator set");
    const std::size_t d = generators[0].size();

    // canonicalize: primitive, deduplicated, lexicographic insertion order
    std::set<ZVec, decltype([](const ZVec& a, const ZVec& b) { return lex_less(a, b); })> uniq;
    for (ZVec g : generators) {
        if (g.size() != d) throw std::invalid_argument("polar_extreme_rays: mixed dimensions");
        if (is_zero_vec(g)) continue;
        make_primitive(g);
        uniq.insert(std::move(g));
    }
    std::vector<ZVec> ineq(uniq.begin(), uniq.end());
    if (ineq.empty()) throw std::invalid_argument("polar_extreme_rays: no nonzero generators");
    if (ineq.size() > kMaxInequalities) throw std::invalid_argument("polar_extreme_rays: too many generators");

    // greedy seed: first d linearly independent inequalities
    std::vector<std::size_t> seed;
    ZMat seed_rows;
    for (std::size_t i = 0; i < ineq.size() && seed.size() < d; ++i) {
        seed_rows.push_back(ineq[i]);
        if (rank_z(seed_rows) == static_cast<int>(seed.size()) + 1)
            seed.push_back(i);
        else
            seed_rows.pop_back();
    }
    if (seed.size() != d)
        throw std::invalid_argument("polar_extreme_rays: generators do not span the ambient space");

    std::vector<DDRay> rays;
    for (std::size_t i = 0; i < d; ++i) {
        ZVec rhs(d, 0);
        rhs[i] = 1;
        QVec x = solve_q(seed_rows, rhs);
        Z lcm = 1;
        for (const Q& q : x) lcm = boost::multiprecision::lcm(lcm, denominator(q));
        ZVec w(d);
        for (std::size_t j = 0; j < d; ++j) w[j] = Z(numerator(x[j]) * (lcm / denominator(x[j])));
        make_primitive(w);
        DDRay r;
        r.dir = std::move(w);
        for (std::size_t k = 0; k < d; ++k)
            if (k != i) r.zero.set(seed[k]);
        rays.push_back(std::move(r));
    }

    for (std::size_t t = 0; t < ineq.size(); ++t) {
        if (std::find(seed.begin(), seed.end(), t) != seed.end()) continue;
        const ZVec& a = ineq[t];
        std::vector<std::size_t> pos, zero, neg;
        std::vector<Z> val(rays.size());
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = dot(a, rays[r].dir);
            if (val[r] > 0)
                pos.push_back(r);
            else if (val[r] < 0)
                neg.push_back(r);
            else
                zero.push_back(r);
        }
        if (neg.empty()) {
            for (auto r : zero) rays[r].zero.set(t);
            continue;
        }
        std::vector<DDRay> next;
        for (auto r : pos) next.push_back(rays[r]);
        for (auto r : zero) {
            next.push_back(rays[r]);
            next.back().zero.set(t);
        }
        for (auto rp : pos) {
            for (auto rm : neg) {
                ZeroSet common = rays[rp].zero & rays[rm].zero;
                // combinatorial adjacency: no third ray is tight on all
                // common constraints
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size(); ++r) {
                    if (r == rp || r == rm) continue;
                    if ((common & ~rays[r].zero).none()) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                DDRay nr;
                nr.dir.resize(d);
                for (std::size_t j = 0; j < d; ++j)
                    nr.dir[j] = val[rp] * rays[rm].dir[j] - val[rm] * rays[rp].dir[j];
                make_primitive(nr.dir);
                nr.zero = common;
                nr.zero.set(t);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
    }

    std::vector<ZVec> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.dir));
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ZVec> dd_facets(const std::vector<ZVec>& generators, bool homogenized) {
    (void)homogenized;
    return polar_extreme_rays(generators);
}

NewtonPolyhedron newton_polyhedron(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("newton_polyhedron: zero polynomial");
    const int n = f.nvars();
    const std::size_t un = static_cast<std::size_t>(n);

    std::vector<ZVec> gens;
    for (const auto& [e, c] : f.terms()) {
        ZVec g(un + 1);
        for (std::size_t i = 0; i < un; ++i) g[i] = e[i];
        g[un] = 1;
        gens.push_back(std::move(g));
    }
    for (std::size_t i = 0; i < un; ++i) {
        ZVec g(un + 1, 0);
        g[i] = 1;
        gens.push_back(std::move(g));
    }

    NewtonPolyhedron np;
    np.nvars = n;
    np.axis_condition_ok = axis_condition(f);

    for (const ZVec& cone_normal : dd_facets(gens, true)) {
        ZVec v(cone_normal.begin(), cone_normal.begin() + n);
        if (is_zero_vec(v)) continue;  // horizon facet of the homogenization
        HalfSpace hs;
        hs.normal = std::move(v);
        hs.height = -cone_normal[un];
        hs.compact = true;
        for (const Z& x : hs.normal)
            if (x <= 0) hs.compact = false;
        np.facets.push_back(std::move(hs));
    }
    std::sort(np.facets.begin(), np.facets.end(), [](const HalfSpace& a, const HalfSpace& b) {
        if (a.normal != b.normal) return lex_less(a.normal, b.normal);
        return a.height < b.height;
    });
    for (std::size_t j = 0; j < np.facets.size(); ++j)
        if (np.facets[j].compact) np.compact_facet_indices.push_back(j);

    // vertices: support points with n linearly independent tight facets
    for (const auto& [e, c] : f.terms()) {
        ZMat active;
        for (const auto& hs : np.facets)
            if (exponent_dot(e, hs.normal) == hs.height) active.push_back(hs.normal);
        if (!active.empty() && rank_z(active) == n) np.vertices.push_back(e);
    }
    std::sort(np.vertices.begin(), np.vertices.end());
    return np;
}

std::vector<CompactFace> compact_face_lattice(const NewtonPolyhedron& np) {
    const std::size_t nf = np.facets.size();
    const std::size_t nv = np.vertices.size();

    // face data: (sorted vertex index set, recession coordinate set)
    using Key = std::pair<std::vector<std::size_t>, std::vector<int>>;
    std::set<Key> faces;
    std::vector<Key> frontier;
    for (std::size_t j = 0; j < nf; ++j) {
        Key k;
        for (std::size_t i = 0; i < nv; ++i)
            if (exponent_dot(np.vertices[i], np.facets[j].normal) == np.facets[j].height)
                k.first.push_back(i);
        for (int i = 0; i < np.nvars; ++i)
            if (np.facets[j].normal[static_cast<std::size_t>(i)] == 0) k.second.push_back(i);
        if (k.first.empty()) continue;
        if (faces.insert(k).second) frontier.push_back(k);
    }
    // close under intersection
    std::vector<Key> all(faces.begin(), faces.end());
    while (!frontier.empty()) {
        std::vector<Key> next;
        for (const Key& a : frontier) {
            for (const Key& b : all) {
                Key k;
                std::set_intersection(a.first.begin(), a.first.end(), b.first.begin(), b.first.end(),
                                      std::back_inserter(k.first));
                std::set_intersection(a.second.begin(), a.second.end(), b.second.begin(), b.second.end(),
                                      std::back_inserter(k.second));
                if (k.first.empty()) continue;
                if (faces.insert(k).second) next.push_back(k);
            }
        }
        for (const Key& k : next) all.push_back(k);
        frontier = std::move(next);
    }

    std::vector<CompactFace> out;
    for (const Key& k : faces) {
        if (!k.second.empty()) continue;  // unbounded face
        CompactFace cf;
        cf.vertex_indices = k.first;
        ZMat diffs;
        for (std::size_t i = 1; i < k.first.size(); ++i) {
            ZVec d(static_cast<std::size_t>(np.nvars));
            for (std::size_t j = 0; j < d.size(); ++j)
                d[j] = Z(np.vertices[k.first[i]][j]) - Z(np.vertices[k.first[0]][j]);
            diffs.push_back(std::move(d));
        }
        cf.dimension = diffs.empty() ? 0 : rank_z(diffs);
        for (std::size_t j = 0; j < nf; ++j) {
            bool tight = true;
            for (std::size_t vi : k.first)
                if (exponent_dot(np.vertices[vi], np.facets[j].normal) != np.facets[j].height) {
                    tight = false;
                    break;
                }
            if (tight) cf.facet_indices.push_back(j);
        }
        out.push_back(std::move(cf));
    }
    std::sort(out.begin(), out.end(), [](const CompactFace& a, const CompactFace& b) {
        if (a.dimension != b.dimension) return a.dimension < b.dimension;
        return a.vertex_indices < b.vertex_indices;
    });
    return out;
}

Poly face_poly(const Poly& f, const NewtonPolyhedron& np, const CompactFace& face) {
    ZVec v(static_cast<std::size_t>(np.nvars), 0);
    Z c = 0;
    for (std::size_t j : face.facet_indices) {
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += np.facets[j].normal[i];
        c += np.facets[j].height;
    }
    return face_part(f, v, c);
}

Z height(const NewtonPolyhedron& np, const ZVec& v) {
    if (v.size() != static_cast<std::size_t>(np.nvars)) throw std::invalid_argument("height: dimension mismatch");
    for (const Z& x : v)
        if (x < 0) throw std::invalid_argument("height: negative entry (support value is -infinity)");
    if (np.vertices.empty()) throw std::invalid_argument("height: polyhedron has no vertices");
    bool first = true;
    Z best = 0;
    for (const auto& vert : np.vertices) {
        Z s = exponent_dot(vert, v);
        if (first || s < best) {
            best = s;
            first = false;
        }
    }
    return best;
}

bool member(std::span<const HalfSpace> halfspaces, const QVec& point, const Q& a) {
    if (a < 0) throw std::invalid_argument("member: dilation must be >= 0");
    for (const Q& x : point)
        if (x < 0) return false;
    if (a == 0) return true;
    for (const auto& hs : halfspaces) {
        if (hs.normal.size() != point.size()) throw std::invalid_argument("member: dimension mismatch");
        Q s = 0;
        for (std::size_t i = 0; i < point.size(); ++i) s += Q(hs.normal[i]) * point[i];
        if (s < a * Q(hs.height)) return false;
    }
    return true;
}

bool member(const NewtonPolyhedron& np, const QVec& point, const Q& a) {
    if (point.size() != static_cast<std::size_t>(np.nvars)) throw std::invalid_argument("member: dimension mismatch");
    std::vector<HalfSpace> compact;
    for (auto j : np.compact_facet_indices) compact.push_back(np.facets[j]);
    return member(std::span<const HalfSpace>(compact), point, a);
}

bool member_lattice(std::span<const HalfSpace> halfspaces, const Exponent& b, const Q& a) {
    if (a < 0) throw std::invalid_argument("member: dilation must be >= 0");
    for (auto x : b)
        if (x < 0) return false;
    if (a == 0) return true;
    const Z p = numerator(a), q = denominator(a);
    for (const auto& hs : halfspaces) {
        if (exponent_dot(b, hs.normal) * q < p * hs.height) return false;
    }
    return true;
}

Q filtration_value(std::span<const HalfSpace> halfspaces, const Exponent& b) {
    for (auto x : b)
        if (x < 0) throw std::invalid_argument("filtration_value: negative exponent");
    if (halfspaces.empty())
        throw std::domain_error("filtration_value: no compact facet (polyhedron is the full orthant)");
    bool first = true;
    Q best = 0;
    for (const auto& hs : halfspaces) {
        if (hs.height <= 0) throw std::domain_error("filtration_value: facet with nonpositive height");
        Q v = Q(exponent_dot(b, hs.normal), hs.height);
        if (first || v < best) {
            best = v;
            first = false;
        }
    }
    return best;
}

Q filtration_value(const NewtonPolyhedron& np, const Exponent& b) {
    std::vector<HalfSpace> compact;
    for (auto j : np.compact_facet_indices) compact.push_back(np.facets[j]);
    return filtration_value(std::span<const HalfSpace>(compact), b);
}

Delta1Region build_delta1(const NewtonPolyhedron& np, int axis) {
    if (axis < 1 || axis > np.nvars) throw std::invalid_argument("build_delta1: axis out of range");
    const std::size_t ax = static_cast<std::size_t>(axis - 1);
    Delta1Region d1;
    d1.axis = axis;
    for (std::size_t j : np.compact_facet_indices) {
        const HalfSpace& hs = np.facets[j];
        std::vector<std::size_t> on_h;
        for (std::size_t i = 0; i < np.vertices.size(); ++i) {
            if (np.vertices[i][ax] != 0) continue;
            if (exponent_dot(np.vertices[i], hs.normal) == hs.height) on_h.push_back(i);
        }
        if (on_h.empty()) continue;
        // a vertex on the hyperplane makes the facet normal and e_axis
        // extreme rays of a common dual cone, which is the selection rule;
        // a touch of dimension below n-2 is legal but worth surfacing
        d1.halfspaces.push_back(hs);
        d1.source_facets.push_back(j);
        ZMat diffs;
        for (std::size_t i = 1; i < on_h.size(); ++i) {
            ZVec d(static_cast<std::size_t>(np.nvars));
            for (std::size_t k = 0; k < d.size(); ++k)
                d[k] = Z(np.vertices[on_h[i]][k]) - Z(np.vertices[on_h[0]][k]);
            diffs.push_back(std::move(d));
        }
        int dim = diffs.empty() ? 0 : rank_z(diffs);
        if (dim != np.nvars - 2)
            d1.warnings.push_back("compact facet " + std::to_string(j) + " meets H_" + std::to_string(axis) +
                                  " only in dimension " + std::to_string(dim) +
                                  "; selected via the common-dual-cone rule");
    }
    if (d1.halfspaces.empty())
        throw std::domain_error("build_delta1: no compact facet meets H_" + std::to_string(axis) +
                                " in a facet of the boundary slice");
    return d1;
}

std::vector<Exponent> enumerate_complement(std::span<const HalfSpace> halfspaces, int nvars, const Q& a,
                                           const std::vector<AxisBound>& bounds, const EnumerationLimits& limits) {
    if (a < 0) throw std::invalid_argument("enumerate_complement: dilation must be >= 0");
    std::vector<Exponent> out;
    if (a == 0 || halfspaces.empty()) return out;  // 0-fold dilate is the whole orthant

    const std::size_t un = static_cast<std::size_t>(nvars);
    const Z p = numerator(a), q = denominator(a);

    // fast-path data (desk-scale polyhedra; conversion failure means the
    // input is far outside the intended envelope)
    struct FastHS {
        std::vector<std::int64_t> v;
        std::int64_t pc;  // num(a) * height
    };
    std::vector<FastHS> fast;
    const std::int64_t q64 = to_int64(q);
    for (const auto& hs : halfspaces) {
        if (hs.normal.size() != un) throw std::invalid_argument("enumerate_complement: dimension mismatch");
        FastHS f;
        for (const Z& x : hs.normal) {
            if (x <= 0)
                throw std::domain_error("enumerate_complement: unbounded complement (normal entry <= 0)");
            f.v.push_back(to_int64(x));
        }
        f.pc = to_int64(p * hs.height);
        fast.push_back(std::move(f));
    }

    std::vector<std::int64_t> box(un, 0);
    for (std::size_t i = 0; i < un; ++i) {
        Z bi = 0;
        for (const auto& hs : halfspaces) {
            Z cand = ceil_q(Q(p * hs.height, q * hs.normal[i]));
            if (cand > bi) bi = cand;
        }
        box[i] = to_int64(bi);
    }
    for (const auto& ab : bounds) {
        if (ab.axis < 1 || ab.axis > nvars) throw std::invalid_argument("enumerate_complement: bad bound axis");
        std::int64_t b = std::max<std::int64_t>(ab.bound, 0);
        box[static_cast<std::size_t>(ab.axis - 1)] = std::min(box[static_cast<std::size_t>(ab.axis - 1)], b);
    }

    std::uint64_t total = 1;
    for (auto b : box) {
        if (b <= 0) return out;
        total *= static_cast<std::uint64_t>(b);
        if (total > limits.max_points)
            throw std::length_error("enumerate_complement: scan box exceeds the configured point cap");
    }

    Exponent b(un, 0);
    while (true) {
        bool inside = true;
        for (const auto& f : fast) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < un; ++i) s += f.v[i] * b[i];
            if (s * q64 < f.pc) {
                inside = false;
                break;
            }
        }
        if (!inside) out.push_back(b);
        // lexicographic odometer, most significant digit first
        std::size_t i = un;
        while (i > 0) {
            --i;
            if (++b[i] < box[i]) break;
            b[i] = 0;
            if (i == 0) return out;
        }
    }
}

std::vector<Exponent> enumerate_complement(const NewtonPolyhedron& np, const Q& a, const std::vector<AxisBound>& bounds,
                                           const EnumerationLimits& limits) {
    std::vector<HalfSpace> compact;
    for (auto j : np.compact_facet_indices) compact.push_back(np.facets[j]);
    return enumerate_complement(std::span<const HalfSpace>(compact), np.nvars, a, bounds, limits);
}

std::vector<Exponent> enumerate_complement(const Delta1Region& d1, const Q& a, const std::vector<AxisBound>& bounds,
                                           const EnumerationLimits& limits) {
    if (d1.halfspaces.empty()) throw std::invalid_argument("enumerate_complement: empty region");
    return enumerate_complement(std::span<const HalfSpace>(d1.halfspaces),
                                static_cast<int>(d1.halfspaces[0].normal.size()), a, bounds, limits);
}

}  // namespace nplc
