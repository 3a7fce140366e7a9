// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "nondegen.hpp"

#include "linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace nplc {

namespace {

std::vector<int> appearing_vars(const Poly& g) {
    std::vector<int> out;
    for (int i = 1; i <= g.nvars(); ++i) {
        bool seen = false;
        for (const auto& [e, c] : g.terms())
            if (e[static_cast<std::size_t>(i - 1)] != 0) {
                seen = true;
                break;
            }
        if (seen) out.push_back(i);
    }
    return out;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// ---- univariate helpers for the exact mode ---------------------------------

using UniPoly = std::vector<Q>;  // coefficients, index = degree

int uni_degree(const UniPoly& q) {
    for (int d = static_cast<int>(q.size()) - 1; d >= 0; --d)
        if (q[static_cast<std::size_t>(d)] != 0) return d;
    return -1;
}

UniPoly uni_trim(UniPoly q) {
    q.resize(static_cast<std::size_t>(uni_degree(q) + 1));
    return q;
}

UniPoly uni_derivative(const UniPoly& q) {
    UniPoly d;
    for (std::size_t i = 1; i < q.size(); ++i) d.push_back(q[i] * Q(i));
    return uni_trim(d);
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    int db = uni_degree(b);
    if (db < 0) throw std::invalid_argument("uni_rem: division by zero");
    while (uni_degree(a) >= db) {
        int da = uni_degree(a);
        Q f = a[static_cast<std::size_t>(da)] / b[static_cast<std::size_t>(db)];
        for (int i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(da - db + i)] -= f * b[static_cast<std::size_t>(i)];
        a[static_cast<std::size_t>(da)] = 0;  // kill rounding of the cancelled lead
        a = uni_trim(a);
        if (a.empty()) break;
    }
    return a;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    a = uni_trim(std::move(a));
    b = uni_trim(std::move(b));
    while (uni_degree(b) >= 0) {
        UniPoly r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (uni_degree(a) >= 0) {
        Q lead = a[static_cast<std::size_t>(uni_degree(a))];
        for (Q& c : a) c /= lead;
    }
    return a;
}

Q uni_eval(const UniPoly& q, const Q& s) {
    Q r = 0;
    for (int d = uni_degree(q); d >= 0; --d) r = r * s + q[static_cast<std::size_t>(d)];
    return r;
}

/// Integer-cleared coefficients (content stripped).
ZVec uni_to_int(const UniPoly& q) {
    Z lcm = 1;
    for (const Q& c : q) lcm = boost::multiprecision::lcm(lcm, denominator(c));
    ZVec out;
    for (const Q& c : q) out.push_back(Z(numerator(c) * (lcm / denominator(c))));
    Z g = vec_gcd(out);
    if (g > 1)
        for (Z& x : out) x /= g;
    return out;
}

std::vector<Z> divisors_of(const Z& n_in) {
    Z n = n_in < 0 ? Z(-n_in) : n_in;
    std::vector<Z> out;
    if (n == 0 || n > 1000000000) return out;  // caller falls back to a prime hunt
    for (Z d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Rational roots of a nonzero integer-coefficient polynomial.
std::vector<Q> rational_roots(const ZVec& coeffs) {
    std::vector<Q> roots;
    int deg = -1, low = -1;
    for (int i = 0; i < static_cast<int>(coeffs.size()); ++i)
        if (coeffs[static_cast<std::size_t>(i)] != 0) {
            if (low < 0) low = i;
            deg = i;
        }
    if (deg <= 0) return roots;
    UniPoly q(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) q[i] = Q(coeffs[i]);
    for (const Z& p : divisors_of(coeffs[static_cast<std::size_t>(low)])) {
        for (const Z& d : divisors_of(coeffs[static_cast<std::size_t>(deg)])) {
            for (int sign : {1, -1}) {
                Q cand(sign * p, d);
                if (cand == 0) continue;
                if (uni_eval(q, cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Witness x with x^e = s for primitive e: x_i = s^{w_i}, <e,w> = 1.
QVec witness_from_parameter(const ZVec& e, const Q& s, std::size_t nvars) {
    ZVec w = gcd_combination(e);
    QVec x(nvars, Q(1));
    for (std::size_t i = 0; i < nvars; ++i) {
        Z wi = w[i];
        Q v = 1;
        Z k = wi < 0 ? Z(-wi) : wi;
        for (Z j = 0; j < k; ++j) v *= s;
        x[i] = wi < 0 ? Q(1) / v : v;
    }
    return x;
}

struct EdgeData {
    Exponent base;           // u
    ZVec direction;          // primitive e
    UniPoly q;               // face polynomial along the edge
    bool dependent = false;  // u parallel to e (single-equation case)
};

std::optional<EdgeData> edge_decompose(const Poly& g) {
    std::vector<Exponent> supp;
    for (const auto& [e, c] : g.terms()) supp.push_back(e);
    std::sort(supp.begin(), supp.end());
    const std::size_t n = supp[0].size();
    EdgeData ed;
    ed.base = supp.front();
    ZVec dir(n);
    for (std::size_t i = 0; i < n; ++i) dir[i] = Z(supp.back()[i]) - Z(ed.base[i]);
    make_primitive(dir);
    // pick a coordinate to read the step parameter from
    std::size_t pivot = 0;
    while (pivot < n && dir[pivot] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::vector<std::pair<std::int64_t, Q>> steps;
    std::int64_t maxj = 0;
    for (const auto& [e, c] : g.terms()) {
        Z num = Z(e[pivot]) - Z(ed.base[pivot]);
        if (num % dir[pivot] != 0) return std::nullopt;
        Z j = num / dir[pivot];
        // consistency across all coordinates
        for (std::size_t i = 0; i < n; ++i)
            if (Z(e[i]) != Z(ed.base[i]) + j * dir[i]) return std::nullopt;
        if (j < 0) return std::nullopt;
        std::int64_t jj = to_int64(j);
        steps.emplace_back(jj, c);
        maxj = std::max(maxj, jj);
    }
    ed.direction = std::move(dir);
    ed.q.assign(static_cast<std::size_t>(maxj + 1), Q(0));
    for (auto& [j, c] : steps) ed.q[static_cast<std::size_t>(j)] = c;
    ZMat ue;
    ZVec u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = ed.base[i];
    ue.push_back(u);
    ue.push_back(ed.direction);
    ed.dependent = rank_z(ue) <= 1;
    return ed;
}

std::optional<TorusWitness> concrete_witness_from_uni(const Poly& g, const ZVec& e, const UniPoly& roots_of,
                                                      const SearchConfig& cfg) {
    // rational roots first
    ZVec zc = uni_to_int(roots_of);
    for (const Q& s : rational_roots(zc)) {
        TorusWitness w;
        w.prime = 0;
        w.values = witness_from_parameter(e, s, static_cast<std::size_t>(g.nvars()));
        if (verify_witness(g, w)) return w;
    }
    // hunt a root over small prime fields
    std::vector<std::uint32_t> primes = cfg.primes;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u})
        primes.push_back(p);
    for (std::uint32_t p : primes) {
        for (std::uint32_t s = 1; s < p; ++s) {
            Z val = 0;
            for (int d = uni_degree(roots_of); d >= 0; --d) {
                const Q& c = roots_of[static_cast<std::size_t>(d)];
                Z den = denominator(c) % p;
                if (den == 0) {
                    val = 1;
                    break;
                }  // skip this prime via nonzero sentinel
                Z num = numerator(c) % p;
                Z inv = Z(pow_mod(static_cast<std::uint64_t>(to_int64((den + p) % p)), p - 2, p));
                val = (val * s + num * inv) % p;
            }
            if (val % p != 0) continue;
            // x_i = s^{w_i} mod p
            ZVec w = gcd_combination(e);
            TorusWitness tw;
            tw.prime = p;
            tw.values.assign(static_cast<std::size_t>(g.nvars()), Q(1));
            for (std::size_t i = 0; i < w.size(); ++i) {
                Z ex = w[i] % (p - 1);
                if (ex < 0) ex += (p - 1);
                tw.values[i] = Q(pow_mod(s, static_cast<std::uint64_t>(to_int64(ex)), p));
            }
            if (verify_witness(g, tw)) return tw;
        }
    }
    return std::nullopt;
}

}  // namespace

bool verify_witness(const Poly& g, const TorusWitness& w) {
    if (w.values.size() != static_cast<std::size_t>(g.nvars())) return false;
    for (int i = 1; i <= g.nvars(); ++i) {
        Poly d = log_derivative(g, i);
        if (w.prime == 0) {
            Q acc = 0;
            for (const auto& [e, c] : d.terms()) {
                Q term = c;
                for (std::size_t k = 0; k < e.size(); ++k)
                    for (std::int64_t j = 0; j < e[k]; ++j) term *= w.values[k];
                acc += term;
            }
            if (acc != 0) return false;
        } else {
            const std::uint32_t p = w.prime;
            std::uint64_t acc = 0;
            PolyModP dm = mod_p_reduce(d, p);
            for (const auto& [e, c] : dm.terms) {
                std::uint64_t term = c;
                for (std::size_t k = 0; k < e.size(); ++k) {
                    std::uint64_t base = static_cast<std::uint64_t>(to_int64(numerator(w.values[k]))) % p;
                    term = term * pow_mod(base, static_cast<std::uint64_t>(e[k]) % (p - 1), p) % p;
                }
                acc = (acc + term) % p;
            }
            if (acc != 0) return false;
        }
    }
    // witness must be a torus point
    for (const Q& v : w.values)
        if (v == 0) return false;
    return true;
}

TorusSearchResult torus_critical_search_ff(const Poly& g, const SearchConfig& cfg) {
    if (g.is_zero()) throw std::invalid_argument("torus_critical_search: zero polynomial");
    TorusSearchResult res;
    const int n = g.nvars();
    std::vector<int> vars = appearing_vars(g);
    const std::size_t k = vars.size();
    if (k == 0) {
        // constant: every log-derivative vanishes identically
        TorusWitness w;
        w.prime = 0;
        w.values.assign(static_cast<std::size_t>(n), Q(1));
        for (int i = 1; i <= n; ++i) w.free_vars.push_back(i);
        res.witness = std::move(w);
        res.decided_exactly = true;
        return res;
    }

    std::vector<Poly> derivs;
    for (int i : vars) derivs.push_back(log_derivative(g, i));

    for (std::uint32_t p : cfg.primes) {
        // evaluation budget
        std::uint64_t points = 1;
        bool too_big = false;
        for (std::size_t i = 0; i < k; ++i) {
            points *= (p - 1);
            if (points > cfg.max_evaluations_per_face) {
                too_big = true;
                break;
            }
        }
        if (too_big) {
            res.budget_exceeded = true;
            continue;
        }

        std::vector<PolyModP> dmods;
        bool skip_prime = false;
        try {
            for (const Poly& d : derivs) dmods.push_back(mod_p_reduce(d, p));
        } catch (const std::invalid_argument&) {
            skip_prime = true;  // a denominator collapses mod p
        }
        if (skip_prime) {
            res.note += "prime " + std::to_string(p) + " skipped (denominator); ";
            continue;
        }

        // compact exponents to the appearing variables, reduced mod p-1
        struct FlatPoly {
            std::vector<std::vector<std::uint32_t>> exps;
            std::vector<std::uint32_t> coeffs;
        };
        std::vector<FlatPoly> flat;
        std::uint32_t maxe = 0;
        for (const auto& dm : dmods) {
            FlatPoly fp;
            for (const auto& [e, c] : dm.terms) {
                std::vector<std::uint32_t> ce(k);
                for (std::size_t i = 0; i < k; ++i) {
                    std::uint32_t red = static_cast<std::uint32_t>(e[static_cast<std::size_t>(vars[i] - 1)] % (p - 1));
                    ce[i] = red;
                    maxe = std::max(maxe, red);
                }
                fp.exps.push_back(std::move(ce));
                fp.coeffs.push_back(c);
            }
            flat.push_back(std::move(fp));
        }

        std::vector<std::vector<std::uint32_t>> pw(p, std::vector<std::uint32_t>(maxe + 1, 1));
        for (std::uint32_t v = 0; v < p; ++v)
            for (std::uint32_t e = 1; e <= maxe; ++e)
                pw[v][e] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(pw[v][e - 1]) * v % p);

        std::vector<std::uint32_t> point(k, 1);
        while (true) {
            bool all_zero = true;
            for (const auto& fp : flat) {
                if (fp.exps.empty()) continue;  // derivative vanished mod p: unconstraining
                std::uint64_t acc = 0;
                for (std::size_t t = 0; t < fp.exps.size(); ++t) {
                    std::uint64_t term = fp.coeffs[t];
                    for (std::size_t i = 0; i < k; ++i) term = term * pw[point[i]][fp.exps[t][i]] % p;
                    acc = (acc + term) % p;
                }
                if (acc != 0) {
                    all_zero = false;
                    break;
                }
            }
            if (all_zero) {
                TorusWitness w;
                w.prime = p;
                w.values.assign(static_cast<std::size_t>(n), Q(1));
                for (std::size_t i = 0; i < k; ++i) w.values[static_cast<std::size_t>(vars[i] - 1)] = Q(point[i]);
                for (int i = 1; i <= n; ++i)
                    if (std::find(vars.begin(), vars.end(), i) == vars.end()) w.free_vars.push_back(i);
                res.witness = std::move(w);
                res.primes_scanned.push_back(p);
                return res;
            }
            std::size_t i = k;
            bool done = true;
            while (i > 0) {
                --i;
                if (++point[i] < p) {
                    done = false;
                    break;
                }
                point[i] = 1;
            }
            if (done) break;
        }
        res.primes_scanned.push_back(p);
    }
    return res;
}

TorusSearchResult torus_critical_search_exact(const Poly& g, const SearchConfig& cfg) {
    if (g.is_zero()) throw std::invalid_argument("torus_critical_search: zero polynomial");
    TorusSearchResult res;
    const std::size_t n = static_cast<std::size_t>(g.nvars());

    if (g.term_count() == 1) {
        const auto& [e, c] = *g.terms().begin();
        bool constant = true;
        for (auto x : e)
            if (x != 0) constant = false;
        res.decided_exactly = true;
        if (constant) {
            TorusWitness w;
            w.prime = 0;
            w.values.assign(n, Q(1));
            for (int i = 1; i <= g.nvars(); ++i) w.free_vars.push_back(i);
            res.witness = std::move(w);
            res.note = "constant face polynomial: all log-derivatives vanish identically";
        }
        return res;  // a genuine monomial has no critical torus point
    }

    // disjoint pure powers: every term is c * x_i^k with distinct i, so
    // each log-derivative is a single never-vanishing monomial
    {
        bool disjoint_pure = true;
        std::vector<bool> used(static_cast<std::size_t>(g.nvars()), false);
        for (const auto& [e, c] : g.terms()) {
            int nz = -1;
            for (std::size_t i = 0; i < e.size() && disjoint_pure; ++i) {
                if (e[i] == 0) continue;
                if (nz >= 0) disjoint_pure = false;
                nz = static_cast<int>(i);
            }
            if (!disjoint_pure || nz < 0) {
                disjoint_pure = false;
                break;
            }
            if (used[static_cast<std::size_t>(nz)]) {
                disjoint_pure = false;
                break;
            }
            used[static_cast<std::size_t>(nz)] = true;
        }
        if (disjoint_pure) {
            res.decided_exactly = true;
            res.note = "disjoint pure powers: each log-derivative is a single torus-nonvanishing monomial";
            return res;
        }
    }

    auto ed = edge_decompose(g);
    if (!ed) return res;  // parameter rank >= 2: not handled exactly

    res.decided_exactly = true;
    const UniPoly& q = ed->q;
    if (!ed->dependent) {
        // need a common nonzero root of q and q'
        UniPoly gcd_q = uni_gcd(q, uni_derivative(q));
        if (uni_degree(gcd_q) < 1) return res;  // squarefree along the edge: nondegenerate
        auto w = concrete_witness_from_uni(g, ed->direction, gcd_q, cfg);
        if (w) {
            res.witness = std::move(w);
        } else {
            res.decided_exactly = false;
            res.note = "degenerate along the edge but no witness realized over the tested fields";
        }
        return res;
    }

    // single-equation case: u = mu * e; roots of u_i q + e_i s q'
    std::size_t piv = 0;
    while (piv < n && ed->direction[piv] == 0) ++piv;
    UniPoly r(q.size() + 1, Q(0));
    for (std::size_t d = 0; d < q.size(); ++d) {
        r[d] += Q(ed->base[piv]) * q[d];
        if (d >= 1) r[d] += Q(ed->direction[piv]) * Q(d) * q[d];  // s*q' contributes d*c_d at degree d
    }
    r = uni_trim(r);
    int deg = uni_degree(r);
    if (deg < 0) {
        // identically zero: every torus value of the parameter works
        TorusWitness w;
        w.prime = 0;
        w.values = witness_from_parameter(ed->direction, Q(1), n);
        if (verify_witness(g, w)) {
            res.witness = std::move(w);
            return res;
        }
        res.decided_exactly = false;
        return res;
    }
    int low = 0;
    while (r[static_cast<std::size_t>(low)] == 0) ++low;
    if (deg == low) return res;  // c*s^k: no nonzero root, nondegenerate
    auto w = concrete_witness_from_uni(g, ed->direction, r, cfg);
    if (w) {
        res.witness = std::move(w);
    } else {
        res.decided_exactly = false;
        res.note = "degenerate along the edge but no witness realized over the tested fields";
    }
    return res;
}

NondegeneracyVerdict check_nondegenerate(const Poly& f, const SearchConfig& cfg) {
    if (f.is_zero()) throw std::invalid_argument("check_nondegenerate: zero polynomial");
    NewtonPolyhedron np = newton_polyhedron(f);
    std::vector<CompactFace> faces = compact_face_lattice(np);

    NondegeneracyVerdict v;
    v.all_faces_exact = true;
    bool any_unknown = false;

    for (const CompactFace& cf : faces) {
        FaceCheckLog log;
        log.face = cf;
        for (auto vi : cf.vertex_indices) log.face_vertices.push_back(np.vertices[vi]);
        log.face_polynomial = face_poly(f, np, cf);

        TorusSearchResult r = torus_critical_search_exact(log.face_polynomial, cfg);
        if (r.decided_exactly || r.witness) {
            log.mode = "exact";
        } else {
            log.mode = "finite_field";
            r = torus_critical_search_ff(log.face_polynomial, cfg);
        }
        log.decided_exactly = r.decided_exactly;
        log.budget_exceeded = r.budget_exceeded;
        log.primes_scanned = r.primes_scanned;
        log.note = r.note;
        if (r.witness && !verify_witness(log.face_polynomial, *r.witness))
            throw std::logic_error("check_nondegenerate: witness failed re-verification");
        log.witness = r.witness;

        if (!log.decided_exactly) v.all_faces_exact = false;
        if (!log.witness && !log.decided_exactly && (log.budget_exceeded || log.primes_scanned.empty()))
            any_unknown = true;
        v.faces.push_back(std::move(log));
    }

    for (std::size_t i = 0; i < v.faces.size(); ++i) {
        if (v.faces[i].witness) {
            v.status = NondegenStatus::Degenerate;
            v.witness_face = i;
            v.confidence = "verified witness on a compact face";
            return v;
        }
    }
    if (any_unknown) {
        v.status = NondegenStatus::Unknown;
        v.confidence = "some faces exceeded the search budget";
        return v;
    }
    v.status = NondegenStatus::Nondegenerate;
    if (v.all_faces_exact) {
        v.confidence = "all compact faces decided exactly";
    } else {
        std::string ps;
        for (auto p : cfg.primes) ps += (ps.empty() ? "" : ", ") + std::to_string(p);
        v.confidence = "no witness over F_p for p in {" + ps + "} (probabilistic)";
    }
    return v;
}

}  // namespace nplc
