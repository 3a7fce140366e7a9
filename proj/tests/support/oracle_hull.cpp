// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "oracle_hull.hpp"

#include "linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nplc::testing {

namespace {

/// Null-space vector of n-1 independent rows via cofactor expansion.
ZVec cross_normal(const ZMat& rows, std::size_t n) {
    ZVec v(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        ZMat minor;
        for (const auto& r : rows) {
            ZVec m;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) m.push_back(r[k]);
            minor.push_back(std::move(m));
        }
        Z d = det_z(minor);
        v[j] = (j % 2 == 0) ? d : -d;
    }
    return v;
}

}  // namespace

std::vector<OracleFacet> oracle_newton_facets(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("oracle: zero polynomial");
    const std::size_t n = static_cast<std::size_t>(f.nvars());
    std::vector<Exponent> supp;
    for (const auto& [e, c] : f.terms()) supp.push_back(e);

    std::set<ZVec, decltype([](const ZVec& a, const ZVec& b) { return lex_less(a, b); })> candidates;

    // coordinate directions are always candidate normals
    for (std::size_t i = 0; i < n; ++i) {
        ZVec e(n, 0);
        e[i] = 1;
        candidates.insert(e);
    }

    if (n >= 2) {
        // choose a base point, k-1 further points and n-k coordinate
        // directions; the normal spans the null space when independent
        const std::size_t np = supp.size();
        auto process = [&](const std::vector<std::size_t>& ps) {
            const std::size_t k = ps.size();
            if (k < 1 || k > n) return;
            const std::size_t dirs_needed = n - k;
            // all coordinate-direction subsets of that size
            std::vector<std::size_t> dir_idx(dirs_needed);
            for (std::size_t i = 0; i < dirs_needed; ++i) dir_idx[i] = i;
            while (true) {
                ZMat rows;
                for (std::size_t i = 1; i < k; ++i) {
                    ZVec d(n);
                    for (std::size_t c = 0; c < n; ++c) d[c] = Z(supp[ps[i]][c]) - Z(supp[ps[0]][c]);
                    rows.push_back(std::move(d));
                }
                for (std::size_t i = 0; i < dirs_needed; ++i) {
                    ZVec e(n, 0);
                    e[dir_idx[i]] = 1;
                    rows.push_back(std::move(e));
                }
                if (rows.size() == n - 1 && rank_z(rows) == static_cast<int>(n - 1)) {
                    ZVec v = cross_normal(rows, n);
                    if (!is_zero_vec(v)) {
                        make_primitive(v);
                        bool nonneg = true, nonpos = true;
                        for (const Z& x : v) {
                            if (x < 0) nonneg = false;
                            if (x > 0) nonpos = false;
                        }
                        if (nonpos)
                            for (Z& x : v) x = -x;
                        if (nonneg || nonpos) candidates.insert(v);
                    }
                }
                if (dirs_needed == 0) break;
                std::size_t i = dirs_needed;
                bool done = true;
                while (i > 0) {
                    --i;
                    if (dir_idx[i] != i + n - dirs_needed) {
                        ++dir_idx[i];
                        for (std::size_t j = i + 1; j < dirs_needed; ++j) dir_idx[j] = dir_idx[j - 1] + 1;
                        done = false;
                        break;
                    }
                }
                if (done) break;
            }
        };
        // enumerate point subsets of size 1..n
        std::vector<std::size_t> stack;
        auto rec = [&](auto&& self, std::size_t start) -> void {
            if (!stack.empty()) process(stack);
            if (stack.size() == n) return;
            for (std::size_t i = start; i < np; ++i) {
                stack.push_back(i);
                self(self, i + 1);
                stack.pop_back();
            }
        };
        rec(rec, 0);
    }

    std::vector<OracleFacet> out;
    for (const ZVec& v : candidates) {
        Z c;
        bool first = true;
        for (const auto& a : supp) {
            Z s = exponent_dot(a, v);
            if (first || s < c) {
                c = s;
                first = false;
            }
        }
        // minimizing face: achieving points plus free coordinate rays
        std::vector<Exponent> achievers;
        for (const auto& a : supp)
            if (exponent_dot(a, v) == c) achievers.push_back(a);
        ZMat span;
        for (std::size_t i = 1; i < achievers.size(); ++i) {
            ZVec d(n);
            for (std::size_t k = 0; k < n; ++k) d[k] = Z(achievers[i][k]) - Z(achievers[0][k]);
            span.push_back(std::move(d));
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (v[i] != 0) continue;
            ZVec e(n, 0);
            e[i] = 1;
            span.push_back(std::move(e));
        }
        if (span.empty() || rank_z(span) != static_cast<int>(n - 1)) continue;
        OracleFacet fct;
        fct.normal = v;
        fct.height = c;
        fct.compact = true;
        for (const Z& x : v)
            if (x <= 0) fct.compact = false;
        out.push_back(std::move(fct));
    }
    std::sort(out.begin(), out.end(), [](const OracleFacet& a, const OracleFacet& b) {
        if (a.normal != b.normal) return lex_less(a.normal, b.normal);
        return a.height < b.height;
    });
    return out;
}

std::string compare_with_oracle(const Poly& f, const NewtonPolyhedron& np) {
    std::vector<OracleFacet> oracle = oracle_newton_facets(f);
    if (oracle.size() != np.facets.size())
        return "facet count mismatch: oracle " + std::to_string(oracle.size()) + ", dd " +
               std::to_string(np.facets.size());
    for (std::size_t i = 0; i < oracle.size(); ++i) {
        if (oracle[i].normal != np.facets[i].normal) return "normal mismatch at index " + std::to_string(i);
        if (oracle[i].height != np.facets[i].height) return "height mismatch at index " + std::to_string(i);
        if (oracle[i].compact != np.facets[i].compact) return "compactness mismatch at index " + std::to_string(i);
    }
    return "";
}

}  // namespace nplc::testing
