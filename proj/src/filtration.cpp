// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "filtration.hpp"

#include "linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nplc {

MonomialSumSpace sum_space(const NewtonPolyhedron& np, const Q& a, std::vector<Exponent> ideal_gens) {
    MonomialSumSpace s;
    s.dilation = a;
    s.nvars = np.nvars;
    for (auto j : np.compact_facet_indices) s.region.push_back(np.facets[j]);
    s.ideal_gens = std::move(ideal_gens);
    return s;
}

MonomialSumSpace sum_space(const Delta1Region& d1, int nvars, const Q& a, std::vector<Exponent> ideal_gens) {
    MonomialSumSpace s;
    s.dilation = a;
    s.nvars = nvars;
    s.region = d1.halfspaces;
    s.ideal_gens = std::move(ideal_gens);
    return s;
}

Exponent axis_power(int nvars, int axis, std::int64_t k) {
    if (axis < 1 || axis > nvars) throw std::invalid_argument("axis_power: axis out of range");
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(axis - 1)] = k;
    return e;
}

Exponent diagonal_power(int nvars, std::int64_t k) { return Exponent(static_cast<std::size_t>(nvars), k); }

namespace {

bool divisible(const Exponent& e, const Exponent& gen) {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < gen[i]) return false;
    return true;
}

}  // namespace

MembershipResult in_sum_space(const Poly& p, const MonomialSumSpace& s) {
    if (p.nvars() != s.nvars) throw std::invalid_argument("in_sum_space: nvars mismatch");
    if (s.dilation < 0) throw std::invalid_argument("in_sum_space: negative dilation");
    MembershipResult res;
    res.contained = true;
    for (const auto& [e, c] : p.terms()) {
        TermCertificate cert;
        cert.exponent = e;
        if (member_lattice(std::span<const HalfSpace>(s.region), e, s.dilation)) {
            cert.branch = TermBranch::Dilate;
        } else {
            cert.branch = TermBranch::Outside;
            for (const auto& gen : s.ideal_gens)
                if (divisible(e, gen)) {
                    cert.branch = TermBranch::Ideal;
                    break;
                }
            if (cert.branch == TermBranch::Outside) res.contained = false;
        }
        res.certificates.push_back(std::move(cert));
    }
    return res;
}

std::pair<Poly, Poly> split_by_support(const Poly& p, const Q& a, const NewtonPolyhedron& np) {
    if (a < 0) throw std::invalid_argument("split_by_support: negative dilation");
    std::vector<HalfSpace> compact;
    for (auto j : np.compact_facet_indices) compact.push_back(np.facets[j]);
    Poly inside(p.nvars()), outside(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (member_lattice(std::span<const HalfSpace>(compact), e, a))
            inside.add_term(e, c);
        else
            outside.add_term(e, c);
    }
    return {std::move(inside), std::move(outside)};
}

QuotientBasis quotient_basis(const Delta1Region& d1, const Q& a, std::int64_t k,
                             const EnumerationLimits& limits) {
    QuotientBasis qb;
    qb.dilation = a;
    qb.k = k;
    qb.axis = d1.axis;
    qb.monomials = enumerate_complement(d1, a, {{d1.axis, k}}, limits);
    return qb;
}

InjectivityReport verify_injectivity(const Poly& f, std::int64_t a, std::int64_t k, int axis,
                                const EnumerationLimits& limits) {
    if (f.is_zero()) throw std::invalid_argument("verify_injectivity: zero polynomial");
    if (a < 0 || k < 1) throw std::invalid_argument("verify_injectivity: need a >= 0 and k >= 1");
    NewtonPolyhedron np = newton_polyhedron(f);
    Delta1Region d1 = build_delta1(np, axis);

    InjectivityReport rep;
    rep.a = a;
    rep.k = k;
    rep.axis = axis;

    QuotientBasis dom = quotient_basis(d1, Q(a), k, limits);
    QuotientBasis cod = quotient_basis(d1, Q(a + 1), k, limits);
    rep.domain_size = dom.monomials.size();
    rep.codomain_size = cod.monomials.size();
    rep.domain_basis = dom.monomials;

    if (dom.monomials.empty()) {
        rep.rank = 0;
        rep.injective = true;
        rep.certification = "empty domain";
        return rep;
    }

    std::map<Exponent, std::size_t> cod_index;
    for (std::size_t i = 0; i < cod.monomials.size(); ++i) cod_index.emplace(cod.monomials[i], i);

    // columns: images of domain monomials under multiplication by f,
    // reduced modulo F_1^{a+1} + (x_axis^k)
    const std::size_t rows = cod.monomials.size(), cols = dom.monomials.size();
    QMat mat(rows, QVec(cols, Q(0)));
    const std::size_t ax = static_cast<std::size_t>(axis - 1);
    for (std::size_t j = 0; j < cols; ++j) {
        const Exponent& b = dom.monomials[j];
        for (const auto& [e, c] : f.terms()) {
            Exponent sum(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) sum[i] = e[i] + b[i];
            if (sum[ax] >= k) continue;  // lands in the monomial ideal
            if (member_lattice(std::span<const HalfSpace>(d1.halfspaces), sum, Q(a + 1))) continue;
            auto it = cod_index.find(sum);
            if (it == cod_index.end()) throw std::logic_error("verify_injectivity: reduced term escaped the codomain basis");
            mat[it->second][j] += c;
        }
    }

    // fast exact certificate: full column rank mod p already proves
    // injectivity over Q; only a failed modular rank needs rational work
    for (std::uint32_t p : {1000003u, 2000003u}) {
        std::vector<std::vector<std::uint32_t>> mp(rows, std::vector<std::uint32_t>(cols, 0));
        bool ok = true;
        for (std::size_t i = 0; i < rows && ok; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                const Q& v = mat[i][j];
                Z den = denominator(v) % p;
                if (den == 0) {
                    ok = false;
                    break;
                }
                Z num = numerator(v) % p;
                std::int64_t nn = static_cast<std::int64_t>(num);
                if (nn < 0) nn += p;
                std::uint64_t inv = 1, base = static_cast<std::uint64_t>(static_cast<std::int64_t>(den)), e = p - 2;
                base %= p;
                while (e) {
                    if (e & 1) inv = inv * base % p;
                    base = base * base % p;
                    e >>= 1;
                }
                mp[i][j] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(nn) * inv % p);
            }
        if (!ok) continue;
        int r = rank_mod_p(mp, cols, p);
        if (r == static_cast<int>(cols)) {
            rep.rank = r;
            rep.injective = true;
            rep.certification = "full column rank mod " + std::to_string(p);
            return rep;
        }
        break;  // modular rank deficient: settle it over Q
    }

    RankResult rr = rank_with_kernel_q(mat, cols);
    rep.rank = rr.rank;
    rep.injective = rr.rank == static_cast<int>(cols);
    rep.certification = "exact rank over Q";
    if (!rep.injective) rep.kernel_vector = rr.kernel;
    return rep;
}

ImplicationReport verify_divisibility(const Poly& f, const Poly& g, std::int64_t a, std::int64_t k,
                                 IdealVariant variant, int axis) {
    if (f.is_zero()) throw std::invalid_argument("verify_divisibility: zero polynomial f");
    if (a < 1 || k < 1) throw std::invalid_argument("verify_divisibility: need a >= 1 and k >= 1");
    NewtonPolyhedron np = newton_polyhedron(f);

    std::vector<Exponent> gens;
    if (variant == IdealVariant::SingleAxis)
        gens.push_back(axis_power(f.nvars(), axis, k));
    else
        gens.push_back(diagonal_power(f.nvars(), k));

    ImplicationReport rep;
    rep.within_hypothesis = k <= a;
    Poly gf = mul(g, f);
    rep.premise_detail = in_sum_space(gf, sum_space(np, Q(a), gens));
    rep.premise = rep.premise_detail.contained;
    rep.conclusion_detail = in_sum_space(g, sum_space(np, Q(a - 1), gens));
    rep.conclusion = rep.conclusion_detail.contained;
    rep.implication = !rep.premise || rep.conclusion;
    return rep;
}

NormalizeResult normalize_representative(const Poly& f, const Poly& h, const Poly& g, std::int64_t m) {
    if (f.is_zero()) throw std::invalid_argument("normalize_representative: zero polynomial f");
    if (m < 1) throw std::invalid_argument("normalize_representative: m must be >= 1");
    NewtonPolyhedron np = newton_polyhedron(f);

    NormalizeResult res;
    auto in_f_m = in_sum_space(h, sum_space(np, Q(m), {}));
    if (!in_f_m.contained) {
        res.status = NormalizeResult::Status::PreconditionFailed;
        res.message = "h is not supported in m*Delta";
        return res;
    }
    Poly defect = sub(h, mul(g, f));
    bool ideal_ok = true;
    for (const auto& [e, c] : defect.terms())
        for (std::size_t i = 0; i < e.size() && ideal_ok; ++i)
            if (e[i] < m) ideal_ok = false;
    if (!ideal_ok) {
        res.status = NormalizeResult::Status::PreconditionFailed;
        res.message = "h - g*f is not divisible by (x_1...x_n)^m";
        return res;
    }

    auto [g1, g2] = split_by_support(g, Q(m - 1), np);
    res.g1 = g1;
    res.g2 = g2;
    for (const auto& [e, c] : g2.terms()) {
        bool div = true;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] < m) div = false;
        if (!div) {
            res.status = NormalizeResult::Status::SplitGuaranteeFailed;
            res.message = "support split left a term outside both F^{m-1} and ((x_1...x_n)^m): x^" +
                          Poly::monomial(e, Q(1)).to_string();
            return res;
        }
    }

    res.h_prime = sub(h, mul(g1, f));
    // postconditions are structural; check them anyway
    if (!in_sum_space(res.h_prime, sum_space(np, Q(m), {})).contained) {
        res.status = NormalizeResult::Status::SplitGuaranteeFailed;
        res.message = "normalized representative escaped F^m";
        return res;
    }
    for (const auto& [e, c] : res.h_prime.terms())
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] < m) {
                res.status = NormalizeResult::Status::SplitGuaranteeFailed;
                res.message = "normalized representative escaped the diagonal ideal";
                return res;
            }
    return res;
}

std::vector<Exponent> logform_basis(const Poly& f, std::int64_t m, std::int64_t cutoff) {
    if (m < 1) throw std::invalid_argument("logform_basis: m must be >= 1");
    NewtonPolyhedron np = newton_polyhedron(f);
    const int n = f.nvars();
    std::vector<Exponent> out;
    if (cutoff < static_cast<std::int64_t>(n) * m) return out;  // (m,...,m) already exceeds the cutoff

    std::vector<HalfSpace> compact;
    for (auto j : np.compact_facet_indices) compact.push_back(np.facets[j]);

    Exponent b(static_cast<std::size_t>(n), m);
    // odometer over the box [m, cutoff]^n pruned by total degree
    while (true) {
        std::int64_t total = 0;
        for (auto x : b) total += x;
        if (total <= cutoff && member_lattice(std::span<const HalfSpace>(compact), b, Q(m))) out.push_back(b);
        std::size_t i = b.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (++b[i] <= cutoff - static_cast<std::int64_t>(b.size() - 1) * m) {
                done = false;
                break;
            }
            b[i] = m;
        }
        if (done) break;
    }
    std::sort(out.begin(), out.end(), GrlexLess());
    return out;
}

}  // namespace nplc
