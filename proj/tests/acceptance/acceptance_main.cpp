// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Every tolerance and threshold is pinned here, not configurable.

#include "corpus.hpp"
#include "fan.hpp"
#include "filtration.hpp"
#include "json_io.hpp"
#include "logforms.hpp"
#include "nondegen.hpp"
#include "oracle_hull.hpp"

#include <nplc/nplc.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace nplc;
using nplc::testing::corpus;
using nplc::testing::corpus_poly;
using nplc::testing::CorpusPoly;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<HalfSpace> compact_facets_of(const NewtonPolyhedron& np) {
    std::vector<HalfSpace> out;
    for (auto j : np.compact_facet_indices) out.push_back(np.facets[j]);
    return out;
}

// 1. facet enumeration agrees with the brute-force normal oracle
Outcome criterion_oracle_equivalence() {
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& entry : corpus()) {
        Poly f = corpus_poly(entry);
        std::string diff = nplc::testing::compare_with_oracle(f, newton_polyhedron(f));
        if (!diff.empty()) return {false, entry.name + ": " + diff};
    }
    // seeded random supports with the axis condition, n in {2, 3, 4}
    Rng rng(106);
    std::uint64_t randomized = 0;
    for (int trial = 0; trial < 36; ++trial) {
        int n = 2 + trial % 3;
        Poly f(n);
        for (int i = 0; i < n; ++i) {
            Exponent e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i)] = rng.range(1, 6);
            f.add_term(e, Q(1));
        }
        int extra = static_cast<int>(rng.below(n == 4 ? 3 : 4));
        for (int t = 0; t < extra; ++t) {
            Exponent e(static_cast<std::size_t>(n));
            for (auto& x : e) x = rng.range(0, 5);
            f.add_term(e, Q(rng.range(1, 3)));
        }
        std::string diff = nplc::testing::compare_with_oracle(f, newton_polyhedron(f));
        if (!diff.empty()) return {false, f.to_string() + ": " + diff};
        ++randomized;
    }
    double dt = seconds_since(t0);
    if (dt >= 10.0) return {false, "runtime " + std::to_string(dt) + "s exceeds 10s"};
    std::ostringstream os;
    os << corpus().size() << " corpus + " << randomized << " randomized polynomials, " << dt << "s";
    return {true, os.str()};
}

// 2. Delta and Delta_1 agree on the unit slab of the chosen axis
Outcome criterion_slab_equality() {
    Rng rng(20260808);
    std::uint64_t checked = 0;
    for (const auto& entry : corpus()) {
        Poly f = corpus_poly(entry);
        NewtonPolyhedron np = newton_polyhedron(f);
        auto compact = compact_facets_of(np);
        std::int64_t box = 1;
        for (const auto& v : np.vertices)
            for (auto x : v) box = std::max(box, x);
        box += 2;
        for (int axis = 1; axis <= f.nvars(); ++axis) {
            Delta1Region d1 = build_delta1(np, axis);
            // all lattice points of the box with the axis coordinate in {0,1}
            Exponent b(static_cast<std::size_t>(f.nvars()), 0);
            while (true) {
                if (b[static_cast<std::size_t>(axis - 1)] <= 1) {
                    bool in_d = member_lattice(std::span<const HalfSpace>(compact), b, Q(1));
                    bool in_d1 = member_lattice(std::span<const HalfSpace>(d1.halfspaces), b, Q(1));
                    ++checked;
                    if (in_d != in_d1) {
                        std::ostringstream os;
                        os << entry.name << " axis " << axis << ": lattice discrepancy at exponent (";
                        for (auto x : b) os << x << ",";
                        os << ")";
                        return {false, os.str()};
                    }
                }
                std::size_t i = b.size();
                bool done = true;
                while (i > 0) {
                    --i;
                    if (++b[i] <= box) {
                        done = false;
                        break;
                    }
                    b[i] = 0;
                }
                if (done) break;
            }
            // 1000 random rational points with the axis coordinate in [0,1]
            for (int trial = 0; trial < 1000; ++trial) {
                QVec pt(static_cast<std::size_t>(f.nvars()));
                for (auto& x : pt) x = Q(rng.range(0, 8 * box), 8);
                pt[static_cast<std::size_t>(axis - 1)] = Q(rng.below(9), 8);
                ++checked;
                if (member(std::span<const HalfSpace>(compact), pt, Q(1)) !=
                    member(std::span<const HalfSpace>(d1.halfspaces), pt, Q(1)))
                    return {false, entry.name + " axis " + std::to_string(axis) + ": rational discrepancy"};
            }
        }
    }
    return {true, std::to_string(checked) + " points, zero discrepancies"};
}

// 3. the regularized dual fan is unimodular, refining, orthant-supported
Outcome criterion_fan_regularity() {
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& entry : corpus()) {
        Fan sigma0 = dual_fan(newton_polyhedron(corpus_poly(entry)));
        Fan sigma = regularize(sigma0);
        for (const auto& cone : sigma.cones) {
            ZMat rays;
            for (auto i : cone) rays.push_back(sigma.rays[i]);
            if (cone_multiplicity(rays) != 1) return {false, entry.name + ": non-unimodular cone survived"};
        }
        if (!refines(sigma, sigma0)) return {false, entry.name + ": output does not refine the dual fan"};
        auto violations = fan_support_violations(sigma);
        if (!violations.empty()) return {false, entry.name + ": " + violations.front()};
        Fan again = regularize(sigma);
        if (again.rays != sigma.rays || again.cones != sigma.cones)
            return {false, entry.name + ": regularize is not idempotent"};
    }
    double dt = seconds_since(t0);
    if (dt >= 60.0) return {false, "runtime " + std::to_string(dt) + "s exceeds 60s"};
    std::ostringstream os;
    os << corpus().size() << " fans, " << dt << "s";
    return {true, os.str()};
}

// 4. injectivity of multiplication by f on every bounded quotient
Outcome criterion_injectivity() {
    std::uint64_t runs = 0;
    for (const auto& entry : corpus()) {
        Poly f = corpus_poly(entry);
        if (!axis_condition(f)) return {false, entry.name + ": corpus entry misses the axis condition"};
        for (int axis = 1; axis <= f.nvars(); ++axis)
            for (std::int64_t a = 0; a <= 3; ++a)
                for (std::int64_t k = 1; k <= 3; ++k) {
                    InjectivityReport rep = verify_injectivity(f, a, k, axis);
                    ++runs;
                    if (!rep.injective) {
                        std::ostringstream os;
                        os << "COUNTEREXAMPLE " << entry.name << " axis " << axis << " a=" << a << " k=" << k
                           << " rank " << rep.rank << " < " << rep.domain_size;
                        return {false, os.str()};
                    }
                }
    }
    return {true, std::to_string(runs) + " quotient maps, all injective"};
}

// 5. randomized premise-true divisibility trials
Outcome criterion_divisibility() {
    Rng rng(777);
    std::uint64_t total = 0;
    for (const auto& entry : corpus()) {
        Poly f = corpus_poly(entry);
        NewtonPolyhedron np = newton_polyhedron(f);
        std::int64_t box = 1;
        for (const auto& v : np.vertices)
            for (auto x : v) box = std::max(box, x);
        int done = 0;
        while (done < 100) {
            Poly g(f.nvars());
            int terms = 1 + static_cast<int>(rng.below(4));
            for (int t = 0; t < terms; ++t) {
                Exponent e(static_cast<std::size_t>(f.nvars()));
                for (auto& x : e) x = rng.range(0, 2 * box);
                g.add_term(e, Q(rng.range(1, 3) * (rng.below(2) ? 1 : -1)));
            }
            Poly gf = mul(g, f);
            std::int64_t a = 1;
            if (!gf.is_zero()) {
                Q mn;
                bool first = true;
                for (const auto& [e, c] : gf.terms()) {
                    Q v = filtration_value(np, e);
                    if (first || v < mn) {
                        mn = v;
                        first = false;
                    }
                }
                a = static_cast<std::int64_t>(floor_q(mn));
                if (a < 1) continue;
            }
            std::int64_t k = std::min<std::int64_t>(a, 1 + static_cast<std::int64_t>(rng.below(3)));
            ImplicationReport rep = verify_divisibility(f, g, a, k, IdealVariant::AllAxes);
            if (!rep.premise) return {false, entry.name + ": trial premise unexpectedly false"};
            if (!rep.conclusion) {
                return {false, "COUNTEREXAMPLE " + entry.name + ": g=" + g.to_string() + " a=" +
                                   std::to_string(a) + " k=" + std::to_string(k)};
            }
            ++done;
            ++total;
        }
    }
    return {true, std::to_string(total) + " premise-true trials, conclusion held in all"};
}

// 6. monomial equivalence of the fan-side log-pole test with membership
Outcome criterion_logform_equivalence() {
    std::uint64_t compared = 0;
    for (const auto& entry : corpus()) {
        Poly f = corpus_poly(entry);
        NewtonPolyhedron np = newton_polyhedron(f);
        Fan sigma = regularize(dual_fan(np));
        auto compact = compact_facets_of(np);
        const int n = f.nvars();
        for (std::int64_t m = 1; m <= 3; ++m) {
            Exponent b(static_cast<std::size_t>(n), 0);
            while (true) {
                std::int64_t total = 0;
                for (auto x : b) total += x;
                if (total > 0 && total <= 8) {
                    bool direct = member_lattice(std::span<const HalfSpace>(compact), b, Q(m));
                    for (auto x : b)
                        if (x < m) direct = false;
                    bool fan_side = is_log_form(f, np, {Poly::monomial(b, Q(1)), m}, sigma).is_log_form;
                    ++compared;
                    if (direct != fan_side) {
                        std::ostringstream os;
                        os << entry.name << " m=" << m << " disagreement at (";
                        for (auto x : b) os << x << ",";
                        os << ")";
                        return {false, os.str()};
                    }
                }
                std::size_t i = b.size();
                bool done = true;
                while (i > 0) {
                    --i;
                    if (++b[i] <= 8) {
                        done = false;
                        break;
                    }
                    b[i] = 0;
                }
                if (done) break;
            }
        }
    }
    return {true, std::to_string(compared) + " monomials, exact agreement"};
}

// 7. normalization round-trips
Outcome criterion_normalization() {
    Rng rng(4242);
    std::uint64_t total = 0;
    for (const auto& entry : corpus()) {
        Poly f = corpus_poly(entry);
        NewtonPolyhedron np = newton_polyhedron(f);
        std::int64_t box = 1;
        for (const auto& v : np.vertices)
            for (auto x : v) box = std::max(box, x);
        for (std::int64_t m : {1, 2}) {
            std::int64_t cutoff = static_cast<std::int64_t>(f.nvars()) * m;
            std::vector<Exponent> basis;
            const std::int64_t cutoff_cap = cutoff + 2 * m * to_int64(np.facets[np.compact_facet_indices[0]].height) + 2;
            while (basis.empty() && cutoff <= cutoff_cap) {
                basis = logform_basis(f, m, cutoff);
                ++cutoff;
            }
            if (basis.empty()) return {false, entry.name + ": no normalized monomials found"};
            for (int trial = 0; trial < 50; ++trial) {
                Poly h0(f.nvars());
                int picks = 1 + static_cast<int>(rng.below(3));
                for (int i = 0; i < picks; ++i)
                    h0.add_term(basis[rng.below(basis.size())], Q(rng.range(1, 3) * (rng.below(2) ? 1 : -1)));
                if (h0.is_zero()) h0.add_term(basis.front(), Q(1));
                Poly q(f.nvars());
                int qterms = 1 + static_cast<int>(rng.below(3));
                for (int t = 0; t < qterms; ++t) {
                    Exponent e(static_cast<std::size_t>(f.nvars()));
                    for (auto& x : e) x = rng.range(0, 2 * box);
                    q.add_term(e, Q(rng.range(1, 3) * (rng.below(2) ? 1 : -1)));
                }
                Poly h = add(h0, mul(q, f));
                Poly g = q;
                if (!in_sum_space(h, sum_space(np, Q(m), {})).contained) {
                    g = split_by_support(q, Q(m - 1), np).first;
                    h = add(h0, mul(g, f));
                }
                NormalizeResult nr = normalize_representative(f, h, g, m);
                ++total;
                if (nr.status != NormalizeResult::Status::Ok)
                    return {false, "BLOCKER " + entry.name + " m=" + std::to_string(m) + ": " + nr.message};
                if (!residue_class_equal(f, nr.h_prime, h))
                    return {false, entry.name + ": normalized representative changed its class"};
            }
        }
    }
    return {true, std::to_string(total) + " round-trips, all normalized"};
}

// 8. nondegeneracy verdicts on the named singularities
Outcome criterion_nondegeneracy() {
    SearchConfig cfg;  // 101, 103, 211
    for (const char* text : {"x1^2+x2^2+x3^2", "x1^2+x2^3+x3^5", "x1^3+x2^3+x3^3+x1*x2*x3"}) {
        NondegeneracyVerdict v = check_nondegenerate(parse_poly(text, 3), cfg);
        if (v.status != NondegenStatus::Nondegenerate)
            return {false, std::string(text) + ": expected nondegenerate"};
        for (const auto& log : v.faces) {
            if (log.witness) return {false, std::string(text) + ": unexpected witness"};
            if (log.mode == "finite_field" && log.primes_scanned.size() < 3)
                return {false, std::string(text) + ": fewer than 3 primes scanned"};
        }
    }
    NondegeneracyVerdict d = check_nondegenerate(parse_poly("(x1+x2)^2+x3^3", 3), cfg);
    if (d.status != NondegenStatus::Degenerate) return {false, "(x1+x2)^2+x3^3: expected degenerate"};
    const FaceCheckLog& log = d.faces[*d.witness_face];
    if (log.face.dimension != 1) return {false, "witness face is not the edge"};
    if (!log.witness || !verify_witness(log.face_polynomial, *log.witness))
        return {false, "witness failed re-substitution"};
    return {true, "3 nondegenerate + 1 degenerate-with-witness verdicts"};
}

// 9. exhaustive rounding box
Outcome criterion_rounding() {
    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t cases = 0;
    for (std::int64_t m = 1; m <= 3; ++m)
        for (std::int64_t a = 1; a <= 4; ++a)
            for (std::int64_t b = -4; b <= 4; ++b)
                for (std::int64_t nu = -12; nu <= 12; ++nu)
                    for (std::int64_t q = 1; q <= 7; ++q) {
                        RoundingCase c = rounding_implication(m, a, b, nu, Q(q, 8 * m * a));
                        ++cases;
                        if (!c.within_hypothesis) return {false, "lambda fell outside the hypothesis"};
                        if (!c.implication) {
                            std::ostringstream os;
                            os << "violation at m=" << m << " a=" << a << " b=" << b << " nu=" << nu << " q=" << q;
                            return {false, os.str()};
                        }
                    }
    double dt = seconds_since(t0);
    if (dt >= 5.0) return {false, "runtime exceeds 5s"};
    std::ostringstream os;
    os << cases << " cases, zero violations, " << dt << "s";
    return {true, os.str()};
}

// 10. deformation checks through the public interface
Outcome criterion_deformation() {
    char* rep = nullptr;
    nplc_status st = nplc_run("extend", R"({"F": "x1^2+x2^2+x3^2+x4", "H": "x1*x2*x3", "nvars": 4, "m": 1})", &rep);
    if (st != NPLC_OK || !rep) return {false, "A1 family rejected"};
    Json body = Json::parse(std::string(rep));
    nplc_string_free(rep);
    bool saw_facet_ray = false;
    for (const auto& row : body.at("rays"))
        if (row.at("ray") == Json::array({1, 1, 1, 2}) && row.at("pass").get<bool>()) saw_facet_ray = true;
    if (!saw_facet_ray) return {false, "ray (1,1,1,2) missing from the table"};

    rep = nullptr;
    st = nplc_run("extend", R"({"F": "x1^2+x2^3+x3^5+x4*x1*x2*x3", "H": "x1*x2*x3", "nvars": 4, "m": 1})", &rep);
    if (st != NPLC_OK) return {false, "staircase family rejected"};
    nplc_string_free(rep);

    rep = nullptr;
    st = nplc_run("extend", R"({"F": "x1^2+x2^2+x3^2+x4", "H": "1", "nvars": 4, "m": 1})", &rep);
    if (st != NPLC_VERIFICATION_FAILED) return {false, "H = 1 must fail with the verification status"};
    nplc_string_free(rep);
    return {true, "two passing families, constant candidate rejected with status 1"};
}

// 11. byte-identical reruns for every command
Outcome criterion_determinism() {
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"newton", R"({"poly": "x1^2+x2^2+x3^2", "nvars": 3, "delta1_axis": 1, "seed": 9})"},
        {"resolve", R"({"poly": "x1^2+x2^3+x3^5", "nvars": 3, "seed": 9})"},
        {"check", R"({"poly": "x1^3+x1*x2+x2^3", "nvars": 2, "trials": 25, "normalization_trials": 10, "seed": 9})"},
        {"extend", R"({"F": "x1^2+x2^2+x3^2+x4", "H": "x1*x2*x3", "nvars": 4, "m": 1, "seed": 9})"},
    };
    for (const auto& [cmd, cfg] : cases) {
        char* a = nullptr;
        char* b = nullptr;
        nplc_status sa = nplc_run(cmd.c_str(), cfg.c_str(), &a);
        nplc_status sb = nplc_run(cmd.c_str(), cfg.c_str(), &b);
        std::string sa_body = a ? a : "", sb_body = b ? b : "";
        nplc_string_free(a);
        nplc_string_free(b);
        if (sa != sb) return {false, cmd + ": status differs across reruns"};
        if (sa_body.empty() || sa_body != sb_body) return {false, cmd + ": bytes differ across reruns"};
    }
    return {true, "4 commands, byte-identical reruns"};
}

// the shipped corpus file must match the built-in table
Outcome corpus_file_consistency() {
    std::ifstream in(NPLC_CORPUS_FILE);
    if (!in) return {false, "cannot open " NPLC_CORPUS_FILE};
    Json arr = Json::parse(in);
    if (arr.size() != corpus().size()) return {false, "corpus size mismatch"};
    for (std::size_t i = 0; i < corpus().size(); ++i) {
        if (arr[i].at("poly").get<std::string>() != corpus()[i].text ||
            arr[i].at("nvars").get<int>() != corpus()[i].nvars)
            return {false, "corpus entry " + std::to_string(i) + " differs"};
    }
    return {true, std::to_string(corpus().size()) + " entries in sync"};
}

}  // namespace

int main() {
    struct Criterion {
        std::string name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"polyhedral oracle equivalence", criterion_oracle_equivalence},
        {"slab equality of Delta and Delta_1", criterion_slab_equality},
        {"fan regularity and refinement", criterion_fan_regularity},
        {"quotient injectivity sweep", criterion_injectivity},
        {"divisibility implication trials", criterion_divisibility},
        {"log-form / membership equivalence", criterion_logform_equivalence},
        {"representative normalization round-trips", criterion_normalization},
        {"nondegeneracy verdicts", criterion_nondegeneracy},
        {"rounding implication exhaustion", criterion_rounding},
        {"deformation extension checks", criterion_deformation},
        {"report determinism", criterion_determinism},
        {"corpus file consistency", corpus_file_consistency},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].run();
        } catch (const std::exception& ex) {
            out = {false, std::string("exception: ") + ex.what()};
        }
        double dt = seconds_since(t0);
        std::printf("[%s] %2zu %-44s %s (%.2fs)\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].name.c_str(),
                    out.detail.c_str(), dt);
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
