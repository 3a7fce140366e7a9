// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include "filtration.hpp"
#include "logforms.hpp"
#include "nondegen.hpp"

#include <fstream>
#include <stdexcept>

namespace nplc {

namespace {

Json tool_header() {
    Json j;
    j["name"] = kToolName;
    j["version"] = kToolVersion;
    return j;
}

CommandResult input_error(const std::string& command, const std::string& msg) {
    CommandResult r;
    r.status = 2;
    r.report["tool"] = tool_header();
    r.report["command"] = command;
    r.report["error"] = msg;
    return r;
}

std::uint64_t config_seed(const Json& config) {
    if (config.contains("seed")) return config.at("seed").get<std::uint64_t>();
    return 0;
}

Poly poly_from_config(const Json& config, const std::string& text_key, const std::string& nvars_key) {
    if (!config.contains(text_key)) throw std::invalid_argument("missing '" + text_key + "'");
    if (!config.contains(nvars_key)) throw std::invalid_argument("missing '" + nvars_key + "'");
    return parse_poly(config.at(text_key).get<std::string>(), config.at(nvars_key).get<int>());
}

Json witness_to_json(const TorusWitness& w) {
    Json j;
    j["field"] = w.prime == 0 ? Json("Q") : Json("F_" + std::to_string(w.prime));
    Json vals = Json::array();
    for (const Q& v : w.values) vals.push_back(v.str());
    j["values"] = std::move(vals);
    if (!w.free_vars.empty()) j["free_vars"] = w.free_vars;
    return j;
}

Json verdict_to_json(const NondegeneracyVerdict& v) {
    Json j;
    switch (v.status) {
        case NondegenStatus::Nondegenerate: j["status"] = "nondegenerate"; break;
        case NondegenStatus::Degenerate: j["status"] = "degenerate"; break;
        case NondegenStatus::Unknown: j["status"] = "unknown"; break;
    }
    j["confidence"] = v.confidence;
    j["all_faces_exact"] = v.all_faces_exact;
    Json faces = Json::array();
    for (const auto& log : v.faces) {
        Json fj;
        fj["dim"] = log.face.dimension;
        Json vs = Json::array();
        for (const auto& vertex : log.face_vertices) vs.push_back(exponent_to_json(vertex));
        fj["vertices"] = std::move(vs);
        fj["face_polynomial"] = log.face_polynomial.to_string();
        fj["mode"] = log.mode;
        fj["decided_exactly"] = log.decided_exactly;
        if (!log.primes_scanned.empty()) fj["primes_scanned"] = log.primes_scanned;
        if (log.budget_exceeded) fj["budget_exceeded"] = true;
        if (log.witness) fj["witness"] = witness_to_json(*log.witness);
        if (!log.note.empty()) fj["note"] = log.note;
        faces.push_back(std::move(fj));
    }
    j["faces"] = std::move(faces);
    return j;
}

Json membership_failures(const MembershipResult& mr, std::size_t cap = 5) {
    Json arr = Json::array();
    for (const auto& cert : mr.certificates) {
        if (cert.branch != TermBranch::Outside) continue;
        arr.push_back(exponent_to_json(cert.exponent));
        if (arr.size() >= cap) break;
    }
    return arr;
}

// ---- randomized trial helpers ------------------------------------------------

Poly random_poly(Rng& rng, int nvars, std::int64_t coord_box, int min_terms, int max_terms) {
    Poly p(nvars);
    int terms = min_terms + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms - min_terms + 1)));
    for (int t = 0; t < terms; ++t) {
        Exponent e(static_cast<std::size_t>(nvars));
        for (auto& x : e) x = rng.range(0, coord_box);
        std::int64_t c = rng.range(1, 3) * (rng.below(2) == 0 ? 1 : -1);
        p.add_term(e, Q(c));
    }
    return p;
}

std::int64_t max_vertex_coordinate(const NewtonPolyhedron& np) {
    std::int64_t mx = 1;
    for (const auto& v : np.vertices)
        for (auto x : v) mx = std::max(mx, x);
    return mx;
}

Z max_facet_height(const NewtonPolyhedron& np) {
    Z mx = 1;
    for (auto j : np.compact_facet_indices) mx = std::max(mx, np.facets[j].height);
    return mx;
}

struct CorpusEntry {
    std::string name;
    Poly f;
    std::string text;
};

std::vector<CorpusEntry> corpus_from_config(const Json& config) {
    std::vector<CorpusEntry> out;
    auto push = [&out](const Json& item) {
        CorpusEntry e;
        e.text = item.at("poly").get<std::string>();
        e.f = parse_poly(e.text, item.at("nvars").get<int>());
        e.name = item.contains("name") ? item.at("name").get<std::string>() : e.text;
        out.push_back(std::move(e));
    };
    if (config.contains("corpus_file")) {
        std::ifstream in(config.at("corpus_file").get<std::string>());
        if (!in) throw std::invalid_argument("cannot open corpus file");
        Json arr = Json::parse(in);
        for (const auto& item : arr) push(item);
    } else if (config.contains("polys")) {
        for (const auto& item : config.at("polys")) push(item);
    } else if (config.contains("poly")) {
        Json item;
        item["poly"] = config.at("poly");
        item["nvars"] = config.at("nvars");
        push(item);
    } else {
        throw std::invalid_argument("check needs 'poly', 'polys' or 'corpus_file'");
    }
    if (out.empty()) throw std::invalid_argument("empty polynomial corpus");
    return out;
}

}  // namespace

CommandResult run_newton(const Json& config) {
    CommandResult res;
    res.report["tool"] = tool_header();
    res.report["command"] = "newton";
    try {
        Poly f = poly_from_config(config, "poly", "nvars");
        if (f.is_zero()) return input_error("newton", "zero polynomial has no Newton polyhedron");
        Json cfg;
        cfg["poly"] = config.at("poly");
        cfg["nvars"] = f.nvars();
        int axis = config.contains("delta1_axis") ? config.at("delta1_axis").get<int>() : 0;
        if (axis != 0) cfg["delta1_axis"] = axis;
        cfg["seed"] = config_seed(config);
        res.report["config"] = std::move(cfg);

        NewtonPolyhedron np = newton_polyhedron(f);
        res.report["polynomial"] = poly_to_json(f);
        res.report["axis_condition"] = np.axis_condition_ok;
        res.report["polyhedron"] = polyhedron_to_json(np);

        Json faces = Json::array();
        for (const auto& cf : compact_face_lattice(np)) {
            Json fj;
            fj["dim"] = cf.dimension;
            Json vs = Json::array();
            for (auto vi : cf.vertex_indices) vs.push_back(exponent_to_json(np.vertices[vi]));
            fj["vertices"] = std::move(vs);
            Json fs = Json::array();
            for (auto fi : cf.facet_indices) fs.push_back(fi);
            fj["supporting_facets"] = std::move(fs);
            faces.push_back(std::move(fj));
        }
        res.report["compact_faces"] = std::move(faces);

        if (axis != 0) res.report["delta1"] = delta1_to_json(build_delta1(np, axis));
    } catch (const std::exception& ex) {
        return input_error("newton", ex.what());
    }
    return res;
}

CommandResult run_resolve(const Json& config) {
    CommandResult res;
    res.report["tool"] = tool_header();
    res.report["command"] = "resolve";
    try {
        Fan sigma0;
        Json cfg;
        if (config.contains("fan")) {
            sigma0 = fan_from_json(config.at("fan"));
            cfg["fan"] = config.at("fan");
        } else {
            Poly f = poly_from_config(config, "poly", "nvars");
            cfg["poly"] = config.at("poly");
            cfg["nvars"] = f.nvars();
            sigma0 = dual_fan(newton_polyhedron(f));
        }
        cfg["seed"] = config_seed(config);
        res.report["config"] = std::move(cfg);

        RegularizeStats stats;
        Fan sigma = regularize(sigma0, &stats);
        res.report["sigma0"] = fan_to_json(sigma0);
        res.report["sigma"] = fan_to_json(sigma);
        bool regular = true;
        for (const auto& cone : sigma.cones) {
            ZMat rays;
            for (auto i : cone) rays.push_back(sigma.rays[i]);
            if (cone_multiplicity(rays) != 1) regular = false;
        }
        res.report["regular"] = regular;
        res.report["max_multiplicity_before"] = stats.max_multiplicity_before.str();
        res.report["subdivisions"] = stats.star_subdivisions;
        bool refines_input = refines(sigma, sigma0);
        res.report["refines_input"] = refines_input;
        // dual fans always cover the orthant; user-supplied fans may
        // legitimately cover less, so there the check is informational
        bool orthant = fan_support_violations(sigma).empty();
        res.report["support_orthant"] = orthant;
        bool from_poly = !config.contains("fan");
        if (!regular || !refines_input || (from_poly && !orthant))
            res.status = 1;  // would contradict the construction; never ignore it
    } catch (const std::exception& ex) {
        return input_error("resolve", ex.what());
    }
    return res;
}

CommandResult run_extend(const Json& config) {
    CommandResult res;
    res.report["tool"] = tool_header();
    res.report["command"] = "extend";
    try {
        DeformationInstance inst;
        inst.F = poly_from_config(config, "F", "nvars");
        if (!config.contains("H")) throw std::invalid_argument("missing 'H'");
        inst.H = parse_poly(config.at("H").get<std::string>(), inst.F.nvars());
        inst.m = config.contains("m") ? config.at("m").get<std::int64_t>() : 1;
        if (config.contains("base"))
            inst.base_f = parse_poly(config.at("base").get<std::string>(), inst.F.nvars());

        Json cfg;
        cfg["F"] = config.at("F");
        cfg["H"] = config.at("H");
        cfg["nvars"] = inst.F.nvars();
        cfg["m"] = inst.m;
        if (config.contains("base")) cfg["base"] = config.at("base");
        cfg["seed"] = config_seed(config);
        res.report["config"] = std::move(cfg);

        DeformationReport rep = deformation_extension_check(inst);
        Json rows = Json::array();
        for (const auto& row : rep.rows) {
            Json rj;
            rj["ray"] = zvec_to_json(row.ray);
            rj["type"] = row.coordinate ? "strict_transform" : "exceptional";
            rj["nu_H"] = row.nu_H.str();
            if (row.coordinate) {
                rj["required"] = std::to_string(inst.m);
            } else {
                rj["a"] = row.a.str();
                rj["b"] = row.b.str();
                rj["nu_form"] = (row.nu_H + Z(inst.m) * row.b - Z(inst.m) * row.a).str();
                rj["threshold"] = Z(-inst.m).str();
            }
            rj["pass"] = row.pass;
            rows.push_back(std::move(rj));
        }
        res.report["rays"] = std::move(rows);
        res.report["fan_rays"] = rep.fan_rays;
        res.report["subdivisions"] = rep.subdivisions;
        res.report["pass"] = rep.pass;
        res.report["verdict"] = rep.verdict;
        res.status = rep.pass ? 0 : 1;
    } catch (const std::exception& ex) {
        return input_error("extend", ex.what());
    }
    return res;
}

namespace {

// Injectivity sweep: multiplication by f on the bounded
// quotients, across axes and parameter ranges.
Json check_injectivity(const Poly& f, std::int64_t a_max, std::int64_t k_max, bool& ok) {
    Json j;
    Json failures = Json::array();
    std::uint64_t runs = 0, injective = 0;
    for (int axis = 1; axis <= f.nvars(); ++axis) {
        for (std::int64_t a = 0; a <= a_max; ++a) {
            for (std::int64_t k = 1; k <= k_max; ++k) {
                InjectivityReport rep = verify_injectivity(f, a, k, axis);
                ++runs;
                if (rep.injective) {
                    ++injective;
                } else {
                    ok = false;
                    Json fj;
                    fj["axis"] = axis;
                    fj["a"] = a;
                    fj["k"] = k;
                    fj["rank"] = rep.rank;
                    fj["domain_size"] = rep.domain_size;
                    if (failures.size() < 5) failures.push_back(std::move(fj));
                }
            }
        }
    }
    j["runs"] = runs;
    j["injective"] = injective;
    j["passed"] = runs == injective;
    if (!failures.empty()) j["failures"] = std::move(failures);
    return j;
}

// Randomized premise-true multiplication trials for the divisibility
// implications (single-axis and all-axes ideals).
Json check_divisibility(const Poly& f, const NewtonPolyhedron& np, std::uint64_t trials, Rng& rng, bool& ok) {
    Json j;
    Json failures = Json::array();
    std::uint64_t run = 0, held = 0, premise_true = 0;
    const std::int64_t box = 2 * max_vertex_coordinate(np);
    for (std::uint64_t t = 0; t < trials; ++t) {
        Poly g = random_poly(rng, f.nvars(), box, 1, 4);
        IdealVariant variant = t % 2 == 0 ? IdealVariant::AllAxes : IdealVariant::SingleAxis;
        int axis = 1 + static_cast<int>(t % static_cast<std::uint64_t>(f.nvars()));
        Poly gf = mul(g, f);
        std::int64_t a = 1;
        if (!gf.is_zero()) {
            Q minval;
            bool first = true;
            for (const auto& [e, c] : gf.terms()) {
                Q v = filtration_value(np, e);
                if (first || v < minval) {
                    minval = v;
                    first = false;
                }
            }
            a = static_cast<std::int64_t>(floor_q(minval));
            if (a < 1) continue;  // cannot satisfy the k <= a proviso
        }
        std::int64_t k = std::min<std::int64_t>(a, 1 + static_cast<std::int64_t>(rng.below(3)));
        ImplicationReport rep = verify_divisibility(f, g, a, k, variant, axis);
        ++run;
        if (rep.premise) ++premise_true;
        if (rep.implication) {
            ++held;
        } else {
            ok = false;
            if (failures.size() < 5) {
                Json fj;
                fj["g"] = g.to_string();
                fj["a"] = a;
                fj["k"] = k;
                fj["variant"] = variant == IdealVariant::AllAxes ? "all_axes" : "single_axis";
                fj["axis"] = axis;
                fj["conclusion_failures"] = membership_failures(rep.conclusion_detail);
                failures.push_back(std::move(fj));
            }
        }
    }
    j["trials"] = run;
    j["premise_true"] = premise_true;
    j["implication_held"] = held;
    j["passed"] = run == held;
    if (!failures.empty()) j["failures"] = std::move(failures);
    return j;
}

// Monomial-level equivalence of the fan-side log-pole test with direct
// membership in the dilated polyhedron plus the diagonal bound.
Json check_logform_equivalence(const Poly& f, const NewtonPolyhedron& np, const Fan& sigma, std::int64_t m_max,
                              std::int64_t cutoff, bool& ok) {
    Json j;
    Json mismatches = Json::array();
    std::uint64_t compared = 0, agreed = 0;

    std::vector<HalfSpace> compact;
    for (auto i : np.compact_facet_indices) compact.push_back(np.facets[i]);
    const int n = f.nvars();

    for (std::int64_t m = 1; m <= m_max; ++m) {
        // fan-side data per ray
        std::vector<std::pair<ZVec, Z>> ray_bounds;  // (ray, required nu_h)
        for (const ZVec& ray : sigma.rays) {
            Z sum = 0, nonzero = 0;
            for (const Z& x : ray) {
                sum += x;
                if (x != 0) ++nonzero;
            }
            bool coord = nonzero == 1 && sum == 1;
            ray_bounds.emplace_back(ray, coord ? Z(m) : Z(m) * ray_valuation(f, ray));
        }

        Exponent b(static_cast<std::size_t>(n), 0);
        while (true) {
            std::int64_t total = 0;
            for (auto x : b) total += x;
            if (total <= cutoff && !(total == 0)) {
                bool fan_side = true;
                for (const auto& [ray, req] : ray_bounds)
                    if (exponent_dot(b, ray) < req) {
                        fan_side = false;
                        break;
                    }
                bool direct = member_lattice(std::span<const HalfSpace>(compact), b, Q(m));
                for (auto x : b)
                    if (x < m) direct = false;
                ++compared;
                if (fan_side == direct) {
                    ++agreed;
                } else {
                    ok = false;
                    if (mismatches.size() < 5) {
                        Json mj;
                        mj["m"] = m;
                        mj["exp"] = exponent_to_json(b);
                        mj["fan_side"] = fan_side;
                        mj["direct"] = direct;
                        mismatches.push_back(std::move(mj));
                    }
                }
                // tie a sample of cases to the public per-ray report
                if (compared % 37 == 0) {
                    LogFormReport lf = is_log_form(f, np, LogFormRep{Poly::monomial(b, Q(1)), m}, sigma);
                    if (lf.is_log_form != fan_side) {
                        ok = false;
                        Json mj;
                        mj["m"] = m;
                        mj["exp"] = exponent_to_json(b);
                        mj["note"] = "is_log_form disagrees with the ray sweep";
                        if (mismatches.size() < 5) mismatches.push_back(std::move(mj));
                    }
                }
            }
            std::size_t i = b.size();
            bool done = true;
            while (i > 0) {
                --i;
                if (++b[i] <= cutoff) {
                    done = false;
                    break;
                }
                b[i] = 0;
            }
            if (done) break;
        }
    }
    j["compared"] = compared;
    j["agreed"] = agreed;
    j["passed"] = compared == agreed;
    if (!mismatches.empty()) j["mismatches"] = std::move(mismatches);
    return j;
}

// Round-trip representative normalization on randomized inputs.
Json check_normalization(const Poly& f, const NewtonPolyhedron& np, std::uint64_t trials, Rng& rng, bool& ok) {
    Json j;
    Json failures = Json::array();
    std::uint64_t run = 0, succeeded = 0;
    const int n = f.nvars();
    const std::int64_t box = 2 * max_vertex_coordinate(np);

    for (std::int64_t m : {1, 2}) {
        // a spanning set of normalized representatives to sample from
        std::int64_t cutoff = static_cast<std::int64_t>(n) * m;
        std::vector<Exponent> basis;
        const std::int64_t cutoff_cap = cutoff + 2 * m * to_int64(max_facet_height(np)) + 2;
        while (basis.empty() && cutoff <= cutoff_cap) {
            basis = logform_basis(f, m, cutoff);
            ++cutoff;
        }
        if (basis.empty()) continue;

        for (std::uint64_t t = 0; t < trials; ++t) {
            Poly h0(n);
            int picks = 1 + static_cast<int>(rng.below(3));
            for (int i = 0; i < picks; ++i) {
                const Exponent& e = basis[rng.below(basis.size())];
                h0.add_term(e, Q(rng.range(1, 3) * (rng.below(2) == 0 ? 1 : -1)));
            }
            if (h0.is_zero()) continue;
            Poly q = random_poly(rng, n, box, 1, 3);

            Poly h = add(h0, mul(q, f));
            Poly g = q;
            if (!in_sum_space(h, sum_space(np, Q(m), {})).contained) {
                g = split_by_support(q, Q(m - 1), np).first;
                h = add(h0, mul(g, f));
            }
            NormalizeResult nr = normalize_representative(f, h, g, m);
            ++run;
            bool good = nr.status == NormalizeResult::Status::Ok && residue_class_equal(f, nr.h_prime, h);
            if (good) {
                ++succeeded;
            } else {
                ok = false;
                if (failures.size() < 5) {
                    Json fj;
                    fj["m"] = m;
                    fj["h0"] = h0.to_string();
                    fj["q"] = q.to_string();
                    fj["message"] = nr.message;
                    failures.push_back(std::move(fj));
                }
            }
        }
    }
    j["trials"] = run;
    j["succeeded"] = succeeded;
    j["passed"] = run == succeeded;
    if (!failures.empty()) j["failures"] = std::move(failures);
    return j;
}

Json check_rounding(bool& ok) {
    Json j;
    std::uint64_t cases = 0, held = 0, hypothesis_cases = 0;
    Json violations = Json::array();
    for (std::int64_t m = 1; m <= 3; ++m)
        for (std::int64_t a = 1; a <= 4; ++a)
            for (std::int64_t b = -4; b <= 4; ++b)
                for (std::int64_t nu = -12; nu <= 12; ++nu)
                    for (std::int64_t q = 1; q <= 7; ++q) {
                        RoundingCase c = rounding_implication(m, a, b, nu, Q(q, 8 * m * a));
                        ++cases;
                        if (c.within_hypothesis) ++hypothesis_cases;
                        if (!c.within_hypothesis || c.implication) {
                            ++held;
                        } else {
                            ok = false;
                            if (violations.size() < 5) {
                                Json vj;
                                vj["m"] = m;
                                vj["a"] = a;
                                vj["b"] = b;
                                vj["nu"] = nu;
                                vj["lambda"] = c.lambda.str();
                                violations.push_back(std::move(vj));
                            }
                        }
                    }
    j["cases"] = cases;
    j["within_hypothesis"] = hypothesis_cases;
    j["passed"] = cases == held;
    if (!violations.empty()) j["violations"] = std::move(violations);
    return j;
}

}  // namespace

CommandResult run_check(const Json& config) {
    CommandResult res;
    res.report["tool"] = tool_header();
    res.report["command"] = "check";
    try {
        std::vector<CorpusEntry> corpus = corpus_from_config(config);
        const std::uint64_t seed = config_seed(config);
        const std::int64_t a_max = config.contains("a_max") ? config.at("a_max").get<std::int64_t>() : 3;
        const std::int64_t k_max = config.contains("k_max") ? config.at("k_max").get<std::int64_t>() : 3;
        const std::int64_t m_max = config.contains("m_max") ? config.at("m_max").get<std::int64_t>() : 3;
        const std::int64_t cutoff = config.contains("cutoff") ? config.at("cutoff").get<std::int64_t>() : 8;
        const std::uint64_t trials = config.contains("trials") ? config.at("trials").get<std::uint64_t>() : 100;
        const std::uint64_t norm_trials =
            config.contains("normalization_trials") ? config.at("normalization_trials").get<std::uint64_t>() : 50;
        SearchConfig scfg;
        if (config.contains("primes")) {
            scfg.primes.clear();
            for (const auto& p : config.at("primes")) scfg.primes.push_back(p.get<std::uint32_t>());
        }

        Json cfg;
        if (config.contains("corpus_file")) cfg["corpus_file"] = config.at("corpus_file");
        if (config.contains("polys")) cfg["polys"] = config.at("polys");
        if (config.contains("poly")) {
            cfg["poly"] = config.at("poly");
            cfg["nvars"] = config.at("nvars");
        }
        cfg["a_max"] = a_max;
        cfg["k_max"] = k_max;
        cfg["m_max"] = m_max;
        cfg["cutoff"] = cutoff;
        cfg["trials"] = trials;
        cfg["normalization_trials"] = norm_trials;
        cfg["primes"] = scfg.primes;
        cfg["seed"] = seed;
        res.report["config"] = std::move(cfg);

        bool all_ok = true;
        Json results = Json::array();
        for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
            const CorpusEntry& entry = corpus[idx];
            Json pj;
            pj["name"] = entry.name;
            pj["poly"] = entry.text;
            pj["nvars"] = entry.f.nvars();

            NewtonPolyhedron np = newton_polyhedron(entry.f);
            pj["axis_condition"] = np.axis_condition_ok;
            pj["nondegeneracy"] = verdict_to_json(check_nondegenerate(entry.f, scfg));

            bool ok = true;
            if (np.axis_condition_ok) {
                pj["quotient_injectivity"] = check_injectivity(entry.f, a_max, k_max, ok);
                Rng rng_div(seed * 1000003ULL + idx * 101ULL + 1);
                pj["divisibility"] = check_divisibility(entry.f, np, trials, rng_div, ok);
                Fan sigma = regularize(dual_fan(np));
                pj["logform_equivalence"] = check_logform_equivalence(entry.f, np, sigma, m_max, cutoff, ok);
                Rng rng_norm(seed * 1000003ULL + idx * 101ULL + 2);
                pj["normalization"] = check_normalization(entry.f, np, norm_trials, rng_norm, ok);
            } else {
                pj["skipped"] = "axis condition fails; the filtration checks need it";
            }
            pj["passed"] = ok;
            if (!ok) all_ok = false;
            results.push_back(std::move(pj));
        }
        res.report["results"] = std::move(results);

        bool rounding_ok = true;
        res.report["rounding"] = check_rounding(rounding_ok);
        if (!rounding_ok) all_ok = false;

        res.report["all_passed"] = all_ok;
        res.status = all_ok ? 0 : 1;
    } catch (const std::exception& ex) {
        return input_error("check", ex.what());
    }
    return res;
}

CommandResult run_command(const std::string& name, const Json& config) {
    if (name == "newton") return run_newton(config);
    if (name == "resolve") return run_resolve(config);
    if (name == "check") return run_check(config);
    if (name == "extend") return run_extend(config);
    return input_error(name, "unknown command (expected newton, resolve, check or extend)");
}

}  // namespace nplc
