// Part of the nplc project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "nplc/nplc.h"

#include "commands.hpp"
#include "fan.hpp"
#include "filtration.hpp"
#include "json_io.hpp"
#include "logforms.hpp"
#include "nondegen.hpp"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

using namespace nplc;

struct nplc_poly {
    Poly value;
};
struct nplc_newton {
    NewtonPolyhedron value;
};
struct nplc_fan {
    Fan value;
};

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

nplc_status fail(nplc_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

nplc_status classify(const std::exception& ex) {
    g_last_error = ex.what();
    if (dynamic_cast<const std::length_error*>(&ex)) return NPLC_ERROR_LIMIT;
    if (dynamic_cast<const std::invalid_argument*>(&ex) || dynamic_cast<const std::domain_error*>(&ex))
        return NPLC_ERROR_INVALID;
    return NPLC_ERROR_INTERNAL;
}

QVec parse_point(const char* text) {
    if (!text) throw std::invalid_argument("null point string");
    QVec out;
    std::string s(text);
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string piece = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (piece.empty()) throw std::invalid_argument("empty coordinate in point string");
        out.push_back(parse_rational(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

extern "C" {

const char* nplc_version(void) { return kToolVersion; }

const char* nplc_last_error(void) { return g_last_error.c_str(); }

void nplc_string_free(char* s) { std::free(s); }

nplc_status nplc_poly_parse(const char* text, int nvars, nplc_poly** out) {
    if (!text || !out) return fail(NPLC_ERROR_INVALID, "null argument");
    try {
        auto p = new nplc_poly{parse_poly(text, nvars)};
        *out = p;
        return NPLC_OK;
    } catch (const std::invalid_argument& ex) {
        return fail(NPLC_ERROR_PARSE, ex.what());
    } catch (const std::exception& ex) {
        return classify(ex);
    }
}

nplc_status nplc_poly_from_json(const char* json, nplc_poly** out) {
    if (!json || !out) return fail(NPLC_ERROR_INVALID, "null argument");
    try {
        Json j = Json::parse(json);
        *out = new nplc_poly{poly_from_json(j)};
        return NPLC_OK;
    } catch (const Json::exception& ex) {
        return fail(NPLC_ERROR_PARSE, ex.what());
    } catch (const std::invalid_argument& ex) {
        return fail(NPLC_ERROR_PARSE, ex.what());
    } catch (const std::exception& ex) {
        return classify(ex);
    }
}

char* nplc_poly_to_json(const nplc_poly* p) {
    if (!p) return nullptr;
    return dup_string(poly_to_json(p->value).dump());
}

char* nplc_poly_to_text(const nplc_poly* p) {
    if (!p) return nullptr;
    return dup_string(p->value.to_string());
}

int nplc_poly_nvars(const nplc_poly* p) { return p ? p->value.nvars() : -1; }

int nplc_poly_axis_condition(const nplc_poly* p) {
    if (!p) return -1;
    return axis_condition(p->value) ? 1 : 0;
}

void nplc_poly_free(nplc_poly* p) { delete p; }

nplc_status nplc_newton_build(const nplc_poly* f, nplc_newton** out) {
    if (!f || !out) return fail(NPLC_ERROR_INVALID, "null argument");
    try {
        *out = new nplc_newton{newton_polyhedron(f->value)};
        return NPLC_OK;
    } catch (const std::exception& ex) {
        return classify(ex);
    }
}

char* nplc_newton_to_json(const nplc_newton* np) {
    if (!np) return nullptr;
    return dup_string(polyhedron_to_json(np->value).dump());
}

nplc_status nplc_newton_delta1_json(const nplc_newton* np, int axis, char** out_json) {
    if (!np || !out_json) return fail(NPLC_ERROR_INVALID, "null argument");
    try {
        *out_json = dup_string(delta1_to_json(build_delta1(np->value, axis)).dump());
        return NPLC_OK;
    } catch (const std::exception& ex) {
        return classify(ex);
    }
}

nplc_status nplc_newton_member(const nplc_newton* np, const char* point, const char* dilation, int* out_member) {
    if (!np || !point || !dilation || !out_member) return fail(NPLC_ERROR_INVALID, "null argument");
    try {
        *out_member = member(np->value, parse_point(point), parse_rational(dilation)) ? 1 : 0;
        return NPLC_OK;
    } catch (const std::exception& ex) {
        return classify(ex);
    }
}

nplc_status nplc_newton_filtration_value(const nplc_newton* np, const char* point, char** out_value) {
    if (!np || !point || !out_value) return fail(NPLC_ERROR_INVALID, "null argument");
    try {
        QVec q = parse_point(point);
        Exponent b;
        for (const Q& x : q) {
            if (denominator(x) != 1) throw std::invalid_argument("filtration value takes a lattice point");
            b.push_back(to_int64(numerator(x)));
        }
        *out_value = dup_string(filtration_value(np->value, b).str());
        return NPLC_OK;
    } catch (const std::exception& ex) {
        return classify(ex);
    }
}

void nplc_newton_free(nplc_newton* np) { delete np; }

nplc_status nplc_fan_dual(const nplc_newton* np, nplc_fan** out) {
    if (!np || !out) return fail(NPLC_ERROR_INVALID, "null argument");
    try {
        *out = new nplc_fan{dual_fan(np->value)};
        return NPLC_OK;
    } catch (const std::exception& ex) {
        return classify(ex);
    }
}

nplc_status nplc_fan_regularize(const nplc_fan* fan, nplc_fan** out) {
    if (!fan || !out) return fail(NPLC_ERROR_INVALID, "null argument");
    try {
        *out = new nplc_fan{regularize(fan->value)};
        return NPLC_OK;
    } catch (const std::exception& ex) {
        return classify(ex);
    }
}

nplc_status nplc_fan_from_json(const char* json, nplc_fan** out) {
    if (!json || !out) return fail(NPLC_ERROR_INVALID, "null argument");
    try {
        *out = new nplc_fan{fan_from_json(Json::parse(json))};
        return NPLC_OK;
    } catch (const Json::exception& ex) {
        return fail(NPLC_ERROR_PARSE, ex.what());
    } catch (const std::invalid_argument& ex) {
        return fail(NPLC_ERROR_PARSE, ex.what());
    } catch (const std::exception& ex) {
        return classify(ex);
    }
}

char* nplc_fan_to_json(const nplc_fan* fan) {
    if (!fan) return nullptr;
    return dup_string(fan_to_json(fan->value).dump());
}

int nplc_fan_is_regular(const nplc_fan* fan) {
    if (!fan) return -1;
    try {
        for (const auto& cone : fan->value.cones) {
            ZMat rays;
            for (auto i : cone) rays.push_back(fan->value.rays[i]);
            if (cone_multiplicity(rays) != 1) return 0;
        }
        return 1;
    } catch (const std::exception& ex) {
        g_last_error = ex.what();
        return -1;
    }
}

int nplc_fan_refines(const nplc_fan* fine, const nplc_fan* coarse) {
    if (!fine || !coarse) return -1;
    try {
        return refines(fine->value, coarse->value) ? 1 : 0;
    } catch (const std::exception& ex) {
        g_last_error = ex.what();
        return -1;
    }
}

void nplc_fan_free(nplc_fan* fan) { delete fan; }

nplc_status nplc_run(const char* command, const char* config_json, char** out_report_json) {
    if (!command || !config_json || !out_report_json) return fail(NPLC_ERROR_INVALID, "null argument");
    try {
        Json config = Json::parse(config_json);
        CommandResult res = run_command(command, config);
        *out_report_json = dup_string(res.report.dump(2));
        if (res.status == 0) return NPLC_OK;
        if (res.status == 1) return fail(NPLC_VERIFICATION_FAILED, "a verification check failed");
        return fail(NPLC_ERROR_INVALID, res.report.contains("error")
                                            ? res.report.at("error").get<std::string>()
                                            : "input error");
    } catch (const Json::exception& ex) {
        return fail(NPLC_ERROR_PARSE, ex.what());
    } catch (const std::exception& ex) {
        return classify(ex);
    }
}

}  // extern "C"
