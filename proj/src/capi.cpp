#include "saito_forge/saito_forge.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "runner.hpp"

using namespace sforge;

struct sf_instance {
    DivisorInstance inst;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

sf_status fail(sf_status st, const std::string& msg) {
    last_error = msg;
    return st;
}

template <typename Fn>
sf_status guard(Fn&& fn) {
    last_error.clear();
    try {
        return fn();
    } catch (const SyntaxError& e) {
        return fail(SF_ERR_PARSE, e.what());
    } catch (const UnknownVariable& e) {
        return fail(SF_ERR_PARSE, e.what());
    } catch (const Json::parse_error& e) {
        return fail(SF_ERR_PARSE, e.what());
    } catch (const InvalidParams& e) {
        return fail(SF_ERR_PARAMS, e.what());
    } catch (const ExhaustedRetries& e) {
        return fail(SF_ERR_PARAMS, e.what());
    } catch (const EulerViolation& e) {
        return fail(SF_ERR_PARAMS, e.what());
    } catch (const InvalidField& e) {
        return fail(SF_ERR_FIELD, e.what());
    } catch (const FieldMismatch& e) {
        return fail(SF_ERR_FIELD, e.what());
    } catch (const SaitoConstructionFailed& e) {
        return fail(SF_ERR_CONSTRUCTION, e.what());
    } catch (const DegenerateConstant& e) {
        return fail(SF_ERR_CONSTRUCTION, e.what());
    } catch (const NoSolution& e) {
        return fail(SF_ERR_CONSTRUCTION, e.what());
    } catch (const std::exception& e) {
        return fail(SF_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(SF_ERR_INTERNAL, "unknown exception");
    }
}

RouteChoice route_of(sf_route r) {
    switch (r) {
        case SF_ROUTE_EXPLICIT: return RouteChoice::Explicit;
        case SF_ROUTE_ORACLE: return RouteChoice::Oracle;
        default: return RouteChoice::Auto;
    }
}

FieldTag field_of(const char* spec) { return FieldTag::parse(spec ? spec : "q"); }

}  // namespace

extern "C" {

const char* sf_version(void) { return "0.1.0"; }

const char* sf_status_name(sf_status status) {
    switch (status) {
        case SF_OK: return "ok";
        case SF_ERR_ARGUMENT: return "invalid argument";
        case SF_ERR_PARSE: return "parse error";
        case SF_ERR_PARAMS: return "invalid parameters";
        case SF_ERR_FIELD: return "field error";
        case SF_ERR_CONSTRUCTION: return "construction failed";
        case SF_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* sf_last_error(void) { return last_error.c_str(); }

void sf_string_free(char* s) { std::free(s); }

sf_status sf_instance_create(int d, int alpha, int beta, const char* f1, const char* f2, const char* field,
                             sf_instance** out, char** validation_json) {
    return guard([&] {
        if (!f1 || !f2 || !out) return fail(SF_ERR_ARGUMENT, "null argument");
        *out = nullptr;
        if (validation_json) *validation_json = nullptr;
        FamilyParams p;
        p.d = d;
        p.alpha = alpha;
        p.beta = beta;
        p.field = field_of(field);
        p.f1 = Poly::parse(p.field, f1, 2);
        p.f2 = Poly::parse(p.field, f2, 2);
        ValidationReport rep = validate(p);
        if (validation_json) *validation_json = dup(sforge::validation_json(rep).dump(2));
        if (!rep.ok()) return fail(SF_ERR_PARAMS, "invalid family parameters: " + rep.failures());
        *out = new sf_instance{build_divisor(p)};
        return SF_OK;
    });
}

sf_status sf_instance_random(int d, int alpha, int beta, uint64_t seed, const char* field, int drop_squarefree,
                             sf_instance** out) {
    return guard([&] {
        if (!out) return fail(SF_ERR_ARGUMENT, "null argument");
        *out = nullptr;
        SquarefreeMode mode = drop_squarefree ? SquarefreeMode::Drop : SquarefreeMode::Require;
        FamilyParams p = random_instance(d, alpha, beta, seed, field_of(field), mode);
        *out = new sf_instance{build_divisor(p, !drop_squarefree)};
        return SF_OK;
    });
}

sf_status sf_instance_from_json(const char* json, int drop_squarefree, sf_instance** out) {
    return guard([&] {
        if (!json || !out) return fail(SF_ERR_ARGUMENT, "null argument");
        *out = nullptr;
        *out = new sf_instance{instance_from_json(Json::parse(json), drop_squarefree == 0)};
        return SF_OK;
    });
}

sf_status sf_instance_to_json(const sf_instance* inst, char** json) {
    return guard([&] {
        if (!inst || !json) return fail(SF_ERR_ARGUMENT, "null argument");
        *json = dup(instance_json(inst->inst).dump(2));
        return SF_OK;
    });
}

sf_status sf_instance_polynomial(const sf_instance* inst, char** f) {
    return guard([&] {
        if (!inst || !f) return fail(SF_ERR_ARGUMENT, "null argument");
        *f = dup(inst->inst.f.to_string());
        return SF_OK;
    });
}

void sf_instance_free(sf_instance* inst) { delete inst; }

void sf_verify_options_default(sf_verify_options* opt) {
    if (!opt) return;
    opt->route = SF_ROUTE_AUTO;
    opt->degree_bound = 0;
    opt->timings = 0;
}

sf_status sf_verify(const sf_instance* inst, const sf_verify_options* opt, char** report_json, int* all_pass) {
    return guard([&] {
        if (!inst || !report_json) return fail(SF_ERR_ARGUMENT, "null argument");
        VerifyOptions o;
        if (opt) {
            o.route = route_of(opt->route);
            if (opt->degree_bound > 0) o.degree_bound = opt->degree_bound;
            o.timings = opt->timings != 0;
        }
        VerifyOutcome r = verify_instance(inst->inst, o);
        *report_json = dup(r.report.dump(2));
        if (all_pass) *all_pass = r.pass ? 1 : 0;
        return SF_OK;
    });
}

sf_status sf_syzygies(const sf_instance* inst, int degree_bound, char** report_json, int* found) {
    return guard([&] {
        if (!inst || !report_json) return fail(SF_ERR_ARGUMENT, "null argument");
        int v = inst->inst.params.v();
        int bound = degree_bound > 0 ? degree_bound : 3 * v + 3;
        ProbeReport r = freeness_probe(inst->inst.f, bound);
        Json j;
        j["instance"] = instance_json(inst->inst);
        j["probe"] = probe_json(r);
        *report_json = dup(j.dump(2));
        if (found) *found = r.success ? 1 : 0;
        return SF_OK;
    });
}

sf_status sf_hilbert(const sf_instance* inst, int t_max, int csv, char** out, int* matches) {
    return guard([&] {
        if (!inst || !out) return fail(SF_ERR_ARGUMENT, "null argument");
        int v = inst->inst.params.v();
        if (t_max <= 0) t_max = 3 * v + 3;
        if (t_max < 3 * v + 3) return fail(SF_ERR_ARGUMENT, "t_max must be at least 3v + 3");
        ResolutionReport r = resolution_check(inst->inst.f, t_max);
        if (csv) {
            *out = dup(hilbert_csv(r));
        } else {
            Json j;
            j["instance"] = instance_json(inst->inst);
            j["resolution"] = resolution_json(r);
            *out = dup(j.dump(2));
        }
        if (matches) *matches = r.pass ? 1 : 0;
        return SF_OK;
    });
}

sf_status sf_export(const sf_instance* inst, sf_cas cas, sf_route route, char** script) {
    return guard([&] {
        if (!inst || !script) return fail(SF_ERR_ARGUMENT, "null argument");
        *script = dup(export_script(inst->inst, cas == SF_CAS_COCOA ? Cas::Cocoa : Cas::Macaulay2, route_of(route)));
        return SF_OK;
    });
}

void sf_sweep_config_default(sf_sweep_config* cfg) {
    if (!cfg) return;
    cfg->d_min = cfg->d_max = 5;
    cfg->alpha_min = 0;
    cfg->alpha_max = -1;
    cfg->beta_min = 0;
    cfg->beta_max = -1;
    cfg->trials = 1;
    cfg->seed = 0;
    cfg->field = nullptr;
    cfg->route = SF_ROUTE_AUTO;
    cfg->drop_squarefree = 0;
    cfg->degree_bound = 0;
    cfg->threads = 0;
    cfg->timings = 0;
}

sf_status sf_sweep(const sf_sweep_config* cfg, char** report_json, int* any_fail) {
    return guard([&] {
        if (!cfg || !report_json) return fail(SF_ERR_ARGUMENT, "null argument");
        if (cfg->threads < 0 || cfg->trials < 0) return fail(SF_ERR_ARGUMENT, "negative thread or trial count");
        SweepConfig c;
        c.d = {cfg->d_min, cfg->d_max};
        if (cfg->alpha_max >= 0) c.alpha = Range{cfg->alpha_min, cfg->alpha_max};
        if (cfg->beta_max >= 0) c.beta = Range{cfg->beta_min, cfg->beta_max};
        c.trials = cfg->trials;
        c.seed = cfg->seed;
        c.field = field_of(cfg->field);
        c.route = route_of(cfg->route);
        c.drop_squarefree = cfg->drop_squarefree != 0;
        if (cfg->degree_bound > 0) c.degree_bound = cfg->degree_bound;
        c.threads = static_cast<unsigned>(cfg->threads);
        c.timings = cfg->timings != 0;
        SweepOutcome r = run_sweep(c);
        *report_json = dup(r.report.dump(2));
        if (any_fail) *any_fail = r.any_fail() ? 1 : 0;
        return SF_OK;
    });
}

}  // extern "C"
