// Command-line front end. Talks to the library only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "saito_forge/saito_forge.h"

namespace {

constexpr int kPass = 0, kFail = 1, kInput = 2;

struct InstanceArgs {
    std::string d, alpha = "0", beta = "0", f1, f2, field = "q", instance;
    std::optional<unsigned long long> seed;
    bool drop_squarefree = false;
};

struct Output {
    std::string path;
    int write(const std::string& text) const {
        if (path.empty() || path == "-") {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << '\n';
            return kPass;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << path << "\n";
            return kInput;
        }
        f << text;
        if (!text.empty() && text.back() != '\n') f << '\n';
        return kPass;
    }
};

int status_exit(sf_status st) {
    switch (st) {
        case SF_OK: return kPass;
        case SF_ERR_CONSTRUCTION:
        case SF_ERR_INTERNAL: return kFail;
        default: return kInput;
    }
}

int report_error(sf_status st) {
    std::cerr << "error (" << sf_status_name(st) << "): " << sf_last_error() << "\n";
    return status_exit(st);
}

std::string take(char* s) {
    std::string out = s ? s : "";
    sf_string_free(s);
    return out;
}

bool parse_int(const std::string& s, int& out) {
    try {
        std::size_t used = 0;
        out = std::stoi(s, &used);
        return used == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

bool parse_range(const std::string& s, int& lo, int& hi) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        if (!parse_int(s, lo)) return false;
        hi = lo;
        return true;
    }
    return parse_int(s.substr(0, dots), lo) && parse_int(s.substr(dots + 2), hi);
}

bool parse_route(const std::string& s, sf_route& r) {
    if (s == "auto") r = SF_ROUTE_AUTO;
    else if (s == "explicit") r = SF_ROUTE_EXPLICIT;
    else if (s == "oracle") r = SF_ROUTE_ORACLE;
    else return false;
    return true;
}

void add_instance_options(CLI::App* cmd, InstanceArgs& a) {
    cmd->add_option("--d", a.d, "degree of F");
    cmd->add_option("--alpha", a.alpha, "degree of F1");
    cmd->add_option("--beta", a.beta, "x-exponent of the z term");
    cmd->add_option("--f1", a.f1, "F1 as a form in x, y");
    cmd->add_option("--f2", a.f2, "F2 as a form in x, y");
    cmd->add_option("--field", a.field, "q or fp:P");
    cmd->add_option("--seed", a.seed, "seed for random F1, F2");
    cmd->add_option("--instance", a.instance, "instance JSON file ('-' for stdin)");
    cmd->add_flag("--drop-squarefree", a.drop_squarefree, "allow F1 with repeated factors");
}

// Returns an exit code; on success *out owns the instance.
int load_instance(const InstanceArgs& a, sf_instance** out, bool print_validation) {
    sf_status st;
    if (!a.instance.empty()) {
        std::string text;
        if (a.instance == "-") {
            text.assign(std::istreambuf_iterator<char>(std::cin), {});
        } else {
            std::ifstream f(a.instance, std::ios::binary);
            if (!f) {
                std::cerr << "error: cannot read " << a.instance << "\n";
                return kInput;
            }
            text.assign(std::istreambuf_iterator<char>(f), {});
        }
        st = sf_instance_from_json(text.c_str(), a.drop_squarefree, out);
        return st == SF_OK ? kPass : report_error(st);
    }
    int d = 0, alpha = 0, beta = 0;
    if (a.d.empty() || !parse_int(a.d, d) || !parse_int(a.alpha, alpha) || !parse_int(a.beta, beta)) {
        std::cerr << "error: --d, --alpha, --beta must be integers (or pass --instance)\n";
        return kInput;
    }
    if (!a.f1.empty() || !a.f2.empty()) {
        if (a.f1.empty() || a.f2.empty()) {
            std::cerr << "error: --f1 and --f2 go together\n";
            return kInput;
        }
        char* validation = nullptr;
        st = sf_instance_create(d, alpha, beta, a.f1.c_str(), a.f2.c_str(), a.field.c_str(), out, &validation);
        std::string v = take(validation);
        if (st != SF_OK && print_validation && !v.empty()) std::cout << v << "\n";
        return st == SF_OK ? kPass : report_error(st);
    }
    st = sf_instance_random(d, alpha, beta, a.seed.value_or(0), a.field.c_str(), a.drop_squarefree, out);
    return st == SF_OK ? kPass : report_error(st);
}

struct Holder {
    sf_instance* p = nullptr;
    ~Holder() { sf_instance_free(p); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Free divisor families in P^2: construction, Saito matrices and checks", "saito-forge"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(sf_version()));

    InstanceArgs ia;
    Output out;
    std::string route_text = "auto", cas_text = "macaulay2";
    int degree_bound = 0;
    bool timings = false, csv = false;

    auto* construct = app.add_subcommand("construct", "build an instance and print its JSON");
    add_instance_options(construct, ia);
    construct->add_option("--out", out.path, "output path");

    auto* verify = app.add_subcommand("verify", "Saito matrix, resolution and singular-locus checks");
    add_instance_options(verify, ia);
    verify->add_option("--route", route_text, "explicit | oracle | auto");
    verify->add_option("--degree-bound", degree_bound, "resolution degree bound (default 3v+3)");
    verify->add_flag("--timings", timings, "include wall-clock timings");
    verify->add_option("--out", out.path, "output path");

    auto* syz = app.add_subcommand("syzygies", "fresh syzygies and Saito assembly search");
    add_instance_options(syz, ia);
    syz->add_option("--degree-bound", degree_bound, "search bound (default 3v+3)");
    syz->add_option("--out", out.path, "output path");

    auto* hilb = app.add_subcommand("hilbert", "Hilbert function of S/J(F) against the resolution");
    add_instance_options(hilb, ia);
    hilb->add_option("--degree-bound", degree_bound, "largest degree (default 3v+3)");
    hilb->add_flag("--csv", csv, "CSV instead of JSON");
    hilb->add_option("--out", out.path, "output path");

    std::string sweep_alpha, sweep_beta;
    int trials = 1, threads = 0;
    auto* sweep = app.add_subcommand("sweep", "verify every legal (d, alpha, beta) in a range");
    sweep->add_option("--d", ia.d, "degree or range lo..hi")->required();
    sweep->add_option("--alpha", sweep_alpha, "alpha or range");
    sweep->add_option("--beta", sweep_beta, "beta or range");
    sweep->add_option("--trials", trials, "random instances per (d, alpha, beta)");
    sweep->add_option("--seed", ia.seed, "base seed");
    sweep->add_option("--field", ia.field, "q or fp:P");
    sweep->add_option("--route", route_text, "explicit | oracle | auto");
    sweep->add_option("--degree-bound", degree_bound, "degree bound");
    sweep->add_option("--threads", threads, "worker threads (default SAITO_FORGE_THREADS or all cores)");
    sweep->add_flag("--drop-squarefree", ia.drop_squarefree, "exploratory: F1 may have a square factor");
    sweep->add_flag("--timings", timings, "include wall-clock timings");
    sweep->add_option("--out", out.path, "output path");

    auto* exp = app.add_subcommand("export", "Macaulay2 or CoCoA-5 cross-check script");
    add_instance_options(exp, ia);
    exp->add_option("--cas", cas_text, "macaulay2 | cocoa");
    exp->add_option("--route", route_text, "explicit | oracle | auto");
    exp->add_option("--out", out.path, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kInput;
    }

    sf_route route = SF_ROUTE_AUTO;
    if (!parse_route(route_text, route)) {
        std::cerr << "error: --route must be explicit, oracle or auto\n";
        return kInput;
    }

    if (*sweep) {
        sf_sweep_config cfg;
        sf_sweep_config_default(&cfg);
        if (!parse_range(ia.d, cfg.d_min, cfg.d_max) ||
            (!sweep_alpha.empty() && !parse_range(sweep_alpha, cfg.alpha_min, cfg.alpha_max)) ||
            (!sweep_beta.empty() && !parse_range(sweep_beta, cfg.beta_min, cfg.beta_max))) {
            std::cerr << "error: ranges are N or LO..HI\n";
            return kInput;
        }
        cfg.trials = trials;
        cfg.seed = ia.seed.value_or(0);
        cfg.field = ia.field.c_str();
        cfg.route = route;
        cfg.drop_squarefree = ia.drop_squarefree;
        cfg.degree_bound = degree_bound;
        cfg.threads = threads;
        cfg.timings = timings;
        char* report = nullptr;
        int any_fail = 0;
        sf_status st = sf_sweep(&cfg, &report, &any_fail);
        if (st != SF_OK) return report_error(st);
        if (int rc = out.write(take(report))) return rc;
        return any_fail ? kFail : kPass;
    }

    Holder inst;
    if (int rc = load_instance(ia, &inst.p, construct->parsed())) return rc;
    char* text = nullptr;

    if (*construct) {
        sf_status st = sf_instance_to_json(inst.p, &text);
        if (st != SF_OK) return report_error(st);
        return out.write(take(text));
    }
    if (*verify) {
        sf_verify_options opt;
        sf_verify_options_default(&opt);
        opt.route = route;
        opt.degree_bound = degree_bound;
        opt.timings = timings;
        int pass = 0;
        sf_status st = sf_verify(inst.p, &opt, &text, &pass);
        if (st != SF_OK) return report_error(st);
        if (int rc = out.write(take(text))) return rc;
        return pass ? kPass : kFail;
    }
    if (*syz) {
        int found = 0;
        sf_status st = sf_syzygies(inst.p, degree_bound, &text, &found);
        if (st != SF_OK) return report_error(st);
        if (int rc = out.write(take(text))) return rc;
        return found ? kPass : kFail;
    }
    if (*hilb) {
        int matches = 0;
        sf_status st = sf_hilbert(inst.p, degree_bound, csv, &text, &matches);
        if (st != SF_OK) return report_error(st);
        if (int rc = out.write(take(text))) return rc;
        return matches ? kPass : kFail;
    }
    if (*exp) {
        sf_cas cas;
        if (cas_text == "macaulay2") cas = SF_CAS_MACAULAY2;
        else if (cas_text == "cocoa") cas = SF_CAS_COCOA;
        else {
            std::cerr << "error: --cas must be macaulay2 or cocoa\n";
            return kInput;
        }
        sf_status st = sf_export(inst.p, cas, route, &text);
        if (st != SF_OK) return report_error(st);
        return out.write(take(text));
    }
    return kInput;
}
