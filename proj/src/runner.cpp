#include "runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <random>
#include <thread>

namespace sforge {

namespace {

class Stopwatch {
public:
    explicit Stopwatch(bool on) : on_(on) {}
    template <typename Fn>
    auto time(const char* key, Fn&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        auto finish = [&] {
            if (on_)
                ms_[key] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        };
        if constexpr (std::is_void_v<decltype(fn())>) {
            fn();
            finish();
        } else {
            auto r = fn();
            finish();
            return r;
        }
    }
    const Json& json() const { return ms_; }

private:
    bool on_;
    Json ms_ = Json::object();
};

unsigned thread_budget(unsigned requested, std::size_t jobs) {
    unsigned n = requested;
    if (n == 0) {
        n = std::max(1u, std::thread::hardware_concurrency());
        if (const char* env = std::getenv("SAITO_FORGE_THREADS")) {
            long cap = std::strtol(env, nullptr, 10);
            if (cap > 0) n = std::min(n, static_cast<unsigned>(cap));
        }
    }
    return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(n, jobs)));
}

std::string route_flag(RouteChoice r) {
    switch (r) {
        case RouteChoice::Explicit: return "explicit";
        case RouteChoice::Oracle: return "oracle";
        default: return "auto";
    }
}

}  // namespace

VerifyOutcome verify_instance(const DivisorInstance& inst, const VerifyOptions& opt) {
    const FamilyParams& p = inst.params;
    int v = p.v();
    Stopwatch clock(opt.timings);
    std::vector<std::pair<std::string, bool>> checks;
    Json saito;

    try {
        SaitoMatrix m = clock.time("saito_build", [&] { return build_saito_matrix(inst, opt.route, false); });
        SaitoReport rep = clock.time("saito_verify", [&] { return verify_saito(inst.f, m.columns); });
        bool pass = false;
        saito = saito_json(inst, m, rep, &pass);
        checks.emplace_back("saito", pass);
    } catch (const SaitoConstructionFailed& e) {
        saito = Json{{"route", route_flag(opt.route)}, {"pass", false}, {"error", e.what()},
                     {"failed_identity", e.which()}, {"residual", e.residual()}};
        checks.emplace_back("saito", false);
    } catch (const Error& e) {
        saito = Json{{"route", route_flag(opt.route)}, {"pass", false}, {"error", e.what()}};
        checks.emplace_back("saito", false);
    }

    int t_max = std::max(opt.degree_bound.value_or(3 * v + 3), 3 * v + 3);
    ResolutionReport res = clock.time("resolution", [&] { return resolution_check(inst.f, t_max); });
    checks.emplace_back("resolution", res.pass);

    PointSupportReport ps = clock.time("point_support", [&] { return point_support_check(inst.f, 3 * v + 2); });
    checks.emplace_back("point_support", ps.certified);

    bool irreducible = false;
    try {
        irreducible = is_irreducible(inst.f);
    } catch (const Error&) {
    }
    checks.emplace_back("irreducible", irreducible);

    bool euler = false;
    try {
        euler = euler_check(inst.f) == Scalar(p.field, static_cast<long>(p.d));
    } catch (const Error&) {
    }
    checks.emplace_back("euler", euler);

    VerifyOutcome out;
    out.pass = true;
    for (const auto& [name, ok] : checks)
        if (!ok) {
            out.pass = false;
            out.failed.push_back(name);
        }
    Json r;
    r["instance"] = instance_json(inst);
    r["pass"] = out.pass;
    r["failed"] = out.failed;
    r["saito"] = saito;
    r["resolution"] = resolution_json(res);
    r["point_support"] = point_support_json(ps);
    r["irreducible"] = irreducible;
    r["euler"] = euler;
    if (opt.timings) r["timings_ms"] = clock.json();
    out.report = std::move(r);
    return out;
}

Range parse_range(const std::string& text) {
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size()) throw InvalidParams("bad range \"" + text + "\"");
        return v;
    };
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = to_int(text);
        return {v, v};
    }
    return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

std::uint64_t instance_seed(std::uint64_t seed, int d, int alpha, int beta, int trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(alpha),
                      static_cast<std::uint32_t>(beta), static_cast<std::uint32_t>(trial)};
    std::uint32_t w[2];
    seq.generate(w, w + 2);
    return (static_cast<std::uint64_t>(w[0]) << 32) | w[1];
}

namespace {

struct Job {
    int d, alpha, beta, trial;
    std::uint64_t seed;
};

Json drop_finding(const DivisorInstance& inst, const SweepConfig& cfg) {
    int v = inst.params.v();
    int bound = cfg.degree_bound.value_or(3 * v + 3);
    ProbeReport probe = freeness_probe(inst.f, bound);
    ResolutionReport res = resolution_check(inst.f, 3 * v + 3);
    Json j;
    j["f1_squarefree"] = is_squarefree_bivariate(inst.params.f1);
    j["irreducible"] = is_irreducible(inst.f);
    j["probe_success"] = probe.success;
    j["column_degrees"] = probe.column_degrees;
    j["resolution_matches_family"] = res.pass;
    j["stabilized_hilbert"] = res.stabilized;
    return j;
}

Json run_job(const Job& job, const SweepConfig& cfg, bool& pass) {
    Json rec;
    rec["d"] = job.d;
    rec["alpha"] = job.alpha;
    rec["beta"] = job.beta;
    rec["trial"] = job.trial;
    rec["seed"] = job.seed;
    pass = false;
    try {
        SquarefreeMode mode = cfg.drop_squarefree ? SquarefreeMode::Drop : SquarefreeMode::Require;
        FamilyParams p = random_instance(job.d, job.alpha, job.beta, job.seed, cfg.field, mode);
        DivisorInstance inst = build_divisor(p, !cfg.drop_squarefree);
        rec["instance"] = instance_json(inst);
        if (cfg.drop_squarefree) {
            rec["findings"] = drop_finding(inst, cfg);
            pass = true;
            return rec;
        }
        VerifyOptions opt;
        opt.route = cfg.route;
        opt.degree_bound = cfg.degree_bound;
        opt.timings = cfg.timings;
        VerifyOutcome out = verify_instance(inst, opt);
        pass = out.pass;
        rec["pass"] = out.pass;
        rec["failed"] = out.failed;
        rec["route"] = out.report["saito"]["route"];
        rec["unit_c"] = out.report["saito"].contains("unit_c") ? out.report["saito"]["unit_c"] : Json(nullptr);
        if (cfg.timings) rec["timings_ms"] = out.report["timings_ms"];
    } catch (const Error& e) {
        rec["pass"] = false;
        rec["error"] = e.what();
    }
    return rec;
}

}  // namespace

SweepOutcome run_sweep(const SweepConfig& cfg) {
    if (cfg.d.lo < 5 || cfg.d.hi < cfg.d.lo) throw InvalidParams("degree range must satisfy 5 <= lo <= hi");
    if (cfg.trials < 0) throw InvalidParams("trials must be nonnegative");
    std::vector<Job> jobs;
    for (int d = cfg.d.lo; d <= cfg.d.hi; ++d) {
        if (!cfg.field.admits_degree(d)) throw InvalidParams("field characteristic must exceed 3d");
        for (auto [a, b] : legal_pairs(d)) {
            if (cfg.alpha && !cfg.alpha->contains(a)) continue;
            if (cfg.beta && !cfg.beta->contains(b)) continue;
            for (int t = 0; t < cfg.trials; ++t) jobs.push_back({d, a, b, t, instance_seed(cfg.seed, d, a, b, t)});
        }
    }

    std::vector<Json> records(jobs.size());
    std::vector<char> ok(jobs.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
            bool pass = false;
            records[i] = run_job(jobs[i], cfg, pass);
            ok[i] = pass ? 1 : 0;
        }
    };
    unsigned n = thread_budget(cfg.threads, jobs.size());
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    SweepOutcome out;
    out.total = jobs.size();
    for (char c : ok) (c ? out.passed : out.failed) += 1;
    if (cfg.drop_squarefree) out.failed = 0;

    Json config;
    config["d"] = std::to_string(cfg.d.lo) + ".." + std::to_string(cfg.d.hi);
    config["alpha"] = cfg.alpha ? Json(std::to_string(cfg.alpha->lo) + ".." + std::to_string(cfg.alpha->hi)) : Json(nullptr);
    config["beta"] = cfg.beta ? Json(std::to_string(cfg.beta->lo) + ".." + std::to_string(cfg.beta->hi)) : Json(nullptr);
    config["trials"] = cfg.trials;
    config["seed"] = cfg.seed;
    config["field"] = cfg.field.to_string();
    config["route"] = route_flag(cfg.route);
    config["drop_squarefree"] = cfg.drop_squarefree;
    Json summary{{"total", out.total}, {"pass", out.passed}, {"fail", out.failed}};
    Json r;
    r["config"] = config;
    r["summary"] = summary;
    r[cfg.drop_squarefree ? "findings" : "instances"] = records;
    out.report = std::move(r);
    return out;
}

std::string export_script(const DivisorInstance& inst, Cas cas, RouteChoice route) {
    const FamilyParams& p = inst.params;
    // The matrix always comes from the family member; F is written as given, so an edited F
    // produces a script whose assertions fail.
    SaitoMatrix m = build_saito_matrix(build_divisor(p, false), route, true);
    const Poly& f = inst.f;
    std::string fs = f.to_string(), unit = m.unit.to_string();
    std::string head = "saito-forge export: d=" + std::to_string(p.d) + " alpha=" + std::to_string(p.alpha) +
                       " beta=" + std::to_string(p.beta) + " field=" + p.field.to_string() + " route=" +
                       route_name(m.route);
    auto entry = [&](int i, int j) { return m.columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)].to_string(); };
    auto rows = [&] {
        std::string s;
        for (int i = 0; i < 3; ++i) {
            s += i ? ", " : "";
            s += "{" + entry(i, 0) + ", " + entry(i, 1) + ", " + entry(i, 2) + "}";
        }
        return s;
    };
    std::string out;
    if (cas == Cas::Macaulay2) {
        std::string ring = p.field.is_rational() ? "QQ" : "ZZ/" + std::to_string(p.field.modulus());
        std::string r = rows();
        out += "-- " + head + "\n";
        out += "R = " + ring + "[x,y,z];\n";
        out += "F = " + fs + ";\n";
        out += "J = ideal(diff(x,F), diff(y,F), diff(z,F), F);\n";
        out += "assert(codim J == 2);\n";
        out += "assert(pdim comodule J == 2);\n";
        out += "A = matrix{" + r + "};\n";
        out += "assert(det A == (" + unit + ") * F);\n";
        out += "assert(((matrix{{diff(x,F), diff(y,F), diff(z,F)}} * A) % ideal F) == 0);\n";
        out += "print \"all assertions hold\";\n";
    } else {
        std::string ring = p.field.is_rational() ? "QQ" : "ZZ/(" + std::to_string(p.field.modulus()) + ")";
        std::string r;
        for (int i = 0; i < 3; ++i) {
            r += i ? ", " : "";
            r += "[" + entry(i, 0) + ", " + entry(i, 1) + ", " + entry(i, 2) + "]";
        }
        out += "-- " + head + "\n";
        out += "Use R ::= " + ring + "[x,y,z];\n";
        out += "F := " + fs + ";\n";
        out += "J := ideal(deriv(F,x), deriv(F,y), deriv(F,z), F);\n";
        out += "If dim(R/J) <> 1 Then error(\"J(F) does not have codimension 2\"); EndIf;\n";
        out += "S := syz([deriv(F,x), deriv(F,y), deriv(F,z)]);\n";
        out += "If len(gens(S)) <> 2 Then error(\"syzygies of the partials are not free of rank 2\"); EndIf;\n";
        out += "A := mat([" + r + "]);\n";
        out += "If det(A) <> (" + unit + ")*F Then error(\"det(A) is not the expected multiple of F\"); EndIf;\n";
        out += "G := mat([[deriv(F,x), deriv(F,y), deriv(F,z)]]) * A;\n";
        out += "For j := 1 To 3 Do\n";
        out += "  If NF(G[1,j], ideal(F)) <> 0 Then error(\"a column is not tangent to F\"); EndIf;\n";
        out += "EndFor;\n";
        out += "println \"all assertions hold\";\n";
    }
    return out;
}

}  // namespace sforge
