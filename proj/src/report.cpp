#include "report.hpp"

namespace sforge {

namespace {

Json poly_or_null(const std::optional<Poly>& p) { return p ? Json(p->to_string()) : Json(nullptr); }
Json scalar_or_null(const std::optional<Scalar>& s) { return s ? Json(s->to_string()) : Json(nullptr); }

const Json& require(const Json& j, const char* key) {
    if (!j.contains(key)) throw InvalidParams(std::string("instance JSON is missing \"") + key + "\"");
    return j.at(key);
}

}  // namespace

Json instance_json(const DivisorInstance& inst) {
    const FamilyParams& p = inst.params;
    Json j;
    j["d"] = p.d;
    j["alpha"] = p.alpha;
    j["beta"] = p.beta;
    j["field"] = p.field.to_string();
    if (p.seed) j["seed"] = *p.seed;
    j["F1"] = p.f1.to_string();
    j["F2"] = p.f2.to_string();
    j["F"] = inst.f.to_string();
    return j;
}

DivisorInstance instance_from_json(const Json& j, bool require_squarefree) {
    if (!j.is_object()) throw InvalidParams("instance JSON must be an object");
    FamilyParams p;
    try {
        p.d = require(j, "d").get<int>();
        p.alpha = require(j, "alpha").get<int>();
        p.beta = require(j, "beta").get<int>();
        p.field = FieldTag::parse(j.contains("field") ? j.at("field").get<std::string>() : "q");
        if (j.contains("seed") && !j.at("seed").is_null()) p.seed = j.at("seed").get<std::uint64_t>();
        p.f1 = Poly::parse(p.field, require(j, "F1").get<std::string>(), 2);
        p.f2 = Poly::parse(p.field, require(j, "F2").get<std::string>(), 2);
    } catch (const Json::exception& e) {
        throw InvalidParams(std::string("malformed instance JSON: ") + e.what());
    }
    DivisorInstance inst = build_divisor(p, require_squarefree);
    if (j.contains("F") && !j.at("F").is_null()) {
        Poly f = Poly::parse(p.field, j.at("F").get<std::string>(), 3);
        if (!f.is_homogeneous_of(p.d)) throw InvalidParams("F must be homogeneous of degree d");
        if (!(f == inst.f)) inst = instance_with_polynomial(p, f);
    }
    return inst;
}

Json validation_json(const ValidationReport& r) {
    Json j;
    j["ok"] = r.ok();
    Json conds = Json::array();
    for (const auto& c : r.conditions) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["required"] = c.required;
        if (!c.detail.empty()) e["detail"] = c.detail;
        conds.push_back(e);
    }
    j["conditions"] = conds;
    return j;
}

Json resolution_json(const ResolutionReport& r) {
    Json j;
    j["d"] = r.d;
    j["t_max"] = r.t_max;
    j["pass"] = r.pass;
    j["first_mismatch"] = r.first_mismatch ? Json(*r.first_mismatch) : Json(nullptr);
    j["stabilized"] = r.stabilized;
    j["expected_multiplicity"] = r.expected_multiplicity;
    Json table = Json::array();
    for (std::size_t t = 0; t < r.computed.size(); ++t)
        table.push_back(Json{{"t", t}, {"computed", r.computed[t]}, {"predicted", r.predicted[t]}});
    j["table"] = table;
    return j;
}

std::string hilbert_csv(const ResolutionReport& r) {
    std::string out = "t,computed,predicted\n";
    for (std::size_t t = 0; t < r.computed.size(); ++t)
        out += std::to_string(t) + "," + std::to_string(r.computed[t]) + "," + std::to_string(r.predicted[t]) + "\n";
    return out;
}

Json point_support_json(const PointSupportReport& r) {
    Json j;
    j["certified"] = r.certified;
    j["n"] = r.n ? Json(*r.n) : Json(nullptr);
    j["bound"] = r.bound;
    j["status"] = r.status;
    return j;
}

Json column_json(const std::array<PolyColumn, 3>& columns) {
    Json cols = Json::array();
    for (const auto& c : columns) cols.push_back(Json::array({c[0].to_string(), c[1].to_string(), c[2].to_string()}));
    return cols;
}

Json probe_json(const ProbeReport& r) {
    Json j;
    j["degree_bound"] = r.degree_bound;
    j["success"] = r.success;
    Json fresh = Json::array();
    for (auto [t, n] : r.fresh_counts) fresh.push_back(Json{{"degree", t}, {"count", n}});
    j["fresh_syzygies"] = fresh;
    j["column_degrees"] = r.column_degrees;
    j["unit_c"] = scalar_or_null(r.unit);
    j["columns"] = r.matrix ? column_json(*r.matrix) : Json(nullptr);
    return j;
}

Json saito_json(const DivisorInstance& inst, const SaitoMatrix& m, const SaitoReport& rep, bool* pass_out) {
    bool pass = rep.pass;
    Json res;
    Json strata(nullptr);
    if (m.ingredients) {
        Poly r3 = check_second_column(inst, *m.ingredients);
        ThirdColumnResidual r4 = check_third_column(inst, *m.ingredients);
        res["h6_relation"] = r4.h6_relation.to_string();
        res["column2"] = r3.to_string();
        res["column3"] = r4.total.to_string();
        strata = Json{{"z2", r4.z2.to_string()},
                      {"z1", r4.z1.to_string()},
                      {"z0", r4.z0.to_string()},
                      {"g1h4_minus_g2h2", r4.g_identity.to_string()}};
        pass = pass && r3.is_zero() && r4.zero() && r4.h6_relation.is_zero() && r4.g_identity.is_zero();
    } else {
        res["h6_relation"] = nullptr;
        res["column2"] = nullptr;
        res["column3"] = nullptr;
    }
    res["det"] = rep.det_residual.to_string();
    pass = pass && rep.det_residual.is_zero();

    Json j;
    j["route"] = route_name(m.route);
    j["pass"] = pass;
    j["unit_c"] = scalar_or_null(rep.unit);
    j["column_degrees"] = rep.column_degrees;
    j["residuals"] = res;
    Json k;
    if (m.constants) {
        k["a"] = m.constants->a.to_string();
        k["b"] = m.constants->b.to_string();
        k["mu"] = m.constants->mu.to_string();
        k["lambda"] = scalar_or_null(m.constants->lambda);
    } else {
        k = Json{{"a", nullptr}, {"b", nullptr}, {"mu", nullptr}, {"lambda", nullptr}};
    }
    j["constants"] = k;
    j["column3_strata"] = strata;
    Json q = Json::array();
    for (const auto& qk : rep.quotients) q.push_back(poly_or_null(qk));
    j["quotients"] = q;
    j["det"] = rep.det.to_string();
    j["columns"] = column_json(m.columns);
    Json notes = Json::object();
    for (const auto& n : m.notes) notes[n.key] = n.value;
    j["notes"] = notes;
    if (pass_out) *pass_out = pass;
    return j;
}

}  // namespace sforge
