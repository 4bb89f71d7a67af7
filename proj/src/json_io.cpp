#include "klrel/json_io.hpp"

namespace klrel {

namespace {

void require_equal(bool ok, const std::string& what) {
    if (!ok) throw LabelingMismatch("tables dump mismatch: " + what);
}

} // namespace

Json verification_json(const FamilyVerification& fv) {
    return Json{{"family", fv.family},
                {"type", fv.type},
                {"points", fv.points_tested},
                {"max_rel_residual", fv.max_relative_residual},
                {"tolerance", fv.tolerance},
                {"pass", fv.pass}};
}

Json verification_sweep_json(const std::vector<FamilyVerification>& reports,
                             const VerifyOptions& opt) {
    Json recs = Json::array();
    bool all_pass = true;
    for (const FamilyVerification& fv : reports) {
        recs.push_back(verification_json(fv));
        all_pass = all_pass && fv.pass;
    }
    return Json{{"seed", opt.seed},
                {"points", opt.points},
                {"tolerance", opt.tolerance},
                {"reports", std::move(recs)},
                {"all_pass", all_pass}};
}

Json orbit_report_json(const FamilyClassification& fc) {
    Json orbits = Json::array();
    for (const TupleOrbit& o : fc.orbits) {
        Json labels = Json::array();
        for (const CosetId& id : o.representative) labels.push_back(label_string(id));
        orbits.push_back(Json{{"representative", std::move(labels)}, {"size", o.size}});
    }
    return Json{{"family", family_name(fc.family)},
                {"total", fc.total},
                {"orbits", std::move(orbits)}};
}

Json tables_json(const GroupTables& t) {
    Json j;
    j["version"] = 1;
    j["order"] = t.order();
    j["identity"] = t.identity;
    j["w0"] = t.w0;
    j["defining_gens"] = t.defining_gens;
    j["coxeter_gens"] = t.coxeter_gens;

    Json elems = Json::array();
    for (const Mat7i& m : t.elements) {
        Json flat = Json::array();
        for (int i = 0; i < 7; ++i)
            for (int k = 0; k < 7; ++k) flat.push_back(m(i, k));
        elems.push_back(std::move(flat));
    }
    j["elements"] = std::move(elems);

    j["gk_elements"] = t.gk_elements;
    j["gl_elements"] = t.gl_elements;
    j["k_label"] = t.k_label;
    j["l_label"] = t.l_label;
    j["k_rep"] = t.k_rep;
    j["l_rep"] = t.l_rep;
    j["kl_meet"] = t.kl_meet;
    j["k_act"] = t.k_act;
    j["l_act"] = t.l_act;
    return j;
}

void check_tables_json(const Json& j, const GroupTables& t) {
    require_equal(j.at("version").get<int>() == 1, "version");
    require_equal(j.at("order").get<int>() == t.order(), "order");
    require_equal(j.at("identity").get<int>() == t.identity, "identity");
    require_equal(j.at("w0").get<int>() == t.w0, "w0");
    require_equal(j.at("defining_gens").get<std::array<int, 6>>() == t.defining_gens,
                  "defining_gens");
    require_equal(j.at("coxeter_gens").get<std::array<int, 6>>() == t.coxeter_gens,
                  "coxeter_gens");

    const Json& elems = j.at("elements");
    require_equal(elems.size() == t.elements.size(), "element count");
    for (std::size_t e = 0; e < t.elements.size(); ++e) {
        const auto flat = elems[e].get<std::array<int, 49>>();
        for (int i = 0; i < 7; ++i)
            for (int k = 0; k < 7; ++k)
                require_equal(flat[static_cast<std::size_t>(7 * i + k)] ==
                                  t.elements[e](i, k),
                              "element " + std::to_string(e) + " entry");
    }

    require_equal(j.at("gk_elements").get<std::vector<int>>() == t.gk_elements,
                  "gk_elements");
    require_equal(j.at("gl_elements").get<std::vector<int>>() == t.gl_elements,
                  "gl_elements");
    require_equal(j.at("k_label").get<std::vector<std::int8_t>>() == t.k_label,
                  "k_label");
    require_equal(j.at("l_label").get<std::vector<std::int8_t>>() == t.l_label,
                  "l_label");
    require_equal(j.at("k_rep").get<std::array<int, 32>>() == t.k_rep, "k_rep");
    require_equal(j.at("l_rep").get<std::array<int, 12>>() == t.l_rep, "l_rep");
    require_equal(j.at("kl_meet").get<std::array<std::array<bool, 12>, 32>>() ==
                      t.kl_meet,
                  "kl_meet");
    require_equal(j.at("k_act").get<std::array<std::array<std::int8_t, 32>, 6>>() ==
                      t.k_act,
                  "k_act");
    require_equal(j.at("l_act").get<std::array<std::array<std::int8_t, 12>, 6>>() ==
                      t.l_act,
                  "l_act");
}

std::string to_stable_string(const Json& j) { return j.dump(2); }

} // namespace klrel
