#include "flagcr/serialize.hpp"

namespace flagcr {

using nlohmann::json;

std::string type_key(const std::vector<int>& type) {
    std::string s;
    for (size_t i = 0; i < type.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(type[i]);
    }
    return s;
}

json to_json(const Mat& m) {
    return json(m.to_rows());
}

json to_json(const Subspace& w) {
    json rows = json::array();
    for (const auto& r : w.basis_rows()) {
        json row = json::array();
        for (uint8_t c : r) row.push_back(int(c));
        rows.push_back(std::move(row));
    }
    return json{{"dim", w.dim()}, {"basis", std::move(rows)}};
}

json to_json(const Flag& fl) {
    json members = json::array();
    for (const Subspace& w : fl.members) members.push_back(to_json(w));
    return json{{"type", fl.type()}, {"members", std::move(members)}};
}

json to_json(const HomologyReport& rep) {
    json torsion = json::array();
    for (const auto& t : rep.torsion) torsion.push_back(t);
    return json{{"reduced_betti", rep.reduced_betti},
                {"torsion", std::move(torsion)},
                {"euler_characteristic", rep.euler_characteristic},
                {"acyclic", rep.acyclic()}};
}

json complex_summary_json(const SubComplex& y) {
    json types = json::object();
    for (const auto& [t, c] : y.type_counts()) types[type_key(t)] = c;
    json vertices = json::array();
    size_t nv = 0;
    for (const auto& [t, c] : y.type_counts())
        if (t.size() == 1) nv += c;
    return json{{"flags", y.size()}, {"empty", y.empty()}, {"vertices", nv},
                {"types", std::move(types)}};
}

json to_json(const CrVerdict& v) {
    json j{{"is_cr", v.is_cr}};
    if (v.failure) j["flag_without_opposite"] = to_json(*v.failure);
    j["witnesses"] = v.witnesses.size();
    return j;
}

json to_json(const CentreReport& rep) {
    return json{{"centre", to_json(rep.centre)},
                {"fixed_complex_flags", rep.fixed_complex.size()},
                {"pointwise_order", rep.pointwise.order},
                {"setwise_order", rep.setwise.order},
                {"k_fixed_flags", rep.k_fixed.size()},
                {"checks",
                 json{{"sandwich", rep.sandwich_ok},
                      {"xm_equals_y", rep.xm_equals_y},
                      {"m_normal_in_k", rep.m_normal_in_k},
                      {"xk_nonempty", rep.xk_nonempty},
                      {"xk_inside_y", rep.xk_inside_y},
                      {"k_fixes_centre", rep.k_fixes_centre}}}};
}

json to_json(const LoewyCentres& lc) {
    return json{{"socle_flag", to_json(lc.socle_flag)},
                {"radical_flag", to_json(lc.radical_flag)},
                {"k_stable", lc.k_stable}};
}

json to_json(const FixedPointVerdict& v) {
    json j{{"is_fixed_point_form", v.is_fixed_point_form},
           {"pointwise_order", v.pointwise.order}};
    if (v.counterexample) j["counterexample"] = to_json(*v.counterexample);
    return j;
}

json to_json(const UnipotentReport& rep) {
    return json{{"unipotent_order", rep.unipotent.order},
                {"g_cr", rep.gcr},
                {"fixed_complex_contractible", rep.fixed_complex_contractible},
                {"normalizer_order", rep.normalizer.order},
                {"fixed_flag", to_json(rep.fixed_flag)},
                {"normalizer_inside_setwise", rep.normalizer_inside_setwise}};
}

json to_json(const ConvexityResult& res) {
    json j{{"convex", res.convex}};
    if (res.counterexample) {
        j["counterexample"] = json{{"a", to_json(res.counterexample->a)},
                                   {"b", to_json(res.counterexample->b)},
                                   {"missing", to_json(res.counterexample->missing)}};
    }
    return j;
}

}  // namespace flagcr
