#pragma once

#include <json.hpp>

#include <algorithm>

#include "multider/arrangement.hpp"
#include "multider/catalan.hpp"
#include "multider/derivation.hpp"
#include "multider/invariants.hpp"
#include "multider/poly_io.hpp"

namespace multider {

using Json = nlohmann::ordered_json;

inline Json order_to_json(long order) {
    if (order == kInfiniteOrder) return Json("inf");
    return Json(order);
}

/// {"verdict", "degrees" (sorted exponents), "multiplicity_total",
///  "det_over_Q_constant", "orders" (field rows x hyperplane columns)}
inline Json to_json(const FreenessReport& rep) {
    Json j;
    j["verdict"] = to_string(rep.verdict);
    std::vector<long> degrees = rep.degrees;
    std::sort(degrees.begin(), degrees.end());
    j["degrees"] = degrees;
    j["multiplicity_total"] = rep.multiplicity_total;
    j["det_over_Q_constant"] = rep.det_over_q_constant;
    Json orders = Json::array();
    for (const auto& row : rep.orders) {
        Json r = Json::array();
        for (long o : row) r.push_back(order_to_json(o));
        orders.push_back(std::move(r));
    }
    j["orders"] = std::move(orders);
    return j;
}

template <class K>
Json to_json(const Multiarrangement<K>& arr) {
    Json j;
    j["dim"] = arr.vars.ell + (arr.vars.with_z ? 1 : 0);
    j["field"] = arr.field_r == 1 ? "Q" : "Q(zeta_" + std::to_string(arr.field_r) + ")";
    Json hs = Json::array();
    for (const auto& h : arr.hyperplanes) {
        Json e;
        e["form"] = to_string(h.form.to_poly(arr.vars));
        e["mult"] = h.mult;
        hs.push_back(std::move(e));
    }
    j["hyperplanes"] = std::move(hs);
    return j;
}

inline Json to_json(const ConjectureResult& res) {
    Json j;
    j["m"] = res.m;
    j["i"] = res.i;
    j["x_div"] = res.x_div;
    j["sum_div"] = res.sum_div;
    j["diff_div"] = res.diff_div;
    return j;
}

inline Json to_json(const PrimitiveRelationReport& rep) {
    Json j;
    Json rels = Json::array();
    for (const auto& rel : rep.relations) {
        Json e;
        e["relation"] = rel.description;
        e["holds"] = rel.holds;
        e["constant"] = rel.constant;
        rels.push_back(std::move(e));
    }
    j["relations"] = std::move(rels);
    j["all_hold"] = rep.all_hold;
    return j;
}

inline Json to_json(const CatalanBasisResult& res) {
    Json j;
    j["preconditions_ok"] = res.preconditions_ok;
    j["failed_preconditions"] = res.failed_preconditions;
    j["affine_member"] = Json::array({res.affine_member[0], res.affine_member[1]});
    j["freeness"] = to_json(res.report);
    return j;
}

/// Rebuild an arrangement from its JSON form; inverse of to_json above.
template <class K>
Multiarrangement<K> arrangement_from_json(const Json& j) {
    int dim = j.at("dim").get<int>();
    std::string field = j.at("field").get<std::string>();
    int r = 1;
    if (field != "Q") {
        const std::string prefix = "Q(zeta_";
        if (field.rfind(prefix, 0) != 0 || field.back() != ')')
            throw ParseError("bad field tag: " + field);
        r = std::stoi(field.substr(prefix.size(), field.size() - prefix.size() - 1));
    }
    Vars vars{dim, false, false};
    Multiarrangement<K> arr(vars, r);
    for (const auto& e : j.at("hyperplanes")) {
        Poly<K> p = parse_poly<K>(e.at("form").get<std::string>(), vars, r);
        if (p.is_zero() || p.total_degree() > 1 || !p.is_polynomial())
            throw ParseError("hyperplane form is not affine-linear: " +
                             e.at("form").get<std::string>());
        std::vector<K> coeffs;
        for (int v = 0; v < vars.count(); ++v) {
            std::vector<int> unit(vars.count(), 0);
            unit[v] = 1;
            coeffs.push_back(p.coeff(unit));
        }
        K constant = p.coeff(std::vector<int>(vars.count(), 0));
        arr.add(LinearForm<K>(std::move(coeffs), std::move(constant)), e.at("mult").get<int>());
    }
    return arr;
}

} // namespace multider
