#include "amoeba/report_json.hpp"

namespace amoeba {

using nlohmann::ordered_json;

ordered_json report_to_json(const ClassificationReport& report) {
    ordered_json j;
    j["n"] = report.n;
    j["edges"] = report.edges;
    j["aut_order"] = report.aut_order.get_str();
    j["sg_order"] = report.sg_order.get_str();
    j["is_local"] = report.is_local;
    j["is_global"] = report.is_global;
    j["global_method"] = report.global_method;
    j["orbits"] = report.orbits;
    j["degree_one_indices"] = report.degree_one_indices;
    j["degenerate"] = report.degenerate;
    j["replacement_count"] = report.replacement_count;
    return j;
}

ordered_json chain_to_json(const MorphChain& chain) {
    ordered_json j;
    j["start"] = {{"n", chain.start.order()}, {"edges", chain.start.edges()}};
    j["target"] = chain.target.images();
    ordered_json steps = ordered_json::array();
    for (const auto& step : chain.steps) {
        ordered_json s;
        if (step.removed)
            s["remove"] = {step.removed->first, step.removed->second};
        else
            s["remove"] = nullptr;
        if (step.added)
            s["add"] = {step.added->first, step.added->second};
        else
            s["add"] = nullptr;
        steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);
    return j;
}

MorphChain chain_from_json(const ordered_json& j) {
    MorphChain chain;
    const auto& start = j.at("start");
    std::vector<Edge> edges;
    for (const auto& e : start.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    chain.start = Graph(start.at("n").get<int>(), std::move(edges));
    chain.target = Permutation(j.at("target").get<std::vector<int>>());

    std::vector<Edge> current = chain.start.edges();
    for (const auto& s : j.at("steps")) {
        AmbientStep step;
        if (!s.at("remove").is_null()) {
            step.removed = make_edge(s.at("remove").at(0).get<int>(), s.at("remove").at(1).get<int>());
        }
        if (!s.at("add").is_null()) {
            step.added = make_edge(s.at("add").at(0).get<int>(), s.at("add").at(1).get<int>());
        }
        // reconstruct the running edge set; validate_chain rechecks everything
        if (step.removed) {
            auto it = std::find(current.begin(), current.end(), *step.removed);
            if (it != current.end()) current.erase(it);
            if (step.added) current.push_back(*step.added);
            std::sort(current.begin(), current.end());
        }
        step.resulting_edges = current;
        chain.steps.push_back(std::move(step));
    }
    return chain;
}

} // namespace amoeba
