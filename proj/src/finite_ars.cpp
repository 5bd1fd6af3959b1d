#include "zlam/finite_ars.hpp"

#include <set>
#include <stdexcept>

#include <json.hpp>

namespace zlam {

ars::ArsView<std::string> FiniteArs::view() const {
    auto edges_copy = edges;
    auto identity = [](const std::string& s) { return s; };
    return {
        [edges_copy](const std::string& a) {
            std::vector<std::string> out;
            for (const auto& [from, to] : edges_copy)
                if (from == a) out.push_back(to);
            return out;
        },
        identity,
        identity,
    };
}

ars::BulletMap<std::string> FiniteArs::bullet_map() const {
    if (!has_bullet())
        throw std::invalid_argument("finite ARS has no bullet map");
    auto table = bullet;
    return {[table](const std::string& a) {
        auto it = table.find(a);
        if (it == table.end())
            throw std::invalid_argument("bullet map undefined for element '" + a + "'");
        return it->second;
    }};
}

ars::ZWitness<std::string> FiniteArs::search_z_witness(int depth) const {
    auto v = view();
    auto b = bullet_map();
    return [v, b, depth](const std::string& a, const std::string& c) {
        auto leg1 = ars::find_path(v, c, b.apply(a), depth);
        auto leg2 = ars::find_path(v, b.apply(a), b.apply(c), depth);
        if (!leg1 || !leg2)
            throw std::runtime_error("no Z witness within bound for step " + a + " -> " + c);
        return std::make_pair(*leg1, *leg2);
    };
}

FiniteArs FiniteArs::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    FiniteArs out;
    if (!j.is_object() || !j.contains("elements") || !j.contains("edges"))
        throw std::invalid_argument("finite ARS JSON needs \"elements\" and \"edges\"");
    std::set<std::string> carrier;
    for (const auto& e : j.at("elements")) {
        out.elements.push_back(e.get<std::string>());
        carrier.insert(out.elements.back());
    }
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("each edge must be a pair of labels");
        std::string from = e.at(0).get<std::string>();
        std::string to = e.at(1).get<std::string>();
        if (!carrier.count(from) || !carrier.count(to))
            throw std::invalid_argument("edge (" + from + ", " + to +
                                        ") mentions a label outside \"elements\"");
        out.edges.emplace_back(std::move(from), std::move(to));
    }
    if (j.contains("bullet")) {
        for (const auto& [k, v] : j.at("bullet").items()) {
            std::string to = v.get<std::string>();
            if (!carrier.count(k) || !carrier.count(to))
                throw std::invalid_argument("bullet entry (" + k + ", " + to +
                                            ") mentions a label outside \"elements\"");
            out.bullet.emplace(k, to);
        }
        for (const auto& e : out.elements)
            if (!out.bullet.count(e))
                throw std::invalid_argument("bullet map misses element '" + e + "'");
    }
    return out;
}

std::string FiniteArs::to_json() const {
    nlohmann::json j;
    j["elements"] = elements;
    j["edges"] = nlohmann::json::array();
    for (const auto& [from, to] : edges)
        j["edges"].push_back({from, to});
    if (has_bullet()) j["bullet"] = bullet;
    return j.dump(2);
}

}  // namespace zlam
