#pragma once

#include <map>
#include <string>
#include <vector>

#include "zlam/ars.hpp"

namespace zlam {

/// Explicit finite abstract rewriting system with opaque string labels and
/// an optional bullet map.
///
/// JSON file format:
///   {"elements": ["0","1","2"],
///    "edges": [["0","1"],["0","2"],["1","2"]],
///    "bullet": {"0":"2","1":"2","2":"2"}}
/// "bullet" is optional; without it only structural queries are possible.
struct FiniteArs {
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> edges;
    std::map<std::string, std::string> bullet;  // empty = absent

    bool has_bullet() const { return !bullet.empty(); }

    ars::ArsView<std::string> view() const;
    ars::BulletMap<std::string> bullet_map() const;  // throws if absent
    /// Z witness backed by bounded path search.
    ars::ZWitness<std::string> search_z_witness(int depth) const;

    static FiniteArs from_json(const std::string& text);
    std::string to_json() const;
};

}  // namespace zlam
