#pragma once

#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace zlam::ars {

/// An abstract rewriting system seen through two functions: a deterministic
/// successor enumerator and a canonical key deciding the object equivalence
/// (equal(a, b) iff key(a) == key(b); successors respects it). `show` is the
/// human-readable rendering used in violation reports.
template <class Object>
struct ArsView {
    std::function<std::vector<Object>(const Object&)> successors;
    std::function<std::string(const Object&)> key;
    std::function<std::string(const Object&)> show;
};

/// A total map on objects, the • of the Z-property. Respects the ArsView
/// equivalence.
template <class Object>
struct BulletMap {
    std::function<Object(const Object&)> apply;
};

/// Nonempty sequence whose adjacent pairs are successor-related.
template <class Object>
using GenericSeq = std::vector<Object>;

/// Per-step Z witness provider: for a single step a → c it returns validated
/// sequences (c →* bullet(a), bullet(a) →* bullet(c)).
template <class Object>
using ZWitness =
    std::function<std::pair<GenericSeq<Object>, GenericSeq<Object>>(const Object&, const Object&)>;

/// Counterexample record returned by the property checkers. Objects are
/// rendered through ArsView::show so violations replay from the report.
struct Violation {
    std::string object;
    std::string step_target;
    std::string failed_leg;
    std::string detail;
    bool bound_exhausted = false;  // the failing leg ran out of depth, not of reducts
};

using CheckResult = std::optional<Violation>;  // nullopt = ok

template <class Object>
bool validate_generic(const ArsView<Object>& ars, const GenericSeq<Object>& seq) {
    if (seq.empty()) return false;
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
        std::string next = ars.key(seq[i + 1]);
        bool found = false;
        for (const auto& c : ars.successors(seq[i]))
            if (ars.key(c) == next) { found = true; break; }
        if (!found) return false;
    }
    return true;
}

namespace detail {

/// Bounded BFS. Returns the visited objects in BFS order; sets cut when the
/// depth bound truncated the search while reducts were still unexplored.
template <class Object>
std::vector<Object> reach(const ArsView<Object>& ars, const Object& from, int depth,
                          bool* cut = nullptr) {
    if (cut) *cut = false;
    std::vector<Object> out{from};
    std::unordered_set<std::string> seen{ars.key(from)};
    std::deque<std::pair<Object, int>> frontier{{from, 0}};
    while (!frontier.empty()) {
        auto [cur, d] = frontier.front();
        frontier.pop_front();
        for (const auto& c : ars.successors(cur)) {
            if (!seen.insert(ars.key(c)).second) continue;
            if (d >= depth) {
                if (cut) *cut = true;
                seen.erase(ars.key(c));
                continue;
            }
            out.push_back(c);
            frontier.emplace_back(c, d + 1);
        }
    }
    return out;
}

template <class Object>
bool reaches(const ArsView<Object>& ars, const Object& from, const Object& to, int depth,
             bool* cut = nullptr) {
    std::string target = ars.key(to);
    for (const auto& o : reach(ars, from, depth, cut))
        if (ars.key(o) == target) return true;
    return false;
}

}  // namespace detail

/// BFS path from `from` to `to` within depth steps.
template <class Object>
std::optional<GenericSeq<Object>> find_path(const ArsView<Object>& ars, const Object& from,
                                            const Object& to, int depth) {
    std::string target = ars.key(to);
    if (ars.key(from) == target) return GenericSeq<Object>{from};
    std::unordered_map<std::string, std::pair<std::string, Object>> parent;
    std::deque<std::pair<Object, int>> frontier{{from, 0}};
    parent.emplace(ars.key(from), std::make_pair(std::string(), from));
    while (!frontier.empty()) {
        auto [cur, d] = frontier.front();
        frontier.pop_front();
        if (d >= depth) continue;
        std::string cur_key = ars.key(cur);
        for (const auto& c : ars.successors(cur)) {
            std::string key = ars.key(c);
            if (parent.count(key)) continue;
            parent.emplace(key, std::make_pair(cur_key, c));
            if (key == target) {
                GenericSeq<Object> path{c};
                std::string k = cur_key;
                while (!k.empty()) {
                    auto& e = parent.at(k);
                    path.push_back(e.second);
                    k = e.first;
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            frontier.emplace_back(c, d + 1);
        }
    }
    return std::nullopt;
}

/// Z-property check: for every a in universe and every step a → c, both
/// c →* bullet(a) and bullet(a) →* bullet(c) within bounded reachability.
/// Returns the first violation in universe/successor order.
template <class Object>
CheckResult check_z(const ArsView<Object>& ars, const BulletMap<Object>& b,
                    const std::vector<Object>& universe, int depth) {
    for (const auto& a : universe) {
        Object ba = b.apply(a);
        for (const auto& c : ars.successors(a)) {
            bool cut = false;
            if (!detail::reaches(ars, c, ba, depth, &cut))
                return Violation{ars.show(a), ars.show(c), "step-to-bullet",
                                 ars.show(c) + " does not reach " + ars.show(ba) +
                                     (cut ? " within bound" : ""),
                                 cut};
            Object bc = b.apply(c);
            cut = false;
            if (!detail::reaches(ars, ba, bc, depth, &cut))
                return Violation{ars.show(a), ars.show(c), "bullet-to-bullet",
                                 ars.show(ba) + " does not reach " + ars.show(bc) +
                                     (cut ? " within bound" : ""),
                                 cut};
        }
    }
    return std::nullopt;
}

/// Monotonicity witness: a₀ →* aₙ gives bullet(a₀) →* bullet(aₙ), by
/// concatenating the second Z legs along the sequence.
template <class Object>
GenericSeq<Object> monotonicity_steps(const ArsView<Object>& ars, const BulletMap<Object>& b,
                                      const GenericSeq<Object>& seq,
                                      const ZWitness<Object>& z_witness) {
    if (!validate_generic(ars, seq))
        throw std::invalid_argument("monotonicity_steps: input sequence does not validate");
    GenericSeq<Object> out{b.apply(seq.front())};
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
        auto legs = z_witness(seq[i], seq[i + 1]);
        out.insert(out.end(), legs.second.begin() + 1, legs.second.end());
    }
    return out;
}

/// Semi-confluence: given a →* c and a single step a → d, produces a common
/// reduct e with validated legs d →* e and c →* e. Empty reduction: e = d.
/// Otherwise, with b' the second-to-last element of seq_ac, e = bullet(b');
/// the d-leg is (d →* bullet(a)) ++ (bullet(a) →* bullet(b')), the c-leg is
/// the first Z leg of the final step b' → c.
template <class Object>
std::tuple<Object, GenericSeq<Object>, GenericSeq<Object>>
semi_confluence_join(const ArsView<Object>& ars, const BulletMap<Object>& b,
                     const ZWitness<Object>& z_witness,
                     const GenericSeq<Object>& seq_ac, const Object& d) {
    if (!validate_generic(ars, seq_ac))
        throw std::invalid_argument("semi_confluence_join: seq_ac does not validate");
    const Object& a = seq_ac.front();
    {
        GenericSeq<Object> step{a, d};
        if (!validate_generic(ars, step))
            throw std::invalid_argument("semi_confluence_join: a → d is not a step");
    }
    if (seq_ac.size() == 1)
        return {d, GenericSeq<Object>{d}, GenericSeq<Object>{a, d}};
    const Object& c = seq_ac.back();
    GenericSeq<Object> prefix(seq_ac.begin(), seq_ac.end() - 1);
    const Object& b2 = prefix.back();  // the b' of the proof
    Object e = b.apply(b2);
    auto legs_ad = z_witness(a, d);
    GenericSeq<Object> w_d = legs_ad.first;  // d →* bullet(a)
    GenericSeq<Object> mono = monotonicity_steps(ars, b, prefix, z_witness);
    w_d.insert(w_d.end(), mono.begin() + 1, mono.end());
    GenericSeq<Object> w_c = z_witness(b2, c).first;  // c →* bullet(b')
    return {std::move(e), std::move(w_d), std::move(w_c)};
}

/// Confluence: joins two co-initial validated sequences by iterating
/// semi-confluence along the first one. Returns (e, w_b, w_c) with validated
/// legs from seq_ab's and seq_ac's endpoints to the common e.
template <class Object>
std::tuple<Object, GenericSeq<Object>, GenericSeq<Object>>
confluence_join(const ArsView<Object>& ars, const BulletMap<Object>& b,
                const ZWitness<Object>& z_witness,
                const GenericSeq<Object>& seq_ab, const GenericSeq<Object>& seq_ac) {
    if (!validate_generic(ars, seq_ab) || !validate_generic(ars, seq_ac))
        throw std::invalid_argument("confluence_join: input sequence does not validate");
    if (ars.key(seq_ab.front()) != ars.key(seq_ac.front()))
        throw std::invalid_argument("confluence_join: sequences do not share a source");
    GenericSeq<Object> left = seq_ab;
    GenericSeq<Object> right = seq_ac;
    GenericSeq<Object> w_c{right.back()};
    while (left.size() > 1) {
        const Object& d = left[1];
        auto [e, w_d, w_ce] = semi_confluence_join(ars, b, z_witness, right, d);
        (void)e;
        w_c.insert(w_c.end(), w_ce.begin() + 1, w_ce.end());
        right = std::move(w_d);  // from d to the new common reduct
        left.erase(left.begin());
    }
    return {right.back(), std::move(right), std::move(w_c)};
}

/// The •-development relation: all pairs (a, c) with a in universe,
/// a →* c and c →* bullet(a), both within depth.
template <class Object>
std::vector<std::pair<Object, Object>>
dev_relation(const ArsView<Object>& ars, const BulletMap<Object>& b,
             const std::vector<Object>& universe, int depth) {
    std::vector<std::pair<Object, Object>> rel;
    for (const auto& a : universe) {
        Object ba = b.apply(a);
        for (const auto& c : detail::reach(ars, a, depth))
            if (detail::reaches(ars, c, ba, depth)) rel.emplace_back(a, c);
    }
    return rel;
}

/// Angle property for bullet map b and relation rel:
///   (i)  every single step from universe is in rel,
///   (ii) rel ⊆ →* (bounded),
///   (iii) (a, c) ∈ rel implies (c, bullet(a)) ∈ rel.
template <class Object>
CheckResult check_angle(const ArsView<Object>& ars, const BulletMap<Object>& b,
                        const std::vector<std::pair<Object, Object>>& rel,
                        const std::vector<Object>& universe, int depth) {
    std::set<std::pair<std::string, std::string>> rel_keys;
    for (const auto& [a, c] : rel) rel_keys.emplace(ars.key(a), ars.key(c));
    for (const auto& a : universe)
        for (const auto& c : ars.successors(a))
            if (!rel_keys.count({ars.key(a), ars.key(c)}))
                return Violation{ars.show(a), ars.show(c), "step-not-in-rel",
                                 "single step " + ars.show(a) + " -> " + ars.show(c) +
                                     " missing from the relation"};
    for (const auto& [a, c] : rel) {
        bool cut = false;
        if (!detail::reaches(ars, a, c, depth, &cut))
            return Violation{ars.show(a), ars.show(c), "rel-not-in-star",
                             ars.show(a) + " does not reach " + ars.show(c) +
                                 (cut ? " within bound" : ""),
                             cut};
        Object ba = b.apply(a);
        if (!rel_keys.count({ars.key(c), ars.key(ba)}))
            return Violation{ars.show(a), ars.show(c), "angle-closure",
                             "(" + ars.show(c) + ", " + ars.show(ba) +
                                 ") missing from the relation"};
    }
    return std::nullopt;
}

/// Forward direction of the Z ⇔ angle equivalence: given that check_z
/// succeeded on the universe, the •-development relation has the angle
/// property. Throws if the precondition was not established.
template <class Object>
CheckResult z_implies_angle(const ArsView<Object>& ars, const BulletMap<Object>& b,
                            const std::vector<Object>& universe, int depth) {
    if (auto v = check_z(ars, b, universe, depth))
        throw std::invalid_argument("z_implies_angle: check_z did not hold: " + v->detail);
    return check_angle(ars, b, dev_relation(ars, b, universe, depth), universe, depth);
}

/// Reverse direction: a relation with the angle property yields Z. Verifies
/// Z by applying the angle property twice along each step: (a, c) ∈ rel,
/// then (c, bullet(a)) ∈ rel, then (bullet(a), bullet(c)) ∈ rel, each with
/// its →* content within bound. Throws if check_angle did not hold.
template <class Object>
CheckResult angle_implies_z(const ArsView<Object>& ars, const BulletMap<Object>& b,
                            const std::vector<std::pair<Object, Object>>& rel,
                            const std::vector<Object>& universe, int depth) {
    if (auto v = check_angle(ars, b, rel, universe, depth))
        throw std::invalid_argument("angle_implies_z: check_angle did not hold: " + v->detail);
    std::set<std::pair<std::string, std::string>> rel_keys;
    for (const auto& [a, c] : rel) rel_keys.emplace(ars.key(a), ars.key(c));
    auto in_rel = [&](const Object& p, const Object& q) {
        return rel_keys.count({ars.key(p), ars.key(q)}) > 0;
    };
    for (const auto& a : universe) {
        Object ba = b.apply(a);
        for (const auto& c : ars.successors(a)) {
            Object bc = b.apply(c);
            if (!in_rel(a, c))
                return Violation{ars.show(a), ars.show(c), "step-not-in-rel",
                                 "single step missing from the relation"};
            if (!in_rel(c, ba))
                return Violation{ars.show(a), ars.show(c), "angle-first-application",
                                 "(" + ars.show(c) + ", " + ars.show(ba) + ") not in relation"};
            if (!in_rel(ba, bc))
                return Violation{ars.show(a), ars.show(c), "angle-second-application",
                                 "(" + ars.show(ba) + ", " + ars.show(bc) + ") not in relation"};
            bool cut = false;
            if (!detail::reaches(ars, c, ba, depth, &cut))
                return Violation{ars.show(a), ars.show(c), "step-to-bullet",
                                 ars.show(c) + " does not reach " + ars.show(ba) +
                                     (cut ? " within bound" : ""),
                                 cut};
            cut = false;
            if (!detail::reaches(ars, ba, bc, depth, &cut))
                return Violation{ars.show(a), ars.show(c), "bullet-to-bullet",
                                 ars.show(ba) + " does not reach " + ars.show(bc) +
                                     (cut ? " within bound" : ""),
                                 cut};
        }
    }
    return std::nullopt;
}

}  // namespace zlam::ars
