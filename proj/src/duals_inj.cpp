#include "stabrep/duals_inj.hpp"

#include <algorithm>
#include <set>

#include "stabrep/error.hpp"

namespace stabrep {

LoewyProfile::LoewyProfile(Family family, std::vector<Layer> layers) : family_(family), layers_(std::move(layers)) {
    for (std::size_t k = 0; k < layers_.size(); ++k) {
        if (layers_[k].empty()) throw DomainError("layer " + std::to_string(k) + " of a Loewy profile is empty");
        for (const auto& [w, c] : layers_[k]) {
            if (w.family() != family_)
                throw FamilyMismatch("label " + format_theta(w) + " does not belong to family " + to_string(family_));
            if (c == Cardinality::finite(0))
                throw DomainError("label " + format_theta(w) + " has multiplicity zero in layer " + std::to_string(k));
        }
    }
}

LoewyProfile simple_profile(const ThetaWeight& lambda) {
    return LoewyProfile(lambda.family(), {{{lambda, Cardinality::finite(1)}}});
}

LoewyProfile inj_profile(const ThetaWeight& lambda, const ProbeConfig& probe) {
    std::vector<LoewyProfile::Layer> layers;
    layers.push_back({{lambda, Cardinality::finite(1)}});
    for (std::size_t k = 1;; ++k) {
        auto labels = theta_k(lambda, k, probe);
        if (labels.empty()) break;
        LoewyProfile::Layer layer;
        for (auto& mu : labels) layer.emplace(std::move(mu), Cardinality::beth(1));
        layers.push_back(std::move(layer));
    }
    return LoewyProfile(lambda.family(), std::move(layers));
}

LoewyProfile tpq_profile(Family family, std::size_t p, std::size_t q, const TensorOptions& opts) {
    std::vector<LoewyProfile::Layer> layers;
    for (const auto& f : tpq_factors(family, p, q, opts)) {
        const std::size_t k = tpq_layer(f.weight, p, q, opts);
        if (layers.size() <= k) layers.resize(k + 1);
        layers[k].emplace(f.weight, Cardinality::finite(f.mult));
    }
    return LoewyProfile(family, std::move(layers));
}

std::size_t loewy_length(const LoewyProfile& p) { return p.layers().size(); }

std::vector<ThetaWeight> theta_support(const LoewyProfile& p) {
    std::set<ThetaWeight> keys;
    for (const auto& layer : p.layers())
        for (const auto& [w, c] : layer) keys.insert(w);
    return {keys.begin(), keys.end()};
}

std::size_t lind_level(const LoewyProfile& p) {
    std::size_t level = 0;
    for (const auto& w : theta_support(p)) level = std::max(level, norm(w));
    return level;
}

bool bounded_by_beth(const LoewyProfile& p) {
    for (const auto& layer : p.layers())
        for (const auto& [w, c] : layer)
            if (!c.is_finite() && c.value() < 0) return false;
    return true;
}

ClosureVerdict family_closure_check(const ProfileFamily& fam) {
    std::size_t level = 0;
    for (const auto& m : fam.members) {
        if (m.family() != fam.family)
            throw FamilyMismatch("profile of family " + to_string(m.family()) + " in a family of " +
                                 to_string(fam.family) + " modules");
        level = std::max(level, lind_level(m));
    }
    switch (fam.extent) {
    case ProfileFamily::Extent::Finite:
        return {true, level, "finite family; level is the largest member level"};
    case ProfileFamily::Extent::InfiniteBounded:
        if (!fam.uniform_bound) throw DomainError("an infinite bounded family needs a uniform level bound");
        if (level > *fam.uniform_bound)
            throw DomainError("a member has level " + std::to_string(level) + " above the declared bound " +
                              std::to_string(*fam.uniform_bound));
        return {true, *fam.uniform_bound, "infinite family with a uniform level bound"};
    case ProfileFamily::Extent::InfiniteUnbounded:
        return {false, level, "member levels are unbounded, so the socle filtration of the product is infinite"};
    }
    return {};
}

ClosureVerdict family_closure_check(Family family, std::span<const LoewyProfile> profiles) {
    ProfileFamily fam;
    fam.family = family;
    fam.members.assign(profiles.begin(), profiles.end());
    return family_closure_check(fam);
}

LoewyProfile dual_socle_profile(const LoewyProfile& semisimple) {
    if (semisimple.layers().size() != 1)
        throw DomainError("dual socle needs a semisimple profile (exactly one layer), got " +
                          std::to_string(semisimple.layers().size()) + " layers");
    LoewyProfile::Layer layer;
    for (const auto& [w, c] : semisimple.layers().front()) layer.emplace(star(w), c);
    return LoewyProfile(semisimple.family(), {std::move(layer)});
}

nlohmann::json profile_to_json(const LoewyProfile& p) {
    nlohmann::json layers = nlohmann::json::array();
    for (const auto& layer : p.layers()) {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& [w, c] : layer)
            entries.push_back({{"weight", format_theta(w)}, {"mult", format_cardinality(c)}});
        layers.push_back(std::move(entries));
    }
    return {{"family", to_string(p.family())}, {"layers", std::move(layers)}};
}

LoewyProfile profile_from_json(const nlohmann::json& j) {
    try {
        const Family family = parse_family(j.at("family").get<std::string>());
        std::vector<LoewyProfile::Layer> layers;
        for (const auto& entries : j.at("layers")) {
            LoewyProfile::Layer layer;
            for (const auto& e : entries)
                layer.emplace(parse_theta(family, e.at("weight").get<std::string>()),
                              parse_cardinality(e.at("mult").get<std::string>()));
            layers.push_back(std::move(layer));
        }
        return LoewyProfile(family, std::move(layers));
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed profile JSON: ") + e.what());
    }
}

}  // namespace stabrep
