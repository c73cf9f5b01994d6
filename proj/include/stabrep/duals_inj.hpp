#pragma once

// Label-level shadows of socle filtrations: each layer maps labels of simple
// constituents to symbolic multiplicities. No vector spaces are materialized;
// the modules involved (duals, injective hulls) have uncountable dimension.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "stabrep/cardinality.hpp"
#include "stabrep/tensor_calc.hpp"
#include "stabrep/theta_order.hpp"
#include "stabrep/weights.hpp"

namespace stabrep {

class LoewyProfile {
public:
    using Layer = std::map<ThetaWeight, Cardinality>;

    // The zero profile.
    explicit LoewyProfile(Family family) : family_(family) {}
    // Layer 0 is the socle. Layers must be nonempty and share the family.
    LoewyProfile(Family family, std::vector<Layer> layers);

    Family family() const noexcept { return family_; }
    const std::vector<Layer>& layers() const noexcept { return layers_; }
    bool is_zero() const noexcept { return layers_.empty(); }

    friend bool operator==(const LoewyProfile&, const LoewyProfile&) = default;

private:
    Family family_;
    std::vector<Layer> layers_;
};

// The simple module V_lambda.
LoewyProfile simple_profile(const ThetaWeight& lambda);

// Socle filtration of the injective hull I_lambda: the socle is lambda with
// multiplicity 1, layer k lists theta_k(lambda, k), each with multiplicity Beth(1).
LoewyProfile inj_profile(const ThetaWeight& lambda, const ProbeConfig& probe = {});

// Socle layers of T^{p,q} with finite multiplicities.
LoewyProfile tpq_profile(Family family, std::size_t p, std::size_t q, const TensorOptions& opts = {});

std::size_t loewy_length(const LoewyProfile& p);
std::vector<ThetaWeight> theta_support(const LoewyProfile& p);
// Largest norm in the support; 0 for the zero profile.
std::size_t lind_level(const LoewyProfile& p);

// Membership in the cardinality-bounded subcategory: every multiplicity is
// finite or Beth(k). Always true for profiles of this calculus.
bool bounded_by_beth(const LoewyProfile& p);

struct ProfileFamily {
    enum class Extent { Finite, InfiniteBounded, InfiniteUnbounded };

    Family family = Family::SL;
    std::vector<LoewyProfile> members;  // the whole family, or samples of an infinite one
    Extent extent = Extent::Finite;
    std::optional<std::size_t> uniform_bound;  // required for InfiniteBounded
};

struct ClosureVerdict {
    bool closed = false;
    std::size_t level = 0;
    std::string reason;
};

// Whether a family of modules lies in a single level lind^k.
ClosureVerdict family_closure_check(const ProfileFamily& family);
ClosureVerdict family_closure_check(Family family, std::span<const LoewyProfile> profiles);

// Socle of the dual of a semisimple module: every label starred.
LoewyProfile dual_socle_profile(const LoewyProfile& semisimple);

// {"family": "...", "layers": [[{"mult": "finite:n" | "beth:k", "weight": "..."}, ...], ...]}
nlohmann::json profile_to_json(const LoewyProfile& p);
LoewyProfile profile_from_json(const nlohmann::json& j);

}  // namespace stabrep
