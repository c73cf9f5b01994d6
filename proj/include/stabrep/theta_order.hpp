#pragma once

// The order on labels: mu <= lambda when, for all large i, some j > i has
// Hom_{g_i}(V_mu^i, V_lambda^j) != 0. The quantifier is realized by a stable
// probe i = stable_rank(mu, lambda) + margin, j = i + max(1, |lambda|); a
// nonzero window widens the probe to a square of (i, j) pairs that must agree.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabrep/cardinality.hpp"
#include "stabrep/weights.hpp"

namespace stabrep {

struct ProbeConfig {
    int margin = 0;
    int window = 0;
};

class ProbeDisagreement : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool leq(const ThetaWeight& mu, const ThetaWeight& lambda, const ProbeConfig& probe = {});

// Finite order on enumerate_theta(family, max_norm).
class ThetaPoset {
public:
    ThetaPoset(Family family, std::size_t max_norm, const ProbeConfig& probe = {});

    // Reference construction: same relation, filled by a plain nested loop.
    static ThetaPoset build_serial(Family family, std::size_t max_norm, const ProbeConfig& probe = {});

    Family family() const noexcept { return family_; }
    std::size_t max_norm() const noexcept { return max_norm_; }
    const std::vector<ThetaWeight>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }

    std::size_t index_of(const ThetaWeight& w) const;
    bool leq(std::size_t a, std::size_t b) const { return relation_[a * size() + b] != 0; }

    // Cover relations (a, b) with a < b and nothing strictly between.
    const std::vector<std::pair<std::size_t, std::size_t>>& hasse_edges() const noexcept { return hasse_; }

    // Number of elements of a longest chain from low up to high, inclusive;
    // nullopt when low is not below high.
    std::optional<std::size_t> longest_chain(std::size_t high, std::size_t low) const;

    std::string to_dot() const;

    friend bool operator==(const ThetaPoset& a, const ThetaPoset& b) {
        return a.family_ == b.family_ && a.elements_ == b.elements_ && a.relation_ == b.relation_;
    }

private:
    ThetaPoset(Family family, std::size_t max_norm, std::vector<ThetaWeight> elements, std::vector<char> relation);
    void index_structure();

    Family family_;
    std::size_t max_norm_;
    std::vector<ThetaWeight> elements_;
    std::vector<char> relation_;
    std::vector<std::pair<std::size_t, std::size_t>> hasse_;
    std::vector<std::size_t> topo_;
    std::vector<std::vector<std::size_t>> up_;
};

// Longest chain length l(lambda, mu) counted in elements, over the poset of
// labels of norm <= |lambda|. chain_length(lambda, lambda) == 1.
std::optional<std::size_t> chain_length(const ThetaWeight& lambda, const ThetaWeight& mu, const ProbeConfig& probe = {});

// {mu < lambda : l(lambda, mu) >= k + 1}. The sets are nested in k.
std::vector<ThetaWeight> theta_k(const ThetaWeight& lambda, std::size_t k, const ProbeConfig& probe = {});

bool ext1_nonzero(const ThetaWeight& mu, const ThetaWeight& lambda, const ProbeConfig& probe = {});
// Beth(1) when the extension group is nonzero, Finite(0) otherwise.
Cardinality ext1_dim(const ThetaWeight& mu, const ThetaWeight& lambda, const ProbeConfig& probe = {});

}  // namespace stabrep
