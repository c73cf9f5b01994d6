#pragma once

// Composition factors and Loewy layers of the mixed tensor modules
// T^{p,q} = V^{(x)p} (x) V_*^{(x)q}, and stable tensor products of simple
// tensor modules. Factors are read off from finite-rank characters at the
// stable rank; multiplicities are finite.

#include <cstddef>
#include <vector>

#include "stabrep/bigint.hpp"
#include "stabrep/weights.hpp"

namespace stabrep {

struct Factor {
    ThetaWeight weight;
    BigInt mult;

    friend bool operator==(const Factor&, const Factor&) = default;
};

inline constexpr std::size_t kDefaultTensorBound = 6;

struct TensorOptions {
    std::size_t bound = kDefaultTensorBound;
    int margin = 0;
};

// Sorted by decreasing norm (socle factors first), ties in canonical order.
std::vector<Factor> tpq_factors(Family family, std::size_t p, std::size_t q, const TensorOptions& opts = {});
std::vector<Factor> tpq_factors_at_rank(Family family, std::size_t p, std::size_t q, int rank);

// Socle layer of a factor: (p + q - |mu|) / 2, so layer 0 is the socle.
std::size_t tpq_layer(const ThetaWeight& mu, std::size_t p, std::size_t q, const TensorOptions& opts = {});

// min(p, q) + 1 for sl, floor((p + q) / 2) + 1 for o and sp; checked against
// 1 + the largest layer among the factors.
std::size_t tpq_loewy(Family family, std::size_t p, std::size_t q, const TensorOptions& opts = {});

std::vector<Factor> tensor_factors(const ThetaWeight& a, const ThetaWeight& b, const TensorOptions& opts = {});
std::vector<Factor> tensor_factors_at_rank(const ThetaWeight& a, const ThetaWeight& b, int rank);

}  // namespace stabrep
