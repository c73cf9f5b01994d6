#include "stabrep/tensor_calc.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "stabrep/char_oracle.hpp"
#include "stabrep/error.hpp"

namespace stabrep {

namespace {

// V^p (x) V_*^q at a fixed rank, built one factor at a time and memoized.
std::shared_ptr<const FormalCharacter> tensor_power(Family family, int rank, std::size_t p, std::size_t q) {
    static std::mutex mutex;
    static std::map<std::tuple<Family, int, std::size_t, std::size_t>, std::shared_ptr<const FormalCharacter>> cache;
    auto key = std::make_tuple(family, rank, p, q);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    FormalCharacter c = [&] {
        if (p == 0 && q == 0) return trivial_character(family, rank);
        if (q > 0) return mul(*tensor_power(family, rank, p, q - 1), conatural_character(family, rank));
        return mul(*tensor_power(family, rank, p - 1, 0), natural_character(family, rank));
    }();
    auto ptr = std::make_shared<const FormalCharacter>(std::move(c));
    std::lock_guard lock(mutex);
    return cache.try_emplace(key, std::move(ptr)).first->second;
}

std::vector<Factor> to_factors(const Decomposition& d) {
    std::vector<Factor> out;
    out.reserve(d.size());
    for (const auto& c : d) out.push_back({stabilize(c.weight), c.mult});
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
        if (norm(a.weight) != norm(b.weight)) return norm(a.weight) > norm(b.weight);
        return a.weight < b.weight;
    });
    return out;
}

std::size_t layer_of(const ThetaWeight& mu, std::size_t p, std::size_t q) {
    const std::size_t n = norm(mu);
    if (n > p + q || (p + q - n) % 2 != 0)
        throw std::logic_error("factor " + format_theta(mu) + " violates the degree parity of T^{p,q}");
    return (p + q - n) / 2;
}

void check_bound(std::size_t degree, std::size_t bound) {
    if (degree > bound)
        throw BoundExceeded("total degree " + std::to_string(degree) + " exceeds the configured bound " +
                            std::to_string(bound));
}

}  // namespace

std::vector<Factor> tpq_factors_at_rank(Family family, std::size_t p, std::size_t q, int rank) {
    if (family != Family::SL) {
        // V is self-dual for o and sp
        p += q;
        q = 0;
    }
    const int need = family == Family::SL ? static_cast<int>(p + q) : static_cast<int>(p);
    if (rank < std::max(1, need)) throw RankTooSmall(rank, std::max(1, need));
    static std::mutex mutex;
    static std::map<std::tuple<Family, int, std::size_t, std::size_t>, std::vector<Factor>> cache;
    auto key = std::make_tuple(family, rank, p, q);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto factors = to_factors(decompose(*tensor_power(family, rank, p, q)));
    std::lock_guard lock(mutex);
    return cache.try_emplace(key, std::move(factors)).first->second;
}

std::vector<Factor> tpq_factors(Family family, std::size_t p, std::size_t q, const TensorOptions& opts) {
    check_bound(p + q, opts.bound);
    return tpq_factors_at_rank(family, p, q, stable_rank(family, p + q, opts.margin));
}

std::size_t tpq_layer(const ThetaWeight& mu, std::size_t p, std::size_t q, const TensorOptions& opts) {
    const auto factors = tpq_factors(mu.family(), p, q, opts);
    auto it = std::find_if(factors.begin(), factors.end(), [&](const Factor& f) { return f.weight == mu; });
    if (it == factors.end())
        throw DomainError(format_theta(mu) + " is not a composition factor of T^{" + std::to_string(p) + "," +
                          std::to_string(q) + "}");
    return layer_of(mu, p, q);
}

std::size_t tpq_loewy(Family family, std::size_t p, std::size_t q, const TensorOptions& opts) {
    const std::size_t formula = family == Family::SL ? std::min(p, q) + 1 : (p + q) / 2 + 1;
    std::size_t top = 0;
    for (const auto& f : tpq_factors(family, p, q, opts)) top = std::max(top, layer_of(f.weight, p, q));
    if (top + 1 != formula)
        throw std::logic_error("layer rule gives Loewy length " + std::to_string(top + 1) + " but the formula gives " +
                               std::to_string(formula));
    return formula;
}

std::vector<Factor> tensor_factors_at_rank(const ThetaWeight& a, const ThetaWeight& b, int rank) {
    if (a.family() != b.family())
        throw FamilyMismatch("tensor product across families " + to_string(a.family()) + " and " + to_string(b.family()));
    return to_factors(tensor_decompose(truncate(a, rank), truncate(b, rank)));
}

std::vector<Factor> tensor_factors(const ThetaWeight& a, const ThetaWeight& b, const TensorOptions& opts) {
    if (a.family() != b.family())
        throw FamilyMismatch("tensor product across families " + to_string(a.family()) + " and " + to_string(b.family()));
    check_bound(norm(a) + norm(b), opts.bound);
    return tensor_factors_at_rank(a, b, stable_rank(a.family(), norm(a) + norm(b), opts.margin));
}

}  // namespace stabrep
