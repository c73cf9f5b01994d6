#include "stabrep/theta_order.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

#include "stabrep/branching.hpp"
#include "stabrep/error.hpp"

namespace stabrep {

namespace {

void require_family(const ThetaWeight& a, const ThetaWeight& b) {
    if (a.family() != b.family())
        throw FamilyMismatch("labels " + format_theta(a) + " (" + to_string(a.family()) + ") and " + format_theta(b) +
                             " (" + to_string(b.family()) + ") belong to different families");
}

std::vector<char> relation_serial(const std::vector<ThetaWeight>& el, const ProbeConfig& probe) {
    const std::size_t n = el.size();
    std::vector<char> rel(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) rel[a * n + b] = leq(el[a], el[b], probe) ? 1 : 0;
    return rel;
}

std::vector<char> relation_parallel(const std::vector<ThetaWeight>& el, const ProbeConfig& probe) {
    const long long n = static_cast<long long>(el.size());
    std::vector<char> rel(static_cast<std::size_t>(n * n), 0);
    // exceptions cannot cross the parallel region
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n * n));
#pragma omp parallel for schedule(dynamic, 8)
    for (long long idx = 0; idx < n * n; ++idx) {
        try {
            rel[idx] = leq(el[idx / n], el[idx % n], probe) ? 1 : 0;
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rel;
}

std::shared_ptr<const ThetaPoset> cached_poset(Family family, std::size_t max_norm, const ProbeConfig& probe) {
    static std::mutex mutex;
    static std::map<std::tuple<Family, std::size_t, int, int>, std::shared_ptr<const ThetaPoset>> cache;
    auto key = std::make_tuple(family, max_norm, probe.margin, probe.window);
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto p = std::make_shared<const ThetaPoset>(family, max_norm, probe);
    std::lock_guard lock(mutex);
    return cache.try_emplace(key, std::move(p)).first->second;
}

}  // namespace

bool leq(const ThetaWeight& mu, const ThetaWeight& lambda, const ProbeConfig& probe) {
    require_family(mu, lambda);
    const int i0 = stable_rank(mu.family(), norm(mu) + norm(lambda), probe.margin);
    const int gap = std::max<int>(1, static_cast<int>(norm(lambda)));
    const bool first = restrict_mult(mu, i0, lambda, i0 + gap) > 0;
    for (int di = 0; di <= probe.window; ++di) {
        for (int dj = 0; dj <= probe.window; ++dj) {
            const int i = i0 + di;
            const bool here = restrict_mult(mu, i, lambda, i + gap + dj) > 0;
            if (here != first)
                throw ProbeDisagreement("order probe for " + format_theta(mu) + " <= " + format_theta(lambda) +
                                        " is not stable at i=" + std::to_string(i) +
                                        ", j=" + std::to_string(i + gap + dj));
        }
    }
    return first;
}

ThetaPoset::ThetaPoset(Family family, std::size_t max_norm, const ProbeConfig& probe)
    : family_(family), max_norm_(max_norm), elements_(enumerate_theta(family, max_norm)) {
    relation_ = relation_parallel(elements_, probe);
    index_structure();
}

ThetaPoset::ThetaPoset(Family family, std::size_t max_norm, std::vector<ThetaWeight> elements,
                       std::vector<char> relation)
    : family_(family), max_norm_(max_norm), elements_(std::move(elements)), relation_(std::move(relation)) {
    index_structure();
}

void ThetaPoset::index_structure() {
    const std::size_t n = size();
    hasse_.clear();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || !leq(a, b)) continue;
            bool cover = true;
            for (std::size_t c = 0; c < n && cover; ++c)
                if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
            if (cover) hasse_.emplace_back(a, b);
        }
    }
    // the number of strictly smaller elements increases along strict chains
    std::vector<std::size_t> below(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && leq(b, a)) ++below[a];
    topo_.resize(n);
    std::iota(topo_.begin(), topo_.end(), 0);
    std::stable_sort(topo_.begin(), topo_.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
    up_.assign(n, {});
    for (auto [a, b] : hasse_) up_[a].push_back(b);
}

ThetaPoset ThetaPoset::build_serial(Family family, std::size_t max_norm, const ProbeConfig& probe) {
    auto el = enumerate_theta(family, max_norm);
    auto rel = relation_serial(el, probe);
    return ThetaPoset(family, max_norm, std::move(el), std::move(rel));
}

std::size_t ThetaPoset::index_of(const ThetaWeight& w) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), w);
    if (it == elements_.end() || *it != w)
        throw DomainError("label " + format_theta(w) + " is outside the poset of norm <= " + std::to_string(max_norm_));
    return static_cast<std::size_t>(it - elements_.begin());
}

std::optional<std::size_t> ThetaPoset::longest_chain(std::size_t high, std::size_t low) const {
    if (!leq(low, high)) return std::nullopt;
    std::vector<std::size_t> best(size(), 0);  // elements on a longest chain low..v; 0 = unreachable
    best[low] = 1;
    for (std::size_t v : topo_) {
        if (best[v] == 0) continue;
        for (std::size_t w : up_[v])
            if (leq(w, high)) best[w] = std::max(best[w], best[v] + 1);
    }
    return best[high];
}

std::string ThetaPoset::to_dot() const {
    std::ostringstream os;
    os << "digraph theta_" << to_string(family_) << "_" << max_norm_ << " {\n";
    os << "  rankdir=BT;\n";
    for (std::size_t a = 0; a < size(); ++a)
        os << "  n" << a << " [label=\"" << format_theta(elements_[a]) << "\"];\n";
    for (auto [a, b] : hasse_) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::optional<std::size_t> chain_length(const ThetaWeight& lambda, const ThetaWeight& mu, const ProbeConfig& probe) {
    require_family(lambda, mu);
    auto poset = cached_poset(lambda.family(), std::max(norm(lambda), norm(mu)), probe);
    return poset->longest_chain(poset->index_of(lambda), poset->index_of(mu));
}

std::vector<ThetaWeight> theta_k(const ThetaWeight& lambda, std::size_t k, const ProbeConfig& probe) {
    if (k < 1) throw DomainError("theta-k needs k >= 1");
    auto poset = cached_poset(lambda.family(), norm(lambda), probe);
    const std::size_t top = poset->index_of(lambda);
    std::vector<ThetaWeight> out;
    for (std::size_t m = 0; m < poset->size(); ++m) {
        if (m == top) continue;
        auto l = poset->longest_chain(top, m);
        if (l && *l >= k + 1) out.push_back(poset->elements()[m]);
    }
    return out;
}

bool ext1_nonzero(const ThetaWeight& mu, const ThetaWeight& lambda, const ProbeConfig& probe) {
    require_family(mu, lambda);
    return mu != lambda && leq(mu, lambda, probe);
}

Cardinality ext1_dim(const ThetaWeight& mu, const ThetaWeight& lambda, const ProbeConfig& probe) {
    return ext1_nonzero(mu, lambda, probe) ? Cardinality::beth(1) : Cardinality::finite(0);
}

}  // namespace stabrep
