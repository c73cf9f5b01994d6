#include "stabrep/branching.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>

#include "stabrep/error.hpp"

namespace stabrep {

namespace {

using Counts = std::map<std::vector<int>, BigInt>;

// Sequences x with upper[k] >= x[k] >= lower[k]; lower may carry a sentinel
// to express |x_last| <= bound through signed_last.
template <class Visit>
void interlace(const std::vector<int>& upper, const std::vector<int>& lower, bool signed_last, std::vector<int>& cur,
               std::size_t k, Visit&& visit) {
    if (k == upper.size()) {
        visit(cur);
        return;
    }
    int lo = lower[k];
    if (signed_last && k + 1 == upper.size()) lo = -upper[k];
    for (int v = upper[k]; v >= lo; --v) {
        cur[k] = v;
        interlace(upper, lower, signed_last, cur, k + 1, visit);
    }
}

Counts branch_counts(const RankedWeight& w) {
    const auto& l = w.coords();
    const std::size_t n = l.size();
    Counts out;

    if (w.family() == Family::SL) {
        // l[k] >= m[k] >= l[k+1]
        std::vector<int> upper(l.begin(), l.end() - 1), lower(l.begin() + 1, l.end()), cur(n - 1);
        interlace(upper, lower, false, cur, 0, [&](const std::vector<int>& m) { out[m] += 1; });
        return out;
    }

    // first step: l[k] >= v[k] >= l[k+1] with l[n] = 0; for O the last
    // intermediate coordinate ranges over [-l[n-1], l[n-1]]
    std::vector<int> upper(l.begin(), l.end()), lower(n, 0), mid(n);
    for (std::size_t k = 0; k + 1 < n; ++k) lower[k] = l[k + 1];
    const bool orth = w.family() == Family::O;
    interlace(upper, lower, orth, mid, 0, [&](const std::vector<int>& v) {
        // second step: v[k] >= m[k] >= v[k+1], with |v[n-1]| in place of v[n-1]
        std::vector<int> up(v.begin(), v.end() - 1), lo(v.begin() + 1, v.end()), m(n - 1);
        lo.back() = std::abs(lo.back());
        if (!up.empty() && up.back() < lo.back()) return;
        interlace(up, lo, false, m, 0, [&](const std::vector<int>& mu) { out[mu] += 1; });
    });
    return out;
}

class BranchMemo {
public:
    std::shared_ptr<const Decomposition> get(const RankedWeight& w) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = map_.find(w); it != map_.end()) return it->second;
        }
        auto counts = branch_counts(w);
        Decomposition d;
        for (auto it = counts.rbegin(); it != counts.rend(); ++it)
            d.push_back({RankedWeight(w.family(), it->first), it->second});
        auto value = std::make_shared<const Decomposition>(std::move(d));
        std::unique_lock lock(mutex_);
        return map_.try_emplace(w, std::move(value)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<RankedWeight, std::shared_ptr<const Decomposition>> map_;
};

BranchMemo& branch_memo() {
    static BranchMemo memo;
    return memo;
}

class DescentMemo {
public:
    using Key = std::pair<RankedWeight, int>;

    std::shared_ptr<const Decomposition> get(const RankedWeight& w, int rank) {
        Key key{w, rank};
        {
            std::shared_lock lock(mutex_);
            if (auto it = map_.find(key); it != map_.end()) return it->second;
        }
        // one layer at a time; each step reuses the one-step memo
        std::map<RankedWeight, BigInt> layer{{w, BigInt(1)}};
        for (int r = w.rank(); r > rank; --r) {
            std::map<RankedWeight, BigInt> next;
            for (const auto& [v, m] : layer)
                for (const auto& c : *branch_memo().get(v)) next[c.weight] += m * c.mult;
            layer = std::move(next);
        }
        Decomposition d;
        for (auto it = layer.rbegin(); it != layer.rend(); ++it) d.push_back({it->first, it->second});
        auto value = std::make_shared<const Decomposition>(std::move(d));
        std::unique_lock lock(mutex_);
        return map_.try_emplace(std::move(key), std::move(value)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<Key, std::shared_ptr<const Decomposition>> map_;
};

DescentMemo& descent_memo() {
    static DescentMemo memo;
    return memo;
}

}  // namespace

Decomposition branch(const RankedWeight& w) {
    if (w.rank() < 2) throw DomainError("branching needs rank at least 2, got " + std::to_string(w.rank()));
    return *branch_memo().get(w);
}

Decomposition restrict_to(const RankedWeight& w, int rank) {
    if (rank < 1 || rank > w.rank())
        throw DomainError("restriction rank " + std::to_string(rank) + " outside [1, " + std::to_string(w.rank()) + "]");
    return *descent_memo().get(w, rank);
}

BigInt restrict_mult(const ThetaWeight& mu, int i, const ThetaWeight& lambda, int j) {
    if (mu.family() != lambda.family())
        throw FamilyMismatch("restrict-mult across families " + to_string(mu.family()) + " and " +
                             to_string(lambda.family()));
    if (i >= j) throw DomainError("restrict-mult needs i < j, got i=" + std::to_string(i) + " j=" + std::to_string(j));
    const RankedWeight small = truncate(mu, i);
    const RankedWeight big = truncate(lambda, j);
    const auto d = descent_memo().get(big, i);
    auto it = std::find_if(d->begin(), d->end(), [&](const Constituent& c) { return c.weight == small; });
    return it == d->end() ? BigInt(0) : it->mult;
}

}  // namespace stabrep
