#include "stabrep/char_oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "stabrep/error.hpp"

namespace stabrep {

namespace {

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const noexcept { return boost::hash_range(e.begin(), e.end()); }
};

using Accumulator = std::unordered_map<Exponent, BigInt, ExponentHash>;

long long dot(const std::vector<int>& a, const std::vector<int>& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
    return s;
}

void require_same(const FormalCharacter& a, const FormalCharacter& b) {
    if (a.family() != b.family())
        throw FamilyMismatch("characters of families " + to_string(a.family()) + " and " +
                             to_string(b.family()));
    if (a.rank() != b.rank())
        throw DomainError("characters of ranks " + std::to_string(a.rank()) + " and " +
                          std::to_string(b.rank()));
}

FormalCharacter from_accumulator(Family f, int rank, Accumulator&& acc) {
    std::vector<std::pair<Exponent, BigInt>> flat;
    flat.reserve(acc.size());
    for (auto& [e, m] : acc)
        if (m != 0) flat.emplace_back(e, std::move(m));
    std::sort(flat.begin(), flat.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    FormalCharacter::Terms terms;
    for (auto& [e, m] : flat) terms.emplace_hint(terms.end(), std::move(e), std::move(m));
    return FormalCharacter(f, rank, std::move(terms));
}

// Dominant weights mu <= top (top - mu a nonnegative sum of positive roots).
void dominant_below_rec(Family f, const std::vector<int>& top, const std::vector<long long>& top_prefix,
                        long long top_total, int lo, std::size_t k, long long prefix, std::vector<int>& cur,
                        std::vector<Exponent>& out) {
    const std::size_t n = top.size();
    if (k == n) {
        long long diff = top_total - prefix;
        if (f == Family::SL && diff != 0) return;
        if (f == Family::SP && diff % 2 != 0) return;
        out.push_back(cur);
        return;
    }
    long long hi = k == 0 ? top[0] : cur[k - 1];
    hi = std::min<long long>(hi, top_prefix[k] - prefix);
    const long long remaining = static_cast<long long>(n - k - 1);
    for (long long v = hi; v >= lo; --v) {
        if (f == Family::SL) {
            // the remaining entries lie in [lo, v] and must close the total
            if (prefix + v + remaining * v < top_total) break;
            if (prefix + v + remaining * lo > top_total) continue;
        }
        cur[k] = static_cast<int>(v);
        dominant_below_rec(f, top, top_prefix, top_total, lo, k + 1, prefix + v, cur, out);
    }
}

std::vector<Exponent> dominant_below(const RankedWeight& w) {
    const auto& top = w.coords();
    const std::size_t n = top.size();
    std::vector<long long> prefix(n);
    long long s = 0;
    for (std::size_t i = 0; i < n; ++i) prefix[i] = (s += top[i]);
    int lo = w.family() == Family::SL ? top.back() : 0;
    std::vector<int> cur(n, 0);
    std::vector<Exponent> out;
    dominant_below_rec(w.family(), top, prefix, s, lo, 0, 0, cur, out);
    return out;
}

void expand_orbit(Family f, const Exponent& dom, const BigInt& m, std::vector<std::pair<Exponent, BigInt>>& out) {
    Exponent perm = dom;
    std::sort(perm.begin(), perm.end());
    do {
        if (f == Family::SL) {
            out.emplace_back(perm, m);
            continue;
        }
        std::vector<std::size_t> nz;
        for (std::size_t i = 0; i < perm.size(); ++i)
            if (perm[i] != 0) nz.push_back(i);
        const std::size_t combos = std::size_t{1} << nz.size();
        for (std::size_t mask = 0; mask < combos; ++mask) {
            Exponent e = perm;
            for (std::size_t b = 0; b < nz.size(); ++b)
                if (mask & (std::size_t{1} << b)) e[nz[b]] = -e[nz[b]];
            out.emplace_back(std::move(e), m);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

template <class Value>
class Memo {
public:
    template <class Make>
    std::shared_ptr<const Value> get(const RankedWeight& key, Make&& make) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = map_.find(key); it != map_.end()) return it->second;
        }
        auto value = std::make_shared<const Value>(make());
        std::unique_lock lock(mutex_);
        return map_.try_emplace(key, std::move(value)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<RankedWeight, std::shared_ptr<const Value>> map_;
};

Memo<std::map<Exponent, BigInt>>& dominant_memo() {
    static Memo<std::map<Exponent, BigInt>> memo;
    return memo;
}

Memo<FormalCharacter>& character_memo() {
    static Memo<FormalCharacter> memo;
    return memo;
}

std::map<Exponent, BigInt> freudenthal(const RankedWeight& w) {
    const Family f = w.family();
    const int n = w.rank();
    const auto roots = positive_roots(f, n);
    const auto rho2 = two_rho(f, n);
    const auto& top = w.coords();

    auto weights = dominant_below(w);
    std::vector<std::pair<long long, Exponent>> order;
    order.reserve(weights.size());
    for (auto& mu : weights) order.emplace_back(dot(mu, rho2), std::move(mu));
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

    std::map<Exponent, BigInt> mult;
    for (const auto& [level, mu] : order) {
        if (mu == top) {
            mult.emplace(mu, 1);
            continue;
        }
        BigInt sum = 0;
        Exponent nu(n);
        for (const auto& alpha : roots) {
            for (int k = 1;; ++k) {
                for (int i = 0; i < n; ++i) nu[i] = mu[i] + k * alpha[i];
                auto it = mult.find(dominant_of(f, nu));
                if (it == mult.end()) break;
                sum += it->second * dot(nu, alpha);
            }
        }
        // |top + rho|^2 - |mu + rho|^2 = (top - mu, top + mu + 2 rho)
        long long denom = 0;
        for (int i = 0; i < n; ++i) denom += static_cast<long long>(top[i] - mu[i]) * (top[i] + mu[i] + rho2[i]);
        if (denom <= 0) throw std::logic_error("Freudenthal denominator is not positive");
        BigInt m = (2 * sum) / denom;
        if (m * denom != 2 * sum) throw std::logic_error("Freudenthal recursion is not integral");
        if (m != 0) mult.emplace(mu, std::move(m));
    }
    return mult;
}

}  // namespace

RankedWeight::RankedWeight(Family family, std::vector<int> coords) : family_(family), coords_(std::move(coords)) {
    if (coords_.empty()) throw DomainError("rank must be positive");
    for (std::size_t i = 0; i + 1 < coords_.size(); ++i)
        if (coords_[i] < coords_[i + 1])
            throw DomainError("weight " + format_coords(coords_) + " is not dominant (coordinates must weakly decrease)");
    if (family_ != Family::SL && coords_.back() < 0)
        throw DomainError("weight " + format_coords(coords_) + " is not dominant for " + to_string(family_) +
                          " (coordinates must be nonnegative)");
}

std::string format_coords(const std::vector<int>& coords) {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(coords[i]);
    }
    return s + ")";
}

FormalCharacter::FormalCharacter(Family family, int rank, Terms terms)
    : family_(family), rank_(rank), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (static_cast<int>(it->first.size()) != rank_) throw DomainError("exponent length differs from rank");
        if (it->second < 0) throw NotACharacter("negative multiplicity in formal character");
        it = it->second == 0 ? terms_.erase(it) : std::next(it);
    }
}

void FormalCharacter::add(const Exponent& e, const BigInt& m) {
    if (static_cast<int>(e.size()) != rank_) throw DomainError("exponent length differs from rank");
    if (m == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, m);
    if (!inserted) it->second += m;
    if (it->second < 0) throw NotACharacter("negative multiplicity in formal character");
    if (it->second == 0) terms_.erase(it);
}

BigInt FormalCharacter::multiplicity(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt FormalCharacter::mass() const {
    BigInt s = 0;
    for (const auto& [e, m] : terms_) s += m;
    return s;
}

bool FormalCharacter::is_weyl_invariant() const {
    // adjacent transpositions generate the symmetric group; the sign change
    // of the last coordinate completes the hyperoctahedral group
    for (const auto& [e, m] : terms_) {
        Exponent g = e;
        for (int i = 0; i + 1 < rank_; ++i) {
            if (e[i] == e[i + 1]) continue;
            std::swap(g[i], g[i + 1]);
            if (multiplicity(g) != m) return false;
            std::swap(g[i], g[i + 1]);
        }
        if (family_ != Family::SL && e.back() != 0) {
            g.back() = -g.back();
            if (multiplicity(g) != m) return false;
        }
    }
    return true;
}

int minimal_rank(const ThetaWeight& w) {
    std::size_t len = w.plus().length() + w.minus().length();
    return std::max(1, static_cast<int>(len));
}

int stable_rank(Family family, std::size_t total_norm, int margin) {
    int t = static_cast<int>(total_norm);
    return (family == Family::SL ? t + 2 : 2 * t + 2) + margin;
}

RankedWeight truncate(const ThetaWeight& w, int rank) {
    const int need = minimal_rank(w);
    if (rank < need) throw RankTooSmall(rank, need);
    std::vector<int> coords(rank, 0);
    const auto& plus = w.plus().parts();
    std::copy(plus.begin(), plus.end(), coords.begin());
    const auto& minus = w.minus().parts();
    for (std::size_t k = 0; k < minus.size(); ++k) coords[rank - 1 - k] = -minus[k];
    return RankedWeight(w.family(), std::move(coords));
}

ThetaWeight stabilize(const RankedWeight& w) {
    std::vector<int> plus, minus;
    for (int c : w.coords())
        if (c > 0) plus.push_back(c);
    for (auto it = w.coords().rbegin(); it != w.coords().rend(); ++it)
        if (*it < 0) minus.push_back(-*it);
    if (w.family() == Family::SL) return ThetaWeight::sl(Partition(plus), Partition(minus));
    return ThetaWeight::single(w.family(), Partition(plus));
}

Exponent dominant_of(Family family, Exponent e) {
    if (family != Family::SL)
        for (int& x : e) x = x < 0 ? -x : x;
    std::sort(e.begin(), e.end(), std::greater<>());
    return e;
}

bool is_dominant(Family family, const Exponent& e) {
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
        if (e[i] < e[i + 1]) return false;
    return family == Family::SL || e.empty() || e.back() >= 0;
}

std::vector<Exponent> positive_roots(Family family, int rank) {
    std::vector<Exponent> roots;
    for (int i = 0; i < rank; ++i) {
        for (int j = i + 1; j < rank; ++j) {
            Exponent a(rank, 0);
            a[i] = 1;
            a[j] = -1;
            roots.push_back(a);
            if (family != Family::SL) {
                a[j] = 1;
                roots.push_back(a);
            }
        }
        if (family != Family::SL) {
            Exponent a(rank, 0);
            a[i] = family == Family::O ? 1 : 2;
            roots.push_back(a);
        }
    }
    return roots;
}

std::vector<int> two_rho(Family family, int rank) {
    std::vector<int> r(rank, 0);
    for (const auto& a : positive_roots(family, rank))
        for (int i = 0; i < rank; ++i) r[i] += a[i];
    return r;
}

BigInt dim(const RankedWeight& w) {
    const auto rho2 = two_rho(w.family(), w.rank());
    std::vector<int> shifted(w.rank());
    for (int i = 0; i < w.rank(); ++i) shifted[i] = 2 * w.coords()[i] + rho2[i];
    BigInt num = 1, den = 1;
    for (const auto& a : positive_roots(w.family(), w.rank())) {
        num *= dot(shifted, a);
        den *= dot(rho2, a);
    }
    return num / den;
}

std::map<Exponent, BigInt> dominant_multiplicities(const RankedWeight& w) {
    return *dominant_memo().get(w, [&] { return freudenthal(w); });
}

std::shared_ptr<const FormalCharacter> character_ptr(const RankedWeight& w) {
    return character_memo().get(w, [&] {
        auto dom = dominant_memo().get(w, [&] { return freudenthal(w); });
        std::vector<std::pair<Exponent, BigInt>> flat;
        for (const auto& [mu, m] : *dom) expand_orbit(w.family(), mu, m, flat);
        std::sort(flat.begin(), flat.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        FormalCharacter::Terms terms;
        for (auto& [e, m] : flat) terms.emplace_hint(terms.end(), std::move(e), std::move(m));
        return FormalCharacter(w.family(), w.rank(), std::move(terms));
    });
}

FormalCharacter character(const RankedWeight& w) { return *character_ptr(w); }

FormalCharacter trivial_character(Family family, int rank) {
    FormalCharacter c(family, rank);
    c.add(Exponent(rank, 0), 1);
    return c;
}

FormalCharacter natural_character(Family family, int rank) {
    FormalCharacter c(family, rank);
    for (int i = 0; i < rank; ++i) {
        Exponent e(rank, 0);
        e[i] = 1;
        c.add(e, 1);
        if (family != Family::SL) {
            e[i] = -1;
            c.add(e, 1);
        }
    }
    if (family == Family::O) c.add(Exponent(rank, 0), 1);
    return c;
}

FormalCharacter conatural_character(Family family, int rank) {
    if (family != Family::SL) return natural_character(family, rank);
    FormalCharacter c(family, rank);
    for (int i = 0; i < rank; ++i) {
        Exponent e(rank, 0);
        e[i] = -1;
        c.add(e, 1);
    }
    return c;
}

FormalCharacter mul_serial(const FormalCharacter& a, const FormalCharacter& b) {
    require_same(a, b);
    const int n = a.rank();
    Accumulator acc;
    Exponent e(n);
    for (const auto& [ea, ma] : a.terms()) {
        for (const auto& [eb, mb] : b.terms()) {
            for (int i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            acc[e] += ma * mb;
        }
    }
    return from_accumulator(a.family(), n, std::move(acc));
}

FormalCharacter mul(const FormalCharacter& a, const FormalCharacter& b) {
    require_same(a, b);
    const int n = a.rank();
    std::vector<const FormalCharacter::Terms::value_type*> left;
    left.reserve(a.terms().size());
    for (const auto& t : a.terms()) left.push_back(&t);
    const long long count = static_cast<long long>(left.size());

    Accumulator acc;
#pragma omp parallel
    {
        Accumulator local;
        Exponent e(n);
#pragma omp for schedule(dynamic, 64) nowait
        for (long long idx = 0; idx < count; ++idx) {
            const auto& [ea, ma] = *left[idx];
            for (const auto& [eb, mb] : b.terms()) {
                for (int i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
                local[e] += ma * mb;
            }
        }
#pragma omp critical(stabrep_mul_merge)
        {
            if (acc.empty()) {
                acc.swap(local);
            } else {
                for (auto& [k, v] : local) acc[k] += v;
            }
        }
    }
    return from_accumulator(a.family(), n, std::move(acc));
}

FormalCharacter scale(const FormalCharacter& c, const BigInt& k) {
    if (k < 0) throw NotACharacter("negative scale factor");
    FormalCharacter::Terms terms;
    if (k != 0)
        for (const auto& [e, m] : c.terms()) terms.emplace_hint(terms.end(), e, m * k);
    return FormalCharacter(c.family(), c.rank(), std::move(terms));
}

FormalCharacter add(const FormalCharacter& a, const FormalCharacter& b) {
    require_same(a, b);
    FormalCharacter out = a;
    for (const auto& [e, m] : b.terms()) out.add(e, m);
    return out;
}

Decomposition decompose(const FormalCharacter& c) {
    if (!c.is_weyl_invariant()) throw NotACharacter("formal character is not Weyl-invariant");
    // A Weyl-invariant character is determined by its dominant terms.
    std::map<Exponent, BigInt> rest;
    for (const auto& [e, m] : c.terms())
        if (is_dominant(c.family(), e)) rest.emplace_hint(rest.end(), e, m);

    Decomposition out;
    while (!rest.empty()) {
        // every positive root is lexicographically positive, so the largest
        // remaining exponent is a highest weight
        auto top_it = std::prev(rest.end());
        RankedWeight top(c.family(), top_it->first);
        const BigInt m = top_it->second;
        auto dom = dominant_memo().get(top, [&] { return freudenthal(top); });
        for (const auto& [mu, k] : *dom) {
            auto it = rest.find(mu);
            if (it == rest.end()) throw NotACharacter("subtraction of " + format_coords(top.coords()) + " leaves a negative multiplicity");
            it->second -= m * k;
            if (it->second < 0) throw NotACharacter("subtraction of " + format_coords(top.coords()) + " leaves a negative multiplicity");
            if (it->second == 0) rest.erase(it);
        }
        out.push_back({std::move(top), m});
    }
    return out;
}

namespace {

// Moves a doubled, rho-shifted weight into the dominant chamber. Returns the
// sign of the Weyl element used, or 0 when x lies on a wall.
int reflect_to_dominant(Family family, Exponent& x) {
    int sign = 1;
    if (family != Family::SL)
        for (int& v : x) {
            if (v == 0) return 0;
            if (v < 0) {
                v = -v;
                sign = -sign;
            }
        }
    // insertion sort, counting transpositions
    for (std::size_t i = 1; i < x.size(); ++i)
        for (std::size_t k = i; k > 0 && x[k - 1] < x[k]; --k) {
            std::swap(x[k - 1], x[k]);
            sign = -sign;
        }
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        if (x[i] == x[i + 1]) return 0;
    return sign;
}

}  // namespace

Decomposition tensor_decompose(const RankedWeight& a, const RankedWeight& b) {
    if (a.family() != b.family())
        throw FamilyMismatch("tensor product across families " + to_string(a.family()) + " and " + to_string(b.family()));
    if (a.rank() != b.rank()) throw DomainError("tensor product of weights of different ranks");
    const bool swap = dim(a) < dim(b);
    const RankedWeight& top = swap ? b : a;
    const auto small = character_ptr(swap ? a : b);
    const Family f = a.family();
    const auto rho2 = two_rho(f, a.rank());

    std::map<Exponent, BigInt> acc;
    for (const auto& [nu, m] : small->terms()) {
        Exponent x(nu.size());
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = 2 * (top.coords()[i] + nu[i]) + rho2[i];
        const int sign = reflect_to_dominant(f, x);
        if (sign == 0) continue;
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] - rho2[i]) / 2;
        acc[x] += sign * m;
    }
    Decomposition out;
    for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
        if (it->second < 0) throw std::logic_error("negative multiplicity in tensor decomposition");
        if (it->second > 0) out.push_back({RankedWeight(f, it->first), it->second});
    }
    return out;
}

FormalCharacter restrict_character(const FormalCharacter& c, int rank) {
    if (rank < 1 || rank > c.rank())
        throw DomainError("restriction rank " + std::to_string(rank) + " outside [1, " + std::to_string(c.rank()) + "]");
    Accumulator acc;
    for (const auto& [e, m] : c.terms()) acc[Exponent(e.begin(), e.begin() + rank)] += m;
    return from_accumulator(c.family(), rank, std::move(acc));
}

}  // namespace stabrep
