// One line per acceptance criterion; exit status is nonzero if any fails.
// All comparisons are exact (integer or set equality), so there are no
// numeric tolerances beyond the fixed probe ranges below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stabrep/branching.hpp"
#include "stabrep/char_oracle.hpp"
#include "stabrep/dlim_desc.hpp"
#include "stabrep/duals_inj.hpp"
#include "stabrep/tensor_calc.hpp"
#include "stabrep/theta_order.hpp"

using namespace stabrep;

namespace {

constexpr Family kFamilies[] = {Family::SL, Family::O, Family::SP};

// probe ranges
constexpr std::size_t kTpqMax = 5;          // p + q for Loewy lengths
constexpr std::size_t kLedgerMax = 4;       // p + q for the dimension ledger
constexpr std::size_t kInjNorm = 4;         // injective hull lengths
constexpr std::size_t kExtNorm = 3;         // layer-1 key sets
constexpr int kBranchSamples = 200;
constexpr int kBranchMaxRank = 7;
constexpr std::size_t kBranchNorm = 4;
constexpr std::size_t kStableNorm = 3;
constexpr int kStableSpan = 2;              // extra ranks probed past the stable rank
constexpr int kMultOneMaxRank = 7;
constexpr std::size_t kPosetNorm = 4;
constexpr int kWindowLo = 3, kWindowHi = 8;
constexpr unsigned kSeed = 20240601;

ThetaWeight sl(std::vector<int> p, std::vector<int> m) { return ThetaWeight::sl(Partition(p), Partition(m)); }
ThetaWeight single(Family f, std::vector<int> p) { return ThetaWeight::single(f, Partition(p)); }

struct Outcome {
    bool ok = true;
    std::string detail;
};

class Check {
public:
    void expect(bool cond, const std::string& what) {
        ++count_;
        if (!cond && ok_) {
            ok_ = false;
            first_ = what;
        }
    }
    Outcome done(const std::string& summary) const {
        return {ok_, ok_ ? summary + ", " + std::to_string(count_) + " checks" : "first failure: " + first_};
    }

private:
    bool ok_ = true;
    std::size_t count_ = 0;
    std::string first_;
};

std::size_t one_plus_max_layer(Family f, std::size_t p, std::size_t q) {
    std::size_t top = 0;
    for (const auto& fac : tpq_factors(f, p, q)) top = std::max(top, tpq_layer(fac.weight, p, q));
    return top + 1;
}

std::vector<ThetaWeight> keys(const LoewyProfile::Layer& layer) {
    std::vector<ThetaWeight> out;
    for (const auto& [w, c] : layer) out.push_back(w);
    return out;
}

std::string pq(std::size_t p, std::size_t q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

Outcome c1() {
    Check c;
    for (std::size_t p = 0; p <= kTpqMax; ++p)
        for (std::size_t q = 0; p + q <= kTpqMax; ++q) {
            const auto got = one_plus_max_layer(Family::SL, p, q);
            c.expect(got == std::min(p, q) + 1, "sl T" + pq(p, q) + " gives " + std::to_string(got));
        }
    return c.done("p+q <= 5");
}

Outcome c2() {
    Check c;
    for (Family f : {Family::O, Family::SP})
        for (std::size_t p = 0; p <= kTpqMax; ++p)
            for (std::size_t q = 0; p + q <= kTpqMax; ++q) {
                const auto got = one_plus_max_layer(f, p, q);
                c.expect(got == (p + q) / 2 + 1, to_string(f) + " T" + pq(p, q) + " gives " + std::to_string(got));
            }
    return c.done("o and sp, p+q <= 5");
}

Outcome c3() {
    Check c;
    const auto p = inj_profile(sl({}, {1}));
    const LoewyProfile expected(Family::SL, {{{sl({}, {1}), Cardinality::finite(1)}}, {{ThetaWeight{}, Cardinality::beth(1)}}});
    c.expect(p == expected, "profile differs: " + profile_to_json(p).dump());
    c.expect(loewy_length(p) == 2, "length " + std::to_string(loewy_length(p)));
    return c.done("inj(-|1)");
}

Outcome c4() {
    Check c;
    const auto p = inj_profile(sl({1}, {1}));
    c.expect(p.layers().size() == 3, "layer count " + std::to_string(p.layers().size()));
    if (p.layers().size() != 3) return c.done("");
    c.expect(p.layers()[0] == LoewyProfile::Layer{{sl({1}, {1}), Cardinality::finite(1)}}, "socle");
    c.expect(keys(p.layers()[1]) == std::vector<ThetaWeight>{ThetaWeight{}, sl({1}, {}), sl({}, {1})}, "layer 1 keys");
    c.expect(keys(p.layers()[2]) == std::vector<ThetaWeight>{ThetaWeight{}}, "layer 2 keys");
    for (std::size_t k = 1; k < 3; ++k)
        for (const auto& [w, m] : p.layers()[k])
            c.expect(m == Cardinality::beth(1), "multiplicity of " + format_theta(w) + " in layer " + std::to_string(k));
    return c.done("inj(1|1)");
}

Outcome c5() {
    Check c;
    std::size_t n = 0;
    for (Family f : kFamilies)
        for (const auto& lam : enumerate_theta(f, kInjNorm)) {
            ++n;
            c.expect(loewy_length(inj_profile(lam)) == norm(lam) + 1, to_string(f) + " " + format_theta(lam));
        }
    return c.done(std::to_string(n) + " labels");
}

Outcome c6() {
    Check c;
    for (Family f : kFamilies) {
        const auto universe = enumerate_theta(f, kExtNorm + 1);
        for (const auto& lam : enumerate_theta(f, kExtNorm)) {
            std::vector<ThetaWeight> below;
            for (const auto& mu : universe)
                if (mu != lam && leq(mu, lam)) below.push_back(mu);
            const auto p = inj_profile(lam);
            const auto layer1 = p.layers().size() > 1 ? keys(p.layers()[1]) : std::vector<ThetaWeight>{};
            c.expect(layer1 == below, to_string(f) + " layer 1 of " + format_theta(lam));
        }
        for (const auto& lam : enumerate_theta(f, kExtNorm + 1))
            c.expect(!ext1_nonzero(lam, lam), to_string(f) + " ext1 of " + format_theta(lam) + " with itself");
    }
    return c.done("norm <= 3, self-ext norm <= 4");
}

Outcome c7() {
    Check c;
    for (Family f : kFamilies)
        for (std::size_t p = 0; p <= kLedgerMax; ++p)
            for (std::size_t q = 0; p + q <= kLedgerMax; ++q) {
                const int n = stable_rank(f, p + q);
                const BigInt dv = dim(truncate(f == Family::SL ? sl({1}, {}) : single(f, {1}), n));
                BigInt total = 0, expected = 1;
                for (const auto& fac : tpq_factors(f, p, q)) total += fac.mult * dim(truncate(fac.weight, n));
                for (std::size_t k = 0; k < p + q; ++k) expected *= dv;
                c.expect(total == expected, to_string(f) + " T" + pq(p, q) + ": " + to_string(total) + " vs " + to_string(expected));
            }
    return c.done("p+q <= 4");
}

Outcome c8() {
    Check c;
    std::mt19937 rng(kSeed);
    std::vector<ThetaWeight> pool;
    for (Family f : kFamilies)
        for (const auto& w : enumerate_theta(f, kBranchNorm))
            if (minimal_rank(w) <= kBranchMaxRank) pool.push_back(w);
    for (int s = 0; s < kBranchSamples; ++s) {
        const auto& w = pool[rng() % pool.size()];
        const int lo = std::max(2, minimal_rank(w));
        const int n = lo + static_cast<int>(rng() % (kBranchMaxRank - lo + 1));
        const auto r = truncate(w, n);
        BigInt total = 0;
        for (const auto& k : branch(r)) total += k.mult * dim(k.weight);
        c.expect(total == dim(r), to_string(w.family()) + " " + format_coords(r.coords()));
    }
    // stable window: i in [N, N+2] and j - i in [d, d+2], d = max(1, |lambda|).
    // The value is fixed for each gap j - i; its vanishing is fixed on the whole window.
    for (Family f : kFamilies) {
        const auto ws = enumerate_theta(f, kStableNorm);
        for (const auto& mu : ws)
            for (const auto& lam : ws) {
                const int n0 = stable_rank(f, norm(mu) + norm(lam));
                const int d = std::max(1, static_cast<int>(norm(lam)));
                const bool support = restrict_mult(mu, n0, lam, n0 + d) != 0;
                for (int gap = d; gap <= d + kStableSpan; ++gap) {
                    const BigInt ref = restrict_mult(mu, n0, lam, n0 + gap);
                    c.expect((ref != 0) == support, "support of " + format_theta(mu) + " in " + format_theta(lam));
                    for (int i = n0 + 1; i <= n0 + kStableSpan; ++i)
                        c.expect(restrict_mult(mu, i, lam, i + gap) == ref,
                                 to_string(f) + " " + format_theta(mu) + " in " + format_theta(lam) + " at i=" + std::to_string(i));
                }
            }
    }
    return c.done("200 samples; stable window per gap j-i");
}

Outcome c9() {
    Check c;
    for (Family f : kFamilies)
        for (const auto& lam : enumerate_theta(f, kStableNorm)) {
            std::vector<int> ranks;
            for (int r = minimal_rank(lam); r <= kMultOneMaxRank; ++r) ranks.push_back(r);
            c.expect(mult_one_check(lam, ranks), to_string(f) + " " + format_theta(lam));
        }
    return c.done("ranks up to 7");
}

Outcome c10() {
    Check c;
    for (Family f : kFamilies) {
        ThetaPoset poset(f, kPosetNorm);
        const auto& el = poset.elements();
        const std::size_t n = poset.size();
        for (std::size_t a = 0; a < n; ++a) {
            c.expect(poset.leq(a, a), "reflexivity");
            for (std::size_t b = 0; b < n; ++b) {
                const std::string pair = to_string(f) + " " + format_theta(el[a]) + " <= " + format_theta(el[b]);
                if (a != b && poset.leq(a, b)) c.expect(!poset.leq(b, a), "antisymmetry " + pair);
                for (std::size_t k = 0; k < n; ++k)
                    if (poset.leq(a, b) && poset.leq(b, k)) c.expect(poset.leq(a, k), "transitivity " + pair);
                const bool contained = el[a].plus().contained_in(el[b].plus()) && el[a].minus().contained_in(el[b].minus());
                c.expect(poset.leq(a, b) == contained, "containment disagrees at " + pair);
                if (poset.leq(a, b)) {
                    const auto l = chain_length(el[b], el[a]);
                    c.expect(l && *l == norm(el[b]) - norm(el[a]) + 1, "chain length at " + pair);
                }
            }
        }
    }
    return c.done("norm <= 4, all families");
}

Outcome c11() {
    Check c;
    const auto window = window_pairs(kWindowLo, kWindowHi);
    auto expect_verdict = [&](const DirectSystemDescriptor& d, Verdict v, const std::string& name) {
        const auto r = dual_integrable_verdict(d, window);
        c.expect(r.verdict == v && r.certified, name + " gave " + to_string(r.verdict));
    };
    expect_verdict(DirectSystemDescriptor::sym_power(), Verdict::GrowingTypes, "sympower");
    for (const auto& t : {SpinorSequence{{}, 1}, SpinorSequence{{1, 2, 1}, 2}})
        expect_verdict(DirectSystemDescriptor::spinor(t), Verdict::BoundedTypes, "spinor " + format_spinor_sequence(t));
    for (Family f : kFamilies)
        for (const auto& lam : enumerate_theta(f, 2))
            expect_verdict(DirectSystemDescriptor::stable(lam), Verdict::BoundedTypes, "stable " + format_theta(lam));
    expect_verdict(DirectSystemDescriptor::stable(sl({1, 1, 1}, {})), Verdict::BoundedTypes, "stable 1,1,1|-");

    const SpinorSequence t{{1, 2, 2}, 1};
    c.expect(spinor_equiv(t, t), "t ~ t");
    c.expect(spinor_equiv(SpinorSequence{{2, 2, 1}, 2}, SpinorSequence{{1}, 2}), "same tail");
    c.expect(!spinor_equiv(SpinorSequence{{}, 1}, SpinorSequence{{}, 2}), "all-1 vs all-2");
    return c.done("window 3..8");
}

Outcome c12() {
    Check c;
    auto socle = [](Family f, std::size_t p, std::size_t q) {
        std::vector<ThetaWeight> out;
        for (const auto& fac : tpq_factors(f, p, q))
            if (tpq_layer(fac.weight, p, q) == 0) out.push_back(fac.weight);
        std::sort(out.begin(), out.end());
        return out;
    };
    c.expect(socle(Family::SL, 1, 1) == std::vector<ThetaWeight>{sl({1}, {1})}, "socle of sl T(1,1)");
    auto o2 = std::vector<ThetaWeight>{single(Family::O, {2}), single(Family::O, {1, 1})};
    std::sort(o2.begin(), o2.end());
    c.expect(socle(Family::O, 2, 0) == o2, "socle of o T(2,0)");
    const auto sp = socle(Family::SP, 2, 0);
    c.expect(std::find(sp.begin(), sp.end(), single(Family::SP, {2})) != sp.end(), "socle of sp T(2,0) lacks (2)");
    return c.done("sl T(1,1), o T(2,0), sp T(2,0)");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"sl Loewy length of T(p,q) is min(p,q)+1", c1},
        {"o/sp Loewy length of T(p,q) is floor((p+q)/2)+1", c2},
        {"injective hull of the conatural label", c3},
        {"injective hull of the adjoint label", c4},
        {"injective hulls have Loewy length |lambda|+1", c5},
        {"first hull layer is the set of labels strictly below", c6},
        {"dimension ledger of T(p,q) at the stable rank", c7},
        {"branching mass conservation and stabilization", c8},
        {"canonical constituent has multiplicity one", c9},
        {"order axioms, gradedness, containment", c10},
        {"direct-limit verdicts and spinor tails", c11},
        {"socles of small tensor modules", c12},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.ok) ++failed;
        std::printf("%s %2zu  %s  [%s; %.2fs]\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                    o.detail.c_str(), secs);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
