#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stabrep/char_oracle.hpp"
#include "stabrep/error.hpp"

using namespace stabrep;

namespace {

ThetaWeight sl(std::vector<int> p, std::vector<int> m) { return ThetaWeight::sl(Partition(p), Partition(m)); }
ThetaWeight single(Family f, std::vector<int> p) { return ThetaWeight::single(f, Partition(p)); }

FormalCharacter::Terms terms(std::initializer_list<std::pair<const Exponent, BigInt>> l) { return FormalCharacter::Terms(l); }

oracle::Poly doubled(const FormalCharacter& c) {
    oracle::Poly p;
    for (const auto& [e, m] : c.terms()) {
        std::vector<int> d(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) d[i] = 2 * e[i];
        p[d] = static_cast<long long>(m);
    }
    return p;
}

}  // namespace

TEST_CASE("truncate pads and places the minus diagram at the end") {
    CHECK(truncate(sl({1}, {1}), 3).coords() == std::vector<int>{1, 0, -1});
    CHECK(truncate(single(Family::O, {2}), 4).coords() == std::vector<int>{2, 0, 0, 0});
    CHECK(truncate(sl({2, 1}, {3, 1}), 5).coords() == std::vector<int>{2, 1, 0, -1, -3});
    CHECK(truncate(ThetaWeight{}, 1).coords() == std::vector<int>{0});
    try {
        truncate(sl({2, 1}, {}), 1);
        FAIL("expected RankTooSmall");
    } catch (const RankTooSmall& e) {
        CHECK(e.minimal_rank() == 2);
    }
    CHECK_THROWS_AS(truncate(sl({1}, {1}), 1), RankTooSmall);
    for (Family f : {Family::SL, Family::O, Family::SP})
        for (const auto& w : enumerate_theta(f, 5)) CHECK(stabilize(truncate(w, minimal_rank(w) + 2)) == w);
}

TEST_CASE("ranked weights must be dominant") {
    CHECK_THROWS_AS(RankedWeight(Family::SL, {0, 1}), DomainError);
    CHECK_THROWS_AS(RankedWeight(Family::O, {1, -1}), DomainError);
    CHECK_THROWS_AS(RankedWeight(Family::SP, {}), DomainError);
    CHECK_NOTHROW(RankedWeight(Family::SL, {1, -1}));
}

TEST_CASE("Weyl dimension examples") {
    CHECK(dim(RankedWeight(Family::SL, {1, 0, 0})) == 3);
    CHECK(dim(RankedWeight(Family::SL, {1, 0, -1})) == 8);
    CHECK(dim(RankedWeight(Family::O, {1, 1})) == 10);
    CHECK(dim(RankedWeight(Family::O, {1, 0, 0})) == 7);
    CHECK(dim(RankedWeight(Family::SP, {1, 1})) == 5);
    CHECK(dim(RankedWeight(Family::SP, {2})) == 3);
    CHECK(dim(RankedWeight(Family::SL, std::vector<int>(20, 0))) == 1);
}

TEST_CASE("character examples") {
    CHECK(character(RankedWeight(Family::SL, {1, 0})).terms() == terms({{{1, 0}, 1}, {{0, 1}, 1}}));
    CHECK(character(RankedWeight(Family::SL, {2, 0})).terms() == terms({{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}));
    CHECK(character(RankedWeight(Family::SP, {2})).terms() == terms({{{2}, 1}, {{0}, 1}, {{-2}, 1}}));
    // adjoint of so(5): zero weight has multiplicity equal to the rank
    auto adj = character(RankedWeight(Family::O, {1, 1}));
    CHECK(adj.multiplicity({0, 0}) == 2);
    CHECK(adj.multiplicity({1, 0}) == 1);
}

TEST_CASE("character mass equals Weyl dimension and is Weyl invariant") {
    for (Family f : {Family::SL, Family::O, Family::SP})
        for (int n = 1; n <= 5; ++n)
            for (const auto& w : enumerate_theta(f, 4)) {
                if (minimal_rank(w) > n) continue;
                auto r = truncate(w, n);
                auto c = character(r);
                CHECK(c.mass() == dim(r));
                CHECK(c.is_weyl_invariant());
            }
}

TEST_CASE("Weyl character formula: char * A_rho == A_{lambda+rho}") {
    for (Family f : {Family::SL, Family::O, Family::SP})
        for (int n = 1; n <= 3; ++n)
            for (const auto& w : enumerate_theta(f, 4)) {
                if (minimal_rank(w) > n) continue;
                auto r = truncate(w, n);
                auto rho = oracle::doubled_rho(f, n);
                std::vector<int> top(n);
                for (int i = 0; i < n; ++i) top[i] = 2 * r.coords()[i] + rho[i];
                CAPTURE(format_coords(r.coords()));
                CHECK(oracle::poly_mul(doubled(character(r)), oracle::alternant(f, rho)) == oracle::alternant(f, top));
            }
}

TEST_CASE("gl characters agree with Gelfand-Tsetlin pattern enumeration") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : enumerate_theta(Family::SL, 4)) {
            if (minimal_rank(w) > n) continue;
            auto r = truncate(w, n);
            auto patterns = oracle::gl_character_by_patterns(r.coords());
            auto c = character(r);
            REQUIRE(patterns.size() == c.terms().size());
            for (const auto& [e, m] : patterns) CHECK(c.multiplicity(e) == m);
        }
}

TEST_CASE("mul: unit, mass, rank checks") {
    auto v = natural_character(Family::SL, 3);
    CHECK(mul(v, trivial_character(Family::SL, 3)) == v);
    CHECK(mul(v, v).mass() == 9);
    CHECK_THROWS_AS(mul(v, natural_character(Family::O, 3)), FamilyMismatch);
    CHECK_THROWS_AS(mul(v, natural_character(Family::SL, 2)), DomainError);

    std::mt19937 rng(7);
    for (Family f : {Family::SL, Family::O, Family::SP}) {
        auto ws = enumerate_theta(f, 3);
        for (int trial = 0; trial < 20; ++trial) {
            const auto& a = ws[rng() % ws.size()];
            const auto& b = ws[rng() % ws.size()];
            const int n = 3 + static_cast<int>(rng() % 2);
            auto ca = character(truncate(a, n)), cb = character(truncate(b, n));
            auto prod = mul(ca, cb);
            CHECK(prod.mass() == ca.mass() * cb.mass());
            CHECK(prod == mul_serial(ca, cb));
            CHECK(prod == mul(cb, ca));
            CHECK(prod.is_weyl_invariant());
        }
    }
}

TEST_CASE("decompose examples") {
    auto v = natural_character(Family::SL, 3);
    auto vs = conatural_character(Family::SL, 3);
    CHECK(decompose(mul(v, v)) == Decomposition{{RankedWeight(Family::SL, {2, 0, 0}), 1}, {RankedWeight(Family::SL, {1, 1, 0}), 1}});
    CHECK(decompose(mul(v, vs)) == Decomposition{{RankedWeight(Family::SL, {1, 0, -1}), 1}, {RankedWeight(Family::SL, {0, 0, 0}), 1}});
    for (Family f : {Family::SL, Family::O, Family::SP})
        for (const auto& w : enumerate_theta(f, 4)) {
            auto r = truncate(w, minimal_rank(w) + 1);
            CHECK(decompose(character(r)) == Decomposition{{r, 1}});
        }
}

TEST_CASE("decompose rejects non-characters") {
    // Weyl invariant but missing the (1,1) weight of S^2
    FormalCharacter fake(Family::SL, 2, terms({{{2, 0}, 1}, {{0, 2}, 1}}));
    CHECK_THROWS_AS(decompose(fake), NotACharacter);
    FormalCharacter lopsided(Family::SL, 2, terms({{{1, 0}, 1}}));
    CHECK_THROWS_AS(decompose(lopsided), NotACharacter);
    FormalCharacter unsigned_only(Family::SP, 1, terms({{{1}, 1}}));
    CHECK_THROWS_AS(decompose(unsigned_only), NotACharacter);
    CHECK(decompose(FormalCharacter(Family::O, 2)).empty());
}

TEST_CASE("tensor products reassemble dimensions") {
    for (Family f : {Family::SL, Family::O, Family::SP}) {
        auto ws = enumerate_theta(f, 3);
        for (int n = 1; n <= 6; ++n)
            for (std::size_t a = 0; a < ws.size(); ++a)
                for (std::size_t b = a; b < ws.size(); ++b) {
                    if (minimal_rank(ws[a]) > n || minimal_rank(ws[b]) > n) continue;
                    auto u = truncate(ws[a], n), v = truncate(ws[b], n);
                    auto d = decompose(mul(*character_ptr(u), *character_ptr(v)));
                    BigInt total = 0;
                    for (const auto& c : d) total += c.mult * dim(c.weight);
                    CHECK(total == dim(u) * dim(v));
                    CHECK(tensor_decompose(u, v) == d);
                    CHECK(tensor_decompose(v, u) == d);
                }
    }
}

TEST_CASE("dimension grows with the rank") {
    for (Family f : {Family::SL, Family::O, Family::SP})
        for (const auto& w : enumerate_theta(f, 4)) {
            if (w.is_trivial()) continue;
            for (int n = minimal_rank(w); n < 8; ++n) CHECK(dim(truncate(w, n)) < dim(truncate(w, n + 1)));
        }
}

TEST_CASE("restrict_character drops trailing variables") {
    auto c = restrict_character(character(RankedWeight(Family::SL, {1, 0, 0})), 2);
    CHECK(c.terms() == terms({{{1, 0}, 1}, {{0, 1}, 1}, {{0, 0}, 1}}));
    CHECK_THROWS_AS(restrict_character(c, 3), DomainError);
}

TEST_CASE("stable rank") {
    CHECK(stable_rank(Family::SL, 2) == 4);
    CHECK(stable_rank(Family::O, 2) == 6);
    CHECK(stable_rank(Family::SP, 3, 1) == 9);
}
