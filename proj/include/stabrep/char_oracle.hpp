#pragma once

// Exact finite-rank character arithmetic for the classical chains
//   SL: gl(n)        (coords weakly decreasing integers)
//   O : so(2n+1)     (coords a partition with at most n parts)
//   SP: sp(2n)       (coords a partition with at most n parts)
// Every stable claim about labels is checked against these characters.

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "stabrep/bigint.hpp"
#include "stabrep/weights.hpp"

namespace stabrep {

using Exponent = std::vector<int>;

class RankedWeight {
public:
    RankedWeight(Family family, std::vector<int> coords);

    Family family() const noexcept { return family_; }
    int rank() const noexcept { return static_cast<int>(coords_.size()); }
    const std::vector<int>& coords() const noexcept { return coords_; }

    friend bool operator==(const RankedWeight&, const RankedWeight&) = default;
    friend auto operator<=>(const RankedWeight&, const RankedWeight&) = default;

private:
    Family family_;
    std::vector<int> coords_;
};

std::string format_coords(const std::vector<int>& coords);

// Weight multiplicities of a finite-dimensional module. Terms with zero
// multiplicity are never stored.
class FormalCharacter {
public:
    using Terms = std::map<Exponent, BigInt>;

    FormalCharacter(Family family, int rank) : family_(family), rank_(rank) {}
    FormalCharacter(Family family, int rank, Terms terms);

    Family family() const noexcept { return family_; }
    int rank() const noexcept { return rank_; }
    const Terms& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }

    void add(const Exponent& e, const BigInt& m);
    BigInt multiplicity(const Exponent& e) const;
    BigInt mass() const;

    // Invariance under permutations (SL) or signed permutations (O, SP).
    bool is_weyl_invariant() const;

    friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;

private:
    Family family_;
    int rank_;
    Terms terms_;
};

struct Constituent {
    RankedWeight weight;
    BigInt mult;

    friend bool operator==(const Constituent&, const Constituent&) = default;
};

using Decomposition = std::vector<Constituent>;

// Smallest rank at which the label has a finite-rank truncation.
int minimal_rank(const ThetaWeight& w);

// Rank at which labels of the given total norm are interpreted:
// total + 2 for sl, 2 * total + 2 for o and sp, plus an optional margin.
int stable_rank(Family family, std::size_t total_norm, int margin = 0);

RankedWeight truncate(const ThetaWeight& w, int rank);
// Inverse of truncate: reads plus and minus diagrams off the coordinates.
ThetaWeight stabilize(const RankedWeight& w);

// Dominant representative of the Weyl orbit of an exponent.
Exponent dominant_of(Family family, Exponent e);
bool is_dominant(Family family, const Exponent& e);

// Positive roots in epsilon coordinates.
std::vector<Exponent> positive_roots(Family family, int rank);
// Twice the half-sum of positive roots.
std::vector<int> two_rho(Family family, int rank);

BigInt dim(const RankedWeight& w);

// Multiplicities of the dominant weights of the irreducible, by Freudenthal's
// recursion.
std::map<Exponent, BigInt> dominant_multiplicities(const RankedWeight& w);

FormalCharacter character(const RankedWeight& w);
std::shared_ptr<const FormalCharacter> character_ptr(const RankedWeight& w);

FormalCharacter trivial_character(Family family, int rank);
FormalCharacter natural_character(Family family, int rank);
FormalCharacter conatural_character(Family family, int rank);

// Character of the tensor product. mul is OpenMP-parallel over the terms of
// the left operand; mul_serial is the reference kernel.
FormalCharacter mul(const FormalCharacter& a, const FormalCharacter& b);
FormalCharacter mul_serial(const FormalCharacter& a, const FormalCharacter& b);

FormalCharacter scale(const FormalCharacter& c, const BigInt& k);
FormalCharacter add(const FormalCharacter& a, const FormalCharacter& b);

// Unique nonnegative combination of irreducible characters equal to c,
// sorted by decreasing highest weight. Throws NotACharacter otherwise.
Decomposition decompose(const FormalCharacter& c);

// Decomposition of V_a (x) V_b by the Brauer-Klimyk rule: the weights of the
// smaller factor shifted by the other highest weight, reflected into the
// dominant chamber. Agrees with decompose(mul(...)) without forming the product.
Decomposition tensor_decompose(const RankedWeight& a, const RankedWeight& b);

// Restriction to the rank-r subalgebra of the chain: drops the trailing
// coordinates of every exponent.
FormalCharacter restrict_character(const FormalCharacter& c, int rank);

}  // namespace stabrep
