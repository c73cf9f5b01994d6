#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "stabrep/bigint.hpp"

namespace stabrep {

// Symbolic cardinal: a finite number or a beth number. Beth(0) is the
// cardinality of the integers, Beth(k+1) that of the power set of a
// Beth(k)-set.
class Cardinality {
public:
    static Cardinality finite(BigInt n);
    static Cardinality beth(unsigned k) { return Cardinality(true, BigInt(k)); }

    bool is_finite() const noexcept { return !infinite_; }
    // Finite value, or the beth index.
    const BigInt& value() const noexcept { return value_; }

    friend bool operator==(const Cardinality&, const Cardinality&) = default;
    friend std::strong_ordering operator<=>(const Cardinality& a, const Cardinality& b);

private:
    Cardinality(bool infinite, BigInt v) : infinite_(infinite), value_(std::move(v)) {}

    bool infinite_;
    BigInt value_;
};

Cardinality card_add(const Cardinality& a, const Cardinality& b);
Cardinality card_mul(const Cardinality& a, const Cardinality& b);

// "finite:n" / "beth:k"
std::string format_cardinality(const Cardinality& c);
Cardinality parse_cardinality(std::string_view text);

}  // namespace stabrep
