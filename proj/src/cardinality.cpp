#include "stabrep/cardinality.hpp"

#include <algorithm>
#include <cctype>

#include "stabrep/error.hpp"

namespace stabrep {

Cardinality Cardinality::finite(BigInt n) {
    if (n < 0) throw DomainError("cardinality cannot be negative");
    return Cardinality(false, std::move(n));
}

std::strong_ordering operator<=>(const Cardinality& a, const Cardinality& b) {
    if (a.infinite_ != b.infinite_) return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Cardinality card_add(const Cardinality& a, const Cardinality& b) {
    if (a.is_finite() && b.is_finite()) return Cardinality::finite(a.value() + b.value());
    return std::max(a, b);
}

Cardinality card_mul(const Cardinality& a, const Cardinality& b) {
    const Cardinality zero = Cardinality::finite(0);
    if (a == zero || b == zero) return zero;
    if (a.is_finite() && b.is_finite()) return Cardinality::finite(a.value() * b.value());
    return std::max(a, b);
}

std::string format_cardinality(const Cardinality& c) {
    return (c.is_finite() ? "finite:" : "beth:") + c.value().str();
}

Cardinality parse_cardinality(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw DomainError("cardinality '" + std::string(text) + "' must be finite:n or beth:k");
    std::string tag(text.substr(0, colon));
    std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    std::string digits(text.substr(colon + 1));
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); }))
        throw DomainError("cardinality '" + std::string(text) + "' needs a nonnegative decimal value");
    BigInt v(digits);
    if (tag == "finite") return Cardinality::finite(v);
    if (tag == "beth") {
        if (v > 1000000) throw DomainError("beth index too large");
        return Cardinality::beth(static_cast<unsigned>(v));
    }
    throw DomainError("cardinality '" + std::string(text) + "' must be finite:n or beth:k");
}

}  // namespace stabrep
