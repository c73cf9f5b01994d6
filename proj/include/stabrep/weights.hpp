#pragma once

// Partitions and the label set of simple tensor modules of sl(inf), o(inf)
// and sp(inf).
//
// An sl label is a pair of Young diagrams (plus, minus); an o or sp label is
// a single diagram. The norm of a label is its total box count.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace stabrep {

enum class Family { SL, O, SP };

std::string to_string(Family f);
Family parse_family(std::string_view text);

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    std::size_t size() const noexcept;
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    // Diagram containment: every row of *this fits inside the matching row of other.
    bool contained_in(const Partition& other) const noexcept;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// All partitions of n, in decreasing lexicographic order ((n) first, (1^n) last).
std::vector<Partition> partitions_of(std::size_t n);

class ThetaWeight {
public:
    // The trivial sl label.
    ThetaWeight() = default;

    static ThetaWeight sl(Partition plus, Partition minus);
    static ThetaWeight single(Family family, Partition part);
    static ThetaWeight trivial(Family family);

    Family family() const noexcept { return family_; }
    const Partition& plus() const noexcept { return plus_; }
    const Partition& minus() const noexcept { return minus_; }
    // The only diagram of an o/sp label (same storage as plus()).
    const Partition& part() const noexcept { return plus_; }

    bool is_trivial() const noexcept { return plus_.empty() && minus_.empty(); }

    friend bool operator==(const ThetaWeight&, const ThetaWeight&) = default;

    // Canonical order: family, then norm, then plus and minus in decreasing
    // lexicographic order of their part sequences.
    friend std::strong_ordering operator<=>(const ThetaWeight& a, const ThetaWeight& b);

private:
    ThetaWeight(Family f, Partition plus, Partition minus)
        : family_(f), plus_(std::move(plus)), minus_(std::move(minus)) {}

    Family family_ = Family::SL;
    Partition plus_;
    Partition minus_;
};

std::size_t norm(const ThetaWeight& w);

// Label of the unique simple submodule of the dual of the simple module.
ThetaWeight star(const ThetaWeight& w);

// Every label of the family with norm <= k, canonically ordered.
std::vector<ThetaWeight> enumerate_theta(Family family, std::size_t k);

// Textual syntax: sl "2,1|1" (a side is "-" when empty), o/sp "2,1" ("-" for
// the trivial label). "0" and the empty string are accepted for an empty side.
ThetaWeight parse_theta(Family family, std::string_view text);
std::string format_theta(const ThetaWeight& w);
std::string format_partition(const Partition& p);
Partition parse_partition(std::string_view text);

}  // namespace stabrep
