#include "stabrep/weights.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "stabrep/error.hpp"

namespace stabrep {

std::string to_string(Family f) {
    switch (f) {
    case Family::SL: return "sl";
    case Family::O: return "o";
    case Family::SP: return "sp";
    }
    return "?";
}

Family parse_family(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "sl") return Family::SL;
    if (lower == "o") return Family::O;
    if (lower == "sp") return Family::SP;
    throw DomainError("unknown family '" + std::string(text) + "' (expected sl, o or sp)");
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw DomainError("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw DomainError("partition parts must be weakly decreasing");
    }
}

std::size_t Partition::size() const noexcept {
    return static_cast<std::size_t>(std::accumulate(parts_.begin(), parts_.end(), 0));
}

bool Partition::contained_in(const Partition& other) const noexcept {
    if (length() > other.length()) return false;
    for (std::size_t i = 0; i < length(); ++i)
        if (parts_[i] > other.parts_[i]) return false;
    return true;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

std::strong_ordering desc_lex(const Partition& a, const Partition& b) {
    // decreasing lexicographic: larger sequence sorts first
    auto c = a.parts() <=> b.parts();
    if (c == std::strong_ordering::less) return std::strong_ordering::greater;
    if (c == std::strong_ordering::greater) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

}  // namespace

std::vector<Partition> partitions_of(std::size_t n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(static_cast<int>(n), static_cast<int>(n), cur, out);
    return out;
}

ThetaWeight ThetaWeight::sl(Partition plus, Partition minus) {
    return ThetaWeight(Family::SL, std::move(plus), std::move(minus));
}

ThetaWeight ThetaWeight::single(Family family, Partition part) {
    if (family == Family::SL)
        throw DomainError("an sl label needs a pair of partitions");
    return ThetaWeight(family, std::move(part), Partition{});
}

ThetaWeight ThetaWeight::trivial(Family family) {
    return ThetaWeight(family, Partition{}, Partition{});
}

std::strong_ordering operator<=>(const ThetaWeight& a, const ThetaWeight& b) {
    if (auto c = a.family_ <=> b.family_; c != 0) return c;
    if (auto c = norm(a) <=> norm(b); c != 0) return c;
    if (auto c = desc_lex(a.plus_, b.plus_); c != 0) return c;
    return desc_lex(a.minus_, b.minus_);
}

std::size_t norm(const ThetaWeight& w) { return w.plus().size() + w.minus().size(); }

ThetaWeight star(const ThetaWeight& w) {
    if (w.family() != Family::SL) return w;
    return ThetaWeight::sl(w.minus(), w.plus());
}

std::vector<ThetaWeight> enumerate_theta(Family family, std::size_t k) {
    std::vector<std::vector<Partition>> by_size;
    for (std::size_t n = 0; n <= k; ++n) by_size.push_back(partitions_of(n));

    std::vector<ThetaWeight> out;
    for (std::size_t n = 0; n <= k; ++n) {
        if (family == Family::SL) {
            for (std::size_t a = 0; a <= n; ++a)
                for (const auto& p : by_size[a])
                    for (const auto& m : by_size[n - a]) out.push_back(ThetaWeight::sl(p, m));
        } else {
            for (const auto& p : by_size[n]) out.push_back(ThetaWeight::single(family, p));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Partition parse_partition(std::string_view text) {
    text = trim(text);
    if (text.empty() || text == "-" || text == "0") return Partition{};
    std::vector<int> parts;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto tok = trim(text.substr(0, comma));
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
            throw DomainError("malformed partition '" + std::string(text) + "'");
        parts.push_back(v);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
        if (text.empty()) throw DomainError("trailing comma in partition");
    }
    return Partition(std::move(parts));
}

ThetaWeight parse_theta(Family family, std::string_view text) {
    text = trim(text);
    auto bar = text.find('|');
    if (family == Family::SL) {
        if (bar == std::string_view::npos)
            throw DomainError("sl weight '" + std::string(text) + "' needs the form plus|minus");
        return ThetaWeight::sl(parse_partition(text.substr(0, bar)), parse_partition(text.substr(bar + 1)));
    }
    if (bar != std::string_view::npos)
        throw DomainError(to_string(family) + " weight '" + std::string(text) + "' takes a single partition");
    return ThetaWeight::single(family, parse_partition(text));
}

std::string format_partition(const Partition& p) {
    if (p.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.parts()[i]);
    }
    return s;
}

std::string format_theta(const ThetaWeight& w) {
    if (w.family() == Family::SL) return format_partition(w.plus()) + "|" + format_partition(w.minus());
    return format_partition(w.part());
}

}  // namespace stabrep
