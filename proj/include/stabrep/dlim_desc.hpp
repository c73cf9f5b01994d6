#pragma once

// Descriptors of direct systems M_1 -> M_2 -> ... and a window-based
// semi-decision of whether the algebraic dual of the limit stays integrable:
// that happens exactly when only finitely many simple g_i-types occur in M for
// each i. The built-in families carry closed-form type counts that certify the
// window computation.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "stabrep/char_oracle.hpp"
#include "stabrep/weights.hpp"

namespace stabrep {

// Eventually constant sequence over {1, 2}: prefix, then the tail value forever.
struct SpinorSequence {
    std::vector<int> prefix;
    int tail = 1;

    int at(std::size_t i) const { return i < prefix.size() ? prefix[i] : tail; }
};

// "prefix:tail", e.g. "1221:2"; an empty prefix may be written "-" or left out.
SpinorSequence parse_spinor_sequence(std::string_view text);
std::string format_spinor_sequence(const SpinorSequence& t);

// Two spinor direct systems are isomorphic iff their sequences agree from some
// index on.
bool spinor_equiv(const SpinorSequence& t, const SpinorSequence& u);

// One of the two half-spin modules S^1_i, S^2_i of o(2i).
struct SpinorLabel {
    int which = 1;
    int rank = 1;

    friend bool operator==(const SpinorLabel&, const SpinorLabel&) = default;
    friend auto operator<=>(const SpinorLabel&, const SpinorLabel&) = default;
};

using TypeLabel = std::variant<RankedWeight, SpinorLabel>;
std::string format_type(const TypeLabel& t);

struct Stage {
    int rank = 1;
    Decomposition module;
};

class DirectSystemDescriptor {
public:
    enum class Kind { Stable, SymPower, Spinor, Explicit };

    // M_i = V_lambda^i.
    static DirectSystemDescriptor stable(ThetaWeight lambda);
    // M_i = S^i(V_i) over gl(i).
    static DirectSystemDescriptor sym_power();
    // M_i = S^{t_i}_i over o(2i).
    static DirectSystemDescriptor spinor(SpinorSequence t);
    // Finitely many stages with strictly increasing ranks.
    static DirectSystemDescriptor explicit_stages(Family family, std::vector<Stage> stages);

    Kind kind() const noexcept { return kind_; }
    Family family() const noexcept { return family_; }
    const ThetaWeight& weight() const noexcept { return weight_; }
    const SpinorSequence& sequence() const noexcept { return sequence_; }
    const std::vector<Stage>& stages() const noexcept { return stages_; }

private:
    DirectSystemDescriptor(Kind k, Family f) : kind_(k), family_(f) {}

    Kind kind_;
    Family family_;
    ThetaWeight weight_;
    SpinorSequence sequence_;
    std::vector<Stage> stages_;
};

// Distinct simple g_i-types of M_j restricted to g_i (i < j), sorted.
std::vector<TypeLabel> types_at(const DirectSystemDescriptor& desc, int i, int j);

// Closed-form number of types for the built-in families, where it applies:
// Stable(lambda) once j >= i + max(1, |lambda|), SymPower and Spinor always.
std::optional<std::size_t> closed_form_type_count(const DirectSystemDescriptor& desc, int i, int j);

enum class Verdict { BoundedTypes, GrowingTypes, Inconclusive };
std::string to_string(Verdict v);

struct ProbePair {
    int i = 1;
    int j = 2;

    friend bool operator==(const ProbePair&, const ProbePair&) = default;
    friend auto operator<=>(const ProbePair&, const ProbePair&) = default;
};

// All pairs a <= i < j <= b.
std::vector<ProbePair> window_pairs(int a, int b);

struct ProbeCount {
    ProbePair probe;
    std::size_t types = 0;
};

struct VerdictReport {
    Verdict verdict = Verdict::Inconclusive;
    bool certified = false;           // closed form agrees on every counted probe
    std::vector<ProbeCount> counts;   // probes that entered the classification
};

VerdictReport dual_integrable_verdict(const DirectSystemDescriptor& desc, std::span<const ProbePair> window);

// restrict_mult(lambda, i, lambda, j) == 1 for every pair i < j of the ranks.
bool mult_one_check(const ThetaWeight& lambda, std::span<const int> ranks);

}  // namespace stabrep
