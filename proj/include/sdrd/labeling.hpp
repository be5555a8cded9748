#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdrd/graph.hpp"

namespace sdrd {

/// The four admissible labels. There is no zero.
enum class Label : std::int8_t { MinusOne = -1, One = 1, Two = 2, Three = 3 };

inline constexpr std::array<Label, 4> kLabels = {Label::MinusOne, Label::One, Label::Two, Label::Three};

constexpr int value(Label l) { return static_cast<int>(l); }

/// Position of a label in the order -1 < 1 < 2 < 3.
constexpr int rank(Label l)
{
    switch (l) {
    case Label::MinusOne:
        return 0;
    case Label::One:
        return 1;
    case Label::Two:
        return 2;
    case Label::Three:
        return 3;
    }
    return 0;
}

/// Throws std::invalid_argument for anything outside {-1, 1, 2, 3}.
Label to_label(int v);

/// Vertex set as a membership mask of length n.
using VertexMask = std::vector<bool>;

VertexMask mask_of(int n, std::span<const int> vertices);

class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::vector<Label> labels) : labels_(std::move(labels)) {}
    /// Throws on any value outside {-1, 1, 2, 3}.
    static Labeling from_values(std::span<const int> values);
    static Labeling uniform(int n, Label l) { return Labeling(std::vector<Label>(static_cast<std::size_t>(n), l)); }

    int size() const { return static_cast<int>(labels_.size()); }
    Label operator[](int v) const { return labels_[static_cast<std::size_t>(v)]; }
    int value_at(int v) const { return value((*this)[v]); }
    void set(int v, Label l) { labels_.at(static_cast<std::size_t>(v)) = l; }
    const std::vector<Label>& labels() const { return labels_; }
    std::vector<int> values() const;

    friend bool operator==(const Labeling&, const Labeling&) = default;
    /// Lexicographic by vertex id with -1 < 1 < 2 < 3.
    friend bool operator<(const Labeling& a, const Labeling& b);

private:
    std::vector<Label> labels_;
};

/// Sum of labels over `subset`; throws std::out_of_range for bad indices.
int weight(const Labeling& lab, std::span<const int> subset);
int weight(const Labeling& lab);

struct PreimageSets {
    std::vector<int> minus_one;
    std::vector<int> one;
    std::vector<int> two;
    std::vector<int> three;
};
PreimageSets preimage_sets(const Labeling& lab);

enum class Condition : std::uint8_t {
    MinusOneDefended, // a -1 vertex has a 3-neighbor or two 2-neighbors
    OneDefended,      // a 1 vertex has a neighbor labeled 2 or 3
    ClosedSum,        // closed-neighborhood sum >= k
    TwoNonNegative,   // cubic form: two vertices of N[v] are not labeled -1
};

std::string_view condition_name(Condition c);

struct VertexCheck {
    bool minus_one_defended = true;
    bool one_defended = true;
    bool closed_ok = true;
    int closed_sum = 0;
    bool exempt = false;
    bool passed() const { return exempt || (minus_one_defended && one_defended && closed_ok); }
};

struct Violation {
    int vertex;
    Condition condition;
};

struct ValidationReport {
    int k = 1;
    VertexMask exempt;
    std::vector<VertexCheck> vertices;
    std::vector<Violation> violations;
    bool valid = false;
    int weight = 0;
};

/// Checks every non-exempt vertex; exempt vertices still count as neighbors
/// and defenders. Throws std::invalid_argument on length mismatch or k < 1.
ValidationReport validate(const Graph& g, const Labeling& lab, int k = 1, const VertexMask& exempt = {});

/// Same verdict as validate(g, lab, 1) on cubic graphs, using the sign-only
/// form of the closed-neighborhood condition. Throws if g is not cubic.
ValidationReport validate_cubic_equiv(const Graph& g, const Labeling& lab);

/// Allocation-free verdict used by the enumeration oracles.
bool is_valid(const Graph& g, std::span<const Label> labels, int k, const VertexMask& exempt);

/// CSV with header "vertex,label", one row per vertex in id order.
std::string to_csv(const Labeling& lab);
Labeling labeling_from_csv(std::string_view text);

} // namespace sdrd
