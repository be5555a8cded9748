#include "sdrd/labeling.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace sdrd {

Label to_label(int v)
{
    switch (v) {
    case -1:
        return Label::MinusOne;
    case 1:
        return Label::One;
    case 2:
        return Label::Two;
    case 3:
        return Label::Three;
    default:
        throw std::invalid_argument("label must be one of -1, 1, 2, 3 (got " + std::to_string(v) + ")");
    }
}

VertexMask mask_of(int n, std::span<const int> vertices)
{
    VertexMask mask(static_cast<std::size_t>(n), false);
    for (int v : vertices) {
        if (v < 0 || v >= n)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
        mask[static_cast<std::size_t>(v)] = true;
    }
    return mask;
}

Labeling Labeling::from_values(std::span<const int> values)
{
    std::vector<Label> labels;
    labels.reserve(values.size());
    for (int v : values)
        labels.push_back(to_label(v));
    return Labeling(std::move(labels));
}

std::vector<int> Labeling::values() const
{
    std::vector<int> out;
    out.reserve(labels_.size());
    for (Label l : labels_)
        out.push_back(value(l));
    return out;
}

bool operator<(const Labeling& a, const Labeling& b)
{
    return std::lexicographical_compare(a.labels_.begin(), a.labels_.end(), b.labels_.begin(), b.labels_.end(),
                                        [](Label x, Label y) { return rank(x) < rank(y); });
}

int weight(const Labeling& lab, std::span<const int> subset)
{
    int total = 0;
    for (int v : subset) {
        if (v < 0 || v >= lab.size())
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
        total += lab.value_at(v);
    }
    return total;
}

int weight(const Labeling& lab)
{
    int total = 0;
    for (Label l : lab.labels())
        total += value(l);
    return total;
}

PreimageSets preimage_sets(const Labeling& lab)
{
    PreimageSets sets;
    for (int v = 0; v < lab.size(); ++v) {
        switch (lab[v]) {
        case Label::MinusOne:
            sets.minus_one.push_back(v);
            break;
        case Label::One:
            sets.one.push_back(v);
            break;
        case Label::Two:
            sets.two.push_back(v);
            break;
        case Label::Three:
            sets.three.push_back(v);
            break;
        }
    }
    return sets;
}

std::string_view condition_name(Condition c)
{
    switch (c) {
    case Condition::MinusOneDefended:
        return "minus-one-defended";
    case Condition::OneDefended:
        return "one-defended";
    case Condition::ClosedSum:
        return "closed-sum";
    case Condition::TwoNonNegative:
        return "two-non-negative";
    }
    return "?";
}

namespace {

struct Tally {
    int sum = 0;
    int twos = 0;
    int threes = 0;
    int non_negative = 0; // in N[v]
};

Tally tally(const Graph& g, std::span<const Label> labels, int v)
{
    Tally t;
    Label self = labels[static_cast<std::size_t>(v)];
    t.sum = value(self);
    t.non_negative = self != Label::MinusOne;
    for (int w : g.neighbors(v)) {
        Label l = labels[static_cast<std::size_t>(w)];
        t.sum += value(l);
        t.twos += l == Label::Two;
        t.threes += l == Label::Three;
        t.non_negative += l != Label::MinusOne;
    }
    return t;
}

void check_shapes(const Graph& g, const Labeling& lab, const VertexMask& exempt)
{
    if (lab.size() != g.order())
        throw std::invalid_argument("labeling has " + std::to_string(lab.size()) + " entries, graph has " +
                                    std::to_string(g.order()) + " vertices");
    if (!exempt.empty() && exempt.size() != static_cast<std::size_t>(g.order()))
        throw std::invalid_argument("exempt mask length mismatch");
}

bool is_exempt(const VertexMask& exempt, int v)
{
    return !exempt.empty() && exempt[static_cast<std::size_t>(v)];
}

} // namespace

ValidationReport validate(const Graph& g, const Labeling& lab, int k, const VertexMask& exempt)
{
    check_shapes(g, lab, exempt);
    if (k < 1)
        throw std::invalid_argument("threshold k must be >= 1");

    ValidationReport report;
    report.k = k;
    report.exempt = exempt.empty() ? VertexMask(static_cast<std::size_t>(g.order()), false) : exempt;
    report.weight = weight(lab);
    report.vertices.resize(static_cast<std::size_t>(g.order()));

    std::span<const Label> labels(lab.labels());
    for (int v = 0; v < g.order(); ++v) {
        VertexCheck& c = report.vertices[static_cast<std::size_t>(v)];
        Tally t = tally(g, labels, v);
        c.closed_sum = t.sum;
        c.exempt = is_exempt(exempt, v);
        if (lab[v] == Label::MinusOne)
            c.minus_one_defended = t.threes > 0 || t.twos >= 2;
        if (lab[v] == Label::One)
            c.one_defended = t.twos + t.threes > 0;
        c.closed_ok = t.sum >= k;
        if (c.exempt)
            continue;
        if (!c.minus_one_defended)
            report.violations.push_back({v, Condition::MinusOneDefended});
        if (!c.one_defended)
            report.violations.push_back({v, Condition::OneDefended});
        if (!c.closed_ok)
            report.violations.push_back({v, Condition::ClosedSum});
    }
    report.valid = report.violations.empty();
    return report;
}

ValidationReport validate_cubic_equiv(const Graph& g, const Labeling& lab)
{
    check_shapes(g, lab, {});
    if (!g.is_cubic())
        throw std::invalid_argument("graph is not cubic");

    ValidationReport report;
    report.k = 1;
    report.exempt = VertexMask(static_cast<std::size_t>(g.order()), false);
    report.weight = weight(lab);
    report.vertices.resize(static_cast<std::size_t>(g.order()));

    std::span<const Label> labels(lab.labels());
    for (int v = 0; v < g.order(); ++v) {
        VertexCheck& c = report.vertices[static_cast<std::size_t>(v)];
        Tally t = tally(g, labels, v);
        c.closed_sum = t.sum;
        if (lab[v] == Label::MinusOne)
            c.minus_one_defended = t.threes > 0 || t.twos >= 2;
        if (lab[v] == Label::One)
            c.one_defended = t.twos + t.threes > 0;
        c.closed_ok = t.non_negative >= 2;
        if (!c.minus_one_defended)
            report.violations.push_back({v, Condition::MinusOneDefended});
        if (!c.one_defended)
            report.violations.push_back({v, Condition::OneDefended});
        if (!c.closed_ok)
            report.violations.push_back({v, Condition::TwoNonNegative});
    }
    report.valid = report.violations.empty();
    return report;
}

bool is_valid(const Graph& g, std::span<const Label> labels, int k, const VertexMask& exempt)
{
    for (int v = 0; v < g.order(); ++v) {
        if (is_exempt(exempt, v))
            continue;
        Tally t = tally(g, labels, v);
        if (t.sum < k)
            return false;
        Label self = labels[static_cast<std::size_t>(v)];
        if (self == Label::MinusOne && t.threes == 0 && t.twos < 2)
            return false;
        if (self == Label::One && t.twos + t.threes == 0)
            return false;
    }
    return true;
}

std::string to_csv(const Labeling& lab)
{
    std::ostringstream os;
    os << "vertex,label\n";
    for (int v = 0; v < lab.size(); ++v)
        os << v << ',' << lab.value_at(v) << '\n';
    return os.str();
}

Labeling labeling_from_csv(std::string_view text)
{
    std::vector<int> values;
    std::size_t pos = 0;
    int line_no = 0;
    bool header_seen = false;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty())
            continue;
        if (!header_seen) {
            if (line != "vertex,label")
                throw std::invalid_argument("labeling CSV must start with header 'vertex,label'");
            header_seen = true;
            continue;
        }
        auto comma = line.find(',');
        if (comma == std::string_view::npos)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'vertex,label'");
        auto parse = [&](std::string_view tok) {
            int x = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
            if (ec != std::errc() || p != tok.data() + tok.size())
                throw std::invalid_argument("line " + std::to_string(line_no) + ": bad integer '" +
                                            std::string(tok) + "'");
            return x;
        };
        int vertex = parse(line.substr(0, comma));
        int label = parse(line.substr(comma + 1));
        if (vertex != static_cast<int>(values.size()))
            throw std::invalid_argument("line " + std::to_string(line_no) + ": vertices must appear in id order");
        values.push_back(label);
    }
    if (!header_seen)
        throw std::invalid_argument("empty labeling CSV");
    return Labeling::from_values(values);
}

} // namespace sdrd
