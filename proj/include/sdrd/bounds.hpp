#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdrd/graph.hpp"
#include "sdrd/labeling.hpp"

namespace sdrd {

/// n/2 for n = 0 mod 4, n/2 + 1 for n = 2 mod 4. Requires even n >= 4.
int lower_bound_cubic(int n);

/// Per-vertex charge in quarter units (4 * g(v)).
struct ChargeVector {
    std::vector<int> quarter_charges;

    int total() const;
    int min() const;
};

/// Discharging on a cubic graph with a valid labeling: every vertex starts at
/// 4 f(v) quarters; vertices labeled 1, 2, 3 then send 1, 3, 5 quarters to each
/// (-1)-neighbor, one label class after the other. Conservation is asserted
/// after each class. Throws std::invalid_argument on a non-cubic graph or an
/// invalid labeling.
ChargeVector discharge(const Graph& g, const Labeling& lab);

/// True iff every final charge is >= 2 quarters and the total is 4 * weight.
bool verify_discharge_certificate(const Graph& g, const Labeling& lab);

/// S is alpha-total dominating: every vertex of S has a neighbor in S, every
/// other vertex v has at least ceil(alpha * deg(v)) neighbors in S.
bool is_alpha_total_dominating(const Graph& g, const std::vector<int>& s, int alpha_num = 2, int alpha_den = 3);

/// Minimum-cardinality alpha-total dominating set (sorted ids), by branch and
/// bound over in/out decisions. Throws SizeLimitExceeded above the solver cap.
std::vector<int> alpha_total_dom_min(const Graph& g, int alpha_num = 2, int alpha_den = 3);

/// Label 2 on S, -1 elsewhere. S must be 2/3-total dominating on a cubic graph.
Labeling sd2rdf_from_set(const Graph& g, const std::vector<int>& s);

struct Rational {
    long num = 0;
    long den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

struct BoundReport {
    int n = 0;
    int k = 1;
    std::optional<int> lower_cubic; // n/2 or n/2+1 for the SDRD number itself
    int lower_k = 0;                // ceil(kn/4)
    Rational upper_k;               // 13n/8
    Rational upper_alpha;           // 5n/4, strict

    std::string to_json() const;
};

BoundReport bound_report(const Graph& g, int k);

} // namespace sdrd
