#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sdrd/graph.hpp"
#include "sdrd/labeling.hpp"

namespace sdrd {

/// Boundary labels of a block graph in the order
/// l_t, l_ti, l_b, l_bi, r_ti, r_t, r_bi, r_b.
using Constellation = std::array<Label, 8>;

enum Slot : int { LT = 0, LTI = 1, LB = 2, LBI = 3, RTI = 4, RT = 5, RBI = 6, RB = 7 };

/// Vertex names of the eight slots, in constellation order.
const std::array<std::string, 8>& slot_names();

/// Row-major 2x4 view: top row l_t, l_ti, r_ti, r_t; bottom row l_b, l_bi, r_bi, r_b.
struct BoundaryMatrix {
    std::array<int, 4> top;
    std::array<int, 4> bottom;
};
Constellation from_matrix(const BoundaryMatrix& m);
BoundaryMatrix to_matrix(const Constellation& c);

std::string format(const Constellation& c);
Constellation constellation_from_values(const std::array<int, 8>& values);

/// Images under identity, row swap, left-right mirror, and point reflection.
std::array<Constellation, 4> orbit(const Constellation& c);

/// Lexicographic minimum of the orbit (label order -1 < 1 < 2 < 3).
Constellation canonical_constellation(const Constellation& c);

/// At most two -1 labels among the left four slots and among the right four.
bool passes_side_filter(const Constellation& c);

/// Sorted canonical constellations passing the side filter.
std::vector<Constellation> enumerate_constellations();
/// Number of orbits before the side filter.
int count_orbits();

/// Minimum center weight with the boundary pinned to c and the four corners
/// exempt; nullopt when no completion exists.
std::optional<int> solve_block(const Constellation& c, BlockVariant variant);

struct BlockRecord {
    Constellation d{};
    std::optional<int> minweight_C;
    std::optional<int> minweight_Cprime;

    std::optional<int> delta() const;
    bool operator==(const BlockRecord&) const = default;
};

class Atlas {
public:
    Atlas() = default;
    explicit Atlas(std::vector<BlockRecord> records);

    const std::vector<BlockRecord>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }

    /// Record of canonical_constellation(c), or nullptr if filtered out.
    const BlockRecord* find(const Constellation& c) const;

    bool operator==(const Atlas&) const = default;

private:
    std::vector<BlockRecord> records_; // sorted by d
};

/// jobs <= 0 uses the hardware concurrency.
Atlas build_atlas(int jobs = 0);

/// Canonical record has both weights and delta >= 4. A constellation outside
/// the atlas is solved directly.
bool quality_transferring(const Constellation& c, const Atlas& atlas);

/// Record for c from the atlas, or solved on the spot when filtered out.
BlockRecord lookup_or_solve(const Constellation& c, const Atlas& atlas);

using RecordPredicate = std::function<bool(const BlockRecord&)>;
std::vector<BlockRecord> query_atlas(const Atlas& atlas, const RecordPredicate& pred);

/// Partial boundary; nullopt slots are wildcards.
using Pattern = std::array<std::optional<Label>, 8>;
/// Parses eight comma-separated tokens, '*' for a wildcard.
Pattern parse_pattern(const std::string& text);

/// Some element of the record's orbit matches the pattern.
RecordPredicate orbit_matches(const Pattern& p);
RecordPredicate delta_at_least(int t);
RecordPredicate delta_equals(int t);
RecordPredicate minweight_equals(int w);

/// r_ti = r_bi = 3, r_t = r_b = -1.
Pattern right_pinned_pattern();

struct BoundaryClaim {
    BoundaryMatrix matrix;
    int center_lower_bound;
};
/// The six boundary matrices with their center lower bounds.
const std::vector<BoundaryClaim>& boundary_claims();

struct FamilyCheck {
    int completions = 0;      // all assignments to the free cells
    int realizable = 0;       // passing the side filter with a feasible full block
    int quality = 0;          // realizable and quality-transferring
    std::vector<Constellation> failures;

    bool holds() const { return failures.empty() && realizable > 0; }
};

/// Shifted-block families: left column both -1, the column before the right
/// end fixed by `inner`, remaining four boundary cells free.
FamilyCheck check_shifted_family(const Atlas& atlas, const std::function<bool(Label, Label)>& inner);
FamilyCheck check_family_one_three(const Atlas& atlas);
FamilyCheck check_family_inner_sum(const Atlas& atlas);

/// Canonical records that are not quality-transferring, have feasible
/// minweight_C >= 10 with minweight_C plus boundary weight equal to 16, and
/// have a label >= 2 on both sides.
std::vector<BlockRecord> subcase_records(const Atlas& atlas);

std::string atlas_to_csv(const Atlas& atlas);
Atlas atlas_from_csv(const std::string& text);
void export_atlas(const Atlas& atlas, const std::string& path);
Atlas import_atlas(const std::string& path);

} // namespace sdrd
