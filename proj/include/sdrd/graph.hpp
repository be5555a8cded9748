#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace sdrd {

struct GeneralizedPetersen {
    int m;
    int k;
};
struct Grid {
    int rows;
    int cols;
};
struct FlowerSnark {
    int m;
};
/// 2x12 block: boundary columns L and R around the eight-column center C.
struct BlockG {};
/// 2x8 block: the same boundary around the four-column center C'.
struct BlockGPrime {};
struct Raw {};

using FamilySpec = std::variant<GeneralizedPetersen, Grid, FlowerSnark, BlockG, BlockGPrime, Raw>;

std::string describe(const FamilySpec& family);

/// Undirected simple graph with sorted adjacency lists and stable vertex names.
///
/// Vertex id layouts are fixed per family:
///   GeneralizedPetersen(m,k): u_i -> i, v_i -> m+i
///   Grid(2,m):                u_i -> i (row 0), v_i -> m+i (row 1); other row
///                             counts use g_r_c -> r*cols + c
///   FlowerSnark(m):           a_i -> i, b_i -> m+i, c_i -> 2m+i, d_i -> 3m+i
///   BlockG / BlockGPrime:     2xW ladder, bottom (u) row ids 0..W-1, top (v)
///                             row ids W..2W-1; columns 0,1 are l_b/l_bi
///                             (bottom) and l_t/l_ti (top), the last two
///                             columns are r_bi/r_b and r_ti/r_t, the center
///                             columns are u_i/v_i.
///   Raw:                      x_i -> i
class Graph {
public:
    Graph() = default;
    /// Builds from an edge list; throws std::invalid_argument on self-loops,
    /// duplicate edges or out-of-range endpoints.
    Graph(int n, const std::vector<std::pair<int, int>>& edges, FamilySpec family = Raw{},
          std::vector<std::string> names = {});

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(int a, int b) const;
    bool is_regular(int d) const;
    bool is_cubic() const { return order() > 0 && is_regular(3); }
    int max_degree() const;
    bool connected() const;

    const FamilySpec& family() const { return family_; }

    const std::string& name(int v) const { return names_.at(static_cast<std::size_t>(v)); }
    std::optional<int> id(std::string_view name) const;

    /// Edges with a < b in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<int>> adj_;
    std::size_t edge_count_ = 0;
    FamilySpec family_ = Raw{};
    std::vector<std::string> names_;
};

Graph build_petersen(int m, int k);
Graph build_grid(int rows, int cols);
Graph build_flower_snark(int m);

enum class BlockVariant { Full, Reduced };
Graph build_block_graph(BlockVariant variant);

/// Complete graph K_n (used as a small cubic test instance for n = 4).
Graph build_complete(int n);

/// Uniform-ish random simple cubic graph by the pairing model with restarts.
/// Deterministic for a given seed. Requires even n >= 4; `connected` rejects
/// disconnected samples.
Graph build_random_cubic(int n, std::uint64_t seed, bool connected = true);

/// "n m" header followed by m lines "a b".
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

} // namespace sdrd
