#include "sdrd/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace sdrd {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string indexed(std::string_view role, int i)
{
    std::string s(role);
    s += '_';
    s += std::to_string(i);
    return s;
}

} // namespace

std::string describe(const FamilySpec& family)
{
    return std::visit(Overloaded{
                          [](const GeneralizedPetersen& p) {
                              return "P(" + std::to_string(p.m) + "," + std::to_string(p.k) + ")";
                          },
                          [](const Grid& g) {
                              return "G(" + std::to_string(g.rows) + "," + std::to_string(g.cols) + ")";
                          },
                          [](const FlowerSnark& s) { return "J(" + std::to_string(s.m) + ")"; },
                          [](const BlockG&) { return std::string("block-full"); },
                          [](const BlockGPrime&) { return std::string("block-reduced"); },
                          [](const Raw&) { return std::string("raw"); },
                      },
                      family);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges, FamilySpec family,
             std::vector<std::string> names)
    : family_(family)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(a) + " " +
                                        std::to_string(b));
        if (a == b)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        adj_[static_cast<std::size_t>(a)].push_back(b);
        adj_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("duplicate edge");
    }
    edge_count_ = edges.size();

    if (names.empty()) {
        names.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            names.push_back(indexed("x", i));
    }
    if (names.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("vertex name count does not match order");
    names_ = std::move(names);
    std::vector<std::string> sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("vertex names are not unique");
}

bool Graph::adjacent(int a, int b) const
{
    const auto& nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

bool Graph::is_regular(int d) const
{
    return std::all_of(adj_.begin(), adj_.end(),
                       [d](const std::vector<int>& nb) { return static_cast<int>(nb.size()) == d; });
}

int Graph::max_degree() const
{
    std::size_t d = 0;
    for (const auto& nb : adj_)
        d = std::max(d, nb.size());
    return static_cast<int>(d);
}

bool Graph::connected() const
{
    if (adj_.empty())
        return true;
    std::vector<char> seen(adj_.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj_[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == adj_.size();
}

std::optional<int> Graph::id(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return static_cast<int>(i);
    return std::nullopt;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int a = 0; a < order(); ++a)
        for (int b : adj_[static_cast<std::size_t>(a)])
            if (a < b)
                out.emplace_back(a, b);
    return out;
}

Graph build_petersen(int m, int k)
{
    if (m < 3)
        throw std::invalid_argument("generalized Petersen graph needs m >= 3");
    if (k < 1 || k > m - 1)
        throw std::invalid_argument("shift k must lie in [1, m-1]");
    if (2 * k == m)
        throw std::invalid_argument("shift k = m/2 collapses the inner edges into a matching");

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        edges.emplace_back(i, (i + 1) % m);
        edges.emplace_back(i, m + i);
    }
    // Inner cycles: each edge v_i v_{i+k} appears once when walking i over Z_m.
    for (int i = 0; i < m; ++i)
        edges.emplace_back(m + i, m + (i + k) % m);

    std::vector<std::string> names;
    for (int i = 0; i < m; ++i)
        names.push_back(indexed("u", i));
    for (int i = 0; i < m; ++i)
        names.push_back(indexed("v", i));
    return Graph(2 * m, edges, GeneralizedPetersen{m, k}, std::move(names));
}

Graph build_grid(int rows, int cols)
{
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("grid dimensions must be positive");
    std::vector<std::pair<int, int>> edges;
    auto at = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols)
                edges.emplace_back(at(r, c), at(r, c + 1));
            if (r + 1 < rows)
                edges.emplace_back(at(r, c), at(r + 1, c));
        }
    std::vector<std::string> names;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (rows == 2)
                names.push_back(indexed(r == 0 ? "u" : "v", c));
            else
                names.push_back("g_" + std::to_string(r) + "_" + std::to_string(c));
        }
    return Graph(rows * cols, edges, Grid{rows, cols}, std::move(names));
}

Graph build_flower_snark(int m)
{
    if (m < 5)
        throw std::invalid_argument("flower snark needs m >= 5");
    auto a = [](int i) { return i; };
    auto b = [m](int i) { return m + (i % m); };
    auto c = [m](int i) { return 2 * m + (i % m); };
    auto d = [m](int i) { return 3 * m + (i % m); };

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        edges.emplace_back(a(i), b(i));
        edges.emplace_back(a(i), c(i));
        edges.emplace_back(a(i), d(i));
        edges.emplace_back(b(i), b(i + 1));
    }
    for (int i = 0; i + 1 < m; ++i) {
        edges.emplace_back(c(i), c(i + 1));
        edges.emplace_back(d(i), d(i + 1));
    }
    edges.emplace_back(c(m - 1), d(0));
    edges.emplace_back(c(0), d(m - 1));

    std::vector<std::string> names;
    for (const char* role : {"a", "b", "c", "d"})
        for (int i = 0; i < m; ++i)
            names.push_back(indexed(role, i));
    return Graph(4 * m, edges, FlowerSnark{m}, std::move(names));
}

Graph build_block_graph(BlockVariant variant)
{
    const int center = variant == BlockVariant::Full ? 8 : 4;
    const int width = center + 4;
    Graph ladder = build_grid(2, width);

    std::vector<std::string> names(static_cast<std::size_t>(2 * width));
    auto set = [&](int row, int col, std::string name) {
        names[static_cast<std::size_t>(row * width + col)] = std::move(name);
    };
    set(0, 0, "l_b");
    set(0, 1, "l_bi");
    set(1, 0, "l_t");
    set(1, 1, "l_ti");
    set(0, width - 2, "r_bi");
    set(0, width - 1, "r_b");
    set(1, width - 2, "r_ti");
    set(1, width - 1, "r_t");
    for (int i = 0; i < center; ++i) {
        set(0, i + 2, indexed("u", i));
        set(1, i + 2, indexed("v", i));
    }
    FamilySpec family = variant == BlockVariant::Full ? FamilySpec{BlockG{}} : FamilySpec{BlockGPrime{}};
    return Graph(2 * width, ladder.edges(), family, std::move(names));
}

Graph build_complete(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            edges.emplace_back(a, b);
    return Graph(n, edges);
}

Graph build_random_cubic(int n, std::uint64_t seed, bool connected)
{
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("cubic graphs need even n >= 4");
    std::mt19937_64 rng(seed);
    std::vector<int> points(static_cast<std::size_t>(3 * n));
    for (int attempt = 0; attempt < 100000; ++attempt) {
        for (int i = 0; i < 3 * n; ++i)
            points[static_cast<std::size_t>(i)] = i / 3;
        std::shuffle(points.begin(), points.end(), rng);
        std::set<std::pair<int, int>> edges;
        bool simple = true;
        for (std::size_t i = 0; i < points.size() && simple; i += 2) {
            int a = std::min(points[i], points[i + 1]);
            int b = std::max(points[i], points[i + 1]);
            simple = a != b && edges.emplace(a, b).second;
        }
        if (!simple)
            continue;
        Graph g(n, std::vector<std::pair<int, int>>(edges.begin(), edges.end()));
        if (connected && !g.connected())
            continue;
        return g;
    }
    throw std::runtime_error("random cubic sampling did not converge");
}

namespace {

int parse_int(std::string_view token, int line_no)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw std::invalid_argument("line " + std::to_string(line_no) + ": expected integer, got '" +
                                    std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

} // namespace

Graph parse_edge_list(std::string_view text)
{
    std::vector<std::vector<std::string_view>> rows;
    std::vector<int> line_numbers;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        ++line_no;
        auto tokens = split_ws(text.substr(pos, end - pos));
        if (!tokens.empty()) {
            rows.push_back(std::move(tokens));
            line_numbers.push_back(line_no);
        }
        pos = end + 1;
    }
    if (rows.empty())
        throw std::invalid_argument("empty edge list");
    if (rows[0].size() != 2)
        throw std::invalid_argument("line " + std::to_string(line_numbers[0]) + ": header must be 'n m'");
    const int n = parse_int(rows[0][0], line_numbers[0]);
    const int m = parse_int(rows[0][1], line_numbers[0]);
    if (n < 0 || m < 0)
        throw std::invalid_argument("header values must be non-negative");
    if (rows.size() - 1 != static_cast<std::size_t>(m))
        throw std::invalid_argument("header announces " + std::to_string(m) + " edges, found " +
                                    std::to_string(rows.size() - 1));

    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> seen;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const int ln = line_numbers[r];
        if (rows[r].size() != 2)
            throw std::invalid_argument("line " + std::to_string(ln) + ": expected 'a b'");
        int a = parse_int(rows[r][0], ln);
        int b = parse_int(rows[r][1], ln);
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("line " + std::to_string(ln) + ": vertex index out of range");
        if (a == b)
            throw std::invalid_argument("line " + std::to_string(ln) + ": self-loop");
        edges.emplace_back(a, b);
        seen.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("duplicate edge");
    return Graph(n, edges);
}

std::string serialize_edge_list(const Graph& g)
{
    std::ostringstream os;
    os << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [a, b] : g.edges())
        os << a << ' ' << b << '\n';
    return os.str();
}

} // namespace sdrd
