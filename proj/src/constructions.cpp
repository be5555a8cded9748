#include "sdrd/constructions.hpp"

#include <stdexcept>

namespace sdrd {

namespace {

void require(bool ok, const std::string& msg)
{
    if (!ok)
        throw std::invalid_argument(msg);
}

Labeling checked(const Graph& g, std::vector<int> values, const char* scheme)
{
    Labeling lab = Labeling::from_values(values);
    if (!is_valid(g, lab.labels(), 1, {}))
        throw std::logic_error(std::string(scheme) + " produced an invalid labeling on " + describe(g.family()));
    return lab;
}

// Builder over the u/v (or a/b/c/d) blocks of a family layout; indices wrap.
struct Blocks {
    int m;
    std::vector<int> values;

    Blocks(int m_, int blocks, int fill) : m(m_), values(static_cast<std::size_t>(m_ * blocks), fill) {}

    void set(int block, int i, int label)
    {
        i = ((i % m) + m) % m;
        values[static_cast<std::size_t>(block * m + i)] = label;
    }
};

constexpr int U = 0;
constexpr int V = 1;

} // namespace

Labeling petersen_even_odd(int m, int k)
{
    require(m >= 4 && m % 2 == 0, "petersen_even_odd needs even m >= 4");
    require(k % 2 == 1 && k >= 1 && k <= m - 1, "petersen_even_odd needs odd k in [1, m-1]");
    Blocks b(m, 2, 2);
    for (int i = 0; i < m; i += 2) {
        b.set(U, i, -1);
        b.set(V, i, -1);
    }
    return checked(build_petersen(m, k), b.values, "petersen_even_odd");
}

int predicted_petersen_m3(int m)
{
    return m % 2 == 0 ? m : m + 1;
}

Labeling petersen_m3(int m)
{
    require(m >= 8, "petersen_m3 needs m >= 8");
    if (m % 2 == 0)
        return petersen_even_odd(m, 3);
    Blocks b(m, 2, -1);
    if (m % 4 == 1) {
        for (int i = 0; i <= (m - 9) / 4; ++i) {
            b.set(U, 4 * i, 2);
            b.set(U, 4 * i + 1, 2);
            b.set(V, 4 * i + 2, 2);
            b.set(V, 4 * i + 3, 2);
        }
        for (int i : {m - 5, m - 4, m - 2})
            b.set(U, i, 2);
        b.set(V, m - 2, 2);
        b.set(V, m - 3, 1);
        b.set(V, m - 1, 1);
    } else {
        for (int i = 0; 4 * i <= m - 15; ++i) {
            b.set(U, 4 * i + 2, 2);
            b.set(U, 4 * i + 3, 2);
            b.set(V, 4 * i, 2);
            b.set(V, 4 * i + 1, 2);
        }
        for (int i : {m - 9, m - 7, m - 5, m - 1})
            b.set(U, i, 2);
        for (int i : {m - 11, m - 10, m - 5, m - 4})
            b.set(V, i, 2);
        b.set(V, m - 3, 3);
        b.set(U, m - 2, 1);
        b.set(V, m - 9, 1);
        b.set(V, m - 7, 1);
    }
    return checked(build_petersen(m, 3), b.values, "petersen_m3");
}

int predicted_petersen_m1(int m)
{
    if (m % 2 == 0)
        return m;
    return m % 4 == 3 ? m + 1 : m + 2;
}

Labeling petersen_m1(int m)
{
    require(m >= 3, "petersen_m1 needs m >= 3");
    if (m % 2 == 0)
        return petersen_even_odd(m, 1);
    Blocks b(m, 2, -1);
    if (m % 4 == 1) {
        // Alternating (2,2)/(-1,-1) columns, then a three-column closing block.
        for (int i = 0; i <= m - 5; i += 2) {
            b.set(U, i, 2);
            b.set(V, i, 2);
        }
        b.set(U, m - 3, 2);
        b.set(V, m - 3, 2);
        b.set(U, m - 2, 2);
        b.set(V, m - 1, 1);
    } else {
        for (int t = 0; 4 * t + 3 <= m - 4; ++t) {
            b.set(U, 4 * t + 2, 2);
            b.set(U, 4 * t + 3, 2);
            b.set(V, 4 * t, 2);
            b.set(V, 4 * t + 1, 2);
        }
        b.set(V, m - 3, 2);
        b.set(U, m - 2, 1);
        b.set(V, m - 2, 1);
        b.set(U, m - 1, 2);
    }
    return checked(build_petersen(m, 1), b.values, "petersen_m1");
}

Labeling flower_snark(int m)
{
    require(m >= 5, "flower_snark needs m >= 5");
    constexpr int A = 0, B = 1, C = 2, D = 3;
    Blocks s(m, 4, -1);
    switch (m % 3) {
    case 0:
        s.set(A, m - 1, 1);
        s.set(C, m - 1, 1);
        for (int i = 0; 3 * i <= m - 3; ++i) {
            s.set(B, 3 * i, 2);
            s.set(B, 3 * i + 1, 2);
            s.set(C, 3 * i + 1, 2);
            s.set(D, 3 * i, 2);
            s.set(D, 3 * i + 2, 2);
        }
        for (int i = 0; 3 * i <= m - 6; ++i)
            s.set(C, 3 * i + 2, 2);
        break;
    case 1:
        s.set(A, m - 1, 1);
        s.set(B, m - 1, 1);
        for (int i = 0; 3 * i <= m - 4; ++i) {
            s.set(B, 3 * i, 2);
            s.set(B, 3 * i + 2, 2);
            s.set(C, 3 * i, 2);
            s.set(C, 3 * i + 1, 2);
            s.set(D, 3 * i + 1, 2);
            s.set(D, 3 * i + 2, 2);
        }
        s.set(C, m - 1, 2);
        break;
    default:
        s.set(A, m - 2, 1);
        s.set(D, m - 2, 1);
        for (int i = 0; 3 * i <= m - 5; ++i) {
            s.set(B, 3 * i, 2);
            s.set(B, 3 * i + 1, 2);
            s.set(C, 3 * i + 1, 2);
            s.set(C, 3 * i + 2, 2);
            s.set(D, 3 * i, 2);
            s.set(D, 3 * i + 2, 2);
        }
        s.set(B, m - 2, 2);
        s.set(C, m - 1, 2);
        s.set(D, m - 1, 2);
        break;
    }
    return checked(build_flower_snark(m), s.values, "flower_snark");
}

int predicted_grid_2xm(int m)
{
    return m % 4 == 1 ? m + 1 : m;
}

Labeling grid_2xm(int m)
{
    require(m >= 5, "grid_2xm needs m >= 5");
    // Columns as (top v_i, bottom u_i).
    using Col = std::pair<int, int>;
    std::vector<Col> cols;
    auto append = [&cols](std::initializer_list<Col> block) { cols.insert(cols.end(), block); };
    const std::initializer_list<Col> period = {{3, -1}, {-1, 1}, {-1, 2}, {2, -1}};
    switch (m % 4) {
    case 0:
    case 1:
        if (m % 4 == 1)
            append({{3, -1}});
        for (int t = 0; t < (m - m % 4 - 4) / 4; ++t)
            append(period);
        append({{2, -1}, {-1, 2}, {-1, 1}, {3, -1}});
        break;
    case 2:
        for (int t = 0; t < (m - 2) / 4; ++t)
            append(period);
        append({{1, -1}, {-1, 3}});
        break;
    default:
        append({{-1, -1}, {3, 3}, {-1, -1}, {2, 1}});
        for (int t = 0; t < (m - 7) / 4; ++t)
            append({{-1, -1}, {2, 3}, {-1, -1}, {2, 1}});
        append({{-1, -1}, {3, 3}, {-1, -1}});
        break;
    }
    std::vector<int> values(static_cast<std::size_t>(2 * m));
    for (int i = 0; i < m; ++i) {
        values[static_cast<std::size_t>(i)] = cols[static_cast<std::size_t>(i)].second;
        values[static_cast<std::size_t>(m + i)] = cols[static_cast<std::size_t>(i)].first;
    }
    return checked(build_grid(2, m), values, "grid_2xm");
}

const std::vector<std::string>& scheme_families()
{
    static const std::vector<std::string> names = {"petersen-m1", "petersen-m3", "petersen-even", "snark", "grid2xm"};
    return names;
}

Scheme make_scheme(std::string_view family, int m, int k)
{
    if (family == "petersen-m1")
        return {build_petersen(m, 1), petersen_m1(m), predicted_petersen_m1(m)};
    if (family == "petersen-m3")
        return {build_petersen(m, 3), petersen_m3(m), predicted_petersen_m3(m)};
    if (family == "petersen-even")
        return {build_petersen(m, k), petersen_even_odd(m, k), m};
    if (family == "snark")
        return {build_flower_snark(m), flower_snark(m), predicted_flower_snark(m)};
    if (family == "grid2xm")
        return {build_grid(2, m), grid_2xm(m), predicted_grid_2xm(m)};
    throw std::invalid_argument("unknown construction family '" + std::string(family) + "'");
}

} // namespace sdrd
