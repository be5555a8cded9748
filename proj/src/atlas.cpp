#include "sdrd/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "sdrd/solver.hpp"

namespace sdrd {

const std::array<std::string, 8>& slot_names()
{
    static const std::array<std::string, 8> names = {"l_t", "l_ti", "l_b", "l_bi", "r_ti", "r_t", "r_bi", "r_b"};
    return names;
}

Constellation from_matrix(const BoundaryMatrix& m)
{
    return constellation_from_values({m.top[0], m.top[1], m.bottom[0], m.bottom[1], m.top[2], m.top[3],
                                      m.bottom[2], m.bottom[3]});
}

BoundaryMatrix to_matrix(const Constellation& c)
{
    auto v = [&c](Slot s) { return value(c[s]); };
    return {{v(LT), v(LTI), v(RTI), v(RT)}, {v(LB), v(LBI), v(RBI), v(RB)}};
}

std::string format(const Constellation& c)
{
    std::string out = "<";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(value(c[i]));
    }
    return out + ">";
}

Constellation constellation_from_values(const std::array<int, 8>& values)
{
    Constellation c{};
    for (std::size_t i = 0; i < 8; ++i)
        c[i] = to_label(values[i]);
    return c;
}

std::array<Constellation, 4> orbit(const Constellation& c)
{
    const Constellation rows = {c[LB], c[LBI], c[LT], c[LTI], c[RBI], c[RB], c[RTI], c[RT]};
    const Constellation mirror = {c[RT], c[RTI], c[RB], c[RBI], c[LTI], c[LT], c[LBI], c[LB]};
    const Constellation point = {c[RB], c[RBI], c[RT], c[RTI], c[LBI], c[LB], c[LTI], c[LT]};
    return {c, rows, mirror, point};
}

Constellation canonical_constellation(const Constellation& c)
{
    auto images = orbit(c);
    return *std::min_element(images.begin(), images.end());
}

bool passes_side_filter(const Constellation& c)
{
    auto minus = [&c](std::initializer_list<Slot> slots) {
        int n = 0;
        for (Slot s : slots)
            n += c[s] == Label::MinusOne;
        return n;
    };
    return minus({LT, LTI, LB, LBI}) <= 2 && minus({RTI, RT, RBI, RB}) <= 2;
}

namespace {

template <class F>
void for_each_constellation(F&& f)
{
    Constellation c{};
    for (int code = 0; code < 1 << 16; ++code) {
        for (std::size_t i = 0; i < 8; ++i)
            c[i] = kLabels[static_cast<std::size_t>((code >> (2 * (7 - i))) & 3)];
        f(c);
    }
}

} // namespace

int count_orbits()
{
    int n = 0;
    for_each_constellation([&n](const Constellation& c) { n += canonical_constellation(c) == c; });
    return n;
}

std::vector<Constellation> enumerate_constellations()
{
    std::vector<Constellation> out;
    for_each_constellation([&out](const Constellation& c) {
        if (canonical_constellation(c) == c && passes_side_filter(c))
            out.push_back(c);
    });
    return out; // enumeration order is already lexicographic
}

namespace {

struct BlockTemplate {
    SolveSpec spec;
    std::array<int, 8> slot_ids{};

    explicit BlockTemplate(BlockVariant variant) : spec(build_block_graph(variant))
    {
        const Graph& g = spec.graph;
        for (std::size_t i = 0; i < 8; ++i)
            slot_ids[i] = *g.id(slot_names()[i]);
        for (Slot s : {LT, LB, RT, RB})
            spec.exempt_vertex(slot_ids[s]);
        std::vector<int> center;
        const int width = g.order() / 2;
        for (int col = 2; col < width - 2; ++col) {
            center.push_back(col);
            center.push_back(width + col);
        }
        spec.objective_only(center);
    }

    std::optional<int> solve(const Constellation& c) const
    {
        SolveSpec s = spec;
        for (std::size_t i = 0; i < 8; ++i)
            s.fix(slot_ids[i], c[i]);
        return strip_dp_value(s, StripTopology::Open);
    }
};

const BlockTemplate& block_template(BlockVariant variant)
{
    static const BlockTemplate full(BlockVariant::Full);
    static const BlockTemplate reduced(BlockVariant::Reduced);
    return variant == BlockVariant::Full ? full : reduced;
}

BlockRecord solve_record(const Constellation& c)
{
    return {c, solve_block(c, BlockVariant::Full), solve_block(c, BlockVariant::Reduced)};
}

} // namespace

std::optional<int> solve_block(const Constellation& c, BlockVariant variant)
{
    return block_template(variant).solve(c);
}

std::optional<int> BlockRecord::delta() const
{
    if (!minweight_C || !minweight_Cprime)
        return std::nullopt;
    return *minweight_C - *minweight_Cprime;
}

Atlas::Atlas(std::vector<BlockRecord> records) : records_(std::move(records))
{
    std::sort(records_.begin(), records_.end(), [](const BlockRecord& a, const BlockRecord& b) { return a.d < b.d; });
}

const BlockRecord* Atlas::find(const Constellation& c) const
{
    const Constellation key = canonical_constellation(c);
    auto it = std::lower_bound(records_.begin(), records_.end(), key,
                               [](const BlockRecord& r, const Constellation& k) { return r.d < k; });
    if (it == records_.end() || it->d != key)
        return nullptr;
    return &*it;
}

Atlas build_atlas(int jobs)
{
    const std::vector<Constellation> cs = enumerate_constellations();
    std::vector<BlockRecord> records(cs.size());
    if (jobs <= 0)
        jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    block_template(BlockVariant::Full);
    block_template(BlockVariant::Reduced);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cs.size(); i = next++)
            records[i] = solve_record(cs[i]);
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    return Atlas(std::move(records));
}

BlockRecord lookup_or_solve(const Constellation& c, const Atlas& atlas)
{
    if (const BlockRecord* r = atlas.find(c))
        return *r;
    return solve_record(canonical_constellation(c));
}

bool quality_transferring(const Constellation& c, const Atlas& atlas)
{
    auto d = lookup_or_solve(c, atlas).delta();
    return d && *d >= 4;
}

std::vector<BlockRecord> query_atlas(const Atlas& atlas, const RecordPredicate& pred)
{
    std::vector<BlockRecord> out;
    for (const BlockRecord& r : atlas.records())
        if (pred(r))
            out.push_back(r);
    return out;
}

Pattern parse_pattern(const std::string& text)
{
    Pattern p{};
    std::stringstream ss(text);
    std::string tok;
    std::size_t i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= 8)
            throw std::invalid_argument("pattern has more than 8 entries");
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t") + 1);
        if (tok == "*") {
            p[i++] = std::nullopt;
            continue;
        }
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad pattern entry '" + tok + "'");
        p[i++] = to_label(v);
    }
    if (i != 8)
        throw std::invalid_argument("pattern needs exactly 8 entries");
    return p;
}

RecordPredicate orbit_matches(const Pattern& p)
{
    return [p](const BlockRecord& r) {
        for (const Constellation& c : orbit(r.d)) {
            bool ok = true;
            for (std::size_t i = 0; i < 8 && ok; ++i)
                ok = !p[i] || *p[i] == c[i];
            if (ok)
                return true;
        }
        return false;
    };
}

RecordPredicate delta_at_least(int t)
{
    return [t](const BlockRecord& r) { return r.delta() && *r.delta() >= t; };
}

RecordPredicate delta_equals(int t)
{
    return [t](const BlockRecord& r) { return r.delta() && *r.delta() == t; };
}

RecordPredicate minweight_equals(int w)
{
    return [w](const BlockRecord& r) { return r.minweight_C && *r.minweight_C == w; };
}

Pattern right_pinned_pattern()
{
    Pattern p{};
    p[RTI] = Label::Three;
    p[RBI] = Label::Three;
    p[RT] = Label::MinusOne;
    p[RB] = Label::MinusOne;
    return p;
}

const std::vector<BoundaryClaim>& boundary_claims()
{
    static const std::vector<BoundaryClaim> claims = {
        {{{-1, -1, -1, 1}, {1, 3, -1, 2}}, 10},  {{{-1, -1, -1, 1}, {2, 3, -1, 2}}, 10},
        {{{-1, -1, -1, 1}, {3, 3, -1, 2}}, 10},  {{{-1, 1, -1, 1}, {2, -1, -1, 2}}, 13},
        {{{-1, 1, -1, 2}, {2, -1, -1, 1}}, 13},  {{{1, -1, -1, 1}, {1, 3, -1, 2}}, 10},
    };
    return claims;
}

FamilyCheck check_shifted_family(const Atlas& atlas, const std::function<bool(Label, Label)>& inner)
{
    FamilyCheck out;
    for (Label ti : kLabels)
        for (Label bi : kLabels) {
            if (!inner(ti, bi))
                continue;
            for (Label lti : kLabels)
                for (Label lbi : kLabels)
                    for (Label rt : kLabels)
                        for (Label rb : kLabels) {
                            Constellation c{};
                            c[LT] = Label::MinusOne;
                            c[LB] = Label::MinusOne;
                            c[LTI] = lti;
                            c[LBI] = lbi;
                            c[RTI] = ti;
                            c[RBI] = bi;
                            c[RT] = rt;
                            c[RB] = rb;
                            ++out.completions;
                            if (!passes_side_filter(c))
                                continue;
                            const BlockRecord* r = atlas.find(c);
                            if (!r || !r->minweight_C)
                                continue;
                            ++out.realizable;
                            if (r->delta() && *r->delta() >= 4)
                                ++out.quality;
                            else
                                out.failures.push_back(c);
                        }
        }
    return out;
}

FamilyCheck check_family_one_three(const Atlas& atlas)
{
    return check_shifted_family(atlas, [](Label t, Label b) {
        return (t == Label::One && b == Label::Three) || (t == Label::Three && b == Label::One);
    });
}

FamilyCheck check_family_inner_sum(const Atlas& atlas)
{
    return check_shifted_family(atlas, [](Label t, Label b) { return value(t) + value(b) >= 3; });
}

std::vector<BlockRecord> subcase_records(const Atlas& atlas)
{
    return query_atlas(atlas, [](const BlockRecord& r) {
        if (!r.minweight_C || *r.minweight_C < 10)
            return false;
        if (r.delta() && *r.delta() >= 4)
            return false;
        int boundary = 0;
        for (Label l : r.d)
            boundary += value(l);
        if (*r.minweight_C + boundary != 16)
            return false;
        auto strong = [&r](std::initializer_list<Slot> slots) {
            return std::any_of(slots.begin(), slots.end(), [&r](Slot s) { return value(r.d[s]) >= 2; });
        };
        return strong({LT, LTI, LB, LBI}) && strong({RTI, RT, RBI, RB});
    });
}

namespace {

std::string weight_field(const std::optional<int>& w)
{
    return w ? std::to_string(*w) : "inf";
}

} // namespace

std::string atlas_to_csv(const Atlas& atlas)
{
    std::string out = "d0,d1,d2,d3,d4,d5,d6,d7,minweight_C,minweight_Cprime,delta\n";
    for (const BlockRecord& r : atlas.records()) {
        for (Label l : r.d)
            out += std::to_string(value(l)) + ',';
        out += weight_field(r.minweight_C) + ',' + weight_field(r.minweight_Cprime) + ',';
        auto d = r.delta();
        out += (d ? std::to_string(*d) : std::string("n/a")) + '\n';
    }
    return out;
}

Atlas atlas_from_csv(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int line_no = 1;
    if (!std::getline(in, line) || line.rfind("d0,d1,d2,d3,d4,d5,d6,d7,minweight_C,minweight_Cprime,delta", 0) != 0)
        throw std::invalid_argument("atlas CSV header missing");
    std::vector<BlockRecord> records;
    auto fail = [&line_no](const std::string& why) {
        throw std::invalid_argument("atlas line " + std::to_string(line_no) + ": " + why);
    };
    auto parse_int = [&fail](const std::string& tok) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            fail("bad integer '" + tok + "'");
        return v;
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ','))
            f.push_back(tok);
        if (f.size() != 11)
            fail("expected 11 fields");
        BlockRecord r;
        try {
            for (std::size_t i = 0; i < 8; ++i)
                r.d[i] = to_label(parse_int(f[i]));
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
        auto weight_of = [&](const std::string& s) -> std::optional<int> {
            if (s == "inf")
                return std::nullopt;
            return parse_int(s);
        };
        r.minweight_C = weight_of(f[8]);
        r.minweight_Cprime = weight_of(f[9]);
        auto d = r.delta();
        if ((d ? std::to_string(*d) : std::string("n/a")) != f[10])
            fail("delta column disagrees with the weights");
        if (canonical_constellation(r.d) != r.d)
            fail("constellation is not canonical");
        if (!records.empty() && !(records.back().d < r.d))
            fail("rows must be sorted and unique");
        records.push_back(r);
    }
    return Atlas(std::move(records));
}

void export_atlas(const Atlas& atlas, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << atlas_to_csv(atlas);
    if (!out)
        throw std::runtime_error("write to '" + path + "' failed");
}

Atlas import_atlas(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return atlas_from_csv(ss.str());
}

} // namespace sdrd
