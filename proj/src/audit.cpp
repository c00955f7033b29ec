/* vim: set sw=4 sts=4 et : */

#include <loose3/audit.hpp>
#include <loose3/patterns.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

using namespace loose3;

namespace
{
    auto meets(VertexMask e, VertexMask s) -> bool
    {
        return (e & s) != 0;
    }

    auto inside(VertexMask e, VertexMask s) -> bool
    {
        return (e & ~s) == 0;
    }

    auto fmt(double v) -> std::string
    {
        std::ostringstream s;
        s << v;
        return s.str();
    }
}

auto loose3::decompose(const Hypergraph3 & h) -> std::optional<Decomposition>
{
    if (contains(h, PatternKind::P) || contains(h, PatternKind::C) || ! contains(h, PatternKind::P2K3))
        return std::nullopt;

    auto es = h.edges();
    auto masks = h.edge_masks();
    std::optional<std::pair<int, int>> pick;
    for (std::size_t j = 0 ; j < es.size() && ! pick ; ++j)
        for (std::size_t i = 0 ; i < j && ! pick ; ++i) {
            if (std::popcount(masks[i] & masks[j]) != 1)
                continue;
            VertexMask un = masks[i] | masks[j];
            for (auto m : masks)
                if (! meets(m, un)) {
                    pick = std::pair{ int(i), int(j) };
                    break;
                }
        }
    if (! pick)
        return std::nullopt;

    Decomposition d;
    d.host = h;
    d.q = { es[pick->first], es[pick->second] };
    VertexMask qa = masks[pick->first], qb = masks[pick->second];
    d.x = std::countr_zero(qa & qb);
    d.u = qa | qb;
    VertexMask all = (VertexMask{1} << h.n()) - 1;
    VertexMask w = all & ~d.u;

    for (auto m : masks)
        if (inside(m, w))
            d.w1 |= m;
    d.w0 = w & ~d.w1;

    VertexMask ux = d.u & ~(VertexMask{1} << d.x);
    for (std::size_t i = 0 ; i < es.size() ; ++i) {
        auto m = masks[i];
        if (inside(m, d.u))
            d.h_u.push_back(es[i]);
        else if (inside(m, w))
            d.h_w.push_back(es[i]);
        if (meets(m, d.u) && meets(m, d.w0))
            d.h0.push_back(es[i]);
        if (meets(m, d.u) && meets(m, d.w1))
            d.h1.push_back(es[i]);

        if (meets(m, d.u) && meets(m, w)) {
            int k = std::popcount(m & ux);
            if (k == 0 && (m & d.u) != (VertexMask{1} << d.x))
                d.stray.push_back(es[i]);
            else if (k > 2)
                d.stray.push_back(es[i]);
            else {
                d.f[k].push_back(es[i]);
                if (meets(m, d.w0))
                    d.fi[0][k].push_back(es[i]);
                if (meets(m, d.w1))
                    d.fi[1][k].push_back(es[i]);
            }
        }
    }
    return d;
}

auto loose3::nonseparable_pairs(const Hypergraph3 & h, VertexMask vertices) -> int
{
    auto masks = h.edge_masks();
    int count = 0;
    for (int a = 0 ; a < h.n() ; ++a)
        for (int b = a + 1 ; b < h.n() ; ++b) {
            if (! ((vertices >> a) & 1) || ! ((vertices >> b) & 1))
                continue;
            VertexMask pair = (VertexMask{1} << a) | (VertexMask{1} << b);
            bool together = std::all_of(masks.begin(), masks.end(), [&] (VertexMask m) {
                    int c = std::popcount(m & pair);
                    return c == 0 || c == 2;
                    });
            if (together)
                ++count;
        }
    return count;
}

auto loose3::check_inequalities(const Decomposition & d) -> std::vector<InequalityCheck>
{
    std::vector<InequalityCheck> out;
    auto add = [&] (std::string name, double lhs, double rhs, bool applicable) {
        out.push_back(InequalityCheck{ std::move(name), lhs, rhs, applicable, ! applicable || lhs <= rhs });
    };

    const auto & h = d.host;
    auto masks = h.edge_masks();
    int z = d.z(), s = d.s();

    // partition: every edge in exactly one part, and no edge meets U, W0 and W1 together
    {
        long total = long(d.h_u.size() + d.h_w.size() + d.h0.size() + d.h1.size());
        long triple = 0;
        for (auto m : masks)
            if (meets(m, d.u) && meets(m, d.w0) && meets(m, d.w1))
                ++triple;
        // lhs counts the defect: overlaps plus uncovered edges
        add("HHH", double(std::abs(total - h.size()) + triple), 0, true);
    }

    add("F11-empty", double(d.fi[1][1].size()), 0, true);

    {
        long bad = long(d.stray.size());
        VertexMask qa = d.q[0].mask(), qb = d.q[1].mask();
        VertexMask xm = VertexMask{1} << d.x;
        for (auto & e : d.f[2]) {
            VertexMask cut = e.mask() & d.u;
            if (! inside(cut, qa) && ! inside(cut, qb))
                ++bad;
        }
        for (auto & e : d.f[1]) {
            VertexMask cut = e.mask() & d.u;
            if (! (cut & xm))
                ++bad;
        }
        add("F0-apex", double(bad), 0, true);
    }

    add("r4", double(d.h1.size()), double(2 * z - 3), z >= 3);

    {
        double bound = 0;
        bool app = z >= 3;
        if (z >= 3 && z <= 5)
            bound = double(binomial(z, 3) + 2 * z - 3);
        else if (z >= 6 && z <= 7)
            bound = double(binomial(z - 1, 2) + 2 * z - 3);
        else if (z >= 8)
            bound = (z - 1) * (z - 1) / 2.0 + 2;
        add("e5", double(d.h_w.size() + d.h1.size()), bound, app);
    }

    {
        VertexMask uw0 = d.u | d.w0;
        long inner = 0;
        for (auto m : masks)
            if (inside(m, uw0))
                ++inner;
        double bound = 0;
        if (s == 1)
            bound = 8;
        else if (s >= 2 && s <= 4)
            bound = 3 * s + 7;
        else if (s >= 5)
            bound = double(binomial(s + 2, 2) + 1);
        add("e4", double(inner), bound, ! d.fi[1][2].empty() && s >= 1);
    }

    {
        long both = 0;
        int max1 = 0, max2 = 0;
        VertexMask w = d.w0 | d.w1;
        for (int v = 0 ; v < h.n() ; ++v) {
            if (! ((w >> v) & 1))
                continue;
            std::array<int, 3> c{};
            for (int k = 0 ; k < 3 ; ++k)
                for (auto & e : d.f[k])
                    if (e.contains(v))
                        ++c[k];
            if (c[0] && c[2])
                ++both;
            max1 = std::max(max1, c[1]);
            max2 = std::max(max2, c[2]);
        }
        add("FORF", double(both), 0, true);
        add("4and2-F1", max1, 4, true);
        add("4and2-F2", max2, 2, true);
    }

    {
        Hypergraph3 hw(h.n(), d.h_w);
        bool star = in_star(hw);
        int pairs = star ? nonseparable_pairs(hw, d.w1) : 0;
        add("nonseparable", pairs, (z - 1) / 2, star && z >= 4);
    }

    return out;
}

auto loose3::sample_pc_free(int n, std::uint64_t seed, int count, SampleShape shape) -> std::vector<Hypergraph3>
{
    if (count <= 0)
        return {};
    if (n < 8 || n > max_vertices)
        throw GraphError("sample_pc_free needs 8 <= n <= 16");

    std::mt19937_64 rng(seed);
    std::vector<Hypergraph3> out;
    out.reserve(count);
    std::vector<int> slots(slot_count(n));
    std::iota(slots.begin(), slots.end(), 0);

    for (int t = 0 ; t < count ; ++t) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);

        std::vector<VertexMask> masks;
        auto plant = [&] (int a, int b, int c) {
            masks.push_back(Edge::make(perm[a], perm[b], perm[c]).mask());
        };
        plant(0, 1, 2);
        plant(0, 3, 4);
        plant(5, 6, 7);

        VertexMask q = 0;
        for (int i = 0 ; i < 5 ; ++i)
            q |= VertexMask{1} << perm[i];
        int centre = perm[5];
        double keep = std::uniform_real_distribution<double>(0.25, 1.0)(rng);
        std::bernoulli_distribution coin(keep);

        std::shuffle(slots.begin(), slots.end(), rng);
        for (int slot : slots) {
            VertexMask m = triple_unrank(slot).mask();
            if (std::find(masks.begin(), masks.end(), m) != masks.end())
                continue;
            if (shape == SampleShape::StarInside && ! meets(m, q) && ! ((m >> centre) & 1))
                continue;
            if (! coin(rng))
                continue;
            if (creates_pattern(masks, m, PatternKind::P) || creates_pattern(masks, m, PatternKind::C))
                continue;
            masks.push_back(m);
        }

        Hypergraph3 g(n);
        for (auto m : masks)
            g.insert(Edge::from_mask(m));
        out.push_back(std::move(g));
    }
    return out;
}

auto loose3::run_audit(int n, int samples, std::uint64_t seed, SampleShape shape) -> AuditSummary
{
    AuditSummary sum;
    sum.n = n;
    sum.samples = samples;
    sum.seed = seed;
    for (auto & g : sample_pc_free(n, seed, samples, shape)) {
        auto d = decompose(g);
        if (! d) {
            sum.violations.push_back("decompose: no decomposition\n" + to_text(g));
            continue;
        }
        for (auto & c : check_inequalities(*d)) {
            auto & t = sum.tallies[c.name];
            if (! c.applicable)
                ++t.skipped;
            else if (c.holds)
                ++t.passed;
            else {
                ++t.failed;
                sum.violations.push_back(c.name + ": " + fmt(c.lhs) + " > " + fmt(c.rhs) + "\n" + to_text(g));
            }
        }
    }
    return sum;
}
