/* vim: set sw=4 sts=4 et : */

#include <loose3/patterns.hpp>
#include <loose3/canon.hpp>

#include <algorithm>
#include <array>
#include <bit>

namespace loose3
{
    namespace
    {
        auto ones(VertexMask m) -> int
        {
            return std::popcount(m);
        }

        using Witness = std::vector<VertexMask>;

        auto find_path(std::span<const VertexMask> es) -> std::optional<Witness>
        {
            std::array<std::vector<VertexMask>, max_vertices> bucket;
            for (auto mid : es) {
                for (auto & b : bucket)
                    b.clear();
                for (auto f : es)
                    if (ones(f & mid) == 1)
                        bucket[std::countr_zero(f & mid)].push_back(f);
                for (auto a = mid ; a ; a &= a - 1) {
                    int va = std::countr_zero(a);
                    for (auto b = a & (a - 1) ; b ; b &= b - 1) {
                        int vb = std::countr_zero(b);
                        for (auto f : bucket[va])
                            for (auto g : bucket[vb])
                                if ((f & g) == 0)
                                    return Witness{ f, mid, g };
                    }
                }
            }
            return std::nullopt;
        }

        auto find_triangle(std::span<const VertexMask> es) -> std::optional<Witness>
        {
            auto m = es.size();
            for (std::size_t i = 0 ; i < m ; ++i)
                for (std::size_t j = i + 1 ; j < m ; ++j) {
                    if (ones(es[i] & es[j]) != 1)
                        continue;
                    for (std::size_t k = j + 1 ; k < m ; ++k)
                        if (ones(es[i] & es[k]) == 1 && ones(es[j] & es[k]) == 1 && (es[i] & es[j] & es[k]) == 0)
                            return Witness{ es[i], es[j], es[k] };
                }
            return std::nullopt;
        }

        auto find_matching(std::span<const VertexMask> es) -> std::optional<Witness>
        {
            for (std::size_t i = 0 ; i < es.size() ; ++i)
                for (std::size_t j = i + 1 ; j < es.size() ; ++j)
                    if ((es[i] & es[j]) == 0)
                        return Witness{ es[i], es[j] };
            return std::nullopt;
        }

        auto find_p2(std::span<const VertexMask> es) -> std::optional<Witness>
        {
            for (std::size_t i = 0 ; i < es.size() ; ++i)
                for (std::size_t j = i + 1 ; j < es.size() ; ++j)
                    if (ones(es[i] & es[j]) == 1)
                        return Witness{ es[i], es[j] };
            return std::nullopt;
        }

        auto find_p2k3(std::span<const VertexMask> es) -> std::optional<Witness>
        {
            for (std::size_t i = 0 ; i < es.size() ; ++i)
                for (std::size_t j = i + 1 ; j < es.size() ; ++j) {
                    if (ones(es[i] & es[j]) != 1)
                        continue;
                    auto used = es[i] | es[j];
                    for (auto g : es)
                        if ((g & used) == 0)
                            return Witness{ es[i], es[j], g };
                }
            return std::nullopt;
        }

        auto find_named(std::span<const VertexMask> es, PatternKind k) -> std::optional<Witness>
        {
            switch (k) {
                case PatternKind::P:    return find_path(es);
                case PatternKind::C:    return find_triangle(es);
                case PatternKind::M:    return find_matching(es);
                case PatternKind::P2:   return find_p2(es);
                case PatternKind::P2K3: return find_p2k3(es);
                case PatternKind::Generic: break;
            }
            throw GraphError("generic patterns have no mask kernel");
        }

        auto to_edges(const Witness & w) -> std::vector<Edge>
        {
            std::vector<Edge> result;
            for (auto m : w)
                result.push_back(Edge::from_mask(m));
            std::sort(result.begin(), result.end(), colex_less);
            return result;
        }

        auto pad(const Hypergraph3 & h, int n) -> Hypergraph3
        {
            if (h.n() == n)
                return h;
            return Hypergraph3(n, h.bits());
        }

        struct Embedder
        {
            const Hypergraph3 & pattern;
            const Hypergraph3 & host;

            std::vector<int> order;                         // pattern vertices, non-isolated
            std::vector<std::vector<Edge>> checks;          // edges completed at each depth
            std::vector<int> pattern_degree, host_degree, host_twin;
            std::vector<int> image;
            std::vector<bool> used;

            Embedder(const Hypergraph3 & p, const Hypergraph3 & h) :
                pattern(p), host(h),
                pattern_degree(p.degrees()), host_degree(h.degrees()), host_twin(twin_classes(h)),
                image(p.n(), -1), used(h.n(), false)
            {
                int n = p.n();
                auto pedges = p.edges();
                std::vector<bool> placed(n, false);
                for (int step = 0 ; step < n ; ++step) {
                    int best = -1, best_links = -1;
                    for (int v = 0 ; v < n ; ++v) {
                        if (placed[v] || pattern_degree[v] == 0)
                            continue;
                        int links = 0;
                        for (auto & e : pedges)
                            if (e.contains(v))
                                for (int x : e.v)
                                    if (x != v && placed[x])
                                        ++links;
                        if (links > best_links || (links == best_links && pattern_degree[v] > pattern_degree[best])) {
                            best = v;
                            best_links = links;
                        }
                    }
                    if (best < 0)
                        break;
                    placed[best] = true;
                    order.push_back(best);
                }

                std::vector<int> position(n, -1);
                for (int i = 0 ; i < static_cast<int>(order.size()) ; ++i)
                    position[order[i]] = i;
                checks.resize(order.size());
                for (auto & e : pedges) {
                    int last = std::max({ position[e.v[0]], position[e.v[1]], position[e.v[2]] });
                    checks[last].push_back(e);
                }
            }

            auto run(std::size_t depth) -> bool
            {
                if (depth == order.size())
                    return true;
                int p = order[depth];
                std::vector<bool> twin_tried(host.n(), false);
                for (int t = 0 ; t < host.n() ; ++t) {
                    if (used[t] || host_degree[t] < pattern_degree[p] || twin_tried[host_twin[t]])
                        continue;
                    twin_tried[host_twin[t]] = true;
                    image[p] = t;
                    bool ok = true;
                    for (auto & e : checks[depth]) {
                        if (! host.has_edge(Edge::make(image[e.v[0]], image[e.v[1]], image[e.v[2]]))) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) {
                        used[t] = true;
                        if (run(depth + 1))
                            return true;
                        used[t] = false;
                    }
                    image[p] = -1;
                }
                return false;
            }
        };

        // subset-sum style packing of component sizes into bins
        auto pack(std::vector<int> & sizes, std::size_t i, std::vector<int> & room) -> bool
        {
            if (i == sizes.size())
                return true;
            for (std::size_t b = 0 ; b < room.size() ; ++b) {
                if (room[b] < sizes[i])
                    continue;
                bool repeat = false;
                for (std::size_t c = 0 ; c < b ; ++c)
                    if (room[c] == room[b])
                        repeat = true;
                if (repeat)
                    continue;
                room[b] -= sizes[i];
                if (pack(sizes, i + 1, room))
                    return true;
                room[b] += sizes[i];
            }
            return false;
        }
    }

    Pattern::Pattern(PatternKind k, std::optional<Hypergraph3> g) :
        _kind(k),
        _graph(std::move(g))
    {
    }

    auto Pattern::named(PatternKind k) -> Pattern
    {
        if (k == PatternKind::Generic)
            throw GraphError("generic patterns need a graph");
        return Pattern(k, std::nullopt);
    }

    auto Pattern::generic(const Hypergraph3 & g) -> Pattern
    {
        return Pattern(PatternKind::Generic, g);
    }

    auto Pattern::parse(const std::string & name) -> Pattern
    {
        return named(parse_pattern_kind(name));
    }

    auto Pattern::name() const -> std::string
    {
        return pattern_name(_kind);
    }

    auto Pattern::graph() const -> Hypergraph3
    {
        auto build = [] (int n, std::initializer_list<Edge> es) {
            return Hypergraph3(n, std::span<const Edge>(es.begin(), es.size()));
        };
        switch (_kind) {
            case PatternKind::P:    return build(7, { Edge{ { 0, 1, 2 } }, Edge{ { 2, 3, 4 } }, Edge{ { 4, 5, 6 } } });
            case PatternKind::C:    return build(6, { Edge{ { 0, 1, 2 } }, Edge{ { 2, 3, 4 } }, Edge{ { 0, 4, 5 } } });
            case PatternKind::M:    return build(6, { Edge{ { 0, 1, 2 } }, Edge{ { 3, 4, 5 } } });
            case PatternKind::P2:   return build(5, { Edge{ { 0, 1, 2 } }, Edge{ { 2, 3, 4 } } });
            case PatternKind::P2K3: return build(8, { Edge{ { 0, 1, 2 } }, Edge{ { 2, 3, 4 } }, Edge{ { 5, 6, 7 } } });
            case PatternKind::Generic: return *_graph;
        }
        throw GraphError("unknown pattern");
    }

    auto pattern_name(PatternKind k) -> std::string
    {
        switch (k) {
            case PatternKind::P:       return "P";
            case PatternKind::C:       return "C";
            case PatternKind::M:       return "M";
            case PatternKind::P2:      return "P2";
            case PatternKind::P2K3:    return "P2uK3";
            case PatternKind::Generic: return "generic";
        }
        return "?";
    }

    auto parse_pattern_kind(const std::string & name) -> PatternKind
    {
        if (name == "P") return PatternKind::P;
        if (name == "C") return PatternKind::C;
        if (name == "M") return PatternKind::M;
        if (name == "P2") return PatternKind::P2;
        if (name == "P2uK3" || name == "P2K3") return PatternKind::P2K3;
        throw GraphError("unknown pattern '" + name + "' (expected P, C, M, P2 or P2uK3)");
    }

    auto find_pattern(const Hypergraph3 & h, const Pattern & p) -> std::optional<std::vector<Edge>>
    {
        if (p.kind() != PatternKind::Generic) {
            auto masks = h.edge_masks();
            auto w = find_named(masks, p.kind());
            if (! w)
                return std::nullopt;
            return to_edges(*w);
        }

        auto g = p.graph();
        if (g.n() > h.n()) {
            // isolated pattern vertices still need room
            int needed = 0;
            for (int d : g.degrees())
                if (d > 0)
                    ++needed;
            if (needed > h.n())
                return std::nullopt;
        }
        auto map = find_embedding(g, h);
        if (! map)
            return std::nullopt;
        std::vector<Edge> result;
        for (auto & e : g.edges())
            result.push_back(Edge::make((*map)[e.v[0]], (*map)[e.v[1]], (*map)[e.v[2]]));
        std::sort(result.begin(), result.end(), colex_less);
        return result;
    }

    auto contains(const Hypergraph3 & h, const Pattern & p) -> bool
    {
        return find_pattern(h, p).has_value();
    }

    auto contains(const Hypergraph3 & h, PatternKind k) -> bool
    {
        return contains(h, Pattern::named(k));
    }

    auto masks_contain(std::span<const VertexMask> edges, PatternKind k) -> bool
    {
        return find_named(edges, k).has_value();
    }

    auto creates_pattern(std::span<const VertexMask> existing, VertexMask e, PatternKind k) -> bool
    {
        switch (k) {
            case PatternKind::P:
                {
                    std::array<VertexMask, max_slots> near;
                    std::array<int, max_slots> near_at;
                    int count = 0;
                    for (auto f : existing) {
                        if (ones(f & e) != 1)
                            continue;
                        // e as an end edge, f in the middle
                        for (auto g : existing)
                            if ((g & e) == 0 && ones(g & f) == 1)
                                return true;
                        near[count] = f;
                        near_at[count] = std::countr_zero(f & e);
                        ++count;
                    }
                    // e in the middle
                    for (int i = 0 ; i < count ; ++i)
                        for (int j = i + 1 ; j < count ; ++j)
                            if (near_at[i] != near_at[j] && (near[i] & near[j]) == 0)
                                return true;
                    return false;
                }

            case PatternKind::C:
                for (std::size_t i = 0 ; i < existing.size() ; ++i) {
                    auto f = existing[i];
                    if (ones(f & e) != 1)
                        continue;
                    for (std::size_t j = i + 1 ; j < existing.size() ; ++j) {
                        auto g = existing[j];
                        if (ones(g & e) == 1 && ones(f & g) == 1 && (e & f & g) == 0)
                            return true;
                    }
                }
                return false;

            case PatternKind::M:
                for (auto f : existing)
                    if ((f & e) == 0)
                        return true;
                return false;

            case PatternKind::P2:
                for (auto f : existing)
                    if (ones(f & e) == 1)
                        return true;
                return false;

            case PatternKind::P2K3:
                for (std::size_t i = 0 ; i < existing.size() ; ++i) {
                    auto f = existing[i];
                    if (ones(f & e) == 1) {
                        for (auto g : existing)
                            if ((g & (e | f)) == 0)
                                return true;
                    }
                    if ((f & e) == 0) {
                        for (std::size_t j = i + 1 ; j < existing.size() ; ++j) {
                            auto g = existing[j];
                            if ((g & e) == 0 && ones(f & g) == 1)
                                return true;
                        }
                    }
                }
                return false;

            case PatternKind::Generic:
                break;
        }
        throw GraphError("generic patterns have no anchored kernel");
    }

    auto find_embedding(const Hypergraph3 & pattern, const Hypergraph3 & host) -> std::optional<std::vector<int>>
    {
        if (pattern.size() > host.size())
            return std::nullopt;

        Embedder embedder(pattern, host);
        if (embedder.order.size() > static_cast<std::size_t>(host.n()))
            return std::nullopt;
        if (! embedder.run(0))
            return std::nullopt;

        // isolated pattern vertices go to any unused host vertices
        auto image = embedder.image;
        int next = 0;
        for (int v = 0 ; v < pattern.n() ; ++v) {
            if (image[v] >= 0)
                continue;
            while (next < host.n() && embedder.used[next])
                ++next;
            if (next == host.n())
                return std::nullopt;
            image[v] = next;
            embedder.used[next] = true;
        }
        return image;
    }

    auto is_full_star(const Hypergraph3 & h) -> bool
    {
        return h.n() >= 3 && h.size() == binomial(h.n() - 1, 2) && star_center(h).has_value();
    }

    auto is_full_comet(const Hypergraph3 & h) -> bool
    {
        return h.n() >= 4 && h.size() == 4 + binomial(h.n() - 4, 2) && in_comet(h);
    }

    auto clique_parts(const Hypergraph3 & h) -> std::vector<int>
    {
        auto comps = components(h);
        long total = 0;
        std::vector<int> sizes;
        for (auto & c : comps) {
            sizes.push_back(static_cast<int>(c.size()));
            total += binomial(static_cast<int>(c.size()), 3);
        }
        // a component with c vertices holds at most C(c, 3) edges, so equality means all complete
        if (total != h.size())
            return {};
        std::sort(sizes.rbegin(), sizes.rend());
        return sizes;
    }

    auto is_sub_iso(const Hypergraph3 & h, const Hypergraph3 & host) -> bool
    {
        int n = std::max(h.n(), host.n());
        auto small = pad(h, n);
        auto big = pad(host, n);

        if (small.size() > big.size())
            return false;
        if (is_full_star(big))
            return in_star(small);
        if (is_full_comet(big))
            return in_comet(small);
        if (auto parts = clique_parts(big) ; ! parts.empty() && parts.size() > 1)
            return fits_in_clique_parts(small, parts);

        return find_embedding(small, big).has_value();
    }

    auto star_center(const Hypergraph3 & h) -> std::optional<int>
    {
        VertexMask common = (h.n() >= 32) ? ~0u : ((1u << h.n()) - 1);
        for (auto m : h.edge_masks())
            common &= m;
        if (common == 0)
            return std::nullopt;
        return std::countr_zero(common);
    }

    auto in_star(const Hypergraph3 & h) -> bool
    {
        return h.size() == 0 || star_center(h).has_value();
    }

    auto comet_placement(const Hypergraph3 & h) -> std::optional<CometPlacement>
    {
        int n = h.n();
        if (n < 4)
            return std::nullopt;
        auto masks = h.edge_masks();

        auto fits = [&] (int x, VertexMask head) {
            VertexMask xb = 1u << x;
            for (auto m : masks) {
                if (m == head)
                    continue;
                if (! (m & xb))
                    return false;
                auto rest = m & ~xb;
                if ((rest & head) != rest && (rest & head) != 0)
                    return false;
            }
            return true;
        };

        for (int x = 0 ; x < n ; ++x) {
            VertexMask xb = 1u << x;
            std::vector<VertexMask> outside;
            for (auto m : masks)
                if (! (m & xb))
                    outside.push_back(m);
            if (outside.size() > 1)
                continue;
            if (outside.size() == 1) {
                if (fits(x, outside[0]))
                    return CometPlacement{ x, Edge::from_mask(outside[0]) };
                continue;
            }

            // every edge meets x: the head must be a union of components of x's link with 3 vertices
            for (int a = 0 ; a < n ; ++a)
                for (int b = a + 1 ; b < n ; ++b)
                    for (int c = b + 1 ; c < n ; ++c) {
                        if (a == x || b == x || c == x)
                            continue;
                        VertexMask head = (1u << a) | (1u << b) | (1u << c);
                        if (fits(x, head))
                            return CometPlacement{ x, Edge{ { a, b, c } } };
                    }
        }
        return std::nullopt;
    }

    auto in_comet(const Hypergraph3 & h) -> bool
    {
        return comet_placement(h).has_value();
    }

    auto fits_in_clique_parts(const Hypergraph3 & h, std::span<const int> part_sizes) -> bool
    {
        int total = 0;
        for (int s : part_sizes)
            total += s;
        if (total != h.n())
            throw GraphError("clique part sizes must sum to the vertex count");

        std::vector<int> sizes;
        for (auto & c : components(h))
            sizes.push_back(static_cast<int>(c.size()));
        std::sort(sizes.rbegin(), sizes.rend());
        std::vector<int> room(part_sizes.begin(), part_sizes.end());
        return pack(sizes, 0, room);
    }
}
