/* vim: set sw=4 sts=4 et : */

#include <loose3/hypergraph.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace loose3
{
    namespace
    {
        struct SlotTable
        {
            std::array<Edge, max_slots> edges;
            std::array<VertexMask, max_slots> masks;

            SlotTable()
            {
                for (int c = 2 ; c < max_vertices ; ++c)
                    for (int b = 1 ; b < c ; ++b)
                        for (int a = 0 ; a < b ; ++a) {
                            int r = triple_rank(a, b, c);
                            edges[r] = Edge{ { a, b, c } };
                            masks[r] = (1u << a) | (1u << b) | (1u << c);
                        }
            }
        };

        auto slot_table() -> const SlotTable &
        {
            static const SlotTable table;
            return table;
        }

        auto check_vertex(int v, int n) -> void
        {
            if (v < 0 || v >= n)
                throw GraphError("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n));
        }
    }

    auto binomial(int n, int k) -> long
    {
        if (k < 0 || n < 0 || k > n)
            return 0;
        long r = 1;
        for (int i = 1 ; i <= k ; ++i)
            r = r * (n - k + i) / i;
        return r;
    }

    auto slot_count(int n) -> int
    {
        return static_cast<int>(binomial(n, 3));
    }

    auto triple_rank(int a, int b, int c) -> int
    {
        return static_cast<int>(binomial(c, 3) + binomial(b, 2) + a);
    }

    auto triple_unrank(int rank) -> Edge
    {
        if (rank < 0 || rank >= max_slots)
            throw GraphError("slot " + std::to_string(rank) + " out of range");
        return slot_table().edges[rank];
    }

    auto colex_less(const Edge & a, const Edge & b) -> bool
    {
        return a.rank() < b.rank();
    }

    auto Edge::make(int a, int b, int c) -> Edge
    {
        std::array<int, 3> v{ a, b, c };
        std::sort(v.begin(), v.end());
        if (v[0] < 0 || v[0] == v[1] || v[1] == v[2])
            throw GraphError("edge needs three distinct non-negative vertices");
        if (v[2] >= max_vertices)
            throw GraphError("edge vertex exceeds the 16 vertex cap");
        return Edge{ v };
    }

    auto Edge::from_mask(VertexMask m) -> Edge
    {
        if (std::popcount(m) != 3)
            throw GraphError("edge mask must have three bits");
        Edge e{};
        for (int i = 0 ; i < 3 ; ++i) {
            e.v[i] = std::countr_zero(m);
            m &= m - 1;
        }
        return e;
    }

    auto Edge::mask() const -> VertexMask
    {
        return (1u << v[0]) | (1u << v[1]) | (1u << v[2]);
    }

    auto Edge::rank() const -> int
    {
        return triple_rank(v[0], v[1], v[2]);
    }

    auto Edge::contains(int x) const -> bool
    {
        return v[0] == x || v[1] == x || v[2] == x;
    }

    auto EdgeSet::operator|= (const EdgeSet & o) -> EdgeSet &
    {
        for (int i = 0 ; i < slot_words ; ++i)
            _words[i] |= o._words[i];
        return *this;
    }

    auto EdgeSet::operator&= (const EdgeSet & o) -> EdgeSet &
    {
        for (int i = 0 ; i < slot_words ; ++i)
            _words[i] &= o._words[i];
        return *this;
    }

    auto EdgeSet::subset_of(const EdgeSet & o) const -> bool
    {
        for (int i = 0 ; i < slot_words ; ++i)
            if (_words[i] & ~o._words[i])
                return false;
        return true;
    }

    auto EdgeSet::intersection_count(const EdgeSet & o) const -> int
    {
        int c = 0;
        for (int i = 0 ; i < slot_words ; ++i)
            c += std::popcount(_words[i] & o._words[i]);
        return c;
    }

    auto EdgeSet::operator<=> (const EdgeSet & o) const -> std::strong_ordering
    {
        for (int i = slot_words - 1 ; i >= 0 ; --i)
            if (_words[i] != o._words[i])
                return _words[i] <=> o._words[i];
        return std::strong_ordering::equal;
    }

    Hypergraph3::Hypergraph3(int n) :
        _n(n)
    {
        if (n < 1 || n > max_vertices)
            throw GraphError("vertex count " + std::to_string(n) + " outside [1, 16]");
    }

    Hypergraph3::Hypergraph3(int n, std::span<const Edge> edges) :
        Hypergraph3(n)
    {
        for (auto & e : edges)
            insert(e);
    }

    Hypergraph3::Hypergraph3(int n, const EdgeSet & edges) :
        Hypergraph3(n)
    {
        int limit = slot_count(n);
        bool bad = false;
        edges.for_each([&] (int s) { if (s >= limit) bad = true; });
        if (bad)
            throw GraphError("edge slot outside C(n, 3)");
        _edges = edges;
    }

    auto Hypergraph3::has_edge(const Edge & e) const -> bool
    {
        if (e.v[2] >= _n)
            return false;
        return _edges.test(e.rank());
    }

    auto Hypergraph3::insert(const Edge & e) -> void
    {
        for (int x : e.v)
            check_vertex(x, _n);
        if (e.v[0] >= e.v[1] || e.v[1] >= e.v[2])
            throw GraphError("edge vertices must be strictly ascending");
        _edges.set(e.rank());
    }

    auto Hypergraph3::erase(const Edge & e) -> void
    {
        if (e.v[2] < _n)
            _edges.reset(e.rank());
    }

    auto Hypergraph3::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        auto & table = slot_table();
        _edges.for_each([&] (int s) { result.push_back(table.edges[s]); });
        return result;
    }

    auto Hypergraph3::edge_masks() const -> std::vector<VertexMask>
    {
        std::vector<VertexMask> result;
        auto & table = slot_table();
        _edges.for_each([&] (int s) { result.push_back(table.masks[s]); });
        return result;
    }

    auto Hypergraph3::degree(int v) const -> int
    {
        check_vertex(v, _n);
        int d = 0;
        auto & table = slot_table();
        _edges.for_each([&] (int s) { if (table.masks[s] & (1u << v)) ++d; });
        return d;
    }

    auto Hypergraph3::degrees() const -> std::vector<int>
    {
        std::vector<int> d(_n, 0);
        auto & table = slot_table();
        _edges.for_each([&] (int s) {
                auto & e = table.edges[s];
                ++d[e.v[0]]; ++d[e.v[1]]; ++d[e.v[2]];
                });
        return d;
    }

    auto Hypergraph3::link(int v) const -> LinkGraph
    {
        check_vertex(v, _n);
        LinkGraph result{ v, {} };
        for (auto & e : edges()) {
            if (! e.contains(v))
                continue;
            std::array<int, 2> rest{};
            int k = 0;
            for (int x : e.v)
                if (x != v)
                    rest[k++] = x;
            result.pairs.emplace_back(rest[0], rest[1]);
        }
        std::sort(result.pairs.begin(), result.pairs.end());
        return result;
    }

    auto Hypergraph3::relabel(std::span<const int> perm) const -> Hypergraph3
    {
        if (static_cast<int>(perm.size()) != _n)
            throw GraphError("relabelling has wrong length");
        std::vector<bool> seen(_n, false);
        for (int p : perm) {
            check_vertex(p, _n);
            if (seen[p])
                throw GraphError("relabelling is not a permutation");
            seen[p] = true;
        }

        Hypergraph3 result(_n);
        auto & table = slot_table();
        _edges.for_each([&] (int s) {
                auto & e = table.edges[s];
                result._edges.set(Edge::make(perm[e.v[0]], perm[e.v[1]], perm[e.v[2]]).rank());
                });
        return result;
    }

    auto Hypergraph3::complement() const -> Hypergraph3
    {
        Hypergraph3 result(_n);
        for (int s = 0, s_end = slot_count(_n) ; s < s_end ; ++s)
            if (! _edges.test(s))
                result._edges.set(s);
        return result;
    }

    auto Hypergraph3::is_subgraph_of(const Hypergraph3 & other) const -> bool
    {
        return _n == other._n && _edges.subset_of(other._edges);
    }

    auto add_edge(const Hypergraph3 & h, const Edge & e) -> Hypergraph3
    {
        auto result = h;
        result.insert(e);
        return result;
    }

    auto remove_edge(const Hypergraph3 & h, const Edge & e) -> Hypergraph3
    {
        auto result = h;
        result.erase(e);
        return result;
    }

    auto components(const Hypergraph3 & h) -> std::vector<std::vector<int>>
    {
        std::vector<int> parent(h.n());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&] (int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&] (int a, int b) {
            a = find(a); b = find(b);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        };

        for (auto & e : h.edges()) {
            unite(e.v[0], e.v[1]);
            unite(e.v[1], e.v[2]);
        }

        std::vector<std::vector<int>> result;
        std::vector<int> index(h.n(), -1);
        for (int v = 0 ; v < h.n() ; ++v) {
            int r = find(v);
            if (index[r] < 0) {
                index[r] = static_cast<int>(result.size());
                result.emplace_back();
            }
            result[index[r]].push_back(v);
        }
        return result;
    }

    auto is_connected(const Hypergraph3 & h) -> bool
    {
        return components(h).size() == 1;
    }

    auto disjoint_union(const Hypergraph3 & a, const Hypergraph3 & b) -> Hypergraph3
    {
        if (a.n() + b.n() > max_vertices)
            throw GraphError("disjoint union would exceed 16 vertices");
        Hypergraph3 result(a.n() + b.n());
        for (auto & e : a.edges())
            result.insert(e);
        for (auto & e : b.edges())
            result.insert(Edge{ { e.v[0] + a.n(), e.v[1] + a.n(), e.v[2] + a.n() } });
        return result;
    }

    auto induced(const Hypergraph3 & h, std::span<const int> vertices) -> Hypergraph3
    {
        std::vector<int> sorted(vertices.begin(), vertices.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw GraphError("induced vertex set has duplicates");
        if (sorted.empty())
            throw GraphError("induced vertex set is empty");

        std::vector<int> relabel(h.n(), -1);
        for (int i = 0 ; i < static_cast<int>(sorted.size()) ; ++i) {
            check_vertex(sorted[i], h.n());
            relabel[sorted[i]] = i;
        }

        Hypergraph3 result(static_cast<int>(sorted.size()));
        for (auto & e : h.edges())
            if (relabel[e.v[0]] >= 0 && relabel[e.v[1]] >= 0 && relabel[e.v[2]] >= 0)
                result.insert(Edge{ { relabel[e.v[0]], relabel[e.v[1]], relabel[e.v[2]] } });
        return result;
    }

    auto delete_vertex(const Hypergraph3 & h, int v) -> Hypergraph3
    {
        check_vertex(v, h.n());
        if (h.n() == 1)
            throw GraphError("cannot delete the only vertex");
        std::vector<int> keep;
        for (int u = 0 ; u < h.n() ; ++u)
            if (u != v)
                keep.push_back(u);
        return induced(h, keep);
    }

    auto complete_graph(int n) -> Hypergraph3
    {
        return Hypergraph3(n).complement();
    }

    auto to_text(const Hypergraph3 & h) -> std::string
    {
        std::ostringstream out;
        out << h.n() << ' ' << h.size() << '\n';
        for (auto & e : h.edges())
            out << e.v[0] << ' ' << e.v[1] << ' ' << e.v[2] << '\n';
        return out.str();
    }

    auto parse_text(const std::string & text) -> Hypergraph3
    {
        std::istringstream in(text);
        long n = 0, m = 0;
        if (! (in >> n >> m))
            throw GraphError("graph text: missing 'n m' header");
        if (n < 1 || n > max_vertices)
            throw GraphError("graph text: n must lie in [1, 16]");
        if (m < 0 || m > slot_count(static_cast<int>(n)))
            throw GraphError("graph text: edge count out of range");

        Hypergraph3 result(static_cast<int>(n));
        int previous = -1;
        for (long i = 0 ; i < m ; ++i) {
            long u, v, w;
            if (! (in >> u >> v >> w))
                throw GraphError("graph text: expected " + std::to_string(m) + " edge lines");
            if (u < 0 || w >= n || ! (u < v && v < w))
                throw GraphError("graph text: edge line " + std::to_string(i + 1) + " must satisfy 0 <= u < v < w < n");
            int r = triple_rank(static_cast<int>(u), static_cast<int>(v), static_cast<int>(w));
            if (r == previous)
                throw GraphError("graph text: duplicate edge on line " + std::to_string(i + 1));
            if (r < previous)
                throw GraphError("graph text: edges not in colex order at line " + std::to_string(i + 1));
            previous = r;
            result.insert(Edge{ { static_cast<int>(u), static_cast<int>(v), static_cast<int>(w) } });
        }
        std::string rest;
        if (in >> rest)
            throw GraphError("graph text: trailing content after edge list");
        return result;
    }

    auto read_graph_file(const std::string & path) -> Hypergraph3
    {
        std::ifstream in(path);
        if (! in)
            throw GraphError("cannot open " + path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_text(buffer.str());
    }

    auto write_graph_file(const std::string & path, const Hypergraph3 & h) -> void
    {
        std::ofstream out(path);
        if (! out)
            throw GraphError("cannot write " + path);
        out << to_text(h);
    }

    auto operator<< (std::ostream & s, const Edge & e) -> std::ostream &
    {
        return s << '{' << e.v[0] << ',' << e.v[1] << ',' << e.v[2] << '}';
    }
}
