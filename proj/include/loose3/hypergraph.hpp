/* vim: set sw=4 sts=4 et : */

#ifndef LOOSE3_HYPERGRAPH_HPP
#define LOOSE3_HYPERGRAPH_HPP 1

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace loose3
{
    constexpr int max_vertices = 16;
    constexpr int max_slots = 560;        // C(16, 3)
    constexpr int slot_words = (max_slots + 63) / 64;

    class GraphError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    auto binomial(int n, int k) -> long;

    /// Number of triple slots on n vertices, i.e. C(n, 3).
    auto slot_count(int n) -> int;

    using VertexMask = std::uint32_t;

    struct Edge
    {
        std::array<int, 3> v;

        /// Sorts the three vertices; throws GraphError unless they are distinct and non-negative.
        static auto make(int a, int b, int c) -> Edge;
        static auto from_mask(VertexMask m) -> Edge;

        auto mask() const -> VertexMask;
        auto rank() const -> int;
        auto contains(int x) const -> bool;

        auto operator<=> (const Edge &) const = default;
    };

    /// Colex rank: C(c,3) + C(b,2) + a for a < b < c. Triples on [0, n) occupy ranks [0, C(n,3)).
    auto triple_rank(int a, int b, int c) -> int;
    auto triple_unrank(int rank) -> Edge;
    auto colex_less(const Edge & a, const Edge & b) -> bool;

    class EdgeSet
    {
        private:
            std::array<std::uint64_t, slot_words> _words{};

        public:
            auto test(int slot) const -> bool
            {
                return (_words[slot >> 6] >> (slot & 63)) & 1u;
            }

            auto set(int slot) -> void
            {
                _words[slot >> 6] |= std::uint64_t{1} << (slot & 63);
            }

            auto reset(int slot) -> void
            {
                _words[slot >> 6] &= ~(std::uint64_t{1} << (slot & 63));
            }

            auto count() const -> int
            {
                int c = 0;
                for (auto w : _words)
                    c += std::popcount(w);
                return c;
            }

            auto empty() const -> bool
            {
                for (auto w : _words)
                    if (w)
                        return false;
                return true;
            }

            template <typename F_>
            auto for_each(F_ && f) const -> void
            {
                for (int i = 0 ; i < slot_words ; ++i) {
                    auto w = _words[i];
                    while (w) {
                        int b = std::countr_zero(w);
                        f(i * 64 + b);
                        w &= w - 1;
                    }
                }
            }

            auto words() const -> const std::array<std::uint64_t, slot_words> & { return _words; }
            auto words() -> std::array<std::uint64_t, slot_words> & { return _words; }

            auto operator|= (const EdgeSet & o) -> EdgeSet &;
            auto operator&= (const EdgeSet & o) -> EdgeSet &;
            auto subset_of(const EdgeSet & o) const -> bool;
            auto intersection_count(const EdgeSet & o) const -> int;

            auto operator== (const EdgeSet &) const -> bool = default;

            /// Numeric order, highest slot most significant.
            auto operator<=> (const EdgeSet & o) const -> std::strong_ordering;
    };

    struct LinkGraph
    {
        int vertex;
        std::vector<std::pair<int, int>> pairs;
    };

    /// A labelled 3-uniform hypergraph on n <= 16 vertices.
    class Hypergraph3
    {
        private:
            int _n;
            EdgeSet _edges;

        public:
            explicit Hypergraph3(int n);
            Hypergraph3(int n, std::span<const Edge> edges);
            Hypergraph3(int n, const EdgeSet & edges);

            auto n() const -> int { return _n; }
            auto size() const -> int { return _edges.count(); }
            auto bits() const -> const EdgeSet & { return _edges; }

            auto has_edge(const Edge & e) const -> bool;
            auto has_slot(int slot) const -> bool { return _edges.test(slot); }

            /// In-place insertion, used while building; idempotent.
            auto insert(const Edge & e) -> void;
            auto erase(const Edge & e) -> void;

            auto edges() const -> std::vector<Edge>;
            auto edge_masks() const -> std::vector<VertexMask>;
            auto degree(int v) const -> int;
            auto degrees() const -> std::vector<int>;
            auto link(int v) const -> LinkGraph;

            /// perm[v] is the new label of v; perm must be a permutation of [0, n).
            auto relabel(std::span<const int> perm) const -> Hypergraph3;
            auto complement() const -> Hypergraph3;
            auto is_subgraph_of(const Hypergraph3 & other) const -> bool;

            auto operator== (const Hypergraph3 &) const -> bool = default;
    };

    auto add_edge(const Hypergraph3 & h, const Edge & e) -> Hypergraph3;
    auto remove_edge(const Hypergraph3 & h, const Edge & e) -> Hypergraph3;

    /// Weak connectivity: vertices joined by a sequence of edges; isolated vertices are singletons.
    /// Components are ordered by smallest member, members ascending.
    auto components(const Hypergraph3 & h) -> std::vector<std::vector<int>>;
    auto is_connected(const Hypergraph3 & h) -> bool;

    auto disjoint_union(const Hypergraph3 & a, const Hypergraph3 & b) -> Hypergraph3;
    auto induced(const Hypergraph3 & h, std::span<const int> vertices) -> Hypergraph3;
    auto delete_vertex(const Hypergraph3 & h, int v) -> Hypergraph3;
    auto complete_graph(int n) -> Hypergraph3;

    /// Text format: "n m" then m lines "u v w", u < v < w, in colex order.
    auto to_text(const Hypergraph3 & h) -> std::string;
    auto parse_text(const std::string & text) -> Hypergraph3;
    auto read_graph_file(const std::string & path) -> Hypergraph3;
    auto write_graph_file(const std::string & path, const Hypergraph3 & h) -> void;

    auto operator<< (std::ostream & s, const Edge & e) -> std::ostream &;
}

#endif
