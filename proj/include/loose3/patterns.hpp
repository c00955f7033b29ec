/* vim: set sw=4 sts=4 et : */

#ifndef LOOSE3_PATTERNS_HPP
#define LOOSE3_PATTERNS_HPP 1

#include <loose3/hypergraph.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace loose3
{
    enum class PatternKind
    {
        P,          // loose path, 3 edges on 7 vertices
        C,          // loose triangle, 3 edges on 6 vertices
        M,          // two disjoint edges
        P2,         // two edges sharing exactly one vertex
        P2K3,       // P2 plus a vertex-disjoint edge
        Generic
    };

    class Pattern
    {
        private:
            PatternKind _kind;
            std::optional<Hypergraph3> _graph;

            Pattern(PatternKind k, std::optional<Hypergraph3> g);

        public:
            static auto named(PatternKind k) -> Pattern;
            static auto generic(const Hypergraph3 & g) -> Pattern;

            /// Accepts P, C, M, P2, P2uK3.
            static auto parse(const std::string & name) -> Pattern;

            auto kind() const -> PatternKind { return _kind; }
            auto name() const -> std::string;
            auto graph() const -> Hypergraph3;
    };

    auto pattern_name(PatternKind k) -> std::string;
    auto parse_pattern_kind(const std::string & name) -> PatternKind;

    /// Witness edges of some copy of the pattern, colex ordered, or nullopt.
    auto find_pattern(const Hypergraph3 & h, const Pattern & p) -> std::optional<std::vector<Edge>>;
    auto contains(const Hypergraph3 & h, const Pattern & p) -> bool;
    auto contains(const Hypergraph3 & h, PatternKind k) -> bool;

    /// Mask-level kernels for search loops. `existing` must not already contain the pattern
    /// for the anchored form to be meaningful: it reports copies that use `added`.
    auto masks_contain(std::span<const VertexMask> edges, PatternKind k) -> bool;
    auto creates_pattern(std::span<const VertexMask> existing, VertexMask added, PatternKind k) -> bool;

    /// Injective vertex map sending every edge of `pattern` onto an edge of `host`.
    auto find_embedding(const Hypergraph3 & pattern, const Hypergraph3 & host) -> std::optional<std::vector<int>>;

    /// Is h a subgraph of host up to isomorphism? The smaller side is padded with isolated vertices.
    auto is_sub_iso(const Hypergraph3 & h, const Hypergraph3 & host) -> bool;

    /// Some vertex lies in every edge (vacuous for the empty graph).
    auto in_star(const Hypergraph3 & h) -> bool;
    auto star_center(const Hypergraph3 & h) -> std::optional<int>;

    /// h is a sub-3-graph of the comet on h.n() vertices: a centre x and head T
    /// such that every edge is T, or contains x with its other pair inside T or avoiding T.
    auto in_comet(const Hypergraph3 & h) -> bool;

    struct CometPlacement
    {
        int center;
        Edge head;
    };
    auto comet_placement(const Hypergraph3 & h) -> std::optional<CometPlacement>;

    /// h fits into a vertex-disjoint union of cliques with the given part sizes (summing to h.n()).
    auto fits_in_clique_parts(const Hypergraph3 & h, std::span<const int> part_sizes) -> bool;

    auto is_full_star(const Hypergraph3 & h) -> bool;
    auto is_full_comet(const Hypergraph3 & h) -> bool;

    /// Component sizes when every component of h is a complete 3-graph (or a singleton), else empty.
    auto clique_parts(const Hypergraph3 & h) -> std::vector<int>;
}

#endif
