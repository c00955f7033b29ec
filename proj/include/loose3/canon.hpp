/* vim: set sw=4 sts=4 et : */

#ifndef LOOSE3_CANON_HPP
#define LOOSE3_CANON_HPP 1

#include <loose3/hypergraph.hpp>

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace loose3
{
    /// Label-invariant fingerprint: equal keys iff isomorphic graphs.
    struct CanonicalKey
    {
        int n = 0;
        EdgeSet bits;

        /// "n:" followed by fixed-width lowercase hex of the canonical bitset, most significant slot first.
        auto to_string() const -> std::string;
        static auto from_string(const std::string & s) -> CanonicalKey;

        auto operator== (const CanonicalKey &) const -> bool = default;
        auto operator<=> (const CanonicalKey & o) const -> std::strong_ordering
        {
            if (auto c = n <=> o.n ; c != 0)
                return c;
            return bits <=> o.bits;
        }
    };

    /// Vertices u, v share a class iff swapping them is an automorphism.
    auto twin_classes(const Hypergraph3 & h) -> std::vector<int>;

    /// perm[v] is the canonical label of v. Relabelling by perm gives the least
    /// edge bitset over all labellings reachable by refine-and-individualise.
    auto canonical_labeling(const Hypergraph3 & h) -> std::vector<int>;
    auto canonical_form(const Hypergraph3 & h) -> Hypergraph3;
    auto canonical_key(const Hypergraph3 & h) -> CanonicalKey;

    /// Throws GraphError when the vertex counts differ.
    auto are_isomorphic(const Hypergraph3 & a, const Hypergraph3 & b) -> bool;

    /// Keeps the first representative of each isomorphism class, in input order.
    auto dedupe(std::span<const Hypergraph3> graphs) -> std::vector<Hypergraph3>;
}

#endif
