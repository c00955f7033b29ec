/* vim: set sw=4 sts=4 et : */

#ifndef LOOSE3_CONSTRUCTIONS_HPP
#define LOOSE3_CONSTRUCTIONS_HPP 1

#include <loose3/hypergraph.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace loose3
{
    class Registry;

    enum class Tag
    {
        K,              // complete
        KMinusE,        // complete minus the edge {0,1,2}
        KMinus2E,       // complete minus two edges sharing 2, 1 or 0 vertices (variant 1, 2, 3)
        Star,           // full star, centre 0
        Comet,          // K4 on {0,1,2,3} glued at centre 0 to the full star on {0} and 4..n-1
        Rocket,         // star centre 0 on {0} and 5..n-1, plus {0,1,2}, {1,2,3}, {1,2,4}
        G1,             // x=0, y=1, z=2, v=3
        G2,
        G3,             // x=0, y1=1, y2=2, z1=3, z2=4
        K5Plus2,        // K5 on 0..4, plus {0,1,5}, {0,1,6}
        K6UnionK,       // K6 on 0..5, K(n-6) on 6..n-1
        TwoK6UnionK1,   // K6 on 0..5 and 6..11, vertex 12 isolated
        K6UnionStar,    // K6 on 0..5, full star centre 6 on 6..n-1
        K4UnionStar,    // K4 on 0..3, full star centre 4 on 4..n-1
        Bip6x6          // sides 0..5 and 6..11, every triple meeting both
    };

    struct CatalogEntry
    {
        Tag tag;
        std::string name;
        int min_n, max_n;
        int variants;                   // 0 when the tag takes no variant
        std::string size_formula;
    };

    struct Construction
    {
        Tag tag;
        int n;
        int variant;
        Hypergraph3 graph;
        std::vector<std::pair<std::string, std::vector<int>>> roles;

        auto label() const -> std::string;
    };

    auto catalog() -> std::vector<CatalogEntry>;
    auto catalog_entry(Tag t) -> CatalogEntry;
    auto tag_name(Tag t) -> std::string;

    /// Accepts catalogue names (case sensitive) such as "Co", "K-2e", "K6uS".
    auto parse_tag(const std::string & name) -> Tag;

    auto valid_for(Tag t, int n) -> bool;
    auto closed_form_size(Tag t, int n) -> long;

    /// Throws GraphError when n (or the variant) is outside the tag's range.
    auto build(Tag t, int n, int variant = 0) -> Construction;
    auto construction_label(Tag t, int n, int variant = 0) -> std::string;

    /// Every catalogue construction valid on n vertices, variants expanded.
    auto constructions_on(int n) -> std::vector<Construction>;

    /// Name of a catalogue construction (or a small union of them) isomorphic to h, if any.
    auto identify(const Hypergraph3 & h) -> std::optional<std::string>;

    struct HostCheck
    {
        std::string host;
        bool contained;
    };

    struct QualificationReport
    {
        std::string label;
        int n = 0;
        int order = 1;
        long edges = 0;
        bool p_free = false;
        std::vector<HostCheck> hosts;
        std::optional<long> claimed;    // ex^(order)(n;P) from the registry, if present

        auto qualifies() const -> bool;
    };

    /// Checks h as a candidate for the order-th Turan number of P: P-free, contained in no
    /// extremal graph of a lower order, and edge count against the registered value.
    /// Throws RegistryError when a lower-order family is missing or incomplete.
    auto qualify(const Hypergraph3 & h, const std::string & label, int order, const Registry & registry)
        -> QualificationReport;
    auto qualify(Tag t, int n, int order, const Registry & registry, int variant = 0) -> QualificationReport;
}

#endif
