/* vim: set sw=4 sts=4 et : */

#include <loose3/constructions.hpp>
#include <loose3/canon.hpp>
#include <loose3/patterns.hpp>
#include <loose3/turan.hpp>

#include <map>
#include <mutex>

namespace loose3
{
    namespace
    {
        auto full_star_on(Hypergraph3 & g, int centre, const std::vector<int> & leaves) -> void
        {
            for (std::size_t i = 0 ; i < leaves.size() ; ++i)
                for (std::size_t j = i + 1 ; j < leaves.size() ; ++j)
                    g.insert(Edge::make(centre, leaves[i], leaves[j]));
        }

        auto clique_on(Hypergraph3 & g, int first, int size) -> void
        {
            for (int a = first ; a < first + size ; ++a)
                for (int b = a + 1 ; b < first + size ; ++b)
                    for (int c = b + 1 ; c < first + size ; ++c)
                        g.insert(Edge{ { a, b, c } });
        }

        auto range(int from, int to) -> std::vector<int>
        {
            std::vector<int> r;
            for (int i = from ; i < to ; ++i)
                r.push_back(i);
            return r;
        }

        auto min_variant_n(int variant) -> int
        {
            return 3 + variant;
        }
    }

    auto catalog() -> std::vector<CatalogEntry>
    {
        return {
            { Tag::K,            "K",      1, 16, 0, "C(n,3)" },
            { Tag::KMinusE,      "K-e",    3, 16, 0, "C(n,3)-1" },
            { Tag::KMinus2E,     "K-2e",   4, 16, 3, "C(n,3)-2" },
            { Tag::Star,         "S",      3, 16, 0, "C(n-1,2)" },
            { Tag::Comet,        "Co",     4, 16, 0, "4+C(n-4,2)" },
            { Tag::Rocket,       "Ro",     5, 16, 0, "3+C(n-5,2)" },
            { Tag::G1,           "G1",     7, 16, 0, "3n-8" },
            { Tag::G2,           "G2",     7, 16, 0, "3n-8" },
            { Tag::G3,           "G3",     7, 16, 0, "2n-2" },
            { Tag::K5Plus2,      "K5+2",   7,  7, 0, "12" },
            { Tag::K6UnionK,     "K6uK",   7, 12, 0, "20+C(n-6,3)" },
            { Tag::TwoK6UnionK1, "2K6uK1", 13, 13, 0, "40" },
            { Tag::K6UnionStar,  "K6uS",   7, 16, 0, "20+C(n-7,2)" },
            { Tag::K4UnionStar,  "K4uS",   5, 16, 0, "4+C(n-5,2)" },
            { Tag::Bip6x6,       "Bip6x6", 12, 12, 0, "220-40" }
        };
    }

    auto catalog_entry(Tag t) -> CatalogEntry
    {
        for (auto & e : catalog())
            if (e.tag == t)
                return e;
        throw GraphError("unknown construction tag");
    }

    auto tag_name(Tag t) -> std::string
    {
        return catalog_entry(t).name;
    }

    auto parse_tag(const std::string & name) -> Tag
    {
        for (auto & e : catalog())
            if (e.name == name)
                return e.tag;
        throw GraphError("unknown construction '" + name + "'");
    }

    auto valid_for(Tag t, int n) -> bool
    {
        auto e = catalog_entry(t);
        return n >= e.min_n && n <= e.max_n;
    }

    auto closed_form_size(Tag t, int n) -> long
    {
        switch (t) {
            case Tag::K:            return binomial(n, 3);
            case Tag::KMinusE:      return binomial(n, 3) - 1;
            case Tag::KMinus2E:     return binomial(n, 3) - 2;
            case Tag::Star:         return binomial(n - 1, 2);
            case Tag::Comet:        return 4 + binomial(n - 4, 2);
            case Tag::Rocket:       return 3 + binomial(n - 5, 2);
            case Tag::G1:
            case Tag::G2:           return 3L * n - 8;
            case Tag::G3:           return 2L * n - 2;
            case Tag::K5Plus2:      return 12;
            case Tag::K6UnionK:     return 20 + binomial(n - 6, 3);
            case Tag::TwoK6UnionK1: return 40;
            case Tag::K6UnionStar:  return 20 + binomial(n - 7, 2);
            case Tag::K4UnionStar:  return 4 + binomial(n - 5, 2);
            case Tag::Bip6x6:       return 220 - 40;
        }
        throw GraphError("unknown construction tag");
    }

    auto construction_label(Tag t, int n, int variant) -> std::string
    {
        switch (t) {
            case Tag::K:            return "K" + std::to_string(n);
            case Tag::KMinusE:      return "K" + std::to_string(n) + "-e";
            case Tag::KMinus2E:     return "K" + std::to_string(n) + "-2e#" + std::to_string(variant);
            case Tag::Star:         return "S" + std::to_string(n);
            case Tag::Comet:        return "Co(" + std::to_string(n) + ")";
            case Tag::Rocket:       return "Ro(" + std::to_string(n) + ")";
            case Tag::G1:           return "G1(" + std::to_string(n) + ")";
            case Tag::G2:           return "G2(" + std::to_string(n) + ")";
            case Tag::G3:           return "G3(" + std::to_string(n) + ")";
            case Tag::K5Plus2:      return "K5+2";
            case Tag::K6UnionK:     return "K6uK" + std::to_string(n - 6);
            case Tag::TwoK6UnionK1: return "2K6uK1";
            case Tag::K6UnionStar:  return "K6uS" + std::to_string(n - 6);
            case Tag::K4UnionStar:  return "K4uS" + std::to_string(n - 4);
            case Tag::Bip6x6:       return "Bip6x6";
        }
        return "?";
    }

    auto Construction::label() const -> std::string
    {
        return construction_label(tag, n, variant);
    }

    auto build(Tag t, int n, int variant) -> Construction
    {
        auto entry = catalog_entry(t);
        if (n < entry.min_n || n > entry.max_n)
            throw GraphError(entry.name + " is defined for " + std::to_string(entry.min_n) + " <= n <= "
                    + std::to_string(entry.max_n) + ", not n = " + std::to_string(n));
        if (entry.variants == 0 && variant != 0)
            throw GraphError(entry.name + " takes no variant");
        if (entry.variants > 0 && (variant < 1 || variant > entry.variants))
            throw GraphError(entry.name + " needs a variant in 1.." + std::to_string(entry.variants));
        if (t == Tag::KMinus2E && n < min_variant_n(variant))
            throw GraphError("K-2e variant " + std::to_string(variant) + " needs n >= " + std::to_string(min_variant_n(variant)));

        Construction c{ t, n, variant, Hypergraph3(n), {} };
        auto & g = c.graph;

        switch (t) {
            case Tag::K:
                clique_on(g, 0, n);
                break;

            case Tag::KMinusE:
                clique_on(g, 0, n);
                g.erase(Edge{ { 0, 1, 2 } });
                c.roles.push_back({ "missing", { 0, 1, 2 } });
                break;

            case Tag::KMinus2E:
                clique_on(g, 0, n);
                g.erase(Edge{ { 0, 1, 2 } });
                switch (variant) {
                    case 1: g.erase(Edge{ { 0, 1, 3 } }); c.roles.push_back({ "missing", { 0, 1, 2, 0, 1, 3 } }); break;
                    case 2: g.erase(Edge{ { 0, 3, 4 } }); c.roles.push_back({ "missing", { 0, 1, 2, 0, 3, 4 } }); break;
                    case 3: g.erase(Edge{ { 3, 4, 5 } }); c.roles.push_back({ "missing", { 0, 1, 2, 3, 4, 5 } }); break;
                }
                break;

            case Tag::Star:
                full_star_on(g, 0, range(1, n));
                c.roles.push_back({ "center", { 0 } });
                break;

            case Tag::Comet:
                clique_on(g, 0, 4);
                full_star_on(g, 0, range(4, n));
                c.roles.push_back({ "center", { 0 } });
                c.roles.push_back({ "head", { 1, 2, 3 } });
                break;

            case Tag::Rocket:
                full_star_on(g, 0, range(5, n));
                g.insert(Edge{ { 0, 1, 2 } });
                g.insert(Edge{ { 1, 2, 3 } });
                g.insert(Edge{ { 1, 2, 4 } });
                c.roles.push_back({ "center", { 0 } });
                c.roles.push_back({ "a,b,c,d", { 1, 2, 3, 4 } });
                break;

            case Tag::G1:
            case Tag::G2:
                g.insert(Edge{ { 0, 1, 2 } });
                for (int a = 0 ; a < n ; ++a)
                    for (int b = a + 1 ; b < n ; ++b)
                        for (int d = b + 1 ; d < n ; ++d) {
                            Edge e{ { a, b, d } };
                            int in_xyz = (a < 3) + (b < 3) + (d < 3);
                            if (t == Tag::G1 ? (e.contains(3) && in_xyz > 0) : (in_xyz == 2))
                                g.insert(e);
                        }
                c.roles.push_back({ "x,y,z", { 0, 1, 2 } });
                if (t == Tag::G1)
                    c.roles.push_back({ "v", { 3 } });
                break;

            case Tag::G3:
                clique_on(g, 0, 5);
                g.erase(Edge{ { 1, 2, 3 } });
                g.erase(Edge{ { 1, 2, 4 } });
                for (int v = 5 ; v < n ; ++v) {
                    g.insert(Edge::make(0, 3, v));
                    g.insert(Edge::make(0, 4, v));
                }
                c.roles.push_back({ "x", { 0 } });
                c.roles.push_back({ "y1,y2", { 1, 2 } });
                c.roles.push_back({ "z1,z2", { 3, 4 } });
                break;

            case Tag::K5Plus2:
                clique_on(g, 0, 5);
                g.insert(Edge{ { 0, 1, 5 } });
                g.insert(Edge{ { 0, 1, 6 } });
                c.roles.push_back({ "a,b", { 0, 1 } });
                c.roles.push_back({ "c,d", { 5, 6 } });
                break;

            case Tag::K6UnionK:
                clique_on(g, 0, 6);
                clique_on(g, 6, n - 6);
                break;

            case Tag::TwoK6UnionK1:
                clique_on(g, 0, 6);
                clique_on(g, 6, 6);
                c.roles.push_back({ "isolated", { 12 } });
                break;

            case Tag::K6UnionStar:
                clique_on(g, 0, 6);
                full_star_on(g, 6, range(7, n));
                c.roles.push_back({ "center", { 6 } });
                break;

            case Tag::K4UnionStar:
                clique_on(g, 0, 4);
                full_star_on(g, 4, range(5, n));
                c.roles.push_back({ "center", { 4 } });
                break;

            case Tag::Bip6x6:
                for (int a = 0 ; a < n ; ++a)
                    for (int b = a + 1 ; b < n ; ++b)
                        for (int d = b + 1 ; d < n ; ++d) {
                            int left = (a < 6) + (b < 6) + (d < 6);
                            if (left == 1 || left == 2)
                                g.insert(Edge{ { a, b, d } });
                        }
                c.roles.push_back({ "side", range(0, 6) });
                break;
        }
        return c;
    }

    auto constructions_on(int n) -> std::vector<Construction>
    {
        std::vector<Construction> result;
        for (auto & e : catalog()) {
            if (n < e.min_n || n > e.max_n)
                continue;
            if (e.variants == 0)
                result.push_back(build(e.tag, n));
            else
                for (int v = 1 ; v <= e.variants ; ++v)
                    if (e.tag != Tag::KMinus2E || n >= min_variant_n(v))
                        result.push_back(build(e.tag, n, v));
        }
        return result;
    }

    auto identify(const Hypergraph3 & h) -> std::optional<std::string>
    {
        static std::mutex lock;
        static std::map<int, std::map<CanonicalKey, std::string>> tables;

        std::map<CanonicalKey, std::string> * table;
        {
            std::lock_guard<std::mutex> guard(lock);
            auto & t = tables[h.n()];
            if (t.empty()) {
                int n = h.n();
                auto add = [&] (const Hypergraph3 & g, const std::string & name) {
                    t.emplace(canonical_key(g), name);
                };
                for (auto & c : constructions_on(n))
                    add(c.graph, c.label());

                // small disjoint unions that show up as extremal graphs
                for (int a = 1 ; a < n ; ++a) {
                    int b = n - a;
                    add(disjoint_union(complete_graph(a), complete_graph(b)), "K" + std::to_string(a) + "uK" + std::to_string(b));
                    if (a >= 3)
                        add(disjoint_union(build(Tag::Star, a).graph, Hypergraph3(b)), "S" + std::to_string(a) + "uK" + std::to_string(b));
                }
                if (n == 13) {
                    add(disjoint_union(complete_graph(6), build(Tag::G1, 7).graph), "K6uG1(7)");
                    add(disjoint_union(complete_graph(6), build(Tag::G2, 7).graph), "K6uG2(7)");
                }
                if (n == 14)
                    add(disjoint_union(build(Tag::TwoK6UnionK1, 13).graph, Hypergraph3(1)), "2K6u2K1");
                if (n >= 6)
                    add(Hypergraph3(n), "empty" + std::to_string(n));
            }
            table = &t;
        }

        auto it = table->find(canonical_key(h));
        if (it == table->end())
            return std::nullopt;
        return it->second;
    }

    auto QualificationReport::qualifies() const -> bool
    {
        if (! p_free)
            return false;
        for (auto & h : hosts)
            if (h.contained)
                return false;
        return ! claimed || *claimed == edges;
    }

    auto qualify(const Hypergraph3 & h, const std::string & label, int order, const Registry & registry)
        -> QualificationReport
    {
        QualificationReport report;
        report.label = label;
        report.n = h.n();
        report.order = order;
        report.edges = h.size();
        report.p_free = ! contains(h, PatternKind::P);

        for (int s = 1 ; s < order ; ++s) {
            auto & fact = registry.require(Claim::turan(h.n(), { PatternKind::P }, s));
            if (! fact.value)
                continue;
            if (! fact.family_complete)
                throw RegistryError("qualification needs the complete family of " + fact.claim.label());
            for (auto & m : fact.family)
                report.hosts.push_back(HostCheck{ m.label, is_sub_iso(h, m.graph) });
        }

        if (auto * fact = registry.get(Claim::turan(h.n(), { PatternKind::P }, order)) ; fact && fact->value)
            report.claimed = *fact->value;
        return report;
    }

    auto qualify(Tag t, int n, int order, const Registry & registry, int variant) -> QualificationReport
    {
        auto c = build(t, n, variant);
        return qualify(c.graph, c.label(), order, registry);
    }
}
