/* vim: set sw=4 sts=4 et : */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <loose3/canon.hpp>
#include <loose3/constructions.hpp>
#include <loose3/turan.hpp>

#include "oracle.hpp"

using namespace loose3;
using oracle::binom;

namespace
{
    auto expected_size(const std::string & name, int n) -> long
    {
        if (name == "K")        return binom(n, 3);
        if (name == "K-e")      return binom(n, 3) - 1;
        if (name == "K-2e")     return binom(n, 3) - 2;
        if (name == "S")        return binom(n - 1, 2);
        if (name == "Co")       return 4 + binom(n - 4, 2);
        if (name == "Ro")       return 3 + binom(n - 5, 2);
        if (name == "G1")       return 3 * n - 8;
        if (name == "G2")       return 3 * n - 8;
        if (name == "G3")       return 2 * n - 2;
        if (name == "K5+2")     return 12;
        if (name == "K6uK")     return 20 + binom(n - 6, 3);
        if (name == "2K6uK1")   return 40;
        if (name == "K6uS")     return 20 + binom(n - 7, 2);
        if (name == "K4uS")     return 4 + binom(n - 5, 2);
        if (name == "Bip6x6")   return 180;
        return -1;
    }

    auto should_be_p_free(const std::string & name, int n) -> bool
    {
        if (name == "K" || name == "K-e" || name == "K-2e")
            return n <= 6;
        return name != "Bip6x6";
    }

    // A vertex c and triple T with every edge equal to T, or through c with its other pair inside or outside T.
    auto fits_comet(const Hypergraph3 & h) -> bool
    {
        auto es = oracle::tris(h);
        for (int c = 0 ; c < h.n() ; ++c)
            for (auto & t : oracle::all_triples(h.n())) {
                if (t[0] == c || t[1] == c || t[2] == c)
                    continue;
                bool ok = true;
                for (auto & e : es) {
                    if (e == t)
                        continue;
                    bool has_c = e[0] == c || e[1] == c || e[2] == c;
                    int in_t = oracle::common(e, t);
                    if (! has_c || in_t == 1) {
                        ok = false;
                        break;
                    }
                }
                if (ok)
                    return true;
            }
        return false;
    }

    auto common_vertex(const Hypergraph3 & h) -> bool
    {
        auto es = oracle::tris(h);
        for (int v = 0 ; v < h.n() ; ++v)
            if (std::all_of(es.begin(), es.end(), [&] (auto & e) { return e[0] == v || e[1] == v || e[2] == v; }))
                return true;
        return false;
    }

    auto connected(const Hypergraph3 & h) -> bool
    {
        auto es = oracle::tris(h);
        std::vector<int> comp(h.n());
        std::iota(comp.begin(), comp.end(), 0);
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto & e : es) {
                int m = std::min({ comp[e[0]], comp[e[1]], comp[e[2]] });
                for (int v : e)
                    if (comp[v] != m) {
                        comp[v] = m;
                        changed = true;
                    }
            }
        }
        return std::all_of(comp.begin(), comp.end(), [] (int c) { return c == 0; });
    }
}

TEST_CASE("every catalogue construction has its closed-form size")
{
    int built = 0;
    for (auto & e : catalog())
        for (int n = 1 ; n <= max_vertices ; ++n) {
            CHECK(valid_for(e.tag, n) == (n >= e.min_n && n <= e.max_n));
            if (! valid_for(e.tag, n)) {
                CHECK_THROWS_AS(build(e.tag, n, e.variants ? 1 : 0), GraphError);
                continue;
            }
            for (int v = e.variants ? 1 : 0 ; v <= e.variants ; ++v) {
                if (e.tag == Tag::KMinus2E && n < 3 + v)
                    continue;
                auto c = build(e.tag, n, v);
                INFO(c.label());
                CHECK(c.graph.n() == n);
                CHECK(c.graph.size() == expected_size(e.name, n));
                CHECK(closed_form_size(e.tag, n) == expected_size(e.name, n));
                CHECK(oracle::has(c.graph, PatternKind::P) == ! should_be_p_free(e.name, n));
                CHECK(identify(c.graph).has_value());
                ++built;
            }
        }
    CHECK(built > 150);
}

TEST_CASE("catalogue names parse back")
{
    for (auto & e : catalog()) {
        CHECK(parse_tag(e.name) == e.tag);
        CHECK(tag_name(e.tag) == e.name);
    }
    CHECK_THROWS(parse_tag("nope"));
    CHECK(construction_label(Tag::KMinus2E, 9, 2) == "K9-2e#2");
    CHECK(construction_label(Tag::K6UnionK, 12) == "K6uK6");
    CHECK(construction_label(Tag::K4UnionStar, 14) == "K4uS10");
}

TEST_CASE("the three K-2e variants differ in how the missing edges meet")
{
    for (int v = 1 ; v <= 3 ; ++v) {
        auto g = build(Tag::KMinus2E, 10, v).graph.complement();
        auto es = oracle::tris(g);
        REQUIRE(es.size() == 2);
        CHECK(oracle::common(es[0], es[1]) == 3 - v);
    }
}

TEST_CASE("non-containments behind the qualification predicates")
{
    for (int n = 7 ; n <= 16 ; ++n) {
        for (auto t : { Tag::G1, Tag::G2, Tag::G3 }) {
            auto g = build(t, n).graph;
            CHECK_FALSE(common_vertex(g));
            CHECK(connected(g));
            CHECK_FALSE(is_sub_iso(g, build(Tag::Star, n).graph));
            if (n <= 12)
                CHECK_FALSE(is_sub_iso(g, build(Tag::K6UnionK, n).graph));
        }
        auto ro = build(Tag::Rocket, n).graph;
        CHECK_FALSE(fits_comet(ro));
        CHECK_FALSE(is_sub_iso(ro, build(Tag::Comet, n).graph));
        CHECK(fits_comet(build(Tag::Comet, n).graph));
    }
    CHECK_FALSE(oracle::embeds(build(Tag::G1, 8).graph, build(Tag::Star, 8).graph));
    CHECK_FALSE(oracle::embeds(build(Tag::Rocket, 9).graph, build(Tag::Comet, 9).graph));
    CHECK_FALSE(are_isomorphic(build(Tag::G1, 9).graph, build(Tag::G2, 9).graph));
}

TEST_CASE("every registry witness for P qualifies at its order")
{
    auto reg = Registry::known_facts();
    int checked = 0;
    for (auto & r : reg.entries()) {
        if (r.claim.forbid != std::vector<PatternKind>{ PatternKind::P } || r.claim.is_conditional() || ! r.value)
            continue;
        for (auto & m : r.family) {
            auto q = qualify(m.graph, m.label, r.claim.order, reg);
            INFO(r.claim.label() << " " << m.label);
            CHECK(q.qualifies());
            CHECK(q.claimed == r.value);
            ++checked;
        }
    }
    CHECK(checked > 50);

    auto s = qualify(Tag::Star, 12, 3, reg);
    CHECK_FALSE(s.qualifies());
    auto b = qualify(Tag::Bip6x6, 12, 1, reg);
    CHECK_FALSE(b.p_free);
}

TEST_CASE("qualification refuses an incomplete lower family")
{
    Registry reg;
    TuranResult r;
    r.claim = Claim::turan(9, { PatternKind::P }, 1);
    r.value = 28;
    r.family = { Member{ "S9", build(Tag::Star, 9).graph } };
    r.family_complete = false;
    r.status = Status::PaperAsserted;
    reg.put(r);
    CHECK_THROWS_AS(qualify(Tag::Comet, 9, 2, reg), RegistryError);
    CHECK_THROWS_AS(qualify(Tag::Comet, 9, 3, reg), RegistryError);
}

TEST_CASE("identify names small unions")
{
    CHECK(identify(disjoint_union(complete_graph(6), complete_graph(6))) == "K6uK6");
    CHECK(identify(disjoint_union(complete_graph(6), Hypergraph3(1))).has_value());
    CHECK(identify(build(Tag::Comet, 11).graph) == "Co(11)");
    std::mt19937_64 rng(1);
    CHECK(identify(build(Tag::G3, 9).graph.relabel(oracle::random_perm(rng, 9))) == "G3(9)");
}
