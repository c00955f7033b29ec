/* vim: set sw=4 sts=4 et : */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <loose3/canon.hpp>
#include <loose3/constructions.hpp>
#include <loose3/turan.hpp>

#include "oracle.hpp"

using namespace loose3;
using PK = PatternKind;

namespace
{
    auto opts() -> SearchOptions
    {
        SearchOptions o;
        o.budget_seconds = 300;
        return o;
    }

    auto oracle_keys(const std::set<std::vector<oracle::Tri>> & family, int n) -> std::vector<CanonicalKey>
    {
        std::vector<CanonicalKey> keys;
        for (auto & e : family)
            keys.push_back(canonical_key(oracle::graph_of(n, e)));
        std::sort(keys.begin(), keys.end());
        return keys;
    }

    auto labels(const TuranResult & r) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        for (auto & m : r.family)
            out.push_back(m.label);
        std::sort(out.begin(), out.end());
        return out;
    }

    // Every F-free graph on n vertices up to isomorphism, by enumerating all edge sets.
    auto oracle_free_classes(int n, const std::vector<PK> & forbid) -> std::set<std::vector<oracle::Tri>>
    {
        auto slots = oracle::all_triples(n);
        std::set<std::vector<oracle::Tri>> out;
        for (std::uint64_t mask = 0 ; mask < (std::uint64_t{1} << slots.size()) ; ++mask) {
            std::vector<oracle::Tri> e;
            for (std::size_t i = 0 ; i < slots.size() ; ++i)
                if ((mask >> i) & 1)
                    e.push_back(slots[i]);
            bool ok = true;
            for (auto k : forbid)
                ok = ok && ! oracle::has(e, k);
            if (ok)
                out.insert(oracle::canon(oracle::graph_of(n, e)));
        }
        return out;
    }
}

TEST_CASE("claim labels round trip")
{
    for (auto label : { "ex3(12;P)", "ex1(7;C)", "ex(8;{P,C}|M)", "ex(9;{P,C,P2uK3}|M)", "ex_conn(7;P|C)" }) {
        auto c = Claim::parse(label);
        CHECK(c.label() == label);
    }
    auto c = Claim::parse("ex_conn(7;P|C)");
    CHECK(c.connected);
    CHECK(c.forbid == std::vector<PK>{ PK::P });
    CHECK(c.require == PK::C);
    CHECK(parse_forbid("C,P") == std::vector<PK>{ PK::P, PK::C });
    CHECK(parse_forbid("{P,C}") == std::vector<PK>{ PK::P, PK::C });
    CHECK_THROWS(Claim::parse("ex(7;P"));
    CHECK(parse_status(status_name(Status::LowerBoundOnly)) == Status::LowerBoundOnly);
    CHECK(weakest(Status::SearchVerified, Status::PaperAsserted) == Status::PaperAsserted);
    CHECK(weakest(Status::Unknown, Status::PaperAsserted) == Status::Unknown);
}

TEST_CASE("generation matches all edge sets for n <= 5")
{
    for (int n = 1 ; n <= 5 ; ++n)
        for (auto forbid : std::vector<std::vector<PK>>{ { PK::P }, { PK::C }, { PK::M }, { PK::P2 }, { PK::P2K3 },
                { PK::P, PK::C } }) {
            auto expect = oracle_free_classes(n, forbid);
            std::vector<CanonicalKey> want;
            for (auto & e : expect)
                want.push_back(canonical_key(oracle::graph_of(n, e)));
            std::sort(want.begin(), want.end());
            for (auto engine : { Engine::Extension, Engine::SlotBranch }) {
                auto o = opts();
                o.engine = engine;
                o.use_cache = false;
                std::vector<CanonicalKey> got;
                for (auto & g : generate_f_free(n, forbid, 0, o))
                    got.push_back(canonical_key(g));
                std::sort(got.begin(), got.end());
                INFO("n=" << n << " " << forbid_name(forbid));
                CHECK(got == want);
            }
        }
}

TEST_CASE("Turan chains match the exhaustive oracle at n = 6")
{
    for (auto forbid : std::vector<std::vector<PK>>{ { PK::M }, { PK::P2 } }) {
        auto chain = oracle::turan_chain(6, forbid, 3);
        Registry reg;
        higher_order(6, forbid, 3, reg, opts());
        for (int s = 1 ; s <= 3 ; ++s) {
            auto * r = reg.get(Claim::turan(6, forbid, s));
            REQUIRE(r);
            INFO(r->claim.label());
            auto & o = chain[s - 1];
            if (o.value < 0) {
                CHECK_FALSE(r->value);
                continue;
            }
            REQUIRE(r->value);
            CHECK(*r->value == o.value);
            CHECK(r->family_keys() == oracle_keys(o.family, 6));
        }
    }
    auto p = oracle::turan_chain(5, { PK::P }, 2);
    CHECK(p[0].value == 10);
    CHECK(p[1].value < 0);
}

TEST_CASE("slot engine agrees with the extension engine for n <= 6")
{
    for (int n = 4 ; n <= 6 ; ++n)
        for (auto forbid : std::vector<std::vector<PK>>{ { PK::P }, { PK::C }, { PK::M }, { PK::P2K3 }, { PK::P, PK::C } })
            for (int t : n <= 5 ? std::vector<int>{ 0, n, 2 * n } : std::vector<int>{ 16 }) {
                auto a = opts(), b = opts();
                a.use_cache = b.use_cache = false;
                b.engine = Engine::SlotBranch;
                auto x = generate_f_free(n, forbid, t, a);
                auto y = generate_f_free(n, forbid, t, b);
                INFO("n=" << n << " " << forbid_name(forbid) << " t=" << t);
                REQUIRE(x.size() == y.size());
                for (std::size_t i = 0 ; i < x.size() ; ++i)
                    CHECK(canonical_key(x[i]) == canonical_key(y[i]));
                for (auto & g : x)
                    CHECK(g.size() >= t);
            }
}

TEST_CASE("first-order P numbers for small n")
{
    Registry reg;
    auto r6 = higher_order(6, { PK::P }, 1, reg, opts());
    CHECK(r6.value == 20);
    CHECK(labels(r6) == std::vector<std::string>{ "K6" });
    auto r7 = higher_order(7, { PK::P }, 1, reg, opts());
    CHECK(r7.value == 20);
    REQUIRE(r7.family.size() == 1);
    CHECK(are_isomorphic(r7.family[0].graph, disjoint_union(complete_graph(6), Hypergraph3(1))));
    auto r8 = higher_order(8, { PK::P }, 1, reg, opts());
    CHECK(r8.value == 21);
    CHECK(labels(r8) == std::vector<std::string>{ "S8" });
    CHECK(r8.status == Status::SearchVerified);
    CHECK(r8.family_complete);
}

TEST_CASE("higher orders of P at n = 7")
{
    Registry reg;
    auto r = higher_order(7, { PK::P }, 4, reg, opts());
    CHECK(reg.get(Claim::turan(7, { PK::P }, 2))->value == 15);
    CHECK(labels(*reg.get(Claim::turan(7, { PK::P }, 2))) == std::vector<std::string>{ "S7" });
    CHECK(reg.get(Claim::turan(7, { PK::P }, 3))->value == 13);
    CHECK(labels(*reg.get(Claim::turan(7, { PK::P }, 3))) == std::vector<std::string>{ "G1(7)", "G2(7)" });
    CHECK(r.value == 12);
    CHECK(labels(r) == std::vector<std::string>{ "G3(7)", "K5+2" });
    for (auto & c : check_decrease(reg))
        CHECK(c.ok);
}

TEST_CASE("undefined orders below seven vertices")
{
    Registry reg;
    for (int n = 3 ; n <= 6 ; ++n) {
        auto r = higher_order(n, { PK::P }, 3, reg, opts());
        CHECK_FALSE(r.value);
        CHECK(r.status == Status::SearchVerified);
        CHECK(reg.get(Claim::turan(n, { PK::P }, 1))->value == oracle::binom(n, 3));
    }
}

TEST_CASE("conditional numbers")
{
    Registry reg;
    auto c = conditional(7, { PK::P }, PK::C, true, reg, opts());
    CHECK(c.value == 13);
    CHECK(labels(c) == std::vector<std::string>{ "G1(7)", "G2(7)" });
    for (int n = 6 ; n <= 8 ; ++n) {
        auto a = conditional(n, { PK::P, PK::C }, PK::M, false, reg, opts());
        CHECK(a.value == 2 * n - 4);
        auto b = conditional(n, { PK::P, PK::C, PK::P2K3 }, PK::M, false, reg, opts());
        CHECK(b.value == 2 * n - 4);
    }
    CHECK_THROWS_AS(conditional(5, { PK::P }, PK::P2K3, false, reg, opts()), SearchLimitError);
    CHECK_THROWS_AS(conditional(8, { PK::M }, PK::P2K3, false, reg, opts()), SearchLimitError);
}

TEST_CASE("search results do not depend on the worker count")
{
    std::vector<TuranResult> runs;
    for (int jobs : { 1, 4, 8 }) {
        auto o = opts();
        o.jobs = jobs;
        o.use_cache = false;
        Registry reg;
        runs.push_back(higher_order(8, { PK::P }, 3, reg, o));
    }
    for (auto & r : runs) {
        CHECK(r.value == runs[0].value);
        CHECK(r.family_keys() == runs[0].family_keys());
        CHECK(labels(r) == labels(runs[0]));
        CHECK(r.stats.nodes == runs[0].stats.nodes);
        CHECK(r.stats.candidates == runs[0].stats.candidates);
    }
}

TEST_CASE("budget exhaustion keeps the seed as a lower bound")
{
    auto o = opts();
    o.budget_seconds = 0.0;
    o.use_cache = false;
    o.search_limit = 10;
    auto reg = Registry::known_facts();
    std::vector<Member> excluded = reg.get(Claim::turan(10, { PK::P }, 1))->family;
    auto r = max_f_free(Claim::turan(10, { PK::P }, 2), excluded, o);
    CHECK(r.status == Status::LowerBoundOnly);
    CHECK(r.value == 24);
    CHECK_FALSE(r.family_complete);

    o.search_limit = 9;
    CHECK_THROWS_AS(max_f_free(Claim::turan(10, { PK::P }, 1), {}, o), SearchLimitError);
    auto slot = opts();
    slot.engine = Engine::SlotBranch;
    CHECK_THROWS_AS(generate_f_free(8, { PK::M }, 0, slot), SearchLimitError);
}

TEST_CASE("registry merge rules")
{
    Registry reg;
    TuranResult a;
    a.claim = Claim::turan(8, { PK::P }, 1);
    a.value = 21;
    a.family = { Member{ "S8", build(Tag::Star, 8).graph } };
    a.status = Status::PaperAsserted;
    reg.put(a);

    auto b = a;
    b.status = Status::SearchVerified;
    b.notes = { "found" };
    reg.put(b);
    CHECK(reg.get(a.claim)->status == Status::SearchVerified);

    auto c = a;
    c.value = 22;
    CHECK_THROWS_AS(reg.put(c), RegistryError);

    auto low = a;
    low.status = Status::LowerBoundOnly;
    low.value = 25;
    CHECK_THROWS_AS(reg.put(low), RegistryError);
    low.value = 20;
    reg.put(low);
    CHECK(reg.get(a.claim)->value == 21);

    auto other = a;
    other.family = { Member{ "Co(8)", build(Tag::Comet, 8).graph } };
    CHECK_THROWS_AS(reg.put(other), RegistryError);
    CHECK_THROWS_AS(reg.require(Claim::turan(9, { PK::P }, 1)), RegistryError);
}

TEST_CASE("built-in registry passes its own checks")
{
    auto reg = Registry::known_facts();
    CHECK(reg.size() > 100);
    for (auto & w : verify_lower_bounds(reg)) {
        INFO(w.claim << " " << w.witness << " " << w.reason);
        CHECK(w.ok);
    }
    auto d = check_decrease(reg);
    CHECK(d.size() > 30);
    for (auto & c : d) {
        INFO(c.lower << " " << c.higher);
        CHECK(c.ok);
    }
    CHECK(reg.get(Claim::turan(12, { PK::P }, 3))->value == 32);
    CHECK(reg.get(Claim::turan(13, { PK::P }, 3))->value == 35);
    CHECK(reg.get(Claim::turan(16, { PK::P }, 4))->value == 58);
}

TEST_CASE("recheck catches a corrupted family")
{
    auto reg = Registry::known_facts();
    auto r = *reg.get(Claim::turan(12, { PK::P }, 3));
    CHECK(recheck(r, reg.get(Claim::turan(12, { PK::P }, 1))->family).empty());
    auto bad = r;
    bad.family[0].graph = build(Tag::Star, 12).graph;
    CHECK_FALSE(recheck(bad, reg.get(Claim::turan(12, { PK::P }, 1))->family).empty());
    bad = r;
    bad.family.push_back(bad.family[0]);
    CHECK_FALSE(recheck(bad, {}).empty());
}
