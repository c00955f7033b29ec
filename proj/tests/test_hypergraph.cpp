/* vim: set sw=4 sts=4 et : */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <loose3/hypergraph.hpp>

#include "oracle.hpp"

#include <cstdio>
#include <filesystem>

using namespace loose3;

TEST_CASE("colex rank enumerates triples in order")
{
    int r = 0;
    for (int c = 0 ; c < max_vertices ; ++c)
        for (int b = 0 ; b < c ; ++b)
            for (int a = 0 ; a < b ; ++a) {
                CHECK(triple_rank(a, b, c) == r);
                CHECK(triple_unrank(r) == Edge::make(a, b, c));
                ++r;
            }
    CHECK(r == max_slots);
    CHECK(slot_count(7) == 35);
    CHECK(binomial(16, 3) == 560);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("edges are normalised and validated")
{
    auto e = Edge::make(5, 1, 3);
    CHECK(e.v == std::array<int, 3>{ 1, 3, 5 });
    CHECK(e.contains(3));
    CHECK_FALSE(e.contains(2));
    CHECK(Edge::from_mask(e.mask()) == e);
    CHECK_THROWS_AS(Edge::make(1, 1, 2), GraphError);
    CHECK_THROWS_AS(Edge::make(-1, 1, 2), GraphError);
    CHECK(colex_less(Edge::make(0, 1, 3), Edge::make(0, 2, 3)));
    CHECK(colex_less(Edge::make(0, 2, 3), Edge::make(0, 1, 4)));
}

TEST_CASE("vertex range is enforced")
{
    CHECK_THROWS_AS(Hypergraph3(17), GraphError);
    Hypergraph3 h(5);
    CHECK_THROWS_AS(h.insert(Edge::make(0, 1, 5)), GraphError);
}

TEST_CASE("degrees, links and edge lists")
{
    auto k5 = complete_graph(5);
    CHECK(k5.size() == 10);
    CHECK(k5.degree(0) == 6);
    CHECK(k5.link(2).pairs.size() == 6);
    auto es = k5.edges();
    CHECK(std::is_sorted(es.begin(), es.end(), colex_less));

    auto h = remove_edge(k5, Edge::make(0, 1, 2));
    CHECK(h.size() == 9);
    CHECK(h.is_subgraph_of(k5));
    CHECK_FALSE(k5.is_subgraph_of(h));
    CHECK(add_edge(h, Edge::make(0, 1, 2)) == k5);
    CHECK(k5.complement().size() == 0);
}

TEST_CASE("relabel agrees with a direct image")
{
    std::mt19937_64 rng(7);
    for (int t = 0 ; t < 50 ; ++t) {
        int n = 3 + t % 10;
        auto h = oracle::random_graph(rng, n, 0.3);
        auto p = oracle::random_perm(rng, n);
        auto g = h.relabel(p);
        CHECK(g.size() == h.size());
        for (auto & e : h.edges())
            CHECK(g.has_edge(Edge::make(p[e.v[0]], p[e.v[1]], p[e.v[2]])));
    }
    Hypergraph3 h(4);
    std::vector<int> bad{ 0, 0, 1, 2 };
    CHECK_THROWS_AS(h.relabel(bad), GraphError);
}

TEST_CASE("components, unions and induced subgraphs")
{
    auto u = disjoint_union(complete_graph(4), complete_graph(3));
    CHECK(u.n() == 7);
    CHECK(u.size() == 5);
    auto cs = components(u);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0] == std::vector<int>{ 0, 1, 2, 3 });
    CHECK(cs[1] == std::vector<int>{ 4, 5, 6 });
    CHECK_FALSE(is_connected(u));
    CHECK(is_connected(complete_graph(5)));

    std::vector<int> keep{ 1, 2, 3, 4 };
    auto ind = induced(u, keep);
    CHECK(ind.n() == 4);
    CHECK(ind.size() == 1);
    CHECK(delete_vertex(complete_graph(6), 2) == complete_graph(5));
}

TEST_CASE("text format round trip")
{
    std::mt19937_64 rng(11);
    for (int t = 0 ; t < 30 ; ++t) {
        auto h = oracle::random_graph(rng, 1 + t % 16, 0.2);
        CHECK(parse_text(to_text(h)) == h);
    }
    CHECK(to_text(complete_graph(3)) == "3 1\n0 1 2\n");
    CHECK(parse_text("4 2\n0 1 2\n0 1 3\n").size() == 2);
    CHECK_THROWS_AS(parse_text("4 2\n0 1 3\n0 1 2\n"), GraphError);
    CHECK_THROWS_AS(parse_text("4 1\n2 1 0\n"), GraphError);
    CHECK_THROWS_AS(parse_text("4 1\n0 1 2\n0 1 3\n"), GraphError);
    CHECK_THROWS_AS(parse_text("4 2\n0 1 2\n"), GraphError);
    CHECK_THROWS_AS(parse_text("3 1\n0 1 3\n"), GraphError);
    CHECK_THROWS_AS(parse_text("x"), GraphError);

    auto path = (std::filesystem::temp_directory_path() / "loose3_text_test.txt").string();
    write_graph_file(path, complete_graph(6));
    CHECK(read_graph_file(path) == complete_graph(6));
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_graph_file(path), GraphError);
}
