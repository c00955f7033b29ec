/* vim: set sw=4 sts=4 et : */

#ifndef LOOSE3_AUDIT_HPP
#define LOOSE3_AUDIT_HPP 1

#include <loose3/hypergraph.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace loose3
{
    /// Splits a {P,C}-free graph around a copy Q of P2 that misses some edge:
    /// U = V(Q) with apex x, W the rest, W0 the vertices isolated in H[W], W1 = W \ W0.
    struct Decomposition
    {
        Hypergraph3 host{ 1 };
        std::array<Edge, 2> q;
        int x = -1;
        VertexMask u = 0, w0 = 0, w1 = 0;

        std::vector<Edge> h_u, h_w, h0, h1;
        std::array<std::vector<Edge>, 3> f;                    // F^k by |h ∩ U \ {x}|
        std::array<std::array<std::vector<Edge>, 3>, 2> fi;    // F_i^k = F^k ∩ H_i
        std::vector<Edge> stray;        // edges of H0 ∪ H1 outside F^0 ∪ F^1 ∪ F^2

        auto z() const -> int { return std::popcount(w1); }
        auto s() const -> int { return std::popcount(w0); }
    };

    /// nullopt unless h is {P,C}-free and contains P2 ∪ K3. Q is the first P2 (edge pairs in
    /// colex order) that misses some edge.
    auto decompose(const Hypergraph3 & h) -> std::optional<Decomposition>;

    struct InequalityCheck
    {
        std::string name;
        double lhs = 0, rhs = 0;
        bool applicable = true;
        bool holds = true;
    };

    /// Evaluates HHH, F11-empty, F0-apex, r4, e5, e4, FORF, 4and2-F1, 4and2-F2 and nonseparable.
    auto check_inequalities(const Decomposition & d) -> std::vector<InequalityCheck>;

    /// Vertex pairs of `vertices` such that every edge contains both or neither.
    auto nonseparable_pairs(const Hypergraph3 & h, VertexMask vertices) -> int;

    enum class SampleShape
    {
        Any,
        StarInside      // edges avoiding the planted P2 all pass through one vertex
    };

    /// Randomised greedy {P,C}-free graphs containing a planted P2 ∪ K3; deterministic per seed.
    auto sample_pc_free(int n, std::uint64_t seed, int count, SampleShape shape = SampleShape::Any)
        -> std::vector<Hypergraph3>;

    struct AuditTally
    {
        long passed = 0, failed = 0, skipped = 0;
    };

    struct AuditSummary
    {
        int n = 0;
        int samples = 0;
        std::uint64_t seed = 0;
        std::map<std::string, AuditTally> tallies;
        std::vector<std::string> violations;    // "<check>: <lhs> > <rhs>" followed by the instance text

        auto clean() const -> bool { return violations.empty(); }
    };

    auto run_audit(int n, int samples, std::uint64_t seed, SampleShape shape = SampleShape::Any) -> AuditSummary;
}

#endif
