/* vim: set sw=4 sts=4 et : */

#ifndef LOOSE3_RAMSEY_HPP
#define LOOSE3_RAMSEY_HPP 1

#include <loose3/hypergraph.hpp>
#include <loose3/turan.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace loose3
{
    class ProofError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Hosts are named "K14", "K14-e" or "K9-2e#2" (":" is accepted in place of "#").
    auto parse_host(const std::string & label) -> Hypergraph3;

    /// Best name for a near-complete host, falling back to "H(n,m)".
    auto host_label(const Hypergraph3 & h) -> std::string;

    struct ColoringWitness
    {
        Hypergraph3 host{ 1 };
        int colours = 0;
        std::vector<int> assignment;    // colour of each host edge, host edges in colex order

        auto classes() const -> std::vector<Hypergraph3>;
    };

    /// Every edge coloured in [0, colours) and every class P-free.
    auto is_proper(const ColoringWitness & w) -> bool;

    enum class Verdict
    {
        Arrows,             // every colouring has a monochromatic P
        ProperColoring,     // a witness refutes arrowing
        Unknown             // budget exhausted
    };

    auto verdict_name(Verdict v) -> std::string;

    struct ExhaustiveResult
    {
        Verdict verdict = Verdict::Unknown;
        std::optional<ColoringWitness> witness;
        std::uint64_t nodes = 0;
        double seconds = 0.0;
    };

    /// Backtracking over colourings with forward checking; colour c+1 is only tried
    /// once colour c has been used.
    auto arrows_exhaustive(const Hypergraph3 & host, int colours, double budget_seconds) -> ExhaustiveResult;

    /// Star-peeling when host has at most colours + 5 vertices, otherwise exhaustive search.
    auto find_proper_coloring(const Hypergraph3 & host, int colours, double budget_seconds) -> ExhaustiveResult;

    /// The colouring of host (on at most colours + 5 vertices) whose first classes are the
    /// stars of the top vertices and whose last class lives on vertices 0..5.
    auto star_peeling(const Hypergraph3 & host, int colours) -> ColoringWitness;

    struct BipartiteReport
    {
        int splits = 0;                 // 6+6 splits of 12 vertices
        int max_overlap = 0;            // largest |K6uK6 copy ∩ Bip6x6|
        int maximisers = 0;             // splits attaining it
        long disjoint_pairs = 0;        // edge-disjoint pairs of maximiser intersections
        long disjoint_triples = 0;      // pairwise edge-disjoint triples (must be 0)
        int host_edges = 0;

        auto ok() const -> bool { return max_overlap == 36 && disjoint_triples == 0 && host_edges == 180; }
    };

    auto bipartite_check() -> BipartiteReport;

    struct Citation
    {
        std::string claim;
        std::optional<long> value;
        Status status = Status::Unknown;
        std::vector<std::string> family;
        bool family_complete = false;
    };

    struct Branch
    {
        std::string member;             // extremal graph the large class lies in
        std::string shape;              // "star", "comet" or "bipartite"
        std::vector<int> children;      // step indices
        long crossing = 0;              // bipartite: edges of the host between the halves, at least
        long full_classes = 0;          // bipartite: classes forced to exactly 36 edges, at least
    };

    struct ArrowStep
    {
        std::string label;
        Hypergraph3 host{ 1 };
        int colours = 0;
        std::string kind;               // "single-colour", "exceeds", "classify", "add-edges", "exhaustive"
        long edges = 0;
        long largest = 0;               // ceil(edges / colours)
        int order = 0;                  // classify: largest > ex^(order+1)
        std::vector<Citation> cites;
        std::vector<Branch> branches;
        std::optional<int> sub;         // add-edges: step proving a subgraph
        std::vector<Edge> witness;      // single-colour: a copy of P
        std::uint64_t nodes = 0;        // exhaustive: search nodes
    };

    struct ArrowCertificate
    {
        std::string host;
        int colours = 0;
        Verdict verdict = Verdict::Unknown;
        std::vector<ArrowStep> steps;   // steps[0] is the claim itself when verdict is Arrows
        std::optional<ColoringWitness> refutation;
        std::vector<std::string> gaps;
        std::optional<BipartiteReport> bipartite;
        Status status = Status::Unknown;
    };

    struct ProverOptions
    {
        double exhaustive_budget = 60.0;
        int exhaustive_max_n = 8;       // fall back to exhaustive search for hosts this small
        int exhaustive_max_colours = 2;
    };

    /// Keeps proved claims so later proofs (and the add-edges step) can reuse them.
    class Prover
    {
        private:
            const Registry & _registry;
            ProverOptions _options;
            std::vector<ArrowStep> _steps;
            std::map<std::pair<CanonicalKey, int>, int> _memo;
            std::map<std::pair<CanonicalKey, int>, std::string> _failed;
            std::vector<std::string> _gaps;
            std::optional<BipartiteReport> _bipartite;

            auto prove(const Hypergraph3 & host, int colours) -> std::optional<int>;
            auto classify(const Hypergraph3 & host, int colours, ArrowStep & step) -> bool;
            auto cite(const Claim & c) -> std::optional<Citation>;

        public:
            explicit Prover(const Registry & registry, ProverOptions options = {});

            auto certify(const Hypergraph3 & host, int colours) -> ArrowCertificate;
    };

    auto prove_arrowing(const std::string & host, int colours, const Registry & registry,
            ProverOptions options = {}) -> ArrowCertificate;

    /// Single-step certificate from arrows_exhaustive; the verifier re-runs it, so only
    /// hosts on at most 8 vertices with at most 2 colours verify.
    auto exhaustive_arrowing(const std::string & host, int colours, double budget_seconds) -> ArrowCertificate;

    struct VerificationReport
    {
        bool ok = true;
        std::vector<std::string> failures;
        Status status = Status::Unknown;
    };

    /// Re-checks arithmetic, citations against the registry, every deletion child, witnesses
    /// and the bipartite facts, without re-running searches.
    auto verify_certificate(const ArrowCertificate & cert, const Registry & registry) -> VerificationReport;

    struct RamseyResult
    {
        int colours = 0;
        int value = 0;                  // r + 6 when both halves hold
        ArrowCertificate upper;         // K_{r+6} arrows
        std::optional<ArrowCertificate> strengthened;   // K_{r+6}-e, proved first for r = 8
        ColoringWitness lower;          // proper colouring of K_{r+5}
        bool lower_ok = false;
    };

    auto ramsey(int colours, const Registry & registry, ProverOptions options = {}) -> RamseyResult;
}

#endif
