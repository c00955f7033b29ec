/* vim: set sw=4 sts=4 et : */

#ifndef LOOSE3_TURAN_HPP
#define LOOSE3_TURAN_HPP 1

#include <loose3/canon.hpp>
#include <loose3/hypergraph.hpp>
#include <loose3/patterns.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace loose3
{
    class RegistryError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    class SearchLimitError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    enum class Status
    {
        SearchVerified,
        PaperAsserted,
        LowerBoundOnly,
        Unknown
    };

    auto status_name(Status s) -> std::string;
    auto parse_status(const std::string & s) -> Status;

    /// Larger is weaker; a certificate is only as strong as its weakest citation.
    auto weakness(Status s) -> int;
    auto weakest(Status a, Status b) -> Status;

    struct Claim
    {
        int n = 0;
        std::vector<PatternKind> forbid;        // sorted, no repeats
        int order = 1;
        std::optional<PatternKind> require;
        bool connected = false;

        static auto turan(int n, std::vector<PatternKind> forbid, int order) -> Claim;
        static auto conditional(int n, std::vector<PatternKind> forbid, std::optional<PatternKind> require,
                bool connected) -> Claim;

        auto is_conditional() const -> bool { return require || connected; }

        /// "ex3(12;P)", "ex(8;{P,C}|M)", "ex_conn(7;P|C)".
        auto label() const -> std::string;
        static auto parse(const std::string & label) -> Claim;

        auto operator== (const Claim &) const -> bool = default;
        auto operator<=> (const Claim &) const = default;
    };

    auto forbid_name(const std::vector<PatternKind> & forbid) -> std::string;

    /// "P", "P,C", "{P,C}" are all accepted.
    auto parse_forbid(const std::string & s) -> std::vector<PatternKind>;

    struct Member
    {
        std::string label;
        Hypergraph3 graph;
    };

    struct SearchStats
    {
        std::uint64_t nodes = 0;
        std::uint64_t prunes = 0;
        std::uint64_t candidates = 0;
        double seconds = 0.0;
    };

    struct TuranResult
    {
        Claim claim;
        std::optional<long> value;              // nullopt when no qualifying graph exists
        std::vector<Member> family;             // sorted by canonical key
        bool family_complete = true;
        Status status = Status::Unknown;
        SearchStats stats;
        std::vector<std::string> excluded_hosts;
        std::vector<std::string> notes;

        /// Sorted.
        auto family_keys() const -> std::vector<CanonicalKey>;
    };

    enum class Engine
    {
        Extension,      // vertex-by-vertex generation with isomorph rejection
        SlotBranch      // branch over edge slots, labelled; small n only
    };

    struct SearchOptions
    {
        int jobs = 1;
        double budget_seconds = 600.0;
        std::uint64_t seed = 0;
        Engine engine = Engine::Extension;
        int search_limit = 9;
        std::optional<Hypergraph3> seed_graph;  // extra lower-bound witness, any labelling
        bool use_cache = true;                  // reuse generated levels across calls in this process
    };

    /// Default budget: the LOOSE3_BUDGET environment variable if set, else 600 seconds.
    auto default_budget() -> double;

    class Registry
    {
        private:
            mutable std::mutex _lock;
            std::map<Claim, TuranResult> _facts;

        public:
            Registry() = default;
            Registry(const Registry & other);
            auto operator= (const Registry & other) -> Registry &;

            /// Closed-form values and witnesses for every result the registry knows, n <= 16.
            static auto known_facts() -> Registry;

            auto get(const Claim & c) const -> const TuranResult *;
            auto require(const Claim & c) const -> const TuranResult &;

            /// Adds or upgrades an entry. Throws RegistryError when values or complete
            /// families disagree with what is already stored.
            auto put(const TuranResult & r) -> void;

            auto entries() const -> std::vector<TuranResult>;
            auto size() const -> std::size_t;
    };

    /// One lower-bound verification of a registry witness.
    struct WitnessCheck
    {
        std::string claim;
        std::string witness;
        bool ok;
        std::string reason;
    };

    /// Every witness has the stated edge count, avoids the forbidden family, meets the
    /// side conditions, and for order claims escapes all lower-order families.
    auto verify_lower_bounds(const Registry & registry) -> std::vector<WitnessCheck>;

    struct DecreaseCheck
    {
        std::string lower, higher;
        long lower_value, higher_value;
        bool ok;
    };

    auto check_decrease(const Registry & registry) -> std::vector<DecreaseCheck>;

    /// Exhaustive optimum for the claim's forbidden family and side conditions,
    /// with the listed hosts excluded (every optimiser must escape all of them).
    auto max_f_free(const Claim & claim, const std::vector<Member> & excluded, const SearchOptions & options)
        -> TuranResult;

    /// Computes orders 1..s at n, each against the union of the lower families, storing each
    /// result in the registry. Throws RegistryError if the decrease inequality fails.
    auto higher_order(int n, const std::vector<PatternKind> & forbid, int s, Registry & registry,
            const SearchOptions & options) -> TuranResult;

    auto conditional(int n, const std::vector<PatternKind> & forbid, std::optional<PatternKind> require,
            bool connected, Registry & registry, const SearchOptions & options) -> TuranResult;

    /// All F-free graphs on n vertices with at least `threshold` edges, one per isomorphism class,
    /// sorted by canonical key. Exposed for tests.
    auto generate_f_free(int n, const std::vector<PatternKind> & forbid, int threshold, const SearchOptions & options,
            SearchStats * stats = nullptr) -> std::vector<Hypergraph3>;

    /// Checks a result's family against its claim without searching.
    auto recheck(const TuranResult & r, const std::vector<Member> & excluded) -> std::vector<std::string>;
}

#endif
