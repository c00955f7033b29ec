/* vim: set sw=4 sts=4 et : */

#include <loose3/turan.hpp>
#include <loose3/constructions.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

namespace loose3
{
    namespace
    {
        using Clock = std::chrono::steady_clock;
        using Forbid = std::vector<PatternKind>;

        struct Expired
        {
        };

        struct Context
        {
            Clock::time_point deadline;
            std::atomic<bool> expired{ false };
            std::atomic<std::uint64_t> nodes{ 0 }, prunes{ 0 };
            int jobs = 1;
            bool use_cache = true;

            auto check() -> void
            {
                if (expired.load(std::memory_order_relaxed) || Clock::now() > deadline) {
                    expired = true;
                    throw Expired{};
                }
            }
        };

        auto normalise(Forbid f) -> Forbid
        {
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
            return f;
        }

        auto f_free(std::span<const VertexMask> masks, const Forbid & forbid) -> bool
        {
            for (auto k : forbid)
                if (masks_contain(masks, k))
                    return false;
            return true;
        }

        auto allowed(std::span<const VertexMask> existing, VertexMask e, const Forbid & forbid) -> bool
        {
            for (auto k : forbid)
                if (creates_pattern(existing, e, k))
                    return false;
            return true;
        }

        auto graph_from_masks(int n, std::span<const VertexMask> masks) -> Hypergraph3
        {
            EdgeSet bits;
            for (auto m : masks)
                bits.set(Edge::from_mask(m).rank());
            return Hypergraph3(n, bits);
        }

        // Levels of the generation tree, shared across calls in one process.
        struct CacheEntry
        {
            int threshold;
            std::vector<CanonicalKey> keys;
        };

        std::mutex cache_lock;
        std::map<std::pair<Forbid, int>, CacheEntry> cache;

        auto at_least(const std::vector<CanonicalKey> & keys, int threshold) -> std::vector<CanonicalKey>
        {
            std::vector<CanonicalKey> result;
            for (auto & k : keys)
                if (k.bits.count() >= threshold)
                    result.push_back(k);
            return result;
        }

        auto brute_level(int n, const Forbid & forbid, int threshold) -> std::vector<CanonicalKey>
        {
            int slots = slot_count(n);
            std::set<CanonicalKey> keys;
            std::vector<VertexMask> masks;
            for (std::uint32_t subset = 0 ; subset < (1u << slots) ; ++subset) {
                if (std::popcount(subset) < threshold)
                    continue;
                masks.clear();
                for (int s = 0 ; s < slots ; ++s)
                    if (subset & (1u << s))
                        masks.push_back(triple_unrank(s).mask());
                if (f_free(masks, forbid))
                    keys.insert(canonical_key(graph_from_masks(n, masks)));
            }
            return { keys.begin(), keys.end() };
        }

        // Adds vertex n-1 to a parent on n-1 vertices in every way that keeps the graph
        // F-free, reaches the threshold, and leaves the new vertex of minimum degree.
        struct Extender
        {
            int n;
            const Forbid & forbid;
            Context & ctx;
            std::vector<CanonicalKey> & out;

            std::vector<VertexMask> masks;
            std::vector<std::pair<int, int>> pairs;
            std::array<int, max_vertices> base_degree{}, extra{};
            int need = 0, cap = 0, chosen = 0;
            std::uint64_t nodes = 0, prunes = 0;

            auto run(const Hypergraph3 & parent, int threshold) -> void
            {
                masks = parent.edge_masks();
                auto degrees = parent.degrees();
                for (int u = 0 ; u < n - 1 ; ++u)
                    base_degree[u] = degrees[u];
                extra.fill(0);
                pairs.clear();
                for (int b = 1 ; b < n - 1 ; ++b)
                    for (int a = 0 ; a < b ; ++a)
                        pairs.emplace_back(a, b);

                int m = parent.size();
                need = std::max(0, threshold - m);
                cap = (3 * m) / (n - 3);
                chosen = 0;
                if (need > cap)
                    return;
                dfs(0);
            }

            auto dfs(std::size_t idx) -> void
            {
                if ((++nodes & 4095) == 0)
                    ctx.check();
                if (chosen + static_cast<int>(pairs.size() - idx) < need) {
                    ++prunes;
                    return;
                }
                if (idx == pairs.size()) {
                    leaf();
                    return;
                }

                auto [a, b] = pairs[idx];
                VertexMask e = (1u << a) | (1u << b) | (1u << (n - 1));
                if (chosen < cap && allowed(masks, e, forbid)) {
                    masks.push_back(e);
                    ++chosen, ++extra[a], ++extra[b];
                    dfs(idx + 1);
                    --chosen, --extra[a], --extra[b];
                    masks.pop_back();
                }
                dfs(idx + 1);
            }

            auto leaf() -> void
            {
                for (int u = 0 ; u < n - 1 ; ++u)
                    if (base_degree[u] + extra[u] < chosen)
                        return;
                out.push_back(canonical_key(graph_from_masks(n, masks)));
            }
        };

        auto extend_level(const std::vector<CanonicalKey> & parents, int n, const Forbid & forbid, int threshold,
                Context & ctx) -> std::vector<CanonicalKey>
        {
            std::atomic<std::size_t> next{ 0 };
            int workers = std::max(1, std::min<int>(ctx.jobs, static_cast<int>(parents.size())));
            std::vector<std::vector<CanonicalKey>> outputs(workers);
            std::vector<std::exception_ptr> errors(workers);

            auto work = [&] (int w) {
                try {
                    Extender ext{ n, forbid, ctx, outputs[w], {}, {}, {}, {}, 0, 0, 0, 0, 0 };
                    for (std::size_t i ; (i = next.fetch_add(1)) < parents.size() ; ) {
                        ext.run(Hypergraph3(n - 1, parents[i].bits), threshold);
                        if (outputs[w].size() > 4096) {
                            std::sort(outputs[w].begin(), outputs[w].end());
                            outputs[w].erase(std::unique(outputs[w].begin(), outputs[w].end()), outputs[w].end());
                        }
                    }
                    ctx.nodes += ext.nodes;
                    ctx.prunes += ext.prunes;
                }
                catch (...) {
                    errors[w] = std::current_exception();
                    ctx.expired = true;
                }
            };

            if (workers == 1)
                work(0);
            else {
                std::vector<std::thread> threads;
                for (int w = 0 ; w < workers ; ++w)
                    threads.emplace_back(work, w);
                for (auto & t : threads)
                    t.join();
            }
            for (auto & e : errors)
                if (e)
                    std::rethrow_exception(e);

            std::vector<CanonicalKey> all;
            for (auto & o : outputs)
                all.insert(all.end(), o.begin(), o.end());
            std::sort(all.begin(), all.end());
            all.erase(std::unique(all.begin(), all.end()), all.end());
            return all;
        }

        auto level(int n, const Forbid & forbid, int threshold, Context & ctx) -> std::vector<CanonicalKey>
        {
            threshold = std::max(threshold, 0);
            if (threshold > slot_count(n))
                return {};

            auto key = std::make_pair(forbid, n);
            if (ctx.use_cache) {
                std::lock_guard<std::mutex> guard(cache_lock);
                if (auto it = cache.find(key) ; it != cache.end() && it->second.threshold <= threshold)
                    return at_least(it->second.keys, threshold);
            }

            std::vector<CanonicalKey> result;
            if (n <= 5)
                result = brute_level(n, forbid, threshold);
            else {
                int parent_threshold = threshold - (3 * threshold) / n;
                auto parents = level(n - 1, forbid, parent_threshold, ctx);
                result = extend_level(parents, n, forbid, threshold, ctx);
            }

            if (ctx.use_cache) {
                std::lock_guard<std::mutex> guard(cache_lock);
                auto it = cache.find(key);
                if (it == cache.end() || it->second.threshold > threshold)
                    cache[key] = CacheEntry{ threshold, result };
            }
            return result;
        }

        // Labelled branching over edge slots in colex order.
        struct SlotBrancher
        {
            int n;
            const Forbid & forbid;
            int threshold;
            Context & ctx;
            std::set<CanonicalKey> out;
            std::vector<VertexMask> masks;
            std::uint64_t nodes = 0, prunes = 0;

            auto dfs(int slot) -> void
            {
                if ((++nodes & 4095) == 0)
                    ctx.check();
                int remaining = slot_count(n) - slot;
                if (static_cast<int>(masks.size()) + remaining < threshold) {
                    ++prunes;
                    return;
                }
                if (remaining == 0) {
                    out.insert(canonical_key(graph_from_masks(n, masks)));
                    return;
                }
                auto e = triple_unrank(slot).mask();
                if (allowed(masks, e, forbid)) {
                    masks.push_back(e);
                    dfs(slot + 1);
                    masks.pop_back();
                }
                dfs(slot + 1);
            }
        };

        auto slot_level(int n, const Forbid & forbid, int threshold, Context & ctx) -> std::vector<CanonicalKey>
        {
            if (n > 7)
                throw SearchLimitError("the slot-branching engine is limited to n <= 7");
            SlotBrancher b{ n, forbid, std::max(threshold, 0), ctx, {}, {}, 0, 0 };
            b.dfs(0);
            ctx.nodes += b.nodes;
            ctx.prunes += b.prunes;
            return { b.out.begin(), b.out.end() };
        }

        auto double_book(int n) -> Hypergraph3
        {
            Hypergraph3 h(n);
            for (int w = 2 ; w < n ; ++w)
                h.insert(Edge::make(0, 1, w));
            for (int w = 0 ; w < n ; ++w)
                if (w != 2 && w != 3)
                    h.insert(Edge::make(2, 3, w));
            return h;
        }

        auto member(Tag t, int n, int variant = 0) -> Member
        {
            auto c = build(t, n, variant);
            return Member{ c.label(), c.graph };
        }

        auto union_member(const std::string & label, const Hypergraph3 & a, const Hypergraph3 & b) -> Member
        {
            return Member{ label, disjoint_union(a, b) };
        }

        auto label_for(const Hypergraph3 & h, std::size_t index) -> std::string
        {
            if (auto name = identify(h))
                return *name;
            return "#" + std::to_string(index + 1);
        }

        auto satisfies_side_conditions(const Hypergraph3 & h, const Claim & claim) -> bool
        {
            if (claim.require && ! contains(h, *claim.require))
                return false;
            if (claim.connected && ! is_connected(h))
                return false;
            return true;
        }

        auto escapes(const Hypergraph3 & h, const std::vector<Member> & excluded) -> bool
        {
            for (auto & x : excluded)
                if (is_sub_iso(h, x.graph))
                    return false;
            return true;
        }

        auto random_greedy(int n, const Claim & claim, std::mt19937_64 & rng) -> Hypergraph3
        {
            std::vector<int> perm(n);
            for (int i = 0 ; i < n ; ++i)
                perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);

            std::vector<VertexMask> masks;
            if (claim.require) {
                auto g = Pattern::named(*claim.require).graph();
                if (g.n() <= n)
                    for (auto & e : g.edges())
                        masks.push_back((1u << perm[e.v[0]]) | (1u << perm[e.v[1]]) | (1u << perm[e.v[2]]));
                if (! f_free(masks, claim.forbid))
                    masks.clear();
            }

            std::vector<int> order(slot_count(n));
            for (int i = 0 ; i < slot_count(n) ; ++i)
                order[i] = i;
            std::shuffle(order.begin(), order.end(), rng);
            for (int s : order) {
                auto e = triple_unrank(s).mask();
                if (std::find(masks.begin(), masks.end(), e) == masks.end() && allowed(masks, e, claim.forbid))
                    masks.push_back(e);
            }
            return graph_from_masks(n, masks);
        }

        auto seed_graphs(const Claim & claim, const SearchOptions & options) -> std::vector<Hypergraph3>
        {
            int n = claim.n;
            std::vector<Hypergraph3> seeds;
            if (options.seed_graph && options.seed_graph->n() == n)
                seeds.push_back(*options.seed_graph);
            for (auto & c : constructions_on(n))
                seeds.push_back(c.graph);
            for (int a = 1 ; a < n ; ++a) {
                seeds.push_back(disjoint_union(complete_graph(a), complete_graph(n - a)));
                if (a >= 3)
                    seeds.push_back(disjoint_union(build(Tag::Star, a).graph, Hypergraph3(n - a)));
            }
            if (n >= 4)
                seeds.push_back(double_book(n));

            std::mt19937_64 rng(options.seed ^ (static_cast<std::uint64_t>(n) << 32));
            for (int i = 0 ; i < 64 ; ++i)
                seeds.push_back(random_greedy(n, claim, rng));
            return seeds;
        }

        auto fact(Claim c, std::optional<long> value, std::vector<Member> family, bool complete) -> TuranResult
        {
            TuranResult r;
            r.claim = std::move(c);
            r.value = value;
            r.family = std::move(family);
            r.family_complete = complete;
            r.status = Status::PaperAsserted;
            return r;
        }

        auto same_family(const TuranResult & a, const TuranResult & b) -> bool
        {
            auto ka = a.family_keys(), kb = b.family_keys();
            std::sort(ka.begin(), ka.end());
            std::sort(kb.begin(), kb.end());
            return ka == kb;
        }
    }

    auto status_name(Status s) -> std::string
    {
        switch (s) {
            case Status::SearchVerified: return "search-verified";
            case Status::PaperAsserted:  return "paper-asserted";
            case Status::LowerBoundOnly: return "lower-bound-only";
            case Status::Unknown:        return "UNKNOWN";
        }
        return "UNKNOWN";
    }

    auto parse_status(const std::string & s) -> Status
    {
        for (auto st : { Status::SearchVerified, Status::PaperAsserted, Status::LowerBoundOnly, Status::Unknown })
            if (status_name(st) == s)
                return st;
        throw RegistryError("unknown status '" + s + "'");
    }

    auto weakness(Status s) -> int
    {
        return static_cast<int>(s);
    }

    auto weakest(Status a, Status b) -> Status
    {
        return weakness(a) >= weakness(b) ? a : b;
    }

    auto default_budget() -> double
    {
        if (auto env = std::getenv("LOOSE3_BUDGET")) {
            try {
                auto v = std::stod(env);
                if (v > 0)
                    return v;
            }
            catch (const std::exception &) {
            }
        }
        return 600.0;
    }

    auto Claim::turan(int n, std::vector<PatternKind> forbid, int order) -> Claim
    {
        if (order < 1)
            throw RegistryError("order must be at least 1");
        Claim c;
        c.n = n;
        c.forbid = normalise(std::move(forbid));
        c.order = order;
        return c;
    }

    auto Claim::conditional(int n, std::vector<PatternKind> forbid, std::optional<PatternKind> require,
            bool connected) -> Claim
    {
        Claim c;
        c.n = n;
        c.forbid = normalise(std::move(forbid));
        c.require = require;
        c.connected = connected;
        return c;
    }

    auto forbid_name(const std::vector<PatternKind> & forbid) -> std::string
    {
        auto f = normalise(forbid);
        if (f.size() == 1)
            return pattern_name(f[0]);
        std::string s = "{";
        for (std::size_t i = 0 ; i < f.size() ; ++i)
            s += (i ? "," : "") + pattern_name(f[i]);
        return s + "}";
    }

    auto parse_forbid(const std::string & text) -> std::vector<PatternKind>
    {
        std::string s = text;
        if (! s.empty() && s.front() == '{' && s.back() == '}')
            s = s.substr(1, s.size() - 2);
        std::vector<PatternKind> result;
        std::stringstream in(s);
        std::string part;
        while (std::getline(in, part, ','))
            result.push_back(parse_pattern_kind(part));
        if (result.empty())
            throw RegistryError("empty forbidden family");
        for (auto k : result)
            if (k == PatternKind::Generic || k == PatternKind::P2)
                throw RegistryError("forbidden family must use P, C, M or P2uK3");
        return normalise(result);
    }

    auto Claim::label() const -> std::string
    {
        std::string f = forbid_name(forbid);
        if (! is_conditional())
            return "ex" + std::to_string(order) + "(" + std::to_string(n) + ";" + f + ")";
        std::string s = connected ? "ex_conn(" : "ex(";
        s += std::to_string(n) + ";" + f;
        if (require)
            s += "|" + pattern_name(*require);
        return s + ")";
    }

    auto Claim::parse(const std::string & label) -> Claim
    {
        static const std::regex order_form(R"(ex([1-9])\((\d+);([^|)]+)\))");
        static const std::regex cond_form(R"(ex(_conn)?\((\d+);([^|)]+)(\|([A-Za-z0-9]+))?\))");
        std::smatch m;
        if (std::regex_match(label, m, order_form))
            return turan(std::stoi(m[2]), parse_forbid(m[3]), std::stoi(m[1]));
        if (std::regex_match(label, m, cond_form)) {
            std::optional<PatternKind> req;
            if (m[5].matched)
                req = parse_pattern_kind(m[5]);
            bool conn = m[1].matched;
            if (! req && ! conn)
                throw RegistryError("claim '" + label + "' has no condition; write ex1(n;F)");
            return conditional(std::stoi(m[2]), parse_forbid(m[3]), req, conn);
        }
        throw RegistryError("cannot parse claim '" + label + "'");
    }

    auto TuranResult::family_keys() const -> std::vector<CanonicalKey>
    {
        std::vector<CanonicalKey> keys;
        for (auto & m : family)
            keys.push_back(canonical_key(m.graph));
        std::sort(keys.begin(), keys.end());
        return keys;
    }

    Registry::Registry(const Registry & other)
    {
        std::lock_guard<std::mutex> guard(other._lock);
        _facts = other._facts;
    }

    auto Registry::operator= (const Registry & other) -> Registry &
    {
        if (this != &other) {
            std::scoped_lock guard(_lock, other._lock);
            _facts = other._facts;
        }
        return *this;
    }

    auto Registry::get(const Claim & c) const -> const TuranResult *
    {
        std::lock_guard<std::mutex> guard(_lock);
        auto it = _facts.find(c);
        return it == _facts.end() ? nullptr : &it->second;
    }

    auto Registry::require(const Claim & c) const -> const TuranResult &
    {
        if (auto * r = get(c))
            return *r;
        throw RegistryError("registry has no entry for " + c.label());
    }

    auto Registry::put(const TuranResult & r) -> void
    {
        std::lock_guard<std::mutex> guard(_lock);
        auto it = _facts.find(r.claim);
        if (it == _facts.end()) {
            _facts.emplace(r.claim, r);
            return;
        }

        auto & old = it->second;
        auto exact = [] (const TuranResult & x) {
            return x.status == Status::SearchVerified || x.status == Status::PaperAsserted;
        };
        auto conflict = [&] (const std::string & why) {
            throw RegistryError("conflicting entries for " + r.claim.label() + ": " + why);
        };

        if (! exact(r)) {
            if (exact(old) && r.value && (! old.value || *r.value > *old.value))
                conflict("lower bound " + std::to_string(*r.value) + " exceeds the recorded value");
            if (! exact(old) && r.value && (! old.value || *r.value > *old.value))
                old = r;
            return;
        }

        if (! exact(old)) {
            if (old.value && (! r.value || *r.value < *old.value))
                conflict("value below the recorded lower bound");
            old = r;
            return;
        }

        if (r.value != old.value)
            conflict((r.value ? std::to_string(*r.value) : std::string("undefined")) + " vs "
                    + (old.value ? std::to_string(*old.value) : std::string("undefined")));
        if (r.family_complete && old.family_complete && ! same_family(r, old))
            conflict("extremal families differ");
        if (weakness(r.status) < weakness(old.status)
                || (r.status == old.status && r.family_complete && ! old.family_complete)) {
            auto notes = old.notes;
            old = r;
            for (auto & n : notes)
                if (std::find(old.notes.begin(), old.notes.end(), n) == old.notes.end())
                    old.notes.push_back(n);
        }
    }

    auto Registry::entries() const -> std::vector<TuranResult>
    {
        std::lock_guard<std::mutex> guard(_lock);
        std::vector<TuranResult> result;
        for (auto & [_, r] : _facts)
            result.push_back(r);
        return result;
    }

    auto Registry::size() const -> std::size_t
    {
        std::lock_guard<std::mutex> guard(_lock);
        return _facts.size();
    }

    auto Registry::known_facts() -> Registry
    {
        static const Registry facts = [] {
            Registry reg;
            using PK = PatternKind;
            auto put = [&] (TuranResult r) { reg._facts.emplace(r.claim, std::move(r)); };

            for (int n = 3 ; n <= max_vertices ; ++n) {
                auto c = [&] (int s) { return Claim::turan(n, { PK::P }, s); };

                if (n <= 6)
                    put(fact(c(1), binomial(n, 3), { member(Tag::K, n) }, true));
                else if (n == 7)
                    put(fact(c(1), 20, { union_member("K6uK1", complete_graph(6), Hypergraph3(1)) }, true));
                else
                    put(fact(c(1), binomial(n - 1, 2), { member(Tag::Star, n) }, true));

                if (n <= 6) {
                    for (int s = 2 ; s <= 4 ; ++s) {
                        auto r = fact(c(s), std::nullopt, {}, true);
                        r.notes.push_back("every P-free graph on at most 6 vertices lies in the complete graph");
                        put(r);
                    }
                    continue;
                }

                if (n == 7)
                    put(fact(c(2), 15, { member(Tag::Star, 7) }, true));
                else if (n <= 12)
                    put(fact(c(2), 20 + binomial(n - 6, 3), { member(Tag::K6UnionK, n) }, true));
                else if (n == 13)
                    put(fact(c(2), 40, { member(Tag::TwoK6UnionK1, 13), member(Tag::Comet, 13) }, true));
                else
                    put(fact(c(2), 4 + binomial(n - 4, 2), { member(Tag::Comet, n) }, true));

                if (n <= 10)
                    put(fact(c(3), 3 * n - 8, { member(Tag::G1, n), member(Tag::G2, n) }, true));
                else if (n == 11)
                    put(fact(c(3), 25, { member(Tag::G1, n), member(Tag::G2, n), member(Tag::Comet, n) }, true));
                else if (n == 12)
                    put(fact(c(3), 32, { member(Tag::Comet, n) }, true));
                else if (n <= 14)
                    put(fact(c(3), 20 + binomial(n - 7, 2), { member(Tag::K6UnionStar, n) }, true));
                else
                    put(fact(c(3), 4 + binomial(n - 5, 2), { member(Tag::K4UnionStar, n) }, true));

                switch (n) {
                    case 7:
                        put(fact(c(4), 12, { member(Tag::G3, 7), member(Tag::K5Plus2, 7) }, true));
                        break;
                    case 8:
                    case 9:
                    case 11:
                        put(fact(c(4), 2 * n - 2, { member(Tag::G3, n) }, true));
                        break;
                    case 10:
                        put(fact(c(4), 20, { union_member("K5uK5", complete_graph(5), complete_graph(5)) }, true));
                        break;
                    case 12:
                        put(fact(c(4), 28, { member(Tag::G1, 12), member(Tag::G2, 12) }, true));
                        break;
                    case 13:
                        put(fact(c(4), 33, {
                                    union_member("K6uG1(7)", complete_graph(6), build(Tag::G1, 7).graph),
                                    union_member("K6uG2(7)", complete_graph(6), build(Tag::G2, 7).graph) }, true));
                        break;
                    case 14:
                        put(fact(c(4), 40, {
                                    union_member("2K6u2K1", build(Tag::TwoK6UnionK1, 13).graph, Hypergraph3(1)),
                                    member(Tag::K4UnionStar, 14) }, true));
                        break;
                    case 15:
                        put(fact(c(4), 48, { member(Tag::Rocket, 15), member(Tag::K6UnionStar, 15) }, true));
                        break;
                    default:
                        put(fact(c(4), 3 + binomial(n - 5, 2), { member(Tag::Rocket, n) }, true));
                        break;
                }
            }

            for (int n = 7 ; n <= max_vertices ; ++n) {
                put(fact(Claim::turan(n, { PK::M }, 1), binomial(n - 1, 2), { member(Tag::Star, n) }, true));
                put(fact(Claim::turan(n, { PK::M }, 2), 3 * n - 8, { member(Tag::G1, n), member(Tag::G2, n) }, true));
                put(fact(Claim::turan(n, { PK::M }, 3), 2 * n - 2, { member(Tag::G3, n) }, true));
            }

            for (int n = 6 ; n <= max_vertices ; ++n)
                put(fact(Claim::turan(n, { PK::C }, 1), binomial(n - 1, 2), { member(Tag::Star, n) }, n >= 8));

            for (int n = 7 ; n <= max_vertices ; ++n)
                put(fact(Claim::conditional(n, { PK::P }, PK::C, true), 3 * n - 8,
                            { member(Tag::G1, n), member(Tag::G2, n) }, true));

            for (int n = 6 ; n <= max_vertices ; ++n) {
                auto book = Member{ "DB(" + std::to_string(n) + ")", double_book(n) };
                auto pc = Claim::conditional(n, { PK::P, PK::C }, PK::M, false);
                if (n <= 9)
                    put(fact(pc, 2 * n - 4, { book }, false));
                else if (n == 10)
                    put(fact(pc, 20, { union_member("K5uK5", complete_graph(5), complete_graph(5)) }, false));
                else
                    put(fact(pc, 4 + binomial(n - 4, 2), { member(Tag::Comet, n) }, true));

                put(fact(Claim::conditional(n, { PK::P, PK::C, PK::P2K3 }, PK::M, false), 2 * n - 4, { book }, false));
            }
            return reg;
        }();
        return facts;
    }

    auto verify_lower_bounds(const Registry & registry) -> std::vector<WitnessCheck>
    {
        std::vector<WitnessCheck> checks;
        for (auto & r : registry.entries()) {
            if (! r.value)
                continue;
            for (auto & m : r.family) {
                WitnessCheck c{ r.claim.label(), m.label, true, "" };
                auto fail = [&] (const std::string & why) {
                    if (c.ok) {
                        c.ok = false;
                        c.reason = why;
                    }
                };
                if (m.graph.n() != r.claim.n)
                    fail("witness has " + std::to_string(m.graph.n()) + " vertices");
                if (m.graph.size() != *r.value)
                    fail("witness has " + std::to_string(m.graph.size()) + " edges");
                for (auto k : r.claim.forbid)
                    if (contains(m.graph, k))
                        fail("witness contains " + pattern_name(k));
                if (! satisfies_side_conditions(m.graph, r.claim))
                    fail("witness misses the side condition");
                if (! r.claim.is_conditional())
                    for (int s = 1 ; s < r.claim.order ; ++s) {
                        auto * lower = registry.get(Claim::turan(r.claim.n, r.claim.forbid, s));
                        if (! lower) {
                            fail("no entry for order " + std::to_string(s));
                            continue;
                        }
                        for (auto & host : lower->family)
                            if (is_sub_iso(m.graph, host.graph))
                                fail("witness lies in " + host.label + " from " + lower->claim.label());
                    }
                checks.push_back(c);
            }
        }
        return checks;
    }

    auto check_decrease(const Registry & registry) -> std::vector<DecreaseCheck>
    {
        std::vector<DecreaseCheck> checks;
        for (auto & r : registry.entries()) {
            if (r.claim.is_conditional() || r.claim.order < 2 || ! r.value)
                continue;
            auto * lower = registry.get(Claim::turan(r.claim.n, r.claim.forbid, r.claim.order - 1));
            if (! lower || ! lower->value)
                continue;
            checks.push_back(DecreaseCheck{ lower->claim.label(), r.claim.label(), *lower->value, *r.value,
                    *r.value < *lower->value });
        }
        return checks;
    }

    auto generate_f_free(int n, const std::vector<PatternKind> & forbid, int threshold, const SearchOptions & options,
            SearchStats * stats) -> std::vector<Hypergraph3>
    {
        Context ctx;
        ctx.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                std::chrono::duration<double>(options.budget_seconds));
        ctx.jobs = options.jobs;
        ctx.use_cache = options.use_cache;
        auto f = normalise(forbid);
        auto start = Clock::now();
        std::vector<CanonicalKey> keys;
        try {
            keys = options.engine == Engine::SlotBranch ? slot_level(n, f, threshold, ctx) : level(n, f, threshold, ctx);
        }
        catch (const Expired &) {
            throw SearchLimitError("budget exhausted while generating graphs");
        }
        std::vector<Hypergraph3> result;
        for (auto & k : keys)
            result.emplace_back(n, k.bits);
        if (stats) {
            stats->nodes = ctx.nodes;
            stats->prunes = ctx.prunes;
            stats->candidates = keys.size();
            stats->seconds = std::chrono::duration<double>(Clock::now() - start).count();
        }
        return result;
    }

    auto max_f_free(const Claim & claim, const std::vector<Member> & excluded, const SearchOptions & options)
        -> TuranResult
    {
        int limit = std::min(options.search_limit, max_vertices);
        if (claim.n < 1 || claim.n > max_vertices)
            throw SearchLimitError("n must lie in 1..16");
        if (claim.n > limit)
            throw SearchLimitError("n = " + std::to_string(claim.n) + " exceeds the search limit "
                    + std::to_string(limit));
        if (claim.forbid.empty())
            throw SearchLimitError("forbidden family is empty");

        int n = claim.n;
        auto start = Clock::now();
        Context ctx;
        ctx.deadline = start + std::chrono::duration_cast<Clock::duration>(
                std::chrono::duration<double>(options.budget_seconds));
        ctx.jobs = std::max(1, options.jobs);
        ctx.use_cache = options.use_cache;

        TuranResult result;
        result.claim = claim;
        for (auto & x : excluded)
            result.excluded_hosts.push_back(x.label);
        if (options.search_limit > 9)
            result.notes.push_back("search limit raised to " + std::to_string(limit));

        auto qualifies = [&] (const Hypergraph3 & h) {
            return satisfies_side_conditions(h, claim) && escapes(h, excluded);
        };

        std::optional<Hypergraph3> best_seed;
        for (auto & g : seed_graphs(claim, options)) {
            if (best_seed && g.size() <= best_seed->size())
                continue;
            if (f_free(g.edge_masks(), claim.forbid) && qualifies(g))
                best_seed = g;
        }

        long upper = slot_count(n);
        for (auto & x : excluded)
            upper = std::min<long>(upper, x.graph.size() - 1);

        std::vector<int> thresholds;
        if (best_seed)
            thresholds.push_back(best_seed->size());
        else
            for (long gap = 1, t = upper ; ; gap *= 2) {
                thresholds.push_back(static_cast<int>(std::max<long>(t, 0)));
                if (t <= 0)
                    break;
                t -= gap;
            }

        auto finish = [&] {
            result.stats.nodes = ctx.nodes;
            result.stats.prunes = ctx.prunes;
            result.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        };

        try {
            for (int t : thresholds) {
                if (t > upper)
                    continue;
                auto keys = options.engine == Engine::SlotBranch ? slot_level(n, claim.forbid, t, ctx)
                    : level(n, claim.forbid, t, ctx);
                result.stats.candidates += keys.size();

                std::stable_sort(keys.begin(), keys.end(), [] (const CanonicalKey & a, const CanonicalKey & b) {
                        return a.bits.count() > b.bits.count();
                        });

                std::optional<int> found;
                for (auto & k : keys) {
                    int size = k.bits.count();
                    if (found && size < *found)
                        break;
                    if ((result.stats.candidates & 255) == 0)
                        ctx.check();
                    Hypergraph3 h(n, k.bits);
                    if (qualifies(h)) {
                        found = size;
                        result.family.push_back(Member{ "", h });
                    }
                }
                if (found) {
                    result.value = *found;
                    std::sort(result.family.begin(), result.family.end(), [] (const Member & a, const Member & b) {
                            return canonical_key(a.graph) < canonical_key(b.graph);
                            });
                    for (std::size_t i = 0 ; i < result.family.size() ; ++i)
                        result.family[i].label = label_for(result.family[i].graph, i);
                    break;
                }
            }
            result.status = Status::SearchVerified;
            result.family_complete = true;
            if (! result.value)
                result.notes.push_back("no graph qualifies; the number is undefined");
        }
        catch (const Expired &) {
            result.family.clear();
            result.value.reset();
            result.family_complete = false;
            result.notes.push_back("budget of " + std::to_string(options.budget_seconds) + "s exhausted");
            if (best_seed) {
                result.status = Status::LowerBoundOnly;
                result.value = best_seed->size();
                result.family.push_back(Member{ label_for(*best_seed, 0), canonical_form(*best_seed) });
            }
            else
                result.status = Status::Unknown;
        }
        finish();
        return result;
    }

    auto higher_order(int n, const std::vector<PatternKind> & forbid, int s, Registry & registry,
            const SearchOptions & options) -> TuranResult
    {
        std::vector<Member> excluded;
        bool undefined_below = false;
        std::optional<long> previous;
        TuranResult last;

        for (int t = 1 ; t <= s ; ++t) {
            auto claim = Claim::turan(n, forbid, t);
            TuranResult r;
            if (auto * known = registry.get(claim) ; known && known->status == Status::SearchVerified)
                r = *known;
            else if (undefined_below) {
                r.claim = claim;
                r.status = Status::SearchVerified;
                r.notes.push_back("a lower order is undefined");
            }
            else
                r = max_f_free(claim, excluded, options);

            if (r.status != Status::SearchVerified) {
                registry.put(r);
                return r;
            }
            if (previous && r.value && ! (*r.value < *previous))
                throw RegistryError("decrease fails: " + r.claim.label() + " = " + std::to_string(*r.value)
                        + " is not below " + std::to_string(*previous));
            registry.put(r);

            if (! r.value)
                undefined_below = true;
            else {
                previous = r.value;
                excluded.insert(excluded.end(), r.family.begin(), r.family.end());
            }
            last = r;
        }
        return last;
    }

    auto conditional(int n, const std::vector<PatternKind> & forbid, std::optional<PatternKind> require,
            bool connected, Registry & registry, const SearchOptions & options) -> TuranResult
    {
        auto claim = Claim::conditional(n, forbid, require, connected);
        if (require) {
            auto g = Pattern::named(*require).graph();
            if (g.n() > n)
                throw SearchLimitError("required pattern does not fit on " + std::to_string(n) + " vertices");
            for (auto k : claim.forbid)
                if (contains(g, k))
                    throw SearchLimitError("required pattern contains a forbidden one");
        }
        auto r = max_f_free(claim, {}, options);
        registry.put(r);
        return r;
    }

    auto recheck(const TuranResult & r, const std::vector<Member> & excluded) -> std::vector<std::string>
    {
        std::vector<std::string> problems;
        std::set<CanonicalKey> seen;
        for (auto & m : r.family) {
            auto tag = r.claim.label() + " member " + m.label + ": ";
            if (m.graph.n() != r.claim.n)
                problems.push_back(tag + "wrong vertex count");
            if (r.value && m.graph.size() != *r.value)
                problems.push_back(tag + "edge count " + std::to_string(m.graph.size()));
            for (auto k : r.claim.forbid)
                if (contains(m.graph, k))
                    problems.push_back(tag + "contains " + pattern_name(k));
            if (! satisfies_side_conditions(m.graph, r.claim))
                problems.push_back(tag + "misses the side condition");
            for (auto & x : excluded)
                if (is_sub_iso(m.graph, x.graph))
                    problems.push_back(tag + "lies in excluded host " + x.label);
            if (! seen.insert(canonical_key(m.graph)).second)
                problems.push_back(tag + "duplicate isomorphism class");
        }
        if (r.value && r.family.empty())
            problems.push_back(r.claim.label() + ": value without a witness");
        return problems;
    }
}
