/* vim: set sw=4 sts=4 et : */

#include <loose3/ramsey.hpp>
#include <loose3/canon.hpp>
#include <loose3/constructions.hpp>
#include <loose3/patterns.hpp>

#include <algorithm>
#include <chrono>
#include <deque>
#include <regex>
#include <set>

namespace loose3
{
    namespace
    {
        using Clock = std::chrono::steady_clock;

        auto ceil_div(long a, long b) -> long
        {
            return (a + b - 1) / b;
        }

        auto missing_edges(const Hypergraph3 & h) -> std::vector<Edge>
        {
            return h.complement().edges();
        }

        auto acceptable(Status s) -> bool
        {
            return s == Status::SearchVerified || s == Status::PaperAsserted;
        }

        // Forward-checking colouring search.
        struct ColourSearch
        {
            int colours;
            std::vector<VertexMask> edges;
            std::vector<int> colour;
            std::vector<std::uint32_t> allowed;
            std::vector<std::vector<VertexMask>> classes;
            int used = 0;
            std::uint64_t nodes = 0;
            Clock::time_point deadline;
            bool expired = false;

            auto dfs(int assigned) -> bool
            {
                if ((++nodes & 1023) == 0 && Clock::now() > deadline)
                    expired = true;
                if (expired)
                    return false;
                int m = static_cast<int>(edges.size());
                if (assigned == m)
                    return true;

                int pick = -1, best = colours + 1;
                for (int i = 0 ; i < m ; ++i)
                    if (colour[i] < 0) {
                        int k = std::popcount(allowed[i]);
                        if (k < best) {
                            best = k;
                            pick = i;
                            if (k == 0)
                                return false;
                        }
                    }

                auto e = edges[pick];
                for (int c = 0 ; c < colours && c <= used ; ++c) {
                    if (! (allowed[pick] & (1u << c)))
                        continue;

                    colour[pick] = c;
                    classes[c].push_back(e);
                    int old_used = used;
                    used = std::max(used, c + 1);

                    std::vector<int> cleared;
                    bool dead = false;
                    for (int f = 0 ; f < m ; ++f) {
                        if (colour[f] >= 0 || ! (allowed[f] & (1u << c)))
                            continue;
                        if (creates_pattern(classes[c], edges[f], PatternKind::P)) {
                            allowed[f] &= ~(1u << c);
                            cleared.push_back(f);
                            if (allowed[f] == 0) {
                                dead = true;
                                break;
                            }
                        }
                    }

                    if (! dead && dfs(assigned + 1))
                        return true;

                    for (int f : cleared)
                        allowed[f] |= 1u << c;
                    used = old_used;
                    classes[c].pop_back();
                    colour[pick] = -1;
                    if (expired)
                        return false;
                }
                return false;
            }
        };

        auto deletion_children(const Hypergraph3 & host, bool with_head) -> std::vector<Hypergraph3>
        {
            int n = host.n();
            std::set<CanonicalKey> seen;
            std::vector<Hypergraph3> result;
            auto add = [&] (const Hypergraph3 & g) {
                if (seen.insert(canonical_key(g)).second)
                    result.push_back(g);
            };
            for (int v = 0 ; v < n ; ++v) {
                if (! with_head) {
                    add(delete_vertex(host, v));
                    continue;
                }
                for (int a = 0 ; a < n ; ++a)
                    for (int b = a + 1 ; b < n ; ++b)
                        for (int c = b + 1 ; c < n ; ++c) {
                            if (a == v || b == v || c == v)
                                continue;
                            add(delete_vertex(remove_edge(host, Edge{ { a, b, c } }), v));
                        }
            }
            return result;
        }

        auto deletion_keys(const Hypergraph3 & host, bool with_head) -> std::set<CanonicalKey>
        {
            std::set<CanonicalKey> keys;
            for (auto & g : deletion_children(host, with_head))
                keys.insert(canonical_key(g));
            return keys;
        }

        auto shape_of(const Hypergraph3 & member) -> std::string
        {
            if (in_star(member))
                return "star";
            if (in_comet(member))
                return "comet";
            auto parts = clique_parts(member);
            std::sort(parts.begin(), parts.end());
            if (member.n() == 12 && parts == std::vector<int>{ 6, 6 })
                return "bipartite";
            return "";
        }

        const BipartiteReport & cached_bipartite()
        {
            static const BipartiteReport report = bipartite_check();
            return report;
        }
    }

    auto parse_host(const std::string & label) -> Hypergraph3
    {
        static const std::regex form(R"(K(\d+)(-e|-2e[#:]([123]))?)");
        std::smatch m;
        if (! std::regex_match(label, m, form))
            throw ProofError("cannot parse host '" + label + "'; use K14, K14-e or K9-2e#2");
        int n = std::stoi(m[1]);
        if (n < 3 || n > max_vertices)
            throw ProofError("host vertex count must lie in 3..16");
        if (! m[2].matched)
            return build(Tag::K, n).graph;
        if (m[2] == "-e")
            return build(Tag::KMinusE, n).graph;
        return build(Tag::KMinus2E, n, std::stoi(m[3])).graph;
    }

    auto host_label(const Hypergraph3 & h) -> std::string
    {
        int n = h.n();
        auto missing = binomial(n, 3) - h.size();
        auto base = "K" + std::to_string(n);
        if (missing == 0)
            return base;
        if (missing == 1)
            return base + "-e";
        if (missing == 2) {
            auto gone = missing_edges(h);
            int share = std::popcount(gone[0].mask() & gone[1].mask());
            return base + "-2e#" + std::to_string(3 - share);
        }
        return "H(" + std::to_string(n) + "," + std::to_string(h.size()) + ")";
    }

    auto ColoringWitness::classes() const -> std::vector<Hypergraph3>
    {
        std::vector<Hypergraph3> result(colours, Hypergraph3(host.n()));
        auto es = host.edges();
        for (std::size_t i = 0 ; i < es.size() && i < assignment.size() ; ++i)
            if (assignment[i] >= 0 && assignment[i] < colours)
                result[assignment[i]].insert(es[i]);
        return result;
    }

    auto is_proper(const ColoringWitness & w) -> bool
    {
        if (static_cast<int>(w.assignment.size()) != w.host.size())
            return false;
        for (int c : w.assignment)
            if (c < 0 || c >= w.colours)
                return false;
        for (auto & cls : w.classes())
            if (contains(cls, PatternKind::P))
                return false;
        return true;
    }

    auto verdict_name(Verdict v) -> std::string
    {
        switch (v) {
            case Verdict::Arrows:         return "arrows";
            case Verdict::ProperColoring: return "proper-colouring";
            case Verdict::Unknown:        return "UNKNOWN";
        }
        return "UNKNOWN";
    }

    auto arrows_exhaustive(const Hypergraph3 & host, int colours, double budget_seconds) -> ExhaustiveResult
    {
        if (colours < 1 || colours > 16)
            throw ProofError("colour count must lie in 1..16");
        auto start = Clock::now();
        ColourSearch s;
        s.colours = colours;
        s.edges = host.edge_masks();
        s.colour.assign(s.edges.size(), -1);
        s.allowed.assign(s.edges.size(), (colours == 32 ? ~0u : (1u << colours) - 1));
        s.classes.resize(colours);
        s.deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget_seconds));

        ExhaustiveResult r;
        bool found = s.dfs(0);
        r.nodes = s.nodes;
        r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (found) {
            r.verdict = Verdict::ProperColoring;
            r.witness = ColoringWitness{ host, colours, s.colour };
        }
        else
            r.verdict = s.expired ? Verdict::Unknown : Verdict::Arrows;
        return r;
    }

    auto star_peeling(const Hypergraph3 & host, int colours) -> ColoringWitness
    {
        int n = host.n();
        if (n > colours + 5)
            throw ProofError("star peeling needs at most colours + 5 vertices");
        ColoringWitness w{ host, colours, {} };
        for (auto & e : host.edges()) {
            int top = e.v[2];
            w.assignment.push_back(top >= 6 ? n - 1 - top : colours - 1);
        }
        return w;
    }

    auto find_proper_coloring(const Hypergraph3 & host, int colours, double budget_seconds) -> ExhaustiveResult
    {
        if (host.n() <= colours + 5) {
            ExhaustiveResult r;
            auto w = star_peeling(host, colours);
            if (is_proper(w)) {
                r.verdict = Verdict::ProperColoring;
                r.witness = w;
                return r;
            }
        }
        return arrows_exhaustive(host, colours, budget_seconds);
    }

    auto bipartite_check() -> BipartiteReport
    {
        BipartiteReport report;
        auto host = build(Tag::Bip6x6, 12).graph;
        report.host_edges = host.size();

        std::vector<EdgeSet> best;
        for (VertexMask a = 0 ; a < (1u << 12) ; ++a) {
            if (std::popcount(a) != 6 || ! (a & 1u))
                continue;       // vertex 0 on the first side: each split once
            ++report.splits;
            EdgeSet overlap;
            host.bits().for_each([&] (int slot) {
                    auto m = triple_unrank(slot).mask();
                    if ((m & a) == m || (m & ~a) == m)
                        overlap.set(slot);
                    });
            int size = overlap.count();
            if (size > report.max_overlap) {
                report.max_overlap = size;
                best.clear();
            }
            if (size == report.max_overlap)
                best.push_back(overlap);
        }
        report.maximisers = static_cast<int>(best.size());

        std::vector<std::vector<int>> disjoint(best.size());
        for (std::size_t i = 0 ; i < best.size() ; ++i)
            for (std::size_t j = i + 1 ; j < best.size() ; ++j)
                if (best[i].intersection_count(best[j]) == 0) {
                    disjoint[i].push_back(static_cast<int>(j));
                    ++report.disjoint_pairs;
                }
        for (std::size_t i = 0 ; i < best.size() ; ++i)
            for (int j : disjoint[i])
                for (int k : disjoint[j])
                    if (best[i].intersection_count(best[k]) == 0)
                        ++report.disjoint_triples;
        return report;
    }

    Prover::Prover(const Registry & registry, ProverOptions options) :
        _registry(registry),
        _options(options)
    {
    }

    auto Prover::cite(const Claim & c) -> std::optional<Citation>
    {
        auto * fact = _registry.get(c);
        if (! fact || ! acceptable(fact->status))
            return std::nullopt;
        Citation cit{ c.label(), fact->value, fact->status, {}, fact->family_complete };
        for (auto & m : fact->family)
            cit.family.push_back(m.label);
        return cit;
    }

    auto Prover::classify(const Hypergraph3 & host, int colours, ArrowStep & step) -> bool
    {
        int n = host.n();
        auto gap = [&] (const std::string & why) {
            _gaps.push_back(step.label + " with " + std::to_string(colours) + " colours: " + why);
            return false;
        };

        int s = 1;
        for ( ; ; ++s) {
            auto next = cite(Claim::turan(n, { PatternKind::P }, s + 1));
            if (! next)
                return gap("no usable entry for " + Claim::turan(n, { PatternKind::P }, s + 1).label());
            if (! next->value || step.largest > *next->value)
                break;
        }
        step.order = s;

        std::vector<Member> members;
        for (int t = 1 ; t <= s + 1 ; ++t) {
            auto c = cite(Claim::turan(n, { PatternKind::P }, t));
            step.cites.push_back(*c);
            if (t > s)
                continue;
            if (! c->value || ! c->family_complete)
                return gap(c->claim + " has no complete family");
            auto & fact = _registry.require(Claim::turan(n, { PatternKind::P }, t));
            members.insert(members.end(), fact.family.begin(), fact.family.end());
        }

        bool has_star = false;
        for (auto & m : members)
            has_star = has_star || shape_of(m.graph) == "star";

        for (auto & m : members) {
            Branch b;
            b.member = m.label;
            b.shape = shape_of(m.graph);
            if (b.shape.empty())
                return gap("the largest class may lie in " + m.label + ", which has no reduction");

            if (b.shape == "bipartite") {
                b.crossing = 180 - (binomial(12, 3) - host.size());
                b.full_classes = b.crossing - 35L * (colours - 1);
                if (! has_star || b.full_classes < 3 || step.largest < 37)
                    return gap("the two-clique case does not force three full classes");
                if (! _bipartite)
                    _bipartite = cached_bipartite();
                if (! _bipartite->ok())
                    return gap("the bipartite check failed");
            }
            else
                for (auto & child : deletion_children(host, b.shape == "comet")) {
                    auto idx = prove(child, colours - 1);
                    if (! idx)
                        return gap("could not prove " + host_label(child) + " with "
                                + std::to_string(colours - 1) + " colours");
                    if (std::find(b.children.begin(), b.children.end(), *idx) == b.children.end())
                        b.children.push_back(*idx);
                }
            step.branches.push_back(b);
        }
        return true;
    }

    auto Prover::prove(const Hypergraph3 & raw, int colours) -> std::optional<int>
    {
        auto key = std::make_pair(canonical_key(raw), colours);
        if (auto it = _memo.find(key) ; it != _memo.end())
            return it->second;
        if (_failed.count(key))
            return std::nullopt;

        auto host = canonical_form(raw);
        ArrowStep step;
        step.label = host_label(host);
        step.host = host;
        step.colours = colours;
        step.edges = host.size();
        step.largest = ceil_div(step.edges, colours);

        auto succeed = [&] {
            _steps.push_back(step);
            int idx = static_cast<int>(_steps.size()) - 1;
            _memo[key] = idx;
            return std::optional<int>(idx);
        };
        auto fail = [&] (const std::string & why) {
            _failed[key] = why;
            return std::optional<int>();
        };

        if (colours == 1) {
            auto w = find_pattern(host, Pattern::named(PatternKind::P));
            if (! w)
                return fail("the host itself is P-free");
            step.kind = "single-colour";
            step.witness = *w;
            return succeed();
        }

        // a proved subgraph with the same colour count settles a larger host
        for (auto & [k, idx] : _memo)
            if (k.second == colours && k.first.n == host.n() && _steps[idx].edges < step.edges
                    && is_sub_iso(_steps[idx].host, host)) {
                step.kind = "add-edges";
                step.sub = idx;
                return succeed();
            }

        auto ex1 = cite(Claim::turan(host.n(), { PatternKind::P }, 1));
        if (ex1 && ex1->value && step.largest > *ex1->value) {
            step.kind = "exceeds";
            step.cites.push_back(*ex1);
            return succeed();
        }

        auto gaps_before = _gaps.size();
        if (ex1 && colours >= 2) {
            ArrowStep attempt = step;
            attempt.kind = "classify";
            if (classify(host, colours, attempt)) {
                step = attempt;
                return succeed();
            }
        }

        if (host.n() <= _options.exhaustive_max_n && colours <= _options.exhaustive_max_colours) {
            auto r = arrows_exhaustive(host, colours, _options.exhaustive_budget);
            if (r.verdict == Verdict::Arrows) {
                _gaps.resize(gaps_before);
                step.kind = "exhaustive";
                step.nodes = r.nodes;
                return succeed();
            }
            return fail(verdict_name(r.verdict));
        }
        return fail("no applicable step");
    }

    auto Prover::certify(const Hypergraph3 & host, int colours) -> ArrowCertificate
    {
        ArrowCertificate cert;
        cert.host = host_label(host);
        cert.colours = colours;
        auto before = _gaps.size();
        auto root = prove(host, colours);

        if (! root) {
            cert.gaps.assign(_gaps.begin() + before, _gaps.end());
            auto r = find_proper_coloring(host, colours, host.n() <= _options.exhaustive_max_n
                    ? _options.exhaustive_budget : 0.0);
            if (r.verdict == Verdict::ProperColoring) {
                cert.verdict = Verdict::ProperColoring;
                cert.refutation = r.witness;
                cert.status = Status::SearchVerified;
            }
            return cert;
        }

        // renumber the reachable steps breadth first, root first
        std::map<int, int> renumber;
        std::deque<int> queue{ *root };
        std::vector<int> order;
        renumber[*root] = 0;
        while (! queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            order.push_back(i);
            auto visit = [&] (int j) {
                if (renumber.emplace(j, static_cast<int>(renumber.size())).second)
                    queue.push_back(j);
            };
            for (auto & b : _steps[i].branches)
                for (int c : b.children)
                    visit(c);
            if (_steps[i].sub)
                visit(*_steps[i].sub);
        }

        cert.status = Status::SearchVerified;
        bool uses_bipartite = false;
        for (int i : order) {
            auto s = _steps[i];
            for (auto & b : s.branches) {
                for (auto & c : b.children)
                    c = renumber.at(c);
                std::sort(b.children.begin(), b.children.end());
                uses_bipartite = uses_bipartite || b.shape == "bipartite";
            }
            if (s.sub)
                s.sub = renumber.at(*s.sub);
            for (auto & c : s.cites)
                cert.status = weakest(cert.status, c.status);
            cert.steps.push_back(s);
        }
        if (uses_bipartite)
            cert.bipartite = cached_bipartite();
        cert.verdict = Verdict::Arrows;
        return cert;
    }

    auto prove_arrowing(const std::string & host, int colours, const Registry & registry, ProverOptions options)
        -> ArrowCertificate
    {
        Prover p(registry, options);
        auto cert = p.certify(parse_host(host), colours);
        cert.host = host;
        return cert;
    }

    auto exhaustive_arrowing(const std::string & host, int colours, double budget_seconds) -> ArrowCertificate
    {
        auto h = parse_host(host);
        ArrowCertificate cert;
        cert.host = host;
        cert.colours = colours;
        auto r = arrows_exhaustive(h, colours, budget_seconds);
        cert.verdict = r.verdict;
        if (r.verdict == Verdict::Arrows) {
            ArrowStep step;
            step.label = host;
            step.host = h;
            step.colours = colours;
            step.kind = "exhaustive";
            step.edges = h.size();
            step.largest = ceil_div(step.edges, colours);
            step.nodes = r.nodes;
            cert.steps.push_back(step);
            cert.status = Status::SearchVerified;
        }
        else if (r.verdict == Verdict::ProperColoring) {
            cert.refutation = r.witness;
            cert.status = Status::SearchVerified;
        }
        else
            cert.gaps.push_back("exhaustive search ran out of budget after " + std::to_string(r.nodes) + " nodes");
        return cert;
    }

    auto verify_certificate(const ArrowCertificate & cert, const Registry & registry) -> VerificationReport
    {
        VerificationReport report;
        auto fail = [&] (const std::string & why) {
            report.ok = false;
            report.failures.push_back(why);
        };

        std::optional<Hypergraph3> claimed;
        try {
            claimed = parse_host(cert.host);
        }
        catch (const std::exception & e) {
            fail(e.what());
            return report;
        }

        if (cert.verdict == Verdict::ProperColoring) {
            if (! cert.refutation)
                fail("refutation without a colouring");
            else {
                if (cert.refutation->colours != cert.colours)
                    fail("refutation uses a different colour count");
                if (cert.refutation->host.n() != claimed->n() || ! are_isomorphic(cert.refutation->host, *claimed))
                    fail("refutation colours a different host");
                if (! is_proper(*cert.refutation))
                    fail("refuting colouring is not proper");
            }
            report.status = Status::SearchVerified;
            if (cert.status != report.status)
                fail("recorded status does not match");
            return report;
        }
        if (cert.verdict != Verdict::Arrows) {
            fail("certificate claims nothing");
            return report;
        }
        if (cert.steps.empty()) {
            fail("no proof steps");
            return report;
        }

        auto & root = cert.steps[0];
        if (root.colours != cert.colours || root.host.n() != claimed->n() || ! are_isomorphic(root.host, *claimed))
            fail("first step does not prove the claim");

        Status status = Status::SearchVerified;
        std::vector<CanonicalKey> keys;
        for (auto & s : cert.steps)
            keys.push_back(canonical_key(s.host));

        auto check_cite = [&] (const Citation & c) -> const TuranResult * {
            Claim claim;
            try {
                claim = Claim::parse(c.claim);
            }
            catch (const std::exception & e) {
                fail(e.what());
                return nullptr;
            }
            auto * fact = registry.get(claim);
            if (! fact) {
                fail("cites " + c.claim + ", which the registry lacks");
                return nullptr;
            }
            if (! acceptable(c.status) || ! acceptable(fact->status)) {
                fail("cites " + c.claim + " with status " + status_name(c.status));
                return nullptr;
            }
            if (weakness(c.status) < weakness(fact->status)) {
                fail("cites " + c.claim + " as " + status_name(c.status) + " but the registry only has "
                        + status_name(fact->status));
                return nullptr;
            }
            if (fact->value != c.value) {
                fail("cites a value for " + c.claim + " that the registry does not hold");
                return nullptr;
            }
            status = weakest(status, c.status);
            return fact;
        };

        for (std::size_t i = 0 ; i < cert.steps.size() ; ++i) {
            auto & s = cert.steps[i];
            auto where = "step " + std::to_string(i) + " (" + s.label + ", " + std::to_string(s.colours) + "): ";
            if (s.colours < 1 || s.edges != s.host.size() || s.largest != ceil_div(s.edges, s.colours)) {
                fail(where + "pigeonhole arithmetic is wrong");
                continue;
            }
            int n = s.host.n();

            if (s.kind == "single-colour") {
                if (s.colours != 1 || s.witness.size() != 3)
                    fail(where + "bad single-colour step");
                else {
                    Hypergraph3 w(n, s.witness);
                    bool inside = true;
                    for (auto & e : s.witness)
                        inside = inside && s.host.has_edge(e);
                    if (! inside || ! contains(w, PatternKind::P))
                        fail(where + "witness is not a copy of P in the host");
                }
            }
            else if (s.kind == "exceeds") {
                if (s.cites.size() != 1)
                    fail(where + "needs exactly one citation");
                else if (auto * f = check_cite(s.cites[0])) {
                    if (f->claim != Claim::turan(n, { PatternKind::P }, 1) || ! f->value || ! (s.largest > *f->value))
                        fail(where + "largest class does not exceed the first order number");
                }
            }
            else if (s.kind == "add-edges") {
                if (! s.sub || *s.sub <= 0 || *s.sub >= static_cast<int>(cert.steps.size()))
                    fail(where + "bad subgraph reference");
                else {
                    auto & sub = cert.steps[*s.sub];
                    if (sub.colours != s.colours || sub.edges >= s.edges || ! is_sub_iso(sub.host, s.host))
                        fail(where + "referenced host is not a smaller subgraph");
                }
            }
            else if (s.kind == "exhaustive") {
                if (n > 8 || s.colours > 2)
                    fail(where + "exhaustive steps are only accepted for tiny hosts");
                else if (arrows_exhaustive(s.host, s.colours, 60.0).verdict != Verdict::Arrows)
                    fail(where + "exhaustive search does not confirm arrowing");
            }
            else if (s.kind == "classify") {
                int order = s.order;
                if (order < 1 || static_cast<int>(s.cites.size()) != order + 1) {
                    fail(where + "citations do not match the order");
                    continue;
                }
                std::vector<Member> members;
                bool cites_ok = true;
                for (int t = 1 ; t <= order + 1 ; ++t) {
                    auto * f = check_cite(s.cites[t - 1]);
                    if (! f || f->claim != Claim::turan(n, { PatternKind::P }, t)) {
                        cites_ok = false;
                        fail(where + "citation " + std::to_string(t) + " is not " +
                                Claim::turan(n, { PatternKind::P }, t).label());
                        continue;
                    }
                    if (t <= order) {
                        if (! f->value || ! f->family_complete) {
                            cites_ok = false;
                            fail(where + f->claim.label() + " has no complete family");
                        }
                        members.insert(members.end(), f->family.begin(), f->family.end());
                    }
                    else if (f->value && ! (s.largest > *f->value)) {
                        cites_ok = false;
                        fail(where + "largest class does not exceed " + f->claim.label());
                    }
                }
                if (! cites_ok)
                    continue;

                if (members.size() != s.branches.size()) {
                    fail(where + "branches do not cover the cited families");
                    continue;
                }
                bool has_star = false;
                for (auto & m : members)
                    has_star = has_star || shape_of(m.graph) == "star";

                for (std::size_t b = 0 ; b < members.size() ; ++b) {
                    auto & br = s.branches[b];
                    auto shape = shape_of(members[b].graph);
                    if (br.member != members[b].label || br.shape != shape || shape.empty()) {
                        fail(where + "branch " + br.member + " does not match " + members[b].label);
                        continue;
                    }
                    if (shape == "bipartite") {
                        long crossing = 180 - (binomial(12, 3) - s.edges);
                        long full = crossing - 35L * (s.colours - 1);
                        if (n != 12 || ! has_star || br.crossing != crossing || br.full_classes != full || full < 3
                                || s.largest < 37)
                            fail(where + "two-clique arithmetic is wrong");
                        if (! cert.bipartite || ! cert.bipartite->ok())
                            fail(where + "missing or failed bipartite check");
                        else {
                            auto again = cached_bipartite();
                            if (again.max_overlap != cert.bipartite->max_overlap
                                    || again.disjoint_triples != cert.bipartite->disjoint_triples
                                    || again.splits != cert.bipartite->splits)
                                fail(where + "bipartite check does not reproduce");
                        }
                        continue;
                    }

                    auto need = deletion_keys(s.host, shape == "comet");
                    std::set<CanonicalKey> have;
                    bool children_ok = true;
                    for (int c : br.children) {
                        if (c <= 0 || c >= static_cast<int>(cert.steps.size()) || cert.steps[c].colours != s.colours - 1) {
                            children_ok = false;
                            continue;
                        }
                        have.insert(keys[c]);
                    }
                    if (! children_ok || have != need)
                        fail(where + "deletions for " + br.member + " are not all proved");
                }
            }
            else
                fail(where + "unknown step kind '" + s.kind + "'");
        }

        report.status = status;
        if (cert.status != status)
            fail("recorded status " + status_name(cert.status) + " differs from " + status_name(status));
        return report;
    }

    auto ramsey(int colours, const Registry & registry, ProverOptions options) -> RamseyResult
    {
        if (colours < 1 || colours > 9)
            throw ProofError("the prover handles 1..9 colours");
        RamseyResult result;
        result.colours = colours;
        Prover prover(registry, options);
        int n = colours + 6;
        if (colours == 8) {
            result.strengthened = prover.certify(build(Tag::KMinusE, n).graph, colours);
            result.strengthened->host = construction_label(Tag::KMinusE, n);
        }
        result.upper = prover.certify(build(Tag::K, n).graph, colours);
        result.upper.host = construction_label(Tag::K, n);
        result.lower = star_peeling(build(Tag::K, n - 1).graph, colours);
        result.lower_ok = is_proper(result.lower);
        if (result.upper.verdict == Verdict::Arrows && result.lower_ok)
            result.value = n;
        return result;
    }
}
