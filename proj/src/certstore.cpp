/* vim: set sw=4 sts=4 et : */

#include <loose3/canon.hpp>
#include <loose3/certstore.hpp>
#include <loose3/constructions.hpp>

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

using json = nlohmann::json;

namespace loose3
{
    namespace
    {
        auto edge_json(const Edge & e) -> json
        {
            return json::array({ e.v[0], e.v[1], e.v[2] });
        }

        auto edge_from(const json & j) -> Edge
        {
            return Edge::make(j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>());
        }

        auto opt_long(const std::optional<long> & v) -> json
        {
            return v ? json(*v) : json(nullptr);
        }

        auto long_from(const json & j) -> std::optional<long>
        {
            if (j.is_null())
                return std::nullopt;
            return j.get<long>();
        }

        auto shape_name(SampleShape s) -> std::string
        {
            return s == SampleShape::StarInside ? "star-inside" : "any";
        }

        auto parse_shape(const std::string & s) -> SampleShape
        {
            if (s == "any")
                return SampleShape::Any;
            if (s == "star-inside")
                return SampleShape::StarInside;
            throw CertError("unknown sample shape '" + s + "'");
        }

        auto members_json(const std::vector<Member> & ms) -> json
        {
            auto a = json::array();
            for (auto & m : ms)
                a.push_back({ { "label", m.label }, { "graph", to_text(m.graph) },
                        { "key", canonical_key(m.graph).to_string() } });
            return a;
        }

        auto members_from(const json & j) -> std::vector<Member>
        {
            std::vector<Member> ms;
            for (auto & m : j)
                ms.push_back(Member{ m.at("label").get<std::string>(), parse_text(m.at("graph").get<std::string>()) });
            return ms;
        }

        auto verdict_from(const std::string & s) -> Verdict
        {
            for (auto v : { Verdict::Arrows, Verdict::ProperColoring, Verdict::Unknown })
                if (verdict_name(v) == s)
                    return v;
            throw CertError("unknown verdict '" + s + "'");
        }

        auto exact(Status s) -> bool
        {
            return s == Status::SearchVerified || s == Status::PaperAsserted;
        }

        auto arrow_claim(const std::string & host, int colours) -> std::string
        {
            return host + " -> (P;" + std::to_string(colours) + ")";
        }

        auto check_turan(const json & body, CertCheck & out) -> void
        {
            auto fail = [&] (const std::string & why) {
                out.ok = false;
                out.failures.push_back(why);
            };
            auto r = turan_from_json(body);
            const auto & registry = Registry::known_facts();

            auto excluded = body.contains("excluded") ? members_from(body.at("excluded")) : std::vector<Member>{};
            if (! r.claim.is_conditional())
                for (int s = 1 ; s < r.claim.order ; ++s) {
                    auto * lower = registry.get(Claim::turan(r.claim.n, r.claim.forbid, s));
                    if (lower)
                        excluded.insert(excluded.end(), lower->family.begin(), lower->family.end());
                    else if (excluded.empty())
                        fail("no lower-order hosts for " + Claim::turan(r.claim.n, r.claim.forbid, s).label());
                }
            for (auto & p : recheck(r, excluded))
                fail(p);
            if (! r.value && ! r.family.empty())
                fail("undefined value with witnesses");
            if (exact(r.status) && r.value && r.family.empty())
                fail("exact value without a witness");
            if (r.status == Status::SearchVerified && r.stats.nodes == 0)
                fail("search-verified without a recorded search");

            auto * fact = registry.get(r.claim);
            if (r.status == Status::PaperAsserted && (! fact || fact->status != Status::PaperAsserted))
                fail(r.claim.label() + " is not a recorded fact");
            if (fact && exact(fact->status)) {
                if (exact(r.status)) {
                    if (fact->value != r.value)
                        fail(r.claim.label() + " disagrees with the recorded value");
                    if (fact->family_complete && r.family_complete && fact->family_keys() != r.family_keys())
                        fail(r.claim.label() + " disagrees with the recorded family");
                }
                else if (r.value && (! fact->value || *r.value > *fact->value))
                    fail(r.claim.label() + " lower bound exceeds the recorded value");
            }
        }

        auto check_arrowing(const json & body, CertCheck & out) -> void
        {
            auto fail = [&] (const std::string & why) {
                out.ok = false;
                out.failures.push_back(why);
            };
            const auto & registry = Registry::known_facts();
            auto take = [&] (const ArrowCertificate & a, const std::string & what) -> Status {
                auto rep = verify_certificate(a, registry);
                for (auto & f : rep.failures)
                    fail(what + ": " + f);
                return rep.status;
            };

            if (! body.contains("ramsey")) {
                auto a = arrow_from_json(body);
                take(a, a.host);
                if (body.at("status").get<std::string>() != status_name(a.status))
                    fail("status field disagrees with the proof");
                return;
            }

            int r = body.at("ramsey").at("colours").get<int>();
            int value = body.at("ramsey").at("value").get<int>();
            auto upper = arrow_from_json(body.at("upper"));
            Status status = take(upper, "upper");
            if (upper.host != construction_label(Tag::K, r + 6) || upper.colours != r)
                fail("upper bound proves the wrong claim");
            if (! body.at("strengthened").is_null()) {
                auto st = arrow_from_json(body.at("strengthened"));
                status = weakest(status, take(st, "strengthened"));
                if (st.host != construction_label(Tag::KMinusE, r + 6) || st.colours != r)
                    fail("strengthened bound proves the wrong claim");
            }
            auto lower = coloring_from_json(body.at("lower"));
            bool lower_ok = lower.colours == r && lower.host.n() == r + 5
                && lower.host == complete_graph(r + 5) && is_proper(lower);
            if (body.at("lower_ok").get<bool>() != lower_ok)
                fail("lower_ok field is wrong");
            if (! lower_ok)
                fail("lower-bound colouring is not a proper colouring of " + construction_label(Tag::K, r + 5));
            int expect = (upper.verdict == Verdict::Arrows && lower_ok) ? r + 6 : 0;
            if (value != expect)
                fail("recorded value " + std::to_string(value) + " is not supported");
            if (body.at("status").get<std::string>() != status_name(status))
                fail("status field disagrees with the proof");
        }
    }

    auto version_string() -> std::string
    {
        return "loose3 0.1.0";
    }

    auto sha256_hex(const std::string & data) -> std::string
    {
        unsigned char digest[EVP_MAX_MD_SIZE];
        unsigned int len = 0;
        if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
            throw CertError("SHA-256 failed");
        std::ostringstream s;
        for (unsigned int i = 0 ; i < len ; ++i)
            s << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
        return s.str();
    }

    auto Certificate::document() const -> json
    {
        json doc = {
            { "schema", schema_version },
            { "kind", kind },
            { "body", body },
            { "environment", { { "version", env.version }, { "seed", env.seed }, { "budget", env.budget } } }
        };
        doc["hash"] = sha256_hex(doc.dump());
        return doc;
    }

    auto Certificate::hash() const -> std::string
    {
        return document().at("hash").get<std::string>();
    }

    auto Certificate::from_document(const json & doc) -> Certificate
    {
        try {
            if (! doc.is_object())
                throw CertError("certificate is not an object");
            for (auto k : { "schema", "kind", "body", "environment", "hash" })
                if (! doc.contains(k))
                    throw CertError(std::string("missing field '") + k + "'");
            if (doc.size() != 5)
                throw CertError("unexpected top-level fields");
            if (doc.at("schema").get<int>() != schema_version)
                throw CertError("unsupported schema " + doc.at("schema").dump());

            Certificate c;
            c.kind = doc.at("kind").get<std::string>();
            if (c.kind != "turan" && c.kind != "arrowing" && c.kind != "audit" && c.kind != "bipartite-check")
                throw CertError("unknown kind '" + c.kind + "'");
            c.body = doc.at("body");
            if (! c.body.is_object() || ! c.body.contains("claim") || ! c.body.contains("status"))
                throw CertError("body lacks claim or status");
            auto & e = doc.at("environment");
            c.env.version = e.at("version").get<std::string>();
            c.env.seed = e.at("seed").get<std::uint64_t>();
            c.env.budget = e.at("budget").get<double>();
            if (c.hash() != doc.at("hash").get<std::string>())
                throw CertError("hash mismatch");
            return c;
        }
        catch (const json::exception & e) {
            throw CertError(std::string("schema violation: ") + e.what());
        }
    }

    auto Certificate::status() const -> Status
    {
        return parse_status(body.at("status").get<std::string>());
    }

    auto Certificate::claim() const -> std::string
    {
        return body.at("claim").get<std::string>();
    }

    auto to_json(const TuranResult & r) -> json
    {
        return {
            { "claim", r.claim.label() },
            { "value", opt_long(r.value) },
            { "family", members_json(r.family) },
            { "family_complete", r.family_complete },
            { "status", status_name(r.status) },
            { "stats", { { "nodes", r.stats.nodes }, { "prunes", r.stats.prunes },
                           { "candidates", r.stats.candidates } } },
            { "excluded_hosts", r.excluded_hosts },
            { "notes", r.notes }
        };
    }

    auto turan_from_json(const json & j) -> TuranResult
    {
        try {
            TuranResult r;
            r.claim = Claim::parse(j.at("claim").get<std::string>());
            r.value = long_from(j.at("value"));
            r.family = members_from(j.at("family"));
            r.family_complete = j.at("family_complete").get<bool>();
            r.status = parse_status(j.at("status").get<std::string>());
            if (j.contains("stats")) {
                r.stats.nodes = j.at("stats").at("nodes").get<std::uint64_t>();
                r.stats.prunes = j.at("stats").at("prunes").get<std::uint64_t>();
                r.stats.candidates = j.at("stats").at("candidates").get<std::uint64_t>();
            }
            r.excluded_hosts = j.value("excluded_hosts", std::vector<std::string>{});
            r.notes = j.value("notes", std::vector<std::string>{});
            return r;
        }
        catch (const json::exception & e) {
            throw CertError(std::string("schema violation: ") + e.what());
        }
    }

    auto to_json(const ColoringWitness & w) -> json
    {
        return { { "host", to_text(w.host) }, { "colours", w.colours }, { "assignment", w.assignment } };
    }

    auto coloring_from_json(const json & j) -> ColoringWitness
    {
        ColoringWitness w;
        w.host = parse_text(j.at("host").get<std::string>());
        w.colours = j.at("colours").get<int>();
        w.assignment = j.at("assignment").get<std::vector<int>>();
        return w;
    }

    auto to_json(const BipartiteReport & b) -> json
    {
        return {
            { "splits", b.splits },
            { "max_overlap", b.max_overlap },
            { "maximisers", b.maximisers },
            { "disjoint_pairs", b.disjoint_pairs },
            { "disjoint_triples", b.disjoint_triples },
            { "host_edges", b.host_edges },
            { "ok", b.ok() }
        };
    }

    namespace
    {
        auto bipartite_from(const json & j) -> BipartiteReport
        {
            BipartiteReport b;
            b.splits = j.at("splits").get<int>();
            b.max_overlap = j.at("max_overlap").get<int>();
            b.maximisers = j.at("maximisers").get<int>();
            b.disjoint_pairs = j.at("disjoint_pairs").get<long>();
            b.disjoint_triples = j.at("disjoint_triples").get<long>();
            b.host_edges = j.at("host_edges").get<int>();
            return b;
        }
    }

    auto to_json(const ArrowCertificate & c) -> json
    {
        auto steps = json::array();
        for (auto & s : c.steps) {
            auto cites = json::array();
            for (auto & ci : s.cites)
                cites.push_back({ { "claim", ci.claim }, { "value", opt_long(ci.value) },
                        { "status", status_name(ci.status) }, { "family", ci.family },
                        { "family_complete", ci.family_complete } });
            auto branches = json::array();
            for (auto & b : s.branches)
                branches.push_back({ { "member", b.member }, { "shape", b.shape }, { "children", b.children },
                        { "crossing", b.crossing }, { "full_classes", b.full_classes } });
            auto witness = json::array();
            for (auto & e : s.witness)
                witness.push_back(edge_json(e));
            steps.push_back({
                    { "label", s.label },
                    { "host", to_text(s.host) },
                    { "colours", s.colours },
                    { "kind", s.kind },
                    { "edges", s.edges },
                    { "largest", s.largest },
                    { "order", s.order },
                    { "cites", cites },
                    { "branches", branches },
                    { "sub", s.sub ? json(*s.sub) : json(nullptr) },
                    { "witness", witness },
                    { "nodes", s.nodes } });
        }
        return {
            { "claim", arrow_claim(c.host, c.colours) },
            { "host", c.host },
            { "colours", c.colours },
            { "verdict", verdict_name(c.verdict) },
            { "status", status_name(c.status) },
            { "steps", steps },
            { "refutation", c.refutation ? to_json(*c.refutation) : json(nullptr) },
            { "gaps", c.gaps },
            { "bipartite", c.bipartite ? to_json(*c.bipartite) : json(nullptr) }
        };
    }

    auto arrow_from_json(const json & j) -> ArrowCertificate
    {
        try {
            ArrowCertificate c;
            c.host = j.at("host").get<std::string>();
            c.colours = j.at("colours").get<int>();
            c.verdict = verdict_from(j.at("verdict").get<std::string>());
            c.status = parse_status(j.at("status").get<std::string>());
            for (auto & s : j.at("steps")) {
                ArrowStep st;
                st.label = s.at("label").get<std::string>();
                st.host = parse_text(s.at("host").get<std::string>());
                st.colours = s.at("colours").get<int>();
                st.kind = s.at("kind").get<std::string>();
                st.edges = s.at("edges").get<long>();
                st.largest = s.at("largest").get<long>();
                st.order = s.at("order").get<int>();
                for (auto & ci : s.at("cites"))
                    st.cites.push_back(Citation{ ci.at("claim").get<std::string>(), long_from(ci.at("value")),
                            parse_status(ci.at("status").get<std::string>()),
                            ci.at("family").get<std::vector<std::string>>(), ci.at("family_complete").get<bool>() });
                for (auto & b : s.at("branches"))
                    st.branches.push_back(Branch{ b.at("member").get<std::string>(), b.at("shape").get<std::string>(),
                            b.at("children").get<std::vector<int>>(), b.at("crossing").get<long>(),
                            b.at("full_classes").get<long>() });
                if (! s.at("sub").is_null())
                    st.sub = s.at("sub").get<int>();
                for (auto & e : s.at("witness"))
                    st.witness.push_back(edge_from(e));
                st.nodes = s.at("nodes").get<std::uint64_t>();
                c.steps.push_back(std::move(st));
            }
            if (! j.at("refutation").is_null())
                c.refutation = coloring_from_json(j.at("refutation"));
            c.gaps = j.at("gaps").get<std::vector<std::string>>();
            if (! j.at("bipartite").is_null())
                c.bipartite = bipartite_from(j.at("bipartite"));
            return c;
        }
        catch (const json::exception & e) {
            throw CertError(std::string("schema violation: ") + e.what());
        }
    }

    auto to_json(const AuditSummary & a) -> json
    {
        json tallies = json::object();
        for (auto & [name, t] : a.tallies)
            tallies[name] = { { "passed", t.passed }, { "failed", t.failed }, { "skipped", t.skipped } };
        return {
            { "n", a.n },
            { "samples", a.samples },
            { "seed", a.seed },
            { "tallies", tallies },
            { "violations", a.violations }
        };
    }

    auto turan_certificate(const TuranResult & r, const Environment & env, const std::vector<Member> & excluded)
        -> Certificate
    {
        Certificate c{ "turan", to_json(r), env };
        c.body["excluded"] = members_json(excluded);
        return c;
    }

    auto arrowing_certificate(const ArrowCertificate & a, const Environment & env) -> Certificate
    {
        return Certificate{ "arrowing", to_json(a), env };
    }

    auto ramsey_certificate(const RamseyResult & r, const Environment & env) -> Certificate
    {
        Status status = r.upper.status;
        if (r.strengthened)
            status = weakest(status, r.strengthened->status);
        json body = {
            { "claim", "R(P;" + std::to_string(r.colours) + ")" },
            { "ramsey", { { "colours", r.colours }, { "value", r.value } } },
            { "upper", to_json(r.upper) },
            { "strengthened", r.strengthened ? to_json(*r.strengthened) : json(nullptr) },
            { "lower", to_json(r.lower) },
            { "lower_ok", r.lower_ok },
            { "status", status_name(status) }
        };
        return Certificate{ "arrowing", body, env };
    }

    auto audit_certificate(const AuditSummary & a, SampleShape shape, const Environment & env) -> Certificate
    {
        auto body = to_json(a);
        body["claim"] = "audit(n=" + std::to_string(a.n) + ")";
        body["shape"] = shape_name(shape);
        body["status"] = status_name(a.clean() ? Status::SearchVerified : Status::Unknown);
        return Certificate{ "audit", body, env };
    }

    auto bipartite_certificate(const BipartiteReport & b, const Environment & env) -> Certificate
    {
        auto body = to_json(b);
        body["claim"] = "K6uK6 overlap with Bip6x6";
        body["status"] = status_name(b.ok() ? Status::SearchVerified : Status::Unknown);
        return Certificate{ "bipartite-check", body, env };
    }

    auto dump(const Certificate & cert) -> std::string
    {
        return cert.document().dump(2) + "\n";
    }

    auto save(const Certificate & cert, const std::string & path) -> void
    {
        std::ofstream f(path, std::ios::binary);
        if (! f)
            throw CertError("cannot write " + path);
        f << dump(cert);
        if (! f)
            throw CertError("write failed for " + path);
    }

    auto parse_certificate(const std::string & text) -> Certificate
    {
        json doc;
        try {
            doc = json::parse(text);
        }
        catch (const json::exception & e) {
            throw CertError(std::string("malformed JSON: ") + e.what());
        }
        return Certificate::from_document(doc);
    }

    auto load(const std::string & path) -> Certificate
    {
        std::ifstream f(path, std::ios::binary);
        if (! f)
            throw CertError("cannot read " + path);
        std::stringstream s;
        s << f.rdbuf();
        return parse_certificate(s.str());
    }

    auto verify(const Certificate & cert) -> CertCheck
    {
        CertCheck out;
        auto fail = [&] (const std::string & why) {
            out.ok = false;
            out.failures.push_back(why);
        };
        try {
            if (cert.kind == "turan")
                check_turan(cert.body, out);
            else if (cert.kind == "arrowing")
                check_arrowing(cert.body, out);
            else if (cert.kind == "audit") {
                auto shape = parse_shape(cert.body.at("shape").get<std::string>());
                auto again = audit_certificate(run_audit(cert.body.at("n").get<int>(),
                            cert.body.at("samples").get<int>(), cert.body.at("seed").get<std::uint64_t>(), shape),
                        shape, cert.env);
                if (again.body != cert.body)
                    fail("audit does not reproduce");
            }
            else if (cert.kind == "bipartite-check") {
                auto again = bipartite_certificate(bipartite_check(), cert.env);
                if (again.body != cert.body)
                    fail("bipartite check does not reproduce");
            }
            else
                fail("unknown kind '" + cert.kind + "'");
        }
        catch (const std::exception & e) {
            fail(e.what());
        }
        return out;
    }

    auto verify(const std::string & path) -> bool
    {
        try {
            return verify(load(path)).ok;
        }
        catch (const CertError &) {
            return false;
        }
    }

    auto report(const std::vector<Certificate> & certs) -> std::string
    {
        std::vector<std::array<std::string, 5>> rows;
        rows.push_back({ "kind", "claim", "value", "status", "hash" });
        for (auto & c : certs) {
            std::string value;
            auto & b = c.body;
            if (c.kind == "turan")
                value = b.at("value").is_null()
                    ? (c.status() == Status::Unknown ? "?" : "undefined")
                    : std::to_string(b.at("value").get<long>());
            else if (c.kind == "arrowing" && b.contains("ramsey"))
                value = std::to_string(b.at("ramsey").at("value").get<int>());
            else if (c.kind == "arrowing")
                value = b.at("verdict").get<std::string>();
            else if (c.kind == "audit")
                value = std::to_string(b.at("violations").size()) + " violations";
            else
                value = "max " + std::to_string(b.at("max_overlap").get<int>());
            rows.push_back({ c.kind, c.claim(), value, b.at("status").get<std::string>(), c.hash().substr(0, 12) });
        }

        std::array<std::size_t, 5> width{};
        for (auto & r : rows)
            for (std::size_t i = 0 ; i < 5 ; ++i)
                width[i] = std::max(width[i], r[i].size());
        std::ostringstream s;
        for (auto & r : rows) {
            for (std::size_t i = 0 ; i < 4 ; ++i)
                s << std::left << std::setw(int(width[i])) << r[i] << "  ";
            s << r[4];
            s << "\n";
        }
        return s.str();
    }
}
