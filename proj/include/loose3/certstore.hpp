/* vim: set sw=4 sts=4 et : */

#ifndef LOOSE3_CERTSTORE_HPP
#define LOOSE3_CERTSTORE_HPP 1

#include <loose3/audit.hpp>
#include <loose3/ramsey.hpp>
#include <loose3/turan.hpp>

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace loose3
{
    constexpr int schema_version = 1;

    auto version_string() -> std::string;

    class CertError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    struct Environment
    {
        std::string version = version_string();
        std::uint64_t seed = 0;
        double budget = 0.0;
    };

    /// kind is "turan", "arrowing", "audit" or "bipartite-check". body holds the claim, its
    /// value or verdict, status and embedded witnesses; timings are never stored.
    struct Certificate
    {
        std::string kind;
        nlohmann::json body = nlohmann::json::object();
        Environment env;

        /// Full document including "schema", "environment" and "hash"; keys sorted.
        auto document() const -> nlohmann::json;
        static auto from_document(const nlohmann::json & doc) -> Certificate;

        /// Lowercase hex SHA-256 of the document without its "hash" member.
        auto hash() const -> std::string;
        auto status() const -> Status;
        auto claim() const -> std::string;
    };

    auto sha256_hex(const std::string & data) -> std::string;

    auto to_json(const TuranResult & r) -> nlohmann::json;
    auto turan_from_json(const nlohmann::json & j) -> TuranResult;
    auto to_json(const ArrowCertificate & c) -> nlohmann::json;
    auto arrow_from_json(const nlohmann::json & j) -> ArrowCertificate;
    auto to_json(const ColoringWitness & w) -> nlohmann::json;
    auto coloring_from_json(const nlohmann::json & j) -> ColoringWitness;
    auto to_json(const AuditSummary & a) -> nlohmann::json;
    auto to_json(const BipartiteReport & b) -> nlohmann::json;

    /// `excluded` are the lower-order hosts the result was computed against; they are embedded
    /// so the exclusion can be re-checked.
    auto turan_certificate(const TuranResult & r, const Environment & env, const std::vector<Member> & excluded = {})
        -> Certificate;
    auto arrowing_certificate(const ArrowCertificate & c, const Environment & env) -> Certificate;
    auto ramsey_certificate(const RamseyResult & r, const Environment & env) -> Certificate;
    auto audit_certificate(const AuditSummary & a, SampleShape shape, const Environment & env) -> Certificate;
    auto bipartite_certificate(const BipartiteReport & b, const Environment & env) -> Certificate;

    /// Writes the document with sorted keys and two-space indentation.
    auto save(const Certificate & cert, const std::string & path) -> void;
    auto dump(const Certificate & cert) -> std::string;

    /// Throws CertError on malformed JSON, a schema violation or a hash mismatch.
    auto load(const std::string & path) -> Certificate;
    auto parse_certificate(const std::string & text) -> Certificate;

    struct CertCheck
    {
        bool ok = true;
        std::vector<std::string> failures;
    };

    /// Cheap re-checks against the built-in registry: witnesses, arithmetic, citations,
    /// and re-runs of the audit and bipartite computations.
    auto verify(const Certificate & cert) -> CertCheck;
    auto verify(const std::string & path) -> bool;

    /// Fixed-width table: kind, claim, value, status, hash prefix.
    auto report(const std::vector<Certificate> & certs) -> std::string;
}

#endif
