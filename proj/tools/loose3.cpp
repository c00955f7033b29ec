/* vim: set sw=4 sts=4 et : */

#include <loose3/audit.hpp>
#include <loose3/certstore.hpp>
#include <loose3/constructions.hpp>
#include <loose3/patterns.hpp>
#include <loose3/ramsey.hpp>
#include <loose3/turan.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace loose3;

namespace
{
    struct Common
    {
        std::uint64_t seed = 0;
        int jobs = 1;
        std::string out;
    };

    auto add_common(CLI::App * sub, Common & c) -> void
    {
        sub->add_option("--seed", c.seed, "random seed");
        sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1, 256));
        sub->add_option("--out", c.out, "output file (default stdout)");
    }

    auto emit_text(const Common & c, const std::string & text) -> void
    {
        if (c.out.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(c.out, std::ios::binary);
        if (! f)
            throw std::runtime_error("cannot write " + c.out);
        f << text;
    }

    auto emit_cert(const Common & c, const Certificate & cert) -> void
    {
        emit_text(c, dump(cert));
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "3-graph Turan numbers, arrowing proofs and certificates" };
    app.require_subcommand(1);
    app.set_version_flag("--version", version_string());

    double budget = default_budget();
    int code = 0;

    // turan
    Common turan_c;
    int t_order = 1, t_n = 0;
    std::string t_forbid = "P", t_require, t_engine = "extension";
    bool t_connected = false;
    auto * turan = app.add_subcommand("turan", "exact (higher-order or conditional) Turan number by search");
    add_common(turan, turan_c);
    turan->add_option("--order", t_order, "order s")->check(CLI::Range(1, 8));
    turan->add_option("--n", t_n, "vertices")->required()->check(CLI::Range(1, max_vertices));
    turan->add_option("--forbid", t_forbid, "forbidden patterns, e.g. P or P,C");
    turan->add_option("--require", t_require, "required pattern M, C or P2uK3");
    turan->add_flag("--connected", t_connected, "connected hosts only");
    turan->add_option("--budget", budget, "seconds");
    turan->add_option("--engine", t_engine, "extension or slot")->check(CLI::IsMember({ "extension", "slot" }));

    // arrows
    Common arrows_c;
    std::string a_host, a_mode = "prove";
    int a_colours = 2;
    auto * arrows = app.add_subcommand("arrows", "prove or refute host -> (P;r)");
    add_common(arrows, arrows_c);
    arrows->add_option("--host", a_host, "K14, K14-e or K9-2e#2")->required();
    arrows->add_option("--colors,--colours", a_colours, "number of colours")->required()->check(CLI::Range(1, 16));
    arrows->add_option("--mode", a_mode, "prove or exhaustive")->check(CLI::IsMember({ "prove", "exhaustive" }));
    arrows->add_option("--budget", budget, "seconds for exhaustive search");

    // ramsey
    Common ramsey_c;
    int r_colours = 2;
    auto * ram = app.add_subcommand("ramsey", "R(P;r) = r + 6: upper bound by the prover, lower by star peeling");
    add_common(ram, ramsey_c);
    ram->add_option("--r", r_colours, "colours")->required()->check(CLI::Range(1, 9));

    // contains
    Common contains_c;
    std::string c_pattern, c_input;
    auto * cont = app.add_subcommand("contains", "exit 0 and print a copy if present, 1 if absent");
    add_common(cont, contains_c);
    cont->add_option("--pattern", c_pattern, "P, C, M, P2 or P2uK3")->required();
    cont->add_option("--input", c_input, "graph file")->required();

    // catalog
    Common catalog_c;
    auto * cat = app.add_subcommand("catalog", "list the named constructions");
    add_common(cat, catalog_c);

    // emit
    Common emit_c;
    std::string e_tag;
    int e_n = 0, e_variant = 0;
    auto * emit = app.add_subcommand("emit", "write a construction in the text format");
    add_common(emit, emit_c);
    emit->add_option("--tag", e_tag, "catalogue name")->required();
    emit->add_option("--n", e_n, "vertices")->required();
    emit->add_option("--variant", e_variant, "variant for K-2e (1..3)");

    // audit
    Common audit_c;
    int au_n = 12, au_samples = 100;
    std::string au_shape = "any";
    auto * aud = app.add_subcommand("audit", "check the decomposition inequalities on sampled {P,C}-free graphs");
    add_common(aud, audit_c);
    aud->add_option("--n", au_n, "vertices")->required()->check(CLI::Range(8, max_vertices));
    aud->add_option("--samples", au_samples, "sample count")->check(CLI::NonNegativeNumber);
    aud->add_option("--shape", au_shape, "any or star-inside")->check(CLI::IsMember({ "any", "star-inside" }));

    // bipartite-check
    Common bip_c;
    auto * bip = app.add_subcommand("bipartite-check", "K6uK6 overlaps with Bip6x6 over all 462 splits");
    add_common(bip, bip_c);

    // verify-cert
    Common verify_c;
    std::vector<std::string> v_files;
    auto * ver = app.add_subcommand("verify-cert", "re-check stored certificates");
    add_common(ver, verify_c);
    ver->add_option("files", v_files, "certificate files")->required();

    // report
    Common report_c;
    std::vector<std::string> rep_files;
    bool rep_registry = false;
    auto * rep = app.add_subcommand("report", "summary table of certificates");
    add_common(rep, report_c);
    rep->add_option("files", rep_files, "certificate files");
    rep->add_flag("--registry", rep_registry, "include every built-in registry fact");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*turan) {
            SearchOptions opt;
            opt.jobs = turan_c.jobs;
            opt.seed = turan_c.seed;
            opt.budget_seconds = budget;
            opt.engine = t_engine == "slot" ? Engine::SlotBranch : Engine::Extension;
            auto forbid = parse_forbid(t_forbid);
            auto registry = Registry::known_facts();
            TuranResult r;
            std::vector<Member> excluded;
            if (! t_require.empty() || t_connected) {
                std::optional<PatternKind> req;
                if (! t_require.empty())
                    req = parse_pattern_kind(t_require);
                r = conditional(t_n, forbid, req, t_connected, registry, opt);
            }
            else {
                r = higher_order(t_n, forbid, t_order, registry, opt);
                for (int s = 1 ; s < r.claim.order ; ++s)
                    if (auto * lower = registry.get(Claim::turan(t_n, r.claim.forbid, s)))
                        excluded.insert(excluded.end(), lower->family.begin(), lower->family.end());
            }
            emit_cert(turan_c, turan_certificate(r, Environment{ version_string(), turan_c.seed, budget }, excluded));
            std::cerr << r.claim.label() << " = " << (r.value ? std::to_string(*r.value) : "undefined")
                << " [" << status_name(r.status) << "] " << r.stats.seconds << " s\n";
        }
        else if (*arrows) {
            auto registry = Registry::known_facts();
            auto cert = a_mode == "exhaustive"
                ? exhaustive_arrowing(a_host, a_colours, budget)
                : prove_arrowing(a_host, a_colours, registry);
            emit_cert(arrows_c, arrowing_certificate(cert, Environment{ version_string(), arrows_c.seed, budget }));
            std::cerr << a_host << " -> (P;" << a_colours << "): " << verdict_name(cert.verdict)
                << " [" << status_name(cert.status) << "]\n";
            for (auto & g : cert.gaps)
                std::cerr << "  gap: " << g << "\n";
        }
        else if (*ram) {
            auto registry = Registry::known_facts();
            auto r = ramsey(r_colours, registry);
            emit_cert(ramsey_c, ramsey_certificate(r, Environment{ version_string(), ramsey_c.seed, budget }));
            std::cerr << "R(P;" << r_colours << ") = " << (r.value ? std::to_string(r.value) : "?") << "\n";
        }
        else if (*cont) {
            auto h = read_graph_file(c_input);
            auto w = find_pattern(h, Pattern::parse(c_pattern));
            if (! w)
                return 1;
            std::string text;
            for (auto & e : *w)
                text += std::to_string(e.v[0]) + " " + std::to_string(e.v[1]) + " " + std::to_string(e.v[2]) + "\n";
            emit_text(contains_c, text);
            return 0;
        }
        else if (*cat) {
            std::string text;
            for (auto & e : catalog()) {
                text += e.name + "\t" + std::to_string(e.min_n) + ".." + std::to_string(e.max_n) + "\t" + e.size_formula;
                if (e.variants)
                    text += "\tvariants 1.." + std::to_string(e.variants);
                text += "\n";
            }
            emit_text(catalog_c, text);
        }
        else if (*emit) {
            emit_text(emit_c, to_text(build(parse_tag(e_tag), e_n, e_variant).graph));
        }
        else if (*aud) {
            auto shape = au_shape == "star-inside" ? SampleShape::StarInside : SampleShape::Any;
            auto sum = run_audit(au_n, au_samples, audit_c.seed, shape);
            emit_cert(audit_c, audit_certificate(sum, shape, Environment{ version_string(), audit_c.seed, budget }));
            for (auto & v : sum.violations)
                std::cerr << "VIOLATION " << v << "\n";
            code = sum.clean() ? 0 : 1;
        }
        else if (*bip) {
            auto b = bipartite_check();
            emit_cert(bip_c, bipartite_certificate(b, Environment{ version_string(), bip_c.seed, budget }));
            code = b.ok() ? 0 : 1;
        }
        else if (*ver) {
            std::string text;
            for (auto & f : v_files) {
                CertCheck check;
                try {
                    check = verify(load(f));
                }
                catch (const CertError & e) {
                    check.ok = false;
                    check.failures.push_back(e.what());
                }
                text += (check.ok ? "OK   " : "FAIL ") + f + "\n";
                for (auto & why : check.failures)
                    text += "     " + why + "\n";
                if (! check.ok)
                    code = 1;
            }
            emit_text(verify_c, text);
        }
        else if (*rep) {
            std::vector<Certificate> certs;
            if (rep_registry)
                for (auto & r : Registry::known_facts().entries())
                    certs.push_back(turan_certificate(r, Environment{ version_string(), report_c.seed, budget }));
            for (auto & f : rep_files)
                certs.push_back(load(f));
            emit_text(report_c, report(certs));
        }
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return code;
}
