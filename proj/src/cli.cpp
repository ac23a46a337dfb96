#include "multider/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <chrono>
#include <ostream>
#include <sstream>

#include "multider/basis.hpp"
#include "multider/catalan.hpp"
#include "multider/invariants.hpp"
#include "multider/scan.hpp"
#include "multider/serialize.hpp"

namespace multider::cli {

namespace {

std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

struct Output {
    std::string command;
    std::string format = "text";
    std::ostream& out;
    std::ostream& err;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    // JSON payloads are deterministic byte-for-byte; timing goes to stderr.
    void emit(const Json& report, const std::string& text) {
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        if (format == "json") {
            Json envelope;
            envelope["command"] = command;
            envelope["version"] = kVersion;
            envelope["report"] = report;
            out << envelope.dump(2) << "\n";
            err << "timing_ms: " << ms << "\n";
        } else {
            out << text;
            out << "timing_ms: " << ms << "\n";
        }
    }
};

std::string freeness_text(const FreenessReport& rep) {
    std::ostringstream os;
    os << "verdict: " << upper(to_string(rep.verdict)) << "\n";
    std::vector<long> degrees = rep.degrees;
    std::sort(degrees.begin(), degrees.end());
    os << "exponents:";
    for (long d : degrees) os << ' ' << d;
    os << "\n";
    os << "|m|: " << rep.multiplicity_total << "\n";
    if (!rep.det_over_q_constant.empty())
        os << "det/Q: " << rep.det_over_q_constant << "\n";
    return os.str();
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> values;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) values.push_back(std::stoi(item));
    return values;
}

int verdict_exit(const FreenessReport& rep) {
    return rep.verdict == Verdict::basis ? 0 : 1;
}

int run_three_lines(int p, int q, int r, Output& o) {
    ThreeLinesBasis basis = three_lines_basis(p, q, r);
    std::vector<FieldQ> fields(basis.fields.begin(), basis.fields.end());
    FreenessReport rep = verify_basis(fields, three_lines(p, q, r));

    const char* cases[] = {"large_r", "odd", "even"};
    Json j;
    j["params"] = Json{{"p", p}, {"q", q}, {"r", r}};
    j["construction"] = cases[static_cast<int>(basis.construction)];
    j["freeness"] = to_json(rep);
    std::ostringstream text;
    text << "three-lines x1^" << p << " x2^" << q << " (x1-x2)^" << r << "\n"
         << "construction: " << cases[static_cast<int>(basis.construction)] << "\n"
         << freeness_text(rep);
    o.emit(j, text.str());
    return verdict_exit(rep);
}

int run_braid(const std::vector<int>& a, int b, bool coordinates, bool product_check,
              Output& o) {
    std::vector<FieldQ> fields =
        coordinates ? braid_coordinate_basis(a, b) : braid_basis(a);
    ArrangementQ arr = braid_coordinate(a, b, coordinates);
    FreenessReport rep = verify_basis(fields, arr);

    Json j;
    j["params"] = Json{{"a", a}, {"b", b}, {"coordinates", coordinates}};
    j["freeness"] = to_json(rep);
    std::ostringstream text;
    text << "braid arrangement, ell=" << a.size()
         << (coordinates ? " with coordinate hyperplanes" : "") << "\n";
    bool product_ok = true;
    if (product_check) {
        product_ok = product_with_line_check(a, b);
        j["product_line_check"] = product_ok;
        text << "product-with-line identity: " << (product_ok ? "ok" : "FAILED") << "\n";
    }
    text << freeness_text(rep);
    o.emit(j, text.str());
    if (product_check && !product_ok) return 1;
    return verdict_exit(rep);
}

Json hmrs_params_json(const HmrsParams& params) {
    return Json{{"r", params.r},   {"p", params.p},       {"ell", params.ell},
                {"m", params.m},   {"k", params.k},       {"mbar", params.mbar},
                {"m_i", params.m_i}, {"q", params.q},     {"a", params.a},
                {"c", params.c},   {"m_prime", params.m_prime}};
}

struct HmrsOutcome {
    Json entry;
    FreenessReport freeness;
    std::vector<long> expected;
    bool degrees_match = false;
    bool ok = false;
};

HmrsOutcome hmrs_check(const HmrsParams& params, HmrsParity parity) {
    HmrsOutcome res;
    res.entry["parity"] = parity == HmrsParity::odd ? "odd" : "even";
    res.entry["params"] = hmrs_params_json(params);
    res.expected = expected_exponents(params, parity);
    res.entry["expected_exponents"] = res.expected;

    std::vector<FieldQ> fields = hmrs_basis(params, parity);
    ArrangementC arr = hmrs_arrangement(params, parity);
    std::vector<FieldC> lifted;
    lifted.reserve(fields.size());
    for (const auto& f : fields) lifted.push_back(lift_field(f, params.r));
    res.freeness = verify_basis(lifted, arr);

    std::vector<long> degrees = res.freeness.degrees;
    std::sort(degrees.begin(), degrees.end());
    res.degrees_match = degrees == res.expected;
    res.entry["degrees_match"] = res.degrees_match;
    res.entry["freeness"] = to_json(res.freeness);
    res.ok = res.freeness.verdict == Verdict::basis && res.degrees_match;
    return res;
}

int run_hmrs_single(const HmrsParams& params, HmrsParity parity, Output& o) {
    HmrsOutcome res = hmrs_check(params, parity);
    std::ostringstream text;
    text << "reflection multiarrangement r=" << params.r << " ell=" << params.ell
         << " m=" << params.m << " k=" << params.k
         << " parity=" << (parity == HmrsParity::odd ? "odd" : "even") << "\n";
    text << "expected exponents:";
    for (long e : res.expected) text << ' ' << e;
    text << "\n"
         << "degrees match: " << (res.degrees_match ? "yes" : "NO") << "\n"
         << freeness_text(res.freeness);
    o.emit(res.entry, text.str());
    return res.ok ? 0 : 1;
}

int run_hmrs_scan(int max_r, int max_ell, int max_m, int k, int mbar_value,
                  int parallelism, Output& o) {
    struct GridPoint {
        int r, ell, m;
        HmrsParity parity;
    };
    std::vector<GridPoint> grid;
    for (int r = 2; r <= max_r; ++r)
        for (int ell = 2; ell <= max_ell; ++ell)
            for (int m = 0; m <= max_m; ++m)
                for (HmrsParity parity : {HmrsParity::odd, HmrsParity::even})
                    grid.push_back({r, ell, m, parity});

    std::vector<std::function<Json()>> tasks;
    for (const GridPoint& g : grid) {
        tasks.push_back([g, k, mbar_value]() -> Json {
            Json entry;
            entry["r"] = g.r;
            entry["ell"] = g.ell;
            entry["m"] = g.m;
            entry["parity"] = g.parity == HmrsParity::odd ? "odd" : "even";
            if (g.parity == HmrsParity::even && g.m < 1) {
                entry["status"] = "skipped";
                entry["reason"] = "even multiplicity requires m >= 1";
                return entry;
            }
            int mv = mbar_value;
            if (mv < 0) mv = k == -g.m - 1 ? g.r - 1 : 0;
            if (mv > g.r - 1) {
                entry["status"] = "skipped";
                entry["reason"] = "mbar out of range for this r";
                return entry;
            }
            HmrsParams params = HmrsParams::create(g.r, 1, g.ell, g.m, k,
                                                   std::vector<int>(g.ell, mv));
            HmrsOutcome res = hmrs_check(params, g.parity);
            entry["status"] = res.ok ? "ok" : "failed";
            entry["expected_exponents"] = res.entry["expected_exponents"];
            entry["degrees_match"] = res.entry["degrees_match"];
            entry["verdict"] = res.entry["freeness"]["verdict"];
            return entry;
        });
    }
    std::vector<Json> entries = scan_parallel(tasks, parallelism);

    bool all_ok = true;
    std::ostringstream text;
    for (const Json& e : entries) {
        std::string status = e.contains("status") ? e["status"].get<std::string>() : "error";
        if (status == "failed" || status == "error") all_ok = false;
        text << "r=" << e.value("r", 0) << " ell=" << e.value("ell", 0)
             << " m=" << e.value("m", 0) << " " << e.value("parity", "?") << ": " << status;
        if (e.contains("verdict")) text << " (" << e["verdict"].get<std::string>() << ")";
        text << "\n";
    }
    Json j;
    j["grid"] = Json{{"max_r", max_r}, {"max_ell", max_ell}, {"max_m", max_m},
                     {"k", k}, {"entries", static_cast<int>(entries.size())}};
    j["entries"] = entries;
    text << (all_ok ? "all grid points verified\n" : "grid contains failures\n");
    o.emit(j, text.str());
    return all_ok ? 0 : 1;
}

int run_invariants(int r, int p, int ell, int max_lambda_m, Output& o) {
    bool identities = invariant_identities_check(r, p, ell);
    BasicInvariants inv = make_basic_invariants(r, p, ell);
    bool dual = dual_basis_check(inv);
    Json laws = Json::array();
    bool laws_ok = true;
    for (int m = 1; m <= max_lambda_m; ++m) {
        bool holds = lambda_derivative_law(r, p, ell, m);
        laws.push_back(Json{{"m", m}, {"holds", holds}});
        laws_ok = laws_ok && holds;
    }
    bool all = identities && dual && laws_ok;

    Json j;
    j["params"] = Json{{"r", r}, {"p", p}, {"ell", ell}};
    j["identities"] = identities;
    j["dual_basis"] = dual;
    j["lambda_laws"] = laws;
    j["all_hold"] = all;
    std::ostringstream text;
    text << "basic invariants of G(" << r << "," << p << "," << ell << ")\n"
         << "lambda expansion and Jacobian identity: " << (identities ? "ok" : "FAILED") << "\n"
         << "dual-basis property: " << (dual ? "ok" : "FAILED") << "\n"
         << "lambda derivative laws (m <= " << max_lambda_m << "): "
         << (laws_ok ? "ok" : "FAILED") << "\n";
    o.emit(j, text.str());
    return all ? 0 : 1;
}

int run_primitive(int r, int p, int ell, int max_m, Output& o) {
    PrimitiveRelationReport rep = verify_primitive_relations(r, p, ell, max_m);
    Json j;
    j["params"] = Json{{"r", r}, {"p", p}, {"ell", ell}, {"max_m", max_m}};
    j["report"] = to_json(rep);
    std::ostringstream text;
    for (const auto& rel : rep.relations)
        text << (rel.holds ? "ok    " : "FAIL  ") << rel.description
             << (rel.holds ? "  (c = " + rel.constant + ")" : "") << "\n";
    text << (rep.all_hold ? "all primitive-derivation relations hold\n"
                          : "some relations failed\n");
    o.emit(j, text.str());
    return rep.all_hold ? 0 : 1;
}

int run_catalan(int m, Output& o) {
    CatalanBasisResult res = catalan_basis_check(m);
    Json j;
    j["m"] = m;
    Json inner = to_json(res);
    for (auto& [key, value] : inner.items()) j[key] = value;
    std::ostringstream text;
    text << "extended Catalan arrangement Cat(B2, " << m << ")\n"
         << "deformation divisibilities: " << (res.preconditions_ok ? "ok" : "FAILED") << "\n";
    for (const auto& f : res.failed_preconditions) text << "  " << f << "\n";
    text << "affine membership: " << (res.affine_member[0] ? "ok" : "FAILED") << ", "
         << (res.affine_member[1] ? "ok" : "FAILED") << "\n"
         << "coned verification:\n"
         << freeness_text(res.report);
    o.emit(j, text.str());
    return res.preconditions_ok && res.report.verdict == Verdict::basis ? 0 : 1;
}

int run_conjecture_scan(int max_m, int max_i, int parallelism, Output& o) {
    std::vector<std::pair<int, int>> grid;
    for (int m = 0; m <= max_m; ++m)
        for (int i = 0; i <= max_i; ++i) grid.emplace_back(m, i);
    std::vector<std::function<Json()>> tasks;
    for (auto [m, i] : grid)
        tasks.push_back([m = m, i = i] { return to_json(conjecture_check(m, i)); });
    std::vector<Json> results = scan_parallel(tasks, parallelism);

    Json counterexamples = Json::array();
    for (const Json& r : results) {
        bool ok = r.value("x_div", false) && r.value("sum_div", false) &&
                  r.value("diff_div", false);
        if (!ok) counterexamples.push_back(r);
    }
    Json j;
    j["max_m"] = max_m;
    j["max_i"] = max_i;
    j["results"] = results;
    j["counterexamples"] = counterexamples;
    std::ostringstream text;
    text << "conjecture scan m <= " << max_m << ", i <= " << max_i << ": "
         << results.size() << " cases, " << counterexamples.size() << " counterexamples\n";
    for (const Json& c : counterexamples)
        text << "  counterexample at m=" << c.value("m", -1) << " i=" << c.value("i", -1)
             << "\n";
    o.emit(j, text.str());
    return counterexamples.empty() ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact verification of integral-expression bases for multiarrangements"};
    app.set_version_flag("--version", std::string("multider ") + kVersion);
    app.require_subcommand(1);
    app.fallthrough(false);

    std::string format = "text";

    // three-lines
    auto* tl = app.add_subcommand("three-lines",
                                  "verify the basis of x1^p x2^q (x1-x2)^r");
    int tl_p = 0, tl_q = 0, tl_r = 0;
    tl->add_option("--p", tl_p, "multiplicity of x1")->required();
    tl->add_option("--q", tl_q, "multiplicity of x2")->required();
    tl->add_option("--r", tl_r, "multiplicity of x1-x2")->required();

    // braid
    auto* br = app.add_subcommand("braid", "verify braid-family bases");
    std::string br_a = "0,0";
    int br_b = 0;
    bool br_nocoord = false, br_product = false;
    br->add_option("--a", br_a, "comma-separated a_1..a_l")->required();
    br->add_option("--b", br_b, "shift parameter b");
    br->add_flag("--no-coordinates", br_nocoord,
                 "use the pure braid arrangement with the unit-sum field");
    br->add_flag("--product-line-check", br_product,
                 "also verify the product-with-a-line factorization identity");

    // hmrs
    auto* hm = app.add_subcommand("hmrs",
                                  "verify reflection multiarrangement bases over Q(zeta_r)");
    int hm_r = 2, hm_p = 1, hm_ell = 2, hm_m = 0, hm_k = 0;
    std::string hm_parity = "odd", hm_mbar;
    bool hm_scan = false;
    int hm_max_r = 3, hm_max_ell = 3, hm_max_m = 1, hm_mbar_value = -1;
    int hm_jobs = 0;
    hm->add_option("--r", hm_r, "order of the cyclic group");
    hm->add_option("--p", hm_p, "monomial group index, 1 or r");
    hm->add_option("--ell", hm_ell, "ambient dimension");
    hm->add_option("--m", hm_m, "half-multiplicity m");
    hm->add_option("--k", hm_k, "shift k >= -m-1");
    hm->add_option("--mbar", hm_mbar, "comma-separated residues mbar_1..mbar_l");
    hm->add_option("--parity", hm_parity, "odd (u=2m+1) or even (u=2m)")
        ->check(CLI::IsMember({"odd", "even"}));
    hm->add_flag("--scan", hm_scan, "run a grid scan instead of a single check");
    hm->add_option("--max-r", hm_max_r, "scan bound for r");
    hm->add_option("--max-ell", hm_max_ell, "scan bound for ell");
    hm->add_option("--max-m", hm_max_m, "scan bound for m");
    hm->add_option("--mbar-value", hm_mbar_value,
                   "constant mbar for scans (-1 = pick automatically)");
    hm->add_option("--parallelism", hm_jobs, "worker threads (0 = default)");

    // invariants
    auto* in = app.add_subcommand("invariants",
                                  "check basic-invariant identities of G(r,p,l)");
    int in_r = 2, in_p = 1, in_ell = 2, in_lm = 3;
    in->add_option("--r", in_r, "order of the cyclic group")->required();
    in->add_option("--p", in_p, "monomial group index, 1 or r")->required();
    in->add_option("--ell", in_ell, "ambient dimension")->required();
    in->add_option("--max-lambda-m", in_lm, "largest power in the lambda laws");

    // primitive
    auto* pr = app.add_subcommand("primitive",
                                  "check primitive-derivation relations on eta fields");
    int pr_r = 2, pr_p = 1, pr_ell = 2, pr_m = 2;
    pr->add_option("--r", pr_r, "order of the cyclic group")->required();
    pr->add_option("--p", pr_p, "monomial group index, 1 or r")->required();
    pr->add_option("--ell", pr_ell, "ambient dimension")->required();
    pr->add_option("--max-m", pr_m, "largest multiplicity step");

    // catalan-b2
    auto* ca = app.add_subcommand("catalan-b2",
                                  "verify the deformed basis of the coned Cat(B2, m)");
    int ca_m = 1;
    ca->add_option("--m", ca_m, "extension parameter m")->required();

    // conjecture-scan
    auto* cs = app.add_subcommand("conjecture-scan",
                                  "scan the deformation divisibility conjecture");
    int cs_m = 4, cs_i = 6, cs_jobs = 0;
    cs->add_option("--max-m", cs_m, "largest m");
    cs->add_option("--max-i", cs_i, "largest i");
    cs->add_option("--parallelism", cs_jobs, "worker threads (0 = default)");

    for (auto* sc : {tl, br, hm, in, pr, ca, cs})
        sc->add_option("--format", format, "output format, text or json")
            ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        Output o{app.get_subcommands().front()->get_name(), format, out, err};
        if (tl->parsed()) return run_three_lines(tl_p, tl_q, tl_r, o);
        if (br->parsed())
            return run_braid(parse_int_list(br_a), br_b, !br_nocoord, br_product, o);
        if (hm->parsed()) {
            if (hm_scan)
                return run_hmrs_scan(hm_max_r, hm_max_ell, hm_max_m, hm_k, hm_mbar_value,
                                     hm_jobs > 0 ? hm_jobs : default_parallelism(), o);
            std::vector<int> mbar;
            if (hm_mbar.empty())
                mbar.assign(hm_ell, hm_k == -hm_m - 1 ? hm_r - 1 : 0);
            else
                mbar = parse_int_list(hm_mbar);
            HmrsParams params = HmrsParams::create(hm_r, hm_p, hm_ell, hm_m, hm_k, mbar);
            return run_hmrs_single(params,
                                   hm_parity == "odd" ? HmrsParity::odd : HmrsParity::even, o);
        }
        if (in->parsed()) return run_invariants(in_r, in_p, in_ell, in_lm, o);
        if (pr->parsed()) return run_primitive(pr_r, pr_p, pr_ell, pr_m, o);
        if (ca->parsed()) return run_catalan(ca_m, o);
        if (cs->parsed())
            return run_conjecture_scan(cs_m, cs_i,
                                       cs_jobs > 0 ? cs_jobs : default_parallelism(), o);
        err << "no subcommand\n";
        return 2;
    } catch (const DomainError& e) {
        err << "invalid parameters: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace multider::cli
