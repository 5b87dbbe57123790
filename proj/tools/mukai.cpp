#include <bit>
#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "mukai/fourier.hpp"
#include "mukai/scenario.hpp"

using namespace mukai;
using nlohmann::ordered_json;

namespace {

struct CommonArgs {
    std::string scenario_path;
    std::string preset;
    int g = 1;
    int d = 0;
    int rho = 1;
    bool json = false;
    bool timing = false;
    long max_rounds = 0;
};

void add_scenario_options(CLI::App *cmd, CommonArgs &args)
{
    cmd->add_option("scenario", args.scenario_path, "scenario JSON file");
    cmd->add_option("--preset", args.preset,
                    "built-in scenario: endo-only, fg-translations, semidirect, number-field");
    cmd->add_option("--g", args.g, "preset model dimension")->check(CLI::PositiveNumber);
    cmd->add_option("--d", args.d, "preset endomorphism discriminant");
    cmd->add_option("--rho", args.rho, "preset Mordell-Weil rank")->check(CLI::PositiveNumber);
}

void add_output_options(CLI::App *cmd, CommonArgs &args)
{
    cmd->add_flag("--json", args.json, "machine-readable report on stdout");
    cmd->add_flag("--timing", args.timing, "include timing in the JSON report");
}

Scenario load_scenario(const CommonArgs &args)
{
    if (!args.preset.empty())
        return make_preset(args.preset, args.g, args.d, args.rho);
    if (args.scenario_path.empty())
        throw Error("schema", "either a scenario file or --preset is required");
    std::ifstream in(args.scenario_path, std::ios::binary);
    if (!in)
        throw Error("schema", "cannot open scenario file '" + args.scenario_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

ordered_json rational_json(const Rational &r)
{
    auto big = [](const mpz_class &z) -> ordered_json {
        if (z.fits_slong_p())
            return static_cast<long long>(z.get_si());
        return z.get_str();
    };
    return ordered_json::array({big(r.num()), big(r.den())});
}

ordered_json quad_json(const QuadScalar &q)
{
    auto big = [](const mpz_class &z) -> ordered_json {
        if (z.fits_slong_p())
            return static_cast<long long>(z.get_si());
        return z.get_str();
    };
    return ordered_json::array(
        {big(q.re().num()), big(q.re().den()), big(q.im().num()), big(q.im().den())});
}

ordered_json matrix_json(const QuadMatrix &m)
{
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(quad_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json pic_class_json(const PicClass &D)
{
    return {{"ns", matrix_json(D.ns().matrix())}, {"pic0", matrix_json(D.alg0().matrix())}};
}

ordered_json multivector_json(const Multivector &u)
{
    ordered_json terms = ordered_json::array();
    for (const auto &[mask, coeff] : u.terms()) {
        ordered_json labels = ordered_json::array();
        uint64_t rest = mask;
        while (rest) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            labels.push_back(u.ground()->label(i));
        }
        terms.push_back({{"c", rational_json(coeff)}, {"m", std::move(labels)}});
    }
    return terms;
}

ordered_json sym_cycle_json(const SymCycle &x)
{
    ordered_json terms = ordered_json::array();
    for (const auto &[mono, coeff] : x.terms())
        terms.push_back({{"m", mono}, {"c", rational_json(coeff)}});
    return terms;
}

ordered_json orbit_report_json(const OrbitReport &report)
{
    ordered_json basis = ordered_json::array();
    for (const SymCycle &row : report.basis)
        basis.push_back(sym_cycle_json(row));
    return {{"dimension", report.dimension},
            {"converged", report.converged},
            {"rounds", report.rounds},
            {"generators_applied", report.generators_applied},
            {"basis", std::move(basis)}};
}

class Report {
public:
    Report(std::string command, bool json, bool timing)
        : json_(json), timing_(timing), start_(std::chrono::steady_clock::now())
    {
        doc_["command"] = std::move(command);
    }

    ordered_json &doc() { return doc_; }

    void emit()
    {
        if (!json_)
            return;
        if (timing_) {
            auto elapsed = std::chrono::steady_clock::now() - start_;
            doc_["timing_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        }
        fmt::print("{}\n", doc_.dump(2));
    }

    double elapsed_ms() const
    {
        auto elapsed = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(elapsed).count();
    }

    bool json() const { return json_; }

private:
    bool json_, timing_;
    std::chrono::steady_clock::time_point start_;
    ordered_json doc_;
};

int run_verify_fm(int g, const CommonArgs &args)
{
    Report report("verify-fm", args.json, args.timing);
    InversionReport inv = check_inversion(g);
    report.doc()["inputs"] = {{"g", g}};
    ordered_json failures = ordered_json::array();
    for (uint64_t mask = 0; mask < inv.basis_pass.size(); ++mask)
        if (!inv.basis_pass[mask])
            failures.push_back(mask);
    report.doc()["result"] = {{"basis_elements", inv.basis_pass.size()},
                              {"failures", std::move(failures)},
                              {"ok", inv.all_pass}};
    report.emit();
    if (!report.json()) {
        fmt::print("inversion on all {} basis multivectors at g = {}: {}   ({:.1f} ms)\n",
                   inv.basis_pass.size(), g, inv.all_pass ? "ok" : "FAILED",
                   report.elapsed_ms());
        if (!inv.all_pass)
            fmt::print("{} basis elements failed\n", inv.failures);
    }
    return inv.all_pass ? 0 : 1;
}

int run_fourier(int g, const std::string &expr, bool dual, const CommonArgs &args)
{
    Report report("fourier", args.json, args.timing);
    FMContext ctx = poincare_class(g);
    Multivector input = parse_class_expr(expr, dual ? ctx.dual : ctx.source);
    Multivector output = dual ? dual_fourier(ctx, input) : fourier(ctx, input);
    report.doc()["inputs"] = {{"g", g}, {"expr", expr}, {"dual", dual}};
    report.doc()["result"] = {{"class", multivector_json(output)}, {"text", output.str()}};
    report.emit();
    if (!report.json())
        fmt::print("{}({}) = {}\n", dual ? "F^" : "F", input.str(), output.str());
    return 0;
}

int run_split(const CommonArgs &args)
{
    Scenario scenario = load_scenario(args);
    Report report("split", args.json, args.timing);
    auto [sym, antisym] = sym_antisym_projectors(scenario.cycle);
    report.doc()["inputs"] = ordered_json::parse(serialize_scenario(scenario));
    report.doc()["result"] = {{"symmetric", pic_class_json(sym)},
                              {"antisymmetric", pic_class_json(antisym)}};
    report.emit();
    if (!report.json()) {
        fmt::print("symmetric part:     ns = {}\n", sym.ns().matrix().str());
        fmt::print("antisymmetric part: pic0 = {}\n", antisym.alg0().matrix().str());
    }
    return 0;
}

int run_normalize(const std::string &word_text, const CommonArgs &args)
{
    Scenario scenario = load_scenario(args);
    Report report("normalize", args.json, args.timing);
    Word word = parse_word(word_text);
    AffineEndo normal = normalize(word, scenario.generators);
    PicClass via_word = word_pullback(word, scenario.generators, scenario.cycle);
    PicClass via_normal = affine_pullback(normal, scenario.cycle);
    bool agree = via_word == via_normal;
    report.doc()["inputs"] = {{"word", word_str(word)}};
    report.doc()["result"] = {{"endo", matrix_json(normal.F.matrix())},
                              {"translation", matrix_json(normal.c.matrix())},
                              {"word_pullback", pic_class_json(via_word)},
                              {"normal_form_pullback", pic_class_json(via_normal)},
                              {"agree", agree}};
    report.emit();
    if (!report.json()) {
        fmt::print("word: {}\n", word_str(word));
        fmt::print("normal form: F = {}, c = {}\n", normal.F.matrix().str(),
                   normal.c.matrix().str());
        fmt::print("pullback of the scenario cycle agrees letter-by-letter: {}\n",
                   agree ? "yes" : "NO");
    }
    return agree ? 0 : 1;
}

int run_orbit_span(bool certify, int cert_words, const CommonArgs &args)
{
    Scenario scenario = load_scenario(args);
    Report report("orbit-span", args.json, args.timing);
    PicBasis basis(scenario.model);
    SymCycle x = expand_class(scenario.cycle, basis, scenario.options.degree_cap);
    long rounds = args.max_rounds > 0 ? args.max_rounds : scenario.resolved_max_rounds();
    OrbitReport orbit = orbit_span(scenario.generators, x, rounds);
    unsigned long long ambient =
        ambient_symmetric_dimension(basis.size(), scenario.options.degree_cap);

    report.doc()["inputs"] = ordered_json::parse(serialize_scenario(scenario));
    report.doc()["result"] = orbit_report_json(orbit);
    report.doc()["result"]["ambient_dimension"] = ambient;
    bool ok = orbit.converged;
    if (certify) {
        CertificateReport cert = orbit_certificate(scenario.generators, x, orbit, cert_words, 8,
                                                   scenario.options.seed);
        report.doc()["result"]["certificate"] = {{"words", cert.words},
                                                 {"in_span", cert.in_span},
                                                 {"all_in_span", cert.all_in_span}};
        ok = ok && cert.all_in_span;
    }
    report.emit();
    if (!report.json()) {
        fmt::print("orbit span dimension: {}   (ambient bound {})\n", orbit.dimension, ambient);
        fmt::print("converged: {} after {} rounds, {} generator applications\n",
                   orbit.converged ? "yes" : "NO", orbit.rounds, orbit.generators_applied);
        for (const SymCycle &row : orbit.basis)
            fmt::print("  {}\n", row.str(basis));
    }
    return ok ? 0 : 1;
}

int run_step3(const CommonArgs &args)
{
    Scenario scenario = load_scenario(args);
    Report report("demo-step3", args.json, args.timing);
    long rounds = args.max_rounds > 0 ? args.max_rounds : scenario.options.max_rounds;
    Step3Report s3 = step3_pipeline(scenario.generators, rounds);

    ordered_json powers = ordered_json::array();
    for (const PowerSpan &p : s3.powers)
        powers.push_back({{"n", p.n},
                          {"bound", p.bound},
                          {"dimension", p.dimension},
                          {"within_bound", p.within_bound}});
    report.doc()["inputs"] = ordered_json::parse(serialize_scenario(scenario));
    report.doc()["result"] = {
        {"product_model",
         {{"g", s3.product_model.g}, {"d", s3.product_model.d}, {"rho", s3.product_model.rho}}},
        {"degree_cap", s3.degree_cap},
        {"poincare", pic_class_json(s3.poincare)},
        {"l_span", orbit_report_json(s3.l_span)},
        {"powers", std::move(powers)},
        {"converged", s3.converged}};
    report.emit();
    if (!report.json()) {
        PicBasis basis(s3.product_model);
        fmt::print("product model E^{} with d = {}, rho = {}; degree cap {}\n",
                   s3.product_model.g, s3.product_model.d, s3.product_model.rho, s3.degree_cap);
        fmt::print("orbit span of the Poincare class: dimension {}\n", s3.l_span.dimension);
        for (const SymCycle &row : s3.l_span.basis)
            fmt::print("  {}\n", row.str(basis));
        for (const PowerSpan &p : s3.powers)
            fmt::print("power n = {}: span {} <= C({}, {}) = {} {}\n", p.n, p.dimension,
                       s3.l_span.dimension + p.n - 1, p.n, p.bound,
                       p.within_bound ? "ok" : "VIOLATED");
    }
    bool ok = s3.converged;
    for (const PowerSpan &p : s3.powers)
        ok = ok && p.within_bound;
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"exact models for cycle classes on powers of an elliptic curve:\n"
                 "the transform on the cohomology model, the split Picard model,\n"
                 "affine normal forms and orbit spans"};
    app.require_subcommand(1);

    CommonArgs args;
    int fm_g = 2;
    std::string expr;
    bool dual = false;
    std::string word_text;
    bool certify = false;
    int cert_words = 50;

    auto *verify = app.add_subcommand("verify-fm", "check the inversion identity on a full basis");
    verify->add_option("--g", fm_g, "model dimension")->check(CLI::Range(1, 8));
    add_output_options(verify, args);

    auto *fourier_cmd = app.add_subcommand("fourier", "transform a class given as an expression");
    fourier_cmd->add_option("--g", fm_g, "model dimension")->check(CLI::Range(1, 8));
    fourier_cmd->add_option("--expr", expr, "class expression, e.g. '1 + 2 e1^e2'")->required();
    fourier_cmd->add_flag("--dual", dual, "apply the dual-direction transform");
    add_output_options(fourier_cmd, args);

    auto *split = app.add_subcommand("split", "symmetric/antisymmetric parts of the cycle");
    add_scenario_options(split, args);
    add_output_options(split, args);

    auto *normalize_cmd =
        app.add_subcommand("normalize", "affine normal form of a word over the generators");
    add_scenario_options(normalize_cmd, args);
    normalize_cmd->add_option("--word", word_text, "word, e.g. 'e1 t1^2 t2^-1'")->required();
    add_output_options(normalize_cmd, args);

    auto *orbit_cmd = app.add_subcommand("orbit-span", "span of the cycle's semigroup orbit");
    add_scenario_options(orbit_cmd, args);
    orbit_cmd->add_option("--max-rounds", args.max_rounds, "closure round limit (0 = ambient)");
    orbit_cmd->add_flag("--certify", certify, "check random words against the span");
    orbit_cmd->add_option("--words", cert_words, "words sampled by --certify");
    add_output_options(orbit_cmd, args);

    auto *step3 = app.add_subcommand("demo-step3",
                                     "orbit of the Poincare class and its powers on the product");
    add_scenario_options(step3, args);
    step3->add_option("--max-rounds", args.max_rounds, "closure round limit (0 = ambient)");
    add_output_options(step3, args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed())
            return run_verify_fm(fm_g, args);
        if (fourier_cmd->parsed())
            return run_fourier(fm_g, expr, dual, args);
        if (split->parsed())
            return run_split(args);
        if (normalize_cmd->parsed())
            return run_normalize(word_text, args);
        if (orbit_cmd->parsed())
            return run_orbit_span(certify, cert_words, args);
        if (step3->parsed())
            return run_step3(args);
    } catch (const Error &e) {
        fmt::print(stderr, "error [{}]: {}\n", e.code(), e.message());
        return 2;
    } catch (const std::exception &e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 2;
    }
    return 2;
}
