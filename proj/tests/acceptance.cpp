// Acceptance suite: runs every release criterion at its stated tolerance
// (all exact here) and prints one pass/fail line per criterion.
// Usage: acceptance <path-to-cli-binary>

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "mukai/fourier.hpp"
#include "mukai/scenario.hpp"
#include "support.hpp"

using namespace mukai;
using mukai::testkit::Rng;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string &what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

// ---- criterion 1: inversion on the full basis for g = 1, 2, 3 ---------

void criterion_inversion(Check &check)
{
    for (int g = 1; g <= 3; ++g) {
        InversionReport report = check_inversion(g);
        check.require(report.all_pass,
                      fmt::format("inversion failed for {} basis elements at g = {}",
                                  report.failures, g));
        check.require(report.basis_pass.size() == (size_t(1) << (2 * g)),
                      "wrong basis count");
    }
}

// ---- criterion 2: multiplication and translation pullback laws --------

void criterion_lemma_suite(Check &check)
{
    Rng rng(1001);
    ModelSpec spec(2, 1, 2);
    for (int trial = 0; trial < 100; ++trial) {
        PicClass D = rng.pic_class(spec);
        for (long n = -5; n <= 5; ++n) {
            PicClass expected(D.ns().scaled(Rational(n * n)), D.alg0().scaled(Rational(n)));
            check.require(endo_pullback(Endo::integer(spec.g, spec.d, n), D) == expected,
                          fmt::format("[n]^* disagreed at n = {}", n));
        }

        Endo f = rng.endo(spec), h = rng.endo(spec);
        PicClass flat(HermClass::zero(spec.g, spec.d), D.alg0());
        check.require(endo_pullback(f + h, flat) ==
                          endo_pullback(f, flat) + endo_pullback(h, flat),
                      "additivity failed on a class with zero Neron-Severi part");

        Point a = rng.point(spec);
        check.require(translate_pullback(a, flat) == flat,
                      "translation moved a class without Neron-Severi part");
    }

    // recorded counterexample: additivity breaks once N != 0
    QuadMatrix ns(1, 1, 0);
    ns.at(0, 0) = QuadScalar::one(0);
    PicClass witness(HermClass(ns), Pic0Class::zero(1, 1, 0));
    Endo id = Endo::identity(1, 0);
    check.require(endo_pullback(id + id, witness) !=
                      endo_pullback(id, witness) + endo_pullback(id, witness),
                  "expected the N != 0 additivity counterexample");
}

// ---- criterion 3: splitting suite --------------------------------------

void criterion_splitting(Check &check)
{
    Rng rng(1002);
    ModelSpec spec(2, 2, 1);
    for (int trial = 0; trial < 100; ++trial) {
        PicClass D = rng.pic_class(spec);
        Endo f = rng.endo(spec);
        auto [plus, minus] = sym_antisym_projectors(D);
        check.require(plus + minus == D, "projectors do not sum to the identity");
        check.require(sym_antisym_projectors(plus).first == plus, "p+ not idempotent");
        check.require(sym_antisym_projectors(minus).second == minus, "p- not idempotent");
        PicClass via_formula = (D - minus_one_pullback(D)).scaled(Rational(1, 2));
        check.require(via_formula ==
                          PicClass(HermClass::zero(spec.g, spec.d), split_antisym(D)),
                      "quoted formula disagrees with the stored Pic^0 component");
        auto [fplus, fminus] = sym_antisym_projectors(endo_pullback(f, D));
        check.require(endo_pullback(f, plus) == fplus, "p+ does not commute with f^*");
        check.require(endo_pullback(f, minus) == fminus, "p- does not commute with f^*");
    }
}

// ---- criterion 4: word oracle equivalence -------------------------------

void criterion_word_oracle(Check &check)
{
    Rng rng(1003);
    ModelSpec spec(2, 1, 2);
    GeneratorSet gens(spec, {rng.endo(spec), rng.endo(spec)}, {rng.point(spec), rng.point(spec)});
    for (int trial = 0; trial < 100; ++trial) {
        Word w = rng.word(gens, 8);
        PicClass D = rng.pic_class(spec);
        check.require(word_pullback(w, gens, D) == affine_pullback(normalize(w, gens), D),
                      "word pullback disagrees with its normal form");
    }

    // pure translation words: (N, c) |-> (N, c + sum_i l_i N a_i)
    GeneratorSet trans(spec, {}, {rng.point(spec), rng.point(spec), rng.point(spec)});
    for (int trial = 0; trial < 100; ++trial) {
        Word w;
        long len = rng.integer(1, 8);
        for (long i = 0; i < len; ++i)
            w.letters.push_back(
                WordLetter{false, static_cast<int>(rng.integer(0, 2)), rng.integer(-3, 3)});
        PicClass D = rng.pic_class(spec);
        QuadMatrix shift(spec.g, spec.rho, spec.d);
        for (const WordLetter &letter : w.letters)
            shift = shift + (D.ns().matrix() *
                             trans.points[static_cast<size_t>(letter.index)].matrix())
                                .scaled(Rational(static_cast<long>(letter.exponent)));
        check.require(word_pullback(w, trans, D) ==
                          PicClass(D.ns(), Pic0Class(D.alg0().matrix() + shift)),
                      "pure translation word missed the affine formula");
    }
}

// ---- criterion 5: orbit finiteness on the presets -----------------------

void criterion_orbit_finiteness(Check &check)
{
    for (const char *name : {"endo-only", "fg-translations", "semidirect", "number-field"}) {
        Scenario s = make_preset(name);
        PicBasis basis(s.model);
        SymCycle x = expand_class(s.cycle, basis, s.options.degree_cap);
        OrbitReport report = orbit_span(s.generators, x, s.resolved_max_rounds());
        unsigned long long ambient =
            ambient_symmetric_dimension(basis.size(), s.options.degree_cap);
        check.require(report.converged, fmt::format("preset {} did not converge", name));
        check.require(static_cast<unsigned long long>(report.dimension) <= ambient,
                      fmt::format("preset {} exceeded the ambient bound", name));

        // re-applying every generator must not grow the span
        EchelonBasis rebuilt;
        for (const SymCycle &row : report.basis)
            rebuilt.insert(row);
        std::vector<AffineEndo> letters;
        for (const Endo &f : s.generators.endos)
            letters.push_back({f, Point::zero(s.model.g, s.model.rho, s.model.d)});
        for (const Point &a : s.generators.points)
            letters.push_back({Endo::identity(s.model.g, s.model.d), a});
        for (const SymCycle &row : report.basis)
            for (const AffineEndo &h : letters)
                check.require(rebuilt.contains(sym_pullback(h, row, basis)),
                              fmt::format("preset {} span not closed", name));
    }

    // documented minimal scenarios with frozen dimensions
    ModelSpec spec(1, 0, 1);
    QuadMatrix one(1, 1, 0);
    one.at(0, 0) = QuadScalar::one(0);
    PicBasis basis(spec);

    GeneratorSet translation(spec, {}, {Point(one)});
    SymCycle polarization =
        expand_class(ns_lift(HermClass(QuadMatrix::identity(1, 0)), 1), basis, 2);
    OrbitReport two = orbit_span(translation, polarization, 100);
    check.require(two.converged && two.dimension == 2,
                  fmt::format("translation scenario expected dimension 2, got {}", two.dimension));

    GeneratorSet mixed(spec, {Endo::integer(1, 0, 2)}, {Point(one)});
    SymCycle flat = expand_class(PicClass(HermClass::zero(1, 0), Pic0Class(one)), basis, 2);
    OrbitReport one_dim = orbit_span(mixed, flat, 100);
    check.require(one_dim.converged && one_dim.dimension == 1,
                  fmt::format("mixed scenario expected dimension 1, got {}", one_dim.dimension));
}

// ---- criterion 6: projection formula, base change, exp identity ---------

void criterion_product_identities(Check &check)
{
    Rng rng(1004);
    for (int g = 1; g <= 2; ++g) {
        FMContext ctx = poincare_class(g);
        for (int trial = 0; trial < 50; ++trial) {
            LinearSubstitution f = rng.subst(ctx.source);
            LinearSubstitution lifted = LinearSubstitution::lift_first(f, ctx.prod);
            Multivector u = rng.multivector(ctx.prod, 6);

            // base change through the first projection
            check.require(pullback(f, fiber_integrate(Factor::second, u)) ==
                              fiber_integrate(Factor::second, pullback(lifted, u)),
                          "base change identity failed");

            // projection formula
            Multivector x = rng.multivector(ctx.dual, 3);
            check.require(
                fiber_integrate(Factor::first,
                                wedge(project_pullback(Factor::second, x, ctx.prod), u)) ==
                    wedge(x, fiber_integrate(Factor::first, u)),
                "projection formula failed");

            // the pullback slides through the exponential
            Multivector eta = project_pullback(Factor::second, x, ctx.prod);
            check.require(pullback(lifted, wedge(eta, ctx.exp_l)) ==
                              wedge(eta, exp_class(pullback(lifted, ctx.l), ctx.prod->dim())),
                          "exponential transport identity failed");
        }
    }
}

// ---- criterion 7: the product pipeline stays inside the power bounds ----

void criterion_step3(Check &check)
{
    for (int g = 1; g <= 2; ++g) {
        Scenario s = make_preset("semidirect", g, 0, 1);
        Step3Report report = step3_pipeline(s.generators);
        check.require(report.converged, fmt::format("pipeline did not converge at g = {}", g));
        check.require(static_cast<int>(report.powers.size()) == 2 * g, "missing power spans");
        for (const PowerSpan &p : report.powers)
            check.require(p.within_bound,
                          fmt::format("power span n = {} exceeded C({}, {}) at g = {}", p.n,
                                      report.l_span.dimension + p.n - 1, p.n, g));
    }
}

// ---- criterion 8: round trip and byte determinism -----------------------

std::string capture(const std::string &command)
{
    FILE *pipe = popen(command.c_str(), "r");
    if (!pipe)
        return "";
    std::string out;
    char buffer[4096];
    size_t n;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        out.append(buffer, n);
    pclose(pipe);
    return out;
}

void criterion_cli(Check &check, const std::string &cli)
{
    for (const char *name : {"endo-only", "fg-translations", "semidirect", "number-field"}) {
        Scenario s = make_preset(name);
        std::string text = serialize_scenario(s);
        check.require(parse_scenario(text) == s,
                      fmt::format("round trip failed for preset {}", name));
        check.require(serialize_scenario(parse_scenario(text)) == text,
                      fmt::format("serialization unstable for preset {}", name));
    }

    if (cli.empty()) {
        check.require(false, "no CLI binary path supplied");
        return;
    }
    std::string cmd = cli + " orbit-span --preset fg-translations --certify --json";
    std::string first = capture(cmd);
    std::string second = capture(cmd);
    check.require(!first.empty(), "CLI produced no output");
    check.require(first == second, "JSON reports differ between identical runs");

    std::string verify = capture(cli + " verify-fm --g 2 --json");
    check.require(verify.find("\"ok\": true") != std::string::npos,
                  "CLI inversion check did not pass");
    std::string split = capture(cli + " split --preset semidirect --json");
    check.require(split.find("\"symmetric\"") != std::string::npos,
                  "CLI split report missing fields");
}

} // namespace

int main(int argc, char **argv)
{
    std::string cli = argc > 1 ? argv[1] : "";

    struct Criterion {
        const char *name;
        std::function<void(Check &)> run;
    };
    std::vector<Criterion> criteria = {
        {"1 inversion identity on the full basis (g = 1, 2, 3)", criterion_inversion},
        {"2 multiplication/translation pullback laws", criterion_lemma_suite},
        {"3 symmetric/antisymmetric splitting", criterion_splitting},
        {"4 word pullback vs normal form", criterion_word_oracle},
        {"5 orbit span finiteness on the presets", criterion_orbit_finiteness},
        {"6 projection formula and base change", criterion_product_identities},
        {"7 product pipeline within power bounds", criterion_step3},
        {"8 round trip and byte determinism",
         [&cli](Check &check) { criterion_cli(check, cli); }},
    };

    int failures = 0;
    for (auto &criterion : criteria) {
        Check check;
        try {
            criterion.run(check);
        } catch (const std::exception &e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        if (check.ok) {
            fmt::print("criterion {}: PASS\n", criterion.name);
        } else {
            fmt::print("criterion {}: FAIL ({})\n", criterion.name, check.detail);
            ++failures;
        }
    }
    if (failures == 0)
        fmt::print("all {} acceptance criteria passed\n", criteria.size());
    else
        fmt::print("{} acceptance criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
