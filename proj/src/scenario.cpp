#include "mukai/scenario.hpp"

#include <cctype>

#include <json.hpp>

namespace mukai {

using nlohmann::ordered_json;

long Scenario::resolved_max_rounds() const
{
    if (options.max_rounds > 0)
        return options.max_rounds;
    PicBasis basis(model);
    unsigned long long ambient = ambient_symmetric_dimension(basis.size(), options.degree_cap);
    return static_cast<long>(std::min<unsigned long long>(ambient + 1, 1u << 30));
}

bool operator==(const Scenario &a, const Scenario &b)
{
    return a.model == b.model && a.cycle == b.cycle && a.generators.endos == b.generators.endos &&
           a.generators.points == b.generators.points && a.options == b.options;
}

// ---- JSON helpers ----------------------------------------------------

static mpz_class json_to_mpz(const ordered_json &v, const char *what)
{
    if (v.is_number_integer())
        return mpz_class(v.get<long>());
    if (v.is_string()) {
        try {
            return mpz_class(v.get<std::string>());
        } catch (const std::invalid_argument &) {
            throw Error("schema", std::string(what) + ": bad integer string");
        }
    }
    throw Error("schema", std::string(what) + ": expected an integer (or decimal string)");
}

static ordered_json mpz_to_json(const mpz_class &z)
{
    if (z.fits_slong_p())
        return static_cast<long long>(z.get_si());
    return z.get_str();
}

static QuadScalar json_to_quad(const ordered_json &v, int d, const char *what)
{
    if (!v.is_array() || v.size() != 4)
        throw Error("schema", std::string(what) + ": a scalar is [re_num, re_den, im_num, im_den]");
    mpz_class rn = json_to_mpz(v[0], what);
    mpz_class rd = json_to_mpz(v[1], what);
    mpz_class in = json_to_mpz(v[2], what);
    mpz_class id = json_to_mpz(v[3], what);
    if (sgn(rd) <= 0 || sgn(id) <= 0)
        throw Error("schema", std::string(what) + ": denominators must be positive");
    return QuadScalar(Rational(rn, rd), Rational(in, id), d);
}

static ordered_json quad_to_json(const QuadScalar &q)
{
    return ordered_json::array({mpz_to_json(q.re().num()), mpz_to_json(q.re().den()),
                                mpz_to_json(q.im().num()), mpz_to_json(q.im().den())});
}

static QuadMatrix json_to_matrix(const ordered_json &v, int rows, int cols, int d, const char *what)
{
    if (!v.is_array() || static_cast<int>(v.size()) != rows)
        throw Error("bad-shape", std::string(what) + ": expected " + std::to_string(rows) +
                                     " rows");
    QuadMatrix m(rows, cols, d);
    for (int i = 0; i < rows; ++i) {
        const auto &row = v[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw Error("bad-shape", std::string(what) + ": expected " + std::to_string(cols) +
                                         " columns");
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = json_to_quad(row[static_cast<size_t>(j)], d, what);
    }
    return m;
}

static ordered_json matrix_to_json(const QuadMatrix &m)
{
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(quad_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

static const ordered_json &field(const ordered_json &obj, const char *key)
{
    if (!obj.is_object() || !obj.contains(key))
        throw Error("schema", std::string("missing field '") + key + "'");
    return obj.at(key);
}

static int int_field(const ordered_json &obj, const char *key)
{
    const auto &v = field(obj, key);
    if (!v.is_number_integer())
        throw Error("schema", std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

Scenario parse_scenario(const std::string &text)
{
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw Error("schema", std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw Error("schema", "top level must be an object");

    const auto &model_j = field(doc, "model");
    ModelSpec model(int_field(model_j, "g"), int_field(model_j, "d"), int_field(model_j, "rho"));

    const auto &cycle_j = field(doc, "cycle");
    QuadMatrix ns = json_to_matrix(field(cycle_j, "ns"), model.g, model.g, model.d, "cycle.ns");
    QuadMatrix pic0 =
        json_to_matrix(field(cycle_j, "pic0"), model.g, model.rho, model.d, "cycle.pic0");
    PicClass cycle(HermClass(std::move(ns)), Pic0Class(std::move(pic0)));

    const auto &gens_j = field(doc, "generators");
    if (!gens_j.is_array())
        throw Error("schema", "'generators' must be an array");
    std::vector<Endo> endos;
    std::vector<Point> points;
    for (const auto &gen : gens_j) {
        const auto &type = field(gen, "type");
        if (!type.is_string())
            throw Error("schema", "generator 'type' must be a string");
        std::string kind = type.get<std::string>();
        if (kind == "endo") {
            endos.push_back(Endo(json_to_matrix(field(gen, "matrix"), model.g, model.g, model.d,
                                                "generator matrix")));
        } else if (kind == "translation") {
            points.push_back(Point(json_to_matrix(field(gen, "point"), model.g, model.rho, model.d,
                                                  "generator point")));
        } else {
            throw Error("schema", "generator type must be 'endo' or 'translation', got '" + kind +
                                      "'");
        }
    }

    ScenarioOptions options{2 * model.g, 0, 0};
    if (doc.contains("options")) {
        const auto &opt = doc.at("options");
        if (!opt.is_object())
            throw Error("schema", "'options' must be an object");
        if (opt.contains("degree")) {
            if (!opt.at("degree").is_number_integer() || opt.at("degree").get<int>() < 1)
                throw Error("schema", "options.degree must be a positive integer");
            options.degree_cap = opt.at("degree").get<int>();
        }
        if (opt.contains("max_rounds")) {
            if (!opt.at("max_rounds").is_number_integer() || opt.at("max_rounds").get<long>() < 0)
                throw Error("schema", "options.max_rounds must be a non-negative integer");
            options.max_rounds = opt.at("max_rounds").get<long>();
        }
        if (opt.contains("seed")) {
            const auto &seed = opt.at("seed");
            if (!seed.is_number_unsigned() &&
                !(seed.is_number_integer() && seed.get<long long>() >= 0))
                throw Error("schema", "options.seed must be a non-negative integer");
            options.seed = seed.get<uint64_t>();
        }
    }

    return Scenario{model, std::move(cycle),
                    GeneratorSet(model, std::move(endos), std::move(points)), options};
}

std::string serialize_scenario(const Scenario &s)
{
    ordered_json doc;
    doc["model"] = {{"g", s.model.g}, {"d", s.model.d}, {"rho", s.model.rho}};
    doc["cycle"] = {{"ns", matrix_to_json(s.cycle.ns().matrix())},
                    {"pic0", matrix_to_json(s.cycle.alg0().matrix())}};
    ordered_json gens = ordered_json::array();
    for (const Endo &f : s.generators.endos)
        gens.push_back({{"type", "endo"}, {"matrix", matrix_to_json(f.matrix())}});
    for (const Point &a : s.generators.points)
        gens.push_back({{"type", "translation"}, {"point", matrix_to_json(a.matrix())}});
    doc["generators"] = std::move(gens);
    doc["options"] = {{"degree", s.options.degree_cap},
                      {"max_rounds", s.options.max_rounds},
                      {"seed", s.options.seed}};
    return doc.dump(2) + "\n";
}

// ---- presets ----------------------------------------------------------

Scenario make_preset(const std::string &name, int g, int d, int rho)
{
    ModelSpec model(g, d, rho);
    std::vector<Endo> endos;
    std::vector<Point> points;

    auto add_doubling = [&] { endos.push_back(Endo::integer(g, d, 2)); };
    auto add_cycle_shift = [&] {
        if (g < 2)
            return;
        QuadMatrix m(g, g, d);
        for (int i = 0; i < g; ++i)
            m.at((i + 1) % g, i) = QuadScalar::one(d);
        endos.push_back(Endo(m));
    };
    auto add_omega_scalar = [&] {
        if (d > 0)
            endos.push_back(Endo(QuadMatrix::identity(g, d).scaled(QuadScalar::omega(d))));
    };
    auto add_endo_basis = [&] {
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < g; ++j) {
                QuadMatrix m(g, g, d);
                m.at(i, j) = QuadScalar::one(d);
                endos.push_back(Endo(m));
                if (d > 0) {
                    QuadMatrix mw(g, g, d);
                    mw.at(i, j) = QuadScalar::omega(d);
                    endos.push_back(Endo(mw));
                }
            }
    };
    auto add_point_basis = [&] {
        for (int i = 0; i < g; ++i)
            for (int r = 0; r < rho; ++r) {
                QuadMatrix m(g, rho, d);
                m.at(i, r) = QuadScalar::one(d);
                points.push_back(Point(m));
                if (d > 0) {
                    QuadMatrix mw(g, rho, d);
                    mw.at(i, r) = QuadScalar::omega(d);
                    points.push_back(Point(mw));
                }
            }
    };

    if (name == "endo-only") {
        add_doubling();
        add_cycle_shift();
        add_omega_scalar();
    } else if (name == "fg-translations") {
        add_point_basis();
    } else if (name == "semidirect") {
        add_doubling();
        add_cycle_shift();
        add_omega_scalar();
        add_point_basis();
    } else if (name == "number-field") {
        add_endo_basis();
        add_point_basis();
    } else {
        throw Error("schema", "unknown preset '" + name +
                                  "' (endo-only, fg-translations, semidirect, number-field)");
    }

    PicClass cycle = ns_lift(HermClass(QuadMatrix::identity(g, d)), rho);
    return Scenario{model, std::move(cycle), GeneratorSet(model, std::move(endos), std::move(points)),
                    ScenarioOptions{2 * g, 0, 0}};
}

// ---- class expressions -------------------------------------------------

namespace {

class ExprParser {
public:
    ExprParser(const std::string &text, Ground ground)
        : src_(text), ground_(std::move(ground))
    {}

    Multivector parse()
    {
        Multivector total(ground_);
        skip_ws();
        bool negate = false;
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            negate = peek() == '-';
            advance();
        }
        total = total + parse_term(negate);
        skip_ws();
        while (!at_end()) {
            char c = peek();
            if (c != '+' && c != '-')
                fail("expected '+' or '-'");
            advance();
            total = total + parse_term(c == '-');
            skip_ws();
        }
        return total;
    }

private:
    [[noreturn]] void fail(const std::string &msg) const { fail_at(line_, col_, msg); }

    [[noreturn]] void fail_at(int line, int col, const std::string &msg) const
    {
        throw Error("parse",
                    "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg);
    }

    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }

    void advance()
    {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            advance();
    }

    std::string read_digits()
    {
        std::string out;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            out += peek();
            advance();
        }
        return out;
    }

    Rational parse_rational()
    {
        std::string num = read_digits();
        if (at_end() || peek() != '/')
            return Rational::from_string(num);
        advance();
        std::string den = read_digits();
        if (den.empty())
            fail("expected digits after '/'");
        if (den == "0")
            fail("zero denominator");
        return Rational(mpz_class(num), mpz_class(den));
    }

    Multivector parse_atom()
    {
        int line = line_, col = col_;
        if (at_end() || !std::isalpha(static_cast<unsigned char>(peek())))
            fail("expected a generator like e1 or f2");
        std::string label;
        while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
            label += peek();
            advance();
        }
        std::string digits = read_digits();
        if (digits.empty())
            fail_at(line, col, "generator '" + label + "' needs an index");
        label += digits;
        int idx = ground_->index_of(label);
        if (idx < 0)
            fail_at(line, col, "unknown generator '" + label + "' on this space");
        return Multivector::generator(ground_, idx);
    }

    Multivector parse_term(bool negate)
    {
        skip_ws();
        if (at_end())
            fail("expected a term");
        Rational coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_rational();
            have_coeff = true;
            skip_ws();
        }
        Multivector acc = Multivector::unit(ground_);
        bool have_atom = false;
        if (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
            acc = parse_atom();
            have_atom = true;
            skip_ws();
            while (!at_end() && peek() == '^') {
                advance();
                skip_ws();
                acc = wedge(acc, parse_atom());
                skip_ws();
            }
        }
        if (!have_atom && !have_coeff)
            fail("expected a term");
        if (negate)
            coeff = -coeff;
        return acc.scaled(coeff);
    }

    const std::string &src_;
    Ground ground_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

} // namespace

Multivector parse_class_expr(const std::string &text, const Ground &ground)
{
    return ExprParser(text, ground).parse();
}

} // namespace mukai
