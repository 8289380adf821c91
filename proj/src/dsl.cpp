#include "cdga/dsl.hpp"

#include <cctype>
#include <sstream>

namespace cdga {

namespace {

enum class Tok { ident, integer, punct, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    int line = 1, col = 1;
};

bool is_keyword(const std::string& s) {
    return s == "algebra" || s == "generators" || s == "d";
}

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

struct Parser {
    std::vector<Token> toks;
    std::vector<std::string> lines;
    std::vector<Diagnostic> diags;
    std::size_t pos = 0;
    bool bad = false; // a syntax error stopped the parse

    void error_at(const Token& t, std::string msg) {
        Diagnostic d;
        d.severity = Severity::error;
        d.message = std::move(msg);
        d.line = t.line;
        d.column = t.col;
        if (t.line >= 1 && t.line <= (int)lines.size())
            d.excerpt = trimmed(lines[t.line - 1]);
        diags.push_back(std::move(d));
    }
    void syntax_error(const Token& t, std::string msg) {
        error_at(t, std::move(msg));
        bad = true;
    }

    bool lex(const std::string& src) {
        std::stringstream ss(src);
        std::string line;
        while (std::getline(ss, line)) lines.push_back(line);

        int ln = 1, col = 1;
        auto push = [&](Tok k, std::string text, int c) {
            toks.push_back({k, std::move(text), ln, c});
        };
        for (std::size_t i = 0; i < src.size();) {
            char c = src[i];
            if (c == '\n') { ++ln; col = 1; ++i; continue; }
            if (c == ' ' || c == '\t' || c == '\r') { ++col; ++i; continue; }
            if (c == '#') {
                while (i < src.size() && src[i] != '\n') { ++i; ++col; }
                continue;
            }
            if (std::isalpha((unsigned char)c) || c == '_') {
                int start = col;
                std::string t;
                while (i < src.size() &&
                       (std::isalnum((unsigned char)src[i]) || src[i] == '_')) {
                    t += src[i++]; ++col;
                }
                push(Tok::ident, std::move(t), start);
                continue;
            }
            if (std::isdigit((unsigned char)c)) {
                int start = col;
                std::string t;
                while (i < src.size() && std::isdigit((unsigned char)src[i])) {
                    t += src[i++]; ++col;
                }
                push(Tok::integer, std::move(t), start);
                continue;
            }
            if (std::string("{}:,=+-*/()[]").find(c) != std::string::npos) {
                push(Tok::punct, std::string(1, c), col);
                ++col; ++i;
                continue;
            }
            syntax_error({Tok::punct, std::string(1, c), ln, col},
                         std::string("unexpected character '") + c + "'");
            return false;
        }
        toks.push_back({Tok::end, "", ln, col});
        return true;
    }

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t k = pos + ahead;
        return k < toks.size() ? toks[k] : toks.back();
    }
    const Token& next() {
        const Token& t = peek();
        if (pos + 1 < toks.size()) ++pos;
        return t;
    }
    bool at_punct(const char* p, std::size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return t.kind == Tok::punct && t.text == p;
    }
    bool eat_punct(const char* p) {
        if (!at_punct(p)) return false;
        next();
        return true;
    }
    bool expect_punct(const char* p, const char* context) {
        if (eat_punct(p)) return true;
        syntax_error(peek(), std::string("expected '") + p + "' " + context);
        return false;
    }

    // expr := term (('+'|'-') term)*
    // term := factor ('*' factor)*
    // factor := '-' factor | INT ('/' INT)? | IDENT | '(' expr ')'
    std::optional<Element> parse_expr(const AlgebraPtr& alg) {
        auto acc = parse_term(alg);
        if (!acc) return std::nullopt;
        while (at_punct("+") || at_punct("-")) {
            bool plus = next().text == "+";
            auto rhs = parse_term(alg);
            if (!rhs) return std::nullopt;
            acc = plus ? *acc + *rhs : *acc - *rhs;
        }
        return acc;
    }

    std::optional<Element> parse_term(const AlgebraPtr& alg) {
        auto acc = parse_factor(alg);
        if (!acc) return std::nullopt;
        while (at_punct("*")) {
            next();
            auto rhs = parse_factor(alg);
            if (!rhs) return std::nullopt;
            acc = *acc * *rhs;
        }
        return acc;
    }

    std::optional<Element> parse_factor(const AlgebraPtr& alg) {
        if (at_punct("-")) {
            next();
            auto f = parse_factor(alg);
            if (!f) return std::nullopt;
            return -*f;
        }
        if (at_punct("(")) {
            next();
            auto e = parse_expr(alg);
            if (!e) return std::nullopt;
            if (!expect_punct(")", "to close the parenthesized expression"))
                return std::nullopt;
            return e;
        }
        const Token& t = peek();
        if (t.kind == Tok::integer) {
            next();
            std::string text = t.text;
            if (at_punct("/")) {
                next();
                const Token& q = peek();
                if (q.kind != Tok::integer) {
                    syntax_error(q, "expected an integer denominator");
                    return std::nullopt;
                }
                next();
                text += "/" + q.text;
            }
            auto s = parse_scalar(text);
            if (!s) {
                syntax_error(t, "invalid rational constant '" + text + "'");
                return std::nullopt;
            }
            return Element::unit(alg).scaled(*s);
        }
        if (t.kind == Tok::ident) {
            next();
            int i = alg->index_of(t.text);
            if (i < 0) {
                syntax_error(t, "unknown generator '" + t.text + "'");
                return std::nullopt;
            }
            return Element::generator(alg, (std::size_t)i);
        }
        syntax_error(t, "expected a constant, generator, or parenthesized expression");
        return std::nullopt;
    }
};

bool can_start_expr(const Parser& p) {
    const Token& t = p.peek();
    if (t.kind == Tok::ident || t.kind == Tok::integer) return true;
    return t.kind == Tok::punct && (t.text == "-" || t.text == "(");
}

std::optional<int> abelian_name_rank(const std::string& name) {
    std::string digits;
    if (name.rfind("abelian(", 0) == 0 && name.back() == ')')
        digits = name.substr(8, name.size() - 9);
    else if (name.rfind("abelian", 0) == 0)
        digits = name.substr(7);
    else
        return std::nullopt;
    if (digits.empty() || digits.size() > 2) return std::nullopt;
    for (char c : digits)
        if (!std::isdigit((unsigned char)c)) return std::nullopt;
    int n = std::stoi(digits);
    if (n < 1 || n > 16) return std::nullopt;
    return n;
}

} // namespace

bool ParseResult::ok() const {
    for (const auto& d : diagnostics)
        if (d.severity == Severity::error) return false;
    return true;
}

std::string format_diagnostic(const Diagnostic& d) {
    std::ostringstream os;
    os << (d.severity == Severity::error ? "error" : "warning") << ": " << d.message
       << " (line " << d.line << ", column " << d.column << ")";
    if (!d.excerpt.empty()) os << "\n  | " << d.excerpt;
    return os.str();
}

ParseResult parse_algebra(const std::string& source) {
    ParseResult out;
    Parser p;
    if (!p.lex(source)) {
        out.diagnostics = std::move(p.diags);
        return out;
    }

    auto finish = [&]() {
        out.diagnostics = std::move(p.diags);
        return out;
    };
    // diagnostics move into `out` only at finish(), so failure checks before
    // that must look at the parser's own list
    auto parse_failed = [&]() {
        for (const auto& d : p.diags)
            if (d.severity == Severity::error) return true;
        return false;
    };

    if (!(p.peek().kind == Tok::ident && p.peek().text == "algebra")) {
        p.syntax_error(p.peek(), "expected 'algebra <name> { ... }'");
        return finish();
    }
    p.next();
    if (p.peek().kind != Tok::ident || is_keyword(p.peek().text)) {
        p.syntax_error(p.peek(), "expected an algebra name");
        return finish();
    }
    out.name = p.next().text;
    if (!p.expect_punct("{", "after the algebra name")) return finish();

    if (!(p.peek().kind == Tok::ident && p.peek().text == "generators")) {
        p.syntax_error(p.peek(), "expected 'generators: name:degree, ...'");
        return finish();
    }
    p.next();
    if (!p.expect_punct(":", "after 'generators'")) return finish();

    std::vector<Generator> gens;
    while (true) {
        const Token& nameTok = p.peek();
        if (nameTok.kind != Tok::ident) {
            p.syntax_error(nameTok, "expected a generator name");
            return finish();
        }
        if (is_keyword(nameTok.text)) {
            p.syntax_error(nameTok, "'" + nameTok.text + "' is reserved and cannot name a generator");
            return finish();
        }
        p.next();
        bool dup = false;
        for (const auto& g : gens) dup = dup || g.name == nameTok.text;
        if (dup) p.error_at(nameTok, "duplicate generator '" + nameTok.text + "'");
        if (!p.expect_punct(":", "after the generator name")) return finish();
        const Token& degTok = p.peek();
        if (degTok.kind != Tok::integer) {
            p.syntax_error(degTok, "expected a positive integer degree");
            return finish();
        }
        p.next();
        long deg = std::stol(degTok.text.size() > 6 ? "0" : degTok.text);
        if (deg < 1) {
            p.error_at(degTok, "generator degree must be at least 1");
            deg = 1;
        }
        gens.push_back({nameTok.text, (int)deg});
        if (!p.eat_punct(",")) break;
    }
    if (parse_failed()) return finish();

    AlgebraPtr alg = Algebra::make(gens);

    DifferentialSpec spec;
    std::map<std::string, Token> d_lines;
    StructureConstants sc;
    sc.n = (int)gens.size();
    std::map<std::pair<int, int>, Token> bracket_lines;
    bool mixing_reported = false;

    while (!p.at_punct("}") && p.peek().kind != Tok::end) {
        if (p.peek().kind == Tok::ident && p.peek().text == "d") {
            const Token& kw = p.next();
            if (!bracket_lines.empty() && !mixing_reported) {
                p.error_at(kw, "differential assignments cannot be mixed with bracket relations");
                mixing_reported = true;
            }
            const Token& nameTok = p.peek();
            if (nameTok.kind != Tok::ident || alg->index_of(nameTok.text) < 0) {
                p.syntax_error(nameTok, nameTok.kind == Tok::ident
                                            ? "unknown generator '" + nameTok.text + "'"
                                            : std::string("expected a generator name after 'd'"));
                return finish();
            }
            p.next();
            if (!p.expect_punct("=", "in the differential assignment")) return finish();
            auto e = p.parse_expr(alg);
            if (!e) return finish();
            if (d_lines.count(nameTok.text))
                p.error_at(nameTok, "generator '" + nameTok.text + "' already has a differential");
            else {
                d_lines.emplace(nameTok.text, nameTok);
                spec.by_generator[nameTok.text] = *e;
            }
            continue;
        }
        if (p.at_punct("[")) {
            const Token& open = p.next();
            if (!d_lines.empty() && !mixing_reported) {
                p.error_at(open, "bracket relations cannot be mixed with differential assignments");
                mixing_reported = true;
            }
            auto gen_index = [&]() -> int {
                const Token& t = p.peek();
                if (t.kind != Tok::ident || alg->index_of(t.text) < 0) {
                    p.syntax_error(t, t.kind == Tok::ident
                                          ? "unknown generator '" + t.text + "'"
                                          : std::string("expected a generator name in the bracket"));
                    return -1;
                }
                if (alg->degree((std::size_t)alg->index_of(t.text)) != 1)
                    p.error_at(t, "bracket relations need degree-1 generators");
                p.next();
                return alg->index_of(t.text);
            };
            int i = gen_index();
            if (i < 0) return finish();
            if (!p.expect_punct(",", "between the bracket arguments")) return finish();
            int j = gen_index();
            if (j < 0) return finish();
            if (!p.expect_punct("]", "to close the bracket")) return finish();
            if (!p.expect_punct("=", "after the bracket")) return finish();
            const Token& exprTok = p.peek();
            auto e = p.parse_expr(alg);
            if (!e) return finish();

            if (i == j) {
                p.error_at(open, "the bracket of a generator with itself is zero; omit the line");
                continue;
            }
            Scalar flip = 1;
            if (i > j) { std::swap(i, j); flip = -1; }
            if (bracket_lines.count({i, j})) {
                p.error_at(open, "this bracket was already given");
                continue;
            }
            bracket_lines.emplace(std::pair<int, int>{i, j}, open);
            bool linear = true;
            for (const auto& [mono, coeff] : e->terms()) {
                int hits = 0, which = -1;
                for (std::size_t g = 0; g < mono.exps.size(); ++g)
                    if (mono.exps[g] != 0) { hits += (int)mono.exps[g]; which = (int)g; }
                if (hits != 1) { linear = false; break; }
                sc.c[{i, j, which}] = flip * coeff;
            }
            if (!linear)
                p.error_at(exprTok, "bracket values must be linear combinations of generators");
            continue;
        }
        p.syntax_error(p.peek(), "expected 'd <generator> = ...', '[x, y] = ...', or '}'");
        return finish();
    }
    if (!p.expect_punct("}", "to close the algebra")) return finish();
    if (p.peek().kind != Tok::end) {
        p.syntax_error(p.peek(), "unexpected trailing input after the algebra");
        return finish();
    }
    if (parse_failed()) return finish();
    out.well_formed = true;

    if (!bracket_lines.empty()) {
        for (const auto& g : gens)
            if (g.degree != 1) {
                out.well_formed = false;
                p.error_at(p.toks.front(), "bracket form needs every generator in degree 1");
                return finish();
            }
        if (auto bad = check_jacobi(sc)) {
            Token at = bracket_lines.begin()->second;
            for (const auto& [key, tok] : bracket_lines)
                if (key.first == bad->i && key.second == bad->j) at = tok;
            p.error_at(at, "structure constants violate the Jacobi identity on generators (" +
                               std::to_string(bad->i + 1) + ", " + std::to_string(bad->j + 1) +
                               ", " + std::to_string(bad->k + 1) + ")");
            return finish();
        }
        out.cdga = chevalley_eilenberg(sc);
        return finish();
    }

    auto outcome = validate(alg, spec);
    for (const auto& issue : outcome.issues) {
        Token at = p.toks.front();
        auto it = d_lines.find(issue.generator);
        if (it != d_lines.end()) at = it->second;
        std::string msg = issue.message;
        if (!issue.residue.is_zero()) msg += " (residue " + issue.residue.str() + ")";
        p.error_at(at, msg);
    }
    if (outcome.ok()) out.cdga = std::move(outcome.cdga);
    return finish();
}

ElementParse parse_element(const AlgebraPtr& alg, const std::string& text) {
    ElementParse out;
    Parser p;
    if (!p.lex(text)) {
        out.diagnostics = std::move(p.diags);
        return out;
    }
    if (!can_start_expr(p)) {
        p.syntax_error(p.peek(), "expected an element expression");
        out.diagnostics = std::move(p.diags);
        return out;
    }
    auto e = p.parse_expr(alg);
    if (e && p.peek().kind != Tok::end)
        p.syntax_error(p.peek(), "unexpected trailing input after the expression");
    out.diagnostics = std::move(p.diags);
    if (e && out.diagnostics.empty()) out.element = std::move(e);
    return out;
}

std::optional<std::string> catalog_source(const std::string& name) {
    if (name == "g6_15_m1")
        return std::string(
            "algebra g6_15_m1 {\n"
            "  generators: x1:1, x2:1, x3:1, x4:1, x5:1, x6:1\n"
            "  d x1 = -x2*x3\n"
            "  d x2 = -x2*x6\n"
            "  d x3 = x3*x6\n"
            "  d x4 = -x2*x6 - x4*x6\n"
            "  d x5 = -x3*x6 + x5*x6\n"
            "}\n");
    if (name == "heisenberg3")
        return std::string(
            "algebra heisenberg3 {\n"
            "  generators: x1:1, x2:1, x3:1\n"
            "  [x1, x2] = x3\n"
            "}\n");
    if (name == "s2_model")
        return std::string(
            "algebra s2_model {\n"
            "  generators: u:2, v:3\n"
            "  d v = u*u\n"
            "}\n");
    if (name == "circle")
        return std::string(
            "algebra circle {\n"
            "  generators: t:1\n"
            "}\n");
    if (auto n = abelian_name_rank(name)) {
        std::ostringstream os;
        os << "algebra abelian" << *n << " {\n  generators: ";
        for (int i = 1; i <= *n; ++i) os << (i > 1 ? ", " : "") << "x" << i << ":1";
        os << "\n}\n";
        return os.str();
    }
    return std::nullopt;
}

} // namespace cdga
