#include "cdga/cli.hpp"

#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "cdga/dsl.hpp"
#include "cdga/errors.hpp"
#include "cdga/report.hpp"

namespace cdga {

namespace {

// Signals an exit code after diagnostics were already written.
struct EarlyExit {
    int code;
};

struct Loaded {
    Cdga cdga;
    std::string name;
};

Loaded load_source(const std::string& arg, std::ostream& err) {
    std::string src;
    if (std::ifstream f(arg); f) {
        std::stringstream ss;
        ss << f.rdbuf();
        src = ss.str();
    } else if (auto cat = catalog_source(arg)) {
        src = *cat;
    } else {
        err << "error: '" << arg << "' is neither a readable file nor a catalog entry\n"
            << "catalog entries:";
        for (const auto& n : catalog_names()) err << ' ' << n;
        err << "\n";
        throw EarlyExit{2};
    }
    ParseResult res = parse_algebra(src);
    for (const auto& d : res.diagnostics) err << format_diagnostic(d) << "\n";
    if (!res.ok()) throw EarlyExit{res.well_formed ? 1 : 2};
    return {*res.cdga, res.name};
}

Element load_element(const Cdga& c, const std::string& text, std::ostream& err) {
    ElementParse res = parse_element(c.algebra(), text);
    for (const auto& d : res.diagnostics)
        err << "in '" << text << "': " << format_diagnostic(d) << "\n";
    if (!res.ok()) throw EarlyExit{2};
    return *res.element;
}

// Throws precondition_error unless e is a nonzero homogeneous cocycle.
void require_cocycle(const Cdga& c, const Element& e, const std::string& text) {
    if (e.is_zero())
        throw precondition_error("'" + text + "' is zero");
    if (!e.homogeneous_degree())
        throw precondition_error("'" + text + "' is not homogeneous");
    if (!c.d(e).is_zero())
        throw precondition_error("'" + text + "' is not closed, d gives " + c.d(e).str());
}

int default_top(const Cdga& c) {
    int s = 0;
    for (const auto& g : c.algebra()->generators()) s += g.degree;
    return s;
}

Json header(const char* command, const std::string& name) {
    Json j;
    j["engine_version"] = engine_version;
    j["command"] = command;
    j["algebra"] = name;
    return j;
}

void print_vec(std::ostream& out, const Vec& v) {
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? ", " : "") << to_string(v[i]);
    out << ')';
}

void print_basis(std::ostream& out, const Subspace& s, const char* indent) {
    for (const auto& v : s.basis()) {
        out << indent;
        print_vec(out, v);
        out << "\n";
    }
}

void text_cohomology(std::ostream& out, const Cdga& c, int top) {
    out << "betti:";
    std::vector<CohomologySpace> spaces;
    for (int k = 0; k <= top; ++k) spaces.emplace_back(c, k);
    for (const auto& h : spaces) out << ' ' << h.dim();
    out << "\n";
    for (const auto& h : spaces) {
        out << "H^" << h.degree() << ":";
        if (h.dim() == 0) out << " -";
        for (int i = 0; i < h.dim(); ++i)
            out << (i ? ", " : " ") << h.representatives()[i].str();
        out << "\n";
    }
}

void text_massey(std::ostream& out, const MasseyResult& m) {
    out << "degrees: (" << m.degrees[0] << ", " << m.degrees[1] << ", "
        << m.degrees[2] << ")\n"
        << "primitives: xi12 = " << m.xi12.str() << ", xi23 = " << m.xi23.str() << "\n"
        << "representative: " << m.representative.str() << "\n"
        << "coordinates: ";
    print_vec(out, m.coords);
    out << "\nindeterminacy dimension: " << m.indeterminacy.dim() << "\n";
    print_basis(out, m.indeterminacy, "  ");
    out << "vanishes: " << (m.vanishes ? "yes" : "no") << "\n";
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"exact cohomology, Massey products, and circle-bundle models "
                 "for finitely generated graded-commutative differential algebras"};
    app.name("cdga");
    app.require_subcommand(0, 1);

    bool json_flag = false, text_flag = false, validate_only = false;
    app.add_flag("--json", json_flag, "machine-readable output (the default)");
    app.add_flag("--text", text_flag, "human-readable output");
    app.add_flag("--validate-only", validate_only, "stop after checking the inputs");
    app.set_version_flag("--version", std::string(engine_version));

    std::string src, right_src, omega_text, a_text, b1_text, b2_text, b3_text;
    std::string catalog_arg;
    int max_degree = -1;
    std::array<std::string, 3> arg_texts;
    std::vector<int> scan_degrees;

    const char* maxdeg_help = "top degree to report (default: sum of generator degrees)";

    auto* coh = app.add_subcommand("cohomology", "Betti numbers and canonical representatives");
    coh->add_option("source", src, "input file or catalog name")->required();
    coh->add_option("--max-degree", max_degree, maxdeg_help);

    auto* mas = app.add_subcommand("massey", "triple product of three cocycle classes");
    mas->add_option("source", src, "input file or catalog name")->required();
    mas->add_option("a1", arg_texts[0], "first cocycle")->required();
    mas->add_option("a2", arg_texts[1], "second cocycle")->required();
    mas->add_option("a3", arg_texts[2], "third cocycle")->required();

    auto* ama = app.add_subcommand("amassey", "symmetric product <a; b1, b2, b3>");
    ama->add_option("source", src, "input file or catalog name")->required();
    ama->add_option("a", a_text, "central cocycle, even degree")->required();
    ama->add_option("b1", b1_text, "side cocycle, even degree")->required();
    ama->add_option("b2", b2_text, "side cocycle, even degree")->required();
    ama->add_option("b3", b3_text, "side cocycle, even degree")->required();
    ama->add_option("--max-degree", max_degree,
                    "refuse when the value degree exceeds this (default: no cap)");

    auto* scn = app.add_subcommand("scan", "search basis classes for non-vanishing triple products");
    scn->add_option("source", src, "input file or catalog name")->required();
    scn->add_option("--degrees", scan_degrees, "class degrees p,q,r")
        ->required()
        ->delimiter(',');
    scn->add_option("--max-degree", max_degree,
                    "refuse when the product degree exceeds this (default: no cap)");

    auto* gys = app.add_subcommand("gysin", "circle extension and its long exact sequence data");
    gys->add_option("source", src, "input file or catalog name")->required();
    gys->add_option("--omega", omega_text, "closed degree-2 element")->required();
    gys->add_option("--max-degree", max_degree,
                    "top degree to report (default: sum of generator degrees + 1)");

    auto* ten = app.add_subcommand("tensor", "tensor product of two complexes");
    ten->add_option("left", src, "input file or catalog name")->required();
    ten->add_option("right", right_src, "input file or catalog name")->required();
    ten->add_option("--max-degree", max_degree, maxdeg_help);

    auto* cat = app.add_subcommand("catalog", "list built-in complexes or print one");
    cat->add_option("name", catalog_arg, "entry to print");

    for (auto* s : {coh, mas, ama, scn, gys, ten, cat}) s->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("cdga");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }
    const bool text = text_flag && !json_flag;

    try {
        if (coh->parsed()) {
            Loaded l = load_source(src, err);
            if (validate_only) {
                out << "ok\n";
                return 0;
            }
            int top = max_degree >= 0 ? max_degree : default_top(l.cdga);
            if (text) {
                text_cohomology(out, l.cdga, top);
            } else {
                Json j = header("cohomology", l.name);
                j["max_degree"] = top;
                j.update(json_cohomology(l.cdga, top));
                out << render(j) << "\n";
            }
            return 0;
        }
        if (mas->parsed()) {
            Loaded l = load_source(src, err);
            std::array<Element, 3> a;
            for (int i = 0; i < 3; ++i) {
                a[i] = load_element(l.cdga, arg_texts[i], err);
                require_cocycle(l.cdga, a[i], arg_texts[i]);
            }
            if (validate_only) {
                out << "ok\n";
                return 0;
            }
            MasseyResult m = triple_massey(l.cdga, a[0], a[1], a[2]);
            if (text) {
                text_massey(out, m);
            } else {
                Json j = header("massey", l.name);
                j["massey"] = json_massey(m);
                out << render(j) << "\n";
            }
            return 0;
        }
        if (ama->parsed()) {
            Loaded l = load_source(src, err);
            Element a = load_element(l.cdga, a_text, err);
            Element b1 = load_element(l.cdga, b1_text, err);
            Element b2 = load_element(l.cdga, b2_text, err);
            Element b3 = load_element(l.cdga, b3_text, err);
            for (const auto& [e, t] : {std::pair<const Element&, const std::string&>{a, a_text},
                                       {b1, b1_text},
                                       {b2, b2_text},
                                       {b3, b3_text}})
                require_cocycle(l.cdga, e, t);
            if (validate_only) {
                out << "ok\n";
                return 0;
            }
            int cap = max_degree >= 0 ? max_degree : std::numeric_limits<int>::max();
            AMasseyResult m = a_massey(l.cdga, a, b1, b2, b3, cap);
            if (text) {
                out << "value degree: " << m.value_degree << "\n"
                    << "primitives: " << m.primitives[0].str() << "; "
                    << m.primitives[1].str() << "; " << m.primitives[2].str() << "\n"
                    << "representative: " << m.representative.str() << "\n"
                    << "coordinates: ";
                print_vec(out, m.coords);
                out << "\ndenominator dimension: " << m.denominator.dim() << "\n";
                print_basis(out, m.denominator, "  ");
                out << "vanishes: " << (m.vanishes ? "yes" : "no") << "\n";
            } else {
                Json j = header("amassey", l.name);
                j["amassey"] = json_amassey(m);
                out << render(j) << "\n";
            }
            return 0;
        }
        if (scn->parsed()) {
            if (scan_degrees.size() != 3) {
                err << "error: --degrees wants exactly three values, got "
                    << scan_degrees.size() << "\n";
                return 2;
            }
            Loaded l = load_source(src, err);
            if (validate_only) {
                out << "ok\n";
                return 0;
            }
            int t = scan_degrees[0] + scan_degrees[1] + scan_degrees[2] - 1;
            if (max_degree >= 0 && t > max_degree)
                throw precondition_error("the product degree " + std::to_string(t) +
                                         " exceeds the requested cap");
            auto hits = massey_scan(l.cdga, scan_degrees[0], scan_degrees[1], scan_degrees[2]);
            if (text) {
                out << "non-vanishing products found: " << hits.size() << "\n";
                for (const auto& h : hits) {
                    out << "- a1 ";
                    print_vec(out, h.a1);
                    out << ", a2 ";
                    print_vec(out, h.a2);
                    out << ", a3 ";
                    print_vec(out, h.a3);
                    out << " -> " << h.result.representative.str() << "\n";
                }
            } else {
                Json j = header("scan", l.name);
                j["degrees"] = scan_degrees;
                j.update(json_scan(hits));
                out << render(j) << "\n";
            }
            return 0;
        }
        if (gys->parsed()) {
            Loaded l = load_source(src, err);
            Element omega = load_element(l.cdga, omega_text, err);
            if (validate_only) {
                // circle_extension re-checks; this surfaces the same errors.
                circle_extension(l.cdga, omega);
                out << "ok\n";
                return 0;
            }
            int top = max_degree >= 0 ? max_degree : default_top(l.cdga) + 1;
            GysinReport g = gysin_report(l.cdga, omega, top);
            if (text) {
                auto line = [&](const char* label, const std::vector<int>& v) {
                    out << label << ":";
                    for (int x : v) out << ' ' << x;
                    out << "\n";
                };
                out << "fiber generator: " << g.ext.fiber_name << "\n";
                line("base betti", g.base_betti);
                line("cup ranks", g.cup_ranks);
                line("extension betti", g.extension_betti);
                line("predicted betti", g.predicted_betti);
                for (int k = 0; k <= top; ++k)
                    if (g.pullback_kernels[k].dim() > 0) {
                        out << "pullback kernel in degree " << k << ":\n";
                        print_basis(out, g.pullback_kernels[k], "  ");
                    }
                out << "consistent: " << (g.consistent ? "yes" : "no") << "\n";
            } else {
                Json j = header("gysin", l.name);
                j["max_degree"] = top;
                j["gysin"] = json_gysin(g);
                out << render(j) << "\n";
            }
            return 0;
        }
        if (ten->parsed()) {
            Loaded l = load_source(src, err);
            Loaded r = load_source(right_src, err);
            if (validate_only) {
                out << "ok\n";
                return 0;
            }
            TensorProduct t = tensor_product(l.cdga, r.cdga);
            int top = max_degree >= 0 ? max_degree : default_top(t.total);
            if (text) {
                out << "generators:";
                for (const auto& g : t.total.algebra()->generators())
                    out << ' ' << g.name << ':' << g.degree;
                out << "\n";
                text_cohomology(out, t.total, top);
            } else {
                Json j = header("tensor", l.name + " (x) " + r.name);
                Json gens = Json::array();
                for (const auto& g : t.total.algebra()->generators())
                    gens.push_back(Json{{"name", g.name}, {"degree", g.degree}});
                j["generators"] = std::move(gens);
                j["max_degree"] = top;
                j.update(json_cohomology(t.total, top));
                out << render(j) << "\n";
            }
            return 0;
        }
        if (cat->parsed()) {
            if (catalog_arg.empty()) {
                if (text) {
                    for (const auto& n : catalog_names()) out << n << "\n";
                } else {
                    Json j;
                    j["engine_version"] = engine_version;
                    j["command"] = "catalog";
                    j["catalog"] = catalog_names();
                    out << render(j) << "\n";
                }
                return 0;
            }
            auto cs = catalog_source(catalog_arg);
            if (!cs) {
                err << "error: no catalog entry named '" << catalog_arg << "'\n";
                return 2;
            }
            if (text) {
                out << *cs;
            } else {
                Json j;
                j["engine_version"] = engine_version;
                j["command"] = "catalog";
                j["name"] = catalog_arg;
                j["source"] = *cs;
                out << render(j) << "\n";
            }
            return 0;
        }
        out << app.help();
        return 0;
    } catch (const EarlyExit& e) {
        return e.code;
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const validation_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace cdga
