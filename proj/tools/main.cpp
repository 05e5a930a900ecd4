#include "burkhardt/brauer.hpp"
#include "burkhardt/certificates.hpp"
#include "burkhardt/fibration.hpp"
#include "burkhardt/obstruction.hpp"
#include "burkhardt/twist.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace burkhardt;
using json = nlohmann::ordered_json;

namespace {

struct Global {
    bool json = false;
    long search_bound = 5000;
    unsigned threads = 1;
};

std::string str(const Integer& n) { return n.get_str(); }

void print_pairs(const std::vector<std::pair<std::string, std::string>>& rows, const std::string& indent = "") {
    std::size_t w = 0;
    for (const auto& [k, v] : rows) w = std::max(w, k.size());
    for (const auto& [k, v] : rows) std::cout << indent << std::left << std::setw(static_cast<int>(w) + 2) << k << v << "\n";
}

void emit(const Global& g, const json& j, const std::vector<std::pair<std::string, std::string>>& rows) {
    if (g.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        print_pairs(rows);
    }
}

std::vector<Rational> parse_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(Rational::parse(item));
    return out;
}

int cmd_verify(const Global& g, const std::vector<std::string>& names, std::size_t generate, std::size_t samples) {
    CertificateOptions opt;
    opt.threads = g.threads;
    opt.generate = generate;
    opt.sample_obstruction = samples;
    const auto reports = run_certificates(names.empty() ? std::vector<std::string>{"all"} : names, opt);
    bool all = true;
    json arr = json::array();
    for (const auto& r : reports) {
        all = all && r.pass;
        if (g.json) {
            json d = json::object();
            for (const auto& [k, v] : r.details) d[k] = v;
            arr.push_back({{"name", r.name}, {"criterion", r.criterion}, {"status", r.pass ? "pass" : "fail"}, {"details", d}});
        } else {
            std::cout << std::left << std::setw(30) << r.name << (r.pass ? "PASS" : "FAIL") << "  criterion "
                      << r.criterion << "\n";
            print_pairs(r.details, "    ");
        }
    }
    if (g.json) std::cout << json{{"certificates", arr}, {"all_pass", all}}.dump(2) << "\n";
    // timing stays out of the deterministic body
    for (const auto& r : reports) std::cerr << "time " << r.name << " " << std::fixed << std::setprecision(3) << r.seconds << " s\n";
    return all ? 0 : 1;
}

QuarticModel builtin_model(const std::string& name) {
    if (name == "standard") return standard_quartic();
    if (name == "bprime") return bprime_pair();
    if (name == "bdoubleprime") return bdoubleprime_model().model;
    throw CLI::ValidationError("--builtin", "expected standard, bprime or bdoubleprime");
}

QuarticModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return model_from_text(ss.str());
}

int cmd_twist(const Global& g, const std::string& sextic, const std::string& roots, bool bdp, const std::string& out) {
    TwistModel t;
    if (bdp) {
        t = bdoubleprime_model();
    } else if (!roots.empty()) {
        const auto r = parse_list(roots);
        if (r.size() != 6) throw CLI::ValidationError("--roots", "expected six roots");
        std::array<Rational, 6> a;
        std::copy(r.begin(), r.end(), a.begin());
        t = twist_from_sextic(SexticPoly::from_roots(a));
    } else if (!sextic.empty()) {
        t = twist_from_sextic(SexticPoly::parse(sextic));
    } else {
        throw CLI::ValidationError("twist", "give --sextic, --roots or --bdoubleprime");
    }
    const std::string text = model_to_text(t.model);
    if (!out.empty()) {
        std::ofstream f(out);
        f << text;
    }
    json prov = json::object();
    for (const auto& [k, v] : t.provenance) prov[k] = v;
    if (g.json) {
        json j{{"source", t.source}, {"model", text}, {"provenance", prov}};
        if (t.pair) j["pair"] = model_to_text(*t.pair);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text << json{{"source", t.source}, {"provenance", prov}}.dump(2) << "\n";
    }
    return 0;
}

json matrix_json(const Matrix<QPoly>& m) {
    json j = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x.to_string());
        j.push_back(r);
    }
    return j;
}

int cmd_obstruction(const Global& g, const std::string& file, const std::string& builtin, const std::string& point,
                    const std::vector<std::string>& specialize, bool sextic) {
    QuarticModel m = file.empty() ? builtin_model(builtin.empty() ? "bprime" : builtin) : load_model(file);
    for (const auto& s : specialize) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--specialize", "expected name=value");
        m = m.specialize(s.substr(0, eq), Rational::parse(s.substr(eq + 1)));
    }
    const ProjectivePoint alpha = ProjectivePoint::parse(point);
    const TernaryQuadratic q = obstruction_conic(m, alpha);
    const ConicSymbol sym = conic_to_symbol(q);
    json j{{"model", m.name}, {"point", alpha.to_string()}, {"conic", q.form.to_string()}, {"gram", matrix_json(q.gram)},
           {"symbol", sym.to_string()}};
    std::vector<std::pair<std::string, std::string>> rows{
        {"model", m.name}, {"point", alpha.to_string()}, {"conic", q.form.to_string()}, {"symbol", sym.to_string()}};
    if (sym.is_rational()) {
        const auto rep = small_representative(sym.a_q(), sym.b_q());
        const auto places = ramified_places(sym.a_q(), sym.b_q());
        json local = json::object();
        std::string ps;
        for (const auto& p : places) {
            local[p.to_string()] = -1;
            ps += (ps.empty() ? "" : " ") + p.to_string();
        }
        const std::string rs = "(" + str(rep.first) + "," + str(rep.second) + ")";
        j["representative"] = rs;
        j["index"] = quaternion_index_q(sym.a_q(), sym.b_q());
        j["local_symbols_minus_one"] = local;
        rows.emplace_back("representative", rs);
        rows.emplace_back("index", std::to_string(quaternion_index_q(sym.a_q(), sym.b_q())));
        rows.emplace_back("ramified", ps.empty() ? "none" : ps);
    } else if (const auto cls = symbol_class_rst(sym)) {
        j["class_over_R(s,t)"] = cls->to_string();
        j["index_over_R(s,t)"] = rst_index_classify(*cls);
        rows.emplace_back("class over R(s,t)", cls->to_string());
        rows.emplace_back("index over R(s,t)", std::to_string(rst_index_classify(*cls)));
    }
    if (sextic) {
        try {
            const MarkedSextic ms = marked_sextic(m, alpha, g.search_bound);
            std::string bp;
            for (const auto& c : ms.base_point.coords) bp += (bp.empty() ? "(" : ":") + str(c);
            bp += ")";
            j["conic_point"] = bp;
            j["sextic"] = ms.binary_form.to_string();
            rows.emplace_back("conic point", bp);
            rows.emplace_back("sextic", ms.binary_form.to_string());
        } catch (const std::runtime_error& e) {
            j["sextic_error"] = e.what();
            rows.emplace_back("sextic", e.what());
        }
    }
    emit(g, j, rows);
    return 0;
}

int cmd_hilbert(const Global& g, const std::string& a_text, const std::string& b_text, const std::string& place) {
    const Rational a = Rational::parse(a_text);
    const Rational b = Rational::parse(b_text);
    if (a.is_zero() || b.is_zero()) throw CLI::ValidationError("hilbert", "a and b must be nonzero");
    json j{{"a", a.to_string()}, {"b", b.to_string()}};
    std::vector<std::pair<std::string, std::string>> rows{{"a", a.to_string()}, {"b", b.to_string()}};
    if (!place.empty()) {
        const Place v = Place::parse(place);
        const int s = hilbert_symbol(a, b, v);
        j["place"] = v.to_string();
        j["symbol"] = s;
        rows.emplace_back("place", v.to_string());
        rows.emplace_back("symbol", std::to_string(s));
    }
    const auto places = ramified_places(a, b);
    json arr = json::array();
    std::string ps;
    for (const auto& p : places) {
        arr.push_back(p.to_string());
        ps += (ps.empty() ? "" : " ") + p.to_string();
    }
    j["ramified"] = arr;
    j["index"] = quaternion_index_q(a, b);
    rows.emplace_back("ramified", ps.empty() ? "none" : ps);
    rows.emplace_back("index", std::to_string(quaternion_index_q(a, b)));
    emit(g, j, rows);
    return 0;
}

int cmd_classify(const Global& g, const std::string& cls_text, const std::string& symbol) {
    RstClass c;
    if (!symbol.empty()) {
        const auto comma = symbol.find(',');
        if (comma == std::string::npos) throw CLI::ValidationError("--symbol", "expected a,b");
        c = rst_symbol_to_class(MonomialElt::parse(symbol.substr(0, comma)), MonomialElt::parse(symbol.substr(comma + 1)));
    } else {
        c = RstClass::parse(cls_text.empty() ? "0" : cls_text);
    }
    const int index = rst_index_classify(c);
    std::string cert;
    if (index == 1) {
        cert = "zero class";
    } else if (index == 2) {
        for (const auto& a : MonomialElt::all()) {
            for (const auto& b : MonomialElt::all()) {
                if (cert.empty() && rst_symbol_to_class(a, b) == c) cert = "(" + a.to_string() + "," + b.to_string() + ")";
            }
        }
    } else {
        cert = "not among the " + std::to_string(representable_classes().size()) + " classes (a,b), a,b in <-1,s,t>";
    }
    json j{{"class", c.to_string()}, {"index", index}, {"certificate", cert}};
    emit(g, j, {{"class", c.to_string()}, {"index", std::to_string(index)}, {"certificate", cert}});
    return 0;
}

std::optional<ProjectivePoint> small_point(const PlaneCubic& c) {
    for (long h = 1; h <= 30; ++h) {
        for (long x = -h; x <= h; ++x) {
            for (long y = -h; y <= h; ++y) {
                for (long z : {-h, h}) {
                    const ProjectivePoint p{x, y, z};
                    if (!evaluate_at(c.form, 3, p).is_zero()) continue;
                    if (!flex_verify(c, p)) return p;
                }
            }
        }
    }
    return std::nullopt;
}

int cmd_fibration(const Global& g, const std::string& u, const std::string& v, const std::string& point, int multiples,
                  std::size_t generate, std::size_t samples, bool named) {
    if (generate > 0) {
        GenerationOptions opt;
        opt.count = generate;
        opt.sample_obstruction = samples;
        opt.threads = g.threads;
        opt.all_fibrations = !named;
        const GenerationReport rep = generate_points(opt);
        std::size_t determined = 0, same = 0;
        json js = json::array();
        for (const auto& s : rep.samples) {
            determined += s.determined ? 1 : 0;
            same += s.determined && s.same_class ? 1 : 0;
            js.push_back({{"point", s.point.to_string()},
                          {"determined", s.determined},
                          {"symbol", s.symbol},
                          {"representative", s.determined ? "(" + str(s.representative.first) + "," +
                                                                str(s.representative.second) + ")"
                                                          : ""},
                          {"same_class_as_(-3,-1)", s.same_class}});
        }
        json summary{{"points", rep.points.size()},      {"off_hessian", rep.off_hessian},
                     {"coordinate_rank", rep.coordinate_rank}, {"seed_non_torsion", rep.seed_non_torsion},
                     {"samples_determined", determined},  {"samples_class_(-3,-1)", same},
                     {"samples", js}};
        if (g.json) {
            json pts = json::array();
            for (const auto& p : rep.points) pts.push_back({{"point", p.point.to_string()}, {"origin", p.origin}});
            summary["generated"] = pts;
            std::cout << summary.dump(2) << "\n";
        } else {
            std::cout << "index,point,origin\n";
            for (std::size_t i = 0; i < rep.points.size(); ++i) {
                std::cout << i << "," << rep.points[i].point.to_string() << "," << rep.points[i].origin << "\n";
            }
            std::cout << summary.dump(2) << "\n";
        }
        return determined >= samples && same == determined ? 0 : 1;
    }

    const FibrationParams fp{Rational::parse(u), Rational::parse(v)};
    const PlaneCubic c = cubic_family(fp);
    std::optional<ProjectivePoint> p;
    if (!point.empty()) {
        p = ProjectivePoint::parse(point);
    } else if (const auto sp = slice_point(point_p0()); sp && sp->params == fp) {
        p = sp->point;
    } else {
        p = small_point(c);
    }
    if (!p) throw std::runtime_error("no non-flex point found on C_{u,v}; pass --point");
    if (!evaluate_at(c.form, 3, *p).is_zero()) throw std::invalid_argument("point not on C_{u,v}");
    const TorsionResult tr = torsion_test(c, *p);
    const QuarticModel reduced = bprime_model();
    json rows = json::array();
    if (!g.json) std::cout << "n,point,embedded,hessian\n";
    for (int n = 1; n <= multiples; ++n) {
        const ProjectivePoint np = cubic_multiple(c, *p, n);
        if (np == c.origin) {
            if (!g.json) std::cout << n << "," << np.to_string() << ",O,\n";
            rows.push_back({{"n", n}, {"point", np.to_string()}});
            continue;
        }
        const ProjectivePoint e = embed_to_bprime(fp, np);
        const std::string hs = to_string(hessian_membership(reduced, QuarticModel::drop_coordinate(e, 5)));
        if (!g.json) std::cout << n << "," << np.to_string() << "," << e.to_string() << "," << hs << "\n";
        rows.push_back({{"n", n}, {"point", np.to_string()}, {"embedded", e.to_string()}, {"hessian", hs}});
    }
    json summary{{"u", fp.u.to_string()}, {"v", fp.v.to_string()}, {"cubic", c.form.to_string()},
                 {"point", p->to_string()}, {"non_torsion_certified", tr.non_torsion_certified}};
    if (tr.order) summary["torsion_order"] = *tr.order;
    if (g.json) summary["multiples"] = rows;
    std::cout << summary.dump(2) << "\n";
    return 0;
}

int cmd_kummer(const Global& g, const std::string& a2, const std::string& a4, const std::string& a6, const std::string& r) {
    const KummerCheck k = elliptic_kummer_check(Rational::parse(a2), Rational::parse(a4), Rational::parse(a6), Rational::parse(r));
    json j{{"norm", k.norm.to_string()}, {"reduced", k.reduced.to_string()}, {"degree", k.degree}, {"round_trip", k.round_trip}};
    emit(g, j,
         {{"norm", k.norm.to_string()},
          {"reduced", k.reduced.to_string()},
          {"degree", std::to_string(k.degree)},
          {"round_trip", k.round_trip ? "yes" : "no"}});
    return k.degree <= 4 && k.round_trip ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Twists of the Burkhardt quartic and their Brauer obstruction"};
    app.require_subcommand(1);
    Global g;
    app.add_flag("--json", g.json, "machine-readable output")->configurable(false);
    app.add_option("--search-bound", g.search_bound, "conic point search bound")->check(CLI::PositiveNumber);
    app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);
    std::function<int()> action;

    auto* verify = app.add_subcommand("verify", "run certificates (names or 'all')")->fallthrough();
    std::vector<std::string> names;
    std::size_t v_generate = 100, v_samples = 10;
    verify->add_option("names", names, "certificate names");
    verify->add_option("--generate", v_generate, "points generated for fibration-points");
    verify->add_option("--sample-obstruction", v_samples, "obstruction samples for fibration-points");
    verify->add_flag_callback("--list", [] {
        for (const auto& n : certificate_names()) std::cout << n << "\n";
        std::exit(0);
    });
    verify->callback([&] { action = [&] { return cmd_verify(g, names, v_generate, v_samples); }; });

    auto* twist = app.add_subcommand("twist", "twist of B' by a sextic, or B''")->fallthrough();
    std::string sextic, roots, out;
    bool bdp = false;
    twist->add_option("--sextic", sextic, "c0,c1,c2,c3,c4,c5 of monic h");
    twist->add_option("--roots", roots, "six distinct rational roots of h");
    twist->add_flag("--bdoubleprime", bdp, "the Kummer substitution model B''");
    twist->add_option("--out", out, "also write the model text to this file");
    twist->callback([&] { action = [&] { return cmd_twist(g, sextic, roots, bdp, out); }; });

    auto* obs = app.add_subcommand("obstruction", "obstruction conic and its symbol at a point")->fallthrough();
    std::string model_file, builtin, point;
    std::vector<std::string> spec;
    bool want_sextic = false;
    obs->add_option("--model", model_file, "model text file")->check(CLI::ExistingFile);
    obs->add_option("--builtin", builtin, "standard, bprime or bdoubleprime");
    obs->add_option("--point", point, "(a:b:c:d:e)")->required();
    obs->add_option("--specialize", spec, "parameter=value, e.g. s=1");
    obs->add_flag("--marked-sextic", want_sextic, "also pull back the first polar to the conic");
    obs->callback([&] { action = [&] { return cmd_obstruction(g, model_file, builtin, point, spec, want_sextic); }; });

    auto* hil = app.add_subcommand("hilbert", "Hilbert symbols and index of (a,b) over Q")->fallthrough();
    std::string ha, hb, place;
    hil->add_option("-a", ha)->required();
    hil->add_option("-b", hb)->required();
    hil->add_option("--place", place, "prime, inf or oo");
    hil->callback([&] { action = [&] { return cmd_hilbert(g, ha, hb, place); }; });

    auto* cls = app.add_subcommand("classify-rst", "index of a class in Br(R(s,t))[2]")->fallthrough();
    std::string class_text, symbol;
    cls->add_option("--class", class_text, "e.g. e2+e3+e4");
    cls->add_option("--symbol", symbol, "a,b with a,b in <-1,s,t>, e.g. -1,st");
    cls->callback([&] { action = [&] { return cmd_classify(g, class_text, symbol); }; });

    auto* fib = app.add_subcommand("fibration", "the cubic fibration on B'")->fallthrough();
    std::string fu = "3/5", fv = "4", fpoint;
    int multiples = 12;
    std::size_t generate = 0, samples = 10;
    bool named = false;
    fib->add_option("--u", fu);
    fib->add_option("--v", fv);
    fib->add_option("--point", fpoint, "(X:Y:Z) on C_{u,v}");
    fib->add_option("--multiples", multiples)->check(CLI::PositiveNumber);
    fib->add_option("--generate", generate, "generate this many points on B'");
    fib->add_option("--sample-obstruction", samples);
    fib->add_flag("--named-lines", named, "iterate only L345, L245, L145");
    fib->callback([&] { action = [&] { return cmd_fibration(g, fu, fv, fpoint, multiples, generate, samples, named); }; });

    auto* kum = app.add_subcommand("kummer-check", "reduce N(f(x1+x2 sqrt r)) modulo x1^2 = r x2^2 + x3")->fallthrough();
    std::string a2 = "0", a4 = "0", a6 = "1", kr = "2";
    kum->add_option("--a2", a2);
    kum->add_option("--a4", a4);
    kum->add_option("--a6", a6);
    kum->add_option("--r", kr);
    kum->callback([&] { action = [&] { return cmd_kummer(g, a2, a4, a6, kr); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    try {
        return action();
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
