#include "gtkit/cli.hpp"

#include "gtkit/bfr.hpp"
#include "gtkit/coupling.hpp"
#include "gtkit/invariants.hpp"
#include "gtkit/pattern.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <future>
#include <ostream>
#include <sstream>

namespace gtkit::cli {

namespace {

using nlohmann::json;

enum class Format { Table, Json, Csv };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void add_format(CLI::App* app, Format& f) {
    static const std::map<std::string, Format> names{{"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};
    app->add_option("--format", f, "Output format: table, json or csv")
        ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

json surd_json(const SqrtRational& v) {
    return {{"sign", v.sign()},
            {"num", integer_json(v.coeff().get_num())},
            {"den", integer_json(v.coeff().get_den())},
            {"rad_num", integer_json(v.radicand())},
            {"rad_den", 1}};
}

json value_record(const SqrtRational& v) {
    return {{"value", surd_json(v)}, {"text", v.to_string()}, {"decimal", v.to_decimal(15)}};
}

json pattern_json(const GTPattern& p) { return {{"n", p.n()}, {"rows", p.rows()}}; }

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

IrrepLabel parse_label(const std::string& s) {
    IrrepLabel l;
    std::stringstream ss(s);
    std::string e;
    while (std::getline(ss, e, ',')) {
        try {
            l.top_row.push_back(std::stoi(e));
        } catch (const std::exception&) {
            throw StructureError("bad label entry '" + e + "'");
        }
    }
    if (!l.valid()) throw DomainError("label must be non-increasing and nonnegative: " + s);
    return l;
}

SU3Rep rep_from(const std::vector<int>& v) {
    if (v.size() != 2) throw UsageError("an SU(3) irrep needs two integers: lambda mu");
    return {v[0], v[1]};
}

std::array<HalfInt, 3> half_triple(const std::vector<std::string>& v, const char* what) {
    if (v.size() != 3) throw UsageError(std::string(what) + " needs three values");
    return {HalfInt::parse(v[0]), HalfInt::parse(v[1]), HalfInt::parse(v[2])};
}

std::array<IsoLabel, 3> state_triple(const std::vector<std::string>& v) {
    if (v.size() != 6) throw UsageError("--state needs t1 y1 t2 y2 t3 y3");
    std::array<IsoLabel, 3> out;
    for (int i = 0; i < 3; ++i) {
        out[i].t = HalfInt::parse(v[2 * i]);
        Rational y = parse_rational(v[2 * i + 1]);
        if (y.get_den() != 1) throw DomainError("y is three times the hypercharge and must be an integer");
        out[i].y = static_cast<int>(y.get_num().get_si());
    }
    return out;
}

json iso_state_json(const IsoLabel& s) { return {{"t", s.t.to_string()}, {"y", s.y}}; }

void print_value(std::ostream& out, Format f, const json& query, const SqrtRational& v) {
    if (f == Format::Json) {
        json rec = value_record(v);
        rec["query"] = query;
        out << rec.dump() << "\n";
    } else if (f == Format::Csv) {
        out << "text,decimal\n" << csv_quote(v.to_string()) << "," << v.to_decimal(15) << "\n";
    } else {
        out << v.to_compact() << "\n";
    }
}

struct TableRow {
    SU3Rep rep3;
    SU3Coupling::IsoEntry entry;
};

std::vector<TableRow> coupling_rows(SU3Rep r1, SU3Rep r2, SU3Rep r3) {
    std::vector<TableRow> rows;
    SU3Coupling c(r1, r2, r3);
    for (auto& e : c.isoscalar_table()) rows.push_back({r3, std::move(e)});
    return rows;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gel'fand-Tsetlin patterns, invariants and SU(2)/SU(3) coupling coefficients", "gtkit"};
    app.require_subcommand(1);
    std::function<int()> action;
    Format fmt = Format::Table;

    // pattern
    auto* pattern = app.add_subcommand("pattern", "Gel'fand-Tsetlin pattern operations");
    pattern->require_subcommand(1);
    std::string ptext;
    bool su_mode = false;
    {
        auto* c = pattern->add_subcommand("validate", "Check the betweenness conditions");
        c->add_option("pattern", ptext, "Rows separated by ';', entries by ','")->required();
        c->add_flag("--su", su_mode, "Also require h(n,n) = 0");
        add_format(c, fmt);
        c->callback([&] {
            action = [&]() -> int {
                GTPattern p = GTPattern::parse(ptext);
                auto v = validate(p, su_mode ? Mode::SU : Mode::U);
                if (fmt == Format::Json) {
                    json viol = json::array();
                    for (const auto& x : v) viol.push_back({{"i", x.i}, {"j", x.j}, {"message", x.message}});
                    out << json{{"pattern", pattern_json(p)}, {"valid", v.empty()}, {"violations", viol}}.dump() << "\n";
                } else if (v.empty()) {
                    out << "valid\n";
                } else {
                    for (const auto& x : v) out << "(" << x.i << "," << x.j << "): " << x.message << "\n";
                }
                return v.empty() ? 0 : 1;
            };
        });
    }
    {
        auto* c = pattern->add_subcommand("conjugate", "Conjugate state pattern");
        c->add_option("pattern", ptext)->required();
        add_format(c, fmt);
        c->callback([&] {
            action = [&]() -> int {
                GTPattern q = conjugate(GTPattern::parse(ptext));
                if (fmt == Format::Json)
                    out << pattern_json(q).dump() << "\n";
                else
                    out << q.to_string() << "\n";
                return 0;
            };
        });
    }
    {
        auto* c = pattern->add_subcommand("phase", "Sum of entries minus h(1,n)");
        c->add_option("pattern", ptext)->required();
        add_format(c, fmt);
        c->callback([&] {
            action = [&]() -> int {
                GTPattern p = GTPattern::parse(ptext);
                if (!validate(p).empty()) throw DomainError("invalid pattern " + p.to_string());
                int ph = phase(p);
                if (fmt == Format::Json)
                    out << json{{"pattern", pattern_json(p)}, {"phase", ph}}.dump() << "\n";
                else
                    out << ph << "\n";
                return 0;
            };
        });
    }
    std::string top;
    {
        auto* c = pattern->add_subcommand("enumerate", "All patterns of an irrep, descending lexicographic");
        c->add_option("top", top, "Top row, e.g. 2,1,0")->required();
        add_format(c, fmt);
        c->callback([&] {
            action = [&]() -> int {
                auto ps = enumerate_patterns(parse_label(top));
                if (fmt == Format::Json) {
                    out << "[";
                    for (size_t i = 0; i < ps.size(); ++i) out << (i ? "," : "") << pattern_json(ps[i]).dump();
                    out << "]\n";
                } else {
                    if (fmt == Format::Csv) out << "index,pattern\n";
                    for (size_t i = 0; i < ps.size(); ++i) {
                        if (fmt == Format::Csv) out << i + 1 << ",\"" << ps[i].to_string() << "\"\n";
                        else out << ps[i].to_string() << "\n";
                    }
                }
                return 0;
            };
        });
    }
    {
        auto* c = pattern->add_subcommand("dim", "Dimension of an irrep");
        c->add_option("top", top)->required();
        add_format(c, fmt);
        c->callback([&] {
            action = [&]() -> int {
                IrrepLabel l = parse_label(top);
                Integer d = dimension(l);
                if (fmt == Format::Json)
                    out << json{{"top", l.top_row}, {"dimension", integer_json(d)}}.dump() << "\n";
                else
                    out << d.get_str() << "\n";
                return 0;
            };
        });
    }

    // bfr
    auto* bfr = app.add_subcommand("bfr", "Binary fundamental representations");
    bfr->require_subcommand(1);
    int n = 0, m = 0;
    std::string word;
    {
        auto* c = bfr->add_subcommand("list", "Binary words of length n and weight m");
        c->add_option("--n", n)->required();
        c->add_option("--m", m)->required();
        add_format(c, fmt);
        c->callback([&] {
            action = [&]() -> int {
                auto ws = enumerate_bfr(n, m);
                if (fmt == Format::Json) {
                    json a = json::array();
                    for (const auto& w : ws) a.push_back(w.to_string());
                    out << a.dump() << "\n";
                } else {
                    if (fmt == Format::Csv) out << "word,phi\n";
                    for (const auto& w : ws) {
                        if (fmt == Format::Csv) out << w.to_string() << "," << phi_monomial(w).to_string() << "\n";
                        else out << w.to_string() << "\n";
                    }
                }
                return 0;
            };
        });
    }
    {
        auto* c = bfr->add_subcommand("phi", "Parameter monomial of a binary word");
        c->add_option("word", word)->required();
        add_format(c, fmt);
        c->callback([&] {
            action = [&]() -> int {
                BinaryWord w = BinaryWord::parse(word);
                ParamMonomial p = phi_monomial(w);
                if (fmt == Format::Json) {
                    json f = json::array();
                    for (const auto& [s, e] : p.factors())
                        f.push_back({{"kind", s.kind == ParamSymbol::Kind::X ? "x" : "y"},
                                     {"lambda", s.lambda},
                                     {"mu", s.mu},
                                     {"exp", e}});
                    out << json{{"word", w.to_string()}, {"phi", p.to_string()}, {"factors", f}}.dump() << "\n";
                } else {
                    out << p.to_string() << "\n";
                }
                return 0;
            };
        });
    }
    {
        auto* c = bfr->add_subcommand("complement", "Bitwise complement");
        c->add_option("word", word)->required();
        add_format(c, fmt);
        c->callback([&] {
            action = [&]() -> int {
                BinaryWord w = complement(BinaryWord::parse(word));
                if (fmt == Format::Json)
                    out << json{{"word", word}, {"complement", w.to_string()}}.dump() << "\n";
                else
                    out << w.to_string() << "\n";
                return 0;
            };
        });
    }

    // invariants
    auto* inv = app.add_subcommand("invariants", "Elementary invariants of triple products");
    inv->require_subcommand(1);
    std::vector<int> rep1, rep2, rep3;
    {
        auto* c = inv->add_subcommand("count", "Number of elementary invariants of SU(n)");
        c->add_option("--n", n)->required();
        add_format(c, fmt);
        c->callback([&] {
            action = [&]() -> int {
                auto k = count_invariants(n);
                if (fmt == Format::Json)
                    out << json{{"n", n}, {"count", k}}.dump() << "\n";
                else
                    out << k << "\n";
                return 0;
            };
        });
    }
    {
        auto* c = inv->add_subcommand("list", "Canonical invariant tables of SU(n)");
        c->add_option("--n", n)->required();
        add_format(c, fmt);
        c->callback([&] {
            action = [&]() -> int {
                auto cs = enumerate_compositions(n);
                if (fmt == Format::Json) out << "[";
                if (fmt == Format::Csv) out << "alpha1,alpha2,alpha3,word\n";
                for (size_t i = 0; i < cs.size(); ++i) {
                    InvariantTable t = canonical_table(cs[i]);
                    if (fmt == Format::Json) {
                        std::vector<int> cols;
                        for (int col : t.columns()) cols.push_back(col + 1);
                        out << (i ? "," : "")
                            << json{{"composition", cs[i].alpha}, {"word", t.to_string()}, {"columns", cols}}.dump();
                    } else if (fmt == Format::Csv) {
                        out << cs[i].alpha[0] << "," << cs[i].alpha[1] << "," << cs[i].alpha[2] << "," << t.to_string()
                            << "\n";
                    } else {
                        out << t.to_string() << "\n";
                    }
                }
                if (fmt == Format::Json) out << "]\n";
                return 0;
            };
        });
    }
    {
        auto* c = inv->add_subcommand("ktable", "SU(3) k-vectors and invariant Gel'fand indices of a coupling");
        c->add_option("--rep1", rep1)->required()->expected(2);
        c->add_option("--rep2", rep2)->required()->expected(2);
        c->add_option("--rep3", rep3)->required()->expected(2);
        add_format(c, fmt);
        c->callback([&] {
            action = [&]() -> int {
                SU3Rep a = rep_from(rep1), b = rep_from(rep2), d = rep_from(rep3);
                auto ks = solve_k_su3({a.lambda, a.mu, b.lambda, b.mu, d.lambda, d.mu});
                if (fmt == Format::Json) out << "[";
                if (fmt == Format::Csv) out << "rho,k1,k2,k3,k4,k5,k6,k7,h13,h24,h34,h23,h33,h12,h22\n";
                for (size_t i = 0; i < ks.size(); ++i) {
                    InvariantGelfand h = gelfand_from_k(ks[i]);
                    std::array<int, 7> hs{h.h13, h.h24, h.h34, h.h23, h.h33, h.h12, h.h22};
                    if (fmt == Format::Json) {
                        out << (i ? "," : "")
                            << json{{"rho", i + 1},
                                    {"k", ks[i].k},
                                    {"gelfand",
                                     {{"h13", h.h13}, {"h24", h.h24}, {"h34", h.h34}, {"h23", h.h23},
                                      {"h33", h.h33}, {"h12", h.h12}, {"h22", h.h22}}}}
                                   .dump();
                    } else if (fmt == Format::Csv) {
                        out << i + 1;
                        for (int v : ks[i].k) out << "," << v;
                        for (int v : hs) out << "," << v;
                        out << "\n";
                    } else {
                        out << "rho=" << i + 1 << " k=" << ks[i].to_string() << " h=(";
                        for (int j = 0; j < 7; ++j) out << (j ? "," : "") << hs[j];
                        out << ")\n";
                    }
                }
                if (fmt == Format::Json) out << "]\n";
                if (ks.empty()) err << "selection rule: coupling is forbidden\n";
                return ks.empty() ? 1 : 0;
            };
        });
    }

    // su2
    auto* su2 = app.add_subcommand("su2", "SU(2) coupling coefficients");
    su2->require_subcommand(1);
    std::vector<std::string> jv, mv;
    {
        auto* c = su2->add_subcommand("threej", "Wigner 3j symbol");
        c->add_option("--j", jv, "j1 j2 j3, half-integers like 1/2")->required()->expected(3)->allow_extra_args(false);
        c->add_option("--m", mv, "m1 m2 m3")->required()->expected(3)->allow_extra_args(false);
        add_format(c, fmt);
        c->callback([&] {
            action = [&]() -> int {
                SU2Triple t{half_triple(jv, "--j"), half_triple(mv, "--m")};
                for (int i = 0; i < 3; ++i) {
                    int j2 = t.j[i].twice(), m2 = t.m[i].twice();
                    if (j2 < 0 || std::abs(m2) > j2 || (j2 - m2) % 2)
                        throw DomainError("m" + std::to_string(i + 1) + " is not a projection of j" + std::to_string(i + 1));
                }
                SqrtRational v = su2_3j(t);
                json q{{"j", jv}, {"m", mv}};
                print_value(out, fmt, q, v);
                return 0;
            };
        });
    }

    // su3
    auto* su3 = app.add_subcommand("su3", "SU(3) isoscalar factors and Wigner coefficients");
    su3->require_subcommand(1);
    std::vector<std::string> sv, tzv;
    unsigned jobs = 1;
    auto add_reps = [&](CLI::App* c, bool need3) {
        c->add_option("--rep1", rep1, "lambda1 mu1 (mu1 must be 0)")->required()->expected(2);
        c->add_option("--rep2", rep2, "lambda2 mu2")->required()->expected(2);
        auto* o = c->add_option("--rep3", rep3, "lambda3 mu3")->expected(2);
        if (need3) o->required();
    };
    auto coupling_query = [&]() {
        IsoscalarQuery q{{rep_from(rep1), rep_from(rep2), rep_from(rep3)}, state_triple(sv)};
        return q;
    };
    auto query_json = [&](const IsoscalarQuery& q) {
        return json{{"rep1", rep1},
                    {"rep2", rep2},
                    {"rep3", rep3},
                    {"states", {iso_state_json(q.state[0]), iso_state_json(q.state[1]), iso_state_json(q.state[2])}}};
    };
    {
        auto* c = su3->add_subcommand("isoscalar", "Isoscalar factor; y is three times the hypercharge");
        add_reps(c, true);
        c->add_option("--state", sv, "t1 y1 t2 y2 t3 y3")->required()->expected(6);
        add_format(c, fmt);
        c->callback([&] {
            action = [&]() -> int {
                IsoscalarQuery q = coupling_query();
                SU3Coupling cp(q.rep[0], q.rep[1], q.rep[2]);
                if (!cp.allowed()) throw SelectionZero("selection rule: coupling is forbidden");
                SqrtRational v = cp.isoscalar(q.state[0], q.state[1], q.state[2]);
                print_value(out, fmt, query_json(q), v);
                return 0;
            };
        });
    }
    {
        auto* c = su3->add_subcommand("wigner", "SU(3) Wigner coefficient");
        add_reps(c, true);
        c->add_option("--state", sv, "t1 y1 t2 y2 t3 y3")->required()->expected(6);
        c->add_option("--tz", tzv, "tz1 tz2 tz3")->required()->expected(3);
        add_format(c, fmt);
        c->callback([&] {
            action = [&]() -> int {
                IsoscalarQuery q = coupling_query();
                auto tz = half_triple(tzv, "--tz");
                SU3Coupling cp(q.rep[0], q.rep[1], q.rep[2]);
                if (!cp.allowed()) throw SelectionZero("selection rule: coupling is forbidden");
                SqrtRational v = wigner_su3(q, tz[0], tz[1], tz[2]);
                json qj = query_json(q);
                qj["tz"] = tzv;
                print_value(out, fmt, qj, v);
                return 0;
            };
        });
    }
    {
        auto* c = su3->add_subcommand("table", "All nonzero isoscalar factors of a product");
        add_reps(c, false);
        c->add_option("--jobs", jobs, "Worker threads; output order is unaffected")->check(CLI::PositiveNumber);
        add_format(c, fmt);
        c->callback([&] {
            action = [&]() -> int {
                SU3Rep a = rep_from(rep1), b = rep_from(rep2);
                if (a.mu != 0) throw DomainError("only couplings with mu1 = 0 are supported");
                std::vector<SU3Rep> targets;
                if (!rep3.empty()) {
                    targets.push_back(rep_from(rep3));
                } else {
                    int cap = a.lambda + b.lambda + b.mu;
                    for (int l = cap; l >= 0; --l)
                        for (int mm = cap; mm >= 0; --mm)
                            if (!solve_k_su3({a.lambda, a.mu, b.lambda, b.mu, l, mm}).empty()) targets.push_back({l, mm});
                }
                if (fmt == Format::Json) out << "[";
                if (fmt == Format::Csv) out << "lambda3,mu3,t1,y1,t2,y2,t3,y3,text,decimal\n";
                bool first = true;
                auto emit = [&](const std::vector<TableRow>& rows) {
                    for (const auto& r : rows) {
                        const auto& e = r.entry;
                        if (fmt == Format::Json) {
                            json rec = value_record(e.value);
                            rec["query"] = {{"rep1", rep1},
                                            {"rep2", rep2},
                                            {"rep3", {r.rep3.lambda, r.rep3.mu}},
                                            {"states", {iso_state_json(e.s1), iso_state_json(e.s2), iso_state_json(e.s3)}}};
                            out << (first ? "" : ",") << rec.dump();
                        } else if (fmt == Format::Csv) {
                            out << r.rep3.lambda << "," << r.rep3.mu << "," << e.s1.t.to_string() << "," << e.s1.y << ","
                                << e.s2.t.to_string() << "," << e.s2.y << "," << e.s3.t.to_string() << "," << e.s3.y << ","
                                << csv_quote(e.value.to_string()) << "," << e.value.to_decimal(15) << "\n";
                        } else {
                            out << "(" << r.rep3.lambda << "," << r.rep3.mu << ") [" << e.s1.t.to_string() << "," << e.s1.y
                                << "] [" << e.s2.t.to_string() << "," << e.s2.y << "] [" << e.s3.t.to_string() << ","
                                << e.s3.y << "] " << e.value.to_compact() << "\n";
                        }
                        first = false;
                    }
                    out.flush();
                };
                // Couplings are computed in batches of `jobs` and written in order.
                for (size_t i = 0; i < targets.size(); i += jobs) {
                    std::vector<std::future<std::vector<TableRow>>> batch;
                    for (size_t j = i; j < std::min(targets.size(), i + jobs); ++j)
                        batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                                   coupling_rows, a, b, targets[j]));
                    for (auto& f : batch) emit(f.get());
                }
                if (fmt == Format::Json) out << "]\n";
                return 0;
            };
        });
    }

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }
    try {
        return action ? action() : 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace gtkit::cli
