// Command-line frontend: fiber tables, extension construction, verification
// suites, and direct access to the underlying enumerations and expansions.
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cycdes/cyclic.hpp"
#include "cycdes/errors.hpp"
#include "cycdes/exceptional.hpp"
#include "cycdes/gens.hpp"
#include "cycdes/partition.hpp"
#include "cycdes/schur.hpp"
#include "cycdes/skew.hpp"
#include "cycdes/subset.hpp"
#include "cycdes/tableaux.hpp"
#include "cycdes/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

using namespace cycdes;

// ---------------------------------------------------------------------------
// argument parsing

std::vector<int> parse_int_list(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (c == '{' || c == '}' || c == ' ' || c == '[' || c == ']') continue;
        s += c;
    }
    std::vector<int> out;
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
            throw DomainError("cannot parse integer list '" + text + "'");
        }
        out.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

Subset parse_subset(int n, const std::string& text) {
    std::vector<int> elems = parse_int_list(text);
    std::uint32_t mask = 0;
    for (int e : elems) {
        if (e < 1 || e > n) {
            throw DomainError("element " + std::to_string(e) + " outside [" + std::to_string(n) + "]");
        }
        mask |= 1u << (e - 1);
    }
    return Subset(n, mask);
}

Partition parse_partition(const std::string& text) {
    if (text == "-") return Partition(std::vector<int>{});
    return Partition(parse_int_list(text));
}

// ---------------------------------------------------------------------------
// serialization

json subset_json(const Subset& s) { return json(s.elements()); }

json tableau_json(const SkewShape& shape, const std::vector<std::vector<int>>& rows) {
    json offsets = json::array();
    for (int r = 0; r < shape.rows(); ++r) offsets.push_back(shape.row_begin(r));
    json jrows = json::array();
    for (const auto& row : rows) jrows.push_back(row);
    return json{{"offsets", offsets}, {"rows", jrows}};
}

std::string tableau_text(const SkewShape& shape, const std::vector<std::vector<int>>& rows) {
    std::string out;
    for (int r = 0; r < shape.rows(); ++r) {
        out += '[';
        bool first = true;
        for (int c = 0; c < shape.row_begin(r); ++c) {
            out += first ? "." : " .";
            first = false;
        }
        for (int v : rows[static_cast<std::size_t>(r)]) {
            if (!first) out += ' ';
            out += std::to_string(v);
            first = false;
        }
        out += ']';
    }
    return out;
}

std::string csv_quote(const std::string& field) {
    if (field.find(',') == std::string::npos && field.find('"') == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// subset -> count tables (fiber tables and distributions); zero entries omitted,
// masks ascending
void emit_count_table(const std::string& format, int n,
                      const std::vector<std::int64_t>& values, const char* value_key,
                      const std::vector<std::pair<std::string, json>>& header) {
    if (format == "json") {
        json out;
        for (const auto& kv : header) out[kv.first] = kv.second;
        json entries = json::array();
        for (std::uint32_t mask = 0; mask < values.size(); ++mask) {
            if (values[mask] == 0) continue;
            entries.push_back(json{{"J", subset_json(Subset(n, mask))}, {value_key, values[mask]}});
        }
        out["entries"] = entries;
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "J," << value_key << "\n";
        for (std::uint32_t mask = 0; mask < values.size(); ++mask) {
            if (values[mask] == 0) continue;
            std::cout << csv_quote(Subset(n, mask).str()) << "," << values[mask] << "\n";
        }
    } else {
        for (std::uint32_t mask = 0; mask < values.size(); ++mask) {
            if (values[mask] == 0) continue;
            if (std::string(value_key) == "m") {
                std::cout << "m(" << Subset(n, mask).str() << ") = " << values[mask] << "\n";
            } else {
                std::cout << Subset(n, mask).str() << ": " << values[mask] << "\n";
            }
        }
    }
}

void emit_fiber_table(const std::string& format, const FiberTable& table) {
    emit_count_table(format, table.n(), table.values(), "m", {{"n", json(table.n())}});
}

void emit_schur(const std::string& format, const DegreeContext& ctx, const SchurVector& v) {
    if (format == "json") {
        json out = json::array();
        for (int idx = 0; idx < ctx.count(); ++idx) {
            if (v.coeff(idx) == 0) continue;
            out.push_back(json{{"partition", ctx.partition(idx).parts()}, {"coefficient", v.coeff(idx)}});
        }
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "partition,coefficient\n";
        for (int idx = 0; idx < ctx.count(); ++idx) {
            if (v.coeff(idx) == 0) continue;
            std::cout << csv_quote(ctx.partition(idx).str()) << "," << v.coeff(idx) << "\n";
        }
    } else {
        bool any = false;
        for (int idx = 0; idx < ctx.count(); ++idx) {
            if (v.coeff(idx) == 0) continue;
            std::cout << "s(" << ctx.partition(idx).str() << ") = " << v.coeff(idx) << "\n";
            any = true;
        }
        if (!any) std::cout << "0\n";
    }
}

std::string monomial_str(const std::vector<std::string>& vars, const std::vector<int>& exps) {
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += vars[i];
        if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
    }
    return out.empty() ? "1" : out;
}

void emit_polynomial(const std::string& format, const IntPolynomial& p) {
    if (format == "json") {
        json terms = json::array();
        for (const auto& [exps, coeff] : p.terms()) {
            json mono = json::object();
            for (std::size_t i = 0; i < p.vars().size(); ++i) {
                if (exps[i] != 0) mono[p.vars()[i]] = exps[i];
            }
            terms.push_back(json{{"monomial", mono}, {"coefficient", coeff}});
        }
        json out{{"vars", p.vars()}, {"terms", terms}, {"str", p.str()}};
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "monomial,coefficient\n";
        for (const auto& [exps, coeff] : p.terms()) {
            std::cout << csv_quote(monomial_str(p.vars(), exps)) << "," << coeff << "\n";
        }
    } else {
        std::cout << p.str() << "\n";
    }
}

// ---------------------------------------------------------------------------
// commands

int cmd_fibers(const std::string& shape_str, const std::string& route, const std::string& format,
               std::int64_t limit) {
    SkewShape shape = parse_shape(shape_str);
    require_extendable(shape);
    if (route == "inner") {
        DegreeContext ctx(shape.size());
        emit_fiber_table(format, fiber_table_inner(ctx, shape));
        return 0;
    }
    FiberTable formula = fiber_table_formula(shape, limit);
    if (route == "both") {
        DegreeContext ctx(shape.size());
        FiberTable inner = fiber_table_inner(ctx, shape);
        if (!(formula == inner)) {
            for (std::uint32_t mask = 0; mask < (1u << shape.size()); ++mask) {
                if (formula.at_mask(mask) != inner.at_mask(mask)) {
                    std::cerr << "route mismatch on " << shape.str() << " at J="
                              << Subset(shape.size(), mask).str() << ": formula "
                              << formula.at_mask(mask) << " vs inner " << inner.at_mask(mask)
                              << "\n";
                    return 1;
                }
            }
        }
    }
    emit_fiber_table(format, formula);
    return 0;
}

int cmd_extend(const std::string& shape_str, const std::string& format, std::int64_t limit) {
    SkewShape shape = parse_shape(shape_str);
    CyclicExtension ext = build_extension(shape, limit);
    if (format == "json") {
        json tabs = json::array();
        for (std::size_t i = 0; i < ext.tableaux().size(); ++i) {
            json t = tableau_json(shape, ext.tableaux()[i].rows());
            t["cdes"] = subset_json(ext.cdes()[i]);
            tabs.push_back(t);
        }
        json p = json::array();
        for (int img : ext.p()) p.push_back(img + 1);
        json out{{"shape", shape.str()}, {"n", ext.n()}, {"tableaux", tabs}, {"p", p}};
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "index,tableau,cdes,p\n";
        for (std::size_t i = 0; i < ext.tableaux().size(); ++i) {
            std::cout << i + 1 << "," << csv_quote(tableau_text(shape, ext.tableaux()[i].rows()))
                      << "," << csv_quote(ext.cdes()[i].str()) << "," << ext.p()[i] + 1 << "\n";
        }
    } else {
        for (std::size_t i = 0; i < ext.tableaux().size(); ++i) {
            std::cout << "T" << i + 1 << ": " << tableau_text(shape, ext.tableaux()[i].rows())
                      << "  cdes=" << ext.cdes()[i].str() << "  p(T" << i + 1 << ")=T"
                      << ext.p()[i] + 1 << "\n";
        }
    }
    return 0;
}

int cmd_verify(const std::string& suite, int max_n, const std::string& format, std::int64_t limit) {
    std::vector<CheckResult> results = run_suite(suite, max_n, limit);
    if (format == "json") {
        json out = json::array();
        for (const CheckResult& r : results) {
            out.push_back(json{{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        }
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "check,pass,detail\n";
        for (const CheckResult& r : results) {
            std::cout << csv_quote(r.name) << "," << (r.pass ? "true" : "false") << ","
                      << csv_quote(r.detail) << "\n";
        }
    } else {
        for (const CheckResult& r : results) {
            if (r.pass) {
                std::cout << "[PASS] " << r.name << "\n";
            } else {
                std::cout << "[FAIL] " << r.name << ": " << r.detail << "\n";
            }
        }
    }
    int failed = 0;
    for (const CheckResult& r : results) failed += r.pass ? 0 : 1;
    std::cerr << results.size() << " checks, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

int cmd_schur(const std::string& shape_str, const std::string& format) {
    SkewShape shape = parse_shape(shape_str);
    DegreeContext ctx(shape.size());
    emit_schur(format, ctx, skew_schur(ctx, shape));
    return 0;
}

int cmd_ribbon(int n, const std::string& j_str, bool affine, const std::string& format) {
    DegreeContext ctx(n);
    Subset j = parse_subset(n, j_str);
    SchurVector v = affine ? affine_ribbon_schur(ctx, j) : ribbon_schur(ctx, j);
    emit_schur(format, ctx, v);
    return 0;
}

int cmd_gw(int n, const std::string& j_str, const std::string& nu_str, const std::string& format) {
    DegreeContext ctx(n);
    Subset j = parse_subset(n, j_str);
    Partition nu = parse_partition(nu_str);
    std::int64_t c = gw_invariant(ctx, j, nu);
    if (format == "json") {
        json out{{"n", n}, {"J", subset_json(j)}, {"nu", nu.parts()}, {"coefficient", c}};
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "n,J,nu,coefficient\n"
                  << n << "," << csv_quote(j.str()) << "," << csv_quote(nu.str()) << "," << c
                  << "\n";
    } else {
        std::cout << c << "\n";
    }
    return 0;
}

int cmd_syt(const std::string& shape_str, bool list, const std::string& format,
            std::int64_t limit) {
    SkewShape shape = parse_shape(shape_str);
    if (!list) {
        std::int64_t c = count_syt(shape);
        if (format == "json") {
            std::cout << json{{"shape", shape.str()}, {"count", c}}.dump(2) << "\n";
        } else {
            std::cout << c << "\n";
        }
        return 0;
    }
    std::vector<StandardTableau> tabs = enumerate_syt(shape, limit);
    if (format == "json") {
        json out = json::array();
        for (const StandardTableau& t : tabs) {
            json jt = tableau_json(shape, t.rows());
            jt["des"] = subset_json(des_set(t));
            out.push_back(jt);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const StandardTableau& t : tabs) {
            std::cout << tableau_text(shape, t.rows()) << "  des=" << des_set(t).str() << "\n";
        }
    }
    return 0;
}

int cmd_cylindric(int n, const std::string& j_str, int max_entry, bool list,
                  const std::string& format) {
    Subset j = parse_subset(n, j_str);
    if (j.is_empty()) throw DomainError("cylindric shapes need a nonempty subset");
    std::vector<SemistandardTableau> tabs = enumerate_cylindric_tableaux(n, j, max_entry);
    if (!list) {
        if (format == "json") {
            std::cout << json{{"n", n},
                              {"J", subset_json(j)},
                              {"max_entry", max_entry},
                              {"count", static_cast<std::int64_t>(tabs.size())}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << tabs.size() << "\n";
        }
        return 0;
    }
    if (format == "json") {
        json out = json::array();
        for (const SemistandardTableau& t : tabs) out.push_back(tableau_json(t.shape(), t.rows()));
        std::cout << out.dump(2) << "\n";
    } else {
        for (const SemistandardTableau& t : tabs) {
            std::cout << tableau_text(t.shape(), t.rows()) << "\n";
        }
    }
    return 0;
}

int cmd_words(int m, int n, bool weak, const std::string& format) {
    std::vector<std::int64_t> dist = word_cdes_distribution(m, n, weak);
    emit_count_table(format, n, dist, "count", {{"m", json(m)}, {"n", json(n)}});
    return 0;
}

int cmd_sn(int n, const std::string& stat, const std::string& format) {
    SnDistributions d = sn_multivariate(n);
    if (stat == "both") {
        if (format == "json") {
            json des_entries = json::array();
            json cdes_entries = json::array();
            for (std::uint32_t mask = 0; mask < d.des.size(); ++mask) {
                if (d.des[mask] != 0) {
                    des_entries.push_back(
                        json{{"J", subset_json(Subset(n, mask))}, {"count", d.des[mask]}});
                }
                if (d.cdes[mask] != 0) {
                    cdes_entries.push_back(
                        json{{"J", subset_json(Subset(n, mask))}, {"count", d.cdes[mask]}});
                }
            }
            std::cout << json{{"n", n}, {"des", des_entries}, {"cdes", cdes_entries}}.dump(2)
                      << "\n";
        } else if (format == "csv") {
            std::cout << "stat,J,count\n";
            for (std::uint32_t mask = 0; mask < d.des.size(); ++mask) {
                if (d.des[mask] != 0) {
                    std::cout << "des," << csv_quote(Subset(n, mask).str()) << ","
                              << d.des[mask] << "\n";
                }
            }
            for (std::uint32_t mask = 0; mask < d.cdes.size(); ++mask) {
                if (d.cdes[mask] != 0) {
                    std::cout << "cdes," << csv_quote(Subset(n, mask).str()) << ","
                              << d.cdes[mask] << "\n";
                }
            }
        } else {
            std::cout << "des:\n";
            emit_count_table("text", n, d.des, "count", {});
            std::cout << "cdes:\n";
            emit_count_table("text", n, d.cdes, "count", {});
        }
        return 0;
    }
    const std::vector<std::int64_t>& v = stat == "des" ? d.des : d.cdes;
    emit_count_table(format, n, v, "count", {{"n", json(n)}, {"stat", json(stat)}});
    return 0;
}

int cmd_feasible(const std::string& shape_str, const std::string& format, std::int64_t limit) {
    SkewShape shape = parse_shape(shape_str);
    std::vector<std::int64_t> e0 = exceptional_feasibility(shape, limit);
    if (format == "json") {
        std::cout << json{{"shape", shape.str()}, {"e0", e0}}.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "e0\n";
        for (std::int64_t v : e0) std::cout << v << "\n";
    } else {
        if (e0.empty()) {
            std::cout << "none\n";
        } else {
            for (std::size_t i = 0; i < e0.size(); ++i) {
                std::cout << (i ? " " : "") << e0[i];
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_poly(const std::string& shape_str, const std::string& stat, const std::string& format,
             std::int64_t limit) {
    SkewShape shape = parse_shape(shape_str);
    IntPolynomial p = stat == "des" ? des_poly(shape, limit) : cdes_poly(shape, limit);
    emit_polynomial(format, p);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for cyclic descent extensions on skew standard Young tableaux"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    int max_n = 8;
    std::int64_t limit = cycdes::kDefaultSytLimit;
    CLI::Option* format_opt = app.add_option("--format", format, "output format")
                                  ->check(CLI::IsMember({"json", "csv", "text"}))
                                  ->capture_default_str();
    app.add_option("--max-n", max_n, "size cap for verification suites")
        ->check(CLI::Range(1, 16))
        ->capture_default_str();
    app.add_option("--limit-syt", limit, "abort enumerations past this many tableaux")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::string shape_str, route = "formula", suite, j_str, nu_str, stat = "cdes";
    int arg_n = 0, arg_m = 0, max_entry = 0;
    bool list = false, affine = false, weak = false;

    CLI::App* fibers = app.add_subcommand("fibers", "fiber table of the cyclic descent extension");
    fibers->add_option("shape", shape_str, "skew shape, e.g. \"3,2,1\" or \"4,3/1\" or \"(1^2)+(5)\"")
        ->required();
    fibers->add_option("--route", route, "computation route")
        ->check(CLI::IsMember({"formula", "inner", "both"}))
        ->capture_default_str();

    CLI::App* extend = app.add_subcommand("extend", "construct an explicit cyclic descent map");
    extend->add_option("shape", shape_str)->required();

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "one of: all|theorem1|theorem2|prop25|gens|exceptional|gw")
        ->required()
        ->check(CLI::IsMember(cycdes::suite_names()));

    CLI::App* schur = app.add_subcommand("schur", "Schur expansion of a skew shape");
    schur->add_option("shape", shape_str)->required();

    CLI::App* ribbon = app.add_subcommand("ribbon", "ribbon Schur function of a subset");
    ribbon->add_option("n", arg_n)->required()->check(CLI::Range(1, 16));
    ribbon->add_option("J", j_str, "subset, e.g. \"{1,3}\"")->required();
    ribbon->add_flag("--affine", affine, "affine variant (subset of [n], cyclic composition)");

    CLI::App* gw = app.add_subcommand("gw", "structure coefficient for a subset and a partition");
    gw->add_option("n", arg_n)->required()->check(CLI::Range(1, 16));
    gw->add_option("J", j_str)->required();
    gw->add_option("nu", nu_str, "non-hook partition of n, e.g. \"2,2\"")->required();

    CLI::App* syt = app.add_subcommand("syt", "standard tableaux of a skew shape");
    syt->add_option("shape", shape_str)->required();
    syt->add_flag("--list", list, "emit the tableaux instead of the count");

    CLI::App* cylindric = app.add_subcommand("cylindric", "cylindric ribbon tableaux of a subset");
    cylindric->add_option("n", arg_n)->required()->check(CLI::Range(1, 16));
    cylindric->add_option("J", j_str)->required();
    cylindric->add_option("max-entry", max_entry)->required()->check(CLI::PositiveNumber);
    cylindric->add_flag("--list", list);

    CLI::App* words = app.add_subcommand("words", "cyclic descent distribution over words");
    words->add_option("m", arg_m, "alphabet size")->required()->check(CLI::PositiveNumber);
    words->add_option("n", arg_n, "word length")->required()->check(CLI::Range(1, 16));
    words->add_flag("--weak", weak, "weak descents (>=) instead of strict");

    CLI::App* sn = app.add_subcommand("sn", "descent distributions over the symmetric group");
    sn->add_option("n", arg_n)->required()->check(CLI::Range(1, 13));
    sn->add_option("--stat", stat)->check(CLI::IsMember({"des", "cdes", "both"}))
        ->capture_default_str();

    CLI::App* feasible = app.add_subcommand("feasible", "escher-extension feasibility of a shape");
    feasible->add_option("shape", shape_str)->required();

    CLI::App* poly = app.add_subcommand("poly", "univariate descent polynomial of a shape");
    poly->add_option("shape", shape_str)->required();
    poly->add_option("--stat", stat)->check(CLI::IsMember({"des", "cdes"}))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage problems are domain errors
    }

    try {
        if (fibers->parsed()) return cmd_fibers(shape_str, route, format, limit);
        // the extension is a nested structure; it defaults to JSON
        if (extend->parsed())
            return cmd_extend(shape_str, format_opt->count() == 0 ? "json" : format, limit);
        if (verify->parsed()) return cmd_verify(suite, max_n, format, limit);
        if (schur->parsed()) return cmd_schur(shape_str, format);
        if (ribbon->parsed()) return cmd_ribbon(arg_n, j_str, affine, format);
        if (gw->parsed()) return cmd_gw(arg_n, j_str, nu_str, format);
        if (syt->parsed()) return cmd_syt(shape_str, list, format, limit);
        if (cylindric->parsed()) return cmd_cylindric(arg_n, j_str, max_entry, list, format);
        if (words->parsed()) return cmd_words(arg_m, arg_n, weak, format);
        if (sn->parsed()) return cmd_sn(arg_n, stat, format);
        if (feasible->parsed()) return cmd_feasible(shape_str, format, limit);
        if (poly->parsed()) return cmd_poly(shape_str, stat, format, limit);
    } catch (const cycdes::NotExtendable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cycdes::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cycdes::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
