#include "wildgoppa/cli.hpp"

#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "wildgoppa/cyclotomic.hpp"
#include "wildgoppa/errors.hpp"
#include "wildgoppa/evidence.hpp"
#include "wildgoppa/identities.hpp"
#include "wildgoppa/parallel.hpp"
#include "wildgoppa/serialize.hpp"

namespace wildgoppa {

namespace {

struct RunConfig {
    unsigned p = 0, a = 1, m = 1;
    std::string g;
    std::string support = "full";
    std::string cofactor;
    std::string check = "auto";
    unsigned s = 1;
    unsigned t = 0;
    std::uint64_t n = 0;
    long long lambda = -1;
    int id = 0;
    std::uint64_t budget = kDefaultDistanceBudget;
    std::string format = "text";
    int jobs = 0;
};

template <typename T>
std::string join(const std::vector<T>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

std::string yes_no(const std::vector<bool>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << (v[i] ? "yes" : "no");
    return os.str();
}

std::string cell_text(const TableCell& c) {
    std::ostringstream os;
    os << "[" << c.n << ", " << c.k << ", >=" << c.designed_distance << "]";
    return os.str();
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

Json cell_json(const TableCell& c) {
    Json j = {{"q", c.q}, {"t", c.t}, {"exponent", c.exponent}, {"n", c.n}, {"k", c.k}, {"designed_distance", c.designed_distance}};
    j["min_distance"] = c.min_distance ? Json(*c.min_distance) : Json(nullptr);
    return j;
}

TableCell make_cell(std::uint64_t q, unsigned t, std::uint64_t exponent, const Support& L, const Polynomial& g,
                    std::uint64_t budget) {
    const LinearCode c = goppa_code({L, pow(g, exponent)});
    TableCell cell{q, t, exponent, c.length(), c.dimension(), static_cast<std::size_t>(t * exponent + 1), std::nullopt};
    if (c.dimension() > 0) cell.min_distance = min_distance(c, budget).value;
    return cell;
}

void render_table(std::ostream& out, const std::string& title, const std::vector<std::uint64_t>& qs,
                  const std::vector<std::string>& row_labels, const std::vector<std::vector<const TableCell*>>& grid,
                  const std::vector<TableCell>& cells) {
    constexpr int kLabel = 16, kCell = 20;
    out << title << "\n";
    out << std::left << std::setw(kLabel) << "";
    for (auto q : qs) out << std::setw(kCell) << ("q=" + std::to_string(q));
    out << "\n";
    for (std::size_t r = 0; r < row_labels.size(); ++r) {
        out << std::setw(kLabel) << row_labels[r];
        for (const TableCell* c : grid[r]) out << std::setw(kCell) << (c ? cell_text(*c) : "-");
        out << "\n";
    }
    bool header = false;
    for (const auto& c : cells) {
        if (!c.min_distance) continue;
        if (!header) out << "exact minimum distance (full enumeration):\n";
        header = true;
        out << "  q=" << c.q << " t=" << c.t << " exponent=" << c.exponent << "  [" << c.n << ", " << c.k << ", "
            << *c.min_distance << "]\n";
    }
}

Field field_of(const RunConfig& cfg) {
    if (cfg.p == 0) throw InputError("--p is required");
    return build_tower(cfg.p, cfg.a, cfg.m);
}

Polynomial poly_of(const Field& f, const std::string& text, const char* flag) {
    if (text.empty()) throw InputError(std::string(flag) + " is required");
    try {
        return parse_polynomial(f, text);
    } catch (const ParseError& e) {
        throw InputError(std::string(flag) + ": " + e.what());
    }
}

Support support_of(const Field& f, const std::string& text) {
    try {
        return parse_support(f, text);
    } catch (const ParseError& e) {
        throw InputError(std::string("--support: ") + e.what());
    }
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
    const unsigned jobs = resolve_jobs(cfg.jobs);
    if (cfg.id == 1) {
        const auto cells = build_table1(cfg.budget, jobs);
        if (cfg.format == "json") {
            Json j = {{"command", "table"}, {"id", 1}, {"cells", Json::array()}};
            for (const auto& c : cells) j["cells"].push_back(cell_json(c));
            print_json(out, j);
            return kExitOk;
        }
        const std::vector<std::uint64_t> qs{5, 7, 8, 9};
        std::vector<std::string> labels;
        std::vector<std::vector<const TableCell*>> grid;
        for (unsigned t = 3; t <= 7; ++t) {
            labels.push_back("deg g = " + std::to_string(t));
            std::vector<const TableCell*> row;
            for (auto q : qs) {
                const TableCell* hit = nullptr;
                for (const auto& c : cells)
                    if (c.q == q && c.t == t) hit = &c;
                row.push_back(hit);
            }
            grid.push_back(row);
        }
        render_table(out, "Gamma(F_{q^2}, g^(q+1)), g the first irreducible of degree t over F_{q^2}", qs, labels, grid, cells);
        return kExitOk;
    }
    if (cfg.id == 2) {
        const auto cells = build_table2(cfg.budget, jobs);
        if (cfg.format == "json") {
            Json j = {{"command", "table"}, {"id", 2}, {"cells", Json::array()}};
            for (const auto& c : cells) j["cells"].push_back(cell_json(c));
            print_json(out, j);
            return kExitOk;
        }
        const std::vector<std::uint64_t> qs{4, 5, 7, 8};
        std::vector<std::vector<const TableCell*>> grid(2);
        for (std::size_t i = 0; i < cells.size(); ++i) grid[i % 2].push_back(&cells[i]);
        render_table(out, "Gamma(F_{q^3} \\ {0}, x^j)", qs, {"j = q^2+q+1", "j = q^2+q"}, grid, cells);
        return kExitOk;
    }
    throw InputError("--id must be 1 or 2");
}

void text_report(std::ostream& out, const IdentityReport& r) {
    out << "exponents: " << join(r.exponents) << "\n";
    out << "dims: " << join(r.dims) << "\n";
    out << "equal: " << yes_no(r.equal) << "\n";
    out << "gap: " << r.gap << "\n";
    out << "r: " << r.r << "\n";
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const Field f = field_of(cfg);
    const Polynomial g = poly_of(f, cfg.g, "--g");
    const Support L = support_of(f, cfg.support);
    std::string check = cfg.check;
    if (check == "auto") check = count_distinct_roots(g) == 0 ? "theorem1" : "gap";

    Json report;
    std::ostringstream text;
    text << "check: " << check << "\n" << "field: " << f.describe() << "\n" << "g: " << format_polynomial(g) << "\n"
         << "support size: " << L.size() << "\n";
    if (check == "theorem1" || check == "gap" || check == "chain" || check == "sugiyama") {
        IdentityReport r;
        if (check == "theorem1") r = verify_theorem1(L, g);
        if (check == "gap") r = dimension_gap(L, g);
        if (check == "chain") r = verify_chain(L, g, cfg.s);
        if (check == "sugiyama") r = verify_sugiyama(L, g, cfg.s);
        report = report_to_json(r);
        text_report(text, r);
    } else if (check == "rs") {
        const RsEquivalence r = rs_equivalence(L, g);
        report = to_json(r);
        text << "k: " << r.k << "\n" << "dimension: " << r.dimension << "\n" << "equal: " << (r.equal ? "yes" : "no") << "\n";
    } else if (check == "cofactor") {
        const CofactorReport r = verify_cofactor(L, g, poly_of(f, cfg.cofactor, "--cofactor"));
        report = to_json(r);
        text_report(text, r.report);
        if (r.typo_suspected) text << "warning: cofactor identity mismatch (remark, typo suspected)\n";
    } else {
        throw InputError("unknown --check '" + check + "'");
    }
    if (cfg.format == "json") {
        print_json(out, {{"command", "verify"}, {"check", check}, {"report", report}});
    } else {
        out << text.str();
    }
    return kExitOk;
}

int cmd_dims(const RunConfig& cfg, std::ostream& out) {
    if (cfg.p == 0) throw InputError("--p is required");
    if (!is_prime(cfg.p)) throw InputError("--p must be prime");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < cfg.a; ++i) q *= cfg.p;
    const std::optional<std::uint64_t> n = cfg.n ? std::optional<std::uint64_t>(cfg.n) : std::nullopt;
    const DimensionValue h = hmos_dim(q, cfg.m, cfg.t, n);
    std::optional<DimensionValue> c;
    std::string closed_note;
    try {
        c = closed_form(q, cfg.m, cfg.t, n);
    } catch (const InputError& e) {
        closed_note = e.what();
    }
    const std::uint64_t len = n.value_or(default_length(q, cfg.m, cfg.t));
    if (cfg.format == "json") {
        Json j = {{"command", "dims"}, {"q", q}, {"m", cfg.m}, {"t", cfg.t}, {"n", len}, {"hmos_dim", to_json(h)}};
        j["closed_form"] = c ? to_json(*c) : Json(nullptr);
        print_json(out, j);
        return kExitOk;
    }
    auto flags = [](const DimensionValue& v) {
        std::string s = v.exact ? "exact" : "lower bound";
        if (v.beyond_paper) s += ", beyond paper";
        return s;
    };
    out << "q: " << q << "\nm: " << cfg.m << "\nt: " << cfg.t << "\nn: " << len << "\n";
    out << "hmos_dim: " << h.value << " (" << flags(h) << ")\n";
    if (c)
        out << "closed_form: " << c->value << " (" << flags(*c) << ")\n";
    else
        out << "closed_form: n/a (" << closed_note << ")\n";
    return kExitOk;
}

int cmd_classes(const RunConfig& cfg, std::ostream& out) {
    if (cfg.p == 0) throw InputError("--p is required");
    if (!is_prime(cfg.p)) throw InputError("--p must be prime");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < cfg.a; ++i) q *= cfg.p;
    const ClassDecomposition d = classes(q, cfg.m);
    if (cfg.format == "json") {
        Json j = to_json(d);
        j["command"] = "classes";
        print_json(out, j);
        return kExitOk;
    }
    out << "modulus: " << d.modulus << "\nclasses: " << d.classes.size() << "\n";
    for (const auto& c : d.classes) out << "  b=" << c.representative << " n_b=" << c.size() << " {" << join(c.members) << "}\n";
    return kExitOk;
}

int cmd_evidence(const RunConfig& cfg, std::ostream& out) {
    const Field f = field_of(cfg);
    const Polynomial g = poly_of(f, cfg.g, "--g");
    const Support L = support_of(f, cfg.support);
    Elem lambda = 0;
    if (cfg.lambda >= 0) {
        lambda = static_cast<Elem>(cfg.lambda);
    } else {
        const auto zeros = trace_zero_elements(f);
        if (!zeros.empty()) lambda = zeros.front();
    }
    Json j;
    j["command"] = "evidence";
    j["key"] = {{"q", f.q()}, {"m", f.m()}, {"g", format_polynomial(g)}, {"lambda", lambda}};
    std::ostringstream text;
    text << "field: " << f.describe() << "\ng: " << format_polynomial(g) << "\nlambda: " << lambda << "\n";

    const KReport k = verify_K_properties(L, g);
    j["K"] = to_json(k);
    text << "dim K: " << k.dim_K << " (mt-1 = " << f.m() * k.t - 1 << ")\n"
         << "dim K mod g: " << k.dim_K_mod_g << "\n"
         << "dim K ∩ gF[x]_{<et}: " << k.dim_intersection << "\n"
         << "K in ker tau: " << (k.in_kernel_of_tau ? "yes" : "no") << "\n";

    const DualReformulation dr = dual_reformulation(L, g);
    j["dual"] = to_json(dr);
    text << "dim tau(F[x]_{<(e+1)t}): " << dr.dim_full << "\ndim tau(gF[x]_{<et}): " << dr.dim_multiples
         << "\ntau images equal: " << (dr.equal ? "yes" : "no") << "\n";

    j["decomposition"] = nullptr;
    j["startkey"] = nullptr;
    if (count_distinct_roots(g) == 0) {
        const Decomposition d = find_decomposition(L, g, lambda);
        j["decomposition"] = to_json(d);
        text << "decomposition a: " << format_polynomial(d.a) << " (index " << d.index << ")\n"
             << "dimensions: " << d.dim_K << " + " << d.dim_T << " + " << d.dim_multiples << " = " << d.ambient << "\n";
        const Polynomial h = irreducible_power(g).first;
        const StartKey s = startkey_search(h, lambda);
        j["startkey"] = to_json(s);
        text << "startkey alpha: " << format_polynomial(s.alpha) << " (index " << s.index << ", trace " << s.trace << ")\n";
        if (!dr.equal) throw TheoremFalsification("tau images differ for rootless g = " + format_polynomial(g));
    } else if (dr.dim_full - dr.dim_multiples > 1) {
        throw TheoremFalsification("tau images differ by more than one dimension for g = " + format_polynomial(g));
    }
    if (cfg.format == "json")
        print_json(out, j);
    else
        out << text.str();
    return kExitOk;
}

int cmd_code(const RunConfig& cfg, std::ostream& out, bool distance) {
    const Field f = field_of(cfg);
    const Polynomial g = poly_of(f, cfg.g, "--g");
    const Support L = support_of(f, cfg.support);
    const LinearCode c = goppa_code({L, g});
    if (!distance) {
        if (cfg.format == "json") {
            print_json(out, code_to_json(c));
        } else {
            out << "[" << c.length() << ", " << c.dimension() << "] over GF(" << f.q() << ")\n";
            for (const auto& row : c.generator().to_rows()) out << join(row) << "\n";
        }
        return kExitOk;
    }
    if (c.dimension() == 0) throw InputError("the code is zero; minimum distance undefined");
    const MinDistance d = min_distance(c, cfg.budget);
    const std::size_t designed = static_cast<std::size_t>(g.degree()) + 1;
    if (cfg.format == "json") {
        Json j = {{"command", "distance"}, {"n", c.length()}, {"k", c.dimension()}, {"designed_distance", designed}};
        j["min_distance"] = d.value ? Json(*d.value) : Json(nullptr);
        j["codewords"] = d.codewords;
        print_json(out, j);
    } else {
        out << "[" << c.length() << ", " << c.dimension() << ", >=" << designed << "]\n";
        if (d.value)
            out << "min_distance: " << *d.value << " (" << d.codewords << " codewords)\n";
        else
            out << "min_distance: not computed (" << d.codewords << " codewords exceed budget " << cfg.budget << ")\n";
    }
    return d.value ? kExitOk : kExitBudget;
}

}  // namespace

TowerParams tower_for(std::uint64_t q, unsigned m) {
    switch (q) {
        case 2: return {2, 1, m};
        case 3: return {3, 1, m};
        case 4: return {2, 2, m};
        case 5: return {5, 1, m};
        case 7: return {7, 1, m};
        case 8: return {2, 3, m};
        case 9: return {3, 2, m};
        default: throw InputError("no tower preset for q = " + std::to_string(q));
    }
}

std::vector<TableCell> build_table1(std::uint64_t budget, unsigned jobs) {
    std::vector<std::pair<std::uint64_t, unsigned>> plan;
    for (std::uint64_t q : {5u, 7u, 8u, 9u})
        for (unsigned t = 3; t + 2 <= q; ++t) plan.emplace_back(q, t);
    return parallel_map(plan.size(), jobs, [&](std::size_t i) {
        const auto [q, t] = plan[i];
        const auto tp = tower_for(q, 2);
        const Field f = build_tower(tp.p, tp.a, tp.m);
        return make_cell(q, t, q + 1, full_support(f), find_irreducible(f, t), budget);
    });
}

std::vector<TableCell> build_table2(std::uint64_t budget, unsigned jobs) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> plan;
    for (std::uint64_t q : {4u, 5u, 7u, 8u}) {
        plan.emplace_back(q, q * q + q + 1);
        plan.emplace_back(q, q * q + q);
    }
    return parallel_map(plan.size(), jobs, [&](std::size_t i) {
        const auto [q, exponent] = plan[i];
        const auto tp = tower_for(q, 3);
        const Field f = build_tower(tp.p, tp.a, tp.m);
        return make_cell(q, 1, exponent, support_without(f, std::vector<Elem>{0}), Polynomial::x(f), budget);
    });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classical Goppa codes over finite-field towers: construction, identity checks, dimension formulas"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_field = [&](CLI::App* sub) {
        sub->add_option("--p", cfg.p, "characteristic")->required();
        sub->add_option("--a", cfg.a, "[F_q : F_p]")->capture_default_str();
        sub->add_option("--m", cfg.m, "[F_{q^m} : F_q]")->capture_default_str();
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
        sub->add_option("--jobs", cfg.jobs, "worker threads (falls back to GOPPA_JOBS)");
    };
    const std::string poly_help = "polynomial: c0,c1,..,cd | irreducible:d | irreducible:d^s";
    const std::string support_help = "full | full-minus:e1,e2,.. | e1,e2,..";

    auto* table = app.add_subcommand("table", "rebuild a table of code parameters");
    table->add_option("--id", cfg.id, "1: quadratic extensions, 2: g = x over cubic extensions")->required();
    table->add_option("--budget", cfg.budget, "max codewords enumerated per exact distance")->capture_default_str();
    add_common(table);

    auto* verify = app.add_subcommand("verify", "check an identity between Goppa codes");
    add_field(verify);
    verify->add_option("--g", cfg.g, poly_help)->required();
    verify->add_option("--support", cfg.support, support_help)->capture_default_str();
    verify->add_option("--check", cfg.check, "auto | theorem1 | gap | chain | sugiyama | rs | cofactor")
        ->check(CLI::IsMember({"auto", "theorem1", "gap", "chain", "sugiyama", "rs", "cofactor"}))
        ->capture_default_str();
    verify->add_option("--s", cfg.s, "multiplier s for chain and sugiyama")->capture_default_str();
    verify->add_option("--cofactor", cfg.cofactor, "cofactor polynomial h for --check cofactor");
    add_common(verify);

    auto* dims = app.add_subcommand("dims", "dimension formulas from cyclotomic classes");
    add_field(dims);
    dims->add_option("--t", cfg.t, "degree of g")->required();
    dims->add_option("--n", cfg.n, "support length (default q^m, or q^m-1 when t = 1)");
    add_common(dims);

    auto* cls = app.add_subcommand("classes", "cyclotomic classes of Z/(q^m-1) under multiplication by q");
    add_field(cls);
    add_common(cls);

    auto* evidence = app.add_subcommand("evidence", "replay the space K, tau images and the decomposition search");
    add_field(evidence);
    evidence->add_option("--g", cfg.g, poly_help)->required();
    evidence->add_option("--support", cfg.support, support_help)->capture_default_str();
    evidence->add_option("--lambda", cfg.lambda, "nonzero trace-zero element (default: the first one)");
    add_common(evidence);

    auto* code = app.add_subcommand("code", "print the canonical generator of Gamma(L, G)");
    add_field(code);
    code->add_option("--g", cfg.g, poly_help)->required();
    code->add_option("--support", cfg.support, support_help)->capture_default_str();
    add_common(code);

    auto* distance = app.add_subcommand("distance", "exact minimum distance of Gamma(L, G) by enumeration");
    add_field(distance);
    distance->add_option("--g", cfg.g, poly_help)->required();
    distance->add_option("--support", cfg.support, support_help)->capture_default_str();
    distance->add_option("--budget", cfg.budget, "max codewords enumerated")->capture_default_str();
    add_common(distance);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInput;
    }

    try {
        if (table->parsed()) return cmd_table(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (dims->parsed()) return cmd_dims(cfg, out);
        if (cls->parsed()) return cmd_classes(cfg, out);
        if (evidence->parsed()) return cmd_evidence(cfg, out);
        if (code->parsed()) return cmd_code(cfg, out, false);
        if (distance->parsed()) return cmd_code(cfg, out, true);
    } catch (const TheoremFalsification& e) {
        err << "theorem falsification: " << e.what() << "\n";
        return kExitFalsified;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace wildgoppa
