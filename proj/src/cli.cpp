#include "lw/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lw/suites.hpp"

namespace lw::cli {

using json = nlohmann::ordered_json;

namespace {

struct CfgOpts {
    int n = 0, d = 0;
    std::string w, e, field = "q";
    std::string box;

    void attach(CLI::App* app, bool required = true) {
        auto* on = app->add_option("--n", n, "number of generators");
        auto* od = app->add_option("--d", d, "power");
        auto* ow = app->add_option("--w", w, "restriction vector, comma separated");
        if (required) {
            on->required();
            od->required();
            ow->required();
        }
        app->add_option("--e", e, "exponents e_i with psi(f_i) = x_i^{e_i}, default all 1");
        app->add_option("--field", field, "coefficient field: q or fp:<prime>");
        app->add_option("--box", box, "strand box override, comma separated");
    }

    bool given() const { return n > 0; }
};

Exp parse_vec(const std::string& s, int n, const char* what) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(std::stoi(item));
    if (n > 0 && int(v.size()) != n)
        throw std::invalid_argument(std::string(what) + " must have length n");
    return Exp(std::move(v));
}

FieldCfg parse_field(const std::string& s) {
    if (s == "q") return FieldCfg::rationals();
    if (s.rfind("fp:", 0) == 0) return FieldCfg::prime(std::stol(s.substr(3)));
    throw std::invalid_argument("field must be q or fp:<prime>");
}

SetupConfig make_cfg(const CfgOpts& o) {
    Exp w = parse_vec(o.w, o.n, "w");
    Exp e = o.e.empty() ? Exp{} : parse_vec(o.e, o.n, "e");
    return SetupConfig(o.n, o.d, std::move(w), std::move(e), parse_field(o.field));
}

json cfg_json(const SetupConfig& cfg) {
    json j;
    j["n"] = cfg.n;
    j["d"] = cfg.d;
    j["w"] = cfg.w.v;
    j["e"] = cfg.e.v;
    j["field"] = cfg.field.is_prime_field() ? "fp:" + std::to_string(cfg.field.p) : "q";
    return j;
}

json report_shell(const std::string& command, const SetupConfig* cfg) {
    json j;
    j["command"] = command;
    j["version"] = kVersion;
    if (cfg) j["config"] = cfg_json(*cfg);
    j["checks"] = json::array();
    j["payload"] = json::object();
    return j;
}

void add_check(json& rep, const std::string& name, bool pass,
               const std::string& counterexample = "") {
    json c;
    c["name"] = name;
    c["pass"] = pass;
    if (!counterexample.empty()) c["counterexample"] = counterexample;
    rep["checks"].push_back(std::move(c));
}

json suite_json(const SuiteResult& s) {
    json j;
    j["suite"] = s.name;
    j["pass"] = s.pass;
    j["lines"] = s.lines;
    if (!s.counterexample.empty()) j["counterexample"] = s.counterexample;
    return j;
}

json element_json(const Element& x, const ModuleSpec& mod) {
    json arr = json::array();
    for (const auto& [i, q] : x) {
        json t;
        t["basis"] = mod.names.at(i);
        t["coeff"] = q.str();
        arr.push_back(std::move(t));
    }
    return arr;
}

json linmap_json(const LinMap& f, const ModuleSpec& src, const ModuleSpec& tgt) {
    json cols = json::array();
    for (int j = 0; j < f.src_rank; ++j) {
        json col;
        col["source"] = src.names.at(j);
        col["image"] = element_json(f.cols[j], tgt);
        cols.push_back(std::move(col));
    }
    return cols;
}

void emit(const json& rep, const std::string& format, const std::string& out_path,
          std::ostream& out) {
    std::string text;
    if (format == "text") {
        std::ostringstream ss;
        ss << rep["command"].get<std::string>() << " (v" << rep["version"].get<std::string>()
           << ")\n";
        if (rep.contains("config")) ss << "config: " << rep["config"].dump() << "\n";
        for (const auto& c : rep["checks"]) {
            ss << (c["pass"].get<bool>() ? "pass  " : "FAIL  ") << c["name"].get<std::string>();
            if (c.contains("counterexample"))
                ss << "  [" << c["counterexample"].get<std::string>() << "]";
            ss << "\n";
        }
        if (rep.contains("payload")) ss << rep["payload"].dump(2) << "\n";
        text = ss.str();
    } else {
        text = rep.dump(2) + "\n";
    }
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << text;
    }
    out << text;
}

bool all_pass(const json& rep) {
    for (const auto& c : rep["checks"])
        if (!c["pass"].get<bool>()) return false;
    return true;
}

// --- element grammar -----------------------------------------------------

BasisLabel parse_label(const std::string& s, int n) {
    // f[i1,i2,...]*m[a1,...,an]
    auto fail = [&]() { throw std::invalid_argument("cannot parse element '" + s + "'"); };
    auto lb = s.find("f[");
    auto mid = s.find("]*m[");
    if (lb != 0 || mid == std::string::npos || s.back() != ']') fail();
    std::string sig = s.substr(2, mid - 2);
    std::string al = s.substr(mid + 4, s.size() - mid - 5);
    BasisLabel lab;
    if (!sig.empty()) {
        std::stringstream ss(sig);
        std::string item;
        while (std::getline(ss, item, ',')) lab.sigma.push_back(std::stoi(item));
        for (std::size_t i = 1; i < lab.sigma.size(); ++i)
            if (lab.sigma[i - 1] >= lab.sigma[i]) fail();
        if (lab.sigma.front() < 1 || lab.sigma.back() > n) fail();
    }
    lab.alpha = parse_vec(al, n, "m[...]");
    for (int x : lab.alpha.v)
        if (x < 0) fail();
    return lab;
}

// --- commands ------------------------------------------------------------

int cmd_simplex(const SetupConfig& cfg, const std::string& format, const std::string& out_path,
                std::ostream& out) {
    json rep = report_shell("simplex", &cfg);
    auto exps = restricted_exponents(cfg);
    MonomialIdeal I = restricted_power_ideal(cfg);
    json pts = json::array(), gens = json::array();
    for (const auto& a : exps) pts.push_back(a.v);
    for (const auto& g : I.gens()) gens.push_back(Poly::monomial(g, Scalar(1)).str());
    rep["payload"]["exponents"] = std::move(pts);
    rep["payload"]["generators"] = std::move(gens);
    rep["payload"]["count"] = exps.size();
    add_check(rep, "restricted exponent set nonempty", !exps.empty());
    emit(rep, format, out_path, out);
    return all_pass(rep) ? 0 : 1;
}

int cmd_resolve(const SetupConfig& cfg, const std::string& box_override,
                const std::string& format, const std::string& out_path, std::ostream& out) {
    json rep = report_shell("resolve", &cfg);
    LComplex L = build_l_complex(cfg);

    std::optional<StrandBox> box;
    if (!box_override.empty()) box = StrandBox{parse_vec(box_override, cfg.n, "box")};
    ResolutionReport vr = verify_resolution(L.cx, cfg, L.ideal, box);
    add_check(rep, "d^2 = 0", vr.d2_ok);
    add_check(rep, "minimal", vr.minimal, vr.minimal ? "" : vr.counterexample);
    add_check(rep, "box exactness in degrees >= 1", vr.exact,
              vr.exact ? "" : vr.counterexample);
    add_check(rep, "H_0 matches quotient", vr.h0_ok, vr.h0_ok ? "" : vr.counterexample);

    BettiTable bt = betti_table(L.cx);
    rep["payload"]["ranks"] = L.cx.trimmed_ranks();
    json graded = json::array();
    for (const auto& [key, v] : bt.graded) {
        json g;
        g["degree"] = key.first;
        g["mdeg"] = key.second.v;
        g["rank"] = v;
        graded.push_back(std::move(g));
    }
    rep["payload"]["graded"] = std::move(graded);
    rep["payload"]["box"] = vr.box.upper.v;

    json tabs = json::array();
    for (int a = 1; a < cfg.n; ++a) {
        json t;
        t["a"] = a;
        json list = json::array();
        for (const auto& tab : hook_ssyt(a, cfg.d, cfg)) list.push_back(tab.str());
        t["tableaux"] = std::move(list);
        tabs.push_back(std::move(t));
    }
    rep["payload"]["tableau_bases"] = std::move(tabs);

    json diffs = json::array();
    for (int k = 1; k <= L.cx.top(); ++k) {
        json d;
        d["degree"] = k;
        d["matrix"] = linmap_json(L.cx.diffs[k], L.cx.mods[k], L.cx.mods[k - 1]);
        diffs.push_back(std::move(d));
    }
    rep["payload"]["differentials"] = std::move(diffs);

    json kernels = json::array();
    for (int a = 1; a < cfg.n; ++a) {
        const KernelSpace& K = L.kernels[a];
        json ks;
        ks["a"] = a;
        json basis = json::array();
        for (int j = 0; j < K.rank(); ++j)
            basis.push_back(element_json(K.basis[j], K.ambient.spec));
        ks["basis"] = std::move(basis);
        kernels.push_back(std::move(ks));
    }
    rep["payload"]["kernel_bases"] = std::move(kernels);

    emit(rep, format, out_path, out);
    return all_pass(rep) ? 0 : 1;
}

int cmd_verify(const std::string& suite, const CfgOpts& opts, const std::string& grid_name,
               const std::string& corrupt, const std::string& format,
               const std::string& out_path, std::ostream& out) {
    Corruption cr = Corruption::none;
    if (corrupt == "deleted-kernel-vector") cr = Corruption::deleted_kernel_vector;
    else if (corrupt == "flipped-perturbation") cr = Corruption::flipped_perturbation;
    else if (corrupt == "flipped-product-sign") cr = Corruption::flipped_product_sign;
    else if (corrupt == "scaled-representative") cr = Corruption::scaled_representative;
    else if (!corrupt.empty()) throw std::invalid_argument("unknown corruption: " + corrupt);

    std::vector<SetupConfig> res_grid, ret_grid, dga_grid, gol_grid;
    if (opts.given()) {
        SetupConfig cfg = make_cfg(opts);
        res_grid = ret_grid = dga_grid = gol_grid = {cfg};
    } else if (grid_name == "small") {
        res_grid = grid_resolution();
        ret_grid = grid_retract();
        dga_grid = grid_dga();
        gol_grid = grid_golod();
    } else if (grid_name == "tiny") {
        res_grid = ret_grid = dga_grid = {SetupConfig(2, 2, Exp{2, 2}),
                                          SetupConfig(2, 2, Exp{1, 1})};
        gol_grid = {SetupConfig(2, 2, Exp{2, 2})};
    } else {
        throw std::invalid_argument("unknown grid: " + grid_name);
    }

    json rep = report_shell("verify " + suite, opts.given() ? &res_grid.front() : nullptr);
    json suites = json::array();
    auto run_suite = [&](const SuiteResult& s) {
        add_check(rep, "suite " + s.name, s.pass, s.counterexample);
        suites.push_back(suite_json(s));
    };

    if (suite == "resolution" || suite == "all") run_suite(suite_resolution(res_grid, cr));
    if (suite == "homotopy" || suite == "all") run_suite(suite_homotopy(res_grid));
    if (suite == "retract" || suite == "all") run_suite(suite_retract(ret_grid, cr));
    if (suite == "dga" || suite == "all") run_suite(suite_dga(dga_grid, cr));
    if (suite == "golod" || suite == "all") {
        std::vector<SetupConfig> g;
        for (const auto& c : gol_grid)
            if (c.d >= 2) g.push_back(c);
        if (g.empty() && opts.given())
            throw std::invalid_argument("golod suite requires d >= 2");
        run_suite(suite_golod(g, 5, cr));
    }
    if (rep["checks"].empty()) throw std::invalid_argument("unknown suite: " + suite);

    rep["payload"]["suites"] = std::move(suites);
    emit(rep, format, out_path, out);
    return all_pass(rep) ? 0 : 1;
}

int cmd_product(const SetupConfig& cfg, const std::string& xs, const std::string& ys,
                const std::string& format, const std::string& out_path, std::ostream& out) {
    json rep = report_shell("product", &cfg);
    BasisLabel xl = parse_label(xs, cfg.n);
    BasisLabel yl = parse_label(ys, cfg.n);
    if (!leq(xl.mdeg(), cfg.w) || !leq(yl.mdeg(), cfg.w))
        throw std::invalid_argument("product inputs must have multidegree bounded by w");

    int bx = xl.alpha.total(), by = yl.alpha.total();
    rep["payload"]["x"] = xl.str();
    rep["payload"]["y"] = yl.str();

    if (bx == cfg.d && by == cfg.d) {
        // transferred product on the resolution: inputs are ambient
        // elements of (wedge^a (x) S_d)_w
        RetractData r = unperturbed_retract(cfg);
        PerturbedRetract pr = perturb(r, koszul_perturbation(*r.X));
        const XComplex& X = *pr.X;
        Scalar twist(cfg.d % 2 == 0 ? 1 : -1);

        auto embed = [&](const BasisLabel& lab) {
            // closed-form inclusion u (1 - h Kos)^{-1} h on an ambient label
            int k = int(lab.sigma.size()) + 1;
            Element cur;
            for (auto& [t, c] : derham_terms(lab, cfg)) elem_add(cur, X.find(k, t), c);
            Element acc = cur;
            int guard = 0;
            while (!elem_is_zero(cur)) {
                if (++guard > cfg.n + cfg.d)
                    throw std::logic_error("product: inclusion series did not terminate");
                cur = X.h[k - 1].apply(X.vert[k].apply(cur));
                elem_add(acc, cur);
            }
            return std::make_pair(k, elem_scale(twist, acc));
        };
        auto [kx, fx] = embed(xl);
        auto [ky, fy] = embed(yl);
        Element prod;
        for (const auto& [ix, qx] : fx)
            for (const auto& [iy, qy] : fy) {
                auto t = x_product_labels(X.labels[kx][ix], X.labels[ky][iy], cfg);
                if (!t) continue;
                elem_add(prod, X.find(kx + ky, t->first), qx * qy * t->second);
            }
        int k = kx + ky;
        Element g = k <= X.top() ? pr.maps.p[k].apply(prod) : Element{};
        rep["payload"]["kind"] = "transferred";
        rep["payload"]["degree"] = k;
        if (k <= pr.L->cx.top()) {
            rep["payload"]["coords"] = element_json(g, pr.L->cx.mods[k]);
            Element amb = k >= 1 ? pr.L->to_ambient(k, g) : g;
            const ModuleSpec& spec = k >= 1 ? pr.L->kernels[k - 1].ambient.spec
                                            : pr.L->cx.mods[0];
            rep["payload"]["ambient"] = element_json(amb, spec);
        } else {
            rep["payload"]["coords"] = json::array();
            rep["payload"]["ambient"] = json::array();
        }
        add_check(rep, "transferred product computed", true);
    } else if (bx < cfg.d && by < cfg.d) {
        // carrier product of two labels
        auto t = x_product_labels(xl, yl, cfg);
        rep["payload"]["kind"] = "carrier";
        json terms = json::array();
        if (t) {
            json one;
            one["basis"] = t->first.str();
            one["coeff"] = t->second.str();
            terms.push_back(std::move(one));
        }
        rep["payload"]["ambient"] = std::move(terms);
        add_check(rep, "carrier product computed", true);
    } else {
        throw std::invalid_argument(
            "product arguments must both have |alpha| = d (transferred) or both < d (carrier)");
    }
    emit(rep, format, out_path, out);
    return 0;
}

int cmd_golod(const SetupConfig& cfg, int max_deg, const std::string& format,
              const std::string& out_path, std::ostream& out) {
    if (cfg.d < 2) throw std::invalid_argument("golod requires d >= 2");
    json rep = report_shell("golod", &cfg);
    KoszulHomology H = koszul_homology(cfg);
    rep["payload"]["homology_dims"] = H.dims;

    json classes = json::array();
    for (int i = 1; i <= cfg.n; ++i)
        for (const auto& c : H.classes[i]) {
            if (!c.chosen) continue;
            json cj;
            cj["degree"] = i;
            cj["label"] = BasisLabel{c.sigma, c.alpha}.str();
            cj["representative"] = Poly::monomial(c.coeff, Scalar(1)).str() + "*e[" + [&] {
                std::string s;
                for (std::size_t t = 0; t < c.sigma.size(); ++t)
                    s += (t ? "," : "") + std::to_string(c.sigma[t]);
                return s;
            }() + "]";
            classes.push_back(std::move(cj));
        }
    rep["payload"]["basis"] = std::move(classes);

    MasseyWitness mw = check_golod(H);
    add_check(rep, "pairwise products vanish", mw.trivial, mw.offending_pair);

    GolodComplex T = golod_resolution(H, max_deg);
    rep["payload"]["t_ranks"] = T.cx.ranks();
    auto series = poincare_coeffs(H.dims, cfg.n, max_deg);
    rep["payload"]["poincare_coeffs"] = series;
    bool agree = true;
    for (int k = 0; k <= max_deg; ++k) agree = agree && T.cx.rank(k) == series[k];
    add_check(rep, "ranks match series", agree);
    add_check(rep, "d^2 = 0 mod I", !first_d_squared_failure_mod(T.cx, T.ideal));
    add_check(rep, "minimal", !first_unit_entry(T.cx));

    emit(rep, format, out_path, out);
    return all_pass(rep) ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact resolutions of restricted powers of complete intersections"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json", out_path;
    app.add_option("--format", format, "json or text")->capture_default_str();
    app.add_option("--out", out_path, "also write the report to this path");

    CfgOpts simplex_opts, resolve_opts, product_opts, golod_opts, verify_opts;
    auto* simplex = app.add_subcommand("simplex", "restricted exponents and generators");
    simplex->fallthrough();
    simplex_opts.attach(simplex);

    auto* resolve = app.add_subcommand("resolve", "build and certify the resolution");
    resolve->fallthrough();
    resolve_opts.attach(resolve);

    std::string suite = "all", grid_name = "small", corrupt;
    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->fallthrough();
    verify->add_option("suite", suite,
                       "resolution | homotopy | retract | dga | golod | all");
    verify_opts.attach(verify, false);
    verify->add_option("--grid", grid_name, "named grid: small | tiny")
        ->capture_default_str();
    verify->add_option("--corrupt", corrupt,
                       "negative control: deleted-kernel-vector | flipped-perturbation | "
                       "flipped-product-sign | scaled-representative");

    std::string xs, ys;
    auto* product = app.add_subcommand("product", "multiply two basis elements");
    product->fallthrough();
    product_opts.attach(product);
    product->add_option("--x", xs, "left factor, e.g. f[1]*m[0,2]")->required();
    product->add_option("--y", ys, "right factor")->required();

    int max_deg = 5;
    auto* golod = app.add_subcommand("golod", "Koszul homology and residue-field resolution");
    golod->fallthrough();
    golod_opts.attach(golod);
    golod->add_option("--max-deg", max_deg, "truncation degree")->capture_default_str();

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help() << std::endl;
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (simplex->parsed()) {
            SetupConfig cfg = make_cfg(simplex_opts);
            set_field(cfg.field);
            return cmd_simplex(cfg, format, out_path, out);
        }
        if (resolve->parsed()) {
            SetupConfig cfg = make_cfg(resolve_opts);
            set_field(cfg.field);
            return cmd_resolve(cfg, resolve_opts.box, format, out_path, out);
        }
        if (verify->parsed()) {
            if (!verify_opts.field.empty()) set_field(parse_field(verify_opts.field));
            return cmd_verify(suite, verify_opts, grid_name, corrupt, format, out_path, out);
        }
        if (product->parsed()) {
            SetupConfig cfg = make_cfg(product_opts);
            set_field(cfg.field);
            return cmd_product(cfg, xs, ys, format, out_path, out);
        }
        if (golod->parsed()) {
            SetupConfig cfg = make_cfg(golod_opts);
            set_field(cfg.field);
            return cmd_golod(cfg, max_deg, format, out_path, out);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal invariant breach: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

} // namespace lw::cli
