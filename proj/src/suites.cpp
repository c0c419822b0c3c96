#include "lw/suites.hpp"

#include <algorithm>

namespace lw {

namespace {

std::string cfg_str(const SetupConfig& cfg) {
    std::string s = "n=" + std::to_string(cfg.n) + " d=" + std::to_string(cfg.d) +
                    " w=" + cfg.w.str();
    bool unit_e = true;
    for (int x : cfg.e.v) unit_e = unit_e && x == 1;
    if (!unit_e) s += " e=" + cfg.e.str();
    return s;
}

bool valid_cfg(int d, const Exp& w) {
    long cap = 0;
    for (int x : w.v) cap += std::min(x, d);
    return cap >= d;
}

void add_cfg(std::vector<SetupConfig>& out, int n, int d, Exp w, Exp e = Exp{}) {
    if (!valid_cfg(d, w)) return;
    SetupConfig cfg(n, d, std::move(w), std::move(e));
    for (const auto& c : out)
        if (c.n == cfg.n && c.d == cfg.d && c.w == cfg.w && c.e == cfg.e) return;
    out.push_back(std::move(cfg));
}

} // namespace

std::vector<SetupConfig> grid_resolution() {
    std::vector<SetupConfig> out;
    for (int n = 1; n <= 4; ++n)
        for (int d = 1; d <= 4; ++d) {
            add_cfg(out, n, d, Exp(std::vector<int>(n, d)));
            add_cfg(out, n, d, Exp(std::vector<int>(n, 1)));
            if (n == 3) {
                add_cfg(out, n, d, Exp{3, 1, 1});
                add_cfg(out, n, d, Exp{2, 1, 1});
                add_cfg(out, n, d, Exp{2, 2, 1});
            }
        }
    add_cfg(out, 2, 2, Exp{2, 2}, Exp{1, 2});
    return out;
}

std::vector<SetupConfig> grid_retract() {
    std::vector<SetupConfig> out;
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 3; ++d) {
            add_cfg(out, n, d, Exp(std::vector<int>(n, d)));
            add_cfg(out, n, d, Exp(std::vector<int>(n, 1)));
            if (n == 3) {
                add_cfg(out, n, d, Exp{3, 1, 1});
                add_cfg(out, n, d, Exp{2, 2, 1});
            }
        }
    add_cfg(out, 2, 4, Exp{4, 4});
    add_cfg(out, 4, 2, Exp{2, 2, 2, 2});
    add_cfg(out, 4, 3, Exp{1, 1, 1, 1});
    add_cfg(out, 2, 2, Exp{2, 2}, Exp{1, 2});
    return out;
}

std::vector<SetupConfig> grid_dga() {
    std::vector<SetupConfig> out;
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 3; ++d) {
            add_cfg(out, n, d, Exp(std::vector<int>(n, d)));
            add_cfg(out, n, d, Exp(std::vector<int>(n, 1)));
            if (n == 3) {
                add_cfg(out, n, d, Exp{3, 1, 1});
                add_cfg(out, n, d, Exp{2, 2, 1});
            }
        }
    add_cfg(out, 2, 2, Exp{2, 2}, Exp{1, 2});
    return out;
}

std::vector<SetupConfig> grid_golod() {
    std::vector<SetupConfig> out;
    add_cfg(out, 2, 2, Exp{2, 2});
    add_cfg(out, 2, 3, Exp{3, 3});
    add_cfg(out, 2, 3, Exp{2, 2});
    add_cfg(out, 3, 2, Exp{2, 2, 2});
    add_cfg(out, 3, 2, Exp{1, 1, 1});
    add_cfg(out, 3, 2, Exp{2, 1, 1});
    add_cfg(out, 3, 3, Exp{3, 1, 1});
    add_cfg(out, 2, 2, Exp{2, 2}, Exp{1, 2});
    return out;
}

namespace {

// homology of one kappa row (constant a+b = t) of the truncated double
// complex, per formal multidegree fiber, summed
std::vector<int> row_homology(const BicomplexData& B, int t) {
    const SetupConfig& cfg = B.cfg;
    // spots a from min(t, n) down to t-(d-1); complex runs kappa: a -> a-1
    int a_hi = std::min(t, cfg.n);
    int a_lo = std::max(0, t - (cfg.d - 1));
    std::vector<const WedgeSymModule*> spots;
    for (int a = a_hi; a >= a_lo; --a) spots.push_back(&B.at(a, t - a));
    int nspots = int(spots.size());

    // fibers by formal multidegree
    std::map<Exp, std::vector<std::vector<int>>> fiber_idx;
    for (int s = 0; s < nspots; ++s)
        for (int j = 0; j < spots[s]->rank(); ++j) {
            Exp mu = spots[s]->labels[j].mdeg();
            auto& v = fiber_idx[mu];
            if (v.empty()) v.resize(nspots);
            v[s].push_back(j);
        }

    std::vector<int> H(nspots, 0);
    for (const auto& [mu, idx] : fiber_idx) {
        std::vector<int> dims(nspots), rank(nspots + 1, 0);
        for (int s = 0; s < nspots; ++s) dims[s] = int(idx[s].size());
        for (int s = 0; s + 1 < nspots; ++s) {
            // kappa from spot s (wedge a_hi - s) into spot s+1
            if (dims[s] == 0 || dims[s + 1] == 0) continue;
            std::map<int, int> pos;
            for (int r = 0; r < dims[s + 1]; ++r) pos[idx[s + 1][r]] = r;
            DenseMatrix m(dims[s + 1], dims[s]);
            for (int c = 0; c < dims[s]; ++c) {
                const BasisLabel& lab = spots[s]->labels[idx[s][c]];
                for (auto& [tl, q] : kappa_terms(lab, cfg)) {
                    auto it = spots[s + 1]->index.find(tl);
                    if (it == spots[s + 1]->index.end())
                        throw std::logic_error("row_homology: target escaped the row");
                    m.at(pos.at(it->second), c) = q.single_term().second;
                }
            }
            rank[s + 1] = rank_of(std::move(m));
        }
        for (int s = 0; s < nspots; ++s) H[s] += dims[s] - rank[s] - rank[s + 1];
    }
    return H;
}

} // namespace

SuiteResult check_bicomplex_exactness(const SetupConfig& cfg) {
    SuiteResult res;
    res.name = "bicomplex exactness";
    BicomplexData B = build_bicomplex(cfg);

    if (auto bad = bicomplex_square_failure(B))
        res.record(cfg_str(cfg) + " squares", false, *bad);
    else
        res.record(cfg_str(cfg) + " squares", true);

    std::vector<KernelSpace> ker;
    for (int a = 0; a < cfg.n; ++a) ker.push_back(kernel_space(a, cfg));

    for (int t = 0; t <= cfg.n + cfg.d - 1; ++t) {
        auto H = row_homology(B, t);
        bool ok = true;
        std::string why;
        int a_hi = std::min(t, cfg.n);
        for (std::size_t s = 0; s < H.size(); ++s) {
            int a = a_hi - int(s);
            int expect = 0;
            if (t == 0)
                expect = 1;  // the corner carries R
            else if (t >= cfg.d && a == t - cfg.d + 1 && t - cfg.d < cfg.n)
                expect = ker[t - cfg.d].rank();  // right end surjects onto the kernel
            if (H[s] != expect) {
                ok = false;
                why = "row t=" + std::to_string(t) + " spot a=" + std::to_string(a) +
                      " homology " + std::to_string(H[s]) + " != " + std::to_string(expect);
                break;
            }
        }
        res.record(cfg_str(cfg) + " row t=" + std::to_string(t), ok, why);
    }

    // columns: (wedge^* (x) S_b)_w with the Koszul action, exact in
    // degrees >= 1 inside the box
    for (int b = 0; b <= cfg.d - 1; ++b) {
        ComplexData col;
        col.mods.resize(cfg.n + 1);
        col.diffs.resize(cfg.n + 1);
        for (int a = 0; a <= cfg.n; ++a) col.mods[a] = B.at(a, b).spec;
        for (int a = 1; a <= cfg.n; ++a) col.diffs[a] = B.vert.at({a, b});
        StrandEngine eng(col);
        auto bad = eng.first_nonexact(default_box(col, cfg), 1, cfg.n);
        res.record(cfg_str(cfg) + " column b=" + std::to_string(b), !bad,
                   bad ? "H_" + std::to_string(bad->second) + " != 0 at " + bad->first.str()
                       : "");
    }
    return res;
}

SuiteResult suite_resolution(const std::vector<SetupConfig>& grid, Corruption corrupt) {
    SuiteResult res;
    res.name = "resolution";
    for (const auto& cfg : grid) {
        LComplex L = build_l_complex(cfg);

        if (corrupt == Corruption::deleted_kernel_vector) {
            // drop the last basis vector of the top nonzero module
            for (int k = L.cx.top(); k >= 2; --k) {
                if (L.cx.rank(k) == 0) continue;
                L.cx.mods[k].names.pop_back();
                L.cx.mods[k].ring_mdeg.pop_back();
                L.cx.diffs[k].cols.pop_back();
                L.cx.diffs[k].src_rank -= 1;
                if (k < L.cx.top()) {
                    // also forget the deleted row above, keeping shapes consistent
                    int gone = L.cx.rank(k);
                    for (auto& col : L.cx.diffs[k + 1].cols) col.erase(gone);
                    L.cx.diffs[k + 1].tgt_rank -= 1;
                }
                break;
            }
        }

        ResolutionReport rep = verify_resolution(L.cx, cfg, L.ideal);
        res.record(cfg_str(cfg) + " resolution certificate", rep.pass(), rep.counterexample);
        if (corrupt != Corruption::none) continue;

        // tableau count agreement (kernel rank vs hook tableaux)
        bool counts_ok = true;
        std::string why;
        for (int a = 1; a < cfg.n; ++a) {
            long expect = long(hook_ssyt(a, cfg.d, cfg).size());
            if (expect != L.cx.rank(a + 1)) {
                counts_ok = false;
                why = "rank L^" + std::to_string(a) + " = " + std::to_string(L.cx.rank(a + 1)) +
                      " but " + std::to_string(expect) + " tableaux";
                break;
            }
        }
        res.record(cfg_str(cfg) + " tableau counts", counts_ok, why);

        SuiteResult bic = check_bicomplex_exactness(cfg);
        res.record(cfg_str(cfg) + " double complex", bic.pass, bic.counterexample);
    }
    return res;
}

SuiteResult suite_homotopy(const std::vector<SetupConfig>& grid) {
    SuiteResult res;
    res.name = "homotopy";
    for (const auto& cfg : grid) {
        bool ok = true;
        std::string why;
        for (int a = 0; a <= cfg.n && ok; ++a)
            for (int b = 0; b <= cfg.d && ok; ++b) {
                if (a == 0 && b == 0) continue;
                auto M = restricted_module(a, b, cfg);
                if (M.rank() == 0) continue;
                // h^2 = 0
                LinMap h1 = derham_h(a, b, cfg);
                LinMap h2 = derham_h(a + 1, b - 1, cfg);
                if (!compose(h2, h1).is_zero()) {
                    ok = false;
                    why = "h^2 != 0 on (" + std::to_string(a) + "," + std::to_string(b) + ")";
                    break;
                }
                // kappa h + h kappa = 1
                LinMap kh = compose(kappa(a + 1, b - 1, cfg), h1);
                LinMap hk = compose(derham_h(a - 1, b + 1, cfg), kappa(a, b, cfg));
                LinMap sum = kh + hk;
                bool ident = true;
                for (int j = 0; j < M.rank() && ident; ++j) {
                    Element e = sum.cols[j];
                    auto it = e.find(j);
                    if (it == e.end() || !(it->second == Poly::constant(cfg.n, Scalar(1))) ||
                        e.size() != 1)
                        ident = false;
                }
                if (!ident) {
                    ok = false;
                    why = "kappa h + h kappa != 1 on (" + std::to_string(a) + "," +
                          std::to_string(b) + ")";
                }
            }
        res.record(cfg_str(cfg) + " homotopy identities", ok, why);
    }
    return res;
}

SuiteResult suite_retract(const std::vector<SetupConfig>& grid, Corruption corrupt) {
    SuiteResult res;
    res.name = "retract";
    for (const auto& cfg : grid) {
        RetractData r = unperturbed_retract(cfg);
        RetractReport unp = verify_retract(r.maps, r.X->cx.mods, r.L->cx.mods);
        std::string unp_fail;
        for (const auto& c : unp.checks)
            if (!c.pass) {
                unp_fail = c.name + " at " + c.counterexample;
                break;
            }
        res.record(cfg_str(cfg) + " unperturbed retract", unp.pass(), unp_fail);

        PerturbedRetract pr = perturb(r, koszul_perturbation(*r.X));
        if (corrupt == Corruption::flipped_perturbation) {
            // present mismatched data: dF carries +vert while the
            // perturbed maps were built against -vert
            for (int k = 0; k <= int(pr.maps.dF.size()) - 1; ++k)
                pr.maps.dF[k] = r.maps.dF[k] + r.X->vert[k];
        }
        RetractReport per = verify_retract(pr.maps, pr.X->cx.mods, pr.L->cx.mods);
        std::string first_fail;
        for (const auto& c : per.checks)
            if (!c.pass) {
                first_fail = c.name + " at " + c.counterexample;
                break;
            }
        res.record(cfg_str(cfg) + " perturbed retract", per.pass(), first_fail);
        if (corrupt != Corruption::none) continue;

        // transferred differential equals the resolution differential
        bool same = true;
        std::string why;
        const LComplex& L = *pr.L;
        for (int k = 1; k <= L.cx.top() && same; ++k)
            if (!(pr.maps.dG[k] == L.cx.diffs[k])) {
                same = false;
                why = "dG_inf differs at degree " + std::to_string(k);
            }
        res.record(cfg_str(cfg) + " dG_inf = resolution differential", same, why);

        // engine inclusion agrees with the closed geometric series
        auto closed = closed_form_i_inf(r);
        bool agree = true;
        for (int k = 0; k <= int(closed.size()) - 1 && agree; ++k)
            agree = closed[k] == pr.maps.i[k];
        res.record(cfg_str(cfg) + " i_inf closed form", agree);

        // zero perturbation returns the input retract
        PerturbedRetract nop = perturb(r, [&] {
            std::vector<LinMap> z(r.maps.dF.size());
            for (std::size_t k = 0; k < z.size(); ++k)
                z[k] = zero_map(r.maps.dF[k].src_rank, k >= 1 ? r.maps.dF[k].tgt_rank : 0);
            return z;
        }());
        bool nop_ok = true;
        for (std::size_t k = 0; k < nop.maps.i.size() && nop_ok; ++k)
            nop_ok = nop.maps.i[k] == r.maps.i[k] && nop.maps.p[k] == r.maps.p[k] &&
                     nop.maps.h[k] == r.maps.h[k];
        res.record(cfg_str(cfg) + " zero perturbation is identity", nop_ok);
    }
    return res;
}

SuiteResult suite_dga(const std::vector<SetupConfig>& grid, Corruption corrupt) {
    SuiteResult res;
    res.name = "dga";
    for (const auto& cfg : grid) {
        XComplex X = build_x_complex(cfg);
        ProductTable xt = x_product_table(X);

        if (corrupt == Corruption::flipped_product_sign) {
            // flip the sign of a product whose Leibniz line is nontrivial
            for (auto& [key, e] : xt.entries) {
                auto [kx, jx, ky, jy] = key;
                int k = kx + ky;
                if (kx < 1 || ky < 1 || k < 1) continue;
                if (elem_is_zero(X.cx.diffs[k].apply(e))) continue;
                e = elem_scale(Scalar(-1), e);
                break;
            }
        }

        LawReport xleib = check_leibniz(X.cx, xt);
        res.record(cfg_str(cfg) + " carrier Leibniz", xleib.pass, xleib.counterexample);
        if (corrupt != Corruption::none) continue;

        LawReport xlaws = check_algebra_laws(X.cx, xt);
        res.record(cfg_str(cfg) + " carrier algebra laws", xlaws.pass, xlaws.counterexample);

        GenLeibnizReport gl = check_generalized_leibniz(cfg);
        res.record(cfg_str(cfg) + " generalized Leibniz witness (" +
                       std::to_string(gl.nonzero_pairs) + " pairs)",
                   gl.pass, gl.counterexample);

        RetractData r = unperturbed_retract(cfg);
        PerturbedRetract pr = perturb(r, koszul_perturbation(*r.X));
        ProductTable gt = transferred_product_table(pr);
        LawReport gleib = check_leibniz(pr.L->cx, gt);
        res.record(cfg_str(cfg) + " transferred Leibniz", gleib.pass, gleib.counterexample);
        LawReport glaws = check_algebra_laws(pr.L->cx, gt);
        res.record(cfg_str(cfg) + " transferred algebra laws", glaws.pass, glaws.counterexample);

        bool symmetric = true;
        for (int i = 1; i < cfg.n; ++i)
            symmetric = symmetric && cfg.w[i] == cfg.w[0] && cfg.e[i] == cfg.e[0];
        if (symmetric) {
            LawReport eq = check_sn_equivariance(pr, gt);
            res.record(cfg_str(cfg) + " S_n equivariance", eq.pass, eq.counterexample);
        }
    }
    return res;
}

SuiteResult suite_golod(const std::vector<SetupConfig>& grid, int max_deg, Corruption corrupt) {
    SuiteResult res;
    res.name = "golod";
    for (const auto& cfg : grid) {
        if (cfg.d < 2) continue;
        KoszulHomology H = koszul_homology(cfg);
        res.record(cfg_str(cfg) + " homology dims match resolution ranks", true);

        if (corrupt == Corruption::scaled_representative) {
            // drop the coefficient of one chosen representative:
            // products stop landing in the ideal
            for (auto& c : H.classes[1])
                if (c.chosen && !c.coeff.is_zero()) {
                    c.coeff = Exp(cfg.n);
                    break;
                }
        }

        // explicit lifts are cycles
        if (corrupt == Corruption::none) {
            TensorComplex T = build_tensor_complex(cfg);
            bool cycles = true;
            std::string why;
            for (int i = 1; i <= cfg.n && cycles; ++i) {
                auto M = restricted_module(i, cfg.d - 1, cfg);
                for (const auto& lab : M.labels) {
                    Element z = lift_cycle(T, lab.sigma, lab.alpha);
                    if (elem_is_zero(T.cx.diffs[i].apply(z))) continue;
                    cycles = false;
                    why = "lift of " + lab.str() + " is not a cycle";
                    break;
                }
            }
            res.record(cfg_str(cfg) + " explicit lifts are cycles", cycles, why);
        }

        MasseyWitness mw = check_golod(H);
        res.record(cfg_str(cfg) + " products of representatives vanish (" +
                       std::to_string(mw.pairs_checked) + " pairs)",
                   mw.trivial, mw.offending_pair);
        if (corrupt != Corruption::none) continue;

        GolodComplex T = golod_resolution(H, max_deg);
        bool d2 = !first_d_squared_failure_mod(T.cx, T.ideal);
        res.record(cfg_str(cfg) + " residue-field complex d^2 = 0 mod I", d2);
        bool minimal = !first_unit_entry(T.cx);
        res.record(cfg_str(cfg) + " residue-field complex minimal", minimal);

        auto series = poincare_coeffs(H.dims, cfg.n, max_deg);
        bool ranks_ok = true;
        std::string why;
        for (int k = 0; k <= max_deg; ++k)
            if (T.cx.rank(k) != series[k]) {
                ranks_ok = false;
                why = "rank T_" + std::to_string(k) + " = " + std::to_string(T.cx.rank(k)) +
                      " vs series " + std::to_string(series[k]);
                break;
            }
        res.record(cfg_str(cfg) + " ranks match series expansion", ranks_ok, why);

        StrandEngine eng(T.cx, &T.ideal);
        StrandBox box = default_box(T.cx, cfg);
        auto bad = eng.first_nonexact(box, 1, max_deg - 1);
        res.record(cfg_str(cfg) + " box-strand acyclic through degree " +
                       std::to_string(max_deg - 1),
                   !bad,
                   bad ? "H_" + std::to_string(bad->second) + " at " + bad->first.str() : "");
        // H_0 is the residue field: one dimension at the origin only
        auto h0bad = eng.first_h0_mismatch(
            box, [&](const Exp& m) { return m.is_zero() ? 1 : 0; });
        res.record(cfg_str(cfg) + " H_0 = k", !h0bad,
                   h0bad ? "H_0 mismatch at " + h0bad->str() : "");
    }
    return res;
}

} // namespace lw
