#include "lw/transfer.hpp"

namespace lw {

namespace {

LinMap compose3(const LinMap& f, const LinMap& g, const LinMap& k) {
    return compose(f, compose(g, k));
}

LinMap identity_map(int rank, std::size_t nvars) {
    LinMap id(rank, rank);
    for (int j = 0; j < rank; ++j) id.cols[j][j] = Poly::constant(nvars, Scalar(1));
    return id;
}

} // namespace

RetractData unperturbed_retract(const SetupConfig& cfg) {
    RetractData r(cfg);
    r.X = std::make_shared<XComplex>(build_x_complex(cfg));
    r.L = std::make_shared<LComplex>(build_l_complex(cfg));
    const XComplex& X = *r.X;
    const LComplex& L = *r.L;
    int top = cfg.n;
    Scalar twist(-1);

    r.maps.dF = X.kap;
    r.maps.h = X.h;
    r.maps.dG.resize(top + 1);
    r.maps.i.resize(top + 1);
    r.maps.p.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
        int gr = L.cx.rank(k);
        int xr = X.cx.rank(k);
        r.maps.dG[k] = zero_map(gr, k >= 1 ? L.cx.rank(k - 1) : 0);

        LinMap i(gr, xr);
        if (k == 0) {
            i.cols[0][X.find(0, BasisLabel{{}, Exp(cfg.n)})] = Poly::constant(cfg.n, Scalar(1));
        } else {
            const KernelSpace& K = L.kernels[k - 1];
            for (int j = 0; j < K.rank(); ++j) {
                Element col;
                for (const auto& [idx, q] : K.basis[j])
                    for (auto& [t, c] : derham_terms(K.ambient.labels[idx], cfg))
                        elem_add(col, X.find(k, t), q * c);
                i.cols[j] = elem_scale(twist, col);
            }
        }
        r.maps.i[k] = std::move(i);

        LinMap p(xr, gr);
        for (int j = 0; j < xr; ++j) {
            const BasisLabel& lab = X.labels[k][j];
            int b = lab.alpha.total();
            if (k == 0) {
                if (b == 0) p.cols[j][0] = Poly::constant(cfg.n, Scalar(1));
                continue;
            }
            if (b != cfg.d - 1) continue;
            // horizontal image lands in the kernel one wedge degree down
            const KernelSpace& K = L.kernels[k - 1];
            Element ambient;
            for (auto& [t, c] : kappa_terms(lab, cfg))
                elem_add(ambient, K.ambient.index.at(t), c);
            if (k == 1) {
                p.cols[j] = elem_scale(twist, ambient);
            } else {
                auto coords = K.solver.solve_element(ambient);
                if (!coords)
                    throw std::logic_error("unperturbed_retract: p image escapes the kernel");
                p.cols[j] = elem_scale(twist, *coords);
            }
        }
        r.maps.p[k] = std::move(p);
    }
    return r;
}

std::vector<LinMap> koszul_perturbation(const XComplex& X, int sign) {
    std::vector<LinMap> delta(X.top() + 1);
    for (int k = 0; k <= X.top(); ++k) delta[k] = scale_map(Scalar(sign), X.vert[k]);
    return delta;
}

PerturbedRetract perturb(const RetractData& r, const std::vector<LinMap>& delta) {
    const int top = int(r.maps.dF.size()) - 1;
    const int bound = r.cfg.n + r.cfg.d;

    // (dF + delta)^2 = 0
    for (int k = 2; k <= top; ++k) {
        LinMap dk = r.maps.dF[k] + delta[k];
        LinMap dk1 = r.maps.dF[k - 1] + delta[k - 1];
        if (!compose(dk1, dk).is_zero())
            throw std::invalid_argument("perturb: delta is not a perturbation");
    }

    PerturbedRetract out(r.cfg);
    out.X = r.X;
    out.L = r.L;

    // A = delta - delta h delta + delta h delta h delta - ... ; each
    // extra factor lowers the symmetric degree, so the sum is finite
    out.A.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
        if (k == 0) {
            out.A[k] = zero_map(r.maps.dF[0].src_rank, 0);
            continue;
        }
        LinMap term = delta[k];
        LinMap acc = term;
        int guard = 0;
        while (!term.is_zero()) {
            if (++guard > bound)
                throw std::logic_error("perturb: Neumann sum did not terminate");
            term = scale_map(Scalar(-1), compose3(delta[k], r.maps.h[k - 1], term));
            acc = acc + term;
        }
        out.A[k] = std::move(acc);
    }

    auto& m = out.maps;
    m.dF.resize(top + 1);
    m.dG.resize(top + 1);
    m.i.resize(top + 1);
    m.p.resize(top + 1);
    m.h.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
        m.dF[k] = r.maps.dF[k] + delta[k];
        m.i[k] = r.maps.i[k];
        if (k >= 1)
            m.i[k] = m.i[k] + scale_map(Scalar(-1),
                                        compose3(r.maps.h[k - 1], out.A[k], r.maps.i[k]));
        m.p[k] = r.maps.p[k];
        if (k + 1 <= top)
            m.p[k] = m.p[k] + scale_map(Scalar(-1),
                                        compose3(r.maps.p[k], out.A[k + 1], r.maps.h[k]));
        m.h[k] = r.maps.h[k];
        if (k + 1 <= top)
            m.h[k] = m.h[k] + scale_map(Scalar(-1),
                                        compose3(r.maps.h[k], out.A[k + 1], r.maps.h[k]));
        m.dG[k] = r.maps.dG[k];
        if (k >= 1) m.dG[k] = m.dG[k] + compose3(r.maps.p[k - 1], out.A[k], r.maps.i[k]);
    }
    return out;
}

namespace {

void check_zero_family(RetractReport& rep, const std::string& name,
                       const std::vector<LinMap>& fam, const std::vector<ModuleSpec>& src_mods) {
    RetractCheck c{name, true, ""};
    for (std::size_t k = 0; k < fam.size() && c.pass; ++k)
        for (int j = 0; j < fam[k].src_rank; ++j)
            if (!elem_is_zero(fam[k].cols[j])) {
                c.pass = false;
                c.counterexample = "degree " + std::to_string(k) + ", basis " +
                                   src_mods[k].names[j];
                break;
            }
    rep.checks.push_back(std::move(c));
}

} // namespace

RetractReport verify_retract(const RetractMaps& m, const std::vector<ModuleSpec>& modsF,
                             const std::vector<ModuleSpec>& modsG) {
    RetractReport rep;
    const int top = int(m.dF.size()) - 1;
    std::size_t nvars = 0;
    for (const auto& mod : modsF)
        for (const auto& mu : mod.ring_mdeg) nvars = std::max(nvars, mu.size());

    auto family = [&](auto&& fn) {
        std::vector<LinMap> fam(top + 1);
        for (int k = 0; k <= top; ++k) fam[k] = fn(k);
        return fam;
    };
    auto minus = [](const LinMap& a, const LinMap& b) {
        return a + scale_map(Scalar(-1), b);
    };

    check_zero_family(rep, "p.i = 1", family([&](int k) {
                          return minus(compose(m.p[k], m.i[k]),
                                       identity_map(modsG[k].rank(), nvars));
                      }),
                      modsG);

    check_zero_family(rep, "1 - i.p = dF.h + h.dF", family([&](int k) {
                          int rk = modsF[k].rank();
                          LinMap lhs = minus(identity_map(rk, nvars), compose(m.i[k], m.p[k]));
                          LinMap rhs = zero_map(rk, rk);
                          if (k + 1 <= top) rhs = rhs + compose(m.dF[k + 1], m.h[k]);
                          if (k >= 1) rhs = rhs + compose(m.h[k - 1], m.dF[k]);
                          return minus(lhs, rhs);
                      }),
                      modsF);

    check_zero_family(rep, "h.i = 0",
                      family([&](int k) { return compose(m.h[k], m.i[k]); }), modsG);

    check_zero_family(rep, "p.h = 0", family([&](int k) {
                          if (k + 1 > top) return zero_map(modsF[k].rank(), 0);
                          return compose(m.p[k + 1], m.h[k]);
                      }),
                      modsF);

    check_zero_family(rep, "h.h = 0", family([&](int k) {
                          if (k + 2 > top) return zero_map(modsF[k].rank(), 0);
                          return compose(m.h[k + 1], m.h[k]);
                      }),
                      modsF);

    check_zero_family(rep, "dF.dF = 0", family([&](int k) {
                          if (k < 2) return zero_map(modsF[k].rank(), 0);
                          return compose(m.dF[k - 1], m.dF[k]);
                      }),
                      modsF);

    check_zero_family(rep, "dG.dG = 0", family([&](int k) {
                          if (k < 2) return zero_map(modsG[k].rank(), 0);
                          return compose(m.dG[k - 1], m.dG[k]);
                      }),
                      modsG);

    check_zero_family(rep, "i chain map", family([&](int k) {
                          if (k < 1) return zero_map(modsG[k].rank(), 0);
                          return minus(compose(m.dF[k], m.i[k]), compose(m.i[k - 1], m.dG[k]));
                      }),
                      modsG);

    check_zero_family(rep, "p chain map", family([&](int k) {
                          if (k < 1) return zero_map(modsF[k].rank(), 0);
                          return minus(compose(m.dG[k], m.p[k]), compose(m.p[k - 1], m.dF[k]));
                      }),
                      modsF);
    return rep;
}

std::vector<LinMap> closed_form_i_inf(const RetractData& r) {
    const SetupConfig& cfg = r.cfg;
    const XComplex& X = *r.X;
    const LComplex& L = *r.L;
    int top = cfg.n;
    Scalar twist(-1);
    std::vector<LinMap> out(top + 1);
    for (int k = 0; k <= top; ++k) {
        LinMap f(L.cx.rank(k), X.cx.rank(k));
        if (k == 0) {
            f.cols[0][X.find(0, BasisLabel{{}, Exp(cfg.n)})] = Poly::constant(cfg.n, Scalar(1));
        } else {
            const KernelSpace& K = L.kernels[k - 1];
            for (int j = 0; j < K.rank(); ++j) {
                // u * (1 - h Kos)^{-1} h on the ambient kernel vector
                Element cur;
                for (const auto& [idx, q] : K.basis[j])
                    for (auto& [t, c] : derham_terms(K.ambient.labels[idx], cfg))
                        elem_add(cur, X.find(k, t), q * c);
                Element acc = cur;
                int guard = 0;
                while (!elem_is_zero(cur)) {
                    if (++guard > cfg.n + cfg.d)
                        throw std::logic_error("closed_form_i_inf: series did not terminate");
                    cur = X.h[k - 1].apply(X.vert[k].apply(cur));
                    elem_add(acc, cur);
                }
                f.cols[j] = elem_scale(twist, acc);
            }
        }
        out[k] = std::move(f);
    }
    return out;
}

} // namespace lw
