#include "lw/complexes.hpp"

#include <algorithm>
#include <functional>

namespace lw {

std::optional<std::pair<int, int>> first_d_squared_failure(const ComplexData& c) {
    for (int k = 2; k <= c.top(); ++k) {
        for (int j = 0; j < c.mods[k].rank(); ++j) {
            Element im = c.diffs[k].cols[j];
            Element im2 = c.diffs[k - 1].apply(im);
            if (!elem_is_zero(im2)) return std::make_pair(k, j);
        }
    }
    return std::nullopt;
}

std::optional<std::tuple<int, int, int>> first_unit_entry(const ComplexData& c) {
    for (int k = 1; k <= c.top(); ++k)
        for (int j = 0; j < c.mods[k].rank(); ++j)
            for (const auto& [i, q] : c.diffs[k].cols[j])
                if (!q.constant_term().is_zero()) return std::make_tuple(k, j, i);
    return std::nullopt;
}

std::optional<std::string> first_inhomogeneous_entry(const ComplexData& c) {
    for (int k = 1; k <= c.top(); ++k) {
        for (int j = 0; j < c.mods[k].rank(); ++j) {
            const Exp& mu_src = c.mods[k].ring_mdeg[j];
            for (const auto& [i, q] : c.diffs[k].cols[j]) {
                const Exp& mu_tgt = c.mods[k - 1].ring_mdeg[i];
                for (const auto& [m, coef] : q.terms()) {
                    if (!(m + mu_tgt == mu_src))
                        return "degree " + std::to_string(k) + " entry (" +
                               c.mods[k - 1].names[i] + " <- " + c.mods[k].names[j] +
                               ") is not multigraded";
                }
            }
        }
    }
    return std::nullopt;
}

WedgeSymModule restricted_module(int a, int b, const SetupConfig& cfg) {
    WedgeSymModule m;
    m.a = a;
    m.b = b;
    if (a < 0 || a > cfg.n || b < 0) return m;

    IndexSet all;
    for (int i = 1; i <= cfg.n; ++i)
        if (cfg.w[i - 1] >= 1) all.push_back(i);

    for (const auto& sigma : subsets_of(all, a)) {
        Exp room = cfg.w;
        for (int s : sigma) room[s - 1] -= 1;
        // alpha <= room with |alpha| = b
        std::vector<Exp> alphas;
        Exp cur(cfg.n);
        std::function<void(int, int)> rec = [&](int pos, int remaining) {
            if (pos == cfg.n) {
                if (remaining == 0) alphas.push_back(cur);
                return;
            }
            int hi = std::min(room[pos], remaining);
            for (int k = 0; k <= hi; ++k) {
                cur[pos] = k;
                rec(pos + 1, remaining - k);
            }
            cur[pos] = 0;
        };
        rec(0, b);
        for (auto& al : alphas) m.labels.push_back(BasisLabel{sigma, std::move(al)});
    }
    std::sort(m.labels.begin(), m.labels.end());
    for (int i = 0; i < int(m.labels.size()); ++i) {
        m.index[m.labels[i]] = i;
        m.spec.push(m.labels[i].str(), cfg.ring_mdeg(m.labels[i].mdeg()));
    }
    return m;
}

std::vector<std::pair<BasisLabel, Poly>> kappa_terms(const BasisLabel& x, const SetupConfig& cfg) {
    std::vector<std::pair<BasisLabel, Poly>> out;
    for (int r : x.sigma) {
        BasisLabel t{set_minus(x.sigma, r), x.alpha};
        t.alpha[r - 1] += 1;
        out.emplace_back(std::move(t), Poly::constant(cfg.n, Scalar(koszul_sign(r, x.sigma))));
    }
    return out;
}

std::vector<std::pair<BasisLabel, Poly>> kos_terms(const BasisLabel& x, const SetupConfig& cfg) {
    std::vector<std::pair<BasisLabel, Poly>> out;
    for (int r : x.sigma) {
        BasisLabel t{set_minus(x.sigma, r), x.alpha};
        Exp mono(cfg.n);
        mono[r - 1] = cfg.e[r - 1];
        out.emplace_back(std::move(t), Poly::monomial(mono, Scalar(koszul_sign(r, x.sigma))));
    }
    return out;
}

std::vector<std::pair<BasisLabel, Poly>> derham_terms(const BasisLabel& x, const SetupConfig& cfg) {
    std::vector<std::pair<BasisLabel, Poly>> out;
    int ab = int(x.sigma.size()) + x.alpha.total();
    if (ab == 0) return out;
    Scalar inv_ab = Scalar(1, ab);
    for (int j = 1; j <= cfg.n; ++j) {
        if (x.alpha[j - 1] == 0) continue;
        auto w = wedge_insert(j, x.sigma);
        if (!w) continue;
        BasisLabel t{w->second, x.alpha};
        t.alpha[j - 1] -= 1;
        Scalar c = Scalar(x.alpha[j - 1]) * Scalar(w->first) * inv_ab;
        out.emplace_back(std::move(t), Poly::constant(cfg.n, c));
    }
    return out;
}

namespace {
LinMap map_between(const WedgeSymModule& src, const WedgeSymModule& tgt,
                   const std::function<std::vector<std::pair<BasisLabel, Poly>>(
                       const BasisLabel&)>& terms) {
    LinMap f(src.rank(), tgt.rank());
    for (int j = 0; j < src.rank(); ++j)
        for (auto& [lab, q] : terms(src.labels[j])) {
            auto it = tgt.index.find(lab);
            if (it == tgt.index.end())
                throw std::logic_error("map target label missing from module");
            elem_add(f.cols[j], it->second, q);
        }
    return f;
}
} // namespace

LinMap kappa(int a, int b, const SetupConfig& cfg) {
    auto src = restricted_module(a, b, cfg);
    auto tgt = restricted_module(a - 1, b + 1, cfg);
    return map_between(src, tgt, [&](const BasisLabel& x) { return kappa_terms(x, cfg); });
}

LinMap kos_tensor(int a, int b, const SetupConfig& cfg) {
    auto src = restricted_module(a, b, cfg);
    auto tgt = restricted_module(a - 1, b, cfg);
    return map_between(src, tgt, [&](const BasisLabel& x) { return kos_terms(x, cfg); });
}

LinMap derham_h(int a, int b, const SetupConfig& cfg) {
    auto src = restricted_module(a, b, cfg);
    auto tgt = restricted_module(a + 1, b - 1, cfg);
    return map_between(src, tgt, [&](const BasisLabel& x) { return derham_terms(x, cfg); });
}

BicomplexData build_bicomplex(const SetupConfig& cfg) {
    BicomplexData B(cfg);
    for (int a = 0; a <= cfg.n; ++a)
        for (int b = 0; b <= cfg.d - 1; ++b) B.mods.emplace(std::make_pair(a, b),
                                                            restricted_module(a, b, cfg));
    for (int a = 0; a <= cfg.n; ++a)
        for (int b = 0; b <= cfg.d - 1; ++b) {
            const auto& src = B.at(a, b);
            if (a >= 1 && b + 1 <= cfg.d - 1)
                B.horiz[{a, b}] = map_between(src, B.at(a - 1, b + 1), [&](const BasisLabel& x) {
                    return kappa_terms(x, cfg);
                });
            if (a >= 1)
                B.vert[{a, b}] = map_between(src, B.at(a - 1, b), [&](const BasisLabel& x) {
                    return kos_terms(x, cfg);
                });
        }
    return B;
}

std::optional<std::string> bicomplex_square_failure(const BicomplexData& B) {
    const auto key = [](int a, int b) { return std::make_pair(a, b); };
    for (const auto& [ab, f] : B.horiz) {
        auto [a, b] = ab;
        auto g = B.horiz.find(key(a - 1, b + 1));
        if (g != B.horiz.end() && !compose(g->second, f).is_zero())
            return "horiz^2 != 0 at (" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    for (const auto& [ab, f] : B.vert) {
        auto [a, b] = ab;
        auto g = B.vert.find(key(a - 1, b));
        if (g != B.vert.end() && !compose(g->second, f).is_zero())
            return "vert^2 != 0 at (" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    for (const auto& [ab, f] : B.horiz) {
        auto [a, b] = ab;
        auto v = B.vert.find(key(a - 1, b + 1));
        auto v0 = B.vert.find(key(a, b));
        if (v == B.vert.end() || v0 == B.vert.end()) continue;
        auto h2 = B.horiz.find(key(a - 1, b));
        if (h2 == B.horiz.end()) continue;
        LinMap lhs = compose(v->second, f);
        LinMap rhs = compose(h2->second, v0->second);
        if (!(lhs + rhs).is_zero())
            return "kappa and Kos(x)1 fail to anticommute at (" + std::to_string(a) + "," +
                   std::to_string(b) + ")";
    }
    return std::nullopt;
}

Element XComplex::embed(int k, const std::vector<std::pair<BasisLabel, Poly>>& terms) const {
    Element out;
    for (const auto& [lab, q] : terms) {
        int i = find(k, lab);
        if (i < 0) throw std::logic_error("XComplex::embed: label not present");
        elem_add(out, i, q);
    }
    return out;
}

XComplex totalize(const BicomplexData& B) {
    XComplex X{B.cfg, {}, {}, {}, {}, {}, {}};
    const SetupConfig& cfg = B.cfg;
    int top = cfg.n;
    X.labels.resize(top + 1);
    X.index.resize(top + 1);
    X.cx.mods.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
        for (int b = 0; b <= cfg.d - 1; ++b) {
            const auto& m = B.at(k, b);
            for (const auto& lab : m.labels) {
                X.index[k][lab] = int(X.labels[k].size());
                X.labels[k].push_back(lab);
                X.cx.mods[k].push(lab.str(), cfg.ring_mdeg(lab.mdeg()));
            }
        }
    }
    X.cx.diffs.resize(top + 1);
    X.kap.resize(top + 1);
    X.vert.resize(top + 1);
    X.h.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
        int rk = X.cx.mods[k].rank();
        int rk1 = k >= 1 ? X.cx.mods[k - 1].rank() : 0;
        LinMap kap(rk, rk1), vert(rk, rk1);
        if (k >= 1) {
            for (int j = 0; j < rk; ++j) {
                const BasisLabel& lab = X.labels[k][j];
                if (lab.alpha.total() + 1 <= cfg.d - 1)
                    for (auto& [t, q] : kappa_terms(lab, cfg))
                        elem_add(kap.cols[j], X.find(k - 1, t), q);
                for (auto& [t, q] : kos_terms(lab, cfg))
                    elem_add(vert.cols[j], X.find(k - 1, t), q);
            }
        }
        X.kap[k] = kap;
        X.vert[k] = vert;
        LinMap d(rk, rk1);
        for (int j = 0; j < rk; ++j) {
            d.cols[j] = kap.cols[j];
            elem_sub(d.cols[j], vert.cols[j]);
        }
        X.cx.diffs[k] = std::move(d);
        // homotopy k -> k+1
        int rkup = k + 1 <= top ? X.cx.mods[k + 1].rank() : 0;
        LinMap h(rk, rkup);
        if (k + 1 <= top)
            for (int j = 0; j < rk; ++j)
                for (auto& [t, q] : derham_terms(X.labels[k][j], cfg))
                    elem_add(h.cols[j], X.find(k + 1, t), q);
        X.h[k] = std::move(h);
    }
    return X;
}

XComplex build_x_complex(const SetupConfig& cfg) { return totalize(build_bicomplex(cfg)); }

KernelSpace kernel_space(int a, const SetupConfig& cfg) {
    KernelSpace K;
    K.ambient = restricted_module(a, cfg.d, cfg);
    if (a == 0) {
        // kappa vanishes on the empty wedge: the kernel is everything
        for (int i = 0; i < K.ambient.rank(); ++i) {
            Element e;
            e[i] = Poly::constant(cfg.n, Scalar(1));
            K.basis.push_back(std::move(e));
            K.basis_mdeg.push_back(K.ambient.labels[i].mdeg());
        }
    } else {
        auto tgt = restricted_module(a - 1, cfg.d + 1, cfg);
        LinMap f = map_between(K.ambient, tgt,
                               [&](const BasisLabel& x) { return kappa_terms(x, cfg); });
        std::vector<Exp> src_mdeg, tgt_mdeg;
        for (const auto& l : K.ambient.labels) src_mdeg.push_back(l.mdeg());
        for (const auto& l : tgt.labels) tgt_mdeg.push_back(l.mdeg());
        K.basis = kernel_by_multidegree(f, src_mdeg, tgt_mdeg);
        for (const auto& v : K.basis) K.basis_mdeg.push_back(src_mdeg[v.begin()->first]);
    }
    K.solver = SolveContext(K.basis, K.ambient.rank());
    return K;
}

MonomialIdeal restricted_power_ideal(const SetupConfig& cfg) {
    std::vector<Exp> gens;
    for (const auto& al : restricted_exponents(cfg)) gens.push_back(cfg.psi_exp(al));
    return MonomialIdeal(std::move(gens));
}

Element LComplex::to_ambient(int k, const Element& coords) const {
    if (k < 1) throw std::invalid_argument("to_ambient: degree must be >= 1");
    const KernelSpace& K = kernels.at(k - 1);
    Element out;
    for (const auto& [j, q] : coords) elem_add(out, elem_scale(q, K.basis[j]));
    return out;
}

LComplex build_l_complex(const SetupConfig& cfg) {
    LComplex L{cfg, {}, {}, restricted_power_ideal(cfg)};
    int top = cfg.n;  // degree a+1 for a = n-1, plus degrees 0 and 1
    L.cx.mods.resize(top + 1);
    L.cx.diffs.resize(top + 1);
    for (int a = 0; a < cfg.n; ++a) L.kernels.push_back(kernel_space(a, cfg));

    // degree 0: R
    L.cx.mods[0].push("1", Exp(cfg.n));
    // degree k = a+1: kernel basis of kappa on (wedge^a (x) S_d)_w
    for (int a = 0; a < cfg.n; ++a) {
        const KernelSpace& K = L.kernels[a];
        for (int j = 0; j < K.rank(); ++j) {
            std::string nm = a == 0 ? K.ambient.labels[j].str()
                                    : ("L" + std::to_string(a) + "#" + std::to_string(j));
            L.cx.mods[a + 1].push(nm, cfg.ring_mdeg(K.basis_mdeg[j]));
        }
    }

    // bottom differential: psi sends f^alpha to its monomial
    {
        LinMap d1(L.cx.mods[1].rank(), 1);
        const KernelSpace& K0 = L.kernels[0];
        for (int j = 0; j < K0.rank(); ++j)
            d1.cols[j][0] = Poly::monomial(cfg.psi_exp(K0.ambient.labels[j].alpha), Scalar(1));
        L.cx.diffs[1] = std::move(d1);
    }

    // higher differentials: Koszul action on kernel bases, re-expressed
    for (int a = 1; a < cfg.n; ++a) {
        const KernelSpace& K = L.kernels[a];
        const KernelSpace& Kprev = L.kernels[a - 1];
        LinMap d(K.rank(), Kprev.rank());
        for (int j = 0; j < K.rank(); ++j) {
            Element image;  // in ambient (a-1, d) labels
            for (const auto& [idx, q] : K.basis[j]) {
                for (auto& [t, c] : kos_terms(K.ambient.labels[idx], cfg)) {
                    auto it = Kprev.ambient.index.find(t);
                    if (it == Kprev.ambient.index.end())
                        throw std::logic_error("build_l_complex: image label missing");
                    elem_add(image, it->second, q * c);
                }
            }
            auto coords = Kprev.solver.solve_element(image);
            if (!coords)
                throw std::logic_error(
                    "build_l_complex: kernel vector maps outside the next kernel");
            d.cols[j] = std::move(*coords);
        }
        L.cx.diffs[a + 1] = std::move(d);
    }
    return L;
}

KoszulComplex koszul_complex(const SetupConfig& cfg) {
    KoszulComplex K{cfg, {}, {}, {}};
    int n = cfg.n;
    K.cx.mods.resize(n + 1);
    K.cx.diffs.resize(n + 1);
    K.labels.resize(n + 1);
    K.index.resize(n + 1);
    IndexSet all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    for (int k = 0; k <= n; ++k) {
        for (const auto& tau : subsets_of(all, k)) {
            K.index[k][tau] = int(K.labels[k].size());
            K.labels[k].push_back(tau);
            Exp mu(n);
            for (int t : tau) mu[t - 1] = 1;
            std::string nm = "e[";
            for (std::size_t i = 0; i < tau.size(); ++i)
                nm += (i ? "," : "") + std::to_string(tau[i]);
            nm += "]";
            K.cx.mods[k].push(nm, mu);
        }
    }
    for (int k = 1; k <= n; ++k) {
        LinMap d(K.cx.mods[k].rank(), K.cx.mods[k - 1].rank());
        for (int j = 0; j < d.src_rank; ++j) {
            const IndexSet& tau = K.labels[k][j];
            for (int t : tau) {
                Exp mono(n);
                mono[t - 1] = 1;
                elem_add(d.cols[j], K.index[k - 1].at(set_minus(tau, t)),
                         Poly::monomial(mono, Scalar(koszul_sign(t, tau))));
            }
        }
        K.cx.diffs[k] = std::move(d);
    }
    return K;
}

} // namespace lw
