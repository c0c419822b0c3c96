#include "lw/dga.hpp"

#include <algorithm>

namespace lw {

SymProduct sym_product(const Exp& alpha, const Exp& beta, const SetupConfig& cfg) {
    if (!leq(alpha, cfg.w) || !leq(beta, cfg.w))
        throw std::invalid_argument("sym_product: inputs must be bounded by w");
    SymProduct out;
    Exp sum = alpha + beta;
    out.clamped = min(sum, cfg.w);
    if (out.clamped.total() >= cfg.d) return out;  // lands in (S_{>=d})_w
    out.coeff = cfg.psi_exp(sum - out.clamped);
    out.zero = false;
    return out;
}

std::optional<std::pair<BasisLabel, Poly>> x_product_labels(const BasisLabel& x,
                                                            const BasisLabel& y,
                                                            const SetupConfig& cfg) {
    for (int i = 1; i <= cfg.n; ++i) {
        if (x.alpha[i - 1] + y.alpha[i - 1] < cfg.w[i - 1]) continue;
        if (std::binary_search(x.sigma.begin(), x.sigma.end(), i) ||
            std::binary_search(y.sigma.begin(), y.sigma.end(), i))
            return std::nullopt;
    }
    auto wedge = wedge_merge(x.sigma, y.sigma);
    if (!wedge) return std::nullopt;
    SymProduct s = sym_product(x.alpha, y.alpha, cfg);
    if (s.zero) return std::nullopt;
    BasisLabel lab{wedge->second, s.clamped};
    return std::make_pair(std::move(lab), Poly::monomial(s.coeff, Scalar(wedge->first)));
}

Element ProductTable::product(int kx, const Element& x, int ky, const Element& y) const {
    Element out;
    for (const auto& [jx, qx] : x)
        for (const auto& [jy, qy] : y) {
            const Element* e = entry(kx, jx, ky, jy);
            if (!e) continue;
            elem_add(out, elem_scale(qx * qy, *e));
        }
    return out;
}

ProductTable x_product_table(const XComplex& X) {
    ProductTable t;
    t.carrier = &X.cx;
    t.unit_degree = 0;
    t.unit_index = X.find(0, BasisLabel{{}, Exp(X.cfg.n)});
    int top = X.top();
    for (int kx = 0; kx <= top; ++kx)
        for (int ky = 0; ky + kx <= top; ++ky)
            for (int jx = 0; jx < X.cx.rank(kx); ++jx)
                for (int jy = 0; jy < X.cx.rank(ky); ++jy) {
                    auto r = x_product_labels(X.labels[kx][jx], X.labels[ky][jy], X.cfg);
                    if (!r) continue;
                    int tgt = X.find(kx + ky, r->first);
                    if (tgt < 0) throw std::logic_error("x_product: target label missing");
                    Element e;
                    e[tgt] = r->second;
                    t.entries[{kx, jx, ky, jy}] = std::move(e);
                }
    return t;
}

Element transferred_product(const PerturbedRetract& pr, int kx, const Element& x, int ky,
                            const Element& y) {
    const XComplex& X = *pr.X;
    int k = kx + ky;
    if (k > X.top()) return {};
    Element fx = pr.maps.i[kx].apply(x);
    Element fy = pr.maps.i[ky].apply(y);
    Element prod;
    for (const auto& [jx, qx] : fx)
        for (const auto& [jy, qy] : fy) {
            auto r = x_product_labels(X.labels[kx][jx], X.labels[ky][jy], X.cfg);
            if (!r) continue;
            elem_add(prod, X.find(k, r->first), qx * qy * r->second);
        }
    return pr.maps.p[k].apply(prod);
}

ProductTable transferred_product_table(const PerturbedRetract& pr) {
    ProductTable t;
    t.carrier = &pr.L->cx;
    t.unit_degree = 0;
    t.unit_index = 0;
    const ComplexData& G = pr.L->cx;
    int top = G.top();
    for (int kx = 0; kx <= top; ++kx)
        for (int ky = 0; ky + kx <= top; ++ky)
            for (int jx = 0; jx < G.rank(kx); ++jx)
                for (int jy = 0; jy < G.rank(ky); ++jy) {
                    Element x, y;
                    x[jx] = Poly::constant(pr.cfg.n, Scalar(1));
                    y[jy] = Poly::constant(pr.cfg.n, Scalar(1));
                    Element e = transferred_product(pr, kx, x, ky, y);
                    if (!elem_is_zero(e)) t.entries[{kx, jx, ky, jy}] = std::move(e);
                }
    return t;
}

namespace {
std::size_t nvars_of(const ComplexData& c) {
    for (const auto& mod : c.mods)
        for (const auto& mu : mod.ring_mdeg) return mu.size();
    return 0;
}
} // namespace

LawReport check_leibniz(const ComplexData& c, const ProductTable& prod) {
    LawReport rep;
    int top = c.top();
    std::size_t nv = nvars_of(c);
    for (int kx = 0; kx <= top && rep.pass; ++kx)
        for (int ky = 0; kx + ky <= top && rep.pass; ++ky)
            for (int jx = 0; jx < c.rank(kx) && rep.pass; ++jx)
                for (int jy = 0; jy < c.rank(ky); ++jy) {
                    ++rep.pairs_checked;
                    int k = kx + ky;
                    Element x, y;
                    x[jx] = Poly::constant(nv, Scalar(1));
                    y[jy] = Poly::constant(nv, Scalar(1));
                    Element lhs;
                    {
                        Element xy = prod.product(kx, x, ky, y);
                        if (k >= 1) lhs = c.diffs[k].apply(xy);
                    }
                    Element rhs;
                    if (kx >= 1) rhs = prod.product(kx - 1, c.diffs[kx].cols[jx], ky, y);
                    if (ky >= 1) {
                        Element term = prod.product(kx, x, ky - 1, c.diffs[ky].cols[jy]);
                        if (kx % 2)
                            elem_sub(rhs, term);
                        else
                            elem_add(rhs, term);
                    }
                    Element diff = lhs;
                    elem_sub(diff, rhs);
                    if (!elem_is_zero(diff)) {
                        rep.fail("Leibniz fails for " + c.mods[kx].names[jx] + " * " +
                                 c.mods[ky].names[jy]);
                        break;
                    }
                }
    return rep;
}

LawReport check_algebra_laws(const ComplexData& c, const ProductTable& prod) {
    LawReport rep;
    int top = c.top();
    std::size_t nv = nvars_of(c);

    // unit law
    Element unit;
    unit[prod.unit_index] = Poly::constant(nv, Scalar(1));
    for (int k = 0; k <= top && rep.pass; ++k)
        for (int j = 0; j < c.rank(k); ++j) {
            Element x;
            x[j] = Poly::constant(nv, Scalar(1));
            if (prod.product(prod.unit_degree, unit, k, x) != x ||
                prod.product(k, x, prod.unit_degree, unit) != x) {
                rep.fail("unit law fails for " + c.mods[k].names[j]);
                break;
            }
        }

    // graded commutativity and odd squares
    for (int kx = 0; kx <= top && rep.pass; ++kx)
        for (int ky = 0; kx + ky <= top && rep.pass; ++ky)
            for (int jx = 0; jx < c.rank(kx) && rep.pass; ++jx)
                for (int jy = 0; jy < c.rank(ky); ++jy) {
                    ++rep.pairs_checked;
                    Element x, y;
                    x[jx] = Poly::constant(nv, Scalar(1));
                    y[jy] = Poly::constant(nv, Scalar(1));
                    Element xy = prod.product(kx, x, ky, y);
                    Element yx = prod.product(ky, y, kx, x);
                    if (kx * ky % 2) {
                        Element sum = xy;
                        elem_add(sum, yx);
                        if (!elem_is_zero(sum)) {
                            rep.fail("graded commutativity fails for " + c.mods[kx].names[jx] +
                                     " * " + c.mods[ky].names[jy]);
                            break;
                        }
                    } else {
                        if (xy != yx) {
                            rep.fail("graded commutativity fails for " + c.mods[kx].names[jx] +
                                     " * " + c.mods[ky].names[jy]);
                            break;
                        }
                    }
                    if (kx % 2 && kx == ky && jx == jy && !elem_is_zero(xy)) {
                        rep.fail("odd square nonzero for " + c.mods[kx].names[jx]);
                        break;
                    }
                }

    // associativity over basis triples, using bilinearity
    for (int kx = 0; kx <= top && rep.pass; ++kx)
        for (int ky = 0; kx + ky <= top && rep.pass; ++ky)
            for (int kz = 0; kx + ky + kz <= top && rep.pass; ++kz)
                for (int jx = 0; jx < c.rank(kx) && rep.pass; ++jx)
                    for (int jy = 0; jy < c.rank(ky) && rep.pass; ++jy)
                        for (int jz = 0; jz < c.rank(kz); ++jz) {
                            Element x, y, z;
                            x[jx] = Poly::constant(nv, Scalar(1));
                            y[jy] = Poly::constant(nv, Scalar(1));
                            z[jz] = Poly::constant(nv, Scalar(1));
                            Element l = prod.product(kx + ky, prod.product(kx, x, ky, y), kz, z);
                            Element r = prod.product(kx, x, ky + kz, prod.product(ky, y, kz, z));
                            if (l != r) {
                                rep.fail("associativity fails for " + c.mods[kx].names[jx] +
                                         " * " + c.mods[ky].names[jy] + " * " +
                                         c.mods[kz].names[jz]);
                                break;
                            }
                        }
    return rep;
}

namespace {
Element label_product_elem(const XComplex& X, const std::vector<std::pair<BasisLabel, Poly>>& xs,
                           const std::vector<std::pair<BasisLabel, Poly>>& ys) {
    Element out;
    for (const auto& [lx, qx] : xs)
        for (const auto& [ly, qy] : ys) {
            auto r = x_product_labels(lx, ly, X.cfg);
            if (!r) continue;
            int deg = int(r->first.sigma.size());
            int idx = X.find(deg, r->first);
            if (idx < 0) throw std::logic_error("gen-Leibniz: product label missing");
            elem_add(out, idx, qx * qy * r->second);
        }
    return out;
}
} // namespace

GenLeibnizReport check_generalized_leibniz(const SetupConfig& cfg) {
    GenLeibnizReport rep;
    XComplex X = build_x_complex(cfg);
    using Terms = std::vector<std::pair<BasisLabel, Poly>>;

    for (int kx = 0; kx <= X.top() && rep.pass; ++kx)
        for (int ky = 0; ky <= X.top() && rep.pass; ++ky)
            for (int jx = 0; jx < X.cx.rank(kx) && rep.pass; ++jx)
                for (int jy = 0; jy < X.cx.rank(ky); ++jy) {
                    const BasisLabel& x = X.labels[kx][jx];
                    const BasisLabel& y = X.labels[ky][jy];
                    auto xy = x_product_labels(x, y, cfg);
                    if (!xy) {
                        ++rep.vacuous_pairs;
                        continue;
                    }
                    ++rep.nonzero_pairs;

                    int r = int(x.sigma.size()), a = x.alpha.total();
                    int s = int(y.sigma.size()), b = y.alpha.total();

                    IndexSet T;
                    for (int i = 1; i <= cfg.n; ++i)
                        if (x.alpha[i - 1] + y.alpha[i - 1] > cfg.w[i - 1]) T.push_back(i);

                    // overflow coordinates weight their truncation pair
                    // by w_i/(alpha_i+beta_i); the untruncated pair gets
                    // the complementary weight
                    Scalar lead(1);
                    std::map<int, Scalar> weight;
                    for (int i : T) {
                        Scalar c(cfg.w[i - 1], x.alpha[i - 1] + y.alpha[i - 1]);
                        weight[i] = c;
                        lead -= c;
                    }

                    // (r+a) h(x) * [ lead * y + sum weighted truncations of y ]
                    Terms hx = derham_terms(x, cfg);
                    for (auto& [l, q] : hx) q = Scalar(r + a) * q;
                    Terms ybundle;
                    if (!lead.is_zero())
                        ybundle.emplace_back(y, Poly::constant(cfg.n, lead));
                    for (int i : T) {
                        int drop = y.alpha[i - 1] - (cfg.w[i - 1] - x.alpha[i - 1]);
                        BasisLabel yt = y;
                        yt.alpha[i - 1] -= drop;
                        Exp mono(cfg.n);
                        mono[i - 1] = cfg.e[i - 1] * drop;
                        ybundle.emplace_back(std::move(yt), Poly::monomial(mono, weight[i]));
                    }
                    Element lhs = label_product_elem(X, hx, ybundle);

                    // (-1)^r (s+b) [ lead * x + weighted truncations of x ] * h(y)
                    Terms hy = derham_terms(y, cfg);
                    Scalar sb = Scalar(kx % 2 ? -(s + b) : (s + b));
                    for (auto& [l, q] : hy) q = sb * q;
                    Terms xbundle;
                    if (!lead.is_zero())
                        xbundle.emplace_back(x, Poly::constant(cfg.n, lead));
                    for (int i : T) {
                        int drop = x.alpha[i - 1] - (cfg.w[i - 1] - y.alpha[i - 1]);
                        BasisLabel xt = x;
                        xt.alpha[i - 1] -= drop;
                        Exp mono(cfg.n);
                        mono[i - 1] = cfg.e[i - 1] * drop;
                        xbundle.emplace_back(std::move(xt), Poly::monomial(mono, weight[i]));
                    }
                    elem_add(lhs, label_product_elem(X, xbundle, hy));

                    // (r + s + |clamped product|) h(x*y)
                    Element rhs;
                    int mdeg_prod = xy->first.alpha.total();
                    Terms hxy = derham_terms(xy->first, cfg);
                    for (auto& [l, q] : hxy) {
                        int idx = X.find(kx + ky + 1, l);
                        elem_add(rhs, idx, Scalar(r + s + mdeg_prod) * (q * xy->second));
                    }

                    Element diff = lhs;
                    elem_sub(diff, rhs);
                    if (!elem_is_zero(diff)) {
                        rep.pass = false;
                        rep.counterexample = "witness identity fails for " + x.str() + " * " +
                                             y.str();
                        break;
                    }
                }
    return rep;
}

LawReport check_homotopy_annihilates_products(const PerturbedRetract& pr) {
    LawReport rep;
    const SetupConfig& cfg = pr.cfg;
    const XComplex& X = *pr.X;
    const ComplexData& G = pr.L->cx;
    for (int kx = 0; kx <= G.top() && rep.pass; ++kx)
        for (int ky = 0; kx + ky <= G.top() && rep.pass; ++ky)
            for (int jx = 0; jx < G.rank(kx) && rep.pass; ++jx)
                for (int jy = 0; jy < G.rank(ky); ++jy) {
                    ++rep.pairs_checked;
                    Element x, y;
                    x[jx] = Poly::constant(cfg.n, Scalar(1));
                    y[jy] = Poly::constant(cfg.n, Scalar(1));
                    Element fx = pr.maps.i[kx].apply(x);
                    Element fy = pr.maps.i[ky].apply(y);
                    Element prod;
                    for (const auto& [ix, qx] : fx)
                        for (const auto& [iy, qy] : fy) {
                            auto t = x_product_labels(X.labels[kx][ix], X.labels[ky][iy], cfg);
                            if (!t) continue;
                            elem_add(prod, X.find(kx + ky, t->first), qx * qy * t->second);
                        }
                    int k = kx + ky;
                    Element lhs;
                    if (k + 1 <= X.top())
                        lhs = pr.maps.dF[k + 1].apply(pr.maps.h[k].apply(prod));
                    if (k >= 1)
                        elem_add(lhs, pr.maps.h[k - 1].apply(pr.maps.dF[k].apply(prod)));
                    if (!elem_is_zero(lhs)) {
                        rep.fail("at " + G.mods[kx].names[jx] + " * " + G.mods[ky].names[jy]);
                        break;
                    }
                }
    return rep;
}

Element permute_element(const XComplex& X, int degree, const Element& x,
                        const std::vector<int>& pi) {
    Element out;
    for (const auto& [j, q] : x) {
        const BasisLabel& lab = X.labels[degree][j];
        IndexSet image;
        for (int s : lab.sigma) image.push_back(pi[s - 1]);
        int sign = 1;
        for (std::size_t ii = 0; ii < image.size(); ++ii)
            for (std::size_t jj = ii + 1; jj < image.size(); ++jj)
                if (image[ii] > image[jj]) sign = -sign;
        std::sort(image.begin(), image.end());
        Exp alpha(X.cfg.n);
        for (int i = 1; i <= X.cfg.n; ++i) alpha[pi[i - 1] - 1] = lab.alpha[i - 1];
        // permute the polynomial coefficient's variables as well
        Poly qp;
        for (const auto& [m, c] : q.terms()) {
            Exp mm(X.cfg.n);
            for (int i = 1; i <= X.cfg.n; ++i) mm[pi[i - 1] - 1] = m[i - 1];
            qp.add_term(mm, c);
        }
        elem_add(out, X.find(degree, BasisLabel{image, alpha}), Scalar(sign) * qp);
    }
    return out;
}

LawReport check_sn_equivariance(const PerturbedRetract& pr, const ProductTable& gprod) {
    LawReport rep;
    const SetupConfig& cfg = pr.cfg;
    const LComplex& L = *pr.L;

    for (int i = 1; i < cfg.n; ++i)
        if (cfg.w[i] != cfg.w[0] || cfg.e[i] != cfg.e[0]) {
            rep.fail("configuration is not symmetric");
            return rep;
        }

    std::vector<int> pi(cfg.n);
    for (int i = 0; i < cfg.n; ++i) pi[i] = i + 1;

    auto amb = [&](int k, const Element& coords) -> Element {
        if (k == 0) return coords;  // R coordinate, permutation-invariant
        return L.to_ambient(k, coords);
    };
    // re-express a permuted ambient kernel element in resolution coords
    auto to_coords = [&](int k, const Element& ambient) -> Element {
        if (k == 0) return ambient;
        auto c = L.kernels[k - 1].solver.solve_element(ambient);
        if (!c) throw std::logic_error("sn_equivariance: permuted element escapes kernel");
        return *c;
    };
    // ambient permutation on (wedge^a (x) S_d) labels reuses the label action
    auto permute_amb = [&](int k, const Element& x) -> Element {
        if (k == 0) {
            Element out;
            for (const auto& [j, q] : x) {
                Poly qp;
                for (const auto& [m, c] : q.terms()) {
                    Exp mm(cfg.n);
                    for (int i = 1; i <= cfg.n; ++i) mm[pi[i - 1] - 1] = m[i - 1];
                    qp.add_term(mm, c);
                }
                elem_add(out, j, qp);
            }
            return out;
        }
        const WedgeSymModule& M = L.kernels[k - 1].ambient;
        Element out;
        for (const auto& [j, q] : x) {
            const BasisLabel& lab = M.labels[j];
            IndexSet image;
            for (int s : lab.sigma) image.push_back(pi[s - 1]);
            int sign = 1;
            for (std::size_t ii = 0; ii < image.size(); ++ii)
                for (std::size_t jj = ii + 1; jj < image.size(); ++jj)
                    if (image[ii] > image[jj]) sign = -sign;
            std::sort(image.begin(), image.end());
            Exp alpha(cfg.n);
            for (int i = 1; i <= cfg.n; ++i) alpha[pi[i - 1] - 1] = lab.alpha[i - 1];
            Poly qp;
            for (const auto& [m, c] : q.terms()) {
                Exp mm(cfg.n);
                for (int i = 1; i <= cfg.n; ++i) mm[pi[i - 1] - 1] = m[i - 1];
                qp.add_term(mm, c);
            }
            elem_add(out, M.index.at(BasisLabel{image, alpha}), Scalar(sign) * qp);
        }
        return out;
    };

    const ComplexData& G = L.cx;
    std::sort(pi.begin(), pi.end());
    do {
        for (int kx = 0; kx <= G.top() && rep.pass; ++kx)
            for (int ky = 0; kx + ky <= G.top() && rep.pass; ++ky)
                for (int jx = 0; jx < G.rank(kx) && rep.pass; ++jx)
                    for (int jy = 0; jy < G.rank(ky); ++jy) {
                        ++rep.pairs_checked;
                        Element x, y;
                        x[jx] = Poly::constant(cfg.n, Scalar(1));
                        y[jy] = Poly::constant(cfg.n, Scalar(1));
                        Element px = to_coords(kx, permute_amb(kx, amb(kx, x)));
                        Element py = to_coords(ky, permute_amb(ky, amb(ky, y)));
                        Element lhs = amb(kx + ky, gprod.product(kx, px, ky, py));
                        Element rhs =
                            permute_amb(kx + ky, amb(kx + ky, gprod.product(kx, x, ky, y)));
                        Element diff = lhs;
                        elem_sub(diff, rhs);
                        if (!elem_is_zero(diff)) {
                            rep.fail("equivariance fails for " + G.mods[kx].names[jx] + " * " +
                                     G.mods[ky].names[jy]);
                            break;
                        }
                    }
    } while (std::next_permutation(pi.begin(), pi.end()) && rep.pass);
    return rep;
}

} // namespace lw
