#include "lw/module.hpp"

#include <algorithm>

namespace lw {

std::string BasisLabel::str() const {
    std::string s = "f[";
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(sigma[i]);
    }
    s += "]*m[";
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(alpha[i]);
    }
    return s + "]";
}

void elem_add(Element& a, int idx, const Poly& q) {
    if (q.is_zero()) return;
    auto [it, fresh] = a.emplace(idx, q);
    if (!fresh) {
        it->second += q;
        if (it->second.is_zero()) a.erase(it);
    }
}

void elem_add(Element& a, const Element& b) {
    for (const auto& [i, q] : b) elem_add(a, i, q);
}

void elem_sub(Element& a, const Element& b) {
    for (const auto& [i, q] : b) elem_add(a, i, Scalar(-1) * q);
}

Element elem_scale(const Poly& q, const Element& x) {
    Element r;
    for (const auto& [i, c] : x) elem_add(r, i, q * c);
    return r;
}

Element elem_scale(const Scalar& c, const Element& x) {
    Element r;
    for (const auto& [i, q] : x) elem_add(r, i, c * q);
    return r;
}

bool elem_is_zero(const Element& x) { return x.empty(); }

std::string elem_str(const Element& x, const ModuleSpec& mod) {
    if (x.empty()) return "0";
    std::string out;
    for (const auto& [i, q] : x) {
        if (!out.empty()) out += " + ";
        out += "(" + q.str() + ")*" + mod.names.at(i);
    }
    return out;
}

LinMap zero_map(int src, int tgt) { return LinMap(src, tgt); }

LinMap scale_map(const Scalar& c, const LinMap& f) {
    LinMap r(f.src_rank, f.tgt_rank);
    for (int j = 0; j < f.src_rank; ++j) r.cols[j] = elem_scale(c, f.cols[j]);
    return r;
}

std::vector<int> rref(DenseMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (!m.at(i, c).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
        Scalar inv = m.at(r, c).inv();
        for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank_of(DenseMatrix m) { return int(rref(m).size()); }

std::vector<std::vector<Scalar>> kernel_basis(DenseMatrix m) {
    int n = m.cols;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> out;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(n, Scalar(0));
        v[f] = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(int(r), f);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Element> kernel_by_multidegree(const LinMap& f, const std::vector<Exp>& src_mdeg,
                                           const std::vector<Exp>& tgt_mdeg) {
    // group source labels by formal multidegree
    std::map<Exp, std::vector<int>> fibers;
    for (int j = 0; j < f.src_rank; ++j) fibers[src_mdeg[j]].push_back(j);

    std::vector<Element> out;
    for (const auto& [mu, src_idx] : fibers) {
        std::map<int, int> tgt_pos;
        for (const auto& j : src_idx) {
            for (const auto& [i, q] : f.cols[j]) {
                if (q.term_count() != 1 || !q.single_term().first.is_zero())
                    throw std::invalid_argument("kernel_by_multidegree: non-scalar coefficient");
                if (!(tgt_mdeg[i] == mu))
                    throw std::invalid_argument("kernel_by_multidegree: map mixes multidegrees");
                tgt_pos.emplace(i, 0);
            }
        }
        int ti = 0;
        for (auto& [i, pos] : tgt_pos) pos = ti++;

        DenseMatrix m(int(tgt_pos.size()), int(src_idx.size()));
        for (std::size_t c = 0; c < src_idx.size(); ++c)
            for (const auto& [i, q] : f.cols[src_idx[c]])
                m.at(tgt_pos[i], int(c)) = q.single_term().second;

        std::size_t nvars = mu.size();
        for (auto& v : kernel_basis(std::move(m))) {
            Element e;
            for (std::size_t c = 0; c < src_idx.size(); ++c)
                if (!v[c].is_zero()) e[src_idx[c]] = Poly::constant(nvars, v[c]);
            out.push_back(std::move(e));
        }
    }
    return out;
}

SolveContext::SolveContext(const std::vector<Element>& gens, int ambient_rank)
    : k_(int(gens.size())), n_(ambient_rank) {
    red_ = DenseMatrix(k_, n_);
    for (int r = 0; r < k_; ++r)
        for (const auto& [i, q] : gens[r]) {
            auto [m, c] = q.single_term();
            if (!m.is_zero()) throw std::invalid_argument("SolveContext: non-scalar generator");
            red_.at(r, i) = c;
        }
    comb_.assign(k_, std::vector<Scalar>(k_, Scalar(0)));
    for (int r = 0; r < k_; ++r) comb_[r][r] = Scalar(1);

    // Gauss-Jordan on the generator rows, mirroring row operations into
    // comb_ so each echelon row is a known combination of generators.
    int r = 0;
    for (int c = 0; c < n_ && r < k_; ++c) {
        int pr = -1;
        for (int i = r; i < k_; ++i)
            if (!red_.at(i, c).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r) {
            for (int j = 0; j < n_; ++j) std::swap(red_.at(pr, j), red_.at(r, j));
            std::swap(comb_[pr], comb_[r]);
        }
        Scalar inv = red_.at(r, c).inv();
        for (int j = 0; j < n_; ++j) red_.at(r, j) *= inv;
        for (auto& x : comb_[r]) x *= inv;
        for (int i = 0; i < k_; ++i) {
            if (i == r || red_.at(i, c).is_zero()) continue;
            Scalar f = red_.at(i, c);
            for (int j = 0; j < n_; ++j) red_.at(i, j) -= f * red_.at(r, j);
            for (int j = 0; j < k_; ++j) comb_[i][j] -= f * comb_[r][j];
        }
        pivot_col_.push_back(c);
        ++r;
    }
}

std::optional<std::vector<Scalar>> SolveContext::solve(const std::vector<Scalar>& target) const {
    std::vector<Scalar> residual = target;
    std::vector<Scalar> coords(k_, Scalar(0));
    for (std::size_t r = 0; r < pivot_col_.size(); ++r) {
        Scalar c = residual[pivot_col_[r]];
        if (c.is_zero()) continue;
        for (int j = 0; j < n_; ++j) residual[j] -= c * red_.at(int(r), j);
        for (int j = 0; j < k_; ++j) coords[j] += c * comb_[r][j];
    }
    for (const auto& x : residual)
        if (!x.is_zero()) return std::nullopt;
    return coords;
}

std::optional<Element> SolveContext::solve_element(const Element& target) const {
    // split by monomial; each monomial slice must lie in the span
    std::map<Exp, std::vector<Scalar>> slices;
    for (const auto& [i, q] : target)
        for (const auto& [m, c] : q.terms()) {
            auto [it, fresh] = slices.emplace(m, std::vector<Scalar>(n_, Scalar(0)));
            it->second[i] = c;
        }
    Element out;
    for (const auto& [m, vec] : slices) {
        auto coords = solve(vec);
        if (!coords) return std::nullopt;
        for (int j = 0; j < k_; ++j)
            if (!(*coords)[j].is_zero()) elem_add(out, j, Poly::monomial(m, (*coords)[j]));
    }
    return out;
}

} // namespace lw
