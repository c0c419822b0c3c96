#include "lw/oracle.hpp"

namespace lw {

StrandBox default_box(const ComplexData& c, const SetupConfig& cfg) {
    Exp upper(cfg.n);
    for (const auto& mod : c.mods)
        for (const auto& mu : mod.ring_mdeg) upper = max(upper, mu);
    for (int i = 0; i < cfg.n; ++i) upper[i] += cfg.d * cfg.e[i];
    return StrandBox{upper};
}

StrandEngine::StrandEngine(const ComplexData& c, const MonomialIdeal* quotient)
    : quotient_(quotient) {
    if (auto bad = first_inhomogeneous_entry(c))
        throw std::invalid_argument("strand engine: " + *bad);
    int top = c.top();
    active_mdeg_.resize(top + 1);
    entries_.resize(top + 1);
    for (int k = 0; k <= top; ++k) active_mdeg_[k] = c.mods[k].ring_mdeg;
    for (int k = 1; k <= top; ++k)
        for (int j = 0; j < c.mods[k].rank(); ++j)
            for (const auto& [i, q] : c.diffs[k].cols[j]) {
                auto [mono, coef] = q.single_term();
                entries_[k].push_back(Entry{j, i, coef});
            }
    // pattern dedup bound: beyond the label degrees nothing changes in
    // the free case
    std::size_t n = 0;
    for (const auto& mods : active_mdeg_)
        for (const auto& mu : mods) n = std::max(n, mu.size());
    clamp_bound_ = Exp(n);
    for (const auto& mods : active_mdeg_)
        for (const auto& mu : mods) clamp_bound_ = max(clamp_bound_, mu);
}

std::vector<int> StrandEngine::compute_at(const Exp& m) const {
    int top = this->top();
    std::vector<std::vector<int>> pos(top + 1);  // label -> fiber column or -1
    std::vector<int> dims(top + 1, 0);
    for (int k = 0; k <= top; ++k) {
        pos[k].assign(active_mdeg_[k].size(), -1);
        for (std::size_t j = 0; j < active_mdeg_[k].size(); ++j) {
            const Exp& mu = active_mdeg_[k][j];
            if (!leq(mu, m)) continue;
            if (quotient_ && quotient_->contains(m - mu)) continue;
            pos[k][j] = dims[k]++;
        }
    }
    std::vector<int> rank(top + 2, 0);
    for (int k = 1; k <= top; ++k) {
        if (dims[k] == 0 || dims[k - 1] == 0) continue;
        DenseMatrix fiber(dims[k - 1], dims[k]);
        for (const auto& e : entries_[k]) {
            int cj = pos[k][e.src], ri = pos[k - 1][e.tgt];
            if (cj >= 0 && ri >= 0) fiber.at(ri, cj) += e.c;
        }
        rank[k] = rank_of(std::move(fiber));
    }
    std::vector<int> h(top + 1, 0);
    for (int k = 0; k <= top; ++k) h[k] = dims[k] - rank[k] - rank[k + 1];
    return h;
}

std::vector<int> StrandEngine::homology_at(const Exp& m) const {
    if (quotient_) return compute_at(m);
    Exp key = min(m, clamp_bound_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    auto h = compute_at(key);
    memo_.emplace(std::move(key), h);
    return h;
}

namespace {
template <class F>
void for_each_in_box(const Exp& upper, F&& fn) {
    Exp m(upper.size());
    while (true) {
        fn(const_cast<const Exp&>(m));
        std::size_t i = 0;
        for (; i < m.size(); ++i) {
            if (m[i] < upper[i]) {
                ++m[i];
                break;
            }
            m[i] = 0;
        }
        if (i == m.size()) break;
    }
}
} // namespace

std::vector<long long> StrandEngine::total_homology(const StrandBox& box) const {
    std::vector<long long> t(top() + 1, 0);
    for_each_in_box(box.upper, [&](const Exp& m) {
        auto h = homology_at(m);
        for (int k = 0; k <= top(); ++k) t[k] += h[k];
    });
    return t;
}

std::optional<std::pair<Exp, int>> StrandEngine::first_nonexact(const StrandBox& box,
                                                                int lo_degree,
                                                                int hi_degree) const {
    std::optional<std::pair<Exp, int>> found;
    for_each_in_box(box.upper, [&](const Exp& m) {
        if (found) return;
        auto h = homology_at(m);
        for (int k = lo_degree; k <= std::min(hi_degree, top()); ++k)
            if (h[k] != 0) {
                found = std::make_pair(m, k);
                return;
            }
    });
    return found;
}

std::optional<Exp> StrandEngine::first_h0_mismatch(
    const StrandBox& box, const std::function<int(const Exp&)>& expected) const {
    std::optional<Exp> found;
    for_each_in_box(box.upper, [&](const Exp& m) {
        if (found) return;
        if (homology_at(m)[0] != expected(m)) found = m;
    });
    return found;
}

std::vector<int> strand_homology(const ComplexData& c, const Exp& m, const MonomialIdeal* I) {
    return StrandEngine(c, I).homology_at(m);
}

ResolutionReport verify_resolution(const ComplexData& c, const SetupConfig& cfg,
                                   const MonomialIdeal& I, std::optional<StrandBox> box) {
    ResolutionReport rep;
    rep.box = box ? *box : default_box(c, cfg);
    rep.ranks = c.ranks();

    if (auto bad = first_d_squared_failure(c)) {
        rep.counterexample = "d^2 != 0 at degree " + std::to_string(bad->first) + ", column " +
                             std::to_string(bad->second);
        return rep;
    }
    rep.d2_ok = true;

    if (auto bad = first_unit_entry(c)) {
        rep.counterexample = "unit entry in differential at degree " +
                             std::to_string(std::get<0>(*bad));
        return rep;
    }
    rep.minimal = true;

    StrandEngine eng(c);
    if (auto bad = eng.first_nonexact(rep.box, 1, c.top())) {
        rep.counterexample = "nonzero strand homology H_" + std::to_string(bad->second) +
                             " at m = " + bad->first.str();
        return rep;
    }
    rep.exact = true;

    auto mismatch =
        eng.first_h0_mismatch(rep.box, [&](const Exp& m) { return I.contains(m) ? 0 : 1; });
    rep.h0_ok = !mismatch;
    if (mismatch) rep.counterexample = "H_0 strand mismatch at m = " + mismatch->str();
    return rep;
}

BettiTable betti_table(const ComplexData& c) {
    BettiTable t;
    t.ranks = c.ranks();
    for (int k = 0; k <= c.top(); ++k)
        for (const auto& mu : c.mods[k].ring_mdeg) t.graded[{k, mu}] += 1;
    return t;
}

} // namespace lw
