#include "lw/combinat.hpp"

#include <algorithm>
#include <functional>

namespace lw {

int koszul_sign(int r, const IndexSet& sigma) {
    auto it = std::find(sigma.begin(), sigma.end(), r);
    if (it == sigma.end()) throw std::invalid_argument("koszul_sign: r not in sigma");
    return (it - sigma.begin()) % 2 == 0 ? 1 : -1;
}

bool is_subset(const IndexSet& tau, const IndexSet& sigma) {
    return std::includes(sigma.begin(), sigma.end(), tau.begin(), tau.end());
}

IndexSet set_minus(const IndexSet& sigma, const IndexSet& tau) {
    IndexSet out;
    std::set_difference(sigma.begin(), sigma.end(), tau.begin(), tau.end(),
                        std::back_inserter(out));
    return out;
}

IndexSet set_minus(const IndexSet& sigma, int r) { return set_minus(sigma, IndexSet{r}); }

namespace {
// parity of the number of cross inversions between two sorted blocks
int block_sign(const IndexSet& first, const IndexSet& second) {
    long inv = 0;
    for (int a : first)
        for (int b : second)
            if (a > b) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}
} // namespace

int shuffle_sign(const IndexSet& tau, const IndexSet& sigma) {
    if (!is_subset(tau, sigma)) throw std::invalid_argument("shuffle_sign: tau not in sigma");
    return block_sign(tau, set_minus(sigma, tau));
}

int shuffle_sign_alt(const IndexSet& tau, const IndexSet& sigma) {
    if (!is_subset(tau, sigma)) throw std::invalid_argument("shuffle_sign: tau not in sigma");
    return block_sign(set_minus(sigma, tau), tau);
}

std::optional<std::pair<int, IndexSet>> wedge_insert(int r, const IndexSet& sigma) {
    if (std::binary_search(sigma.begin(), sigma.end(), r)) return std::nullopt;
    IndexSet out = sigma;
    auto pos = std::lower_bound(out.begin(), out.end(), r);
    int before = int(pos - out.begin());
    out.insert(pos, r);
    return std::make_pair(before % 2 == 0 ? 1 : -1, out);
}

std::optional<std::pair<int, IndexSet>> wedge_merge(const IndexSet& sigma, const IndexSet& tau) {
    IndexSet inter;
    std::set_intersection(sigma.begin(), sigma.end(), tau.begin(), tau.end(),
                          std::back_inserter(inter));
    if (!inter.empty()) return std::nullopt;
    IndexSet out;
    std::merge(sigma.begin(), sigma.end(), tau.begin(), tau.end(), std::back_inserter(out));
    return std::make_pair(block_sign(sigma, tau), out);
}

std::vector<IndexSet> subsets_of(const IndexSet& sigma, int k) {
    std::vector<IndexSet> out;
    if (k < 0 || k > int(sigma.size())) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        IndexSet s(k);
        for (int i = 0; i < k; ++i) s[i] = sigma[idx[i]];
        out.push_back(std::move(s));
        int i = k - 1;
        while (i >= 0 && idx[i] == int(sigma.size()) - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

SetupConfig::SetupConfig(int n_, int d_, Exp w_, Exp e_, FieldCfg f)
    : n(n_), d(d_), w(std::move(w_)), e(std::move(e_)), field(f) {
    if (n < 1) throw std::invalid_argument("SetupConfig: n must be >= 1");
    if (d < 1) throw std::invalid_argument("SetupConfig: d must be >= 1");
    if (int(w.size()) != n) throw std::invalid_argument("SetupConfig: w must have length n");
    for (int x : w.v)
        if (x < 0) throw std::invalid_argument("SetupConfig: w entries must be >= 0");
    if (e.size() == 0) e = Exp(std::vector<int>(n, 1));
    if (int(e.size()) != n) throw std::invalid_argument("SetupConfig: e must have length n");
    for (int x : e.v)
        if (x < 1) throw std::invalid_argument("SetupConfig: e entries must be >= 1");
    long cap = 0;
    for (int x : w.v) cap += std::min(x, d);
    if (cap < d)
        throw std::invalid_argument("SetupConfig: restricted generator set is empty");
    if (field.is_prime_field()) {
        if (!is_prime(field.p)) throw std::invalid_argument("SetupConfig: p must be prime");
        if (field.p <= n + d)
            throw std::invalid_argument("SetupConfig: prime modulus must exceed n+d");
    }
}

namespace {
void enum_exponents(const SetupConfig& cfg, int pos, int remaining, Exp& cur,
                    std::vector<Exp>& out) {
    if (pos == cfg.n) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    int hi = std::min(cfg.w[pos], remaining);
    for (int k = 0; k <= hi; ++k) {
        cur[pos] = k;
        enum_exponents(cfg, pos + 1, remaining - k, cur, out);
    }
    cur[pos] = 0;
}
} // namespace

std::vector<Exp> restricted_exponents(const SetupConfig& cfg) {
    std::vector<Exp> out;
    Exp cur(cfg.n);
    enum_exponents(cfg, 0, cfg.d, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::string HookTableau::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < arm.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(arm[i]);
    }
    s += "|";
    for (std::size_t i = 0; i < leg.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(leg[i]);
    }
    return s + "]";
}

std::vector<HookTableau> hook_ssyt(int a, int b, const SetupConfig& cfg) {
    std::vector<HookTableau> out;
    if (a < 0 || b < 1) return out;
    HookTableau t;
    t.arm.resize(b);
    t.leg.resize(a);

    // fill the arm weakly increasing, then the leg strictly increasing
    // above arm[0]; prune on content as we go
    Exp content(cfg.n);
    auto fits = [&](int x) { return content[x - 1] < cfg.w[x - 1]; };

    std::function<void(int)> fill_leg = [&](int i) {
        if (i == a) {
            out.push_back(t);
            return;
        }
        int lo = (i == 0 ? t.arm[0] : t.leg[i - 1]) + 1;
        for (int x = lo; x <= cfg.n; ++x) {
            if (!fits(x)) continue;
            t.leg[i] = x;
            content[x - 1] += 1;
            fill_leg(i + 1);
            content[x - 1] -= 1;
        }
    };
    std::function<void(int)> fill_arm = [&](int j) {
        if (j == b) {
            fill_leg(0);
            return;
        }
        int lo = j == 0 ? 1 : t.arm[j - 1];
        for (int x = lo; x <= cfg.n; ++x) {
            if (!fits(x)) continue;
            t.arm[j] = x;
            content[x - 1] += 1;
            fill_arm(j + 1);
            content[x - 1] -= 1;
        }
    };
    fill_arm(0);
    std::sort(out.begin(), out.end());
    return out;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace lw
