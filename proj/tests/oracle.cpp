#include "oracle.hpp"

#include "tresse/errors.hpp"

#include <algorithm>
#include <map>

namespace tresse::testing {

namespace {

struct Perm {
    std::vector<int> p;
    int sign;
};

std::vector<Perm> perms_with_sign(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    std::vector<Perm> out;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inv;
        out.push_back({p, inv % 2 ? -1 : 1});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Polynomial derive_multi(const Polynomial& f, const std::vector<int>& counts) {
    Polynomial d = f;
    for (std::size_t v = 0; v < counts.size(); ++v)
        for (int t = 0; t < counts[v]; ++t) d = d.derive(static_cast<int>(v));
    return d;
}

} // namespace

NAryForm oracle_transvectant(const std::vector<NAryForm>& fs, unsigned l) {
    const int n = static_cast<int>(fs.size());
    for (const auto& f : fs)
        if (f.n() != n) throw dimension_error("oracle: need n forms of dimension n");
    const auto& vars = fs[0].poly().vars();
    int degree_sum = 0;
    for (const auto& f : fs) degree_sum += f.degree();
    const int result_degree = std::max(degree_sum - n * static_cast<int>(l), 0);

    auto perms = perms_with_sign(n);
    // derivative caches per factor
    std::vector<std::map<std::vector<int>, Polynomial>> cache(static_cast<std::size_t>(n));

    Polynomial total(vars);
    std::vector<int> seq(l, 0); // indices into perms
    const int np = static_cast<int>(perms.size());
    for (;;) {
        int sign = 1;
        std::vector<std::vector<int>> counts(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
        for (unsigned t = 0; t < l; ++t) {
            const Perm& p = perms[static_cast<std::size_t>(seq[t])];
            sign *= p.sign;
            for (int fac = 0; fac < n; ++fac)
                counts[static_cast<std::size_t>(fac)][static_cast<std::size_t>(p.p[static_cast<std::size_t>(fac)])] += 1;
        }
        Polynomial term = Polynomial::constant(vars, Rat(sign));
        bool dead = false;
        for (int fac = 0; fac < n && !dead; ++fac) {
            auto& c = cache[static_cast<std::size_t>(fac)];
            auto it = c.find(counts[static_cast<std::size_t>(fac)]);
            if (it == c.end())
                it = c.emplace(counts[static_cast<std::size_t>(fac)],
                               derive_multi(fs[static_cast<std::size_t>(fac)].poly(),
                                            counts[static_cast<std::size_t>(fac)])).first;
            if (it->second.is_zero()) {
                dead = true;
                break;
            }
            term = term * it->second;
        }
        if (!dead) total = total + term;

        unsigned t = 0;
        while (t < l) {
            if (++seq[t] < np) break;
            seq[t] = 0;
            ++t;
        }
        if (t == l || l == 0) break;
    }
    return NAryForm(n, result_degree, std::move(total));
}

Rat oracle_self_J(const NAryForm& f) {
    std::vector<NAryForm> copies(static_cast<std::size_t>(f.n()), f);
    return oracle_transvectant(copies, static_cast<unsigned>(f.degree())).scalar_value();
}

} // namespace tresse::testing
