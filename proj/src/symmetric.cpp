#include "burkhardt/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace burkhardt {

namespace {

// Visits all set partitions of {0..n-1} as restricted growth strings.
void for_each_set_partition(std::size_t n,
                            const std::function<void(const std::vector<std::size_t>&, std::size_t)>& f) {
    std::vector<std::size_t> block(n, 0);
    auto rec = [&](auto&& self, std::size_t i, std::size_t nblocks) -> void {
        if (i == n) {
            f(block, nblocks);
            return;
        }
        for (std::size_t b = 0; b <= nblocks; ++b) {
            block[i] = b;
            self(self, i + 1, b == nblocks ? nblocks + 1 : nblocks);
        }
    };
    if (n == 0) {
        f(block, 0);
        return;
    }
    block[0] = 0;
    rec(rec, 1, 1);
}

Integer factorial(unsigned k) {
    Integer r = 1;
    for (unsigned i = 2; i <= k; ++i) r *= i;
    return r;
}

QPoly swap_vars(const QPoly& p, std::size_t i, std::size_t j) {
    QPoly out(p.vars());
    for (const auto& [m, c] : p.terms()) {
        Monomial s = m;
        std::swap(s[i], s[j]);
        out.add_term(s, c);
    }
    return out;
}

}  // namespace

QPoly elementary_symmetric(const VarList& vars, unsigned k) {
    const std::size_t n = vars.size();
    QPoly out(vars);
    if (k > n) return out;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        Monomial m(n);
        for (std::size_t i = 0; i < n; ++i) m[i] = pick[i] ? 1 : 0;
        out.add_term(m, Rational(1));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

QPoly power_sum(const VarList& vars, unsigned k) {
    QPoly out(vars);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        out.add_term(Monomial::unit(vars.size(), i, k), Rational(1));
    }
    return out;
}

std::vector<Rational> power_sums_from_elementary(std::span<const Rational> e, std::size_t count) {
    const std::size_t n = e.size();
    auto ek = [&](std::size_t k) { return k <= n ? e[k - 1] : Rational(0); };
    std::vector<Rational> p(count);
    if (count == 0) return p;
    p[0] = Rational(static_cast<long>(n));
    for (std::size_t k = 1; k < count; ++k) {
        Rational acc;
        for (std::size_t i = 1; i < k; ++i) {
            const Rational term = ek(i) * p[k - i];
            acc += (i % 2 == 1) ? term : -term;
        }
        const Rational last = ek(k) * Rational(static_cast<long>(k));
        acc += (k % 2 == 1) ? last : -last;
        p[k] = acc;
    }
    return p;
}

std::vector<Rational> elementary_from_monic(std::span<const Rational> c) {
    const std::size_t n = c.size();
    std::vector<Rational> e(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const Rational& coef = c[n - k];
        e[k - 1] = (k % 2 == 0) ? coef : -coef;
    }
    return e;
}

bool is_symmetric(const QPoly& p) {
    for (std::size_t i = 0; i + 1 < p.nvars(); ++i) {
        if (!(swap_vars(p, i, i + 1) == p)) return false;
    }
    return true;
}

SymmetricReducer::SymmetricReducer(std::size_t n, VarList elementary_vars)
    : n_(n), evars_(std::move(elementary_vars)) {
    if (evars_.size() != n_) throw std::invalid_argument("SymmetricReducer: need n elementary variables");
}

const QPoly& SymmetricReducer::power_sum_in_e(unsigned k) {
    if (power_sums_.empty()) power_sums_.push_back(QPoly(evars_, Rational(static_cast<long>(n_))));
    while (power_sums_.size() <= k) {
        const std::size_t j = power_sums_.size();
        QPoly acc(evars_);
        for (std::size_t i = 1; i < j && i <= n_; ++i) {
            QPoly term = QPoly::variable(evars_, i - 1) * power_sums_[j - i];
            if (i % 2 == 1) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if (j <= n_) {
            QPoly last = QPoly::variable(evars_, j - 1) * Rational(static_cast<long>(j));
            if (j % 2 == 1) {
                acc += last;
            } else {
                acc -= last;
            }
        }
        power_sums_.push_back(std::move(acc));
    }
    return power_sums_[k];
}

const QPoly& SymmetricReducer::monomial_symmetric_in_e(const std::vector<Exponent>& lambda) {
    auto it = monomial_cache_.find(lambda);
    if (it != monomial_cache_.end()) return it->second;

    const std::size_t len = lambda.size();
    QPoly injective(evars_);
    if (len <= n_) {
        for_each_set_partition(len, [&](const std::vector<std::size_t>& block, std::size_t nblocks) {
            std::vector<unsigned> weight(nblocks, 0);
            std::vector<unsigned> size(nblocks, 0);
            for (std::size_t i = 0; i < len; ++i) {
                weight[block[i]] += lambda[i];
                ++size[block[i]];
            }
            Integer mu = 1;
            QPoly prod(evars_, Rational(1));
            for (std::size_t b = 0; b < nblocks; ++b) {
                mu *= factorial(size[b] - 1);
                if (size[b] % 2 == 0) mu = -mu;
                prod = prod * power_sum_in_e(weight[b]);
            }
            injective += prod * Rational(mu);
        });
    }
    // each monomial of m_lambda occurs prod(mult!) times in the injective sum
    Integer repeats = 1;
    for (std::size_t i = 0; i < len;) {
        std::size_t j = i;
        while (j < len && lambda[j] == lambda[i]) ++j;
        repeats *= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    injective *= Rational(Integer(1), repeats);
    return monomial_cache_.emplace(lambda, std::move(injective)).first->second;
}

QPoly SymmetricReducer::reduce(const QPoly& p) {
    if (p.nvars() != n_) throw std::invalid_argument("symmetric_reduce: wrong number of variables");
    if (!is_symmetric(p)) throw std::invalid_argument("symmetric_reduce: input not symmetric");
    QPoly out(evars_);
    for (const auto& [m, c] : p.terms()) {
        const auto& e = m.exponents();
        if (!std::is_sorted(e.begin(), e.end(), std::greater<>())) continue;
        std::vector<Exponent> lambda;
        for (Exponent x : e) {
            if (x > 0) lambda.push_back(x);
        }
        out += monomial_symmetric_in_e(lambda) * c;
    }
    return out;
}

QPoly symmetric_reduce(const QPoly& p) {
    SymmetricReducer reducer(p.nvars(), VarList::indexed("e", 1, p.nvars()));
    return reducer.reduce(p);
}

QPoly expand_elementary(const QPoly& q, const VarList& vars) {
    std::vector<QPoly> images;
    images.reserve(q.nvars());
    for (std::size_t k = 1; k <= q.nvars(); ++k) {
        images.push_back(elementary_symmetric(vars, static_cast<unsigned>(k)));
    }
    return q.substitute(images);
}

}  // namespace burkhardt
