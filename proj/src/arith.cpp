#include "burkhardt/arith.hpp"

#include <algorithm>
#include <map>

namespace burkhardt {

namespace {

constexpr unsigned long kTrialBound = 100000;
constexpr unsigned long kRhoIterations = 4000000;

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> sieve(kTrialBound + 1, true);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= kTrialBound; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= kTrialBound; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

// One nontrivial factor of the odd composite n, or 0 on budget exhaustion.
Integer pollard_brent(const Integer& n, unsigned long seed) {
    Integer y = seed % n;
    const Integer c = (seed * 7 + 1) % n;
    Integer g = 1;
    Integer q = 1;
    Integer x;
    Integer ys;
    unsigned long r = 1;
    unsigned long iterations = 0;
    constexpr unsigned long m = 128;
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            const unsigned long lim = std::min(m, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                Integer d = x - y;
                q = (q * abs(d)) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
            iterations += lim;
            if (iterations > kRhoIterations) return 0;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = (ys * ys + c) % n;
            Integer d = x - ys;
            d = abs(d);
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g == n ? Integer(0) : g;
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    const Integer root = exact_sqrt(n);
    if (root > 0) {
        factor_into(root, out);
        factor_into(root, out);
        return;
    }
    for (unsigned long seed = 2; seed < 5; ++seed) {
        const Integer d = pollard_brent(n, seed);
        if (d != 0 && d != 1 && d != n) {
            factor_into(d, out);
            factor_into(n / d, out);
            return;
        }
    }
    throw FactorizationLimit("unable to factor " + n.get_str());
}

}  // namespace

bool is_probable_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<PrimePower> factor(const Integer& n) {
    if (n == 0) throw std::domain_error("factor: zero");
    Integer m = abs(n);
    std::map<Integer, unsigned> found;
    for (unsigned long p : small_primes()) {
        if (Integer(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
            ++found[Integer(p)];
            m /= p;
        }
    }
    if (m > 1) factor_into(m, found);
    std::vector<PrimePower> out;
    out.reserve(found.size());
    for (const auto& [p, e] : found) out.push_back({p, e});
    return out;
}

unsigned valuation(const Integer& n, const Integer& p) {
    if (n == 0) throw std::domain_error("valuation: zero");
    Integer m = n;
    unsigned v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()) != 0) {
        m /= p;
        ++v;
    }
    return v;
}

std::pair<Integer, Integer> split_square(const Integer& n) {
    if (n == 0) return {0, 0};
    Integer square_root = 1;
    Integer core = n < 0 ? Integer(-1) : Integer(1);
    for (const auto& [p, e] : factor(n)) {
        for (unsigned i = 0; i < e / 2; ++i) square_root *= p;
        if (e % 2 == 1) core *= p;
    }
    return {square_root, core};
}

Integer squarefree_kernel(const Rational& q) {
    if (q.is_zero()) throw std::domain_error("squarefree_kernel: zero");
    // q = a/b ~ a*b modulo squares
    return split_square(q.numerator() * q.denominator()).second;
}

Integer exact_sqrt(const Integer& n) {
    if (n < 0) return -1;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return -1;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

}  // namespace burkhardt
