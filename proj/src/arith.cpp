#include "fpfun/arith.hpp"

#include <algorithm>
#include <array>

namespace fpfun {

static_assert(EuclideanElement<Int>);

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

namespace {

// Odd primes below 2^10; enough to clear small factors quickly before the
// 6k+-1 wheel takes over.
const std::vector<long>& small_primes() {
    static const std::vector<long> primes = [] {
        std::vector<long> ps;
        std::array<bool, 1024> composite{};
        for (long i = 3; i < 1024; i += 2) {
            if (composite[i]) continue;
            ps.push_back(i);
            for (long j = i * i; j < 1024; j += 2 * i) composite[j] = true;
        }
        return ps;
    }();
    return primes;
}

void push_factor(std::vector<Factor>& out, Int& n, const Int& p) {
    int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    if (e > 0) out.push_back({p, e});
}

}  // namespace

std::vector<Factor> factorize(const Int& n) {
    if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
    Int m = abs_int(n);
    std::vector<Factor> out;
    push_factor(out, m, 2);
    for (long p : small_primes()) {
        if (m == 1 || Int(p) * p > m) break;
        push_factor(out, m, p);
    }
    // continue on the 6k+-1 wheel past the sieve
    Int d = 1024 - (1024 % 6) + 5;  // first 6k-1 above the sieve
    while (m != 1 && d * d <= m) {
        push_factor(out, m, d);
        push_factor(out, m, d + 2);
        d += 6;
    }
    if (m != 1) out.push_back({m, 1});
    std::sort(out.begin(), out.end(),
              [](const Factor& a, const Factor& b) { return a.p < b.p; });
    return out;
}

bool is_prime(const Int& p) {
    if (p < 2) return false;
    auto f = factorize(p);
    return f.size() == 1 && f[0].exponent == 1;
}

Int pow_int(const Int& base, unsigned e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

int omega_with_multiplicity(const Int& n) {
    int total = 0;
    for (const auto& f : factorize(n)) total += f.exponent;
    return total;
}

Int parse_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_decimal: empty string");
    size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("parse_decimal: bare sign");
    for (size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("parse_decimal: not a decimal integer: " + s);
    return Int(s);
}

}  // namespace fpfun
