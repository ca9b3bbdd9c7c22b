#include "flagspace/nt.hpp"

#include <algorithm>
#include <map>

#include "flagspace/errors.hpp"

namespace flagspace::nt {

namespace {

constexpr u64 kFactorBound = u64(1) << 63;

u64 brent_rho(u64 n) {
    // Deterministic parameter sweep; n is odd, composite, not a prime power
    // of a small prime (those were stripped by trial division).
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 power = 1, lam = 1;
        auto step = [&](u64 v) { return (u64)((mulmod(v, v, n) + c) % n); };
        while (d == 1) {
            if (power == lam) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = step(y);
            ++lam;
            u64 diff = x > y ? x - y : y - x;
            if (diff == 0) break;  // cycle without factor; retry with next c
            d = gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = brent_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

u64 gcd(u64 a, u64 b) {
    while (b) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u64 mulmod(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for every 64-bit input.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u64> factorize(u64 n) {
    if (n == 0) throw DomainError("factorize: n must be positive");
    if (n >= kFactorBound) throw ResourceError("factorize: input exceeds the 2^63 desk-scale bound");
    std::vector<u64> out;
    for (u64 p = 2; p < 100 && p * p <= n; p == 2 ? p = 3 : p += 2) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    factor_rec(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<u64, unsigned>> factor_groups(u64 n) {
    std::vector<std::pair<u64, unsigned>> groups;
    for (u64 p : factorize(n)) {
        if (!groups.empty() && groups.back().first == p)
            ++groups.back().second;
        else
            groups.emplace_back(p, 1u);
    }
    return groups;
}

std::optional<std::pair<u64, unsigned>> prime_power(u64 q) {
    if (q < 2) return std::nullopt;
    auto groups = factor_groups(q);
    if (groups.size() != 1) return std::nullopt;
    return std::make_pair(groups[0].first, groups[0].second);
}

u64 multiplicative_order(u64 a, u64 n) {
    if (n == 0) throw DomainError("multiplicative_order: modulus must be positive");
    a %= n;
    if (n == 1) return 1;
    if (gcd(a, n) != 1) throw DomainError("multiplicative_order: gcd(a, n) != 1");
    // Euler phi from the factorization of n, then strip primes.
    u64 e = 1;
    for (auto [p, m] : factor_groups(n)) {
        e *= p - 1;
        for (unsigned j = 1; j < m; ++j) e *= p;
    }
    u64 order = e;
    for (u64 p : factorize(e)) {
        while (order % p == 0 && powmod(a, order / p, n) == 1) order /= p;
    }
    return order;
}

u64 checked_pow(u64 base, u64 exp, u64 limit) {
    u64 r = 1;
    for (u64 i = 0; i < exp; ++i) {
        if (r > limit / base) throw ResourceError("checked_pow: value exceeds resource bound");
        r *= base;
    }
    return r;
}

void GcdIdentityInstance::validate() const {
    if (d <= 1 || d % 2 == 0) throw DomainError("gcd identity: d must be odd and > 1");
    if (q < 2 || (q + 1) % d != 0) throw DomainError("gcd identity: d must divide q+1");
    if (t == 0) throw DomainError("gcd identity: t must be positive");
    if (i == 0 || i % 2 != 0) throw DomainError("gcd identity: i must be positive and even");
}

u64 GcdIdentityInstance::modulus() const {
    u64 dt = checked_pow(d, t, u64(1) << 40);
    return dt * (q + 1);
}

bool verify_gcd_identity(const GcdIdentityInstance& inst) {
    inst.validate();
    const u64 n = inst.modulus();
    const u64 dt1 = checked_pow(inst.d, inst.t - 1, u64(1) << 40);
    const u64 exponent = inst.i * dt1;

    // gcd(N, q^E - 1) prime-power-wise: for each l^e || N find the largest
    // e' <= e with q^E = 1 mod l^{e'}.
    u64 lhs = 1;
    for (auto [l, e] : factor_groups(n)) {
        u64 le = 1;
        for (unsigned j = 0; j < e; ++j) le *= l;
        while (le > 1 && powmod(inst.q % le, exponent, le) != 1) le /= l;
        lhs *= le;
    }

    const u64 rhs = (inst.q + 1) * dt1 * gcd(inst.d, inst.i);
    return lhs == rhs;
}

bool verify_order_claim(u64 q, u64 d, u64 t) {
    GcdIdentityInstance probe{q, d, t, 2};
    probe.validate();
    const u64 n = probe.modulus();
    const u64 dt = checked_pow(d, t, u64(1) << 40);
    return multiplicative_order(q, n) == 2 * dt;
}

}  // namespace flagspace::nt
