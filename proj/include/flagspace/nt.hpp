#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace flagspace::nt {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 gcd(u64 a, u64 b);
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(u64 n);

// Prime factors with multiplicity, ascending. Trial division for small
// factors, then Brent's cycle-finding splitter on what remains.
std::vector<u64> factorize(u64 n);
std::vector<std::pair<u64, unsigned>> factor_groups(u64 n);

// q = p^k with p prime, k >= 1.
std::optional<std::pair<u64, unsigned>> prime_power(u64 q);

// Least e > 0 with a^e = 1 mod n; requires gcd(a, n) = 1.
u64 multiplicative_order(u64 a, u64 n);

// base^exp, or ResourceError if the value would exceed `limit`.
u64 checked_pow(u64 base, u64 exp, u64 limit);

// Parameters of the gcd identity
//   gcd(d^t (q+1), q^{i d^{t-1}} - 1) = (q+1) d^{t-1} gcd(d, i)
// for d > 1 an odd divisor of q+1, t >= 1 and i > 0 even.
struct GcdIdentityInstance {
    u64 q = 0;
    u64 d = 0;
    u64 t = 0;
    u64 i = 0;

    void validate() const;  // throws DomainError on a bad instance
    u64 modulus() const;    // d^t (q+1)
};

// Evaluates the identity exactly. The left side is computed prime-power
// wise against the factorization of d^t (q+1), so no big integers appear.
bool verify_gcd_identity(const GcdIdentityInstance& inst);

// ord_{d^t(q+1)}(q) == 2 d^t.
bool verify_order_claim(u64 q, u64 d, u64 t);

}  // namespace flagspace::nt
