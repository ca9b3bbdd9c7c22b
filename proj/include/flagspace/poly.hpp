#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flagspace/field.hpp"

namespace flagspace {

// Dense polynomial over a SmallField. Canonical form: trailing zero
// coefficients stripped, the zero polynomial has an empty coefficient
// vector. Coefficients ascend: coeffs()[i] is the x^i coefficient.
class Polynomial {
public:
    using Elem = SmallField::Elem;

    explicit Polynomial(const SmallField& f) : field_(&f) {}
    Polynomial(const SmallField& f, std::vector<Elem> coeffs);

    static Polynomial constant(const SmallField& f, Elem c);
    static Polynomial variable(const SmallField& f);  // x

    int degree() const { return (int)coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const SmallField& field() const { return *field_; }
    Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    const std::vector<Elem>& coeffs() const { return coeffs_; }
    Elem leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const { return leading() == 1; }

    Elem eval(Elem a) const;

    bool operator==(const Polynomial& o) const {
        return field_->same_field(*o.field_) && coeffs_ == o.coeffs_;
    }

private:
    const SmallField* field_;
    std::vector<Elem> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Polynomial& a, Polynomial::Elem c);
Polynomial poly_pow(const Polynomial& a, std::uint64_t e);
Polynomial monic(const Polynomial& a);

// (quotient, remainder) with deg rem < deg divisor; DomainError on a zero
// divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial poly_mod(const Polynomial& a, const Polynomial& b);

// Monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

struct PolyXgcd {
    Polynomial g, s, t;  // s*a + t*b = g, g monic (or zero)
};
PolyXgcd poly_xgcd(const Polynomial& a, const Polynomial& b);

std::string to_string(const Polynomial& f);

// Deterministic irreducibility: f is irreducible over F_S iff
// x^{S^n} = x (mod f) and gcd(x^{S^{n/l}} - x, f) = 1 for every prime l | n.
bool is_irreducible(const Polynomial& f);
// Same test against the subfield F_s of f's field; every coefficient must
// lie in F_s. With s the full field size this is is_irreducible.
bool is_irreducible_over_subfield(const Polynomial& f, std::uint64_t s);

// For odd-degree f with coefficients in F_q inside F_{q^2}: irreducibility
// over F_q and over F_{q^2} coincide, so the cheaper subfield test decides
// both. Under self_check() the direct test runs too and must agree.
bool irreducible_by_odd_descent(const Polynomial& f, std::uint64_t q);

// Least monic irreducible of the given degree over `base`, scanning
// coefficient vectors by packed rank ascending.
Polynomial find_canonical_irreducible(const SmallField& base, unsigned degree);

// F_{p^degree} with the canonical modulus.
SmallField make_extension_field(std::uint64_t p, unsigned degree);

// --- construction families ---------------------------------------------

// Degree n = d^t u irreducible over F_{q^2} from the difference of scaled
// n-th powers of two linear forms through an element delta of order q+1:
//   ((delta x - 1)^n - delta (x - delta)^n) / (delta^n - delta).
// Requires d > 1 odd dividing q+1, u a proper divisor of d, t >= 1.
// Postconditions (checked): monic, degree n, coefficients in F_q,
// irreducible over F_{q^2}.
Polynomial build_power_diff_irreducible(const SmallField& fq2, std::uint64_t q, std::uint64_t d,
                                        std::uint64_t u, std::uint64_t t, SmallField::Elem delta);

// x^3 + a x^2 - a x + 1 over F_q, q = 3^k, for a != 0 with
// Tr_{q/3}(a^{-1}) != 0; irreducible over F_{q^2} (checked).
Polynomial build_char3_cubic(const SmallField& fq2, std::uint64_t q, SmallField::Elem a);

// The Pauley-Bamberg polynomial x^p + x^{p-1} + ... + x - 1 of degree p,
// for odd prime p = characteristic of the field.
Polynomial build_pauley_bamberg(const SmallField& f);

// Exhaustive root scan of x^3 - b x - c over a field of characteristic 3.
// Under self_check(), instances with b a nonzero square s^2 and
// Tr(c/s^3) != 0 must come back rootless.
bool cubic_has_no_roots(const SmallField& f3k, SmallField::Elem b, SmallField::Elem c);

}  // namespace flagspace
