#include "flagspace/poly.hpp"

#include <algorithm>

#include "flagspace/errors.hpp"
#include "flagspace/nt.hpp"

namespace flagspace {

namespace {

void check_same_field(const Polynomial& a, const Polynomial& b) {
    if (!a.field().same_field(b.field())) throw StructuralError("polynomials over different fields");
}

std::vector<Polynomial::Elem> stripped(std::vector<Polynomial::Elem> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

}  // namespace

Polynomial::Polynomial(const SmallField& f, std::vector<Elem> coeffs) : field_(&f), coeffs_(stripped(std::move(coeffs))) {
    for (Elem c : coeffs_)
        if (c >= f.size()) throw DomainError("polynomial coefficient out of range");
}

Polynomial Polynomial::constant(const SmallField& f, Elem c) { return Polynomial(f, {c}); }

Polynomial Polynomial::variable(const SmallField& f) { return Polynomial(f, {0, 1}); }

Polynomial::Elem Polynomial::eval(Elem a) const {
    Elem v = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) v = field_->add(field_->mul(v, a), coeffs_[i]);
    return v;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_same_field(a, b);
    const SmallField& f = a.field();
    std::vector<Polynomial::Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
    return Polynomial(f, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check_same_field(a, b);
    const SmallField& f = a.field();
    std::vector<Polynomial::Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
    return Polynomial(f, std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_field(a, b);
    const SmallField& f = a.field();
    if (a.is_zero() || b.is_zero()) return Polynomial(f);
    std::vector<Polynomial::Elem> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = f.add(c[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
    }
    return Polynomial(f, std::move(c));
}

Polynomial scale(const Polynomial& a, Polynomial::Elem c) {
    const SmallField& f = a.field();
    std::vector<Polynomial::Elem> out(a.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.mul(a.coeffs()[i], c);
    return Polynomial(f, std::move(out));
}

Polynomial poly_pow(const Polynomial& a, std::uint64_t e) {
    Polynomial r = Polynomial::constant(a.field(), 1);
    Polynomial base = a;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Polynomial monic(const Polynomial& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return scale(a, a.field().inv(a.leading()));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    check_same_field(a, b);
    const SmallField& f = a.field();
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(f), a};
    std::vector<Polynomial::Elem> rem = a.coeffs();
    const int db = b.degree();
    std::vector<Polynomial::Elem> quot(a.degree() - db + 1, 0);
    const Polynomial::Elem lead_inv = f.inv(b.leading());
    for (int i = a.degree(); i >= db; --i) {
        Polynomial::Elem factor = f.mul(rem[i], lead_inv);
        if (factor == 0) continue;
        quot[i - db] = factor;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = f.sub(rem[i - db + j], f.mul(factor, b.coeffs()[j]));
    }
    return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial poly_mod(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    check_same_field(a, b);
    while (!b.is_zero()) {
        Polynomial r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

PolyXgcd poly_xgcd(const Polynomial& a, const Polynomial& b) {
    check_same_field(a, b);
    const SmallField& f = a.field();
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(f, 1), s1 = Polynomial(f);
    Polynomial t0 = Polynomial(f), t1 = Polynomial::constant(f, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Polynomial s = s0 - q * s1;
        Polynomial t = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (!r0.is_zero() && !r0.is_monic()) {
        Polynomial::Elem u = f.inv(r0.leading());
        r0 = scale(r0, u);
        s0 = scale(s0, u);
        t0 = scale(t0, u);
    }
    return {std::move(r0), std::move(s0), std::move(t0)};
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const SmallField& fld = f.field();
    std::string out;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        Polynomial::Elem c = f.coeffs()[i];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        std::string cs;
        if (fld.degree() == 1 || c < fld.p()) {
            cs = std::to_string(c);
        } else {
            cs = "[";
            auto digits = fld.coeffs(c);
            for (std::size_t j = 0; j < digits.size(); ++j) cs += (j ? "," : "") + std::to_string(digits[j]);
            cs += "]";
        }
        if (i == 0) {
            out += cs;
        } else {
            if (c != 1) out += cs + "*";
            out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

namespace {

Polynomial poly_powmod(const Polynomial& base, std::uint64_t e, const Polynomial& mod) {
    Polynomial r = Polynomial::constant(base.field(), 1);
    Polynomial b = poly_mod(base, mod);
    while (e) {
        if (e & 1) r = poly_mod(r * b, mod);
        b = poly_mod(b * b, mod);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_irreducible(const Polynomial& f) { return is_irreducible_over_subfield(f, f.field().size()); }

bool is_irreducible_over_subfield(const Polynomial& f, std::uint64_t s) {
    const SmallField& fld = f.field();
    if (f.degree() < 1) throw DomainError("irreducibility is defined for degree >= 1");
    std::uint64_t ss = s;
    unsigned j = 0;
    while (ss > 1 && ss % fld.p() == 0) {
        ss /= fld.p();
        ++j;
    }
    if (ss != 1 || j == 0 || fld.degree() % j != 0) throw DomainError("s is not the size of a subfield");
    for (Polynomial::Elem c : f.coeffs())
        if (!fld.in_subfield(c, s)) throw DomainError("coefficient outside the stated subfield");

    const unsigned n = (unsigned)f.degree();
    if (n == 1) return true;
    const Polynomial fm = monic(f);
    const Polynomial x = Polynomial::variable(fld);

    // power[i] = x^{s^i} mod f for the i we need
    std::vector<Polynomial> ladder(n + 1, Polynomial(fld));
    ladder[0] = x;
    for (unsigned i = 1; i <= n; ++i) ladder[i] = poly_powmod(ladder[i - 1], s, fm);
    if (!(ladder[n] == poly_mod(x, fm))) return false;
    for (auto [l, e] : nt::factor_groups(n)) {
        (void)e;
        Polynomial g = poly_gcd(ladder[n / l] - x, fm);
        if (g.degree() != 0) return false;
    }
    return true;
}

bool irreducible_by_odd_descent(const Polynomial& f, std::uint64_t q) {
    const SmallField& fld = f.field();
    if (f.degree() < 1 || f.degree() % 2 == 0) throw DomainError("odd descent requires odd degree");
    if ((std::uint64_t)fld.size() != q * q) throw DomainError("odd descent: field is not F_{q^2}");
    for (Polynomial::Elem c : f.coeffs())
        if (!fld.in_subfield(c, q)) throw DomainError("odd descent: coefficient outside F_q");
    bool result = is_irreducible_over_subfield(f, q);
    if (self_check() && is_irreducible(f) != result)
        throw InternalError("odd descent disagrees with the direct irreducibility test");
    return result;
}

Polynomial find_canonical_irreducible(const SmallField& base, unsigned degree) {
    if (degree == 0) throw DomainError("degree must be positive");
    std::uint64_t count = 1;
    for (unsigned i = 0; i < degree; ++i) {
        count *= base.size();
        if (count > (1u << 24)) throw ResourceError("canonical modulus search space too large");
    }
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<Polynomial::Elem> c(degree + 1, 0);
        std::uint64_t v = idx;
        for (unsigned i = 0; i < degree; ++i) {
            c[i] = (Polynomial::Elem)(v % base.size());
            v /= base.size();
        }
        c[degree] = 1;
        Polynomial f(base, std::move(c));
        if (is_irreducible(f)) return f;
    }
    throw InternalError("no irreducible polynomial found");  // unreachable: they exist for every degree
}

SmallField make_extension_field(std::uint64_t p, unsigned degree) {
    if (degree == 1) return SmallField::prime_field(p);
    SmallField fp = SmallField::prime_field(p);
    Polynomial mod = find_canonical_irreducible(fp, degree);
    std::vector<SmallField::Elem> coeffs = mod.coeffs();
    return SmallField::extension(p, coeffs);
}

Polynomial build_power_diff_irreducible(const SmallField& fq2, std::uint64_t q, std::uint64_t d,
                                        std::uint64_t u, std::uint64_t t, SmallField::Elem delta) {
    if ((std::uint64_t)fq2.size() != q * q) throw DomainError("field is not F_{q^2}");
    if (d <= 1 || d % 2 == 0 || (q + 1) % d != 0) throw DomainError("d must be an odd divisor of q+1 with d > 1");
    if (u == 0 || u >= d || d % u != 0) throw DomainError("u must be a proper divisor of d");
    if (t == 0) throw DomainError("t must be positive");
    const std::uint64_t n = nt::checked_pow(d, t, 1u << 16) * u;
    if (n > (1u << 16)) throw ResourceError("family degree too large");
    if (fq2.element_order(delta) != q + 1) throw DomainError("delta must have exact order q+1");

    const Polynomial lin1(fq2, {fq2.neg(1), delta});        // delta x - 1
    const Polynomial lin2(fq2, {fq2.neg(delta), 1});        // x - delta
    const Polynomial num = poly_pow(lin1, n) - scale(poly_pow(lin2, n), delta);

    const SmallField::Elem denom = fq2.sub(fq2.pow(delta, n), delta);
    if (denom == 0) throw InternalError("degenerate delta: delta^n = delta");
    Polynomial g = scale(num, fq2.inv(denom));

    if (g.degree() != (int)n || !g.is_monic()) throw InternalError("family polynomial is not monic of degree n");
    for (Polynomial::Elem c : g.coeffs())
        if (!fq2.in_subfield(c, q)) throw InternalError("family polynomial has a coefficient outside F_q");
    if (!is_irreducible(g)) throw InternalError("family polynomial is not irreducible over F_{q^2}");
    return g;
}

Polynomial build_char3_cubic(const SmallField& fq2, std::uint64_t q, SmallField::Elem a) {
    if (fq2.p() != 3) throw DomainError("family requires characteristic 3");
    if ((std::uint64_t)fq2.size() != q * q) throw DomainError("field is not F_{q^2}");
    if (a == 0) throw DomainError("a must be nonzero");
    if (!fq2.in_subfield(a, q)) throw DomainError("a must lie in F_q");
    unsigned k = 0;
    for (std::uint64_t v = q; v > 1; v /= 3) ++k;
    // Tr_{q/3}(a^{-1}) != 0
    SmallField::Elem c = fq2.inv(a), tr = 0;
    for (unsigned i = 0; i < k; ++i) {
        tr = fq2.add(tr, c);
        c = fq2.frobenius(c);
    }
    if (tr == 0) throw DomainError("trace condition fails: Tr(a^{-1}) = 0");

    Polynomial h(fq2, {1, fq2.neg(a), a, 1});
    if (!is_irreducible(h)) throw InternalError("characteristic-3 cubic is not irreducible over F_{q^2}");
    return h;
}

Polynomial build_pauley_bamberg(const SmallField& f) {
    const std::uint64_t p = f.p();
    if (p == 2) throw DomainError("requires odd characteristic");
    std::vector<Polynomial::Elem> c((std::size_t)p + 1, 1);
    c[0] = f.neg(1);
    return Polynomial(f, std::move(c));
}

bool cubic_has_no_roots(const SmallField& f3k, SmallField::Elem b, SmallField::Elem c) {
    if (f3k.p() != 3) throw DomainError("root scan requires characteristic 3");
    bool has_root = false;
    for (SmallField::Elem x = 0; x < f3k.size(); ++x) {
        SmallField::Elem v = f3k.sub(f3k.sub(f3k.mul(f3k.mul(x, x), x), f3k.mul(b, x)), c);
        if (v == 0) {
            has_root = true;
            break;
        }
    }
    if (self_check() && b != 0 && has_root) {
        // If b = s^2 with s != 0 and Tr(c/s^3) != 0, a root contradicts the
        // square-trace criterion.
        for (SmallField::Elem s = 1; s < f3k.size(); ++s) {
            if (f3k.mul(s, s) != b) continue;
            SmallField::Elem ratio = f3k.mul(c, f3k.inv(f3k.mul(f3k.mul(s, s), s)));
            if (f3k.trace(ratio) != 0)
                throw InternalError("square-trace criterion violated by an exhaustive root");
            break;
        }
    }
    return !has_root;
}

}  // namespace flagspace
