#include "flagspace/field.hpp"

#include "flagspace/errors.hpp"
#include "flagspace/nt.hpp"

namespace flagspace {

namespace {

constexpr std::uint64_t kMaxFieldSize = 1u << 16;

using Digits = std::vector<std::uint32_t>;

Digits unpack(std::uint32_t rank, std::uint64_t p, unsigned degree) {
    Digits d(degree, 0);
    for (unsigned i = 0; i < degree; ++i) {
        d[i] = (std::uint32_t)(rank % p);
        rank = (std::uint32_t)(rank / p);
    }
    return d;
}

std::uint32_t pack(const Digits& d, std::uint64_t p) {
    std::uint64_t rank = 0;
    for (std::size_t i = d.size(); i-- > 0;) rank = rank * p + d[i];
    return (std::uint32_t)rank;
}

}  // namespace

SmallField::SmallField(std::uint64_t p, std::vector<Elem> modulus) : p_(p), modulus_(std::move(modulus)) {
    if (!nt::is_prime(p_)) throw DomainError("field characteristic must be prime");
    if (modulus_.size() < 2) throw DomainError("modulus must have degree >= 1");
    if (modulus_.back() != 1) throw DomainError("modulus must be monic");
    for (Elem c : modulus_)
        if (c >= p_) throw DomainError("modulus coefficient out of range");
    degree_ = (unsigned)modulus_.size() - 1;
    std::uint64_t size = 1;
    for (unsigned i = 0; i < degree_; ++i) {
        size *= p_;
        if (size > kMaxFieldSize) throw ResourceError("field size exceeds the 2^16 table bound");
    }
    size_ = (std::uint32_t)size;
    group_factors_ = size_ > 1 ? nt::factor_groups(size_ - 1) : std::vector<std::pair<std::uint64_t, unsigned>>{};
    build_tables();
}

SmallField SmallField::prime_field(std::uint64_t p) { return SmallField(p, {0, 1}); }

SmallField SmallField::extension(std::uint64_t p, const std::vector<Elem>& modulus) {
    return SmallField(p, modulus);
}

SmallField::Elem SmallField::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    std::uint64_t r = 0, scale = 1;
    for (unsigned i = 0; i < degree_; ++i) {
        r += scale * ((a % p_ + b % p_) % p_);
        a = (Elem)(a / p_);
        b = (Elem)(b / p_);
        scale *= p_;
    }
    return (Elem)r;
}

SmallField::Elem SmallField::neg(Elem a) const {
    if (p_ == 2) return a;
    std::uint64_t r = 0, scale = 1;
    for (unsigned i = 0; i < degree_; ++i) {
        std::uint64_t c = a % p_;
        r += scale * (c == 0 ? 0 : p_ - c);
        a = (Elem)(a / p_);
        scale *= p_;
    }
    return (Elem)r;
}

SmallField::Elem SmallField::mul_direct(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    Digits da = unpack(a, p_, degree_), db = unpack(b, p_, degree_);
    Digits prod(2 * degree_ - 1, 0);
    for (unsigned i = 0; i < degree_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < degree_; ++j)
            prod[i + j] = (std::uint32_t)((prod[i + j] + (std::uint64_t)da[i] * db[j]) % p_);
    }
    // reduce by the monic modulus
    for (std::size_t i = prod.size(); i-- > degree_;) {
        std::uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (unsigned j = 0; j < degree_; ++j) {
            std::uint64_t sub = c * modulus_[j] % p_;
            prod[i - degree_ + j] = (std::uint32_t)((prod[i - degree_ + j] + p_ - sub) % p_);
        }
    }
    prod.resize(degree_);
    return pack(prod, p_);
}

void SmallField::build_tables() {
    const std::uint64_t group = size_ - 1;
    auto pow_direct = [&](Elem a, std::uint64_t e) {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul_direct(r, a);
            a = mul_direct(a, a);
            e >>= 1;
        }
        return r;
    };
    generator_ = 0;
    for (Elem g = 1; g < size_; ++g) {
        bool ok = pow_direct(g, group) == 1;
        for (auto [l, e] : group_factors_) {
            (void)e;
            if (!ok) break;
            if (pow_direct(g, group / l) == 1) ok = false;
        }
        if (ok) {
            generator_ = g;
            break;
        }
    }
    if (generator_ == 0) throw DomainError("modulus is not irreducible: multiplicative group is not cyclic of full order");

    exp_.assign(group, 0);
    log_.assign(size_, 0);
    std::vector<bool> seen(size_, false);
    Elem cur = 1;
    for (std::uint64_t i = 0; i < group; ++i) {
        if (cur == 0 || seen[cur]) throw DomainError("modulus is not irreducible: power table collided");
        seen[cur] = true;
        exp_[i] = cur;
        log_[cur] = (Elem)i;
        cur = mul_direct(cur, generator_);
    }
    if (cur != 1) throw DomainError("modulus is not irreducible: generator order mismatch");
}

SmallField::Elem SmallField::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t group = size_ - 1;
    return exp_[(log_[a] + log_[b]) % group];
}

SmallField::Elem SmallField::inv(Elem a) const {
    if (a == 0) throw DomainError("inverse of zero");
    std::uint64_t group = size_ - 1;
    return exp_[(group - log_[a]) % group];
}

SmallField::Elem SmallField::pow(Elem a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    std::uint64_t group = size_ - 1;
    return exp_[(std::uint64_t)log_[a] * (e % group) % group];
}

SmallField::Elem SmallField::frobenius_pow(Elem a, std::uint64_t i) const {
    if (a == 0) return 0;
    return pow(a, nt::powmod(p_, i, size_ - 1));
}

SmallField::Elem SmallField::trace(Elem a, unsigned sub_degree) const {
    if (sub_degree == 0 || degree_ % sub_degree != 0)
        throw DomainError("trace: subfield degree must divide the field degree");
    std::uint64_t sub_size = 1;
    for (unsigned i = 0; i < sub_degree; ++i) sub_size *= p_;
    if (!in_subfield(a, sub_size)) throw DomainError("trace: element is not in the stated subfield");
    Elem s = 0, c = a;
    for (unsigned i = 0; i < sub_degree; ++i) {
        s = add(s, c);
        c = frobenius(c);
    }
    if (s >= p_) throw InternalError("trace: value left the prime field");
    return s;
}

bool SmallField::in_subfield(Elem a, std::uint64_t subfield_size) const { return pow(a, subfield_size) == a; }

std::uint64_t SmallField::element_order(Elem a) const {
    if (a == 0) throw DomainError("element_order of zero");
    std::uint64_t order = size_ - 1;
    for (auto [l, e] : group_factors_) {
        (void)e;
        while (order % l == 0 && pow(a, order / l) == 1) order /= l;
    }
    return order;
}

SmallField::Elem SmallField::find_element_of_order(std::uint64_t n) const {
    if (n == 0 || (size_ - 1) % n != 0) throw DomainError("find_element_of_order: n does not divide the group order");
    return pow(generator_, (size_ - 1) / n);
}

std::vector<SmallField::Elem> SmallField::coeffs(Elem a) const { return unpack(a, p_, degree_); }

SmallField::Elem SmallField::from_coeffs(const std::vector<Elem>& c) const {
    if (c.size() > degree_) throw DomainError("coefficient vector longer than the field degree");
    for (Elem x : c)
        if (x >= p_) throw DomainError("coefficient out of range");
    Digits d(c);
    d.resize(degree_, 0);
    return pack(d, p_);
}

std::vector<SmallField::Elem> find_subfield_embedding(const SmallField& sub, const SmallField& sup) {
    if (sub.p() != sup.p() || sup.degree() % sub.degree() != 0)
        throw StructuralError("no embedding: incompatible field parameters");
    // Least-rank root of sub's modulus inside sup.
    SmallField::Elem root = 0;
    bool found = false;
    for (SmallField::Elem x = 0; x < sup.size(); ++x) {
        SmallField::Elem v = 0;
        for (std::size_t i = sub.modulus().size(); i-- > 0;) v = sup.add(sup.mul(v, x), sub.modulus()[i]);
        if (v == 0) {
            root = x;
            found = true;
            break;
        }
    }
    if (!found) throw InternalError("subfield embedding: modulus has no root in the superfield");
    std::vector<SmallField::Elem> image(sub.size(), 0);
    for (SmallField::Elem a = 0; a < sub.size(); ++a) {
        auto digits = sub.coeffs(a);
        SmallField::Elem v = 0;
        for (std::size_t i = digits.size(); i-- > 0;) v = sup.add(sup.mul(v, root), digits[i]);
        image[a] = v;
    }
    return image;
}

}  // namespace flagspace
