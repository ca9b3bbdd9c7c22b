#pragma once

#include <cstdint>
#include <vector>

namespace flagspace {

// Table-backed finite field F_{p^deg}, deg >= 1, with p^deg <= 2^16.
//
// An element is its canonical rank: rank = sum c_i p^i where (c_0, ..,
// c_{deg-1}) is the reduced coefficient vector over F_p modulo the defining
// polynomial. Rank equality is canonical equality. Multiplication runs on
// discrete-log tables built at construction; the instance is immutable
// afterwards, so const access is safe from any number of threads.
class SmallField {
public:
    using Elem = std::uint32_t;

    static SmallField prime_field(std::uint64_t p);
    // `modulus` ascending over F_p, monic, degree >= 1. Irreducibility is
    // required; a reducible modulus is detected during table construction.
    static SmallField extension(std::uint64_t p, const std::vector<Elem>& modulus);

    std::uint64_t p() const { return p_; }
    unsigned degree() const { return degree_; }
    std::uint32_t size() const { return size_; }
    const std::vector<Elem>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;                    // DomainError on 0
    Elem pow(Elem a, std::uint64_t e) const;   // 0^0 = 1
    Elem frobenius(Elem a) const { return pow(a, (Elem)p_); }
    Elem frobenius_pow(Elem a, std::uint64_t i) const;  // a^{p^i}

    // Sum of the p-power conjugates over F_{p^sub_degree}; requires
    // sub_degree | degree and a in that subfield. The value lies in F_p.
    Elem trace(Elem a, unsigned sub_degree) const;
    Elem trace(Elem a) const { return trace(a, degree_); }

    bool in_subfield(Elem a, std::uint64_t subfield_size) const;

    std::uint64_t element_order(Elem a) const;  // DomainError on 0
    Elem primitive() const { return generator_; }
    Elem find_element_of_order(std::uint64_t n) const;

    std::vector<Elem> coeffs(Elem a) const;  // ascending F_p digits, length degree
    Elem from_coeffs(const std::vector<Elem>& c) const;

    bool same_field(const SmallField& other) const {
        return p_ == other.p_ && modulus_ == other.modulus_;
    }

    // Table-free product; used while the tables are being built and by
    // cross-checks.
    Elem mul_direct(Elem a, Elem b) const;

private:
    SmallField(std::uint64_t p, std::vector<Elem> modulus);
    void build_tables();

    std::uint64_t p_ = 0;
    unsigned degree_ = 0;
    std::uint32_t size_ = 0;
    std::vector<Elem> modulus_;
    Elem generator_ = 0;
    std::vector<Elem> exp_;   // exp_[i] = generator^i, i in [0, size-1)
    std::vector<Elem> log_;   // inverse of exp_; log_[0] unused
    std::vector<std::pair<std::uint64_t, unsigned>> group_factors_;  // of size-1
};

// Images of every element of `sub` under the canonical embedding into
// `sup` (the one sending sub's generator to the least-rank root of sub's
// modulus). Requires sub's order to divide a power structure compatible
// with sup: p equal and sub.degree | sup.degree.
std::vector<SmallField::Elem> find_subfield_embedding(const SmallField& sub, const SmallField& sup);

}  // namespace flagspace
