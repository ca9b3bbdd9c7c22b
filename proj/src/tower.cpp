#include "flagspace/tower.hpp"

#include <algorithm>

#include "flagspace/errors.hpp"
#include "flagspace/nt.hpp"

namespace flagspace {

namespace {
constexpr std::uint64_t kMaxTopSize = std::uint64_t(1) << 40;
}

Tower::Tower(SmallField middle, std::vector<Mid> top_modulus)
    : prime_(SmallField::prime_field(middle.p())), middle_(std::move(middle)), top_modulus_(std::move(top_modulus)) {
    if (middle_.degree() % 2 != 0) throw DomainError("middle field degree must be even (it is F_{q^2})");
    k_ = middle_.degree() / 2;
    q_ = 1;
    for (unsigned i = 0; i < k_; ++i) q_ *= middle_.p();
    if (top_modulus_.size() < 2 || top_modulus_.back() != 1) throw DomainError("top modulus must be monic of degree >= 1");
    m_ = (unsigned)top_modulus_.size() - 1;
    top_size_ = 1;
    for (unsigned i = 0; i < m_; ++i) {
        if (top_size_ > kMaxTopSize / middle_.size()) throw ResourceError("top field size exceeds the supported bound");
        top_size_ *= middle_.size();
    }
    top_group_factors_ = nt::factor_groups(top_size_ - 1);

    // canonical primitive element: least rank passing the order test
    const std::uint64_t group = top_size_ - 1;
    for (std::uint64_t r = 1; r < top_size_; ++r) {
        TopVec cand = top_unrank(r);
        bool ok = top_is_zero(top_sub(top_pow(cand, group), top_one()));
        for (auto [l, e] : top_group_factors_) {
            (void)e;
            if (!ok) break;
            if (top_is_zero(top_sub(top_pow(cand, group / l), top_one()))) ok = false;
        }
        if (ok) {
            primitive_ = std::move(cand);
            break;
        }
    }
    if (primitive_.empty() && top_size_ > 2) throw InternalError("no primitive element found at the top level");
    if (primitive_.empty()) primitive_ = top_one();
}

std::shared_ptr<const Tower> Tower::make_canonical(std::uint64_t p, unsigned k, unsigned m) {
    if (k == 0 || m == 0) throw DomainError("tower degrees must be positive");
    SmallField middle = make_extension_field(p, 2 * k);
    Polynomial top = find_canonical_irreducible(middle, m);
    return std::shared_ptr<const Tower>(new Tower(std::move(middle), top.coeffs()));
}

std::shared_ptr<const Tower> Tower::from_top_modulus(const SmallField& middle, const Polynomial& top_modulus) {
    if (!top_modulus.field().same_field(middle)) throw StructuralError("top modulus is not over the middle field");
    if (top_modulus.degree() < 1 || !top_modulus.is_monic()) throw DomainError("top modulus must be monic of degree >= 1");
    if (!is_irreducible(top_modulus)) throw DomainError("top modulus must be irreducible over the middle field");
    return std::shared_ptr<const Tower>(new Tower(middle, top_modulus.coeffs()));
}

Tower::TopVec Tower::top_one() const {
    TopVec v(m_, 0);
    v[0] = 1;
    return v;
}

bool Tower::top_is_zero(const TopVec& a) const {
    for (Mid c : a)
        if (c != 0) return false;
    return true;
}

Tower::TopVec Tower::top_add(const TopVec& a, const TopVec& b) const {
    TopVec r(m_);
    for (unsigned i = 0; i < m_; ++i) r[i] = middle_.add(a[i], b[i]);
    return r;
}

Tower::TopVec Tower::top_sub(const TopVec& a, const TopVec& b) const {
    TopVec r(m_);
    for (unsigned i = 0; i < m_; ++i) r[i] = middle_.sub(a[i], b[i]);
    return r;
}

Tower::TopVec Tower::top_neg(const TopVec& a) const {
    TopVec r(m_);
    for (unsigned i = 0; i < m_; ++i) r[i] = middle_.neg(a[i]);
    return r;
}

void Tower::top_mul_into(const Mid* a, const Mid* b, Mid* out) const {
    thread_local std::vector<Mid> scratch;
    scratch.assign(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j) {
            if (b[j] == 0) continue;
            scratch[i + j] = middle_.add(scratch[i + j], middle_.mul(a[i], b[j]));
        }
    }
    for (unsigned i = 2 * m_ - 1; i-- > m_;) {
        Mid c = scratch[i];
        if (c == 0) continue;
        scratch[i] = 0;
        for (unsigned j = 0; j < m_; ++j)
            scratch[i - m_ + j] = middle_.sub(scratch[i - m_ + j], middle_.mul(c, top_modulus_[j]));
    }
    std::copy(scratch.begin(), scratch.begin() + m_, out);
}

Tower::TopVec Tower::top_mul(const TopVec& a, const TopVec& b) const {
    TopVec r(m_);
    top_mul_into(a.data(), b.data(), r.data());
    return r;
}

Tower::TopVec Tower::top_inv(const TopVec& a) const {
    if (top_is_zero(a)) throw DomainError("inverse of zero");
    Polynomial ap(middle_, a);
    Polynomial mod(middle_, top_modulus_);
    PolyXgcd x = poly_xgcd(ap, mod);
    if (x.g.degree() != 0) throw InternalError("top modulus is not irreducible: xgcd found a factor");
    Polynomial s = scale(x.s, middle_.inv(x.g.coeff(0)));
    TopVec r(m_, 0);
    for (unsigned i = 0; i < m_; ++i) r[i] = s.coeff(i);
    return r;
}

Tower::TopVec Tower::top_pow(TopVec a, std::uint64_t e) const {
    TopVec r = top_one();
    while (e) {
        if (e & 1) top_mul_into(r.data(), a.data(), r.data());
        top_mul_into(a.data(), a.data(), a.data());
        e >>= 1;
    }
    return r;
}

std::uint64_t Tower::top_rank(const TopVec& a) const {
    std::uint64_t r = 0;
    for (unsigned i = m_; i-- > 0;) r = r * middle_.size() + a[i];
    return r;
}

Tower::TopVec Tower::top_unrank(std::uint64_t rank) const {
    TopVec v(m_);
    for (unsigned i = 0; i < m_; ++i) {
        v[i] = (Mid)(rank % middle_.size());
        rank /= middle_.size();
    }
    return v;
}

std::uint64_t Tower::rank_add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t p = prime_.p();
    if (p == 2) return a ^ b;
    std::uint64_t r = 0, scale = 1;
    const unsigned digits = middle_.degree() * m_;
    for (unsigned i = 0; i < digits; ++i) {
        r += scale * ((a % p + b % p) % p);
        a /= p;
        b /= p;
        scale *= p;
    }
    return r;
}

std::uint64_t Tower::rank_scale_middle(std::uint64_t a, Mid c) const {
    std::uint64_t r = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        r += scale * middle_.mul((Mid)(a % middle_.size()), c);
        a /= middle_.size();
        scale *= middle_.size();
    }
    return r;
}

Tower::TopVec Tower::embed_middle(Mid a) const {
    TopVec v(m_, 0);
    v[0] = a;
    return v;
}

bool Tower::top_in_middle(const TopVec& a) const {
    for (unsigned i = 1; i < m_; ++i)
        if (a[i] != 0) return false;
    return true;
}

Tower::Mid Tower::project_middle(const TopVec& a) const {
    if (!top_in_middle(a)) throw StructuralError("element is not in the embedded middle field");
    return a[0];
}

std::uint64_t Tower::top_element_order(const TopVec& a) const {
    if (top_is_zero(a)) throw DomainError("element_order of zero");
    std::uint64_t order = top_size_ - 1;
    for (auto [l, e] : top_group_factors_) {
        (void)e;
        while (order % l == 0) {
            TopVec probe = top_pow(a, order / l);
            if (!top_is_zero(top_sub(probe, top_one()))) break;
            order /= l;
        }
    }
    return order;
}

Tower::TopVec Tower::top_element_of_order(std::uint64_t n) const {
    if (n == 0 || (top_size_ - 1) % n != 0) throw DomainError("order does not divide the group order");
    return top_pow(primitive_, (top_size_ - 1) / n);
}

bool Tower::same_tower(const Tower& o) const {
    return middle_.same_field(o.middle_) && top_modulus_ == o.top_modulus_;
}

// --- FieldElement --------------------------------------------------------

FieldElement::FieldElement(std::shared_ptr<const Tower> t, Level lv, Tower::TopVec data)
    : tower_(std::move(t)), level_(lv), data_(std::move(data)) {}

FieldElement FieldElement::from_rank(std::shared_ptr<const Tower> t, Level lv, std::uint64_t rank) {
    switch (lv) {
        case Level::prime:
            if (rank >= t->p()) throw DomainError("rank out of range for the prime field");
            return FieldElement(std::move(t), lv, {(Tower::Mid)rank});
        case Level::middle:
            if (rank >= t->q2()) throw DomainError("rank out of range for the middle field");
            return FieldElement(std::move(t), lv, {(Tower::Mid)rank});
        case Level::top: {
            if (rank >= t->top_size()) throw DomainError("rank out of range for the top field");
            Tower::TopVec v = t->top_unrank(rank);
            return FieldElement(std::move(t), lv, std::move(v));
        }
    }
    throw StructuralError("bad level");
}

FieldElement FieldElement::from_top(std::shared_ptr<const Tower> t, Tower::TopVec v) {
    if (v.size() != t->m()) throw StructuralError("top coefficient vector has the wrong length");
    return FieldElement(std::move(t), Level::top, std::move(v));
}

FieldElement FieldElement::zero(std::shared_ptr<const Tower> t, Level lv) { return from_rank(std::move(t), lv, 0); }
FieldElement FieldElement::one(std::shared_ptr<const Tower> t, Level lv) { return from_rank(std::move(t), lv, 1); }

std::uint64_t FieldElement::rank() const {
    if (level_ == Level::top) return tower_->top_rank(data_);
    return data_[0];
}

bool FieldElement::is_zero() const {
    for (Tower::Mid c : data_)
        if (c != 0) return false;
    return true;
}

namespace {
void check_compatible(const FieldElement& a, const FieldElement& b) {
    if (a.level() != b.level() || !a.tower().same_tower(b.tower()))
        throw StructuralError("elements from different towers or levels");
}

const SmallField& small_field_of(const Tower& t, Level lv) {
    return lv == Level::prime ? t.prime_field() : t.middle_field();
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_compatible(a, b);
    if (a.level() == Level::top) return FieldElement::from_top(a.tower_ptr(), a.tower().top_add(a.data(), b.data()));
    const SmallField& f = small_field_of(a.tower(), a.level());
    return FieldElement::from_rank(a.tower_ptr(), a.level(), f.add(a.data()[0], b.data()[0]));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check_compatible(a, b);
    if (a.level() == Level::top) return FieldElement::from_top(a.tower_ptr(), a.tower().top_sub(a.data(), b.data()));
    const SmallField& f = small_field_of(a.tower(), a.level());
    return FieldElement::from_rank(a.tower_ptr(), a.level(), f.sub(a.data()[0], b.data()[0]));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_compatible(a, b);
    if (a.level() == Level::top) return FieldElement::from_top(a.tower_ptr(), a.tower().top_mul(a.data(), b.data()));
    const SmallField& f = small_field_of(a.tower(), a.level());
    return FieldElement::from_rank(a.tower_ptr(), a.level(), f.mul(a.data()[0], b.data()[0]));
}

FieldElement FieldElement::operator-() const {
    if (level_ == Level::top) return from_top(tower_, tower_->top_neg(data_));
    const SmallField& f = small_field_of(*tower_, level_);
    return from_rank(tower_, level_, f.neg(data_[0]));
}

FieldElement FieldElement::inverse() const {
    if (level_ == Level::top) return from_top(tower_, tower_->top_inv(data_));
    const SmallField& f = small_field_of(*tower_, level_);
    return from_rank(tower_, level_, f.inv(data_[0]));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    if (level_ == Level::top) return from_top(tower_, tower_->top_pow(data_, e));
    const SmallField& f = small_field_of(*tower_, level_);
    return from_rank(tower_, level_, f.pow(data_[0], e));
}

FieldElement FieldElement::frobenius_q() const { return pow(tower_->q()); }

bool FieldElement::operator==(const FieldElement& o) const {
    return level_ == o.level_ && tower_->same_tower(*o.tower_) && data_ == o.data_;
}

std::uint64_t element_order(const FieldElement& a) {
    if (a.is_zero()) throw DomainError("element_order of zero");
    if (a.level() == Level::top) return a.tower().top_element_order(a.data());
    return small_field_of(a.tower(), a.level()).element_order(a.data()[0]);
}

FieldElement embed(const FieldElement& a, Level target) {
    if (target == a.level()) return a;
    if (a.level() == Level::top || (a.level() == Level::middle && target == Level::prime))
        throw StructuralError("no embedding downward");
    if (target == Level::middle)  // prime -> middle: constants keep their rank
        return FieldElement::from_rank(a.tower_ptr(), Level::middle, a.data()[0]);
    // prime/middle -> top
    return FieldElement::from_top(a.tower_ptr(), a.tower().embed_middle(a.data()[0]));
}

FieldElement trace_to_prime(const FieldElement& a) {
    unsigned full = 0;
    switch (a.level()) {
        case Level::prime: return a;
        case Level::middle: full = a.tower().middle_field().degree(); break;
        case Level::top: full = a.tower().middle_field().degree() * a.tower().m(); break;
    }
    return trace_to_prime(a, full);
}

FieldElement trace_to_prime(const FieldElement& a, unsigned sub_degree) {
    const Tower& t = a.tower();
    if (a.level() == Level::prime) {
        if (sub_degree != 1) throw DomainError("prime level has only the degree-1 subfield");
        return a;
    }
    if (a.level() == Level::middle) {
        SmallField::Elem v = t.middle_field().trace(a.data()[0], sub_degree);
        return FieldElement::from_rank(a.tower_ptr(), Level::prime, v);
    }
    const unsigned full = t.middle_field().degree() * t.m();
    if (sub_degree == 0 || full % sub_degree != 0) throw DomainError("subfield degree must divide the extension degree");
    std::uint64_t sub_size = 1;
    for (unsigned i = 0; i < sub_degree; ++i) sub_size *= t.p();
    if (!(t.top_pow(a.data(), sub_size) == a.data())) throw DomainError("element is not in the stated subfield");
    Tower::TopVec sum = t.top_zero(), c = a.data();
    for (unsigned i = 0; i < sub_degree; ++i) {
        sum = t.top_add(sum, c);
        c = t.top_pow(c, t.p());
    }
    Tower::Mid mid = t.project_middle(sum);
    if (mid >= t.p()) throw InternalError("trace left the prime field");
    return FieldElement::from_rank(a.tower_ptr(), Level::prime, mid);
}

FieldElement primitive_element(std::shared_ptr<const Tower> t, Level lv) {
    if (lv == Level::top) return FieldElement::from_top(t, t->top_primitive());
    const SmallField& f = lv == Level::prime ? t->prime_field() : t->middle_field();
    return FieldElement::from_rank(t, lv, f.primitive());
}

FieldElement find_element_of_order(std::shared_ptr<const Tower> t, Level lv, std::uint64_t n) {
    if (lv == Level::top) return FieldElement::from_top(t, t->top_element_of_order(n));
    const SmallField& f = lv == Level::prime ? t->prime_field() : t->middle_field();
    return FieldElement::from_rank(t, lv, f.find_element_of_order(n));
}

Polynomial minimal_polynomial(const Tower& t, const Tower::TopVec& b) {
    // q^2-power conjugates of b
    std::vector<Tower::TopVec> conj{b};
    Tower::TopVec c = t.top_pow(b, t.q2());
    while (!(c == b)) {
        conj.push_back(c);
        if (conj.size() > t.m()) throw InternalError("conjugate orbit exceeds the extension degree");
        c = t.top_pow(c, t.q2());
    }
    if (t.m() % conj.size() != 0) throw InternalError("conjugate orbit size does not divide m");

    // expand prod (y - c_i) with top-field coefficients
    std::vector<Tower::TopVec> poly{t.top_one()};
    for (const Tower::TopVec& root : conj) {
        std::vector<Tower::TopVec> next(poly.size() + 1, t.top_zero());
        Tower::TopVec negr = t.top_neg(root);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = t.top_add(next[i + 1], poly[i]);
            next[i] = t.top_add(next[i], t.top_mul(poly[i], negr));
        }
        poly = std::move(next);
    }

    std::vector<SmallField::Elem> coeffs(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) coeffs[i] = t.project_middle(poly[i]);
    return Polynomial(t.middle_field(), std::move(coeffs));
}

Tower::TopVec top_eval(const Tower& t, const Polynomial& f, const Tower::TopVec& x) {
    if (!f.field().same_field(t.middle_field())) throw StructuralError("polynomial is not over the tower's middle field");
    Tower::TopVec v = t.top_zero();
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        v = t.top_mul(v, x);
        v = t.top_add(v, t.embed_middle(f.coeffs()[i]));
    }
    return v;
}

}  // namespace flagspace
