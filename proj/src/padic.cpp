#include "epslocal/padic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace epslocal {

namespace {

void check_prime_arg(int64_t p) {
    if (p < 2) throw std::invalid_argument("p must be a prime >= 2");
}

int64_t vp_of(int64_t n, int64_t p) {
    int64_t v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}


}  // namespace

void PadicNumber::normalize() {
    if (zero_) { digits_.clear(); return; }
    size_t lead = 0;
    while (lead < digits_.size() && digits_[lead] == 0) ++lead;
    if (lead == digits_.size()) {
        // nothing significant left: zero at floor val + precision
        val_ += static_cast<int64_t>(digits_.size());
        zero_ = true;
        digits_.clear();
        return;
    }
    if (lead > 0) {
        digits_.erase(digits_.begin(), digits_.begin() + lead);
        val_ += static_cast<int64_t>(lead);
    }
}

PadicNumber PadicNumber::zero(int64_t p, int64_t precision_floor) {
    check_prime_arg(p);
    PadicNumber x;
    x.p_ = p;
    x.zero_ = true;
    x.val_ = precision_floor;
    return x;
}

PadicNumber PadicNumber::from_unit_digits(int64_t p, int64_t valuation,
                                          std::vector<uint32_t> digits) {
    check_prime_arg(p);
    PadicNumber x;
    x.p_ = p;
    x.zero_ = false;
    x.val_ = valuation;
    x.digits_ = std::move(digits);
    x.normalize();
    return x;
}

PadicNumber PadicNumber::from_integer(int64_t n, int64_t p, int precision) {
    check_prime_arg(p);
    if (precision <= 0) throw std::invalid_argument("precision must be positive");
    if (n == 0) return zero(p, precision);
    int64_t v = 0;
    bool neg = n < 0;
    uint64_t m = neg ? -static_cast<uint64_t>(n) : static_cast<uint64_t>(n);
    while (m % static_cast<uint64_t>(p) == 0) { m /= p; ++v; }
    // digits of m, then p-complement if negative
    std::vector<uint32_t> d(precision, 0);
    uint64_t mm = m;
    for (int i = 0; i < precision; ++i) { d[i] = static_cast<uint32_t>(mm % p); mm /= p; }
    if (neg) {
        int64_t borrow = 0;
        for (int i = 0; i < precision; ++i) {
            int64_t t = -static_cast<int64_t>(d[i]) - borrow;
            borrow = 0;
            while (t < 0) { t += p; borrow++; }
            d[i] = static_cast<uint32_t>(t);
        }
    }
    return from_unit_digits(p, v, std::move(d));
}

PadicNumber PadicNumber::from_rational(int64_t num, int64_t den, int64_t p, int precision,
                                       bool allow_negative_valuation) {
    check_prime_arg(p);
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (num == 0) return zero(p, precision);
    int64_t vn = vp_of(std::abs(num), p);
    int64_t vd = vp_of(std::abs(den), p);
    if (vd > vn && !allow_negative_valuation)
        throw std::invalid_argument("from_rational: denominator divisible by p");
    int64_t n = num, d = den;
    for (int64_t i = 0; i < vn; ++i) n /= p;
    for (int64_t i = 0; i < vd; ++i) d /= p;
    // digit-by-digit division n/d in Z_p
    int64_t dinv = 0;  // d^{-1} mod p
    {
        int64_t dd = ((d % p) + p) % p;
        for (int64_t x = 1; x < p; ++x)
            if ((dd * x) % p == 1) { dinv = x; break; }
    }
    std::vector<uint32_t> out(precision, 0);
    int64_t r = n;
    for (int i = 0; i < precision; ++i) {
        int64_t digit = (((r % p) * dinv) % p + p) % p;
        out[i] = static_cast<uint32_t>(digit);
        r = (r - digit * d) / p;
    }
    return from_unit_digits(p, vn - vd, std::move(out));
}

int64_t PadicNumber::known_abs_precision() const {
    return val_ + (zero_ ? 0 : static_cast<int64_t>(digits_.size()));
}

// shared core of + and -
PadicNumber add_aligned(const PadicNumber& a, const PadicNumber& b, bool sub) {
    if (a.p_ != b.p_) throw std::invalid_argument("mixed primes");
    const int64_t p = a.p_;
    const int64_t bound = std::min(a.known_abs_precision(), b.known_abs_precision());
    if (a.zero_ && b.zero_) return PadicNumber::zero(p, bound);
    const int64_t v = std::min(a.zero_ ? bound : a.val_, b.zero_ ? bound : b.val_);
    if (v >= bound) return PadicNumber::zero(p, bound);
    const int len = static_cast<int>(bound - v);
    std::vector<int64_t> acc(len, 0);
    auto deposit = [&](const PadicNumber& x, int64_t sign) {
        if (x.zero_) return;
        for (size_t i = 0; i < x.digits_.size(); ++i) {
            int64_t pos = x.val_ + static_cast<int64_t>(i) - v;
            if (pos >= 0 && pos < len) acc[pos] += sign * static_cast<int64_t>(x.digits_[i]);
        }
    };
    deposit(a, 1);
    deposit(b, sub ? -1 : 1);
    std::vector<uint32_t> d(len, 0);
    int64_t carry = 0;
    for (int i = 0; i < len; ++i) {
        int64_t t = acc[i] + carry;
        carry = 0;
        while (t < 0) { t += p; --carry; }
        carry += t / p;
        d[i] = static_cast<uint32_t>(t % p);
    }
    return PadicNumber::from_unit_digits(p, v, std::move(d));
}

PadicNumber PadicNumber::operator+(const PadicNumber& o) const { return add_aligned(*this, o, false); }
PadicNumber PadicNumber::operator-(const PadicNumber& o) const { return add_aligned(*this, o, true); }

PadicNumber PadicNumber::operator-() const {
    if (zero_) return *this;
    PadicNumber r = *this;
    int64_t borrow = 0;
    for (size_t i = 0; i < r.digits_.size(); ++i) {
        int64_t t = -static_cast<int64_t>(r.digits_[i]) - borrow;
        borrow = 0;
        while (t < 0) { t += p_; ++borrow; }
        r.digits_[i] = static_cast<uint32_t>(t);
    }
    r.normalize();
    return r;
}

PadicNumber PadicNumber::operator*(const PadicNumber& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed primes");
    if (zero_ || o.zero_) {
        // p^v1 u * O(p^v2) is O(p^{v1+v2})
        int64_t fa = zero_ ? val_ : val_;
        int64_t fb = o.zero_ ? o.val_ : o.val_;
        return zero(p_, fa + fb);
    }
    const int k = std::min(precision(), o.precision());
    std::vector<int64_t> acc(k, 0);
    for (int i = 0; i < k; ++i) {
        if (digits_[i] == 0) continue;
        for (int j = 0; j + i < k; ++j)
            acc[i + j] += static_cast<int64_t>(digits_[i]) * o.digits_[j];
    }
    std::vector<uint32_t> d(k, 0);
    int64_t carry = 0;
    for (int i = 0; i < k; ++i) {
        int64_t t = acc[i] + carry;
        d[i] = static_cast<uint32_t>(t % p_);
        carry = t / p_;
    }
    return from_unit_digits(p_, val_ + o.val_, std::move(d));
}

PadicNumber PadicNumber::inverse() const {
    if (zero_) throw std::domain_error("inverse of (indistinguishable-from-)zero");
    const int k = precision();
    // digit-by-digit: find x with u*x = 1 mod p^k
    int64_t d0 = digits_[0];
    int64_t inv0 = 0;
    for (int64_t x = 1; x < p_; ++x)
        if ((d0 * x) % p_ == 1) { inv0 = x; break; }
    std::vector<uint32_t> x(k, 0);
    // residual r tracks (1 - u*x)/p^i digit stream
    std::vector<int64_t> r(k, 0);
    r[0] = 1;
    for (int i = 0; i < k; ++i) {
        // current residue digit at position i with carries folded in
        int64_t cur = r[i] % p_;
        cur = ((cur % p_) + p_) % p_;
        int64_t xi = (cur * inv0) % p_;
        x[i] = static_cast<uint32_t>(xi);
        if (xi != 0) {
            // subtract xi * u * p^i from the residual
            for (int j = 0; i + j < k; ++j) r[i + j] -= xi * static_cast<int64_t>(digits_[j]);
        }
        // push carry of position i to i+1
        int64_t t = r[i];
        int64_t carry;
        if (t >= 0) carry = t / p_;
        else carry = -((-t + p_ - 1) / p_);
        if (i + 1 < k) r[i + 1] += carry;
    }
    return from_unit_digits(p_, -val_, std::move(x));
}

PadicNumber PadicNumber::operator/(const PadicNumber& o) const { return *this * o.inverse(); }

PadicNumber PadicNumber::pow(int64_t e) const {
    if (e == 0) return from_integer(1, p_, zero_ ? 1 : precision());
    PadicNumber base = e < 0 ? inverse() : *this;
    uint64_t k = e < 0 ? -static_cast<uint64_t>(e) : static_cast<uint64_t>(e);
    PadicNumber acc = from_integer(1, p_, base.zero_ ? 1 : base.precision());
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool PadicNumber::equals(const PadicNumber& o) const {
    PadicNumber d = *this - o;
    return d.is_zero();
}

uint64_t PadicNumber::unit_residue(int k) const {
    if (zero_) return 0;
    if (k > precision()) throw std::domain_error("unit_residue: not enough digits");
    uint64_t r = 0;
    for (int i = k - 1; i >= 0; --i) r = r * static_cast<uint64_t>(p_) + digits_[i];
    return r;
}

PadicNumber PadicNumber::truncated(int k) const {
    if (zero_ || k >= precision()) return *this;
    if (k <= 0) return zero(p_, val_);
    std::vector<uint32_t> d(digits_.begin(), digits_.begin() + k);
    return from_unit_digits(p_, val_, std::move(d));
}

std::string PadicNumber::to_string() const {
    std::ostringstream os;
    if (zero_) {
        os << "O(" << p_ << "^" << val_ << ")";
        return os.str();
    }
    bool first = true;
    for (size_t i = 0; i < digits_.size(); ++i) {
        if (digits_[i] == 0) continue;
        int64_t e = val_ + static_cast<int64_t>(i);
        if (!first) os << " + ";
        first = false;
        os << digits_[i];
        if (e != 0) os << "*" << p_ << "^" << e;
    }
    if (first) os << "0";
    os << " + O(" << p_ << "^" << known_abs_precision() << ")";
    return os.str();
}

PadicNumber teichmuller_lift(int64_t u, int64_t p, int precision) {
    check_prime_arg(p);
    u = ((u % p) + p) % p;
    if (u == 0) throw std::invalid_argument("teichmuller_lift: u is divisible by p");
    PadicNumber x = PadicNumber::from_integer(u, p, precision);
    for (;;) {
        PadicNumber y = x.pow(p);
        if (y.unit_digits() == x.unit_digits() && y.valuation() == x.valuation()) return y;
        x = y;
    }
}

// ---------------------------------------------------------------------------
// extension arithmetic

namespace {

int64_t binom(int64_t n, int64_t k) {
    if (k < 0 || k > n) return 0;
    __int128 r = 1;
    for (int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    if (r > INT64_MAX) throw std::overflow_error("binomial overflow");
    return static_cast<int64_t>(r);
}

// reduce a raw convolution (length up to 2p-3) by the minimal polynomial of pi:
// pi^{p-1} = -sum_{i=1}^{p-1} C(p,i) pi^{i-1}
std::vector<PadicNumber> reduce_by_minpoly(int64_t p, std::vector<PadicNumber> c,
                                           int digit_precision) {
    const int n = static_cast<int>(p - 1);
    for (int d = static_cast<int>(c.size()) - 1; d >= n; --d) {
        PadicNumber lead = c[d];
        c[d] = PadicNumber::zero(p, lead.known_abs_precision());
        if (lead.is_zero()) {
            // propagate the floor: contributes O(p^{floor}) to lower coeffs
            for (int i = 1; i <= n; ++i) {
                c[d - n + i - 1] = c[d - n + i - 1] + PadicNumber::zero(p, lead.valuation());
            }
            continue;
        }
        for (int i = 1; i <= n; ++i) {
            PadicNumber coef = PadicNumber::from_integer(-binom(p, i), p, digit_precision);
            c[d - n + i - 1] = c[d - n + i - 1] + lead * coef;
        }
    }
    c.resize(n, PadicNumber::zero(p, digit_precision));
    return c;
}

}  // namespace

ExtElement::ExtElement(int64_t p, std::vector<PadicNumber> coeffs)
    : p_(p), c_(std::move(coeffs)) {
    if (static_cast<int64_t>(c_.size()) != p_ - 1)
        throw std::invalid_argument("ExtElement needs p-1 coordinates");
}

ExtElement ExtElement::operator+(const ExtElement& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed primes");
    std::vector<PadicNumber> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
    return ExtElement(p_, std::move(r));
}

ExtElement ExtElement::operator-(const ExtElement& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed primes");
    std::vector<PadicNumber> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] - o.c_[i];
    return ExtElement(p_, std::move(r));
}

ExtElement ExtElement::operator-() const {
    std::vector<PadicNumber> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return ExtElement(p_, std::move(r));
}

ExtElement ExtElement::scaled(const PadicNumber& s) const {
    std::vector<PadicNumber> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return ExtElement(p_, std::move(r));
}

ExtElement ExtElement::operator*(const ExtElement& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed primes");
    const int n = static_cast<int>(p_ - 1);
    int digit_precision = 1;
    for (const auto& x : c_) digit_precision = std::max(digit_precision, x.precision());
    std::vector<PadicNumber> conv(2 * n - 1);
    for (auto& x : conv) x = PadicNumber::zero(p_, INT64_MAX / 4);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            conv[i + j] = conv[i + j] + c_[i] * o.c_[j];
        }
    }
    return ExtElement(p_, reduce_by_minpoly(p_, std::move(conv), digit_precision));
}

ExtElement ExtElement::pow(int64_t e) const {
    if (e == 0) {
        std::vector<PadicNumber> r(c_.size());
        int prec = 1;
        for (const auto& x : c_) prec = std::max(prec, x.precision());
        for (auto& x : r) x = PadicNumber::zero(p_, prec * (p_ - 1));
        r[0] = PadicNumber::from_integer(1, p_, prec);
        return ExtElement(p_, std::move(r));
    }
    ExtElement base = e < 0 ? inverse() : *this;
    uint64_t k = e < 0 ? -static_cast<uint64_t>(e) : static_cast<uint64_t>(e);
    ExtElement acc = base;
    --k;
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

int64_t ExtElement::pi_valuation() const {
    const int64_t n = p_ - 1;
    int64_t best = known_pi_precision();
    for (size_t j = 0; j < c_.size(); ++j) {
        if (!c_[j].is_zero()) {
            best = std::min(best, n * c_[j].valuation() + static_cast<int64_t>(j));
        }
    }
    return best;
}

int64_t ExtElement::known_pi_precision() const {
    const int64_t n = p_ - 1;
    int64_t best = INT64_MAX;
    for (size_t j = 0; j < c_.size(); ++j) {
        best = std::min(best, n * c_[j].known_abs_precision() + static_cast<int64_t>(j));
    }
    return best;
}

bool ExtElement::is_zero_to_precision() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool ExtElement::equals_to(const ExtElement& o, int64_t T) const {
    ExtElement d = *this - o;
    if (d.known_pi_precision() < T)
        throw std::domain_error("equals_to: requested pi-precision is not certified");
    return d.pi_valuation() >= T;
}

std::string ExtElement::to_string() const {
    std::ostringstream os;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (j) os << " + ";
        os << "(" << c_[j].to_string() << ")";
        if (j == 1) os << "*pi";
        if (j > 1) os << "*pi^" << j;
    }
    return os.str();
}

PadicExtension::PadicExtension(int64_t p, int64_t pi_precision)
    : p_(p), piprec_(pi_precision) {
    if (p < 3) throw std::invalid_argument("build_extension: p must be odd");
    if (pi_precision < 1) throw std::invalid_argument("pi_precision must be positive");
    kdigits_ = static_cast<int>((pi_precision + p - 2) / (p - 1));
}

PadicExtension build_extension(int64_t p, int64_t pi_precision) {
    return PadicExtension(p, pi_precision);
}

ExtElement PadicExtension::zero() const {
    std::vector<PadicNumber> c(p_ - 1);
    for (auto& x : c) x = PadicNumber::zero(p_, kdigits_);
    return ExtElement(p_, std::move(c));
}

ExtElement PadicExtension::one() const { return from_int(1); }

ExtElement PadicExtension::from_int(int64_t n) const {
    ExtElement z = zero();
    std::vector<PadicNumber> c = z.coeffs();
    c[0] = PadicNumber::from_integer(n, p_, kdigits_);
    return ExtElement(p_, std::move(c));
}

ExtElement PadicExtension::embed(const PadicNumber& x) const {
    ExtElement z = zero();
    std::vector<PadicNumber> c = z.coeffs();
    c[0] = x;
    return ExtElement(p_, std::move(c));
}

ExtElement PadicExtension::pi() const {
    ExtElement z = zero();
    std::vector<PadicNumber> c = z.coeffs();
    c[1] = PadicNumber::from_integer(1, p_, kdigits_);
    return ExtElement(p_, std::move(c));
}

ExtElement PadicExtension::zeta_p() const {
    ExtElement z = zero();
    std::vector<PadicNumber> c = z.coeffs();
    c[0] = PadicNumber::from_integer(1, p_, kdigits_);
    c[1] = PadicNumber::from_integer(1, p_, kdigits_);
    return ExtElement(p_, std::move(c));
}

ExtElement PadicExtension::pi_shift(const ExtElement& x, int64_t k) const {
    if (k == 0) return x;
    if (k > 0) return x * pi().pow(k);
    // pi^{-1} = pi^{p-2} * (pi^{p-1})^{-1}, with pi^{p-1} = -p * U for a unit U,
    // so pi^{-1} = pi^{p-2} * U^{-1} * (-p)^{-1}. U is a pi-adic unit, so its
    // Newton inverse does not recurse back into pi_shift.
    ExtElement pipm1 = pi().pow(p_ - 1);
    PadicNumber minus_p_inv = PadicNumber::from_integer(-p_, p_, kdigits_ + 1).inverse();
    ExtElement unit = pipm1.scaled(minus_p_inv);
    ExtElement pim1 = (pi().pow(p_ - 2) * unit.inverse()).scaled(minus_p_inv);
    return x * pim1.pow(-k);
}

ExtElement ExtElement::inverse() const {
    const int64_t v = pi_valuation();
    if (v >= known_pi_precision())
        throw std::domain_error("inverse of (indistinguishable-from-)zero element");
    PadicExtension E(p_, known_pi_precision());
    ExtElement x = *this;
    if (v != 0) x = E.pi_shift(x, -v);  // now a unit
    // Newton: y <- y(2 - x y), seeded from the constant coordinate
    ExtElement y = E.embed(x.coeffs()[0].inverse());
    ExtElement two = E.from_int(2);
    for (int it = 0; it < 64; ++it) {
        ExtElement yn = y * (two - x * y);
        ExtElement err = x * yn - E.one();
        y = yn;
        if (err.pi_valuation() >= err.known_pi_precision()) break;
    }
    if (v != 0) y = E.pi_shift(y, -v);
    return y;
}

ExtElement PadicExtension::hensel_pi_root() const {
    // Newton for f(X) = X^{p-1} + p, starting at X = pi.
    ExtElement x = pi();
    ExtElement pcst = from_int(static_cast<int64_t>(p_));
    for (int it = 0; it < 200; ++it) {
        ExtElement fx = x.pow(p_ - 1) + pcst;
        if (fx.pi_valuation() >= fx.known_pi_precision()) break;
        ExtElement fpx = x.pow(p_ - 2).scaled(PadicNumber::from_integer(p_ - 1, p_, kdigits_));
        x = x - fx * fpx.inverse();
    }
    return x;
}

}  // namespace epslocal
