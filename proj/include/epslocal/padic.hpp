#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace epslocal {

// Truncated p-adic number p^valuation * u, where the unit u is known to
// `precision` base-p digits (least significant first, leading digit nonzero).
// Zero is a distinguished state carrying a "precision floor": the value is
// only known to be divisible by p^valuation.
class PadicNumber {
public:
    PadicNumber() = default;

    static PadicNumber zero(int64_t p, int64_t precision_floor);
    static PadicNumber from_integer(int64_t n, int64_t p, int precision);
    // x with x*den = num to the stated precision. A denominator divisible by p
    // is rejected unless allow_negative_valuation is set.
    static PadicNumber from_rational(int64_t num, int64_t den, int64_t p, int precision,
                                     bool allow_negative_valuation = false);
    static PadicNumber from_unit_digits(int64_t p, int64_t valuation,
                                        std::vector<uint32_t> digits);

    int64_t prime() const { return p_; }
    bool is_zero() const { return zero_; }
    int64_t valuation() const { return val_; }  // precision floor when zero
    int precision() const { return static_cast<int>(digits_.size()); }
    const std::vector<uint32_t>& unit_digits() const { return digits_; }
    // exponent K such that the value is known modulo p^K
    int64_t known_abs_precision() const;

    PadicNumber operator+(const PadicNumber& o) const;
    PadicNumber operator-(const PadicNumber& o) const;
    PadicNumber operator*(const PadicNumber& o) const;
    PadicNumber operator/(const PadicNumber& o) const;
    PadicNumber operator-() const;
    PadicNumber inverse() const;
    PadicNumber pow(int64_t e) const;

    // x == y modulo p^min(known precisions); throws if nothing is certifiable.
    bool equals(const PadicNumber& o) const;

    // unit residue mod p^k (requires valuation 0 and k <= precision, p^k < 2^63)
    uint64_t unit_residue(int k) const;
    // reduce the stored precision to at most k digits
    PadicNumber truncated(int k) const;

    std::string to_string() const;

private:
    int64_t p_ = 0;
    bool zero_ = true;
    int64_t val_ = 0;
    std::vector<uint32_t> digits_;

    void normalize();
    friend PadicNumber add_aligned(const PadicNumber& a, const PadicNumber& b, bool sub);
};

// The Teichmueller lift of u mod p: the (p-1)-th root of unity congruent to u,
// obtained by iterating x -> x^p to stabilization.
PadicNumber teichmuller_lift(int64_t u, int64_t p, int precision);

class PadicExtension;

// Element of Q_p(zeta_p) written in the basis 1, pi, ..., pi^{p-2},
// pi = zeta_p - 1, with PadicNumber coordinates (negative valuations allowed,
// so pi-powers of either sign are representable).
class ExtElement {
public:
    ExtElement() = default;
    ExtElement(int64_t p, std::vector<PadicNumber> coeffs);

    int64_t prime() const { return p_; }
    const std::vector<PadicNumber>& coeffs() const { return c_; }

    ExtElement operator+(const ExtElement& o) const;
    ExtElement operator-(const ExtElement& o) const;
    ExtElement operator*(const ExtElement& o) const;
    ExtElement operator-() const;
    ExtElement scaled(const PadicNumber& s) const;
    ExtElement inverse() const;
    ExtElement pow(int64_t e) const;

    // pi-adic valuation of the element as represented; if the element is
    // indistinguishable from zero, returns known_pi_precision().
    int64_t pi_valuation() const;
    // the element is known modulo pi^K for this K
    int64_t known_pi_precision() const;
    bool is_zero_to_precision() const;
    // certified equality through pi^T; throws when T exceeds what is known
    bool equals_to(const ExtElement& o, int64_t T) const;

    std::string to_string() const;

private:
    int64_t p_ = 0;
    std::vector<PadicNumber> c_;
};

// Arithmetic context for Q_p(zeta_p): fixes per-coordinate digit precision and
// provides the distinguished elements. All elements are immutable values.
class PadicExtension {
public:
    // pi_precision is quoted in powers of pi; coordinates carry
    // ceil(pi_precision/(p-1)) base-p digits.
    PadicExtension(int64_t p, int64_t pi_precision);

    int64_t prime() const { return p_; }
    int64_t pi_precision() const { return piprec_; }
    int digit_precision() const { return kdigits_; }

    ExtElement zero() const;
    ExtElement one() const;
    ExtElement from_int(int64_t n) const;
    ExtElement embed(const PadicNumber& x) const;
    ExtElement pi() const;
    ExtElement zeta_p() const;   // 1 + pi
    // x * pi^k for k of either sign
    ExtElement pi_shift(const ExtElement& x, int64_t k) const;
    // The root of X^{p-1} = -p congruent to pi modulo pi^2 (Hensel/Newton).
    // This is the branch of (-p)^{1/(p-1)} used by the Gauss-sum identities.
    ExtElement hensel_pi_root() const;

private:
    int64_t p_;
    int64_t piprec_;
    int kdigits_;
};

PadicExtension build_extension(int64_t p, int64_t pi_precision);

}  // namespace epslocal
