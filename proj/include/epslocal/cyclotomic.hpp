#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "epslocal/padic.hpp"

namespace epslocal {

int64_t euler_phi(int64_t n);
int64_t gcd64(int64_t a, int64_t b);
int64_t lcm64(int64_t a, int64_t b);
// least primitive root mod p; the module-wide fixed generator of F_p^x
int64_t least_primitive_root(int64_t p);

// Phi_N as integer coefficient vector (constant term first); cached, safe for
// concurrent lookup.
const std::vector<int64_t>& cyclotomic_polynomial(int64_t N);

// Exact element of Z[zeta_N] in the power basis of Phi_N (phi(N) coordinates].
class CycloElement {
public:
    CycloElement() = default;
    explicit CycloElement(int64_t N);  // zero
    static CycloElement from_integer(int64_t N, int64_t v);
    static CycloElement root_of_unity(int64_t N, int64_t k);  // zeta_N^k

    int64_t order() const { return N_; }
    const std::vector<int64_t>& coords() const { return c_; }
    bool is_zero() const;

    CycloElement operator+(const CycloElement& o) const;
    CycloElement operator-(const CycloElement& o) const;
    CycloElement operator*(const CycloElement& o) const;
    CycloElement operator-() const;
    CycloElement scaled(int64_t s) const;
    bool operator==(const CycloElement& o) const;
    bool operator!=(const CycloElement& o) const { return !(*this == o); }

    // image under zeta_N -> zeta_N^s, gcd(s, N) = 1
    CycloElement galois_conjugate(int64_t s) const;
    CycloElement conj() const { return galois_conjugate(N_ - 1); }
    // re-express in Z[zeta_M] for N | M
    CycloElement inflate_to(int64_t M) const;
    // exact division by an integer; throws if any coordinate is not divisible
    CycloElement divided_by(int64_t s) const;

    // evaluation at zeta_N = exp(2 pi i j / N), gcd(j, N) = 1
    std::complex<double> complex_embed(int64_t j = 1) const;

    // the fixed p-adic embedding: zeta_{N'} -> teichmuller(g)^{(p-1)/N'} for the
    // prime-to-p part N' and zeta_p -> 1 + pi; requires N | (p-1)p
    ExtElement padic_embed(int64_t p, const PadicExtension& E) const;

    std::string to_string() const;

private:
    int64_t N_ = 1;
    std::vector<int64_t> c_;

    friend CycloElement reduce_mod_cyclotomic(int64_t N, std::vector<int64_t> raw);
};

// reduce a raw coefficient vector over zeta_N powers (any length) into the
// canonical power basis
CycloElement reduce_mod_cyclotomic(int64_t N, std::vector<int64_t> raw);

// +sqrt(p) as an exact cyclotomic element (Gauss's evaluation of the quadratic
// Gauss sum fixes the sign): order p for p = 1 mod 4, order 4p for p = 3 mod 4,
// order 8 for p = 2.
CycloElement exact_sqrt_of_prime(int64_t p);

}  // namespace epslocal
