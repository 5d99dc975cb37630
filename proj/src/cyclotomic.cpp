#include "epslocal/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace epslocal {

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }
int64_t lcm64(int64_t a, int64_t b) { return a / std::gcd(a, b) * b; }

int64_t euler_phi(int64_t n) {
    int64_t r = n;
    for (int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            r -= r / d;
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

int64_t least_primitive_root(int64_t p) {
    for (int64_t g = 2; g < p; ++g) {
        int64_t x = g % p, o = 1;
        while (x != 1) { x = x * g % p; ++o; }
        if (o == p - 1) return g;
    }
    throw std::invalid_argument("no primitive root (p not prime?)");
}

namespace {

// exact division by a monic divisor over int64
std::vector<int64_t> poly_divide_exact(std::vector<int64_t> num,
                                       const std::vector<int64_t>& den) {
    const int64_t dn = static_cast<int64_t>(num.size()) - 1;
    const int64_t dd = static_cast<int64_t>(den.size()) - 1;
    if (den.back() != 1) throw std::logic_error("divisor not monic");
    std::vector<int64_t> q(dn - dd + 1, 0);
    for (int64_t d = dn; d >= dd; --d) {
        int64_t lead = num[d];
        if (lead == 0) continue;
        q[d - dd] = lead;
        for (int64_t i = 0; i <= dd; ++i) num[d - dd + i] -= lead * den[i];
    }
    for (int64_t i = 0; i < dd; ++i)
        if (num[i] != 0) throw std::logic_error("inexact polynomial division");
    return q;
}

std::map<int64_t, std::vector<int64_t>>& phi_cache() {
    static std::map<int64_t, std::vector<int64_t>> c;
    return c;
}
std::mutex& phi_mutex() {
    static std::mutex m;
    return m;
}

std::vector<int64_t> compute_cyclotomic(int64_t N) {
    std::vector<int64_t> num(N + 1, 0);
    num[0] = -1;
    num[N] = 1;
    for (int64_t d = 1; d < N; ++d) {
        if (N % d == 0) {
            num = poly_divide_exact(std::move(num), cyclotomic_polynomial(d));
        }
    }
    return num;
}

}  // namespace

const std::vector<int64_t>& cyclotomic_polynomial(int64_t N) {
    if (N < 1) throw std::invalid_argument("cyclotomic_polynomial: N >= 1");
    {
        std::lock_guard<std::mutex> lk(phi_mutex());
        auto it = phi_cache().find(N);
        if (it != phi_cache().end()) return it->second;
    }
    // compute outside the lock (recursive calls take the lock themselves)
    std::vector<int64_t> v = compute_cyclotomic(N);
    std::lock_guard<std::mutex> lk(phi_mutex());
    return phi_cache().emplace(N, std::move(v)).first->second;
}

CycloElement::CycloElement(int64_t N) : N_(N), c_(euler_phi(N), 0) {
    if (N < 1) throw std::invalid_argument("root order must be positive");
}

CycloElement CycloElement::from_integer(int64_t N, int64_t v) {
    CycloElement e(N);
    e.c_[0] = v;
    return e;
}

CycloElement reduce_mod_cyclotomic(int64_t N, std::vector<int64_t> raw) {
    std::vector<int64_t> folded(N, 0);
    for (size_t i = 0; i < raw.size(); ++i) folded[i % N] += raw[i];
    const auto& phi = cyclotomic_polynomial(N);
    const int64_t deg = static_cast<int64_t>(phi.size()) - 1;
    for (int64_t d = N - 1; d >= deg; --d) {
        int64_t lead = folded[d];
        if (lead == 0) continue;
        folded[d] = 0;
        for (int64_t i = 0; i < deg; ++i) folded[d - deg + i] -= lead * phi[i];
    }
    CycloElement e(N);
    for (int64_t i = 0; i < deg; ++i) e.c_[i] = folded[i];
    return e;
}

CycloElement CycloElement::root_of_unity(int64_t N, int64_t k) {
    k = ((k % N) + N) % N;
    std::vector<int64_t> raw(k + 1, 0);
    raw[k] = 1;
    return reduce_mod_cyclotomic(N, std::move(raw));
}

bool CycloElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](int64_t v) { return v == 0; });
}

CycloElement CycloElement::operator+(const CycloElement& o) const {
    if (N_ != o.N_) {
        int64_t M = lcm64(N_, o.N_);
        return inflate_to(M) + o.inflate_to(M);
    }
    CycloElement r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

CycloElement CycloElement::operator-(const CycloElement& o) const { return *this + (-o); }

CycloElement CycloElement::operator-() const {
    CycloElement r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

CycloElement CycloElement::scaled(int64_t s) const {
    CycloElement r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
}

CycloElement CycloElement::operator*(const CycloElement& o) const {
    if (N_ != o.N_) {
        int64_t M = lcm64(N_, o.N_);
        return inflate_to(M) * o.inflate_to(M);
    }
    const size_t n = c_.size();
    std::vector<int64_t> raw(2 * n - 1, 0);
    for (size_t i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (o.c_[j] == 0) continue;
            __int128 t = static_cast<__int128>(raw[i + j]) +
                         static_cast<__int128>(c_[i]) * o.c_[j];
            if (t > INT64_MAX || t < INT64_MIN) throw std::overflow_error("cyclotomic overflow");
            raw[i + j] = static_cast<int64_t>(t);
        }
    }
    return reduce_mod_cyclotomic(N_, std::move(raw));
}

bool CycloElement::operator==(const CycloElement& o) const {
    if (N_ == o.N_) return c_ == o.c_;
    int64_t M = lcm64(N_, o.N_);
    return inflate_to(M).c_ == o.inflate_to(M).c_;
}

CycloElement CycloElement::galois_conjugate(int64_t s) const {
    s = ((s % N_) + N_) % N_;
    if (N_ > 1 && gcd64(s, N_) != 1)
        throw std::invalid_argument("galois_conjugate: s not coprime to N");
    std::vector<int64_t> raw(N_, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        raw[(static_cast<int64_t>(i) * s) % N_] += c_[i];
    }
    return reduce_mod_cyclotomic(N_, std::move(raw));
}

CycloElement CycloElement::inflate_to(int64_t M) const {
    if (M == N_) return *this;
    if (M % N_ != 0) throw std::invalid_argument("inflate_to: N does not divide M");
    const int64_t step = M / N_;
    std::vector<int64_t> raw(static_cast<size_t>(M), 0);
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) raw[i * step] += c_[i];
    return reduce_mod_cyclotomic(M, std::move(raw));
}

CycloElement CycloElement::divided_by(int64_t s) const {
    if (s == 0) throw std::invalid_argument("division by zero");
    CycloElement r = *this;
    for (auto& v : r.c_) {
        if (v % s != 0) throw std::domain_error("divided_by: inexact division");
        v /= s;
    }
    return r;
}

std::complex<double> CycloElement::complex_embed(int64_t j) const {
    int64_t jj = ((j % N_) + N_) % N_;
    if (N_ > 1 && gcd64(jj, N_) != 1)
        throw std::invalid_argument("complex_embed: invalid embedding index");
    const double two_pi = 6.283185307179586476925286766559;
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        double ang = two_pi *
                     static_cast<double>((static_cast<__int128>(i) * jj) % N_) /
                     static_cast<double>(N_);
        acc += static_cast<double>(c_[i]) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

ExtElement CycloElement::padic_embed(int64_t p, const PadicExtension& E) const {
    if (E.prime() != p) throw std::invalid_argument("padic_embed: extension prime mismatch");
    int64_t Np = 1;
    int64_t N1 = N_;
    if (N_ % p == 0) { Np = p; N1 = N_ / p; }
    if (N1 % p == 0 || (p - 1) % N1 != 0)
        throw std::invalid_argument("padic_embed: N incompatible with p");
    const int64_t g = least_primitive_root(p);
    PadicNumber t = teichmuller_lift(g, p, E.digit_precision());
    PadicNumber zN1 = t.pow((p - 1) / N1);
    // zeta_N^k = zeta_{N1}^{k v} * zeta_p^{k u}, from 1 = v Np + u N1 (mod N)
    int64_t u = 0, v = 1;
    if (Np == p) {
        v = 0;
        for (int64_t x = 0; x < N1; ++x)
            if ((x * Np) % N1 == 1 % N1) { v = x; break; }
        for (int64_t x = 0; x < Np; ++x)
            if ((x * N1) % Np == 1) { u = x; break; }
    }
    ExtElement acc = E.zero();
    ExtElement zp = E.zeta_p();
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        int64_t k = static_cast<int64_t>(i);
        PadicNumber part1 = zN1.pow((k * v) % N1) *
                            PadicNumber::from_integer(c_[i], p, E.digit_precision());
        ExtElement term = E.embed(part1);
        if (Np == p) term = term * zp.pow((k * u) % p);
        acc = acc + term;
    }
    return acc;
}

std::string CycloElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i];
        if (i == 1) os << "*z" << N_;
        if (i > 1) os << "*z" << N_ << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

CycloElement exact_sqrt_of_prime(int64_t p) {
    if (p == 2) {
        return CycloElement::root_of_unity(8, 1) + CycloElement::root_of_unity(8, 7);
    }
    std::vector<int64_t> raw(p, 0);
    for (int64_t x = 0; x < p; ++x) raw[(x * x) % p] += 1;
    CycloElement S = reduce_mod_cyclotomic(p, std::move(raw));
    if (p % 4 == 1) return S;
    CycloElement mi = CycloElement::root_of_unity(4 * p, 3 * p);  // zeta_4^3 = -i
    return mi * S.inflate_to(4 * p);
}

}  // namespace epslocal
