/*
   Copyright 2026 The hbspace Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#ifndef HB_POLY_HPP
#define HB_POLY_HPP

#include <complex>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace hb {

using cplx = std::complex<double>;

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

/**
 * Dense univariate polynomial with complex coefficients, lowest degree first.
 *
 * Coefficients are stored unnormalized. Exact trailing zeros are always
 * trimmed, so the coefficient at index degree() is nonzero unless the
 * polynomial is zero. Near-zero trailing terms produced by cancellation
 * are kept until trimmed() is called explicitly.
 */
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<cplx> coeffs);
    Poly(std::initializer_list<cplx> coeffs);

    static Poly constant(cplx c);
    static Poly monomial(int k, cplx c = 1.0);
    /// lead * prod (z - r_i)
    static Poly from_roots(std::span<const cplx> roots, cplx lead = 1.0);
    /// (z - r)^k
    static Poly linear_power(cplx r, int k);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    std::span<const cplx> coeffs() const noexcept { return c_; }

    /// Coefficient k, zero outside [0, degree].
    cplx operator[](int k) const noexcept {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : cplx{};
    }
    cplx leading() const noexcept { return c_.empty() ? cplx{} : c_.back(); }

    /// Horner evaluation.
    cplx operator()(cplx z) const noexcept;
    /// Sum_k |c_k| |z|^k, the natural scale of the rounding error at z.
    double magnitude_at(cplx z) const noexcept;
    /// max |c_k|
    double scale() const noexcept;
    double l2_norm() const noexcept;

    Poly derivative() const;
    /// z^d * conj(p(1/conj(z))): coefficient k becomes conj(c_{d-k}). Requires d >= degree().
    Poly reflect(int d) const;
    Poly conj_coeffs() const;
    /// p(c z)
    Poly scaled_argument(cplx c) const;
    /// Drop trailing coefficients with magnitude <= rel * scale().
    Poly trimmed(double rel) const;
    /// Keep only the coefficients of degree <= n.
    Poly truncated(int n) const;
    /// Taylor coefficients at z0: t_j = p^{(j)}(z0) / j!, j = 0..degree.
    std::vector<cplx> taylor_at(cplx z0) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(cplx s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= -1.0; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, cplx s) { return a *= s; }
    friend Poly operator*(cplx s, Poly a) { return a *= s; }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim_exact();
    std::vector<cplx> c_;
};

/// Quotient and remainder with deg(rem) < deg(divisor).
std::pair<Poly, Poly> divmod(const Poly& p, const Poly& divisor);

/// z^k p
Poly shift_up(const Poly& p, int k = 1);
/// (p(z) - p(0)) / z
Poly backward_shift(const Poly& p);

/// max_k |p_k - q_k| / max(scale(p), scale(q)), zero when both are zero.
double relative_distance(const Poly& p, const Poly& q);

/// Sum_k p_k conj(q_k): the Hardy-space pairing of two polynomials.
cplx h2_pairing(const Poly& p, const Poly& q);

}  // namespace hb

#endif  // HB_POLY_HPP
