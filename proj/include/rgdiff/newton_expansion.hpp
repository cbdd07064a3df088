#pragma once

/**
 * @file newton_expansion.hpp
 * @brief Forward-difference calculus and Newton-Maclaurin series.
 *
 * A sequence y(n) sampled at n = 0..N can be re-expanded around any base
 * index m as
 *
 *     y(n) = sum_k binom(n - m, k) * Delta^k y(m),
 *
 * with Delta y(n) = y(n+1) - y(n). The series terminates for polynomial
 * sequences and converges for geometric ones with |lambda - 1| < 1.
 *
 * Differences are taken by repeated subtraction. Cancellation grows like
 * 2^k, so on noisy data anything past k ~ 20 is meaningless; the tests in
 * this project stay at k <= 10.
 */

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace rgdiff {

using Complex = std::complex<double>;

/// Finite sequence y(0), ..., y(N). Never empty.
class SampledSequence {
public:
    explicit SampledSequence(std::vector<Complex> values);
    explicit SampledSequence(std::span<const double> values);
    SampledSequence(std::initializer_list<Complex> values);

    /// Samples y(n) = gen(n) for n = 0..last_index.
    static SampledSequence generate(std::size_t last_index,
                                    const std::function<Complex(long)>& gen);

    [[nodiscard]] std::size_t last_index() const noexcept { return values_.size() - 1; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] const Complex& operator[](std::size_t n) const { return values_[n]; }
    [[nodiscard]] std::span<const Complex> values() const noexcept { return values_; }

private:
    std::vector<Complex> values_;
};

/// Delta^k y(n). Throws std::out_of_range when n + k exceeds the sequence.
[[nodiscard]] Complex forward_difference(const SampledSequence& seq, int order, std::size_t n);

/// Generalized binomial x(x-1)...(x-k+1)/k!; integer-valued for integer x.
[[nodiscard]] double binomial_coefficient(long x, int k);

/// Delta^0 y(m), ..., Delta^K y(m).
[[nodiscard]] std::vector<Complex> newton_coefficients(const SampledSequence& seq,
                                                       std::size_t m, int max_order);

/// sum_{k=0..K} binom(n - m, k) Delta^k y(m). The target n may lie anywhere,
/// including before m or past the end of the sequence.
[[nodiscard]] Complex newton_partial_sum(const SampledSequence& seq, std::size_t m, long n,
                                         int max_order);

/// Two-scale expansion y(n, m) = sum_{k<=K} Y_k(m, eps) binom(n - m, k).
///
/// `coefficient(k, m)` supplies Y_k(m, eps) with eps already baked in.
struct TwoScaleExpansion {
    int order = 0;
    std::function<Complex(int k, long m)> coefficient;

    [[nodiscard]] Complex value(long n, long m) const;
};

/// |y(n, m+1) - y(n, m)|. For an exact expansion this vanishes identically;
/// otherwise it measures the combined eps- and K-truncation error, and the
/// caller picks the tolerance.
[[nodiscard]] double check_envelope_constancy(const TwoScaleExpansion& exp, long n, long m);

}  // namespace rgdiff
