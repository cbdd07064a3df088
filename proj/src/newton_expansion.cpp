#include "rgdiff/newton_expansion.hpp"

#include <stdexcept>
#include <string>

namespace rgdiff {

SampledSequence::SampledSequence(std::vector<Complex> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("sampled sequence must not be empty");
    }
}

SampledSequence::SampledSequence(std::span<const double> values)
    : SampledSequence(std::vector<Complex>(values.begin(), values.end())) {}

SampledSequence::SampledSequence(std::initializer_list<Complex> values)
    : SampledSequence(std::vector<Complex>(values)) {}

SampledSequence SampledSequence::generate(std::size_t last_index,
                                          const std::function<Complex(long)>& gen) {
    std::vector<Complex> v(last_index + 1);
    for (std::size_t n = 0; n <= last_index; ++n) {
        v[n] = gen(static_cast<long>(n));
    }
    return SampledSequence(std::move(v));
}

namespace {

void require_window(const SampledSequence& seq, std::size_t n, int order) {
    if (order < 0) {
        throw std::invalid_argument("difference order must be non-negative");
    }
    if (n + static_cast<std::size_t>(order) > seq.last_index()) {
        throw std::out_of_range("forward difference of order " + std::to_string(order) +
                                " at index " + std::to_string(n) +
                                " exceeds sequence ending at " +
                                std::to_string(seq.last_index()));
    }
}

}  // namespace

Complex forward_difference(const SampledSequence& seq, int order, std::size_t n) {
    require_window(seq, n, order);
    const auto window = seq.values().subspan(n, static_cast<std::size_t>(order) + 1);
    std::vector<Complex> work(window.begin(), window.end());
    // After pass p, work[0..order-p] holds Delta^p y(n..).
    for (int p = 0; p < order; ++p) {
        const auto len = work.size() - 1 - static_cast<std::size_t>(p);
        for (std::size_t i = 0; i < len; ++i) {
            work[i] = work[i + 1] - work[i];
        }
    }
    return work[0];
}

double binomial_coefficient(long x, int k) {
    if (k < 0) {
        throw std::invalid_argument("binomial order must be non-negative");
    }
    // Each partial product is itself a binomial coefficient, so the division is
    // exact in integer arithmetic; long double keeps it exact a bit longer.
    long double r = 1.0L;
    for (int j = 0; j < k; ++j) {
        r = r * static_cast<long double>(x - j) / static_cast<long double>(j + 1);
    }
    return static_cast<double>(r);
}

std::vector<Complex> newton_coefficients(const SampledSequence& seq, std::size_t m,
                                         int max_order) {
    require_window(seq, m, max_order);
    const auto window = seq.values().subspan(m, static_cast<std::size_t>(max_order) + 1);
    std::vector<Complex> work(window.begin(), window.end());
    std::vector<Complex> out;
    out.reserve(work.size());
    out.push_back(work[0]);
    for (int p = 0; p < max_order; ++p) {
        const auto len = work.size() - 1 - static_cast<std::size_t>(p);
        for (std::size_t i = 0; i < len; ++i) {
            work[i] = work[i + 1] - work[i];
        }
        out.push_back(work[0]);
    }
    return out;
}

Complex newton_partial_sum(const SampledSequence& seq, std::size_t m, long n, int max_order) {
    const auto diffs = newton_coefficients(seq, m, max_order);
    const long offset = n - static_cast<long>(m);
    Complex sum{0.0, 0.0};
    for (int k = 0; k <= max_order; ++k) {
        sum += binomial_coefficient(offset, k) * diffs[static_cast<std::size_t>(k)];
    }
    return sum;
}

Complex TwoScaleExpansion::value(long n, long m) const {
    Complex sum{0.0, 0.0};
    for (int k = 0; k <= order; ++k) {
        sum += coefficient(k, m) * binomial_coefficient(n - m, k);
    }
    return sum;
}

double check_envelope_constancy(const TwoScaleExpansion& exp, long n, long m) {
    return std::abs(exp.value(n, m + 1) - exp.value(n, m));
}

}  // namespace rgdiff
