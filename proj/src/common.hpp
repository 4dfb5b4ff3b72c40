#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace srbm {

using Complex = std::complex<double>;

// Error taxonomy shared by the core and mirrored by the C API status codes.
enum class ErrorCode {
    InvalidArgument,
    Parameter,     // invalid model parameters (e.g. non-PD covariance)
    Domain,        // evaluation outside the operation's domain
    Recurrent,     // transform requested for a recurrent instance
    Proximity,     // evaluation point too close to the contour for the mode
    Truncation,    // contour tolerance unreachable within the node budget
    Pole,          // on-curve zero of a kernel denominator / pole of W
    Contract,      // user-supplied data violates a stated contract
    Resolution,    // phase unwrapping too coarse
    Reflection,    // no feasible LCP active set
    Internal
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

// Pairwise (tree) summation; keeps floating-point drift O(log n) and makes
// threaded and serial reductions bit-identical for the same element order.
template <typename T>
T pairwise_sum(const T* data, std::size_t n) {
    if (n == 0) return T{};
    if (n <= 8) {
        T s = data[0];
        for (std::size_t i = 1; i < n; ++i) s += data[i];
        return s;
    }
    std::size_t half = n / 2;
    return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

template <typename T>
T pairwise_sum(const std::vector<T>& v) {
    return pairwise_sum(v.data(), v.size());
}

}  // namespace srbm
