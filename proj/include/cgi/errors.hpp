#pragma once

#include <stdexcept>
#include <string>

namespace cgi {

// Input violating a documented schema or precondition.
struct MalformedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A kernel was asked to work over a ring it does not support.
struct UnsupportedRing : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Closure of the kernel subgroup exceeded the enumeration cap.
struct KernelNotFinite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A stated hypothesis (p-power order, acyclicity, relator validity, ...) fails.
struct HypothesisViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Brute-force search exceeded its configured bound.
struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CertificateInvalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An element did not decompose over the coset data it should lie in.
struct DecompositionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvarianceViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A provable identity failed, or a theorem instance was falsified.
// This is never caught and converted; it must abort the run loudly.
struct Falsification : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace cgi
