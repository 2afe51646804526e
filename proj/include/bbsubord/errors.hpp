#ifndef BBSUBORD_ERRORS_HPP
#define BBSUBORD_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace bbsubord {

// Input outside a function's domain (branch cut, unit-disc violation, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A denominator collapsed below the pole threshold. Carries the offending
// point and the modulus that tripped the check.
class pole_error : public std::runtime_error {
public:
    pole_error(const std::string& what, std::complex<double> z, double modulus)
        : std::runtime_error(what + " at z=(" + std::to_string(z.real()) + "," +
                             std::to_string(z.imag()) + "), |den|=" + std::to_string(modulus)),
          z_(z), modulus_(modulus) {}
    std::complex<double> where() const { return z_; }
    double modulus() const { return modulus_; }

private:
    std::complex<double> z_;
    double modulus_;
};

// Quadrature or iteration failed to reach the requested tolerance.
// Carries the residual that was actually achieved.
class numeric_error : public std::runtime_error {
public:
    numeric_error(const std::string& what, double residual)
        : std::runtime_error(what + " (achieved residual " + std::to_string(residual) + ")"),
          residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

// Structurally invalid parameters (ordering violations, out-of-range ids).
class parameter_error : public std::invalid_argument {
public:
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace bbsubord

#endif
