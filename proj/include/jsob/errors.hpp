#ifndef JSOB_ERRORS_HPP
#define JSOB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jsob {

/// Malformed or out-of-contract user input (config files, literals).
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A polynomial expected to be a polynomial in theta_x is not invariant
/// under the corresponding involution.
class NotInvariant : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class NotSkew : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Exact division or cancellation that must succeed did not.
class NotDivisible : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

class ParameterOutOfRange : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// The Casorati determinant vanishes at some n in the checked range.
class DegenerateConfig : public std::runtime_error {
   public:
    DegenerateConfig(long n, const std::string& what)
        : std::runtime_error(what), n_(n) {}
    long n() const noexcept { return n_; }

   private:
    long n_;
};

/// One of the three hypotheses needed to assemble the operator failed.
/// which() is 0, 1 or 2 for S*Omega polynomial, M_h skew, and P_S existence.
class AssumptionFailed : public std::runtime_error {
   public:
    AssumptionFailed(int which, const std::string& what)
        : std::runtime_error(what), which_(which) {}
    int which() const noexcept { return which_; }

   private:
    int which_;
};

class EigenMismatch : public std::runtime_error {
   public:
    EigenMismatch(long n, const std::string& what) : std::runtime_error(what), n_(n) {}
    long n() const noexcept { return n_; }

   private:
    long n_;
};

}  // namespace jsob

#endif  // JSOB_ERRORS_HPP
