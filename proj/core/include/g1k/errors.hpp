#ifndef G1K_ERRORS_HPP
#define G1K_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace g1k {

/// Base class for all mathematical errors raised by the library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Group-ring operands live on incompatible exponent lattices, or a
/// requested exponent does not lie on the context lattice.
class lattice_mismatch : public error {
 public:
  using error::error;
};

/// Exact division by a linear form left a nonzero remainder.
class not_divisible : public error {
 public:
  using error::error;
};

/// Division by a power series whose constant term vanishes.
class zero_constant_term : public error {
 public:
  using error::error;
};

/// Variable substitution by a non-invertible matrix.
class singular_matrix : public error {
 public:
  using error::error;
};

/// A Seifert matrix whose off-diagonal entries do not satisfy v12 - v21 = 1.
class bad_symplectic : public error {
 public:
  using error::error;
};

/// Seifert matrices must have even size 2g.
class odd_dimension : public error {
 public:
  using error::error;
};

/// Input polynomial is not homogeneous.
class not_homogeneous : public error {
 public:
  using error::error;
};

/// Homogeneous input has the wrong degree (or an unsupported one).
class wrong_degree : public error {
 public:
  using error::error;
};

/// Recovery formulas degenerate when 7*lambda' = 1.
class degenerate_lambda : public error {
 public:
  using error::error;
};

/// The constant term of a raw series does not match +-|H1|.
class wrong_constant_term : public error {
 public:
  using error::error;
};

/// A series fails the structural constraints of an Alexander series of a
/// genus two rational homology handlebody.
class not_alexander_form : public error {
 public:
  using error::error;
};

/// Strict mode requires odd integer surface framings.
class parity_error : public error {
 public:
  using error::error;
};

/// A coefficient above the validity frontier of a truncated series was read.
class degree_out_of_range : public error {
 public:
  using error::error;
};

}  // namespace g1k

#endif  // G1K_ERRORS_HPP
