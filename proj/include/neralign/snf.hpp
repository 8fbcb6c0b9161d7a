#ifndef NERALIGN_SNF_HPP
#define NERALIGN_SNF_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace neralign {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Smith decomposition D = U * A * V with U, V unimodular and D diagonal,
/// nonnegative, with each diagonal entry dividing the next.
struct SmithResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;

  std::vector<BigInt> diagonal() const;
  /// Diagonal entries > 1 (the invariant factors of the cokernel's torsion).
  std::vector<BigInt> nontrivial_factors() const;
};

SmithResult smith_normal_form(IntMatrix a);

/// One integral solution of A x = b, if any.
std::optional<std::vector<BigInt>> solve_integer(const IntMatrix& a,
                                                 const std::vector<BigInt>& b);

/// Least k >= 1 with k*b in the column span of A over the integers; nothing
/// if no multiple of b lies in the span.
std::optional<BigInt> order_in_cokernel(const IntMatrix& a,
                                        const std::vector<BigInt>& b);

}  // namespace neralign

#endif  // NERALIGN_SNF_HPP
