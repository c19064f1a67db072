#pragma once

#include "ckgeom/jet.hpp"

#include <vector>

namespace ckgeom {

/// Row-major square or rectangular matrix of jets.
using JetMatrix = std::vector<std::vector<Jet>>;

/// Solves A X = B over jets by Gauss-Jordan elimination. Pivots are chosen
/// among rows whose entry has a nonzero constant term, so A is invertible as
/// a jet matrix iff its constant-term matrix is invertible.
///
/// Throws SingularJet when no such pivot exists.
JetMatrix solve_linear(JetMatrix a, JetMatrix b);

/// Inverse of a square jet matrix.
JetMatrix inverse(const JetMatrix& a);

/// Exact inverse of a rational matrix; an empty matrix when singular.
std::vector<std::vector<Rational>> rational_inverse(std::vector<std::vector<Rational>> a);

} // namespace ckgeom
