#pragma once

#include "ckgeom/errors.hpp"
#include "ckgeom/jet.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ckgeom {

/// Right-hand side of a CK system. Receives the current unknowns in label
/// order and returns one jet per unknown. It may differentiate the unknowns
/// along x^2..x^n only; the residual check is what catches a violation.
using RhsEvaluator = std::function<std::vector<Jet>(std::span<const Jet>)>;

/// Called after each Picard iteration with the iteration number (1-based)
/// and the iterate.
using PicardObserver = std::function<void(int, std::span<const Jet>)>;

/// (U^i)_1 = H^i(x, U, (U)_j for j >= 2),  U^i(0, x^2, ..) = phi^i.
struct FirstOrderSystem {
    int dim = 0;
    int degree_cap = 0;
    std::vector<std::string> labels;
    std::vector<SliceJet> initial;
    RhsEvaluator rhs;
};

/// (U^i)_11 = H^i(...), U^i = phi^i and (U^i)_1 = psi^i on x^1 = 0.
struct SecondOrderSystem {
    int dim = 0;
    int degree_cap = 0;
    std::vector<std::string> labels;
    std::vector<SliceJet> initial;
    std::vector<SliceJet> initial_derivative;
    RhsEvaluator rhs;
};

struct CKSolution {
    std::vector<std::string> labels;
    std::vector<Jet> values;
    int valid_order = 0;
    int iterations = 0;

    /// Jet of the unknown with the given label; throws std::out_of_range.
    const Jet& operator[](const std::string& label) const;
};

CKSolution solve_first_order(const FirstOrderSystem& sys, const PicardObserver& observer = {});
CKSolution solve_second_order(const SecondOrderSystem& sys, const PicardObserver& observer = {});

/// (U)_1 - H(U), per unknown.
std::vector<Jet> residual_first_order(const FirstOrderSystem& sys, std::span<const Jet> u);
/// (U)_11 - H(U), per unknown.
std::vector<Jet> residual_second_order(const SecondOrderSystem& sys, std::span<const Jet> u);

/// True iff every residual vanishes to total degree `order`.
bool residual_vanishes(std::span<const Jet> residual, int order);

} // namespace ckgeom
