#pragma once

// Mechanical assembly of the prescribed-Ricci CK systems: every Christoffel
// symbol is an affine expression (known jet + rational combination of CK
// unknowns), each Ricci equation is written in terms of those expressions,
// and the x^1-derivatives of the unknowns are isolated by a rational matrix.

#include "ckgeom/ck_solver.hpp"
#include "ckgeom/tensors.hpp"

#include <map>
#include <optional>
#include <vector>

namespace ckgeom::detail {

struct Slot {
    int k, i, j;
    auto operator<=>(const Slot&) const = default;
};

struct AffineForm {
    Jet known;
    std::map<int, Rational> unknowns;  // CK unknown index -> coefficient
};

class ConnectionModel {
public:
    ConnectionModel(int dim, int degree_cap, bool symmetric);

    int dim() const noexcept { return dim_; }
    int degree_cap() const noexcept { return cap_; }

    /// Registers a CK unknown and returns its index.
    int add_unknown(Slot s);
    void set_free(Slot s, const Jet& value);
    /// value = known + sum coef * Gamma(slot).
    void set_determined(Slot s, const Jet& known, std::vector<std::pair<Rational, Slot>> terms);

    AffineForm resolve(Slot s) const;
    int unknown_count() const noexcept { return static_cast<int>(unknown_slots_.size()); }
    const std::vector<Slot>& unknown_slots() const noexcept { return unknown_slots_; }

    Connection assemble(std::span<const Jet> u) const;

private:
    struct Determined {
        Jet known;
        std::vector<std::pair<Rational, Slot>> terms;
    };
    Slot canonical(Slot s) const;

    int dim_, cap_;
    bool symmetric_;
    std::map<Slot, Jet> free_;
    std::map<Slot, int> unknown_index_;
    std::vector<Slot> unknown_slots_;
    std::map<Slot, Determined> determined_;
    mutable std::map<Slot, AffineForm> cache_;
};

/// sum coef * (Gamma(slot))_axis + Q_row(Gamma) = target, with Q_ij = -Lambda_ij.
struct RicciEquation {
    int row_i, row_j;
    std::vector<std::tuple<Rational, Slot, int>> derivative_terms;
    Jet target;
};

class RicciCKAssembly {
public:
    /// Throws std::logic_error when the x^1-derivative matrix is singular
    /// (the equations are not in CK form for this choice of unknowns).
    RicciCKAssembly(const ConnectionModel& model, std::vector<RicciEquation> equations);

    std::vector<Jet> rhs(std::span<const Jet> u) const;

private:
    struct Atom {
        Rational coef;
        int unknown;
        int axis;
    };
    const ConnectionModel& model_;
    std::vector<RicciEquation> equations_;
    std::vector<Jet> known_;                 // target - derivative of known parts
    std::vector<std::vector<Atom>> atoms_;   // non-x^1 derivatives of unknowns
    std::vector<std::vector<Rational>> solve_;  // inverse of the x^1 matrix
};

} // namespace ckgeom::detail
