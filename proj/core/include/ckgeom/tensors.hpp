#pragma once

#include "ckgeom/errors.hpp"
#include "ckgeom/jet.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace ckgeom {

/// Dense n^Rank table of jets sharing one workspace. Indices are 0-based.
template <std::size_t Rank>
class JetTable {
public:
    JetTable() = default;
    JetTable(int dim, int degree_cap)
        : dim_(dim), degree_cap_(degree_cap), entries_(power(dim), Jet::zero(dim, degree_cap)) {}

    int dim() const noexcept { return dim_; }
    int degree_cap() const noexcept { return degree_cap_; }

    template <typename... Index>
    Jet& at(Index... idx) {
        static_assert(sizeof...(Index) == Rank);
        return entries_[flat({static_cast<int>(idx)...})];
    }
    template <typename... Index>
    const Jet& at(Index... idx) const {
        static_assert(sizeof...(Index) == Rank);
        return entries_[flat({static_cast<int>(idx)...})];
    }

    std::span<const Jet> entries() const noexcept { return entries_; }
    std::span<Jet> entries() noexcept { return entries_; }

    /// Minimum valid order over all entries.
    int valid_order() const {
        int v = degree_cap_;
        for (const auto& e : entries_) {
            v = std::min(v, e.valid_order());
        }
        return v;
    }

private:
    static std::size_t power(int dim) {
        std::size_t p = 1;
        for (std::size_t r = 0; r < Rank; ++r) {
            p *= static_cast<std::size_t>(dim);
        }
        return p;
    }
    std::size_t flat(const std::array<int, Rank>& idx) const {
        std::size_t f = 0;
        for (int i : idx) {
            if (i < 0 || i >= dim_) {
                throw DimensionMismatch("tensor index out of range");
            }
            f = f * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
        }
        return f;
    }

    int dim_ = 0;
    int degree_cap_ = 0;
    std::vector<Jet> entries_;
};

/// tau_j, D_j, alpha_i, ...
using OneForm = JetTable<1>;
/// r_ij, Ric_ij, s_ij, g_ij, ...
using Bilinear = JetTable<2>;
/// (nabla g)_ijk
using CubicForm = JetTable<3>;
/// T^k_ij
using TorsionTensor = JetTable<3>;

/// Antisymmetric (0,2) table; writes keep a_ji = -a_ij and a_ii = 0.
class TwoForm {
public:
    TwoForm() = default;
    TwoForm(int dim, int degree_cap) : table_(dim, degree_cap) {}

    int dim() const noexcept { return table_.dim(); }
    int degree_cap() const noexcept { return table_.degree_cap(); }
    const Jet& at(int i, int j) const { return table_.at(i, j); }
    void set(int i, int j, const Jet& value) {
        if (i == j) {
            throw PreconditionError("not-antisymmetric", "two-form diagonal must vanish");
        }
        table_.at(i, j) = value;
        table_.at(j, i) = -value;
    }
    const Bilinear& as_bilinear() const noexcept { return table_; }

private:
    Bilinear table_;
};

/// Christoffel symbols: at(k, i, j) is Gamma^k_ij, i.e. nabla_{d_i} d_j =
/// sum_k Gamma^k_ij d_k. A symmetric connection keeps Gamma^k_ij = Gamma^k_ji
/// on every write.
class Connection {
public:
    Connection() = default;
    Connection(int dim, int degree_cap, bool symmetric = false)
        : table_(dim, degree_cap), symmetric_(symmetric) {}

    int dim() const noexcept { return table_.dim(); }
    int degree_cap() const noexcept { return table_.degree_cap(); }
    bool symmetric() const noexcept { return symmetric_; }

    const Jet& at(int k, int i, int j) const { return table_.at(k, i, j); }
    void set(int k, int i, int j, const Jet& value) {
        table_.at(k, i, j) = value;
        if (symmetric_) {
            table_.at(k, j, i) = value;
        }
    }
    const JetTable<3>& table() const noexcept { return table_; }
    int valid_order() const { return table_.valid_order(); }

    /// Whether Gamma^k_ij == Gamma^k_ji for all stored coefficients.
    bool lower_indices_symmetric() const;

    /// Reinterprets a table as a symmetric connection; throws when it is not.
    static Connection symmetric_from(const Connection& c);

private:
    JetTable<3> table_;
    bool symmetric_ = false;
};

/// Symmetric bilinear form with invertible constant-term matrix.
class Metric {
public:
    Metric() = default;
    /// Validates exact symmetry and invertibility of g(0).
    explicit Metric(Bilinear g);

    int dim() const noexcept { return g_.dim(); }
    int degree_cap() const noexcept { return g_.degree_cap(); }
    const Jet& at(int i, int j) const { return g_.at(i, j); }
    const Bilinear& components() const noexcept { return g_; }
    int valid_order() const { return g_.valid_order(); }

    /// g_ij(0) == delta_ij.
    bool normalized_at_zero() const;

    static Metric identity(int dim, int degree_cap);

private:
    Bilinear g_;
};

} // namespace ckgeom
