#pragma once

#include "ckgeom/multi_index.hpp"
#include "ckgeom/rational.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ckgeom {

/// Truncated power series around 0 in `dim()` variables with exact rational
/// coefficients, stored densely for every monomial of total degree <=
/// `degree_cap()`.
///
/// `valid_order()` is the total degree up to which the coefficients are
/// known to be correct; coefficients above it may be garbage left over from
/// truncation and are ignored by `equal_to_order` / `is_zero_to_order` as
/// long as callers compare at orders <= valid_order. Arithmetic propagates
/// the order conservatively (products and sums take the minimum, derivatives
/// lose one degree, antiderivatives gain one).
///
/// Axes are 0-based: axis 0 is the coordinate x^1.
class Jet {
public:
    /// Zero jet in 0 variables with cap 0.
    Jet();

    static Jet zero(int dim, int degree_cap);
    static Jet constant(int dim, int degree_cap, const Rational& value);
    static Jet variable(int dim, int degree_cap, int axis);
    static Jet monomial(int dim, int degree_cap, std::span<const int> exponents,
                        const Rational& coefficient);
    /// Builds a jet from dense coefficients in layout order.
    static Jet from_coefficients(int dim, int degree_cap, std::vector<Rational> coefficients,
                                 int valid_order);

    int dim() const noexcept { return layout_->dim(); }
    int degree_cap() const noexcept { return layout_->degree_cap(); }
    int valid_order() const noexcept { return valid_order_; }
    const MonomialLayout& layout() const noexcept { return *layout_; }
    const std::shared_ptr<const MonomialLayout>& layout_ptr() const noexcept { return layout_; }

    std::span<const Rational> coefficients() const noexcept { return coeffs_; }
    const Rational& coefficient(std::size_t index) const { return coeffs_[index]; }
    /// Coefficient of the given monomial; zero when it lies above the cap.
    Rational coefficient(std::span<const int> exponents) const;
    void set_coefficient(std::span<const int> exponents, const Rational& value);
    void set_coefficient(std::size_t index, const Rational& value) { coeffs_[index] = value; }

    const Rational& constant_term() const { return coeffs_.front(); }

    /// Copy with a different validity order (clamped into [0, degree_cap]).
    Jet with_valid_order(int order) const;

    /// True iff every stored coefficient is zero (including above valid order).
    bool is_zero() const;

    Jet& operator+=(const Jet& other);
    Jet& operator-=(const Jet& other);
    Jet& operator*=(const Rational& factor);

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator-(Jet a) {
        for (auto& c : a.coeffs_) {
            c = -c;
        }
        return a;
    }
    friend Jet operator*(const Rational& factor, Jet a) { return a *= factor; }
    friend Jet operator*(Jet a, const Rational& factor) { return a *= factor; }
    friend Jet operator*(const Jet& a, const Jet& b);

private:
    Jet(std::shared_ptr<const MonomialLayout> layout, int valid_order);
    void require_same_workspace(const Jet& other, const char* op) const;

    std::shared_ptr<const MonomialLayout> layout_;
    std::vector<Rational> coeffs_;
    int valid_order_ = 0;
};

/// Named forms of the arithmetic operators.
inline Jet add(const Jet& a, const Jet& b) { return a + b; }
inline Jet sub(const Jet& a, const Jet& b) { return a - b; }
inline Jet scale(const Rational& c, const Jet& a) { return c * a; }
inline Jet mul(const Jet& a, const Jet& b) { return a * b; }

/// Compares all coefficients of total degree <= order. Both jets must share a
/// workspace.
bool equal_to_order(const Jet& a, const Jet& b, int order);
bool is_zero_to_order(const Jet& a, int order);

/// Bit-exact identity: same workspace, same valid order, same coefficients.
bool identical(const Jet& a, const Jet& b);

/// Formal partial derivative along `axis`; valid order drops by one.
Jet partial(const Jet& a, int axis);

/// Primitive in x^1 whose restriction to x^1 = 0 vanishes.
Jet antiderivative_x1(const Jet& a);

/// Multiplies by the coordinate x^{axis+1}.
Jet multiply_by_variable(const Jet& a, int axis);

/// Multiplicative inverse; throws SingularJet when the constant term is zero.
Jet reciprocal(const Jet& a);

/// exp(a) for a jet with zero constant term (PreconditionError otherwise).
Jet exp_jet(const Jet& a);

/// Multiplies each coefficient of total degree m by 1 / (m + shift).
/// Building block of the radial homotopy operators.
Jet radial_scale(const Jet& a, int shift);

/// Re-homes `a` into a workspace with a different degree cap: truncates when
/// shrinking, pads with zeros when growing. The valid order is kept (capped).
Jet with_degree_cap(const Jet& a, int degree_cap);

/// Part of `a` made of monomials whose x^1-exponent equals `power`.
Jet x1_degree_part(const Jet& a, int power);

/// Deterministic polynomial with integer coefficients in
/// [-coeff_bound, coeff_bound] on monomials of degree <= degree_bound.
/// The result is exact: valid order equals the degree cap.
Jet random_poly(std::uint64_t seed, int dim, int degree_cap, int degree_bound, int coeff_bound);

/// Same, but with zero constant term.
Jet random_poly_vanishing_at_zero(std::uint64_t seed, int dim, int degree_cap, int degree_bound,
                                  int coeff_bound);

/// Human-readable polynomial, e.g. "1 + 1/2*x1^2 - x1*x2".
std::string to_string(const Jet& a);

/// Initial data on the hyperplane x^1 = 0: a jet in the variables
/// x^2..x^n, remembering the dimension n of the space it is promoted into.
class SliceJet {
public:
    SliceJet() = default;
    SliceJet(Jet values, int target_dim);

    static SliceJet zero(int target_dim, int degree_cap);
    static SliceJet constant(int target_dim, int degree_cap, const Rational& value);

    const Jet& values() const noexcept { return values_; }
    int target_dim() const noexcept { return target_dim_; }
    int degree_cap() const noexcept { return values_.degree_cap(); }

private:
    Jet values_;
    int target_dim_ = 1;
};

/// Sets x^1 = 0.
SliceJet restrict_x1(const Jet& a);

/// Embeds slice data as a jet independent of x^1.
Jet promote(const SliceJet& s);

bool equal_to_order(const SliceJet& a, const SliceJet& b, int order);

} // namespace ckgeom
