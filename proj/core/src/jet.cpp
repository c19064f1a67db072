#include "ckgeom/jet.hpp"

#include "ckgeom/errors.hpp"

#include <algorithm>
#include <random>

namespace ckgeom {

Jet::Jet() : Jet(MonomialLayout::get(0, 0), 0) {}

Jet::Jet(std::shared_ptr<const MonomialLayout> layout, int valid_order)
    : layout_(std::move(layout)), coeffs_(layout_->size()), valid_order_(valid_order) {}

Jet Jet::zero(int dim, int degree_cap) {
    return Jet(MonomialLayout::get(dim, degree_cap), degree_cap);
}

Jet Jet::constant(int dim, int degree_cap, const Rational& value) {
    Jet j = zero(dim, degree_cap);
    j.coeffs_[0] = value;
    return j;
}

Jet Jet::variable(int dim, int degree_cap, int axis) {
    if (axis < 0 || axis >= dim) {
        throw DimensionMismatch("variable axis out of range");
    }
    std::vector<int> e(static_cast<std::size_t>(dim), 0);
    e[static_cast<std::size_t>(axis)] = 1;
    return monomial(dim, degree_cap, e, 1);
}

Jet Jet::monomial(int dim, int degree_cap, std::span<const int> exponents,
                  const Rational& coefficient) {
    Jet j = zero(dim, degree_cap);
    j.set_coefficient(exponents, coefficient);
    return j;
}

Jet Jet::from_coefficients(int dim, int degree_cap, std::vector<Rational> coefficients,
                           int valid_order) {
    Jet j = zero(dim, degree_cap);
    if (coefficients.size() != j.coeffs_.size()) {
        throw DimensionMismatch("coefficient vector does not match the workspace size");
    }
    j.coeffs_ = std::move(coefficients);
    j.valid_order_ = std::clamp(valid_order, 0, degree_cap);
    return j;
}

Rational Jet::coefficient(std::span<const int> exponents) const {
    if (static_cast<int>(exponents.size()) != dim()) {
        throw DimensionMismatch("exponent tuple has wrong length");
    }
    if (auto idx = layout_->index_of(exponents)) {
        return coeffs_[*idx];
    }
    return 0;
}

void Jet::set_coefficient(std::span<const int> exponents, const Rational& value) {
    if (static_cast<int>(exponents.size()) != dim()) {
        throw DimensionMismatch("exponent tuple has wrong length");
    }
    auto idx = layout_->index_of(exponents);
    if (!idx) {
        throw DimensionMismatch("monomial " + to_key(exponents) + " exceeds the degree cap");
    }
    coeffs_[*idx] = value;
}

Jet Jet::with_valid_order(int order) const {
    Jet j = *this;
    j.valid_order_ = std::clamp(order, 0, degree_cap());
    return j;
}

bool Jet::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

void Jet::require_same_workspace(const Jet& other, const char* op) const {
    if (layout_ != other.layout_) {
        throw DimensionMismatch(std::string(op) + ": workspace mismatch (n=" +
                                std::to_string(dim()) + ",D=" + std::to_string(degree_cap()) +
                                " vs n=" + std::to_string(other.dim()) +
                                ",D=" + std::to_string(other.degree_cap()) + ")");
    }
}

Jet& Jet::operator+=(const Jet& other) {
    require_same_workspace(other, "add");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (other.coeffs_[i] != 0) {
            coeffs_[i] += other.coeffs_[i];
        }
    }
    valid_order_ = std::min(valid_order_, other.valid_order_);
    return *this;
}

Jet& Jet::operator-=(const Jet& other) {
    require_same_workspace(other, "sub");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (other.coeffs_[i] != 0) {
            coeffs_[i] -= other.coeffs_[i];
        }
    }
    valid_order_ = std::min(valid_order_, other.valid_order_);
    return *this;
}

Jet& Jet::operator*=(const Rational& factor) {
    for (auto& c : coeffs_) {
        if (c != 0) {
            c *= factor;
        }
    }
    return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
    a.require_same_workspace(b, "mul");
    const MonomialLayout& layout = *a.layout_;
    Jet out(a.layout_, std::min(a.valid_order_, b.valid_order_));

    std::vector<std::size_t> nonzero_b;
    nonzero_b.reserve(b.coeffs_.size());
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j] != 0) {
            nonzero_b.push_back(j);
        }
    }
    if (nonzero_b.empty()) {
        return out;
    }
    Rational term;
    const int cap = layout.degree_cap();
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        const Rational& ai = a.coeffs_[i];
        if (ai == 0) {
            continue;
        }
        const std::size_t limit = layout.count_up_to(cap - layout.degree(i));
        for (std::size_t j : nonzero_b) {
            if (j >= limit) {
                break;
            }
            mpq_mul(term.get_mpq_t(), ai.get_mpq_t(), b.coeffs_[j].get_mpq_t());
            Rational& target = out.coeffs_[layout.product(i, j)];
            mpq_add(target.get_mpq_t(), target.get_mpq_t(), term.get_mpq_t());
        }
    }
    return out;
}

bool equal_to_order(const Jet& a, const Jet& b, int order) {
    if (a.layout_ptr() != b.layout_ptr()) {
        throw DimensionMismatch("equal_to_order: workspace mismatch");
    }
    const std::size_t limit = a.layout().count_up_to(order);
    for (std::size_t i = 0; i < limit; ++i) {
        if (a.coefficient(i) != b.coefficient(i)) {
            return false;
        }
    }
    return true;
}

bool is_zero_to_order(const Jet& a, int order) {
    const std::size_t limit = a.layout().count_up_to(order);
    for (std::size_t i = 0; i < limit; ++i) {
        if (a.coefficient(i) != 0) {
            return false;
        }
    }
    return true;
}

bool identical(const Jet& a, const Jet& b) {
    if (a.dim() != b.dim() || a.degree_cap() != b.degree_cap() ||
        a.valid_order() != b.valid_order()) {
        return false;
    }
    return std::equal(a.coefficients().begin(), a.coefficients().end(), b.coefficients().begin());
}

Jet partial(const Jet& a, int axis) {
    if (axis < 0 || axis >= a.dim()) {
        throw DimensionMismatch("partial: axis " + std::to_string(axis) + " out of range for n=" +
                                std::to_string(a.dim()));
    }
    const MonomialLayout& layout = a.layout();
    std::vector<Rational> out(layout.size());
    for (std::size_t i = 0; i < layout.size(); ++i) {
        const Rational& c = a.coefficient(i);
        if (c == 0) {
            continue;
        }
        const std::size_t target = layout.lowered(axis, i);
        if (target != MonomialLayout::npos) {
            out[target] = c * layout.exponents(i)[static_cast<std::size_t>(axis)];
        }
    }
    return Jet::from_coefficients(a.dim(), a.degree_cap(), std::move(out),
                                  std::max(a.valid_order() - 1, 0));
}

Jet antiderivative_x1(const Jet& a) {
    if (a.dim() < 1) {
        throw DimensionMismatch("antiderivative_x1 needs at least one variable");
    }
    const MonomialLayout& layout = a.layout();
    std::vector<Rational> out(layout.size());
    for (std::size_t i = 0; i < layout.size(); ++i) {
        const Rational& c = a.coefficient(i);
        if (c == 0) {
            continue;
        }
        const std::size_t target = layout.raised(0, i);
        if (target != MonomialLayout::npos) {
            out[target] = c / (layout.exponents(i)[0] + 1);
        }
    }
    return Jet::from_coefficients(a.dim(), a.degree_cap(), std::move(out),
                                  std::min(a.valid_order() + 1, a.degree_cap()));
}

Jet multiply_by_variable(const Jet& a, int axis) {
    if (axis < 0 || axis >= a.dim()) {
        throw DimensionMismatch("multiply_by_variable: axis out of range");
    }
    const MonomialLayout& layout = a.layout();
    std::vector<Rational> out(layout.size());
    for (std::size_t i = 0; i < layout.size(); ++i) {
        const Rational& c = a.coefficient(i);
        if (c == 0) {
            continue;
        }
        const std::size_t target = layout.raised(axis, i);
        if (target != MonomialLayout::npos) {
            out[target] = c;
        }
    }
    return Jet::from_coefficients(a.dim(), a.degree_cap(), std::move(out),
                                  std::min(a.valid_order() + 1, a.degree_cap()));
}

Jet reciprocal(const Jet& a) {
    const Rational& a0 = a.constant_term();
    if (a0 == 0) {
        throw SingularJet("reciprocal of a jet with zero constant term");
    }
    const Rational inv0 = 1 / a0;
    const Jet one = Jet::constant(a.dim(), a.degree_cap(), 1);
    // 1/a = (1/a0) * sum_k u^k with u = 1 - a/a0, which has no constant term.
    const Jet u = one - inv0 * a;
    Jet sum = one;
    for (int k = 0; k < a.degree_cap(); ++k) {
        sum = one + u * sum;
    }
    return inv0 * sum.with_valid_order(a.valid_order());
}

Jet exp_jet(const Jet& a) {
    if (a.constant_term() != 0) {
        throw PreconditionError("nonzero-constant-term",
                                "exp_jet requires a jet with zero constant term");
    }
    const Jet one = Jet::constant(a.dim(), a.degree_cap(), 1);
    Jet sum = one;
    for (int k = a.degree_cap(); k >= 1; --k) {
        sum = one + Rational(1, k) * (a * sum);
    }
    return sum.with_valid_order(a.valid_order());
}

Jet radial_scale(const Jet& a, int shift) {
    const MonomialLayout& layout = a.layout();
    std::vector<Rational> out(a.coefficients().begin(), a.coefficients().end());
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (out[i] != 0) {
            out[i] /= layout.degree(i) + shift;
        }
    }
    return Jet::from_coefficients(a.dim(), a.degree_cap(), std::move(out), a.valid_order());
}

Jet with_degree_cap(const Jet& a, int degree_cap) {
    Jet out = Jet::zero(a.dim(), degree_cap);
    const std::size_t limit = std::min(a.layout().size(), out.layout().size());
    // Graded layouts: the first min(size) monomials are exactly the shared ones.
    for (std::size_t i = 0; i < limit; ++i) {
        const auto e = a.layout().exponents(i);
        if (a.coefficient(i) != 0) {
            out.set_coefficient(e, a.coefficient(i));
        }
    }
    return out.with_valid_order(std::min(a.valid_order(), degree_cap));
}

Jet x1_degree_part(const Jet& a, int power) {
    const MonomialLayout& layout = a.layout();
    std::vector<Rational> out(layout.size());
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (layout.exponents(i)[0] == power) {
            out[i] = a.coefficient(i);
        }
    }
    return Jet::from_coefficients(a.dim(), a.degree_cap(), std::move(out), a.valid_order());
}

namespace {

Jet random_poly_impl(std::uint64_t seed, int dim, int degree_cap, int degree_bound,
                     int coeff_bound, bool skip_constant) {
    if (degree_bound > degree_cap) {
        throw PreconditionError("degree-bound-exceeds-cap",
                                "random_poly: degree bound exceeds the workspace cap");
    }
    Jet out = Jet::zero(dim, degree_cap);
    if (coeff_bound <= 0 || degree_bound < 0) {
        return out;
    }
    // mt19937_64 is fully specified by the standard; the modulo reduction keeps
    // the stream identical across standard library implementations.
    std::mt19937_64 engine(seed);
    const auto span = static_cast<std::uint64_t>(2 * coeff_bound + 1);
    const std::size_t limit = out.layout().count_up_to(degree_bound);
    for (std::size_t i = skip_constant ? 1 : 0; i < limit; ++i) {
        const auto draw = static_cast<long>(engine() % span) - coeff_bound;
        out.set_coefficient(i, Rational(draw));
    }
    return out;
}

} // namespace

Jet random_poly(std::uint64_t seed, int dim, int degree_cap, int degree_bound, int coeff_bound) {
    return random_poly_impl(seed, dim, degree_cap, degree_bound, coeff_bound, false);
}

Jet random_poly_vanishing_at_zero(std::uint64_t seed, int dim, int degree_cap, int degree_bound,
                                  int coeff_bound) {
    return random_poly_impl(seed, dim, degree_cap, degree_bound, coeff_bound, true);
}

std::string to_string(const Jet& a) {
    std::string out;
    const MonomialLayout& layout = a.layout();
    for (std::size_t i = 0; i < layout.size(); ++i) {
        const Rational& c = a.coefficient(i);
        if (c == 0) {
            continue;
        }
        std::string mono;
        const auto e = layout.exponents(i);
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += '*';
            }
            mono += "x" + std::to_string(k + 1);
            if (e[k] > 1) {
                mono += "^" + std::to_string(e[k]);
            }
        }
        const Rational magnitude = abs(c);
        std::string coeff = magnitude.get_str();
        if (!out.empty()) {
            out += c < 0 ? " - " : " + ";
        } else if (c < 0) {
            out += "-";
        }
        if (mono.empty()) {
            out += coeff;
        } else if (magnitude == 1) {
            out += mono;
        } else {
            out += coeff + "*" + mono;
        }
    }
    return out.empty() ? "0" : out;
}

SliceJet::SliceJet(Jet values, int target_dim) : values_(std::move(values)), target_dim_(target_dim) {
    if (target_dim < 1 || values_.dim() != target_dim - 1) {
        throw DimensionMismatch("slice jet must have dimension target_dim - 1");
    }
}

SliceJet SliceJet::zero(int target_dim, int degree_cap) {
    return SliceJet(Jet::zero(target_dim - 1, degree_cap), target_dim);
}

SliceJet SliceJet::constant(int target_dim, int degree_cap, const Rational& value) {
    return SliceJet(Jet::constant(target_dim - 1, degree_cap, value), target_dim);
}

SliceJet restrict_x1(const Jet& a) {
    if (a.dim() < 1) {
        throw DimensionMismatch("restrict_x1 needs at least one variable");
    }
    Jet slice = Jet::zero(a.dim() - 1, a.degree_cap());
    const MonomialLayout& layout = a.layout();
    for (std::size_t i = 0; i < layout.size(); ++i) {
        const auto e = layout.exponents(i);
        if (e[0] == 0 && a.coefficient(i) != 0) {
            slice.set_coefficient(e.subspan(1), a.coefficient(i));
        }
    }
    return SliceJet(slice.with_valid_order(a.valid_order()), a.dim());
}

Jet promote(const SliceJet& s) {
    const int n = s.target_dim();
    Jet out = Jet::zero(n, s.degree_cap());
    const MonomialLayout& layout = s.values().layout();
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < layout.size(); ++i) {
        const Rational& c = s.values().coefficient(i);
        if (c == 0) {
            continue;
        }
        const auto se = layout.exponents(i);
        std::copy(se.begin(), se.end(), e.begin() + 1);
        out.set_coefficient(e, c);
    }
    return out.with_valid_order(s.values().valid_order());
}

bool equal_to_order(const SliceJet& a, const SliceJet& b, int order) {
    return a.target_dim() == b.target_dim() && equal_to_order(a.values(), b.values(), order);
}

} // namespace ckgeom
