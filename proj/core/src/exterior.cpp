#include "ckgeom/geometry.hpp"

namespace ckgeom {

bool two_form_closed(const TwoForm& a, int order) {
    const int n = a.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                const Jet da = partial(a.at(i, j), k) + partial(a.at(j, k), i) +
                               partial(a.at(k, i), j);
                if (!is_zero_to_order(da, order)) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool one_form_closed(const OneForm& d, int order) {
    const int n = d.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!is_zero_to_order(partial(d.at(i), j) - partial(d.at(j), i), order)) {
                return false;
            }
        }
    }
    return true;
}

OneForm primitive_of_two_form(const TwoForm& a) {
    const int n = a.dim();
    const int check_order = a.as_bilinear().valid_order() - 1;
    if (check_order >= 0 && !two_form_closed(a, check_order)) {
        throw PreconditionError("not-closed", "primitive_of_two_form: two-form is not closed");
    }
    OneForm alpha(n, a.degree_cap());
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (i == j) {
                continue;
            }
            alpha.at(j) += Rational(2) * radial_scale(multiply_by_variable(a.at(j, i), i), 1);
        }
    }
    return alpha;
}

Jet potential_of_one_form(const OneForm& d) {
    const int n = d.dim();
    const int check_order = d.valid_order() - 1;
    if (check_order >= 0 && !one_form_closed(d, check_order)) {
        throw PreconditionError("not-closed", "potential_of_one_form: one-form is not closed");
    }
    Jet f = Jet::zero(n, d.degree_cap());
    for (int i = 0; i < n; ++i) {
        f += radial_scale(multiply_by_variable(d.at(i), i), 0);
    }
    return f;
}

OneForm gradient(const Jet& f) {
    OneForm g(f.dim(), f.degree_cap());
    for (int k = 0; k < f.dim(); ++k) {
        g.at(k) = partial(f, k);
    }
    return g;
}

TwoForm antisymmetrized_derivative(const OneForm& beta) {
    const int n = beta.dim();
    TwoForm a(n, beta.degree_cap());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            a.set(i, j, Rational(1, 2) * (partial(beta.at(i), j) - partial(beta.at(j), i)));
        }
    }
    return a;
}

} // namespace ckgeom
