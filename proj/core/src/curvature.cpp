#include "ckgeom/geometry.hpp"

#include "ckgeom/linalg.hpp"

#include <algorithm>

namespace ckgeom {

namespace {

// target += sign * a * b, skipping the product when a factor is the zero jet
// but still lowering the valid order as the product would.
void add_product(Jet& target, const Jet& a, const Jet& b, int sign) {
    if (a.is_zero() || b.is_zero()) {
        target = target.with_valid_order(
            std::min({target.valid_order(), a.valid_order(), b.valid_order()}));
        return;
    }
    if (sign > 0) {
        target += a * b;
    } else {
        target -= a * b;
    }
}

// Q_ij = sum_{k,l} [ G^l_ij G^k_kl - G^l_kj G^k_il ] = -Lambda_ij.
Bilinear ricci_quadratic_part(const Connection& c) {
    const int n = c.dim();
    const OneForm trace = divergence_form(c);
    Bilinear q(n, c.degree_cap());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Jet& entry = q.at(i, j);
            for (int l = 0; l < n; ++l) {
                add_product(entry, c.at(l, i, j), trace.at(l), +1);
                for (int k = 0; k < n; ++k) {
                    add_product(entry, c.at(l, k, j), c.at(k, i, l), -1);
                }
            }
        }
    }
    return q;
}

} // namespace

bool Connection::lower_indices_symmetric() const {
    const int n = dim();
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (!equal_to_order(at(k, i, j), at(k, j, i), degree_cap())) {
                    return false;
                }
            }
        }
    }
    return true;
}

Connection Connection::symmetric_from(const Connection& c) {
    if (!c.lower_indices_symmetric()) {
        throw PreconditionError("connection-not-symmetric",
                                "connection has torsion (G^k_ij != G^k_ji)");
    }
    Connection out = c;
    out.symmetric_ = true;
    return out;
}

Bilinear ricci_derivative_part(const Connection& c) {
    const int n = c.dim();
    Bilinear out(n, c.degree_cap());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Jet& entry = out.at(i, j);
            for (int k = 0; k < n; ++k) {
                entry += partial(c.at(k, i, j), k);
                entry -= partial(c.at(k, k, j), i);
            }
        }
    }
    return out;
}

Bilinear lambda_term(const Connection& c) {
    Bilinear q = ricci_quadratic_part(c);
    for (auto& e : q.entries()) {
        e = -e;
    }
    return q;
}

Bilinear ricci(const Connection& c) {
    Bilinear out = ricci_derivative_part(c);
    const Bilinear q = ricci_quadratic_part(c);
    for (std::size_t idx = 0; idx < out.entries().size(); ++idx) {
        out.entries()[idx] += q.entries()[idx];
    }
    return out;
}

TorsionTensor torsion(const Connection& c) {
    const int n = c.dim();
    TorsionTensor t(n, c.degree_cap());
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                t.at(k, i, j) = c.at(k, i, j) - c.at(k, j, i);
            }
        }
    }
    return t;
}

OneForm torsion_trace(const Connection& c) {
    const int n = c.dim();
    OneForm tau(n, c.degree_cap());
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            tau.at(j) += c.at(i, i, j) - c.at(i, j, i);
        }
    }
    return tau;
}

OneForm divergence_form(const Connection& c) {
    const int n = c.dim();
    OneForm d(n, c.degree_cap());
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            d.at(j) += c.at(k, k, j);
        }
    }
    return d;
}

std::pair<Bilinear, TwoForm> split(const Bilinear& b) {
    const int n = b.dim();
    Bilinear s(n, b.degree_cap());
    TwoForm a(n, b.degree_cap());
    const Rational half(1, 2);
    for (int i = 0; i < n; ++i) {
        s.at(i, i) = b.at(i, i);
        for (int j = i + 1; j < n; ++j) {
            const Jet sym = half * (b.at(i, j) + b.at(j, i));
            s.at(i, j) = sym;
            s.at(j, i) = sym;
            a.set(i, j, half * (b.at(i, j) - b.at(j, i)));
        }
    }
    return {std::move(s), std::move(a)};
}

} // namespace ckgeom
