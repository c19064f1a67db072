#include "linear_forms.hpp"

#include "ckgeom/geometry.hpp"
#include "ckgeom/linalg.hpp"

#include <stdexcept>

namespace ckgeom::detail {

ConnectionModel::ConnectionModel(int dim, int degree_cap, bool symmetric)
    : dim_(dim), cap_(degree_cap), symmetric_(symmetric) {}

Slot ConnectionModel::canonical(Slot s) const {
    if (symmetric_ && s.i > s.j) {
        std::swap(s.i, s.j);
    }
    return s;
}

int ConnectionModel::add_unknown(Slot s) {
    s = canonical(s);
    const int idx = static_cast<int>(unknown_slots_.size());
    unknown_index_[s] = idx;
    unknown_slots_.push_back(s);
    cache_.clear();
    return idx;
}

void ConnectionModel::set_free(Slot s, const Jet& value) {
    free_[canonical(s)] = value;
    cache_.clear();
}

void ConnectionModel::set_determined(Slot s, const Jet& known,
                                     std::vector<std::pair<Rational, Slot>> terms) {
    determined_[canonical(s)] = Determined{known, std::move(terms)};
    cache_.clear();
}

AffineForm ConnectionModel::resolve(Slot s) const {
    s = canonical(s);
    if (const auto it = cache_.find(s); it != cache_.end()) {
        return it->second;
    }
    AffineForm form{Jet::zero(dim_, cap_), {}};
    if (const auto u = unknown_index_.find(s); u != unknown_index_.end()) {
        form.unknowns[u->second] = 1;
    } else if (const auto f = free_.find(s); f != free_.end()) {
        form.known = f->second;
    } else if (const auto d = determined_.find(s); d != determined_.end()) {
        form.known = d->second.known;
        for (const auto& [coef, slot] : d->second.terms) {
            const AffineForm inner = resolve(slot);
            form.known += coef * inner.known;
            for (const auto& [idx, c] : inner.unknowns) {
                form.unknowns[idx] += coef * c;
            }
        }
        std::erase_if(form.unknowns, [](const auto& kv) { return kv.second == 0; });
    }
    // Slots never mentioned are identically zero.
    cache_.emplace(s, form);
    return form;
}

Connection ConnectionModel::assemble(std::span<const Jet> u) const {
    Connection c(dim_, cap_, symmetric_);
    for (int k = 0; k < dim_; ++k) {
        for (int i = 0; i < dim_; ++i) {
            for (int j = symmetric_ ? i : 0; j < dim_; ++j) {
                const AffineForm form = resolve({k, i, j});
                Jet v = form.known;
                for (const auto& [idx, coef] : form.unknowns) {
                    v += coef * u[static_cast<std::size_t>(idx)];
                }
                c.set(k, i, j, v);
            }
        }
    }
    return c;
}

RicciCKAssembly::RicciCKAssembly(const ConnectionModel& model, std::vector<RicciEquation> equations)
    : model_(model), equations_(std::move(equations)) {
    const std::size_t m = equations_.size();
    const int unknowns = model_.unknown_count();
    if (m != static_cast<std::size_t>(unknowns)) {
        throw std::logic_error("Ricci CK assembly: equation and unknown counts differ");
    }
    std::vector<std::vector<Rational>> x1(m, std::vector<Rational>(m));
    known_.reserve(m);
    atoms_.resize(m);
    for (std::size_t e = 0; e < m; ++e) {
        Jet known = equations_[e].target;
        std::map<std::pair<int, int>, Rational> atoms;
        for (const auto& [coef, slot, axis] : equations_[e].derivative_terms) {
            const AffineForm form = model_.resolve(slot);
            known -= coef * partial(form.known, axis);
            for (const auto& [idx, c] : form.unknowns) {
                if (axis == 0) {
                    x1[e][static_cast<std::size_t>(idx)] += coef * c;
                } else {
                    atoms[{idx, axis}] += coef * c;
                }
            }
        }
        for (const auto& [key, c] : atoms) {
            if (c != 0) {
                atoms_[e].push_back({c, key.first, key.second});
            }
        }
        known_.push_back(std::move(known));
    }
    solve_ = rational_inverse(x1);
    if (solve_.empty() && m > 0) {
        throw std::logic_error("Ricci CK assembly: x^1-derivative matrix is singular");
    }
}

std::vector<Jet> RicciCKAssembly::rhs(std::span<const Jet> u) const {
    const Connection c = model_.assemble(u);
    const Bilinear lambda = lambda_term(c);
    const std::size_t m = equations_.size();
    std::vector<Jet> residual(m);
    for (std::size_t e = 0; e < m; ++e) {
        // target - known derivatives - atoms - Q, with Q = -Lambda.
        Jet v = known_[e] + lambda.at(equations_[e].row_i, equations_[e].row_j);
        for (const Atom& a : atoms_[e]) {
            v -= a.coef * partial(u[static_cast<std::size_t>(a.unknown)], a.axis);
        }
        residual[e] = std::move(v);
    }
    std::vector<Jet> out(m, Jet::zero(model_.dim(), model_.degree_cap()));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t e = 0; e < m; ++e) {
            if (solve_[r][e] != 0) {
                out[r] += solve_[r][e] * residual[e];
            }
        }
    }
    return out;
}

} // namespace ckgeom::detail
