#include "ckgeom/ck_solver.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ckgeom {

namespace {

void validate(int dim, int cap, const std::vector<std::string>& labels,
              const std::vector<SliceJet>& slices, const char* what) {
    if (dim < 1 || cap < 0) {
        throw DimensionMismatch(std::string(what) + ": need n >= 1 and D >= 0");
    }
    if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size()) {
        throw PreconditionError("duplicate-label", std::string(what) + ": labels must be distinct");
    }
    if (slices.size() != labels.size()) {
        throw DimensionMismatch(std::string(what) + ": one initial slice per unknown required");
    }
    for (const auto& s : slices) {
        if (s.target_dim() != dim || s.degree_cap() != cap) {
            throw DimensionMismatch(std::string(what) + ": initial slice lives in another workspace");
        }
    }
}

std::vector<Jet> evaluate(const RhsEvaluator& rhs, std::span<const Jet> u, int iteration) {
    std::vector<Jet> h;
    try {
        h = rhs(u);
    } catch (const SolverError&) {
        throw;
    } catch (const Error& e) {
        throw SolverError(e.reason(), iteration,
                          "CK right-hand side failed in Picard iteration " +
                              std::to_string(iteration) + ": " + e.what());
    }
    if (h.size() != u.size()) {
        throw DimensionMismatch("CK right-hand side returned the wrong number of components");
    }
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i].dim() != u[i].dim() || h[i].degree_cap() != u[i].degree_cap()) {
            throw DimensionMismatch("CK right-hand side returned a jet in another workspace");
        }
    }
    return h;
}

bool same_iterate(std::span<const Jet> a, std::span<const Jet> b, int cap) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!equal_to_order(a[i], b[i], cap)) {
            return false;
        }
    }
    return true;
}

// Generic Picard loop; `step` maps the rhs values to the next iterate.
template <typename Step>
CKSolution picard(int cap, const std::vector<std::string>& labels, std::vector<Jet> u,
                  const RhsEvaluator& rhs, const PicardObserver& observer, Step step) {
    CKSolution sol;
    sol.labels = labels;
    const int max_iterations = cap + 2;
    for (int it = 1; it <= max_iterations; ++it) {
        std::vector<Jet> next = step(evaluate(rhs, u, it));
        const bool stable = same_iterate(next, u, cap);
        u = std::move(next);
        sol.iterations = it;
        if (observer) {
            observer(it, u);
        }
        if (stable) {
            break;
        }
    }
    sol.valid_order = cap;
    for (auto& jet : u) {
        sol.valid_order = std::min(sol.valid_order, jet.valid_order());
    }
    sol.values = std::move(u);
    return sol;
}

} // namespace

const Jet& CKSolution::operator[](const std::string& label) const {
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
        throw std::out_of_range("CKSolution: no unknown named " + label);
    }
    return values[static_cast<std::size_t>(it - labels.begin())];
}

CKSolution solve_first_order(const FirstOrderSystem& sys, const PicardObserver& observer) {
    validate(sys.dim, sys.degree_cap, sys.labels, sys.initial, "solve_first_order");
    std::vector<Jet> base;
    for (const auto& s : sys.initial) {
        base.push_back(promote(s));
    }
    return picard(sys.degree_cap, sys.labels, base, sys.rhs, observer,
                  [&](std::vector<Jet> h) {
                      for (std::size_t i = 0; i < h.size(); ++i) {
                          h[i] = base[i] + antiderivative_x1(h[i]);
                      }
                      return h;
                  });
}

CKSolution solve_second_order(const SecondOrderSystem& sys, const PicardObserver& observer) {
    validate(sys.dim, sys.degree_cap, sys.labels, sys.initial, "solve_second_order");
    validate(sys.dim, sys.degree_cap, sys.labels, sys.initial_derivative, "solve_second_order");
    std::vector<Jet> base;
    for (std::size_t i = 0; i < sys.initial.size(); ++i) {
        base.push_back(promote(sys.initial[i]) +
                       multiply_by_variable(promote(sys.initial_derivative[i]), 0));
    }
    return picard(sys.degree_cap, sys.labels, base, sys.rhs, observer,
                  [&](std::vector<Jet> h) {
                      for (std::size_t i = 0; i < h.size(); ++i) {
                          h[i] = base[i] + antiderivative_x1(antiderivative_x1(h[i]));
                      }
                      return h;
                  });
}

std::vector<Jet> residual_first_order(const FirstOrderSystem& sys, std::span<const Jet> u) {
    std::vector<Jet> h = sys.rhs(u);
    for (std::size_t i = 0; i < h.size(); ++i) {
        h[i] = partial(u[i], 0) - h[i];
    }
    return h;
}

std::vector<Jet> residual_second_order(const SecondOrderSystem& sys, std::span<const Jet> u) {
    std::vector<Jet> h = sys.rhs(u);
    for (std::size_t i = 0; i < h.size(); ++i) {
        h[i] = partial(partial(u[i], 0), 0) - h[i];
    }
    return h;
}

bool residual_vanishes(std::span<const Jet> residual, int order) {
    return std::all_of(residual.begin(), residual.end(),
                       [&](const Jet& r) { return is_zero_to_order(r, order); });
}

} // namespace ckgeom
