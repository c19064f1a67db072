#pragma once

#include "ckgeom/constructions.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace testing_support {

using ckgeom::Jet;
using ckgeom::Rational;

struct Term {
    std::vector<int> exponents;
    Rational coefficient;
};

inline Jet jet_of(int n, int cap, std::initializer_list<Term> terms) {
    Jet j = Jet::zero(n, cap);
    for (const auto& t : terms) {
        j.set_coefficient(t.exponents, j.coefficient(t.exponents) + t.coefficient);
    }
    return j;
}

inline bool same_connection(const ckgeom::Connection& a, const ckgeom::Connection& b, int order) {
    for (int k = 0; k < a.dim(); ++k) {
        for (int i = 0; i < a.dim(); ++i) {
            for (int j = 0; j < a.dim(); ++j) {
                if (!ckgeom::equal_to_order(a.at(k, i, j), b.at(k, i, j), order)) {
                    return false;
                }
            }
        }
    }
    return true;
}

template <typename Table>
bool same_table(const Table& a, const Table& b, int order) {
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        if (!ckgeom::equal_to_order(a.entries()[i], b.entries()[i], order)) {
            return false;
        }
    }
    return true;
}

template <typename Table>
bool table_zero(const Table& a, int order) {
    for (const auto& e : a.entries()) {
        if (!ckgeom::is_zero_to_order(e, order)) {
            return false;
        }
    }
    return true;
}

} // namespace testing_support
