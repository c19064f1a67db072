#include "ckgeom/multi_index.hpp"

#include "ckgeom/errors.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

namespace ckgeom {

int MultiIndex::total_degree() const noexcept {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

std::string to_key(std::span<const int> exponents) {
    std::string key;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i != 0) {
            key += ' ';
        }
        key += std::to_string(exponents[i]);
    }
    return key;
}

MultiIndex parse_key(const std::string& key) {
    MultiIndex index;
    std::istringstream in(key);
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        int value = -1;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || value < 0) {
            throw FormatError("bad exponent key '" + key + "'");
        }
        index.exponents.push_back(value);
    }
    if (to_key(index.exponents) != key) {
        throw FormatError("exponent key '" + key + "' is not in canonical form");
    }
    return index;
}

namespace {

// Appends all exponent tuples of `dim` variables with total degree `degree`
// in colex order: recursion fixes the last variable first, ascending.
void enumerate_degree(int dim, int degree, std::vector<int>& scratch, std::vector<int>& out) {
    if (dim == 0) {
        if (degree == 0) {
            out.insert(out.end(), scratch.begin(), scratch.end());
        }
        return;
    }
    if (dim == 1) {
        scratch[0] = degree;
        out.insert(out.end(), scratch.begin(), scratch.end());
        return;
    }
    for (int last = 0; last <= degree; ++last) {
        scratch[static_cast<std::size_t>(dim - 1)] = last;
        enumerate_degree(dim - 1, degree - last, scratch, out);
    }
}

} // namespace

MonomialLayout::MonomialLayout(int dim, int degree_cap) : dim_(dim), degree_cap_(degree_cap) {
    if (dim < 0 || degree_cap < 0) {
        throw DimensionMismatch("negative dimension or degree cap");
    }
    const auto n = static_cast<std::size_t>(dim);
    std::vector<int> scratch(n, 0);
    for (int d = 0; d <= degree_cap; ++d) {
        if (dim == 0 && d > 0) {
            prefix_counts_.push_back(prefix_counts_.back());
            continue;
        }
        enumerate_degree(dim, d, scratch, exponents_);
        prefix_counts_.push_back(n == 0 ? 1 : exponents_.size() / n);
    }
    const std::size_t count = prefix_counts_.back();
    degrees_.resize(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        int deg = 0;
        for (std::size_t a = 0; a < n; ++a) {
            deg += exponents_[idx * n + a];
        }
        degrees_[idx] = deg;
        lookup_.emplace(encode(exponents(idx)), idx);
    }

    lowered_.assign(n * count, npos);
    raised_.assign(n * count, npos);
    std::vector<int> work(n);
    for (std::size_t idx = 0; idx < count; ++idx) {
        for (std::size_t a = 0; a < n; ++a) {
            const auto e = exponents(idx);
            work.assign(e.begin(), e.end());
            if (work[a] > 0) {
                --work[a];
                lowered_[a * count + idx] = *index_of(work);
                ++work[a];
            }
            ++work[a];
            if (auto up = index_of(work)) {
                raised_[a * count + idx] = *up;
            }
        }
    }

    product_offsets_.resize(count);
    std::size_t total = 0;
    for (std::size_t a = 0; a < count; ++a) {
        product_offsets_[a] = total;
        total += count_up_to(degree_cap_ - degrees_[a]);
    }
    products_.resize(total);
    for (std::size_t a = 0; a < count; ++a) {
        const std::size_t limit = count_up_to(degree_cap_ - degrees_[a]);
        const auto ea = exponents(a);
        for (std::size_t b = 0; b < limit; ++b) {
            const auto eb = exponents(b);
            for (std::size_t k = 0; k < n; ++k) {
                work[k] = ea[k] + eb[k];
            }
            products_[product_offsets_[a] + b] = static_cast<std::uint32_t>(*index_of(work));
        }
    }
}

std::size_t MonomialLayout::count_up_to(int d) const {
    if (d < 0) {
        return 0;
    }
    if (d > degree_cap_) {
        d = degree_cap_;
    }
    return prefix_counts_[static_cast<std::size_t>(d)];
}

std::uint64_t MonomialLayout::encode(std::span<const int> exponents) const {
    std::uint64_t code = 0;
    const auto base = static_cast<std::uint64_t>(degree_cap_) + 1;
    for (int e : exponents) {
        code = code * base + static_cast<std::uint64_t>(e);
    }
    return code;
}

std::optional<std::size_t> MonomialLayout::index_of(std::span<const int> exponents) const {
    if (static_cast<int>(exponents.size()) != dim_) {
        return std::nullopt;
    }
    int deg = 0;
    for (int e : exponents) {
        if (e < 0) {
            return std::nullopt;
        }
        deg += e;
    }
    if (deg > degree_cap_) {
        return std::nullopt;
    }
    auto it = lookup_.find(encode(exponents));
    if (it == lookup_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::shared_ptr<const MonomialLayout> MonomialLayout::get(int dim, int degree_cap) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const MonomialLayout>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{dim, degree_cap}];
    if (!slot) {
        slot = std::make_shared<const MonomialLayout>(dim, degree_cap);
    }
    return slot;
}

} // namespace ckgeom
