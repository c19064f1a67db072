#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace ckgeom {

/// Exponent tuple of a monomial (x^1)^{e_1} ... (x^n)^{e_n}.
struct MultiIndex {
    std::vector<int> exponents;

    int dim() const noexcept { return static_cast<int>(exponents.size()); }
    int total_degree() const noexcept;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// Space-separated exponent key, e.g. "2 0 1". Used by the JSON format.
std::string to_key(std::span<const int> exponents);
MultiIndex parse_key(const std::string& key);

/// Dense ranking of all monomials in n variables of total degree <= D.
///
/// Monomials are ordered by total degree and, inside one degree, colexically
/// (the last variable is most significant). Consequently the monomials of
/// degree <= d form the prefix [0, count_up_to(d)).
///
/// Layouts are immutable and shared between all jets of one workspace; use
/// `get` to obtain the cached instance.
class MonomialLayout {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    static std::shared_ptr<const MonomialLayout> get(int dim, int degree_cap);

    int dim() const noexcept { return dim_; }
    int degree_cap() const noexcept { return degree_cap_; }
    std::size_t size() const noexcept { return degrees_.size(); }

    std::span<const int> exponents(std::size_t index) const {
        return {exponents_.data() + index * static_cast<std::size_t>(dim_),
                static_cast<std::size_t>(dim_)};
    }
    int degree(std::size_t index) const { return degrees_[index]; }

    /// Number of monomials of total degree <= d (clamped to the cap).
    std::size_t count_up_to(int d) const;

    std::optional<std::size_t> index_of(std::span<const int> exponents) const;

    /// Index of e - e_axis, or npos when e_axis == 0.
    std::size_t lowered(int axis, std::size_t index) const {
        return lowered_[static_cast<std::size_t>(axis) * size() + index];
    }
    /// Index of e + e_axis, or npos when that exceeds the degree cap.
    std::size_t raised(int axis, std::size_t index) const {
        return raised_[static_cast<std::size_t>(axis) * size() + index];
    }

    /// Index of the product monomial a*b. Valid for b < count_up_to(D - degree(a)).
    std::size_t product(std::size_t a, std::size_t b) const {
        return products_[product_offsets_[a] + b];
    }

    MonomialLayout(int dim, int degree_cap);

private:
    std::uint64_t encode(std::span<const int> exponents) const;

    int dim_;
    int degree_cap_;
    std::vector<int> exponents_;
    std::vector<int> degrees_;
    std::vector<std::size_t> prefix_counts_;
    std::unordered_map<std::uint64_t, std::size_t> lookup_;
    std::vector<std::size_t> lowered_;
    std::vector<std::size_t> raised_;
    std::vector<std::size_t> product_offsets_;
    std::vector<std::uint32_t> products_;
};

} // namespace ckgeom
