#ifndef REFLINV_MATRIX_GROUP_HPP
#define REFLINV_MATRIX_GROUP_HPP

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "reflinv/linalg.hpp"

namespace reflinv {

using RMatrix = Matrix;

constexpr std::size_t kDefaultMaxOrder = 10000;

// A finite matrix group, fully enumerated. Element 0 is the identity and the
// remaining elements appear in breadth-first order from the generators.
class ReflectionGroup {
public:
    const std::string &name() const noexcept { return name_; }
    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t order() const noexcept { return elements_.size(); }
    // Common cyclotomic order of all matrix entries.
    unsigned cyclotomic_order() const noexcept { return cyclotomic_order_; }

    const std::vector<RMatrix> &elements() const noexcept { return elements_; }
    const RMatrix &element(std::size_t i) const { return elements_.at(i); }
    const std::vector<RMatrix> &generators() const noexcept { return generators_; }
    // Index of each generator in elements() (identity generators map to 0).
    const std::vector<std::size_t> &generator_indices() const noexcept { return generator_indices_; }

    bool is_pseudo_reflection(std::size_t i) const { return pseudo_reflection_.at(i); }
    std::size_t reflection_count() const noexcept;
    std::vector<std::size_t> reflection_indices() const;

    std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
    std::size_t inverse(std::size_t a) const { return inverse_.at(a); }
    std::optional<std::size_t> index_of(const RMatrix &m) const;

    // Smallest subgroup containing the listed elements, as a sorted index list.
    std::vector<std::size_t> generated_subgroup(const std::vector<std::size_t> &gens) const;

    friend ReflectionGroup closure(const std::vector<RMatrix> &generators, std::size_t max_order,
                                   const std::string &name, std::size_t dimension);

private:
    std::string key(const RMatrix &m) const;

    std::string name_;
    std::size_t dimension_ = 0;
    unsigned cyclotomic_order_ = 1;
    std::vector<RMatrix> elements_;
    std::vector<RMatrix> generators_;
    std::vector<std::size_t> generator_indices_;
    std::vector<bool> pseudo_reflection_;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> inverse_;
    std::unordered_map<std::string, std::size_t> lookup_;
};

// Breadth-first closure of the generators. Throws GroupNotFinite when more than
// max_order elements are produced and InvalidArgument for singular or
// mismatched generators. `dimension` is used when the generator list is empty.
ReflectionGroup closure(const std::vector<RMatrix> &generators, std::size_t max_order = kDefaultMaxOrder,
                        const std::string &name = "group", std::size_t dimension = 0);

// rank(m - I) == 1, which for finite-order (diagonalizable) m is exactly
// "one eigenvalue differs from 1".
bool is_pseudo_reflection(const RMatrix &m);

// k^T k == I for every element; throws NotOrthogonal naming the first offender.
void check_orthogonal(const ReflectionGroup &g);
bool is_orthogonal(const RMatrix &m);

// Orthogonality check plus: the pseudo-reflections generate the whole group.
bool is_pseudo_reflection_group(const ReflectionGroup &g);

// Rotation R_k and reflection S_k of the dihedral group of order 2n.
RMatrix dihedral_rotation(unsigned n, long k);
RMatrix dihedral_reflection(unsigned n, long k);

// "dihedral:n", "symmetric:n", "hyperoctahedral:n", "cyclic:n", "trivial:n".
ReflectionGroup builtin(const std::string &spec);
std::vector<std::string> builtin_battery();

// Element (x, k) of the semidirect product R^n x| K.
struct GroupElement {
    Vector translation;
    std::size_t rotation = 0;

    friend bool operator==(const GroupElement &a, const GroupElement &b)
    {
        return a.rotation == b.rotation && a.translation == b.translation;
    }
};

GroupElement g_identity(const ReflectionGroup &g);
// (x1, k1)(x2, k2) = (x1 + k1 x2, k1 k2)
GroupElement g_multiply(const ReflectionGroup &g, const GroupElement &a, const GroupElement &b);
// (x, k)^{-1} = (-k^{-1} x, k^{-1})
GroupElement g_inverse(const ReflectionGroup &g, const GroupElement &a);
// Throws InvalidArgument unless every translation entry is real.
void check_element(const ReflectionGroup &g, const GroupElement &a);

// Vector with small random integer entries in [-range, range].
Vector random_integer_vector(std::size_t n, std::mt19937_64 &rng, int range = 5);
GroupElement random_element(const ReflectionGroup &g, std::mt19937_64 &rng);

} // namespace reflinv

#endif
