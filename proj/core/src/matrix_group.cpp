#include "reflinv/matrix_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "reflinv/error.hpp"

namespace reflinv {

namespace {

unsigned entry_order(const std::vector<RMatrix> &mats)
{
    unsigned m = 1;
    for (const auto &a : mats) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j) {
                m = std::lcm(m, a(i, j).minimized().order());
            }
        }
    }
    return m;
}

RMatrix promote(const RMatrix &a, unsigned order)
{
    RMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            r(i, j) = a(i, j).minimized().promoted(order);
        }
    }
    return r;
}

RMatrix permutation_matrix(const std::vector<std::size_t> &perm)
{
    RMatrix m(perm.size(), perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) {
        m(perm[j], j) = Cyclotomic(1);
    }
    return m;
}

} // namespace

std::string ReflectionGroup::key(const RMatrix &m) const
{
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Cyclotomic &x = m(i, j);
            if (cyclotomic_order_ % x.order() == 0) {
                s += x.key_at(cyclotomic_order_);
            } else {
                const Cyclotomic y = x.minimized();
                s += y.key_at(std::lcm(cyclotomic_order_, y.order()));
            }
            s += ';';
        }
    }
    return s;
}

std::size_t ReflectionGroup::reflection_count() const noexcept
{
    return static_cast<std::size_t>(std::count(pseudo_reflection_.begin(), pseudo_reflection_.end(), true));
}

std::vector<std::size_t> ReflectionGroup::reflection_indices() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < order(); ++i) {
        if (pseudo_reflection_[i]) {
            out.push_back(i);
        }
    }
    return out;
}

std::optional<std::size_t> ReflectionGroup::index_of(const RMatrix &m) const
{
    if (m.rows() != dimension_ || m.cols() != dimension_) {
        return std::nullopt;
    }
    auto it = lookup_.find(key(m));
    if (it == lookup_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::vector<std::size_t> ReflectionGroup::generated_subgroup(const std::vector<std::size_t> &gens) const
{
    std::vector<bool> seen(order(), false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        const std::size_t a = queue.front();
        queue.pop_front();
        for (std::size_t s : gens) {
            const std::size_t b = multiply(a, s);
            if (!seen[b]) {
                seen[b] = true;
                queue.push_back(b);
            }
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < order(); ++i) {
        if (seen[i]) {
            out.push_back(i);
        }
    }
    return out;
}

ReflectionGroup closure(const std::vector<RMatrix> &generators, std::size_t max_order, const std::string &name,
                        std::size_t dimension)
{
    if (!generators.empty()) {
        dimension = generators.front().rows();
    }
    if (dimension == 0) {
        throw InvalidArgument("group dimension must be positive");
    }
    for (const auto &g : generators) {
        if (g.rows() != dimension || g.cols() != dimension) {
            throw InvalidArgument("generators must be square matrices of a common dimension");
        }
        if (determinant(g).is_zero()) {
            throw InvalidArgument("generator is not invertible");
        }
    }

    ReflectionGroup grp;
    grp.name_ = name;
    grp.dimension_ = dimension;
    grp.cyclotomic_order_ = entry_order(generators);
    for (const auto &g : generators) {
        grp.generators_.push_back(promote(g, grp.cyclotomic_order_));
    }

    auto insert = [&](RMatrix m) -> std::pair<std::size_t, bool> {
        std::string k = grp.key(m);
        auto it = grp.lookup_.find(k);
        if (it != grp.lookup_.end()) {
            return {it->second, false};
        }
        const std::size_t idx = grp.elements_.size();
        if (idx >= max_order) {
            throw GroupNotFinite("group not finite within bound " + std::to_string(max_order));
        }
        grp.lookup_.emplace(std::move(k), idx);
        grp.elements_.push_back(std::move(m));
        return {idx, true};
    };

    insert(promote(Matrix::identity(dimension), grp.cyclotomic_order_));
    for (std::size_t head = 0; head < grp.elements_.size(); ++head) {
        for (const auto &g : grp.generators_) {
            insert(grp.elements_[head] * g);
        }
    }
    for (const auto &g : grp.generators_) {
        grp.generator_indices_.push_back(*grp.index_of(g));
    }

    const std::size_t n = grp.elements_.size();
    grp.table_.assign(n * n, 0);
    grp.inverse_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            auto idx = grp.index_of(grp.elements_[a] * grp.elements_[b]);
            if (!idx) {
                throw ConsistencyError("closure is not closed under multiplication");
            }
            grp.table_[a * n + b] = *idx;
            if (*idx == 0) {
                grp.inverse_[a] = b;
            }
        }
    }
    grp.pseudo_reflection_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        grp.pseudo_reflection_[i] = is_pseudo_reflection(grp.elements_[i]);
    }
    return grp;
}

bool is_pseudo_reflection(const RMatrix &m)
{
    return rank(m - Matrix::identity(m.rows())) == 1;
}

bool is_orthogonal(const RMatrix &m)
{
    return m.transpose() * m == Matrix::identity(m.rows());
}

void check_orthogonal(const ReflectionGroup &g)
{
    for (std::size_t i = 0; i < g.order(); ++i) {
        const RMatrix &m = g.element(i);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                if (!m(r, c).is_real()) {
                    throw NotOrthogonal(i, "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                               ") = " + m(r, c).to_string() + " is not real");
                }
            }
        }
        if (!is_orthogonal(m)) {
            throw NotOrthogonal(i, "k^T k != I");
        }
    }
}

bool is_pseudo_reflection_group(const ReflectionGroup &g)
{
    check_orthogonal(g);
    return g.generated_subgroup(g.reflection_indices()).size() == g.order();
}

RMatrix dihedral_rotation(unsigned n, long k)
{
    RMatrix m(2, 2);
    const Cyclotomic c = Cyclotomic::cos_2pi(n, k);
    const Cyclotomic s = Cyclotomic::sin_2pi(n, k);
    m(0, 0) = c;
    m(0, 1) = -s;
    m(1, 0) = s;
    m(1, 1) = c;
    return m;
}

RMatrix dihedral_reflection(unsigned n, long k)
{
    RMatrix m(2, 2);
    const Cyclotomic c = Cyclotomic::cos_2pi(n, k);
    const Cyclotomic s = Cyclotomic::sin_2pi(n, k);
    m(0, 0) = c;
    m(0, 1) = s;
    m(1, 0) = s;
    m(1, 1) = -c;
    return m;
}

ReflectionGroup builtin(const std::string &spec)
{
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw InvalidArgument("unknown builtin group '" + spec + "' (expected family:n)");
    }
    const std::string family = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    if (arg.empty() || arg.size() > 4 || !std::all_of(arg.begin(), arg.end(), ::isdigit)) {
        throw InvalidArgument("invalid size in builtin group '" + spec + "'");
    }
    const unsigned n = static_cast<unsigned>(std::stoul(arg));
    if (n < 1) {
        throw InvalidArgument("builtin group size must be at least 1");
    }

    std::vector<RMatrix> gens;
    std::size_t dim = n;
    if (family == "dihedral") {
        if (n < 3) {
            throw InvalidArgument("dihedral:n requires n >= 3");
        }
        gens = {dihedral_rotation(n, 1), dihedral_reflection(n, 0)};
        dim = 2;
    } else if (family == "cyclic") {
        gens = {dihedral_rotation(n, 1)};
        dim = 2;
    } else if (family == "symmetric") {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::swap(perm[i], perm[i + 1]);
            gens.push_back(permutation_matrix(perm));
        }
    } else if (family == "hyperoctahedral") {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::swap(perm[i], perm[i + 1]);
            gens.push_back(permutation_matrix(perm));
        }
        RMatrix flip = Matrix::identity(n);
        flip(n - 1, n - 1) = Cyclotomic(-1);
        gens.push_back(flip);
    } else if (family == "trivial") {
        // no generators
    } else {
        throw InvalidArgument("unknown builtin group family '" + family + "'");
    }
    return closure(gens, kDefaultMaxOrder, spec, dim);
}

std::vector<std::string> builtin_battery()
{
    return {"dihedral:3",  "dihedral:4",  "dihedral:5",        "dihedral:6",       "dihedral:7",
            "dihedral:8",  "symmetric:2", "symmetric:3",       "symmetric:4",      "hyperoctahedral:2",
            "hyperoctahedral:3"};
}

GroupElement g_identity(const ReflectionGroup &g) { return {Vector(g.dimension()), 0}; }

GroupElement g_multiply(const ReflectionGroup &g, const GroupElement &a, const GroupElement &b)
{
    GroupElement r;
    r.translation = g.element(a.rotation) * b.translation;
    for (std::size_t i = 0; i < r.translation.size(); ++i) {
        r.translation[i] += a.translation[i];
    }
    r.rotation = g.multiply(a.rotation, b.rotation);
    return r;
}

GroupElement g_inverse(const ReflectionGroup &g, const GroupElement &a)
{
    GroupElement r;
    r.rotation = g.inverse(a.rotation);
    r.translation = g.element(r.rotation) * a.translation;
    for (auto &x : r.translation) {
        x = -x;
    }
    return r;
}

void check_element(const ReflectionGroup &g, const GroupElement &a)
{
    if (a.translation.size() != g.dimension() || a.rotation >= g.order()) {
        throw InvalidArgument("group element does not belong to " + g.name());
    }
    for (const auto &x : a.translation) {
        if (!x.is_real()) {
            throw InvalidArgument("translation entry " + x.to_string() + " is not real");
        }
    }
}

Vector random_integer_vector(std::size_t n, std::mt19937_64 &rng, int range)
{
    std::uniform_int_distribution<int> dist(-range, range);
    Vector v(n);
    for (auto &x : v) {
        x = Cyclotomic(static_cast<long>(dist(rng)));
    }
    return v;
}

GroupElement random_element(const ReflectionGroup &g, std::mt19937_64 &rng)
{
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    GroupElement e;
    e.translation = random_integer_vector(g.dimension(), rng);
    e.rotation = pick(rng);
    return e;
}

} // namespace reflinv
