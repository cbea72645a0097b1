#include "reflinv/eigenspace.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <unordered_map>

#include "reflinv/error.hpp"

namespace reflinv {

namespace {

std::string vector_key(const Vector &v)
{
    std::string s;
    for (const auto &x : v) {
        const Cyclotomic m = x.minimized();
        s += m.key_at(m.order());
        s += ';';
    }
    return s;
}

bool is_zero_vector(const Vector &v)
{
    return std::all_of(v.begin(), v.end(), [](const Cyclotomic &x) { return x.is_zero(); });
}

Vector scaled_i(const Vector &v)
{
    const Cyclotomic i = Cyclotomic::zeta(4);
    Vector out;
    out.reserve(v.size());
    for (const auto &x : v) {
        out.push_back(i * x);
    }
    return out;
}

} // namespace

Vector minimized(const Vector &v)
{
    Vector out;
    out.reserve(v.size());
    for (const auto &x : v) {
        out.push_back(x.minimized());
    }
    return out;
}

Cyclotomic dot(const Vector &a, const Vector &b)
{
    if (a.size() != b.size()) {
        throw InvalidArgument("vector dimension mismatch");
    }
    Cyclotomic s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero() && !b[i].is_zero()) {
            s += a[i] * b[i];
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Weights and orbits

Weight make_weight(const ReflectionGroup &g, Vector lambda)
{
    if (lambda.size() != g.dimension()) {
        throw InvalidArgument("weight has " + std::to_string(lambda.size()) + " entries, group dimension is " +
                              std::to_string(g.dimension()));
    }
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (!lambda[i].is_imaginary()) {
            throw InvalidArgument("weight entry " + std::to_string(i + 1) + " = " + lambda[i].to_string() +
                                  " is not purely imaginary");
        }
        lambda[i] = lambda[i].minimized();
    }
    return Weight{std::move(lambda), &g};
}

Weight parse_weight(const ReflectionGroup &g, const std::string &text)
{
    Vector lambda;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        const std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            lambda.push_back(Cyclotomic::parse(piece));
        } catch (const ParseError &e) {
            throw ParseError("weight entry " + std::to_string(lambda.size() + 1) + ": " + e.bare_message(), 0,
                             start + e.column());
        }
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return make_weight(g, std::move(lambda));
}

std::string weight_to_string(const Weight &w)
{
    std::string s;
    for (std::size_t i = 0; i < w.lambda.size(); ++i) {
        if (i) {
            s += ", ";
        }
        s += w.lambda[i].to_string();
    }
    return s;
}

bool is_generic(const Weight &w)
{
    const auto &g = *w.group;
    for (std::size_t h = 1; h < g.order(); ++h) {
        if (g.element(h) * w.lambda == w.lambda) {
            return false;
        }
    }
    return true;
}

Orbit orbit(const Weight &w)
{
    const auto &g = *w.group;
    Orbit o;
    std::unordered_map<std::string, std::size_t> classes;
    for (std::size_t h = 0; h < g.order(); ++h) {
        Vector p = minimized(g.element(h) * w.lambda);
        auto [it, inserted] = classes.try_emplace(vector_key(p), o.class_sizes.size());
        if (inserted) {
            o.class_sizes.push_back(0);
        }
        ++o.class_sizes[it->second];
        o.class_of.push_back(it->second);
        o.points.push_back(std::move(p));
    }
    if (g.order() % o.distinct() != 0) {
        throw ConsistencyError("orbit size " + std::to_string(o.distinct()) + " does not divide the group order");
    }
    return o;
}

// ---------------------------------------------------------------------------
// FormalExp

FormalExp::FormalExp(const Cyclotomic &c) { add(Cyclotomic(0), c); }

FormalExp FormalExp::exp(const Cyclotomic &argument, const Cyclotomic &coefficient)
{
    FormalExp f;
    f.add(argument, coefficient);
    return f;
}

void FormalExp::add(const Cyclotomic &argument, const Cyclotomic &coefficient)
{
    if (coefficient.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(argument.minimized(), coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

FormalExp &FormalExp::operator+=(const FormalExp &o)
{
    for (const auto &[s, c] : o.terms_) {
        add(s, c);
    }
    return *this;
}

FormalExp &FormalExp::operator-=(const FormalExp &o)
{
    for (const auto &[s, c] : o.terms_) {
        add(s, -c);
    }
    return *this;
}

FormalExp operator*(const FormalExp &a, const FormalExp &b)
{
    FormalExp r;
    for (const auto &[sa, ca] : a.terms_) {
        for (const auto &[sb, cb] : b.terms_) {
            r.add(sa + sb, ca * cb);
        }
    }
    return r;
}

bool operator==(const FormalExp &a, const FormalExp &b)
{
    if (a.terms_.size() != b.terms_.size()) {
        return false;
    }
    auto ib = b.terms_.begin();
    for (const auto &[s, c] : a.terms_) {
        if (s != ib->first || c != ib->second) {
            return false;
        }
        ++ib;
    }
    return true;
}

FormalExp FormalExp::shifted(const Cyclotomic &s) const
{
    if (s.is_zero()) {
        return *this;
    }
    FormalExp r;
    for (const auto &[arg, c] : terms_) {
        r.add(arg + s, c);
    }
    return r;
}

Complex FormalExp::evaluate() const
{
    Complex total;
    for (const auto &[s, c] : terms_) {
        total += embed_complex(c) * exp_complex(s);
    }
    return total;
}

std::string FormalExp::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[s, c] : terms_) {
        if (!out.empty()) {
            out += " + ";
        }
        if (s.is_zero()) {
            out += "(" + c.to_string() + ")";
        } else {
            out += "(" + c.to_string() + ")*exp(" + s.to_string() + ")";
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// PlaneWaveSum

PlaneWaveSum PlaneWaveSum::wave(const Vector &exponent, const FormalExp &coefficient)
{
    PlaneWaveSum p;
    p.add(exponent, coefficient);
    return p;
}

void PlaneWaveSum::add(const Vector &exponent, const FormalExp &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(minimized(exponent), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

PlaneWaveSum &PlaneWaveSum::operator+=(const PlaneWaveSum &o)
{
    for (const auto &[mu, c] : o.terms_) {
        add(mu, c);
    }
    return *this;
}

bool operator==(const PlaneWaveSum &a, const PlaneWaveSum &b)
{
    if (a.terms_.size() != b.terms_.size()) {
        return false;
    }
    auto ib = b.terms_.begin();
    for (const auto &[mu, c] : a.terms_) {
        if (mu != ib->first || c != ib->second) {
            return false;
        }
        ++ib;
    }
    return true;
}

PlaneWaveSum PlaneWaveSum::scaled(const FormalExp &c) const
{
    PlaneWaveSum r;
    for (const auto &[mu, f] : terms_) {
        r.add(mu, f * c);
    }
    return r;
}

FormalExp PlaneWaveSum::evaluate_at(const Vector &x) const
{
    FormalExp total;
    for (const auto &[mu, c] : terms_) {
        total += c.shifted(dot(mu, x));
    }
    return total;
}

// ---------------------------------------------------------------------------
// Induced model

InducedModel make_model(const Weight &w) { return InducedModel{w, orbit(w)}; }

CoeffVector all_ones(const InducedModel &m) { return CoeffVector(m.dimension(), FormalExp(Cyclotomic(1))); }

CoeffVector delta(const InducedModel &m, std::size_t h)
{
    CoeffVector v(m.dimension());
    v.at(h) = FormalExp(Cyclotomic(1));
    return v;
}

CoeffVector model_act(const InducedModel &m, const GroupElement &g, const CoeffVector &v)
{
    const auto &grp = m.group();
    check_element(grp, g);
    if (v.size() != m.dimension()) {
        throw InvalidArgument("coefficient vector has wrong length");
    }
    const std::size_t kinv = grp.inverse(g.rotation);
    const bool translate = !is_zero_vector(g.translation);
    CoeffVector out(v.size());
    for (std::size_t h = 0; h < v.size(); ++h) {
        const FormalExp &src = v[grp.multiply(kinv, h)];
        out[h] = translate ? src.shifted(-dot(m.orbit.points[h], g.translation)) : src;
    }
    return out;
}

ComplexMatrix model_matrix(const InducedModel &m, const GroupElement &g)
{
    const auto &grp = m.group();
    const std::size_t n = m.dimension();
    const std::size_t kinv = grp.inverse(g.rotation);
    ComplexMatrix a(n, std::vector<Complex>(n));
    for (std::size_t h = 0; h < n; ++h) {
        a[h][grp.multiply(kinv, h)] = exp_complex(-dot(m.orbit.points[h], g.translation));
    }
    return a;
}

Real unitarity_defect(const InducedModel &m, const GroupElement &g, unsigned bits)
{
    PrecisionScope scope(bits + 32);
    const ComplexMatrix a = model_matrix(m, g);
    const std::size_t n = a.size();
    Real worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex s;
            for (std::size_t l = 0; l < n; ++l) {
                s += a[i][l] * a[j][l].conj();
            }
            if (i == j) {
                s.re -= 1;
            }
            worst = std::max(worst, Real(s.abs()));
        }
    }
    return worst;
}

std::size_t dual_orbit_rank(const InducedModel &m, const std::vector<GroupElement> &samples, unsigned bits)
{
    if (bits < 53) {
        throw InvalidArgument("precision must be at least 53 bits");
    }
    PrecisionScope scope(bits + 32);
    ComplexMatrix rows;
    for (const auto &g : samples) {
        check_element(m.group(), g);
        std::vector<Complex> row;
        for (std::size_t h = 0; h < m.dimension(); ++h) {
            row.push_back(exp_complex(dot(m.orbit.points[h], g.translation)));
        }
        rows.push_back(std::move(row));
    }
    return numeric_rank(singular_values(std::move(rows)), bits);
}

bool dual_cyclic_check(const InducedModel &m, const std::vector<GroupElement> &samples, unsigned bits)
{
    std::vector<bool> covered(m.group().order(), false);
    for (const auto &g : samples) {
        covered.at(g.rotation) = true;
    }
    if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) {
        throw InsufficientSamples("dual cyclic check needs a sample for every rotation part");
    }
    return dual_orbit_rank(m, samples, bits) == m.dimension();
}

PlaneWaveSum intertwiner(const InducedModel &m, const CoeffVector &v)
{
    if (v.size() != m.dimension()) {
        throw InvalidArgument("coefficient vector has wrong length");
    }
    PlaneWaveSum f;
    for (std::size_t h = 0; h < v.size(); ++h) {
        f += PlaneWaveSum::wave(m.orbit.points[h], v[h]);
    }
    return f;
}

PlaneWaveSum plane_wave_act(const ReflectionGroup &g, const GroupElement &element, const PlaneWaveSum &f)
{
    check_element(g, element);
    const RMatrix &k = g.element(element.rotation);
    PlaneWaveSum out;
    for (const auto &[mu, c] : f.terms()) {
        const Vector kmu = k * mu;
        out += PlaneWaveSum::wave(kmu, c.shifted(-dot(kmu, element.translation)));
    }
    return out;
}

PlaneWaveSum apply_operator(const Poly &symbol, const PlaneWaveSum &f)
{
    PlaneWaveSum out;
    for (const auto &[mu, c] : f.terms()) {
        out += PlaneWaveSum::wave(mu, c * FormalExp(symbol.evaluate(mu)));
    }
    return out;
}

bool eigen_check(const PlaneWaveSum &p, const FundamentalInvariants &f, const Weight &w)
{
    std::vector<Cyclotomic> target;
    for (const auto &j : f.generators) {
        target.push_back(j.evaluate(w.lambda));
    }
    for (const auto &[mu, c] : p.terms()) {
        for (std::size_t i = 0; i < f.generators.size(); ++i) {
            if (f.generators[i].evaluate(mu) != target[i]) {
                return false;
            }
        }
    }
    return true;
}

bool equivariance_check(const InducedModel &m, const GroupElement &g, const CoeffVector &v)
{
    return intertwiner(m, model_act(m, g, v)) == plane_wave_act(m.group(), g, intertwiner(m, v));
}

// ---------------------------------------------------------------------------
// Evaluation matrix

std::size_t EvaluationMatrix::rank() const { return reflinv::rank(values); }

EvaluationMatrix evaluation_matrix(const Weight &w, const HarmonicSpace &h, const Vector &base_point)
{
    const auto &g = *w.group;
    const auto harmonics = h.flattened();
    if (harmonics.size() != g.order()) {
        throw InvalidArgument("harmonic basis has " + std::to_string(harmonics.size()) + " elements, expected " +
                              std::to_string(g.order()));
    }
    if (!base_point.empty()) {
        if (base_point.size() != g.dimension()) {
            throw InvalidArgument("base point has wrong dimension");
        }
        for (const auto &x : base_point) {
            if (!x.is_real()) {
                throw InvalidArgument("base point must be real");
            }
        }
    }
    const Orbit o = orbit(w);
    EvaluationMatrix e{Matrix(harmonics.size(), g.order()), std::vector<Cyclotomic>(g.order())};
    for (std::size_t k = 0; k < g.order(); ++k) {
        for (std::size_t i = 0; i < harmonics.size(); ++i) {
            e.values(i, k) = harmonics[i].evaluate(o.points[k]);
        }
        if (!base_point.empty()) {
            e.column_exp[k] = dot(o.points[k], base_point).minimized();
        }
    }
    return e;
}

// ---------------------------------------------------------------------------
// Commutant

std::size_t commutant_dimension_exact(const InducedModel &m)
{
    // Commuting with pi(y, e) for spanning y forces A(h, h') = 0 unless
    // mu_h == mu_h'; commuting with pi(0, k) makes A constant on left-K
    // orbits of such pairs. K acts freely, so each orbit has |K| pairs.
    std::size_t pairs = 0;
    for (auto s : m.orbit.class_sizes) {
        pairs += s * s;
    }
    if (pairs % m.dimension() != 0) {
        throw ConsistencyError("pair count is not a multiple of the group order");
    }
    return pairs / m.dimension();
}

namespace {

// Union-find over the unknowns A(i, j) with x = weight * root.
class WeightedUnionFind {
public:
    explicit WeightedUnionFind(std::size_t n) : parent_(n), weight_(n, Complex(1))
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::pair<std::size_t, Complex> find(std::size_t x)
    {
        if (parent_[x] == x) {
            return {x, Complex(1)};
        }
        auto [root, w] = find(parent_[x]);
        weight_[x] = weight_[x] * w;
        parent_[x] = root;
        return {root, weight_[x]};
    }

    // Record a*X + b*Y = 0. Returns a residual constraint (root, coefficient)
    // when X and Y already share a root.
    std::optional<std::pair<std::size_t, Complex>> relate(std::size_t x, const Complex &a, std::size_t y,
                                                          const Complex &b)
    {
        auto [rx, wx] = find(x);
        auto [ry, wy] = find(y);
        const Complex ax = a * wx;
        const Complex by = b * wy;
        if (rx == ry) {
            return std::make_pair(rx, ax + by);
        }
        // ax * rx + by * ry = 0  =>  rx = -(by / ax) ry
        parent_[rx] = ry;
        weight_[rx] = -(by / ax);
        return std::nullopt;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<Complex> weight_;
};

void check_samples(const ReflectionGroup &g, const std::vector<GroupElement> &samples)
{
    // Only pure translations separate the orbit characters: the translation
    // parts of other samples can all lie in a K-stable proper subspace.
    std::vector<Vector> translations;
    std::vector<std::size_t> rotations;
    for (const auto &s : samples) {
        check_element(g, s);
        if (s.rotation == 0) {
            translations.push_back(s.translation);
        }
        rotations.push_back(s.rotation);
    }
    if (translations.empty() || rank(Matrix::from_rows(translations, g.dimension())) < g.dimension()) {
        throw InsufficientSamples("pure-translation samples do not span R^" + std::to_string(g.dimension()));
    }
    if (g.generated_subgroup(rotations).size() != g.order()) {
        throw InsufficientSamples("sample rotation parts do not generate the group");
    }
}

} // namespace

std::size_t commutant_dimension_numeric(const InducedModel &m, const std::vector<GroupElement> &samples,
                                        unsigned bits, std::size_t *components)
{
    if (bits < 53) {
        throw InvalidArgument("precision must be at least 53 bits");
    }
    const auto &g = m.group();
    check_samples(g, samples);
    PrecisionScope scope(bits + 32);
    const std::size_t n = m.dimension();
    WeightedUnionFind uf(n * n);
    std::vector<std::pair<std::size_t, Complex>> residuals;

    for (const auto &s : samples) {
        std::vector<Complex> c(n);
        for (std::size_t h = 0; h < n; ++h) {
            c[h] = exp_complex(-dot(m.orbit.points[h], s.translation));
        }
        const std::size_t k = s.rotation;
        const std::size_t kinv = g.inverse(k);
        // (A pi)(i, j) - (pi A)(i, j) = c_{kj} A(i, kj) - c_i A(k^{-1} i, j)
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t ki = g.multiply(kinv, i);
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t kj = g.multiply(k, j);
                auto r = uf.relate(i * n + kj, c[kj], ki * n + j, -c[i]);
                if (r) {
                    residuals.push_back(std::move(*r));
                }
            }
        }
    }

    // Each component has one unknown (its root); residual rows constrain it.
    std::vector<Real> norm2(n * n, Real(0));
    for (auto &[root, coef] : residuals) {
        auto [r, w] = uf.find(root);
        norm2[r] += (coef * w).norm2();
    }
    std::vector<Real> sigma;
    std::size_t roots = 0;
    for (std::size_t x = 0; x < n * n; ++x) {
        if (uf.find(x).first == x) {
            ++roots;
            sigma.push_back(sqrt(norm2[x]));
        }
    }
    Real smax = 1;
    for (const auto &s : sigma) {
        smax = std::max(smax, s);
    }
    const Real tau = pow(Real(2), -static_cast<long>(bits / 2)) * smax;
    std::size_t free = 0;
    for (const auto &s : sigma) {
        if (s <= tau) {
            ++free;
        }
    }
    if (components) {
        *components = roots;
    }
    return free;
}

CommutantResult commutant_dimension(const InducedModel &m, const std::vector<GroupElement> &samples, unsigned bits)
{
    CommutantResult r;
    r.numeric = commutant_dimension_numeric(m, samples, bits, &r.components);
    r.exact = commutant_dimension_exact(m);
    if (r.exact != r.numeric) {
        throw ConsistencyError("commutant dimension: exact block count " + std::to_string(r.exact) +
                               " disagrees with numeric nullspace " + std::to_string(r.numeric));
    }
    return r;
}

std::vector<GroupElement> standard_samples(const ReflectionGroup &g, std::mt19937_64 &rng)
{
    for (int attempt = 0; attempt < 64; ++attempt) {
        // Distinct translations: repeated ones would only duplicate rows.
        std::vector<GroupElement> samples;
        std::vector<Vector> pure;
        std::unordered_map<std::string, bool> seen;
        auto draw = [&] {
            Vector y = random_integer_vector(g.dimension(), rng);
            while (!seen.try_emplace(vector_key(y), true).second) {
                y = random_integer_vector(g.dimension(), rng);
            }
            return y;
        };
        for (std::size_t j = 0; j < g.dimension(); ++j) {
            pure.push_back(draw());
            samples.push_back({pure.back(), 0});
        }
        for (std::size_t k = 0; k < g.order(); ++k) {
            samples.push_back({draw(), k});
        }
        if (rank(Matrix::from_rows(pure, g.dimension())) == g.dimension()) {
            return samples;
        }
    }
    throw InsufficientSamples("could not draw spanning translations");
}

Weight random_generic_weight(const ReflectionGroup &g, std::mt19937_64 &rng)
{
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Weight w = make_weight(g, scaled_i(random_integer_vector(g.dimension(), rng, 9)));
        if (is_generic(w)) {
            return w;
        }
    }
    throw InvalidArgument("no generic weight found for " + g.name());
}

Weight degenerate_weight(const ReflectionGroup &g, std::size_t reflection, std::mt19937_64 &rng)
{
    if (!g.is_pseudo_reflection(reflection)) {
        throw InvalidArgument("element " + std::to_string(reflection) + " is not a pseudo-reflection");
    }
    const RMatrix &s = g.element(reflection);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Vector v = random_integer_vector(g.dimension(), rng, 9);
        Vector sv = s * v;
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] += sv[i];
        }
        if (!is_zero_vector(v)) {
            return make_weight(g, scaled_i(v));
        }
    }
    throw InvalidArgument("could not build a nonzero weight fixed by element " + std::to_string(reflection));
}

CoeffVector random_coefficients(const InducedModel &m, std::mt19937_64 &rng)
{
    std::uniform_int_distribution<int> dist(-9, 9);
    const Cyclotomic i = Cyclotomic::zeta(4);
    CoeffVector v(m.dimension());
    for (auto &x : v) {
        x = FormalExp(Cyclotomic(static_cast<long>(dist(rng))));
        const int a = dist(rng);
        if (a != 0) {
            x += FormalExp::exp(i * Cyclotomic(static_cast<long>(a)), Cyclotomic(static_cast<long>(dist(rng))));
        }
    }
    return v;
}

} // namespace reflinv
