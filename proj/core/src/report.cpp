#include "reflinv/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "reflinv/eigenspace.hpp"
#include "reflinv/error.hpp"
#include "reflinv/invariants.hpp"
#include "reflinv/molien.hpp"

#ifndef REFLINV_VERSION
#define REFLINV_VERSION "0.0.0"
#endif

namespace reflinv {

std::string tool_version() { return REFLINV_VERSION; }

std::string command_name(Command c)
{
    switch (c) {
    case Command::Info:
        return "info";
    case Command::Molien:
        return "molien";
    case Command::Invariants:
        return "invariants";
    case Command::Harmonics:
        return "harmonics";
    case Command::Eigenspace:
        return "eigenspace";
    case Command::VerifyAll:
        return "verify-all";
    }
    return "unknown";
}

namespace {

using ojson = nlohmann::ordered_json;

// Check keys, in report order. They are part of the stable wire format.
constexpr const char *kKeyReflectionGroup = "def-1.1";
constexpr const char *kKeyDegrees = "lemma-4.2/degree-extraction";
constexpr const char *kKeyMolien = "lemma-4.3";
constexpr const char *kKeyDegreeProduct = "lemma-4.5";
constexpr const char *kKeyHarmonics = "thm-4.11";
constexpr const char *kKeyIrreducible = "thm-4.14";
constexpr const char *kKeyIntertwiner = "thm-3.10";
const std::vector<std::string> kCheckKeys = {kKeyReflectionGroup, kKeyDegrees,    kKeyMolien,     kKeyDegreeProduct,
                                             kKeyHarmonics,       kKeyIrreducible, kKeyIntertwiner};

// Rank used when folding per-weight statuses: fail dominates, then pass,
// then the non-generic status, then not-run.
int status_rank(const std::string &s)
{
    if (s == kFail) {
        return 3;
    }
    if (s == kPass) {
        return 2;
    }
    if (s == kNonGeneric) {
        return 1;
    }
    return 0;
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const
    {
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return std::round(s * 1000.0) / 1000.0;
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::vector<long> as_longs(const std::vector<std::size_t> &v) { return std::vector<long>(v.begin(), v.end()); }

std::vector<std::string> poly_texts(const std::vector<Poly> &ps)
{
    std::vector<std::string> out;
    for (const auto &p : ps) {
        out.push_back(p.to_string());
    }
    return out;
}

struct WeightInput {
    Weight weight;
    std::string origin; // "user" or "seeded-random"
    std::uint64_t seed;
};

class Pipeline {
public:
    Pipeline(const ReflectionGroup &g, const ReportOptions &opt) : g_(g), opt_(opt)
    {
        for (const auto &k : kCheckKeys) {
            checks_[k] = kNotRun;
        }
    }

    Report run(Command command)
    {
        if (opt_.precision < 53) {
            throw InvalidArgument("precision must be at least 53 bits");
        }
        // Parse user weights before any heavy work so input errors surface first.
        const auto weights = prepare_weights(command);

        const bool orthogonal = stage_group();
        const int depth = static_cast<int>(command);
        if (orthogonal && depth >= static_cast<int>(Command::Molien)) {
            if (stage_molien() && depth >= static_cast<int>(Command::Invariants)) {
                if (stage_invariants() && depth >= static_cast<int>(Command::Harmonics)) {
                    if (stage_harmonics() && depth >= static_cast<int>(Command::Eigenspace)) {
                        stage_eigenspace(weights);
                    }
                }
            }
        }
        return assemble(command, weights);
    }

private:
    // -- weights ------------------------------------------------------------

    std::vector<WeightInput> prepare_weights(Command command)
    {
        std::vector<WeightInput> out;
        if (command != Command::Eigenspace && command != Command::VerifyAll) {
            return out;
        }
        for (std::size_t i = 0; i < opt_.weights.size(); ++i) {
            out.push_back({parse_weight(g_, opt_.weights[i]), "user", derived_seed(i)});
        }
        if (out.empty()) {
            std::mt19937_64 rng(opt_.seed);
            out.push_back({random_generic_weight(g_, rng), "seeded-random", derived_seed(0)});
        }
        return out;
    }

    std::uint64_t derived_seed(std::size_t index) const
    {
        return opt_.seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(index + 1);
    }

    void set(const std::string &key, const std::string &status, const std::string &diagnostic = {})
    {
        checks_[key] = status;
        if (!diagnostic.empty()) {
            diagnostics_[key] = diagnostic;
        }
    }

    // -- stages -------------------------------------------------------------

    bool stage_group()
    {
        Stopwatch sw;
        bool orthogonal = true;
        std::string why;
        try {
            check_orthogonal(g_);
        } catch (const NotOrthogonal &e) {
            orthogonal = false;
            why = e.what();
        }
        const bool generated = orthogonal && g_.generated_subgroup(g_.reflection_indices()).size() == g_.order();
        group_ = ojson::object();
        group_["name"] = g_.name();
        group_["dimension"] = g_.dimension();
        group_["order"] = g_.order();
        group_["cyclotomic_order"] = g_.cyclotomic_order();
        group_["reflection_count"] = g_.reflection_count();
        group_["orthogonal"] = orthogonal;
        group_["pseudo_reflection_group"] = generated;
        if (!orthogonal) {
            set(kKeyReflectionGroup, kFail, why);
        } else if (!generated) {
            set(kKeyReflectionGroup, kFail, "the pseudo-reflections generate a proper subgroup of order " +
                                      std::to_string(g_.generated_subgroup(g_.reflection_indices()).size()));
        } else {
            set(kKeyReflectionGroup, kPass);
        }
        timings_["group"] = sw.seconds();
        return orthogonal;
    }

    bool stage_molien()
    {
        Stopwatch sw;
        const std::size_t shown = opt_.max_degree.value_or(default_truncation(g_));
        const std::size_t N = std::max<std::size_t>(shown, default_truncation(g_));
        molien_ = ojson::object();
        molien_["truncation"] = shown;
        try {
            series_ = molien(g_, N);
        } catch (const ConsistencyError &e) {
            set(kKeyMolien, kFail, e.what());
            timings_["molien"] = sw.seconds();
            return false;
        }
        const auto coeffs = series_.to_integers();
        molien_["molien_coefficients"] = std::vector<long>(coeffs.begin(), coeffs.begin() + shown + 1);
        const std::size_t fixed = fixed_space_dimension(g_);
        molien_["fixed_space_dimension"] = fixed;

        bool extracted = false;
        try {
            degrees_ = extract_degrees(series_, g_.dimension(), g_.order());
            extracted = true;
        } catch (const NotReflectionSeries &e) {
            set(kKeyDegrees, kFail, e.what());
        }

        // Cross-check the series against Reynolds-projection dimensions.
        unsigned check_to = 8;
        if (extracted) {
            check_to = 2 * *std::max_element(degrees_.begin(), degrees_.end());
        }
        check_to = static_cast<unsigned>(std::min<std::size_t>(check_to, shown));
        GroupActionCache cache(g_);
        bool dims_match = true;
        for (unsigned k = 0; k <= check_to; ++k) {
            if (static_cast<long>(invariant_subspace(cache, k).size()) != coeffs[k]) {
                dims_match = false;
                set(kKeyMolien, kFail, "dim of degree-" + std::to_string(k) + " invariants differs from the series");
                break;
            }
        }
        molien_["invariant_dims_checked_up_to"] = check_to;
        molien_["invariant_dims_match"] = dims_match;
        if (dims_match) {
            if (coeffs[0] != 1 || coeffs[1] != static_cast<long>(fixed)) {
                set(kKeyMolien, kFail, "low-order coefficients disagree with the fixed subspace");
            } else {
                set(kKeyMolien, kPass);
            }
        }

        if (extracted) {
            long product = 1;
            for (auto d : degrees_) {
                product *= d;
            }
            molien_["degrees"] = degrees_;
            molien_["degree_product"] = product;
            molien_["group_order"] = g_.order();
            set(kKeyDegrees, kPass);
            set(kKeyDegreeProduct, product == static_cast<long>(g_.order()) ? kPass : kFail);
        } else {
            molien_["degrees"] = ojson::array();
            molien_["group_order"] = g_.order();
        }
        timings_["molien"] = sw.seconds();
        return extracted && checks_[kKeyMolien] == kPass;
    }

    bool stage_invariants()
    {
        Stopwatch sw;
        invariants_ = ojson::object();
        try {
            fundamental_ = find_fundamental_invariants(g_, degrees_);
        } catch (const Error &e) {
            set(kKeyDegrees, kFail, e.what());
            timings_["invariants"] = sw.seconds();
            return false;
        }
        invariants_["fundamental_invariants"] = poly_texts(fundamental_.generators);
        invariants_["degrees"] = fundamental_.degrees;
        invariants_["jacobian_independent"] = jacobian_independent(fundamental_.generators);
        timings_["invariants"] = sw.seconds();
        return true;
    }

    bool stage_harmonics()
    {
        Stopwatch sw;
        harmonics_ = ojson::object();
        try {
            harmonic_ = compute_harmonics(g_, fundamental_);
        } catch (const ConsistencyError &e) {
            set(kKeyHarmonics, kFail, e.what());
            timings_["harmonics"] = sw.seconds();
            return false;
        }
        unsigned top = 0;
        for (auto d : fundamental_.degrees) {
            top += d - 1;
        }
        const auto hilbert = harmonic_hilbert(fundamental_.degrees, top).to_integers();
        const std::size_t identity_to = 2 * g_.order();
        const bool identity = series_identity_check(series_, fundamental_.degrees, g_.dimension(), identity_to);
        const unsigned decomposition_to = opt_.max_degree.value_or(top + 1);
        const auto decomposition = verify_product_decomposition(g_, fundamental_, harmonic_, decomposition_to);

        harmonics_["harmonic_dims"] = as_longs(harmonic_.dims());
        harmonics_["harmonic_total"] = harmonic_.total_dimension;
        harmonics_["hilbert_coefficients"] = hilbert;
        harmonics_["series_identity_verified"] = identity;
        harmonics_["series_identity_truncation"] = identity_to;
        harmonics_["product_decomposition_verified"] = decomposition.ok;
        harmonics_["product_decomposition_max_degree"] = decomposition_to;
        if (decomposition.failing_degree) {
            harmonics_["product_decomposition_failing_degree"] = *decomposition.failing_degree;
        }
        ojson basis = ojson::array();
        for (const auto &layer : harmonic_.basis) {
            basis.push_back(poly_texts(layer));
        }
        harmonics_["harmonic_basis"] = basis;

        std::string why;
        if (harmonic_.total_dimension != g_.order()) {
            why = "harmonic total differs from the group order";
        } else if (!identity) {
            why = "series identity fails below t^" + std::to_string(identity_to + 1);
        } else if (!decomposition.ok) {
            why = "products of invariants and harmonics do not span degree " +
                  std::to_string(*decomposition.failing_degree);
        }
        set(kKeyHarmonics, why.empty() ? kPass : kFail, why);
        timings_["harmonics"] = sw.seconds();
        return why.empty();
    }

    // Eigenvalues of the two invariant operators of a planar group with
    // degrees {2, n}, checked on every orbit plane wave.
    ojson operator_eigenvalues(const InducedModel &m, const PlaneWaveSum &fu, bool &ok)
    {
        ojson out = ojson::object();
        const unsigned n = fundamental_.degrees[1];
        const Cyclotomic i = Cyclotomic::zeta(4);
        const Poly x1 = Poly::variable(2, 0);
        const Poly x2 = Poly::variable(2, 1);
        const Poly p1 = (x1 * x1 + x2 * x2) * Cyclotomic(Rational(1, 4));
        const Poly p2 = ((x1 - x2 * i).pow(n) + (x1 + x2 * i).pow(n)) * Cyclotomic(2).pow(-static_cast<long>(n));
        const Vector &l = m.weight.lambda;
        const Cyclotomic formula1 = Cyclotomic(Rational(1, 4)) * (l[0] * l[0] + l[1] * l[1]);
        const Cyclotomic formula2 =
            Cyclotomic(2).pow(-static_cast<long>(n)) * ((l[0] - i * l[1]).pow(n) + (l[0] + i * l[1]).pow(n));

        auto entry = [&](const Poly &symbol, const Cyclotomic &formula, unsigned degree) {
            ojson e = ojson::object();
            e["degree"] = degree;
            e["symbol"] = symbol.to_string();
            const bool invariant = reynolds(g_, symbol) == symbol;
            e["symbol_invariant"] = invariant;
            if (!invariant) {
                e["status"] = kNotRun;
                return e;
            }
            const Cyclotomic value = symbol.evaluate(l);
            const bool on_orbit = apply_operator(symbol, fu) == fu.scaled(FormalExp(value));
            e["eigenvalue"] = value.to_string();
            e["formula_value"] = formula.to_string();
            e["orbit_waves_agree"] = on_orbit;
            const bool good = on_orbit && value == formula;
            e["status"] = good ? kPass : kFail;
            ok = ok && good;
            return e;
        };
        out["operators"] = ojson::array({entry(p1, formula1, 2), entry(p2, formula2, n)});
        out["note"] = "weight entries are the full purely imaginary values lambda_j; for lambda = i*(a, b) the "
                      "degree-2 eigenvalue (1/4)(lambda_1^2 + lambda_2^2) equals -(a^2 + b^2)/4";
        return out;
    }

    void stage_eigenspace(const std::vector<WeightInput> &weights)
    {
        Stopwatch sw;
        eigenspace_ = ojson::array();
        std::string fold14 = kNotRun, fold310 = kNotRun;
        const std::size_t order = g_.order();
        for (std::size_t wi = 0; wi < weights.size(); ++wi) {
            const auto &input = weights[wi];
            std::mt19937_64 rng(input.seed);
            ojson e = ojson::object();
            e["weight"] = weight_to_string(input.weight);
            e["weight_origin"] = input.origin;
            e["seed"] = input.seed;

            const InducedModel m = make_model(input.weight);
            const bool generic = is_generic(input.weight);
            const std::size_t distinct = m.orbit.distinct();
            e["generic"] = generic;
            e["orbit_size_distinct"] = distinct;

            const std::size_t eval_rank = evaluation_matrix(input.weight, harmonic_).rank();
            e["evaluation_rank"] = eval_rank;

            std::string status14, status310, why;
            const auto samples = standard_samples(g_, rng);
            std::size_t commutant = 0;
            bool commutant_ok = true;
            try {
                const auto c = commutant_dimension(m, samples, opt_.precision);
                commutant = c.exact;
                e["commutant_dim"] = c.exact;
                e["commutant_numeric_dim"] = c.numeric;
            } catch (const ConsistencyError &err) {
                commutant_ok = false;
                why = err.what();
                e["commutant_dim"] = commutant_dimension_exact(m);
            }

            const std::size_t dual_rank = dual_orbit_rank(m, samples, opt_.precision);
            e["dual_orbit_rank"] = dual_rank;
            e["dual_cyclic"] = dual_rank == order;

            bool unitary = true;
            {
                PrecisionScope scope(opt_.precision);
                const Real tolerance = ldexp(Real(1), -static_cast<int>(opt_.precision / 2));
                for (std::size_t s = 0; s < std::min<std::size_t>(4, samples.size()); ++s) {
                    unitary = unitary && unitarity_defect(m, samples[s], opt_.precision) <= tolerance;
                }
            }
            e["unitary_numeric"] = unitary;

            const PlaneWaveSum fu = intertwiner(m, all_ones(m));
            const bool eigen = eigen_check(fu, fundamental_, input.weight);
            e["eigen_check"] = eigen;

            std::size_t passed = 0;
            for (std::size_t t = 0; t < opt_.equivariance_trials; ++t) {
                const GroupElement gel = random_element(g_, rng);
                if (equivariance_check(m, gel, random_coefficients(m, rng))) {
                    ++passed;
                }
            }
            const bool equivariant = passed == opt_.equivariance_trials;
            e["equivariance_trials"] = opt_.equivariance_trials;
            e["equivariance_passed"] = passed;
            e["intertwiner_injective"] = eval_rank == order;

            bool operators_ok = true;
            if (g_.dimension() == 2 && fundamental_.degrees.size() == 2 && fundamental_.degrees[0] == 2) {
                e["operator_eigenvalues"] = operator_eigenvalues(m, fu, operators_ok);
            }

            if (generic) {
                const bool certified =
                    commutant_ok && eval_rank == order && commutant == 1 && eigen && operators_ok;
                e["irreducible_certified"] = certified;
                status14 = certified ? kPass : kFail;
                status310 = equivariant && eval_rank == order && dual_rank == order && unitary ? kPass : kFail;
            } else {
                e["irreducible_certified"] = false;
                // Outside the certified range: still check the expected degenerate picture.
                const bool consistent = commutant_ok && eval_rank == distinct && eval_rank < order &&
                                        commutant == order / distinct && commutant > 1 && eigen && operators_ok;
                status14 = consistent ? kNonGeneric : kFail;
                status310 = equivariant && dual_rank == distinct && unitary ? kNonGeneric : kFail;
            }
            if (status14 == kFail && why.empty()) {
                why = "weight " + weight_to_string(input.weight) + ": eigenspace certificate failed";
            }
            e[kKeyIrreducible] = status14;
            e[kKeyIntertwiner] = status310;
            if (status_rank(status14) > status_rank(fold14)) {
                fold14 = status14;
                if (status14 == kFail) {
                    diagnostics_[kKeyIrreducible] = why;
                }
            }
            if (status_rank(status310) > status_rank(fold310)) {
                fold310 = status310;
                if (status310 == kFail) {
                    diagnostics_[kKeyIntertwiner] = "weight " + weight_to_string(input.weight) + ": intertwiner checks failed";
                }
            }
            eigenspace_.push_back(std::move(e));
        }
        checks_[kKeyIrreducible] = fold14;
        checks_[kKeyIntertwiner] = fold310;
        timings_["eigenspace"] = sw.seconds();
    }

    // -- assembly -----------------------------------------------------------

    Report assemble(Command command, const std::vector<WeightInput> &weights)
    {
        ojson j = ojson::object();
        j["schema_version"] = kSchemaVersion;
        j["tool"] = "reflinv";
        j["tool_version"] = tool_version();
        j["command"] = command_name(command);
        j["source"] = opt_.source;
        j["group"] = group_;
        if (!molien_.is_null()) {
            j["molien"] = molien_;
        }
        if (!invariants_.is_null()) {
            j["invariants"] = invariants_;
        }
        if (!harmonics_.is_null()) {
            j["harmonics"] = harmonics_;
        }
        if (!eigenspace_.is_null()) {
            j["eigenspace"] = eigenspace_;
        }
        ojson checks = ojson::object();
        Report r;
        for (const auto &k : kCheckKeys) {
            checks[k] = checks_[k];
            if (checks_[k] == kFail) {
                r.failing_keys.push_back(k);
            }
        }
        r.passed = r.failing_keys.empty();
        j["checks"] = checks;
        j["status"] = r.passed ? kPass : kFail;
        j["failing_keys"] = r.failing_keys;
        if (!diagnostics_.empty()) {
            ojson d = ojson::object();
            for (const auto &k : kCheckKeys) {
                auto it = diagnostics_.find(k);
                if (it != diagnostics_.end() && checks_[k] == kFail) {
                    d[k] = it->second;
                }
            }
            if (!d.empty()) {
                j["diagnostics"] = d;
            }
        }
        ojson seeds = ojson::object();
        seeds["seed"] = opt_.seed;
        ojson ws = ojson::array();
        for (const auto &w : weights) {
            ws.push_back(w.seed);
        }
        seeds["weight_seeds"] = ws;
        j["seeds"] = seeds;
        if (opt_.timings) {
            j["timings"] = timings_;
        }
        r.json = j.dump(2) + "\n";
        std::ostringstream text;
        render_text(text, j, 0);
        r.text = text.str();
        return r;
    }

    static std::string scalar_text(const ojson &v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

    static void render_text(std::ostringstream &out, const ojson &v, int indent)
    {
        const std::string pad(static_cast<std::size_t>(indent), ' ');
        for (auto it = v.begin(); it != v.end(); ++it) {
            const ojson &val = it.value();
            if (val.is_object()) {
                out << pad << it.key() << ":\n";
                render_text(out, val, indent + 2);
            } else if (val.is_array() && std::any_of(val.begin(), val.end(), [](const ojson &x) {
                           return x.is_object() || x.is_array();
                       })) {
                out << pad << it.key() << ":\n";
                for (const auto &item : val) {
                    if (item.is_object()) {
                        out << pad << "  -\n";
                        render_text(out, item, indent + 4);
                    } else {
                        std::string line;
                        for (const auto &x : item) {
                            line += (line.empty() ? "" : "; ") + scalar_text(x);
                        }
                        out << pad << "  - " << line << "\n";
                    }
                }
            } else if (val.is_array()) {
                std::string line;
                for (const auto &x : val) {
                    line += (line.empty() ? "" : ", ") + scalar_text(x);
                }
                out << pad << it.key() << ": " << line << "\n";
            } else {
                out << pad << it.key() << ": " << scalar_text(val) << "\n";
            }
        }
    }

    const ReflectionGroup &g_;
    const ReportOptions &opt_;
    std::map<std::string, std::string> checks_;
    std::map<std::string, std::string> diagnostics_;
    ojson group_, molien_, invariants_, harmonics_, eigenspace_;
    ojson timings_ = ojson::object();
    SeriesQ series_;
    std::vector<unsigned> degrees_;
    FundamentalInvariants fundamental_;
    HarmonicSpace harmonic_;
};

} // namespace

Report run_report(Command command, const ReflectionGroup &g, const ReportOptions &options)
{
    Pipeline p(g, options);
    return p.run(command);
}

} // namespace reflinv
