#include "reflinv/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include <boost/math/constants/constants.hpp>

#include "reflinv/error.hpp"

namespace reflinv {

namespace {

constexpr unsigned kGuardBits = 32;

// Powers of a primitive m-th root of unity, cached per (m, digits10).
const std::vector<Complex> &roots_of_unity(unsigned m)
{
    thread_local std::map<std::pair<unsigned, unsigned>, std::vector<Complex>> cache;
    const unsigned digits = Real::default_precision();
    auto key = std::make_pair(m, digits);
    auto it = cache.find(key);
    if (it != cache.end()) {
        return it->second;
    }
    std::vector<Complex> roots;
    roots.reserve(m);
    const Real two_pi = 2 * boost::math::constants::pi<Real>();
    for (unsigned j = 0; j < m; ++j) {
        const Real theta = two_pi * j / m;
        roots.emplace_back(cos(theta), sin(theta));
    }
    return cache.emplace(key, std::move(roots)).first->second;
}

Real to_real(const Rational &r)
{
    Real num(r.get_num().get_mpz_t());
    Real den(r.get_den().get_mpz_t());
    return num / den;
}

} // namespace

unsigned bits_to_digits10(unsigned bits)
{
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

PrecisionScope::PrecisionScope(unsigned bits) : saved_digits10_(Real::default_precision())
{
    Real::default_precision(bits_to_digits10(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_digits10_); }

Complex embed_complex(const Cyclotomic &a)
{
    if (a.is_rational()) {
        return {to_real(a.coefficient(0)), Real(0)};
    }
    const auto &roots = roots_of_unity(a.order());
    Complex out;
    for (unsigned j = 0; j < a.degree(); ++j) {
        const Rational c = a.coefficient(j);
        if (c != 0) {
            out += roots[j] * to_real(c);
        }
    }
    return out;
}

Complex embed_complex(const Cyclotomic &a, unsigned bits)
{
    if (bits < 53) {
        throw InvalidArgument("embedding precision must be at least 53 bits");
    }
    PrecisionScope scope(bits + kGuardBits);
    return embed_complex(a);
}

Complex exp_complex(const Cyclotomic &z)
{
    const Complex w = embed_complex(z);
    const Real mag = exp(w.re);
    return {mag * cos(w.im), mag * sin(w.im)};
}

namespace {

// Contiguous block of raw MPFR numbers; the Jacobi inner loops below work on
// these directly to avoid expression-template temporaries.
class MpfrBlock {
public:
    MpfrBlock(std::size_t n, mpfr_prec_t prec) : data_(n)
    {
        for (auto &x : data_) {
            mpfr_init2(&x, prec);
            mpfr_set_zero(&x, 1);
        }
    }
    ~MpfrBlock()
    {
        for (auto &x : data_) {
            mpfr_clear(&x);
        }
    }
    MpfrBlock(const MpfrBlock &) = delete;
    MpfrBlock &operator=(const MpfrBlock &) = delete;

    mpfr_ptr operator[](std::size_t i) { return &data_[i]; }

private:
    std::vector<__mpfr_struct> data_;
};

} // namespace

std::vector<Real> singular_values(ComplexMatrix a)
{
    const std::size_t rows = a.size();
    if (rows == 0) {
        return {};
    }
    const std::size_t cols = a[0].size();
    const mpfr_prec_t prec = mpfr_get_prec(Real(0).backend().data());
    constexpr mpfr_rnd_t rnd = MPFR_RNDN;

    // Column-major storage: re[j * rows + i], im[j * rows + i].
    MpfrBlock re(rows * cols, prec), im(rows * cols, prec);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            mpfr_set(re[j * rows + i], a[i][j].re.backend().data(), rnd);
            mpfr_set(im[j * rows + i], a[i][j].im.backend().data(), rnd);
        }
    }
    a.clear();

    MpfrBlock t(16, prec);
    mpfr_ptr alpha = t[0], beta = t[1], gre = t[2], gim = t[3], tmp = t[4], g = t[5], bound = t[6], zeta = t[7],
             tt = t[8], cs = t[9], sn = t[10], pre = t[11], pim = t[12], eps = t[13], aqr = t[14], aqi = t[15];
    mpfr_set_ui_2exp(eps, 1, -static_cast<long>(std::max<mpfr_prec_t>(16, prec - 8)), rnd);

    for (int sweep = 0; sweep < 80; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < cols; ++p) {
            for (std::size_t q = p + 1; q < cols; ++q) {
                mpfr_set_zero(alpha, 1);
                mpfr_set_zero(beta, 1);
                mpfr_set_zero(gre, 1);
                mpfr_set_zero(gim, 1);
                for (std::size_t i = 0; i < rows; ++i) {
                    mpfr_ptr pr = re[p * rows + i], pi = im[p * rows + i];
                    mpfr_ptr qr = re[q * rows + i], qi = im[q * rows + i];
                    mpfr_fmma(tmp, pr, pr, pi, pi, rnd);
                    mpfr_add(alpha, alpha, tmp, rnd);
                    mpfr_fmma(tmp, qr, qr, qi, qi, rnd);
                    mpfr_add(beta, beta, tmp, rnd);
                    // conj(p) * q
                    mpfr_fmma(tmp, pr, qr, pi, qi, rnd);
                    mpfr_add(gre, gre, tmp, rnd);
                    mpfr_fmms(tmp, pr, qi, pi, qr, rnd);
                    mpfr_add(gim, gim, tmp, rnd);
                }
                mpfr_hypot(g, gre, gim, rnd);
                if (mpfr_zero_p(g)) {
                    continue;
                }
                mpfr_mul(bound, alpha, beta, rnd);
                mpfr_sqrt(bound, bound, rnd);
                mpfr_mul(bound, bound, eps, rnd);
                if (mpfr_lessequal_p(g, bound)) {
                    continue;
                }
                rotated = true;
                // phase_conj = conj(gamma) / |gamma|
                mpfr_div(pre, gre, g, rnd);
                mpfr_div(pim, gim, g, rnd);
                mpfr_neg(pim, pim, rnd);
                // zeta = (beta - alpha) / (2 g); t = sign(zeta) / (|zeta| + sqrt(1 + zeta^2))
                mpfr_sub(zeta, beta, alpha, rnd);
                mpfr_div(zeta, zeta, g, rnd);
                mpfr_div_2ui(zeta, zeta, 1, rnd);
                mpfr_sqr(tmp, zeta, rnd);
                mpfr_add_ui(tmp, tmp, 1, rnd);
                mpfr_sqrt(tmp, tmp, rnd);
                mpfr_abs(tt, zeta, rnd);
                mpfr_add(tmp, tmp, tt, rnd);
                mpfr_ui_div(tt, 1, tmp, rnd);
                if (mpfr_sgn(zeta) < 0) {
                    mpfr_neg(tt, tt, rnd);
                }
                // cs = 1 / sqrt(1 + t^2), sn = cs * t
                mpfr_sqr(tmp, tt, rnd);
                mpfr_add_ui(tmp, tmp, 1, rnd);
                mpfr_rec_sqrt(cs, tmp, rnd);
                mpfr_mul(sn, cs, tt, rnd);
                for (std::size_t i = 0; i < rows; ++i) {
                    mpfr_ptr pr = re[p * rows + i], pi = im[p * rows + i];
                    mpfr_ptr qr = re[q * rows + i], qi = im[q * rows + i];
                    // aq = q * phase_conj
                    mpfr_fmms(aqr, qr, pre, qi, pim, rnd);
                    mpfr_fmma(aqi, qr, pim, qi, pre, rnd);
                    // q' = p sn + aq cs ; p' = p cs - aq sn
                    mpfr_fmma(qr, pr, sn, aqr, cs, rnd);
                    mpfr_fmma(qi, pi, sn, aqi, cs, rnd);
                    mpfr_fmms(pr, pr, cs, aqr, sn, rnd);
                    mpfr_fmms(pi, pi, cs, aqi, sn, rnd);
                }
            }
        }
        if (!rotated) {
            break;
        }
    }
    std::vector<Real> sv;
    sv.reserve(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        mpfr_set_zero(alpha, 1);
        for (std::size_t i = 0; i < rows; ++i) {
            mpfr_fmma(tmp, re[j * rows + i], re[j * rows + i], im[j * rows + i], im[j * rows + i], rnd);
            mpfr_add(alpha, alpha, tmp, rnd);
        }
        mpfr_sqrt(alpha, alpha, rnd);
        Real s;
        mpfr_set(s.backend().data(), alpha, rnd);
        sv.push_back(std::move(s));
    }
    std::sort(sv.begin(), sv.end(), [](const Real &x, const Real &y) { return x > y; });
    return sv;
}

Real rank_threshold(const std::vector<Real> &singular, unsigned bits)
{
    Real scale(1);
    if (!singular.empty() && singular.front() > scale) {
        scale = singular.front();
    }
    return pow(Real(2), -static_cast<long>(bits / 2)) * scale;
}

std::size_t numeric_rank(const std::vector<Real> &singular, unsigned bits)
{
    const Real tau = rank_threshold(singular, bits);
    return static_cast<std::size_t>(
        std::count_if(singular.begin(), singular.end(), [&](const Real &s) { return s > tau; }));
}

} // namespace reflinv
