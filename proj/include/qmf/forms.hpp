#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qmf/context.hpp"
#include "qmf/cplx.hpp"
#include "qmf/numerics.hpp"
#include "qmf/rational.hpp"

namespace qmf {

enum class FormClass {
    cusp_integer,        // cusp form, integer weight
    cusp_half,           // cusp form, half-integer weight
    eichler_integer,     // Eichler integral of an integer-weight cusp form
    eichler_half,        // Eichler integral of a half-integer-weight cusp form
    maass_periodic,      // periodic function of a Maass waveform, s = 1/2
    eisenstein_periodic, // periodic function of E_{1/2}
    generic
};

enum class MultiplierKind { trivial, theta, phase_table };

struct GroupElement {
    int64_t a = 1, b = 0, c = 0, d = 1;

    GroupElement() = default;
    GroupElement(int64_t a_, int64_t b_, int64_t c_, int64_t d_);

    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
    GroupElement inverse() const { return {d, -b, -c, a}; }
    friend GroupElement operator*(const GroupElement& g1, const GroupElement& g2) {
        return {g1.a * g2.a + g1.b * g2.c, g1.a * g2.b + g1.b * g2.d,
                g1.c * g2.a + g1.d * g2.c, g1.c * g2.b + g1.d * g2.d};
    }
    friend bool operator==(const GroupElement& x, const GroupElement& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }

    Cplx mobius(const Cplx& z) const;
    Cplx j_factor(const Cplx& z) const { return Cplx(Real(c)) * z + Cplx(Real(d)); }
    Rat cusp() const;  // gamma^{-1}(i oo) = -d/c, requires c != 0
    bool in_gamma0(long N) const { return c % N == 0; }
    std::string str() const;
};

// Membership test for the cut plane C_gamma = { z : cz + d not in R_{<=0} }.
struct CutPlaneRegion {
    GroupElement gamma;
    bool contains(const Cplx& z) const;
};

struct Coef {
    Rat mu;                 // exponent
    i128 ival = 0;          // integer part of the value
    Rat mupow;              // value = ival * mu^mupow  (mupow = 0 for plain ints)
    std::shared_ptr<const std::pair<std::string, std::string>> sval;  // user data

    Cplx value() const;
    Real abs_value() const;
};

class FormSpec {
public:
    std::string name;
    Rat weight;            // weight of this object (kappa)
    long level = 1;
    MultiplierKind multiplier = MultiplierKind::trivial;
    FormClass cls = FormClass::generic;
    long constant_term = 0;
    Rat underlying_weight;  // k of the cusp form for Eichler classes; else = weight
    Rat growth_exponent;    // |a(mu)| <= growth_C * mu^growth_exponent
    double growth_C = 1.0;
    Rat exponent_gap;       // positive lower bound for gaps between exponents

    // gamma -> multiplier value w (phase in turns), for forms whose slash
    // factor is known only on specific matrices
    std::vector<std::pair<GroupElement, Rat>> phase_table;
    std::shared_ptr<const FormSpec> companion;  // lower-half-plane partner (sigma*)

    using Generator = std::function<void(std::vector<Coef>&, size_t)>;

    FormSpec() = default;
    FormSpec(const FormSpec&) = delete;
    FormSpec& operator=(const FormSpec&) = delete;

    void set_generator(Generator g) { gen = std::move(g); }

    // Thread-safe prefix access; extends the cache on demand.
    const Coef& coef(size_t i) const;
    size_t cached() const;

    std::optional<Rat> phase_for(const GroupElement& gamma) const;

private:
    mutable std::vector<Coef> cache;
    mutable std::mutex mx;
    Generator gen;
};

using FormPtr = std::shared_ptr<const FormSpec>;

struct EvalResult {
    Cplx value;
    Real tail_est;
    long terms = 0;
};

// Sum of a(mu) e^{2 pi i mu z} plus the constant term, with a rigorous tail
// bound from the stored growth model. Im(z) > 0 required.
EvalResult eval_qseries(const FormSpec& g, const Cplx& z, const PrecisionContext& ctx);

// Same sum along the vertical geodesic z = x0 + i t with exact rational x0;
// the oscillatory phases are reduced exactly, so t may be very small.
EvalResult eval_qseries_geodesic(const FormSpec& g, const Rat& x0, const Real& t,
                                 const PrecisionContext& ctx);

// Coefficient map a(mu) -> a(mu) mu^{1-k}; weight becomes 2-k.
FormPtr eichler_map(const FormPtr& f);

// Multiplier value w with f|_kappa gamma (z) = w (cz+d)^{-kappa} f(gamma z).
Cplx slash_multiplier(const FormSpec& g, const GroupElement& gamma, const Rat& kappa);

// Petersson slash of weight kappa evaluated at z.
Cplx slash(const FormSpec& g, const GroupElement& gamma, const Rat& kappa, const Cplx& z,
           const PrecisionContext& ctx);

// Exact sawtooth ((x)) and Zagier's S(d/c) = 12 s(d,c).
Rat sawtooth(const Rat& x);
Rat dedekind_S(const Rat& x);

// Catalog access; name is one of delta, theta_plus, theta_plus_tilde, sigma,
// sigma_star, eisenstein_half, or user:<path>.
FormPtr catalog_form(const std::string& name);

// Weight-3/2 unary theta with chi_{-4} coefficients (integer exponents n^2);
// used as a unit-normalized Borel test stream.
FormPtr make_theta_chi4();

// Verified matrix for built-in theta experiments: (1,0;120,1).
GroupElement theta_plus_test_gamma();

} // namespace qmf
