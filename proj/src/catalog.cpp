#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "qmf/forms.hpp"
#include "qmf/series.hpp"

namespace qmf {

namespace {

std::shared_ptr<FormSpec> make_delta() {
    auto f = std::make_shared<FormSpec>();
    f->name = "delta";
    f->weight = Rat(12);
    f->level = 1;
    f->multiplier = MultiplierKind::trivial;
    f->cls = FormClass::cusp_integer;
    f->underlying_weight = Rat(12);
    f->growth_exponent = Rat(13, 2);  // |tau(n)| <= d(n) n^{11/2} <= n^{13/2}
    f->growth_C = 1.0;
    f->exponent_gap = Rat(1);
    f->set_generator([](std::vector<Coef>& cache, size_t need) {
        long N = (long)std::max<size_t>(2 * need + 16, 256);
        auto tau = series::delta_tau(N);
        cache.clear();
        for (long n = 1; n <= N; ++n) cache.push_back(Coef{Rat(n), tau[(size_t)n], Rat(0), nullptr});
    });
    return f;
}

void theta_phase_table(FormSpec& f) {
    // Invariance matrices for the built-in theta experiments, with multiplier
    // phases (in turns) pinned by high-precision slash fits.
    f.phase_table.push_back({theta_plus_test_gamma(), Rat(0)});
    f.phase_table.push_back({GroupElement(-1, 0, 120, -1), Rat(-1, 4)});
}

std::shared_ptr<FormSpec> make_theta_plus() {
    auto f = std::make_shared<FormSpec>();
    f->name = "theta_plus";
    f->weight = Rat(3, 2);
    f->level = 14400;
    f->multiplier = MultiplierKind::phase_table;
    f->cls = FormClass::cusp_half;
    f->underlying_weight = Rat(3, 2);
    f->growth_exponent = Rat(1, 2);  // |n chi(n)| = sqrt(120 mu)
    f->growth_C = 11.0;
    f->exponent_gap = Rat(1);
    theta_phase_table(*f);
    f->set_generator([](std::vector<Coef>& cache, size_t need) {
        int64_t n = cache.empty() ? 0 : (int64_t)std::llround(std::sqrt(120.0 * cache.back().mu.to_double()));
        while (cache.size() < need) {
            ++n;
            int ch = series::chi_plus(n);
            if (!ch) continue;
            cache.push_back(Coef{Rat::make((i128)n * n, 120), (i128)ch * n, Rat(0), nullptr});
        }
    });
    return f;
}

std::shared_ptr<FormSpec> make_theta_plus_tilde() {
    auto f = std::make_shared<FormSpec>();
    f->name = "theta_plus_tilde";
    f->weight = Rat(1, 2);
    f->level = 14400;
    f->multiplier = MultiplierKind::phase_table;
    f->cls = FormClass::eichler_half;
    f->underlying_weight = Rat(3, 2);
    f->growth_exponent = Rat(0);
    f->growth_C = 1.0;
    f->exponent_gap = Rat(1);
    theta_phase_table(*f);
    f->set_generator([](std::vector<Coef>& cache, size_t need) {
        int64_t n = cache.empty() ? 0 : (int64_t)std::llround(std::sqrt(120.0 * cache.back().mu.to_double()));
        while (cache.size() < need) {
            ++n;
            int ch = series::chi_plus(n);
            if (!ch) continue;
            cache.push_back(Coef{Rat::make((i128)n * n, 120), (i128)ch, Rat(0), nullptr});
        }
    });
    return f;
}

std::shared_ptr<FormSpec> make_sigma() {
    auto f = std::make_shared<FormSpec>();
    f->name = "sigma";
    f->weight = Rat(1);
    f->level = 2;
    f->multiplier = MultiplierKind::phase_table;
    f->cls = FormClass::maass_periodic;
    f->underlying_weight = Rat(1);
    f->growth_exponent = Rat(1);
    f->growth_C = 50.0;
    f->exponent_gap = Rat(1);
    f->set_generator([](std::vector<Coef>& cache, size_t need) {
        long N = (long)std::max<size_t>(2 * need + 16, 256);
        for (;; N *= 2) {
            auto co = series::sigma_coeffs(N);
            cache.clear();
            for (long m = 0; m <= N; ++m) {
                Rat mu = Rat(m) + Rat(1, 24);
                if (co[(size_t)m] == 0) continue;
                double bound = 50.0 * mu.to_double();
                if ((double)(int64_t)co[(size_t)m] > bound || (double)(int64_t)co[(size_t)m] < -bound)
                    throw NumericalError("sigma: growth model violated");
                cache.push_back(Coef{mu, co[(size_t)m], Rat(0), nullptr});
            }
            if (cache.size() >= need) return;
        }
    });
    return f;
}

std::shared_ptr<FormSpec> make_sigma_star() {
    auto f = std::make_shared<FormSpec>();
    f->name = "sigma_star";
    f->weight = Rat(1);
    f->level = 2;
    f->multiplier = MultiplierKind::phase_table;
    f->cls = FormClass::maass_periodic;
    f->underlying_weight = Rat(1);
    f->growth_exponent = Rat(1);
    f->growth_C = 50.0;
    f->exponent_gap = Rat(1);
    f->set_generator([](std::vector<Coef>& cache, size_t need) {
        long N = (long)std::max<size_t>(2 * need + 16, 256);
        for (;; N *= 2) {
            auto co = series::sigma_star_coeffs(N);
            cache.clear();
            for (long m = 1; m <= N; ++m) {
                if (co[(size_t)m] == 0) continue;
                Rat mu = Rat(m) - Rat(1, 24);
                cache.push_back(Coef{mu, co[(size_t)m], Rat(0), nullptr});
            }
            if (cache.size() >= need) return;
        }
    });
    return f;
}

std::shared_ptr<FormSpec> make_eisenstein_half() {
    auto f = std::make_shared<FormSpec>();
    f->name = "eisenstein_half";
    f->weight = Rat(1);
    f->level = 1;
    f->multiplier = MultiplierKind::trivial;
    f->cls = FormClass::eisenstein_periodic;
    f->underlying_weight = Rat(1);
    f->constant_term = 1;
    f->growth_exponent = Rat(1);
    f->growth_C = 4.0;
    f->exponent_gap = Rat(1);
    f->set_generator([](std::vector<Coef>& cache, size_t need) {
        long N = (long)std::max<size_t>(2 * need + 16, 256);
        auto d = series::divisor_counts(N);
        cache.clear();
        for (long n = 1; n <= N; ++n)
            cache.push_back(Coef{Rat(n), -4 * (i128)d[(size_t)n], Rat(0), nullptr});
    });
    return f;
}

std::shared_ptr<FormSpec> load_user_form(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("catalog_form: cannot open user form file '" + path + "'");
    auto f = std::make_shared<FormSpec>();
    f->name = "user:" + path;
    f->multiplier = MultiplierKind::trivial;
    f->cls = FormClass::generic;
    f->growth_exponent = Rat(1);
    f->growth_C = 1.0;
    auto coefs = std::make_shared<std::vector<Coef>>();
    std::string line;
    Rat prev_mu(0);
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (key == "weight") {
            std::string v; ss >> v; f->weight = Rat::parse(v); f->underlying_weight = f->weight;
        } else if (key == "level") {
            ss >> f->level;
        } else if (key == "multiplier") {
            std::string v; ss >> v;
            if (v == "trivial") f->multiplier = MultiplierKind::trivial;
            else if (v == "theta") f->multiplier = MultiplierKind::theta;
            else throw UsageError("user form: unknown multiplier '" + v + "'");
        } else if (key == "constant") {
            long ct; ss >> ct; f->constant_term = ct;
        } else if (key == "growth") {
            std::string e; double C; ss >> e >> C;
            f->growth_exponent = Rat::parse(e); f->growth_C = C;
        } else {
            // "mu_num mu_den re im"
            int64_t num, den;
            std::string re_s, im_s;
            std::istringstream ls(line);
            if (!(ls >> num >> den >> re_s >> im_s))
                throw UsageError("user form: malformed line '" + line + "'");
            Rat mu(num, den);
            if (!(prev_mu < mu) || mu.sign() <= 0)
                throw UsageError("user form: exponents must be positive and strictly increasing");
            prev_mu = mu;
            Coef c;
            c.mu = mu;
            c.sval = std::make_shared<const std::pair<std::string, std::string>>(re_s, im_s);
            coefs->push_back(std::move(c));
        }
    }
    if (coefs->empty()) throw UsageError("user form: no coefficients in '" + path + "'");
    Rat gap = coefs->size() > 1 ? (*coefs)[1].mu - (*coefs)[0].mu : Rat(1);
    for (size_t i = 2; i < coefs->size(); ++i) {
        Rat g2 = (*coefs)[i].mu - (*coefs)[i - 1].mu;
        if (g2 < gap) gap = g2;
    }
    f->exponent_gap = gap;
    f->set_generator([coefs](std::vector<Coef>& cache, size_t need) {
        while (cache.size() < need && cache.size() < coefs->size())
            cache.push_back((*coefs)[cache.size()]);
        if (cache.size() < need)
            throw NumericalError("user form: finitely many coefficients available");
    });
    return f;
}

} // namespace

GroupElement theta_plus_test_gamma() { return GroupElement(1, 0, 120, 1); }

FormPtr make_theta_chi4() {
    auto f = std::make_shared<FormSpec>();
    f->name = "theta_chi4";
    f->weight = Rat(3, 2);
    f->level = 64;
    f->multiplier = MultiplierKind::phase_table;
    f->cls = FormClass::cusp_half;
    f->underlying_weight = Rat(3, 2);
    f->growth_exponent = Rat(1, 2);
    f->growth_C = 1.0;
    f->exponent_gap = Rat(8);
    f->set_generator([](std::vector<Coef>& cache, size_t need) {
        int64_t n = cache.empty() ? -1 : (int64_t)std::llround(std::sqrt(cache.back().mu.to_double()));
        while (cache.size() < need) {
            n += 2;  // odd n only
            int ch = kronecker_symbol(-4, n);
            cache.push_back(Coef{Rat::make((i128)n * n, 1), (i128)ch * n, Rat(0), nullptr});
        }
    });
    return f;
}

FormPtr catalog_form(const std::string& name) {
    static std::map<std::string, FormPtr> cache;
    static std::mutex mx;
    if (name.rfind("user:", 0) == 0) return load_user_form(name.substr(5));
    std::lock_guard<std::mutex> lk(mx);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    FormPtr f;
    if (name == "delta") f = make_delta();
    else if (name == "theta_plus") f = make_theta_plus();
    else if (name == "theta_plus_tilde") f = make_theta_plus_tilde();
    else if (name == "sigma") {
        if (!cache.count("sigma_star")) cache["sigma_star"] = make_sigma_star();
        auto s = make_sigma();
        s->companion = cache["sigma_star"];
        f = s;
    }
    else if (name == "sigma_star") f = make_sigma_star();
    else if (name == "eisenstein_half") f = make_eisenstein_half();
    else if (name == "delta_eichler") {
        if (!cache.count("delta")) cache["delta"] = make_delta();
        f = eichler_map(cache["delta"]);
    }
    else throw UsageError("catalog_form: unknown form '" + name + "'");
    cache[name] = f;
    return f;
}

} // namespace qmf
