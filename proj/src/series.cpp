#include "qmf/series.hpp"

namespace qmf {
namespace series {

namespace {

// c *= (1 - q^j) truncated at N
void mul_one_minus_qj(std::vector<i128>& c, long j, long N) {
    for (long m = N; m >= j; --m) c[(size_t)m] -= c[(size_t)(m - j)];
}

// c *= 1/(1 - q^j) truncated at N
void div_one_minus_qj(std::vector<i128>& c, long j, long N) {
    for (long m = j; m <= N; ++m) c[(size_t)m] += c[(size_t)(m - j)];
}

// c *= 1/(1 + q^j) truncated at N
void div_one_plus_qj(std::vector<i128>& c, long j, long N) {
    for (long m = j; m <= N; ++m) c[(size_t)m] -= c[(size_t)(m - j)];
}

std::vector<i128> mul_trunc(const std::vector<i128>& a, const std::vector<i128>& b, long N) {
    std::vector<i128> r((size_t)N + 1, 0);
    for (long i = 0; i <= N; ++i) {
        if (a[(size_t)i] == 0) continue;
        long jmax = N - i;
        for (long j = 0; j <= jmax; ++j) {
            if (b[(size_t)j] == 0) continue;
            r[(size_t)(i + j)] += a[(size_t)i] * b[(size_t)j];
        }
    }
    return r;
}

} // namespace

std::vector<i128> delta_tau(long N) {
    // eta^24 = (eta^3)^8 with eta^3 sparse (exponents k(k+1)/2, signs (2k+1)):
    // seven successive sparse multiplications, O(N sqrt N) total.
    std::vector<std::pair<long, i128>> eta3;
    for (long k = 0; k * (k + 1) / 2 <= N; ++k)
        eta3.push_back({k * (k + 1) / 2, (k & 1) ? -(i128)(2 * k + 1) : (i128)(2 * k + 1)});
    std::vector<i128> acc((size_t)N + 1, 0);
    for (const auto& [e, v] : eta3) acc[(size_t)e] = v;
    for (int pass = 1; pass < 8; ++pass) {
        std::vector<i128> next((size_t)N + 1, 0);
        for (const auto& [e, v] : eta3) {
            for (long m = 0; m + e <= N; ++m) {
                if (acc[(size_t)m] != 0) next[(size_t)(m + e)] += v * acc[(size_t)m];
            }
        }
        acc.swap(next);
    }
    std::vector<i128> tau((size_t)N + 1, 0);
    for (long n = 1; n <= N; ++n) tau[(size_t)n] = acc[(size_t)(n - 1)];
    return tau;
}

std::vector<i128> sigma_coeffs(long N) {
    std::vector<i128> acc((size_t)N + 1, 0);
    std::vector<i128> term((size_t)N + 1, 0);
    term[0] = 1;  // n = 0 term
    for (size_t m = 0; m < acc.size(); ++m) acc[m] += term[m];
    for (long n = 1; n * (n + 1) / 2 <= N; ++n) {
        // term_n = term_{n-1} * q^n / (1 + q^n)
        std::vector<i128> t((size_t)N + 1, 0);
        for (long m = n; m <= N; ++m) t[(size_t)m] = term[(size_t)(m - n)];
        term.swap(t);
        div_one_plus_qj(term, n, N);
        for (size_t m = 0; m < acc.size(); ++m) acc[m] += term[m];
    }
    return acc;
}

std::vector<i128> sigma_star_coeffs(long N) {
    std::vector<i128> acc((size_t)N + 1, 0);
    std::vector<i128> term((size_t)N + 1, 0);
    // n = 1 term: -2 q / (1-q)
    if (N >= 1) {
        term[1] = -2;
        div_one_minus_qj(term, 1, N);
        for (size_t m = 0; m < acc.size(); ++m) acc[m] += term[m];
    }
    for (long n = 2; n * n <= N; ++n) {
        // term_n = term_{n-1} * (-1) * q^{2n-1} / (1 - q^{2n-1})
        std::vector<i128> t((size_t)N + 1, 0);
        long sh = 2 * n - 1;
        for (long m = sh; m <= N; ++m) t[(size_t)m] = -term[(size_t)(m - sh)];
        term.swap(t);
        div_one_minus_qj(term, sh, N);
        for (size_t m = 0; m < acc.size(); ++m) acc[m] += term[m];
    }
    return acc;
}

int chi_plus(int64_t n) {
    if (n <= 0) {
        // odd extension is not part of the stream; callers use n >= 1
        if (n == 0) return 0;
        return -chi_plus(-n);
    }
    if (n % 2 == 0 || n % 3 == 0) return 0;
    int64_t r5 = n % 5;
    if (r5 != 1 && r5 != 4) return 0;
    return ((n / 30) % 2 == 0) ? 1 : -1;
}

std::vector<int64_t> divisor_counts(long N) {
    std::vector<int64_t> d((size_t)N + 1, 0);
    for (long i = 1; i <= N; ++i)
        for (long m = i; m <= N; m += i) ++d[(size_t)m];
    return d;
}

int64_t divisor_count(int64_t n) {
    int64_t cnt = 0;
    for (int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            cnt += 2;
            if (d * d == n) --cnt;
        }
    }
    return cnt;
}

} // namespace series
} // namespace qmf
