#include "core/bounds.hpp"

#include <cmath>
#include <thread>
#include <vector>

#include "core/errors.hpp"
#include "core/zimin_check.hpp"

namespace zimav {

namespace {

void require_alphabet(int q, int min_q) {
    if (q < min_q || q > kMaxAlphabet)
        throw domain_error("alphabet size out of range");
}

mpz_class pow_mpz(unsigned long base, unsigned long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

// q^e for signed e, as an exact rational.
mpq_class pow_q_signed(int q, long e) {
    if (e >= 0) return mpq_class(pow_mpz((unsigned long)q, (unsigned long)e));
    mpq_class r(1, pow_mpz((unsigned long)q, (unsigned long)(-e)));
    r.canonicalize();
    return r;
}

// Counts Z_n-instances among words with index in [lo, hi), where the index
// is read as an M-digit base-q numeral.
mpz_class count_range(std::uint32_t n, int q, std::uint32_t M,
                      unsigned long lo, unsigned long hi) {
    Word w;
    w.alphabet_size = q;
    w.letters.assign(M, 0);
    unsigned long idx = lo;
    for (std::uint32_t pos = M; pos-- > 0 && idx > 0;) {
        w.letters[pos] = std::uint8_t(idx % (unsigned long)q);
        idx /= (unsigned long)q;
    }
    unsigned long local = 0;
    for (unsigned long i = lo; i < hi; ++i) {
        if (is_zimin_instance(w, n)) ++local;
        for (std::uint32_t pos = M; pos-- > 0;) {
            if (++w.letters[pos] < q) break;
            w.letters[pos] = 0;
        }
    }
    return mpz_class(local);
}

} // namespace

InstanceCount count_instances(std::uint32_t n, int q, std::uint32_t M,
                              unsigned long budget, int jobs) {
    require_alphabet(q, 1);
    mpz_class total = pow_mpz((unsigned long)q, M);
    if (total > budget)
        throw size_error("q^M exceeds the enumeration budget");
    unsigned long words = total.get_ui();

    InstanceCount out{n, q, M, 0};
    if (jobs < 1) jobs = 1;
    if (jobs == 1 || words < 4096) {
        out.count = count_range(n, q, M, 0, words);
        return out;
    }
    unsigned long chunks = (unsigned long)jobs;
    std::vector<mpz_class> partial(chunks);
    std::vector<std::thread> pool;
    for (unsigned long c = 0; c < chunks; ++c) {
        unsigned long lo = words / chunks * c + std::min(words % chunks, c);
        unsigned long hi = lo + words / chunks + (c < words % chunks ? 1 : 0);
        pool.emplace_back([&, c, lo, hi] { partial[c] = count_range(n, q, M, lo, hi); });
    }
    for (auto& t : pool) t.join();
    for (const auto& p : partial) out.count += p;
    return out;
}

MonotonicityReport check_monotonicity(std::uint32_t n, int q, std::uint32_t M,
                                      unsigned long budget, int jobs) {
    MonotonicityReport rep;
    rep.at_M = count_instances(n, q, M, budget, jobs);
    rep.at_M_plus_1 = count_instances(n, q, M + 1, budget, jobs);
    mpz_class rhs = mpz_class(q) * rep.at_M.count;
    rep.holds = rep.at_M_plus_1.count >= rhs;
    rep.equality = rep.at_M_plus_1.count == rhs;
    return rep;
}

mpq_class lemma2_bound(std::uint32_t n, int q, std::uint32_t M) {
    require_alphabet(q, 2);
    if (n < 1 || n > 32) throw domain_error("zimin index out of range for bounds");
    long E = (long)M - (long)((std::uint64_t{1} << n) - 1) + (long)n;
    mpq_class ratio(pow_mpz((unsigned long)q, n - 1),
                    pow_mpz((unsigned long)(q - 1), n - 1));
    ratio.canonicalize();
    return ratio * pow_q_signed(q, E);
}

mpq_class instance_probability(std::uint32_t n, int q, std::uint32_t M,
                               unsigned long budget, int jobs) {
    InstanceCount c = count_instances(n, q, M, budget, jobs);
    mpq_class p(c.count, pow_mpz((unsigned long)q, M));
    p.canonicalize();
    return p;
}

std::string render_bound(const BoundValue& v) {
    if (v.kind == BoundKind::ExactInteger) return v.integer.get_str();
    return "tower(base=" + std::to_string(v.tower_base) +
           ", height=" + std::to_string(v.tower_height) + ")";
}

BoundValue tower_upper_bound(std::uint32_t n, int q, std::size_t digit_cap) {
    require_alphabet(q, 1);
    if (n < 1) throw domain_error("zimin index must be at least 1");
    unsigned long Q = 2 * (unsigned long)q + 1;
    double digits_per_exp = std::log10((double)Q);
    BoundValue v;
    v.tower_base = Q;
    v.tower_height = n - 1;
    mpz_class t = 1;
    for (std::uint32_t k = 1; k < n; ++k) {
        // next value is Q^t with about t*log10(Q) digits
        if (!t.fits_ulong_p() ||
            (double)t.get_ui() * digits_per_exp > (double)digit_cap) {
            v.kind = BoundKind::Tower;
            return v;
        }
        t = pow_mpz(Q, t.get_ui());
    }
    v.kind = BoundKind::ExactInteger;
    v.integer = t;
    return v;
}

BoundValue recurrence_upper_bound(std::uint32_t n, int q, std::size_t digit_cap) {
    require_alphabet(q, 1);
    if (n < 1) throw domain_error("zimin index must be at least 1");
    double digits_per_exp = std::log10((double)q);
    BoundValue v;
    v.tower_base = 2 * (unsigned long)q + 1;
    v.tower_height = n - 1;
    mpz_class t = 1;
    for (std::uint32_t k = 1; k < n; ++k) {
        if (!t.fits_ulong_p() ||
            (double)t.get_ui() * digits_per_exp > (double)digit_cap) {
            v.kind = BoundKind::Tower;
            return v;
        }
        t = (t + 1) * (pow_mpz((unsigned long)q, t.get_ui()) + 1) - 1;
    }
    v.kind = BoundKind::ExactInteger;
    v.integer = t;
    return v;
}

mpq_class moment_expectation_upper(std::uint32_t n, int q, const mpz_class& M) {
    require_alphabet(q, 2);
    if (n < 1 || n > 32) throw domain_error("zimin index out of range for bounds");
    if (M < 0) throw domain_error("word length must be non-negative");
    mpz_class pairs = M * (M + 1);
    mpq_class spans(pairs, mpz_class(2));
    spans.canonicalize();
    mpq_class ratio(pow_mpz((unsigned long)q, n - 1),
                    pow_mpz((unsigned long)(q - 1), n - 1));
    ratio.canonicalize();
    long E = (long)n + 1 - (long)((std::uint64_t{1} << n) - 1) - 1;
    return spans * ratio * pow_q_signed(q, E);
}

mpz_class first_moment_max_length(std::uint32_t n, int q, std::size_t digit_cap) {
    require_alphabet(q, 2);
    if (n < 1 || n > 32) throw domain_error("zimin index out of range for bounds");
    // E(M) < 1 iff M(M+1) < 2 (q-1)^(n-1) q^(2^n - 2n); 2^n >= 2n for n >= 1
    std::uint64_t exp2 = (std::uint64_t{1} << n) - 2 * (std::uint64_t)n;
    if ((double)exp2 * std::log10((double)q) > (double)digit_cap)
        throw size_error("first-moment threshold exceeds the digit cap");
    mpz_class K = 2 * pow_mpz((unsigned long)(q - 1), n - 1) *
                  pow_mpz((unsigned long)q, exp2);
    mpz_class root = sqrt(K); // floor; the answer is within a step of sqrt(K)
    mpz_class M = root > 2 ? mpz_class(root - 2) : mpz_class(0);
    while ((M + 1) * (M + 2) < K) ++M;
    return M;
}

} // namespace zimav
