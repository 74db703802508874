#include "sympswc/characters.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

namespace sympswc {

namespace {

std::string sp_name(std::size_t n) { return "Sp(" + std::to_string(2 * n) + ",q)"; }

// Exact division or NonIntegralMultiplicity.
mpz_class divide_exact(const mpz_class& num, const mpz_class& den, std::size_t k) {
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw Error(ErrorKind::NonIntegralMultiplicity,
                    "m_" + std::to_string(k) + " = " + num.get_str() + "/" + den.get_str() +
                        " is not an integer: not the character of a restriction to the diagonal {+-1} subgroup",
                    k);
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

mpz_class pow2(std::size_t e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

mpz_class upow(std::uint64_t b, std::size_t e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), b, e);
    return r;
}

void check_nonnegative(const MultiplicityVector& mv) {
    for (std::size_t k = 0; k < mv.m.size(); ++k)
        if (mv.m[k] < 0)
            throw Error(ErrorKind::NegativeMultiplicity,
                        "m_" + std::to_string(k) + " = " + mv.m[k].get_str() + " is negative: not a representation",
                        k);
}

}  // namespace

void check_character(const CharacterData& chi) {
    if (chi.values.size() != chi.n + 1)
        throw Error(ErrorKind::MalformedCharacter, "expected " + std::to_string(chi.n + 1) +
                                                       " character values for " + sp_name(chi.n) + ", got " +
                                                       std::to_string(chi.values.size()));
    if (chi.values[0] < 0) throw Error(ErrorKind::MalformedCharacter, "degree chi(g_0) must be nonnegative");
    for (std::size_t i = 1; i <= chi.n; ++i)
        if (abs(chi.values[i]) > chi.values[0])
            throw Error(ErrorKind::MalformedCharacter,
                        "|chi(g_" + std::to_string(i) + ")| exceeds the degree " + chi.values[0].get_str(), i);
}

std::shared_ptr<const SigmaTable> sigma_table(std::size_t n) {
    static std::shared_mutex mutex;
    static std::map<std::size_t, std::shared_ptr<const SigmaTable>> cache;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    auto table = std::make_shared<SigmaTable>(n + 1, std::vector<mpz_class>(n + 1, 0));
    for (std::size_t k = 0; k <= n; ++k) {
        // Coefficients of (1-x)^k (1+x)^(n-k), one linear factor at a time.
        std::vector<mpz_class> poly{1};
        for (std::size_t f = 0; f < n; ++f) {
            const int sign = f < k ? -1 : 1;
            std::vector<mpz_class> next(poly.size() + 1, 0);
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i] += poly[i];
                next[i + 1] += sign * poly[i];
            }
            poly = std::move(next);
        }
        for (std::size_t i = 0; i <= n; ++i) (*table)[k][i] = poly[i];
    }
    std::unique_lock lock(mutex);
    return cache.try_emplace(n, std::move(table)).first->second;
}

mpz_class sigma_char(std::size_t n, std::size_t i, std::size_t k) {
    if (i > n || k > n) throw Error(ErrorKind::IndexOutOfRange, "sigma_char: index outside 0..n");
    return (*sigma_table(n))[k][i];
}

MultiplicityVector multiplicities(const CharacterData& chi) {
    check_character(chi);
    const std::size_t n = chi.n;
    const auto table = sigma_table(n);
    const mpz_class den = pow2(n);
    MultiplicityVector mv{n, std::vector<mpz_class>(n + 1)};
    for (std::size_t k = 0; k <= n; ++k) {
        mpz_class sum = 0;
        for (std::size_t i = 0; i <= n; ++i) sum += (*table)[k][i] * chi.values[i];
        mv.m[k] = divide_exact(sum, den, k);
    }
    check_nonnegative(mv);
    return mv;
}

CharacterData character_from_multiplicities(const MultiplicityVector& mv) {
    if (mv.m.size() != mv.n + 1)
        throw Error(ErrorKind::MalformedCharacter, "multiplicity vector length must be n+1");
    check_nonnegative(mv);
    const auto table = sigma_table(mv.n);
    CharacterData chi{mv.n, std::vector<mpz_class>(mv.n + 1, 0)};
    for (std::size_t i = 0; i <= mv.n; ++i)
        for (std::size_t k = 0; k <= mv.n; ++k) chi.values[i] += mv.m[k] * (*table)[i][k];
    return chi;
}

MultiplicityVector validate_orthogonal(const CharacterData& chi) {
    MultiplicityVector mv = multiplicities(chi);
    for (std::size_t k = 1; k <= mv.n; ++k)
        if (!mpz_divisible_ui_p(mv.m[k].get_mpz_t(), 4))
            throw Error(ErrorKind::DivisibilityViolation,
                        "m_" + std::to_string(k) + " = " + mv.m[k].get_str() +
                            " not divisible by 4: input is not an orthogonal character of " + sp_name(chi.n),
                        k);
    return mv;
}

bool is_gow_symmetric(const CharacterData& chi) {
    if (chi.values.empty()) return true;
    const std::size_t n = chi.values.size() - 1;
    for (std::size_t i = 0; i <= n; ++i)
        if (chi.values[i] != chi.values[n - i]) return false;
    return true;
}

namespace {

// Shared body of the two half-range variants. `sign` is +1 for palindromic
// inputs and -1 for skew-palindromic ones; multiplicities with (-1)^k != sign
// vanish, the rest pair i with n-i.
MultiplicityVector half_range(const CharacterData& chi, int sign) {
    check_character(chi);
    const std::size_t n = chi.n;
    for (std::size_t i = 0; i <= n; ++i)
        if (chi.values[i] != sign * chi.values[n - i])
            throw Error(ErrorKind::GowSymmetryViolation,
                        "chi(g_" + std::to_string(i) + ") = " + chi.values[i].get_str() + " but chi(g_" +
                            std::to_string(n - i) + ") = " + chi.values[n - i].get_str(),
                        i);
    const auto table = sigma_table(n);
    MultiplicityVector mv{n, std::vector<mpz_class>(n + 1, 0)};
    for (std::size_t k = 0; k <= n; ++k) {
        const int parity = k % 2 == 0 ? 1 : -1;
        if (parity != sign) continue;
        mpz_class paired = 0;
        for (std::size_t i = 0; 2 * i < n; ++i) paired += (*table)[k][i] * chi.values[i];
        // 2^-(n-1) * paired + 2^-n * middle, over the common denominator 2^n.
        mpz_class num = 2 * paired;
        if (n % 2 == 0) num += (*table)[k][n / 2] * chi.values[n / 2];
        mv.m[k] = divide_exact(num, pow2(n), k);
    }
    check_nonnegative(mv);
    return mv;
}

}  // namespace

MultiplicityVector gow_multiplicities(const CharacterData& chi) { return half_range(chi, 1); }

MultiplicityVector skew_gow_multiplicities(const CharacterData& chi) { return half_range(chi, -1); }

CharacterData symmetrize(const CharacterData& chi) {
    CharacterData out = chi;
    for (auto& v : out.values) v *= 2;
    return out;
}

void check_odd_prime_power(std::uint64_t q) {
    if (q < 3 || q % 2 == 0)
        throw Error(ErrorKind::InvalidFieldOrder, "q = " + std::to_string(q) + " must be an odd prime power");
    std::uint64_t p = 0;
    for (std::uint64_t d = 3; d * d <= q; d += 2)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return;  // q itself is prime
    std::uint64_t r = q;
    while (r % p == 0) r /= p;
    if (r != 1)
        throw Error(ErrorKind::InvalidFieldOrder, "q = " + std::to_string(q) + " is not a power of a single prime");
}

mpz_class group_order_sp(std::size_t n, std::uint64_t q) {
    check_odd_prime_power(q);
    mpz_class order = upow(q, n * n);
    for (std::size_t i = 1; i <= n; ++i) order *= upow(q, 2 * i) - 1;
    return order;
}

CharacterData regular_character(std::size_t n, std::uint64_t q) {
    CharacterData chi{n, std::vector<mpz_class>(n + 1, 0)};
    chi.values[0] = group_order_sp(n, q);
    return chi;
}

CharacterData weil_character(std::size_t n, std::uint64_t q) {
    check_odd_prime_power(q);
    const bool q_is_3_mod_4 = q % 4 == 3;
    CharacterData chi{n, std::vector<mpz_class>(n + 1)};
    for (std::size_t i = 0; i <= n; ++i) {
        chi.values[i] = upow(q, n - i);
        if (q_is_3_mod_4 && i % 2 == 1) chi.values[i] = -chi.values[i];
    }
    return chi;
}

CharacterData weil_prime_character(std::size_t n, std::uint64_t q) { return weil_character(n, q); }

MultiplicityVector weil_multiplicities_closed_form(std::size_t n, std::uint64_t q) {
    check_odd_prime_power(q);
    if (n == 0) throw Error(ErrorKind::IndexOutOfRange, "weil multiplicities need n >= 1");
    MultiplicityVector mv = multiplicities(symmetrize(weil_character(n, q)));
    const bool q_is_1_mod_4 = q % 4 == 1;
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t minus_exp = q_is_1_mod_4 ? k : n - k;
        const mpz_class num = upow(q - 1, minus_exp) * upow(q + 1, n - minus_exp);
        mv.m[k] = divide_exact(num, pow2(n - 1), k);
    }
    return mv;
}

CharacterData sp4_pi1_character(std::uint64_t q) {
    check_odd_prime_power(q);
    const mpz_class d = mpz_class(q + 1) * (upow(q, 2) + 1);
    return CharacterData{2, {d, 0, -d}};
}

CharacterData sp4_pi2_character(std::uint64_t q) {
    check_odd_prime_power(q);
    const mpz_class d = upow(q, 2) * mpz_class(q - 1) * (upow(q, 2) + 1);
    return CharacterData{2, {d, 0, -d}};
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{"regular", "weil", "weil-prime", "sp4-pi1", "sp4-pi2"};
    return names;
}

CharacterData catalog_character(const std::string& name, std::size_t n, std::uint64_t q) {
    if (name == "regular") return regular_character(n, q);
    if (name == "weil") return weil_character(n, q);
    if (name == "weil-prime") return weil_prime_character(n, q);
    if (name == "sp4-pi1" || name == "sp4-pi2") {
        if (n != 2) throw Error(ErrorKind::RankMismatch, name + " is a representation of Sp(4,q): n must be 2");
        return name == "sp4-pi1" ? sp4_pi1_character(q) : sp4_pi2_character(q);
    }
    throw Error(ErrorKind::Parse, "unknown representation '" + name + "'");
}

}  // namespace sympswc
