#include "toricode/field.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "toricode/bounds.hpp"
#include "toricode/errors.hpp"

namespace toricode {

namespace {

// Monic irreducible moduli, coefficients c0..ck. Published in
// docs/field_moduli.md so external tools can reproduce the tables.
const std::map<std::int64_t, std::vector<int>>& modulus_table() {
    static const std::map<std::int64_t, std::vector<int>> t = {
        {4, {1, 1, 1}},            // x^2 + x + 1
        {8, {1, 1, 0, 1}},         // x^3 + x + 1
        {9, {1, 0, 1}},            // x^2 + 1
        {16, {1, 1, 0, 0, 1}},     // x^4 + x + 1
        {25, {2, 0, 1}},           // x^2 + 2
        {27, {1, 2, 0, 1}},        // x^3 + 2x + 1
        {32, {1, 0, 1, 0, 0, 1}},  // x^5 + x^2 + 1
        {49, {1, 0, 1}},           // x^2 + 1
        {64, {1, 1, 0, 0, 0, 0, 1}},  // x^6 + x + 1
        {81, {2, 1, 0, 0, 1}},     // x^4 + x + 2
        {121, {1, 0, 1}},          // x^2 + 1
        {125, {1, 1, 0, 1}},       // x^3 + x + 1
    };
    return t;
}

std::vector<int> digits_of(int code, int p, int k) {
    std::vector<int> d(k, 0);
    for (int i = 0; i < k; ++i) {
        d[i] = code % p;
        code /= p;
    }
    return d;
}

int code_of(const std::vector<int>& digits, int p) {
    int code = 0;
    for (std::size_t i = digits.size(); i-- > 0;) code = code * p + digits[i];
    return code;
}

int eval_poly(const std::vector<int>& coeffs, int x, int p) {
    long long v = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = (v * x + coeffs[i]) % p;
    return static_cast<int>(v);
}

// Remainder of a (dense, low-degree) product modulo the monic modulus.
std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& modulus, int p) {
    const int k = static_cast<int>(modulus.size()) - 1;
    std::vector<long long> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + 1LL * a[i] * b[j]) % p;
    for (std::size_t d = prod.size(); d-- > static_cast<std::size_t>(k);) {
        const long long f = prod[d] % p;
        if (f == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < k; ++i) {
            auto& c = prod[d - k + i];
            c = ((c - f * modulus[i]) % p + p) % p;
        }
    }
    std::vector<int> out(k, 0);
    for (int i = 0; i < k && i < static_cast<int>(prod.size()); ++i)
        out[i] = static_cast<int>(prod[i]);
    return out;
}

// No roots rules out factors of degree 1; for degree 4 also rule out
// irreducible quadratic divisors.
bool modulus_irreducible(const std::vector<int>& m, int p) {
    const int k = static_cast<int>(m.size()) - 1;
    for (int x = 0; x < p; ++x)
        if (eval_poly(m, x, p) == 0) return false;
    if (k <= 3) return true;
    for (int c1 = 0; c1 < p; ++c1) {
        for (int c0 = 0; c0 < p; ++c0) {
            const std::vector<int> quad = {c0, c1, 1};
            bool has_root = false;
            for (int x = 0; x < p && !has_root; ++x) has_root = eval_poly(quad, x, p) == 0;
            if (has_root) continue;
            // trial division of m by quad
            std::vector<int> rem(m);
            for (std::size_t d = rem.size(); d-- > 2;) {
                const int f = rem[d] % p;
                if (f == 0) continue;
                rem[d] = 0;
                rem[d - 1] = ((rem[d - 1] - 1LL * f * c1) % p + p) % p;
                rem[d - 2] = ((rem[d - 2] - 1LL * f * c0) % p + p) % p;
            }
            if (rem[0] == 0 && rem[1] == 0) return false;
        }
    }
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> fs;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

int FieldSpec::inv(int a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return exp_[(q_ - 1) - log_[a]];
}

int FieldSpec::pow(int a, std::int64_t e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::domain_error("inverse of zero");
        return 0;
    }
    const std::int64_t m = q_ - 1;
    std::int64_t r = (static_cast<std::int64_t>(log_[a]) * (e % m)) % m;
    if (r < 0) r += m;
    return exp_[r];
}

FieldSpec make_field(std::int64_t q) {
    const auto pp = prime_power(q);
    if (!pp) throw NotPrimePowerError("q = " + std::to_string(q) + " is not a prime power");
    FieldSpec f;
    f.q_ = q;
    f.p_ = pp->p;
    f.k_ = pp->k;

    if (f.k_ == 1) {
        if (q > 65536) throw UnsupportedFieldError("prime fields supported up to 2^16");
    } else {
        auto it = modulus_table().find(q);
        if (it == modulus_table().end())
            throw UnsupportedFieldError("no modulus on file for q = " + std::to_string(q));
        f.modulus_ = it->second;
        if (!modulus_irreducible(f.modulus_, static_cast<int>(f.p_)))
            throw std::logic_error("modulus table entry is reducible");
    }

    const int p = static_cast<int>(f.p_);
    const int k = f.k_;
    const int qi = static_cast<int>(q);

    // multiplication before tables exist
    const auto slow_mul = [&](int a, int b) -> int {
        if (f.k_ == 1) return static_cast<int>((1LL * a * b) % p);
        return code_of(poly_mul_mod(digits_of(a, p, k), digits_of(b, p, k), f.modulus_, p), p);
    };
    const auto slow_pow = [&](int a, std::int64_t e) -> int {
        int r = 1, base = a;
        while (e > 0) {
            if (e & 1) r = slow_mul(r, base);
            base = slow_mul(base, base);
            e >>= 1;
        }
        return r;
    };

    // find a primitive element
    const auto factors = prime_factors(q - 1);
    int gen = 0;
    for (int g = 2; g < qi; ++g) {
        bool primitive = true;
        for (const auto& f1 : factors) {
            if (slow_pow(g, (q - 1) / f1) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = g;
            break;
        }
    }
    if (gen == 0 && q == 2) gen = 1;  // F_2*: the only element
    if (gen == 0) throw std::logic_error("no primitive element found");

    f.exp_.assign(2 * (qi - 1), 1);
    f.log_.assign(qi, 0);
    int cur = 1;
    for (int i = 0; i < qi - 1; ++i) {
        f.exp_[i] = cur;
        f.exp_[i + qi - 1] = cur;
        f.log_[cur] = i;
        cur = slow_mul(cur, gen);
    }
    if (cur != 1) throw std::logic_error("generator order check failed");

    f.neg_.assign(qi, 0);
    if (f.k_ == 1) {
        for (int a = 0; a < qi; ++a) f.neg_[a] = a == 0 ? 0 : qi - a;
    } else if (p == 2) {
        for (int a = 0; a < qi; ++a) f.neg_[a] = a;
    } else {
        for (int a = 0; a < qi; ++a) {
            auto d = digits_of(a, p, k);
            for (auto& c : d) c = (p - c) % p;
            f.neg_[a] = code_of(d, p);
        }
        f.add_table_.assign(static_cast<std::size_t>(qi) * qi, 0);
        for (int a = 0; a < qi; ++a) {
            const auto da = digits_of(a, p, k);
            for (int b = 0; b < qi; ++b) {
                auto db = digits_of(b, p, k);
                for (int i = 0; i < k; ++i) db[i] = (db[i] + da[i]) % p;
                f.add_table_[static_cast<std::size_t>(a) * qi + b] = code_of(db, p);
            }
        }
    }

    // self-checks: inverses and Frobenius
    for (int a = 1; a < qi; ++a)
        if (f.mul(a, f.inv(a)) != 1) throw std::logic_error("field self-check failed: a * a^-1 != 1");
    const int sample = std::min(qi, 257);
    for (int a = 0; a < sample; ++a)
        if (f.pow(a, q) != a) throw std::logic_error("field self-check failed: Frobenius");

    return f;
}

std::vector<std::pair<int, int>> torus_points(const FieldSpec& f) {
    const std::int64_t m = f.q() - 1;
    std::vector<std::pair<int, int>> pts;
    pts.reserve(static_cast<std::size_t>(m * m));
    for (std::int64_t i = 0; i < m; ++i)
        for (std::int64_t j = 0; j < m; ++j)
            pts.emplace_back(f.element_of_power(i), f.element_of_power(j));
    return pts;
}

}  // namespace toricode
