#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace toricode {

// Arithmetic in F_q for prime q <= 2^16 and a fixed table of small prime
// powers. Elements are integer codes in [0, q-1]: residues for prime
// fields, base-p digit encodings of the coefficient vector for extension
// fields (so code 0 is zero and code 1 is one). Nonzero elements map to
// powers of a primitive element through the log/antilog tables.
class FieldSpec {
  public:
    std::int64_t q() const { return q_; }
    std::int64_t characteristic() const { return p_; }
    int degree() const { return k_; }

    // Coefficients c0..ck of the monic modulus, empty for prime fields.
    const std::vector<int>& modulus() const { return modulus_; }

    int generator() const { return exp_[1]; }

    int add(int a, int b) const {
        if (k_ == 1) {
            const int s = a + b;
            return s >= p_ ? s - static_cast<int>(p_) : s;
        }
        if (p_ == 2) return a ^ b;
        return add_table_[static_cast<std::size_t>(a) * q_ + b];
    }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg_[b]); }
    int mul(int a, int b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    int inv(int a) const;
    int pow(int a, std::int64_t e) const;

    // g^i for 0 <= i < 2(q-1); element_of_power(i) == element_of_power(i mod q-1).
    int element_of_power(std::int64_t i) const { return exp_[i % (q_ - 1)]; }
    int log_of(int a) const { return log_[a]; }

  private:
    friend FieldSpec make_field(std::int64_t q);

    std::int64_t q_ = 0, p_ = 0;
    int k_ = 0;
    std::vector<int> modulus_;
    std::vector<int> exp_;        // size 2(q-1): doubled to skip a modulo in mul
    std::vector<int> log_;        // size q, log_[0] unused
    std::vector<int> neg_;        // size q
    std::vector<int> add_table_;  // q*q, only for odd-characteristic extensions
};

// Builds and self-checks the field tables. Throws NotPrimePowerError when q
// is not a prime power, UnsupportedFieldError when it is one outside the
// supported range (primes <= 2^16; prime powers 4, 8, 9, 16, 25, 27, 32,
// 49, 64, 81, 121, 125).
FieldSpec make_field(std::int64_t q);

// The (q-1)^2 points of the torus (F_q*)^2 as pairs of element codes, in
// generator-power order: (g^i, g^j) with i major, j minor.
std::vector<std::pair<int, int>> torus_points(const FieldSpec& f);

}  // namespace toricode
