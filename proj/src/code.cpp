#include "toricode/code.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

#include "toricode/errors.hpp"

namespace toricode {

EvaluationTable build_table(const LatticePolygon& p, const FieldSpec& f) {
    const std::int64_t q = f.q();
    for (const auto& v : p.vertices()) {
        if (v.x < 0 || v.y < 0 || v.x > q - 2 || v.y > q - 2)
            throw OutsideSquareError("polygon does not fit inside [0, q-2]^2");
    }
    EvaluationTable t;
    t.field_ = f;
    t.monomials_ = lattice_points(p);
    const std::int64_t m = q - 1;
    t.rows_ = m * m;
    if (t.rows_ * static_cast<std::int64_t>(t.monomials_.size()) > 2'000'000'000LL)
        throw std::invalid_argument("evaluation table too large");

    t.columns_.reserve(t.monomials_.size());
    for (const auto& mono : t.monomials_) {
        std::vector<std::uint16_t> col(t.rows_);
        std::int64_t r = 0;
        for (std::int64_t i = 0; i < m; ++i) {
            for (std::int64_t j = 0; j < m; ++j, ++r) {
                // t1 = g^i, t2 = g^j, so the monomial value is g^(i m1 + j m2)
                col[r] = static_cast<std::uint16_t>(f.element_of_power(i * mono.x + j * mono.y));
            }
        }
        t.columns_.push_back(std::move(col));
    }
    return t;
}

std::int64_t count_zeros(const EvaluationTable& t, const std::vector<int>& coeffs) {
    const FieldSpec& f = t.field();
    if (coeffs.size() != static_cast<std::size_t>(t.dimension()))
        throw std::invalid_argument("coefficient count does not match table dimension");
    bool all_zero = true;
    for (int c : coeffs) {
        if (c < 0 || c >= f.q()) throw std::invalid_argument("coefficient out of range");
        if (c != 0) all_zero = false;
    }
    if (all_zero) throw std::invalid_argument("zero polynomial");

    std::int64_t zeros = 0;
    for (std::int64_t r = 0; r < t.block_length(); ++r) {
        int acc = 0;
        for (int c = 0; c < t.dimension(); ++c) acc = f.add(acc, f.mul(coeffs[c], t.value(r, c)));
        if (acc == 0) ++zeros;
    }
    return zeros;
}

std::vector<int> expand_product(const EvaluationTable& t, const std::vector<SparsePoly>& factors) {
    const FieldSpec& f = t.field();
    std::map<LatticePoint, int> acc = {{{0, 0}, 1}};
    for (const auto& factor : factors) {
        if (factor.empty()) throw std::invalid_argument("factor with no terms");
        std::map<LatticePoint, int> next;
        for (const auto& term : factor) {
            if (term.coeff < 0 || term.coeff >= f.q())
                throw std::invalid_argument("coefficient out of range");
            if (term.coeff == 0) continue;
            for (const auto& [mono, c] : acc) {
                const LatticePoint e{mono.x + term.exponent.x, mono.y + term.exponent.y};
                auto [it, inserted] = next.emplace(e, 0);
                it->second = f.add(it->second, f.mul(c, term.coeff));
            }
        }
        acc = std::move(next);
    }

    std::map<LatticePoint, int> index;
    for (int c = 0; c < t.dimension(); ++c) index.emplace(t.monomials()[c], c);

    std::vector<int> out(t.dimension(), 0);
    for (const auto& [mono, c] : acc) {
        if (c == 0) continue;
        auto it = index.find(mono);
        if (it == index.end())
            throw std::domain_error("product support escapes the polygon's lattice points");
        out[it->second] = c;
    }
    return out;
}

namespace {

struct PrimeAdd {
    std::uint32_t q;
    std::uint16_t operator()(std::uint16_t a, std::uint16_t b) const {
        const std::uint32_t s = std::uint32_t(a) + b;
        return static_cast<std::uint16_t>(s >= q ? s - q : s);
    }
};

struct XorAdd {
    std::uint16_t operator()(std::uint16_t a, std::uint16_t b) const { return a ^ b; }
};

struct SpecAdd {
    const FieldSpec* f;
    std::uint16_t operator()(std::uint16_t a, std::uint16_t b) const {
        return static_cast<std::uint16_t>(f->add(a, b));
    }
};

struct Best {
    std::int64_t zeros = -1;
    std::vector<int> coeffs;

    void offer(std::int64_t z, const std::vector<int>& c) {
        if (z > zeros || (z == zeros && c < coeffs)) {
            zeros = z;
            coeffs = c;
        }
    }
};

using Wide = unsigned __int128;

// Per-worker odometer over the coefficient-vector classes in one contiguous
// index range. Classes are grouped into blocks by the position of the
// leading 1; within a block the trailing digits count up in base q with the
// rightmost digit fastest, which is lexicographic order.
template <class Adder>
class Runner {
  public:
    Runner(const EvaluationTable& t, Adder add, const std::vector<std::vector<std::uint16_t>>* steps)
        : t_(t), f_(t.field()), add_(add), steps_(steps), q_(static_cast<int>(f_.q())),
          n_(t.dimension()), rows_(t.block_length()) {}

    Best run(Wide lo, Wide hi) {
        Best best;
        Wide block_start = 0;
        Wide block_size = 1;
        for (int i = 0; i < n_ - 1; ++i) block_size *= q_;
        for (int lead = 0; lead < n_; ++lead) {
            const Wide block_end = block_start + block_size;
            const Wide a = std::max(lo, block_start);
            const Wide b = std::min(hi, block_end);
            if (a < b) run_block(lead, a - block_start, b - block_start, best);
            block_start = block_end;
            block_size /= q_;
        }
        return best;
    }

  private:
    const std::uint16_t* step_column(int pos, int digit) const {
        if (steps_) return (*steps_)[static_cast<std::size_t>(pos) * q_ + digit].data();
        return t_.column(pos).data();  // prime field: every step adds 1 * column
    }

    void apply(const std::uint16_t* step, std::int64_t& zeros) {
        std::uint16_t* row = row_sums_.data();
        for (std::int64_t r = 0; r < rows_; ++r) {
            const std::uint16_t oldv = row[r];
            const std::uint16_t newv = add_(oldv, step[r]);
            row[r] = newv;
            zeros += (newv == 0) - (oldv == 0);
        }
    }

    void run_block(int lead, Wide a, Wide b, Best& best) {
        std::vector<int> coeffs(n_, 0);
        coeffs[lead] = 1;
        {
            Wide rem = a;
            for (int pos = n_ - 1; pos > lead; --pos) {
                coeffs[pos] = static_cast<int>(rem % q_);
                rem /= q_;
            }
        }
        row_sums_.assign(rows_, 0);
        std::int64_t zeros = 0;
        for (std::int64_t r = 0; r < rows_; ++r) {
            int acc = 0;
            for (int c = lead; c < n_; ++c)
                if (coeffs[c] != 0) acc = f_.add(acc, f_.mul(coeffs[c], t_.value(r, c)));
            row_sums_[r] = static_cast<std::uint16_t>(acc);
            if (acc == 0) ++zeros;
        }

        for (Wide idx = a;; ++idx) {
            best.offer(zeros, coeffs);
            if (idx + 1 >= b) break;
            int pos = n_ - 1;
            while (coeffs[pos] == q_ - 1) {
                apply(step_column(pos, q_ - 1), zeros);
                coeffs[pos] = 0;
                --pos;
            }
            apply(step_column(pos, coeffs[pos]), zeros);
            ++coeffs[pos];
        }
    }

    const EvaluationTable& t_;
    const FieldSpec& f_;
    Adder add_;
    const std::vector<std::vector<std::uint16_t>>* steps_;
    int q_, n_;
    std::int64_t rows_;
    std::vector<std::uint16_t> row_sums_;
};

template <class Adder>
Best search(const EvaluationTable& t, Adder add,
            const std::vector<std::vector<std::uint16_t>>* steps, Wide classes, int workers) {
    std::vector<Best> results(workers);
    std::vector<std::thread> pool;
    const Wide chunk = classes / workers;
    Wide lo = 0;
    for (int w = 0; w < workers; ++w) {
        const Wide hi = (w == workers - 1) ? classes : lo + chunk;
        pool.emplace_back([&, w, lo, hi] {
            Runner<Adder> runner(t, add, steps);
            results[w] = runner.run(lo, hi);
        });
        lo = hi;
    }
    for (auto& th : pool) th.join();
    Best merged;
    for (auto& r : results)
        if (r.zeros >= 0) merged.offer(r.zeros, r.coeffs);
    return merged;
}

}  // namespace

DistanceResult min_distance(const EvaluationTable& t, const SearchLimits& limits) {
    const auto start = std::chrono::steady_clock::now();
    const FieldSpec& f = t.field();
    const int q = static_cast<int>(f.q());
    const int n = t.dimension();
    const std::int64_t rows = t.block_length();

    Wide classes = 0;
    for (int i = 0; i < n; ++i) classes = classes * q + 1;  // 1 + q + ... + q^(n-1)

    const Wide work = classes * static_cast<Wide>(rows);
    const auto clamp64 = [](Wide v) {
        const Wide cap = static_cast<Wide>(std::uint64_t{1} << 62);
        return static_cast<std::uint64_t>(std::min(v, cap));
    };
    if (classes > (Wide{1} << 62))
        throw BudgetExceededError("class count exceeds the absolute search cap", clamp64(classes));
    if (!limits.force && work > limits.max_class_rows)
        throw BudgetExceededError(
            "search budget exceeded: " + std::to_string(clamp64(classes)) + " scale classes times " +
                std::to_string(rows) + " torus points (use force to override)",
            clamp64(classes));

    const std::int64_t class_cap = static_cast<std::int64_t>(clamp64(classes));
    const int workers =
        static_cast<int>(std::max<std::int64_t>(1, std::min<std::int64_t>(limits.workers, class_cap)));

    // Precomputed step columns (next-digit delta times column) for extension
    // fields; prime fields step by exactly the raw column every time.
    std::vector<std::vector<std::uint16_t>> steps;
    const bool prime = f.degree() == 1;
    if (!prime) {
        steps.resize(static_cast<std::size_t>(n) * q);
        for (int c = 0; c < n; ++c) {
            for (int s = 0; s < q; ++s) {
                const int next = s + 1 == q ? 0 : s + 1;
                const int delta = f.sub(next, s);
                auto& col = steps[static_cast<std::size_t>(c) * q + s];
                col.resize(rows);
                for (std::int64_t r = 0; r < rows; ++r)
                    col[r] = static_cast<std::uint16_t>(f.mul(delta, t.value(r, c)));
            }
        }
    }

    Best best;
    if (prime) {
        best = search(t, PrimeAdd{static_cast<std::uint32_t>(q)}, nullptr, classes, workers);
    } else if (f.characteristic() == 2) {
        best = search(t, XorAdd{}, &steps, classes, workers);
    } else {
        best = search(t, SpecAdd{&f}, &steps, classes, workers);
    }

    DistanceResult res;
    res.q = q;
    res.n = n;
    res.block_length = rows;
    res.max_zeros = best.zeros;
    res.min_distance = rows - best.zeros;
    res.witness = std::move(best.coeffs);
    res.worker_count = workers;

    if (count_zeros(t, res.witness) != res.max_zeros)
        throw std::logic_error("witness re-evaluation mismatch");

    res.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return res;
}

}  // namespace toricode
