#pragma once

// Shared test helpers, including the independent oracles used to freeze
// expected values: a brute-force rewriter that explores every reduction
// order, and a small exact Gaussian elimination over plain rationals.

#include <map>
#include <random>
#include <set>
#include <vector>

#include "hopfrep/presentation.hpp"

namespace hopfrep::testing {

/// Fully reduce a word by exploring EVERY applicable (position, rule) step
/// and asserting that all complete reductions reach the same value. This is
/// intentionally independent of Presentation::normal_form's strategy.
class BruteRewriter {
public:
    explicit BruteRewriter(const Presentation& p) : p_(p) {}

    LinComb reduce_word(const Word& w) {
        auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;

        std::vector<LinComb> outcomes;
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            for (const auto& rule : p_.rules()) {
                if (pos + rule.lhs.size() > w.size()) continue;
                if (!std::equal(rule.lhs.begin(), rule.lhs.end(),
                                w.begin() + static_cast<long>(pos)))
                    continue;
                LinComb result;
                for (const auto& [rw, c] : rule.rhs) {
                    Word replaced(w.begin(), w.begin() + static_cast<long>(pos));
                    replaced.insert(replaced.end(), rw.begin(), rw.end());
                    replaced.insert(replaced.end(),
                                    w.begin() + static_cast<long>(pos + rule.lhs.size()), w.end());
                    add_scaled(result, reduce_word(replaced), c);
                }
                outcomes.push_back(std::move(result));
            }
        }
        LinComb value;
        if (outcomes.empty()) {
            value.emplace(w, LaurentScalar(1));
        } else {
            value = outcomes.front();
            for (const auto& other : outcomes) {
                if (other != value) {
                    throw std::runtime_error("brute rewriter: reduction order changed the result");
                }
            }
        }
        cache_.emplace(w, value);
        return value;
    }

    LinComb reduce(const LinComb& raw) {
        LinComb out;
        for (const auto& [w, c] : raw) add_scaled(out, reduce_word(w), c);
        return out;
    }

private:
    const Presentation& p_;
    std::map<Word, LinComb> cache_;
};

/// Exact kernel dimension over plain rationals (test-side, independent of
/// the library's rational-function elimination).
inline std::size_t rational_kernel_dimension(std::vector<std::vector<Rational>> rows,
                                             std::size_t ncols) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        Rational inv = 1 / rows[rank][col];
        for (std::size_t c = 0; c < ncols; ++c) rows[rank][c] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Rational factor = rows[r][col];
            for (std::size_t c = 0; c < ncols; ++c) rows[r][c] -= factor * rows[rank][c];
        }
        ++rank;
    }
    return ncols - rank;
}

/// Random Laurent scalars for property tests (fixed-seed generators).
inline LaurentScalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<long> exponent(-3, 3);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    LaurentScalar s;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        s += LaurentScalar::q_power(exponent(rng), Rational(num(rng), den(rng)));
    }
    return s;
}

/// Random element supported on the given basis words.
inline LinComb random_comb(std::mt19937& rng, const std::vector<Word>& basis) {
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> nterms(1, 3);
    LinComb out;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        add_scaled(out, LinComb{{basis[pick(rng)], LaurentScalar(1)}}, random_scalar(rng));
    }
    return out;
}

}  // namespace hopfrep::testing
