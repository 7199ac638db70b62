#pragma once

// Seeded generators shared by the property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "lp2/corpus.hpp"
#include "lp2/matrix.hpp"
#include "lp2/quiver.hpp"

namespace lp2::testkit {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    Rational rational(int num_range = 5, int den_max = 4) {
        Rational q(integer(-num_range, num_range), integer(1, den_max));
        q.canonicalize();
        return q;
    }

    QMatrix matrix(std::size_t r, std::size_t c, int range = 3) {
        QMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < c; ++j) m(i, j) = integer(-range, range);
        }
        return m;
    }

    // Product of an r x k and a k x c matrix: rank at most k.
    QMatrix low_rank(std::size_t r, std::size_t c, std::size_t k) { return matrix(r, k) * matrix(k, c); }

    std::array<Rational, 3> point() {
        std::array<Rational, 3> p;
        do {
            for (auto& x : p) x = rational(3, 3);
        } while (sgn(p[0]) == 0 && sgn(p[1]) == 0 && sgn(p[2]) == 0);
        return p;
    }

    Representation point_module(int heart = 0) { return lp2::point_module(point(), rational(3, 2), heart); }

    const CorpusEntry& pick(const std::vector<CorpusEntry>& pool) { return pool[index(pool.size())]; }

    Representation corpus_sum(const std::vector<CorpusEntry>& pool) {
        return direct_sum(pick(pool).rep, pick(pool).rep);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace lp2::testkit
