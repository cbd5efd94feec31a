/*
   Copyright 2026 The compcond Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef COMPCOND_RANDOM_HPP
#define COMPCOND_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "compcond/hessenberg.hpp"
#include "compcond/polynomial.hpp"

namespace compcond {

/// Seeded generator whose draws are identical on every platform: only the
/// raw mt19937_64 stream is used, never the implementation-defined
/// std::*_distribution classes.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [lo, hi].
    long uniform(long lo, long hi);
    std::size_t index(std::size_t count) { return static_cast<std::size_t>(uniform(0, static_cast<long>(count) - 1)); }
    bool coin() { return (next() & 1U) != 0; }
    /// p/q with |p| <= max_num and 1 <= q <= max_den.
    Rational rational(long max_num, long max_den);
    std::vector<std::size_t> permutation(std::size_t n);

private:
    std::mt19937_64 engine_;
};

enum class ConstantTerm { NonZero, Unit, SignedUnit, BelowOne, AboveOne };

/// Random rational coefficients; c_0 drawn to match `constant`.
MonicPolynomial random_polynomial(Rng& rng, std::size_t n, ConstantTerm constant = ConstantTerm::NonZero);

enum class ZeroBlock { None, U, Y };

/// Random unit sparse Hessenberg companion matrix of p: each -c_k is placed
/// on a random free cell of its subdiagonal inside R. With ZeroBlock::U or
/// ZeroBlock::Y the corresponding block of R stays structurally zero.
HessenbergCompanion random_hessenberg(Rng& rng, const MonicPolynomial& p, ZeroBlock zero = ZeroBlock::None);

}  // namespace compcond

#endif  // COMPCOND_RANDOM_HPP
