// Copyright 2026 The qtab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef QTAB_COMPOSITE_H
#define QTAB_COMPOSITE_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qtab/modular.h"
#include "qtab/rng.h"
#include "qtab/tableau.h"

namespace qtab {

/// Measurement sampler for any d, built from the diagonal part of the stabilizer group.
///
/// Every kernel vector u of X_s^T (mod d) names a diagonal group element prod_j s_j^{u_j}
/// = tau^r Z^b. Outcomes m must satisfy b.m = -r/2 (mod d) for each of them. The system
/// B m = c is diagonalized as D = U B V and solved coordinate-wise in y = V^-1 m.
class SnfSampler {
   public:
    static SnfSampler build(const Tableau &t);

    uint32_t dim() const {
        return d_;
    }
    std::size_t num_qudits() const {
        return n_;
    }
    const ResidueRows &kernel() const {
        return kernel_;
    }
    const ResidueRows &constraints() const {
        return b_;
    }
    const std::vector<uint32_t> &rhs() const {
        return c_;
    }
    /// Per-coordinate solution sets in y-space.
    const std::vector<CongruenceSolution> &coordinates() const {
        return coords_;
    }

    void sample_into(Rng &rng, uint32_t *out) const;
    std::vector<std::vector<uint32_t>> sample(std::size_t shots, Rng &rng) const;
    bool satisfies(std::span<const uint32_t> m) const;

    /// Sampler for the same tableau after stabilizer j's phase moved by delta[j] (mod 2d).
    SnfSampler with_phase_shift(std::span<const uint32_t> stabilizer_delta) const;

    /// Exact outcome distribution (uniform over the solution set).
    std::map<std::vector<uint32_t>, double> distribution() const;

   private:
    void solve();

    uint32_t d_ = 2;
    std::size_t n_ = 0;
    ResidueRows kernel_;
    ResidueRows b_;
    std::vector<uint32_t> c_;
    std::vector<uint32_t> diag_;
    ResidueRows u_;
    ResidueRows v_;
    std::vector<CongruenceSolution> coords_;
};

}  // namespace qtab

#endif
