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


#ifndef QTAB_TABLEAU_H
#define QTAB_TABLEAU_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qtab/gate.h"
#include "qtab/modular.h"
#include "qtab/rng.h"
#include "qtab/weyl.h"

namespace qtab {

class DenseState;

struct MeasurementResult {
    uint32_t outcome = 0;
    /// True when the outcome was drawn (some stabilizer failed to commute with Z_q).
    bool random = false;
    /// Index of the stabilizer row replaced by the measurement operator (random case only).
    std::size_t pivot = 0;
};

/// Stabilizer tableau of an n-qudit state over Z_d.
///
/// Rows 0..n-1 are destabilizers and rows n..2n-1 are stabilizers when the tableau is
/// full. A tableau built with full=false keeps only the n stabilizer rows; it can be
/// evolved and sampled through the Smith-normal-form path but not measured in place.
///
/// Row i represents tau^r X^x Z^z. Destabilizer i and stabilizer i satisfy
/// symplectic_product(d_i, s_i) = 1; every other pair commutes.
class Tableau {
   public:
    Tableau(std::size_t n, uint32_t d, bool full = true);

    /// Assembles a tableau from explicit rows (destabilizers may be empty for a stabilizer-only tableau).
    static Tableau from_rows(uint32_t d, std::vector<PauliRow> destabilizers, std::vector<PauliRow> stabilizers);

    std::size_t num_qudits() const {
        return n_;
    }
    uint32_t dim() const {
        return d_;
    }
    bool full() const {
        return full_;
    }
    const std::vector<PauliRow> &rows() const {
        return rows_;
    }
    std::vector<PauliRow> &rows() {
        return rows_;
    }
    const PauliRow &destabilizer(std::size_t i) const;
    PauliRow &destabilizer(std::size_t i);
    const PauliRow &stabilizer(std::size_t i) const {
        return rows_[stabilizer_offset() + i];
    }
    PauliRow &stabilizer(std::size_t i) {
        return rows_[stabilizer_offset() + i];
    }
    std::size_t stabilizer_offset() const {
        return full_ ? n_ : 0;
    }

    void apply(const Gate &g);
    /// Conjugation by W(a, b) on qudit q. Only the phase column changes.
    void apply_weyl(uint32_t a, uint32_t b, std::size_t q);
    /// Adds delta[i] to the phase of row i (mod 2d). delta has one entry per stored row.
    void shift_phases(std::span<const uint32_t> delta);

    /// Computational-basis measurement of qudit q (prime d only).
    /// `forced` replaces the random draw when the outcome is random; it is ignored otherwise.
    MeasurementResult measure(std::size_t q, Rng &rng, std::optional<uint32_t> forced = std::nullopt);
    std::vector<uint32_t> measure_all(Rng &rng);
    std::vector<uint32_t> measure_subset(std::span<const std::size_t> qudits, Rng &rng);

    /// The diagonal stabilizer-group element tau^r Z_q that decides a deterministic
    /// measurement of q. Only meaningful when every stabilizer commutes with Z_q.
    PauliRow deterministic_row(std::size_t q) const;

    /// Checks commutation, pairing and phase-parity invariants.
    bool is_valid(std::string *why = nullptr) const;
    void check_valid() const;

    /// Text grid with a "#  | x0 .. | z0 .. | tau" header, destabilizers first.
    std::string str() const;
    /// Versioned text container: "QQT 1", then "n d full", then one row per line.
    std::string serialize() const;
    static Tableau deserialize(const std::string &text);

    bool operator==(const Tableau &) const = default;

   private:
    void check_qudit(std::size_t q) const;

    std::size_t n_;
    uint32_t d_;
    bool full_;
    std::vector<PauliRow> rows_;
};

/// Drops qudit q from a tableau in which q has just been measured.
/// Both measurement cases are supported; the result is a full tableau on n-1 qudits.
Tableau reduce_after_measurement(const Tableau &t, std::size_t q, const MeasurementResult &m);

/// Outcome set v0 + rowspan(basis) for measuring all qudits of a prime-dimension state.
struct AffineSampler {
    uint32_t d = 2;
    std::vector<uint32_t> v0;
    /// Reduced row echelon basis of the stabilizer X-block.
    ResidueRows basis;

    std::size_t rank() const {
        return basis.size();
    }
    std::size_t num_qudits() const {
        return v0.size();
    }
    /// Writes one uniformly drawn outcome into out[0..n).
    void sample_into(Rng &rng, uint32_t *out) const;
    /// Every point of the affine outcome space, in lexicographic order of coefficients.
    std::vector<std::vector<uint32_t>> orbit() const;
};

AffineSampler build_affine_sampler(const Tableau &t, Rng &rng);

std::vector<std::vector<uint32_t>> sample_shots(const AffineSampler &s, std::size_t shots, Rng &rng);

/// The state stabilized by the tableau, with the first significant amplitude real and positive.
DenseState to_statevector(const Tableau &t);

}  // namespace qtab

#endif
