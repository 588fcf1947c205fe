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

#include "qtab/dense.h"

#include <algorithm>
#include <cmath>

#include "qtab/circuit.h"
#include "qtab/errors.h"
#include "qtab/noise_model.h"

namespace qtab {

namespace {

std::size_t ipow(std::size_t base, std::size_t e) {
    std::size_t r = 1;
    while (e-- > 0) {
        r *= base;
    }
    return r;
}

uint32_t digit(std::size_t index, std::size_t q, uint32_t d) {
    return static_cast<uint32_t>(index / ipow(d, q) % d);
}

void apply_local_vec(std::vector<Complex> &v, const ComplexMatrix &u, std::size_t q, uint32_t d) {
    const std::size_t stride = ipow(d, q);
    std::vector<Complex> in(d), out(d);
    for (std::size_t base = 0; base < v.size(); ++base) {
        if (base / stride % d != 0) {
            continue;
        }
        for (uint32_t j = 0; j < d; ++j) {
            in[j] = v[base + j * stride];
        }
        for (uint32_t r = 0; r < d; ++r) {
            Complex acc = 0;
            for (uint32_t c = 0; c < d; ++c) {
                acc += u(r, c) * in[c];
            }
            out[r] = acc;
        }
        for (uint32_t j = 0; j < d; ++j) {
            v[base + j * stride] = out[j];
        }
    }
}

ComplexMatrix conj(const ComplexMatrix &m) {
    ComplexMatrix out(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            out(r, c) = std::conj(m(r, c));
        }
    }
    return out;
}

/// v <- G v, or v <- conj(G) v when `conjugate` is set.
void apply_gate_vec(std::vector<Complex> &v, const Gate &g, std::size_t n, uint32_t d, bool conjugate) {
    if (g.q[0] >= n || (g.arity() == 2 && (g.q[1] >= n || g.q[0] == g.q[1]))) {
        throw IndexOutOfRange("gate " + g.name() + " does not fit " + std::to_string(n) + " qudits");
    }
    if (g.arity() == 1) {
        ComplexMatrix u = single_qudit_matrix(g, d);
        apply_local_vec(v, conjugate ? conj(u) : u, g.q[0], d);
        return;
    }
    const std::size_t c = g.q[0];
    const std::size_t t = g.q[1];
    const std::size_t sc = ipow(d, c);
    const std::size_t st = ipow(d, t);
    if (g.kind == GateKind::CZ) {
        const bool negative = g.dagger != conjugate;
        for (std::size_t i = 0; i < v.size(); ++i) {
            uint64_t e = uint64_t{digit(i, c, d)} * digit(i, t, d) % d;
            v[i] *= tau_power(negative ? -2 * static_cast<int64_t>(e) : 2 * static_cast<int64_t>(e), d);
        }
        return;
    }
    std::vector<Complex> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const uint32_t jc = digit(i, c, d);
        const uint32_t jt = digit(i, t, d);
        std::size_t dest;
        if (g.kind == GateKind::CNOT) {
            uint32_t nt = g.dagger ? (jt + d - jc) % d : (jt + jc) % d;
            dest = i + (static_cast<std::size_t>(nt) - jt) * st;
        } else {
            dest = i + (static_cast<std::size_t>(jt) - jc) * sc + (static_cast<std::size_t>(jc) - jt) * st;
        }
        out[dest] = v[i];
    }
    v = std::move(out);
}

}  // namespace

ComplexMatrix single_qudit_matrix(const Gate &g, uint32_t d) {
    ComplexMatrix m(d);
    switch (g.kind) {
        case GateKind::I:
            m = ComplexMatrix::identity(d);
            break;
        case GateKind::X:
            for (uint32_t j = 0; j < d; ++j) {
                m((j + 1) % d, j) = 1;
            }
            break;
        case GateKind::Z:
            for (uint32_t j = 0; j < d; ++j) {
                m(j, j) = tau_power(2 * static_cast<int64_t>(j), d);
            }
            break;
        case GateKind::Y:
            // XZ, the Weyl operator W(1, 1) up to a global phase.
            for (uint32_t j = 0; j < d; ++j) {
                m((j + 1) % d, j) = tau_power(2 * static_cast<int64_t>(j), d);
            }
            break;
        case GateKind::W:
            m = weyl_matrix(g.a % d, g.b % d, d);
            break;
        case GateKind::H: {
            const double norm = 1.0 / std::sqrt(static_cast<double>(d));
            for (uint32_t j = 0; j < d; ++j) {
                for (uint32_t k = 0; k < d; ++k) {
                    m(j, k) = tau_power(2 * static_cast<int64_t>(j) * k, d) * norm;
                }
            }
            break;
        }
        case GateKind::S:
            for (uint32_t j = 0; j < d; ++j) {
                int64_t jj = j;
                m(j, j) = d % 2 == 0 ? tau_power(jj * jj, d) : tau_power(jj * (jj - 1), d);
            }
            break;
        default:
            throw Error("gate " + g.name() + " is not a single-qudit gate");
    }
    return g.dagger ? m.adjoint() : m;
}

ComplexMatrix gate_matrix(const Gate &g, std::size_t n, uint32_t d) {
    const std::size_t dim = checked_hilbert_dim(n, d);
    ComplexMatrix m(dim);
    std::vector<Complex> col(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        std::fill(col.begin(), col.end(), Complex{});
        col[c] = 1;
        apply_gate_vec(col, g, n, d, false);
        for (std::size_t r = 0; r < dim; ++r) {
            m(r, c) = col[r];
        }
    }
    return m;
}

DenseState::DenseState(std::size_t n, uint32_t d) : n_(n), d_(d), amps_(checked_hilbert_dim(n, d)) {
    amps_[0] = 1;
}

DenseState DenseState::from_amplitudes(std::size_t n, uint32_t d, std::vector<Complex> amps, bool normalize) {
    DenseState s(n, d);
    if (amps.size() != s.amps_.size()) {
        throw DimensionMismatch("amplitude count differs from d^n");
    }
    s.amps_ = std::move(amps);
    if (normalize) {
        s.normalize();
    }
    return s;
}

void DenseState::apply(const Gate &g) {
    apply_gate_vec(amps_, g, n_, d_, false);
}

void DenseState::apply_local(const ComplexMatrix &u, std::size_t q) {
    if (q >= n_ || u.dim() != d_) {
        throw DimensionMismatch("local operator does not fit");
    }
    apply_local_vec(amps_, u, q, d_);
}

void DenseState::apply_row(const PauliRow &row) {
    if (row.d != d_ || row.num_qudits() != n_) {
        throw DimensionMismatch("row does not match the state");
    }
    std::vector<Complex> out(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        int64_t e = row.r;
        std::size_t dest = 0;
        std::size_t place = 1;
        std::size_t rest = i;
        for (std::size_t q = 0; q < n_; ++q) {
            uint32_t j = static_cast<uint32_t>(rest % d_);
            rest /= d_;
            e += 2 * static_cast<int64_t>(row.z[q]) * j;
            dest += ((j + row.x[q]) % d_) * place;
            place *= d_;
        }
        out[dest] = tau_power(e, d_) * amps_[i];
    }
    amps_ = std::move(out);
}

void DenseState::add(const DenseState &other) {
    if (other.amps_.size() != amps_.size()) {
        throw DimensionMismatch("states differ in size");
    }
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        amps_[i] += other.amps_[i];
    }
}

void DenseState::scale(Complex s) {
    for (auto &a : amps_) {
        a *= s;
    }
}

double DenseState::norm() const {
    double acc = 0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

void DenseState::normalize() {
    double n = norm();
    if (n == 0) {
        throw InvalidTableau("cannot normalize the zero vector");
    }
    scale(1.0 / n);
}

void DenseState::canonicalize_phase() {
    for (const auto &a : amps_) {
        if (std::abs(a) > 1e-9) {
            scale(std::conj(a) / std::abs(a));
            return;
        }
    }
}

Complex DenseState::inner(const DenseState &other) const {
    if (other.amps_.size() != amps_.size()) {
        throw DimensionMismatch("states differ in size");
    }
    Complex acc = 0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        acc += std::conj(amps_[i]) * other.amps_[i];
    }
    return acc;
}

std::vector<double> DenseState::probabilities() const {
    std::vector<double> p(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        p[i] = std::norm(amps_[i]);
    }
    return p;
}

DensityMatrix::DensityMatrix(std::size_t n, uint32_t d) : n_(n), d_(d), rho_(checked_hilbert_dim(n, d)) {
    rho_(0, 0) = 1;
}

DensityMatrix DensityMatrix::from_state(const DenseState &psi) {
    DensityMatrix out(psi.num_qudits(), psi.dim());
    const auto &a = psi.amplitudes();
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < a.size(); ++c) {
            out.rho_(r, c) = a[r] * std::conj(a[c]);
        }
    }
    return out;
}

namespace {

/// rho <- G rho G^dagger, where `left` applies G (or conj(G)) to a vector.
template <typename Apply>
void conjugate_in_place(ComplexMatrix &rho, Apply &&left) {
    const std::size_t dim = rho.dim();
    std::vector<Complex> v(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t r = 0; r < dim; ++r) {
            v[r] = rho(r, c);
        }
        left(v, false);
        for (std::size_t r = 0; r < dim; ++r) {
            rho(r, c) = v[r];
        }
    }
    // (A G^dagger)_{r,c} = sum_k conj(G)_{c,k} A_{r,k}.
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            v[c] = rho(r, c);
        }
        left(v, true);
        for (std::size_t c = 0; c < dim; ++c) {
            rho(r, c) = v[c];
        }
    }
}

}  // namespace

void DensityMatrix::apply(const Gate &g) {
    conjugate_in_place(rho_, [&](std::vector<Complex> &v, bool cj) { apply_gate_vec(v, g, n_, d_, cj); });
}

void DensityMatrix::apply_local(const ComplexMatrix &u, std::size_t q) {
    if (q >= n_ || u.dim() != d_) {
        throw DimensionMismatch("local operator does not fit");
    }
    ComplexMatrix uc = conj(u);
    conjugate_in_place(rho_, [&](std::vector<Complex> &v, bool cj) { apply_local_vec(v, cj ? uc : u, q, d_); });
}

void DensityMatrix::apply_channel(const NoiseModel &model, std::size_t q) {
    if (model.dim() != d_) {
        throw DimensionMismatch("noise model dimension differs from the state");
    }
    ComplexMatrix acc(rho_.dim());
    for (const auto &[ab, w] : model.support()) {
        DensityMatrix term = *this;
        term.apply_local(weyl_matrix(ab.first, ab.second, d_), q);
        for (std::size_t r = 0; r < acc.dim(); ++r) {
            for (std::size_t c = 0; c < acc.dim(); ++c) {
                acc(r, c) += w * term.rho_(r, c);
            }
        }
    }
    rho_ = std::move(acc);
}

bool DensityMatrix::is_physical(double tol) const {
    if (std::abs(trace() - Complex(1, 0)) > tol) {
        return false;
    }
    for (std::size_t r = 0; r < rho_.dim(); ++r) {
        if (rho_(r, r).real() < -tol) {
            return false;
        }
        for (std::size_t c = 0; c < rho_.dim(); ++c) {
            if (std::abs(rho_(r, c) - std::conj(rho_(c, r))) > tol) {
                return false;
            }
        }
    }
    return true;
}

namespace {

template <typename Weight>
std::vector<double> marginal(std::size_t n, uint32_t d, std::span<const std::size_t> qudits, Weight &&weight) {
    for (std::size_t q : qudits) {
        if (q >= n) {
            throw IndexOutOfRange("measured qudit out of range");
        }
    }
    const std::size_t full = checked_hilbert_dim(n, d);
    std::vector<double> p(checked_hilbert_dim(qudits.size(), d), 0.0);
    for (std::size_t i = 0; i < full; ++i) {
        std::size_t idx = 0;
        std::size_t place = 1;
        for (std::size_t q : qudits) {
            idx += digit(i, q, d) * place;
            place *= d;
        }
        p[idx] += weight(i);
    }
    return p;
}

}  // namespace

std::vector<double> born_distribution(const DenseState &psi, std::span<const std::size_t> qudits) {
    return marginal(psi.num_qudits(), psi.dim(), qudits, [&](std::size_t i) { return std::norm(psi[i]); });
}

std::vector<double> born_distribution(const DensityMatrix &rho, std::span<const std::size_t> qudits) {
    return marginal(rho.num_qudits(), rho.dim(), qudits, [&](std::size_t i) { return rho.matrix()(i, i).real(); });
}

double dense_fidelity(const DensityMatrix &rho, const DenseState &psi) {
    const auto &m = rho.matrix();
    if (m.dim() != psi.size()) {
        throw DimensionMismatch("state and density matrix differ in size");
    }
    Complex acc = 0;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        Complex row = 0;
        for (std::size_t c = 0; c < m.dim(); ++c) {
            row += m(r, c) * psi[c];
        }
        acc += std::conj(psi[r]) * row;
    }
    return std::clamp(acc.real(), 0.0, 1.0);
}

DenseState dense_run(const Circuit &c) {
    if (!c.measurements_are_terminal()) {
        throw Error("dense statevector runs need measurements at the end");
    }
    DenseState psi(c.num_qudits(), c.dim());
    for (const auto &op : c.ops()) {
        if (const auto *g = std::get_if<Gate>(&op)) {
            psi.apply(*g);
        } else if (std::holds_alternative<NoiseOp>(op)) {
            throw Error("statevector runs cannot apply noise channels; use dense_run_mixed");
        }
    }
    return psi;
}

DensityMatrix dense_run_mixed(const Circuit &c) {
    if (!c.measurements_are_terminal()) {
        throw Error("dense density-matrix runs need measurements at the end");
    }
    DensityMatrix rho(c.num_qudits(), c.dim());
    for (const auto &op : c.ops()) {
        if (const auto *g = std::get_if<Gate>(&op)) {
            rho.apply(*g);
        } else if (const auto *noise = std::get_if<NoiseOp>(&op)) {
            rho.apply_channel(c.model(noise->model), noise->qudit);
        }
    }
    return rho;
}

ComplexMatrix circuit_unitary(const Circuit &c) {
    const std::size_t dim = checked_hilbert_dim(c.num_qudits(), c.dim());
    ComplexMatrix u = ComplexMatrix::identity(dim);
    for (const auto &op : c.ops()) {
        const auto *g = std::get_if<Gate>(&op);
        if (g == nullptr) {
            throw Error("circuit unitary needs a gate-only circuit");
        }
        u = gate_matrix(*g, c.num_qudits(), c.dim()) * u;
    }
    return u;
}

}  // namespace qtab
