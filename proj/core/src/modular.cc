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

#include "qtab/modular.h"

#include <numeric>
#include <sstream>
#include <utility>

#include "qtab/errors.h"

namespace qtab {

namespace {

BigInt floor_mod(const BigInt &v, const BigInt &m) {
    BigInt r = v % m;
    if (r < 0) {
        r += m;
    }
    return r;
}

uint32_t to_residue(const BigInt &v, uint32_t d) {
    return static_cast<uint32_t>(floor_mod(v, BigInt(d)));
}

/// Extended Euclid: returns g = gcd(a, b) >= 0 and x, y with a x + b y = g.
BigInt ext_gcd(const BigInt &a, const BigInt &b, BigInt &x, BigInt &y) {
    BigInt old_r = a, r = b;
    BigInt old_s = 1, s = 0;
    BigInt old_t = 0, t = 1;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

void swap_rows(IntMatrix &m, std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::swap(m(a, c), m(b, c));
    }
}

void swap_cols(IntMatrix &m, std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::swap(m(r, a), m(r, b));
    }
}

/// [row_a; row_b] <- [[p, q], [r, s]] * [row_a; row_b].
void combine_rows(IntMatrix &m, std::size_t a, std::size_t b, const BigInt &p, const BigInt &q, const BigInt &r,
                  const BigInt &s) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
        BigInt va = m(a, c), vb = m(b, c);
        m(a, c) = p * va + q * vb;
        m(b, c) = r * va + s * vb;
    }
}

/// [col_a, col_b] <- [col_a, col_b] * [[p, r], [q, s]].
void combine_cols(IntMatrix &m, std::size_t a, std::size_t b, const BigInt &p, const BigInt &q, const BigInt &r,
                  const BigInt &s) {
    for (std::size_t row = 0; row < m.rows(); ++row) {
        BigInt va = m(row, a), vb = m(row, b);
        m(row, a) = p * va + q * vb;
        m(row, b) = r * va + s * vb;
    }
}

}  // namespace

void check_dimension(uint32_t d) {
    if (d < 2 || d > kMaxDimension) {
        throw InvalidDimension("qudit dimension must lie in [2, 32768], got " + std::to_string(d));
    }
}

bool is_prime(uint32_t d) {
    if (d < 2) {
        return false;
    }
    for (uint32_t f = 2; f * f <= d; ++f) {
        if (d % f == 0) {
            return false;
        }
    }
    return true;
}

uint32_t mod_inverse(uint32_t a, uint32_t d) {
    int64_t old_r = a % d, r = d;
    int64_t old_s = 1, s = 0;
    while (r != 0) {
        int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    }
    if (old_r != 1) {
        throw NotInvertible(std::to_string(a) + " has no inverse mod " + std::to_string(d));
    }
    return reduce_mod(old_s, d);
}

RrefResult rref_mod_p(const ResidueRows &input, uint32_t p) {
    ResidueRows m = input;
    for (auto &row : m) {
        for (auto &v : row) {
            v %= p;
        }
    }
    std::size_t cols = m.empty() ? 0 : m[0].size();
    std::size_t pivot_row = 0;
    RrefResult result;
    for (std::size_t c = 0; c < cols && pivot_row < m.size(); ++c) {
        std::size_t found = m.size();
        for (std::size_t r = pivot_row; r < m.size(); ++r) {
            if (m[r][c] != 0) {
                found = r;
                break;
            }
        }
        if (found == m.size()) {
            continue;
        }
        std::swap(m[pivot_row], m[found]);
        uint32_t inv = mod_inverse(m[pivot_row][c], p);
        for (auto &v : m[pivot_row]) {
            v = static_cast<uint32_t>(uint64_t{v} * inv % p);
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == pivot_row || m[r][c] == 0) {
                continue;
            }
            uint64_t f = m[r][c];
            for (std::size_t k = 0; k < cols; ++k) {
                m[r][k] = static_cast<uint32_t>((m[r][k] + (p - f) * m[pivot_row][k]) % p);
            }
        }
        result.pivots.push_back(c);
        ++pivot_row;
    }
    m.resize(pivot_row);
    result.rank = pivot_row;
    result.rows = std::move(m);
    return result;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : init) {
        if (row.size() != cols_) {
            throw DimensionMismatch("ragged matrix literal");
        }
        for (long long v : row) {
            data_.emplace_back(v);
        }
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

IntMatrix IntMatrix::from_residues(const ResidueRows &rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw DimensionMismatch("ragged residue matrix");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix &rhs) const {
    if (cols_ != rhs.rows_) {
        throw DimensionMismatch("matrix product shape mismatch");
    }
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt &a = (*this)(r, k);
            if (a == 0) {
                continue;
            }
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

BigInt IntMatrix::determinant() const {
    if (rows_ != cols_) {
        throw DimensionMismatch("determinant of a non-square matrix");
    }
    std::size_t n = rows_;
    if (n == 0) {
        return 1;
    }
    IntMatrix m = *this;
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap_with = n;
            for (std::size_t r = k + 1; r < n; ++r) {
                if (m(r, k) != 0) {
                    swap_with = r;
                    break;
                }
            }
            if (swap_with == n) {
                return 0;
            }
            swap_rows(m, k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r) {
        out << "[";
        for (std::size_t c = 0; c < cols_; ++c) {
            out << (c ? " " : "") << (*this)(r, c);
        }
        out << "]\n";
    }
    return out.str();
}

SmithDecomposition smith_normal_form(const IntMatrix &a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        // Bring the smallest nonzero entry of the trailing block to (t, t).
        bool any = false;
        std::size_t br = t, bc = t;
        BigInt best;
        for (std::size_t r = t; r < m; ++r) {
            for (std::size_t c = t; c < n; ++c) {
                if (d(r, c) != 0 && (!any || abs(d(r, c)) < best)) {
                    any = true;
                    best = abs(d(r, c));
                    br = r;
                    bc = c;
                }
            }
        }
        if (!any) {
            break;
        }
        swap_rows(d, t, br);
        swap_rows(u, t, br);
        swap_cols(d, t, bc);
        swap_cols(v, t, bc);

        while (true) {
            bool changed = false;
            for (std::size_t r = t + 1; r < m; ++r) {
                if (d(r, t) == 0) {
                    continue;
                }
                if (d(r, t) % d(t, t) == 0) {
                    BigInt q = d(r, t) / d(t, t);
                    combine_rows(d, t, r, 1, 0, -q, 1);
                    combine_rows(u, t, r, 1, 0, -q, 1);
                } else {
                    BigInt x, y;
                    BigInt g = ext_gcd(d(t, t), d(r, t), x, y);
                    BigInt p = d(t, t) / g, q = d(r, t) / g;
                    combine_rows(d, t, r, x, y, -q, p);
                    combine_rows(u, t, r, x, y, -q, p);
                }
                changed = true;
            }
            for (std::size_t c = t + 1; c < n; ++c) {
                if (d(t, c) == 0) {
                    continue;
                }
                if (d(t, c) % d(t, t) == 0) {
                    BigInt q = d(t, c) / d(t, t);
                    combine_cols(d, t, c, 1, 0, -q, 1);
                    combine_cols(v, t, c, 1, 0, -q, 1);
                } else {
                    BigInt x, y;
                    BigInt g = ext_gcd(d(t, t), d(t, c), x, y);
                    BigInt p = d(t, t) / g, q = d(t, c) / g;
                    combine_cols(d, t, c, x, y, -q, p);
                    combine_cols(v, t, c, x, y, -q, p);
                }
                changed = true;
            }
            if (changed) {
                continue;
            }
            // Row and column t are clear. Enforce d_t | every trailing entry.
            std::size_t bad_row = m;
            for (std::size_t r = t + 1; r < m && bad_row == m; ++r) {
                for (std::size_t c = t + 1; c < n; ++c) {
                    if (d(r, c) % d(t, t) != 0) {
                        bad_row = r;
                        break;
                    }
                }
            }
            if (bad_row == m) {
                break;
            }
            combine_rows(d, t, bad_row, 1, 1, 0, 1);
            combine_rows(u, t, bad_row, 1, 1, 0, 1);
        }
        if (d(t, t) < 0) {
            for (std::size_t c = 0; c < n; ++c) {
                d(t, c) = -d(t, c);
            }
            for (std::size_t c = 0; c < m; ++c) {
                u(t, c) = -u(t, c);
            }
        }
    }
    return {std::move(d), std::move(u), std::move(v)};
}

ResidueRows kernel_mod_d(const IntMatrix &a, uint32_t d) {
    // A u = 0 (mod d)  <=>  D y = 0 (mod d) with u = V y, since U is invertible mod d.
    SmithDecomposition snf = smith_normal_form(a);
    const std::size_t n = a.cols();
    const BigInt dd = d;
    ResidueRows gens;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt diag = (i < snf.D.rows()) ? snf.D(i, i) : BigInt(0);
        BigInt g = gcd(floor_mod(diag, dd), dd);
        if (g == 0) {
            g = dd;
        }
        BigInt scale = dd / g;
        std::vector<uint32_t> gen(n);
        bool nonzero = false;
        for (std::size_t r = 0; r < n; ++r) {
            gen[r] = to_residue(snf.V(r, i) * scale, d);
            nonzero = nonzero || gen[r] != 0;
        }
        if (nonzero) {
            gens.push_back(std::move(gen));
        }
    }
    return gens;
}

CongruenceSolution solve_congruence(const BigInt &s, const BigInt &c, uint32_t d) {
    const BigInt dd = d;
    BigInt sr = floor_mod(s, dd);
    BigInt cr = floor_mod(c, dd);
    BigInt g = gcd(sr, dd);  // gcd(0, d) = d
    if (cr % g != 0) {
        throw Unsolvable(s.str() + "*y = " + c.str() + " (mod " + std::to_string(d) + ") has no solution");
    }
    BigInt reduced_mod = dd / g;
    CongruenceSolution sol;
    sol.step = static_cast<uint32_t>(reduced_mod);
    sol.count = static_cast<uint32_t>(g);
    if (reduced_mod == 1) {
        sol.particular = 0;
        return sol;
    }
    uint32_t rm = static_cast<uint32_t>(reduced_mod);
    uint32_t s_red = to_residue(sr / g, rm);
    uint32_t c_red = to_residue(cr / g, rm);
    sol.particular = static_cast<uint32_t>(uint64_t{c_red} * mod_inverse(s_red, rm) % rm);
    return sol;
}

}  // namespace qtab
