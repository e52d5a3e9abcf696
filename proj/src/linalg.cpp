/*
   Copyright 2026 the raynaud kernel authors

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

#include "raynaud/linalg.hpp"

#include <stdexcept>

namespace raynaud {

std::optional<std::vector<FpElem>> solve_linear_fp(std::vector<std::vector<FpElem>> A,
                                                   std::vector<FpElem> b) {
    std::size_t rows = A.size();
    if (rows != b.size()) throw std::invalid_argument("solve_linear_fp: dimension mismatch");
    std::size_t cols = rows == 0 ? 0 : A[0].size();
    for (auto& row : A)
        if (row.size() != cols) throw std::invalid_argument("solve_linear_fp: ragged matrix");
    if (rows == 0) return std::vector<FpElem>{};

    std::uint32_t p = b.empty() ? 0 : b[0].modulus();
    for (auto& row : A)
        for (auto& x : row)
            if (x.modulus() != p) throw std::invalid_argument("solve_linear_fp: mixed moduli");

    std::vector<std::size_t> pivot_col_of_row;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && A[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(A[piv], A[r]);
        std::swap(b[piv], b[r]);
        FpElem inv = A[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) A[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c].is_zero()) continue;
            FpElem f = A[i][c];
            for (std::size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
            b[i] -= f * b[r];
        }
        pivot_col_of_row.push_back(c);
        ++r;
    }
    // inconsistent rows
    for (std::size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;

    std::vector<FpElem> x(cols, FpElem(0, p));
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) x[pivot_col_of_row[i]] = b[i];
    return x;
}

} // namespace raynaud
