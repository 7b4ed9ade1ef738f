#include "polytrope/linalg.hpp"

namespace polytrope {

int rank_of(RationalMatrix rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row], rows[pivot]);
        for (std::size_t r = row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rational f = rows[r][col] / rows[row][col];
            for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

RationalMatrix kernel_basis(const RationalMatrix& rows, int ncols) {
    // Reduced row echelon, then read off one kernel vector per free column.
    RationalMatrix m = rows;
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (int col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        Rational inv = m[row][col];
        for (int c = 0; c < ncols; ++c) m[row][c] /= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int c = 0; c < ncols; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<char> is_pivot(ncols, 0);
    for (int c : pivot_col) is_pivot[c] = 1;

    RationalMatrix basis;
    for (int free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve_square(RationalMatrix a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v) {
    Integer lcm_den = 1;
    bool nonzero = false;
    for (const auto& q : v) {
        if (q == 0) continue;
        nonzero = true;
        Integer den = q.get_den();
        Integer g;
        mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
        lcm_den = lcm_den / g * den;
    }
    if (!nonzero) return {};

    std::vector<Integer> out(v.size());
    Integer content = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational scaled = v[i] * lcm_den;
        out[i] = scaled.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
    }
    int lead = 0;
    while (out[lead] == 0) ++lead;
    if (out[lead] < 0) content = -content;
    for (auto& z : out) z /= content;
    return out;
}

bool IncrementalRank::add_row(const std::vector<Rational>& row) {
    std::vector<Rational> r = row;
    for (std::size_t b = 0; b < basis_.size(); ++b) {
        const int pc = pivot_cols_[b];
        if (r[pc] == 0) continue;
        Rational f = r[pc] / basis_[b][pc];
        for (int c = 0; c < ncols_; ++c) r[c] -= f * basis_[b][c];
    }
    int pc = -1;
    for (int c = 0; c < ncols_; ++c)
        if (r[c] != 0) {
            pc = c;
            break;
        }
    if (pc < 0) return false;
    basis_.push_back(std::move(r));
    pivot_cols_.push_back(pc);
    return true;
}

void IncrementalRank::pop_row() {
    basis_.pop_back();
    pivot_cols_.pop_back();
}

} // namespace polytrope
