#include "froberg/gfp_linalg.hpp"

#include "froberg/errors.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace froberg {

namespace {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t reduce_signed(std::int64_t v, std::uint64_t p) {
    const auto sp = static_cast<std::int64_t>(p);
    std::int64_t r = v % sp;
    if (r < 0) r += sp;
    return static_cast<std::uint64_t>(r);
}

void validate_modulus(std::uint64_t p) {
    if (p == kDefaultPrime) return;
    if (p > UINT32_MAX || !is_probable_prime(p)) {
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^32");
    }
}

}  // namespace

bool is_probable_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are a proof of primality for every n < 3.3e24.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t modinv(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("modinv: zero has no inverse");
    // Extended Euclid on (a, p), tracking only the coefficient of a.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::domain_error("modinv: argument not invertible (modulus not prime?)");
    return reduce_signed(t, p);
}

PrimeFieldMatrix::PrimeFieldMatrix(std::size_t rows, std::size_t cols, std::uint64_t p,
                                   std::uint64_t cap)
    : rows_(rows), cols_(cols), p_(p) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("PrimeFieldMatrix: empty shape");
    if (rows > cap || cols > cap) {
        throw ResourceError("matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
                                " exceeds the size cap of " + std::to_string(cap),
                            rows, cols);
    }
    validate_modulus(p);
    entries_.assign(rows * cols, 0);
}

void PrimeFieldMatrix::set_signed(std::size_t r, std::size_t c, std::int64_t v) {
    entries_.at(r * cols_ + c) = reduce_signed(v, p_);
}

PrimeFieldMatrix PrimeFieldMatrix::from_rows(
    std::initializer_list<std::initializer_list<std::int64_t>> rows, std::uint64_t p) {
    std::vector<std::vector<std::int64_t>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(v, p);
}

PrimeFieldMatrix PrimeFieldMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                             std::uint64_t p) {
    if (rows.empty()) throw std::invalid_argument("PrimeFieldMatrix: empty shape");
    PrimeFieldMatrix m(rows.size(), rows.front().size(), p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("PrimeFieldMatrix: ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.set_signed(i, j, rows[i][j]);
    }
    return m;
}

PrimeFieldMatrix PrimeFieldMatrix::identity(std::size_t size, std::uint64_t p) {
    PrimeFieldMatrix m(size, size, p);
    for (std::size_t i = 0; i < size; ++i) m.set(i, i, 1);
    return m;
}

std::size_t rank(const PrimeFieldMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::uint64_t p = m.modulus();
    const std::size_t full = std::min(rows, cols);
    std::vector<std::uint64_t> a(m.entries().begin(), m.entries().end());

    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < full; ++c) {
        std::size_t pivot = rk;
        while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rk) {
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * cols + c),
                             a.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols),
                             a.begin() + static_cast<std::ptrdiff_t>(rk * cols + c));
        }
        const std::uint64_t* prow = &a[rk * cols];
        const std::uint64_t inv = modinv(prow[c], p);
        for (std::size_t r = rk + 1; r < rows; ++r) {
            std::uint64_t* row = &a[r * cols];
            if (row[c] == 0) continue;
            const std::uint64_t f = p - mulmod(row[c], inv, p);
            row[c] = 0;
            // p < 2^32, so f * prow[j] + row[j] fits in 64 bits.
            for (std::size_t j = c + 1; j < cols; ++j) row[j] = (row[j] + f * prow[j]) % p;
        }
        ++rk;
    }
    return rk;
}

void write_matrix(std::ostream& os, const PrimeFieldMatrix& m) {
    os << m.rows() << ' ' << m.cols() << ' ' << m.modulus() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto row = m.row(r);
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ' ';
            os << row[c];
        }
        os << '\n';
    }
}

PrimeFieldMatrix read_matrix(std::istream& is, std::uint64_t cap) {
    std::size_t rows = 0, cols = 0;
    std::uint64_t p = 0;
    if (!(is >> rows >> cols >> p)) throw std::invalid_argument("read_matrix: bad header");
    PrimeFieldMatrix m(rows, cols, p, cap);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            std::uint64_t v = 0;
            if (!(is >> v)) throw std::invalid_argument("read_matrix: truncated body");
            if (v >= p) throw std::invalid_argument("read_matrix: entry not reduced mod p");
            m.set(r, c, v);
        }
    }
    return m;
}

}  // namespace froberg
