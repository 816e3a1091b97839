#pragma once

// Dense matrices over GF(p) for a word-sized prime p, and their rank.

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace froberg {

inline constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1
inline constexpr std::uint64_t kDefaultMatrixCap = 4000;

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_probable_prime(std::uint64_t n);

/// b with a*b = 1 (mod p). Throws std::domain_error when a = 0 (mod p).
std::uint64_t modinv(std::uint64_t a, std::uint64_t p);

__extension__ typedef unsigned __int128 WideWord;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<WideWord>(a) * b % p);
}

class PrimeFieldMatrix {
public:
    // Zero matrix. Throws ResourceError if either dimension exceeds `cap`,
    // std::invalid_argument for an empty shape or a modulus that is not a
    // prime below 2^32.
    PrimeFieldMatrix(std::size_t rows, std::size_t cols, std::uint64_t p = kDefaultPrime,
                     std::uint64_t cap = kDefaultMatrixCap);

    // Entries are reduced into [0, p).
    static PrimeFieldMatrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                                      std::uint64_t p = kDefaultPrime);
    static PrimeFieldMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                      std::uint64_t p = kDefaultPrime);
    static PrimeFieldMatrix identity(std::size_t size, std::uint64_t p = kDefaultPrime);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint64_t modulus() const noexcept { return p_; }

    std::uint64_t at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }
    void set(std::size_t r, std::size_t c, std::uint64_t v) { entries_.at(r * cols_ + c) = v % p_; }
    void set_signed(std::size_t r, std::size_t c, std::int64_t v);

    std::span<const std::uint64_t> row(std::size_t r) const {
        return std::span<const std::uint64_t>(entries_).subspan(r * cols_, cols_);
    }
    std::span<const std::uint64_t> entries() const noexcept { return entries_; }

    friend bool operator==(const PrimeFieldMatrix&, const PrimeFieldMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::uint64_t p_;
    std::vector<std::uint64_t> entries_;
};

/// Rank over GF(p); the argument is left untouched.
std::size_t rank(const PrimeFieldMatrix& m);

// Debug dump: "rows cols p" header, then one line of residues per row.
void write_matrix(std::ostream& os, const PrimeFieldMatrix& m);
PrimeFieldMatrix read_matrix(std::istream& is, std::uint64_t cap = kDefaultMatrixCap);

}  // namespace froberg
