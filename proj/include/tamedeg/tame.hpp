#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "tamedeg/linalg.hpp"
#include "tamedeg/poly.hpp"

namespace tamedeg {

/// x -> A x + b with A invertible.
class LinearFactor {
public:
    LinearFactor(RationalMatrix matrix, std::vector<Rational> shift);

    std::size_t n() const { return shift_.size(); }
    const RationalMatrix& matrix() const { return matrix_; }
    const std::vector<Rational>& shift() const { return shift_; }

    friend bool operator==(const LinearFactor&, const LinearFactor&) = default;

private:
    RationalMatrix matrix_;
    std::vector<Rational> shift_;
};

/// x_index -> x_index + addend, where the addend does not involve x_index.
/// Indices are zero-based here and one-based in the serialized form.
class ElementaryFactor {
public:
    ElementaryFactor(std::size_t index, Polynomial addend);

    std::size_t n() const { return addend_.nvars(); }
    std::size_t index() const { return index_; }
    const Polynomial& addend() const { return addend_; }

    friend bool operator==(const ElementaryFactor&, const ElementaryFactor&) = default;

private:
    std::size_t index_;
    Polynomial addend_;
};

using Factor = std::variant<LinearFactor, ElementaryFactor>;

std::size_t arity(const Factor& f);
Factor inverse(const Factor& f);

/// A tame automorphism as a factor sequence applied left to right:
/// expand([f1, ..., fk]) = fk o ... o f1.
class TameWord {
public:
    explicit TameWord(std::size_t n) : n_(n) {}
    TameWord(std::size_t n, std::vector<Factor> factors);

    std::size_t n() const { return n_; }
    const std::vector<Factor>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }

    TameWord& append(Factor f);
    /// this ++ other.
    TameWord concat(const TameWord& other) const;

    friend bool operator==(const TameWord&, const TameWord&) = default;

private:
    std::size_t n_;
    std::vector<Factor> factors_;
};

struct Multidegree {
    std::vector<std::uint64_t> degrees;
    friend bool operator==(const Multidegree&, const Multidegree&) = default;
};

/// f o G.
PolyMap apply(const Factor& f, const PolyMap& g);
/// expand(w) o G, computed factor by factor.
PolyMap apply_word(const TameWord& w, PolyMap g);
PolyMap expand(const TameWord& w);
TameWord invert(const TameWord& w);

/// Coordinate-wise degrees. Throws if a coordinate is zero.
Multidegree mdeg(const PolyMap& f);

struct VerificationReport {
    PolyMap map;
    Multidegree multidegree;
    bool right_inverse = false;  // expand(w) o expand(invert(w)) == id
    bool left_inverse = false;   // expand(invert(w)) o expand(w) == id
    Polynomial jacobian;
    bool jacobian_nonzero_constant = false;

    bool passed() const { return right_inverse && left_inverse && jacobian_nonzero_constant; }
};

VerificationReport verify(const TameWord& w);

/// Deterministic pseudo-random word with k factors, addends of degree at
/// most dmax and integer coefficients in {-3..3} \ {0}.
TameWord random_word(std::size_t n, std::size_t k, std::uint32_t dmax, std::uint64_t seed);

}  // namespace tamedeg
