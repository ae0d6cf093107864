#pragma once

#include "spchar/numeric.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace spchar {

/// A virtual character of Sp(2g) stored as a sparse Laurent polynomial in the
/// g eigenvalue variables x_1..x_g with exact rational coefficients.
///
/// Genuine characters are symmetric under the hyperoctahedral Weyl group
/// (coordinate permutations and sign flips of exponent vectors) and have
/// integer coefficients. Both properties are checkable, not enforced on
/// construction: intermediate values such as Weyl alternants are
/// anti-symmetric and still need the ring arithmetic.
class SymCharacter {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    explicit SymCharacter(int genus);

    static SymCharacter zero(int genus);
    static SymCharacter one(int genus);
    static SymCharacter constant(int genus, const Rational& value);
    static SymCharacter monomial(int genus, Exponents exponents, const Rational& coeff);

    int genus() const { return genus_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const Exponents& exponents) const;

    // Adds c * x^e, pruning the term if the sum cancels.
    void add_term(const Exponents& exponents, const Rational& coeff);

    SymCharacter& operator+=(const SymCharacter& rhs);
    SymCharacter& operator-=(const SymCharacter& rhs);
    SymCharacter operator+(const SymCharacter& rhs) const;
    SymCharacter operator-(const SymCharacter& rhs) const;
    SymCharacter operator-() const;
    SymCharacter operator*(const SymCharacter& rhs) const;
    SymCharacter operator*(const Rational& scalar) const;
    SymCharacter pow(int exponent) const;

    bool operator==(const SymCharacter& rhs) const;
    bool operator!=(const SymCharacter& rhs) const { return !(*this == rhs); }

    bool is_integral() const;

    // Invariance under the Weyl group of type C_g, checked on generators
    // (adjacent transpositions plus one sign flip).
    bool is_weyl_symmetric() const;

    // Largest exponent vector under lexicographic order, or nullptr when zero.
    const Exponents* leading_exponents() const;

    // Terms in canonical emission order: dominant-chamber representative
    // compared lexicographically, largest orbit first, raw vector breaking
    // ties. Used by printers and serializers.
    std::vector<std::pair<Exponents, Rational>> canonical_terms() const;

private:
    int genus_;
    TermMap terms_;
};

SymCharacter operator*(const Rational& scalar, const SymCharacter& chi);

/// chi_V = sum_i (x_i + x_i^{-1}), the standard 2g-dimensional character.
SymCharacter make_standard_character(int genus);

/// Adams operation: substitutes x_i -> x_i^d in every monomial.
SymCharacter adams(const SymCharacter& chi, int d);

/// Exact evaluation at g nonzero rational eigenvalues.
Rational evaluate(const SymCharacter& chi, const std::vector<Rational>& eigenvalues);

/// Value at the identity (all eigenvalues one); may be rational for formal
/// combinations.
Rational dimension_value(const SymCharacter& chi);

/// Value at the identity, enforced integral.
Integer dimension(const SymCharacter& chi);

// Dominant-chamber representative of a Weyl orbit: absolute values of the
// exponents sorted weakly decreasing.
SymCharacter::Exponents dominant_representative(const SymCharacter::Exponents& exponents);

std::string to_display_string(const SymCharacter& chi);
std::ostream& operator<<(std::ostream& os, const SymCharacter& chi);

} // namespace spchar
