#pragma once

#include "hvol/genus.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace hvol {

// x_i or y_i in the symplectic basis of H
struct BasisSymbol {
    enum Letter { x, y } letter;
    int index; // 1..g

    auto operator<=>(const BasisSymbol&) const = default;
    std::string name() const {
        return (letter == x ? "x" : "y") + std::to_string(index);
    }
    // position in the monomial order x_1..x_g, y_1..y_g
    int flat(const Genus& g) const { return (letter == x ? 0 : g.g) + index - 1; }
};

using SymbolTriple = std::array<BasisSymbol, 3>;

// intersection pairing: (x_i, y_j) = delta_ij = -(y_j, x_i), rest 0
int pairing(const BasisSymbol& u, const BasisSymbol& v);

// integer formal sum of basis triples
struct TensorElement {
    std::map<SymbolTriple, long long> terms; // nonzero coefficients only

    static TensorElement monomial(const SymbolTriple& t, long long c = 1);

    TensorElement& add(const SymbolTriple& t, long long c);
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }

    bool zero() const { return terms.empty(); }
    // deterministic serialization, doubles as a dictionary key
    std::string key() const;
    std::string pretty() const;
    // dense coefficient vector over the (2g)^3 monomials
    std::vector<long long> dense(const Genus& g) const;
};

// p(a (x) b (x) c) = ((a,b) c, (b,c) a, (c,a) b); the kernel is (H^x3)'
std::array<std::map<BasisSymbol, long long>, 3> p_map(const TensorElement& t);
bool in_kernel_p(const TensorElement& t);

// slot permutation: out[s] = in[sigma[s]]; returns the permuted element and
// sgn(sigma) for the harmonic volume's sign rule
struct S3Perm {
    std::array<int, 3> map; // 0-based slot targets
    int sign;
    std::string name;
};
const std::vector<S3Perm>& all_s3();
TensorElement s3_act(const S3Perm& sigma, const TensorElement& t);

// One representative from the canonical generating family; a/b marks the
// x/y mirror of a kind.
enum class FamilyKind { k1, k2, k3a, k3b, k4a, k4b, k5a, k5b, k6a, k6b };
std::string family_kind_name(FamilyKind k);

struct CanonicalFamily {
    FamilyKind kind;
    int i = 0, j = 0, k = 0;                      // whichever apply
    std::array<BasisSymbol::Letter, 3> zs{};      // letter choices where free

    TensorElement expand(const Genus& g) const;
    // size of the S3 orbit (1, 3 or 6 depending on the stabilizer)
    int orbit_size() const;
    std::string label() const;
};

// the family A of representatives, in deterministic order
std::vector<CanonicalFamily> enumerate_family_a(const Genus& g);

struct BasisEnumeration {
    std::vector<CanonicalFamily> family_a;
    std::vector<TensorElement> basis_b; // all distinct sigma(a)
};

// Builds B = S3 . A and verifies |B| = (2g)^3 - 6g, membership in ker p,
// and full rank over the rationals by fraction-free elimination; throws on
// any mismatch.
BasisEnumeration enumerate_basis(const Genus& g);

// exact rank of an integer matrix (Bareiss one-step fraction-free
// elimination with row swaps and column skips); throws on int64 overflow
int rank_bareiss(std::vector<std::vector<long long>> m);

} // namespace hvol
