#include "hvol/tensor.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace hvol {

int pairing(const BasisSymbol& u, const BasisSymbol& v) {
    if (u.index != v.index) return 0;
    if (u.letter == BasisSymbol::x && v.letter == BasisSymbol::y) return 1;
    if (u.letter == BasisSymbol::y && v.letter == BasisSymbol::x) return -1;
    return 0;
}

TensorElement TensorElement::monomial(const SymbolTriple& t, long long c) {
    TensorElement e;
    e.add(t, c);
    return e;
}

TensorElement& TensorElement::add(const SymbolTriple& t, long long c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
    return *this;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [t, c] : o.terms) add(t, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    for (const auto& [t, c] : o.terms) add(t, -c);
    return *this;
}

std::string TensorElement::key() const {
    std::ostringstream os;
    for (const auto& [t, c] : terms)
        os << c << "*" << t[0].name() << "." << t[1].name() << "." << t[2].name() << ";";
    return os.str();
}

std::string TensorElement::pretty() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms) {
        if (!first) os << (c >= 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        const long long a = c >= 0 ? c : -c;
        if (a != 1) os << a << " ";
        os << t[0].name() << "(x)" << t[1].name() << "(x)" << t[2].name();
    }
    return os.str();
}

std::vector<long long> TensorElement::dense(const Genus& g) const {
    const int d = 2 * g.g;
    std::vector<long long> v(static_cast<size_t>(d) * d * d, 0);
    for (const auto& [t, c] : terms)
        v[(static_cast<size_t>(t[0].flat(g)) * d + t[1].flat(g)) * d + t[2].flat(g)] = c;
    return v;
}

std::array<std::map<BasisSymbol, long long>, 3> p_map(const TensorElement& t) {
    std::array<std::map<BasisSymbol, long long>, 3> out;
    const auto acc = [](std::map<BasisSymbol, long long>& m, const BasisSymbol& s,
                        long long c) {
        if (c == 0) return;
        m[s] += c;
        if (m[s] == 0) m.erase(s);
    };
    for (const auto& [tr, c] : t.terms) {
        acc(out[0], tr[2], c * pairing(tr[0], tr[1]));
        acc(out[1], tr[0], c * pairing(tr[1], tr[2]));
        acc(out[2], tr[1], c * pairing(tr[2], tr[0]));
    }
    return out;
}

bool in_kernel_p(const TensorElement& t) {
    const auto im = p_map(t);
    return im[0].empty() && im[1].empty() && im[2].empty();
}

const std::vector<S3Perm>& all_s3() {
    static const std::vector<S3Perm> perms = {
        {{0, 1, 2}, 1, "id"},    {{1, 0, 2}, -1, "(12)"}, {{0, 2, 1}, -1, "(23)"},
        {{2, 1, 0}, -1, "(13)"}, {{1, 2, 0}, 1, "(123)"}, {{2, 0, 1}, 1, "(132)"},
    };
    return perms;
}

TensorElement s3_act(const S3Perm& sigma, const TensorElement& t) {
    TensorElement out;
    for (const auto& [tr, c] : t.terms)
        out.add({tr[sigma.map[0]], tr[sigma.map[1]], tr[sigma.map[2]]}, c);
    return out;
}

std::string family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::k1: return "1";
        case FamilyKind::k2: return "2";
        case FamilyKind::k3a: return "3a";
        case FamilyKind::k3b: return "3b";
        case FamilyKind::k4a: return "4a";
        case FamilyKind::k4b: return "4b";
        case FamilyKind::k5a: return "5a";
        case FamilyKind::k5b: return "5b";
        case FamilyKind::k6a: return "6a";
        case FamilyKind::k6b: return "6b";
    }
    return "?";
}

namespace {

int wrap(int i, int g) { return (i - 1) % g + 1; }

BasisSymbol X(int i) { return {BasisSymbol::x, i}; }
BasisSymbol Y(int i) { return {BasisSymbol::y, i}; }
BasisSymbol Z(BasisSymbol::Letter l, int i) { return {l, i}; }

} // namespace

TensorElement CanonicalFamily::expand(const Genus& g) const {
    const int n = g.g;
    TensorElement e;
    switch (kind) {
        case FamilyKind::k1:
            e.add({Z(zs[0], i), Z(zs[1], j), Z(zs[2], k)}, 1);
            break;
        case FamilyKind::k2: {
            const int k1 = wrap(k + 1, n);
            e.add({X(i), Y(i), Z(zs[2], k)}, 1);
            e.add({X(k1), Y(k1), Z(zs[2], k)}, -1);
            break;
        }
        case FamilyKind::k3a:
            e.add({X(i), X(i), Z(zs[2], k)}, 1);
            break;
        case FamilyKind::k3b:
            e.add({Y(i), Y(i), Z(zs[2], k)}, 1);
            break;
        case FamilyKind::k4a:
            e.add({X(i), X(i), X(i)}, 1);
            break;
        case FamilyKind::k4b:
            e.add({Y(i), Y(i), Y(i)}, 1);
            break;
        case FamilyKind::k5a: {
            const int i1 = wrap(i + 1, n);
            e.add({X(i1), X(i), Y(i1)}, 1);
            e.add({Y(i1), X(i), X(i1)}, 1);
            break;
        }
        case FamilyKind::k5b: {
            const int i1 = wrap(i + 1, n);
            e.add({Y(i1), Y(i), X(i1)}, 1);
            e.add({X(i1), Y(i), Y(i1)}, 1);
            break;
        }
        case FamilyKind::k6a: {
            const int i1 = wrap(i + 1, n);
            e.add({X(i), X(i), Y(i)}, 1);
            e.add({X(i), X(i1), Y(i1)}, -1);
            e.add({X(i1), X(i), Y(i1)}, -1);
            break;
        }
        case FamilyKind::k6b: {
            const int i1 = wrap(i + 1, n);
            e.add({Y(i), Y(i), X(i)}, 1);
            e.add({Y(i), Y(i1), X(i1)}, -1);
            e.add({Y(i1), Y(i), X(i1)}, -1);
            break;
        }
    }
    return e;
}

int CanonicalFamily::orbit_size() const {
    switch (kind) {
        case FamilyKind::k1:
        case FamilyKind::k2: return 6;
        case FamilyKind::k4a:
        case FamilyKind::k4b: return 1;
        default: return 3; // kinds 3, 5, 6 have a transposition stabilizer
    }
}

std::string CanonicalFamily::label() const {
    std::ostringstream os;
    os << "(" << family_kind_name(kind) << ")";
    switch (kind) {
        case FamilyKind::k1:
            os << " " << Z(zs[0], i).name() << "." << Z(zs[1], j).name() << "."
               << Z(zs[2], k).name();
            break;
        case FamilyKind::k2:
        case FamilyKind::k3a:
        case FamilyKind::k3b:
            os << " i=" << i << " k=" << k << " z=" << (zs[2] == BasisSymbol::x ? "x" : "y");
            break;
        default: os << " i=" << i; break;
    }
    return os.str();
}

std::vector<CanonicalFamily> enumerate_family_a(const Genus& g) {
    const int n = g.g;
    std::vector<CanonicalFamily> out;
    const BasisSymbol::Letter ls[2] = {BasisSymbol::x, BasisSymbol::y};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (auto a : ls)
                    for (auto b : ls)
                        for (auto c : ls)
                            out.push_back({FamilyKind::k1, i, j, k, {a, b, c}});
    for (int k = 1; k <= n; ++k)
        for (auto c : ls)
            for (int i = 1; i <= n; ++i) {
                if (i == k || i == wrap(k + 1, n)) continue;
                out.push_back({FamilyKind::k2, i, 0, k, {BasisSymbol::x, BasisSymbol::x, c}});
            }
    for (auto kind : {FamilyKind::k3a, FamilyKind::k3b})
        for (int i = 1; i <= n; ++i)
            for (int k = 1; k <= n; ++k) {
                if (i == k) continue;
                for (auto c : ls)
                    out.push_back({kind, i, 0, k, {BasisSymbol::x, BasisSymbol::x, c}});
            }
    for (auto kind : {FamilyKind::k4a, FamilyKind::k4b})
        for (int i = 1; i <= n; ++i) out.push_back({kind, i, 0, 0, {}});
    for (auto kind : {FamilyKind::k5a, FamilyKind::k5b, FamilyKind::k6a, FamilyKind::k6b})
        for (int i = 1; i <= n; ++i) out.push_back({kind, i, 0, 0, {}});
    return out;
}

int rank_bareiss(std::vector<std::vector<long long>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    const auto mul_div = [](long long a, long long b, long long c, long long d,
                            long long prev) {
        const __int128 num = static_cast<__int128>(a) * b - static_cast<__int128>(c) * d;
        const __int128 q = num / prev;
        if (num % prev != 0)
            throw std::logic_error("rank_bareiss: inexact division (pivot logic broken)");
        if (q > INT64_MAX / 4 || q < INT64_MIN / 4)
            throw std::overflow_error("rank_bareiss: entry overflow");
        return static_cast<long long>(q);
    };
    size_t rank = 0, col = 0;
    long long prev = 1;
    while (rank < rows && col < cols) {
        size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) {
            ++col;
            continue;
        }
        std::swap(m[piv], m[rank]);
        for (size_t r = rank + 1; r < rows; ++r) {
            for (size_t c = col + 1; c < cols; ++c)
                m[r][c] = mul_div(m[r][c], m[rank][col], m[r][col], m[rank][c], prev);
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
        ++col;
    }
    return static_cast<int>(rank);
}

BasisEnumeration enumerate_basis(const Genus& g) {
    BasisEnumeration out;
    out.family_a = enumerate_family_a(g);

    std::set<std::string> seen;
    for (const CanonicalFamily& fam : out.family_a) {
        const TensorElement base = fam.expand(g);
        std::set<std::string> orbit_keys;
        std::vector<TensorElement> orbit;
        for (const S3Perm& sigma : all_s3()) {
            TensorElement image = s3_act(sigma, base);
            if (orbit_keys.insert(image.key()).second) orbit.push_back(std::move(image));
        }
        if (static_cast<int>(orbit.size()) != fam.orbit_size())
            throw std::runtime_error("enumerate_basis: unexpected stabilizer for " +
                                     fam.label());
        for (TensorElement& e : orbit) {
            if (!seen.insert(e.key()).second)
                throw std::runtime_error("enumerate_basis: duplicate element across orbits at " +
                                         fam.label());
            if (!in_kernel_p(e))
                throw std::runtime_error("enumerate_basis: element outside ker p at " +
                                         fam.label());
            out.basis_b.push_back(std::move(e));
        }
    }

    const long long expected =
        8LL * g.g * g.g * g.g - 6LL * g.g; // (2g)^3 - 6g
    if (static_cast<long long>(out.basis_b.size()) != expected)
        throw std::runtime_error("enumerate_basis: |B| != (2g)^3 - 6g");

    std::vector<std::vector<long long>> rows;
    rows.reserve(out.basis_b.size());
    for (const TensorElement& e : out.basis_b) rows.push_back(e.dense(g));
    if (rank_bareiss(std::move(rows)) != static_cast<int>(expected))
        throw std::runtime_error("enumerate_basis: basis not of full rank");
    return out;
}

} // namespace hvol
