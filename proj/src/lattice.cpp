#include "enriques/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace enriques {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

namespace {

Coord checked_narrow(__int128 x) {
    if (x > static_cast<__int128>(std::numeric_limits<Coord>::max()) ||
        x < static_cast<__int128>(std::numeric_limits<Coord>::min()))
        throw OverflowError("integer overflow in lattice arithmetic");
    return static_cast<Coord>(x);
}

std::array<std::array<Coord, 10>, 10> build_gram() {
    std::array<std::array<Coord, 10>, 10> g{};
    for (int i = 0; i < 10; ++i) g[i][i] = -2;
    // 1-indexed adjacencies of the E10 diagram: 1-4 and the chain 2-3-...-10
    constexpr int edges[9][2] = {{1, 4}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
                                 {6, 7}, {7, 8}, {8, 9}, {9, 10}};
    for (auto [a, b] : edges) {
        g[a - 1][b - 1] = 1;
        g[b - 1][a - 1] = 1;
    }
    return g;
}

}  // namespace

const std::array<std::array<Coord, 10>, 10>& gram_e10() {
    static const auto g = build_gram();
    return g;
}

LatticeVector LatticeVector::basis(int i) {
    LatticeVector v;
    v.c[static_cast<size_t>(i)] = 1;
    return v;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
    for (int i = 0; i < 10; ++i) c[i] = checked_narrow(static_cast<__int128>(c[i]) + o.c[i]);
    return *this;
}

LatticeVector operator*(Coord s, const LatticeVector& v) {
    LatticeVector r;
    for (int i = 0; i < 10; ++i)
        r.c[i] = checked_narrow(static_cast<__int128>(s) * v.c[i]);
    return r;
}

std::string LatticeVector::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
    os << '(';
    for (int i = 0; i < 10; ++i) os << v[i] << (i < 9 ? "," : ")");
    return os;
}

Coord dot(const LatticeVector& u, const LatticeVector& v) {
    const auto& g = gram_e10();
    __int128 acc = 0;
    for (int i = 0; i < 10; ++i) {
        if (u[i] == 0) continue;
        __int128 row = 0;
        for (int j = 0; j < 10; ++j)
            if (g[i][j] != 0) row += static_cast<__int128>(g[i][j]) * v[j];
        acc += static_cast<__int128>(u[i]) * row;
    }
    return checked_narrow(acc);
}

bool is_two_divisible(const LatticeVector& v) {
    return std::all_of(v.c.begin(), v.c.end(), [](Coord x) { return x % 2 == 0; });
}

LatticeVector halve(const LatticeVector& v) {
    LatticeVector r;
    for (int i = 0; i < 10; ++i) {
        if (v[i] % 2 != 0) throw NotDivisibleError(i);
        r[i] = v[i] / 2;
    }
    return r;
}

RationalClass RationalClass::make(LatticeVector v, int den) {
    if (den != 1 && den != 2) throw Error("denominator must be 1 or 2");
    if (den == 2 && is_two_divisible(v)) return {halve(v), 1};
    return {v, den};
}

Mat10 identity10() {
    Mat10 m{};
    for (int i = 0; i < 10; ++i) m[i][i] = 1;
    return m;
}

Mat10 mul(const Mat10& a, const Mat10& b) {
    Mat10 r{};
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            __int128 acc = 0;
            for (int k = 0; k < 10; ++k) acc += static_cast<__int128>(a[i][k]) * b[k][j];
            r[i][j] = checked_narrow(acc);
        }
    return r;
}

LatticeVector apply(const LatticeVector& v, const Mat10& m) {
    LatticeVector r;
    for (int j = 0; j < 10; ++j) {
        __int128 acc = 0;
        for (int i = 0; i < 10; ++i) acc += static_cast<__int128>(v[i]) * m[i][j];
        r[j] = checked_narrow(acc);
    }
    return r;
}

namespace {

// G^-1 is integral because det(G) = -1; computed once by rational elimination.
const Mat10& gram_inverse() {
    static const Mat10 inv = [] {
        const auto& g = gram_e10();
        std::array<std::array<cpp_rational, 20>, 10> w{};
        for (int i = 0; i < 10; ++i) {
            for (int j = 0; j < 10; ++j) w[i][j] = g[i][j];
            w[i][10 + i] = 1;
        }
        for (int c = 0; c < 10; ++c) {
            int p = c;
            while (w[p][c] == 0) ++p;
            std::swap(w[p], w[c]);
            cpp_rational d = w[c][c];
            for (int j = 0; j < 20; ++j) w[c][j] /= d;
            for (int i = 0; i < 10; ++i) {
                if (i == c || w[i][c] == 0) continue;
                cpp_rational f = w[i][c];
                for (int j = 0; j < 20; ++j) w[i][j] -= f * w[c][j];
            }
        }
        Mat10 r{};
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) {
                cpp_rational x = w[i][10 + j];
                if (denominator(x) != 1) throw Error("E10 Gram inverse is not integral");
                r[i][j] = static_cast<Coord>(numerator(x));
            }
        return r;
    }();
    return inv;
}

Mat10 transpose(const Mat10& m) {
    Mat10 t{};
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) t[i][j] = m[j][i];
    return t;
}

}  // namespace

IsometryMatrix validate_isometry(const Mat10& m) {
    const auto& g = gram_e10();
    Mat10 gm{};
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            __int128 acc = 0;
            for (int k = 0; k < 10; ++k) acc += static_cast<__int128>(m[i][k]) * g[k][j];
            gm[i][j] = checked_narrow(acc);
        }
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            __int128 acc = 0;
            for (int k = 0; k < 10; ++k) acc += static_cast<__int128>(gm[i][k]) * m[j][k];
            if (acc != g[i][j]) throw NotIsometryError(i, j);
        }
    IsometryMatrix r;
    r.m = m;
    // M^-1 = G M^T G^-1, integral for isometries of a unimodular form
    r.inv = mul(mul(gram_e10(), transpose(m)), gram_inverse());
    return r;
}

bool IntMat::symmetric() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < cols; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

namespace {

std::vector<std::vector<cpp_rational>> to_rational(const IntMat& s) {
    std::vector<std::vector<cpp_rational>> a(static_cast<size_t>(s.rows),
                                             std::vector<cpp_rational>(static_cast<size_t>(s.cols)));
    for (int i = 0; i < s.rows; ++i)
        for (int j = 0; j < s.cols; ++j) a[i][j] = s.at(i, j);
    return a;
}

}  // namespace

Inertia exact_inertia(const IntMat& s) {
    if (!s.symmetric()) throw NonSymmetricError("inertia requires a symmetric matrix");
    auto a = to_rational(s);
    std::vector<int> idx(static_cast<size_t>(s.rows));
    std::iota(idx.begin(), idx.end(), 0);
    Inertia r;
    while (!idx.empty()) {
        int piv = -1;
        for (int i : idx)
            if (a[i][i] != 0) { piv = i; break; }
        if (piv >= 0) {
            cpp_rational d = a[piv][piv];
            (d > 0 ? r.pos : r.neg)++;
            std::vector<int> rest;
            for (int i : idx)
                if (i != piv) rest.push_back(i);
            for (int i : rest)
                for (int j : rest) a[i][j] -= a[i][piv] * a[piv][j] / d;
            idx = std::move(rest);
            continue;
        }
        // zero diagonal on the active block: either the block is zero, or an
        // off-diagonal 2x2 hyperbolic block contributes one +1 and one -1
        int i0 = -1, j0 = -1;
        for (size_t x = 0; x < idx.size() && i0 < 0; ++x)
            for (size_t y = x + 1; y < idx.size(); ++y)
                if (a[idx[x]][idx[y]] != 0) {
                    i0 = idx[x];
                    j0 = idx[y];
                    break;
                }
        if (i0 < 0) {
            r.zero += static_cast<int>(idx.size());
            break;
        }
        cpp_rational b = a[i0][j0];
        r.pos++;
        r.neg++;
        std::vector<int> rest;
        for (int i : idx)
            if (i != i0 && i != j0) rest.push_back(i);
        for (int i : rest)
            for (int j : rest) a[i][j] -= (a[i][i0] * a[j0][j] + a[i][j0] * a[i0][j]) / b;
        idx = std::move(rest);
    }
    return r;
}

int rank_of_gram(const IntMat& s) {
    Inertia in = exact_inertia(s);
    return in.pos + in.neg;
}

int rank_of_gram(const std::vector<LatticeVector>& vs) {
    const int n = static_cast<int>(vs.size());
    IntMat g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Coord p = dot(vs[static_cast<size_t>(i)], vs[static_cast<size_t>(j)]);
            g.at(i, j) = p;
            g.at(j, i) = p;
        }
    return rank_of_gram(g);
}

int coordinate_rank(const std::vector<LatticeVector>& vs) {
    const int n = static_cast<int>(vs.size());
    std::vector<std::vector<cpp_rational>> a(static_cast<size_t>(n),
                                             std::vector<cpp_rational>(10));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 10; ++j) a[i][j] = vs[static_cast<size_t>(i)][j];
    int rank = 0;
    for (int c = 0; c < 10 && rank < n; ++c) {
        int p = -1;
        for (int i = rank; i < n; ++i)
            if (a[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[p], a[rank]);
        for (int i = rank + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            cpp_rational f = a[i][c] / a[rank][c];
            for (int j = c; j < 10; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

Coord determinant(const IntMat& s) {
    if (s.rows != s.cols) throw Error("determinant requires a square matrix");
    const int n = s.rows;
    std::vector<std::vector<cpp_int>> a(static_cast<size_t>(n), std::vector<cpp_int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = s.at(i, j);
    // Bareiss fraction-free elimination
    cpp_int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { p = i; break; }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    cpp_int d = sign * a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    if (d > std::numeric_limits<Coord>::max() || d < std::numeric_limits<Coord>::min())
        throw OverflowError("determinant does not fit a 64-bit integer");
    return static_cast<Coord>(d);
}

std::vector<Coord> corank1_kernel(const IntMat& s) {
    if (!s.symmetric()) throw NonSymmetricError("kernel extraction requires a symmetric matrix");
    const int n = s.rows;
    auto a = to_rational(s);
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = r; i < n; ++i)
            if (a[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        cpp_rational d = a[r][c];
        for (int j = 0; j < n; ++j) a[r][j] /= d;
        for (int i = 0; i < n; ++i) {
            if (i == r || a[i][c] == 0) continue;
            cpp_rational f = a[i][c];
            for (int j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    if (n - r != 1) return {};
    int free_col = 0;
    for (int c = 0; c < n; ++c)
        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_col = c;
    std::vector<cpp_rational> x(static_cast<size_t>(n));
    x[static_cast<size_t>(free_col)] = 1;
    for (int row = 0; row < r; ++row) x[static_cast<size_t>(pivots[static_cast<size_t>(row)])] = -a[row][free_col];
    cpp_int lcm = 1;
    for (const auto& v : x) lcm = boost::multiprecision::lcm(lcm, denominator(v));
    std::vector<cpp_int> xi(static_cast<size_t>(n));
    cpp_int g = 0;
    for (int i = 0; i < n; ++i) {
        xi[static_cast<size_t>(i)] = numerator(x[static_cast<size_t>(i)]) * (lcm / denominator(x[static_cast<size_t>(i)]));
        g = boost::multiprecision::gcd(g, abs(xi[static_cast<size_t>(i)]));
    }
    bool all_nonpos = true;
    for (const auto& v : xi)
        if (v > 0) { all_nonpos = false; break; }
    std::vector<Coord> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        cpp_int v = xi[static_cast<size_t>(i)] / g;
        if (all_nonpos) v = -v;
        if (v > std::numeric_limits<Coord>::max() || v < std::numeric_limits<Coord>::min())
            throw OverflowError("kernel vector does not fit a 64-bit integer");
        out[static_cast<size_t>(i)] = static_cast<Coord>(v);
    }
    return out;
}

}  // namespace enriques
