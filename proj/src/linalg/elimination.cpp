#include "atlas/linalg/elimination.hpp"

#include "atlas/linalg/modular.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace atlas::linalg {

namespace {

// A row of m scaled to a primitive integer vector; only nonzeros are kept.
struct IntRow {
    std::vector<std::uint32_t> cols;
    std::vector<Integer> values;
};

void check_stop(const std::stop_token& stop)
{
    if (stop.stop_requested()) {
        throw Cancelled("elimination cancelled");
    }
}

void require_nonempty(const RationalMatrix& m, const char* what)
{
    if (m.empty()) {
        throw DimensionError(std::string(what) + ": empty matrix");
    }
}

std::optional<IntRow> integer_row(std::span<const Rational> row)
{
    Integer den = 1;
    bool any = false;
    for (const auto& x : row) {
        if (sgn(x) != 0) {
            any = true;
            if (x.get_den() != 1) {
                den = lcm(den, x.get_den());
            }
        }
    }
    if (!any) {
        return std::nullopt;
    }
    IntRow out;
    Integer content = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (sgn(row[j]) == 0) {
            continue;
        }
        out.cols.push_back(static_cast<std::uint32_t>(j));
        out.values.push_back(row[j].get_num() * (den / row[j].get_den()));
        content = gcd(content, out.values.back());
    }
    if (content != 1) {
        for (auto& v : out.values) {
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
        }
    }
    return out;
}

// Zero rows are skipped.
std::vector<IntRow> integer_rows(const RationalMatrix& m)
{
    std::vector<IntRow> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (auto r = integer_row(m.row(i))) {
            rows.push_back(std::move(*r));
        }
    }
    return rows;
}

std::vector<RationalVector> identity_basis(std::size_t n)
{
    std::vector<RationalVector> basis(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i) {
        basis[i][i] = 1;
    }
    return basis;
}

// Scales v to an integer vector (lcm of denominators).
std::vector<Integer> integer_vector(const RationalVector& v)
{
    Integer den = 1;
    for (const auto& x : v) {
        if (sgn(x) != 0 && x.get_den() != 1) {
            den = lcm(den, x.get_den());
        }
    }
    std::vector<Integer> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) != 0) {
            out[i] = v[i].get_num() * (den / v[i].get_den());
        }
    }
    return out;
}

bool certify(const std::vector<IntRow>& rows, const std::vector<RationalVector>& vectors,
             const std::stop_token& stop)
{
    Integer acc;
    for (const auto& v : vectors) {
        check_stop(stop);
        const auto w = integer_vector(v);
        for (const auto& row : rows) {
            acc = 0;
            for (std::size_t k = 0; k < row.cols.size(); ++k) {
                const Integer& x = w[row.cols[k]];
                if (x != 0) {
                    mpz_addmul(acc.get_mpz_t(), row.values[k].get_mpz_t(), x.get_mpz_t());
                }
            }
            if (acc != 0) {
                return false;
            }
        }
    }
    return true;
}

// Fraction-free echelon form: rows[k] has its leading entry in pivots[k].
struct IntegerEchelon {
    std::vector<std::vector<Integer>> rows;
    std::vector<std::size_t> pivots;
};

IntegerEchelon bareiss_echelon(const std::vector<IntRow>& input, std::size_t cols,
                               const std::stop_token& stop)
{
    std::vector<std::vector<Integer>> a(input.size(), std::vector<Integer>(cols));
    for (std::size_t i = 0; i < input.size(); ++i) {
        for (std::size_t k = 0; k < input[i].cols.size(); ++k) {
            a[i][input[i].cols[k]] = input[i].values[k];
        }
    }
    const std::size_t n = a.size();
    IntegerEchelon out;
    Integer prev = 1;
    Integer tmp;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < n; ++c) {
        check_stop(stop);
        // Smallest bit-length wins; strict comparison keeps the lowest row index on ties.
        std::size_t best = n;
        std::size_t best_bits = 0;
        for (std::size_t i = r; i < n; ++i) {
            if (a[i][c] == 0) {
                continue;
            }
            const std::size_t bits = bit_length(a[i][c]);
            if (best == n || bits < best_bits) {
                best = i;
                best_bits = bits;
            }
        }
        if (best == n) {
            continue;
        }
        std::swap(a[r], a[best]);
        const Integer pivot = a[r][c];
        const bool trivial_scale = (pivot == prev);
        for (std::size_t i = r + 1; i < n; ++i) {
            auto& row = a[i];
            const Integer lead = row[c];
            if (lead == 0) {
                if (trivial_scale) {
                    continue;
                }
                for (std::size_t j = c + 1; j < cols; ++j) {
                    if (row[j] != 0) {
                        mpz_mul(tmp.get_mpz_t(), row[j].get_mpz_t(), pivot.get_mpz_t());
                        mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
                    }
                }
                continue;
            }
            const auto& prow = a[r];
            for (std::size_t j = c + 1; j < cols; ++j) {
                const bool has_self = row[j] != 0;
                const bool has_pivot_row = prow[j] != 0;
                if (!has_self && !has_pivot_row) {
                    continue;
                }
                if (has_self) {
                    mpz_mul(tmp.get_mpz_t(), row[j].get_mpz_t(), pivot.get_mpz_t());
                } else {
                    tmp = 0;
                }
                if (has_pivot_row) {
                    mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), prow[j].get_mpz_t());
                }
                mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            row[c] = 0;
        }
        prev = pivot;
        out.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    out.rows = std::move(a);
    return out;
}

// Canonical nullspace from an echelon form by back substitution.
std::vector<RationalVector> nullspace_from_echelon(const IntegerEchelon& ech, std::size_t cols,
                                                   const std::stop_token& stop)
{
    std::vector<bool> is_pivot(cols, false);
    for (auto p : ech.pivots) {
        is_pivot[p] = true;
    }
    std::vector<RationalVector> basis;
    Rational s;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        check_stop(stop);
        RationalVector x(cols);
        x[f] = 1;
        for (std::size_t k = ech.pivots.size(); k-- > 0;) {
            const auto& row = ech.rows[k];
            const std::size_t p = ech.pivots[k];
            s = 0;
            for (std::size_t j = p + 1; j < cols; ++j) {
                if (row[j] != 0 && sgn(x[j]) != 0) {
                    s += Rational(row[j]) * x[j];
                }
            }
            if (sgn(s) != 0) {
                x[p] = -s / Rational(row[p]);
            }
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

// Reduced echelon form mod p, built row by row. rows[k] is 1 at pivots[k] and
// 0 at every other pivot column.
struct ModularRref {
    std::uint64_t prime = 0;
    std::vector<std::size_t> pivots;
    std::vector<std::vector<std::uint64_t>> rows;
};

using ModRow = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

ModularRref modular_rref(const std::vector<ModRow>& input, std::size_t cols, std::uint64_t p,
                         const std::stop_token& stop)
{
    ModularRref out;
    out.prime = p;
    std::vector<std::uint64_t> r(cols);
    std::size_t counter = 0;
    for (const auto& sparse : input) {
        if (out.pivots.size() == cols) {
            break;
        }
        if ((++counter & 255) == 0) {
            check_stop(stop);
        }
        std::fill(r.begin(), r.end(), 0);
        for (const auto& [c, v] : sparse) {
            r[c] = v;
        }
        for (std::size_t k = 0; k < out.pivots.size(); ++k) {
            const std::uint64_t f = r[out.pivots[k]];
            if (f == 0) {
                continue;
            }
            const std::uint64_t neg = p - f;
            const auto& b = out.rows[k];
            for (std::size_t j = 0; j < cols; ++j) {
                if (b[j] != 0) {
                    r[j] = (r[j] + neg * b[j]) % p;
                }
            }
        }
        std::size_t lead = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (r[j] != 0) {
                lead = j;
                break;
            }
        }
        if (lead == cols) {
            continue;
        }
        const std::uint64_t inv = inv_mod(r[lead], p);
        for (std::size_t j = lead; j < cols; ++j) {
            if (r[j] != 0) {
                r[j] = r[j] * inv % p;
            }
        }
        for (auto& b : out.rows) {
            const std::uint64_t f = b[lead];
            if (f == 0) {
                continue;
            }
            const std::uint64_t neg = p - f;
            for (std::size_t j = lead; j < cols; ++j) {
                if (r[j] != 0) {
                    b[j] = (b[j] + neg * r[j]) % p;
                }
            }
        }
        out.pivots.push_back(lead);
        out.rows.push_back(r);
    }
    return out;
}

std::vector<ModRow> reduce_rows(const std::vector<IntRow>& rows, std::uint64_t p)
{
    std::vector<ModRow> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        ModRow m;
        for (std::size_t k = 0; k < row.cols.size(); ++k) {
            const auto v = reduce_mod(row.values[k], p);
            if (v != 0) {
                m.emplace_back(row.cols[k], v);
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

// Nullspace residues mod p, indexed [vector][column], in free-column order.
std::vector<std::vector<std::uint64_t>> modular_nullspace(const ModularRref& rref, std::size_t cols)
{
    std::vector<bool> is_pivot(cols, false);
    for (auto c : rref.pivots) {
        is_pivot[c] = true;
    }
    std::vector<std::vector<std::uint64_t>> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        std::vector<std::uint64_t> v(cols);
        v[f] = 1;
        for (std::size_t k = 0; k < rref.pivots.size(); ++k) {
            const auto x = rref.rows[k][f];
            v[rref.pivots[k]] = x == 0 ? 0 : rref.prime - x;
        }
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

std::vector<RationalVector> nullspace_basis_exact(const RationalMatrix& m, std::stop_token stop)
{
    require_nonempty(m, "nullspace_basis");
    const auto rows = integer_rows(m);
    if (rows.empty()) {
        return identity_basis(m.cols());
    }
    const auto ech = bareiss_echelon(rows, m.cols(), stop);
    auto basis = nullspace_from_echelon(ech, m.cols(), stop);
    if (!certify(rows, basis, stop)) {
        throw CertificationError("exact nullspace failed substitution");
    }
    return basis;
}

std::vector<RationalVector> nullspace_basis_modular(const RationalMatrix& m, std::uint64_t seed,
                                                    std::stop_token stop)
{
    require_nonempty(m, "nullspace_basis");
    const auto rows = integer_rows(m);
    if (rows.empty()) {
        return identity_basis(m.cols());
    }
    const std::size_t cols = m.cols();
    std::mt19937_64 rng(seed);

    constexpr int kMaxPrimes = 8;
    std::optional<std::size_t> best_rank;
    std::vector<std::size_t> best_pivots;
    Integer modulus;
    std::vector<std::vector<Integer>> residues;

    for (int attempt = 0; attempt < kMaxPrimes; ++attempt) {
        check_stop(stop);
        const std::uint64_t p = random_probe_prime(rng);
        const auto rref = modular_rref(reduce_rows(rows, p), cols, p, stop);
        const std::size_t r = rref.pivots.size();
        auto pivots = sorted(rref.pivots);
        // A rank drop or a lexicographically later pivot set marks an unlucky prime.
        const bool better = !best_rank || r > *best_rank || (r == *best_rank && pivots < best_pivots);
        const bool same = best_rank && r == *best_rank && pivots == best_pivots;
        if (!better && !same) {
            continue;
        }
        const auto images = modular_nullspace(rref, cols);
        if (better) {
            best_rank = r;
            best_pivots = std::move(pivots);
            modulus = static_cast<unsigned long>(p);
            residues.assign(images.size(), std::vector<Integer>(cols));
            for (std::size_t v = 0; v < images.size(); ++v) {
                for (std::size_t j = 0; j < cols; ++j) {
                    residues[v][j] = static_cast<unsigned long>(images[v][j]);
                }
            }
        } else {
            // CRT: x = a (mod M), x = b (mod p)  ->  a + M * ((b - a) / M mod p)
            const std::uint64_t m_inv = inv_mod(reduce_mod(modulus, p), p);
            for (std::size_t v = 0; v < images.size(); ++v) {
                for (std::size_t j = 0; j < cols; ++j) {
                    auto& a = residues[v][j];
                    const std::uint64_t a_mod = reduce_mod(a, p);
                    const std::uint64_t diff = (images[v][j] + p - a_mod) % p;
                    const std::uint64_t t = mul_mod(diff, m_inv, p);
                    if (t != 0) {
                        a += modulus * static_cast<unsigned long>(t);
                    }
                }
            }
            modulus *= static_cast<unsigned long>(p);
        }

        std::vector<RationalVector> candidate;
        candidate.reserve(residues.size());
        bool lifted = true;
        for (const auto& res : residues) {
            RationalVector v(cols);
            for (std::size_t j = 0; j < cols && lifted; ++j) {
                if (res[j] == 0) {
                    continue;
                }
                auto q = rational_reconstruct(res[j], modulus);
                if (!q) {
                    lifted = false;
                } else {
                    v[j] = std::move(*q);
                }
            }
            if (!lifted) {
                break;
            }
            candidate.push_back(std::move(v));
        }
        // cols - rank_p candidates bound the nullity from above, so a fully
        // certified set is the whole nullspace.
        if (lifted && certify(rows, candidate, stop)) {
            return candidate;
        }
    }
    return nullspace_basis_exact(m, stop);
}

std::vector<RationalVector> nullspace_basis(const RationalMatrix& m, std::stop_token stop)
{
    require_nonempty(m, "nullspace_basis");
    if (m.rows() > kModularRowThreshold) {
        return nullspace_basis_modular(m, 0x5eed'a71a5ULL ^ m.rows() ^ (m.cols() << 20), stop);
    }
    return nullspace_basis_exact(m, stop);
}

std::size_t rank(const RationalMatrix& m, std::stop_token stop)
{
    require_nonempty(m, "rank");
    if (m.rows() > kModularRowThreshold) {
        return m.cols() - nullspace_basis(m, stop).size();
    }
    const auto rows = integer_rows(m);
    if (rows.empty()) {
        return 0;
    }
    return bareiss_echelon(rows, m.cols(), stop).pivots.size();
}

std::size_t rank_modular_probe(const RationalMatrix& m, std::uint64_t prime)
{
    require_nonempty(m, "rank_modular_probe");
    if (prime <= kMinProbePrime || prime >= kMaxProbePrime || !is_prime(prime)) {
        throw std::invalid_argument("rank_modular_probe: need a prime in (2^30, 2^31)");
    }
    std::vector<ModRow> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ModRow r;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (sgn(m(i, j)) != 0) {
                const auto v = reduce_mod(m(i, j), prime);
                if (v != 0) {
                    r.emplace_back(static_cast<std::uint32_t>(j), v);
                }
            }
        }
        if (!r.empty()) {
            rows.push_back(std::move(r));
        }
    }
    return modular_rref(rows, m.cols(), prime, {}).pivots.size();
}

std::vector<RationalVector> reduced_row_echelon(std::vector<RationalVector> rows,
                                                std::vector<std::size_t>* pivots)
{
    if (pivots) {
        pivots->clear();
    }
    if (rows.empty()) {
        return rows;
    }
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    Rational f;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t i = r;
        while (i < rows.size() && sgn(rows[i][c]) == 0) {
            ++i;
        }
        if (i == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[i]);
        auto& prow = rows[r];
        if (prow[c] != 1) {
            const Rational inv = 1 / prow[c];
            for (std::size_t j = c; j < cols; ++j) {
                if (sgn(prow[j]) != 0) {
                    prow[j] *= inv;
                }
            }
        }
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == r || sgn(rows[k][c]) == 0) {
                continue;
            }
            f = rows[k][c];
            for (std::size_t j = c; j < cols; ++j) {
                if (sgn(prow[j]) != 0) {
                    rows[k][j] -= f * prow[j];
                }
            }
        }
        if (pivots) {
            pivots->push_back(c);
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

namespace {

// Common-denominator integer image of a square matrix.
std::vector<std::vector<Integer>> scaled_integer_square(const RationalMatrix& m, std::size_t n,
                                                        Integer& scale)
{
    scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (m(i, j).get_den() != 1) {
                scale = lcm(scale, m(i, j).get_den());
            }
        }
    }
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = m(i, j).get_num() * (scale / m(i, j).get_den());
        }
    }
    return a;
}

Rational leading_determinant(const RationalMatrix& m, std::size_t n)
{
    if (n == 0) {
        return 1;
    }
    Integer scale;
    auto a = scaled_integer_square(m, n, scale);
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) {
            ++p;
        }
        if (p == n) {
            return 0;
        }
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Integer scale_pow;
    mpz_pow_ui(scale_pow.get_mpz_t(), scale.get_mpz_t(), n);
    return make_rational(sign * a[n - 1][n - 1], scale_pow);
}

} // namespace

Rational determinant(const RationalMatrix& m)
{
    if (m.rows() != m.cols()) {
        throw DimensionError("determinant of a non-square matrix");
    }
    require_nonempty(m, "determinant");
    return leading_determinant(m, m.rows());
}

std::vector<Rational> leading_principal_minors(const RationalMatrix& m)
{
    if (m.rows() != m.cols()) {
        throw DimensionError("principal minors of a non-square matrix");
    }
    require_nonempty(m, "leading_principal_minors");
    const std::size_t n = m.rows();
    Integer scale;
    auto a = scaled_integer_square(m, n, scale);
    std::vector<Rational> minors;
    minors.reserve(n);
    // Without pivoting, the k-th Bareiss pivot is the k-th leading minor of a.
    Integer prev = 1;
    Integer scale_pow = 1;
    std::size_t k = 0;
    for (; k < n; ++k) {
        scale_pow *= scale;
        if (a[k][k] == 0) {
            break;
        }
        minors.push_back(make_rational(a[k][k], scale_pow));
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    // A vanishing minor stops the elimination; finish the rest directly.
    for (; k < n; ++k) {
        minors.push_back(leading_determinant(m, k + 1));
    }
    return minors;
}

Definiteness definiteness(const RationalMatrix& symmetric)
{
    if (!symmetric.is_symmetric()) {
        throw DimensionError("definiteness: matrix is not symmetric");
    }
    const auto minors = leading_principal_minors(symmetric);
    bool positive = true;
    bool negative = true;
    for (std::size_t k = 0; k < minors.size(); ++k) {
        const int s = sgn(minors[k]);
        positive = positive && s > 0;
        // (-1)^(k+1) Delta_(k+1) > 0
        negative = negative && (k % 2 == 0 ? s < 0 : s > 0);
    }
    if (positive) {
        return Definiteness::positive;
    }
    if (negative) {
        return Definiteness::negative;
    }
    return Definiteness::neither;
}

} // namespace atlas::linalg
