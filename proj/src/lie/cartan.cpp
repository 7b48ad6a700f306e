#include "atlas/lie/cartan.hpp"

#include "atlas/composition/algebra.hpp"
#include "atlas/linalg/elimination.hpp"

#include <algorithm>
#include <limits>

namespace atlas::lie {

namespace {

RationalVector scaled(RationalVector v, const Rational& s)
{
    for (auto& x : v) {
        x *= s;
    }
    return v;
}

bool is_identity(const RationalMatrix& m)
{
    return m == RationalMatrix::identity(m.rows());
}

RationalMatrix diagonal_signs(const std::vector<int>& signs)
{
    RationalMatrix m(signs.size(), signs.size());
    for (std::size_t i = 0; i < signs.size(); ++i) {
        m(i, i) = signs[i];
    }
    return m;
}

RationalVector image(const RationalMatrix& m, const RationalVector& v)
{
    return m * v;
}

} // namespace

Involution Involution::certify(const composition::StructureTable& table, RationalMatrix sigma)
{
    const std::size_t n = table.dim();
    if (sigma.rows() != n || sigma.cols() != n) {
        throw InvalidInvolution("involution matrix does not match algebra dimension");
    }
    if (!is_identity(sigma * sigma)) {
        throw InvalidInvolution("sigma^2 is not the identity");
    }
    std::vector<RationalVector> images(n);
    for (std::size_t i = 0; i < n; ++i) {
        images[i] = sigma.column(i);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            RationalVector prod(n);
            for (const auto& [k, c] : table.product(i, j)) {
                prod[k] = c;
            }
            if (sigma * prod != table.multiply(images[i], images[j])) {
                throw InvalidInvolution("sigma does not preserve the product on (e" + std::to_string(i) +
                                        ", e" + std::to_string(j) + ")");
            }
        }
    }
    return Involution(std::move(sigma));
}

Involution quaternion_fixing_involution(const composition::StructureTable& octonions)
{
    if (octonions.dim() != 8) {
        throw InvalidInvolution("quaternion-fixing involution needs the octonions");
    }
    return Involution::certify(octonions, diagonal_signs({1, 1, 1, 1, -1, -1, -1, -1}));
}

Involution diagonal_sign_involution(const composition::StructureTable& j3)
{
    if (j3.dim() < 6 || (j3.dim() - 3) % 3 != 0) {
        throw InvalidInvolution("diag(-1,1,1) conjugation needs a J3(K) table");
    }
    const std::size_t k = (j3.dim() - 3) / 3;
    std::vector<int> signs(j3.dim(), 1);
    for (std::size_t i = 0; i < 2 * k; ++i) {
        signs[3 + i] = -1;
    }
    return Involution::certify(j3, diagonal_signs(signs));
}

Involution entrywise_involution(const composition::StructureTable& j3, const Involution& on_k)
{
    const auto& s = on_k.matrix();
    const std::size_t k = s.rows();
    if (j3.dim() != 3 + 3 * k) {
        throw InvalidInvolution("entrywise involution: J3 table does not match the coefficient algebra");
    }
    auto m = RationalMatrix::identity(j3.dim());
    for (std::size_t block = 0; block < 3; ++block) {
        const std::size_t off = 3 + block * k;
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = 0; c < k; ++c) {
                m(off + r, off + c) = s(r, c);
            }
        }
    }
    return Involution::certify(j3, std::move(m));
}

RationalMatrix induced_involution(const Involution& sigma, const LieAlgebraBasis& l)
{
    const auto& s = sigma.matrix();
    if (s.rows() != l.ambient_dim()) {
        throw InvalidInvolution("involution acts on a different algebra than the Lie algebra");
    }
    const std::size_t d = l.dim();
    RationalMatrix theta(d, d);
    for (std::size_t b = 0; b < d; ++b) {
        // sigma^{-1} = sigma
        const auto conj = s * l.element(b) * s;
        const auto coords = l.try_coordinates(conj);
        if (!coords) {
            throw InvalidInvolution("sigma D sigma^-1 left the derivation algebra");
        }
        for (std::size_t a = 0; a < d; ++a) {
            theta(a, b) = (*coords)[a];
        }
    }
    if (d > 0 && !is_identity(theta * theta)) {
        throw InvalidInvolution("induced map does not square to the identity");
    }
    return theta;
}

CartanPair cartan_split(const LieAlgebraBasis& l, const RationalMatrix& theta)
{
    const std::size_t d = l.dim();
    if (theta.rows() != d || theta.cols() != d) {
        throw InvalidInvolution("theta does not act on this Lie algebra");
    }
    CartanPair out;
    if (d == 0) {
        return out;
    }
    if (!is_identity(theta * theta)) {
        throw InvalidInvolution("theta^2 is not the identity");
    }
    std::vector<RationalVector> columns(d);
    for (std::size_t a = 0; a < d; ++a) {
        columns[a] = theta.column(a);
    }
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a + 1; b < d; ++b) {
            RationalVector ab(d);
            for (const auto& [c, f] : l.bracket_terms(a, b)) {
                ab[c] = f;
            }
            if (theta * ab != l.bracket(columns[a], columns[b])) {
                throw InvalidInvolution("theta is not a Lie algebra automorphism");
            }
        }
    }

    const auto identity = RationalMatrix::identity(d);
    out.k_basis = linalg::nullspace_basis(theta - identity);
    out.p_basis = linalg::nullspace_basis(theta + identity);
    out.dim_k = out.k_basis.size();
    out.dim_p = out.p_basis.size();
    if (out.dim_k + out.dim_p != d) {
        throw InvalidInvolution("eigenspaces of theta do not span the Lie algebra");
    }

    auto expect = [&](const RationalVector& z, int sign, const char* relation) {
        if (image(theta, z) != scaled(z, sign)) {
            throw std::logic_error(std::string("Cartan relation violated: ") + relation);
        }
    };
    for (std::size_t i = 0; i < out.dim_k; ++i) {
        for (std::size_t j = i + 1; j < out.dim_k; ++j) {
            expect(l.bracket(out.k_basis[i], out.k_basis[j]), 1, "[k,k] in k");
        }
        for (const auto& p : out.p_basis) {
            expect(l.bracket(out.k_basis[i], p), -1, "[k,p] in p");
        }
    }
    std::vector<RationalVector> pp;
    for (std::size_t i = 0; i < out.dim_p; ++i) {
        for (std::size_t j = i + 1; j < out.dim_p; ++j) {
            auto z = l.bracket(out.p_basis[i], out.p_basis[j]);
            expect(z, 1, "[p,p] in k");
            if (!linalg::is_zero(z)) {
                pp.push_back(std::move(z));
            }
        }
    }
    out.pp_span_dim = pp.empty() ? 0 : linalg::rank(RationalMatrix::from_rows(pp));
    return out;
}

RationalMatrix killing_form(const LieAlgebraBasis& l)
{
    const std::size_t d = l.dim();
    std::vector<RationalMatrix> ads;
    ads.reserve(d);
    for (std::size_t a = 0; a < d; ++a) {
        RationalVector e(d);
        e[a] = 1;
        ads.push_back(l.ad(e));
    }
    RationalMatrix b(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            Rational t;
            for (std::size_t r = 0; r < d; ++r) {
                for (std::size_t c = 0; c < d; ++c) {
                    const auto& x = ads[i](r, c);
                    if (sgn(x) != 0 && sgn(ads[j](c, r)) != 0) {
                        t += x * ads[j](c, r);
                    }
                }
            }
            b(i, j) = t;
            b(j, i) = t;
        }
    }
    return b;
}

std::size_t generic_rank(const LieAlgebraBasis& l, std::size_t trials, std::uint64_t seed)
{
    if (trials == 0) {
        throw std::invalid_argument("generic_rank needs at least one trial");
    }
    const std::size_t d = l.dim();
    if (d == 0) {
        return 0;
    }
    composition::ElementSampler sampler(seed);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t t = 0; t < trials; ++t) {
        const auto x = sampler.vector(d);
        const auto ad = l.ad(x);
        best = std::min(best, d - linalg::rank(ad));
    }
    return best;
}

std::size_t symmetric_pair_rank(const LieAlgebraBasis& l, const CartanPair& pair, std::size_t trials,
                                std::uint64_t seed)
{
    if (trials == 0) {
        throw std::invalid_argument("symmetric_pair_rank needs at least one trial");
    }
    if (pair.dim_p == 0) {
        return 0;
    }
    composition::ElementSampler sampler(seed);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t t = 0; t < trials; ++t) {
        const auto w = sampler.vector(pair.dim_p);
        RationalVector x(l.dim());
        for (std::size_t i = 0; i < pair.dim_p; ++i) {
            for (std::size_t c = 0; c < l.dim(); ++c) {
                x[c] += w[i] * pair.p_basis[i][c];
            }
        }
        std::vector<RationalVector> images;
        images.reserve(pair.dim_p);
        for (const auto& p : pair.p_basis) {
            images.push_back(l.bracket(x, p));
        }
        const auto m = RationalMatrix::from_columns(images);
        best = std::min(best, pair.dim_p - linalg::rank(m));
    }
    return best;
}

} // namespace atlas::lie
