#pragma once

#include "atlas/composition/structure_table.hpp"
#include "atlas/lie/lie_algebra.hpp"

#include <cstdint>
#include <stdexcept>

namespace atlas::lie {

class InvalidInvolution : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An order-2 automorphism of a finite algebra, certified against its
/// structure constants on construction.
class Involution {
public:
    static Involution certify(const composition::StructureTable& table, RationalMatrix sigma);

    const RationalMatrix& matrix() const noexcept { return matrix_; }

private:
    explicit Involution(RationalMatrix m) : matrix_(std::move(m)) {}
    RationalMatrix matrix_;
};

/// Fixes span{e0..e3} of the octonions and negates span{e4..e7}.
Involution quaternion_fixing_involution(const composition::StructureTable& octonions);

/// X -> sXs with s = diag(-1, 1, 1) on J3(K) coordinates: negates the (1,2)
/// and (1,3) blocks.
Involution diagonal_sign_involution(const composition::StructureTable& j3);

/// Applies an automorphism of K to every entry of J3(K).
Involution entrywise_involution(const composition::StructureTable& j3, const Involution& on_k);

/// D -> sigma D sigma^{-1} written in the basis of l (which must be the
/// derivation algebra of the table sigma was certified on).
RationalMatrix induced_involution(const Involution& sigma, const LieAlgebraBasis& l);

/// g = k + p, k = fixed vectors, p = negated vectors of theta.
struct CartanPair {
    std::vector<RationalVector> k_basis;
    std::vector<RationalVector> p_basis;
    std::size_t dim_k = 0;
    std::size_t dim_p = 0;
    /// dim span [p, p]; equals dim_k when [p, p] = k.
    std::size_t pp_span_dim = 0;

    bool pp_spans_k() const noexcept { return pp_span_dim == dim_k; }
};

/// Splits l under theta and checks [k,k] ⊆ k, [k,p] ⊆ p, [p,p] ⊆ k exactly.
/// Throws InvalidInvolution if theta is not an involutive automorphism of l.
CartanPair cartan_split(const LieAlgebraBasis& l, const RationalMatrix& theta);

/// B(a, b) = tr(ad_a ad_b).
RationalMatrix killing_form(const LieAlgebraBasis& l);

/// Minimum over `trials` seeded random x of dim ker ad_x.
std::size_t generic_rank(const LieAlgebraBasis& l, std::size_t trials, std::uint64_t seed = 1);

/// Minimum over seeded random x in p of dim {y in p : [x, y] = 0}, the rank of
/// the symmetric pair.
std::size_t symmetric_pair_rank(const LieAlgebraBasis& l, const CartanPair& pair, std::size_t trials,
                                std::uint64_t seed = 1);

} // namespace atlas::lie
