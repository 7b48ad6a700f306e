#include "atlas/jordan/jordan.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace atlas::jordan {

namespace {

using composition::conjugate;

constexpr std::size_t slot(std::size_t row, std::size_t col)
{
    // (0,1) -> 0, (0,2) -> 1, (1,2) -> 2
    return row + col - 1;
}

std::array<AlgebraElement, 3> zero_off(const AlgebraPtr& k)
{
    return {AlgebraElement::zero(k), AlgebraElement::zero(k), AlgebraElement::zero(k)};
}

using Full = std::array<std::array<AlgebraElement, 3>, 3>;

Full full_matrix(const HermitianMatrix3& x)
{
    const auto& k = x.coefficient_algebra();
    Full m{zero_off(k), zero_off(k), zero_off(k)};
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            m[r][c] = x.entry(r, c);
        }
    }
    return m;
}

} // namespace

HermitianMatrix3::HermitianMatrix3(AlgebraPtr k) : k_(k), diag_{}, off_(zero_off(k))
{
}

HermitianMatrix3::HermitianMatrix3(std::array<Rational, 3> diag, std::array<AlgebraElement, 3> off)
    : k_(off[0].algebra()), diag_(std::move(diag)), off_(std::move(off))
{
    composition::require_same_algebra(off_[0], off_[1]);
    composition::require_same_algebra(off_[1], off_[2]);
}

HermitianMatrix3 HermitianMatrix3::identity(AlgebraPtr k)
{
    return diagonal(std::move(k), 1, 1, 1);
}

HermitianMatrix3 HermitianMatrix3::diagonal(AlgebraPtr k, const Rational& d0, const Rational& d1,
                                            const Rational& d2)
{
    HermitianMatrix3 m(std::move(k));
    m.diag_ = {d0, d1, d2};
    return m;
}

HermitianMatrix3 HermitianMatrix3::from_coordinates(AlgebraPtr k, const RationalVector& coords)
{
    const std::size_t n = k->dim();
    if (coords.size() != 3 + 3 * n) {
        throw linalg::DimensionError("hermitian coordinates: expected " + std::to_string(3 + 3 * n));
    }
    HermitianMatrix3 m(k);
    for (std::size_t i = 0; i < 3; ++i) {
        m.diag_[i] = coords[i];
    }
    for (std::size_t p = 0; p < 3; ++p) {
        RationalVector v(coords.begin() + static_cast<std::ptrdiff_t>(3 + p * n),
                         coords.begin() + static_cast<std::ptrdiff_t>(3 + (p + 1) * n));
        m.off_[p] = AlgebraElement(k, std::move(v));
    }
    return m;
}

AlgebraElement HermitianMatrix3::entry(std::size_t row, std::size_t col) const
{
    if (row > 2 || col > 2) {
        throw std::out_of_range("hermitian entry index");
    }
    if (row == col) {
        return AlgebraElement::scalar(k_, diag_[row]);
    }
    if (row < col) {
        return off_[slot(row, col)];
    }
    return conjugate(off_[slot(col, row)]);
}

RationalVector HermitianMatrix3::coordinates() const
{
    RationalVector out(diag_.begin(), diag_.end());
    for (const auto& o : off_) {
        out.insert(out.end(), o.coeffs().begin(), o.coeffs().end());
    }
    return out;
}

HermitianMatrix3& HermitianMatrix3::operator+=(const HermitianMatrix3& other)
{
    for (std::size_t i = 0; i < 3; ++i) {
        diag_[i] += other.diag_[i];
        off_[i] += other.off_[i];
    }
    return *this;
}

HermitianMatrix3& HermitianMatrix3::operator-=(const HermitianMatrix3& other)
{
    for (std::size_t i = 0; i < 3; ++i) {
        diag_[i] -= other.diag_[i];
        off_[i] -= other.off_[i];
    }
    return *this;
}

HermitianMatrix3& HermitianMatrix3::operator*=(const Rational& s)
{
    for (std::size_t i = 0; i < 3; ++i) {
        diag_[i] *= s;
        off_[i] *= s;
    }
    return *this;
}

bool HermitianMatrix3::is_zero() const
{
    for (std::size_t i = 0; i < 3; ++i) {
        if (sgn(diag_[i]) != 0 || !off_[i].is_zero()) {
            return false;
        }
    }
    return true;
}

bool operator==(const HermitianMatrix3& a, const HermitianMatrix3& b)
{
    return a.diag_ == b.diag_ && a.off_ == b.off_;
}

HermitianMatrix3 jordan_product(const HermitianMatrix3& x, const HermitianMatrix3& y)
{
    composition::require_same_algebra(x.off(OffDiagonal::e12), y.off(OffDiagonal::e12));
    const auto& k = x.coefficient_algebra();
    const Full a = full_matrix(x);
    const Full b = full_matrix(y);
    const Rational half(1, 2);

    auto sym_entry = [&](std::size_t r, std::size_t c) {
        auto acc = AlgebraElement::zero(k);
        for (std::size_t m = 0; m < 3; ++m) {
            acc += a[r][m] * b[m][c];
            acc += b[r][m] * a[m][c];
        }
        return acc * half;
    };

    std::array<Rational, 3> diag;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto d = sym_entry(i, i);
        if (!d.is_scalar()) {
            throw std::logic_error("jordan_product: diagonal entry left the scalars");
        }
        diag[i] = d.real_part();
    }
    std::array<AlgebraElement, 3> off{sym_entry(0, 1), sym_entry(0, 2), sym_entry(1, 2)};
    if (sym_entry(1, 0) != conjugate(off[0]) || sym_entry(2, 0) != conjugate(off[1]) ||
        sym_entry(2, 1) != conjugate(off[2])) {
        throw std::logic_error("jordan_product: result is not hermitian");
    }
    return {diag, std::move(off)};
}

std::size_t jordan_dim(const composition::FiniteAlgebra& k)
{
    const auto n = k.dim();
    if (n != 1 && n != 2 && n != 4 && n != 8) {
        throw composition::UnsupportedAlgebra("jordan_dim expects R, C, H or O");
    }
    return 3 + 3 * n;
}

Rational trace(const HermitianMatrix3& x)
{
    return x.diag(0) + x.diag(1) + x.diag(2);
}

HermitianMatrix3 traceless_projection(const HermitianMatrix3& x)
{
    return x - HermitianMatrix3::identity(x.coefficient_algebra()) * Rational(trace(x) / 3);
}

bool jordan_identity_holds(const HermitianMatrix3& x, const HermitianMatrix3& y)
{
    const auto x2 = jordan_product(x, x);
    return jordan_product(x2, jordan_product(x, y)) == jordan_product(x, jordan_product(x2, y));
}

JordanAlgebra::JordanAlgebra(AlgebraPtr k) : k_(std::move(k))
{
    const std::size_t n = 3 + 3 * k_->dim();
    table_ = composition::StructureTable(n);
    std::vector<HermitianMatrix3> basis;
    basis.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        basis.push_back(basis_element(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const auto coords = jordan_product(basis[i], basis[j]).coordinates();
            table_.set_product(i, j, coords);
            table_.set_product(j, i, coords);
        }
    }
}

HermitianMatrix3 JordanAlgebra::basis_element(std::size_t i) const
{
    RationalVector coords(3 + 3 * k_->dim());
    coords.at(i) = 1;
    return HermitianMatrix3::from_coordinates(k_, coords);
}

JordanPtr j3(const std::string& k)
{
    static std::mutex mutex;
    static std::map<std::string, JordanPtr> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[k];
    if (!slot) {
        slot = std::make_shared<const JordanAlgebra>(composition::algebra_by_name(k));
    }
    return slot;
}

RationalMatrix trace_form_gram(const JordanAlgebra& j)
{
    const std::size_t n = j.dim();
    RationalMatrix g(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            // trace only reads the three diagonal coordinates
            for (const auto& [k, c] : j.table().product(a, b)) {
                if (k < 3) {
                    g(a, b) += c;
                }
            }
        }
    }
    return g;
}

HermitianMatrix3 random_hermitian(const AlgebraPtr& k, composition::ElementSampler& sampler)
{
    return HermitianMatrix3::from_coordinates(k, sampler.vector(3 + 3 * k->dim()));
}

std::optional<std::pair<HermitianMatrix3, HermitianMatrix3>>
find_jordan_identity_witness(const AlgebraPtr& k, composition::ElementSampler& sampler, std::size_t tries)
{
    for (std::size_t t = 0; t < tries; ++t) {
        auto x = random_hermitian(k, sampler);
        auto y = random_hermitian(k, sampler);
        if (!jordan_identity_holds(x, y)) {
            return std::pair{std::move(x), std::move(y)};
        }
    }
    return std::nullopt;
}

} // namespace atlas::jordan
