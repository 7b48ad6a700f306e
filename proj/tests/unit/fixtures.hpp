#pragma once

#include "atlas/lie/derivations.hpp"

namespace fixture {

inline const atlas::lie::LieAlgebraBasis& der_o()
{
    static const auto l = atlas::lie::derivation_algebra(*atlas::composition::octonions());
    return l;
}

inline const atlas::lie::LieAlgebraBasis& der_j3o()
{
    static const auto l = atlas::lie::derivation_algebra(*atlas::jordan::j3("O"));
    return l;
}

} // namespace fixture
