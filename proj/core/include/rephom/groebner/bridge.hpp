#pragma once

#include <vector>

#include "rephom/gca/algebra.hpp"
#include "rephom/groebner/polynomial.hpp"

namespace rephom::groebner {

// Polynomial in the algebra's generators (variable i = generator i). The
// element must not involve odd generators or negative exponents.
Polynomial to_polynomial(const gca::AlgebraElement& e);

}  // namespace rephom::groebner
