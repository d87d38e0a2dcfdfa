#pragma once

#include <vector>

#include "kschubert/ring.hpp"

namespace kschubert {

using RMatrix = std::vector<std::vector<GroupAlgElt>>;

/// a / b when b divides a exactly in Z[P]; throws std::domain_error otherwise.
GroupAlgElt exact_divide(const GroupAlgElt& a, const GroupAlgElt& b);

/// Fraction-free Gauss-Jordan elimination of [A | B].
///
/// On return `scaled` holds det(A) * A^{-1} B (up to the row-swap sign,
/// which is folded into `det`), so A^{-1} B = scaled / det.
struct BareissSolution {
    GroupAlgElt det;
    RMatrix scaled;
};

BareissSolution bareiss_solve(RMatrix a, RMatrix b);

RMatrix identity_matrix(std::size_t n, int rank);
RMatrix mat_mul(const RMatrix& a, const RMatrix& b);

/// If f = +-e^mu, returns true and sets sign and mu.
bool as_signed_monomial(const GroupAlgElt& f, int& sign, Weight& mu);

}  // namespace kschubert
