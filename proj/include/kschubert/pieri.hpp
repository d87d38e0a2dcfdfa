#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "kschubert/paths.hpp"
#include "kschubert/schubert.hpp"

namespace kschubert {

/// sum c T_{z^{-1}} X^mu, keyed by (z, mu).
using PieriExpansion = std::map<std::pair<WeylElt, Weight>, Integer>;

/// Reads off integer coefficients of a nil-Hecke element with no e-part.
/// Throws std::invalid_argument otherwise.
PieriExpansion to_expansion(const RootSystem& rs, const NilHeckeElt& x);
NilHeckeElt from_expansion(const RootSystem& rs, const PieriExpansion& p);
/// Image of the expansion applied to [O_1].
KClass apply_to_identity(const PieriExpansion& p);

/// Path-model Pieri-Chevalley engine over one root system.  Crystals are
/// built on demand and cached; safe for concurrent const use.
class PieriEngine {
public:
    explicit PieriEngine(RootSystemPtr rs);

    const RootSystem& root_system() const { return *rs_; }
    const Crystal& crystal(const Weight& lambda) const;

    /// X^lambda T_{w^{-1}} for dominant lambda.
    PieriExpansion expand_XT(const Weight& lambda, WeylElt w) const;
    /// X^lambda eps_{w^{-1}} for dominant lambda, in the T basis.
    PieriExpansion expand_Xeps(const Weight& lambda, WeylElt w) const;
    /// X^{-lambda} T_{w^{-1}} for dominant lambda, through the dual paths.
    PieriExpansion expand_negative(const Weight& lambda, WeylElt w) const;
    /// X^{w_0 mu} T_{w^{-1}} for dominant mu.
    PieriExpansion expand_w0(const Weight& mu, WeylElt w) const;

    /// Coefficients of [X^lambda][O_w] for lambda dominant or antidominant.
    std::map<WeylElt, GroupAlgElt> pieri_coeffs(const Weight& lambda, WeylElt w) const;

    /// X^mu [O_v] for arbitrary mu, splitting mu into dominant parts.
    KClass x_action(const Weight& mu, WeylElt v) const;
    XAction as_engine() const;

    /// 1 - e^{w_0 omega_i} [X^{-omega_i}].
    KClass codim_one_class(int i) const;
    /// Coefficients of [O_{w_0 s_i}][O_w].
    std::map<WeylElt, GroupAlgElt> monk_coeffs(int i, WeylElt w) const;

private:
    struct Model {
        std::unique_ptr<Crystal> crystal;
        std::vector<std::vector<WeylElt>> chains;  // coset of every segment, as minimal reps
    };
    const Model& model(const Weight& lambda) const;
    std::optional<WeylElt> chain_end(const std::vector<WeylElt>& chain, SimpleSet J, WeylElt w) const;
    std::vector<WeylElt> elements_below(WeylElt top) const;

    RootSystemPtr rs_;
    mutable std::mutex mutex_;
    mutable std::map<Weight, std::unique_ptr<Model>> models_;
};

}  // namespace kschubert
