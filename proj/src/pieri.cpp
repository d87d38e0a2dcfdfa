#include "kschubert/pieri.hpp"

#include <stdexcept>

namespace kschubert {

namespace {

void add(PieriExpansion& out, WeylElt z, const Weight& mu, const Integer& c) {
    auto key = std::make_pair(z, mu);
    auto it = out.find(key);
    if (it == out.end()) {
        if (c != 0) out.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) out.erase(it);
}

bool is_antidominant(const Weight& w) { return (-w).is_dominant(); }

}  // namespace

PieriExpansion to_expansion(const RootSystem& rs, const NilHeckeElt& x) {
    PieriExpansion out;
    for (const auto& [u, f] : x.terms()) {
        for (const auto& [mu, c] : f.terms()) {
            if (c.size() != 1 || c.terms().begin()->first != Weight(mu.rank()))
                throw std::invalid_argument("nil-Hecke element has coefficients outside Z");
            add(out, rs.inverse(u), mu, c.terms().begin()->second);
        }
    }
    return out;
}

NilHeckeElt from_expansion(const RootSystem& rs, const PieriExpansion& p) {
    NilHeckeElt out;
    for (const auto& [key, c] : p)
        out.add_term(rs.inverse(key.first), RXElt::term(GroupAlgElt::constant(key.second.rank(), c), key.second));
    return out;
}

KClass apply_to_identity(const PieriExpansion& p) {
    KClass out;
    for (const auto& [key, c] : p) out.add_term(key.first, GroupAlgElt::monomial(key.second, c));
    return out;
}

PieriEngine::PieriEngine(RootSystemPtr rs) : rs_(std::move(rs)) {}

const PieriEngine::Model& PieriEngine::model(const Weight& lambda) const {
    std::lock_guard lock(mutex_);
    auto it = models_.find(lambda);
    if (it != models_.end()) return *it->second;
    auto m = std::make_unique<Model>();
    m->crystal = std::make_unique<Crystal>(rs_, lambda);
    for (const auto& p : m->crystal->paths()) {
        std::vector<WeylElt> chain;
        for (const auto& s : p.segments()) chain.push_back(*rs_->min_element_mapping(lambda, s.direction));
        m->chains.push_back(std::move(chain));
    }
    return *models_.emplace(lambda, std::move(m)).first->second;
}

const Crystal& PieriEngine::crystal(const Weight& lambda) const { return *model(lambda).crystal; }

std::optional<WeylElt> PieriEngine::chain_end(const std::vector<WeylElt>& chain, SimpleSet J, WeylElt w) const {
    WeylElt cur = w;
    for (WeylElt c : chain) {
        auto next = rs_->max_rep_below(c, J, cur);
        if (!next) return std::nullopt;
        cur = *next;
    }
    return cur;
}

std::vector<WeylElt> PieriEngine::elements_below(WeylElt top) const {
    std::vector<WeylElt> out;
    for (WeylElt z : rs_->elements())
        if (rs_->bruhat_leq(z, top)) out.push_back(z);
    return out;
}

PieriExpansion PieriEngine::expand_XT(const Weight& lambda, WeylElt w) const {
    if (!lambda.is_dominant()) throw std::invalid_argument("expand_XT needs a dominant weight");
    const Model& m = model(lambda);
    const SimpleSet J = m.crystal->stabilizer();
    PieriExpansion out;
    for (std::size_t k = 0; k < m.crystal->size(); ++k) {
        const auto& d = m.crystal->data(k);
        if (!rs_->bruhat_leq(d.iota, w)) continue;
        auto end = chain_end(m.chains[k], J, w);
        if (!end) continue;
        add(out, *end, d.endpoint, 1);
    }
    return out;
}

PieriExpansion PieriEngine::expand_Xeps(const Weight& lambda, WeylElt w) const {
    if (!lambda.is_dominant()) throw std::invalid_argument("expand_Xeps needs a dominant weight");
    const Model& m = model(lambda);
    const SimpleSet J = m.crystal->stabilizer();
    const WeylElt w_min = rs_->min_rep(w, J);
    const WeylElt u_inv = rs_->multiply(rs_->inverse(w), w_min);
    PieriExpansion out;
    for (std::size_t k = 0; k < m.crystal->size(); ++k) {
        const auto& d = m.crystal->data(k);
        if (d.iota != w_min) continue;
        auto end = chain_end(m.chains[k], J, w_min);
        if (!end) continue;
        for (WeylElt z : elements_below(*end)) {
            const int sign = (rs_->length(w_min) + rs_->length(z)) % 2 == 0 ? 1 : -1;
            // eps_{u^{-1}} eps_{z^{-1}} = eps_y, and eps_y = sum_{v <= y} (-1)^l(v) T_v
            const WeylElt y = rs_->hecke_product(u_inv, rs_->inverse(z));
            for (WeylElt v : elements_below(rs_->inverse(y))) add(out, v, d.endpoint, sign * rs_->sign(v));
        }
    }
    return out;
}

PieriExpansion PieriEngine::expand_negative(const Weight& lambda, WeylElt w) const {
    if (!lambda.is_dominant()) throw std::invalid_argument("expand_negative needs a dominant weight");
    const Weight dual_shape = -rs_->act(rs_->longest(), lambda);
    const Model& m = model(dual_shape);
    const SimpleSet J = RootSystem::stabilizer_set(lambda);
    const WeylElt w_min = rs_->min_rep(w, J);
    const WeylElt u_inv = rs_->multiply(rs_->inverse(w), w_min);
    PieriExpansion out;
    for (const auto& q : m.crystal->paths()) {
        const LSPath p = q.dual();
        std::vector<WeylElt> chain;
        for (const auto& s : p.segments()) chain.push_back(*rs_->min_element_mapping(lambda, s.direction));
        if (chain.front() != w_min) continue;
        auto end = chain_end(chain, J, w_min);
        if (!end) continue;
        const Weight mu = q.endpoint();
        for (WeylElt z : elements_below(*end)) {
            const int sign = (rs_->length(w_min) + rs_->length(z)) % 2 == 0 ? 1 : -1;
            add(out, rs_->inverse(rs_->hecke_product(u_inv, rs_->inverse(z))), mu, sign);
        }
    }
    return out;
}

PieriExpansion PieriEngine::expand_w0(const Weight& mu, WeylElt w) const {
    if (!mu.is_dominant()) throw std::invalid_argument("expand_w0 needs a dominant weight");
    return expand_negative(-rs_->act(rs_->longest(), mu), w);
}

std::map<WeylElt, GroupAlgElt> PieriEngine::pieri_coeffs(const Weight& lambda, WeylElt w) const {
    PieriExpansion e;
    if (lambda.is_dominant()) {
        e = expand_XT(lambda, w);
    } else if (is_antidominant(lambda)) {
        e = expand_negative(-lambda, w);
    } else {
        throw std::invalid_argument("pieri_coeffs needs a dominant or antidominant weight");
    }
    const KClass k = apply_to_identity(e);
    return {k.terms().begin(), k.terms().end()};
}

KClass PieriEngine::x_action(const Weight& mu, WeylElt v) const {
    Weight plus(mu.rank()), minus(mu.rank());
    for (int i = 0; i < mu.rank(); ++i) {
        if (mu[i] > 0) plus[i] = mu[i];
        else minus[i] = -mu[i];
    }
    const KClass lowered = apply_to_identity(expand_negative(minus, v));
    KClass out;
    for (const auto& [z, c] : lowered.terms()) out += apply_to_identity(expand_XT(plus, z)) * c;
    return out;
}

XAction PieriEngine::as_engine() const {
    return [this](const Weight& mu, WeylElt v) { return x_action(mu, v); };
}

KClass PieriEngine::codim_one_class(int i) const {
    const int n = rs_->rank();
    if (i < 0 || i >= n) throw std::out_of_range("simple index out of range");
    const WeylElt w0 = rs_->longest();
    const Weight om = rs_->omega(i);
    KClass out = KClass::basis(w0, n);
    const GroupAlgElt shift = GroupAlgElt::monomial(rs_->act(w0, om), -1);
    for (const auto& [z, c] : pieri_coeffs(-om, w0)) out.add_term(z, c * shift);
    return out;
}

std::map<WeylElt, GroupAlgElt> PieriEngine::monk_coeffs(int i, WeylElt w) const {
    const int n = rs_->rank();
    if (i < 0 || i >= n) throw std::out_of_range("simple index out of range");
    const WeylElt w0 = rs_->longest();
    const Weight low = rs_->act(w0, rs_->omega(i));
    const Weight top = -low;
    const WeylElt ww0 = rs_->multiply(w, w0);
    KClass acc = KClass::basis(w, n);
    for (WeylElt z : rs_->elements()) {
        const auto coeffs = pieri_coeffs(top, rs_->multiply(z, w0));
        auto it = coeffs.find(ww0);
        if (it == coeffs.end()) continue;
        const GroupAlgElt& c = it->second;
        const int sign = (rs_->length(w) + rs_->length(z)) % 2 == 0 ? 1 : -1;
        acc.add_term(z, c.shifted(low) * Integer(-sign));
    }
    std::map<WeylElt, GroupAlgElt> out;
    for (const auto& [z, c] : acc.terms()) out.emplace(z, c);
    return out;
}

}  // namespace kschubert
