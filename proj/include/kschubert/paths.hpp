#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kschubert/root_system.hpp"

namespace kschubert {

struct Segment {
    Weight direction;
    Rational length;

    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Piecewise-linear path from the origin, stored as normalized segments
/// (no zero lengths, adjacent directions distinct, lengths summing to 1).
class LSPath {
public:
    LSPath() = default;
    explicit LSPath(std::vector<Segment> segments);
    static LSPath straight(const Weight& lambda);

    const std::vector<Segment>& segments() const { return segs_; }
    const Weight& first_direction() const { return segs_.front().direction; }
    const Weight& last_direction() const { return segs_.back().direction; }

    std::vector<Rational> endpoint_rational() const;
    /// p(1); throws std::logic_error if it is not integral.
    Weight endpoint() const;

    std::optional<LSPath> f(const RootSystem& rs, int i) const;
    std::optional<LSPath> e(const RootSystem& rs, int i) const;
    /// Reversed path with negated directions, translated to start at 0.
    LSPath dual() const;

    friend bool operator==(const LSPath&, const LSPath&) = default;
    friend bool operator<(const LSPath& a, const LSPath& b);

    std::string str() const;

private:
    void normalize();
    std::vector<Segment> segs_;
};

struct PathData {
    Weight endpoint;
    WeylElt iota;  // minimal coset representative
    WeylElt phi;   // minimal coset representative
};

class Crystal {
public:
    Crystal(RootSystemPtr rs, const Weight& lambda);

    const Weight& shape() const { return lambda_; }
    SimpleSet stabilizer() const { return J_; }
    const std::vector<LSPath>& paths() const { return paths_; }
    const PathData& data(std::size_t k) const { return data_[k]; }
    std::size_t size() const { return paths_.size(); }
    std::size_t index_of(const LSPath& p) const;

private:
    RootSystemPtr rs_;
    Weight lambda_;
    SimpleSet J_ = 0;
    std::vector<LSPath> paths_;
    std::vector<PathData> data_;
};

/// Endpoint and the initial and final directions as minimal coset
/// representatives in W/W_lambda.
PathData endpoints_and_directions(const RootSystem& rs, const Weight& lambda, const LSPath& p);

std::vector<LSPath> i_string(const RootSystem& rs, const LSPath& head, int i);

/// Checks the LS form: directions in W lambda with a strictly decreasing
/// coset chain, and an integral endpoint.
bool is_valid_ls_path(const RootSystem& rs, const Weight& lambda, const LSPath& p);

}  // namespace kschubert
