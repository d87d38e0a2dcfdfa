#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "kschubert/graded.hpp"
#include "kschubert/positivity.hpp"
#include "kschubert/schubert.hpp"

namespace kschubert {

class PieriEngine;

/// alpha_{rs} or y_{rs}: the element r alpha_1 + s alpha_2 written in the
/// rank-two table notation.
struct TableSymbol {
    char kind = 'y';  // 'a' or 'y'
    int r = 0, s = 0;
    friend auto operator<=>(const TableSymbol&, const TableSymbol&) = default;
};

struct TableMonomial {
    Weight e, x;  // exponents of e^ and X^
    std::map<TableSymbol, int> symbols;
    std::optional<WeylElt> cls;  // a Schubert class [w], if present
    friend auto operator<=>(const TableMonomial&, const TableMonomial&) = default;
    friend bool operator==(const TableMonomial&, const TableMonomial&) = default;
};

/// Integer polynomial in the table notation; classes occur at most linearly.
class TableExpr {
public:
    using Terms = std::map<TableMonomial, Integer>;

    TableExpr() = default;
    static TableExpr constant(int rank, const Integer& c);
    static TableExpr monomial(const TableMonomial& m, const Integer& c = 1);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    void add_term(const TableMonomial& m, const Integer& c);
    bool has_classes() const;

    TableExpr& operator+=(const TableExpr& o);
    TableExpr& operator-=(const TableExpr& o);
    friend TableExpr operator+(TableExpr a, const TableExpr& b) { return a += b; }
    friend TableExpr operator-(TableExpr a, const TableExpr& b) { return a -= b; }
    /// Throws std::invalid_argument when two classes would multiply.
    friend TableExpr operator*(const TableExpr& a, const TableExpr& b);
    TableExpr operator-() const;
    friend bool operator==(const TableExpr&, const TableExpr&) = default;

private:
    Terms terms_;
};

/// num / den, den free of classes.
struct TableFraction {
    TableExpr num, den;
};

/// Parses one side of a displayed equation.  Braced groups \{ \} are kept or
/// dropped according to `keep_braces`.  Throws std::invalid_argument.
TableFraction parse_table_expr(const RootSystem& rs, const std::string& tex, bool keep_braces = true);

/// Rational weight expression such as "{1\over3}\alpha_1-s_2\omega_2";
/// omega coordinates.
std::vector<Rational> parse_weight_expr(const RootSystem& rs, const std::string& tex);

/// "[s_1s_2]", "1", "w_0", "s_2s_1".
WeylElt parse_word(const RootSystem& rs, const std::string& tex);

/// "[w][v]" or "[w]^2".
std::pair<WeylElt, WeylElt> product_lhs(const RootSystem& rs, const std::string& lhs);

/// Splits at top-level '=' signs.
std::vector<std::string> split_equation(const std::string& tex);

/// r alpha_1 + s alpha_2 in omega coordinates.
Weight table_root(const RootSystem& rs, int r, int s);

/// alpha_{rs} -> e^{-beta} - 1, y_{rs} -> e^{-beta}.
KClass evaluate_kt(const KTheory& kt, const TableExpr& f);
/// Coefficients of a class-linear expression, keyed by class (none -> w0).
std::map<WeylElt, TableExpr> class_coefficients(const RootSystem& rs, const TableExpr& f);
GroupAlgElt coefficient_kt(const RootSystem& rs, const TableExpr& c);
/// alpha -> 0, y -> 1, e -> 1.
Integer coefficient_k(const TableExpr& c);
/// alpha_{rs} -> -y_{beta} as a linear form, y -> 1.
Poly coefficient_ht(const RootSystem& rs, const TableExpr& c);
/// Certificate in the symbols a_beta, y_beta.  y_{rs} off the roots becomes a
/// product of root y's; nullopt for alpha_{rs} off the roots or if c involves
/// e or X.
std::optional<Certificate> to_certificate(const PositivityChecker& pc, const TableExpr& c);

/// A displayed line of a fixture file.
struct FixtureEntry {
    int line = 0;
    std::string kind;  // "weights", "bundle", "product"
    std::string tex;
};

struct Fixture {
    std::string system;
    std::vector<FixtureEntry> entries;
};

Fixture read_fixture(std::istream& in);
Fixture load_fixture(const std::string& path);
/// Path of the shipped fixture for a system, e.g. ".../A2.tex".
std::string fixture_path(const std::string& system);

struct EntryReport {
    int line = 0;
    std::string kind;
    std::string label;
    bool ok = false;
    /// Set for mismatches: the path-model and nil-Hecke computations agree.
    bool dual_confirmed = false;
    std::vector<std::string> notes;
};

struct TableReport {
    std::string system;
    std::vector<EntryReport> entries;
    /// Unordered pairs (w, v), neither w0, with no product entry.
    std::vector<std::pair<WeylElt, WeylElt>> missing;
    std::vector<std::pair<WeylElt, WeylElt>> duplicates;

    int count(const std::string& kind, bool ok) const;
    /// Every product matches or is a mismatch confirmed by both engines, and
    /// no product is missing.
    bool products_accounted() const;
    /// Same for line-bundle displays.
    bool bundles_accounted() const;
    std::string str() const;
};

struct VerifyOptions {
    bool weights = true;
    bool bundles = true;
    bool products = true;
};

TableReport verify_fixture(const Fixture& fx, const KTheory& kt, const GradedCohomology& hc,
                           const PieriEngine& paths, const VerifyOptions& opts = {});

/// Table coefficient ring.
enum class Ring { KT, K, HT, H };
Ring parse_ring(const std::string& name);
std::string to_string(Ring r);

/// c_{wv}^z for all unordered pairs w <= v (in elements() order).
struct ProductTable {
    std::string system;
    Ring ring = Ring::KT;
    std::map<std::tuple<WeylElt, WeylElt, WeylElt>, std::variant<GroupAlgElt, Poly>> rows;
    friend bool operator==(const ProductTable&, const ProductTable&) = default;
};

ProductTable compute_table(const KTheory& kt, const GradedCohomology* hc, Ring ring);
nlohmann::json table_to_json(const RootSystem& rs, const ProductTable& t);
ProductTable table_from_json(const RootSystem& rs, const nlohmann::json& j);

/// One product line in the table notation, e.g. "[s_1][s_2] = -\alpha_{11}[1]".
/// Coefficients are written through a positivity certificate when one is
/// found, otherwise as a Laurent polynomial in e.
std::string format_product(const KTheory& kt, const PositivityChecker& pc, WeylElt w, WeylElt v);
std::string tex_word(const RootSystem& rs, WeylElt w);

}  // namespace kschubert
