#pragma once

// Quotient presentations P = P(b_0, ..., b_n)/G of the simplicial toric variety
// Proj C[N cap I], the pencil and differential data of its anticanonical
// pencil, level-0 membership of monomials, and regeneration of the nine-row
// table of elliptic fibrations from golden data.

#include "wph/agecalc.hpp"
#include "wph/ehrhart.hpp"
#include "wph/error.hpp"
#include "wph/numeric.hpp"
#include "wph/smith.hpp"

#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace wph {

using Exponents = std::vector<std::int64_t>;

/// b_i = hcf(w_i, d), d_i = d/b_i, u_i = w_i/b_i, all in input order.
struct QuotientPresentation {
    WeightTuple weights;
    Exponents b;
    Exponents d;
    Exponents u;
    std::int64_t group_order = 1;
    Exponents invariant_factors;
    /// Exponents of a generator acting by z_i -> zeta^{a_i} z_i, zeta a
    /// primitive |G|-th root of unity. Empty unless G is cyclic and nontrivial.
    Exponents action_weights;

    bool cyclic() const noexcept { return invariant_factors.size() <= 1; }
};

namespace detail {

/// Lexicographically smallest exponent vector in [0, g)^m acting as an
/// element of order g in G, or empty if the search is out of range.
inline Exponents cyclic_action(const QuotientPresentation& q, std::uint64_t search_limit) {
    const std::int64_t g = q.group_order;
    const std::int64_t deg = q.weights.degree();
    const std::size_t m = q.b.size();

    std::vector<std::int64_t> step(m);
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < m; ++i) {
        step[i] = g / std::gcd(g, q.d[i]);
        space *= static_cast<std::uint64_t>(g / step[i]);
        if (space > search_limit) return {};
    }

    // diagonal C^* elements of order dividing g, written as exponent vectors
    std::set<Exponents> diagonal;
    for (std::int64_t s = 0; s < deg; ++s) {
        Exponents a(m);
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            const std::int64_t num = s * q.b[i] * g;
            ok = num % deg == 0;
            a[i] = ok ? mod_floor(num / deg, g) : 0;
        }
        if (ok) diagonal.insert(a);
    }

    auto order = [&](const Exponents& a) {
        Exponents t(m);
        for (std::int64_t k = 1; k <= g; ++k) {
            for (std::size_t i = 0; i < m; ++i) t[i] = (k * a[i]) % g;
            if (diagonal.count(t)) return k;
        }
        return g;
    };

    Exponents a(m, 0);
    Exponents found;
    auto rec = [&](auto&& self, std::size_t i, std::int64_t usum) -> bool {
        if (i == m) {
            if (usum % g != 0 || order(a) != g) return false;
            found = a;
            return true;
        }
        for (std::int64_t x = 0; x < g; x += step[i]) {
            a[i] = x;
            if (self(self, i + 1, usum + q.u[i] * x)) return true;
        }
        a[i] = 0;
        return false;
    };
    rec(rec, 0, 0);
    return found;
}

} // namespace detail

/// G = {x in prod Z/d_i : sum w_i x_i = 0 mod d} / diagonal, computed as the
/// Smith normal form of Z^{n+1}-relations inside the congruence lattice.
inline QuotientPresentation quotient_presentation(const WeightTuple& w) {
    QuotientPresentation q;
    q.weights = w;
    const auto deg = w.degree();
    BigInt prod = 1;
    for (auto wi : w.input_order()) {
        const auto bi = std::gcd(wi, deg);
        q.b.push_back(bi);
        q.d.push_back(deg / bi);
        q.u.push_back(wi / bi);
        prod *= deg / bi;
    }
    const BigInt dd = BigInt(deg) * deg;
    if (prod % dd != 0) throw Error(ErrorKind::Degree, "prod d_i is not divisible by d^2");
    q.group_order = static_cast<std::int64_t>(prod / dd);

    const std::size_t m = q.b.size();
    std::vector<BigInt> c;
    for (auto wi : w.input_order()) c.emplace_back(wi);
    const auto basis = congruence_lattice_basis(c, BigInt(deg));

    std::vector<std::vector<BigInt>> generators;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<BigInt> g(m, BigInt(0));
        g[i] = q.d[i];
        generators.push_back(std::move(g));
    }
    generators.emplace_back(m, BigInt(1));

    IntMatrix rel(m, std::vector<BigInt>(generators.size()));
    for (std::size_t j = 0; j < generators.size(); ++j) {
        const auto y = solve_integral(basis, generators[j]);
        if (!y) throw Error(ErrorKind::Degree, "relation outside the congruence lattice");
        for (std::size_t i = 0; i < m; ++i) rel[i][j] = (*y)[i];
    }
    BigInt order = 1;
    for (const auto& s : smith_diagonal(rel)) {
        order *= s;
        if (s != 1) q.invariant_factors.push_back(static_cast<std::int64_t>(s));
    }
    if (order != q.group_order)
        throw Error(ErrorKind::Degree, "Smith normal form order " + order.str() +
                                           " disagrees with prod d_i / d^2");
    if (q.invariant_factors.size() == 1) q.action_weights = detail::cyclic_action(q, 10'000'000);
    return q;
}

/// Weighted degree of a z-monomial in P(b_0, ..., b_n).
inline std::int64_t ambient_degree(const QuotientPresentation& q, const Exponents& z) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < z.size(); ++i) s += z[i] * q.b[i];
    return s;
}

struct Membership {
    bool member = false;
    Rational level;
    std::optional<std::int64_t> witness;  // k with v = k e mod Z^{n+1}
};

/// The z-monomial prod z_i^{x_i} is the vector sum (x_i/d_i) e_i; tests whether
/// it lies in N.
inline Membership monomial_in_N(const WeightTuple& w, const Exponents& z) {
    const auto& ws = w.input_order();
    if (z.size() != ws.size())
        throw Error(ErrorKind::Range, "exponent vector length does not match the weights");
    const auto deg = w.degree();
    Membership r;
    std::vector<std::int64_t> di, ui;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        const auto bi = std::gcd(ws[i], deg);
        di.push_back(deg / bi);
        ui.push_back(ws[i] / bi);
        r.level += Rational(z[i], deg / bi);
    }
    // x_i/d_i = k w_i/d mod 1  <=>  k u_i = x_i mod d_i
    for (std::int64_t k = 0; k < deg && !r.witness; ++k) {
        bool ok = true;
        for (std::size_t i = 0; i < ws.size() && ok; ++i) ok = mod_floor(k * ui[i] - z[i], di[i]) == 0;
        if (ok) r.witness = k;
    }
    r.member = r.witness.has_value();
    return r;
}

/// One row of the elliptic-fibration table.
struct TableRow {
    QuotientPresentation presentation;
    std::vector<Exponents> f_exponents;  // z_i^{d_i} for each i, then prod z_i^{u_i}
    Exponents omega_numerator;           // prod z_i^{u_i - 1}
    std::optional<Exponents> fibration;
};

inline TableRow table_row(const WeightTuple& w, std::optional<Exponents> fibration = std::nullopt) {
    TableRow row;
    row.presentation = quotient_presentation(w);
    const auto& q = row.presentation;
    const std::size_t m = q.b.size();
    const auto deg = w.degree();
    for (std::size_t i = 0; i < m; ++i) {
        Exponents e(m, 0);
        e[i] = q.d[i];
        row.f_exponents.push_back(std::move(e));
    }
    row.f_exponents.push_back(q.u);
    for (auto ui : q.u) row.omega_numerator.push_back(ui - 1);

    for (const auto& e : row.f_exponents)
        if (ambient_degree(q, e) != deg) throw Error(ErrorKind::Degree, "pencil monomial has wrong degree");
    std::int64_t bsum = 0;
    for (auto bi : q.b) bsum += bi;
    if (ambient_degree(q, row.omega_numerator) != deg - bsum)
        throw Error(ErrorKind::Degree, "differential numerator has wrong degree");
    const auto pencil = monomial_in_N(w, q.u);
    if (!pencil.member || pencil.level != 1 || pencil.witness != 1)
        throw Error(ErrorKind::Degree, "pencil monomial is not e");

    if (fibration) {
        const auto mem = monomial_in_N(w, *fibration);
        if (!mem.member || mem.level != 0)
            throw Error(ErrorKind::Degree, "fibration monomial is not a level-0 element of N");
        row.fibration = std::move(fibration);
    }
    return row;
}

/// Interior lattice points of the level-1 polygon of the facet z_i = 0, which
/// is the genus of the general pencil member's section there (the section is
/// Newton-regular for a general member).
inline std::int64_t facet_curve_genus(const WeightTuple& w, std::size_t i) {
    if (w.dim() != 3) throw Error(ErrorKind::Dimension, "facet curves are defined for surfaces (n = 3)");
    if (i > 3) throw Error(ErrorKind::Range, "coordinate index out of range");
    const LatticeContext ctx(w);
    const SimplexFace facet{SimplexFace::full(4).vertices & ~(1U << i)};
    return strict_count(ctx, facet, 1);
}

// ---------------------------------------------------------------------------
// Golden records

/// One record of table2.expected.
struct Table2Record {
    Exponents weights;
    Exponents ambient;
    std::int64_t group_order = 0;
    Exponents invariant_factors;
    std::vector<Exponents> f;
    Exponents omega;
    Exponents fibration;

    friend bool operator==(const Table2Record&, const Table2Record&) = default;
};

namespace detail {

inline std::string join(const Exponents& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

inline std::string join_rows(const std::vector<Exponents>& rows) {
    std::string s;
    for (std::size_t i = 0; i < rows.size(); ++i) s += (i ? ";" : "") + join(rows[i]);
    return s;
}

inline Exponents split_ints(const std::string& text, std::size_t line) {
    Exponents out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": bad integer '" + item + "'");
        }
    }
    return out;
}

} // namespace detail

inline std::string serialize(const Table2Record& r) {
    using detail::join;
    std::string s;
    s += "weights=" + join(r.weights) + "\n";
    s += "ambient=" + join(r.ambient) + "\n";
    s += "group_order=" + std::to_string(r.group_order) + "\n";
    s += "invariant_factors=" + join(r.invariant_factors) + "\n";
    s += "f=" + detail::join_rows(r.f) + "\n";
    s += "omega=" + join(r.omega) + "\n";
    s += "fibration=" + join(r.fibration) + "\n";
    return s;
}

inline std::string serialize_table2(const std::vector<Table2Record>& records) {
    std::string s;
    for (std::size_t i = 0; i < records.size(); ++i)
        s += (i ? "\n" : "") + std::string("[row ") + std::to_string(i + 1) + "]\n" + serialize(records[i]);
    return s;
}

/// Parses the line-oriented key=value format written by serialize_table2.
/// Blank lines and lines starting with '#' are ignored.
inline std::vector<Table2Record> parse_table2(std::istream& in) {
    std::vector<Table2Record> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("[row ", 0) == 0) {
            out.emplace_back();
            continue;
        }
        if (out.empty()) throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": data before [row]");
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected key=value");
        const auto key = line.substr(0, eq);
        const auto value = line.substr(eq + 1);
        auto& r = out.back();
        if (key == "weights") r.weights = detail::split_ints(value, lineno);
        else if (key == "ambient") r.ambient = detail::split_ints(value, lineno);
        else if (key == "group_order") {
            const auto v = detail::split_ints(value, lineno);
            if (v.size() != 1) throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": group_order");
            r.group_order = v[0];
        } else if (key == "invariant_factors") r.invariant_factors = detail::split_ints(value, lineno);
        else if (key == "f") {
            std::stringstream ss(value);
            std::string part;
            while (std::getline(ss, part, ';')) r.f.push_back(detail::split_ints(part, lineno));
        } else if (key == "omega") r.omega = detail::split_ints(value, lineno);
        else if (key == "fibration") r.fibration = detail::split_ints(value, lineno);
        else throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    return out;
}

/// The golden-format record regenerated from the weights (fibration copied in).
inline Table2Record regenerate(const TableRow& row) {
    Table2Record r;
    const auto& q = row.presentation;
    r.weights = q.weights.input_order();
    r.ambient = q.b;
    r.group_order = q.group_order;
    r.invariant_factors = q.invariant_factors;
    r.f = row.f_exponents;
    r.omega = row.omega_numerator;
    if (row.fibration) r.fibration = *row.fibration;
    return r;
}

struct Table2RowReport {
    Exponents weights;
    Table2Record regenerated;
    Exponents action_weights;
    Rational fibration_level;
    std::int64_t fibration_witness = -1;
    std::vector<std::int64_t> facet_genus;  // i = 0..3
};

/// Regenerates every golden row and compares column by column. Throws
/// MismatchError (row numbers are 1-based) on the first divergence or an
/// invalid fibration monomial.
inline std::vector<Table2RowReport> validate_table2(const std::vector<Table2Record>& golden) {
    std::vector<Table2RowReport> out;
    for (std::size_t idx = 0; idx < golden.size(); ++idx) {
        const auto& g = golden[idx];
        const std::size_t rowno = idx + 1;
        WeightTuple w;
        try {
            w = make_weights(g.weights);
        } catch (const Error& e) {
            throw MismatchError(rowno, "weights", e.what());
        }
        const auto row = table_row(w);
        auto regen = regenerate(row);
        regen.fibration = g.fibration;

        auto check = [&](const char* column, const std::string& have, const std::string& want) {
            if (have != want) throw MismatchError(rowno, column, "computed '" + have + "', golden '" + want + "'");
        };
        check("ambient", detail::join(regen.ambient), detail::join(g.ambient));
        check("group_order", std::to_string(regen.group_order), std::to_string(g.group_order));
        check("invariant_factors", detail::join(regen.invariant_factors), detail::join(g.invariant_factors));
        check("f", detail::join_rows(regen.f), detail::join_rows(g.f));
        check("omega", detail::join(regen.omega), detail::join(g.omega));
        check("record", serialize(regen), serialize(g));

        const auto mem = monomial_in_N(w, g.fibration);
        if (!mem.member || mem.level != 0)
            throw MismatchError(rowno, "fibration",
                                "monomial " + detail::join(g.fibration) + " has level " + render(mem.level) +
                                    (mem.member ? "" : " and is not in N"));

        Table2RowReport rep;
        rep.weights = g.weights;
        rep.regenerated = regen;
        rep.action_weights = row.presentation.action_weights;
        rep.fibration_level = mem.level;
        rep.fibration_witness = *mem.witness;
        if (w.dim() == 3)
            for (std::size_t i = 0; i < 4; ++i) rep.facet_genus.push_back(facet_curve_genus(w, i));
        out.push_back(std::move(rep));
    }
    return out;
}

} // namespace wph
