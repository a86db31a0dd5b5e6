#include "catch_amalgamated.hpp"
#include "oracle.hpp"

#include "wph/hyperg.hpp"
#include "wph/verify.hpp"

using namespace wph;

namespace {

ParamMultiset params(std::initializer_list<std::pair<int, int>> xs) {
    std::vector<Rational> v;
    for (auto [p, q] : xs) v.emplace_back(p, q);
    return ParamMultiset(v);
}

std::vector<std::string> text(const ParamMultiset& s) {
    std::vector<std::string> out;
    for (const auto& q : s.entries()) out.push_back(render(q));
    return out;
}

using S = std::vector<std::string>;

oracle::V to_v(const Polynomial& p) {
    oracle::V out;
    for (const auto& c : p) out.push_back(static_cast<std::int64_t>(c));
    return out;
}

} // namespace

TEST_CASE("parameter multisets") {
    auto s = build_parameter_sets(make_weights({1, 1, 3}));
    CHECK(text(s.a) == S{"0/1", "0/1", "0/1", "1/3", "2/3"});
    CHECK(text(s.b) == S{"0/1", "1/5", "2/5", "3/5", "4/5"});

    s = build_parameter_sets(make_weights({1, 1, 1, 1}));
    CHECK(text(s.a) == S{"0/1", "0/1", "0/1", "0/1"});
    CHECK(text(s.b) == S{"0/1", "1/4", "1/2", "3/4"});

    // (1,2) fails well-formedness (omitting w_0 leaves 2)
    CHECK_THROWS_AS(make_weights({1, 2}), WellFormednessError);

    CHECK_THROWS_AS(ParamMultiset({Rational(1)}), Error);
    CHECK_THROWS_AS(ParamMultiset({Rational(-1, 2)}), Error);
    CHECK(params({{1, 3}, {2, 3}}).conjugation_stable());
    CHECK_FALSE(params({{1, 3}}).conjugation_stable());
}

TEST_CASE("cancellation") {
    auto s = build_parameter_sets(make_weights({1, 1, 3}));
    auto c = cancel(s.a, s.b);
    CHECK(text(c.alphas) == S{"0/1", "0/1", "1/3", "2/3"});
    CHECK(text(c.betas) == S{"1/5", "2/5", "3/5", "4/5"});
    CHECK(c.common.size() == 1);

    const auto w = make_weights({1, 5, 6, 8});
    s = build_parameter_sets(w);
    c = cancel(s.a, s.b);
    CHECK(text(c.common) == S{"0/1", "1/5", "1/4", "2/5", "1/2", "3/5", "3/4", "4/5"});
    CHECK(operator_forms(w).reduced.degree() == 12);

    const auto same = params({{0, 1}, {1, 2}});
    c = cancel(same, same);
    CHECK(c.alphas.empty());
    CHECK(c.betas.empty());
    CHECK(c.common.size() == 2);
}

TEST_CASE("reduced operators expand as the symbolic oracle says") {
    // D^3 - 4t(4D+1)(4D+2)(4D+3)
    auto ops = operator_forms(make_weights({1, 1, 1, 1}));
    CHECK(to_v(ops.reduced.expanded_left) == oracle::V{0, 0, 0, 1});
    auto right = oracle::poly_mul(oracle::poly_mul(oracle::V{1, 4}, oracle::V{2, 4}), oracle::V{3, 4});
    for (auto& x : right) x *= 4;
    CHECK(to_v(ops.reduced.expanded_right) == right);
    CHECK(expanded_text(ops.reduced) == "D^3 - t*(256*D^3 + 384*D^2 + 176*D + 24)");
    CHECK(factored_text(ops.reduced) == "D*D*D - t*4*(4*D + 1)*(4*D + 2)*(4*D + 3)");
    // unreduced: D^4 - t*4D(4D+1)(4D+2)(4D+3)
    auto full = oracle::poly_mul(right, oracle::V{0, 1});
    CHECK(to_v(ops.full.expanded_left) == oracle::V{0, 0, 0, 0, 1});
    CHECK(to_v(ops.full.expanded_right) == full);

    // D^2 - 3t(3D+1)(3D+2)
    ops = operator_forms(make_weights({1, 1, 1}));
    CHECK(to_v(ops.reduced.expanded_left) == oracle::V{0, 0, 1});
    right = oracle::poly_mul(oracle::V{1, 3}, oracle::V{2, 3});
    for (auto& x : right) x *= 3;
    CHECK(to_v(ops.reduced.expanded_right) == right);
}

TEST_CASE("operator degree equals the strict rank") {
    for (const auto& w : sample_tuples(200, 21)) {
        INFO(detail::join(w.weights()));
        const auto ops = operator_forms(w);
        CHECK(static_cast<std::int64_t>(ops.reduced.degree()) == age_spectrum(w).rank);
        CHECK(ops.full.degree() == static_cast<std::size_t>(w.degree()));
        CHECK(ops.reduced.left.size() == ops.reduced.right.size());
    }
}

TEST_CASE("p-profiles") {
    auto h = conjecture_hodge(params({{0, 1}, {0, 1}, {1, 3}, {2, 3}}), params({{1, 5}, {2, 5}, {3, 5}, {4, 5}}));
    CHECK(h.p_values == std::vector<std::int64_t>{2, 2, 1, 1});
    CHECK(h.weight == 1);
    CHECK(h.hodge == std::vector<std::int64_t>{2, 2});

    h = conjecture_hodge(params({{0, 1}, {0, 1}, {0, 1}}), params({{1, 4}, {1, 2}, {3, 4}}));
    CHECK(h.p_values == std::vector<std::int64_t>{3, 2, 1});
    CHECK(h.weight == 2);
    CHECK(h.hodge == std::vector<std::int64_t>{1, 1, 1});
    CHECK(h.conjectural);

    h = conjecture_hodge(params({{0, 1}}), params({{1, 2}}));
    CHECK(h.p_values == std::vector<std::int64_t>{1});
    CHECK(h.weight == 0);
    CHECK(h.hodge == std::vector<std::int64_t>{1});

    SECTION("index origin shifts p but not the Hodge vector") {
        const auto a = params({{0, 1}, {0, 1}, {1, 3}, {2, 3}});
        const auto b = params({{1, 5}, {2, 5}, {3, 5}, {4, 5}});
        const auto h1 = conjecture_hodge(a, b, 1);
        CHECK(h1.p_values == std::vector<std::int64_t>{1, 1, 0, 0});
        CHECK(h1.hodge == conjecture_hodge(a, b).hodge);
    }
    SECTION("errors") {
        CHECK_THROWS_MATCHES(conjecture_hodge(params({{0, 1}}), params({{0, 1}})), Error,
                             Catch::Matchers::Predicate<Error>([](const Error& e) {
                                 return e.kind() == ErrorKind::Overlap;
                             }));
        CHECK_THROWS_MATCHES(conjecture_hodge(params({{1, 3}}), params({{1, 2}})), Error,
                             Catch::Matchers::Predicate<Error>([](const Error& e) {
                                 return e.kind() == ErrorKind::Conjugation;
                             }));
        CHECK_THROWS_AS(conjecture_hodge(params({{0, 1}}), params({{1, 3}, {2, 3}})), Error);
        CHECK_THROWS_AS(conjecture_hodge(ParamMultiset{}, ParamMultiset{}), Error);
    }
}

TEST_CASE("parameter side reproduces the age spectrum") {
    for (auto w : {make_weights({1, 5, 6, 8}), make_weights({1, 1, 3}), make_weights({1, 2, 3})}) {
        const auto r = verify_proposition(w);
        CHECK(r.holds);
        CHECK(r.from_parameters == r.from_ages);
        CHECK_FALSE(r.profile.conjectural);
    }
    CHECK(verify_proposition(make_weights({1, 5, 6, 8})).from_ages == std::vector<std::int64_t>{1, 10, 1});
    CHECK(verify_proposition(make_weights({1, 1, 3})).from_ages == std::vector<std::int64_t>{2, 2});
    CHECK(verify_proposition(make_weights({1, 2, 3})).from_ages == std::vector<std::int64_t>{1, 1});

    for (const auto& w : sample_tuples(300, 22)) {
        INFO(detail::join(w.weights()));
        const auto r = verify_proposition(w);
        CHECK(r.holds);
        CHECK(r.from_parameters == oracle::age_counts(w.weights()));
        // betas are the strict residues k/d in ascending order; p + age = n + 1 on each
        const auto n1 = static_cast<std::int64_t>(w.size());
        std::vector<std::int64_t> from_p, from_age;
        for (auto p : r.profile.p_values) from_p.push_back(n1 - p);
        for (auto k : age_spectrum(w).strict_residues) from_age.push_back(box_element(w, k).age);
        CHECK(from_p == from_age);
    }
}
