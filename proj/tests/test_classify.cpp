#include "catch_amalgamated.hpp"
#include "oracle.hpp"

#include "wph/classify.hpp"
#include "wph/verify.hpp"

#include <fstream>
#include <set>

using namespace wph;

using IV = std::vector<std::int64_t>;

namespace {

std::vector<IV> table1_golden() { return read_table1_file(std::filesystem::path(WPH_DATA_DIR) / "table1.expected"); }

} // namespace

TEST_CASE("monomial counts") {
    const auto w = make_weights({1, 5, 6, 8});
    CHECK(monomials_of_degree(w, 20, 0b0001) == 1);
    CHECK(monomials_of_degree(w, 20, 0b0110, SupportMode::Exact) == 0);
    CHECK(monomials_of_degree(w, 20, 0b0110, SupportMode::Closed) == 1);
    CHECK(monomials_of_degree(w, 0, 0b1111) == 1);
    CHECK(monomials_of_degree(w, 0, 0b0000) == 1);
    CHECK_THROWS_AS(monomials_of_degree(w, -1, 0b1111), Error);

    for (const auto& t : sample_tuples(40, 41)) {
        if (t.size() > 5) continue;
        const auto& ws = t.input_order();
        INFO(detail::join(ws));
        const auto all = all_coordinates(ws.size());
        for (std::uint32_t mask = 0; mask <= all; mask += 3) {
            const auto ref = oracle::monomials(ws, t.degree(), mask);
            CHECK(monomials_of_degree(t, t.degree(), mask) == ref.size());
            CHECK(has_monomial(ws, t.degree(), mask) == !ref.empty());
            std::uint64_t exact = 0;
            for (const auto& m : ref) {
                bool full = true;
                for (std::size_t i = 0; i < ws.size(); ++i)
                    if ((mask >> i) & 1U) full = full && m[i] > 0;
                exact += full;
            }
            CHECK(monomials_of_degree(t, t.degree(), mask, SupportMode::Exact) == exact);
        }
    }
}

TEST_CASE("general hypersurfaces") {
    CHECK(general_hypersurface_well_formed(HypersurfaceSpec(make_weights({1, 5, 6, 8}))));
    CHECK(general_hypersurface_well_formed(HypersurfaceSpec(make_weights({1, 1, 1, 1}))));
    CHECK(general_hypersurface_well_formed(HypersurfaceSpec(make_weights({1, 1, 2}), 2)));

    CHECK(general_hypersurface_quasismooth(HypersurfaceSpec(make_weights({1, 1, 1, 1}))).quasismooth);
    const auto bad = general_hypersurface_quasismooth(HypersurfaceSpec(make_weights({1, 5, 6, 8})));
    CHECK_FALSE(bad.quasismooth);
    CHECK(bad.witness.has_value());
    CHECK(general_hypersurface_quasismooth(HypersurfaceSpec(make_weights({1, 2, 3}))).quasismooth);

    CHECK_THROWS_AS(general_hypersurface_quasismooth(HypersurfaceSpec(make_weights({1, 1, 2}), 2)), Error);
    CHECK_THROWS_AS(HypersurfaceSpec(make_weights({1, 1}), 0), Error);

    for (const auto& t : sample_tuples(150, 42)) {
        if (t.size() > 5) continue;
        INFO(detail::join(t.input_order()));
        CHECK(general_hypersurface_quasismooth(HypersurfaceSpec(t)).quasismooth ==
              oracle::quasismooth(t.input_order(), t.degree()));
    }
}

TEST_CASE("classification tags") {
    auto r = classify_weights(make_weights({8, 6, 5, 1}));
    CHECK(r.tag == Tag::AdditionalNine);
    CHECK(r.hodge.counts == IV{1, 10, 1});
    CHECK(r.weights.input_order() == IV{1, 5, 6, 8});
    CHECK(classify_weights(make_weights({1, 1, 1, 1})).tag == Tag::Famous95);
    CHECK(classify_weights(make_weights({1, 1, 3})).tag == Tag::NonCanonical);
    CHECK(std::string(to_string(Tag::Famous95)) == "famous95");
}

TEST_CASE("enumeration at default bounds") {
    const auto recs = enumerate_canonical({});
    const auto s = summarize(recs);
    CHECK(s.canonical == 104);
    CHECK(s.quasismooth == 95);
    CHECK(s.additional == 9);
    CHECK(s.additional_weights == table1_golden());
    CHECK(s.line() == "104 canonical (95 quasismooth, 9 additional)");
    CHECK(std::is_sorted(recs.begin(), recs.end(), [](const auto& a, const auto& b) {
        return a.weights.weights() < b.weights.weights();
    }));
    // every canonical quadruple is independently canonical by the rational oracle
    for (const auto& r : recs) CHECK(oracle::age_counts(r.weights.weights()).front() == 1);

    SECTION("a smaller weight bound gives the corresponding sublist") {
        EnumerationBounds b;
        b.max_weight = 4;
        std::vector<IV> small, filtered;
        for (const auto& r : enumerate_canonical(b)) small.push_back(r.weights.weights());
        for (const auto& r : recs)
            if (r.weights.weights().back() <= 4) filtered.push_back(r.weights.weights());
        CHECK(small == filtered);
        CHECK_FALSE(small.empty());
    }
}

TEST_CASE("enumeration is independent of threads and pruning") {
    EnumerationBounds b;
    b.max_weight = 12;
    b.max_degree = 40;
    auto weights_of = [](const std::vector<ClassificationRecord>& rs) {
        std::vector<IV> out;
        for (const auto& r : rs) out.push_back(r.weights.weights());
        return out;
    };
    const auto one = weights_of(enumerate_canonical(b));
    b.jobs = 3;
    CHECK(weights_of(enumerate_canonical(b)) == one);
    b.jobs = 1;
    b.prune = false;
    CHECK(weights_of(enumerate_canonical(b)) == one);

    // brute force over all sorted well-formed quadruples
    std::vector<IV> brute;
    for (std::int64_t a = 1; a <= 12; ++a)
        for (std::int64_t c = a; c <= 12; ++c)
            for (std::int64_t e = c; e <= 12; ++e)
                for (std::int64_t f = e; f <= 12; ++f) {
                    const IV w{a, c, e, f};
                    if (a + c + e + f > 40 || !detail::well_formed(w)) continue;
                    if (oracle::age_counts(w).front() == 1) brute.push_back(w);
                }
    CHECK(one == brute);
}

TEST_CASE("surface enumeration") {
    EnumerationBounds b;
    b.dim = 2;
    std::set<IV> found;
    for (const auto& r : enumerate_canonical(b)) found.insert(r.weights.weights());
    CHECK(found.count({1, 1, 1}));
    CHECK(found.count({1, 1, 2}));
    CHECK(found.count({1, 2, 3}));
    CHECK_FALSE(found.count({1, 1, 3}));
    b.dim = 1;
    CHECK_THROWS_AS(enumerate_canonical(b), Error);
}

TEST_CASE("enumeration resource cap") {
    EnumerationBounds b;
    b.visit_limit = 1000;
    CHECK_THROWS_AS(enumerate_canonical(b), ResourceError);
    b.jobs = 2;
    CHECK_THROWS_AS(enumerate_canonical(b), ResourceError);
}
