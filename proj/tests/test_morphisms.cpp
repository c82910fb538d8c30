/* test_morphisms.cpp -- continuity criteria, open/closed maps,
 * homeomorphisms, composition.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "mftop/morphisms.hpp"

using namespace mftop;
using testutil::fixture_tau;
using testutil::minimal_tau;
using testutil::mk;
using testutil::shape_ab;
using testutil::shape_y;

namespace {

SpaceMap swap_map(const MultiFuzzyTopology& t) {
    return SpaceMap(PointMap(t.shape().universe, t.shape().universe,
                             std::vector<std::size_t>{1, 0}),
                    t, t);
}

const std::vector<ContinuityCriterion> kAllCriteria = {
    ContinuityCriterion::OpenPreimage, ContinuityCriterion::ClosedPreimage,
    ContinuityCriterion::NbdPullback, ContinuityCriterion::NbdWitness};

} // namespace

TEST_CASE("identity maps are continuous under every criterion") {
    for (const MultiFuzzyTopology& t : {fixture_tau(), minimal_tau()}) {
        const SpaceMap id = identity_map(t);
        CHECK(is_continuous(id));
        for (auto c : kAllCriteria) CHECK(is_continuous_via(id, c));
        CHECK(is_open_map(id));
        CHECK(is_closed_map(id));
        CHECK(is_homeomorphism(id));
    }
}

TEST_CASE("constant maps between Lowen spaces are continuous") {
    const MultiFuzzyTopology tau = fixture_tau();
    const MultiFuzzyTopology nu = minimal_tau();
    const SpaceMap c(PointMap::constant(tau.shape().universe, nu.shape().universe, "a"),
                     tau, nu);
    CHECK(is_continuous(c));
    for (auto crit : kAllCriteria) CHECK(is_continuous_via(c, crit));
    // preimage of an open is the matching constant (or the null set)
    for (const MultiFuzzySet& open : nu.opens()) {
        const MultiFuzzySet pre = preimage(c.map(), open);
        bool is_const = true;
        for (std::size_t p = 1; p < pre.shape().universe.size(); ++p) {
            auto t0 = pre.tuple_at(0);
            auto tp = pre.tuple_at(p);
            if (!std::equal(t0.begin(), t0.end(), tp.begin())) is_const = false;
        }
        CHECK(is_const);
    }
}

TEST_CASE("the swap map on the fixture is discontinuous under all four criteria") {
    const MultiFuzzyTopology tau = fixture_tau();
    const SpaceMap s = swap_map(tau);
    // preimage(swap, U) = [a:1/2, b:1], not open in tau
    CHECK(preimage(s.map(), mk(tau.shape(), {2, 1})) == mk(tau.shape(), {1, 2}));
    for (auto c : kAllCriteria) CHECK_FALSE(is_continuous_via(s, c));
    CHECK_FALSE(is_homeomorphism(s));
}

TEST_CASE("criteria agree on seeded random maps") {
    Rng rng(11);
    for (int rep = 0; rep < 60; ++rep) {
        std::uniform_int_distribution<std::size_t> np(1, 2);
        std::uniform_int_distribution<std::uint32_t> nd(1, 2), dd(1, 2);
        const std::uint32_t dim = nd(rng), den = dd(rng);
        const SpaceShape sx = make_shape(synthetic_universe(np(rng)), dim, den);
        const SpaceShape sy = make_shape(synthetic_universe(np(rng)), dim, den);
        const MultiFuzzyTopology tx = random_topology(rng, sx);
        const MultiFuzzyTopology ty = random_topology(rng, sy);
        const SpaceMap m(random_point_map(rng, sx.universe, sy.universe), tx, ty);
        const bool base = is_continuous_via(m, kAllCriteria.front());
        for (auto c : kAllCriteria) CHECK(is_continuous_via(m, c) == base);
    }
}

TEST_CASE("collapse map is open; singleton inclusion is not") {
    const MultiFuzzyTopology tau = fixture_tau();
    const MultiFuzzyTopology tau_y = generate(shape_y(), {});
    const SpaceMap collapse(
        PointMap::constant(tau.shape().universe, tau_y.shape().universe, "y"), tau, tau_y);
    CHECK(is_open_map(collapse));
    CHECK(is_continuous(collapse));

    const SpaceShape sa = make_shape(Universe({"a"}), 1, 2);
    const MultiFuzzyTopology ta = generate(sa, {});
    const MultiFuzzyTopology tab = minimal_tau();
    const SpaceMap inclusion(
        PointMap(sa.universe, tab.shape().universe, std::vector<std::size_t>{0}), ta, tab);
    // image(C-half on {a}) = [a:1/2, b:0] is not open in the minimal topology
    CHECK(image(inclusion.map(), mk(sa, {1})) == mk(tab.shape(), {1, 0}));
    CHECK_FALSE(is_open_map(inclusion));
}

TEST_CASE("closed maps") {
    const MultiFuzzyTopology tau = fixture_tau();
    CHECK(is_closed_map(identity_map(tau)));
    // swap is not closed on the asymmetric fixture
    CHECK_FALSE(is_closed_map(swap_map(tau)));
}

TEST_CASE("homeomorphism on a swap-symmetric topology") {
    const SpaceShape s = shape_ab();
    const MultiFuzzyTopology sym = generate(s, {mk(s, {2, 1}), mk(s, {1, 2})});
    // closure adds C-half (meet) and C-one (join)
    CHECK(sym.opens().size() == 5);
    const SpaceMap swp = swap_map(sym);
    CHECK(is_homeomorphism(swp));
    CHECK(is_continuous(inverse(swp)));
}

TEST_CASE("homeomorphism requires bijectivity") {
    const MultiFuzzyTopology tau = fixture_tau();
    const MultiFuzzyTopology tau_y = generate(shape_y(), {});
    const SpaceMap collapse(
        PointMap::constant(tau.shape().universe, tau_y.shape().universe, "y"), tau, tau_y);
    CHECK_FALSE(is_homeomorphism(collapse));
}

TEST_CASE("both-ways continuity equals continuous-and-open for bijections") {
    Rng rng(12);
    for (int rep = 0; rep < 60; ++rep) {
        std::uniform_int_distribution<std::uint32_t> dd(1, 3);
        const SpaceShape s = make_shape(synthetic_universe(2), 1, dd(rng));
        const MultiFuzzyTopology tx = random_topology(rng, s);
        const MultiFuzzyTopology ty = random_topology(rng, s);
        const std::vector<std::size_t> perm = rep % 2 ? std::vector<std::size_t>{1, 0}
                                                      : std::vector<std::size_t>{0, 1};
        const SpaceMap m(PointMap(s.universe, s.universe, perm), tx, ty);
        const bool both = is_continuous(m) && is_continuous(inverse(m));
        const bool open_and_cont = is_continuous(m) && is_open_map(m);
        CHECK(both == open_and_cont);
    }
}

TEST_CASE("composition preserves continuity and openness") {
    Rng rng(13);
    int continuous_pairs = 0;
    for (int rep = 0; rep < 80; ++rep) {
        std::uniform_int_distribution<std::size_t> np(1, 2);
        std::uniform_int_distribution<std::uint32_t> dd(1, 2);
        const std::uint32_t den = dd(rng);
        const SpaceShape sx = make_shape(synthetic_universe(np(rng)), 1, den);
        const SpaceShape sy = make_shape(synthetic_universe(np(rng)), 1, den);
        const SpaceShape sz = make_shape(synthetic_universe(np(rng)), 1, den);
        const MultiFuzzyTopology tx = random_topology(rng, sx);
        const MultiFuzzyTopology ty = random_topology(rng, sy);
        const MultiFuzzyTopology tz = random_topology(rng, sz);
        const SpaceMap f(random_point_map(rng, sx.universe, sy.universe), tx, ty);
        const SpaceMap g(random_point_map(rng, sy.universe, sz.universe), ty, tz);
        const SpaceMap gf = compose(f, g);
        if (is_continuous(f) && is_continuous(g)) {
            ++continuous_pairs;
            CHECK(is_continuous(gf));
        }
        if (is_open_map(f) && is_open_map(g)) CHECK(is_open_map(gf));
        // contravariance of preimage under composition
        for (const MultiFuzzySet& open : tz.opens())
            CHECK(preimage(gf.map(), open) == preimage(f.map(), preimage(g.map(), open)));
    }
    CHECK(continuous_pairs > 0); // the hypothesis fired
}

TEST_CASE("compose with identity and space mismatch") {
    const MultiFuzzyTopology tau = fixture_tau();
    const SpaceMap id = identity_map(tau);
    const SpaceMap swp = swap_map(tau);
    CHECK(compose(id, swp) == swp);
    CHECK(compose(swp, id) == swp);
    const MultiFuzzyTopology minimal = minimal_tau();
    const SpaceMap other = identity_map(minimal);
    CHECK_THROWS_AS(compose(swp, other), ShapeError);
}
