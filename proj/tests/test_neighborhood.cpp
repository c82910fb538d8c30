/* test_neighborhood.cpp -- neighbourhood families, the N1..N5 checker,
 * and the topology <-> system round trip.  Family values for the worked
 * fixture are frozen from the brute-force oracle.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "mftop/neighborhood.hpp"

using namespace mftop;
using testutil::fixture_tau;
using testutil::minimal_tau;
using testutil::mk;
using testutil::shape_ab;

TEST_CASE("is_nbd: fixture verdicts") {
    const MultiFuzzyTopology tau = fixture_tau();
    const SpaceShape s = tau.shape();
    CHECK(is_nbd(mk(s, {2, 1}), "a", tau));        // U, witnessed by itself
    CHECK_FALSE(is_nbd(mk(s, {2, 0}), "a", tau));  // no open below [1,0] reaches 1 at a
    CHECK(is_nbd(mk(s, {1, 2}), "a", tau));        // witnessed by C-half
    CHECK_FALSE(is_nbd(null_set(s), "a", tau));    // not positive
    CHECK_THROWS_AS(is_nbd(mk(s, {1, 1}), "zzz", tau), PointError);
}

TEST_CASE("nbd_family: frozen fixture values (criterion 7 values)") {
    const MultiFuzzyTopology tau = fixture_tau();
    const SpaceShape s = tau.shape();
    // at a: {C-half, [a:1/2 b:1], U, C-one}
    CHECK(nbd_family(tau, "a") ==
          SetFamily{mk(s, {1, 1}), mk(s, {1, 2}), mk(s, {2, 1}), mk(s, {2, 2})});
    // at b: {C-half, U, C-one}
    CHECK(nbd_family(tau, "b") == SetFamily{mk(s, {1, 1}), mk(s, {2, 1}), mk(s, {2, 2})});
    // minimal topology at a: every grid set above a constant with matching
    // grade at a
    CHECK(nbd_family(minimal_tau(), "a") ==
          SetFamily{mk(s, {1, 1}), mk(s, {1, 2}), mk(s, {2, 2})});
}

TEST_CASE("nbd_family agrees with the literal scan and the oracle") {
    Rng rng(5);
    for (int rep = 0; rep < 25; ++rep) {
        std::uniform_int_distribution<std::size_t> np(1, 2);
        std::uniform_int_distribution<std::uint32_t> nd(1, 2), dd(1, 2);
        const SpaceShape s = make_shape(synthetic_universe(np(rng)), nd(rng), dd(rng));
        const MultiFuzzyTopology t = random_topology(rng, s);
        const auto families = nbd_families(t);
        for (std::size_t x = 0; x < s.universe.size(); ++x) {
            SetFamily literal;
            for (const MultiFuzzySet& f : all_grid_sets(s))
                if (is_nbd(f, x, t)) literal.push_back(f);
            CHECK(families[x] == literal);
            CHECK(testutil::to_fam(families[x]) ==
                  oracle::o_nbd_family(testutil::to_fam(t.opens()), static_cast<int>(x),
                                       testutil::to_shape(s)));
        }
    }
}

TEST_CASE("verify_nbd_axioms accepts derived systems") {
    CHECK(verify_nbd_axioms(nbd_from_topology(fixture_tau())).ok);
    CHECK(verify_nbd_axioms(nbd_from_topology(minimal_tau())).ok);
}

TEST_CASE("derived systems pass the axioms on randomized topologies") {
    Rng rng(14);
    for (int rep = 0; rep < 12; ++rep) {
        std::uniform_int_distribution<std::size_t> np(1, 3);
        std::uniform_int_distribution<std::uint32_t> nd(1, 2), dd(1, 3);
        const SpaceShape s = make_shape(synthetic_universe(np(rng)), nd(rng), dd(rng));
        const MultiFuzzyTopology t = random_topology(rng, s);
        const NbdReport report = verify_nbd_axioms(nbd_from_topology(t));
        CHECK(report.ok);
    }
}

TEST_CASE("verify_nbd_axioms: constants removed trips N1") {
    const MultiFuzzyTopology tau = fixture_tau();
    const NbdSystem good = nbd_from_topology(tau);
    std::vector<SetFamily> families = good.families();
    SetFamily& at_a = families[0];
    at_a.erase(std::remove(at_a.begin(), at_a.end(), mk(tau.shape(), {1, 1})), at_a.end());
    const NbdReport report = verify_nbd_axioms(NbdSystem(tau.shape(), families));
    CHECK_FALSE(report.ok);
    bool saw_n1 = false;
    for (const auto& v : report.violations)
        if (v.axiom == "N1" && v.point == 0) saw_n1 = true;
    CHECK(saw_n1);
}

TEST_CASE("verify_nbd_axioms: a lone C-one family violates N1") {
    const SpaceShape s = shape_ab();
    const MultiFuzzySet c_one = absolute_set(s);
    std::vector<SetFamily> families{{c_one}, {c_one}};
    const NbdReport report = verify_nbd_axioms(NbdSystem(s, families));
    CHECK_FALSE(report.ok);
    bool saw_n1 = false;
    for (const auto& v : report.violations)
        if (v.axiom == "N1") saw_n1 = true;
    CHECK(saw_n1);
}

TEST_CASE("verify_nbd_axioms: a lone C-half family violates N1 and N4") {
    // [a:1/2, b:1] dominates C-half and matches its grade at a, so N4
    // forces it into the family; it is absent.
    const SpaceShape s = shape_ab();
    const MultiFuzzySet c_half = mk(s, {1, 1});
    std::vector<SetFamily> families{{c_half}, {c_half}};
    const NbdReport report = verify_nbd_axioms(NbdSystem(s, families));
    CHECK_FALSE(report.ok);
    bool saw_n1 = false, saw_n4 = false;
    for (const auto& v : report.violations) {
        if (v.axiom == "N1") saw_n1 = true;
        if (v.axiom == "N4" && v.point == 0) saw_n4 = true;
    }
    CHECK(saw_n1);
    CHECK(saw_n4);
}

TEST_CASE("topology_from_nbd: frozen filter values") {
    const MultiFuzzyTopology tau = fixture_tau();
    const SpaceShape s = tau.shape();
    const NbdSystem system = nbd_from_topology(tau);
    const MultiFuzzyTopology rebuilt = topology_from_nbd(system);
    // [a:1/2 b:1] is excluded (not in L(b)); [a:1 b:0] is excluded (not in L(a)).
    CHECK(rebuilt.opens() == tau.opens());
    CHECK(verify_axioms(rebuilt).ok);

    const MultiFuzzyTopology minimal = minimal_tau();
    CHECK(topology_from_nbd(nbd_from_topology(minimal)).opens() == minimal.opens());
}

TEST_CASE("each axiom is reported on a system crafted to violate it") {
    const SpaceShape s = shape_ab();
    const MultiFuzzySet c_half = mk(s, {1, 1});
    const MultiFuzzySet c_one = mk(s, {2, 2});
    const MultiFuzzySet u = mk(s, {2, 1});
    const MultiFuzzySet v = mk(s, {1, 2});

    auto axioms_hit = [&](std::vector<SetFamily> families) {
        std::set<std::string> hit;
        for (const auto& viol : verify_nbd_axioms(NbdSystem(s, std::move(families))).violations)
            hit.insert(viol.axiom);
        return hit;
    };

    // N2: a member with a zero grade at its own point
    CHECK(axioms_hit({{c_half, c_one, mk(s, {0, 1})}, {c_half, c_one}}).count("N2"));
    // N3: the meet of U and V is C-half, missing from the family
    CHECK(axioms_hit({{c_one, u, v}, {c_half, c_one}}).count("N3"));
    // N5: U needs itself as inner witness at a (grade 1 there), but U is
    // positive at b without being a member at b
    CHECK(axioms_hit({{c_half, c_one, u}, {c_half, c_one}}).count("N5"));
}

TEST_CASE("all-positive-at-x families reconstruct the discrete topology") {
    const SpaceShape s = shape_ab();
    std::vector<SetFamily> families(2);
    for (const MultiFuzzySet& f : all_grid_sets(s))
        for (std::size_t x = 0; x < 2; ++x)
            if (positivity_at(f, x) == Positivity::AllPositive) families[x].push_back(f);
    const NbdSystem discrete_like(s, families);
    CHECK(verify_nbd_axioms(discrete_like).ok);
    const MultiFuzzyTopology rebuilt = topology_from_nbd(discrete_like);
    CHECK(rebuilt.opens() == all_restricted_grid_sets(s)); // every restricted set opens
    CHECK(verify_axioms(rebuilt).ok);
}

TEST_CASE("topology_from_nbd rejects invalid systems") {
    const SpaceShape s = shape_ab();
    std::vector<SetFamily> families{{absolute_set(s)}, {absolute_set(s)}};
    CHECK_THROWS_AS(topology_from_nbd(NbdSystem(s, families)), PreconditionError);
}

TEST_CASE("round trip on random generated topologies, oracle-checked") {
    Rng rng(6);
    for (int rep = 0; rep < 25; ++rep) {
        std::uniform_int_distribution<std::size_t> np(1, 3);
        std::uniform_int_distribution<std::uint32_t> nd(1, 2), dd(1, 2);
        const SpaceShape s = make_shape(synthetic_universe(np(rng)), nd(rng), dd(rng));
        const MultiFuzzyTopology t = random_topology(rng, s);
        const NbdSystem system = nbd_from_topology(t);
        const MultiFuzzyTopology rebuilt = topology_from_nbd(system, /*verify=*/false);
        CHECK(rebuilt.opens() == t.opens());

        std::vector<oracle::Fam> ofams;
        for (const SetFamily& fam : system.families()) ofams.push_back(testutil::to_fam(fam));
        CHECK(testutil::to_fam(rebuilt.opens()) ==
              oracle::o_topology_from_nbd(ofams, testutil::to_shape(s)));
    }
}

TEST_CASE("families of the rebuilt topology equal the source system") {
    Rng rng(7);
    for (int rep = 0; rep < 15; ++rep) {
        std::uniform_int_distribution<std::size_t> np(1, 2);
        std::uniform_int_distribution<std::uint32_t> dd(1, 3);
        const SpaceShape s = make_shape(synthetic_universe(np(rng)), 1, dd(rng));
        const MultiFuzzyTopology t = random_topology(rng, s);
        const NbdSystem system = nbd_from_topology(t);
        const MultiFuzzyTopology rebuilt = topology_from_nbd(system, /*verify=*/false);
        CHECK(nbd_families(rebuilt) == system.families());
    }
}

TEST_CASE("chang-kind topology without constants fails N1") {
    const SpaceShape s = shape_ab();
    const MultiFuzzyTopology chang(s, TopologyKind::Chang,
                                   {null_set(s), absolute_set(s)});
    const NbdReport report = verify_nbd_axioms(nbd_from_topology(chang));
    CHECK_FALSE(report.ok);
    CHECK(report.violations.front().axiom == "N1");
}

TEST_CASE("open_via_nbd: fixture verdicts and agreement with membership") {
    const MultiFuzzyTopology tau = fixture_tau();
    const SpaceShape s = tau.shape();
    CHECK(open_via_nbd(mk(s, {2, 1}), tau));       // U itself
    CHECK_FALSE(open_via_nbd(mk(s, {1, 2}), tau)); // no open matches grade 1 at b
    CHECK(open_via_nbd(null_set(s), tau));         // vacuously
    CHECK_THROWS_AS(open_via_nbd(mk(shape_ab(2, 2), {1, 0, 0, 0}), fixture_tau()),
                    ShapeError);
    const SpaceShape s2 = shape_ab(2, 2);
    const MultiFuzzyTopology t2 = generate(s2, {});
    CHECK_THROWS_AS(open_via_nbd(mk(s2, {1, 0, 0, 0}), t2), PreconditionError);

    Rng rng(8);
    for (int rep = 0; rep < 20; ++rep) {
        std::uniform_int_distribution<std::uint32_t> dd(1, 2);
        const SpaceShape s3 = make_shape(synthetic_universe(2), 2, dd(rng));
        const MultiFuzzyTopology t3 = random_topology(rng, s3);
        for (const MultiFuzzySet& a : all_restricted_grid_sets(s3))
            CHECK(open_via_nbd(a, t3) == (t3.contains(a) || a == null_set(s3)));
    }
}

TEST_CASE("monotone upset property (*) on derived systems") {
    const MultiFuzzyTopology tau = fixture_tau();
    const auto families = nbd_families(tau);
    const SetFamily grid = all_grid_sets(tau.shape());
    for (std::size_t x = 0; x < families.size(); ++x)
        for (const MultiFuzzySet& n : families[x])
            for (const MultiFuzzySet& w : grid) {
                if (!leq(n, w)) continue;
                auto tn = n.tuple_at(x);
                auto tw = w.tuple_at(x);
                if (!std::equal(tn.begin(), tn.end(), tw.begin())) continue;
                CHECK(family_contains(families[x], w));
            }
}

TEST_CASE("join property (**) on derived systems") {
    const MultiFuzzyTopology tau = fixture_tau();
    const auto families = nbd_families(tau);
    for (std::size_t x = 0; x < families.size(); ++x)
        for (const MultiFuzzySet& n : families[x])
            for (const MultiFuzzySet& m : families[x])
                CHECK(family_contains(families[x], join(n, m)));
}

TEST_CASE("neighbourhood families are meet-closed") {
    const MultiFuzzyTopology tau = fixture_tau();
    const auto families = nbd_families(tau);
    for (std::size_t x = 0; x < families.size(); ++x)
        for (const MultiFuzzySet& n : families[x])
            for (const MultiFuzzySet& m : families[x])
                CHECK(family_contains(families[x], meet(n, m)));
}

TEST_CASE("N4 attainment form matches the grid-r form away from grade 1/D") {
    Rng rng(9);
    for (int rep = 0; rep < 40; ++rep) {
        std::uniform_int_distribution<std::size_t> np(1, 2);
        std::uniform_int_distribution<std::uint32_t> nd(1, 2), dd(2, 3);
        const SpaceShape s = make_shape(synthetic_universe(np(rng)), nd(rng), dd(rng));
        const MultiFuzzyTopology t = random_topology(rng, s);
        const auto families = nbd_families(t);
        for (std::size_t x = 0; x < families.size(); ++x) {
            for (const MultiFuzzySet& f : all_restricted_grid_sets(s)) {
                if (positivity_at(f, x) != Positivity::AllPositive) continue;
                const bool attained = detail::n4_hypothesis_attained(families[x], f, x);
                const bool gridr = detail::n4_hypothesis_grid_r(families[x], f, x);
                if (attained) CHECK(gridr); // attainment always implies the r-form
                // equivalence whenever every coordinate grade exceeds 1/D
                auto tup = f.tuple_at(x);
                if (std::all_of(tup.begin(), tup.end(),
                                [](std::uint32_t g) { return g >= 2; }))
                    CHECK(attained == gridr);
            }
        }
    }
}
