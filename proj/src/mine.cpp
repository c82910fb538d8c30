/* mine.cpp -- proposition checkers and the instance enumeration harness. */
#include "mftop/mine.hpp"

#include <algorithm>
#include <functional>

#include "mftop/enumerate.hpp"
#include "mftop/morphisms.hpp"
#include "mftop/product.hpp"
#include "mftop/report.hpp"

namespace mftop {

using nlohmann::json;

std::string to_string(Mutation mutation) {
    return mutation == Mutation::DropN1 ? "drop-n1" : "none";
}

Mutation mutation_from_string(std::string_view text) {
    if (text == "none") return Mutation::None;
    if (text == "drop-n1") return Mutation::DropN1;
    throw ValueError("unknown mutation '" + std::string(text) + "'");
}

const std::vector<std::string>& mined_propositions() {
    static const std::vector<std::string> props = {
        "1.7",  "2.4",  "2.5",  "2.9",  "2.12", "2.14", "2.16", "2.18",
        "2.19", "3.4",  "3.6",  "3.9",  "3.10", "3.11", "3.13", "3.17"};
    return props;
}

json MineResult::to_json() const {
    json out;
    out["command"] = "mine";
    out["proposition"] = proposition;
    out["bounds"] = {{"max_points", bounds.max_points},
                     {"max_dim", bounds.max_dim},
                     {"max_den", bounds.max_den},
                     {"samples", bounds.samples}};
    out["mode"] = exhaustive ? "exhaustive" : "random";
    out["mutation"] = to_string(mutation);
    out["instances_checked"] = instances_checked;
    out["complete"] = complete;
    out["ok"] = ok();
    if (witness) out["witness"] = *witness;
    return out;
}

namespace {

// The box inside which enumeration is exhaustive.
bool inside_exhaustive_box(const MineBounds& b) {
    return b.max_points <= 2 && b.max_dim <= 1 && b.max_den <= 2 && b.samples == 0;
}

constexpr std::uint64_t kDefaultSamples = 200;
// Cap on enumerated partners in pair-of-maps propositions; keeps the
// exhaustive pair streams from going quadratic.
constexpr std::size_t kPartnerCap = 12;

struct Ctx {
    MineBounds bounds;
    MineOptions options;
    MineResult result;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    Rng rng;

    explicit Ctx(std::string prop, const MineBounds& b, const MineOptions& o)
        : bounds(b), options(o), rng(o.seed) {
        result.proposition = std::move(prop);
        result.bounds = b;
        result.exhaustive = inside_exhaustive_box(b);
        result.mutation = o.mutation;
    }

    GenerateOptions gen() const { return {options.mutation != Mutation::DropN1}; }

    bool stop() const { return result.witness.has_value() || !result.complete; }

    // Accounts for one instance; false when the budget is exhausted.
    bool charge() {
        if (options.budget &&
            std::chrono::steady_clock::now() - start >= *options.budget) {
            result.complete = false;
            return false;
        }
        ++result.instances_checked;
        return true;
    }

    void report(json instance, std::string violation) {
        if (result.witness) return;
        json w;
        w["instance"] = std::move(instance);
        w["violation"] = std::move(violation);
        result.witness = std::move(w);
    }

    std::uint64_t sample_count() const {
        return bounds.samples ? bounds.samples : kDefaultSamples;
    }

    SpaceShape random_shape() {
        std::uniform_int_distribution<std::size_t> np(1, bounds.max_points);
        std::uniform_int_distribution<std::uint32_t> nd(1, bounds.max_dim);
        std::uniform_int_distribution<std::uint32_t> dd(1, bounds.max_den);
        return make_shape(synthetic_universe(np(rng)), nd(rng), dd(rng));
    }

    // Second shape sharing dim and chain with the first.
    SpaceShape random_shape_like(const SpaceShape& other) {
        std::uniform_int_distribution<std::size_t> np(1, bounds.max_points);
        return make_shape(synthetic_universe(np(rng)), other.dim,
                          other.chain.denominator());
    }
};

std::vector<SpaceShape> exhaustive_shapes(const MineBounds& bounds) {
    std::vector<SpaceShape> shapes;
    for (std::uint32_t den = 1; den <= bounds.max_den; ++den)
        for (std::uint32_t dim = 1; dim <= bounds.max_dim; ++dim)
            for (std::size_t np = 1; np <= bounds.max_points; ++np)
                shapes.push_back(make_shape(synthetic_universe(np), dim, den));
    return shapes;
}

// ---- instance streams -------------------------------------------------

void for_each_topology(Ctx& ctx, const std::function<void(const MultiFuzzyTopology&)>& fn) {
    if (ctx.result.exhaustive) {
        for (const SpaceShape& shape : exhaustive_shapes(ctx.bounds)) {
            for (const MultiFuzzyTopology& t :
                 all_generated_topologies(shape, std::uint64_t{1} << 20, ctx.gen())) {
                if (ctx.stop()) return;
                fn(t);
            }
        }
    } else {
        for (std::uint64_t s = 0; s < ctx.sample_count() && !ctx.stop(); ++s)
            fn(random_topology(ctx.rng, ctx.random_shape(), 3, ctx.gen()));
    }
}

void for_each_topology_pair(
    Ctx& ctx,
    const std::function<void(const MultiFuzzyTopology&, const MultiFuzzyTopology&)>& fn) {
    if (ctx.result.exhaustive) {
        for (std::uint32_t den = 1; den <= ctx.bounds.max_den; ++den)
            for (std::uint32_t dim = 1; dim <= ctx.bounds.max_dim; ++dim) {
                std::vector<MultiFuzzyTopology> tops;
                for (std::size_t np = 1; np <= ctx.bounds.max_points; ++np) {
                    auto batch = all_generated_topologies(
                        make_shape(synthetic_universe(np), dim, den),
                        std::uint64_t{1} << 20, ctx.gen());
                    tops.insert(tops.end(), batch.begin(), batch.end());
                }
                for (const MultiFuzzyTopology& a : tops)
                    for (const MultiFuzzyTopology& b : tops) {
                        if (ctx.stop()) return;
                        fn(a, b);
                    }
            }
    } else {
        for (std::uint64_t s = 0; s < ctx.sample_count() && !ctx.stop(); ++s) {
            SpaceShape first = ctx.random_shape();
            SpaceShape second = ctx.random_shape_like(first);
            fn(random_topology(ctx.rng, first, 3, ctx.gen()),
               random_topology(ctx.rng, second, 3, ctx.gen()));
        }
    }
}

// All total point maps between two universes, odometer order.
void for_each_assignment(const Universe& from, const Universe& to,
                         const std::function<void(const PointMap&)>& fn) {
    std::vector<std::size_t> assignment(from.size(), 0);
    while (true) {
        fn(PointMap(from, to, assignment));
        std::size_t i = 0;
        while (i < assignment.size() && assignment[i] == to.size() - 1) assignment[i++] = 0;
        if (i == assignment.size()) break;
        ++assignment[i];
    }
}

void for_each_space_map(Ctx& ctx, const std::function<void(const SpaceMap&)>& fn) {
    if (ctx.result.exhaustive) {
        for_each_topology_pair(ctx, [&](const MultiFuzzyTopology& a,
                                        const MultiFuzzyTopology& b) {
            for_each_assignment(a.shape().universe, b.shape().universe,
                                [&](const PointMap& pm) {
                                    if (ctx.stop()) return;
                                    fn(SpaceMap(pm, a, b));
                                });
        });
    } else {
        for (std::uint64_t s = 0; s < ctx.sample_count() && !ctx.stop(); ++s) {
            SpaceShape first = ctx.random_shape();
            SpaceShape second = ctx.random_shape_like(first);
            MultiFuzzyTopology a = random_topology(ctx.rng, first, 3, ctx.gen());
            MultiFuzzyTopology b = random_topology(ctx.rng, second, 3, ctx.gen());
            fn(SpaceMap(random_point_map(ctx.rng, first.universe, second.universe), a, b));
        }
    }
}

json map_instance_json(const SpaceMap& m) {
    json out;
    out["map"] = point_map_to_json(m.map());
    out["domain"] = topology_to_json(m.domain());
    out["codomain"] = topology_to_json(m.codomain());
    return out;
}

json product_instance_json(const MultiFuzzyTopology& a, const MultiFuzzyTopology& b) {
    json out;
    out["factor1"] = topology_to_json(a);
    out["factor2"] = topology_to_json(b);
    return out;
}

// ---- proposition checkers ---------------------------------------------

void mine_1_7(Ctx& ctx) {
    auto check = [&ctx](const PointMap& f, const MultiFuzzySet& f1, const MultiFuzzySet& f2,
                        const MultiFuzzySet& g1, const MultiFuzzySet& g2) {
        if (!ctx.charge()) return;
        const SpaceShape& sx = f1.shape();
        const SpaceShape& sy = g1.shape();
        auto fail = [&](const char* law) {
            json inst;
            inst["map"] = point_map_to_json(f);
            inst["F1"] = set_to_json(f1);
            inst["F2"] = set_to_json(f2);
            inst["G1"] = set_to_json(g1);
            inst["G2"] = set_to_json(g2);
            ctx.report(std::move(inst),
                       std::string("image/preimage law ") + law + " failed (proposition 1.7)");
        };
        if (image(f, null_set(sx)) != null_set(sy)) return fail("(i)");
        if (leq(f1, f2) && !leq(image(f, f1), image(f, f2))) return fail("(ii)");
        if (!leq(image(f, meet(f1, f2)), meet(image(f, f1), image(f, f2)))) return fail("(iii)");
        if (image(f, join(f1, f2)) != join(image(f, f1), image(f, f2))) return fail("(iv)");
        if (preimage(f, null_set(sy)) != null_set(sx) ||
            preimage(f, absolute_set(sy)) != absolute_set(sx))
            return fail("(v)");
        if (leq(g1, g2) && !leq(preimage(f, g1), preimage(f, g2))) return fail("(vi)");
        if (preimage(f, join(g1, g2)) != join(preimage(f, g1), preimage(f, g2)))
            return fail("(vii)");
        if (preimage(f, meet(g1, g2)) != meet(preimage(f, g1), preimage(f, g2)))
            return fail("(viii)");
        if (preimage(f, complement(g1)) != complement(preimage(f, g1))) return fail("(ix)");
        const MultiFuzzySet back = preimage(f, image(f, f1));
        if (!leq(f1, back)) return fail("(x)");
        if (f.is_injective() && f1 != back) return fail("(x) equality");
        const MultiFuzzySet forth = image(f, preimage(f, g1));
        if (!leq(forth, g1)) return fail("(xi)");
        if (f.is_surjective() && forth != g1) return fail("(xi) equality");
    };

    if (ctx.result.exhaustive) {
        for (std::uint32_t den = 1; den <= ctx.bounds.max_den && !ctx.stop(); ++den)
            for (std::uint32_t dim = 1; dim <= ctx.bounds.max_dim && !ctx.stop(); ++dim)
                for (std::size_t nx = 1; nx <= ctx.bounds.max_points && !ctx.stop(); ++nx)
                    for (std::size_t ny = 1; ny <= ctx.bounds.max_points && !ctx.stop(); ++ny) {
                        const SpaceShape sx = make_shape(synthetic_universe(nx), dim, den);
                        const SpaceShape sy =
                            make_shape(synthetic_universe(ny), dim, den);
                        const SetFamily gx = all_grid_sets(sx);
                        const SetFamily gy = all_grid_sets(sy);
                        for_each_assignment(sx.universe, sy.universe, [&](const PointMap& f) {
                            for (const MultiFuzzySet& f1 : gx)
                                for (const MultiFuzzySet& f2 : gx)
                                    for (const MultiFuzzySet& g1 : gy)
                                        for (const MultiFuzzySet& g2 : gy) {
                                            if (ctx.stop()) return;
                                            check(f, f1, f2, g1, g2);
                                        }
                        });
                    }
    } else {
        for (std::uint64_t s = 0; s < ctx.sample_count() && !ctx.stop(); ++s) {
            SpaceShape sx = ctx.random_shape();
            SpaceShape sy = ctx.random_shape_like(sx);
            PointMap f = random_point_map(ctx.rng, sx.universe, sy.universe);
            check(f, random_grid_set(ctx.rng, sx), random_grid_set(ctx.rng, sx),
                  random_grid_set(ctx.rng, sy), random_grid_set(ctx.rng, sy));
        }
    }
}

void mine_2_4(Ctx& ctx) {
    auto check = [&ctx](const SpaceMap& f, const SpaceMap& g) {
        if (!ctx.charge()) return;
        const SpaceMap gf = compose(f, g);
        const bool fc = is_continuous(f), gc = is_continuous(g);
        if (fc && gc && !is_continuous(gf)) {
            json inst;
            inst["f"] = map_instance_json(f);
            inst["g"] = map_instance_json(g);
            ctx.report(std::move(inst), "composition of continuous maps is not continuous");
            return;
        }
        const bool fo = is_open_map(f), go = is_open_map(g);
        if (fo && go && !is_open_map(gf)) {
            json inst;
            inst["f"] = map_instance_json(f);
            inst["g"] = map_instance_json(g);
            ctx.report(std::move(inst), "composition of open maps is not open");
        }
    };

    if (ctx.result.exhaustive) {
        // Partner maps g share f's codomain space; the tail of the pair is
        // strided to kPartnerCap per f.
        std::vector<SpaceMap> maps;
        for_each_space_map(ctx, [&maps](const SpaceMap& m) { maps.push_back(m); });
        for (const SpaceMap& f : maps) {
            std::vector<const SpaceMap*> partners;
            for (const SpaceMap& g : maps)
                if (g.domain() == f.codomain()) partners.push_back(&g);
            const std::size_t stride = std::max<std::size_t>(1, partners.size() / kPartnerCap);
            for (std::size_t i = 0; i < partners.size(); i += stride) {
                if (ctx.stop()) return;
                check(f, *partners[i]);
            }
        }
    } else {
        for (std::uint64_t s = 0; s < ctx.sample_count() && !ctx.stop(); ++s) {
            SpaceShape sx = ctx.random_shape();
            SpaceShape sy = ctx.random_shape_like(sx);
            SpaceShape sz = ctx.random_shape_like(sx);
            MultiFuzzyTopology tx = random_topology(ctx.rng, sx, 3, ctx.gen());
            MultiFuzzyTopology ty = random_topology(ctx.rng, sy, 3, ctx.gen());
            MultiFuzzyTopology tz = random_topology(ctx.rng, sz, 3, ctx.gen());
            SpaceMap f(random_point_map(ctx.rng, sx.universe, sy.universe), tx, ty);
            SpaceMap g(random_point_map(ctx.rng, sy.universe, sz.universe), ty, tz);
            check(f, g);
        }
    }
}

void mine_2_5(Ctx& ctx) {
    for_each_space_map(ctx, [&ctx](const SpaceMap& m) {
        if (!m.map().is_bijective()) return;
        if (!ctx.charge()) return;
        const bool fwd = is_continuous(m);
        const bool both = fwd && is_continuous(inverse(m));
        const bool open_and_cont = fwd && is_open_map(m);
        if (both != open_and_cont)
            ctx.report(map_instance_json(m),
                       "bijection: both-continuous disagrees with continuous-and-open");
    });
}

void mine_2_9(Ctx& ctx) {
    for_each_topology(ctx, [&ctx](const MultiFuzzyTopology& t) {
        const auto families = nbd_families(t);
        for (std::size_t x = 0; x < families.size(); ++x) {
            if (!ctx.charge()) return;
            for (const MultiFuzzySet& f : families[x])
                for (const MultiFuzzySet& g : families[x])
                    if (!family_contains(families[x], meet(f, g))) {
                        json inst;
                        inst["space"] = topology_to_json(t);
                        inst["point"] = t.shape().universe.label(x);
                        inst["F"] = set_to_json(f);
                        inst["G"] = set_to_json(g);
                        ctx.report(std::move(inst),
                                   "meet of two neighbourhoods is not a neighbourhood");
                        return;
                    }
        }
    });
}

void mine_2_12(Ctx& ctx) {
    for_each_topology(ctx, [&ctx](const MultiFuzzyTopology& t) {
        for (const MultiFuzzySet& a : all_restricted_grid_sets(t.shape())) {
            if (!ctx.charge()) return;
            const bool direct = t.contains(a) || a == null_set(t.shape());
            if (open_via_nbd(a, t) != direct) {
                json inst;
                inst["space"] = topology_to_json(t);
                inst["A"] = set_to_json(a);
                ctx.report(std::move(inst),
                           "neighbourhood openness criterion disagrees with membership");
                return;
            }
        }
    });
}

void mine_2_14(Ctx& ctx) {
    for_each_topology(ctx, [&ctx](const MultiFuzzyTopology& t) {
        if (!ctx.charge()) return;
        const NbdReport report = verify_nbd_axioms(nbd_from_topology(t));
        if (!report.ok) {
            json inst;
            inst["space"] = topology_to_json(t);
            inst["report"] = nbd_report_to_json(report);
            ctx.report(std::move(inst), "derived neighbourhood system violates " +
                                            report.violations.front().axiom);
        }
    });
}

void mine_2_16(Ctx& ctx) {
    for_each_topology(ctx, [&ctx](const MultiFuzzyTopology& t) {
        if (!ctx.charge()) return;
        const NbdSystem system = nbd_from_topology(t);
        const MultiFuzzyTopology rebuilt = topology_from_nbd(system, /*verify=*/false);
        const AxiomReport axioms = verify_axioms(rebuilt);
        if (!axioms.ok) {
            json inst;
            inst["space"] = topology_to_json(t);
            inst["tau_L"] = topology_to_json(rebuilt);
            inst["report"] = axiom_report_to_json(axioms);
            ctx.report(std::move(inst), "tau_L is not a topology");
            return;
        }
        if (nbd_families(rebuilt) != system.families()) {
            json inst;
            inst["space"] = topology_to_json(t);
            inst["tau_L"] = topology_to_json(rebuilt);
            ctx.report(std::move(inst),
                       "neighbourhood families of tau_L differ from the system");
        }
    });
}

void mine_2_18(Ctx& ctx) {
    for_each_topology(ctx, [&ctx](const MultiFuzzyTopology& t) {
        if (!ctx.charge()) return;
        const NbdSystem system = nbd_from_topology(t);
        const NbdReport report = verify_nbd_axioms(system);
        if (!report.ok) {
            json inst;
            inst["space"] = topology_to_json(t);
            inst["report"] = nbd_report_to_json(report);
            ctx.report(std::move(inst), "derived system violates " +
                                            report.violations.front().axiom);
            return;
        }
        const MultiFuzzyTopology rebuilt = topology_from_nbd(system, /*verify=*/false);
        if (!(rebuilt.opens() == t.opens())) {
            json inst;
            inst["space"] = topology_to_json(t);
            inst["tau_L_tau"] = topology_to_json(rebuilt);
            ctx.report(std::move(inst), "round trip tau_{L_tau} differs from tau");
        }
    });
}

void mine_2_19(Ctx& ctx) {
    for_each_space_map(ctx, [&ctx](const SpaceMap& m) {
        if (!ctx.charge()) return;
        const bool a = is_continuous_via(m, ContinuityCriterion::OpenPreimage);
        const bool b = is_continuous_via(m, ContinuityCriterion::ClosedPreimage);
        const bool c = is_continuous_via(m, ContinuityCriterion::NbdPullback);
        const bool d = is_continuous_via(m, ContinuityCriterion::NbdWitness);
        if (a != b || a != c || a != d) {
            json inst = map_instance_json(m);
            inst["criteria"] = {{"open-preimage", a},
                                {"closed-preimage", b},
                                {"nbd-pullback", c},
                                {"nbd-witness", d}};
            ctx.report(std::move(inst), "continuity criteria disagree");
        }
    });
}

void mine_3_4(Ctx& ctx) {
    for_each_topology_pair(ctx, [&ctx](const MultiFuzzyTopology& a,
                                       const MultiFuzzyTopology& b) {
        if (!ctx.charge()) return;
        const ProductSpace p = product_topology(a, b);
        if (!is_open_base(p.basis(), p.topology()))
            ctx.report(product_instance_json(a, b),
                       "factor products do not form an open base of the product");
    });
}

void mine_3_6(Ctx& ctx) {
    for_each_topology_pair(ctx, [&ctx](const MultiFuzzyTopology& a,
                                       const MultiFuzzyTopology& b) {
        if (!ctx.charge()) return;
        const ProductSpace p = product_topology(a, b);
        for (int j = 1; j <= 2; ++j) {
            const SpaceMap pi = projection(p, j);
            if (!is_continuous(pi) || !is_open_map(pi)) {
                json inst = product_instance_json(a, b);
                inst["projection"] = j;
                ctx.report(std::move(inst), "projection is not continuous and open");
                return;
            }
        }
        if (!smallest_topology_check(p))
            ctx.report(product_instance_json(a, b),
                       "product topology is not the projection-generated topology");
    });
}

void mine_3_9(Ctx& ctx) {
    for_each_topology_pair(ctx, [&ctx](const MultiFuzzyTopology& a,
                                       const MultiFuzzyTopology& b) {
        if (!ctx.charge()) return;
        const ProductSpace p = product_topology(a, b);
        for (const std::string& label : a.shape().universe.labels())
            if (!is_continuous(slice_embedding(p, label, SliceSide::Left))) {
                json inst = product_instance_json(a, b);
                inst["fixed"] = label;
                ctx.report(std::move(inst), "left slice embedding is not continuous");
                return;
            }
        for (const std::string& label : b.shape().universe.labels())
            if (!is_continuous(slice_embedding(p, label, SliceSide::Right))) {
                json inst = product_instance_json(a, b);
                inst["fixed"] = label;
                ctx.report(std::move(inst), "right slice embedding is not continuous");
                return;
            }
    });
}

void mine_product_maps(Ctx& ctx, bool open_variant) {
    auto qualifies = [open_variant](const SpaceMap& m) {
        return open_variant ? is_open_map(m) : is_continuous(m);
    };
    auto check = [&ctx, open_variant](const SpaceMap& f1, const SpaceMap& f2) {
        if (!ctx.charge()) return;
        const SpaceMap prod = product_map(f1, f2);
        const bool ok = open_variant ? is_open_map(prod) : is_continuous(prod);
        if (!ok) {
            json inst;
            inst["f1"] = map_instance_json(f1);
            inst["f2"] = map_instance_json(f2);
            ctx.report(std::move(inst), open_variant
                                            ? "product of open maps is not open"
                                            : "product of continuous maps is not continuous");
        }
    };

    if (ctx.result.exhaustive) {
        std::vector<SpaceMap> qualified;
        for_each_space_map(ctx, [&](const SpaceMap& m) {
            if (qualifies(m)) qualified.push_back(m);
        });
        for (const SpaceMap& f1 : qualified) {
            // Partners must share dim and chain; strided to kPartnerCap.
            std::vector<const SpaceMap*> partners;
            for (const SpaceMap& f2 : qualified)
                if (f2.domain().shape().chain == f1.domain().shape().chain &&
                    f2.domain().shape().dim == f1.domain().shape().dim)
                    partners.push_back(&f2);
            const std::size_t stride = std::max<std::size_t>(1, partners.size() / kPartnerCap);
            for (std::size_t i = 0; i < partners.size(); i += stride) {
                if (ctx.stop()) return;
                check(f1, *partners[i]);
            }
        }
    } else {
        for (std::uint64_t s = 0; s < ctx.sample_count() && !ctx.stop(); ++s) {
            SpaceShape sx1 = ctx.random_shape();
            SpaceShape sy1 = ctx.random_shape_like(sx1);
            SpaceShape sx2 = ctx.random_shape_like(sx1);
            SpaceShape sy2 = ctx.random_shape_like(sx1);
            SpaceMap f1(random_point_map(ctx.rng, sx1.universe, sy1.universe),
                        random_topology(ctx.rng, sx1, 3, ctx.gen()),
                        random_topology(ctx.rng, sy1, 3, ctx.gen()));
            SpaceMap f2(random_point_map(ctx.rng, sx2.universe, sy2.universe),
                        random_topology(ctx.rng, sx2, 3, ctx.gen()),
                        random_topology(ctx.rng, sy2, 3, ctx.gen()));
            if (qualifies(f1) && qualifies(f2)) check(f1, f2);
            else if (ctx.charge()) { /* vacuous instance */ }
        }
    }
}

void mine_3_13(Ctx& ctx) {
    for_each_topology_pair(ctx, [&ctx](const MultiFuzzyTopology& a,
                                       const MultiFuzzyTopology& b) {
        if (!ctx.charge()) return;
        const ProductSpace p = product_topology(a, b);
        const SetFamily base =
            product_base(p, minimal_base(p.factor1()), minimal_base(p.factor2()));
        if (!is_open_base(base, p.topology()) ||
            !is_second_countable(p.topology()).second_countable)
            ctx.report(product_instance_json(a, b),
                       "product of the minimal bases is not a base of the product");
    });
}

void mine_3_17(Ctx& ctx) {
    for_each_topology_pair(ctx, [&ctx](const MultiFuzzyTopology& a,
                                       const MultiFuzzyTopology& b) {
        if (!ctx.charge()) return;
        // Cover enumeration is exponential in the opens count; outsized
        // random instances are counted but not enumerated.
        if (a.opens().size() * b.opens().size() > 4096) return;
        CompactnessOptions opts;
        opts.max_cover_size = 3;
        opts.sample_count = 8;
        opts.seed = ctx.options.seed;
        const CompactnessReport report = check_compact(product_topology(a, b), opts);
        const bool pattern_ok = report.vacuously_compact || report.product_pattern_ok;
        if (!report.compact || !pattern_ok) {
            json inst = product_instance_json(a, b);
            inst["compact"] = report.compact;
            inst["pattern_ok"] = report.product_pattern_ok;
            ctx.report(std::move(inst), "product compactness pattern failed");
        }
    });
}

} // namespace

MineResult mine_counterexamples(const std::string& proposition, const MineBounds& bounds,
                                const MineOptions& options) {
    const auto& props = mined_propositions();
    if (std::find(props.begin(), props.end(), proposition) == props.end())
        throw ValueError("unknown proposition '" + proposition + "'");

    Ctx ctx(proposition, bounds, options);
    if (proposition == "1.7") mine_1_7(ctx);
    else if (proposition == "2.4") mine_2_4(ctx);
    else if (proposition == "2.5") mine_2_5(ctx);
    else if (proposition == "2.9") mine_2_9(ctx);
    else if (proposition == "2.12") mine_2_12(ctx);
    else if (proposition == "2.14") mine_2_14(ctx);
    else if (proposition == "2.16") mine_2_16(ctx);
    else if (proposition == "2.18") mine_2_18(ctx);
    else if (proposition == "2.19") mine_2_19(ctx);
    else if (proposition == "3.4") mine_3_4(ctx);
    else if (proposition == "3.6") mine_3_6(ctx);
    else if (proposition == "3.9") mine_3_9(ctx);
    else if (proposition == "3.10") mine_product_maps(ctx, /*open_variant=*/true);
    else if (proposition == "3.11") mine_product_maps(ctx, /*open_variant=*/false);
    else if (proposition == "3.13") mine_3_13(ctx);
    else if (proposition == "3.17") mine_3_17(ctx);
    return ctx.result;
}

} // namespace mftop
