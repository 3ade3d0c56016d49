#include "cocycle/suites.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "cocycle/characteristic.hpp"
#include "cocycle/flow.hpp"
#include "cocycle/shapiro.hpp"

namespace cocycle {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

class Tally {
public:
    Tally(std::string module, std::string name) { c_.module = std::move(module); c_.name = std::move(name); }

    void expect(bool ok, const std::function<std::string()>& what) {
        ++c_.checked;
        if (ok) return;
        if (c_.failed++ == 0) c_.first_failure = what();
    }
    // Exceptions count as one failure.
    void guard(const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            ++c_.checked;
            if (c_.failed++ == 0) c_.first_failure = std::string("exception: ") + e.what();
        }
    }
    SuiteCheck done() { return std::move(c_); }

private:
    SuiteCheck c_;
};

const std::vector<const char*> kSmallPresets = {"Z_1", "Z_2", "Z_3", "Z_4", "Z_5", "Z_6", "Z_7", "Z_8",
                                                "Z_2xZ_2", "Z_2xZ_4", "Z_2xZ_2xZ_2", "D_3", "D_4"};

GroupCochain normalized(GroupCochain c) {
    for (std::size_t i = 0; i < c.tuples(); ++i) {
        auto t = decode_tuple(i, c.group_order, c.degree);
        if (std::find(t.begin(), t.end(), 0) != t.end()) c.values[i] = CircleValue();
    }
    return c;
}

// ---- core-algebra

std::vector<SuiteCheck> core_suite(std::mt19937_64& rng) {
    std::vector<SuiteCheck> out;
    Tally axioms("core-algebra", "group axioms on presets of order <= 8");
    for (const char* name : kSmallPresets) {
        auto g = build_group(name);
        for (Element a = 0; a < g.order(); ++a) {
            axioms.expect(g.mul(a, g.inv(a)) == 0 && g.mul(0, a) == a, [&] { return std::string(name) + " inverse/identity"; });
            for (Element b = 0; b < g.order(); ++b)
                for (Element c = 0; c < g.order(); ++c)
                    axioms.expect(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)), [&] { return std::string(name) + " associativity"; });
        }
    }
    out.push_back(axioms.done());

    Tally sec("core-algebra", "quotients and section cocycles");
    for (const char* name : kSmallPresets) {
        auto g = build_group(name);
        for (const auto& n : central_subgroups(g)) {
            auto quo = quotient(g, n);
            for (Element a = 0; a < g.order(); ++a)
                for (Element b = 0; b < g.order(); ++b)
                    sec.expect(quo.pi(g.mul(a, b)) == quo.Q.mul(quo.pi(a), quo.pi(b)), [&] { return std::string(name) + " pi"; });
            auto nn = section_cocycle(make_section(quo.pi));
            const auto& Q = quo.Q;
            for (Element a = 0; a < g.order(); ++a)
                sec.expect(n.contains(nn.element[sz(a)]), [&] { return std::string(name) + " n_N(g) outside N"; });
            for (Element p = 0; p < Q.order(); ++p)
                for (Element q = 0; q < Q.order(); ++q)
                    for (Element r = 0; r < Q.order(); ++r)
                        sec.expect(g.mul(nn(p, q), nn(Q.mul(p, q), r)) == g.mul(nn(q, r), nn(p, Q.mul(q, r))),
                                   [&] { return std::string(name) + " n_N cocycle identity"; });
        }
    }
    out.push_back(sec.done());

    Tally carry("core-algebra", "carry cocycles of moduli with denominator <= 4");
    for (const char* name : {"Z_2", "Z_3", "Z_4", "Z_6", "Z_8", "Z_2xZ_2", "Z_2xZ_4"}) {
        auto g = build_group(name);
        for (const auto& m : small_moduli(g, 4)) {
            auto nz = carry_cocycle(g, m);
            for (Element p = 0; p < g.order(); ++p)
                for (Element q = 0; q < g.order(); ++q)
                    for (Element r = 0; r < g.order(); ++r)
                        carry.expect(nz(p, q) + nz(g.mul(p, q), r) == nz(q, r) + nz(p, g.mul(q, r)),
                                     [&] { return std::string(name) + " carry identity"; });
        }
    }
    out.push_back(carry.done());

    Tally arith("core-algebra", "exact circle arithmetic and the pairing");
    for (int t = 0; t < 2000; ++t) {
        Rational a(static_cast<std::int64_t>(rng() % 201) - 100, static_cast<std::int64_t>(rng() % 24) + 1);
        Rational b(static_cast<std::int64_t>(rng() % 201) - 100, static_cast<std::int64_t>(rng() % 24) + 1);
        auto k = static_cast<std::int64_t>(rng() % 21) - 10, l = static_cast<std::int64_t>(rng() % 21) - 10;
        CircleValue x(a), y(b);
        TorusPoint s{Period::T, x};
        arith.expect((a + b) - b == a && x + y - y == x, [&] { return "addition at " + a.str() + ", " + b.str(); });
        arith.expect(a.frac() >= Rational(0) && a.frac() < Rational(1) && Rational(a.floor()) + a.frac() == a,
                     [&] { return "floor/frac at " + a.str(); });
        arith.expect(pairing(s, k) + pairing(s, l) == pairing(s, k + l) && pairing(s, 1) == -x,
                     [&] { return "pairing at " + x.str(); });
        arith.expect(Rational::parse(a.str()) == a, [&] { return "parse round trip at " + a.str(); });
    }
    out.push_back(arith.done());
    return out;
}

// ---- bar-cohomology

std::vector<SuiteCheck> bar_suite(std::mt19937_64& rng) {
    std::vector<SuiteCheck> out;
    Tally dd("bar-cohomology", "d d = 0 on random cochains, degrees 0..3");
    for (const char* name : kSmallPresets) {
        auto g = build_group(name);
        for (const auto& a : {circle_module(g), cyclic_module(g, {4, 6})})
            for (int n = 0; n <= 3; ++n)
                for (int t = 0; t < 5; ++t) {
                    auto xi = random_cochain(g, a, n, rng, 24);
                    dd.expect(coboundary(g, a, coboundary(g, a, xi)).is_zero(),
                              [&] { return std::string(name) + " degree " + std::to_string(n); });
                }
    }
    out.push_back(dd.done());

    Tally cyc("bar-cohomology", "orders of H^1, H^2, H^3 of Z_n with circle coefficients");
    for (int n = 2; n <= 4; ++n) {
        auto g = cyclic_group(n);
        auto a = circle_module(g);
        const std::int64_t want[] = {n, 1, n};
        for (int deg = 1; deg <= 3; ++deg) {
            auto r = cohomology(g, a, deg);
            cyc.expect(r.order() == want[deg - 1] && r.verified,
                       [&] { return "Z_" + std::to_string(n) + " degree " + std::to_string(deg); });
        }
    }
    out.push_back(cyc.done());

    Tally stab("bar-cohomology", "invariant factors unchanged at 2M");
    for (const char* name : {"Z_2", "Z_3", "Z_4", "Z_2xZ_2", "D_3", "Z_6"}) {
        auto g = build_group(name);
        for (int deg = 1; deg <= 3; ++deg) {
            auto M = default_bound(g, circle_module(g));
            auto r = cohomology(g, circle_module(g, M), deg);
            auto r2 = cohomology(g, circle_module(g, 2 * M), deg);
            stab.expect(r.invariant_factors == r2.invariant_factors && r.stable,
                        [&] { return std::string(name) + " degree " + std::to_string(deg); });
        }
    }
    out.push_back(stab.done());

    Tally wit("bar-cohomology", "coboundaries come with verified witnesses");
    for (const char* name : {"Z_2", "Z_4", "Z_2xZ_2", "D_3"}) {
        auto g = build_group(name);
        auto a = circle_module(g);
        for (int n = 1; n <= 3; ++n) {
            auto q = bar_quotient(g, a, n);
            for (int t = 0; t < 5; ++t) {
                auto b = coboundary(g, a, random_cochain(g, a, n - 1, rng, 12));
                auto w = is_coboundary(g, a, q, b);
                wit.expect(w && coboundary(g, a, *w) == b, [&] { return std::string(name) + " degree " + std::to_string(n); });
            }
            auto r = cohomology(g, a, n);
            for (const auto& rep : r.representatives)
                wit.expect(!is_coboundary(g, a, q, as_cochain(g, a, n, rep)),
                           [&] { return std::string(name) + " representative is a coboundary"; });
        }
    }
    out.push_back(wit.done());
    return out;
}

// ---- groupoid-cohomology

std::vector<SuiteCheck> groupoid_suite(std::mt19937_64& rng) {
    std::vector<SuiteCheck> out;
    auto circle_over = [](const FiniteGroupoid& g) { return trivial_groupoid_module(g, Carrier::circle()); };

    Tally contract("groupoid-cohomology", "Shapiro contraction inverts d in the induced module");
    for (auto [name, h] : std::vector<std::pair<const char*, std::vector<Element>>>{
             {"Z_3", {0}}, {"D_3", {0, 3}}, {"Z_2xZ_2", {0, 1}}, {"Z_6", {0, 2, 4}}}) {
        auto ag = coset_action(build_group(name), h);
        ShapiroTower t(ag.groupoid, circle_over(ag.groupoid));
        for (int n = 2; n <= 3; ++n)
            for (int trial = 0; trial < 3; ++trial) {
                auto xi = groupoid_coboundary(t.induced(), t.induced().random(n - 1, rng));
                contract.expect(groupoid_coboundary(t.induced(), shapiro_contract(t, xi)) == xi,
                                [&] { return std::string(name) + " degree " + std::to_string(n); });
            }
    }
    out.push_back(contract.done());

    Tally shift("groupoid-cohomology", "dimension shift matches H^n(A) with H^(n-1)(C)");
    for (auto [name, n] : std::vector<std::pair<const char*, int>>{{"Z_2", 2}, {"Z_2", 3}, {"Z_3", 3}, {"Z_2xZ_2", 2}}) {
        auto G = build_group(name);
        std::vector<Element> all(sz(G.order()));
        for (Element g = 0; g < G.order(); ++g) all[sz(g)] = g;
        auto ag = coset_action(G, all);
        ShapiroTower t(ag.groupoid, circle_over(ag.groupoid));
        auto ra = groupoid_cohomology(t.base(), n);
        auto rc = groupoid_cohomology(t.quotient(), n - 1);
        shift.expect(ra.invariant_factors == rc.invariant_factors, [&] { return std::string(name) + " orders"; });
        for (const auto& r : ra.representatives) {
            auto zeta = dimension_shift(t, t.base().from_values(n, r));
            shift.expect(is_cocycle(t.quotient(), zeta) && !is_coboundary(t.quotient(), zeta),
                         [&] { return std::string(name) + " generator lost"; });
        }
    }
    out.push_back(shift.done());

    Tally reduction("groupoid-cohomology", "restriction and inflation between G and G_Y");
    for (auto [name, h] : std::vector<std::pair<const char*, std::vector<Element>>>{
             {"Z_2xZ_2", {0, 1}}, {"D_3", {0, 3}}, {"Z_4", {0}}}) {
        auto ag = coset_action(build_group(name), h);
        GroupoidComplex full(ag.groupoid, circle_over(ag.groupoid));
        ReductionMaps maps(full, {0});
        for (int n = 0; n <= 2; ++n) {
            for (const auto& r : groupoid_cohomology(maps.reduced(), n).representatives) {
                auto xi_y = maps.reduced().from_values(n, r);
                reduction.expect(maps.restrict(maps.inflate(xi_y)) == xi_y, [&] { return std::string(name) + " restrict inflate"; });
            }
            for (const auto& r : groupoid_cohomology(full, n).representatives) {
                auto xi = full.from_values(n, r);
                if (n > 0) xi += groupoid_coboundary(full, full.random(n - 1, rng));
                auto w = maps.witness(xi);
                reduction.expect(w && (n == 0 || groupoid_coboundary(full, *w) == maps.inflate(maps.restrict(xi)) - xi),
                                 [&] { return std::string(name) + " witness degree " + std::to_string(n); });
            }
        }
    }
    out.push_back(reduction.done());

    Tally chars("groupoid-cohomology", "characteristic pairs and their translation");
    {
        auto h = abelian_group({2, 2, 2});
        auto t = make_char_translation(h, make_subgroup(h, {0, 1, 2, 3}),
                                       {{0, 0, 0, 0, 1, 1, 1, 1}, {1, 1, 1, 1, 0, 0, 0, 0}});
        for (int trial = 0; trial < 10; ++trial) {
            auto c = zero_char_cochain(t.group_level);
            for (auto& v : c)
                for (auto& x : v) x = CircleValue(static_cast<std::int64_t>(rng() % 12), 12);
            auto b = char_coboundary(t.group_level, c);
            chars.expect(verify_char_pair(t.group_level, b).ok, [] { return std::string("coboundary pair invalid"); });
            auto bt = translate_char_pair(t, b);
            chars.expect(verify_char_pair(t.groupoid_level, bt).ok && untranslate_char_pair(t, bt) == b,
                         [] { return std::string("translation"); });
            chars.expect(bt == char_coboundary(t.groupoid_level, translate_char_cochain(t, c)),
                         [] { return std::string("translation of coboundaries"); });
            chars.expect(char_coboundary_witness(t.groupoid_level, bt).has_value(), [] { return std::string("no witness"); });
        }
    }
    out.push_back(chars.done());
    return out;
}

// ---- modular-obstruction

// Every value of the truncated 3-cocycle identity on Q_m with |k| <= reach.
bool truncated_identity(const ModulusSetup& s, const StandardCocycle& c, std::int64_t reach) {
    Qm qm(s);
    std::vector<QmElement> elems;
    for (Element p = 0; p < s.Q().order(); ++p)
        for (std::int64_t k = -reach; k <= reach; ++k) elems.push_back({p, k});
    for (auto a : elems)
        for (auto b : elems)
            for (auto e : elems)
                for (auto f : elems)
                    if (!qm_coboundary(qm, c, a, b, e, f).is_zero()) return false;
    return true;
}

std::vector<SuiteCheck> obstruction_suite(std::mt19937_64& rng) {
    std::vector<SuiteCheck> out;
    Tally constraints("modular-obstruction", "derived constraints agree with the identity on |k| <= 1");
    Tally dpart("modular-obstruction", "d-part is a 2-cocycle and the value at z0");
    Tally solve("modular-obstruction", "Q_m coboundaries are recognized with witnesses");
    Tally invariance("modular-obstruction", "H^out under section change, 2M and relabeling");
    Tally del("modular-obstruction", "del map: cocycles, B^out to coboundaries, additivity");
    Tally type3("modular-obstruction", "type III_1 cocycle identity and inflation");

    for (const auto& [label, s] : standard_setups()) {
        const auto& Q = s.Q();
        auto AQ = circle_module(Q);
        auto AG = circle_module(s.G);
        auto witness = [&] { return QmWitness{normalized(random_cochain(Q, AQ, 2, rng, 8)), normalized(random_cochain(Q, AQ, 1, rng, 8))}; };
        HoutReport hout;
        constraints.guard([&] { hout = compute_hout(s); });
        auto h3 = compute_hout(make_setup(Q, make_subgroup(Q, {0}), zero_modulus(Q.order())));

        std::vector<StandardCocycle> valid;
        for (int t = 0; t < 2; ++t) {
            auto c = qm_coboundary_of(s, witness());
            for (const auto& r : h3.representatives) c.cbar += static_cast<std::int64_t>(rng() % 5) * r.c.cbar;
            valid.push_back(c);
        }
        for (const auto& r : hout.representatives) valid.push_back(r.c);

        for (const auto& c : valid) {
            constraints.expect(verify_standard(s, c).ok && truncated_identity(s, c, 1), [&] { return label + " valid cocycle rejected"; });
            auto bad = c;
            bad.cbar.values[rng() % bad.cbar.values.size()] += CircleValue(1, 4);
            constraints.expect(verify_standard(s, bad).ok == truncated_identity(s, bad, 1), [&] { return label + " verdicts differ"; });

            auto d = d_part(c);
            bool at_z0 = true;
            for (Element q = 0; q < Q.order(); ++q)
                for (Element r = 0; r < Q.order(); ++r) at_z0 = at_z0 && d({q, r}) == eval_standard(c, {0, 1}, {q, 0}, {r, 0});
            dpart.expect(is_cocycle(Q, AQ, d) && at_z0, [&] { return label; });
        }

        solve.guard([&] {
            auto c = qm_coboundary_of(s, witness());
            auto w = is_coboundary_qm(s, c);
            solve.expect(w && qm_coboundary_of(s, *w).cbar == c.cbar && qm_coboundary_of(s, *w).d == c.d, [&] { return label + " missed"; });
        });

        invariance.guard([&] {
            const auto& base = hout.report;
            invariance.expect(base.verified && base.stable, [&] { return label + " report not verified"; });
            invariance.expect(compute_hout(s, 2 * default_hout_bound(s)).report.invariant_factors == base.invariant_factors,
                              [&] { return label + " 2M"; });
            std::vector<Element> choice(sz(Q.order()), 0);
            for (Element p = 1; p < Q.order(); ++p) {
                std::vector<Element> coset;
                for (Element g = 0; g < s.G.order(); ++g)
                    if (s.pi(g) == p) coset.push_back(g);
                choice[sz(p)] = coset[rng() % coset.size()];
            }
            invariance.expect(compute_hout(make_setup(s.G, s.N, s.m, choice)).report.invariant_factors == base.invariant_factors,
                              [&] { return label + " section"; });
            std::vector<Element> perm(sz(s.G.order()));
            for (int i = 0; i < s.G.order(); ++i) perm[sz(i)] = i;
            std::shuffle(perm.begin() + 1, perm.end(), rng);
            auto g2 = relabel(s.G, perm);
            std::vector<Element> n2;
            for (Element a : s.N.elements) n2.push_back(perm[sz(a)]);
            std::sort(n2.begin(), n2.end());
            ModulusMap m2(s.m.size());
            for (std::size_t i = 0; i < s.m.size(); ++i) m2[sz(perm[i])] = s.m[i];
            invariance.expect(compute_hout(make_setup(g2, make_subgroup(g2, n2), m2)).report.invariant_factors == base.invariant_factors,
                              [&] { return label + " relabel"; });
        });

        del.guard([&] {
            for (const auto& r : hout.representatives)
                del.expect(is_cocycle(s.G, AG, del_map(s, r)), [&] { return label + " not a cocycle"; });
            auto b3 = bar_quotient(s.G, AG, 3);
            auto f = normalized(random_cochain(Q, AQ, 2, rng, 8));
            auto x = make_datum(s, coboundary(Q, AQ, f), NuMap(s.N.elements.size()));
            del.expect(is_coboundary(s.G, AG, b3, del_map(s, x)).has_value(), [&] { return label + " B^out image"; });
            auto y = x;
            for (const auto& r : hout.representatives)
                for (std::uint64_t k = rng() % 3; k > 0; --k) y = y + r;
            del.expect(del_map(s, x + y) == del_map(s, x) + del_map(s, y), [&] { return label + " additivity"; });
        });

        type3.guard([&] {
            auto cq = coboundary(Q, AQ, random_cochain(Q, AQ, 2, rng, 8));
            for (const auto& r : h3.representatives) cq += static_cast<std::int64_t>(rng() % 5) * r.c.cbar;
            Type3One flat(s, cq, NuMap(s.N.elements.size()));
            auto rs = [&]() {
                return ExtendedElement{static_cast<Element>(rng() % sz(Q.order())),
                                       Rational(static_cast<std::int64_t>(rng() % 49) - 24, static_cast<std::int64_t>(rng() % 12) + 1)};
            };
            for (int t = 0; t < 100; ++t) {
                auto a = rs(), b = rs(), e = rs();
                type3.expect(flat(a, b, e) == cq({a.p, b.p, e.p}), [&] { return label + " inflation"; });
            }
            for (const auto& r : hout.representatives) {
                std::optional<Type3One> c;
                try {
                    c.emplace(s, cq, r.nu);
                } catch (const input_error&) {
                    continue;  // [[nu(n_N)]] is not an exact cocycle for this nu
                }
                for (int t = 0; t < 100; ++t) {
                    auto a = rs(), b = rs(), e = rs(), f = rs();
                    type3.expect(c->defect(a, b, e, f).is_zero(), [&] { return label + " defect"; });
                }
            }
        });
    }
    for (auto* t : {&constraints, &dpart, &solve, &invariance, &del, &type3}) out.push_back(t->done());
    return out;
}

// ---- flow-model

std::vector<SuiteCheck> flow_suite(std::uint64_t seed) {
    std::vector<SuiteCheck> out;
    for (std::int64_t D : {2, 4, 8}) {
        FlowGrid g(D);
        for (const auto& r : {check_szet(g), check_cobound(g), check_rho(g, seed), check_eigen(g)})
            for (const auto& id : r.identities) {
                SuiteCheck c{"flow-model", id.name + " at D=" + std::to_string(D), id.checked, id.failed, {}};
                if (id.failed) c.first_failure = std::to_string(id.failed) + " failures";
                out.push_back(std::move(c));
            }
    }
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"core-algebra", "bar-cohomology", "groupoid-cohomology",
                                                   "modular-obstruction", "flow-model"};
    return names;
}

std::vector<SuiteCheck> run_suite(const std::string& module, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    if (module == "core-algebra") return core_suite(rng);
    if (module == "bar-cohomology") return bar_suite(rng);
    if (module == "groupoid-cohomology") return groupoid_suite(rng);
    if (module == "modular-obstruction") return obstruction_suite(rng);
    if (module == "flow-model") return flow_suite(seed);
    throw input_error("unknown suite \"" + module + "\"");
}

std::vector<ModulusMap> small_moduli(const FiniteGroup& g, std::int64_t max_den) {
    std::vector<Element> gens;
    std::size_t reached = 1;
    for (Element x = 1; x < g.order() && reached < sz(g.order()); ++x) {
        auto with = gens;
        with.push_back(x);
        auto n = generated_subgroup(g, with).elements.size();
        if (n > reached) {
            gens = std::move(with);
            reached = n;
        }
    }
    std::vector<ModulusMap> out;
    std::vector<std::int64_t> choice(gens.size(), 0);
    for (;;) {
        std::vector<std::pair<Element, Rational>> values;
        bool small = true;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            values.emplace_back(gens[i], Rational(choice[i], 12));
            small = small && Rational(choice[i], 12).den() <= max_den;
        }
        if (small) {
            try {
                auto m = extend_modulus(g, values);
                if (std::all_of(m.begin(), m.end(), [&](const TorusPoint& v) { return v.value.denominator() <= max_den; }))
                    out.push_back(std::move(m));
            } catch (const input_error&) {
            }
        }
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == 12) choice[k++] = 0;
        if (k == choice.size()) break;
    }
    return out;
}

std::vector<NamedSetup> standard_setups() {
    std::vector<NamedSetup> out;
    for (const char* name : {"Z_4", "Z_2xZ_2", "Z_6"}) {
        auto g = build_group(name);
        for (const auto& n : central_subgroups(g))
            for (const auto& m : small_moduli(g, 4)) {
                if (!std::all_of(n.elements.begin(), n.elements.end(), [&](Element a) { return m[sz(a)].value.is_zero(); })) continue;
                std::string label = std::string(name) + " N={";
                for (std::size_t i = 0; i < n.elements.size(); ++i) label += (i ? "," : "") + std::to_string(n.elements[i]);
                label += "} m=[";
                for (std::size_t i = 0; i < m.size(); ++i) label += (i ? "," : "") + m[i].value.str();
                out.push_back({label + "]", make_setup(g, n, m)});
            }
    }
    return out;
}

}  // namespace cocycle
