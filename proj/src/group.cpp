#include "cocycle/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>

namespace cocycle {

FiniteGroup::FiniteGroup(std::string name, const std::vector<std::vector<int>>& table)
    : name_(std::move(name)), n_(static_cast<int>(table.size())) {
    if (n_ == 0) throw input_error("group table is empty");
    table_.resize(static_cast<std::size_t>(n_) * n_);
    for (int a = 0; a < n_; ++a) {
        if (static_cast<int>(table[a].size()) != n_)
            throw input_error("group table row " + std::to_string(a) + " has wrong length");
        for (int b = 0; b < n_; ++b) {
            int v = table[a][b];
            if (v < 0 || v >= n_)
                throw input_error("table not closed: " + std::to_string(a) + "*" + std::to_string(b) +
                                  " = " + std::to_string(v));
            table_[static_cast<std::size_t>(a * n_ + b)] = v;
        }
    }
    for (int a = 0; a < n_; ++a)
        if (mul(0, a) != a || mul(a, 0) != a)
            throw input_error("element 0 is not the identity (fails at " + std::to_string(a) + ")");
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw input_error("table not associative at triple (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")");
    inverse_.assign(static_cast<std::size_t>(n_), -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == 0 && mul(b, a) == 0) { inverse_[static_cast<std::size_t>(a)] = b; break; }
        if (inverse_[static_cast<std::size_t>(a)] < 0)
            throw input_error("element " + std::to_string(a) + " has no inverse");
    }
}

Element FiniteGroup::pow(Element a, std::int64_t k) const {
    if (k < 0) { a = inv(a); k = -k; }
    k %= element_order(a);
    Element r = 0;
    for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

int FiniteGroup::element_order(Element a) const {
    int k = 1;
    for (Element x = a; x != 0; x = mul(x, a)) ++k;
    return k;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
    return t;
}

std::vector<Element> FiniteGroup::center() const {
    std::vector<Element> z;
    for (int a = 0; a < n_; ++a) {
        bool c = true;
        for (int b = 0; b < n_ && c; ++b) c = commutes(a, b);
        if (c) z.push_back(a);
    }
    return z;
}

bool FiniteGroup::is_abelian() const { return static_cast<int>(center().size()) == n_; }

FiniteGroup abelian_group(const std::vector<int>& orders) {
    int n = 1;
    for (int k : orders) {
        if (k <= 0) throw input_error("cyclic factor order must be positive");
        n *= k;
    }
    auto digits = [&](int x) {
        std::vector<int> d(orders.size());
        for (std::size_t i = orders.size(); i-- > 0;) { d[i] = x % orders[i]; x /= orders[i]; }
        return d;
    };
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto da = digits(a), db = digits(b);
            int v = 0;
            for (std::size_t i = 0; i < orders.size(); ++i) v = v * orders[i] + (da[i] + db[i]) % orders[i];
            t[a][b] = v;
        }
    std::string name;
    for (std::size_t i = 0; i < orders.size(); ++i) name += (i ? "xZ_" : "Z_") + std::to_string(orders[i]);
    if (orders.empty()) name = "Z_1";
    return FiniteGroup(name, t);
}

FiniteGroup cyclic_group(int n) { return abelian_group({n}); }

FiniteGroup dihedral_group(int n) {
    if (n <= 0) throw input_error("dihedral parameter must be positive");
    // r^i s^j has index i + n j
    int order = 2 * n;
    std::vector<std::vector<int>> t(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order)));
    for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y) {
            int a = x % n, b = x / n, c = y % n, d = y / n;
            int i = ((a + (b ? -c : c)) % n + n) % n;
            t[x][y] = i + n * ((b + d) % 2);
        }
    return FiniteGroup("D_" + std::to_string(n), t);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int n = a.order() * b.order();
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            t[x][y] = a.mul(x / b.order(), y / b.order()) * b.order() + b.mul(x % b.order(), y % b.order());
    return FiniteGroup(a.name() + "x" + b.name(), t);
}

FiniteGroup relabel(const FiniteGroup& g, const std::vector<Element>& perm) {
    int n = g.order();
    if (static_cast<int>(perm.size()) != n || perm[0] != 0) throw input_error("relabeling must fix the identity");
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]++) throw input_error("relabeling is not a permutation");
    }
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[perm[a]][perm[b]] = perm[g.mul(a, b)];
    return FiniteGroup(g.name(), t);
}

FiniteGroup build_group(const std::string& preset) {
    std::string s;
    for (std::size_t i = 0; i < preset.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(preset[i]);
        if (c == '_' || c == ' ') continue;
        // UTF-8 for U+2295 (circled plus)
        if (c == 0xE2 && i + 2 < preset.size() && static_cast<unsigned char>(preset[i + 1]) == 0x8A &&
            static_cast<unsigned char>(preset[i + 2]) == 0x95) {
            s += 'x';
            i += 2;
            continue;
        }
        if (c == '+' || c == '*') { s += 'x'; continue; }
        s += static_cast<char>(std::tolower(c));
    }
    auto parse_num = [&](const std::string& t) {
        if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw input_error("unknown group preset \"" + preset + "\"");
        int v = std::stoi(t);
        if (v <= 0) throw input_error("preset parameters must be positive");
        return v;
    };
    if (!s.empty() && s[0] == 'd') return dihedral_group(parse_num(s.substr(1)));
    std::vector<int> orders;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, 'x')) {
        if (part.empty() || part[0] != 'z') throw input_error("unknown group preset \"" + preset + "\"");
        orders.push_back(parse_num(part.substr(1)));
    }
    if (orders.empty()) throw input_error("unknown group preset \"" + preset + "\"");
    return abelian_group(orders);
}

bool SubgroupData::contains(Element g) const { return std::binary_search(elements.begin(), elements.end(), g); }

int SubgroupData::index_of(Element g) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), g);
    if (it == elements.end() || *it != g) return -1;
    return static_cast<int>(it - elements.begin());
}

SubgroupData make_subgroup(const FiniteGroup& g, std::vector<Element> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    SubgroupData h{g, elements, true, true};
    if (elements.empty() || elements[0] != 0) throw input_error("subgroup must contain the identity");
    for (Element a : elements) {
        if (a < 0 || a >= g.order()) throw input_error("subgroup element out of range");
        if (!h.contains(g.inv(a))) throw input_error("subgroup not closed under inverse at " + std::to_string(a));
        for (Element b : elements)
            if (!h.contains(g.mul(a, b)))
                throw input_error("subgroup not closed: " + std::to_string(a) + "*" + std::to_string(b));
    }
    for (Element a : elements)
        for (Element x = 0; x < g.order(); ++x) {
            if (!g.commutes(a, x)) h.central = false;
            if (!h.contains(g.conj(x, a))) h.normal = false;
        }
    return h;
}

SubgroupData generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens) {
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    std::vector<Element> elems{0};
    in[0] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (Element s : gens) {
            Element y = g.mul(elems[i], s);
            if (!in[static_cast<std::size_t>(y)]) { in[static_cast<std::size_t>(y)] = 1; elems.push_back(y); }
        }
    return make_subgroup(g, elems);
}

std::vector<SubgroupData> central_subgroups(const FiniteGroup& g) {
    // Closure of every subset of the centre; fine for the small centres we meet.
    auto z = g.center();
    std::vector<std::vector<Element>> found;
    auto add = [&](const std::vector<Element>& gens) {
        auto h = generated_subgroup(g, gens);
        if (std::find(found.begin(), found.end(), h.elements) == found.end()) found.push_back(h.elements);
    };
    if (z.size() > 20) throw input_error("centre too large for subgroup enumeration");
    for (std::uint32_t mask = 0; mask < (1u << z.size()); ++mask) {
        std::vector<Element> gens;
        for (std::size_t i = 0; i < z.size(); ++i)
            if (mask & (1u << i)) gens.push_back(z[i]);
        add(gens);
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<SubgroupData> out;
    for (auto& e : found) out.push_back(make_subgroup(g, e));
    return out;
}

GroupHom make_hom(const FiniteGroup& domain, const FiniteGroup& codomain, std::vector<Element> image) {
    if (static_cast<int>(image.size()) != domain.order()) throw input_error("homomorphism image has wrong size");
    for (Element v : image)
        if (v < 0 || v >= codomain.order()) throw input_error("homomorphism image out of range");
    for (Element a = 0; a < domain.order(); ++a)
        for (Element b = 0; b < domain.order(); ++b)
            if (image[static_cast<std::size_t>(domain.mul(a, b))] !=
                codomain.mul(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)]))
                throw input_error("not a homomorphism at pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
    return {domain, codomain, std::move(image)};
}

QuotientResult quotient(const FiniteGroup& g, const SubgroupData& n) {
    for (Element a : n.elements)
        for (Element x = 0; x < g.order(); ++x)
            if (!n.contains(g.conj(x, a)))
                throw input_error("subgroup not normal: conjugating " + std::to_string(a) + " by " +
                                  std::to_string(x) + " leaves it");
    std::vector<int> coset(static_cast<std::size_t>(g.order()), -1);
    std::vector<Element> rep;
    for (Element x = 0; x < g.order(); ++x) {
        if (coset[static_cast<std::size_t>(x)] >= 0) continue;
        int c = static_cast<int>(rep.size());
        rep.push_back(x);
        for (Element a : n.elements) coset[static_cast<std::size_t>(g.mul(x, a))] = c;
    }
    int k = static_cast<int>(rep.size());
    std::vector<std::vector<int>> t(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) t[a][b] = coset[static_cast<std::size_t>(g.mul(rep[a], rep[b]))];
    FiniteGroup q(g.name() + "/N", t);
    return {q, make_hom(g, q, coset)};
}

Section make_section(const GroupHom& pi) {
    std::vector<Element> choice(static_cast<std::size_t>(pi.codomain.order()), -1);
    for (Element g = 0; g < pi.domain.order(); ++g)
        if (choice[static_cast<std::size_t>(pi(g))] < 0) choice[static_cast<std::size_t>(pi(g))] = g;
    for (Element c : choice)
        if (c < 0) throw input_error("quotient map is not surjective");
    return {pi, choice};
}

Section make_section(const GroupHom& pi, std::vector<Element> choice) {
    if (static_cast<int>(choice.size()) != pi.codomain.order()) throw input_error("section has wrong size");
    for (Element q = 0; q < pi.codomain.order(); ++q)
        if (pi(choice[static_cast<std::size_t>(q)]) != q) throw input_error("section does not split the quotient at " + std::to_string(q));
    if (choice[0] != 0) throw input_error("section must be normalized");
    return {pi, std::move(choice)};
}

SectionCocycle section_cocycle(const Section& s) {
    const auto& g = s.quotient_map.domain;
    const auto& q = s.quotient_map.codomain;
    SectionCocycle out;
    out.q_order = q.order();
    out.pair.resize(static_cast<std::size_t>(q.order()) * q.order());
    for (Element a = 0; a < q.order(); ++a)
        for (Element b = 0; b < q.order(); ++b) {
            Element v = g.mul(g.mul(s(a), s(b)), g.inv(s(q.mul(a, b))));
            if (s.quotient_map(v) != 0) throw std::logic_error("section cocycle escaped the kernel");
            out.pair[static_cast<std::size_t>(a * q.order() + b)] = v;
        }
    out.element.resize(static_cast<std::size_t>(g.order()));
    for (Element x = 0; x < g.order(); ++x) out.element[static_cast<std::size_t>(x)] = g.mul(s(s.quotient_map(x)), g.inv(x));
    // Central kernel is what makes n_N an abelian cocycle; report otherwise.
    for (Element x = 0; x < g.order(); ++x)
        if (s.quotient_map(x) == 0)
            for (Element y = 0; y < g.order(); ++y)
                if (!g.commutes(x, y)) throw input_error("kernel of the quotient map is not central");
    return out;
}

ModulusMap zero_modulus(int order) {
    return ModulusMap(static_cast<std::size_t>(order), TorusPoint{Period::TPrime, CircleValue()});
}

void check_modulus(const FiniteGroup& g, const ModulusMap& m) {
    if (static_cast<int>(m.size()) != g.order()) throw input_error("modulus map has wrong size");
    for (const auto& p : m)
        if (p.period != Period::TPrime) throw input_error("modulus values must live in R/T'Z");
    for (Element a = 0; a < g.order(); ++a)
        for (Element b = 0; b < g.order(); ++b)
            if (m[static_cast<std::size_t>(g.mul(a, b))].value != m[static_cast<std::size_t>(a)].value + m[static_cast<std::size_t>(b)].value)
                throw input_error("modulus map is not a homomorphism at pair (" + std::to_string(a) + "," +
                                  std::to_string(b) + ")");
}

ModulusMap extend_modulus(const FiniteGroup& g, const std::vector<std::pair<Element, Rational>>& values) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<std::optional<CircleValue>> m(n);
    m[0] = CircleValue();
    std::vector<Element> known{0};
    auto assign = [&](Element a, const CircleValue& v) {
        auto& slot = m[static_cast<std::size_t>(a)];
        if (slot && *slot != v)
            throw input_error("modulus values are inconsistent at element " + std::to_string(a));
        if (!slot) {
            slot = v;
            known.push_back(a);
        }
    };
    for (const auto& [a, v] : values) {
        if (a < 0 || a >= g.order()) throw input_error("modulus element " + std::to_string(a) + " out of range");
        assign(a, CircleValue(v));
    }
    for (std::size_t i = 0; i < known.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            Element a = known[i], b = known[j];
            CircleValue s = *m[static_cast<std::size_t>(a)] + *m[static_cast<std::size_t>(b)];
            assign(g.mul(a, b), s);
            assign(g.mul(b, a), s);
        }
    ModulusMap out;
    for (std::size_t a = 0; a < n; ++a) {
        if (!m[a]) throw input_error("modulus values do not determine m on element " + std::to_string(a));
        out.push_back({Period::TPrime, *m[a]});
    }
    check_modulus(g, out);
    return out;
}

CarryTable carry_cocycle(const FiniteGroup& q, const ModulusMap& m) {
    check_modulus(q, m);
    CarryTable t;
    t.q_order = q.order();
    t.m = m;
    t.values.resize(static_cast<std::size_t>(q.order()) * q.order());
    for (Element a = 0; a < q.order(); ++a)
        for (Element b = 0; b < q.order(); ++b) {
            Rational v = m[static_cast<std::size_t>(a)].bracket() + m[static_cast<std::size_t>(b)].bracket() -
                         m[static_cast<std::size_t>(q.mul(a, b))].bracket();
            if (!v.is_integer() || v.num() < 0 || v.num() > 1) throw std::logic_error("carry outside {0,1}");
            t.values[static_cast<std::size_t>(a * q.order() + b)] = static_cast<int>(v.num());
        }
    return t;
}

}  // namespace cocycle
