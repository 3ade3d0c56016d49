#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cocycle/rational.hpp"

namespace cocycle {

using Element = int;

// Raised for malformed user input (bad tables, non-normal subgroups, ...). The CLI maps it to
// exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Multiplication-table group; element 0 is always the identity.
class FiniteGroup {
public:
    FiniteGroup() : FiniteGroup("Z_1", {{0}}) {}
    // Validates closure, identity, inverses and associativity; failures name the offending triple.
    FiniteGroup(std::string name, const std::vector<std::vector<int>>& table);

    int order() const { return n_; }
    Element identity() const { return 0; }
    Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a * n_ + b)]; }
    Element inv(Element a) const { return inverse_[static_cast<std::size_t>(a)]; }
    Element pow(Element a, std::int64_t k) const;
    Element conj(Element g, Element m) const { return mul(mul(inv(g), m), g); }  // g^-1 m g
    int element_order(Element a) const;
    bool commutes(Element a, Element b) const { return mul(a, b) == mul(b, a); }
    const std::string& name() const { return name_; }
    std::vector<std::vector<int>> table() const;
    std::vector<Element> center() const;
    bool is_abelian() const;

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.n_ == b.n_ && a.table_ == b.table_;
    }

private:
    std::string name_;
    int n_ = 1;
    std::vector<Element> table_;
    std::vector<Element> inverse_;
};

// Presets: "Z_n", "Z_2xZ_2" or "Z_2⊕Z_2" (any number of cyclic factors), "D_n" (order 2n).
// Case, underscores and the spellings "z4", "z2xz2", "d4" are all accepted.
FiniteGroup build_group(const std::string& preset);
FiniteGroup cyclic_group(int n);
FiniteGroup abelian_group(const std::vector<int>& orders);
FiniteGroup dihedral_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
// Same group with element i renamed perm[i]; perm must fix 0.
FiniteGroup relabel(const FiniteGroup& g, const std::vector<Element>& perm);

struct SubgroupData {
    FiniteGroup parent;
    std::vector<Element> elements;  // sorted
    bool normal = false;
    bool central = false;

    bool contains(Element g) const;
    int index_of(Element g) const;  // position in `elements`, or -1
};

// Checks closure; computes the normal and central flags.
SubgroupData make_subgroup(const FiniteGroup& g, std::vector<Element> elements);
SubgroupData generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens);
std::vector<SubgroupData> central_subgroups(const FiniteGroup& g);

struct GroupHom {
    FiniteGroup domain;
    FiniteGroup codomain;
    std::vector<Element> image;

    Element operator()(Element a) const { return image[static_cast<std::size_t>(a)]; }
};

GroupHom make_hom(const FiniteGroup& domain, const FiniteGroup& codomain, std::vector<Element> image);

struct QuotientResult {
    FiniteGroup Q;
    GroupHom pi;
};

// Cosets are numbered by their least element, so the identity coset is 0.
QuotientResult quotient(const FiniteGroup& g, const SubgroupData& n);

struct Section {
    GroupHom quotient_map;
    std::vector<Element> choice;  // indexed by Q

    Element operator()(Element q) const { return choice[static_cast<std::size_t>(q)]; }
};

Section make_section(const GroupHom& pi);
// Any normalized section; used to test independence of the choice.
Section make_section(const GroupHom& pi, std::vector<Element> choice);

// n_N(p,q) = s(p)s(q)s(pq)^-1 and the element-wise n_N(g) = s(pi(g)) g^-1.
struct SectionCocycle {
    int q_order = 1;
    std::vector<Element> pair;     // indexed p * |Q| + q, values in G (inside ker pi)
    std::vector<Element> element;  // indexed by G

    Element operator()(Element p, Element q) const { return pair[static_cast<std::size_t>(p * q_order + q)]; }
};

SectionCocycle section_cocycle(const Section& s);

// A homomorphism into R/T'Z, one torus point per group element.
using ModulusMap = std::vector<TorusPoint>;

ModulusMap zero_modulus(int order);
// Checks the size, the period and the homomorphism law.
void check_modulus(const FiniteGroup& g, const ModulusMap& m);
// Extends values on some elements to the subgroup they generate by m(ab) = m(a) + m(b). Throws when
// the values are inconsistent or do not generate g.
ModulusMap extend_modulus(const FiniteGroup& g, const std::vector<std::pair<Element, Rational>>& values);

struct CarryTable {
    int q_order = 1;
    ModulusMap m;
    std::vector<int> values;  // n_Z(p,q) in {0,1}, indexed p * |Q| + q

    int operator()(Element p, Element q) const { return values[static_cast<std::size_t>(p * q_order + q)]; }
};

// n_Z(p,q) = [[m(p)]] + [[m(q)]] - [[m(pq)]] with brackets in [0,1) in units of T'.
CarryTable carry_cocycle(const FiniteGroup& q, const ModulusMap& m);

}  // namespace cocycle
