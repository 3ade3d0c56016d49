#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cocycle/bar.hpp"
#include "cocycle/group.hpp"

namespace cocycle {

// G with a central N and m : G -> R/T'Z vanishing on N, plus everything derived from a section.
struct ModulusSetup {
    FiniteGroup G;
    SubgroupData N;
    ModulusMap m;       // on G
    QuotientResult quo;
    Section section;
    SectionCocycle nN;  // n_N(p,q) and n_N(g) = s(pi g) g^-1
    ModulusMap mQ;      // m pushed down to Q
    CarryTable nZ;

    const FiniteGroup& Q() const { return quo.Q; }
    Element pi(Element g) const { return quo.pi(g); }
    int n_index(Element g) const { return N.index_of(g); }  // position of an N element
};

// Throws input_error for a non-central N or m not vanishing on N. Without a choice the least
// element of each coset is used.
ModulusSetup make_setup(const FiniteGroup& g, const SubgroupData& n, ModulusMap m,
                        std::optional<std::vector<Element>> section_choice = std::nullopt);
// m given on Q, pulled back along pi.
ModulusMap modulus_from_quotient(const FiniteGroup& g, const SubgroupData& n, const ModulusMap& mq);

// (p, k) stands for (p, [[m(p)]] + k T') in Q x R.
struct QmElement {
    Element p = 0;
    std::int64_t k = 0;
    friend bool operator==(const QmElement&, const QmElement&) = default;
};

class Qm {
public:
    explicit Qm(const ModulusSetup& s) : q_(s.Q()), nz_(s.nZ) {}

    QmElement mul(QmElement a, QmElement b) const {
        return {q_.mul(a.p, b.p), checked::add(checked::add(a.k, b.k), nz_(a.p, b.p))};
    }
    QmElement inv(QmElement a) const { return {q_.inv(a.p), -a.k - nz_(a.p, q_.inv(a.p))}; }
    QmElement z0() const { return {0, 1}; }
    QmElement rep(Element p) const { return {p, 0}; }
    Element project(QmElement a) const { return a.p; }
    // Second coordinate in units of T'.
    Rational lift(QmElement a, const ModulusMap& mq) const { return mq[static_cast<std::size_t>(a.p)].bracket() + Rational(a.k); }

private:
    FiniteGroup q_;
    CarryTable nz_;
};

// c((p,a),(q,b),(r,c)) = a d(q,r) + cbar(p,q,r).
struct StandardCocycle {
    GroupCochain cbar;  // degree 3 on Q
    GroupCochain d;     // degree 2 on Q
};

StandardCocycle zero_standard(const FiniteGroup& q);
CircleValue eval_standard(const StandardCocycle& c, QmElement x, QmElement y, QmElement z);
// The 3-cocycle expression of c on four elements of Q_m.
CircleValue qm_coboundary(const Qm& qm, const StandardCocycle& c, QmElement a, QmElement b, QmElement e, QmElement f);

struct StandardCheck {
    bool ok = true;
    char constraint = 0;  // 'a': d is not a 2-cocycle, 'b': d cbar != n_Z cup d
    std::string detail;
};

StandardCheck verify_standard(const ModulusSetup& s, const StandardCocycle& c);
// The stored d. It equals c(z0, q, r) - c(1, q, r), which is c(z0, q, r) for normalized c.
GroupCochain d_part(const StandardCocycle& c);
// Zero whenever an argument is the identity.
bool is_normalized(const GroupCochain& c);
bool is_normalized(const StandardCocycle& c);

// f((p,a),(q,b)) = a chi(q) + fbar(p,q); d f has d-part chi(qr) - chi(q) - chi(r) and
// cbar = d fbar - n_Z(p,q) chi(r).
struct QmWitness {
    GroupCochain fbar;  // degree 2
    GroupCochain chi;   // degree 1
};

StandardCocycle qm_coboundary_of(const ModulusSetup& s, const QmWitness& f);
// Exact solve; the witness is checked against eval_standard on elements with |k| <= 2.
std::optional<QmWitness> is_coboundary_qm(const ModulusSetup& s, const StandardCocycle& c);

// nu : N -> R/TZ in units of T, indexed like N.elements.
using NuMap = std::vector<CircleValue>;

struct ObstructionDatum {
    StandardCocycle c;
    NuMap nu;
};

// d(q,r) = <nu(n_N(q,r)), 1> = -nu(n_N(q,r)).
GroupCochain fiber_d(const ModulusSetup& s, const NuMap& nu);
ObstructionDatum make_datum(const ModulusSetup& s, GroupCochain cbar, NuMap nu);
bool is_homomorphism(const ModulusSetup& s, const NuMap& nu);
// Standard constraints, nu a homomorphism and the fiber condition.
StandardCheck verify_datum(const ModulusSetup& s, const ObstructionDatum& x);
ObstructionDatum operator+(const ObstructionDatum& a, const ObstructionDatum& b);

// Unknowns (normalized cbar on Q^3, nu on N); relations: cup constraint with d = -nu(n_N), nu
// additive; modulo (d fbar, 0) for normalized fbar.
class HoutPresentation {
public:
    explicit HoutPresentation(const ModulusSetup& s);

    const CochainQuotient& quotient() const { return q_; }
    const Carrier& carrier() const { return mid_; }
    std::vector<CircleValue> flatten(const ObstructionDatum& x) const;
    ObstructionDatum datum(const std::vector<CircleValue>& v) const;
    std::vector<std::int64_t> class_of(const ObstructionDatum& x) const { return q_.class_of(flatten(x)); }
    // fbar with x = (d fbar, 0), when x lies in B^out.
    std::optional<GroupCochain> bout_witness(const ObstructionDatum& x) const;

private:
    ModulusSetup s_;
    std::vector<std::size_t> keep3_, keep2_;  // tuples without the identity
    Carrier mid_;
    CochainQuotient q_;
};

struct HoutReport {
    FinAbReport report;
    std::vector<ObstructionDatum> representatives;
};

std::int64_t default_hout_bound(const ModulusSetup& s);
HoutReport compute_hout(const ModulusSetup& s, std::int64_t bound = 0);

// c_G(g,h,k) = cbar(pi g, pi h, pi k) - n_Z(pi g, pi h) <nu(n_N(k)), 1>.
GroupCochain del_map(const ModulusSetup& s, const ObstructionDatum& x);

// Q x R with the product group law; s in rational units.
struct ExtendedElement {
    Element p = 0;
    Rational s;
};

// c(p~, q~, r~) = c_Q(p,q,r) - s [[nu(n_N(q,r))]] for p~ = (p, s). The bracketed 2-cochain has to be
// an exact rational cocycle, otherwise the s-linear terms do not cancel.
class Type3One {
public:
    Type3One(const ModulusSetup& s, GroupCochain cQ, NuMap nu);

    CircleValue operator()(const ExtendedElement& a, const ExtendedElement& b, const ExtendedElement& c) const;
    ExtendedElement mul(const ExtendedElement& a, const ExtendedElement& b) const { return {q_.mul(a.p, b.p), a.s + b.s}; }
    // The 3-cocycle expression on four elements.
    CircleValue defect(const ExtendedElement& a, const ExtendedElement& b, const ExtendedElement& c,
                       const ExtendedElement& d) const;
    const std::vector<Rational>& phi() const { return phi_; }

private:
    FiniteGroup q_;
    GroupCochain cQ_;
    std::vector<Rational> phi_;  // [[nu(n_N(q,r))]] on Q^2
};

}  // namespace cocycle
