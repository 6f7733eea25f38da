#ifndef RATCURVE_D5_HPP
#define RATCURVE_D5_HPP

#include <utility>
#include <vector>

#include "ratcurve/qpoly.hpp"

namespace ratcurve::d5 {

/// Raised when an arithmetic step over Q[x]/(m) hits a zero divisor: m splits
/// into the carried factor and its cofactor, and the caller retries on both
/// branches. The factor is monic, proper (0 < deg < deg m).
struct Split {
    qp::QPoly factor;
};

/// Arithmetic in K = Q[x]/(m) with m squarefree but not necessarily
/// irreducible (dynamic evaluation). Elements are reduced representatives.
class Field {
public:
    explicit Field(qp::QPoly modulus);

    const qp::QPoly& modulus() const { return m_; }
    int degree() const { return qp::deg(m_); }

    qp::QPoly reduce(const qp::QPoly& a) const;
    qp::QPoly add(const qp::QPoly& a, const qp::QPoly& b) const { return qp::add(a, b); }
    qp::QPoly sub(const qp::QPoly& a, const qp::QPoly& b) const { return qp::sub(a, b); }
    qp::QPoly mul(const qp::QPoly& a, const qp::QPoly& b) const;

    /// Inverse of a nonzero element; throws Split when a is a zero divisor.
    qp::QPoly inv(const qp::QPoly& a) const;

    /// The residue class of x itself.
    qp::QPoly generator() const;

private:
    qp::QPoly m_;
};

/// Binary form in (u,v) over K: coefficient k of u^(n-k) v^k, reduced mod m.
using KForm = std::vector<qp::QPoly>;

/// Monic gcd of two K-forms as forms (monomial content in u and v included).
/// May throw Split.
KForm kform_gcd(const Field& k, const KForm& a, const KForm& b);

bool kform_is_zero(const KForm& f);
int kform_degree(const KForm& f); // number of coefficients - 1

/// Divide f by the linear form (u - theta v) as often as it stays exact;
/// returns the deflated form and the extracted power. May throw Split.
std::pair<KForm, int> strip_linear_factor(const Field& k, KForm f, const qp::QPoly& theta);

/// Run a computation over Q[x]/(m) with automatic splitting: the worklist
/// starts at m, and every Split refines the modulus. fn is called once per
/// final branch. Deterministic order (factor branch first).
template <typename Fn>
void for_each_branch(const qp::QPoly& modulus, Fn&& fn) {
    std::vector<qp::QPoly> work{modulus};
    while (!work.empty()) {
        qp::QPoly m = std::move(work.back());
        work.pop_back();
        try {
            fn(Field(m));
        } catch (const Split& s) {
            work.push_back(qp::divmod(m, s.factor).first);
            work.push_back(s.factor);
        }
    }
}

} // namespace ratcurve::d5

#endif
