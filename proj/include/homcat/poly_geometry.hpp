#pragma once

#include "homcat/check_report.hpp"
#include "homcat/hom_algebras.hpp"
#include "homcat/hom_gerstenhaber.hpp"
#include "homcat/linalg.hpp"
#include "homcat/polynomial.hpp"

#include <string>
#include <vector>

namespace homcat {

/// Multivector fields and forms on Q^n share the sparse graded carrier: the
/// generator indices range over the frame d_1..d_n for multivectors and over
/// dx_1..dx_n for forms (rank == num_vars == n in both cases).
using PolyMultivectorField = MixedElement;
using PolyForm = MixedElement;

/// A polynomial substitution regarded as the self-map phi of Q^n.
using PolyMap = PolySubstitution;

inline MixedElement frame_term(int n, const ExtIndex& I, const Polynomial& f) {
    return MixedElement::term(n, n, I, f);
}

/// The tangent-bundle presentation of Q^n: coordinate frame with vanishing
/// brackets, identity anchor, identity twist. Its Gerstenhaber bracket is the
/// Schouten-Nijenhuis bracket.
inline HomGerstenhaberModel tangent_model(int n) {
    HomGerstenhaberModel m;
    m.rank = n;
    m.num_vars = n;
    m.alpha0 = PolySubstitution::identity(n);
    m.alpha1.assign(n, std::vector<Polynomial>(n, Polynomial(n)));
    m.anchor.assign(n, std::vector<Polynomial>(n, Polynomial(n)));
    for (int a = 0; a < n; ++a) {
        m.alpha1[a][a] = Polynomial::constant(n, Rational(1));
        m.anchor[a][a] = Polynomial::constant(n, Rational(1));
    }
    return m;
}

/// Schouten-Nijenhuis bracket: the unique Gerstenhaber extension of the Lie
/// bracket of vector fields and of [X, F] = X[F], with the degree -1 signs of
/// the graded bracket at alpha = identity.
inline PolyMultivectorField schouten(const PolyMultivectorField& X, const PolyMultivectorField& Y) {
    if (X.num_vars() != Y.num_vars() || X.rank() != Y.rank())
        throw DimensionError("schouten: dimension mismatch");
    return gerstenhaber_bracket(tangent_model(X.num_vars()), X, Y);
}

/// Exterior derivative d(f dx_I) = sum_i (df/dx_i) dx_i ^ dx_I; d o d = 0.
inline PolyForm de_rham_d(const PolyForm& w) {
    const int n = w.num_vars();
    PolyForm out(n, n);
    for (const auto& [I, f] : w.terms())
        for (int i = 1; i <= n; ++i) {
            Polynomial df = f.partial(i);
            if (df.is_zero()) continue;
            if (auto ws = wedge_sign({i}, I))
                out.add_term(ws->second, Rational(ws->first) * df);
        }
    return out;
}

namespace detail {

/// iota_{d_i} on a basis form index: removes i with the sign (-1)^{position}.
inline std::optional<std::pair<int, ExtIndex>> contract_one(int i, const ExtIndex& J) {
    auto it = std::find(J.begin(), J.end(), i);
    if (it == J.end()) return std::nullopt;
    int pos = static_cast<int>(it - J.begin());
    ExtIndex rest(J);
    rest.erase(rest.begin() + pos);
    return std::make_pair(pos % 2 == 0 ? 1 : -1, rest);
}

}  // namespace detail

/// Interior product under the pairing <d_I, dx_J> = delta_IJ on sorted
/// indices, contracting X's indices from the left (leftmost factor first),
/// so iota_{d1^d2}(dx1^dx2) = 1. Degrees deg X > deg w contribute zero.
inline PolyForm interior(const PolyMultivectorField& X, const PolyForm& w) {
    if (X.num_vars() != w.num_vars()) throw DimensionError("interior: dimension mismatch");
    const int n = w.num_vars();
    PolyForm out(n, n);
    for (const auto& [I, f] : X.terms())
        for (const auto& [J, g] : w.terms()) {
            int sign = 1;
            ExtIndex rest = J;
            bool ok = true;
            for (int i : I) {  // leftmost index of X contracts first
                auto c = detail::contract_one(i, rest);
                if (!c) { ok = false; break; }
                sign *= c->first;
                rest = c->second;
            }
            if (ok) out.add_term(rest, Rational(sign) * (f * g));
        }
    return out;
}

/// Scalar (degree-0) part of a form, as a polynomial.
inline Polynomial scalar_part(const MixedElement& x) {
    for (const auto& [I, f] : x.terms())
        if (I.empty()) return f;
    return Polynomial(x.num_vars());
}

/// Cartan formula L_X = iota_X o d + d o iota_X for a vector field X.
inline PolyForm lie_derivative(const PolyMultivectorField& X, const PolyForm& w) {
    if (X.homogeneous_degree().value_or(1) != 1)
        throw std::invalid_argument("lie_derivative: X must be a vector field (degree 1)");
    return interior(X, de_rham_d(w)) + de_rham_d(interior(X, w));
}

/// Full antisymmetric coefficient pi^{ij} of a bivector (pi^{ji} = -pi^{ij}).
inline Polynomial bivector_coeff(const PolyMultivectorField& pi, int i, int j) {
    const int n = pi.num_vars();
    if (i == j) return Polynomial(n);
    for (const auto& [I, f] : pi.terms()) {
        if (I.size() != 2) throw std::invalid_argument("bivector_coeff: not a bivector");
        if (I[0] == std::min(i, j) && I[1] == std::max(i, j)) return i < j ? f : -f;
    }
    return Polynomial(n);
}

/// Anchor map of a bivector: (pi# a)^j = sum_i a_i pi^{ij}, so that
/// (pi# a)[F] = pi(a, dF).
inline PolyMultivectorField pi_sharp(const PolyMultivectorField& pi, const PolyForm& a) {
    if (pi.homogeneous_degree().value_or(2) != 2)
        throw std::invalid_argument("pi_sharp: pi must be a bivector");
    if (a.homogeneous_degree().value_or(1) != 1)
        throw std::invalid_argument("pi_sharp: a must be a 1-form");
    const int n = pi.num_vars();
    PolyMultivectorField out(n, n);
    for (const auto& [J, ai] : a.terms()) {
        int i = J[0];
        for (int j = 1; j <= n; ++j) {
            Polynomial pij = bivector_coeff(pi, i, j);
            if (!pij.is_zero()) out.add_term({j}, ai * pij);
        }
    }
    return out;
}

/// Poisson pairing {F,G} = pi(dF, dG) = sum_{i<j} pi^{ij} (dF/dx_i dG/dx_j - dF/dx_j dG/dx_i).
inline Polynomial poisson_pairing(const PolyMultivectorField& pi, const Polynomial& F,
                                  const Polynomial& G) {
    const int n = pi.num_vars();
    Polynomial out(n);
    for (const auto& [I, p] : pi.terms()) {
        if (I.size() != 2) throw std::invalid_argument("poisson_pairing: not a bivector");
        int i = I[0], j = I[1];
        out += p * (F.partial(i) * G.partial(j) - F.partial(j) * G.partial(i));
    }
    return out;
}

/// phi preserves the bivector:  pi^{kl} o phi == sum_{ij} (d_i phi^k)(d_j phi^l) pi^{ij}
/// as exact polynomial identities for all k < l.
inline CheckReport bivector_pushforward_check(const PolyMultivectorField& pi, const PolyMap& phi) {
    CheckReport report;
    report.suite = "bivector_pushforward";
    const int n = pi.num_vars();
    if (phi.num_vars() != n) throw DimensionError("bivector_pushforward_check: dimension mismatch");
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
            Polynomial lhs = phi.apply(bivector_coeff(pi, k, l));
            Polynomial rhs(n);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    Polynomial pij = bivector_coeff(pi, i, j);
                    if (pij.is_zero()) continue;
                    rhs += pij * (phi.image(k).partial(i) * phi.image(l).partial(j) -
                                  phi.image(k).partial(j) * phi.image(l).partial(i));
                }
            if (lhs != rhs)
                report.fail("bivector_pushforward", "component (" + std::to_string(k) + "," +
                                std::to_string(l) + ")", lhs.str(), rhs.str());
        }
    return report;
}

/// True iff f o phi o phi is the zero polynomial. Over Q^n this is exactly
/// vanishing on the image of phi^2, since a polynomial vanishes on the image
/// of a polynomial map iff the composite is zero.
inline bool vanishes_on_image(const Polynomial& f, const PolyMap& phi) {
    return phi.apply(phi.apply(f)).is_zero();
}

/// Hom-Poisson manifold conditions: phi preserves pi, and every coefficient
/// of the Schouten square [pi,pi] vanishes on the image of phi^2.
inline CheckReport check_hom_poisson_manifold(const PolyMultivectorField& pi, const PolyMap& phi) {
    CheckReport report;
    report.suite = "hom_poisson_manifold";
    report.merge(bivector_pushforward_check(pi, phi));
    PolyMultivectorField sq = schouten(pi, pi);
    for (const auto& [I, f] : sq.terms())
        if (!vanishes_on_image(f, phi))
            report.fail("schouten_square_vanishes_on_image",
                        "[pi,pi] component " + ext_index_str(I),
                        (phi.apply(phi.apply(f))).str(), "0");
    return report;
}

/// Hom-Poisson algebra on C(Q^n) obtained by composition: product and bracket
/// both pulled back through phi. Requires the manifold conditions.
inline HomPoissonPolyModel hom_poisson_by_composition(const PolyMultivectorField& pi,
                                                      const PolyMap& phi) {
    CheckReport gate = check_hom_poisson_manifold(pi, phi);
    if (!gate.passed) throw PreconditionError(gate);
    HomPoissonPolyModel m;
    m.num_vars = pi.num_vars();
    m.mode = ProductMode::composed;
    m.alpha = phi;
    m.bracket = [pi, phi](const Polynomial& F, const Polynomial& G) {
        return phi.apply(poisson_pairing(pi, F, G));
    };
    return m;
}

/// The purely hom-Poisson variant: plain product, composed bracket.
inline HomPoissonPolyModel purely_hom_poisson_by_composition(const PolyMultivectorField& pi,
                                                             const PolyMap& phi) {
    HomPoissonPolyModel m = hom_poisson_by_composition(pi, phi);
    m.mode = ProductMode::plain;
    return m;
}

}  // namespace homcat
