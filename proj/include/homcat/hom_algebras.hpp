#pragma once

#include "homcat/check_report.hpp"
#include "homcat/linalg.hpp"
#include "homcat/polynomial.hpp"

#include <functional>
#include <string>
#include <vector>

namespace homcat {

/// A vector space with a skew bracket and a twisting map alpha. The hom-Lie
/// axioms (skew-symmetry, alpha compatibility, hom-Jacobi) are checkable
/// properties, not construction invariants, so non-examples can be
/// represented and fed to the checkers.
struct HomLieAlgebra {
    int dim = 0;
    StructureConstants bracket;
    QMatrix alpha;
};

/// Bilinear product plus twisting map; no symmetry assumption on the product.
struct HomAssociativeAlgebra {
    int dim = 0;
    StructureConstants product;
    QMatrix alpha;
};

inline std::string basis_pair_str(int i, int j) {
    return "(e" + std::to_string(i) + ", e" + std::to_string(j) + ")";
}
inline std::string basis_triple_str(int i, int j, int k) {
    return "(e" + std::to_string(i) + ", e" + std::to_string(j) + ", e" + std::to_string(k) + ")";
}

/// Hom-Jacobi identity [alpha(x),[y,z]] + [alpha(y),[z,x]] + [alpha(z),[x,y]] = 0
/// on all basis triples i < j < k, after a skew-symmetry check (which makes
/// the restriction to ordered triples sufficient).
inline CheckReport check_hom_jacobi(const HomLieAlgebra& g) {
    if (g.bracket.dim() != g.dim || g.alpha.rows() != g.dim || g.alpha.cols() != g.dim)
        throw DimensionError("check_hom_jacobi: dimension mismatch");
    CheckReport report;
    report.suite = "hom_jacobi";
    report.merge(check_skew_symmetry(g.bracket));
    int n = g.dim;
    auto br = [&](const QVec& x, const QVec& y) { return bracket_apply(g.bracket, x, y); };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                QVec x = QVec::basis(n, i), y = QVec::basis(n, j), z = QVec::basis(n, k);
                QVec jac = br(g.alpha.apply(x), br(y, z)) + br(g.alpha.apply(y), br(z, x)) +
                           br(g.alpha.apply(z), br(x, y));
                if (!jac.is_zero())
                    report.fail("hom_jacobi", basis_triple_str(i, j, k), jac.str(), QVec(n).str());
            }
    return report;
}

/// Full hom-Lie axiom suite: skew-symmetry, alpha compatibility with the
/// bracket, and the hom-Jacobi identity. Also notes whether alpha is
/// invertible; invertibility is reported but never required, since only the
/// compatibility equation enters any identity.
inline CheckReport check_hom_lie_algebra(const HomLieAlgebra& g) {
    CheckReport report;
    report.suite = "hom_lie";
    report.merge(is_bracket_automorphism(g.bracket, g.alpha));
    report.merge(check_hom_jacobi(g));
    report.note(std::string("alpha invertible: ") + (g.alpha.is_invertible() ? "yes" : "no"));
    return report;
}

/// Composition construction: replaces the bracket by alpha o bracket.
/// Requires alpha compatible with the bracket; rejects with the witness
/// otherwise. Whether the result is hom-Lie is equivalent to the bracket
/// restricting to a Lie bracket on im(alpha^2), which is what
/// is_lie_on_image decides.
inline HomLieAlgebra composition_hom_lie(const StructureConstants& bracket, const QMatrix& alpha) {
    CheckReport compat = is_bracket_automorphism(bracket, alpha);
    if (!compat.passed) throw PreconditionError(compat);
    int n = bracket.dim();
    StructureConstants composed(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            QVec v = alpha.apply(bracket.bracket_basis(i, j));
            for (int k = 1; k <= n; ++k) composed.set(i, j, k, v[k - 1]);
        }
    return HomLieAlgebra{n, composed, alpha};
}

/// Checks that the (plain) Jacobi identity and skew-symmetry hold on the
/// subspace im(alpha^2), using the columns of alpha^2 as a spanning set.
inline CheckReport is_lie_on_image(const StructureConstants& bracket, const QMatrix& alpha) {
    if (!alpha.is_square() || alpha.rows() != bracket.dim())
        throw DimensionError("is_lie_on_image: dimension mismatch");
    CheckReport report;
    report.suite = "lie_on_image";
    int n = bracket.dim();
    QMatrix a2 = alpha.power(2);
    std::vector<QVec> span;
    std::vector<int> origin;
    for (int c = 0; c < n; ++c) {
        QVec v = a2.column(c);
        if (!v.is_zero()) {
            span.push_back(v);
            origin.push_back(c + 1);
        }
    }
    auto name = [&](size_t a) { return "alpha^2(e" + std::to_string(origin[a]) + ")"; };
    auto br = [&](const QVec& x, const QVec& y) { return bracket_apply(bracket, x, y); };
    for (size_t a = 0; a < span.size(); ++a)
        for (size_t b = a; b < span.size(); ++b) {
            QVec lhs = br(span[a], span[b]);
            QVec rhs = Rational(-1) * br(span[b], span[a]);
            if (!(lhs == rhs))
                report.fail("skew_on_image", "(" + name(a) + ", " + name(b) + ")", lhs.str(), rhs.str());
        }
    if (!report.passed) return report;
    for (size_t a = 0; a < span.size(); ++a)
        for (size_t b = a + 1; b < span.size(); ++b)
            for (size_t c = b + 1; c < span.size(); ++c) {
                QVec jac = br(br(span[a], span[b]), span[c]) + br(br(span[b], span[c]), span[a]) +
                           br(br(span[c], span[a]), span[b]);
                if (!jac.is_zero())
                    report.fail("jacobi_on_image",
                                "(" + name(a) + ", " + name(b) + ", " + name(c) + ")", jac.str(),
                                QVec(n).str());
            }
    return report;
}

/// Hom-associativity mu(alpha(x), mu(y,z)) == mu(mu(x,y), alpha(z)) over all
/// basis triples (no symmetry to exploit).
inline CheckReport check_hom_associativity(const HomAssociativeAlgebra& a) {
    if (a.product.dim() != a.dim || a.alpha.rows() != a.dim || a.alpha.cols() != a.dim)
        throw DimensionError("check_hom_associativity: dimension mismatch");
    CheckReport report;
    report.suite = "hom_associativity";
    int n = a.dim;
    auto mu = [&](const QVec& x, const QVec& y) { return bracket_apply(a.product, x, y); };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                QVec x = QVec::basis(n, i), y = QVec::basis(n, j), z = QVec::basis(n, k);
                QVec lhs = mu(a.alpha.apply(x), mu(y, z));
                QVec rhs = mu(mu(x, y), a.alpha.apply(z));
                if (!(lhs == rhs))
                    report.fail("hom_associativity", basis_triple_str(i, j, k), lhs.str(), rhs.str());
            }
    return report;
}

/// Full hom-associative suite: alpha compatibility with mu plus
/// hom-associativity.
inline CheckReport check_hom_associative_algebra(const HomAssociativeAlgebra& a) {
    CheckReport report;
    report.suite = "hom_associative";
    report.merge(is_bracket_automorphism(a.product, a.alpha));
    report.merge(check_hom_associativity(a));
    return report;
}

/// Commutator [x,y] = mu(x,y) - mu(y,x) of a hom-associative algebra; the
/// result passes check_hom_jacobi whenever the input passes
/// check_hom_associativity (verified by the test suite, not enforced here).
inline HomLieAlgebra commutator_bracket(const HomAssociativeAlgebra& a) {
    int n = a.dim;
    StructureConstants c(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                c.set(i, j, k, a.product.get(i, j, k) - a.product.get(j, i, k));
    return HomLieAlgebra{n, c, a.alpha};
}

// ---------------------------------------------------------------------------
// Polynomial hom-Poisson models
// ---------------------------------------------------------------------------

enum class ProductMode { plain, composed };

/// Hom-Poisson structure on Q[x_1..x_n]. The product is either the plain
/// polynomial product or its composition with the algebra map; the bracket
/// is an evaluable bilinear operation (a closure over data) because brackets
/// such as the S(g) one have unbounded-degree outputs.
struct HomPoissonPolyModel {
    int num_vars = 0;
    ProductMode mode = ProductMode::plain;
    PolySubstitution alpha;
    std::function<Polynomial(const Polynomial&, const Polynomial&)> bracket;

    Polynomial product(const Polynomial& f, const Polynomial& g) const {
        Polynomial fg = f * g;
        return mode == ProductMode::composed ? alpha.apply(fg) : fg;
    }
};

namespace detail {

inline std::string mono_pair_str(const Polynomial& a, const Polynomial& b) {
    return "(" + a.str() + ", " + b.str() + ")";
}
inline std::string mono_triple_str(const Polynomial& a, const Polynomial& b, const Polynomial& c) {
    return "(" + a.str() + ", " + b.str() + ", " + c.str() + ")";
}

/// Shared part of the two hom-Poisson suites: checks on all monomial pairs
/// and triples of total degree <= degree_bound. This is evidence on a finite
/// family, not a proof; the identities are multilinear in the monomial
/// slots, so the degree bound is the only finite surrogate for "for all".
inline CheckReport check_poisson_common(const HomPoissonPolyModel& m, unsigned degree_bound,
                                        bool purely) {
    CheckReport report;
    report.suite = purely ? "purely_hom_poisson" : "hom_poisson";
    const int n = m.num_vars;
    std::vector<Polynomial> monos;
    for (const auto& e : monomials_up_to(n, degree_bound))
        monos.push_back(Polynomial::monomial(n, e, Rational(1)));
    auto al = [&](const Polynomial& f) { return m.alpha.apply(f); };
    auto mu = [&](const Polynomial& f, const Polynomial& g) { return m.product(f, g); };
    const auto& br = m.bracket;

    for (const auto& x : monos)
        for (const auto& y : monos) {
            if (x.degree() + y.degree() > degree_bound) continue;
            Polynomial xy = mu(x, y), yx = mu(y, x);
            if (xy != yx)
                report.fail("product_commutative", mono_pair_str(x, y), xy.str(), yx.str());
            Polynomial bs = br(x, y) + br(y, x);
            if (!bs.is_zero())
                report.fail("bracket_skew", mono_pair_str(x, y), br(x, y).str(), (-br(y, x)).str());
            Polynomial ba_l = al(br(x, y)), ba_r = br(al(x), al(y));
            if (ba_l != ba_r)
                report.fail("bracket_automorphism", mono_pair_str(x, y), ba_l.str(), ba_r.str());
            if (!purely) {
                Polynomial pa_l = al(mu(x, y)), pa_r = mu(al(x), al(y));
                if (pa_l != pa_r)
                    report.fail("product_automorphism", mono_pair_str(x, y), pa_l.str(), pa_r.str());
            }
        }

    for (const auto& x : monos)
        for (const auto& y : monos)
            for (const auto& z : monos) {
                if (x.degree() + y.degree() + z.degree() > degree_bound) continue;
                // item 1: associativity of the product (hommed or plain)
                Polynomial as_l = purely ? mu(x, mu(y, z)) : mu(al(x), mu(y, z));
                Polynomial as_r = purely ? mu(mu(x, y), z) : mu(mu(x, y), al(z));
                if (as_l != as_r)
                    report.fail(purely ? "associativity" : "hom_associativity",
                                mono_triple_str(x, y, z), as_l.str(), as_r.str());
                // item 2: hom-Jacobi of the bracket
                Polynomial jac = br(al(x), br(y, z)) + br(al(y), br(z, x)) + br(al(z), br(x, y));
                if (!jac.is_zero())
                    report.fail("hom_jacobi", mono_triple_str(x, y, z), jac.str(), "0");
                // item 3: Leibniz rule, first slot hommed or not
                Polynomial le_l = purely ? br(x, mu(y, z)) : br(al(x), mu(y, z));
                Polynomial le_r = mu(al(y), br(x, z)) + mu(br(x, y), al(z));
                if (le_l != le_r)
                    report.fail(purely ? "purely_leibniz" : "hom_leibniz",
                                mono_triple_str(x, y, z), le_l.str(), le_r.str());
            }
    report.note("checked on monomials of total degree <= " + std::to_string(degree_bound) +
                "; evidence, not proof");
    return report;
}

}  // namespace detail

inline CheckReport check_hom_poisson(const HomPoissonPolyModel& m, unsigned degree_bound) {
    return detail::check_poisson_common(m, degree_bound, /*purely=*/false);
}

inline CheckReport check_purely_hom_poisson(const HomPoissonPolyModel& m, unsigned degree_bound) {
    return detail::check_poisson_common(m, degree_bound, /*purely=*/true);
}

inline std::vector<std::vector<Rational>> matrix_rows(const QMatrix& m) {
    std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(m.cols()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c);
    return rows;
}

/// The S(g) hom-Poisson bracket on monomials, extended bilinearly:
///   {x^u, x^v} = sum_{i,j} u_i v_j [e_i,e_j] * alpha_S(x^{u-d_i} x^{v-d_j})
/// where alpha_S is the symmetric-power extension of alpha and [e_i,e_j] is
/// read off the structure constants as a linear polynomial.
inline Polynomial sym_poisson_bracket(const StructureConstants& c, const PolySubstitution& alpha_sub,
                                      const Polynomial& f, const Polynomial& g) {
    const int n = c.dim();
    if (f.num_vars() != n || g.num_vars() != n)
        throw DimensionError("sym_poisson_bracket: num_vars mismatch");
    Polynomial out(n);
    for (const auto& [u, cu] : f.terms())
        for (const auto& [v, cv] : g.terms()) {
            for (int i = 1; i <= n; ++i) {
                if (u[i - 1] == 0) continue;
                for (int j = 1; j <= n; ++j) {
                    if (v[j - 1] == 0) continue;
                    QVec bij = c.bracket_basis(i, j);
                    if (bij.is_zero()) continue;
                    Polynomial blin(n);
                    for (int k = 1; k <= n; ++k) {
                        MultiIndex ek(n, 0);
                        ek[k - 1] = 1;
                        blin.add_term(ek, bij[k - 1]);
                    }
                    MultiIndex rest(n);
                    for (int t = 0; t < n; ++t) rest[t] = u[t] + v[t];
                    rest[i - 1] -= 1;
                    rest[j - 1] -= 1;
                    Rational mult = cu * cv * Rational(static_cast<long long>(u[i - 1])) *
                                    Rational(static_cast<long long>(v[j - 1]));
                    out += mult * (blin * alpha_sub.apply(Polynomial::monomial(n, rest, Rational(1))));
                }
            }
        }
    return out;
}

/// Hom-Poisson model on S(g), identified with polynomials in dim(g)
/// variables: composed product mu_alpha and the double-sum bracket above.
/// Rejects inputs that fail the hom-Lie axiom suite.
inline HomPoissonPolyModel sym_poisson_from_hom_lie(const HomLieAlgebra& g) {
    CheckReport axioms = check_hom_lie_algebra(g);
    if (!axioms.passed) throw PreconditionError(axioms);
    HomPoissonPolyModel m;
    m.num_vars = g.dim;
    m.mode = ProductMode::composed;
    m.alpha = PolySubstitution::from_matrix(matrix_rows(g.alpha));
    m.bracket = [c = g.bracket, sub = m.alpha](const Polynomial& f, const Polynomial& h) {
        return sym_poisson_bracket(c, sub, f, h);
    };
    return m;
}

/// Verifies the dual-pairing expression for the S(g) bracket against the
/// double-sum formula on monomial pairs of total degree <= degree_bound:
///   {F,G} = sum_{i,j,k} c_{ij}^k * alpha_S(dF/dx_i) * alpha_S(dG/dx_j) * x_k.
/// Here evaluation at alpha*(a) (alpha* the transpose of alpha on the dual)
/// is the same substitution as the symmetric-power extension of alpha; the
/// convention alpha* = transpose is recorded in the project docs.
inline CheckReport check_dual_formula(const HomLieAlgebra& g, unsigned degree_bound) {
    CheckReport report;
    report.suite = "dual_formula";
    const int n = g.dim;
    PolySubstitution sub = PolySubstitution::from_matrix(matrix_rows(g.alpha));
    auto monos = monomials_up_to(n, degree_bound);
    for (const auto& eu : monos)
        for (const auto& ev : monos) {
            if (total_degree(eu) + total_degree(ev) > degree_bound) continue;
            Polynomial F = Polynomial::monomial(n, eu, Rational(1));
            Polynomial G = Polynomial::monomial(n, ev, Rational(1));
            Polynomial lhs = sym_poisson_bracket(g.bracket, sub, F, G);
            Polynomial rhs(n);
            for (const auto& [key, coeff] : g.bracket.entries()) {
                auto [i, j, k] = key;
                Polynomial term = sub.apply(F.partial(i)) * sub.apply(G.partial(j));
                term = term * Polynomial::variable(n, k);
                rhs += coeff * term;
            }
            if (lhs != rhs)
                report.fail("dual_formula", detail::mono_pair_str(F, G), lhs.str(), rhs.str());
        }
    return report;
}

// ---------------------------------------------------------------------------
// Representations
// ---------------------------------------------------------------------------

/// Representation data (rho, alpha_V): one m x m matrix per basis element of
/// g plus the twisting map on V.
struct Representation {
    std::vector<QMatrix> rho;
    QMatrix alphaV;

    int space_dim() const { return alphaV.rows(); }

    /// rho extended linearly to an arbitrary element of g.
    QMatrix rho_of(const QVec& v) const {
        QMatrix out(space_dim(), space_dim());
        for (int k = 0; k < v.dim(); ++k) {
            if (v[k].is_zero()) continue;
            for (int r = 0; r < out.rows(); ++r)
                for (int c = 0; c < out.cols(); ++c) out.at(r, c) += v[k] * rho[k].at(r, c);
        }
        return out;
    }
};

/// Representation axioms:
///   rho(alpha(x)) o alpha_V == alpha_V o rho(x)                (all basis x)
///   rho([x,y]) o alpha_V == rho(alpha(x)) rho(y) - rho(alpha(y)) rho(x)
inline CheckReport check_representation(const HomLieAlgebra& g, const Representation& r) {
    CheckReport report;
    report.suite = "representation";
    const int n = g.dim;
    if (static_cast<int>(r.rho.size()) != n)
        throw DimensionError("check_representation: rho count != dim g");
    for (const auto& m : r.rho)
        if (m.rows() != r.space_dim() || m.cols() != r.space_dim())
            throw DimensionError("check_representation: rho matrix size mismatch");
    for (int i = 1; i <= n; ++i) {
        QMatrix lhs = r.rho_of(g.alpha.apply(QVec::basis(n, i))) * r.alphaV;
        QMatrix rhs = r.alphaV * r.rho[i - 1];
        if (!(lhs == rhs))
            report.fail("rep_alpha_compat", "e" + std::to_string(i), lhs.str(), rhs.str());
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            QMatrix lhs = r.rho_of(g.bracket.bracket_basis(i, j)) * r.alphaV;
            QMatrix rhs = r.rho_of(g.alpha.apply(QVec::basis(n, i))) * r.rho[j - 1] -
                          r.rho_of(g.alpha.apply(QVec::basis(n, j))) * r.rho[i - 1];
            if (!(lhs == rhs))
                report.fail("rep_bracket_compat", basis_pair_str(i, j), lhs.str(), rhs.str());
        }
    return report;
}

/// The alpha^s-adjoint representation ad^s_x y = [alpha^s(x), y], returned as
/// matrices together with alpha_V = alpha.
inline Representation adjoint_rep(const HomLieAlgebra& g, unsigned s) {
    const int n = g.dim;
    QMatrix as = g.alpha.power(s);
    Representation r;
    r.alphaV = g.alpha;
    for (int i = 1; i <= n; ++i) {
        QMatrix m(n, n);
        QVec asei = as.apply(QVec::basis(n, i));
        for (int j = 1; j <= n; ++j) {
            QVec col = bracket_apply(g.bracket, asei, QVec::basis(n, j));
            for (int rrow = 0; rrow < n; ++rrow) m.at(rrow, j - 1) = col[rrow];
        }
        r.rho.push_back(m);
    }
    return r;
}

/// The adjoint operator identity
///   ad^s_{[x,y]} o alpha == ad^s_{alpha(x)} o ad^s_y - ad^s_{alpha(y)} o ad^s_x
/// as exact matrix equalities over all basis pairs.
inline CheckReport check_adjoint_identity(const HomLieAlgebra& g, unsigned s) {
    CheckReport report;
    report.suite = "adjoint_identity_s" + std::to_string(s);
    const int n = g.dim;
    Representation r = adjoint_rep(g, s);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            QMatrix lhs = r.rho_of(g.bracket.bracket_basis(i, j)) * g.alpha;
            QMatrix rhs = r.rho_of(g.alpha.apply(QVec::basis(n, i))) * r.rho[j - 1] -
                          r.rho_of(g.alpha.apply(QVec::basis(n, j))) * r.rho[i - 1];
            if (!(lhs == rhs))
                report.fail("adjoint_identity", basis_pair_str(i, j), lhs.str(), rhs.str());
        }
    return report;
}

}  // namespace homcat
