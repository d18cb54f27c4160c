#pragma once

#include "homcat/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace homcat {

/// Thrown when operands live over different variable counts / dimensions.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Monomial exponent vector; length is fixed to the ring's variable count.
using MultiIndex = std::vector<unsigned>;

inline unsigned total_degree(const MultiIndex& m) {
    return std::accumulate(m.begin(), m.end(), 0u);
}

/// Graded-lexicographic order: first by total degree, ties broken by the
/// ascending lexicographic order of the exponent vector. This is the
/// canonical term order used for serialization and equality.
struct GrlexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

/// Sparse multivariate polynomial over the rationals.
///
/// Terms map exponent vectors to nonzero coefficients; a zero polynomial has
/// no terms. num_vars == 0 is allowed and models the constants.
class Polynomial {
public:
    using TermMap = std::map<MultiIndex, Rational, GrlexLess>;

    Polynomial() : num_vars_(0) {}
    explicit Polynomial(int num_vars) : num_vars_(num_vars) {
        if (num_vars < 0) throw std::invalid_argument("Polynomial: negative num_vars");
    }

    static Polynomial zero(int n) { return Polynomial(n); }

    static Polynomial constant(int n, const Rational& c) {
        Polynomial p(n);
        if (!c.is_zero()) p.terms_[MultiIndex(n, 0)] = c;
        return p;
    }

    /// The coordinate x_i, 1-based.
    static Polynomial variable(int n, int i) {
        if (i < 1 || i > n) throw std::out_of_range("Polynomial::variable: index out of range");
        MultiIndex m(n, 0);
        m[i - 1] = 1;
        Polynomial p(n);
        p.terms_[m] = Rational(1);
        return p;
    }

    static Polynomial monomial(int n, const MultiIndex& exps, const Rational& c) {
        if (static_cast<int>(exps.size()) != n)
            throw DimensionError("Polynomial::monomial: exponent length mismatch");
        Polynomial p(n);
        if (!c.is_zero()) p.terms_[exps] = c;
        return p;
    }

    int num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    unsigned degree() const {  // degree of 0 is 0 by convention
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
        return d;
    }

    Rational coeff(const MultiIndex& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const MultiIndex& m, const Rational& c) {
        if (static_cast<int>(m.size()) != num_vars_)
            throw DimensionError("Polynomial::add_term: exponent length mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r(num_vars_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_same_vars(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_same_vars(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same_vars(b);
        Polynomial r(a.num_vars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                MultiIndex m(a.num_vars_);
                for (int i = 0; i < a.num_vars_; ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        Polynomial r(p.num_vars_);
        if (c.is_zero()) return r;
        for (const auto& [m, pc] : p.terms_) r.terms_[m] = c * pc;
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Exact partial derivative with respect to x_i (1-based).
    Polynomial partial(int i) const {
        if (i < 1 || i > num_vars_) throw std::out_of_range("Polynomial::partial: index out of range");
        Polynomial r(num_vars_);
        for (const auto& [m, c] : terms_) {
            if (m[i - 1] == 0) continue;
            MultiIndex d = m;
            d[i - 1] -= 1;
            r.add_term(d, c * Rational(static_cast<long long>(m[i - 1])));
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << (c > Rational(0) ? " + " : " - ");
            else if (c < Rational(0)) os << "-";
            Rational a = c < Rational(0) ? -c : c;
            bool hasvars = total_degree(m) > 0;
            if (!a.is_one() || !hasvars) os << a.str();
            bool firstvar = !a.is_one() || !hasvars;
            for (int i = 0; i < num_vars_; ++i) {
                if (m[i] == 0) continue;
                if (firstvar) os << "*";
                firstvar = true;
                os << "x" << (i + 1);
                if (m[i] > 1) os << "^" << m[i];
            }
            first = false;
        }
        return os.str();
    }

private:
    void check_same_vars(const Polynomial& o) const {
        if (num_vars_ != o.num_vars_) throw DimensionError("Polynomial: num_vars mismatch");
    }

    int num_vars_;
    TermMap terms_;
};

inline Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }
inline Polynomial poly_partial(const Polynomial& f, int i) { return f.partial(i); }

/// Substitution endomorphism of Q[x_1..x_n]: x_i |-> images[i-1].
///
/// Acts on a polynomial as composition with the polynomial map
/// phi = (images[0], ..., images[n-1]); models the pullback F |-> F o phi.
class PolySubstitution {
public:
    PolySubstitution() = default;
    explicit PolySubstitution(std::vector<Polynomial> images) : images_(std::move(images)) {
        for (const auto& p : images_)
            if (p.num_vars() != num_vars())
                throw DimensionError("PolySubstitution: image num_vars mismatch");
    }

    static PolySubstitution identity(int n) {
        std::vector<Polynomial> imgs;
        imgs.reserve(n);
        for (int i = 1; i <= n; ++i) imgs.push_back(Polynomial::variable(n, i));
        return PolySubstitution(std::move(imgs));
    }

    /// Linear substitution x_i |-> sum_j M[j][i] x_j: the substitution that
    /// extends the vector map e_i |-> column i of M multiplicatively.
    static PolySubstitution from_matrix(const std::vector<std::vector<Rational>>& m) {
        int n = static_cast<int>(m.size());
        std::vector<Polynomial> imgs;
        imgs.reserve(n);
        for (int i = 0; i < n; ++i) {
            Polynomial img(n);
            for (int j = 0; j < n; ++j) {
                if (static_cast<int>(m[j].size()) != n)
                    throw DimensionError("PolySubstitution::from_matrix: not square");
                MultiIndex e(n, 0);
                e[j] = 1;
                img.add_term(e, m[j][i]);
            }
            imgs.push_back(std::move(img));
        }
        return PolySubstitution(std::move(imgs));
    }

    int num_vars() const { return static_cast<int>(images_.size()); }
    const std::vector<Polynomial>& images() const { return images_; }
    const Polynomial& image(int i) const { return images_.at(i - 1); }

    bool is_identity() const {
        for (int i = 1; i <= num_vars(); ++i)
            if (images_[i - 1] != Polynomial::variable(num_vars(), i)) return false;
        return true;
    }

    /// f o phi, computed exactly. Ring homomorphism in f.
    Polynomial apply(const Polynomial& f) const {
        if (f.num_vars() != num_vars()) throw DimensionError("poly_substitute: num_vars mismatch");
        int n = num_vars();
        Polynomial result(n);
        for (const auto& [m, c] : f.terms()) {
            Polynomial term = Polynomial::constant(n, c);
            for (int i = 0; i < n; ++i)
                for (unsigned k = 0; k < m[i]; ++k) term = term * images_[i];
            result += term;
        }
        return result;
    }

    friend bool operator==(const PolySubstitution& a, const PolySubstitution& b) {
        return a.images_ == b.images_;
    }

private:
    std::vector<Polynomial> images_;
};

inline Polynomial poly_substitute(const Polynomial& f, const PolySubstitution& phi) {
    return phi.apply(f);
}

/// Composition convention fixed by the pullback identity
///   poly_substitute(f, substitution_compose(phi, psi))
///     == poly_substitute(poly_substitute(f, phi), psi),
/// i.e. (phi o psi)* == psi* o phi*. The result's images are psi substituted
/// into phi's coordinates; for linear substitutions this is the matrix
/// product phi * psi.
inline PolySubstitution substitution_compose(const PolySubstitution& phi,
                                             const PolySubstitution& psi) {
    if (phi.num_vars() != psi.num_vars())
        throw DimensionError("substitution_compose: num_vars mismatch");
    std::vector<Polynomial> imgs;
    imgs.reserve(phi.num_vars());
    for (const auto& f : phi.images()) imgs.push_back(psi.apply(f));
    return PolySubstitution(std::move(imgs));
}

/// All exponent vectors in n variables with total degree <= d, in grlex order.
inline std::vector<MultiIndex> monomials_up_to(int n, unsigned d) {
    std::vector<MultiIndex> out;
    MultiIndex cur(n, 0);
    // depth-first over positions; n == 0 contributes just the empty monomial
    auto rec = [&](auto&& self, int pos, unsigned remaining) -> void {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

}  // namespace homcat
