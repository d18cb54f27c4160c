#pragma once

#include "homcat/check_report.hpp"
#include "homcat/polynomial.hpp"
#include "homcat/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>
#include <vector>

namespace homcat {

/// Vector over Q with a fixed dimension.
class QVec {
public:
    QVec() = default;
    explicit QVec(int dim) : coeffs_(dim, Rational(0)) {}
    explicit QVec(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

    static QVec basis(int dim, int i) {  // e_i, 1-based
        QVec v(dim);
        v.coeffs_.at(i - 1) = Rational(1);
        return v;
    }

    int dim() const { return static_cast<int>(coeffs_.size()); }
    const Rational& operator[](int i) const { return coeffs_[i]; }  // 0-based
    Rational& operator[](int i) { return coeffs_[i]; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    QVec& operator+=(const QVec& o) {
        check_dim(o.dim());
        for (int i = 0; i < dim(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    friend QVec operator+(QVec a, const QVec& b) { return a += b; }
    friend QVec operator-(const QVec& a, const QVec& b) { return a + (Rational(-1) * b); }
    friend QVec operator*(const Rational& c, QVec v) {
        for (auto& x : v.coeffs_) x = c * x;
        return v;
    }
    friend bool operator==(const QVec& a, const QVec& b) { return a.coeffs_ == b.coeffs_; }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (int i = 0; i < dim(); ++i) os << (i ? ", " : "") << coeffs_[i].str();
        os << ")";
        return os.str();
    }

private:
    void check_dim(int d) const {
        if (d != dim()) throw DimensionError("QVec: dimension mismatch");
    }
    std::vector<Rational> coeffs_;
};

/// Dense rational matrix, row-major. Acts on coordinate vectors on the left,
/// so column j holds the image of the j-th basis vector.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

    static QMatrix identity(int n) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    static QMatrix diagonal(const std::vector<Rational>& d) {
        QMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (int i = 0; i < m.rows(); ++i) m.at(i, i) = d[i];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rational& at(int r, int c) const { return entries_[r * cols_ + c]; }
    Rational& at(int r, int c) { return entries_[r * cols_ + c]; }

    QVec apply(const QVec& v) const {
        if (v.dim() != cols_) throw DimensionError("QMatrix::apply: dimension mismatch");
        QVec out(rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
        return out;
    }

    QVec column(int c) const {  // 0-based
        QVec out(rows_);
        for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
        return out;
    }

    QMatrix transpose() const {
        QMatrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("QMatrix: product dimension mismatch");
        QMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }

    friend QMatrix operator-(const QMatrix& a, const QMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionError("QMatrix: sum dimension mismatch");
        QMatrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] = a.entries_[i] - b.entries_[i];
        return r;
    }

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    QMatrix power(unsigned s) const {
        if (!is_square()) throw DimensionError("QMatrix::power: not square");
        QMatrix acc = identity(rows_);
        for (unsigned k = 0; k < s; ++k) acc = acc * (*this);
        return acc;
    }

    /// Rank by exact Gaussian elimination; invertibility = full rank.
    int rank() const {
        std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) m[r][c] = at(r, c);
        int rank = 0;
        for (int col = 0; col < cols_ && rank < rows_; ++col) {
            int pivot = -1;
            for (int r = rank; r < rows_; ++r)
                if (!m[r][col].is_zero()) { pivot = r; break; }
            if (pivot < 0) continue;
            std::swap(m[rank], m[pivot]);
            for (int r = rank + 1; r < rows_; ++r) {
                if (m[r][col].is_zero()) continue;
                Rational f = m[r][col] / m[rank][col];
                for (int c = col; c < cols_; ++c) m[r][c] -= f * m[rank][c];
            }
            ++rank;
        }
        return rank;
    }

    bool is_invertible() const { return is_square() && rank() == rows_; }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (int r = 0; r < rows_; ++r) {
            os << (r ? "; " : "");
            for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).str();
        }
        os << "]";
        return os.str();
    }

private:
    int rows_, cols_;
    std::vector<Rational> entries_;
};

/// Structure constants of a bilinear map [e_i, e_j] = sum_k c_{ij}^k e_k.
/// Skew-symmetry is a checkable property, not an invariant, so non-examples
/// are representable.
class StructureConstants {
public:
    using Key = std::tuple<int, int, int>;  // (i, j, k), 1-based

    StructureConstants() : dim_(0) {}
    explicit StructureConstants(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    const std::map<Key, Rational>& entries() const { return entries_; }

    void set(int i, int j, int k, const Rational& c) {
        check_index(i); check_index(j); check_index(k);
        if (c.is_zero()) entries_.erase({i, j, k});
        else entries_[{i, j, k}] = c;
    }

    /// Convenience: set [e_i, e_j] = c e_k and [e_j, e_i] = -c e_k.
    void set_skew(int i, int j, int k, const Rational& c) {
        set(i, j, k, c);
        set(j, i, k, -c);
    }

    Rational get(int i, int j, int k) const {
        auto it = entries_.find({i, j, k});
        return it == entries_.end() ? Rational(0) : it->second;
    }

    /// [e_i, e_j] as a coordinate vector.
    QVec bracket_basis(int i, int j) const {
        QVec out(dim_);
        for (int k = 1; k <= dim_; ++k) out[k - 1] = get(i, j, k);
        return out;
    }

    friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

private:
    void check_index(int i) const {
        if (i < 1 || i > dim_) throw std::out_of_range("StructureConstants: index out of range");
    }
    int dim_;
    std::map<Key, Rational> entries_;
};

/// Bilinear expansion [x, y] = sum_{i,j,k} x_i y_j c_{ij}^k e_k.
inline QVec bracket_apply(const StructureConstants& c, const QVec& x, const QVec& y) {
    if (x.dim() != c.dim() || y.dim() != c.dim())
        throw DimensionError("bracket_apply: dimension mismatch");
    QVec out(c.dim());
    for (const auto& [key, coeff] : c.entries()) {
        auto [i, j, k] = key;
        out[k - 1] += x[i - 1] * y[j - 1] * coeff;
    }
    return out;
}

/// Strictly increasing sequence of basis indices in {1..n}; the empty
/// sequence is the degree-0 basis element 1.
using ExtIndex = std::vector<int>;

/// Canonical order on exterior indices: by degree, then lexicographic.
struct ExtIndexLess {
    bool operator()(const ExtIndex& a, const ExtIndex& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline std::string ext_index_str(const ExtIndex& I) {
    if (I.empty()) return "1";
    std::string s = "e{";
    for (size_t t = 0; t < I.size(); ++t) s += (t ? "," : "") + std::to_string(I[t]);
    return s + "}";
}

/// e_I ^ e_J = sign * e_K with K the sorted merge, or nullopt when the index
/// sets intersect. The sign is the parity of the merge permutation.
inline std::optional<std::pair<int, ExtIndex>> wedge_sign(const ExtIndex& I, const ExtIndex& J) {
    int inversions = 0;
    for (int a : I)
        for (int b : J) {
            if (a == b) return std::nullopt;
            if (b < a) ++inversions;
        }
    ExtIndex K;
    K.reserve(I.size() + J.size());
    std::merge(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(K));
    return std::make_pair(inversions % 2 == 0 ? 1 : -1, K);
}

/// All strictly increasing index sequences in {1..n} of degree <= max_degree.
inline std::vector<ExtIndex> ext_indices_up_to(int n, int max_degree) {
    std::vector<ExtIndex> out;
    ExtIndex cur;
    auto rec = [&](auto&& self, int next) -> void {
        out.push_back(cur);
        if (static_cast<int>(cur.size()) >= max_degree) return;
        for (int i = next; i <= n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(), ExtIndexLess{});
    return out;
}

/// Element of the exterior algebra over an n-dimensional space, as a sparse
/// rational combination of basis wedges; mixed degree allowed.
class GradedElement {
public:
    using TermMap = std::map<ExtIndex, Rational, ExtIndexLess>;

    GradedElement() : dim_(0) {}
    explicit GradedElement(int dim) : dim_(dim) {}

    static GradedElement basis(int dim, const ExtIndex& I) {
        GradedElement g(dim);
        g.add_term(I, Rational(1));
        return g;
    }

    int dim() const { return dim_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const ExtIndex& I, const Rational& c) {
        if (c.is_zero()) return;
        for (int i : I)
            if (i < 1 || i > dim_) throw std::out_of_range("GradedElement: index out of range");
        auto [it, inserted] = terms_.try_emplace(I, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Degree when homogeneous; nullopt for mixed or zero elements.
    std::optional<int> homogeneous_degree() const {
        std::optional<int> deg;
        for (const auto& [I, c] : terms_) {
            int d = static_cast<int>(I.size());
            if (deg && *deg != d) return std::nullopt;
            deg = d;
        }
        return deg;
    }

    GradedElement& operator+=(const GradedElement& o) {
        if (dim_ != o.dim_) throw DimensionError("GradedElement: dimension mismatch");
        for (const auto& [I, c] : o.terms_) add_term(I, c);
        return *this;
    }
    friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
    friend GradedElement operator*(const Rational& c, const GradedElement& g) {
        GradedElement r(g.dim_);
        if (c.is_zero()) return r;
        for (const auto& [I, gc] : g.terms_) r.terms_[I] = c * gc;
        return r;
    }
    friend GradedElement operator-(const GradedElement& a, const GradedElement& b) {
        return a + Rational(-1) * b;
    }

    friend GradedElement wedge(const GradedElement& a, const GradedElement& b) {
        if (a.dim_ != b.dim_) throw DimensionError("wedge: dimension mismatch");
        GradedElement r(a.dim_);
        for (const auto& [I, ca] : a.terms_)
            for (const auto& [J, cb] : b.terms_)
                if (auto w = wedge_sign(I, J))
                    r.add_term(w->second, Rational(w->first) * ca * cb);
        return r;
    }

    friend bool operator==(const GradedElement& a, const GradedElement& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [I, c] : terms_) {
            if (!first) os << " + ";
            os << c.str() << "*" << ext_index_str(I);
            first = false;
        }
        return os.str();
    }

private:
    int dim_;
    TermMap terms_;
};

/// Degree-0 algebra endomorphism of the exterior algebra acting as alpha on
/// degree 1 and as the identity on degree 0.
class ExteriorEndo {
public:
    explicit ExteriorEndo(QMatrix alpha) : alpha_(std::move(alpha)) {
        if (!alpha_.is_square()) throw DimensionError("ExteriorEndo: matrix not square");
    }

    GradedElement apply(const GradedElement& x) const {
        if (x.dim() != alpha_.rows()) throw DimensionError("ExteriorEndo: dimension mismatch");
        GradedElement out(x.dim());
        for (const auto& [I, c] : x.terms()) {
            GradedElement term(x.dim());
            term.add_term({}, c);
            for (int i : I) {
                GradedElement img(x.dim());
                QVec col = alpha_.column(i - 1);
                for (int r = 0; r < x.dim(); ++r) img.add_term({r + 1}, col[r]);
                term = wedge(term, img);
            }
            out += term;
        }
        return out;
    }

private:
    QMatrix alpha_;
};

inline ExteriorEndo extend_endo_exterior(const QMatrix& alpha) { return ExteriorEndo(alpha); }

/// Checks alpha([e_i, e_j]) == [alpha(e_i), alpha(e_j)] on all basis pairs,
/// which suffices by bilinearity. Witnesses carry both sides.
inline CheckReport is_bracket_automorphism(const StructureConstants& c, const QMatrix& alpha) {
    if (!alpha.is_square() || alpha.rows() != c.dim())
        throw DimensionError("is_bracket_automorphism: dimension mismatch");
    CheckReport report;
    report.suite = "bracket_automorphism";
    int n = c.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            QVec lhs = alpha.apply(c.bracket_basis(i, j));
            QVec rhs = bracket_apply(c, alpha.apply(QVec::basis(n, i)), alpha.apply(QVec::basis(n, j)));
            if (!(lhs == rhs))
                report.fail("bracket_automorphism",
                            "(e" + std::to_string(i) + ", e" + std::to_string(j) + ")",
                            lhs.str(), rhs.str());
        }
    return report;
}

/// Skew-symmetry c_{ij}^k == -c_{ji}^k on all pairs (diagonal must vanish).
inline CheckReport check_skew_symmetry(const StructureConstants& c) {
    CheckReport report;
    report.suite = "skew_symmetry";
    int n = c.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            QVec lhs = c.bracket_basis(i, j);
            QVec rhs = Rational(-1) * c.bracket_basis(j, i);
            if (!(lhs == rhs))
                report.fail("skew_symmetry",
                            "(e" + std::to_string(i) + ", e" + std::to_string(j) + ")",
                            lhs.str(), rhs.str());
        }
    return report;
}

}  // namespace homcat
