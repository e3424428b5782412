#include "koszul/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace koszul {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
            s.end());
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::size_t bit_size(const Rational& r) {
    return mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
}

SparseVec sparse_from_dense(const std::vector<Rational>& dense) {
    SparseVec out;
    for (int i = 0; i < static_cast<int>(dense.size()); ++i)
        if (sgn(dense[i]) != 0) out.emplace_back(i, dense[i]);
    return out;
}

std::vector<Rational> dense_from_sparse(const SparseVec& v, int n) {
    std::vector<Rational> out(n);
    for (const auto& [i, x] : v) out[i] = x;
    return out;
}

SparseVec axpy(const SparseVec& a, const Rational& c, const SparseVec& b) {
    if (sgn(c) == 0 || b.empty()) return a;
    if (a.empty()) return scaled(b, c);
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, c * b[j].second);
            ++j;
        } else {
            Rational v = a[i].second + c * b[j].second;
            if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec scaled(const SparseVec& a, const Rational& c) {
    if (sgn(c) == 0) return {};
    if (c == 1) return a;
    SparseVec out = a;
    for (auto& [i, x] : out) x *= c;
    return out;
}

Rational entry(const SparseVec& v, int index) {
    auto it = std::lower_bound(v.begin(), v.end(), index,
                               [](const auto& p, int k) { return p.first < k; });
    if (it != v.end() && it->first == index) return it->second;
    return 0;
}

Rational dot(const SparseVec& a, const SparseVec& b) {
    Rational s = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) ++i;
        else if (b[j].first < a[i].first) ++j;
        else s += a[i++].second * b[j++].second;
    }
    return s;
}

void SparseAccumulator::add(int index, const Rational& value) {
    if (sgn(value) != 0) terms_.emplace_back(index, value);
}

void SparseAccumulator::add(const SparseVec& v, const Rational& scale) {
    if (sgn(scale) == 0) return;
    if (scale == 1)
        terms_.insert(terms_.end(), v.begin(), v.end());
    else
        for (const auto& [i, x] : v) terms_.emplace_back(i, x * scale);
}

SparseVec SparseAccumulator::take() {
    if (terms_.size() == 1) {
        SparseVec out;
        if (sgn(terms_[0].second) != 0) out.push_back(std::move(terms_[0]));
        terms_.clear();
        return out;
    }
    std::stable_sort(terms_.begin(), terms_.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec out;
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second += t.second;
        } else {
            if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
    terms_.clear();
    return out;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.data_[i].emplace_back(i, 1);
    return m;
}

Matrix Matrix::from_rows(int cols, std::vector<SparseVec> rows) {
    Matrix m(static_cast<int>(rows.size()), cols);
    m.data_ = std::move(rows);
    return m;
}

Matrix Matrix::from_columns(int rows, const std::vector<SparseVec>& columns) {
    Matrix m(rows, static_cast<int>(columns.size()));
    for (int c = 0; c < static_cast<int>(columns.size()); ++c)
        for (const auto& [r, x] : columns[c]) m.data_[r].emplace_back(c, x);
    return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Rational>>& dense) {
    int r = static_cast<int>(dense.size());
    int c = r ? static_cast<int>(dense[0].size()) : 0;
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) m.data_[i] = sparse_from_dense(dense[i]);
    return m;
}

std::size_t Matrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

void Matrix::set_row(int r, SparseVec v) { data_[r] = std::move(v); }

Rational Matrix::at(int r, int c) const { return entry(data_[r], c); }

void Matrix::set(int r, int c, const Rational& v) {
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& p, int k) { return p.first < k; });
    if (it != row.end() && it->first == c) {
        if (sgn(v) == 0) row.erase(it);
        else it->second = v;
    } else if (sgn(v) != 0) {
        row.insert(it, {c, v});
    }
}

void Matrix::add(int r, int c, const Rational& v) { set(r, c, at(r, c) + v); }

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, x] : data_[r]) t.data_[c].emplace_back(r, x);
    return t;
}

std::vector<SparseVec> Matrix::columns() const { return transpose().data_; }

SparseVec Matrix::column(int c) const {
    SparseVec out;
    for (int r = 0; r < rows_; ++r) {
        Rational x = at(r, c);
        if (sgn(x) != 0) out.emplace_back(r, x);
    }
    return out;
}

SparseVec Matrix::apply(const SparseVec& v) const {
    SparseVec out;
    for (int r = 0; r < rows_; ++r) {
        Rational x = dot(data_[r], v);
        if (sgn(x) != 0) out.emplace_back(r, std::move(x));
    }
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& r : data_)
        if (!r.empty()) return false;
    return true;
}

std::vector<std::vector<Rational>> Matrix::to_dense() const {
    std::vector<std::vector<Rational>> d(rows_, std::vector<Rational>(cols_));
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, x] : data_[r]) d[r][c] = x;
    return d;
}

Matrix Matrix::submatrix(const std::vector<int>& row_ids, const std::vector<int>& col_ids) const {
    std::vector<int> remap(cols_, -1);
    for (int j = 0; j < static_cast<int>(col_ids.size()); ++j) remap[col_ids[j]] = j;
    Matrix m(static_cast<int>(row_ids.size()), static_cast<int>(col_ids.size()));
    for (int i = 0; i < static_cast<int>(row_ids.size()); ++i) {
        SparseAccumulator acc;
        for (const auto& [c, x] : data_[row_ids[i]])
            if (remap[c] >= 0) acc.add(remap[c], x);
        m.data_[i] = acc.take();
    }
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix m(a.rows_, b.cols_);
    SparseAccumulator acc;
    for (int r = 0; r < a.rows_; ++r) {
        const SparseVec& row = a.data_[r];
        if (row.size() == 1) {
            m.data_[r] = scaled(b.data_[row[0].first], row[0].second);
            continue;
        }
        for (const auto& [k, x] : row) acc.add(b.data_[k], x);
        m.data_[r] = acc.take();
    }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum: dimension mismatch");
    Matrix m(a.rows_, a.cols_);
    for (int r = 0; r < a.rows_; ++r) m.data_[r] = axpy(a.data_[r], 1, b.data_[r]);
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix difference: dimension mismatch");
    Matrix m(a.rows_, a.cols_);
    for (int r = 0; r < a.rows_; ++r) m.data_[r] = axpy(a.data_[r], -1, b.data_[r]);
    return m;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix m(a.rows_, a.cols_);
    for (int r = 0; r < a.rows_; ++r) m.data_[r] = scaled(a.data_[r], s);
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// ----------------------------------------------------------- elimination

namespace {

std::size_t pick_pivot(const std::vector<SparseVec>& group) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < group.size(); ++k) {
        std::size_t bk = bit_size(group[k][0].second), bb = bit_size(group[best][0].second);
        if (bk < bb || (bk == bb && group[k].size() < group[best].size())) best = k;
    }
    return best;
}

void back_substitute(Echelon& e) {
    int n = static_cast<int>(e.rows.size());
    // Column lookup of which rows touch each pivot column keeps this near-linear in fill.
    for (int i = n - 1; i >= 0; --i) {
        int p = e.pivots[i];
        for (int j = 0; j < i; ++j) {
            Rational x = entry(e.rows[j], p);
            if (sgn(x) != 0) e.rows[j] = axpy(e.rows[j], -x, e.rows[i]);
        }
    }
}

Echelon eliminate_sparse(std::vector<SparseVec> rows, bool reduced) {
    std::map<int, std::vector<SparseVec>> buckets;
    for (auto& r : rows)
        if (!r.empty()) buckets[r[0].first].push_back(std::move(r));
    Echelon out;
    while (!buckets.empty()) {
        auto it = buckets.begin();
        int c = it->first;
        std::vector<SparseVec> group = std::move(it->second);
        buckets.erase(it);
        std::size_t best = pick_pivot(group);
        SparseVec piv = std::move(group[best]);
        Rational inv = 1 / piv[0].second;
        for (auto& [k, x] : piv) x *= inv;
        for (std::size_t k = 0; k < group.size(); ++k) {
            if (k == best) continue;
            Rational lead = group[k][0].second;
            SparseVec r = axpy(group[k], -lead, piv);
            if (!r.empty()) buckets[r[0].first].push_back(std::move(r));
        }
        out.rows.push_back(std::move(piv));
        out.pivots.push_back(c);
    }
    if (reduced) back_substitute(out);
    return out;
}

Echelon eliminate_dense(const std::vector<SparseVec>& rows, int ncols, bool reduced) {
    std::vector<std::vector<Rational>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) m.push_back(dense_from_sparse(r, ncols));
    int nrows = static_cast<int>(m.size());
    int top = 0;
    std::vector<int> pivots;
    for (int c = 0; c < ncols && top < nrows; ++c) {
        int best = -1;
        for (int r = top; r < nrows; ++r) {
            if (sgn(m[r][c]) == 0) continue;
            if (best < 0 || bit_size(m[r][c]) < bit_size(m[best][c])) best = r;
        }
        if (best < 0) continue;
        std::swap(m[top], m[best]);
        Rational inv = 1 / m[top][c];
        for (int k = c; k < ncols; ++k) m[top][k] *= inv;
        for (int r = top + 1; r < nrows; ++r) {
            if (sgn(m[r][c]) == 0) continue;
            Rational f = m[r][c];
            for (int k = c; k < ncols; ++k)
                if (sgn(m[top][k]) != 0) m[r][k] -= f * m[top][k];
        }
        pivots.push_back(c);
        ++top;
    }
    if (reduced) {
        for (int i = top - 1; i >= 0; --i) {
            int c = pivots[i];
            for (int r = 0; r < i; ++r) {
                if (sgn(m[r][c]) == 0) continue;
                Rational f = m[r][c];
                for (int k = c; k < ncols; ++k)
                    if (sgn(m[i][k]) != 0) m[r][k] -= f * m[i][k];
            }
        }
    }
    Echelon out;
    out.pivots = pivots;
    for (int i = 0; i < top; ++i) out.rows.push_back(sparse_from_dense(m[i]));
    return out;
}

}  // namespace

Echelon eliminate(std::vector<SparseVec> rows, int ncols, bool reduced) {
    if (ncols < 64) return eliminate_dense(rows, ncols, reduced);
    return eliminate_sparse(std::move(rows), reduced);
}

RrefResult rref(const Matrix& m) {
    std::vector<SparseVec> rows;
    for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    Echelon e = eliminate(std::move(rows), m.cols(), true);
    RrefResult out;
    out.pivots = e.pivots;
    std::vector<SparseVec> full = std::move(e.rows);
    full.resize(m.rows());
    out.matrix = Matrix::from_rows(m.cols(), std::move(full));
    return out;
}

int rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    // Eliminate along the shorter side.
    if (m.rows() > m.cols() * 2) {
        Matrix t = m.transpose();
        std::vector<SparseVec> rows;
        for (int r = 0; r < t.rows(); ++r) rows.push_back(t.row(r));
        return static_cast<int>(eliminate(std::move(rows), t.cols(), false).rows.size());
    }
    std::vector<SparseVec> rows;
    for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return static_cast<int>(eliminate(std::move(rows), m.cols(), false).rows.size());
}

// --------------------------------------------------------------- Subspace

Subspace Subspace::span(int ambient_dim, std::vector<SparseVec> vectors) {
    Subspace s(ambient_dim);
    Echelon e = eliminate(std::move(vectors), ambient_dim, true);
    s.basis_ = std::move(e.rows);
    s.pivots_ = std::move(e.pivots);
    s.pivot_row_.assign(ambient_dim, -1);
    for (int i = 0; i < static_cast<int>(s.pivots_.size()); ++i) s.pivot_row_[s.pivots_[i]] = i;
    return s;
}

Subspace Subspace::full(int ambient_dim) {
    std::vector<SparseVec> v;
    for (int i = 0; i < ambient_dim; ++i) v.push_back({{i, Rational(1)}});
    return span(ambient_dim, std::move(v));
}

SparseVec Subspace::residual(const SparseVec& v) const {
    if (basis_.empty()) return v;
    SparseAccumulator acc;
    acc.add(v);
    for (const auto& [c, x] : v) {
        if (c < static_cast<int>(pivot_row_.size()) && pivot_row_[c] >= 0)
            acc.add(basis_[pivot_row_[c]], -x);
    }
    return acc.take();
}

bool Subspace::contains(const SparseVec& v) const { return residual(v).empty(); }

SparseVec Subspace::coordinates(const SparseVec& v) const {
    SparseVec out;
    for (const auto& [c, x] : v)
        if (c < static_cast<int>(pivot_row_.size()) && pivot_row_[c] >= 0)
            out.emplace_back(pivot_row_[c], x);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis())
        if (!contains(v)) return false;
    return true;
}

Matrix Subspace::as_matrix() const { return Matrix::from_rows(ambient_, basis_); }

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

Subspace kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int p : r.pivots) is_pivot[p] = true;
    std::map<int, SparseAccumulator> vecs;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) vecs[c].add(c, 1);
    for (int i = 0; i < static_cast<int>(r.pivots.size()); ++i)
        for (const auto& [c, x] : r.matrix.row(i))
            if (c != r.pivots[i]) vecs[c].add(r.pivots[i], -x);
    std::vector<SparseVec> basis;
    for (auto& [c, acc] : vecs) basis.push_back(acc.take());
    return Subspace::span(n, std::move(basis));
}

Subspace row_space(const Matrix& m) {
    std::vector<SparseVec> rows;
    for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return Subspace::span(m.cols(), std::move(rows));
}

Subspace column_space(const Matrix& m) { return row_space(m.transpose()); }

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
    std::vector<SparseVec> v = a.basis();
    v.insert(v.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient_dim(), std::move(v));
}

Subspace intersect(const std::vector<Subspace>& subspaces) {
    if (subspaces.empty()) throw EmptyIntersectionFamily();
    Subspace acc = subspaces[0];
    for (std::size_t k = 1; k < subspaces.size(); ++k) {
        const Subspace& w = subspaces[k];
        if (w.ambient_dim() != acc.ambient_dim())
            throw std::invalid_argument("intersect: ambient dimension mismatch");
        if (acc.dim() == 0) break;
        // x = sum a_j u_j lies in W iff its W-residual vanishes.
        std::vector<SparseVec> cols;
        for (const auto& u : acc.basis()) cols.push_back(w.residual(u));
        Matrix m = Matrix::from_columns(acc.ambient_dim(), cols);
        Subspace ker = kernel_basis(m);
        std::vector<SparseVec> out;
        for (const auto& a : ker.basis()) {
            SparseAccumulator s;
            for (const auto& [j, x] : a) s.add(acc.basis()[j], x);
            out.push_back(s.take());
        }
        acc = Subspace::span(acc.ambient_dim(), std::move(out));
    }
    return acc;
}

Quotient quotient(int ambient_dim, const Subspace& sub) {
    if (sub.ambient_dim() != ambient_dim) throw std::invalid_argument("quotient: ambient mismatch");
    Quotient q;
    std::vector<int> index(ambient_dim, -1);
    std::vector<bool> is_pivot(ambient_dim, false);
    for (int p : sub.pivots()) is_pivot[p] = true;
    std::vector<SparseVec> reps;
    for (int c = 0; c < ambient_dim; ++c) {
        if (is_pivot[c]) continue;
        index[c] = static_cast<int>(q.rep_coords.size());
        q.rep_coords.push_back(c);
        reps.push_back({{c, Rational(1)}});
    }
    q.representatives = Subspace::span(ambient_dim, std::move(reps));
    std::vector<SparseVec> cols(ambient_dim);
    for (int c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) cols[c] = {{index[c], Rational(1)}};
    for (int i = 0; i < sub.dim(); ++i) {
        SparseVec col;
        for (const auto& [c, x] : sub.basis()[i])
            if (c != sub.pivots()[i]) col.emplace_back(index[c], -x);
        cols[sub.pivots()[i]] = std::move(col);
    }
    q.projection = Matrix::from_columns(static_cast<int>(q.rep_coords.size()), cols);
    return q;
}

void check_complex(const std::vector<int>& spaces, const std::vector<Matrix>& diffs) {
    for (std::size_t i = 1; i < diffs.size(); ++i) {
        if (diffs[i - 1].rows() == 0 || diffs[i].cols() == 0) continue;
        Matrix p = diffs[i - 1] * diffs[i];
        if (p.is_zero()) continue;
        Matrix t = p.transpose();
        for (int c = 0; c < t.rows(); ++c) {
            if (!t.row(c).empty()) {
                std::ostringstream os;
                os << "d^2 != 0 at position " << i << " on basis vector " << c << " of "
                   << spaces[i];
                throw NotAComplex(static_cast<int>(i), SparseVec{{c, Rational(1)}}, os.str());
            }
        }
    }
}

std::vector<HomologyGroup> complex_homology(const std::vector<int>& spaces,
                                            const std::vector<Matrix>& diffs,
                                            bool with_representatives) {
    std::size_t n = spaces.size();
    if (diffs.size() != n) throw std::invalid_argument("complex_homology: need one diff per space");
    for (std::size_t i = 0; i < n; ++i) {
        if (diffs[i].cols() != spaces[i] && !(diffs[i].rows() == 0 && diffs[i].cols() == 0))
            throw std::invalid_argument("complex_homology: diff source mismatch");
        if (i > 0 && diffs[i].rows() != spaces[i - 1])
            throw std::invalid_argument("complex_homology: diff target mismatch");
    }
    check_complex(spaces, diffs);
    std::vector<int> ranks(n + 1, 0);
    for (std::size_t i = 1; i < n; ++i) ranks[i] = rank(diffs[i]);
    std::vector<HomologyGroup> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i].dim = spaces[i] - ranks[i] - ranks[i + 1];
        if (!with_representatives || out[i].dim == 0) continue;
        Subspace z = (i == 0 || diffs[i].rows() == 0) ? Subspace::full(spaces[i])
                                                       : kernel_basis(diffs[i]);
        Subspace b = (i + 1 < n) ? column_space(diffs[i + 1]) : Subspace(spaces[i]);
        std::vector<SparseVec> res;
        for (const auto& v : z.basis()) {
            SparseVec r = b.residual(v);
            if (!r.empty()) res.push_back(std::move(r));
        }
        // Residuals are cycles; their span is a complement of B inside Z.
        Echelon e = eliminate(std::move(res), spaces[i], true);
        out[i].representatives = std::move(e.rows);
    }
    return out;
}

int induced_rank(const Subspace& cycles_sub, const Subspace& boundaries_big) {
    return sum(cycles_sub, boundaries_big).dim() - boundaries_big.dim();
}

}  // namespace koszul
