#include "koszul/graded.hpp"

#include <algorithm>
#include <sstream>

namespace koszul {

void BigradedSpace::add(std::string label, int degree, int weight) {
    if (weight < 0) throw std::invalid_argument("negative weight for label " + label);
    auto [it, fresh] = index_.emplace(label, dim());
    if (!fresh) throw std::invalid_argument("duplicate basis label " + label);
    labels_.push_back(std::move(label));
    degrees_.push_back(degree);
    weights_.push_back(weight);
}

int BigradedSpace::index_of(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

bool operator==(const BigradedSpace& a, const BigradedSpace& b) {
    return a.labels_ == b.labels_ && a.degrees_ == b.degrees_ && a.weights_ == b.weights_;
}

BigradedSpace ground_field() {
    BigradedSpace k;
    k.add("1", 0, 0);
    return k;
}

bool GradedMap::is_homogeneous() const {
    for (int r = 0; r < matrix.rows(); ++r)
        for (const auto& [c, x] : matrix.row(r)) {
            if (target.degree(r) != source.degree(c) + degree_shift) return false;
            if (target.weight(r) != source.weight(c) + weight_shift) return false;
        }
    return true;
}

GradedMap identity_map(const BigradedSpace& x) {
    return {x, x, 0, 0, Matrix::identity(x.dim())};
}

GradedMap zero_map(const BigradedSpace& source, const BigradedSpace& target, int degree_shift,
                   int weight_shift) {
    return {source, target, degree_shift, weight_shift, Matrix(target.dim(), source.dim())};
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
    if (!(g.source == f.target)) throw std::invalid_argument("compose: spaces do not match");
    return {f.source, g.target, f.degree_shift + g.degree_shift, f.weight_shift + g.weight_shift,
            g.matrix * f.matrix};
}

BigradedSpace tensor(const BigradedSpace& a, const BigradedSpace& b) {
    BigradedSpace t;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j)
            t.add(a.label(i) + "⊗" + b.label(j), a.degree(i) + b.degree(j),
                  a.weight(i) + b.weight(j));
    return t;
}

GradedMap tensor_map(const GradedMap& f, const GradedMap& g) {
    GradedMap out;
    out.source = tensor(f.source, g.source);
    out.target = tensor(f.target, g.target);
    out.degree_shift = f.degree_shift + g.degree_shift;
    out.weight_shift = f.weight_shift + g.weight_shift;
    int gs = g.source.dim(), gt = g.target.dim();
    std::vector<SparseVec> cols(out.source.dim());
    auto fcols = f.matrix.columns();
    auto gcols = g.matrix.columns();
    for (int x = 0; x < f.source.dim(); ++x) {
        int sign = sign_of(static_cast<long long>(g.degree_shift) * f.source.degree(x));
        for (int y = 0; y < gs; ++y) {
            SparseVec col;
            for (const auto& [fx, a] : fcols[x])
                for (const auto& [gy, b] : gcols[y]) col.emplace_back(fx * gt + gy, sign * a * b);
            cols[x * gs + y] = std::move(col);
        }
    }
    out.matrix = Matrix::from_columns(out.target.dim(), cols);
    return out;
}

namespace {

std::string shift_label(const std::string& label, int step) {
    const std::string up = "s(", down = "d(";
    const std::string& undo = step > 0 ? down : up;
    if (label.size() > 2 && label.compare(0, 2, undo) == 0 && label.back() == ')')
        return label.substr(2, label.size() - 3);
    return (step > 0 ? up : down) + label + ")";
}

}  // namespace

BigradedSpace shift(const BigradedSpace& x, int k) {
    BigradedSpace out;
    for (int i = 0; i < x.dim(); ++i) {
        std::string l = x.label(i);
        for (int s = 0; s < std::abs(k); ++s) l = shift_label(l, k > 0 ? 1 : -1);
        out.add(l, x.degree(i) + k, x.weight(i));
    }
    return out;
}

BigradedSpace graded_dual(const BigradedSpace& x) {
    BigradedSpace out;
    for (int i = 0; i < x.dim(); ++i) {
        const std::string& l = x.label(i);
        std::string d = (!l.empty() && l.back() == '*') ? l.substr(0, l.size() - 1) : l + "*";
        out.add(d, -x.degree(i), x.weight(i));
    }
    return out;
}

GradedMap dual_map(const GradedMap& f) {
    GradedMap out;
    out.source = graded_dual(f.target);
    out.target = graded_dual(f.source);
    out.degree_shift = f.degree_shift;
    out.weight_shift = -f.weight_shift;
    Matrix t = f.matrix.transpose();
    // Column b* of the transpose picks up (-1)^{|f||b*|}.
    std::vector<SparseVec> rows(t.rows());
    for (int r = 0; r < t.rows(); ++r) {
        SparseVec row = t.row(r);
        for (auto& [c, x] : row)
            if (sign_of(static_cast<long long>(f.degree_shift) * f.target.degree(c)) < 0) x = -x;
        rows[r] = std::move(row);
    }
    out.matrix = Matrix::from_rows(t.cols(), std::move(rows));
    return out;
}

long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

int word_index(const std::vector<int>& word, int d) {
    int idx = 0;
    for (int a : word) idx = idx * d + a;
    return idx;
}

std::vector<int> word_at(int index, int length, int d) {
    std::vector<int> w(length);
    for (int i = length - 1; i >= 0; --i) {
        w[i] = index % d;
        index /= d;
    }
    return w;
}

std::map<int, int> homology_by_degree(const std::vector<int>& degrees, const Matrix& d) {
    std::map<int, int> out;
    if (degrees.empty()) return out;
    auto [lo_it, hi_it] = std::minmax_element(degrees.begin(), degrees.end());
    int lo = *lo_it, hi = *hi_it;
    std::vector<std::vector<int>> ids(hi - lo + 1);
    for (int i = 0; i < static_cast<int>(degrees.size()); ++i) ids[degrees[i] - lo].push_back(i);
    for (int r = 0; r < d.rows(); ++r)
        for (const auto& [c, x] : d.row(r))
            if (degrees[r] != degrees[c] - 1)
                throw Error("differential entry (" + std::to_string(r) + ", " + std::to_string(c) +
                            ") does not lower degree by one");
    std::vector<int> spaces;
    std::vector<Matrix> diffs;
    for (int p = lo; p <= hi; ++p) {
        spaces.push_back(static_cast<int>(ids[p - lo].size()));
        if (p == lo)
            diffs.emplace_back(0, spaces.back());
        else
            diffs.push_back(d.submatrix(ids[p - lo - 1], ids[p - lo]));
    }
    auto h = complex_homology(spaces, diffs, false);
    for (int p = lo; p <= hi; ++p) out[p] = h[p - lo].dim;
    return out;
}

std::string render(const SparseVec& v, const std::function<std::string(int)>& name) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, x] : v) {
        bool neg = sgn(x) < 0;
        Rational a = neg ? Rational(-x) : x;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        if (a != 1) os << a.get_str() << "·";
        os << name(i);
        first = false;
    }
    return os.str();
}

}  // namespace koszul
