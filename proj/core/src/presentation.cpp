#include "koszul/presentation.hpp"

#include <algorithm>
#include <set>

namespace koszul {

SparseVec QlcPresentation::relation_vector(int i) const {
    const Relation& r = relations[i];
    int d = dim();
    SparseAccumulator acc;
    acc.add(0, r.constant);
    for (const auto& [a, x] : r.linear) acc.add(1 + a, x);
    for (const auto& [ab, x] : r.quadratic) acc.add(1 + d + ab, x);
    return acc.take();
}

namespace {

std::string join_word(const std::vector<std::string>& symbols, const std::vector<int>& word) {
    if (word.empty()) return "1";
    bool short_symbols = std::all_of(symbols.begin(), symbols.end(),
                                     [](const std::string& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0 && !short_symbols) out += "·";
        out += symbols[word[i]];
    }
    return out;
}

std::vector<std::string> symbols_of(const QlcPresentation& p) {
    std::vector<std::string> s;
    for (const auto& g : p.generators) s.push_back(g.symbol);
    return s;
}

}  // namespace

std::string QlcPresentation::word_label(const std::vector<int>& word) const {
    return join_word(symbols_of(*this), word);
}

void check_normalized(const QlcPresentation& p) {
    std::set<std::string> seen;
    for (const auto& g : p.generators) {
        if (g.degree < 0) throw NormalizationError("generator " + g.symbol + " has negative degree");
        if (!seen.insert(g.symbol).second)
            throw NormalizationError("duplicate generator symbol " + g.symbol);
    }
    int d = p.dim();
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
        SparseVec v = p.relation_vector(static_cast<int>(i));
        if (v.empty()) throw NormalizationError("relation " + std::to_string(i) + " is zero");
        std::optional<int> deg;
        for (const auto& [c, x] : v) {
            int cd;
            if (c == 0) cd = 0;
            else if (c <= d) cd = p.degree(c - 1);
            else cd = p.degree((c - 1 - d) / d) + p.degree((c - 1 - d) % d);
            if (deg && *deg != cd)
                throw NormalizationError("relation " + std::to_string(i) +
                                         " is not degree-homogeneous");
            deg = cd;
        }
    }
    std::vector<SparseVec> rows;
    for (std::size_t i = 0; i < p.relations.size(); ++i)
        rows.push_back(p.relation_vector(static_cast<int>(i)));
    if (static_cast<int>(eliminate(rows, p.ambient_dim(), false).rows.size()) !=
        static_cast<int>(p.relations.size()))
        throw NormalizationError("relations are linearly dependent");
}

ValidationReport validate(const QlcPresentation& p) {
    check_normalized(p);
    int d = p.dim();
    int amb = p.ambient_dim();
    ValidationReport rep;
    std::vector<SparseVec> rel;
    for (std::size_t i = 0; i < p.relations.size(); ++i)
        rel.push_back(p.relation_vector(static_cast<int>(i)));
    Subspace R = Subspace::span(amb, rel);
    rep.relation_rank = R.dim();

    std::vector<SparseVec> low;
    for (int c = 0; c <= d; ++c) low.push_back({{c, Rational(1)}});
    Subspace meet = intersect({R, Subspace::span(amb, low)});
    rep.minimality = meet.dim() == 0;
    if (!rep.minimality) rep.minimality_witness = meet.basis()[0];

    // T≤3(V) coordinates: 0 | 1..d | 1+d.. (pairs) | 1+d+d² .. (triples).
    int off2 = 1 + d, off3 = 1 + d + d * d;
    int amb3 = off3 + d * d * d;
    std::vector<SparseVec> gens;
    for (const auto& r : rel) {
        for (int v = 0; v < d; ++v) {
            SparseAccumulator left, right;
            for (const auto& [c, x] : r) {
                if (c == 0) {
                    left.add(1 + v, x);
                    right.add(1 + v, x);
                } else if (c <= d) {
                    int a = c - 1;
                    left.add(off2 + v * d + a, x);
                    right.add(off2 + a * d + v, x);
                } else {
                    int ab = c - off2;
                    left.add(off3 + v * d * d + ab, x);
                    right.add(off3 + ab * d + v, x);
                }
            }
            gens.push_back(left.take());
            gens.push_back(right.take());
        }
    }
    Subspace S = Subspace::span(amb3, gens);
    std::vector<SparseVec> upto2;
    for (int c = 0; c < off3; ++c) upto2.push_back({{c, Rational(1)}});
    Subspace overlap = intersect({S, Subspace::span(amb3, upto2)});
    rep.overlap_dim = overlap.dim();
    rep.weak_consistency = true;
    for (const auto& v : overlap.basis()) {
        if (!R.contains(v)) {
            rep.weak_consistency = false;
            rep.weak_witness = v;
            break;
        }
    }
    return rep;
}

void check_conditions(const QlcPresentation& p) {
    ValidationReport rep = validate(p);
    if (!rep.minimality)
        throw MinimalityViolation(rep.minimality_witness,
                                  "R meets k⊕V nontrivially (generators are not minimal)");
    if (!rep.weak_consistency)
        throw WeakConsistencyViolation(rep.weak_witness,
                                       "(V⊗R + R⊗V) ∩ (k⊕V⊕V⊗V) is not contained in R");
}

SparseVec QlcSplit::phi_ext(const SparseVec& x) const {
    SparseAccumulator acc;
    SparseVec coords = qR.coordinates(x);
    for (const auto& [k, c] : coords) acc.add(phi[k], c);
    return acc.take();
}

Rational QlcSplit::theta_ext(const SparseVec& x) const {
    Rational t = 0;
    for (const auto& [k, c] : qR.coordinates(x)) t += c * theta[k];
    return t;
}

bool QlcSplit::is_quadratic() const {
    for (const auto& f : phi)
        if (!f.empty()) return false;
    for (const auto& t : theta)
        if (sgn(t) != 0) return false;
    return true;
}

QlcSplit QlcSplit::quadratic_part() const {
    QlcSplit q = *this;
    for (auto& f : q.phi) f.clear();
    for (auto& t : q.theta) t = 0;
    return q;
}

std::string QlcSplit::word_label(const std::vector<int>& word) const {
    return join_word(symbols, word);
}

QlcSplit split(const QlcPresentation& p) {
    check_normalized(p);
    int d = p.dim(), dd = d * d;
    // Quadratic coordinates first, then linear, then the constant.
    std::vector<SparseVec> rows;
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
        const Relation& r = p.relations[i];
        SparseAccumulator acc;
        for (const auto& [ab, x] : r.quadratic) acc.add(ab, x);
        for (const auto& [a, x] : r.linear) acc.add(dd + a, x);
        acc.add(dd + d, r.constant);
        rows.push_back(acc.take());
    }
    Echelon e = eliminate(rows, dd + d + 1, true);
    QlcSplit s;
    s.d = d;
    for (const auto& g : p.generators) {
        s.letter_degree.push_back(g.degree);
        s.symbols.push_back(g.symbol);
    }
    std::vector<SparseVec> quad;
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
        if (e.pivots[k] >= dd) {
            SparseAccumulator w;
            for (const auto& [c, x] : e.rows[k])
                w.add(c == dd + d ? 0 : 1 + (c - dd), x);
            throw MinimalityViolation(w.take(), "q restricted to R is not injective");
        }
        SparseVec q, lin;
        Rational c = 0;
        for (const auto& [col, x] : e.rows[k]) {
            if (col < dd) q.emplace_back(col, x);
            else if (col < dd + d) lin.emplace_back(col - dd, -x);
            else c = x;
        }
        quad.push_back(q);
        s.phi.push_back(lin);
        s.theta.push_back(c);
    }
    s.qR = Subspace::span(dd, quad);
    return s;
}

std::vector<SparseVec> reconstruct(const QlcSplit& s) {
    int d = s.d;
    std::vector<SparseVec> out;
    for (int k = 0; k < s.qR.dim(); ++k) {
        SparseAccumulator acc;
        acc.add(0, s.theta[k]);
        for (const auto& [a, x] : s.phi[k]) acc.add(1 + a, -x);
        for (const auto& [ab, x] : s.qR.basis()[k]) acc.add(1 + d + ab, x);
        out.push_back(acc.take());
    }
    return out;
}

Subspace qa_relations(const QlcSplit& s, int n) {
    int d = s.d;
    int amb = static_cast<int>(ipow(d, n));
    std::vector<SparseVec> gens;
    if (n >= 2) {
        for (int i = 0; i + 2 <= n; ++i) {
            int j = n - 2 - i;
            int li = static_cast<int>(ipow(d, i)), lj = static_cast<int>(ipow(d, j));
            for (int u = 0; u < li; ++u)
                for (int w = 0; w < lj; ++w)
                    for (const auto& r : s.qR.basis()) {
                        SparseVec v;
                        for (const auto& [ab, x] : r) v.emplace_back((u * d * d + ab) * lj + w, x);
                        std::sort(v.begin(), v.end(),
                                  [](const auto& a, const auto& b) { return a.first < b.first; });
                        gens.push_back(std::move(v));
                    }
        }
    }
    return Subspace::span(amb, gens);
}

BigradedSpace qa_component(const QlcSplit& s, int n) {
    int amb = static_cast<int>(ipow(s.d, n));
    Quotient q = quotient(amb, qa_relations(s, n));
    BigradedSpace out;
    for (int c : q.rep_coords) {
        auto w = word_at(c, n, s.d);
        int deg = 0;
        for (int a : w) deg += s.letter_degree[a];
        out.add(s.word_label(w), deg, n);
    }
    return out;
}

// ------------------------------------------------------------ FilteredAlgebra

FilteredAlgebra::FilteredAlgebra(const QlcSplit& s, int N)
    : d_(s.d), N_(N), letter_degree_(s.letter_degree), symbols_(s.symbols) {
    if (N < 0) throw std::invalid_argument("filtration bound must be non-negative");
    offset_.assign(N + 2, 0);
    for (int n = 0; n <= N; ++n) offset_[n + 1] = offset_[n] + ipow(d_, n);
    int M = static_cast<int>(offset_[N + 1]);
    words_.reserve(M);
    for (int n = 0; n <= N; ++n)
        for (long long i = 0; i < ipow(d_, n); ++i) words_.push_back(word_at(static_cast<int>(i), n, d_));
    auto col = [M](long long gid) { return static_cast<int>(M - 1 - gid); };

    std::vector<SparseVec> rels;  // over global ids, entries for lengths 0..2
    for (int k = 0; k < s.qR.dim(); ++k) {
        SparseAccumulator acc;
        acc.add(0, s.theta[k]);
        for (const auto& [a, x] : s.phi[k]) acc.add(static_cast<int>(offset_[1]) + a, -x);
        if (N >= 2)
            for (const auto& [ab, x] : s.qR.basis()[k]) acc.add(static_cast<int>(offset_[2]) + ab, x);
        rels.push_back(acc.take());
    }
    std::vector<SparseVec> rows;
    if (N >= 2) {
        for (int lu = 0; lu <= N - 2; ++lu)
            for (int lw = 0; lu + lw <= N - 2; ++lw)
                for (long long u = 0; u < ipow(d_, lu); ++u)
                    for (long long w = 0; w < ipow(d_, lw); ++w)
                        for (const auto& r : rels) {
                            SparseAccumulator acc;
                            for (const auto& [g, x] : r) {
                                int lr = static_cast<int>(words_[g].size());
                                long long local = (u * ipow(d_, lr) + (g - offset_[lr])) * ipow(d_, lw) + w;
                                acc.add(col(offset_[lu + lr + lw] + local), x);
                            }
                            rows.push_back(acc.take());
                        }
    }
    Subspace ideal = Subspace::span(M, std::move(rows));
    ideal_rank_ = ideal.dim();
    std::vector<bool> is_pivot(M, false);
    for (int p : ideal.pivots()) is_pivot[p] = true;
    if (is_pivot[col(0)]) throw NormalizationError("relations generate the unit ideal");
    std::vector<int> normal_of(M, -1);
    for (int g = 0; g < M; ++g) {
        if (is_pivot[col(g)]) continue;
        normal_of[g] = static_cast<int>(normal_.size());
        normal_.push_back(g);
        int deg = 0;
        for (int a : words_[g]) deg += letter_degree_[a];
        degree_.push_back(deg);
    }
    reduced_.resize(M);
    for (int g = 0; g < M; ++g) {
        SparseVec r = ideal.residual({{col(g), Rational(1)}});
        SparseVec out;
        for (const auto& [c, x] : r) out.emplace_back(normal_of[M - 1 - c], x);
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        reduced_[g] = std::move(out);
    }
}

int FilteredAlgebra::global_word(const std::vector<int>& w) const {
    if (static_cast<int>(w.size()) > N_)
        throw Error("word of length " + std::to_string(w.size()) + " exceeds filtration bound " +
                    std::to_string(N_));
    return static_cast<int>(offset_[w.size()] + word_index(w, d_));
}

const SparseVec& FilteredAlgebra::reduce_word(const std::vector<int>& word) const {
    return reduced_[global_word(word)];
}

SparseVec FilteredAlgebra::reduce(const SparseVec& combo) const {
    SparseAccumulator acc;
    for (const auto& [g, x] : combo) acc.add(reduced_[g], x);
    return acc.take();
}

SparseVec FilteredAlgebra::mult(int i, int j) const {
    std::vector<int> w = normal_word(i);
    const auto& v = normal_word(j);
    w.insert(w.end(), v.begin(), v.end());
    return reduce_word(w);
}

SparseVec FilteredAlgebra::multiply(const SparseVec& x, const SparseVec& y) const {
    SparseAccumulator acc;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) acc.add(mult(i, j), a * b);
    return acc.take();
}

std::string FilteredAlgebra::label(int i) const { return join_word(symbols_, normal_word(i)); }

std::vector<int> FilteredAlgebra::graded_dims() const {
    std::vector<int> dims(N_ + 1, 0);
    for (int i = 0; i < dim(); ++i) ++dims[filtration(i)];
    return dims;
}

}  // namespace koszul
