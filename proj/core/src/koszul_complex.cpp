#include "koszul/koszul_complex.hpp"

#include <algorithm>
#include <map>

namespace koszul {

namespace {

SparseVec unit_vec(int i) { return {{i, Rational(1)}}; }

int first_nonzero_column(const Matrix& m) {
    int best = -1;
    for (int r = 0; r < m.rows(); ++r)
        for (const auto& [c, x] : m.row(r))
            if (best < 0 || c < best) best = c;
    return best;
}

std::vector<std::vector<int>> ids_by_position(const std::vector<int>& position) {
    int top = position.empty() ? -1 : *std::max_element(position.begin(), position.end());
    std::vector<std::vector<int>> ids(top + 1);
    for (int i = 0; i < static_cast<int>(position.size()); ++i) ids[position[i]].push_back(i);
    return ids;
}

/// Columns of f: row k is f(e_k).
std::vector<SparseVec> images(const HomElement& f) {
    Matrix t = f.m.transpose();
    std::vector<SparseVec> out(t.rows());
    for (int k = 0; k < t.rows(); ++k) out[k] = t.row(k);
    return out;
}

}  // namespace

Matrix twisted_right(const CoalgebraData& c, const CurvedAlgebra& a, const HomElement& f) {
    const int da = a.dim(), n = c.dim() * da;
    auto fi = images(f);
    std::vector<SparseVec> cols(n);
    for (int k = 0; k < c.dim(); ++k)
        for (int i = 0; i < da; ++i) {
            SparseAccumulator acc;
            for (const auto& t : c.delta[k]) {
                if (fi[t.right].empty()) continue;
                SparseVec prod = a.multiply(fi[t.right], unit_vec(i));
                int s = sign_of(static_cast<long long>(f.degree) * c.degree[t.left]);
                for (const auto& [j, x] : prod) acc.add(t.left * da + j, s * t.coef * x);
            }
            cols[k * da + i] = acc.take();
        }
    return Matrix::from_columns(n, cols);
}

Matrix twisted_left(const CoalgebraData& c, const CurvedAlgebra& a, const HomElement& f) {
    const int dc = c.dim(), n = a.dim() * dc;
    auto fi = images(f);
    std::vector<SparseVec> cols(n);
    for (int i = 0; i < a.dim(); ++i)
        for (int k = 0; k < dc; ++k) {
            SparseAccumulator acc;
            int s = sign_of(static_cast<long long>(f.degree) * a.degree(i));
            for (const auto& t : c.delta[k]) {
                if (fi[t.left].empty()) continue;
                SparseVec prod = a.multiply(unit_vec(i), fi[t.left]);
                for (const auto& [j, x] : prod) acc.add(j * dc + t.right, s * t.coef * x);
            }
            cols[i * dc + k] = acc.take();
        }
    return Matrix::from_columns(n, cols);
}

TwistedDifferentials twisted_differentials(const CoalgebraData& c, const CurvedAlgebra& a,
                                           const HomElement& alpha) {
    TwistedDifferentials out;
    const int da = a.dim(), dc = c.dim(), n = da * dc;
    std::vector<SparseVec> ca(n), ac(n);
    for (int k = 0; k < dc; ++k)
        for (int i = 0; i < da; ++i) {
            // d(c⊗a) = dc⊗a + (-1)^{|c|} c⊗∇a
            SparseAccumulator x;
            for (const auto& [e, v] : c.d[k]) x.add(e * da + i, v);
            for (const auto& [j, v] : a.nabla(i)) x.add(k * da + j, sign_of(c.degree[k]) * v);
            ca[k * da + i] = x.take();
            // d(a⊗c) = ∇a⊗c + (-1)^{|a|} a⊗dc
            SparseAccumulator y;
            for (const auto& [j, v] : a.nabla(i)) y.add(j * dc + k, v);
            for (const auto& [e, v] : c.d[k]) y.add(i * dc + e, sign_of(a.degree(i)) * v);
            ac[i * dc + k] = y.take();
        }
    out.d_ca = Matrix::from_columns(n, ca);
    out.d_ac = Matrix::from_columns(n, ac);
    out.d_r = twisted_right(c, a, alpha);
    out.d_l = twisted_left(c, a, alpha);

    HomElement pa = partial(c, a, alpha);
    HomElement aa = convolve(c, a, alpha, alpha);
    auto& ch = out.checks.checks;
    auto push = [&](const std::string& id, const Matrix& m) {
        bool ok = m.is_zero();
        ch.push_back({id, ok, ok ? std::to_string(n) + " basis tensors" : "fails at column " +
                                                                         std::to_string(first_nonzero_column(m))});
    };
    push("d d_r + d_r d = d_{∂α}^r", out.d_ca * out.d_r + out.d_r * out.d_ca - twisted_right(c, a, pa));
    push("d_r d_r = d_{α∗α}^r", out.d_r * out.d_r - twisted_right(c, a, aa));
    push("d d_l + d_l d = d_{∂α}^l", out.d_ac * out.d_l + out.d_l * out.d_ac - twisted_left(c, a, pa));
    push("d_l d_l = -d_{α∗α}^l", out.d_l * out.d_l + twisted_left(c, a, aa));
    return out;
}

HomElement canonical_twist(const CoalgebraData& c, const CurvedAlgebra& qa) {
    std::vector<SparseVec> cols(c.dim());
    for (int k = 1; k < c.dim() && c.weight[k] == 1; ++k) cols[k] = unit_vec(k);
    return {-1, Matrix::from_columns(qa.dim(), cols)};
}

int BimoduleComplex::index(int a, int c, int b) const {
    return lookup[(static_cast<std::size_t>(a) * dim_c + c) * dim_a + b];
}

std::string BimoduleComplex::label(int i) const {
    const auto& t = basis[i];
    return a_labels[t.a] + " ⊗ (" + c_labels[t.c] + ") ⊗ " + a_labels[t.b];
}

BimoduleComplex total_koszul_complex(const QlcSplit& s, int N) {
    BimoduleComplex out;
    out.N = N;
    FilteredAlgebra A(s, N);
    CurvedCoalgebra cc(s, N);
    CoalgebraData C = CoalgebraData::from(cc);
    out.dim_a = A.dim();
    out.dim_c = C.dim();
    for (int i = 0; i < A.dim(); ++i) out.a_labels.push_back(A.label(i));
    out.c_labels = C.labels;
    out.c_weight = C.weight;
    out.lookup.assign(static_cast<std::size_t>(A.dim()) * C.dim() * A.dim(), -1);
    for (int k = 0; k < C.dim(); ++k)
        for (int i = 0; i < A.dim(); ++i)
            for (int j = 0; j < A.dim(); ++j) {
                int w = A.filtration(i) + C.weight[k] + A.filtration(j);
                if (w > N) continue;
                out.lookup[(static_cast<std::size_t>(i) * C.dim() + k) * A.dim() + j] =
                    static_cast<int>(out.basis.size());
                out.basis.push_back({i, k, j});
                out.position.push_back(C.weight[k]);
                out.total_weight.push_back(w);
            }
    const int n = static_cast<int>(out.basis.size());
    auto at = [&](int a, int c, int b) {
        int idx = out.index(a, c, b);
        if (idx < 0) throw std::logic_error("total_koszul_complex: term leaves the truncation");
        return idx;
    };
    std::vector<SparseVec> kappa_of(C.dim());
    for (int k = 1; k < C.dim() && C.weight[k] == 1; ++k) kappa_of[k] = A.letter(k - 1);

    std::vector<SparseVec> cc_cols(n), r_cols(n), l_cols(n), hl_cols(n), hr_cols(n);
    for (int col = 0; col < n; ++col) {
        auto [a, c, b] = out.basis[col];
        int sa = sign_of(A.degree(a));
        SparseAccumulator xc, xr, xl, hl, hr;
        for (const auto& [e, v] : C.d[c]) xc.add(at(a, e, b), sa * v);
        for (const auto& t : C.delta[c]) {
            if (!kappa_of[t.right].empty()) {
                SparseVec kb = A.multiply(kappa_of[t.right], unit_vec(b));
                for (const auto& [j, v] : kb)
                    xr.add(at(a, t.left, j), sa * sign_of(C.degree[t.left]) * t.coef * v);
            }
            if (!kappa_of[t.left].empty()) {
                SparseVec ak = A.multiply(unit_vec(a), kappa_of[t.left]);
                for (const auto& [j, v] : ak) xl.add(at(j, t.right, b), sa * t.coef * v);
            }
            if (sgn(C.h[t.left]) != 0) hl.add(at(a, t.right, b), C.h[t.left] * t.coef);
            if (sgn(C.h[t.right]) != 0) hr.add(at(a, t.left, b), C.h[t.right] * t.coef);
        }
        cc_cols[col] = xc.take();
        r_cols[col] = xr.take();
        l_cols[col] = xl.take();
        hl_cols[col] = hl.take();
        hr_cols[col] = hr.take();
    }
    out.d_c = Matrix::from_columns(n, cc_cols);
    out.d_r = Matrix::from_columns(n, r_cols);
    out.d_l = Matrix::from_columns(n, l_cols);

    Matrix D = out.total();
    Matrix D2 = D * D;
    int bad = first_nonzero_column(D2);
    if (bad >= 0) {
        SparseVec w;
        for (int r = 0; r < D2.rows(); ++r)
            if (sgn(D2.at(r, bad)) != 0) w.emplace_back(r, D2.at(r, bad));
        throw NotAComplex(out.position[bad], w, "D² ≠ 0 on " + out.label(bad));
    }
    auto& ch = out.checks.checks;
    ch.push_back({"D² = 0", true, std::to_string(n) + " basis tensors"});
    bool anti = (out.d_r * out.d_l + out.d_l * out.d_r).is_zero();
    ch.push_back({"d_r d_l = -d_l d_r", anti, anti ? "exact" : "fails"});
    Matrix curv = out.d_c * out.d_c - Matrix::from_columns(n, hl_cols) + Matrix::from_columns(n, hr_cols);
    bool ok = curv.is_zero();
    ch.push_back({"d_C² = d_uh^l - d_uh^r", ok, ok ? "exact" : "fails on " + out.label(first_nonzero_column(curv))});
    return out;
}

std::vector<int> homology_by_position(const std::vector<int>& position, const Matrix& d) {
    auto h = homology_by_degree(position, d);
    std::vector<int> out;
    for (const auto& [p, dim] : h) {
        if (p < 0) throw std::invalid_argument("homology_by_position: negative position");
        out.resize(p + 1, 0);
        out[p] = dim;
    }
    return out;
}

ResolutionReport resolution_check(const QlcSplit& s, int N) {
    ResolutionReport rep;
    rep.N = N;
    BimoduleComplex K = total_koszul_complex(s, N);
    FilteredAlgebra A(s, N);
    rep.algebra_dim = A.dim();
    const int n = static_cast<int>(K.basis.size());
    std::vector<SparseVec> cols(n);
    for (int i = 0; i < n; ++i)
        if (K.basis[i].c == 0) cols[i] = A.mult(K.basis[i].a, K.basis[i].b);
    Matrix xi = Matrix::from_columns(A.dim(), cols);
    Matrix D = K.total();
    rep.homology = homology_by_position(K.position, D);
    rep.xi_rank = rank(xi);
    rep.checks = K.checks;
    auto& ch = rep.checks.checks;
    bool chain = (xi * D).is_zero();
    ch.push_back({"ξ∘D = 0", chain, chain ? "exact" : "fails"});
    ch.push_back({"ξ surjective", rep.xi_rank == rep.algebra_dim,
                  std::to_string(rep.xi_rank) + " of " + std::to_string(rep.algebra_dim)});
    bool h0 = !rep.homology.empty() && rep.homology[0] == rep.algebra_dim;
    ch.push_back({"H0 = F≤N A", h0, "H0 " + std::to_string(rep.homology.empty() ? 0 : rep.homology[0])});
    bool higher = true;
    std::string dims;
    for (std::size_t p = 1; p < rep.homology.size(); ++p) {
        if (rep.homology[p] != 0) higher = false;
        dims += (p > 1 ? ", H" : "H") + std::to_string(p) + " " + std::to_string(rep.homology[p]);
    }
    ch.push_back({"higher homology vanishes", higher, dims.empty() ? "no higher positions" : dims});
    return rep;
}

bool KoszulCertificate::pass() const { return pbw && failing_weight() < 0; }

int KoszulCertificate::failing_weight() const {
    for (const auto& e : entries)
        if (!e.pass) return e.weight;
    return -1;
}

KoszulCertificate koszulness_certificate(const QlcSplit& s, int W) {
    KoszulCertificate cert;
    cert.max_weight = W;
    QlcSplit q = s.quadratic_part();
    BimoduleComplex K = total_koszul_complex(q, W);
    FilteredAlgebra qa(q, W);
    std::vector<int> graded = qa.graded_dims();
    Matrix D = K.total();
    for (int w = 0; w <= W; ++w) {
        std::vector<int> ids, pos;
        for (int i = 0; i < static_cast<int>(K.basis.size()); ++i)
            if (K.total_weight[i] == w) {
                ids.push_back(i);
                pos.push_back(K.position[i]);
            }
        CertificateEntry e;
        e.weight = w;
        e.qa_dim = graded[w];
        e.homology = homology_by_position(pos, D.submatrix(ids, ids));
        e.pass = !e.homology.empty() && e.homology[0] == e.qa_dim &&
                 std::all_of(e.homology.begin() + 1, e.homology.end(), [](int h) { return h == 0; });
        cert.entries.push_back(e);
    }
    cert.pbw = true;
    int cumulative = 0;
    for (int n = 0; n <= W; ++n) {
        cumulative += graded[n];
        if (FilteredAlgebra(s, n).dim() != cumulative) cert.pbw = false;
    }
    return cert;
}

HochschildComplex hochschild_koszul_complex(const QlcSplit& s, int N) {
    HochschildComplex out;
    FilteredAlgebra A(s, N);
    CurvedCoalgebra cc(s, N);
    CoalgebraData C = CoalgebraData::from(cc);
    std::vector<int> lookup(static_cast<std::size_t>(C.dim()) * A.dim(), -1);
    for (int k = 0; k < C.dim(); ++k)
        for (int j = 0; j < A.dim(); ++j) {
            int w = C.weight[k] + A.filtration(j);
            if (w > N) continue;
            lookup[static_cast<std::size_t>(k) * A.dim() + j] = static_cast<int>(out.basis.size());
            out.basis.emplace_back(k, j);
            out.position.push_back(C.weight[k]);
            out.filtration.push_back(w);
        }
    auto at = [&](int k, int j) {
        int idx = lookup[static_cast<std::size_t>(k) * A.dim() + j];
        if (idx < 0) throw std::logic_error("hochschild: term leaves the truncation");
        return idx;
    };
    std::vector<SparseVec> kappa_of(C.dim());
    for (int k = 1; k < C.dim() && C.weight[k] == 1; ++k) kappa_of[k] = A.letter(k - 1);
    const int n = static_cast<int>(out.basis.size());
    std::vector<SparseVec> cols(n);
    for (int col = 0; col < n; ++col) {
        auto [c, b] = out.basis[col];
        SparseAccumulator acc;
        for (const auto& [e, v] : C.d[c]) acc.add(at(e, b), v);
        for (const auto& t : C.delta[c]) {
            // (-1)^{|c'|} c'⊗κ(c'')b
            if (!kappa_of[t.right].empty())
                for (const auto& [j, v] : A.multiply(kappa_of[t.right], unit_vec(b)))
                    acc.add(at(t.left, j), sign_of(C.degree[t.left]) * t.coef * v);
            // -(-1)^{|κ(c')|(|c''|+|b|)} c''⊗bκ(c')
            if (!kappa_of[t.left].empty()) {
                long long e = static_cast<long long>(C.degree[t.left] - 1) * (C.degree[t.right] + A.degree(b));
                for (const auto& [j, v] : A.multiply(unit_vec(b), kappa_of[t.left]))
                    acc.add(at(t.right, j), -sign_of(e) * t.coef * v);
            }
        }
        cols[col] = acc.take();
    }
    out.d = Matrix::from_columns(n, cols);
    return out;
}

HochschildComplex hochschild_bar_complex(const QlcSplit& s, int N, int max_degree) {
    for (int a = 0; a < s.d; ++a)
        if (s.letter_degree[a] != 0)
            throw std::invalid_argument("bar-method Hochschild needs generators of degree 0");
    HochschildComplex out;
    FilteredAlgebra A(s, N);
    std::vector<std::vector<int>> chains;
    std::vector<int> fil;
    for (int i = 0; i < A.dim(); ++i) {
        chains.push_back({i});
        fil.push_back(A.filtration(i));
    }
    std::size_t begin = 0;
    for (int len = 1; len <= max_degree + 1; ++len) {
        std::size_t end = chains.size();
        for (std::size_t c = begin; c < end; ++c)
            for (int i = 1; i < A.dim(); ++i) {
                int f = fil[c] + A.filtration(i);
                if (f > N) continue;
                auto w = chains[c];
                w.push_back(i);
                chains.push_back(std::move(w));
                fil.push_back(f);
            }
        begin = end;
    }
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < static_cast<int>(chains.size()); ++i) index[chains[i]] = i;
    const int n = static_cast<int>(chains.size());
    std::vector<SparseVec> cols(n);
    for (int col = 0; col < n; ++col) {
        const auto& w = chains[col];
        const int len = static_cast<int>(w.size()) - 1;
        out.position.push_back(len);
        out.filtration.push_back(fil[col]);
        out.basis.emplace_back(col, len);
        SparseAccumulator acc;
        auto put = [&](std::vector<int> v, const Rational& x) {
            for (std::size_t i = 1; i < v.size(); ++i)
                if (v[i] == 0) return;  // degenerate chain
            auto it = index.find(v);
            if (it == index.end()) throw std::logic_error("hochschild: bar term leaves the truncation");
            acc.add(it->second, x);
        };
        for (int i = 0; i < len; ++i)
            for (const auto& [p, x] : A.mult(w[i], w[i + 1])) {
                std::vector<int> v(w.begin(), w.begin() + i);
                v.push_back(p);
                v.insert(v.end(), w.begin() + i + 2, w.end());
                put(std::move(v), sign_of(i) * x);
            }
        if (len >= 1)
            for (const auto& [p, x] : A.mult(w[len], w[0])) {
                std::vector<int> v{p};
                v.insert(v.end(), w.begin() + 1, w.end() - 1);
                put(std::move(v), sign_of(len) * x);
            }
        cols[col] = acc.take();
    }
    out.d = Matrix::from_columns(n, cols);
    return out;
}

HochschildResult hochschild(const QlcSplit& s, int N, HochschildMethod method, int max_degree) {
    HochschildResult res;
    res.method = method;
    res.N = N;
    HochschildComplex H = method == HochschildMethod::koszul ? hochschild_koszul_complex(s, N)
                                                             : hochschild_bar_complex(s, N, max_degree);
    Matrix D2 = H.d * H.d;
    if (!D2.is_zero()) {
        int bad = first_nonzero_column(D2);
        throw NotAComplex(H.position[bad], D2.column(bad), "Hochschild differential squares to nonzero");
    }
    auto ids = ids_by_position(H.position);
    auto block = [&](const std::vector<int>& rows, const std::vector<int>& cols) {
        return H.d.submatrix(rows, cols);
    };
    for (int p = 0; p <= max_degree && p < static_cast<int>(ids.size()); ++p) {
        HochschildDegree hd;
        hd.degree = p;
        const auto& here = ids[p];
        std::vector<int> lower;
        std::vector<int> low_local;  // positions inside `here`
        for (int t = 0; t < static_cast<int>(here.size()); ++t)
            if (H.filtration[here[t]] <= N - 2) {
                lower.push_back(here[t]);
                low_local.push_back(t);
            }
        const int dim_here = static_cast<int>(here.size());
        Subspace Z = p == 0 ? Subspace::full(dim_here) : kernel_basis(block(ids[p - 1], here));
        Subspace B = p + 1 < static_cast<int>(ids.size()) ? column_space(block(here, ids[p + 1]))
                                                         : Subspace(dim_here);
        hd.raw_dim = Z.dim() - B.dim();
        // F≤N-2 cycles and boundaries, then embed the cycles in F≤N coordinates.
        std::vector<int> lower_prev, lower_next;
        if (p > 0)
            for (int r : ids[p - 1])
                if (H.filtration[r] <= N - 2) lower_prev.push_back(r);
        if (p + 1 < static_cast<int>(ids.size()))
            for (int r : ids[p + 1])
                if (H.filtration[r] <= N - 2) lower_next.push_back(r);
        const int dim_low = static_cast<int>(lower.size());
        Subspace Zl = p == 0 ? Subspace::full(dim_low) : kernel_basis(block(lower_prev, lower));
        Subspace Bl = lower_next.empty() ? Subspace(dim_low) : column_space(block(lower, lower_next));
        hd.raw_dim_lower = Zl.dim() - Bl.dim();
        std::vector<SparseVec> embedded;
        for (const auto& v : Zl.basis()) {
            SparseVec e;
            for (const auto& [i, x] : v) e.emplace_back(low_local[i], x);
            embedded.push_back(std::move(e));
        }
        hd.stable_dim = induced_rank(Subspace::span(dim_here, embedded), B);
        res.degrees.push_back(hd);
    }
    return res;
}

}  // namespace koszul
