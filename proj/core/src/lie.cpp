#include "koszul/lie.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace koszul {

namespace {

int word_deg(const std::vector<int>& w, const std::vector<int>& ld) {
    int s = 0;
    for (int l : w) s += ld[l];
    return s;
}

// u ⧢ v with Koszul signs, as a combination of words of length |u| + |v|.
SparseVec shuffle(const std::vector<int>& u, const std::vector<int>& v, const std::vector<int>& ld, int d) {
    const int n = static_cast<int>(u.size() + v.size());
    SparseAccumulator acc;
    std::vector<int> w(n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != static_cast<int>(u.size())) continue;
        long long rem = word_deg(u, ld), exp = 0;
        int iu = 0, iv = 0;
        for (int pos = 0; pos < n; ++pos) {
            if (mask & (1u << pos)) {
                w[pos] = u[iu];
                rem -= ld[u[iu++]];
            } else {
                w[pos] = v[iv];
                exp += ld[v[iv++]] * rem;
            }
        }
        acc.add(word_index(w, d), sign_of(exp));
    }
    return acc.take();
}

// Weight n slice: Q_n = (sV)^{⊗n} / Sh_n and the Lie dual component inside it.
struct Piece {
    int n = 0, size = 0, qdim = 0, offset = 0;
    Subspace sh;
    Quotient q;
    std::vector<SparseVec> proj;  // p(e_w) for every word w
    Subspace G;                   // in Q coordinates
    std::vector<SparseVec> lifts;  // word coordinates, one per G basis row
    std::vector<SparseVec> kernel;  // C⁽ⁿ⁾ ∩ ker p, word coordinates
};

SparseVec project(const Piece& p, const SparseVec& words) {
    SparseAccumulator acc;
    for (const auto& [w, c] : words) acc.add(p.proj[w], c);
    return acc.take();
}

// (p⊗p)(Δ̄ - τΔ̄)x for x of length n; entry j lives in Q_j ⊗ Q_{n-j}, index a * qdim(n-j) + b.
std::vector<SparseVec> cobracket_q(const std::vector<Piece>& P, const std::vector<int>& ld, int d, int n,
                                   const SparseVec& x) {
    std::vector<SparseAccumulator> acc(n);
    for (const auto& [w, c] : x) {
        std::vector<int> word = word_at(w, n, d);
        for (int i = 1; i < n; ++i) {
            std::vector<int> u(word.begin(), word.begin() + i), v(word.begin() + i, word.end());
            const SparseVec& pu = P[i].proj[word_index(u, d)];
            const SparseVec& pv = P[n - i].proj[word_index(v, d)];
            int sg = sign_of(static_cast<long long>(word_deg(u, ld)) * word_deg(v, ld));
            for (const auto& [a, xa] : pu)
                for (const auto& [b, xb] : pv) {
                    Rational t = c * xa * xb;
                    acc[i].add(a * P[n - i].qdim + b, t);
                    acc[n - i].add(b * P[i].qdim + a, -sg * t);
                }
        }
    }
    std::vector<SparseVec> out(n);
    for (int j = 1; j < n; ++j) out[j] = acc[j].take();
    return out;
}

// Coordinates of t ∈ Q_a ⊗ Q_b in G_a ⊗ G_b; false if t is outside.
bool tensor_coords(const Piece& A, const Piece& B, const SparseVec& t,
                   std::vector<std::tuple<int, int, Rational>>& out) {
    const auto& pa = A.G.pivots();
    const auto& pb = B.G.pivots();
    std::vector<int> row_of(A.qdim, -1), col_of(B.qdim, -1);
    for (std::size_t k = 0; k < pa.size(); ++k) row_of[pa[k]] = static_cast<int>(k);
    for (std::size_t k = 0; k < pb.size(); ++k) col_of[pb[k]] = static_cast<int>(k);
    SparseAccumulator rebuilt;
    std::vector<std::tuple<int, int, Rational>> coords;
    for (const auto& [idx, c] : t) {
        int k = row_of[idx / B.qdim], l = col_of[idx % B.qdim];
        if (k < 0 || l < 0) continue;
        coords.emplace_back(k, l, c);
        for (const auto& [x, cx] : A.G.basis()[k])
            for (const auto& [y, cy] : B.G.basis()[l]) rebuilt.add(x * B.qdim + y, c * cx * cy);
    }
    rebuilt.add(t, -1);
    if (!rebuilt.take().empty()) return false;
    out = std::move(coords);
    return true;
}

// span{g ⊗ g'} for g ∈ X, g' ∈ Y.
Subspace tensor_span(const Subspace& X, const Subspace& Y) {
    std::vector<SparseVec> vs;
    for (const auto& x : X.basis())
        for (const auto& y : Y.basis()) {
            SparseAccumulator acc;
            for (const auto& [i, a] : x)
                for (const auto& [j, b] : y) acc.add(i * Y.ambient_dim() + j, a * b);
            vs.push_back(acc.take());
        }
    return Subspace::span(X.ambient_dim() * Y.ambient_dim(), std::move(vs));
}

std::string dims_detail(const std::vector<int>& dims, int from) {
    std::ostringstream os;
    os << "dims";
    for (std::size_t n = from; n < dims.size(); ++n) os << ' ' << dims[n];
    return os.str();
}

struct Failure {
    bool ok = true;
    std::string detail;
    void fail(const std::string& what) {
        if (ok) detail = what;
        ok = false;
    }
};

// Sorts a letter list into the monomial order with the Koszul sign; false if an odd letter repeats.
bool normalize(std::vector<int>& letters, int& sign, const std::vector<int>& e) {
    for (std::size_t i = 1; i < letters.size(); ++i)
        for (std::size_t j = i; j > 0 && letters[j - 1] > letters[j]; --j) {
            if (e[letters[j - 1]] % 2 != 0 && e[letters[j]] % 2 != 0) sign = -sign;
            std::swap(letters[j - 1], letters[j]);
        }
    for (std::size_t i = 1; i < letters.size(); ++i)
        if (letters[i] == letters[i - 1] && e[letters[i]] % 2 != 0) return false;
    return true;
}

int first_nonzero_col(const Matrix& m) {
    int best = -1;
    for (int r = 0; r < m.rows(); ++r)
        if (!m.row(r).empty()) {
            int c = m.row(r).front().first;
            if (best < 0 || c < best) best = c;
        }
    return best;
}

CheckRecord zero_check(const std::string& id, const Matrix& m, const std::vector<std::string>& labels) {
    int c = first_nonzero_col(m);
    if (c < 0) return {id, true, "0"};
    return {id, false, "nonzero on " + labels[c]};
}

std::vector<int> select_degree(const std::vector<int>& degree, int k) {
    std::vector<int> out;
    for (std::size_t i = 0; i < degree.size(); ++i)
        if (degree[i] == k) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> iota(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

}  // namespace

QlcPresentation associative_presentation(const CommutativePresentation& p) {
    const int d = p.dim();
    for (const auto& g : p.generators)
        if (g.degree != 0) throw NormalizationError("commutative presentation: generator " + g.symbol +
                                                    " must have degree 0");
    QlcPresentation out;
    out.name = p.name;
    out.generators = p.generators;
    for (const auto& r : p.relations) {
        Relation a;
        a.constant = r.constant;
        a.linear = r.linear;
        SparseAccumulator q;
        for (const auto& [idx, c] : r.quadratic) {
            int x = idx / d, y = idx % d;
            if (x == y) {
                q.add(x * d + x, c);
            } else {
                q.add(x * d + y, c / 2);
                q.add(y * d + x, c / 2);
            }
        }
        a.quadratic = q.take();
        out.relations.push_back(std::move(a));
    }
    for (int x = 0; x < d; ++x)
        for (int y = x + 1; y < d; ++y) {
            Relation a;
            a.quadratic = {{x * d + y, Rational(1)}, {y * d + x, Rational(-1)}};
            std::sort(a.quadratic.begin(), a.quadratic.end());
            out.relations.push_back(std::move(a));
        }
    return out;
}

AxiomReport verify_lie_axioms(const CurvedLieCoalgebra& g) {
    const int m = g.dim();
    AxiomReport rep;
    Failure anti, jac, coder, curv, hd;
    for (int x = 0; x < m; ++x) {
        const std::string& name = g.labels[x];
        SparseAccumulator a;
        for (const auto& t : g.cobracket[x]) {
            a.add(t.left * m + t.right, t.coef);
            a.add(t.right * m + t.left,
                  sign_of(static_cast<long long>(g.degree[t.left]) * g.degree[t.right]) * t.coef);
        }
        if (!a.take().empty()) anti.fail(name);

        // (1 + ξ + ξ²)(]−[ ⊗ 1)]x[ with ξ(u⊗v⊗w) = ± w⊗u⊗v.
        SparseAccumulator j;
        auto emit = [&](int u, int v, int w, const Rational& c) {
            const long long du = g.degree[u], dv = g.degree[v], dw = g.degree[w];
            j.add((u * m + v) * m + w, c);
            j.add((w * m + u) * m + v, sign_of(dw * (du + dv)) * c);
            j.add((v * m + w) * m + u, sign_of(du * (dv + dw)) * c);
        };
        for (const auto& t : g.cobracket[x])
            for (const auto& s : g.cobracket[t.left]) emit(s.left, s.right, t.right, t.coef * s.coef);
        if (!j.take().empty()) jac.fail(name);

        SparseAccumulator c;
        for (const auto& [y, cy] : g.d[x])
            for (const auto& t : g.cobracket[y]) c.add(t.left * m + t.right, cy * t.coef);
        for (const auto& t : g.cobracket[x]) {
            for (const auto& [l, cl] : g.d[t.left]) c.add(l * m + t.right, -t.coef * cl);
            int sg = sign_of(g.degree[t.left]);
            for (const auto& [r, cr] : g.d[t.right]) c.add(t.left * m + r, -sg * t.coef * cr);
        }
        if (!c.take().empty()) coder.fail(name);

        SparseAccumulator dd;
        for (const auto& [y, cy] : g.d[x]) dd.add(g.d[y], cy);
        for (const auto& t : g.cobracket[x])
            if (g.h[t.left] != 0) dd.add(t.right, -t.coef * g.h[t.left]);
        if (!dd.take().empty()) curv.fail(name);

        Rational hdx = 0;
        for (const auto& [y, cy] : g.d[x]) hdx += cy * g.h[y];
        if (hdx != 0) hd.fail(name);
    }
    auto add = [&](const std::string& id, const Failure& f, const std::string& pass) {
        rep.checks.push_back({id, f.ok, f.ok ? pass : "fails on " + f.detail});
    };
    const std::string dim = "dim " + std::to_string(m);
    add("antisymmetry", anti, dim);
    add("co-Jacobi", jac, dim);
    add("coderivation", coder, dim);
    add("curvature", curv, "d² = (h⊗1)]−[");
    add("h∘d = 0", hd, dim);
    return rep;
}

CurvedLieCoalgebra lie_from_coalgebra(const CoalgebraData& c) {
    CurvedLieCoalgebra g;
    const int m = c.dim() - 1;
    for (int i = 1; i <= m; ++i) {
        g.labels.push_back(c.labels[i]);
        g.degree.push_back(c.degree[i]);
        g.weight.push_back(c.weight[i]);
        g.h.push_back(c.h[i]);
        SparseVec d;
        for (const auto& [j, x] : c.d[i])
            if (j != 0) d.emplace_back(j - 1, x);
        g.d.push_back(std::move(d));
        std::map<std::pair<int, int>, Rational> terms;
        for (const auto& t : c.delta[i]) {
            if (t.left == 0 || t.right == 0) continue;
            int l = t.left - 1, r = t.right - 1;
            terms[{l, r}] += t.coef;
            terms[{r, l}] -= sign_of(static_cast<long long>(c.degree[t.left]) * c.degree[t.right]) * t.coef;
        }
        std::vector<CurvedLieCoalgebra::Term> list;
        for (const auto& [k, x] : terms)
            if (x != 0) list.push_back({k.first, k.second, x});
        g.cobracket.push_back(std::move(list));
    }
    return g;
}

LieDual lie_dual(const QlcSplit& s, int W) {
    if (W < 1) throw std::invalid_argument("lie_dual: max weight must be at least 1");
    CurvedCoalgebra C(s, W);
    const int d = s.d;
    std::vector<int> ld(d);
    for (int a = 0; a < d; ++a) ld[a] = C.letter_degree(a);

    LieDual out;
    out.max_weight = W;
    out.dims.assign(W + 1, 0);
    out.quotient_dims.assign(W + 1, 0);
    out.universal_dims.assign(W + 1, 0);
    CurvedLieCoalgebra& g = out.coalgebra;

    std::vector<Piece> P(W + 1);
    for (int n = 1; n <= W; ++n) {
        Piece& pc = P[n];
        pc.n = n;
        pc.size = static_cast<int>(ipow(d, n));
        std::vector<SparseVec> sh;
        for (int i = 1; i < n; ++i)
            for (long long u = 0; u < ipow(d, i); ++u)
                for (long long v = 0; v < ipow(d, n - i); ++v)
                    sh.push_back(shuffle(word_at(static_cast<int>(u), i, d),
                                         word_at(static_cast<int>(v), n - i, d), ld, d));
        pc.sh = Subspace::span(pc.size, std::move(sh));
        pc.q = quotient(pc.size, pc.sh);
        pc.qdim = pc.q.projection.rows();
        pc.proj = pc.q.projection.columns();
        out.quotient_dims[n] = pc.qdim;

        // rref [p(c_k) | e_k]: rows with a Q pivot give G and its lifts, the rest give ker p.
        const auto& cb = C.component(n).basis();
        const int m = static_cast<int>(cb.size());
        std::vector<SparseVec> rows;
        for (int k = 0; k < m; ++k) {
            SparseVec r = project(pc, cb[k]);
            r.emplace_back(pc.qdim + k, Rational(1));
            rows.push_back(std::move(r));
        }
        Echelon e = eliminate(std::move(rows), pc.qdim + m, true);
        std::vector<SparseVec> gvecs;
        for (std::size_t r = 0; r < e.rows.size(); ++r) {
            SparseVec y;
            SparseAccumulator lift;
            for (const auto& [c, x] : e.rows[r]) {
                if (c < pc.qdim) y.emplace_back(c, x);
                else lift.add(cb[c - pc.qdim], x);
            }
            if (e.pivots[r] < pc.qdim) {
                gvecs.push_back(std::move(y));
                pc.lifts.push_back(lift.take());
            } else {
                pc.kernel.push_back(lift.take());
            }
        }
        pc.G = Subspace::span(pc.qdim, gvecs);
        if (pc.G.basis() != gvecs) throw std::logic_error("lie_dual: echelon rows are not in RREF order");
        pc.offset = g.dim();
        out.dims[n] = pc.G.dim();
        for (int t = 0; t < pc.G.dim(); ++t) {
            int w = pc.q.rep_coords[pc.G.pivots()[t]];
            std::vector<int> word = word_at(w, n, d);
            std::string label;
            for (int a : word) label += "s" + s.symbols[a];
            g.labels.push_back(n == 1 ? label : "[" + label + "]");
            g.degree.push_back(word_deg(word, ld));
            g.weight.push_back(n);
            out.lifts.push_back(pc.lifts[t]);
        }
    }
    const int total = g.dim();
    g.cobracket.assign(total, {});
    g.d.assign(total, {});
    g.h.assign(total, 0);

    Failure sh_ok, d_well, h_well, d_stays, br_stays;
    for (int n = 2; n <= W; ++n) {
        const Piece& pc = P[n];
        for (const auto& x : pc.sh.basis())
            for (const auto& part : cobracket_q(P, ld, d, n, x))
                if (!part.empty()) sh_ok.fail("weight " + std::to_string(n));
        for (const auto& z : pc.kernel) {
            if (!project(P[n - 1], C.coderivation_on_words(n, z)).empty())
                d_well.fail("weight " + std::to_string(n));
            if (n == 2) {
                Rational hz = 0;
                for (const auto& [w, c] : z) hz += c * C.h_words()[w];
                if (hz != 0) h_well.fail("weight 2");
            }
        }
        for (int t = 0; t < pc.G.dim(); ++t) {
            const int idx = pc.offset + t;
            const SparseVec& lift = pc.lifts[t];
            SparseVec y = project(P[n - 1], C.coderivation_on_words(n, lift));
            if (P[n - 1].G.contains(y)) {
                for (const auto& [k, c] : P[n - 1].G.coordinates(y)) g.d[idx].emplace_back(P[n - 1].offset + k, c);
            } else {
                d_stays.fail(g.labels[idx]);
            }
            if (n == 2)
                for (const auto& [w, c] : lift) g.h[idx] += c * C.h_words()[w];
            auto parts = cobracket_q(P, ld, d, n, lift);
            for (int j = 1; j < n; ++j) {
                std::vector<std::tuple<int, int, Rational>> coords;
                if (!tensor_coords(P[j], P[n - j], parts[j], coords)) {
                    br_stays.fail(g.labels[idx]);
                    continue;
                }
                for (const auto& [k, l, c] : coords)
                    g.cobracket[idx].push_back({P[j].offset + k, P[n - j].offset + l, c});
            }
        }
    }

    // G'⁽¹⁾ = sV, G'⁽²⁾ = p(s²qR), G'⁽ⁿ⁾ = {q : ]q[ ∈ Σ G'⊗G'}.
    std::vector<Subspace> Gp(W + 1);
    Gp[1] = Subspace::full(P[1].qdim);
    out.universal_dims[1] = P[1].qdim;
    if (W >= 2) {
        Gp[2] = P[2].G;
        out.universal_dims[2] = Gp[2].dim();
    }
    Failure universal;
    for (int n = 3; n <= W; ++n) {
        const Piece& pc = P[n];
        std::vector<Subspace> target(n);
        std::vector<int> off(n + 1, 0);
        for (int j = 1; j < n; ++j) {
            target[j] = tensor_span(Gp[j], Gp[n - j]);
            off[j + 1] = off[j] + P[j].qdim * P[n - j].qdim;
        }
        std::vector<SparseVec> cols;
        for (int t = 0; t < pc.qdim; ++t) {
            auto parts = cobracket_q(P, ld, d, n, {{pc.q.rep_coords[t], Rational(1)}});
            SparseVec col;
            for (int j = 1; j < n; ++j)
                for (const auto& [i, c] : target[j].residual(parts[j])) col.emplace_back(off[j] + i, c);
            cols.push_back(std::move(col));
        }
        Gp[n] = kernel_basis(Matrix::from_columns(off[n], cols));
        out.universal_dims[n] = Gp[n].dim();
        if (!(Gp[n] == pc.G))
            universal.fail("weight " + std::to_string(n) + ": " + std::to_string(Gp[n].dim()) + " vs " +
                           std::to_string(pc.G.dim()));
    }

    auto& ch = out.checks.checks;
    auto add = [&](const std::string& id, const Failure& f, const std::string& pass) {
        ch.push_back({id, f.ok, f.ok ? pass : "fails at " + f.detail});
    };
    add("cobracket kills shuffles", sh_ok, "Q " + dims_detail(out.quotient_dims, 1));
    add("d well defined on the image", d_well, "ok");
    add("h well defined on the image", h_well, "ok");
    add("d preserves the Lie dual", d_stays, dims_detail(out.dims, 1));
    add("cobracket lands in the Lie dual", br_stays, dims_detail(out.dims, 1));
    add("universal description", universal, dims_detail(out.universal_dims, 1));
    for (auto& r : verify_lie_axioms(g).checks) ch.push_back(std::move(r));
    return out;
}

int LieCobar::index(const std::vector<int>& m) const {
    auto it = lookup.find(m);
    return it == lookup.end() ? -1 : it->second;
}

LieCobar lie_cobar(const CurvedLieCoalgebra& g, int N) {
    LieCobar out;
    out.N = N;
    const int m = g.dim();
    std::vector<int> e(m);
    for (int i = 0; i < m; ++i) e[i] = g.degree[i] - 1;

    std::vector<int> cur;
    std::function<void(int, int)> gen = [&](int start, int wt) {
        out.lookup[cur] = static_cast<int>(out.monomials.size());
        out.monomials.push_back(cur);
        int deg = 0;
        for (int l : cur) deg += e[l];
        out.degree.push_back(deg);
        out.weight.push_back(wt);
        for (int i = start; i < m; ++i)
            if (wt + g.weight[i] <= N) {
                cur.push_back(i);
                gen(e[i] % 2 != 0 ? i + 1 : i, wt + g.weight[i]);
                cur.pop_back();
            }
    };
    gen(0, 0);
    for (const auto& mono : out.monomials) {
        if (mono.empty()) {
            out.labels.push_back("1");
            continue;
        }
        std::string l;
        for (std::size_t i = 0; i < mono.size(); ++i) l += (i ? "·s⁻¹" : "s⁻¹") + g.labels[mono[i]];
        out.labels.push_back(l);
    }

    using Image = std::vector<std::pair<Rational, std::vector<int>>>;
    std::vector<Image> gen0(m), gen1(m), gen2(m);
    for (int i = 0; i < m; ++i) {
        if (g.h[i] != 0) gen0[i].push_back({g.h[i], {}});
        for (const auto& [y, c] : g.d[i]) gen1[i].push_back({-c, {y}});
        for (const auto& t : g.cobracket[i])
            gen2[i].push_back({Rational(-sign_of(g.degree[t.left]), 2) * t.coef, {t.left, t.right}});
    }
    const int size = static_cast<int>(out.monomials.size());
    auto derivation = [&](const std::vector<Image>& images) {
        Matrix D(size, size);
        for (int col = 0; col < size; ++col) {
            const auto& mono = out.monomials[col];
            long long pre = 0;
            for (std::size_t i = 0; i < mono.size(); ++i) {
                for (const auto& [c, img] : images[mono[i]]) {
                    std::vector<int> letters(mono.begin(), mono.begin() + i);
                    letters.insert(letters.end(), img.begin(), img.end());
                    letters.insert(letters.end(), mono.begin() + i + 1, mono.end());
                    int sg = sign_of(pre);
                    if (!normalize(letters, sg, e)) continue;
                    int row = out.index(letters);
                    if (row < 0) throw Error("lie_cobar: derivation leaves the weight bound");
                    D.add(row, col, sg * c);
                }
                pre += e[mono[i]];
            }
        }
        return D;
    };
    out.d0 = derivation(gen0);
    out.d1 = derivation(gen1);
    out.d2 = derivation(gen2);

    auto& ch = out.checks.checks;
    const auto& L = out.labels;
    ch.push_back(zero_check("d₂² = 0", out.d2 * out.d2, L));
    ch.push_back(zero_check("d₁d₂ + d₂d₁ = 0", out.d1 * out.d2 + out.d2 * out.d1, L));
    ch.push_back(zero_check("d₁² + d₀d₂ + d₂d₀ = 0", out.d1 * out.d1 + out.d0 * out.d2 + out.d2 * out.d0, L));
    ch.push_back(zero_check("d₀d₁ + d₁d₀ = 0", out.d0 * out.d1 + out.d1 * out.d0, L));
    ch.push_back(zero_check("d₀² = 0", out.d0 * out.d0, L));
    Matrix D = out.total();
    Matrix D2 = D * D;
    int bad = first_nonzero_col(D2);
    if (bad >= 0) throw NotAComplex(bad, D2.column(bad), "lie_cobar: D² ≠ 0 on " + L[bad]);
    return out;
}

CResolutionReport c_resolution_check(const CommutativePresentation& p, int N) {
    if (N < 2) throw std::invalid_argument("c_resolution_check: N must be at least 2");
    CResolutionReport rep;
    rep.N = N;
    auto& ch = rep.checks.checks;
    QlcPresentation assoc = associative_presentation(p);
    ValidationReport v = validate(assoc);
    ch.push_back({"associative presentation is QLC", v.minimality && v.weak_consistency,
                  "relation rank " + std::to_string(v.relation_rank)});
    QlcSplit s = split(assoc);
    LieDual ld = lie_dual(s, N);
    for (const auto& r : ld.checks.checks) ch.push_back({"Lie dual: " + r.id, r.pass, r.detail});
    LieCobar lc = lie_cobar(ld.coalgebra, N);
    for (const auto& r : lc.checks.checks) ch.push_back({"Lie cobar: " + r.id, r.pass, r.detail});
    FilteredAlgebra A(s, N);
    rep.algebra_dim = A.dim();

    // g_κ on monomials in weight-one letters; everything else goes to zero.
    const int size = static_cast<int>(lc.monomials.size());
    const auto& G = ld.coalgebra;
    std::vector<SparseVec> gcols(size);
    for (int col = 0; col < size; ++col) {
        SparseVec val = A.reduce_word({});
        bool zero = false;
        for (int l : lc.monomials[col]) {
            if (G.weight[l] != 1) {
                zero = true;
                break;
            }
            SparseAccumulator x;
            for (const auto& [a, c] : ld.lifts[l]) x.add(A.letter(a), c);
            val = A.multiply(val, x.take());
        }
        if (!zero) gcols[col] = std::move(val);
    }
    Matrix g = Matrix::from_columns(A.dim(), gcols);
    Matrix D = lc.total();
    ch.push_back(zero_check("g_κ∘D = 0", g * D, lc.labels));

    rep.homology = homology_by_degree(lc.degree, D);
    int h0 = rep.homology.count(0) ? rep.homology.at(0) : 0;
    ch.push_back({"H₀ = F≤N A", h0 == A.dim(), std::to_string(h0) + " vs " + std::to_string(A.dim())});
    int rg = rank(g);
    ch.push_back({"g_κ surjective", rg == A.dim(), "rank " + std::to_string(rg)});
    auto deg0 = select_degree(lc.degree, 0), deg1 = select_degree(lc.degree, 1);
    int rd = rank(D.submatrix(deg0, deg1));
    int kerg = static_cast<int>(deg0.size()) - rank(g.submatrix(iota(A.dim()), deg0));
    ch.push_back({"ker g_κ = boundaries", kerg == rd, std::to_string(kerg) + " vs " + std::to_string(rd)});

    // Stable H₁, H₂ through F≤N-2 → F≤N.
    LieCobar small = lie_cobar(G, N - 2);
    Matrix Ds = small.total();
    for (int k = 1; k <= 2; ++k) {
        auto sk = select_degree(small.degree, k);
        Subspace zs = kernel_basis(Ds.submatrix(iota(Ds.rows()), sk));
        std::vector<SparseVec> cyc;
        for (const auto& z : zs.basis()) {
            SparseVec v;
            for (const auto& [i, c] : z) v.emplace_back(lc.index(small.monomials[sk[i]]), c);
            std::sort(v.begin(), v.end());
            cyc.push_back(std::move(v));
        }
        std::vector<SparseVec> bnd;
        for (int col : select_degree(lc.degree, k + 1)) bnd.push_back(D.column(col));
        int st = induced_rank(Subspace::span(size, std::move(cyc)), Subspace::span(size, std::move(bnd)));
        if (k == 1) rep.h1_stable = st;
        ch.push_back({"stable H" + std::string(k == 1 ? "₁" : "₂") + " = 0", st == 0, std::to_string(st)});
    }

    // d₂ alone is the Lie cobar of the quadratic dual; weightwise it must resolve qA.
    FilteredAlgebra qa(s.quadratic_part(), N);
    auto qdims = qa.graded_dims();
    bool slices_ok = true;
    std::string slice_detail;
    for (int w = 0; w <= N; ++w) {
        std::vector<int> ids;
        std::vector<int> degs;
        for (int i = 0; i < size; ++i)
            if (lc.weight[i] == w) {
                ids.push_back(i);
                degs.push_back(lc.degree[i]);
            }
        auto hw = homology_by_degree(degs, lc.d2.submatrix(ids, ids));
        for (const auto& [k, dim] : hw) {
            if (dim != 0 && k <= 1) rep.weight_slice[{k, w}] = dim;
            bool ok = (k == 0) ? dim == qdims[w] : dim == 0;
            if (!ok && slices_ok) {
                slices_ok = false;
                slice_detail = "weight " + std::to_string(w) + " degree " + std::to_string(k) + ": " +
                               std::to_string(dim);
            }
        }
        if (!hw.count(0) && qdims[w] != 0 && slices_ok) {
            slices_ok = false;
            slice_detail = "weight " + std::to_string(w) + ": H₀ = 0";
        }
    }
    ch.push_back({"quadratic Lie cobar resolves qA by weight", slices_ok, slices_ok ? "weights ≤ N" : slice_detail});
    KoszulCertificate cert = koszulness_certificate(s.quadratic_part(), N);
    ch.push_back({"associative Koszul certificate (proxy)", cert.pass(),
                  cert.pass() ? "weights ≤ N" : "fails at weight " + std::to_string(cert.failing_weight())});
    return rep;
}

UcReport uc_comparison(const CommutativePresentation& p, int n_max) {
    if (n_max < 1) throw std::invalid_argument("uc_comparison: n_max must be at least 1");
    UcReport rep;
    rep.n_max = n_max;
    auto& ch = rep.checks.checks;
    QlcPresentation assoc = associative_presentation(p);
    QlcSplit s = split(assoc);
    CurvedCoalgebra C(s, n_max);
    LieDual ld = lie_dual(s, n_max);
    for (const auto& r : ld.checks.checks) ch.push_back({"Lie dual: " + r.id, r.pass, r.detail});

    rep.assoc_dims.assign(n_max + 1, 0);
    rep.lie_dims.assign(n_max + 1, 0);
    for (int n = 0; n <= n_max; ++n) rep.assoc_dims[n] = C.dim(n);
    for (int n = 1; n <= n_max; ++n) rep.lie_dims[n] = ld.dims[n];

    // ∏ (1 + t^w) over odd basis elements and ∏ 1/(1 - t^w) over even ones.
    std::vector<long long> series(n_max + 1, 0);
    series[0] = 1;
    const auto& G = ld.coalgebra;
    for (int i = 0; i < G.dim(); ++i) {
        const int w = G.weight[i];
        if (G.degree[i] % 2 != 0) {
            for (int n = n_max; n >= w; --n) series[n] += series[n - w];
        } else {
            for (int n = w; n <= n_max; ++n) series[n] += series[n - w];
        }
    }
    rep.pbw_dims.assign(series.begin(), series.end());
    std::ostringstream os;
    for (int n = 0; n <= n_max; ++n) os << (n ? " " : "") << rep.pbw_dims[n];
    ch.push_back({"co-PBW dimensions", rep.pbw_dims == rep.assoc_dims, os.str()});

    // Weight two of the Lie dual is the span of the quadratic parts of the relations.
    const int d = p.dim();
    std::vector<SparseVec> quads;
    for (const auto& r : p.relations) {
        SparseAccumulator q;
        for (const auto& [idx, c] : r.quadratic) {
            int x = idx / d, y = idx % d;
            q.add(std::min(x, y) * d + std::max(x, y), c);
        }
        quads.push_back(q.take());
    }
    int qrank = Subspace::span(d * d, std::move(quads)).dim();
    if (n_max >= 2)
        ch.push_back({"weight 2 = relations", rep.lie_dims[2] == qrank,
                      std::to_string(rep.lie_dims[2]) + " vs " + std::to_string(qrank)});

    // Weight-three conditions on φ̃ and θ̃ read off G⁽³⁾.
    if (n_max >= 3) {
        Failure stays, sq, td;
        for (const auto& r : ld.checks.checks)
            if (r.id == "d preserves the Lie dual" && !r.pass) stays.fail(r.detail);
        for (int i = 0; i < G.dim(); ++i) {
            if (G.weight[i] != 3) continue;
            SparseAccumulator dd;
            for (const auto& [y, cy] : G.d[i]) dd.add(G.d[y], cy);
            for (const auto& t : G.cobracket[i])
                if (G.h[t.left] != 0) dd.add(t.right, -t.coef * G.h[t.left]);
            if (!dd.take().empty()) sq.fail(G.labels[i]);
            Rational h = 0;
            for (const auto& [y, cy] : G.d[i]) h += cy * G.h[y];
            if (h != 0) td.fail(G.labels[i]);
        }
        auto add = [&](const std::string& id, const Failure& f) {
            ch.push_back({id, f.ok, f.ok ? "weight 3" : "fails on " + f.detail});
        };
        add("φ̃ keeps G⁽³⁾ in G⁽²⁾", stays);
        add("d² = (h⊗1)]−[ on G⁽³⁾", sq);
        add("θ̃∘d = 0 on G⁽³⁾", td);
    }
    return rep;
}

}  // namespace koszul
