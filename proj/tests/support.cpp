#include "support.hpp"

#include "koszul/koszul_complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#ifndef KOSZUL_FIXTURE_DIR
#error "KOSZUL_FIXTURE_DIR must point at tools/fixtures"
#endif

namespace support {

using namespace koszul;

PresentationDocument fixture(const std::string& name) {
    return load_document(std::string(KOSZUL_FIXTURE_DIR) + "/" + name + ".json");
}
QlcPresentation fixture_presentation(const std::string& name) { return associative_form(fixture(name)); }
QlcSplit fixture_split(const std::string& name) { return split(fixture_presentation(name)); }

const std::vector<std::string>& associative_fixtures() {
    static const std::vector<std::string> names{"weyl",  "heisenberg-unital", "ug-nonabelian", "tensor2",
                                                "sym2",  "poly1",             "dualnumbers"};
    return names;
}
const std::vector<std::string>& all_fixtures() {
    static const std::vector<std::string> names = [] {
        auto v = associative_fixtures();
        v.push_back("laurent");
        v.push_back("sym2-commutative");
        return v;
    }();
    return names;
}

// ---------------------------------------------------------------- dense linear algebra

namespace {

// Reduces m in place; returns the pivot columns.
std::vector<int> gauss(Dense& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

// Null space of a rows×cols matrix as vectors of length cols.
std::vector<std::vector<Rational>> kernel(Dense m, int cols) {
    if (m.empty()) {
        std::vector<std::vector<Rational>> out;
        for (int c = 0; c < cols; ++c) {
            std::vector<Rational> e(cols, 0);
            e[c] = 1;
            out.push_back(e);
        }
        return out;
    }
    auto piv = gauss(m);
    std::vector<bool> is_piv(cols, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<std::vector<Rational>> out;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rational> v(cols, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
        out.push_back(v);
    }
    return out;
}

Dense zeros(int rows, int cols) { return Dense(rows, std::vector<Rational>(cols, 0)); }

Dense inverse(const Dense& a) {
    const int n = static_cast<int>(a.size());
    Dense aug = zeros(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    gauss(aug);
    Dense inv = zeros(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

}  // namespace

int naive_rank(Dense m) { return static_cast<int>(gauss(m).size()); }

int naive_rank_columns(const std::vector<std::vector<Rational>>& cols) {
    if (cols.empty()) return 0;
    return naive_rank(cols);  // row rank = column rank
}

// ---------------------------------------------------------------- random presentations

namespace {

struct LieSeed {
    int n;
    // bracket[i][j] = [e_i, e_j] for i < j, dense in the e basis
    std::map<std::pair<int, int>, std::vector<Rational>> bracket;
    bool any_cocycle;  // every alternating form is a cocycle (dim ≤ 2 or abelian)
};

std::vector<LieSeed> lie_seeds() {
    std::vector<LieSeed> s;
    s.push_back({2, {}, true});                                    // abelian
    s.push_back({2, {{{0, 1}, {0, 1}}}, true});                    // [e0,e1] = e1
    s.push_back({3, {}, true});                                    // abelian
    s.push_back({3, {{{0, 1}, {0, 0, 1}}}, false});                // Heisenberg
    s.push_back({3, {{{0, 1}, {0, 2, 0}}, {{0, 2}, {0, 0, -2}}, {{1, 2}, {1, 0, 0}}}, false});  // sl2
    s.push_back({3, {{{0, 1}, {0, 0, 1}}, {{1, 2}, {1, 0, 0}}, {{0, 2}, {0, -1, 0}}}, false});  // so3
    s.push_back({3, {{{0, 1}, {0, 1, 0}}, {{0, 2}, {0, 0, 1}}}, false});                        // r3
    return s;
}

Relation commutator_relation(int d, int a, int b, const std::vector<Rational>& bracket, const Rational& omega) {
    Relation r;
    r.constant = -omega;
    SparseAccumulator lin;
    for (int k = 0; k < d; ++k) lin.add(k, -bracket[k]);
    r.linear = lin.take();
    SparseAccumulator q;
    q.add(a * d + b, 1);
    q.add(b * d + a, -1);
    r.quadratic = q.take();
    return r;
}

std::vector<Generator> plain_generators(int d) {
    static const char* names[] = {"x", "y", "z"};
    std::vector<Generator> g;
    for (int i = 0; i < d; ++i) g.push_back({names[i], 0});
    return g;
}

QlcPresentation lie_type(const LieSeed& seed, std::mt19937& rng) {
    const int n = seed.n;
    std::uniform_int_distribution<int> coef(-2, 2);
    Dense P;
    do {
        P = zeros(n, n);
        for (auto& row : P)
            for (auto& x : row) x = coef(rng);
    } while (naive_rank(P) < n);
    Dense Pinv = inverse(P);

    auto bracket_e = [&](int i, int j) {
        std::vector<Rational> v(n, 0);
        if (i == j) return v;
        auto it = seed.bracket.find({std::min(i, j), std::max(i, j)});
        if (it == seed.bracket.end()) return v;
        for (int k = 0; k < n; ++k) v[k] = i < j ? it->second[k] : Rational(-it->second[k]);
        return v;
    };
    Dense omega_e = zeros(n, n);
    if (seed.any_cocycle) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                omega_e[i][j] = coef(rng);
                omega_e[j][i] = -omega_e[i][j];
            }
    }
    std::vector<Rational> lambda(n);  // coboundary term λ([-,-]) in the new basis
    for (auto& x : lambda) x = coef(rng);

    QlcPresentation p;
    p.name = "random-lie";
    p.generators = plain_generators(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            std::vector<Rational> in_e(n, 0);
            Rational omega = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Rational w = P[i][a] * P[j][b];
                    if (w == 0) continue;
                    auto br = bracket_e(i, j);
                    for (int k = 0; k < n; ++k) in_e[k] += w * br[k];
                    omega += w * omega_e[i][j];
                }
            std::vector<Rational> in_f(n, 0);  // e_k = Σ_c Pinv[c][k] f_c
            for (int k = 0; k < n; ++k)
                for (int c = 0; c < n; ++c) in_f[c] += Pinv[c][k] * in_e[k];
            for (int c = 0; c < n; ++c) omega += lambda[c] * in_f[c];
            p.relations.push_back(commutator_relation(n, a, b, in_f, omega));
        }
    return p;
}

QlcPresentation monomial_type(std::mt19937& rng) {
    std::uniform_int_distribution<int> dim(2, 3);
    const int d = dim(rng);
    QlcPresentation p;
    p.name = "random-monomial";
    p.generators = plain_generators(d);
    std::bernoulli_distribution pick(0.4);
    for (int w = 0; w < d * d; ++w)
        if (pick(rng)) p.relations.push_back(Relation{0, {}, {{w, 1}}});
    if (p.relations.empty()) p.relations.push_back(Relation{0, {}, {{0, 1}}});
    return p;
}

}  // namespace

std::vector<QlcPresentation> random_valid_qlc(unsigned seed, int count) {
    std::mt19937 rng(seed);
    auto seeds = lie_seeds();
    std::vector<QlcPresentation> out;
    for (int k = 0; k < count; ++k) {
        if (k % 4 == 3) out.push_back(monomial_type(rng));
        else out.push_back(lie_type(seeds[k % seeds.size()], rng));
        out.back().name += "-" + std::to_string(k);
    }
    return out;
}

QlcPresentation jacobi_violating() {
    // [x,y] = z, [y,z] = 0, [z,x] = x
    QlcPresentation p;
    p.name = "jacobi-violating";
    p.generators = plain_generators(3);
    p.relations.push_back(commutator_relation(3, 0, 1, {0, 0, 1}, 0));
    p.relations.push_back(commutator_relation(3, 1, 2, {0, 0, 0}, 0));
    p.relations.push_back(commutator_relation(3, 0, 2, {-1, 0, 0}, 0));  // [x,z] = -x
    return p;
}

QlcPresentation find_non_koszul(unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-1, 1), nrel(2, 4);
    for (int attempt = 0; attempt < 2000; ++attempt) {
        QlcPresentation p;
        p.name = "search-" + std::to_string(seed) + "-" + std::to_string(attempt);
        p.generators = plain_generators(3);
        const int r = nrel(rng);
        Dense rows;
        for (int i = 0; i < r; ++i) {
            std::vector<Rational> q(9, 0);
            for (auto& x : q) x = coef(rng);
            rows.push_back(q);
        }
        if (naive_rank(rows) < r) continue;
        for (const auto& q : rows) p.relations.push_back(Relation{0, {}, sparse_from_dense(q)});
        if (!koszulness_certificate(split(p), 4).pass()) return p;
    }
    throw std::runtime_error("no non-Koszul presentation found");
}

// ---------------------------------------------------------------- truncated complexes

namespace {

// A complex C_0 ← C_1 ← … whose basis elements carry comparable keys, so that the complex at
// bound N-2 embeds in the one at bound N.
struct KeyedComplex {
    std::vector<std::vector<std::vector<int>>> keys;  // per position
    std::vector<Dense> d;                             // d[k]: C_k → C_{k-1}, k ≥ 1; d[0] unused
};

using Poly2 = std::map<std::pair<int, int>, Rational>;  // x^i y^j ↦ coefficient

void add_to(Poly2& p, int i, int j, const Rational& c) {
    if (c == 0) return;
    Rational& slot = p[{i, j}];
    slot += c;
    if (slot == 0) p.erase({i, j});
}

Rational binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Rational r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Rational power(const Rational& b, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

using Product = std::function<Poly2(int, int, int, int)>;

Poly2 weyl_product(int a, int b, int c, int d) {
    // y^b x^c = Σ_m C(b,m) C(c,m) m! x^{c-m} y^{b-m}
    Poly2 out;
    Rational fact = 1;
    for (int m = 0; m <= std::min(b, c); ++m) {
        if (m > 0) fact *= m;
        add_to(out, a + c - m, b + d - m, binom(b, m) * binom(c, m) * fact);
    }
    return out;
}

Poly2 ug_product(int a, int b, int c, int d) {
    // y^b x^c = (x - b)^c y^b
    Poly2 out;
    for (int k = 0; k <= c; ++k) add_to(out, a + k, b + d, binom(c, k) * power(Rational(-b), c - k));
    return out;
}

Poly2 commutator(const Product& mul, int i, int j, int letter) {
    const int gi = letter == 0 ? 1 : 0, gj = letter == 0 ? 0 : 1;
    Poly2 out = mul(i, j, gi, gj);
    for (const auto& [k, c] : mul(gi, gj, i, j)) add_to(out, k.first, k.second, -c);
    return out;
}

// A ⊗ Λ(x, y) truncated at filtration + exterior degree ≤ N, with
// d(a⊗e_v) = [a, v] and d(a⊗e_x e_y) = [a,x]⊗e_y - [a,y]⊗e_x - a·[x,y]_lin ⊗ e_{lin}.
KeyedComplex koszul_type_complex(const Product& mul, int N, const std::vector<Rational>& bracket_xy) {
    KeyedComplex kc;
    kc.keys.resize(3);
    for (int k = 0; k <= 2; ++k)
        for (int t = 0; t + k <= N; ++t)
            for (int i = 0; i <= t; ++i) {
                const int j = t - i;
                if (k == 1) {
                    kc.keys[1].push_back({i, j, 0});
                    kc.keys[1].push_back({i, j, 1});
                } else {
                    kc.keys[k].push_back({i, j});
                }
            }
    auto index_of = [&](int pos, const std::vector<int>& key) {
        auto it = std::find(kc.keys[pos].begin(), kc.keys[pos].end(), key);
        if (it == kc.keys[pos].end()) throw std::logic_error("oracle: term leaves the truncation");
        return static_cast<int>(it - kc.keys[pos].begin());
    };
    kc.d.resize(3);
    kc.d[1] = zeros(static_cast<int>(kc.keys[0].size()), static_cast<int>(kc.keys[1].size()));
    for (std::size_t c = 0; c < kc.keys[1].size(); ++c) {
        const auto& key = kc.keys[1][c];
        for (const auto& [m, v] : commutator(mul, key[0], key[1], key[2])) kc.d[1][index_of(0, {m.first, m.second})][c] += v;
    }
    kc.d[2] = zeros(static_cast<int>(kc.keys[1].size()), static_cast<int>(kc.keys[2].size()));
    for (std::size_t c = 0; c < kc.keys[2].size(); ++c) {
        const int i = kc.keys[2][c][0], j = kc.keys[2][c][1];
        for (const auto& [m, v] : commutator(mul, i, j, 0)) kc.d[2][index_of(1, {m.first, m.second, 1})][c] += v;
        for (const auto& [m, v] : commutator(mul, i, j, 1)) kc.d[2][index_of(1, {m.first, m.second, 0})][c] -= v;
        for (int l = 0; l < 2; ++l)
            if (bracket_xy[l] != 0) kc.d[2][index_of(1, {i, j, l})][c] -= bracket_xy[l];
    }
    return kc;
}

Dense product(const Dense& a, const Dense& b, int inner) {
    if (a.empty()) return {};
    const int cols = b.empty() ? 0 : static_cast<int>(b[0].size());
    Dense out = zeros(static_cast<int>(a.size()), cols);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (int k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

int cols_of(const KeyedComplex& kc, int pos) { return static_cast<int>(kc.keys[pos].size()); }

// Columns of d[k] as vectors.
std::vector<std::vector<Rational>> image_vectors(const Dense& d, int cols) {
    std::vector<std::vector<Rational>> out;
    for (int c = 0; c < cols; ++c) {
        std::vector<Rational> v;
        for (const auto& row : d) v.push_back(row[c]);
        out.push_back(v);
    }
    return out;
}

HomologyDims stable_homology(const std::function<KeyedComplex(int)>& build, int N) {
    KeyedComplex big = build(N), sub = build(N - 2);
    const int top = static_cast<int>(big.keys.size()) - 1;
    for (int k = 2; k <= top; ++k)
        if (naive_rank(product(big.d[k - 1], big.d[k], cols_of(big, k - 1))) != 0)
            throw std::logic_error("oracle complex has d² ≠ 0");
    auto rank_d = [&](const KeyedComplex& kc, int k) {
        if (k < 1 || k > top) return 0;
        return naive_rank(kc.d[k]);
    };
    HomologyDims out;
    for (int k = 0; k <= top; ++k) {
        out.raw.push_back(cols_of(big, k) - rank_d(big, k) - rank_d(big, k + 1));
        // cycles of sub, embedded; boundaries of big
        std::vector<std::vector<Rational>> cycles =
            k == 0 ? kernel({}, cols_of(sub, 0)) : kernel(sub.d[k], cols_of(sub, k));
        std::vector<std::vector<Rational>> embedded;
        for (const auto& z : cycles) {
            std::vector<Rational> v(cols_of(big, k), 0);
            for (int i = 0; i < cols_of(sub, k); ++i) {
                if (z[i] == 0) continue;
                auto it = std::find(big.keys[k].begin(), big.keys[k].end(), sub.keys[k][i]);
                v[it - big.keys[k].begin()] = z[i];
            }
            embedded.push_back(v);
        }
        std::vector<std::vector<Rational>> bounds =
            k < top ? image_vectors(big.d[k + 1], cols_of(big, k + 1)) : std::vector<std::vector<Rational>>{};
        const int rb = naive_rank_columns(bounds);
        auto both = bounds;
        both.insert(both.end(), embedded.begin(), embedded.end());
        out.stable.push_back(naive_rank_columns(both) - rb);
    }
    return out;
}

}  // namespace

HomologyDims weyl_hh_oracle(int N) {
    return stable_homology([](int n) { return koszul_type_complex(weyl_product, n, {0, 0}); }, N);
}

HomologyDims ce_ug_oracle(int N) {
    return stable_homology([](int n) { return koszul_type_complex(ug_product, n, {0, 1}); }, N);
}

// ---------------------------------------------------------------- Connes' complex

std::vector<int> connes_truncated_poly(int D, int N, int n_max) {
    // C_n = Ā^{⊗ n+1} on exponent words with entries in 1..D and total weight ≤ N.
    auto words_of = [&](int len) {
        std::vector<std::vector<int>> out;
        std::vector<int> w(len, 1);
        std::function<void(int, int)> rec = [&](int pos, int used) {
            if (pos == len) {
                out.push_back(w);
                return;
            }
            for (int e = 1; e <= D && used + e <= N; ++e) {
                w[pos] = e;
                rec(pos + 1, used + e);
            }
        };
        rec(0, 0);
        return out;
    };
    std::vector<std::vector<std::vector<int>>> C;
    for (int n = 0; n <= n_max + 1; ++n) C.push_back(words_of(n + 1));
    auto idx = [&](int n, const std::vector<int>& w) {
        auto it = std::find(C[n].begin(), C[n].end(), w);
        return it == C[n].end() ? -1 : static_cast<int>(it - C[n].begin());
    };
    // b: C_n → C_{n-1} and 1 - t on C_n, as column lists
    auto b_columns = [&](int n) {
        std::vector<std::vector<Rational>> cols;
        for (const auto& w : C[n]) {
            std::vector<Rational> v(C[n - 1].size(), 0);
            for (int i = 0; i < n; ++i) {
                if (w[i] + w[i + 1] > D) continue;
                std::vector<int> u(w.begin(), w.begin() + i);
                u.push_back(w[i] + w[i + 1]);
                u.insert(u.end(), w.begin() + i + 2, w.end());
                v[idx(n - 1, u)] += (i % 2 == 0) ? 1 : -1;
            }
            if (w[n] + w[0] <= D) {
                std::vector<int> u{w[n] + w[0]};
                u.insert(u.end(), w.begin() + 1, w.begin() + n);
                v[idx(n - 1, u)] += (n % 2 == 0) ? 1 : -1;
            }
            cols.push_back(v);
        }
        return cols;
    };
    auto one_minus_t = [&](int n) {
        std::vector<std::vector<Rational>> cols;
        for (const auto& w : C[n]) {
            std::vector<Rational> v(C[n].size(), 0);
            v[idx(n, w)] += 1;
            std::vector<int> u{w[n]};
            u.insert(u.end(), w.begin(), w.begin() + n);
            v[idx(n, u)] -= (n % 2 == 0) ? 1 : -1;
            cols.push_back(v);
        }
        return cols;
    };
    std::vector<int> kdim, bbar_rank(n_max + 2, 0);
    for (int n = 0; n <= n_max + 1; ++n) kdim.push_back(naive_rank_columns(one_minus_t(n)));
    for (int n = 1; n <= n_max + 1; ++n) {
        auto cols = b_columns(n);
        auto k = one_minus_t(n - 1);
        cols.insert(cols.end(), k.begin(), k.end());
        bbar_rank[n] = naive_rank_columns(cols) - kdim[n - 1];
    }
    std::vector<int> out;
    for (int n = 0; n <= n_max; ++n)
        out.push_back(static_cast<int>(C[n].size()) - kdim[n] - bbar_rank[n] - bbar_rank[n + 1]);
    return out;
}

// ---------------------------------------------------------------- counting formulas

namespace {
int moebius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    return n > 1 ? -result : result;
}
int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}
long long ipow_ll(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}
}  // namespace

long long necklaces(int n, int k) {
    long long s = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) s += euler_phi(d) * ipow_ll(k, n / d);
    return s / n;
}

long long super_witt(int n, int k) {
    long long s = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        const int e = n / d;
        s += moebius(d) * (((n + e) % 2 == 0) ? 1 : -1) * ipow_ll(k, e);
    }
    return s / n;
}

// ---------------------------------------------------------------- polynomial quotients

int sym_quotient_dim(int nvars, const std::vector<Poly>& relations, int N) {
    std::vector<std::vector<int>> monos;
    std::vector<int> e(nvars, 0);
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == nvars) {
            monos.push_back(e);
            return;
        }
        for (int a = 0; a <= left; ++a) {
            e[v] = a;
            rec(v + 1, left - a);
        }
        e[v] = 0;
    };
    rec(0, N);
    auto deg = [](const std::vector<int>& m) { return std::accumulate(m.begin(), m.end(), 0); };
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = static_cast<int>(i);
    Dense rows;
    for (const auto& r : relations)
        for (const auto& m : monos) {
            if (deg(m) > N - 2) continue;
            std::vector<Rational> row(monos.size(), 0);
            for (const auto& [ex, c] : r.terms) {
                std::vector<int> t(nvars);
                for (int v = 0; v < nvars; ++v) t[v] = ex[v] + m[v];
                row[index.at(t)] += c;
            }
            rows.push_back(row);
        }
    return static_cast<int>(monos.size()) - naive_rank(rows);
}

}  // namespace support
