#include "flowcat/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace flowcat {

void SparseIntMatrix::add(int row, int col, long long coeff) {
    if (coeff == 0) return;
    if (row < 0 || row >= rows || col < 0 || col >= cols) throw Error("matrix entry out of range");
    columns[col].emplace_back(row, coeff);
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<long long>>& dense) {
    int r = static_cast<int>(dense.size());
    int c = r == 0 ? 0 : static_cast<int>(dense[0].size());
    SparseIntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (dense[i][j] != 0) m.add(i, j, dense[i][j]);
    return m;
}

std::vector<std::vector<long long>> SparseIntMatrix::to_dense() const {
    std::vector<std::vector<long long>> dense(rows, std::vector<long long>(cols, 0));
    for (int j = 0; j < cols; ++j)
        for (auto [i, v] : columns[j]) dense[i][j] += v;
    return dense;
}

namespace {

// Row-major working form for the elimination.
struct Workspace {
    std::vector<std::map<int, BigInt>> row;  // row i -> {col -> value}
    std::vector<std::set<int>> col_rows;     // col j -> rows with a nonzero

    explicit Workspace(const SparseIntMatrix& m) : row(m.rows), col_rows(m.cols) {
        for (int j = 0; j < m.cols; ++j) {
            for (auto [i, v] : m.columns[j]) {
                BigInt& slot = row[i][j];
                slot += v;
                if (slot == 0) row[i].erase(j);
            }
        }
        for (int i = 0; i < m.rows; ++i)
            for (const auto& [j, v] : row[i]) col_rows[j].insert(i);
    }

    BigInt value(int i, int j) const {
        auto it = row[i].find(j);
        return it == row[i].end() ? BigInt(0) : it->second;
    }

    void set(int i, int j, const BigInt& v) {
        if (v == 0) {
            row[i].erase(j);
            col_rows[j].erase(i);
        } else {
            row[i][j] = v;
            col_rows[j].insert(i);
        }
    }

    // row r' -= q * row r
    void row_op(int rp, int r, const BigInt& q) {
        if (q == 0) return;
        for (const auto& [j, v] : row[r]) set(rp, j, value(rp, j) - q * v);
    }

    // col c' -= q * col c
    void col_op(int cp, int c, const BigInt& q) {
        if (q == 0) return;
        std::vector<int> rows_of_c(col_rows[c].begin(), col_rows[c].end());
        for (int i : rows_of_c) set(i, cp, value(i, cp) - q * value(i, c));
    }
};

BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

SmithResult smith_normal_form(const SparseIntMatrix& mat) {
    Workspace w(mat);
    std::vector<BigInt> diagonal;

    std::vector<int> live_rows;
    for (int i = 0; i < mat.rows; ++i)
        if (!w.row[i].empty()) live_rows.push_back(i);

    while (true) {
        // Pivot choice: unit entries first, smallest Markowitz fill
        // estimate among them; otherwise smallest absolute value.
        int pr = -1, pc = -1;
        long long best_score = -1;
        BigInt best_abs = 0;
        bool best_is_unit = false;
        for (int i : live_rows) {
            if (w.row[i].empty()) continue;
            for (const auto& [j, v] : w.row[i]) {
                BigInt a = big_abs(v);
                bool unit = (a == 1);
                long long score = static_cast<long long>(w.row[i].size() - 1) *
                                  static_cast<long long>(w.col_rows[j].size() - 1);
                bool better;
                if (pr < 0)
                    better = true;
                else if (unit != best_is_unit)
                    better = unit;
                else if (unit)
                    better = score < best_score;
                else
                    better = a < best_abs || (a == best_abs && score < best_score);
                if (better) {
                    pr = i;
                    pc = j;
                    best_score = score;
                    best_abs = a;
                    best_is_unit = unit;
                    if (unit && score == 0) break;
                }
            }
            if (best_is_unit && best_score == 0) break;
        }
        if (pr < 0) break;

        // Euclidean steps until the pivot alone remains in its row and
        // column.  Each step clears an entry or shrinks the pivot.
        while (true) {
            BigInt p = w.value(pr, pc);
            int other_col = -1;
            for (const auto& [j, v] : w.row[pr])
                if (j != pc) {
                    other_col = j;
                    break;
                }
            if (other_col >= 0) {
                BigInt q = w.value(pr, other_col) / p;
                w.col_op(other_col, pc, q);
                if (w.value(pr, other_col) != 0) pc = other_col;
                continue;
            }
            int other_row = -1;
            for (int i : w.col_rows[pc])
                if (i != pr) {
                    other_row = i;
                    break;
                }
            if (other_row >= 0) {
                BigInt q = w.value(other_row, pc) / p;
                w.row_op(other_row, pr, q);
                if (w.value(other_row, pc) != 0) pr = other_row;
                continue;
            }
            break;
        }
        diagonal.push_back(big_abs(w.value(pr, pc)));
        w.set(pr, pc, 0);
        live_rows.erase(std::remove_if(live_rows.begin(), live_rows.end(),
                                       [&](int i) { return w.row[i].empty(); }),
                        live_rows.end());
    }

    // Restore the divisibility chain d1 | d2 | ... via gcd/lcm exchanges;
    // this preserves all determinantal divisors.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < diagonal.size(); ++i) {
            for (size_t j = i + 1; j < diagonal.size(); ++j) {
                if (diagonal[j] % diagonal[i] != 0) {
                    BigInt g = boost::multiprecision::gcd(diagonal[i], diagonal[j]);
                    BigInt l = diagonal[i] / g * diagonal[j];
                    diagonal[i] = g;
                    diagonal[j] = l;
                    changed = true;
                }
            }
        }
    }
    std::sort(diagonal.begin(), diagonal.end());

    SmithResult result;
    result.factors = std::move(diagonal);
    result.rank = static_cast<int>(result.factors.size());
    return result;
}

void IntegerChainComplex::verify_dd_zero() const {
    for (size_t k = 2; k < boundaries.size(); ++k) {
        const SparseIntMatrix& hi = boundaries[k];
        const SparseIntMatrix& lo = boundaries[k - 1];
        for (int j = 0; j < hi.cols; ++j) {
            std::map<int, long long> acc;
            for (auto [mid, v] : hi.columns[j])
                for (auto [row, w] : lo.columns[mid]) acc[row] += v * w;
            for (auto& [row, v] : acc)
                if (v != 0)
                    throw OrderViolationError("dd != 0 in degree " + std::to_string(k) + ", column " +
                                              std::to_string(j));
        }
    }
}

long long IntegerChainComplex::chain_euler() const {
    long long e = 0;
    int sign = 1;
    for (long long r : ranks) {
        e += sign * r;
        sign = -sign;
    }
    return e;
}

IntegerChainComplex chain_complex(const DeltaSet& ds) {
    IntegerChainComplex cc;
    int dim = ds.dim();
    if (dim < 0) return cc;
    cc.ranks.resize(dim + 1);
    cc.boundaries.resize(dim + 1);
    for (int n = 0; n <= dim; ++n) cc.ranks[n] = static_cast<long long>(ds.faces[n].size());
    for (int n = 1; n <= dim; ++n) {
        SparseIntMatrix b(static_cast<int>(cc.ranks[n - 1]), static_cast<int>(cc.ranks[n]));
        for (size_t s = 0; s < ds.faces[n].size(); ++s) {
            int sign = 1;
            for (int i = 0; i <= n; ++i) {
                b.add(ds.faces[n][s][i], static_cast<int>(s), sign);
                sign = -sign;
            }
        }
        cc.boundaries[n] = std::move(b);
    }
    cc.verify_dd_zero();
    return cc;
}

HomologyResult& HomologyResult::normalize() {
    size_t n = std::max(betti.size(), torsion.size());
    betti.resize(n, 0);
    torsion.resize(n);
    while (n > 0 && betti[n - 1] == 0 && torsion[n - 1].empty()) --n;
    betti.resize(n);
    torsion.resize(n);
    return *this;
}

bool HomologyResult::operator==(const HomologyResult& other) const {
    HomologyResult a = *this, b = other;
    a.normalize();
    b.normalize();
    if (a.betti != b.betti) return false;
    a.torsion.resize(a.betti.size());
    b.torsion.resize(b.betti.size());
    return a.torsion == b.torsion;
}

std::string HomologyResult::to_string() const {
    std::ostringstream os;
    os << '(';
    size_t degrees = std::max(betti.size(), torsion.size());
    for (size_t n = 0; n < degrees; ++n) {
        if (n) os << ", ";
        long long b = n < betti.size() ? betti[n] : 0;
        std::vector<long long> t = n < torsion.size() ? torsion[n] : std::vector<long long>{};
        if (b == 0 && t.empty()) {
            os << '0';
            continue;
        }
        bool first = true;
        if (b == 1) {
            os << 'Z';
            first = false;
        } else if (b > 1) {
            os << "Z^" << b;
            first = false;
        }
        for (long long f : t) {
            if (!first) os << " + ";
            os << "Z/" << f;
            first = false;
        }
    }
    os << ')';
    return os.str();
}

HomologyResult homology(const IntegerChainComplex& cc, int top_degree) {
    HomologyResult h;
    int dim = cc.top_degree();
    if (dim < 0) return h;
    int top = top_degree < 0 ? dim : std::min(top_degree, dim);

    std::vector<SmithResult> snf(dim + 2);
    for (int k = 1; k <= dim; ++k) snf[k] = smith_normal_form(cc.boundaries[k]);

    h.betti.resize(top + 1);
    h.torsion.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        long long rank_n = cc.ranks[n];
        long long r_lo = n >= 1 ? snf[n].rank : 0;
        long long r_hi = n + 1 <= dim ? snf[n + 1].rank : 0;
        h.betti[n] = rank_n - r_lo - r_hi;
        if (h.betti[n] < 0) throw OrderViolationError("negative Betti number; dd != 0?");
        if (n + 1 <= dim)
            for (const BigInt& f : snf[n + 1].factors)
                if (f > 1) h.torsion[n].push_back(f.convert_to<long long>());
    }
    h.euler = 0;
    int sign = 1;
    for (long long b : h.betti) {
        h.euler += sign * b;
        sign = -sign;
    }
    return h;
}

bool is_acyclic_homology(const HomologyResult& h) {
    HomologyResult want;
    want.betti = {1};
    want.euler = 1;
    return h == want;
}

std::vector<long long> betti_mod2(const IntegerChainComplex& cc, int top_degree) {
    int dim = cc.top_degree();
    std::vector<long long> ranks(dim + 2, 0);
    for (int k = 1; k <= dim; ++k) {
        // GF(2) column elimination over bit rows.
        const SparseIntMatrix& m = cc.boundaries[k];
        size_t words = (m.rows + 63) / 64;
        std::vector<std::vector<uint64_t>> cols;
        for (int j = 0; j < m.cols; ++j) {
            std::vector<uint64_t> col(words, 0);
            for (auto [i, v] : m.columns[j])
                if (v % 2 != 0) col[i >> 6] ^= uint64_t(1) << (i & 63);
            cols.push_back(std::move(col));
        }
        std::vector<std::vector<uint64_t>> basis;  // reduced pivot columns
        std::vector<int> pivot_bit;
        long long rank = 0;
        for (auto& col : cols) {
            for (size_t b = 0; b < basis.size(); ++b) {
                int pb = pivot_bit[b];
                if ((col[pb >> 6] >> (pb & 63)) & 1)
                    for (size_t w = 0; w < words; ++w) col[w] ^= basis[b][w];
            }
            int highest = -1;
            for (int w = static_cast<int>(words) - 1; w >= 0 && highest < 0; --w)
                if (col[w] != 0) highest = w * 64 + 63 - __builtin_clzll(col[w]);
            if (highest >= 0) {
                basis.push_back(col);
                pivot_bit.push_back(highest);
                ++rank;
            }
        }
        ranks[k] = rank;
    }
    int top = top_degree < 0 ? dim : std::min(top_degree, dim);
    std::vector<long long> betti(top + 1);
    for (int n = 0; n <= top; ++n)
        betti[n] = cc.ranks[n] - ranks[n] - (n + 1 <= dim ? ranks[n + 1] : 0);
    return betti;
}

}  // namespace flowcat
