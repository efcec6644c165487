#include "flowcat/morse.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <random>
#include <sstream>

namespace flowcat {

PartialMatching::PartialMatching(const FacePoset* fp, const std::vector<std::pair<int, int>>& pairs)
    : fp_(fp), mate_(fp->size(), -1), role_(fp->size(), Role::Critical) {
    for (auto [d, u] : pairs) {
        if (d < 0 || d >= fp->size() || u < 0 || u >= fp->size()) throw Error("matching pair out of range");
        if (role_[d] != Role::Critical || role_[u] != Role::Critical)
            throw Error("cell matched twice: " + fp->id(role_[d] != Role::Critical ? d : u));
        const auto& ups = fp->cofacets(d);
        if (std::find(ups.begin(), ups.end(), u) == ups.end())
            throw Error("matched pair " + fp->id(d) + " -> " + fp->id(u) + " is not a cover");
        role_[d] = Role::Down;
        role_[u] = Role::Up;
        mate_[d] = u;
        mate_[u] = d;
    }
    for (int c = 0; c < fp->size(); ++c) {
        switch (role_[c]) {
            case Role::Down: d_cells_.push_back(c); break;
            case Role::Up: u_cells_.push_back(c); break;
            case Role::Critical: critical_.push_back(c); break;
        }
    }
}

PartialMatching PartialMatching::from_id_pairs(const FacePoset* fp,
                                               const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<std::pair<int, int>> ipairs;
    ipairs.reserve(pairs.size());
    for (const auto& [d, u] : pairs) ipairs.emplace_back(fp->index_checked(d), fp->index_checked(u));
    return PartialMatching(fp, ipairs);
}

int PartialMatching::mu(int d) const {
    if (!in_d(d)) throw Error("cell " + fp_->id(d) + " is not in D(mu)");
    return mate_[d];
}

int PartialMatching::mu_inv(int u) const {
    if (!in_u(u)) throw Error("cell " + fp_->id(u) + " is not in U(mu)");
    return mate_[u];
}

std::vector<std::pair<int, int>> PartialMatching::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int d : d_cells_) out.emplace_back(d, mate_[d]);
    return out;
}

MorseCheck is_discrete_morse(const DiscreteMorseFunction& f) {
    const FacePoset& fp = *f.complex;
    MorseCheck check;
    for (int e = 0; e < fp.size(); ++e) {
        int up = 0, down = 0;
        for (int hi : fp.cofacets(e))
            if (f(e) >= f(hi)) ++up;
        for (int lo : fp.facets_of(e))
            if (f(lo) >= f(e)) ++down;
        if (up > 1 || down > 1) {
            check.ok = false;
            check.offending.push_back(e);
        }
    }
    return check;
}

PartialMatching matching_from_function(const DiscreteMorseFunction& f) {
    MorseCheck check = is_discrete_morse(f);
    if (!check.ok) {
        std::string msg = "not a discrete Morse function; offending cells:";
        for (int e : check.offending) msg += " " + f.complex->id(e);
        throw NotMorseError(msg);
    }
    const FacePoset& fp = *f.complex;
    std::vector<std::pair<int, int>> pairs;
    for (int e = 0; e < fp.size(); ++e)
        for (int hi : fp.cofacets(e))
            if (f(e) >= f(hi)) pairs.emplace_back(e, hi);
    return PartialMatching(f.complex, pairs);
}

namespace {

// Matched digraph on U: arc u -> u' when mu_inv(u') is a facet of u.
std::vector<std::vector<int>> matched_digraph(const PartialMatching& m) {
    const FacePoset& fp = m.complex();
    std::vector<std::vector<int>> adj(fp.size());
    for (int u : m.u_cells()) {
        for (int lo : fp.facets_of(u)) {
            if (m.in_d(lo) && m.mu(lo) != u) adj[u].push_back(m.mu(lo));
        }
    }
    return adj;
}

}  // namespace

AcyclicityResult is_acyclic(const PartialMatching& m) {
    const auto adj = matched_digraph(m);
    int n = static_cast<int>(adj.size());
    // Iterative three-color DFS with an explicit stack; records the cycle
    // when a gray vertex is revisited.
    std::vector<int> color(n, 0), parent(n, -1);
    for (int root : m.u_cells()) {
        if (color[root] != 0) continue;
        std::vector<std::pair<int, size_t>> stack{{root, 0}};
        color[root] = 1;
        while (!stack.empty()) {
            auto& [x, next] = stack.back();
            if (next < adj[x].size()) {
                int y = adj[x][next++];
                if (color[y] == 0) {
                    color[y] = 1;
                    parent[y] = x;
                    stack.emplace_back(y, 0);
                } else if (color[y] == 1) {
                    AcyclicityResult result;
                    result.acyclic = false;
                    std::vector<int> us;
                    for (int z = x; z != y; z = parent[z]) us.push_back(z);
                    us.push_back(y);
                    std::reverse(us.begin(), us.end());
                    // us is the U-cycle y -> ... -> x -> y; report it as the
                    // alternating Forman path d1, u1, ..., dk, uk.
                    for (int u : us) {
                        result.cycle.push_back(m.mu_inv(u));
                        result.cycle.push_back(u);
                    }
                    return result;
                }
            } else {
                color[x] = 2;
                stack.pop_back();
            }
        }
    }
    return AcyclicityResult{};
}

FinitePoset unrhd_order(const PartialMatching& m) {
    const FacePoset& fp = m.complex();
    std::vector<std::pair<int, int>> rel;
    // e rhd_1 e' when e' is a face of e not matched up into e, or e' = mu(e).
    // Stored reversed so that leq(a, b) means b unrhd a.
    for (int e = 0; e < fp.size(); ++e) {
        for (int ep = 0; ep < fp.size(); ++ep) {
            if (e == ep) continue;
            if (fp.face_lt(ep, e) && !(m.in_d(ep) && m.mu(ep) == e)) rel.emplace_back(ep, e);
        }
    }
    for (int d : m.d_cells()) rel.emplace_back(m.mu(d), d);
    return FinitePoset::transitive_closure_indexed(fp.ids(), rel);
}

DiscreteMorseFunction faithful_function(const PartialMatching& m) {
    FinitePoset order = unrhd_order(m);  // throws CycleError when not acyclic
    std::vector<int> extension = order.linear_extension();

    DiscreteMorseFunction g;
    g.complex = m.complex_ptr();
    g.values.assign(m.complex().size(), 0);
    // The poset was built with leq(a, b) = "b flows to a", so enumerating a
    // linear extension gives the smallest values to the flow's sinks.
    // Element indices agree with cell indices by construction.
    for (size_t pos = 0; pos < extension.size(); ++pos)
        g.values[extension[pos]] = static_cast<long long>(pos);

    if (!is_faithful(g)) throw Error("faithful_function produced a non-faithful function");
    PartialMatching induced = matching_from_function(g);
    if (induced.pairs() != m.pairs()) throw Error("faithful_function does not reproduce the matching");
    return g;
}

bool is_faithful(const DiscreteMorseFunction& f) {
    const FacePoset& fp = *f.complex;
    MorseCheck check = is_discrete_morse(f);
    if (!check.ok) return false;
    std::vector<long long> sorted = f.values;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

    PartialMatching m = matching_from_function(f);
    for (int e = 0; e < fp.size(); ++e)
        for (int ep = 0; ep < fp.size(); ++ep)
            if (fp.face_lt(e, ep) && !(m.in_d(e) && m.mu(e) == ep) && f(e) >= f(ep)) return false;
    return true;
}

bool equivalent(const DiscreteMorseFunction& f, const DiscreteMorseFunction& g) {
    if (f.complex != g.complex) throw Error("functions live on different complexes");
    for (auto [lo, hi] : f.complex->cover_pairs())
        if ((f(lo) < f(hi)) != (g(lo) < g(hi))) return false;
    return true;
}

PartialMatching greedy_matching(const FacePoset& fp, uint64_t seed) {
    auto pairs = fp.cover_pairs();
    std::mt19937_64 rng(seed);
    std::shuffle(pairs.begin(), pairs.end(), rng);

    std::vector<std::pair<int, int>> chosen;
    std::vector<bool> used(fp.size(), false);
    for (auto [d, u] : pairs) {
        if (used[d] || used[u]) continue;
        chosen.emplace_back(d, u);
        PartialMatching candidate(&fp, chosen);
        if (is_acyclic(candidate).acyclic) {
            used[d] = used[u] = true;
        } else {
            chosen.pop_back();
        }
    }
    return PartialMatching(&fp, chosen);
}

namespace {

std::vector<std::vector<std::string>> read_token_lines(std::istream& in, size_t expected) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks.size() != expected)
            throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(expected) +
                             " fields, got " + std::to_string(toks.size()));
        rows.push_back(std::move(toks));
    }
    return rows;
}

}  // namespace

PartialMatching parse_matching(const FacePoset* fp, std::istream& in) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (auto& row : read_token_lines(in, 2)) pairs.emplace_back(row[0], row[1]);
    return PartialMatching::from_id_pairs(fp, pairs);
}

DiscreteMorseFunction parse_morse_function(const FacePoset* fp, std::istream& in) {
    DiscreteMorseFunction f;
    f.complex = fp;
    f.values.assign(fp->size(), 0);
    std::vector<bool> assigned(fp->size(), false);
    for (auto& row : read_token_lines(in, 2)) {
        int cell = fp->index_checked(row[0]);
        size_t used = 0;
        long long value;
        try {
            value = std::stoll(row[1], &used);
        } catch (const std::exception&) {
            throw ParseError("bad integer value for cell " + row[0] + ": " + row[1]);
        }
        if (used != row[1].size()) throw ParseError("Morse values must be integers, got " + row[1]);
        f.values[cell] = value;
        assigned[cell] = true;
    }
    for (int c = 0; c < fp->size(); ++c)
        if (!assigned[c]) throw ParseError("no Morse value for cell " + fp->id(c));
    return f;
}

}  // namespace flowcat
