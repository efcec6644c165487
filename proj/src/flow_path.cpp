#include "flowcat/flow_path.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace flowcat {

int FlowPath::e(const PartialMatching& m, int i) const {
    if (i == length() + 1) return target;
    return lower[i - 1] ? m.mu_inv(us[i - 1]) : us[i - 1];
}

bool FlowPath::operator<(const FlowPath& other) const {
    if (target != other.target) return target < other.target;
    if (us.size() != other.us.size()) return us.size() < other.us.size();
    if (us != other.us) return us < other.us;
    return lower < other.lower;
}

std::string FlowPath::display(const PartialMatching& m) const {
    std::ostringstream os;
    os << '(';
    for (int i = 1; i <= length(); ++i)
        os << m.complex().id(e(m, i)) << ' ' << m.complex().id(u(i)) << ' ';
    os << "; " << m.complex().id(target) << ')';
    return os.str();
}

FlowPath make_trivial_path(int critical_cell) {
    FlowPath p;
    p.target = critical_cell;
    return p;
}

bool is_valid_flow_path(const PartialMatching& m, const FlowPath& p, std::string* why) {
    const FacePoset& fp = m.complex();
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (p.target < 0 || p.target >= fp.size()) return fail("target out of range");
    if (!m.critical(p.target)) return fail("target " + fp.id(p.target) + " is not critical");
    if (p.us.size() != p.lower.size()) return fail("step arrays disagree");
    for (int i = 1; i <= p.length(); ++i) {
        int ui = p.u(i);
        if (!m.in_u(ui)) return fail("step cell " + fp.id(ui) + " is not in U(mu)");
        int next = p.e(m, i + 1);
        if (!fp.face_lt(next, ui)) return fail(fp.id(next) + " is not a proper face of " + fp.id(ui));
        if (next == m.mu_inv(ui)) return fail("step " + std::to_string(i) + " climbs back over " + fp.id(ui));
    }
    return true;
}

FlowPath make_flow_path(const PartialMatching& m, const std::vector<std::pair<int, int>>& steps, int target) {
    FlowPath p;
    p.target = target;
    for (auto [e, u] : steps) {
        if (!m.in_u(u)) throw Error("flow path step cell " + m.complex().id(u) + " is not in U(mu)");
        if (e != u && e != m.mu_inv(u))
            throw Error("flow path step (" + m.complex().id(e) + ", " + m.complex().id(u) +
                        ") is neither (u, u) nor (mu_inv(u), u)");
        p.us.push_back(u);
        p.lower.push_back(e != u);
    }
    std::string why;
    if (!is_valid_flow_path(m, p, &why)) throw Error("invalid flow path: " + why);
    return p;
}

namespace {

// Backtracking search for an embedding function.  `collect_all` is used by
// the uniqueness tests; the normal search stops at the first witness.
void search_embeddings(const PartialMatching& m, const FlowPath& g, const FlowPath& gp, int j, int prev,
                       std::vector<int>& phi, std::vector<EmbeddingFunction>& out, bool collect_all) {
    if (!collect_all && !out.empty()) return;
    const FacePoset& fp = m.complex();
    int mm = g.length(), n = gp.length();

    // Condition (4) for position j if we were to set phi(j) = q.
    auto cond4 = [&](int q) {
        int ej = g.e(m, j);
        for (int p = prev + 1; p <= q; ++p)
            if (!fp.face_leq(ej, gp.e(m, p))) return false;
        return true;
    };

    // Close here: phi(j) = n+1, k = j.
    if (j >= 1 && prev < n + 1 && cond4(n + 1)) {
        phi.push_back(n + 1);
        EmbeddingFunction emb;
        emb.k = j;
        emb.phi = phi;
        out.push_back(std::move(emb));
        phi.pop_back();
        if (!collect_all) return;
    }

    // Continue: phi(j) = q < n+1 needs u_j = u'_q.
    if (j <= mm) {
        for (int q = prev + 1; q <= n; ++q) {
            if (g.u(j) != gp.u(q)) continue;
            if (!cond4(q)) continue;
            phi.push_back(q);
            search_embeddings(m, g, gp, j + 1, q, phi, out, collect_all);
            phi.pop_back();
            if (!collect_all && !out.empty()) return;
        }
    }
}

}  // namespace

std::optional<EmbeddingFunction> subpath_leq(const PartialMatching& m, const FlowPath& gamma,
                                             const FlowPath& gamma_prime) {
    std::vector<EmbeddingFunction> out;
    std::vector<int> phi{0};
    search_embeddings(m, gamma, gamma_prime, 1, 0, phi, out, false);
    if (out.empty()) return std::nullopt;
    return out.front();
}

std::vector<EmbeddingFunction> all_embeddings(const PartialMatching& m, const FlowPath& gamma,
                                              const FlowPath& gamma_prime) {
    std::vector<EmbeddingFunction> out;
    std::vector<int> phi{0};
    search_embeddings(m, gamma, gamma_prime, 1, 0, phi, out, true);
    return out;
}

namespace {

// Junction i (1-based) is bad when e_{i+1} is a proper face of mu_inv(u_i).
bool bad_junction(const PartialMatching& m, const FlowPath& p, int i) {
    int next = p.e(m, i + 1);
    int d = m.mu_inv(p.u(i));
    return m.complex().face_lt(next, d);
}

void erase_step(FlowPath& p, int i) {  // 1-based
    p.us.erase(p.us.begin() + (i - 1));
    p.lower.erase(p.lower.begin() + (i - 1));
}

}  // namespace

bool is_reduced(const PartialMatching& m, const FlowPath& p) {
    for (int i = 1; i <= p.length(); ++i)
        if (bad_junction(m, p, i)) return false;
    return true;
}

std::vector<std::pair<int, int>> reducible_intervals(const PartialMatching& m, const FlowPath& p) {
    FlowPath work = p;
    std::vector<int> orig(p.length());
    for (int i = 0; i < p.length(); ++i) orig[i] = i + 1;
    std::vector<int> removed;
    while (true) {
        int i = work.length();
        while (i >= 1 && !bad_junction(m, work, i)) --i;
        if (i == 0) break;
        removed.push_back(orig[i - 1]);
        orig.erase(orig.begin() + (i - 1));
        erase_step(work, i);
    }
    std::sort(removed.begin(), removed.end());
    std::vector<std::pair<int, int>> intervals;
    for (size_t k = 0; k < removed.size(); ++k) {
        if (!intervals.empty() && intervals.back().second + 1 == removed[k])
            intervals.back().second = removed[k];
        else
            intervals.emplace_back(removed[k], removed[k]);
    }
    return intervals;
}

FlowPath reduce(const PartialMatching& m, const FlowPath& p) {
    FlowPath work = p;
    while (true) {
        int i = work.length();
        while (i >= 1 && !bad_junction(m, work, i)) --i;
        if (i == 0) break;
        erase_step(work, i);
    }
    return work;
}

FlowPath upgrade(const FlowPath& p) {
    if (p.length() == 0) throw LengthError("cannot upgrade a length-0 flow path");
    FlowPath q = p;
    q.lower[0] = 0;
    return q;
}

std::vector<FlowPath> suffixes(const FlowPath& p) {
    std::vector<FlowPath> out;
    for (int i = 1; i <= p.length() + 1; ++i) {
        FlowPath s;
        s.target = p.target;
        s.us.assign(p.us.begin() + (i - 1), p.us.end());
        s.lower.assign(p.lower.begin() + (i - 1), p.lower.end());
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<FlowPath> stable_path_set(const PartialMatching& m, const FlowPath& p) {
    if (!is_reduced(m, p)) throw Error("stable subspace is defined for reduced flow paths");
    std::set<FlowPath> out;
    auto sufs = suffixes(p);
    for (size_t i = 0; i < sufs.size(); ++i) {
        out.insert(sufs[i]);
        if (i + 1 < sufs.size() && p.lower[i]) out.insert(upgrade(sufs[i]));
    }
    return std::vector<FlowPath>(out.begin(), out.end());
}

std::vector<FlowPath> stable_space(const PartialMatching& m, int critical_cell,
                                   const std::vector<FlowPath>& reduced_paths) {
    std::set<FlowPath> out;
    for (const auto& p : reduced_paths) {
        if (p.target != critical_cell) continue;
        auto part = stable_path_set(m, p);
        out.insert(part.begin(), part.end());
    }
    return std::vector<FlowPath>(out.begin(), out.end());
}

std::vector<FlowPath> enumerate_flow_paths(const PartialMatching& m, size_t cap) {
    const FacePoset& fp = m.complex();
    std::vector<FlowPath> result;
    std::deque<FlowPath> queue;
    for (int c : m.critical_cells()) queue.push_back(make_trivial_path(c));

    while (!queue.empty()) {
        FlowPath p = std::move(queue.front());
        queue.pop_front();
        result.push_back(p);
        if (result.size() > cap)
            throw CapacityError("flow path enumeration exceeded " + std::to_string(cap) + " paths");
        int head = p.initial(m);
        // Prepend (u, u) and (mu_inv(u), u) for every u strictly above the
        // initial cell; re-climbing the pair just descended is excluded.
        for (int u : m.u_cells()) {
            if (!fp.face_lt(head, u) || m.mu_inv(u) == head) continue;
            FlowPath upper;
            upper.target = p.target;
            upper.us.reserve(p.us.size() + 1);
            upper.us.push_back(u);
            upper.us.insert(upper.us.end(), p.us.begin(), p.us.end());
            upper.lower.push_back(0);
            upper.lower.insert(upper.lower.end(), p.lower.begin(), p.lower.end());
            FlowPath lower = upper;
            lower.lower[0] = 1;
            queue.push_back(std::move(upper));
            queue.push_back(std::move(lower));
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

FlowPoset::FlowPoset(const PartialMatching& m, bool reduced_only, size_t cap)
    : matching_(&m), reduced_only_(reduced_only) {
    for (auto& p : enumerate_flow_paths(m, cap))
        if (!reduced_only || is_reduced(m, p)) paths_.push_back(std::move(p));

    int n = static_cast<int>(paths_.size());
    leq_ = BitMatrix(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                leq_.set(i, j);
                continue;
            }
            if (subpath_leq(m, paths_[i], paths_[j])) leq_.set(i, j);
        }
    }
    verify_partial_order();
}

void FlowPoset::verify_partial_order() const {
    int n = size();
    for (int i = 0; i < n; ++i) {
        if (!leq_.get(i, i)) throw OrderViolationError("subpath relation not reflexive");
        for (int j = 0; j < n; ++j) {
            if (i != j && leq_.get(i, j)) {
                if (leq_.get(j, i))
                    throw OrderViolationError("subpath relation not antisymmetric: " +
                                              paths_[i].display(*matching_) + " vs " +
                                              paths_[j].display(*matching_));
                if (!leq_.row_contains(i, j))
                    throw OrderViolationError("subpath relation not transitive at " +
                                              paths_[i].display(*matching_));
            }
        }
    }
}

int FlowPoset::index_of(const FlowPath& p) const {
    auto it = std::lower_bound(paths_.begin(), paths_.end(), p);
    if (it == paths_.end() || !(*it == p)) return -1;
    return static_cast<int>(it - paths_.begin());
}

FinitePoset FlowPoset::poset() const {
    std::vector<std::string> ids;
    ids.reserve(paths_.size());
    for (const auto& p : paths_) ids.push_back(p.display(*matching_));
    BitMatrix leq = leq_;
    return FinitePoset::from_leq_matrix(ids, std::move(leq));
}

std::vector<int> FlowPoset::with_target(int critical_cell) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (paths_[i].target == critical_cell) out.push_back(i);
    return out;
}

}  // namespace flowcat
