#include <algorithm>
#include <numeric>

#include "hardy/error.hpp"
#include "hardy/pet.hpp"

namespace hardy {

DegreeSkeleton DegreeSkeleton::from(const PolyFamily& P) {
    check_essentially_distinct(P);
    DegreeSkeleton s;
    const std::size_t n = P.size();
    s.D.assign(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < n; ++i) {
        s.deg.push_back(P.members[i].poly.degree());
        for (std::size_t j = 0; j < i; ++j) s.D[i][j] = s.D[j][i] = (P.members[i].poly - P.members[j].poly).degree();
    }
    return s;
}

TypeVector DegreeSkeleton::type() const {
    const int d = *std::max_element(deg.begin(), deg.end());
    TypeVector t{d};
    for (int i = d; i >= 1; --i) {
        // same leading coefficient <=> the difference drops below degree i
        std::vector<std::size_t> reps;
        for (std::size_t k = 0; k < size(); ++k) {
            if (deg[k] != i) continue;
            if (std::none_of(reps.begin(), reps.end(), [&](std::size_t r) { return D[k][r] < i; })) reps.push_back(k);
        }
        t.push_back(static_cast<long>(reps.size()));
    }
    return t;
}

std::size_t DegreeSkeleton::pivot() const {
    const int d = *std::max_element(deg.begin(), deg.end());
    if (deg[0] != d || d < 2) throw DomainError("pivot selection needs deg(p_1) = deg(P) >= 2");
    const auto low = static_cast<std::size_t>(std::min_element(deg.begin(), deg.end()) - deg.begin());
    if (deg[low] < d) return low;
    for (std::size_t i = 1; i < size(); ++i) {
        if (D[i][0] == d) return i;
    }
    if (size() == 1) return 0;
    std::size_t best = 1;
    for (std::size_t i = 2; i < size(); ++i) {
        if (D[i][0] > D[best][0]) best = i;
    }
    return best;
}

DegreeSkeleton DegreeSkeleton::sorted() const {
    std::vector<std::size_t> idx(size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
    DegreeSkeleton s;
    s.D.assign(size(), std::vector<int>(size()));
    for (std::size_t i = 0; i < size(); ++i) {
        s.deg.push_back(deg[idx[i]]);
        for (std::size_t j = 0; j < size(); ++j) s.D[i][j] = D[idx[i]][idx[j]];
    }
    return s;
}

DegreeSkeleton DegreeSkeleton::step(std::size_t p) const {
    // members: S_i = p_i(t+h) - p for nonlinear p_i, then U_i = p_i - p for i != p
    struct Ref {
        bool shifted;
        std::size_t i;
    };
    std::vector<Ref> refs;
    for (std::size_t i = 0; i < size(); ++i) {
        if (deg[i] != 1) refs.push_back({true, i});
    }
    for (std::size_t i = 0; i < size(); ++i) {
        if (i != p) refs.push_back({false, i});
    }
    // p_i(t+h) - p_i(t) has degree deg p_i - 1 with an h-dependent leading coefficient
    auto mixed = [&](std::size_t i, std::size_t j) { return i == j ? deg[i] - 1 : std::max(deg[i] - 1, D[i][j]); };
    DegreeSkeleton s;
    const std::size_t n = refs.size();
    s.D.assign(n, std::vector<int>(n, -1));
    for (std::size_t a = 0; a < n; ++a) {
        const Ref& x = refs[a];
        s.deg.push_back(x.shifted ? mixed(x.i, p) : D[x.i][p]);
        for (std::size_t b = 0; b < a; ++b) {
            const Ref& y = refs[b];
            int v;
            if (x.shifted == y.shifted) {
                v = D[x.i][y.i];
            } else if (x.shifted) {
                v = mixed(x.i, y.i);
            } else {
                v = mixed(y.i, x.i);
            }
            s.D[a][b] = s.D[b][a] = v;
        }
    }
    return s;
}

SkeletonRun run_skeleton(const DegreeSkeleton& start, const DerivationLimits& limits) {
    SkeletonRun run;
    DegreeSkeleton cur = start.sorted();
    TypeVector t = cur.type();
    run.types.push_back(t);
    for (;;) {
        if (t[0] <= 1) {
            run.outcome = DerivationOutcome::BaseCase;
            break;
        }
        if (run.depth() >= limits.max_depth) {
            run.outcome = DerivationOutcome::DepthGuard;
            break;
        }
        DegreeSkeleton next = cur.step(cur.pivot());
        if (next.size() > limits.max_members) {
            run.outcome = DerivationOutcome::MemberBudget;
            break;
        }
        next = next.sorted();
        const TypeVector nt = next.type();
        run.types.push_back(nt);
        if (!(nt < t)) {
            run.outcome = DerivationOutcome::TypeIncrease;
            break;
        }
        cur = std::move(next);
        t = nt;
    }
    return run;
}

}  // namespace hardy
