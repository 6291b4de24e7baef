#include "gocha/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>

namespace gocha {

bool combinatorially_free(const std::vector<Word>& monomials)
{
    if (monomials.empty())
        throw std::invalid_argument("empty monomial set");
    for (const auto& m : monomials)
        if (m.degree() < 1)
            throw std::invalid_argument("monomials must have degree >= 1");
    for (size_t a = 0; a < monomials.size(); ++a) {
        for (size_t b = 0; b < monomials.size(); ++b) {
            if (a != b && monomials[a].contains(monomials[b]))
                return false;
            if (suffix_meets_prefix(monomials[a], monomials[b]))
                return false;
        }
    }
    return true;
}

namespace {

// One rewrite at monomial m of f, if some basis lead occurs in it; scans
// basis elements in order, leftmost occurrence. Returns false if m is
// normal.
bool reduce_term_once(Polynomial& f, const Word& m, const std::vector<Polynomial>& basis,
                      const std::vector<Word>& leads)
{
    for (size_t k = 0; k < basis.size(); ++k) {
        int pos = m.find_factor(leads[k]);
        if (pos < 0)
            continue;
        uint32_t c = f.coeff(m);
        Word left = m.prefix(pos);
        Word right = m.suffix_from(pos + leads[k].degree());
        f -= basis[k].sandwich(left, right).scaled(c); // basis elements are monic
        return true;
    }
    return false;
}

// Rewrites until no term contains a basis lead. Each rewrite replaces a
// monomial by deglex-smaller monomials of the same degree, so this
// terminates; up to the completion degree the result is independent of
// the rewrite strategy.
Polynomial reduce_full(Polynomial f, const std::vector<Polynomial>& basis,
                       const std::vector<Word>& leads)
{
    while (!f.is_zero()) {
        bool reduced = false;
        for (const auto& [m, c] : f.terms()) {
            (void)c;
            if (reduce_term_once(f, m, basis, leads)) {
                reduced = true;
                break;
            }
        }
        if (!reduced)
            break;
    }
    return f;
}

// Reduces the non-leading terms of a monic element. Its own lead cannot
// fire on same-degree tail terms (equal-degree containment is equality),
// so reducing against the full basis is safe for homogeneous elements.
Polynomial reduce_tail(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const std::vector<Word>& leads)
{
    auto [lw, lc] = f.leading_monomial();
    Polynomial lead_term = Polynomial::monomial(f.context(), lw, lc);
    return lead_term + reduce_full(f - lead_term, basis, leads);
}

struct Ambiguity {
    int degree;
    uint64_t seq; // creation order, the tiebreak
    size_t a, b;
    int overlap; // suffix of lead(a) of this length == prefix of lead(b)

    bool operator>(const Ambiguity& o) const
    {
        return std::tie(degree, seq) > std::tie(o.degree, o.seq);
    }
};

} // namespace

GroebnerBasis complete(Context ctx, const std::vector<Polynomial>& generators, int degree_bound)
{
    for (const auto& g : generators) {
        require_same(ctx, g.context());
        if (g.is_zero() || !g.is_homogeneous())
            throw std::invalid_argument("generators must be homogeneous and nonzero");
        if (g.degree() > degree_bound)
            throw std::invalid_argument("degree bound below a generator degree");
    }

    GroebnerBasis gb(ctx, degree_bound);
    auto& basis = gb.elements_;
    auto& leads = gb.leads_;
    std::priority_queue<Ambiguity, std::vector<Ambiguity>, std::greater<>> pending;
    uint64_t seq = 0;

    auto queue_pair = [&](size_t a, size_t b) {
        const Word &la = leads[a], &lb = leads[b];
        int lim = std::min(la.degree(), lb.degree());
        for (int o = 1; o < lim; ++o) {
            if (la.letters().compare(size_t(la.degree() - o), size_t(o), lb.letters(), 0,
                                     size_t(o)) != 0)
                continue;
            int deg = la.degree() + lb.degree() - o;
            if (deg <= degree_bound)
                pending.push(Ambiguity{deg, seq++, a, b, o});
        }
    };
    auto queue_overlaps_with_all = [&](size_t idx) {
        for (size_t k = 0; k < basis.size(); ++k) {
            queue_pair(idx, k);
            if (k != idx)
                queue_pair(k, idx);
        }
    };

    std::deque<Polynomial> inbox(generators.begin(), generators.end());
    while (!inbox.empty() || !pending.empty()) {
        Polynomial cand(ctx);
        if (!inbox.empty()) {
            cand = std::move(inbox.front());
            inbox.pop_front();
        } else {
            Ambiguity am = pending.top();
            pending.pop();
            const Word &la = leads[am.a], &lb = leads[am.b];
            Word left = la.prefix(la.degree() - am.overlap);
            Word right = lb.suffix_from(am.overlap);
            // lead(a)*right and left*lead(b) both equal the superposition
            // word, so the leading terms cancel.
            cand = basis[am.a].sandwich(Word(), right) - basis[am.b].sandwich(left, Word());
        }
        cand = reduce_full(std::move(cand), basis, leads);
        if (cand.is_zero())
            continue;
        cand = cand.monic();
        Word lead = cand.leading_monomial().first;

        // Elements whose lead the new lead divides go back through the
        // reducer; their reduced leads strictly drop, so this terminates.
        std::vector<size_t> displaced;
        for (size_t k = 0; k < basis.size(); ++k)
            if (leads[k].contains(lead))
                displaced.push_back(k);
        if (!displaced.empty()) {
            std::vector<Polynomial> keep;
            for (size_t k = 0, di = 0; k < basis.size(); ++k) {
                if (di < displaced.size() && displaced[di] == k) {
                    ++di;
                    inbox.push_back(std::move(basis[k]));
                } else {
                    keep.push_back(std::move(basis[k]));
                }
            }
            basis = std::move(keep);
            basis.push_back(std::move(cand));
            leads.clear();
            for (const auto& f : basis)
                leads.push_back(f.leading_monomial().first);
            // Indices in queued ambiguities are stale now; rebuild.
            while (!pending.empty())
                pending.pop();
            for (size_t k = 0; k < basis.size(); ++k)
                basis[k] = reduce_tail(basis[k], basis, leads);
            for (size_t a = 0; a < basis.size(); ++a)
                for (size_t b = 0; b < basis.size(); ++b)
                    queue_pair(a, b);
        } else {
            basis.push_back(std::move(cand));
            leads.push_back(lead);
            for (size_t k = 0; k < basis.size(); ++k)
                basis[k] = reduce_tail(basis[k], basis, leads);
            queue_overlaps_with_all(basis.size() - 1);
        }
    }
    // Canonical element order: the reduced basis is unique as a set, so
    // sorting by leading monomial makes the whole object input-order
    // independent.
    std::sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) {
        return TermKeyOrder{}(a.leading_monomial().first, b.leading_monomial().first);
    });
    leads.clear();
    for (const auto& f : basis)
        leads.push_back(f.leading_monomial().first);
    return gb;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb)
{
    require_same(f.context(), gb.context());
    if (!f.is_zero() && f.degree() > gb.complete_to_degree())
        throw std::invalid_argument("degree exceeds the completion bound");
    return reduce_full(f, gb.elements(), gb.leading_monomials());
}

NormalMonomialTable normal_monomials(const GroebnerBasis& gb, int max_degree)
{
    if (max_degree > gb.complete_to_degree())
        throw std::invalid_argument("degree exceeds the completion bound");
    const Context& ctx = gb.context();
    NormalMonomialTable t;
    t.max_degree = max_degree;
    t.by_degree.resize(size_t(max_degree) + 1);
    // Grow words letter by letter. A lead factor always appears first as a
    // suffix, so checking the fresh suffix suffices.
    std::vector<Word> frontier{Word()};
    t.by_degree[0] = frontier;
    for (int n = 1; n <= max_degree; ++n) {
        std::vector<Word> next;
        for (const auto& w : frontier) {
            for (uint32_t i = 1; i <= ctx.d; ++i) {
                Word x = w * Word::generator(int(i));
                bool hit = false;
                for (const auto& lead : gb.leading_monomials()) {
                    int ld = lead.degree();
                    if (ld <= x.degree() &&
                        x.letters().compare(size_t(x.degree() - ld), size_t(ld),
                                            lead.letters()) == 0) {
                        hit = true;
                        break;
                    }
                }
                if (!hit)
                    next.push_back(std::move(x));
            }
        }
        t.by_degree[size_t(n)] = next;
        frontier = std::move(next);
    }
    return t;
}

namespace {

// Factor-avoidance DFA over an interreduced lead set: states are the
// proper prefixes of leads, a step follows the longest suffix that is
// still a state, and completing a lead kills the walk. Interreduction
// guarantees no state contains a lead, which makes longest-suffix-first
// resolution sound.
struct AvoidanceAutomaton {
    std::vector<std::vector<int>> next; // state -> letter-1 -> state (-1 dead)
    int root = 0;

    AvoidanceAutomaton(const std::vector<Word>& leads, uint32_t d)
    {
        std::map<std::string, int> id;
        std::vector<std::string> prefixes;
        auto intern = [&](const std::string& s) {
            auto [it, fresh] = id.emplace(s, int(prefixes.size()));
            if (fresh)
                prefixes.push_back(s);
            return it->second;
        };
        intern("");
        for (const auto& l : leads)
            for (int k = 1; k < l.degree(); ++k)
                intern(l.letters().substr(0, size_t(k)));
        std::set<std::string> lead_set;
        for (const auto& l : leads)
            lead_set.insert(l.letters());
        next.assign(prefixes.size(), std::vector<int>(d, root));
        for (size_t s = 0; s < prefixes.size(); ++s) {
            for (uint32_t c = 1; c <= d; ++c) {
                std::string w = prefixes[s] + char(c);
                int target = root;
                for (size_t start = 0; start < w.size(); ++start) {
                    std::string suf = w.substr(start);
                    if (lead_set.count(suf)) {
                        target = -1;
                        break;
                    }
                    auto it = id.find(suf);
                    if (it != id.end()) {
                        target = it->second;
                        break;
                    }
                }
                next[s][c - 1] = target;
            }
        }
    }

    IntSeries count(int N, uint32_t d) const
    {
        IntSeries out = IntSeries::zeros(N);
        std::vector<BigInt> cur(next.size());
        cur[size_t(root)] = 1;
        out[0] = 1;
        for (int n = 1; n <= N; ++n) {
            std::vector<BigInt> nx(next.size());
            for (size_t s = 0; s < next.size(); ++s) {
                if (cur[s] == 0)
                    continue;
                for (uint32_t c = 1; c <= d; ++c) {
                    int t = next[s][c - 1];
                    if (t >= 0)
                        nx[size_t(t)] += cur[s];
                }
            }
            BigInt total = 0;
            for (const auto& v : nx)
                total += v;
            out[n] = total;
            cur = std::move(nx);
        }
        return out;
    }
};

} // namespace

IntSeries hilbert_dims(const GroebnerBasis& gb, int N)
{
    if (N > gb.complete_to_degree())
        throw std::invalid_argument("degree exceeds the completion bound");
    if (gb.leading_monomials().empty()) {
        IntSeries out = IntSeries::zeros(N);
        BigInt p = 1;
        for (int n = 0; n <= N; ++n, p *= gb.context().d)
            out[n] = p;
        return out;
    }
    AvoidanceAutomaton dfa(gb.leading_monomials(), gb.context().d);
    return dfa.count(N, gb.context().d);
}

std::vector<Polynomial> raaa_ideal(Context ctx, const Graph& g)
{
    if (int(ctx.d) != g.d)
        throw std::invalid_argument("graph vertex count differs from context d");
    std::vector<Polynomial> gens;
    gens.reserve(g.edges.size());
    for (auto [i, j] : g.edges)
        gens.push_back(generator_commutator(ctx, i, j)); // lead X_i X_j, i < j
    return gens;
}

std::vector<Polynomial> quadratic_dual_ideal(Context ctx, const Graph& g)
{
    if (int(ctx.d) != g.d)
        throw std::invalid_argument("graph vertex count differs from context d");
    std::set<std::string> seen;
    std::vector<Polynomial> gens;
    auto push = [&](Polynomial f) {
        f = f.monic();
        if (seen.insert(render_polynomial(f)).second)
            gens.push_back(std::move(f));
    };
    for (int i = 1; i <= g.d; ++i)
        for (int j = 1; j <= g.d; ++j)
            if (i != j && !g.has_edge(i, j))
                push(Polynomial::monomial(ctx, Word::generator(i) * Word::generator(j), 1));
    for (int u = 1; u <= g.d; ++u)
        push(Polynomial::monomial(ctx, Word::generator(u) * Word::generator(u), 1));
    for (int u = 1; u <= g.d; ++u)
        for (int v = u + 1; v <= g.d; ++v) {
            Polynomial f(ctx);
            f.add_term(Word::generator(u) * Word::generator(v), 1);
            f.add_term(Word::generator(v) * Word::generator(u), 1);
            push(std::move(f));
        }
    return gens;
}

bool mildness_check(const IntSeries& dims, int d, const std::vector<int>& relation_degrees)
{
    const int N = dims.max_degree();
    IntSeries model = IntSeries::zeros(N);
    model[0] = 1;
    if (N >= 1)
        model[1] -= d;
    for (int deg : relation_degrees) {
        if (deg < 0)
            throw std::invalid_argument("negative relation degree");
        if (deg <= N)
            model[deg] += 1;
    }
    if (model[0] != 1)
        return false;
    return dims.prefix_equal(invert_int_series(model), N);
}

std::string render_basis(const GroebnerBasis& gb)
{
    std::string out = "# complete_to_degree " + std::to_string(gb.complete_to_degree()) + "\n";
    for (const auto& f : gb.elements())
        out += render_polynomial(f) + "\n";
    return out;
}

} // namespace gocha
