#include "gocha/gradation.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

#include "gocha/errors.hpp"

namespace gocha {

namespace {

using SparseVec = std::vector<std::pair<int64_t, uint32_t>>; // sorted by column

// ---------------------------------------------------------------------
// Column layout: monomial coordinates of degrees vmin..N-1 ("below top"),
// ordered by (degree, deglex-descending) = (degree, code ascending), then
// the top block, either raw degree-N codes or normal-monomial indices of
// the leading-form ideal (compressed).

struct Layout {
    Context ctx;
    int N = 0;
    int vmin = 0;
    bool compressed = false;
    std::vector<int64_t> dpow;         // d^k, k = 0..N
    std::vector<int64_t> block_offset; // degree -> first column (degrees vmin..N-1)
    int64_t top_offset = 0;
    int64_t top_width = 0;
    int64_t total = 0;

    int degree_of_col(int64_t col) const
    {
        if (col >= top_offset)
            return N;
        for (int k = vmin; k < N; ++k)
            if (col < block_offset[size_t(k)] + dpow[size_t(k)])
                return k;
        throw std::logic_error("column outside layout");
    }
};

Layout make_layout(Context ctx, int N, int vmin, bool compressed, int64_t top_width)
{
    Layout lay;
    lay.ctx = ctx;
    lay.N = N;
    lay.vmin = vmin;
    lay.compressed = compressed;
    lay.dpow.resize(size_t(N) + 1);
    lay.dpow[0] = 1;
    for (int k = 1; k <= N; ++k)
        lay.dpow[size_t(k)] = lay.dpow[size_t(k) - 1] * ctx.d;
    lay.block_offset.assign(size_t(N) + 1, 0);
    int64_t off = 0;
    for (int k = vmin; k < N; ++k) {
        lay.block_offset[size_t(k)] = off;
        off += lay.dpow[size_t(k)];
    }
    lay.top_offset = off;
    lay.top_width = top_width;
    lay.total = off + top_width;
    return lay;
}

// ---------------------------------------------------------------------
// Row spaces: echelon bases kept reduced on insert. Rows start sparse and
// are promoted to a dense tail representation once they fill in. The
// characteristic-2 space packs bits; the odd-p space stores bytes
// (requires p < 256, plenty for exact desk-scale work).

struct RowSpaceF2 {
    struct Row {
        bool dense = false;
        std::vector<int64_t> cols; // sparse, sorted
        int64_t base_word = 0;
        std::vector<uint64_t> bits; // dense: words [base_word .. nwords)
        int64_t pivot = -1;
    };

    int64_t ncols, nwords;
    std::vector<Row> rows;
    std::vector<int32_t> pivot_row; // column -> row index, -1 free
    bool interreduced = false;

    explicit RowSpaceF2(int64_t ncols_)
        : ncols(ncols_), nwords((ncols_ + 63) / 64), pivot_row(size_t(ncols_), -1) {}

    static int64_t first_col_sparse(const Row& r) { return r.cols.empty() ? -1 : r.cols.front(); }

    int64_t first_col_dense(const Row& r, int64_t from_word) const
    {
        for (int64_t w = std::max(from_word, r.base_word); w < nwords; ++w) {
            uint64_t v = r.bits[size_t(w - r.base_word)];
            if (v)
                return w * 64 + std::countr_zero(v);
        }
        return -1;
    }

    void promote(Row& r) const
    {
        if (r.dense)
            return;
        int64_t base = r.cols.empty() ? 0 : r.cols.front() / 64;
        r.base_word = base;
        r.bits.assign(size_t(nwords - base), 0);
        for (int64_t c : r.cols)
            r.bits[size_t(c / 64 - base)] ^= uint64_t(1) << (c % 64);
        r.cols.clear();
        r.cols.shrink_to_fit();
        r.dense = true;
    }

    bool should_promote(size_t nnz, int64_t first) const
    {
        return nnz > 4096 || int64_t(nnz) * 24 > (ncols - first);
    }

    // r ^= rows[k]; r's current first column equals the pivot of k.
    void reduce_by(Row& r, const Row& p) const
    {
        if (!r.dense && !p.dense) {
            std::vector<int64_t> merged;
            merged.reserve(r.cols.size() + p.cols.size());
            std::set_symmetric_difference(r.cols.begin(), r.cols.end(), p.cols.begin(),
                                          p.cols.end(), std::back_inserter(merged));
            r.cols = std::move(merged);
            if (!r.cols.empty() && should_promote(r.cols.size(), r.cols.front()))
                promote(r);
            return;
        }
        promote(r);
        if (p.dense) {
            int64_t from = std::max(r.base_word, p.base_word);
            for (int64_t w = from; w < nwords; ++w)
                r.bits[size_t(w - r.base_word)] ^= p.bits[size_t(w - p.base_word)];
        } else {
            for (int64_t c : p.cols)
                r.bits[size_t(c / 64 - r.base_word)] ^= uint64_t(1) << (c % 64);
        }
    }

    // Returns the pivot column, or -1 when the row is dependent.
    int64_t insert(SparseVec in)
    {
        Row r;
        r.cols.reserve(in.size());
        for (auto& [c, v] : in)
            if (v & 1)
                r.cols.push_back(c);
        if (r.cols.empty())
            return -1;
        if (should_promote(r.cols.size(), r.cols.front()))
            promote(r);
        int64_t scan_word = 0;
        while (true) {
            int64_t c = r.dense ? first_col_dense(r, scan_word) : first_col_sparse(r);
            if (c < 0)
                return -1;
            scan_word = c / 64;
            int32_t k = pivot_row[size_t(c)];
            if (k < 0) {
                r.pivot = c;
                pivot_row[size_t(c)] = int32_t(rows.size());
                rows.push_back(std::move(r));
                interreduced = false;
                return c;
            }
            reduce_by(r, rows[size_t(k)]);
        }
    }

    bool get(const Row& r, int64_t c) const
    {
        if (r.dense) {
            if (c / 64 < r.base_word)
                return false;
            return (r.bits[size_t(c / 64 - r.base_word)] >> (c % 64)) & 1;
        }
        return std::binary_search(r.cols.begin(), r.cols.end(), c);
    }

    void interreduce()
    {
        if (interreduced)
            return;
        // Clear every pivot column from all other rows, working from the
        // rightmost pivot so each row is touched in one sweep per pivot.
        std::vector<int32_t> order;
        for (int64_t c = ncols - 1; c >= 0; --c)
            if (pivot_row[size_t(c)] >= 0)
                order.push_back(pivot_row[size_t(c)]);
        for (int32_t k : order) {
            int64_t piv = rows[size_t(k)].pivot;
            for (auto& r : rows) {
                if (r.pivot < piv && get(r, piv))
                    reduce_by(r, rows[size_t(k)]);
            }
        }
        interreduced = true;
    }

    SparseVec support(const Row& r) const
    {
        SparseVec out;
        if (r.dense) {
            for (int64_t w = r.base_word; w < nwords; ++w) {
                uint64_t v = r.bits[size_t(w - r.base_word)];
                while (v) {
                    int b = std::countr_zero(v);
                    out.emplace_back(w * 64 + b, 1);
                    v &= v - 1;
                }
            }
        } else {
            for (int64_t c : r.cols)
                out.emplace_back(c, 1);
        }
        return out;
    }
};

struct RowSpaceFp {
    struct Row {
        bool dense = false;
        std::vector<int64_t> cols;
        std::vector<uint8_t> coef; // parallel to cols
        int64_t base = 0;
        std::vector<uint8_t> vals; // dense: columns [base .. ncols)
        int64_t pivot = -1;
    };

    uint32_t p;
    int64_t ncols;
    std::vector<Row> rows;
    std::vector<int32_t> pivot_row;
    bool interreduced = false;

    RowSpaceFp(uint32_t p_, int64_t ncols_) : p(p_), ncols(ncols_), pivot_row(size_t(ncols_), -1)
    {
        if (p >= 256)
            throw ResourceError("filtered row reduction supports p < 256");
    }

    void promote(Row& r) const
    {
        if (r.dense)
            return;
        r.base = r.cols.empty() ? 0 : r.cols.front();
        r.vals.assign(size_t(ncols - r.base), 0);
        for (size_t i = 0; i < r.cols.size(); ++i)
            r.vals[size_t(r.cols[i] - r.base)] = r.coef[i];
        r.cols.clear();
        r.coef.clear();
        r.dense = true;
    }

    bool should_promote(size_t nnz, int64_t first) const
    {
        return nnz > 4096 || int64_t(nnz) * 12 > (ncols - first);
    }

    int64_t first_col(const Row& r, int64_t from) const
    {
        if (!r.dense)
            return r.cols.empty() ? -1 : r.cols.front();
        for (int64_t c = std::max(from, r.base); c < ncols; ++c)
            if (r.vals[size_t(c - r.base)])
                return c;
        return -1;
    }

    uint32_t get(const Row& r, int64_t c) const
    {
        if (r.dense) {
            if (c < r.base)
                return 0;
            return r.vals[size_t(c - r.base)];
        }
        auto it = std::lower_bound(r.cols.begin(), r.cols.end(), c);
        if (it == r.cols.end() || *it != c)
            return 0;
        return r.coef[size_t(it - r.cols.begin())];
    }

    void scale(Row& r, uint32_t f) const
    {
        if (r.dense) {
            for (auto& v : r.vals)
                v = uint8_t(fp_mul(v, f, p));
        } else {
            for (auto& v : r.coef)
                v = uint8_t(fp_mul(v, f, p));
        }
    }

    // r -= factor * pivot_row (pivot rows are normalized to coefficient 1).
    void axpy(Row& r, const Row& q, uint32_t factor) const
    {
        uint32_t neg = fp_neg(factor, p);
        if (!r.dense && !q.dense) {
            std::vector<int64_t> cols;
            std::vector<uint8_t> coef;
            cols.reserve(r.cols.size() + q.cols.size());
            size_t i = 0, j = 0;
            while (i < r.cols.size() || j < q.cols.size()) {
                int64_t ci = i < r.cols.size() ? r.cols[i] : INT64_MAX;
                int64_t cj = j < q.cols.size() ? q.cols[j] : INT64_MAX;
                if (ci < cj) {
                    cols.push_back(ci);
                    coef.push_back(r.coef[i++]);
                } else if (cj < ci) {
                    uint32_t v = fp_mul(q.coef[j++], neg, p);
                    if (v) {
                        cols.push_back(cj);
                        coef.push_back(uint8_t(v));
                    }
                } else {
                    uint32_t v = fp_add(r.coef[i], fp_mul(q.coef[j], neg, p), p);
                    if (v) {
                        cols.push_back(ci);
                        coef.push_back(uint8_t(v));
                    }
                    ++i;
                    ++j;
                }
            }
            r.cols = std::move(cols);
            r.coef = std::move(coef);
            if (!r.cols.empty() && should_promote(r.cols.size(), r.cols.front()))
                promote(r);
            return;
        }
        promote(r);
        if (q.dense) {
            for (int64_t c = std::max(r.base, q.base); c < ncols; ++c) {
                uint8_t qv = q.vals[size_t(c - q.base)];
                if (qv)
                    r.vals[size_t(c - r.base)] =
                        uint8_t(fp_add(r.vals[size_t(c - r.base)], fp_mul(qv, neg, p), p));
            }
        } else {
            for (size_t j = 0; j < q.cols.size(); ++j) {
                int64_t c = q.cols[j];
                r.vals[size_t(c - r.base)] =
                    uint8_t(fp_add(r.vals[size_t(c - r.base)], fp_mul(q.coef[j], neg, p), p));
            }
        }
    }

    int64_t insert(SparseVec in)
    {
        Row r;
        for (auto& [c, v] : in) {
            uint32_t vv = v % p;
            if (vv) {
                r.cols.push_back(c);
                r.coef.push_back(uint8_t(vv));
            }
        }
        int64_t scan = 0;
        while (true) {
            int64_t c = first_col(r, scan);
            if (c < 0)
                return -1;
            scan = c;
            int32_t k = pivot_row[size_t(c)];
            if (k < 0) {
                scale(r, fp_inv(get(r, c), p));
                r.pivot = c;
                pivot_row[size_t(c)] = int32_t(rows.size());
                rows.push_back(std::move(r));
                interreduced = false;
                return c;
            }
            axpy(r, rows[size_t(k)], get(r, c));
        }
    }

    void interreduce()
    {
        if (interreduced)
            return;
        std::vector<int32_t> order;
        for (int64_t c = ncols - 1; c >= 0; --c)
            if (pivot_row[size_t(c)] >= 0)
                order.push_back(pivot_row[size_t(c)]);
        for (int32_t k : order) {
            int64_t piv = rows[size_t(k)].pivot;
            for (auto& r : rows) {
                if (r.pivot == piv)
                    continue;
                uint32_t v = (r.pivot < piv) ? get(r, piv) : 0;
                if (v)
                    axpy(r, rows[size_t(k)], v);
            }
        }
        interreduced = true;
    }

    SparseVec support(const Row& r) const
    {
        SparseVec out;
        if (r.dense) {
            for (int64_t c = r.base; c < ncols; ++c)
                if (r.vals[size_t(c - r.base)])
                    out.emplace_back(c, r.vals[size_t(c - r.base)]);
        } else {
            for (size_t i = 0; i < r.cols.size(); ++i)
                out.emplace_back(r.cols[i], r.coef[i]);
        }
        return out;
    }
};

// ---------------------------------------------------------------------
// Normal-form compression of the top degree block. Rewriting maps every
// degree-N monomial to its residue modulo the leading-form ideal J; a
// basis all of whose elements have at most two terms rewrites monomials
// to single (signed) monomials, which covers every commutator-generated
// ideal. Targets of a rewrite are deglex-smaller, i.e. code-larger, so a
// single descending pass fills the table.

struct TopCompression {
    int64_t raw_width = 0;
    int64_t width = 0;   // number of normal monomials at degree N
    int64_t dim_j = 0;   // raw_width - width
    bool binomial = true;
    std::vector<uint32_t> col;   // code -> top column, UINT32_MAX when reducing to 0
    std::vector<uint8_t> coef;   // code -> coefficient picked up by rewriting
    std::vector<SparseVec> vec;  // general case: code -> compressed support

    static constexpr uint32_t kZero = UINT32_MAX;
};

TopCompression build_top_compression(const GroebnerBasis& gb, int N, uint64_t budget_bytes)
{
    const Context& ctx = gb.context();
    TopCompression tc;
    int64_t width = 1;
    for (int k = 0; k < N; ++k)
        width *= ctx.d;
    tc.raw_width = width;

    tc.binomial = true;
    for (const auto& f : gb.elements())
        if (f.term_count() > 2)
            tc.binomial = false;

    if (uint64_t(width) * (tc.binomial ? 5 : 64) > budget_bytes)
        throw ResourceError("normal-form table for the top degree would need about " +
                            std::to_string(uint64_t(width) * (tc.binomial ? 5 : 64) >> 20) +
                            " MiB; lower N or d");

    struct Rewrite {
        Word lead;
        bool to_zero;
        Word target_mid;
        uint32_t coeff; // m -> coeff * (prefix target_mid suffix)
    };
    std::vector<Rewrite> rules;
    for (const auto& f : gb.elements()) {
        Rewrite r;
        auto [lw, lc] = f.leading_monomial();
        (void)lc; // monic
        r.lead = lw;
        if (f.term_count() == 1) {
            r.to_zero = true;
            r.coeff = 0;
        } else if (f.term_count() == 2 && tc.binomial) {
            r.to_zero = false;
            for (const auto& [w, c] : f.terms())
                if (!(w == lw)) {
                    r.target_mid = w;
                    r.coeff = fp_neg(c, ctx.p); // m1 = -c m2 mod J
                }
        } else {
            r.to_zero = false; // handled by the general path
            r.coeff = 0;
        }
        rules.push_back(std::move(r));
    }

    auto find_rule = [&](const Word& w, int& pos) -> int {
        for (size_t k = 0; k < rules.size(); ++k) {
            pos = w.find_factor(rules[k].lead);
            if (pos >= 0)
                return int(k);
        }
        return -1;
    };

    if (tc.binomial) {
        tc.col.assign(size_t(width), TopCompression::kZero);
        tc.coef.assign(size_t(width), 0);
        std::vector<uint32_t> normal_codes;
        for (int64_t code = width - 1; code >= 0; --code) {
            Word w = Word::from_code(uint64_t(code), N, ctx.d);
            int pos = -1;
            int k = find_rule(w, pos);
            if (k < 0) {
                tc.col[size_t(code)] = uint32_t(code); // provisional: raw code
                tc.coef[size_t(code)] = 1;
                normal_codes.push_back(uint32_t(code));
                continue;
            }
            const Rewrite& r = rules[size_t(k)];
            if (r.to_zero)
                continue; // stays (kZero, 0)
            Word target = w.prefix(pos) * r.target_mid * w.suffix_from(pos + r.lead.degree());
            uint64_t tcode = target.code(ctx.d);
            // target is deglex-smaller, so already resolved
            if (tc.col[size_t(tcode)] == TopCompression::kZero)
                continue;
            tc.col[size_t(code)] = tc.col[size_t(tcode)];
            tc.coef[size_t(code)] =
                uint8_t(fp_mul(r.coeff, tc.coef[size_t(tcode)], ctx.p));
        }
        // Renumber normal codes (collected descending) to 0..width-1 by
        // code ascending.
        std::sort(normal_codes.begin(), normal_codes.end());
        std::vector<uint32_t> rank(size_t(width), TopCompression::kZero);
        for (size_t i = 0; i < normal_codes.size(); ++i)
            rank[normal_codes[i]] = uint32_t(i);
        for (int64_t code = 0; code < width; ++code)
            if (tc.col[size_t(code)] != TopCompression::kZero)
                tc.col[size_t(code)] = rank[tc.col[size_t(code)]];
        tc.width = int64_t(normal_codes.size());
    } else {
        tc.vec.assign(size_t(width), {});
        std::vector<int64_t> normal_codes;
        // First pass: identify normal monomials, assign columns.
        std::vector<uint32_t> rank(size_t(width), TopCompression::kZero);
        for (int64_t code = 0; code < width; ++code) {
            Word w = Word::from_code(uint64_t(code), N, ctx.d);
            int pos = -1;
            if (find_rule(w, pos) < 0) {
                rank[size_t(code)] = uint32_t(normal_codes.size());
                normal_codes.push_back(code);
            }
        }
        tc.width = int64_t(normal_codes.size());
        for (int64_t code = width - 1; code >= 0; --code) {
            Word w = Word::from_code(uint64_t(code), N, ctx.d);
            int pos = -1;
            int k = find_rule(w, pos);
            if (k < 0) {
                tc.vec[size_t(code)] = {{int64_t(rank[size_t(code)]), 1}};
                continue;
            }
            // m = prefix * lead * suffix = -(prefix * tail * suffix) mod J
            const Polynomial& f = gb.elements()[size_t(k)];
            auto [lw, lc] = f.leading_monomial();
            (void)lc;
            SparseVec acc;
            for (const auto& [t, c] : f.terms()) {
                if (t == lw)
                    continue;
                Word target = w.prefix(pos) * t * w.suffix_from(pos + lw.degree());
                uint32_t factor = fp_neg(c, ctx.p);
                for (auto [cc, vv] : tc.vec[size_t(target.code(ctx.d))])
                    acc.emplace_back(cc, fp_mul(vv, factor, ctx.p));
            }
            std::sort(acc.begin(), acc.end());
            SparseVec merged;
            for (auto& [cc, vv] : acc) {
                if (!merged.empty() && merged.back().first == cc)
                    merged.back().second = fp_add(merged.back().second, vv, ctx.p);
                else
                    merged.emplace_back(cc, vv);
            }
            std::erase_if(merged, [](auto& e) { return e.second == 0; });
            tc.vec[size_t(code)] = std::move(merged);
        }
    }
    tc.dim_j = tc.raw_width - tc.width;
    return tc;
}

// ---------------------------------------------------------------------

struct EngineDetail {
    Layout layout;
    std::unique_ptr<RowSpaceF2> f2;
    std::unique_ptr<RowSpaceFp> fp;
};

struct RelationData {
    int valuation;
    // per degree q (valuation..N): list of (code, coeff)
    std::vector<std::vector<std::pair<uint64_t, uint32_t>>> comps;
};

} // namespace

FilteredIdealBasis ideal_image_series(Context ctx, int cutoff,
                                      const std::vector<TruncatedSeries>& relations,
                                      IdealImageOptions opts)
{
    const int N = cutoff;
    if (N < 0)
        throw std::invalid_argument("cutoff must be >= 0");
    FilteredIdealBasis out;
    out.ctx_ = ctx;
    out.cutoff_ = N;
    out.pivot_dims_.assign(size_t(N) + 1, 0);

    std::vector<RelationData> rels;
    std::vector<Polynomial> leading_forms;
    int vmin = N + 1;
    for (size_t e = 0; e < relations.size(); ++e) {
        const auto& w = relations[e];
        require_same(ctx, w.context());
        if (w.cutoff() < N)
            throw std::invalid_argument("relation series cutoff below the requested cutoff");
        auto val = [&]() -> std::optional<int> {
            for (int n = 0; n <= N; ++n)
                if (!w.component(n).is_zero())
                    return n;
            return std::nullopt;
        }();
        if (!val)
            throw std::invalid_argument("relation " + std::to_string(e + 1) +
                                        " expands to zero modulo the cutoff (identity word or "
                                        "valuation beyond N)");
        if (*val == 0)
            throw std::invalid_argument("relation " + std::to_string(e + 1) +
                                        " has a nonzero constant term");
        if (*val == 1)
            out.warnings_.push_back("relation " + std::to_string(e + 1) +
                                    " has valuation 1 (kills a generator)");
        vmin = std::min(vmin, *val);
        RelationData rd;
        rd.valuation = *val;
        rd.comps.resize(size_t(N) + 1);
        for (int q = *val; q <= N; ++q)
            for (const auto& [word, c] : w.component(q).terms())
                rd.comps[size_t(q)].emplace_back(word.code(ctx.d), c);
        rels.push_back(std::move(rd));
        leading_forms.push_back(w.component(*val).monic());
    }

    if (rels.empty())
        return out; // zero ideal: all dims stay 0

    // Mode choice: compressed top unless the raw top block is small.
    int64_t raw_top = 1;
    for (int k = 0; k < N; ++k)
        raw_top *= ctx.d;
    bool compressed;
    switch (opts.top_block) {
    case IdealImageOptions::TopBlock::full:
        compressed = false;
        break;
    case IdealImageOptions::TopBlock::compressed:
        compressed = true;
        break;
    default:
        compressed = raw_top > 4000;
    }
    out.compressed_top_ = compressed;

    const uint64_t budget = opts.max_megabytes << 20;
    TopCompression tc;
    if (compressed) {
        GroebnerBasis gb = complete(ctx, leading_forms, N);
        tc = build_top_compression(gb, N, budget);
    } else {
        tc.raw_width = raw_top;
        tc.width = raw_top;
        tc.dim_j = 0;
    }

    Layout lay = make_layout(ctx, N, vmin, compressed, tc.width);

    // Worst-case dense estimate; the sparse representation usually stays
    // far below, but refuse what could not fit even in principle.
    uint64_t gen_rows = 0;
    for (const auto& rd : rels) {
        int smax = (compressed ? N - 1 : N) - rd.valuation;
        uint64_t pairs = 0, dp = 1;
        for (int s = 0; s <= smax; ++s, dp *= ctx.d)
            pairs += uint64_t(s + 1) * dp;
        gen_rows += pairs;
    }
    uint64_t kept = std::min<uint64_t>(gen_rows, uint64_t(lay.total));
    uint64_t row_bytes = ctx.p == 2 ? uint64_t(lay.total + 7) / 8 : uint64_t(lay.total);
    uint64_t estimate = kept * row_bytes + uint64_t(lay.total) * 4;
    if (estimate > budget)
        throw ResourceError(
            "dense worst-case estimate " + std::to_string(estimate >> 20) +
            " MiB exceeds the budget of " + std::to_string(budget >> 20) +
            " MiB (set GOCHA_MAX_MEGABYTES or lower N/d); requested d=" + std::to_string(ctx.d) +
            " N=" + std::to_string(N));

    auto detail = std::make_shared<EngineDetail>();
    detail->layout = lay;
    if (ctx.p == 2)
        detail->f2 = std::make_unique<RowSpaceF2>(lay.total);
    else
        detail->fp = std::make_unique<RowSpaceFp>(ctx.p, lay.total);

    auto insert_row = [&](SparseVec row) -> int64_t {
        std::sort(row.begin(), row.end());
        SparseVec merged;
        merged.reserve(row.size());
        for (auto& [c, v] : row) {
            if (!merged.empty() && merged.back().first == c)
                merged.back().second = fp_add(merged.back().second, v, ctx.p);
            else
                merged.emplace_back(c, v);
        }
        std::erase_if(merged, [](auto& e) { return e.second == 0; });
        if (detail->f2)
            return detail->f2->insert(std::move(merged));
        return detail->fp->insert(std::move(merged));
    };

    // Insert truncate(m * w_e * m') by valuation layers; left/right
    // multipliers run in code order, so the whole pass is deterministic.
    const int vmax = compressed ? N - 1 : N;
    SparseVec row;
    for (int v = vmin; v <= vmax; ++v) {
        for (size_t e = 0; e < rels.size(); ++e) {
            const RelationData& rd = rels[e];
            if (rd.valuation > v)
                continue;
            int s = v - rd.valuation;
            for (int g = 0; g <= s; ++g) {
                int h = s - g;
                int64_t left_count = lay.dpow[size_t(g)];
                int64_t right_count = lay.dpow[size_t(h)];
                for (int64_t ca = 0; ca < left_count; ++ca) {
                    for (int64_t cb = 0; cb < right_count; ++cb) {
                        row.clear();
                        for (int q = rd.valuation; q + g + h <= N; ++q) {
                            int deg = q + g + h;
                            for (auto [tcode, c] : rd.comps[size_t(q)]) {
                                uint64_t code =
                                    (uint64_t(ca) * uint64_t(lay.dpow[size_t(q)]) + tcode) *
                                        uint64_t(lay.dpow[size_t(h)]) +
                                    uint64_t(cb);
                                if (deg < N) {
                                    row.emplace_back(lay.block_offset[size_t(deg)] + int64_t(code),
                                                     c);
                                } else if (!compressed) {
                                    row.emplace_back(lay.top_offset + int64_t(code), c);
                                } else if (tc.binomial) {
                                    uint32_t col = tc.col[size_t(code)];
                                    if (col != TopCompression::kZero)
                                        row.emplace_back(lay.top_offset + int64_t(col),
                                                         fp_mul(c, tc.coef[size_t(code)], ctx.p));
                                } else {
                                    for (auto [cc, vv] : tc.vec[size_t(code)])
                                        row.emplace_back(lay.top_offset + cc,
                                                         fp_mul(c, vv, ctx.p));
                                }
                            }
                        }
                        int64_t piv = insert_row(row);
                        if (piv >= 0)
                            ++out.pivot_dims_[size_t(lay.degree_of_col(piv))];
                    }
                }
            }
        }
    }
    if (compressed)
        out.pivot_dims_[size_t(N)] += tc.dim_j;
    out.detail_ = std::move(detail);
    return out;
}

namespace {

TruncatedSeries expand_relation(const RelationSpec& r, Context ctx, int N)
{
    return magnus_expand(r.word, ctx, N);
}

} // namespace

FilteredIdealBasis ideal_image(const Presentation& pres, IdealImageOptions opts)
{
    std::vector<TruncatedSeries> ws;
    ws.reserve(pres.relations.size());
    for (const auto& r : pres.relations)
        ws.push_back(expand_relation(r, pres.ctx, pres.cutoff));
    return ideal_image_series(pres.ctx, pres.cutoff, ws, opts);
}

IntSeries graded_dims(const FilteredIdealBasis& basis)
{
    const int N = basis.cutoff();
    IntSeries dims = IntSeries::zeros(N);
    BigInt dp = 1;
    for (int n = 0; n <= N; ++n, dp *= basis.context().d)
        dims[n] = dp - basis.pivot_dims()[size_t(n)];
    return dims;
}

std::vector<FilteredIdealBasis::Row> FilteredIdealBasis::echelon_rows_below_top() const
{
    std::vector<Row> out;
    if (!detail_)
        return out;
    auto* det = static_cast<EngineDetail*>(detail_.get());
    const Layout& lay = det->layout;
    auto decode = [&](int64_t col) -> std::optional<Word> {
        if (col >= lay.top_offset)
            return std::nullopt; // top block (possibly quotient coordinates)
        int deg = lay.degree_of_col(col);
        return Word::from_code(uint64_t(col - lay.block_offset[size_t(deg)]), deg, lay.ctx.d);
    };
    auto emit = [&](int64_t pivot, SparseVec sup) {
        if (pivot >= lay.top_offset)
            return;
        Row r;
        r.valuation = lay.degree_of_col(pivot);
        for (auto& [c, v] : sup)
            if (auto w = decode(c))
                r.support.emplace_back(*w, v);
        out.push_back(std::move(r));
    };
    if (det->f2) {
        det->f2->interreduce();
        for (const auto& r : det->f2->rows)
            emit(r.pivot, det->f2->support(r));
    } else if (det->fp) {
        det->fp->interreduce();
        for (const auto& r : det->fp->rows)
            emit(r.pivot, det->fp->support(r));
    }
    std::sort(out.begin(), out.end(), [](const Row& a, const Row& b) {
        if (a.valuation != b.valuation)
            return a.valuation < b.valuation;
        return TermKeyOrder{}(a.support.front().first, b.support.front().first);
    });
    return out;
}

GochaReport compute_gocha(const Presentation& pres, const std::optional<Graph>& graph,
                  IdealImageOptions opts)
{
    GochaReport rep;
    rep.exact_to_degree = pres.cutoff;
    FilteredIdealBasis basis = ideal_image(pres, opts);
    rep.dims = graded_dims(basis);
    rep.warnings = basis.warnings();

    std::vector<int> rel_degrees;
    for (const auto& r : pres.relations) {
        auto v = zassenhaus_degree(r.word, pres.ctx, pres.cutoff);
        rel_degrees.push_back(v.value_or(pres.cutoff + 1));
    }
    rep.mild = mildness_check(rep.dims, int(pres.ctx.d), rel_degrees);

    // Model matching, most specific first.
    IntSeries free_dims = IntSeries::zeros(pres.cutoff);
    {
        BigInt dp = 1;
        for (int n = 0; n <= pres.cutoff; ++n, dp *= pres.ctx.d)
            free_dims[n] = dp;
    }
    std::optional<Graph> g = graph;
    if (!g)
        g = graph_from_tags(pres);
    if (rep.dims == free_dims) {
        rep.matched_model = "free";
    } else if (g && g->d == int(pres.ctx.d)) {
        IntSeries model = invert_int_series(clique_polynomial(*g, pres.cutoff));
        if (rep.dims.prefix_equal(model, pres.cutoff))
            rep.matched_model = "clique-polynomial";
    }
    if (rep.matched_model.empty() && rep.mild)
        rep.matched_model = "mild";
    return rep;
}

GradedMatchReport graded_algebra_match(const Graph& g, const Presentation& pres,
                                       IdealImageOptions opts)
{
    GradedMatchReport rep;
    rep.through_degree = pres.cutoff;

    auto split = split_from_tags(pres);
    ConditionSplit sp = split ? *split : condition_decompose(g);
    EdgeRelationReport cond = check_edge_relations(g, sp, pres);
    rep.condition_satisfied = cond.satisfied;
    rep.condition_problems = cond.problems;
    for (const auto& v : cond.edges)
        if (!v.ok)
            rep.condition_problems.push_back("edge {" + std::to_string(v.i) + "," +
                                             std::to_string(v.j) + "}: " + v.reason);

    rep.presentation_dims = graded_dims(ideal_image(pres, opts));
    GroebnerBasis gb = complete(pres.ctx, raaa_ideal(pres.ctx, g), pres.cutoff);
    rep.graph_dims = hilbert_dims(gb, pres.cutoff);

    rep.equal = true;
    for (int n = 0; n <= pres.cutoff; ++n) {
        if (rep.presentation_dims[n] != rep.graph_dims[n]) {
            rep.equal = false;
            rep.first_discrepancy = n;
            break;
        }
    }
    return rep;
}

HomogeneousGradationReport verify_homogeneous_gradation(Context ctx, const Graph& g, int cutoff,
                                                        IdealImageOptions opts)
{
    HomogeneousGradationReport rep;
    std::vector<TruncatedSeries> rels;
    for (const auto& f : raaa_ideal(ctx, g))
        rels.push_back(TruncatedSeries::from_polynomial(f, cutoff));
    if (rels.empty()) {
        rep.filtered_dims = IntSeries::zeros(cutoff);
        BigInt dp = 1;
        for (int n = 0; n <= cutoff; ++n, dp *= ctx.d)
            rep.filtered_dims[n] = dp;
    } else {
        rep.filtered_dims = graded_dims(ideal_image_series(ctx, cutoff, rels, opts));
    }
    GroebnerBasis gb = complete(ctx, raaa_ideal(ctx, g), cutoff);
    rep.graded_dims = hilbert_dims(gb, cutoff);
    rep.equal = true;
    for (int n = 0; n <= cutoff; ++n) {
        if (rep.filtered_dims[n] != rep.graded_dims[n]) {
            rep.equal = false;
            rep.first_discrepancy = n;
            break;
        }
    }
    return rep;
}

} // namespace gocha
