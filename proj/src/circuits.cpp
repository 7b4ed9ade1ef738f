#include "polytrope/circuits.hpp"

#include "polytrope/binomials.hpp"
#include "polytrope/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace polytrope {

namespace {

// Incremental fraction-free (Bareiss) elimination over the integers with
// rollback. Entries stay bounded by Hadamard on {-1,0,1} input rows (depth is
// capped at rank+1 <= 16 here), so int64 storage with int128 intermediates is
// exact.
class BareissRank {
public:
    explicit BareissRank(int ncols) : ncols_(ncols) {}

    int rank() const { return static_cast<int>(rows_.size()); }

    bool add_row(const std::vector<int>& row) {
        std::vector<std::int64_t> r(row.begin(), row.end());
        std::int64_t prev = 1;
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const auto& basis = rows_[k];
            const int pc = pivot_cols_[k];
            const std::int64_t piv = basis[pc];
            const std::int64_t factor = r[pc];
            for (int c = 0; c < ncols_; ++c) {
                __int128 v = static_cast<__int128>(r[c]) * piv - static_cast<__int128>(factor) * basis[c];
                v /= prev; // exact by Bareiss
                assert(v <= INT64_MAX && v >= INT64_MIN);
                r[c] = static_cast<std::int64_t>(v);
            }
            prev = piv;
        }
        int pc = -1;
        for (int c = 0; c < ncols_; ++c)
            if (r[c] != 0) {
                pc = c;
                break;
            }
        if (pc < 0) return false;
        rows_.push_back(std::move(r));
        pivot_cols_.push_back(pc);
        return true;
    }

    void pop_row() {
        rows_.pop_back();
        pivot_cols_.pop_back();
    }

private:
    int ncols_;
    std::vector<std::vector<std::int64_t>> rows_;
    std::vector<int> pivot_cols_;
};

struct Searcher {
    const InducedAction& action;
    const std::vector<BipartiteBinomial>& catalog;
    int num; // catalog size
    BareissRank rank_state;
    std::vector<int> current;
    std::vector<RelationCircuit> found; // canonical representatives

    Searcher(const InducedAction& a, const std::vector<BipartiteBinomial>& cat, int ncols)
        : action(a), catalog(cat), num(static_cast<int>(cat.size())), rank_state(ncols) {}

    // T (sorted) is canonical iff no relabeling sends it to a lexicographically
    // smaller subset. Canonicity of every prefix follows, which makes the
    // extend-by-larger-elements search hit each orbit exactly once.
    bool subset_canonical(const std::vector<int>& t) const {
        const int np = action.perm_count();
        const int k = static_cast<int>(t.size());
        int image[32];
        for (int s = 1; s < np; ++s) {
            for (int a = 0; a < k; ++a) {
                int v = action.binomial_image(s, t[a]);
                int b = a;
                while (b > 0 && image[b - 1] > v) {
                    image[b] = image[b - 1];
                    --b;
                }
                image[b] = v;
            }
            for (int a = 0; a < k; ++a) {
                if (image[a] < t[a]) return false;
                if (image[a] > t[a]) break;
            }
        }
        return true;
    }

    void record_if_circuit(const std::vector<int>& t) {
        // current = t with t.back() dependent on the rest: corank is exactly 1.
        RationalMatrix coords; // one row per edge coordinate
        const int ncols = static_cast<int>(t.size());
        const int nedges = static_cast<int>(catalog[0].normal.size());
        coords.assign(nedges, std::vector<Rational>(ncols));
        for (int c = 0; c < ncols; ++c)
            for (int e = 0; e < nedges; ++e) coords[e][c] = catalog[t[c]].normal[e];
        const auto kernel = kernel_basis(coords, ncols);
        if (kernel.size() != 1) return; // corank 1 is guaranteed; defensive
        const auto lambda = primitive_integer_vector(kernel[0]);
        for (const auto& z : lambda)
            if (z == 0) return; // proper sub-circuit; found along its own chain
        RelationCircuit c;
        c.support = t;
        c.coefficients = lambda;
        found.push_back(std::move(c));
    }

    void dfs() {
        const int start = current.empty() ? 0 : current.back() + 1;
        for (int e = start; e < num; ++e) {
            current.push_back(e);
            if (subset_canonical(current)) {
                if (rank_state.add_row(catalog[e].normal)) {
                    dfs();
                    rank_state.pop_row();
                } else {
                    record_if_circuit(current);
                }
            }
            current.pop_back();
        }
    }
};

std::string circuit_key(const RelationCircuit& c) {
    std::string k;
    for (std::size_t i = 0; i < c.support.size(); ++i) {
        k += std::to_string(c.support[i]);
        k += ':';
        k += c.coefficients[i].get_str();
        k += ';';
    }
    return k;
}

RelationCircuit transport(const InducedAction& action, int s, const RelationCircuit& c) {
    std::vector<std::pair<int, Integer>> entries;
    for (std::size_t i = 0; i < c.support.size(); ++i)
        entries.emplace_back(action.binomial_image(s, c.support[i]),
                             c.coefficients[i] * action.binomial_sign(s, c.support[i]));
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    RelationCircuit out;
    for (auto& [idx, coef] : entries) {
        out.support.push_back(idx);
        out.coefficients.push_back(coef);
    }
    if (out.coefficients[0] < 0)
        for (auto& z : out.coefficients) z = -z;
    return out;
}

} // namespace

CircuitReport relation_circuits(const InducedAction& action, bool with_circuits) {
    const int n = action.n();
    const auto catalog = binomial_catalog(n);

    CircuitReport report;
    report.n = n;
    report.num_binomials = static_cast<int>(catalog.size());

    RationalMatrix rows;
    for (const auto& b : catalog) {
        std::vector<Rational> r(b.normal.begin(), b.normal.end());
        rows.push_back(std::move(r));
    }
    report.rank = rows.empty() ? 0 : rank_of(rows);
    report.kernel_dimension = report.num_binomials - report.rank;

    if (!with_circuits || report.num_binomials == 0) return report;

    Searcher searcher(action, catalog, edge_count(n));
    searcher.dfs();

    // Group representatives by orbit; expand each orbit for reporting.
    std::map<std::string, std::vector<RelationCircuit>> classes;
    for (const auto& rep : searcher.found) {
        std::map<std::string, RelationCircuit> orbit;
        for (int s = 0; s < action.perm_count(); ++s) {
            RelationCircuit img = transport(action, s, rep);
            orbit.emplace(circuit_key(img), std::move(img));
        }
        std::vector<RelationCircuit> members;
        members.reserve(orbit.size());
        for (auto& [key, circ] : orbit) members.push_back(std::move(circ));
        classes.emplace(circuit_key(members.front()), std::move(members));
    }
    for (auto& [key, members] : classes) report.classes.push_back(std::move(members));
    return report;
}

CircuitReport relation_circuits(int n) {
    if (n < 4) {
        CircuitReport empty;
        empty.n = n;
        return empty;
    }
    InducedAction action(n);
    return relation_circuits(action, n <= 5);
}

CircuitFilter::CircuitFilter(int num_binomials, const CircuitReport& report)
    : num_binomials_(num_binomials) {
    if (num_binomials > 64) throw std::invalid_argument("CircuitFilter caps at 64 binomials");
    for (const auto& cls : report.classes)
        for (const auto& c : cls) {
            std::uint64_t pos = 0, neg = 0;
            for (std::size_t i = 0; i < c.support.size(); ++i) {
                if (c.support[i] >= num_binomials) throw std::invalid_argument("circuit outside m=2 range");
                (c.coefficients[i] > 0 ? pos : neg) |= 1ull << c.support[i];
            }
            masks_.emplace_back(pos, neg);
        }
}

bool CircuitFilter::admits(const std::vector<std::int8_t>& signs) const {
    std::uint64_t plus = 0, minus = 0;
    for (int b = 0; b < num_binomials_; ++b)
        (signs[b] > 0 ? plus : minus) |= 1ull << b;
    for (const auto& [pos, neg] : masks_) {
        if ((pos & ~plus) == 0 && (neg & ~minus) == 0) return false;
        if ((pos & ~minus) == 0 && (neg & ~plus) == 0) return false;
    }
    return true;
}

} // namespace polytrope
