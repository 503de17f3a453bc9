#include "qgr/qposet.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "qgr/errors.hpp"

namespace qgr {

ProblemShape ProblemShape::create(int m, int p, int q) {
    if (m < 2) throw input_error("shape requires m > 1, got m=" + std::to_string(m));
    if (p < 2) throw input_error("shape requires p > 1, got p=" + std::to_string(p));
    if (q < 0) throw input_error("shape requires q >= 0, got q=" + std::to_string(q));
    return ProblemShape{m, p, q};
}

std::string ProblemShape::to_string() const {
    std::ostringstream os;
    os << "(m=" << m << ",p=" << p << ",q=" << q << ")";
    return os.str();
}

std::strong_ordering QuantumIndex::operator<=>(const QuantumIndex& other) const {
    if (auto c = level <=> other.level; c != 0) return c;
    return alpha <=> other.alpha;
}

std::string QuantumIndex::key() const {
    std::ostringstream os;
    os << level << ':';
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (i) os << ',';
        os << alpha[i];
    }
    return os.str();
}

QuantumIndex QuantumIndex::from_key(const std::string& key) {
    QuantumIndex out;
    std::istringstream is(key);
    char sep = 0;
    if (!(is >> out.level >> sep) || sep != ':')
        throw parse_error("malformed index key: '" + key + "'");
    int v = 0;
    while (is >> v) {
        out.alpha.push_back(v);
        if (!(is >> sep)) break;
        if (sep != ',') throw parse_error("malformed index key: '" + key + "'");
    }
    if (out.alpha.empty()) throw parse_error("malformed index key: '" + key + "'");
    return out;
}

std::string QuantumIndex::label() const {
    bool compact = std::all_of(alpha.begin(), alpha.end(), [](int v) { return v >= 1 && v <= 9; });
    std::ostringstream os;
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (i && !compact) os << ',';
        os << alpha[i];
    }
    os << "^(" << level << ')';
    return os.str();
}

void validate_index(const ProblemShape& shape, const QuantumIndex& x) {
    if (static_cast<int>(x.alpha.size()) != shape.p)
        throw input_error("index " + x.key() + " has wrong subset size for shape " + shape.to_string());
    if (x.level < 0 || x.level > shape.q)
        throw input_error("index " + x.key() + " has quantum level outside 0.." + std::to_string(shape.q));
    int prev = 0;
    for (int v : x.alpha) {
        if (v <= prev || v > shape.n())
            throw input_error("index " + x.key() + " is not a strictly increasing subset of 1.." +
                              std::to_string(shape.n()));
        prev = v;
    }
}

std::vector<QuantumIndex> enumerate_indices(const ProblemShape& shape) {
    std::vector<QuantumIndex> out;
    const int n = shape.n();
    const int p = shape.p;
    std::vector<int> subset(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) subset[static_cast<size_t>(i)] = i + 1;
    std::vector<std::vector<int>> subsets;
    while (true) {
        subsets.push_back(subset);
        int i = p - 1;
        while (i >= 0 && subset[static_cast<size_t>(i)] == n - (p - 1 - i)) --i;
        if (i < 0) break;
        ++subset[static_cast<size_t>(i)];
        for (int j = i + 1; j < p; ++j)
            subset[static_cast<size_t>(j)] = subset[static_cast<size_t>(j - 1)] + 1;
    }
    out.reserve(static_cast<size_t>(shape.q + 1) * subsets.size());
    for (int a = 0; a <= shape.q; ++a)
        for (const auto& s : subsets) out.push_back(QuantumIndex{s, a});
    return out;
}

int rank(const ProblemShape& shape, const QuantumIndex& x) {
    validate_index(shape, x);
    int r = x.level * shape.n();
    for (size_t i = 0; i < x.alpha.size(); ++i) r += x.alpha[i] - static_cast<int>(i) - 1;
    return r;
}

namespace {

// x <= y without validation. With d = y.level - x.level >= 0 the condition
// is vacuous once d >= p, otherwise y.alpha[d+j] >= x.alpha[j] for the
// overlapping positions.
bool leq_unchecked(int p, const QuantumIndex& x, const QuantumIndex& y) {
    const int d = y.level - x.level;
    if (d < 0) return false;
    if (d >= p) return true;
    for (int j = 0; j < p - d; ++j)
        if (y.alpha[static_cast<size_t>(d + j)] < x.alpha[static_cast<size_t>(j)]) return false;
    return true;
}

}  // namespace

bool leq(const ProblemShape& shape, const QuantumIndex& x, const QuantumIndex& y) {
    validate_index(shape, x);
    validate_index(shape, y);
    return leq_unchecked(shape.p, x, y);
}

QuantumPoset::QuantumPoset(const ProblemShape& shape)
    : shape_(ProblemShape::create(shape.m, shape.p, shape.q)) {
    elements_ = enumerate_indices(shape_);
    const int count = size();
    ranks_.resize(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        position_[elements_[static_cast<size_t>(i)]] = i;
        ranks_[static_cast<size_t>(i)] = rank(shape_, elements_[static_cast<size_t>(i)]);
    }

    words_ = (static_cast<size_t>(count) + 63) / 64;
    down_.assign(static_cast<size_t>(count) * words_, 0);
    for (int y = 0; y < count; ++y) {
        uint64_t* row = down_.data() + static_cast<size_t>(y) * words_;
        for (int x = 0; x < count; ++x)
            if (leq_unchecked(shape_.p, elements_[static_cast<size_t>(x)], elements_[static_cast<size_t>(y)]))
                row[static_cast<size_t>(x) / 64] |= uint64_t{1} << (static_cast<size_t>(x) % 64);
    }

    lower_covers_.resize(static_cast<size_t>(count));
    upper_covers_.resize(static_cast<size_t>(count));
    for (int y = 0; y < count; ++y) {
        for (int x = 0; x < count; ++x) {
            if (x == y || !leq_ids(x, y)) continue;
            if (ranks_[static_cast<size_t>(y)] == ranks_[static_cast<size_t>(x)] + 1) {
                lower_covers_[static_cast<size_t>(y)].push_back(x);
                upper_covers_[static_cast<size_t>(x)].push_back(y);
            }
        }
    }

    for (int i = 0; i < count; ++i) {
        if (ranks_[static_cast<size_t>(i)] == 0) bottom_ = i;
        if (ranks_[static_cast<size_t>(i)] == shape_.N()) top_ = i;
    }
    if (bottom_ < 0 || top_ < 0) throw internal_error("poset missing bottom or top element");

    if (count <= 1000 && !validate_covers_exhaustively())
        throw internal_error("rank-criterion covers disagree with the order definition for shape " +
                             shape_.to_string());
}

int QuantumPoset::id_of(const QuantumIndex& x) const {
    validate_index(shape_, x);
    auto it = position_.find(x);
    if (it == position_.end()) throw input_error("index " + x.key() + " not in poset");
    return it->second;
}

bool QuantumPoset::leq_ids(int x, int y) const {
    const uint64_t* row = down_row(y);
    return (row[static_cast<size_t>(x) / 64] >> (static_cast<size_t>(x) % 64)) & 1;
}

int QuantumPoset::glb_ids(int x, int y) const {
    // Common lower bounds, then the unique element dominating all of them.
    std::vector<uint64_t> common(words_);
    const uint64_t* dx = down_row(x);
    const uint64_t* dy = down_row(y);
    for (size_t w = 0; w < words_; ++w) common[w] = dx[w] & dy[w];

    int best = -1;
    for (int z = 0; z < size(); ++z) {
        if (!((common[static_cast<size_t>(z) / 64] >> (static_cast<size_t>(z) % 64)) & 1)) continue;
        if (best < 0 || ranks_[static_cast<size_t>(z)] > ranks_[static_cast<size_t>(best)]) best = z;
    }
    if (best < 0) throw internal_error("empty set of common lower bounds");

    // Every common lower bound must lie below the candidate.
    const uint64_t* db = down_row(best);
    for (size_t w = 0; w < words_; ++w)
        if ((common[w] & ~db[w]) != 0)
            throw lattice_violation_error("no unique greatest lower bound of " +
                                          elements_[static_cast<size_t>(x)].key() + " and " +
                                          elements_[static_cast<size_t>(y)].key());
    // A rank tie between two maximal lower bounds is also a violation.
    for (int z = 0; z < size(); ++z) {
        if (z == best) continue;
        if (!((common[static_cast<size_t>(z) / 64] >> (static_cast<size_t>(z) % 64)) & 1)) continue;
        if (ranks_[static_cast<size_t>(z)] == ranks_[static_cast<size_t>(best)])
            throw lattice_violation_error("two maximal common lower bounds of " +
                                          elements_[static_cast<size_t>(x)].key() + " and " +
                                          elements_[static_cast<size_t>(y)].key());
    }
    return best;
}

const std::vector<BigInt>& QuantumPoset::chain_counts() const {
    if (!chain_counts_.empty()) return chain_counts_;
    chain_counts_.assign(static_cast<size_t>(size()), BigInt(0));
    std::vector<int> order(static_cast<size_t>(size()));
    for (int i = 0; i < size(); ++i) order[static_cast<size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return ranks_[static_cast<size_t>(a)] < ranks_[static_cast<size_t>(b)]; });
    for (int id : order) {
        const auto& lows = lower_covers_[static_cast<size_t>(id)];
        if (lows.empty()) {
            chain_counts_[static_cast<size_t>(id)] = 1;
        } else {
            BigInt total(0);
            for (int l : lows) total += chain_counts_[static_cast<size_t>(l)];
            chain_counts_[static_cast<size_t>(id)] = total;
        }
    }
    return chain_counts_;
}

bool QuantumPoset::validate_covers_exhaustively() const {
    // y covers x iff x < y with no intermediate element; compare with the
    // rank-criterion lists.
    const int count = size();
    for (int y = 0; y < count; ++y) {
        for (int x = 0; x < count; ++x) {
            if (x == y || !leq_ids(x, y)) continue;
            bool has_mid = false;
            const uint64_t* dy = down_row(y);
            for (size_t w = 0; w < words_ && !has_mid; ++w) {
                uint64_t cand = dy[w];
                while (cand) {
                    int z = static_cast<int>(w * 64 + static_cast<size_t>(__builtin_ctzll(cand)));
                    cand &= cand - 1;
                    if (z != x && z != y && leq_ids(x, z)) {
                        has_mid = true;
                        break;
                    }
                }
            }
            const auto& lows = lower_covers_[static_cast<size_t>(y)];
            bool listed = std::find(lows.begin(), lows.end(), x) != lows.end();
            if (listed != !has_mid) return false;
        }
    }
    return true;
}

std::pair<std::vector<QuantumIndex>, std::vector<QuantumIndex>> covers(const ProblemShape& shape,
                                                                       const QuantumIndex& x) {
    QuantumPoset poset(shape);
    int id = poset.id_of(x);
    std::pair<std::vector<QuantumIndex>, std::vector<QuantumIndex>> out;
    for (int l : poset.lower_covers(id)) out.first.push_back(poset.element(l));
    for (int u : poset.upper_covers(id)) out.second.push_back(poset.element(u));
    return out;
}

QuantumIndex glb(const ProblemShape& shape, const QuantumIndex& x, const QuantumIndex& y) {
    QuantumPoset poset(shape);
    return poset.element(poset.glb_ids(poset.id_of(x), poset.id_of(y)));
}

BigInt chain_count(const ProblemShape& shape, const QuantumIndex& x) {
    QuantumPoset poset(shape);
    return poset.chain_counts()[static_cast<size_t>(poset.id_of(x))];
}

BigInt delta_chains(const ProblemShape& shape) {
    QuantumPoset poset(shape);
    return poset.chain_counts()[static_cast<size_t>(poset.top_id())];
}

BigInt delta_formula(const ProblemShape& shape) {
    ProblemShape::create(shape.m, shape.p, shape.q);
    const int m = shape.m, p = shape.p, q = shape.q, n = shape.n();

    BigRat total(0);
    std::vector<int> nu(static_cast<size_t>(p), 0);
    nu[0] = q;
    while (true) {
        BigInt numerator(1);
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j)
                numerator *= (j - i) + n * (nu[static_cast<size_t>(j)] - nu[static_cast<size_t>(i)]);
        BigInt denominator(1);
        for (int j = 1; j <= p; ++j)
            denominator *= factorial(static_cast<unsigned long>(m + j + n * nu[static_cast<size_t>(j - 1)] - 1));
        BigRat term(numerator, denominator);
        term.canonicalize();
        total += term;

        // Next composition of q into p nonnegative parts.
        int i = p - 2;
        while (i >= 0 && nu[static_cast<size_t>(i)] == 0) --i;
        if (i < 0) break;
        int tail = nu[static_cast<size_t>(p - 1)];
        --nu[static_cast<size_t>(i)];
        nu[static_cast<size_t>(i + 1)] = tail + 1;
        for (int k = i + 2; k < p; ++k) nu[static_cast<size_t>(k)] = 0;
    }

    total *= BigRat(factorial(static_cast<unsigned long>(shape.N())));
    if ((static_cast<long>(q) * (p + 1)) % 2 != 0) total = -total;
    total.canonicalize();
    if (total.get_den() != 1 || total < 0)
        throw internal_error("degree formula produced a non-integral or negative value for shape " +
                             shape.to_string() + ": " + to_string(total));
    return total.get_num();
}

BigInt syt_rectangle(int p, int m) {
    if (p < 1 || m < 1) throw input_error("rectangle dimensions must be positive");
    BigInt hooks(1);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < m; ++j) hooks *= (p - i) + (m - j) - 1;
    BigInt numerator = factorial(static_cast<unsigned long>(p) * static_cast<unsigned long>(m));
    BigInt out = numerator / hooks;
    if (out * hooks != numerator) throw internal_error("hook length product does not divide the factorial");
    return out;
}

std::string hasse_dot(const QuantumPoset& poset) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int i = 0; i < poset.size(); ++i)
        os << "  n" << i << " [label=\"" << poset.element(i).label() << '|' << poset.rank_of(i) << "\"];\n";
    for (int y = 0; y < poset.size(); ++y)
        for (int x : poset.lower_covers(y)) os << "  n" << x << " -> n" << y << ";\n";
    os << "}\n";
    return os.str();
}

std::string chain_counts_json(const QuantumPoset& poset) {
    nlohmann::ordered_json obj;
    const auto& counts = poset.chain_counts();
    for (int i = 0; i < poset.size(); ++i)
        obj[poset.element(i).key()] = counts[static_cast<size_t>(i)].get_str();
    return obj.dump(2);
}

std::string poset_json(const QuantumPoset& poset) {
    nlohmann::ordered_json root;
    root["shape"] = {{"m", poset.shape().m}, {"p", poset.shape().p}, {"q", poset.shape().q}};
    root["size"] = poset.size();
    const auto& counts = poset.chain_counts();
    nlohmann::ordered_json elements = nlohmann::ordered_json::array();
    for (int i = 0; i < poset.size(); ++i) {
        nlohmann::ordered_json e;
        e["index"] = poset.element(i).key();
        e["rank"] = poset.rank_of(i);
        e["chain_count"] = counts[static_cast<size_t>(i)].get_str();
        nlohmann::ordered_json lows = nlohmann::ordered_json::array();
        for (int l : poset.lower_covers(i)) lows.push_back(poset.element(l).key());
        e["lower_covers"] = lows;
        nlohmann::ordered_json ups = nlohmann::ordered_json::array();
        for (int u : poset.upper_covers(i)) ups.push_back(poset.element(u).key());
        e["upper_covers"] = ups;
        elements.push_back(e);
    }
    root["elements"] = elements;
    root["delta"] = counts[static_cast<size_t>(poset.top_id())].get_str();
    return root.dump(2);
}

}  // namespace qgr
