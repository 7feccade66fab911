#include "rankforge/coding.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "rankforge/errors.hpp"

namespace rankforge {

std::string word_to_string(std::uint64_t word, int length)
{
    std::string s(static_cast<std::size_t>(length), '0');
    for (int i = 0; i < length; ++i) {
        if ((word >> i) & 1U) {
            s[static_cast<std::size_t>(i)] = '1';
        }
    }
    return s;
}

bool word_less(std::uint64_t a, std::uint64_t b, int /*length*/)
{
    const std::uint64_t diff = a ^ b;
    if (diff == 0) {
        return false;
    }
    return ((a >> std::countr_zero(diff)) & 1U) == 0;
}

bool code_less(const BinaryCode& a, const BinaryCode& b)
{
    const int len = a.length();
    return std::lexicographical_compare(a.words().begin(), a.words().end(), b.words().begin(), b.words().end(),
                                        [len](std::uint64_t x, std::uint64_t y) { return word_less(x, y, len); });
}

int hamming(std::uint64_t a, std::uint64_t b)
{
    return std::popcount(a ^ b);
}

BinaryCode::BinaryCode(int length, std::vector<std::uint64_t> words) : length_(length), words_(std::move(words))
{
    if (length < 1 || length > kMaxLength) {
        throw PreconditionError("code length must be in 1.." + std::to_string(kMaxLength));
    }
    const std::uint64_t mask = (std::uint64_t{1} << length) - 1;
    for (std::uint64_t w : words_) {
        if ((w & ~mask) != 0) {
            throw PreconditionError("word longer than the code length");
        }
    }
    std::sort(words_.begin(), words_.end(), [length](std::uint64_t a, std::uint64_t b) { return word_less(a, b, length); });
    if (std::adjacent_find(words_.begin(), words_.end()) != words_.end()) {
        throw PreconditionError("duplicate code word");
    }
}

BinaryCode BinaryCode::parse(std::string_view text)
{
    std::vector<std::uint64_t> words;
    int length = -1;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (length < 0) {
            length = static_cast<int>(line.size());
        } else if (static_cast<int>(line.size()) != length) {
            throw ParseError("code words have different lengths");
        }
        if (length > kMaxLength) {
            throw ParseError("code word too long");
        }
        std::uint64_t w = 0;
        for (int i = 0; i < length; ++i) {
            const char ch = line[static_cast<std::size_t>(i)];
            if (ch != '0' && ch != '1') {
                throw ParseError("code words may only contain '0' and '1'");
            }
            if (ch == '1') {
                w |= std::uint64_t{1} << i;
            }
        }
        words.push_back(w);
    }
    if (length < 0) {
        throw ParseError("empty code");
    }
    return BinaryCode(length, std::move(words));
}

std::string BinaryCode::to_text() const
{
    std::string out;
    for (std::uint64_t w : words_) {
        out += word_to_string(w, length_);
        out += '\n';
    }
    return out;
}

BinaryCode BinaryCode::full_space(int length)
{
    std::vector<std::uint64_t> w(std::size_t{1} << length);
    std::iota(w.begin(), w.end(), std::uint64_t{0});
    return BinaryCode(length, std::move(w));
}

BinaryCode BinaryCode::even_weight(int length)
{
    std::vector<std::uint64_t> w;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << length); ++x) {
        if (std::popcount(x) % 2 == 0) {
            w.push_back(x);
        }
    }
    return BinaryCode(length, std::move(w));
}

BinaryCode BinaryCode::odd_weight(int length)
{
    std::vector<std::uint64_t> w;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << length); ++x) {
        if (std::popcount(x) % 2 == 1) {
            w.push_back(x);
        }
    }
    return BinaryCode(length, std::move(w));
}

IntMatrix BinaryCode::matrix() const
{
    IntMatrix m = IntMatrix::Zero(length_, static_cast<Eigen::Index>(words_.size()));
    for (std::size_t j = 0; j < words_.size(); ++j) {
        for (int i = 0; i < length_; ++i) {
            m(i, static_cast<Eigen::Index>(j)) = static_cast<std::int64_t>((words_[j] >> i) & 1U);
        }
    }
    return m;
}

int min_distance(const BinaryCode& c)
{
    if (c.size() < 2) {
        throw PreconditionError("minimum distance needs at least two words");
    }
    int best = c.length() + 1;
    const auto& w = c.words();
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            best = std::min(best, hamming(w[i], w[j]));
        }
    }
    return best;
}

std::string to_string(SingletonEquality e)
{
    switch (e) {
    case SingletonEquality::none:
        return "none";
    case SingletonEquality::full_space:
        return "full_space";
    case SingletonEquality::even_weight:
        return "even_weight";
    case SingletonEquality::odd_weight:
        return "odd_weight";
    case SingletonEquality::antipodal_pair:
        return "antipodal_pair";
    }
    return "none";
}

namespace {

std::uint64_t singleton_bound(int n, int d)
{
    return std::uint64_t{1} << (n - d + 1);
}

}  // namespace

std::vector<SingletonEquality> singleton_equality_cases(const BinaryCode& c, int d)
{
    std::vector<SingletonEquality> out;
    const int n = c.length();
    if (d < 1 || d > n + 1 || c.size() != singleton_bound(n, d)) {
        return out;
    }
    const auto& w = c.words();
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    if (c.size() == (std::uint64_t{1} << n)) {
        out.push_back(SingletonEquality::full_space);
    }
    if (c.size() == half && std::all_of(w.begin(), w.end(), [](std::uint64_t x) { return std::popcount(x) % 2 == 0; })) {
        out.push_back(SingletonEquality::even_weight);
    }
    if (c.size() == half && std::all_of(w.begin(), w.end(), [](std::uint64_t x) { return std::popcount(x) % 2 == 1; })) {
        out.push_back(SingletonEquality::odd_weight);
    }
    if (c.size() == 2 && hamming(w[0], w[1]) == n) {
        out.push_back(SingletonEquality::antipodal_pair);
    }
    return out;
}

SingletonVerdict singleton_verify(const BinaryCode& c, int d)
{
    if (d < 1) {
        throw PreconditionError("distance must be at least 1");
    }
    if (c.size() < 2) {
        throw PreconditionError("the Singleton check needs at least two words");
    }
    const auto& w = c.words();
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (hamming(w[i], w[j]) < d) {
                throw PreconditionError("words " + word_to_string(w[i], c.length()) + " and " +
                                        word_to_string(w[j], c.length()) + " differ in fewer than " +
                                        std::to_string(d) + " positions");
            }
        }
    }
    SingletonVerdict v;
    v.bound = singleton_bound(c.length(), d);
    v.holds = c.size() <= v.bound;
    auto cases = singleton_equality_cases(c, d);
    if (!cases.empty()) {
        v.equality = cases.front();
    }
    return v;
}

PlotkinCheck plotkin_bound_check(const Graph& g, VertexSet s)
{
    if (!s.subset_of(g.vertices())) {
        throw PreconditionError("set is not contained in the graph");
    }
    if (s.size() < 2) {
        throw PreconditionError("the Plotkin check needs at least two vertices");
    }
    if (!is_independent(g, s)) {
        throw PreconditionError("set is not independent");
    }
    const std::int64_t k = s.size();
    const std::int64_t n = g.order();
    PlotkinCheck out;
    out.bound = boost::rational<std::int64_t>(k * (n - k), 2 * (k - 1));
    out.min_symdiff = n + 1;
    auto m = s.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            out.min_symdiff = std::min(out.min_symdiff, symmetric_difference(g, m[i], m[j]).size());
        }
    }
    out.holds = boost::rational<std::int64_t>(out.min_symdiff) <= out.bound;
    return out;
}

bool j_in_rowspace(const BinaryCode& c)
{
    const IntMatrix m = c.matrix();
    IntMatrix with_j(m.rows() + 1, m.cols());
    with_j.topRows(m.rows()) = m;
    with_j.row(m.rows()).setOnes();
    return rank_exact(m) == rank_exact(with_j);
}

F2nCheck f2n_check(const BinaryCode& c)
{
    if (c.length() < 5) {
        throw PreconditionError("f2n: code length must be at least 5");
    }
    if (c.size() >= 2 && min_distance(c) < 2) {
        throw PreconditionError("f2n: minimum distance must be at least 2");
    }
    if (!j_in_rowspace(c)) {
        throw PreconditionError("f2n: all-ones vector is not in the row space");
    }
    F2nCheck out;
    out.bound = 5 * (std::uint64_t{1} << (c.length() - 4));
    out.holds = c.size() <= out.bound;
    return out;
}

namespace {

constexpr int kMaxF2nLength = 6;

using Row = std::array<std::int64_t, kMaxF2nLength + 1>;  // coefficients, then the right-hand side

void normalize(Row& row, int width)
{
    std::int64_t g = 0;
    for (int i = 0; i <= width; ++i) {
        g = std::gcd(g, row[static_cast<std::size_t>(i)]);
    }
    if (g > 1) {
        for (int i = 0; i <= width; ++i) {
            row[static_cast<std::size_t>(i)] /= g;
        }
    }
}

struct HyperplaneKey {
    std::array<std::int64_t, kMaxF2nLength + 1> v{};
    bool operator==(const HyperplaneKey&) const = default;
};

struct HyperplaneHash {
    std::size_t operator()(const HyperplaneKey& k) const noexcept
    {
        std::size_t h = 1469598103934665603ULL;
        for (auto x : k.v) {
            h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
        }
        return h;
    }
};

class HyperplaneSearch {
public:
    explicit HyperplaneSearch(int n) : n_(n), words_((std::uint64_t{1} << n) - 1) {}

    F2nOptimum run()
    {
        dfs(0, 1);
        F2nOptimum out;
        out.max_size = best_size_;
        out.witness = best_;
        out.hyperplanes = seen_.size();
        return out;
    }

private:
    // Adds `row` to the echelon basis if it is independent of it.
    bool push(Row row)
    {
        for (int i = 0; i < depth_; ++i) {
            const int p = pivot_[static_cast<std::size_t>(i)];
            const std::int64_t b = row[static_cast<std::size_t>(p)];
            if (b == 0) {
                continue;
            }
            const Row& base = rows_[static_cast<std::size_t>(i)];
            const std::int64_t a = base[static_cast<std::size_t>(p)];
            for (int j = 0; j <= n_; ++j) {
                row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j)] * a - base[static_cast<std::size_t>(j)] * b;
            }
            normalize(row, n_);
        }
        int p = -1;
        for (int j = 0; j < n_; ++j) {
            if (row[static_cast<std::size_t>(j)] != 0) {
                p = j;
                break;
            }
        }
        if (p < 0) {
            return false;
        }
        rows_[static_cast<std::size_t>(depth_)] = row;
        pivot_[static_cast<std::size_t>(depth_)] = p;
        ++depth_;
        return true;
    }

    void dfs(int depth, std::uint64_t start)
    {
        for (std::uint64_t w = start; w <= words_; ++w) {
            if (words_ - w + 1 < static_cast<std::uint64_t>(n_ - depth)) {
                return;
            }
            Row row{};
            for (int i = 0; i < n_; ++i) {
                row[static_cast<std::size_t>(i)] = static_cast<std::int64_t>((w >> i) & 1U);
            }
            row[static_cast<std::size_t>(n_)] = 1;
            if (!push(row)) {
                continue;
            }
            if (depth_ == n_) {
                solve_and_score();
            } else {
                dfs(depth + 1, w + 1);
            }
            --depth_;
        }
    }

    void solve_and_score()
    {
        // Back substitution in reverse insertion order; x = num / den per coordinate.
        std::array<boost::rational<std::int64_t>, kMaxF2nLength> x{};
        for (int i = n_ - 1; i >= 0; --i) {
            const Row& row = rows_[static_cast<std::size_t>(i)];
            const int p = pivot_[static_cast<std::size_t>(i)];
            boost::rational<std::int64_t> acc(row[static_cast<std::size_t>(n_)]);
            for (int k = i + 1; k < n_; ++k) {
                const int q = pivot_[static_cast<std::size_t>(k)];
                acc -= row[static_cast<std::size_t>(q)] * x[static_cast<std::size_t>(q)];
            }
            x[static_cast<std::size_t>(p)] = acc / row[static_cast<std::size_t>(p)];
        }
        std::int64_t den = 1;
        for (int j = 0; j < n_; ++j) {
            den = std::lcm(den, x[static_cast<std::size_t>(j)].denominator());
        }
        HyperplaneKey key;
        for (int j = 0; j < n_; ++j) {
            key.v[static_cast<std::size_t>(j)] =
                x[static_cast<std::size_t>(j)].numerator() * (den / x[static_cast<std::size_t>(j)].denominator());
        }
        // Coordinate permutations map feasible codes to feasible codes.
        std::sort(key.v.begin(), key.v.begin() + n_);
        key.v[static_cast<std::size_t>(n_)] = den;
        if (!seen_.insert(key).second) {
            return;
        }
        score(key);
    }

    void score(const HyperplaneKey& key)
    {
        std::vector<std::uint64_t> on_plane;
        for (std::uint64_t c = 1; c <= words_; ++c) {
            std::int64_t dot = 0;
            for (int j = 0; j < n_; ++j) {
                if ((c >> j) & 1U) {
                    dot += key.v[static_cast<std::size_t>(j)];
                }
            }
            if (dot == key.v[static_cast<std::size_t>(n_)]) {
                on_plane.push_back(c);
            }
        }
        if (static_cast<int>(on_plane.size()) < best_size_) {
            return;
        }
        Graph cube(static_cast<int>(on_plane.size()));
        for (std::size_t i = 0; i < on_plane.size(); ++i) {
            for (std::size_t j = i + 1; j < on_plane.size(); ++j) {
                if (hamming(on_plane[i], on_plane[j]) == 1) {
                    cube.add_edge(static_cast<int>(i), static_cast<int>(j));
                }
            }
        }
        auto mis = independence_number(cube);
        if (mis.size < best_size_) {
            return;
        }
        std::vector<std::uint64_t> words;
        for (int v : mis.witness) {
            words.push_back(on_plane[static_cast<std::size_t>(v)]);
        }
        BinaryCode code(n_, std::move(words));
        if (mis.size > best_size_ || code_less(code, best_)) {
            best_size_ = mis.size;
            best_ = std::move(code);
        }
    }

    int n_;
    std::uint64_t words_;
    int depth_ = 0;
    std::array<Row, kMaxF2nLength> rows_{};
    std::array<int, kMaxF2nLength> pivot_{};
    std::unordered_set<HyperplaneKey, HyperplaneHash> seen_;
    int best_size_ = 0;
    BinaryCode best_;
};

}  // namespace

F2nOptimum f2n_brute_max(int n)
{
    if (n < 5 || n > kMaxF2nLength) {
        throw PreconditionError("f2n explorer supports lengths 5 and 6 only");
    }
    return HyperplaneSearch(n).run();
}

}  // namespace rankforge
