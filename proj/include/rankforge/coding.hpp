#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "rankforge/exact_linalg.hpp"
#include "rankforge/graph.hpp"

namespace rankforge {

/// A set of distinct 0/1 words of one length. Position i of a word is bit i;
/// the text form writes position 0 first.
class BinaryCode {
public:
    static constexpr int kMaxLength = 63;

    BinaryCode() = default;
    /// Throws PreconditionError on duplicate words, bits beyond `length`, or a bad length.
    BinaryCode(int length, std::vector<std::uint64_t> words);

    /// One word per line of '0'/'1'; blank lines and lines starting with '#' are skipped.
    static BinaryCode parse(std::string_view text);
    std::string to_text() const;

    static BinaryCode full_space(int length);
    static BinaryCode even_weight(int length);
    static BinaryCode odd_weight(int length);

    int length() const { return length_; }
    std::size_t size() const { return words_.size(); }
    /// Sorted in text-lexicographic order.
    const std::vector<std::uint64_t>& words() const { return words_; }

    /// Column-per-word matrix (length x size).
    IntMatrix matrix() const;

    friend bool operator==(const BinaryCode&, const BinaryCode&) = default;

private:
    int length_ = 0;
    std::vector<std::uint64_t> words_;
};

std::string word_to_string(std::uint64_t word, int length);
/// Text-lexicographic order of equal-length words.
bool word_less(std::uint64_t a, std::uint64_t b, int length);
/// Text-lexicographic order of codes (word lists compared element by element).
bool code_less(const BinaryCode& a, const BinaryCode& b);

int hamming(std::uint64_t a, std::uint64_t b);

/// Minimum distance over distinct pairs. Needs at least two words.
int min_distance(const BinaryCode& c);

enum class SingletonEquality { none, full_space, even_weight, odd_weight, antipodal_pair };

std::string to_string(SingletonEquality e);

struct SingletonVerdict {
    std::uint64_t bound = 0;  ///< 2^(n-d+1)
    bool holds = false;
    SingletonEquality equality = SingletonEquality::none;
};

/// Every equality case the code matches (in case order). Cases coincide only for length <= 2.
std::vector<SingletonEquality> singleton_equality_cases(const BinaryCode& c, int d);

/// Checks |C| <= 2^(n-d+1) and classifies equality by the first matching case.
/// Throws PreconditionError naming an offending pair when two words are closer than d.
SingletonVerdict singleton_verify(const BinaryCode& c, int d);

struct PlotkinCheck {
    boost::rational<std::int64_t> bound;  ///< |S|(n-|S|) / (2(|S|-1))
    int min_symdiff = 0;
    bool holds = false;
};

/// Smallest |N(u) xor N(v)| over distinct u, v in the independent set s, against the
/// Plotkin-style bound.
PlotkinCheck plotkin_bound_check(const Graph& g, VertexSet s);

/// Whether the all-ones vector lies in the rational row space of the code's matrix.
bool j_in_rowspace(const BinaryCode& c);

struct F2nCheck {
    std::uint64_t bound = 0;  ///< 5 * 2^(n-4)
    bool holds = false;
};

/// Needs length >= 5, distance >= 2 and the all-ones vector in the row space;
/// each failed hypothesis is reported by its own PreconditionError.
F2nCheck f2n_check(const BinaryCode& c);

struct F2nOptimum {
    int max_size = 0;
    BinaryCode witness;
    std::uint64_t hyperplanes = 0;  ///< distinct candidate hyperplanes examined
};

/// Largest code meeting the f2n_check hypotheses, for length 5 or 6.
///
/// The all-ones condition says every word satisfies x.c = 1 for one rational x, so
/// a code is feasible iff it sits on an affine hyperplane missing the origin. Every
/// such hyperplane's 0/1 points lie on one spanned by n independent words, so the
/// search enumerates those and solves an independent-set problem in the cube on each.
/// Ties go to the lexicographically smallest witness.
F2nOptimum f2n_brute_max(int n);

}  // namespace rankforge
