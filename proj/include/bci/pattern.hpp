#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bci/tree.hpp"

namespace bci {

/// Predicate over a pendant count: a union of inclusive intervals.
struct SymbolPredicate {
  static constexpr int kUnbounded = 1 << 28;
  struct Range {
    int lo = 0;
    int hi = kUnbounded;
  };
  std::vector<Range> ranges;

  bool matches(int lambda) const;

  static SymbolPredicate exactly(int t);
  static SymbolPredicate at_least(int t);
  static SymbolPredicate at_most(int t);
  static SymbolPredicate between(int lo, int hi);
  static SymbolPredicate any_of(const std::vector<SymbolPredicate>& parts);
};

/// A spine pattern: optional end anchors, a symbol prefix, at most one
/// two-symbol repetition group (min 0 for *r, min 1 for +r), and a suffix.
struct Pattern {
  bool left_anchor = false;
  bool right_anchor = false;
  std::vector<SymbolPredicate> prefix;
  struct Repeat {
    SymbolPredicate first, second;
    int min_repetitions = 0;
  };
  std::optional<Repeat> repeat;
  std::vector<SymbolPredicate> suffix;

  Pattern reversed() const;
};

/// A located match. The repetition count is maximal: no larger count yields a
/// complete match at the same start index. Matches properly contained in a
/// longer match of the same pattern are not reported.
struct Occurrence {
  int start = 0;
  int end = 0;  // inclusive spine interval
  int repetitions = 0;
  bool contains_left_end = false;
  bool contains_right_end = false;
};

std::vector<Occurrence> find_occurrences(const Caterpillar& ct, const Pattern& p);
int count_occurrences(const Caterpillar& ct, const Pattern& p);

/// Parses the textual notation: `[`, `]`, digits, `+`, `-`, `(xy)*`, `(xy)+`
/// (optionally followed by `r`), `{a,b}`. Throws ValidationError.
Pattern parse_pattern(std::string_view text);
std::string pattern_to_string(const Pattern& p);

// Pattern families of the beta* formula. Alternating stem positions carry an
// implicit lambda >= 1 bound: a 2- position with lambda = 0 would be a trunk
// and break the alternation.
Pattern stem_run_pattern();              // 1+2-(02-)^{+r}1+
Pattern internal_alternation_pattern();  // 02-(02-)^{*r}0
Pattern left_alternation_pattern();      // [2-(02-)^{*r}0
Pattern right_alternation_pattern();     // 02-(02-)^{*r}]

enum class CountWindow { whole, interior };

// Number of lambda = 1 stems in the occurrence window.
int lambda_one_stems(const Caterpillar& ct, const Occurrence& m, CountWindow w);

// max{0, s - 1} where s counts lambda = 1 stems in the window.
int alpha1(const Caterpillar& ct, const Occurrence& m, CountWindow w);

enum class Alpha2Variant { as_written, effective };

/// Occurrence bonus for the 0-alternating families. as_written follows the
/// formula text: alpha1 plus one per contained caterpillar end. effective is
/// what the step-4 rewrite gains: alpha1 for internal occurrences, the plain
/// lambda = 1 stem count for anchored ones. Throws if the occurrence does not
/// alternate trunks with small stems.
int alpha2(const Caterpillar& ct, const Occurrence& m, Alpha2Variant v);

// Spine indices i with lambda_i = 1 whose both sides are stems or caterpillar
// ends ({1+,[}1{1+,]}).
std::vector<int> single_stem_centers(const Caterpillar& ct);

/// The 0-alternating occurrence sets with cross-family containment applied:
/// an internal occurrence inside an anchored one is part of that anchored run,
/// not a separate occurrence. whole means the two anchored runs overlap, so
/// the entire spine alternates.
struct AlternationOccurrences {
  std::vector<Occurrence> internal;
  std::vector<Occurrence> left;
  std::vector<Occurrence> right;
  bool whole = false;
};

AlternationOccurrences alternation_occurrences(const Caterpillar& ct);

// Whole-caterpillar resolution for the effective reading: keep only the side
// with the larger rewrite gain, ties to the left. No-op otherwise.
void choose_whole_side(const Caterpillar& ct, AlternationOccurrences& occ);

struct OverlapReport {
  bool whole_caterpillar = false;  // [2-(02-)^{*r}]
  std::vector<std::string> violations;
};

// Checks the formula patterns' occurrence sets for forbidden overlaps; any
// violation outside the whole-caterpillar case indicates an implementation bug.
OverlapReport check_overlaps(const Caterpillar& ct);

}  // namespace bci
