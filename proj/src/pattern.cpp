#include "bci/pattern.hpp"

#include <algorithm>

namespace bci {

bool SymbolPredicate::matches(int lambda) const {
  for (const Range& r : ranges) {
    if (lambda >= r.lo && lambda <= r.hi) return true;
  }
  return false;
}

SymbolPredicate SymbolPredicate::exactly(int t) { return {{{t, t}}}; }
SymbolPredicate SymbolPredicate::at_least(int t) { return {{{t, kUnbounded}}}; }
SymbolPredicate SymbolPredicate::at_most(int t) { return {{{0, t}}}; }
SymbolPredicate SymbolPredicate::between(int lo, int hi) { return {{{lo, hi}}}; }

SymbolPredicate SymbolPredicate::any_of(const std::vector<SymbolPredicate>& parts) {
  SymbolPredicate p;
  for (const auto& part : parts) {
    p.ranges.insert(p.ranges.end(), part.ranges.begin(), part.ranges.end());
  }
  return p;
}

Pattern Pattern::reversed() const {
  Pattern r;
  r.left_anchor = right_anchor;
  r.right_anchor = left_anchor;
  r.prefix.assign(suffix.rbegin(), suffix.rend());
  r.suffix.assign(prefix.rbegin(), prefix.rend());
  if (repeat) {
    r.repeat = Repeat{repeat->second, repeat->first, repeat->min_repetitions};
  }
  return r;
}

std::vector<Occurrence> find_occurrences(const Caterpillar& ct, const Pattern& p) {
  const int k = ct.length();
  if (p.prefix.empty() && p.suffix.empty() && !p.repeat) {
    throw ValidationError("empty pattern");
  }
  auto sym_ok = [&](const SymbolPredicate& s, int pos) {
    return pos >= 0 && pos <= k && s.matches(ct.lambda(pos));
  };
  const int pre = static_cast<int>(p.prefix.size());
  const int suf = static_cast<int>(p.suffix.size());

  std::vector<Occurrence> found;
  for (int start = 0; start <= k; ++start) {
    if (p.left_anchor && start > 0) break;
    bool ok = true;
    for (int i = 0; i < pre && ok; ++i) ok = sym_ok(p.prefix[static_cast<std::size_t>(i)], start + i);
    if (!ok) continue;
    int pos = start + pre;

    if (!p.repeat) {
      for (int j = 0; j < suf && ok; ++j) ok = sym_ok(p.suffix[static_cast<std::size_t>(j)], pos + j);
      if (!ok) continue;
      int end = pos + suf - 1;
      if (p.right_anchor && end != k) continue;
      found.push_back({start, end, 0, start == 0, end == k});
      continue;
    }

    // Repeat group: keep the largest repetition count that still completes.
    int best_r = -1;
    for (int r = 0;; ++r) {
      if (r > 0) {
        int a = pos + 2 * (r - 1);
        if (!sym_ok(p.repeat->first, a) || !sym_ok(p.repeat->second, a + 1)) break;
      }
      if (r >= p.repeat->min_repetitions) {
        int q = pos + 2 * r;
        bool fits = true;
        for (int j = 0; j < suf && fits; ++j) fits = sym_ok(p.suffix[static_cast<std::size_t>(j)], q + j);
        if (fits) {
          int end = q + suf - 1;
          if (end <= k && end >= start && (!p.right_anchor || end == k)) best_r = r;
        }
      }
    }
    if (best_r >= 0) {
      int end = pos + 2 * best_r + suf - 1;
      found.push_back({start, end, best_r, start == 0, end == k});
    }
  }

  // Drop matches properly contained in a longer match of the same pattern.
  std::vector<Occurrence> out;
  for (const Occurrence& a : found) {
    bool contained = false;
    for (const Occurrence& b : found) {
      if (b.start == a.start && b.end == a.end) continue;
      if (b.start <= a.start && a.end <= b.end) {
        contained = true;
        break;
      }
    }
    if (!contained) out.push_back(a);
  }
  return out;
}

int count_occurrences(const Caterpillar& ct, const Pattern& p) {
  return static_cast<int>(find_occurrences(ct, p).size());
}

namespace {

class PatternParser {
 public:
  explicit PatternParser(std::string_view text) : text_(text) {}

  Pattern parse() {
    Pattern p;
    if (peek() == '[') {
      p.left_anchor = true;
      ++pos_;
    }
    bool after_group = false;
    while (pos_ < text_.size()) {
      char c = peek();
      if (c == ']') {
        ++pos_;
        if (pos_ != text_.size()) throw ValidationError("']' must end the pattern");
        p.right_anchor = true;
        break;
      }
      if (c == '(') {
        if (p.repeat) throw ValidationError("at most one repetition group");
        p.repeat = parse_group();
        after_group = true;
        continue;
      }
      SymbolPredicate s = parse_symbol();
      (after_group ? p.suffix : p.prefix).push_back(s);
    }
    if (p.prefix.empty() && p.suffix.empty() && !p.repeat) {
      throw ValidationError("empty pattern");
    }
    return p;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  SymbolPredicate parse_symbol() {
    char c = peek();
    if (c == '{') {
      ++pos_;
      std::vector<SymbolPredicate> parts;
      parts.push_back(parse_symbol());
      while (peek() == ',') {
        ++pos_;
        parts.push_back(parse_symbol());
      }
      if (peek() != '}') throw ValidationError("expected '}'");
      ++pos_;
      return SymbolPredicate::any_of(parts);
    }
    if (c < '0' || c > '9') throw ValidationError(std::string("unexpected character '") + c + "' in pattern");
    int t = c - '0';
    ++pos_;
    if (peek() == '+') {
      ++pos_;
      return SymbolPredicate::at_least(t);
    }
    if (peek() == '-') {
      ++pos_;
      return SymbolPredicate::at_most(t);
    }
    return SymbolPredicate::exactly(t);
  }

  Pattern::Repeat parse_group() {
    ++pos_;  // '('
    SymbolPredicate a = parse_symbol();
    SymbolPredicate b = parse_symbol();
    if (peek() != ')') throw ValidationError("repetition group must hold exactly two symbols");
    ++pos_;
    if (peek() == '^') ++pos_;
    bool brace = false;
    if (peek() == '{') {
      brace = true;
      ++pos_;
    }
    int min_reps;
    if (peek() == '+') {
      min_reps = 1;
    } else if (peek() == '*') {
      min_reps = 0;
    } else {
      throw ValidationError("repetition group needs '*' or '+'");
    }
    ++pos_;
    if (peek() == 'r') ++pos_;
    if (brace) {
      if (peek() != '}') throw ValidationError("expected '}'");
      ++pos_;
    }
    return Pattern::Repeat{a, b, min_reps};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string symbol_to_string(const SymbolPredicate& s) {
  auto one = [](const SymbolPredicate::Range& r) -> std::string {
    if (r.lo == r.hi) return std::to_string(r.lo);
    if (r.hi == SymbolPredicate::kUnbounded) return std::to_string(r.lo) + "+";
    if (r.lo == 0) return std::to_string(r.hi) + "-";
    return std::to_string(r.lo) + ".." + std::to_string(r.hi);
  };
  if (s.ranges.size() == 1) return one(s.ranges[0]);
  std::string out = "{";
  for (std::size_t i = 0; i < s.ranges.size(); ++i) {
    if (i) out += ",";
    out += one(s.ranges[i]);
  }
  return out + "}";
}

}  // namespace

Pattern parse_pattern(std::string_view text) { return PatternParser(text).parse(); }

std::string pattern_to_string(const Pattern& p) {
  std::string out;
  if (p.left_anchor) out += "[";
  for (const auto& s : p.prefix) out += symbol_to_string(s);
  if (p.repeat) {
    out += "(" + symbol_to_string(p.repeat->first) + symbol_to_string(p.repeat->second) + ")";
    out += p.repeat->min_repetitions > 0 ? "+r" : "*r";
  }
  for (const auto& s : p.suffix) out += symbol_to_string(s);
  if (p.right_anchor) out += "]";
  return out;
}

static SymbolPredicate small_stem() { return SymbolPredicate::between(1, 2); }

Pattern stem_run_pattern() {
  Pattern p;
  p.prefix = {SymbolPredicate::at_least(1), small_stem()};
  p.repeat = Pattern::Repeat{SymbolPredicate::exactly(0), small_stem(), 1};
  p.suffix = {SymbolPredicate::at_least(1)};
  return p;
}

Pattern internal_alternation_pattern() {
  Pattern p;
  p.prefix = {SymbolPredicate::exactly(0), small_stem()};
  p.repeat = Pattern::Repeat{SymbolPredicate::exactly(0), small_stem(), 0};
  p.suffix = {SymbolPredicate::exactly(0)};
  return p;
}

Pattern left_alternation_pattern() {
  Pattern p;
  p.left_anchor = true;
  p.prefix = {small_stem()};
  p.repeat = Pattern::Repeat{SymbolPredicate::exactly(0), small_stem(), 0};
  p.suffix = {SymbolPredicate::exactly(0)};
  return p;
}

Pattern right_alternation_pattern() {
  Pattern p;
  p.prefix = {SymbolPredicate::exactly(0), small_stem()};
  p.repeat = Pattern::Repeat{SymbolPredicate::exactly(0), small_stem(), 0};
  p.right_anchor = true;
  return p;
}

int lambda_one_stems(const Caterpillar& ct, const Occurrence& m, CountWindow w) {
  int lo = m.start, hi = m.end;
  if (w == CountWindow::interior) {
    ++lo;
    --hi;
  }
  int s = 0;
  for (int i = lo; i <= hi; ++i) {
    if (ct.lambda(i) == 1) ++s;
  }
  return s;
}

int alpha1(const Caterpillar& ct, const Occurrence& m, CountWindow w) {
  return std::max(0, lambda_one_stems(ct, m, w) - 1);
}

// The occurrence must alternate trunks with stems of at most two leaves.
static void check_alternation(const Caterpillar& ct, const Occurrence& m) {
  int stem_parity = ct.lambda(m.start) == 0 ? 1 : 0;
  for (int i = m.start; i <= m.end; ++i) {
    int lam = ct.lambda(i);
    if ((i - m.start) % 2 == stem_parity) {
      if (lam < 1 || lam > 2) throw ValidationError("occurrence is not a 0-alternating pattern");
    } else {
      if (lam != 0) throw ValidationError("occurrence is not a 0-alternating pattern");
    }
  }
}

int alpha2(const Caterpillar& ct, const Occurrence& m, Alpha2Variant v) {
  check_alternation(ct, m);
  int ends = (m.contains_left_end ? 1 : 0) + (m.contains_right_end ? 1 : 0);
  int s = lambda_one_stems(ct, m, CountWindow::whole);
  if (v == Alpha2Variant::as_written) return std::max(0, s - 1) + ends;
  return ends > 0 ? s : std::max(0, s - 1);
}

std::vector<int> single_stem_centers(const Caterpillar& ct) {
  const int k = ct.length();
  std::vector<int> out;
  for (int i = 0; i <= k; ++i) {
    if (ct.lambda(i) != 1) continue;
    bool left_ok = (i == 0) || ct.lambda(i - 1) >= 1;
    bool right_ok = (i == k) || ct.lambda(i + 1) >= 1;
    if (left_ok && right_ok) out.push_back(i);
  }
  return out;
}

AlternationOccurrences alternation_occurrences(const Caterpillar& ct) {
  AlternationOccurrences occ;
  occ.internal = find_occurrences(ct, internal_alternation_pattern());
  occ.left = find_occurrences(ct, left_alternation_pattern());
  occ.right = find_occurrences(ct, right_alternation_pattern());
  auto contained = [](const Occurrence& a, const Occurrence& b) {
    return b.start <= a.start && a.end <= b.end;
  };
  std::erase_if(occ.internal, [&](const Occurrence& m) {
    for (const auto& o : occ.left) {
      if (contained(m, o)) return true;
    }
    for (const auto& o : occ.right) {
      if (contained(m, o)) return true;
    }
    return false;
  });
  occ.whole = !occ.left.empty() && !occ.right.empty() &&
              occ.left.front().end >= occ.right.front().start;
  return occ;
}

void choose_whole_side(const Caterpillar& ct, AlternationOccurrences& occ) {
  if (!occ.whole) return;
  int gain_left = alpha2(ct, occ.left.front(), Alpha2Variant::effective);
  int gain_right = alpha2(ct, occ.right.front(), Alpha2Variant::effective);
  if (gain_right > gain_left) {
    occ.left.clear();
  } else {
    occ.right.clear();
  }
}

OverlapReport check_overlaps(const Caterpillar& ct) {
  OverlapReport report;

  struct Tagged {
    std::string tag;
    Occurrence occ;
  };
  std::vector<Tagged> singles, stem_runs, internal, left, right;
  for (int i : single_stem_centers(ct)) singles.push_back({"singles", {i, i, 0, i == 0, i == ct.length()}});
  for (const auto& o : find_occurrences(ct, stem_run_pattern())) stem_runs.push_back({"stem_run", o});
  AlternationOccurrences alt = alternation_occurrences(ct);
  for (const auto& o : alt.internal) internal.push_back({"internal", o});
  for (const auto& o : alt.left) left.push_back({"left", o});
  for (const auto& o : alt.right) right.push_back({"right", o});
  report.whole_caterpillar = alt.whole;

  auto overlap = [](const Occurrence& a, const Occurrence& b) {
    return a.start <= b.end && b.start <= a.end;
  };
  auto flag = [&](const std::vector<Tagged>& as, const std::vector<Tagged>& bs) {
    for (const auto& a : as) {
      for (const auto& b : bs) {
        if (&a == &b) continue;
        if (overlap(a.occ, b.occ)) {
          report.violations.push_back(a.tag + "[" + std::to_string(a.occ.start) + "," +
                                      std::to_string(a.occ.end) + "] overlaps " + b.tag + "[" +
                                      std::to_string(b.occ.start) + "," + std::to_string(b.occ.end) + "]");
        }
      }
    }
  };

  // Observation items 1-3.
  flag(internal, singles);
  flag(internal, stem_runs);
  flag(internal, internal);
  flag(internal, left);
  flag(internal, right);
  flag(left, singles);
  flag(left, stem_runs);
  flag(right, singles);
  flag(right, stem_runs);

  return report;
}

}  // namespace bci
