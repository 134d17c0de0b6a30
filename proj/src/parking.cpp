#include "parkgram/parking.hpp"

#include <algorithm>
#include <numeric>

#include "parkgram/config.hpp"

namespace parkgram {

namespace {

void check_entries_positive(const PFSeq& c) {
  for (int v : c)
    if (v < 1) fail(ErrorKind::EntryOutOfRange, "parking entry " + std::to_string(v) + " < 1");
}

}  // namespace

ThresholdVector prefix_sums(const WeightVector& x) {
  ThresholdVector u;
  u.reserve(x.size());
  Rational acc = 0;
  for (const Rational& xi : x) {
    acc += xi;
    u.push_back(acc);
  }
  return u;
}

bool is_u_parking(const PFSeq& c, const ThresholdVector& u) {
  if (c.size() != u.size())
    fail(ErrorKind::LengthMismatch, "sequence length " + std::to_string(c.size()) +
                                        " vs threshold length " + std::to_string(u.size()));
  check_entries_positive(c);
  PFSeq sorted = c;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i)
    if (Rational(sorted[i]) > u[i]) return false;
  return true;
}

bool is_x_parking(const PFSeq& c, const WeightVector& x) {
  if (c.size() != x.size())
    fail(ErrorKind::LengthMismatch, "sequence length " + std::to_string(c.size()) +
                                        " vs weight length " + std::to_string(x.size()));
  return is_u_parking(c, prefix_sums(x));
}

std::vector<PFSeq> enumerate_u_parking(const ThresholdVector& u) {
  int n = static_cast<int>(u.size());
  if (n > limits().enum_len_cap)
    fail(ErrorKind::TooLarge, "enumeration length " + std::to_string(n) + " exceeds cap " +
                                  std::to_string(limits().enum_len_cap));
  std::vector<PFSeq> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }

  // Entries are integers, so c_(i) <= u_i is equivalent to c_(i) <= floor(u_i);
  // precomputing the floors keeps the scan over the value box integer-only.
  std::vector<long long> bound(u.size());
  long long max_value = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    bound[i] = static_cast<long long>(u[i].floor());
    max_value = std::max(max_value, bound[i]);
  }
  if (max_value < 1) return out;

  PFSeq c(n, 1);
  std::vector<int> sorted(n);
  while (true) {
    sorted.assign(c.begin(), c.end());
    std::sort(sorted.begin(), sorted.end());
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      if (sorted[i] > bound[i]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(c);

    int pos = n - 1;
    while (pos >= 0 && c[pos] == max_value) c[pos--] = 1;
    if (pos < 0) break;
    ++c[pos];
  }
  return out;
}

std::vector<int> specification(const PFSeq& c, int m) {
  if (m < 1) fail(ErrorKind::BadParameter, "specification needs m >= 1");
  check_entries_positive(c);
  std::vector<int> j(m, 0);
  for (int v : c) {
    if (v > m)
      fail(ErrorKind::EntryOutOfRange, "entry " + std::to_string(v) + " exceeds m = " + std::to_string(m));
    ++j[v - 1];
  }
  return j;
}

int ones_count(const PFSeq& c) {
  return static_cast<int>(std::count(c.begin(), c.end(), 1));
}

ThresholdVector ab_threshold_vector(int a, int b, int length) {
  if (a < 1 || b < 1 || length < 0) fail(ErrorKind::BadParameter, "ab_threshold_vector needs a,b >= 1");
  ThresholdVector u;
  u.reserve(length);
  for (int i = 0; i < length; ++i)
    u.push_back(Rational(1 + static_cast<long long>(i) * a / b));
  return u;
}

ThresholdVector block_threshold_vector(int b, int length) {
  if (b < 1 || length < 0) fail(ErrorKind::BadParameter, "block_threshold_vector needs b >= 1");
  ThresholdVector u;
  u.reserve(length);
  for (int i = 0; i < length; ++i) u.push_back(Rational(1 + i / b));
  return u;
}

PFSeq ab_to_u_pf(const ABSeq& c) {
  PFSeq out;
  out.reserve(c.size());
  for (int v : c) {
    if (v < 0) fail(ErrorKind::EntryOutOfRange, "(a,b)-entry " + std::to_string(v) + " < 0");
    out.push_back(v + 1);
  }
  return out;
}

ABSeq u_to_ab_pf(const PFSeq& c) {
  check_entries_positive(c);
  ABSeq out;
  out.reserve(c.size());
  for (int v : c) out.push_back(v - 1);
  return out;
}

bool is_ab_parking(const ABSeq& c, int a, int b) {
  if (a < 1 || b < 1) fail(ErrorKind::BadParameter, "is_ab_parking needs a,b >= 1");
  if (c.size() != static_cast<size_t>(b))
    fail(ErrorKind::LengthMismatch, "(a,b)-sequence must have length b = " + std::to_string(b));
  return is_u_parking(ab_to_u_pf(c), ab_threshold_vector(a, b, b));
}

std::string LatticePath::str() const {
  std::string out;
  for (size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].east) {
      out += "E[" + std::to_string(steps[i].label) + "]";
    } else {
      out += "N";
      if (i + 1 < steps.size()) out += " ";
    }
  }
  return out;
}

LatticePath LatticePath::parse(std::string_view text) {
  LatticePath path;
  size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == ' ' || ch == '\t') {
      ++i;
      continue;
    }
    if (ch == 'N') {
      path.steps.push_back({false, -1});
      ++i;
      continue;
    }
    if (ch == 'E') {
      ++i;
      if (i >= text.size() || text[i] != '[') fail(ErrorKind::ParseError, "expected '[' after E");
      size_t close = text.find(']', i);
      if (close == std::string_view::npos) fail(ErrorKind::ParseError, "unterminated E-step label");
      int label = 0;
      for (size_t p = i + 1; p < close; ++p) {
        if (text[p] < '0' || text[p] > '9') fail(ErrorKind::ParseError, "bad E-step label");
        label = label * 10 + (text[p] - '0');
      }
      if (close == i + 1) fail(ErrorKind::ParseError, "empty E-step label");
      path.steps.push_back({true, label});
      i = close + 1;
      continue;
    }
    fail(ErrorKind::ParseError, std::string("unexpected character '") + ch + "' in path");
  }
  return path;
}

ABSeq LatticePath::heights() const {
  int east_count = 0;
  for (const Step& s : steps) east_count += s.east ? 1 : 0;
  ABSeq heights(east_count, -1);
  int h = 0;
  for (const Step& s : steps) {
    if (!s.east) {
      ++h;
      continue;
    }
    if (s.label < 0 || s.label >= east_count)
      fail(ErrorKind::ParseError, "E-step label " + std::to_string(s.label) + " out of range");
    if (heights[s.label] != -1)
      fail(ErrorKind::ParseError, "duplicate E-step label " + std::to_string(s.label));
    heights[s.label] = h;
  }
  return heights;
}

LatticePath dyck_path_of(const ABSeq& c, int a, int b) {
  if (!is_ab_parking(c, a, b))
    fail(ErrorKind::NotAParkingFunction, "sequence is not an (a,b)-parking function");

  // Labels at equal height go left to right in increasing order; that is the
  // only placement with increasing labels inside each E-run.
  std::vector<std::vector<int>> at_height(a + 1);
  for (size_t label = 0; label < c.size(); ++label) at_height[c[label]].push_back(static_cast<int>(label));

  LatticePath path;
  path.steps.reserve(static_cast<size_t>(a) + c.size());
  for (int h = 0; h <= a; ++h) {
    for (int label : at_height[h]) path.steps.push_back({true, label});
    if (h < a) path.steps.push_back({false, -1});
  }
  return path;
}

BlockDecomposition decompose_blocks(const PFSeq& c, int a, int b, int k) {
  if (a < 1 || b < 1 || k < 1) fail(ErrorKind::BadParameter, "decompose_blocks needs a,b,k >= 1");
  if (std::gcd(a, b) != 1)
    fail(ErrorKind::GcdViolation, "decompose_blocks needs gcd(a,b) = 1");
  if (!is_u_parking(c, ab_threshold_vector(a, b, k * b)))
    fail(ErrorKind::NotAParkingFunction, "sequence is not a (ka,kb)-parking function");

  const Rational step(a - 1, b);
  const int n = k * b;

  std::vector<bool> taken(c.size(), false);
  BlockDecomposition out;
  int assigned = 0;

  for (int t = 1; t <= k; ++t) {
    int prefix = assigned;  // j_1 + ... + j_{t-1}
    int j_t;
    if (t == k) {
      // j_1 + ... + j_k = kb forces the last block to be everything left.
      j_t = n - prefix;
    } else {
      // j_t = largest j such that for every 1 <= i <= j at least i of the
      // remaining entries are <= t + (prefix + i - 1)*(a-1)/b.
      j_t = 0;
      for (int i = 1; i <= n - prefix; ++i) {
        Rational threshold = Rational(t) + Rational(prefix + i - 1) * step;
        int count = 0;
        for (size_t r = 0; r < c.size(); ++r)
          if (!taken[r] && Rational(c[r]) <= threshold) ++count;
        if (count < i) break;
        j_t = i;
      }
    }

    Rational upper = Rational(t) + Rational(prefix + j_t - 1) * step;
    PFSeq block;
    std::vector<int> codes;
    for (size_t r = 0; r < c.size(); ++r) {
      bool take = !taken[r] && j_t > 0 && (t == k || Rational(c[r]) <= upper);
      if (take) {
        taken[r] = true;
        block.push_back(c[r]);
        codes.push_back(static_cast<int>(r) + 1);
      }
    }
    if (static_cast<int>(block.size()) != j_t)
      fail(ErrorKind::NotAParkingFunction, "block " + std::to_string(t) + " does not close");
    assigned += j_t;
    out.blocks.push_back(std::move(block));
    out.lengths.push_back(j_t);
    out.positions.push_back(std::move(codes));
  }

  // The extracted lengths form a spec(k,b) composition for any valid input.
  int running = 0;
  for (int t = 0; t < k; ++t) {
    running += out.lengths[t];
    if (running < (t + 1) * b)
      fail(ErrorKind::NotAParkingFunction, "block lengths violate the spec(k,b) prefix bounds");
  }
  return out;
}

PFSeq normalize_block(const PFSeq& block, int t, const std::vector<int>& lengths, int a, int b) {
  if (t < 1 || static_cast<size_t>(t) > lengths.size())
    fail(ErrorKind::BadParameter, "block index out of range");
  long long prefix = 0;
  for (int i = 0; i < t - 1; ++i) prefix += lengths[i];

  Rational shift = Rational(t - 1) + Rational(prefix) * Rational(a - 1, b);
  PFSeq out;
  out.reserve(block.size());
  for (int v : block) {
    Rational shifted = Rational(v) - shift;
    if (!shifted.is_integer() || shifted.sign() <= 0)
      fail(ErrorKind::NonIntegralShift,
           "entry " + std::to_string(v) + " does not shift to a positive integer");
    out.push_back(static_cast<int>(shifted.num().convert_to<long long>()));
  }
  return out;
}

}  // namespace parkgram
