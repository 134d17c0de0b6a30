#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "parkgram/rational.hpp"

namespace parkgram {

/// Parking sequences in the 1-indexed u-representation: positive entries,
/// order significant, repeats allowed and distinct by position.
using PFSeq = std::vector<int>;

/// 0-indexed (a,b)-form: entry i is the height of the E-step labeled i.
using ABSeq = std::vector<int>;

/// Nondecreasing per-position thresholds u_1 <= ... <= u_n.
using ThresholdVector = std::vector<Rational>;

/// Weight vector x; thresholds are its prefix sums.
using WeightVector = std::vector<Rational>;

ThresholdVector prefix_sums(const WeightVector& x);

/// True iff the nondecreasing rearrangement of c satisfies c_(i) <= u_i,
/// compared exactly (integer against rational).
bool is_u_parking(const PFSeq& c, const ThresholdVector& u);

bool is_x_parking(const PFSeq& c, const WeightVector& x);

/// All u-parking sequences over {1..floor(max u)}^n in lexicographic order.
/// Length is bounded by limits().enum_len_cap.
std::vector<PFSeq> enumerate_u_parking(const ThresholdVector& u);

/// Value multiplicities (j_1..j_m) with j_i = #{entries equal to i}.
std::vector<int> specification(const PFSeq& c, int m);

/// Number of entries equal to 1 (the q-statistic).
int ones_count(const PFSeq& c);

/// u_{i+1} = 1 + floor(i*a/b) for i = 0..length-1: the threshold vector of
/// (a,b)-Dyck parking functions after the +1 index shift.
ThresholdVector ab_threshold_vector(int a, int b, int length);

/// u_i = 1 + floor((i-1)/b): d blocks of b equal thresholds 1,..,1,2,..,2,...
ThresholdVector block_threshold_vector(int b, int length);

PFSeq ab_to_u_pf(const ABSeq& c);
ABSeq u_to_ab_pf(const PFSeq& c);

/// Length must equal b; multi-cycle paths are handled by passing (ka, kb).
bool is_ab_parking(const ABSeq& c, int a, int b);

/// N/E lattice path from (0,0) to (b,a) with labeled E-steps; labels increase
/// within each run of consecutive E-steps.
struct LatticePath {
  struct Step {
    bool east = false;
    int label = -1;  // only meaningful for east steps
  };
  std::vector<Step> steps;

  /// "E[1]E[3]E[6]N E[4]N ..." - east steps with bracketed labels, a space
  /// after each north step that is followed by more steps.
  std::string str() const;
  static LatticePath parse(std::string_view text);

  /// Heights of the E-steps by label (the inverse of dyck_path_of).
  ABSeq heights() const;
};

LatticePath dyck_path_of(const ABSeq& c, int a, int b);

/// Greedy block decomposition of a (ka,kb)-parking function into k blocks,
/// each a basic x-parking function after normalization. Thresholds are the
/// rational periodic weights; comparisons are exact.
struct BlockDecomposition {
  std::vector<PFSeq> blocks;               // f_1..f_k, original entry order kept
  std::vector<int> lengths;                // J = (j_1..j_k), a spec(k,b) composition
  std::vector<std::vector<int>> positions; // 1-based original codes per block
};

BlockDecomposition decompose_blocks(const PFSeq& c, int a, int b, int k);

/// Shifts block t down by (t-1) + (j_1+..+j_{t-1})*(a-1)/b; the result is an
/// x-parking function for x* = (1, (a-1)/b, ..., (a-1)/b).
PFSeq normalize_block(const PFSeq& block, int t, const std::vector<int>& lengths, int a, int b);

}  // namespace parkgram
