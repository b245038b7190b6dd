#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "delsub/ball_set.hpp"
#include "delsub/sequences.hpp"
#include "delsub/word.hpp"

namespace delsub {

BallSet deletion_ball(const Word& x);
BallSet substitution_ball(const Word& x);
BallSet ds_ball(const Word& x);

// D(x) listed by run index: entry k deletes a symbol of run k+1.
std::vector<Word> deletions_by_run(const Word& x);

// Delete position i (1-based), then flip position sub (1-based, in the
// shortened word) unless sub is empty.
Word apply_del_sub(const Word& x, int i, std::optional<int> sub);

enum class BallKind { Del, Sub, DS };

BallSet ball_intersection(const Word& x, const Word& y, BallKind kind);

enum class CaseTag {
    AdjacentTransposition,
    SingleFlip,
    RunShift,
    AlternatingBlock,
    TwoFlips,
    ShiftedPair,
    Generic,
};

std::string_view to_string(CaseTag tag);

// Shape parameters, where z̄ is the complement of z:
//   AdjacentTransposition  x = a α ᾱ b,      y = a ᾱ α b
//   SingleFlip             x = a α b,        y = a ᾱ b
//   RunShift               x = a α^ℓ ᾱ b,    y = a ᾱ α^ℓ b   (or swapped)
//   AlternatingBlock       x = a c b,        y = a c̄ b, c alternating, |c| >= 3
//   TwoFlips               x = a α c β b,    y = a ᾱ c β̄ b
//   ShiftedPair            x = a ᾱ α c β b,  y = a α c β β̄ b (or swapped)
//   Generic                x = a α c β b,    y = a ᾱ c2 β̄ b
// `swapped` means the roles of x and y in the pattern are exchanged.
struct PairClassification {
    int d = 0;
    int s = 0;
    int hamming = 0;
    CaseTag case_tag = CaseTag::Generic;
    Word a;
    Word b;
    int alpha = 0;
    int beta = 0;
    Word c;
    Word c2;
    int ell = 0;
    bool swapped = false;
    // false when (d,s) does not admit the shape required for its case
    bool shape_matches = true;
};

PairClassification classify_pair(const Word& x, const Word& y);

// Rebuilds (x, y) from the structural fields.
std::pair<Word, Word> reconstruct_pair(const PairClassification& c);

struct IntersectionDecomposition {
    std::size_t size_S = 0;
    std::size_t size_D = 0;
    std::size_t size_overlap = 0;
    std::size_t size_B_extra = 0;
    std::size_t total = 0;
};

struct DecompositionSets {
    BallSet S;       // union of S(z) over z in D(x,y)
    BallSet D;       // union of D(z) over z in S(x,y)
    BallSet B_extra; // B(x,y) minus (D and S)
    BallSet B;       // B(x,y)
};

DecompositionSets decompose_sets(const Word& x, const Word& y);
IntersectionDecomposition decompose_intersection(const Word& x, const Word& y);

struct Witness {
    int del_pos;                  // 1-based, in x
    std::optional<int> sub_pos;   // 1-based, in the shortened word; empty = no flip

    friend bool operator==(const Witness&, const Witness&) = default;
};

std::vector<Witness> witnesses(const Word& x, const Word& z);

enum class FlipIndex { PostDeletion, PreDeletion };

// Witness flips are stored post-deletion; the good/bad test compares them
// with the deletion interval in pre-deletion coordinates unless told otherwise.
struct WitnessConvention {
    FlipIndex index = FlipIndex::PreDeletion;
    // when false, a no-flip witness counts as outside every interval
    bool none_inside = true;

    friend bool operator==(const WitnessConvention&, const WitnessConvention&) = default;
};

std::string_view to_string(FlipIndex index);

bool is_bad(const Word& x, const Word& y, const Word& z, WitnessConvention convention = {});
// is_bad on precomputed witness lists of x and y for the same z
bool bad_from_witnesses(const std::vector<Witness>& wx, const std::vector<Witness>& wy,
                        WitnessConvention convention);

BallSet preimage_ball(const Word& z, int n);

BallSet constrained_deletion_matches(const Word& u, const Word& v);

}  // namespace delsub
