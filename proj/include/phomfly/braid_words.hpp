// Pseudo braid words over the monoid generated by sigma_i^{+-1} and p_i.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "phomfly/errors.hpp"

namespace phomfly {

enum class LetterKind { classical, pseudo };

struct Letter {
  LetterKind kind = LetterKind::classical;
  int index = 1;
  int sign = 1;  // always +1 for pseudo letters

  static Letter sigma(int i, int s = 1) { return {LetterKind::classical, i, s}; }
  static Letter pseudo(int i) { return {LetterKind::pseudo, i, 1}; }

  bool is_pseudo() const { return kind == LetterKind::pseudo; }
  /// Token form: "3", "-2", "p1".
  std::string to_string() const;

  bool operator==(const Letter&) const = default;
};

struct DegreeStats {
  int e = 0;
  int d = 0;
  bool operator==(const DegreeStats&) const = default;
};

class PseudoWord {
 public:
  PseudoWord() = default;
  /// Throws std::invalid_argument on strands < 1, IndexError on an index
  /// outside 1..strands-1.
  PseudoWord(int strands, std::vector<Letter> letters);

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  /// Sum of classical signs.
  int exponent_sum() const;
  /// Number of pseudo letters.
  int pseudo_degree() const;
  DegreeStats degree_stats() const { return {exponent_sum(), pseudo_degree()}; }
  bool is_classical() const { return pseudo_degree() == 0; }

  PseudoWord with_strands(int strands) const { return {strands, letters_}; }
  PseudoWord concat(const PseudoWord& rhs) const;
  /// Reversed word with classical signs flipped. Throws IllegalConjugator if
  /// any letter is pseudo.
  PseudoWord inverse() const;
  /// Replaces the letter at pos (which must exist) by the given letters.
  PseudoWord replaced(std::size_t pos, const std::vector<Letter>& with) const;

  /// Space-separated tokens; reparses with parse_word.
  std::string to_string() const;

  bool operator==(const PseudoWord&) const = default;

 private:
  int strands_ = 1;
  std::vector<Letter> letters_;
};

/// Grammar: whitespace-separated tokens; a nonzero integer k is
/// sigma_|k|^sign(k), "p<K>" is p_K. Without strands, n = 1 + max index.
PseudoWord parse_word(std::string_view text, std::optional<int> strands = std::nullopt);

DegreeStats degree_stats(const PseudoWord& w);

// ---------------------------------------------------------------------------
// Defining relations.

enum class RelationRule {
  braid_comm,         // s_i^a s_j^b = s_j^b s_i^a, |i-j| >= 2
  braid_yang_baxter,  // s_i s_i+1 s_i = s_i+1 s_i s_i+1 (all signs equal)
  pp_comm,            // p_i p_j = p_j p_i, |i-j| >= 2
  ps_far_comm,        // p_i s_j^a = s_j^a p_i, |i-j| >= 2
  ps_adjacent_comm,   // p_i s_i^a = s_i^a p_i
  mixed_left,         // s_i s_i+1 p_i = p_i+1 s_i s_i+1
  mixed_right,        // s_i+1 s_i p_i+1 = p_i s_i+1 s_i
  free_inverse,       // s_i^a s_i^-a = empty
};

inline constexpr RelationRule kAllRules[] = {
    RelationRule::braid_comm,       RelationRule::braid_yang_baxter, RelationRule::pp_comm,
    RelationRule::ps_far_comm,      RelationRule::ps_adjacent_comm,  RelationRule::mixed_left,
    RelationRule::mixed_right,      RelationRule::free_inverse,
};

enum class Direction { forward, backward };

std::string_view rule_name(RelationRule r);

struct RelationInstance {
  RelationRule rule;
  std::size_t position = 0;
  Direction direction = Direction::forward;
  /// Only for backward free_inverse: the pair s_i^a s_i^-a to insert is
  /// described by its first letter.
  std::optional<Letter> insertion;
};

/// Number of letters the rule's matched side occupies.
std::size_t pattern_length(RelationRule rule, Direction dir);

bool matches(const PseudoWord& w, const RelationInstance& r);
/// Throws NoMatch when the pattern does not occur at the position.
PseudoWord apply_relation(const PseudoWord& w, const RelationInstance& r);
/// Every position where the rule applies in the given direction. Backward
/// free_inverse never appears here (it needs an explicit insertion).
std::vector<RelationInstance> find_matches(const PseudoWord& w, RelationRule rule, Direction dir);

// ---------------------------------------------------------------------------
// Markov moves.

namespace markov {
struct Conjugate {
  PseudoWord beta;
};
struct Commute {
  std::size_t split = 0;
};
struct StabPositive {};
struct StabNegative {};
struct StabPseudo {};
struct Destabilize {};
}  // namespace markov

using MarkovMove = std::variant<markov::Conjugate, markov::Commute, markov::StabPositive,
                                markov::StabNegative, markov::StabPseudo, markov::Destabilize>;

std::string move_name(const MarkovMove& m);

PseudoWord markov_move(const PseudoWord& w, const MarkovMove& move);

/// Repeatedly cancels adjacent s_i^a s_i^-a pairs.
PseudoWord free_reduce(const PseudoWord& w);

// ---------------------------------------------------------------------------

/// Deterministic for a fixed seed; at most d_max pseudo letters; otherwise
/// uniform over the sigma_i^{+-1}, p_i alphabet. Empty when strands == 1.
PseudoWord random_word(int strands, std::size_t length, int d_max, std::uint64_t seed);

/// Mixes an instance index into a base seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace phomfly
