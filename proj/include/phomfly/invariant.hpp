// The pseudo link invariant P and its companions: the resolution map
// p_i -> X g_i + Y g_i^-1, the induced trace, the normalization constants,
// the classical invariant H, the state sum over classical resolutions and the
// skein checks.
#pragma once

#include <cstdint>
#include <vector>

#include "phomfly/braid_words.hpp"
#include "phomfly/coeff_ring.hpp"
#include "phomfly/hecke.hpp"
#include "phomfly/report.hpp"

namespace phomfly {

struct Constants {
  ExtScalar B;
  ExtScalar B_inverse;
  ExtScalar A;
  ExtScalar C;
  ExtScalar z;
  ExtScalar z_minus;
  /// X z + Y z_-, the trace factor of a pseudo-stabilization.
  ExtScalar pseudo_factor;
  ExtScalar lambda_plus;
  ExtScalar lambda_minus;
};

/// Closed forms: z_- = (z + 1 - q)/q, A = B q/(z + 1 - q),
/// C = B z/(X z + Y z_-), lambda_+ = X C B^-1, lambda_- = Y C B.
const Constants& constants();

/// A^(n-1) B^e C^d.
ExtScalar normalization(int strands, int e, int d);

/// Image of the word in H_n: classical letters act by g_i^{+-1}, p_i by
/// X g_i + Y g_i^-1.
HeckeElement resolve(const PseudoWord& w);

/// resolve(left side) == resolve(right side) for every defining relation and
/// index choice on n strands.
Report rho_relation_check(int strands);

/// tr_n(resolve(w)).
ExtScalar induced_trace(const PseudoWord& w);

/// A^(n-1) B^e(w) C^d(w) T_n(w).
ExtScalar invariant_P(const PseudoWord& w);

/// A^(n-1) B^e(w) tr_n(w). Throws PseudoLetterPresent.
ExtScalar classical_H(const PseudoWord& w);

struct StateResolution {
  std::vector<int> choices;  // +1 or -1 per pseudo letter, in word order
  int r_plus = 0;
  int r_minus = 0;

  /// State number `index` of a word with d pseudo letters: bit k set means
  /// the k-th pseudo letter resolves to g^-1.
  static StateResolution from_index(std::uint64_t index, int d);
};

/// The classical word obtained by substituting s_i^{choice} for each p_i.
PseudoWord apply_state(const PseudoWord& w, const StateResolution& s);

inline constexpr std::uint64_t kDefaultStateCap = std::uint64_t{1} << 16;

/// C^d sum_s (X B^-1)^r+ (Y B)^r- H(w_s). Throws StateBudgetExceeded when
/// 2^d exceeds the cap.
ExtScalar state_sum_P(const PseudoWord& w, std::uint64_t state_cap = kDefaultStateCap);

enum class ResolutionOrder { leftmost, rightmost };

/// Resolves pseudo letters one at a time with the pseudo skein relation until
/// only classical words remain, then evaluates H.
ExtScalar skein_evaluate(const PseudoWord& w, ResolutionOrder order = ResolutionOrder::leftmost);

struct PseudoSkeinResult {
  ExtScalar p_pseudo;
  ExtScalar p_plus;
  ExtScalar p_minus;
  bool holds = false;
};

/// P(L_p) == lambda_+ P(L_+) + lambda_- P(L_-) at the marked letter. Throws
/// MarkNotPseudo.
PseudoSkeinResult pseudo_skein_check(const PseudoWord& w, std::size_t mark);

struct ClassicalSkeinResult {
  ExtScalar p_plus;
  ExtScalar p_minus;
  ExtScalar p_zero;
  bool holds = false;
};

/// Inserts s_i, s_i^-1 or nothing at position `mark` and checks
/// B^-1 P(L_+) - q B P(L_-) == (q - 1) P(L_0).
ClassicalSkeinResult classical_skein_check(const PseudoWord& context, std::size_t mark, int generator);

struct FamilyResult {
  ExtScalar invariant;
  ExtScalar closed_form;
  bool agrees = false;
};

/// The word s_1^k p_1 on two strands.
PseudoWord family_word(int k);

/// P(s_1^k p_1) against A B^k C (X tr_2(g_1^(k+1)) + Y tr_2(g_1^(k-1))).
FamilyResult family_alpha_k(int k);

}  // namespace phomfly
