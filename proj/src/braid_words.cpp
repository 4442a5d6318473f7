#include "phomfly/braid_words.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <random>
#include <sstream>

namespace phomfly {

std::string Letter::to_string() const {
  if (is_pseudo()) return "p" + std::to_string(index);
  return std::to_string(sign * index);
}

PseudoWord::PseudoWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw std::invalid_argument("strand count must be at least 1");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index >= strands_)
      throw IndexError("generator index " + std::to_string(l.index) + " out of range for " +
                           std::to_string(strands_) + " strands",
                       l.to_string());
    if (!l.is_pseudo() && l.sign != 1 && l.sign != -1)
      throw std::invalid_argument("classical letter sign must be +1 or -1");
  }
}

int PseudoWord::exponent_sum() const {
  int e = 0;
  for (const auto& l : letters_)
    if (!l.is_pseudo()) e += l.sign;
  return e;
}

int PseudoWord::pseudo_degree() const {
  return static_cast<int>(std::count_if(letters_.begin(), letters_.end(),
                                        [](const Letter& l) { return l.is_pseudo(); }));
}

PseudoWord PseudoWord::concat(const PseudoWord& rhs) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return {std::max(strands_, rhs.strands_), std::move(out)};
}

PseudoWord PseudoWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    if (it->is_pseudo()) throw IllegalConjugator();
    out.push_back(Letter::sigma(it->index, -it->sign));
  }
  return {strands_, std::move(out)};
}

PseudoWord PseudoWord::replaced(std::size_t pos, const std::vector<Letter>& with) const {
  std::vector<Letter> out(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), with.begin(), with.end());
  out.insert(out.end(), letters_.begin() + static_cast<std::ptrdiff_t>(pos) + 1, letters_.end());
  return {strands_, std::move(out)};
}

std::string PseudoWord::to_string() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.to_string();
  }
  return out;
}

DegreeStats degree_stats(const PseudoWord& w) { return w.degree_stats(); }

namespace {

int parse_index(std::string_view digits, const std::string& token) {
  if (digits.empty()) throw ParseError("malformed token '" + token + "'", token);
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw ParseError("malformed token '" + token + "'", token);
  return value;
}

}  // namespace

PseudoWord parse_word(std::string_view text, std::optional<int> strands) {
  std::istringstream is{std::string(text)};
  std::vector<Letter> letters;
  std::string token;
  while (is >> token) {
    Letter letter;
    if (token[0] == 'p') {
      std::string_view digits = std::string_view(token).substr(1);
      if (!digits.empty() && (digits[0] == '+' || digits[0] == '-'))
        throw ParseError("malformed token '" + token + "'", token);
      int k = parse_index(digits, token);
      if (k == 0) throw ZeroIndexError(token);
      letter = Letter::pseudo(k);
    } else {
      std::string_view digits = token;
      int sign = 1;
      if (digits[0] == '-' || digits[0] == '+') {
        sign = digits[0] == '-' ? -1 : 1;
        digits.remove_prefix(1);
      }
      int k = parse_index(digits, token);
      if (k == 0) throw ZeroIndexError(token);
      letter = Letter::sigma(k, sign);
    }
    if (strands && letter.index >= *strands)
      throw IndexError("index in token '" + token + "' needs more than " + std::to_string(*strands) +
                           " strands",
                       token);
    letters.push_back(letter);
  }
  int n = 1;
  for (const auto& l : letters) n = std::max(n, l.index + 1);
  if (strands) {
    if (*strands < 1) throw std::invalid_argument("strand count must be at least 1");
    n = *strands;
  }
  return {n, std::move(letters)};
}

// ---------------------------------------------------------------------------

std::string_view rule_name(RelationRule r) {
  switch (r) {
    case RelationRule::braid_comm: return "braid-comm";
    case RelationRule::braid_yang_baxter: return "braid-yang-baxter";
    case RelationRule::pp_comm: return "pp-comm";
    case RelationRule::ps_far_comm: return "ps-far-comm";
    case RelationRule::ps_adjacent_comm: return "ps-adjacent-comm";
    case RelationRule::mixed_left: return "mixed-left";
    case RelationRule::mixed_right: return "mixed-right";
    case RelationRule::free_inverse: return "free-inverse";
  }
  return "unknown";
}

std::size_t pattern_length(RelationRule rule, Direction dir) {
  switch (rule) {
    case RelationRule::braid_yang_baxter:
    case RelationRule::mixed_left:
    case RelationRule::mixed_right: return 3;
    case RelationRule::free_inverse: return dir == Direction::forward ? 2 : 0;
    default: return 2;
  }
}

namespace {

bool far(int i, int j) { return std::abs(i - j) >= 2; }
bool sig(const Letter& l) { return !l.is_pseudo(); }
bool sig_pos(const Letter& l, int i) { return sig(l) && l.sign == 1 && l.index == i; }
bool pse(const Letter& l, int i) { return l.is_pseudo() && l.index == i; }

/// The replacement for the matched span, or nullopt when there is no match.
std::optional<std::vector<Letter>> rewrite(const PseudoWord& w, const RelationInstance& r) {
  const auto& L = w.letters();
  std::size_t len = pattern_length(r.rule, r.direction);
  if (r.position + len > L.size()) return std::nullopt;
  const Letter* x = L.data() + r.position;
  const bool fwd = r.direction == Direction::forward;
  switch (r.rule) {
    case RelationRule::braid_comm:
      if (sig(x[0]) && sig(x[1]) && far(x[0].index, x[1].index)) return std::vector{x[1], x[0]};
      return std::nullopt;
    case RelationRule::pp_comm:
      if (x[0].is_pseudo() && x[1].is_pseudo() && far(x[0].index, x[1].index))
        return std::vector{x[1], x[0]};
      return std::nullopt;
    case RelationRule::braid_yang_baxter: {
      if (!sig(x[0]) || !sig(x[1]) || !sig(x[2])) return std::nullopt;
      if (x[0].sign != x[1].sign || x[1].sign != x[2].sign || x[0].index != x[2].index)
        return std::nullopt;
      int s = x[0].sign;
      if (fwd && x[1].index == x[0].index + 1) {
        int i = x[0].index;
        return std::vector{Letter::sigma(i + 1, s), Letter::sigma(i, s), Letter::sigma(i + 1, s)};
      }
      if (!fwd && x[0].index == x[1].index + 1) {
        int i = x[1].index;
        return std::vector{Letter::sigma(i, s), Letter::sigma(i + 1, s), Letter::sigma(i, s)};
      }
      return std::nullopt;
    }
    case RelationRule::ps_far_comm: {
      const Letter& p = fwd ? x[0] : x[1];
      const Letter& s = fwd ? x[1] : x[0];
      if (p.is_pseudo() && sig(s) && far(p.index, s.index)) return std::vector{x[1], x[0]};
      return std::nullopt;
    }
    case RelationRule::ps_adjacent_comm: {
      const Letter& p = fwd ? x[0] : x[1];
      const Letter& s = fwd ? x[1] : x[0];
      if (p.is_pseudo() && sig(s) && p.index == s.index) return std::vector{x[1], x[0]};
      return std::nullopt;
    }
    case RelationRule::mixed_left:
      if (fwd) {
        int i = x[0].index;
        if (sig_pos(x[0], i) && sig_pos(x[1], i + 1) && pse(x[2], i))
          return std::vector{Letter::pseudo(i + 1), Letter::sigma(i), Letter::sigma(i + 1)};
      } else {
        int i = x[1].index;
        if (pse(x[0], i + 1) && sig_pos(x[1], i) && sig_pos(x[2], i + 1))
          return std::vector{Letter::sigma(i), Letter::sigma(i + 1), Letter::pseudo(i)};
      }
      return std::nullopt;
    case RelationRule::mixed_right:
      if (fwd) {
        int i = x[1].index;
        if (sig_pos(x[0], i + 1) && sig_pos(x[1], i) && pse(x[2], i + 1))
          return std::vector{Letter::pseudo(i), Letter::sigma(i + 1), Letter::sigma(i)};
      } else {
        int i = x[0].index;
        if (pse(x[0], i) && sig_pos(x[1], i + 1) && sig_pos(x[2], i))
          return std::vector{Letter::sigma(i + 1), Letter::sigma(i), Letter::pseudo(i + 1)};
      }
      return std::nullopt;
    case RelationRule::free_inverse:
      if (fwd) {
        if (sig(x[0]) && sig(x[1]) && x[0].index == x[1].index && x[0].sign == -x[1].sign)
          return std::vector<Letter>{};
        return std::nullopt;
      }
      if (r.insertion && !r.insertion->is_pseudo() && r.insertion->index >= 1 &&
          r.insertion->index < w.strands())
        return std::vector{*r.insertion, Letter::sigma(r.insertion->index, -r.insertion->sign)};
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

bool matches(const PseudoWord& w, const RelationInstance& r) { return rewrite(w, r).has_value(); }

PseudoWord apply_relation(const PseudoWord& w, const RelationInstance& r) {
  auto replacement = rewrite(w, r);
  if (!replacement)
    throw NoMatch(std::string(rule_name(r.rule)) + " does not match at position " +
                  std::to_string(r.position) + " of '" + w.to_string() + "'");
  const auto& L = w.letters();
  std::size_t len = pattern_length(r.rule, r.direction);
  std::vector<Letter> out(L.begin(), L.begin() + static_cast<std::ptrdiff_t>(r.position));
  out.insert(out.end(), replacement->begin(), replacement->end());
  out.insert(out.end(), L.begin() + static_cast<std::ptrdiff_t>(r.position + len), L.end());
  return {w.strands(), std::move(out)};
}

std::vector<RelationInstance> find_matches(const PseudoWord& w, RelationRule rule, Direction dir) {
  std::vector<RelationInstance> out;
  if (rule == RelationRule::free_inverse && dir == Direction::backward) return out;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    RelationInstance r{rule, pos, dir, std::nullopt};
    if (matches(w, r)) out.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string move_name(const MarkovMove& m) {
  struct Visitor {
    std::string operator()(const markov::Conjugate& c) const { return "conjugate(" + c.beta.to_string() + ")"; }
    std::string operator()(const markov::Commute& c) const { return "commute(" + std::to_string(c.split) + ")"; }
    std::string operator()(const markov::StabPositive&) const { return "stab_pos"; }
    std::string operator()(const markov::StabNegative&) const { return "stab_neg"; }
    std::string operator()(const markov::StabPseudo&) const { return "stab_pseudo"; }
    std::string operator()(const markov::Destabilize&) const { return "destab"; }
  };
  return std::visit(Visitor{}, m);
}

PseudoWord markov_move(const PseudoWord& w, const MarkovMove& move) {
  struct Visitor {
    const PseudoWord& w;

    PseudoWord operator()(const markov::Conjugate& c) const {
      if (!c.beta.is_classical()) throw IllegalConjugator();
      PseudoWord beta = c.beta.with_strands(w.strands());
      return beta.inverse().concat(w).concat(beta);
    }
    PseudoWord operator()(const markov::Commute& c) const {
      if (c.split > w.size()) throw std::out_of_range("commute split point beyond word length");
      std::vector<Letter> out(w.letters().begin() + static_cast<std::ptrdiff_t>(c.split), w.letters().end());
      out.insert(out.end(), w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(c.split));
      return {w.strands(), std::move(out)};
    }
    PseudoWord stabilize(Letter l) const {
      std::vector<Letter> out = w.letters();
      out.push_back(l);
      return {w.strands() + 1, std::move(out)};
    }
    PseudoWord operator()(const markov::StabPositive&) const { return stabilize(Letter::sigma(w.strands(), 1)); }
    PseudoWord operator()(const markov::StabNegative&) const { return stabilize(Letter::sigma(w.strands(), -1)); }
    PseudoWord operator()(const markov::StabPseudo&) const { return stabilize(Letter::pseudo(w.strands())); }
    PseudoWord operator()(const markov::Destabilize&) const {
      int top = w.strands() - 1;
      if (w.strands() < 2 || w.empty() || w.letters().back().index != top)
        throw IllegalDestab("word does not end with a letter on the last strand pair");
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i].index == top) throw IllegalDestab("last generator index occurs elsewhere in the word");
      std::vector<Letter> out(w.letters().begin(), w.letters().end() - 1);
      return {w.strands() - 1, std::move(out)};
    }
  };
  return std::visit(Visitor{w}, move);
}

PseudoWord free_reduce(const PseudoWord& w) {
  std::vector<Letter> stack;
  for (const auto& l : w.letters()) {
    if (!stack.empty() && !l.is_pseudo() && !stack.back().is_pseudo() && stack.back().index == l.index &&
        stack.back().sign == -l.sign) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return {w.strands(), std::move(stack)};
}

// ---------------------------------------------------------------------------

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

PseudoWord random_word(int strands, std::size_t length, int d_max, std::uint64_t seed) {
  if (strands < 1) throw std::invalid_argument("strand count must be at least 1");
  if (strands == 1) return {};
  std::mt19937_64 rng(seed);
  const int gens = strands - 1;
  int pseudo_left = std::max(d_max, 0);
  std::vector<Letter> letters;
  letters.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    int alphabet = 2 * gens + (pseudo_left > 0 ? gens : 0);
    int pick = std::uniform_int_distribution<int>(0, alphabet - 1)(rng);
    if (pick < gens) {
      letters.push_back(Letter::sigma(pick + 1, 1));
    } else if (pick < 2 * gens) {
      letters.push_back(Letter::sigma(pick - gens + 1, -1));
    } else {
      letters.push_back(Letter::pseudo(pick - 2 * gens + 1));
      --pseudo_left;
    }
  }
  return {strands, std::move(letters)};
}

}  // namespace phomfly
