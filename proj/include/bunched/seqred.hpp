// Occurrence sequences over the five-letter alphabet {l, r, L, P, n} (ASCII
// spellings: L for the left-of-semicolon marker, P for the right one) and
// their reduction calculus:
//   lL -> P    rL -> (empty)    Lr -> (empty)    Pr -> l    nn -> (empty)
// A sequence is reduced when no rule applies; reduction reaches a unique
// normal form regardless of strategy, which red() computes deterministically.
#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bunched/syntax.hpp"

namespace bunched {

using Seq = std::string;   // any word over the alphabet
using RSeq = std::string;  // reduced word (no redex substring); maintained by construction

inline constexpr char kSeqLetters[5] = {'l', 'r', 'L', 'P', 'n'};

inline bool is_seq_letter(char c) {
  return c == 'l' || c == 'r' || c == 'L' || c == 'P' || c == 'n';
}

struct RedexRule {
  const char* redex;        // two-letter left-hand side
  const char* replacement;  // contractum: one letter or empty
};

inline constexpr RedexRule kRedexRules[5] = {
    {"lL", "P"}, {"rL", ""}, {"Lr", ""}, {"Pr", "l"}, {"nn", ""}};

// Returns the contractum if (a, b) is a redex pair, nothing otherwise.
inline std::optional<std::string_view> redex_contractum(char a, char b) {
  for (const RedexRule& rule : kRedexRules)
    if (rule.redex[0] == a && rule.redex[1] == b) return std::string_view(rule.replacement);
  return std::nullopt;
}

inline bool is_reduced(const Seq& s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (redex_contractum(s[i], s[i + 1])) return false;
  return true;
}

// Every sequence reachable from s by applying exactly one rule at one position.
inline std::set<Seq> reduce_once(const Seq& s) {
  std::set<Seq> out;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (auto contractum = redex_contractum(s[i], s[i + 1])) {
      Seq t = s.substr(0, i);
      t += *contractum;
      t += s.substr(i + 2);
      out.insert(std::move(t));
    }
  }
  return out;
}

// Deterministic normal form: contract the leftmost redex until none remains.
inline RSeq red(const Seq& s) {
  Seq cur = s;
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (auto contractum = redex_contractum(cur[i], cur[i + 1])) {
        Seq t = cur.substr(0, i);
        t += *contractum;
        t += cur.substr(i + 2);
        cur = std::move(t);
        again = true;
        break;
      }
    }
  }
  return cur;
}

// Appends one letter to a reduced sequence, restoring reducedness at the new
// boundary. One rule application suffices: no contractum ever creates a fresh
// redex with the letter below it (no redex has l or P as its second letter).
inline void push_letter(RSeq& s, char c) {
  if (!s.empty()) {
    if (auto contractum = redex_contractum(s.back(), c)) {
      s.pop_back();
      s += *contractum;
      return;
    }
  }
  s += c;
}

// red of a concatenation, computed as a left-to-right stack pass. Agrees with
// red(a + b) by strategy independence; valid even for unreduced inputs.
inline RSeq red_concat(std::string_view a, std::string_view b) {
  RSeq out;
  out.reserve(a.size() + b.size());
  for (char c : a) push_letter(out, c);
  for (char c : b) push_letter(out, c);
  return out;
}

// Inverse of push_letter: the unique reduced t' with push_letter(t', c) == t,
// if one exists. Pushing L, r or n is a bijection on reduced sequences;
// pushing l or P only ever appends, so a preimage exists only when t ends in
// that letter.
inline std::optional<RSeq> unpush_letter(const RSeq& t, char c) {
  char last = t.empty() ? '\0' : t.back();
  auto drop = [&] { return t.substr(0, t.size() - 1); };
  auto swap_to = [&](char d) {
    RSeq s = t.substr(0, t.size() - 1);
    s += d;
    return s;
  };
  switch (c) {
    case 'L':
      if (last == 'P') return swap_to('l');  // lL -> P ran
      if (last == 'L') return drop();        // plain append
      return t + 'r';                        // rL -> (empty) ran
    case 'r':
      if (last == 'l') return swap_to('P');  // Pr -> l ran
      if (last == 'r') return drop();        // plain append
      return t + 'L';                        // Lr -> (empty) ran
    case 'n':
      if (last == 'n') return drop();  // plain append
      return t + 'n';                  // nn -> (empty) ran
    case 'l':
      if (last == 'l') return drop();
      return std::nullopt;
    case 'P':
      if (last == 'P') return drop();
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

// The unique reduced z with red(z + w) == x, if any. Computed by peeling w's
// letters off x in reverse; uniqueness is the cancellation theorem.
inline std::optional<RSeq> cancel_suffix(const RSeq& x, const RSeq& w) {
  RSeq cur = x;
  for (std::size_t i = w.size(); i-- > 0;) {
    auto prev = unpush_letter(cur, w[i]);
    if (!prev) return std::nullopt;
    cur = std::move(*prev);
  }
  return cur;
}

// Independent verification oracle: the set of normal forms reachable by ANY
// reduction strategy, via breadth-first closure under reduce_once. The
// uniqueness theorem asserts this is always a singleton.
inline std::set<RSeq> oracle_red_all_orders(const Seq& s, std::size_t limit = 10) {
  if (s.size() > limit)
    throw std::invalid_argument("oracle_red_all_orders: sequence longer than limit " +
                                std::to_string(limit));
  std::set<Seq> seen;
  std::set<Seq> frontier{s};
  std::set<RSeq> normal_forms;
  while (!frontier.empty()) {
    std::set<Seq> next;
    for (const Seq& t : frontier) {
      if (!seen.insert(t).second) continue;
      std::set<Seq> succ = reduce_once(t);
      if (succ.empty()) {
        normal_forms.insert(t);
        continue;
      }
      for (const Seq& u : succ)
        if (!seen.count(u)) next.insert(u);
    }
    frontier = std::move(next);
  }
  return normal_forms;
}

// Sequence literal syntax: a word over {l, r, L, P, n}, or "e" for the empty
// sequence.
inline Seq parse_seq(std::string_view text) {
  if (text == "e") return {};
  Seq out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_seq_letter(text[i]))
      throw ParseError(i, std::string("invalid sequence letter '") + text[i] + "'");
    out += text[i];
  }
  return out;
}

inline std::string render_seq(const Seq& s) { return s.empty() ? "e" : s; }

}  // namespace bunched
