#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace codefact {

/// A word over the two-letter alphabet {a,b}, stored as the lengths of its
/// maximal a-runs: runs e0,...,eg encode a^e0 b a^e1 b ... b a^eg, so the
/// word has exactly g occurrences of b. The empty word is the single run [0].
///
/// Words compare in the canonical term order used for all serialization:
/// by length, then by b-count, then lexicographically on the run vector.
class Word {
public:
  Word() : runs_{0} {}

  static Word from_runs(std::vector<uint32_t> runs) {
    if (runs.empty()) throw std::invalid_argument("Word: run vector must be nonempty");
    return Word(std::move(runs));
  }

  static Word a_power(uint32_t e) { return Word({e}); }
  static Word b() { return Word({0, 0}); }

  /// Parses the text form: "1" is the empty word, otherwise a string over
  /// the characters 'a' and 'b'.
  static Word parse(std::string_view text) {
    if (text == "1") return Word();
    if (text.empty()) throw std::invalid_argument("Word: empty text (use \"1\" for the empty word)");
    std::vector<uint32_t> runs{0};
    for (char c : text) {
      if (c == 'a') {
        ++runs.back();
      } else if (c == 'b') {
        runs.push_back(0);
      } else {
        throw std::invalid_argument("Word: invalid character '" + std::string(1, c) + "'");
      }
    }
    return Word(std::move(runs));
  }

  const std::vector<uint32_t>& runs() const { return runs_; }
  std::size_t b_count() const { return runs_.size() - 1; }
  uint64_t a_count() const {
    return std::accumulate(runs_.begin(), runs_.end(), uint64_t{0});
  }
  uint64_t length() const { return b_count() + a_count(); }
  bool is_empty() const { return runs_.size() == 1 && runs_[0] == 0; }
  bool is_a_power() const { return runs_.size() == 1; }

  uint32_t first_run() const { return runs_.front(); }
  uint32_t last_run() const { return runs_.back(); }

  Word concat(const Word& o) const {
    std::vector<uint32_t> r;
    r.reserve(runs_.size() + o.runs_.size() - 1);
    r.insert(r.end(), runs_.begin(), runs_.end());
    r.back() += o.runs_.front();
    r.insert(r.end(), o.runs_.begin() + 1, o.runs_.end());
    return Word(std::move(r));
  }

  Word reversed() const { return Word({runs_.rbegin(), runs_.rend()}); }

  /// Splits w = prefix . b . a^j around the last b. Requires b_count() >= 1.
  std::pair<Word, uint32_t> split_last_b() const {
    if (b_count() == 0) throw std::logic_error("split_last_b: word has no b");
    return {Word({runs_.begin(), runs_.end() - 1}), runs_.back()};
  }

  /// Splits w = a^m . b . suffix around the first b. Requires b_count() >= 1.
  std::pair<uint32_t, Word> split_first_b() const {
    if (b_count() == 0) throw std::logic_error("split_first_b: word has no b");
    return {runs_.front(), Word({runs_.begin() + 1, runs_.end()})};
  }

  /// If p is a prefix of this word, returns the remainder u with this = p.u.
  std::optional<Word> strip_prefix(const Word& p) const {
    const auto& pr = p.runs_;
    if (pr.size() > runs_.size()) return std::nullopt;
    const std::size_t g = pr.size() - 1;
    for (std::size_t i = 0; i < g; ++i) {
      if (pr[i] != runs_[i]) return std::nullopt;
    }
    if (pr[g] > runs_[g]) return std::nullopt;
    std::vector<uint32_t> rem{runs_[g] - pr[g]};
    rem.insert(rem.end(), runs_.begin() + static_cast<std::ptrdiff_t>(g) + 1, runs_.end());
    return Word(std::move(rem));
  }

  std::string str() const {
    if (is_empty()) return "1";
    std::string s;
    s.reserve(length());
    for (std::size_t i = 0; i < runs_.size(); ++i) {
      if (i > 0) s.push_back('b');
      s.append(runs_[i], 'a');
    }
    return s;
  }

  bool operator==(const Word& o) const { return runs_ == o.runs_; }

  std::strong_ordering operator<=>(const Word& o) const {
    if (auto c = length() <=> o.length(); c != 0) return c;
    if (auto c = b_count() <=> o.b_count(); c != 0) return c;
    return std::lexicographical_compare_three_way(runs_.begin(), runs_.end(),
                                                  o.runs_.begin(), o.runs_.end());
  }

private:
  explicit Word(std::vector<uint32_t> runs) : runs_(std::move(runs)) {}

  std::vector<uint32_t> runs_;
};

inline Word operator*(const Word& u, const Word& v) { return u.concat(v); }

}  // namespace codefact
