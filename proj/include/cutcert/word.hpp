#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "cutcert/error.hpp"

namespace cutcert {

/// A fixed free-group generating set. Words carry their alphabet, so mixing
/// words over different alphabets is an error rather than a silent
/// misindexing.
class Alphabet {
 public:
  Alphabet() : names_(std::make_shared<const std::vector<std::string>>()) {}

  explicit Alphabet(std::vector<std::string> names)
      : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
    for (size_t i = 0; i < names_->size(); ++i)
      for (size_t j = i + 1; j < names_->size(); ++j)
        if ((*names_)[i] == (*names_)[j])
          throw Error(Errc::invalid_argument, "duplicate generator name: " + (*names_)[i]);
  }

  /// prefix1, ..., prefixm
  static Alphabet indexed(int m, const std::string& prefix = "x") {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i) names.push_back(prefix + std::to_string(i));
    return Alphabet(std::move(names));
  }

  int size() const { return static_cast<int>(names_->size()); }
  const std::string& name(int i) const { return names_->at(static_cast<size_t>(i)); }

  std::optional<int> index_of(std::string_view name) const {
    for (size_t i = 0; i < names_->size(); ++i)
      if ((*names_)[i] == name) return static_cast<int>(i);
    return std::nullopt;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Freely reduced word in the free group on an alphabet. Letters are stored
/// as +-(index+1); construction reduces eagerly, so no adjacent inverse pair
/// ever survives.
class Word {
 public:
  explicit Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  /// g_i^exp, 0-based index.
  static Word generator(const Alphabet& alphabet, int i, int exp = 1) {
    if (i < 0 || i >= alphabet.size())
      throw Error(Errc::invalid_argument, "generator index out of range");
    Word w(alphabet);
    const int32_t letter = exp >= 0 ? i + 1 : -(i + 1);
    for (int k = 0; k < (exp >= 0 ? exp : -exp); ++k) w.letters_.push_back(letter);
    return w;
  }

  /// Builds from signed letters +-(index+1), reducing eagerly.
  static Word from_letters(const Alphabet& alphabet, std::span<const int32_t> letters) {
    Word w(alphabet);
    for (int32_t l : letters) {
      if (l == 0 || l > alphabet.size() || l < -alphabet.size())
        throw Error(Errc::invalid_argument, "letter out of range");
      w.push_reduced(l);
    }
    return w;
  }

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<int32_t>& letters() const { return letters_; }
  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// 0-based generator index of letter at position k.
  int gen_at(size_t k) const { return std::abs(letters_[k]) - 1; }
  /// +1 or -1.
  int sign_at(size_t k) const { return letters_[k] > 0 ? 1 : -1; }

  friend bool operator==(const Word& a, const Word& b) {
    return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
  }

  /// Letterwise order; used as an associative-container key. Only words over
  /// one alphabet are ever stored together.
  friend bool operator<(const Word& a, const Word& b) { return a.letters_ < b.letters_; }

  friend Word operator*(const Word& a, const Word& b) {
    a.require_same_alphabet(b);
    Word w = a;
    for (int32_t l : b.letters_) w.push_reduced(l);
    return w;
  }

  Word inverse() const {
    Word w(alphabet_);
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
    return w;
  }

  Word pow(int k) const {
    Word base = k >= 0 ? *this : inverse();
    Word r(alphabet_);
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) r = r * base;
    return r;
  }

  /// Exponent-sum vector (the image in the abelianization).
  std::vector<long long> exponent_vector() const {
    std::vector<long long> e(static_cast<size_t>(alphabet_.size()), 0);
    for (size_t k = 0; k < letters_.size(); ++k) e[static_cast<size_t>(gen_at(k))] += sign_at(k);
    return e;
  }

  bool in_commutator_subgroup() const {
    for (long long v : exponent_vector())
      if (v != 0) return false;
    return true;
  }

  /// Grammar-compatible text; parse(str(w)) == w.
  std::string str() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    size_t k = 0;
    bool first = true;
    while (k < letters_.size()) {
      size_t j = k;
      while (j < letters_.size() && letters_[j] == letters_[k]) ++j;
      const int run = static_cast<int>(j - k) * sign_at(k);
      if (!first) os << " ";
      first = false;
      os << alphabet_.name(gen_at(k));
      if (run != 1) os << "^" << run;
      k = j;
    }
    return os.str();
  }

 private:
  void require_same_alphabet(const Word& o) const {
    if (!(alphabet_ == o.alphabet_))
      throw Error(Errc::alphabet_mismatch, "words over different alphabets");
  }

  void push_reduced(int32_t letter) {
    if (!letters_.empty() && letters_.back() == -letter)
      letters_.pop_back();
    else
      letters_.push_back(letter);
  }

  Alphabet alphabet_;
  std::vector<int32_t> letters_;
};

/// [a,b] = a b a^-1 b^-1.
inline Word commutator(const Word& a, const Word& b) {
  return a * b * a.inverse() * b.inverse();
}

/// a^b = b a b^-1 (the conjugator acts on the left).
inline Word conjugate(const Word& a, const Word& b) { return b * a * b.inverse(); }

/// The exact free-group identity [a,bc] = [a,b] [a,c]^b.
inline bool verify_commutator_expansion(const Word& a, const Word& b, const Word& c) {
  return commutator(a, b * c) == commutator(a, b) * conjugate(commutator(a, c), b);
}

}  // namespace cutcert
