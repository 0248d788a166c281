#pragma once

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "cutcert/word.hpp"
#include "cutcert/word_parse.hpp"

namespace cutcert {

/// Finite group presentation: named generators and freely reduced relators.
struct Presentation {
  Alphabet gens;
  std::vector<Word> relators;

  int generator_count() const { return gens.size(); }

  /// Round-trippable text in the presentation file format.
  std::string canonical_text() const {
    std::ostringstream os;
    os << "gens";
    for (int i = 0; i < gens.size(); ++i) os << " " << gens.name(i);
    os << "\n";
    for (const auto& r : relators) os << "rel " << r.str() << "\n";
    return os.str();
  }

  /// FNV-1a hash of the canonical text; stable across runs and platforms.
  uint64_t digest() const {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : canonical_text()) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

/// Presentation file format:
///   gens x y z
///   rel [x,y]
///   rel [y,z]
/// '#' starts a comment; a bare "rel" is the empty relator.
inline Presentation parse_presentation(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_gens = false;
  Alphabet gens;
  std::vector<std::pair<int, std::string>> relator_sources;

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r");
    std::string body = line.substr(b, e - b + 1);

    std::istringstream ls(body);
    std::string keyword;
    ls >> keyword;
    std::string rest;
    std::getline(ls, rest);

    if (keyword == "gens") {
      if (have_gens) throw ParseError(lineno, 1, "duplicate gens line");
      std::vector<std::string> names;
      std::istringstream ns(rest);
      std::string n;
      while (ns >> n) {
        for (size_t k = 0; k < n.size(); ++k) {
          char c = n[k];
          bool ok = (std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
                     (k > 0 && std::isdigit(static_cast<unsigned char>(c))));
          if (!ok) throw ParseError(lineno, 1, "invalid generator name '" + n + "'");
        }
        names.push_back(n);
      }
      if (names.empty()) throw ParseError(lineno, 1, "gens line names no generators");
      try {
        gens = Alphabet(std::move(names));
      } catch (const Error& err) {
        throw ParseError(lineno, 1, err.what());
      }
      have_gens = true;
    } else if (keyword == "rel") {
      if (!have_gens) throw ParseError(lineno, 1, "rel before gens line");
      relator_sources.emplace_back(lineno, rest);
    } else {
      throw ParseError(lineno, 1, "expected 'gens' or 'rel', got '" + keyword + "'");
    }
  }
  if (!have_gens) throw ParseError(lineno + 1, 1, "empty presentation: no gens line");

  Presentation p{gens, {}};
  for (const auto& [ln, src] : relator_sources) {
    size_t b = src.find_first_not_of(" \t");
    if (b == std::string::npos) {
      p.relators.emplace_back(gens);  // empty relator
    } else {
      p.relators.push_back(parse_word(src, gens, ln));
    }
  }
  return p;
}

inline Presentation parse_presentation_text(const std::string& text) {
  std::istringstream in(text);
  return parse_presentation(in);
}

/// Primitive character pi_1 -> Z, given by generator exponents.
struct PhiMap {
  std::vector<long long> n;

  friend bool operator==(const PhiMap&, const PhiMap&) = default;

  std::string str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < n.size(); ++i) os << (i ? "," : "") << n[i];
    os << ")";
    return os.str();
  }
};

/// A character is consistent when every relator has exponent-sum zero
/// under it (so it is a homomorphism on the presented group).
inline bool phi_consistent(const Presentation& p, std::span<const long long> n) {
  for (const auto& r : p.relators) {
    long long s = 0;
    auto ev = r.exponent_vector();
    for (size_t i = 0; i < ev.size(); ++i) s += ev[i] * n[i];
    if (s != 0) return false;
  }
  return true;
}

/// Full validation with distinct error codes. Non-primitive vectors are
/// rejected, never normalized.
inline void validate_phi(const Presentation& p, std::span<const long long> n) {
  if (n.size() != static_cast<size_t>(p.generator_count()))
    throw Error(Errc::invalid_argument, "phi length != generator count");
  if (!is_primitive_vector(n)) throw Error(Errc::non_primitive_phi, "phi is not primitive");
  if (!phi_consistent(p, n))
    throw Error(Errc::inconsistent_phi, "phi does not vanish on all relators");
}

}  // namespace cutcert
