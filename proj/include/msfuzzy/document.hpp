#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "msfuzzy/fuzzy.hpp"
#include "msfuzzy/ms_algebra.hpp"

namespace msfuzzy {

/// Text form of an algebra instance:
///
///     # comment
///     [elements]
///     0 a b 1
///     [covers]
///     0 < a
///     [neg]
///     a -> a
///     [fuzzy chi]
///     a = 1/2
///     [subset W]
///     0 b
///
/// Grades are "p/q", integers, or finite decimals (read exactly).
struct AlgebraDocument {
  struct Fuzzy {
    std::string name;
    std::vector<std::pair<std::string, Grade>> grades;
    friend bool operator==(const Fuzzy&, const Fuzzy&) = default;
  };
  struct Subset {
    std::string name;
    std::vector<std::string> members;
    friend bool operator==(const Subset&, const Subset&) = default;
  };

  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::optional<std::vector<std::pair<std::string, std::string>>> neg;
  std::vector<Fuzzy> fuzzy;
  std::vector<Subset> subsets;

  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace detail

/// Parses the text format; the first problem found is thrown with its line.
inline AlgebraDocument parse_algebra(std::string_view text) {
  enum class Section { None, Elements, Covers, Neg, Fuzzy, Subset };
  AlgebraDocument doc;
  Section section = Section::None;
  std::vector<std::size_t> element_lines;
  struct Ref {
    std::string id;
    std::size_t line;
  };
  std::vector<Ref> refs;
  std::vector<std::string> neg_sources;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;

    if (tokens.front().starts_with("[")) {
      std::string header;
      for (auto t : tokens) header += std::string(t) + " ";
      header.pop_back();
      if (!header.ends_with("]")) throw Error(ErrorCode::SyntaxError, "unterminated section header", line_no);
      auto inner = detail::split_ws(std::string_view(header).substr(1, header.size() - 2));
      if (inner.size() == 1 && inner[0] == "elements") {
        section = Section::Elements;
      } else if (inner.size() == 1 && inner[0] == "covers") {
        section = Section::Covers;
      } else if (inner.size() == 1 && inner[0] == "neg") {
        if (doc.neg) throw Error(ErrorCode::SyntaxError, "second [neg] section", line_no);
        doc.neg.emplace();
        section = Section::Neg;
      } else if (inner.size() == 2 && (inner[0] == "fuzzy" || inner[0] == "subset")) {
        std::string name(inner[1]);
        for (const auto& f : doc.fuzzy)
          if (f.name == name) throw Error(ErrorCode::SyntaxError, "duplicate section name '" + name + "'", line_no);
        for (const auto& s : doc.subsets)
          if (s.name == name) throw Error(ErrorCode::SyntaxError, "duplicate section name '" + name + "'", line_no);
        if (inner[0] == "fuzzy") {
          doc.fuzzy.push_back({name, {}});
          section = Section::Fuzzy;
        } else {
          doc.subsets.push_back({name, {}});
          section = Section::Subset;
        }
      } else {
        throw Error(ErrorCode::SyntaxError, "unknown section '" + header + "'", line_no);
      }
      continue;
    }

    switch (section) {
      case Section::None:
        throw Error(ErrorCode::SyntaxError, "content before any section header", line_no);
      case Section::Elements:
        for (auto t : tokens) {
          std::string id(t);
          if (std::find(doc.elements.begin(), doc.elements.end(), id) != doc.elements.end())
            throw Error(ErrorCode::DuplicateElement, "element '" + id + "' declared twice", line_no);
          doc.elements.push_back(id);
          element_lines.push_back(line_no);
        }
        break;
      case Section::Covers:
        if (tokens.size() != 3 || tokens[1] != "<")
          throw Error(ErrorCode::SyntaxError, "expected 'a < b'", line_no);
        doc.covers.emplace_back(std::string(tokens[0]), std::string(tokens[2]));
        refs.push_back({std::string(tokens[0]), line_no});
        refs.push_back({std::string(tokens[2]), line_no});
        break;
      case Section::Neg: {
        if (tokens.size() != 3 || tokens[1] != "->")
          throw Error(ErrorCode::SyntaxError, "expected 'a -> b'", line_no);
        std::string from(tokens[0]);
        if (std::find(neg_sources.begin(), neg_sources.end(), from) != neg_sources.end())
          throw Error(ErrorCode::SyntaxError, "second ° image for '" + from + "'", line_no);
        neg_sources.push_back(from);
        doc.neg->emplace_back(from, std::string(tokens[2]));
        refs.push_back({from, line_no});
        refs.push_back({std::string(tokens[2]), line_no});
        break;
      }
      case Section::Fuzzy: {
        if (tokens.size() != 3 || tokens[1] != "=")
          throw Error(ErrorCode::SyntaxError, "expected 'a = grade'", line_no);
        auto& current = doc.fuzzy.back();
        std::string id(tokens[0]);
        for (const auto& entry : current.grades)
          if (entry.first == id)
            throw Error(ErrorCode::SyntaxError, "second grade for '" + id + "' in '" + current.name + "'", line_no);
        try {
          current.grades.emplace_back(id, Grade::parse(tokens[2]));
        } catch (const Error& e) {
          throw Error(e.code(), "grade '" + std::string(tokens[2]) + "' for '" + id + "'", line_no);
        }
        refs.push_back({id, line_no});
        break;
      }
      case Section::Subset:
        for (auto t : tokens) {
          doc.subsets.back().members.emplace_back(t);
          refs.push_back({std::string(t), line_no});
        }
        break;
    }
  }

  for (const auto& ref : refs)
    if (std::find(doc.elements.begin(), doc.elements.end(), ref.id) == doc.elements.end())
      throw Error(ErrorCode::DanglingReference, "undeclared element '" + ref.id + "'", ref.line);
  return doc;
}

inline std::string serialize_algebra(const AlgebraDocument& doc, const std::vector<std::string>& comments = {}) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << "\n";
  out << "[elements]\n";
  for (std::size_t i = 0; i < doc.elements.size(); ++i) out << (i ? " " : "") << doc.elements[i];
  out << "\n\n[covers]\n";
  for (const auto& [a, b] : doc.covers) out << a << " < " << b << "\n";
  if (doc.neg) {
    out << "\n[neg]\n";
    for (const auto& [a, b] : *doc.neg) out << a << " -> " << b << "\n";
  }
  for (const auto& f : doc.fuzzy) {
    out << "\n[fuzzy " << f.name << "]\n";
    for (const auto& [id, g] : f.grades) out << id << " = " << g.str() << "\n";
  }
  for (const auto& s : doc.subsets) {
    out << "\n[subset " << s.name << "]\n";
    for (std::size_t i = 0; i < s.members.size(); ++i) out << (i ? " " : "") << s.members[i];
    out << "\n";
  }
  return out.str();
}

/// A document resolved into library objects.
struct LoadedAlgebra {
  LatticePtr lattice;
  std::optional<MSAlgebra> ms;
  std::vector<std::pair<std::string, FuzzySet>> fuzzy;
  std::vector<std::pair<std::string, ElementSet>> subsets;

  const FuzzySet* find_fuzzy(std::string_view name) const {
    for (const auto& [n, f] : fuzzy)
      if (n == name) return &f;
    return nullptr;
  }
  const FuzzySet& fuzzy_set(std::string_view name) const {
    if (auto f = find_fuzzy(name)) return *f;
    throw Error(ErrorCode::DanglingReference, "no fuzzy section named '" + std::string(name) + "'");
  }
  std::optional<ElementSet> find_subset(std::string_view name) const {
    for (const auto& [n, s] : subsets)
      if (n == name) return s;
    return std::nullopt;
  }
};

inline LoadedAlgebra load_algebra(const AlgebraDocument& doc, LatticeOptions options = {}) {
  LoadedAlgebra out;
  out.lattice = build_lattice(doc.elements, doc.covers, options);
  if (doc.neg) out.ms.emplace(out.lattice, neg_table_from_pairs(*out.lattice, *doc.neg));
  for (const auto& f : doc.fuzzy) out.fuzzy.emplace_back(f.name, FuzzySet::from_pairs(out.lattice, f.grades));
  for (const auto& s : doc.subsets) out.subsets.emplace_back(s.name, out.lattice->subset(s.members));
  return out;
}

inline AlgebraDocument::Fuzzy fuzzy_section(const std::string& name, const FuzzySet& mu) {
  AlgebraDocument::Fuzzy out{name, {}};
  for (Element e = 0; e < mu.grades().size(); ++e) out.grades.emplace_back(mu.carrier()->name(e), mu(e));
  return out;
}

inline AlgebraDocument::Subset subset_section(const std::string& name, const FiniteLattice& lat, ElementSet s) {
  AlgebraDocument::Subset out{name, {}};
  for (Element e : s) out.members.push_back(lat.name(e));
  return out;
}

/// Document for an algebra: Hasse covers, full ° table, no fuzzy sections.
inline AlgebraDocument document_for(const MSAlgebra& ms) {
  const auto& lat = ms.lattice();
  AlgebraDocument doc;
  doc.elements = lat.names();
  for (auto [a, b] : lat.covers()) doc.covers.emplace_back(lat.name(a), lat.name(b));
  doc.neg.emplace();
  for (Element e = 0; e < lat.size(); ++e) doc.neg->emplace_back(lat.name(e), lat.name(ms.neg(e)));
  return doc;
}

}  // namespace msfuzzy
