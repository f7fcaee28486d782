#include "burn/families.hpp"

#include <cctype>
#include <stdexcept>

#include "burn/products.hpp"

namespace burn {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("family: " + what);
}

void require(bool ok, const std::string& what) {
  if (!ok) bad(what);
}

}  // namespace

Graph family(FamilySpec spec) {
  int k = spec.size;
  std::vector<Edge> es;
  switch (spec.kind) {
    case FamilyKind::Path:
      require(k >= 1, "path needs order >= 1");
      for (int i = 0; i + 1 < k; ++i) es.emplace_back(i, i + 1);
      return Graph(k, es);
    case FamilyKind::Cycle:
      require(k >= 3, "cycle needs order >= 3");
      for (int i = 0; i < k; ++i) es.emplace_back(i, (i + 1) % k);
      return Graph(k, es);
    case FamilyKind::Complete:
      require(k >= 1 && k <= 64, "complete needs order in 1..64");
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) es.emplace_back(i, j);
      return Graph(k, es);
    case FamilyKind::Star:
      require(k >= 1, "star needs at least one leaf");
      require(k + 1 <= 64, "star exceeds 64-vertex cap");
      for (int i = 1; i <= k; ++i) es.emplace_back(0, i);
      return Graph(k + 1, es);
    case FamilyKind::Empty:
      require(k >= 1, "empty graph needs order >= 1");
      return Graph(k, es);
    case FamilyKind::Hypercube: {
      require(k >= 1 && k <= 6, "hypercube dimension must be in 1..6");
      int n = 1 << k;
      for (int v = 0; v < n; ++v)
        for (int b = 0; b < k; ++b)
          if (!((v >> b) & 1)) es.emplace_back(v, v | (1 << b));
      return Graph(n, es);
    }
  }
  bad("unknown family kind");
}

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Path: return "path";
    case FamilyKind::Cycle: return "cycle";
    case FamilyKind::Complete: return "complete";
    case FamilyKind::Star: return "star";
    case FamilyKind::Empty: return "empty";
    case FamilyKind::Hypercube: return "hypercube";
  }
  return "?";
}

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '-'))
      ++pos;
    if (pos == start) bad("expected a name at position " + std::to_string(start));
    return std::string(text.substr(start, pos - start));
  }

  int number() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) bad("expected a number at position " + std::to_string(start));
    long v = std::stol(std::string(text.substr(start, pos - start)));
    if (v > 1 << 20) bad("parameter too large");
    return static_cast<int>(v);
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      bad(std::string("expected '") + c + "' at position " + std::to_string(pos));
    ++pos;
  }

  Graph term() {
    std::string name = ident();
    skip_ws();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      Graph a = term();
      expect(',');
      Graph b = term();
      expect(')');
      if (name == "cartesian") return cartesian_product(a, b);
      if (name == "strong") return strong_product(a, b);
      if (name == "lex" || name == "lexicographic") return lexicographic_product(a, b);
      if (name == "corona") return corona(a, b);
      if (name == "union") return disjoint_union(a, b);
      bad("unknown product '" + name + "'");
    }
    expect(':');
    int k = number();
    if (name == "path") return family({FamilyKind::Path, k});
    if (name == "cycle") return family({FamilyKind::Cycle, k});
    if (name == "complete") return family({FamilyKind::Complete, k});
    if (name == "star") return family({FamilyKind::Star, k});
    if (name == "empty") return family({FamilyKind::Empty, k});
    if (name == "hypercube") return family({FamilyKind::Hypercube, k});
    bad("unknown family '" + name + "'");
  }
};

}  // namespace

Graph parse_family(std::string_view text) {
  Parser p{text};
  Graph g = p.term();
  p.skip_ws();
  if (p.pos != text.size()) bad("trailing input at position " + std::to_string(p.pos));
  return g;
}

}  // namespace burn
