#include "sylvan/atlas.hpp"

#include <algorithm>
#include <cctype>

#include "sylvan/errors.hpp"

namespace sylvan {
namespace {

struct Builder {
  PseudoGraph g;
  std::vector<std::string> labels;

  explicit Builder(int n) : g(n) {}
  void edge(VertexId u, VertexId v, std::string label) {
    g.add_edge(u, v);
    labels.push_back(std::move(label));
  }
};

std::string vname(const char* prefix, int i) { return std::string(prefix) + std::to_string(i); }

void add_pentablock(Builder& b, VertexId first, const std::string& tag) {
  static constexpr int kPairs[7][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};
  for (auto [i, j] : kPairs) {
    b.edge(first + i - 1, first + j - 1, tag + "(v" + std::to_string(i) + ",v" + std::to_string(j) + ")");
  }
}

void add_triblock(Builder& b, VertexId x, const std::string& tag) {
  b.edge(x, x + 1, tag + "(x,y)");
  b.edge(x, x + 1, tag + "(x,y)'");
  b.edge(x, x + 2, tag + "(x,z)");
  b.edge(x + 1, x + 2, tag + "(y,z)");
}

Builder build(AtlasName name) {
  switch (name) {
    case AtlasName::kPetersen: {
      Builder b(10);
      for (int i = 0; i < 5; ++i) {
        b.edge(i, (i + 1) % 5, "(" + vname("v", i + 1) + "," + vname("v", (i + 1) % 5 + 1) + ")");
      }
      for (int i = 0; i < 5; ++i) b.edge(i, 5 + i, "(" + vname("u", i + 1) + "," + vname("v", i + 1) + ")");
      for (int i = 0; i < 5; ++i) {
        b.edge(5 + i, 5 + (i + 2) % 5, "(" + vname("u", i + 1) + "," + vname("u", (i + 2) % 5 + 1) + ")");
      }
      return b;
    }
    case AtlasName::kSylvester4: {
      Builder b(4);
      b.edge(0, 1, "a");
      b.edge(0, 2, "b");
      b.edge(0, 3, "c");
      b.edge(1, 1, "a'");
      b.edge(2, 2, "b'");
      b.edge(3, 3, "c'");
      return b;
    }
    case AtlasName::kSylvester10: {
      Builder b(10);
      static const char* kNames[3] = {"a", "b", "c"};
      for (int d = 0; d < 3; ++d) b.edge(3 + 3 * d, 0, kNames[d]);
      for (int d = 0; d < 3; ++d) add_triblock(b, 1 + 3 * d, std::string(kNames[d]) + ":");
      return b;
    }
    case AtlasName::kSylvester16: {
      Builder b(16);
      for (int d = 0; d < 3; ++d) {
        std::string tag = std::to_string(d + 1) + ":";
        add_pentablock(b, 1 + 5 * d, tag);
        b.edge(5 + 5 * d, 0, tag + "(v,v5)");
      }
      return b;
    }
    case AtlasName::kSPrime: {
      Builder b(10);
      add_pentablock(b, 0, "");
      add_pentablock(b, 5, "'");
      b.edge(4, 9, "(v5,v5')");
      return b;
    }
    case AtlasName::kK4: {
      Builder b(4);
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) b.edge(i, j, "(" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      return b;
    }
    case AtlasName::kK33: {
      Builder b(6);
      for (int i = 0; i < 3; ++i) {
        for (int j = 3; j < 6; ++j) b.edge(i, j, "(" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      return b;
    }
    case AtlasName::kPrism: {
      Builder b(6);
      static constexpr int kPairs[9][2] = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
      for (auto [i, j] : kPairs) b.edge(i, j, "(" + std::to_string(i) + "," + std::to_string(j) + ")");
      return b;
    }
    case AtlasName::kDumbbell6: {
      Builder b(6);
      add_triblock(b, 0, "");
      add_triblock(b, 3, "'");
      b.edge(2, 5, "(z,z')");
      return b;
    }
  }
  throw PreconditionError("unknown atlas name");
}

}  // namespace

EdgeId LabeledAtlasGraph::edge_by_label(std::string_view label) const {
  auto it = std::find(edge_labels.begin(), edge_labels.end(), label);
  if (it == edge_labels.end()) throw PreconditionError("no edge labelled '" + std::string(label) + "'");
  return static_cast<EdgeId>(it - edge_labels.begin());
}

LabeledAtlasGraph atlas(AtlasName name) {
  Builder b = build(name);
  if (!is_cubic(b.g) || !is_connected(b.g)) {
    throw std::logic_error(std::string("atlas graph is not connected cubic: ") + to_string(name));
  }
  return {name, std::move(b.g), std::move(b.labels)};
}

const char* to_string(AtlasName name) {
  switch (name) {
    case AtlasName::kPetersen:
      return "petersen";
    case AtlasName::kSylvester10:
      return "sylvester10";
    case AtlasName::kSylvester4:
      return "sylvester4";
    case AtlasName::kSylvester16:
      return "sylvester16";
    case AtlasName::kSPrime:
      return "sprime";
    case AtlasName::kK4:
      return "k4";
    case AtlasName::kK33:
      return "k33";
    case AtlasName::kPrism:
      return "prism";
    case AtlasName::kDumbbell6:
      return "dumbbell6";
  }
  return "?";
}

std::optional<AtlasName> parse_atlas_name(std::string_view text) {
  std::string s;
  for (char c : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (AtlasName n : all_atlas_names()) {
    if (s == to_string(n)) return n;
  }
  if (s == "p") return AtlasName::kPetersen;
  if (s == "s" || s == "sylvester" || s == "s10") return AtlasName::kSylvester10;
  if (s == "s4") return AtlasName::kSylvester4;
  if (s == "s16") return AtlasName::kSylvester16;
  if (s == "s'" || s == "s-prime" || s == "s_prime") return AtlasName::kSPrime;
  if (s == "k3,3" || s == "k3_3") return AtlasName::kK33;
  if (s == "dumbbell") return AtlasName::kDumbbell6;
  return std::nullopt;
}

std::vector<AtlasName> all_atlas_names() {
  return {AtlasName::kPetersen, AtlasName::kSylvester10, AtlasName::kSylvester4,
          AtlasName::kSylvester16, AtlasName::kSPrime,     AtlasName::kK4,
          AtlasName::kK33,         AtlasName::kPrism,      AtlasName::kDumbbell6};
}

}  // namespace sylvan
