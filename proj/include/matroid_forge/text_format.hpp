// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATROID_FORGE_TEXT_FORMAT_HPP_
#define MATROID_FORGE_TEXT_FORMAT_HPP_

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "matroid_forge/finitary_matroid.hpp"
#include "matroid_forge/finite_matroid.hpp"
#include "matroid_forge/sets.hpp"
#include "matroid_forge/template_set.hpp"

namespace matroid_forge {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// The free matroid, or a periodic direct sum of a finite component.
struct FinitarySpec {
  std::optional<FiniteMatroid::Description> component;  // empty: free

  friend bool operator==(const FinitarySpec&, const FinitarySpec&) = default;
};

struct MatroidFile {
  std::string name;
  std::variant<FiniteMatroid::Description, FinitarySpec> body;

  bool is_finitary() const { return std::holds_alternative<FinitarySpec>(body); }
  friend bool operator==(const MatroidFile&, const MatroidFile&) = default;
};

struct FamilyFile {
  std::string name;
  SetFamily members;                // `set` lines
  std::vector<TemplateSet> classes; // `class` lines

  friend bool operator==(const FamilyFile&, const FamilyFile&) = default;
};

struct TaskSpec {
  std::string name;
  TemplateSet i;
  TemplateSet j;

  friend bool operator==(const TaskSpec&, const TaskSpec&) = default;
};

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

inline std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream words(raw);
    Line line{number, {}};
    std::string w;
    while (words >> w) line.words.push_back(w);
    if (line.words.empty() || line.words[0][0] == '#') continue;
    out.push_back(std::move(line));
  }
  return out;
}

inline std::uint64_t parse_natural(const std::string& s) {
  std::uint64_t v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) {
    throw std::invalid_argument("expected a natural number, got '" + s + "'");
  }
  return v;
}

inline std::vector<std::uint64_t> parse_naturals(
    const std::vector<std::string>& words, std::size_t from) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = from; i < words.size(); ++i) {
    out.push_back(parse_natural(words[i]));
  }
  return out;
}

inline std::vector<std::uint64_t> parse_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  if (s.empty()) return out;
  while (true) {
    std::size_t comma = s.find(',', start);
    out.push_back(parse_natural(s.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::string join_naturals(const std::vector<std::uint64_t>& v,
                                 const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

// Incremental description of one finite backend.
struct BackendBuilder {
  std::string kind;
  std::optional<std::uint64_t> k, n;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  std::optional<std::uint64_t> prime;
  std::vector<std::vector<std::uint64_t>> rows;
  std::optional<ElementSet> ground;
  SetFamily bases;

  static bool known(const std::string& k) {
    return k == "uniform" || k == "graphic" || k == "linear" || k == "explicit";
  }

  // Returns false when the directive is not a backend directive at all.
  bool accept(const Line& line) {
    const auto& w = line.words;
    const std::string& d = w[0];
    auto require_kind = [&](const char* expected) {
      if (kind != expected) {
        throw ParseError(line.number, "'" + d + "' is only valid for kind " +
                                          expected);
      }
    };
    if (d == "params") {
      require_kind("uniform");
      for (std::size_t i = 1; i < w.size(); ++i) {
        auto eq = w[i].find('=');
        if (eq == std::string::npos) {
          throw ParseError(line.number, "expected key=value, got '" + w[i] + "'");
        }
        std::string key = w[i].substr(0, eq);
        std::uint64_t v = parse_natural(w[i].substr(eq + 1));
        if (key == "k") {
          k = v;
        } else if (key == "n") {
          n = v;
        } else {
          throw ParseError(line.number, "unknown parameter '" + key + "'");
        }
      }
      return true;
    }
    if (d == "edge") {
      require_kind("graphic");
      if (w.size() != 3) throw ParseError(line.number, "edge needs two vertices");
      edges.emplace_back(parse_natural(w[1]), parse_natural(w[2]));
      return true;
    }
    if (d == "prime") {
      require_kind("linear");
      if (w.size() != 2) throw ParseError(line.number, "prime needs one value");
      prime = parse_natural(w[1]);
      return true;
    }
    if (d == "row") {
      require_kind("linear");
      rows.push_back(parse_naturals(w, 1));
      return true;
    }
    if (d == "ground") {
      require_kind("explicit");
      if (ground) throw ParseError(line.number, "duplicate ground line");
      ground = ElementSet(parse_naturals(w, 1));
      return true;
    }
    if (d == "base") {
      require_kind("explicit");
      bases.push_back(ElementSet(parse_naturals(w, 1)));
      return true;
    }
    return false;
  }

  FiniteMatroid::Description finish(std::size_t line) const {
    if (kind == "uniform") {
      if (!k || !n) throw ParseError(line, "uniform matroid needs params k= n=");
      return FiniteMatroid::Uniform{*k, *n};
    }
    if (kind == "graphic") return FiniteMatroid::Graphic{edges};
    if (kind == "linear") {
      if (!prime) throw ParseError(line, "linear matroid needs a prime line");
      if (rows.empty()) throw ParseError(line, "linear matroid needs rows");
      return FiniteMatroid::Linear{*prime, rows};
    }
    if (!ground) throw ParseError(line, "explicit matroid needs a ground line");
    SetFamily sorted = bases;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return FiniteMatroid::Explicit{*ground, sorted};
  }
};

inline void emit_backend(std::ostringstream& out,
                         const FiniteMatroid::Description& d) {
  if (const auto* u = std::get_if<FiniteMatroid::Uniform>(&d)) {
    out << "params k=" << u->k << " n=" << u->n << "\n";
  } else if (const auto* g = std::get_if<FiniteMatroid::Graphic>(&d)) {
    for (const auto& [a, b] : g->edges) out << "edge " << a << " " << b << "\n";
  } else if (const auto* l = std::get_if<FiniteMatroid::Linear>(&d)) {
    out << "prime " << l->prime << "\n";
    for (const auto& row : l->rows) {
      out << "row " << join_naturals(row) << "\n";
    }
  } else {
    const auto& e = std::get<FiniteMatroid::Explicit>(d);
    out << "ground " << join_naturals(e.ground.items()) << "\n";
    SetFamily sorted = e.bases;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& b : sorted) {
      out << "base";
      for (Element x : b) out << " " << x;
      out << "\n";
    }
  }
}

inline const char* kind_of(const FiniteMatroid::Description& d) {
  static constexpr const char* kNames[] = {"uniform", "graphic", "linear",
                                           "explicit"};
  return kNames[d.index()];
}

}  // namespace detail

/// Parses a set expression: empty, evens, odds, all, `mult k [offset]`,
/// `set a b ...`, or `template d=.. res=.. t=.. low=.. minus=..`.
inline TemplateSet parse_set_expression(const std::vector<std::string>& w,
                                        std::size_t from = 0) {
  if (from >= w.size()) throw std::invalid_argument("missing set expression");
  const std::string& head = w[from];
  const std::size_t extra = w.size() - from - 1;
  auto no_args = [&]() {
    if (extra != 0) {
      throw std::invalid_argument("'" + head + "' takes no arguments");
    }
  };
  if (head == "empty") return no_args(), TemplateSet::empty();
  if (head == "evens") return no_args(), TemplateSet::evens();
  if (head == "odds") return no_args(), TemplateSet::odds();
  if (head == "all") return no_args(), TemplateSet::all();
  if (head == "mult") {
    if (extra < 1 || extra > 2) {
      throw std::invalid_argument("mult takes a modulus and an optional offset");
    }
    const std::uint64_t k = detail::parse_natural(w[from + 1]);
    const std::uint64_t off = extra == 2 ? detail::parse_natural(w[from + 2]) : 0;
    return TemplateSet::multiples(k, off);
  }
  if (head == "set") {
    return TemplateSet::finite(ElementSet(detail::parse_naturals(w, from + 1)));
  }
  if (head == "template") {
    std::uint64_t d = 1;
    std::uint64_t t = 0;
    std::vector<std::uint64_t> res;
    std::vector<std::uint64_t> low;
    std::vector<std::uint64_t> minus;
    for (std::size_t i = from + 1; i < w.size(); ++i) {
      auto eq = w[i].find('=');
      if (eq == std::string::npos) {
        throw std::invalid_argument("expected key=value, got '" + w[i] + "'");
      }
      const std::string key = w[i].substr(0, eq);
      const std::string value = w[i].substr(eq + 1);
      if (key == "d") {
        d = detail::parse_natural(value);
      } else if (key == "t") {
        t = detail::parse_natural(value);
      } else if (key == "res") {
        res = detail::parse_list(value);
      } else if (key == "low") {
        low = detail::parse_list(value);
      } else if (key == "minus") {
        minus = detail::parse_list(value);
      } else {
        throw std::invalid_argument("unknown template field '" + key + "'");
      }
    }
    return TemplateSet(d, res, t, ElementSet(low), ElementSet(minus));
  }
  throw std::invalid_argument("unknown set expression '" + head + "'");
}

inline TemplateSet parse_set_expression(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> words;
  std::string w;
  while (in >> w) words.push_back(w);
  return parse_set_expression(words);
}

/// Normal form: `empty`, `set a b ...` for finite sets, the template form
/// otherwise.
inline std::string emit_set_expression(const TemplateSet& t) {
  if (t.is_empty()) return "empty";
  if (auto finite = t.as_finite()) {
    return "set " + detail::join_naturals(finite->items());
  }
  return t.to_string();
}

inline MatroidFile parse_matroid_file(const std::string& text) {
  const auto lines = detail::split_lines(text);
  MatroidFile out;
  std::optional<std::string> kind;
  std::optional<detail::BackendBuilder> backend;
  bool named = false;
  bool component_seen = false;
  std::size_t last = 0;
  for (const auto& line : lines) {
    last = line.number;
    const auto& w = line.words;
    try {
      if (w[0] == "matroid") {
        if (named) throw ParseError(line.number, "duplicate matroid line");
        if (w.size() != 2) throw ParseError(line.number, "matroid needs a name");
        out.name = w[1];
        named = true;
        continue;
      }
      if (!named) throw ParseError(line.number, "file must start with 'matroid <name>'");
      if (w[0] == "kind") {
        if (kind) throw ParseError(line.number, "duplicate kind line");
        if (w.size() != 2) throw ParseError(line.number, "kind needs one value");
        kind = w[1];
        if (detail::BackendBuilder::known(*kind)) {
          backend = detail::BackendBuilder{};
          backend->kind = *kind;
        } else if (*kind != "free" && *kind != "periodic-direct-sum") {
          throw ParseError(line.number, "unknown kind '" + *kind + "'");
        }
        continue;
      }
      if (!kind) throw ParseError(line.number, "'" + w[0] + "' before kind line");
      if (w[0] == "component") {
        if (*kind != "periodic-direct-sum") {
          throw ParseError(line.number,
                           "'component' is only valid for periodic-direct-sum");
        }
        if (component_seen) throw ParseError(line.number, "duplicate component line");
        if (w.size() != 2 || !detail::BackendBuilder::known(w[1])) {
          throw ParseError(line.number, "component needs a finite kind");
        }
        component_seen = true;
        backend = detail::BackendBuilder{};
        backend->kind = w[1];
        continue;
      }
      if (backend && backend->accept(line)) continue;
      if (!backend && (w[0] == "params" || w[0] == "edge" || w[0] == "prime" ||
                       w[0] == "row" || w[0] == "ground" || w[0] == "base")) {
        throw ParseError(line.number, "'" + w[0] + "' is not valid for kind " + *kind);
      }
      throw ParseError(line.number, "unknown directive '" + w[0] + "'");
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line.number, e.what());
    }
  }
  if (!named) throw ParseError(last, "missing 'matroid <name>' line");
  if (!kind) throw ParseError(last, "missing kind line");
  if (*kind == "free") {
    out.body = FinitarySpec{};
  } else if (*kind == "periodic-direct-sum") {
    if (!backend) throw ParseError(last, "periodic-direct-sum needs a component line");
    out.body = FinitarySpec{backend->finish(last)};
  } else {
    out.body = backend->finish(last);
  }
  return out;
}

inline std::string emit_matroid_file(const MatroidFile& f) {
  std::ostringstream out;
  out << "matroid " << f.name << "\n";
  if (const auto* d = std::get_if<FiniteMatroid::Description>(&f.body)) {
    out << "kind " << detail::kind_of(*d) << "\n";
    detail::emit_backend(out, *d);
  } else {
    const auto& spec = std::get<FinitarySpec>(f.body);
    if (!spec.component) {
      out << "kind free\n";
    } else {
      out << "kind periodic-direct-sum\n";
      out << "component " << detail::kind_of(*spec.component) << "\n";
      detail::emit_backend(out, *spec.component);
    }
  }
  return out.str();
}

inline FiniteMatroid build_finite(const MatroidFile& f) {
  const auto* d = std::get_if<FiniteMatroid::Description>(&f.body);
  if (d == nullptr) {
    throw std::invalid_argument("matroid '" + f.name + "' is not finite");
  }
  return FiniteMatroid::construct(*d);
}

inline FinitaryMatroid build_finitary(const MatroidFile& f) {
  const auto* spec = std::get_if<FinitarySpec>(&f.body);
  if (spec == nullptr) {
    throw std::invalid_argument("matroid '" + f.name + "' is not finitary");
  }
  if (!spec->component) return FinitaryMatroid::free();
  return FinitaryMatroid::periodic_direct_sum(
      FiniteMatroid::construct(*spec->component));
}

inline FamilyFile parse_family_file(const std::string& text) {
  FamilyFile out;
  bool named = false;
  for (const auto& line : detail::split_lines(text)) {
    const auto& w = line.words;
    try {
      if (w[0] == "family") {
        if (named) throw ParseError(line.number, "duplicate family line");
        if (w.size() != 2) throw ParseError(line.number, "family needs a name");
        out.name = w[1];
        named = true;
      } else if (!named) {
        throw ParseError(line.number, "file must start with 'family <name>'");
      } else if (w[0] == "set") {
        out.members.push_back(ElementSet(detail::parse_naturals(w, 1)));
      } else if (w[0] == "class") {
        out.classes.push_back(parse_set_expression(w, 1));
      } else {
        throw ParseError(line.number, "unknown directive '" + w[0] + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line.number, e.what());
    }
  }
  if (!named) throw ParseError(0, "missing 'family <name>' line");
  return out;
}

inline std::string emit_family_file(const FamilyFile& f) {
  std::ostringstream out;
  out << "family " << f.name << "\n";
  for (const auto& s : f.members) {
    out << "set";
    for (Element e : s) out << " " << e;
    out << "\n";
  }
  for (const auto& t : f.classes) out << "class " << emit_set_expression(t) << "\n";
  return out.str();
}

inline std::vector<TaskSpec> parse_task_file(const std::string& text) {
  std::vector<TaskSpec> out;
  std::vector<std::pair<bool, bool>> seen;  // (I, J) per task
  std::size_t last = 0;
  for (const auto& line : detail::split_lines(text)) {
    const auto& w = line.words;
    last = line.number;
    try {
      if (w[0] == "task") {
        if (w.size() != 2) throw ParseError(line.number, "task needs a name");
        out.push_back(TaskSpec{w[1], {}, {}});
        seen.emplace_back(false, false);
      } else if (out.empty()) {
        throw ParseError(line.number, "file must start with 'task <name>'");
      } else if (w[0] == "I" || w[0] == "J") {
        bool& flag = w[0] == "I" ? seen.back().first : seen.back().second;
        if (flag) throw ParseError(line.number, "duplicate " + w[0] + " line");
        flag = true;
        (w[0] == "I" ? out.back().i : out.back().j) = parse_set_expression(w, 1);
      } else {
        throw ParseError(line.number, "unknown directive '" + w[0] + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line.number, e.what());
    }
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (!seen[k].first || !seen[k].second) {
      throw ParseError(last, "task '" + out[k].name + "' needs I and J lines");
    }
  }
  if (out.empty()) throw ParseError(last, "no tasks");
  return out;
}

inline std::string emit_task_file(const std::vector<TaskSpec>& tasks) {
  std::ostringstream out;
  for (const auto& t : tasks) {
    out << "task " << t.name << "\n";
    out << "I " << emit_set_expression(t.i) << "\n";
    out << "J " << emit_set_expression(t.j) << "\n";
  }
  return out.str();
}

}  // namespace matroid_forge

#endif  // MATROID_FORGE_TEXT_FORMAT_HPP_
