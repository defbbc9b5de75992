#include "ncfree/specfile.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace ncfree {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

int parse_int(const std::string& text, int line, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw SpecError(line, "expected an integer for " + what + ", got `" + text + "`");
  return value;
}

Rational parse_value(const std::string& text, int line) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw SpecError(line, "malformed rational `" + text + "`");
  }
}

// `key=value` with a fixed key.
int parse_keyed(const std::string& tok, const std::string& key, int line) {
  if (tok.rfind(key + "=", 0) != 0) throw SpecError(line, "expected `" + key + "=<int>`, got `" + tok + "`");
  return parse_int(tok.substr(key.size() + 1), line, key);
}

class Parser {
 public:
  SpecFile run(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
      ++line;
      auto toks = tokenize(raw);
      if (toks.empty()) continue;
      const std::string& head = toks.front();
      if (head == "order" || head == "dim" || head == "matrices") {
        header(toks, line);
      } else if (head == "cumulant") {
        cumulant(toks, line);
      } else if (head == "semicircular") {
        semicircular(toks, line);
      } else if (head == "circular") {
        circular(toks, line);
      } else {
        throw SpecError(line, "unknown directive `" + head + "`");
      }
    }
    require_header(line + 1);
    return spec_;
  }

 private:
  void header(const std::vector<std::string>& toks, int line) {
    if (toks.size() != 2) throw SpecError(line, "`" + toks[0] + "` takes one integer");
    if (!spec_.declarations.empty()) throw SpecError(line, "`" + toks[0] + "` must precede all declarations");
    int value = parse_int(toks[1], line, toks[0]);
    if (value < 1) throw SpecError(line, "`" + toks[0] + "` must be positive");
    int& slot = toks[0] == "order" ? spec_.order : toks[0] == "dim" ? spec_.d : spec_.s;
    if (slot != 0) throw SpecError(line, "duplicate `" + toks[0] + "`");
    slot = value;
  }

  void require_header(int line) const {
    if (spec_.order == 0 || spec_.d == 0 || spec_.s == 0) {
      throw SpecError(line, "`order`, `dim` and `matrices` must all be declared first");
    }
  }

  void check_entry(int r, int i, int j, int line) const {
    if (r < 1 || r > spec_.s) throw SpecError(line, "matrix index " + std::to_string(r) + " out of range");
    if (i < 1 || i > spec_.d || j < 1 || j > spec_.d) {
      throw SpecError(line, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for dim " +
                                std::to_string(spec_.d));
    }
  }

  void claim(const Word& key, int line) {
    if (static_cast<int>(key.size()) > spec_.order) throw SpecError(line, "cumulant longer than order");
    auto [it, inserted] = keys_.emplace(key, line);
    if (!inserted) {
      throw SpecError(line, "cumulant key collides with the one declared at line " + std::to_string(it->second));
    }
  }

  int gen(int r, int i, int j) const { return entry_generator(r, i, j, spec_.d); }

  void cumulant(const std::vector<std::string>& toks, int line) {
    require_header(line);
    auto eq = std::find(toks.begin(), toks.end(), "=");
    if (eq == toks.begin() + 1 || eq == toks.end() || eq + 2 != toks.end()) {
      throw SpecError(line, "expected `cumulant r:i,j [r:i,j ...] = p/q`");
    }
    CumulantDecl decl;
    Word key;
    for (auto it = toks.begin() + 1; it != eq; ++it) {
      auto colon = it->find(':');
      auto comma = it->find(',');
      if (colon == std::string::npos || comma == std::string::npos || comma < colon) {
        throw SpecError(line, "malformed entry `" + *it + "`, expected r:i,j");
      }
      EntryRef e{parse_int(it->substr(0, colon), line, "matrix index"),
                 parse_int(it->substr(colon + 1, comma - colon - 1), line, "row"),
                 parse_int(it->substr(comma + 1), line, "column")};
      check_entry(e.r, e.i, e.j, line);
      decl.entries.push_back(e);
      key.push_back(gen(e.r, e.i, e.j));
    }
    decl.value = parse_value(*(eq + 1), line);
    claim(key, line);
    spec_.declarations.emplace_back(std::move(decl));
  }

  Rational radius(const std::vector<std::string>& toks, std::size_t at, int line) const {
    if (toks.size() != at + 2 || toks[at] != "radius") throw SpecError(line, "expected `radius p/q` at the end");
    Rational value = parse_value(toks[at + 1], line);
    if (value < 0) throw SpecError(line, "radius must be non-negative");
    return value;
  }

  void semicircular(const std::vector<std::string>& toks, int line) {
    require_header(line);
    if (toks.size() != 5) throw SpecError(line, "expected `semicircular r=<r> i=<i> radius p/q`");
    SemicircularDecl decl{parse_keyed(toks[1], "r", line), parse_keyed(toks[2], "i", line), radius(toks, 3, line)};
    check_entry(decl.r, decl.i, decl.i, line);
    int g = gen(decl.r, decl.i, decl.i);
    claim({g, g}, line);
    spec_.declarations.emplace_back(std::move(decl));
  }

  void circular(const std::vector<std::string>& toks, int line) {
    require_header(line);
    if (toks.size() != 6) throw SpecError(line, "expected `circular r=<r> i=<i> j=<j> radius p/q`");
    CircularDecl decl{parse_keyed(toks[1], "r", line), parse_keyed(toks[2], "i", line), parse_keyed(toks[3], "j", line),
                      radius(toks, 4, line)};
    check_entry(decl.r, decl.i, decl.j, line);
    if (decl.i == decl.j) throw SpecError(line, "circular entries need i != j");
    int c = gen(decl.r, decl.i, decl.j);
    int cstar = gen(decl.r, decl.j, decl.i);
    claim({c, cstar}, line);
    claim({cstar, c}, line);
    spec_.declarations.emplace_back(std::move(decl));
  }

  SpecFile spec_;
  std::map<Word, int> keys_;
};

}  // namespace

SpecFile parse_spec(const std::string& text) { return Parser().run(text); }

SpecFile load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(0, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

std::string emit_spec(const SpecFile& spec) {
  std::ostringstream out;
  out << "order " << spec.order << "\ndim " << spec.d << "\nmatrices " << spec.s << '\n';
  for (const auto& decl : spec.declarations) {
    if (auto* c = std::get_if<CumulantDecl>(&decl)) {
      out << "cumulant";
      for (const auto& e : c->entries) out << ' ' << e.r << ':' << e.i << ',' << e.j;
      out << " = " << to_string(c->value) << '\n';
    } else if (auto* sc = std::get_if<SemicircularDecl>(&decl)) {
      out << "semicircular r=" << sc->r << " i=" << sc->i << " radius " << to_string(sc->radius) << '\n';
    } else if (auto* ci = std::get_if<CircularDecl>(&decl)) {
      out << "circular r=" << ci->r << " i=" << ci->i << " j=" << ci->j << " radius " << to_string(ci->radius) << '\n';
    }
  }
  return out.str();
}

CumulantModel to_model(const SpecFile& spec) {
  const int d = spec.d;
  CumulantModel model(spec.s * d * d, spec.order);
  for (const auto& decl : spec.declarations) {
    if (auto* c = std::get_if<CumulantDecl>(&decl)) {
      Word w;
      for (const auto& e : c->entries) w.push_back(entry_generator(e.r, e.i, e.j, d));
      model.set_cumulant(w, c->value);
    } else if (auto* sc = std::get_if<SemicircularDecl>(&decl)) {
      int g = entry_generator(sc->r, sc->i, sc->i, d);
      if (spec.order >= 2) model.set_cumulant({g, g}, sc->radius * sc->radius / 4);
    } else if (auto* ci = std::get_if<CircularDecl>(&decl)) {
      int c = entry_generator(ci->r, ci->i, ci->j, d);
      int cstar = entry_generator(ci->r, ci->j, ci->i, d);
      if (spec.order >= 2) {
        model.set_cumulant({c, cstar}, ci->radius * ci->radius / 4);
        model.set_cumulant({cstar, c}, ci->radius * ci->radius / 4);
      }
    }
  }
  return model;
}

MatrixFamily to_family(const SpecFile& spec) { return canonical_family(to_model(spec), spec.d, spec.s); }

SpecFile gaussian_spec(const std::vector<std::vector<std::vector<Rational>>>& radii, int order) {
  if (radii.empty() || radii.front().empty()) throw std::invalid_argument("gaussian_spec: no radii");
  SpecFile spec;
  spec.order = order;
  spec.d = static_cast<int>(radii.front().size());
  spec.s = static_cast<int>(radii.size());
  for (int r = 1; r <= spec.s; ++r) {
    const auto& grid = radii[static_cast<std::size_t>(r - 1)];
    if (static_cast<int>(grid.size()) != spec.d) throw std::invalid_argument("gaussian_spec: grids must be d×d");
    for (int i = 1; i <= spec.d; ++i) {
      const auto& row = grid[static_cast<std::size_t>(i - 1)];
      if (static_cast<int>(row.size()) != spec.d) throw std::invalid_argument("gaussian_spec: grids must be d×d");
      for (int j = i; j <= spec.d; ++j) {
        const Rational& rad = row[static_cast<std::size_t>(j - 1)];
        if (rad != grid[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)]) {
          throw std::invalid_argument("gaussian_spec: radii must be symmetric");
        }
        if (rad == 0) continue;
        if (i == j) {
          spec.declarations.emplace_back(SemicircularDecl{r, i, rad});
        } else {
          spec.declarations.emplace_back(CircularDecl{r, i, j, rad});
        }
      }
    }
  }
  return spec;
}

}  // namespace ncfree
