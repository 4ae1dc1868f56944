#include <algorithm>
#include <sstream>

#include "dpv/model.hpp"
#include "dpv/parser.hpp"

namespace dpv {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_on(std::string_view s, std::string_view seps) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || seps.find(s[i]) != std::string_view::npos) {
      auto part = trim(s.substr(start, i - start));
      if (!part.empty()) out.emplace_back(part);
      start = i + 1;
    }
  return out;
}

int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw ModelError("bad integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw ModelError("bad integer '" + s + "'");
  }
}

std::optional<std::string> keyed(const std::string& word, std::string_view key) {
  if (word.size() > key.size() && word.compare(0, key.size(), key) == 0 && word[key.size()] == '=')
    return word.substr(key.size() + 1);
  return std::nullopt;
}

class ModelParser {
 public:
  ModelParser(const ModelResolver& resolve, const GroebnerOptions& opts) : resolve_(resolve), opts_(opts) {}

  SurfaceModel parse(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(is, raw)) {
      ++lineno;
      std::string_view line = strip_comment(raw);
      if (line.empty()) continue;
      try {
        directive(line);
      } catch (const ParseError& e) {
        throw ModelError("line " + std::to_string(lineno) + ": " + e.what());
      } catch (const ModelError& e) {
        throw ModelError("line " + std::to_string(lineno) + ": " + e.what());
      } catch (const std::invalid_argument& e) {
        throw ModelError("line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    return finish();
  }

 private:
  void directive(std::string_view line) {
    auto words = split_words(line);
    const std::string& head = words[0];
    std::string_view rest = trim(line.substr(head.size()));
    if (head == "ring") {
      if (ring_) throw ModelError("duplicate ring declaration");
      ring_ = parse_ring(line);
    } else if (head == "ambient") {
      ambient(words);
    } else if (head == "poly") {
      need_ring();
      auto eq = rest.find('=');
      if (eq == std::string_view::npos) throw ModelError("expected 'poly <name> = <expr>'");
      std::string name(trim(rest.substr(0, eq)));
      named_.insert_or_assign(name, parse_polynomial(rest.substr(eq + 1), ring_, &named_));
      polys_parsed_ = true;
    } else if (head == "hypersurface") {
      need_ring();
      for (const auto& part : split_on(rest, ",;")) equations_.push_back(parse_polynomial(part, ring_, &named_));
      polys_parsed_ = true;
    } else if (head == "extrachart") {
      extrachart(rest);
    } else if (head == "blowup") {
      blowup(rest);
    } else if (head == "doublecover") {
      doublecover(words);
    } else if (head == "assume") {
      for (std::size_t i = 1; i < words.size(); ++i) assumptions_.push_back(words[i]);
    } else {
      throw ModelError("unknown directive '" + head + "'");
    }
  }

  void need_ring() const {
    if (!ring_) throw ModelError("missing ring declaration");
  }

  void regrade(std::vector<std::vector<int>> weights) {
    if (ring_->weights() == weights) return;
    if (polys_parsed_) throw ModelError("ambient grading differs from the ring and polynomials are already parsed");
    ring_ = ring_->with_variables(ring_->var_names(), std::move(weights));
  }

  void ambient(const std::vector<std::string>& words) {
    need_ring();
    if (words.size() < 2) throw ModelError("ambient needs a kind");
    const std::size_t n = ring_->nvars();
    AmbientSpace a;
    if (words[1] == "wproj") {
      a.kind = AmbientKind::weighted_projective;
      for (std::size_t i = 2; i < words.size(); ++i) a.weights.push_back(to_int(words[i]));
      if (a.weights.size() != n) throw ModelError("ambient weights do not match the ring variables");
      std::vector<std::vector<int>> w;
      for (int x : a.weights) {
        if (x < 1) throw ModelError("weights must be positive");
        w.push_back({x});
      }
      regrade(std::move(w));
    } else if (words[1] == "multiproj") {
      a.kind = AmbientKind::multiprojective;
      for (std::size_t i = 2; i < words.size(); ++i) a.factor_dims.push_back(to_int(words[i]));
      std::size_t total = 0;
      for (int d : a.factor_dims) {
        if (d < 1) throw ModelError("factor dimensions must be positive");
        total += static_cast<std::size_t>(d) + 1;
      }
      if (total != n) throw ModelError("multiprojective factors do not match the ring variables");
      std::vector<std::vector<int>> w;
      for (std::size_t f = 0; f < a.factor_dims.size(); ++f)
        for (int k = 0; k <= a.factor_dims[f]; ++k) {
          std::vector<int> unit(a.factor_dims.size(), 0);
          unit[f] = 1;
          w.push_back(unit);
        }
      regrade(std::move(w));
    } else if (words[1] == "affine") {
      a.kind = AmbientKind::affine;
      if (words.size() > 2 && static_cast<std::size_t>(to_int(words[2])) != n)
        throw ModelError("affine dimension does not match the ring");
    } else {
      throw ModelError("unknown ambient kind '" + words[1] + "'");
    }
    ambient_ = std::move(a);
  }

  void extrachart(std::string_view rest) {
    need_ring();
    auto eqpos = rest.find(" eq ");
    if (eqpos == std::string_view::npos) throw ModelError("extrachart needs 'eq <expr>'");
    auto words = split_words(rest.substr(0, eqpos));
    std::string eqs(rest.substr(eqpos + 4));
    std::string name;
    std::vector<std::string> coords, inverts;
    std::optional<std::string> locus;
    enum { none, coord, invert, loc } mode = none;
    for (const auto& w : words) {
      if (auto v = keyed(w, "name")) {
        name = *v;
        mode = none;
      } else if (w == "coords") {
        mode = coord;
      } else if (w == "invert") {
        mode = invert;
      } else if (w == "locus") {
        mode = loc;
      } else if (mode == coord) {
        coords.push_back(w);
      } else if (mode == invert) {
        inverts.push_back(w);
      } else if (mode == loc) {
        locus = w;
      } else {
        throw ModelError("unexpected '" + w + "' in extrachart");
      }
    }
    if (name.empty() || coords.empty()) throw ModelError("extrachart needs name= and coords");
    Ring cr = RingContext::standard(ring_->prime(), coords, ring_->param_names());
    Chart c{name, cr, {}, {}, 0, "extra"};
    for (const auto& e : split_on(eqs, ";")) c.equations.push_back(parse_polynomial(e, cr));
    for (const auto& e : inverts) c.inverted.push_back(parse_polynomial(e, cr));
    c.codim = c.equations.size();
    extra_.push_back(std::move(c));
    loci_.push_back(locus ? std::optional<Polynomial>(parse_polynomial(*locus, ring_, &named_)) : std::nullopt);
  }

  void blowup(std::string_view rest) {
    auto cpos = rest.find("center");
    if (cpos == std::string_view::npos) throw ModelError("blowup needs 'center g1, g2'");
    auto words = split_words(rest.substr(0, cpos));
    std::string parent_id, chart;
    for (const auto& w : words) {
      if (auto v = keyed(w, "parent"))
        parent_id = *v;
      else if (auto v2 = keyed(w, "chart"))
        chart = *v2;
      else
        throw ModelError("unexpected '" + w + "' in blowup");
    }
    if (parent_id.empty() || chart.empty()) throw ModelError("blowup needs parent= and chart=");
    if (!resolve_) throw ModelError("blowup parent '" + parent_id + "' cannot be resolved here");
    ModelPtr parent = resolve_(parent_id);
    if (!parent) throw ModelError("unknown blowup parent '" + parent_id + "'");

    std::string_view center = rest.substr(cpos + 6);
    std::optional<std::string> invert;
    if (auto ipos = center.find(" invert "); ipos != std::string_view::npos) {
      invert = std::string(trim(center.substr(ipos + 8)));
      center = center.substr(0, ipos);
    }
    auto gens = split_on(center, ",;");
    if (gens.size() == 1) gens = split_words(center);
    if (gens.size() != 2) throw ModelError("blow-up centers need exactly two generators");
    blowup_ = blow_up(parent, chart, gens[0], gens[1], invert, opts_);
    blowup_->blowup->parent_id = parent_id;
  }

  void doublecover(const std::vector<std::string>& words) {
    need_ring();
    std::array<int, 2> bideg{};
    std::optional<std::string> section;
    for (std::size_t i = 1; i < words.size(); ++i) {
      if (auto v = keyed(words[i], "base")) {
        if (*v != "P1xP1") throw ModelError("double covers are supported over P1xP1 only");
      } else if (words[i] == "bidegree" && i + 2 < words.size()) {
        bideg = {to_int(words[i + 1]), to_int(words[i + 2])};
        i += 2;
      } else if (words[i] == "section" && i + 1 < words.size()) {
        section = words[++i];
      } else {
        throw ModelError("unexpected '" + words[i] + "' in doublecover");
      }
    }
    if (!section) throw ModelError("doublecover needs a section");
    if (ring_->grading_rank() == 1) regrade({{1, 0}, {1, 0}, {0, 1}, {0, 1}});
    cover_ = double_cover(ring_, parse_polynomial(*section, ring_, &named_), bideg);
  }

  SurfaceModel finish() {
    SurfaceModel m;
    if (blowup_) {
      m = std::move(*blowup_);
    } else if (cover_) {
      m = std::move(*cover_);
    } else {
      need_ring();
      if (!ambient_) throw ModelError("missing ambient declaration");
      m.presentation = Presentation::complete_intersection;
      m.ambient = *ambient_;
      m.ambient.ring = ring_;
      m.equations = equations_;
      for (const auto& f : m.equations)
        if (!f.is_zero() && !weighted_degree(f).homogeneous() && m.ambient.kind != AmbientKind::affine)
          throw ModelError("equation is not homogeneous: " + f.to_string());
      if (m.dimension() < 0) throw ModelError("more equations than ambient dimension");
    }
    for (auto& c : extra_) m.extra_charts.push_back(std::move(c));
    for (auto& l : loci_) m.extra_loci.push_back(std::move(l));
    if (!m.extra_charts.empty() && m.presentation != Presentation::complete_intersection)
      throw ModelError("extra charts are supported on complete intersections only");
    for (auto& a : assumptions_) m.assumptions.push_back(std::move(a));
    for (const auto& [k, v] : named_) m.named.insert_or_assign(k, v);
    return m;
  }

  const ModelResolver& resolve_;
  const GroebnerOptions& opts_;
  Ring ring_;
  bool polys_parsed_ = false;
  NamedPolys named_;
  std::optional<AmbientSpace> ambient_;
  std::vector<Polynomial> equations_;
  std::vector<Chart> extra_;
  std::vector<std::optional<Polynomial>> loci_;
  std::vector<std::string> assumptions_;
  std::optional<SurfaceModel> blowup_, cover_;
};

}  // namespace

SurfaceModel parse_model(std::string_view text, const ModelResolver& resolve, const GroebnerOptions& opts) {
  return ModelParser(resolve, opts).parse(text);
}

}  // namespace dpv
