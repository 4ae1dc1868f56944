#include <functional>
#include <stdexcept>

#include "dpv/catalogue.hpp"

namespace dpv::catalogue {

namespace {

struct Source {
  std::string id;
  std::string row;
  std::string summary;
  std::string text;
};

// Model texts. Parameters are the transcendental generators of k over an
// algebraically closed field of characteristic p.
const std::vector<Source>& sources() {
  static const std::vector<Source> s = {
      {"e1-1-p3", "p3:1-1", "sextic in P(1,1,2,3), p = 3",
       "ring p=3 geom x0 x1 y z params s0 s1 s2 s3\n"
       "ambient wproj 1 1 2 3\n"
       "hypersurface s0*z^2 + s1*y^3 + s2*x0^6 + s3*x1^6\n"
       "extrachart name=U coords x0 x1 u invert u locus y*z eq s0*u^2 + s1*u^3 + s2*x0^6 + s3*x1^6\n"
       "assume H0=k\n"},
      {"e1-1-p2", "p2:1-1", "sextic in P(1,1,2,3), p = 2",
       "ring p=2 geom x0 x1 y z params s0 s1 s2 s3\n"
       "ambient wproj 1 1 2 3\n"
       "hypersurface s0*z^2 + s1*y^3 + s2*x0^6 + s3*x1^6\n"
       "extrachart name=U coords x0 x1 u invert u locus y*z eq s0*u^2 + s1*u^3 + s2*x0^6 + s3*x1^6\n"
       "assume H0=k\n"},
      {"e1-2", "p2:1-2", "quartic in P(1,1,1,2)",
       "ring p=2 geom x0 x1 x2 y params s0 s1 s2 t\n"
       "ambient wproj 1 1 1 2\n"
       "hypersurface y^2 + t*x0^2*y + s0*x0^4 + s1*x1^4 + s2*x2^4\n"
       "assume H0=k\n"},
      {"e1-3", "p3:1-3", "cubic surface in P3, p = 3",
       "ring p=3 geom x y z w params s t\n"
       "ambient wproj 1 1 1 1\n"
       "hypersurface x^2*y + x*y^2 + s*z^3 + t*w^3\n"
       "assume H0=k\n"},
      {"e1-4", "p2:1-4", "intersection of two quadrics in P4",
       "ring p=2 geom x0 x1 x2 x3 x4 params s1 s2 s3 s4 t1 t2 t3 t4\n"
       "ambient wproj 1 1 1 1 1\n"
       "hypersurface x0*x1 + s1*x1^2 + s2*x2^2 + s3*x3^2 + s4*x4^2, "
       "x0*x2 + t1*x1^2 + t2*x2^2 + t3*x3^2 + t4*x4^2\n"
       "assume H0=k\n"},
      {"e2-2", "p2:2-2", "quartic y^2 + f2 y + f4 in P(1,1,1,2)",
       "ring p=2 geom x0 x1 x2 y params s0 s1 s2 t0 t1 t2 u0 u1 u2\n"
       "ambient wproj 1 1 1 2\n"
       "poly f2 = s0*x0^2 + s1*x1^2 + s2*x2^2\n"
       "poly g = t0*x0^2 + t1*x1^2 + t2*x2^2\n"
       "poly h = u0*x0^2 + u1*x1^2 + u2*x2^2\n"
       "hypersurface y^2 + f2*y + g*h\n"
       "poly c1a = y + f2\n"
       "poly c1b = g\n"
       "poly c2a = y + g\n"
       "poly c2b = y + f2 + h\n"
       "assume H0=k\n"},
      {"e2-3", "p2:2-3", "blow-up of the e1-4 surface at [1:0:0:0:0]",
       "# (x3, x4) cuts D+(x0) in length 4: the origin plus a length-3 part\n"
       "# on which h vanishes; h(origin) = 1.\n"
       "blowup parent=e1-4 chart=D+(x0) center x3, x4 invert (s1*t2 + s2*t1)*x1*x2 + s1*x1 + t2*x2 + 1\n"},
      {"e2-4", "p2:2-4", "double cover of P1 x P1 branched along a (2,2) section",
       "ring p=2 geom x y x' y' params t1 t2 t3 t4\n"
       "ambient multiproj 1 1\n"
       "poly s = x*y*x'^2 + t1*x^2*x'^2 + t2*y^2*x'^2 + t3*x^2*y'^2 + t4*y^2*y'^2\n"
       "doublecover base=P1xP1 bidegree 1 1 section s\n"
       "assume H0=k\n"},
      {"e2-5-pencil", "p2:2-5", "pencil of conics in P2 x P1",
       "ring p=2 geom x y z u v params s t\n"
       "ambient multiproj 2 1\n"
       "hypersurface u*(x^2 + s*z^2) + v*(y^2 + t*z^2)\n"
       "assume H0=k\n"},
      {"e2-5-blowup", "p2:2-5", "blow-up of P2 at a purely inseparable point of degree 4",
       "blowup parent=p2 chart=D+(z) center x^2 + s, y^2 + t\n"},
      {"e2-6", "p2:2-6", "blow-up of a regular quadric at a purely inseparable point of degree 2",
       "blowup parent=q chart=D+(y) center z, w\n"},
      // auxiliary parents
      {"p2", "", "projective plane over F_2(s, t)",
       "ring p=2 geom x y z params s t\n"
       "ambient wproj 1 1 1\n"
       "assume H0=k\n"},
      {"q", "", "quadric x^2 + s y^2 + zw in P3",
       "ring p=2 geom x y z w params s\n"
       "ambient wproj 1 1 1 1\n"
       "hypersurface x^2 + s*y^2 + z*w\n"
       "assume H0=k\n"},
  };
  return s;
}

const Source& find_source(const std::string& id) {
  for (const auto& s : sources())
    if (s.id == id) return s;
  throw std::out_of_range("unknown example '" + id + "'");
}

}  // namespace

const std::vector<ExpectedRow>& expected_rows() {
  static const std::vector<ExpectedRow> rows = [] {
    std::vector<ExpectedRow> r;
    auto add = [&](int p, std::string no, std::string rho, int k2, std::string h1, std::string props,
                   std::string norm, std::optional<std::string> rays, std::vector<std::string> ex,
                   std::string scope = {}) {
      ExpectedRow e;
      e.key = "p" + std::to_string(p) + ":" + no;
      e.p = p;
      e.number = std::move(no);
      e.rho = std::move(rho);
      e.k2 = k2;
      e.h1 = std::move(h1);
      e.properties = std::move(props);
      e.normalization = std::move(norm);
      e.extremal_rays = std::move(rays);
      e.examples = std::move(ex);
      e.scope_note = std::move(scope);
      r.push_back(std::move(e));
    };
    add(3, "1-1", "1", 1, "0", "H6 in P(1,1,2,3)", "P2", {}, {"e1-1-p3"});
    add(3, "1-3", "1", 3, "0", "H3 in P3", "P(1,1,3)", {}, {"e1-3"});
    add(2, "1-1", "1", 1, "0", "H6 in P(1,1,2,3)", "P2", {}, {"e1-1-p2"});
    add(2, "1-2", "1", 2, "0", "H4 in P(1,1,1,2)", "P(1,1,2) or P1xP1", {}, {"e1-2"});
    add(2, "1-4", "1", 4, "0", "H2,2 in P4", "P2 or P1xP1", {}, {"e1-4"});
    add(2, "1-1-i", "1", 1, "1", "irregular", "P2", {}, {},
        "out of scope (irregular): quotient construction, no equations");
    add(2, "1-2-i", "1", 2, "1", "irregular", "P(1,1,2)", {}, {}, "out of scope (irregular): example unknown");
    add(2, "2-2", "2", 2, "0", "H4 in P(1,1,1,2)", "P1xP1", "C+C", {"e2-2"});
    add(2, "2-3", "2", 3, "0", "H3 in P3; blow-up of Y(1-4) at a rational point", "P_P1(O+O(1))", "B+C", {"e2-3"});
    add(2, "2-4", "2", 4, "0", "H2,2 in P4; double cover of a product of two conics", "P1xP1", "C+C", {"e2-4"});
    add(2, "2-5", "2", 5, "0", "blow-up of P2 at a purely inseparable point of degree 4", "P_P1(O+O(1))", "B+C",
        {"e2-5-pencil", "e2-5-blowup"});
    add(2, "2-6", "2", 6, "0", "blow-up of Y(1-8) at a purely inseparable point of degree 2", "P_P1(O+O(2))", "B+C",
        {"e2-6"});
    return r;
  }();
  return rows;
}

const ExpectedRow& expected_row(const std::string& key) {
  for (const auto& r : expected_rows())
    if (r.key == key) return r;
  throw std::out_of_range("unknown table row '" + key + "'");
}

const std::vector<std::string>& record_ids() {
  static const std::vector<std::string> ids = {"e1-1-p3", "e1-3", "e1-1-p2", "e1-2", "e1-4", "e2-2",
                                               "e2-3", "e2-4", "e2-5-pencil", "e2-5-blowup", "e2-6"};
  return ids;
}

const std::vector<std::string>& auxiliary_ids() {
  static const std::vector<std::string> ids = {"p2", "q"};
  return ids;
}

const std::string& record_source(const std::string& id) { return find_source(id).text; }

const std::string& record_row(const std::string& id) { return find_source(id).row; }

ExampleRecord load_example(const std::string& id, const GroebnerOptions& opts) {
  const Source& src = find_source(id);
  std::function<ModelPtr(std::string_view)> resolve = [&](std::string_view parent) -> ModelPtr {
    const Source& ps = find_source(std::string(parent));
    auto m = std::make_shared<SurfaceModel>(parse_model(ps.text, resolve, opts));
    m->name = ps.id;
    return m;
  };
  ExampleRecord rec;
  rec.id = src.id;
  rec.row = src.row;
  rec.summary = src.summary;
  rec.source = src.text;
  rec.model = resolve(src.id);
  rec.assumptions = rec.model->assumptions;
  return rec;
}

}  // namespace dpv::catalogue
