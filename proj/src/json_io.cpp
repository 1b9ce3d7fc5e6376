#include "ks/json_io.hpp"

#include <cmath>
#include <fstream>

namespace ks {

namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) fail(errc::io_error, "malformed JSON: " + what);
}

const char* kSchema = "ks/1";

void check_schema(const json& j, const char* kind) {
  expect(j.is_object() && j.value("schema", "") == kSchema, "missing schema tag");
  expect(j.value("kind", "") == kind,
         std::string("expected kind '") + kind + "'");
}

}  // namespace

json to_json(const SpherePoint& p) {
  return json::array({p.z1.real(), p.z1.imag(), p.z2.real(), p.z2.imag()});
}

SpherePoint point_from_json(const json& j) {
  expect(j.is_array() && j.size() == 4, "point expects 4 reals");
  return SpherePoint(cx(j[0].get<double>(), j[1].get<double>()),
                     cx(j[2].get<double>(), j[3].get<double>()));
}

json to_json(const MoebiusMap& m) {
  return json::array({m.a.real(), m.a.imag(), m.b.real(), m.b.imag(), m.c.real(),
                      m.c.imag(), m.d.real(), m.d.imag()});
}

MoebiusMap map_from_json(const json& j) {
  expect(j.is_array() && j.size() == 8, "map expects 8 reals");
  return MoebiusMap(cx(j[0].get<double>(), j[1].get<double>()),
                    cx(j[2].get<double>(), j[3].get<double>()),
                    cx(j[4].get<double>(), j[5].get<double>()),
                    cx(j[6].get<double>(), j[7].get<double>()));
}

json to_json(const OrientedCircle& c) {
  double v[4] = {c.a, c.b.real(), c.b.imag(), c.d};
  int sign = 1;
  for (double x : v) {
    if (x > 0.0) break;
    if (x < 0.0) {
      sign = -1;
      break;
    }
  }
  return json{{"coeffs", {sign * v[0], sign * v[1], sign * v[2], sign * v[3]}},
              {"orientation", sign}};
}

OrientedCircle circle_from_json(const json& j) {
  expect(j.is_object() && j.contains("coeffs") && j.contains("orientation"),
         "circle expects coeffs and orientation");
  const auto& co = j["coeffs"];
  expect(co.is_array() && co.size() == 4, "circle coeffs expects 4 reals");
  double s = j["orientation"].get<double>() < 0 ? -1.0 : 1.0;
  return OrientedCircle(s * co[0].get<double>(),
                        cx(s * co[1].get<double>(), s * co[2].get<double>()),
                        s * co[3].get<double>());
}

json to_json(const DiskFamily& f) {
  json disks = json::array();
  for (size_t i = 0; i < f.size(); ++i) {
    json d = to_json(f.disks[i]);
    d["side"] = "positive";
    d["generation"] = f.generation.size() == f.size() ? f.generation[i] : 0;
    disks.push_back(d);
  }
  json meta{{"style", f.style}, {"depth", f.depth}, {"gap", f.gap}};
  json out{{"schema", kSchema}, {"kind", "disk-family"}, {"disks", disks},
           {"meta", meta}};
  if (std::isfinite(f.delta)) out["delta"] = f.delta;
  return out;
}

DiskFamily family_from_json(const json& j) {
  check_schema(j, "disk-family");
  DiskFamily f;
  for (const auto& d : j.at("disks")) {
    OrientedCircle c = circle_from_json(d);
    if (d.value("side", "positive") == "negative") c = c.reversed();
    f.disks.push_back(c);
    f.generation.push_back(d.value("generation", 0));
  }
  const auto& meta = j.at("meta");
  f.style = meta.value("style", "custom");
  f.depth = meta.value("depth", 0);
  f.gap = meta.value("gap", 0.0);
  f.delta = j.value("delta", std::numeric_limits<double>::infinity());
  return f;
}

json to_json(const LabeledGapSystem& gs) {
  json arcs = json::array();
  for (const auto& a : gs.arcs)
    arcs.push_back({{"label", a.label}, {"start", a.start}, {"length", a.length}});
  json out{{"schema", kSchema},
           {"kind", "gap-system"},
           {"circle", to_json(gs.circle)},
           {"chart", "canonical"},
           {"arcs", arcs}};
  if (gs.whole_circle_label >= 0) out["whole_circle_label"] = gs.whole_circle_label;
  if (!std::isnan(gs.family_delta)) out["family_delta"] = gs.family_delta;
  return out;
}

LabeledGapSystem gaps_from_json(const json& j) {
  check_schema(j, "gap-system");
  LabeledGapSystem gs;
  gs.circle = circle_from_json(j.at("circle"));
  gs.chart = circle_chart(gs.circle);
  for (const auto& a : j.at("arcs"))
    gs.arcs.push_back({a.at("label").get<int>(), a.at("start").get<double>(),
                       a.at("length").get<double>()});
  gs.whole_circle_label = j.value("whole_circle_label", -1);
  gs.family_delta = j.value("family_delta", std::numeric_limits<double>::quiet_NaN());
  validate_gap_system(gs);
  return gs;
}

json to_json(const CantorApprox& ca) {
  json bridges = json::array();
  for (const auto& b : ca.bridges)
    bridges.push_back({{"start", b.start}, {"length", b.length}, {"type", b.type}});
  json residual = json::array();
  for (auto [s, len] : ca.residual) residual.push_back({s, len});
  json out{{"schema", kSchema},
           {"kind", "cantor-approx"},
           {"circle", to_json(ca.circle)},
           {"chart", to_json(ca.chart)},
           {"normalization", to_json(ca.normalization)},
           {"bridges", bridges},
           {"residual", residual},
           {"stop_reason", ca.stop_reason}};
  if (ca.delta_known) out["delta_certified"] = ca.delta_certified;
  return out;
}

CantorApprox cantor_from_json(const json& j) {
  check_schema(j, "cantor-approx");
  CantorApprox ca;
  ca.circle = circle_from_json(j.at("circle"));
  ca.chart = map_from_json(j.at("chart"));
  ca.normalization = map_from_json(j.at("normalization"));
  for (const auto& b : j.at("bridges"))
    ca.bridges.push_back({b.at("start").get<double>(), b.at("length").get<double>(),
                          b.at("type").get<int>()});
  for (const auto& r : j.at("residual"))
    ca.residual.push_back({r[0].get<double>(), r[1].get<double>()});
  ca.stop_reason = j.value("stop_reason", "");
  if (j.contains("delta_certified")) {
    ca.delta_known = true;
    ca.delta_certified = j["delta_certified"].get<double>();
  }
  return ca;
}

json to_json(const ThickSetApprox& t) {
  json iv = json::array();
  for (auto [a, b] : t.intervals) iv.push_back({a, b});
  return json{{"schema", kSchema},
              {"kind", "thick-set"},
              {"intervals", iv},
              {"window", t.window},
              {"resolution", t.resolution}};
}

ThickSetApprox thick_from_json(const json& j) {
  check_schema(j, "thick-set");
  std::vector<std::pair<double, double>> iv;
  for (const auto& p : j.at("intervals"))
    iv.push_back({p[0].get<double>(), p[1].get<double>()});
  return ThickSetApprox(std::move(iv), j.at("window").get<double>(),
                        j.at("resolution").get<double>());
}

json to_json(const GroupGenerators& g) {
  json gens = json::array();
  for (const auto& m : g.gens) gens.push_back(to_json(m));
  json out{{"schema", kSchema}, {"kind", "group"}, {"generators", gens}};
  if (!g.pairing.empty()) {
    json pc = json::array();
    for (const auto& pp : g.pairing)
      pc.push_back({{"from", to_json(pp.from)}, {"to", to_json(pp.to)}});
    out["pairing_circles"] = pc;
  }
  return out;
}

GroupGenerators group_from_json(const json& j) {
  check_schema(j, "group");
  std::vector<MoebiusMap> gens;
  for (const auto& m : j.at("generators")) gens.push_back(map_from_json(m));
  std::vector<PingPongPair> pairing;
  if (j.contains("pairing_circles"))
    for (const auto& pp : j["pairing_circles"])
      pairing.push_back(
          {circle_from_json(pp.at("from")), circle_from_json(pp.at("to"))});
  return GroupGenerators::from_maps(std::move(gens), std::move(pairing));
}

json to_json(const LimitSetApprox& lam) {
  json pts = json::array();
  for (const auto& p : lam.points) pts.push_back(to_json(p));
  return json{{"schema", kSchema},   {"kind", "limit-set"},
              {"method", lam.method}, {"max_len", lam.max_len},
              {"resolution", lam.resolution}, {"points", pts}};
}

LimitSetApprox limit_set_from_json(const json& j) {
  check_schema(j, "limit-set");
  LimitSetApprox lam;
  lam.method = j.value("method", "");
  lam.max_len = j.value("max_len", 0);
  lam.resolution = j.value("resolution", 0.0);
  for (const auto& p : j.at("points")) lam.points.push_back(point_from_json(p));
  expect(!lam.points.empty(), "limit set cloud must be nonempty");
  return lam;
}

json to_json(const Frame& f) {
  return json{{"schema", kSchema}, {"kind", "frame"}, {"matrix", to_json(f.g)}};
}

Frame frame_from_json(const json& j) {
  check_schema(j, "frame");
  return Frame::from_map(map_from_json(j.at("matrix")));
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(errc::io_error, std::string("parse error in ") + path + ": " + e.what());
  }
  return j;
}

void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail(errc::io_error, "cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace ks
