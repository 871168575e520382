#include "wonderful/reports.hpp"

#include <sstream>

namespace wonderful {

namespace {

Json int_vec(const IntVec& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Json rat_vec(const RatVec& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i).str());
  return a;
}

Json int_mat(const IntMat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

Json word_json(const WeylElement& w) {
  Json a = Json::array();
  for (std::int8_t g : w.word) a.push_back(static_cast<int>(g) + 1);
  return a;
}

Json poly_json(const Polynomial& p) {
  Json a = Json::array();
  for (int d = 0; d <= p.degree(); ++d) {
    if (p.coeff(static_cast<std::size_t>(d)) == 0) continue;
    a.push_back(Json{{"degree", d}, {"coefficient", p.coeff(static_cast<std::size_t>(d))}});
  }
  return a;
}

}  // namespace

Json orbit_poset_report(const RootSystem& rs, const OrbitPoset& poset) {
  Json j;
  j["report"] = "orbit_poset";
  j["type"] = rs.ctype().name();
  j["rank"] = rs.rank();
  j["positive_roots"] = rs.positiveCount();
  j["dim_group"] = rs.dimG();
  j["orbit_count"] = poset.nodes.size();
  Json nodes = Json::array();
  for (const OrbitDatum& d : poset.nodes) {
    Json n;
    n["subset"] = d.I;
    n["delta"] = d.deltaI;
    n["phi_count"] = d.phiICount;
    n["dim_levi"] = d.dimLevi;
    n["dim_unipotent"] = d.dimUnipotent;
    n["dim_parabolic"] = d.dimParabolic;
    n["dim_flag"] = d.dimFlag;
    n["dim_fiber"] = d.dimFiber;
    n["dim_orbit"] = d.dimOrbit;
    n["dim_stabilizer"] = d.dimStabilizer;
    nodes.push_back(std::move(n));
  }
  j["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (const auto& [a, b] : poset.hasse) edges.push_back(Json{{"from", a}, {"to", b}});
  j["edges"] = std::move(edges);
  return j;
}

Json betti_report(const RootSystem& rs, const WeylGroup& W) {
  Polynomial p = poincare_polynomial_X(rs, W);
  Json j;
  j["report"] = "betti_table";
  j["type"] = rs.ctype().name();
  j["dim_group"] = rs.dimG();
  j["weyl_order"] = W.size();
  j["total"] = p.evaluate_at_one();
  j["betti"] = poly_json(p);
  return j;
}

Json fixed_points_report(const RootSystem& rs, const WeylGroup& W) {
  OneParamChoice choice = choose_one_param(rs, W);
  Json j;
  j["report"] = "fixed_points";
  j["type"] = rs.ctype().name();
  j["weyl_order"] = W.size();
  j["fixed_point_count"] = W.size() * W.size();
  j["one_param"] = Json{{"n", choice.n}, {"H", rat_vec(choice.H.c)}};
  Json pts = Json::array();
  for (std::size_t y = 0; y < W.size(); ++y)
    for (std::size_t w = 0; w < W.size(); ++w) {
      Json p;
      p["y"] = y;
      p["w"] = w;
      p["y_word"] = word_json(W[y]);
      p["w_word"] = word_json(W[w]);
      p["cell_dim"] = cell_dimension(rs, W, choice, y, w);
      pts.push_back(std::move(p));
    }
  j["points"] = std::move(pts);
  return j;
}

Json fan_report(const RootSystem& rs, const Fan& fan, int samples, std::uint64_t seed) {
  Json j;
  j["report"] = "fan";
  j["type"] = rs.ctype().name();
  j["dim"] = fan.dim;
  j["ray_count"] = fan.rays.size();
  j["cone_count"] = fan.cones.size();
  Json rays = Json::array();
  for (const IntVec& r : fan.rays) rays.push_back(int_vec(r));
  j["rays"] = std::move(rays);
  Json cones = Json::array();
  for (const Cone& c : fan.cones)
    cones.push_back(Json{{"weyl_index", c.wIndex}, {"ray_indices", c.rayIndices}});
  j["cones"] = std::move(cones);
  j["smooth"] = check_smooth(fan);
  j["complete"] = Json{{"samples", samples},
                       {"seed", seed},
                       {"ok", check_complete(fan, samples, seed)}};
  return j;
}

Json satake_report(const RootSystem& rs, const SatakeDiagram& sd, const Involution& inv) {
  RestrictedRootSystem rrs = restricted_roots(rs, inv);
  LittleWeylGroup wa = little_weyl_group(rrs);
  SymmetricOrbits orbits = symmetric_orbit_count(rrs, wa);

  Json j;
  j["report"] = "satake";
  j["type"] = rs.ctype().name();
  Json arrows = Json::array();
  for (const auto& [a, b] : sd.arrows) arrows.push_back(Json::array({a, b}));
  j["diagram"] = Json{{"black", sd.black}, {"arrows", std::move(arrows)}};
  j["involution"] = int_mat(inv.matrix);
  Json imag = Json::array();
  for (const RootVector& v : imaginary_roots(rs, inv)) imag.push_back(int_vec(v.c));
  j["imaginary_roots"] = std::move(imag);
  j["split_rank"] = rrs.splitRank;
  Json simples = Json::array();
  for (const RatVec& v : rrs.simplesAmbient) simples.push_back(rat_vec(v));
  j["restricted_simples_ambient"] = std::move(simples);
  Json roots = Json::array();
  for (const RestrictedRoot& rr : rrs.roots)
    roots.push_back(Json{{"coords", int_vec(rr.coords)}, {"multiplicity", rr.multiplicity}});
  j["restricted_roots"] = std::move(roots);
  j["reduced"] = rrs.reduced;
  j["little_weyl_order"] = wa.order();
  j["orbit_count"] = orbits.orbitCount;
  Json subsets = Json::array();
  for (const auto& s : orbits.subsets) subsets.push_back(s);
  j["orbit_subsets"] = std::move(subsets);
  Json fanRays = Json::array();
  for (const IntVec& r : orbits.restrictedFan.rays) fanRays.push_back(int_vec(r));
  Json fanCones = Json::array();
  for (const Cone& c : orbits.restrictedFan.cones)
    fanCones.push_back(Json{{"weyl_index", c.wIndex}, {"ray_indices", c.rayIndices}});
  j["restricted_fan"] = Json{{"rays", std::move(fanRays)}, {"cones", std::move(fanCones)}};
  return j;
}

Json realization_report(const RootSystem& rs, bool includeWedge) {
  ChevalleyAlgebra alg = ChevalleyAlgebra::build(rs);
  const int l = rs.rank();

  Json checks = Json::array();
  auto push = [&](const std::string& claim, const std::string& computed,
                  const std::string& expected) {
    checks.push_back(Json{{"claim", claim},
                          {"computed", computed},
                          {"expected", expected},
                          {"pass", computed == expected}});
  };

  push("algebra dimension", std::to_string(alg.dim()), std::to_string(rs.dimG()));

  std::vector<std::vector<int>> subsets;
  for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < l; ++i)
      if (mask & (1u << i)) s.push_back(i + 1);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  auto subsetName = [](const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(s[k]);
    }
    return out + "}";
  };

  for (const auto& s : subsets) {
    RatMat p = z_matrix(alg, s);
    bool idem = projectively_equal(p * p, p) && exact_eq(RatMat(p * p), p);
    push("z_matrix(" + subsetName(s) + ") idempotent", idem ? "yes" : "no", "yes");
    if (s.empty())
      push("z_matrix({}) is the identity",
           exact_eq(p, RatMat(toRational(IntMat(IntMat::Identity(alg.dim(), alg.dim()))))) ? "yes"
                                                                                           : "no",
           "yes");
    Int stab = stabilizer_lie_dim(alg, s);
    push("stabilizer dimension for I=" + subsetName(s), std::to_string(stab),
         std::to_string(rs.dimG() + static_cast<Int>(s.size())));
    build_mI(alg, s);  // aborts on failure
    push("m_I closed of dimension dimG for I=" + subsetName(s), "yes", "yes");
  }

  if (includeWedge) {
    PlueckerReport pr = pluecker_limit(alg);
    for (const RealizationCheck& c : pr.checks) push(c.claim, c.computed, c.expected);
  }

  bool all = true;
  for (const auto& c : checks) all = all && c.at("pass").get<bool>();

  Json j;
  j["report"] = "realization";
  j["type"] = rs.ctype().name();
  j["wedge_included"] = includeWedge;
  j["all_pass"] = all;
  j["checks"] = std::move(checks);
  return j;
}

// ---------------------------------------------------------------------------
// CSV and text renderings.

namespace {

std::string join_ints(const Json& arr, char sep = ' ') {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : arr) {
    if (!first) os << sep;
    first = false;
    os << v.get<Int>();
  }
  return os.str();
}

}  // namespace

std::string orbit_poset_csv(const Json& r) {
  std::ostringstream os;
  os << "subset,dim_orbit,dim_stabilizer,dim_flag,dim_fiber,dim_levi,dim_unipotent\n";
  for (const auto& n : r.at("nodes"))
    os << "\"" << join_ints(n.at("subset")) << "\"," << n.at("dim_orbit").get<Int>() << ","
       << n.at("dim_stabilizer").get<Int>() << "," << n.at("dim_flag").get<Int>() << ","
       << n.at("dim_fiber").get<Int>() << "," << n.at("dim_levi").get<Int>() << ","
       << n.at("dim_unipotent").get<Int>() << "\n";
  return os.str();
}

std::string betti_csv(const Json& r) {
  std::ostringstream os;
  os << "degree,coefficient\n";
  for (const auto& row : r.at("betti"))
    os << row.at("degree").get<Int>() << "," << row.at("coefficient").get<Int>() << "\n";
  return os.str();
}

std::string fixed_points_csv(const Json& r) {
  std::ostringstream os;
  os << "y,w,y_word,w_word,cell_dim\n";
  for (const auto& p : r.at("points"))
    os << p.at("y").get<Int>() << "," << p.at("w").get<Int>() << ",\""
       << join_ints(p.at("y_word")) << "\",\"" << join_ints(p.at("w_word")) << "\","
       << p.at("cell_dim").get<Int>() << "\n";
  return os.str();
}

std::string fan_csv(const Json& r) {
  std::ostringstream os;
  os << "cone,ray_indices\n";
  for (const auto& c : r.at("cones"))
    os << c.at("weyl_index").get<Int>() << ",\"" << join_ints(c.at("ray_indices")) << "\"\n";
  return os.str();
}

std::string satake_csv(const Json& r) {
  std::ostringstream os;
  os << "restricted_root,multiplicity\n";
  for (const auto& row : r.at("restricted_roots"))
    os << "\"" << join_ints(row.at("coords")) << "\"," << row.at("multiplicity").get<Int>() << "\n";
  return os.str();
}

std::string realization_csv(const Json& r) {
  std::ostringstream os;
  os << "claim,computed,expected,pass\n";
  for (const auto& c : r.at("checks"))
    os << "\"" << c.at("claim").get<std::string>() << "\",\""
       << c.at("computed").get<std::string>() << "\",\"" << c.at("expected").get<std::string>()
       << "\"," << (c.at("pass").get<bool>() ? "true" : "false") << "\n";
  return os.str();
}

std::string orbit_poset_text(const Json& r) {
  std::ostringstream os;
  os << "orbit lattice of " << r.at("type").get<std::string>() << ": "
     << r.at("orbit_count").get<Int>() << " orbits, ambient dimension " << r.at("dim_group").get<Int>()
     << "\n";
  for (const auto& n : r.at("nodes"))
    os << "  I={" << join_ints(n.at("subset"), ',') << "}  dim " << n.at("dim_orbit").get<Int>()
       << "  stabilizer " << n.at("dim_stabilizer").get<Int>() << "  flag "
       << n.at("dim_flag").get<Int>() << "  fiber " << n.at("dim_fiber").get<Int>() << "\n";
  os << "  covering edges: " << r.at("edges").size() << "\n";
  return os.str();
}

std::string betti_text(const Json& r) {
  std::ostringstream os;
  os << "Betti table of " << r.at("type").get<std::string>() << " (dim "
     << r.at("dim_group").get<Int>() << ", |W| = " << r.at("weyl_order").get<Int>() << ")\n";
  for (const auto& row : r.at("betti"))
    os << "  b_" << row.at("degree").get<Int>() << " = " << row.at("coefficient").get<Int>()
       << "\n";
  os << "  total = " << r.at("total").get<Int>() << "\n";
  return os.str();
}

std::string fixed_points_text(const Json& r) {
  std::ostringstream os;
  os << r.at("fixed_point_count").get<Int>() << " torus fixed points of "
     << r.at("type").get<std::string>() << " (n = " << r.at("one_param").at("n").get<Int>()
     << ")\n";
  for (const auto& p : r.at("points"))
    os << "  y=[" << join_ints(p.at("y_word"), ' ') << "] w=[" << join_ints(p.at("w_word"), ' ')
       << "] cell " << p.at("cell_dim").get<Int>() << "\n";
  return os.str();
}

std::string fan_text(const Json& r) {
  std::ostringstream os;
  os << "chamber fan of " << r.at("type").get<std::string>() << ": "
     << r.at("cone_count").get<Int>() << " cones, " << r.at("ray_count").get<Int>() << " rays, "
     << (r.at("smooth").get<bool>() ? "smooth" : "NOT smooth") << ", completeness sampling "
     << (r.at("complete").at("ok").get<bool>() ? "ok" : "FAILED") << " ("
     << r.at("complete").at("samples").get<Int>() << " samples, seed "
     << r.at("complete").at("seed").get<Int>() << ")\n";
  return os.str();
}

std::string satake_text(const Json& r) {
  std::ostringstream os;
  os << "Satake data on " << r.at("type").get<std::string>() << ": split rank "
     << r.at("split_rank").get<Int>() << ", "
     << (r.at("reduced").get<bool>() ? "reduced" : "non-reduced") << ", little Weyl order "
     << r.at("little_weyl_order").get<Int>() << ", " << r.at("orbit_count").get<Int>()
     << " orbit closures\n";
  for (const auto& row : r.at("restricted_roots"))
    os << "  root (" << join_ints(row.at("coords"), ',') << ") mult "
       << row.at("multiplicity").get<Int>() << "\n";
  return os.str();
}

std::string realization_text(const Json& r) {
  std::ostringstream os;
  os << "matrix realization checks for " << r.at("type").get<std::string>() << ": "
     << (r.at("all_pass").get<bool>() ? "all pass" : "FAILURES") << "\n";
  for (const auto& c : r.at("checks"))
    os << "  [" << (c.at("pass").get<bool>() ? "ok" : "FAIL") << "] "
       << c.at("claim").get<std::string>() << ": " << c.at("computed").get<std::string>() << "\n";
  return os.str();
}

}  // namespace wonderful
