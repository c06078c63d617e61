#include "coverineq/json_io.hpp"

#include <cmath>

namespace coverineq {

json index_set_to_json(const IndexSet& s) {
  json arr = json::array();
  for (int a : s.axes()) arr.push_back(a + 1);
  return arr;
}

IndexSet index_set_from_json(const json& j, int n) {
  std::vector<int> axes;
  for (const auto& e : j) {
    int v = e.get<int>();
    if (v < 1 || v > n) throw std::invalid_argument("index out of range in JSON index set");
    axes.push_back(v - 1);
  }
  return IndexSet::of(n, axes);
}

json cover_to_json(const CoverFamily& c) {
  json j;
  j["n"] = c.base.ground();
  j["base"] = index_set_to_json(c.base);
  json members = json::array();
  for (const auto& m : c.members) members.push_back(index_set_to_json(m));
  j["members"] = members;
  j["s"] = c.multiplicity;
  return j;
}

CoverFamily cover_from_json(const json& j) {
  int n = j.at("n").get<int>();
  IndexSet base = index_set_from_json(j.at("base"), n);
  std::vector<IndexSet> members;
  for (const auto& m : j.at("members")) members.push_back(index_set_from_json(m, n));
  return validate_cover(members, base);
}

json polytope_to_json(const RationalPolytope& p) {
  json j;
  j["dim"] = p.dim();
  json verts = json::array();
  for (const auto& v : p.vertices()) {
    json row = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(v(i).str());
    verts.push_back(row);
  }
  j["vertices"] = verts;
  return j;
}

RationalPolytope polytope_from_json(const json& j) {
  int dim = j.at("dim").get<int>();
  std::vector<VecQ> pts;
  for (const auto& row : j.at("vertices")) {
    VecQ v(dim);
    if (static_cast<int>(row.size()) != dim)
      throw std::invalid_argument("vertex arity does not match dim");
    for (int i = 0; i < dim; ++i) v(i) = Rational::parse(row[i].get<std::string>());
    pts.push_back(std::move(v));
  }
  if (pts.empty()) return RationalPolytope::empty(dim);
  return hull(pts);
}

json logconcave_to_json(const LogConcaveFn& f) {
  json j;
  if (f.is_indicator()) {
    j["family"] = "indicator";
    j["body"] = polytope_to_json(f.as_indicator().body);
    j["height"] = f.as_indicator().height.str();
  } else if (f.is_gaussian()) {
    const auto& g = f.as_gaussian();
    j["family"] = "gaussian";
    j["center"] = std::vector<double>(g.center.data(), g.center.data() + g.center.size());
    j["invcov"] = std::vector<double>(g.invcov.data(), g.invcov.data() + g.invcov.size());
    j["height"] = g.height;
  } else {
    const auto& pl = f.as_pl();
    j["family"] = "exp_concave_pl";
    j["support"] = polytope_to_json(pl.support);
    json pieces = json::array();
    for (const auto& p : pl.pieces) {
      json piece;
      json grad = json::array();
      for (Eigen::Index i = 0; i < p.gradient.size(); ++i) grad.push_back(p.gradient(i).str());
      piece["gradient"] = grad;
      piece["constant"] = p.constant.str();
      pieces.push_back(piece);
    }
    j["pieces"] = pieces;
  }
  return j;
}

LogConcaveFn logconcave_from_json(const json& j) {
  std::string family = j.at("family").get<std::string>();
  if (family == "indicator") {
    return LogConcaveFn::indicator(polytope_from_json(j.at("body")),
                                   Rational::parse(j.at("height").get<std::string>()));
  }
  if (family == "gaussian") {
    auto center = j.at("center").get<std::vector<double>>();
    auto invcov = j.at("invcov").get<std::vector<double>>();
    VecD c(center.size()), q(invcov.size());
    for (size_t i = 0; i < center.size(); ++i) c(i) = center[i];
    for (size_t i = 0; i < invcov.size(); ++i) q(i) = invcov[i];
    return LogConcaveFn::gaussian(c, q, j.at("height").get<double>());
  }
  if (family == "exp_concave_pl") {
    RationalPolytope support = polytope_from_json(j.at("support"));
    std::vector<AffinePiece> pieces;
    for (const auto& piece : j.at("pieces")) {
      AffinePiece p;
      const auto& grad = piece.at("gradient");
      p.gradient = VecQ(static_cast<Eigen::Index>(grad.size()));
      for (size_t i = 0; i < grad.size(); ++i)
        p.gradient(i) = Rational::parse(grad[i].get<std::string>());
      p.constant = Rational::parse(piece.at("constant").get<std::string>());
      pieces.push_back(std::move(p));
    }
    return LogConcaveFn::exp_concave_pl(std::move(support), std::move(pieces));
  }
  throw std::invalid_argument("unknown log-concave family '" + family + "'");
}

json value_to_json(const Value& v) {
  if (v.is_exact()) return v.rational().frac_str();
  if (!v.is_finite()) return "inf";
  return v.to_double();
}

json report_to_json(const InequalityReport& r) {
  json j;
  j["id"] = r.id;
  j["exact"] = r.exact;
  j["lhs"] = value_to_json(r.lhs);
  j["rhs"] = value_to_json(r.rhs);
  j["ratio"] = value_to_json(r.ratio);
  j["constant"] = r.constant.frac_str();
  j["tolerance"] = r.tolerance;
  j["equality"] = r.equality;
  j["holds"] = r.holds;
  json w;
  if (r.cover) w["cover"] = cover_to_json(*r.cover);
  if (!r.induced.empty()) {
    json blocks = json::array();
    for (const auto& b : r.induced) blocks.push_back(index_set_to_json(b));
    w["induced_one_cover"] = blocks;
  }
  if (r.anchor) {
    json a = json::array();
    for (Eigen::Index i = 0; i < r.anchor->size(); ++i) a.push_back((*r.anchor)(i).str());
    w["anchor"] = a;
  }
  if (!r.notes.empty()) w["notes"] = r.notes;
  j["witnesses"] = w;
  return j;
}

}  // namespace coverineq
